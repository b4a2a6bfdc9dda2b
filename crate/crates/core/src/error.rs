use thiserror::Error;

use crate::grid::{Cell, Pane, Vertex};

/// Reasons a cell set is not a grid polygon.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("no cells given")]
    EmptyInput,
    #[error("cells are not edge-connected: {components} components, {unreachable} not reachable from {seed}")]
    Disconnected {
        seed: Cell,
        unreachable: Cell,
        components: usize,
    },
    #[error("boundary touches itself at vertex {vertex}")]
    PinchPoint { vertex: Vertex },
    #[error("region has a hole (V - E + F = {euler}, expected 1)")]
    HasHole { euler: i64 },
    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("{pane} is not a boundary pane of the {which} polygon")]
    NotBoundary { pane: Pane, which: &'static str },
    #[error("placed polygons overlap: {cells} shared cells, {panes} shared panes")]
    Overlap { cells: usize, panes: usize },
    #[error("glued region is not a grid polygon: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BilliardsError {
    #[error("{0} is not a boundary pane")]
    NotBoundary(Pane),
    #[error("beam tracing left the polygon: {0}")]
    Consistency(String),
    #[error("segments of distinct trajectories overlap collinearly")]
    CollinearOverlap,
    #[error("shorelines need a cycle of size at least 4, got {0}")]
    CycleTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlabicError {
    #[error("vertex {vertex} has {degree} edges, expected 3")]
    NonTrivalent { vertex: usize, degree: usize },
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("trip from boundary point {start} did not terminate")]
    InfiniteTrip { start: usize },
    #[error("boundary index {0} out of range")]
    BadBoundaryIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("pieces do not meet in exactly the listed panes: {0}")]
    BadDecomposition(String),
}
