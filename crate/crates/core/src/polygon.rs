//! Validated grid polygons.
//!
//! A [`GridPolygon`] is a nonempty, edge-connected, simply connected set of
//! cells whose boundary is a simple closed curve. The boundary is stored as a
//! clockwise list of panes starting at the smallest boundary pane.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{GlueError, ValidationError};
use crate::grid::{Cell, Orient, Pane, Symmetry, Transform, Vertex};

/// Equivalence used for canonical forms and enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Up to translation.
    Fixed,
    /// Up to translation and the 12 point symmetries.
    Free,
}

#[derive(Clone, Debug)]
pub struct GridPolygon {
    cells: Vec<Cell>,
    boundary: Vec<Pane>,
    /// `corners[k]` is the vertex where `boundary[k]` starts in the clockwise walk.
    corners: Vec<Vertex>,
    boundary_pos: HashMap<Pane, usize>,
}

impl PartialEq for GridPolygon {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for GridPolygon {}

impl PartialOrd for GridPolygon {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridPolygon {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cells.cmp(&other.cells)
    }
}

/// Start and end of the side `pane` of `cell` when walking clockwise around
/// the cell.
fn clockwise_side(cell: Cell, pane: Pane) -> (Vertex, Vertex) {
    let (x, y) = pane.endpoints();
    let first = match cell.orient {
        // U: left side goes up, right side goes down, bottom goes west
        Orient::U => match pane.ptype {
            crate::grid::PaneType::H => y,
            crate::grid::PaneType::R => x,
            crate::grid::PaneType::L => y,
        },
        // D: top goes east, right side goes down, left side goes up
        Orient::D => match pane.ptype {
            crate::grid::PaneType::H => x,
            crate::grid::PaneType::R => y,
            crate::grid::PaneType::L => x,
        },
    };
    if first == x {
        (x, y)
    } else {
        (y, x)
    }
}

impl GridPolygon {
    /// Validate a cell set and compute its clockwise boundary.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self, ValidationError> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(ValidationError::DuplicateCell(w[0]));
        }
        if cells.is_empty() {
            return Err(ValidationError::EmptyInput);
        }
        let member = |c: &Cell| cells.binary_search(c).is_ok();

        // edge connectivity
        let mut seen = vec![false; cells.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(k) = queue.pop_front() {
            for nb in cells[k].neighbors() {
                if let Ok(idx) = cells.binary_search(&nb) {
                    if !seen[idx] {
                        seen[idx] = true;
                        reached += 1;
                        queue.push_back(idx);
                    }
                }
            }
        }
        if reached < cells.len() {
            let unreachable = cells[seen.iter().position(|s| !s).unwrap()];
            return Err(ValidationError::Disconnected {
                seed: cells[0],
                unreachable,
                components: count_components(&cells),
            });
        }

        // vertex fans
        let vertices: BTreeSet<Vertex> = cells.iter().flat_map(|c| c.vertices()).collect();
        for &v in &vertices {
            let present = v.incident_cells().map(|c| member(&c));
            let runs = (0..6).filter(|&k| present[k] && !present[(k + 5) % 6]).count();
            if runs > 1 {
                return Err(ValidationError::PinchPoint { vertex: v });
            }
        }

        let panes: HashSet<Pane> = cells.iter().flat_map(|c| c.panes()).collect();
        let euler = vertices.len() as i64 - panes.len() as i64 + cells.len() as i64;
        if euler != 1 {
            return Err(ValidationError::HasHole { euler });
        }

        // boundary walk
        let mut outgoing: HashMap<Vertex, (Pane, Vertex)> = HashMap::new();
        let mut start: Option<Pane> = None;
        for &c in &cells {
            for p in c.panes() {
                if !member(&p.other_cell(c)) {
                    let (from, to) = clockwise_side(c, p);
                    let prev = outgoing.insert(from, (p, to));
                    debug_assert!(prev.is_none(), "two boundary edges leave {from}");
                    start = Some(start.map_or(p, |s| s.min(p)));
                }
            }
        }
        let start = start.expect("a finite region has boundary");
        let boundary_len = outgoing.len();
        let mut boundary = Vec::with_capacity(boundary_len);
        let mut corners = Vec::with_capacity(boundary_len);
        let mut at = outgoing
            .iter()
            .find(|(_, (p, _))| *p == start)
            .map(|(v, _)| *v)
            .unwrap();
        loop {
            let (p, to) = outgoing[&at];
            boundary.push(p);
            corners.push(at);
            at = to;
            if p == start && boundary.len() > 1 {
                boundary.pop();
                corners.pop();
                break;
            }
            if boundary.len() > boundary_len {
                break;
            }
        }
        if boundary.len() != boundary_len {
            // unreachable for a connected, pinch-free region with V - E + F = 1
            return Err(ValidationError::HasHole { euler });
        }
        let boundary_pos = boundary.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Ok(GridPolygon {
            cells,
            boundary,
            corners,
            boundary_pos,
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.binary_search(cell).is_ok()
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn perim(&self) -> usize {
        self.boundary.len()
    }

    /// Boundary panes `b_1, …, b_n` (0-based here), clockwise.
    pub fn boundary(&self) -> &[Pane] {
        &self.boundary
    }

    /// Vertex where boundary pane `k` starts; it ends at `corner(k + 1)`.
    pub fn corner(&self, k: usize) -> Vertex {
        self.corners[k % self.corners.len()]
    }

    pub fn corners(&self) -> &[Vertex] {
        &self.corners
    }

    pub fn boundary_index(&self, pane: &Pane) -> Option<usize> {
        self.boundary_pos.get(pane).copied()
    }

    /// The unique cell of the polygon bordering boundary pane `k`.
    pub fn interior_cell(&self, k: usize) -> Cell {
        let (u, d) = self.boundary[k].cells();
        if self.contains(&u) {
            u
        } else {
            d
        }
    }

    /// Number of member cells incident to `v`; the interior angle there is
    /// 60° times this.
    pub fn cells_at(&self, v: Vertex) -> usize {
        v.incident_cells().iter().filter(|c| self.contains(c)).count()
    }

    pub fn interior_panes(&self) -> BTreeSet<Pane> {
        self.cells
            .iter()
            .flat_map(|c| c.panes())
            .filter(|p| {
                let (u, d) = p.cells();
                self.contains(&u) && self.contains(&d)
            })
            .collect()
    }

    /// Interior panes whose two endpoints lie on the boundary. Cutting along
    /// any of them splits the polygon into two grid polygons.
    pub fn cut_panes(&self) -> BTreeSet<Pane> {
        let on_boundary: HashSet<Vertex> = self.corners.iter().copied().collect();
        self.interior_panes()
            .into_iter()
            .filter(|p| {
                let (x, y) = p.endpoints();
                on_boundary.contains(&x) && on_boundary.contains(&y)
            })
            .collect()
    }

    pub fn is_primitive(&self) -> bool {
        self.cut_panes().is_empty()
    }

    /// Split along a cut pane into `(U-side piece, D-side piece)`.
    pub fn split_along(&self, pane: Pane) -> Option<(GridPolygon, GridPolygon)> {
        let (u, d) = pane.cells();
        if !self.contains(&u) || !self.contains(&d) {
            return None;
        }
        let mut side: HashSet<Cell> = HashSet::from([u]);
        let mut queue = VecDeque::from([u]);
        while let Some(c) = queue.pop_front() {
            for p in c.panes() {
                if p == pane {
                    continue;
                }
                let nb = p.other_cell(c);
                if self.contains(&nb) && side.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        if side.contains(&d) {
            return None;
        }
        let rest: Vec<Cell> = self.cells.iter().filter(|c| !side.contains(c)).copied().collect();
        let first = GridPolygon::from_cells(side).ok()?;
        let second = GridPolygon::from_cells(rest).ok()?;
        Some((first, second))
    }

    /// Fully cut along cut panes. Pieces are returned in free canonical form,
    /// sorted, so the result does not depend on the order of cuts.
    pub fn primitive_pieces(&self) -> Vec<GridPolygon> {
        let mut done = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(p) = stack.pop() {
            match p.cut_panes().into_iter().next() {
                None => done.push(p.canonical_form(Mode::Free)),
                Some(cut) => {
                    let (a, b) = p.split_along(cut).expect("cut panes split into polygons");
                    stack.push(a);
                    stack.push(b);
                }
            }
        }
        done.sort();
        done
    }

    pub fn is_unit_hexagon(&self) -> bool {
        self.area() == 6 && self.perim() == 6
    }

    /// Every primitive piece is a unit hexagon.
    pub fn is_tree_of_unit_hexagons(&self) -> bool {
        self.area().is_multiple_of(6) && self.primitive_pieces().iter().all(GridPolygon::is_unit_hexagon)
    }

    pub fn transformed(&self, g: &Symmetry) -> GridPolygon {
        GridPolygon::from_cells(self.cells.iter().map(|c| c.transformed(g)))
            .expect("symmetries preserve validity")
    }

    pub fn canonical_cells(&self, mode: Mode) -> Vec<Cell> {
        canonical_cells(&self.cells, mode)
    }

    pub fn canonical_form(&self, mode: Mode) -> GridPolygon {
        let cells = self.canonical_cells(mode);
        if cells == self.cells {
            return self.clone();
        }
        GridPolygon::from_cells(cells).expect("symmetries preserve validity")
    }

    pub fn is_congruent(&self, other: &GridPolygon) -> bool {
        self.area() == other.area()
            && self.perim() == other.perim()
            && self.canonical_cells(Mode::Free) == other.canonical_cells(Mode::Free)
    }

    /// Short stable hex digest of the canonical cell list.
    pub fn shape_hash(&self, mode: Mode) -> String {
        let mut hasher = Sha256::new();
        for c in self.canonical_cells(mode) {
            let o = if c.orient == Orient::U { 'U' } else { 'D' };
            hasher.update(format!("{},{},{};", c.i, c.j, o).as_bytes());
        }
        hasher
            .finalize()
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Number of distinct images of this shape under the 12 point symmetries
    /// (up to translation).
    pub fn orbit_size(&self) -> usize {
        let images: HashSet<Vec<Cell>> = Symmetry::point_group()
            .iter()
            .map(|g| {
                let moved: Vec<Cell> = self.cells.iter().map(|c| c.transformed(g)).collect();
                canonical_cells(&moved, Mode::Fixed)
            })
            .collect();
        images.len()
    }

    pub fn to_file(&self) -> PolygonFile {
        PolygonFile {
            cells: self.cells.iter().map(|c| (c.i, c.j, c.orient)).collect(),
        }
    }
}

impl fmt::Display for GridPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

fn count_components(cells: &[Cell]) -> usize {
    let mut seen: HashSet<Cell> = HashSet::new();
    let mut components = 0;
    for &c in cells {
        if !seen.insert(c) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([c]);
        while let Some(x) = queue.pop_front() {
            for nb in x.neighbors() {
                if cells.binary_search(&nb).is_ok() && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
    }
    components
}

/// Sorted cells translated so that the smallest cell sits at `(0, 0)`.
fn normalize_fixed(mut cells: Vec<Cell>) -> Vec<Cell> {
    cells.sort_unstable();
    if let Some(first) = cells.first().copied() {
        for c in &mut cells {
            c.i -= first.i;
            c.j -= first.j;
        }
    }
    cells
}

/// Canonical representative of a cell set (not necessarily valid) under
/// translations (`Fixed`) or the full symmetry group (`Free`).
pub fn canonical_cells(cells: &[Cell], mode: Mode) -> Vec<Cell> {
    match mode {
        Mode::Fixed => normalize_fixed(cells.to_vec()),
        Mode::Free => Symmetry::point_group()
            .iter()
            .map(|g| normalize_fixed(cells.iter().map(|c| c.transformed(g)).collect()))
            .min()
            .expect("point group is nonempty"),
    }
}

/// Attach `second` to `first` so that boundary pane `pane2` of `second` lands
/// on boundary pane `pane1` of `first`, the two interiors on opposite sides.
/// A rotation is used when one exists, otherwise a reflection.
pub fn glue(
    first: &GridPolygon,
    pane1: Pane,
    second: &GridPolygon,
    pane2: Pane,
) -> Result<GridPolygon, GlueError> {
    let k1 = first
        .boundary_index(&pane1)
        .ok_or(GlueError::NotBoundary { pane: pane1, which: "first" })?;
    let k2 = second
        .boundary_index(&pane2)
        .ok_or(GlueError::NotBoundary { pane: pane2, which: "second" })?;
    let inside1 = first.interior_cell(k1);
    let target = pane1.other_cell(inside1);
    let inside2 = second.interior_cell(k2);

    let mut candidates: Vec<Symmetry> = Symmetry::point_group()
        .iter()
        .filter_map(|g| {
            let img = pane2.transformed(g);
            if img.ptype != pane1.ptype {
                return None;
            }
            let (m1, m2) = (pane1.midpoint(), img.midpoint());
            let (da, db) = (m1.a - m2.a, m1.b - m2.b);
            let placed = g.then_translate(da / 2, db / 2);
            (pane2.transformed(&placed) == pane1 && inside2.transformed(&placed) == target)
                .then_some(placed)
        })
        .collect();
    candidates.sort_by_key(|g| !g.is_orientation_preserving());
    let placed = *candidates.first().expect("some symmetry always matches two panes");

    let moved: Vec<Cell> = second.cells().iter().map(|c| c.transformed(&placed)).collect();
    let shared_cells = moved.iter().filter(|c| first.contains(c)).count();
    let moved_boundary: HashSet<Pane> = second.boundary().iter().map(|p| p.transformed(&placed)).collect();
    let shared_panes = first.boundary().iter().filter(|p| moved_boundary.contains(p)).count();
    if shared_cells > 0 || shared_panes != 1 {
        return Err(GlueError::Overlap {
            cells: shared_cells,
            panes: shared_panes,
        });
    }
    let union = first.cells().iter().copied().chain(moved);
    Ok(GridPolygon::from_cells(union)?)
}

/// On-disk polygon description: `{"cells": [[i, j, "U"|"D"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub cells: Vec<(i32, i32, Orient)>,
}

#[derive(Debug, thiserror::Error)]
pub enum PolygonFileError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

impl PolygonFile {
    pub fn parse(text: &str) -> Result<PolygonFile, PolygonFileError> {
        serde_json::from_str(text).map_err(|e| PolygonFileError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_polygon(&self) -> Result<GridPolygon, ValidationError> {
        GridPolygon::from_cells(self.cells.iter().map(|&(i, j, o)| Cell::new(i, j, o)))
    }

    pub fn to_json(&self) -> String {
        let cells: Vec<String> = self
            .cells
            .iter()
            .map(|(i, j, o)| format!("[{i}, {j}, \"{o:?}\"]"))
            .collect();
        format!("{{\"cells\": [{}]}}\n", cells.join(", "))
    }
}

/// Parse and validate a polygon document.
pub fn parse_polygon(text: &str) -> Result<GridPolygon, PolygonFileError> {
    Ok(PolygonFile::parse(text)?.to_polygon()?)
}
