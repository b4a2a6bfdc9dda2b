//! Billiards on triangular-grid polygons.
//!
//! Beams leave every boundary pane of a [`GridPolygon`] at 60° and bounce
//! between pane midpoints; the resulting [`BilliardsPermutation`] is checked
//! against the trip permutation of the polygon's dual [`PlabicGraph`], and
//! exhaustive polyiamond enumeration drives the extremal inequalities
//! relating area, perimeter and the number of beam cycles.

pub mod billiards;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod grid;
pub mod perm;
pub mod plabic;
pub mod polygon;
pub mod render;

pub use billiards::{BilliardsSystem, Trajectory};
pub use grid::{Cell, DPoint, Direction, Orient, Pane, PaneType, Symmetry, Vertex};
pub use perm::BilliardsPermutation;
pub use polygon::{GridPolygon, Mode};
pub use plabic::{Color, PlabicGraph};
pub use enumerate::{enumerate_polyiamonds, verify_suite, VerificationReport};
pub use render::{render_svg, RenderOptions};
