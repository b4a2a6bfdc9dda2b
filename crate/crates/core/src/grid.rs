//! Exact lattice geometry on the triangular grid.
//!
//! Lattice points are `p(i, j) = i·e1 + j·e2` with `e1 = (1, 0)` and
//! `e2 = (1/2, √3/2)`. Everything that is not a lattice vertex (pane
//! midpoints, chord crossings) lives in the doubled lattice, see [`DPoint`].

use std::fmt;

use serde::{Deserialize, Serialize};

/// A point in doubled lattice coordinates: `(a/2)·e1 + (b/2)·e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DPoint {
    pub a: i32,
    pub b: i32,
}

impl DPoint {
    pub const fn new(a: i32, b: i32) -> Self {
        DPoint { a, b }
    }

    /// Cartesian coordinates `(a/2 + b/4, b·√3/4)`. Only used for drawing.
    pub fn to_cartesian(self) -> (f64, f64) {
        let a = f64::from(self.a);
        let b = f64::from(self.b);
        (a / 2.0 + b / 4.0, b * 3f64.sqrt() / 4.0)
    }

    pub fn minus(self, other: DPoint) -> (i64, i64) {
        (
            i64::from(self.a) - i64::from(other.a),
            i64::from(self.b) - i64::from(other.b),
        )
    }
}

impl fmt::Display for DPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DPoint({}, {})", self.a, self.b)
    }
}

/// A lattice vertex `p(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub i: i32,
    pub j: i32,
}

impl Vertex {
    pub const fn new(i: i32, j: i32) -> Self {
        Vertex { i, j }
    }

    pub fn to_dpoint(self) -> DPoint {
        DPoint::new(2 * self.i, 2 * self.j)
    }

    /// The six cells around this vertex, counterclockwise starting from the
    /// sector between the E and NE rays.
    pub fn incident_cells(self) -> [Cell; 6] {
        let Vertex { i, j } = self;
        [
            Cell::up(i, j),
            Cell::down(i - 1, j),
            Cell::up(i - 1, j),
            Cell::down(i - 1, j - 1),
            Cell::up(i, j - 1),
            Cell::down(i, j - 1),
        ]
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p({},{})", self.i, self.j)
    }
}

/// Right-side up (`U`) or upside down (`D`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    U,
    D,
}

/// A triangular grid cell.
///
/// `U(i,j)` has vertices `p(i,j), p(i+1,j), p(i,j+1)`;
/// `D(i,j)` has vertices `p(i+1,j), p(i,j+1), p(i+1,j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: i32,
    pub j: i32,
    pub orient: Orient,
}

impl Cell {
    pub const fn new(i: i32, j: i32, orient: Orient) -> Self {
        Cell { i, j, orient }
    }

    pub const fn up(i: i32, j: i32) -> Self {
        Cell::new(i, j, Orient::U)
    }

    pub const fn down(i: i32, j: i32) -> Self {
        Cell::new(i, j, Orient::D)
    }

    pub fn vertices(self) -> [Vertex; 3] {
        let Cell { i, j, orient } = self;
        match orient {
            Orient::U => [Vertex::new(i, j), Vertex::new(i + 1, j), Vertex::new(i, j + 1)],
            Orient::D => [
                Vertex::new(i + 1, j),
                Vertex::new(i, j + 1),
                Vertex::new(i + 1, j + 1),
            ],
        }
    }

    /// `U(i,j) → (H(i,j), R(i,j), L(i,j))`, `D(i,j) → (L(i,j), R(i+1,j), H(i,j+1))`.
    pub fn panes(self) -> [Pane; 3] {
        let Cell { i, j, orient } = self;
        match orient {
            Orient::U => [Pane::h(i, j), Pane::r(i, j), Pane::l(i, j)],
            Orient::D => [Pane::l(i, j), Pane::r(i + 1, j), Pane::h(i, j + 1)],
        }
    }

    /// The side of this cell with the given pane type.
    pub fn pane_of_type(self, ptype: PaneType) -> Pane {
        let [a, b, c] = self.panes();
        [a, b, c]
            .into_iter()
            .find(|p| p.ptype == ptype)
            .expect("every cell has one pane of each type")
    }

    /// Sum of the three vertices in lattice coordinates (three times the
    /// centroid). `U` cells give `(3i+1, 3j+1)`, `D` cells `(3i+2, 3j+2)`.
    pub fn centroid3(self) -> (i32, i32) {
        match self.orient {
            Orient::U => (3 * self.i + 1, 3 * self.j + 1),
            Orient::D => (3 * self.i + 2, 3 * self.j + 2),
        }
    }

    pub fn from_centroid3(x: i32, y: i32) -> Self {
        match (x.rem_euclid(3), y.rem_euclid(3)) {
            (1, 1) => Cell::up((x - 1).div_euclid(3), (y - 1).div_euclid(3)),
            (2, 2) => Cell::down((x - 2).div_euclid(3), (y - 2).div_euclid(3)),
            _ => panic!("({x}, {y}) is not a tripled cell centroid"),
        }
    }

    /// Cells sharing a pane with this one, in `panes()` order.
    pub fn neighbors(self) -> [Cell; 3] {
        self.panes().map(|p| p.other_cell(self))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orient::U => 'U',
            Orient::D => 'D',
        };
        write!(f, "{o}({},{})", self.i, self.j)
    }
}

/// The three pane families: horizontal, rising (parallel to `e2`) and
/// leaning (parallel to `e2 - e1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PaneType {
    H,
    R,
    L,
}

impl PaneType {
    pub const ALL: [PaneType; 3] = [PaneType::H, PaneType::R, PaneType::L];

    /// The type that is neither `self` nor `other`.
    pub fn third(self, other: PaneType) -> PaneType {
        debug_assert_ne!(self, other);
        PaneType::ALL
            .into_iter()
            .find(|&t| t != self && t != other)
            .unwrap()
    }
}

/// A unit edge of the grid.
///
/// `H(i,j) = p(i,j)–p(i+1,j)`, `R(i,j) = p(i,j)–p(i,j+1)`,
/// `L(i,j) = p(i+1,j)–p(i,j+1)`. The derived order (type, then `i`, then `j`)
/// picks the canonical first boundary pane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pane {
    pub ptype: PaneType,
    pub i: i32,
    pub j: i32,
}

impl Pane {
    pub const fn new(ptype: PaneType, i: i32, j: i32) -> Self {
        Pane { ptype, i, j }
    }

    pub const fn h(i: i32, j: i32) -> Self {
        Pane::new(PaneType::H, i, j)
    }

    pub const fn r(i: i32, j: i32) -> Self {
        Pane::new(PaneType::R, i, j)
    }

    pub const fn l(i: i32, j: i32) -> Self {
        Pane::new(PaneType::L, i, j)
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        let Pane { ptype, i, j } = self;
        match ptype {
            PaneType::H => (Vertex::new(i, j), Vertex::new(i + 1, j)),
            PaneType::R => (Vertex::new(i, j), Vertex::new(i, j + 1)),
            PaneType::L => (Vertex::new(i + 1, j), Vertex::new(i, j + 1)),
        }
    }

    /// The `(U-side, D-side)` cells bordering this pane.
    pub fn cells(self) -> (Cell, Cell) {
        let Pane { ptype, i, j } = self;
        match ptype {
            PaneType::H => (Cell::up(i, j), Cell::down(i, j - 1)),
            PaneType::R => (Cell::up(i, j), Cell::down(i - 1, j)),
            PaneType::L => (Cell::up(i, j), Cell::down(i, j)),
        }
    }

    /// The cell across this pane from `cell`.
    pub fn other_cell(self, cell: Cell) -> Cell {
        let (u, d) = self.cells();
        if cell == u {
            d
        } else {
            debug_assert_eq!(cell, d, "{cell} does not border {self}");
            u
        }
    }

    pub fn midpoint(self) -> DPoint {
        let Pane { ptype, i, j } = self;
        match ptype {
            PaneType::H => DPoint::new(2 * i + 1, 2 * j),
            PaneType::R => DPoint::new(2 * i, 2 * j + 1),
            PaneType::L => DPoint::new(2 * i + 1, 2 * j + 1),
        }
    }

    /// Inverse of [`Pane::midpoint`], if `m` is a pane midpoint.
    pub fn from_midpoint(m: DPoint) -> Option<Pane> {
        let (a, b) = (m.a, m.b);
        match (a.rem_euclid(2), b.rem_euclid(2)) {
            (1, 0) => Some(Pane::h((a - 1).div_euclid(2), b.div_euclid(2))),
            (0, 1) => Some(Pane::r(a.div_euclid(2), (b - 1).div_euclid(2))),
            (1, 1) => Some(Pane::l((a - 1).div_euclid(2), (b - 1).div_euclid(2))),
            _ => None,
        }
    }
}

impl fmt::Display for Pane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.ptype, self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a pane such as H(0,-1), got {0:?}")]
pub struct ParsePaneError(String);

impl std::str::FromStr for Pane {
    type Err = ParsePaneError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParsePaneError(s.to_string());
        let t = s.trim();
        let ptype = match t.chars().next() {
            Some('H') => PaneType::H,
            Some('R') => PaneType::R,
            Some('L') => PaneType::L,
            _ => return Err(bad()),
        };
        let inner = t[1..]
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let j = j.trim().parse().map_err(|_| bad())?;
        Ok(Pane { ptype, i, j })
    }
}

/// Free functions mirroring the incidence methods.
pub fn pane_cells(p: Pane) -> (Cell, Cell) {
    p.cells()
}

pub fn cell_panes(c: Cell) -> [Pane; 3] {
    c.panes()
}

pub fn pane_midpoint(p: Pane) -> DPoint {
    p.midpoint()
}

/// The six lattice directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    E,
    NE,
    NW,
    W,
    SW,
    SE,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::E,
        Direction::NE,
        Direction::NW,
        Direction::W,
        Direction::SW,
        Direction::SE,
    ];

    /// Lattice vector in `(e1, e2)` coordinates.
    pub fn vector(self) -> (i32, i32) {
        match self {
            Direction::E => (1, 0),
            Direction::NE => (0, 1),
            Direction::NW => (-1, 1),
            Direction::W => (-1, 0),
            Direction::SW => (0, -1),
            Direction::SE => (1, -1),
        }
    }

    pub fn from_vector(v: (i64, i64)) -> Option<Direction> {
        let g = gcd(v.0.unsigned_abs(), v.1.unsigned_abs()) as i64;
        if g == 0 {
            return None;
        }
        let unit = (v.0 / g, v.1 / g);
        Direction::ALL
            .into_iter()
            .find(|d| {
                let (x, y) = d.vector();
                (i64::from(x), i64::from(y)) == unit
            })
    }

    /// The pane family this direction runs along.
    pub fn parallel_type(self) -> PaneType {
        match self {
            Direction::E | Direction::W => PaneType::H,
            Direction::NE | Direction::SW => PaneType::R,
            Direction::SE | Direction::NW => PaneType::L,
        }
    }

    /// Counterclockwise angle from east, in degrees.
    pub fn degrees(self) -> i32 {
        match self {
            Direction::E => 0,
            Direction::NE => 60,
            Direction::NW => 120,
            Direction::W => 180,
            Direction::SW => 240,
            Direction::SE => 300,
        }
    }

    pub fn from_degrees(deg: i32) -> Direction {
        let d = deg.rem_euclid(360);
        Direction::ALL
            .into_iter()
            .find(|x| x.degrees() == d)
            .unwrap_or_else(|| panic!("{deg} is not a multiple of 60"))
    }

    /// Mirror image across a line of the given pane family.
    pub fn reflect_across(self, line: PaneType) -> Direction {
        let axis = match line {
            PaneType::H => 0,
            PaneType::R => 60,
            PaneType::L => 120,
        };
        Direction::from_degrees(2 * axis - self.degrees())
    }

    pub fn reverse(self) -> Direction {
        Direction::from_degrees(self.degrees() + 180)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element of the lattice symmetry group: one of the 12 point maps fixing
/// `p(0,0)` followed by a lattice translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    /// Integer matrix acting on `(e1, e2)` coordinates, row-major.
    m: [[i32; 2]; 2],
    /// Translation in lattice units.
    t: (i32, i32),
}

const ROT60: [[i32; 2]; 2] = [[0, -1], [1, 1]];
const FLIP: [[i32; 2]; 2] = [[1, 1], [0, -1]];
const ID: [[i32; 2]; 2] = [[1, 0], [0, 1]];

fn mat_mul(x: [[i32; 2]; 2], y: [[i32; 2]; 2]) -> [[i32; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
        }
    }
    out
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { m: ID, t: (0, 0) };

    /// Counterclockwise rotation by `60·k` degrees about `p(0,0)`.
    pub fn rotation(k: u32) -> Symmetry {
        let mut m = ID;
        for _ in 0..k % 6 {
            m = mat_mul(ROT60, m);
        }
        Symmetry { m, t: (0, 0) }
    }

    /// Reflection across the horizontal axis through `p(0,0)`, followed by
    /// rotation by `60·k` degrees.
    pub fn reflection(k: u32) -> Symmetry {
        Symmetry::rotation(k).compose(&Symmetry { m: FLIP, t: (0, 0) })
    }

    pub fn translation(di: i32, dj: i32) -> Symmetry {
        Symmetry { m: ID, t: (di, dj) }
    }

    /// The 12 point symmetries fixing `p(0,0)`: rotations first, then
    /// reflections.
    pub fn point_group() -> [Symmetry; 12] {
        std::array::from_fn(|k| {
            if k < 6 {
                Symmetry::rotation(k as u32)
            } else {
                Symmetry::reflection(k as u32 - 6)
            }
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        let m = mat_mul(self.m, other.m);
        let (x, y) = self.linear(other.t.0, other.t.1);
        Symmetry {
            m,
            t: (x + self.t.0, y + self.t.1),
        }
    }

    pub fn then_translate(&self, di: i32, dj: i32) -> Symmetry {
        Symmetry::translation(di, dj).compose(self)
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0] == 1
    }

    /// Whether the linear part is the identity.
    pub fn is_translation(&self) -> bool {
        self.m == ID
    }

    fn linear(&self, x: i32, y: i32) -> (i32, i32) {
        (
            self.m[0][0] * x + self.m[0][1] * y,
            self.m[1][0] * x + self.m[1][1] * y,
        )
    }

    /// Apply to a point given in `scale`-multiplied lattice coordinates.
    fn apply_scaled(&self, x: i32, y: i32, scale: i32) -> (i32, i32) {
        let (u, v) = self.linear(x, y);
        (u + scale * self.t.0, v + scale * self.t.1)
    }
}

/// Objects the symmetry group acts on.
pub trait Transform: Sized {
    fn transformed(&self, g: &Symmetry) -> Self;
}

impl Transform for DPoint {
    fn transformed(&self, g: &Symmetry) -> Self {
        let (a, b) = g.apply_scaled(self.a, self.b, 2);
        DPoint::new(a, b)
    }
}

impl Transform for Vertex {
    fn transformed(&self, g: &Symmetry) -> Self {
        let (i, j) = g.apply_scaled(self.i, self.j, 1);
        Vertex::new(i, j)
    }
}

impl Transform for Cell {
    fn transformed(&self, g: &Symmetry) -> Self {
        let (x, y) = self.centroid3();
        let (u, v) = g.apply_scaled(x, y, 3);
        Cell::from_centroid3(u, v)
    }
}

impl Transform for Pane {
    fn transformed(&self, g: &Symmetry) -> Self {
        Pane::from_midpoint(self.midpoint().transformed(g)).expect("midpoints map to midpoints")
    }
}

impl Transform for Direction {
    fn transformed(&self, g: &Symmetry) -> Self {
        let (x, y) = self.vector();
        let (u, v) = g.linear(x, y);
        Direction::from_vector((i64::from(u), i64::from(v))).unwrap()
    }
}

pub fn apply_symmetry<T: Transform>(g: &Symmetry, x: &T) -> T {
    x.transformed(g)
}

/// Twice the signed area of the triangle `(p, q, r)` in lattice coordinates.
/// The lattice basis has positive determinant, so the sign agrees with the
/// Cartesian orientation (positive = counterclockwise).
pub fn orient2d(p: DPoint, q: DPoint, r: DPoint) -> i64 {
    let (ux, uy) = q.minus(p);
    let (vx, vy) = r.minus(p);
    ux * vy - uy * vx
}
