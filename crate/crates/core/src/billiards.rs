//! Beam tracing and trajectory geometry.
//!
//! A beam leaves the midpoint of each boundary pane at 60° into the polygon,
//! heading NE, SE or W, and crosses cells along their medial lines until it
//! meets another boundary pane. All geometry stays in doubled lattice
//! coordinates: chords run along lines `a = odd`, `b = odd` or `a + b = odd`,
//! so every crossing point is integral.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::BilliardsError;
use crate::grid::{orient2d, Cell, DPoint, Direction, Orient, Pane, PaneType};
use crate::perm::BilliardsPermutation;
use crate::polygon::GridPolygon;

/// The direction in `{NE, SE, W}` a beam takes when emitted from boundary
/// pane `pane` into `polygon`.
pub fn emission_direction(polygon: &GridPolygon, pane: Pane) -> Result<Direction, BilliardsError> {
    let k = polygon
        .boundary_index(&pane)
        .ok_or(BilliardsError::NotBoundary(pane))?;
    Ok(emission_for(pane.ptype, polygon.interior_cell(k).orient))
}

fn emission_for(ptype: PaneType, inside: Orient) -> Direction {
    match (ptype, inside) {
        (PaneType::H, Orient::U) => Direction::NE,
        (PaneType::H, Orient::D) => Direction::SE,
        (PaneType::R, Orient::U) => Direction::SE,
        (PaneType::R, Orient::D) => Direction::W,
        (PaneType::L, Orient::D) => Direction::NE,
        (PaneType::L, Orient::U) => Direction::W,
    }
}

/// One straight beam from boundary pane `from` to boundary pane `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub from: usize,
    pub to: usize,
    pub start: DPoint,
    pub end: DPoint,
    pub direction: Direction,
    /// Cells crossed, in order. Each contributes half a unit of length.
    pub cells: Vec<Cell>,
}

impl Chord {
    pub fn crossings(&self) -> usize {
        self.cells.len()
    }

    pub fn segment(&self) -> (DPoint, DPoint) {
        (self.start, self.end)
    }
}

/// Trace the beam emitted from boundary pane `i` (0-based).
pub fn trace_beam(polygon: &GridPolygon, i: usize) -> Result<Chord, BilliardsError> {
    let pane = *polygon
        .boundary()
        .get(i)
        .ok_or_else(|| BilliardsError::Consistency(format!("boundary index {i} out of range")))?;
    let mut cell = polygon.interior_cell(i);
    let direction = emission_for(pane.ptype, cell.orient);
    let along = direction.parallel_type();
    let mut entered = pane.ptype;
    let mut cells = Vec::new();
    loop {
        if !polygon.contains(&cell) {
            return Err(BilliardsError::Consistency(format!(
                "beam from {pane} entered {cell}, outside the polygon"
            )));
        }
        cells.push(cell);
        if cells.len() > polygon.area() {
            return Err(BilliardsError::Consistency(format!("beam from {pane} does not terminate")));
        }
        let exit_type = entered.third(along);
        let exit = cell.pane_of_type(exit_type);
        if let Some(j) = polygon.boundary_index(&exit) {
            if j == i {
                return Err(BilliardsError::Consistency(format!("beam from {pane} returned to itself")));
            }
            return Ok(Chord {
                from: i,
                to: j,
                start: pane.midpoint(),
                end: exit.midpoint(),
                direction,
                cells,
            });
        }
        cell = exit.other_cell(cell);
        entered = exit_type;
    }
}

pub fn billiards_permutation(polygon: &GridPolygon) -> Result<BilliardsPermutation, BilliardsError> {
    let next = (0..polygon.perim())
        .map(|i| trace_beam(polygon, i).map(|c| c.to))
        .collect::<Result<Vec<_>, _>>()?;
    BilliardsPermutation::from_next(next).map_err(|e| BilliardsError::Consistency(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleOrientation {
    Up,
    Down,
    None,
}

/// The closed polyline traced by one cycle of the billiards permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    /// Boundary indices `i_1, …, i_r` in cycle order.
    pub cycle: Vec<usize>,
    pub segments: Vec<(DPoint, DPoint)>,
    pub directions: Vec<Direction>,
    /// Twice the Euclidean length, i.e. the number of cell crossings.
    pub length2: usize,
    pub is_triangular: bool,
    pub triangle_orientation: TriangleOrientation,
}

impl Trajectory {
    fn from_chords(cycle: &[usize], chords: &[Chord]) -> Trajectory {
        let segments: Vec<_> = cycle.iter().map(|&i| chords[i].segment()).collect();
        let directions = cycle.iter().map(|&i| chords[i].direction).collect();
        let length2 = cycle.iter().map(|&i| chords[i].crossings()).sum();
        let is_triangular = cycle.len() == 3;
        let triangle_orientation = if is_triangular {
            let pts: Vec<DPoint> = segments.iter().map(|s| s.0).collect();
            // two corners share the horizontal side; the third is the apex
            let apex = pts
                .iter()
                .find(|p| pts.iter().filter(|q| q.b == p.b).count() == 1)
                .expect("a lattice triangle has one horizontal side");
            let base = pts.iter().find(|q| q.b != apex.b).unwrap();
            if apex.b > base.b {
                TriangleOrientation::Up
            } else {
                TriangleOrientation::Down
            }
        } else {
            TriangleOrientation::None
        };
        Trajectory {
            cycle: cycle.to_vec(),
            segments,
            directions,
            length2,
            is_triangular,
            triangle_orientation,
        }
    }

    pub fn size(&self) -> usize {
        self.cycle.len()
    }
}

/// Whether closed segments `s` and `t` share a point. Collinear segments
/// sharing a point are reported as an error.
pub fn segments_intersect(s: (DPoint, DPoint), t: (DPoint, DPoint)) -> Result<bool, BilliardsError> {
    let o1 = orient2d(s.0, s.1, t.0).signum();
    let o2 = orient2d(s.0, s.1, t.1).signum();
    let o3 = orient2d(t.0, t.1, s.0).signum();
    let o4 = orient2d(t.0, t.1, s.1).signum();
    if o1 == 0 && o2 == 0 {
        let lo = |p: DPoint, q: DPoint| (p.min(q), p.max(q));
        let (a0, a1) = lo(s.0, s.1);
        let (b0, b1) = lo(t.0, t.1);
        // collinear: lexicographic order on (a, b) is monotone along the line
        if a0 <= b1 && b0 <= a1 {
            return Err(BilliardsError::CollinearOverlap);
        }
        return Ok(false);
    }
    Ok(o1 * o2 <= 0 && o3 * o4 <= 0)
}

/// Exact crossing point of two non-parallel segments, if they meet.
pub fn segment_crossing(s: (DPoint, DPoint), t: (DPoint, DPoint)) -> Option<DPoint> {
    let (dx, dy) = s.1.minus(s.0);
    let (ex, ey) = t.1.minus(t.0);
    let denom = dx * ey - dy * ex;
    if denom == 0 || !segments_intersect(s, t).unwrap_or(false) {
        return None;
    }
    let (wx, wy) = t.0.minus(s.0);
    let num = wx * ey - wy * ex;
    let (x, y) = (
        i64::from(s.0.a) * denom + num * dx,
        i64::from(s.0.b) * denom + num * dy,
    );
    debug_assert!(x % denom == 0 && y % denom == 0, "crossing off the doubled lattice");
    Some(DPoint::new((x / denom) as i32, (y / denom) as i32))
}

pub fn trajectories_intersect(t1: &Trajectory, t2: &Trajectory) -> Result<bool, BilliardsError> {
    for &s in &t1.segments {
        for &t in &t2.segments {
            if segments_intersect(s, t)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Distinct points shared by two trajectories (non-parallel crossings only).
pub fn crossing_points(t1: &Trajectory, t2: &Trajectory) -> Vec<DPoint> {
    let mut pts: Vec<DPoint> = t1
        .segments
        .iter()
        .flat_map(|&s| t2.segments.iter().filter_map(move |&t| segment_crossing(s, t)))
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

/// Shoreline data of a cycle of size `m ≥ 4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShorelineReport {
    pub m: usize,
    /// Midpoints of the cycle's panes in clockwise boundary order.
    pub z_points: Vec<DPoint>,
    /// Boundary indices of those panes; shoreline `k` runs from
    /// `z_indices[k]` to `z_indices[k + 1]`.
    pub z_indices: Vec<usize>,
    pub ks: Vec<i64>,
    /// Triangular trajectories meeting the cycle's trajectory with a corner on
    /// each shoreline.
    pub touch_counts: Vec<usize>,
    /// Largest number of corners a single such triangle has on each shoreline.
    pub max_corners_per_triangle: Vec<usize>,
}

/// Everything about one polygon's billiards system.
#[derive(Clone, Debug)]
pub struct BilliardsSystem {
    polygon: GridPolygon,
    chords: Vec<Chord>,
    perm: BilliardsPermutation,
    trajectories: Vec<Trajectory>,
    meets: Vec<Vec<bool>>,
}

impl BilliardsSystem {
    pub fn analyze(polygon: &GridPolygon) -> Result<BilliardsSystem, BilliardsError> {
        let chords = (0..polygon.perim())
            .map(|i| trace_beam(polygon, i))
            .collect::<Result<Vec<_>, _>>()?;
        let perm = BilliardsPermutation::from_next(chords.iter().map(|c| c.to).collect())
            .map_err(|e| BilliardsError::Consistency(e.to_string()))?;
        let trajectories: Vec<Trajectory> = perm
            .cycles()
            .iter()
            .map(|c| Trajectory::from_chords(c, &chords))
            .collect();
        let k = trajectories.len();
        let mut meets = vec![vec![false; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let hit = trajectories_intersect(&trajectories[a], &trajectories[b])?;
                meets[a][b] = hit;
                meets[b][a] = hit;
            }
        }
        Ok(BilliardsSystem {
            polygon: polygon.clone(),
            chords,
            perm,
            trajectories,
            meets,
        })
    }

    pub fn polygon(&self) -> &GridPolygon {
        &self.polygon
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn permutation(&self) -> &BilliardsPermutation {
        &self.perm
    }

    /// Trajectories in the order of `permutation().cycles()`.
    pub fn trajectories(&self) -> &[Trajectory] {
        &self.trajectories
    }

    pub fn cyc(&self) -> usize {
        self.perm.cyc()
    }

    /// Whether trajectories `a` and `b` (cycle indices) share a point.
    pub fn meet(&self, a: usize, b: usize) -> bool {
        a != b && self.meets[a][b]
    }

    pub fn triangular_cycles(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.trajectories.len()).filter(|&c| self.trajectories[c].is_triangular)
    }

    /// Number of other 3-cycles whose trajectories meet that of cycle `c`.
    pub fn triangular_intersection_count(&self, c: usize) -> usize {
        self.triangular_cycles().filter(|&d| self.meet(c, d)).count()
    }

    /// Beam arriving at `b_{π(i)}` mirrored across that pane gives the
    /// emission direction there.
    pub fn reflection_consistent(&self) -> bool {
        self.chords.iter().all(|ch| {
            let arrival = self.polygon.boundary()[ch.to];
            let out = emission_for(arrival.ptype, self.polygon.interior_cell(ch.to).orient);
            ch.direction.reflect_across(arrival.ptype) == out
        })
    }

    /// Per cell, how many chords cross it parallel to each pane type
    /// (in `H, R, L` order).
    pub fn cell_crossings(&self) -> HashMap<Cell, [usize; 3]> {
        let mut counts: HashMap<Cell, [usize; 3]> = HashMap::new();
        for ch in &self.chords {
            let slot = match ch.direction.parallel_type() {
                PaneType::H => 0,
                PaneType::R => 1,
                PaneType::L => 2,
            };
            for c in &ch.cells {
                counts.entry(*c).or_default()[slot] += 1;
            }
        }
        counts
    }

    pub fn total_length2(&self) -> usize {
        self.trajectories.iter().map(|t| t.length2).sum()
    }

    pub fn shoreline_report(&self, c: usize) -> Result<ShorelineReport, BilliardsError> {
        let traj = &self.trajectories[c];
        let m = traj.size();
        if m < 4 {
            return Err(BilliardsError::CycleTooSmall(m));
        }
        let n = self.polygon.perim();
        let mut z_indices = traj.cycle.clone();
        z_indices.sort_unstable();
        let z_points = z_indices
            .iter()
            .map(|&k| self.polygon.boundary()[k].midpoint())
            .collect();
        let touching: Vec<&Trajectory> = self
            .triangular_cycles()
            .filter(|&d| self.meet(c, d))
            .map(|d| &self.trajectories[d])
            .collect();
        let mut ks = Vec::with_capacity(m);
        let mut touch_counts = Vec::with_capacity(m);
        let mut max_corners = Vec::with_capacity(m);
        for k in 0..m {
            let from = z_indices[k];
            let gap = (z_indices[(k + 1) % m] + n - from) % n;
            // corners strictly inside the shoreline: ends of panes from..from+gap-1
            let turning: i64 = (1..=gap)
                .map(|s| 3 - self.polygon.cells_at(self.polygon.corner(from + s)) as i64)
                .sum();
            ks.push(3 - turning);
            let inside = |idx: usize| {
                let off = (idx + n - from) % n;
                off > 0 && off < gap
            };
            let per_triangle: Vec<usize> = touching
                .iter()
                .map(|t| t.cycle.iter().filter(|&&i| inside(i)).count())
                .collect();
            touch_counts.push(per_triangle.iter().filter(|&&x| x > 0).count());
            max_corners.push(per_triangle.into_iter().max().unwrap_or(0));
        }
        Ok(ShorelineReport {
            m,
            z_points,
            z_indices,
            ks,
            touch_counts,
            max_corners_per_triangle: max_corners,
        })
    }

    pub fn report(&self) -> AnalysisReport {
        let area = self.polygon.area();
        let n = self.polygon.perim();
        let cyc = self.cyc();
        let cycles = self
            .trajectories
            .iter()
            .enumerate()
            .map(|(k, t)| CycleReport {
                size: t.size(),
                labels: t.cycle.iter().map(|x| x + 1).collect(),
                length2: t.length2,
                is_triangular: t.is_triangular,
                triangle_orientation: t.triangle_orientation,
                triangular_intersections: self.triangular_intersection_count(k),
                shoreline_ks: self.shoreline_report(k).ok().map(|r| r.ks),
            })
            .collect();
        AnalysisReport {
            n,
            area,
            cyc,
            permutation: self.perm.to_string(),
            cycle_type: self.perm.cycle_type(),
            alpha: self.perm.alpha(),
            cycles,
            slacks: Slacks::new(area, n, cyc),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleReport {
    pub size: usize,
    pub labels: Vec<usize>,
    pub length2: usize,
    pub is_triangular: bool,
    pub triangle_orientation: TriangleOrientation,
    pub triangular_intersections: usize,
    pub shoreline_ks: Option<Vec<i64>>,
}

/// Distances from the three extremal bounds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Slacks {
    /// `area − (6·cyc − 6)`
    pub area: i64,
    /// `perim − (7/2·cyc − 3/2)`, a multiple of 1/2
    pub perim: f64,
    /// `perim − (4·cyc − 2)`
    pub conjecture: i64,
}

impl Slacks {
    pub fn new(area: usize, perim: usize, cyc: usize) -> Slacks {
        let (a, p, c) = (area as i64, perim as i64, cyc as i64);
        Slacks {
            area: a - (6 * c - 6),
            perim: (2 * p - (7 * c - 3)) as f64 / 2.0,
            conjecture: p - (4 * c - 2),
        }
    }

}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub area: usize,
    pub cyc: usize,
    pub permutation: String,
    pub cycle_type: Vec<usize>,
    pub alpha: BTreeMap<usize, usize>,
    pub cycles: Vec<CycleReport>,
    pub slacks: Slacks,
}
