//! Exhaustive polyiamond enumeration and the inequality sweep.
//!
//! Shapes are grown one cell at a time over all edge-connected cell sets
//! (holes and pinches included, since a simply connected shape can have no
//! simply connected parent), deduplicated by canonical form, and filtered by
//! the polygon validator on output. Each level is split into chunks that are
//! grown in parallel and merged back into one sorted set, so the result does
//! not depend on the number of workers.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::billiards::{BilliardsSystem, Slacks};
use crate::error::DecompositionError;
use crate::grid::{Cell, Pane};
use crate::plabic::dual;
use crate::polygon::{canonical_cells, GridPolygon, Mode};

const CHUNK: usize = 256;

/// Run `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Canonical cell lists of all edge-connected polyiamonds, one sorted set per
/// area `1..=max_area`.
pub fn connected_levels(max_area: usize, mode: Mode) -> Vec<Vec<Vec<Cell>>> {
    let mut levels: Vec<Vec<Vec<Cell>>> = Vec::with_capacity(max_area);
    if max_area == 0 {
        return levels;
    }
    let seeds: BTreeSet<Vec<Cell>> = [Cell::up(0, 0), Cell::down(0, 0)]
        .iter()
        .map(|&c| canonical_cells(&[c], mode))
        .collect();
    levels.push(seeds.into_iter().collect());
    while levels.len() < max_area {
        let last = levels.last().unwrap();
        let parts: Vec<BTreeSet<Vec<Cell>>> = last
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut out = BTreeSet::new();
                for shape in chunk {
                    let member: HashSet<Cell> = shape.iter().copied().collect();
                    let mut tried = HashSet::new();
                    for c in shape {
                        for nb in c.neighbors() {
                            if member.contains(&nb) || !tried.insert(nb) {
                                continue;
                            }
                            let mut grown = shape.clone();
                            grown.push(nb);
                            out.insert(canonical_cells(&grown, mode));
                        }
                    }
                }
                out
            })
            .collect();
        let mut merged = BTreeSet::new();
        for part in parts {
            merged.extend(part);
        }
        levels.push(merged.into_iter().collect());
    }
    levels
}

/// Every simply connected polyiamond with area at most `max_area`, once per
/// class, ordered by area and then by canonical cells.
pub fn enumerate_polyiamonds(max_area: usize, mode: Mode) -> Vec<GridPolygon> {
    connected_levels(max_area, mode)
        .into_par_iter()
        .flat_map_iter(|level| level.into_iter())
        .filter_map(|cells| GridPolygon::from_cells(cells).ok())
        .collect()
}

/// Named checks run by [`verify_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Check {
    /// Beam tracing and the dual graph's trips give the same permutation.
    PermutationOracle,
    /// Every cycle has size at least 3 and every bounce mirrors correctly.
    BeamConsistency,
    /// `area ≥ 6·cyc − 6`.
    AreaBound,
    /// `perim ≥ 7/2·cyc − 3/2`.
    PerimeterBound,
    /// `area = 6·cyc − 6` exactly for trees of unit hexagons.
    AreaEqualityIsHexagonTree,
    /// A cycle of size `m` meets at most `m − 2` triangular trajectories.
    TriangularIntersectionBound,
    /// A triangular trajectory meets at most one other, of opposite orientation.
    TriangularPairing,
    /// A triangle meeting a longer trajectory has at most one corner per shoreline.
    ShorelineSingleTouch,
    /// At most `K(B)` triangles meeting the trajectory touch shoreline `B`.
    ShorelineTouchBound,
    /// `Σ K(B_i) = 3(m − 2)` and every `K(B_i) ≥ 1`.
    ShorelineTurning,
    /// Every cell is crossed once parallel to each side; `Σ length2 = 3·area`.
    Conservation,
    /// `α₃ ≤ α₄ + Σ_{m≥5} (m − 2)·α_m` on non-exceptional primitive polygons.
    TriangleCountBound,
    /// `area ≥ 6·cyc` on non-exceptional primitive polygons.
    PrimitiveAreaBound,
    /// Cutting along one pane loses exactly one cycle.
    SinglePaneCut,
    /// `perim ≥ 4·cyc − 2`; reported, never fatal.
    PerimConjecture,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::PermutationOracle,
        Check::BeamConsistency,
        Check::AreaBound,
        Check::PerimeterBound,
        Check::AreaEqualityIsHexagonTree,
        Check::TriangularIntersectionBound,
        Check::TriangularPairing,
        Check::ShorelineSingleTouch,
        Check::ShorelineTouchBound,
        Check::ShorelineTurning,
        Check::Conservation,
        Check::TriangleCountBound,
        Check::PrimitiveAreaBound,
        Check::SinglePaneCut,
        Check::PerimConjecture,
    ];

    pub fn is_conjecture(self) -> bool {
        self == Check::PerimConjecture
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolygonRecord {
    pub hash: String,
    pub area: usize,
    pub perim: usize,
    pub cyc: usize,
    pub cycle_type: Vec<usize>,
    pub slacks: Slacks,
    pub primitive: bool,
    pub hexagon_tree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub hash: String,
    /// Free canonical cells as `(i, j, orient)`.
    pub cells: Vec<(i32, i32, crate::grid::Orient)>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub max_area: usize,
    pub mode: Mode,
    pub counts: BTreeMap<usize, usize>,
    pub records: Vec<PolygonRecord>,
    pub violations: BTreeMap<Check, Vec<Violation>>,
    /// Hashes of polygons with `area = 6·cyc − 6`.
    pub area_equality: Vec<String>,
    /// Hashes of polygons with `perim = 4·cyc − 2`.
    pub conjecture_equality: Vec<String>,
    pub min_area_slack: Option<i64>,
    pub min_perim_slack: Option<f64>,
    pub min_conjecture_slack: Option<i64>,
}

/// The first failing check of a sweep, with the offending shape.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{check} failed on {}: {}", violation.hash, violation.detail)]
pub struct SuiteFailure {
    pub check: Check,
    pub violation: Violation,
}

impl VerificationReport {
    pub fn violations_of(&self, check: Check) -> &[Violation] {
        self.violations.get(&check).map_or(&[], Vec::as_slice)
    }

    pub fn theorem_violation_count(&self) -> usize {
        self.violations
            .iter()
            .filter(|(c, _)| !c.is_conjecture())
            .map(|(_, v)| v.len())
            .sum()
    }

    pub fn conjecture_violation_count(&self) -> usize {
        self.violations_of(Check::PerimConjecture).len()
    }

    /// 0 clean, 2 a proved bound failed, 3 only the conjectured bound failed.
    pub fn exit_code(&self) -> i32 {
        if self.theorem_violation_count() > 0 {
            2
        } else if self.conjecture_violation_count() > 0 {
            3
        } else {
            0
        }
    }

    /// The first violation of a proved check, if any.
    pub fn first_failure(&self) -> Option<SuiteFailure> {
        self.violations
            .iter()
            .filter(|(c, _)| !c.is_conjecture())
            .find_map(|(c, v)| {
                v.first().map(|x| SuiteFailure {
                    check: *c,
                    violation: x.clone(),
                })
            })
    }

    pub fn into_result(self) -> Result<VerificationReport, SuiteFailure> {
        match self.first_failure() {
            Some(f) => Err(f),
            None => Ok(self),
        }
    }

    pub const CSV_HEADER: &'static str =
        "hash,area,perim,cyc,cycle_type,area_slack,perim_slack,conjecture_slack";

    /// One row per polygon; `cycle_type` is space separated.
    pub fn to_csv(&self) -> String {
        records_csv(&self.records)
    }

    /// Counts, minima and violations, without the per-polygon rows.
    pub fn summary_json(&self) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            max_area: usize,
            mode: Mode,
            polygons: usize,
            counts: &'a BTreeMap<usize, usize>,
            min_area_slack: Option<i64>,
            min_perim_slack: Option<f64>,
            min_conjecture_slack: Option<i64>,
            area_equality: &'a [String],
            conjecture_equality: &'a [String],
            violations: BTreeMap<String, &'a [Violation]>,
            exit_code: i32,
        }
        let violations = Check::ALL
            .iter()
            .map(|c| (c.to_string(), self.violations_of(*c)))
            .collect();
        serde_json::to_string_pretty(&Summary {
            max_area: self.max_area,
            mode: self.mode,
            polygons: self.records.len(),
            counts: &self.counts,
            min_area_slack: self.min_area_slack,
            min_perim_slack: self.min_perim_slack,
            min_conjecture_slack: self.min_conjecture_slack,
            area_equality: &self.area_equality,
            conjecture_equality: &self.conjecture_equality,
            violations,
            exit_code: self.exit_code(),
        })
        .expect("plain data serializes")
    }
}

fn records_csv_row(r: &PolygonRecord) -> String {
    let ct: Vec<String> = r.cycle_type.iter().map(ToString::to_string).collect();
    format!(
        "{},{},{},{},{},{},{},{}",
        r.hash,
        r.area,
        r.perim,
        r.cyc,
        ct.join(" "),
        r.slacks.area,
        r.slacks.perim,
        r.slacks.conjecture
    )
}

/// Statistics of one polygon without running the checks.
pub fn describe(p: &GridPolygon, mode: Mode) -> PolygonRecord {
    let perm = crate::billiards::billiards_permutation(p).ok();
    let cyc = perm.as_ref().map_or(0, |x| x.cyc());
    PolygonRecord {
        hash: p.shape_hash(mode),
        area: p.area(),
        perim: p.perim(),
        cyc,
        cycle_type: perm.map(|x| x.cycle_type()).unwrap_or_default(),
        slacks: Slacks::new(p.area(), p.perim(), cyc),
        primitive: p.is_primitive(),
        hexagon_tree: p.is_tree_of_unit_hexagons(),
    }
}

/// CSV rows for a list of records, header included.
pub fn records_csv(records: &[PolygonRecord]) -> String {
    let mut out = String::from(VerificationReport::CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&records_csv_row(r));
        out.push('\n');
    }
    out
}

/// Primitive shapes that fall below the primitive-polygon bounds: the single
/// triangle, the unit hexagon, and one 16-cell shape with three cycles.
pub fn exceptional_shapes() -> Vec<Vec<Cell>> {
    [
        crate::fixtures::triangle(),
        crate::fixtures::hexagon(),
        crate::fixtures::exceptional_sixteen(),
    ]
    .iter()
    .map(|p| p.canonical_cells(Mode::Free))
    .collect()
}

/// Result of all checks on one polygon.
#[derive(Clone, Debug)]
pub struct PolygonCheck {
    pub record: PolygonRecord,
    pub failures: Vec<(Check, String)>,
}

/// Run every check on one polygon. `exceptional` lists the free canonical
/// forms excluded from the primitive-polygon bounds.
pub fn check_polygon(p: &GridPolygon, exceptional: &[Vec<Cell>]) -> PolygonCheck {
    let mut failures = Vec::new();
    let hash = p.shape_hash(Mode::Free);
    let primitive = p.is_primitive();
    let hexagon_tree = p.is_tree_of_unit_hexagons();
    let sys = match BilliardsSystem::analyze(p) {
        Ok(s) => s,
        Err(e) => {
            failures.push((Check::BeamConsistency, e.to_string()));
            let record = PolygonRecord {
                hash,
                area: p.area(),
                perim: p.perim(),
                cyc: 0,
                cycle_type: vec![],
                slacks: Slacks::new(p.area(), p.perim(), 0),
                primitive,
                hexagon_tree,
            };
            return PolygonCheck { record, failures };
        }
    };
    let perm = sys.permutation();
    let (area, perim, cyc) = (p.area() as i64, p.perim() as i64, sys.cyc() as i64);
    let mut fail = |c: Check, msg: String| failures.push((c, msg));

    match dual(p).trip_permutation() {
        Ok(t) if &t == perm => {}
        Ok(t) => fail(Check::PermutationOracle, format!("beams {perm}, trips {t}")),
        Err(e) => fail(Check::PermutationOracle, e.to_string()),
    }
    if perm.cycles().iter().any(|c| c.len() < 3) {
        fail(Check::BeamConsistency, format!("short cycle in {perm}"));
    }
    if !sys.reflection_consistent() {
        fail(Check::BeamConsistency, "a bounce does not mirror".into());
    }

    if area < 6 * cyc - 6 {
        fail(Check::AreaBound, format!("area {area}, cyc {cyc}"));
    }
    if 2 * perim < 7 * cyc - 3 {
        fail(Check::PerimeterBound, format!("perim {perim}, cyc {cyc}"));
    }
    if (area == 6 * cyc - 6) != hexagon_tree {
        fail(
            Check::AreaEqualityIsHexagonTree,
            format!("area {area}, cyc {cyc}, hexagon tree {hexagon_tree}"),
        );
    }
    if perim < 4 * cyc - 2 {
        fail(Check::PerimConjecture, format!("perim {perim}, cyc {cyc}"));
    }

    let trajs = sys.trajectories();
    for (c, t) in trajs.iter().enumerate() {
        let m = t.size();
        let hits = sys.triangular_intersection_count(c);
        if hits + 2 > m {
            fail(
                Check::TriangularIntersectionBound,
                format!("cycle {c} of size {m} meets {hits} triangles"),
            );
        }
        if t.is_triangular {
            let partners: Vec<usize> = sys.triangular_cycles().filter(|&d| sys.meet(c, d)).collect();
            let opposite = partners
                .iter()
                .all(|&d| trajs[d].triangle_orientation != t.triangle_orientation);
            if partners.len() > 1 || !opposite {
                fail(
                    Check::TriangularPairing,
                    format!("triangle {c} meets {partners:?}"),
                );
            }
        } else {
            let sh = match sys.shoreline_report(c) {
                Ok(s) => s,
                Err(e) => {
                    fail(Check::ShorelineTurning, e.to_string());
                    continue;
                }
            };
            let total: i64 = sh.ks.iter().sum();
            if total != 3 * (m as i64 - 2) || sh.ks.iter().any(|&k| k < 1) {
                fail(Check::ShorelineTurning, format!("cycle {c}: K = {:?}", sh.ks));
            }
            if sh.max_corners_per_triangle.iter().any(|&x| x > 1) {
                fail(
                    Check::ShorelineSingleTouch,
                    format!("cycle {c}: corners per shoreline {:?}", sh.max_corners_per_triangle),
                );
            }
            if sh.touch_counts.iter().zip(&sh.ks).any(|(&t, &k)| t as i64 > k) {
                fail(
                    Check::ShorelineTouchBound,
                    format!("cycle {c}: touches {:?}, K {:?}", sh.touch_counts, sh.ks),
                );
            }
        }
    }

    if sys.total_length2() != 3 * p.area() {
        fail(
            Check::Conservation,
            format!("length2 {} for area {area}", sys.total_length2()),
        );
    }
    let crossings = sys.cell_crossings();
    if crossings.len() != p.area() || crossings.values().any(|x| *x != [1, 1, 1]) {
        fail(Check::Conservation, "a cell is not crossed once per direction".into());
    }

    if primitive {
        let canon = p.canonical_cells(Mode::Free);
        if !exceptional.contains(&canon) {
            let alpha = perm.alpha();
            let a = |m: usize| *alpha.get(&m).unwrap_or(&0) as i64;
            let rhs: i64 = a(4) + alpha.iter().filter(|(&m, _)| m >= 5).map(|(&m, &k)| (m as i64 - 2) * k as i64).sum::<i64>();
            if a(3) > rhs {
                fail(Check::TriangleCountBound, format!("alpha {alpha:?}"));
            }
            if area < 6 * cyc {
                fail(Check::PrimitiveAreaBound, format!("area {area}, cyc {cyc}"));
            }
        }
    }

    for pane in p.cut_panes() {
        let (a, b) = p.split_along(pane).expect("cut panes split");
        match check_cut_lemma(&a, &b, &[pane]) {
            Ok(r) if r.single_pane_holds == Some(true) && r.inequality_holds => {}
            Ok(r) => fail(Check::SinglePaneCut, format!("cut along {pane}: {r:?}")),
            Err(e) => fail(Check::SinglePaneCut, e.to_string()),
        }
    }

    let record = PolygonRecord {
        hash,
        area: p.area(),
        perim: p.perim(),
        cyc: sys.cyc(),
        cycle_type: perm.cycle_type(),
        slacks: Slacks::new(p.area(), p.perim(), sys.cyc()),
        primitive,
        hexagon_tree,
    };
    PolygonCheck { record, failures }
}

/// Enumerate free shapes up to `max_area` and run every check on each.
pub fn verify_suite(max_area: usize) -> VerificationReport {
    verify_polygons(max_area, &enumerate_polyiamonds(max_area, Mode::Free))
}

/// Run every check over an explicit list of polygons.
pub fn verify_polygons(max_area: usize, polygons: &[GridPolygon]) -> VerificationReport {
    let exceptional = exceptional_shapes();
    let checked: Vec<(PolygonCheck, &GridPolygon)> = polygons
        .par_iter()
        .map(|p| (check_polygon(p, &exceptional), p))
        .collect();

    let mut counts = BTreeMap::new();
    let mut violations: BTreeMap<Check, Vec<Violation>> = BTreeMap::new();
    let mut records = Vec::with_capacity(checked.len());
    for (pc, p) in checked {
        *counts.entry(pc.record.area).or_insert(0) += 1;
        for (check, detail) in pc.failures {
            violations.entry(check).or_default().push(Violation {
                hash: pc.record.hash.clone(),
                cells: p
                    .canonical_cells(Mode::Free)
                    .iter()
                    .map(|c| (c.i, c.j, c.orient))
                    .collect(),
                detail,
            });
        }
        records.push(pc.record);
    }
    let pick = |f: fn(&PolygonRecord) -> bool| -> Vec<String> {
        records.iter().filter(|r| f(r)).map(|r| r.hash.clone()).collect()
    };
    let area_equality = pick(|r| r.slacks.area == 0);
    let conjecture_equality = pick(|r| r.slacks.conjecture == 0);
    VerificationReport {
        max_area,
        mode: Mode::Free,
        counts,
        min_area_slack: records.iter().map(|r| r.slacks.area).min(),
        min_perim_slack: records.iter().map(|r| r.slacks.perim).reduce(f64::min),
        min_conjecture_slack: records.iter().map(|r| r.slacks.conjecture).min(),
        records,
        violations,
        area_equality,
        conjecture_equality,
    }
}

/// Cycle bookkeeping for two polygons joined along shared panes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutRecord {
    /// Number of shared panes.
    pub eta: usize,
    /// Trajectories of the first piece with a pane among the shared ones.
    pub delta1: usize,
    pub delta2: usize,
    pub cyc1: usize,
    pub cyc2: usize,
    pub cyc: usize,
    /// `cyc ≤ cyc1 + cyc2 − δ1 − δ2 + η`.
    pub inequality_holds: bool,
    /// `cyc = cyc1 + cyc2 − 1`, checked when exactly one pane is shared.
    pub single_pane_holds: Option<bool>,
}

/// Compare the cycles of `first ∪ second` with those of the pieces. Both
/// polygons are given in common coordinates and must meet in exactly the
/// listed panes.
pub fn check_cut_lemma(
    first: &GridPolygon,
    second: &GridPolygon,
    shared: &[Pane],
) -> Result<CutRecord, DecompositionError> {
    let bad = |m: String| DecompositionError::BadDecomposition(m);
    let listed: BTreeSet<Pane> = shared.iter().copied().collect();
    if listed.is_empty() || listed.len() != shared.len() {
        return Err(bad("shared panes must be a nonempty list without repeats".into()));
    }
    if let Some(c) = second.cells().iter().find(|c| first.contains(c)) {
        return Err(bad(format!("both pieces contain {c}")));
    }
    let b2: BTreeSet<Pane> = second.boundary().iter().copied().collect();
    let common: BTreeSet<Pane> = first.boundary().iter().copied().filter(|p| b2.contains(p)).collect();
    if common != listed {
        return Err(bad(format!(
            "pieces share {} boundary panes, {} listed",
            common.len(),
            listed.len()
        )));
    }
    let union = GridPolygon::from_cells(first.cells().iter().chain(second.cells()).copied())
        .map_err(|e| bad(e.to_string()))?;
    let analyze = |p: &GridPolygon| BilliardsSystem::analyze(p).map_err(|e| bad(e.to_string()));
    let (s1, s2, s) = (analyze(first)?, analyze(second)?, analyze(&union)?);
    let touching = |sys: &BilliardsSystem| {
        let poly = sys.polygon();
        sys.permutation()
            .cycles()
            .iter()
            .filter(|c| c.iter().any(|&i| listed.contains(&poly.boundary()[i])))
            .count()
    };
    let (delta1, delta2) = (touching(&s1), touching(&s2));
    let eta = listed.len();
    let (cyc1, cyc2, cyc) = (s1.cyc(), s2.cyc(), s.cyc());
    let inequality_holds = cyc + delta1 + delta2 <= cyc1 + cyc2 + eta;
    let single_pane_holds = (eta == 1).then(|| cyc + 1 == cyc1 + cyc2);
    Ok(CutRecord {
        eta,
        delta1,
        delta2,
        cyc1,
        cyc2,
        cyc,
        inequality_holds,
        single_pane_holds,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// `perim − (4·cyc − 2)`
    MinPerimSlack,
    /// `area − (6·cyc − 6)`
    MinAreaSlack,
}

/// All free shapes up to `max_area` attaining the smallest value of the
/// objective, ordered by area and canonical cells, with that value.
pub fn extremal_search(max_area: usize, objective: Objective) -> (i64, Vec<(GridPolygon, PolygonRecord)>) {
    let scored: Vec<(GridPolygon, PolygonRecord)> = enumerate_polyiamonds(max_area, Mode::Free)
        .into_par_iter()
        .map(|p| {
            let r = describe(&p, Mode::Free);
            (p, r)
        })
        .collect();
    let score = |r: &PolygonRecord| match objective {
        Objective::MinPerimSlack => r.slacks.conjecture,
        Objective::MinAreaSlack => r.slacks.area,
    };
    let best = scored.iter().map(|(_, r)| score(r)).min().unwrap_or(0);
    let ties = scored.into_iter().filter(|(_, r)| score(r) == best).collect();
    (best, ties)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(max: usize, mode: Mode) -> Vec<usize> {
        let mut c = vec![0; max];
        for p in enumerate_polyiamonds(max, mode) {
            c[p.area() - 1] += 1;
        }
        c
    }

    #[test]
    fn small_counts() {
        assert_eq!(counts(2, Mode::Free), vec![1, 1]);
        let hexes = enumerate_polyiamonds(6, Mode::Free)
            .iter()
            .filter(|p| p.is_unit_hexagon())
            .count();
        assert_eq!(hexes, 1);
    }

    #[test]
    fn connected_free_counts() {
        // edge-connected polyiamonds, holes allowed
        let sizes: Vec<usize> = connected_levels(8, Mode::Free).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 1, 1, 3, 4, 12, 24, 66]);
    }

    #[test]
    fn order_is_independent_of_threads() {
        let one = with_threads(Some(1), || enumerate_polyiamonds(7, Mode::Fixed));
        let four = with_threads(Some(4), || enumerate_polyiamonds(7, Mode::Fixed));
        assert_eq!(one, four);
    }

    #[test]
    fn cut_lemma_on_small_pieces() {
        let t = GridPolygon::from_cells([Cell::up(0, 0)]).unwrap();
        let d = GridPolygon::from_cells([Cell::down(0, 0)]).unwrap();
        let r = check_cut_lemma(&t, &d, &[Pane::l(0, 0)]).unwrap();
        assert_eq!((r.cyc1, r.cyc2, r.cyc), (1, 1, 1));
        assert_eq!(r.single_pane_holds, Some(true));
        assert!(check_cut_lemma(&t, &d, &[Pane::h(0, 0)]).is_err());
        assert!(check_cut_lemma(&t, &t, &[Pane::l(0, 0)]).is_err());
    }

    #[test]
    fn extremal_small() {
        let (best, ties) = extremal_search(6, Objective::MinPerimSlack);
        assert_eq!(best, 0);
        assert_eq!(ties.len(), 1);
        assert!(ties[0].0.is_unit_hexagon());
    }

    #[test]
    fn small_sweep_is_clean() {
        let report = verify_suite(7);
        assert_eq!(report.exit_code(), 0, "{}", report.summary_json());
        assert_eq!(report.area_equality.len(), 1);
        assert!(report.to_csv().starts_with(VerificationReport::CSV_HEADER));
    }
}
