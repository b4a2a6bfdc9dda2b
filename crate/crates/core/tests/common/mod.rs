//! An enumeration oracle that shares no code with the library.
//!
//! Cells are tripled centroids: `U(i,j)` is `(3i+1, 3j+1)` and `D(i,j)` is
//! `(3i+2, 3j+2)`. Two cells share a pane exactly when their difference has
//! lattice norm `x² + xy + y² = 3` and both land on a cell class mod 3.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use trigrid::{GridPolygon, Orient};

pub type C3 = (i32, i32);

/// The six offsets of norm 3, counterclockwise from 30°.
pub const FAN: [C3; 6] = [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)];

pub fn is_cell((x, y): C3) -> bool {
    matches!((x.rem_euclid(3), y.rem_euclid(3)), (1, 1) | (2, 2))
}

pub fn neighbours(c: C3) -> impl Iterator<Item = C3> {
    FAN.iter().map(move |&(dx, dy)| (c.0 + dx, c.1 + dy)).filter(|&n| is_cell(n))
}

fn order_key(c: C3) -> (i32, i32) {
    (c.1, c.0)
}

/// Every edge-connected cell set of size `≤ max` up to translation, holes
/// and pinches included, grouped by size. Each set is sorted.
pub fn redelmeier(max: usize) -> Vec<Vec<Vec<C3>>> {
    let mut out = vec![Vec::new(); max + 1];
    // the least cell of a set in (y, x) order is either class; translate it to the origin of its class
    for origin in [(1, 1), (2, 2)] {
        let mut current = Vec::new();
        let mut seen: HashSet<C3> = HashSet::from([origin]);
        grow(vec![origin], &mut current, &mut seen, origin, max, &mut out);
    }
    for level in &mut out {
        level.sort();
    }
    out
}

fn grow(
    mut untried: Vec<C3>,
    current: &mut Vec<C3>,
    seen: &mut HashSet<C3>,
    origin: C3,
    max: usize,
    out: &mut [Vec<Vec<C3>>],
) {
    while let Some(c) = untried.pop() {
        current.push(c);
        let mut shape = current.clone();
        shape.sort();
        out[current.len()].push(shape);
        if current.len() < max {
            let mut added = Vec::new();
            for n in neighbours(c) {
                if order_key(n) > order_key(origin) && seen.insert(n) {
                    added.push(n);
                }
            }
            let mut next = untried.clone();
            next.extend(&added);
            grow(next, current, seen, origin, max, out);
            for n in added {
                seen.remove(&n);
            }
        }
        current.pop();
    }
}

/// No holes (the complement is connected inside a padded box) and no vertex
/// whose incident cells form more than one run.
pub fn is_valid(cells: &[C3]) -> bool {
    let set: HashSet<C3> = cells.iter().copied().collect();
    // whole rhombi only, so the box itself is connected
    let lo = |v: i32| 3 * v.div_euclid(3) - 6;
    let hi = |v: i32| 3 * v.div_euclid(3) + 8;
    let (x0, x1) = (lo(cells.iter().map(|c| c.0).min().unwrap()), hi(cells.iter().map(|c| c.0).max().unwrap()));
    let (y0, y1) = (lo(cells.iter().map(|c| c.1).min().unwrap()), hi(cells.iter().map(|c| c.1).max().unwrap()));
    let inside = |c: C3| c.0 >= x0 && c.0 <= x1 && c.1 >= y0 && c.1 <= y1;
    let mut empty = 0usize;
    for x in x0..=x1 {
        for y in y0..=y1 {
            if is_cell((x, y)) && !set.contains(&(x, y)) {
                empty += 1;
            }
        }
    }
    let start = (x0 + 1, y0 + 1);
    let mut reached = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        for n in neighbours(c) {
            if inside(n) && !set.contains(&n) && reached.insert(n) {
                stack.push(n);
            }
        }
    }
    if reached.len() != empty {
        return false;
    }
    // vertices sit at multiples of 3; each cell has three
    let mut vertices = BTreeSet::new();
    for &(x, y) in cells {
        for &(dx, dy) in &FAN {
            let v = (x - dx, y - dy);
            if v.0.rem_euclid(3) == 0 && v.1.rem_euclid(3) == 0 {
                vertices.insert(v);
            }
        }
    }
    vertices.iter().all(|&(vx, vy)| {
        let filled: Vec<bool> = FAN.iter().map(|&(dx, dy)| set.contains(&(vx + dx, vy + dy))).collect();
        let runs = (0..6).filter(|&k| filled[k] && !filled[(k + 5) % 6]).count();
        runs <= 1
    })
}

/// The twelve point symmetries as integer matrices on tripled coordinates,
/// generated by a 60° rotation and a reflection.
pub fn point_group() -> Vec<[[i32; 2]; 2]> {
    let rot = [[0, -1], [1, 1]];
    let flip = [[1, 1], [0, -1]];
    let mul = |a: [[i32; 2]; 2], b: [[i32; 2]; 2]| {
        let mut m = [[0; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        m
    };
    let mut out = Vec::new();
    let mut r = [[1, 0], [0, 1]];
    for _ in 0..6 {
        out.push(r);
        out.push(mul(r, flip));
        r = mul(rot, r);
    }
    let distinct: BTreeSet<_> = out.iter().collect();
    assert_eq!(distinct.len(), 12);
    out
}

fn apply(m: &[[i32; 2]; 2], (x, y): C3) -> C3 {
    (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
}

/// Translate so the least cell lands in the base triangle pair, then sort.
pub fn normalise(cells: &[C3]) -> Vec<C3> {
    let least = *cells.iter().min_by_key(|&&c| order_key(c)).unwrap();
    let (tx, ty) = (3 * least.0.div_euclid(3), 3 * least.1.div_euclid(3));
    let mut out: Vec<C3> = cells.iter().map(|&(x, y)| (x - tx, y - ty)).collect();
    out.sort();
    out
}

pub fn images(cells: &[C3]) -> BTreeSet<Vec<C3>> {
    point_group()
        .iter()
        .map(|m| normalise(&cells.iter().map(|&c| apply(m, c)).collect::<Vec<_>>()))
        .collect()
}

pub fn free_canonical(cells: &[C3]) -> Vec<C3> {
    images(cells).into_iter().next().unwrap()
}

pub fn from_polygon(p: &GridPolygon) -> Vec<C3> {
    let mut out: Vec<C3> = p
        .cells()
        .iter()
        .map(|c| match c.orient {
            Orient::U => (3 * c.i + 1, 3 * c.j + 1),
            Orient::D => (3 * c.i + 2, 3 * c.j + 2),
        })
        .collect();
    out.sort();
    out
}

/// Valid shapes by area, up to translation and up to all symmetries.
pub struct OracleCounts {
    pub fixed: BTreeMap<usize, BTreeSet<Vec<C3>>>,
    pub free: BTreeMap<usize, BTreeSet<Vec<C3>>>,
}

pub fn oracle(max: usize) -> OracleCounts {
    let mut fixed = BTreeMap::new();
    let mut free = BTreeMap::new();
    for (area, level) in redelmeier(max).into_iter().enumerate().skip(1) {
        let valid: BTreeSet<Vec<C3>> = level.into_iter().filter(|s| is_valid(s)).map(|s| normalise(&s)).collect();
        free.insert(area, valid.iter().map(|s| free_canonical(s)).collect());
        fixed.insert(area, valid);
    }
    OracleCounts { fixed, free }
}
