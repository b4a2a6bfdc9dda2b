//! Small named polygons and graphs used by tests, benches and the CLI.

use crate::grid::{Cell, Orient, Vertex};
use crate::plabic::{Color, End, PlabicGraph};
use crate::polygon::{glue, GridPolygon};

fn from_triples(cells: &[(i32, i32, Orient)]) -> GridPolygon {
    GridPolygon::from_cells(cells.iter().map(|&(i, j, o)| Cell { i, j, orient: o }))
        .expect("fixture cells form a grid polygon")
}

/// One up cell.
pub fn triangle() -> GridPolygon {
    GridPolygon::from_cells([Cell::up(0, 0)]).unwrap()
}

/// `U(0,0)` and `D(0,0)`.
pub fn rhombus() -> GridPolygon {
    GridPolygon::from_cells([Cell::up(0, 0), Cell::down(0, 0)]).unwrap()
}

/// The six cells around `p(1,1)`.
pub fn hexagon() -> GridPolygon {
    GridPolygon::from_cells(Vertex::new(1, 1).incident_cells()).unwrap()
}

/// A tree of `k ≥ 1` unit hexagons, each new hexagon glued onto the first
/// boundary pane that admits it.
pub fn hexagon_tree(k: usize) -> GridPolygon {
    let h = hexagon();
    let mut tree = h.clone();
    for step in 1..k {
        let n = tree.perim();
        tree = (0..n)
            .find_map(|s| {
                // spread attachments around the boundary
                let p1 = tree.boundary()[(s + step * 5) % n];
                glue(&tree, p1, &h, h.boundary()[0]).ok()
            })
            .expect("some boundary pane of a hexagon tree admits a new hexagon");
    }
    tree
}

use Orient::{D, U};

/// A 9-cell polygon with nine boundary panes whose billiards permutation is
/// `(1 7 4 3 5 9)(2 6 8)` with the canonical labelling.
pub fn nine_pane_polygon() -> GridPolygon {
    from_triples(NINE_PANE_CELLS)
}

/// A 69-cell polygon with 33 boundary panes and four cycles of sizes 18, 6,
/// 5 and 4; see [`THIRTY_THREE_PANE_CYCLES`].
pub fn thirty_three_pane_polygon() -> GridPolygon {
    from_triples(THIRTY_THREE_PANE_CELLS)
}

/// Billiards permutation of [`thirty_three_pane_polygon`] in 1-based cycle
/// notation.
pub const THIRTY_THREE_PANE_CYCLES: &str =
    "(1 3 32 26 6 30 2 33 25 12 14 9 21 19 29 28 4 31)(5 24 13 10 20 27)(7 22 23 15 17)(8 11 18 16)";

/// Primitive 16-cell polygon with three cycles, below `area ≥ 6·cyc`.
pub fn exceptional_sixteen() -> GridPolygon {
    from_triples(EXCEPTIONAL_SIXTEEN_CELLS)
}

/// Two primitive polygons with perimeter 18 and five cycles, so
/// `perim = 4·cyc − 2` without being hexagon trees.
pub fn perimeter_eighteen_pair() -> [GridPolygon; 2] {
    [from_triples(PERIM_18_A_CELLS), from_triples(PERIM_18_B_CELLS)]
}

const NINE_PANE_CELLS: &[(i32, i32, Orient)] = &[
    (0, -1, D), (1, -2, D), (1, -1, U), (1, -1, D), (2, -2, U), (2, -2, D), (2, -1, U),
    (2, -1, D), (2, 0, U),
];

const THIRTY_THREE_PANE_CELLS: &[(i32, i32, Orient)] = &[
    (0, -3, D), (0, -2, U), (0, -2, D), (0, -1, U), (0, -1, D), (1, -4, D), (1, -3, U),
    (1, -3, D), (1, -2, U), (1, -2, D), (1, -1, U), (2, -5, U), (2, -5, D), (2, -4, U),
    (2, -4, D), (2, -3, U), (3, -6, D), (3, -5, U), (3, -5, D), (3, -4, U), (3, -4, D),
    (4, -6, U), (4, -6, D), (4, -5, U), (4, -5, D), (4, -4, U), (4, -3, D), (4, -2, U),
    (4, -2, D), (4, -1, U), (4, -1, D), (5, -6, U), (5, -6, D), (5, -5, U), (5, -5, D),
    (5, -4, U), (5, -4, D), (5, -3, U), (5, -3, D), (5, -2, U), (5, -2, D), (5, -1, U),
    (5, -1, D), (6, -6, U), (6, -6, D), (6, -5, U), (6, -5, D), (6, -4, U), (6, -4, D),
    (6, -3, U), (6, -3, D), (6, -2, U), (6, -2, D), (6, -1, U), (7, -7, D), (7, -6, U),
    (7, -6, D), (7, -5, U), (7, -5, D), (7, -4, U), (7, -4, D), (7, -3, U), (7, -3, D),
    (8, -6, U), (8, -6, D), (8, -5, U), (8, -4, U), (8, -4, D), (8, -3, U),
];

const EXCEPTIONAL_SIXTEEN_CELLS: &[(i32, i32, Orient)] = &[
    (0, 0, D), (0, 1, U), (0, 1, D), (0, 2, U), (0, 2, D), (1, -1, D), (1, 0, U), (1, 0, D),
    (1, 1, U), (1, 1, D), (1, 2, U), (2, -1, U), (2, -1, D), (2, 0, U), (2, 0, D), (2, 1, U),
];

const PERIM_18_A_CELLS: &[(i32, i32, Orient)] = &[
    (0, 0, D), (0, 1, U), (0, 1, D), (0, 2, U), (0, 2, D), (1, -2, D), (1, -1, U), (1, -1, D),
    (1, 0, U), (1, 0, D), (1, 1, U), (1, 1, D), (1, 2, U), (2, -4, D), (2, -3, U), (2, -3, D),
    (2, -2, U), (2, -2, D), (2, -1, U), (2, -1, D), (2, 0, U), (2, 0, D), (2, 1, U), (3, -5, D),
    (3, -4, U), (3, -4, D), (3, -3, U), (3, -3, D), (3, -2, U), (3, -2, D), (3, -1, U),
    (4, -5, U), (4, -5, D), (4, -4, U), (4, -4, D), (4, -3, U),
];

const PERIM_18_B_CELLS: &[(i32, i32, Orient)] = &[
    (0, 0, D), (0, 1, U), (0, 1, D), (0, 2, U), (0, 2, D), (0, 3, U), (0, 3, D), (1, -1, D),
    (1, 0, U), (1, 0, D), (1, 1, U), (1, 1, D), (1, 2, U), (1, 2, D), (1, 3, U), (1, 3, D),
    (2, -2, D), (2, -1, U), (2, -1, D), (2, 0, U), (2, 0, D), (2, 1, U), (2, 1, D), (2, 2, U),
    (2, 2, D), (2, 3, U), (3, -2, U), (3, -2, D), (3, -1, U), (3, -1, D), (3, 0, U), (3, 0, D),
    (3, 1, U), (3, 1, D), (3, 2, U), (3, 2, D), (4, -2, U), (4, -2, D), (4, -1, U), (4, -1, D),
    (4, 0, U), (4, 0, D), (4, 1, U), (4, 1, D), (4, 2, U), (5, -1, U), (5, -1, D), (5, 0, U),
];

/// A 7-vertex trivalent plabic graph with five boundary points whose trip
/// permutation is `i ↦ i + 2 (mod 5)`.
pub fn five_point_graph() -> PlabicGraph {
    use Color::{Black, White};
    let v = End::Vertex;
    let b = End::Boundary;
    // vertices: 0 top-left, 1 top-middle, 2 top-center, 3 top-right,
    // 4 bottom-left, 5 bottom-center, 6 bottom-right
    let edges = vec![
        [b(0), v(0)],
        [b(1), v(1)],
        [b(2), v(3)],
        [b(3), v(6)],
        [b(4), v(4)],
        [v(0), v(1)],
        [v(1), v(2)],
        [v(2), v(3)],
        [v(4), v(5)],
        [v(5), v(6)],
        [v(0), v(4)],
        [v(2), v(5)],
        [v(3), v(6)],
    ];
    let rotation = vec![
        vec![0, 5, 10],
        vec![5, 1, 6],
        vec![6, 7, 11],
        vec![7, 2, 12],
        vec![10, 8, 4],
        vec![8, 11, 9],
        vec![9, 12, 3],
    ];
    let colors = vec![Black, White, White, Black, White, Black, White];
    PlabicGraph::new(5, colors, edges, rotation).expect("fixture graph is trivalent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiards::BilliardsSystem;

    #[test]
    fn five_point_trips() {
        let g = five_point_graph();
        assert_eq!(g.trip(0).unwrap().end, 2);
        assert_eq!(g.trip(4).unwrap().end, 1);
        assert_eq!(g.trip_permutation().unwrap().to_string(), "(1 3 5 2 4)");
    }

    #[test]
    fn nine_panes() {
        let p = nine_pane_polygon();
        let s = BilliardsSystem::analyze(&p).unwrap();
        assert_eq!(p.perim(), 9);
        assert_eq!(s.permutation().to_string(), "(1 7 4 3 5 9)(2 6 8)");
    }

    #[test]
    fn thirty_three_panes() {
        let p = thirty_three_pane_polygon();
        let s = BilliardsSystem::analyze(&p).unwrap();
        assert_eq!(p.perim(), 33);
        assert_eq!(s.permutation().cycle_type(), vec![18, 6, 5, 4]);
        assert_eq!(s.permutation().to_string(), THIRTY_THREE_PANE_CYCLES);
    }

    #[test]
    fn sixteen_cells_three_cycles() {
        let p = exceptional_sixteen();
        assert!(p.is_primitive());
        assert_eq!((p.area(), BilliardsSystem::analyze(&p).unwrap().cyc()), (16, 3));
    }

    #[test]
    fn perimeter_eighteen() {
        for p in perimeter_eighteen_pair() {
            let cyc = BilliardsSystem::analyze(&p).unwrap().cyc();
            assert_eq!((p.perim(), cyc), (18, 5));
            assert!(p.is_primitive() && !p.is_tree_of_unit_hexagons());
        }
    }

    #[test]
    fn hexagon_trees() {
        for k in 1..=6 {
            let t = hexagon_tree(k);
            let cyc = BilliardsSystem::analyze(&t).unwrap().cyc();
            assert_eq!((cyc, t.area(), t.perim()), (k + 1, 6 * k, 4 * k + 2));
            assert!(t.is_tree_of_unit_hexagons());
        }
    }
}
