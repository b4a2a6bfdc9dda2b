//! Plabic graphs and trips.
//!
//! A [`PlabicGraph`] stores the planar embedding as a clockwise rotation of
//! edge ids at every vertex. A trip turns right at black vertices (leaves by
//! the edge preceding the arrival edge in clockwise order) and left at white
//! ones (the following edge).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::PlabicError;
use crate::grid::{Orient, Pane, PaneType};
use crate::perm::BilliardsPermutation;
use crate::polygon::GridPolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// One end of an edge: an internal vertex or a marked boundary point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Vertex(usize),
    Boundary(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlabicGraph {
    boundary_count: usize,
    colors: Vec<Color>,
    /// Incident edge ids of each vertex, clockwise.
    rotation: Vec<Vec<usize>>,
    edges: Vec<[End; 2]>,
    /// Edge attached to each boundary point.
    boundary_edge: Vec<usize>,
}

/// A finished trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trip {
    pub end: usize,
    pub path: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    /// Right at black, left at white.
    Road,
    /// The mirror rule, used to walk trips backwards.
    Reversed,
}

impl PlabicGraph {
    /// Build and validate a trivalent plabic graph.
    pub fn new(
        boundary_count: usize,
        colors: Vec<Color>,
        edges: Vec<[End; 2]>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<PlabicGraph, PlabicError> {
        if colors.len() != rotation.len() {
            return Err(PlabicError::Malformed(format!(
                "{} colors for {} rotations",
                colors.len(),
                rotation.len()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() != 3 {
                return Err(PlabicError::NonTrivalent {
                    vertex: v,
                    degree: rot.len(),
                });
            }
        }
        let mut boundary_edge = vec![usize::MAX; boundary_count];
        let mut degree = vec![0usize; colors.len()];
        for (e, ends) in edges.iter().enumerate() {
            if ends[0] == ends[1] {
                return Err(PlabicError::Malformed(format!("edge {e} is a loop")));
            }
            for end in ends {
                match *end {
                    End::Vertex(v) => {
                        let rot = rotation
                            .get(v)
                            .ok_or_else(|| PlabicError::Malformed(format!("edge {e} names vertex {v}")))?;
                        if rot.iter().filter(|&&x| x == e).count() != 1 {
                            return Err(PlabicError::Malformed(format!(
                                "edge {e} missing from the rotation of vertex {v}"
                            )));
                        }
                        degree[v] += 1;
                    }
                    End::Boundary(b) => {
                        let slot = boundary_edge
                            .get_mut(b)
                            .ok_or(PlabicError::BadBoundaryIndex(b))?;
                        if *slot != usize::MAX {
                            return Err(PlabicError::Malformed(format!("boundary point {b} has two edges")));
                        }
                        *slot = e;
                    }
                }
            }
        }
        if let Some(b) = boundary_edge.iter().position(|&e| e == usize::MAX) {
            return Err(PlabicError::Malformed(format!("boundary point {b} has no edge")));
        }
        for (v, rot) in rotation.iter().enumerate() {
            if degree[v] != 3 || rot.iter().any(|&e| e >= edges.len()) {
                return Err(PlabicError::NonTrivalent {
                    vertex: v,
                    degree: degree[v],
                });
            }
        }
        Ok(PlabicGraph {
            boundary_count,
            colors,
            rotation,
            edges,
            boundary_edge,
        })
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[[End; 2]] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn internal_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| matches!(e, [End::Vertex(_), End::Vertex(_)]))
            .count()
    }

    fn walk(&self, start: usize, rule: Rule) -> Result<Trip, PlabicError> {
        let mut edge = *self
            .boundary_edge
            .get(start)
            .ok_or(PlabicError::BadBoundaryIndex(start))?;
        let mut from = End::Boundary(start);
        let mut path = vec![edge];
        let limit = 2 * self.edges.len();
        loop {
            let ends = self.edges[edge];
            let to = if ends[0] == from { ends[1] } else { ends[0] };
            let v = match to {
                End::Boundary(b) => return Ok(Trip { end: b, path }),
                End::Vertex(v) => v,
            };
            let rot = &self.rotation[v];
            let pos = rot.iter().position(|&x| x == edge).unwrap();
            let right = match (self.colors[v], rule) {
                (Color::Black, Rule::Road) | (Color::White, Rule::Reversed) => true,
                (Color::White, Rule::Road) | (Color::Black, Rule::Reversed) => false,
            };
            let d = rot.len();
            edge = if right { rot[(pos + d - 1) % d] } else { rot[(pos + 1) % d] };
            from = End::Vertex(v);
            path.push(edge);
            if path.len() > limit {
                return Err(PlabicError::InfiniteTrip { start });
            }
        }
    }

    /// Follow the rules of the road from boundary point `i` (0-based).
    pub fn trip(&self, i: usize) -> Result<Trip, PlabicError> {
        self.walk(i, Rule::Road)
    }

    /// Walk with the turning rule mirrored; undoes [`PlabicGraph::trip`].
    pub fn reverse_trip(&self, i: usize) -> Result<Trip, PlabicError> {
        self.walk(i, Rule::Reversed)
    }

    pub fn trip_permutation(&self) -> Result<BilliardsPermutation, PlabicError> {
        let next = (0..self.boundary_count)
            .map(|i| self.trip(i).map(|t| t.end))
            .collect::<Result<Vec<_>, _>>()?;
        BilliardsPermutation::from_next(next).map_err(|e| PlabicError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let doc = PlabicJson {
            schema: SCHEMA.to_string(),
            boundary: self.boundary_count,
            vertices: self
                .colors
                .iter()
                .zip(&self.rotation)
                .map(|(&color, rot)| VertexJson {
                    color,
                    edges: rot.clone(),
                })
                .collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<PlabicGraph, PlabicError> {
        let doc: PlabicJson =
            serde_json::from_str(text).map_err(|e| PlabicError::Malformed(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(PlabicError::Malformed(format!("unknown schema {:?}", doc.schema)));
        }
        let (colors, rotation) = doc.vertices.into_iter().map(|v| (v.color, v.edges)).unzip();
        PlabicGraph::new(doc.boundary, colors, doc.edges, rotation)
    }

    /// Graphviz rendering; each vertex carries its clockwise edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plabic {\n  node [shape=circle, label=\"\", width=0.2];\n");
        for (v, color) in self.colors.iter().enumerate() {
            let fill = match color {
                Color::Black => "black",
                Color::White => "white",
            };
            let rot: Vec<String> = self.rotation[v].iter().map(|e| format!("e{e}")).collect();
            let _ = writeln!(
                out,
                "  v{v} [style=filled, fillcolor={fill}, rotation=\"{}\"];",
                rot.join(" ")
            );
        }
        for b in 0..self.boundary_count {
            let _ = writeln!(out, "  b{} [shape=plaintext, label=\"{}\"];", b + 1, b + 1);
        }
        let name = |end: End| match end {
            End::Vertex(v) => format!("v{v}"),
            End::Boundary(b) => format!("b{}", b + 1),
        };
        for (e, ends) in self.edges.iter().enumerate() {
            let _ = writeln!(out, "  {} -- {} [id=e{e}];", name(ends[0]), name(ends[1]));
        }
        out.push_str("}\n");
        out
    }
}

const SCHEMA: &str = "plabic-v1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlabicJson {
    schema: String,
    boundary: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<[End; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    color: Color,
    edges: Vec<usize>,
}

/// Sides of a cell in clockwise order as seen from its center.
fn clockwise_sides(orient: Orient) -> [PaneType; 3] {
    match orient {
        // right side (up-right), bottom, left side (up-left)
        Orient::U => [PaneType::L, PaneType::H, PaneType::R],
        // top, right side (down-right), left side (down-left)
        Orient::D => [PaneType::H, PaneType::R, PaneType::L],
    }
}

/// The dual plabic graph: a black vertex per up cell, a white vertex per down
/// cell, an edge across every interior pane, and boundary point `k` joined to
/// the cell inside boundary pane `k`. Edge ids `0..n` are the boundary edges.
pub fn dual(polygon: &GridPolygon) -> PlabicGraph {
    let n = polygon.perim();
    let cells = polygon.cells();
    let index: HashMap<_, _> = cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut edge_of: HashMap<Pane, usize> = HashMap::new();
    let mut edges = Vec::with_capacity(n + polygon.interior_panes().len());
    for (k, &pane) in polygon.boundary().iter().enumerate() {
        edges.push([End::Boundary(k), End::Vertex(index[&polygon.interior_cell(k)])]);
        edge_of.insert(pane, k);
    }
    for pane in polygon.interior_panes() {
        let (u, d) = pane.cells();
        edge_of.insert(pane, edges.len());
        edges.push([End::Vertex(index[&u]), End::Vertex(index[&d])]);
    }
    let colors = cells
        .iter()
        .map(|c| match c.orient {
            Orient::U => Color::Black,
            Orient::D => Color::White,
        })
        .collect();
    let rotation = cells
        .iter()
        .map(|c| {
            clockwise_sides(c.orient)
                .iter()
                .map(|&t| edge_of[&c.pane_of_type(t)])
                .collect()
        })
        .collect();
    PlabicGraph::new(n, colors, edges, rotation).expect("duals of grid polygons are trivalent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiards::billiards_permutation;
    use crate::grid::{Cell, Vertex};

    #[test]
    fn triangle_dual() {
        let t = GridPolygon::from_cells([Cell::up(0, 0)]).unwrap();
        let g = dual(&t);
        assert_eq!((g.vertex_count(), g.boundary_count()), (1, 3));
        assert_eq!(g.colors(), &[Color::Black]);
        // bottom boundary point exits on the L side
        let end = g.trip(0).unwrap().end;
        assert_eq!(t.boundary()[end], Pane::l(0, 0));
        assert_eq!(g.trip_permutation().unwrap(), billiards_permutation(&t).unwrap());
    }

    #[test]
    fn rhombus_dual() {
        let r = GridPolygon::from_cells([Cell::up(0, 0), Cell::down(0, 0)]).unwrap();
        let g = dual(&r);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.internal_edge_count(), 1);
        assert_eq!(g.boundary_count(), 4);
        let dot = g.to_dot();
        assert_eq!(dot.matches("fillcolor").count(), 2);
        assert_eq!(dot.matches("v0 -- v1").count() + dot.matches("v1 -- v0").count(), 1);
    }

    #[test]
    fn hexagon_dual_matches_beams() {
        let h = GridPolygon::from_cells(Vertex::new(1, 1).incident_cells()).unwrap();
        let g = dual(&h);
        let pi = g.trip_permutation().unwrap();
        assert_eq!(pi.cycle_type(), vec![3, 3]);
        assert_eq!(pi, billiards_permutation(&h).unwrap());
    }

    #[test]
    fn reverse_trips_undo_trips() {
        let h = GridPolygon::from_cells(Vertex::new(1, 1).incident_cells()).unwrap();
        let g = dual(&h);
        for i in 0..g.boundary_count() {
            let j = g.trip(i).unwrap().end;
            assert_eq!(g.reverse_trip(j).unwrap().end, i);
        }
    }

    #[test]
    fn json_round_trip() {
        let t = GridPolygon::from_cells([Cell::up(0, 0)]).unwrap();
        let g = dual(&t);
        let text = g.to_json();
        assert!(text.contains("plabic-v1"));
        let back = PlabicGraph::from_json(&text).unwrap();
        assert_eq!(back, g);
        assert!(PlabicGraph::from_json(&text.replace("plabic-v1", "plabic-v0")).is_err());
    }

    #[test]
    fn rejects_non_trivalent() {
        let err = PlabicGraph::new(
            2,
            vec![Color::Black],
            vec![[End::Boundary(0), End::Vertex(0)], [End::Boundary(1), End::Vertex(0)]],
            vec![vec![0, 1]],
        )
        .unwrap_err();
        assert_eq!(err, PlabicError::NonTrivalent { vertex: 0, degree: 2 });
    }
}
