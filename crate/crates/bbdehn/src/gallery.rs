//! Named benchmark graphs used across examples and tests.
//!
//! The three `interior_dim*_disk` graphs are the smallest members of the
//! quadratic/cubic/quartic family: each flag complex is a triangulated disk
//! with square boundary and interior dimension 0, 1, 2 respectively.

use crate::graph::{self, Graph};

/// Wheel-like disk: a 4-cycle `a,b,e,d` coned off by the center `c`.
/// Flag complex: disk with square boundary and no interior simplices
/// except the hub vertex (interior dimension 0).
pub fn interior_dim0_disk() -> Graph {
    Graph::from_edges(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("a", "d"),
            ("b", "e"),
            ("d", "e"),
            ("b", "c"),
            ("c", "d"),
            ("c", "e"),
            ("c", "a"),
        ],
    )
}

/// Suspension of a path of length 3: disk with square boundary and a single
/// interior edge (interior dimension 1). Apexes `s0,s1`, path `x0..x3`.
pub fn interior_dim1_disk() -> Graph {
    graph::suspension(&graph::path(3))
}

/// Disk with square boundary and two interior triangles (interior
/// dimension 2): an inner square-boundary strip `m1,m2,p,q` framed by the
/// outer square `top,l,bot,r`.
pub fn interior_dim2_disk() -> Graph {
    Graph::from_edges(
        &["l", "m1", "m2", "r", "top", "bot", "p", "q"],
        &[
            ("l", "m1"),
            ("m1", "m2"),
            ("m2", "r"),
            ("top", "l"),
            ("l", "bot"),
            ("bot", "r"),
            ("r", "top"),
            ("p", "l"),
            ("l", "q"),
            ("q", "r"),
            ("r", "p"),
            ("p", "m1"),
            ("m1", "q"),
            ("q", "m2"),
            ("m2", "p"),
            ("top", "p"),
            ("bot", "q"),
        ],
    )
}

/// Two cones (apexes `t`, `u`) over overlapping blocks that contain K4
/// subgraphs, glued along the shared row `L,A,m1,m2,B,R`. The flag complex
/// is not 2-dimensional, but the induced subgraph on `{t,u,A,m1,m2,B}` is
/// the suspension of a path of length 3, so the Dehn function is at least
/// cubic.
pub fn double_k4() -> Graph {
    let upper = ["L", "p2", "p1", "A", "m1", "m2", "B", "q1", "q2", "R"];
    let lower = ["L", "r2", "r1", "A", "m1", "m2", "B", "s1", "s2", "R"];
    let mut edges: Vec<(&str, &str)> = Vec::new();
    for x in upper {
        edges.push(("t", x));
    }
    for x in lower {
        edges.push(("u", x));
    }
    edges.extend([
        // upper-left block (contains K4s with t)
        ("p2", "p1"),
        ("p1", "A"),
        ("A", "L"),
        ("L", "p2"),
        ("L", "p1"),
        // shared middle path
        ("A", "m1"),
        ("m1", "m2"),
        ("m2", "B"),
        // upper-right block
        ("q2", "q1"),
        ("q1", "B"),
        ("B", "R"),
        ("R", "q2"),
        ("R", "q1"),
        // lower-left block
        ("r2", "r1"),
        ("r1", "A"),
        ("L", "r2"),
        ("L", "r1"),
        // lower-right block
        ("s2", "s1"),
        ("s1", "B"),
        ("R", "s2"),
        ("R", "s1"),
    ]);
    let vertices = [
        "t", "u", "L", "A", "m1", "m2", "B", "R", "p1", "p2", "q1", "q2", "r1", "r2", "s1", "s2",
    ];
    Graph::from_edges(&vertices, &edges)
}

/// Octahedron graph (complete tripartite K2,2,2): the flag complex is a
/// 2-sphere, every edge lies in two triangles.
pub fn octahedron() -> Graph {
    let parts = [["a1", "a2"], ["b1", "b2"], ["c1", "c2"]];
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            for x in parts[i] {
                for y in parts[j] {
                    edges.push((x, y));
                }
            }
        }
    }
    Graph::from_edges(&["a1", "a2", "b1", "b2", "c1", "c2"], &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((interior_dim0_disk().vertex_count(), interior_dim0_disk().edge_count()), (5, 8));
        assert_eq!((interior_dim1_disk().vertex_count(), interior_dim1_disk().edge_count()), (6, 11));
        assert_eq!((interior_dim2_disk().vertex_count(), interior_dim2_disk().edge_count()), (8, 17));
        assert_eq!((double_k4().vertex_count(), double_k4().edge_count()), (16, 41));
        assert_eq!((octahedron().vertex_count(), octahedron().edge_count()), (6, 12));
    }
}
