//! Recognition of 2-dimensional triangulated disks and their interior
//! structure.
//!
//! The test is the standard combinatorial one: a pure 2-complex in which
//! every edge lies in at most two triangles and every vertex link is a
//! single simple path or cycle is a compact surface with boundary; if it is
//! also connected with exactly one boundary cycle and Euler characteristic
//! one, it is a disk. Gates run in a fixed order so rejection reasons are
//! deterministic.

use serde::Serialize;

use crate::flag::SimplicialComplex;
use crate::graph::{Graph, GraphError};

/// Why a complex is not a 2-dimensional triangulated disk. Names the first
/// failed gate, in this fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiskRejection {
    HasK4,
    NotPure2Dim,
    EdgeInThreeTriangles,
    BadVertexLink,
    Disconnected,
    NoBoundary,
    MultipleBoundaryCycles,
    WrongEuler,
}

/// Proof object that a complex is a 2-dimensional triangulated disk.
///
/// A simplex is interior when its closure avoids the boundary cycle; here
/// that reduces to "all its vertices are off the boundary".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCertificate {
    /// Boundary as a cyclic vertex sequence, starting at the least boundary
    /// vertex and moving toward its lesser boundary neighbor.
    pub boundary_cycle: Vec<usize>,
    pub interior_vertices: Vec<usize>,
    pub interior_edges: Vec<[usize; 2]>,
    pub interior_triangles: Vec<[usize; 3]>,
}

impl DiskCertificate {
    /// Largest dimension of an interior simplex, 0 when none exist.
    pub fn interior_dimension(&self) -> u8 {
        if !self.interior_triangles.is_empty() {
            2
        } else if !self.interior_edges.is_empty() {
            1
        } else {
            0
        }
    }

    /// True when the boundary cycle is a square.
    pub fn boundary_is_square(&self) -> bool {
        self.boundary_cycle.len() == 4
    }
}

/// Largest dimension of an interior simplex of the certified disk.
pub fn interior_dimension(cert: &DiskCertificate) -> u8 {
    cert.interior_dimension()
}

/// Whether the certified disk has a square boundary.
pub fn boundary_is_square(cert: &DiskCertificate) -> bool {
    cert.boundary_is_square()
}

/// Link of `v`: the graph on its neighbors whose edges are the triangles
/// through `v`.
pub fn vertex_link(c: &SimplicialComplex, v: usize) -> Result<Graph, GraphError> {
    if v >= c.vertex_count() {
        return Err(GraphError::UnknownVertexId(v));
    }
    let mut nbrs: Vec<usize> = Vec::new();
    for [a, b] in c.edges() {
        if *a == v {
            nbrs.push(*b);
        } else if *b == v {
            nbrs.push(*a);
        }
    }
    nbrs.sort_unstable();
    let mut g = Graph::new();
    for &u in &nbrs {
        g.add_vertex(c.label(u))?;
    }
    let pos = |u: usize| nbrs.binary_search(&u).expect("neighbor of v");
    for t in c.triangles() {
        if t.contains(&v) {
            let rest: Vec<usize> = t.iter().copied().filter(|&x| x != v).collect();
            g.add_edge(pos(rest[0]), pos(rest[1]))?;
        }
    }
    Ok(g)
}

/// Decides whether the complex is a 2-dimensional triangulated disk,
/// producing either a certificate or the first failed gate.
pub fn recognize_disk(c: &SimplicialComplex) -> Result<DiskCertificate, DiskRejection> {
    if c.has_k4() {
        return Err(DiskRejection::HasK4);
    }

    // pure 2-dimensional: every vertex and edge lies in a triangle
    let n = c.vertex_count();
    if c.triangles().is_empty() {
        return Err(DiskRejection::NotPure2Dim);
    }
    let mut edge_tri_count = vec![0usize; c.edges().len()];
    let mut vertex_in_triangle = vec![false; n];
    let edge_index = |u: usize, v: usize| -> usize {
        c.edges()
            .binary_search(&[u.min(v), u.max(v)])
            .expect("triangle face is an edge")
    };
    for t in c.triangles() {
        for &v in t {
            vertex_in_triangle[v] = true;
        }
        edge_tri_count[edge_index(t[0], t[1])] += 1;
        edge_tri_count[edge_index(t[0], t[2])] += 1;
        edge_tri_count[edge_index(t[1], t[2])] += 1;
    }
    if !vertex_in_triangle.iter().all(|&b| b) || edge_tri_count.iter().any(|&k| k == 0) {
        return Err(DiskRejection::NotPure2Dim);
    }

    if edge_tri_count.iter().any(|&k| k > 2) {
        return Err(DiskRejection::EdgeInThreeTriangles);
    }

    for v in 0..n {
        let link = vertex_link(c, v).expect("vertex of complex");
        if !link_is_path_or_cycle(&link) {
            return Err(DiskRejection::BadVertexLink);
        }
    }

    if !c.is_connected() {
        return Err(DiskRejection::Disconnected);
    }

    let boundary_edges: Vec<[usize; 2]> = c
        .edges()
        .iter()
        .zip(&edge_tri_count)
        .filter(|(_, &k)| k == 1)
        .map(|(e, _)| *e)
        .collect();
    if boundary_edges.is_empty() {
        return Err(DiskRejection::NoBoundary);
    }
    let cycle = match single_boundary_cycle(&boundary_edges) {
        Some(cycle) => cycle,
        None => return Err(DiskRejection::MultipleBoundaryCycles),
    };

    if c.euler_characteristic() != 1 {
        return Err(DiskRejection::WrongEuler);
    }

    let on_boundary: std::collections::BTreeSet<usize> = cycle.iter().copied().collect();
    let interior_vertices: Vec<usize> = (0..n).filter(|v| !on_boundary.contains(v)).collect();
    let interior_edges: Vec<[usize; 2]> = c
        .edges()
        .iter()
        .filter(|[u, v]| !on_boundary.contains(u) && !on_boundary.contains(v))
        .copied()
        .collect();
    let interior_triangles: Vec<[usize; 3]> = c
        .triangles()
        .iter()
        .filter(|t| t.iter().all(|v| !on_boundary.contains(v)))
        .copied()
        .collect();
    Ok(DiskCertificate {
        boundary_cycle: cycle,
        interior_vertices,
        interior_edges,
        interior_triangles,
    })
}

fn link_is_path_or_cycle(link: &Graph) -> bool {
    let n = link.vertex_count();
    let e = link.edge_count();
    if n == 0 || !link.is_connected() {
        return false;
    }
    let degrees: Vec<usize> = (0..n).map(|v| link.degree(v)).collect();
    if degrees.iter().any(|&d| d > 2) {
        return false;
    }
    let leaves = degrees.iter().filter(|&&d| d <= 1).count();
    // connected with max degree 2: either a path (two endpoints, e = n-1)
    // or a cycle (no endpoints, e = n)
    (leaves == 2 && e + 1 == n && n >= 2) || (leaves == 0 && e == n && n >= 3)
}

/// If the boundary edges form exactly one simple cycle, returns it as a
/// vertex sequence starting at the least vertex, walking toward its lesser
/// neighbor on the cycle.
fn single_boundary_cycle(boundary_edges: &[[usize; 2]]) -> Option<Vec<usize>> {
    use std::collections::BTreeMap;
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for [u, v] in boundary_edges {
        adj.entry(*u).or_default().push(*v);
        adj.entry(*v).or_default().push(*u);
    }
    if adj.values().any(|ns| ns.len() != 2) {
        return None;
    }
    let &start = adj.keys().next()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().expect("two neighbors");
    while cur != start {
        cycle.push(cur);
        let ns = &adj[&cur];
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() == boundary_edges.len() {
        Some(cycle)
    } else {
        None // more than one cycle
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::build_flag_complex;
    use crate::gallery;
    use crate::graph::{self, Graph};

    fn disk_of(g: &Graph) -> DiskCertificate {
        recognize_disk(&build_flag_complex(g)).unwrap()
    }

    #[test]
    fn link_examples() {
        let c = build_flag_complex(&graph::wheel(5));
        let hub = vertex_link(&c, 0).unwrap();
        assert_eq!(hub.vertex_count(), 5);
        assert_eq!(hub.edge_count(), 5);
        assert!((0..5).all(|v| hub.degree(v) == 2)); // C5

        let c = build_flag_complex(&gallery::interior_dim1_disk());
        let apex = vertex_link(&c, 0).unwrap();
        assert_eq!(apex.vertex_count(), 4);
        assert_eq!(apex.edge_count(), 3); // path on 4 vertices

        let c = build_flag_complex(&graph::complete(3));
        let corner = vertex_link(&c, 0).unwrap();
        assert_eq!((corner.vertex_count(), corner.edge_count()), (2, 1));

        assert!(vertex_link(&c, 99).is_err());
    }

    #[test]
    fn dim0_disk_certificate() {
        let g = gallery::interior_dim0_disk();
        let cert = disk_of(&g);
        let labels: Vec<&str> = cert.boundary_cycle.iter().map(|&v| g.label(v)).collect();
        assert_eq!(labels, vec!["a", "b", "e", "d"]);
        assert_eq!(cert.interior_vertices, vec![g.index_of("c").unwrap()]);
        assert!(cert.interior_edges.is_empty());
        assert_eq!(cert.interior_dimension(), 0);
        assert!(cert.boundary_is_square());
    }

    #[test]
    fn dim1_and_dim2_certificates() {
        let cert = disk_of(&gallery::interior_dim1_disk());
        assert_eq!(cert.interior_dimension(), 1);
        assert_eq!(cert.interior_edges.len(), 1);
        assert!(cert.boundary_is_square());

        let cert = disk_of(&gallery::interior_dim2_disk());
        assert_eq!(cert.interior_dimension(), 2);
        assert_eq!(cert.interior_vertices.len(), 4);
        assert_eq!(cert.interior_edges.len(), 5);
        assert_eq!(cert.interior_triangles.len(), 2);
        assert!(cert.boundary_is_square());
    }

    #[test]
    fn rejections() {
        let reject = |g: &Graph| recognize_disk(&build_flag_complex(g)).unwrap_err();
        assert_eq!(reject(&gallery::octahedron()), DiskRejection::NoBoundary);
        assert_eq!(reject(&graph::complete(4)), DiskRejection::HasK4);
        assert_eq!(reject(&graph::cycle(5)), DiskRejection::NotPure2Dim);
        assert_eq!(reject(&gallery::double_k4()), DiskRejection::HasK4);

        // two triangles sharing a single vertex: bad link at the shared vertex
        let bowtie = Graph::from_edges(
            &["m", "a", "b", "c", "d"],
            &[("m", "a"), ("m", "b"), ("a", "b"), ("m", "c"), ("m", "d"), ("c", "d")],
        );
        assert_eq!(reject(&bowtie), DiskRejection::BadVertexLink);

        // two disjoint triangles
        let two = Graph::from_edges(
            &["a", "b", "c", "x", "y", "z"],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x")],
        );
        assert_eq!(reject(&two), DiskRejection::Disconnected);
    }

    #[test]
    fn annulus_rejected_on_boundary_count() {
        // triangulated prism over C4: outer square a0..a3, inner square
        // b0..b3, each quad split by the diagonal a(k+1)-b(k)
        let names = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"];
        let mut edges = Vec::new();
        for k in 0..4 {
            edges.push((names[k], names[(k + 1) % 4]));
            edges.push((names[4 + k], names[4 + (k + 1) % 4]));
            edges.push((names[k], names[4 + k]));
            edges.push((names[(k + 1) % 4], names[4 + k]));
        }
        let g = Graph::from_edges(&names, &edges);
        let c = build_flag_complex(&g);
        assert_eq!(c.f_vector(), (8, 16, 8, 0));
        assert_eq!(recognize_disk(&c).unwrap_err(), DiskRejection::MultipleBoundaryCycles);
    }

    #[test]
    fn punctured_torus_rejected_on_euler_characteristic() {
        // flag torus on the 4x4 diagonal grid, with one vertex deleted:
        // a surface with a single boundary circle but Euler characteristic -1
        let name = |i: usize, j: usize| format!("t{}{}", i % 4, j % 4);
        let mut g = Graph::new();
        for i in 0..4 {
            for j in 0..4 {
                g.add_vertex(name(i, j)).unwrap();
            }
        }
        let idx = |g: &Graph, i: usize, j: usize| g.index_of(&name(i, j)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for (ni, nj) in [(i + 1, j), (i, j + 1), (i + 1, j + 1)] {
                    g.add_edge(idx(&g, i, j), idx(&g, ni, nj)).unwrap();
                }
            }
        }
        let torus = build_flag_complex(&g);
        assert_eq!(torus.f_vector(), (16, 48, 32, 0));
        assert_eq!(torus.euler_characteristic(), 0);

        let keep: Vec<usize> = (1..16).collect();
        let punctured = g.induced_subgraph(&keep).unwrap();
        let c = build_flag_complex(&punctured);
        assert_eq!(recognize_disk(&c).unwrap_err(), DiskRejection::WrongEuler);
    }

    #[test]
    fn fan_and_wheel_families() {
        for n in 2..=8 {
            let cert = disk_of(&graph::fan(n));
            assert_eq!(cert.interior_dimension(), 0, "fan({n})");
        }
        for n in 4..=9 {
            let cert = disk_of(&graph::wheel(n));
            assert_eq!(cert.interior_dimension(), 0, "wheel({n})");
            assert_eq!(cert.boundary_cycle.len(), n);
        }
        for n in 3..=8 {
            let cert = disk_of(&graph::suspension(&graph::path(n)));
            assert_eq!(cert.interior_dimension(), 1, "suspension(path({n}))");
            assert_eq!(cert.interior_edges.len(), n - 2);
            assert!(cert.boundary_is_square());
        }
    }

    #[test]
    fn edge_count_identity_on_accepted_disks() {
        for g in [
            gallery::interior_dim0_disk(),
            gallery::interior_dim1_disk(),
            gallery::interior_dim2_disk(),
            graph::fan(5),
            graph::wheel(7),
        ] {
            let c = build_flag_complex(&g);
            let cert = recognize_disk(&c).unwrap();
            let boundary = cert.boundary_cycle.len();
            let (_, e, t, _) = c.f_vector();
            assert_eq!(3 * t, boundary + 2 * (e - boundary), "graph {g:?}");
        }
    }

    #[test]
    fn interior_downward_closure() {
        for g in [gallery::interior_dim1_disk(), gallery::interior_dim2_disk()] {
            let cert = disk_of(&g);
            for [u, v] in &cert.interior_edges {
                assert!(cert.interior_vertices.contains(u));
                assert!(cert.interior_vertices.contains(v));
            }
            for [u, v, w] in &cert.interior_triangles {
                for pair in [[*u, *v], [*u, *w], [*v, *w]] {
                    assert!(cert.interior_edges.contains(&pair));
                }
            }
        }
    }

    #[test]
    fn relabeling_stability() {
        let g = gallery::interior_dim2_disk();
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let h = crate::canon::permuted(&g, &perm);
        let cg = recognize_disk(&build_flag_complex(&g)).unwrap();
        let ch = recognize_disk(&build_flag_complex(&h)).unwrap();
        assert_eq!(cg.interior_dimension(), ch.interior_dimension());
        assert_eq!(cg.boundary_cycle.len(), ch.boundary_cycle.len());
        // boundary cycles related by the relabeling
        let g_boundary: std::collections::BTreeSet<&str> =
            cg.boundary_cycle.iter().map(|&v| g.label(v)).collect();
        let h_boundary: std::collections::BTreeSet<&str> =
            ch.boundary_cycle.iter().map(|&v| h.label(v)).collect();
        assert_eq!(g_boundary, h_boundary);
    }
}
