//! Detection of the structural hypotheses the classification keys on:
//! cone vertices, join factorizations, suspensions of paths, fan/wheel tree
//! decompositions of interior-dimension-0 disks, and induced
//! square-boundary subdisks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use thiserror::Error;

use crate::canon::{canonical_label_with_cap, DEFAULT_CANON_CAP};
use crate::disk::{recognize_disk, DiskCertificate};
use crate::flag::build_flag_complex;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("fan/wheel decomposition requires interior dimension 0, got {0}")]
    PreconditionViolated(u8),
}

/// A join split `{apex} * base`: the apex is adjacent to everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSplit {
    pub apex: usize,
    /// Original vertex ids of the base, sorted.
    pub base_vertices: Vec<usize>,
    /// Induced subgraph on the base vertices.
    pub base: Graph,
}

/// Lowest-index vertex adjacent to all others, with the induced base.
pub fn find_cone_vertex(g: &Graph) -> Option<ConeSplit> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let apex = (0..n).find(|&v| g.degree(v) == n - 1)?;
    let base_vertices: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
    let base = g.induced_subgraph(&base_vertices).expect("vertices of g");
    Some(ConeSplit { apex, base_vertices, base })
}

/// Finest join factors of `g`: the connected components of the complement
/// graph, each sorted, ordered by least member. `g` is the join of the
/// induced subgraphs on the factors.
pub fn join_factorization(g: &Graph) -> Vec<Vec<usize>> {
    g.complement_components()
}

/// Witness that `g` is the suspension of a path: two non-adjacent apexes
/// joined to everything else, the rest inducing a simple path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionCertificate {
    /// The apex pair, lexicographically least among all valid choices.
    pub apexes: (usize, usize),
    /// The path as a vertex sequence, read from its lower-indexed endpoint.
    pub path: Vec<usize>,
}

impl SuspensionCertificate {
    /// Number of edges of the path.
    pub fn path_length(&self) -> usize {
        self.path.len() - 1
    }
}

/// Recognizes `g` as the suspension of a path of length >= 1, choosing the
/// lexicographically least apex pair.
pub fn recognize_suspension_of_path(g: &Graph) -> Option<SuspensionCertificate> {
    let n = g.vertex_count();
    for p in 0..n {
        if g.degree(p) != n.wrapping_sub(2) {
            continue;
        }
        for q in (p + 1)..n {
            if g.has_edge(p, q) || g.degree(q) != n - 2 {
                continue;
            }
            // degrees n-2 plus non-adjacency force N(p) = N(q) = rest
            let rest: Vec<usize> = (0..n).filter(|&v| v != p && v != q).collect();
            let induced = g.induced_subgraph(&rest).expect("vertices of g");
            if let Some(local) = as_simple_path(&induced) {
                let path: Vec<usize> = local.into_iter().map(|i| rest[i]).collect();
                return Some(SuspensionCertificate { apexes: (p, q), path });
            }
        }
    }
    None
}

/// If `g` is a simple path on >= 2 vertices, returns its vertex sequence
/// starting from the lower-indexed endpoint.
fn as_simple_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    if (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).next().expect("endpoint has a neighbor");
    loop {
        seq.push(cur);
        match g.neighbors(cur).find(|&u| u != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    (seq.len() == n).then_some(seq)
}

/// Shape of one piece of a fan/wheel decomposition; sizes count the piece's
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    Triangle,
    Fan(usize),
    Wheel(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanWheelPiece {
    pub kind: PieceKind,
    /// Original vertex ids, sorted.
    pub vertices: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
}

/// Tree decomposition of an interior-dimension-0 disk into triangles and
/// wheels, cut along every edge whose endpoints both lie on the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanWheelTree {
    pub pieces: Vec<FanWheelPiece>,
    /// Pairs of piece indices sharing a cut edge, with that edge.
    pub edges: Vec<(usize, usize, [usize; 2])>,
    pub cut_edges: Vec<[usize; 2]>,
}

impl FanWheelTree {
    /// Tree sanity: connected with one fewer edge than nodes.
    pub fn is_tree(&self) -> bool {
        let n = self.pieces.len();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b, _) in &self.edges {
            adj[*a].push(*b);
            adj[*b].push(*a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            if !seen[u] {
                seen[u] = true;
                stack.extend(adj[u].iter().copied());
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Cuts the certified disk along all non-boundary edges whose endpoints
/// both lie on the boundary cycle. With interior dimension 0 the pieces are
/// single triangles and full wheels around interior vertices, and their
/// intersection structure is a tree. This is the finest decomposition; the
/// coarser ones that keep fans intact are not unique.
pub fn fan_wheel_tree_decomposition(
    g: &Graph,
    cert: &DiskCertificate,
) -> Result<FanWheelTree, StructureError> {
    if cert.interior_dimension() != 0 {
        return Err(StructureError::PreconditionViolated(cert.interior_dimension()));
    }
    let c = build_flag_complex(g);
    let boundary: BTreeSet<usize> = cert.boundary_cycle.iter().copied().collect();
    let mut boundary_edges: BTreeSet<[usize; 2]> = BTreeSet::new();
    for i in 0..cert.boundary_cycle.len() {
        let u = cert.boundary_cycle[i];
        let v = cert.boundary_cycle[(i + 1) % cert.boundary_cycle.len()];
        boundary_edges.insert([u.min(v), u.max(v)]);
    }
    let cut_edges: Vec<[usize; 2]> = c
        .edges()
        .iter()
        .filter(|e| {
            boundary.contains(&e[0]) && boundary.contains(&e[1]) && !boundary_edges.contains(*e)
        })
        .copied()
        .collect();
    let cut_set: BTreeSet<[usize; 2]> = cut_edges.iter().copied().collect();

    // group triangles across shared non-cut edges (union-find)
    let tris = c.triangles();
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for (i, t1) in tris.iter().enumerate() {
        for (j, t2) in tris.iter().enumerate().skip(i + 1) {
            let shared: Vec<usize> = t1.iter().filter(|v| t2.contains(v)).copied().collect();
            if shared.len() == 2 {
                let e = [shared[0].min(shared[1]), shared[0].max(shared[1])];
                if !cut_set.contains(&e) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..tris.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut pieces: Vec<FanWheelPiece> = groups
        .values()
        .map(|tri_ids| {
            let triangles: Vec<[usize; 3]> = tri_ids.iter().map(|&i| tris[i]).collect();
            let vertices: Vec<usize> = triangles
                .iter()
                .flatten()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let kind = if triangles.len() == 1 {
                PieceKind::Triangle
            } else {
                let hub = vertices
                    .iter()
                    .copied()
                    .find(|v| triangles.iter().all(|t| t.contains(v)))
                    .expect("multi-triangle piece of a dim-0 disk has a hub");
                if boundary.contains(&hub) {
                    PieceKind::Fan(vertices.len())
                } else {
                    PieceKind::Wheel(vertices.len())
                }
            };
            FanWheelPiece { kind, vertices, triangles }
        })
        .collect();
    pieces.sort_by(|a, b| a.triangles.cmp(&b.triangles));

    let piece_of = |t: &[usize; 3]| -> usize {
        pieces
            .iter()
            .position(|p| p.triangles.contains(t))
            .expect("every triangle lies in a piece")
    };
    let mut edges: Vec<(usize, usize, [usize; 2])> = Vec::new();
    for e in &cut_edges {
        let on_edge = c.triangles_on_edge(e[0], e[1]);
        assert_eq!(on_edge.len(), 2, "cut edges are interior to the disk");
        let (a, b) = (piece_of(&on_edge[0]), piece_of(&on_edge[1]));
        edges.push((a.min(b), a.max(b), *e));
    }
    edges.sort_unstable();
    Ok(FanWheelTree { pieces, edges, cut_edges })
}

/// Witness that an induced subgraph spans a square-boundary triangulated
/// subdisk of the requested interior dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiskWitness {
    /// Original vertex ids, sorted; the certificate is relative to the
    /// induced subgraph on these.
    pub vertex_set: Vec<usize>,
    pub disk: DiskCertificate,
    pub interior_dimension: u8,
}

/// Result of a capped subdisk search. `exhausted` is set when nothing was
/// found and the cap kept the search from covering all induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiskSearch {
    pub witness: Option<SubdiskWitness>,
    pub exhausted: bool,
}

/// Searches induced subgraphs of up to `size_cap` vertices for one whose
/// flag complex is a triangulated disk with square boundary and interior
/// dimension exactly `target_d`.
///
/// Deterministic order: increasing size, then lexicographic on vertex sets,
/// with isomorphic candidates deduplicated by canonical label. For
/// `target_d == 1` suspensions of paths of length >= 3 are scanned first;
/// that shape is complete, since every square-boundary disk of interior
/// dimension 1 is such a suspension.
pub fn search_induced_square_subdisk(g: &Graph, target_d: u8, size_cap: usize) -> SubdiskSearch {
    assert!(size_cap >= 4, "size_cap must be at least 4");
    let n = g.vertex_count();
    let cap = size_cap.min(n);

    if target_d == 1 {
        if let Some(w) = scan_suspension_witnesses(g, cap) {
            return SubdiskSearch { witness: Some(w), exhausted: false };
        }
    }

    let mut seen: HashSet<String> = HashSet::new();
    for size in 4..=cap {
        for subset in (0..n).combinations(size) {
            if let Some(w) = evaluate_candidate(g, &subset, target_d, &mut seen) {
                return SubdiskSearch { witness: Some(w), exhausted: false };
            }
        }
    }
    SubdiskSearch { witness: None, exhausted: size_cap < n }
}

fn evaluate_candidate(
    g: &Graph,
    subset: &[usize],
    target_d: u8,
    seen: &mut HashSet<String>,
) -> Option<SubdiskWitness> {
    let sub = g.induced_subgraph(subset).expect("subset of g");
    // every vertex of a disk has degree >= 2 and a disk on s vertices has
    // at least s+1 edges
    if sub.edge_count() < sub.vertex_count() + 1
        || (0..sub.vertex_count()).any(|v| sub.degree(v) < 2)
        || !sub.is_connected()
    {
        return None;
    }
    if let Ok(label) = canonical_label_with_cap(&sub, DEFAULT_CANON_CAP) {
        if !seen.insert(label) {
            return None; // an isomorphic candidate was already rejected
        }
    }
    let cert = recognize_disk(&build_flag_complex(&sub)).ok()?;
    (cert.boundary_is_square() && cert.interior_dimension() == target_d).then(|| SubdiskWitness {
        vertex_set: subset.to_vec(),
        interior_dimension: target_d,
        disk: cert,
    })
}

/// Scans for induced suspensions of paths of length >= 3, smallest first.
fn scan_suspension_witnesses(g: &Graph, cap: usize) -> Option<SubdiskWitness> {
    let n = g.vertex_count();
    if cap < 6 {
        return None;
    }
    for path_len in 3..=(cap - 2) {
        for p in 0..n {
            for q in (p + 1)..n {
                if g.has_edge(p, q) {
                    continue;
                }
                let common: Vec<usize> = (0..n)
                    .filter(|&v| v != p && v != q && g.has_edge(p, v) && g.has_edge(q, v))
                    .collect();
                if common.len() < path_len + 1 {
                    continue;
                }
                for pick in common.iter().copied().combinations(path_len + 1) {
                    let induced = g.induced_subgraph(&pick).expect("subset of g");
                    if as_simple_path(&induced).is_none() {
                        continue;
                    }
                    let mut subset = pick;
                    subset.push(p);
                    subset.push(q);
                    subset.sort_unstable();
                    // re-verify from scratch rather than trusting the shape
                    let sub = g.induced_subgraph(&subset).expect("subset of g");
                    if let Ok(cert) = recognize_disk(&build_flag_complex(&sub)) {
                        if cert.boundary_is_square() && cert.interior_dimension() == 1 {
                            return Some(SubdiskWitness {
                                vertex_set: subset,
                                disk: cert,
                                interior_dimension: 1,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}
