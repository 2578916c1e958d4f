//! Canonical labeling of small graphs by refinement plus pruned search.
//!
//! Two graphs get the same label if and only if they are isomorphic. The
//! search is exhaustive over vertex orderings compatible with a color
//! refinement, pruned lexicographically and collapsed over twin vertices, so
//! highly symmetric graphs (complete, edgeless, stars) stay cheap. Sizes are
//! capped; this is meant for deduplication during subgraph searches, not as
//! a general isomorphism service.

use thiserror::Error;

use crate::graph::Graph;

/// Default size cap for canonicalization.
pub const DEFAULT_CANON_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("graph has {size} vertices, over the canonicalization cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// Canonical label under the default cap of 16 vertices.
pub fn canonical_label(g: &Graph) -> Result<String, CanonError> {
    canonical_label_with_cap(g, DEFAULT_CANON_CAP)
}

/// Canonical label: `"<n>:<hex of minimal lower-triangle adjacency bits>"`.
pub fn canonical_label_with_cap(g: &Graph, cap: usize) -> Result<String, CanonError> {
    let n = g.vertex_count();
    if n > cap || n > 32 {
        return Err(CanonError::CapExceeded { size: n, cap: cap.min(32) });
    }
    if n == 0 {
        return Ok("0:".to_string());
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | (1 << u)))
        .collect();
    let classes = refine(g, &adj);
    let mut search = Search { adj: &adj, classes, n, best: None };
    search.run(&mut Vec::new(), &mut Vec::new(), false);
    let bits = search.best.expect("search visits at least one leaf");
    Ok(format!("{}:{}", n, to_hex(&bits)))
}

/// Copy of `g` with vertex `i` of the result taken from vertex `perm[i]` of
/// the input. `perm` must be a permutation of `0..n`.
pub fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.vertex_count());
    let mut out = Graph::new();
    for &old in perm {
        out.add_vertex(g.label(old)).expect("permutation of distinct labels");
    }
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    for (u, v) in g.edges() {
        out.add_edge(inv[u], inv[v]).expect("permuted edge");
    }
    out
}

/// Color refinement: start from degrees, repeatedly split classes by the
/// multiset of neighbor colors. Returns vertex groups ordered by final
/// color rank; orderings in the canonical search consume groups in this
/// order, which is isomorphism-invariant.
fn refine(g: &Graph, adj: &[u32]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    rerank(&mut color);
    loop {
        let before = 1 + color.iter().copied().max().unwrap_or(0);
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> =
                    (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sig.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| sorted.binary_search(&s).expect("own signature present"))
            .collect();
        let after = 1 + next.iter().copied().max().unwrap_or(0);
        sig.clear();
        color = next;
        if after == before {
            break;
        }
    }
    let classes_count = 1 + color.iter().copied().max().unwrap_or(0);
    let mut classes = vec![Vec::new(); classes_count];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    classes
}

fn rerank(color: &mut [usize]) {
    let mut vals: Vec<usize> = color.to_vec();
    vals.sort_unstable();
    vals.dedup();
    for c in color.iter_mut() {
        *c = vals.binary_search(c).unwrap();
    }
}

struct Search<'a> {
    adj: &'a [u32],
    classes: Vec<Vec<usize>>,
    n: usize,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn run(&mut self, placed: &mut Vec<usize>, bits: &mut Vec<u8>, strictly_less: bool) {
        let pos = placed.len();
        if pos == self.n {
            if strictly_less || self.best.is_none() {
                self.best = Some(bits.clone());
            }
            return;
        }
        let class_idx = self
            .classes
            .iter()
            .position(|c| c.iter().any(|v| !placed.contains(v)))
            .expect("some class has an unplaced vertex");
        let mut candidates: Vec<usize> = self.classes[class_idx]
            .iter()
            .copied()
            .filter(|v| !placed.contains(v))
            .collect();
        // Twin collapse: swapping two twins is a graph automorphism, so
        // exploring one representative per twin orbit is enough.
        let mut reps: Vec<usize> = Vec::with_capacity(candidates.len());
        candidates.retain(|&v| {
            if reps.iter().any(|&r| self.are_twins(r, v)) {
                false
            } else {
                reps.push(v);
                true
            }
        });
        let base = bits.len();
        for v in candidates {
            let mut child_less = strictly_less;
            bits.truncate(base);
            for (j, &p) in placed.iter().enumerate() {
                let bit = (self.adj[v] >> p & 1) as u8;
                bits.push(bit);
                if !child_less {
                    if let Some(best) = &self.best {
                        match bit.cmp(&best[base + j]) {
                            std::cmp::Ordering::Greater => {
                                bits.truncate(base);
                                break;
                            }
                            std::cmp::Ordering::Less => child_less = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
            if bits.len() != base + placed.len() {
                continue; // pruned: prefix already worse than best
            }
            placed.push(v);
            self.run(placed, bits, child_less);
            placed.pop();
        }
        bits.truncate(base);
    }

    fn are_twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u32 << u) | (1u32 << v));
        (self.adj[u] & mask) == (self.adj[v] & mask)
    }
}

fn to_hex(bits: &[u8]) -> String {
    let mut out = String::with_capacity(bits.len().div_ceil(4));
    for chunk in bits.chunks(4) {
        let mut nibble = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            nibble |= b << (3 - i);
        }
        out.push(char::from_digit(nibble as u32, 16).unwrap());
    }
    out
}
