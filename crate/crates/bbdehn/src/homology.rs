//! Integral first homology of the 2-skeleton via Smith normal form.
//!
//! The boundary matrices are eliminated over arbitrary-precision integers:
//! coefficient growth during naive elimination overflows fixed-width types
//! even on modest complexes, and torsion must be detected exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::flag::SimplicialComplex;

/// Default cap on the number of edges fed to the homology computation.
pub const DEFAULT_HOMOLOGY_EDGE_CAP: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("complex has {edges} edges, over the homology size cap {cap}")]
    TooLarge { edges: usize, cap: usize },
}

/// Connectivity and integral H1 of the 2-skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGate {
    pub connected: bool,
    pub h1_rank: usize,
    /// Torsion coefficients of H1, each > 1, in divisibility order.
    pub h1_torsion: Vec<u64>,
}

impl HomologyGate {
    /// True when the gate is consistent with a simply-connected complex:
    /// connected and H1 = 0. (H1 = 0 does not certify simple connectivity;
    /// callers that rely on it must say so.)
    pub fn h1_trivial(&self) -> bool {
        self.connected && self.h1_rank == 0 && self.h1_torsion.is_empty()
    }
}

/// Computes connectivity and H1 over the integers from the boundary maps of
/// the 2-skeleton.
pub fn homology_gate(c: &SimplicialComplex) -> Result<HomologyGate, HomologyError> {
    homology_gate_with_cap(c, DEFAULT_HOMOLOGY_EDGE_CAP)
}

pub fn homology_gate_with_cap(
    c: &SimplicialComplex,
    cap: usize,
) -> Result<HomologyGate, HomologyError> {
    let n_edges = c.edges().len();
    if n_edges > cap {
        return Err(HomologyError::TooLarge { edges: n_edges, cap });
    }
    let d1 = boundary_one(c);
    let d2 = boundary_two(c);
    debug_assert!(composition_is_zero(&d1, &d2), "boundary of boundary must vanish");
    let rank_d1 = smith_invariant_factors(d1).len();
    let inv_d2 = smith_invariant_factors(d2);
    let rank_d2 = inv_d2.len();
    let h1_rank = n_edges - rank_d1 - rank_d2;
    let h1_torsion: Vec<u64> = inv_d2
        .iter()
        .filter(|d| d.abs() > BigInt::from(1))
        .map(|d| {
            let (_, digits) = d.abs().to_u64_digits();
            *digits.first().expect("nonzero factor")
        })
        .collect();
    Ok(HomologyGate { connected: c.is_connected(), h1_rank, h1_torsion })
}

/// Vertex-by-edge boundary matrix: column per edge `[u, v]` is `v - u`.
pub fn boundary_one(c: &SimplicialComplex) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); c.edges().len()]; c.vertex_count()];
    for (j, [u, v]) in c.edges().iter().enumerate() {
        m[*u][j] = BigInt::from(-1);
        m[*v][j] = BigInt::from(1);
    }
    m
}

/// Edge-by-triangle boundary matrix: column per triangle `[a, b, c]` is
/// `[b,c] - [a,c] + [a,b]`.
pub fn boundary_two(c: &SimplicialComplex) -> Vec<Vec<BigInt>> {
    let edge_index = |u: usize, v: usize| -> usize {
        c.edges()
            .binary_search(&[u.min(v), u.max(v)])
            .expect("triangle face is an edge of the complex")
    };
    let mut m = vec![vec![BigInt::zero(); c.triangles().len()]; c.edges().len()];
    for (j, [a, b, cc]) in c.triangles().iter().enumerate() {
        m[edge_index(*b, *cc)][j] = BigInt::from(1);
        m[edge_index(*a, *cc)][j] = BigInt::from(-1);
        m[edge_index(*a, *b)][j] = BigInt::from(1);
    }
    m
}

fn composition_is_zero(d1: &[Vec<BigInt>], d2: &[Vec<BigInt>]) -> bool {
    let rows = d1.len();
    let mid = d2.len();
    let cols = d2.first().map_or(0, Vec::len);
    for i in 0..rows {
        for j in 0..cols {
            let mut acc = BigInt::zero();
            for (k, d2_row) in d2.iter().enumerate().take(mid) {
                if !d1[i][k].is_zero() && !d2_row[j].is_zero() {
                    acc += &d1[i][k] * &d2_row[j];
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Nonzero invariant factors `d1 | d2 | ...` of an integer matrix.
///
/// Classic Smith elimination: bring the absolutely smallest entry of the
/// working submatrix to the pivot, reduce its row and column by Euclidean
/// division until they clear, then fix up divisibility of the remaining
/// block before moving on.
pub fn smith_invariant_factors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&m, k) else {
            break; // remaining block is zero
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            // clear column k below the pivot
            let mut dirty = false;
            for i in (k + 1)..rows {
                if !m[i][k].is_zero() {
                    let q = &m[i][k] / &m[k][k];
                    if !q.is_zero() {
                        for j in k..cols {
                            let s = &m[k][j] * &q;
                            m[i][j] -= s;
                        }
                    }
                    if !m[i][k].is_zero() {
                        m.swap(k, i); // remainder is smaller; keep reducing
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // clear row k right of the pivot
            for j in (k + 1)..cols {
                if !m[k][j].is_zero() {
                    let q = &m[k][j] / &m[k][k];
                    if !q.is_zero() {
                        for row in m.iter_mut().take(rows).skip(k) {
                            let s = &row[k] * &q;
                            row[j] -= s;
                        }
                    }
                    if !m[k][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(k, j);
                        }
                        dirty = true;
                        break;
                    }
                }
            }
            if !dirty && row_and_col_clear(&m, k) {
                break;
            }
        }
        // divisibility fix-up: pivot must divide every remaining entry
        if let Some(i) = row_with_non_divisible_entry(&m, k) {
            for jj in k..cols {
                let add = m[i][jj].clone();
                m[k][jj] += add;
            }
            continue; // re-run elimination at the same k
        }
        if m[k][k].is_negative() {
            let neg = -m[k][k].clone();
            m[k][k] = neg;
        }
        factors.push(m[k][k].clone());
        k += 1;
    }
    factors
}

fn min_abs_entry(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut best: Option<(usize, usize)> = None;
    for i in k..rows {
        for j in k..cols {
            if m[i][j].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if m[i][j].abs() < m[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn row_and_col_clear(m: &[Vec<BigInt>], k: usize) -> bool {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    ((k + 1)..rows).all(|i| m[i][k].is_zero()) && ((k + 1)..cols).all(|j| m[k][j].is_zero())
}

fn row_with_non_divisible_entry(m: &[Vec<BigInt>], k: usize) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (k + 1..rows).find(|&i| ((k + 1)..cols).any(|j| !(&m[i][j] % &m[k][k]).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::build_flag_complex;
    use crate::gallery;
    use crate::graph::{self, Graph};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn smith_known_matrix() {
        // invariant factors 1, 3, 21 (classic worked example)
        let m = big(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let f = smith_invariant_factors(m);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]);
    }

    #[test]
    fn smith_diagonal_and_zero() {
        assert_eq!(
            smith_invariant_factors(big(&[&[2, 0], &[0, 4]])),
            vec![BigInt::from(2), BigInt::from(4)]
        );
        assert!(smith_invariant_factors(big(&[&[0, 0], &[0, 0]])).is_empty());
        assert!(smith_invariant_factors(Vec::new()).is_empty());
    }

    #[test]
    fn cycle_has_free_h1() {
        for n in 4..=8 {
            let gate = homology_gate(&build_flag_complex(&graph::cycle(n))).unwrap();
            assert!(gate.connected);
            assert_eq!(gate.h1_rank, 1, "C{n}");
            assert!(gate.h1_torsion.is_empty());
        }
    }

    #[test]
    fn trees_are_h1_trivial() {
        for g in [graph::path(1), graph::path(4), star(5)] {
            let gate = homology_gate(&build_flag_complex(&g)).unwrap();
            assert!(gate.h1_trivial(), "tree {g:?}");
        }
    }

    fn star(leaves: usize) -> Graph {
        let mut base = Graph::new();
        for i in 0..leaves {
            base.add_vertex(format!("q{i}")).unwrap();
        }
        Graph::join(&graph::point(), &base)
    }

    #[test]
    fn disks_are_h1_trivial() {
        for g in [
            gallery::interior_dim0_disk(),
            gallery::interior_dim1_disk(),
            gallery::interior_dim2_disk(),
            gallery::double_k4(),
        ] {
            let gate = homology_gate(&build_flag_complex(&g)).unwrap();
            assert!(gate.h1_trivial(), "graph {g:?}");
        }
    }

    #[test]
    fn disconnected_is_reported() {
        let g = graph::Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        let gate = homology_gate(&build_flag_complex(&g)).unwrap();
        assert!(!gate.connected);
    }

    #[test]
    fn cones_have_trivial_h1_even_with_k4() {
        for base in [graph::cycle(4), graph::complete(3), graph::wheel(4)] {
            let cone = Graph::join(&graph::point(), &base);
            let gate = homology_gate(&build_flag_complex(&cone)).unwrap();
            assert_eq!(gate.h1_rank, 0);
            assert!(gate.h1_torsion.is_empty());
        }
    }

    #[test]
    fn edge_cap() {
        let c = build_flag_complex(&graph::complete(5));
        assert_eq!(
            homology_gate_with_cap(&c, 5).unwrap_err(),
            HomologyError::TooLarge { edges: 10, cap: 5 }
        );
    }
}
