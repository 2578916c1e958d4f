//! Flag complexes up to dimension 3.
//!
//! Cliques of sizes 1 through 4 of the source graph span the simplices; a
//! separate flag records whether any 5-clique exists (it is never
//! enumerated, K4 presence already rules out 2-dimensionality).

use crate::graph::Graph;

/// Flag complex of a graph, truncated above dimension 3.
///
/// Simplices are stored as sorted vertex tuples in sorted order, so all
/// output is deterministic. Labels are carried over from the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    tetrahedra: Vec<[usize; 4]>,
    has_k5: bool,
}

/// Builds the flag complex on `g`: every clique of size up to 4 spans a
/// simplex.
pub fn build_flag_complex(g: &Graph) -> SimplicialComplex {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    let mut tetrahedra = Vec::new();
    let mut has_k5 = false;
    for u in 0..n {
        for v in g.neighbors(u).filter(|&v| v > u) {
            edges.push([u, v]);
            for w in g.neighbors(u).filter(|&w| w > v && g.has_edge(v, w)) {
                triangles.push([u, v, w]);
                for x in g
                    .neighbors(u)
                    .filter(|&x| x > w && g.has_edge(v, x) && g.has_edge(w, x))
                {
                    tetrahedra.push([u, v, w, x]);
                    if !has_k5 {
                        has_k5 = (0..n).any(|y| {
                            y != u
                                && y != v
                                && y != w
                                && y != x
                                && g.has_edge(y, u)
                                && g.has_edge(y, v)
                                && g.has_edge(y, w)
                                && g.has_edge(y, x)
                        });
                    }
                }
            }
        }
    }
    SimplicialComplex {
        labels: g.labels().to_vec(),
        edges,
        triangles,
        tetrahedra,
        has_k5,
    }
}

/// True when the graph contains a K4, i.e. the flag complex is not
/// 2-dimensional.
pub fn contains_k4(g: &Graph) -> bool {
    build_flag_complex(g).f_vector().3 > 0
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn tetrahedra(&self) -> &[[usize; 4]] {
        &self.tetrahedra
    }

    /// `(|V|, |E|, |T|, |K4|)`.
    pub fn f_vector(&self) -> (usize, usize, usize, usize) {
        (
            self.labels.len(),
            self.edges.len(),
            self.triangles.len(),
            self.tetrahedra.len(),
        )
    }

    /// Whether some 5-clique exists in the source graph. Diagnostic only.
    pub fn has_k5(&self) -> bool {
        self.has_k5
    }

    pub fn has_k4(&self) -> bool {
        !self.tetrahedra.is_empty()
    }

    /// Euler characteristic of the 2-skeleton: `|V| - |E| + |T|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.labels.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = [u.min(v), u.max(v)];
        self.edges.binary_search(&key).is_ok()
    }

    /// Triangles containing the edge `{u, v}`.
    pub fn triangles_on_edge(&self, u: usize, v: usize) -> Vec<[usize; 3]> {
        let (a, b) = (u.min(v), u.max(v));
        self.triangles
            .iter()
            .filter(|t| t.contains(&a) && t.contains(&b))
            .copied()
            .collect()
    }

    /// Connectivity of the 1-skeleton; isolated vertices count as their own
    /// components.
    pub fn is_connected(&self) -> bool {
        let n = self.labels.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for [u, v] in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.extend(&adj[u]);
            }
        }
        count == n
    }
}
