//! Finite simplicial graphs: labeled vertices, symmetric irreflexive adjacency.
//!
//! This is the input type for everything else in the crate. Vertices are
//! indexed densely `0..n` in first-appearance order and carry whitespace-free
//! text labels. The edge relation is kept symmetric and loop-free, so every
//! value of [`Graph`] is a simplicial graph by construction.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex inside a [`Graph`]. Dense, `0..n`.
pub type VertexId = usize;

/// Errors from building or operating on graphs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: self-loop at vertex `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge `{a} {b}`")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: duplicate vertex declaration `{label}`")]
    DuplicateVertex { line: usize, label: String },
    #[error("line {line}: unknown vertex `{label}` (strict mode: file has `v` declarations)")]
    UnknownVertex { line: usize, label: String },
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error("unknown vertex id {0}")]
    UnknownVertexId(usize),
}

/// A finite simplicial graph.
///
/// Immutable after construction; all accessors return data in sorted order so
/// downstream output is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices: {:?}, edges: {:?})", self.vertex_count(), self.labels, self.edges())
    }
}

impl Default for Graph {
    fn default() -> Self {
        Self::new()
    }
}

impl Graph {
    /// The empty graph.
    pub fn new() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new() }
    }

    /// Adds a vertex with the given label, returning its index.
    /// Labels must be unique and whitespace-free.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId, GraphError> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(GraphError::MalformedLine {
                line: 0,
                reason: format!("invalid label `{label}`"),
            });
        }
        if self.labels.contains(&label) {
            return Err(GraphError::DuplicateVertex { line: 0, label });
        }
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(self.labels.len() - 1)
    }

    /// Adds an undirected edge between distinct existing vertices.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::UnknownVertexId(u));
        }
        if v >= n {
            return Err(GraphError::UnknownVertexId(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop { line: 0, label: self.labels[u].clone() });
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge {
                line: 0,
                a: self.labels[u].clone(),
                b: self.labels[v].clone(),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Builds a graph from labels and label pairs. Convenient in tests and
    /// constructors; panics on invalid input since those are programmer errors.
    pub fn from_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Self {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref()).expect("valid vertex label");
        }
        for (a, b) in edges {
            let u = g.index_of(a.as_ref()).expect("declared vertex");
            let v = g.index_of(b.as_ref()).expect("declared vertex");
            g.add_edge(u, v).expect("valid edge");
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        self.component_of(0).len() == n
    }

    fn component_of(&self, start: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            if seen.insert(u) {
                stack.extend(self.neighbors(u));
            }
        }
        seen
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.vertex_count()];
        for v in 0..self.vertex_count() {
            if !seen[v] {
                let comp = self.component_of(v);
                for &u in &comp {
                    seen[u] = true;
                }
                out.push(comp.into_iter().collect());
            }
        }
        out
    }

    /// Induced subgraph on the given vertex set. Labels are preserved;
    /// vertices are re-indexed in increasing order of their original index.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<Graph, GraphError> {
        let mut sorted: Vec<VertexId> = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= self.vertex_count() {
                return Err(GraphError::UnknownVertexId(v));
            }
        }
        let mut g = Graph::new();
        for &v in &sorted {
            g.add_vertex(self.labels[v].clone())?;
        }
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Connected components of the complement graph, each sorted, the list
    /// ordered by least member. The graph is the join of the induced
    /// subgraphs on these parts, and this partition is the finest such one.
    pub fn complement_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                if seen[u] {
                    continue;
                }
                seen[u] = true;
                comp.insert(u);
                for v in 0..n {
                    if v != u && !self.has_edge(u, v) && !seen[v] {
                        stack.push(v);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Join of two graphs: disjoint union plus all cross edges.
    ///
    /// Label collisions are resolved by suffixing `#2`, `#3`, ... on the
    /// second operand, so the operation is total.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let mut g = g1.clone();
        let mut names = Vec::with_capacity(g2.vertex_count());
        for v in 0..g2.vertex_count() {
            let base = g2.label(v);
            let mut candidate = base.to_string();
            let mut k = 2;
            while g.labels.contains(&candidate) {
                candidate = format!("{base}#{k}");
                k += 1;
            }
            names.push(g.add_vertex(candidate).expect("fresh label"));
        }
        for (u, v) in g2.edges() {
            g.add_edge(names[u], names[v]).expect("disjoint copy");
        }
        let n1 = g1.vertex_count();
        for u in 0..n1 {
            for &w in &names {
                g.add_edge(u, w).expect("cross edge");
            }
        }
        g
    }

    /// Renders the graph in the plain edge-list file format; `parse_graph`
    /// round-trips it exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            out.push_str("v ");
            out.push_str(l);
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str("e ");
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    /// Renders the graph in the JSON form.
    pub fn render_json(&self) -> String {
        let j = JsonGraph {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
                .collect(),
        };
        serde_json::to_string(&j).expect("graph serializes")
    }
}

/// Parses a graph file.
///
/// Two formats are accepted. The plain format has `# comment` lines,
/// optional `v <label>` declarations and `e <a> <b>` edges; labels in `e`
/// lines auto-declare unless any `v` line is present (strict mode). If the
/// first non-whitespace byte is `{`, the input is read as JSON instead:
/// `{"vertices":["a","b"],"edges":[["a","b"]]}`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        return parse_graph_json(text);
    }
    let strict = text
        .lines()
        .any(|l| l.trim_start().starts_with("v ") || l.trim() == "v");
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let label = tokens.next().ok_or(GraphError::MalformedLine {
                    line,
                    reason: "expected `v <label>`".into(),
                })?;
                if tokens.next().is_some() {
                    return Err(GraphError::MalformedLine {
                        line,
                        reason: "too many tokens in `v` line".into(),
                    });
                }
                if g.index_of(label).is_some() {
                    return Err(GraphError::DuplicateVertex { line, label: label.into() });
                }
                g.add_vertex(label).map_err(|_| GraphError::MalformedLine {
                    line,
                    reason: format!("invalid label `{label}`"),
                })?;
            }
            Some("e") => {
                let a = tokens.next().ok_or(GraphError::MalformedLine {
                    line,
                    reason: "expected `e <a> <b>`".into(),
                })?;
                let b = tokens.next().ok_or(GraphError::MalformedLine {
                    line,
                    reason: "expected `e <a> <b>`".into(),
                })?;
                if tokens.next().is_some() {
                    return Err(GraphError::MalformedLine {
                        line,
                        reason: "too many tokens in `e` line".into(),
                    });
                }
                let mut resolve = |label: &str| -> Result<VertexId, GraphError> {
                    match g.index_of(label) {
                        Some(v) => Ok(v),
                        None if strict => {
                            Err(GraphError::UnknownVertex { line, label: label.into() })
                        }
                        None => g.add_vertex(label).map_err(|_| GraphError::MalformedLine {
                            line,
                            reason: format!("invalid label `{label}`"),
                        }),
                    }
                };
                let u = resolve(a)?;
                let v = resolve(b)?;
                g.add_edge(u, v).map_err(|e| match e {
                    GraphError::SelfLoop { label, .. } => GraphError::SelfLoop { line, label },
                    GraphError::DuplicateEdge { a, b, .. } => {
                        GraphError::DuplicateEdge { line, a, b }
                    }
                    other => other,
                })?;
            }
            Some(tok) => {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: format!("unknown directive `{tok}`"),
                });
            }
            None => unreachable!("non-empty trimmed line"),
        }
    }
    Ok(g)
}

fn parse_graph_json(text: &str) -> Result<Graph, GraphError> {
    let j: JsonGraph = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    let mut g = Graph::new();
    for label in &j.vertices {
        if g.index_of(label).is_some() {
            return Err(GraphError::Json(format!("duplicate vertex `{label}`")));
        }
        g.add_vertex(label.clone())
            .map_err(|_| GraphError::Json(format!("invalid label `{label}`")))?;
    }
    for (a, b) in &j.edges {
        let u = g
            .index_of(a)
            .ok_or_else(|| GraphError::Json(format!("unknown vertex `{a}` in edge")))?;
        let v = g
            .index_of(b)
            .ok_or_else(|| GraphError::Json(format!("unknown vertex `{b}` in edge")))?;
        g.add_edge(u, v).map_err(|e| GraphError::Json(e.to_string()))?;
    }
    Ok(g)
}

/// Single vertex labeled `p0`.
pub fn point() -> Graph {
    Graph::from_edges(&["p0"], &[])
}

/// Path with `n` edges on vertices `x0..xn`. `path(0)` is a single vertex.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..=n {
        g.add_vertex(format!("x{i}")).unwrap();
    }
    for i in 0..n {
        g.add_edge(i, i + 1).unwrap();
    }
    g
}

/// Cycle on `n >= 3` vertices `c0..c(n-1)`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(format!("c{i}")).unwrap();
    }
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

/// Complete graph on `n` vertices `k0..k(n-1)`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(format!("k{i}")).unwrap();
    }
    for i in 0..n {
        for j in (i + 1)..n {
            g.add_edge(i, j).unwrap();
        }
    }
    g
}

/// Join of two non-adjacent apex vertices with `g`.
pub fn suspension(g: &Graph) -> Graph {
    let apexes = Graph::from_edges(&["s0", "s1"], &[]);
    Graph::join(&apexes, g)
}

/// Join of a vertex and a path with `n` edges.
pub fn fan(n: usize) -> Graph {
    Graph::join(&point(), &path(n))
}

/// Join of a vertex and a cycle on `n` vertices.
pub fn wheel(n: usize) -> Graph {
    Graph::join(&point(), &cycle(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_smallest_edge() {
        let g = parse_graph("v a\nv b\ne a b").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.labels(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn parse_duplicate_edge_reports_line() {
        let err = parse_graph("e a b\ne a b").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateEdge { line: 2, a: "a".into(), b: "b".into() }
        );
    }

    #[test]
    fn parse_self_loop_rejected() {
        let err = parse_graph("e a a").unwrap_err();
        assert!(matches!(err, GraphError::SelfLoop { line: 1, .. }));
    }

    #[test]
    fn parse_strict_mode_rejects_undeclared() {
        let err = parse_graph("v a\ne a b").unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex { line: 2, label: "b".into() });
    }

    #[test]
    fn parse_auto_declares_without_preamble() {
        let g = parse_graph("# triangle\ne a b\ne b c\ne c a").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        // first-appearance order
        assert_eq!(g.labels(), &["a".to_string(), "b".to_string(), "c".to_string()]);
    }

    #[test]
    fn parse_json_form() {
        let g = parse_graph(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let err = parse_graph(r#"{"vertices":["a"],"edges":[["a","z"]]}"#).unwrap_err();
        assert!(matches!(err, GraphError::Json(_)));
    }

    #[test]
    fn render_round_trips() {
        let g = crate::gallery::interior_dim0_disk();
        assert_eq!(parse_graph(&g.render()).unwrap(), g);
        assert_eq!(parse_graph(&g.render_json()).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_of_dim0_disk_is_square() {
        let g = crate::gallery::interior_dim0_disk();
        let ids: Vec<_> = ["a", "b", "e", "d"].iter().map(|l| g.index_of(l).unwrap()).collect();
        let sub = g.induced_subgraph(&ids).unwrap();
        assert_eq!(sub.vertex_count(), 4);
        assert_eq!(sub.edge_count(), 4);
        // every vertex has degree 2: a 4-cycle
        assert!((0..4).all(|v| sub.degree(v) == 2));
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let g = path(3);
        let all: Vec<_> = (0..g.vertex_count()).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert_eq!(g.induced_subgraph(&[]).unwrap(), Graph::new());
        assert!(g.induced_subgraph(&[99]).is_err());
    }

    #[test]
    fn induced_subgraph_composes() {
        let g = crate::gallery::interior_dim2_disk();
        let s = vec![0, 1, 2, 4, 5, 6];
        let t_in_s = vec![0, 2, 3, 4]; // indices into the subgraph
        let sub = g.induced_subgraph(&s).unwrap();
        let direct = g.induced_subgraph(&[s[0], s[2], s[3], s[4]]).unwrap();
        assert_eq!(sub.induced_subgraph(&t_in_s).unwrap(), direct);
    }

    #[test]
    fn join_point_with_length_one_path_is_triangle() {
        let g = Graph::join(&point(), &path(1));
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn join_edge_count_formula() {
        let g1 = cycle(5);
        let g2 = path(3);
        let j = Graph::join(&g1, &g2);
        assert_eq!(
            j.edge_count(),
            g1.edge_count() + g2.edge_count() + g1.vertex_count() * g2.vertex_count()
        );
    }

    #[test]
    fn join_with_empty_is_identity() {
        let g = cycle(4);
        assert_eq!(Graph::join(&Graph::new(), &g), g);
        assert_eq!(Graph::join(&g, &Graph::new()), g);
    }

    #[test]
    fn join_relabels_collisions() {
        let g = Graph::join(&point(), &point());
        assert_eq!(g.labels(), &["p0".to_string(), "p0#2".to_string()]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn suspension_of_length_three_path_shape() {
        let g = suspension(&path(3));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 11);
    }

    #[test]
    fn complement_components_examples() {
        let g = crate::gallery::interior_dim0_disk();
        let comps = g.complement_components();
        let as_labels: Vec<Vec<&str>> = comps
            .iter()
            .map(|c| c.iter().map(|&v| g.label(v)).collect())
            .collect();
        assert_eq!(as_labels, vec![vec!["a", "e"], vec!["b", "d"], vec!["c"]]);

        // complement of the path a-b-c has the single edge a-c
        let p = path(2);
        assert_eq!(p.complement_components(), vec![vec![0, 2], vec![1]]);

        // complement of a complete graph is edgeless
        let k = complete(4);
        assert_eq!(k.complement_components().len(), 4);
    }
}
