//! Immutable simple-graph representation and structural predicates.
//!
//! Vertices are dense `0..n` indices. Edges are stored as a sorted,
//! deduplicated list of pairs `(u, v)` with `u < v`, with per-vertex sorted
//! neighbor lists derived at construction. All mutation-like operations
//! (blow-up, edge flips) return new graphs.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("pair {index}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("pair {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("blow-up factor must be at least 1")]
    BlowUpFactorZero,
}

/// A finite simple undirected graph, immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate pairs
    /// (in either orientation) collapse to a single edge; self-loops and
    /// out-of-range endpoints are rejected with the offending pair index.
    pub fn from_edge_list(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (index, (u, v)) in pairs.into_iter().enumerate() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { index, vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index, vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must already be sorted, deduplicated, in-range, `u < v`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Average degree `2m/n` (0 for the empty vertex set).
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.m() as f64 / self.n as f64
        }
    }

    /// Replaces every vertex by an independent set of `t` copies; copies of
    /// `u` and `v` are adjacent iff `uv` was an edge. Copy `i` of vertex `u`
    /// becomes index `u * t + i`, so `blow_up(g, 1)` reproduces `g` exactly.
    pub fn blow_up(&self, t: usize) -> Result<Graph, GraphError> {
        if t == 0 {
            return Err(GraphError::BlowUpFactorZero);
        }
        let mut edges = Vec::with_capacity(self.m() * t * t);
        for &(u, v) in &self.edges {
            for i in 0..t {
                for j in 0..t {
                    edges.push((u * t + i, v * t + j));
                }
            }
        }
        Graph::from_edge_list(self.n * t, edges)
    }

    /// Returns a graph with the presence of edge `{u, v}` toggled.
    pub fn flip_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v, "flip_edge out of range");
        let pair = (u.min(v), u.max(v));
        let mut edges = self.edges.clone();
        match edges.binary_search(&pair) {
            Ok(pos) => {
                edges.remove(pos);
            }
            Err(pos) => {
                edges.insert(pos, pair);
            }
        }
        Graph::from_sorted_edges(self.n, edges)
    }

    /// True iff the graph contains no 3-clique (neighbor-intersection scan).
    pub fn is_triangle_free(&self) -> bool {
        for &(u, v) in &self.edges {
            let (mut i, mut j) = (0, 0);
            let (nu, nv) = (&self.adj[u], &self.adj[v]);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }

    /// BFS 2-coloring over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Counts edges inside `a`, across the cut, and inside the complement.
    /// `a` entries must be in range; duplicates are harmless.
    pub fn partition_edge_counts(&self, a: &[usize]) -> EdgeSplit {
        let mut in_a = vec![false; self.n];
        for &u in a {
            assert!(u < self.n, "subset vertex {u} out of range for n = {}", self.n);
            in_a[u] = true;
        }
        let mut split = EdgeSplit {
            a: (0..self.n).filter(|&u| in_a[u]).collect(),
            b: (0..self.n).filter(|&u| !in_a[u]).collect(),
            m_a: 0,
            m_ab: 0,
            m_b: 0,
        };
        for &(u, v) in &self.edges {
            match (in_a[u], in_a[v]) {
                (true, true) => split.m_a += 1,
                (false, false) => split.m_b += 1,
                _ => split.m_ab += 1,
            }
        }
        split
    }
}

/// Edge counts of a vertex bipartition `(A, B)`. The split is admissible
/// for the mixed bound iff `m_b == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSplit {
    /// Sorted vertices of `A`.
    pub a: Vec<usize>,
    /// Sorted vertices of the complement `B`.
    pub b: Vec<usize>,
    pub m_a: usize,
    pub m_ab: usize,
    pub m_b: usize,
}

/// Parses the edge-list text format: a first line `n m`, then `m` lines
/// `u v` of 0-indexed endpoints, whitespace-separated.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let n = parse_count(it.next(), line_no, "n")?;
    let m = parse_count(it.next(), line_no, "m")?;
    if it.next().is_some() {
        return Err(EdgeListError::Malformed { line: line_no, reason: "expected exactly `n m`".into() });
    }
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_count(it.next(), line_no, "u")?;
        let v = parse_count(it.next(), line_no, "v")?;
        if it.next().is_some() {
            return Err(EdgeListError::Malformed { line: line_no, reason: "expected exactly `u v`".into() });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(EdgeListError::EdgeCountMismatch { declared: m, found: pairs.len() });
    }
    Graph::from_edge_list(n, pairs).map_err(EdgeListError::Graph)
}

/// Formats a graph in the edge-list text format (inverse of [`parse_edge_list`]).
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, EdgeListError> {
    let tok = tok.ok_or_else(|| EdgeListError::Malformed {
        line,
        reason: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| EdgeListError::Malformed {
        line,
        reason: format!("bad {what} `{tok}`"),
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(GraphError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_edge_list(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn star_from_edge_list() {
        let g = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edge_list(3, []).unwrap();
        assert_eq!(g.m(), 0);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_out_of_range_with_index() {
        let err = Graph::from_edge_list(3, [(0, 1), (1, 7)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { index: 1, vertex: 7, n: 3 });
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::from_edge_list(3, [(2, 2)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { index: 0, vertex: 2 });
    }

    #[test]
    fn degree_sum_is_twice_m() {
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn blow_up_of_edge_is_four_cycle() {
        let k2 = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        let g = k2.blow_up(2).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn blow_up_identity() {
        let g = star(3);
        assert_eq!(g.blow_up(1).unwrap(), g);
    }

    #[test]
    fn blow_up_rejects_zero() {
        assert_eq!(star(2).blow_up(0).unwrap_err(), GraphError::BlowUpFactorZero);
    }

    #[test]
    fn blow_up_counts() {
        let g = star(3);
        let b = g.blow_up(3).unwrap();
        assert_eq!(b.n(), 3 * g.n());
        assert_eq!(b.m(), 9 * g.m());
    }

    #[test]
    fn triangle_predicates() {
        let c5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(c5.is_triangle_free());
        let k3 = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_triangle_free());
    }

    #[test]
    fn bipartite_predicates() {
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_bipartite());
        let c5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!c5.is_bipartite());
    }

    #[test]
    fn partition_counts_star_center() {
        let g = star(3);
        let split = g.partition_edge_counts(&[0]);
        assert_eq!((split.m_a, split.m_ab, split.m_b), (0, 3, 0));
    }

    #[test]
    fn partition_counts_whole_vertex_set() {
        let g = star(3);
        let all: Vec<usize> = (0..4).collect();
        let split = g.partition_edge_counts(&all);
        assert_eq!((split.m_a, split.m_ab, split.m_b), (3, 0, 0));
    }

    #[test]
    fn flip_edge_round_trip() {
        let g = star(3);
        let h = g.flip_edge(1, 2);
        assert!(h.has_edge(1, 2));
        assert_eq!(h.flip_edge(2, 1), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = star(4);
        let parsed = parse_edge_list(&format_edge_list(&g)).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingHeader));
        assert!(matches!(
            parse_edge_list("3 1\n0 x"),
            Err(EdgeListError::Malformed { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(EdgeListError::EdgeCountMismatch { declared: 2, found: 1 })
        );
    }
}
