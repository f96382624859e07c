//! Simple undirected graphs with bitset adjacency rows.

use std::fmt::Write as _;

use rand::Rng;

use crate::bits::BitSet;
use crate::error::{domain, Error, Result};
use crate::seed::{uniform, SeedSpec};

/// A finite simple graph on vertices `0..n`.
///
/// `edges` is kept sorted lexicographically with `u < v` in every pair, so two
/// graphs with the same edge set compare equal and serialize identically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![BitSet::new(n); n], edges: Vec::new() }
    }

    /// Build from an edge list; pairs may come in either orientation.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            if a == b {
                return Err(domain(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(domain(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if g.has_edge(a, b) {
                return Err(domain(format!("duplicate edge ({a}, {b})")));
            }
            g.link(a, b);
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.edges.push((a.min(b), a.max(b)));
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// A graph is a forest iff every component on `c` vertices has `c - 1` edges.
    pub fn is_forest(&self) -> bool {
        self.components().iter().all(|c| c.graph.size() + 1 == c.graph.order())
    }

    /// Copy of `self` without edge `e`; vertices are kept.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let (a, b) = e;
        if !self.has_edge(a, b) {
            return Err(Error::NotFound(format!("edge ({a}, {b})")));
        }
        let key = (a.min(b), a.max(b));
        let mut g = self.clone();
        g.adj[a].remove(b);
        g.adj[b].remove(a);
        g.edges.retain(|&x| x != key);
        Ok(g)
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for &(a, b) in &self.edges {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                g.link(index[a], index[b]);
            }
        }
        g.edges.sort_unstable();
        g
    }

    /// Maximal connected pieces, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut vertices = Vec::new();
            while let Some(v) = stack.pop() {
                vertices.push(v);
                for w in self.adj[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            vertices.sort_unstable();
            let graph = self.induced(&vertices);
            out.push(Component { vertices, graph });
        }
        out
    }

    /// Vertex-disjoint union; `other` is relabeled to `n..n + other.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges.iter().copied().chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
        .expect("disjoint union of valid graphs is valid")
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.n * self.n];
        for &(a, b) in &self.edges {
            m[a * self.n + b] = 1.0;
            m[b * self.n + a] = 1.0;
        }
        m
    }
}

/// One connected piece of a graph, with `vertices[i]` the original label of
/// vertex `i` in `graph`.
#[derive(Debug, Clone)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Erdős–Rényi `G(n, p)`. Pairs are visited in lexicographic order and each
/// consumes exactly one uniform variate.
pub fn gen_gnp(n: usize, p: f64, seed: &SeedSpec) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(domain(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = seed.rng();
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if uniform(&mut rng) < p {
                g.link(a, b);
            }
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.link(a, b);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star on `n` vertices: vertex 0 joined to all others.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
}

/// Uniform random labeled tree, decoded from a uniform Prüfer sequence.
pub fn random_tree(n: usize, seed: &SeedSpec) -> Result<Graph> {
    if n == 0 {
        return Err(domain("random tree needs at least one vertex"));
    }
    if n <= 2 {
        return Ok(path(n));
    }
    let mut rng = seed.rng();
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(prufer_decode(n, &code))
}

/// Linear-time Prüfer decoding.
fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges).unwrap()
}

/// Parse the `n m` header format. Line numbers in errors are 1-based.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let parse_err = |line: usize, message: String| Error::Parse { line, message };

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header".into()))?;
    let [n, m] = parse_pair(header).ok_or_else(|| parse_err(hline, format!("malformed header {header:?}")))?;

    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line, l) in lines {
        let [u, v] = parse_pair(l).ok_or_else(|| parse_err(line, format!("malformed edge {l:?}")))?;
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range in ({u}, {v}) for n = {n}")));
        }
        if u > v {
            return Err(parse_err(line, format!("edge ({u}, {v}) must be written with u < v")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(line, format!("duplicate edge ({u}, {v})")));
        }
        g.link(u, v);
        count += 1;
        if count > m {
            return Err(parse_err(line, format!("more than the {m} edges declared")));
        }
    }
    if count != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {count}")));
    }
    g.edges.sort_unstable();
    Ok(g)
}

fn parse_pair(line: &str) -> Option<[usize; 2]> {
    let mut it = line.split_ascii_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some([a, b]),
        _ => None,
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(8 * (g.size() + 1));
    writeln!(s, "{} {}", g.n, g.size()).unwrap();
    for &(a, b) in &g.edges {
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}
