//! Finite multigraphs: a vertex set of integer labels plus an ordered edge
//! list of unordered endpoint pairs. Loops (`u == w`) and parallel edges are
//! allowed. The edge list order is stable; it defines [`EdgeRef`] semantics
//! and makes every recursive computation reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

/// Stable handle for one edge occurrence, valid only against the graph it
/// was issued for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge index {index} out of range for a graph with {edges} edges")]
    InvalidEdgeRef { index: usize, edges: usize },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u32),
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("edge {{{u},{w}}} references a vertex outside the vertex set")]
    DanglingEdge { u: u32, w: u32 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6 error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("graph6 encodes only simple graphs: {0}")]
    NotSimple(String),
}

/// Input formats accepted by [`Graph::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// An immutable multigraph value. All operations return new graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<u32>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph {
            vertices: BTreeSet::new(),
            edges: Vec::new(),
        }
    }

    /// Builds a graph from explicit parts, validating that every endpoint
    /// is a vertex. Edge endpoints are normalized to `(min, max)`.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let mut list = Vec::new();
        for (u, w) in edges {
            if !vertices.contains(&u) || !vertices.contains(&w) {
                return Err(GraphError::DanglingEdge { u, w });
            }
            list.push(normalize(u, w));
        }
        Ok(Graph {
            vertices,
            edges: list,
        })
    }

    /// Graph with vertices `1..=n` and no edges.
    pub fn edgeless(n: u32) -> Graph {
        Graph {
            vertices: (1..=n).collect(),
            edges: Vec::new(),
        }
    }

    /// Complete simple graph on vertices `1..=n`, edges in lexicographic
    /// order.
    pub fn complete(n: u32) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 1..=n {
            for w in (u + 1)..=n {
                g.edges.push((u, w));
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u32) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 1..n {
            g.edges.push((u, u + 1));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    pub fn has_vertex(&self, u: u32) -> bool {
        self.vertices.contains(&u)
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        (0..self.edges.len()).map(EdgeRef)
    }

    pub fn endpoints(&self, e: EdgeRef) -> Result<(u32, u32), GraphError> {
        self.edges
            .get(e.0)
            .copied()
            .ok_or(GraphError::InvalidEdgeRef {
                index: e.0,
                edges: self.edges.len(),
            })
    }

    pub fn is_loop(&self, e: EdgeRef) -> Result<bool, GraphError> {
        let (u, w) = self.endpoints(e)?;
        Ok(u == w)
    }

    /// Removes the edge at position `e`; every other edge keeps its
    /// relative order.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        self.endpoints(e)?;
        let mut out = self.clone();
        out.edges.remove(e.0);
        Ok(out)
    }

    /// Contracts the edge at `e`. For `{u,w}` with `u != w` the larger
    /// label is merged into the smaller and parallel copies become loops.
    /// Contracting a loop only deletes it; the vertex stays.
    pub fn contract_edge(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        let (u, w) = self.endpoints(e)?;
        let mut out = self.clone();
        out.edges.remove(e.0);
        if u == w {
            return Ok(out);
        }
        let (keep, gone) = (u.min(w), u.max(w));
        out.vertices.remove(&gone);
        for edge in &mut out.edges {
            let (a, b) = *edge;
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            *edge = normalize(a, b);
        }
        Ok(out)
    }

    /// Extracts the edge at `e`: its incident vertices vanish together with
    /// every edge touching them.
    pub fn extract_edge(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        let (u, w) = self.endpoints(e)?;
        let g = self.delete_vertex(u)?;
        if w == u {
            Ok(g)
        } else {
            g.delete_vertex(w)
        }
    }

    /// Removes `u` and all incident edges.
    pub fn delete_vertex(&self, u: u32) -> Result<Graph, GraphError> {
        if !self.vertices.contains(&u) {
            return Err(GraphError::UnknownVertex(u));
        }
        let mut out = self.clone();
        out.vertices.remove(&u);
        out.edges.retain(|&(a, b)| a != u && b != u);
        Ok(out)
    }

    pub fn delete_vertices(&self, set: &BTreeSet<u32>) -> Result<Graph, GraphError> {
        for &u in set {
            if !self.vertices.contains(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
        }
        let mut out = self.clone();
        out.vertices.retain(|v| !set.contains(v));
        out.edges
            .retain(|&(a, b)| !set.contains(&a) && !set.contains(&b));
        Ok(out)
    }

    /// Disjoint union; the second operand's labels are shifted above this
    /// graph's maximum.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertices.iter().next_back().map_or(0, |&m| m + 1);
        let mut out = self.clone();
        out.vertices.extend(other.vertices.iter().map(|&v| v + offset));
        out.edges
            .extend(other.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        out
    }

    /// Subgraph induced by `w`: exactly the edges with all endpoints in
    /// `w`, preserving multiplicity and list order.
    pub fn induced_subgraph(&self, w: &BTreeSet<u32>) -> Result<Graph, GraphError> {
        for &u in w {
            if !self.vertices.contains(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| w.contains(&a) && w.contains(&b))
            .copied()
            .collect();
        Ok(Graph {
            vertices: w.clone(),
            edges,
        })
    }

    /// Number of connected components; isolated vertices count, the empty
    /// graph has none.
    pub fn component_count(&self) -> usize {
        let index: BTreeMap<u32, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for &(u, w) in &self.edges {
            uf.union(index[&u], index[&w]);
        }
        uf.count()
    }

    /// Number of edges incident to `u`; a loop at `u` is one incident edge.
    pub fn degree(&self, u: u32) -> Result<usize, GraphError> {
        if !self.vertices.contains(&u) {
            return Err(GraphError::UnknownVertex(u));
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == u || b == u)
            .count())
    }

    /// Map from degree to the number of vertices having it.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for &u in &self.vertices {
            let d = self.degree(u).expect("vertex is in the graph");
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Smallest vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<u32> {
        let mut touched = BTreeSet::new();
        for &(a, b) in &self.edges {
            touched.insert(a);
            touched.insert(b);
        }
        self.vertices.iter().copied().find(|v| !touched.contains(v))
    }

    /// A multigraph is a forest exactly when `|E| = |V| - k(G)`; loops and
    /// parallel edges both break the equality.
    pub fn is_forest(&self) -> bool {
        self.edge_count() == self.vertex_count() - self.component_count()
    }

    /// The vertex-deleted subgraphs, one per vertex in ascending label
    /// order (a multiset: duplicates are preserved).
    pub fn deck(&self) -> Result<Vec<Graph>, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        self.vertices
            .iter()
            .map(|&u| self.delete_vertex(u))
            .collect()
    }

    pub fn parse(input: &str, format: GraphFormat) -> Result<Graph, GraphError> {
        match format {
            GraphFormat::Graph6 => parse_graph6(input),
            GraphFormat::EdgeList => parse_edgelist(input),
        }
    }

    /// Edge list text: `n m` header, then one `u w` line per edge, using
    /// labels `1..=n` relative to the sorted vertex order.
    pub fn to_edgelist_string(&self) -> String {
        let index: BTreeMap<u32, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i + 1))
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count());
        for &(u, w) in &self.edges {
            let _ = writeln!(out, "{} {}", index[&u], index[&w]);
        }
        out
    }

    /// Standard graph6 encoding; defined for simple graphs only.
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        let n = self.vertex_count();
        let index: BTreeMap<u32, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut adj = vec![false; n * n];
        for &(u, w) in &self.edges {
            if u == w {
                return Err(GraphError::NotSimple(format!("loop at vertex {u}")));
            }
            let (i, j) = (index[&u], index[&w]);
            if adj[i * n + j] {
                return Err(GraphError::NotSimple(format!(
                    "parallel edge between {u} and {w}"
                )));
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        let mut out = String::new();
        if n <= 62 {
            out.push((63 + n as u8) as char);
        } else {
            return Err(GraphError::NotSimple(format!(
                "graph6 encoder supports at most 62 vertices, got {n}"
            )));
        }
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(adj[i * n + j]);
            }
        }
        for chunk in bits.chunks(6) {
            let mut value = 0u8;
            for (k, &bit) in chunk.iter().enumerate() {
                if bit {
                    value |= 1 << (5 - k);
                }
            }
            out.push((63 + value) as char);
        }
        Ok(out)
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

fn normalize(u: u32, w: u32) -> (u32, u32) {
    (u.min(w), u.max(w))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

fn parse_edgelist(input: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(u32, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                line: lineno,
                msg: format!("expected two integers, got {:?}", line),
            });
        }
        let parse_num = |s: &str| -> Result<u64, GraphError> {
            s.parse::<u64>().map_err(|_| GraphError::Parse {
                line: lineno,
                msg: format!("invalid integer {:?}", s),
            })
        };
        let a = parse_num(fields[0])?;
        let b = parse_num(fields[1])?;
        match header {
            None => {
                if a > u32::MAX as u64 {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("vertex count {a} too large"),
                    });
                }
                header = Some((a as u32, b as usize));
            }
            Some((n, m)) => {
                if edges.len() >= m {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a < 1 || a > n as u64 || b < 1 || b > n as u64 {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("edge ({a}, {b}) outside vertex range 1..={n}"),
                    });
                }
                edges.push(normalize(a as u32, b as u32));
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 1,
        msg: "missing `n m` header line".to_string(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: input.lines().count(),
            msg: format!("declared {m} edges but found {}", edges.len()),
        });
    }
    Ok(Graph {
        vertices: (1..=n).collect(),
        edges,
    })
}

fn parse_graph6(input: &str) -> Result<Graph, GraphError> {
    let text = input.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6 {
            pos: 0,
            msg: "empty input".to_string(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6 {
                pos: i,
                msg: format!("byte {b:#x} outside the graph6 alphabet"),
            });
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6 {
                pos: bytes.len(),
                msg: "truncated 3-byte vertex count".to_string(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as u64;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::Graph6 {
                pos: bytes.len(),
                msg: "truncated 6-byte vertex count".to_string(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as u64;
        }
        (n, 8)
    };
    if n > 100_000 {
        return Err(GraphError::Graph6 {
            pos: 0,
            msg: format!("vertex count {n} beyond supported size"),
        });
    }
    let n = n as usize;
    let bit_len = n * n.saturating_sub(1) / 2;
    let needed = bit_len.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(GraphError::Graph6 {
            pos,
            msg: format!(
                "expected {needed} adjacency bytes for {n} vertices, got {}",
                bytes.len() - pos
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(bit_len);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while pos < bytes.len() {
        let value = bytes[pos] - 63;
        for k in 0..6 {
            let bit = (value >> (5 - k)) & 1 == 1;
            if bit_index < bit_len {
                if bit {
                    let (i, j) = pairs[bit_index];
                    edges.push((i as u32 + 1, j as u32 + 1));
                }
            } else if bit {
                return Err(GraphError::Graph6 {
                    pos,
                    msg: "nonzero padding bits".to_string(),
                });
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(Graph {
        vertices: (1..=n as u32).collect(),
        edges,
    })
}
