//! Influence graphs and plain undirected graphs.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// A declared edge between two node indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: u64,
}

/// A weighted, node-labelled graph without loops or parallel edges.
///
/// Node ids are opaque strings mapped to dense indices in declaration order.
/// An undirected graph behaves exactly like the directed graph carrying both
/// arcs of every edge with the same weight; [`InfluenceGraph::out_arcs`] already
/// exposes that expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceGraph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    thresholds: Vec<u64>,
    edges: Vec<Edge>,
    out: Vec<Vec<(usize, u64)>>,
    directed: bool,
}

impl InfluenceGraph {
    /// Builds and validates a graph from id-labelled nodes and edges.
    pub fn new<N, E, S>(nodes: N, edges: E, directed: bool) -> Result<Self>
    where
        N: IntoIterator<Item = (S, u64)>,
        E: IntoIterator<Item = (S, S, u64)>,
        S: AsRef<str>,
    {
        let mut builder = GraphBuilder::new(directed);
        for (id, threshold) in nodes {
            builder.node(id.as_ref(), threshold)?;
        }
        for (from, to, weight) in edges {
            builder.edge_by_id(from.as_ref(), to.as_ref(), weight)?;
        }
        Ok(builder.build())
    }

    pub fn builder(directed: bool) -> GraphBuilder {
        GraphBuilder::new(directed)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn id(&self, node: usize) -> &str {
        &self.ids[node]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Resolves ids to indices, failing on the first unknown id.
    pub fn indices_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<usize>> {
        ids.iter()
            .map(|id| {
                let id = id.as_ref();
                self.index_of(id)
                    .ok_or_else(|| Error::input(format!("unknown node `{id}`")))
            })
            .collect()
    }

    pub fn threshold(&self, node: usize) -> u64 {
        self.thresholds[node]
    }

    pub fn thresholds(&self) -> &[u64] {
        &self.thresholds
    }

    /// Edges as declared (one entry per undirected edge).
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing arcs `(target, weight)`; both orientations for undirected graphs.
    pub fn out_arcs(&self, node: usize) -> &[(usize, u64)] {
        &self.out[node]
    }

    /// Number of neighbours in an undirected graph, out-degree otherwise.
    pub fn degree(&self, node: usize) -> usize {
        self.out[node].len()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    /// The equivalent directed graph (identity on directed graphs).
    pub fn to_directed(&self) -> InfluenceGraph {
        if self.directed {
            return self.clone();
        }
        let mut builder = GraphBuilder::new(true);
        for (id, &t) in self.ids.iter().zip(&self.thresholds) {
            builder.node(id, t).expect("ids already unique");
        }
        for e in &self.edges {
            builder.edge(e.from, e.to, e.weight).expect("valid arc");
            builder.edge(e.to, e.from, e.weight).expect("valid arc");
        }
        builder.build()
    }

    /// Drops thresholds and weights of an undirected graph.
    pub fn to_simple(&self) -> Result<SimpleGraph> {
        if self.directed {
            return Err(Error::input("expected an undirected graph"));
        }
        let edges: Vec<_> = self.edges.iter().map(|e| (e.from, e.to)).collect();
        SimpleGraph::from_indices(self.ids.clone(), &edges)
    }

    /// An unweighted undirected influence graph over `graph` with thresholds from `label`.
    pub fn from_simple(graph: &SimpleGraph, label: impl Fn(usize) -> u64) -> InfluenceGraph {
        let mut builder = GraphBuilder::new(false);
        for (i, id) in graph.ids().iter().enumerate() {
            builder.node(id, label(i)).expect("ids already unique");
        }
        for &(u, v) in graph.edges() {
            builder.edge(u, v, 1).expect("simple graph edge");
        }
        builder.build()
    }
}

/// Incremental, validating constructor for [`InfluenceGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    directed: bool,
    ids: Vec<String>,
    index: HashMap<String, usize>,
    thresholds: Vec<u64>,
    edges: Vec<Edge>,
    seen: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            ids: Vec::new(),
            index: HashMap::new(),
            thresholds: Vec::new(),
            edges: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn node(&mut self, id: impl Into<String>, threshold: u64) -> Result<usize> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::invariant(
                "duplicate node id",
                format!("node `{id}` declared twice"),
            ));
        }
        let i = self.ids.len();
        self.index.insert(id.clone(), i);
        self.ids.push(id);
        self.thresholds.push(threshold);
        Ok(i)
    }

    pub fn edge(&mut self, from: usize, to: usize, weight: u64) -> Result<()> {
        let n = self.ids.len();
        if from >= n || to >= n {
            return Err(Error::invariant(
                "edge endpoint must be a declared node",
                format!("node index {} out of range", from.max(to)),
            ));
        }
        if from == to {
            return Err(Error::invariant(
                "self-loop forbidden",
                format!("edge {0} -> {0}", self.ids[from]),
            ));
        }
        if weight == 0 {
            return Err(Error::invariant(
                "edge weight must be positive",
                format!("edge {} -> {} has weight 0", self.ids[from], self.ids[to]),
            ));
        }
        let key = if self.directed {
            (from, to)
        } else {
            (from.min(to), from.max(to))
        };
        if !self.seen.insert(key) {
            return Err(Error::invariant(
                "parallel edge forbidden",
                format!("edge {} -> {} declared twice", self.ids[from], self.ids[to]),
            ));
        }
        self.edges.push(Edge { from, to, weight });
        Ok(())
    }

    pub fn edge_by_id(&mut self, from: &str, to: &str, weight: u64) -> Result<()> {
        let lookup = |id: &str| {
            self.index_of(id).ok_or_else(|| {
                Error::invariant(
                    "edge endpoint must be a declared node",
                    format!("unknown node `{id}`"),
                )
            })
        };
        let (u, v) = (lookup(from)?, lookup(to)?);
        self.edge(u, v, weight)
    }

    pub fn build(self) -> InfluenceGraph {
        let mut out = vec![Vec::new(); self.ids.len()];
        for e in &self.edges {
            out[e.from].push((e.to, e.weight));
            if !self.directed {
                out[e.to].push((e.from, e.weight));
            }
        }
        InfluenceGraph {
            ids: self.ids,
            index: self.index,
            thresholds: self.thresholds,
            edges: self.edges,
            out,
            directed: self.directed,
        }
    }
}

/// A simple undirected graph: the input shape of the graph-based games and gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    ids: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new<S: AsRef<str>>(ids: &[S], edges: &[(S, S)]) -> Result<Self> {
        let ids: Vec<String> = ids.iter().map(|s| s.as_ref().to_owned()).collect();
        let index: HashMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != ids.len() {
            return Err(Error::invariant(
                "duplicate node id",
                "graph ids must be unique",
            ));
        }
        let lookup = |id: &str| {
            index.get(id).copied().ok_or_else(|| {
                Error::invariant(
                    "edge endpoint must be a declared node",
                    format!("unknown node `{id}`"),
                )
            })
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        SimpleGraph::from_indices(ids, &pairs)
    }

    /// Validates index-based edges over the given ids.
    pub fn from_indices(ids: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = ids.len();
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invariant(
                    "edge endpoint must be a declared node",
                    format!("index {} out of range", u.max(v)),
                ));
            }
            if u == v {
                return Err(Error::invariant(
                    "self-loop forbidden",
                    format!("edge at `{}`", ids[u]),
                ));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::invariant(
                    "parallel edge forbidden",
                    format!("edge {} - {} declared twice", ids[u], ids[v]),
                ));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(SimpleGraph {
            ids,
            edges: edges.to_vec(),
            adjacency,
        })
    }

    /// Graph on nodes named `0..n` with the given index edges.
    pub fn with_size(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        SimpleGraph::from_indices((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        SimpleGraph::with_size(n, &edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        SimpleGraph::with_size(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        SimpleGraph::with_size(n, &edges).expect("cycle is simple")
    }

    /// The star with one centre (index 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        SimpleGraph::with_size(leaves + 1, &edges).expect("star is simple")
    }

    /// Disjoint union; node ids of `other` are prefixed to stay unique.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let offset = self.len();
        let mut ids: Vec<String> = self.ids.iter().map(|s| format!("a{s}")).collect();
        ids.extend(other.ids.iter().map(|s| format!("b{s}")));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        SimpleGraph::from_indices(ids, &edges).expect("union of simple graphs is simple")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-colours the component containing `start`; `false` on an odd cycle.
    pub fn is_bipartite_component(&self, start: usize) -> bool {
        let mut color = vec![None; self.len()];
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued nodes are coloured");
            for &v in &self.adjacency[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    /// Induced subgraph on `keep` (indices into this graph), preserving order.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut position = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let ids = keep.iter().map(|&v| self.ids[v].clone()).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| position[u] != usize::MAX && position[v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]))
            .collect();
        SimpleGraph::from_indices(ids, &edges).expect("induced subgraph is simple")
    }
}
