//! Immutable simple graphs on at most 64 vertices.
//!
//! Row `i` of the adjacency table is the neighbor set of vertex `i` packed
//! into one machine word. Every constructor keeps the table loop-free and
//! symmetric, and leaves the bits at positions `>= n` clear.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, full, ones, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", MAX_VERTICES, n));
    }
    Ok(())
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("loop at vertex {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, symmetrizing and dropping loops
    /// and out-of-range bits.
    pub fn from_adjacency(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        check_n(n)?;
        let mask = full(n);
        let mut adj: Vec<u64> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| r & mask & !bit(i))
            .collect();
        for i in 0..n {
            for j in ones(adj[i]) {
                adj[j] |= bit(i);
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Argument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adj(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in ones(self.adj[i] & !full(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_independent(&self, set: u64) -> bool {
        ones(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn is_clique(&self, set: u64) -> bool {
        ones(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    /// Vertices of degree zero.
    pub fn isolated(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |m, v| m | bit(v))
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex mask, ordered by lowest vertex.
    pub fn components(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|i| !self.adj[i] & mask & !bit(i)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_n(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(Graph { n, adj, labels })
    }

    /// Subgraph induced on `set`, relabeled in increasing order of the
    /// original indices.
    pub fn induced_subgraph(&self, set: u64) -> Graph {
        let set = set & self.vertices();
        let keep: Vec<usize> = ones(set).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] & bit(u) != 0)
                    .fold(0u64, |m, (k, _)| m | bit(k))
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Graph {
            n: keep.len(),
            adj,
            labels,
        }
    }

    /// Adds a pendant vertex `n + i` to every vertex `i`.
    pub fn whisker(&self) -> Result<Graph> {
        let n = self.n;
        check_n(2 * n)?;
        let mut adj = self.adj.clone();
        for (i, row) in adj.iter_mut().enumerate() {
            *row |= bit(n + i);
        }
        adj.extend((0..n).map(bit));
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .cloned()
                .chain(l.iter().map(|s| format!("{s}'")))
                .collect()
        });
        Ok(Graph {
            n: 2 * n,
            adj,
            labels,
        })
    }

    /// Two edges conflict unless together they induce `2K2`, that is unless
    /// they are vertex-disjoint with no edge between them.
    pub fn edges_conflict(&self, e: (usize, usize), f: (usize, usize)) -> bool {
        let closed = self.adj[e.0] | self.adj[e.1] | bit(e.0) | bit(e.1);
        closed & (bit(f.0) | bit(f.1)) != 0
    }

    /// The graph on the edges of `self` (lexicographic order) where two edges
    /// are adjacent iff they do not form an induced matching.
    pub fn edge_conflict_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.len() > MAX_VERTICES {
            return Err(Error::capacity("edge count", MAX_VERTICES, edges.len()));
        }
        Ok(self.conflict_graph_on(&edges))
    }

    /// Conflict graph restricted to the edges of the matching `m`, in the
    /// order `m` iterates them.
    pub fn matching_conflict_graph(&self, m: &EdgeSet) -> Result<Graph> {
        if !m.is_matching_in(self) {
            return Err(Error::Argument(
                "edge set is not a matching of the graph".into(),
            ));
        }
        let edges: Vec<_> = m.iter().collect();
        Ok(self.conflict_graph_on(&edges))
    }

    fn conflict_graph_on(&self, edges: &[(usize, usize)]) -> Graph {
        let k = edges.len();
        let mut adj = vec![0u64; k];
        for a in 0..k {
            for b in a + 1..k {
                if self.edges_conflict(edges[a], edges[b]) {
                    adj[a] |= bit(b);
                    adj[b] |= bit(a);
                }
            }
        }
        Graph {
            n: k,
            adj,
            labels: None,
        }
    }
}

/// A set of unordered vertex pairs of a host graph on `owner_n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet {
    owner_n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new(owner_n: usize) -> Self {
        EdgeSet {
            owner_n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_pairs(
        owner_n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut s = EdgeSet::new(owner_n);
        for (u, v) in pairs {
            s.insert(u, v)?;
        }
        Ok(s)
    }

    pub fn all_of(g: &Graph) -> Self {
        EdgeSet {
            owner_n: g.n(),
            edges: g.edges().into_iter().collect(),
        }
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v || u >= self.owner_n || v >= self.owner_n {
            return Err(Error::Argument(format!(
                "pair {{{u},{v}}} is not an edge on {} vertices",
                self.owner_n
            )));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn owner_n(&self) -> usize {
        self.owner_n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Endpoints of all edges.
    pub fn vertex_mask(&self) -> u64 {
        self.iter().fold(0, |m, (u, v)| m | bit(u) | bit(v))
    }

    /// The spanning subgraph of the host vertex set with exactly these edges.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.owner_n, self.iter()).expect("edge set endpoints are in range")
    }

    pub fn is_matching_in(&self, g: &Graph) -> bool {
        let mut used = 0u64;
        for (u, v) in self.iter() {
            if !g.has_edge(u, v) || used & (bit(u) | bit(v)) != 0 {
                return false;
            }
            used |= bit(u) | bit(v);
        }
        true
    }

    /// True iff the edges form a matching of `g` that is also an induced
    /// subgraph of `g`.
    pub fn is_induced_matching_in(&self, g: &Graph) -> bool {
        if !self.is_matching_in(g) {
            return false;
        }
        let span = self.vertex_mask();
        g.induced_subgraph(span).edge_count() == self.len()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            owner_n: self.owner_n.max(other.owner_n),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }
}

/// Named graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GraphFamily {
    /// Vertices numbered along the path.
    Path {
        n: usize,
    },
    /// Vertices numbered along the cycle.
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `m` disjoint edges `{2i, 2i+1}`.
    Matching {
        m: usize,
    },
    /// Sides `0..m` and `m..m+n`.
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2)%5`.
    Petersen,
}

impl GraphFamily {
    pub fn claw() -> Self {
        GraphFamily::CompleteBipartite { m: 1, n: 3 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Parameter(msg.to_string()));
        match *self {
            GraphFamily::Path { n } if n < 1 => bad("path needs n >= 1"),
            GraphFamily::Cycle { n } if n < 3 => bad("cycle needs n >= 3"),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            GraphFamily::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            GraphFamily::Cycle { n } => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            GraphFamily::Complete { n } => {
                check_n(n)?;
                Graph::from_adjacency(&vec![full(n); n])
            }
            GraphFamily::Matching { m } => {
                Graph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1)))
            }
            GraphFamily::CompleteBipartite { m, n } => {
                Graph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))
            }
            GraphFamily::Petersen => Graph::from_edges(
                10,
                (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
            ),
        }
    }
}

/// Convenience wrapper over [`GraphFamily::build`].
pub fn make_family(spec: GraphFamily) -> Result<Graph> {
    spec.build()
}
