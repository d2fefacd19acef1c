//! Structural predicates with certificates.
//!
//! Every predicate hands back a witness for its verdict (an elimination
//! order, a hole, a partition, a pair of independent sets) so callers can
//! check the answer without trusting the search that produced it.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, ones};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, GraphFamily};

/// Brute-force induced-cycle searches are limited to this many vertices.
pub const HOLE_SEARCH_CAP: usize = 20;
/// Maximal independent set enumeration is limited to this many vertices.
pub const WELL_COVERED_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityCertificate {
    pub chordal: bool,
    /// Perfect elimination ordering, present iff chordal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peo: Option<Vec<usize>>,
    /// Chordless cycle of length at least 4, present iff not chordal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<Vec<usize>>,
}

impl ChordalityCertificate {
    /// Checks the certificate against `g` without re-running the recognizer.
    pub fn verify(&self, g: &Graph) -> bool {
        match (self.chordal, &self.peo, &self.hole) {
            (true, Some(peo), None) => is_perfect_elimination_order(g, peo),
            (false, None, Some(hole)) => hole.len() >= 4 && is_induced_cycle(g, hole),
            _ => false,
        }
    }
}

/// True iff `order` lists every vertex once and each vertex's neighbors that
/// come later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut seen = 0u64;
    for &v in order {
        if v >= g.n() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    let mut later = 0u64;
    for &v in order.iter().rev() {
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
        later |= bit(v);
    }
    true
}

/// True iff `cycle` lists distinct vertices, consecutive ones (cyclically)
/// are adjacent, and no other pair is.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mask = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    if mask.count_ones() as usize != k || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let expected = bit(cycle[(i + 1) % k]) | bit(cycle[(i + k - 1) % k]);
        g.neighbors(v) & mask == expected
    })
}

/// Maximum cardinality search; returns the visit order.
fn mcs_order(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut weight = vec![0u32; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited & bit(v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited |= bit(v);
        for u in ones(adj[v] & !visited) {
            weight[u] += 1;
        }
        order.push(v);
    }
    order
}

fn rows_clique(adj: &[u64], set: u64) -> bool {
    ones(set).all(|v| (adj[v] | bit(v)) & set == set)
}

/// Chordality of the graph with adjacency rows `adj`, no certificate.
pub(crate) fn chordal_rows(adj: &[u64]) -> bool {
    let visit = mcs_order(adj);
    // reverse visit order is the candidate elimination order; walking the
    // visit order, `earlier` holds the vertices eliminated after v
    let mut earlier = 0u64;
    for &v in &visit {
        if !rows_clique(adj, adj[v] & earlier) {
            return false;
        }
        earlier |= bit(v);
    }
    true
}

/// Co-chordality of the graph with adjacency rows `adj` on `adj.len()`
/// vertices.
pub(crate) fn cochordal_rows(adj: &[u64]) -> bool {
    let n = adj.len();
    let mask = crate::bits::full(n);
    let comp: Vec<u64> = (0..n).map(|i| !adj[i] & mask & !bit(i)).collect();
    chordal_rows(&comp)
}

/// Chordless cycle of length >= 4 through some vertex, found by checking
/// every vertex `v` and non-adjacent neighbor pair `u, w` for a shortest
/// `u`-`w` path avoiding the rest of `N[v]`. Complete: every hole yields
/// such a triple.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nv = g.neighbors(v);
        for u in ones(nv) {
            for w in ones(nv & !g.neighbors(u) & !bit(u)) {
                if w < u {
                    continue;
                }
                let allowed = g.vertices() & !(nv | bit(v)) | bit(u) | bit(w);
                if let Some(path) = shortest_path(g, u, w, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: u64) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = bit(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in ones(g.neighbors(x) & allowed & !seen) {
            seen |= bit(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    None
}

/// Chordality by maximum cardinality search followed by elimination-order
/// verification; on failure a hole is extracted.
pub fn is_chordal(g: &Graph) -> ChordalityCertificate {
    let mut peo = mcs_order(g.adj());
    peo.reverse();
    if is_perfect_elimination_order(g, &peo) {
        ChordalityCertificate {
            chordal: true,
            peo: Some(peo),
            hole: None,
        }
    } else {
        let hole = find_hole(g).expect("a non-chordal graph has a hole");
        ChordalityCertificate {
            chordal: false,
            peo: None,
            hole: Some(hole),
        }
    }
}

/// Chordality of the complement; the certificate refers to the complement.
pub fn is_cochordal(g: &Graph) -> ChordalityCertificate {
    is_chordal(&g.complement())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartitionWitness {
    pub clique: u64,
    pub independent: u64,
}

/// A partition of the vertices into a clique and an independent set, if one
/// exists. Any split partition extends to one whose clique side is a maximal
/// clique, so maximal cliques are tried largest first.
pub fn is_split(g: &Graph) -> Option<SplitPartitionWitness> {
    if g.n() == 0 {
        return Some(SplitPartitionWitness {
            clique: 0,
            independent: 0,
        });
    }
    let mut cliques = maximal_cliques(g);
    cliques.sort_by_key(|&k| (std::cmp::Reverse(k.count_ones()), k));
    cliques.into_iter().find_map(|k| {
        let rest = g.vertices() & !k;
        g.is_independent(rest).then_some(SplitPartitionWitness {
            clique: k,
            independent: rest,
        })
    })
}

/// Calls `visit` on every maximal clique of `g` (Bron–Kerbosch with pivot).
/// The edgeless graph on zero vertices has the single maximal clique `0`.
pub fn for_each_maximal_clique<B>(
    g: &Graph,
    mut visit: impl FnMut(u64) -> ControlFlow<B>,
) -> Option<B> {
    fn rec<B>(
        adj: &[u64],
        r: u64,
        mut p: u64,
        mut x: u64,
        visit: &mut impl FnMut(u64) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if p == 0 && x == 0 {
            return visit(r);
        }
        let pivot = ones(p | x)
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .expect("p | x is nonempty");
        for v in ones(p & !adj[pivot]) {
            rec(adj, r | bit(v), p & adj[v], x & adj[v], visit)?;
            p &= !bit(v);
            x |= bit(v);
        }
        ControlFlow::Continue(())
    }
    match rec(g.adj(), 0, g.vertices(), 0, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

pub fn maximal_cliques(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_maximal_clique::<()>(g, |k| {
        out.push(k);
        ControlFlow::Continue(())
    });
    out
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    maximal_cliques(&g.complement())
}

/// Searches for a chordless cycle whose length lies in `min_len..=max_len`
/// (`min_len >= 3`) by extending induced paths from each start vertex, using
/// only vertices above the start. Exponential; intended for small graphs.
pub fn find_induced_cycle(g: &Graph, min_len: usize, max_len: usize) -> Option<Vec<usize>> {
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        forbidden: u64,
        allowed: u64,
        min_len: usize,
        max_len: usize,
    ) -> bool {
        let start = path[0];
        let last = *path.last().expect("path is nonempty");
        // `forbidden` holds the path vertices and all neighbors of interior
        // path vertices other than `last`
        for x in ones(g.neighbors(last) & allowed & !forbidden) {
            let closes = path.len() >= 2 && g.has_edge(x, start);
            if closes {
                let len = path.len() + 1;
                if (min_len..=max_len).contains(&len) {
                    path.push(x);
                    return true;
                }
                continue;
            }
            if path.len() + 1 >= max_len {
                continue;
            }
            let nf = forbidden
                | bit(x)
                | if path.len() >= 2 {
                    g.neighbors(last)
                } else {
                    0
                };
            path.push(x);
            if extend(g, path, nf, allowed, min_len, max_len) {
                return true;
            }
            path.pop();
        }
        false
    }
    let n = g.n();
    for s in 0..n {
        let allowed = g.vertices() & !crate::bits::full(s + 1);
        let mut path = vec![s];
        if extend(g, &mut path, bit(s), allowed, min_len.max(3), max_len) {
            return Some(path);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakChordality {
    pub weakly_chordal: bool,
    /// An induced cycle of length >= 5 and whether it lives in the complement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<Vec<usize>>,
    pub in_complement: bool,
}

/// Weak chordality by brute-force search for long holes in `g` and its
/// complement.
pub fn is_weakly_chordal(g: &Graph) -> Result<WeakChordality> {
    if g.n() > HOLE_SEARCH_CAP {
        return Err(Error::capacity("vertex count", HOLE_SEARCH_CAP, g.n()));
    }
    let n = g.n();
    if let Some(hole) = find_induced_cycle(g, 5, n) {
        return Ok(WeakChordality {
            weakly_chordal: false,
            hole: Some(hole),
            in_complement: false,
        });
    }
    if let Some(hole) = find_induced_cycle(&g.complement(), 5, n) {
        return Ok(WeakChordality {
            weakly_chordal: false,
            hole: Some(hole),
            in_complement: true,
        });
    }
    Ok(WeakChordality {
        weakly_chordal: true,
        hole: None,
        in_complement: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: u64,
    pub side_b: u64,
}

impl Bipartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side_a & self.side_b == 0
            && self.side_a | self.side_b == g.vertices()
            && g.is_independent(self.side_a)
            && g.is_independent(self.side_b)
    }
}

/// Two-coloring by BFS; the lowest vertex of each component goes to side A.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut side_a = 0u64;
    let mut side_b = 0u64;
    for comp in g.components(g.vertices()) {
        let root = comp.trailing_zeros() as usize;
        let mut layer = bit(root);
        let mut seen = layer;
        let mut even = true;
        while layer != 0 {
            if even {
                side_a |= layer;
            } else {
                side_b |= layer;
            }
            let mut next = 0;
            for v in ones(layer) {
                next |= g.neighbors(v);
            }
            next &= !seen;
            seen |= next;
            layer = next;
            even = !even;
        }
    }
    let b = Bipartition { side_a, side_b };
    (g.is_independent(side_a) && g.is_independent(side_b)).then_some(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellCovered {
    pub well_covered: bool,
    /// Two maximal independent sets of different sizes when not well-covered.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(u64, u64)>,
}

/// Enumerates maximal independent sets, stopping at the first size mismatch.
pub fn is_well_covered(g: &Graph) -> Result<WellCovered> {
    if g.n() > WELL_COVERED_CAP {
        return Err(Error::capacity("vertex count", WELL_COVERED_CAP, g.n()));
    }
    let mut first: Option<u64> = None;
    let mismatch = for_each_maximal_clique(&g.complement(), |s| match first {
        None => {
            first = Some(s);
            ControlFlow::Continue(())
        }
        Some(f) if f.count_ones() != s.count_ones() => ControlFlow::Break((f, s)),
        Some(_) => ControlFlow::Continue(()),
    });
    Ok(WellCovered {
        well_covered: mismatch.is_none(),
        witness: mismatch,
    })
}

/// A vertex set inducing `pattern`, for the patterns `2K2`
/// (`Matching { m: 2 }`), the claw (`CompleteBipartite { m: 1, n: 3 }`, either
/// orientation) and `Cycle { n }`.
pub fn has_induced(g: &Graph, pattern: &GraphFamily) -> Result<Option<u64>> {
    match *pattern {
        GraphFamily::Matching { m: 2 } => Ok(find_induced_2k2(g)),
        GraphFamily::CompleteBipartite { m: 1, n: 3 }
        | GraphFamily::CompleteBipartite { m: 3, n: 1 } => Ok(find_induced_claw(g)),
        GraphFamily::Cycle { n } => {
            pattern.validate()?;
            if n > 4 && g.n() > HOLE_SEARCH_CAP {
                return Err(Error::capacity("vertex count", HOLE_SEARCH_CAP, g.n()));
            }
            Ok(find_induced_cycle(g, n, n).map(crate::bits::mask_of))
        }
        other => Err(Error::Argument(format!(
            "unsupported induced-subgraph pattern {other:?}"
        ))),
    }
}

pub fn find_induced_2k2(g: &Graph) -> Option<u64> {
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if !g.edges_conflict(e, f) {
                return Some(bit(e.0) | bit(e.1) | bit(f.0) | bit(f.1));
            }
        }
    }
    None
}

pub fn find_induced_claw(g: &Graph) -> Option<u64> {
    for v in 0..g.n() {
        let nb: Vec<usize> = ones(g.neighbors(v)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(bit(v) | bit(a) | bit(b) | bit(c));
                    }
                }
            }
        }
    }
    None
}

/// Perfect matching of a bipartite graph by augmenting paths, or `None`
/// when the sides differ in size or no perfect matching exists.
pub fn perfect_matching_bipartite(g: &Graph, b: &Bipartition) -> Option<EdgeSet> {
    debug_assert!(b.is_valid_for(g));
    if b.side_a.count_ones() != b.side_b.count_ones() {
        return None;
    }
    let mate = bipartite_max_matching(g, b.side_a);
    if mate.iter().filter(|m| m.is_some()).count() != g.n() {
        return None;
    }
    let pairs = (0..g.n())
        .filter(|&v| b.side_a & bit(v) != 0)
        .map(|v| (v, mate[v].expect("every vertex is matched")));
    Some(EdgeSet::from_pairs(g.n(), pairs).expect("matched pairs are edges"))
}

/// Maximum matching of a bipartite graph with one side `left`, as a mate
/// table (Kuhn's augmenting paths).
pub(crate) fn bipartite_max_matching(g: &Graph, left: u64) -> Vec<Option<usize>> {
    fn augment(g: &Graph, a: usize, seen: &mut u64, mate: &mut [Option<usize>]) -> bool {
        for b in ones(g.neighbors(a) & !*seen) {
            *seen |= bit(b);
            let free = match mate[b] {
                None => true,
                Some(a2) => augment(g, a2, seen, mate),
            };
            if free {
                mate[a] = Some(b);
                mate[b] = Some(a);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; g.n()];
    for a in ones(left) {
        let mut seen = 0u64;
        augment(g, a, &mut seen, &mut mate);
    }
    mate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::mask_of;

    fn fam(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }
    fn cycle(n: usize) -> Graph {
        fam(GraphFamily::Cycle { n })
    }
    fn path(n: usize) -> Graph {
        fam(GraphFamily::Path { n })
    }
    fn complete(n: usize) -> Graph {
        fam(GraphFamily::Complete { n })
    }
    fn matching(m: usize) -> Graph {
        fam(GraphFamily::Matching { m })
    }

    #[test]
    fn chordal_examples() {
        let k4 = is_chordal(&complete(4));
        assert!(k4.chordal && k4.verify(&complete(4)));
        // every ordering of K4 eliminates perfectly
        assert!(is_perfect_elimination_order(&complete(4), &[3, 1, 0, 2]));

        let c4 = is_chordal(&cycle(4));
        assert!(!c4.chordal);
        assert_eq!(c4.hole.as_ref().unwrap().len(), 4);
        assert!(c4.verify(&cycle(4)));

        assert!(is_chordal(&path(5)).chordal);
        assert!(is_chordal(&Graph::edgeless(0).unwrap()).chordal);
    }

    #[test]
    fn cochordal_examples() {
        assert!(is_cochordal(&cycle(4)).chordal);
        let m2 = is_cochordal(&matching(2));
        assert!(!m2.chordal);
        assert!(m2.verify(&matching(2).complement()));
        assert!(!is_cochordal(&cycle(5)).chordal);
    }

    #[test]
    fn split_examples() {
        let claw = fam(GraphFamily::claw());
        let w = is_split(&claw).unwrap();
        assert_eq!(w.clique & 1, 1);
        assert!(claw.is_clique(w.clique) && claw.is_independent(w.independent));
        assert!(is_split(&cycle(5)).is_none());
        assert!(is_split(&cycle(4)).is_none());
    }

    #[test]
    fn c4_has_no_split_partition_by_exhaustion() {
        let c4 = cycle(4);
        let found = (0u64..16).any(|k| c4.is_clique(k) && c4.is_independent(0b1111 & !k));
        assert!(!found);
    }

    #[test]
    fn weakly_chordal_examples() {
        assert!(is_weakly_chordal(&path(6)).unwrap().weakly_chordal);
        assert!(is_weakly_chordal(&cycle(4)).unwrap().weakly_chordal);
        let c5 = is_weakly_chordal(&cycle(5)).unwrap();
        assert!(!c5.weakly_chordal);
        assert_eq!(c5.hole.as_ref().unwrap().len(), 5);
        let c6 = is_weakly_chordal(&cycle(6)).unwrap();
        assert!(!c6.weakly_chordal && !c6.in_complement);
        assert!(is_induced_cycle(&cycle(6), c6.hole.as_ref().unwrap()));
        // complement of C6 has the induced C6's complement... a 6-hole in
        // the complement of the complement
        let cc6 = is_weakly_chordal(&cycle(6).complement()).unwrap();
        assert!(!cc6.weakly_chordal && cc6.in_complement);
        assert!(is_weakly_chordal(&Graph::edgeless(21).unwrap()).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let b = is_bipartite(&cycle(6)).unwrap();
        assert_eq!(b.side_a, 0b010101);
        assert!(is_bipartite(&cycle(5)).is_none());
        let b = is_bipartite(&matching(3)).unwrap();
        assert_eq!(b.side_a, 0b010101);
        assert!(b.is_valid_for(&matching(3)));
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&cycle(4)).unwrap().well_covered);
        let p3 = is_well_covered(&path(3)).unwrap();
        assert!(!p3.well_covered);
        let (a, b) = p3.witness.unwrap();
        assert_ne!(a.count_ones(), b.count_ones());
        for g in [cycle(5), path(4), complete(3), fam(GraphFamily::Petersen)] {
            assert!(is_well_covered(&g.whisker().unwrap()).unwrap().well_covered);
        }
        assert!(is_well_covered(&Graph::edgeless(33).unwrap()).is_err());
    }

    #[test]
    fn induced_pattern_examples() {
        let m2 = GraphFamily::Matching { m: 2 };
        assert_eq!(has_induced(&cycle(5), &m2).unwrap(), None);
        assert_eq!(
            has_induced(&path(5), &m2).unwrap(),
            Some(mask_of([0, 1, 3, 4]))
        );
        let pbar = fam(GraphFamily::Petersen).complement();
        assert_eq!(has_induced(&pbar, &GraphFamily::claw()).unwrap(), None);
        assert_eq!(has_induced(&pbar, &m2).unwrap(), None);
        assert!(has_induced(&fam(GraphFamily::claw()), &GraphFamily::claw())
            .unwrap()
            .is_some());
        assert_eq!(
            has_induced(&cycle(6), &GraphFamily::Cycle { n: 6 }).unwrap(),
            Some(0b111111)
        );
        assert_eq!(
            has_induced(&cycle(6), &GraphFamily::Cycle { n: 5 }).unwrap(),
            None
        );
        assert!(has_induced(&complete(4), &GraphFamily::Cycle { n: 3 })
            .unwrap()
            .is_some());
        assert!(matches!(
            has_induced(&cycle(5), &GraphFamily::Petersen),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn c5_two_disjoint_edges_always_joined() {
        let c5 = cycle(5);
        let edges = c5.edges();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let disjoint = (bit(e.0) | bit(e.1)) & (bit(f.0) | bit(f.1)) == 0;
                if disjoint {
                    let span = bit(e.0) | bit(e.1) | bit(f.0) | bit(f.1);
                    assert!(c5.induced_subgraph(span).edge_count() > 2);
                }
            }
        }
    }

    #[test]
    fn perfect_matching_examples() {
        let c6 = cycle(6);
        let b = is_bipartite(&c6).unwrap();
        let m = perfect_matching_bipartite(&c6, &b).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.is_matching_in(&c6));
        let k23 = fam(GraphFamily::CompleteBipartite { m: 2, n: 3 });
        let b = is_bipartite(&k23).unwrap();
        assert!(perfect_matching_bipartite(&k23, &b).is_none());
        // equal sides, no perfect matching: a star plus an edge
        let g = Graph::from_edges(6, [(0, 1), (0, 3), (0, 5), (2, 3)]).unwrap();
        let b = is_bipartite(&g).unwrap();
        assert!(perfect_matching_bipartite(&g, &b).is_none());
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        let mut k = maximal_cliques(&cycle(5));
        k.sort();
        assert_eq!(k.len(), 5);
        assert_eq!(maximal_cliques(&Graph::edgeless(0).unwrap()), vec![0]);
        assert_eq!(maximal_cliques(&complete(4)), vec![0b1111]);
        let mis = maximal_independent_sets(&path(3));
        assert_eq!(mis.len(), 2);
    }
}
