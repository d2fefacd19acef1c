//! Co-chordal edge covers: split covers, chain covers of well-covered
//! bipartite graphs, an exact search, and a greedy bound.
//!
//! A part is an edge set; its graph is the spanning subgraph on the host's
//! vertex set. Vertices a part does not touch become universal vertices of
//! the complement, which never affects chordality, so host indices are kept.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits::{bit, full, ones};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::homology::{complex_regularity, FieldSpec};
use crate::recognition::{
    cochordal_rows, find_induced_2k2, is_bipartite, is_cochordal, is_well_covered,
    maximal_independent_sets, perfect_matching_bipartite, ChordalityCertificate,
};

use super::numbers::{
    chromatic_number, induced_matching_number, k_coloring, INDUCED_MATCHING_EDGE_CAP,
};

pub const SPLIT_COVER_CAP: usize = 20;
/// Hard bound on the edges handed to the exact cover search.
pub const COVER_SEARCH_EDGE_CAP: usize = 64;
/// Largest connected component handed to the exact co-chordal search.
pub const COCHORD_COMPONENT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverKind {
    Split,
    Chain,
    Cochordal,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub parts: Vec<EdgeSet>,
    pub kind: CoverKind,
    /// Chordality certificate of the complement of each part's graph.
    pub certificates: Vec<ChordalityCertificate>,
}

impl Cover {
    pub fn new(parts: Vec<EdgeSet>, kind: CoverKind) -> Self {
        let certificates = parts.iter().map(|p| is_cochordal(&p.to_graph())).collect();
        Cover {
            parts,
            kind,
            certificates,
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts use only edges of `g`, together cover every edge, and every
    /// certificate proves its part co-chordal.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.parts.len() != self.certificates.len() {
            return false;
        }
        let mut union = EdgeSet::new(g.n());
        for (part, cert) in self.parts.iter().zip(&self.certificates) {
            if part.owner_n() != g.n() || part.iter().any(|(u, v)| !g.has_edge(u, v)) {
                return false;
            }
            if !cert.chordal || !cert.verify(&part.to_graph().complement()) {
                return false;
            }
            union = union.union(part);
        }
        union == EdgeSet::all_of(g)
    }

    fn relabel(self, owner_n: usize, map: &[usize], kind: CoverKind) -> Cover {
        let parts = self
            .parts
            .into_iter()
            .map(|p| {
                EdgeSet::from_pairs(owner_n, p.iter().map(|(u, v)| (map[u], map[v])))
                    .expect("relabeled endpoints are in range")
            })
            .collect();
        Cover::new(parts, kind)
    }
}

/// Independent `j0` plus cliques `cliques`, together partitioning `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub j0: u64,
    pub cliques: Vec<u64>,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = self.j0;
        for &c in &self.cliques {
            if c & seen != 0 || !g.is_clique(c) {
                return false;
            }
            seen |= c;
        }
        seen == g.vertices() && g.is_independent(self.j0)
    }

    /// Part `i` holds every edge meeting clique `i`.
    pub fn cover(&self, g: &Graph) -> Cover {
        let parts = self
            .cliques
            .iter()
            .map(|&c| {
                let edges = g
                    .edges()
                    .into_iter()
                    .filter(|&(u, v)| c & (bit(u) | bit(v)) != 0);
                EdgeSet::from_pairs(g.n(), edges).expect("edges of g")
            })
            .collect();
        Cover::new(parts, CoverKind::Split)
    }
}

/// Minimum split partition. For a fixed independent side the fewest cliques
/// covering the rest is the chromatic number of the rest's complement, and
/// enlarging the independent side never hurts, so only maximal independent
/// sets are tried. Afterwards independent vertices joined to every vertex of
/// some clique are moved into it.
pub fn split_cover(g: &Graph) -> Result<(SplitPartition, Cover)> {
    if g.n() > SPLIT_COVER_CAP {
        return Err(Error::capacity("vertex count", SPLIT_COVER_CAP, g.n()));
    }
    let mut candidates = maximal_independent_sets(g);
    candidates.sort_unstable();
    let mut best: Option<SplitPartition> = None;
    for j0 in candidates {
        let rest = g.vertices() & !j0;
        let keep: Vec<usize> = ones(rest).collect();
        let sub = g.induced_subgraph(rest).complement();
        let limit = best
            .as_ref()
            .map_or(keep.len(), |b| b.cliques.len().saturating_sub(1));
        let Some(classes) = (0..=limit).find_map(|k| k_coloring(sub.adj(), k)) else {
            continue;
        };
        let cliques = classes
            .into_iter()
            .map(|c| ones(c).fold(0u64, |m, i| m | bit(keep[i])))
            .collect();
        best = Some(SplitPartition { j0, cliques });
    }
    let mut part = best.expect("the empty graph has the partition (V, [])");
    for v in ones(part.j0) {
        if let Some(c) = part.cliques.iter_mut().find(|c| **c & !g.neighbors(v) == 0) {
            *c |= bit(v);
            part.j0 &= !bit(v);
        }
    }
    debug_assert!(part.is_valid_for(g));
    let cover = part.cover(g);
    Ok((part, cover))
}

/// Cover of a well-covered bipartite graph without isolated vertices by
/// `indmatch(g)` chain graphs, built from a perfect matching `M`: the
/// conflict graph on `M` is covered by cliques and each clique contributes
/// every edge incident to its matching edges.
///
/// The edges incident to a clique can contain an induced 2K2 whose joining
/// edge of `g` touches neither matching edge. Such a part is extended to a
/// chain subgraph of `g` (any co-chordal subgraph of a bipartite graph is
/// one) when `g` has at most [`COCHORD_COMPONENT_CAP`] vertices. If a colour
/// class of the complement still fails, a cover by the same number of
/// cliques with admissible parts is searched for. Parts may overlap.
pub fn chain_cover_wc_bipartite(g: &Graph) -> Result<Cover> {
    if is_bipartite(g).is_none() {
        return Err(Error::Argument("graph is not bipartite".into()));
    }
    if g.isolated() != 0 {
        return Err(Error::Argument("graph has isolated vertices".into()));
    }
    if !is_well_covered(g)?.well_covered {
        return Err(Error::Argument("graph is not well-covered".into()));
    }
    let b = is_bipartite(g).expect("checked above");
    let m = perfect_matching_bipartite(g, &b).ok_or_else(|| {
        Error::InvariantViolation("well-covered bipartite graph without a perfect matching".into())
    })?;
    let matching: Vec<(usize, usize)> = m.iter().collect();
    let m_star = g.matching_conflict_graph(&m)?;
    let colouring = chromatic_number(&m_star.complement())?;
    let k = colouring.value;

    let edges = g.edges();
    let part_of = |clique: u64| -> Result<EdgeSet> {
        let touched =
            ones(clique).fold(0u64, |acc, i| acc | bit(matching[i].0) | bit(matching[i].1));
        EdgeSet::from_pairs(
            g.n(),
            edges
                .iter()
                .copied()
                .filter(|&(u, v)| touched & (bit(u) | bit(v)) != 0),
        )
    };
    let rule = (g.n() <= COCHORD_COMPONENT_CAP).then(|| CochordalRule::new(g));
    let admit = |clique: u64| -> Result<Option<EdgeSet>> {
        let p = part_of(clique)?;
        if find_induced_2k2(&p.to_graph()).is_none() {
            return Ok(Some(p));
        }
        Ok(rule
            .as_ref()
            .and_then(|r| r.extend(p.to_graph().adj()))
            .map(|rows| rows_to_edges(&rows)))
    };

    let mut parts = Vec::with_capacity(k);
    for c in 0..k {
        let class = colouring
            .witness
            .iter()
            .enumerate()
            .filter(|&(_, &col)| col == c)
            .fold(0u64, |acc, (i, _)| acc | bit(i));
        match admit(class)? {
            Some(p) => parts.push(p),
            None => break,
        }
    }
    if parts.len() < k {
        let mut good = Vec::new();
        for c in all_cliques(&m_star, CHAIN_CLIQUE_CAP)? {
            if let Some(p) = admit(c)? {
                good.push((c, p));
            }
        }
        // larger cliques first
        good.sort_by_key(|(c, _)| std::cmp::Reverse(c.count_ones()));
        let masks: Vec<u64> = good.iter().map(|(c, _)| *c).collect();
        let mut chosen = Vec::new();
        if !clique_cover(&masks, full(matching.len()), k, &mut chosen) {
            return Err(Error::InvariantViolation(format!(
                "no cover of the matching conflict graph by {k} cliques with chain-graph parts"
            )));
        }
        parts = chosen.into_iter().map(|i| good[i].1.clone()).collect();
    }
    if let Some(i) = parts
        .iter()
        .position(|p| find_induced_2k2(&p.to_graph()).is_some())
    {
        return Err(Error::InvariantViolation(format!(
            "chain part {i} contains an induced matching of size 2"
        )));
    }
    let cover = Cover::new(parts, CoverKind::Chain);
    if let Some(i) = cover.certificates.iter().position(|c| !c.chordal) {
        return Err(Error::InvariantViolation(format!(
            "chain part {i} is not co-chordal"
        )));
    }
    let im = induced_matching_number(g)?;
    if cover.len() != im.value {
        return Err(Error::InvariantViolation(format!(
            "chain cover has {} parts but the induced matching number is {}",
            cover.len(),
            im.value
        )));
    }
    Ok(cover)
}

/// Bound on the cliques enumerated by the chain-cover fallback.
const CHAIN_CLIQUE_CAP: usize = 1 << 16;

/// Every nonempty clique of `g` as a vertex mask.
fn all_cliques(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    fn rec(g: &Graph, cur: u64, cand: u64, out: &mut Vec<u64>, cap: usize) -> bool {
        for v in ones(cand) {
            let next = cur | bit(v);
            out.push(next);
            if out.len() > cap {
                return false;
            }
            if !rec(g, next, cand & g.neighbors(v) & !full(v + 1), out, cap) {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if rec(g, 0, full(g.n()), &mut out, cap) {
        Ok(out)
    } else {
        Err(Error::capacity(
            "cliques of the matching conflict graph",
            cap,
            out.len(),
        ))
    }
}

/// Chooses at most `k` of `masks` covering `todo`, branching on the lowest
/// uncovered element.
fn clique_cover(masks: &[u64], todo: u64, k: usize, chosen: &mut Vec<usize>) -> bool {
    if todo == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let v = todo.trailing_zeros() as usize;
    for (i, &c) in masks.iter().enumerate() {
        if c & bit(v) != 0 {
            chosen.push(i);
            if clique_cover(masks, todo & !c, k - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Which edge sets may form one part of a cover. `extend` must be monotone:
/// if it fails for a set it fails for every superset.
pub trait PartRule {
    /// Cheap necessary test run first; `rows` already contain `e`.
    fn quick_reject(&self, _rows: &[u64], _e: (usize, usize)) -> bool {
        false
    }

    /// Adjacency rows of an admissible subgraph of the host that contains
    /// every edge in `rows`, if one exists.
    fn extend(&self, rows: &[u64]) -> Option<Vec<u64>>;
}

/// Outcome of a bounded cover search for a fixed number of parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The admissible extension of each class.
    Found(Vec<EdgeSet>),
    Infeasible,
    TimedOut,
}

/// Tries to assign every edge of `g` (in the given order) to one of at most
/// `k` classes, each class extendable under `rule`. A class may only be
/// opened as the next unused index.
pub fn cover_search(
    g: &Graph,
    order: &[(usize, usize)],
    k: usize,
    rule: &dyn PartRule,
    deadline: Option<Instant>,
) -> SearchOutcome {
    struct Ctx<'a> {
        order: &'a [(usize, usize)],
        k: usize,
        rule: &'a dyn PartRule,
        deadline: Option<Instant>,
        nodes: u64,
        timed_out: bool,
        classes: Vec<Vec<u64>>,
        // a current admissible extension of each class
        ext: Vec<Vec<u64>>,
        n: usize,
    }

    fn place(cx: &mut Ctx<'_>, idx: usize, class: usize, e: (usize, usize)) -> bool {
        cx.classes[class][e.0] |= bit(e.1);
        cx.classes[class][e.1] |= bit(e.0);
        let mut saved = None;
        let ok = if cx.ext[class][e.0] & bit(e.1) != 0 {
            true
        } else if cx.rule.quick_reject(&cx.classes[class], e) {
            false
        } else if let Some(x) = cx.rule.extend(&cx.classes[class]) {
            saved = Some(std::mem::replace(&mut cx.ext[class], x));
            true
        } else {
            false
        };
        if ok && rec(cx, idx + 1) {
            return true;
        }
        if let Some(old) = saved {
            cx.ext[class] = old;
        }
        cx.classes[class][e.0] &= !bit(e.1);
        cx.classes[class][e.1] &= !bit(e.0);
        false
    }

    fn rec(cx: &mut Ctx<'_>, idx: usize) -> bool {
        if idx == cx.order.len() {
            return true;
        }
        cx.nodes += 1;
        if cx.nodes.is_multiple_of(1024) {
            if let Some(d) = cx.deadline {
                if Instant::now() >= d {
                    cx.timed_out = true;
                }
            }
        }
        if cx.timed_out {
            return false;
        }
        let e = cx.order[idx];
        for class in 0..cx.classes.len() {
            if place(cx, idx, class, e) {
                return true;
            }
            if cx.timed_out {
                return false;
            }
        }
        if cx.classes.len() < cx.k {
            cx.classes.push(vec![0; cx.n]);
            cx.ext.push(vec![0; cx.n]);
            let last = cx.classes.len() - 1;
            if place(cx, idx, last, e) {
                return true;
            }
            cx.classes.pop();
            cx.ext.pop();
        }
        false
    }

    let mut cx = Ctx {
        order,
        k,
        rule,
        deadline,
        nodes: 0,
        timed_out: false,
        classes: Vec::new(),
        ext: Vec::new(),
        n: g.n(),
    };
    if rec(&mut cx, 0) {
        let parts = cx.ext.iter().map(|rows| rows_to_edges(rows)).collect();
        SearchOutcome::Found(parts)
    } else if cx.timed_out {
        SearchOutcome::TimedOut
    } else {
        SearchOutcome::Infeasible
    }
}

fn rows_to_edges(rows: &[u64]) -> EdgeSet {
    let n = rows.len();
    let pairs = (0..n).flat_map(|u| ones(rows[u] & !full(u + 1)).map(move |v| (u, v)));
    EdgeSet::from_pairs(n, pairs).expect("rows describe a simple graph")
}

fn rows_clique(rows: &[u64], set: u64) -> bool {
    ones(set).all(|v| (rows[v] | bit(v)) & set == set)
}

/// Chordal graph `C` with `mandatory ⊆ C` and `C ∩ forbidden = ∅`, if one
/// exists. Every minimal triangulation is the fill graph of some elimination
/// order, and the fill among the remaining vertices depends only on which
/// vertices are already eliminated, so failed remainders are memoized.
/// Simplicial vertices are eliminated eagerly since they create no fill.
pub fn chordal_sandwich(mandatory: &[u64], forbidden: &[u64]) -> Option<Vec<u64>> {
    fn rec(
        h: &mut Vec<u64>,
        mut remaining: u64,
        forbidden: &[u64],
        failed: &mut HashSet<u64>,
    ) -> bool {
        while let Some(v) = ones(remaining).find(|&v| rows_clique(h, h[v] & remaining)) {
            remaining &= !bit(v);
        }
        if remaining == 0 {
            return true;
        }
        if failed.contains(&remaining) {
            return false;
        }
        for v in ones(remaining) {
            let nb = h[v] & remaining;
            if ones(nb).any(|u| forbidden[u] & nb != 0) {
                continue;
            }
            let saved: Vec<u64> = ones(nb).map(|u| h[u]).collect();
            for u in ones(nb) {
                h[u] |= nb & !bit(u);
            }
            if rec(h, remaining & !bit(v), forbidden, failed) {
                return true;
            }
            for (u, row) in ones(nb).zip(saved) {
                h[u] = row;
            }
        }
        failed.insert(remaining);
        false
    }

    let n = mandatory.len();
    if (0..n).any(|v| mandatory[v] & forbidden[v] != 0) {
        return None;
    }
    let mut h = mandatory.to_vec();
    rec(&mut h, full(n), forbidden, &mut HashSet::new()).then_some(h)
}

/// Parts are subgraphs of the host whose complement is chordal.
pub struct CochordalRule {
    host: Vec<u64>,
    co_host: Vec<u64>,
}

impl CochordalRule {
    pub fn new(g: &Graph) -> Self {
        CochordalRule {
            host: g.adj().to_vec(),
            co_host: g.complement().adj().to_vec(),
        }
    }
}

impl PartRule for CochordalRule {
    /// Two class edges forming an induced `2K2` in the host stay one in every
    /// subgraph of the host.
    fn quick_reject(&self, rows: &[u64], e: (usize, usize)) -> bool {
        let far = full(rows.len()) & !(self.host[e.0] | self.host[e.1] | bit(e.0) | bit(e.1));
        ones(far).any(|c| rows[c] & far != 0)
    }

    fn extend(&self, rows: &[u64]) -> Option<Vec<u64>> {
        if cochordal_rows(rows) {
            return Some(rows.to_vec());
        }
        let n = rows.len();
        let c = chordal_sandwich(&self.co_host, rows)?;
        Some((0..n).map(|v| !c[v] & full(n) & !bit(v)).collect())
    }
}

/// Edges ordered by decreasing degree in the edge conflict graph, ties
/// lexicographic.
pub fn conflict_order(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut keyed: Vec<(usize, (usize, usize))> = edges
        .iter()
        .map(|&e| {
            let deg = edges
                .iter()
                .filter(|&&f| f != e && g.edges_conflict(e, f))
                .count();
            (deg, e)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, e)| e).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochordResult {
    pub value: usize,
    /// False when the time budget ran out; `value` is then an upper bound.
    pub exact: bool,
    pub cover: Cover,
}

/// Co-chordal cover number. A co-chordal graph with edges in two components
/// would contain an induced 2K2, so every part lies inside one component and
/// the number is summed over components. Per component the search deepens
/// from the induced matching number up to the greedy bound.
pub fn cochord_exact(g: &Graph, budget: Option<Duration>) -> Result<CochordResult> {
    let m = g.edge_count();
    if m > COVER_SEARCH_EDGE_CAP {
        return Err(Error::capacity("edge count", COVER_SEARCH_EDGE_CAP, m));
    }
    let comps: Vec<u64> = g
        .components(g.vertices())
        .into_iter()
        .filter(|c| c.count_ones() > 1)
        .collect();
    if let Some(big) = comps.iter().map(|c| c.count_ones() as usize).max() {
        if big > COCHORD_COMPONENT_CAP {
            return Err(Error::capacity(
                "component vertex count",
                COCHORD_COMPONENT_CAP,
                big,
            ));
        }
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let mut value = 0;
    let mut exact = true;
    let mut parts = Vec::new();
    for comp in comps {
        let map: Vec<usize> = ones(comp).collect();
        let h = g.induced_subgraph(comp);
        let (k, ok, cover) = cochord_connected(&h, deadline)?;
        value += k;
        exact &= ok;
        parts.extend(cover.relabel(g.n(), &map, CoverKind::Cochordal).parts);
    }
    Ok(CochordResult {
        value,
        exact,
        cover: Cover::new(parts, CoverKind::Cochordal),
    })
}

fn cochord_connected(h: &Graph, deadline: Option<Instant>) -> Result<(usize, bool, Cover)> {
    let greedy = cochord_greedy(h);
    let lower = if h.edge_count() <= INDUCED_MATCHING_EDGE_CAP {
        induced_matching_number(h)?.value
    } else {
        1
    };
    let order = conflict_order(h);
    let rule = CochordalRule::new(h);
    for k in lower..greedy.len() {
        match cover_search(h, &order, k, &rule, deadline) {
            SearchOutcome::Found(parts) => {
                return Ok((k, true, Cover::new(parts, CoverKind::Cochordal)))
            }
            SearchOutcome::Infeasible => continue,
            SearchOutcome::TimedOut => return Ok((greedy.len(), false, greedy)),
        }
    }
    Ok((greedy.len(), true, greedy))
}

/// Greedy co-chordal cover: each round scans the uncovered edges by
/// decreasing endpoint degree sum, keeps every edge the part can absorb, and
/// emits the part's co-chordal extension. Graphs above the component cap skip
/// the extension and keep only edges leaving the part itself co-chordal.
pub fn cochord_greedy(g: &Graph) -> Cover {
    let mut order = g.edges();
    order.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
    let rule = (g.n() <= COCHORD_COMPONENT_CAP).then(|| CochordalRule::new(g));
    let mut covered = vec![false; order.len()];
    let mut parts = Vec::new();
    while let Some(start) = covered.iter().position(|c| !c) {
        let mut rows = vec![0u64; g.n()];
        let mut ext = rows.clone();
        for i in start..order.len() {
            if covered[i] {
                continue;
            }
            let (u, v) = order[i];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            let next = if ext[u] & bit(v) != 0 {
                Some(ext.clone())
            } else {
                match &rule {
                    Some(r) if !r.quick_reject(&rows, (u, v)) => r.extend(&rows),
                    Some(_) => None,
                    None => cochordal_rows(&rows).then(|| rows.clone()),
                }
            };
            match next {
                Some(x) => ext = x,
                None => {
                    rows[u] &= !bit(v);
                    rows[v] &= !bit(u);
                }
            }
        }
        for (i, &(u, v)) in order.iter().enumerate() {
            if ext[u] & bit(v) != 0 {
                covered[i] = true;
            }
        }
        parts.push(rows_to_edges(&ext));
    }
    Cover::new(parts, CoverKind::Cochordal)
}

/// Whether deleting the clique `j` lowers the regularity by at most one.
pub fn clique_deletion_check(g: &Graph, j: u64, f: FieldSpec) -> Result<bool> {
    if j & !g.vertices() != 0 || !g.is_clique(j) {
        return Err(Error::Argument(
            "vertex set is not a clique of the graph".into(),
        ));
    }
    let whole = complex_regularity(g, f)?.value;
    let rest = complex_regularity(&g.induced_subgraph(g.vertices() & !j), f)?.value;
    Ok(whole <= rest + 1)
}
