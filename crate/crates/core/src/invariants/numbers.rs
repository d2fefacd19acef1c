//! Exact integer invariants by branch and bound over bitsets.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, ones};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::recognition::{bipartite_max_matching, is_bipartite};

pub const INDEPENDENCE_CAP: usize = 40;
pub const CHROMATIC_CAP: usize = 24;
pub const MATCHING_CAP: usize = 40;
pub const MIN_MAXIMAL_MATCHING_CAP: usize = 24;
/// Edge bound for the induced matching number.
pub const INDUCED_MATCHING_EDGE_CAP: usize = 40;

/// An invariant value together with the object attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnessed<W> {
    pub value: usize,
    pub witness: W,
}

fn cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::capacity(what, limit, got))
    } else {
        Ok(())
    }
}

/// Greedy sequential coloring of `p`; returns vertices in color order with
/// the running color count, the bound used by the clique search.
fn color_sort(adj: &[u64], p: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand_clique(adj: &[u64], r: u64, mut p: u64, best: &mut u64) {
    let (order, bounds) = color_sort(adj, p);
    for idx in (0..order.len()).rev() {
        if r.count_ones() + bounds[idx] <= best.count_ones() {
            return;
        }
        let v = order[idx];
        let np = p & adj[v];
        if np == 0 {
            if (r | bit(v)).count_ones() > best.count_ones() {
                *best = r | bit(v);
            }
        } else {
            expand_clique(adj, r | bit(v), np, best);
        }
        p &= !bit(v);
    }
}

pub(crate) fn max_clique_rows(adj: &[u64]) -> u64 {
    let mut best = 0;
    expand_clique(adj, 0, crate::bits::full(adj.len()), &mut best);
    best
}

/// Maximum clique; the witness is a vertex mask.
pub fn clique_number(g: &Graph) -> Result<Witnessed<u64>> {
    cap("vertex count", INDEPENDENCE_CAP, g.n())?;
    let set = max_clique_rows(g.adj());
    Ok(Witnessed {
        value: set.count_ones() as usize,
        witness: set,
    })
}

/// Maximum independent set, as a maximum clique of the complement.
pub fn independence_number(g: &Graph) -> Result<Witnessed<u64>> {
    clique_number(&g.complement())
}

/// Exact chromatic number. The witness assigns a color `0..value` to each
/// vertex.
pub fn chromatic_number(g: &Graph) -> Result<Witnessed<Vec<usize>>> {
    cap("vertex count", CHROMATIC_CAP, g.n())?;
    if g.n() == 0 {
        return Ok(Witnessed {
            value: 0,
            witness: Vec::new(),
        });
    }
    let omega = max_clique_rows(g.adj()).count_ones() as usize;
    for k in omega.max(1)..=g.n() {
        if let Some(classes) = k_coloring(g.adj(), k) {
            let mut colors = vec![0; g.n()];
            for (c, &class) in classes.iter().enumerate() {
                for v in ones(class) {
                    colors[v] = c;
                }
            }
            return Ok(Witnessed {
                value: k,
                witness: colors,
            });
        }
    }
    unreachable!("n colors always suffice")
}

/// Color classes of a proper `k`-coloring, if one exists. Vertices are
/// colored in DSATUR order; a vertex may only open the next unused color.
pub(crate) fn k_coloring(adj: &[u64], k: usize) -> Option<Vec<u64>> {
    fn rec(adj: &[u64], uncolored: u64, classes: &mut Vec<u64>, k: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        let v = ones(uncolored)
            .max_by_key(|&v| {
                let sat = classes.iter().filter(|&&c| c & adj[v] != 0).count();
                let deg = (adj[v] & uncolored).count_ones();
                (sat, deg, std::cmp::Reverse(v))
            })
            .expect("uncolored is nonempty");
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= bit(v);
                if rec(adj, uncolored & !bit(v), classes, k) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            if rec(adj, uncolored & !bit(v), classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut classes = Vec::with_capacity(k);
    rec(adj, crate::bits::full(adj.len()), &mut classes, k).then_some(classes)
}

/// Maximum matching. Bipartite graphs use augmenting paths; other graphs a
/// branch and bound that matches or discards the lowest live vertex.
pub fn matching_number(g: &Graph) -> Result<Witnessed<EdgeSet>> {
    cap("vertex count", MATCHING_CAP, g.n())?;
    let pairs: Vec<(usize, usize)> = if let Some(b) = is_bipartite(g) {
        let mate = bipartite_max_matching(g, b.side_a);
        ones(b.side_a)
            .filter_map(|a| mate[a].map(|m| (a, m)))
            .collect()
    } else {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        matching_bb(g.adj(), g.vertices(), &mut cur, &mut best);
        best
    };
    let m = EdgeSet::from_pairs(g.n(), pairs)?;
    Ok(Witnessed {
        value: m.len(),
        witness: m,
    })
}

fn matching_bb(
    adj: &[u64],
    free: u64,
    cur: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    let live = ones(free)
        .filter(|&v| adj[v] & free != 0)
        .fold(0u64, |m, v| m | bit(v));
    if cur.len() + live.count_ones() as usize / 2 <= best.len() {
        return;
    }
    if live == 0 {
        *best = cur.clone();
        return;
    }
    let v = live.trailing_zeros() as usize;
    for u in ones(adj[v] & live) {
        cur.push((v, u));
        matching_bb(adj, live & !bit(v) & !bit(u), cur, best);
        cur.pop();
    }
    matching_bb(adj, live & !bit(v), cur, best);
}

/// Smallest maximal matching (equivalently a minimum edge dominating set
/// that is a matching). Some matching edge must touch an endpoint of the
/// lowest edge whose endpoints are both unmatched; the search branches on
/// those edges.
pub fn min_maximal_matching(g: &Graph) -> Result<Witnessed<EdgeSet>> {
    cap("vertex count", MIN_MAXIMAL_MATCHING_CAP, g.n())?;
    let adj = g.adj();

    // greedy maximal matching as the initial bound
    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut used = 0u64;
    for (u, v) in g.edges() {
        if used & (bit(u) | bit(v)) == 0 {
            best.push((u, v));
            used |= bit(u) | bit(v);
        }
    }

    fn rec(
        adj: &[u64],
        matched: u64,
        cur: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        let exposed = adj.iter().enumerate().find_map(|(u, &row)| {
            if matched & bit(u) != 0 {
                return None;
            }
            let w = row & !matched & !crate::bits::full(u + 1);
            (w != 0).then(|| (u, w.trailing_zeros() as usize))
        });
        let Some((u, v)) = exposed else {
            if cur.len() < best.len() {
                *best = cur.clone();
            }
            return;
        };
        if cur.len() + 1 >= best.len() {
            return;
        }
        for x in [u, v] {
            for y in ones(adj[x] & !matched) {
                if x == v && y == u {
                    continue;
                }
                cur.push((x.min(y), x.max(y)));
                rec(adj, matched | bit(x) | bit(y), cur, best);
                cur.pop();
            }
        }
    }
    let mut cur = Vec::new();
    rec(adj, 0, &mut cur, &mut best);
    let m = EdgeSet::from_pairs(g.n(), best)?;
    Ok(Witnessed {
        value: m.len(),
        witness: m,
    })
}

/// True iff `m` is a matching of `g` to which no edge of `g` can be added.
pub fn is_maximal_matching(g: &Graph, m: &EdgeSet) -> bool {
    if !m.is_matching_in(g) {
        return false;
    }
    let covered = m.vertex_mask();
    g.edges()
        .into_iter()
        .all(|(u, v)| covered & (bit(u) | bit(v)) != 0)
}

/// Largest induced matching, as a maximum independent set of the edge
/// conflict graph.
pub fn induced_matching_number(g: &Graph) -> Result<Witnessed<EdgeSet>> {
    let edges = g.edges();
    cap("edge count", INDUCED_MATCHING_EDGE_CAP, edges.len())?;
    let conflict = g.edge_conflict_graph()?;
    let set = max_clique_rows(conflict.complement().adj());
    let m = EdgeSet::from_pairs(g.n(), ones(set).map(|i| edges[i]))?;
    debug_assert!(m.is_induced_matching_in(g));
    Ok(Witnessed {
        value: m.len(),
        witness: m,
    })
}
