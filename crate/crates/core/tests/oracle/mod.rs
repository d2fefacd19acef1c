//! Brute-force reference implementations. Everything here works from
//! definitions over explicit subsets and shares no code with the library
//! beyond the `Graph` container.

#![allow(dead_code)]

use edgereg::{parse_graph6, Graph};

pub const CORPUS: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../corpus/graphs_upto7.g6"
));

pub fn corpus(nmax: usize) -> Vec<Graph> {
    CORPUS
        .lines()
        .map(|l| parse_graph6(l.as_bytes()).expect("corpus line parses"))
        .filter(|g| g.n() <= nmax)
        .collect()
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn independent(g: &Graph, mask: u64) -> bool {
    let vs = members(mask);
    vs.iter()
        .all(|&u| vs.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

pub fn clique(g: &Graph, mask: u64) -> bool {
    let vs = members(mask);
    vs.iter()
        .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
}

/// Connected, every vertex of degree two, at least four vertices.
fn induced_hole(g: &Graph, mask: u64) -> bool {
    let vs = members(mask);
    if vs.len() < 4 {
        return false;
    }
    if !vs
        .iter()
        .all(|&u| vs.iter().filter(|&&v| g.has_edge(u, v)).count() == 2)
    {
        return false;
    }
    let mut seen = 1u64 << vs[0];
    let mut stack = vec![vs[0]];
    while let Some(u) = stack.pop() {
        for &v in &vs {
            if g.has_edge(u, v) && seen >> v & 1 == 0 {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen == mask
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

pub fn chordal(g: &Graph) -> bool {
    (0u64..1 << g.n()).all(|w| !induced_hole(g, w))
}

pub fn cochordal(g: &Graph) -> bool {
    chordal(&complement(g))
}

/// No induced cycle of length at least five in `g` or its complement.
pub fn weakly_chordal(g: &Graph) -> bool {
    let h = complement(g);
    (0u64..1 << g.n()).all(|w| w.count_ones() < 5 || (!induced_hole(g, w) && !induced_hole(&h, w)))
}

pub fn alpha(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&w| independent(g, w))
        .map(|w| w.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn chi(g: &Graph) -> usize {
    let n = g.n();
    let e = edges(g);
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|code| {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = x % k as u64;
                    x /= k as u64;
                }
                e.iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

fn is_matching(sel: &[(usize, usize)]) -> bool {
    let mut used = 0u64;
    for &(u, v) in sel {
        if used >> u & 1 == 1 || used >> v & 1 == 1 {
            return false;
        }
        used |= 1 << u | 1 << v;
    }
    true
}

fn pick(e: &[(usize, usize)], mask: u64) -> Vec<(usize, usize)> {
    members(mask).into_iter().map(|i| e[i]).collect()
}

pub fn nu(g: &Graph) -> usize {
    let e = edges(g);
    (0u64..1 << e.len())
        .filter(|&s| is_matching(&pick(&e, s)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn min_maximal_matching(g: &Graph) -> usize {
    let e = edges(g);
    (0u64..1 << e.len())
        .filter(|&s| {
            let sel = pick(&e, s);
            is_matching(&sel)
                && e.iter().all(|&(a, b)| {
                    sel.iter()
                        .any(|&(u, v)| u == a || u == b || v == a || v == b)
                })
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn indmatch(g: &Graph) -> usize {
    let e = edges(g);
    (0u64..1 << e.len())
        .filter(|&s| {
            let sel = pick(&e, s);
            is_matching(&sel)
                && sel.iter().all(|&(a, b)| {
                    sel.iter().all(|&(u, v)| {
                        (a, b) == (u, v)
                            || !(g.has_edge(a, u)
                                || g.has_edge(a, v)
                                || g.has_edge(b, u)
                                || g.has_edge(b, v))
                    })
                })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Minimum number of co-chordal edge subsets covering all edges. Only
/// inclusion-maximal co-chordal subsets need to be considered.
pub fn cochord(g: &Graph) -> usize {
    let e = edges(g);
    let m = e.len();
    if m == 0 {
        return 0;
    }
    let good: Vec<bool> = (0u64..1 << m)
        .map(|s| cochordal(&Graph::from_edges(g.n(), pick(&e, s)).unwrap()))
        .collect();
    let maximal: Vec<u64> = (0u64..1 << m)
        .filter(|&s| {
            good[s as usize] && (0..m).all(|i| s >> i & 1 == 1 || !good[(s | 1 << i) as usize])
        })
        .collect();
    let all = (1u64 << m) - 1;
    let mut reach = vec![0u64];
    for k in 1..=m {
        let mut next: Vec<u64> = reach
            .iter()
            .flat_map(|&r| maximal.iter().map(move |&s| r | s))
            .collect();
        next.sort_unstable();
        next.dedup();
        if next.contains(&all) {
            return k;
        }
        reach = next;
    }
    unreachable!("single edges are co-chordal")
}

fn rank_mod(mut a: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c].rem_euclid(p) != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = (1..p)
            .find(|x| (a[r][c].rem_euclid(p) * x) % p == 1)
            .unwrap();
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r {
                let f = row[c].rem_euclid(p) * inv % p;
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced Betti numbers `(β̃_{-1}, β̃_0, ...)` of `Ind(g)` over GF(p), from a
/// dense boundary matrix with the empty face in degree -1.
pub fn betti(g: &Graph, p: i64) -> Vec<usize> {
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); g.n() + 2];
    for w in 0u64..1 << g.n() {
        if independent(g, w) {
            by_size[w.count_ones() as usize].push(w);
        }
    }
    while by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k >= by_size.len() {
            return 0;
        }
        let lower = &by_size[k - 1];
        let mat = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; lower.len()];
                for (t, v) in members(f).into_iter().enumerate() {
                    let col = lower.iter().position(|&x| x == f & !(1 << v)).unwrap();
                    row[col] = if t % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        rank_mod(mat, p)
    };
    (0..by_size.len())
        .map(|k| by_size[k].len() - boundary_rank(k) - boundary_rank(k + 1))
        .collect()
}

/// Largest `i` with `β̃_{i-1}(Ind(G[W])) != 0` over all vertex subsets `W`.
pub fn regularity(g: &Graph, p: i64) -> usize {
    (0u64..1 << g.n())
        .map(|w| {
            let b = betti(&g.induced_subgraph(w), p);
            b.iter().rposition(|&x| x != 0).unwrap_or(0)
        })
        .max()
        .unwrap()
}
