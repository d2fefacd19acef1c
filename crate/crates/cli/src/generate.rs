//! Seeded generators of well-covered bipartite graphs without isolated
//! vertices.
//!
//! Three sources are interleaved: preorder graphs (`x_i ~ y_j` whenever
//! `i <= j` in a random transitive relation), whiskered random bipartite
//! graphs, and random bipartite graphs containing a perfect matching. Every
//! candidate is relabeled at random and kept only if it passes the
//! well-covered test, so the generators never have to be trusted.

use std::collections::HashSet;

use edgereg::recognition::{is_bipartite, is_well_covered};
use edgereg::{emit_graph6_string, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Instances are kept small enough for the exact induced matching number.
pub const MAX_EDGES: usize = 40;

fn preorder_graph(rng: &mut ChaCha8Rng, m: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.6);
    let mut rel = vec![vec![false; m]; m];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(p);
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut e = Vec::new();
    for (i, row) in rel.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                e.push((i, m + j));
            }
        }
    }
    Graph::from_edges(2 * m, e).expect("valid edges")
}

fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if rng.gen_bool(p) {
                e.push((i, a + j));
            }
        }
    }
    Graph::from_edges(a + b, e).expect("valid edges")
}

fn matched_bipartite(rng: &mut ChaCha8Rng, m: usize) -> Graph {
    let p = rng.gen_range(0.1..0.5);
    let extra = random_bipartite(rng, m, m, p);
    let mut e = extra.edges();
    e.extend((0..m).map(|i| (i, m + i)));
    Graph::from_edges(2 * m, e).expect("valid edges")
}

fn relabel(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(
        g.n(),
        g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
    )
    .expect("valid edges")
}

/// `count` distinct (as labeled graphs) instances on at most `nmax`
/// vertices, deterministic in `seed`.
pub fn well_covered_bipartite(count: usize, nmax: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = (nmax / 2).max(1);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut round = 0usize;
    while out.len() < count {
        let m = rng.gen_range(1..=half);
        let candidate = match round % 3 {
            0 => preorder_graph(&mut rng, m),
            1 => {
                let a = rng.gen_range(0..=m);
                let p = rng.gen_range(0.2..0.7);
                match random_bipartite(&mut rng, a, m - a, p).whisker() {
                    Ok(w) => w,
                    Err(_) => continue,
                }
            }
            _ => matched_bipartite(&mut rng, m),
        };
        round += 1;
        let g = relabel(&mut rng, &candidate);
        if g.n() == 0 || g.n() > nmax || g.edge_count() > MAX_EDGES || g.isolated() != 0 {
            continue;
        }
        if is_bipartite(&g).is_none()
            || !is_well_covered(&g).map(|w| w.well_covered).unwrap_or(false)
        {
            continue;
        }
        if seen.insert(emit_graph6_string(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let a = well_covered_bipartite(30, 12, 7);
        let b = well_covered_bipartite(30, 12, 7);
        assert_eq!(a, b);
        for g in &a {
            assert!(g.n() <= 12 && g.isolated() == 0);
            assert!(is_well_covered(g).unwrap().well_covered);
        }
    }

    #[test]
    fn preorders_are_well_covered() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 1..=6 {
            let g = preorder_graph(&mut rng, m);
            assert!(is_well_covered(&g).unwrap().well_covered);
        }
    }
}
