//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Run with `cargo test -p edgereg-cli --test acceptance`.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::process::ExitCode;
use std::time::Instant;

use edgereg::homology::DEFAULT_FACE_CAP;
use edgereg::recognition::is_well_covered;
use edgereg::*;
use edgereg_cli::generate::well_covered_bipartite;
use edgereg_cli::reproduce;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn gf(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn reg(g: &Graph) -> usize {
    complex_regularity(g, FieldSpec::GF2).unwrap().value
}

fn cochord(g: &Graph) -> std::result::Result<usize, String> {
    let c = cochord_exact(g, None).map_err(|e| e.to_string())?;
    if !c.cover.verify(g) {
        return Err(format!("{}: cover does not verify", emit_graph6_string(g)));
    }
    Ok(c.value)
}

fn random_graph(rng: &mut ChaCha8Rng, nmax: usize) -> Graph {
    let n = rng.gen_range(1..=nmax);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

/// Collects failures; an empty list means the criterion holds.
fn verdict(checked: usize, failures: Vec<String>, what: &str) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checked} {what}, 0 violations"))
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Err(format!(
            "{} violations among {checked} {what}: {}",
            failures.len(),
            shown.join("; ")
        ))
    }
}

fn c1_paths_cycles() -> Outcome {
    let rows = reproduce::paths_cycles(12, FieldSpec::GF2, None).map_err(|e| e.to_string())?;
    let mut bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches())
        .map(|r| format!("n={}", r.n))
        .collect();
    for r in &rows {
        let f = (r.n + 1) / 3;
        if r.reg_path != f || r.reg_cycle != f || r.cochord_path != r.reg_path {
            bad.push(format!("n={} reg/cochord", r.n));
        }
    }
    let c = |n| rows.iter().find(|r| r.n == n).map(|r| r.cochord_cycle);
    if c(7) != Some(3) || c(10) != Some(4) {
        bad.push(format!(
            "cochord(C7) = {:?}, cochord(C10) = {:?}",
            c(7),
            c(10)
        ));
    }
    verdict(rows.len(), bad, "values of n in 3..=12")
}

fn c2_sphere() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=5 {
        let g = GraphFamily::Matching { m }.build().unwrap();
        let c = independence_complex(&g, DEFAULT_FACE_CAP).unwrap();
        for p in [2, 3] {
            let b = reduced_betti(&c, gf(p));
            let ok = (-1..=(2 * m as isize)).all(|d| b.get(d) == usize::from(d == m as isize - 1));
            if !ok {
                bad.push(format!("m={m} GF({p}) betti {:?}", b.betti));
            }
        }
        if reg(&g) != m {
            bad.push(format!("reg({m}K2) = {}", reg(&g)));
        }
    }
    verdict(5, bad, "matchings")
}

fn c3_bounds_chain(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    for g in corpus {
        let id = emit_graph6_string(g);
        let r = reg(g);
        let im = induced_matching_number(g).unwrap().value;
        let cc = cochord(g)?;
        let nu = matching_number(g).unwrap().value;
        let mmm = min_maximal_matching(g).unwrap().value;
        let alpha = independence_number(g).unwrap().value;
        if !(im <= r && r <= cc && r <= nu && r <= mmm && r <= alpha) {
            bad.push(format!(
                "{id}: im {im} reg {r} cochord {cc} nu {nu} mmm {mmm} alpha {alpha}"
            ));
        }
    }
    verdict(corpus.len(), bad, "graphs")
}

fn c4_chordal(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for g in corpus.iter().filter(|g| oracle::chordal(g)) {
        checked += 1;
        let im = induced_matching_number(g).unwrap().value;
        let (split, cover) = split_cover(g).map_err(|e| e.to_string())?;
        if reg(g) != im || split.cliques.len() != im || !split.is_valid_for(g) || !cover.verify(g) {
            bad.push(emit_graph6_string(g));
        }
    }
    verdict(checked, bad, "chordal graphs")
}

fn c5_weakly_chordal(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for g in corpus.iter().filter(|g| oracle::weakly_chordal(g)) {
        checked += 1;
        if induced_matching_number(g).unwrap().value != cochord(g)? {
            bad.push(emit_graph6_string(g));
        }
    }
    verdict(checked, bad, "weakly chordal graphs")
}

fn c6_chain_covers() -> Outcome {
    let instances = well_covered_bipartite(200, 14, 0x5eed);
    let mut bad = Vec::new();
    for g in &instances {
        let id = emit_graph6_string(g);
        if g.n() > 14 || !is_well_covered(g).unwrap().well_covered {
            bad.push(format!("{id}: bad instance"));
            continue;
        }
        let cover = match chain_cover_wc_bipartite(g) {
            Ok(c) => c,
            Err(e) => {
                bad.push(format!("{id}: {e}"));
                continue;
            }
        };
        let im = induced_matching_number(g).unwrap().value;
        let parts_ok = cover.parts.iter().all(|p| {
            let h = p.to_graph();
            is_cochordal(&h).chordal && induced_matching_number(&h).unwrap().value <= 1
        });
        if cover.len() != im || !parts_ok || !cover.verify(g) {
            bad.push(format!("{id}: {} parts vs indmatch {im}", cover.len()));
        }
    }
    verdict(instances.len(), bad, "well-covered bipartite instances")
}

fn c7_gap() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (r, s) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let mode = if 5 * r + 7 * s <= reproduce::GAP_DIRECT_VERTICES {
            reproduce::GapMode::Direct
        } else {
            reproduce::GapMode::Additive
        };
        let x = reproduce::gap(r, s, FieldSpec::GF2, None).map_err(|e| e.to_string())?;
        if !x.holds() || x.mode != mode {
            bad.push(format!("({r},{s}): {x:?}"));
        }
        seen.push(format!(
            "({r},{s})->({},{},{})",
            x.indmatch, x.reg, x.cochord
        ));
    }
    let c11 = reproduce::gap(1, 1, FieldSpec::GF2, None).unwrap();
    if (c11.indmatch, c11.reg, c11.cochord) != (3, 4, 5) {
        bad.push("(1,1) is not (3,4,5)".into());
    }
    verdict(6, bad, "pairs").map(|m| format!("{m}; {}", seen.join(" ")))
}

fn c8_whisker(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= 5).collect();
    for g in &small {
        let w = g.whisker().unwrap();
        let im = induced_matching_number(&w).unwrap().value;
        let cc = cochord(&w)?;
        if im != oracle::alpha(g) || cc != oracle::chi(&g.complement()) {
            bad.push(emit_graph6_string(g));
        }
    }
    let w5 = GraphFamily::Cycle { n: 5 }
        .build()
        .unwrap()
        .whisker()
        .unwrap();
    let pair = (induced_matching_number(&w5).unwrap().value, cochord(&w5)?);
    if pair != (2, 3) {
        bad.push(format!("W(C5) gives {pair:?}"));
    }
    verdict(small.len(), bad, "graphs with n <= 5")
}

fn c9_scm() -> Outcome {
    let x = reproduce::scm_example(FieldSpec::GF2, None).map_err(|e| e.to_string())?;
    let got = (x.indmatch, x.cochord, x.reg);
    if got == (2, 3, 2) {
        Ok("indmatch 2, cochord 3, reg 2".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn c10_subadditivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = Vec::new();
    for _ in 0..500 {
        let g = random_graph(&mut rng, 7);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for e in g.edges() {
            if rng.gen_bool(0.5) {
                a.push(e)
            } else {
                b.push(e)
            }
        }
        let g1 = Graph::from_edges(g.n(), a).unwrap();
        let g2 = Graph::from_edges(g.n(), b).unwrap();
        if reg(&g) > reg(&g1) + reg(&g2) {
            bad.push(emit_graph6_string(&g));
        }
    }
    verdict(500, bad, "edge splits")
}

fn c11_kunneth() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let g1 = random_graph(&mut rng, 6);
        let g2 = random_graph(&mut rng, 6);
        let u = g1.disjoint_union(&g2).unwrap();
        let sum = reg(&g1) + reg(&g2);
        if reg(&u) != sum || (u.n() <= 8 && oracle::regularity(&u, 2) != sum) {
            bad.push(format!(
                "{} + {}",
                emit_graph6_string(&g1),
                emit_graph6_string(&g2)
            ));
        }
    }
    verdict(200, bad, "pairs")
}

fn c12_homology(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= 6).collect();
    for g in &small {
        let id = emit_graph6_string(g);
        let c = independence_complex(g, DEFAULT_FACE_CAP).unwrap();
        let fast = reduced_betti(&c, FieldSpec::GF2);
        let slow = oracle::betti(g, 2);
        let len = fast.betti.len().max(slow.len());
        if (0..len)
            .any(|i| fast.betti.get(i).copied().unwrap_or(0) != slow.get(i).copied().unwrap_or(0))
        {
            bad.push(format!("{id}: betti {:?} vs {slow:?}", fast.betti));
        }
        if fast.euler_characteristic() != c.reduced_euler_characteristic() {
            bad.push(format!("{id}: euler characteristic"));
        }
        for k in 2..c.faces().len() {
            let (upper, lower) = (c.boundary(k), c.boundary(k - 1));
            for row in &upper {
                let mut acc = vec![0i64; c.faces()[k - 2].len()];
                for &(mid, s) in row {
                    for &(low, t) in &lower[mid] {
                        acc[low] += (s * t) as i64;
                    }
                }
                if acc.iter().any(|&x| x != 0) {
                    bad.push(format!("{id}: boundary squared nonzero at k={k}"));
                }
            }
        }
    }
    verdict(small.len(), bad, "independence complexes")
}

/// Recorded only: disagreement is a finding, not a failure.
fn c13_multi_field(corpus: &[Graph]) -> Outcome {
    let fields = [gf(2), gf(3), gf(5)];
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= 6).collect();
    let disagree: Vec<String> = small
        .iter()
        .filter(|g| !regularity_multi_field(g, &fields).unwrap().agree)
        .map(|g| emit_graph6_string(g))
        .collect();
    Ok(format!(
        "recorded: {} graphs, {} agree over GF(2), GF(3), GF(5), {} disagree {:?}",
        small.len(),
        small.len() - disagree.len(),
        disagree.len(),
        disagree
    ))
}

fn c14_petersen() -> Outcome {
    let x = reproduce::petersen_complement().map_err(|e| e.to_string())?;
    if x.free_of_2k2 && x.free_of_claw && x.split_pairs == 0 {
        Ok(format!("0 qualifying pairs among {} cliques", x.cliques))
    } else {
        Err(format!("{x:?}"))
    }
}

fn main() -> ExitCode {
    let corpus = oracle::corpus(7);
    let criteria: Vec<Criterion> = vec![
        ("paths and cycles", Box::new(c1_paths_cycles)),
        ("matching spheres", Box::new(c2_sphere)),
        ("bounds chain", Box::new(|| c3_bounds_chain(&corpus))),
        ("chordal equality", Box::new(|| c4_chordal(&corpus))),
        (
            "weakly chordal equality",
            Box::new(|| c5_weakly_chordal(&corpus)),
        ),
        ("chain covers", Box::new(c6_chain_covers)),
        ("gap construction", Box::new(c7_gap)),
        ("whiskers", Box::new(|| c8_whisker(&corpus))),
        ("pendant example", Box::new(c9_scm)),
        ("subadditivity", Box::new(c10_subadditivity)),
        ("join additivity", Box::new(c11_kunneth)),
        ("homology oracle", Box::new(|| c12_homology(&corpus))),
        (
            "multi-field stability",
            Box::new(|| c13_multi_field(&corpus)),
        ),
        ("petersen complement", Box::new(c14_petersen)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let ms = start.elapsed().as_millis();
        match out {
            Ok(msg) => println!("criterion {:>2} {name}: PASS ({msg}) [{ms} ms]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg}) [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
