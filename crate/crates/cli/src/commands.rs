//! Per-graph commands. Each turns one parsed graph into a report record;
//! parse failures become error records and never stop a stream.

use std::time::Instant;

use edgereg::recognition::maximal_cliques;
use edgereg::{
    chain_cover_wc_bipartite, clique_deletion_check, cochord_exact, cochord_greedy,
    emit_graph6_string, is_chordal, is_weakly_chordal, split_cover, CochordMethod, CochordValue,
    Cover, Error, FieldSpec, Graph, InvariantReport, Selection,
};

use crate::config::SuiteConfig;
use crate::input::InputGraph;
use crate::pool;
use crate::report::{Check, ReportRecord, Status};

/// Runs `f` on every input in parallel, keeping input order.
pub fn run_stream<F>(inputs: &[InputGraph], cfg: &SuiteConfig, f: F) -> Vec<ReportRecord>
where
    F: Fn(&str, &Graph, &SuiteConfig) -> ReportRecord + Sync,
{
    let pool = pool::build(cfg.jobs);
    pool::map_ordered(&pool, inputs, |input| match &input.graph {
        Ok(g) => {
            let start = Instant::now();
            let mut r = f(&input.id, g, cfg);
            if cfg.timings {
                r.runtime_ms = start.elapsed().as_millis() as u64;
            }
            r
        }
        Err(e) => {
            let mut r = ReportRecord::new(&input.id, "");
            r.push(Check::new(
                "parse",
                Status::Error,
                format!("{e}: {:?}", input.raw),
            ));
            r
        }
    })
}

fn base(id: &str, g: &Graph, cfg: &SuiteConfig, select: Selection) -> ReportRecord {
    let mut r = ReportRecord::new(id, emit_graph6_string(g));
    r.invariants = InvariantReport::compute(id, g, &cfg.report_options(select));
    for (name, why) in &r.invariants.skipped {
        r.checks.push(Check::new(
            format!("compute_{name}"),
            Status::Blocked,
            why.clone(),
        ));
    }
    r
}

fn chain_check(r: &mut ReportRecord) {
    let inv = &r.invariants;
    let check = match inv.chain_holds() {
        Some(ok) => Check::assert(
            "bounds_chain",
            ok,
            format!(
                "indmatch {} <= reg {} <= cochord {}",
                inv.indmatch.unwrap_or(0),
                inv.reg_gf2().unwrap_or(0),
                inv.cochord.map_or(0, |c| c.value)
            ),
        ),
        None if inv
            .cochord
            .is_some_and(|c| c.method == CochordMethod::UpperBound) =>
        {
            Check::new("bounds_chain", Status::Blocked, "cochord search timed out")
        }
        None => Check::new(
            "bounds_chain",
            Status::Blocked,
            "an invariant in the chain is missing",
        ),
    };
    r.push(check);
}

pub fn invariants(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let mut r = base(id, g, cfg, Selection::ALL);
    chain_check(&mut r);
    r
}

pub fn regularity(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let select = Selection {
        regularity: true,
        ..Selection::NONE
    };
    let mut r = base(id, g, cfg, select);
    if let Some(results) = r.invariants.regularity.clone() {
        for x in &results {
            let ok = x.validate(g).unwrap_or(false);
            r.push(Check::assert(
                format!("witness_{}", x.field),
                ok,
                format!("W = {:#x}, degree {}", x.witness.vertices, x.witness.degree),
            ));
        }
        if results.len() > 1 {
            let values: Vec<String> = results
                .iter()
                .map(|x| format!("{}:{}", x.field, x.value))
                .collect();
            let agree = results.windows(2).all(|w| w[0].value == w[1].value);
            let status = if agree { Status::Pass } else { Status::Finding };
            r.push(Check::new("field_agreement", status, values.join(" ")));
        }
    }
    r
}

pub fn cochord(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let select = Selection {
        indmatch: true,
        ..Selection::NONE
    };
    let mut r = base(id, g, cfg, select);
    let exact = match cochord_exact(g, cfg.cochord_budget) {
        Ok(c) => c,
        Err(e) => {
            r.push(Check::new(
                "compute_cochord",
                Status::Blocked,
                e.to_string(),
            ));
            return r;
        }
    };
    let method = if exact.exact {
        CochordMethod::Exact
    } else {
        CochordMethod::UpperBound
    };
    r.invariants.cochord = Some(CochordValue {
        value: exact.value,
        method,
    });
    if !exact.exact {
        r.push(Check::new(
            "exact",
            Status::Blocked,
            "time budget ran out; value is an upper bound",
        ));
    }
    r.push(cover_check("cover_valid", g, &exact.cover));
    let greedy = cochord_greedy(g);
    r.push(Check::assert(
        "greedy_upper_bound",
        greedy.verify(g) && greedy.len() >= exact.value,
        format!("greedy {} >= {}", greedy.len(), exact.value),
    ));
    if let Some(im) = r.invariants.indmatch {
        r.push(Check::assert(
            "indmatch_lower_bound",
            im <= exact.value,
            format!("{im} <= {}", exact.value),
        ));
    }
    r
}

fn describe(cover: &Cover) -> String {
    cover
        .parts
        .iter()
        .map(|p| {
            let e: Vec<String> = p.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            format!("{{{}}}", e.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cover_check(name: &str, g: &Graph, cover: &Cover) -> Check {
    Check::assert(
        name,
        cover.verify(g),
        format!("{} parts: {}", cover.len(), describe(cover)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMethod {
    Split,
    Chain,
    Greedy,
    Exact,
}

pub fn cover(id: &str, g: &Graph, cfg: &SuiteConfig, method: CoverMethod) -> ReportRecord {
    let mut r = ReportRecord::new(id, emit_graph6_string(g));
    r.invariants.n = g.n();
    r.invariants.m = g.edge_count();
    let built = match method {
        CoverMethod::Split => split_cover(g).map(|(_, c)| c),
        CoverMethod::Chain => chain_cover_wc_bipartite(g),
        CoverMethod::Greedy => Ok(cochord_greedy(g)),
        CoverMethod::Exact => cochord_exact(g, cfg.cochord_budget).map(|c| {
            if !c.exact {
                r.push(Check::new(
                    "exact",
                    Status::Blocked,
                    "time budget ran out; cover is an upper bound",
                ));
            }
            c.cover
        }),
    };
    match built {
        Ok(c) => r.push(cover_check("cover_valid", g, &c)),
        Err(Error::Argument(why)) => r.push(Check::new("cover_valid", Status::Skip, why)),
        Err(e @ Error::Capacity { .. }) => {
            r.push(Check::new("cover_valid", Status::Blocked, e.to_string()))
        }
        Err(e) => r.push(Check::new("cover_valid", Status::Fail, e.to_string())),
    }
    r
}

/// Bounds chain plus every structural equality that applies to the graph.
pub fn verify_bounds(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let mut r = base(
        id,
        g,
        cfg,
        Selection {
            cochord: false,
            ..Selection::ALL
        },
    );
    let exact = match cochord_exact(g, cfg.cochord_budget) {
        Ok(c) => {
            let method = if c.exact {
                CochordMethod::Exact
            } else {
                CochordMethod::UpperBound
            };
            r.invariants.cochord = Some(CochordValue {
                value: c.value,
                method,
            });
            Some(c)
        }
        Err(e) => {
            r.push(Check::new(
                "compute_cochord",
                Status::Blocked,
                e.to_string(),
            ));
            None
        }
    };
    chain_check(&mut r);
    let inv = r.invariants.clone();
    if let Some(reg) = inv.reg_gf2() {
        for (name, bound) in [
            ("reg_le_nu", inv.nu),
            ("reg_le_min_maximal_matching", inv.min_maximal_matching),
            ("reg_le_alpha", inv.alpha),
        ] {
            if let Some(b) = bound {
                r.push(Check::assert(name, reg <= b, format!("{reg} <= {b}")));
            }
        }
    }
    let exact_cochord = inv
        .cochord
        .filter(|c| c.method == CochordMethod::Exact)
        .map(|c| c.value);
    if is_chordal(g).chordal {
        match (inv.indmatch, inv.reg_gf2(), split_cover(g)) {
            (Some(im), Some(reg), Ok((p, c))) => {
                let s = p.cliques.len();
                r.push(Check::assert(
                    "chordal_equality",
                    reg == im && s == im && c.verify(g),
                    format!("reg {reg}, indmatch {im}, split cover {s}"),
                ));
            }
            _ => r.push(Check::new(
                "chordal_equality",
                Status::Blocked,
                "missing invariants",
            )),
        }
    }
    if let Ok(w) = is_weakly_chordal(g) {
        if w.weakly_chordal {
            match (inv.indmatch, exact_cochord) {
                (Some(im), Some(cc)) => r.push(Check::assert(
                    "weakly_chordal_equality",
                    im == cc,
                    format!("indmatch {im}, cochord {cc}"),
                )),
                _ => r.push(Check::new(
                    "weakly_chordal_equality",
                    Status::Blocked,
                    "missing invariants",
                )),
            }
        }
    }
    if let (Some(cc), Some(exact)) = (exact_cochord, exact) {
        r.push(cover_check("cochord_cover_valid", g, &exact.cover));
        let greedy = cochord_greedy(g);
        r.push(Check::assert(
            "greedy_upper_bound",
            greedy.verify(g) && greedy.len() >= cc,
            format!("greedy {} >= {cc}", greedy.len()),
        ));
    }
    if g.n() <= cfg.regularity.vertex_cap {
        let bad: Vec<u64> = maximal_cliques(g)
            .into_iter()
            .filter(|&k| !clique_deletion_check(g, k, FieldSpec::GF2).unwrap_or(true))
            .collect();
        r.push(Check::assert(
            "clique_deletion",
            bad.is_empty(),
            if bad.is_empty() {
                "all maximal cliques".to_string()
            } else {
                format!("violations {bad:?}")
            },
        ));
    }
    r
}
