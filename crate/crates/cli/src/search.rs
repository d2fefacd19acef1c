//! Counterexample searches for two open questions: whether every
//! (2K2, claw)-free graph has co-chordal cover number at most 2, and whether
//! every claw-free graph has its edges covered by `indmatch` subgraphs that
//! are (2K2, claw)-free. Results are reported, never asserted.

use std::collections::HashSet;
use std::time::Instant;

use edgereg::bits::{bit, full, ones};
use edgereg::invariants::{
    conflict_order, cover_search, PartRule, SearchOutcome, COVER_SEARCH_EDGE_CAP,
};
use edgereg::recognition::{find_induced_2k2, find_induced_claw, has_induced};
use edgereg::{
    cochord_exact, emit_graph6_string, induced_matching_number, Graph, GraphFamily, Result,
};

use crate::config::SuiteConfig;
use crate::report::{Check, ReportRecord, Status};

fn free_of_2k2_and_claw(g: &Graph) -> Result<bool> {
    Ok(has_induced(g, &GraphFamily::Matching { m: 2 })?.is_none()
        && has_induced(g, &GraphFamily::claw())?.is_none())
}

fn record(id: &str, g: &Graph) -> ReportRecord {
    let mut r = ReportRecord::new(id, emit_graph6_string(g));
    r.invariants.n = g.n();
    r.invariants.m = g.edge_count();
    r
}

pub fn q51(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let mut r = record(id, g);
    match free_of_2k2_and_claw(g) {
        Ok(true) => {}
        Ok(false) => {
            r.push(Check::new(
                "q51",
                Status::Skip,
                "has an induced 2K2 or claw",
            ));
            return r;
        }
        Err(e) => {
            r.push(Check::new("q51", Status::Blocked, e.to_string()));
            return r;
        }
    }
    let check = match cochord_exact(g, cfg.cochord_budget) {
        Ok(c) if !c.exact => Check::new(
            "q51",
            Status::Blocked,
            format!("timed out; cochord <= {}", c.value),
        ),
        Ok(c) => {
            r.invariants.cochord = Some(edgereg::CochordValue {
                value: c.value,
                method: edgereg::CochordMethod::Exact,
            });
            if c.value <= 2 {
                Check::new("q51", Status::Pass, format!("cochord = {}", c.value))
            } else {
                let parts: Vec<String> = c
                    .cover
                    .parts
                    .iter()
                    .map(|p| format!("{:?}", p.iter().collect::<Vec<_>>()))
                    .collect();
                Check::new(
                    "q51",
                    Status::Finding,
                    format!("cochord = {}; cover {}", c.value, parts.join(" ")),
                )
            }
        }
        Err(e) => Check::new("q51", Status::Blocked, e.to_string()),
    };
    r.push(check);
    r
}

/// Parts are subgraphs of the host with no induced 2K2 and no induced claw.
/// Extensions are found by repeatedly picking an obstruction in the part and
/// branching over the host edges that would destroy it.
pub struct FreeRule {
    host: Vec<u64>,
}

impl FreeRule {
    pub fn new(g: &Graph) -> Self {
        FreeRule {
            host: g.adj().to_vec(),
        }
    }

    fn obstruction(rows: &[u64]) -> Option<u64> {
        let h = Graph::from_adjacency(rows).expect("valid rows");
        find_induced_2k2(&h).or_else(|| find_induced_claw(&h))
    }

    /// Host edges inside `set` missing from `rows`.
    fn repairs(&self, rows: &[u64], set: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in ones(set) {
            for v in ones(set & !full(u + 1)) {
                if self.host[u] & bit(v) != 0 && rows[u] & bit(v) == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn grow(&self, rows: &mut Vec<u64>, seen: &mut HashSet<Vec<u64>>) -> bool {
        let Some(bad) = Self::obstruction(rows) else {
            return true;
        };
        if !seen.insert(rows.clone()) {
            return false;
        }
        for (u, v) in self.repairs(rows, bad) {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            if self.grow(rows, seen) {
                return true;
            }
            rows[u] &= !bit(v);
            rows[v] &= !bit(u);
        }
        false
    }
}

impl PartRule for FreeRule {
    fn quick_reject(&self, rows: &[u64], e: (usize, usize)) -> bool {
        let far = full(rows.len()) & !(self.host[e.0] | self.host[e.1] | bit(e.0) | bit(e.1));
        ones(far).any(|c| rows[c] & far != 0)
    }

    fn extend(&self, rows: &[u64]) -> Option<Vec<u64>> {
        let mut h = rows.to_vec();
        self.grow(&mut h, &mut HashSet::new()).then_some(h)
    }
}

pub fn q52(id: &str, g: &Graph, cfg: &SuiteConfig) -> ReportRecord {
    let mut r = record(id, g);
    if find_induced_claw(g).is_some() {
        r.push(Check::new("q52", Status::Skip, "has an induced claw"));
        return r;
    }
    if g.edge_count() > COVER_SEARCH_EDGE_CAP {
        r.push(Check::new(
            "q52",
            Status::Blocked,
            format!("more than {COVER_SEARCH_EDGE_CAP} edges"),
        ));
        return r;
    }
    let k = match induced_matching_number(g) {
        Ok(w) => w.value,
        Err(e) => {
            r.push(Check::new("q52", Status::Blocked, e.to_string()));
            return r;
        }
    };
    r.invariants.indmatch = Some(k);
    let deadline = cfg.cochord_budget.map(|b| Instant::now() + b);
    let outcome = cover_search(g, &conflict_order(g), k, &FreeRule::new(g), deadline);
    r.push(match outcome {
        SearchOutcome::Found(parts) => Check::new(
            "q52",
            Status::Pass,
            format!("covered by {} parts, indmatch {k}", parts.len()),
        ),
        SearchOutcome::Infeasible => {
            Check::new("q52", Status::Finding, format!("no cover by {k} parts"))
        }
        SearchOutcome::TimedOut => Check::new("q52", Status::Blocked, "search timed out"),
    });
    r
}
