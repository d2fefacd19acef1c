//! Exact graph invariants and co-chordal covers.

mod cover;
mod numbers;

pub use cover::*;
pub use numbers::*;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{complex_regularity_with, FieldSpec, RegularityConfig, RegularityResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CochordMethod {
    Exact,
    UpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochordValue {
    pub value: usize,
    pub method: CochordMethod,
}

/// Which invariants to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub alpha: bool,
    pub omega: bool,
    pub chi: bool,
    pub nu: bool,
    pub min_maximal_matching: bool,
    pub indmatch: bool,
    pub regularity: bool,
    pub cochord: bool,
}

impl Selection {
    pub const ALL: Selection = Selection {
        alpha: true,
        omega: true,
        chi: true,
        nu: true,
        min_maximal_matching: true,
        indmatch: true,
        regularity: true,
        cochord: true,
    };
    pub const NONE: Selection = Selection {
        alpha: false,
        omega: false,
        chi: false,
        nu: false,
        min_maximal_matching: false,
        indmatch: false,
        regularity: false,
        cochord: false,
    };
}

impl Default for Selection {
    fn default() -> Self {
        Selection::ALL
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub select: Selection,
    pub fields: Vec<FieldSpec>,
    pub regularity: RegularityConfig,
    pub cochord_budget: Option<Duration>,
    /// Record wall times; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            select: Selection::ALL,
            fields: vec![FieldSpec::GF2],
            regularity: RegularityConfig::default(),
            cochord_budget: None,
            timings: false,
        }
    }
}

/// Everything computed for one graph. A missing value was either not
/// requested or blocked; blocked values have an entry in `skipped`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub nu: Option<usize>,
    pub min_maximal_matching: Option<usize>,
    pub indmatch: Option<usize>,
    pub cochord: Option<CochordValue>,
    pub regularity: Option<Vec<RegularityResult>>,
    /// Reason per invariant that was requested but not computed.
    pub skipped: BTreeMap<String, String>,
    /// Wall time per invariant in microseconds.
    pub timings: BTreeMap<String, u64>,
}

impl InvariantReport {
    pub fn compute(graph_id: impl Into<String>, g: &Graph, opts: &ReportOptions) -> Self {
        let mut r = InvariantReport {
            graph_id: graph_id.into(),
            n: g.n(),
            m: g.edge_count(),
            ..Default::default()
        };
        let s = opts.select;
        if s.alpha {
            r.alpha = r.run("alpha", opts, || Ok(independence_number(g)?.value));
        }
        if s.omega {
            r.omega = r.run("omega", opts, || Ok(clique_number(g)?.value));
        }
        if s.chi {
            r.chi = r.run("chi", opts, || Ok(chromatic_number(g)?.value));
        }
        if s.nu {
            r.nu = r.run("nu", opts, || Ok(matching_number(g)?.value));
        }
        if s.min_maximal_matching {
            r.min_maximal_matching = r.run("min_maximal_matching", opts, || {
                Ok(min_maximal_matching(g)?.value)
            });
        }
        if s.indmatch {
            r.indmatch = r.run("indmatch", opts, || Ok(induced_matching_number(g)?.value));
        }
        if s.regularity {
            r.regularity = r.run("regularity", opts, || {
                opts.fields
                    .iter()
                    .map(|&f| complex_regularity_with(g, f, &opts.regularity))
                    .collect()
            });
        }
        if s.cochord {
            r.cochord = r.run("cochord", opts, || {
                let c = cochord_exact(g, opts.cochord_budget)?;
                let method = if c.exact {
                    CochordMethod::Exact
                } else {
                    CochordMethod::UpperBound
                };
                Ok(CochordValue {
                    value: c.value,
                    method,
                })
            });
        }
        r
    }

    fn run<T>(
        &mut self,
        name: &str,
        opts: &ReportOptions,
        f: impl FnOnce() -> Result<T>,
    ) -> Option<T> {
        let start = Instant::now();
        let out = f();
        if opts.timings {
            self.timings
                .insert(name.to_string(), start.elapsed().as_micros() as u64);
        }
        match out {
            Ok(v) => Some(v),
            Err(e) => {
                self.skipped.insert(name.to_string(), e.to_string());
                None
            }
        }
    }

    /// Regularity over GF(2), if computed.
    pub fn reg_gf2(&self) -> Option<usize> {
        self.regularity
            .as_ref()?
            .iter()
            .find(|r| r.field == FieldSpec::GF2)
            .map(|r| r.value)
    }

    /// `indmatch <= reg <= cochord`, when all three are known exactly.
    pub fn chain_holds(&self) -> Option<bool> {
        let c = self.cochord.filter(|c| c.method == CochordMethod::Exact)?;
        let (i, r) = (self.indmatch?, self.reg_gf2()?);
        Some(i <= r && r <= c.value)
    }

    /// True if some requested invariant was blocked by a cap or budget.
    pub fn blocked(&self) -> bool {
        !self.skipped.is_empty()
            || self
                .cochord
                .is_some_and(|c| c.method == CochordMethod::UpperBound)
    }
}

/// Returns an error describing the first skipped invariant, if any.
pub fn require_complete(r: &InvariantReport) -> Result<()> {
    match r.skipped.iter().next() {
        Some((k, v)) => Err(Error::Parameter(format!("{k} not computed: {v}"))),
        None => Ok(()),
    }
}
