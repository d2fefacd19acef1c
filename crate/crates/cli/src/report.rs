//! Report records and their serializations.

use std::fmt::Write as _;

use edgereg::InvariantReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this graph (e.g. filtered out by a search).
    Skip,
    /// A search result worth a closer look; not a failure.
    Finding,
    /// A cap or time budget prevented the check.
    Blocked,
    /// The input could not be parsed.
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Finding => "finding",
            Status::Blocked => "blocked",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status,
            details: details.into(),
        }
    }

    /// Pass or fail depending on `ok`.
    pub fn assert(name: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, details)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub graph_id: String,
    pub graph6: String,
    pub invariants: InvariantReport,
    pub checks: Vec<Check>,
    pub runtime_ms: u64,
}

impl ReportRecord {
    pub fn new(graph_id: impl Into<String>, graph6: impl Into<String>) -> Self {
        let graph_id = graph_id.into();
        ReportRecord {
            invariants: InvariantReport {
                graph_id: graph_id.clone(),
                ..Default::default()
            },
            graph_id,
            graph6: graph6.into(),
            checks: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn worst(&self) -> Option<Status> {
        self.checks
            .iter()
            .map(|c| c.status)
            .max_by_key(|s| severity(*s))
    }
}

fn severity(s: Status) -> u8 {
    match s {
        Status::Pass | Status::Skip | Status::Finding => 0,
        Status::Blocked => 1,
        Status::Error => 2,
        Status::Fail => 3,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Process exit code: 1 if any check failed, else 2 if some input failed to
/// parse, else 3 if a cap or budget blocked a check, else 0.
pub fn exit_code(records: &[ReportRecord]) -> i32 {
    let statuses = || {
        records
            .iter()
            .flat_map(|r| r.checks.iter().map(|c| c.status))
    };
    if statuses().any(|s| s == Status::Fail) {
        1
    } else if statuses().any(|s| s == Status::Error) {
        2
    } else if statuses().any(|s| s == Status::Blocked) {
        3
    } else {
        0
    }
}

pub fn emit(records: &[ReportRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => emit_text(records),
        OutputFormat::Json => emit_json(records),
        OutputFormat::Csv => emit_csv(records),
    }
}

/// A JSON array with one compact record per line.
pub fn emit_json(records: &[ReportRecord]) -> String {
    if records.is_empty() {
        return "[]\n".to_string();
    }
    let body: Vec<String> = records
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

const CSV_HEADER: [&str; 17] = [
    "graph_id",
    "graph6",
    "n",
    "m",
    "alpha",
    "omega",
    "chi",
    "nu",
    "min_maximal_matching",
    "indmatch",
    "reg_gf2",
    "regularity",
    "cochord",
    "cochord_method",
    "checks_passed",
    "checks_total",
    "failed_checks",
];

/// One row per record; regularity over every field is packed as `p:value`
/// pairs separated by `;`.
pub fn emit_csv(records: &[ReportRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
    for r in records {
        let inv = &r.invariants;
        let regs = inv.regularity.as_ref().map_or(String::new(), |rs| {
            rs.iter()
                .map(|x| format!("{}:{}", x.field.p(), x.value))
                .collect::<Vec<_>>()
                .join(";")
        });
        let failed: Vec<&str> = r
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect();
        let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
        let row = [
            r.graph_id.clone(),
            r.graph6.clone(),
            inv.n.to_string(),
            inv.m.to_string(),
            opt(inv.alpha),
            opt(inv.omega),
            opt(inv.chi),
            opt(inv.nu),
            opt(inv.min_maximal_matching),
            opt(inv.indmatch),
            opt(inv.reg_gf2()),
            regs,
            opt(inv.cochord.map(|c| c.value)),
            inv.cochord.map_or(String::new(), |c| {
                serde_json::to_value(c.method)
                    .unwrap()
                    .as_str()
                    .unwrap()
                    .to_string()
            }),
            passed.to_string(),
            r.checks.len().to_string(),
            failed.join(";"),
        ];
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn emit_text(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let inv = &r.invariants;
        let _ = write!(out, "{} {}", r.graph_id, r.graph6);
        let mut field = |name: &str, v: Option<usize>| {
            if let Some(v) = v {
                let _ = write!(out, " {name}={v}");
            }
        };
        field("alpha", inv.alpha);
        field("omega", inv.omega);
        field("chi", inv.chi);
        field("nu", inv.nu);
        field("mmm", inv.min_maximal_matching);
        field("indmatch", inv.indmatch);
        if let Some(rs) = &inv.regularity {
            for x in rs {
                let _ = write!(out, " reg[{}]={}", x.field, x.value);
            }
        }
        if let Some(c) = inv.cochord {
            let tag = if c.method == edgereg::CochordMethod::Exact {
                ""
            } else {
                "<="
            };
            let _ = write!(out, " cochord={tag}{}", c.value);
        }
        if r.runtime_ms > 0 {
            let _ = write!(out, " ({} ms)", r.runtime_ms);
        }
        out.push('\n');
        for c in &r.checks {
            let _ = writeln!(out, "  [{}] {}: {}", c.status.as_str(), c.name, c.details);
        }
    }
    out
}
