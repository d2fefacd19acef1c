//! Reproductions of the known values for paths, cycles, gap constructions,
//! whiskered graphs, and two worked examples.

use std::time::Duration;

use edgereg::recognition::{has_induced, is_well_covered};
use edgereg::{
    chromatic_number, cochord_exact, complex_regularity, emit_graph6_string, independence_number,
    induced_matching_number, Error, FieldSpec, Graph, GraphFamily, Result,
};
use serde::Serialize;

use crate::report::{Check, ReportRecord, Status};

/// Largest `n` accepted by [`paths_cycles`].
pub const PATHS_CYCLES_NMAX: usize = 15;
/// Gap instances up to this many vertices are computed directly.
pub const GAP_DIRECT_VERTICES: usize = 18;

fn exact_cochord(g: &Graph, budget: Option<Duration>) -> Result<usize> {
    let c = cochord_exact(g, budget)?;
    if !c.exact {
        return Err(Error::Parameter("cochord search ran out of time".into()));
    }
    Ok(c.value)
}

fn cycle(n: usize) -> Graph {
    GraphFamily::Cycle { n }.build().expect("n >= 3")
}

fn path(n: usize) -> Graph {
    GraphFamily::Path { n }.build().expect("n >= 1")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathsCyclesRow {
    pub n: usize,
    /// `floor((n + 1) / 3)`.
    pub formula: usize,
    pub reg_path: usize,
    pub reg_cycle: usize,
    pub indmatch_path: usize,
    pub indmatch_cycle: usize,
    pub cochord_path: usize,
    pub cochord_cycle: usize,
}

impl PathsCyclesRow {
    /// The induced matching number of `C_n` falls one short exactly when
    /// `n = 2 mod 3`.
    pub fn expected_indmatch_cycle(&self) -> usize {
        self.formula - usize::from(self.n % 3 == 2)
    }

    /// Co-chordal subgraphs of `C_n` (n >= 5) are paths with at most three
    /// edges, so one extra part is needed exactly when `n = 1 mod 3`, n >= 7.
    pub fn expected_cochord_cycle(&self) -> usize {
        self.formula + usize::from(self.n % 3 == 1 && self.n >= 7)
    }

    pub fn checks(&self) -> Vec<Check> {
        let f = self.formula;
        vec![
            Check::assert(
                "reg_path",
                self.reg_path == f,
                format!("reg(P{}) = {} vs {f}", self.n, self.reg_path),
            ),
            Check::assert(
                "reg_cycle",
                self.reg_cycle == f,
                format!("reg(C{}) = {} vs {f}", self.n, self.reg_cycle),
            ),
            Check::assert(
                "indmatch_path",
                self.indmatch_path == self.reg_path,
                format!("indmatch(P{}) = {}", self.n, self.indmatch_path),
            ),
            Check::assert(
                "indmatch_cycle",
                self.indmatch_cycle == self.expected_indmatch_cycle(),
                format!(
                    "indmatch(C{}) = {} vs {}",
                    self.n,
                    self.indmatch_cycle,
                    self.expected_indmatch_cycle()
                ),
            ),
            Check::assert(
                "cochord_path",
                self.cochord_path == self.reg_path,
                format!("cochord(P{}) = {}", self.n, self.cochord_path),
            ),
            Check::assert(
                "cochord_cycle",
                self.cochord_cycle == self.expected_cochord_cycle(),
                format!(
                    "cochord(C{}) = {} vs {}",
                    self.n,
                    self.cochord_cycle,
                    self.expected_cochord_cycle()
                ),
            ),
        ]
    }

    pub fn matches(&self) -> bool {
        self.checks().iter().all(|c| c.status == Status::Pass)
    }
}

pub fn paths_cycles_row(
    n: usize,
    f: FieldSpec,
    budget: Option<Duration>,
) -> Result<PathsCyclesRow> {
    let (p, c) = (path(n), cycle(n));
    Ok(PathsCyclesRow {
        n,
        formula: (n + 1) / 3,
        reg_path: complex_regularity(&p, f)?.value,
        reg_cycle: complex_regularity(&c, f)?.value,
        indmatch_path: induced_matching_number(&p)?.value,
        indmatch_cycle: induced_matching_number(&c)?.value,
        cochord_path: exact_cochord(&p, budget)?,
        cochord_cycle: exact_cochord(&c, budget)?,
    })
}

/// Rows for `n = 3..=nmax`.
pub fn paths_cycles(
    nmax: usize,
    f: FieldSpec,
    budget: Option<Duration>,
) -> Result<Vec<PathsCyclesRow>> {
    if nmax > PATHS_CYCLES_NMAX {
        return Err(Error::Capacity {
            what: "nmax",
            limit: PATHS_CYCLES_NMAX,
            got: nmax,
        });
    }
    (3..=nmax).map(|n| paths_cycles_row(n, f, budget)).collect()
}

pub fn paths_cycles_records(rows: &[PathsCyclesRow]) -> Vec<ReportRecord> {
    rows.iter()
        .map(|row| {
            let mut r = ReportRecord::new(
                format!("P{0},C{0}", row.n),
                emit_graph6_string(&cycle(row.n)),
            );
            r.invariants.n = row.n;
            r.invariants.m = row.n;
            r.invariants.indmatch = Some(row.indmatch_cycle);
            r.checks = row.checks();
            r
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapMode {
    Direct,
    Additive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapResult {
    pub r: usize,
    pub s: usize,
    pub mode: GapMode,
    pub indmatch: usize,
    pub reg: usize,
    pub cochord: usize,
}

impl GapResult {
    pub fn holds(&self) -> bool {
        self.reg >= self.r
            && self.indmatch == self.reg - self.r
            && self.cochord == self.reg + self.s
    }
}

/// Disjoint union of `r` copies of `C5` and `s` copies of `C7`.
pub fn gap_graph(r: usize, s: usize) -> Result<Graph> {
    let mut g = Graph::edgeless(0)?;
    for _ in 0..r {
        g = g.disjoint_union(&cycle(5))?;
    }
    for _ in 0..s {
        g = g.disjoint_union(&cycle(7))?;
    }
    Ok(g)
}

/// Direct computation when the union has at most 18 vertices. Larger unions
/// take the regularity as the sum over components; the induced matching and
/// co-chordal cover numbers are always computed on the union itself.
pub fn gap(r: usize, s: usize, f: FieldSpec, budget: Option<Duration>) -> Result<GapResult> {
    let g = gap_graph(r, s)?;
    let (mode, reg) = if g.n() <= GAP_DIRECT_VERTICES {
        (GapMode::Direct, complex_regularity(&g, f)?.value)
    } else {
        let c5 = complex_regularity(&cycle(5), f)?.value;
        let c7 = complex_regularity(&cycle(7), f)?.value;
        (GapMode::Additive, r * c5 + s * c7)
    };
    Ok(GapResult {
        r,
        s,
        mode,
        indmatch: induced_matching_number(&g)?.value,
        reg,
        cochord: exact_cochord(&g, budget)?,
    })
}

pub fn gap_record(res: &GapResult) -> Result<ReportRecord> {
    let g = gap_graph(res.r, res.s)?;
    let mut rec = ReportRecord::new(format!("gap({},{})", res.r, res.s), emit_graph6_string(&g));
    rec.invariants.n = g.n();
    rec.invariants.m = g.edge_count();
    rec.invariants.indmatch = Some(res.indmatch);
    rec.push(Check::assert(
        "indmatch_gap",
        res.reg >= res.r && res.indmatch == res.reg - res.r,
        format!("indmatch {} = reg {} - {}", res.indmatch, res.reg, res.r),
    ));
    rec.push(Check::assert(
        "cochord_gap",
        res.cochord == res.reg + res.s,
        format!(
            "cochord {} = reg {} + {} ({:?})",
            res.cochord, res.reg, res.s, res.mode
        ),
    ));
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiskerRow {
    pub indmatch_whisker: usize,
    pub alpha: usize,
    pub cochord_whisker: usize,
    pub chi_complement: usize,
    pub well_covered: bool,
}

impl WhiskerRow {
    pub fn holds(&self) -> bool {
        self.indmatch_whisker == self.alpha
            && self.cochord_whisker == self.chi_complement
            && self.well_covered
    }
}

pub fn whisker_row(g: &Graph, budget: Option<Duration>) -> Result<WhiskerRow> {
    let w = g.whisker()?;
    Ok(WhiskerRow {
        indmatch_whisker: induced_matching_number(&w)?.value,
        alpha: independence_number(g)?.value,
        cochord_whisker: exact_cochord(&w, budget)?,
        chi_complement: chromatic_number(&g.complement())?.value,
        well_covered: is_well_covered(&w)?.well_covered,
    })
}

pub fn whisker_record(id: &str, g: &Graph, budget: Option<Duration>) -> ReportRecord {
    let mut rec = ReportRecord::new(id, emit_graph6_string(g));
    rec.invariants.n = g.n();
    rec.invariants.m = g.edge_count();
    match whisker_row(g, budget) {
        Ok(row) => {
            rec.invariants.alpha = Some(row.alpha);
            rec.push(Check::assert(
                "indmatch_whisker",
                row.indmatch_whisker == row.alpha,
                format!(
                    "indmatch W = {} vs alpha {}",
                    row.indmatch_whisker, row.alpha
                ),
            ));
            rec.push(Check::assert(
                "cochord_whisker",
                row.cochord_whisker == row.chi_complement,
                format!(
                    "cochord W = {} vs chi(complement) {}",
                    row.cochord_whisker, row.chi_complement
                ),
            ));
            rec.push(Check::assert("whisker_well_covered", row.well_covered, ""));
        }
        Err(e) => rec.push(Check::new("whisker", Status::Blocked, e.to_string())),
    }
    rec
}

/// `C6` on `0..6` with pendants `6..10` attached to `0..4`.
pub fn scm_example_graph() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    e.extend((0..4).map(|i| (i, 6 + i)));
    Graph::from_edges(10, e).expect("valid edges")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScmExample {
    pub indmatch: usize,
    pub cochord: usize,
    pub reg: usize,
}

pub fn scm_example(f: FieldSpec, budget: Option<Duration>) -> Result<ScmExample> {
    let g = scm_example_graph();
    Ok(ScmExample {
        indmatch: induced_matching_number(&g)?.value,
        cochord: exact_cochord(&g, budget)?,
        reg: complex_regularity(&g, f)?.value,
    })
}

pub fn scm_record(x: &ScmExample) -> ReportRecord {
    let g = scm_example_graph();
    let mut rec = ReportRecord::new("c6-pendants", emit_graph6_string(&g));
    rec.invariants.n = g.n();
    rec.invariants.m = g.edge_count();
    rec.invariants.indmatch = Some(x.indmatch);
    rec.push(Check::assert(
        "indmatch",
        x.indmatch == 2,
        format!("{} vs 2", x.indmatch),
    ));
    rec.push(Check::assert(
        "cochord",
        x.cochord == 3,
        format!("{} vs 3", x.cochord),
    ));
    rec.push(Check::assert("reg", x.reg == 2, format!("{} vs 2", x.reg)));
    rec
}

fn all_cliques(g: &Graph) -> Vec<u64> {
    fn grow(g: &Graph, current: u64, candidates: u64, out: &mut Vec<u64>) {
        out.push(current);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(g, current | 1 << v, rest & g.neighbors(v), out);
        }
    }
    let mut out = Vec::new();
    grow(g, 0, g.vertices(), &mut out);
    out
}

/// Unordered pairs of disjoint cliques (either may be empty) whose removal
/// leaves an independent set.
pub fn two_clique_split_pairs(g: &Graph) -> Vec<(u64, u64)> {
    let cliques = all_cliques(g);
    let mut out = Vec::new();
    for (i, &a) in cliques.iter().enumerate() {
        for &b in &cliques[i..] {
            if a & b == 0 && g.is_independent(g.vertices() & !(a | b)) {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PetersenComplement {
    pub free_of_2k2: bool,
    pub free_of_claw: bool,
    pub split_pairs: usize,
    pub cliques: usize,
}

pub fn petersen_complement() -> Result<PetersenComplement> {
    let p = GraphFamily::Petersen.build()?.complement();
    Ok(PetersenComplement {
        free_of_2k2: has_induced(&p, &GraphFamily::Matching { m: 2 })?.is_none(),
        free_of_claw: has_induced(&p, &GraphFamily::claw())?.is_none(),
        split_pairs: two_clique_split_pairs(&p).len(),
        cliques: all_cliques(&p).len(),
    })
}

pub fn petersen_record(x: &PetersenComplement) -> Result<ReportRecord> {
    let p = GraphFamily::Petersen.build()?.complement();
    let mut rec = ReportRecord::new("petersen-complement", emit_graph6_string(&p));
    rec.invariants.n = p.n();
    rec.invariants.m = p.edge_count();
    rec.push(Check::assert(
        "2k2_claw_free",
        x.free_of_2k2 && x.free_of_claw,
        format!("2K2-free {}, claw-free {}", x.free_of_2k2, x.free_of_claw),
    ));
    rec.push(Check::assert(
        "no_two_clique_split",
        x.split_pairs == 0,
        format!(
            "{} qualifying pairs among {} cliques",
            x.split_pairs, x.cliques
        ),
    ));
    Ok(rec)
}
