//! Independence complexes, reduced homology over prime fields, and the
//! regularity of a graph's independence complex.
//!
//! The regularity of a complex is the largest `i` such that some induced
//! subcomplex has nonvanishing reduced homology in degree `i - 1`. For an
//! independence complex the induced subcomplexes are exactly the independence
//! complexes of induced subgraphs, so the scan runs over vertex subsets `W`.
//!
//! Two facts keep the scan cheap:
//! * if `G[W]` has an isolated vertex its independence complex is a cone and
//!   has no reduced homology;
//! * if `G[W]` is disconnected its independence complex is the join of the
//!   components' complexes, and over a field the nonzero degrees of a join are
//!   the pairwise sums of the factors' nonzero degrees (shifted by one).
//!
//! Subsets are visited in increasing numeric order, so every component of `W`
//! has already been classified when `W` is reached.

mod linalg;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, full, ones};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use linalg::{rank_gf2, rank_mod_p, SignedRow};

/// Default bound on the number of faces of a materialized complex.
pub const DEFAULT_FACE_CAP: usize = 1 << 22;
/// Default bound on the vertex count for the subset scan.
pub const DEFAULT_REGULARITY_VERTEX_CAP: usize = 18;
/// The subset scan keeps one word per subset; this is the hard ceiling.
pub const MAX_REGULARITY_VERTICES: usize = 24;

/// A prime field GF(p), `2 <= p <= 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { p: 2 };

    pub fn new(p: u64) -> Result<Self> {
        if !(2..=1 << 31).contains(&p) {
            return Err(Error::Parameter(format!(
                "field characteristic {p} outside 2..=2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Parameter(format!(
                "field characteristic {p} is not prime"
            )));
        }
        Ok(FieldSpec { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A simplicial complex on vertices `0..n`, faces stored as bitmasks and
/// grouped by size: `faces[k]` holds the faces with `k` vertices (dimension
/// `k - 1`), each list sorted ascending. `faces[0] == [0]` is the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary face list; the list must be closed
    /// under taking subsets.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            if f & !full(n) != 0 {
                return Err(Error::Argument(format!(
                    "face {f:#x} has a vertex outside 0..{n}"
                )));
            }
            let k = f.count_ones() as usize;
            if by_size.len() <= k {
                by_size.resize(k + 1, Vec::new());
            }
            by_size[k].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable();
            level.dedup();
        }
        let c = SimplicialComplex { n, faces: by_size };
        if !c.is_closed() {
            return Err(Error::Argument(
                "face list is not closed under subsets".into(),
            ));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces grouped by vertex count.
    pub fn faces(&self) -> &[Vec<u64>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Dimension; `-1` for `{∅}`, `-2` for the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn contains(&self, face: u64) -> bool {
        let k = face.count_ones() as usize;
        k < self.faces.len() && self.faces[k].binary_search(&face).is_ok()
    }

    /// True iff every codimension-one subface of every face is present.
    pub fn is_closed(&self) -> bool {
        self.faces.iter().enumerate().skip(1).all(|(k, level)| {
            level
                .iter()
                .all(|&f| ones(f).all(|v| self.faces[k - 1].binary_search(&(f & !bit(v))).is_ok()))
        }) && self.faces.iter().skip(1).all(|l| !l.is_empty())
    }

    /// Alternating face count, the empty face counted in dimension -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, l)| {
                if k % 2 == 1 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    /// Signed boundary map from faces with `k` vertices to faces with
    /// `k - 1` vertices. Removing the `t`-th smallest vertex carries sign
    /// `(-1)^t`. Row `r` is the boundary of `faces()[k][r]`.
    pub fn boundary(&self, k: usize) -> Vec<SignedRow> {
        if k == 0 || k >= self.faces.len() {
            return Vec::new();
        }
        let lower = &self.faces[k - 1];
        self.faces[k]
            .iter()
            .map(|&f| {
                ones(f)
                    .enumerate()
                    .map(|(t, v)| {
                        let col = lower
                            .binary_search(&(f & !bit(v)))
                            .expect("complex is closed under subsets");
                        (col, if t % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect()
    }
}

/// The complex of independent sets of `g`, failing once more than
/// `face_cap` faces have been produced.
pub fn independence_complex(g: &Graph, face_cap: usize) -> Result<SimplicialComplex> {
    fn rec(g: &Graph, face: u64, candidates: u64, out: &mut Vec<u64>, cap: usize) -> Result<()> {
        if out.len() >= cap {
            return Err(Error::capacity("face count", cap, out.len() + 1));
        }
        out.push(face);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(g, face | bit(v), rest & !g.neighbors(v), out, cap)?;
        }
        Ok(())
    }
    let mut all = Vec::new();
    rec(g, 0, g.vertices(), &mut all, face_cap)?;
    let mut faces: Vec<Vec<u64>> = Vec::new();
    for f in all {
        let k = f.count_ones() as usize;
        if faces.len() <= k {
            faces.resize(k + 1, Vec::new());
        }
        faces[k].push(f);
    }
    for level in &mut faces {
        level.sort_unstable();
    }
    Ok(SimplicialComplex { n: g.n(), faces })
}

/// Reduced Betti numbers `(β̃_{-1}, β̃_0, β̃_1, ...)` over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub field: FieldSpec,
    pub betti: Vec<usize>,
}

impl BettiVector {
    /// `β̃_d`, zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.betti.get(i).copied())
            .unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Bit `i` set iff `β̃_{i-1} != 0`.
    fn degree_mask(&self) -> u32 {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

pub fn reduced_betti(c: &SimplicialComplex, f: FieldSpec) -> BettiVector {
    let levels = c.faces.len();
    // rank[k] = rank of the boundary out of faces with k vertices
    let mut rank = vec![0usize; levels + 1];
    for (k, r) in rank.iter_mut().enumerate().take(levels).skip(1) {
        let rows = c.boundary(k);
        let cols = c.faces[k - 1].len();
        *r = if f.p() == 2 {
            rank_gf2(&rows, cols)
        } else {
            rank_mod_p(&rows, cols, f.p())
        };
    }
    let betti = (0..levels)
        .map(|k| c.faces[k].len() - rank[k] - rank[k + 1])
        .collect();
    BettiVector { field: f, betti }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityConfig {
    pub vertex_cap: usize,
    pub face_cap: usize,
}

impl Default for RegularityConfig {
    fn default() -> Self {
        RegularityConfig {
            vertex_cap: DEFAULT_REGULARITY_VERTEX_CAP,
            face_cap: DEFAULT_FACE_CAP,
        }
    }
}

/// `β̃_{degree-1}` of the independence complex of `G[vertices]` is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityWitness {
    pub vertices: u64,
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityResult {
    pub field: FieldSpec,
    pub value: usize,
    pub witness: RegularityWitness,
}

impl RegularityResult {
    /// Recomputes the witness subcomplex's homology from scratch.
    pub fn validate(&self, g: &Graph) -> Result<bool> {
        let h = g.induced_subgraph(self.witness.vertices);
        let c = independence_complex(&h, DEFAULT_FACE_CAP)?;
        let b = reduced_betti(&c, self.field);
        Ok(self.witness.degree == self.value && b.get(self.value as isize - 1) != 0)
    }
}

fn sumset(a: u32, b: u32) -> u32 {
    ones(a as u64).fold(0, |acc, i| acc | b << i)
}

/// Bit `i` of `out[W]` is set iff `β̃_{i-1}(Ind(G[W])) != 0`.
fn degree_table(g: &Graph, f: FieldSpec, face_cap: usize) -> Result<Vec<u32>> {
    let n = g.n();
    let mut table = vec![0u32; 1 << n];
    table[0] = 1;
    for w in 1u64..1 << n {
        let comps = g.components(w);
        table[w as usize] = if comps.len() > 1 {
            comps
                .iter()
                .fold(1u32, |acc, &c| sumset(acc, table[c as usize]))
        } else if w.count_ones() == 1 {
            0
        } else {
            let h = g.induced_subgraph(w);
            let c = independence_complex(&h, face_cap)?;
            reduced_betti(&c, f).degree_mask()
        };
    }
    Ok(table)
}

/// Regularity of `Ind(g)` over `f`, with the default caps.
pub fn complex_regularity(g: &Graph, f: FieldSpec) -> Result<RegularityResult> {
    complex_regularity_with(g, f, &RegularityConfig::default())
}

/// Regularity of `Ind(g)` over `f`. The witness is the numerically smallest
/// subset attaining the maximum.
pub fn complex_regularity_with(
    g: &Graph,
    f: FieldSpec,
    cfg: &RegularityConfig,
) -> Result<RegularityResult> {
    let cap = cfg.vertex_cap.min(MAX_REGULARITY_VERTICES);
    if g.n() > cap {
        return Err(Error::capacity("vertex count", cap, g.n()));
    }
    let table = degree_table(g, f, cfg.face_cap)?;
    let mut best = RegularityWitness {
        vertices: 0,
        degree: 0,
    };
    for (w, &mask) in table.iter().enumerate() {
        if mask == 0 {
            continue;
        }
        let top = 31 - mask.leading_zeros() as usize;
        if top > best.degree {
            best = RegularityWitness {
                vertices: w as u64,
                degree: top,
            };
        }
    }
    Ok(RegularityResult {
        field: f,
        value: best.degree,
        witness: best,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiFieldRegularity {
    pub results: Vec<RegularityResult>,
    /// All fields gave the same value.
    pub agree: bool,
}

pub fn regularity_multi_field(g: &Graph, fields: &[FieldSpec]) -> Result<MultiFieldRegularity> {
    regularity_multi_field_with(g, fields, &RegularityConfig::default())
}

pub fn regularity_multi_field_with(
    g: &Graph,
    fields: &[FieldSpec],
    cfg: &RegularityConfig,
) -> Result<MultiFieldRegularity> {
    let results = fields
        .iter()
        .map(|&f| complex_regularity_with(g, f, cfg))
        .collect::<Result<Vec<_>>>()?;
    let agree = results.windows(2).all(|w| w[0].value == w[1].value);
    Ok(MultiFieldRegularity { results, agree })
}

/// True iff regularity is additive over the disjoint union of `g1` and `g2`.
pub fn join_regularity_check(g1: &Graph, g2: &Graph, f: FieldSpec) -> Result<bool> {
    let u = g1.disjoint_union(g2)?;
    let whole = complex_regularity(&u, f)?.value;
    let a = complex_regularity(g1, f)?.value;
    let b = complex_regularity(g2, f)?.value;
    Ok(whole == a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn fam(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }
    fn ind(g: &Graph) -> SimplicialComplex {
        independence_complex(g, DEFAULT_FACE_CAP).unwrap()
    }
    fn reg(g: &Graph) -> usize {
        complex_regularity(g, FieldSpec::GF2).unwrap().value
    }
    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(2_147_483_647).is_ok());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new((1 << 31) + 11).is_err());
    }

    #[test]
    fn independence_complex_examples() {
        let k3 = ind(&fam(GraphFamily::Complete { n: 3 }));
        assert_eq!(k3.faces(), &[vec![0], vec![1, 2, 4]]);
        let sq = ind(&fam(GraphFamily::Matching { m: 2 }));
        assert_eq!(sq.face_count(), 9);
        assert_eq!(sq.faces()[2], vec![0b0101, 0b0110, 0b1001, 0b1010]);
        let simplex = ind(&Graph::edgeless(3).unwrap());
        assert_eq!(simplex.face_count(), 8);
        assert!(simplex.is_closed());
    }

    #[test]
    fn face_cap_is_enforced() {
        let g = Graph::edgeless(10).unwrap();
        assert!(matches!(
            independence_complex(&g, 100),
            Err(Error::Capacity { limit: 100, .. })
        ));
    }

    #[test]
    fn betti_examples() {
        let sq = ind(&fam(GraphFamily::Matching { m: 2 }));
        assert_eq!(reduced_betti(&sq, FieldSpec::GF2).betti, vec![0, 0, 1]);
        let simplex = ind(&Graph::edgeless(4).unwrap());
        assert!(reduced_betti(&simplex, gf(3)).betti.iter().all(|&b| b == 0));
        let c5 = ind(&fam(GraphFamily::Cycle { n: 5 }));
        assert_eq!(c5.face_count(), 11);
        assert_eq!(reduced_betti(&c5, FieldSpec::GF2).betti, vec![0, 0, 1]);
        let empty = ind(&Graph::edgeless(0).unwrap());
        assert_eq!(reduced_betti(&empty, FieldSpec::GF2).betti, vec![1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = ind(&fam(GraphFamily::Cycle { n: 7 }));
        for k in 2..c.faces().len() {
            let outer = c.boundary(k);
            let inner = c.boundary(k - 1);
            for row in &outer {
                let mut acc = vec![0i64; c.faces()[k - 2].len()];
                for &(mid, s) in row {
                    for &(low, t) in &inner[mid] {
                        acc[low] += (s * t) as i64;
                    }
                }
                assert!(acc.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(reg(&Graph::edgeless(5).unwrap()), 0);
        for n in 2..=6 {
            assert_eq!(reg(&fam(GraphFamily::Complete { n })), 1);
        }
        assert_eq!(reg(&fam(GraphFamily::Cycle { n: 5 })), 2);
        assert_eq!(reg(&fam(GraphFamily::Matching { m: 3 })), 3);
        assert_eq!(reg(&Graph::edgeless(0).unwrap()), 0);
    }

    #[test]
    fn witness_validates() {
        for g in [
            fam(GraphFamily::Cycle { n: 5 }),
            fam(GraphFamily::Matching { m: 3 }),
            fam(GraphFamily::Petersen),
            Graph::edgeless(3).unwrap(),
        ] {
            for p in [2, 3] {
                let r = complex_regularity(&g, gf(p)).unwrap();
                assert!(r.validate(&g).unwrap(), "{g:?} over GF({p})");
            }
        }
        // smallest witness for 3K2 is the whole graph
        let r = complex_regularity(&fam(GraphFamily::Matching { m: 3 }), FieldSpec::GF2).unwrap();
        assert_eq!(r.witness.vertices, 0b111111);
    }

    #[test]
    fn multi_field_examples() {
        let fields = [gf(2), gf(3), gf(5)];
        let c7 = regularity_multi_field(&fam(GraphFamily::Cycle { n: 7 }), &fields).unwrap();
        assert!(c7.agree);
        assert!(c7.results.iter().all(|r| r.value == 2));
        let p4 = regularity_multi_field(&fam(GraphFamily::Path { n: 4 }), &fields[..2]).unwrap();
        assert!(p4.agree && p4.results[0].value == 1);
        let pet = regularity_multi_field(&fam(GraphFamily::Petersen), &fields[..2]).unwrap();
        assert!(pet.agree);
    }

    #[test]
    fn join_examples() {
        let k2 = fam(GraphFamily::Path { n: 2 });
        assert!(join_regularity_check(&k2, &k2, FieldSpec::GF2).unwrap());
        let c5 = fam(GraphFamily::Cycle { n: 5 });
        let c7 = fam(GraphFamily::Cycle { n: 7 });
        assert!(join_regularity_check(&c5, &c7, FieldSpec::GF2).unwrap());
        assert_eq!(reg(&c5.disjoint_union(&c7).unwrap()), 4);
        assert!(join_regularity_check(&Graph::edgeless(0).unwrap(), &c5, FieldSpec::GF2).unwrap());
    }

    #[test]
    fn vertex_cap() {
        let g = Graph::edgeless(19).unwrap();
        assert!(matches!(
            complex_regularity(&g, FieldSpec::GF2),
            Err(Error::Capacity {
                limit: 18,
                got: 19,
                ..
            })
        ));
        let cfg = RegularityConfig {
            vertex_cap: 40,
            ..Default::default()
        };
        let g = Graph::edgeless(25).unwrap();
        assert!(matches!(
            complex_regularity_with(&g, FieldSpec::GF2, &cfg),
            Err(Error::Capacity { limit: 24, .. })
        ));
    }

    #[test]
    fn from_faces_rejects_open_lists() {
        assert!(SimplicialComplex::from_faces(3, [0, 1, 2, 3]).is_ok());
        assert!(SimplicialComplex::from_faces(3, [0, 1, 3]).is_err());
    }
}
