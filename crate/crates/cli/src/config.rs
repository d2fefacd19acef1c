use std::time::Duration;

use edgereg::homology::{DEFAULT_FACE_CAP, MAX_REGULARITY_VERTICES};
use edgereg::{Error, FieldSpec, RegularityConfig, ReportOptions, Result, Selection};

use crate::report::OutputFormat;

/// Largest `n` the bundled corpus covers.
pub const CORPUS_NMAX: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub nmax: usize,
    pub fields: Vec<FieldSpec>,
    pub regularity: RegularityConfig,
    pub cochord_budget: Option<Duration>,
    pub format: OutputFormat,
    /// Worker threads; 0 means one per core.
    pub jobs: usize,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            nmax: CORPUS_NMAX,
            fields: vec![FieldSpec::GF2],
            regularity: RegularityConfig::default(),
            cochord_budget: None,
            format: OutputFormat::Text,
            jobs: 0,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.fields.is_empty() {
            return Err(Error::Parameter("at least one field is required".into()));
        }
        if self.regularity.vertex_cap > MAX_REGULARITY_VERTICES {
            return Err(Error::Parameter(format!(
                "regularity vertex cap {} exceeds {MAX_REGULARITY_VERTICES}",
                self.regularity.vertex_cap
            )));
        }
        if self.regularity.face_cap == 0 || self.regularity.face_cap > 8 * DEFAULT_FACE_CAP {
            return Err(Error::Parameter(format!(
                "face cap {} out of range",
                self.regularity.face_cap
            )));
        }
        Ok(())
    }

    pub fn report_options(&self, select: Selection) -> ReportOptions {
        ReportOptions {
            select,
            fields: self.fields.clone(),
            regularity: self.regularity,
            cochord_budget: self.cochord_budget,
            timings: self.timings,
        }
    }

    /// Field list from text like `2,3,5`.
    pub fn parse_fields(text: &str) -> Result<Vec<FieldSpec>> {
        text.split(',')
            .map(|t| {
                let p: u64 = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parameter(format!("field `{t}` is not an integer")))?;
                FieldSpec::new(p)
            })
            .collect()
    }
}
