//! Grid sweeps over `(n, s)` producing one report row per graph.

use serde::{Deserialize, Serialize};

use crate::bounds::bounds_report;
use crate::diameter::diameter_exact;
use crate::formulas::diameter_formula;
use crate::oracle::oracle_diameter;
use crate::params::CirculantParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordChoice {
    All,
    Fixed(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub n_min: u64,
    pub n_max: u64,
    pub chord: ChordChoice,
    pub verify_oracle: bool,
    /// Rows with `n` above this skip the oracle even when `verify_oracle` is set.
    pub oracle_n_limit: Option<u64>,
}

impl SweepOptions {
    pub fn new(n_min: u64, n_max: u64) -> Self {
        SweepOptions {
            n_min,
            n_max,
            chord: ChordChoice::All,
            verify_oracle: false,
            oracle_n_limit: None,
        }
    }

    /// Valid `(n, s)` pairs in canonical order: `n` ascending, then `s`.
    pub fn cells(&self) -> Vec<CirculantParams> {
        let mut out = Vec::new();
        for n in self.n_min.max(5)..=self.n_max {
            let s_range = match self.chord {
                ChordChoice::All => 2..=(n - 1) / 2,
                ChordChoice::Fixed(s) => s..=s,
            };
            out.extend(s_range.filter_map(|s| CirculantParams::new(n, s).ok()));
        }
        out
    }

    fn oracle_enabled_for(&self, n: u64) -> bool {
        self.verify_oracle && self.oracle_n_limit.map_or(true, |limit| n <= limit)
    }
}

/// Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub s: u64,
    pub diam_algorithm: u64,
    pub diam_formula: Option<u64>,
    pub formula_case: String,
    pub diam_oracle: Option<u64>,
    pub bound_du: u64,
    pub bound_gn: u64,
    pub bound_new: u64,
    pub bound_combined: u64,
    pub agree_formula: Option<bool>,
    pub agree_oracle: Option<bool>,
    pub witness_min: u64,
}

impl SweepRow {
    pub const COLUMNS: [&'static str; 13] = [
        "n",
        "s",
        "diam_algorithm",
        "diam_formula",
        "formula_case",
        "diam_oracle",
        "bound_du",
        "bound_gn",
        "bound_new",
        "bound_combined",
        "agree_formula",
        "agree_oracle",
        "witness_min",
    ];

    pub fn compute(p: &CirculantParams, with_oracle: bool) -> Self {
        let exact = diameter_exact(p);
        let formula = diameter_formula(p);
        let case = crate::formulas::classify_case(&p.decompose(), p);
        let oracle = with_oracle.then(|| oracle_diameter(p).value);
        let bounds = bounds_report(p);
        SweepRow {
            n: p.n(),
            s: p.s(),
            diam_algorithm: exact.value,
            diam_formula: formula.map(|f| f.value),
            formula_case: case.as_str().to_string(),
            diam_oracle: oracle,
            bound_du: bounds.du,
            bound_gn: bounds.gobel_neutel,
            bound_new: bounds.new_bound,
            bound_combined: bounds.combined,
            agree_formula: formula.map(|f| f.value == exact.value),
            agree_oracle: oracle.map(|d| d == exact.value),
            witness_min: exact.witnesses[0],
        }
    }

    /// `false` iff some comparison was made and failed.
    pub fn verified(&self) -> bool {
        self.agree_formula != Some(false) && self.agree_oracle != Some(false)
    }
}

/// Rows for every cell, in canonical order regardless of scheduling.
pub fn sweep(opts: &SweepOptions) -> Vec<SweepRow> {
    let cells = opts.cells();
    let row = |p: &CirculantParams| SweepRow::compute(p, opts.oracle_enabled_for(p.n()));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cells.par_iter().map(row).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cells.iter().map(row).collect()
    }
}
