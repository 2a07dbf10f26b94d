//! Table-row fixtures: Kac labels with expected `(dim 𝔠, dim N_V)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{graded_from_labels, KacLabels};
use crate::jordan::{rank_of_grading, SamplingConfig};
use crate::rootsys::SimpleType;

/// The bundled fixture file.
pub const BUNDLED: &str = include_str!("../data/tables.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowFixture {
    pub labels: String,
    pub m: usize,
    pub dim_c: usize,
    pub dim_nilcone: usize,
    /// Carried as metadata; never checked.
    #[serde(default)]
    pub orbits: Option<usize>,
    #[serde(default)]
    pub components: Option<usize>,
}

#[derive(Deserialize)]
struct FixtureFile {
    row: Vec<TableRowFixture>,
}

impl TableRowFixture {
    pub fn kac_labels(&self) -> Result<KacLabels> {
        let l: KacLabels = self.labels.parse()?;
        if l.period() != self.m {
            return Err(Error::InvalidLabels(format!("{}: labels give m = {}, row says {}", self.labels, l.period(), self.m)));
        }
        Ok(l)
    }

    /// Exceptional rows beyond G2 and F4.
    pub fn is_large(&self) -> bool {
        self.kac_labels().map(|l| l.cartan_type.kind == SimpleType::E).unwrap_or(false)
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<TableRowFixture>> {
    let f: FixtureFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for r in &f.row {
        r.kac_labels()?;
    }
    Ok(f.row)
}

pub fn bundled_fixtures() -> Vec<TableRowFixture> {
    parse_fixtures(BUNDLED).expect("bundled fixture file parses")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub labels: String,
    pub m: usize,
    pub expected: (usize, usize),
    pub computed: Option<(usize, usize)>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub orbits_checked: bool,
    pub components_checked: bool,
}

pub fn verify_row(row: &TableRowFixture, cfg: &SamplingConfig) -> RowOutcome {
    let computed = row
        .kac_labels()
        .and_then(|l| graded_from_labels(&l))
        .and_then(|g| rank_of_grading(&g, cfg).map(|r| (r.rank, g.block(1).len() - r.rank)));
    let expected = (row.dim_c, row.dim_nilcone);
    let (computed, error) = match computed {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    RowOutcome {
        labels: row.labels.clone(),
        m: row.m,
        expected,
        pass: computed == Some(expected),
        computed,
        error,
        orbits_checked: false,
        components_checked: false,
    }
}

/// Verifies rows on scoped worker threads; results keep row order.
pub fn verify_rows(rows: &[TableRowFixture], cfg: &SamplingConfig, workers: usize) -> Vec<RowOutcome> {
    let workers = workers.max(1).min(rows.len().max(1));
    let mut out: Vec<Option<RowOutcome>> = vec![None; rows.len()];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || rows.iter().enumerate().skip(w).step_by(workers).map(|(i, r)| (i, verify_row(r, cfg))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                out[i] = Some(r);
            }
        }
    });
    out.into_iter().map(Option::unwrap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_rows_are_consistent() {
        let rows = bundled_fixtures();
        assert_eq!(rows.len(), 26);
        for r in &rows {
            let l = r.kac_labels().unwrap();
            // dim V = dim 𝔠 + dim N_V is checked when rows run; here only m
            assert_eq!(l.period(), r.m);
        }
    }

    #[test]
    fn period_mismatch_is_rejected() {
        let bad = "[[row]]\nlabels = \"G2: s=[1,0,1]\"\nm = 4\ndim_c = 1\ndim_nilcone = 4\n";
        assert!(parse_fixtures(bad).is_err());
    }
}
