//! Parameter sweeps over MDS and Hamming families.

use clap::ValueEnum;
use codezeta::enumerator::{hamming_enumerator, mds_enumerator, simplex_enumerator};
use codezeta::{CodeParams, WeightEnumerator};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::pipeline::{invariant_from_pair, rh_options, verify};
use crate::source::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanFamily {
    Mds,
    Hamming,
}

pub const CSV_HEADER: &str = "family,q,n_or_r,d,deg,status,max_deviation";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub family: ScanFamily,
    pub q: u64,
    pub n_or_r: usize,
    pub d: usize,
    pub deg: Option<usize>,
    pub status: String,
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Row {
    pub fn csv(&self) -> String {
        let family = match self.family {
            ScanFamily::Mds => "mds",
            ScanFamily::Hamming => "hamming",
        };
        let deg = self.deg.map(|d| d.to_string()).unwrap_or_default();
        let dev = self.max_deviation.map(|v| format!("{v:.3e}")).unwrap_or_default();
        format!("{family},{},{},{},{deg},{},{dev}", self.q, self.n_or_r, self.d, self.status)
    }
}

/// Every `(q, n_or_r, d)` tuple of the sweep, in output order.
pub fn tuples(family: ScanFamily, q_list: &[u64], max: usize) -> CliResult<Vec<(u64, usize, usize)>> {
    if q_list.is_empty() {
        return Err(CliError::BadParams("--q-list is empty".into()));
    }
    let mut qs = q_list.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let mut out = Vec::new();
    for q in qs {
        match family {
            ScanFamily::Mds => {
                for n in 3..=max {
                    for d in 2..=n.div_ceil(2) {
                        out.push((q, n, d));
                    }
                }
            }
            ScanFamily::Hamming => {
                for r in 3..=max {
                    out.push((q, r, 3));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::BadParams("the requested range has no rows".into()));
    }
    Ok(out)
}

fn pair(family: ScanFamily, q: u64, n_or_r: usize, d: usize) -> codezeta::Result<(WeightEnumerator, CodeParams, WeightEnumerator)> {
    match family {
        ScanFamily::Mds => {
            let (w, params) = mds_enumerator(n_or_r, d, q)?;
            let (dual, _) = mds_enumerator(n_or_r, n_or_r + 2 - d, q)?;
            Ok((w, params, dual))
        }
        ScanFamily::Hamming => {
            let (w, params) = hamming_enumerator(n_or_r as u32, q)?;
            let (dual, _) = simplex_enumerator(n_or_r as u32, q)?;
            Ok((w, params, dual))
        }
    }
}

fn row(family: ScanFamily, q: u64, n_or_r: usize, d: usize) -> Row {
    let mut row = Row {
        family,
        q,
        n_or_r,
        d,
        deg: None,
        status: "error".into(),
        max_deviation: None,
        error: None,
    };
    let source_family = match family {
        ScanFamily::Mds => Family::Mds,
        ScanFamily::Hamming => Family::Hamming,
    };
    let result = pair(family, q, n_or_r, d)
        .map_err(CliError::from)
        .and_then(|(w, params, dual)| invariant_from_pair(&w, &params, &dual))
        .and_then(|z| {
            let verdict = verify(&z, &rh_options(Some(source_family), q, None, None))?;
            Ok((z.degree(), verdict))
        });
    match result {
        Ok((deg, verdict)) => {
            row.deg = deg;
            row.status = verdict.status.to_string();
            row.max_deviation = verdict.max_deviation;
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Evaluates rows in parallel; the result keeps the order of `tuples`.
pub fn run(family: ScanFamily, q_list: &[u64], max: usize) -> CliResult<Vec<Row>> {
    let tuples = tuples(family, q_list, max)?;
    Ok(tuples.par_iter().map(|&(q, a, d)| row(family, q, a, d)).collect())
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_order() {
        let t = tuples(ScanFamily::Mds, &[3, 2], 5).unwrap();
        assert_eq!(t[0], (2, 3, 2));
        assert_eq!(t.len(), 2 * (1 + 1 + 2));
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert!(tuples(ScanFamily::Hamming, &[2], 2).is_err());
    }

    #[test]
    fn small_rows() {
        let rows = run(ScanFamily::Mds, &[2], 6).unwrap();
        assert!(rows.iter().all(|r| r.status.starts_with("proved")), "{rows:?}");
        let csv = to_csv(&rows);
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), rows.len() + 1);
    }
}
