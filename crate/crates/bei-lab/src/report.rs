use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Result;
use bei_core::poly::FieldKind;
use itertools::Itertools;
use serde::Serialize;

use crate::campaign::CampaignResult;
use crate::config::CampaignConfig;

pub const CSV_HEADER: [&str; 15] = [
    "campaign",
    "n",
    "canonical_id",
    "edges",
    "closed",
    "chordal",
    "ell",
    "r",
    "reg_JG_p32003",
    "reg_inJG_p32003",
    "reg_JG_p2",
    "reg_JG_Q",
    "indmatch_H",
    "verdict",
    "detail",
];

fn cell(v: Option<usize>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

/// One row per result; fields that were not computed are left empty.
pub fn write_csv<W: Write>(results: &[CampaignResult], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in results {
        w.write_record([
            r.campaign.name().to_string(),
            r.n.to_string(),
            r.canonical_id.clone(),
            r.graph.edge_string(),
            r.closed.to_string(),
            r.chordal.to_string(),
            r.ell.iter().join("+"),
            r.r.to_string(),
            cell(r.reg_jg_over(FieldKind::Prime(32003))),
            cell(r.reg_in_over(FieldKind::Prime(32003))),
            cell(r.reg_jg_over(FieldKind::Prime(2))),
            cell(r.reg_jg_over(FieldKind::Rational)),
            cell(r.indmatch_h),
            r.verdict.to_string(),
            r.detail.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: usize,
    pub canonical_id: String,
    pub edges: String,
    pub detail: String,
}

/// Counts per campaign run; contains no timings so it is reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub campaign: String,
    pub n_max: usize,
    pub fields: Vec<String>,
    #[serde(flatten)]
    pub totals: Counts,
    pub by_n: BTreeMap<usize, Counts>,
    pub failures: Vec<Failure>,
}

pub fn summary(cfg: &CampaignConfig, results: &[CampaignResult]) -> Summary {
    let mut totals = Counts::default();
    let mut by_n: BTreeMap<usize, Counts> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in results {
        for c in [&mut totals, by_n.entry(r.n).or_default()] {
            c.graphs += 1;
            if r.passed() {
                c.passed += 1;
            } else {
                c.failed += 1;
            }
        }
        if !r.passed() {
            failures.push(Failure {
                n: r.n,
                canonical_id: r.canonical_id.clone(),
                edges: r.graph.edge_string(),
                detail: r.detail.clone(),
            });
        }
    }
    Summary {
        campaign: cfg.campaign.name().to_string(),
        n_max: cfg.n_max,
        fields: cfg.fields.iter().map(|f| f.to_string()).collect(),
        totals,
        by_n,
        failures,
    }
}

/// `report.csv` -> `report.json`.
pub fn summary_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("json")
}
