use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bei_core::poly::FieldKind;
use serde::Deserialize;

use crate::campaign::Campaign;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "BEI_LAB_CONFIG";

/// Fields that have a report column.
pub const REPORT_FIELDS: [FieldKind; 3] = [
    FieldKind::Prime(32003),
    FieldKind::Prime(2),
    FieldKind::Rational,
];

/// On-disk TOML settings. Every key is optional; command-line flags win.
///
/// ```toml
/// fields = ["p32003", "p2"]
/// jobs = 4
///
/// [n_max]
/// closed-regularity = 5
///
/// [guards]
/// mm-bounds = 4
/// ```
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub fields: Option<Vec<String>>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub n_max: BTreeMap<String, usize>,
    /// Per-campaign size limits; they may only tighten the built-in ones.
    #[serde(default)]
    pub guards: BTreeMap<String, usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let file: ConfigFile =
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        for name in file.n_max.keys().chain(file.guards.keys()) {
            name.parse::<Campaign>()?;
        }
        Ok(file)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub campaign: Campaign,
    pub n_max: usize,
    pub fields: Vec<FieldKind>,
    pub guard: usize,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

/// Command-line overrides for [`CampaignConfig::resolve`].
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub n_max: Option<usize>,
    pub fields: Option<Vec<FieldKind>>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

pub fn parse_fields(list: &str) -> Result<Vec<FieldKind>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Ok(s.parse::<FieldKind>()?))
        .collect()
}

impl CampaignConfig {
    /// Built-in defaults for `campaign`.
    pub fn new(campaign: Campaign) -> Self {
        CampaignConfig {
            campaign,
            n_max: campaign.default_n_max(),
            fields: campaign.default_fields(),
            guard: campaign.guard(),
            out: None,
            jobs: 1,
        }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_fields(mut self, fields: Vec<FieldKind>) -> Self {
        self.fields = fields;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    /// Defaults, then the config file, then command-line flags; validated.
    pub fn resolve(campaign: Campaign, file: Option<&ConfigFile>, cli: Overrides) -> Result<Self> {
        let mut cfg = Self::new(campaign);
        if let Some(file) = file {
            if let Some(fields) = &file.fields {
                cfg.fields = parse_fields(&fields.join(","))?;
            }
            if let Some(jobs) = file.jobs {
                cfg.jobs = jobs;
            }
            cfg.out = file.out.clone();
            if let Some(&n) = file.n_max.get(campaign.name()) {
                cfg.n_max = n;
            }
            if let Some(&g) = file.guards.get(campaign.name()) {
                if g > cfg.guard {
                    bail!(
                        "guard {g} for {campaign} exceeds the built-in limit {}",
                        cfg.guard
                    );
                }
                cfg.guard = g;
            }
        }
        if let Some(n) = cli.n_max {
            cfg.n_max = n;
        }
        if let Some(fields) = cli.fields {
            cfg.fields = fields;
        }
        if cli.out.is_some() {
            cfg.out = cli.out;
        }
        if let Some(jobs) = cli.jobs {
            cfg.jobs = jobs;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            bail!("--n-max must be at least 1");
        }
        if self.n_max > self.guard {
            bail!(
                "scale guard: {} supports n_max <= {}, got {}",
                self.campaign,
                self.guard,
                self.n_max
            );
        }
        if self.jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        if self.fields.is_empty() {
            bail!("at least one field is required");
        }
        for f in &self.fields {
            if !REPORT_FIELDS.contains(f) {
                bail!("field {f} has no report column; use p32003, p2 or Q");
            }
        }
        if self.campaign == Campaign::CharIndependence && self.fields.len() < 2 {
            bail!("char-independence compares at least two fields");
        }
        Ok(())
    }
}
