//! Verification campaigns over exhaustively enumerated small graphs.
//!
//! A campaign walks a graph family up to a size bound, runs the same pure
//! measurement pipeline on every member, and records a pass/fail verdict per
//! graph. Results are sorted by canonical form before they are written, so
//! reports do not depend on the number of worker threads.

pub mod campaign;
pub mod config;
pub mod inspect;
pub mod report;

pub use campaign::{measure, run_campaign, Campaign, CampaignResult, Verdict};
pub use config::{CampaignConfig, ConfigFile, CONFIG_ENV};
pub use report::{summary, write_csv, Summary};
