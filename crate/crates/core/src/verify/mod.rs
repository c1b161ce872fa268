//! The verification campaign and its JSON report.

pub mod campaign;
pub mod report;

pub use campaign::{default_types, filtration_stages, filtration_steps, poincare_polynomial, run_campaign, CampaignSpec, Suite};
pub use report::{Check, Status, Summary, SubjectReport, Timing, VerificationReport, REPORT_SCHEMA};
