//! Report persistence, run configuration, and theorem-verification suites.

pub mod config;
pub mod report;
pub mod verify;

pub use config::{RunConfig, BUDGET_ENV_VAR};
pub use report::{CheckRow, ConfigEcho, Report, ReportFormat, Verdict};
pub use verify::{
    config_echo, family_row, full_suite, point_count_slopes, run_family_report,
    verify_localization, verify_moi_bound, verify_sum_fixtures, verify_thm_b,
};
