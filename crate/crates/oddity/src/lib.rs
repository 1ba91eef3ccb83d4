//! Scenario files, reports and the command-line driver for `oddity-core`.

pub mod cli;
pub mod report;
pub mod scenario;

pub use cli::run_cli;
pub use report::{render_explain, render_json, render_table, Format, Report};
pub use scenario::{parse_scenario, render_scenario, ScenarioError};
