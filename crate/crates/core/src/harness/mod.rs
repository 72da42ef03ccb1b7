//! Module files, structured reports and the scenario catalog behind the
//! `kronbrist` command.

pub mod format;
pub mod report;
pub mod scenarios;

pub use format::{canonicalize, parse_module_file, parse_module_file_over, write_module_file, AnyModule};
pub use report::{Check, Checks, ConfigEcho, Report, SCHEMA_VERSION};
pub use scenarios::{run_scenario, Scenario, ScenarioConfig, DEFAULT_SEED, DEFAULT_SUBSET_LIMIT};
