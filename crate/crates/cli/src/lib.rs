//! Experiment driver: reads group, presentation and idempotent files, runs
//! one named task and produces a deterministic report.

mod config;
mod error;
mod report;
mod tasks;

use std::collections::BTreeMap;

pub use config::{ExperimentConfig, Format, Task};
pub use error::{CliError, CliResult};
pub use report::Report;
pub use tasks::parse_auto;

pub fn run_experiment(config: &ExperimentConfig) -> CliResult<Report> {
    config.validate()?;
    let config_hash = config.hash()?;
    let outcome = match config.task {
        Task::Gaschuetz => tasks::gaschuetz(config),
        Task::Rep => tasks::rep(config),
        Task::Orbit => tasks::orbit(config),
        Task::Tc => tasks::tc(config),
        Task::Abelianize => tasks::abelianize(config),
        Task::CyclicSigma => tasks::cyclic_sigma(config),
        Task::Chartab => tasks::chartab(config),
        Task::TableN2 => tasks::table_n2(config),
    }?;
    let versions = BTreeMap::from([
        ("relmod-core".to_string(), relmod::VERSION.to_string()),
        (
            "relmod-cli".to_string(),
            env!("CARGO_PKG_VERSION").to_string(),
        ),
    ]);
    Ok(Report {
        task: config.task.to_string(),
        config_hash,
        versions,
        results: outcome.rows,
        assertion_failures: outcome.failures,
    })
}
