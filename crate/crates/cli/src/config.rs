use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    /// Lattice rank and isotypic dimension audit.
    Gaschuetz,
    /// ρ and η matrices of chosen automorphisms.
    Rep,
    /// Orbit size of the marking under the automorphism generators.
    Orbit,
    /// Stabilizer index by coset enumeration.
    Tc,
    /// Orbit, coset table, Reidemeister–Schreier and abelian invariants.
    Abelianize,
    /// Cyclic representations σ_d of the stabilizer of `F_n → C_m`.
    CyclicSigma,
    /// Character table and rational central idempotents.
    Chartab,
    /// Index and abelianization rows for the built-in two-generator corpus.
    TableN2,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Everything that determines a run. Two runs with equal configs and equal
/// input file contents produce identical output.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub task: Task,
    pub group: Option<PathBuf>,
    /// Name of a built-in corpus group, used when no group file is given.
    pub corpus: Option<String>,
    pub presentation: Option<PathBuf>,
    pub idempotents: Option<PathBuf>,
    pub n: Option<usize>,
    pub m: Option<u64>,
    pub d: Option<u64>,
    pub seed: u64,
    pub max_cosets: usize,
    pub format: Format,
    /// Catalog automorphisms, `NAME[:ARGS]`.
    pub autos: Vec<String>,
}

impl ExperimentConfig {
    pub fn new(task: Task) -> Self {
        ExperimentConfig {
            task,
            group: None,
            corpus: None,
            presentation: None,
            idempotents: None,
            n: None,
            m: None,
            d: None,
            seed: 0,
            max_cosets: relmod::fpgrp::DEFAULT_MAX_COSETS,
            format: Format::Json,
            autos: Vec::new(),
        }
    }

    /// Checks that referenced files exist and that the task has what it needs.
    pub fn validate(&self) -> CliResult<()> {
        for p in [&self.group, &self.presentation, &self.idempotents]
            .into_iter()
            .flatten()
        {
            if !p.is_file() {
                return Err(CliError::Input(format!("no such file: {}", p.display())));
            }
        }
        if self.group.is_some() && self.corpus.is_some() {
            return Err(CliError::Input(
                "give either --group or --corpus, not both".into(),
            ));
        }
        if self.max_cosets == 0 {
            return Err(CliError::Input("--max-cosets must be positive".into()));
        }
        if matches!(self.n, Some(n) if n < 2) {
            return Err(CliError::Input("--n must be at least 2".into()));
        }
        let has_group = self.group.is_some() || self.corpus.is_some();
        match self.task {
            Task::Gaschuetz | Task::Rep | Task::Orbit | Task::Chartab if !has_group => Err(
                CliError::Input(format!("`{}` needs --group or --corpus", self.task)),
            ),
            Task::Tc | Task::Abelianize if !has_group && self.presentation.is_none() => Err(
                CliError::Input(format!("`{}` needs a group or a presentation", self.task)),
            ),
            Task::CyclicSigma if self.m.is_none() => {
                Err(CliError::Input("`cyclic-sigma` needs --m".into()))
            }
            _ => Ok(()),
        }
    }

    /// SHA-256 over the serialized config and the contents of every input
    /// file, hex encoded.
    pub fn hash(&self) -> CliResult<String> {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(self).expect("config serializes"));
        for p in [&self.group, &self.presentation, &self.idempotents]
            .into_iter()
            .flatten()
        {
            h.update(read(p)?.as_bytes());
        }
        Ok(hex::encode(h.finalize()))
    }
}

pub(crate) fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
