use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{EdgeList, InputFormat};
use crate::solvers::{Algorithm, SolverConfig};
use crate::synth::WebGraphParams;

/// Which matrix a block solves: `P` as read, or its transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "P")]
    Forward,
    #[serde(rename = "Pt")]
    Transposed,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::Forward => "P",
            Orientation::Transposed => "Pt",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Orientation::Forward),
            "Pt" | "pt" | "PT" | "transposed" => Ok(Orientation::Transposed),
            other => Err(format!("unknown orientation {other:?} (expected P or Pt)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DatasetSource {
    /// Text or binary edge list on disk.
    File {
        path: PathBuf,
        #[serde(default)]
        format: Option<InputFormat>,
    },
    /// Generated with [`crate::synth::web_like`].
    Synthetic(WebGraphParams),
    /// Already in memory.
    #[serde(skip)]
    Inline(EdgeList),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub name: String,
    pub source: DatasetSource,
}

impl DatasetSpec {
    pub fn file(name: impl Into<String>, path: impl Into<PathBuf>) -> Self {
        DatasetSpec {
            name: name.into(),
            source: DatasetSource::File {
                path: path.into(),
                format: None,
            },
        }
    }

    pub fn inline(name: impl Into<String>, edges: EdgeList) -> Self {
        DatasetSpec {
            name: name.into(),
            source: DatasetSource::Inline(edges),
        }
    }
}

fn default_orientations() -> Vec<Orientation> {
    vec![Orientation::Forward]
}

fn default_algorithms() -> Vec<Algorithm> {
    Algorithm::ALL.to_vec()
}

fn default_repetitions() -> usize {
    3
}

/// A datasets × prefixes × orientations × algorithms run matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkPlan {
    pub datasets: Vec<DatasetSpec>,
    /// Node limits to truncate each dataset to; `None` solves the whole
    /// graph once.
    #[serde(default)]
    pub n_prefixes: Option<Vec<usize>>,
    #[serde(default = "default_orientations")]
    pub orientations: Vec<Orientation>,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<Algorithm>,
    /// Template; an unset target error becomes `1/N` for each prefix.
    #[serde(default)]
    pub config: SolverConfig,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
    /// Keep normalized score vectors in the report.
    #[serde(default)]
    pub keep_scores: bool,
}

impl BenchmarkPlan {
    pub fn new(datasets: Vec<DatasetSpec>) -> Self {
        BenchmarkPlan {
            datasets,
            n_prefixes: None,
            orientations: default_orientations(),
            algorithms: default_algorithms(),
            config: SolverConfig::default(),
            repetitions: default_repetitions(),
            keep_scores: false,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: &str| Err(Error::Plan(msg.to_string()));
        if self.datasets.is_empty() {
            return fail("no datasets");
        }
        if self.algorithms.is_empty() {
            return fail("no algorithms");
        }
        if self.orientations.is_empty() {
            return fail("no orientations");
        }
        if self.repetitions == 0 {
            return fail("repetitions must be at least 1");
        }
        if let Some(prefixes) = &self.n_prefixes {
            if prefixes.is_empty() {
                return fail("n_prefixes must not be empty");
            }
            if prefixes.windows(2).any(|w| w[0] >= w[1]) {
                return fail("n_prefixes must be strictly increasing");
            }
            if prefixes[0] == 0 {
                return fail("n_prefixes must be positive");
            }
        }
        self.config.validate()?;
        Ok(())
    }
}
