//! JSON file formats shared by the CLI and the Python bindings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{LinearNetwork, RangeAssignment};
use crate::protocol::ProtocolTrace;

/// `{"positions": [...], "source": i}`, optionally tagged with the
/// generator seed and trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkFile {
    pub positions: Vec<f64>,
    pub source: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
}

impl NetworkFile {
    pub fn from_network(net: &LinearNetwork, seed: Option<u64>, trial: Option<u64>) -> Self {
        NetworkFile {
            positions: net.positions().to_vec(),
            source: net.source(),
            seed,
            trial,
        }
    }

    pub fn into_network(self) -> Result<LinearNetwork> {
        LinearNetwork::new(self.positions, self.source)
    }
}

/// `{"ranges": [...], "cost": c, "algorithm": name, "bm": i | null}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssignmentFile {
    pub ranges: Vec<f64>,
    pub cost: f64,
    pub algorithm: String,
    pub bm: Option<usize>,
}

impl AssignmentFile {
    pub fn new(ranges: &RangeAssignment, cost: f64, algorithm: &str, bm: Option<usize>) -> Self {
        AssignmentFile {
            ranges: ranges.ranges().to_vec(),
            cost,
            algorithm: algorithm.into(),
            bm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub node: usize,
    pub range: f64,
}

/// `{"rounds": [[{"node": i, "range": r}, ...], ...], "assignment": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceFile {
    pub rounds: Vec<Vec<TraceEntry>>,
    pub assignment: Vec<f64>,
}

impl From<&ProtocolTrace> for TraceFile {
    fn from(t: &ProtocolTrace) -> Self {
        TraceFile {
            rounds: t
                .rounds
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| TraceEntry {
                            node: x.node,
                            range: x.range,
                        })
                        .collect()
                })
                .collect(),
            assignment: t.assignment.ranges().to_vec(),
        }
    }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_network(text: &str, context: &str) -> Result<LinearNetwork> {
    let file: NetworkFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        context: context.into(),
        message: e.to_string(),
    })?;
    file.into_network()
}

pub fn read_network(path: &Path) -> Result<LinearNetwork> {
    parse_network(&read_to_string(path)?, &path.display().to_string())
}
