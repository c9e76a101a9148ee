//! The JSON instance document:
//!
//! ```json
//! { "name": "example", "A": [[0.8, 0.1], [0.3, 0.9]], "b": [0.7, 0.5], "epsilon": 0 }
//! ```
//!
//! `name` and `epsilon` are optional.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use lukfri::Instance;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub epsilon: f64,
}

fn is_zero(v: &f64) -> bool {
    *v == 0.0
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance, name: Option<String>) -> Self {
        InstanceFile {
            name,
            a: inst.matrix_rows(),
            b: inst.rhs().to_vec(),
            epsilon: inst.epsilon(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed instance document")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_instance(&self) -> Result<Instance, lukfri::Error> {
        Instance::new(self.a.clone(), self.b.clone())?.with_epsilon(self.epsilon)
    }

    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(self).expect("instance documents always serialize");
        s.push('\n');
        s
    }
}

/// Read and validate an instance file in one step.
pub fn load(path: &Path) -> Result<(InstanceFile, Instance)> {
    let file = InstanceFile::read(path)?;
    let inst = file
        .to_instance()
        .with_context(|| format!("invalid instance in {}", path.display()))?;
    Ok((file, inst))
}
