//! Density matrices on disk: `{"dimA", "dimB", "re", "im"}`, row-major,
//! with A as the slow index.

use std::fs;
use std::path::Path;

use sepcheck::{BipartiteState, ComplexMatrix, C64};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(rename = "dimA")]
    pub dim_a: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl StateFile {
    pub fn from_state(s: &BipartiteState) -> Self {
        let m = s.matrix();
        let n = m.rows();
        Self {
            dim_a: s.dim_a(),
            dim_b: s.dim_b(),
            re: (0..n).map(|i| (0..n).map(|j| m[(i, j)].re).collect()).collect(),
            im: (0..n).map(|i| (0..n).map(|j| m[(i, j)].im).collect()).collect(),
        }
    }

    /// Checks the shape, then every state invariant at `tol`.
    pub fn into_state(self, tol: f64) -> Result<BipartiteState, CliError> {
        let n = self.dim_a * self.dim_b;
        let shape_err = |what: String| CliError::InvalidState(format!("shape mismatch: {what}"));
        if self.dim_a == 0 || self.dim_b == 0 {
            return Err(shape_err(format!("dimA = {}, dimB = {}", self.dim_a, self.dim_b)));
        }
        for (part, rows) in [("re", &self.re), ("im", &self.im)] {
            if rows.len() != n {
                return Err(shape_err(format!("'{part}' has {} rows, dimA*dimB = {n}", rows.len())));
            }
            if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
                return Err(shape_err(format!(
                    "'{part}' row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        let data = self
            .re
            .iter()
            .flatten()
            .zip(self.im.iter().flatten())
            .map(|(&re, &im)| C64::new(re, im))
            .collect();
        let m = ComplexMatrix::from_vec(n, n, data).map_err(|e| CliError::InvalidState(e.to_string()))?;
        BipartiteState::with_tol(m, self.dim_a, self.dim_b, tol).map_err(|e| CliError::InvalidState(e.to_string()))
    }
}

pub fn read_state(path: &Path, tol: f64) -> Result<BipartiteState, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: StateFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed state file {}: {e}", path.display())))?;
    file.into_state(tol)
}

pub fn to_json(s: &BipartiteState) -> String {
    let mut text = serde_json::to_string_pretty(&StateFile::from_state(s)).expect("state serializes");
    text.push('\n');
    text
}
