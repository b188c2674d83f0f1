//! The JSON link file format.

use std::collections::BTreeMap;
use std::path::Path;

use canonframe::linkcalc::{characteristic_sublinks, FramedLink};
use serde::Deserialize;

use crate::error::{CliError, Result};

/// A framed link given by its linking matrix.
///
/// ```json
/// {"name": "unlink", "components": 2, "matrix": [[0, 0], [0, 0]],
///  "arf_table": {"01": 0}}
/// ```
///
/// `arf_table` keys are fixed-width 0/1 strings in component order.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDocument {
    pub name: String,
    pub components: usize,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub arf_table: BTreeMap<String, u8>,
}

impl LinkDocument {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.into(),
            source,
        })
    }

    /// Checks the document and builds the link. Arf entries for sublinks
    /// that are not characteristic are reported as warnings.
    pub fn to_link(&self) -> Result<(FramedLink, Vec<String>)> {
        if self.matrix.len() != self.components {
            return Err(CliError::Invalid(format!(
                "components is {} but the matrix has {} rows",
                self.components,
                self.matrix.len()
            )));
        }
        let link = FramedLink::new(&self.matrix)?;
        let keys: Vec<String> = characteristic_sublinks(&link)
            .iter()
            .map(|c| c.key())
            .collect();
        let mut warnings = Vec::new();
        for (key, &value) in &self.arf_table {
            if key.len() != self.components || !key.chars().all(|c| c == '0' || c == '1') {
                return Err(CliError::Invalid(format!(
                    "arf_table key {key:?} is not a 0/1 string of length {}",
                    self.components
                )));
            }
            if value > 1 {
                return Err(CliError::Invalid(format!(
                    "arf_table value for {key} must be 0 or 1, got {value}"
                )));
            }
            if !keys.contains(key) {
                warnings.push(format!(
                    "arf_table entry {key} is not a characteristic sublink and is ignored"
                ));
            }
        }
        Ok((link, warnings))
    }

    pub fn arf(&self, key: &str) -> Option<u8> {
        self.arf_table.get(key).copied()
    }
}
