//! Diamonds shipped with the binary. `curve-<g>` is generated for any genus.

use std::collections::BTreeMap;

use quadflip_core::hodge::HodgeDiamond;
use thiserror::Error;

use crate::formats::{parse_diamond, DiamondFile, FormatError};

const ASSETS: [(&str, &str); 7] = [
    ("point", include_str!("../assets/point.json")),
    ("p1", include_str!("../assets/p1.json")),
    ("p2", include_str!("../assets/p2.json")),
    ("quartic-double-solid", include_str!("../assets/quartic-double-solid.json")),
    ("f1-quartic-double-solid", include_str!("../assets/f1-quartic-double-solid.json")),
    ("dp2-surface", include_str!("../assets/dp2-surface.json")),
    ("f1-dp2-surface", include_str!("../assets/f1-dp2-surface.json")),
];

#[derive(Debug, Error)]
pub enum BuiltinError {
    #[error("unknown builtin `{0}` (try `quadflip builtins`)")]
    Unknown(String),
    #[error("builtin `{name}`: {source}")]
    Invalid {
        name: String,
        #[source]
        source: FormatError,
    },
}

/// The builtin table, with optional replacements for fault injection.
#[derive(Debug, Clone, Default)]
pub struct Builtins {
    overrides: BTreeMap<String, String>,
}

impl Builtins {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replace the JSON text of a builtin.
    pub fn override_with(&mut self, name: &str, json: String) {
        self.overrides.insert(name.to_string(), json);
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = ASSETS.iter().map(|(n, _)| n.to_string()).collect();
        v.push("curve-<g>".to_string());
        v
    }

    pub fn get(&self, name: &str) -> Result<DiamondFile, BuiltinError> {
        let text = match self.overrides.get(name) {
            Some(t) => Some(t.as_str()),
            None => ASSETS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t),
        };
        if let Some(text) = text {
            return parse_diamond(text, true).map_err(|source| BuiltinError::Invalid {
                name: name.to_string(),
                source,
            });
        }
        if let Some(g) = name.strip_prefix("curve-").and_then(|g| g.parse::<u64>().ok()) {
            return Ok(DiamondFile {
                name: Some(name.to_string()),
                provenance: Some(format!("smooth projective curve of genus {g}")),
                partial: false,
                lines: None,
                expected_verdict: None,
                diamond: HodgeDiamond::curve(g),
            });
        }
        Err(BuiltinError::Unknown(name.to_string()))
    }
}
