use crate::lie::CartanType;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("config field `{field}`: {message}")]
    Invalid { field: String, message: String },
}

/// Bounds for the randomized and degree-bounded checks.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct Bounds {
    pub assoc_triples: usize,
    pub assoc_degree: u32,
    pub hopf_samples: usize,
    pub poisson_triples: usize,
    pub whittaker_degree: u32,
    pub invariant_degree: u32,
    pub orbit_bound: usize,
    pub slice_samples: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            assoc_triples: 20,
            assoc_degree: 6,
            hopf_samples: 10,
            poisson_triples: 20,
            whittaker_degree: 2,
            invariant_degree: 2,
            orbit_bound: 8,
            slice_samples: 100,
        }
    }
}

/// Session configuration. Weyl words are 1-based, as printed in reports.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    #[serde(default)]
    pub s: Vec<usize>,
    #[serde(default)]
    pub w0: Option<Vec<usize>>,
    /// Character values `k_i` as integers; defaults to all ones.
    #[serde(default)]
    pub k: Option<Vec<i64>>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Rational points at which invariants are specialized, e.g. `"2"` or `"1/3"`.
    #[serde(default)]
    pub specialize: Vec<String>,
    #[serde(default)]
    pub bounds: Bounds,
}

fn default_seed() -> u64 {
    1
}

fn invalid(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Invalid { field: field.into(), message: message.into() }
}

impl SessionConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg: SessionConfig = toml::from_str(text).map_err(|e| {
            let (line, column) = match e.span() {
                Some(span) => line_col(text, span.start),
                None => (0, 0),
            };
            ConfigError::Parse { line, column, message: e.message().to_string() }
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn minimal(cartan_type: &str, rank: usize, s: Vec<usize>) -> Self {
        SessionConfig {
            cartan_type: cartan_type.into(),
            rank,
            s,
            w0: None,
            k: None,
            seed: default_seed(),
            specialize: Vec::new(),
            bounds: Bounds::default(),
        }
    }

    pub fn ty(&self) -> Result<CartanType, ConfigError> {
        let mut chars = self.cartan_type.chars();
        match (chars.next().and_then(CartanType::from_letter), chars.next()) {
            (Some(t), None) => Ok(t),
            _ => Err(invalid("type", format!("unknown Cartan type {:?}", self.cartan_type))),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.ty()?;
        if self.rank == 0 {
            return Err(invalid("rank", "must be positive"));
        }
        for (field, word) in [("s", Some(&self.s)), ("w0", self.w0.as_ref())] {
            if let Some(w) = word {
                if let Some(bad) = w.iter().find(|&&i| i == 0 || i > self.rank) {
                    return Err(invalid(field, format!("letter {} outside 1..={}", bad, self.rank)));
                }
            }
        }
        for p in &self.specialize {
            parse_rational(p).ok_or_else(|| invalid("specialize", format!("not a rational number: {:?}", p)))?;
        }
        Ok(())
    }

    /// 0-based Weyl word of `s`.
    pub fn s_word(&self) -> Vec<usize> {
        self.s.iter().map(|i| i - 1).collect()
    }

    pub fn w0_word(&self) -> Option<Vec<usize>> {
        self.w0.as_ref().map(|w| w.iter().map(|i| i - 1).collect())
    }
}

pub fn parse_rational(s: &str) -> Option<num_rational::BigRational> {
    s.trim().parse().ok()
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_echoes_defaults() {
        let c = SessionConfig::parse("type = \"A\"\nrank = 2\ns = [1, 2]\n").unwrap();
        assert_eq!(c.s_word(), vec![0, 1]);
        assert_eq!(c.bounds, Bounds::default());
    }

    #[test]
    fn positional_diagnostics() {
        match SessionConfig::parse("type = \"A\"\nrank = two\n") {
            Err(ConfigError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{:?}", other),
        }
        assert!(matches!(SessionConfig::parse("type = \"Q\"\nrank = 2\n"), Err(ConfigError::Invalid { .. })));
        assert!(matches!(SessionConfig::parse("type = \"A\"\nrank = 2\ns = [3]\n"), Err(ConfigError::Invalid { .. })));
    }
}
