//! JSON input parsing and schema validation.
//!
//! Offsets are strings encoding exact integers or fractions ("2", "-1",
//! "3/2"); floating-point values are rejected everywhere to preserve the
//! exactness contract.

use crate::CliError;
use lawrence_core::{Config, Guards};
use num::BigRational;
use serde::Deserialize;
use std::str::FromStr;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuardSpec {
    pub max_subsets: Option<usize>,
    pub max_signvectors: Option<usize>,
    pub max_dilate_fibers: Option<u64>,
}

/// The raw JSON document.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default)]
    pub offsets: Option<Vec<String>>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub guards: Option<GuardSpec>,
}

/// A validated input: configuration, optional exact offsets, seed, guards.
#[derive(Clone, Debug)]
pub struct ValidatedInput {
    pub config: Config,
    pub offsets: Option<Vec<BigRational>>,
    pub seed: u64,
    pub guards: Guards,
}

pub fn parse_input(text: &str) -> Result<ValidatedInput, CliError> {
    let spec: InputSpec = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("malformed input JSON: {e}")))?;
    validate_spec(&spec)
}

pub fn validate_spec(spec: &InputSpec) -> Result<ValidatedInput, CliError> {
    let config = Config::validate_i64(spec.rank, &spec.vectors)
        .map_err(|e| CliError::Input(format!("invalid configuration: {e}")))?;
    let offsets = match &spec.offsets {
        None => None,
        Some(raw) => {
            if raw.len() != spec.vectors.len() {
                return Err(CliError::Input(format!(
                    "field 'offsets': expected {} entries, got {}",
                    spec.vectors.len(),
                    raw.len()
                )));
            }
            let parsed: Result<Vec<BigRational>, CliError> = raw
                .iter()
                .enumerate()
                .map(|(i, s)| parse_rational(s).map_err(|msg| {
                    CliError::Input(format!("field 'offsets[{i}]': {msg}"))
                }))
                .collect();
            Some(parsed?)
        }
    };
    let mut guards = Guards::default();
    if let Some(g) = &spec.guards {
        if let Some(v) = g.max_subsets {
            guards.max_subsets = v;
        }
        if let Some(v) = g.max_signvectors {
            guards.max_signvectors = v;
        }
        if let Some(v) = g.max_dilate_fibers {
            guards.max_dilate_fibers = v;
        }
    }
    Ok(ValidatedInput {
        config,
        offsets,
        seed: spec.seed.unwrap_or(0),
        guards,
    })
}

/// Exact rational from a decimal-free string: "-3", "7", "3/2".
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let trimmed = s.trim();
    if trimmed.contains(['.', 'e', 'E']) {
        return Err(format!(
            "'{trimmed}' looks like a floating-point value; use an exact integer or fraction"
        ));
    }
    BigRational::from_str(trimmed)
        .map_err(|e| format!("'{trimmed}' is not an exact rational: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn parses_example_input() {
        let text = r#"{"rank":2,"vectors":[[1,0],[0,1],[-2,0],[2,-1]],"offsets":["0","0","2","-1"]}"#;
        let input = parse_input(text).unwrap();
        assert_eq!(input.config.rank(), 2);
        assert_eq!(input.config.len(), 4);
        assert_eq!(input.seed, 0);
        let offsets = input.offsets.unwrap();
        assert_eq!(offsets[2], BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn rejects_zero_vector() {
        let text = r#"{"rank":1,"vectors":[[0]]}"#;
        let err = parse_input(text).unwrap_err();
        assert!(matches!(err, CliError::Input(msg) if msg.contains("b_1 is zero")));
    }

    #[test]
    fn rejects_missing_vectors() {
        let text = r#"{"rank":1}"#;
        let err = parse_input(text).unwrap_err();
        assert!(matches!(err, CliError::Input(msg) if msg.contains("vectors")));
    }

    #[test]
    fn rejects_float_offset() {
        let text = r#"{"rank":1,"vectors":[[1]],"offsets":["0.5"]}"#;
        let err = parse_input(text).unwrap_err();
        assert!(matches!(err, CliError::Input(msg) if msg.contains("floating-point")));
    }

    #[test]
    fn accepts_fraction_offset() {
        let text = r#"{"rank":1,"vectors":[[1]],"offsets":["3/2"]}"#;
        let input = parse_input(text).unwrap();
        let offsets = input.offsets.unwrap();
        assert_eq!(
            offsets[0],
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
    }

    #[test]
    fn guard_overrides() {
        let text = r#"{"rank":1,"vectors":[[1]],"guards":{"max_subsets":4,"max_signvectors":null,"max_dilate_fibers":100}}"#;
        let input = parse_input(text).unwrap();
        assert_eq!(input.guards.max_subsets, 4);
        assert_eq!(input.guards.max_signvectors, Guards::default().max_signvectors);
        assert_eq!(input.guards.max_dilate_fibers, 100);
    }
}
