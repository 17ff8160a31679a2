//! Scenario configuration: a JSON file merged with command-line flags.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::parse::{parse_element, parse_sigma};
use crate::coeff::FieldDescriptor;
use crate::deform::{DeformedWittAlgebra, FamilyDescriptor, DEFAULT_GCD_WINDOW, RELATION_BOUND};
use crate::error::{Error, Result};
use crate::ring::RingDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Windows {
    pub gcd_window: i64,
    pub multiplier_window: i64,
    pub dependence_bound: i64,
    /// Random samples per residual suite.
    pub jacobi_samples: usize,
    /// Exponent bound for random sample elements.
    pub sample_degree: i64,
    /// Term bound for random sample elements.
    pub sample_terms: usize,
    pub hom_jacobi_window: i64,
}

impl Default for Windows {
    fn default() -> Self {
        Windows {
            gcd_window: DEFAULT_GCD_WINDOW,
            multiplier_window: 10,
            dependence_bound: RELATION_BOUND,
            jacobi_samples: 20,
            sample_degree: 4,
            sample_terms: 3,
            hom_jacobi_window: 3,
        }
    }
}

impl Windows {
    fn validate(&self) -> Result<()> {
        let positive = [
            ("gcd_window", self.gcd_window),
            ("multiplier_window", self.multiplier_window),
            ("dependence_bound", self.dependence_bound),
            ("sample_degree", self.sample_degree),
            ("hom_jacobi_window", self.hom_jacobi_window),
        ];
        for (name, v) in positive {
            if v < 1 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        if self.jacobi_samples == 0 || self.sample_terms == 0 {
            return Err(Error::Config(
                "jacobi_samples and sample_terms must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// An algebra given by its ring and σ rather than by a preset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomAlgebra {
    /// Indeterminate field parameters; excludes `cyclotomic`.
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default)]
    pub cyclotomic: Option<u64>,
    pub variables: Vec<String>,
    /// Variables without inverses; all others are Laurent.
    #[serde(default)]
    pub polynomial: Vec<String>,
    /// Entries `variable -> coefficient * monomial`.
    pub sigma: Vec<String>,
    /// An associate of the computed gcd to use as `g`.
    #[serde(default)]
    pub g: Option<String>,
}

impl CustomAlgebra {
    pub fn field(&self) -> Result<FieldDescriptor> {
        match (self.cyclotomic, self.parameters.is_empty()) {
            (Some(_), false) => Err(Error::Config(
                "a custom algebra takes either parameters or a cyclotomic field".into(),
            )),
            (Some(n), true) => FieldDescriptor::cyclotomic(n),
            (None, false) => FieldDescriptor::rational_functions(self.parameters.clone()),
            (None, true) => Ok(FieldDescriptor::Rationals),
        }
    }

    pub fn build(&self, window: i64) -> Result<DeformedWittAlgebra> {
        for v in &self.polynomial {
            if !self.variables.contains(v) {
                return Err(Error::Config(format!(
                    "polynomial variable `{v}` is not declared"
                )));
            }
        }
        let vars: Vec<(String, bool)> = self
            .variables
            .iter()
            .map(|v| (v.clone(), !self.polynomial.contains(v)))
            .collect();
        let ring = RingDescriptor::new(self.field()?, vars)?;
        let sigma = parse_sigma(&self.sigma, &ring)?;
        let g = self
            .g
            .as_deref()
            .map(|text| parse_element(text, &ring).map_err(|e| e.context("custom g")))
            .transpose()?;
        DeformedWittAlgebra::new(sigma, g, window).map_err(|e| e.context("custom algebra"))
    }

    pub fn describe(&self) -> String {
        format!("custom{{{}}}", self.sigma.join(", "))
    }
}

/// Where a scenario's algebra comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Preset(FamilyDescriptor),
    Custom(CustomAlgebra),
}

impl AlgebraSource {
    pub fn build(&self, window: i64) -> Result<DeformedWittAlgebra> {
        match self {
            AlgebraSource::Preset(f) => f.build(window),
            AlgebraSource::Custom(c) => c.build(window),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AlgebraSource::Preset(f) => f.describe(),
            AlgebraSource::Custom(c) => c.describe(),
        }
    }

    pub fn family(&self) -> Option<&FamilyDescriptor> {
        match self {
            AlgebraSource::Preset(f) => Some(f),
            AlgebraSource::Custom(_) => None,
        }
    }
}

/// The on-disk form accepted by `--config`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub family: Option<String>,
    /// Parameter values as strings, e.g. `{"q": "zeta(5)", "k": "2"}`.
    pub params: std::collections::BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub windows: Option<Windows>,
    pub output: Option<OutputFormat>,
    /// A unit `u`; the algebra then uses `u·g` in place of `g`.
    pub g_unit_factor: Option<String>,
    /// Used instead of `family`.
    pub custom: Option<CustomAlgebra>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// A validated scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub algebra: AlgebraSource,
    pub seed: u64,
    pub windows: Windows,
    pub output: OutputFormat,
    pub g_unit_factor: Option<String>,
}

/// Values given on the command line; each overrides the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub family: Option<String>,
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub json: bool,
}

impl ScenarioConfig {
    pub fn resolve(file: Option<ConfigFile>, flags: Overrides) -> Result<Self> {
        let file = file.unwrap_or_default();
        let mut params: Vec<(String, String)> = file.params.into_iter().collect();
        params.extend(flags.params);
        let algebra =
            match (flags.family.or(file.family), file.custom) {
                (Some(name), _) => {
                    AlgebraSource::Preset(FamilyDescriptor::from_params(&name, &params)?)
                }
                (None, Some(custom)) if params.is_empty() => AlgebraSource::Custom(custom),
                (None, Some(_)) => {
                    return Err(Error::Config(
                        "parameters apply only to preset families".into(),
                    ))
                }
                (None, None) => return Err(Error::Config(
                    "no algebra given (use --family, or `family` or `custom` in the config file)"
                        .into(),
                )),
            };
        let windows = file.windows.unwrap_or_default();
        windows.validate()?;
        let output = if flags.json {
            OutputFormat::Json
        } else {
            file.output.unwrap_or_default()
        };
        Ok(ScenarioConfig {
            algebra,
            seed: flags.seed.or(file.seed).unwrap_or(0),
            windows,
            output,
            g_unit_factor: file.g_unit_factor,
        })
    }

    /// Convenience constructor with default windows.
    pub fn for_family(name: &str, params: &[(&str, &str)]) -> Result<Self> {
        let params = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Self::resolve(
            None,
            Overrides {
                family: Some(name.to_string()),
                params,
                ..Overrides::default()
            },
        )
    }
}

/// Splits `k=v`.
pub fn parse_param(s: &str) -> Result<(String, String)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("parameter `{s}` is not of the form key=value")))?;
    let k = k.trim();
    if k.is_empty() {
        return Err(Error::Config(format!("parameter `{s}` has an empty key")));
    }
    Ok((k.to_string(), v.trim().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: ConfigFile = serde_json::from_str(
            r#"{"family": "qwitt_poly", "params": {"q": "2"}, "seed": 5, "output": "json"}"#,
        )
        .unwrap();
        let cfg = ScenarioConfig::resolve(
            Some(file),
            Overrides {
                params: vec![("q".into(), "zeta(3)".into())],
                seed: Some(9),
                ..Overrides::default()
            },
        )
        .unwrap();
        assert_eq!(cfg.algebra.describe(), "qwitt_poly{q=zeta(3)}");
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.output, OutputFormat::Json);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(serde_json::from_str::<ConfigFile>(r#"{"famly": "x"}"#).is_err());
        assert!(ScenarioConfig::for_family("power_twist", &[("s", "2")]).is_err());
        assert!(ScenarioConfig::for_family("nope", &[]).is_err());
        assert!(ScenarioConfig::for_family("qwitt_poly", &[("k", "2")]).is_err());
        assert!(parse_param("q").is_err());
        let file: ConfigFile =
            serde_json::from_str(r#"{"family": "qwitt_poly", "windows": {"gcd_window": 0}}"#)
                .unwrap();
        assert!(ScenarioConfig::resolve(Some(file), Overrides::default()).is_err());
    }

    #[test]
    fn custom_algebra() {
        let file: ConfigFile = serde_json::from_str(
            r#"{"custom": {"parameters": ["p"], "variables": ["u"], "polynomial": ["u"],
                "sigma": ["u -> p*u"], "g": "(1 - p)*u"}}"#,
        )
        .unwrap();
        let cfg = ScenarioConfig::resolve(Some(file), Overrides::default()).unwrap();
        assert_eq!(cfg.algebra.describe(), "custom{u -> p*u}");
        let w = cfg.algebra.build(6).unwrap();
        assert_eq!(crate::ring::format_element(w.delta()), "p");
        let bad: ConfigFile = serde_json::from_str(
            r#"{"custom": {"variables": ["u"], "polynomial": ["u"], "sigma": ["u -> 2*u"], "g": "u^2"}}"#,
        )
        .unwrap();
        let cfg = ScenarioConfig::resolve(Some(bad), Overrides::default()).unwrap();
        assert!(matches!(
            cfg.algebra.build(6).unwrap_err().root(),
            Error::InvalidOverride(_)
        ));
    }
}
