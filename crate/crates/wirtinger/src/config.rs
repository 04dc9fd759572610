//! Run configuration: defaults, `key = value` files and flag overrides.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use wirtinger_core::lorentz::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Lorentz,
    Internal,
    ExampleU2,
    Transforms,
    Interactions,
    Gauge,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Lorentz,
        SuiteName::Internal,
        SuiteName::ExampleU2,
        SuiteName::Transforms,
        SuiteName::Interactions,
        SuiteName::Gauge,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Lorentz => "lorentz",
            SuiteName::Internal => "internal",
            SuiteName::ExampleU2 => "example_u2",
            SuiteName::Transforms => "transforms",
            SuiteName::Interactions => "interactions",
            SuiteName::Gauge => "gauge",
        }
    }

    /// Suites built on SU(n) generators.
    pub fn needs_sun(self) -> bool {
        matches!(self, SuiteName::Internal | SuiteName::Interactions | SuiteName::Gauge)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let key = s.trim().replace('-', "_");
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == key)
            .ok_or_else(|| ConfigError::UnknownSuite(s.trim().to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.trim() {
            "text" => Ok(OutputFormat::Text),
            "json" | "structured" => Ok(OutputFormat::Json),
            other => Err(ConfigError::BadValue { key: "format".into(), value: other.into() }),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown config key `{0}` on line {1}")]
    UnknownKey(String, usize),
    #[error("line {0} is not `key = value`")]
    Malformed(usize),
    #[error("invalid value `{value}` for `{key}`")]
    BadValue { key: String, value: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
}

/// Values that may be given on the command line or in a file; `None` means
/// unset.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub suites: Option<Vec<SuiteName>>,
    pub n: Option<u16>,
    pub sets: Option<u16>,
    pub lattice: Option<u16>,
    pub variant: Option<Variant>,
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
    pub format: Option<OutputFormat>,
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.trim().parse().map_err(|_| ConfigError::BadValue { key: key.into(), value: value.trim().into() })
}

pub fn parse_suites(value: &str) -> Result<Vec<SuiteName>, ConfigError> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}

impl Overrides {
    /// Parse `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut out = Overrides::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Malformed(idx + 1))?;
            let key = key.trim();
            match key {
                "suite" | "suites" => out.suites = Some(parse_suites(value)?),
                "n" => out.n = Some(parse_value(key, value)?),
                "sets" => out.sets = Some(parse_value(key, value)?),
                "lattice" => out.lattice = Some(parse_value(key, value)?),
                "variant" => out.variant = Some(parse_value(key, value)?),
                "seed" => out.seed = Some(parse_value(key, value)?),
                "tolerance" => out.tolerance = Some(parse_value(key, value)?),
                "format" => out.format = Some(value.parse()?),
                other => return Err(ConfigError::UnknownKey(other.into(), idx + 1)),
            }
        }
        Ok(out)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// `self` wins over `base` wherever both are set.
    pub fn over(self, base: Overrides) -> Overrides {
        Overrides {
            suites: self.suites.or(base.suites),
            n: self.n.or(base.n),
            sets: self.sets.or(base.sets),
            lattice: self.lattice.or(base.lattice),
            variant: self.variant.or(base.variant),
            seed: self.seed.or(base.seed),
            tolerance: self.tolerance.or(base.tolerance),
            format: self.format.or(base.format),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n: u16,
    /// Number of oscillator sets `N`.
    pub sets: u16,
    /// Lattice size `L` for the gauge suite.
    pub lattice: u16,
    #[serde(with = "variant_serde")]
    pub variant: Variant,
    pub seed: u64,
    pub tolerance: f64,
    pub suites: Vec<SuiteName>,
}

mod variant_serde {
    use serde::{Deserialize, Deserializer, Serializer};
    use wirtinger_core::lorentz::Variant;

    pub fn serialize<S: Serializer>(v: &Variant, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(v.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Variant, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("unknown variant `{s}`")))
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n: 2,
            sets: 2,
            lattice: 4,
            variant: Variant::Corrected,
            seed: 0,
            tolerance: 1e-10,
            suites: SuiteName::ALL.to_vec(),
        }
    }
}

impl SuiteConfig {
    pub fn from_overrides(o: &Overrides) -> Result<Self, ConfigError> {
        let d = SuiteConfig::default();
        let mut suites = o.suites.clone().unwrap_or(d.suites);
        suites.sort();
        suites.dedup();
        let cfg = SuiteConfig {
            n: o.n.unwrap_or(d.n),
            sets: o.sets.unwrap_or(d.sets),
            lattice: o.lattice.unwrap_or(d.lattice),
            variant: o.variant.unwrap_or(d.variant),
            seed: o.seed.unwrap_or(d.seed),
            tolerance: o.tolerance.unwrap_or(d.tolerance),
            suites,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n == 0 {
            return Err(ConfigError::Invalid("n must be at least 1".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(ConfigError::Invalid("tolerance must be positive".into()));
        }
        if let Some(s) = self.suites.iter().find(|s| s.needs_sun()) {
            if self.n < 2 {
                return Err(ConfigError::Invalid(format!("suite {s} needs n >= 2")));
            }
        }
        if self.suites.contains(&SuiteName::Interactions) && self.sets < 2 {
            return Err(ConfigError::Invalid("suite interactions needs sets >= 2".into()));
        }
        if self.suites.contains(&SuiteName::Gauge) {
            if self.lattice < 2 {
                return Err(ConfigError::Invalid("suite gauge needs lattice >= 2".into()));
            }
            if 2 * self.n as usize * self.lattice as usize > 64 {
                return Err(ConfigError::Invalid("gauge suite supports at most 64 fermion modes".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = SuiteConfig::from_overrides(&Overrides::default()).unwrap();
        assert_eq!(c, SuiteConfig::default());
        assert_eq!((c.n, c.sets, c.lattice, c.seed), (2, 2, 4, 0));
    }

    #[test]
    fn flags_win_over_file() {
        let file = Overrides::parse("n = 3\nseed=9 # comment\nsuite = lorentz, gauge\n").unwrap();
        let flags = Overrides { n: Some(2), ..Default::default() };
        let c = SuiteConfig::from_overrides(&flags.over(file)).unwrap();
        assert_eq!(c.n, 2);
        assert_eq!(c.seed, 9);
        assert_eq!(c.suites, [SuiteName::Lorentz, SuiteName::Gauge]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Overrides::parse("colour = red"), Err(ConfigError::UnknownKey(..))));
        assert!(matches!(Overrides::parse("n 3"), Err(ConfigError::Malformed(1))));
        assert!(matches!(Overrides::parse("suite = nope"), Err(ConfigError::UnknownSuite(_))));
        let one = Overrides { n: Some(1), suites: Some(vec![SuiteName::Internal]), ..Default::default() };
        assert!(SuiteConfig::from_overrides(&one).is_err());
        let lorentz = Overrides { n: Some(1), suites: Some(vec![SuiteName::Lorentz]), ..Default::default() };
        assert!(SuiteConfig::from_overrides(&lorentz).is_ok());
    }
}
