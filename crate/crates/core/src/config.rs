//! Resource caps and coefficient-field selection.

use std::fmt;

use crate::error::{Error, Result};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldChoice {
    Rational,
    F2,
    F3,
    F32003,
    /// `2^31 - 1`.
    #[default]
    Mersenne31,
}

impl FieldChoice {
    /// Map a characteristic to a supported field; `0` selects the rationals.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        match p {
            0 => Ok(FieldChoice::Rational),
            2 => Ok(FieldChoice::F2),
            3 => Ok(FieldChoice::F3),
            32003 => Ok(FieldChoice::F32003),
            2147483647 => Ok(FieldChoice::Mersenne31),
            other => Err(Error::Invalid(format!(
                "unsupported coefficient characteristic {other} (use 0, 2, 3, 32003 or 2147483647)"
            ))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldChoice::Rational => 0,
            FieldChoice::F2 => 2,
            FieldChoice::F3 => 3,
            FieldChoice::F32003 => 32003,
            FieldChoice::Mersenne31 => 2147483647,
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "QQ"),
            other => write!(f, "GF({})", other.characteristic()),
        }
    }
}

/// Caps keeping every computation at desk scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest ambient ring swept over all `2^n` monomial primes.
    pub max_ass_vars: usize,
    /// Largest generator count accepted by exact depth.
    pub max_generators: usize,
    /// Largest lcm lattice accepted by exact depth.
    pub max_lattice: usize,
    /// Largest number of irreducible components explored by decomposition.
    pub max_components: usize,
    pub field: FieldChoice,
    /// Optional second field; disagreement is flagged, not fatal.
    pub check_field: Option<FieldChoice>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_ass_vars: 14,
            max_generators: 512,
            max_lattice: 20_000,
            max_components: 100_000,
            field: FieldChoice::default(),
            check_field: None,
        }
    }
}

impl EngineConfig {
    /// Apply `key=value` overrides such as `ass-vars=12,lattice=5000`.
    pub fn with_caps(mut self, caps: &str) -> Result<Self> {
        for item in caps.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("cap `{item}` has a non-integer value")))?;
            match key.trim() {
                "ass-vars" => self.max_ass_vars = value,
                "generators" => self.max_generators = value,
                "lattice" => self.max_lattice = value,
                "components" => self.max_components = value,
                other => return Err(Error::Invalid(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_override() {
        let c = EngineConfig::default()
            .with_caps("ass-vars=10, lattice=99")
            .unwrap();
        assert_eq!((c.max_ass_vars, c.max_lattice), (10, 99));
        assert!(EngineConfig::default().with_caps("nope=1").is_err());
        assert!(EngineConfig::default().with_caps("lattice").is_err());
    }

    #[test]
    fn field_lookup() {
        assert_eq!(
            FieldChoice::from_characteristic(0).unwrap(),
            FieldChoice::Rational
        );
        assert_eq!(FieldChoice::default().characteristic(), 2147483647);
        assert!(FieldChoice::from_characteristic(5).is_err());
    }
}
