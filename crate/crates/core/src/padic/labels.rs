use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, VnDimError};

/// Discrete series of `GL(2,F)` up to the data that determines the formal
/// dimension.
///
/// Twists of the Steinberg representation by characters share its formal
/// dimension and are represented by [`RepLabel::Steinberg`]. Supercuspidal
/// levels are the filtration exponent `n ≥ 1`; ramified levels must be odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepLabel {
    Steinberg,
    DepthZeroSupercuspidal,
    UnramifiedSupercuspidal { level: u32 },
    RamifiedSupercuspidal { level: u32 },
}

impl RepLabel {
    pub fn validate(self) -> Result<Self> {
        match self {
            RepLabel::UnramifiedSupercuspidal { level: 0 } | RepLabel::RamifiedSupercuspidal { level: 0 } => {
                Err(VnDimError::InvalidLabel(format!("{self}: level must be at least 1")))
            }
            RepLabel::RamifiedSupercuspidal { level } if level % 2 == 0 => Err(VnDimError::InvalidLabel(format!(
                "{self}: ramified supercuspidals only occur at odd levels"
            ))),
            _ => Ok(self),
        }
    }

    /// Filtration index `i = ⌊(n + 1)/2⌋` of `J = E^× U^i`, for leveled labels.
    pub fn filtration_index(self) -> Option<u32> {
        match self {
            RepLabel::UnramifiedSupercuspidal { level } | RepLabel::RamifiedSupercuspidal { level } => {
                Some(level.div_ceil(2))
            }
            _ => None,
        }
    }

    pub fn is_supercuspidal(self) -> bool {
        !matches!(self, RepLabel::Steinberg)
    }
}

/// `steinberg`, `sc-depth0`, `sc-unram:<level>`, `sc-ram:<level>`.
impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Steinberg => f.write_str("steinberg"),
            RepLabel::DepthZeroSupercuspidal => f.write_str("sc-depth0"),
            RepLabel::UnramifiedSupercuspidal { level } => write!(f, "sc-unram:{level}"),
            RepLabel::RamifiedSupercuspidal { level } => write!(f, "sc-ram:{level}"),
        }
    }
}

impl FromStr for RepLabel {
    type Err = VnDimError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            VnDimError::Parse(format!(
                "unknown label {s:?} (expected steinberg, sc-depth0, sc-unram:<level> or sc-ram:<level>)"
            ))
        };
        let level = |rest: &str| rest.parse::<u32>().map_err(|_| bad());
        match s.trim() {
            "steinberg" => Ok(RepLabel::Steinberg),
            "sc-depth0" => Ok(RepLabel::DepthZeroSupercuspidal),
            other => {
                if let Some(rest) = other.strip_prefix("sc-unram:") {
                    Ok(RepLabel::UnramifiedSupercuspidal { level: level(rest)? })
                } else if let Some(rest) = other.strip_prefix("sc-ram:") {
                    Ok(RepLabel::RamifiedSupercuspidal { level: level(rest)? })
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_grammar() {
        for label in [
            RepLabel::Steinberg,
            RepLabel::DepthZeroSupercuspidal,
            RepLabel::UnramifiedSupercuspidal { level: 4 },
            RepLabel::RamifiedSupercuspidal { level: 3 },
        ] {
            assert_eq!(label.to_string().parse::<RepLabel>().unwrap(), label);
        }
        for bad in ["", "st", "sc-unram", "sc-unram:", "sc-ram:-1", "sc-ram:x", "Steinberg"] {
            assert!(bad.parse::<RepLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn validation() {
        assert!(RepLabel::RamifiedSupercuspidal { level: 2 }.validate().is_err());
        assert!(RepLabel::RamifiedSupercuspidal { level: 0 }.validate().is_err());
        assert!(RepLabel::UnramifiedSupercuspidal { level: 0 }.validate().is_err());
        assert!(RepLabel::UnramifiedSupercuspidal { level: 2 }.validate().is_ok());
        assert!(RepLabel::RamifiedSupercuspidal { level: 5 }.validate().is_ok());
    }

    #[test]
    fn filtration_index_is_half_level_rounded_up() {
        let idx = |n| {
            RepLabel::UnramifiedSupercuspidal { level: n }
                .filtration_index()
                .unwrap()
        };
        assert_eq!([1, 2, 3, 4, 5, 6].map(idx), [1, 1, 2, 2, 3, 3]);
        assert_eq!(RepLabel::Steinberg.filtration_index(), None);
    }
}
