//! Real case: Fuchsian groups of the first kind in `PSL(2,ℝ)`.
//!
//! A signature `(g; m_1, …, m_l; h)` determines the covolume of the group
//! through the Gauss–Bonnet area `2π(2g − 2 + Σ(1 − 1/m_j) + h)`. The
//! holomorphic discrete series `D_k` of `SL(2,ℝ)` has formal dimension
//! `(k − 1)/(4π)`, and the product of the two is the von Neumann dimension
//! of `D_k` as a module over the group factor.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VnDimError};
use crate::exact::{int, ratio, rint, ExactScalar, Rational};

/// Signature of a Fuchsian group of the first kind.
///
/// Elliptic orders are stored sorted, so two signatures that differ only in
/// the order of their elliptic generators compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuchsianSignature {
    genus: u64,
    elliptic_orders: Vec<u64>,
    cusps: u64,
}

impl FuchsianSignature {
    pub fn new(genus: u64, elliptic_orders: impl Into<Vec<u64>>, cusps: u64) -> Self {
        let mut elliptic_orders = elliptic_orders.into();
        elliptic_orders.sort_unstable();
        FuchsianSignature {
            genus,
            elliptic_orders,
            cusps,
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn elliptic_orders(&self) -> &[u64] {
        &self.elliptic_orders
    }

    pub fn cusps(&self) -> u64 {
        self.cusps
    }

    /// `2g − 2 + Σ(1 − 1/m_j) + h`, or `None` if some order is zero.
    pub fn area_defect(&self) -> Option<Rational> {
        let mut total = rint(2 * self.genus as i64) - rint(2) + rint(self.cusps);
        for &m in &self.elliptic_orders {
            if m == 0 {
                return None;
            }
            total += Rational::one() - ratio(1, m);
        }
        Some(total)
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.elliptic_orders.iter().map(u64::to_string).collect();
        write!(f, "g={};m={};h={}", self.genus, orders.join(","), self.cusps)
    }
}

/// Parses `g=INT;m=INT,INT,...;h=INT`. The `m` list may be empty.
impl FromStr for FuchsianSignature {
    type Err = VnDimError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| VnDimError::Parse(format!("signature {s:?}: {msg}"));
        let mut genus = None;
        let mut orders = None;
        let mut cusps = None;
        for part in s.trim().split(';') {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value fields"))?;
            let (key, value) = (key.trim(), value.trim());
            let slot_taken = match key {
                "g" => genus
                    .replace(
                        value
                            .parse::<u64>()
                            .map_err(|_| bad("g must be a nonnegative integer"))?,
                    )
                    .is_some(),
                "h" => cusps
                    .replace(
                        value
                            .parse::<u64>()
                            .map_err(|_| bad("h must be a nonnegative integer"))?,
                    )
                    .is_some(),
                "m" => {
                    let list = if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|m| m.trim().parse::<u64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| bad("m must be a comma-separated list of integers"))?
                    };
                    orders.replace(list).is_some()
                }
                _ => return Err(bad("unknown key (expected g, m, h)")),
            };
            if slot_taken {
                return Err(bad("repeated key"));
            }
        }
        match (genus, orders, cusps) {
            (Some(g), Some(m), Some(h)) => Ok(FuchsianSignature::new(g, m, h)),
            _ => Err(bad("all of g, m and h are required")),
        }
    }
}

/// Why a signature fails to describe a Fuchsian group of the first kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum InadmissibleReason {
    EllipticOrderTooSmall { order: u64 },
    NonPositiveArea,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Admissibility {
    Admissible {
        #[serde(serialize_with = "crate::exact::serialize_rational")]
        defect: Rational,
    },
    /// `defect` is absent only when an elliptic order is zero.
    Inadmissible {
        reason: InadmissibleReason,
        #[serde(serialize_with = "crate::exact::serialize_optional_rational")]
        defect: Option<Rational>,
    },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible { .. })
    }
}

pub fn validate_signature(sig: &FuchsianSignature) -> Admissibility {
    let defect = sig.area_defect();
    if let Some(&order) = sig.elliptic_orders.iter().find(|&&m| m < 2) {
        return Admissibility::Inadmissible {
            reason: InadmissibleReason::EllipticOrderTooSmall { order },
            defect,
        };
    }
    // every order is >= 2 here, so the defect exists
    let defect = defect.expect("orders are nonzero");
    if defect.is_positive() {
        Admissibility::Admissible { defect }
    } else {
        Admissibility::Inadmissible {
            reason: InadmissibleReason::NonPositiveArea,
            defect: Some(defect),
        }
    }
}

fn admissible_defect(sig: &FuchsianSignature) -> Result<Rational> {
    match validate_signature(sig) {
        Admissibility::Admissible { defect } => Ok(defect),
        Admissibility::Inadmissible { reason, defect } => {
            let reason = match (reason, defect) {
                (InadmissibleReason::EllipticOrderTooSmall { order }, _) => {
                    format!("{sig}: elliptic order {order} is below 2")
                }
                (InadmissibleReason::NonPositiveArea, Some(d)) => {
                    format!("{sig}: area defect {d} is not positive")
                }
                (InadmissibleReason::NonPositiveArea, None) => format!("{sig}: area is not positive"),
            };
            Err(VnDimError::InadmissibleSignature { reason })
        }
    }
}

/// Covolume `2π · (2g − 2 + Σ(1 − 1/m_j) + h)`.
pub fn covolume_real(sig: &FuchsianSignature) -> Result<ExactScalar> {
    let defect = admissible_defect(sig)?;
    Ok(ExactScalar::from_rational(defect * rint(2), 1))
}

/// Weight `k ≥ 2` indexing the holomorphic discrete series `D_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealWeight(u64);

impl RealWeight {
    pub fn new(k: i64) -> Result<Self> {
        if k < 2 {
            return Err(VnDimError::WeightTooSmall { k });
        }
        Ok(RealWeight(k as u64))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for RealWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Formal dimension `(k − 1)/(4π)`.
pub fn formal_dimension_real(w: RealWeight) -> ExactScalar {
    ExactScalar::from_rational(ratio(int(w.0 - 1), 4), -1)
}

/// `D_k` descends to `PSL(2,ℝ)` only when `−I` acts trivially, i.e. `k` even.
pub fn factors_through_psl(w: RealWeight) -> bool {
    w.0.is_multiple_of(2)
}

/// Advisory guess for whether the second cohomology of the group vanishes.
///
/// Non-cocompact groups of the first kind are free products of cyclic
/// groups, so the answer is yes when there is at least one cusp. Cocompact
/// groups get `false`: the question is left open there.
pub fn h2_heuristic(sig: &FuchsianSignature) -> bool {
    sig.cusps >= 1
}

/// The von Neumann dimension `covol(Γ) · d_k`, as a π-free rational.
///
/// Odd weights only give a representation of `Γ ⊂ PSL(2,ℝ)` when the
/// projective cocycle can be untwisted, which the caller asserts through
/// `h2_trivial`.
pub fn vn_dimension_real(sig: &FuchsianSignature, w: RealWeight, h2_trivial: bool) -> Result<Rational> {
    let covolume = covolume_real(sig)?;
    if !factors_through_psl(w) && !h2_trivial {
        return Err(VnDimError::ParityObstruction { k: w.0 });
    }
    (&covolume * &formal_dimension_real(w)).to_rational()
}
