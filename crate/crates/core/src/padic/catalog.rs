//! Formal dimensions of the discrete series of `GL(2,F)`.
//!
//! Supercuspidals are compactly induced from `(J, Λ)` with
//! `J = E^× U_𝒰^i`, `i = ⌊(n + 1)/2⌋`, and `d_π = dim Λ / vol(Z.J/Z)`.
//! The volume of `J/Z` comes from the index of `J` in `⟨Π⟩ ⋉ U_𝒰`, which is
//! assembled from the finite indices in [`index_chain`]. Nothing in the
//! catalog below is read off a table: every formal dimension is the quotient
//! of `dim Λ` by a volume computed from group indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{HaarNormalization, PadicField, RepLabel};
use crate::error::{Result, VnDimError};
use crate::exact::{int, rint, Rational};

/// Order of `GL(f, 𝔽_q)`: `∏_{j<f} (q^f − q^j)`.
pub(crate) fn gl_order(f: u32, q: u64) -> BigInt {
    let q = int(q);
    let qf = q.pow(f);
    (0..f).map(|j| &qf - q.pow(j)).product()
}

/// `(e, f)` for the two kinds of quadratic extension.
fn ramification(ramified: bool) -> (u32, u32) {
    if ramified {
        (2, 1)
    } else {
        (1, 2)
    }
}

/// The five finite indices relating `U_𝒰`, `U_E` and their filtrations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexChain {
    pub e: u32,
    pub f: u32,
    /// `[U_𝒰 : U_𝒰^1] = |GL(f, 𝔽_q)|^e`
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub u_mod_u1: BigInt,
    /// `[U_𝒰^1 : U_𝒰^i] = q^{2f(i−1)}`
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub u1_mod_ui: BigInt,
    /// `[U_E : U_E^1] = q^f − 1`
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub ue_mod_ue1: BigInt,
    /// `[U_E^1 : U_E^i] = (q^f)^{i−1}`
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub ue1_mod_uei: BigInt,
    /// `[⟨Π⟩ ⋉ U_𝒰 : U_𝒰] = e`
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub normalizer_mod_u: BigInt,
}

pub fn index_chain(field: &PadicField, ramified: bool, i: u32) -> Result<IndexChain> {
    if i == 0 {
        return Err(VnDimError::InvalidArgument(
            "filtration index must be at least 1".into(),
        ));
    }
    let (e, f) = ramification(ramified);
    let q = int(field.q());
    let qf = q.pow(f);
    Ok(IndexChain {
        e,
        f,
        u_mod_u1: gl_order(f, field.q()).pow(e),
        u1_mod_ui: q.pow(2 * f * (i - 1)),
        ue_mod_ue1: &qf - 1,
        ue1_mod_uei: qf.pow(i - 1),
        normalizer_mod_u: int(e as u64),
    })
}

impl IndexChain {
    /// `[U_𝒰 : U_𝒰^i] / [U_E : U_E^i]`, which must be an integer.
    pub fn normalizer_index(&self) -> Result<BigInt> {
        let num = &self.u_mod_u1 * &self.u1_mod_ui;
        let den = &self.ue_mod_ue1 * &self.ue1_mod_uei;
        let (quot, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(VnDimError::NonIntegerIndex { num, den });
        }
        Ok(quot)
    }
}

/// `[⟨Π⟩ ⋉ U_𝒰 : E^× U_𝒰^i]`.
pub fn index_j_in_normalizer(field: &PadicField, ramified: bool, i: u32) -> Result<BigInt> {
    index_chain(field, ramified, i)?.normalizer_index()
}

/// `[K : I] = |GL(2, 𝔽_q)| / |B(𝔽_q)|`, the number of lines in `𝔽_q²`.
pub(crate) fn index_k_i(q: u64) -> BigInt {
    let borel = int(q - 1).pow(2) * int(q);
    gl_order(2, q) / borel
}

/// The data `(J, Λ)` of a compactly induced supercuspidal, with the volume
/// of `J/Z` and the resulting formal dimension.
///
/// For the depth-zero supercuspidal `J = Z.K`, and `i` is reported as 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducingDatum {
    pub label: RepLabel,
    pub ramified: bool,
    pub e: u32,
    pub f: u32,
    pub i: u32,
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub dim_lambda: BigInt,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub vol_j_mod_z: Rational,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub formal_dim: Rational,
}

pub fn inducing_datum(field: &PadicField, label: RepLabel) -> Result<InducingDatum> {
    inducing_datum_with(field, label, &HaarNormalization::canonical(field))
}

pub fn inducing_datum_with(field: &PadicField, label: RepLabel, norm: &HaarNormalization) -> Result<InducingDatum> {
    let label = label.validate()?;
    let q = field.q();
    let (ramified, dim_lambda, i) = match label {
        RepLabel::Steinberg => {
            return Err(VnDimError::InvalidLabel(
                "steinberg is not compactly induced from an open compact-mod-center subgroup".into(),
            ))
        }
        RepLabel::DepthZeroSupercuspidal => {
            // inflation of a cuspidal representation of GL(2, F_q) to K
            let vol = norm.vol_k_mod_z().clone();
            let dim_lambda = int(q - 1);
            return Ok(InducingDatum {
                label,
                ramified: false,
                e: 1,
                f: 2,
                i: 0,
                formal_dim: Rational::from_integer(dim_lambda.clone()) / &vol,
                dim_lambda,
                vol_j_mod_z: vol,
            });
        }
        RepLabel::UnramifiedSupercuspidal { level } => {
            let dim = if level % 2 == 0 { q } else { 1 };
            (false, int(dim), label.filtration_index().expect("leveled"))
        }
        RepLabel::RamifiedSupercuspidal { .. } => (true, BigInt::one(), label.filtration_index().expect("leveled")),
    };
    let chain = index_chain(field, ramified, i)?;
    // vol(Z.U/Z): U_M = K, and U_J = I has index [K : I] in K
    let vol_u = if ramified {
        norm.vol_k_mod_z() / Rational::from_integer(index_k_i(q))
    } else {
        norm.vol_k_mod_z().clone()
    };
    let vol_normalizer = vol_u * Rational::from_integer(chain.normalizer_mod_u.clone());
    let vol_j_mod_z = vol_normalizer / Rational::from_integer(chain.normalizer_index()?);
    let formal_dim = Rational::from_integer(dim_lambda.clone()) / &vol_j_mod_z;
    Ok(InducingDatum {
        label,
        ramified,
        e: chain.e,
        f: chain.f,
        i,
        dim_lambda,
        vol_j_mod_z,
        formal_dim,
    })
}

/// Intermediate values in the computation of the Steinberg formal dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergChain {
    /// Formal dimension when `vol(Z.I/Z) = 1`.
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub iwahori_normalized_dim: Rational,
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub index_k_i: BigInt,
    /// `∫_{G/Z} |f|² = 2 Σ_{w ∈ W₀} q^{−l(w)}` for the normalized
    /// Iwahori-spherical matrix coefficient `f`.
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub series_value: Rational,
}

impl SteinbergChain {
    /// Rescales to a normalization where `vol(Z.I/Z) = vol(Z.K/Z) / [K : I]`.
    pub fn formal_dimension(&self, norm: &HaarNormalization) -> Rational {
        let vol_iwahori = norm.vol_k_mod_z() / Rational::from_integer(self.index_k_i.clone());
        &self.iwahori_normalized_dim / vol_iwahori
    }
}

/// `2 Σ_{w ∈ W₀} q^{−l(w)}` in closed form. Word lengths in `W₀` are
/// `0, 1, 1, 2, 2, …`, so the sum is `2(2/(1 − 1/q) − 1) = 2(q + 1)/(q − 1)`.
pub fn steinberg_series_value(q: u64) -> Rational {
    let geometric = Rational::one() / (Rational::one() - rint(q).recip());
    rint(2) * (rint(2) * geometric - Rational::one())
}

pub fn steinberg_intermediate(field: &PadicField) -> SteinbergChain {
    let series_value = steinberg_series_value(field.q());
    SteinbergChain {
        // f(1) = 1, so the Schur relation gives d = 1 / ∫|f|²
        iwahori_normalized_dim: series_value.recip(),
        index_k_i: index_k_i(field.q()),
        series_value,
    }
}

pub fn formal_dimension_padic(field: &PadicField, label: RepLabel) -> Result<Rational> {
    formal_dimension_padic_with(field, label, &HaarNormalization::canonical(field))
}

pub fn formal_dimension_padic_with(field: &PadicField, label: RepLabel, norm: &HaarNormalization) -> Result<Rational> {
    match label {
        RepLabel::Steinberg => Ok(steinberg_intermediate(field).formal_dimension(norm)),
        other => Ok(inducing_datum_with(field, other, norm)?.formal_dim),
    }
}

/// Steinberg formal dimension against the `GL(n)` formula
/// `d_St · vol(K.Z/Z) = (1/n) ∏_{k=1}^{n−1} (q^k − 1)` at `n = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmsCheck {
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub rhs: Rational,
    pub agree: bool,
}

pub fn cms_crosscheck(field: &PadicField) -> CmsCheck {
    let norm = HaarNormalization::canonical(field);
    let lhs = steinberg_intermediate(field).formal_dimension(&norm) * norm.vol_k_mod_z();
    let rank = 2u32;
    let product: BigInt = (1..rank).map(|k| int(field.q()).pow(k) - 1).product();
    let rhs = Rational::new(product, int(rank as u64));
    CmsCheck {
        agree: lhs == rhs,
        lhs,
        rhs,
    }
}
