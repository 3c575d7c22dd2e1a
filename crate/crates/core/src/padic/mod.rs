//! p-adic case: free lattices in `PGL(2,F)` and the discrete series of
//! `GL(2,F)`, for `F` nonarchimedean with residue field of odd order `q`.
//!
//! Haar measure on `G/Z` is normalized by `vol(Z.K/Z) = (q − 1)/2` where
//! `K = GL(2,𝔬)`. In this normalization a free lattice of rank `n` has
//! covolume `n − 1`, the Steinberg representation has formal dimension 1,
//! and every supercuspidal has an integer formal dimension. Other
//! normalizations are available through [`HaarNormalization`]; products of
//! covolume and formal dimension do not depend on the choice.

mod catalog;
mod labels;
mod spectrum;

pub use catalog::{
    cms_crosscheck, formal_dimension_padic, formal_dimension_padic_with, index_chain, index_j_in_normalizer,
    inducing_datum, inducing_datum_with, steinberg_intermediate, steinberg_series_value, CmsCheck, IndexChain,
    InducingDatum, SteinbergChain,
};
pub use labels::RepLabel;
pub use spectrum::{dimension_spectrum, vn_dimension_padic, vn_dimension_padic_with, SpectrumEntry, SpectrumFamily};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, VnDimError};
use crate::exact::{int, ratio, rint, Rational};

/// Residue data of a nonarchimedean local field: `q = p^m`, `p` an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PadicField {
    p: u64,
    m: u32,
    q: u64,
}

impl PadicField {
    /// Accepts `q` only if it is a power of an odd prime.
    pub fn new(q: u64) -> Result<Self> {
        let invalid = VnDimError::InvalidField { q };
        if q < 3 || q.is_multiple_of(2) {
            return Err(invalid);
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut m = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(invalid);
        }
        Ok(PadicField { p, m, q })
    }

    pub fn from_prime_power(p: u64, m: u32) -> Result<Self> {
        let q = p
            .checked_pow(m)
            .ok_or_else(|| VnDimError::InvalidArgument(format!("{p}^{m} overflows")))?;
        let field = PadicField::new(q)?;
        if field.p != p {
            return Err(VnDimError::InvalidField { q });
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PadicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} ({}^{})", self.q, self.p, self.m)
    }
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

/// Haar normalization on `G/Z`, recorded as the value of `vol(Z.K/Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaarNormalization {
    vol_k_mod_z: Rational,
}

impl HaarNormalization {
    /// `vol(Z.K/Z) = (q − 1)/2`.
    pub fn canonical(field: &PadicField) -> Self {
        HaarNormalization {
            vol_k_mod_z: ratio(int(field.q - 1), 2),
        }
    }

    pub fn with_maximal_compact_volume(vol_k_mod_z: Rational) -> Result<Self> {
        if vol_k_mod_z <= rint(0) {
            return Err(VnDimError::InvalidArgument(format!(
                "vol(Z.K/Z) must be positive, got {vol_k_mod_z}"
            )));
        }
        Ok(HaarNormalization { vol_k_mod_z })
    }

    /// The canonical normalization multiplied by `lambda`.
    pub fn scaled(field: &PadicField, lambda: &Rational) -> Result<Self> {
        Self::with_maximal_compact_volume(Self::canonical(field).vol_k_mod_z * lambda)
    }

    pub fn vol_k_mod_z(&self) -> &Rational {
        &self.vol_k_mod_z
    }

    /// Ratio of this normalization to the canonical one.
    pub fn scale_factor(&self, field: &PadicField) -> Rational {
        &self.vol_k_mod_z / Self::canonical(field).vol_k_mod_z
    }
}

/// A free lattice, given either by its rank or by the number of vertices of
/// its quotient of the Bruhat–Tits tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeSpec {
    Rank(u64),
    VertexCount(u64),
}

impl LatticeSpec {
    pub fn rank(&self, field: &PadicField) -> Result<u64> {
        let n = match *self {
            LatticeSpec::Rank(n) => n,
            LatticeSpec::VertexCount(c) => ihara_rank(field, c)?,
        };
        if n < 2 {
            return Err(VnDimError::RankTooSmall { n });
        }
        Ok(n)
    }
}

/// Rank `n = (q − 1)c/2 + 1` of a torsion-free lattice whose quotient graph
/// has `c` vertices.
pub fn ihara_rank(field: &PadicField, c: u64) -> Result<u64> {
    if c == 0 {
        return Err(VnDimError::InvalidArgument(
            "quotient graph needs at least one vertex".into(),
        ));
    }
    // q is odd, so (q - 1) * c is even
    (field.q - 1)
        .checked_mul(c)
        .map(|t| t / 2 + 1)
        .ok_or_else(|| VnDimError::InvalidArgument(format!("rank overflows for c = {c}")))
}

/// Covolume `n − 1` of a free lattice of rank `n`, canonical normalization.
pub fn covolume_padic(n: u64) -> Result<Rational> {
    if n < 2 {
        return Err(VnDimError::RankTooSmall { n });
    }
    Ok(rint(n - 1))
}

/// Covolume under an arbitrary normalization: `(n − 1) · v / ((q − 1)/2)`.
pub fn covolume_padic_with(field: &PadicField, n: u64, norm: &HaarNormalization) -> Result<Rational> {
    Ok(covolume_padic(n)? * norm.scale_factor(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> PadicField {
        PadicField::new(q).unwrap()
    }

    #[test]
    fn field_validation() {
        assert_eq!(f(9).p(), 3);
        assert_eq!(f(9).m(), 2);
        assert_eq!(f(125).p(), 5);
        assert_eq!(f(7).m(), 1);
        for bad in [0, 1, 2, 4, 8, 15, 45, 1024] {
            assert_eq!(PadicField::new(bad), Err(VnDimError::InvalidField { q: bad }), "{bad}");
        }
        assert_eq!(PadicField::from_prime_power(3, 3).unwrap().q(), 27);
        assert!(PadicField::from_prime_power(9, 1).is_err());
        assert!(PadicField::from_prime_power(2, 3).is_err());
    }

    #[test]
    fn ihara_examples() {
        assert_eq!(ihara_rank(&f(3), 1).unwrap(), 2);
        assert_eq!(ihara_rank(&f(5), 3).unwrap(), 7);
        assert_eq!(ihara_rank(&f(3), 100).unwrap(), 101);
        assert!(ihara_rank(&f(3), 0).is_err());
        assert_eq!(LatticeSpec::VertexCount(3).rank(&f(5)).unwrap(), 7);
        assert_eq!(LatticeSpec::Rank(1).rank(&f(5)), Err(VnDimError::RankTooSmall { n: 1 }));
    }

    #[test]
    fn covolume_examples() {
        assert_eq!(covolume_padic(2).unwrap(), rint(1));
        assert_eq!(covolume_padic(7).unwrap(), rint(6));
        assert_eq!(covolume_padic(1), Err(VnDimError::RankTooSmall { n: 1 }));
        let unit = HaarNormalization::with_maximal_compact_volume(rint(1)).unwrap();
        assert_eq!(covolume_padic_with(&f(3), 2, &unit).unwrap(), rint(1));
        assert_eq!(covolume_padic_with(&f(7), 2, &unit).unwrap(), ratio(2, 6));
        assert!(HaarNormalization::with_maximal_compact_volume(rint(0)).is_err());
    }
}
