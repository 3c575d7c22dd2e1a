use num_bigint::BigInt;
use serde::Serialize;

use super::catalog::formal_dimension_padic_with;
use super::{covolume_padic_with, HaarNormalization, LatticeSpec, PadicField, RepLabel};
use crate::error::{Result, VnDimError};
use crate::exact::{is_integer, Rational};

/// `covol(Γ) · d_π` for a free lattice `Γ` and a discrete series `π`.
pub fn vn_dimension_padic(field: &PadicField, lattice: LatticeSpec, label: RepLabel) -> Result<Rational> {
    vn_dimension_padic_with(field, lattice, label, &HaarNormalization::canonical(field))
}

/// Same product under another Haar normalization; the result does not change.
pub fn vn_dimension_padic_with(
    field: &PadicField,
    lattice: LatticeSpec,
    label: RepLabel,
    norm: &HaarNormalization,
) -> Result<Rational> {
    let n = lattice.rank(field)?;
    let covolume = covolume_padic_with(field, n, norm)?;
    Ok(covolume * formal_dimension_padic_with(field, label, norm)?)
}

/// Which of the three families a spectrum value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpectrumFamily {
    /// `n − 1`
    Steinberg,
    /// `(n − 1) · 2q^k`
    Unramified { k: u32 },
    /// `(n − 1) · (q + 1)q^k`
    Ramified { k: u32 },
}

impl SpectrumFamily {
    /// A representation realizing this family member.
    ///
    /// Unramified supercuspidals of level `n` have `d = 2q^n` (both parities),
    /// with `k = 0` realized by the depth-zero supercuspidal. Ramified ones of
    /// odd level `n = 2k + 1` have `d = (q + 1)q^k`.
    pub fn witness(self) -> RepLabel {
        match self {
            SpectrumFamily::Steinberg => RepLabel::Steinberg,
            SpectrumFamily::Unramified { k: 0 } => RepLabel::DepthZeroSupercuspidal,
            SpectrumFamily::Unramified { k } => RepLabel::UnramifiedSupercuspidal { level: k },
            SpectrumFamily::Ramified { k } => RepLabel::RamifiedSupercuspidal { level: 2 * k + 1 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    #[serde(serialize_with = "crate::exact::serialize_integer")]
    pub value: BigInt,
    pub label: RepLabel,
    pub family: SpectrumFamily,
}

/// Von Neumann dimensions of the discrete series on a free lattice of rank
/// `n`, for exponents `k = 0..=max_k`, ascending and without repeats.
///
/// Each value is computed by running the witness label through
/// [`vn_dimension_padic`].
pub fn dimension_spectrum(field: &PadicField, n: u64, max_k: u32) -> Result<Vec<SpectrumEntry>> {
    let lattice = LatticeSpec::Rank(n);
    lattice.rank(field)?;
    let families = std::iter::once(SpectrumFamily::Steinberg)
        .chain((0..=max_k).map(|k| SpectrumFamily::Unramified { k }))
        .chain((0..=max_k).map(|k| SpectrumFamily::Ramified { k }));
    let mut entries = families
        .map(|family| {
            let label = family.witness();
            let value = vn_dimension_padic(field, lattice, label)?;
            if !is_integer(&value) {
                return Err(VnDimError::NonIntegerIndex {
                    num: value.numer().clone(),
                    den: value.denom().clone(),
                });
            }
            Ok(SpectrumEntry {
                value: value.to_integer(),
                label,
                family,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| a.value.cmp(&b.value).then(a.family.cmp(&b.family)));
    entries.dedup_by(|later, earlier| later.value == earlier.value);
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rint};

    fn f(q: u64) -> PadicField {
        PadicField::new(q).unwrap()
    }

    fn values(q: u64, n: u64, max_k: u32) -> Vec<u64> {
        dimension_spectrum(&f(q), n, max_k)
            .unwrap()
            .into_iter()
            .map(|e| u64::try_from(e.value).unwrap())
            .collect()
    }

    #[test]
    fn vn_dimension_examples() {
        let rank2 = LatticeSpec::Rank(2);
        assert_eq!(vn_dimension_padic(&f(3), rank2, RepLabel::Steinberg).unwrap(), rint(1));
        assert_eq!(
            vn_dimension_padic(&f(3), rank2, RepLabel::DepthZeroSupercuspidal).unwrap(),
            rint(2)
        );
        assert_eq!(
            vn_dimension_padic(
                &f(3),
                LatticeSpec::Rank(3),
                RepLabel::RamifiedSupercuspidal { level: 3 }
            )
            .unwrap(),
            rint(24)
        );
        // c = 1 vertex at q = 3 is rank 2
        assert_eq!(
            vn_dimension_padic(&f(3), LatticeSpec::VertexCount(1), RepLabel::Steinberg).unwrap(),
            rint(1)
        );
        assert_eq!(
            vn_dimension_padic(&f(3), LatticeSpec::Rank(1), RepLabel::Steinberg),
            Err(VnDimError::RankTooSmall { n: 1 })
        );
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(values(3, 2, 2), vec![1, 2, 4, 6, 12, 18, 36]);
        assert_eq!(values(3, 2, 0), vec![1, 2, 4]);
        assert_eq!(values(5, 2, 1), vec![1, 2, 6, 10, 30]);
        assert_eq!(values(3, 4, 0), vec![3, 6, 12]);
        assert!(dimension_spectrum(&f(3), 1, 2).is_err());
    }

    #[test]
    fn spectrum_values_fall_in_the_three_families() {
        for q in [3u64, 5, 7, 9] {
            for n in 2..6u64 {
                for entry in dimension_spectrum(&f(q), n, 4).unwrap() {
                    let expected = match entry.family {
                        SpectrumFamily::Steinberg => int(n - 1),
                        SpectrumFamily::Unramified { k } => int(n - 1) * 2 * int(q).pow(k),
                        SpectrumFamily::Ramified { k } => int(n - 1) * int(q + 1) * int(q).pow(k),
                    };
                    assert_eq!(entry.value, expected);
                }
            }
        }
    }

    #[test]
    fn normalization_covariance() {
        let field = f(5);
        for lambda in [Rational::new(int(1), int(2)), rint(2), Rational::new(int(7), int(3))] {
            let norm = HaarNormalization::scaled(&field, &lambda).unwrap();
            assert_eq!(covolume_padic_with(&field, 4, &norm).unwrap(), rint(3) * &lambda);
            for label in [
                RepLabel::Steinberg,
                RepLabel::DepthZeroSupercuspidal,
                RepLabel::UnramifiedSupercuspidal { level: 3 },
                RepLabel::RamifiedSupercuspidal { level: 5 },
            ] {
                let canonical =
                    formal_dimension_padic_with(&field, label, &HaarNormalization::canonical(&field)).unwrap();
                assert_eq!(
                    formal_dimension_padic_with(&field, label, &norm).unwrap(),
                    &canonical / &lambda
                );
                assert_eq!(
                    vn_dimension_padic_with(&field, LatticeSpec::Rank(4), label, &norm).unwrap(),
                    vn_dimension_padic(&field, LatticeSpec::Rank(4), label).unwrap()
                );
            }
        }
    }
}
