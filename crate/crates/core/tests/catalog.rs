//! The formal-dimension catalog and the von Neumann dimension spectrum
//! against their closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use vndim_core::padic::{
    dimension_spectrum, formal_dimension_padic, formal_dimension_padic_with, inducing_datum, vn_dimension_padic,
    vn_dimension_padic_with, HaarNormalization, SpectrumFamily,
};
use vndim_core::{LatticeSpec, PadicField, RepLabel};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow(q: u64, e: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(q).pow(e))
}

#[test]
fn supercuspidal_rows_match_closed_forms() {
    for q in [3u64, 5, 7, 9, 11, 25] {
        let field = PadicField::new(q).unwrap();
        for i in 1..=4u32 {
            let even = inducing_datum(&field, RepLabel::UnramifiedSupercuspidal { level: 2 * i }).unwrap();
            assert_eq!(even.i, i);
            assert_eq!(even.vol_j_mod_z, r(1, 2) / pow(q, 2 * i - 1));
            assert_eq!(even.formal_dim, r(2, 1) * pow(q, 2 * i));

            let odd = inducing_datum(&field, RepLabel::UnramifiedSupercuspidal { level: 2 * i - 1 }).unwrap();
            assert_eq!(odd.i, i);
            assert_eq!(odd.vol_j_mod_z, r(1, 2) / pow(q, 2 * i - 1));
            assert_eq!(odd.formal_dim, r(2, 1) * pow(q, 2 * i - 1));

            let ram = inducing_datum(&field, RepLabel::RamifiedSupercuspidal { level: 2 * i - 1 }).unwrap();
            assert_eq!(ram.i, i);
            assert_eq!(ram.vol_j_mod_z, r(1, q as i64 + 1) / pow(q, i - 1));
            assert_eq!(ram.formal_dim, r(q as i64 + 1, 1) * pow(q, i - 1));
        }
    }
}

#[test]
fn vn_dimensions_are_positive_integers() {
    for q in [3u64, 5, 7] {
        let field = PadicField::new(q).unwrap();
        for n in 2..8 {
            for level in 1..=7u32 {
                let mut labels = vec![RepLabel::Steinberg, RepLabel::DepthZeroSupercuspidal];
                labels.push(RepLabel::UnramifiedSupercuspidal { level });
                if level % 2 == 1 {
                    labels.push(RepLabel::RamifiedSupercuspidal { level });
                }
                for label in labels {
                    let v = vn_dimension_padic(&field, LatticeSpec::Rank(n), label).unwrap();
                    assert!(v.is_integer() && v > r(0, 1), "{q} {n} {label}");
                }
            }
        }
    }
}

#[test]
fn vertex_count_and_rank_agree() {
    let field = PadicField::new(5).unwrap();
    for c in 1..10 {
        let n = (5 - 1) * c / 2 + 1;
        for label in [RepLabel::Steinberg, RepLabel::RamifiedSupercuspidal { level: 3 }] {
            assert_eq!(
                vn_dimension_padic(&field, LatticeSpec::VertexCount(c), label).unwrap(),
                vn_dimension_padic(&field, LatticeSpec::Rank(n), label).unwrap()
            );
        }
    }
}

#[test]
fn witnesses_reproduce_their_family() {
    let field = PadicField::new(7).unwrap();
    for entry in dimension_spectrum(&field, 3, 6).unwrap() {
        let d = formal_dimension_padic(&field, entry.label).unwrap();
        assert_eq!(BigRational::from_integer(entry.value.clone()), d * r(2, 1));
        if let SpectrumFamily::Ramified { k } = entry.family {
            assert_eq!(entry.label, RepLabel::RamifiedSupercuspidal { level: 2 * k + 1 });
        }
    }
}

fn arb_label() -> impl Strategy<Value = RepLabel> {
    prop_oneof![
        Just(RepLabel::Steinberg),
        Just(RepLabel::DepthZeroSupercuspidal),
        (1u32..8).prop_map(|level| RepLabel::UnramifiedSupercuspidal { level }),
        (0u32..4).prop_map(|k| RepLabel::RamifiedSupercuspidal { level: 2 * k + 1 }),
    ]
}

proptest! {
    #[test]
    fn rescaling_haar_measure_leaves_products_fixed(
        q in prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 27]),
        n in 2u64..20,
        label in arb_label(),
        num in 1i64..40,
        den in 1i64..40,
    ) {
        let field = PadicField::new(q).unwrap();
        let lambda = r(num, den);
        let norm = HaarNormalization::scaled(&field, &lambda).unwrap();
        let canonical = HaarNormalization::canonical(&field);
        prop_assert_eq!(
            formal_dimension_padic_with(&field, label, &norm).unwrap() * &lambda,
            formal_dimension_padic_with(&field, label, &canonical).unwrap()
        );
        prop_assert_eq!(
            vn_dimension_padic_with(&field, LatticeSpec::Rank(n), label, &norm).unwrap(),
            vn_dimension_padic(&field, LatticeSpec::Rank(n), label).unwrap()
        );
    }

    #[test]
    fn compact_induction_identity(q in prop::sample::select(vec![3u64, 5, 7, 9, 25]), label in arb_label()) {
        prop_assume!(label != RepLabel::Steinberg);
        let field = PadicField::new(q).unwrap();
        let d = inducing_datum(&field, label).unwrap();
        prop_assert_eq!(&d.formal_dim * &d.vol_j_mod_z, BigRational::from_integer(d.dim_lambda.clone()));
    }
}
