//! Exhaustive counts over `2×2` matrices with entries in `ℤ/p^i`.
//!
//! These recover the orders in the tower
//! `GL(2,𝔬) → GL(2,𝔬/𝔭^i) → GL(2,𝔽_q) ⊃ B(𝔽_q) ⊃ N(𝔽_q)` directly from the
//! definitions (invertible determinant, reduction mod `p`, triangularity).

use serde::Serialize;

use super::{checked_pow, require_odd_prime, EnumerationBudget, FiltrationCounts};
use crate::error::{Result, VnDimError};

/// A `2×2` matrix `[[a, b], [c, d]]` over `ℤ/modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueMatrix {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub modulus: u64,
}

impl ResidueMatrix {
    pub fn new(a: u64, b: u64, c: u64, d: u64, modulus: u64) -> Self {
        ResidueMatrix {
            a: a % modulus,
            b: b % modulus,
            c: c % modulus,
            d: d % modulus,
            modulus,
        }
    }

    pub fn det(&self) -> u64 {
        let m = self.modulus as u128;
        let ad = self.a as u128 * self.d as u128 % m;
        let bc = self.b as u128 * self.c as u128 % m;
        ((ad + m - bc) % m) as u64
    }

    /// Over `ℤ/p^i` a matrix is invertible iff its determinant is prime to `p`.
    pub fn is_invertible_mod(&self, p: u64) -> bool {
        !self.det().is_multiple_of(p)
    }

    /// Whether `self − I` has entries divisible by `p^r` (`r ≤ i`).
    pub fn congruent_to_identity(&self, p_r: u64) -> bool {
        sub1(self.a, self.modulus).is_multiple_of(p_r)
            && self.b.is_multiple_of(p_r)
            && self.c.is_multiple_of(p_r)
            && sub1(self.d, self.modulus).is_multiple_of(p_r)
    }

    /// Whether `self − I` lies in `𝔓^j`, the `j`-th power of the Jacobson
    /// radical of the Iwahori order `[[𝔬, 𝔬], [𝔭, 𝔬]]`.
    ///
    /// `𝔓^j` asks for valuations `⌈j/2⌉` on the diagonal, `⌊j/2⌋` above it
    /// and `⌊j/2⌋ + 1` below it.
    fn in_iwahori_radical_power(&self, p: u64, j: u32) -> bool {
        let diag = p.pow(j.div_ceil(2));
        let upper = p.pow(j / 2);
        let lower = p.pow(j / 2 + 1);
        sub1(self.a, self.modulus).is_multiple_of(diag)
            && sub1(self.d, self.modulus).is_multiple_of(diag)
            && self.b.is_multiple_of(upper)
            && self.c.is_multiple_of(lower)
    }
}

fn sub1(x: u64, modulus: u64) -> u64 {
    (x + modulus - 1) % modulus
}

/// Counts, in one pass over all `modulus⁴` matrices, how many satisfy each
/// of the `N` predicates returned by `classify`.
fn tally<const N: usize>(modulus: u64, classify: impl Fn(&ResidueMatrix) -> [bool; N] + Sync) -> [u64; N] {
    let row = |a: u64| {
        let mut counts = [0u64; N];
        for b in 0..modulus {
            for c in 0..modulus {
                for d in 0..modulus {
                    let m = ResidueMatrix { a, b, c, d, modulus };
                    for (slot, hit) in counts.iter_mut().zip(classify(&m)) {
                        *slot += hit as u64;
                    }
                }
            }
        }
        counts
    };
    let add = |mut x: [u64; N], y: [u64; N]| {
        for (s, t) in x.iter_mut().zip(y) {
            *s += t;
        }
        x
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..modulus).into_par_iter().map(row).reduce(|| [0; N], add)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..modulus).map(row).fold([0; N], add)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueGroupOrders {
    /// `|GL(2, ℤ/p^i)|`
    pub gl2_order: u64,
    /// Matrices in `GL(2, ℤ/p^i)` congruent to `I` mod `p`.
    pub reduction_kernel_order: u64,
    /// `|B(𝔽_p)|`, invertible upper-triangular matrices mod `p`.
    pub borel_order: u64,
    /// `|N(𝔽_p)|`, upper unitriangular matrices mod `p`.
    pub unipotent_order: u64,
}

fn enumeration_setup(p: u64, i: u32, budget: EnumerationBudget) -> Result<u64> {
    require_odd_prime(p)?;
    if i == 0 {
        return Err(VnDimError::InvalidArgument(
            "filtration index must be at least 1".into(),
        ));
    }
    let modulus = checked_pow(p, i)?;
    budget.check((modulus as u128).pow(4))?;
    Ok(modulus)
}

pub fn residue_group_orders(p: u64, i: u32, budget: EnumerationBudget) -> Result<ResidueGroupOrders> {
    let modulus = enumeration_setup(p, i, budget)?;
    let [gl2_order, reduction_kernel_order] = tally(modulus, |m| {
        let unit = m.is_invertible_mod(p);
        [unit, unit && m.congruent_to_identity(p)]
    });
    let [borel_order, unipotent_order] = tally(p, |m| {
        let upper = m.c == 0;
        [upper && m.is_invertible_mod(p), upper && m.a == 1 && m.d == 1]
    });
    Ok(ResidueGroupOrders {
        gl2_order,
        reduction_kernel_order,
        borel_order,
        unipotent_order,
    })
}

/// `[I : I^1]` and `[I^1 : I^i]` for the Iwahori subgroup `I = U_𝒥` and its
/// filtration `I^j = 1 + 𝔓^j`, counted inside `GL(2, ℤ/p^i)`.
///
/// Reduction mod `p^i` kills `1 + p^i M(𝔬) ⊂ 1 + 𝔓^{2i−1} ⊂ I^i`, so both
/// indices are read off exactly at this precision.
pub fn iwahori_unit_filtration(p: u64, i: u32, budget: EnumerationBudget) -> Result<FiltrationCounts> {
    let modulus = enumeration_setup(p, i, budget)?;
    let [units, level_one, level_i] = tally(modulus, |m| {
        let unit = m.c % p == 0 && m.is_invertible_mod(p);
        [
            unit,
            unit && m.in_iwahori_radical_power(p, 1),
            unit && m.in_iwahori_radical_power(p, i),
        ]
    });
    Ok(FiltrationCounts {
        u_mod_u1: units / level_one,
        u1_mod_ui: level_one / level_i,
    })
}
