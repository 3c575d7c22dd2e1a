//! Unit filtrations of quadratic extensions, counted in finite quotients of
//! the ring of integers `𝔬_E = ℤ_p[ω]`.
//!
//! Unramified: `ω² = u` for the least quadratic nonresidue `u` mod `p`, and
//! `𝔭_E = p𝔬_E`. Ramified: `ω² = p`, so `ω` is a uniformizer and
//! `𝔭_E^{2a} = p^a 𝔬_E`, `𝔭_E^{2a+1} = p^a ω 𝔬_E`.
//!
//! Units are found by searching for inverses, not from a norm criterion.

use super::{checked_pow, require_odd_prime, EnumerationBudget, FiltrationCounts};
use crate::error::{Result, VnDimError};

/// `𝔬_E / 𝔭_E^precision` for one of the two quadratic extensions of `ℚ_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticRing {
    pub p: u64,
    pub ramified: bool,
    pub precision: u32,
    /// `ω²`: a nonresidue `u` (unramified) or `p` (ramified).
    pub omega_squared: u64,
    x_modulus: u64,
    y_modulus: u64,
}

/// `x + y·ω` in a [`QuadraticRing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticResidueElement {
    pub x: u64,
    pub y: u64,
}

impl QuadraticRing {
    pub fn new(p: u64, ramified: bool, precision: u32) -> Result<Self> {
        require_odd_prime(p)?;
        if precision == 0 {
            return Err(VnDimError::InvalidArgument("precision must be at least 1".into()));
        }
        let (x_exp, y_exp, omega_squared) = if ramified {
            (precision.div_ceil(2), precision / 2, p)
        } else {
            (precision, precision, least_nonresidue(p))
        };
        Ok(QuadraticRing {
            p,
            ramified,
            precision,
            omega_squared,
            x_modulus: checked_pow(p, x_exp)?,
            y_modulus: checked_pow(p, y_exp)?,
        })
    }

    pub fn order(&self) -> u128 {
        self.x_modulus as u128 * self.y_modulus as u128
    }

    pub fn one(&self) -> QuadraticResidueElement {
        QuadraticResidueElement {
            x: 1 % self.x_modulus,
            y: 0,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = QuadraticResidueElement> + '_ {
        (0..self.x_modulus).flat_map(move |x| (0..self.y_modulus).map(move |y| QuadraticResidueElement { x, y }))
    }

    pub fn mul(&self, s: QuadraticResidueElement, t: QuadraticResidueElement) -> QuadraticResidueElement {
        let (mx, my) = (self.x_modulus as u128, self.y_modulus as u128);
        let (sx, sy, tx, ty) = (s.x as u128, s.y as u128, t.x as u128, t.y as u128);
        let w = self.omega_squared as u128;
        QuadraticResidueElement {
            x: ((sx * tx + w * (sy * ty % mx)) % mx) as u64,
            y: ((sx * ty + tx * sy) % my) as u64,
        }
    }

    /// Whether `s − 1 ∈ 𝔭_E^j`, for `j ≤ precision`.
    pub fn in_unit_level(&self, s: QuadraticResidueElement, j: u32) -> bool {
        let (x_exp, y_exp) = if self.ramified { (j.div_ceil(2), j / 2) } else { (j, j) };
        let x_minus_one = (s.x + self.x_modulus - 1) % self.x_modulus;
        x_minus_one.is_multiple_of(self.p.pow(x_exp)) && s.y.is_multiple_of(self.p.pow(y_exp))
    }

    fn is_unit(&self, s: QuadraticResidueElement) -> bool {
        let one = self.one();
        self.elements().any(|t| self.mul(s, t) == one)
    }
}

fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&u| (1..p).all(|x| x * x % p != u))
        .expect("an odd prime has quadratic nonresidues")
}

/// `[U_E : U_E^1]` and `[U_E^1 : U_E^i]` at the default precision: `i`
/// unramified, `2i − 1` ramified.
pub fn quadratic_unit_filtration(
    p: u64,
    i: u32,
    ramified: bool,
    budget: EnumerationBudget,
) -> Result<FiltrationCounts> {
    let precision = if ramified { 2 * i.max(1) - 1 } else { i };
    quadratic_unit_filtration_at(p, i, ramified, precision, budget)
}

/// Same counts in `𝔬_E/𝔭_E^precision`; any `precision ≥ i` resolves them.
pub fn quadratic_unit_filtration_at(
    p: u64,
    i: u32,
    ramified: bool,
    precision: u32,
    budget: EnumerationBudget,
) -> Result<FiltrationCounts> {
    if i == 0 {
        return Err(VnDimError::InvalidArgument(
            "filtration index must be at least 1".into(),
        ));
    }
    if precision < i {
        return Err(VnDimError::InvalidArgument(format!(
            "precision {precision} cannot resolve filtration level {i}"
        )));
    }
    let ring = QuadraticRing::new(p, ramified, precision)?;
    budget.check(ring.order() * ring.order())?;
    let classify = |s: QuadraticResidueElement| -> [u64; 3] {
        if !ring.is_unit(s) {
            return [0; 3];
        }
        [1, ring.in_unit_level(s, 1) as u64, ring.in_unit_level(s, i) as u64]
    };
    let elements: Vec<_> = ring.elements().collect();
    #[cfg(feature = "parallel")]
    let counts = {
        use rayon::prelude::*;
        elements
            .par_iter()
            .map(|&s| classify(s))
            .reduce(|| [0; 3], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]])
    };
    #[cfg(not(feature = "parallel"))]
    let counts = elements
        .iter()
        .map(|&s| classify(s))
        .fold([0; 3], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
    let [units, level_one, level_i] = counts;
    Ok(FiltrationCounts {
        u_mod_u1: units / level_one,
        u1_mod_ui: level_one / level_i,
    })
}
