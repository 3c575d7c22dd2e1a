//! Brute-force recomputation of the indices, orders and series that the
//! [`padic`](crate::padic) formulas rely on.
//!
//! Everything here works over prime residue fields and finite quotient rings
//! small enough to enumerate. None of it calls into the closed forms.

mod graph;
mod matrices;
mod quadratic;
mod series;
mod suite;

pub use graph::{random_regular_rank_check, MultiGraph, RankCheckReport};
pub use matrices::{iwahori_unit_filtration, residue_group_orders, ResidueGroupOrders, ResidueMatrix};
pub use quadratic::{quadratic_unit_filtration, quadratic_unit_filtration_at, QuadraticResidueElement, QuadraticRing};
pub use series::{series_cutoff, steinberg_series_sum, LengthSequence};
pub use suite::{run_verification, CheckResult, VerificationReport, VerifyConfig};

use serde::Serialize;

use crate::error::{Result, VnDimError};
use crate::padic::is_prime;

/// Maximum number of enumeration steps an oracle may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget(pub u64);

impl EnumerationBudget {
    pub const DEFAULT: EnumerationBudget = EnumerationBudget(100_000_000);

    pub fn check(self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            return Err(VnDimError::BudgetExceeded {
                required,
                budget: self.0,
            });
        }
        Ok(())
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A pair of successive indices `[U : U^1]`, `[U^1 : U^i]` in a unit filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCounts {
    pub u_mod_u1: u64,
    pub u1_mod_ui: u64,
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(VnDimError::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

pub(crate) fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| VnDimError::InvalidArgument(format!("{p}^{e} overflows")))
}
