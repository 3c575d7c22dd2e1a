//! Exact von Neumann dimensions `covol(Γ) · d_π` of discrete series
//! representations restricted to lattices.
//!
//! Two settings are covered:
//!
//! * [`fuchsian`]: Fuchsian groups of the first kind in `PSL(2,ℝ)` and the
//!   holomorphic discrete series of `SL(2,ℝ)`.
//! * [`padic`]: free lattices in `PGL(2,F)` for a nonarchimedean local field
//!   `F` with odd residue characteristic, and the discrete series of
//!   `GL(2,F)` (Steinberg and supercuspidal).
//!
//! Every value is exact. Quantities that carry powers of π (covolumes and
//! formal dimensions in the real case) are [`ExactScalar`]s, and the final
//! products are checked to be π-free before they are returned as rationals.
//!
//! The [`oracles`] module recomputes the group indices, orders and series
//! used by [`padic`] by brute-force enumeration, independently of the closed
//! forms.

pub mod error;
pub mod exact;
pub mod fuchsian;
pub mod oracles;
pub mod padic;

pub use error::{Result, VnDimError};
pub use exact::{ExactScalar, Rational};
pub use fuchsian::{FuchsianSignature, RealWeight};
pub use padic::{InducingDatum, LatticeSpec, PadicField, RepLabel};
