//! Exact q-series engine for the level-2 Eisenstein and double Eisenstein
//! series, the coefficients `μ_s(l)` expressing `T(τ)^{8s}` and `θ(τ)^{8s}` in
//! quadratic Eisenstein bases, and the representation-count formulas for sums
//! of `8s` squares and `8s` triangular numbers.
//!
//! Everything in the exact layer is computed over arbitrary-precision
//! rationals. Odd zeta values `ζ̃(p) = (2πi)^{-p} ζ(p)` are carried as formal
//! symbols through [`ExtScalar`], so identities are certified in their real
//! and "imaginary" parts at the same time.
//!
//! Layout:
//! - [`exact`]: rationals, Bernoulli numbers, binomials, factorials
//! - [`qseries`]: truncated power series over a generic coefficient ring
//! - [`zeta_ext`]: the coefficient ring `Q ⊕ ⊕ Q·z_p`
//! - [`divisor`]: divisor sums `σ_k`, `σ_k^{i∞}`, `σ_k^0` and their convolutions
//! - [`eisenstein`]: `φ_k`, `f`/`f̄` series, `G_k`, `G_k^{i∞}`, `G_k^0`, `θ`, `T^8`
//! - [`double`]: extended double Eisenstein series and the products `P^{oe}`, `P^{oo}`
//! - [`linalg`]: fraction-free exact linear solving
//! - [`mu`]: the `μ_s(l)` solver and the closed-form count formulas
//! - [`verify`]: brute-force and numeric oracles, identity checks, suite runner
//! - [`cli`]: the `qforms` command line

pub mod cli;
pub mod divisor;
pub mod double;
pub mod eisenstein;
pub mod error;
pub mod exact;
pub mod linalg;
pub mod mu;
pub mod qseries;
pub mod report;
pub mod verify;
pub mod zeta_ext;

pub use double::{DoubleIndex, ParityPair};
pub use eisenstein::{Parity, ParityClass, SeriesCatalog};
pub use error::{Error, Result};
pub use exact::Rational;
pub use mu::MuTable;
pub use qseries::{Coefficient, QSeries};
pub use report::{Status, VerificationReport};
pub use zeta_ext::ExtScalar;
