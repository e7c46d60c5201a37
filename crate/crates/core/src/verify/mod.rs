//! Oracles and identity checks.

pub mod identities;
pub mod numeric;
pub mod oracle;
pub mod reference;
pub mod suite;

pub use identities::{
    check_partial_fraction, check_shuffle, check_shuffle_in, check_star, check_summation, check_summation_over,
    ShuffleKind, ShuffleOptions,
};
pub use numeric::{check_prop4, check_transformation, lattice_double_sum, LatticeTruncation};
pub use oracle::{r_oracle, t_oracle};
pub use suite::{run_suite, Suite, SuiteConfig};
