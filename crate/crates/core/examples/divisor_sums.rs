//! Divisor sums at the two cusps and their convolutions.
//!
//! ```bash
//! cargo run --example divisor_sums
//! ```

use qforms::divisor::{rho_0, rho_iinf, sigma, sigma_0cusp, sigma_iinf};

fn main() {
    println!("{:>3} {:>10} {:>14} {:>10}", "n", "sigma_3", "sigma_3^iinf", "sigma_3^0");
    for n in 0..=10u64 {
        let plain = if n == 0 { "-".to_string() } else { sigma(3, n).to_string() };
        let zero = if n == 0 { "-".to_string() } else { sigma_0cusp(3, n).to_string() };
        println!("{n:>3} {plain:>10} {:>14} {zero:>10}", sigma_iinf(3, n).to_string());
    }
    println!("rho^iinf_(3,3)(2) = {}", rho_iinf(3, 3, 2));
    println!("rho^0_(3,3)(3)    = {}", rho_0(3, 3, 3));
}
