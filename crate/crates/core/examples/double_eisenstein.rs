//! Extended double Eisenstein series with symbolic odd zeta values.
//!
//! ```bash
//! cargo run --example double_eisenstein
//! ```

use qforms::double::{f_double, z_double, DoubleFamily};
use qforms::ParityPair;

fn main() {
    let n = 6;
    for pp in ParityPair::ALL {
        println!("Z^{pp}_(4,3) = {}", z_double(pp, 4, 3, n));
    }
    // boundary indices pick up the epsilon corrections
    println!("Z^oo_(1,1) = {}", z_double(ParityPair::OddOdd, 1, 1, n));
    println!("f^eo_(2,2) = {}", f_double(ParityPair::EvenOdd, 2, 2, n));

    let family = DoubleFamily::new(30);
    let z = family.z(ParityPair::OddOdd, 3, 4);
    println!("largest zeta symbol in Z^oo_(3,4): z{}", z.max_symbol().unwrap_or(0));
}
