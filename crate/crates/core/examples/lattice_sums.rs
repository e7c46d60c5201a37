//! Direct lattice sums against q-expansions, and the theta transformation.
//!
//! ```bash
//! cargo run --release --example lattice_sums
//! ```

use num_complex::Complex64;
use qforms::verify::numeric::{check_prop4, check_transformation, lattice_double_sum, LatticeTruncation};
use qforms::ParityPair;

fn main() -> qforms::Result<()> {
    let tau = Complex64::new(0.0, 1.2);
    for m in [50, 100, 200, 400] {
        let t = LatticeTruncation::new(m, tau)?;
        let raw = lattice_double_sum(ParityPair::EvenOdd, 4, 3, &t.raw())?;
        let completed = lattice_double_sum(ParityPair::EvenOdd, 4, 3, &t)?;
        println!("M={m:>3}  raw box {raw:.6e}  tail-corrected {completed:.15e}");
    }
    println!("{}", check_prop4(ParityPair::OddOdd, 5, 4, tau, 600, 80, 1e-8).summary());
    println!("{}", check_prop4(ParityPair::OddEven, 3, 2, Complex64::new(0.1, 1.4), 800, 100, 1e-6).summary());
    println!("{}", check_transformation(2, Complex64::new(0.0, 1.0), 200, 1e-8).summary());
    println!("{}", check_transformation(2, Complex64::new(0.3, 0.01), 200, 1e-8).summary());
    Ok(())
}
