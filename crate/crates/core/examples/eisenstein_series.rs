//! Level-2 Eisenstein series and theta blocks.
//!
//! ```bash
//! cargo run --example eisenstein_series
//! ```

use qforms::eisenstein::{g, g_0, g_iinf, t8, theta_unit, triangular_unit};
use qforms::eisenstein::{SeriesCatalog, SeriesKey};

fn main() {
    let n = 8;
    println!("G_4      = {}", g(4, n));
    println!("G_3      = {}", g(3, n));
    println!("G^0_4    = {}", g_0(4, n));
    println!("G^iinf_4 = {}", g_iinf(4, n));
    println!("theta    = {}", theta_unit(n));
    println!("triang.  = {}", triangular_unit(n));
    println!("T^8      = {}", t8(n));

    // theta^16 counts representations as sums of 16 squares
    let th16 = theta_unit(4).pow(16);
    println!("r_16(0..4) = {:?}", th16.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let catalog = SeriesCatalog::new();
    let first = catalog.get(SeriesKey::G0(6), 20);
    let again = catalog.get(SeriesKey::G0(6), 20);
    println!("catalog hit shares storage: {}", std::sync::Arc::ptr_eq(&first, &again));
}
