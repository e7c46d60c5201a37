//! The coefficients mu_s(l) with T^{8s} = sum_l mu_s(l) G^0_{2l} G^0_{4s-2l}.
//!
//! ```bash
//! cargo run --example solve_mu
//! ```

use qforms::mu::{solve_mu, solve_mu_with, solve_with_g0_column, theta_identity_check, MuOptions};

fn main() -> qforms::Result<()> {
    for s in 2..=6 {
        let table = solve_mu(s, 2 * s as usize + 20)?;
        let values: Vec<String> = table.mu.iter().map(|(l, v)| format!("{l}: {v}")).collect();
        println!("s = {s}: {{{}}}", values.join(", "));
    }

    // overdetermined rows do not change the answer
    let plain = solve_mu(6, 30)?;
    let extra = solve_mu_with(6, MuOptions { extra_rows: 5, verify_order: 30 })?;
    println!("stable under 5 extra rows: {}", plain.mu == extra.mu);

    let (alpha, _) = solve_with_g0_column(4, 2)?;
    println!("coefficient of G^0_16 when allowed: {alpha}");

    let report = theta_identity_check(3, &solve_mu(3, 20)?, 60);
    println!("{}", report.summary());
    println!("{}", serde_json::to_string_pretty(&plain.to_json()).expect("json"));
    Ok(())
}
