//! r_{8s}(n) and t_{8s}(n) from the closed formulas, against brute force.
//!
//! ```bash
//! cargo run --example representation_counts
//! ```

use qforms::mu::{r8s_table, solve_mu, t8s_table};
use qforms::verify::oracle::{r_enumerate, r_oracle, t_oracle};

fn main() -> qforms::Result<()> {
    let n_max = 12;
    for s in [2u32, 3] {
        let mu = solve_mu(s, 40)?;
        let r = r8s_table(s, n_max, &mu)?;
        let t = t8s_table(s, n_max, &mu)?;
        let (ro, to) = (r_oracle(8 * s, n_max), t_oracle(8 * s, n_max));
        println!("sums of {} squares / triangular numbers", 8 * s);
        for n in 0..=n_max as usize {
            println!("  n={n:>2}  r={:>14} ({})  t={:>12} ({})", r[n], if r[n] == ro[n] { "ok" } else { "BAD" }, t[n], if t[n] == to[n] { "ok" } else { "BAD" });
        }
    }
    println!("r_3(9) by enumeration: {}", r_enumerate(3, 9));
    Ok(())
}
