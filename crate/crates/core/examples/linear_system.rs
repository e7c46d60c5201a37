//! Fraction-free exact solving, with rank and consistency diagnostics.
//!
//! ```bash
//! cargo run --example linear_system
//! ```

use qforms::exact::rat;
use qforms::linalg::LinearSystem;

fn main() {
    let sys = LinearSystem::new(
        vec![vec![rat(2, 1), rat(1, 3)], vec![rat(1, 2), rat(-1, 1)], vec![rat(5, 2), rat(-2, 3)]],
        vec![rat(1, 1), rat(0, 1), rat(1, 1)],
        vec![2, 3, 4],
    );
    match sys.solve() {
        Ok(sol) => println!("x = {:?}, rank {}", sol.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(), sol.rank),
        Err(e) => println!("{e}"),
    }
    let bad = LinearSystem::new(vec![vec![rat(1, 1)], vec![rat(2, 1)]], vec![rat(1, 1), rat(3, 1)], vec![7, 8]);
    println!("{}", bad.solve().unwrap_err());
    let singular = LinearSystem::new(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]], vec![rat(1, 1), rat(2, 1)], vec![1, 2]);
    println!("{}", singular.solve().unwrap_err());
}
