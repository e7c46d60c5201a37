//! Truncated q-series over exact rationals and over the zeta-extended ring.
//!
//! ```bash
//! cargo run --example series_arithmetic
//! ```

use qforms::exact::{bernoulli, rat};
use qforms::zeta_ext::zeta_tilde;
use qforms::{ExtScalar, QSeries, Rational};

fn main() -> qforms::Result<()> {
    println!("Bernoulli numbers:");
    for k in [0, 1, 2, 4, 6, 12] {
        println!("  B_{k} = {}", bernoulli(k));
    }

    // (1 + q)(1 - q) = 1 - q^2 to order 4
    let a = QSeries::new(vec![rat(1, 1), rat(1, 1)], 4);
    let b = QSeries::new(vec![rat(1, 1), rat(-1, 1)], 4);
    println!("(1+q)(1-q) = {}", &a * &b);
    println!("q d/dq (1 + 3q^2) = {}", QSeries::new(vec![rat(1, 1), rat(0, 1), rat(3, 1)], 4).qderive());
    println!("q -> -q on 1+q+q^2: {}", QSeries::new(vec![rat(1, 1); 3], 2).subst_neg_q());

    // odd zeta values stay symbolic; even ones are rational
    let z3 = zeta_tilde(3);
    let z4 = zeta_tilde(4);
    println!("zeta~(3) = {z3}, zeta~(4) = {z4}, zeta~(1) = {}", zeta_tilde(1));
    let mixed: ExtScalar = "1/2 + 2*z3 - 3/4*z5".parse()?;
    println!("parsed: {mixed}, rational part {}", mixed.rational_part());
    println!("z3 * 1/1440 = {}", z3.checked_mul(&z4)?);
    match z3.checked_mul(&zeta_tilde(5)) {
        Ok(v) => println!("unexpected: {v}"),
        Err(e) => println!("z3 * z5 is refused: {e}"),
    }

    let half: Rational = "1/2".parse().expect("rational");
    println!("scaled series: {}", a.scale(&half));
    Ok(())
}
