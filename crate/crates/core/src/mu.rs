//! The coefficients `μ_s(l)` with
//! `T(τ)^{8s} = Σ_{l=2}^{s} μ_s(l) G^0_{2l}(τ) G^0_{4s-2l}(τ)`,
//! and the closed forms for `r_{8s}(n)` and `t_{8s}(n)` they produce.
//!
//! The system is read off the q-coefficients `n = 2..=s` of both sides (each
//! product vanishes to order 2, `T^{8s} = q^s + …`), solved exactly, and the
//! solution is then checked against the full series up to a separate order.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::divisor::{rho_0_table, rho_iinf_table};
use crate::eisenstein::{g_0_rational, g_iinf_rational, t8, theta_unit};
use crate::error::{integral, Error, Result};
use crate::exact::{binomial, factorial_rat, pow2, sign, Rational};
use crate::linalg::LinearSystem;
use crate::qseries::QSeries;
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq)]
pub struct MuTable {
    pub s: u32,
    /// `l -> μ_s(l)` for `2 ≤ l ≤ s`.
    pub mu: BTreeMap<u32, Rational>,
    pub system_rows: usize,
    pub rank: usize,
    pub verified_order: usize,
}

impl MuTable {
    pub fn get(&self, l: u32) -> &Rational {
        &self.mu[&l]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "s": self.s,
            "mu": self.mu.iter().map(|(l, v)| json!({"l": l, "value": v.to_string()})).collect::<Vec<_>>(),
            "system_rows": self.system_rows,
            "rank": self.rank,
            "verified_order": self.verified_order,
        })
    }

    /// `l,mu` rows with the value quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,mu\n");
        for (l, v) in &self.mu {
            out += &format!("{l},\"{v}\"\n");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MuOptions {
    /// Coefficient rows beyond `n = s`.
    pub extra_rows: usize,
    pub verify_order: usize,
}

/// The basis products `G^0_{2l} G^0_{4s-2l}`, `l = 2..=s`.
pub fn basis_products(s: u32, order: usize) -> Vec<QSeries<Rational>> {
    (2..=s)
        .map(|l| &g_0_rational(2 * l, order) * &g_0_rational(4 * s - 2 * l, order))
        .collect()
}

/// `T^{8s}`.
pub fn t8s(s: u32, order: usize) -> QSeries<Rational> {
    t8(order).pow(s)
}

fn check_s(s: u32) -> Result<()> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("s = {s}; need s >= 2")));
    }
    Ok(())
}

/// The system for `μ_s` from rows `n = 2..=s + extra_rows`.
pub fn mu_system(s: u32, extra_rows: usize) -> LinearSystem {
    let last = s as usize + extra_rows;
    let basis = basis_products(s, last);
    let target = t8s(s, last);
    let exps: Vec<usize> = (2..=last).collect();
    LinearSystem::new(
        exps.iter().map(|&n| basis.iter().map(|b| b.coeff(n).clone()).collect()).collect(),
        exps.iter().map(|&n| target.coeff(n).clone()).collect(),
        exps,
    )
}

pub fn solve_mu(s: u32, verify_order: usize) -> Result<MuTable> {
    solve_mu_with(s, MuOptions { extra_rows: 0, verify_order })
}

pub fn solve_mu_with(s: u32, opts: MuOptions) -> Result<MuTable> {
    check_s(s)?;
    let min_order = 2 * s as usize - 1;
    if opts.verify_order < min_order {
        return Err(Error::InvalidArgument(format!(
            "verify order {} below 2s-1 = {min_order}",
            opts.verify_order
        )));
    }
    let system = mu_system(s, opts.extra_rows);
    let solution = system.solve()?;
    let table = MuTable {
        s,
        mu: (2..=s).zip(solution.values).collect(),
        system_rows: system.rows(),
        rank: solution.rank,
        verified_order: opts.verify_order,
    };
    let lhs = t8s(s, opts.verify_order);
    let rhs = mu_combination(&table, opts.verify_order, g_0_rational);
    if let Some(n) = lhs.compare(&rhs).first_mismatch {
        return Err(Error::VerificationFailed {
            exponent: n,
            lhs: lhs.coeff(n).to_string(),
            rhs: rhs.coeff(n).to_string(),
        });
    }
    Ok(table)
}

/// `Σ_l μ_s(l) E_{2l} E_{4s-2l}` for a family `E` of rational series.
fn mu_combination(mu: &MuTable, order: usize, e: impl Fn(u32, usize) -> QSeries<Rational>) -> QSeries<Rational> {
    let s = mu.s;
    mu.mu.iter().fold(QSeries::zero(order), |acc, (&l, c)| {
        &acc + &(&e(2 * l, order) * &e(4 * s - 2 * l, order)).scale(c)
    })
}

/// Solve with `G^0_{4s}` added as a column; returns its coefficient (which is
/// forced to zero by the vanishing orders) and the table.
pub fn solve_with_g0_column(s: u32, extra_rows: usize) -> Result<(Rational, MuTable)> {
    check_s(s)?;
    let last = s as usize + extra_rows;
    let mut basis = vec![g_0_rational(4 * s, last)];
    basis.extend(basis_products(s, last));
    let target = t8s(s, last);
    let exps: Vec<usize> = (1..=last).collect();
    let system = LinearSystem::new(
        exps.iter().map(|&n| basis.iter().map(|b| b.coeff(n).clone()).collect()).collect(),
        exps.iter().map(|&n| target.coeff(n).clone()).collect(),
        exps.clone(),
    );
    let mut sol = system.solve()?;
    let alpha = sol.values.remove(0);
    Ok((
        alpha,
        MuTable {
            s,
            mu: (2..=s).zip(sol.values).collect(),
            system_rows: system.rows(),
            rank: sol.rank,
            verified_order: last,
        },
    ))
}

fn ensure_matches(s: u32, mu: &MuTable) -> Result<()> {
    if mu.s != s {
        return Err(Error::InvalidArgument(format!("table is for s = {}, asked for s = {s}", mu.s)));
    }
    Ok(())
}

/// `r_{8s}(n)` for `n = 0..=n_max` from
/// `(-1)^n 2^{4s}/(4s-2)! Σ_l μ_s(l) C(4s-2, 2l-1) ρ^{i∞}_{4s-2l-1, 2l-1}(n)`.
pub fn r8s_table(s: u32, n_max: u64, mu: &MuTable) -> Result<Vec<BigInt>> {
    ensure_matches(s, mu)?;
    let mut acc = vec![Rational::zero(); n_max as usize + 1];
    for (&l, m) in &mu.mu {
        let w = m * Rational::from_integer(binomial(4 * s as u64 - 2, 2 * l as i64 - 1));
        for (a, rho) in acc.iter_mut().zip(rho_iinf_table(4 * s - 2 * l - 1, 2 * l - 1, n_max)) {
            *a += &w * rho;
        }
    }
    let norm = pow2(4 * s as i64) / factorial_rat(4 * s as u64 - 2);
    acc.into_iter()
        .enumerate()
        .map(|(n, a)| integral(a * &norm * Rational::from_integer(sign(n as i64).into())))
        .collect()
}

pub fn r8s_formula(s: u32, n: u64, mu: &MuTable) -> Result<BigInt> {
    Ok(r8s_table(s, n, mu)?.pop().expect("nonempty"))
}

/// `t_{8s}(m)` for `m = 0..=m_max` from
/// `1/(4s-2)! Σ_l μ_s(l) C(4s-2, 2l-1) ρ^0_{4s-2l-1, 2l-1}(m + s)`.
pub fn t8s_table(s: u32, m_max: u64, mu: &MuTable) -> Result<Vec<BigInt>> {
    ensure_matches(s, mu)?;
    let n_max = m_max + s as u64;
    let mut acc = vec![Rational::zero(); n_max as usize + 1];
    for (&l, m) in &mu.mu {
        let w = m * Rational::from_integer(binomial(4 * s as u64 - 2, 2 * l as i64 - 1));
        for (a, rho) in acc.iter_mut().zip(rho_0_table(4 * s - 2 * l - 1, 2 * l - 1, n_max)) {
            *a += &w * Rational::from_integer(rho);
        }
    }
    let norm = factorial_rat(4 * s as u64 - 2);
    acc.into_iter()
        .skip(s as usize)
        .map(|a| integral(a / &norm))
        .collect()
}

pub fn t8s_formula(s: u32, m: u64, mu: &MuTable) -> Result<BigInt> {
    Ok(t8s_table(s, m, mu)?.pop().expect("nonempty"))
}

/// `θ^{8s} = 2^{8s} Σ_l μ_s(l) G^{i∞}_{2l}(τ+1/2) G^{i∞}_{4s-2l}(τ+1/2)` to `q^order`;
/// `τ → τ + 1/2` acts as `q → -q`.
pub fn theta_identity_check(s: u32, mu: &MuTable, order: usize) -> VerificationReport {
    let start = Instant::now();
    let report = VerificationReport::new("theta_identity")
        .param("s", s)
        .param("order", order);
    if mu.s != s {
        return report.abort(format!("table is for s = {}", mu.s));
    }
    let lhs = theta_unit(order).pow(8 * s);
    let rhs = mu_combination(mu, order, |k, n| g_iinf_rational(k, n).subst_neg_q()).scale(&pow2(8 * s as i64));
    report.exact("theta", &lhs, &rhs).with_elapsed(start.elapsed())
}
