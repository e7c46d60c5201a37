//! Single Eisenstein series of level 2 and the theta blocks.
//!
//! With `q = e^{2πiτ}` and `ζ̃(k) = (2πi)^{-k} ζ(k)`:
//!
//! - `φ_k = (-1)^k/(k-1)! Σ_{u>0} u^{k-1} q^u`
//! - `f^{o/e}_r(τ) = Σ_{m>0, m odd/even} φ_r(mτ)`
//! - `f̄^{o/e}_s(τ) = -Σ_{m>0, m odd/even} m·φ_{s+1}(mτ)`
//! - `G_k = ζ̃(k) + (-1)^k/(k-1)! Σ σ_{k-1}(n) q^n`
//! - `G_k^{i∞}(τ) = G_k(2τ) - 2^{-k} G_k(τ)`, `G_k^0(τ) = G_k(τ) - G_k(2τ)`
//! - `θ = Σ_{n∈Z} q^{n²}`, `T^8 = q (Σ_{n≥0} q^{n(n+1)/2})^8`

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::divisor::sigma;
use crate::exact::{factorial_rat, int, pow2, sign, Rational};
use crate::qseries::QSeries;
use crate::zeta_ext::{zeta_tilde, ExtScalar};

/// Residue class of a lattice index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    Even,
    Odd,
    All,
}

impl ParityClass {
    pub fn contains(self, m: i64) -> bool {
        match self {
            ParityClass::Even => m.rem_euclid(2) == 0,
            ParityClass::Odd => m.rem_euclid(2) == 1,
            ParityClass::All => true,
        }
    }
}

/// The two classes the `f`, `f̄` and double series are indexed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn contains(self, m: u64) -> bool {
        (m % 2 == 1) == (self == Parity::Odd)
    }

    /// Smallest positive member.
    pub fn first_positive(self) -> u64 {
        match self {
            Parity::Odd => 1,
            Parity::Even => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Odd => 'o',
            Parity::Even => 'e',
        }
    }
}

impl From<Parity> for ParityClass {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => ParityClass::Even,
            Parity::Odd => ParityClass::Odd,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Coefficient of `q^u` in `φ_k`.
pub fn phi_coeff(k: u32, u: u64) -> Rational {
    assert!(k >= 1);
    let p: BigInt = BigInt::from(u).pow(k - 1);
    Rational::from_integer(p * sign(k as i64)) / factorial_rat(k as u64 - 1)
}

pub fn phi(k: u32, order: usize) -> QSeries<Rational> {
    QSeries::from_fn(order, |u| {
        if u == 0 {
            Rational::zero()
        } else {
            phi_coeff(k, u as u64)
        }
    })
}

/// `Σ_{m>0 in parity} c(m)·φ_k(mτ)` as a q-series.
fn lattice_phi_sum(parity: Parity, k: u32, order: usize, weight: impl Fn(u64) -> i64) -> QSeries<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let n_max = order as u64;
    let mut m = parity.first_positive();
    while m <= n_max {
        let w = Rational::from_integer(weight(m).into());
        for u in 1..=n_max / m {
            coeffs[(u * m) as usize] += phi_coeff(k, u) * &w;
        }
        m += 2;
    }
    QSeries::new(coeffs, order)
}

/// `f^{parity}_r`.
pub fn f_parity(parity: Parity, r: u32, order: usize) -> QSeries<Rational> {
    lattice_phi_sum(parity, r, order, |_| 1)
}

/// `f̄^{parity}_s` for `s ≥ 0`.
pub fn fbar_parity(parity: Parity, s: u32, order: usize) -> QSeries<Rational> {
    lattice_phi_sum(parity, s + 1, order, |m| -(m as i64))
}

/// `G_k` with constant term `ζ̃(k)`.
pub fn g(k: u32, order: usize) -> QSeries<ExtScalar> {
    assert!(k >= 1);
    let norm = int(sign(k as i64)) / factorial_rat(k as u64 - 1);
    QSeries::from_fn(order, |n| {
        if n == 0 {
            zeta_tilde(k)
        } else {
            ExtScalar::rational(Rational::from_integer(sigma(k - 1, n as u64)) * &norm)
        }
    })
}

/// `G_k(2τ)`, written `Z^e_k` in the double shuffle relations.
pub fn g_2tau(k: u32, order: usize) -> QSeries<ExtScalar> {
    g(k, order).subst_q_squared()
}

/// `G_k^{i∞}(τ) = G_k(2τ) - 2^{-k} G_k(τ)`.
pub fn g_iinf(k: u32, order: usize) -> QSeries<ExtScalar> {
    let gk = g(k, order);
    &gk.subst_q_squared() - &gk.scale(&pow2(-(k as i64)))
}

/// `G_k^0(τ) = G_k(τ) - G_k(2τ)`, written `Z^o_k` in the double shuffle relations.
pub fn g_0(k: u32, order: usize) -> QSeries<ExtScalar> {
    let gk = g(k, order);
    &gk - &gk.subst_q_squared()
}

/// `G_k^0` as a rational series (its constant term always cancels).
pub fn g_0_rational(k: u32, order: usize) -> QSeries<Rational> {
    g_0(k, order)
        .to_rational()
        .expect("G^0_k has no zeta constant")
}

/// `G_k^{i∞}` for even `k`, where every coefficient is rational.
pub fn g_iinf_rational(k: u32, order: usize) -> QSeries<Rational> {
    assert!(k % 2 == 0, "G^iinf_k carries z_k for odd k");
    g_iinf(k, order)
        .to_rational()
        .expect("even weight constants are rational")
}

/// `θ(τ) = 1 + 2 Σ_{n≥1} q^{n²}`.
pub fn theta_unit(order: usize) -> QSeries<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = int(1);
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] = int(2);
        n += 1;
    }
    QSeries::new(coeffs, order)
}

/// `Σ_{n≥0} q^{n(n+1)/2}`.
pub fn triangular_unit(order: usize) -> QSeries<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut n = 0usize;
    while n * (n + 1) / 2 <= order {
        coeffs[n * (n + 1) / 2] = int(1);
        n += 1;
    }
    QSeries::new(coeffs, order)
}

/// `T(τ)^8 = q·(Σ_{n≥0} q^{n(n+1)/2})^8`; integral exponents only.
pub fn t8(order: usize) -> QSeries<Rational> {
    triangular_unit(order).pow(8).shift(1)
}

/// Names of the single series the catalog can build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKey {
    G(u32),
    G2Tau(u32),
    GIinf(u32),
    G0(u32),
    Phi(u32),
    F(Parity, u32),
    FBar(Parity, u32),
}

impl SeriesKey {
    pub fn build(self, order: usize) -> QSeries<ExtScalar> {
        match self {
            SeriesKey::G(k) => g(k, order),
            SeriesKey::G2Tau(k) => g_2tau(k, order),
            SeriesKey::GIinf(k) => g_iinf(k, order),
            SeriesKey::G0(k) => g_0(k, order),
            SeriesKey::Phi(k) => phi(k, order).to_ext(),
            SeriesKey::F(p, r) => f_parity(p, r, order).to_ext(),
            SeriesKey::FBar(p, s) => fbar_parity(p, s, order).to_ext(),
        }
    }
}

/// Memo of built series keyed by name, parameters and order.
///
/// Lookups lock an internal mutex, so one catalog can be shared by threads.
#[derive(Debug, Default)]
pub struct SeriesCatalog {
    memo: Mutex<HashMap<(SeriesKey, usize), Arc<QSeries<ExtScalar>>>>,
}

impl SeriesCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: SeriesKey, order: usize) -> Arc<QSeries<ExtScalar>> {
        if let Some(s) = self.memo.lock().expect("catalog poisoned").get(&(key, order)) {
            return Arc::clone(s);
        }
        // Built outside the lock; a racing insert of the same key is harmless.
        let built = Arc::new(key.build(order));
        Arc::clone(
            self.memo
                .lock()
                .expect("catalog poisoned")
                .entry((key, order))
                .or_insert(built),
        )
    }

    pub fn len(&self) -> usize {
        self.memo.lock().expect("catalog poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::{sigma_0cusp, sigma_iinf};
    use crate::exact::rat;

    fn ext(r: Rational) -> ExtScalar {
        ExtScalar::rational(r)
    }

    #[test]
    fn phi_examples() {
        let p1 = phi(1, 10);
        assert!((1..=10).all(|u| p1.coeff(u) == &int(-1)));
        assert_eq!(p1.coeff(0), &int(0));
        assert_eq!(phi(2, 10).coeff(7), &int(7));
        assert_eq!(phi(3, 10).coeff(2), &int(-2));
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_parity(Parity::Even, 1, 5).coeff(1), &int(0));
        assert_eq!(f_parity(Parity::Odd, 1, 5).coeff(2), &int(-1));
        let f4 = f_parity(Parity::Odd, 4, 30);
        for n in 1..=30 {
            assert_eq!(f4.coeff(n), &(Rational::from_integer(sigma_0cusp(3, n as u64)) / int(6)));
        }
        assert_eq!(f4.coeff(2), &rat(4, 3));
    }

    #[test]
    fn fbar_examples() {
        assert_eq!(fbar_parity(Parity::Odd, 0, 10).coeff(6), &int(4));
        assert_eq!(fbar_parity(Parity::Even, 0, 10).coeff(1), &int(0));
        assert_eq!(fbar_parity(Parity::Odd, 1, 10).coeff(2), &int(-2));
        assert_eq!(fbar_parity(Parity::Even, 1, 10).coeff(2), &int(-2));
    }

    #[test]
    fn g_examples() {
        let g4 = g(4, 10);
        assert_eq!(g4.coeff(0), &ext(rat(1, 1440)));
        assert_eq!(g4.coeff(1), &ext(rat(1, 6)));
        assert_eq!(g(3, 5).coeff(0), &zeta_tilde(3));
        assert_eq!(g_0(4, 10).coeff(2), &ext(rat(4, 3)));
        assert_eq!(g_iinf(4, 10).coeff(0), &ext(rat(1, 1536)));
        for k in 1..=12 {
            assert!(g_0(k, 6).coeff(0).is_zero(), "k={k}");
        }
    }

    #[test]
    fn cusp_series_match_divisor_forms() {
        let order = 60;
        for k in (4..=16u32).step_by(2) {
            let fact = factorial_rat(k as u64 - 1);
            let g0 = g_0_rational(k, order);
            let gi = g_iinf_rational(k, order);
            let norm_i = pow2(k as i64) * &fact;
            for n in 0..=order {
                let s0 = if n == 0 {
                    int(0)
                } else {
                    Rational::from_integer(sigma_0cusp(k - 1, n as u64)) / &fact
                };
                assert_eq!(g0.coeff(n), &s0, "G0 k={k} n={n}");
                assert_eq!(gi.coeff(n), &(sigma_iinf(k - 1, n as u64) / &norm_i), "Gi k={k} n={n}");
            }
        }
    }

    #[test]
    fn f_odd_is_g0_for_all_weights() {
        for k in 1..=12 {
            assert_eq!(g_0(k, 40), f_parity(Parity::Odd, k, 40).to_ext(), "k={k}");
        }
    }

    #[test]
    fn derivatives_are_fbar() {
        for k in 1..=10u32 {
            let kk = int(k as i64);
            assert_eq!(
                g_0(k, 30).qderive(),
                fbar_parity(Parity::Odd, k, 30).scale(&kk).to_ext(),
                "k={k}"
            );
            assert_eq!(
                g_2tau(k, 30).qderive(),
                fbar_parity(Parity::Even, k, 30).scale(&kk).to_ext(),
                "k={k}"
            );
        }
    }

    #[test]
    fn g_2tau_is_zeta_plus_f_even() {
        for k in 1..=9 {
            let f = f_parity(Parity::Even, k, 30).to_ext();
            assert_eq!(g_2tau(k, 30), &QSeries::constant(zeta_tilde(k), 30) + &f);
        }
    }

    #[test]
    fn theta_blocks() {
        assert_eq!(theta_unit(10).coeff(4), &int(2));
        let t = t8(10);
        assert_eq!(t.coeff(0), &int(0));
        assert_eq!(t.coeff(1), &int(1));
        assert_eq!(t.coeff(2), &int(8));
    }

    #[test]
    fn theta_squared_matches_lattice_enumeration() {
        let t2 = theta_unit(50).pow(2);
        for n in 0..=50i64 {
            let mut count = 0;
            for x in -8i64..=8 {
                for y in -8i64..=8 {
                    if x * x + y * y == n {
                        count += 1;
                    }
                }
            }
            assert_eq!(t2.coeff(n as usize), &int(count), "n={n}");
        }
    }

    #[test]
    fn catalog_memo_is_identical_to_fresh() {
        let cat = SeriesCatalog::new();
        let a = cat.get(SeriesKey::G0(6), 20);
        let b = cat.get(SeriesKey::G0(6), 20);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, g_0(6, 20));
        assert_eq!(cat.len(), 1);
        std::thread::scope(|s| {
            for k in 1..=4 {
                let cat = &cat;
                s.spawn(move || assert_eq!(*cat.get(SeriesKey::FBar(Parity::Odd, k), 15), SeriesKey::FBar(Parity::Odd, k).build(15)));
            }
        });
        assert_eq!(cat.len(), 5);
    }
}
