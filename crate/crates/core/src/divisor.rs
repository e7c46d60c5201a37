//! Divisor power sums and their convolutions.
//!
//! - `σ_k(n) = Σ_{d|n} d^k`
//! - `σ_k^{i∞}(n) = Σ_{d|n} (-1)^d d^k`, with `σ_k^{i∞}(0) = (1 - 2^{k+1}) B_{k+1} / (2(k+1))`
//! - `σ_k^0(n) = Σ_{d|n, n/d odd} d^k`
//! - `ρ^{i∞}_{r,s}(n) = Σ_{m=0}^{n} σ_r^{i∞}(m) σ_s^{i∞}(n-m)`
//! - `ρ^0_{r,s}(n) = Σ_{m=1}^{n-1} σ_r^0(m) σ_s^0(n-m)`

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::exact::{bernoulli, pow2, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisorFnKind {
    /// `Σ_{d|n} d^k`
    Plain,
    /// `Σ_{d|n} (-1)^d d^k`
    AlternatingIinf,
    /// `Σ_{d|n, n/d odd} d^k`
    OddCofactor0,
}

/// Divisors of `n ≥ 1` in increasing order, by trial division.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are not a finite set");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The divisor sum of the given kind at `n ≥ 1`.
pub fn divisor_sum(kind: DivisorFnKind, k: u32, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .filter(|&d| kind != DivisorFnKind::OddCofactor0 || (n / d) % 2 == 1)
        .map(|d| {
            let p: BigInt = BigInt::from(d).pow(k);
            if kind == DivisorFnKind::AlternatingIinf && d % 2 == 1 {
                -p
            } else {
                p
            }
        })
        .sum()
}

pub fn sigma(k: u32, n: u64) -> BigInt {
    divisor_sum(DivisorFnKind::Plain, k, n)
}

/// `σ_k^{i∞}(n)`, including the rational constant at `n = 0`.
pub fn sigma_iinf(k: u32, n: u64) -> Rational {
    if n == 0 {
        // (1 - 2^{k+1}) B_{k+1} / (2(k+1))
        let b = bernoulli(k as usize + 1);
        (Rational::from_integer(1.into()) - pow2(k as i64 + 1)) * b
            / Rational::from_integer(BigInt::from(2 * (k + 1)))
    } else {
        Rational::from_integer(divisor_sum(DivisorFnKind::AlternatingIinf, k, n))
    }
}

pub fn sigma_0cusp(k: u32, n: u64) -> BigInt {
    divisor_sum(DivisorFnKind::OddCofactor0, k, n)
}

/// `σ_k^{i∞}(0..=n_max)`.
pub fn sigma_iinf_table(k: u32, n_max: u64) -> Vec<Rational> {
    (0..=n_max).map(|n| sigma_iinf(k, n)).collect()
}

/// `σ_k^0(0..=n_max)` with a zero placeholder at index 0.
pub fn sigma_0cusp_table(k: u32, n_max: u64) -> Vec<BigInt> {
    std::iter::once(BigInt::zero())
        .chain((1..=n_max).map(|n| sigma_0cusp(k, n)))
        .collect()
}

pub fn rho_iinf(r: u32, s: u32, n: u64) -> Rational {
    rho_iinf_table(r, s, n).pop().expect("table has n+1 entries")
}

pub fn rho_0(r: u32, s: u32, n: u64) -> BigInt {
    rho_0_table(r, s, n).pop().expect("table has n+1 entries")
}

/// `ρ^{i∞}_{r,s}(0..=n_max)`.
pub fn rho_iinf_table(r: u32, s: u32, n_max: u64) -> Vec<Rational> {
    let a = sigma_iinf_table(r, n_max);
    let b = if r == s { a.clone() } else { sigma_iinf_table(s, n_max) };
    (0..=n_max as usize)
        .map(|n| (0..=n).map(|m| &a[m] * &b[n - m]).sum())
        .collect()
}

/// `ρ^0_{r,s}(0..=n_max)`; entries 0 and 1 are empty sums.
pub fn rho_0_table(r: u32, s: u32, n_max: u64) -> Vec<BigInt> {
    let a = sigma_0cusp_table(r, n_max);
    let b = if r == s { a.clone() } else { sigma_0cusp_table(s, n_max) };
    (0..=n_max as usize)
        .map(|n| (1..n).map(|m| &a[m] * &b[n - m]).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1, 6), big(12));
        assert_eq!(sigma(3, 1), big(1));
        assert_eq!(sigma(3, 2), big(9));
    }

    #[test]
    fn sigma_iinf_examples() {
        assert_eq!(sigma_iinf(3, 0), rat(1, 16));
        assert_eq!(sigma_iinf(3, 1), rat(-1, 1));
        assert_eq!(sigma_iinf(3, 2), rat(7, 1));
    }

    #[test]
    fn sigma_0cusp_examples() {
        assert_eq!(sigma_0cusp(3, 2), big(8));
        assert_eq!(sigma_0cusp(3, 1), big(1));
        assert_eq!(sigma_0cusp(3, 4), big(64));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_iinf(3, 3, 0), rat(1, 256));
        assert_eq!(rho_iinf(3, 3, 1), rat(-1, 8));
        assert_eq!(rho_iinf(3, 3, 2), rat(15, 8));
        assert_eq!(rho_0(3, 3, 1), big(0));
        assert_eq!(rho_0(3, 3, 2), big(1));
        assert_eq!(rho_0(3, 3, 3), big(16));
        assert_eq!(rho_0(3, 3, 0), big(0));
    }

    #[test]
    fn twisted_sums_relate_to_plain_sigma() {
        for k in 0..=9u32 {
            for n in 1..=200u64 {
                let half = if n % 2 == 0 { sigma(k, n / 2) } else { big(0) };
                let expected_iinf = (BigInt::from(1) << (k + 1)) * &half - sigma(k, n);
                assert_eq!(sigma_iinf(k, n), Rational::from_integer(expected_iinf), "k={k} n={n}");
                assert_eq!(sigma_0cusp(k, n), sigma(k, n) - &half, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn rho_is_symmetric() {
        for (r, s) in [(3, 5), (1, 7), (9, 3)] {
            for n in 0..=25 {
                assert_eq!(rho_iinf(r, s, n), rho_iinf(s, r, n));
                assert_eq!(rho_0(r, s, n), rho_0(s, r, n));
            }
        }
    }
}
