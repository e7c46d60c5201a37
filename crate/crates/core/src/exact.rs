//! Arithmetic substrate: exact rationals, Bernoulli numbers, factorials and
//! binomial coefficients.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! normalized (`gcd(num, den) = 1`, `den > 0`). Its `Display`/`FromStr` give
//! the `"p/q"` / `"p"` encoding used by every emitter in the crate.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `2^e` for any integer `e`.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// `(-1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Bernoulli number `B_k` with `B_1 = -1/2`.
///
/// Values are memoized in a process-wide table guarded by a lock; the table
/// grows on demand through `Σ_{j=0}^{k} C(k+1, j) B_j = 0`.
pub fn bernoulli(k: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().expect("bernoulli table poisoned").get(k) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= k {
        let m = table.len();
        let value = if m >= 3 && m % 2 == 1 {
            Rational::zero()
        } else {
            let mut acc = Rational::zero();
            for (j, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(binomial(m as u64 + 1, j as i64));
                }
            }
            -acc / Rational::from_integer(BigInt::from(m + 1))
        };
        table.push(value);
    }
    table[k].clone()
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a possibly negative upper index is never needed; this is the
/// `i64` convenience used by index arithmetic that can go below zero.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn factorial_rat(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    // Ratio::to_f64 handles huge numerators/denominators without overflow.
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(7), rat(0, 1));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_recurrence_to_60() {
        for k in 1..=60u64 {
            let s: Rational = (0..=k)
                .map(|j| Rational::from_integer(binomial(k + 1, j as i64)) * bernoulli(j as usize))
                .sum();
            assert!(s.is_zero(), "recurrence fails at k={k}");
        }
        for k in (3..=61).step_by(2) {
            assert!(bernoulli(k).is_zero());
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(4, -1), BigInt::from(0));
    }

    #[test]
    fn binomial_matches_pascal_and_symmetry() {
        let mut row = vec![BigInt::one()];
        for n in 0..=40u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), row[k as usize]);
                assert_eq!(binomial(n, k as i64), binomial(n, (n - k) as i64));
            }
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn rational_encoding() {
        assert_eq!(rat(6, -4).to_string(), "-3/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
        assert!(parse_rational("1/0x").is_err());
        assert_eq!(pow2(-3), rat(1, 8));
    }

    #[test]
    fn bernoulli_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(20 + 2 * t)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], rat(-174611, 330));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.denom() > &BigInt::zero());
            prop_assert!(a.numer().gcd(a.denom()).is_one());
        }

        #[test]
        fn encoding_roundtrip(a in small()) {
            prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
        }
    }
}
