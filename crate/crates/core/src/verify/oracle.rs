//! Brute-force representation counts, independent of the series engine.

use num_bigint::BigInt;
use num_traits::{One, Zero};

fn convolve_power(unit: &[u64], s: u32) -> Vec<BigInt> {
    let n = unit.len();
    let mut acc = vec![BigInt::zero(); n];
    acc[0] = BigInt::one();
    for _ in 0..s {
        let mut next = vec![BigInt::zero(); n];
        for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, &u) in unit[..n - i].iter().enumerate() {
                if u != 0 {
                    next[i + j] += a * u;
                }
            }
        }
        acc = next;
    }
    acc
}

/// `r_s(n)` for `n = 0..=n_max`: `s`-fold convolution of `1 + 2Σ q^{k²}`.
pub fn r_oracle(s: u32, n_max: u64) -> Vec<BigInt> {
    let mut unit = vec![0u64; n_max as usize + 1];
    unit[0] = 1;
    let mut k = 1u64;
    while k * k <= n_max {
        unit[(k * k) as usize] = 2;
        k += 1;
    }
    convolve_power(&unit, s)
}

/// `t_s(n)` for `n = 0..=n_max`: `s`-fold convolution of `Σ q^{k(k+1)/2}`.
pub fn t_oracle(s: u32, n_max: u64) -> Vec<BigInt> {
    let mut unit = vec![0u64; n_max as usize + 1];
    let mut k = 0u64;
    while k * (k + 1) / 2 <= n_max {
        unit[(k * (k + 1) / 2) as usize] = 1;
        k += 1;
    }
    convolve_power(&unit, s)
}

fn count_tuples(s: u32, n: u64, values: &[(i64, u64)]) -> u64 {
    // values: (point, its contribution to n)
    if s == 0 {
        return u64::from(n == 0);
    }
    values
        .iter()
        .filter(|(_, w)| *w <= n)
        .map(|&(_, w)| count_tuples(s - 1, n - w, values))
        .sum()
}

/// `r_s(n)` by enumerating integer points `x ∈ Z^s` with `|x|² = n`.
pub fn r_enumerate(s: u32, n: u64) -> u64 {
    let b = (n as f64).sqrt() as i64 + 1;
    let values: Vec<(i64, u64)> = (-b..=b).map(|x| (x, (x * x) as u64)).collect();
    count_tuples(s, n, &values)
}

/// `t_s(n)` by enumerating `x ∈ Z_{≥0}^s` with `Σ x(x+1)/2 = n`.
pub fn t_enumerate(s: u32, n: u64) -> u64 {
    let values: Vec<(i64, u64)> = (0..)
        .map(|x: i64| (x, (x * (x + 1) / 2) as u64))
        .take_while(|(_, w)| *w <= n)
        .collect();
    count_tuples(s, n, &values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(r_oracle(1, 4)[4], BigInt::from(2));
        assert_eq!(r_oracle(2, 1)[1], BigInt::from(4));
        assert_eq!(r_oracle(16, 2)[2], BigInt::from(480));
        assert_eq!(t_oracle(1, 3)[3], BigInt::from(1));
        assert_eq!(t_oracle(8, 1)[1], BigInt::from(8));
        assert_eq!(t_oracle(16, 1)[1], BigInt::from(16));
    }

    #[test]
    fn convolution_matches_enumeration() {
        for s in 1..=4 {
            let r = r_oracle(s, 30);
            let t = t_oracle(s, 30);
            for n in 0..=30u64 {
                assert_eq!(r[n as usize], BigInt::from(r_enumerate(s, n)), "r_{s}({n})");
                assert_eq!(t[n as usize], BigInt::from(t_enumerate(s, n)), "t_{s}({n})");
            }
        }
    }

    #[test]
    fn jacobi_four_squares() {
        // r_4(n) = 8 Σ_{d | n, 4 ∤ d} d
        let r = r_oracle(4, 60);
        for n in 1..=60u64 {
            let sum: u64 = (1..=n).filter(|d| n % d == 0 && d % 4 != 0).sum();
            assert_eq!(r[n as usize], BigInt::from(8 * sum));
        }
    }
}
