//! A second, deliberately naive construction of the extended double
//! Eisenstein series, used to cross-check [`crate::double`].
//!
//! The double sum is assembled as `Σ_{m'} φ_s(m'τ)·Σ_{m>m'} φ_r(mτ)` with a
//! plain convolution, and the odd-odd zeta term is taken in its unsummed
//! partial-fraction form (two binomial sums over `i` and `j`).

use num_traits::Zero;

use crate::eisenstein::Parity;
use crate::exact::{binomial, factorial_rat, rat, Rational};
use crate::qseries::QSeries;
use crate::zeta_ext::{zeta_tilde, ExtScalar};
use crate::ParityPair;

type Poly = Vec<Rational>;

/// `φ_k(mτ)` truncated at `n`.
fn phi_at(k: u32, m: usize, n: usize) -> Poly {
    let mut out = vec![Rational::zero(); n + 1];
    let norm = factorial_rat(k as u64 - 1).recip();
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let mut u = 1usize;
    while u * m <= n {
        out[u * m] = Rational::from_integer(num_bigint::BigInt::from(u).pow(k - 1) * sign) * &norm;
        u += 1;
    }
    out
}

fn add_into(acc: &mut Poly, p: &Poly, c: &Rational) {
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b * c;
    }
}

fn convolve(a: &Poly, b: &Poly) -> Poly {
    let n = a.len() - 1;
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b[..=n - i].iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn in_parity(p: Parity, m: usize) -> bool {
    (m % 2 == 1) == (p == Parity::Odd)
}

fn f_single(p: Parity, k: u32, n: usize) -> Poly {
    let mut acc = vec![Rational::zero(); n + 1];
    for m in (1..=n).filter(|&m| in_parity(p, m)) {
        add_into(&mut acc, &phi_at(k, m, n), &Rational::from_integer(1.into()));
    }
    acc
}

fn fbar_single(p: Parity, k: u32, n: usize) -> Poly {
    let mut acc = vec![Rational::zero(); n + 1];
    for m in (1..=n).filter(|&m| in_parity(p, m)) {
        add_into(&mut acc, &phi_at(k + 1, m, n), &Rational::from_integer((-(m as i64)).into()));
    }
    acc
}

fn f_pair(p1: Parity, p2: Parity, r: u32, s: u32, n: usize) -> Poly {
    let mut acc = vec![Rational::zero(); n + 1];
    for m2 in (1..=n).filter(|&m| in_parity(p2, m)) {
        let mut tail = vec![Rational::zero(); n + 1];
        for m1 in (m2 + 1..=n).filter(|&m| in_parity(p1, m)) {
            add_into(&mut tail, &phi_at(r, m1, n), &rat(1, 1));
        }
        add_into(&mut acc, &convolve(&phi_at(s, m2, n), &tail), &rat(1, 1));
    }
    acc
}

fn eps(pp: ParityPair, r: u32, s: u32, n: usize) -> Poly {
    use Parity::{Even as E, Odd as O};
    let mut e = vec![Rational::zero(); n + 1];
    let one = rat(1, 1);
    let minus = rat(-1, 1);
    let (a, b) = match pp {
        ParityPair::EvenOdd => (O, E),
        ParityPair::OddEven => (E, O),
        ParityPair::OddOdd => (O, O),
    };
    if r == 2 {
        add_into(&mut e, &fbar_single(a, s, n), &one);
    }
    if r == 1 {
        add_into(&mut e, &fbar_single(a, s - 1, n), &minus);
    }
    if s == 1 {
        add_into(&mut e, &fbar_single(b, r - 1, n), &one);
        if pp == ParityPair::OddOdd {
            add_into(&mut e, &f_single(O, r, n), &rat(2, 1));
        }
    }
    if r == 1 && s == 1 {
        let fo = fbar_single(O, 0, n);
        match pp {
            ParityPair::EvenOdd => add_into(&mut e, &fo, &one),
            ParityPair::OddEven => add_into(&mut e, &fo, &minus),
            ParityPair::OddOdd => {
                add_into(&mut e, &fo, &rat(2, 1));
                add_into(&mut e, &fbar_single(E, 0, n), &one);
            }
        }
    }
    e
}

/// `Z^{pp}_{r,s}` to order `n`, built independently of [`crate::double`].
pub fn z_double_reference(pp: ParityPair, r: u32, s: u32, n: usize) -> QSeries<ExtScalar> {
    let (p1, p2) = (pp.first(), pp.second());
    let mut out: Vec<ExtScalar> = f_pair(p1, p2, r, s, n).into_iter().map(ExtScalar::rational).collect();
    let mut add_zeta = |c: Rational, p: u32, h: u32| {
        let z = zeta_tilde(p).scale(&c);
        if z.is_zero() {
            return;
        }
        for (o, x) in out.iter_mut().zip(f_single(Parity::Odd, h, n)) {
            *o += &z.scale(&x);
        }
    };
    match pp {
        ParityPair::EvenOdd => {}
        ParityPair::OddEven => add_zeta(rat(1, 1), s, r),
        ParityPair::OddOdd => {
            let sign_s = if s % 2 == 0 { 1 } else { -1 };
            for i in 0..r.saturating_sub(1) {
                let c = Rational::from_integer(binomial((s + i - 1) as u64, i as i64) * sign_s);
                add_zeta(c, s + i, r - i);
            }
            for j in 0..s.saturating_sub(1) {
                let sign_j = if j % 2 == 0 { 1 } else { -1 };
                let c = Rational::from_integer(binomial((r + j - 1) as u64, j as i64) * sign_j);
                add_zeta(c, r + j, s - j);
            }
        }
    }
    for (o, x) in out.iter_mut().zip(eps(pp, r, s, n)) {
        *o += &ExtScalar::rational(x / rat(4, 1));
    }
    QSeries::new(out, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::DoubleFamily;

    #[test]
    fn agrees_with_library_construction() {
        let family = DoubleFamily::new(18);
        for pp in ParityPair::ALL {
            for r in 1..=6 {
                for s in 1..=6 {
                    let a = z_double_reference(pp, r, s, 18);
                    assert!(a.agrees_with(&family.z(pp, r, s)), "{pp} ({r},{s})");
                }
            }
        }
    }
}
