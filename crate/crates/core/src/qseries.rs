//! Truncated formal power series in `q`.
//!
//! A [`QSeries`] stores the dense coefficients of `q^0 .. q^order`; every
//! coefficient it stores is exact. Binary operations truncate to the smaller
//! order of their operands. There is no default order: every generator takes
//! the order explicitly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{denominator_lcm, Rational};
use crate::zeta_ext::ExtScalar;

/// Scalars a [`QSeries`] can carry.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn negate(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn checked_mul(&self, other: &Self) -> Result<Self>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn checked_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
}

impl Coefficient for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn one() -> Self {
        ExtScalar::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        ExtScalar::rational(r)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        ExtScalar::scale(self, c)
    }
    fn checked_mul(&self, other: &Self) -> Result<Self> {
        ExtScalar::checked_mul(self, other)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<C> {
    // coeffs.len() == order + 1
    coeffs: Vec<C>,
}

/// Outcome of comparing two series coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// Highest exponent that was compared.
    pub order: usize,
    pub first_mismatch: Option<usize>,
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl<C: Coefficient> QSeries<C> {
    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn monomial(c: C, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        QSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    /// If `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &C {
        match self.coeffs.get(n) {
            Some(c) => c,
            None => panic!("{}", Error::BeyondOrder { requested: n, order: self.order() }),
        }
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Exponent of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&mut C, &C)) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = self.coeffs[..=order].to_vec();
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            f(a, b);
        }
        QSeries { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign_ref(&a.checked_mul(b)?);
                }
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// `self^e` by binary exponentiation.
    pub fn try_pow(&self, mut e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `q·d/dq`.
    pub fn qderive(&self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::from_integer(BigInt::from(n))))
                .collect(),
        }
    }

    /// `q → -q`, i.e. `τ → τ + 1/2`.
    pub fn subst_neg_q(&self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { c.negate() } else { c.clone() })
                .collect(),
        }
    }

    /// `q → q²`, i.e. `τ → 2τ`; the order is unchanged.
    pub fn subst_q_squared(&self) -> Self {
        self.subst_q_power(2)
    }

    /// `q → q^m` for `m ≥ 1`; the order is unchanged.
    pub fn subst_q_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution q -> q^0 is not a series map");
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * m > order {
                break;
            }
            out.coeffs[n * m] = c.clone();
        }
        out
    }

    /// Multiply by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k > order {
                break;
            }
            out.coeffs[n + k] = c.clone();
        }
        out
    }

    /// Coefficientwise comparison up to the smaller of the two orders.
    pub fn compare(&self, other: &Self) -> Comparison {
        let order = self.order().min(other.order());
        Comparison {
            order,
            first_mismatch: (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n]),
        }
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.compare(other).is_equal()
    }
}

impl QSeries<Rational> {
    pub fn to_ext(&self) -> QSeries<ExtScalar> {
        self.map(|c| ExtScalar::rational(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn scaled_integers(&self, order: usize) -> (BigInt, Vec<BigInt>) {
        let den = denominator_lcm(&self.coeffs[..=order]);
        let ints = self.coeffs[..=order]
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (den, ints)
    }
}

impl QSeries<ExtScalar> {
    /// The series as a rational series, if no coefficient carries a symbol.
    pub fn to_rational(&self) -> Option<QSeries<Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(QSeries { coeffs })
    }

    /// Largest odd zeta symbol appearing anywhere in the series.
    pub fn max_symbol(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(|c| c.max_symbol()).max()
    }
}

impl<C: Coefficient> Add for &QSeries<C> {
    type Output = QSeries<C>;
    fn add(self, rhs: &QSeries<C>) -> QSeries<C> {
        self.zip_with(rhs, |a, b| a.add_assign_ref(b))
    }
}

impl<C: Coefficient> Sub for &QSeries<C> {
    type Output = QSeries<C>;
    fn sub(self, rhs: &QSeries<C>) -> QSeries<C> {
        self.zip_with(rhs, |a, b| a.sub_assign_ref(b))
    }
}

impl<C: Coefficient> Add for QSeries<C> {
    type Output = QSeries<C>;
    fn add(self, rhs: QSeries<C>) -> QSeries<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for QSeries<C> {
    type Output = QSeries<C>;
    fn sub(self, rhs: QSeries<C>) -> QSeries<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Neg for &QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        self.map(|c| c.negate())
    }
}

impl<C: Coefficient> Neg for QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        -&self
    }
}

impl Mul for &QSeries<Rational> {
    type Output = QSeries<Rational>;

    /// Cauchy product over `Q`, done as an integer convolution after clearing
    /// denominators.
    fn mul(self, rhs: &QSeries<Rational>) -> QSeries<Rational> {
        let order = self.order().min(rhs.order());
        let (da, a) = self.scaled_integers(order);
        let (db, b) = rhs.scaled_integers(order);
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[..=order - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        QSeries {
            coeffs: out
                .into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        }
    }
}

impl Mul for QSeries<Rational> {
    type Output = QSeries<Rational>;
    fn mul(self, rhs: QSeries<Rational>) -> QSeries<Rational> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn series(c: &[i64], order: usize) -> QSeries<Rational> {
        QSeries::new(c.iter().map(|&x| int(x)).collect(), order)
    }

    fn theta_unit(order: usize) -> QSeries<Rational> {
        QSeries::from_fn(order, |n| {
            let r = (n as f64).sqrt().round() as usize;
            if n == 0 {
                int(1)
            } else if r * r == n {
                int(2)
            } else {
                int(0)
            }
        })
    }

    #[test]
    fn difference_of_squares() {
        let p = &series(&[1, 1], 5) * &series(&[1, -1], 5);
        assert_eq!(p, series(&[1, 0, -1], 5));
    }

    #[test]
    fn geometric_inverse() {
        let g = QSeries::from_fn(6, |_| int(1));
        assert_eq!(&g * &series(&[1, -1], 6), QSeries::one(6));
    }

    #[test]
    fn theta_squared_counts_two_squares() {
        let t = theta_unit(10);
        assert_eq!((&t * &t).coeff(1), &int(4));
        assert_eq!(t.pow(8).coeff(1), &int(16));
    }

    #[test]
    fn pow_examples() {
        let a = series(&[1, 1], 10);
        assert_eq!(a.pow(0), QSeries::one(10));
        assert_eq!(a.pow(4).coeff(2), &int(6));
        assert_eq!(a.try_pow(4).unwrap(), a.pow(4));
    }

    #[test]
    fn qderive_examples() {
        assert_eq!(series(&[1, 0, 3], 4).qderive(), series(&[0, 0, 6], 4));
        assert!(series(&[7], 4).qderive().is_zero());
    }

    #[test]
    fn substitutions() {
        assert_eq!(series(&[1, 1, 1], 4).subst_neg_q(), series(&[1, -1, 1], 4));
        assert_eq!(series(&[1, 1], 4).subst_q_squared(), series(&[1, 0, 1], 4));
        assert_eq!(series(&[1, 2, 3], 4).subst_q_squared().order(), 4);
        let t16 = theta_unit(5).pow(16).subst_neg_q();
        assert_eq!(t16.coeff(1), &int(-32));
        assert_eq!(series(&[1, 2], 4).shift(3), series(&[0, 0, 0, 1, 2], 4));
    }

    #[test]
    fn orders_take_minimum() {
        let a = series(&[1, 2, 3], 7);
        let b = series(&[1], 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.compare(&b).order, 3);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coefficient_beyond_order_panics() {
        series(&[1], 2).coeff(3);
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let a = series(&[1, 2, 3, 4], 6);
        let b = series(&[1, 2, 5, 4], 6);
        let c = a.compare(&b);
        assert_eq!(c.first_mismatch, Some(2));
        assert_eq!(c.order, 6);
    }

    #[test]
    fn ext_series_propagates_symbolic_product_error() {
        let z3 = QSeries::constant(crate::zeta_ext::zeta_tilde(3), 3);
        assert!(z3.try_mul(&z3).is_err());
        let half = QSeries::constant(ExtScalar::rational(rat(1, 2)), 3);
        assert_eq!(
            z3.try_mul(&half).unwrap().coeff(0),
            &ExtScalar::symbol(3, rat(1, 2))
        );
    }

    fn arb_series(order: usize) -> impl Strategy<Value = QSeries<Rational>> {
        prop::collection::vec((-20i64..20, 1i64..6), order + 1)
            .prop_map(move |v| QSeries::new(v.into_iter().map(|(n, d)| rat(n, d)).collect(), order))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(a in arb_series(30), b in arb_series(30), c in arb_series(30)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(a.try_mul(&b).unwrap(), &a * &b);
        }

        #[test]
        fn qderive_is_a_derivation(a in arb_series(30), b in arb_series(30)) {
            let lhs = (&a * &b).qderive();
            let rhs = &(&a.qderive() * &b) + &(&a * &b.qderive());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn neg_q_is_an_involution(a in arb_series(30)) {
            prop_assert_eq!(a.subst_neg_q().subst_neg_q(), a.clone());
            prop_assert_eq!((&a * &a).subst_neg_q(), &a.subst_neg_q() * &a.subst_neg_q());
        }
    }
}
