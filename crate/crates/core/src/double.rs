//! Extended double Eisenstein series `Z^{eo}_{r,s}`, `Z^{oe}_{r,s}`,
//! `Z^{oo}_{r,s}` for all `r, s ≥ 1`, and the products `P^{oe}`, `P^{oo}`.
//!
//! Each `Z` is the double `φ`-sum `f^{··}_{r,s}`, a zeta-weighted middle term
//! (absent for `eo`), and a quarter of the boundary correction `ε^{··}_{r,s}`,
//! which vanishes once `r ≥ 3` and `s ≥ 2`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::eisenstein::{fbar_parity, f_parity, g_0, g_2tau, phi_coeff, Parity};
use crate::error::{Error, Result};
use crate::exact::{binomial, int, rat, sign, Rational};
use crate::qseries::QSeries;
use crate::zeta_ext::{beta, zeta_tilde, ExtScalar};

/// The three parity combinations `(first, second)` of the lattice indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityPair {
    EvenOdd,
    OddEven,
    OddOdd,
}

impl ParityPair {
    pub const ALL: [ParityPair; 3] = [ParityPair::EvenOdd, ParityPair::OddEven, ParityPair::OddOdd];

    pub fn first(self) -> Parity {
        match self {
            ParityPair::EvenOdd => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn second(self) -> Parity {
        match self {
            ParityPair::OddEven => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ParityPair::EvenOdd => "eo",
            ParityPair::OddEven => "oe",
            ParityPair::OddOdd => "oo",
        }
    }
}

impl fmt::Display for ParityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ParityPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eo" => Ok(ParityPair::EvenOdd),
            "oe" => Ok(ParityPair::OddEven),
            "oo" => Ok(ParityPair::OddOdd),
            _ => Err(Error::Parse(format!("unknown parity pair {s:?} (expected eo|oe|oo)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleIndex {
    pub r: u32,
    pub s: u32,
}

impl DoubleIndex {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::InvalidArgument(format!("double index ({r},{s}) needs r, s >= 1")));
        }
        Ok(DoubleIndex { r, s })
    }

    pub fn weight(self) -> u32 {
        self.r + self.s
    }

    /// Inside the region where the lattice sum converges absolutely.
    pub fn is_convergent(self) -> bool {
        self.r > 2 && self.s > 1
    }
}

fn delta(a: u32, b: u32) -> bool {
    a == b
}

/// `c·f` for an exact constant `c` and a rational series `f`.
pub fn ext_times(c: &ExtScalar, f: &QSeries<Rational>) -> QSeries<ExtScalar> {
    f.map(|x| c.scale(x))
}

/// `f^{pp}_{r,s} = Σ_{m>m'>0} φ_r(mτ) φ_s(m'τ)` with `m`, `m'` in the parity
/// classes of `pp`, by direct enumeration of `u·m + v·m' = n`.
pub fn f_double(pp: ParityPair, r: u32, s: u32, order: usize) -> QSeries<Rational> {
    assert!(r >= 1 && s >= 1);
    let n_max = order as u64;
    let phi_r: Vec<Rational> = (0..=n_max).map(|u| if u == 0 { Rational::zero() } else { phi_coeff(r, u) }).collect();
    let phi_s: Vec<Rational> = (0..=n_max).map(|v| if v == 0 { Rational::zero() } else { phi_coeff(s, v) }).collect();
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut m2 = pp.second().first_positive();
    while m2 < n_max {
        for v in 1..=n_max / m2 {
            let base = v * m2;
            // smallest m > m2 of the first parity
            let mut m1 = m2 + 1;
            if !pp.first().contains(m1) {
                m1 += 1;
            }
            while base + m1 <= n_max {
                for u in 1..=(n_max - base) / m1 {
                    coeffs[(u * m1 + base) as usize] += &phi_r[u as usize] * &phi_s[v as usize];
                }
                m1 += 2;
            }
        }
        m2 += 2;
    }
    QSeries::new(coeffs, order)
}

/// `α_1 = f̄^o_0`, `α_2 = -f̄^o_0`, `α_3 = 2f̄^o_0 + f̄^e_0`.
pub fn alpha(i: u32, order: usize) -> QSeries<Rational> {
    let fo = fbar_parity(Parity::Odd, 0, order);
    match i {
        1 => fo,
        2 => -fo,
        3 => &fo.scale(&int(2)) + &fbar_parity(Parity::Even, 0, order),
        _ => panic!("alpha_{i} is not defined"),
    }
}

/// `α_4 = -α_3/2`; it enters only as the `X^1` coefficient of the one-variable
/// generating series `Σ_r Z^o_r X^{r-1} + α_4 X`.
pub fn alpha4(order: usize) -> QSeries<Rational> {
    alpha(3, order).scale(&rat(-1, 2))
}

/// Boundary correction `ε^{pp}_{r,s}`.
pub fn epsilon(pp: ParityPair, r: u32, s: u32, order: usize) -> QSeries<Rational> {
    assert!(r >= 1 && s >= 1);
    let (lead, trail) = match pp {
        ParityPair::EvenOdd => (Parity::Odd, Parity::Even),
        ParityPair::OddEven => (Parity::Even, Parity::Odd),
        ParityPair::OddOdd => (Parity::Odd, Parity::Odd),
    };
    let mut e = QSeries::zero(order);
    if delta(r, 2) {
        e = &e + &fbar_parity(lead, s, order);
    }
    if delta(r, 1) {
        e = &e - &fbar_parity(lead, s - 1, order);
    }
    if delta(s, 1) {
        e = &e + &fbar_parity(trail, r - 1, order);
        if pp == ParityPair::OddOdd {
            e = &e + &f_parity(Parity::Odd, r, order).scale(&int(2));
        }
    }
    if delta(r, 1) && delta(s, 1) {
        let a = match pp {
            ParityPair::EvenOdd => alpha(1, order),
            ParityPair::OddEven => alpha(2, order),
            ParityPair::OddOdd => alpha(3, order),
        };
        e = &e + &a;
    }
    e
}

/// Weight of `ζ̃(p) f^o_h` (with `h = r + s - p`) in the odd-odd middle term:
/// `(-1)^s C(p-1, s-1) + (-1)^{p+r} C(p-1, r-1)`.
pub fn oo_middle_weight(r: u32, s: u32, p: u32) -> BigInt {
    binomial(p as u64 - 1, s as i64 - 1) * sign(s as i64)
        + binomial(p as u64 - 1, r as i64 - 1) * sign((p + r) as i64)
}

/// `Σ_{p+h=r+s, p,h≥1} w(p) c_p f^o_h` for a constant family `c_p`.
fn oo_middle<C>(r: u32, s: u32, order: usize, constant: impl Fn(u32) -> C, mut acc: QSeries<C>, times: impl Fn(&C, &QSeries<Rational>) -> QSeries<C>) -> QSeries<C>
where
    C: crate::qseries::Coefficient,
{
    let k = r + s;
    for p in 1..k {
        let w = oo_middle_weight(r, s, p);
        if w.is_zero() {
            continue;
        }
        let c = constant(p);
        if c.is_zero() {
            continue;
        }
        let term = times(&c, &f_parity(Parity::Odd, k - p, order));
        acc = &acc + &term.scale(&Rational::from_integer(w));
    }
    acc
}

/// `β^{oo}_{r,s} = Σ_{p+h=r+s} [(-1)^s C(p-1,s-1) + (-1)^{p+r} C(p-1,r-1)] β_p f^o_h`
/// with `p, h ≥ 1`.
pub fn beta_oo(r: u32, s: u32, order: usize) -> QSeries<Rational> {
    oo_middle(r, s, order, beta, QSeries::zero(order), |c, f| f.scale(c))
}

/// The zeta-weighted middle term of `Z^{oo}_{r,s}`.
pub fn zeta_oo(r: u32, s: u32, order: usize) -> QSeries<ExtScalar> {
    oo_middle(r, s, order, zeta_tilde, QSeries::zero(order), ext_times)
}

/// Builds double Eisenstein series at one truncation order, memoizing each
/// `Z^{pp}_{r,s}`.
#[derive(Debug)]
pub struct DoubleFamily {
    order: usize,
    epsilon: bool,
    memo: Mutex<HashMap<(ParityPair, u32, u32), Arc<QSeries<ExtScalar>>>>,
}

impl DoubleFamily {
    pub fn new(order: usize) -> Self {
        DoubleFamily {
            order,
            epsilon: true,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// A family whose series omit the `ε/4` corrections. Only useful to show
    /// that the corrections are needed.
    pub fn without_epsilon(order: usize) -> Self {
        DoubleFamily {
            epsilon: false,
            ..Self::new(order)
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn z(&self, pp: ParityPair, r: u32, s: u32) -> Arc<QSeries<ExtScalar>> {
        if let Some(z) = self.memo.lock().expect("memo poisoned").get(&(pp, r, s)) {
            return Arc::clone(z);
        }
        let built = Arc::new(self.build(pp, r, s));
        Arc::clone(
            self.memo
                .lock()
                .expect("memo poisoned")
                .entry((pp, r, s))
                .or_insert(built),
        )
    }

    fn build(&self, pp: ParityPair, r: u32, s: u32) -> QSeries<ExtScalar> {
        let n = self.order;
        let mut z = f_double(pp, r, s, n).to_ext();
        match pp {
            ParityPair::EvenOdd => {}
            ParityPair::OddEven => {
                z = &z + &ext_times(&zeta_tilde(s), &f_parity(Parity::Odd, r, n));
            }
            ParityPair::OddOdd => {
                z = &z + &zeta_oo(r, s, n);
            }
        }
        if self.epsilon {
            z = &z + &epsilon(pp, r, s, n).scale(&rat(1, 4)).to_ext();
        }
        z
    }
}

/// `Z^{pp}_{r,s}` truncated at `order`.
pub fn z_double(pp: ParityPair, r: u32, s: u32, order: usize) -> QSeries<ExtScalar> {
    assert!(r >= 1 && s >= 1, "double index needs r, s >= 1");
    DoubleFamily::new(order).build(pp, r, s)
}

/// `P^{oe}_{r,s} = G^0_r G_s(2τ) + δ_{r,2} G_s(2τ)'/(4s) + δ_{s,2} G^0_r'/(4r)`.
pub fn p_oe(r: u32, s: u32, order: usize) -> Result<QSeries<ExtScalar>> {
    let a = g_0(r, order);
    let b = g_2tau(s, order);
    product_with_corrections(&a, &b, r, s)
}

/// `P^{oo}_{r,s} = G^0_r G^0_s + δ_{r,2} G^0_s'/(4s) + δ_{s,2} G^0_r'/(4r)`.
pub fn p_oo(r: u32, s: u32, order: usize) -> Result<QSeries<ExtScalar>> {
    let a = g_0(r, order);
    let b = g_0(s, order);
    product_with_corrections(&a, &b, r, s)
}

fn product_with_corrections(a: &QSeries<ExtScalar>, b: &QSeries<ExtScalar>, r: u32, s: u32) -> Result<QSeries<ExtScalar>> {
    let mut p = a.try_mul(b)?;
    if r == 2 {
        p = &p + &b.qderive().scale(&rat(1, 4 * s as i64));
    }
    if s == 2 {
        p = &p + &a.qderive().scale(&rat(1, 4 * r as i64));
    }
    Ok(p)
}
