//! Double-precision evaluation: Hurwitz zeta, truncated lattice sums for the
//! double Eisenstein series, and q-expansions at a point of the upper half
//! plane.
//!
//! Lattice sums are taken over a box (or diamond) in `m`. With tail
//! correction on, every inner sum over `n` is completed to all of `Z` by
//! Hurwitz zeta values, so the only remaining truncation is in `m`, which
//! decays like `|q|^M`.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::double::{z_double, ParityPair};
use crate::eisenstein::{t8, theta_unit, Parity};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial_rat, to_f64, Rational};
use crate::qseries::QSeries;
use crate::report::VerificationReport;
use crate::zeta_ext::ExtScalar;

/// Compensated complex summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: C64,
    carry: C64,
}

impl Kahan {
    pub fn add(&mut self, x: C64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> C64 {
        self.sum
    }
}

impl FromIterator<C64> for Kahan {
    fn from_iter<I: IntoIterator<Item = C64>>(iter: I) -> Self {
        let mut k = Kahan::default();
        iter.into_iter().for_each(|x| k.add(x));
        k
    }
}

fn inv_pow(w: C64, k: u32) -> C64 {
    w.inv().powu(k)
}

/// Where Euler–Maclaurin takes over from explicit summation.
const SHIFT: f64 = 24.0;
const EM_TERMS: usize = 12;

/// `hurwitz(s, w) ≈ Σ c·w^{-e}` for large `|w|`, as `(e, c)` pairs.
fn asymptotic_terms(s: u32) -> Vec<(u32, f64)> {
    let mut out = vec![(s - 1, 1.0 / (s - 1) as f64), (s, 0.5)];
    // rising factorial (s)_{2j-1}
    let mut rising = s as f64;
    for j in 1..=EM_TERMS {
        let b = to_f64(&(bernoulli(2 * j) / factorial_rat(2 * j as u64)));
        out.push((s + 2 * j as u32 - 1, b * rising));
        rising *= (s + 2 * j as u32 - 1) as f64 * (s + 2 * j as u32) as f64;
    }
    out
}

/// `Σ_{k≥0} (a+k)^{-s}` for integer `s ≥ 2`; `a` must avoid `0, -1, -2, …`.
pub fn hurwitz(s: u32, a: C64) -> C64 {
    assert!(s >= 2, "hurwitz zeta needs s >= 2");
    let mut acc = Kahan::default();
    let mut w = a;
    while w.re < SHIFT || w.norm() < SHIFT {
        acc.add(inv_pow(w, s));
        w += 1.0;
    }
    for (e, c) in asymptotic_terms(s) {
        acc.add(inv_pow(w, e) * c);
    }
    acc.value()
}

/// `ζ(s)` for integer `s ≥ 2`.
pub fn zeta(s: u32) -> f64 {
    hurwitz(s, C64::new(1.0, 0.0)).re
}

/// `(2πi)^{-k}`.
fn two_pi_i_pow(k: i32) -> C64 {
    C64::new(0.0, 2.0 * PI).powi(-k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationShape {
    /// `|m|, |n| ≤ M`
    Box,
    /// `|m| + |n| ≤ M`
    Diamond,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeTruncation {
    pub m_max: usize,
    pub tau: C64,
    pub shape: TruncationShape,
    /// Complete each sum over `n` with Hurwitz zeta tails.
    pub tail_correction: bool,
}

impl LatticeTruncation {
    pub fn new(m_max: usize, tau: C64) -> Result<Self> {
        if m_max < 1 {
            return Err(Error::InvalidArgument("lattice bound must be >= 1".into()));
        }
        if !(tau.im > 0.0) {
            return Err(Error::InvalidArgument(format!("Im tau = {} must be positive", tau.im)));
        }
        Ok(LatticeTruncation {
            m_max,
            tau,
            shape: TruncationShape::Box,
            tail_correction: true,
        })
    }

    pub fn raw(self) -> Self {
        LatticeTruncation {
            tail_correction: false,
            ..self
        }
    }

    pub fn diamond(self) -> Self {
        LatticeTruncation {
            shape: TruncationShape::Diamond,
            ..self
        }
    }

    /// Bound on `|n|` in row `m`.
    fn n_bound(&self, m: usize) -> usize {
        match self.shape {
            TruncationShape::Box => self.m_max,
            TruncationShape::Diamond => self.m_max - m,
        }
    }
}

/// `Σ_{|n|≤b} (z+n)^{-r}`, completed to `n ∈ Z` when `tails` is set.
fn row_sum(r: u32, z: C64, b: usize, tails: bool) -> C64 {
    let mut acc: Kahan = (-(b as i64)..=b as i64).map(|n| inv_pow(z + n as f64, r)).collect();
    if tails {
        let far = b as f64 + 1.0;
        acc.add(hurwitz(r, z + far));
        let lower = hurwitz(r, far - z);
        acc.add(if r % 2 == 0 { lower } else { -lower });
    }
    acc.value()
}

/// `Σ_{j≥0} w_j^{-s} hurwitz(r, w_j + shift)` with `w_j = start + j`.
/// Far terms use the asymptotic expansion of the Hurwitz factor, which turns
/// the remainder into a short combination of Hurwitz values.
fn paired_tail(r: u32, s: u32, start: C64, shift: f64) -> C64 {
    let mut acc = Kahan::default();
    let mut w = start;
    while w.re < 2.0 * SHIFT || w.norm() < 2.0 * SHIFT {
        acc.add(inv_pow(w, s) * hurwitz(r, w + shift));
        w += 1.0;
    }
    for (e, c) in asymptotic_terms(r) {
        // hurwitz(r, w+1) = hurwitz(r, w) - w^{-r}
        let c = if shift == 1.0 && e == r { c - 1.0 } else { c };
        acc.add(hurwitz(s + e, w) * c);
    }
    acc.value()
}

/// `Σ_{n>n'} (z+n)^{-r} (z+n')^{-s}` over `|n|, |n'| ≤ b` (or all of `Z` with tails).
fn diagonal_sum(r: u32, s: u32, z: C64, b: usize, tails: bool) -> C64 {
    let bi = b as i64;
    // h = Σ_{n'<n≤b} (z+n)^{-r}, plus the part beyond b when completing
    let mut h = if tails { hurwitz(r, z + (b as f64 + 1.0)) } else { C64::new(0.0, 0.0) };
    let mut acc = Kahan::default();
    for n2 in (-bi..=bi).rev() {
        acc.add(inv_pow(z + n2 as f64, s) * h);
        h += inv_pow(z + n2 as f64, r);
    }
    if tails {
        let far = b as f64 + 1.0;
        acc.add(paired_tail(r, s, z + far, 1.0));
        // n' < -b: H(n') = F(z) - (-1)^r hurwitz(r, -n'-z)
        let full = row_sum(r, z, b, true);
        let sign_s = if s % 2 == 0 { 1.0 } else { -1.0 };
        let sign_rs = if (r + s) % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(full * hurwitz(s, far - z) * sign_s);
        acc.add(-paired_tail(r, s, far - z, 0.0) * sign_rs);
    }
    acc.value()
}

fn parity_rows(p: Parity, m_max: usize) -> impl Iterator<Item = usize> {
    (1..=m_max).filter(move |&m| p.contains(m as u64))
}

/// `(2πi)^{-r-s} Σ_{λ>μ>0} λ^{-r} μ^{-s}` over the truncated lattice, with
/// `λ = mτ+n`, `μ = m'τ+n'` and `m`, `m'` restricted by `pp`.
pub fn lattice_double_sum(pp: ParityPair, r: u32, s: u32, trunc: &LatticeTruncation) -> Result<C64> {
    if r < 3 || s < 2 {
        return Err(Error::InvalidArgument(format!(
            "lattice sum needs r >= 3 and s >= 2, got ({r}, {s})"
        )));
    }
    let (a, c) = (pp.first(), pp.second());
    let tau = trunc.tau;
    let tails = trunc.tail_correction;
    let m_max = trunc.m_max;
    let row = |k: u32, m: usize| row_sum(k, tau * m as f64, trunc.n_bound(m), tails);

    let rows_r: Vec<C64> = (0..=m_max)
        .into_par_iter()
        .map(|m| if m > 0 && a.contains(m as u64) { row(r, m) } else { C64::new(0.0, 0.0) })
        .collect();
    let rows_s: Vec<C64> = (0..=m_max)
        .into_par_iter()
        .map(|m| if m > 0 && c.contains(m as u64) { row(s, m) } else { C64::new(0.0, 0.0) })
        .collect();

    let mut total = Kahan::default();
    // m > m' > 0
    let mut prefix = Kahan::default();
    for m in 1..=m_max {
        if a.contains(m as u64) {
            total.add(rows_r[m] * prefix.value());
        }
        if c.contains(m as u64) {
            prefix.add(rows_s[m]);
        }
    }
    // m > m' = 0
    if c == Parity::Even {
        let b = trunc.n_bound(0);
        let mut zero_row: Kahan = (1..=b).map(|n| C64::new((n as f64).powi(-(s as i32)), 0.0)).collect();
        if tails {
            zero_row.add(hurwitz(s, C64::new(b as f64 + 1.0, 0.0)));
        }
        let all_r: Kahan = parity_rows(a, m_max).map(|m| rows_r[m]).collect();
        total.add(zero_row.value() * all_r.value());
    }
    // m = m' > 0
    if a == c {
        let diag: Vec<C64> = parity_rows(a, m_max)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|m| diagonal_sum(r, s, tau * m as f64, trunc.n_bound(m), tails))
            .collect();
        diag.into_iter().for_each(|d| total.add(d));
    }
    Ok(total.value() * two_pi_i_pow((r + s) as i32))
}

/// Numeric value of `ζ̃(p) = (2πi)^{-p} ζ(p)`.
pub fn zeta_tilde_numeric(p: u32) -> C64 {
    if p == 1 {
        return C64::new(0.0, 0.0);
    }
    two_pi_i_pow(p as i32) * zeta(p)
}

fn ext_value(c: &ExtScalar) -> C64 {
    let mut v = C64::new(to_f64(c.rational_part()), 0.0);
    for (&p, k) in c.symbolic_part() {
        v += zeta_tilde_numeric(p) * to_f64(k);
    }
    v
}

/// `Σ_n c_n q^n` with `q = e^{2πiτ}` and `z_p ↦ ζ̃(p)`.
pub fn evaluate_ext(series: &QSeries<ExtScalar>, tau: C64) -> C64 {
    evaluate_with(series.coeffs().iter().map(ext_value), tau)
}

pub fn evaluate_rational(series: &QSeries<Rational>, tau: C64) -> C64 {
    evaluate_with(series.coeffs().iter().map(|c| C64::new(to_f64(c), 0.0)), tau)
}

fn evaluate_with(coeffs: impl Iterator<Item = C64>, tau: C64) -> C64 {
    let q = (C64::new(0.0, 2.0 * PI) * tau).exp();
    let mut power = C64::new(1.0, 0.0);
    let mut acc = Kahan::default();
    for c in coeffs {
        acc.add(c * power);
        power *= q;
    }
    acc.value()
}

fn tau_label(tau: C64) -> String {
    format!("{}{:+}i", tau.re, tau.im)
}

/// Lattice sum against the q-expansion of `Z^{pp}_{r,s}` at `τ`.
pub fn check_prop4(pp: ParityPair, r: u32, s: u32, tau: C64, m_max: usize, order: usize, tol: f64) -> VerificationReport {
    let start = Instant::now();
    let report = VerificationReport::new("double_eisenstein_expansion")
        .param("pp", pp.label())
        .param("r", r)
        .param("s", s)
        .param("tau", tau_label(tau))
        .param("M", m_max)
        .param("order", order);
    let trunc = match LatticeTruncation::new(m_max, tau) {
        Ok(t) => t,
        Err(e) => return report.abort(e.to_string()),
    };
    let lattice = match lattice_double_sum(pp, r, s, &trunc) {
        Ok(v) => v,
        Err(e) => return report.abort(e.to_string()),
    };
    let series = evaluate_ext(&z_double(pp, r, s, order), tau);
    report
        .numeric([lattice.re, lattice.im], [series.re, series.im], tol)
        .with_elapsed(start.elapsed())
}

/// Smallest `Im` allowed at either end of the transformation.
pub const IM_FLOOR: f64 = 0.05;

/// `2^{8s} (2τ+1)^{-4s} T(-1/(2τ+1))^{8s} = θ(τ)^{8s}`, both sides from q-expansions.
pub fn check_transformation(s: u32, tau: C64, order: usize, tol: f64) -> VerificationReport {
    let start = Instant::now();
    let report = VerificationReport::new("transformation")
        .param("s", s)
        .param("tau", tau_label(tau))
        .param("order", order);
    let w = C64::new(1.0, 0.0) + tau * 2.0;
    let image = -w.inv();
    let weight = 4 * s;
    for (what, t) in [("tau", tau), ("-1/(2tau+1)", image)] {
        if !(t.im > IM_FLOOR) {
            return report.abort(format!("Im {what} = {:.3e} is below the floor {IM_FLOOR}", t.im));
        }
        // first omitted term, with coefficients bounded by a weight-4s divisor sum
        let q_abs = (-2.0 * PI * t.im).exp();
        let n = (order + 1) as f64;
        let omitted = q_abs.powf(n) * n.powf(weight as f64);
        if omitted > tol * 1e-3 {
            return report.abort(format!(
                "order {order} too low at Im {what} = {:.3}: omitted term ~ {omitted:.1e}",
                t.im
            ));
        }
    }
    let t8s = t8(order).pow(s);
    let lhs = evaluate_rational(&t8s, image) * w.powi(-(weight as i32)) * 2f64.powi(8 * s as i32);
    let rhs = evaluate_rational(&theta_unit(order).pow(8 * s), tau);
    report
        .numeric([lhs.re, lhs.im], [rhs.re, rhs.im], tol)
        .with_elapsed(start.elapsed())
}
