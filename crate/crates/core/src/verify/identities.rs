//! Exact identity checks: the double shuffle relations, the summation
//! formula, the `G^0 G^{i∞}` product identity and the partial fraction
//! decomposition behind the diagonal lattice term.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};

use crate::double::{alpha4, p_oe, p_oo, DoubleFamily, ParityPair};
use crate::eisenstein::{fbar_parity, g_0, g_2tau, g_iinf, Parity};
use crate::error::Error;
use crate::exact::{binomial, pow2, rat, Rational};
use crate::qseries::QSeries;
use crate::report::{Convention, VerificationReport};
use crate::zeta_ext::ExtScalar;

/// Which of the two double shuffle relations to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShuffleKind {
    /// `Z^o_r Z^e_s`
    OddEven,
    /// `Z^o_r Z^o_s`
    OddOdd,
}

impl ShuffleKind {
    pub const ALL: [ShuffleKind; 2] = [ShuffleKind::OddEven, ShuffleKind::OddOdd];

    pub fn label(self) -> &'static str {
        match self {
            ShuffleKind::OddEven => "oe",
            ShuffleKind::OddOdd => "oo",
        }
    }
}

impl fmt::Display for ShuffleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ShuffleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oe" => Ok(ShuffleKind::OddEven),
            "oo" => Ok(ShuffleKind::OddOdd),
            _ => Err(Error::Parse(format!("unknown shuffle kind {s:?} (expected oe|oo)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShuffleOptions {
    pub convention: Convention,
    /// Add `α_4` to `Z^o_2` in the odd-odd relation at `r = s = 1`.
    pub alpha4: bool,
}

impl Default for ShuffleOptions {
    fn default() -> Self {
        ShuffleOptions {
            convention: Convention::Ge1,
            alpha4: true,
        }
    }
}

/// The three members of one shuffle relation, each an exact series.
#[derive(Clone, Debug)]
pub struct ShuffleSides {
    /// product side including the `f̄/4` corrections
    pub product: QSeries<ExtScalar>,
    /// `P^{oe}_{r,s}` or `P^{oo}_{r,s}` built from `G^0`, `G(2τ)` and derivatives
    pub p_series: QSeries<ExtScalar>,
    pub stuffle: QSeries<ExtScalar>,
    pub shuffle: QSeries<ExtScalar>,
}

fn weighted(family: &DoubleFamily, terms: impl Iterator<Item = (Rational, ParityPair, u32, u32)>) -> QSeries<ExtScalar> {
    terms
        .filter(|(c, ..)| !c.is_zero())
        .fold(QSeries::zero(family.order()), |acc, (c, pp, i, j)| &acc + &family.z(pp, i, j).scale(&c))
}

fn binom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n as u64, k as i64))
}

pub fn shuffle_sides(family: &DoubleFamily, kind: ShuffleKind, r: u32, s: u32, opts: ShuffleOptions) -> ShuffleSides {
    assert!(r >= 1 && s >= 1);
    let n = family.order();
    let k = r + s;
    let quarter = rat(1, 4);
    let zo_r = g_0(r, n);
    let lo = opts.convention.lower();
    let split = move || (lo..=k.saturating_sub(lo)).map(move |i| (i, k - i));
    let (second_parity, second, p_series) = match kind {
        ShuffleKind::OddEven => (Parity::Even, g_2tau(s, n), p_oe(r, s, n)),
        ShuffleKind::OddOdd => (Parity::Odd, g_0(s, n), p_oo(r, s, n)),
    };
    let mut product = zo_r.try_mul(&second).expect("G^0_r is rational");
    if r == 2 {
        product = &product + &fbar_parity(second_parity, s, n).scale(&quarter).to_ext();
    }
    if s == 2 {
        product = &product + &fbar_parity(Parity::Odd, r, n).scale(&quarter).to_ext();
    }
    let (stuffle, shuffle) = match kind {
        ShuffleKind::OddEven => (
            &*family.z(ParityPair::OddEven, r, s) + &*family.z(ParityPair::EvenOdd, s, r),
            weighted(
                family,
                split()
                    .map(|(i, j)| (binom(i - 1, r - 1), ParityPair::OddEven, i, j))
                    .chain(split().map(|(i, j)| (binom(i - 1, s - 1), ParityPair::OddOdd, i, j))),
            ),
        ),
        ShuffleKind::OddOdd => {
            let mut single = g_0(k, n);
            if k == 2 && opts.alpha4 {
                single = &single + &alpha4(n).to_ext();
            }
            (
                &(&*family.z(ParityPair::OddOdd, r, s) + &*family.z(ParityPair::OddOdd, s, r)) + &single,
                weighted(
                    family,
                    split().map(|(i, j)| (binom(i - 1, r - 1) + binom(i - 1, s - 1), ParityPair::EvenOdd, i, j)),
                ),
            )
        }
    };
    ShuffleSides {
        product,
        p_series: p_series.expect("one factor is rational"),
        stuffle,
        shuffle,
    }
}

/// Both equalities of one double shuffle relation, plus agreement of the
/// product side with `P^{oe}_{r,s}` / `P^{oo}_{r,s}`.
pub fn check_shuffle(kind: ShuffleKind, r: u32, s: u32, order: usize, convention: Convention) -> VerificationReport {
    check_shuffle_in(
        &DoubleFamily::new(order),
        kind,
        r,
        s,
        ShuffleOptions {
            convention,
            ..ShuffleOptions::default()
        },
    )
}

pub fn check_shuffle_in(family: &DoubleFamily, kind: ShuffleKind, r: u32, s: u32, opts: ShuffleOptions) -> VerificationReport {
    let start = Instant::now();
    let sides = shuffle_sides(family, kind, r, s, opts);
    let symbols: Vec<u32> = sides
        .stuffle
        .coeffs()
        .iter()
        .flat_map(|c| c.symbolic_part().keys().copied())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut report = VerificationReport::new("double_shuffle")
        .param("kind", kind.label())
        .param("r", r)
        .param("s", s)
        .param("order", family.order())
        .param("symbols", symbols)
        .with_convention(opts.convention);
    if kind == ShuffleKind::OddOdd && r + s == 2 && opts.alpha4 {
        report = report.with_note("alpha_4 added to the weight-2 single term");
    }
    report
        .exact("product", &sides.product, &sides.p_series)
        .exact("stuffle", &sides.product, &sides.stuffle)
        .exact("shuffle", &sides.stuffle, &sides.shuffle)
        .with_elapsed(start.elapsed())
}

/// `(1/4) G^0_k = Σ_{r even, 2 ≤ r ≤ k-2} Z^{oo}_{r,k-r}`.
pub fn check_summation(k: u32, order: usize) -> VerificationReport {
    let rs: Vec<u32> = (2..=k.saturating_sub(2)).step_by(2).collect();
    check_summation_over(k, order, &rs)
}

/// The summation formula with the sum taken over an explicit list of `r`.
pub fn check_summation_over(k: u32, order: usize, rs: &[u32]) -> VerificationReport {
    let start = Instant::now();
    let report = VerificationReport::new("summation").param("k", k).param("order", order);
    if k < 4 || k % 2 == 1 {
        return report.abort(format!("k = {k}; need even k >= 4"));
    }
    let family = DoubleFamily::new(order);
    let lhs = g_0(k, order).scale(&rat(1, 4));
    let rhs = weighted(
        &family,
        rs.iter().filter(|&&r| r >= 1 && r < k).map(|&r| (Rational::one(), ParityPair::OddOdd, r, k - r)),
    );
    report.exact("summation", &lhs, &rhs).with_elapsed(start.elapsed())
}

/// `G^0_r G^{i∞}_s = 2^{-s}((2^s - 1) P^{oe}_{r,s} - P^{oo}_{r,s})` for even `r, s ≥ 4`.
pub fn check_star(r: u32, s: u32, order: usize) -> VerificationReport {
    let start = Instant::now();
    let report = VerificationReport::new("star").param("r", r).param("s", s).param("order", order);
    if r < 4 || s < 4 || r % 2 == 1 || s % 2 == 1 {
        return report.abort(format!("(r, s) = ({r}, {s}); need even r, s >= 4"));
    }
    let lhs = g_0(r, order).try_mul(&g_iinf(s, order)).expect("even weights are rational");
    let two_s = pow2(s as i64);
    let oe = p_oe(r, s, order).expect("rational");
    let oo = p_oo(r, s, order).expect("rational");
    let rhs = (&oe.scale(&(&two_s - Rational::one())) - &oo).scale(&two_s.recip());
    report.exact("star", &lhs, &rhs).with_elapsed(start.elapsed())
}

/// A rational sample `(τ̂, n, n')` for the partial fraction check.
pub type FractionSample = (Rational, i64, i64);

fn rpow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// Both sides of
/// `1/((τ+n)^r (τ+n')^s) = (-1)^s Σ_{i<r} C(s+i-1,i) (τ+n)^{i-r} h^{-s-i}
///   + Σ_{j<s} (-1)^j C(r+j-1,j) (τ+n')^{j-s} h^{-r-j}`, `h = n - n'`.
pub fn partial_fraction_sides(r: u32, s: u32, sample: &FractionSample) -> (Rational, Rational) {
    let (t, n, n2) = sample;
    let a = t + Rational::from_integer((*n).into());
    let b = t + Rational::from_integer((*n2).into());
    let h = Rational::from_integer((n - n2).into());
    let lhs = (rpow(&a, r) * rpow(&b, s)).recip();
    let mut rhs = Rational::zero();
    let sign_s = if s % 2 == 0 { Rational::one() } else { -Rational::one() };
    for i in 0..r {
        rhs += &sign_s * binom(s + i - 1, i) / (rpow(&a, r - i) * rpow(&h, s + i));
    }
    for j in 0..s {
        let sj = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        rhs += sj * binom(r + j - 1, j) / (rpow(&b, s - j) * rpow(&h, r + j));
    }
    (lhs, rhs)
}

pub fn check_partial_fraction(r: u32, s: u32, samples: &[FractionSample]) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("partial_fraction")
        .param("r", r)
        .param("s", s)
        .param(
            "samples",
            samples
                .iter()
                .map(|(t, n, n2)| format!("({t}, {n}, {n2})"))
                .collect::<Vec<_>>(),
        );
    if r == 0 || s == 0 {
        return report.abort("need r, s >= 1");
    }
    for (idx, sample) in samples.iter().enumerate() {
        let (t, n, n2) = sample;
        if n == n2 || (t + Rational::from_integer((*n).into())).is_zero() || (t + Rational::from_integer((*n2).into())).is_zero() {
            return report.abort(format!("sample {idx} hits a pole"));
        }
        let (lhs, rhs) = partial_fraction_sides(r, s, sample);
        if lhs != rhs {
            report = report.mismatch("partial_fraction", idx, lhs, rhs);
        }
    }
    report.with_elapsed(start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn shuffle_examples() {
        assert!(check_shuffle(ShuffleKind::OddOdd, 2, 2, 30, Convention::Ge1).passed());
        let rep = check_shuffle(ShuffleKind::OddEven, 4, 3, 30, Convention::Ge1);
        assert!(rep.passed(), "{}", rep.summary());
        // z_5 appears in individual Z^{oo}_{i,j} on the shuffle side but cancels
        assert_eq!(rep.parameters["symbols"], serde_json::json!([3]));
    }

    #[test]
    fn shuffle_without_epsilon_fails() {
        let family = DoubleFamily::without_epsilon(12);
        let rep = check_shuffle_in(&family, ShuffleKind::OddOdd, 1, 1, ShuffleOptions::default());
        assert!(!rep.passed());
        assert!(rep.first_mismatch.unwrap().exponent <= 2);
    }

    #[test]
    fn literal_weight_two_single_term_fails() {
        let family = DoubleFamily::new(12);
        let opts = ShuffleOptions {
            alpha4: false,
            ..ShuffleOptions::default()
        };
        assert!(!check_shuffle_in(&family, ShuffleKind::OddOdd, 1, 1, opts).passed());
        assert!(check_shuffle_in(&family, ShuffleKind::OddOdd, 1, 1, ShuffleOptions::default()).passed());
        // α_4 never enters elsewhere
        assert!(check_shuffle_in(&family, ShuffleKind::OddEven, 1, 1, opts).passed());
    }

    #[test]
    fn ge2_convention_breaks_boundary_cases() {
        let rep = check_shuffle(ShuffleKind::OddEven, 2, 2, 20, Convention::Ge2);
        assert!(!rep.passed());
    }

    #[test]
    fn summation_examples() {
        for k in [4, 6, 8] {
            assert!(check_summation(k, 30).passed(), "k={k}");
        }
        assert!(!check_summation_over(8, 30, &[2, 3, 4, 5, 6]).passed());
        assert_eq!(check_summation(5, 30).status, crate::report::Status::Aborted);
    }

    #[test]
    fn star_examples() {
        for (r, s) in [(4, 4), (6, 4), (4, 6)] {
            assert!(check_star(r, s, 30).passed(), "({r},{s})");
        }
    }

    #[test]
    fn partial_fraction_examples() {
        assert!(check_partial_fraction(2, 2, &[(rat(1, 3), 2, 0)]).passed());
        assert!(check_partial_fraction(1, 3, &[(rat(5, 7), 1, -2)]).passed());
        assert!(check_partial_fraction(3, 1, &[(rat(-1, 2), 3, 1)]).passed());
        assert_eq!(
            check_partial_fraction(2, 2, &[(int(0), 0, 1)]).status,
            crate::report::Status::Aborted
        );
    }

    #[test]
    fn partial_fraction_grid() {
        let samples: Vec<FractionSample> = [rat(1, 3), rat(-5, 4), rat(7, 2)]
            .into_iter()
            .flat_map(|t| [(-3i64, 2i64), (4, -1), (1, 0)].map(|(a, b)| (t.clone(), a, b)))
            .collect();
        for r in 1..=5 {
            for s in 1..=5 {
                assert!(check_partial_fraction(r, s, &samples).passed(), "({r},{s})");
            }
        }
    }
}
