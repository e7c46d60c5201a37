//! The coefficient ring `Q ⊕ ⊕_{p odd ≥ 3} Q·z_p`.
//!
//! `z_p` stands for `ζ̃(p) = (2πi)^{-p} ζ(p)` with `p` odd. Even values of
//! `ζ̃` are rational (`-B_k / 2k!`) and `ζ̃(1)` is zero, so every constant the
//! Eisenstein series need lives in this ring. The symbols are treated as
//! linearly independent over `Q`; products are only defined when at most one
//! factor carries symbols, which keeps every element affine in the `z_p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial_rat, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    rational: Rational,
    // p -> coefficient of z_p; never holds zeros.
    symbols: BTreeMap<u32, Rational>,
}

impl ExtScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: Rational) -> Self {
        ExtScalar {
            rational: r,
            symbols: BTreeMap::new(),
        }
    }

    /// The pure symbol `c·z_p`.
    ///
    /// # Panics
    /// If `p` is even or `p < 3`.
    pub fn symbol(p: u32, c: Rational) -> Self {
        assert!(p >= 3 && p % 2 == 1, "z_{p} is not an odd zeta symbol");
        let mut symbols = BTreeMap::new();
        if !c.is_zero() {
            symbols.insert(p, c);
        }
        ExtScalar {
            rational: Rational::zero(),
            symbols,
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn symbolic_part(&self) -> &BTreeMap<u32, Rational> {
        &self.symbols
    }

    pub fn coefficient_of(&self, p: u32) -> Rational {
        self.symbols.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.symbols.is_empty()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    /// Largest `p` with a nonzero `z_p` coefficient.
    pub fn max_symbol(&self) -> Option<u32> {
        self.symbols.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExtScalar {
            rational: &self.rational * c,
            symbols: self
                .symbols
                .iter()
                .map(|(&p, v)| (p, v * c))
                .collect(),
        }
    }

    /// Ring product; fails when both factors carry symbols.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.scale(&self.rational)),
            (false, true) => Ok(self.scale(&other.rational)),
            (false, false) => Err(Error::SymbolicProduct {
                left: self.max_symbol().unwrap_or(0),
                right: other.max_symbol().unwrap_or(0),
            }),
        }
    }

    fn add_symbols(&mut self, other: &BTreeMap<u32, Rational>, negate: bool) {
        for (&p, v) in other {
            let slot = self.symbols.entry(p).or_insert_with(Rational::zero);
            if negate {
                *slot -= v;
            } else {
                *slot += v;
            }
            if slot.is_zero() {
                self.symbols.remove(&p);
            }
        }
    }
}

/// `ζ̃(k) = (2πi)^{-k} ζ(k)`: `0` for `k = 1`, `-B_k/(2·k!)` for even `k`,
/// the symbol `z_k` for odd `k ≥ 3`.
pub fn zeta_tilde(k: u32) -> ExtScalar {
    assert!(k >= 1, "zeta_tilde is defined for k >= 1");
    match k {
        1 => ExtScalar::zero(),
        k if k % 2 == 0 => ExtScalar::rational(beta(k)),
        k => ExtScalar::symbol(k, Rational::one()),
    }
}

/// `β_p = -B_p / (2·p!)`, the rational shadow of `ζ̃(p)`.
pub fn beta(p: u32) -> Rational {
    -bernoulli(p as usize) / (factorial_rat(p as u64) * Rational::from_integer(2.into()))
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        ExtScalar::rational(r)
    }
}

impl Add<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&ExtScalar> for ExtScalar {
    fn add_assign(&mut self, rhs: &ExtScalar) {
        self.rational += &rhs.rational;
        self.add_symbols(&rhs.symbols, false);
    }
}

impl SubAssign<&ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, rhs: &ExtScalar) {
        self.rational -= &rhs.rational;
        self.add_symbols(&rhs.symbols, true);
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            rational: -&self.rational,
            symbols: self.symbols.iter().map(|(&p, v)| (p, -v)).collect(),
        }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

impl fmt::Display for ExtScalar {
    /// `"a/b"` for rationals, otherwise `"a/b + c/d*z3 - e/f*z5"` in
    /// ascending `p`; the rational part is omitted when it is zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "{}", self.rational);
        }
        let mut first = true;
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            first = false;
        }
        for (p, c) in &self.symbols {
            if first {
                write!(f, "{c}*z{p}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*z{p}", -c)?;
            } else {
                write!(f, " + {c}*z{p}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ExtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let mut out = ExtScalar::zero();
        let first = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty scalar".into()))?;
        out += &parse_term(first)?;
        while let Some(op) = tokens.next() {
            let term = tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("dangling operator in {s:?}")))?;
            let value = parse_term(term)?;
            match op {
                "+" => out += &value,
                "-" => out -= &value,
                _ => return Err(Error::Parse(format!("unexpected token {op:?} in {s:?}"))),
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<ExtScalar> {
    match term.split_once("*z") {
        None => Ok(ExtScalar::rational(parse_rational(term)?)),
        Some((c, p)) => {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad symbol index in {term:?}")))?;
            if p < 3 || p % 2 == 0 {
                return Err(Error::Parse(format!("z{p} is not an odd zeta symbol")));
            }
            Ok(ExtScalar::symbol(p, parse_rational(c)?))
        }
    }
}
