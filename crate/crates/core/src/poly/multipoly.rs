//! Sparse multivariate integer polynomials in λ and the structural
//! parameters `a′, b′, c′` (hat graphs), `c` (the `T(c,c)` family) and
//! `a, b` (the star sizes of `T(a,b)` when treated symbolically).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::BigPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Lambda,
    APrime,
    BPrime,
    CPrime,
    C,
    A,
    B,
}

pub const NVARS: usize = 7;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Lambda, Var::APrime, Var::BPrime, Var::CPrime, Var::C, Var::A, Var::B];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            Var::APrime => "a'",
            Var::BPrime => "b'",
            Var::CPrime => "c'",
            Var::C => "c",
            Var::A => "a",
            Var::B => "b",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Var::index`]. Array ordering is
/// lexicographic with λ most significant, which is the monomial order used
/// for exact division.
pub type Monomial = [u16; NVARS];

const ONE_MONO: Monomial = [0; NVARS];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, ONE_MONO)
    }

    pub fn var(v: Var) -> Self {
        let mut m = ONE_MONO;
        m[v.index()] = 1;
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, c.into());
        p
    }

    /// Builds `Σ coeff · Π var^exp` from `(coeff, [(var, exp)])` rows.
    pub fn from_terms(rows: &[(i64, &[(Var, u16)])]) -> Self {
        let mut p = Self::zero();
        for &(c, factors) in rows {
            let mut m = ONE_MONO;
            for &(v, e) in factors {
                m[v.index()] += e;
            }
            p.add_term(m, c.into());
        }
        p
    }

    pub fn from_bigpoly(p: &BigPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut m = ONE_MONO;
            m[Var::Lambda.index()] = i as u16;
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Lex-leading term (λ most significant).
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m[v.index()]).max()
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.terms.keys().any(|m| m[v.index()] > 0)).collect()
    }

    /// The coefficient of `v^power`, as a polynomial in the other variables.
    pub fn coefficient_of(&self, v: Var, power: u16) -> MultiPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m[v.index()] == power {
                let mut m2 = *m;
                m2[v.index()] = 0;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Adds `delta` to the coefficient of one monomial.
    pub fn with_term_adjusted(&self, mono: &Monomial, delta: i64) -> MultiPoly {
        let mut out = self.clone();
        out.add_term(*mono, delta.into());
        out
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every occurrence of `v` with `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let max = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![MultiPoly::constant(1)];
        for i in 1..=max as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m[v.index()] as usize;
            let mut rest = *m;
            rest[v.index()] = 0;
            let t = MultiPoly::term(c.clone(), rest);
            out = &out + &(&t * &powers[e]);
        }
        out
    }

    pub fn substitute_int(&self, v: Var, value: i64) -> MultiPoly {
        self.substitute(v, &MultiPoly::constant(value))
    }

    /// Exact rational evaluation. Every variable present must be assigned.
    pub fn eval_rational(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m[v.index()];
                if e == 0 {
                    continue;
                }
                let x = assignment.get(&v).ok_or_else(|| Error::Unassigned(v.name().into()))?;
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Converts a polynomial in λ alone to [`BigPoly`]; `None` if any other
    /// variable is present.
    pub fn to_bigpoly(&self) -> Option<BigPoly> {
        let deg = self.degree_in(Var::Lambda).unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != Var::Lambda.index() && e > 0) {
                return None;
            }
            coeffs[m[Var::Lambda.index()] as usize] = c.clone();
        }
        Some(BigPoly::new(coeffs))
    }

    /// Exact division: returns `q` with `self = den · q`, or
    /// [`Error::NotDivisible`]. Lex-leading-term reduction over ℤ; when the
    /// division is exact every reduction step divides cleanly.
    pub fn div_exact(&self, den: &MultiPoly) -> Result<MultiPoly> {
        let (dm, dc) = den.leading().ok_or(Error::DivisionByZero)?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if rm.iter().zip(dm.iter()).any(|(r, d)| r < d) {
                return Err(Error::NotDivisible);
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let mut m = [0u16; NVARS];
            for i in 0..NVARS {
                m[i] = rm[i] - dm[i];
            }
            let t = MultiPoly::term(q, m);
            rem = &rem - &(&t * den);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Terms that differ between `self` and `other`, as `(monomial text,
    /// self coeff, other coeff)`.
    pub fn term_diff(&self, other: &MultiPoly) -> Vec<(String, BigInt, BigInt)> {
        let d = self - other;
        d.terms.keys().map(|m| (mono_text(m), self.coeff(m), other.coeff(m))).collect()
    }
}

/// `(−λ − 2)`
pub fn neg_lambda_minus_two() -> MultiPoly {
    MultiPoly::from_terms(&[(-1, &[(Var::Lambda, 1)]), (-2, &[])])
}

pub fn mono_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    // parameters first, λ last: `12*a'*b'*λ^2`
    for v in Var::ALL.into_iter().skip(1).chain(std::iter::once(Var::Lambda)) {
        match m[v.index()] {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{e}", v.name())),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn display_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let lam = Var::Lambda.index();
    let deg = |m: &Monomial| m.iter().enumerate().filter(|(i, _)| *i != lam).map(|(_, &e)| u32::from(e)).sum::<u32>();
    b[lam].cmp(&a[lam]).then(deg(a).cmp(&deg(b))).then_with(|| b[1..].cmp(&a[1..]))
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Canonical text: λ-powers descending; within one power, parameter
/// monomials by total degree then lexicographically (`a'` before `b'`).
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| display_order(a, b));
        for (k, m) in monos.into_iter().enumerate() {
            let c = &self.terms[m];
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *m == ONE_MONO {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono_text(m))?;
            } else {
                write!(f, "{mag}*{}", mono_text(m))?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical text form (and any expanded sum of monomials):
/// integers, `*`, `^`, `+`, `-`, variables `λ`/`L`, `a'`, `b'`, `c'`, `c`,
/// `a`, `b`. Parentheses are not supported.
impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::PolyParse(format!("{msg} in `{s}`"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = MultiPoly::zero();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let mut coeff = BigInt::one();
            let mut mono = ONE_MONO;
            let mut factors = 0;
            loop {
                if i >= chars.len() {
                    break;
                }
                if chars[i].is_ascii_digit() {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = chars[start..i].iter().collect();
                    coeff *= text.parse::<BigInt>().map_err(|_| bad("bad integer"))?;
                } else {
                    let v = match chars[i] {
                        'λ' | 'L' => Var::Lambda,
                        'a' | 'b' | 'c' => {
                            let primed = chars.get(i + 1) == Some(&'\'');
                            let v = match (chars[i], primed) {
                                ('a', true) => Var::APrime,
                                ('b', true) => Var::BPrime,
                                ('c', true) => Var::CPrime,
                                ('a', false) => Var::A,
                                ('b', false) => Var::B,
                                _ => Var::C,
                            };
                            if primed {
                                i += 1;
                            }
                            v
                        }
                        _ => return Err(bad(&format!("unexpected `{}`", chars[i]))),
                    };
                    i += 1;
                    let mut e: u16 = 1;
                    if chars.get(i) == Some(&'^') {
                        i += 1;
                        let start = i;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        let text: String = chars[start..i].iter().collect();
                        e = text.parse().map_err(|_| bad("bad exponent"))?;
                    }
                    mono[v.index()] += e;
                }
                factors += 1;
                if chars.get(i) == Some(&'*') {
                    i += 1;
                    continue;
                }
                break;
            }
            if factors == 0 {
                return Err(bad("missing term"));
            }
            if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                return Err(bad(&format!("unexpected `{}`", chars[i])));
            }
            out.add_term(mono, sign * coeff);
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = *ma;
                for i in 0..NVARS {
                    m[i] += mb[i];
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
