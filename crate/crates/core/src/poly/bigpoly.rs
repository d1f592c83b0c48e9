use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate polynomial in λ with arbitrary-precision integer
/// coefficients. `coeffs[i]` multiplies λ^i; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `a + b·λ`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64(&[a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BigPoly::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Exact sign of `p(x)`: clears the denominator and evaluates
    /// `Σ c_i · num^i · den^(d−i)` over the integers.
    pub fn sign_at_rational(&self, x: &BigRational) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let (num, den) = (x.numer(), x.denom());
        // den > 0 in a normalized BigRational, so the scaling keeps the sign
        let mut total = BigInt::zero();
        let mut num_pow = BigInt::one();
        let den_pows: Vec<BigInt> = {
            let mut v = vec![BigInt::one(); d + 1];
            for i in 1..=d {
                v[i] = &v[i - 1] * den;
            }
            v
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            total += c * &num_pow * &den_pows[d - i];
            num_pow *= num;
        }
        sign_of(&total)
    }

    /// Synthetic division by `(λ − r)`: returns quotient and remainder.
    pub fn div_linear(&self, r: &BigInt) -> (BigPoly, BigInt) {
        if self.is_zero() {
            return (BigPoly::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (BigPoly::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Largest `k` such that `(λ − r)^k` divides the polynomial.
    pub fn root_multiplicity(&self, r: &BigInt) -> usize {
        assert!(!self.is_zero(), "root multiplicity of the zero polynomial");
        let mut k = 0;
        let mut p = self.clone();
        loop {
            let (q, rem) = p.div_linear(r);
            if !rem.is_zero() {
                return k;
            }
            k += 1;
            p = q;
        }
    }

    /// Exact division by `(λ − r)^k`, or `None` if it leaves a remainder.
    pub fn deflate(&self, r: &BigInt, k: usize) -> Option<BigPoly> {
        let mut p = self.clone();
        for _ in 0..k {
            let (q, rem) = p.div_linear(r);
            if !rem.is_zero() {
                return None;
            }
            p = q;
        }
        Some(p)
    }

    /// Coefficient vector, highest power first.
    pub fn descending(&self) -> impl Iterator<Item = &BigInt> {
        self.coeffs.iter().rev()
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Debug for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigPoly({self})")
    }
}

/// Descending powers of λ, e.g. `-λ^5 + 2*λ^4 - 32`.
impl fmt::Display for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &BigPoly {
    type Output = BigPoly;
    fn add(self, rhs: &BigPoly) -> BigPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BigPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &BigPoly {
    type Output = BigPoly;
    fn sub(self, rhs: &BigPoly) -> BigPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BigPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &BigPoly {
    type Output = BigPoly;
    fn mul(self, rhs: &BigPoly) -> BigPoly {
        if self.is_zero() || rhs.is_zero() {
            return BigPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPoly::new(out)
    }
}

impl Neg for &BigPoly {
    type Output = BigPoly;
    fn neg(self) -> BigPoly {
        BigPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for BigPoly {
            type Output = BigPoly;
            fn $m(self, rhs: BigPoly) -> BigPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_display() {
        let p = BigPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.to_string(), "λ^2 - 1");
        let q = BigPoly::linear(1, 1);
        assert_eq!((&q * &BigPoly::linear(-1, 1)), p);
        assert_eq!(BigPoly::from_i64(&[0, 0, 0]).degree(), None);
        assert_eq!(BigPoly::from_i64(&[8, 18, 6, -1]).to_string(), "-λ^3 + 6*λ^2 + 18*λ + 8");
        assert_eq!(BigPoly::linear(-2, -1).pow(2).to_string(), "λ^2 + 4*λ + 4");
    }

    #[test]
    fn multiplicities() {
        let p = BigPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.root_multiplicity(&2.into()), 0);
        assert_eq!(p.root_multiplicity(&1.into()), 1);
        let cube = BigPoly::linear(2, 1).pow(3);
        assert_eq!(cube.root_multiplicity(&(-2).into()), 3);
        assert_eq!(cube.deflate(&(-2).into(), 3), Some(BigPoly::constant(1)));
        assert_eq!(cube.deflate(&(-2).into(), 4), None);
    }

    #[test]
    fn exact_signs() {
        let p = BigPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.sign_at_rational(&rat(1, 1)), 0);
        assert_eq!(p.sign_at_rational(&rat(1, 2)), -1);
        assert_eq!(p.sign_at_rational(&rat(-3, 2)), 1);
        assert_eq!(BigPoly::zero().sign_at_rational(&rat(5, 3)), 0);
        // -x^3 + 6x + 4 at -1.5774
        let h = BigPoly::from_i64(&[4, 6, 0, -1]);
        assert_eq!(h.sign_at_rational(&rat(-15774, 10000)), -1);
    }

    #[test]
    fn rational_eval_matches_sign() {
        let p = BigPoly::from_i64(&[3, -7, 0, 2]);
        for (n, d) in [(1, 3), (-5, 7), (11, 2), (0, 1)] {
            let x = rat(n, d);
            assert_eq!(
                sign_of(&(p.eval_rational(&x) * BigRational::from_integer(BigInt::from(d).pow(3))).to_integer()),
                p.sign_at_rational(&x)
            );
        }
    }
}
