//! Exact integer polynomial arithmetic and exact characteristic polynomials.

mod bigpoly;
mod matrix;
mod multipoly;

pub use bigpoly::BigPoly;
pub use matrix::{bareiss_det, charpoly_exact, IntMatrix};
pub use multipoly::{mono_text, neg_lambda_minus_two, Monomial, MultiPoly, Var, NVARS};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;

/// `num = den · q` exactly, or [`crate::Error::NotDivisible`].
pub fn poly_div_exact(num: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly> {
    num.div_exact(den)
}

pub fn root_multiplicity(p: &BigPoly, r: i64) -> usize {
    p.root_multiplicity(&BigInt::from(r))
}

pub fn sign_at_rational(p: &BigPoly, q: &BigRational) -> i8 {
    p.sign_at_rational(q)
}

/// A decimal such as `-1.7304` as the exact rational `-17304/10000`.
pub fn decimal(text: &str) -> BigRational {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    let den = BigInt::from(10).pow(frac.len() as u32);
    let r = BigRational::new(digits, den);
    if neg {
        -r
    } else {
        r
    }
}
