//! Closed forms for the extended double star T(a,b): its reduced quintic,
//! the f/g factorization of T(c,c), cycle spectra, capped cycle matrices,
//! forbidden-subgraph distance templates, and the k-hat matrices with
//! their expanded determinants.
//!
//! Polynomials are transcribed as literal coefficient tables. Nothing here
//! derives them; checking them is the job of [`crate::verify`].

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{BigPoly, IntMatrix, Monomial, MultiPoly, Var};
use crate::spectra::{eigen_position, Spectrum};

const TAB_QUINTIC: &str = "16 + 8*a + 8*b + 40*λ + 36*a*λ + 36*b*λ + 8*a*b*λ + 28*λ^2 + 44*a*λ^2 + 44*b*λ^2 \
    + 24*a*b*λ^2 + 2*λ^3 + 18*a*λ^3 + 18*b*λ^3 + 12*a*b*λ^3 - 4*λ^4 + 2*a*λ^4 + 2*b*λ^4 - λ^5";

const HAT_P: [&str; 5] = [
    "-16 - 12*a' - 12*b' - 12*c' - 48*λ - 52*a'*λ - 52*b'*λ - 12*a'*b'*λ - 52*c'*λ - 12*a'*c'*λ - 12*b'*c'*λ \
     - 48*λ^2 - 79*a'*λ^2 - 79*b'*λ^2 - 30*a'*b'*λ^2 - 79*c'*λ^2 - 30*a'*c'*λ^2 - 30*b'*c'*λ^2 - 9*a'*b'*c'*λ^2 \
     - 12*λ^3 - 54*a'*λ^3 - 54*b'*λ^3 - 22*a'*b'*λ^3 - 54*c'*λ^3 - 22*a'*c'*λ^3 - 22*b'*c'*λ^3 - 8*a'*b'*c'*λ^3 \
     + 9*λ^4 - 17*a'*λ^4 - 17*b'*λ^4 - 5*a'*b'*λ^4 - 17*c'*λ^4 - 5*a'*c'*λ^4 - 5*b'*c'*λ^4 \
     + 6*λ^5 - 2*a'*λ^5 - 2*b'*λ^5 - 2*c'*λ^5 + λ^6",
    "-16 - 8*a' - 8*b' - 64*λ - 40*a'*λ - 40*b'*λ - 8*a'*b'*λ - 88*λ^2 - 70*a'*λ^2 - 70*b'*λ^2 - 24*a'*b'*λ^2 \
     - 48*λ^3 - 52*a'*λ^3 - 52*b'*λ^3 - 20*a'*b'*λ^3 - 5*λ^4 - 17*a'*λ^4 - 17*b'*λ^4 - 5*a'*b'*λ^4 \
     + 4*λ^5 - 2*a'*λ^5 - 2*b'*λ^5 + λ^6",
    "32 + 8*a' + 8*b' + 176*λ + 60*a'*λ + 60*b'*λ + 8*a'*b'*λ + 336*λ^2 + 150*a'*λ^2 + 150*b'*λ^2 + 40*a'*b'*λ^2 \
     + 296*λ^3 + 161*a'*λ^3 + 161*b'*λ^3 + 54*a'*b'*λ^3 + 122*λ^4 + 84*a'*λ^4 + 84*b'*λ^4 + 28*a'*b'*λ^4 \
     + 15*λ^5 + 21*a'*λ^5 + 21*b'*λ^5 + 5*a'*b'*λ^5 - 4*λ^6 + 2*a'*λ^6 + 2*b'*λ^6 - λ^7",
    "-64 - 448*λ - 64*a'*λ - 64*b'*λ - 1072*λ^2 - 272*a'*λ^2 - 272*b'*λ^2 - 48*a'*b'*λ^2 \
     - 1248*λ^3 - 416*a'*λ^3 - 416*b'*λ^3 - 112*a'*b'*λ^3 - 780*λ^4 - 312*a'*λ^4 - 312*b'*λ^4 - 96*a'*b'*λ^4 \
     - 252*λ^5 - 124*a'*λ^5 - 124*b'*λ^5 - 36*a'*b'*λ^5 - 29*λ^6 - 25*a'*λ^6 - 25*b'*λ^6 - 5*a'*b'*λ^6 \
     + 4*λ^7 - 2*a'*λ^7 - 2*b'*λ^7 + λ^8",
    "128 - 32*a' - 32*b' + 1088*λ - 16*a'*λ - 16*b'*λ - 32*a'*b'*λ + 3104*λ^2 + 368*a'*λ^2 + 368*b'*λ^2 \
     + 4432*λ^3 + 904*a'*λ^3 + 904*b'*λ^3 + 160*a'*b'*λ^3 + 3608*λ^4 + 950*a'*λ^4 + 950*b'*λ^4 + 240*a'*b'*λ^4 \
     + 1724*λ^5 + 539*a'*λ^5 + 539*b'*λ^5 + 150*a'*b'*λ^5 + 454*λ^6 + 172*a'*λ^6 + 172*b'*λ^6 + 44*a'*b'*λ^6 \
     + 47*λ^7 + 29*a'*λ^7 + 29*b'*λ^7 + 5*a'*b'*λ^7 - 4*λ^8 + 2*a'*λ^8 + 2*b'*λ^8 - λ^9",
];

/// Quotients grouped by power of λ.
const HAT_Q: [&[(u16, &str)]; 5] = [
    &[
        (0, "8 + 6*a' + 6*b'"),
        (1, "20 + 23*a' + 23*b' + 6*a'*b'"),
        (2, "14 + 28*a' + 28*b' + 12*a'*b'"),
        (3, "-1 + 13*a' + 13*b' + 5*a'*b'"),
        (4, "-4 + 2*a' + 2*b'"),
        (5, "-1"),
    ],
    &[
        (0, "8 + 4*a' + 4*b'"),
        (1, "28 + 18*a' + 18*b' + 4*a'*b'"),
        (2, "30 + 26*a' + 26*b' + 10*a'*b'"),
        (3, "9 + 13*a' + 13*b' + 5*a'*b'"),
        (4, "-2 + 2*a' + 2*b'"),
        (5, "-1"),
    ],
    &[
        (0, "8 + 2*a' + 2*b'"),
        (1, "36 + 13*a' + 13*b' + 2*a'*b'"),
        (2, "46 + 24*a' + 24*b' + 8*a'*b'"),
        (3, "19 + 13*a' + 13*b' + 5*a'*b'"),
        (4, "2*a' + 2*b'"),
        (5, "-1"),
    ],
    &[
        (0, "8"),
        (1, "44 + 8*a' + 8*b'"),
        (2, "62 + 22*a' + 22*b' + 6*a'*b'"),
        (3, "29 + 13*a' + 13*b' + 5*a'*b'"),
        (4, "2 + 2*a' + 2*b'"),
        (5, "-1"),
    ],
    &[
        (0, "8 - 2*a' - 2*b'"),
        (1, "52 + 3*a' + 3*b' - 2*a'*b'"),
        (2, "78 + 20*a' + 20*b' + 4*a'*b'"),
        (3, "39 + 13*a' + 13*b' + 5*a'*b'"),
        (4, "4 + 2*a' + 2*b'"),
        (5, "-1"),
    ],
];

fn lit(text: &str) -> MultiPoly {
    text.parse().expect("transcribed polynomial parses")
}

fn grouped(rows: &[(u16, &str)]) -> MultiPoly {
    rows.iter().fold(MultiPoly::zero(), |acc, &(k, text)| {
        &acc + &(&lit(text) * &MultiPoly::var(Var::Lambda).pow(u32::from(k)))
    })
}

/// The reduced quintic of T(a,b) in λ with symbolic `a`, `b`.
pub fn p_ab_symbolic() -> MultiPoly {
    lit(TAB_QUINTIC)
}

pub fn p_ab(a: u32, b: u32) -> BigPoly {
    instantiate_ab(&p_ab_symbolic(), a, b)
}

pub(crate) fn instantiate_ab(p: &MultiPoly, a: u32, b: u32) -> BigPoly {
    p.substitute_int(Var::A, a.into())
        .substitute_int(Var::B, b.into())
        .to_bigpoly()
        .expect("only λ remains after substituting a and b")
}

/// `(a + b − 2, p_{a,b})` such that the characteristic polynomial of
/// D(T(a,b)) is `(−λ−2)^exponent · p_{a,b}`.
pub fn tab_charpoly_closed(a: u32, b: u32) -> Result<(u32, BigPoly)> {
    if a + b < 2 {
        return Err(Error::BadParameters { family: "T".into(), reason: format!("a + b = {} < 2", a + b) });
    }
    Ok((a + b - 2, p_ab(a, b)))
}

/// `(−λ−2)^exponent · reduced`
pub fn expand_closed(exponent: u32, reduced: &BigPoly) -> BigPoly {
    &BigPoly::linear(-2, -1).pow(exponent) * reduced
}

/// The 5×5 block-reduced determinant for T(a,b) with symbolic `a`, `b`:
/// rows are center₁, middle, center₂, one a-leaf, one b-leaf.
pub fn tab_reduced_matrix() -> Vec<Vec<MultiPoly>> {
    let table = [
        ["-λ", "1", "2", "a", "3*b"],
        ["1", "-λ", "1", "2*a", "2*b"],
        ["2", "1", "-λ", "3*a", "b"],
        ["1", "2", "3", "2*a - 2 - λ", "4*b"],
        ["3", "2", "1", "4*a", "2*b - 2 - λ"],
    ];
    table.iter().map(|row| row.iter().map(|s| lit(s)).collect()).collect()
}

/// `f(λ) = −λ³ + 6cλ² + (12c+6)λ + 4c + 4`
pub fn f_poly(c: i64) -> BigPoly {
    BigPoly::from_i64(&[4 * c + 4, 12 * c + 6, 6 * c, -1])
}

/// `g(λ) = λ² + (2c+4)λ + 4`
pub fn g_poly(c: i64) -> BigPoly {
    BigPoly::from_i64(&[4, 2 * c + 4, 1])
}

pub fn f_symbolic() -> MultiPoly {
    lit("-λ^3 + 6*c*λ^2 + 12*c*λ + 6*λ + 4*c + 4")
}

pub fn g_symbolic() -> MultiPoly {
    lit("λ^2 + 2*c*λ + 4*λ + 4")
}

/// `−(c+2) ± √(c²+4c)`, larger root first.
pub fn g_roots(c: i64) -> (f64, f64) {
    let c = c as f64;
    let r = (c * c + 4.0 * c).sqrt();
    (-(c + 2.0) + r, -(c + 2.0) - r)
}

/// Distance spectrum of the cycle C_n from its closed form.
pub fn cycle_spectrum_closed(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::BadParameters { family: "C".into(), reason: format!("n = {n} < 3") });
    }
    let nf = n as f64;
    let mut vals = Vec::with_capacity(n);
    let p = n / 2;
    if n % 2 == 1 {
        vals.push((nf * nf - 1.0) / 4.0);
        for j in 1..=p {
            let sec = 1.0 / (PI * j as f64 / nf).cos();
            let v = -0.25 * sec * sec;
            vals.extend([v, v]);
        }
    } else {
        vals.push(nf * nf / 4.0);
        vals.extend(std::iter::repeat_n(0.0, p - 1));
        for j in 1..=p / 2 {
            let csc = 1.0 / (PI * (2 * j - 1) as f64 / nf).sin();
            let v = -csc * csc;
            vals.extend([v, v]);
        }
        if p % 2 == 1 {
            vals.push(-1.0);
        }
    }
    Ok(Spectrum::new(vals))
}

/// Cycle distances capped at 2, for the two orders where the capped
/// matrix is inspected (6 and 7).
pub fn capped_cycle_matrix(n: usize) -> Result<IntMatrix> {
    if n != 6 && n != 7 {
        return Err(Error::BadParameters {
            family: "capped cycle".into(),
            reason: format!("n = {n}, expected 6 or 7"),
        });
    }
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = i.abs_diff(j).min(n - i.abs_diff(j));
                    d.min(2) as i64
                })
                .collect()
        })
        .collect();
    Ok(IntMatrix::from_rows(&rows))
}

/// Forbidden subgraphs whose distance submatrix is given as a template.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H(u8),
    P6,
    F(u8),
    K4,
}

impl Family {
    pub fn all() -> Vec<Family> {
        let mut v: Vec<Family> = (1..=7).map(Family::H).collect();
        v.push(Family::P6);
        v.extend((1..=4).map(Family::F));
        v.push(Family::K4);
        v
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::H(k) => write!(f, "H{k}"),
            Family::P6 => f.write_str("P6"),
            Family::F(k) => write!(f, "F{k}"),
            Family::K4 => f.write_str("K4"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let upper = s.trim().to_ascii_uppercase();
        match upper.as_str() {
            "P6" => return Ok(Family::P6),
            "K4" => return Ok(Family::K4),
            _ => {}
        }
        let (head, idx) = upper.split_at(1.min(upper.len()));
        let k: u8 = idx.parse().map_err(|_| unknown())?;
        match head {
            "H" if (1..=7).contains(&k) => Ok(Family::H(k)),
            "F" if (1..=4).contains(&k) => Ok(Family::F(k)),
            _ => Err(unknown()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    Fixed(i64),
    Param(usize),
}

#[derive(Clone, Debug)]
pub struct MatrixTemplate {
    pub family: Family,
    pub entries: Vec<Vec<Entry>>,
    /// Parameter names and their allowed values, in enumeration order.
    pub params: Vec<(String, Vec<i64>)>,
}

impl MatrixTemplate {
    fn parse(family: Family, rows: &[&str], params: &[(&str, &[i64])]) -> Self {
        let entries = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| match tok.parse::<i64>() {
                        Ok(v) => Entry::Fixed(v),
                        Err(_) => Entry::Param(params.iter().position(|(p, _)| *p == tok).expect("declared parameter")),
                    })
                    .collect()
            })
            .collect();
        let t = Self { family, entries, params: params.iter().map(|(p, d)| (p.to_string(), d.to_vec())).collect() };
        debug_assert!(t.is_well_formed());
        t
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn param_names(&self) -> Vec<&str> {
        self.params.iter().map(|(p, _)| p.as_str()).collect()
    }

    fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.entries.iter().all(|r| r.len() == n)
            && (0..n).all(|i| self.entries[i][i] == Entry::Fixed(0))
            && (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Every assignment in lexicographic order of the parameter tuple.
    pub fn assignments(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for (_, dom) in &self.params {
            out = out.into_iter().flat_map(|pre| dom.iter().map(move |&v| [pre.clone(), vec![v]].concat())).collect();
        }
        out
    }

    pub fn instantiate(&self, values: &[i64]) -> IntMatrix {
        assert_eq!(values.len(), self.params.len(), "one value per parameter");
        let rows: Vec<Vec<i64>> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match *e {
                        Entry::Fixed(v) => v,
                        Entry::Param(p) => values[p],
                    })
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows)
    }

    /// Whether an assignment respects the side conditions stated alongside
    /// the template. Only P6 carries any.
    pub fn feasible(&self, values: &[i64]) -> bool {
        match self.family {
            Family::P6 => p6_feasible(values),
            _ => true,
        }
    }
}

/// `c = 5` forces `a = d = f = 3` and `b = e = 4`; `c = 4` forces `b, e ∈ {3, 4}`.
fn p6_feasible(v: &[i64]) -> bool {
    let [a, b, c, d, e, f] = [v[0], v[1], v[2], v[3], v[4], v[5]];
    match c {
        5 => a == 3 && d == 3 && f == 3 && b == 4 && e == 4,
        4 => b >= 3 && e >= 3,
        _ => true,
    }
}

pub fn forbidden_template(family: Family) -> Result<MatrixTemplate> {
    const TWO_THREE: &[i64] = &[2, 3];
    const TWO_FOUR: &[i64] = &[2, 3, 4];
    let t = match family {
        Family::H(1) => MatrixTemplate::parse(
            family,
            &["0 1 2 2 2 1", "1 0 1 2 2 1", "2 1 0 1 2 1", "2 2 1 0 1 1", "2 2 2 1 0 1", "1 1 1 1 1 0"],
            &[],
        ),
        Family::H(2) => MatrixTemplate::parse(
            family,
            &["0 1 2 2 a 1", "1 0 1 2 b 1", "2 1 0 1 2 1", "2 2 1 0 1 1", "a b 2 1 0 2", "1 1 1 1 2 0"],
            &[("a", TWO_THREE), ("b", TWO_THREE)],
        ),
        Family::H(3) => MatrixTemplate::parse(
            family,
            &["0 1 2 a b 2", "1 0 1 2 c 1", "2 1 0 1 2 1", "a 2 1 0 1 1", "b c 2 1 0 2", "2 1 1 1 2 0"],
            &[("a", TWO_THREE), ("b", TWO_FOUR), ("c", TWO_THREE)],
        ),
        Family::H(4) => MatrixTemplate::parse(
            family,
            &["0 1 2 a b 1", "1 0 1 2 c 1", "2 1 0 1 2 1", "a 2 1 0 1 2", "b c 2 1 0 d", "1 1 1 2 d 0"],
            &[("a", TWO_THREE), ("b", TWO_FOUR), ("c", TWO_THREE), ("d", TWO_THREE)],
        ),
        Family::H(5) => MatrixTemplate::parse(
            family,
            &["0 1 2 a b 2", "1 0 1 2 c 1", "2 1 0 1 2 1", "a 2 1 0 1 2", "b c 2 1 0 d", "2 1 1 2 d 0"],
            &[("a", TWO_THREE), ("b", TWO_FOUR), ("c", TWO_THREE), ("d", TWO_THREE)],
        ),
        Family::H(6) => MatrixTemplate::parse(
            family,
            &["0 1 2 a b 1", "1 0 1 2 c 1", "2 1 0 1 2 2", "a 2 1 0 1 d", "b c 2 1 0 e", "1 1 2 d e 0"],
            &[("a", TWO_THREE), ("b", TWO_FOUR), ("c", TWO_THREE), ("d", TWO_THREE), ("e", TWO_FOUR)],
        ),
        Family::H(7) => MatrixTemplate::parse(
            family,
            &["0 1 2 a b c", "1 0 1 2 d 2", "2 1 0 1 2 1", "a 2 1 0 1 2", "b d 2 1 0 e", "c 2 1 2 e 0"],
            &[("a", TWO_THREE), ("b", TWO_FOUR), ("c", TWO_THREE), ("d", TWO_THREE), ("e", TWO_THREE)],
        ),
        Family::P6 => MatrixTemplate::parse(
            family,
            &["0 1 2 a b c", "1 0 1 2 d e", "2 1 0 1 2 f", "a 2 1 0 1 2", "b d 2 1 0 1", "c e f 2 1 0"],
            &[
                ("a", TWO_THREE),
                ("b", TWO_FOUR),
                ("c", &[2, 3, 4, 5]),
                ("d", TWO_THREE),
                ("e", TWO_FOUR),
                ("f", TWO_THREE),
            ],
        ),
        Family::F(1) => MatrixTemplate::parse(
            family,
            &["0 1 2 a 1", "1 0 1 2 1", "2 1 0 1 1", "a 2 1 0 1", "1 1 1 1 0"],
            &[("a", TWO_THREE)],
        ),
        Family::F(2) => MatrixTemplate::parse(
            family,
            &["0 1 2 a 1", "1 0 1 2 1", "2 1 0 1 1", "a 2 1 0 2", "1 1 1 2 0"],
            &[("a", TWO_THREE)],
        ),
        Family::F(3) => MatrixTemplate::parse(
            family,
            &["0 1 2 a 1", "1 0 1 2 1", "2 1 0 1 2", "a 2 1 0 b", "1 1 2 b 0"],
            &[("a", TWO_THREE), ("b", TWO_THREE)],
        ),
        Family::F(4) => {
            let mut rows = vec![
                "0 1 2 a 2 2 2 2 2 2".to_string(),
                "1 0 1 2 1 1 1 1 1 1".to_string(),
                "2 1 0 1 1 1 1 1 1 1".to_string(),
                "a 2 1 0 2 2 2 2 2 2".to_string(),
            ];
            for i in 4..10 {
                let tail: Vec<&str> = (4..10).map(|j| if i == j { "0" } else { "2" }).collect();
                rows.push(format!("2 1 1 2 {}", tail.join(" ")));
            }
            let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
            MatrixTemplate::parse(family, &rows, &[("a", TWO_THREE)])
        }
        Family::K4 => MatrixTemplate::parse(family, &["0 1 1 1", "1 0 1 1", "1 1 0 1", "1 1 1 0"], &[]),
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    Ok(t)
}

/// The matrix whose determinant is the reduced characteristic
/// polynomial of a graph with k hats over the path x₁x₂x₃x₄.
///
/// k = 1 is 6×6 with three leaf blocks of sizes a′, b′, c′. For k ≥ 2 it
/// is (k+4)×(k+4); the rows are x₂, x₃, the k hats, then one
/// representative of each of the a′ and b′ leaf blocks.
pub fn hat_matrix(k: usize) -> Result<Vec<Vec<MultiPoly>>> {
    if k == 1 {
        let table = [
            ["-λ", "1", "1", "a'", "2*b'", "2*c'"],
            ["1", "-λ", "1", "2*a'", "b'", "2*c'"],
            ["1", "1", "-λ", "2*a'", "2*b'", "c'"],
            ["1", "2", "2", "2*a' - 2 - λ", "3*b'", "3*c'"],
            ["2", "1", "2", "3*a'", "2*b' - 2 - λ", "3*c'"],
            ["2", "2", "1", "3*a'", "3*b'", "2*c' - 2 - λ"],
        ];
        return Ok(table.iter().map(|r| r.iter().map(|s| lit(s)).collect()).collect());
    }
    if !(2..=5).contains(&k) {
        return Err(Error::BadParameters { family: "hat".into(), reason: format!("k = {k}, expected 1..=5") });
    }
    let n = k + 4;
    let (ra, rb) = (n - 2, n - 1);
    let mut m: Vec<Vec<String>> = vec![vec!["0".to_string(); n]; n];
    let mut set = |i: usize, j: usize, s: &str| m[i][j] = s.to_string();
    set(0, 0, "-λ");
    set(0, 1, "1");
    set(1, 0, "1");
    set(1, 1, "-λ");
    for h in 2..2 + k {
        for x in [0, 1] {
            set(x, h, "1");
            set(h, x, "1");
        }
        for h2 in 2..2 + k {
            set(h, h2, if h == h2 { "-λ" } else { "2" });
        }
        set(h, ra, "2*a'");
        set(h, rb, "2*b'");
        set(ra, h, "2");
        set(rb, h, "2");
    }
    set(0, ra, "a'");
    set(0, rb, "2*b'");
    set(1, ra, "2*a'");
    set(1, rb, "b'");
    set(ra, 0, "1");
    set(ra, 1, "2");
    set(rb, 0, "2");
    set(rb, 1, "1");
    set(ra, ra, "2*a' - 2 - λ");
    set(ra, rb, "3*b'");
    set(rb, ra, "3*a'");
    set(rb, rb, "2*b' - 2 - λ");
    Ok(m.iter().map(|r| r.iter().map(|s| lit(s)).collect()).collect())
}

fn check_k(k: usize) -> Result<()> {
    if (1..=5).contains(&k) {
        Ok(())
    } else {
        Err(Error::BadParameters { family: "hat".into(), reason: format!("k = {k}, expected 1..=5") })
    }
}

pub fn appendix_p(k: usize) -> Result<MultiPoly> {
    check_k(k)?;
    Ok(lit(HAT_P[k - 1]))
}

pub fn appendix_q(k: usize) -> Result<MultiPoly> {
    check_k(k)?;
    Ok(grouped(HAT_Q[k - 1]))
}

/// Bounds of the T(a,b) spectrum table, compared at the truncation
/// tolerance of 4-decimal values.
pub const TABLE_TOL: f64 = 5e-5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableCheck {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Checks a spectrum against the interval table; the `−2` run is compared
/// numerically at 1e-9.
pub fn interval_table_check(s: &Spectrum) -> TableCheck {
    table_check(s, |i| (s.values[i - 1] + 2.0).abs() <= 1e-9)
}

/// Same table, but the `−2` run at positions 5..n−1 is certified from the
/// exact multiplicity of −2 in `charpoly`.
pub fn interval_table_check_exact(s: &Spectrum, charpoly: &BigPoly) -> TableCheck {
    let pos = eigen_position(charpoly, s, -2);
    table_check(s, |i| pos.certified() && pos.holds_at(i))
}

fn table_check(s: &Spectrum, minus_two_at: impl Fn(usize) -> bool) -> TableCheck {
    let mut failures = Vec::new();
    let n = s.n();
    if n < 5 {
        return TableCheck { pass: false, failures: vec![format!("spectrum has {n} < 5 eigenvalues")] };
    }
    let l = |i: usize| s.values[i - 1];
    let mut need = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };
    need(l(1) >= 8.2882 - TABLE_TOL, format!("λ1 = {:.6} below 8.2882", l(1)));
    need(l(2) >= -0.5578 - TABLE_TOL && l(2) < 0.0, format!("λ2 = {:.6} outside [-0.5578, 0)", l(2)));
    need(l(3) >= -0.7639 - TABLE_TOL && l(3) < -0.4226, format!("λ3 = {:.6} outside [-0.7639, -0.4226)", l(3)));
    need(l(4) >= -1.7304 - TABLE_TOL && l(4) < -1.5774, format!("λ4 = {:.6} outside [-1.7304, -1.5774)", l(4)));
    for i in 5..n {
        need(minus_two_at(i), format!("λ{i} = {:.6} is not -2", l(i)));
    }
    need(l(n) <= -5.2361 + TABLE_TOL, format!("λ{n} = {:.6} above -5.2361", l(n)));
    TableCheck { pass: failures.is_empty(), failures }
}

/// Names one transcribed polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Transcribed {
    TabQuintic,
    HatP(usize),
    HatQ(usize),
}

impl Transcribed {
    pub fn all() -> Vec<Transcribed> {
        let mut v = vec![Transcribed::TabQuintic];
        v.extend((1..=5).map(Transcribed::HatP));
        v.extend((1..=5).map(Transcribed::HatQ));
        v
    }
}

impl fmt::Display for Transcribed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transcribed::TabQuintic => f.write_str("p_ab"),
            Transcribed::HatP(k) => write!(f, "p{k}"),
            Transcribed::HatQ(k) => write!(f, "q{k}"),
        }
    }
}

/// Every transcribed polynomial in one place, so verifiers can be run
/// against an alternative (for example a golden file, or a deliberately
/// corrupted copy).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Transcriptions {
    pub p_ab: MultiPoly,
    pub p: BTreeMap<usize, MultiPoly>,
    pub q: BTreeMap<usize, MultiPoly>,
}

impl Default for Transcriptions {
    fn default() -> Self {
        Self {
            p_ab: p_ab_symbolic(),
            p: (1..=5).map(|k| (k, appendix_p(k).expect("k in range"))).collect(),
            q: (1..=5).map(|k| (k, appendix_q(k).expect("k in range"))).collect(),
        }
    }
}

impl Transcriptions {
    pub fn get(&self, which: Transcribed) -> &MultiPoly {
        match which {
            Transcribed::TabQuintic => &self.p_ab,
            Transcribed::HatP(k) => &self.p[&k],
            Transcribed::HatQ(k) => &self.q[&k],
        }
    }

    pub fn get_mut(&mut self, which: Transcribed) -> &mut MultiPoly {
        match which {
            Transcribed::TabQuintic => &mut self.p_ab,
            Transcribed::HatP(k) => self.p.get_mut(&k).expect("k in range"),
            Transcribed::HatQ(k) => self.q.get_mut(&k).expect("k in range"),
        }
    }

    /// Copy with one coefficient shifted by `delta`.
    pub fn perturbed(&self, which: Transcribed, mono: &Monomial, delta: i64) -> Self {
        let mut out = self.clone();
        let p = out.get_mut(which);
        *p = p.with_term_adjusted(mono, delta);
        out
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, named_graph, NamedGraphSpec as N};
    use crate::poly::{bareiss_det, charpoly_exact};
    use crate::spectra::{eigenvalues_sym, spectrum_of};
    use num_bigint::BigInt;

    #[test]
    fn quintic_coefficients() {
        let p = p_ab(1, 1);
        assert_eq!(p.coeff(0), BigInt::from(32));
        assert_eq!(p.coeff(4), BigInt::from(0));
        assert_eq!(p.coeff(5), BigInt::from(-1));
        assert_eq!(p_ab(0, 0).coeff(0), BigInt::from(16));
        for a in 0..=10 {
            for b in 0..=10 {
                assert_eq!(p_ab(a, b), p_ab(b, a));
            }
        }
        assert!(tab_charpoly_closed(1, 0).is_err());
        assert_eq!(tab_charpoly_closed(4, 3).unwrap().0, 5);
    }

    #[test]
    fn closed_form_matches_exact_charpoly() {
        for a in 1..=8 {
            for b in 1..=8 {
                let (e, p) = tab_charpoly_closed(a, b).unwrap();
                let d = distance_matrix(&named_graph(&N::Tab(a as usize, b as usize)).unwrap()).unwrap();
                assert_eq!(expand_closed(e, &p), charpoly_exact(&d.to_int_matrix()), "T({a},{b})");
            }
        }
    }

    #[test]
    fn reduced_determinant_is_the_quintic() {
        assert_eq!(bareiss_det(&tab_reduced_matrix()), p_ab_symbolic());
    }

    #[test]
    fn f_and_g() {
        let f1 = f_poly(1);
        for r in [-1.7304, -0.5578, 8.2882] {
            // each 4-decimal root brackets a sign change within 5e-5
            assert!(f1.eval_f64(r - 5e-5) * f1.eval_f64(r + 5e-5) < 0.0, "{r}");
        }
        let (hi, lo) = g_roots(1);
        assert!((hi + 0.7639).abs() < 5e-5 && (lo + 5.2361).abs() < 5e-5);
        let gf = &g_symbolic() * &f_symbolic();
        let pcc =
            p_ab_symbolic().substitute(Var::A, &MultiPoly::var(Var::C)).substitute(Var::B, &MultiPoly::var(Var::C));
        assert_eq!(gf, pcc);
        assert_eq!(f_symbolic().substitute_int(Var::C, 1).to_bigpoly().unwrap(), f_poly(1));
        for c in 1..=6i64 {
            let d = distance_matrix(&named_graph(&N::Tab(c as usize, c as usize)).unwrap()).unwrap();
            let closed = expand_closed(2 * c as u32 - 2, &(&g_poly(c) * &f_poly(c)));
            assert_eq!(closed, charpoly_exact(&d.to_int_matrix()), "c = {c}");
        }
    }

    #[test]
    fn cycle_closed_forms() {
        assert!(cycle_spectrum_closed(2).is_err());
        let c4 = cycle_spectrum_closed(4).unwrap();
        assert_eq!(c4.values.len(), 4);
        for (x, y) in c4.values.iter().zip([4.0, 0.0, -2.0, -2.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        let c5 = cycle_spectrum_closed(5).unwrap();
        assert!((c5.values[0] - 6.0).abs() < 1e-12 && (c5.values[2] + 0.3820).abs() < 5e-5);
        let c6 = cycle_spectrum_closed(6).unwrap();
        assert_eq!((c6.n(), c6.values[0]), (6, 9.0));
        for n in 3..=12 {
            let numeric =
                eigenvalues_sym(&distance_matrix(&named_graph(&N::Cycle(n)).unwrap()).unwrap().to_f64()).unwrap();
            let closed = cycle_spectrum_closed(n).unwrap();
            assert!(crate::spectra::compare_spectra(&numeric, &closed, 1e-9), "C{n}");
        }
    }

    #[test]
    fn capped_cycles() {
        assert!(capped_cycle_matrix(5).is_err());
        let m6 = capped_cycle_matrix(6).unwrap();
        assert_eq!(m6.to_i64_rows()[0], vec![0, 1, 2, 2, 2, 1]);
        assert!((spectrum_of(&m6).unwrap().values[4] + 3.0).abs() < 1e-9);
        assert!((spectrum_of(&capped_cycle_matrix(7).unwrap()).unwrap().values[4] + 1.5550).abs() < 5e-5);
    }

    #[test]
    fn templates() {
        for fam in Family::all() {
            let t = forbidden_template(fam).unwrap();
            assert!(t.is_well_formed(), "{fam}");
            assert_eq!(fam.to_string().parse::<Family>().unwrap(), fam);
        }
        let h2 = forbidden_template(Family::H(2)).unwrap();
        assert_eq!((h2.n(), h2.param_names()), (6, vec!["a", "b"]));
        let p6 = forbidden_template(Family::P6).unwrap();
        let all = p6.assignments();
        assert_eq!(all.len(), 288);
        assert_eq!(all.iter().filter(|v| p6.feasible(v)).count(), 177);
        assert_eq!(forbidden_template(Family::H(5)).unwrap().assignments().len(), 24);
        let f4 = forbidden_template(Family::F(4)).unwrap();
        assert_eq!((f4.n(), f4.params.len()), (10, 1));
        assert!(forbidden_template(Family::H(8)).is_err());
        assert!("H9".parse::<Family>().is_err());
        assert!("Q".parse::<Family>().is_err());
    }

    #[test]
    fn h1_template_is_its_distance_matrix() {
        let d = distance_matrix(&named_graph(&N::H(1)).unwrap()).unwrap().to_int_matrix();
        assert_eq!(forbidden_template(Family::H(1)).unwrap().instantiate(&[]), d);
        let k4 = distance_matrix(&named_graph(&N::Complete(4)).unwrap()).unwrap().to_int_matrix();
        assert_eq!(forbidden_template(Family::K4).unwrap().instantiate(&[]), k4);
    }

    #[test]
    fn hats() {
        let m1 = hat_matrix(1).unwrap();
        assert_eq!(m1.len(), 6);
        assert_eq!(m1[0][0], lit("-λ"));
        assert_eq!(m1[3][3], lit("2*a' - 2 - λ"));
        assert_eq!(hat_matrix(3).unwrap().len(), 7);
        assert_eq!(hat_matrix(5).unwrap().len(), 9);
        assert!(hat_matrix(6).is_err() && hat_matrix(0).is_err());
        let lam = |p: &MultiPoly, e: u16| p.coefficient_of(Var::Lambda, e);
        assert_eq!(lam(&appendix_p(1).unwrap(), 6), MultiPoly::constant(1));
        assert_eq!(lam(&appendix_p(5).unwrap(), 9), MultiPoly::constant(-1));
        assert_eq!(lam(&appendix_q(3).unwrap(), 0), lit("8 + 2*a' + 2*b'"));
        for k in 1..=5 {
            let m = hat_matrix(k).unwrap();
            let size = if k == 1 { 6 } else { k + 4 };
            assert!(m.len() == size && m.iter().all(|r| r.len() == size));
        }
    }

    #[test]
    fn interval_table() {
        let spec = |s: N| {
            let d = distance_matrix(&named_graph(&s).unwrap()).unwrap().to_int_matrix();
            (spectrum_of(&d).unwrap(), charpoly_exact(&d))
        };
        let (s11, cp11) = spec(N::Tab(1, 1));
        assert!(interval_table_check(&s11).pass);
        assert!(interval_table_check_exact(&s11, &cp11).pass);
        let (s52, cp52) = spec(N::Tab(5, 2));
        assert!(interval_table_check(&s52).pass && interval_table_check_exact(&s52, &cp52).pass);
        let (c8, cpc8) = spec(N::Cycle(8));
        assert!(!interval_table_check(&c8).pass && !interval_table_check_exact(&c8, &cpc8).pass);
    }

    #[test]
    fn transcriptions_round_trip() {
        let t = Transcriptions::default();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("golden.json");
        t.save(&path).unwrap();
        assert_eq!(Transcriptions::load(&path).unwrap(), t);
        let mono = *t.p_ab.terms().next().unwrap().0;
        let bumped = t.perturbed(Transcribed::TabQuintic, &mono, 1);
        assert_ne!(bumped, t);
        assert_eq!(bumped.p_ab.len(), t.p_ab.len());
    }
}
