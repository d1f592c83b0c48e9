use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{BigPoly, MultiPoly, Var};

/// Square matrix with arbitrary-precision integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_i64().expect("entry fits i64")).collect()).collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN)).collect()).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `M − λI` as a polynomial matrix.
    pub fn minus_lambda(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let c = MultiPoly::constant(self.get(i, j).clone());
                        if i == j {
                            &c - &MultiPoly::var(Var::Lambda)
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Fraction-free integer determinant.
    pub fn det(&self) -> BigInt {
        let rows: Vec<Vec<MultiPoly>> =
            (0..self.n).map(|i| (0..self.n).map(|j| MultiPoly::constant(self.get(i, j).clone())).collect()).collect();
        let d = bareiss_det(&rows);
        d.to_bigpoly().map(|p| p.coeff(0)).unwrap_or_default()
    }
}

/// `det(M − λI)` via the Faddeev–LeVerrier recurrence. The leading
/// coefficient is `(−1)^n`. Small matrices run in checked `i128`
/// arithmetic and fall back to big integers on overflow.
pub fn charpoly_exact(m: &IntMatrix) -> BigPoly {
    let n = m.n;
    assert!(n >= 1, "characteristic polynomial of an empty matrix");
    let monic = m
        .entries
        .iter()
        .map(|x| x.to_i128())
        .collect::<Option<Vec<i128>>>()
        .and_then(|small| faddeev_leverrier_i128(n, &small))
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| faddeev_leverrier_big(n, &m.entries));
    // det(λI − M) → det(M − λI)
    let flip = n % 2 == 1;
    BigPoly::new(monic.into_iter().map(|c| if flip { -c } else { c }).collect())
}

/// Coefficients `c_0..c_n` of `det(λI − A)`, or `None` on overflow.
fn faddeev_leverrier_i128(n: usize, a: &[i128]) -> Option<Vec<i128>> {
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut mk = vec![0i128; n * n];
    let mut amk = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I  (amk holds A·M_{k−1})
        mk.copy_from_slice(&amk);
        for i in 0..n {
            mk[i * n + i] = mk[i * n + i].checked_add(c[n - k + 1])?;
        }
        let mut tr = 0i128;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i128;
                for l in 0..n {
                    s = s.checked_add(a[i * n + l].checked_mul(mk[l * n + j])?)?;
                }
                amk[i * n + j] = s;
            }
            tr = tr.checked_add(amk[i * n + i])?;
        }
        debug_assert_eq!(tr % k as i128, 0, "Faddeev–LeVerrier division must be exact");
        c[n - k] = -(tr / k as i128);
    }
    Some(c)
}

fn faddeev_leverrier_big(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut amk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut mk = amk.clone();
        for i in 0..n {
            mk[i * n + i] += &c[n - k + 1];
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &a[i * n + l] * &mk[l * n + j];
                }
                amk[i * n + j] = s;
            }
            tr += &amk[i * n + i];
        }
        let (q, r) = num_integer::Integer::div_rem(&tr, &BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = -q;
    }
    c
}

/// Determinant of a matrix of multivariate polynomials by fraction-free
/// (Bareiss) elimination. Every division by the previous pivot is exact;
/// a remainder means the elimination itself is broken, so it panics.
pub fn bareiss_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return MultiPoly::constant(1);
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::constant(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}
