//! Symmetric eigenvalues by cyclic Jacobi rotation, spectrum comparison,
//! interlacing checks, and exact certificates for eigenvalue positions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BigPoly;

pub const DEFAULT_TOL: f64 = 1e-9;
const OFF_DIAGONAL_EPS: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
/// Minimum gap between a numeric eigenvalue and an integer candidate
/// before the numeric side of a position certificate is trusted.
pub const SEPARATION: f64 = 1e-6;

/// Real eigenvalues sorted descending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values, tol: DEFAULT_TOL }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `λ_i`, 1-based.
    pub fn nth(&self, i: usize) -> Result<f64> {
        nth_eigenvalue(self, i)
    }
}

pub fn eigenvalues_sym(m: &[Vec<f64>]) -> Result<Spectrum> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..i {
            if (row[j] - m[j][i]).abs() > 1e-12 {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut sweeps = 0;
    while off_diagonal_max(&a) >= OFF_DIAGONAL_EPS {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
    // stable sort keeps diagonal order among exact ties
    let mut vals: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values: vals, tol: DEFAULT_TOL })
}

pub fn spectrum_of(m: &crate::poly::IntMatrix) -> Result<Spectrum> {
    eigenvalues_sym(&m.to_f64())
}

fn off_diagonal_max(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            worst = worst.max(a[i][j].abs());
        }
    }
    worst
}

/// One Jacobi rotation zeroing `a[p][q]` (Golub & Van Loan, symmetric Schur).
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.len();
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

pub fn compare_spectra(s1: &Spectrum, s2: &Spectrum, tol: f64) -> bool {
    s1.n() == s2.n() && s1.values.iter().zip(&s2.values).all(|(x, y)| (x - y).abs() <= tol)
}

/// `λ_{n−m+i} − tol ≤ μ_i ≤ λ_i + tol` for every child eigenvalue `μ_i`.
pub fn check_interlacing(parent: &Spectrum, child: &Spectrum, tol: f64) -> bool {
    let (n, m) = (parent.n(), child.n());
    if m > n {
        return false;
    }
    (0..m).all(|i| {
        let mu = child.values[i];
        parent.values[n - m + i] - tol <= mu && mu <= parent.values[i] + tol
    })
}

pub fn nth_eigenvalue(s: &Spectrum, i: usize) -> Result<f64> {
    if i == 0 || i > s.n() {
        return Err(Error::IndexOutOfRange { index: i, n: s.n() });
    }
    Ok(s.values[i - 1])
}

/// Exact placement of an integer eigenvalue within the sorted spectrum.
///
/// The multiplicity comes from the exact characteristic polynomial; the
/// numeric spectrum only has to say how many eigenvalues sit clearly above
/// `value`, which it can do reliably once every other eigenvalue is at least
/// [`SEPARATION`] away.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPosition {
    pub value: i64,
    pub multiplicity: usize,
    /// 1-based positions `first..=last` occupied by `value`; empty when the
    /// multiplicity is zero.
    pub first: usize,
    pub last: usize,
    /// Smallest distance from `value` to an eigenvalue not accounted for by
    /// the multiplicity.
    pub gap: f64,
}

impl EigenPosition {
    pub fn holds_at(&self, i: usize) -> bool {
        self.multiplicity > 0 && self.first <= i && i <= self.last
    }

    pub fn certified(&self) -> bool {
        self.gap >= SEPARATION
    }
}

pub fn eigen_position(charpoly: &BigPoly, s: &Spectrum, value: i64) -> EigenPosition {
    let multiplicity = charpoly.root_multiplicity(&BigInt::from(value));
    let v = value as f64;
    let above = s.values.iter().filter(|&&x| x > v + SEPARATION).count();
    let mut dists: Vec<f64> = s.values.iter().map(|x| (x - v).abs()).collect();
    dists.sort_by(f64::total_cmp);
    let gap = dists.get(multiplicity).copied().unwrap_or(f64::INFINITY);
    EigenPosition { value, multiplicity, first: above + 1, last: above + multiplicity, gap }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, named_graph, BitIter, Graph, NamedGraphSpec as N};
    use crate::poly::charpoly_exact;
    use rand::{Rng, SeedableRng};

    fn spec_of(s: N) -> Spectrum {
        eigenvalues_sym(&distance_matrix(&named_graph(&s).unwrap()).unwrap().to_f64()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn tab11_spectrum() {
        let s = spec_of(N::Tab(1, 1));
        assert!(close(&s.values, &[8.2882, -0.5578, -0.7639, -1.7304, -5.2361], 5e-5), "{s:?}");
        assert!((nth_eigenvalue(&s, 5).unwrap() + 5.2361).abs() < 5e-5);
    }

    #[test]
    fn small_named_spectra() {
        assert!(close(&spec_of(N::Complete(4)).values, &[3.0, -1.0, -1.0, -1.0], 1e-9));
        assert!((spec_of(N::Cycle(5)).values[2] + 0.3820).abs() < 5e-5);
        assert!(close(&spec_of(N::Path(2)).values, &[1.0, -1.0], 1e-12));
        assert!((nth_eigenvalue(&spec_of(N::Tab(3, 3)), 5).unwrap() + 2.0).abs() < 1e-9);
    }

    #[test]
    fn index_and_symmetry_errors() {
        let s = spec_of(N::Path(3));
        assert!(matches!(nth_eigenvalue(&s, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(nth_eigenvalue(&s, 4), Err(Error::IndexOutOfRange { index: 4, n: 3 })));
        assert_eq!(nth_eigenvalue(&s, 1).unwrap(), s.max());
        let bad = vec![vec![0.0, 1.0], vec![2.0, 0.0]];
        assert!(matches!(eigenvalues_sym(&bad), Err(Error::NotSymmetric(1, 0))));
    }

    #[test]
    fn comparisons() {
        let a = spec_of(N::Tab(1, 2));
        assert!(compare_spectra(&a, &a, 0.0));
        assert!(compare_spectra(&a, &spec_of(N::Tab(2, 1)), 1e-9));
        assert!(!compare_spectra(&spec_of(N::Tab(1, 1)), &spec_of(N::Cycle(5)), 1e-3));
        assert!(check_interlacing(&a, &a, 1e-9));
    }

    #[test]
    fn tab_interlaces_over_its_core() {
        let parent = distance_matrix(&named_graph(&N::Tab(2, 3)).unwrap()).unwrap();
        // center1, middle, center2, first a-leaf, first b-leaf
        let child = spectrum_of(&parent.principal_submatrix(&[0, 1, 2, 3, 5]).unwrap()).unwrap();
        let ps = spectrum_of(&parent.to_int_matrix()).unwrap();
        assert!(check_interlacing(&ps, &child, 1e-9));
        assert!(ps.max() >= 8.2882 && ps.min() <= -5.2361);
        for a in 1..=5 {
            for b in 1..=5 {
                let c = a.max(b);
                assert!(check_interlacing(&spec_of(N::Tab(c, c)), &spec_of(N::Tab(a, b)), 1e-9), "({a},{b})");
            }
        }
    }

    #[test]
    fn trace_and_frobenius() {
        for spec in N::catalog() {
            let d = distance_matrix(&named_graph(&spec).unwrap()).unwrap();
            let s = spectrum_of(&d.to_int_matrix()).unwrap();
            let n = s.n() as f64;
            assert!(s.values.iter().sum::<f64>().abs() <= 1e-8 * n, "{spec}");
            let fro: f64 = d.rows().iter().flatten().map(|&x| (x * x) as f64).sum();
            let sq: f64 = s.values.iter().map(|x| x * x).sum();
            assert!((sq - fro).abs() <= 1e-6 * fro, "{spec}");
        }
    }

    #[test]
    fn numeric_roots_annihilate_charpoly() {
        for spec in N::catalog().into_iter().filter(|s| s.order() <= 12) {
            let d = distance_matrix(&named_graph(&spec).unwrap()).unwrap().to_int_matrix();
            let cp = charpoly_exact(&d);
            let scale =
                cp.coeffs().iter().map(|c| num_traits::ToPrimitive::to_f64(c).unwrap().abs()).fold(1.0, f64::max);
            let s = spectrum_of(&d).unwrap();
            for &x in &s.values {
                assert!(cp.eval_f64(x).abs() <= 1e-6 * scale * x.abs().max(1.0).powi(s.n() as i32), "{spec} at {x}");
            }
            let prod: f64 = s.values.iter().product();
            let det = num_traits::ToPrimitive::to_f64(&d.det()).unwrap();
            assert!((prod - det).abs() <= 1e-6 * det.abs().max(1.0), "{spec}");
        }
    }

    fn random_connected(rng: &mut rand::rngs::StdRng, n: usize) -> Graph {
        loop {
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if g.is_connected() {
                return g;
            }
        }
    }

    #[test]
    fn random_principal_submatrices_interlace() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let g = random_connected(&mut rng, n);
            let d = distance_matrix(&g).unwrap();
            let mut mask = 0u64;
            while mask == 0 {
                mask = rng.gen_range(0..1u64 << n);
            }
            let subset: Vec<usize> = BitIter(mask).collect();
            let child = spectrum_of(&d.principal_submatrix(&subset).unwrap()).unwrap();
            let parent = spectrum_of(&d.to_int_matrix()).unwrap();
            assert!(check_interlacing(&parent, &child, 1e-9), "{g:?} {subset:?}");
        }
    }

    #[test]
    fn positions_of_minus_two() {
        let d = distance_matrix(&named_graph(&N::Tab(4, 3)).unwrap()).unwrap().to_int_matrix();
        let pos = eigen_position(&charpoly_exact(&d), &spectrum_of(&d).unwrap(), -2);
        assert_eq!((pos.multiplicity, pos.first, pos.last), (5, 5, 9));
        assert!(pos.certified() && pos.holds_at(5) && pos.holds_at(9) && !pos.holds_at(10));

        let h1 = distance_matrix(&named_graph(&N::H(1)).unwrap()).unwrap().to_int_matrix();
        let pos = eigen_position(&charpoly_exact(&h1), &spectrum_of(&h1).unwrap(), -2);
        assert_eq!(pos.multiplicity, 0);
        assert!(pos.certified() && !pos.holds_at(5));
    }
}
