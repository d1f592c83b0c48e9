use super::{BitIter, Graph};
use crate::error::{Error, Result};
use crate::poly::IntMatrix;

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).iter().map(|&x| i64::from(x)).collect()).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows())
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).iter().map(|&x| f64::from(x)).collect()).collect()
    }

    /// Rows and columns restricted to `s` (in the given order). This is
    /// `D_G[S]`, which in general differs from the distance matrix of the
    /// induced subgraph.
    pub fn principal_submatrix(&self, s: &[usize]) -> Result<IntMatrix> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let rows: Vec<Vec<i64>> = s.iter().map(|&i| s.iter().map(|&j| i64::from(self.get(i, j))).collect()).collect();
        Ok(IntMatrix::from_rows(&rows))
    }
}

/// BFS distances from every vertex. Fails on disconnected input.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = vec![0u32; n * n];
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= g.row(v);
            }
            next &= !seen;
            for v in BitIter(next) {
                d[s * n + v] = level;
            }
            seen |= next;
            frontier = next;
        }
        if seen != super::row_mask(n) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(distance_matrix(g)?.max_entry())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraphSpec};
    use proptest::prelude::*;

    fn ng(s: NamedGraphSpec) -> Graph {
        named_graph(&s).unwrap()
    }

    #[test]
    fn path_distances() {
        let d = distance_matrix(&ng(NamedGraphSpec::Path(3))).unwrap();
        assert_eq!(d.rows(), vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn tab11_block_layout() {
        // (center1, middle, center2, a-leaf, b-leaf)
        let d = distance_matrix(&ng(NamedGraphSpec::Tab(1, 1))).unwrap();
        assert_eq!(
            d.rows(),
            vec![
                vec![0, 1, 2, 1, 3],
                vec![1, 0, 1, 2, 2],
                vec![2, 1, 0, 3, 1],
                vec![1, 2, 3, 0, 4],
                vec![3, 2, 1, 4, 0],
            ]
        );
    }

    #[test]
    fn tab_block_structure_general() {
        for a in 1..=4usize {
            for b in 1..=4usize {
                let d = distance_matrix(&ng(NamedGraphSpec::Tab(a, b))).unwrap();
                let la = 3..3 + a;
                let lb = 3 + a..3 + a + b;
                for i in la.clone() {
                    assert_eq!(&d.row(i)[..3], &[1, 2, 3]);
                    for j in la.clone() {
                        assert_eq!(d.get(i, j), if i == j { 0 } else { 2 });
                    }
                    for j in lb.clone() {
                        assert_eq!(d.get(i, j), 4);
                    }
                }
                for i in lb.clone() {
                    assert_eq!(&d.row(i)[..3], &[3, 2, 1]);
                }
            }
        }
    }

    #[test]
    fn complete_graph_is_j_minus_i() {
        let d = distance_matrix(&ng(NamedGraphSpec::Complete(4))).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), u32::from(i != j));
            }
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&ng(NamedGraphSpec::Tab(1, 1))).unwrap(), 4);
        for n in 2..=7 {
            assert_eq!(diameter(&ng(NamedGraphSpec::Complete(n))).unwrap(), 1);
        }
        assert_eq!(diameter(&ng(NamedGraphSpec::Path(6))).unwrap(), 5);
        for a in 1..=8 {
            for b in 1..=8 {
                assert_eq!(diameter(&ng(NamedGraphSpec::Tab(a, b))).unwrap(), 4);
            }
        }
        assert!(matches!(diameter(&Graph::empty(3).unwrap()), Err(Error::Disconnected)));
    }

    #[test]
    fn principal_submatrices() {
        let d = distance_matrix(&ng(NamedGraphSpec::Path(4))).unwrap();
        assert_eq!(d.principal_submatrix(&[0, 3]).unwrap().to_i64_rows(), vec![vec![0, 3], vec![3, 0]]);
        assert_eq!(d.principal_submatrix(&[0, 1, 2, 3]).unwrap(), d.to_int_matrix());
        assert!(d.principal_submatrix(&[]).is_err());
        assert!(d.principal_submatrix(&[4]).is_err());

        // Dropping the b-leaf of T(1,1) leaves a geodesic P4 = S(1,1).
        let t = distance_matrix(&ng(NamedGraphSpec::Tab(1, 1))).unwrap();
        let sub = t.principal_submatrix(&[3, 0, 1, 2]).unwrap();
        let s11 = distance_matrix(&ng(NamedGraphSpec::DoubleStar(1, 1))).unwrap();
        // S(1,1) labels: center1, center2, leaf of 1, leaf of 2 -> reorder to a path
        let s_path = s11.principal_submatrix(&[2, 0, 1, 3]).unwrap();
        assert_eq!(sub, s_path);
    }

    pub(crate) fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                    proptest::collection::vec(0usize..64, n),
                )
            })
            .prop_map(|(n, bits, parents)| {
                let mut g = Graph::empty(n).unwrap();
                // random spanning tree keeps it connected
                for v in 1..n {
                    g.add_edge(v, parents[v] % v).unwrap();
                }
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
    }

    proptest! {
        #[test]
        fn distance_matrix_invariants(g in arb_connected(10)) {
            let d = distance_matrix(&g).unwrap();
            let n = g.n();
            for i in 0..n {
                prop_assert_eq!(d.get(i, i), 0);
                for j in 0..n {
                    prop_assert_eq!(d.get(i, j), d.get(j, i));
                    if i != j {
                        prop_assert!(d.get(i, j) >= 1);
                    }
                    prop_assert_eq!(d.get(i, j) == 1, g.has_edge(i, j));
                    for k in 0..n {
                        prop_assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_distance_invariants() {
        for spec in NamedGraphSpec::catalog() {
            let g = named_graph(&spec).unwrap();
            let d = distance_matrix(&g).unwrap();
            for i in 0..g.n() {
                for j in 0..g.n() {
                    assert_eq!(d.get(i, j), d.get(j, i));
                    assert_eq!(d.get(i, j) == 1, g.has_edge(i, j), "{spec}");
                }
            }
        }
    }
}
