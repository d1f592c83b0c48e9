//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which keeps the
//! induced-subgraph search and the canonical-labeling code in [`crate::mates`]
//! cheap to copy and compare.

mod distance;
pub mod graph6;
mod induced;
pub mod named;

pub use distance::{diameter, distance_matrix, DistanceMatrix};
pub use induced::{contains_induced, contains_induced_graph, partition_by_attachment, AttachmentPartition};
pub use named::{named_graph, NamedGraphSpec};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, symmetrizing nothing: rows
    /// must already describe a simple undirected graph.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mask = row_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || r >> i & 1 == 1 {
                return Err(Error::InvalidAdjacency(i));
            }
            let mut rest = r;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidAdjacency(i));
                }
            }
        }
        Ok(Self { n, adj: rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.reach_from(0) == row_mask(self.n)
    }

    pub(crate) fn reach_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let pu = perm[u];
            for v in BitIter(self.adj[u]) {
                adj[pu] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Keeps exactly the edges with both ends in `vertices`, relabelled to
    /// `0..k` in sorted order of `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let k = sorted.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph { n: k, adj })
    }

    /// Graph with a new vertex `n` adjacent to the vertices in `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        if nbrs & !row_mask(self.n) != 0 {
            return Err(Error::InvalidAdjacency(self.n));
        }
        let mut adj = self.adj.clone();
        for v in BitIter(nbrs) {
            adj[v] |= 1 << self.n;
        }
        adj.push(nbrs);
        Ok(Graph { n, adj })
    }

    /// Removes vertex `v`, shifting higher labels down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).expect("non-empty vertex set")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

#[inline]
pub(crate) fn row_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity() {
        let t35 = named_graph(&NamedGraphSpec::Tab(3, 5)).unwrap();
        assert!(t35.is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(named_graph(&NamedGraphSpec::Cycle(7)).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(Graph::empty(0), Err(Error::VertexCount(0))));
        assert!(matches!(Graph::empty(65), Err(Error::VertexCount(65))));
        let mut g = Graph::empty(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::SelfLoop(1))));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = named_graph(&NamedGraphSpec::Cycle(5)).unwrap();
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);

        let t22 = named_graph(&NamedGraphSpec::Tab(2, 2)).unwrap();
        let spine = t22.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(spine, named_graph(&NamedGraphSpec::Path(3)).unwrap());

        let k4 = named_graph(&NamedGraphSpec::Complete(4)).unwrap();
        for s in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            assert_eq!(k4.induced_subgraph(&s).unwrap(), named_graph(&NamedGraphSpec::Complete(3)).unwrap());
        }
        assert!(matches!(k4.induced_subgraph(&[0, 9]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(k4.induced_subgraph(&[]), Err(Error::EmptyVertexSet)));
    }

    #[test]
    fn vertex_add_remove() {
        let p3 = named_graph(&NamedGraphSpec::Path(3)).unwrap();
        let c4 = p3.with_vertex(0b101).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(c4.without_vertex(3), p3);
    }
}
