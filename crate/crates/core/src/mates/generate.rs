use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canonical::{canonical_labeling, same_orbit, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Largest order the built-in generator is meant for.
pub const MAX_BUILTIN_ORDER: usize = 9;

/// One canonically labeled representative of every isomorphism class of
/// connected graphs on `n` vertices, sorted by canonical form.
///
/// Each level extends every parent by one vertex in all possible ways and
/// keeps a child only if the new vertex lies in the automorphism orbit of
/// the child's canonical deletion vertex. Runs on the current rayon pool;
/// the output does not depend on how the work is split.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_labeling(&Graph::empty(1)?).0];
    for _ in 1..n {
        let mut next: Vec<CanonicalForm> = level.par_iter().flat_map_iter(|p| children(&p.graph())).collect();
        next.sort_unstable();
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::graph).collect())
}

/// Accepted children of one parent, without duplicates.
fn children(parent: &Graph) -> BTreeSet<CanonicalForm> {
    let k = parent.n();
    let mut out = BTreeSet::new();
    for nbrs in 1..1u64 << k {
        let child = parent.with_vertex(nbrs).expect("parent has fewer than 64 vertices");
        if let Some(form) = accept(&child, k) {
            out.insert(form);
        }
    }
    out
}

/// Invariant used to narrow the candidates for the canonical deletion vertex.
fn vertex_key(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).map(|w| g.degree(w)).sum())
}

/// Returns the child's canonical form if `new` is a canonical deletion
/// vertex: among non-cut vertices with the largest [`vertex_key`], the one
/// with the highest canonical label, up to automorphism.
fn accept(child: &Graph, new: usize) -> Option<CanonicalForm> {
    let n = child.n();
    let key = vertex_key(child, new);
    let mut candidates = Vec::new();
    for v in 0..n {
        let kv = vertex_key(child, v);
        if kv < key || (v != new && !child.without_vertex(v).is_connected()) {
            continue;
        }
        if kv > key {
            return None;
        }
        candidates.push(v);
    }
    let (form, labels) = canonical_labeling(child);
    let chosen = *candidates.iter().max_by_key(|&&v| labels[v]).expect("new vertex is a candidate");
    (chosen == new || same_orbit(child, chosen, new)).then_some(form)
}

/// Connected graphs among all `2^(n(n−1)/2)` labeled graphs, deduplicated
/// by explicit isomorphism tests. Independent of the canonical labeling
/// code; practical up to n = 7.
pub fn brute_force_connected(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "brute force is limited to n ≤ 7");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut buckets: std::collections::HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = Default::default();
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let mut rows = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        let g = Graph::from_rows(rows).expect("valid rows");
        if !g.is_connected() {
            continue;
        }
        let reps = buckets.entry(invariant(&g)).or_default();
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Sorted (degree, sorted neighbour degrees) profile.
pub(crate) fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut prof: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    prof.sort();
    prof
}

/// Backtracking isomorphism test, degree-guided.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: u64) -> bool {
        if v == g.n() {
            return true;
        }
        for w in BitIter(crate::graph::row_mask(h.n()) & !used) {
            if g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map[v] = w;
                if extend(g, h, v + 1, map, used | 1 << w) {
                    return true;
                }
            }
        }
        false
    }
    extend(g, h, 0, &mut map, 0)
}
