use super::{named_graph, BitIter, Graph, NamedGraphSpec};
use crate::error::{Error, Result};

/// `sets[i]` holds the vertices outside the reference path `X` that are
/// adjacent to exactly `i` vertices of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentPartition {
    pub path: Vec<usize>,
    pub sets: Vec<Vec<usize>>,
}

impl AttachmentPartition {
    pub fn set(&self, i: usize) -> &[usize] {
        self.sets.get(i).map_or(&[], Vec::as_slice)
    }
}

pub fn partition_by_attachment(g: &Graph, path: &[usize]) -> Result<AttachmentPartition> {
    let mut mask = 0u64;
    for &v in path {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if mask >> v & 1 == 1 {
            return Err(Error::NotInducedPath(format!("vertex {v} repeated")));
        }
        mask |= 1 << v;
    }
    for (i, &u) in path.iter().enumerate() {
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) != (j == i + 1) {
                return Err(Error::NotInducedPath(format!("pair ({u}, {v})")));
            }
        }
    }
    let mut sets = vec![Vec::new(); path.len() + 1];
    for v in (0..g.n()).filter(|&v| mask >> v & 1 == 0) {
        sets[(g.row(v) & mask).count_ones() as usize].push(v);
    }
    Ok(AttachmentPartition { path: path.to_vec(), sets })
}

pub fn contains_induced(g: &Graph, h: &NamedGraphSpec) -> Result<bool> {
    Ok(contains_induced_graph(g, &named_graph(h)?))
}

/// Backtracking search for a vertex subset of `g` inducing a copy of `h`.
pub fn contains_induced_graph(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    // Place h's vertices so each one after the first touches an earlier
    // one where possible; that makes adjacency checks bite early.
    let mut order = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h.row(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    let mut image = vec![usize::MAX; h.n()];
    search(g, h, &order, 0, &mut image, 0)
}

fn search(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let need = h.degree(hv);
    let mut candidates = super::row_mask(g.n()) & !used;
    // must be adjacent to images of already-placed neighbours
    for &prev in &order[..depth] {
        if h.has_edge(hv, prev) {
            candidates &= g.row(image[prev]);
        } else {
            candidates &= !g.row(image[prev]);
        }
    }
    for gv in BitIter(candidates) {
        if g.degree(gv) < need {
            continue;
        }
        image[hv] = gv;
        if search(g, h, order, depth + 1, image, used | 1 << gv) {
            return true;
        }
    }
    image[hv] = usize::MAX;
    false
}
