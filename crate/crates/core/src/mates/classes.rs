//! Exact spectral fingerprints and cospectral class tables.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::generate::{enumerate_connected, isomorphic};
use crate::error::{Error, Result};
use crate::graph::graph6::{from_graph6, to_graph6};
use crate::graph::{distance_matrix, named_graph, Graph, NamedGraphSpec};
use crate::poly::{charpoly_exact, BigPoly};
use crate::verify::VerificationResult;

/// Byte encoding of an exact characteristic polynomial: for each
/// coefficient from the leading one down, a length byte followed by the
/// big-endian two's-complement value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<u8>);

impl Fingerprint {
    pub fn from_poly(p: &BigPoly) -> Self {
        let mut out = Vec::new();
        for c in p.descending() {
            let bytes = c.to_signed_bytes_be();
            out.push(u8::try_from(bytes.len()).expect("coefficients fit in 255 bytes"));
            out.extend_from_slice(&bytes);
        }
        Fingerprint(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn decode(&self) -> BigPoly {
        let mut coeffs = Vec::new();
        let mut rest = self.0.as_slice();
        while let Some((&len, tail)) = rest.split_first() {
            let (c, tail) = tail.split_at(len as usize);
            coeffs.push(BigInt::from_signed_bytes_be(c));
            rest = tail;
        }
        coeffs.reverse();
        BigPoly::new(coeffs)
    }

    /// SHA-256 of the encoding, hex.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(&self.0))
    }
}

pub fn fingerprint(g: &Graph) -> Result<Fingerprint> {
    Ok(Fingerprint::from_poly(&charpoly_exact(&distance_matrix(g)?.to_int_matrix())))
}

/// Graphs of one order grouped by exact distance characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    pub order: usize,
    pub total: usize,
    /// Members of each class as sorted graph6 strings.
    pub classes: BTreeMap<Fingerprint, Vec<String>>,
}

#[derive(Serialize)]
struct ClassJson<'a> {
    charpoly: String,
    members: &'a [String],
}

#[derive(Serialize)]
struct TableJson<'a> {
    schema: u32,
    order: usize,
    total: usize,
    classes: Vec<ClassJson<'a>>,
}

impl ClassTable {
    pub fn class_of(&self, fp: &Fingerprint) -> Option<&[String]> {
        self.classes.get(fp).map(Vec::as_slice)
    }

    /// Classes with more than one member.
    pub fn cospectral(&self) -> impl Iterator<Item = (&Fingerprint, &Vec<String>)> {
        self.classes.iter().filter(|(_, m)| m.len() > 1)
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            schema: crate::verify::SCHEMA_VERSION,
            order: self.order,
            total: self.total,
            classes: self
                .classes
                .iter()
                .map(|(fp, m)| ClassJson { charpoly: fp.decode().to_string(), members: m })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("class table serializes")
    }

    /// `hash,size` per class.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("fingerprint_hash,class_size\n");
        for (fp, m) in &self.classes {
            out.push_str(&format!("{},{}\n", fp.hash(), m.len()));
        }
        out
    }
}

/// Groups `graphs` by fingerprint on the current rayon pool. Each worker
/// builds its own map; maps merge by key and member lists are sorted, so
/// the result does not depend on the partition.
pub fn cospectral_classes(graphs: &[Graph]) -> Result<ClassTable> {
    let order = graphs.first().map_or(0, Graph::n);
    if let Some(g) = graphs.iter().find(|g| g.n() != order) {
        return Err(Error::MixedOrders(order, g.n()));
    }
    let mut classes = graphs
        .par_iter()
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<Fingerprint, Vec<String>>, g| {
            acc.entry(fingerprint(g)?).or_default().push(to_graph6(g));
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            Ok(a)
        })?;
    for members in classes.values_mut() {
        members.sort();
    }
    Ok(ClassTable { order, total: graphs.len(), classes })
}

/// A malformed input line: 1-based line number and the decode error.
pub type LineError = (usize, Error);

/// Decoded graphs and `(line number, error)` for every malformed line.
/// Blank lines are skipped and a leading `>>graph6<<` header is dropped.
pub fn ingest_graph6(path: &Path) -> Result<(Vec<Graph>, Vec<LineError>)> {
    let file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (i, line) in file.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        match from_graph6(text) {
            Ok(g) => graphs.push(g),
            Err(e) => bad.push((i + 1, e)),
        }
    }
    Ok((graphs, bad))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    BuiltIn,
    Graph6(PathBuf),
}

/// Connected graphs of order `n` from `source`. A graph6 stream must
/// contain graphs of order `n` only; disconnected entries are dropped.
pub fn load_source(n: usize, source: &GraphSource) -> Result<Vec<Graph>> {
    match source {
        GraphSource::BuiltIn => enumerate_connected(n).map_err(|_| Error::OrderNotCovered(n)),
        GraphSource::Graph6(path) => {
            let (graphs, _) = ingest_graph6(path)?;
            if let Some(g) = graphs.iter().find(|g| g.n() != n) {
                return Err(Error::MixedOrders(n, g.n()));
            }
            if graphs.is_empty() {
                return Err(Error::OrderNotCovered(n));
            }
            Ok(graphs.into_iter().filter(Graph::is_connected).collect())
        }
    }
}

pub fn ds_verdict(a: usize, b: usize, source: &GraphSource) -> Result<VerificationResult> {
    let n = a + b + 3;
    let graphs = load_source(n, source)?;
    ds_verdict_from_table(&cospectral_classes(&graphs)?, a, b)
}

/// Passes iff T(a,b)'s class holds exactly one graph and that graph is
/// isomorphic to T(a,b).
pub fn ds_verdict_from_table(table: &ClassTable, a: usize, b: usize) -> Result<VerificationResult> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameters { family: format!("T:{a},{b}"), reason: "a, b ≥ 1".into() });
    }
    let t = named_graph(&NamedGraphSpec::Tab(a, b))?;
    if table.order != t.n() {
        return Err(Error::OrderNotCovered(t.n()));
    }
    let fp = fingerprint(&t)?;
    let members = table.class_of(&fp).unwrap_or(&[]);
    let mut r = VerificationResult::new(format!("ds:T({a},{b})"));
    let mut is_t = Vec::new();
    for m in members {
        is_t.push(isomorphic(&from_graph6(m)?, &t));
    }
    r.check(
        format!("T({a},{b}) appears in the graph source"),
        is_t.iter().any(|&x| x),
        format!("class of size {} without T({a},{b})", members.len()),
    );
    let mates: Vec<&String> = members.iter().zip(&is_t).filter(|(_, &x)| !x).map(|(m, _)| m).collect();
    r.check(
        format!("no cospectral mate among {} connected graphs on {} vertices", table.total, table.order),
        members.len() == 1 && mates.is_empty(),
        format!("class members: {}", members.join(" ")),
    );
    r.note(format!("class size {} of {} graphs", members.len(), table.total));
    Ok(r)
}
