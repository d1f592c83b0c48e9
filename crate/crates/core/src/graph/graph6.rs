//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte, each byte biased by 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&c| !(BIAS..=126).contains(&c)) {
        return Err(err(skip + pos, format!("byte 0x{:02x} outside the printable range 63..=126", body[pos])));
    }
    let (n, start) = match body.first() {
        None => return Err(err(skip, "empty input")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(err(skip + 1, "eight-byte size header exceeds the 64-vertex limit"));
            }
            if body.len() < 4 {
                return Err(err(skip + body.len(), "truncated size header"));
            }
            let n = body[1..4].iter().fold(0usize, |acc, &c| acc << 6 | usize::from(c - BIAS));
            (n, 4)
        }
        Some(&c) => (usize::from(c - BIAS), 1),
    };
    if n == 0 || n > super::MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    let data = &body[start..];
    if data.len() != need {
        return Err(err(
            skip + start + data.len().min(need),
            format!("expected {need} data bytes, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[need - 1] - BIAS;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(skip + start + need - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraphSpec};
    use proptest::prelude::*;

    #[test]
    fn decode_star_k14() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn single_vertex() {
        let g = from_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn p2_encoding() {
        assert_eq!(to_graph6(&named_graph(&NamedGraphSpec::Path(2)).unwrap()), "A_");
    }

    #[test]
    fn petgraph_reference_string() {
        // edges A-C, A-E, B-D, D-E on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_graph6("D?\u{7}"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(from_graph6(""), Err(Error::Graph6 { .. })));
        assert!(matches!(from_graph6("D?"), Err(Error::Graph6 { .. })));
        assert!(matches!(from_graph6("D?{?"), Err(Error::Graph6 { .. })));
        // P2 with a stray padding bit set
        assert!(matches!(from_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(from_graph6("?").is_err());
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), named_graph(&NamedGraphSpec::Path(2)).unwrap());
    }

    #[test]
    fn large_header_round_trip() {
        for n in [62, 63, 64] {
            let g = named_graph(&NamedGraphSpec::Cycle(n)).unwrap();
            let s = to_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn round_trip(n in 1usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
