//! The graph catalogue: extended double stars, double stars, paths, cycles,
//! complete graphs, and the small forbidden-subgraph families `H1`–`H7`
//! (a path `v1..v5` plus a sixth vertex) and `F1`–`F4` (a path `v1..v4`
//! plus extra vertices).
//!
//! Labels are 0-based: figure vertex `v_i` is vertex `i - 1`.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraphSpec {
    /// Extended double star `T(a,b)`: labels are
    /// `(center1, middle, center2, a leaves on center1, b leaves on center2)`.
    Tab(usize, usize),
    /// Double star `S(a,b)`: `(center1, center2, a leaves, b leaves)`.
    DoubleStar(usize, usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `H1`..`H7`.
    H(u8),
    /// `F1`..`F4`.
    F(u8),
}

impl NamedGraphSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::BadParameters { family: self.to_string(), reason: reason.into() });
        match *self {
            NamedGraphSpec::Tab(a, b) if a + b + 3 > super::MAX_VERTICES => bad("more than 64 vertices"),
            NamedGraphSpec::DoubleStar(a, b) if a + b + 2 > super::MAX_VERTICES => bad("more than 64 vertices"),
            NamedGraphSpec::Path(n) | NamedGraphSpec::Complete(n) if n == 0 || n > super::MAX_VERTICES => {
                bad("n must be in 1..=64")
            }
            NamedGraphSpec::Cycle(n) if !(3..=super::MAX_VERTICES).contains(&n) => bad("n must be in 3..=64"),
            NamedGraphSpec::H(k) if !(1..=7).contains(&k) => bad("H index must be 1..=7"),
            NamedGraphSpec::F(k) if !(1..=4).contains(&k) => bad("F index must be 1..=4"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            NamedGraphSpec::Tab(a, b) => a + b + 3,
            NamedGraphSpec::DoubleStar(a, b) => a + b + 2,
            NamedGraphSpec::Path(n) | NamedGraphSpec::Cycle(n) | NamedGraphSpec::Complete(n) => n,
            NamedGraphSpec::H(_) => 6,
            NamedGraphSpec::F(4) => 10,
            NamedGraphSpec::F(_) => 5,
        }
    }

    /// Every fixed-size member of the catalogue plus a few parametrised ones.
    pub fn catalog() -> Vec<NamedGraphSpec> {
        let mut v: Vec<_> = (1..=7).map(NamedGraphSpec::H).chain((1..=4).map(NamedGraphSpec::F)).collect();
        v.extend([
            NamedGraphSpec::Complete(4),
            NamedGraphSpec::Path(6),
            NamedGraphSpec::Tab(1, 1),
            NamedGraphSpec::Tab(2, 3),
            NamedGraphSpec::DoubleStar(2, 1),
            NamedGraphSpec::Cycle(5),
            NamedGraphSpec::Cycle(8),
        ]);
        v
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraphSpec::Tab(a, b) => write!(f, "T:{a},{b}"),
            NamedGraphSpec::DoubleStar(a, b) => write!(f, "S:{a},{b}"),
            NamedGraphSpec::Path(n) => write!(f, "P:{n}"),
            NamedGraphSpec::Cycle(n) => write!(f, "C:{n}"),
            NamedGraphSpec::Complete(n) => write!(f, "K:{n}"),
            NamedGraphSpec::H(k) => write!(f, "H{k}"),
            NamedGraphSpec::F(k) => write!(f, "F{k}"),
        }
    }
}

/// Parses `FAMILY:params` (`T:1,1`, `S:2,3`, `P:6`, `C:7`, `K:4`) or a
/// bare family name (`H3`, `F4`, `K4`, `P6`).
impl FromStr for NamedGraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let s = s.trim();
        let (family, params) = match s.split_once(':') {
            Some((f, p)) => (f, Some(p)),
            None => {
                let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
                (&s[..split], Some(&s[split..]))
            }
        };
        let nums: Vec<usize> = params
            .unwrap_or("")
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let spec = match (family, nums.as_slice()) {
            ("T", &[a, b]) => NamedGraphSpec::Tab(a, b),
            ("S", &[a, b]) => NamedGraphSpec::DoubleStar(a, b),
            ("P", &[n]) => NamedGraphSpec::Path(n),
            ("C", &[n]) => NamedGraphSpec::Cycle(n),
            ("K", &[n]) => NamedGraphSpec::Complete(n),
            ("H", &[k]) if k < 256 => NamedGraphSpec::H(k as u8),
            ("F", &[k]) if k < 256 => NamedGraphSpec::F(k as u8),
            _ => return Err(unknown()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn named_graph(spec: &NamedGraphSpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        NamedGraphSpec::Tab(a, b) => {
            let mut e = vec![(0, 1), (1, 2)];
            e.extend((0..a).map(|i| (0, 3 + i)));
            e.extend((0..b).map(|i| (2, 3 + a + i)));
            Graph::from_edges(a + b + 3, &e)
        }
        NamedGraphSpec::DoubleStar(a, b) => {
            let mut e = vec![(0, 1)];
            e.extend((0..a).map(|i| (0, 2 + i)));
            e.extend((0..b).map(|i| (1, 2 + a + i)));
            Graph::from_edges(a + b + 2, &e)
        }
        NamedGraphSpec::Path(n) => Graph::from_edges(n, &path_edges(n)),
        NamedGraphSpec::Cycle(n) => {
            let mut e = path_edges(n);
            e.push((n - 1, 0));
            Graph::from_edges(n, &e)
        }
        NamedGraphSpec::Complete(n) => {
            let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edges(n, &e)
        }
        NamedGraphSpec::H(k) => {
            // path v1..v5 plus v6 joined to the listed path vertices
            let hub: &[usize] = match k {
                1 => &[0, 1, 2, 3, 4],
                2 => &[0, 1, 2, 3],
                3 => &[1, 2, 3],
                4 => &[0, 1, 2],
                5 => &[1, 2],
                6 => &[0, 1],
                _ => &[2],
            };
            let mut e = path_edges(5);
            e.extend(hub.iter().map(|&v| (v, 5)));
            Graph::from_edges(6, &e)
        }
        NamedGraphSpec::F(4) => {
            let mut e = path_edges(4);
            for v in 4..10 {
                e.push((1, v));
                e.push((2, v));
            }
            Graph::from_edges(10, &e)
        }
        NamedGraphSpec::F(k) => {
            let hub: &[usize] = match k {
                1 => &[0, 1, 2, 3],
                2 => &[0, 1, 2],
                _ => &[0, 1],
            };
            let mut e = path_edges(4);
            e.extend(hub.iter().map(|&v| (v, 4)));
            Graph::from_edges(5, &e)
        }
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tab11_shape() {
        let g = named_graph(&NamedGraphSpec::Tab(1, 1)).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        let mut deg = g.degrees();
        deg.sort_unstable();
        assert_eq!(deg, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn tab_vertex_count() {
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(named_graph(&NamedGraphSpec::Tab(a, b)).unwrap().n(), a + b + 3);
            }
        }
    }

    #[test]
    fn h1_as_drawn() {
        let g = named_graph(&NamedGraphSpec::H(1)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(5), 5);
    }

    #[test]
    fn family_sizes() {
        let edges = |s| named_graph(&s).unwrap().edge_count();
        assert_eq!(edges(NamedGraphSpec::H(2)), 8);
        assert_eq!(edges(NamedGraphSpec::H(7)), 5);
        assert_eq!(edges(NamedGraphSpec::F(1)), 7);
        assert_eq!(edges(NamedGraphSpec::F(3)), 5);
        assert_eq!(edges(NamedGraphSpec::F(4)), 15);
        assert_eq!(named_graph(&NamedGraphSpec::F(4)).unwrap().n(), 10);
    }

    #[test]
    fn parse_and_display() {
        for s in ["T:1,1", "S:2,3", "P:6", "C:7", "K:4", "H3", "F4"] {
            let spec: NamedGraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("K4".parse::<NamedGraphSpec>().unwrap(), NamedGraphSpec::Complete(4));
        assert_eq!("P6".parse::<NamedGraphSpec>().unwrap(), NamedGraphSpec::Path(6));
        for bad in ["", "X:1", "T:1", "H8", "F0", "C:2", "P:0", "T:a,b"] {
            assert!(bad.parse::<NamedGraphSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(named_graph(&NamedGraphSpec::Cycle(2)).is_err());
        assert!(named_graph(&NamedGraphSpec::Tab(40, 30)).is_err());
        assert!(named_graph(&NamedGraphSpec::H(0)).is_err());
    }
}
