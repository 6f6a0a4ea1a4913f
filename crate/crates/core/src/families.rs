//! Deterministic generators for the graph families with known closed forms,
//! plus paths, cycles and complete graphs for calibration.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default upper bound on the number of generated vertices.
pub const DEFAULT_VERTEX_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `Q_n`: binary `n`-tuples, adjacent when they differ in one coordinate.
    Hypercube {
        n: u32,
    },
    /// `KG(p,k)`: `k`-subsets of a `p`-set, adjacent when disjoint.
    Kneser {
        p: u32,
        k: u32,
    },
    /// `t`-subsets of a `p`-set, adjacent when they intersect.
    Intersection {
        p: u32,
        t: u32,
    },
    /// Achiral polyhex nanotorus `T[p,q]` with `p·q` vertices.
    Nanotorus {
        p: u32,
        q: u32,
    },
    Path {
        n: u32,
    },
    Cycle {
        n: u32,
    },
    Complete {
        n: u32,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Hypercube { n } => write!(f, "hypercube(n={n})"),
            FamilySpec::Kneser { p, k } => write!(f, "kneser(p={p},k={k})"),
            FamilySpec::Intersection { p, t } => write!(f, "intersection(p={p},t={t})"),
            FamilySpec::Nanotorus { p, q } => write!(f, "nanotorus(p={p},q={q})"),
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
        }
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidFamily(msg.into()))
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::Kneser { .. } => "kneser",
            FamilySpec::Intersection { .. } => "intersection",
            FamilySpec::Nanotorus { .. } => "nanotorus",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
        }
    }

    /// Checks the parameter constraints, including connectivity of the result.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Hypercube { n } => {
                if n == 0 || n > 63 {
                    return invalid(format!("hypercube needs 1 ≤ n ≤ 63, got n={n}"));
                }
            }
            FamilySpec::Kneser { p, k } => {
                if k == 0 || p > 63 {
                    return invalid(format!("kneser needs k ≥ 1 and p ≤ 63, got p={p}, k={k}"));
                }
                if k == 1 {
                    if p < 2 {
                        return invalid(format!("kneser(p,1) needs p ≥ 2, got p={p}"));
                    }
                } else if p < 2 * k {
                    return invalid(format!("kneser needs p ≥ 2k, got p={p}, k={k}"));
                } else if p == 2 * k {
                    return invalid(format!(
                        "kneser(p={p},k={k}) with p = 2k is a perfect matching and disconnected"
                    ));
                }
            }
            FamilySpec::Intersection { p, t } => {
                if !(1 < t && t < p) || p > 63 {
                    return invalid(format!(
                        "intersection graph needs 1 < t < p ≤ 63, got p={p}, t={t}"
                    ));
                }
            }
            FamilySpec::Nanotorus { p, q } => {
                if p < 2 || p % 2 != 0 {
                    return invalid(format!("nanotorus needs even p ≥ 2, got p={p}"));
                }
                if q % 2 != 0 {
                    return invalid(format!("nanotorus needs even q, got q={q}"));
                }
                if q < 4 {
                    return invalid(format!(
                        "nanotorus needs q ≥ 4, got q={q}: rings of length {q} would need parallel edges"
                    ));
                }
            }
            FamilySpec::Path { n } | FamilySpec::Complete { n } => {
                if n == 0 {
                    return invalid(format!("{} needs n ≥ 1", self.name()));
                }
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return invalid(format!("cycle needs n ≥ 3, got n={n}"));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> BigUint {
        match *self {
            FamilySpec::Hypercube { n } => BigUint::from(1u8) << n,
            FamilySpec::Kneser { p, k } => binomial(p.into(), k.into()),
            FamilySpec::Intersection { p, t } => binomial(p.into(), t.into()),
            FamilySpec::Nanotorus { p, q } => BigUint::from(p) * q,
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => {
                n.into()
            }
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.generate_with_cap(DEFAULT_VERTEX_CAP)
    }

    pub fn generate_with_cap(&self, cap: usize) -> Result<Graph> {
        self.validate()?;
        let count = self.vertex_count();
        if count > BigUint::from(cap) {
            return Err(Error::TooLarge {
                requested: count.to_string(),
                cap,
            });
        }
        let graph = match *self {
            FamilySpec::Hypercube { n } => hypercube(n),
            FamilySpec::Kneser { p, k } => subset_graph(p, k, |a, b| a & b == 0),
            FamilySpec::Intersection { p, t } => subset_graph(p, t, |a, b| a & b != 0),
            FamilySpec::Nanotorus { p, q } => nanotorus(p as usize, q as usize),
            FamilySpec::Path { n } => {
                let n = n as usize;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
            }
            FamilySpec::Cycle { n } => {
                let n = n as usize;
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
            }
            FamilySpec::Complete { n } => {
                let n = n as usize;
                Graph::from_sorted_adjacency(
                    (0..n)
                        .map(|u| (0..n).filter(|&v| v != u).collect())
                        .collect(),
                )
            }
        };
        Ok(graph)
    }
}

fn hypercube(n: u32) -> Graph {
    let size = 1usize << n;
    let adjacency = (0..size)
        .into_par_iter()
        .map(|v| {
            let mut nb: Vec<usize> = (0..n).map(|bit| v ^ (1 << bit)).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    Graph::from_sorted_adjacency(adjacency)
}

/// All `k`-subsets of `{0..p-1}` as bitmasks, in colexicographic order.
///
/// For subsets of equal size colex order coincides with numeric order of
/// the masks, so the masks are produced in increasing order.
pub fn colex_subsets(p: u32, k: u32) -> Vec<u64> {
    if k > p || p > 63 {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << p;
    let mut out = Vec::new();
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        out.push(mask);
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    out
}

fn subset_graph(p: u32, k: u32, adjacent: impl Fn(u64, u64) -> bool + Sync) -> Graph {
    let subsets = colex_subsets(p, k);
    let adjacency = (0..subsets.len())
        .into_par_iter()
        .map(|i| {
            let a = subsets[i];
            (0..subsets.len())
                .filter(|&j| j != i && adjacent(a, subsets[j]))
                .collect()
        })
        .collect();
    Graph::from_sorted_adjacency(adjacency)
}

/// Hexagonal torus on `p` rows of `q`-cycles. Vertex `(row, pos)` has id
/// `row·q + pos`; consecutive ring positions are joined, and `(row, pos)`
/// is joined to `(row+1 mod p, pos)` exactly when `row + pos` is even.
fn nanotorus(p: usize, q: usize) -> Graph {
    let id = |row: usize, pos: usize| row * q + pos;
    let adjacency = (0..p * q)
        .into_par_iter()
        .map(|v| {
            let (row, pos) = (v / q, v % q);
            let rung = if (row + pos) % 2 == 0 {
                id((row + 1) % p, pos)
            } else {
                id((row + p - 1) % p, pos)
            };
            let mut nb = vec![id(row, (pos + 1) % q), id(row, (pos + q - 1) % q), rung];
            nb.sort_unstable();
            nb
        })
        .collect();
    Graph::from_sorted_adjacency(adjacency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::transmission_profile;

    #[test]
    fn colex_order() {
        let subsets = colex_subsets(4, 2);
        assert_eq!(
            subsets,
            vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        );
        assert_eq!(colex_subsets(5, 2).len(), 10);
        assert_eq!(colex_subsets(3, 0), vec![0]);
        assert!(colex_subsets(2, 3).is_empty());
    }

    #[test]
    fn hypercube_two_is_four_cycle() {
        let g = FamilySpec::Hypercube { n: 2 }.generate().unwrap();
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(g, c4);
    }

    #[test]
    fn kneser_five_two_is_petersen_shaped() {
        let g = FamilySpec::Kneser { p: 5, k: 2 }.generate().unwrap();
        assert_eq!((g.n(), g.m(), g.is_regular()), (10, 15, Some(3)));
        let tp = transmission_profile(&g).unwrap();
        assert_eq!((tp.regular_k, tp.diameter), (Some(15), 2));
        // girth 5: no triangles, no 4-cycles
        for u in 0..g.n() {
            for &v in g.neighbors(u) {
                for &w in g.neighbors(v) {
                    if w != u {
                        assert!(!g.has_edge(u, w));
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let g = FamilySpec::Intersection { p: 4, t: 2 }.generate().unwrap();
        assert_eq!((g.n(), g.m(), g.is_regular()), (6, 12, Some(4)));

        let k3 = FamilySpec::Intersection { p: 3, t: 2 }.generate().unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));

        let kneser = FamilySpec::Kneser { p: 6, k: 2 }.generate().unwrap();
        let inter = FamilySpec::Intersection { p: 6, t: 2 }.generate().unwrap();
        assert_eq!(inter, kneser.complement());
    }

    #[test]
    fn nanotorus_is_cubic() {
        for (p, q) in [(2, 4), (4, 4), (6, 4), (4, 6), (8, 6)] {
            let g = FamilySpec::Nanotorus { p, q }.generate().unwrap();
            assert_eq!(g.n(), (p * q) as usize);
            assert_eq!(g.is_regular(), Some(3), "T[{p},{q}]");
            assert_eq!(2 * g.m(), 3 * g.n());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn nanotorus_two_four_is_the_cube() {
        let t = FamilySpec::Nanotorus { p: 2, q: 4 }.generate().unwrap();
        let tp = transmission_profile(&t).unwrap();
        assert_eq!(tp.regular_k, Some(12));
    }

    #[test]
    fn invalid_parameters() {
        let bad = [
            FamilySpec::Hypercube { n: 0 },
            FamilySpec::Kneser { p: 4, k: 2 },
            FamilySpec::Kneser { p: 3, k: 2 },
            FamilySpec::Kneser { p: 5, k: 0 },
            FamilySpec::Intersection { p: 4, t: 1 },
            FamilySpec::Intersection { p: 4, t: 4 },
            FamilySpec::Nanotorus { p: 3, q: 2 },
            FamilySpec::Nanotorus { p: 4, q: 5 },
            FamilySpec::Nanotorus { p: 4, q: 2 },
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Path { n: 0 },
        ];
        for spec in bad {
            assert!(
                matches!(spec.generate(), Err(Error::InvalidFamily(_))),
                "{spec}"
            );
        }
    }

    #[test]
    fn vertex_cap() {
        let spec = FamilySpec::Hypercube { n: 15 };
        assert!(matches!(spec.generate(), Err(Error::TooLarge { .. })));
        assert_eq!(spec.generate_with_cap(1 << 15).unwrap().n(), 1 << 15);
        assert!(matches!(
            FamilySpec::Kneser { p: 41, k: 20 }.generate(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn calibration_graphs() {
        assert_eq!(FamilySpec::Path { n: 1 }.generate().unwrap().m(), 0);
        assert_eq!(
            FamilySpec::Cycle { n: 5 }.generate().unwrap().is_regular(),
            Some(2)
        );
        assert_eq!(FamilySpec::Complete { n: 6 }.generate().unwrap().m(), 15);
    }
}
