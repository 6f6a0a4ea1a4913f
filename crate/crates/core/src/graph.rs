//! Simple undirected graphs, the edge-list text format, and BFS-based
//! distance computations (transmission, Wiener index, diameter).

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Distance reported by [`Graph::bfs_distances`] for vertices the source cannot reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and symmetric; there are no loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = Builder::new(n);
        for (u, v) in edges {
            builder.add(u, v, 0)?;
        }
        Ok(builder.finish())
    }

    /// Builds a graph from neighbor lists that are already known to be valid
    /// (sorted, symmetric, loop-free). Used by the family generators.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(u, nb)| nb.windows(2).all(|w| w[0] < w[1]) && !nb.contains(&u)));
        Graph {
            adjacency,
            m: degree_sum / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            let mut nb = self.adjacency[u].iter().peekable();
            (u + 1..n)
                .filter(move |&v| {
                    while nb.next_if(|&&w| w < v).is_some() {}
                    nb.peek() != Some(&&v)
                })
                .map(move |v| (u, v))
        })
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// The complement on the same vertex set. Total: connectivity of the
    /// result is left to the caller.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adjacency = (0..n)
            .map(|u| {
                let own = &self.adjacency[u];
                (0..n)
                    .filter(|&v| v != u && own.binary_search(&v).is_err())
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }

    /// Single-source BFS distances. Unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        if source >= self.n() {
            return Err(Error::InvalidSource(source));
        }
        Ok(self.bfs_unchecked(source))
    }

    fn bfs_unchecked(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs_unchecked(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Writes the canonical edge list: an `n <N>` header followed by the
    /// edges in lexicographic order, one per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.m + 1));
        writeln!(out, "n {}", self.n()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

struct Builder {
    adjacency: Vec<Vec<usize>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            adjacency: vec![Vec::new(); n],
        }
    }

    fn add(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        let n = self.adjacency.len();
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if self.adjacency[u].contains(&v) {
            return Err(Error::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    fn finish(mut self) -> Graph {
        for nb in &mut self.adjacency {
            nb.sort_unstable();
        }
        Graph::from_sorted_adjacency(self.adjacency)
    }
}

/// Parses the edge-list text format.
///
/// Blank lines and `#` comments are ignored. The first content line may be a
/// header `n <N>`; every other content line is `<u> <v>` with 0-based ids.
/// Without a header the vertex count is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.first() == Some(&"n") {
            if seen_content {
                return Err(Error::Parse {
                    line,
                    message: "header `n <N>` must be the first content line".into(),
                });
            }
            seen_content = true;
            let [_, count] = tokens[..] else {
                return Err(Error::Parse {
                    line,
                    message: "expected `n <N>`".into(),
                });
            };
            header = Some(parse_id(count, line)?);
            continue;
        }
        seen_content = true;
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected `<u> <v>`, got {content:?}"),
            });
        };
        edges.push((parse_id(a, line)?, parse_id(b, line)?, line));
    }

    let n = match header {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    if n == 0 {
        return Err(Error::Parse {
            line: 0,
            message: "graph has no vertices".into(),
        });
    }
    let mut builder = Builder::new(n);
    for (u, v, line) in edges {
        builder.add(u, v, line)?;
    }
    Ok(builder.finish())
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid vertex id {token:?}"),
    })
}

/// Per-vertex transmissions of a connected graph together with the Wiener
/// index and diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionProfile {
    pub sigma: Vec<u64>,
    pub wiener: u64,
    pub diameter: u32,
    /// Common transmission when the graph is transmission-regular.
    pub regular_k: Option<u64>,
}

impl TransmissionProfile {
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma_total(&self) -> u64 {
        2 * self.wiener
    }
}

/// All-pairs BFS. Sources are processed in parallel on the current rayon
/// pool; the result does not depend on the schedule.
pub fn transmission_profile(g: &Graph) -> Result<TransmissionProfile> {
    let first = g.bfs_distances(0)?;
    if let Some(v) = first.iter().position(|&d| d == UNREACHABLE) {
        return Err(Error::Disconnected {
            from: 0,
            unreachable: v,
        });
    }

    let rows: Vec<(u64, u32)> = (0..g.n())
        .into_par_iter()
        .map(|s| {
            let dist = g.bfs_unchecked(s);
            let total = dist.iter().map(|&d| u64::from(d)).sum();
            let ecc = dist.iter().copied().max().unwrap_or(0);
            (total, ecc)
        })
        .collect();

    let sigma: Vec<u64> = rows.iter().map(|r| r.0).collect();
    let diameter = rows.iter().map(|r| r.1).max().unwrap_or(0);
    let total = sigma
        .iter()
        .try_fold(0u64, |acc, &s| acc.checked_add(s))
        .ok_or(Error::Overflow("transmission sum"))?;
    debug_assert!(total % 2 == 0);
    let regular_k = match sigma.split_first() {
        Some((&k, rest)) if rest.iter().all(|&s| s == k) => Some(k),
        _ => None,
    };
    Ok(TransmissionProfile {
        sigma,
        wiener: total / 2,
        diameter,
        regular_k,
    })
}

/// Same as [`transmission_profile`], run on a dedicated pool with the given
/// number of worker threads.
pub fn transmission_profile_with_threads(g: &Graph, threads: usize) -> Result<TransmissionProfile> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| transmission_profile(g))
}
