//! Deterministic graph generators used to build test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`all_graphs`].
pub const ALL_GRAPHS_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Gnp { n: usize, p: f64 },
}

pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    match *kind {
        GraphKind::Path { n } => Ok(path(n)),
        GraphKind::Cycle { n } => cycle(n),
        GraphKind::Complete { n } => Ok(complete(n)),
        GraphKind::CompleteBipartite { a, b } => Ok(complete_bipartite(a, b)),
        GraphKind::Gnp { n, p } => gnp(n, p, seed),
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_sorted_edges(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("a simple cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_sorted_edges(n, edges)
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Graph::from_sorted_edges(a + b, edges)
}

/// Erdős–Rényi G(n, p) driven by ChaCha8 seeded with `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Every labelled simple graph on `n` vertices, in increasing order of the
/// edge bitmask over the pairs `(i, j)`, `i < j`, taken in graph6 order.
pub fn all_graphs(n: usize) -> Result<AllGraphs> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(Error::SizeLimit { what: "all_graphs", n, limit: ALL_GRAPHS_MAX_N });
    }
    let pairs: Vec<(usize, usize)> =
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok(AllGraphs { n, pairs, next: 0, total })
}

pub struct AllGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("generated pairs are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllGraphs {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_graph6;

    #[test]
    fn counts() {
        assert_eq!(all_graphs(0).unwrap().count(), 1);
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert_eq!(all_graphs(5).unwrap().len(), 1024);
        assert!(matches!(all_graphs(8), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn all_graphs_are_distinct() {
        let mut codes: Vec<String> = all_graphs(4).unwrap().map(|g| to_graph6(&g)).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 64);
    }

    #[test]
    fn named_families() {
        assert_eq!(path(4).edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
        assert!(cycle(2).is_err());
        assert_eq!(complete(5).edge_count(), 10);
        let k23 = complete_bipartite(2, 3);
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(10, 0.3, 42).unwrap();
        let b = gnp(10, 0.3, 42).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(gnp(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(6, 1.0, 1).unwrap().edge_count(), 15);
        assert!(gnp(3, 1.5, 0).is_err());
    }
}
