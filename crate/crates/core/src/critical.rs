//! Polynomial-time critical-independence computations on the bipartite
//! double cover.
//!
//! For a graph G on n vertices, B(G) has vertex set V ∪ V′ and an edge v–w′
//! for every edge vw of G. An independent set of B(G) is a pair (X, Y′) with
//! Y ∩ N(X) = ∅, so α(B(G)) = n + max_X d(X) = n + d(G), and by König's
//! theorem α(B(G)) = 2n − μ(B(G)). Forcing vertices into, or out of, the
//! independent set of B(G) answers the membership questions needed for
//! α′(G) and ker(G) with one bipartite matching each.

use crate::graph::Graph;
use crate::matching::{max_matching_bipartite, Bipartite};
use crate::set::VertexSet;

/// The bipartite double cover B(G): `v` on the left, `v + n` on the right.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub graph: Graph,
    n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl DoubleCover {
    pub fn original_order(&self) -> usize {
        self.n
    }

    pub fn left_part(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Which copy a cover vertex is, and the original vertex it copies.
    pub fn part_of(&self, v: usize) -> (Side, usize) {
        if v < self.n {
            (Side::Left, v)
        } else {
            (Side::Right, v - self.n)
        }
    }
}

pub fn double_cover(g: &Graph) -> DoubleCover {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().flat_map(|&(u, v)| [(u, v + n), (v, u + n)]).collect();
    edges.sort_unstable();
    DoubleCover { graph: Graph::from_sorted_edges(2 * n, edges), n }
}

/// Outcome of one constrained maximisation of d over subsets.
#[derive(Clone, Debug)]
struct Witness {
    /// max d(X) subject to the constraints.
    value: i64,
    /// X \ N(X) for the maximising X: independent, with d at least `value`.
    independent: VertexSet,
}

struct CoverSolver<'a> {
    g: &'a Graph,
}

impl<'a> CoverSolver<'a> {
    fn new(g: &'a Graph) -> Self {
        Self { g }
    }

    /// max { d(X) : forced ⊆ X \ N(X), excluded ∉ X }, or `None` when
    /// `forced` is not independent (no such X exists).
    fn solve(&self, forced: &VertexSet, excluded: Option<usize>) -> Option<Witness> {
        let g = self.g;
        let n = g.n();
        let blocked = g.neighborhood_unchecked(forced);
        if !blocked.is_disjoint(forced) || excluded.is_some_and(|v| forced.contains(v)) {
            return None;
        }
        // Forcing v and v′ into the independent set removes N(v)′ and N(v).
        let removed = blocked.union(forced);
        let right: Vec<usize> = (0..n).filter(|v| !removed.contains(*v)).collect();
        let left: Vec<usize> =
            right.iter().copied().filter(|&v| Some(v) != excluded).collect();
        let mut right_index = vec![usize::MAX; n];
        for (i, &v) in right.iter().enumerate() {
            right_index[v] = i;
        }
        let adj = left
            .iter()
            .map(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&w| right_index[w] != usize::MAX)
                    .map(|&w| right_index[w])
                    .collect()
            })
            .collect();
        let b = Bipartite { right: right.len(), adj };
        let m = b.max_matching();
        let (in_left, in_right) = b.max_independent_set(&m);
        let x: VertexSet = left
            .iter()
            .zip(&in_left)
            .filter(|(_, keep)| **keep)
            .map(|(&v, _)| v)
            .collect();
        let y: VertexSet = right
            .iter()
            .zip(&in_right)
            .filter(|(_, keep)| **keep)
            .map(|(&v, _)| v)
            .collect();
        let size = 2 * forced.len() + left.len() + right.len() - m.size;
        Some(Witness {
            value: size as i64 - n as i64,
            independent: x.intersection(&y).union(forced),
        })
    }
}

/// μ(B(G)) by Hopcroft-Karp on the double cover graph.
pub fn double_cover_matching_size(g: &Graph) -> usize {
    let cover = double_cover(g);
    max_matching_bipartite(&cover.graph, &cover.left_part())
        .expect("double cover is bipartite by construction")
        .len()
}

/// d(G) = α(B(G)) − n = n − μ(B(G)).
pub fn critical_difference_poly(g: &Graph) -> i64 {
    g.n() as i64 - double_cover_matching_size(g) as i64
}

/// A critical independent set read off a maximum independent set J of
/// B(G): the vertices v with both v and v′ in J.
pub fn critical_set_poly(g: &Graph) -> VertexSet {
    let w = CoverSolver::new(g).solve(&VertexSet::new(), None).expect("empty set is independent");
    let s = w.independent;
    assert!(
        g.is_independent(&s).unwrap() && g.difference(&s).unwrap() == w.value,
        "critical_set_poly produced a non-critical set"
    );
    s
}

/// A maximum critical independent set, lexicographically smallest by vertex
/// index.
///
/// Vertices are scanned in increasing order and kept when the chosen set
/// plus the vertex still lies inside some critical independent set. The
/// chosen prefix is always contained in a critical independent set, so the
/// result is an inclusion-maximal critical independent set; every such set
/// extends to a maximum one, hence it has size α′(G).
pub fn max_crit_set_poly(g: &Graph) -> VertexSet {
    let solver = CoverSolver::new(g);
    let d = critical_difference_poly(g);
    let mut chosen = VertexSet::new();
    for v in 0..g.n() {
        if chosen.contains(v) {
            continue;
        }
        let mut trial = chosen.clone();
        trial.insert(v);
        if let Some(w) = solver.solve(&trial, None) {
            if w.value == d {
                chosen = trial;
            }
        }
    }
    assert!(
        g.is_independent(&chosen).unwrap() && g.difference(&chosen).unwrap() == d,
        "max_crit_set_poly produced a non-critical set"
    );
    chosen
}

/// α′(G), the size of a maximum critical independent set.
pub fn alpha_prime_poly(g: &Graph) -> usize {
    max_crit_set_poly(g).len()
}

/// ker(G) by vertex deletion: v ∈ ker(G) ⟺ d(G − v) < d(G).
///
/// Validated against the exhaustive oracle on every labelled graph with at
/// most 7 vertices; [`ker_by_exclusion`] is an independent route to the same
/// set.
pub fn ker_poly(g: &Graph) -> VertexSet {
    let d = critical_difference_poly(g);
    (0..g.n())
        .filter(|&v| {
            let mut w = VertexSet::new();
            w.insert(v);
            let rest = g.remove_vertices(&w).expect("vertex in range");
            critical_difference_poly(&rest.graph) < d
        })
        .collect()
}

/// ker(G) by exclusion on the double cover.
///
/// v lies in every critical independent set exactly when excluding v from X
/// lowers max d(X): a critical independent set avoiding v is such an X, and
/// conversely any X avoiding v yields the independent set X \ N(X), still
/// avoiding v, whose difference is at least d(X). In B(G) this deletes the
/// left copy of v only; v′ stays, so v still counts as a neighbour.
pub fn ker_by_exclusion(g: &Graph) -> VertexSet {
    let solver = CoverSolver::new(g);
    let d = critical_difference_poly(g);
    (0..g.n())
        .filter(|&v| {
            let w = solver.solve(&VertexSet::new(), Some(v)).expect("empty set is independent");
            w.value < d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::generate::{all_graphs, complete};
    use crate::oracle::{self, ExactAnalysis};

    #[test]
    fn double_cover_shapes() {
        let k1 = double_cover(&Graph::empty(1));
        assert_eq!((k1.graph.n(), k1.graph.edge_count()), (2, 0));
        let k2 = double_cover(&complete(2));
        assert_eq!(k2.graph.edges(), &[(0, 3), (1, 2)]);
        assert_eq!(k2.part_of(3), (Side::Right, 1));
        let fig = double_cover(&Fixture::Fig2G.graph());
        assert_eq!((fig.graph.n(), fig.graph.edge_count()), (26, 28));
    }

    #[test]
    fn double_cover_matching_of_fig2() {
        assert_eq!(double_cover_matching_size(&Fixture::Fig2G.graph()), 11);
        let cover = double_cover(&Fixture::Fig2G.graph());
        assert_eq!(oracle::alpha(&cover.graph).unwrap(), 15);
    }

    #[test]
    fn fixture_values() {
        let g = Fixture::Fig2G.graph();
        assert_eq!(critical_difference_poly(&g), 2);
        assert_eq!(alpha_prime_poly(&g), 6);
        assert_eq!(
            max_crit_set_poly(&g),
            g.labeled_set(&["a", "b", "c", "d", "e", "g"]).unwrap()
        );
        assert_eq!(ker_poly(&g), g.labeled_set(&["a", "b", "c"]).unwrap());
        assert_eq!(ker_by_exclusion(&g), ker_poly(&g));
        assert_eq!(critical_difference_poly(&complete(2)), 0);
    }

    #[test]
    fn edgeless_and_complete() {
        let e = Graph::empty(5);
        assert_eq!(critical_set_poly(&e), e.vertices());
        assert_eq!(alpha_prime_poly(&e), 5);
        assert_eq!(ker_poly(&e), e.vertices());
        let k3 = complete(3);
        let s = critical_set_poly(&k3);
        assert!(s.len() <= 1);
        assert_eq!(k3.difference(&s).unwrap(), 0);
        assert_eq!(ker_poly(&Graph::empty(0)), VertexSet::new());
    }

    #[test]
    fn agrees_with_oracle_on_all_small_graphs() {
        for n in 0..=6 {
            for g in all_graphs(n).unwrap() {
                let exact = ExactAnalysis::new(&g).unwrap();
                let d = exact.critical_independence_difference();
                assert_eq!(critical_difference_poly(&g), d);
                let s = critical_set_poly(&g);
                assert!(exact.is_critical_independent(s.to_mask().unwrap()));
                let m = max_crit_set_poly(&g);
                let lex_smallest = exact
                    .max_crit_masks()
                    .iter()
                    .map(|&x| VertexSet::from_mask(x).to_vec())
                    .min()
                    .unwrap();
                assert_eq!(m.to_vec(), lex_smallest);
                assert_eq!(ker_poly(&g), exact.ker(), "{:?}", g.edges());
                assert_eq!(ker_by_exclusion(&g), exact.ker(), "{:?}", g.edges());
            }
        }
    }
}
