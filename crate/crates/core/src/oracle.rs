//! Exhaustive ground truth for the critical-independence invariants.
//!
//! Everything here enumerates independent sets (or, for d(G), arbitrary
//! subsets) of graphs with at most 64 vertices, so sets are plain `u64`
//! masks internally. The running time is exponential: the enumeration is
//! only practical up to roughly 16 vertices for dense-free inputs, which is
//! the default cap enforced by [`crate::report`].

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Hard limit for bitmask enumeration.
pub const ORACLE_MAX_N: usize = 64;
/// Limit for the scan of d over all subsets.
pub const SUBSET_SCAN_MAX_N: usize = 24;
/// Above this order the all-subset scan switches to branch and bound.
const RAW_SUBSET_SCAN_MAX_N: usize = 20;

#[inline]
pub(crate) fn neighborhood_mask(adj: &[u64], mut x: u64) -> u64 {
    let mut out = 0;
    while x != 0 {
        out |= adj[x.trailing_zeros() as usize];
        x &= x - 1;
    }
    out
}

#[inline]
pub(crate) fn difference_mask(adj: &[u64], x: u64) -> i64 {
    x.count_ones() as i64 - neighborhood_mask(adj, x).count_ones() as i64
}

#[inline]
pub(crate) fn is_independent_mask(adj: &[u64], x: u64) -> bool {
    neighborhood_mask(adj, x) & x == 0
}

fn masks_of(g: &Graph, what: &'static str) -> Result<Vec<u64>> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::SizeLimit { what, n: g.n(), limit: ORACLE_MAX_N });
    }
    g.adjacency_masks()
}

/// Independent sets in increasing bitmask order, including the empty set.
pub struct IndependentSets {
    adj: Vec<u64>,
    // (undecided prefix length, chosen, forbidden)
    stack: Vec<(usize, u64, u64)>,
}

impl Iterator for IndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.next_mask().map(VertexSet::from_mask)
    }
}

impl IndependentSets {
    fn new(adj: Vec<u64>) -> Self {
        let n = adj.len();
        Self { adj, stack: vec![(n, 0, 0)] }
    }

    pub fn next_mask(&mut self) -> Option<u64> {
        // Vertices are decided from the highest index down, "absent" first,
        // which yields masks in increasing numeric order.
        while let Some((k, chosen, forbidden)) = self.stack.pop() {
            if k == 0 {
                return Some(chosen);
            }
            let v = k - 1;
            if forbidden >> v & 1 == 0 {
                self.stack.push((v, chosen | 1 << v, forbidden | self.adj[v]));
            }
            self.stack.push((v, chosen, forbidden));
        }
        None
    }
}

pub fn enumerate_independent_sets(g: &Graph) -> Result<IndependentSets> {
    Ok(IndependentSets::new(masks_of(g, "independent-set enumeration")?))
}

/// Maximum over all subsets X of |X| - |N(X)|, by direct scan.
pub fn critical_difference(g: &Graph) -> Result<i64> {
    if g.n() > SUBSET_SCAN_MAX_N {
        return Err(Error::SizeLimit {
            what: "critical difference subset scan",
            n: g.n(),
            limit: SUBSET_SCAN_MAX_N,
        });
    }
    let adj = g.adjacency_masks()?;
    if g.n() <= RAW_SUBSET_SCAN_MAX_N {
        Ok((0..1u64 << g.n()).map(|x| difference_mask(&adj, x)).max().unwrap_or(0))
    } else {
        let mut best = 0;
        subset_branch_and_bound(&adj, 0, 0, 0, &mut best);
        Ok(best)
    }
}

fn subset_branch_and_bound(adj: &[u64], k: usize, chosen: u64, nbhd: u64, best: &mut i64) {
    let current = chosen.count_ones() as i64 - nbhd.count_ones() as i64;
    *best = (*best).max(current);
    // N only grows, so adding every remaining vertex is an upper bound.
    if k == adj.len() || current + (adj.len() - k) as i64 <= *best {
        return;
    }
    subset_branch_and_bound(adj, k + 1, chosen | 1 << k, nbhd | adj[k], best);
    subset_branch_and_bound(adj, k + 1, chosen, nbhd, best);
}

/// α of the subgraph induced by `within`.
pub(crate) fn alpha_within(adj: &[u64], within: u64) -> usize {
    if within == 0 {
        return 0;
    }
    let v = within.trailing_zeros() as usize;
    let rest = within & !(1 << v);
    let take = 1 + alpha_within(adj, rest & !adj[v]);
    if adj[v] & rest == 0 {
        return take;
    }
    take.max(alpha_within(adj, rest))
}

/// All exhaustively computed invariants of one graph.
#[derive(Clone, Debug)]
pub struct ExactAnalysis {
    n: usize,
    adj: Vec<u64>,
    independent: Vec<u64>,
    alpha: usize,
    omega: Vec<u64>,
    core: u64,
    corona: u64,
    id: i64,
    critical: Vec<u64>,
    ker: u64,
    max_crit: Vec<u64>,
    alpha_prime: usize,
    nucleus: u64,
    diadem: u64,
}

fn fold_and(sets: &[u64]) -> u64 {
    sets.iter().fold(u64::MAX, |a, &b| a & b)
}

fn fold_or(sets: &[u64]) -> u64 {
    sets.iter().fold(0, |a, &b| a | b)
}

fn family(masks: &[u64]) -> SetFamily {
    masks.iter().map(|&m| VertexSet::from_mask(m)).collect()
}

impl ExactAnalysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let adj = masks_of(g, "exact oracle")?;
        let mut it = IndependentSets::new(adj.clone());
        let independent: Vec<u64> = std::iter::from_fn(|| it.next_mask()).collect();

        let alpha = independent.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
        let omega: Vec<u64> =
            independent.iter().copied().filter(|s| s.count_ones() as usize == alpha).collect();

        let diffs: Vec<i64> = independent.iter().map(|&s| difference_mask(&adj, s)).collect();
        let id = diffs.iter().copied().max().unwrap_or(0);
        let critical: Vec<u64> = independent
            .iter()
            .zip(&diffs)
            .filter(|(_, &d)| d == id)
            .map(|(&s, _)| s)
            .collect();
        let alpha_prime = critical.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
        let max_crit: Vec<u64> = critical
            .iter()
            .copied()
            .filter(|s| s.count_ones() as usize == alpha_prime)
            .collect();

        Ok(Self {
            n: g.n(),
            core: fold_and(&omega),
            corona: fold_or(&omega),
            ker: fold_and(&critical),
            nucleus: fold_and(&max_crit),
            diadem: fold_or(&max_crit),
            adj,
            independent,
            alpha,
            omega,
            id,
            critical,
            max_crit,
            alpha_prime,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn alpha_prime(&self) -> usize {
        self.alpha_prime
    }

    /// id(G), the maximum difference over independent sets. Equal to d(G).
    pub fn critical_independence_difference(&self) -> i64 {
        self.id
    }

    /// d(G) over all subsets, asserted equal to id(G).
    pub fn critical_difference_verified(&self, g: &Graph) -> Result<i64> {
        let d = critical_difference(g)?;
        assert_eq!(d, self.id, "d(G) != id(G): oracle bug");
        Ok(d)
    }

    pub fn independent_masks(&self) -> &[u64] {
        &self.independent
    }

    pub fn omega_masks(&self) -> &[u64] {
        &self.omega
    }

    pub fn critical_masks(&self) -> &[u64] {
        &self.critical
    }

    pub fn max_crit_masks(&self) -> &[u64] {
        &self.max_crit
    }

    pub fn core_mask(&self) -> u64 {
        self.core
    }

    pub fn corona_mask(&self) -> u64 {
        self.corona
    }

    pub fn ker_mask(&self) -> u64 {
        self.ker
    }

    pub fn nucleus_mask(&self) -> u64 {
        self.nucleus
    }

    pub fn diadem_mask(&self) -> u64 {
        self.diadem
    }

    pub fn omega(&self) -> SetFamily {
        family(&self.omega)
    }

    pub fn critical_independent_sets(&self) -> SetFamily {
        family(&self.critical)
    }

    pub fn max_crit_indep(&self) -> SetFamily {
        family(&self.max_crit)
    }

    pub fn core(&self) -> VertexSet {
        VertexSet::from_mask(self.core)
    }

    pub fn corona(&self) -> VertexSet {
        VertexSet::from_mask(self.corona)
    }

    pub fn ker(&self) -> VertexSet {
        VertexSet::from_mask(self.ker)
    }

    pub fn nucleus(&self) -> VertexSet {
        VertexSet::from_mask(self.nucleus)
    }

    pub fn diadem(&self) -> VertexSet {
        VertexSet::from_mask(self.diadem)
    }

    pub fn difference(&self, x: u64) -> i64 {
        difference_mask(&self.adj, x)
    }

    pub fn neighborhood(&self, x: u64) -> u64 {
        neighborhood_mask(&self.adj, x)
    }

    pub fn is_independent(&self, x: u64) -> bool {
        is_independent_mask(&self.adj, x)
    }

    /// Independent and of difference d(G).
    pub fn is_critical_independent(&self, x: u64) -> bool {
        self.is_independent(x) && self.difference(x) == self.id
    }

    /// Difference d(G); the set need not be independent.
    pub fn is_critical_set(&self, x: u64) -> bool {
        self.difference(x) == self.id
    }

    /// |A| = α(G[N[A]]) for an independent A.
    pub fn is_local_max_ind(&self, a: u64) -> bool {
        let closed = self.neighborhood(a) | a;
        a.count_ones() as usize == alpha_within(&self.adj, closed)
    }
}

/// μ(G) by exhaustive branching on the lowest uncovered vertex.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, covered: &mut [bool], from: usize) -> usize {
        let Some(v) = (from..g.n()).find(|&v| !covered[v]) else { return 0 };
        covered[v] = true;
        let mut best = go(g, covered, v + 1);
        for &w in g.neighbors(v) {
            if !covered[w] {
                covered[w] = true;
                best = best.max(1 + go(g, covered, v + 1));
                covered[w] = false;
            }
        }
        covered[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

pub fn alpha(g: &Graph) -> Result<usize> {
    Ok(ExactAnalysis::new(g)?.alpha())
}

pub fn omega(g: &Graph) -> Result<SetFamily> {
    Ok(ExactAnalysis::new(g)?.omega())
}

pub fn core(g: &Graph) -> Result<VertexSet> {
    Ok(ExactAnalysis::new(g)?.core())
}

pub fn corona(g: &Graph) -> Result<VertexSet> {
    Ok(ExactAnalysis::new(g)?.corona())
}

pub fn critical_independence_difference(g: &Graph) -> Result<i64> {
    Ok(ExactAnalysis::new(g)?.critical_independence_difference())
}

pub fn critical_independent_sets(g: &Graph) -> Result<SetFamily> {
    Ok(ExactAnalysis::new(g)?.critical_independent_sets())
}

pub fn ker_oracle(g: &Graph) -> Result<VertexSet> {
    Ok(ExactAnalysis::new(g)?.ker())
}

pub fn max_crit_indep(g: &Graph) -> Result<SetFamily> {
    Ok(ExactAnalysis::new(g)?.max_crit_indep())
}

pub fn alpha_prime(g: &Graph) -> Result<usize> {
    Ok(ExactAnalysis::new(g)?.alpha_prime())
}

pub fn nucleus(g: &Graph) -> Result<VertexSet> {
    Ok(ExactAnalysis::new(g)?.nucleus())
}

pub fn diadem(g: &Graph) -> Result<VertexSet> {
    Ok(ExactAnalysis::new(g)?.diadem())
}

/// Whether `a` is a maximum independent set of G[N[a]].
pub fn is_local_max_ind(g: &Graph, a: &VertexSet) -> Result<bool> {
    if !g.is_independent(a)? {
        return Err(Error::Domain("local maximality is defined for independent sets only".into()));
    }
    let adj = masks_of(g, "local maximum test")?;
    let a = a.to_mask().expect("checked against n <= 64");
    let closed = neighborhood_mask(&adj, a) | a;
    Ok(a.count_ones() as usize == alpha_within(&adj, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::generate::{all_graphs, complete, cycle, path};

    fn masks(f: &SetFamily) -> Vec<u64> {
        f.iter().map(|s| s.to_mask().unwrap()).collect()
    }

    #[test]
    fn enumeration_small_cases() {
        let k1 = Graph::empty(1);
        assert_eq!(enumerate_independent_sets(&k1).unwrap().count(), 2);
        assert_eq!(enumerate_independent_sets(&complete(3)).unwrap().count(), 4);
        let p3: Vec<u64> = enumerate_independent_sets(&path(3))
            .unwrap()
            .map(|s| s.to_mask().unwrap())
            .collect();
        assert_eq!(p3, vec![0b000, 0b001, 0b010, 0b100, 0b101]);
        assert_eq!(enumerate_independent_sets(&Graph::empty(0)).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_matches_filtered_scan() {
        for g in all_graphs(5).unwrap() {
            let adj = g.adjacency_masks().unwrap();
            let brute: Vec<u64> =
                (0..1u64 << g.n()).filter(|&x| is_independent_mask(&adj, x)).collect();
            let mut it = enumerate_independent_sets(&g).unwrap();
            let got: Vec<u64> = std::iter::from_fn(|| it.next_mask()).collect();
            assert_eq!(got, brute);
        }
    }

    #[test]
    fn trivial_graphs() {
        let e4 = Graph::empty(4);
        let a = ExactAnalysis::new(&e4).unwrap();
        assert_eq!(a.alpha(), 4);
        assert_eq!(masks(&a.omega()), vec![0b1111]);
        assert_eq!(masks(&a.critical_independent_sets()), vec![0b1111]);
        assert_eq!(a.ker().len(), 4);

        let k4 = complete(4);
        assert_eq!(core(&k4).unwrap(), VertexSet::new());
        assert_eq!(corona(&k4).unwrap(), k4.vertices());

        assert_eq!(critical_difference(&complete(2)).unwrap(), 0);
        assert_eq!(critical_independence_difference(&complete(2)).unwrap(), 0);

        let e2 = Graph::empty(2);
        let a = ExactAnalysis::new(&e2).unwrap();
        assert_eq!(masks(&a.max_crit_indep()), vec![0b11]);
        assert_eq!(a.alpha_prime(), 2);
        assert_eq!(a.nucleus(), e2.vertices());
        assert_eq!(a.diadem(), e2.vertices());

        assert_eq!(ker_oracle(&Graph::empty(3)).unwrap().len(), 3);
        assert_eq!(ker_oracle(&cycle(4).unwrap()).unwrap(), VertexSet::new());
    }

    #[test]
    fn empty_graph_conventions() {
        let g = Graph::empty(0);
        let a = ExactAnalysis::new(&g).unwrap();
        assert_eq!(a.alpha(), 0);
        assert_eq!(masks(&a.omega()), vec![0]);
        assert_eq!(a.critical_independence_difference(), 0);
        assert_eq!(critical_difference(&g).unwrap(), 0);
        assert!(a.ker().is_empty() && a.core().is_empty());
        assert!(a.nucleus().is_empty() && a.diadem().is_empty());
    }

    #[test]
    fn local_maximum() {
        let p3 = path(3);
        assert!(!is_local_max_ind(&p3, &VertexSet::from_mask(0b010)).unwrap());
        assert!(is_local_max_ind(&p3, &VertexSet::from_mask(0b101)).unwrap());
        assert!(matches!(
            is_local_max_ind(&p3, &VertexSet::from_mask(0b011)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fig1_g1_values() {
        let g = Fixture::Fig1G1.graph();
        let a = ExactAnalysis::new(&g).unwrap();
        let set = |names: &[&str]| g.labeled_set(names).unwrap();
        assert_eq!(a.alpha(), 7);
        assert_eq!(a.core(), set(&["a", "b", "c", "d"]));
        assert_eq!(a.ker(), set(&["a", "b", "c"]));
        assert_eq!(a.nucleus(), set(&["a", "b", "c", "d", "g"]));
        assert_eq!(
            a.max_crit_indep().sets(),
            &[set(&["a", "b", "c", "d", "e", "g"]), set(&["a", "b", "c", "d", "f", "g"])]
        );
        let crit = a.critical_independent_sets();
        assert!(crit.contains(&set(&["a", "b", "c"])));
        assert!(crit.contains(&set(&["a", "b", "c", "d"])));
        assert_eq!(a.critical_independence_difference(), 2);
        assert_eq!(a.critical_difference_verified(&g).unwrap(), 2);
    }

    #[test]
    fn fig1_g2_and_fig3_values() {
        let g2 = Fixture::Fig1G2.graph();
        let a = ExactAnalysis::new(&g2).unwrap();
        let xyzw = g2.labeled_set(&["x", "y", "z", "w"]).unwrap();
        assert_eq!(a.core(), xyzw);
        assert!(!a.critical_independent_sets().contains(&xyzw));
        assert_eq!(critical_difference(&g2).unwrap(), 2);

        let g3 = Fixture::Fig3G.graph();
        let a = ExactAnalysis::new(&g3).unwrap();
        assert_eq!(a.alpha(), 4);
        assert_eq!(a.core(), g3.labeled_set(&["a", "b"]).unwrap());
        assert_eq!(a.corona(), g3.labeled_set(&["a", "b", "c", "d", "e", "f"]).unwrap());
    }

    #[test]
    fn subset_scan_branch_and_bound_agrees() {
        // 22 vertices forces the branch-and-bound path.
        let g = crate::generate::gnp(22, 0.15, 5).unwrap();
        let adj = g.adjacency_masks().unwrap();
        let best = (0..1u64 << 22).map(|x| difference_mask(&adj, x)).max().unwrap();
        assert_eq!(critical_difference(&g).unwrap(), best);
        assert_eq!(best, critical_independence_difference(&g).unwrap());
        assert!(matches!(
            critical_difference(&Graph::empty(25)),
            Err(Error::SizeLimit { .. })
        ));
    }
}
