//! Maximum matchings: Hopcroft-Karp for bipartite graphs (with the König
//! cover extraction) and Edmonds' blossom contraction for general graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

const NONE: usize = usize::MAX;

/// A set of pairwise non-incident edges, stored as sorted `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Self { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Every edge is in `g` and no vertex is covered twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }
}

/// Bipartite adjacency from a left part to a right part, both 0-based.
#[derive(Clone, Debug)]
pub(crate) struct Bipartite {
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
}

pub(crate) struct BipartiteMatching {
    pub size: usize,
    pub mate_left: Vec<usize>,
    pub mate_right: Vec<usize>,
}

impl Bipartite {
    /// Hopcroft-Karp: BFS layers from free left vertices, then vertex-disjoint
    /// shortest augmenting paths by DFS, until no augmenting path remains.
    pub fn max_matching(&self) -> BipartiteMatching {
        let left = self.adj.len();
        let mut mate_left = vec![NONE; left];
        let mut mate_right = vec![NONE; self.right];
        let mut dist = vec![0usize; left];
        let mut size = 0;
        loop {
            let mut queue = VecDeque::new();
            for u in 0..left {
                if mate_left[u] == NONE {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NONE;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    match mate_right[v] {
                        NONE => found = true,
                        w if dist[w] == NONE => {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                        _ => {}
                    }
                }
            }
            if !found {
                break;
            }
            let mut next_edge = vec![0usize; left];
            for u in 0..left {
                if mate_left[u] == NONE
                    && self.augment(u, &mut dist, &mut next_edge, &mut mate_left, &mut mate_right)
                {
                    size += 1;
                }
            }
        }
        BipartiteMatching { size, mate_left, mate_right }
    }

    fn augment(
        &self,
        u: usize,
        dist: &mut [usize],
        next_edge: &mut [usize],
        mate_left: &mut [usize],
        mate_right: &mut [usize],
    ) -> bool {
        while next_edge[u] < self.adj[u].len() {
            let v = self.adj[u][next_edge[u]];
            next_edge[u] += 1;
            let w = mate_right[v];
            let ok = w == NONE
                || (dist[w] == dist[u] + 1
                    && self.augment(w, dist, next_edge, mate_left, mate_right));
            if ok {
                mate_left[u] = v;
                mate_right[v] = u;
                return true;
            }
        }
        dist[u] = NONE;
        false
    }

    /// König: with Z the vertices reachable from free left vertices along
    /// alternating paths, (L \ Z) ∪ (R ∩ Z) is a minimum vertex cover. Returns
    /// its complement, a maximum independent set, as (left, right) flags.
    pub fn max_independent_set(&self, m: &BipartiteMatching) -> (Vec<bool>, Vec<bool>) {
        let left = self.adj.len();
        let mut reach_left = vec![false; left];
        let mut reach_right = vec![false; self.right];
        let mut queue: VecDeque<usize> =
            (0..left).filter(|&u| m.mate_left[u] == NONE).collect();
        for &u in &queue {
            reach_left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if reach_right[v] {
                    continue;
                }
                reach_right[v] = true;
                let w = m.mate_right[v];
                if w != NONE && !reach_left[w] {
                    reach_left[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let right_in = reach_right.iter().map(|&r| !r).collect();
        (reach_left, right_in)
    }
}

fn split_parts(g: &Graph, left: &VertexSet) -> Result<(Bipartite, Vec<usize>, Vec<usize>)> {
    g.check_set(left)?;
    let mut index = vec![0usize; g.n()];
    let (mut lefts, mut rights) = (Vec::new(), Vec::new());
    for v in 0..g.n() {
        if left.contains(v) {
            index[v] = lefts.len();
            lefts.push(v);
        } else {
            index[v] = rights.len();
            rights.push(v);
        }
    }
    let mut adj = vec![Vec::new(); lefts.len()];
    for &(u, v) in g.edges() {
        match (left.contains(u), left.contains(v)) {
            (true, false) => adj[index[u]].push(index[v]),
            (false, true) => adj[index[v]].push(index[u]),
            _ => {
                return Err(Error::Domain(format!(
                    "edge {u}-{v} does not cross the given bipartition"
                )))
            }
        }
    }
    Ok((Bipartite { right: rights.len(), adj }, lefts, rights))
}

/// Maximum matching of a bipartite graph whose left part is `left`.
pub fn max_matching_bipartite(g: &Graph, left: &VertexSet) -> Result<Matching> {
    let (b, lefts, rights) = split_parts(g, left)?;
    let m = b.max_matching();
    let mut mate = vec![NONE; g.n()];
    for (i, &r) in m.mate_left.iter().enumerate() {
        if r != NONE {
            mate[lefts[i]] = rights[r];
            mate[rights[r]] = lefts[i];
        }
    }
    Ok(Matching::from_mates(&mate))
}

/// Maximum independent set of a bipartite graph via König's theorem.
pub fn max_independent_set_bipartite(g: &Graph, left: &VertexSet) -> Result<VertexSet> {
    let (b, lefts, rights) = split_parts(g, left)?;
    let m = b.max_matching();
    let (in_left, in_right) = b.max_independent_set(&m);
    Ok(lefts
        .iter()
        .zip(in_left)
        .filter(|(_, keep)| *keep)
        .map(|(&v, _)| v)
        .chain(rights.iter().zip(in_right).filter(|(_, keep)| *keep).map(|(&v, _)| v))
        .collect())
}

/// Maximum matching of an arbitrary simple graph (Edmonds' blossom algorithm).
pub fn max_matching_general(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        // greedy start
        for &(u, v) in self.g.edges() {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_augmenting_path(root) {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        Matching::from_mates(&self.mate)
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}
