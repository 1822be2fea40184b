//! Simple undirected graphs on dense vertex indices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// An immutable finite simple graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Labels are an
/// optional sidecar used by fixtures and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    adj_sets: Vec<VertexSet>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::InvalidEdge { u, v, reason: "duplicate edge" });
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let adj_sets = adj.iter().map(|l| l.iter().copied().collect()).collect();
        Self { n, edges, adj, adj_sets, labels: BTreeMap::new() }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// Attaches vertex labels. Labels must be unique and refer to existing vertices.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = (usize, S)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, name) in labels {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            map.insert(v, name.into());
        }
        let mut seen: Vec<&str> = map.values().map(String::as_str).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].to_string()));
        }
        self.labels = map;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj_sets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj_sets[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().find(|(_, l)| *l == name).map(|(&v, _)| v)
    }

    /// Looks up a set of vertices by label.
    pub fn labeled_set(&self, names: &[&str]) -> Result<VertexSet> {
        names
            .iter()
            .map(|name| {
                self.vertex_by_label(name)
                    .ok_or_else(|| Error::Domain(format!("no vertex labelled {name:?}")))
            })
            .collect()
    }

    /// Display name of a vertex: its label, or its index.
    pub fn vertex_name(&self, v: usize) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_string)
    }

    /// Adjacency rows as single-word masks. Only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::SizeLimit { what: "bitmask adjacency", n: self.n, limit: 64 });
        }
        Ok(self.adj_sets.iter().map(|s| s.to_mask().unwrap_or(0)).collect())
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.bound() > self.n {
            return Err(Error::VertexOutOfRange { vertex: x.bound() - 1, n: self.n });
        }
        Ok(())
    }

    /// N(X): every vertex adjacent to at least one member of `x`. May intersect `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(self.neighborhood_unchecked(x))
    }

    pub(crate) fn neighborhood_unchecked(&self, x: &VertexSet) -> VertexSet {
        x.iter().fold(VertexSet::new(), |acc, v| acc.union(&self.adj_sets[v]))
    }

    /// N[X] = N(X) ∪ X.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood(x)?.union(x))
    }

    /// d(X) = |X| - |N(X)|.
    pub fn difference(&self, x: &VertexSet) -> Result<i64> {
        Ok(x.len() as i64 - self.neighborhood(x)?.len() as i64)
    }

    pub fn is_independent(&self, x: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        Ok(x.iter().all(|v| self.adj_sets[v].is_disjoint(x)))
    }

    /// G[X], re-indexed to `0..|X|` in increasing order of the old indices.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(x)?;
        let old_of_new = x.to_vec();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| x.contains(u) && x.contains(v))
            .map(|&(u, v)| (new_of_old[u], new_of_old[v]))
            .collect::<Vec<_>>();
        let mut graph = Self::from_sorted_edges(old_of_new.len(), edges);
        graph.labels = self
            .labels
            .iter()
            .filter(|(v, _)| x.contains(**v))
            .map(|(&v, l)| (new_of_old[v], l.clone()))
            .collect();
        Ok(InducedSubgraph { graph, old_of_new })
    }

    /// G - W for a vertex set W.
    pub fn remove_vertices(&self, w: &VertexSet) -> Result<InducedSubgraph> {
        self.induced_subgraph(&self.vertices().difference(w))
    }
}

/// An induced subgraph together with its vertex correspondence.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_of_new: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a set of subgraph vertices back to the parent graph.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.old_of_new[v]).collect()
    }

    /// Maps a set of parent vertices into the subgraph; vertices outside the
    /// subgraph are dropped.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        self.old_of_new
            .iter()
            .enumerate()
            .filter(|(_, &old)| s.contains(old))
            .map(|(new, _)| new)
            .collect()
    }
}
