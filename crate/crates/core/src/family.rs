use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite family of vertex sets with its union and intersection cached.
///
/// Empty families are representable, but asking for their intersection is
/// a domain error rather than a convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<VertexSet>,
    union: VertexSet,
    intersection: Option<VertexSet>,
}

impl SetFamily {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        let union = sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s));
        let intersection = sets.split_first().map(|(first, rest)| {
            rest.iter().fold(first.clone(), |acc, s| acc.intersection(s))
        });
        Self { sets, union, intersection }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.contains(s)
    }

    /// ∪Γ (empty for the empty family).
    pub fn union(&self) -> &VertexSet {
        &self.union
    }

    /// ∩Γ, rejected for the empty family.
    pub fn intersection(&self) -> Result<&VertexSet> {
        self.intersection.as_ref().ok_or(Error::EmptyFamily)
    }

    /// |∩Γ| + |∪Γ|.
    pub fn spread(&self) -> Result<usize> {
        Ok(self.intersection()?.len() + self.union.len())
    }

    /// The members whose positions are in `selection`.
    pub fn subfamily(&self, selection: &VertexSet) -> SetFamily {
        selection.iter().filter_map(|i| self.sets.get(i).cloned()).collect()
    }
}

impl FromIterator<VertexSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        SetFamily::new(iter.into_iter().collect())
    }
}
