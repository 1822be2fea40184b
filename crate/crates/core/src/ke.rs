//! König-Egerváry recognition, KE collections, the collection preorder and
//! the approximate-KE classification.

use crate::critical::{alpha_prime_poly, ker_poly, max_crit_set_poly};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::graph::Graph;
use crate::matching::max_matching_general;
use crate::oracle::ExactAnalysis;
use crate::set::VertexSet;

/// Default largest order on which exhaustive results are computed.
pub const DEFAULT_ORACLE_MAX_N: usize = 16;

fn require_oracle(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeLimit { what: "exact oracle", n: g.n(), limit });
    }
    Ok(())
}

/// α(G) + μ(G) = |V(G)|, with α from the exhaustive oracle.
pub fn is_ke(g: &Graph) -> Result<bool> {
    require_oracle(g, DEFAULT_ORACLE_MAX_N)?;
    let alpha = ExactAnalysis::new(g)?.alpha();
    Ok(alpha + max_matching_general(g).len() == g.n())
}

/// KE recognition without α: G is KE exactly when α′(G) + μ(G) = |V(G)|,
/// since α′ ≤ α, α + μ ≤ n, and every maximum independent set of a KE
/// graph is critical.
pub fn is_ke_poly(g: &Graph) -> bool {
    alpha_prime_poly(g) + max_matching_general(g).len() == g.n()
}

fn check_collection(g: &Graph, gamma: &SetFamily) -> Result<()> {
    if gamma.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for s in gamma.iter() {
        if !g.is_independent(s)? {
            return Err(Error::Domain(format!(
                "collection member {:?} is not independent",
                s.to_vec()
            )));
        }
    }
    Ok(())
}

/// |∩Γ| + |∪Γ| = 2α(G) for a non-empty family of independent sets.
pub fn is_ke_collection(g: &Graph, gamma: &SetFamily) -> Result<bool> {
    check_collection(g, gamma)?;
    require_oracle(g, DEFAULT_ORACLE_MAX_N)?;
    let alpha = ExactAnalysis::new(g)?.alpha();
    Ok(gamma.spread()? == 2 * alpha)
}

/// Γ′ ◁ Γ: ∪Γ′ ⊆ ∪Γ and ∩Γ ⊆ ∩Γ′.
pub fn preorder_leq(lower: &SetFamily, upper: &SetFamily) -> Result<bool> {
    Ok(lower.union().is_subset(upper.union())
        && upper.intersection()?.is_subset(lower.intersection()?))
}

/// ker(G), one maximum critical independent set S, N[S] and α′(G), all by
/// the polynomial routines.
#[derive(Clone, Debug)]
pub struct CriticalStructure {
    pub ker: VertexSet,
    pub ker_neighborhood: VertexSet,
    pub max_crit_set: VertexSet,
    pub closed_neighborhood: VertexSet,
    pub alpha_prime: usize,
}

impl CriticalStructure {
    pub fn compute(g: &Graph) -> Self {
        let ker = ker_poly(g);
        let max_crit_set = max_crit_set_poly(g);
        Self {
            ker_neighborhood: g.neighborhood_unchecked(&ker),
            closed_neighborhood: g.neighborhood_unchecked(&max_crit_set).union(&max_crit_set),
            alpha_prime: max_crit_set.len(),
            ker,
            max_crit_set,
        }
    }
}

/// The chain 2α ≤ |ker| + |N[S]| ≤ |ker| + 2α′ ≤ 3α′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxKe {
    /// `None` when α is unavailable.
    pub is_approx: Option<bool>,
    pub two_alpha: Option<usize>,
    pub ker_plus_closed: usize,
    pub ker_plus_two_alpha_prime: usize,
    pub three_alpha_prime: usize,
}

impl ApproxKe {
    pub fn from_parts(structure: &CriticalStructure, alpha: Option<usize>) -> Self {
        let ker_plus_closed = structure.ker.len() + structure.closed_neighborhood.len();
        let ker_plus_two_alpha_prime = structure.ker.len() + 2 * structure.alpha_prime;
        let three_alpha_prime = 3 * structure.alpha_prime;
        let two_alpha = alpha.map(|a| 2 * a);
        let is_approx = two_alpha.map(|t| {
            t <= ker_plus_closed
                && ker_plus_closed <= ker_plus_two_alpha_prime
                && ker_plus_two_alpha_prime <= three_alpha_prime
        });
        Self { is_approx, two_alpha, ker_plus_closed, ker_plus_two_alpha_prime, three_alpha_prime }
    }
}

/// α from the oracle when `n` is within `limit`, or from α′ when the graph
/// is recognised as KE; otherwise unknown.
fn alpha_if_known(g: &Graph, structure: &CriticalStructure, limit: usize) -> Result<Option<usize>> {
    if g.n() <= limit {
        return Ok(Some(ExactAnalysis::new(g)?.alpha()));
    }
    let ke = structure.alpha_prime + max_matching_general(g).len() == g.n();
    Ok(ke.then_some(structure.alpha_prime))
}

pub fn approx_ke(g: &Graph) -> Result<ApproxKe> {
    let structure = CriticalStructure::compute(g);
    let alpha = alpha_if_known(g, &structure, DEFAULT_ORACLE_MAX_N)?;
    Ok(ApproxKe::from_parts(&structure, alpha))
}

/// Bounds on α(G) from polynomially computable quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBounds {
    /// (|ker| + |N[S]| − |N(ker)|) / 2, which always equals α′(G).
    pub lower: usize,
    /// (|ker| + |N[S]|) / 2, reported only for approximate KE graphs.
    pub upper_if_approx: Option<f64>,
}

impl AlphaBounds {
    pub fn from_parts(structure: &CriticalStructure, approx: &ApproxKe) -> Self {
        let twice_lower = (structure.ker.len() + structure.closed_neighborhood.len())
            .checked_sub(structure.ker_neighborhood.len())
            .expect("|N(ker)| <= |ker| since d(ker) = d(G) >= 0");
        assert!(twice_lower % 2 == 0, "|ker| + |N[S]| - |N(ker)| must equal 2α′");
        let upper = (approx.is_approx == Some(true)).then(|| approx.ker_plus_closed as f64 / 2.0);
        Self { lower: twice_lower / 2, upper_if_approx: upper }
    }
}

pub fn alpha_bounds(g: &Graph) -> Result<AlphaBounds> {
    let structure = CriticalStructure::compute(g);
    let alpha = alpha_if_known(g, &structure, DEFAULT_ORACLE_MAX_N)?;
    let approx = ApproxKe::from_parts(&structure, alpha);
    Ok(AlphaBounds::from_parts(&structure, &approx))
}
