//! Full per-graph analysis with explicit engine provenance.
//!
//! The exhaustive oracle is authoritative up to a configurable order
//! ([`DEFAULT_ORACLE_MAX_N`] by default). With [`Engine::Both`] the
//! polynomial routines are run as well and every shared quantity is
//! cross-checked; above the cap only the polynomial routines run.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::critical::{critical_difference_poly, ker_poly};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::graph::Graph;
pub use crate::ke::DEFAULT_ORACLE_MAX_N;
use crate::ke::{AlphaBounds, ApproxKe, CriticalStructure};
use crate::matching::max_matching_general;
use crate::oracle::{ExactAnalysis, ORACLE_MAX_N};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    Oracle,
    Poly,
    #[default]
    Both,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "poly" => Ok(Engine::Poly),
            "both" => Ok(Engine::Both),
            other => Err(Error::Domain(format!("unknown engine {other:?}"))),
        }
    }
}

/// Which engine produced a reported value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Oracle,
    Poly,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Oracle => "oracle",
            Source::Poly => "poly",
        }
    }
}

/// Outcome of comparing the deletion-rule ker against the oracle ker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KerGate {
    Passed,
    ExperimentalFailed,
    Unchecked,
}

impl KerGate {
    pub fn as_str(self) -> &'static str {
        match self {
            KerGate::Passed => "passed",
            KerGate::ExperimentalFailed => "experimental-failed",
            KerGate::Unchecked => "unchecked",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub engine: Engine,
    pub max_oracle_n: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self { engine: Engine::Both, max_oracle_n: DEFAULT_ORACLE_MAX_N }
    }
}

/// Everything known about one graph. Fields that only the oracle can
/// provide are `None` when it did not run.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub n: usize,
    pub edge_count: usize,
    pub alpha: Option<usize>,
    pub alpha_prime: usize,
    pub mu: usize,
    pub d: i64,
    pub ker: VertexSet,
    pub core: Option<VertexSet>,
    pub corona: Option<VertexSet>,
    pub nucleus: Option<VertexSet>,
    pub diadem: Option<VertexSet>,
    pub max_crit_indep: Option<SetFamily>,
    /// The lexicographically smallest maximum critical independent set.
    pub max_crit_set: VertexSet,
    /// N[S] for S in MaxCritIndep(G).
    pub x: VertexSet,
    pub is_ke: bool,
    pub is_approx_ke: Option<bool>,
    pub approx_chain: ApproxKe,
    pub alpha_lower_bound: usize,
    pub alpha_upper_bound_if_approx: Option<f64>,
    pub ker_poly_gate: KerGate,
    pub engines: BTreeMap<&'static str, Source>,
    labels: BTreeMap<usize, String>,
}

fn lex_smallest(family: &SetFamily) -> VertexSet {
    family.iter().min_by_key(|s| s.to_vec()).cloned().expect("MaxCritIndep is never empty")
}

fn mismatch<T: fmt::Debug>(field: &'static str, oracle: T, poly: T) -> Error {
    Error::EngineMismatch { field, oracle: format!("{oracle:?}"), poly: format!("{poly:?}") }
}

pub fn analyze(g: &Graph, cfg: &AnalysisConfig) -> Result<AnalysisReport> {
    let limit = cfg.max_oracle_n.min(ORACLE_MAX_N);
    let oracle_fits = g.n() <= limit;
    if cfg.engine == Engine::Oracle && !oracle_fits {
        return Err(Error::SizeLimit { what: "oracle engine", n: g.n(), limit });
    }
    let exact = match cfg.engine {
        Engine::Poly => None,
        _ if oracle_fits => Some(ExactAnalysis::new(g)?),
        _ => None,
    };
    let run_poly = cfg.engine != Engine::Oracle;
    let mu = max_matching_general(g).len();
    let mut engines = BTreeMap::new();
    engines.insert("mu", Source::Poly);

    let structure = match &exact {
        Some(ex) => {
            let ker = ex.ker();
            let s = lex_smallest(&ex.max_crit_indep());
            CriticalStructure {
                ker_neighborhood: g.neighborhood_unchecked(&ker),
                closed_neighborhood: g.neighborhood_unchecked(&s).union(&s),
                alpha_prime: ex.alpha_prime(),
                ker,
                max_crit_set: s,
            }
        }
        None => CriticalStructure::compute(g),
    };
    let mut ker_poly_gate = KerGate::Unchecked;
    let d = match &exact {
        Some(ex) => ex.critical_independence_difference(),
        None => critical_difference_poly(g),
    };

    if let (Some(ex), true) = (&exact, run_poly) {
        let poly = CriticalStructure::compute(g);
        let poly_d = critical_difference_poly(g);
        if poly_d != d {
            return Err(mismatch("d", d, poly_d));
        }
        if poly.alpha_prime != ex.alpha_prime() {
            return Err(mismatch("alpha_prime", ex.alpha_prime(), poly.alpha_prime));
        }
        if poly.max_crit_set != structure.max_crit_set {
            return Err(mismatch(
                "max_crit_set",
                structure.max_crit_set.to_vec(),
                poly.max_crit_set.to_vec(),
            ));
        }
        ker_poly_gate =
            if ker_poly(g) == structure.ker { KerGate::Passed } else { KerGate::ExperimentalFailed };
    }

    let tag = if exact.is_some() { Source::Oracle } else { Source::Poly };
    for field in ["alpha_prime", "d", "ker", "x", "alpha_lower_bound"] {
        engines.insert(field, tag);
    }

    let poly_ke = structure.alpha_prime + mu == g.n();
    let (alpha, is_ke) = match &exact {
        Some(ex) => {
            let ke = ex.alpha() + mu == g.n();
            if run_poly && ke != poly_ke {
                return Err(mismatch("is_ke", ke, poly_ke));
            }
            (Some(ex.alpha()), ke)
        }
        // A KE graph has every maximum independent set critical, so α = α′.
        None => (poly_ke.then_some(structure.alpha_prime), poly_ke),
    };
    engines.insert("is_ke", tag);
    if alpha.is_some() {
        engines.insert("alpha", tag);
        engines.insert("is_approx_ke", tag);
        engines.insert("alpha_upper_bound_if_approx", tag);
    }
    if exact.is_some() {
        for field in ["core", "corona", "nucleus", "diadem", "max_crit_indep"] {
            engines.insert(field, Source::Oracle);
        }
    }

    let approx = ApproxKe::from_parts(&structure, alpha);
    let bounds = AlphaBounds::from_parts(&structure, &approx);
    Ok(AnalysisReport {
        n: g.n(),
        edge_count: g.edge_count(),
        alpha,
        alpha_prime: structure.alpha_prime,
        mu,
        d,
        core: exact.as_ref().map(|e| e.core()),
        corona: exact.as_ref().map(|e| e.corona()),
        nucleus: exact.as_ref().map(|e| e.nucleus()),
        diadem: exact.as_ref().map(|e| e.diadem()),
        max_crit_indep: exact.as_ref().map(|e| e.max_crit_indep()),
        x: structure.closed_neighborhood,
        ker: structure.ker,
        max_crit_set: structure.max_crit_set,
        is_ke,
        is_approx_ke: approx.is_approx,
        alpha_lower_bound: bounds.lower,
        alpha_upper_bound_if_approx: bounds.upper_if_approx,
        approx_chain: approx,
        ker_poly_gate,
        engines,
        labels: g.labels().clone(),
    })
}

impl AnalysisReport {
    /// Descriptions of every violated structural invariant; empty when the
    /// report is consistent.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut need = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        need(self.d >= 0, "d >= 0");
        need(self.ker.is_subset(&self.max_crit_set), "ker ⊆ S");
        need(self.max_crit_set.is_subset(&self.x), "S ⊆ X");
        need(self.alpha_lower_bound == self.alpha_prime, "lower bound = α′");
        if let (Some(core), Some(corona)) = (&self.core, &self.corona) {
            need(self.ker.is_subset(core), "ker ⊆ core");
            need(core.is_subset(corona), "core ⊆ corona");
        }
        if let Some(nucleus) = &self.nucleus {
            need(self.ker.is_subset(nucleus), "ker ⊆ nucleus");
        }
        if let (Some(diadem), Some(corona)) = (&self.diadem, &self.corona) {
            need(diadem.is_subset(corona), "diadem ⊆ corona");
        }
        if let Some(alpha) = self.alpha {
            need(self.alpha_prime <= alpha, "α′ ≤ α");
            need(alpha + self.mu <= self.n, "α + μ ≤ n");
            need(self.is_ke == (alpha + self.mu == self.n), "is_ke ⟺ α + μ = n");
        }
        out
    }

    pub fn vertex(&self, v: usize) -> VertexName {
        match self.labels.get(&v) {
            Some(label) => VertexName::Label(label.clone()),
            None => VertexName::Index(v),
        }
    }

    pub fn render_set(&self, s: &VertexSet) -> Vec<VertexName> {
        s.iter().map(|v| self.vertex(v)).collect()
    }

    /// Human-readable multi-line summary with the same numbers as the JSON.
    pub fn to_text(&self) -> String {
        let set = |s: &VertexSet| {
            let names: Vec<String> = self.render_set(s).iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", names.join(", "))
        };
        let opt_set = |s: &Option<VertexSet>| s.as_ref().map_or("unknown".to_string(), set);
        let opt = |v: Option<String>| v.unwrap_or_else(|| "unknown".to_string());
        let mut lines = vec![
            format!("n = {}, edges = {}", self.n, self.edge_count),
            format!("alpha = {}", opt(self.alpha.map(|a| a.to_string()))),
            format!("alpha' = {}", self.alpha_prime),
            format!("mu = {}", self.mu),
            format!("d = {}", self.d),
            format!("ker = {}", set(&self.ker)),
            format!("core = {}", opt_set(&self.core)),
            format!("corona = {}", opt_set(&self.corona)),
            format!("nucleus = {}", opt_set(&self.nucleus)),
            format!("diadem = {}", opt_set(&self.diadem)),
        ];
        if let Some(family) = &self.max_crit_indep {
            let members: Vec<String> = family.iter().map(set).collect();
            lines.push(format!("max_crit_indep = [{}]", members.join(", ")));
        }
        lines.extend([
            format!("S = {}", set(&self.max_crit_set)),
            format!("X = N[S] = {}", set(&self.x)),
            format!("is_ke = {}", self.is_ke),
            format!("is_approx_ke = {}", opt(self.is_approx_ke.map(|b| b.to_string()))),
            format!("alpha_lower_bound = {}", self.alpha_lower_bound),
            format!(
                "alpha_upper_bound_if_approx = {}",
                self.alpha_upper_bound_if_approx.map_or("none".to_string(), |u| u.to_string())
            ),
            format!("ker_poly_gate = {}", self.ker_poly_gate.as_str()),
        ]);
        let tags: Vec<String> =
            self.engines.iter().map(|(k, v)| format!("{k}={}", v.as_str())).collect();
        lines.push(format!("engines: {}", tags.join(" ")));
        lines.join("\n") + "\n"
    }
}

/// A vertex as it appears in reports: its label when it has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum VertexName {
    Index(usize),
    Label(String),
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexName::Index(v) => write!(f, "{v}"),
            VertexName::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Serialize)]
struct ApproxView {
    two_alpha: Option<usize>,
    ker_plus_closed: usize,
    ker_plus_two_alpha_prime: usize,
    three_alpha_prime: usize,
}

impl Serialize for AnalysisReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let set = |s: &VertexSet| self.render_set(s);
        let opt = |s: &Option<VertexSet>| s.as_ref().map(set);
        let mut st = serializer.serialize_struct("AnalysisReport", 22)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edge_count", &self.edge_count)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("alpha_prime", &self.alpha_prime)?;
        st.serialize_field("mu", &self.mu)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("ker", &set(&self.ker))?;
        st.serialize_field("core", &opt(&self.core))?;
        st.serialize_field("corona", &opt(&self.corona))?;
        st.serialize_field("nucleus", &opt(&self.nucleus))?;
        st.serialize_field("diadem", &opt(&self.diadem))?;
        st.serialize_field(
            "max_crit_indep",
            &self.max_crit_indep.as_ref().map(|f| f.iter().map(set).collect::<Vec<_>>()),
        )?;
        st.serialize_field("max_crit_set", &set(&self.max_crit_set))?;
        st.serialize_field("x", &set(&self.x))?;
        st.serialize_field("is_ke", &self.is_ke)?;
        st.serialize_field("is_approx_ke", &self.is_approx_ke)?;
        st.serialize_field(
            "approx_chain",
            &ApproxView {
                two_alpha: self.approx_chain.two_alpha,
                ker_plus_closed: self.approx_chain.ker_plus_closed,
                ker_plus_two_alpha_prime: self.approx_chain.ker_plus_two_alpha_prime,
                three_alpha_prime: self.approx_chain.three_alpha_prime,
            },
        )?;
        st.serialize_field("alpha_lower_bound", &self.alpha_lower_bound)?;
        st.serialize_field("alpha_upper_bound_if_approx", &self.alpha_upper_bound_if_approx)?;
        st.serialize_field("ker_poly_gate", &self.ker_poly_gate)?;
        st.serialize_field("engines", &self.engines)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::generate::{all_graphs, complete, gnp};

    fn names(r: &AnalysisReport, s: &VertexSet) -> Vec<String> {
        r.render_set(s).iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn fig1_g1_report() {
        let g = Fixture::Fig1G1.graph();
        let r = analyze(&g, &AnalysisConfig::default()).unwrap();
        assert_eq!(names(&r, &r.ker), ["a", "b", "c"]);
        assert_eq!(names(&r, r.core.as_ref().unwrap()), ["a", "b", "c", "d"]);
        assert_eq!(names(&r, r.nucleus.as_ref().unwrap()), ["a", "b", "c", "d", "g"]);
        assert_eq!(names(&r, &r.max_crit_set), ["a", "b", "c", "d", "e", "g"]);
        assert_eq!(r.x.len(), 10);
        assert!(!r.is_ke);
        assert_eq!(r.is_approx_ke, Some(false));
        assert_eq!(r.ker_poly_gate, KerGate::Passed);
        assert!(r.invariant_failures().is_empty());
        assert_eq!(r.engines["alpha"], Source::Oracle);
    }

    #[test]
    fn engines_agree_on_small_graphs() {
        for n in 0..=5 {
            for g in all_graphs(n).unwrap() {
                let both = analyze(&g, &AnalysisConfig::default()).unwrap();
                assert!(both.invariant_failures().is_empty(), "{:?}", both.invariant_failures());
                let poly =
                    analyze(&g, &AnalysisConfig { engine: Engine::Poly, ..Default::default() })
                        .unwrap();
                assert_eq!(poly.d, both.d);
                assert_eq!(poly.ker, both.ker);
                assert_eq!(poly.x, both.x);
                assert_eq!(poly.is_ke, both.is_ke);
                if both.is_ke {
                    assert_eq!(poly.alpha, both.alpha);
                    assert_eq!(poly.is_approx_ke, Some(true));
                } else {
                    assert_eq!(poly.alpha, None);
                }
            }
        }
    }

    #[test]
    fn oracle_engine_limits() {
        let g = gnp(20, 0.2, 3).unwrap();
        let cfg = AnalysisConfig { engine: Engine::Oracle, max_oracle_n: 16 };
        assert!(matches!(analyze(&g, &cfg), Err(Error::SizeLimit { .. })));
        let r = analyze(&g, &AnalysisConfig::default()).unwrap();
        assert_eq!(r.engines["d"], Source::Poly);
        assert!(r.core.is_none());
        let r = analyze(&g, &AnalysisConfig { engine: Engine::Both, max_oracle_n: 20 }).unwrap();
        assert_eq!(r.engines["d"], Source::Oracle);
    }

    #[test]
    fn complete_graph_text() {
        let r = analyze(&complete(4), &AnalysisConfig::default()).unwrap();
        assert_eq!((r.alpha, r.mu, r.is_ke), (Some(1), 2, false));
        let text = r.to_text();
        assert!(text.contains("alpha = 1\n"));
        assert!(text.contains("ker_poly_gate = passed\n"));
        assert!(text.contains("engines: alpha=oracle"));
    }
}
