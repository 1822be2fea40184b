//! Mechanical verification of the structural results on one graph.
//!
//! Every check is evaluated against the exhaustive oracle. Universally
//! quantified statements over subfamilies of Ω(G) or MaxCritIndep(G) use
//! every non-empty subfamily when the family has at most
//! [`FULL_SUBFAMILY_MAX`] members and [`SUBFAMILY_SAMPLES`] seeded random
//! subfamilies otherwise. Statements over pairs use every pair up to
//! [`PAIR_CAP`] pairs and a seeded sample of that size beyond it.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::critical::{
    critical_difference_poly, critical_set_poly, double_cover, double_cover_matching_size,
    ker_by_exclusion, ker_poly,
};
use crate::error::{Error, Result};
use crate::format::{to_edge_list, to_graph6};
use crate::graph::{Graph, InducedSubgraph};
use crate::ke::{AlphaBounds, ApproxKe, CriticalStructure, DEFAULT_ORACLE_MAX_N};
use crate::matching::max_matching_general;
use crate::oracle::{self, alpha_within, ExactAnalysis, SUBSET_SCAN_MAX_N};
use crate::report::{analyze, AnalysisConfig, Engine, VertexName};
use crate::set::VertexSet;

/// Seed used for every sampled quantification unless overridden.
pub const DEFAULT_SEED: u64 = 0x6b65_6372_6974;
/// Families up to this size are quantified over all non-empty subfamilies.
pub const FULL_SUBFAMILY_MAX: usize = 12;
pub const SUBFAMILY_SAMPLES: usize = 4096;
pub const PAIR_CAP: usize = 65536;
pub const MATCHING_BRUTE_FORCE_MAX_N: usize = 10;
pub const DOUBLE_COVER_BRUTE_FORCE_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "premise-not-met")]
    PremiseNotMet,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::PremiseNotMet => "premise-not-met",
            Status::Violation => "VIOLATION",
        }
    }
}

/// Everything needed to reproduce a failed check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub edge_list: String,
    pub detail: String,
    pub sets: BTreeMap<String, Vec<VertexName>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    pub status: Status,
    /// Instances whose premise held and whose conclusion was tested.
    pub evaluated: u64,
    pub premise_not_met: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Violation)
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some()
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, max_n: DEFAULT_ORACLE_MAX_N }
    }
}

/// Names of all checks in the order they appear in a report.
pub const CHECK_NAMES: &[&str] = &[
    "critical_difference_equality",
    "critical_set_enlargement",
    "critical_sets_are_local_maxima",
    "ker_in_core",
    "critical_union_intersection_closure",
    "ker_in_nucleus",
    "diadem_in_corona",
    "union_critical_implies_intersection_critical",
    "ke_max_independent_set_criticality",
    "preorder_monotone_spread",
    "spread_lower_bound",
    "ke_spread_equality",
    "closed_neighborhood_invariant",
    "closed_neighborhood_induces_ke",
    "max_crit_indep_precedes_omega_of_x",
    "diadem_nucleus_under_x",
    "spread_chain",
    "nucleus_diadem_bound",
    "ke_collection_equivalence",
    "nucleus_diadem_equality_implies_ke",
    "covered_pairs_with_critical_intersection",
    "covered_pairs_with_equal_union",
    "diadem_equals_corona_implies_ke",
    "alpha_prime_identity",
    "alpha_prime_identity_poly",
    "alpha_mu_bound",
    "approx_ke_chain",
    "alpha_bounds",
    "poly_critical_difference",
    "poly_critical_set",
    "poly_alpha_prime",
    "poly_ke_recognition",
    "ker_poly_gate",
    "matching_brute_force",
    "double_cover_konig_duality",
    "report_invariants",
];

/// A subfamily with its members, intersection and union as masks.
struct Sub {
    members: Vec<u64>,
    inter: u64,
    union: u64,
}

impl Sub {
    fn new(members: Vec<u64>) -> Self {
        let inter = members.iter().fold(u64::MAX, |a, &b| a & b);
        let union = members.iter().fold(0, |a, &b| a | b);
        Self { members, inter, union }
    }

    fn spread(&self) -> usize {
        (self.inter.count_ones() + self.union.count_ones()) as usize
    }

    /// Γ′ ◁ Γ with `self` as Γ′.
    fn precedes(&self, other: &Sub) -> bool {
        self.union & !other.union == 0 && other.inter & !self.inter == 0
    }

    /// Every member of `self` lies inside some member of `other`.
    fn covered_by(&self, other: &Sub) -> bool {
        self.members.iter().all(|&a| other.members.iter().any(|&s| a & !s == 0))
    }
}

fn subfamilies(sets: &[u64], rng: &mut ChaCha8Rng) -> Vec<Sub> {
    if sets.len() <= FULL_SUBFAMILY_MAX {
        return (1u32..1 << sets.len())
            .map(|sel| {
                Sub::new((0..sets.len()).filter(|i| sel >> i & 1 == 1).map(|i| sets[i]).collect())
            })
            .collect();
    }
    (0..SUBFAMILY_SAMPLES)
        .map(|_| loop {
            let members: Vec<u64> = sets.iter().copied().filter(|_| rng.gen::<bool>()).collect();
            if !members.is_empty() {
                break Sub::new(members);
            }
        })
        .collect()
}

fn index_pairs(a: usize, b: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if a == 0 || b == 0 {
        return Vec::new();
    }
    if a.saturating_mul(b) <= PAIR_CAP {
        return (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).collect();
    }
    (0..PAIR_CAP).map(|_| (rng.gen_range(0..a), rng.gen_range(0..b))).collect()
}

fn unordered_pairs(a: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if a * (a + 1) / 2 <= PAIR_CAP {
        return (0..a).flat_map(|i| (i..a).map(move |j| (i, j))).collect();
    }
    (0..PAIR_CAP).map(|_| (rng.gen_range(0..a), rng.gen_range(0..a))).collect()
}

struct Ctx<'g> {
    g: &'g Graph,
    cfg: SuiteConfig,
    ex: ExactAnalysis,
    d: i64,
    alpha: usize,
    alpha_prime: usize,
    mu: usize,
    ke: bool,
    omega_subs: Vec<Sub>,
    mci_subs: Vec<Sub>,
    family_pairs: Vec<(usize, usize)>,
    critical_pairs: Vec<(usize, usize)>,
    x: u64,
    gx: InducedSubgraph,
    gx_ex: ExactAnalysis,
    poly: CriticalStructure,
}

impl<'g> Ctx<'g> {
    fn new(g: &'g Graph, cfg: SuiteConfig) -> Result<Self> {
        let ex = ExactAnalysis::new(g)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let omega_subs = subfamilies(ex.omega_masks(), &mut rng);
        let mci_subs = subfamilies(ex.max_crit_masks(), &mut rng);
        let family_pairs = index_pairs(omega_subs.len(), mci_subs.len(), &mut rng);
        let critical_pairs = unordered_pairs(ex.critical_masks().len(), &mut rng);
        let s = ex.max_crit_masks()[0];
        let x = s | ex.neighborhood(s);
        let gx = g.induced_subgraph(&VertexSet::from_mask(x))?;
        let gx_ex = ExactAnalysis::new(&gx.graph)?;
        let mu = max_matching_general(g).len();
        Ok(Self {
            d: ex.critical_independence_difference(),
            alpha: ex.alpha(),
            alpha_prime: ex.alpha_prime(),
            ke: ex.alpha() + mu == g.n(),
            mu,
            poly: CriticalStructure::compute(g),
            g,
            cfg,
            ex,
            omega_subs,
            mci_subs,
            family_pairs,
            critical_pairs,
            x,
            gx,
            gx_ex,
        })
    }

    fn lift(&self, sub_mask: u64) -> u64 {
        self.gx.lift(&VertexSet::from_mask(sub_mask)).to_mask().expect("n <= 64")
    }

    fn project(&self, mask: u64) -> u64 {
        self.gx.project(&VertexSet::from_mask(mask)).to_mask().expect("n <= 64")
    }
}

fn mask_of(s: &VertexSet) -> u64 {
    s.to_mask().expect("oracle-sized graph")
}

fn render(g: &Graph, mask: u64) -> Vec<VertexName> {
    VertexSet::from_mask(mask)
        .iter()
        .map(|v| match g.label(v) {
            Some(l) => VertexName::Label(l.to_string()),
            None => VertexName::Index(v),
        })
        .collect()
}

struct Tally {
    name: &'static str,
    evaluated: u64,
    premise_not_met: u64,
    violations: u64,
    witness: Option<Witness>,
}

type Detail = (String, Vec<(String, u64)>);

fn family_sets(prefix: &str, sub: &Sub) -> Vec<(String, u64)> {
    let mut out = vec![(format!("{prefix}.intersection"), sub.inter), (format!("{prefix}.union"), sub.union)];
    out.extend(sub.members.iter().enumerate().map(|(i, &m)| (format!("{prefix}[{i}]"), m)));
    out
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, evaluated: 0, premise_not_met: 0, violations: 0, witness: None }
    }

    fn skip(&mut self) {
        self.premise_not_met += 1;
    }

    fn record(&mut self, g: &Graph, ok: bool, detail: impl FnOnce() -> Detail) {
        self.evaluated += 1;
        if ok {
            return;
        }
        self.violations += 1;
        if self.witness.is_none() {
            let (detail, sets) = detail();
            self.witness = Some(Witness {
                graph6: to_graph6(g),
                edge_list: to_edge_list(g),
                detail,
                sets: sets.into_iter().map(|(k, m)| (k, render(g, m))).collect(),
            });
        }
    }

    fn finish(self) -> CheckRecord {
        let status = if self.violations > 0 {
            Status::Violation
        } else if self.evaluated > 0 {
            Status::Holds
        } else {
            Status::PremiseNotMet
        };
        CheckRecord {
            check: self.name,
            status,
            evaluated: self.evaluated,
            premise_not_met: self.premise_not_met,
            violations: self.violations,
            witness: self.witness,
        }
    }
}

fn no_sets(detail: String) -> Detail {
    (detail, Vec::new())
}

/// Runs every check on `g`.
pub fn theorem_suite(g: &Graph, cfg: &SuiteConfig) -> Result<TheoremReport> {
    if g.n() > cfg.max_n.min(oracle::ORACLE_MAX_N) {
        return Err(Error::SizeLimit { what: "theorem suite", n: g.n(), limit: cfg.max_n });
    }
    let c = Ctx::new(g, *cfg)?;
    let checks: Vec<CheckRecord> = [
        critical_difference_equality,
        critical_set_enlargement,
        critical_sets_are_local_maxima,
        ker_in_core,
        critical_union_intersection_closure,
        ker_in_nucleus,
        diadem_in_corona,
        union_critical_implies_intersection_critical,
        |c: &Ctx| ke_equivalence(c.g, &c.ex, c.mu),
        preorder_monotone_spread,
        spread_lower_bound,
        ke_spread_equality,
        closed_neighborhood_invariant,
        closed_neighborhood_induces_ke,
        max_crit_indep_precedes_omega_of_x,
        diadem_nucleus_under_x,
        spread_chain,
        nucleus_diadem_bound,
        ke_collection_equivalence,
        nucleus_diadem_equality_implies_ke,
        covered_pairs_with_critical_intersection,
        covered_pairs_with_equal_union,
        diadem_equals_corona_implies_ke,
        alpha_prime_identity,
        alpha_prime_identity_poly,
        alpha_mu_bound,
        approx_ke_chain,
        alpha_bounds,
        poly_critical_difference,
        poly_critical_set,
        poly_alpha_prime,
        poly_ke_recognition,
        ker_poly_gate,
        matching_brute_force,
        double_cover_konig_duality,
        report_invariants,
    ]
    .iter()
    .map(|check| check(&c))
    .collect();
    debug_assert!(checks.iter().map(|r| r.check).eq(CHECK_NAMES.iter().copied()));
    Ok(TheoremReport { graph6: to_graph6(g), n: g.n(), edges: g.edge_count(), checks })
}

/// KE ⟺ some maximum independent set is critical ⟺ every one is.
pub fn ke_equivalence_check(g: &Graph) -> Result<CheckRecord> {
    if g.n() > DEFAULT_ORACLE_MAX_N {
        return Err(Error::SizeLimit { what: "KE equivalence check", n: g.n(), limit: DEFAULT_ORACLE_MAX_N });
    }
    let ex = ExactAnalysis::new(g)?;
    Ok(ke_equivalence(g, &ex, max_matching_general(g).len()))
}

fn ke_equivalence(g: &Graph, ex: &ExactAnalysis, mu: usize) -> CheckRecord {
    let mut t = Tally::new("ke_max_independent_set_criticality");
    let ke = ex.alpha() + mu == g.n();
    let some = ex.omega_masks().iter().any(|&s| ex.is_critical_independent(s));
    let each = ex.omega_masks().iter().all(|&s| ex.is_critical_independent(s));
    t.record(g, ke == some && some == each, || {
        let non_critical = ex.omega_masks().iter().copied().find(|&s| !ex.is_critical_independent(s));
        (
            format!("ke={ke} some_critical={some} each_critical={each}"),
            non_critical.map(|s| ("non_critical_maximum".to_string(), s)).into_iter().collect(),
        )
    });
    t.finish()
}

fn critical_difference_equality(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("critical_difference_equality");
    if c.g.n() > SUBSET_SCAN_MAX_N {
        t.skip();
    } else {
        let d_all = oracle::critical_difference(c.g).expect("n within subset scan limit");
        t.record(c.g, d_all == c.d, || no_sets(format!("d over subsets {d_all}, over independent sets {}", c.d)));
    }
    t.finish()
}

fn critical_set_enlargement(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("critical_set_enlargement");
    for &a in c.ex.critical_masks() {
        let ok = c.ex.omega_masks().iter().any(|&s| a & !s == 0);
        t.record(c.g, ok, || ("critical set inside no maximum independent set".into(), vec![("A".into(), a)]));
    }
    t.finish()
}

fn critical_sets_are_local_maxima(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("critical_sets_are_local_maxima");
    for &a in c.ex.critical_masks() {
        t.record(c.g, c.ex.is_local_max_ind(a), || {
            ("critical set is not maximum in G[N[A]]".into(), vec![("A".into(), a)])
        });
    }
    t.finish()
}

fn ker_in_core(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("ker_in_core");
    let (ker, core) = (c.ex.ker_mask(), c.ex.core_mask());
    t.record(c.g, ker & !core == 0, || {
        ("ker ⊄ core".into(), vec![("ker".into(), ker), ("core".into(), core)])
    });
    t.finish()
}

fn critical_union_intersection_closure(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("critical_union_intersection_closure");
    let crit = c.ex.critical_masks();
    for &(i, j) in &c.critical_pairs {
        let (a, b) = (crit[i], crit[j]);
        let union_ok = c.ex.difference(a | b) == c.d;
        let inter_ok = c.ex.is_critical_independent(a & b);
        t.record(c.g, union_ok && inter_ok, || {
            (
                format!("union critical: {union_ok}, intersection critical: {inter_ok}"),
                vec![("A".into(), a), ("B".into(), b)],
            )
        });
    }
    t.finish()
}

fn ker_in_nucleus(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("ker_in_nucleus");
    let (ker, nucleus) = (c.ex.ker_mask(), c.ex.nucleus_mask());
    t.record(c.g, ker & !nucleus == 0, || {
        ("ker ⊄ nucleus".into(), vec![("ker".into(), ker), ("nucleus".into(), nucleus)])
    });
    t.finish()
}

fn diadem_in_corona(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("diadem_in_corona");
    let (diadem, corona) = (c.ex.diadem_mask(), c.ex.corona_mask());
    t.record(c.g, diadem & !corona == 0, || {
        ("diadem ⊄ corona".into(), vec![("diadem".into(), diadem), ("corona".into(), corona)])
    });
    t.finish()
}

fn union_critical_implies_intersection_critical(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("union_critical_implies_intersection_critical");
    for sub in &c.omega_subs {
        if c.ex.difference(sub.union) != c.d {
            t.skip();
            continue;
        }
        t.record(c.g, c.ex.is_critical_independent(sub.inter), || {
            ("∪Γ critical but ∩Γ not".into(), family_sets("gamma", sub))
        });
    }
    t.finish()
}

/// For Γ ⊆ Ω(G), the largest |∩Γ′| + |∪Γ′| over Γ′ ⊆ Ind(G) with Γ′ ◁ Γ
/// is attained, for each candidate intersection I, by the family of all
/// independent sets between I and ∪Γ \ N(I); its value is
/// |I| + |∪Γ \ N(I)|. Checking every independent I with ∩Γ ⊆ I ⊆ ∪Γ
/// therefore covers every Γ′.
fn preorder_monotone_spread(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("preorder_monotone_spread");
    for sub in &c.omega_subs {
        let bound = sub.spread();
        for &i in c.ex.independent_masks() {
            if sub.inter & !i != 0 || i & !sub.union != 0 {
                continue;
            }
            let reach = sub.union & !c.ex.neighborhood(i);
            let value = (i.count_ones() + reach.count_ones()) as usize;
            t.record(c.g, value <= bound, || {
                let mut sets = family_sets("gamma", sub);
                sets.push(("gamma_prime.intersection".into(), i));
                sets.push(("gamma_prime.union".into(), reach));
                (format!("Γ′ ◁ Γ with spread {value} > {bound}"), sets)
            });
        }
    }
    t.finish()
}

fn spread_lower_bound(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("spread_lower_bound");
    for sub in &c.omega_subs {
        t.record(c.g, 2 * c.alpha <= sub.spread(), || {
            (format!("spread {} < 2α = {}", sub.spread(), 2 * c.alpha), family_sets("gamma", sub))
        });
    }
    t.finish()
}

fn ke_spread_equality(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("ke_spread_equality");
    if !c.ke {
        t.skip();
        return t.finish();
    }
    let core_corona = (c.ex.core_mask().count_ones() + c.ex.corona_mask().count_ones()) as usize;
    t.record(c.g, core_corona == 2 * c.alpha, || {
        (
            format!("|core| + |corona| = {core_corona} ≠ 2α = {}", 2 * c.alpha),
            vec![("core".into(), c.ex.core_mask()), ("corona".into(), c.ex.corona_mask())],
        )
    });
    for sub in &c.omega_subs {
        t.record(c.g, sub.spread() == 2 * c.alpha, || {
            (format!("KE graph with spread {} ≠ 2α", sub.spread()), family_sets("gamma", sub))
        });
    }
    t.finish()
}

fn closed_neighborhood_invariant(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("closed_neighborhood_invariant");
    for &s in c.ex.max_crit_masks() {
        let x = s | c.ex.neighborhood(s);
        t.record(c.g, x == c.x, || {
            ("N[S] differs between maximum critical independent sets".into(), vec![("S".into(), s), ("N[S]".into(), x), ("X".into(), c.x)])
        });
    }
    t.finish()
}

fn closed_neighborhood_induces_ke(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("closed_neighborhood_induces_ke");
    let mu = max_matching_general(&c.gx.graph).len();
    let ok = c.gx_ex.alpha() + mu == c.gx.graph.n();
    t.record(c.g, ok, || {
        (format!("G[X]: α = {}, μ = {mu}, |X| = {}", c.gx_ex.alpha(), c.gx.graph.n()), vec![("X".into(), c.x)])
    });
    t.finish()
}

fn max_crit_indep_precedes_omega_of_x(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("max_crit_indep_precedes_omega_of_x");
    t.record(c.g, c.gx_ex.alpha() == c.alpha_prime, || {
        (format!("α(G[X]) = {} ≠ α′ = {}", c.gx_ex.alpha(), c.alpha_prime), vec![("X".into(), c.x)])
    });
    for &s in c.ex.max_crit_masks() {
        let inside = s & !c.x == 0 && c.gx_ex.omega_masks().contains(&c.project(s));
        t.record(c.g, inside, || {
            ("maximum critical independent set not in Ω(G[X])".into(), vec![("S".into(), s), ("X".into(), c.x)])
        });
    }
    let corona_x = c.lift(c.gx_ex.corona_mask());
    let core_x = c.lift(c.gx_ex.core_mask());
    let precedes = c.ex.diadem_mask() & !corona_x == 0 && core_x & !c.ex.nucleus_mask() == 0;
    t.record(c.g, precedes, || {
        (
            "MaxCritIndep(G) does not precede Ω(G[X])".into(),
            vec![
                ("diadem".into(), c.ex.diadem_mask()),
                ("nucleus".into(), c.ex.nucleus_mask()),
                ("corona(G[X])".into(), corona_x),
                ("core(G[X])".into(), core_x),
            ],
        )
    });
    t.finish()
}

fn diadem_nucleus_under_x(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("diadem_nucleus_under_x");
    let diadem_x = c.lift(c.gx_ex.diadem_mask());
    let nucleus_x = c.lift(c.gx_ex.nucleus_mask());
    let ok = c.ex.diadem_mask() & !diadem_x == 0 && nucleus_x & !c.ex.nucleus_mask() == 0;
    t.record(c.g, ok, || {
        (
            "diadem(G) ⊄ diadem(G[X]) or nucleus(G[X]) ⊄ nucleus(G)".into(),
            vec![
                ("diadem".into(), c.ex.diadem_mask()),
                ("diadem(G[X])".into(), diadem_x),
                ("nucleus".into(), c.ex.nucleus_mask()),
                ("nucleus(G[X])".into(), nucleus_x),
            ],
        )
    });
    t.finish()
}

fn spread_chain(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("spread_chain");
    for sub in &c.mci_subs {
        t.record(c.g, sub.spread() <= 2 * c.alpha_prime, || {
            (format!("spread {} > 2α′ = {}", sub.spread(), 2 * c.alpha_prime), family_sets("gamma_prime", sub))
        });
    }
    t.record(c.g, c.alpha_prime <= c.alpha, || no_sets(format!("α′ = {} > α = {}", c.alpha_prime, c.alpha)));
    for sub in &c.omega_subs {
        t.record(c.g, 2 * c.alpha <= sub.spread(), || {
            (format!("spread {} < 2α = {}", sub.spread(), 2 * c.alpha), family_sets("gamma", sub))
        });
    }
    t.finish()
}

fn nucleus_diadem_value(c: &Ctx) -> usize {
    (c.ex.nucleus_mask().count_ones() + c.ex.diadem_mask().count_ones()) as usize
}

fn nucleus_diadem_bound(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("nucleus_diadem_bound");
    let value = nucleus_diadem_value(c);
    t.record(c.g, value <= 2 * c.alpha_prime && value <= 2 * c.alpha, || {
        (
            format!("|nucleus| + |diadem| = {value}, 2α′ = {}, 2α = {}", 2 * c.alpha_prime, 2 * c.alpha),
            vec![("nucleus".into(), c.ex.nucleus_mask()), ("diadem".into(), c.ex.diadem_mask())],
        )
    });
    t.finish()
}

fn ke_collection_equivalence(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("ke_collection_equivalence");
    let is_collection = |s: &Sub| s.spread() == 2 * c.alpha;
    let some = c.mci_subs.iter().any(is_collection);
    let every = c.mci_subs.iter().all(is_collection);
    t.record(c.g, c.ke == some && some == every, || {
        let example = c.mci_subs.iter().find(|s| is_collection(s) != c.ke);
        (
            format!("ke={} some_collection={some} every_collection={every}", c.ke),
            example.map(|s| family_sets("gamma_prime", s)).unwrap_or_default(),
        )
    });
    t.finish()
}

fn nucleus_diadem_equality_implies_ke(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("nucleus_diadem_equality_implies_ke");
    if nucleus_diadem_value(c) != 2 * c.alpha {
        t.skip();
    } else {
        t.record(c.g, c.ke, || {
            (
                "|nucleus| + |diadem| = 2α but G is not KE".into(),
                vec![("nucleus".into(), c.ex.nucleus_mask()), ("diadem".into(), c.ex.diadem_mask())],
            )
        });
    }
    t.finish()
}

fn covered_pairs_with_critical_intersection(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("covered_pairs_with_critical_intersection");
    for &(i, j) in &c.family_pairs {
        let (gamma, gamma_p) = (&c.omega_subs[i], &c.mci_subs[j]);
        // ∩Γ lies in a maximum independent set, so it is independent and
        // critical exactly when its difference is d(G).
        if !gamma_p.covered_by(gamma) || c.ex.difference(gamma.inter) != c.d {
            t.skip();
            continue;
        }
        let inter_in = gamma.inter & !gamma_p.inter == 0;
        let precedes = gamma_p.precedes(gamma);
        let spread = gamma_p.spread() <= gamma.spread();
        let equal_inter = gamma_p.union != gamma.union || gamma_p.inter == gamma.inter;
        t.record(c.g, inter_in && precedes && spread && equal_inter, || {
            let mut sets = family_sets("gamma", gamma);
            sets.extend(family_sets("gamma_prime", gamma_p));
            (
                format!(
                    "∩Γ ⊆ ∩Γ′: {inter_in}, Γ′ ◁ Γ: {precedes}, spread: {spread}, equal unions give equal intersections: {equal_inter}"
                ),
                sets,
            )
        });
    }
    t.finish()
}

fn covered_pairs_with_equal_union(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("covered_pairs_with_equal_union");
    for &(i, j) in &c.family_pairs {
        let (gamma, gamma_p) = (&c.omega_subs[i], &c.mci_subs[j]);
        if gamma_p.union != gamma.union || !gamma_p.covered_by(gamma) {
            t.skip();
            continue;
        }
        t.record(c.g, c.ke, || {
            let mut sets = family_sets("gamma", gamma);
            sets.extend(family_sets("gamma_prime", gamma_p));
            ("covered pair with ∪Γ′ = ∪Γ on a non-KE graph".into(), sets)
        });
    }
    t.finish()
}

fn diadem_equals_corona_implies_ke(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("diadem_equals_corona_implies_ke");
    if c.ex.diadem_mask() != c.ex.corona_mask() {
        t.skip();
    } else {
        t.record(c.g, c.ke, || ("diadem = corona but G is not KE".into(), vec![("diadem".into(), c.ex.diadem_mask())]));
    }
    t.finish()
}

fn alpha_prime_identity(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("alpha_prime_identity");
    let ker = c.ex.ker_mask();
    let d_ker = c.ex.difference(ker);
    for &s in c.ex.max_crit_masks() {
        let closed = (s | c.ex.neighborhood(s)).count_ones() as i64;
        t.record(c.g, 2 * c.alpha_prime as i64 == d_ker + closed, || {
            (
                format!("2α′ = {} but d(ker) + |N[S]| = {}", 2 * c.alpha_prime, d_ker + closed),
                vec![("ker".into(), ker), ("S".into(), s)],
            )
        });
    }
    t.finish()
}

fn alpha_prime_identity_poly(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("alpha_prime_identity_poly");
    let p = &c.poly;
    let d_ker = p.ker.len() as i64 - p.ker_neighborhood.len() as i64;
    let rhs = d_ker + p.closed_neighborhood.len() as i64;
    t.record(c.g, 2 * p.alpha_prime as i64 == rhs, || {
        (
            format!("2α′ = {} but d(ker) + |N[S]| = {rhs}", 2 * p.alpha_prime),
            vec![("ker".into(), mask_of(&p.ker)), ("S".into(), mask_of(&p.max_crit_set))],
        )
    });
    t.finish()
}

fn alpha_mu_bound(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("alpha_mu_bound");
    t.record(c.g, c.alpha + c.mu <= c.g.n(), || no_sets(format!("α = {}, μ = {}, n = {}", c.alpha, c.mu, c.g.n())));
    t.finish()
}

fn approx_ke_chain(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("approx_ke_chain");
    let a = ApproxKe::from_parts(&c.poly, Some(c.alpha));
    let tail = a.ker_plus_closed <= a.ker_plus_two_alpha_prime && a.ker_plus_two_alpha_prime <= a.three_alpha_prime;
    let head = 2 * c.alpha <= a.ker_plus_closed;
    let consistent = a.is_approx == Some(head && tail) && (!c.ke || a.is_approx == Some(true));
    t.record(c.g, tail && consistent, || no_sets(format!("{a:?}, ke = {}", c.ke)));
    t.finish()
}

fn alpha_bounds(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("alpha_bounds");
    let a = ApproxKe::from_parts(&c.poly, Some(c.alpha));
    let b = AlphaBounds::from_parts(&c.poly, &a);
    let lower_ok = b.lower == c.alpha_prime && b.lower <= c.alpha;
    let upper_ok = match (a.is_approx, b.upper_if_approx) {
        (Some(true), Some(u)) => c.alpha as f64 <= u && u <= 1.5 * c.alpha_prime as f64,
        (Some(false), None) => true,
        _ => false,
    };
    t.record(c.g, lower_ok && upper_ok, || no_sets(format!("{b:?} with α = {}, α′ = {}", c.alpha, c.alpha_prime)));
    t.finish()
}

fn poly_critical_difference(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("poly_critical_difference");
    let poly = critical_difference_poly(c.g);
    t.record(c.g, poly == c.d, || no_sets(format!("poly d = {poly}, oracle d = {}", c.d)));
    t.finish()
}

fn poly_critical_set(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("poly_critical_set");
    let s = mask_of(&critical_set_poly(c.g));
    t.record(c.g, c.ex.is_critical_independent(s), || ("not a critical independent set".into(), vec![("S".into(), s)]));
    t.finish()
}

fn poly_alpha_prime(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("poly_alpha_prime");
    let s = mask_of(&c.poly.max_crit_set);
    let lex_smallest = c
        .ex
        .max_crit_masks()
        .iter()
        .map(|&m| VertexSet::from_mask(m).to_vec())
        .min()
        .expect("MaxCritIndep is never empty");
    let ok = c.poly.alpha_prime == c.alpha_prime
        && c.ex.max_crit_masks().contains(&s)
        && c.poly.max_crit_set.to_vec() == lex_smallest;
    t.record(c.g, ok, || {
        (format!("poly α′ = {}, oracle α′ = {}", c.poly.alpha_prime, c.alpha_prime), vec![("S".into(), s)])
    });
    t.finish()
}

fn poly_ke_recognition(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("poly_ke_recognition");
    let poly = c.poly.alpha_prime + c.mu == c.g.n();
    t.record(c.g, poly == c.ke, || no_sets(format!("poly KE = {poly}, oracle KE = {}", c.ke)));
    t.finish()
}

fn ker_poly_gate(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("ker_poly_gate");
    let oracle_ker = c.ex.ker_mask();
    for (name, ker) in [("deletion", ker_poly(c.g)), ("exclusion", ker_by_exclusion(c.g))] {
        let ker = mask_of(&ker);
        t.record(c.g, ker == oracle_ker, || {
            (format!("{name} rule disagrees with oracle ker"), vec![("poly".into(), ker), ("oracle".into(), oracle_ker)])
        });
    }
    t.finish()
}

fn matching_brute_force(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("matching_brute_force");
    let m = max_matching_general(c.g);
    t.record(c.g, m.is_valid_for(c.g), || no_sets("matching is not valid".into()));
    if c.g.n() > MATCHING_BRUTE_FORCE_MAX_N {
        t.skip();
    } else {
        let brute = oracle::brute_force_matching_number(c.g);
        t.record(c.g, brute == m.len(), || no_sets(format!("blossom μ = {}, brute force μ = {brute}", m.len())));
    }
    t.finish()
}

fn double_cover_konig_duality(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("double_cover_konig_duality");
    if c.g.n() > DOUBLE_COVER_BRUTE_FORCE_MAX_N {
        t.skip();
        return t.finish();
    }
    let b = double_cover(c.g);
    let adj = b.graph.adjacency_masks().expect("2n <= 16");
    let alpha_b = alpha_within(&adj, (1u64 << b.graph.n()) - 1);
    let mu_b = double_cover_matching_size(c.g);
    let n = c.g.n();
    let ok = alpha_b + mu_b == 2 * n && alpha_b as i64 == n as i64 + c.d;
    t.record(c.g, ok, || no_sets(format!("α(B) = {alpha_b}, μ(B) = {mu_b}, n = {n}, d = {}", c.d)));
    t.finish()
}

fn report_invariants(c: &Ctx) -> CheckRecord {
    let mut t = Tally::new("report_invariants");
    let cfg = AnalysisConfig { engine: Engine::Both, max_oracle_n: c.cfg.max_n };
    match analyze(c.g, &cfg) {
        Ok(r) => {
            let failures = r.invariant_failures();
            let matches = r.alpha == Some(c.alpha) && r.is_ke == c.ke && r.d == c.d;
            t.record(c.g, failures.is_empty() && matches, || {
                no_sets(format!("failed invariants {failures:?}, oracle values match: {matches}"))
            });
        }
        Err(e) => t.record(c.g, false, || no_sets(format!("analysis failed: {e}"))),
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::generate::{all_graphs, complete_bipartite, cycle, path};

    fn suite(g: &Graph) -> TheoremReport {
        theorem_suite(g, &SuiteConfig::default()).unwrap()
    }

    #[test]
    fn fixtures_have_no_violations() {
        for f in [Fixture::Fig1G1, Fixture::Fig1G2, Fixture::Fig3G] {
            let r = suite(&f.graph());
            assert!(!r.has_violation(), "{}: {:?}", f.name(), r.violations().collect::<Vec<_>>());
            assert_eq!(r.checks.len(), CHECK_NAMES.len());
        }
    }

    #[test]
    fn conditional_statuses() {
        let r = suite(&Fixture::Fig1G1.graph());
        assert_eq!(r.check("ke_spread_equality").unwrap().status, Status::PremiseNotMet);
        assert_eq!(r.check("diadem_equals_corona_implies_ke").unwrap().status, Status::PremiseNotMet);
        let r = suite(&path(5));
        assert_eq!(r.check("ke_spread_equality").unwrap().status, Status::Holds);
        assert_eq!(r.check("covered_pairs_with_equal_union").unwrap().status, Status::Holds);
    }

    #[test]
    fn ke_equivalence_examples() {
        for g in [complete_bipartite(2, 3), path(4)] {
            assert_eq!(ke_equivalence_check(&g).unwrap().status, Status::Holds);
        }
        let ex = ExactAnalysis::new(&cycle(5).unwrap()).unwrap();
        assert!(ex.omega_masks().iter().all(|&s| !ex.is_critical_independent(s)));
        assert_eq!(ke_equivalence_check(&cycle(5).unwrap()).unwrap().status, Status::Holds);
    }

    #[test]
    fn size_limit() {
        let cfg = SuiteConfig { max_n: 4, ..Default::default() };
        assert!(matches!(theorem_suite(&path(5), &cfg), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn subfamily_sampling_is_deterministic() {
        let sets: Vec<u64> = (0..20).map(|i| 1 << i).collect();
        let a = subfamilies(&sets, &mut ChaCha8Rng::seed_from_u64(1));
        let b = subfamilies(&sets, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a.len(), SUBFAMILY_SAMPLES);
        assert!(a.iter().zip(&b).all(|(x, y)| x.members == y.members));
        assert_eq!(subfamilies(&sets[..3], &mut ChaCha8Rng::seed_from_u64(1)).len(), 7);
    }

    /// The extremal-family reduction in `preorder_monotone_spread` against
    /// a direct maximum over every subfamily of Ind(G).
    #[test]
    fn preorder_reduction_matches_enumeration() {
        for n in 0..=4 {
            for g in all_graphs(n).unwrap() {
                let ex = ExactAnalysis::new(&g).unwrap();
                let ind = ex.independent_masks();
                let mut rng = ChaCha8Rng::seed_from_u64(0);
                for sub in subfamilies(ex.omega_masks(), &mut rng) {
                    let mut direct = 0;
                    for sel in 1u32..1 << ind.len() {
                        let members = (0..ind.len()).filter(|i| sel >> i & 1 == 1).map(|i| ind[i]).collect();
                        let cand = Sub::new(members);
                        if cand.precedes(&sub) {
                            direct = direct.max(cand.spread());
                        }
                    }
                    let reduced = ind
                        .iter()
                        .filter(|&&i| sub.inter & !i == 0 && i & !sub.union == 0)
                        .map(|&i| (i.count_ones() + (sub.union & !ex.neighborhood(i)).count_ones()) as usize)
                        .max()
                        .unwrap();
                    assert_eq!(direct, reduced);
                }
            }
        }
    }

    #[test]
    fn status_names() {
        assert_eq!(Status::Holds.as_str(), "holds");
        assert_eq!(Status::Violation.as_str(), "VIOLATION");
        assert_eq!(Status::PremiseNotMet.as_str(), "premise-not-met");
    }
}
