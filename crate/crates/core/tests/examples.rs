//! Worked examples for each public operation, including the values stated
//! for the example graphs.

use kecrit_core::critical::{
    alpha_prime_poly, critical_difference_poly, critical_set_poly, double_cover,
    double_cover_matching_size, ker_poly, max_crit_set_poly,
};
use kecrit_core::fixtures::Fixture;
use kecrit_core::format::{parse_edge_list, parse_graph6, to_graph6};
use kecrit_core::generate::{all_graphs, complete, complete_bipartite, cycle, gnp, path};
use kecrit_core::ke::{alpha_bounds, approx_ke, is_ke, is_ke_collection, preorder_leq};
use kecrit_core::matching::{max_matching_bipartite, max_matching_general};
use kecrit_core::oracle::{self, enumerate_independent_sets, ExactAnalysis};
use kecrit_core::suite::{ke_equivalence_check, theorem_suite, Status, SuiteConfig};
use kecrit_core::{Error, Graph, SetFamily, VertexSet};

fn set(g: &Graph, names: &[&str]) -> VertexSet {
    g.labeled_set(names).unwrap()
}

fn names(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.vertex_name(v)).collect()
}

#[test]
fn neighborhoods_and_differences() {
    let g1 = Fixture::Fig1G1.graph();
    assert_eq!(names(&g1, &g1.neighborhood(&set(&g1, &["a", "b", "c"])).unwrap()), ["b2"]);
    assert_eq!(g1.neighborhood(&VertexSet::new()).unwrap(), VertexSet::new());
    let k2 = complete(2);
    assert_eq!(k2.neighborhood(&VertexSet::from_mask(1)).unwrap(), VertexSet::from_mask(2));
    assert_eq!(k2.closed_neighborhood(&VertexSet::from_mask(1)).unwrap(), VertexSet::from_mask(3));
    let s = set(&g1, &["a", "b", "c", "d", "e", "g"]);
    assert_eq!(g1.closed_neighborhood(&s).unwrap().len(), 10);

    let g2 = Fixture::Fig2G.graph();
    assert_eq!(g2.difference(&set(&g2, &["a", "b", "c", "d", "e", "k"])).unwrap(), 1);
    assert_eq!(g1.difference(&set(&g1, &["a", "b", "c", "d"])).unwrap(), 2);
    assert_eq!(g1.difference(&VertexSet::new()).unwrap(), 0);
    assert!(matches!(
        g1.difference(&VertexSet::from_mask(1 << 20)),
        Err(Error::VertexOutOfRange { .. })
    ));
}

#[test]
fn independence_and_induced_subgraphs() {
    let g1 = Fixture::Fig1G1.graph();
    assert!(g1.is_independent(&set(&g1, &["a", "b", "c", "d"])).unwrap());
    assert!(!complete(2).is_independent(&VertexSet::from_mask(3)).unwrap());
    let g3 = Fixture::Fig3G.graph();
    assert!(!g3.is_independent(&set(&g3, &["e", "f"])).unwrap());

    let whole = g1.induced_subgraph(&g1.vertices()).unwrap();
    assert_eq!(whole.graph.edge_count(), g1.edge_count());
    assert_eq!(whole.old_of_new, (0..13).collect::<Vec<_>>());
    assert_eq!(g1.induced_subgraph(&VertexSet::new()).unwrap().graph.n(), 0);

    let x = g1.closed_neighborhood(&set(&g1, &["a", "b", "c", "d", "e", "g"])).unwrap();
    let gx = g1.induced_subgraph(&x).unwrap();
    assert_eq!(gx.graph.n(), 10);
    assert!(is_ke(&gx.graph).unwrap());
    assert_eq!(gx.graph.label(0), Some("a"));
}

#[test]
fn serialization_examples() {
    let g = parse_graph6(b"D?{").unwrap();
    assert_eq!(g.n(), 5);
    assert_eq!(to_graph6(&g), "D?{");
    assert_eq!(parse_edge_list(b"3\n0 1\n1 2\n").unwrap(), path(3));
    assert_eq!(parse_edge_list(b"1\n").unwrap(), Graph::empty(1));
    match parse_graph6(b"C~\x01") {
        Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn generator_examples() {
    assert_eq!(all_graphs(3).unwrap().count(), 8);
    assert_eq!(path(4).edges(), &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(gnp(10, 0.3, 5).unwrap(), gnp(10, 0.3, 5).unwrap());
    assert!(matches!(all_graphs(8), Err(Error::SizeLimit { .. })));
}

#[test]
fn independent_set_enumeration() {
    let count = |g: &Graph| enumerate_independent_sets(g).unwrap().count();
    assert_eq!(count(&Graph::empty(1)), 2);
    assert_eq!(count(&complete(3)), 4);
    let p3: Vec<Vec<usize>> = enumerate_independent_sets(&path(3)).unwrap().map(|s| s.to_vec()).collect();
    assert_eq!(p3, vec![vec![], vec![0], vec![1], vec![2], vec![0, 2]]);
}

#[test]
fn oracle_examples() {
    let g1 = Fixture::Fig1G1.graph();
    let g2 = Fixture::Fig1G2.graph();
    let g3 = Fixture::Fig3G.graph();
    assert_eq!(oracle::alpha(&g3).unwrap(), 4);
    assert_eq!(oracle::alpha(&g1).unwrap(), 7);
    assert!(g1.is_independent(&set(&g1, &["a", "b", "c", "d", "e", "g", "b7"])).unwrap());
    assert_eq!(oracle::omega(&Graph::empty(4)).unwrap().sets(), &[VertexSet::full(4)]);

    assert_eq!(names(&g3, &oracle::core(&g3).unwrap()), ["a", "b"]);
    assert_eq!(names(&g3, &oracle::corona(&g3).unwrap()), ["a", "b", "c", "d", "e", "f"]);
    assert_eq!(names(&g1, &oracle::core(&g1).unwrap()), ["a", "b", "c", "d"]);
    assert_eq!(oracle::core(&complete(4)).unwrap(), VertexSet::new());
    assert_eq!(oracle::corona(&complete(4)).unwrap(), VertexSet::full(4));

    assert_eq!(oracle::critical_difference(&Fixture::Fig2G.graph()).unwrap(), 2);
    assert_eq!(oracle::critical_difference(&complete(2)).unwrap(), 0);
    assert_eq!(oracle::critical_difference(&g2).unwrap(), 2);
    assert_eq!(g2.difference(&set(&g2, &["x", "y", "z"])).unwrap(), 2);

    let crit1 = oracle::critical_independent_sets(&g1).unwrap();
    assert!(crit1.contains(&set(&g1, &["a", "b", "c"])));
    assert!(crit1.contains(&set(&g1, &["a", "b", "c", "d"])));
    assert_eq!(oracle::critical_independent_sets(&Graph::empty(3)).unwrap().sets(), &[VertexSet::full(3)]);
    let crit2 = oracle::critical_independent_sets(&g2).unwrap();
    assert!(!crit2.contains(&set(&g2, &["x", "y", "z", "w"])));

    assert_eq!(names(&g1, &oracle::ker_oracle(&g1).unwrap()), ["a", "b", "c"]);
    assert_eq!(oracle::ker_oracle(&Graph::empty(3)).unwrap(), VertexSet::full(3));
    assert_eq!(oracle::ker_oracle(&cycle(4).unwrap()).unwrap(), VertexSet::new());

    let e2 = Graph::empty(2);
    assert_eq!(oracle::max_crit_indep(&e2).unwrap().sets(), &[VertexSet::full(2)]);
    assert_eq!(oracle::alpha_prime(&e2).unwrap(), 2);
    assert_eq!(oracle::nucleus(&e2).unwrap(), VertexSet::full(2));
    assert_eq!(oracle::diadem(&e2).unwrap(), VertexSet::full(2));
    assert_eq!(oracle::alpha_prime(&Fixture::Fig2G.graph()).unwrap(), 6);
}

#[test]
fn local_maximum_examples() {
    let p3 = path(3);
    assert!(!oracle::is_local_max_ind(&p3, &VertexSet::from_mask(0b010)).unwrap());
    assert!(oracle::is_local_max_ind(&p3, &VertexSet::from_mask(0b101)).unwrap());
    assert!(matches!(oracle::is_local_max_ind(&p3, &VertexSet::from_mask(0b011)), Err(Error::Domain(_))));
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let ex = ExactAnalysis::new(&g).unwrap();
            assert!(ex.critical_masks().iter().all(|&a| ex.is_local_max_ind(a)));
            assert!(ex.omega_masks().iter().all(|&s| ex.is_local_max_ind(s)));
        }
    }
}

#[test]
fn matching_examples() {
    let c4 = cycle(4).unwrap();
    assert_eq!(max_matching_bipartite(&c4, &VertexSet::from_mask(0b0101)).unwrap().len(), 2);
    let star = complete_bipartite(1, 3);
    assert_eq!(max_matching_bipartite(&star, &VertexSet::from_mask(1)).unwrap().len(), 1);
    assert!(matches!(
        max_matching_bipartite(&complete(3), &VertexSet::from_mask(1)),
        Err(Error::Domain(_))
    ));
    let cover = double_cover(&Fixture::Fig2G.graph());
    let m = max_matching_bipartite(&cover.graph, &cover.left_part()).unwrap();
    assert_eq!(m.len(), 11);
    assert_eq!(double_cover_matching_size(&Fixture::Fig2G.graph()), 11);

    assert_eq!(max_matching_general(&complete(3)).len(), 1);
    assert_eq!(max_matching_general(&Fixture::Fig3G.graph()).len(), 4);
    assert_eq!(oracle::brute_force_matching_number(&Fixture::Fig3G.graph()), 4);
    assert_eq!(max_matching_general(&path(4)).len(), 2);
}

#[test]
fn polynomial_examples() {
    let fig2 = Fixture::Fig2G.graph();
    assert_eq!(critical_difference_poly(&fig2), 2);
    assert_eq!(critical_difference_poly(&complete(2)), 0);
    assert_eq!(critical_set_poly(&Graph::empty(4)), VertexSet::full(4));
    let s = critical_set_poly(&fig2);
    assert_eq!(fig2.difference(&s).unwrap(), 2);
    assert!(s.is_subset(&oracle::diadem(&fig2).unwrap()));
    let k3 = critical_set_poly(&complete(3));
    assert!(k3.len() <= 1 && complete(3).difference(&k3).unwrap() == 0);

    assert_eq!(alpha_prime_poly(&fig2), 6);
    assert_eq!(alpha_prime_poly(&Graph::empty(5)), 5);
    assert_eq!(names(&fig2, &max_crit_set_poly(&fig2)), ["a", "b", "c", "d", "e", "g"]);
    assert_eq!(names(&fig2, &ker_poly(&fig2)), ["a", "b", "c"]);
    assert_eq!(ker_poly(&Graph::empty(4)), VertexSet::full(4));
}

#[test]
fn ke_examples() {
    assert!(is_ke(&path(4)).unwrap());
    for f in [Fixture::Fig1G1, Fixture::Fig1G2, Fixture::Fig3G] {
        assert!(!is_ke(&f.graph()).unwrap());
    }
    let c5 = cycle(5).unwrap();
    assert_eq!(oracle::alpha(&c5).unwrap() + max_matching_general(&c5).len(), 4);
    assert_eq!(ke_equivalence_check(&c5).unwrap().status, Status::Holds);
    assert_eq!(ke_equivalence_check(&Fixture::Fig1G1.graph()).unwrap().status, Status::Holds);
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let ex = ExactAnalysis::new(&g).unwrap();
            let bipartite = ex.omega_masks().iter().any(|&s| {
                let rest = ((1u64 << n) - 1) & !s;
                ex.is_independent(rest)
            });
            if bipartite {
                assert!(is_ke(&g).unwrap());
                assert!(ex.omega_masks().iter().all(|&s| ex.is_critical_independent(s)));
            }
        }
    }
}

#[test]
fn collection_examples() {
    let g3 = Fixture::Fig3G.graph();
    assert!(is_ke_collection(&g3, &oracle::omega(&g3).unwrap()).unwrap());
    let g1 = Fixture::Fig1G1.graph();
    let mci = oracle::max_crit_indep(&g1).unwrap();
    assert!(!is_ke_collection(&g1, &mci).unwrap());
    assert_eq!(
        oracle::nucleus(&g1).unwrap().len() + oracle::diadem(&g1).unwrap().len(),
        12
    );

    let fig2 = Fixture::Fig2G.graph();
    let s = set(&fig2, &["a", "b", "c", "d", "e", "g"]);
    let x = fig2.closed_neighborhood(&s).unwrap();
    let gx = fig2.induced_subgraph(&x).unwrap();
    let omega_x: SetFamily = oracle::omega(&gx.graph).unwrap().iter().map(|t| gx.lift(t)).collect();
    let mci2 = oracle::max_crit_indep(&fig2).unwrap();
    assert!(preorder_leq(&mci2, &omega_x).unwrap());
    assert!(preorder_leq(&mci2, &mci2).unwrap());
}

#[test]
fn approx_examples() {
    assert_eq!(approx_ke(&Graph::empty(1)).unwrap().is_approx, Some(true));
    let a = approx_ke(&Fixture::Fig1G1.graph()).unwrap();
    assert_eq!((a.two_alpha, a.ker_plus_closed, a.is_approx), (Some(14), 13, Some(false)));
    let b = alpha_bounds(&Graph::empty(1)).unwrap();
    assert_eq!((b.lower, b.upper_if_approx), (1, Some(1.0)));
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let ex = ExactAnalysis::new(&g).unwrap();
            let bounds = alpha_bounds(&g).unwrap();
            assert_eq!(bounds.lower, ex.alpha_prime());
            if is_ke(&g).unwrap() {
                assert_eq!(approx_ke(&g).unwrap().is_approx, Some(true));
                assert_eq!(bounds.lower, ex.alpha());
            }
        }
    }
}

#[test]
fn suite_examples() {
    let fig2 = Fixture::Fig2G.graph();
    let r = theorem_suite(&fig2, &SuiteConfig::default()).unwrap();
    assert!(!r.has_violation());
    for check in ["closed_neighborhood_invariant", "closed_neighborhood_induces_ke"] {
        assert_eq!(r.check(check).unwrap().status, Status::Holds);
    }
    let fig3 = Fixture::Fig3G.graph();
    let r = theorem_suite(&fig3, &SuiteConfig::default()).unwrap();
    assert!(!r.has_violation());
    assert_eq!(r.check("ke_collection_equivalence").unwrap().status, Status::Holds);
    let ex = ExactAnalysis::new(&fig3).unwrap();
    let omega = ex.omega();
    assert!(omega.iter().any(|s| !ex.max_crit_indep().contains(s)));
}
