//! The worked example graphs, shipped as labelled edge-list files.

use crate::format::parse_edge_list;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Fig1G1,
    Fig1G2,
    /// Same graph as [`Fixture::Fig1G1`].
    Fig2G,
    Fig3G,
}

impl Fixture {
    /// The distinct fixture graphs, one per shipped file.
    pub const FILES: [Fixture; 3] = [Fixture::Fig1G1, Fixture::Fig1G2, Fixture::Fig3G];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1G1 => "fig1_g1",
            Fixture::Fig1G2 => "fig1_g2",
            Fixture::Fig2G => "fig2_g",
            Fixture::Fig3G => "fig3_g",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        [Fixture::Fig1G1, Fixture::Fig1G2, Fixture::Fig2G, Fixture::Fig3G]
            .into_iter()
            .find(|f| f.name() == name)
    }

    pub fn file_name(self) -> &'static str {
        match self {
            Fixture::Fig1G1 | Fixture::Fig2G => "fig1_g1.edges",
            Fixture::Fig1G2 => "fig1_g2.edges",
            Fixture::Fig3G => "fig3_g.edges",
        }
    }

    /// Exact bytes of the shipped fixture file.
    pub fn source(self) -> &'static str {
        match self {
            Fixture::Fig1G1 | Fixture::Fig2G => include_str!("../../../fixtures/fig1_g1.edges"),
            Fixture::Fig1G2 => include_str!("../../../fixtures/fig1_g2.edges"),
            Fixture::Fig3G => include_str!("../../../fixtures/fig3_g.edges"),
        }
    }

    pub fn graph(self) -> Graph {
        parse_edge_list(self.source().as_bytes()).expect("shipped fixture parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let g1 = Fixture::Fig1G1.graph();
        assert_eq!((g1.n(), g1.edge_count()), (13, 14));
        assert_eq!(Fixture::Fig2G.graph(), g1);
        let g2 = Fixture::Fig1G2.graph();
        assert_eq!((g2.n(), g2.edge_count()), (11, 12));
        let g3 = Fixture::Fig3G.graph();
        assert_eq!((g3.n(), g3.edge_count()), (9, 13));
        for f in Fixture::FILES {
            assert_eq!(f.graph().labels().len(), f.graph().n());
            assert_eq!(Fixture::from_name(f.name()), Some(f));
        }
    }

    #[test]
    fn fig1_g1_neighborhood_of_pendants() {
        let g = Fixture::Fig1G1.graph();
        let abc = g.labeled_set(&["a", "b", "c"]).unwrap();
        let nbhd = g.neighborhood(&abc).unwrap();
        assert_eq!(nbhd, g.labeled_set(&["b2"]).unwrap());
        let abcd = g.labeled_set(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(g.difference(&abcd).unwrap(), 2);
        assert!(g.is_independent(&abcd).unwrap());
        let s = g.labeled_set(&["a", "b", "c", "d", "e", "g"]).unwrap();
        let x = g.closed_neighborhood(&s).unwrap();
        assert_eq!(x.len(), 10);
        assert_eq!(
            g.vertices().difference(&x),
            g.labeled_set(&["b6", "b7", "t6"]).unwrap()
        );
    }

    #[test]
    fn fig2_difference_of_example_set() {
        let g = Fixture::Fig2G.graph();
        let s = g.labeled_set(&["a", "b", "c", "d", "e", "k"]).unwrap();
        assert_eq!(g.difference(&s).unwrap(), 1);
    }

    #[test]
    fn fig3_e_f_adjacent() {
        let g = Fixture::Fig3G.graph();
        assert!(!g.is_independent(&g.labeled_set(&["e", "f"]).unwrap()).unwrap());
    }
}
