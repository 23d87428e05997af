mod support;

use molperc_core::lgraph::{graph_union, pair_intersect, pairs_disjoint, GraphError, NodeEdgePair};
use molperc_core::perception::{perception_selector, Enablement, EnablerSet, Perceiver};
use molperc_core::rs::ReactionSystem;
use molperc_core::LabelledGraph;
use proptest::prelude::*;
use support::{arb_background, arb_system, selector, subgraph, sym};

fn union_all<'a>(
    sys: &ReactionSystem,
    parts: impl Iterator<Item = &'a LabelledGraph>,
) -> LabelledGraph {
    parts.fold(sys.empty_state(), |acc, p| graph_union(&acc, p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn subgraph_is_a_partial_order(g in arb_background(), m in any::<[u64; 4]>()) {
        let h = subgraph(&g, m[0], m[1]);
        let k = subgraph(&h, m[2], m[3]);
        prop_assert!(g.is_subgraph_of(&g));
        prop_assert!(h.is_subgraph_of(&g));
        prop_assert!(k.is_subgraph_of(&h));
        prop_assert!(k.is_subgraph_of(&g));
        if g.is_subgraph_of(&h) {
            prop_assert_eq!(&g, &h);
        }
    }

    #[test]
    fn subgraphs_need_equal_labels(g in arb_background()) {
        let relabelled = g.clone().with_labels([sym("z")]);
        prop_assert!(!g.is_subgraph_of(&relabelled));
        prop_assert!(!relabelled.is_subgraph_of(&g));
    }

    #[test]
    fn union_is_a_join(g in arb_background(), m in any::<[u64; 6]>()) {
        let a = subgraph(&g, m[0], m[1]);
        let b = subgraph(&g, m[2], m[3]);
        let c = subgraph(&g, m[4], m[5]);
        let ab = graph_union(&a, &b).unwrap();
        prop_assert_eq!(&ab, &graph_union(&b, &a).unwrap());
        prop_assert_eq!(graph_union(&a, &a).unwrap(), a.clone());
        prop_assert_eq!(
            graph_union(&ab, &c).unwrap(),
            graph_union(&a, &graph_union(&b, &c).unwrap()).unwrap()
        );
        prop_assert!(a.is_subgraph_of(&ab) && b.is_subgraph_of(&ab) && ab.is_subgraph_of(&g));
        let empty = LabelledGraph::empty(g.labels().clone());
        prop_assert_eq!(graph_union(&a, &empty).unwrap(), a.clone());
        let u = ab.extraction();
        prop_assert_eq!(u.nodes, a.nodes() | b.nodes());
        prop_assert_eq!(u.edges, a.edges() | b.edges());
    }

    #[test]
    fn union_rejects_mismatched_labels(g in arb_background()) {
        let other = LabelledGraph::empty([sym("z")].into());
        prop_assert_eq!(graph_union(&g, &other), Err(GraphError::LabelMismatch));
    }

    #[test]
    fn intersection_and_disjointness_agree(g in arb_background(), m in any::<[u64; 4]>()) {
        let s = selector(&g, m[0], m[1]);
        let h = subgraph(&g, m[2], m[3]);
        prop_assert!(s.check(&g).is_ok());
        let i = pair_intersect(&s, &h.extraction());
        prop_assert_eq!(i.is_void(), pairs_disjoint(&s, &h.extraction()));
        prop_assert_eq!(i, pair_intersect(&h.extraction(), &s));
    }

    #[test]
    fn results_are_products_or_empty(sys in arb_system(), m in any::<[u64; 2]>()) {
        let t = subgraph(sys.background(), m[0], m[1]);
        for b in sys.reactions() {
            let en = sys.enabled(b, &t).unwrap();
            let res = sys.result(b, &t).unwrap();
            if en {
                prop_assert!(b.reactants.is_subgraph_of(&t));
                prop_assert_eq!(&res, &b.products);
            } else {
                prop_assert_eq!(&res, &sys.empty_state());
            }
            prop_assert!(res.is_subgraph_of(sys.background()));
        }
        let whole = sys.result_set(&t).unwrap();
        let expected = union_all(&sys, sys.reactions().iter().filter(|b| sys.enabled(b, &t).unwrap()).map(|b| &b.products));
        prop_assert_eq!(whole, expected);
    }

    #[test]
    fn missing_reactants_stay_missing(sys in arb_system(), m in any::<[u64; 4]>()) {
        let t = subgraph(sys.background(), m[0], m[1]);
        let smaller = subgraph(&t, m[2], m[3]);
        for b in sys.reactions() {
            if !b.reactants.is_subgraph_of(&t) {
                prop_assert!(!sys.enabled(b, &smaller).unwrap());
            }
        }
    }

    #[test]
    fn results_decompose_over_reaction_sets(sys in arb_system(), m in any::<[u64; 2]>(), split in 0usize..4) {
        let t = subgraph(sys.background(), m[0], m[1]);
        let k = split.min(sys.reactions().len());
        let (left, right) = sys.reactions().split_at(k);
        let part = |rs: &[molperc_core::rs::Reaction]| {
            ReactionSystem::new(sys.background().clone(), rs.to_vec()).unwrap().result_set(&t).unwrap()
        };
        prop_assert_eq!(sys.result_set(&t).unwrap(), graph_union(&part(left), &part(right)).unwrap());
    }

    #[test]
    fn extraction_determines_the_graph(g in arb_background(), m in any::<[u64; 2]>()) {
        let h = subgraph(&g, m[0], m[1]);
        let u = h.extraction();
        prop_assert_eq!(LabelledGraph::new(u.nodes, h.labels().clone(), u.edges).unwrap(), h);
    }

    #[test]
    fn runs_iterate_the_result_function(sys in arb_system(), m in any::<[u64; 4]>(), steps in 0usize..5) {
        let t0 = subgraph(sys.background(), m[0], m[1]);
        let ctx = subgraph(sys.background(), m[2], m[3]);
        let trace = sys.run(&t0, steps, std::slice::from_ref(&ctx)).unwrap();
        prop_assert_eq!(trace.len(), steps + 1);
        prop_assert_eq!(&trace[0], &t0);
        for i in 0..steps {
            let mut next = sys.result_set(&trace[i]).unwrap();
            if i == 0 {
                next = graph_union(&next, &ctx).unwrap();
            }
            prop_assert_eq!(&trace[i + 1], &next);
        }
    }

    #[test]
    fn perception_enabled_implies_enabled(sys in arb_system(), m in any::<[u64; 4]>(), strict in any::<bool>()) {
        let t = subgraph(sys.background(), m[0], m[1]);
        let mode = if strict { Enablement::Strict } else { Enablement::Relaxed };
        let perceiver = Perceiver::with_selector(&sys, selector(sys.background(), m[2], m[3])).unwrap().mode(mode);
        for b in sys.reactions() {
            if perceiver.perception_enabled(b, &t).unwrap() {
                prop_assert!(sys.enabled(b, &t).unwrap());
                prop_assert!(b.reactants.is_subgraph_of(&t));
            }
        }
        let resp = perceiver.resp_set(&t).unwrap();
        prop_assert!(resp.is_subgraph_of(&sys.result_set(&t).unwrap()));
    }

    #[test]
    fn strict_enablement_implies_relaxed(sys in arb_system(), m in any::<[u64; 4]>()) {
        let t = subgraph(sys.background(), m[0], m[1]);
        let s = selector(sys.background(), m[2], m[3]);
        let strict = Perceiver::with_selector(&sys, s.clone()).unwrap();
        let relaxed = Perceiver::with_selector(&sys, s).unwrap().mode(Enablement::Relaxed);
        for b in sys.reactions() {
            if strict.perception_enabled(b, &t).unwrap() {
                prop_assert!(relaxed.perception_enabled(b, &t).unwrap());
            }
        }
    }

    #[test]
    fn empty_enabler_perceives_nothing(sys in arb_system(), m in any::<[u64; 2]>()) {
        let t = subgraph(sys.background(), m[0], m[1]);
        let p = Perceiver::new(&sys, &EnablerSet::default()).unwrap();
        prop_assert!(p.selector().is_void());
        prop_assert_eq!(p.resp_set(&t).unwrap(), sys.empty_state());
    }

    #[test]
    fn perception_selector_is_the_enabler_edges(g in arb_background(), pick in 0usize..4) {
        let enabler: EnablerSet = ["a", "b", "i"].iter().take(pick).map(|s| sym(s)).collect();
        let s = perception_selector(&g, &enabler).unwrap();
        prop_assert!(s.check(&g).is_ok());
        for e in g.edges() {
            prop_assert_eq!(s.edges.contains(e), enabler.contains(&e.label));
        }
        for n in &s.nodes {
            prop_assert!(s.edges.iter().any(|e| e.touches(n)));
        }
    }
}
