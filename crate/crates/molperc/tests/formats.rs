mod common;

use molperc::dot::{automaton_dot, graph_dot};
use molperc::FileFormat;
use molperc_core::perception::Environment;
use molperc_core::rs::ReactionSystem;
use molperc_core::{Automaton, LabelledGraph, Selector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn round_trips<T: FileFormat + PartialEq + std::fmt::Debug>(x: &T) -> Result<(), TestCaseError> {
    let text = x.to_json();
    let back = T::from_json(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, x);
    prop_assert_eq!(back.to_json(), text);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn automata_round_trip(seed in any::<u64>()) {
        let a = common::automaton(&mut ChaCha8Rng::seed_from_u64(seed));
        round_trips(&a)?;
        prop_assert_eq!(automaton_dot(&a), automaton_dot(&Automaton::from_json(&a.to_json()).unwrap()));
    }

    #[test]
    fn graphs_and_selectors_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng);
        round_trips(&g)?;
        round_trips(&common::selector(&mut rng, &g, 0.5))?;
        prop_assert_eq!(graph_dot(&g), graph_dot(&LabelledGraph::from_json(&g.to_json()).unwrap()));
    }

    #[test]
    fn systems_round_trip(seed in any::<u64>()) {
        round_trips::<ReactionSystem>(&common::system(&mut ChaCha8Rng::seed_from_u64(seed)))?;
    }

    #[test]
    fn environments_round_trip(seed in any::<u64>()) {
        round_trips::<Environment>(&common::environment(&mut ChaCha8Rng::seed_from_u64(seed)))?;
    }
}

#[test]
fn empty_selector_text() {
    assert_eq!(
        Selector::default().to_json(),
        "{\n  \"nodes\": [],\n  \"edges\": []\n}\n"
    );
}
