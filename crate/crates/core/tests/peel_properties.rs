mod common;

use common::{alternating_cycle, naive_maps_to};
use ecdual::families::{make_dual, make_path, predecessors, PathId, PathVariant};
use ecdual::homsolver::{find_homomorphism, random_graph};
use ecdual::peel::{peel, solve, verify_result, verify_walk, SolveResult};
use ecdual::{Colour, EdgeColouredGraph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = EdgeColouredGraph> {
    (0..=max_n, 0.0f64..0.6, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, pb, pr, seed)| random_graph(n, pb, pr, seed).unwrap())
}

fn check_trace(g: &EdgeColouredGraph) -> Result<(), TestCaseError> {
    let t = peel(g);
    let mut seen = vec![0usize; g.vertex_count()];
    for round in &t.rounds {
        for &v in round
            .blue_only
            .iter()
            .chain(&round.red_only)
            .chain(&round.isolated)
        {
            seen[v] += 1;
        }
    }
    for &v in &t.residue {
        seen[v] += 1;
    }
    prop_assert!(
        seen.iter().all(|&c| c == 1),
        "rounds and residue partition V"
    );

    for (r, round) in t.rounds.iter().enumerate().skip(1) {
        let prev = &t.rounds[r - 1];
        for &v in &round.blue_only {
            let p = t.red_parent[v].unwrap();
            prop_assert!(prev.red_only.contains(&p));
            prop_assert!(g.has_edge(v, p, Colour::Red));
        }
        for &v in &round.red_only {
            let p = t.blue_parent[v].unwrap();
            prop_assert!(prev.blue_only.contains(&p));
            prop_assert!(g.has_edge(v, p, Colour::Blue));
        }
        for &v in &round.isolated {
            prop_assert!(prev.red_only.contains(&t.red_parent[v].unwrap()));
            prop_assert!(prev.blue_only.contains(&t.blue_parent[v].unwrap()));
        }
    }
    for (r, round) in t.rounds.iter().enumerate() {
        for &v in round.blue_only.iter().chain(&round.red_only) {
            let chain = t.parent_chain(v);
            prop_assert_eq!(chain.len(), r + 1);
            // alternating, starting with the colour v lacks
            let mut c = if round.blue_only.contains(&v) {
                Colour::Red
            } else {
                Colour::Blue
            };
            for w in chain.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1], c));
                c = c.other();
            }
        }
    }
    prop_assert!(t.rounds.len() <= g.vertex_count());
    if !t.residue.is_empty() {
        let mut keep = vec![false; g.vertex_count()];
        for &v in &t.residue {
            keep[v] = true;
        }
        prop_assert!(g.induced_subgraph(&keep).0.is_smooth());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn trace_invariants(g in arb_graph(14)) {
        check_trace(&g)?;
    }

    #[test]
    fn results_verify_and_are_least(g in arb_graph(6)) {
        let r = solve(&g);
        prop_assert!(verify_result(&g, &r));
        match &r {
            SolveResult::Mapped { dual, .. } => {
                for p in predecessors(*dual) {
                    prop_assert!(!naive_maps_to(&g, &make_dual(p)), "maps to {}", p);
                }
            }
            SolveResult::NoMap(walk) => {
                prop_assert!(verify_walk(&g, walk));
                for k in 1..=2 * walk.len() {
                    for id in PathId::family(k).unwrap() {
                        prop_assert!(find_homomorphism(&make_path(id), &g).0.is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn disconnected_inputs_get_the_larger_dual(a in arb_graph(5), b in arb_graph(5)) {
        let union = a.disjoint_union(&b);
        let r = solve(&union);
        prop_assert!(verify_result(&union, &r));
        if let SolveResult::Mapped { dual, .. } = &r {
            prop_assert!(find_homomorphism(&union, &make_dual(*dual)).0.is_some());
            for p in predecessors(*dual) {
                prop_assert!(find_homomorphism(&union, &make_dual(p)).0.is_none());
            }
        } else {
            let both_map = solve(&a).dual().is_some() && solve(&b).dual().is_some();
            prop_assert!(!both_map);
        }
    }
}

#[test]
fn alternating_cycles_have_walks() {
    for len in (4..=20).step_by(2) {
        let g = alternating_cycle(len);
        let SolveResult::NoMap(walk) = solve(&g) else {
            panic!("cycle of length {len} mapped")
        };
        assert!(verify_walk(&g, &walk));
        assert_eq!(walk.len(), len);
    }
}

#[test]
fn odd_paths_of_both_variants() {
    for k in 1..40 {
        for v in [PathVariant::B, PathVariant::R] {
            let id = PathId::new(k, v).unwrap();
            let g = make_path(id);
            let r = solve(&g);
            assert!(verify_result(&g, &r));
            let d = r.dual().unwrap();
            let expected = if k % 2 == 0 {
                format!("D_{}", k + 1)
            } else {
                format!("D_{k}^{:?}", v)
            };
            assert_eq!(d.to_string(), expected);
        }
    }
}
