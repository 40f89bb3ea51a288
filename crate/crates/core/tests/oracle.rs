//! The backtracking search against exhaustive map enumeration, and the two
//! dual constructions against each other.

mod common;

use common::{labelled_edges, naive_maps_to};
use ecdual::families::{make_dual, make_dual_recursive, signed_label, DualId, DualVariant};
use ecdual::homsolver::{enumerate_graphs, enumerated_graph, find_homomorphism};
use ecdual::Colour;

#[test]
fn backtracking_agrees_with_enumeration_on_pairs_of_two_vertex_graphs() {
    let small: Vec<_> = (0..=2).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    for g in &small {
        for h in &small {
            let (found, _) = find_homomorphism(g, h);
            assert_eq!(found.is_some(), naive_maps_to(g, h), "{g:?} -> {h:?}");
            if let Some(f) = found {
                assert!(f.verify(g, h));
            }
        }
    }
}

#[test]
fn backtracking_agrees_with_enumeration_into_duals() {
    let targets: Vec<_> = DualId::up_to(6).into_iter().map(make_dual).collect();
    for g in enumerate_graphs(3).unwrap() {
        for h in &targets {
            let (found, _) = find_homomorphism(&g, h);
            assert_eq!(found.is_some(), naive_maps_to(&g, h));
        }
    }
}

#[test]
fn backtracking_agrees_with_enumeration_on_three_vertex_samples() {
    let sample: Vec<_> = (0..4096u64)
        .step_by(37)
        .map(|c| enumerated_graph(3, c))
        .collect();
    for g in &sample {
        for h in &sample {
            assert_eq!(find_homomorphism(g, h).0.is_some(), naive_maps_to(g, h));
        }
    }
}

#[test]
fn recursive_and_direct_duals_coincide() {
    for k in 1..=50 {
        let direct = make_dual(DualId::plain(k).unwrap());
        let recursive = make_dual_recursive(k).unwrap();
        assert_eq!(direct.vertex_count(), recursive.vertex_count());
        for c in Colour::BOTH {
            assert_eq!(
                labelled_edges(&direct, c),
                labelled_edges(&recursive, c),
                "k = {k}"
            );
        }
        assert_eq!(direct, recursive);
    }
}

#[test]
fn dual_census() {
    for k in 1..=50 {
        for id in DualId::family(k).unwrap() {
            let g = make_dual(id);
            let j = k / 2;
            let labels: Vec<i64> = (0..g.vertex_count()).map(|v| signed_label(k, v)).collect();
            assert_eq!(g.vertex_count(), if k % 2 == 0 { 2 * j } else { 2 * j + 1 });
            let loops = |c| (0..g.vertex_count()).filter(|&v| g.has_loop(v, c)).count();
            let variant_loop = |c| match (id.variant(), c) {
                (DualVariant::B, Colour::Blue) | (DualVariant::R, Colour::Red) => 1,
                _ => 0,
            };
            assert_eq!(loops(Colour::Blue), j + variant_loop(Colour::Blue));
            assert_eq!(loops(Colour::Red), j + variant_loop(Colour::Red));
            let pairs = labels
                .iter()
                .flat_map(|r| labels.iter().map(move |s| (r, s)))
                .filter(|(r, s)| r.abs() < s.abs())
                .count();
            let non_loops = Colour::BOTH
                .iter()
                .map(|&c| g.edges(c).filter(|(u, v)| u != v).count())
                .sum::<usize>();
            assert_eq!(non_loops, pairs);
        }
    }
}
