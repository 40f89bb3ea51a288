#![allow(dead_code)]

use ecdual::{Colour, EdgeColouredGraph};

/// Tries all `|V(h)|^|V(g)|` maps. Independent of the backtracking search.
pub fn naive_maps_to(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> bool {
    let n = g.vertex_count();
    let m = h.vertex_count();
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    let mut image = vec![0usize; n];
    loop {
        let ok = Colour::BOTH
            .iter()
            .all(|&c| g.edges(c).all(|(u, v)| h.has_edge(image[u], image[v], c)));
        if ok {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            image[i] += 1;
            if image[i] < m {
                break;
            }
            image[i] = 0;
            i += 1;
        }
    }
}

/// Edge sets of a graph keyed by vertex labels.
pub fn labelled_edges(
    g: &EdgeColouredGraph,
    c: Colour,
) -> std::collections::BTreeSet<(String, String)> {
    g.edges(c)
        .map(|(u, v)| {
            let (a, b) = (
                g.display_label(u).into_owned(),
                g.display_label(v).into_owned(),
            );
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

pub fn alternating_cycle(len: usize) -> EdgeColouredGraph {
    let mut g = EdgeColouredGraph::new(len);
    for i in 0..len {
        let c = if i % 2 == 0 {
            Colour::Blue
        } else {
            Colour::Red
        };
        g.add_edge(i, (i + 1) % len, c).unwrap();
    }
    g
}
