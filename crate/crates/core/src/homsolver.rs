//! Brute-force homomorphism search and the graph constructions used to
//! cross-check the peeling algorithm.
//!
//! Nothing here knows about peeling or duals. The search is a plain
//! backtracking over vertices of the source graph with candidate filtering
//! against already-assigned neighbours, so its answers can be trusted as an
//! independent oracle on small instances.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::ecgraph::{Colour, EdgeColouredGraph};

#[derive(Debug, Error, PartialEq)]
pub enum HomError {
    #[error("map covers {got} vertices but the source graph has {expected}")]
    PartialMap { expected: usize, got: usize },
    #[error("image {image} of vertex {vertex} is outside the codomain of size {codomain}")]
    ImageOutOfRange {
        vertex: usize,
        image: usize,
        codomain: usize,
    },
    #[error("graphs on {n} vertices cannot be enumerated (at most {max})")]
    TooLarge { n: usize, max: usize },
    #[error("edge probability {0} is not in [0, 1]")]
    Probability(f64),
}

/// A total vertex map `V(G) -> V(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Homomorphism {
    codomain: usize,
    image: Vec<usize>,
}

impl Homomorphism {
    pub fn new(image: Vec<usize>, codomain: usize) -> Result<Self, HomError> {
        if let Some((vertex, &image)) = image.iter().enumerate().find(|(_, &w)| w >= codomain) {
            return Err(HomError::ImageOutOfRange {
                vertex,
                image,
                codomain,
            });
        }
        Ok(Homomorphism { codomain, image })
    }

    pub fn identity(n: usize) -> Self {
        Homomorphism {
            codomain: n,
            image: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.image.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn image(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            codomain: other.codomain,
            image: self.image.iter().map(|&w| other.image[w]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        self.image
            .iter()
            .all(|&w| !std::mem::replace(&mut seen[w], true))
    }

    pub fn verify(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> bool {
        verify_homomorphism(g, h, &self.image).unwrap_or(false) && self.codomain == h.vertex_count()
    }
}

/// Checks that `image` sends every blue edge of `g` to a blue edge of `h`
/// and every red edge to a red edge. Loops must land on loops of the same
/// colour unless the edge collapses onto an existing loop.
pub fn verify_homomorphism(
    g: &EdgeColouredGraph,
    h: &EdgeColouredGraph,
    image: &[usize],
) -> Result<bool, HomError> {
    if image.len() != g.vertex_count() {
        return Err(HomError::PartialMap {
            expected: g.vertex_count(),
            got: image.len(),
        });
    }
    if let Some((vertex, &w)) = image
        .iter()
        .enumerate()
        .find(|(_, &w)| w >= h.vertex_count())
    {
        return Err(HomError::ImageOutOfRange {
            vertex,
            image: w,
            codomain: h.vertex_count(),
        });
    }
    Ok(Colour::BOTH
        .into_iter()
        .all(|c| g.edges(c).all(|(u, v)| h.has_edge(image[u], image[v], c))))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub backtracks: u64,
    pub elapsed: Duration,
}

/// Dense adjacency of the target, one bit matrix per colour.
struct TargetMatrix {
    m: usize,
    bits: [Vec<bool>; 2],
}

impl TargetMatrix {
    fn new(h: &EdgeColouredGraph) -> Self {
        let m = h.vertex_count();
        let mut bits = [vec![false; m * m], vec![false; m * m]];
        for c in Colour::BOTH {
            for (a, b) in h.edges(c) {
                bits[c.index()][a * m + b] = true;
                bits[c.index()][b * m + a] = true;
            }
        }
        TargetMatrix { m, bits }
    }

    fn adjacent(&self, a: usize, b: usize, c: Colour) -> bool {
        self.bits[c.index()][a * self.m + b]
    }
}

/// Search order: BFS from the highest-degree unvisited vertex, component by
/// component.
fn search_order(g: &EdgeColouredGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.neighbours(v).len()), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, _) in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

pub fn find_homomorphism(
    g: &EdgeColouredGraph,
    h: &EdgeColouredGraph,
) -> (Option<Homomorphism>, SearchStats) {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let target = TargetMatrix::new(h);
    let order = search_order(g);
    let m = h.vertex_count();

    // For each vertex in search order, its constraints against vertices
    // placed earlier (including itself, for loops).
    let mut position = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let constraints: Vec<Vec<(usize, Colour)>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbours(v)
                .iter()
                .copied()
                .filter(|&(w, _)| position[w] <= i)
                .collect()
        })
        .collect();

    let n = order.len();
    let mut image = vec![usize::MAX; g.vertex_count()];
    // next candidate to try at each depth
    let mut next = vec![0usize; n + 1];
    let mut depth = 0;
    let found = loop {
        if depth == n {
            break true;
        }
        if m == 0 {
            break false;
        }
        let v = order[depth];
        let mut placed = false;
        while next[depth] < m {
            let w = next[depth];
            next[depth] += 1;
            stats.nodes += 1;
            let ok = constraints[depth].iter().all(|&(u, c)| {
                let wu = if u == v { w } else { image[u] };
                target.adjacent(w, wu, c)
            });
            if ok {
                image[v] = w;
                placed = true;
                break;
            }
        }
        if placed {
            depth += 1;
            next[depth] = 0;
        } else {
            stats.backtracks += 1;
            image[v] = usize::MAX;
            if depth == 0 {
                break false;
            }
            depth -= 1;
        }
    };
    stats.elapsed = start.elapsed();

    let result = found.then_some(Homomorphism { codomain: m, image });
    debug_assert!(result.as_ref().is_none_or(|f| f.verify(g, h)));
    (result, stats)
}

pub fn maps_to(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> bool {
    find_homomorphism(g, h).0.is_some()
}

/// Vertex `(u, u')` has index `u * |V(H)| + u'` and label `(gLabel,hLabel)`.
/// Pairs are joined in colour `c` iff both coordinates are joined in `c`.
pub fn categorical_product(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> EdgeColouredGraph {
    let m = h.vertex_count();
    let labels = (0..g.vertex_count()).flat_map(|u| {
        (0..m).map(move |w| format!("({},{})", g.display_label(u), h.display_label(w)))
    });
    let mut p = EdgeColouredGraph::with_labels(labels.collect::<Vec<_>>());
    let pair = |a: usize, b: usize| a * m + b;
    for c in Colour::BOTH {
        for (u, v) in g.edges(c) {
            for (x, y) in h.edges(c) {
                p.insert_edge(pair(u, x), pair(v, y), c).unwrap();
                p.insert_edge(pair(u, y), pair(v, x), c).unwrap();
            }
        }
    }
    p
}

pub fn hom_equivalent(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> bool {
    maps_to(g, h) && maps_to(h, g)
}

pub const MAX_ENUMERATION_ORDER: usize = 4;

/// Every labelled 2-edge-coloured graph on `n` vertices, exactly once.
///
/// Each vertex carries a subset of {blue loop, red loop} and each unordered
/// pair a subset of {blue, red}, giving `4^(n + n(n-1)/2)` graphs.
pub fn enumerate_graphs(
    n: usize,
) -> Result<impl Iterator<Item = EdgeColouredGraph> + Clone, HomError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(HomError::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok((0..enumeration_size(n)).map(move |code| enumerated_graph(n, code)))
}

/// Number of graphs `enumerate_graphs(n)` yields.
pub fn enumeration_size(n: usize) -> u64 {
    1 << (2 * (n * (n + 1) / 2))
}

/// The `code`-th graph of `enumerate_graphs(n)`. Two bits per slot, slots
/// ordered `(0,0), (0,1), …, (0,n-1), (1,1), …`; bit 0 is blue, bit 1 red.
pub fn enumerated_graph(n: usize, code: u64) -> EdgeColouredGraph {
    let mut g = EdgeColouredGraph::new(n);
    let slots = (0..n).flat_map(|u| (u..n).map(move |v| (u, v)));
    for (k, (u, v)) in slots.enumerate() {
        let bits = (code >> (2 * k)) & 3;
        if bits & 1 != 0 {
            g.add_edge(u, v, Colour::Blue).unwrap();
        }
        if bits & 2 != 0 {
            g.add_edge(u, v, Colour::Red).unwrap();
        }
    }
    g
}

/// Each potential loop and edge of each colour is present independently.
pub fn random_graph(
    n: usize,
    blue_probability: f64,
    red_probability: f64,
    seed: u64,
) -> Result<EdgeColouredGraph, HomError> {
    for p in [blue_probability, red_probability] {
        if !(0.0..=1.0).contains(&p) {
            return Err(HomError::Probability(p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColouredGraph::new(n);
    for u in 0..n {
        for v in u..n {
            if rng.gen_bool(blue_probability) {
                g.add_edge(u, v, Colour::Blue).unwrap();
            }
            if rng.gen_bool(red_probability) {
                g.add_edge(u, v, Colour::Red).unwrap();
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecgraph::VertexClass;

    fn path(colours: &[Colour]) -> EdgeColouredGraph {
        let mut g = EdgeColouredGraph::new(colours.len() + 1);
        for (i, &c) in colours.iter().enumerate() {
            g.add_edge(i, i + 1, c).unwrap();
        }
        g
    }

    fn blue_loop() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(1, [(0, 0)], []).unwrap()
    }

    fn red_loop() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(1, [], [(0, 0)]).unwrap()
    }

    #[test]
    fn identity_always_verifies() {
        let g = path(&[Colour::Blue, Colour::Red, Colour::Red]);
        assert_eq!(verify_homomorphism(&g, &g, &[0, 1, 2, 3]), Ok(true));
    }

    #[test]
    fn partial_map_is_an_error() {
        let g = path(&[Colour::Blue]);
        assert_eq!(
            verify_homomorphism(&g, &g, &[0]),
            Err(HomError::PartialMap {
                expected: 2,
                got: 1
            })
        );
        assert!(matches!(
            verify_homomorphism(&g, &g, &[0, 5]),
            Err(HomError::ImageOutOfRange { .. })
        ));
    }

    #[test]
    fn edge_onto_loopless_vertex_fails() {
        let g = path(&[Colour::Blue]);
        let point = EdgeColouredGraph::new(1);
        assert_eq!(verify_homomorphism(&g, &point, &[0, 0]), Ok(false));
        assert!(find_homomorphism(&g, &point).0.is_none());
        assert!(find_homomorphism(&g, &blue_loop()).0.is_some());
        assert!(find_homomorphism(&g, &red_loop()).0.is_none());
    }

    #[test]
    fn empty_source_maps_anywhere() {
        let (f, _) = find_homomorphism(&EdgeColouredGraph::new(0), &EdgeColouredGraph::new(0));
        assert_eq!(f.unwrap().domain(), 0);
        assert!(!maps_to(
            &EdgeColouredGraph::new(1),
            &EdgeColouredGraph::new(0)
        ));
    }

    #[test]
    fn search_stats_count_work() {
        let g = path(&[Colour::Blue, Colour::Red]);
        let (_, stats) = find_homomorphism(&g, &g);
        assert!(stats.nodes >= 3);
    }

    #[test]
    fn product_sizes_and_loops() {
        let g = path(&[Colour::Blue, Colour::Red]);
        let p = categorical_product(&g, &blue_loop());
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edges(Colour::Blue).collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(p.edges(Colour::Red).count(), 0);
        assert_eq!(p.label(1), Some("(1,0)"));

        let p = categorical_product(&red_loop(), &blue_loop());
        assert_eq!(p.vertex_count(), 1);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn product_of_edges_gives_both_diagonals() {
        let e = path(&[Colour::Blue]);
        let p = categorical_product(&e, &e);
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(
            p.edges(Colour::Blue).collect::<Vec<_>>(),
            vec![(0, 3), (1, 2)]
        );
    }

    #[test]
    fn hom_equivalence_of_loops() {
        assert!(hom_equivalent(&blue_loop(), &blue_loop()));
        assert!(!hom_equivalent(&blue_loop(), &red_loop()));
        let point = EdgeColouredGraph::new(1);
        assert!(maps_to(&point, &blue_loop()));
        assert!(!maps_to(&blue_loop(), &point));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(1).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(2).unwrap().count(), 64);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 4096);
        assert_eq!(enumeration_size(3), 4096);
        assert!(matches!(
            enumerate_graphs(5),
            Err(HomError::TooLarge { n: 5, .. })
        ));
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all: Vec<_> = enumerate_graphs(2).unwrap().collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        let g = random_graph(6, 0.0, 0.0, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_graph(6, 1.0, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 2 * 21);
        assert!(g.is_smooth());
        assert_eq!(g.classify_vertex(0), Ok(VertexClass::Mixed));
        assert_eq!(
            random_graph(10, 0.3, 0.2, 42).unwrap(),
            random_graph(10, 0.3, 0.2, 42).unwrap()
        );
        assert_eq!(
            random_graph(3, 1.5, 0.0, 0),
            Err(HomError::Probability(1.5))
        );
    }

    #[test]
    fn composition_and_injectivity() {
        let f = Homomorphism::new(vec![1, 0], 3).unwrap();
        let g = Homomorphism::new(vec![2, 2, 0], 3).unwrap();
        assert_eq!(f.then(&g).as_slice(), &[2, 2]);
        assert!(f.is_injective());
        assert!(!g.is_injective());
        assert!(Homomorphism::new(vec![3], 3).is_err());
    }
}
