//! Peeling algorithm deciding whether a 2-edge-coloured graph maps to a
//! dual of an alternating path.
//!
//! Each round removes every vertex that is blue-only, red-only or isolated
//! in what remains. Blue-only and isolated vertices removed in round `i` go
//! to `i`, red-only ones to `-i`. If a round finds nothing to remove the
//! remainder is smooth and contains a closed alternating walk; otherwise the
//! last round decides which of `D_{2i-1}`, `D_{2i-1}^B`, `D_{2i-1}^R`,
//! `D_{2i}` is the least dual the graph maps to, and parent pointers
//! recorded during deletion give alternating paths into the graph that
//! certify nothing smaller works.
//!
//! The whole run is linear in `|V| + |E|`: every vertex keeps a live count
//! of incident edges per colour, and an edge is looked at only when one of
//! its endpoints is deleted.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ecgraph::{Colour, EdgeColouredGraph, VertexClass};
use crate::families::{
    alternating_path, dual_has_edge, signed_index, DualId, DualVariant, PathId, PathVariant,
};
use crate::homsolver::Homomorphism;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PeelError {
    #[error("graph is not smooth: vertex {0} is not mixed")]
    NotSmooth(usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("trace ended in a smooth residue; no certificate exists")]
    ResidueNotEmpty,
    #[error("trace is inconsistent with the {0:?} case")]
    InconsistentTrace(FinalCase),
}

/// Vertices removed in one round.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PeelRound {
    pub blue_only: Vec<usize>,
    pub red_only: Vec<usize>,
    pub isolated: Vec<usize>,
}

impl PeelRound {
    pub fn len(&self) -> usize {
        self.blue_only.len() + self.red_only.len() + self.isolated.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelTrace {
    /// `rounds[i - 1]` holds `(B_i, R_i, I_i)`.
    pub rounds: Vec<PeelRound>,
    /// For vertices removed as blue-only or isolated in round `i > 1`: a red
    /// neighbour removed in round `i - 1`.
    pub red_parent: Vec<Option<usize>>,
    /// For vertices removed as red-only or isolated in round `i > 1`: a blue
    /// neighbour removed in round `i - 1`.
    pub blue_parent: Vec<Option<usize>>,
    /// Round in which each vertex was removed (1-based); 0 for the residue.
    pub round_of: Vec<usize>,
    /// Vertices of the smooth remainder, if peeling stalled.
    pub residue: Vec<usize>,
    /// Elementary steps performed (vertex visits plus edge scans).
    pub operations: u64,
}

impl PeelTrace {
    pub fn last_round(&self) -> usize {
        self.rounds.len()
    }

    /// The alternating path recovered from parent pointers, starting at `v`
    /// and ending in round 1. For `v` removed in round `i` it has `i - 1`
    /// edges; its first edge is red if `v` was blue-only and blue if red-only.
    pub fn parent_chain(&self, v: usize) -> Vec<usize> {
        let start = self.round_of[v];
        let mut chain = vec![v];
        let mut cur = v;
        // blue-only vertices lean on a red parent and vice versa
        let mut want_red = self.red_parent[v].is_some() && self.blue_parent[v].is_none();
        for _ in 1..start {
            let next = if want_red {
                self.red_parent[cur]
            } else {
                self.blue_parent[cur]
            };
            cur = next.expect("parent pointers reach round 1");
            chain.push(cur);
            want_red = !want_red;
        }
        chain
    }

    fn chain_from(&self, v: usize, first: Colour) -> Vec<usize> {
        let mut chain = vec![v];
        let mut cur = v;
        let mut colour = first;
        for _ in 1..self.round_of[v] {
            cur = match colour {
                Colour::Red => self.red_parent[cur],
                Colour::Blue => self.blue_parent[cur],
            }
            .expect("parent pointers reach round 1");
            chain.push(cur);
            colour = colour.other();
        }
        chain
    }
}

/// Runs the peeling loop.
pub fn peel(g: &EdgeColouredGraph) -> PeelTrace {
    let n = g.vertex_count();
    let mut operations = 0u64;
    let mut count = Colour::BOTH.map(|c| {
        (0..n)
            .map(|v| g.neighbours(v).iter().filter(|&&(_, d)| d == c).count())
            .collect::<Vec<_>>()
    });
    for v in 0..n {
        operations += 1 + g.neighbours(v).len() as u64;
    }
    let class =
        |count: &[Vec<usize>; 2], v: usize| VertexClass::from_counts(count[0][v], count[1][v]);

    let mut round_of = vec![0usize; n];
    let mut red_parent = vec![None; n];
    let mut blue_parent = vec![None; n];
    let mut rounds = Vec::new();
    let mut alive = n;

    let mut frontier: Vec<usize> = (0..n)
        .filter(|&v| class(&count, v) != VertexClass::Mixed)
        .collect();
    let mut queued = vec![false; n];
    for &v in &frontier {
        queued[v] = true;
    }

    while alive > 0 && !frontier.is_empty() {
        let i = rounds.len() + 1;
        let mut round = PeelRound::default();
        frontier.sort_unstable();
        for &v in &frontier {
            operations += 1;
            round_of[v] = i;
            match class(&count, v) {
                VertexClass::BlueOnly => {
                    blue_parent[v] = None;
                    round.blue_only.push(v);
                }
                VertexClass::RedOnly => {
                    red_parent[v] = None;
                    round.red_only.push(v);
                }
                VertexClass::Isolated => round.isolated.push(v),
                VertexClass::Mixed => unreachable!("queued vertices are never mixed"),
            }
            if i == 1 {
                red_parent[v] = None;
                blue_parent[v] = None;
            }
        }
        alive -= frontier.len();

        let mut next = Vec::new();
        for &u in &frontier {
            for &(w, c) in g.neighbours(u) {
                operations += 1;
                if round_of[w] != 0 {
                    continue;
                }
                count[c.index()][w] -= 1;
                match c {
                    Colour::Red => red_parent[w] = Some(u),
                    Colour::Blue => blue_parent[w] = Some(u),
                }
                if !queued[w] && class(&count, w) != VertexClass::Mixed {
                    queued[w] = true;
                    next.push(w);
                }
            }
        }
        rounds.push(round);
        frontier = next;
    }

    let residue = (0..n).filter(|&v| round_of[v] == 0).collect();
    PeelTrace {
        rounds,
        red_parent,
        blue_parent,
        round_of,
        residue,
        operations,
    }
}

/// Which branch of the post-processing picked the dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FinalCase {
    /// `B_i ∪ R_i = ∅`: `D_{2i-1}`.
    Odd,
    /// `R_i = ∅`: `D_{2i-1}^B`.
    OddBlue,
    /// `B_i = ∅`: `D_{2i-1}^R`.
    OddRed,
    /// Both nonempty: `D_{2i}`.
    Even,
}

impl FinalCase {
    pub fn of(round: &PeelRound) -> FinalCase {
        match (round.blue_only.is_empty(), round.red_only.is_empty()) {
            (true, true) => FinalCase::Odd,
            (false, true) => FinalCase::OddBlue,
            (true, false) => FinalCase::OddRed,
            (false, false) => FinalCase::Even,
        }
    }

    pub fn dual(self, i: usize) -> DualId {
        let (k, variant) = match self {
            FinalCase::Odd => (2 * i - 1, DualVariant::Plain),
            FinalCase::OddBlue => (2 * i - 1, DualVariant::B),
            FinalCase::OddRed => (2 * i - 1, DualVariant::R),
            FinalCase::Even => (2 * i, DualVariant::Plain),
        };
        DualId::new(k, variant).expect("valid dual")
    }
}

/// A path-family member mapped into the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathMap {
    /// Length of the alternating path.
    pub length: usize,
    /// Colour of the edge `v_0 v_1` (irrelevant for length 0).
    pub first: Colour,
    /// `map.image(i)` is the graph vertex hit by `v_i`.
    pub map: Homomorphism,
}

impl PathMap {
    pub fn path(&self) -> EdgeColouredGraph {
        alternating_path(self.length, self.first)
    }

    pub fn verify(&self, g: &EdgeColouredGraph) -> bool {
        self.map.verify(&self.path(), g)
    }

    /// The path id, when `length >= 1`.
    pub fn path_id(&self) -> Option<PathId> {
        if self.length == 0 {
            return None;
        }
        // odd: the middle edge's colour names the variant; even: the first edge
        let anchor = if self.length % 2 == 1 {
            self.length / 2
        } else {
            0
        };
        let colour = if anchor % 2 == 0 {
            self.first
        } else {
            self.first.other()
        };
        PathId::new(self.length, PathVariant::from_colour(colour)).ok()
    }
}

/// Certificate that no predecessor of the returned dual admits the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `F_{k-1} -> G` for `D_k`, `k` odd. For `D_1` this is a single vertex.
    SingleEven(PathMap),
    /// `F_k^B -> G` for `D_k^B` or `F_k^R -> G` for `D_k^R`.
    SingleOdd(PathMap),
    /// `F_{k-1}^R -> G` and `F_{k-1}^B -> G` for `D_k`, `k` even.
    Pair { red: PathMap, blue: PathMap },
    /// The graph has no vertices; `D_1` has no predecessor to rule out.
    Empty,
}

impl Certificate {
    pub fn maps(&self) -> Vec<&PathMap> {
        match self {
            Certificate::SingleEven(m) | Certificate::SingleOdd(m) => vec![m],
            Certificate::Pair { red, blue } => vec![red, blue],
            Certificate::Empty => vec![],
        }
    }

    /// Each map is a homomorphism into `g` and the path members match what
    /// `dual` requires.
    pub fn verify(&self, g: &EdgeColouredGraph, dual: DualId) -> bool {
        let k = dual.k();
        let odd_member = |m: &PathMap, v: PathVariant| {
            m.length == k && m.path_id() == PathId::new(k, v).ok() && m.verify(g)
        };
        match (self, dual.variant()) {
            (Certificate::SingleEven(m), DualVariant::Plain) if k % 2 == 1 => {
                m.length == k - 1 && m.verify(g)
            }
            (Certificate::SingleOdd(m), DualVariant::B) => odd_member(m, PathVariant::B),
            (Certificate::SingleOdd(m), DualVariant::R) => odd_member(m, PathVariant::R),
            (Certificate::Pair { red, blue }, DualVariant::Plain) if k.is_multiple_of(2) => {
                let odd = |m: &PathMap, v| {
                    m.length == k - 1 && m.path_id() == PathId::new(k - 1, v).ok() && m.verify(g)
                };
                odd(red, PathVariant::R) && odd(blue, PathVariant::B)
            }
            (Certificate::Empty, DualVariant::Plain) => k == 1 && g.is_empty(),
            _ => false,
        }
    }
}

/// A cyclic sequence of oriented edges `(from, to, colour)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedAlternatingWalk {
    pub edges: Vec<(usize, usize, Colour)>,
}

impl ClosedAlternatingWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Wraps the alternating path `path` around the walk, giving `path -> g`.
    pub fn wrap(&self, path: PathId, g: &EdgeColouredGraph) -> Homomorphism {
        let first = path.edge_colour(0);
        let len = self.edges.len();
        let start = self
            .edges
            .iter()
            .position(|&(_, _, c)| c == first)
            .expect("an alternating walk carries both colours");
        let image = (0..=path.k())
            .map(|i| self.edges[(start + i) % len].0)
            .collect();
        Homomorphism::new(image, g.vertex_count()).expect("walk vertices lie in g")
    }
}

impl fmt::Display for ClosedAlternatingWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (u, v, c)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}:{c}")?;
        }
        Ok(())
    }
}

/// Checks even nonzero length, that consecutive edges (cyclically) share an
/// endpoint and differ in colour, and that every edge exists in `g`.
pub fn verify_walk(g: &EdgeColouredGraph, walk: &ClosedAlternatingWalk) -> bool {
    let e = &walk.edges;
    let len = e.len();
    if len == 0 || len % 2 == 1 {
        return false;
    }
    e.iter().enumerate().all(|(k, &(u, v, c))| {
        let (nu, _, nc) = e[(k + 1) % len];
        u < g.vertex_count() && v < g.vertex_count() && g.has_edge(u, v, c) && v == nu && c != nc
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SolveResult {
    Mapped {
        dual: DualId,
        map: Homomorphism,
        certificate: Certificate,
    },
    NoMap(ClosedAlternatingWalk),
}

impl SolveResult {
    pub fn dual(&self) -> Option<DualId> {
        match self {
            SolveResult::Mapped { dual, .. } => Some(*dual),
            SolveResult::NoMap(_) => None,
        }
    }
}

/// Full solve, also returning the trace.
pub fn solve_with_trace(g: &EdgeColouredGraph) -> (SolveResult, PeelTrace) {
    let trace = peel(g);
    if !trace.residue.is_empty() {
        let mut keep = vec![false; g.vertex_count()];
        for &v in &trace.residue {
            keep[v] = true;
        }
        let walk = walk_in(g, &keep, trace.residue[0]);
        return (SolveResult::NoMap(walk), trace);
    }
    if g.is_empty() {
        let dual = DualId::plain(1).unwrap();
        let result = SolveResult::Mapped {
            dual,
            map: Homomorphism::new(Vec::new(), 1).unwrap(),
            certificate: Certificate::Empty,
        };
        return (result, trace);
    }

    let i = trace.last_round();
    let last = &trace.rounds[i - 1];
    let case = FinalCase::of(last);
    let dual = case.dual(i);

    let mut signed: Vec<i64> = vec![0; g.vertex_count()];
    for (r, round) in trace.rounds.iter().enumerate() {
        let level = (r + 1) as i64;
        for &v in round.blue_only.iter().chain(&round.isolated) {
            signed[v] = level;
        }
        for &v in &round.red_only {
            signed[v] = -level;
        }
    }
    let to_zero: Vec<usize> = match case {
        FinalCase::Odd => last.isolated.clone(),
        FinalCase::OddBlue => [&last.blue_only[..], &last.isolated[..]].concat(),
        FinalCase::OddRed => [&last.red_only[..], &last.isolated[..]].concat(),
        FinalCase::Even => Vec::new(),
    };
    for v in to_zero {
        signed[v] = 0;
    }
    let image = signed
        .iter()
        .map(|&s| signed_index(dual.k(), s).expect("signed image lies in the dual"))
        .collect();
    let map = Homomorphism::new(image, dual.vertex_count()).unwrap();
    let certificate =
        build_certificate(g, &trace, case).expect("trace from peel is consistent with its case");
    debug_assert!(maps_into_dual(g, &map, dual));
    (
        SolveResult::Mapped {
            dual,
            map,
            certificate,
        },
        trace,
    )
}

/// Maps `g` into the least dual it admits, with a certificate of
/// minimality, or returns a closed alternating walk.
///
/// Disconnected graphs are peeled as a whole; the result is the largest of
/// the per-component answers, which is again least.
pub fn solve(g: &EdgeColouredGraph) -> SolveResult {
    solve_with_trace(g).0
}

/// Builds the certificate for the branch `case` taken after the last round
/// of `trace`.
pub fn build_certificate(
    g: &EdgeColouredGraph,
    trace: &PeelTrace,
    case: FinalCase,
) -> Result<Certificate, PeelError> {
    if !trace.residue.is_empty() {
        return Err(PeelError::ResidueNotEmpty);
    }
    let i = trace.last_round();
    if i == 0 {
        return if g.is_empty() {
            Ok(Certificate::Empty)
        } else {
            Err(PeelError::InconsistentTrace(case))
        };
    }
    let last = &trace.rounds[i - 1];
    if FinalCase::of(last) != case {
        return Err(PeelError::InconsistentTrace(case));
    }
    let n = g.vertex_count();
    let to_map = |seq: Vec<usize>, first: Colour| PathMap {
        length: seq.len() - 1,
        first,
        map: Homomorphism::new(seq, n).unwrap(),
    };

    // Odd path F^c_{2i-1} through an edge of colour c between two vertices
    // removed in the last round as c-only.
    let odd_path = |ends: &[usize], c: Colour| -> Option<PathMap> {
        let u = *ends.first()?;
        let v = g
            .neighbours(u)
            .iter()
            .filter(|&&(w, wc)| wc == c && trace.round_of[w] == i)
            .map(|&(w, _)| w)
            .min()?;
        let mut seq = trace.chain_from(u, c.other());
        seq.reverse();
        seq.extend(trace.chain_from(v, c.other()));
        // v_0 v_1 has the middle colour iff (i - 1) is even
        let first = if (i - 1).is_multiple_of(2) {
            c
        } else {
            c.other()
        };
        Some(to_map(seq, first))
    };

    let cert = match case {
        FinalCase::Odd => {
            let u = *last
                .isolated
                .first()
                .ok_or(PeelError::InconsistentTrace(case))?;
            let mut seq = trace.chain_from(u, Colour::Blue);
            seq.reverse();
            seq.extend(&trace.chain_from(u, Colour::Red)[1..]);
            // the reversed blue chain ends with a blue edge into u, so its
            // first edge is blue iff i - 1 is odd
            let first = if (i - 1) % 2 == 1 {
                Colour::Blue
            } else {
                Colour::Red
            };
            Certificate::SingleEven(to_map(seq, first))
        }
        FinalCase::OddBlue => Certificate::SingleOdd(
            odd_path(&last.blue_only, Colour::Blue).ok_or(PeelError::InconsistentTrace(case))?,
        ),
        FinalCase::OddRed => Certificate::SingleOdd(
            odd_path(&last.red_only, Colour::Red).ok_or(PeelError::InconsistentTrace(case))?,
        ),
        FinalCase::Even => Certificate::Pair {
            red: odd_path(&last.red_only, Colour::Red).ok_or(PeelError::InconsistentTrace(case))?,
            blue: odd_path(&last.blue_only, Colour::Blue)
                .ok_or(PeelError::InconsistentTrace(case))?,
        },
    };
    Ok(cert)
}

/// Closed alternating walk in a smooth, nonempty graph.
pub fn find_closed_alternating_walk(
    g: &EdgeColouredGraph,
) -> Result<ClosedAlternatingWalk, PeelError> {
    if g.is_empty() {
        return Err(PeelError::Empty);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.classify_vertex(v) != Ok(VertexClass::Mixed))
    {
        return Err(PeelError::NotSmooth(v));
    }
    Ok(walk_in(g, &vec![true; g.vertex_count()], 0))
}

/// Walk finder restricted to vertices with `keep[v]`, which must induce a
/// smooth subgraph containing `start`.
///
/// Grows a maximal alternating path `p_0 … p_t` from `start` (preferring
/// blue, lowest index), then closes it: an edge from `p_0` of the missing
/// colour lands on some `p_i`; odd `i` closes a cycle. Otherwise an edge
/// from `p_t` of the missing colour lands on some `p_j`; `t - j` odd closes
/// a cycle. Otherwise `p_0, p_i, …, p_t, p_j, …, p_1, p_0` is closed.
fn walk_in(g: &EdgeColouredGraph, keep: &[bool], start: usize) -> ClosedAlternatingWalk {
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = vec![start];
    // colours[k] is the colour of p_k p_{k+1}
    let mut colours: Vec<Colour> = Vec::new();
    on_path[start] = true;

    let fresh = |on_path: &[bool], v: usize, c: Colour| {
        g.neighbours(v)
            .iter()
            .filter(|&&(w, wc)| wc == c && keep[w] && !on_path[w])
            .map(|&(w, _)| w)
            .min()
    };

    // first edge
    let first = [Colour::Blue, Colour::Red]
        .into_iter()
        .find_map(|c| fresh(&on_path, start, c).map(|w| (w, c)));
    let Some((w, c)) = first else {
        // only loops at `start`: one of each colour
        return ClosedAlternatingWalk {
            edges: vec![(start, start, Colour::Blue), (start, start, Colour::Red)],
        };
    };
    path.push(w);
    colours.push(c);
    on_path[w] = true;

    // forward
    while let Some(w) = fresh(
        &on_path,
        *path.last().unwrap(),
        colours.last().unwrap().other(),
    ) {
        colours.push(colours.last().unwrap().other());
        path.push(w);
        on_path[w] = true;
    }
    // backward from p_0
    let mut front = Vec::new();
    let mut front_colours = Vec::new();
    let mut end = start;
    let mut need = colours[0].other();
    while let Some(w) = fresh(&on_path, end, need) {
        front.push(w);
        front_colours.push(need);
        on_path[w] = true;
        end = w;
        need = need.other();
    }
    if !front.is_empty() {
        front.reverse();
        front_colours.reverse();
        front.extend(path);
        front_colours.extend(colours);
        path = front;
        colours = front_colours;
    }

    let t = path.len() - 1;
    let mut position = vec![usize::MAX; n];
    for (k, &p) in path.iter().enumerate() {
        position[p] = k;
    }
    let edge = |k: usize| (path[k], path[k + 1], colours[k]);
    let back_edge = |k: usize| (path[k + 1], path[k], colours[k]);

    // all edges from an endpoint in the missing colour stay on the path
    let closing = |end: usize, c: Colour, prefer: &dyn Fn(usize) -> bool| -> usize {
        let hits: Vec<usize> = g
            .neighbours(end)
            .iter()
            .filter(|&&(w, wc)| wc == c && keep[w])
            .map(|&(w, _)| position[w])
            .collect();
        debug_assert!(hits.iter().all(|&k| k != usize::MAX), "path is maximal");
        hits.iter()
            .copied()
            .filter(|&k| prefer(k))
            .min()
            .or_else(|| hits.iter().copied().min())
            .expect("smooth vertices have edges of both colours")
    };

    let x = colours[0].other();
    let i = closing(path[0], x, &|k| k % 2 == 1);
    if i % 2 == 1 {
        let mut edges: Vec<_> = (0..i).map(edge).collect();
        edges.push((path[i], path[0], x));
        return ClosedAlternatingWalk { edges };
    }

    let y = colours[t - 1].other();
    let j = closing(path[t], y, &|k| (t - k) % 2 == 1);
    if (t - j) % 2 == 1 {
        let mut edges: Vec<_> = (j..t).map(edge).collect();
        edges.push((path[t], path[j], y));
        return ClosedAlternatingWalk { edges };
    }

    let mut edges = vec![(path[0], path[i], x)];
    edges.extend((i..t).map(edge));
    edges.push((path[t], path[j], y));
    edges.extend((0..j).rev().map(back_edge));
    ClosedAlternatingWalk { edges }
}

/// `map` is a homomorphism `g -> dual`, checked edge by edge against the
/// signed-label rule so the dual is never materialised.
pub fn maps_into_dual(g: &EdgeColouredGraph, map: &Homomorphism, dual: DualId) -> bool {
    map.domain() == g.vertex_count()
        && map.codomain() == dual.vertex_count()
        && Colour::BOTH.iter().all(|&c| {
            g.edges(c)
                .all(|(u, v)| dual_has_edge(dual, map.image(u), map.image(v), c))
        })
}

/// Checks a `Mapped` result end to end: `map` is a homomorphism into the
/// dual and the certificate verifies. `NoMap` results check the walk.
pub fn verify_result(g: &EdgeColouredGraph, result: &SolveResult) -> bool {
    match result {
        SolveResult::Mapped {
            dual,
            map,
            certificate,
        } => maps_into_dual(g, map, *dual) && certificate.verify(g, *dual),
        SolveResult::NoMap(walk) => verify_walk(g, walk),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_dual, make_path, PathVariant};
    use crate::homsolver::find_homomorphism;
    use Colour::{Blue, Red};

    fn path(k: usize) -> EdgeColouredGraph {
        make_path(PathId::new(k, PathVariant::B).unwrap())
    }

    fn square() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(4, [(0, 1), (2, 3)], [(1, 2), (3, 0)]).unwrap()
    }

    fn double_loop() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(1, [(0, 0)], [(0, 0)]).unwrap()
    }

    fn round(b: &[usize], r: &[usize], i: &[usize]) -> PeelRound {
        PeelRound {
            blue_only: b.to_vec(),
            red_only: r.to_vec(),
            isolated: i.to_vec(),
        }
    }

    #[test]
    fn peel_f2() {
        let t = peel(&path(2));
        assert_eq!(
            t.rounds,
            vec![round(&[0], &[2], &[]), round(&[], &[], &[1])]
        );
        assert!(t.residue.is_empty());
        assert_eq!(t.red_parent[1], Some(2));
        assert_eq!(t.blue_parent[1], Some(0));
    }

    #[test]
    fn peel_f4() {
        let t = peel(&path(4));
        assert_eq!(
            t.rounds,
            vec![
                round(&[0], &[4], &[]),
                round(&[3], &[1], &[]),
                round(&[], &[], &[2])
            ]
        );
    }

    #[test]
    fn peel_smooth_and_trivial() {
        let t = peel(&square());
        assert!(t.rounds.is_empty());
        assert_eq!(t.residue, vec![0, 1, 2, 3]);
        let t = peel(&EdgeColouredGraph::new(1));
        assert_eq!(t.rounds, vec![round(&[], &[], &[0])]);
        let t = peel(&EdgeColouredGraph::new(0));
        assert!(t.rounds.is_empty() && t.residue.is_empty());
    }

    #[test]
    fn solve_single_blue_edge() {
        let g = path(1);
        match solve(&g) {
            SolveResult::Mapped {
                dual,
                map,
                certificate,
            } => {
                assert_eq!(dual.to_string(), "D_1^B");
                assert_eq!(map.as_slice(), &[0, 0]);
                match certificate {
                    Certificate::SingleOdd(m) => {
                        assert_eq!(m.map.as_slice(), &[0, 1]);
                        assert_eq!(m.path_id(), PathId::new(1, PathVariant::B).ok());
                    }
                    other => panic!("unexpected certificate {other:?}"),
                }
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn solve_f2() {
        let g = path(2);
        let SolveResult::Mapped {
            dual,
            map,
            certificate,
        } = solve(&g)
        else {
            panic!()
        };
        assert_eq!(dual.to_string(), "D_3");
        let d3 = make_dual(dual);
        let labels: Vec<&str> = (0..3).map(|v| d3.label(map.image(v)).unwrap()).collect();
        assert_eq!(labels, vec!["1", "0", "-1"]);
        let Certificate::SingleEven(m) = &certificate else {
            panic!()
        };
        assert_eq!(m.length, 2);
        assert!(m.verify(&g));
        assert!(certificate.verify(&g, dual));
        // identity up to reversal of the path
        let s = m.map.as_slice();
        assert!(s == [0, 1, 2] || s == [2, 1, 0]);
    }

    #[test]
    fn solve_f4_certificate_is_centred() {
        let g = path(4);
        let SolveResult::Mapped {
            dual, certificate, ..
        } = solve(&g)
        else {
            panic!()
        };
        assert_eq!(dual.to_string(), "D_5");
        let Certificate::SingleEven(m) = certificate else {
            panic!()
        };
        assert_eq!(m.map.image(2), 2);
        assert!(m.map.as_slice() == [0, 1, 2, 3, 4] || m.map.as_slice() == [4, 3, 2, 1, 0]);
        assert!(m.verify(&g));
    }

    #[test]
    fn solve_smooth_returns_walk() {
        let g = double_loop();
        let SolveResult::NoMap(walk) = solve(&g) else {
            panic!()
        };
        assert_eq!(walk.len(), 2);
        assert!(verify_walk(&g, &walk));
    }

    #[test]
    fn solve_empty_and_edgeless() {
        let g = EdgeColouredGraph::new(0);
        let r = solve(&g);
        assert_eq!(r.dual(), DualId::plain(1).ok());
        assert!(verify_result(&g, &r));
        let g = EdgeColouredGraph::new(3);
        let r = solve(&g);
        assert_eq!(r.dual(), DualId::plain(1).ok());
        let SolveResult::Mapped {
            certificate: Certificate::SingleEven(m),
            ..
        } = &r
        else {
            panic!()
        };
        assert_eq!(m.length, 0);
        assert!(verify_result(&g, &r));
    }

    #[test]
    fn walks_on_small_smooth_graphs() {
        let g = square();
        let w = find_closed_alternating_walk(&g).unwrap();
        assert_eq!(w.len(), 4);
        assert!(verify_walk(&g, &w));

        let w = find_closed_alternating_walk(&double_loop()).unwrap();
        assert_eq!(w.edges, vec![(0, 0, Blue), (0, 0, Red)]);

        let g = EdgeColouredGraph::from_edges(2, [(0, 1)], [(0, 1)]).unwrap();
        let w = find_closed_alternating_walk(&g).unwrap();
        assert_eq!(w.edges, vec![(0, 1, Blue), (1, 0, Red)]);
    }

    #[test]
    fn walk_needs_smooth_input() {
        assert_eq!(
            find_closed_alternating_walk(&path(2)),
            Err(PeelError::NotSmooth(0))
        );
        assert_eq!(
            find_closed_alternating_walk(&EdgeColouredGraph::new(0)),
            Err(PeelError::Empty)
        );
    }

    #[test]
    fn walk_through_loops_at_both_ends() {
        // p0 - p1 - p2 path (blue, red) with a red loop at p0 and a blue
        // loop at p2: falls through to the combined traversal
        let g = EdgeColouredGraph::from_edges(3, [(0, 1), (2, 2)], [(1, 2), (0, 0)]).unwrap();
        assert!(g.is_smooth());
        let w = find_closed_alternating_walk(&g).unwrap();
        assert!(verify_walk(&g, &w), "{w}");
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn walk_verification_rejects_bad_walks() {
        let g = square();
        let odd = ClosedAlternatingWalk {
            edges: vec![(0, 1, Blue), (1, 2, Red), (2, 3, Blue)],
        };
        assert!(!verify_walk(&g, &odd));
        let same = ClosedAlternatingWalk {
            edges: vec![(0, 1, Blue), (1, 0, Blue)],
        };
        assert!(!verify_walk(&g, &same));
        let missing = ClosedAlternatingWalk {
            edges: vec![(0, 2, Blue), (2, 0, Red)],
        };
        assert!(!verify_walk(&g, &missing));
        assert!(!verify_walk(&g, &ClosedAlternatingWalk { edges: vec![] }));
    }

    #[test]
    fn wrapping_paths_around_walks() {
        let g = square();
        let w = find_closed_alternating_walk(&g).unwrap();
        for k in 1..12 {
            for id in PathId::family(k).unwrap() {
                assert!(w.wrap(id, &g).verify(&make_path(id), &g));
            }
        }
    }

    #[test]
    fn build_certificate_rejects_wrong_case() {
        let g = path(2);
        let t = peel(&g);
        assert_eq!(
            build_certificate(&g, &t, FinalCase::Even),
            Err(PeelError::InconsistentTrace(FinalCase::Even))
        );
        let s = square();
        assert_eq!(
            build_certificate(&s, &peel(&s), FinalCase::Odd),
            Err(PeelError::ResidueNotEmpty)
        );
    }

    #[test]
    fn parent_chains_have_round_length() {
        let g = path(9);
        let t = peel(&g);
        for (r, round) in t.rounds.iter().enumerate() {
            for &v in round.blue_only.iter().chain(&round.red_only) {
                let chain = t.parent_chain(v);
                assert_eq!(chain.len(), r + 1);
            }
        }
    }

    #[test]
    fn f4_maps_to_d5_via_solve() {
        let g = path(4);
        let d5 = make_dual(DualId::plain(5).unwrap());
        let SolveResult::Mapped { map, .. } = solve(&g) else {
            panic!()
        };
        assert!(map.verify(&g, &d5));
        let labels: Vec<&str> = (0..5).map(|v| d5.label(map.image(v)).unwrap()).collect();
        assert_eq!(labels, vec!["1", "-2", "0", "2", "-1"]);
        assert!(find_homomorphism(&g, &make_dual(DualId::plain(4).unwrap()))
            .0
            .is_none());
    }
}
