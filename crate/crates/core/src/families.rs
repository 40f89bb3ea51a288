//! Alternating paths `F_k^B`, `F_k^R` and their dual targets `D_k`,
//! `D_k^B`, `D_k^R`.
//!
//! Dual vertices carry signed labels `0, ±1, …, ±j` with `j = ⌊k/2⌋`
//! (`0` only for odd `k`). Vertex indices follow the order in which the
//! recursive construction adds them: `0` first for odd `k`, then `1, -1,
//! 2, -2, …`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ecgraph::{Colour, EdgeColouredGraph};
use crate::homsolver::Homomorphism;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("index k must be at least 1")]
    ZeroIndex,
    #[error("D_{0} has no B/R variants (k must be odd)")]
    VariantOnEven(usize),
    #[error("{0} does not embed into {1}")]
    Unrelated(String, String),
    #[error("cannot parse `{0}` as a family member")]
    Parse(String),
}

/// Which colour the middle edge (odd `k`) or first edge (even `k`) gets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathVariant {
    B,
    R,
}

impl PathVariant {
    pub fn colour(self) -> Colour {
        match self {
            PathVariant::B => Colour::Blue,
            PathVariant::R => Colour::Red,
        }
    }

    pub fn from_colour(c: Colour) -> Self {
        match c {
            Colour::Blue => PathVariant::B,
            Colour::Red => PathVariant::R,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathId {
    k: usize,
    variant: PathVariant,
}

impl PathId {
    pub fn new(k: usize, variant: PathVariant) -> Result<Self, FamilyError> {
        if k == 0 {
            return Err(FamilyError::ZeroIndex);
        }
        Ok(PathId { k, variant })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn variant(self) -> PathVariant {
        self.variant
    }

    /// Colour of the edge `v_i v_{i+1}`.
    pub fn edge_colour(self, i: usize) -> Colour {
        let anchor = if self.k % 2 == 1 { self.k / 2 } else { 0 };
        let c = self.variant.colour();
        if (i + anchor).is_multiple_of(2) {
            c
        } else {
            c.other()
        }
    }

    /// The family `ℱ_k`. Both variants are listed for every `k`; for even
    /// `k` they are isomorphic.
    pub fn family(k: usize) -> Result<[PathId; 2], FamilyError> {
        Ok([
            PathId::new(k, PathVariant::B)?,
            PathId::new(k, PathVariant::R)?,
        ])
    }
}

impl fmt::Display for PathId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k.is_multiple_of(2) {
            write!(f, "F_{}", self.k)
        } else {
            write!(f, "F_{}^{:?}", self.k, self.variant)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualVariant {
    Plain,
    B,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualId {
    k: usize,
    variant: DualVariant,
}

impl DualId {
    pub fn new(k: usize, variant: DualVariant) -> Result<Self, FamilyError> {
        if k == 0 {
            return Err(FamilyError::ZeroIndex);
        }
        if k.is_multiple_of(2) && variant != DualVariant::Plain {
            return Err(FamilyError::VariantOnEven(k));
        }
        Ok(DualId { k, variant })
    }

    pub fn plain(k: usize) -> Result<Self, FamilyError> {
        DualId::new(k, DualVariant::Plain)
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn variant(self) -> DualVariant {
        self.variant
    }

    /// `𝒟_k`.
    pub fn family(k: usize) -> Result<Vec<DualId>, FamilyError> {
        let plain = DualId::plain(k)?;
        if k.is_multiple_of(2) {
            Ok(vec![plain])
        } else {
            Ok(vec![
                plain,
                DualId::new(k, DualVariant::B)?,
                DualId::new(k, DualVariant::R)?,
            ])
        }
    }

    /// Members of `𝒟_1 ∪ … ∪ 𝒟_max_k` in an order compatible with the
    /// homomorphism order (every predecessor comes first).
    pub fn up_to(max_k: usize) -> Vec<DualId> {
        (1..=max_k)
            .flat_map(|k| DualId::family(k).expect("k >= 1"))
            .collect()
    }

    pub fn vertex_count(self) -> usize {
        2 * (self.k / 2) + self.k % 2
    }
}

impl fmt::Display for DualId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            DualVariant::Plain => write!(f, "D_{}", self.k),
            DualVariant::B => write!(f, "D_{}^B", self.k),
            DualVariant::R => write!(f, "D_{}^R", self.k),
        }
    }
}

impl FromStr for DualId {
    type Err = FamilyError;

    /// Accepts `D_5`, `D_5^B`, `D5B`, `5`, `5B`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FamilyError::Parse(s.to_owned());
        let body = s.trim().trim_start_matches('D').trim_start_matches('_');
        let digits: String = body.chars().take_while(char::is_ascii_digit).collect();
        let k: usize = digits.parse().map_err(|_| err())?;
        let variant = match body[digits.len()..].trim_start_matches('^') {
            "" => DualVariant::Plain,
            "B" => DualVariant::B,
            "R" => DualVariant::R,
            _ => return Err(err()),
        };
        DualId::new(k, variant)
    }
}

impl FromStr for PathVariant {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(PathVariant::B),
            "R" | "r" => Ok(PathVariant::R),
            _ => Err(FamilyError::Parse(s.to_owned())),
        }
    }
}

/// Either kind of family member, for [`embedding`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Member {
    Path(PathId),
    Dual(DualId),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Path(p) => p.fmt(f),
            Member::Dual(d) => d.fmt(f),
        }
    }
}

/// Alternating path on `v_0..v_len` whose first edge has colour `first`.
/// `len = 0` gives a single vertex.
pub fn alternating_path(len: usize, first: Colour) -> EdgeColouredGraph {
    let mut g =
        EdgeColouredGraph::with_labels((0..=len).map(|i| format!("v{i}")).collect::<Vec<_>>());
    let mut c = first;
    for i in 0..len {
        g.add_edge(i, i + 1, c).expect("fresh path edge");
        c = c.other();
    }
    g
}

pub fn make_path(id: PathId) -> EdgeColouredGraph {
    alternating_path(id.k, id.edge_colour(0))
}

/// Vertex index of signed label `s` in a dual with index `k`.
pub fn signed_index(k: usize, s: i64) -> Option<usize> {
    let j = (k / 2) as i64;
    let odd = k % 2;
    if s == 0 {
        return (odd == 1).then_some(0);
    }
    if s.abs() > j {
        return None;
    }
    let base = 2 * (s.unsigned_abs() as usize - 1) + odd;
    Some(if s > 0 { base } else { base + 1 })
}

/// Signed label of vertex index `idx` in a dual with index `k`.
pub fn signed_label(k: usize, idx: usize) -> i64 {
    let odd = k % 2;
    if odd == 1 && idx == 0 {
        return 0;
    }
    let t = idx - odd;
    let magnitude = (t / 2 + 1) as i64;
    if t.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

fn dual_skeleton(k: usize) -> EdgeColouredGraph {
    let n = 2 * (k / 2) + k % 2;
    EdgeColouredGraph::with_labels(
        (0..n)
            .map(|i| signed_label(k, i).to_string())
            .collect::<Vec<_>>(),
    )
}

fn edge_colour_between(r: i64, s: i64) -> Colour {
    // requires |r| < |s|
    let sign = if r != 0 { r } else { s };
    if sign > 0 {
        Colour::Blue
    } else {
        Colour::Red
    }
}

/// Edge test on `D_k` (or a variant) without building it.
pub fn dual_has_edge(id: DualId, a: usize, b: usize, c: Colour) -> bool {
    let n = id.vertex_count();
    if a >= n || b >= n {
        return false;
    }
    let (r, s) = (signed_label(id.k, a), signed_label(id.k, b));
    if a == b {
        let variant_loop = match id.variant {
            DualVariant::Plain => false,
            DualVariant::B => c == Colour::Blue,
            DualVariant::R => c == Colour::Red,
        };
        return match r.signum() {
            1 => c == Colour::Blue,
            -1 => c == Colour::Red,
            _ => variant_loop,
        };
    }
    let (r, s) = if r.abs() <= s.abs() { (r, s) } else { (s, r) };
    r.abs() < s.abs() && edge_colour_between(r, s) == c
}

/// Direct construction from the signed-label definition.
pub fn make_dual(id: DualId) -> EdgeColouredGraph {
    let k = id.k;
    let mut g = dual_skeleton(k);
    let labels: Vec<i64> = (0..g.vertex_count()).map(|i| signed_label(k, i)).collect();
    for (a, &r) in labels.iter().enumerate() {
        if r > 0 {
            g.add_edge(a, a, Colour::Blue).unwrap();
        } else if r < 0 {
            g.add_edge(a, a, Colour::Red).unwrap();
        }
        for (b, &s) in labels.iter().enumerate() {
            if r.abs() < s.abs() {
                g.add_edge(a, b, edge_colour_between(r, s)).unwrap();
            }
        }
    }
    match id.variant {
        DualVariant::Plain => {}
        DualVariant::B => g.add_edge(0, 0, Colour::Blue).unwrap(),
        DualVariant::R => g.add_edge(0, 0, Colour::Red).unwrap(),
    }
    g
}

/// `D_k` built from `D_{k-2}` by adding `±⌊k/2⌋`, starting from `D_1`
/// (one vertex) or `D_2` (blue loop on `1`, red loop on `-1`).
pub fn make_dual_recursive(k: usize) -> Result<EdgeColouredGraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::ZeroIndex);
    }
    let mut g = dual_skeleton(k);
    let idx = |s: i64| signed_index(k, s).expect("label in range");
    let start = if k % 2 == 1 { 1 } else { 2 };
    if start == 2 {
        g.add_edge(idx(1), idx(1), Colour::Blue).unwrap();
        g.add_edge(idx(-1), idx(-1), Colour::Red).unwrap();
    }
    let mut level = start + 2;
    while level <= k {
        let j = (level / 2) as i64;
        g.add_edge(idx(j), idx(j), Colour::Blue).unwrap();
        g.add_edge(idx(-j), idx(-j), Colour::Red).unwrap();
        for v in 1..j {
            for s in [v, -v] {
                let c = if s > 0 { Colour::Blue } else { Colour::Red };
                g.add_edge(idx(s), idx(j), c).unwrap();
                g.add_edge(idx(s), idx(-j), c).unwrap();
            }
        }
        if level % 2 == 1 {
            g.add_edge(idx(j), idx(0), Colour::Blue).unwrap();
            g.add_edge(idx(-j), idx(0), Colour::Red).unwrap();
        }
        level += 2;
    }
    Ok(g)
}

/// Immediate predecessors in the homomorphism order on `𝒟`.
pub fn predecessors(id: DualId) -> Vec<DualId> {
    let k = id.k;
    match id.variant {
        DualVariant::B | DualVariant::R => vec![DualId {
            k,
            variant: DualVariant::Plain,
        }],
        DualVariant::Plain if k == 1 => vec![],
        DualVariant::Plain if k.is_multiple_of(2) => vec![
            DualId {
                k: k - 1,
                variant: DualVariant::B,
            },
            DualId {
                k: k - 1,
                variant: DualVariant::R,
            },
        ],
        DualVariant::Plain => vec![DualId {
            k: k - 1,
            variant: DualVariant::Plain,
        }],
    }
}

/// Injective homomorphism witnessing a one-step inclusion `smaller ⊆ larger`
/// where `smaller ∈ predecessors(larger)`.
fn step_embedding(smaller: DualId, larger: DualId) -> Homomorphism {
    let image: Vec<usize> = (0..smaller.vertex_count())
        .map(|idx| {
            let s = signed_label(smaller.k, idx);
            let t = if s == 0 && larger.k.is_multiple_of(2) {
                // 0 has no counterpart in D_{2k}: use the new top level, whose
                // loop colour matches the variant's loop at 0.
                let top = (larger.k / 2) as i64;
                match smaller.variant {
                    DualVariant::R => -top,
                    _ => top,
                }
            } else {
                s
            };
            signed_index(larger.k, t).expect("labels of the smaller dual exist in the larger")
        })
        .collect();
    Homomorphism::new(image, larger.vertex_count()).unwrap()
}

/// Inclusion map of `smaller` into `larger` for duals related in the
/// homomorphism order. It is the identity on signed labels except that
/// `0` of `D_{2k-1}^{(B|R)}` goes to `±k` in `D_{2k}`.
pub fn dual_embedding(smaller: DualId, larger: DualId) -> Result<Homomorphism, FamilyError> {
    if smaller == larger {
        return Ok(Homomorphism::identity(smaller.vertex_count()));
    }
    // walk down from `larger` until `smaller` shows up
    let mut parent: HashMap<DualId, DualId> = HashMap::new();
    let mut queue = VecDeque::from([larger]);
    while let Some(d) = queue.pop_front() {
        if d.k < smaller.k {
            continue;
        }
        for p in predecessors(d) {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(p) {
                e.insert(d);
                queue.push_back(p);
            }
        }
    }
    if !parent.contains_key(&smaller) {
        return Err(FamilyError::Unrelated(
            smaller.to_string(),
            larger.to_string(),
        ));
    }
    let mut map = Homomorphism::identity(smaller.vertex_count());
    let mut cur = smaller;
    while cur != larger {
        let up = parent[&cur];
        map = map.then(&step_embedding(cur, up));
        cur = up;
    }
    Ok(map)
}

/// `F_k^{c1} -> F_{k'}^{c2}` for `k <= k'` as a shift `v_i -> v_{i+s}`.
pub fn path_embedding(smaller: PathId, larger: PathId) -> Result<Homomorphism, FamilyError> {
    if smaller.k > larger.k {
        return Err(FamilyError::Unrelated(
            smaller.to_string(),
            larger.to_string(),
        ));
    }
    let shift = (0..=larger.k - smaller.k)
        .find(|&s| (0..smaller.k).all(|i| smaller.edge_colour(i) == larger.edge_colour(i + s)))
        .ok_or_else(|| FamilyError::Unrelated(smaller.to_string(), larger.to_string()))?;
    let image = (0..=smaller.k).map(|i| i + shift).collect();
    Ok(Homomorphism::new(image, larger.k + 1).unwrap())
}

pub fn embedding(smaller: Member, larger: Member) -> Result<Homomorphism, FamilyError> {
    match (smaller, larger) {
        (Member::Path(a), Member::Path(b)) => path_embedding(a, b),
        (Member::Dual(a), Member::Dual(b)) => dual_embedding(a, b),
        (a, b) => Err(FamilyError::Unrelated(a.to_string(), b.to_string())),
    }
}
