//! Verification campaigns tying the peeling algorithm to the brute-force
//! oracle.
//!
//! Each campaign runs independent cases on the rayon pool and merges their
//! tallies. A failing case records the offending graph in the text format,
//! and the per-case checks ([`check_graph`], [`audit_graph`]) are public so
//! a failure can be replayed from its serialized graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ecgraph::{serialize_graph, EdgeColouredGraph};
use crate::families::{
    make_dual, make_path, predecessors, DualId, DualVariant, PathId, PathVariant,
};
use crate::homsolver::{
    categorical_product, enumerated_graph, enumeration_size, hom_equivalent, maps_to, random_graph,
    HomError, MAX_ENUMERATION_ORDER,
};
use crate::peel::{
    maps_into_dual, solve, solve_with_trace, verify_result, verify_walk, SolveResult,
};

#[derive(Debug, Error, PartialEq)]
pub enum HarnessError {
    #[error("infeasible bounds: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Hom(#[from] HomError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
    /// Counterexample in the text graph format.
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub dual: String,
    pub operations: u64,
    pub ops_per_vertex: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub parameters: BTreeMap<String, String>,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall_time_s: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<BenchRow>,
}

impl CampaignReport {
    fn new(campaign: &str, parameters: &[(&str, String)]) -> Self {
        CampaignReport {
            campaign: campaign.to_owned(),
            parameters: parameters
                .iter()
                .map(|(k, v)| ((*k).to_owned(), v.clone()))
                .collect(),
            cases: 0,
            failures: Vec::new(),
            wall_time_s: 0.0,
            rows: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `key=value` lines. Multi-line counterexamples have newlines written
    /// as `\n`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "campaign={}", self.campaign).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "param.{k}={v}").unwrap();
        }
        writeln!(out, "cases={}", self.cases).unwrap();
        writeln!(out, "failures={}", self.failures.len()).unwrap();
        writeln!(out, "wall_time_s={:.3}", self.wall_time_s).unwrap();
        for (i, row) in self.rows.iter().enumerate() {
            writeln!(
                out,
                "row.{i}=n:{} dual:{} ops:{} ops_per_vertex:{:.3} seconds:{:.4}",
                row.n, row.dual, row.operations, row.ops_per_vertex, row.seconds
            )
            .unwrap();
        }
        for (i, f) in self.failures.iter().enumerate() {
            writeln!(out, "failure.{i}.case={}", f.case).unwrap();
            writeln!(out, "failure.{i}.detail={}", f.detail).unwrap();
            writeln!(out, "failure.{i}.graph={}", f.graph.replace('\n', "\\n")).unwrap();
        }
        writeln!(
            out,
            "status={}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Partial result of a batch of cases; merging is associative.
#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn single(case: String, g: &EdgeColouredGraph, problems: Vec<String>) -> Tally {
        let graph = if problems.is_empty() {
            String::new()
        } else {
            serialize_graph(g)
        };
        Tally {
            cases: 1,
            failures: problems
                .into_iter()
                .map(|detail| Failure {
                    case: case.clone(),
                    detail,
                    graph: graph.clone(),
                })
                .collect(),
        }
    }

    fn into_report(self, mut report: CampaignReport, start: Instant) -> CampaignReport {
        report.cases += self.cases;
        report.failures.extend(self.failures);
        report.wall_time_s = start.elapsed().as_secs_f64();
        report
    }
}

/// Path and dual graphs reused across cases.
pub struct FamilyCache {
    duals: HashMap<DualId, EdgeColouredGraph>,
    paths: HashMap<PathId, EdgeColouredGraph>,
}

impl FamilyCache {
    pub fn new(max_k: usize) -> Self {
        let duals = DualId::up_to(max_k)
            .into_iter()
            .map(|d| (d, make_dual(d)))
            .collect();
        let paths = (1..=max_k)
            .flat_map(|k| PathId::family(k).expect("k >= 1"))
            .map(|p| (p, make_path(p)))
            .collect();
        FamilyCache { duals, paths }
    }

    pub fn dual(&self, id: DualId) -> &EdgeColouredGraph {
        &self.duals[&id]
    }

    pub fn path(&self, id: PathId) -> &EdgeColouredGraph {
        &self.paths[&id]
    }
}

fn dual(k: usize, v: DualVariant) -> DualId {
    DualId::new(k, v).expect("valid dual id")
}

fn path(k: usize, v: PathVariant) -> PathId {
    PathId::new(k, v).expect("valid path id")
}

/// Obstruction checks on the families alone: no member of `ℱ_k`
/// maps to `D_k`, and for odd `k` neither `F_k^B -> D_k^R` nor
/// `F_k^R -> D_k^B`.
pub fn check_path_obstructions(k: usize, cache: &FamilyCache) -> Vec<String> {
    let mut problems = Vec::new();
    let d = cache.dual(dual(k, DualVariant::Plain));
    for p in PathId::family(k).expect("k >= 1") {
        if maps_to(cache.path(p), d) {
            problems.push(format!("{p} maps to D_{k}"));
        }
    }
    if k % 2 == 1 {
        let pairs = [
            (PathVariant::B, DualVariant::R),
            (PathVariant::R, DualVariant::B),
        ];
        for (pv, dv) in pairs {
            let (p, t) = (path(k, pv), dual(k, dv));
            if maps_to(cache.path(p), cache.dual(t)) {
                problems.push(format!("{p} maps to {t}"));
            }
        }
    }
    problems
}

/// Every predecessor arrow ending at `id` is realised by a homomorphism and,
/// when `strict`, no homomorphism goes back.
pub fn check_order_arrows(id: DualId, strict: bool, cache: &FamilyCache) -> Vec<String> {
    let mut problems = Vec::new();
    for p in predecessors(id) {
        if !maps_to(cache.dual(p), cache.dual(id)) {
            problems.push(format!("{p} does not map to {id}"));
        }
        if strict && maps_to(cache.dual(id), cache.dual(p)) {
            problems.push(format!("{id} maps back to {p}"));
        }
    }
    problems
}

/// All duality checks for one graph, against duals and paths of index up to
/// `max_k`; `cache` must cover `max(max_k, 2·|V(g)|)`.
///
/// Checks `g -> D_{2m}` iff `F_{2m} -/-> g`, `g -> D^B_{2m-1}` iff
/// `F^R_{2m-1} -/-> g` (and the red mirror), `g -> D_k` iff no member of
/// `ℱ_k` maps to `g`, that `solve` verifies, and that its dual is the first
/// dual `g` maps to in a linear extension of the order.
pub fn check_graph(g: &EdgeColouredGraph, max_k: usize, cache: &FamilyCache) -> Vec<String> {
    let mut problems = Vec::new();
    let into = |d: DualId| maps_to(g, cache.dual(d));
    let from = |p: PathId| maps_to(cache.path(p), g);

    for k in 1..=max_k {
        let family_hits = PathId::family(k).expect("k >= 1").into_iter().any(&from);
        if into(dual(k, DualVariant::Plain)) == family_hits {
            problems.push(format!("finite duality fails for D_{k}"));
        }
        if k % 2 == 0 {
            if into(dual(k, DualVariant::Plain)) == from(path(k, PathVariant::B)) {
                problems.push(format!("duality pair (F_{k}, D_{k}) fails"));
            }
        } else {
            if into(dual(k, DualVariant::B)) == from(path(k, PathVariant::R)) {
                problems.push(format!("duality pair (F_{k}^R, D_{k}^B) fails"));
            }
            if into(dual(k, DualVariant::R)) == from(path(k, PathVariant::B)) {
                problems.push(format!("duality pair (F_{k}^B, D_{k}^R) fails"));
            }
        }
    }

    let result = solve(g);
    if !verify_result(g, &result) {
        problems.push("solve result does not verify".to_owned());
    }
    let horizon = (2 * g.vertex_count()).max(1);
    let least = DualId::up_to(horizon).into_iter().find(|&d| into(d));
    if least != result.dual() {
        problems.push(format!(
            "solve returned {:?}, oracle least dual is {:?}",
            result.dual().map(|d| d.to_string()),
            least.map(|d| d.to_string())
        ));
    }
    if let SolveResult::Mapped { dual: d, .. } = &result {
        for p in predecessors(*d) {
            if into(p) {
                problems.push(format!("graph maps to predecessor {p} of {d}"));
            }
        }
    }
    problems
}

pub fn check_duality_exhaustive(
    max_n: usize,
    max_k: usize,
) -> Result<CampaignReport, HarnessError> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(HomError::TooLarge {
            n: max_n,
            max: MAX_ENUMERATION_ORDER,
        }
        .into());
    }
    if max_k == 0 || max_k > 16 {
        return Err(HarnessError::Infeasible(format!(
            "k = {max_k} must be in 1..=16"
        )));
    }
    let start = Instant::now();
    let report = CampaignReport::new(
        "exhaustive",
        &[("n", max_n.to_string()), ("k", max_k.to_string())],
    );
    let cache = FamilyCache::new(max_k.max(2 * max_n).max(1));

    let families = (1..=max_k)
        .into_par_iter()
        .map(|k| {
            let mut problems = check_path_obstructions(k, &cache);
            for d in DualId::family(k).expect("k >= 1") {
                problems.extend(check_order_arrows(d, k <= 4, &cache));
            }
            let case = format!("families k={k}");
            Tally::single(case, &EdgeColouredGraph::new(0), problems)
        })
        .reduce(Tally::default, Tally::merge);
    // family checks are not graphs from the universe
    let families = Tally {
        cases: 0,
        failures: families.failures,
    };

    let graphs = (0..enumeration_size(max_n))
        .into_par_iter()
        .map(|code| {
            let g = enumerated_graph(max_n, code);
            let problems = check_graph(&g, max_k, &cache);
            Tally::single(format!("graph #{code}"), &g, problems)
        })
        .reduce(Tally::default, Tally::merge);

    Ok(families.merge(graphs).into_report(report, start))
}

/// Per-case audit used by [`audit_random`].
pub fn audit_graph(g: &EdgeColouredGraph) -> Vec<String> {
    let mut problems = Vec::new();
    let n = g.vertex_count();
    let result = solve(g);
    match &result {
        SolveResult::Mapped {
            dual,
            map,
            certificate,
        } => {
            if !maps_into_dual(g, map, *dual) {
                problems.push(format!("map into {dual} does not verify"));
            }
            if !certificate.verify(g, *dual) {
                problems.push(format!("certificate for {dual} does not verify"));
            }
            if n <= 8 {
                for p in predecessors(*dual) {
                    if maps_to(g, &make_dual(p)) {
                        problems.push(format!("graph maps to predecessor {p} of {dual}"));
                    }
                }
            }
        }
        SolveResult::NoMap(walk) => {
            if !verify_walk(g, walk) {
                problems.push(format!("walk {walk} does not verify"));
            } else {
                let long = path(2 * n.max(1), PathVariant::B);
                let f = make_path(long);
                if !walk.wrap(long, g).verify(&f, g) {
                    problems.push(format!("{long} does not wrap around the walk"));
                }
                if n <= 8 && !maps_to(&f, g) {
                    problems.push(format!("oracle finds no {long} -> G"));
                }
            }
        }
    }
    problems
}

pub fn audit_random(
    count: usize,
    n: usize,
    blue_probability: f64,
    red_probability: f64,
    seed: u64,
) -> Result<CampaignReport, HarnessError> {
    // validate once up front
    random_graph(0, blue_probability, red_probability, 0)?;
    let start = Instant::now();
    let report = CampaignReport::new(
        "random",
        &[
            ("count", count.to_string()),
            ("n", n.to_string()),
            ("pb", blue_probability.to_string()),
            ("pr", red_probability.to_string()),
            ("seed", seed.to_string()),
        ],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..count).map(|_| rng.gen()).collect();
    let tally = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let g = random_graph(n, blue_probability, red_probability, s)
                .expect("probabilities validated");
            let problems = audit_graph(&g);
            Tally::single(format!("sample {i} (seed {s})"), &g, problems)
        })
        .reduce(Tally::default, Tally::merge);
    Ok(tally.into_report(report, start))
}

/// `D_{2k-1}` is hom-equivalent to `D_{2k-1}^R × D_{2k-1}^B` for
/// `k = 1..=max_k`.
pub fn check_corollary5(max_k: usize) -> Result<CampaignReport, HarnessError> {
    if max_k > 3 {
        return Err(HarnessError::Infeasible(format!(
            "k = {max_k}: products beyond k = 3 are too large for the oracle"
        )));
    }
    let start = Instant::now();
    let report = CampaignReport::new("corollary5", &[("k", max_k.to_string())]);
    let tally = (1..=max_k)
        .into_par_iter()
        .map(|k| {
            let odd = 2 * k - 1;
            let plain = make_dual(dual(odd, DualVariant::Plain));
            let product = categorical_product(
                &make_dual(dual(odd, DualVariant::R)),
                &make_dual(dual(odd, DualVariant::B)),
            );
            let mut problems = Vec::new();
            if !hom_equivalent(&plain, &product) {
                problems.push(format!(
                    "D_{odd} is not equivalent to D_{odd}^R x D_{odd}^B"
                ));
            }
            Tally::single(format!("k={k}"), &product, problems)
        })
        .reduce(Tally::default, Tally::merge);
    Ok(tally.into_report(report, start))
}

/// Least dual of the alternating path `F_n^B`.
fn expected_path_dual(n: usize) -> DualId {
    if n.is_multiple_of(2) {
        dual(n + 1, DualVariant::Plain)
    } else {
        dual(n, DualVariant::B)
    }
}

/// Solves `F_n` for each size and records time and operation counts.
pub fn bench_linear(sizes: &[usize]) -> Result<CampaignReport, HarnessError> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HarnessError::Infeasible(
            "sizes must be strictly ascending".into(),
        ));
    }
    if sizes.first() == Some(&0) {
        return Err(HarnessError::Infeasible(
            "path length must be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let listed: Vec<String> = sizes.iter().map(usize::to_string).collect();
    let mut report = CampaignReport::new("bench", &[("sizes", listed.join(","))]);
    for &n in sizes {
        let g = make_path(path(n, PathVariant::B));
        let t0 = Instant::now();
        let (result, trace) = solve_with_trace(&g);
        let seconds = t0.elapsed().as_secs_f64();
        let mut problems = Vec::new();
        let expected = expected_path_dual(n);
        if result.dual() != Some(expected) {
            problems.push(format!(
                "F_{n} solved to {:?}, expected {expected}",
                result.dual()
            ));
        }
        if !verify_result(&g, &result) {
            problems.push(format!("F_{n} result does not verify"));
        }
        report.cases += 1;
        report
            .failures
            .extend(problems.into_iter().map(|detail| Failure {
                case: format!("F_{n}"),
                detail,
                graph: format!("alternating path F_{n}^B"),
            }));
        report.rows.push(BenchRow {
            n,
            dual: result
                .dual()
                .map_or_else(|| "none".to_owned(), |d| d.to_string()),
            operations: trace.operations,
            ops_per_vertex: trace.operations as f64 / (n + 1) as f64,
            seconds,
        });
    }
    report.wall_time_s = start.elapsed().as_secs_f64();
    Ok(report)
}
