//! Replays the argument that a twofold translative tile in 3-space is a
//! parallelohedron, on concrete instances.
//!
//! Three pieces: the wheel-parameter arithmetic (which combinations of
//! `κ, ℓ, ϖ, φ` survive `k = φ + ϖ` for a given belt half-length `m`), the
//! middle-step containment check on belts of concrete zonotopes, and an
//! end-to-end suite over the Fedorov solids and an octagonal prism. Nothing
//! here proves the general statement; reports say "verified on instance".

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::belts::{all_belts, belt_of_edge, classify_fedorov, venkov_mcmullen, Belt, VmFailure, VmVerdict};
use crate::document::{from_json, vec3, Coords3};
use crate::error::{GeomError, Result};
use crate::exact::{int, rat, serialize_rat, Rat, Vec3};
use crate::lattice::{dv_cell_with_radius, Lattice3, DEFAULT_CANDIDATE_RADIUS};
use crate::polytope::{Location, Polytope3};
use crate::tiling::{verify_k_fold, SampleSpec, TranslateMultiset};
use crate::zonotope::zonotope_from_generators;

pub const DEFAULT_MAX_KAPPA: u64 = 4;
pub const DEFAULT_MAX_ELL: u64 = 4;
pub const DEFAULT_MAX_M: u64 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamTuple {
    pub kappa: u64,
    pub ell: u64,
    #[serde(serialize_with = "serialize_rat")]
    pub varpi: Rat,
    pub varphi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelParams {
    pub m: u64,
    pub k: u64,
    pub max_kappa: u64,
    pub max_ell: u64,
    /// Whether the bounds provably cover every feasible tuple: `ϖ` grows with
    /// both `κ` and `ℓ`, so it suffices that one step past each bound
    /// already exceeds `k`.
    pub complete: bool,
    pub feasible: Vec<ParamTuple>,
}

/// `ϖ = κ(m−1)/2 + ℓ/2`.
pub fn varpi_of(m: u64, kappa: u64, ell: u64) -> Rat {
    rat((kappa * (m - 1) + ell) as i64, 2)
}

pub fn feasible_wheel_params(m: u64, k: u64) -> Result<WheelParams> {
    feasible_wheel_params_bounded(m, k, DEFAULT_MAX_KAPPA, DEFAULT_MAX_ELL)
}

/// All `κ ∈ [1, max_kappa]`, `ℓ ∈ [0, max_ell]` with `ϖ ≤ k` and
/// `φ = k − ϖ` a nonnegative integer.
pub fn feasible_wheel_params_bounded(m: u64, k: u64, max_kappa: u64, max_ell: u64) -> Result<WheelParams> {
    if m < 2 {
        return Err(GeomError::InvalidParameter(format!("m must be at least 2, got {m}")));
    }
    if k < 1 {
        return Err(GeomError::InvalidParameter("k must be at least 1".into()));
    }
    let kk = int(k as i64);
    let mut feasible = Vec::new();
    for kappa in 1..=max_kappa {
        for ell in 0..=max_ell {
            let varpi = varpi_of(m, kappa, ell);
            if varpi > kk {
                continue;
            }
            let phi = &kk - &varpi;
            if phi.is_integer() {
                feasible.push(ParamTuple {
                    kappa,
                    ell,
                    varphi: phi.to_integer().try_into().expect("0 <= φ <= k"),
                    varpi,
                });
            }
        }
    }
    let complete = varpi_of(m, max_kappa + 1, 0) > kk && varpi_of(m, 1, max_ell + 1) > kk;
    Ok(WheelParams {
        m,
        k,
        max_kappa,
        max_ell,
        complete,
        feasible,
    })
}

/// Bounds large enough that [`feasible_wheel_params_bounded`] is complete.
pub fn exhaustive_bounds(m: u64, k: u64) -> (u64, u64) {
    ((2 * k) / (m - 1).max(1), 2 * k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContradictionReport {
    pub m: u64,
    pub k: u64,
    /// Least `φ + ϖ` once `φ ≥ 1` is forced: `1 + (m−1)/2`, at `κ = 1, ℓ = 0`.
    #[serde(serialize_with = "serialize_rat")]
    pub min_varphi_plus_varpi: Rat,
    pub contradiction: bool,
    /// No parameters are feasible even without `φ ≥ 1`.
    pub vacuous: bool,
}

/// At a vertex `v'` lying in the interior of another translate, `φ ≥ 1`;
/// adding the smallest admissible `ϖ` must exceed `k` for the case to be
/// closed.
pub fn contradiction_check(m: u64, k: u64) -> Result<ContradictionReport> {
    if m < 4 {
        return Err(GeomError::MiddleRangeEmpty(m));
    }
    let min = int(1) + varpi_of(m, 1, 0);
    let (mk, ml) = exhaustive_bounds(m, k);
    let vacuous = feasible_wheel_params_bounded(m, k, mk, ml)?.feasible.is_empty();
    Ok(ContradictionReport {
        m,
        k,
        contradiction: min > int(k as i64),
        min_varphi_plus_varpi: min,
        vacuous,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentCheck {
    /// `i` in `rint(G_1) + g_i`.
    pub index: usize,
    pub step: Vec3,
    pub start: Vec3,
    pub end: Vec3,
    pub start_location: Location,
    pub end_location: Location,
    pub midpoint_location: Location,
    pub interior: bool,
}

/// Whether the open segment `(a + g, b + g)` lies in `int(P)`.
///
/// For convex `P`: if both endpoints are in the closed polytope and the
/// midpoint is interior, every point of the open segment is a proper convex
/// combination of the midpoint with a point of `P`, hence interior.
/// Conversely an interior open segment has an interior midpoint.
fn check_segment(p: &Polytope3, a: &Vec3, b: &Vec3, g: &Vec3, index: usize) -> SegmentCheck {
    let start = a + g;
    let end = b + g;
    let mid = start.midpoint(&end);
    let start_location = p.locate_point(&start);
    let end_location = p.locate_point(&end);
    let midpoint_location = p.locate_point(&mid);
    let interior = start_location != Location::Outside
        && end_location != Location::Outside
        && midpoint_location == Location::Interior;
    SegmentCheck {
        index,
        step: g.clone(),
        start,
        end,
        start_location,
        end_location,
        midpoint_location,
        interior,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma6Report {
    pub edge: usize,
    pub m: usize,
    pub belt: Belt,
    /// One entry per `i` with `1 < i < m−1`.
    pub checked: Vec<SegmentCheck>,
    pub vacuous: bool,
    /// `i = m−1`, reported separately and only on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_index: Option<SegmentCheck>,
    pub passed: bool,
}

/// For the belt of `edge` (taken as `G_1`) with half-length `m`, checks that
/// `rint(G_1) + g_i ⊂ int(P)` for every `1 < i < m−1`.
pub fn lemma6_check(p: &Polytope3, edge: usize, include_boundary_index: bool) -> Result<Lemma6Report> {
    let belt = belt_of_edge(p, edge)?;
    let (a, b) = belt.edge_translates[0];
    let (va, vb) = (&p.vertices()[a], &p.vertices()[b]);
    let m = belt.half_length;
    let checked: Vec<SegmentCheck> = (2..m.saturating_sub(1))
        .map(|i| check_segment(p, va, vb, &belt.steps[i - 1], i))
        .collect();
    let boundary_index = (include_boundary_index && m >= 3)
        .then(|| check_segment(p, va, vb, &belt.steps[m - 2], m - 1));
    let passed = checked.iter().all(|c| c.interior);
    Ok(Lemma6Report {
        edge,
        m,
        vacuous: checked.is_empty(),
        checked,
        boundary_index,
        passed,
        belt,
    })
}

/// Lowest-index edge among those with the longest belt.
pub fn longest_belt_edge(p: &Polytope3) -> Result<usize> {
    let mut best: Option<(usize, usize)> = None;
    for belt in all_belts(p)? {
        let first = belt
            .edge_translates
            .iter()
            .map(|&(s, t)| p.edge_index(s, t).expect("belt edge"))
            .min()
            .expect("nonempty belt");
        let better = match best {
            None => true,
            Some((len, e)) => belt.len() > len || (belt.len() == len && first < e),
        };
        if better {
            best = Some((belt.len(), first));
        }
    }
    best.map(|(_, e)| e)
        .ok_or_else(|| GeomError::InvalidPolytope("polytope has no edges".into()))
}

// ---- canonical inputs ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGenerators {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub generators: Vec<Coords3>,
}

impl NamedGenerators {
    pub fn build(&self) -> Result<Polytope3> {
        zonotope_from_generators(&self.generators.iter().map(vec3).collect::<Vec<_>>())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedTiling {
    pub base_translates: Vec<Coords3>,
    pub period_basis: [Coords3; 3],
    pub k: u64,
}

impl ClaimedTiling {
    pub fn multiset(&self) -> Result<TranslateMultiset> {
        let l = Lattice3::new(std::array::from_fn(|i| vec3(&self.period_basis[i])))?;
        Ok(TranslateMultiset::new(
            self.base_translates.iter().map(vec3).collect(),
            Some(l),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub name: String,
    pub generators: Vec<Coords3>,
    pub belt_length: usize,
    pub claimed_tiling: ClaimedTiling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedLattice {
    pub name: String,
    pub expected: String,
    pub basis: [Coords3; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeTiling {
    pub name: String,
    pub generators: Vec<Coords3>,
    #[serde(flatten)]
    pub tiling: ClaimedTiling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleTuple {
    pub m: u64,
    pub kappa: u64,
    pub ell: u64,
    pub varpi: u64,
    pub varphi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCases {
    pub k: u64,
    pub single_tuples: Vec<SingleTuple>,
    pub empty_from_m: u64,
    pub contradiction_from_m: u64,
}

/// The versioned inputs the suite runs on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalData {
    pub version: u32,
    pub fedorov: Vec<NamedGenerators>,
    pub counterexample: Counterexample,
    pub lattices: Vec<NamedLattice>,
    pub cube_tilings: Vec<CubeTiling>,
    pub proof_cases: ProofCases,
    pub lemma6_prisms: Vec<NamedGenerators>,
}

const CANONICAL_JSON: &str = include_str!("../data/canonical.json");

impl CanonicalData {
    pub fn builtin() -> Self {
        Self::from_json(CANONICAL_JSON).expect("bundled canonical data is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn builtin_json() -> &'static str {
        CANONICAL_JSON
    }
}

// ---- suite ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub data: CanonicalData,
    pub samples: SampleSpec,
    pub max_kappa: u64,
    pub max_ell: u64,
    pub max_m: u64,
    pub include_boundary_index: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            data: CanonicalData::builtin(),
            samples: SampleSpec::default(),
            max_kappa: DEFAULT_MAX_KAPPA,
            max_ell: DEFAULT_MAX_ELL,
            max_m: DEFAULT_MAX_M,
            include_boundary_index: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepVerdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepReport {
    pub step: &'static str,
    pub title: &'static str,
    pub inputs: Value,
    pub verdict: StepVerdict,
    pub observed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub scope: &'static str,
    pub passed: bool,
    pub steps: Vec<StepReport>,
}

struct Outcome {
    observed: Value,
    witness: Option<Value>,
}

impl Outcome {
    fn pass(observed: Value) -> Self {
        Outcome { observed, witness: None }
    }

    fn fail(observed: Value, witness: Value) -> Self {
        Outcome {
            observed,
            witness: Some(witness),
        }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn run_step(step: &'static str, title: &'static str, inputs: Value, f: impl FnOnce() -> Result<Outcome>) -> StepReport {
    let (verdict, observed, witness) = match f() {
        Ok(Outcome { observed, witness: None }) => (StepVerdict::Pass, observed, None),
        Ok(Outcome { observed, witness }) => (StepVerdict::Fail, observed, witness),
        Err(e) => (StepVerdict::Fail, Value::Null, Some(json!({ "error": e.to_string() }))),
    };
    StepReport {
        step,
        title,
        inputs,
        verdict,
        observed,
        witness,
    }
}

fn classify_label(p: &Polytope3) -> String {
    match classify_fedorov(p) {
        Ok(t) => t.label().to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn step_fedorov(cfg: &SuiteConfig) -> StepReport {
    let solids = &cfg.data.fedorov;
    run_step("a", "Fedorov solids pass the belt criterion and classify distinctly", to_value(solids), || {
        let rows: Vec<Value> = solids
            .par_iter()
            .map(|s| {
                let row = match s.build() {
                    Ok(p) => {
                        let (count, sizes) = p.facet_signature();
                        json!({
                            "name": s.name,
                            "expected": s.expected,
                            "label": classify_label(&p),
                            "belt_criterion": to_value(&venkov_mcmullen(&p)),
                            "facet_count": count,
                            "facet_sizes": sizes,
                            "vertices": p.vertices().len(),
                            "edges": p.edges().len(),
                        })
                    }
                    Err(e) => json!({ "name": s.name, "expected": s.expected, "label": format!("error: {e}") }),
                };
                row
            })
            .collect();
        let mismatch = rows.iter().find(|r| {
            r["label"] != r["expected"] || r["belt_criterion"]["verdict"] != "pass"
        });
        let mut labels: Vec<&Value> = rows.iter().map(|r| &r["label"]).collect();
        labels.sort_by_key(|v| v.to_string());
        labels.dedup();
        let observed = Value::Array(rows.clone());
        Ok(match mismatch {
            Some(r) => Outcome::fail(observed, r.clone()),
            None if labels.len() != rows.len() => {
                Outcome::fail(observed, json!({ "reason": "classification labels are not pairwise distinct" }))
            }
            None => Outcome::pass(observed),
        })
    })
}

fn step_dv_cells(cfg: &SuiteConfig) -> StepReport {
    let lattices = &cfg.data.lattices;
    run_step("b", "Dirichlet-Voronoi cells classify correctly with volume |det|", to_value(lattices), || {
        let rows: Vec<Result<Value>> = lattices
            .par_iter()
            .map(|nl| {
                let l = Lattice3::new(std::array::from_fn(|i| vec3(&nl.basis[i])))?;
                let d = dv_cell_with_radius(&l, DEFAULT_CANDIDATE_RADIUS)?;
                let wider = dv_cell_with_radius(&l, DEFAULT_CANDIDATE_RADIUS + 1)?;
                let volume = d.cell.volume()?;
                Ok(json!({
                    "name": nl.name,
                    "expected": nl.expected,
                    "label": classify_label(&d.cell),
                    "facet_count": d.cell.facets().len(),
                    "relevant_vectors": d.relevant_vectors.len(),
                    "volume": crate::exact::format_rat(&volume),
                    "abs_det": crate::exact::format_rat(&l.abs_det()),
                    "volume_matches": volume == l.abs_det(),
                    "box_enlargement_stable": wider == d,
                }))
            })
            .collect();
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let bad = rows.iter().find(|r| {
            r["label"] != r["expected"] || r["volume_matches"] != true || r["box_enlargement_stable"] != true
        });
        let observed = Value::Array(rows.clone());
        Ok(match bad {
            Some(r) => Outcome::fail(observed, r.clone()),
            None => Outcome::pass(observed),
        })
    })
}

fn step_cube_tilings(cfg: &SuiteConfig) -> StepReport {
    let tilings = &cfg.data.cube_tilings;
    let inputs = json!({ "tilings": to_value(tilings), "resolution": cfg.samples.resolution });
    run_step("c", "cube lattice tilings verify at their claimed multiplicity", inputs, || {
        let mut rows = Vec::new();
        let mut witness = None;
        for t in tilings {
            let p = zonotope_from_generators(&t.generators.iter().map(vec3).collect::<Vec<_>>())?;
            let r = verify_k_fold(&p, &t.tiling.multiset()?, t.tiling.k, &cfg.samples)?;
            if !r.passed() && witness.is_none() {
                witness = Some(json!({
                    "name": t.name,
                    "claimed_k": r.claimed_k,
                    "volume_check": to_value(&r.volume_check),
                    "violation": r.violations.first().map(to_value),
                }));
            }
            rows.push(json!({
                "name": t.name,
                "claimed_k": r.claimed_k,
                "verdict": r.verdict,
                "samples_tested": r.samples_tested,
                "boundary_samples": r.boundary_samples.len(),
                "violations": r.violations.len(),
                "volume_check": to_value(&r.volume_check),
            }));
        }
        let observed = Value::Array(rows);
        Ok(match witness {
            Some(w) => Outcome::fail(observed, w),
            None => Outcome::pass(observed),
        })
    })
}

fn step_counterexample(cfg: &SuiteConfig) -> StepReport {
    let c = &cfg.data.counterexample;
    let inputs = json!({ "counterexample": to_value(c), "resolution": cfg.samples.resolution });
    run_step("d", "octagonal prism is rejected and its claimed twofold tiling refuted", inputs, || {
        let p = zonotope_from_generators(&c.generators.iter().map(vec3).collect::<Vec<_>>())?;
        let vm = venkov_mcmullen(&p);
        let report = verify_k_fold(&p, &c.claimed_tiling.multiset()?, c.claimed_tiling.k, &cfg.samples)?;
        let observed = json!({
            "belt_criterion": to_value(&vm),
            "volume_check": to_value(&report.volume_check),
            "samples_tested": report.samples_tested,
            "violations": report.violations.len(),
            "first_violation": report.violations.first().map(to_value),
        });
        let belt_ok = matches!(
            &vm,
            VmVerdict::Fail { witness: VmFailure::BeltLength { length, .. } } if *length == c.belt_length
        );
        Ok(if !belt_ok {
            Outcome::fail(observed, json!({ "reason": format!("expected a belt of {} facets", c.belt_length), "belt_criterion": to_value(&vm) }))
        } else if !report.volume_check.passed {
            Outcome::fail(observed, json!({ "reason": "claimed tiling is not volume-matched", "volume_check": to_value(&report.volume_check) }))
        } else if report.violations.is_empty() {
            Outcome::fail(observed, json!({ "reason": "sampling found no point of wrong multiplicity" }))
        } else {
            Outcome::pass(observed)
        })
    })
}

fn step_proof_cases(cfg: &SuiteConfig) -> StepReport {
    let pc = &cfg.data.proof_cases;
    let inputs = json!({
        "cases": to_value(pc),
        "max_m": cfg.max_m,
        "max_kappa": cfg.max_kappa,
        "max_ell": cfg.max_ell,
    });
    run_step("e", "wheel-parameter arithmetic closes every case", inputs, || {
        let k = pc.k;
        let tables = (2..=cfg.max_m)
            .map(|m| feasible_wheel_params_bounded(m, k, cfg.max_kappa, cfg.max_ell))
            .collect::<Result<Vec<_>>>()?;
        let mut failures = Vec::new();
        for t in &tables {
            if !t.complete {
                failures.push(json!({ "m": t.m, "reason": "enumeration bounds are not complete" }));
            }
            if t.m >= pc.empty_from_m && !t.feasible.is_empty() {
                failures.push(json!({ "m": t.m, "reason": "expected no feasible parameters", "feasible": to_value(&t.feasible) }));
            }
        }
        for s in &pc.single_tuples {
            let expected = vec![ParamTuple {
                kappa: s.kappa,
                ell: s.ell,
                varpi: int(s.varpi as i64),
                varphi: s.varphi,
            }];
            match tables.iter().find(|t| t.m == s.m) {
                Some(t) if t.feasible == expected => {}
                Some(t) => failures.push(json!({ "m": s.m, "reason": "feasible set differs", "feasible": to_value(&t.feasible) })),
                None => failures.push(json!({ "m": s.m, "reason": "m outside the enumerated range" })),
            }
        }
        let contradictions = (pc.contradiction_from_m.max(4)..=cfg.max_m)
            .map(|m| contradiction_check(m, k))
            .collect::<Result<Vec<_>>>()?;
        if let Some(c) = contradictions.iter().find(|c| !c.contradiction) {
            failures.push(json!({ "m": c.m, "reason": "no contradiction", "check": to_value(c) }));
        }
        let shown: Vec<&WheelParams> = tables.iter().filter(|t| t.m < pc.empty_from_m).collect();
        let empty_through = tables
            .iter()
            .filter(|t| t.m >= pc.empty_from_m && t.feasible.is_empty())
            .map(|t| t.m)
            .max();
        let observed = json!({
            "feasible": to_value(&shown),
            "empty_from_m": pc.empty_from_m,
            "empty_through_m": empty_through,
            "contradictions": contradictions.iter().filter(|c| !c.vacuous).map(to_value).collect::<Vec<_>>(),
            "vacuous_contradictions_through_m": contradictions.iter().filter(|c| c.vacuous && c.contradiction).map(|c| c.m).max(),
        });
        Ok(if failures.is_empty() {
            Outcome::pass(observed)
        } else {
            Outcome::fail(observed, Value::Array(failures))
        })
    })
}

fn step_lemma6(cfg: &SuiteConfig) -> StepReport {
    let prisms = &cfg.data.lemma6_prisms;
    let inputs = json!({ "prisms": to_value(prisms), "include_boundary_index": cfg.include_boundary_index });
    run_step("f", "middle belt steps move the first edge into the interior", inputs, || {
        let mut rows = Vec::new();
        let mut witness = None;
        for pr in prisms {
            let p = pr.build()?;
            let edge = longest_belt_edge(&p)?;
            let r = lemma6_check(&p, edge, cfg.include_boundary_index)?;
            let row = json!({
                "name": pr.name,
                "edge": edge,
                "m": r.m,
                "indices": r.checked.iter().map(|c| c.index).collect::<Vec<_>>(),
                "interior": r.checked.iter().map(|c| c.interior).collect::<Vec<_>>(),
                "vacuous": r.vacuous,
                "boundary_index": r.boundary_index.as_ref().map(|c| json!({ "index": c.index, "interior": c.interior })),
            });
            if (!r.passed || r.vacuous) && witness.is_none() {
                witness = Some(json!({
                    "name": pr.name,
                    "vacuous": r.vacuous,
                    "failed": r.checked.iter().filter(|c| !c.interior).map(to_value).collect::<Vec<_>>(),
                }));
            }
            rows.push(row);
        }
        let observed = Value::Array(rows);
        Ok(match witness {
            Some(w) => Outcome::fail(observed, w),
            None => Outcome::pass(observed),
        })
    })
}

type Step = fn(&SuiteConfig) -> StepReport;

/// Runs steps (a) through (f). Steps run concurrently; the report keeps
/// their canonical order.
pub fn theorem1_suite(cfg: &SuiteConfig) -> SuiteReport {
    let steps: [Step; 6] = [
        step_fedorov,
        step_dv_cells,
        step_cube_tilings,
        step_counterexample,
        step_proof_cases,
        step_lemma6,
    ];
    let reports: Vec<StepReport> = steps.par_iter().map(|f| f(cfg)).collect();
    SuiteReport {
        scope: "verified on instance",
        passed: reports.iter().all(|r| r.verdict == StepVerdict::Pass),
        steps: reports,
    }
}
