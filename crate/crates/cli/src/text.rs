//! Human-readable renderings of the reports.

use std::fmt::Write;

use tilecheck::belts::{Belt, VmFailure, VmVerdict};
use tilecheck::exact::{format_rat, Rat};
use tilecheck::harness::{Lemma6Report, SegmentCheck, StepVerdict, SuiteReport, WheelParams};
use tilecheck::lattice::DVCell;
use tilecheck::planar::WheelTable;
use tilecheck::polytope::{Location, Polytope3};
use tilecheck::tiling::MultiplicityReport;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sizes(s: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let j = s[i..].iter().take_while(|&&x| x == s[i]).count();
        parts.push(format!("{}x{}", j, s[i]));
        i += j;
    }
    parts.join(" ")
}

pub fn vm_failure(w: &VmFailure) -> String {
    match w {
        VmFailure::NotCentrallySymmetric { vertex } => {
            format!("not centrally symmetric (vertex {vertex} has no mirror image)")
        }
        VmFailure::FacetNotCentrallySymmetric { facet, size } => {
            format!("facet {facet} ({size} vertices) is not centrally symmetric")
        }
        VmFailure::BeltLength { length, direction, .. } => {
            format!("belt of {length} facets along {direction}")
        }
    }
}

fn vm(v: &VmVerdict) -> String {
    match v {
        VmVerdict::Pass => "pass".into(),
        VmVerdict::Fail { witness } => format!("fail: {}", vm_failure(witness)),
    }
}

pub fn analysis(p: &Polytope3, belts: Option<&[Belt]>, v: &VmVerdict) -> String {
    let mut s = String::new();
    let (count, sz) = p.facet_signature();
    writeln!(s, "vertices {}, edges {}, facets {} ({})", p.vertices().len(), p.edges().len(), count, sizes(&sz)).unwrap();
    writeln!(
        s,
        "centrally symmetric: {}; facets centrally symmetric: {}",
        yes(p.is_centrally_symmetric()),
        yes(p.facets_centrally_symmetric())
    )
    .unwrap();
    if let Some(bs) = belts {
        writeln!(s, "belts:").unwrap();
        for b in bs {
            writeln!(s, "  along {}: {} facets", b.direction, b.len()).unwrap();
        }
    }
    writeln!(s, "belt criterion: {}", vm(v)).unwrap();
    s
}

pub fn dv_cell(d: &DVCell, volume: &Rat, abs_det: &Rat, label: &str) -> String {
    let mut s = String::new();
    let (count, sz) = d.cell.facet_signature();
    writeln!(s, "cell: {} vertices, {} facets ({})", d.cell.vertices().len(), count, sizes(&sz)).unwrap();
    writeln!(s, "volume {} (|det| {})", format_rat(volume), format_rat(abs_det)).unwrap();
    writeln!(s, "classification: {label}").unwrap();
    writeln!(s, "relevant vectors ({}):", d.relevant_vectors.len()).unwrap();
    for v in &d.relevant_vectors {
        writeln!(s, "  {v}").unwrap();
    }
    s
}

pub fn multiplicity<const N: usize>(r: &MultiplicityReport<N>) -> String {
    let mut s = String::new();
    writeln!(s, "claimed k = {}", r.claimed_k).unwrap();
    writeln!(
        s,
        "volume check: {} (k |det| = {}, translates x volume = {})",
        if r.volume_check.passed { "pass" } else { "fail" },
        format_rat(&r.volume_check.lhs),
        format_rat(&r.volume_check.rhs)
    )
    .unwrap();
    writeln!(
        s,
        "samples: {} at resolution {}, {} on some boundary",
        r.samples_tested,
        r.resolution,
        r.boundary_samples.len()
    )
    .unwrap();
    writeln!(s, "violations: {}", r.violations.len()).unwrap();
    for v in r.violations.iter().take(5) {
        writeln!(s, "  at {}: interior {}, closure {}", v.point, v.interior, v.closure).unwrap();
    }
    writeln!(s, "verdict: {}", r.verdict).unwrap();
    s
}

pub fn wheel_table(t: &WheelTable) -> String {
    let mut s = String::new();
    writeln!(s, "m = {}, k = {}", t.m, t.k).unwrap();
    writeln!(s, "{:<16} {:>6} {:>6} {:>4} {:>6}  {:<10} {:<7} k = phi + varpi", "vertex", "varpi", "varphi", "ell", "kappa", "windings", "wheels").unwrap();
    for r in &t.rows {
        let w: Vec<String> = r.windings.iter().map(ToString::to_string).collect();
        writeln!(
            s,
            "{:<16} {:>6} {:>6} {:>4} {:>6}  {:<10} {:<7} {}",
            r.vertex.to_string(),
            format_rat(&r.varpi),
            r.varphi,
            r.ell,
            format_rat(&r.kappa),
            w.join(","),
            yes(r.lemma5_consistent),
            yes(r.identity_holds)
        )
        .unwrap();
    }
    writeln!(s, "all consistent: {}", yes(t.all_consistent)).unwrap();
    s
}

fn location(l: Location) -> &'static str {
    match l {
        Location::Interior => "interior",
        Location::Boundary => "boundary",
        Location::Outside => "outside",
    }
}

fn segment(c: &SegmentCheck) -> String {
    format!(
        "i = {}: step {}, endpoints {}/{}, midpoint {} -> {}",
        c.index,
        c.step,
        location(c.start_location),
        location(c.end_location),
        location(c.midpoint_location),
        if c.interior { "interior" } else { "NOT interior" }
    )
}

pub fn lemma6(r: &Lemma6Report) -> String {
    let mut s = String::new();
    writeln!(s, "edge {} along {}: belt of {} facets, m = {}", r.edge, r.belt.direction, r.belt.len(), r.m).unwrap();
    if r.vacuous {
        writeln!(s, "index range 1 < i < m-1 is empty: vacuous").unwrap();
    }
    for c in &r.checked {
        writeln!(s, "  {}", segment(c)).unwrap();
    }
    if let Some(c) = &r.boundary_index {
        writeln!(s, "boundary index (reported separately):").unwrap();
        writeln!(s, "  {}", segment(c)).unwrap();
    }
    writeln!(s, "verdict: {}", if r.passed { "pass" } else { "fail" }).unwrap();
    s
}

pub fn params(tables: &[WheelParams]) -> String {
    let mut s = String::new();
    for t in tables {
        write!(s, "m = {}, k = {} (kappa <= {}, ell <= {}", t.m, t.k, t.max_kappa, t.max_ell).unwrap();
        writeln!(s, "{}):", if t.complete { "" } else { ", bounds incomplete" }).unwrap();
        if t.feasible.is_empty() {
            writeln!(s, "  none").unwrap();
        }
        for p in &t.feasible {
            writeln!(s, "  kappa {} ell {} varpi {} varphi {}", p.kappa, p.ell, format_rat(&p.varpi), p.varphi).unwrap();
        }
    }
    s
}

pub fn suite(r: &SuiteReport) -> String {
    let mut s = String::new();
    for step in &r.steps {
        let v = match step.verdict {
            StepVerdict::Pass => "pass",
            StepVerdict::Fail => "FAIL",
        };
        writeln!(s, "({}) {v}  {}", step.step, step.title).unwrap();
        if let Some(w) = &step.witness {
            writeln!(s, "    witness: {w}").unwrap();
        }
    }
    writeln!(s, "suite: {} ({})", if r.passed { "pass" } else { "FAIL" }, r.scope).unwrap();
    s
}
