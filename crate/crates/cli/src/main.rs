mod text;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use tilecheck::belts::{all_belts, classify_fedorov, venkov_mcmullen, FedorovType};
use tilecheck::document::{dv_cell_document, parse_document, InputDocument};
use tilecheck::harness::{
    feasible_wheel_params_bounded, lemma6_check, longest_belt_edge, theorem1_suite, CanonicalData, SuiteConfig,
    DEFAULT_MAX_ELL, DEFAULT_MAX_KAPPA, DEFAULT_MAX_M,
};
use tilecheck::lattice::dv_cell_with_radius;
use tilecheck::planar::{verify_k_fold_2d, wheel_table};
use tilecheck::tiling::{verify_k_fold, SampleSpec};
use tilecheck::GeomError;

/// Exact verification of translative tilings, belts and parallelohedra.
#[derive(Parser)]
#[command(name = "tilecheck", version)]
struct Cli {
    /// Emit canonical JSON (sorted keys, compact) instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for sampling and suite steps; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SampleArgs {
    /// Sample grid resolution per axis: N^d points per fundamental cell.
    #[arg(long, default_value_t = SampleSpec::default().resolution)]
    samples: u32,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_KAPPA)]
    max_kappa: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ELL)]
    max_ell: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_M)]
    max_m: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetry checks, belts and the belt criterion for a polytope.
    Analyze { file: PathBuf },
    /// Fedorov type of a polytope.
    Classify { file: PathBuf },
    /// Dirichlet-Voronoi cell of a lattice.
    Dvcell {
        file: PathBuf,
        /// Coefficient box half-width for candidate lattice vectors.
        #[arg(long, default_value_t = tilecheck::lattice::DEFAULT_CANDIDATE_RADIUS)]
        radius: i64,
    },
    /// Sampled k-fold verification of a 3D or planar tiling.
    Multiplicity {
        file: PathBuf,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Per-vertex wheel table of a planar tiling.
    Wheels { file: PathBuf },
    /// Interior check of rint(G_1) + g_i along the belt of an edge.
    Lemma6 {
        file: PathBuf,
        /// Edge index; defaults to the lowest-index edge with the longest belt.
        #[arg(long)]
        edge: Option<usize>,
        /// Also test i = m-1, reported separately.
        #[arg(long)]
        include_boundary_index: bool,
    },
    /// Feasible wheel parameters (kappa, ell, varpi, varphi).
    Params {
        /// Belt half-length; all m in 2..=max-m when omitted.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// End-to-end suite over the canonical instances.
    Theorem1 {
        /// Replacement canonical data file.
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        sample: SampleArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        include_boundary_index: bool,
    },
}

pub struct Output {
    json: Value,
    text: String,
    passed: bool,
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn read(path: &Path) -> Result<String, GeomError> {
    fs::read_to_string(path).map_err(|e| GeomError::Document(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InputDocument, GeomError> {
    parse_document(&read(path)?).map_err(|e| GeomError::Document(format!("{}: {e}", path.display())))
}

fn analyze(doc: &InputDocument) -> Result<Output, GeomError> {
    let p = doc.to_polytope()?;
    let vm = venkov_mcmullen(&p);
    let belts = all_belts(&p).ok();
    let (count, sizes) = p.facet_signature();
    let json = json!({
        "vertices": p.vertices().len(),
        "edges": p.edges().len(),
        "facet_count": count,
        "facet_sizes": sizes,
        "centrally_symmetric": p.is_centrally_symmetric(),
        "facets_centrally_symmetric": p.facets_centrally_symmetric(),
        "volume": tilecheck::exact::format_rat(&p.volume()?),
        "belts": belts.as_ref().map(|bs| bs.iter().map(|b| json!({
            "direction": to_value(&b.direction),
            "length": b.len(),
            "facets": b.facets,
        })).collect::<Vec<_>>()),
        "belt_criterion": to_value(&vm),
    });
    Ok(Output {
        text: text::analysis(&p, belts.as_deref(), &vm),
        json,
        passed: vm.passed(),
    })
}

fn classify(doc: &InputDocument) -> Result<Output, GeomError> {
    let p = doc.to_polytope()?;
    let (json, text, passed) = match classify_fedorov(&p) {
        Ok(FedorovType::NotParallelohedron(w)) => {
            let t = format!("NotParallelohedron: {}\n", text::vm_failure(&w));
            (json!({ "label": "NotParallelohedron", "witness": to_value(&w) }), t, false)
        }
        Ok(t) => (json!({ "label": t.label() }), format!("{}\n", t.label()), true),
        Err(e @ GeomError::Unclassifiable(_)) => {
            (json!({ "label": "Unclassifiable", "reason": e.to_string() }), format!("{e}\n"), false)
        }
        Err(e) => return Err(e),
    };
    Ok(Output { json, text, passed })
}

fn dvcell(doc: &InputDocument, radius: i64) -> Result<Output, GeomError> {
    let l = doc.to_lattice()?;
    let d = dv_cell_with_radius(&l, radius)?;
    let label = classify_fedorov(&d.cell).map(|t| t.label().to_string());
    let mut json = dv_cell_document(&d)?;
    let volume = d.cell.volume()?;
    json["abs_det"] = Value::String(tilecheck::exact::format_rat(&l.abs_det()));
    json["classification"] = match &label {
        Ok(s) => Value::String(s.clone()),
        Err(e) => Value::String(e.to_string()),
    };
    Ok(Output {
        text: text::dv_cell(&d, &volume, &l.abs_det(), label.as_deref().unwrap_or("Unclassifiable")),
        passed: volume == l.abs_det(),
        json,
    })
}

fn multiplicity(doc: &InputDocument, samples: u32) -> Result<Output, GeomError> {
    let spec = SampleSpec { resolution: samples };
    match doc {
        InputDocument::Tiling2d { .. } => {
            let (p, x, k) = doc.to_tiling2d()?;
            let r = verify_k_fold_2d(&p, &x, k, &spec)?;
            Ok(Output {
                text: text::multiplicity(&r),
                json: to_value(&r),
                passed: r.passed(),
            })
        }
        _ => {
            let (p, x, k) = doc.to_tiling3d()?;
            let r = verify_k_fold(&p, &x, k, &spec)?;
            Ok(Output {
                text: text::multiplicity(&r),
                json: to_value(&r),
                passed: r.passed(),
            })
        }
    }
}

fn wheels(doc: &InputDocument) -> Result<Output, GeomError> {
    let (p, x, k) = doc.to_tiling2d()?;
    let t = wheel_table(&p, &x, k)?;
    Ok(Output {
        text: text::wheel_table(&t),
        json: to_value(&t),
        passed: t.all_consistent,
    })
}

fn lemma6(doc: &InputDocument, edge: Option<usize>, include_boundary: bool) -> Result<Output, GeomError> {
    let p = doc.to_polytope()?;
    let edge = match edge {
        Some(e) => e,
        None => longest_belt_edge(&p)?,
    };
    let r = lemma6_check(&p, edge, include_boundary)?;
    Ok(Output {
        text: text::lemma6(&r),
        json: to_value(&r),
        passed: r.passed,
    })
}

fn params(m: Option<u64>, k: u64, b: &BoundArgs) -> Result<Output, GeomError> {
    let ms: Vec<u64> = match m {
        Some(m) => vec![m],
        None => (2..=b.max_m).collect(),
    };
    let tables = ms
        .iter()
        .map(|&m| feasible_wheel_params_bounded(m, k, b.max_kappa, b.max_ell))
        .collect::<Result<Vec<_>, _>>()?;
    let json = match m {
        Some(_) => to_value(&tables[0]),
        None => to_value(&tables),
    };
    Ok(Output {
        text: text::params(&tables),
        json,
        passed: true,
    })
}

fn theorem1(data: Option<&Path>, samples: u32, b: &BoundArgs, include_boundary: bool) -> Result<Output, GeomError> {
    let data = match data {
        Some(path) => CanonicalData::from_json(&read(path)?)
            .map_err(|e| GeomError::Document(format!("{}: {e}", path.display())))?,
        None => CanonicalData::builtin(),
    };
    let cfg = SuiteConfig {
        data,
        samples: SampleSpec { resolution: samples },
        max_kappa: b.max_kappa,
        max_ell: b.max_ell,
        max_m: b.max_m,
        include_boundary_index: include_boundary,
    };
    let r = theorem1_suite(&cfg);
    Ok(Output {
        text: text::suite(&r),
        json: to_value(&r),
        passed: r.passed,
    })
}

fn run(cli: &Cli) -> Result<Output, GeomError> {
    match &cli.command {
        Command::Analyze { file } => analyze(&load(file)?),
        Command::Classify { file } => classify(&load(file)?),
        Command::Dvcell { file, radius } => dvcell(&load(file)?, *radius),
        Command::Multiplicity { file, sample } => multiplicity(&load(file)?, sample.samples),
        Command::Wheels { file } => wheels(&load(file)?),
        Command::Lemma6 {
            file,
            edge,
            include_boundary_index,
        } => lemma6(&load(file)?, *edge, *include_boundary_index),
        Command::Params { m, k, bounds } => params(*m, *k, bounds),
        Command::Theorem1 {
            data,
            sample,
            bounds,
            include_boundary_index,
        } => theorem1(data.as_deref(), sample.samples, bounds, *include_boundary_index),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
