//! Command-line surface over the one-skeleton library: building the named
//! skeleta, validating axioms, Betti numbers, graded cohomology, Thom
//! classes, surgeries, reductions, Kirwan maps, Schubert tables and
//! polytope deformations. Everything is file-in/file-out with canonical
//! JSON, deterministic for fixed inputs, options and seed.
//!
//! Exit codes: 0 on success, 1 on a domain error (one machine-parsable
//! line `error: <code> <witness>`), 2 on malformed input.

pub mod format;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gkm::blowup::{blow_up, Weights};
use gkm::builders;
use gkm::cohomology::{
    basis, class_check, decompose, deformation_space, dimension_formula, ThomBasis,
};
use gkm::covector::Covector;
use gkm::holonomy::holonomy_generators;
use gkm::polarize::{betti, check_noncyclic, is_polarizing, sample_polarizing, Polarization};
use gkm::rational::{format_rational, parse_rational, Rational};
use gkm::reduction::{cut, kirwan, kirwan_kernel_dim, reduce, CutSide};
use gkm::schubert::{double_schubert_table, schubert_class, table_key};
use gkm::skeleton::{OneSkeleton, SubSkeleton};

use format::{
    class_from_file, class_to_file, polytope_from_file, polytope_to_file, read_json,
    skeleton_from_file, skeleton_to_file, write_json, BlowUpSidecar, ClassFile, PolytopeFile,
    ProvenanceSidecar, SkeletonFile,
};

/// A domain error: exits with code 1 and one parsable line.
#[derive(Debug)]
pub struct DomainError {
    pub code: &'static str,
    pub detail: String,
}

impl std::fmt::Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error: {} {}", self.code, self.detail)
    }
}

impl std::error::Error for DomainError {}

fn domain(code: &'static str, detail: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(DomainError {
        code,
        detail: detail.to_string(),
    })
}

/// A malformed-input error: exits with code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error: malformed-input {}", self.0)
    }
}

impl std::error::Error for InputError {}

fn bad_input(detail: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(InputError(detail.to_string()))
}

#[derive(Parser)]
#[command(
    name = "gkm",
    about = "Exact computations on abstract one-skeleta (GKM graphs)",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a named skeleton and write it as a skeleton file.
    Build(BuildArgs),
    /// Axiom report, independence level, GKM flag and non-cyclicity.
    Validate {
        file: PathBuf,
        /// Polarizing vector for the non-cyclic checks (comma-separated
        /// rationals); sampled from the seed when omitted.
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Betti numbers, with an invariance verdict over sampled polarizations.
    Betti {
        file: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of the degree-m piece, against the Betti-weighted formula.
    Cohomology {
        file: PathBuf,
        #[arg(short = 'm', long)]
        degree: u32,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the computed basis to this file.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// All Thom classes of a polarization.
    Thom {
        file: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Free-module coefficients of a class over the Thom basis.
    Decompose {
        file: PathBuf,
        class: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Blow up along a totally geodesic center (vertex names).
    Blowup {
        file: PathBuf,
        /// Comma-separated vertex names of the center.
        #[arg(long)]
        center: String,
        /// Constant positive weight on the normal edges.
        #[arg(long, default_value = "1")]
        weights: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Reduce at a regular level c.
    Reduce {
        file: PathBuf,
        #[arg(short = 'c', long)]
        level: String,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Cut at a regular level, keeping one side.
    Cut {
        file: PathBuf,
        #[arg(short = 'c', long)]
        level: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Kirwan image of a class, with kernel and surjectivity checks.
    Kirwan {
        file: PathBuf,
        class: PathBuf,
        #[arg(short = 'c', long)]
        level: String,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Schubert classes of a Johnson graph, optionally the full table.
    Schubert {
        /// Johnson graph parameters as `n,k`.
        #[arg(long)]
        johnson: String,
        #[arg(long)]
        table: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Deformation space of an edge-reflecting polytope.
    Deform {
        polytope: PathBuf,
        /// Index of the basis direction to move along.
        #[arg(long)]
        direction: Option<usize>,
        /// Step, a rational inside the safe range.
        #[arg(long)]
        t: Option<String>,
        /// Write the degree-1 basis here.
        #[arg(long)]
        basis_out: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct BuildArgs {
    #[command(subcommand)]
    pub what: BuildWhat,
}

#[derive(Subcommand)]
pub enum BuildWhat {
    /// Complete skeleton from semicolon-separated generating covectors.
    Complete {
        /// Example: `0,0;1,0;0,1`
        #[arg(long)]
        taus: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Johnson graph J(n,k).
    Johnson {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'k', long)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Direct product of two skeleton files.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Skeleton of an edge-reflecting polytope file.
    Polytope {
        polytope: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Le,
    Ge,
}

pub fn parse_xi(text: &str) -> anyhow::Result<Covector> {
    let coords: Result<Vec<Rational>, _> = text.split(',').map(parse_rational).collect();
    Ok(Covector::new(coords.map_err(bad_input)?))
}

fn parse_taus(text: &str) -> anyhow::Result<Vec<Covector>> {
    text.split(';').map(parse_xi).collect()
}

fn load_skeleton(path: &Path) -> anyhow::Result<OneSkeleton> {
    let file: SkeletonFile = read_json(path).map_err(bad_input)?;
    skeleton_from_file(&file).map_err(bad_input)
}

fn choose_xi(skel: &OneSkeleton, xi: &Option<String>, seed: u64) -> anyhow::Result<Covector> {
    match xi {
        Some(text) => {
            let v = parse_xi(text)?;
            if v.dim() != skel.dim() {
                return Err(bad_input("xi has the wrong dimension"));
            }
            if !is_polarizing(skel, &v) {
                return Err(domain("NotPolarizing", "xi annihilates an axial value"));
            }
            Ok(v)
        }
        None => Ok(sample_polarizing(skel, seed)),
    }
}

fn write_skeleton(path: &Path, skel: &OneSkeleton) -> anyhow::Result<()> {
    write_json(path, &skeleton_to_file(skel))
}

fn sidecar_path(out: &Path, suffix: &str) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(suffix);
    out.with_file_name(name)
}

fn betti_line(b: &[usize]) -> String {
    let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn closure_cap() -> u64 {
    std::env::var("GKM_MAX_CLOSURE")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

pub fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Build(args) => run_build(args),
        Command::Validate { file, xi, seed } => run_validate(&file, &xi, seed),
        Command::Betti {
            file,
            xi,
            samples,
            seed,
        } => run_betti(&file, &xi, samples, seed),
        Command::Cohomology {
            file,
            degree,
            xi,
            seed,
            basis: basis_out,
        } => run_cohomology(&file, degree, &xi, seed, basis_out.as_deref()),
        Command::Thom {
            file,
            xi,
            seed,
            out,
        } => run_thom(&file, &xi, seed, out.as_deref()),
        Command::Decompose {
            file,
            class,
            xi,
            seed,
        } => run_decompose(&file, &class, &xi, seed),
        Command::Blowup {
            file,
            center,
            weights,
            out,
        } => run_blowup(&file, &center, &weights, &out),
        Command::Reduce {
            file,
            level,
            xi,
            seed,
            out,
        } => run_reduce(&file, &level, &xi, seed, &out),
        Command::Cut {
            file,
            level,
            side,
            xi,
            seed,
            out,
        } => run_cut(&file, &level, side, &xi, seed, &out),
        Command::Kirwan {
            file,
            class,
            level,
            xi,
            seed,
            out,
        } => run_kirwan(&file, &class, &level, &xi, seed, out.as_deref()),
        Command::Schubert {
            johnson,
            table,
            out,
        } => run_schubert(&johnson, table, out.as_deref()),
        Command::Deform {
            polytope,
            direction,
            t,
            basis_out,
            out,
        } => run_deform(
            &polytope,
            direction,
            &t,
            basis_out.as_deref(),
            out.as_deref(),
        ),
    }
}

fn run_build(args: BuildArgs) -> anyhow::Result<()> {
    match args.what {
        BuildWhat::Complete { taus, out } => {
            let taus = parse_taus(&taus)?;
            let skel = builders::complete(&taus).map_err(|e| domain("BuildError", e))?;
            write_skeleton(&out, &skel)?;
            println!(
                "wrote complete skeleton: {} vertices, valence {}",
                skel.vertex_count(),
                skel.valence()
            );
        }
        BuildWhat::Johnson { n, k, out } => {
            let j = builders::johnson(n, k).map_err(|e| domain("BadParameters", e))?;
            write_skeleton(&out, &j.skeleton)?;
            println!(
                "wrote J({},{}) skeleton: {} vertices, valence {}",
                n,
                k,
                j.skeleton.vertex_count(),
                j.skeleton.valence()
            );
        }
        BuildWhat::Product { a, b, out } => {
            let sa = load_skeleton(&a)?;
            let sb = load_skeleton(&b)?;
            let p = builders::product(&sa, &sb);
            write_skeleton(&out, &p)?;
            println!(
                "wrote product skeleton: {} vertices, valence {}",
                p.vertex_count(),
                p.valence()
            );
        }
        BuildWhat::Polytope { polytope, out } => {
            let pf: PolytopeFile = read_json(&polytope).map_err(bad_input)?;
            let p = polytope_from_file(&pf).map_err(bad_input)?;
            let skel =
                gkm::builders::polytope_skeleton(&p).map_err(|e| domain("NotEdgeReflecting", e))?;
            write_skeleton(&out, &skel)?;
            println!(
                "wrote polytope skeleton: {} vertices, valence {}",
                skel.vertex_count(),
                skel.valence()
            );
        }
    }
    Ok(())
}

fn run_validate(file: &Path, xi: &Option<String>, seed: u64) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let report = skel.validate();
    let fmt_status = |ok: bool, detail: String| -> String {
        if ok {
            "ok".to_string()
        } else {
            format!("FAIL ({})", detail)
        }
    };
    println!(
        "A1: {}",
        fmt_status(
            report.a1.is_empty(),
            report
                .a1
                .first()
                .map(|v| format!(
                    "{} violations; first at vertex {} edges {:?}",
                    report.a1.len(),
                    skel.name(v.vertex),
                    v.edges
                ))
                .unwrap_or_default()
        )
    );
    println!(
        "A2: {}",
        fmt_status(
            report.a2.is_empty(),
            report
                .a2
                .first()
                .map(|v| format!("{} violations; first at edge {}", report.a2.len(), v.edge))
                .unwrap_or_default()
        )
    );
    println!(
        "A3: {}",
        fmt_status(
            report.a3.is_empty(),
            report
                .a3
                .first()
                .map(|v| format!(
                    "{} violations; first at edge {} slot {}",
                    report.a3.len(),
                    v.edge,
                    v.edge_at_src
                ))
                .unwrap_or_default()
        )
    );
    let level = skel.independence_level();
    println!(
        "3-independence: {} (level {})",
        if level >= 3 { "ok" } else { "FAIL" },
        level
    );
    let (gkm_ok, gkm_report) = skel.is_gkm();
    println!("GKM: {}", gkm_ok);
    if !gkm_ok {
        if !gkm_report.non_unit_multiplicity.is_empty() {
            println!(
                "  non-unit multiplicities at edges {:?}",
                gkm_report.non_unit_multiplicity
            );
        }
        if !gkm_report.non_unit_lambda.is_empty() {
            println!("  non-unit lambda at {:?}", gkm_report.non_unit_lambda);
        }
        if !gkm_report.non_integer_c.is_empty() {
            println!("  non-integer c at {:?}", gkm_report.non_integer_c);
        }
        if !gkm_report.non_lattice_axial.is_empty() {
            println!(
                "  non-lattice axial at edges {:?}",
                gkm_report.non_lattice_axial
            );
        }
    }
    if skel.edge_count() > 0 {
        let xi = choose_xi(&skel, xi, seed)?;
        println!("xi: {}", xi);
        let nc = check_noncyclic(&skel, &xi).map_err(|e| domain("NotPolarizing", e))?;
        match &nc.nca1 {
            Ok(()) => println!("NCA1: ok"),
            Err(cycle) => {
                let names: Vec<&str> = cycle.iter().map(|&v| skel.name(v)).collect();
                println!("NCA1: FAIL (cycle through {})", names.join(" -> "));
            }
        }
        if nc.nca2.is_empty() {
            println!("NCA2: ok");
        } else {
            let w = &nc.nca2[0];
            println!(
                "NCA2: FAIL ({} components; first: plane {} ^ {}, component {:?}, b0 = {})",
                nc.nca2.len(),
                w.plane.0,
                w.plane.1,
                w.component_vertices,
                w.b0
            );
        }
        if skel.is_connected() {
            let hol = holonomy_generators(&skel, None, 0, closure_cap())
                .expect("full holonomy needs no geodesy");
            match hol.order {
                Some(order) => println!(
                    "holonomy at {}: {} generators, order {}",
                    skel.name(0),
                    hol.generators.len(),
                    order
                ),
                None => println!(
                    "holonomy at {}: {} generators, order above cap {}",
                    skel.name(0),
                    hol.generators.len(),
                    closure_cap()
                ),
            }
        }
    }
    Ok(())
}

fn run_betti(
    file: &Path,
    xi: &Option<String>,
    samples: Option<u64>,
    seed: u64,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    match samples {
        None => {
            let xi = choose_xi(&skel, xi, seed)?;
            let b = betti(&skel, &xi).map_err(|e| domain("NotPolarizing", e))?;
            println!("betti: {}", betti_line(&b));
        }
        Some(count) => {
            let reference = betti(&skel, &sample_polarizing(&skel, seed))
                .map_err(|e| domain("NotPolarizing", e))?;
            for s in 1..count {
                let xi = sample_polarizing(&skel, seed + s);
                let b = betti(&skel, &xi).map_err(|e| domain("NotPolarizing", e))?;
                if b != reference {
                    return Err(domain(
                        "BettiVariance",
                        format!("seed {} gave {}", seed + s, betti_line(&b)),
                    ));
                }
            }
            println!(
                "{} invariant over {} polarizations",
                betti_line(&reference),
                count
            );
        }
    }
    Ok(())
}

fn run_cohomology(
    file: &Path,
    degree: u32,
    xi: &Option<String>,
    seed: u64,
    basis_out: Option<&Path>,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let xi = choose_xi(&skel, xi, seed)?;
    let b = basis(&skel, degree);
    let formula = dimension_formula(&skel, &xi, degree).map_err(|e| domain("NotPolarizing", e))?;
    let verdict = if b.len() as u64 == formula {
        "MATCH"
    } else {
        "MISMATCH"
    };
    println!("dim={} formula={} {}", b.len(), formula, verdict);
    if let Some(path) = basis_out {
        let files: Vec<ClassFile> = b.iter().map(class_to_file).collect();
        write_json(path, &files)?;
        println!("wrote basis to {}", path.display());
    }
    Ok(())
}

fn run_thom(file: &Path, xi: &Option<String>, seed: u64, out: Option<&Path>) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let xi = choose_xi(&skel, xi, seed)?;
    let pol = Polarization::build(&skel, xi).map_err(|e| domain("CyclicOrientation", e))?;
    let thom = ThomBasis::build(&skel, &pol).map_err(|e| domain("HypothesesViolated", e))?;
    let map: BTreeMap<String, ClassFile> = thom
        .classes
        .iter()
        .enumerate()
        .map(|(v, c)| (v.to_string(), class_to_file(c)))
        .collect();
    match out {
        Some(path) => {
            write_json(path, &map)?;
            println!(
                "wrote {} thom classes to {}",
                thom.classes.len(),
                path.display()
            );
        }
        None => println!("{}", serde_json::to_string_pretty(&map)?),
    }
    Ok(())
}

fn run_decompose(
    file: &Path,
    class_path: &Path,
    xi: &Option<String>,
    seed: u64,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let cf: ClassFile = read_json(class_path).map_err(bad_input)?;
    let class = class_from_file(&skel, &cf).map_err(bad_input)?;
    if !class_check(&skel, &class) {
        return Err(domain("NotAClass", "input violates edge compatibility"));
    }
    let xi = choose_xi(&skel, xi, seed)?;
    let pol = Polarization::build(&skel, xi).map_err(|e| domain("CyclicOrientation", e))?;
    let thom = ThomBasis::build(&skel, &pol).map_err(|e| domain("HypothesesViolated", e))?;
    let coeffs = decompose(&skel, &thom, &class).map_err(|e| domain("DecompositionFailure", e))?;
    for (v, h) in coeffs.iter().enumerate() {
        if !h.is_zero() {
            println!("h[{}] = {}", skel.name(v), h);
        }
    }
    Ok(())
}

fn run_blowup(file: &Path, center: &str, weights: &str, out: &Path) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let vertices: Result<Vec<usize>, anyhow::Error> = center
        .split(',')
        .map(|name| {
            skel.vertex_by_name(name.trim())
                .ok_or_else(|| bad_input(format!("unknown vertex name {}", name)))
        })
        .collect();
    let sub = SubSkeleton::induced(&skel, &vertices?);
    let w = parse_rational(weights).map_err(bad_input)?;
    let b = blow_up(&skel, &sub, &Weights::Constant(w)).map_err(|e| domain("BlowUpError", e))?;
    write_skeleton(out, &b.result)?;
    let sidecar = BlowUpSidecar {
        beta: b
            .beta
            .iter()
            .enumerate()
            .map(|(v, &s)| (v.to_string(), s))
            .collect(),
        thom: class_to_file(&b.thom),
    };
    let meta = sidecar_path(out, ".meta.json");
    write_json(&meta, &sidecar)?;
    println!(
        "wrote blow-up ({} vertices) to {} and sidecar to {}",
        b.result.vertex_count(),
        out.display(),
        meta.display()
    );
    Ok(())
}

fn polarization_for(
    skel: &OneSkeleton,
    xi: &Option<String>,
    seed: u64,
) -> anyhow::Result<Polarization> {
    let xi = choose_xi(skel, xi, seed)?;
    Polarization::build(skel, xi).map_err(|e| domain("CyclicOrientation", e))
}

fn run_reduce(
    file: &Path,
    level: &str,
    xi: &Option<String>,
    seed: u64,
    out: &Path,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let c = parse_rational(level).map_err(bad_input)?;
    let pol = polarization_for(&skel, xi, seed)?;
    let red = reduce(&skel, &pol, &c).map_err(|e| domain("ReduceError", e))?;
    write_skeleton(out, &red.skeleton)?;
    let sidecar: ProvenanceSidecar = red
        .provenance
        .iter()
        .enumerate()
        .map(|(v, &(lo, up))| (v.to_string(), (lo, up)))
        .collect();
    let prov = sidecar_path(out, ".prov.json");
    write_json(&prov, &sidecar)?;
    println!(
        "wrote reduction at {} ({} vertices, valence {}) to {} and provenance to {}",
        format_rational(&c),
        red.skeleton.vertex_count(),
        red.skeleton.valence(),
        out.display(),
        prov.display()
    );
    Ok(())
}

fn run_cut(
    file: &Path,
    level: &str,
    side: SideArg,
    xi: &Option<String>,
    seed: u64,
    out: &Path,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let c = parse_rational(level).map_err(bad_input)?;
    let pol = polarization_for(&skel, xi, seed)?;
    let side = match side {
        SideArg::Le => CutSide::Below,
        SideArg::Ge => CutSide::Above,
    };
    let result = cut(&skel, &pol, &c, side).map_err(|e| domain("ReduceError", e))?;
    write_skeleton(out, &result.reduced.skeleton)?;
    let sidecar: ProvenanceSidecar = result
        .reduced
        .provenance
        .iter()
        .enumerate()
        .map(|(v, &(lo, up))| (v.to_string(), (lo, up)))
        .collect();
    let prov = sidecar_path(out, ".prov.json");
    write_json(&prov, &sidecar)?;
    println!(
        "wrote cut at {} ({} interior + {} boundary vertices) to {}",
        format_rational(&c),
        result.interior.len(),
        result.boundary.len(),
        out.display()
    );
    Ok(())
}

fn run_kirwan(
    file: &Path,
    class_path: &Path,
    level: &str,
    xi: &Option<String>,
    seed: u64,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let skel = load_skeleton(file)?;
    let cf: ClassFile = read_json(class_path).map_err(bad_input)?;
    let class = class_from_file(&skel, &cf).map_err(bad_input)?;
    if !class_check(&skel, &class) {
        return Err(domain("NotAClass", "input violates edge compatibility"));
    }
    let c = parse_rational(level).map_err(bad_input)?;
    let pol = polarization_for(&skel, xi, seed)?;
    let red = reduce(&skel, &pol, &c).map_err(|e| domain("ReduceError", e))?;
    let image = kirwan(&skel, &red, &class).map_err(|e| domain("DegreeMismatch", e))?;
    if let Some(path) = out {
        write_json(path, &class_to_file(&image))?;
        println!("wrote reduced class to {}", path.display());
    }
    let report =
        kirwan_kernel_dim(&skel, &pol, &c, class.degree).map_err(|e| domain("ReduceError", e))?;
    println!(
        "kernel: dim={} formula={} {}",
        report.kernel_dim,
        report.formula,
        if report.kernel_dim as u64 == report.formula {
            "MATCH"
        } else {
            "MISMATCH"
        }
    );
    println!(
        "surjectivity: rank={} target={} {}",
        report.image_rank,
        report.target_dim,
        if report.image_rank == report.target_dim {
            "ONTO"
        } else {
            "NOT ONTO"
        }
    );
    println!(
        "kernel splitting (above + below): {}",
        if report.splitting_ok { "ok" } else { "FAIL" }
    );
    Ok(())
}

fn run_schubert(johnson_arg: &str, table: bool, out: Option<&Path>) -> anyhow::Result<()> {
    let parts: Vec<&str> = johnson_arg.split(',').collect();
    if parts.len() != 2 {
        return Err(bad_input("expected --johnson n,k"));
    }
    let n: usize = parts[0].trim().parse().map_err(bad_input)?;
    let k: usize = parts[1].trim().parse().map_err(bad_input)?;
    let j = builders::johnson(n, k).map_err(|e| domain("BadParameters", e))?;
    if table {
        let entries = double_schubert_table(&j).map_err(|e| domain("NotDivisible", e))?;
        // aligned text table
        let mut width = 0usize;
        for p in 0..j.skeleton.vertex_count() {
            width = width.max(table_key(&j, p).len());
        }
        println!("double Schubert polynomials f[p,q] = tau_p(q):");
        for ((p, q), poly) in &entries {
            println!(
                "  {:>w$} , {:>w$} : {}",
                table_key(&j, *p),
                table_key(&j, *q),
                poly,
                w = width
            );
        }
        if let Some(path) = out {
            let map: BTreeMap<String, Vec<format::TermFile>> = entries
                .iter()
                .map(|((p, q), poly)| {
                    (
                        format!("{} , {}", table_key(&j, *p), table_key(&j, *q)),
                        format::polynomial_to_terms(poly),
                    )
                })
                .collect();
            write_json(path, &map)?;
            println!("wrote table to {}", path.display());
        }
    } else {
        let mut map: BTreeMap<String, ClassFile> = BTreeMap::new();
        for p in 0..j.skeleton.vertex_count() {
            let class = schubert_class(&j, p).map_err(|e| domain("NotDivisible", e))?;
            println!(
                "{}: degree {} class, support {:?}",
                table_key(&j, p),
                class.degree,
                class.support().len()
            );
            map.insert(table_key(&j, p), class_to_file(&class));
        }
        if let Some(path) = out {
            write_json(path, &map)?;
            println!("wrote classes to {}", path.display());
        }
    }
    Ok(())
}

fn run_deform(
    polytope: &Path,
    direction: Option<usize>,
    t: &Option<String>,
    basis_out: Option<&Path>,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let pf: PolytopeFile = read_json(polytope).map_err(bad_input)?;
    let p = polytope_from_file(&pf).map_err(bad_input)?;
    let space = deformation_space(&p).map_err(|e| domain("NotEdgeReflecting", e))?;
    println!("deformation space dimension: {}", space.basis.len());
    if let Some(path) = basis_out {
        let files: Vec<ClassFile> = space.basis.iter().map(class_to_file).collect();
        write_json(path, &files)?;
        println!("wrote basis to {}", path.display());
    }
    if let Some(k) = direction {
        if k >= space.basis.len() {
            return Err(bad_input(format!(
                "direction {} out of range (dimension {})",
                k,
                space.basis.len()
            )));
        }
        let f = &space.basis[k];
        let t0 = space.safe_t_range(f);
        println!(
            "safe t range for direction {}: [0, {})",
            k,
            format_rational(&t0)
        );
        if let Some(step) = t {
            let tv = parse_rational(step).map_err(bad_input)?;
            let moved = space.deform(f, &tv).map_err(|e| domain("DeformError", e))?;
            if let Some(path) = out {
                write_json(path, &polytope_to_file(&moved))?;
                println!("wrote deformed polytope to {}", path.display());
            }
        }
    }
    Ok(())
}

/// Maps errors to the documented exit codes.
pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<InputError>().is_some() {
        2
    } else {
        1
    }
}
