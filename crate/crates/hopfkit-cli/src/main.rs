//! Command-line interface: verify structure files against their axiom
//! systems, certify structure theorems into output files, and list or emit
//! the built-in example catalog.
//!
//! Exit codes: 0 on success, 2 when a verification or certification op
//! reports a failing identity, 1 for usage, parse, and I/O errors. Reports
//! go to stdout (JSON by default), human summaries and timings to stderr,
//! so stdout and all written files are byte-deterministic.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hopfkit::braided::BraidedBicomoduleWithV;
use hopfkit::examples::{build_example, catalog};
use hopfkit::format::{AlgebraFile, FieldSpec, ParsedFile, TensorData, FORMAT_VERSION};
use hopfkit::quasi::{structure_theorem_quasi, BicomoduleWithV};
use hopfkit::weak::WeakBicomoduleWithV;
use hopfkit::{Field, HopfError, Report, Splitting};

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of quasi-Hopf, weak Hopf, and braided Hopf structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a structure file and run its kind's verification op.
    Verify {
        /// The structure file to verify.
        path: PathBuf,
        /// Require the file to declare exactly this kind.
        #[arg(long)]
        kind: Option<String>,
        /// Report format on stdout.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Split the coinvariants A out of a bicomodule algebra B and certify
    /// the isomorphism B ≅ A#H, writing A.json, iso.json, report.json.
    StructureTheorem {
        /// The base Hopf structure file H.
        path_h: PathBuf,
        /// The bicomodule-algebra file B; must embed H as its base and
        /// carry a comparison map v.
        path_b: PathBuf,
        /// Which structure theorem to run.
        #[arg(long, value_enum)]
        variant: Variant,
        /// Output directory for A.json, iso.json, report.json.
        #[arg(long)]
        out: PathBuf,
        /// Report format on stdout.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// List or emit the built-in example catalog.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Print the catalog: name, kind, dimension, description.
    List {
        /// Listing format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Build one catalog example and write its file.
    Emit {
        /// Catalog entry name (see `examples list`).
        name: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Base field: `rational` (default) or a prime such as `7`.
        #[arg(long, default_value = "rational")]
        field: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// The report as pretty-printed JSON.
    Json,
    /// One line per identity check.
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    /// Coinvariants of a quasi-Hopf bicomodule algebra.
    Quasi,
    /// Coinvariants of a weak Hopf bicomodule algebra.
    Weak,
    /// Coinvariants of a braided Hopf bicomodule algebra.
    Braided,
}

impl Variant {
    fn h_kind(self) -> &'static str {
        match self {
            Variant::Quasi => "quasi-hopf",
            Variant::Weak => "weak-hopf",
            Variant::Braided => "braided-hopf",
        }
    }

    fn name(self) -> &'static str {
        match self {
            Variant::Quasi => "quasi",
            Variant::Weak => "weak",
            Variant::Braided => "braided",
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify { path, kind, format } => cmd_verify(&path, kind.as_deref(), format),
        Command::StructureTheorem { path_h, path_b, variant, out, format } => {
            cmd_structure_theorem(&path_h, &path_b, variant, &out, format)
        }
        Command::Examples { action } => match action {
            ExamplesAction::List { format } => cmd_examples_list(format),
            ExamplesAction::Emit { name, out, field } => {
                cmd_examples_emit(&name, out.as_deref(), &field)
            }
        },
    }
}

fn load(path: &Path) -> Result<AlgebraFile> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    AlgebraFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit_report(report: &Report, format: OutputFormat, elapsed: Duration) -> Result<()> {
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(report)?),
        OutputFormat::Text => {
            for check in &report.checks {
                if check.passed {
                    println!("pass  {}", check.id);
                } else if let Some(w) = &check.witness {
                    println!("FAIL  {}  (witness at {:?})", check.id, w.tuple);
                } else {
                    println!("FAIL  {}", check.id);
                }
            }
            println!(
                "{}: {}",
                report.op,
                if report.overall { "all identities hold" } else { "FAILED" }
            );
        }
    }
    let failed = report.failed_ids();
    if failed.is_empty() {
        eprintln!(
            "{}: {} identities hold ({} ms)",
            report.op,
            report.checks.len(),
            elapsed.as_millis()
        );
    } else {
        eprintln!(
            "{}: {} of {} identities failed: {} ({} ms)",
            report.op,
            failed.len(),
            report.checks.len(),
            failed.join(", "),
            elapsed.as_millis()
        );
    }
    Ok(())
}

fn cmd_verify(path: &Path, kind: Option<&str>, format: OutputFormat) -> Result<i32> {
    let file = load(path)?;
    if let Some(kind) = kind {
        if file.kind != kind {
            bail!("{} has kind {:?}, expected {kind:?}", path.display(), file.kind);
        }
    }
    let start = Instant::now();
    let report = file.verify()?;
    emit_report(&report, format, start.elapsed())?;
    Ok(if report.overall { 0 } else { 2 })
}

/// The isomorphism bundle written to iso.json: the comparison isomorphism
/// Ψ: A#H → B with its inverse, the coinvariants idempotent E on B, and
/// its splitting E = i∘p with p∘i = id.
#[derive(serde::Serialize)]
struct IsoFile {
    format_version: u32,
    variant: &'static str,
    field: FieldSpec,
    dim_b: usize,
    dim_smash: usize,
    smash_labels: Vec<String>,
    coinvariant_rank: usize,
    /// Ψ, inputs-first `[dim_smash][dim_b]`.
    psi: TensorData,
    /// Ψ⁻¹, inputs-first `[dim_b][dim_smash]`.
    psi_inv: TensorData,
    /// E: B → B, `[dim_b][dim_b]`.
    e: TensorData,
    /// i: A → B, `[rank][dim_b]`.
    i: TensorData,
    /// p: B → A, `[dim_b][rank]`.
    p: TensorData,
}

impl IsoFile {
    #[allow(clippy::too_many_arguments)]
    fn new(
        variant: Variant,
        field: Field,
        dim_b: usize,
        smash_labels: Vec<String>,
        psi: &hopfkit::LinearMap,
        psi_inv: &hopfkit::LinearMap,
        e: &hopfkit::LinearMap,
        splitting: &Splitting,
    ) -> Result<IsoFile> {
        let ds = smash_labels.len();
        let rank = splitting.rank;
        Ok(IsoFile {
            format_version: FORMAT_VERSION,
            variant: variant.name(),
            field: FieldSpec::of(field),
            dim_b,
            dim_smash: ds,
            smash_labels,
            coinvariant_rank: rank,
            psi: TensorData::from_map(psi, &[ds], &[dim_b])?,
            psi_inv: TensorData::from_map(psi_inv, &[dim_b], &[ds])?,
            e: TensorData::from_map(e, &[dim_b], &[dim_b])?,
            i: TensorData::from_map(&splitting.i, &[rank], &[dim_b])?,
            p: TensorData::from_map(&splitting.p, &[dim_b], &[rank])?,
        })
    }
}

enum Outcome {
    Done { a_file: Box<AlgebraFile>, iso: Box<IsoFile>, report: Report },
    Failed(Report),
}

fn certification_outcome<T>(
    result: hopfkit::Result<T>,
    done: impl FnOnce(T) -> Result<Outcome>,
) -> Result<Outcome> {
    match result {
        Ok(st) => done(st),
        Err(HopfError::Precondition { report, .. })
        | Err(HopfError::Certification { report, .. }) => Ok(Outcome::Failed(*report)),
        Err(e) => Err(e.into()),
    }
}

fn run_variant(variant: Variant, h_file: &AlgebraFile, b_file: &AlgebraFile) -> Result<Outcome> {
    match variant {
        Variant::Quasi => {
            let h = h_file.parse_quasi()?;
            let ParsedFile::QuasiBicomodule(_, b, v) = b_file.parse_any()? else {
                bail!("the B file is not a bicomodule algebra over a quasi-Hopf base");
            };
            let v = v.expect("presence of v checked before dispatch");
            let dim_b = b.alg.dim;
            certification_outcome(structure_theorem_quasi(&h, &BicomoduleWithV { b, v }), |st| {
                let a_file = AlgebraFile::from_quasi_yd_algebra(&h, &st.a)?;
                let iso = IsoFile::new(
                    variant,
                    h.field(),
                    dim_b,
                    st.smash.b.alg.labels.clone(),
                    &st.psi,
                    &st.psi_inv,
                    &st.e,
                    &st.splitting,
                )?;
                Ok(Outcome::Done { a_file: Box::new(a_file), iso: Box::new(iso), report: st.report })
            })
        }
        Variant::Weak => {
            let h = h_file.parse_weak()?;
            let ParsedFile::WeakBicomodule(_, b, v) = b_file.parse_any()? else {
                bail!("the B file is not a bicomodule algebra over a weak Hopf base");
            };
            let v = v.expect("presence of v checked before dispatch");
            let input = WeakBicomoduleWithV {
                alg: b.alg,
                rho: b.rho.expect("bicomodule files carry rho"),
                lambda: b.lambda.expect("bicomodule files carry lambda"),
                v,
            };
            let dim_b = input.alg.dim;
            certification_outcome(hopfkit::weak::structure_theorem_weak(&h, &input), |st| {
                let a_file = AlgebraFile::from_weak_yd_algebra(&h, &st.a)?;
                let iso = IsoFile::new(
                    variant,
                    h.field(),
                    dim_b,
                    st.smash.alg.labels.clone(),
                    &st.phi,
                    &st.phi_inv,
                    &st.e,
                    &st.splitting,
                )?;
                Ok(Outcome::Done { a_file: Box::new(a_file), iso: Box::new(iso), report: st.report })
            })
        }
        Variant::Braided => {
            let (ctx, h) = h_file.parse_braided()?;
            let ParsedFile::BraidedBicomodule(_, _, b, v) = b_file.parse_any()? else {
                bail!("the B file is not a bicomodule algebra over a braided Hopf base");
            };
            let v = v.expect("presence of v checked before dispatch");
            let input = BraidedBicomoduleWithV {
                obj: b.obj,
                alg: b.alg,
                rho: b.rho.expect("bicomodule files carry rho"),
                lambda: b.lambda.expect("bicomodule files carry lambda"),
                v,
            };
            let dim_b = input.alg.dim;
            certification_outcome(
                hopfkit::braided::structure_theorem_braided(&ctx, &h, &input),
                |st| {
                    let a_file = AlgebraFile::from_braided_yd_algebra(&ctx, &h, &st.a)?;
                    let iso = IsoFile::new(
                        variant,
                        h.field(),
                        dim_b,
                        st.smash.labels.clone(),
                        &st.omega,
                        &st.omega_inv,
                        &st.e,
                        &st.splitting,
                    )?;
                    Ok(Outcome::Done { a_file: Box::new(a_file), iso: Box::new(iso), report: st.report })
                },
            )
        }
    }
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    fs::write(path, s).with_context(|| format!("writing {}", path.display()))
}

fn cmd_structure_theorem(
    path_h: &Path,
    path_b: &Path,
    variant: Variant,
    out: &Path,
    format: OutputFormat,
) -> Result<i32> {
    let h_file = load(path_h)?;
    let b_file = load(path_b)?;
    if h_file.kind != variant.h_kind() {
        bail!(
            "{} has kind {:?}; variant {} needs {:?}",
            path_h.display(),
            h_file.kind,
            variant.name(),
            variant.h_kind()
        );
    }
    if b_file.kind != "bicomodule-algebra" {
        bail!("{} has kind {:?}, expected \"bicomodule-algebra\"", path_b.display(), b_file.kind);
    }
    let base = b_file
        .base
        .as_deref()
        .ok_or_else(|| anyhow!("{} embeds no base Hopf structure", path_b.display()))?;
    if *base != h_file {
        bail!(
            "the base embedded in {} differs from {}",
            path_b.display(),
            path_h.display()
        );
    }
    if b_file.tensors.v.is_none() {
        bail!(
            "{} carries no comparison map v; the structure theorem needs one",
            path_b.display()
        );
    }
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let start = Instant::now();
    let h_report = h_file.verify()?;
    if !h_report.overall {
        write_json(&out.join("report.json"), &h_report)?;
        emit_report(&h_report, format, start.elapsed())?;
        return Ok(2);
    }
    match run_variant(variant, &h_file, &b_file)? {
        Outcome::Done { a_file, iso, report } => {
            fs::write(out.join("A.json"), a_file.to_json())
                .with_context(|| format!("writing {}", out.join("A.json").display()))?;
            write_json(&out.join("iso.json"), &iso)?;
            write_json(&out.join("report.json"), &report)?;
            emit_report(&report, format, start.elapsed())?;
            eprintln!(
                "coinvariants have dimension {}; wrote A.json, iso.json, report.json to {}",
                iso.coinvariant_rank,
                out.display()
            );
            Ok(0)
        }
        Outcome::Failed(report) => {
            write_json(&out.join("report.json"), &report)?;
            emit_report(&report, format, start.elapsed())?;
            eprintln!("certification failed; wrote report.json to {}", out.display());
            Ok(2)
        }
    }
}

fn cmd_examples_list(format: OutputFormat) -> Result<i32> {
    let entries = catalog();
    match format {
        OutputFormat::Text => {
            for e in &entries {
                println!("{:<24} {:<20} {:>3}  {}", e.name, e.kind, e.dim, e.description);
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                name: &'a str,
                kind: &'a str,
                dim: usize,
                description: &'a str,
            }
            let rows: Vec<Row> = entries
                .iter()
                .map(|e| Row { name: e.name, kind: e.kind, dim: e.dim, description: e.description })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
    }
    Ok(0)
}

fn parse_field(s: &str) -> Result<Field> {
    match s {
        "rational" | "q" | "Q" => Ok(Field::Rational),
        other => {
            let p = other
                .strip_prefix("prime:")
                .unwrap_or(other)
                .parse::<u64>()
                .map_err(|_| anyhow!("field must be \"rational\" or a prime, got {other:?}"))?;
            Ok(Field::prime(p)?)
        }
    }
}

fn cmd_examples_emit(name: &str, out: Option<&Path>, field: &str) -> Result<i32> {
    let field = parse_field(field)?;
    let file = build_example(name, field)?;
    let json = file.to_json();
    match out {
        Some(path) => {
            fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {} ({}, dimension {})", path.display(), file.kind, file.dim);
        }
        None => print!("{json}"),
    }
    Ok(0)
}
