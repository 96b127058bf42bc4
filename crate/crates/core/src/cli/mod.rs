//! Command-line front end. [`run`] is the whole program minus process setup.

pub mod files;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::assoc_algebra::AssocAlgebra;
use crate::current::{current_algebra, known_levi_factor, TableMode};
use crate::exact_linalg::{format_rational, EndoSubspace, Subspace};
use crate::heisenberg::truncated_heisenberg;
use crate::lie_algebra::{sp, LieAlgebra};
use crate::Error;

use files::{load, load_assoc, load_lie, matrix_rows, Algebra};
pub use files::{AlgebraFile, CliError, InputDigest, ReportFile};

#[derive(Debug, Parser)]
#[command(
    name = "curlie",
    version,
    about = "Derivations and Levi decompositions of current Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the truncated current Heisenberg algebra h_m ⊗ C[t]/(t^{k+1})
    Heisenberg {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long)]
        out: Option<String>,
    },
    /// Write a standard algebra file
    Builtin {
        kind: BuiltinKind,
        /// m for heisenberg and sp, k for truncated, n for abelian
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        out: Option<String>,
    },
    /// Derivation algebra of a lie or assoc file
    Derive {
        path: String,
        #[arg(long)]
        dim: bool,
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Radical and Levi factor of der(g ⊗ A)
    Levi {
        lie: String,
        assoc: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run one verification
    Check {
        what: CheckKind,
        paths: Vec<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Dimensions and structural summary
    Info {
        path: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
struct Output {
    /// Print a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuiltinKind {
    Heisenberg,
    Truncated,
    Sp,
    Abelian,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    Table1,
    Axioms,
    Radical,
}

/// Parses `args` (without the program name) and runs one command.
/// Returns the process exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("curlie".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut report = ReportFile {
        command: args,
        ..Default::default()
    };
    let json = cli.command.json();
    let mut text = String::new();
    let result = execute(cli.command, &mut report, &mut text);
    let code = match &result {
        Ok(()) => {
            if report.status.is_empty() {
                report.status = "pass".to_string();
            }
            if report.status == "pass" {
                0
            } else {
                1
            }
        }
        Err(e) => {
            report.status = if e.exit_code() == 1 { "fail" } else { "error" }.to_string();
            report.notes.push(e.message().to_string());
            e.exit_code()
        }
    };
    report.exit_code = code;
    if let Err(e) = &result {
        let _ = writeln!(err, "error: {}", e.message());
    }
    let written = if json && code != 2 {
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{text}")
    };
    if written.is_err() {
        return 2;
    }
    code
}

impl Command {
    fn json(&self) -> bool {
        match self {
            Command::Derive { output, .. }
            | Command::Levi { output, .. }
            | Command::Check { output, .. }
            | Command::Info { output, .. } => output.json,
            Command::Heisenberg { .. } | Command::Builtin { .. } => false,
        }
    }
}

fn math(e: Error) -> CliError {
    match e {
        Error::DimensionMismatch { .. } | Error::ParseRational(_) => CliError::Input(e.to_string()),
        _ => CliError::Check(e.to_string()),
    }
}

fn flag(report: &mut ReportFile, text: &mut String, name: &str, value: bool) {
    report.flags.insert(name.to_string(), value);
    text.push_str(&format!(
        "{name}: {}\n",
        if value { "pass" } else { "FAIL" }
    ));
    if !value {
        report.status = "fail".to_string();
    }
}

fn dimension(report: &mut ReportFile, text: &mut String, name: &str, value: usize) {
    report.dimensions.insert(name.to_string(), value);
    text.push_str(&format!("{name}: {value}\n"));
}

/// `c₁·x₁ + c₂·x₂ …` over the given labels.
fn combination(labels: &[String], v: &[crate::Rational]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, l)| {
            if num_traits::One::is_one(c) {
                l.clone()
            } else {
                format!("{}·{l}", format_rational(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn write_algebra(
    file: &AlgebraFile,
    out: Option<String>,
    text: &mut String,
) -> Result<(), CliError> {
    let json = file.to_json();
    match out {
        Some(path) => {
            std::fs::write(&path, format!("{json}\n"))
                .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            text.push_str(&format!(
                "wrote {} algebra of dim {} to {path}\n",
                kind_name(file),
                file.dim
            ));
        }
        None => {
            text.push_str(&json);
            text.push('\n');
        }
    }
    Ok(())
}

fn kind_name(file: &AlgebraFile) -> &'static str {
    match file.kind {
        files::AlgebraKind::Lie => "lie",
        files::AlgebraKind::Assoc => "assoc",
    }
}

fn execute(command: Command, report: &mut ReportFile, text: &mut String) -> Result<(), CliError> {
    match command {
        Command::Heisenberg { m, k, out } => {
            let h = truncated_heisenberg(m as usize, k as usize);
            write_algebra(&AlgebraFile::from_lie(h.product()), out, text)
        }
        Command::Builtin { kind, n, out } => {
            let n = n as usize;
            let file = match kind {
                BuiltinKind::Heisenberg => AlgebraFile::from_lie(&LieAlgebra::heisenberg(n)),
                BuiltinKind::Sp => AlgebraFile::from_lie(sp(n).algebra()),
                BuiltinKind::Abelian => AlgebraFile::from_lie(&LieAlgebra::abelian(n)),
                BuiltinKind::Truncated => {
                    AlgebraFile::from_assoc(&AssocAlgebra::truncated_polynomial(n))
                }
            };
            write_algebra(&file, out, text)
        }
        Command::Derive {
            path, dim, basis, ..
        } => derive(&path, dim, basis, report, text),
        Command::Levi { lie, assoc, .. } => levi(&lie, &assoc, report, text),
        Command::Check {
            what,
            paths,
            samples,
            seed,
            ..
        } => check(what, &paths, samples, seed, report, text),
        Command::Info { path, .. } => info(&path, report, text),
    }
}

fn derive(
    path: &str,
    dim_only: bool,
    basis: bool,
    report: &mut ReportFile,
    text: &mut String,
) -> Result<(), CliError> {
    let (algebra, digest) = load(path)?;
    report.inputs.push(digest);
    let der = match &algebra {
        Algebra::Lie(g) => g.derivations(),
        Algebra::Assoc(a) => a.derivations(),
    };
    dimension(report, text, "der", der.dim());
    if basis && !dim_only {
        let mats = der.matrices();
        for (i, m) in mats.iter().enumerate() {
            text.push_str(&format!("D{}:\n", i + 1));
            for row in matrix_rows(m) {
                text.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        report
            .bases
            .insert("der".to_string(), mats.iter().map(matrix_rows).collect());
    }
    Ok(())
}

fn levi(
    lie_path: &str,
    assoc_path: &str,
    report: &mut ReportFile,
    text: &mut String,
) -> Result<(), CliError> {
    let (g, dg) = load_lie(lie_path)?;
    let (a, da) = load_assoc(assoc_path)?;
    report.inputs.extend([dg, da]);
    let ca = current_algebra(&g, &a).map_err(math)?;
    let s = known_levi_factor(&g).ok_or_else(|| {
        CliError::Input(
            "no constructive Levi factor of der(g): supported are solvable or semisimple der(g) and Heisenberg algebras"
                .to_string(),
        )
    })?;
    let r = ca.levi_decomposition(&s).map_err(math)?;
    dimension(report, text, "der_g", ca.der_g().dim());
    dimension(report, text, "der", r.der_full.dim());
    dimension(report, text, "summand_h", r.summand_h.dim());
    dimension(report, text, "summand_w", r.summand_w.dim());
    dimension(report, text, "summand_k", r.summand_k.dim());
    let rad = r.radical_candidate.as_ref().map_or(0, EndoSubspace::dim);
    let levi = r.levi_candidate.as_ref().map_or(0, EndoSubspace::dim);
    dimension(report, text, "radical", rad);
    dimension(report, text, "levi", levi);
    for (name, value) in r.flags.named() {
        if let Some(v) = value {
            flag(report, text, name, v);
        }
    }
    Ok(())
}

fn check(
    what: CheckKind,
    paths: &[String],
    samples: usize,
    seed: u64,
    report: &mut ReportFile,
    text: &mut String,
) -> Result<(), CliError> {
    let arity = |n: usize| {
        if paths.len() == n {
            Ok(())
        } else {
            Err(CliError::Input(format!(
                "expected {n} path(s), got {}",
                paths.len()
            )))
        }
    };
    match what {
        CheckKind::Table1 => {
            arity(2)?;
            let (g, dg) = load_lie(&paths[0])?;
            let (a, da) = load_assoc(&paths[1])?;
            report.inputs.extend([dg, da]);
            let ca = current_algebra(&g, &a).map_err(math)?;
            let t = ca.verify_bracket_table(samples, seed).map_err(math)?;
            dimension(report, text, "product", ca.dim());
            match t.mode {
                TableMode::Exhaustive => text.push_str("mode: exhaustive\n"),
                TableMode::Sampled { samples, seed } => text.push_str(&format!(
                    "mode: sampled ({samples} per rule, seed {seed})\n"
                )),
            }
            for (rule, count) in &t.checks {
                dimension(report, text, &format!("checked {rule}"), *count);
            }
            flag(report, text, "identities", true);
            flag(report, text, "k_is_ideal", t.k_is_ideal);
            if t.center_in_derived {
                flag(report, text, "k_abelian", t.k_abelian);
            }
        }
        CheckKind::Axioms => {
            if paths.is_empty() {
                return Err(CliError::Input("expected at least one path".to_string()));
            }
            for p in paths {
                let (_, d) = load(p)?;
                report.inputs.push(d);
                flag(report, text, &format!("axioms {p}"), true);
            }
        }
        CheckKind::Radical => {
            arity(1)?;
            let (algebra, d) = load(&paths[0])?;
            report.inputs.push(d);
            let (radical, labels): (Subspace, &[String]) = match &algebra {
                Algebra::Assoc(a) => (a.jacobson_radical(), a.labels()),
                Algebra::Lie(g) => (g.solvable_radical(), g.labels()),
            };
            dimension(report, text, "radical", radical.dim());
            for v in radical.vectors() {
                text.push_str(&format!("  {}\n", combination(labels, v)));
            }
        }
    }
    Ok(())
}

fn info(path: &str, report: &mut ReportFile, text: &mut String) -> Result<(), CliError> {
    let (algebra, d) = load(path)?;
    report.inputs.push(d);
    match &algebra {
        Algebra::Lie(g) => {
            text.push_str("kind: lie\n");
            dimension(report, text, "dim", g.dim());
            dimension(report, text, "center", g.center().dim());
            dimension(report, text, "derived", g.derived_subalgebra().dim());
            let series: Vec<String> = g
                .derived_series()
                .iter()
                .map(|s| s.dim().to_string())
                .collect();
            let lower: Vec<String> = g
                .lower_central_series()
                .iter()
                .map(|s| s.dim().to_string())
                .collect();
            text.push_str(&format!("derived series: {}\n", series.join(" > ")));
            text.push_str(&format!("lower central series: {}\n", lower.join(" > ")));
            for (name, value) in [
                ("nilpotent", g.is_nilpotent()),
                ("solvable", g.is_solvable()),
                ("semisimple", g.is_semisimple()),
            ] {
                report.flags.insert(name.to_string(), value);
                text.push_str(&format!("{name}: {}\n", if value { "yes" } else { "no" }));
            }
        }
        Algebra::Assoc(a) => {
            text.push_str("kind: assoc\n");
            dimension(report, text, "dim", a.dim());
            dimension(report, text, "radical", a.jacobson_radical().dim());
            dimension(report, text, "der", a.derivations().dim());
        }
    }
    Ok(())
}
