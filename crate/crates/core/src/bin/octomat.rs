//! Command-line front end: build tables, run verification suites, decompose,
//! survey the magic square, and export exact data.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use octomat::algebra::AlgebraKind;
use octomat::decomposition::{
    appendix_b_check, decompose, irreducibility_check, magic_square_survey, DecompError,
};
use octomat::e8::{build_structure_constants, killing_form, AlgebraPair, StructureConstants};
use octomat::report::{
    build_export, run_all, run_suite, to_csv, to_json, VerificationReport, SUITE_NAMES,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FactorArg {
    Split,
    Division,
}

impl From<FactorArg> for AlgebraKind {
    fn from(f: FactorArg) -> AlgebraKind {
        match f {
            FactorArg::Split => AlgebraKind::Split,
            FactorArg::Division => AlgebraKind::Division,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "octomat",
    version,
    about = "Exact-arithmetic workbench for e8 as generalized 3x3 matrices over (split) octonion pairs"
)]
struct Cli {
    /// Left (primed) factor algebra.
    #[arg(long, global = true, value_enum, default_value_t = FactorArg::Split)]
    left: FactorArg,
    /// Right factor algebra.
    #[arg(long, global = true, value_enum, default_value_t = FactorArg::Division)]
    right: FactorArg,
    /// Output path; defaults to a name derived from the spec pair.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for exported artifacts.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Parallelism degree (the sweeps are single-threaded; accepted for
    /// forward compatibility, must be >= 1).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the structure-constant table and write it with metadata.
    Build,
    /// Run verification suites (all by default).
    Verify {
        /// One of: tables, xyz, triality, jacobi, killing.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Extract e6 + sl(3,R) + six labeled 27-blocks (split x division only).
    Decompose,
    /// Survey all 16 magic-square entries against the Vinberg oracle.
    MagicSquare,
    /// Export the exact table as JSON or CSV.
    Export,
}

fn build_table(pair: AlgebraPair) -> Result<StructureConstants, String> {
    build_structure_constants(pair).map_err(|e| format!("table build failed: {}", e))
}

fn write_artifact(cli: &Cli, stem: &str, contents: &str) -> Result<PathBuf, String> {
    let path = cli.out.clone().unwrap_or_else(|| {
        let ext = match cli.format {
            FormatArg::Json => "json",
            FormatArg::Csv => "csv",
        };
        PathBuf::from(format!("{}.{}", stem, ext))
    });
    fs::write(&path, contents).map_err(|e| format!("writing {}: {}", path.display(), e))?;
    Ok(path)
}

fn cmd_export(cli: &Cli, pair: AlgebraPair) -> Result<(), String> {
    let sc = build_table(pair)?;
    let k = killing_form(&sc);
    let doc = build_export(&sc, &k);
    let body = match cli.format {
        FormatArg::Json => to_json(&doc),
        FormatArg::Csv => to_csv(&doc),
    };
    let stem = format!("octomat-{}", pair.name());
    let path = write_artifact(cli, &stem, &body)?;
    println!(
        "wrote {} ({} basis elements, {} bracket rows, signature {}+,{}-,{}0, digest {})",
        path.display(),
        doc.basis.len(),
        doc.brackets.len(),
        doc.killing.plus,
        doc.killing.minus,
        doc.killing.zero,
        doc.digest
    );
    Ok(())
}

fn cmd_verify(cli: &Cli, pair: AlgebraPair, suite: &Option<String>) -> Result<bool, String> {
    let sc = build_table(pair)?;
    let reports: Vec<VerificationReport> = match suite {
        Some(name) => vec![run_suite(&sc, name).ok_or_else(|| {
            format!("unknown suite '{}'; known: {}", name, SUITE_NAMES.join(", "))
        })?],
        None => run_all(&sc),
    };
    let mut all_ok = true;
    for r in &reports {
        println!("{}", r.line());
        all_ok &= r.ok();
    }
    if let Some(path) = &cli.out {
        let body = serde_json::to_string_pretty(&reports).expect("serializable") + "\n";
        fs::write(path, body).map_err(|e| format!("writing {}: {}", path.display(), e))?;
    }
    Ok(all_ok)
}

#[derive(Serialize)]
struct BlockReport {
    label: String,
    sigma: i64,
    eig_a: String,
    eig_g: String,
    dim: usize,
    irreducible: bool,
}

#[derive(Serialize)]
struct DecomposeReport {
    spec: String,
    e6_dim: usize,
    sl3_dim: usize,
    appendix_b_signs: Vec<i64>,
    blocks: Vec<BlockReport>,
}

fn label_name(q: &octomat::algebra::Element) -> String {
    let names = q.kind.unit_names();
    let parts: Vec<String> = (1..8)
        .filter(|&u| !num_traits::Zero::is_zero(&q.c[u]))
        .map(|u| {
            let sign = if q.c[u] < num_traits::Zero::zero() { "-" } else { "+" };
            format!("{}{}", sign, names[u])
        })
        .collect();
    format!("({})/2", parts.join("").trim_start_matches('+'))
}

fn cmd_decompose(cli: &Cli, pair: AlgebraPair) -> Result<(), String> {
    let sc = build_table(pair)?;
    let fail = |e: DecompError| format!("decomposition failed: {}", e);
    let d = decompose(&sc).map_err(fail)?;
    let appendix = appendix_b_check(&sc).map_err(fail)?;
    octomat::decomposition::verify_su3_covariance(&sc, &d).map_err(fail)?;
    let mut blocks = Vec::new();
    for b in &d.blocks {
        let irreducible = irreducibility_check(&sc, &d.e6, &b.basis);
        blocks.push(BlockReport {
            label: label_name(&b.q),
            sigma: b.sigma,
            eig_a: b.eig[0].to_string(),
            eig_g: b.eig[1].to_string(),
            dim: b.basis.len(),
            irreducible,
        });
    }
    let report = DecomposeReport {
        spec: pair.name(),
        e6_dim: d.e6.len(),
        sl3_dim: d.sl3.len(),
        appendix_b_signs: appendix.signs,
        blocks,
    };
    println!(
        "e6 dim {} + sl(3,R) dim {} + six 27-blocks = 248",
        report.e6_dim, report.sl3_dim
    );
    for b in &report.blocks {
        println!(
            "  block {}: sigma {:+}, (ad A'_L, ad G'_L) = ({}, {}), dim {}, cyclic: {}",
            b.label, b.sigma, b.eig_a, b.eig_g, b.dim, b.irreducible
        );
    }
    if cli.out.is_some() {
        let body = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
        write_artifact(cli, &format!("octomat-decompose-{}", pair.name()), &body)?;
    }
    // Sanity used for the exit code: all blocks cyclic, e6/sl3 dims right.
    if report.e6_dim != 78 || report.sl3_dim != 8 || report.blocks.iter().any(|b| !b.irreducible) {
        return Err("decomposition report failed internal checks".to_string());
    }
    Ok(())
}

fn cmd_magic_square(cli: &Cli, pair: AlgebraPair) -> Result<bool, String> {
    let sc = build_table(pair)?;
    let k = killing_form(&sc);
    let entries = magic_square_survey(&sc, &k);
    let mut all_ok = true;
    println!("left right   dim expected  signature  index");
    for e in &entries {
        let ok = e.dim == e.expected_dim;
        all_ok &= ok;
        println!(
            "{:>4} {:>5} {:>5} {:>8}  ({:>3}+,{:>3}-,{:>2}0) {:>6}  {}",
            e.left,
            e.right,
            e.dim,
            e.expected_dim,
            e.signature.0,
            e.signature.1,
            e.signature.2,
            e.index(),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    if let Some(path) = &cli.out {
        #[derive(Serialize)]
        struct EntryJson {
            left: String,
            right: String,
            dim: usize,
            expected_dim: usize,
            plus: usize,
            minus: usize,
            zero: usize,
            index: i64,
        }
        let rows: Vec<EntryJson> = entries
            .iter()
            .map(|e| EntryJson {
                left: e.left.to_string(),
                right: e.right.to_string(),
                dim: e.dim,
                expected_dim: e.expected_dim,
                plus: e.signature.0,
                minus: e.signature.1,
                zero: e.signature.2,
                index: e.index(),
            })
            .collect();
        let body = serde_json::to_string_pretty(&rows).expect("serializable") + "\n";
        fs::write(path, body).map_err(|e| format!("writing {}: {}", path.display(), e))?;
    }
    Ok(all_ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("--jobs must be >= 1");
        return ExitCode::from(2);
    }
    let pair = AlgebraPair {
        left: cli.left.into(),
        right: cli.right.into(),
    };
    let result = match &cli.command {
        Command::Build | Command::Export => cmd_export(&cli, pair).map(|()| true),
        Command::Verify { suite } => cmd_verify(&cli, pair, suite),
        Command::Decompose => cmd_decompose(&cli, pair).map(|()| true),
        Command::MagicSquare => cmd_magic_square(&cli, pair),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::FAILURE
        }
    }
}
