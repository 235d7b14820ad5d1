//! Command-line surface: fusion products, quantum dimensions, evaluation
//! points, table export, the verification suite, and the series identity.
//!
//! Exit codes: 0 on success, 1 when a verification gate fails, 2 on usage
//! errors (including malformed or non-permissible signatures). `--json`
//! emits a single JSON document on standard output.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use twistfuse::characters::{closed_form_diagnostics, eval_point, quantum_dims};
use twistfuse::fusion::{
    default_grid, fuse_module, general_fusion_untwisted, k0_square, run_grid_verify, verify_suite,
    GridReport, VerifyReport,
};
use twistfuse::qseries::euler_check;
use twistfuse::sig::enumerate_eval_set;
use twistfuse::tables::{export_tables, table_file_name};
use twistfuse::{Error, GlSignature, LevelContext, SpSignature};

#[derive(Parser)]
#[command(
    name = "twistfuse",
    version,
    about = "Level-truncated fusion rings of LSU(2N) and their twisted module"
)]
struct Cli {
    /// Emit a single JSON document on standard output.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for cached fusion tables.
    #[arg(long, global = true, env = "TWISTFUSE_CACHE")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Cell {
    /// Half the rank: the group is SU(2N).
    #[arg(long)]
    n: usize,

    /// The level.
    #[arg(long)]
    level: i64,
}

impl Cell {
    fn ctx(&self) -> Result<LevelContext, Error> {
        LevelContext::new(self.n, self.level)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Fusion products.
    Fuse {
        #[command(subcommand)]
        rule: FuseRule,
    },
    /// Quantum dimensions of one basis.
    Dims {
        #[command(flatten)]
        cell: Cell,
        /// Show the twisted basis and the constant C instead.
        #[arg(long)]
        twisted: bool,
    },
    /// The evaluation points and their exact angle fractions.
    Points {
        #[command(flatten)]
        cell: Cell,
    },
    /// Square of the basic twisted representation, with its consistency
    /// record.
    K0square {
        #[command(flatten)]
        cell: Cell,
    },
    /// Run the verification suite on one cell or on the default grid.
    Verify {
        /// Half the rank (required unless --grid).
        #[arg(long)]
        n: Option<usize>,
        /// The level (required unless --grid).
        #[arg(long)]
        level: Option<i64>,
        /// Verify the whole default grid.
        #[arg(long)]
        grid: bool,
    },
    /// Truncated power series checks.
    Qseries {
        #[command(subcommand)]
        which: QseriesCmd,
    },
    /// Compare directly computed sums against printed closed forms
    /// (recorded, never gated).
    Diagnostics {
        #[command(flatten)]
        cell: Cell,
    },
    /// Export fusion tables to a JSON file, reusing a valid cached copy.
    Tables {
        #[command(flatten)]
        cell: Cell,
        /// Output path (default: the cache directory plus a canonical name).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FuseRule {
    /// Fusion of two untwisted representations.
    Untwisted {
        #[command(flatten)]
        cell: Cell,
        /// First untwisted signature, comma-separated parts.
        #[arg(long)]
        f: String,
        /// Second untwisted signature.
        #[arg(long)]
        g: String,
    },
    /// Action of an untwisted representation on a twisted one.
    Module {
        #[command(flatten)]
        cell: Cell,
        /// Untwisted signature, comma-separated parts.
        #[arg(long)]
        f: String,
        /// Twisted signature.
        #[arg(long = "h")]
        h: String,
    },
}

#[derive(Subcommand)]
enum QseriesCmd {
    /// Check the distinct-parts / odd-parts product identity through the
    /// given order.
    Euler {
        #[arg(long)]
        order: usize,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}

/// Parse an untwisted signature against the context; untwisted inputs are
/// normalized automatically.
fn parse_gl(text: &str, ctx: &LevelContext) -> Result<GlSignature, Error> {
    let sig = GlSignature::parse(text)?;
    if sig.rank() != ctx.gl_rank() {
        return Err(Error::InvalidSignature(format!(
            "untwisted signature needs {} parts at {ctx}, got {}",
            ctx.gl_rank(),
            sig.rank()
        )));
    }
    let sig = sig.normalized();
    if !sig.is_level_permissible(ctx) {
        return Err(Error::NotPermissible(format!(
            "untwisted signature {sig} violates f_1 - f_2N <= {}",
            ctx.level()
        )));
    }
    Ok(sig)
}

fn parse_sp(text: &str, ctx: &LevelContext) -> Result<SpSignature, Error> {
    let sig = SpSignature::parse(text)?;
    if sig.rank() != ctx.sp_rank() {
        return Err(Error::InvalidSignature(format!(
            "twisted signature needs {} parts at {ctx}, got {}",
            ctx.sp_rank(),
            sig.rank()
        )));
    }
    if !sig.is_level_permissible(ctx) {
        return Err(Error::NotPermissible(format!(
            "twisted signature {sig} violates h_1 + h_2 <= {}",
            ctx.level()
        )));
    }
    Ok(sig)
}

fn emit(json_mode: bool, doc: Value, human: String) {
    if json_mode {
        println!("{doc}");
    } else {
        println!("{human}");
    }
}

/// Render a label -> multiplicity map as an aligned two-column table in
/// canonical order.
fn render_combination(map: &BTreeMap<String, i64>) -> String {
    if map.is_empty() {
        return "(zero)".to_string();
    }
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0).max(9);
    let mut out = format!("{:width$}  multiplicity", "signature");
    for (label, mult) in map {
        out.push_str(&format!("\n{label:width$}  {mult}"));
    }
    out
}

fn render_dims(map: &BTreeMap<String, f64>, header: &str) -> String {
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0).max(9);
    let mut out = format!("{:width$}  {header}", "signature");
    for (label, value) in map {
        out.push_str(&format!("\n{label:width$}  {value:.12}"));
    }
    out
}

fn render_report(report: &VerifyReport) -> String {
    let mut out = format!(
        "verification report (N={}, level={})\n{:28}  {:>12}  {:>9}  status",
        report.n, report.level, "check", "residual", "tolerance"
    );
    for check in &report.checks {
        out.push_str(&format!(
            "\n{:28}  {:>12.3e}  {:>9.0e}  {}",
            check.name,
            check.residual,
            check.tolerance,
            if check.passed { "pass" } else { "FAIL" }
        ));
    }
    out.push_str(if report.passed {
        "\nall checks passed"
    } else {
        "\nSOME CHECKS FAILED"
    });
    out
}

fn render_grid(report: &GridReport) -> String {
    let mut out = String::new();
    if let Some(warning) = &report.warning {
        out.push_str(&format!("warning: {warning}\n"));
    }
    for cell in &report.cells {
        let failed: Vec<&str> = cell
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        out.push_str(&format!(
            "N={}, level={}: {}\n",
            cell.n,
            cell.level,
            if failed.is_empty() {
                format!("pass ({} checks)", cell.checks.len())
            } else {
                format!("FAIL ({})", failed.join(", "))
            }
        ));
    }
    out.push_str(if report.passed {
        "grid verification passed"
    } else {
        "GRID VERIFICATION FAILED"
    });
    out
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Fuse { rule } => match rule {
            FuseRule::Untwisted { cell, f, g } => {
                let ctx = cell.ctx()?;
                let f = parse_gl(&f, &ctx)?;
                let g = parse_gl(&g, &ctx)?;
                let result = general_fusion_untwisted(&f, &g, &ctx)?.to_label_map();
                emit(
                    cli.json,
                    json!({ "result": result }),
                    render_combination(&result),
                );
                Ok(0)
            }
            FuseRule::Module { cell, f, h } => {
                let ctx = cell.ctx()?;
                let f = parse_gl(&f, &ctx)?;
                let h = parse_sp(&h, &ctx)?;
                let result = fuse_module(&f, &h, &ctx)?.to_label_map();
                emit(
                    cli.json,
                    json!({ "result": result }),
                    render_combination(&result),
                );
                Ok(0)
            }
        },
        Command::Dims { cell, twisted } => {
            let ctx = cell.ctx()?;
            let qd = quantum_dims(&ctx)?;
            if twisted {
                let map: BTreeMap<String, f64> =
                    qd.twisted.iter().map(|(h, d)| (h.label(), *d)).collect();
                emit(
                    cli.json,
                    json!({ "twisted": map, "c": qd.c }),
                    format!(
                        "twisted quantum dimensions ({ctx})\n{}\nC = {:.12}",
                        render_dims(&map, "d(K)"),
                        qd.c
                    ),
                );
            } else {
                let map: BTreeMap<String, f64> =
                    qd.untwisted.iter().map(|(f, d)| (f.label(), *d)).collect();
                emit(
                    cli.json,
                    json!({ "untwisted": map }),
                    format!(
                        "untwisted quantum dimensions ({ctx})\n{}",
                        render_dims(&map, "d(H)")
                    ),
                );
            }
            Ok(0)
        }
        Command::Points { cell } => {
            let ctx = cell.ctx()?;
            let mut entries = Vec::new();
            let mut human = format!("evaluation points ({ctx})\nlabel -> angle fractions");
            for g in enumerate_eval_set(&ctx) {
                let pt = eval_point(&g, &ctx)?;
                entries.push(json!({
                    "doubled": g.doubled(),
                    "type": g.kind().as_str(),
                    "angles": pt.angle_strings(),
                }));
                human.push_str(&format!(
                    "\n{}  ->  {}",
                    g.label(),
                    pt.angle_strings().join(" ")
                ));
            }
            emit(cli.json, json!({ "points": entries }), human);
            Ok(0)
        }
        Command::K0square { cell } => {
            let ctx = cell.ctx()?;
            let k0 = k0_square(&ctx)?;
            let map = k0.decomposition.to_label_map();
            emit(
                cli.json,
                json!({
                    "result": map,
                    "consistency": {
                        "cSquared": k0.c_squared,
                        "pairedSum": k0.paired_sum,
                        "absDiff": k0.abs_diff,
                    }
                }),
                format!(
                    "{}\nC^2 = {:.9}, paired character sum = {:.9}, |diff| = {:.3e}",
                    render_combination(&map),
                    k0.c_squared,
                    k0.paired_sum,
                    k0.abs_diff
                ),
            );
            Ok(0)
        }
        Command::Verify { n, level, grid } => {
            if grid {
                if n.is_some() || level.is_some() {
                    return Err(Error::OutOfRange(
                        "pass either --grid or --n/--level, not both".into(),
                    ));
                }
                let report = run_grid_verify(&default_grid())?;
                let passed = report.passed;
                emit(
                    cli.json,
                    serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
                    render_grid(&report),
                );
                Ok(if passed { 0 } else { 1 })
            } else {
                let (Some(n), Some(level)) = (n, level) else {
                    return Err(Error::OutOfRange(
                        "verify needs --n and --level (or --grid)".into(),
                    ));
                };
                let ctx = LevelContext::new(n, level)?;
                let report = verify_suite(&ctx);
                let passed = report.passed;
                emit(
                    cli.json,
                    serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
                    render_report(&report),
                );
                Ok(if passed { 0 } else { 1 })
            }
        }
        Command::Qseries { which } => match which {
            QseriesCmd::Euler { order } => {
                let result = euler_check(order)?;
                emit(
                    cli.json,
                    json!({
                        "order": result.order,
                        "ok": result.ok,
                        "firstMismatch": result.first_mismatch,
                    }),
                    match result.first_mismatch {
                        None => format!("OK through t^{order}"),
                        Some(k) => format!("MISMATCH at t^{k}"),
                    },
                );
                Ok(if result.ok { 0 } else { 1 })
            }
        },
        Command::Diagnostics { cell } => {
            let ctx = cell.ctx()?;
            let report = closed_form_diagnostics(&ctx)?;
            let mut human = format!(
                "closed-form diagnostics ({ctx})\n{:28}  {:>14}  {:>14}  {:>10}",
                "pair", "direct", "closed form", "|diff|"
            );
            for pair in &report.pairs {
                human.push_str(&format!(
                    "\n{:28}  {:>14.8}  {:>14.8}  {:>10.3e}",
                    pair.name, pair.direct, pair.closed_form, pair.abs_diff
                ));
            }
            emit(
                cli.json,
                serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
                human,
            );
            Ok(0)
        }
        Command::Tables { cell, out } => {
            let ctx = cell.ctx()?;
            let path = match (out, &cli.cache_dir) {
                (Some(path), _) => path,
                (None, Some(dir)) => {
                    std::fs::create_dir_all(dir)?;
                    dir.join(table_file_name(&ctx))
                }
                (None, None) => {
                    return Err(Error::OutOfRange(
                        "no output path: pass --out or --cache-dir (or set TWISTFUSE_CACHE)".into(),
                    ))
                }
            };
            let (doc, reused) = export_tables(&ctx, &path)?;
            emit(
                cli.json,
                json!({
                    "path": path.display().to_string(),
                    "reused": reused,
                    "checksum": doc.checksum,
                }),
                format!(
                    "{} tables for {ctx} at {} (checksum {})",
                    if reused { "reused" } else { "wrote" },
                    path.display(),
                    &doc.checksum[..12]
                ),
            );
            Ok(0)
        }
    }
}
