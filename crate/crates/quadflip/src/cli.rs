//! Argument parsing and command dispatch. [`run`] never touches the process
//! streams, so the binary and the tests share it.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use quadflip_core::dsl::{self, Env, Value};
use quadflip_core::fano::{self, Family, FanoParams};
use quadflip_core::hodge::{self, HodgeDiamond};
use quadflip_core::sod;
use serde_json::{json, Value as Json};

use crate::builtins::Builtins;
use crate::formats::{self, big, diamond_to_json, parse_diamond, parse_verdict, DiamondFile};
use crate::report::{render_json, render_text, use_color, CheckReport, Provenance};
use crate::suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quadflip", version, about = "Exact Hodge, motive and decomposition bookkeeping for del Pezzo varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the builtin diamonds.
    Builtins,
    /// Hodge diamond computations.
    #[command(subcommand)]
    Hodge(HodgeCmd),
    /// Fano schemes of planes and flips between Hilbert schemes of quadrics.
    #[command(subcommand)]
    Fano(FanoCmd),
    /// Decomposition ledgers and scripts.
    #[command(subcommand)]
    Sod(SodCmd),
    /// Classes in the Grothendieck ring.
    #[command(subcommand)]
    Motive(MotiveCmd),
    /// Run the golden suite.
    VerifyAll(VerifyAllArgs),
}

#[derive(Debug, Args)]
pub struct DiamondSource {
    /// Name of a builtin diamond.
    #[arg(long, conflicts_with = "diamond", required_unless_present = "diamond")]
    pub builtin: Option<String>,
    /// JSON file holding a diamond.
    #[arg(long, value_name = "FILE")]
    pub diamond: Option<PathBuf>,
    /// Skip the symmetry and Serre duality checks on the input.
    #[arg(long)]
    pub raw: bool,
    #[arg(long)]
    pub json: bool,
    /// Compare the printed result with this text; exit 1 on mismatch.
    #[arg(long, value_name = "VALUE")]
    pub expect: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum HodgeCmd {
    /// Hilbert square of the input.
    Hilb2 {
        #[command(flatten)]
        src: DiamondSource,
        /// Print only the middle column.
        #[arg(long)]
        column: bool,
    },
    /// Symmetric square of the input.
    Sym2 {
        #[command(flatten)]
        src: DiamondSource,
        #[arg(long)]
        column: bool,
    },
    /// Dimension of HH_0, the sum of the h^{p,p}.
    Hh0 {
        #[command(flatten)]
        src: DiamondSource,
    },
    /// The input itself.
    Show {
        #[command(flatten)]
        src: DiamondSource,
        #[arg(long)]
        column: bool,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArg {
    /// cubic, two-quadrics or gr25
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}` (cubic, two-quadrics, gr25)"))
}

#[derive(Debug, Subcommand)]
pub enum FanoCmd {
    /// Dimensions of the Fano schemes F_j(X).
    Dims {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Dimension identities behind the flip of G_k(X).
    Codim {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, required_unless_present = "grid")]
        n: Option<u32>,
        #[arg(long, required_unless_present = "grid")]
        k: Option<u32>,
        /// Whole grid, plus identities as polynomials in n.
        #[arg(long, conflicts_with_all = ["n", "k"])]
        grid: bool,
        #[arg(long)]
        json: bool,
    },
    /// Normal bundle splitting types of a line on a del Pezzo n-fold.
    Splittings {
        #[arg(long)]
        n: u32,
        /// Cross-check against brute force over degrees in [-10, 1].
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        json: bool,
    },
    /// Components of a decomposition of D(G_k(X)).
    Sodcounts {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Regime of G_k(X): flip, isomorphism, empty or disjoint-union.
    Classify {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Del Pezzo varieties of a given degree.
    Degree {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Splitting of O(d)^[2] on P^2 against Künneth cohomology on P^1 x P^1.
    Taut {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        m_min: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        m_max: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum SodCmd {
    /// Run the checks in a script.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert square of two quadrics against the conjectured pieces.
    ConjectureConsistency {
        #[arg(long, default_value_t = 15)]
        n_odd_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare hh0 of a candidate with hh0 of the Hilbert square.
    Obstruction {
        /// The variety X.
        #[arg(long)]
        builtin: String,
        /// Builtin candidate; defaults to the Fano scheme of lines of X.
        #[arg(long)]
        candidate: Option<String>,
        /// OBSTRUCTED or INCONCLUSIVE; defaults to the builtin's own.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum MotiveCmd {
    /// Evaluate an expression to its canonical form.
    Eval {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the checks in a script.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyAllArgs {
    #[arg(long)]
    pub json: bool,
    /// Replace a builtin diamond by a JSON file.
    #[arg(long, value_name = "NAME=FILE")]
    pub override_builtin: Vec<String>,
    /// Run one criterion only.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
    pub criterion: Option<u8>,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_PASS,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

struct Ctx {
    builtins: Builtins,
    color: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli, use_color()),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn dispatch(cli: Cli, color: bool) -> Outcome {
    let mut ctx = Ctx {
        builtins: Builtins::new(),
        color,
    };
    let result = match cli.command {
        Command::Builtins => Ok(Outcome::ok(list_builtins(&ctx))),
        Command::Hodge(c) => cmd_hodge(&ctx, c),
        Command::Fano(c) => cmd_fano(&ctx, c),
        Command::Sod(c) => cmd_sod(&ctx, c),
        Command::Motive(c) => cmd_motive(&ctx, c),
        Command::VerifyAll(a) => cmd_verify_all(&mut ctx, a),
    };
    result.unwrap_or_else(Outcome::usage)
}

fn list_builtins(ctx: &Ctx) -> String {
    let mut out = String::new();
    for name in ctx.builtins.names() {
        let prov = ctx
            .builtins
            .get(&name)
            .ok()
            .and_then(|f| f.provenance)
            .unwrap_or_else(|| "generated for any genus g".to_string());
        out.push_str(&format!("{name:26} {prov}\n"));
    }
    out
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(ctx: &Ctx, src: &DiamondSource) -> Result<DiamondFile, String> {
    match (&src.builtin, &src.diamond) {
        (Some(name), _) => ctx.builtins.get(name).map_err(|e| e.to_string()),
        (None, Some(path)) => {
            let text = read(path)?;
            parse_diamond(&text, !src.raw).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, None) => Err("one of --builtin or --diamond is required".into()),
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Prints `text` or `json`, or with `--expect` a single check on `text`.
fn emit(
    ctx: &Ctx,
    name: &str,
    inputs: &str,
    text: String,
    json: Json,
    src_json: bool,
    expect: Option<&str>,
) -> Outcome {
    match expect {
        Some(want) => reports_outcome(
            ctx,
            vec![CheckReport::new(name, inputs, want, text.trim_end(), Provenance::Trivial)],
            src_json,
        ),
        None if src_json => Outcome::ok(formats::to_pretty(&json)),
        None => {
            let mut t = text;
            if !t.ends_with('\n') {
                t.push('\n');
            }
            Outcome::ok(t)
        }
    }
}

fn reports_outcome(ctx: &Ctx, reports: Vec<CheckReport>, json: bool) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let stdout = if json {
        formats::to_pretty(&render_json(&reports))
    } else {
        render_text(&reports, ctx.color)
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
    }
}

fn diamond_text(d: &HodgeDiamond, column: bool) -> (String, Json) {
    if column {
        let c = d.column();
        (join(&c), Json::Array(c.iter().map(big).collect()))
    } else {
        (d.to_string(), diamond_to_json(d))
    }
}

fn cmd_hodge(ctx: &Ctx, cmd: HodgeCmd) -> Result<Outcome, String> {
    let (src, op, column) = match &cmd {
        HodgeCmd::Hilb2 { src, column } => (src, "hilb2", *column),
        HodgeCmd::Sym2 { src, column } => (src, "sym2", *column),
        HodgeCmd::Hh0 { src } => (src, "hh0", false),
        HodgeCmd::Show { src, column } => (src, "show", *column),
    };
    let f = load(ctx, src)?;
    if f.partial && op != "hh0" && op != "show" {
        return Err("the input lists only some Hodge numbers; only hh0 and show apply".into());
    }
    let inputs = src
        .builtin
        .clone()
        .or_else(|| src.diamond.as_ref().map(|p| p.display().to_string()))
        .unwrap_or_default();
    let (text, json) = match op {
        "hilb2" => diamond_text(&hodge::hilbert_square(&f.diamond).map_err(|e| e.to_string())?, column),
        "sym2" => diamond_text(&hodge::sym2(&f.diamond), column),
        "hh0" => {
            let v = f.diamond.hh0();
            (v.to_string(), big(&v))
        }
        _ => diamond_text(&f.diamond, column),
    };
    let name = format!("{op}{}", if column { " column" } else { "" });
    Ok(emit(ctx, &name, &inputs, text, json, src.json, src.expect.as_deref()))
}

fn show_opt(v: Option<u32>) -> String {
    v.map_or_else(|| "empty".to_string(), |d| d.to_string())
}

fn cmd_fano(ctx: &Ctx, cmd: FanoCmd) -> Result<Outcome, String> {
    match cmd {
        FanoCmd::Dims { family, n, json } => {
            let family = family.family;
            if family == Family::Gr25 {
                let row = fano::gr25_row(n).map_err(|e| e.to_string())?;
                let text = format!(
                    "({}, {}, {}, {})",
                    show_opt(row.f1),
                    show_opt(row.f2_sigma),
                    show_opt(row.f2_tau),
                    show_opt(row.f3)
                );
                let opt = |v: Option<u32>| v.map_or(Json::Null, |x| json!(x));
                let j = json!({
                    "family": "gr25", "n": n,
                    "F1": opt(row.f1), "F2_sigma": opt(row.f2_sigma),
                    "F2_tau": opt(row.f2_tau), "F3": opt(row.f3),
                    "F2_disjoint_union": row.f2_is_disjoint_union(),
                });
                return Ok(emit(ctx, "dims", "", text, j, json, None));
            }
            FanoParams::new(family, n, 0).map_err(|e| e.to_string())?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for j in 1..=n {
                let d = fano::expected_dim_fano(family, n, j).map_err(|e| e.to_string())?;
                text.push_str(&format!("F_{j} {d}\n"));
                rows.push(json!({ "j": j, "dim": formats::fano_dim_to_json(&d) }));
                if d.is_empty() {
                    break;
                }
            }
            let j = json!({ "family": family.name(), "n": n, "fano": rows });
            Ok(emit(ctx, "dims", "", text, j, json, None))
        }
        FanoCmd::Codim { family, n, k, grid, json } => {
            let family = family.family;
            let (reports, raw) = if grid {
                let grid_reports = fano::codim_grid(family);
                let mut reports: Vec<CheckReport> = grid_reports.iter().map(codim_check).collect();
                for k in 0..=6u32 {
                    for c in fano::symbolic_identities(family, k).unwrap_or_default() {
                        reports.push(CheckReport::new(
                            format!("{} k={k} {} (polynomial in n)", family.name(), c.name),
                            format!("k = {k}"),
                            &c.lhs,
                            &c.rhs,
                            Provenance::Derived,
                        ));
                    }
                }
                (reports, grid_reports)
            } else {
                let p = FanoParams::new(family, n.unwrap_or(0), k.unwrap_or(0)).map_err(|e| e.to_string())?;
                let r = fano::verify_codim_identity(p).map_err(|e| e.to_string())?;
                let reports = r
                    .checks
                    .iter()
                    .map(|c| {
                        CheckReport::new(
                            format!("{} n={} k={} {}", family.name(), p.n, p.k, c.name),
                            format!("regime {}", r.regime),
                            c.lhs,
                            c.rhs,
                            Provenance::Derived,
                        )
                    })
                    .collect();
                (reports, vec![r])
            };
            if json {
                let pass = reports.iter().all(|r| r.pass);
                let mut v: Vec<Json> = raw.iter().map(formats::codim_report_to_json).collect();
                if grid {
                    v.extend(reports.iter().filter(|r| r.name.ends_with("(polynomial in n)")).map(CheckReport::to_json));
                }
                return Ok(Outcome {
                    stdout: formats::to_pretty(&Json::Array(v)),
                    stderr: String::new(),
                    code: if pass { EXIT_PASS } else { EXIT_FAIL },
                });
            }
            Ok(reports_outcome(ctx, reports, false))
        }
        FanoCmd::Splittings { n, brute, json } => {
            if n < 2 {
                return Err("lines on a del Pezzo variety need n >= 2".into());
            }
            let types = fano::enumerate_line_splittings(n);
            let expected = fano::expected_hilb2_restriction(n);
            let mut reports = Vec::new();
            for s in &types {
                let restr = fano::hilb2_normal_restriction(s);
                reports.push(CheckReport::new(
                    format!("N = {s}, restriction to the Hilbert square"),
                    format!("n = {n}"),
                    &expected,
                    restr.map_or_else(|| "undefined".to_string(), |r| r.to_string()),
                    Provenance::Derived,
                ));
            }
            if brute {
                reports.push(CheckReport::new(
                    "brute force over [-10, 1]",
                    format!("n = {n}"),
                    join(&types),
                    join(&fano::brute_force_line_splittings(n, -10)),
                    Provenance::Derived,
                ));
            }
            if json {
                let pass = reports.iter().all(|r| r.pass);
                let j = json!({
                    "n": n,
                    "types": types.iter().map(|s| json!(s.degrees())).collect::<Vec<_>>(),
                    "checks": render_json(&reports),
                });
                return Ok(Outcome {
                    stdout: formats::to_pretty(&j),
                    stderr: String::new(),
                    code: if pass { EXIT_PASS } else { EXIT_FAIL },
                });
            }
            let mut out = reports_outcome(ctx, reports, false);
            let header: String = types.iter().map(|s| format!("{s}\n")).collect();
            out.stdout = format!("{} splitting type{}\n{header}{}", types.len(), if types.len() == 1 { "" } else { "s" }, out.stdout);
            Ok(out)
        }
        FanoCmd::Sodcounts { family, n, k, json } => {
            let p = FanoParams::new(family.family, n, k).map_err(|e| e.to_string())?;
            let s = fano::sod_counts(p);
            let mut text = format!("regime {}\nprimary {}\n", s.regime, s.primary);
            if let Some(alt) = &s.alternative {
                text.push_str(&format!("alternative {alt}\n"));
            }
            for shape in fano::flip_shape(p) {
                text.push_str(&format!("flip shape (r, s) = ({}, {}) over {}\n", shape.r, shape.s, shape.base_label));
            }
            Ok(emit(ctx, "sodcounts", "", text, formats::sod_counts_to_json(&s), json, None))
        }
        FanoCmd::Classify { family, n, k, json } => {
            let p = FanoParams::new(family.family, n, k).map_err(|e| e.to_string())?;
            let r = fano::emptiness_threshold(p);
            let j = json!({ "family": p.family.name(), "n": n, "k": k, "regime": r.to_string() });
            Ok(emit(ctx, "classify", "", r.to_string(), j, json, None))
        }
        FanoCmd::Degree { d } => {
            let e = fano::degree_classification(d).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(format!("{}: {}\n", e.degree, e.description)))
        }
        FanoCmd::Taut { d, m_min, m_max, json } => {
            let bundle = fano::tautological_square(d).ok_or_else(|| format!("no splitting is claimed for d = {d}"))?;
            let rows = fano::verify_taut_splitting(d, m_min..=m_max).unwrap_or_default();
            let reports = rows
                .iter()
                .map(|r| {
                    CheckReport::verdict(
                        format!("O({d})^[2] = {bundle}, m = {}", r.m),
                        format!("O({}, {}) on P1 x P1", r.m + d, r.m),
                        format!("{:?}, H^1 = 0", r.kunneth),
                        format!("{:?}", r.split),
                        r.pass(),
                        Provenance::Derived,
                    )
                })
                .collect();
            Ok(reports_outcome(ctx, reports, json))
        }
    }
}

fn codim_check(r: &fano::CodimReport) -> CheckReport {
    let bad: Vec<&str> = r.checks.iter().filter(|c| !c.pass()).map(|c| c.name.as_str()).collect();
    let want = format!("{} identities hold", r.checks.len());
    CheckReport::new(
        format!("{} n={} k={}", r.params.family.name(), r.params.n, r.params.k),
        format!("regime {}", r.regime),
        &want,
        if bad.is_empty() { want.clone() } else { format!("failing: {}", bad.join(", ")) },
        Provenance::Derived,
    )
}

fn script(ctx: &Ctx, file: &Path, json: bool) -> Result<Outcome, String> {
    let src = read(file)?;
    let outcomes = dsl::run_script(&src).map_err(|e| format!("{}: {e}", file.display()))?;
    let name = file.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
    let reports = outcomes
        .into_iter()
        .map(|o| {
            CheckReport::verdict(
                format!("line {}: {}", o.line, o.name),
                name.clone(),
                o.expected,
                o.computed,
                o.pass,
                Provenance::Derived,
            )
        })
        .collect();
    Ok(reports_outcome(ctx, reports, json))
}

fn cmd_sod(ctx: &Ctx, cmd: SodCmd) -> Result<Outcome, String> {
    match cmd {
        SodCmd::Check { file, json } => script(ctx, &file, json),
        SodCmd::ConjectureConsistency { n_odd_max, json } => {
            let reports = sod::conjecture_consistency(n_odd_max)
                .into_iter()
                .map(|row| {
                    let name = format!("n = {}", row.n);
                    if row.in_range {
                        CheckReport::new(name, "hilb2 vs fano + pencil", &row.hilb2, &row.sum, Provenance::Derived)
                    } else {
                        CheckReport::verdict(
                            name,
                            "hilb2 vs fano + pencil",
                            "skipped, outside n >= 5",
                            "skipped, outside n >= 5",
                            true,
                            Provenance::Trivial,
                        )
                    }
                })
                .collect();
            Ok(reports_outcome(ctx, reports, json))
        }
        SodCmd::Obstruction { builtin, candidate, expect, json } => {
            let x = ctx.builtins.get(&builtin).map_err(|e| e.to_string())?;
            let cand_name = candidate
                .or_else(|| x.lines.clone())
                .ok_or_else(|| format!("`{builtin}` names no Fano scheme of lines; pass --candidate"))?;
            let cand = ctx.builtins.get(&cand_name).map_err(|e| e.to_string())?;
            let expected = match expect {
                Some(s) => Some(parse_verdict(&s).ok_or_else(|| format!("`{s}` is not OBSTRUCTED or INCONCLUSIVE"))?),
                None => x.expected_verdict,
            };
            let ambient = hodge::hilbert_square(&x.diamond).map_err(|e| e.to_string())?;
            let (c, a) = (cand.diamond.hh0(), ambient.hh0());
            let v = sod::embedding_obstruction(&c, &ambient);
            let line = verdict_line(&c, &a, v);
            let inputs = format!("{cand_name} in hilb2({builtin})");
            let report = match expected {
                Some(e) => CheckReport::verdict("obstruction", inputs, e.to_string(), line, e == v, Provenance::Literature),
                None => CheckReport::verdict("obstruction", inputs, v.to_string(), line, true, Provenance::Derived),
            };
            Ok(reports_outcome(ctx, vec![report], json))
        }
    }
}

fn verdict_line(c: &BigUint, a: &BigUint, v: sod::Verdict) -> String {
    let rel = if c > a { ">" } else { "<=" };
    format!("{v} ({c} {rel} {a})")
}

fn cmd_motive(ctx: &Ctx, cmd: MotiveCmd) -> Result<Outcome, String> {
    match cmd {
        MotiveCmd::Eval { expr, json } => {
            let node = dsl::parse(&expr).map_err(|e| e.to_string())?;
            let v = dsl::eval(&node, &Env::default()).map_err(|e| e.to_string())?;
            let (text, j) = match v {
                Value::Motive(m) => (m.to_string(), formats::motive_to_json(&m)),
                Value::Ledger(l) => (l.to_string(), formats::ledger_to_json(&l)),
            };
            Ok(emit(ctx, "eval", "", text, j, json, None))
        }
        MotiveCmd::Check { file, json } => script(ctx, &file, json),
    }
}

fn cmd_verify_all(ctx: &mut Ctx, args: VerifyAllArgs) -> Result<Outcome, String> {
    for spec in &args.override_builtin {
        let (name, path) = spec
            .split_once('=')
            .ok_or_else(|| format!("--override-builtin expects NAME=FILE, got `{spec}`"))?;
        let text = read(Path::new(path))?;
        ctx.builtins.override_with(name, text);
    }
    let criteria = match args.criterion {
        Some(id) => vec![suite::run_criterion(id, &ctx.builtins)],
        None => suite::run_all(&ctx.builtins),
    };
    let reports: Vec<CheckReport> = criteria.into_iter().flat_map(|c| c.reports).collect();
    Ok(reports_outcome(ctx, reports, args.json))
}
