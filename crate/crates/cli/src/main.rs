//! `lieprop`: command-line access to the catalog, orbit tables, proper-action
//! tests and example generation.
//!
//! Exit codes: 0 success (or "yes"), 1 a verification run found failures,
//! 2 usage or input error, 3 "no", 4 "undetermined".

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieprop_core::examples_gen::{generate, verify_published_lists};
use lieprop_core::linalg;
use lieprop_core::nilorbits::{ambient_dimension, enumerate_orbits};
use lieprop_core::proper::{decide, Admits, ProperVerdict, SubalgebraSpec, Witness};
use lieprop_core::qser::parse_q;
use lieprop_core::realforms::{a_hyperbolic_rank, b_plus_basis, catalog, lookup, RealForm};
use lieprop_core::rootcore::{Family, LieType, RootSystemData, RootVector, Subsystem};
use lieprop_core::{Q, DEFAULT_ORBIT_CAP};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lieprop", version, about = "Real simple Lie algebras and proper SL(2,R)-actions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Latex,
    /// Catalog record lines (forms only).
    Record,
}

#[derive(Subcommand)]
enum Cmd {
    /// List real forms or show one Satake diagram.
    #[command(subcommand)]
    Forms(FormsCmd),
    /// Nilpotent orbit table of a classical algebra such as sl4, sp6, so8.
    Orbits { algebra: String },
    /// a-hyperbolic rank and cone generators of a real form.
    Ahyp { form: String },
    /// Proper SL(2,R)-action tests.
    #[command(subcommand)]
    Proper(ProperCmd),
    /// Certified examples of homogeneous spaces.
    #[command(subcommand)]
    Examples(ExamplesCmd),
}

#[derive(Subcommand)]
enum FormsCmd {
    List,
    Show { name: String },
}

#[derive(Subcommand)]
enum ProperCmd {
    /// Decide whether G/H admits a proper SL(2,R)-action.
    Check(CheckArgs),
}

#[derive(Args)]
#[group(id = "h", required = true, multiple = false)]
struct HSpec {
    /// H of real rank one.
    #[arg(long = "h-rank1", group = "h")]
    rank1: bool,
    /// Restricted subsystem, e.g. `A1:l1` or `A1+A1:l1,l3` or `l0,[1,1,0]`.
    #[arg(long = "h-subsystem", group = "h")]
    subsystem: Option<String>,
    /// Restricted simple roots `l2,l3`, or Satake white nodes `a4,a6`.
    #[arg(long = "h-white", group = "h")]
    white: Option<String>,
    /// Basis of a_h in restricted simple-root coordinates, rows split by `;`.
    #[arg(long = "h-subspace", group = "h")]
    subspace: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "g")]
    g: String,
    #[command(flatten)]
    h: HSpec,
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Certified G/H for one real form.
    Generate {
        #[arg(long = "g")]
        g: String,
        /// Levels of the split-case search below the full system.
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Re-check the published example lists.
    VerifyLists,
}

struct Failure {
    code: u8,
    msg: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn fail(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn unsupported(fmt: Format, what: &str) -> Failure {
    let name = fmt.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    fail(format!("format {name} is not available for {what}"))
}

fn json<T: Serialize>(v: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn orbit_cap() -> Result<usize, Failure> {
    match std::env::var("LIEPROP_ORBIT_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| fail(format!("LIEPROP_ORBIT_CAP must be a positive integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_ORBIT_CAP),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Forms(FormsCmd::List) => forms_list(cli.format),
        Cmd::Forms(FormsCmd::Show { name }) => forms_show(&name, cli.format),
        Cmd::Orbits { algebra } => orbits(&algebra, cli.format),
        Cmd::Ahyp { form } => ahyp(&form, cli.format),
        Cmd::Proper(ProperCmd::Check(a)) => proper_check(&a, cli.format),
        Cmd::Examples(ExamplesCmd::Generate { g, depth }) => examples_generate(&g, depth, cli.format),
        Cmd::Examples(ExamplesCmd::VerifyLists) => verify_lists(cli.format),
    };
    match out {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

// ---------------------------------------------------------------------------
// forms

fn forms_list(fmt: Format) -> CmdResult {
    let forms = catalog();
    match fmt {
        Format::Json => json(&forms)?,
        Format::Record => {
            for f in forms {
                println!("{}", f.to_record());
            }
        }
        Format::Text => {
            let w = forms.iter().map(|f| f.name().chars().count()).max().unwrap_or(0);
            println!("{:<w$}  type  rank  ahyp  restricted", "form");
            for f in forms {
                println!(
                    "{:<w$}  {:<4}  {:<4}  {:<4}  {}",
                    f.name(),
                    f.lie_type().to_string(),
                    f.real_rank(),
                    a_hyperbolic_rank(&f.id)?,
                    f.restricted.restricted_type
                );
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{lllll}}\n\\hline\nForm & Type & Real rank & a-hyp.\\ rank & Restricted \\\\\n\\hline");
            for f in forms {
                println!(
                    "${}$ & ${}$ & {} & {} & ${}$ \\\\",
                    f.name().replace('*', "^*"),
                    f.lie_type(),
                    f.real_rank(),
                    a_hyperbolic_rank(&f.id)?,
                    f.restricted.restricted_type
                );
            }
            println!("\\hline\n\\end{{tabular}}");
        }
        Format::Dot => return Err(unsupported(fmt, "forms list")),
    }
    Ok(ExitCode::SUCCESS)
}

fn forms_show(name: &str, fmt: Format) -> CmdResult {
    let f = lookup(name)?;
    match fmt {
        Format::Text => print!("{}", render::satake_text(&f)),
        Format::Json => json(&f)?,
        Format::Dot => print!("{}", render::satake_dot(&f)),
        Format::Latex => print!("{}", render::satake_latex(&f)),
        Format::Record => println!("{}", f.to_record()),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// orbits

/// `sl4`, `so7`, `sp6`, or a Lie type such as `C3`.
fn parse_algebra(s: &str) -> Result<(LieType, usize), Failure> {
    let lower = s.trim().to_ascii_lowercase().replace(['(', ')', ',', 'c'], "");
    let bad = || fail(format!("unknown classical algebra {s:?}; try sl4, so7, sp6 or so8"));
    let num = |r: &str| r.parse::<usize>().map_err(|_| bad());
    let t = if let Some(r) = lower.strip_prefix("sl") {
        LieType::new(Family::A, num(r)?.checked_sub(1).ok_or_else(bad)?)?
    } else if let Some(r) = lower.strip_prefix("sp") {
        let n = num(r)?;
        if n % 2 == 1 {
            return Err(bad());
        }
        LieType::new(Family::C, n / 2)?
    } else if let Some(r) = lower.strip_prefix("so") {
        let n = num(r)?;
        if n % 2 == 1 {
            LieType::new(Family::B, n / 2)?
        } else {
            LieType::new(Family::D, n / 2)?
        }
    } else {
        s.trim().parse::<LieType>()?
    };
    Ok((t, ambient_dimension(t)?))
}

fn orbits(algebra: &str, fmt: Format) -> CmdResult {
    let (t, n) = parse_algebra(algebra)?;
    let labels = enumerate_orbits(t, n)?;
    let rows = render::orbit_rows(t, &labels)?;
    match fmt {
        Format::Text => print!("{}", render::orbit_text(t, &rows)),
        Format::Json => json(&rows)?,
        Format::Latex => print!("{}", render::orbit_latex(t, &rows)),
        _ => return Err(unsupported(fmt, "orbits")),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// ahyp

#[derive(Serialize)]
struct AhypReport<'a> {
    form: &'a str,
    real_rank: usize,
    a_hyperbolic_rank: usize,
    generators: Vec<lieprop_core::realforms::WeightedDynkinDiagram>,
}

fn ahyp(name: &str, fmt: Format) -> CmdResult {
    let f = lookup(name)?;
    let cone = b_plus_basis(&f.satake);
    let report = AhypReport {
        form: f.name(),
        real_rank: f.real_rank(),
        a_hyperbolic_rank: cone.dimension,
        generators: cone.generators,
    };
    match fmt {
        Format::Text => {
            println!("{}: a-hyperbolic rank {}", report.form, report.a_hyperbolic_rank);
            println!("real rank {}", report.real_rank);
            for g in &report.generators {
                println!("generator {g}");
            }
        }
        Format::Json => json(&report)?,
        _ => return Err(unsupported(fmt, "ahyp")),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// proper

/// Splits on commas that are not inside brackets.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

/// `l0` (the lowest root), `lk` (simple root k), or coordinates `[1,1,0]`.
fn parse_root(sys: &RootSystemData, tok: &str) -> Result<RootVector, Failure> {
    let lower = tok.to_ascii_lowercase();
    if let Some(k) = lower.strip_prefix('l').or_else(|| lower.strip_prefix('λ')) {
        let k: usize = k.parse().map_err(|_| fail(format!("bad root label {tok:?}")))?;
        return match k {
            0 => Ok(sys.highest_root().neg()),
            k if k <= sys.rank() => Ok(sys.simple_root(k - 1)),
            _ => Err(fail(format!("{tok}: restricted rank is {}", sys.rank()))),
        };
    }
    let body = tok.trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let coords: Result<Vec<i64>, _> = body.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let r = RootVector(coords.map_err(|_| fail(format!("bad root {tok:?}")))?);
    sys.check_root(&r)?;
    Ok(r)
}

fn parse_subsystem(g: &RealForm, spec: &str) -> Result<Subsystem, Failure> {
    let sys = g.restricted_system();
    let (label, gens) = match spec.split_once(':') {
        Some((l, rest)) => (Some(l.trim()), rest),
        None => (None, spec),
    };
    let gens: Vec<RootVector> = split_top(gens)
        .into_iter()
        .map(|t| parse_root(&sys, t))
        .collect::<Result<_, _>>()?;
    let sub = Subsystem::generated(&sys, &gens)?;
    if let Some(l) = label {
        let got = sub.type_label(&sys);
        let norm = |s: &str| s.to_ascii_uppercase().replace(['x', 'X', '×'], "+");
        if norm(l) != norm(&got) {
            return Err(fail(format!("generators span a subsystem of type {got}, not {l}")));
        }
    }
    Ok(sub)
}

fn parse_white(g: &RealForm, spec: &str) -> Result<SubalgebraSpec, Failure> {
    let toks = split_top(spec);
    if toks.iter().all(|t| t.starts_with('a')) {
        let nodes = toks
            .iter()
            .map(|t| match t[1..].parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(fail(format!("bad Satake node {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SubalgebraSpec::SatakeSub { white_nodes: nodes });
    }
    let r = g.real_rank();
    let mut restricted = Vec::new();
    for t in toks {
        match t.strip_prefix('l').and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if (1..=r).contains(&k) => restricted.push(k - 1),
            _ => return Err(fail(format!("bad restricted simple root {t:?} (expected l1..l{r})"))),
        }
    }
    // the same H phrased through all white nodes over the chosen roots
    let nodes: Vec<usize> = g
        .satake
        .white_nodes()
        .into_iter()
        .filter(|&i| g.restricted.restriction_map[i].is_some_and(|k| restricted.contains(&k)))
        .collect();
    Ok(SubalgebraSpec::SatakeSub { white_nodes: nodes })
}

fn parse_subspace(g: &RealForm, spec: &str) -> Result<SubalgebraSpec, Failure> {
    let r = g.real_rank();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for row in spec.split(';').map(str::trim).filter(|x| !x.is_empty()) {
        let v: Option<Vec<Q>> = row
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .split(',')
            .map(|x| parse_q(x.trim()))
            .collect();
        let v = v.ok_or_else(|| fail(format!("bad vector {row:?}")))?;
        if v.len() != r {
            return Err(fail(format!("vector {row:?} has {} entries, real rank is {r}", v.len())));
        }
        rows.push(v);
    }
    if rows.is_empty() || linalg::rank(&rows) != rows.len() {
        return Err(fail("subspace basis must be nonempty and independent"));
    }
    Ok(SubalgebraSpec::Subspace { a_h: rows })
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::OrthogonalRoot { root, label } => format!("orthogonal root {label} = {root}"),
        Witness::AvoidedOrbit { diagram, .. } => format!("orbit of {diagram} avoids a_h"),
        Witness::ConeGenerators { first, second } => format!("independent diagrams {first} and {second}"),
        Witness::Inherited { from, witness } => format!("from {from}: {}", witness_text(witness)),
    }
}

fn verdict_code(v: &ProperVerdict) -> ExitCode {
    match v.admits {
        Admits::Yes => ExitCode::SUCCESS,
        Admits::No => ExitCode::from(3),
        Admits::Undetermined => ExitCode::from(4),
    }
}

fn proper_check(a: &CheckArgs, fmt: Format) -> CmdResult {
    let g = lookup(&a.g)?;
    let spec = if a.h.rank1 {
        SubalgebraSpec::RankOne
    } else if let Some(s) = &a.h.subsystem {
        SubalgebraSpec::RestrictedSubsystem {
            sub: parse_subsystem(&g, s)?,
        }
    } else if let Some(s) = &a.h.white {
        parse_white(&g, s)?
    } else if let Some(s) = &a.h.subspace {
        parse_subspace(&g, s)?
    } else {
        return Err(fail("one description of H is required"));
    };
    let v = decide(&g, &spec, orbit_cap()?)?;
    match fmt {
        Format::Text => {
            let admits = match v.admits {
                Admits::Yes => "yes",
                Admits::No => "no",
                Admits::Undetermined => "undetermined",
            };
            println!("admits: {admits}");
            println!("criterion: {}", serde_json::to_value(v.criterion)?.as_str().unwrap_or_default());
            if let Some(w) = &v.witness {
                println!("witness: {}", witness_text(w));
            }
            println!("note: {}", v.note);
        }
        Format::Json => json(&v)?,
        _ => return Err(unsupported(fmt, "proper check")),
    }
    Ok(verdict_code(&v))
}

// ---------------------------------------------------------------------------
// examples

fn examples_generate(name: &str, depth: usize, fmt: Format) -> CmdResult {
    let g = lookup(name)?;
    let recs = generate(&g, depth);
    match fmt {
        Format::Text => {
            for r in &recs {
                let w = r.verdict.witness.as_ref().map(witness_text).unwrap_or_default();
                let src = match &r.source {
                    lieprop_core::examples_gen::RecordSource::Split => "split".to_string(),
                    lieprop_core::examples_gen::RecordSource::Parabolic { c, gamma, .. } => {
                        let c: Vec<String> = c.iter().map(|k| format!("l{}", k + 1)).collect();
                        format!("parabolic, C {{{}}}, gamma l{gamma}", c.join(","))
                    }
                };
                println!("{}/{}  [{}; R_h {}; {src}]  {w}", g.name(), r.h, r.h_algebra, r.subsystem_type);
            }
            println!("{} records", recs.len());
        }
        Format::Json => json(&recs)?,
        _ => return Err(unsupported(fmt, "examples generate")),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_lists(fmt: Format) -> CmdResult {
    let report = verify_published_lists();
    match fmt {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => json(&report)?,
        _ => return Err(unsupported(fmt, "examples verify-lists")),
    }
    Ok(if report.failures().is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
