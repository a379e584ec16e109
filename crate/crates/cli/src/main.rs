use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use ausrep_core::exactla::check_prime;
use ausrep_core::funmod::json::{funmod_from_str, funmod_to_json};
use ausrep_core::funmod::FunMod;
use ausrep_core::functors::{is_cotilting, is_tilting, t2_from_json, MonoPair, Recollement, T2Json};
use ausrep_core::gammaalg::{build_gamma, gabriel_dot, BasedAlgebra};
use ausrep_core::lambdacat::json::{catalog_to_json, rep_from_json, RepJson};
use ausrep_core::lambdacat::Catalog;
use ausrep_core::verify::{
    default_algebras, default_grid, parse_grid, run_suite, suite_names, AlgebraSpec, SuiteReport, VerifyConfig,
};
use ausrep_core::{Error, Result};

/// Primes below this make random certification noticeably weaker.
const SMALL_PRIME_WARNING: u32 = 23;

#[derive(Parser)]
#[command(name = "ausrep", version, about = "Auslander algebras of representation-finite algebras over F_p")]
struct Cli {
    /// `nakayama:c,N`, `catalog:path.json`, or `a3_sink`
    #[arg(long, global = true)]
    algebra: Option<String>,
    #[arg(long, global = true, default_value_t = 101)]
    prime: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials for isomorphism and summand certification
    #[arg(long, global = true, default_value_t = 64)]
    trials: usize,
    /// Nakayama grid for `verify`, e.g. `c<=2,N<=2` or `1,2;2,1`
    #[arg(long, global = true)]
    grid: Option<String>,
    /// Write the Gabriel quiver as Graphviz DOT
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Write machine-readable output to this file
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the indecomposables of the catalog
    Catalog,
    /// Summarize the Auslander algebra
    Gamma,
    /// Summarize the stable Auslander algebra
    StableGamma,
    /// Apply a functor to JSON input
    Apply {
        functor: Functor,
        /// Input file; `-` or absent reads standard input. Not used by `T`.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        check: Option<CheckKind>,
    },
    /// Run a verification suite, or `all`
    Verify { suite: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Functor {
    /// cokernel of (E, f) for a map f (T2 JSON)
    #[value(name = "alpha")]
    Alpha,
    /// F on a mono (T2 JSON)
    #[value(name = "F")]
    F,
    /// G on a mono (T2 JSON)
    #[value(name = "G")]
    G,
    /// restriction to the stable algebra (Γ-module JSON)
    #[value(name = "q")]
    Q,
    /// intermediate extension (representation JSON)
    #[value(name = "c")]
    C,
    /// the tilting module c(E)
    #[value(name = "T")]
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Tilting,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSelfInjective | Error::NotMono | Error::Precondition(_) => 3,
        Error::Undetermined(_) | Error::BoundExceeded(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let p = check_prime(cli.prime)?;
    if p < SMALL_PRIME_WARNING {
        eprintln!("warning: prime {p} is small; randomized certification may need more trials");
    }
    match &cli.cmd {
        Cmd::Catalog => cmd_catalog(cli),
        Cmd::Gamma => cmd_gamma(cli),
        Cmd::StableGamma => cmd_stable_gamma(cli),
        Cmd::Apply { functor, input, check } => cmd_apply(cli, *functor, input.as_ref(), *check),
        Cmd::Verify { suite } => cmd_verify(cli, suite),
    }
}

fn algebra_spec(cli: &Cli) -> Result<AlgebraSpec> {
    let s = cli.algebra.as_deref().ok_or_else(|| Error::Schema("--algebra is required".into()))?;
    AlgebraSpec::parse(s)
}

fn load(cli: &Cli) -> Result<Arc<Catalog>> {
    Ok(Arc::new(algebra_spec(cli)?.catalog(cli.prime)?))
}

fn write_file(path: &PathBuf, s: &str) -> Result<()> {
    std::fs::write(path, s)?;
    Ok(())
}

fn write_dot(cli: &Cli, alg: &BasedAlgebra) -> Result<()> {
    if let Some(path) = &cli.dot {
        write_file(path, &gabriel_dot(alg, alg.id()))?;
    }
    Ok(())
}

fn cmd_catalog(cli: &Cli) -> Result<u8> {
    let cat = load(cli)?;
    let q = cat.quiver();
    for i in 0..cat.len() {
        let m = cat.entry(i);
        let dims: Vec<String> = q.vertices.iter().zip(m.dims()).map(|(v, d)| format!("{v}:{d}")).collect();
        let e = &cat.entries()[i];
        let flags = match (e.projective, e.injective) {
            (true, true) => "projective-injective",
            (true, false) => "projective",
            (false, true) => "injective",
            (false, false) => "-",
        };
        println!("{}\tdim {}\t[{}]\t{flags}", cat.name(i), m.total_dim(), dims.join(" "));
    }
    if let Some(path) = &cli.json {
        write_file(path, &serde_json::to_string_pretty(&catalog_to_json(&cat))?)?;
    }
    if cli.dot.is_some() {
        let g = build_gamma(cat)?;
        write_dot(cli, &g.alg)?;
    }
    Ok(0)
}

fn summarize(name: &str, alg: &BasedAlgebra) -> Vec<String> {
    vec![
        format!("dim {name} = {}", alg.dim()),
        format!("vertices = {}", alg.n_vertices()),
        format!("radical dim = {}", alg.radical_space().dim()),
        format!("idempotents = {}", alg.vertices().join(", ")),
    ]
}

fn print_summary(cli: &Cli, lines: &[String]) -> Result<()> {
    for l in lines {
        println!("{l}");
    }
    if let Some(path) = &cli.json {
        write_file(path, &serde_json::to_string_pretty(lines)?)?;
    }
    Ok(())
}

fn cmd_gamma(cli: &Cli) -> Result<u8> {
    let g = build_gamma(load(cli)?)?;
    print_summary(cli, &summarize("Γ", &g.alg))?;
    write_dot(cli, &g.alg)?;
    Ok(0)
}

fn cmd_stable_gamma(cli: &Cli) -> Result<u8> {
    let rec = Recollement::new(load(cli)?)?;
    print_summary(cli, &summarize("Γ̄", rec.stable()))?;
    write_dot(cli, rec.stable())?;
    Ok(0)
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => Ok(std::io::read_to_string(std::io::stdin())?),
    }
}

fn read_mono(cat: &Catalog, s: &str) -> Result<MonoPair> {
    let j: T2Json = serde_json::from_str(s)?;
    MonoPair::new(t2_from_json(cat, &j)?.f)
}

fn cmd_apply(cli: &Cli, functor: Functor, input: Option<&PathBuf>, check: Option<CheckKind>) -> Result<u8> {
    let cat = load(cli)?;
    let out: FunMod = match functor {
        Functor::Alpha => {
            let g = build_gamma(cat.clone())?;
            let j: T2Json = serde_json::from_str(&read_input(input)?)?;
            ausrep_core::functors::alpha(&g, &t2_from_json(&cat, &j)?)?
        }
        Functor::F | Functor::G => {
            let rec = Recollement::new(cat.clone())?;
            let x = read_mono(&cat, &read_input(input)?)?;
            if matches!(functor, Functor::F) { rec.f_functor(&x)? } else { rec.g_functor(&x)? }
        }
        Functor::Q => {
            let rec = Recollement::new(cat.clone())?;
            let m = funmod_from_str(rec.gamma_alg(), &read_input(input)?)?;
            rec.q(&m)
        }
        Functor::C => {
            let rec = Recollement::new(cat.clone())?;
            let r: RepJson = serde_json::from_str(&read_input(input)?)?;
            rec.c(&rep_from_json(&cat, &r)?)?
        }
        Functor::T => Recollement::new(cat.clone())?.tilting_t()?,
    };
    let json = serde_json::to_string_pretty(&funmod_to_json(&out))?;
    let mut notes = vec![format!("dims = {:?}, total = {}", out.dims(), out.total_dim())];
    if let Some(CheckKind::Tilting) = check {
        let t = is_tilting(&out, cli.trials, cli.seed)?;
        let c = is_cotilting(&out, cli.trials, cli.seed)?;
        notes.push(format!("tilting: {t}, cotilting: {c}"));
    }
    match &cli.json {
        Some(path) => {
            write_file(path, &json)?;
            notes.iter().for_each(|n| println!("{n}"));
        }
        None => {
            println!("{json}");
            notes.iter().for_each(|n| eprintln!("{n}"));
        }
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<u8> {
    let suites: Vec<&str> = if suite == "all" {
        suite_names()
    } else if suite_names().contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Schema(format!("unknown suite {suite}; expected all or one of {}", suite_names().join(", "))));
    };
    let cfg = VerifyConfig { prime: cli.prime, seed: cli.seed, trials: cli.trials };
    let grid = match (&cli.algebra, &cli.grid) {
        (Some(_), _) => None,
        (None, Some(g)) => Some(parse_grid(g)?),
        (None, None) => Some(default_grid()),
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        let algebras = match &grid {
            Some(g) => default_algebras(s, g),
            None => vec![algebra_spec(cli)?],
        };
        let r = run_suite(s, &algebras, &cfg)?;
        print!("{}", r.to_text());
        reports.push(r);
    }
    let failed = reports.iter().any(|r| !r.passed() && !r.undetermined());
    let undetermined = reports.iter().any(|r| r.undetermined());
    if let Some(path) = &cli.json {
        let doc = serde_json::json!({ "passed": !failed && !undetermined, "reports": reports });
        write_file(path, &serde_json::to_string_pretty(&doc)?)?;
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} suites passed", reports.len());
    Ok(if failed {
        1
    } else if undetermined {
        4
    } else {
        0
    })
}
