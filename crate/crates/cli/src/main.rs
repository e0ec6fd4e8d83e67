//! `dfunctor`: command-line access to standard modules, Drinfeld images,
//! Kazhdan-Lusztig tables and the verification suites.

mod suites;
mod text;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dfunctor::combinat::{Permutation, Weight};
use dfunctor::dfun::drinfeld_image;
use dfunctor::hecke::{standard_module, StandardParams};
use dfunctor::kl::{kl_oracle, kl_polynomial, kl_table, multiplicity_table, simple_in_standards, yangian_character};
use dfunctor::yangian::{
    composition_factors, drinfeld_polys, gln_character, highest_weight_data, standard_tensor_module, verify_gl, verify_yangian, YangianModule,
};
use dfunctor::{Error, ErrorClass, Result};

const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "dfunctor", version, about = "Drinfeld functor images, Yangian modules and Kazhdan-Lusztig multiplicities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized procedures.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
struct Params {
    /// Dominant integral weight, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Integral weight, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Rank of gl_n.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kazhdan-Lusztig polynomials of S_r, checked against the R-polynomial oracle.
    Kl {
        #[arg(long)]
        rank: usize,
        /// Restrict to P_{x,w}; one-line notation.
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// The standard tensor module M(λ,μ) built from evaluation modules.
    Standard(Params),
    /// The Drinfeld functor image of the standard module K(λ,μ).
    Dimage(Params),
    /// Multiplicities [M(λ,w·μ) : V(λ,x·μ)] and their inverse.
    Mtable(Params),
    /// Character of V(λ,w·μ) from the Kazhdan-Lusztig formula.
    Character {
        #[command(flatten)]
        params: Params,
        /// One-line notation.
        #[arg(long)]
        w: String,
    },
    /// Composition factors of a Yangian module.
    Compose {
        #[command(flatten)]
        params: Option<Params>,
        /// JSON module, or the output of `standard` or `dimage`.
        #[arg(long, conflicts_with_all = ["lambda", "mu", "n"])]
        input: Option<std::path::PathBuf>,
    },
    /// Verification suites, or the Yangian relations of one input module.
    Verify {
        #[arg(long, value_enum, default_value_t = suites::Suite::All)]
        suite: suites::Suite,
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
}

fn parse_ints(flag: &str, s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("--{flag}: '{t}' is not an integer"))))
        .collect()
}

fn weight(flag: &str, s: &str) -> Result<Weight> {
    Ok(Weight::from_ints(&parse_ints(flag, s)?))
}

fn permutation(flag: &str, s: &str) -> Result<Permutation> {
    let v = parse_ints(flag, s)?;
    let v = v.into_iter().map(|x| usize::try_from(x).map_err(|_| Error::Parse(format!("--{flag}: negative entry")))).collect::<Result<Vec<_>>>()?;
    Permutation::new(v).map_err(|e| Error::Parse(format!("--{flag}: {e}")))
}

fn weights(p: &Params) -> Result<(Weight, Weight)> {
    Ok((weight("lambda", &p.lambda)?, weight("mu", &p.mu)?))
}

fn module_summary(y: &YangianModule) -> Result<Value> {
    let hw = highest_weight_data(y)?;
    let generating: Vec<Value> = hw
        .iter()
        .filter(|h| h.generates)
        .map(|h| Ok(json!({"zeta": serde_json::to_value(h).expect("serializable")["zeta"], "drinfeld": drinfeld_polys(h)?})))
        .collect::<Result<_>>()?;
    Ok(json!({
        "dim": y.dim,
        "n": y.n,
        "character": gln_character(y)?,
        "highest_weights": hw,
        "generating": generating,
        "module": y.to_json(),
    }))
}

fn read_module(path: &std::path::Path) -> Result<YangianModule> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let module = v.pointer("/payload/module").or_else(|| v.get("module")).unwrap_or(&v);
    YangianModule::from_json(module)
}

fn run(cli: &Cli) -> Result<Value> {
    let seed = cli.seed;
    match &cli.command {
        Command::Kl { rank, x, w } => {
            if let (Some(x), Some(w)) = (x, w) {
                let (x, w) = (permutation("x", x)?, permutation("w", w)?);
                if x.rank() != *rank || w.rank() != *rank {
                    return Err(Error::RankMismatch(x.rank(), *rank));
                }
                let p = kl_polynomial(&x, &w)?;
                let oracle = kl_oracle(&x, &w)?;
                return Ok(json!({"rank": rank, "x": x, "w": w, "p": dfunctor::json::poly_value(&p), "oracle_agrees": p == oracle}));
            }
            if x.is_some() || w.is_some() {
                return Err(Error::Parse("--x and --w must be given together".into()));
            }
            let table = kl_table(*rank)?;
            let oracle_agrees = table.entries.iter().map(|e| Ok(kl_oracle(&e.x, &e.w)? == e.p)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
            let violations = table.invariant_violations()?;
            let mut v = serde_json::to_value(&table).expect("serializable");
            v["oracle_agrees"] = json!(oracle_agrees);
            v["invariant_violations"] = json!(violations);
            if !oracle_agrees || !violations.is_empty() {
                return Err(Error::RelationViolation(format!("Kazhdan-Lusztig table of rank {rank} fails its checks")));
            }
            Ok(v)
        }
        Command::Standard(p) => {
            let (lambda, mu) = weights(p)?;
            let y = standard_tensor_module(&lambda, &mu, p.n)?;
            let mut v = module_summary(&y)?;
            v["lambda"] = json!(lambda);
            v["mu"] = json!(mu);
            Ok(v)
        }
        Command::Dimage(p) => {
            let (lambda, mu) = weights(p)?;
            let k = standard_module(&StandardParams::new(&lambda, &mu)?)?;
            let y = drinfeld_image(&k, p.n)?;
            let mut v = module_summary(&y)?;
            v["lambda"] = json!(lambda);
            v["mu"] = json!(mu);
            v["hecke_dim"] = json!(k.dim);
            Ok(v)
        }
        Command::Mtable(p) => {
            let (lambda, mu) = weights(p)?;
            let report = multiplicity_table(&lambda, &mu, p.n)?;
            if !(report.inverse_is_inverse && report.predicates_agree && report.representative_independent && report.oracle_agrees) {
                return Err(Error::RelationViolation("multiplicity report fails its self-checks".into()));
            }
            let factors = (0..report.cosets.len()).map(|r| report.predicted_factors(r).map(|m| m.into_iter().collect::<Vec<_>>())).collect::<Result<Vec<_>>>()?;
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["predicted_factors"] = json!(factors);
            Ok(v)
        }
        Command::Character { params, w } => {
            let (lambda, mu) = weights(params)?;
            let w = permutation("w", w)?;
            let combination = simple_in_standards(&lambda, &w, &mu, params.n)?;
            let character = yangian_character(&lambda, &w, &mu, params.n)?;
            Ok(json!({"lambda": lambda, "mu": mu, "w": w, "n": params.n, "combination": combination, "character": character, "dim": character.dim()}))
        }
        Command::Compose { params, input } => {
            let y = match (params, input) {
                (_, Some(path)) => read_module(path)?,
                (Some(p), None) => {
                    let (lambda, mu) = weights(p)?;
                    standard_tensor_module(&lambda, &mu, p.n)?
                }
                (None, None) => return Err(Error::Parse("compose needs --input or --lambda/--mu/--n".into())),
            };
            let series = composition_factors(&y, seed)?;
            Ok(json!({"dim": y.dim, "n": y.n, "series": series}))
        }
        Command::Verify { suite, input } => match input {
            Some(path) => {
                let y = read_module(path)?;
                let report = verify_yangian(&y, 3, 3);
                let gl = verify_gl(&y);
                let ok = report.ok() && gl;
                let v = json!({"dim": y.dim, "n": y.n, "yangian": report, "gl": gl, "ok": ok});
                if !ok {
                    return Err(Error::RelationViolation(format!("{} Yangian relation violations", report.violation_count)));
                }
                Ok(v)
            }
            None => {
                let v = suites::run_suites(*suite, seed);
                if v["ok"] != json!(true) {
                    return Err(Error::RelationViolation(format!("verification failed: {}", v["failures"])));
                }
                Ok(v)
            }
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kl { .. } => "kl",
        Command::Standard(_) => "standard",
        Command::Dimage(_) => "dimage",
        Command::Mtable(_) => "mtable",
        Command::Character { .. } => "character",
        Command::Compose { .. } => "compose",
        Command::Verify { .. } => "verify",
    }
}

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Usage => 2,
        ErrorClass::Domain => 3,
        ErrorClass::Internal => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    let (status, payload, code) = match result {
        Ok(payload) => ("success", payload, 0),
        Err(e) => ("failure", json!({"error": {"code": e.code(), "message": e.to_string()}}), exit_code(e.class())),
    };
    let report = json!({"status": status, "seed": cli.seed, "command": command_name(&cli.command), "payload": payload});
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Text => print!("{}", text::render(&report)),
    }
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    ExitCode::from(code)
}
