//! `derinv`: integer invariants of `t^n - 1`, the sets `B_p`, and Lie
//! algebras with periodic derivations, from the command line.

mod output;
mod tables;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use derinv::ffield::{fq_roots, make_field, period, set_seed_override, splitting_degree, FpPoly};
use derinv::invariants::{
    delta, factor_int, is_prime_u64, rho, rho_prime_divisors, sigma, theorem36_bound, wendt,
    Factorization,
};
use derinv::lie::{
    algebra_from_json, algebra_to_json, build_witness, map_from_json, map_order, map_to_json,
    pad_to_exact_order, poly_annihilates, NilpotencyVerdict,
};
use derinv::shalev::{arith_progression, bp_witness, char0_free, h_np, pp_element};
use derinv::{parse_poly, Error, IntPoly};

use output::{envelope, render, Format, Table};

#[derive(Parser)]
#[command(name = "derinv", version, about = "Arithmetic invariants of periodic derivations")]
struct Cli {
    /// Output format; tables default to md, everything else to json
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Override the derived PRNG seed (testing only)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest splitting-field degree to construct
    #[arg(long = "cap-k", global = true, default_value_t = 24)]
    cap_k: u64,
    /// Record wall time in elapsed_ms (otherwise 0, keeping output stable)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// R(t^n-1, (t+1)^n-1), with Phi_3 removed when 6 | n
    Rho {
        n: u64,
        #[arg(long)]
        factor: bool,
    },
    /// Determinant of the binomial circulant
    Wendt { n: u64 },
    /// Root-difference invariant of an integer polynomial
    Delta {
        #[arg(long)]
        poly: String,
    },
    /// Root-sum invariant of an integer polynomial
    Sigma {
        #[arg(long)]
        poly: String,
    },
    /// Nilpotency bound for periodic derivations of order n in characteristic p (0 allowed)
    Thm36 { n: u64, p: u64 },
    /// Least m with f | t^m - 1 over F_p
    Period {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: u64,
    },
    /// per(h(t^p - t)), an element of P_p
    Pp {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        h: String,
    },
    /// Decide n in B_p; exit status 1 when it is not
    NpMember { n: u64, p: u64 },
    /// Classify (n, p) for n <= N
    NpScan {
        #[arg(long = "n-max")]
        n_max: u64,
        /// Comma-separated primes, or "rho" for the primes dividing rho_n
        #[arg(long = "p-set", default_value = "rho")]
        p_set: String,
    },
    /// Arithmetic freeness of the root set of a polynomial, over F_p or (without --p) over Q
    ArithFree {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Lie algebras given by structure constants
    #[command(subcommand)]
    Lie(LieCommand),
    /// Regenerate a reference table
    Tables {
        #[arg(value_enum)]
        which: tables::Which,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// Validate antisymmetry and the Jacobi identity
    Check { file: PathBuf },
    /// Lower central series and nilpotency class
    Class { file: PathBuf },
    /// Check a matrix against the derivation law and find its order
    Derivation {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Largest order searched
        #[arg(long, default_value_t = 1_000_000)]
        order_cap: u64,
    },
    /// Non-nilpotent algebra with a derivation D, D^n = id
    Witness {
        n: u64,
        p: u64,
        /// Pad with K^n so that D has order exactly n
        #[arg(long)]
        exact_order: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DeskScaleExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    command: String,
    inputs: Value,
    result: Value,
    table: Option<Table>,
    /// the mathematical answer was negative
    negative: bool,
}

impl Outcome {
    fn new(command: &str, inputs: Value, result: Value) -> Self {
        Outcome {
            command: command.to_string(),
            inputs,
            result,
            table: None,
            negative: false,
        }
    }

    fn negative_if(mut self, flag: bool) -> Self {
        self.negative = flag;
        self
    }
}

fn factorization_json(f: &Factorization) -> Value {
    let factors: Vec<Value> = f
        .factors
        .iter()
        .map(|(p, e)| match p.to_u64() {
            Some(small) => json!([small, e]),
            None => json!([p.to_string(), e]),
        })
        .collect();
    json!({"sign": f.sign, "factors": factors})
}

fn int_poly(text: &str) -> Result<IntPoly, Failure> {
    Ok(parse_poly(text)?)
}

fn fp_poly(text: &str, p: u64) -> Result<FpPoly, Failure> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()).into());
    }
    Ok(FpPoly::from_int_poly(&parse_poly(text)?, p))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn positive(n: u64) -> Result<u64, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be >= 1".into()));
    }
    Ok(n)
}

fn verdict_json(v: NilpotencyVerdict) -> Value {
    match v {
        NilpotencyVerdict::Class(c) => json!(format!("Class({c})")),
        NilpotencyVerdict::NonNilpotent => json!("NonNilpotent"),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cap_k = cli.cap_k;
    Ok(match &cli.command {
        Command::Rho { n, factor } => {
            let r = rho(positive(*n)?)?;
            let mut result = json!({"n": n, "rho": r.to_string()});
            if *factor {
                result["factorization"] = factorization_json(&factor_int(&r)?);
            }
            Outcome::new("rho", json!({"n": n, "factor": factor}), result)
        }
        Command::Wendt { n } => {
            let w = wendt(positive(*n)?)?;
            Outcome::new("wendt", json!({"n": n}), json!({"n": n, "wendt": w.to_string()}))
        }
        Command::Delta { poly } => {
            let r = int_poly(poly)?;
            let d = delta(&r)?;
            Outcome::new(
                "delta",
                json!({"poly": poly}),
                json!({"poly": r.to_string(), "delta": d.to_string()}),
            )
        }
        Command::Sigma { poly } => {
            let r = int_poly(poly)?;
            let s = sigma(&r)?;
            Outcome::new(
                "sigma",
                json!({"poly": poly}),
                json!({"poly": r.to_string(), "sigma": s.to_string()}),
            )
        }
        Command::Thm36 { n, p } => {
            let v = theorem36_bound(positive(*n)?, *p)?;
            Outcome::new(
                "thm36",
                json!({"n": n, "p": p}),
                json!({"n": n, "p": p, "verdict": format!("{v:?}"), "class_bound": v.class_bound()}),
            )
        }
        Command::Period { poly, p } => {
            let f = fp_poly(poly, *p)?;
            let per = period(&f)?;
            Outcome::new(
                "period",
                json!({"poly": poly, "p": p}),
                json!({"poly": f.to_expr('t'), "p": p, "period": per.to_string()}),
            )
        }
        Command::Pp { p, h } => {
            let hp = fp_poly(h, *p)?;
            let m = pp_element(&hp)?;
            Outcome::new(
                "pp",
                json!({"p": p, "h": h}),
                json!({"h": hp.to_expr('t'), "p": p, "period": m.to_string()}),
            )
        }
        Command::NpMember { n, p } => {
            let w = bp_witness(positive(*n)?, *p, cap_k)?;
            let progression = w.progression.as_ref().map(|pr| {
                json!({
                    "field": pr.field.describe(),
                    "alpha": pr.alpha.to_string(),
                    "beta": pr.beta.to_string(),
                })
            });
            let member = progression.is_some();
            Outcome::new(
                "np-member",
                json!({"n": n, "p": p}),
                json!({
                    "n": n,
                    "p": p,
                    "member": member,
                    "h_np": w.h_np.to_expr('t'),
                    "progression": progression,
                }),
            )
            .negative_if(!member)
        }
        Command::NpScan { n_max, p_set } => np_scan(*n_max, p_set)?,
        Command::ArithFree { poly, p } => arith_free(poly, *p, cap_k)?,
        Command::Lie(sub) => lie(sub, cap_k)?,
        Command::Tables { which } => {
            let table = tables::build(*which)?;
            let mut out = Outcome::new("tables", json!({"which": which.name()}), table.json());
            out.table = Some(table);
            out
        }
    })
}

fn np_scan(n_max: u64, p_set: &str) -> Result<Outcome, Failure> {
    let fixed: Option<Vec<u64>> = if p_set == "rho" {
        None
    } else {
        let ps = p_set
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure::Usage(format!("bad prime '{s}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(bad) = ps.iter().find(|&&p| !is_prime_u64(p)) {
            return Err(Error::NotPrime(bad.to_string()).into());
        }
        Some(ps)
    };
    let ns: Vec<u64> = (1..=n_max).collect();
    let parts: Vec<Result<Vec<Vec<String>>, Error>> = ns
        .par_iter()
        .map(|&n| {
            let primes = match &fixed {
                Some(ps) => ps.clone(),
                None => rho_prime_divisors(n)?,
            };
            primes
                .into_iter()
                .map(|p| {
                    let h = h_np(n, p)?;
                    Ok(vec![
                        n.to_string(),
                        p.to_string(),
                        (!h.is_one()).to_string(),
                        h.to_expr('t'),
                    ])
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for part in parts {
        rows.extend(part?);
    }
    let table = Table {
        headers: vec!["n", "p", "member", "h_np"],
        rows,
    };
    let mut out = Outcome::new(
        "np-scan",
        json!({"n_max": n_max, "p_set": p_set}),
        table.json(),
    );
    out.table = Some(table);
    Ok(out)
}

fn arith_free(poly: &str, p: Option<u64>, cap_k: u64) -> Result<Outcome, Failure> {
    let inputs = json!({"poly": poly, "p": p});
    let Some(p) = p else {
        let free = char0_free(&int_poly(poly)?)?;
        return Ok(Outcome::new(
            "arith-free",
            inputs,
            json!({"characteristic": 0, "free": free}),
        )
        .negative_if(!free));
    };
    let f = fp_poly(poly, p)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    let k = if f.is_constant() { 1 } else { splitting_degree(&f)? };
    if k > cap_k {
        return Err(Error::DeskScaleExceeded { k, cap: cap_k }.into());
    }
    let field = make_field(p, k as u32)?;
    let roots = if f.is_constant() {
        Vec::new()
    } else {
        fq_roots(&f, &field)?
    };
    let witness = arith_progression(&roots, &field)?;
    let free = witness.is_none();
    Ok(Outcome::new(
        "arith-free",
        inputs,
        json!({
            "characteristic": p,
            "field": field.describe(),
            "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "free": free,
            "counterexample": witness.map(|(a, b)| json!({"alpha": a.to_string(), "beta": b.to_string()})),
        }),
    )
    .negative_if(!free))
}

fn lie(sub: &LieCommand, cap_k: u64) -> Result<Outcome, Failure> {
    Ok(match sub {
        LieCommand::Check { file } => {
            let inputs = json!({"file": file.display().to_string()});
            match algebra_from_json(&read(file)?) {
                Ok(alg) => Outcome::new(
                    "lie check",
                    inputs,
                    json!({"valid": true, "dim": alg.dim(), "field": alg.field().describe()}),
                ),
                Err(e @ (Error::Antisymmetry { .. } | Error::Jacobi { .. })) => Outcome::new(
                    "lie check",
                    inputs,
                    json!({"valid": false, "violation": e.to_string()}),
                )
                .negative_if(true),
                Err(e) => return Err(e.into()),
            }
        }
        LieCommand::Class { file } => {
            let alg = algebra_from_json(&read(file)?)?;
            let rep = alg.nilpotency_class();
            Outcome::new(
                "lie class",
                json!({"file": file.display().to_string()}),
                json!({
                    "series_dims": rep.series_dims,
                    "verdict": verdict_json(rep.verdict),
                    "class": rep.class(),
                }),
            )
        }
        LieCommand::Derivation {
            file,
            map,
            order_cap,
        } => {
            let alg = algebra_from_json(&read(file)?)?;
            let d = map_from_json(&read(map)?)?;
            let violation = alg.derivation_violation(&d)?;
            let order = map_order(&d, *order_cap)?;
            Outcome::new(
                "lie derivation",
                json!({"file": file.display().to_string(), "map": map.display().to_string()}),
                json!({
                    "derivation": violation.is_none(),
                    "violation": violation.map(|(i, j)| json!([i, j])),
                    "order": order,
                }),
            )
            .negative_if(violation.is_some())
        }
        LieCommand::Witness { n, p, exact_order } => {
            let n = positive(*n)?;
            let inputs = json!({"n": n, "p": p, "exact_order": exact_order});
            let Some(w) = build_witness(n, *p, cap_k)? else {
                return Ok(Outcome::new("lie witness", inputs, Value::Null).negative_if(true));
            };
            let (alg, d) = if *exact_order {
                pad_to_exact_order(&w.algebra, &w.derivation, n)?
            } else {
                (w.algebra, w.derivation)
            };
            let annihilated = poly_annihilates(&FpPoly::x_pow_minus_one(*p, n as usize), &d)?;
            let order = map_order(&d, n)?;
            let rep = alg.nilpotency_class();
            Outcome::new(
                "lie witness",
                inputs,
                json!({
                    "algebra": algebra_to_json(&alg),
                    "derivation": map_to_json(&d),
                    "is_derivation": alg.is_derivation(&d)?,
                    "annihilated_by": format!("t^{n}-1"),
                    "annihilated": annihilated,
                    "order": order,
                    "nilpotency": verdict_json(rep.verdict),
                }),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(seed) = cli.seed {
        set_seed_override(seed);
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            let elapsed = if cli.timing { start.elapsed().as_millis() } else { 0 };
            let format = cli.format.unwrap_or(if out.table.is_some() && out.command == "tables" {
                Format::Md
            } else {
                Format::Json
            });
            let env = envelope(&out.command, out.inputs, out.result, elapsed);
            print!("{}", render(format, &env, out.table.as_ref()));
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("derinv: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("derinv: {msg}");
            ExitCode::from(3)
        }
    }
}
