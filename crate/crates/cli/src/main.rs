use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use blobtilt::adjoint;
use blobtilt::coeff::{parse_rational, ParamBundle, RingElement, Specialization, XValue};
use blobtilt::functor::functor_suite;
use blobtilt::mult::{self, MultiplicityTable};
use blobtilt::rep::{self, AlgebraKind, Variant};
use blobtilt::report::{sort_reports, CheckReport, Summary};
use blobtilt::verify::{self, VerifyConfig};
use blobtilt::Error;

mod output;

/// Exact verification of tensor-space tilting for Temperley-Lieb and blob algebras.
#[derive(Parser, Debug, Serialize)]
#[command(name = "blobtilt", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for random specializations.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// Worker threads; BLOBTILT_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Record wall time per check.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    Tl,
    Blob,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum VariantArg {
    Rho,
    RhoPrime,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Rho => Variant::Rho,
            VariantArg::RhoPrime => Variant::RhoPrime,
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct Target {
    #[arg(long, value_enum, default_value_t = Kind::Blob)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = VariantArg::Rho)]
    variant: VariantArg,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: i64,
    /// `x=p/q`, `p/q`, `x=zeta^k[,M=N]`, or `random`.
    #[arg(long, default_value = "x=5/3")]
    spec: String,
}

impl Target {
    fn kind(&self) -> AlgebraKind {
        match self.kind {
            Kind::Tl => AlgebraKind::Tl,
            Kind::Blob => AlgebraKind::Blob(self.variant.into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
enum Which {
    V,
    VPrime,
    #[value(name = "vM", alias = "vm")]
    #[serde(rename = "vM")]
    VM,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Defining relations, weight sectors, symmetry and restriction.
    Relations {
        #[command(flatten)]
        target: Target,
        /// Check over the generic ring instead of at a specialization.
        #[arg(long)]
        generic: bool,
    },
    /// The rst identity on seeded random tuples.
    Rst {
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
    /// Localization idempotent and embedding checks.
    Functor {
        #[command(flatten)]
        target: Target,
    },
    /// Rank of the image of the adjointness map.
    Phi {
        #[command(flatten)]
        target: Target,
        /// Temperley-Lieb: every weight sector (default).
        #[arg(long)]
        all_sectors: bool,
        /// Temperley-Lieb: a single weight sector.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Claims i-iv for the basis E_n.
    En {
        #[command(flatten)]
        target: Target,
    },
    /// Multiplicity tables and dimension identities.
    Tables {
        #[arg(long, value_enum, default_value_t = Which::VM)]
        which: Which,
        #[arg(long, default_value_t = 5)]
        range: usize,
        #[arg(long)]
        check_dims: bool,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Directory for CSV and JSON table artifacts.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Commutant dimension of the blob generators.
    Commutant {
        #[command(flatten)]
        target: Target,
    },
    /// Every check, grouped by acceptance criterion.
    VerifyAll {
        /// Restrict the rank experiments to one `m` (default 2 and 3).
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value_t = 8)]
        tl_max: usize,
        #[arg(long, default_value_t = 5)]
        blob_max: usize,
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
}

/// Failure before any verdict: bad configuration or an engine error.
struct ConfigError(String);

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError(e.to_string())
    }
}

fn parse_spec(desc: &str, m: i64, rng: &mut ChaCha8Rng) -> Result<Specialization, ConfigError> {
    let desc = desc.trim();
    if desc == "random" {
        return Ok(Specialization::random(rng, m)?);
    }
    let mut x = None;
    let mut conductor = 8u32;
    for part in desc.split(',') {
        let (k, v) = part.split_once('=').unwrap_or(("x", part));
        match k.trim() {
            "x" => x = Some(v.trim().to_string()),
            "M" => conductor = v.trim().parse().map_err(|_| ConfigError(format!("bad conductor {v:?}")))?,
            other => return Err(ConfigError(format!("unknown spec key {other:?}"))),
        }
    }
    let x = x.ok_or_else(|| ConfigError("spec needs x".into()))?;
    let xv = match x.strip_prefix("zeta^") {
        Some(k) => XValue::Root(k.parse().map_err(|_| ConfigError(format!("bad root exponent {k:?}")))?),
        None => XValue::Rational(parse_rational(&x)?),
    };
    Ok(Specialization::new(conductor, xv, m)?)
}

fn valid_spec(t: &Target, rng: &mut ChaCha8Rng) -> Result<Specialization, ConfigError> {
    let spec = parse_spec(&t.spec, t.m, rng)?;
    spec.validate()?;
    Ok(spec)
}

fn timed(timings: bool, f: impl FnOnce() -> blobtilt::Result<Vec<CheckReport>>) -> Result<Vec<CheckReport>, ConfigError> {
    let t = Instant::now();
    let mut reps = f()?;
    if timings {
        let ms = t.elapsed().as_millis() as u64;
        for r in &mut reps {
            r.wall_ms = Some(ms);
        }
    }
    Ok(reps)
}

fn tables(
    which: Which,
    range: usize,
    check_dims: bool,
    n_max: usize,
    out: &Option<PathBuf>,
) -> Result<(Vec<CheckReport>, MultiplicityTable), ConfigError> {
    let (mut reps, table) = match which {
        Which::V => (mult::check_v(range)?, mult::v_table(range)?),
        Which::VPrime => (mult::check_v_prime(range)?, mult::v_prime_table(range)?),
        Which::VM => {
            let r = range.max(2);
            let mut reps = mult::check_vm(r)?;
            reps.extend(mult::restriction_consistency(r)?);
            (reps, mult::vm_table(2 * r, r)?)
        }
    };
    if check_dims {
        reps.extend(mult::check_dimension_identities(n_max)?);
        reps.push(mult::check_rank_identity(n_max.max(1))?);
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| ConfigError(format!("{}: {e}", dir.display())))?;
        let stem = match which {
            Which::V => "v",
            Which::VPrime => "v_prime",
            Which::VM => "v_M",
        };
        let write = |name: String, body: String| {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
        };
        write(format!("{stem}.csv"), table.to_csv())?;
        write(format!("{stem}.json"), serde_json::to_string_pretty(&table.to_json()).expect("json") + "\n")?;
    }
    Ok((reps, table))
}

fn run(cli: &Cli) -> Result<(Vec<CheckReport>, Option<MultiplicityTable>), ConfigError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let tm = cli.timings;
    let reps = match &cli.command {
        Command::Relations { target, generic } => {
            let kind = target.kind();
            if *generic {
                let p = ParamBundle::<RingElement>::generic(target.m);
                timed(tm, || rep::relation_suite(&rep::build(kind, target.n, &p)?))?
            } else {
                let spec = parse_spec(&target.spec, target.m, &mut rng)?;
                let p = ParamBundle::specialized_unchecked(&spec);
                timed(tm, || {
                    Ok(rep::relation_suite(&rep::build(kind, target.n, &p)?)?
                        .into_iter()
                        .map(|r| r.param("spec", &spec))
                        .collect())
                })?
            }
        }
        Command::Rst { samples } => timed(tm, || rep::rst_suite(*samples, cli.seed))?,
        Command::Functor { target } => {
            let spec = valid_spec(target, &mut rng)?;
            timed(tm, || functor_suite(target.kind(), target.n, &spec))?
        }
        Command::Phi { target, all_sectors, r } => {
            let spec = valid_spec(target, &mut rng)?;
            match target.kind() {
                AlgebraKind::Tl => {
                    let n = target.n;
                    match (r, all_sectors) {
                        (Some(r), false) => timed(tm, || {
                            let s = adjoint::tl_phi_sector(n, *r, &spec)?;
                            Ok(vec![CheckReport::new("TL: rank of phi_n on sector r", blobtilt::report::Source::Certificate)
                                .param("n", n)
                                .param("r", *r)
                                .param("spec", &spec)
                                .param("n_vectors", s.n_vectors)
                                .expected(s.expected)
                                .observed(s.rank)
                                .compare()])
                        })?,
                        _ => timed(tm, || adjoint::tl_phi_suite(n, &spec))?,
                    }
                }
                AlgebraKind::Blob(v) => timed(tm, || {
                    let cert = adjoint::blob_phi_rank(target.n, &spec, v)?;
                    let mut out = vec![cert.report()];
                    if v == Variant::Rho {
                        out.push(adjoint::quotient_dims(target.n, cert.rank)?.param("spec", &spec));
                    }
                    Ok(out)
                })?,
            }
        }
        Command::En { target } => {
            let spec = valid_spec(target, &mut rng)?;
            timed(tm, || adjoint::en_claims(target.n, &spec))?
        }
        Command::Tables { which, range, check_dims, n_max, out } => {
            let (reps, table) = tables(*which, *range, *check_dims, *n_max, out)?;
            return Ok((reps, Some(table)));
        }
        Command::Commutant { target } => {
            let spec = valid_spec(target, &mut rng)?;
            timed(tm, || Ok(vec![rep::commutant_report(target.n, &spec)?]))?
        }
        Command::VerifyAll { m, tl_max, blob_max, samples } => {
            let cfg = VerifyConfig {
                seed: cli.seed,
                ms: m.map(|m| vec![m]).unwrap_or_else(|| vec![2, 3]),
                tl_max: *tl_max,
                blob_max: *blob_max,
                samples: *samples,
                ..VerifyConfig::default()
            };
            let mut all = Vec::new();
            for k in 1..=verify::CRITERIA.len() {
                let reps = timed(tm, || verify::criterion(k, &cfg))?;
                all.extend(reps.into_iter().map(|r| r.param("criterion", k)));
            }
            all
        }
    };
    Ok((reps, None))
}

fn init_threads(flag: Option<usize>) -> Result<(), ConfigError> {
    let env = match std::env::var("BLOBTILT_THREADS") {
        Ok(s) => Some(s.trim().parse::<usize>().map_err(|_| ConfigError(format!("BLOBTILT_THREADS={s:?} is not a count")))?),
        Err(_) => None,
    };
    if let Some(n) = env.or(flag) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| ConfigError(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(ConfigError(msg)) = init_threads(cli.threads) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok((mut reps, table)) => {
            sort_reports(&mut reps);
            let summary = Summary::of(&reps);
            let config = serde_json::to_value(&cli).expect("config");
            print!("{}", output::render(cli.format, &config, &reps, &summary, table.as_ref()));
            if summary.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
