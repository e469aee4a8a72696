//! The ten acceptance criteria as check lists, shared by the acceptance
//! target and the `verify-all` command.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adjoint;
use crate::coeff::{ParamBundle, RingElement, Specialization};
use crate::error::Result;
use crate::functor::functor_suite;
use crate::mult;
use crate::rep::{self, AlgebraKind, Variant};
use crate::report::{CheckReport, Source};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Blob parameters `m` for the rank experiments.
    pub ms: Vec<i64>,
    pub tl_max: usize,
    pub blob_max: usize,
    /// Random specializations per level for the blob rank.
    pub samples: usize,
    /// Random specializations for the specialized relation checks.
    pub relation_specs: usize,
    pub rst_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            ms: vec![2, 3],
            tl_max: 8,
            blob_max: 5,
            samples: 3,
            relation_specs: 5,
            rst_samples: 25,
        }
    }
}

pub const CRITERIA: [&str; 10] = [
    "relations hold",
    "rst identity",
    "functor suite",
    "TL image ranks and S'",
    "blob image rank equals r_n",
    "E_n claims i-iv",
    "printed tables",
    "dimension identities",
    "commutant spot check",
    "rho' ranks (report-only)",
];

fn rng_for(cfg: &VerifyConfig, k: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(1_000_003).wrapping_add(k))
}

/// Draw `count` valid points for `m`, or a skip report explaining why not.
fn random_specs(rng: &mut ChaCha8Rng, m: i64, count: usize) -> std::result::Result<Vec<Specialization>, String> {
    (0..count)
        .map(|_| Specialization::random(rng, m).map_err(|e| e.to_string()))
        .collect()
}

fn skip(name: &str, m: i64, why: String) -> CheckReport {
    CheckReport::new(name, Source::Certificate).param("m", m).skipped(why)
}

/// A fixed valid point for the checks that need only one.
pub fn default_spec(m: i64) -> Result<Specialization> {
    let spec = Specialization::rational(num_rational::BigRational::new(5.into(), 3.into()), m)?;
    spec.validate()?;
    Ok(spec)
}

fn relations(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for m in 1..=4 {
        let p = ParamBundle::<RingElement>::generic(m);
        for n in 1..=3.min(cfg.blob_max) {
            out.extend(rep::relation_suite(&rep::build_blob(n, &p, Variant::Rho)?)?);
        }
    }
    let p = ParamBundle::<RingElement>::generic(2);
    let tl: Vec<Vec<CheckReport>> = (2..=cfg.tl_max)
        .into_par_iter()
        .map(|n| rep::relation_suite(&rep::build_tl(n, &p)?))
        .collect::<Result<_>>()?;
    out.extend(tl.into_iter().flatten());
    let mut rng = rng_for(cfg, 1);
    for &m in &cfg.ms {
        let specs = match random_specs(&mut rng, m, cfg.relation_specs) {
            Ok(s) => s,
            Err(why) => {
                out.push(skip("relations at random points", m, why));
                continue;
            }
        };
        for spec in specs {
            let params = ParamBundle::specialized(&spec)?;
            let per_n: Vec<Vec<CheckReport>> = (1..=cfg.blob_max)
                .into_par_iter()
                .map(|n| {
                    let reps = rep::relation_suite(&rep::build_blob(n, &params, Variant::Rho)?)?;
                    Ok(reps.into_iter().map(|r| r.param("spec", &spec)).collect())
                })
                .collect::<Result<_>>()?;
            out.extend(per_n.into_iter().flatten());
        }
    }
    Ok(out)
}

fn functor(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let spec = default_spec(cfg.ms.first().copied().unwrap_or(2))?;
    let mut jobs: Vec<(AlgebraKind, usize)> = (2..=cfg.blob_max).map(|n| (AlgebraKind::Blob(Variant::Rho), n)).collect();
    jobs.extend((2..=cfg.tl_max).map(|n| (AlgebraKind::Tl, n)));
    let out: Vec<Vec<CheckReport>> = jobs.into_par_iter().map(|(k, n)| functor_suite(k, n, &spec)).collect::<Result<_>>()?;
    Ok(out.into_iter().flatten().collect())
}

fn tl_image(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let spec = default_spec(2)?;
    let per_n: Vec<Vec<CheckReport>> = (2..=cfg.tl_max)
        .into_par_iter()
        .map(|n| adjoint::tl_phi_suite(n, &spec))
        .collect::<Result<_>>()?;
    let mut out: Vec<CheckReport> = per_n.into_iter().flatten().collect();
    let ex1 = adjoint::tl_phi_sector(3, 2, &spec)?;
    out.push(
        CheckReport::new("TL example: n=3, r=2", Source::PaperTable)
            .expected(serde_json::json!({"vectors": 2, "rank": 2}))
            .observed(serde_json::json!({"vectors": ex1.n_vectors, "rank": ex1.rank}))
            .compare(),
    );
    let ex2 = adjoint::tl_phi_sector(4, 2, &spec)?;
    out.push(
        CheckReport::new("TL example: n=4, r=2 has one relation", Source::PaperTable)
            .expected(serde_json::json!({"vectors": 6, "rank": 5, "relations": 1}))
            .observed(serde_json::json!({"vectors": ex2.n_vectors, "rank": ex2.rank, "relations": ex2.n_vectors - ex2.rank}))
            .compare(),
    );
    Ok(out)
}

fn blob_rank(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut rng = rng_for(cfg, 5);
    let mut jobs = Vec::new();
    let mut out = Vec::new();
    for &m in &cfg.ms {
        match random_specs(&mut rng, m, cfg.samples) {
            Ok(specs) => {
                for spec in specs {
                    for n in 2..=cfg.blob_max {
                        jobs.push((n, spec.clone()));
                    }
                }
            }
            Err(why) => out.push(skip("blob: rank of phi_n image", m, why)),
        }
    }
    let reps: Vec<Vec<CheckReport>> = jobs
        .into_par_iter()
        .map(|(n, spec)| {
            let cert = adjoint::blob_phi_rank(n, &spec, Variant::Rho)?;
            Ok(vec![cert.report(), adjoint::quotient_dims(n, cert.rank)?.param("spec", &spec)])
        })
        .collect::<Result<_>>()?;
    out.extend(reps.into_iter().flatten());
    out.push(
        CheckReport::new("r_n recursion values", Source::Recursion)
            .expected(vec![2, 12, 62, 300])
            .observed((2..=5).map(mult::rn).collect::<Result<Vec<_>>>()?)
            .compare(),
    );
    Ok(out)
}

fn en(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for &m in &cfg.ms {
        let spec = match default_spec(m) {
            Ok(s) => s,
            Err(e) => {
                out.push(skip("E_n claims", m, e.to_string()));
                continue;
            }
        };
        let per_n: Vec<Vec<CheckReport>> = (2..=cfg.blob_max)
            .into_par_iter()
            .map(|n| adjoint::en_claims(n, &spec))
            .collect::<Result<_>>()?;
        out.extend(per_n.into_iter().flatten());
    }
    Ok(out)
}

fn tables() -> Result<Vec<CheckReport>> {
    mult::check_tables()
}

fn identities() -> Result<Vec<CheckReport>> {
    let mut out = mult::check_dimension_identities(10)?;
    let v = mult::v_table(4)?;
    let small: Vec<i128> = (0..=4i64)
        .map(|n| (-n..=n).step_by(2).map(|mu| v.value(mu) as i128 * mult::blob_standard_dim(n, mu)).sum())
        .collect();
    out.push(
        CheckReport::new("sum v(mu) dim Delta_n(mu) for n <= 4", Source::PaperTable)
            .expected(vec![1, 4, 16, 64, 256])
            .observed(small.iter().map(|x| *x as i64).collect::<Vec<_>>())
            .compare(),
    );
    out.push(mult::check_rank_identity(10)?);
    out.extend(mult::restriction_consistency(5)?);
    Ok(out)
}

fn commutant(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let spec = default_spec(cfg.ms.first().copied().unwrap_or(2))?;
    Ok(vec![rep::commutant_report(1, &spec)?, rep::commutant_report(2, &spec)?])
}

fn rho_prime(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for &m in &cfg.ms {
        let spec = match default_spec(m) {
            Ok(s) => s,
            Err(e) => {
                out.push(skip("blob rho': rank of phi_n image", m, e.to_string()));
                continue;
            }
        };
        for n in 2..=4.min(cfg.blob_max) {
            out.push(adjoint::blob_phi_rank(n, &spec, Variant::RhoPrime)?.report());
        }
    }
    Ok(out)
}

/// Checks for criterion `k` (1-based).
pub fn criterion(k: usize, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    match k {
        1 => relations(cfg),
        2 => rep::rst_suite(cfg.rst_samples, cfg.seed),
        3 => functor(cfg),
        4 => tl_image(cfg),
        5 => blob_rank(cfg),
        6 => en(cfg),
        7 => tables(),
        8 => identities(),
        9 => commutant(cfg),
        10 => rho_prime(cfg),
        _ => Err(crate::Error::OutOfRange {
            what: "criterion",
            value: k as i64,
        }),
    }
}
