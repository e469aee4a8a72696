//! The localization idempotent `eps = U_{n-1} / [2]_q` and the embedding of
//! level `n-2` tensor space onto its image.
//!
//! For Temperley-Lieb, `iota(w) = w ⊗ w_2` with `w_2 = q 12 + 21` on the last
//! two sites. For the blob algebra, `iota(w) = ev_1 ⊗ w ⊗ ev_2` where `ev_1`
//! and `ev_2` span the top eigenspaces of `U^s` and `U^t` on the outer pairs.
//! Both are scaled to have coefficient `s` (resp. `t`) on the word `12`.

use std::sync::Arc;

use crate::coeff::{CyclotomicField, FieldElement, ParamBundle, Specialization};
use crate::error::{Error, Result};
use crate::linalg::{dense, Echelon, SparseOperator, SparseVector};
use crate::rep::{build, AlgebraKind, GeneratorSet, SiteMatrix};
use crate::report::{CheckReport, Source};
use crate::scalar::Scalar;
use crate::words::enumerate_sector;

/// `eps = U_{n-1} / [2]_q` at level `n`.
#[derive(Clone, Debug)]
pub struct Idempotent {
    pub n: usize,
    pub kind: AlgebraKind,
    pub op: SparseOperator<FieldElement>,
}

/// Build `eps`; checks `eps^2 = eps` on construction.
pub fn make_epsilon(gens: &GeneratorSet<FieldElement>) -> Result<Idempotent> {
    if gens.n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: gens.n as i64,
        });
    }
    let inv = gens
        .params
        .q2
        .inverse()
        .map_err(|_| Error::DegenerateParameter("[2]_q = 0".into()))?;
    let op = gens.u(gens.n - 1).scale(&inv);
    if op.compose(&op)? != op {
        return Err(Error::CheckFailed("eps^2 != eps".into()));
    }
    Ok(Idempotent {
        n: gens.n,
        kind: gens.kind,
        op,
    })
}

impl Idempotent {
    pub fn field(&self) -> Arc<CyclotomicField> {
        first_field(self.op.columns()).expect("eps is nonzero")
    }

    /// Rank of `eps` on the whole space.
    pub fn rank(&self) -> Result<usize> {
        columns_rank(&self.field(), self.op.columns().iter())
    }

    /// Rank of `eps` restricted to the weight-`r` sector.
    pub fn sector_rank(&self, sites: usize, r: usize) -> Result<usize> {
        let sector = enumerate_sector(sites, r)?;
        columns_rank(&self.field(), sector.words.iter().map(|w| self.op.column(w.index())))
    }
}

fn first_field(vs: &[SparseVector<FieldElement>]) -> Option<Arc<CyclotomicField>> {
    vs.iter().find_map(|v| v.iter().next().map(|(_, c)| Arc::clone(c.field())))
}

fn columns_rank<'a>(
    field: &Arc<CyclotomicField>,
    cols: impl Iterator<Item = &'a SparseVector<FieldElement>>,
) -> Result<usize> {
    let mut ech: Option<Echelon> = None;
    for c in cols {
        if c.is_zero() {
            continue;
        }
        let e = ech.get_or_insert_with(|| Echelon::new(field, c.dim()));
        e.insert(c)?;
    }
    Ok(ech.map_or(0, |e| e.rank()))
}

/// The functor `F`: `v -> eps v`.
pub fn f_apply(eps: &Idempotent, v: &SparseVector<FieldElement>) -> Result<SparseVector<FieldElement>> {
    eps.op.apply(v)
}

/// Spanning vector of the eigenvalue-`[2]_q` eigenspace of `U^q`, scaled to
/// have coefficient `q` on `12`.
pub fn top_eigenvector(field: &Arc<CyclotomicField>, q: &FieldElement) -> Result<SparseVector<FieldElement>> {
    let q_inv = q.inverse()?;
    let q2 = q + &q_inv;
    let u = SiteMatrix::plain(q, &q_inv).to_operator();
    let shifted = u.sub(&SparseOperator::identity(4, &q2));
    let ns = dense::nullspace(field, &dense::to_dense(&shifted, field), 4)?;
    if ns.len() != 1 {
        return Err(Error::CheckFailed(format!(
            "eigenspace for [2]_q has dimension {}",
            ns.len()
        )));
    }
    let v = &ns[0];
    let scale = q.div(&v[1])?;
    Ok(SparseVector::from_entries(
        4,
        v.iter().enumerate().map(|(i, c)| (i, c * &scale)),
    ))
}

/// `(ev_1, ev_2)` for the blob embedding, solved from `U^s` and `U^t`.
pub fn eigenvector_pair(params: &ParamBundle<FieldElement>) -> Result<(SparseVector<FieldElement>, SparseVector<FieldElement>)> {
    let field = Arc::clone(params.q.field());
    Ok((top_eigenvector(&field, &params.s)?, top_eigenvector(&field, &params.t)?))
}

/// `w_2 = q 12 + 21`.
pub fn tl_w2(params: &ParamBundle<FieldElement>) -> SparseVector<FieldElement> {
    SparseVector::from_entries(4, [(1, params.q.clone()), (2, params.q.one_like())])
}

/// Characteristic polynomial of `U^q / [2]_q` on `V ⊗ V`.
pub fn pair_charpoly(q: &FieldElement) -> Result<Vec<FieldElement>> {
    let field = Arc::clone(q.field());
    let q_inv = q.inverse()?;
    let q2_inv = (q + &q_inv).inverse()?;
    let p = SiteMatrix::plain(q, &q_inv).to_operator().scale(&q2_inv);
    Ok(dense::charpoly(&field, &dense::to_dense(&p, &field)))
}

/// The linear map `iota` from level `n-2` into level `n`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub kind: AlgebraKind,
    pub n: usize,
    /// `ev_1` (blob only).
    pub left: Option<SparseVector<FieldElement>>,
    /// `w_2` (Temperley-Lieb) or `ev_2` (blob).
    pub right: SparseVector<FieldElement>,
    source_sites: usize,
    target_sites: usize,
}

impl Embedding {
    pub fn new(kind: AlgebraKind, n: usize, params: &ParamBundle<FieldElement>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
            });
        }
        match kind {
            AlgebraKind::Tl => Ok(Embedding {
                kind,
                n,
                left: None,
                right: tl_w2(params),
                source_sites: n - 2,
                target_sites: n,
            }),
            AlgebraKind::Blob(_) => {
                let (ev1, ev2) = eigenvector_pair(params)?;
                Ok(Embedding {
                    kind,
                    n,
                    left: Some(ev1),
                    right: ev2,
                    source_sites: 2 * n - 4,
                    target_sites: 2 * n,
                })
            }
        }
    }

    pub fn source_dim(&self) -> usize {
        1 << self.source_sites
    }

    pub fn target_dim(&self) -> usize {
        1 << self.target_sites
    }

    /// `iota` of the basis word with index `w`.
    pub fn basis_image(&self, w: usize) -> SparseVector<FieldElement> {
        let one = self.right.iter().next().expect("nonzero").1.one_like();
        let mid = SparseVector::basis(self.source_dim(), w, one);
        let inner = mid.kron(&self.right);
        match &self.left {
            Some(l) => l.kron(&inner),
            None => inner,
        }
    }

    pub fn apply(&self, v: &SparseVector<FieldElement>) -> Result<SparseVector<FieldElement>> {
        if v.dim() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                found: v.dim(),
            });
        }
        let mut out = SparseVector::zero(self.target_dim());
        for (w, c) in v.iter() {
            for (i, x) in self.basis_image(w).iter() {
                out.add_at(i, &x.mul(c));
            }
        }
        Ok(out)
    }
}

fn kind_params(kind: AlgebraKind, n: usize, spec: &Specialization) -> Vec<(&'static str, serde_json::Value)> {
    vec![
        ("kind", kind.to_string().into()),
        ("n", n.into()),
        ("spec", serde_json::to_value(spec).expect("spec")),
    ]
}

fn with_params(mut r: CheckReport, ps: &[(&'static str, serde_json::Value)]) -> CheckReport {
    for (k, v) in ps {
        r = r.param(k, v);
    }
    r
}

/// `g_n ∘ iota = iota ∘ g_{n-2}` for every generator of the level `n-2`
/// algebra (Temperley-Lieb: `U_1..U_{n-3}`; blob: `e, U_1..U_{n-3}`).
pub fn check_intertwining(
    upper: &GeneratorSet<FieldElement>,
    lower: &GeneratorSet<FieldElement>,
    emb: &Embedding,
) -> Result<CheckReport> {
    let mut pairs: Vec<(String, &SparseOperator<FieldElement>, &SparseOperator<FieldElement>)> = Vec::new();
    if let (Some(e), Some(le)) = (&upper.e, &lower.e) {
        pairs.push(("e".into(), e, le));
    }
    for i in 1..lower.n {
        pairs.push((format!("U{i}"), upper.u(i), lower.u(i)));
    }
    let mut bad = Vec::new();
    for (name, g, lg) in &pairs {
        for w in 0..emb.source_dim() {
            let lhs = g.apply(&emb.basis_image(w))?;
            let rhs = emb.apply(lg.column(w))?;
            if lhs != rhs {
                bad.push(name.clone());
                break;
            }
        }
    }
    let mut rep = CheckReport::new("iota intertwines level n-2 generators", Source::Identity)
        .param("kind", upper.kind.to_string())
        .param("n", upper.n)
        .expected(pairs.len())
        .observed(pairs.len() - bad.len())
        .compare();
    if !bad.is_empty() {
        rep = rep.note(format!("fails for {}", bad.join(", ")));
    }
    Ok(rep)
}

fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || k > n {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c as usize
}

/// Expected rank of `eps` on the weight-`r` sector at level `n`.
pub fn expected_sector_rank(kind: AlgebraKind, n: usize, r: usize) -> usize {
    match kind {
        AlgebraKind::Tl => binomial(n as i64 - 2, r as i64 - 1),
        AlgebraKind::Blob(_) => binomial(2 * n as i64 - 4, r as i64 - 2),
    }
}

/// All functor checks at level `n`: idempotency, the two-site spectrum,
/// `rank eps`, the embedding (injective, fixed by `eps`, onto `image eps`),
/// sector compatibility and, for `n >= 3`, intertwining.
pub fn functor_suite(kind: AlgebraKind, n: usize, spec: &Specialization) -> Result<Vec<CheckReport>> {
    let ps = kind_params(kind, n, spec);
    let params = ParamBundle::specialized(spec)?;
    let gens = build(kind, n, &params)?;
    let field = Arc::clone(spec.field());
    let mut out = Vec::new();

    let eps = make_epsilon(&gens)?;
    out.push(with_params(
        CheckReport::new("eps^2 = eps", Source::Identity).pass_if(eps.op.compose(&eps.op)? == eps.op),
        &ps,
    ));

    // z^4 - z^3 on every affected pair
    let target = vec![field.zero(), field.zero(), field.zero(), field.integer(-1), field.one()];
    let pair_qs: Vec<&FieldElement> = match kind {
        AlgebraKind::Tl => vec![&params.q],
        AlgebraKind::Blob(_) => vec![&params.s, &params.t],
    };
    let mut spectra = Vec::new();
    for q in pair_qs {
        spectra.push(pair_charpoly(q)? == target);
    }
    out.push(with_params(
        CheckReport::new("pair spectrum of eps is {1,0,0,0}", Source::Identity)
            .expected(spectra.len())
            .observed(spectra.iter().filter(|b| **b).count())
            .compare(),
        &ps,
    ));

    let rank = eps.rank()?;
    let expected_rank = match kind {
        AlgebraKind::Tl => 1usize << (n - 2),
        AlgebraKind::Blob(_) => 1usize << (2 * n - 4),
    };
    out.push(with_params(
        CheckReport::new("rank eps", Source::Identity)
            .expected(expected_rank)
            .observed(rank)
            .compare(),
        &ps,
    ));

    let emb = Embedding::new(kind, n, &params)?;
    let images: Vec<SparseVector<FieldElement>> = (0..emb.source_dim()).map(|w| emb.basis_image(w)).collect();
    let mut fixed = 0;
    for v in &images {
        if f_apply(&eps, v)? == *v {
            fixed += 1;
        }
    }
    out.push(with_params(
        CheckReport::new("eps fixes image of iota", Source::Identity)
            .expected(images.len())
            .observed(fixed)
            .compare(),
        &ps,
    ));
    let iota_rank = columns_rank(&field, images.iter())?;
    out.push(with_params(
        CheckReport::new("iota is injective onto image eps", Source::Identity)
            .expected(serde_json::json!({"rank_iota": emb.source_dim(), "rank_eps": emb.source_dim()}))
            .observed(serde_json::json!({"rank_iota": iota_rank, "rank_eps": rank}))
            .compare(),
        &ps,
    ));

    let mut sector_ok = 0;
    let mut mismatch = Vec::new();
    for r in 0..=gens.sites {
        let got = eps.sector_rank(gens.sites, r)?;
        if got == expected_sector_rank(kind, n, r) {
            sector_ok += 1;
        } else {
            mismatch.push(format!("r={r}: {got}"));
        }
    }
    let mut sec = CheckReport::new("eps sector ranks match level n-2 sectors", Source::Identity)
        .expected(gens.sites + 1)
        .observed(sector_ok)
        .compare();
    if !mismatch.is_empty() {
        sec = sec.note(mismatch.join("; "));
    }
    out.push(with_params(sec, &ps));

    if n >= 3 {
        let lower = build(kind, n - 2, &params)?;
        out.push(with_params(check_intertwining(&gens, &lower, &emb)?, &[("spec", ps[2].1.clone())]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_blob, build_tl, Variant};
    use num_rational::BigRational;

    fn spec(p: i64, q: i64, m: i64) -> Specialization {
        Specialization::rational(BigRational::new(p.into(), q.into()), m).unwrap()
    }

    #[test]
    fn epsilon_at_level_two() {
        let s = spec(5, 3, 2);
        let p = ParamBundle::specialized(&s).unwrap();
        let eps = make_epsilon(&build_tl(2, &p).unwrap()).unwrap();
        assert_eq!(eps.rank().unwrap(), 1);
        let eps = make_epsilon(&build_blob(2, &p, Variant::Rho).unwrap()).unwrap();
        assert_eq!(eps.rank().unwrap(), 1);
    }

    #[test]
    fn epsilon_rejects_degenerate_q() {
        let s = Specialization::new(8, crate::coeff::XValue::Root(1), 2).unwrap();
        let p = ParamBundle::specialized_unchecked(&s);
        let g = build_tl(3, &p).unwrap();
        assert!(matches!(make_epsilon(&g), Err(Error::DegenerateParameter(_))));
    }

    #[test]
    fn eigenvectors_are_solved_not_assumed() {
        let s = spec(7, 2, 3);
        let p = ParamBundle::specialized(&s).unwrap();
        let (ev1, ev2) = eigenvector_pair(&p).unwrap();
        let one = s.field().one();
        // oracle: s 12 + 21 and t 12 + 21
        assert_eq!(ev1, SparseVector::from_entries(4, [(1, p.s.clone()), (2, one.clone())]));
        assert_eq!(ev2, SparseVector::from_entries(4, [(1, p.t.clone()), (2, one)]));
        // the Temperley-Lieb vector agrees with the solved one
        assert_eq!(tl_w2(&p), top_eigenvector(s.field(), &p.q).unwrap());
    }

    #[test]
    fn pair_spectrum() {
        let s = spec(2, 1, 2);
        let p = pair_charpoly(&s.q_value()).unwrap();
        let k = s.field();
        assert_eq!(p, vec![k.zero(), k.zero(), k.zero(), k.integer(-1), k.one()]);
    }

    #[test]
    fn embedding_dimensions() {
        let s = spec(3, 2, 2);
        let p = ParamBundle::specialized(&s).unwrap();
        let e = Embedding::new(AlgebraKind::Blob(Variant::Rho), 3, &p).unwrap();
        assert_eq!((e.source_dim(), e.target_dim()), (4, 64));
        // iota(11) = ev1 ⊗ 11 ⊗ ev2 has four terms, the st one at 12 11 12
        let v = e.basis_image(0);
        assert_eq!(v.nnz(), 4);
        let idx = "121112".parse::<crate::words::Word>().unwrap().index();
        assert_eq!(v.get(idx), Some(&(&p.s * &p.t)));
        let t = Embedding::new(AlgebraKind::Tl, 3, &p).unwrap();
        assert_eq!((t.source_dim(), t.target_dim()), (2, 8));
    }

    #[test]
    fn suites_pass_small_levels() {
        let s = spec(5, 3, 2);
        for n in 2..=5 {
            for r in functor_suite(AlgebraKind::Tl, n, &s).unwrap() {
                assert!(r.passed(), "{}", r.line());
            }
        }
        for n in 2..=3 {
            for r in functor_suite(AlgebraKind::Blob(Variant::Rho), n, &s).unwrap() {
                assert!(r.passed(), "{}", r.line());
            }
        }
    }

    #[test]
    fn sector_rank_formula_small_cases() {
        // blob n=2: only the weight-2 sector survives
        let k = AlgebraKind::Blob(Variant::Rho);
        let ranks: Vec<usize> = (0..=4).map(|r| expected_sector_rank(k, 2, r)).collect();
        assert_eq!(ranks, [0, 0, 1, 0, 0]);
        let ranks: Vec<usize> = (0..=4).map(|r| expected_sector_rank(AlgebraKind::Tl, 4, r)).collect();
        assert_eq!(ranks, [0, 1, 2, 1, 0]);
    }
}
