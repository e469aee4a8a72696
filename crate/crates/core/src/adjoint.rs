//! Spanning sets for the image of the adjointness map `phi_n`, their ranks,
//! and the explicit bases `S'` (Temperley-Lieb) and `E_n` (blob).
//!
//! The image of `phi_n` is `b_n eps V`, spanned by `X (1_2 w 1_2)` where the
//! seed is `iota(w)` and `X` runs over the chain
//! `1, U_{n-2}, U_{n-3} U_{n-2}, ..., U_0 U_1 ... U_{n-2}` (blob, `U_0 = a^2 e`)
//! or `1, U_{n-2}, ..., U_1 ... U_{n-2}` (Temperley-Lieb).

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{FieldElement, ParamBundle, RingElement, Specialization};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseOperator, SparseVector};
use crate::mult::{binomial, rn as rn_value, v_table};
use crate::rep::{build_blob, build_tl, AlgebraKind, GeneratorSet, Variant};
use crate::report::{CheckReport, Source};
use crate::scalar::Scalar;
use crate::words::{enumerate_sector, u_map, Word};

pub use crate::mult::rn;

/// Which parameter multiplies the `12` term of a marked pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkKind {
    Q,
    S,
    T,
}

/// A word with marked adjacent pairs, each reading `12` in the host.
/// A mark of kind `c` at `k` stands for `c (..12..) + (..21..)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlineVector {
    pub host: Word,
    /// `(position, kind)`, 1-based positions of the `1`.
    pub marks: Vec<(usize, MarkKind)>,
}

impl UnderlineVector {
    pub fn new(host: Word, marks: Vec<(usize, MarkKind)>) -> Result<Self> {
        for (i, &(k, _)) in marks.iter().enumerate() {
            if k == 0 || k >= host.len() || host.letter(k) != 1 || host.letter(k + 1) != 2 {
                return Err(Error::OutOfRange {
                    what: "mark position",
                    value: k as i64,
                });
            }
            if marks[..i].iter().any(|&(j, _)| j.abs_diff(k) < 2) {
                return Err(Error::OutOfRange {
                    what: "overlapping mark",
                    value: k as i64,
                });
            }
        }
        Ok(UnderlineVector { host, marks })
    }

    /// Single Temperley-Lieb mark: `U_k` applied to `host`.
    pub fn tl(host: Word, k: usize) -> Result<Self> {
        Self::new(host, vec![(k, MarkKind::Q)])
    }

    /// `1_2 w 1_2` with an `s` mark on the left pair and a `t` mark on the right.
    pub fn blob(w: Word) -> Self {
        let l = Word::from_letters(&[1, 2]).expect("letters");
        let host = l.concat(&w).concat(&l);
        let k = host.len() - 1;
        UnderlineVector {
            host,
            marks: vec![(1, MarkKind::S), (k, MarkKind::T)],
        }
    }

    pub fn realize<C: Scalar>(&self, params: &ParamBundle<C>) -> SparseVector<C> {
        let n = self.host.len();
        let one = params.q.one_like();
        let mut terms = vec![(self.host.letters(), one)];
        for &(k, kind) in &self.marks {
            let c = match kind {
                MarkKind::Q => &params.q,
                MarkKind::S => &params.s,
                MarkKind::T => &params.t,
            };
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (letters, coef) in terms {
                let mut flipped = letters.clone();
                flipped.swap(k - 1, k);
                next.push((letters, coef.mul(c)));
                next.push((flipped, coef));
            }
            terms = next;
        }
        SparseVector::from_entries(
            1 << n,
            terms
                .into_iter()
                .map(|(l, c)| (Word::from_letters(&l).expect("letters").index(), c)),
        )
    }
}

impl fmt::Display for UnderlineVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.host.letters();
        let mut p = 1;
        while p <= letters.len() {
            if let Some((_, kind)) = self.marks.iter().find(|(k, _)| *k == p) {
                let tag = match kind {
                    MarkKind::Q => "q",
                    MarkKind::S => "s",
                    MarkKind::T => "t",
                };
                write!(f, "[12]{tag}")?;
                p += 2;
            } else {
                write!(f, "{}", letters[p - 1])?;
                p += 1;
            }
        }
        Ok(())
    }
}

/// `q U_j(w) + U_j(w with 21 at i) = q U_i(w) + U_i(w with 21 at j)` for a
/// word with `12` at both `i` and `j`, `|i - j| >= 2`.
pub fn bythat_identity<C: Scalar>(w: Word, i: usize, j: usize, params: &ParamBundle<C>) -> Result<bool> {
    if i.abs_diff(j) < 2 {
        return Err(Error::OutOfRange {
            what: "mark distance",
            value: i.abs_diff(j) as i64,
        });
    }
    let flip = |k: usize| -> Word {
        let mut l = w.letters();
        l.swap(k - 1, k);
        Word::from_letters(&l).expect("letters")
    };
    UnderlineVector::tl(w, i)?;
    UnderlineVector::tl(w, j)?;
    let lhs = UnderlineVector::tl(w, j)?
        .realize(params)
        .scale(&params.q)
        .add(&UnderlineVector::tl(flip(i), j)?.realize(params));
    let rhs = UnderlineVector::tl(w, i)?
        .realize(params)
        .scale(&params.q)
        .add(&UnderlineVector::tl(flip(j), i)?.realize(params));
    Ok(lhs == rhs)
}

/// Apply `ops` in turn to `seed`, keeping every partial product.
fn chain<C: Scalar>(seed: SparseVector<C>, ops: &[SparseOperator<C>]) -> Result<Vec<SparseVector<C>>> {
    let mut out = Vec::with_capacity(ops.len() + 1);
    let mut v = seed;
    for op in ops {
        let next = op.apply(&v)?;
        out.push(v);
        v = next;
    }
    out.push(v);
    Ok(out)
}

fn echelon_of(field: &std::sync::Arc<crate::coeff::CyclotomicField>, dim: usize, vs: &[SparseVector<FieldElement>]) -> Result<Echelon> {
    let mut ech = Echelon::new(field, dim);
    let mut order: Vec<&SparseVector<FieldElement>> = vs.iter().filter(|v| !v.is_zero()).collect();
    order.sort_by_key(|v| v.nnz());
    for v in order {
        ech.insert(v)?;
    }
    Ok(ech)
}

/// Temperley-Lieb chain `U_{n-2}, U_{n-3}, ..., U_1` applied after the seed.
fn tl_chain_ops(gens: &GeneratorSet<FieldElement>) -> Vec<SparseOperator<FieldElement>> {
    (1..gens.n - 1).rev().map(|i| gens.u(i).clone()).collect()
}

/// The `(n-1) C(n-2, r-1)` vectors `X (w 1_2)` spanning the weight-`r`
/// sector of the image.
pub fn tl_phi_vectors(n: usize, r: usize, params: &ParamBundle<FieldElement>) -> Result<Vec<SparseVector<FieldElement>>> {
    if n < 2 || r > n {
        return Err(Error::OutOfRange { what: "n or r", value: n as i64 });
    }
    let gens = build_tl(n, params)?;
    let ops = tl_chain_ops(&gens);
    if r == 0 || r == n {
        return Ok(Vec::new());
    }
    let tail = Word::from_letters(&[1, 2])?;
    let mut out = Vec::new();
    for w in enumerate_sector(n - 2, r - 1)?.words {
        let seed = UnderlineVector::tl(w.concat(&tail), n - 1)?.realize(params);
        out.extend(chain(seed, &ops)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorRank {
    pub n: usize,
    pub r: usize,
    pub n_vectors: usize,
    pub rank: usize,
    pub expected: usize,
}

pub fn tl_expected_rank(n: usize, r: usize) -> usize {
    if r == 0 || r >= n {
        0
    } else {
        binomial(n as i64, r as i64) as usize - 1
    }
}

pub fn tl_phi_sector(n: usize, r: usize, spec: &Specialization) -> Result<SectorRank> {
    let params = ParamBundle::specialized(spec)?;
    let vs = tl_phi_vectors(n, r, &params)?;
    let rank = echelon_of(spec.field(), 1 << n, &vs)?.rank();
    Ok(SectorRank {
        n,
        r,
        n_vectors: vs.len(),
        rank,
        expected: tl_expected_rank(n, r),
    })
}

/// `S'`: every word of the sector containing `12`, marked at its first `12`.
pub fn tl_sprime_basis(n: usize, r: usize) -> Result<Vec<UnderlineVector>> {
    enumerate_sector(n, r)?
        .words
        .into_iter()
        .filter_map(|w| w.first_12().map(|k| UnderlineVector::tl(w, k)))
        .collect()
}

/// The one word `2^(n-r) 1^r` of the sector without `12`.
pub fn tl_sector_complement(n: usize, r: usize) -> Word {
    let mut l = vec![2u8; n - r];
    l.extend(std::iter::repeat_n(1, r));
    Word::from_letters(&l).expect("letters")
}

/// `|S'| = C(n,r) - 1`, `S'` lies in the image, and `S' ∪ {2^(n-r) 1^r}`
/// has rank `C(n,r)`.
pub fn tl_sprime_report(n: usize, r: usize, spec: &Specialization) -> Result<CheckReport> {
    if r == 0 || r >= n {
        return Err(Error::OutOfRange { what: "r", value: r as i64 });
    }
    let params = ParamBundle::specialized(spec)?;
    let field = spec.field();
    let sp: Vec<SparseVector<FieldElement>> = tl_sprime_basis(n, r)?.iter().map(|u| u.realize(&params)).collect();
    let image = echelon_of(field, 1 << n, &tl_phi_vectors(n, r, &params)?)?;
    let mut in_image = 0;
    for v in &sp {
        if image.contains(v)? {
            in_image += 1;
        }
    }
    let mut all = sp.clone();
    all.push(SparseVector::basis(1 << n, tl_sector_complement(n, r).index(), field.one()));
    let rank = echelon_of(field, 1 << n, &all)?.rank();
    let c = binomial(n as i64, r as i64) as usize;
    Ok(CheckReport::new("TL: S' is a basis of the image, completed by 2..21..1", Source::Identity)
        .param("n", n)
        .param("r", r)
        .expected(serde_json::json!({"size": c - 1, "in_image": c - 1, "rank_with_complement": c}))
        .observed(serde_json::json!({"size": sp.len(), "in_image": in_image, "rank_with_complement": rank}))
        .compare())
}

/// Per-sector rank checks at level `n`, plus `S'` for every proper sector.
pub fn tl_phi_suite(n: usize, spec: &Specialization) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for r in 0..=n {
        let s = tl_phi_sector(n, r, spec)?;
        out.push(
            CheckReport::new("TL: rank of phi_n on sector r", Source::Certificate)
                .param("n", n)
                .param("r", r)
                .param("spec", spec)
                .param("n_vectors", s.n_vectors)
                .expected(s.expected)
                .observed(s.rank)
                .compare(),
        );
        if r > 0 && r < n {
            out.push(tl_sprime_report(n, r, spec)?);
        }
    }
    Ok(out)
}

/// Blob chain `U_{n-2}, U_{n-3}, ..., U_1, U_0`.
fn blob_chain_ops<C: Scalar>(gens: &GeneratorSet<C>) -> Vec<SparseOperator<C>> {
    (0..gens.n - 1).rev().map(|i| gens.chain_generator(i)).collect()
}

/// The realized spanning set of the blob image.
#[derive(Clone, Debug)]
pub struct PhiImage {
    pub n: usize,
    pub kind: AlgebraKind,
    /// Chain labels, `"1"`, `"U2"`, `"U1 U2"`, ...
    pub chain: Vec<String>,
    pub vectors: Vec<SparseVector<FieldElement>>,
    pub rank: usize,
}

/// The `n 4^(n-2)` vectors `X (1_2 w 1_2)`, grouped by seed.
pub fn blob_phi_vectors(gens: &GeneratorSet<FieldElement>) -> Result<Vec<SparseVector<FieldElement>>> {
    if gens.n < 2 || gens.e.is_none() {
        return Err(Error::OutOfRange {
            what: "blob level",
            value: gens.n as i64,
        });
    }
    let ops = blob_chain_ops(gens);
    let mid = 2 * gens.n - 4;
    let per_seed: Vec<Vec<SparseVector<FieldElement>>> = (0..1usize << mid)
        .into_par_iter()
        .map(|w| chain(UnderlineVector::blob(Word::from_index(w, mid)).realize(&gens.params), &ops))
        .collect::<Result<_>>()?;
    Ok(per_seed.into_iter().flatten().collect())
}

pub fn blob_phi_image(n: usize, spec: &Specialization, variant: Variant) -> Result<(PhiImage, Echelon)> {
    let params = ParamBundle::specialized(spec)?;
    let gens = build_blob(n, &params, variant)?;
    let vectors = blob_phi_vectors(&gens)?;
    let ech = echelon_of(spec.field(), gens.dim(), &vectors)?;
    let mut chain = vec!["1".to_string()];
    let mut label = String::new();
    for i in (0..n - 1).rev() {
        label = if label.is_empty() { format!("U{i}") } else { format!("U{i} {label}") };
        chain.push(label.clone());
    }
    Ok((
        PhiImage {
            n,
            kind: AlgebraKind::Blob(variant),
            chain,
            vectors,
            rank: ech.rank(),
        },
        ech,
    ))
}

/// Rank certificate for the blob image at one specialization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub level: usize,
    pub variant: Variant,
    pub spec: Specialization,
    pub n_vectors: usize,
    pub rank: usize,
    /// `r_n` for `rho`; absent for `rho'`, where the answer is open.
    pub expected: Option<usize>,
    /// Full rank at a valid point certifies generic injectivity.
    pub injective: Option<bool>,
}

pub fn blob_phi_rank(n: usize, spec: &Specialization, variant: Variant) -> Result<Certificate> {
    let (img, _) = blob_phi_image(n, spec, variant)?;
    let rn = rn_value(n)? as usize;
    let (expected, injective) = match variant {
        Variant::Rho => (Some(rn), Some(img.rank == rn)),
        Variant::RhoPrime => (None, None),
    };
    Ok(Certificate {
        level: n,
        variant,
        spec: spec.clone(),
        n_vectors: img.vectors.len(),
        rank: img.rank,
        expected,
        injective,
    })
}

impl Certificate {
    pub fn report(&self) -> CheckReport {
        let base = CheckReport::new("blob: rank of phi_n image", Source::Certificate)
            .param("n", self.level)
            .param("variant", self.variant)
            .param("spec", &self.spec)
            .param("n_vectors", self.n_vectors);
        match self.expected {
            Some(e) => base.expected(e).observed(self.rank).compare(),
            None => {
                let rn = rn_value(self.level).unwrap_or(-1);
                base.observed(self.rank)
                    .note(format!("r_n = {rn}, equal: {}", self.rank as i64 == rn))
                    .report_only()
            }
        }
    }
}

/// `4^n - rank = v(n) + v(-n)`.
pub fn quotient_dims(n: usize, rank: usize) -> Result<CheckReport> {
    let v = v_table(n)?;
    let lhs = 4i64.pow(n as u32) - rank as i64;
    let rhs = v.value(n as i64) + v.value(-(n as i64));
    Ok(CheckReport::new("4^n - rank phi_n = v(n) + v(-n)", Source::Recursion)
        .param("n", n)
        .expected(rhs)
        .observed(lhs)
        .compare())
}

/// The basis `E_n` of the blob image, over the generic ring.
#[derive(Clone, Debug)]
pub struct EnBasis {
    pub n: usize,
    pub m: i64,
    pub first: Vec<SparseVector<RingElement>>,
    pub second: Vec<SparseVector<RingElement>>,
}

impl EnBasis {
    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn all(&self) -> impl Iterator<Item = &SparseVector<RingElement>> {
        self.first.iter().chain(self.second.iter())
    }

    pub fn u_first(&self) -> Result<Vec<Word>> {
        self.first.iter().map(u_map).collect()
    }

    pub fn u_second(&self) -> Result<Vec<Word>> {
        self.second.iter().map(u_map).collect()
    }

    pub fn u_all(&self) -> Result<Vec<Word>> {
        self.all().map(u_map).collect()
    }
}

/// `a x b` on `2n` sites for `x` on `2n - 2`.
fn wrap_vector(x: &SparseVector<RingElement>, sites: usize, a: u8, b: u8) -> SparseVector<RingElement> {
    let hi = ((a - 1) as usize) << (sites - 1);
    let lo = (b - 1) as usize;
    SparseVector::from_entries(1 << sites, x.iter().map(|(i, c)| (hi | (i << 1) | lo, c.clone())))
}

/// `E_2, ..., E_n` built recursively with generic parameters.
pub fn build_en_chain(n: usize, m: i64) -> Result<Vec<EnBasis>> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n as i64 });
    }
    let params = ParamBundle::<RingElement>::generic(m);
    let v1 = UnderlineVector::blob(Word::from_letters(&[])?).realize(&params);
    let gens = build_blob(2, &params, Variant::Rho)?;
    let braced = gens.u0().expect("blob").apply(&v1)?;
    let mut out = vec![EnBasis {
        n: 2,
        m,
        first: vec![v1, braced],
        second: Vec::new(),
    }];
    for k in 3..=n {
        let prev = out.last().expect("E_{k-1}");
        let sites = 2 * k;
        let mut first = Vec::with_capacity(4 * prev.len());
        for x in prev.all() {
            for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                first.push(wrap_vector(x, sites, a, b));
            }
        }
        let excluded: BTreeSet<usize> = if k == 3 {
            BTreeSet::new()
        } else {
            out[k - 4].u_all()?.iter().map(|w| w.index()).collect()
        };
        let mid = 2 * k - 4;
        let second = (0..1usize << mid)
            .filter(|w| !excluded.contains(w))
            .map(|w| UnderlineVector::blob(Word::from_index(w, mid)).realize(&params))
            .collect();
        out.push(EnBasis { n: k, m, first, second });
    }
    Ok(out)
}

pub fn build_en(n: usize, m: i64) -> Result<EnBasis> {
    Ok(build_en_chain(n, m)?.pop().expect("nonempty"))
}

/// Rows sorted by `u`; each row vanishes on earlier `u`-words and has a unit
/// monomial at its own. Returns `(triangular, unit_diagonal)`.
pub fn triangularity(en: &EnBasis) -> Result<(bool, bool)> {
    let mut rows: Vec<(usize, &SparseVector<RingElement>)> =
        en.all().map(|v| Ok((u_map(v)?.index(), v))).collect::<Result<_>>()?;
    rows.sort_by_key(|r| r.0);
    let mut tri = true;
    let mut unit = true;
    for (k, (u, v)) in rows.iter().enumerate() {
        if rows[..k].iter().any(|(w, _)| v.get(*w).is_some()) {
            tri = false;
        }
        if !v.get(*u).is_some_and(|c| c.is_unit()) {
            unit = false;
        }
    }
    Ok((tri, unit))
}

/// Claims i-iv for `E_n` at `spec`, plus triangularity over the generic ring.
pub fn en_claims(n: usize, spec: &Specialization) -> Result<Vec<CheckReport>> {
    let en = build_en(n, spec.m())?;
    let rn = rn_value(n)? as usize;
    let tag = |r: CheckReport| r.param("n", n).param("spec", spec);
    let mut out = Vec::new();

    out.push(tag(CheckReport::new("E_n claim i: |E_n| = r_n", Source::Recursion)
        .expected(serde_json::json!({"first": if n == 2 { 2 } else { 4 * rn_value(n - 1)? as usize }, "total": rn}))
        .observed(serde_json::json!({"first": en.first.len(), "total": en.len()}))
        .compare()));

    let (img, ech) = blob_phi_image(n, spec, Variant::Rho)?;
    let special: Vec<SparseVector<FieldElement>> = en.all().map(|v| v.map(|c| spec.eval(c))).collect();
    let mut inside = 0;
    for v in &special {
        if ech.contains(v)? {
            inside += 1;
        }
    }
    let rank = echelon_of(spec.field(), 1 << (2 * n), &special)?.rank();
    out.push(tag(CheckReport::new("E_n claim ii: independent and inside the phi_n image", Source::Certificate)
        .expected(serde_json::json!({"rank": en.len(), "in_image": en.len(), "image_rank": en.len()}))
        .observed(serde_json::json!({"rank": rank, "in_image": inside, "image_rank": img.rank}))
        .compare()));

    let u_all: BTreeSet<usize> = en.u_all()?.iter().map(|w| w.index()).collect();
    out.push(tag(CheckReport::new("E_n claim iii: u is injective on E_n", Source::Identity)
        .expected(en.len())
        .observed(u_all.len())
        .compare()));

    let u1: BTreeSet<usize> = en.u_first()?.iter().map(|w| w.index()).collect();
    let u2: BTreeSet<usize> = en.u_second()?.iter().map(|w| w.index()).collect();
    out.push(tag(CheckReport::new("E_n claim iv: u(E_n^1) and u(E_n^2) are disjoint", Source::Identity)
        .expected(0)
        .observed(u1.intersection(&u2).count())
        .compare()));

    let (tri, unit) = triangularity(&en)?;
    out.push(tag(CheckReport::new("E_n is unitriangular over lex-ordered u(E_n)", Source::Identity)
        .expected(serde_json::json!({"triangular": true, "unit_diagonal": true}))
        .observed(serde_json::json!({"triangular": tri, "unit_diagonal": unit}))
        .compare()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn spec(p: i64, q: i64, m: i64) -> Specialization {
        Specialization::rational(BigRational::new(p.into(), q.into()), m).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn blob_seed_expansion() {
        let p = ParamBundle::<RingElement>::generic(2);
        let v = UnderlineVector::blob(w("")).realize(&p);
        let expect = SparseVector::from_entries(
            16,
            [
                (w("1212").index(), p.s.mul(&p.t)),
                (w("1221").index(), p.s.clone()),
                (w("2112").index(), p.t.clone()),
                (w("2121").index(), RingElement::one()),
            ],
        );
        assert_eq!(v, expect);
        assert_eq!(UnderlineVector::blob(w("")).to_string(), "[12]s[12]t");
    }

    #[test]
    fn tl_mark_is_u_applied() {
        let s = spec(5, 3, 2);
        let p = ParamBundle::specialized(&s).unwrap();
        let g = build_tl(4, &p).unwrap();
        let host = w("2121");
        let direct = g.u(2).apply(&SparseVector::basis(16, host.index(), s.field().one())).unwrap();
        assert_eq!(UnderlineVector::tl(host, 2).unwrap().realize(&p), direct);
        assert!(UnderlineVector::tl(host, 1).is_err());
    }

    #[test]
    fn tl_examples() {
        let s = spec(5, 3, 2);
        let r = tl_phi_sector(3, 2, &s).unwrap();
        assert_eq!((r.n_vectors, r.rank, r.expected), (2, 2, 2));
        let r = tl_phi_sector(4, 2, &s).unwrap();
        assert_eq!((r.n_vectors, r.rank, r.expected), (6, 5, 5));
        assert_eq!(tl_phi_sector(4, 0, &s).unwrap().rank, 0);
        assert_eq!(tl_phi_sector(4, 4, &s).unwrap().rank, 0);
    }

    #[test]
    fn tl_example_one_vectors() {
        // images are 1 [12] and [12] 1
        let s = spec(5, 3, 2);
        let p = ParamBundle::specialized(&s).unwrap();
        let vs = tl_phi_vectors(3, 2, &p).unwrap();
        assert_eq!(vs[0], UnderlineVector::tl(w("112"), 2).unwrap().realize(&p));
        assert_eq!(vs[1], UnderlineVector::tl(w("121"), 1).unwrap().realize(&p));
    }

    #[test]
    fn sprime_sizes() {
        assert_eq!(tl_sprime_basis(4, 2).unwrap().len(), 5);
        assert_eq!(tl_sprime_basis(3, 1).unwrap().len(), 2);
        assert_eq!(tl_sprime_basis(2, 1).unwrap().len(), 1);
        assert_eq!(tl_sector_complement(4, 2), w("2211"));
        let s = spec(7, 2, 2);
        for (n, r) in [(2, 1), (3, 1), (4, 2), (5, 3)] {
            let rep = tl_sprime_report(n, r, &s).unwrap();
            assert!(rep.passed(), "{}", rep.line());
        }
    }

    #[test]
    fn bythat_instance() {
        let p = ParamBundle::<RingElement>::generic(2);
        assert!(bythat_identity(w("12112"), 1, 4, &p).unwrap());
        assert!(bythat_identity(w("12112"), 1, 2, &p).is_err());
    }

    #[test]
    fn blob_ranks_small() {
        let s = spec(5, 3, 2);
        let c = blob_phi_rank(2, &s, Variant::Rho).unwrap();
        assert_eq!((c.n_vectors, c.rank, c.injective), (2, 2, Some(true)));
        let c = blob_phi_rank(3, &s, Variant::Rho).unwrap();
        assert_eq!((c.n_vectors, c.rank), (12, 12));
        let js = serde_json::to_value(&c).unwrap();
        assert_eq!(js["variant"], "rho");
        assert_eq!(js["expected"], 12);
        let c = blob_phi_rank(2, &s, Variant::RhoPrime).unwrap();
        assert_eq!(c.expected, None);
        assert_eq!(c.report().status, crate::report::Status::ReportOnly);
    }

    #[test]
    fn blob_chain_labels() {
        let (img, _) = blob_phi_image(3, &spec(5, 3, 2), Variant::Rho).unwrap();
        assert_eq!(img.chain, ["1", "U1", "U0 U1"]);
    }

    #[test]
    fn quotient_examples() {
        assert!(quotient_dims(2, 2).unwrap().passed());
        assert!(quotient_dims(3, 12).unwrap().passed());
        assert!(quotient_dims(4, 62).unwrap().passed());
        assert!(!quotient_dims(4, 61).unwrap().passed());
    }

    #[test]
    fn en_sizes_and_u_values() {
        let chain = build_en_chain(4, 2).unwrap();
        let u2: Vec<String> = chain[0].u_all().unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(u2, ["1212", "1122"]);
        assert_eq!((chain[1].first.len(), chain[1].second.len()), (8, 4));
        assert_eq!(chain[2].len(), 62);
    }

    #[test]
    fn en_claims_hold_small() {
        let s = spec(5, 3, 2);
        for n in 2..=3 {
            for r in en_claims(n, &s).unwrap() {
                assert!(r.passed(), "{}", r.line());
            }
        }
    }
}
