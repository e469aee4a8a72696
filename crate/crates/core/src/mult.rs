//! Integer recursions and multiplicity tables.
//!
//! - `v(l)`: multiplicity of the tilting summand of weight `l` in tensor
//!   space, `v(0) = v(1) = 1`, `v(-1) = 3`, `v(n) = 4 v(n-1) - v(n-2)`.
//! - `v'(l)`: the analogue for `rho'`, `v'(0) = 1`, `v'(±1) = 2`.
//! - `v_M^lambda(mu)`: standard multiplicities in permutation modules, seeded
//!   on rows `mu = -1, 0, 1, 2` and filled with the cross template
//!   `v^{l-2}(mu) + 2 v^l(mu) + v^{l+2}(mu) = v^l(mu+1) + v^l(mu-1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{CheckReport, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    V,
    VPrime,
    VM,
}

/// Integer table keyed by `(lambda, mu)`. One-parameter tables use `mu = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub kind: TableKind,
    values: BTreeMap<(i64, i64), i64>,
}

impl MultiplicityTable {
    /// `v(l)` or `v'(l)`; zero outside the computed range.
    pub fn value(&self, l: i64) -> i64 {
        self.get(l, 0)
    }

    pub fn get(&self, lambda: i64, mu: i64) -> i64 {
        self.values.get(&(lambda, mu)).copied().unwrap_or(0)
    }

    pub fn lambdas(&self) -> Vec<i64> {
        let mut ls: Vec<i64> = self.values.keys().map(|k| k.0).collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    pub fn mus(&self) -> Vec<i64> {
        let mut ms: Vec<i64> = self.values.keys().map(|k| k.1).collect();
        ms.sort_unstable();
        ms.dedup();
        ms
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.values.iter().map(|(k, v)| (*k, *v))
    }

    /// Rows `mu` ascending, columns `lambda` descending (the printed layout).
    pub fn rows(&self) -> (Vec<i64>, Vec<(i64, Vec<i64>)>) {
        let mut cols = self.lambdas();
        cols.reverse();
        let rows = self
            .mus()
            .into_iter()
            .map(|mu| (mu, cols.iter().map(|&l| self.get(l, mu)).collect()))
            .collect();
        (cols, rows)
    }

    /// CSV: header `mu,<lambda...>`, one row per `mu`.
    pub fn to_csv(&self) -> String {
        let (cols, rows) = self.rows();
        let mut s = String::from("mu");
        for l in &cols {
            s.push_str(&format!(",{l}"));
        }
        s.push('\n');
        for (mu, vals) in rows {
            s.push_str(&mu.to_string());
            for v in vals {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (cols, rows) = self.rows();
        serde_json::json!({
            "kind": self.kind,
            "lambda": cols,
            "rows": rows.into_iter().map(|(mu, vals)| serde_json::json!({"mu": mu, "values": vals})).collect::<Vec<_>>(),
        })
    }
}

fn lin(a: i64, ka: i64, b: i64, kb: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(ka)
        .and_then(|x| b.checked_mul(kb).and_then(|y| x.checked_add(y)))
        .ok_or(Error::Overflow(what))
}

/// `v(l)` for `|l| <= range`.
pub fn v_table(range: usize) -> Result<MultiplicityTable> {
    let mut values = BTreeMap::new();
    let (mut a, mut b) = (1i64, 1i64); // v(0), v(1)
    values.insert((0, 0), 1);
    for l in 1..=range as i64 {
        values.insert((l, 0), b);
        let next = lin(b, 4, a, -1, "v")?;
        (a, b) = (b, next);
    }
    let (mut a, mut b) = (1i64, 3i64); // v(0), v(-1)
    for l in 1..=range as i64 {
        values.insert((-l, 0), b);
        let next = lin(b, 4, a, -1, "v")?;
        (a, b) = (b, next);
    }
    Ok(MultiplicityTable {
        kind: TableKind::V,
        values,
    })
}

/// `v'(l)` for `|l| <= range`.
pub fn v_prime_table(range: usize) -> Result<MultiplicityTable> {
    let mut values = BTreeMap::new();
    values.insert((0, 0), 1);
    let (mut a, mut b) = (1i64, 2i64);
    for l in 1..=range as i64 {
        values.insert((l, 0), b);
        values.insert((-l, 0), b);
        let next = lin(b, 4, a, -1, "v'")?;
        (a, b) = (b, next);
    }
    Ok(MultiplicityTable {
        kind: TableKind::VPrime,
        values,
    })
}

/// `v_M^lambda(mu)` for `mu` in `-mu_range..=mu_range + 1` and even `lambda`
/// with `|lambda| <= lambda_max`.
pub fn vm_table(lambda_max: usize, mu_range: usize) -> Result<MultiplicityTable> {
    if lambda_max < 2 || mu_range < 2 {
        return Err(Error::OutOfRange {
            what: "table range",
            value: lambda_max.min(mu_range) as i64,
        });
    }
    let r = mu_range as i64;
    // rows mu <= 0 are supported on |lambda| <= -2 mu; pad so the edge is exact
    let bound = (lambda_max as i64).max(2 * r + 4);
    let bound = bound + bound % 2;
    let mut t: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    let get = |t: &BTreeMap<(i64, i64), i64>, l: i64, mu: i64| t.get(&(l, mu)).copied().unwrap_or(0);
    for (mu, ls) in [(-1, &[-2, 0, 2][..]), (0, &[0][..]), (1, &[0][..]), (2, &[-2, 0, 2][..])] {
        for &l in ls {
            t.insert((l, mu), 1);
        }
    }
    let step = |t: &BTreeMap<(i64, i64), i64>, l: i64, mu: i64, back: i64| -> Result<i64> {
        let s = get(t, l - 2, mu)
            .checked_add(2 * get(t, l, mu))
            .and_then(|x| x.checked_add(get(t, l + 2, mu)))
            .and_then(|x| x.checked_sub(get(t, l, back)))
            .ok_or(Error::Overflow("v_M"))?;
        Ok(s)
    };
    // downward: v(mu-1) = cross(mu) - v(mu+1)
    for mu in (-r + 1..=-1).rev() {
        for l in (-bound..=bound).step_by(2) {
            let v = step(&t, l, mu, mu + 1)?;
            if v < 0 {
                return Err(Error::NegativeEntry { lambda: l, mu: mu - 1 });
            }
            if v != 0 {
                t.insert((l, mu - 1), v);
            }
        }
    }
    // upward: v(mu+1) = cross(mu) - v(mu-1)
    for mu in 2..=r {
        for l in (-bound..=bound).step_by(2) {
            let v = step(&t, l, mu, mu - 1)?;
            if v < 0 {
                return Err(Error::NegativeEntry { lambda: l, mu: mu + 1 });
            }
            if v != 0 {
                t.insert((l, mu + 1), v);
            }
        }
    }
    let lm = lambda_max as i64;
    let mut values = BTreeMap::new();
    for mu in -r..=r + 1 {
        for l in (-lm..=lm).filter(|l| l % 2 == 0) {
            values.insert((l, mu), get(&t, l, mu));
        }
    }
    Ok(MultiplicityTable {
        kind: TableKind::VM,
        values,
    })
}

/// The printed `v` values for `lambda = 4, 3, ..., -4`.
pub const PRINTED_V: [(i64, i64); 9] = [(4, 41), (3, 11), (2, 3), (1, 1), (0, 1), (-1, 3), (-2, 11), (-3, 41), (-4, 153)];

/// The printed `v'` values for `lambda = 4, 3, ..., -3`.
pub const PRINTED_V_PRIME: [(i64, i64); 8] = [(4, 97), (3, 26), (2, 7), (1, 2), (0, 1), (-1, 2), (-2, 7), (-3, 26)];

/// Every printed entry `(mu, lambda, value)` of the `v_M` table.
pub fn printed_vm() -> Vec<(i64, i64, i64)> {
    let rows: [(i64, i64, &[i64]); 10] = [
        (-4, 8, &[1, 7, 19, 31, 37, 31]),
        (-3, 6, &[1, 5, 9, 11, 9, 5, 1]),
        (-2, 4, &[1, 3, 3, 3, 1]),
        (-1, 2, &[1, 1, 1]),
        (0, 0, &[1]),
        (1, 0, &[1]),
        (2, 2, &[1, 1, 1]),
        (3, 4, &[1, 3, 3, 3, 1]),
        (4, 6, &[1, 5, 9, 11, 9, 5, 1]),
        (5, 8, &[1, 7, 19, 31, 37, 31]),
    ];
    let mut out = Vec::new();
    for (mu, start, vals) in rows {
        for (k, &v) in vals.iter().enumerate() {
            out.push((mu, start - 2 * k as i64, v));
        }
    }
    out
}

/// `C(n, k)` as `i128`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: i128 = 1;
    for i in 0..k {
        c = c * (n - i) as i128 / (i + 1) as i128;
    }
    c
}

/// `dim Delta_n(mu) = C(n, (n - mu)/2)` for the blob algebra.
pub fn blob_standard_dim(n: i64, mu: i64) -> i128 {
    if mu.abs() > n || (n - mu) % 2 != 0 {
        return 0;
    }
    binomial(n, (n - mu) / 2)
}

/// `dim M_lambda^n = C(2n, n + lambda/2)`.
pub fn perm_module_dim(n: i64, lambda: i64) -> i128 {
    if lambda % 2 != 0 {
        return 0;
    }
    binomial(2 * n, n + lambda / 2)
}

/// Temperley-Lieb `dim Delta_n(s) = C(n, k) - C(n, k-1)`, `k = (n - s)/2`.
pub fn tl_standard_dim(n: i64, s: i64) -> i128 {
    if s < 0 || s > n || (n - s) % 2 != 0 {
        return 0;
    }
    let k = (n - s) / 2;
    binomial(n, k) - binomial(n, k - 1)
}

/// Standard content of the Temperley-Lieb permutation module `M_s^n`: the
/// pairs `(u, multiplicity)` for `u = s, s+2, ..., n`.
pub fn tl_perm_content(n: i64, s: i64) -> Result<Vec<(i64, i64)>> {
    if s < 0 || s > n || (n - s) % 2 != 0 {
        return Err(Error::OutOfRange { what: "s", value: s });
    }
    Ok((s..=n).step_by(2).map(|u| (u, 1)).collect())
}

/// `r_1 = 0`, `r_2 = 2`, `r_n = 4 r_{n-1} + 4^{n-2} - r_{n-2}`.
pub fn rn(n: usize) -> Result<i64> {
    if n == 0 {
        return Err(Error::OutOfRange { what: "n", value: 0 });
    }
    let (mut a, mut b) = (0i64, 2i64);
    if n == 1 {
        return Ok(a);
    }
    for k in 3..=n {
        let p = 4i64.checked_pow(k as u32 - 2).ok_or(Error::Overflow("r_n"))?;
        let next = lin(b, 4, a, -1, "r_n")?.checked_add(p).ok_or(Error::Overflow("r_n"))?;
        (a, b) = (b, next);
    }
    Ok(b)
}

fn table_report(name: &str, printed: &[(i64, i64)], table: &MultiplicityTable) -> CheckReport {
    let expected: Vec<i64> = printed.iter().map(|p| p.1).collect();
    let observed: Vec<i64> = printed.iter().map(|p| table.value(p.0)).collect();
    CheckReport::new(name, Source::PaperTable)
        .param("lambda", printed.iter().map(|p| p.0).collect::<Vec<_>>())
        .expected(expected)
        .observed(observed)
        .compare()
}

/// Printed `v` values with `|lambda| <= range`, and `v(±5)` from the
/// recursion once `range >= 5`.
pub fn check_v(range: usize) -> Result<Vec<CheckReport>> {
    let v = v_table(range.max(5))?;
    let printed: Vec<(i64, i64)> = PRINTED_V.iter().copied().filter(|p| p.0.unsigned_abs() as usize <= range).collect();
    let mut out = vec![table_report("v reproduces printed column", &printed, &v)];
    if range >= 5 {
        out.push(
            CheckReport::new("v recursion values", Source::Recursion)
                .expected(serde_json::json!({"v(5)": 153, "v(-5)": 571}))
                .observed(serde_json::json!({"v(5)": v.value(5), "v(-5)": v.value(-5)}))
                .compare(),
        );
    }
    Ok(out)
}

/// Printed `v'` values with `|lambda| <= range`, evenness, and `v'(5)`.
pub fn check_v_prime(range: usize) -> Result<Vec<CheckReport>> {
    let vp = v_prime_table(range.max(5))?;
    let printed: Vec<(i64, i64)> = PRINTED_V_PRIME.iter().copied().filter(|p| p.0.unsigned_abs() as usize <= range).collect();
    let sym = (1..=range.max(5) as i64).all(|l| vp.value(l) == vp.value(-l));
    let mut out = vec![
        table_report("v' reproduces printed row", &printed, &vp),
        CheckReport::new("v' is even", Source::Recursion).pass_if(sym),
    ];
    if range >= 5 {
        out.push(
            CheckReport::new("v' recursion value", Source::Recursion)
                .expected(serde_json::json!({"v'(5)": 362}))
                .observed(serde_json::json!({"v'(5)": vp.value(5)}))
                .compare(),
        );
    }
    Ok(out)
}

/// `v_M` on `|mu| <= mu_range` (at least the printed rows): every printed
/// entry, spot values, the zero/one pattern, symmetries, row sums.
pub fn check_vm(mu_range: usize) -> Result<Vec<CheckReport>> {
    let r = mu_range.max(5);
    let vm = vm_table(2 * r, r)?;
    let v = v_table(r + 1)?;
    let mut out = Vec::new();
    let printed = printed_vm();
    let bad: Vec<String> = printed
        .iter()
        .filter(|(mu, l, val)| vm.get(*l, *mu) != *val)
        .map(|(mu, l, val)| format!("mu={mu},lambda={l}: {} != {val}", vm.get(*l, *mu)))
        .collect();
    let mut rep = CheckReport::new("v_M reproduces printed table", Source::PaperTable)
        .expected(printed.len())
        .observed(printed.len() - bad.len())
        .compare();
    if !bad.is_empty() {
        rep = rep.note(bad.join("; "));
    }
    out.push(rep);
    out.push(
        CheckReport::new("v_M spot values", Source::PaperTable)
            .expected(serde_json::json!({"v^0(-4)": 37, "v^2(-3)": 9, "v^4(-2)": 1, "v^4(-1)": 0, "v^4(3)": 1}))
            .observed(serde_json::json!({
                "v^0(-4)": vm.get(0, -4), "v^2(-3)": vm.get(2, -3), "v^4(-2)": vm.get(4, -2),
                "v^4(-1)": vm.get(4, -1), "v^4(3)": vm.get(4, 3),
            }))
            .compare(),
    );
    out.push(check_prefull(&vm));
    let mus = vm.mus();
    let lams = vm.lambdas();
    let lsym = mus.iter().all(|&mu| lams.iter().all(|&l| vm.get(l, mu) == vm.get(-l, mu)));
    let msym = mus
        .iter()
        .filter(|&&mu| mus.contains(&(1 - mu)))
        .all(|&mu| lams.iter().all(|&l| vm.get(l, mu) == vm.get(l, 1 - mu)));
    out.push(CheckReport::new("v_M symmetric in lambda", Source::Recursion).pass_if(lsym));
    out.push(CheckReport::new("v_M symmetric under mu -> 1 - mu", Source::Recursion).pass_if(msym));
    // row mu is supported on |lambda| <= 2|mu| (mu <= 0) or 2(mu - 1) (mu >= 1)
    let sums_ok = mus
        .iter()
        .filter(|mu| mu.unsigned_abs() as usize <= r)
        .all(|&mu| lams.iter().map(|&l| vm.get(l, mu)).sum::<i64>() == v.value(mu));
    out.push(CheckReport::new("row sums of v_M equal v", Source::Recursion).pass_if(sums_ok));
    Ok(out)
}

/// All table checks at default ranges.
pub fn check_tables() -> Result<Vec<CheckReport>> {
    let mut out = check_v(5)?;
    out.extend(check_v_prime(5)?);
    out.extend(check_vm(6)?);
    Ok(out)
}

/// For even `lambda >= 0`: `v^lambda(mu) = 1` at `2 mu = -lambda` and at
/// `2 mu = lambda + 2`, and `0` strictly between.
pub fn check_prefull(vm: &MultiplicityTable) -> CheckReport {
    let mus = vm.mus();
    let (lo, hi) = (mus[0], *mus.last().expect("rows"));
    let mut checked = 0;
    let mut bad = Vec::new();
    for l in vm.lambdas().into_iter().filter(|l| *l >= 0) {
        let a = -l / 2;
        let b = (l + 2) / 2;
        if a < lo || b > hi {
            continue;
        }
        checked += 1;
        let ok = vm.get(l, a) == 1 && vm.get(l, b) == 1 && (a + 1..b).all(|mu| vm.get(l, mu) == 0);
        if !ok {
            bad.push(l.to_string());
        }
    }
    let mut rep = CheckReport::new("v_M zero/one pattern near the diagonal", Source::Recursion)
        .expected(checked)
        .observed(checked - bad.len())
        .compare();
    if !bad.is_empty() {
        rep = rep.note(format!("lambda {}", bad.join(", ")));
    }
    rep
}

/// Dimension identities up to level `n_max`:
/// `sum_mu v(mu) dim Delta_n(mu) = 4^n`,
/// `sum_mu v_M^lambda(mu) dim Delta_n(mu) = C(2n, n + lambda/2)`, and the
/// Temperley-Lieb telescoping `sum_{u >= s} dim Delta_n(u) = C(n, (n-s)/2)`.
pub fn check_dimension_identities(n_max: usize) -> Result<Vec<CheckReport>> {
    let nm = n_max as i64;
    let v = v_table(n_max.max(1))?;
    let vm = vm_table((2 * n_max).max(2), n_max.max(2))?;
    let mut out = Vec::new();

    let totals: Vec<i128> = (0..=nm)
        .map(|n| (-n..=n).step_by(2).map(|mu| v.value(mu) as i128 * blob_standard_dim(n, mu)).sum())
        .collect();
    let powers: Vec<i128> = (0..=nm).map(|n| 4i128.pow(n as u32)).collect();
    out.push(
        CheckReport::new("sum v(mu) dim Delta_n(mu) = 4^n", Source::PaperTable)
            .param("n_max", n_max)
            .expected(powers.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .observed(totals.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .compare(),
    );

    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=nm {
        for l in (-2 * n..=2 * n).step_by(2) {
            let lhs: i128 = (-n..=n).step_by(2).map(|mu| vm.get(l, mu) as i128 * blob_standard_dim(n, mu)).sum();
            checked += 1;
            if lhs != perm_module_dim(n, l) {
                bad.push(format!("n={n},lambda={l}"));
            }
        }
    }
    let mut rep = CheckReport::new("sum v_M^lambda(mu) dim Delta_n(mu) = C(2n, n+lambda/2)", Source::Identity)
        .param("n_max", n_max)
        .expected(checked)
        .observed(checked - bad.len())
        .compare();
    if !bad.is_empty() {
        rep = rep.note(bad.join("; "));
    }
    out.push(rep);

    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 0..=nm {
        for s in (n % 2..=n).step_by(2) {
            let content = tl_perm_content(n, s)?;
            let lhs: i128 = content.iter().map(|(u, k)| *k as i128 * tl_standard_dim(n, *u)).sum();
            checked += 1;
            if lhs != binomial(n, (n - s) / 2) {
                bad.push(format!("n={n},s={s}"));
            }
        }
    }
    out.push(
        CheckReport::new("TL: sum_{u>=s} dim Delta_n(u) = C(n,(n-s)/2)", Source::Identity)
            .param("n_max", n_max)
            .expected(checked)
            .observed(checked - bad.len())
            .compare(),
    );
    Ok(out)
}

/// The cross template on every interior entry of the filled table, and the
/// binomial form of the restriction rule.
pub fn restriction_consistency(n_max: usize) -> Result<Vec<CheckReport>> {
    let r = n_max.max(2);
    let vm = vm_table(2 * r + 4, r)?;
    let mus = vm.mus();
    let lams = vm.lambdas();
    let (lmin, lmax) = (lams[0], *lams.last().expect("columns"));
    let mut checked = 0;
    let mut bad = Vec::new();
    for &mu in &mus[1..mus.len() - 1] {
        for &l in &lams {
            if l - 2 < lmin || l + 2 > lmax {
                continue;
            }
            checked += 1;
            let lhs = vm.get(l - 2, mu) + 2 * vm.get(l, mu) + vm.get(l + 2, mu);
            if lhs != vm.get(l, mu + 1) + vm.get(l, mu - 1) {
                bad.push(format!("mu={mu},lambda={l}"));
            }
        }
    }
    let mut out = vec![CheckReport::new("v_M cross template a+2b+c = x+y", Source::Recursion)
        .expected(checked)
        .observed(checked - bad.len())
        .compare()];
    let mut checked = 0;
    let mut ok = 0;
    for n in 1..=n_max as i64 {
        for l in (-2 * n - 2..=2 * n + 2).step_by(2) {
            checked += 1;
            let lhs = binomial(2 * n + 2, n + 1 + l / 2);
            let rhs = binomial(2 * n, n + 1 + l / 2) + 2 * binomial(2 * n, n + l / 2) + binomial(2 * n, n - 1 + l / 2);
            if lhs == rhs {
                ok += 1;
            }
        }
    }
    out.push(
        CheckReport::new("restriction of M_lambda^{n+1} to level n", Source::Identity)
            .param("n_max", n_max)
            .expected(checked)
            .observed(ok)
            .compare(),
    );
    Ok(out)
}

/// `4^n - r_n = v(n) + v(-n)` for `1 <= n <= n_max`.
pub fn check_rank_identity(n_max: usize) -> Result<CheckReport> {
    let v = v_table(n_max)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for n in 1..=n_max {
        lhs.push(4i64.pow(n as u32) - rn(n)?);
        rhs.push(v.value(n as i64) + v.value(-(n as i64)));
    }
    Ok(CheckReport::new("4^n - r_n = v(n) + v(-n)", Source::Recursion)
        .param("n_max", n_max)
        .expected(rhs)
        .observed(lhs)
        .compare())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_values() {
        let v = v_table(5).unwrap();
        for (l, val) in PRINTED_V {
            assert_eq!(v.value(l), val, "lambda={l}");
        }
        // independent oracle: 4*153 - 41
        assert_eq!(v.value(-5), 571);
        assert_eq!(v.value(5), 153);
    }

    #[test]
    fn v_prime_values() {
        let v = v_prime_table(5).unwrap();
        for (l, val) in PRINTED_V_PRIME {
            assert_eq!(v.value(l), val);
        }
        assert_eq!(v.value(5), 4 * 97 - 26);
    }

    #[test]
    fn vm_matches_every_printed_entry() {
        let t = vm_table(10, 5).unwrap();
        for (mu, l, val) in printed_vm() {
            assert_eq!(t.get(l, mu), val, "mu={mu} lambda={l}");
        }
        assert_eq!(t.get(0, -4), 37);
        assert_eq!(t.get(2, -3), 9);
        assert_eq!(t.get(4, -1), 0);
        assert_eq!(t.get(4, 3), 1);
    }

    #[test]
    fn vm_rejects_tiny_ranges() {
        assert!(vm_table(0, 5).is_err());
    }

    #[test]
    fn rn_values() {
        let got: Vec<i64> = (1..=5).map(|n| rn(n).unwrap()).collect();
        assert_eq!(got, [0, 2, 12, 62, 300]);
        // 4^5 - r_5 = v(5) + v(-5)
        assert_eq!(1024 - 300, 153 + 571);
        assert!(rn(0).is_err());
    }

    #[test]
    fn dimension_examples() {
        // n = 2: 3*1 + 1*2 + 11*1
        let v = v_table(2).unwrap();
        let s: i128 = [(2, 1), (0, 2), (-2, 1)].iter().map(|(mu, d)| v.value(*mu) as i128 * d).sum();
        assert_eq!(s, 16);
        assert_eq!(blob_standard_dim(2, 0), 2);
        assert_eq!(perm_module_dim(2, 0), 6);
        // C(8,4) = 15 + 40 + 15
        assert_eq!(binomial(8, 4), binomial(6, 4) + 2 * binomial(6, 3) + binomial(6, 2));
    }

    #[test]
    fn tl_content_examples() {
        assert_eq!(tl_perm_content(4, 0).unwrap(), vec![(0, 1), (2, 1), (4, 1)]);
        let dims: Vec<i128> = [0, 2, 4].iter().map(|&u| tl_standard_dim(4, u)).collect();
        assert_eq!(dims, [2, 3, 1]);
        assert_eq!(tl_perm_content(5, 5).unwrap(), vec![(5, 1)]);
        assert!(tl_perm_content(4, 1).is_err());
        // V^2 = 3 Delta_2(2) + Delta_2(0)
        assert_eq!(tl_standard_dim(2, 2) * 3 + tl_standard_dim(2, 0), 4);
    }

    #[test]
    fn all_table_checks_pass() {
        let mut reps = check_tables().unwrap();
        reps.extend(check_dimension_identities(10).unwrap());
        reps.extend(restriction_consistency(5).unwrap());
        reps.push(check_rank_identity(10).unwrap());
        for r in reps {
            assert!(r.passed(), "{}", r.line());
        }
    }

    #[test]
    fn csv_layout() {
        let v = v_table(1).unwrap();
        assert_eq!(v.to_csv(), "mu,1,0,-1\n0,1,1,3\n");
        let t = vm_table(2, 2).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("mu,2,0,-2\n-2,3,3,3\n"));
    }
}
