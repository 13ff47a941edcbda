//! Integer symmetric-function coefficients in the Schur basis: Pieri rule,
//! Kostka and inverse Kostka numbers, Littlewood-Richardson coefficients,
//! and the plethysm `p_e(s_μ)` with its adjoint `ψ_e`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::TransitionMatrix;
use crate::partition::{
    check_modulus, core_and_quotient, from_core_and_quotient, multipartitions, partitions_containing,
    partitions_inside, partitions_of, remove_rim_hooks, Partition, QuotientTuple,
};

/// A finitely supported integer combination of Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SchurExpansion(pub BTreeMap<Partition, i64>);

impl SchurExpansion {
    pub fn single(lambda: Partition) -> Self {
        SchurExpansion(BTreeMap::from([(lambda, 1)]))
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    pub fn add(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.0.entry(lambda.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.remove(&lambda);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.0.iter().map(|(p, &c)| (p, c))
    }

    /// JSON object keyed by partition literals in decreasing lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(self.0.iter().rev().map(|(p, c)| (p.to_string(), (*c).into())).collect())
    }
}

/// Partitions `μ ⊇ λ` such that `μ/λ` is a horizontal strip of size `k`.
pub fn horizontal_strip_extensions(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > lambda.len() {
            if left == 0 {
                out.push(Partition::from_multiset(cur.clone()));
            }
            return;
        }
        let room = if row == 0 { left } else { (lambda.part(row - 1) - lambda.part(row)).min(left) };
        for a in (0..=room).rev() {
            cur.push(lambda.part(row) + a);
            go(lambda, row + 1, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `s_λ h_k` by the Pieri rule.
pub fn schur_times_h(lambda: &Partition, k: u32) -> SchurExpansion {
    SchurExpansion(horizontal_strip_extensions(lambda, k).into_iter().map(|m| (m, 1)).collect())
}

fn h_product(rho: &Partition) -> SchurExpansion {
    let mut acc = SchurExpansion::single(Partition::empty());
    for &k in rho.parts() {
        let mut next = SchurExpansion::default();
        for (lam, c) in acc.iter() {
            for mu in horizontal_strip_extensions(lam, k) {
                next.add(mu, c);
            }
        }
        acc = next;
    }
    acc
}

/// `K[λ][ρ]` = coefficient of `s_λ` in `h_ρ`; labels in decreasing lexicographic order.
pub fn kostka_matrix(n: u32) -> TransitionMatrix<i64> {
    let labels = partitions_of(n);
    let cols: Vec<SchurExpansion> = labels.iter().map(h_product).collect();
    let pos = crate::matrix::positions(&labels);
    let mut entries = vec![vec![0; labels.len()]; labels.len()];
    for (j, col) in cols.iter().enumerate() {
        for (lam, c) in col.iter() {
            entries[pos[lam]][j] = c;
        }
    }
    TransitionMatrix { labels, entries }
}

type InverseKostka = HashMap<Partition, Vec<(Partition, i64)>>;

fn inverse_kostka_table(n: u32) -> Arc<InverseKostka> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<InverseKostka>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cache lock").get(&n) {
        return t.clone();
    }
    let k = kostka_matrix(n);
    let m = k.dim();
    // K is upper unitriangular in decreasing lexicographic order; back-substitute K X = I
    let mut x = vec![vec![0i64; m]; m];
    for j in 0..m {
        x[j][j] = 1;
        for i in (0..j).rev() {
            x[i][j] = -((i + 1)..=j).map(|t| k.entries[i][t] * x[t][j]).sum::<i64>();
        }
    }
    // s_μ = Σ_ρ X[ρ][μ] h_ρ
    let mut table = InverseKostka::new();
    for (mj, mu) in k.labels.iter().enumerate() {
        let row = (0..m).filter(|&r| x[r][mj] != 0).map(|r| (k.labels[r].clone(), x[r][mj])).collect();
        table.insert(mu.clone(), row);
    }
    let table = Arc::new(table);
    cache.write().expect("cache lock").insert(n, table.clone());
    table
}

/// `κ_{μρ}` with `s_μ = Σ_ρ κ_{μρ} h_ρ`.
pub fn inverse_kostka(mu: &Partition, rho: &Partition) -> Result<i64> {
    if mu.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("|{mu}| != |{rho}|")));
    }
    Ok(inverse_kostka_row(mu).iter().find(|(r, _)| r == rho).map_or(0, |(_, c)| *c))
}

/// The nonzero `(ρ, κ_{μρ})`.
pub fn inverse_kostka_row(mu: &Partition) -> Vec<(Partition, i64)> {
    inverse_kostka_table(mu.size())[mu].clone()
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^ν_{λμ}`: number of skew tableaux of shape `ν/λ` and content `μ` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch(format!("|{nu}| != |{lambda}| + |{mu}|")));
    }
    Ok(lr_unchecked(nu, lambda, mu))
}

fn lr_unchecked(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if lambda.is_empty() || mu.is_empty() {
        return 1;
    }
    let key = (nu.clone(), lambda.clone(), mu.clone());
    if let Some(&c) = lr_cache().read().expect("cache lock").get(&key) {
        return c;
    }
    let c = count_lr_tableaux(nu, lambda, mu);
    lr_cache().write().expect("cache lock").insert(key, c);
    c
}

fn count_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    // reading order: rows top to bottom, each row right to left
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|i| (lambda.part(i) as usize..nu.part(i) as usize).rev().map(move |j| (i, j)))
        .collect();
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; nu.len()];
    let mut counts = vec![0u32; mu.len() + 1];

    fn go(
        t: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        nu: &Partition,
        mu: &Partition,
        grid: &mut [Vec<u32>],
        counts: &mut [u32],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(t) else { return 1 };
        let right = if j + 1 < nu.part(i) as usize { grid[i][j + 1] } else { u32::MAX };
        let above = if i > 0 && j >= lambda.part(i - 1) as usize { grid[i - 1][j] } else { 0 };
        let mut total = 0;
        for val in (above + 1)..=(mu.len() as u32).min(right) {
            let v = val as usize;
            if counts[v] >= mu.part(v - 1) || (v > 1 && counts[v] >= counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            grid[i][j] = val;
            total += go(t + 1, cells, lambda, nu, mu, grid, counts);
            counts[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    go(0, &cells, lambda, nu, mu, &mut grid, &mut counts)
}

/// `s_λ s_μ`.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::default();
    for nu in partitions_containing(lambda, lambda.size() + mu.size()) {
        out.add(nu.clone(), lr_unchecked(&nu, lambda, mu) as i64);
    }
    out
}

/// `s_{ν/λ} = Σ_σ c^ν_{λσ} s_σ`.
pub fn skew_schur(nu: &Partition, lambda: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::default();
    if !nu.contains(lambda) {
        return out;
    }
    for sigma in partitions_inside(nu, nu.size() - lambda.size()) {
        out.add(sigma.clone(), lr_unchecked(nu, lambda, &sigma) as i64);
    }
    out
}

/// Coefficient of `s_μ` in `Π_i s_{τ_i}`.
pub fn lr_multi(components: &QuotientTuple, mu: &Partition) -> Result<u64> {
    if components.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{components}| != |{mu}|")));
    }
    Ok(lr_multi_unchecked(components.components(), mu))
}

pub(crate) fn lr_multi_unchecked(components: &[Partition], mu: &Partition) -> u64 {
    let factors: Vec<&Partition> = components.iter().filter(|c| !c.is_empty()).collect();
    match factors.as_slice() {
        [] => return mu.is_empty() as u64,
        [a] => return (*a == mu) as u64,
        _ => {}
    }
    // every intermediate product term must fit inside μ
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for tau in factors {
        let mut next = BTreeMap::new();
        for (a, c) in &acc {
            for nu in partitions_containing(a, a.size() + tau.size()) {
                if !mu.contains(&nu) {
                    continue;
                }
                let lr = lr_unchecked(&nu, a, tau);
                if lr > 0 {
                    *next.entry(nu).or_insert(0) += c * lr;
                }
            }
        }
        acc = next;
    }
    acc.get(mu).copied().unwrap_or(0)
}

/// `⟨Π_i s_{ν_i/λ_i}, s_μ⟩` for tuples of skew shapes.
pub(crate) fn skew_lr_multi(outer: &[Partition], inner: &[Partition], mu: &Partition) -> u64 {
    let expansions: Vec<SchurExpansion> = outer.iter().zip(inner).map(|(o, i)| skew_schur(o, i)).collect();
    let mut total = 0u64;
    let mut pick: Vec<Partition> = Vec::with_capacity(expansions.len());
    fn go(t: usize, ex: &[SchurExpansion], pick: &mut Vec<Partition>, weight: u64, mu: &Partition, total: &mut u64) {
        if t == ex.len() {
            *total += weight * lr_multi_unchecked(pick, mu);
            return;
        }
        for (sigma, c) in ex[t].iter() {
            if !mu.contains(sigma) {
                continue;
            }
            pick.push(sigma.clone());
            go(t + 1, ex, pick, weight * c as u64, mu, total);
            pick.pop();
        }
    }
    go(0, &expansions, &mut pick, 1, mu, &mut total);
    total
}

/// `ψ_e(s_ν)`: `None` when the e-core of `ν` is nonempty, otherwise the sign
/// `(-1)^{total leg length}` of any e-rim-hook tiling together with the e-quotient.
pub fn psi_e(nu: &Partition, e: u32) -> Result<Option<(i32, QuotientTuple)>> {
    check_modulus(e)?;
    let removal = remove_rim_hooks(nu, e)?;
    if !removal.core.is_empty() {
        return Ok(None);
    }
    Ok(Some((removal.leg_sign(), core_and_quotient(nu, e)?.1)))
}

/// Schur expansion of the plethysm `p_e(s_μ)`:
/// `⟨p_e(s_μ), s_ν⟩ = sign · c^μ_{quotient(ν)}` over `ν` with empty e-core.
pub fn plethysm_pe_schur(mu: &Partition, e: u32) -> Result<SchurExpansion> {
    check_modulus(e)?;
    let mut out = SchurExpansion::default();
    for tau in multipartitions(e, mu.size()) {
        let c = lr_multi_unchecked(tau.components(), mu);
        if c == 0 {
            continue;
        }
        let nu = from_core_and_quotient(&Partition::empty(), &tau, e)?;
        let sign = remove_rim_hooks(&nu, e)?.leg_sign() as i64;
        out.add(nu, sign * c as i64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn pieri() {
        assert_eq!(schur_times_h(&part![], 2), SchurExpansion::single(part![2]));
        let s = schur_times_h(&part![1], 1);
        assert_eq!(s.0.len(), 2);
        assert_eq!((s.get(&part![2]), s.get(&part![1, 1])), (1, 1));
        let s = schur_times_h(&part![2, 1], 1);
        assert_eq!(s.0.keys().cloned().collect::<Vec<_>>(), vec![part![2, 1, 1], part![2, 2], part![3, 1]]);
    }

    #[test]
    fn kostka_small() {
        let k = kostka_matrix(2);
        assert_eq!(k.entries, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(kostka_matrix(1).entries, vec![vec![1]]);
        for lam in partitions_of(8) {
            assert_eq!(k_entry(&lam), 1);
        }
        fn k_entry(l: &Partition) -> i64 {
            let k = kostka_matrix(l.size());
            *k.get(l, l).unwrap()
        }
    }

    #[test]
    fn inverse_kostka_small() {
        assert_eq!(inverse_kostka(&part![2], &part![2]).unwrap(), 1);
        assert_eq!(inverse_kostka(&part![2], &part![1, 1]).unwrap(), 0);
        assert_eq!(inverse_kostka(&part![1, 1], &part![2]).unwrap(), -1);
        assert_eq!(inverse_kostka(&part![1, 1], &part![1, 1]).unwrap(), 1);
        assert!(inverse_kostka(&part![1], &part![1, 1]).is_err());
        for mu in partitions_of(8) {
            assert_eq!(inverse_kostka(&mu, &mu).unwrap(), 1);
        }
    }

    #[test]
    fn littlewood_richardson() {
        assert_eq!(lr_coefficient(&part![3, 1], &part![], &part![3, 1]).unwrap(), 1);
        assert_eq!(lr_coefficient(&part![2], &part![1], &part![1]).unwrap(), 1);
        assert_eq!(lr_coefficient(&part![1, 1], &part![1], &part![1]).unwrap(), 1);
        assert_eq!(lr_coefficient(&part![2, 1], &part![1], &part![1, 1]).unwrap(), 1);
        assert_eq!(lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]).unwrap(), 2);
        assert!(lr_coefficient(&part![2], &part![1], &part![2]).is_err());
    }

    #[test]
    fn multi_products() {
        let q = |a: Partition, b: Partition| QuotientTuple(vec![a, b]);
        assert_eq!(lr_multi(&q(part![3], part![]), &part![3]).unwrap(), 1);
        assert_eq!(lr_multi(&q(part![2], part![1]), &part![3]).unwrap(), 1);
        assert_eq!(lr_multi(&q(part![1], part![1]), &part![2]).unwrap(), 1);
        assert_eq!(lr_multi(&q(part![1], part![1]), &part![1, 1]).unwrap(), 1);
        assert!(lr_multi(&q(part![1], part![]), &part![2]).is_err());
    }

    #[test]
    fn psi() {
        assert_eq!(psi_e(&part![2], 2).unwrap(), Some((1, QuotientTuple(vec![part![], part![1]]))));
        let (s, q) = psi_e(&part![1, 1], 2).unwrap().unwrap();
        assert_eq!((s, q.size()), (-1, 1));
        assert_eq!(psi_e(&part![2, 1], 2).unwrap(), None);
    }

    #[test]
    fn plethysm_of_power_sum() {
        // p_2(s_1) = p_2 = s_2 - s_11
        let p = plethysm_pe_schur(&part![1], 2).unwrap();
        assert_eq!(p.0, BTreeMap::from([(part![2], 1), (part![1, 1], -1)]));
        // p_e(s_μ) has exactly the ψ_e-images as support
        // p_2(h_n) = Σ_k (-1)^k s_(2n-k,k)
        let p = plethysm_pe_schur(&part![3], 2).unwrap();
        let expected = BTreeMap::from([(part![6], 1), (part![5, 1], -1), (part![4, 2], 1), (part![3, 3], -1)]);
        assert_eq!(p.0, expected);
    }
}
