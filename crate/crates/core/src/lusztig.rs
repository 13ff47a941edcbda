//! Unipotent character labels, blocks by e-core, Lusztig induction `L_μ`
//! computed through e-quotients, its adjoint restriction, and the
//! global-to-local label bijection.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::convention::{Convention, RibbonStatistic};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::bigint_to_json;
use crate::partition::{
    check_modulus, core_and_quotient, decompose_singular, from_core_and_quotient, partitions_containing,
    partitions_inside, partitions_of, remove_rim_hooks, Partition, QuotientTuple,
};
use crate::symfunc::{lr_multi_unchecked, skew_lr_multi};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    #[default]
    GL,
    U,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::GL => "GL",
            Flavor::U => "U",
        })
    }
}

/// The unipotent character `χ_λ` of `GL(n,q)` or `U(n,q)`, `n = |λ|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnipotentLabel {
    pub partition: Partition,
    pub flavor: Flavor,
}

impl UnipotentLabel {
    pub fn n(&self) -> u32 {
        self.partition.size()
    }
}

/// An integer combination of unipotent characters of one flavor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterVector {
    pub flavor: Flavor,
    entries: BTreeMap<Partition, BigInt>,
}

impl CharacterVector {
    pub fn new(flavor: Flavor) -> Self {
        CharacterVector { flavor, entries: BTreeMap::new() }
    }

    /// `χ_λ` of flavor GL.
    pub fn chi(lambda: Partition) -> Self {
        let mut v = Self::new(Flavor::GL);
        v.add(lambda, &BigInt::from(1));
        v
    }

    pub fn from_entries(flavor: Flavor, entries: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut v = Self::new(flavor);
        for (l, c) in entries {
            v.add(l, &c);
        }
        v
    }

    /// The specialisation at `v = 1` of a Fock vector under `|ν> ↔ χ_ν`.
    pub fn from_fock_at_one(x: &FockVector) -> Self {
        Self::from_entries(Flavor::GL, x.eval_one())
    }

    pub fn add(&mut self, lambda: Partition, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.entries.remove(&lambda);
        }
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The standard pairing `<χ_λ, χ_μ> = δ_{λμ}`.
    pub fn pairing(&self, other: &CharacterVector) -> BigInt {
        self.entries.iter().map(|(l, c)| c * other.get(l)).sum()
    }

    /// `{"flavor":"GL","entries":{"3,3":1}}`, entries in decreasing lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().rev().map(|(l, c)| (l.to_string(), bigint_to_json(c))).collect();
        serde_json::json!({ "flavor": self.flavor.to_string(), "entries": entries })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let flavor = match v.get("flavor").and_then(|f| f.as_str()) {
            None | Some("GL") => Flavor::GL,
            Some("U") => Flavor::U,
            Some(f) => return Err(Error::Parse(format!("unknown flavor {f:?}"))),
        };
        let entries = v
            .get("entries")
            .and_then(|x| x.as_object())
            .ok_or_else(|| Error::Parse(format!("not a character vector: {v}")))?;
        let mut out = Self::new(flavor);
        for (k, c) in entries {
            out.add(k.parse()?, &crate::laurent::bigint_from_json(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.entries.iter().rev().map(|(l, c)| format!("{c}*chi[{l}]")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A block: the unipotent labels of `G_n` sharing an e-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub core: Partition,
    /// `(n - |core|) / e`.
    pub weight: u32,
    pub members: Vec<Partition>,
}

/// Partitions of `n` grouped by e-core; blocks appear in order of their first
/// member in decreasing lexicographic order, so the block of `(n)` is first.
pub fn block_partition(n: u32, e: u32) -> Result<Vec<Block>> {
    check_modulus(e)?;
    let mut blocks: Vec<Block> = Vec::new();
    for lam in partitions_of(n) {
        let c = core_and_quotient(&lam, e)?.0;
        match blocks.iter_mut().find(|b| b.core == c) {
            Some(b) => b.members.push(lam),
            None => blocks.push(Block { weight: (n - c.size()) / e, core: c, members: vec![lam] }),
        }
    }
    Ok(blocks)
}

/// Sign attached to a label by the rim-hook removal to its core, for the convention's statistic.
pub(crate) fn hook_sign(lambda: &Partition, e: u32, convention: Convention) -> Result<i32> {
    let r = remove_rim_hooks(lambda, e)?;
    Ok(match convention.ribbon_statistic() {
        RibbonStatistic::Arm => r.arm_sign(),
        RibbonStatistic::Leg => r.leg_sign(),
    })
}

/// Lusztig induction with a fixed modulus and convention.
#[derive(Clone, Copy, Debug)]
pub struct Lusztig {
    pub e: u32,
    pub convention: Convention,
}

impl Lusztig {
    pub fn new(e: u32) -> Result<Self> {
        check_modulus(e)?;
        Ok(Lusztig { e, convention: Convention::default() })
    }

    pub fn with_convention(e: u32, convention: Convention) -> Result<Self> {
        check_modulus(e)?;
        Ok(Lusztig { e, convention })
    }

    /// Quotient tuples `τ ⊇ λ*` componentwise with `|τ| = |λ*| + k`.
    fn quotient_extensions(q: &QuotientTuple, k: u32) -> Vec<Vec<Partition>> {
        fn go(q: &[Partition], t: usize, left: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if t == q.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for a in 0..=left {
                for p in partitions_containing(&q[t], q[t].size() + a) {
                    cur.push(p);
                    go(q, t + 1, left - a, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(q.components(), 0, k, &mut Vec::new(), &mut out);
        out
    }

    /// Quotient tuples `σ ⊆ ν*` componentwise with `|σ| = |ν*| - k`.
    fn quotient_restrictions(q: &QuotientTuple, k: u32) -> Vec<Vec<Partition>> {
        fn go(q: &[Partition], t: usize, left: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if t == q.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for a in 0..=left.min(q[t].size()) {
                for p in partitions_inside(&q[t], q[t].size() - a) {
                    cur.push(p);
                    go(q, t + 1, left - a, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(q.components(), 0, k, &mut Vec::new(), &mut out);
        out
    }

    /// `L_μ(χ_λ) = Σ_ν ε c^μ_{ν*/λ*} χ_ν` over `ν` with the core of `λ` and
    /// `|ν| = |λ| + e|μ|`, where `c^μ_{ν*/λ*} = <Π_i s_{ν_i/λ_i}, s_μ>` and
    /// `ε` is the product of the rim-hook signs of `ν` and `λ`.
    pub fn induce_label(&self, lambda: &Partition, mu: &Partition) -> Result<CharacterVector> {
        let (core, q) = core_and_quotient(lambda, self.e)?;
        let sl = hook_sign(lambda, self.e, self.convention)?;
        let mut out = CharacterVector::new(Flavor::GL);
        for tau in Self::quotient_extensions(&q, mu.size()) {
            let c = skew_lr_multi(&tau, q.components(), mu);
            if c == 0 {
                continue;
            }
            let nu = from_core_and_quotient(&core, &QuotientTuple(tau), self.e)?;
            let eps = sl * hook_sign(&nu, self.e, self.convention)?;
            out.add(nu, &BigInt::from(eps as i64 * c as i64));
        }
        Ok(out)
    }

    pub fn induce(&self, x: &CharacterVector, mu: &Partition) -> Result<CharacterVector> {
        let mut out = CharacterVector::new(x.flavor);
        for (lam, c) in x.iter() {
            for (nu, d) in self.induce_label(lam, mu)?.iter() {
                out.add(nu.clone(), &(c * d));
            }
        }
        Ok(out)
    }

    /// The adjoint of induction: coefficients of `χ_λ ⊗ χ_μ` (`|μ| = k`) in
    /// the restriction of `y`, so that `<L_μ(χ_λ), y> = restrict(y, k)[(λ, μ)]`.
    pub fn restrict(&self, y: &CharacterVector, k: u32) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
        let mut out: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
        for (nu, c) in y.iter() {
            let (core, q) = core_and_quotient(nu, self.e)?;
            if q.size() < k {
                continue;
            }
            let sn = hook_sign(nu, self.e, self.convention)?;
            for sigma in Self::quotient_restrictions(&q, k) {
                let lam = from_core_and_quotient(&core, &QuotientTuple(sigma.clone()), self.e)?;
                let eps = sn * hook_sign(&lam, self.e, self.convention)?;
                for mu in partitions_of(k) {
                    let lr = skew_lr_multi(q.components(), &sigma, &mu);
                    if lr == 0 {
                        continue;
                    }
                    let slot = out.entry((lam.clone(), mu)).or_default();
                    *slot += c * BigInt::from(eps as i64 * lr as i64);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// The Farahat map on degree `e k`: the pure case `λ = ∅` of [`Lusztig::restrict`].
    pub fn farahat_restrict(&self, x: &CharacterVector, k: u32) -> Result<CharacterVector> {
        let mut out = CharacterVector::new(x.flavor);
        for (nu, c) in x.iter() {
            if nu.size() != self.e * k {
                return Err(Error::SizeMismatch(format!("|{nu}| != {} * {k}", self.e)));
            }
            let (core, q) = core_and_quotient(nu, self.e)?;
            if !core.is_empty() {
                continue;
            }
            let sign = hook_sign(nu, self.e, self.convention)?;
            for mu in partitions_of(k) {
                let lr = lr_multi_unchecked(q.components(), &mu);
                if lr > 0 {
                    out.add(mu, &(c * BigInt::from(sign as i64 * lr as i64)));
                }
            }
        }
        Ok(out)
    }
}

/// `L_μ` on a character vector for the default convention.
pub fn lusztig_l(x: &CharacterVector, mu: &Partition, e: u32) -> Result<CharacterVector> {
    Lusztig::new(e)?.induce(x, mu)
}

/// The Farahat map for the default convention.
pub fn farahat_restrict(x: &CharacterVector, e: u32, k: u32) -> Result<CharacterVector> {
    Lusztig::new(e)?.farahat_restrict(x, k)
}

/// The label of `χ_λ` on the relative Weyl group side: its e-quotient.
pub fn bmm_label(lambda: &Partition, e: u32) -> Result<QuotientTuple> {
    Ok(core_and_quotient(lambda, e)?.1)
}

/// One factor of an e-split Levi subgroup: `GL(n, q^d)` or `U(n, q^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviFactor {
    pub flavor: Flavor,
    pub rank: u32,
    pub q_power: u32,
}

impl fmt::Display for LeviFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q_power {
            1 => write!(f, "{}({},q)", self.flavor, self.rank),
            d => write!(f, "{}({},q^{d})", self.flavor, self.rank),
        }
    }
}

/// The Levi subgroup `L = G_{|μ|} × GL(|α|, q^e)` and cuspidal label data `(μ, α)` attached to `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspidalPairSpec {
    pub e: u32,
    pub factors: Vec<LeviFactor>,
    pub mu: Partition,
    pub alpha: Partition,
}

impl CuspidalPairSpec {
    /// Size of the ambient group: `|μ| + e|α|`.
    pub fn n(&self) -> u32 {
        self.mu.size() + self.e * self.alpha.size()
    }
}

impl fmt::Display for CuspidalPairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(" x "))
    }
}

/// Levi data for `χ_λ`. For `U`, the torus-type factor follows the
/// `e'` rule: `GL(k, q^{2e})` for odd `e`, `U(k, q^{e/2})` for `e ≡ 2 mod 4`,
/// and `GL(k, q^e)` for `e ≡ 0 mod 4`.
pub fn levi_spec(lambda: &Partition, e: u32, flavor: Flavor) -> Result<CuspidalPairSpec> {
    let (mu, alpha) = decompose_singular(lambda, e)?;
    let mut factors = Vec::new();
    if !mu.is_empty() || alpha.is_empty() {
        factors.push(LeviFactor { flavor, rank: mu.size(), q_power: 1 });
    }
    if !alpha.is_empty() {
        let (fl, d) = match flavor {
            Flavor::GL => (Flavor::GL, e),
            Flavor::U if e % 2 == 1 => (Flavor::GL, 2 * e),
            Flavor::U if e % 4 == 2 => (Flavor::U, e / 2),
            Flavor::U => (Flavor::GL, e),
        };
        factors.push(LeviFactor { flavor: fl, rank: alpha.size(), q_power: d });
    }
    Ok(CuspidalPairSpec { e, factors, mu, alpha })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn chi(terms: &[(Partition, i64)]) -> CharacterVector {
        CharacterVector::from_entries(Flavor::GL, terms.iter().map(|(l, c)| (l.clone(), BigInt::from(*c))))
    }

    #[test]
    fn blocks() {
        let b = block_partition(4, 2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].members.len(), 5);
        assert_eq!(b[0].core, part![]);
        assert_eq!(block_partition(4, 5).unwrap().len(), 5);
        let b = block_partition(0, 3).unwrap();
        assert_eq!(b, vec![Block { core: part![], weight: 0, members: vec![part![]] }]);
    }

    #[test]
    fn induction_examples() {
        let l = Lusztig::new(2).unwrap();
        let x = CharacterVector::chi(part![2, 1]);
        assert_eq!(l.induce(&x, &part![]).unwrap(), x);
        let got = l.induce(&CharacterVector::chi(part![]), &part![3]).unwrap();
        assert_eq!(got, chi(&[(part![3, 3], 1), (part![4, 2], -1), (part![5, 1], 1), (part![6], -1)]));
        let got = l.induce(&CharacterVector::chi(part![]), &part![1]).unwrap();
        assert_eq!(got, chi(&[(part![1, 1], 1), (part![2], -1)]));
    }

    #[test]
    fn farahat() {
        let l = Lusztig::new(2).unwrap();
        let got = l.farahat_restrict(&CharacterVector::chi(part![3, 3]), 3).unwrap();
        assert_eq!(got.get(&part![3]), BigInt::from(1));
        assert!(l.farahat_restrict(&CharacterVector::chi(part![2, 1]), 1).is_err());
        assert!(l.farahat_restrict(&CharacterVector::chi(part![2, 1]), 0).is_err());
        assert!(l.farahat_restrict(&CharacterVector::chi(part![3, 2, 1]), 3).unwrap().is_zero());
        let x = chi(&[(part![2, 1, 1], 1)]);
        assert!(l.farahat_restrict(&CharacterVector::chi(part![3]), 2).is_err());
        assert!(!l.farahat_restrict(&x, 2).unwrap().is_zero());
    }

    #[test]
    fn labels() {
        assert!(bmm_label(&part![2, 1], 2).unwrap().is_empty());
        assert_eq!(bmm_label(&part![3, 1], 2).unwrap(), QuotientTuple(vec![part![2], part![]]));
    }

    #[test]
    fn levis() {
        assert_eq!(levi_spec(&part![4, 1, 1], 2, Flavor::GL).unwrap().to_string(), "GL(4,q) x GL(1,q^2)");
        let s = levi_spec(&part![2, 2, 1, 1], 2, Flavor::GL).unwrap();
        assert_eq!((s.to_string(), s.mu.clone(), s.alpha.clone()), ("GL(3,q^2)".into(), part![], part![2, 1]));
        assert_eq!(levi_spec(&part![3, 1], 2, Flavor::GL).unwrap().to_string(), "GL(4,q)");
        assert_eq!(levi_spec(&part![1, 1, 1], 3, Flavor::U).unwrap().to_string(), "GL(1,q^6)");
        assert_eq!(levi_spec(&part![1, 1], 2, Flavor::U).unwrap().to_string(), "U(1,q)");
        assert_eq!(levi_spec(&part![2, 1, 1], 2, Flavor::GL).unwrap().n(), 4);
    }
}
