//! Partitions, conjugation, e-regularity, residues and the abacus
//! (e-core, e-quotient, charge vector).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived order compares parts lexicographically, so among partitions
/// of the same size it refines the dominance order: `(1,1) < (2)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing and positive"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from an arbitrary multiset of non-negative parts.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Cells `(row, column)` of the Young diagram, 0-indexed, rows top down.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        (self.part(i) as usize) > j
    }

    /// Whether the diagram of `other` is contained in that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }

    /// Addable cells, top row first.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| (i, self.part(i) as usize))
            .collect()
    }

    /// Removable cells, top row first.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i) as usize - 1))
            .collect()
    }

    /// The partition with one cell added at the end of row `i`.
    pub fn with_cell_added(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Partition::from_sorted(parts)
    }

    /// Multiplicity of each part value `1..=λ_1` (index 0 unused).
    fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    /// First-column hook lengths as beta numbers on an abacus with `beads` beads.
    fn beta_numbers(&self, beads: usize) -> Vec<usize> {
        debug_assert!(beads >= self.len());
        (0..beads).map(|i| self.part(i) as usize + beads - 1 - i).collect()
    }

    fn from_beta_numbers(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let b = beta.len();
        Partition::from_multiset(beta.iter().enumerate().map(|(i, &x)| (x + i + 1 - b) as u32).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the literal syntax `"a,b,c"`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building partitions in code and tests; panics on invalid parts.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// An ordered e-tuple of partitions in abacus runner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuotientTuple(pub Vec<Partition>);

impl QuotientTuple {
    pub fn empty(e: u32) -> Self {
        QuotientTuple(vec![Partition::empty(); e as usize])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }
}

impl fmt::Display for QuotientTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| format!("[{p}]")).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Charges of the e runners of a Maya diagram; they sum to `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChargeVector {
    pub charges: Vec<i64>,
    pub d: i64,
}

impl ChargeVector {
    pub fn new(charges: Vec<i64>, d: i64) -> Result<Self> {
        let found: i64 = charges.iter().sum();
        if found != d {
            return Err(Error::ChargeSum { expected: d, found });
        }
        Ok(ChargeVector { charges, d })
    }
}

pub(crate) fn check_modulus(e: u32) -> Result<()> {
    if e < 2 {
        Err(Error::InvalidModulus(e))
    } else {
        Ok(())
    }
}

/// All partitions of `n` in lexicographically decreasing order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose diagram contains `inner`.
pub fn partitions_containing(inner: &Partition, n: u32) -> Vec<Partition> {
    if n < inner.size() {
        return Vec::new();
    }
    let mut layer: BTreeSet<Partition> = BTreeSet::from([inner.clone()]);
    for _ in inner.size()..n {
        layer = layer
            .iter()
            .flat_map(|p| p.addable_cells().into_iter().map(move |(i, _)| p.with_cell_added(i)))
            .collect();
    }
    layer.into_iter().rev().collect()
}

/// Partitions `λ ⊆ outer` with `|λ| = n`.
pub fn partitions_inside(outer: &Partition, n: u32) -> Vec<Partition> {
    if n > outer.size() {
        return Vec::new();
    }
    let mut layer: BTreeSet<Partition> = BTreeSet::from([outer.clone()]);
    for _ in n..outer.size() {
        layer = layer
            .iter()
            .flat_map(|p| {
                p.removable_cells().into_iter().map(move |(i, _)| {
                    let mut parts = p.parts.clone();
                    parts[i] -= 1;
                    Partition::from_multiset(parts)
                })
            })
            .collect();
    }
    layer.into_iter().rev().collect()
}

/// All e-tuples of partitions with total size `k`.
pub fn multipartitions(e: u32, k: u32) -> Vec<QuotientTuple> {
    fn go(e: usize, k: u32, prefix: &mut Vec<Partition>, out: &mut Vec<QuotientTuple>) {
        if prefix.len() + 1 == e {
            for p in partitions_of(k) {
                prefix.push(p);
                out.push(QuotientTuple(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for j in (0..=k).rev() {
            for p in partitions_of(j) {
                prefix.push(p);
                go(e, k - j, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if e > 0 {
        go(e as usize, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `μ + eα`, computed part-wise.
pub fn add_scaled(mu: &Partition, alpha: &Partition, e: u32) -> Partition {
    let len = mu.len().max(alpha.len());
    Partition::from_sorted((0..len).map(|i| mu.part(i) + e * alpha.part(i)).collect())
}

/// True iff no part value occurs `e` or more times.
pub fn is_e_regular(lambda: &Partition, e: u32) -> Result<bool> {
    check_modulus(e)?;
    Ok(lambda.multiplicities().iter().all(|&m| m < e))
}

/// Splits each multiplicity `m_j = r_j + e q_j`; returns `(μ, α)` where `μ` has
/// multiplicities `r_j` (hence is e-regular) and `α` has multiplicities `q_j`.
pub fn decompose_singular(lambda: &Partition, e: u32) -> Result<(Partition, Partition)> {
    check_modulus(e)?;
    let (mut mu, mut alpha) = (Vec::new(), Vec::new());
    for (j, &m) in lambda.multiplicities().iter().enumerate().rev() {
        mu.extend(std::iter::repeat_n(j as u32, (m % e) as usize));
        alpha.extend(std::iter::repeat_n(j as u32, (m / e) as usize));
    }
    Ok((Partition::from_multiset(mu), Partition::from_multiset(alpha)))
}

/// Residues `(j - i) mod e` of all cells, sorted.
pub fn residues(lambda: &Partition, e: u32) -> Result<Vec<u32>> {
    check_modulus(e)?;
    let mut r: Vec<u32> = lambda.cells().map(|(i, j)| residue(i, j, e)).collect();
    r.sort_unstable();
    Ok(r)
}

/// Number of cells of each residue.
pub fn residue_content(lambda: &Partition, e: u32) -> Vec<u32> {
    let mut c = vec![0; e as usize];
    for (i, j) in lambda.cells() {
        c[residue(i, j, e) as usize] += 1;
    }
    c
}

pub(crate) fn residue(i: usize, j: usize, e: u32) -> u32 {
    (j as i64 - i as i64).rem_euclid(e as i64) as u32
}

fn bead_count(lambda: &Partition, e: u32) -> usize {
    lambda.len().div_ceil(e as usize) * e as usize
}

/// The e-core and e-quotient read from an abacus whose bead count is the
/// least multiple of `e` not below the length of `λ`.
pub fn core_and_quotient(lambda: &Partition, e: u32) -> Result<(Partition, QuotientTuple)> {
    check_modulus(e)?;
    let e = e as usize;
    let b = bead_count(lambda, e as u32);
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); e];
    for x in lambda.beta_numbers(b) {
        levels[x % e].push(x / e);
    }
    let mut core_beta = Vec::with_capacity(b);
    let mut quotient = Vec::with_capacity(e);
    for (j, runner) in levels.iter().enumerate() {
        // beta numbers are produced in decreasing order, so levels are too
        let c = runner.len();
        quotient.push(Partition::from_multiset(
            runner.iter().enumerate().map(|(t, &l)| (l + t + 1 - c) as u32).collect(),
        ));
        core_beta.extend((0..c).map(|l| l * e + j));
    }
    Ok((Partition::from_beta_numbers(core_beta), QuotientTuple(quotient)))
}

pub fn core(lambda: &Partition, e: u32) -> Result<Partition> {
    Ok(core_and_quotient(lambda, e)?.0)
}

pub fn is_core(lambda: &Partition, e: u32) -> Result<bool> {
    Ok(core_and_quotient(lambda, e)?.1.is_empty())
}

/// Inverse of [`core_and_quotient`].
pub fn from_core_and_quotient(core: &Partition, quotient: &QuotientTuple, e: u32) -> Result<Partition> {
    check_modulus(e)?;
    if quotient.0.len() != e as usize {
        return Err(Error::QuotientLength { expected: e as usize, found: quotient.0.len() });
    }
    if !is_core(core, e)? {
        return Err(Error::NotACore(core.clone(), e));
    }
    let eu = e as usize;
    let mut b = bead_count(core, e);
    let counts = |b: usize| -> Vec<usize> {
        let mut c = vec![0; eu];
        for x in core.beta_numbers(b) {
            c[x % eu] += 1;
        }
        c
    };
    let mut c = counts(b);
    while quotient.0.iter().zip(&c).any(|(q, &n)| q.len() > n) {
        b += eu;
        c = counts(b);
    }
    let mut beta = Vec::with_capacity(b);
    for (j, (q, &n)) in quotient.0.iter().zip(&c).enumerate() {
        beta.extend((0..n).map(|t| (n - 1 - t + q.part(t) as usize) * eu + j));
    }
    Ok(Partition::from_beta_numbers(beta))
}

/// Result of stripping e-rim hooks from a partition down to its e-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookRemoval {
    pub core: Partition,
    /// Number of hooks removed.
    pub weight: u32,
    /// Sum of leg lengths (rows minus one) of the removed hooks.
    pub leg_total: u32,
    /// Sum of arm lengths (columns minus one) of the removed hooks.
    pub arm_total: u32,
}

impl RimHookRemoval {
    /// `(-1)^{leg total}`: independent of the removal order.
    pub fn leg_sign(&self) -> i32 {
        if self.leg_total.is_multiple_of(2) { 1 } else { -1 }
    }

    /// `(-1)^{arm total}`.
    pub fn arm_sign(&self) -> i32 {
        if self.arm_total.is_multiple_of(2) { 1 } else { -1 }
    }
}

/// Removes e-rim hooks one at a time by sliding beads on the abacus.
pub fn remove_rim_hooks(lambda: &Partition, e: u32) -> Result<RimHookRemoval> {
    check_modulus(e)?;
    let eu = e as usize;
    let b = lambda.len();
    let mut beads: BTreeSet<usize> = lambda.beta_numbers(b).into_iter().collect();
    let (mut weight, mut leg_total) = (0u32, 0u32);
    loop {
        let movable = beads.iter().copied().find(|&x| x >= eu && !beads.contains(&(x - eu)));
        let Some(x) = movable else { break };
        leg_total += beads.range(x - eu + 1..x).count() as u32;
        beads.remove(&x);
        beads.insert(x - eu);
        weight += 1;
    }
    let core = Partition::from_beta_numbers(beads.into_iter().collect());
    Ok(RimHookRemoval { core, weight, leg_total, arm_total: weight * (e - 1) - leg_total })
}

/// Charge vector of an e-core: runner `j` of the Maya set `{λ_i - i + d}`
/// (positions `j + e k`) has charge `#{beads with k >= 0} - #{holes with k < 0}`.
pub fn core_to_charge(core: &Partition, e: u32, d: i64) -> Result<ChargeVector> {
    check_modulus(e)?;
    if !is_core(core, e)? {
        return Err(Error::NotACore(core.clone(), e));
    }
    Ok(maya_charge(core, e, d))
}

fn maya_charge(lambda: &Partition, e: u32, d: i64) -> ChargeVector {
    let ell = lambda.len() as i64;
    let beads: BTreeSet<i64> = (1..=ell).map(|i| lambda.part(i as usize - 1) as i64 - i + d).collect();
    // every position below d - ell is a bead
    let lo = (d - ell).min(0);
    let hi = (lambda.part(0) as i64 + d).max(0);
    let mut charges = vec![0i64; e as usize];
    for x in lo..=hi {
        let j = x.rem_euclid(e as i64) as usize;
        let bead = x < d - ell || beads.contains(&x);
        if x >= 0 && bead {
            charges[j] += 1;
        } else if x < 0 && !bead {
            charges[j] -= 1;
        }
    }
    ChargeVector { charges, d }
}

/// Inverse of [`core_to_charge`].
pub fn charge_to_core(s: &ChargeVector, e: u32) -> Result<Partition> {
    check_modulus(e)?;
    if s.charges.len() != e as usize {
        return Err(Error::ChargeLength { expected: e as usize, found: s.charges.len() });
    }
    let found: i64 = s.charges.iter().sum();
    if found != s.d {
        return Err(Error::ChargeSum { expected: s.d, found });
    }
    let ei = e as i64;
    let min_c = *s.charges.iter().min().expect("e >= 2");
    let max_c = *s.charges.iter().max().expect("e >= 2");
    // runner j holds beads exactly at j + e k for k < c_j
    let mut parts = Vec::new();
    let mut i = 0i64;
    for x in (ei * (min_c - 1)..ei * max_c).rev() {
        let j = x.rem_euclid(ei) as usize;
        let k = x.div_euclid(ei);
        if k < s.charges[j] {
            i += 1;
            parts.push((x + i - s.d) as u32);
        }
    }
    Ok(Partition::from_multiset(parts))
}

/// Dominance order: every partial sum of `λ` is at most that of `μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    Ok(dominates(mu, lambda))
}

/// `μ ⊵ λ` for partitions of equal size.
pub(crate) fn dominates(mu: &Partition, lambda: &Partition) -> bool {
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        if a > b {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&part![]), part![]);
        assert_eq!(conjugate(&part![3, 1]), part![2, 1, 1]);
        assert_eq!(conjugate(&part![2, 2, 2]), part![3, 3]);
    }

    #[test]
    fn scaled_sums() {
        assert_eq!(add_scaled(&part![1], &part![1], 2), part![3]);
        assert_eq!(add_scaled(&part![], &part![3], 2), part![6]);
        assert_eq!(add_scaled(&part![2, 1], &part![1, 1], 2), part![4, 3]);
    }

    #[test]
    fn regularity() {
        assert!(is_e_regular(&part![2], 2).unwrap());
        assert!(!is_e_regular(&part![1, 1], 2).unwrap());
        assert!(is_e_regular(&part![3, 1], 2).unwrap());
        assert_eq!(is_e_regular(&part![1], 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn singular_decomposition() {
        assert_eq!(decompose_singular(&part![2, 1, 1, 1, 1], 2).unwrap(), (part![2], part![1, 1]));
        assert_eq!(decompose_singular(&part![3, 3], 2).unwrap(), (part![], part![3]));
        assert_eq!(decompose_singular(&part![4, 1, 1], 2).unwrap(), (part![4], part![1]));
        assert_eq!(decompose_singular(&part![2, 2, 1, 1], 2).unwrap(), (part![], part![2, 1]));
        assert_eq!(decompose_singular(&part![5, 2], 2).unwrap(), (part![5, 2], part![]));
    }

    #[test]
    fn residue_multisets() {
        assert_eq!(residues(&part![], 3).unwrap(), Vec::<u32>::new());
        assert_eq!(residues(&part![2, 1], 2).unwrap(), vec![0, 1, 1]);
        assert_eq!(residues(&part![3], 3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn cores_and_quotients() {
        let (c, q) = core_and_quotient(&part![3, 1], 2).unwrap();
        assert_eq!(c, part![]);
        assert_eq!(q, QuotientTuple(vec![part![2], part![]]));
        let (c, q) = core_and_quotient(&part![2, 1], 2).unwrap();
        assert_eq!(c, part![2, 1]);
        assert!(q.is_empty());
        assert_eq!(core_and_quotient(&part![], 3).unwrap(), (part![], QuotientTuple::empty(3)));
    }

    #[test]
    fn reconstruction() {
        let q = QuotientTuple(vec![part![2], part![]]);
        assert_eq!(from_core_and_quotient(&part![], &q, 2).unwrap(), part![3, 1]);
        assert_eq!(from_core_and_quotient(&part![2, 1], &QuotientTuple::empty(2), 2).unwrap(), part![2, 1]);
        let q = QuotientTuple(vec![part![1], part![], part![]]);
        let lam = from_core_and_quotient(&part![1], &q, 3).unwrap();
        assert_eq!(lam.size(), 4);
        assert_eq!(core_and_quotient(&lam, 3).unwrap(), (part![1], q));
        assert!(matches!(
            from_core_and_quotient(&part![2], &QuotientTuple::empty(2), 2),
            Err(Error::NotACore(..))
        ));
    }

    #[test]
    fn charges() {
        assert_eq!(core_to_charge(&part![], 2, 0).unwrap().charges, vec![0, 0]);
        assert_eq!(core_to_charge(&part![1], 2, 0).unwrap().charges, vec![1, -1]);
        assert_eq!(charge_to_core(&ChargeVector::new(vec![0, 0], 0).unwrap(), 2).unwrap(), part![]);
        let a = core_to_charge(&part![2, 1], 2, 0).unwrap();
        let b = core_to_charge(&part![3, 2, 1], 2, 0).unwrap();
        assert_ne!(a, b);
        assert!(ChargeVector::new(vec![1, 1], 0).is_err());
        assert!(core_to_charge(&part![2], 2, 0).is_err());
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&part![1, 1], &part![2]).unwrap());
        assert!(!dominance_leq(&part![3, 1, 1, 1], &part![2, 2, 2]).unwrap());
        assert!(!dominance_leq(&part![2, 2, 2], &part![3, 1, 1, 1]).unwrap());
        assert!(dominance_leq(&part![2, 1], &part![2, 1]).unwrap());
        assert!(dominance_leq(&part![2], &part![1]).is_err());
    }

    #[test]
    fn literals() {
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert_eq!("3,1".parse::<Partition>().unwrap(), part![3, 1]);
        assert_eq!(" 2, 2 ".parse::<Partition>().unwrap(), part![2, 2]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part![4, 2].to_string(), "4,2");
    }

    #[test]
    fn enumeration_order() {
        let p: Vec<String> = partitions_of(4).iter().map(ToString::to_string).collect();
        assert_eq!(p, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_of(0), vec![part![]]);
        assert_eq!(multipartitions(2, 2).len(), 5);
        assert_eq!(partitions_containing(&part![1], 3).len(), 3);
        assert_eq!(partitions_inside(&part![2, 1], 1), vec![part![1]]);
    }

    #[test]
    fn rim_hooks() {
        let r = remove_rim_hooks(&part![1, 1], 2).unwrap();
        assert_eq!((r.core, r.weight, r.leg_total, r.arm_total), (part![], 1, 1, 0));
        let r = remove_rim_hooks(&part![3, 3], 2).unwrap();
        assert_eq!((r.weight, r.leg_sign(), r.arm_sign()), (3, -1, 1));
    }
}
