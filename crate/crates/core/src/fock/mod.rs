//! The level-one Fock space over `Z[v, v^{-1}]` with basis `|λ>` and its
//! ribbon operators `V_k`, `S_μ`, `b_r`, together with the Chevalley
//! operators `f_r`.

pub mod ribbon;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::convention::{BoxSide, Convention, RibbonStatistic};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::{check_modulus, core, is_core, residue, Partition};
use crate::symfunc::inverse_kostka_row;

pub use ribbon::{add_ribbons, horizontal_strips, remove_ribbons, RibbonMove, RibbonStrip};

/// A finitely supported map from partitions to Laurent polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `|λ>`.
    pub fn basis(lambda: Partition) -> Self {
        Self::from_terms([(lambda, LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, LaurentPoly)>) -> Self {
        let mut v = Self::zero();
        for (l, c) in terms {
            v.add_term(l, &c);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * x`.
    pub fn add_scaled(&mut self, x: &FockVector, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (l, a) in &x.terms {
            self.add_term(l.clone(), &(a * c));
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&LaurentPoly> {
        self.terms.get(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies `v -> v^{-1}` to every coefficient (not the bar involution of the space).
    pub fn bar_coefficients(&self) -> Self {
        FockVector { terms: self.terms.iter().map(|(l, c)| (l.clone(), c.bar())).collect() }
    }

    /// Coefficients at `v = 1`, zeros dropped.
    pub fn eval_one(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.eval_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// The common size of the index partitions, if all agree.
    pub fn degree(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// Whether all index partitions have equal size (the zero vector counts).
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `{"e":2,"d":0,"entries":{"3,1":"1 - v^-1"}}`, entries in decreasing lexicographic order.
    pub fn to_json(&self, e: u32, d: i64) -> serde_json::Value {
        let entries: serde_json::Map<String, serde_json::Value> =
            self.terms.iter().rev().map(|(l, c)| (l.to_string(), c.to_string().into())).collect();
        serde_json::json!({ "e": e, "d": d, "entries": entries })
    }

    /// Parses the JSON form written by [`FockVector::to_json`]; coefficients
    /// may be strings, integers or exponent maps. Returns `(vector, e, d)`.
    pub fn from_json(v: &serde_json::Value) -> Result<(Self, Option<u32>, i64)> {
        let bad = || Error::Parse(format!("not a Fock vector: {v}"));
        let e = v.get("e").and_then(|x| x.as_u64()).map(|x| x as u32);
        let d = v.get("d").and_then(|x| x.as_i64()).unwrap_or(0);
        let entries = v.get("entries").and_then(|x| x.as_object()).ok_or_else(bad)?;
        let mut out = FockVector::zero();
        for (k, c) in entries {
            let lam: Partition = k.parse()?;
            let coef = match c {
                serde_json::Value::String(s) => s.parse()?,
                serde_json::Value::Number(_) => LaurentPoly::from(crate::laurent::bigint_from_json(c)?),
                serde_json::Value::Object(_) => LaurentPoly::from_json(c)?,
                _ => return Err(bad()),
            };
            out.add_term(lam, &coef);
        }
        Ok((out, e, d))
    }
}

impl std::ops::AddAssign<&FockVector> for FockVector {
    fn add_assign(&mut self, rhs: &FockVector) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c);
        }
    }
}

impl std::ops::SubAssign<&FockVector> for FockVector {
    fn sub_assign(&mut self, rhs: &FockVector) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), &-c);
        }
    }
}

impl std::ops::Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::fmt::Display for FockVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.terms.iter().rev().map(|(l, c)| format!("({c})|{l}>")).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl std::fmt::Debug for FockVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FockVector[{self}]")
    }
}

type StripCache = HashMap<(Partition, u32), Arc<Vec<(Partition, u32)>>>;

/// The Fock space `F_e` with a fixed label convention.
///
/// Cloning is cheap; clones share the ribbon-strip cache.
#[derive(Clone, Debug)]
pub struct FockSpace {
    e: u32,
    convention: Convention,
    strips: Arc<RwLock<StripCache>>,
}

impl FockSpace {
    pub fn new(e: u32) -> Result<Self> {
        Self::with_convention(e, Convention::default())
    }

    pub fn with_convention(e: u32, convention: Convention) -> Result<Self> {
        check_modulus(e)?;
        Ok(FockSpace { e, convention, strips: Default::default() })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    fn statistic(&self, spin: u32, cospin: u32) -> u32 {
        match self.convention.ribbon_statistic() {
            RibbonStatistic::Arm => cospin,
            RibbonStatistic::Leg => spin,
        }
    }

    /// Horizontal strips on `λ` of weight `k` with the convention's statistic.
    fn strip_terms(&self, lambda: &Partition, k: u32) -> Result<Arc<Vec<(Partition, u32)>>> {
        let key = (lambda.clone(), k);
        if let Some(t) = self.strips.read().expect("strip cache").get(&key) {
            return Ok(t.clone());
        }
        let terms: Vec<(Partition, u32)> = horizontal_strips(lambda, self.e, k)?
            .into_iter()
            .map(|s| {
                let st = self.statistic(s.spin, s.cospin);
                (s.outer, st)
            })
            .collect();
        let terms = Arc::new(terms);
        self.strips.write().expect("strip cache").insert(key, terms.clone());
        Ok(terms)
    }

    /// `V_k|λ> = Σ (-1)^s v^{-s} |μ>` over horizontal e-ribbon strips `μ/λ` of weight `k`.
    pub fn apply_v(&self, x: &FockVector, k: u32) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (lam, c) in x.iter() {
            for (mu, s) in self.strip_terms(lam, k)?.iter() {
                out.add_term(mu.clone(), &(c * &LaurentPoly::signed_power(*s)));
            }
        }
        Ok(out)
    }

    /// `V_ρ = V_{ρ_1} V_{ρ_2} ...`.
    pub fn apply_v_rho(&self, x: &FockVector, rho: &Partition) -> Result<FockVector> {
        let mut y = x.clone();
        for &k in rho.parts().iter().rev() {
            y = self.apply_v(&y, k)?;
        }
        Ok(y)
    }

    /// `S_μ = Σ_ρ κ_{μρ} V_ρ` with inverse Kostka numbers `κ`.
    pub fn apply_s(&self, x: &FockVector, mu: &Partition) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (rho, kappa) in inverse_kostka_row(mu) {
            out.add_scaled(&self.apply_v_rho(x, &rho)?, &LaurentPoly::from(kappa));
        }
        Ok(out)
    }

    /// `b_r`: adds a single `e r`-ribbon with weight `(-1)^s v^{-s}`.
    pub fn apply_b(&self, x: &FockVector, r: u32) -> Result<FockVector> {
        self.check_positive(r)?;
        let mut out = FockVector::zero();
        for (lam, c) in x.iter() {
            for m in add_ribbons(lam, self.e * r) {
                let s = self.statistic(m.leg, m.arm);
                out.add_term(m.result, &(c * &LaurentPoly::signed_power(s)));
            }
        }
        Ok(out)
    }

    /// `b'_r`, the transpose of `b_r` for the bilinear form `<λ|μ> = δ_{λμ}`.
    pub fn apply_b_adjoint(&self, x: &FockVector, r: u32) -> Result<FockVector> {
        self.check_positive(r)?;
        let mut out = FockVector::zero();
        for (lam, c) in x.iter() {
            for m in remove_ribbons(lam, self.e * r) {
                let s = self.statistic(m.leg, m.arm);
                out.add_term(m.result, &(c * &LaurentPoly::signed_power(s)));
            }
        }
        Ok(out)
    }

    fn check_positive(&self, r: u32) -> Result<()> {
        if r == 0 {
            Err(Error::Parse("ribbon operator index must be positive".into()))
        } else {
            Ok(())
        }
    }

    fn check_residue(&self, r: u32) -> Result<()> {
        if r >= self.e {
            Err(Error::InvalidResidue(r, self.e))
        } else {
            Ok(())
        }
    }

    /// Addable and removable cells of residue `r`, as rows.
    fn residue_rows(&self, lam: &Partition, r: u32) -> (Vec<usize>, Vec<usize>) {
        let pick = |cells: Vec<(usize, usize)>| -> Vec<usize> {
            cells.into_iter().filter(|&(i, j)| residue(i, j, self.e) == r).map(|(i, _)| i).collect()
        };
        (pick(lam.addable_cells()), pick(lam.removable_cells()))
    }

    fn on_counted_side(&self, row: usize, of: usize) -> bool {
        match self.convention.box_side() {
            BoxSide::Below => row > of,
            BoxSide::Above => row < of,
        }
    }

    /// `f_r|λ> = Σ v^N |λ + □>` over addable cells of residue `r`, where `N`
    /// is the number of addable minus removable `r`-cells on the counted side.
    pub fn apply_f(&self, x: &FockVector, r: u32) -> Result<FockVector> {
        self.apply_f_divided(x, r, 1)
    }

    /// The divided power `f_r^{(k)} = f_r^k / [k]!`, computed directly: each
    /// `k`-subset `S` of addable `r`-cells contributes `v^N`, with `N` summing
    /// over `γ ∈ S` the addable cells outside `S` minus the removable cells on
    /// the counted side of `γ`.
    pub fn apply_f_divided(&self, x: &FockVector, r: u32, k: u32) -> Result<FockVector> {
        self.check_residue(r)?;
        let mut out = FockVector::zero();
        for (lam, c) in x.iter() {
            let (add, rem) = self.residue_rows(lam, r);
            for subset in subsets(add.len(), k as usize) {
                let mut n = 0i32;
                for &s in &subset {
                    let g = add[s];
                    n += (0..add.len()).filter(|t| !subset.contains(t) && self.on_counted_side(add[*t], g)).count()
                        as i32;
                    n -= rem.iter().filter(|&&q| self.on_counted_side(q, g)).count() as i32;
                }
                let mut mu = lam.clone();
                for &s in &subset {
                    mu = mu.with_cell_added(add[s]);
                }
                out.add_term(mu, &c.shift(n));
            }
        }
        Ok(out)
    }

    /// Restriction of `x` to labels with the given e-core.
    pub fn block_component(&self, x: &FockVector, core_: &Partition) -> Result<FockVector> {
        if !is_core(core_, self.e)? {
            return Err(Error::NotACore(core_.clone(), self.e));
        }
        let mut out = FockVector::zero();
        for (l, c) in x.iter() {
            if core(l, self.e)? == *core_ {
                out.add_term(l.clone(), c);
            }
        }
        Ok(out)
    }
}

/// Increasing index subsets of `0..n` of size `k`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn at_one(x: &FockVector) -> Vec<(String, i64)> {
        x.eval_one().iter().rev().map(|(l, c)| (l.to_string(), i64::try_from(c).unwrap())).collect()
    }

    fn owned(v: &[(&str, i64)]) -> Vec<(String, i64)> {
        v.iter().map(|(a, b)| (a.to_string(), *b)).collect()
    }

    #[test]
    fn v_on_vacuum() {
        let f = FockSpace::new(2).unwrap();
        let vac = FockVector::basis(part![]);
        assert_eq!(at_one(&f.apply_v(&vac, 1).unwrap()), owned(&[("2", -1), ("1,1", 1)]));
        assert_eq!(
            at_one(&f.apply_v(&vac, 3).unwrap()),
            owned(&[("6", -1), ("5,1", 1), ("4,2", -1), ("3,3", 1)])
        );
        assert!(f.apply_v(&FockVector::zero(), 2).unwrap().is_zero());
    }

    #[test]
    fn s_on_vacuum() {
        let f = FockSpace::new(2).unwrap();
        let vac = FockVector::basis(part![]);
        assert_eq!(f.apply_s(&vac, &part![1]).unwrap(), f.apply_v(&vac, 1).unwrap());
        assert_eq!(
            at_one(&f.apply_s(&vac, &part![3]).unwrap()),
            owned(&[("6", -1), ("5,1", 1), ("4,2", -1), ("3,3", 1)])
        );
    }

    #[test]
    fn f_operators() {
        let f = FockSpace::new(2).unwrap();
        assert_eq!(f.apply_f(&FockVector::basis(part![]), 0).unwrap(), FockVector::basis(part![1]));
        let y = f.apply_f(&FockVector::basis(part![1]), 1).unwrap();
        assert_eq!(y.coefficient(&part![2]), LaurentPoly::monomial(1, 1));
        assert_eq!(y.coefficient(&part![1, 1]), LaurentPoly::one());
        assert!(f.apply_f(&FockVector::basis(part![1]), 0).unwrap().is_zero());
        assert!(f.apply_f(&FockVector::basis(part![]), 2).is_err());
    }

    #[test]
    fn divided_powers_match_quotients() {
        let f = FockSpace::new(2).unwrap();
        let x = FockVector::basis(part![2, 1]);
        let mut y = x.clone();
        for _ in 0..2 {
            y = f.apply_f(&y, 0).unwrap();
        }
        let q = LaurentPoly::quantum_factorial(2);
        let expect = FockVector::from_terms(y.iter().map(|(l, c)| (l.clone(), c.div_exact(&q).unwrap())));
        assert_eq!(f.apply_f_divided(&x, 0, 2).unwrap(), expect);
    }

    #[test]
    fn heisenberg_single_ribbons() {
        let f = FockSpace::new(2).unwrap();
        let vac = FockVector::basis(part![]);
        assert_eq!(f.apply_b(&vac, 1).unwrap(), f.apply_v(&vac, 1).unwrap());
        assert_eq!(
            at_one(&f.apply_b(&vac, 2).unwrap()),
            owned(&[("4", -1), ("3,1", 1), ("2,1,1", -1), ("1,1,1,1", 1)])
        );
    }

    #[test]
    fn blocks() {
        let f = FockSpace::new(2).unwrap();
        let x = f.apply_v(&FockVector::basis(part![]), 1).unwrap();
        assert_eq!(f.block_component(&x, &part![]).unwrap(), x);
        assert!(f.block_component(&x, &part![1]).unwrap().is_zero());
        assert!(f.block_component(&x, &part![2]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = FockVector::from_terms([(part![3, 1], "1 - v^-1".parse().unwrap())]);
        let j = x.to_json(2, 0);
        assert_eq!(j.to_string(), r#"{"e":2,"d":0,"entries":{"3,1":"1 - v^-1"}}"#);
        assert_eq!(FockVector::from_json(&j).unwrap(), (x, Some(2), 0));
    }
}
