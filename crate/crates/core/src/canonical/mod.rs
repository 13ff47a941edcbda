//! Bar involution, canonical bases `G⁺(λ)` and `G⁻(λ)`, decomposition
//! matrices and their inverses, and the Steinberg-type factorisation of
//! `G⁻` for e-singular labels.

mod bar;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::fock::{FockSpace, FockVector};
use crate::laurent::LaurentPoly;
use crate::lusztig::{levi_spec, CharacterVector, CuspidalPairSpec, Flavor, Lusztig};
use crate::matrix::TransitionMatrix;
use crate::partition::{core, decompose_singular, partitions_of, Partition};

use bar::BarTable;

/// A canonical basis vector together with its leading label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalVector {
    pub label: Partition,
    pub vector: FockVector,
}

/// Outcome of comparing `G⁻(λ)` with `S_α G⁻(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub alpha: Partition,
    /// Equality as Fock vectors over `Z[v, v^{-1}]`.
    pub generic: bool,
    /// Equality after `v = 1`.
    pub at_one: bool,
}

/// `G⁻(λ)` at `v = 1` expressed as a Lusztig-induced character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerReport {
    pub levi: CuspidalPairSpec,
    /// `L_α(G⁻(μ)|_{v=1})`.
    pub expansion: CharacterVector,
    /// Whether `α` is nonempty.
    pub singular: bool,
    /// Whether the expansion equals `G⁻(λ)|_{v=1}`.
    pub matches: bool,
}

/// Computes and caches bar involutions and canonical bases for one `e` and convention.
#[derive(Clone, Debug)]
pub struct CanonicalEngine {
    space: FockSpace,
    bars: BarTable,
    plus: HashMap<u32, Arc<BTreeMap<Partition, FockVector>>>,
    minus: HashMap<u32, Arc<BTreeMap<Partition, FockVector>>>,
}

impl CanonicalEngine {
    pub fn new(e: u32) -> Result<Self> {
        Self::from_space(FockSpace::new(e)?)
    }

    pub fn with_convention(e: u32, convention: Convention) -> Result<Self> {
        Self::from_space(FockSpace::with_convention(e, convention)?)
    }

    pub fn from_space(space: FockSpace) -> Result<Self> {
        Ok(CanonicalEngine { space, bars: BarTable::default(), plus: HashMap::new(), minus: HashMap::new() })
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn e(&self) -> u32 {
        self.space.e()
    }

    /// Labels of degree `n` sorted so that canonical vectors and bar images
    /// of `|λ>` are supported on `λ` and labels after it.
    pub fn elimination_order(&self, n: u32) -> Vec<Partition> {
        let mut labels = partitions_of(n);
        if self.space.convention().triangular_upwards() {
            labels.reverse();
        }
        labels
    }

    fn ensure_bar(&mut self, n: u32) -> Result<()> {
        if self.bars.degree_computed().is_some_and(|d| d >= n) {
            return Ok(());
        }
        let upwards = self.space.convention().triangular_upwards();
        let order = move |m: u32| {
            let mut labels = partitions_of(m);
            if upwards {
                labels.reverse();
            }
            labels
        };
        self.bars.extend_to(&self.space, n, order)
    }

    /// `bar(x)` for a vector whose labels have degree at most the computed bound.
    pub fn bar(&mut self, x: &FockVector) -> Result<FockVector> {
        if let Some(n) = x.support().map(Partition::size).max() {
            self.ensure_bar(n)?;
        }
        Ok(self.bars.apply(x))
    }

    /// `B[λ][μ]` = coefficient of `|μ>` in `bar|λ>`; labels in decreasing lexicographic order.
    pub fn bar_matrix(&mut self, n: u32) -> Result<TransitionMatrix<LaurentPoly>> {
        self.ensure_bar(n)?;
        let bars = &self.bars;
        Ok(TransitionMatrix::from_fn(partitions_of(n), |l, m| bars.basis_image(l).coefficient(m)))
    }

    /// Kazhdan-Lusztig style elimination: the bar-invariant vector
    /// `|λ> + Σ d_μ |μ>` whose off-diagonal coefficients lie in `v Z[v]`
    /// (`positive = true`) or `v^{-1} Z[v^{-1}]`. `order` must list the block
    /// of `λ` along a linear extension of the triangularity order.
    pub fn eliminate(&mut self, lambda: &Partition, order: &[Partition], positive: bool) -> Result<FockVector> {
        self.ensure_bar(lambda.size())?;
        let start = order
            .iter()
            .position(|l| l == lambda)
            .ok_or_else(|| Error::SizeMismatch(format!("{lambda} missing from the elimination order")))?;
        let mut d: Vec<(Partition, LaurentPoly)> = vec![(lambda.clone(), LaurentPoly::one())];
        for mu in &order[start + 1..] {
            let mut r = LaurentPoly::zero();
            for (nu, c) in &d {
                let b = self.bars.basis_image(nu).coefficient(mu);
                if !b.is_zero() {
                    r += &(&c.bar() * &b);
                }
            }
            if r.is_zero() {
                continue;
            }
            if r.coefficient(0) != BigInt::from(0) || r.bar() != -&r {
                return Err(Error::Parse(format!(
                    "elimination order is not compatible with the bar involution at {mu}"
                )));
            }
            let part = if positive { r.positive_part() } else { r.negative_part() };
            d.push((mu.clone(), part));
        }
        Ok(FockVector::from_terms(d))
    }

    fn block_order(&self, lambda: &Partition) -> Result<Vec<Partition>> {
        let c = core(lambda, self.e())?;
        let e = self.e();
        Ok(self.elimination_order(lambda.size()).into_iter().filter(|l| core(l, e).ok().as_ref() == Some(&c)).collect())
    }

    /// The map `λ ↦ G⁺(λ)` on degree `n`.
    pub fn plus_basis(&mut self, n: u32) -> Result<Arc<BTreeMap<Partition, FockVector>>> {
        if let Some(b) = self.plus.get(&n) {
            return Ok(b.clone());
        }
        let mut basis = BTreeMap::new();
        for lam in partitions_of(n) {
            let order = self.block_order(&lam)?;
            let g = self.eliminate(&lam, &order, true)?;
            basis.insert(lam, g);
        }
        let basis = Arc::new(basis);
        self.plus.insert(n, basis.clone());
        Ok(basis)
    }

    pub fn canonical_plus(&mut self, lambda: &Partition) -> Result<CanonicalVector> {
        let vector = self.plus_basis(lambda.size())?[lambda].clone();
        Ok(CanonicalVector { label: lambda.clone(), vector })
    }

    /// `P[λ][μ]` = coefficient of `|μ>` in `G⁺(λ)`; labels in decreasing lexicographic order.
    pub fn plus_matrix(&mut self, n: u32) -> Result<TransitionMatrix<LaurentPoly>> {
        let basis = self.plus_basis(n)?;
        Ok(TransitionMatrix::from_fn(partitions_of(n), |l, m| basis[l].coefficient(m)))
    }

    /// The map `λ ↦ G⁻(λ)` on degree `n`, obtained from `G⁺` by the relation
    /// `M · Qᵀ = I`, where `M` has rows `G⁻(λ)` and
    /// `Q[λ][μ] = bar(P[λ'][μ'])` is the `G⁺` matrix with labels conjugated
    /// and `v` inverted.
    pub fn minus_basis(&mut self, n: u32) -> Result<Arc<BTreeMap<Partition, FockVector>>> {
        if let Some(b) = self.minus.get(&n) {
            return Ok(b.clone());
        }
        let plus = self.plus_basis(n)?;
        let order = self.elimination_order(n);
        let pos: HashMap<&Partition, usize> = order.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let dim = order.len();
        // qt[i][j] = Q[order[j]][order[i]], upper unitriangular in elimination order
        let mut qt = vec![vec![LaurentPoly::zero(); dim]; dim];
        for (j, lam) in order.iter().enumerate() {
            let g = &plus[&lam.conjugate()];
            for (mu_c, c) in g.iter() {
                qt[pos[&mu_c.conjugate()]][j] = c.bar();
            }
        }
        for (i, row) in qt.iter().enumerate() {
            if !row[i].is_one() || row[..i].iter().any(|x| !x.is_zero()) {
                return Err(Error::Parse(format!("conjugated G+ matrix is not unitriangular at {}", order[i])));
            }
        }
        // rows of M = (Qᵀ)^{-1}: m[i][j] = δ_ij - Σ_{i <= t < j} m[i][t] qt[t][j]
        let mut basis = BTreeMap::new();
        for i in 0..dim {
            let mut row = vec![LaurentPoly::zero(); dim];
            row[i] = LaurentPoly::one();
            for j in i + 1..dim {
                let mut acc = LaurentPoly::zero();
                for t in i..j {
                    if !row[t].is_zero() && !qt[t][j].is_zero() {
                        acc -= &(&row[t] * &qt[t][j]);
                    }
                }
                row[j] = acc;
            }
            let vector = FockVector::from_terms(order.iter().cloned().zip(row));
            basis.insert(order[i].clone(), vector);
        }
        let basis = Arc::new(basis);
        self.minus.insert(n, basis.clone());
        Ok(basis)
    }

    pub fn canonical_minus(&mut self, lambda: &Partition) -> Result<CanonicalVector> {
        let vector = self.minus_basis(lambda.size())?[lambda].clone();
        Ok(CanonicalVector { label: lambda.clone(), vector })
    }

    /// `G⁻(λ)` by direct elimination with coefficients in `v^{-1} Z[v^{-1}]`.
    pub fn canonical_minus_direct(&mut self, lambda: &Partition) -> Result<CanonicalVector> {
        let order = self.block_order(lambda)?;
        let vector = self.eliminate(lambda, &order, false)?;
        Ok(CanonicalVector { label: lambda.clone(), vector })
    }

    /// `M[λ][μ]` = coefficient of `|μ>` in `G⁻(λ)`; labels in decreasing lexicographic order.
    pub fn minus_matrix(&mut self, n: u32) -> Result<TransitionMatrix<LaurentPoly>> {
        let basis = self.minus_basis(n)?;
        Ok(TransitionMatrix::from_fn(partitions_of(n), |l, m| basis[l].coefficient(m)))
    }

    /// `D_n`: row `λ` is `G⁺(λ)` at `v = 1`.
    pub fn decomposition_matrix(&mut self, n: u32) -> Result<TransitionMatrix<BigInt>> {
        Ok(self.plus_matrix(n)?.eval_one())
    }

    /// `E_n`: row `λ` is `G⁻(λ)` at `v = 1`.
    pub fn inverse_decomposition_matrix(&mut self, n: u32) -> Result<TransitionMatrix<BigInt>> {
        Ok(self.minus_matrix(n)?.eval_one())
    }

    /// The pair `(μ, α)` for which `G⁻(λ) = S_α G⁻(μ)` is expected: split by
    /// part multiplicities in transposed labels, and `λ = μ + eα` row-wise
    /// with `μ` e-restricted in classical labels.
    pub fn steinberg_pair(&self, lambda: &Partition) -> Result<(Partition, Partition)> {
        match self.space.convention() {
            Convention::Transposed => decompose_singular(lambda, self.e()),
            Convention::Classical => {
                let (mu, alpha) = decompose_singular(&lambda.conjugate(), self.e())?;
                Ok((mu.conjugate(), alpha.conjugate()))
            }
        }
    }

    /// Compares `G⁻(λ)` with `S_α G⁻(μ)` at generic `v` and at `v = 1`.
    pub fn steinberg_factor(&mut self, lambda: &Partition) -> Result<SteinbergReport> {
        let (mu, alpha) = self.steinberg_pair(lambda)?;
        let lhs = self.canonical_minus(lambda)?.vector;
        let base = self.canonical_minus(&mu)?.vector;
        let rhs = self.space.apply_s(&base, &alpha)?;
        Ok(SteinbergReport {
            lambda: lambda.clone(),
            generic: lhs == rhs,
            at_one: lhs.eval_one() == rhs.eval_one(),
            mu,
            alpha,
        })
    }

    /// `G⁻(λ)|_{v=1}` as the Lusztig induction `L_α(G⁻(μ)|_{v=1})` from the Levi attached to `λ`.
    pub fn brauer_as_lusztig(&mut self, lambda: &Partition) -> Result<BrauerReport> {
        let (mu, alpha) = self.steinberg_pair(lambda)?;
        let transposed = match self.space.convention() {
            Convention::Transposed => lambda.clone(),
            Convention::Classical => lambda.conjugate(),
        };
        let mut levi = levi_spec(&transposed, self.e(), Flavor::GL)?;
        levi.mu = mu.clone();
        levi.alpha = alpha.clone();
        let base = CharacterVector::from_fock_at_one(&self.canonical_minus(&mu)?.vector);
        let lusztig = Lusztig::with_convention(self.e(), self.space.convention())?;
        let expansion = lusztig.induce(&base, &alpha)?;
        let target = CharacterVector::from_fock_at_one(&self.canonical_minus(lambda)?.vector);
        Ok(BrauerReport { levi, singular: !alpha.is_empty(), matches: expansion == target, expansion })
    }
}

/// `bar_matrix` for a fresh engine with the default convention.
pub fn bar_matrix(n: u32, e: u32) -> Result<TransitionMatrix<LaurentPoly>> {
    CanonicalEngine::new(e)?.bar_matrix(n)
}

pub fn canonical_plus(lambda: &Partition, e: u32) -> Result<CanonicalVector> {
    CanonicalEngine::new(e)?.canonical_plus(lambda)
}

pub fn canonical_minus(lambda: &Partition, e: u32) -> Result<CanonicalVector> {
    CanonicalEngine::new(e)?.canonical_minus(lambda)
}

pub fn decomposition_matrix(n: u32, e: u32) -> Result<TransitionMatrix<BigInt>> {
    CanonicalEngine::new(e)?.decomposition_matrix(n)
}

pub fn steinberg_factor(lambda: &Partition, e: u32) -> Result<SteinbergReport> {
    CanonicalEngine::new(e)?.steinberg_factor(lambda)
}

pub fn brauer_as_lusztig(lambda: &Partition, e: u32) -> Result<BrauerReport> {
    CanonicalEngine::new(e)?.brauer_as_lusztig(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ints(m: &TransitionMatrix<BigInt>) -> Vec<Vec<i64>> {
        m.to_i64().unwrap()
    }

    #[test]
    fn small_bar_matrices() {
        let mut eng = CanonicalEngine::new(2).unwrap();
        assert!(eng.bar_matrix(0).unwrap().is_identity());
        assert!(eng.bar_matrix(1).unwrap().is_identity());
        let b = eng.bar_matrix(2).unwrap();
        // V_1|∅> = |11> - v^{-1}|2> is bar-invariant
        let x = FockVector::from_terms([(part![1, 1], LaurentPoly::one()), (part![2], LaurentPoly::monomial(-1, -1))]);
        assert_eq!(eng.bar(&x).unwrap(), x);
        assert!(b.mul(&b.bar()).is_identity());
    }

    #[test]
    fn plus_basis_small() {
        let mut eng = CanonicalEngine::new(2).unwrap();
        let g = eng.canonical_plus(&part![1, 1]).unwrap().vector;
        assert_eq!(g, FockVector::from_terms([(part![1, 1], LaurentPoly::one()), (part![2], LaurentPoly::monomial(1, 1))]));
        assert_eq!(ints(&eng.decomposition_matrix(2).unwrap()), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(ints(&eng.decomposition_matrix(1).unwrap()), vec![vec![1]]);
    }

    #[test]
    fn golden_n4_e4() {
        let d = decomposition_matrix(4, 4).unwrap();
        assert_eq!(
            ints(&d),
            vec![vec![1, 0, 0, 0, 0], vec![1, 1, 0, 0, 0], vec![0, 0, 1, 0, 0], vec![0, 1, 0, 1, 0], vec![0, 0, 0, 1, 1]]
        );
    }

    #[test]
    fn minus_matches_direct_elimination() {
        let mut eng = CanonicalEngine::new(2).unwrap();
        for lam in partitions_of(5) {
            assert_eq!(eng.canonical_minus(&lam).unwrap(), eng.canonical_minus_direct(&lam).unwrap());
        }
    }

    #[test]
    fn steinberg_row_three_squared() {
        let r = steinberg_factor(&part![3, 3], 2).unwrap();
        assert_eq!((r.mu.clone(), r.alpha.clone()), (part![], part![3]));
        assert!(r.at_one && r.generic);
    }
}
