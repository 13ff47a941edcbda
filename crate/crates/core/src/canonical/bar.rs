//! The bar involution on a homogeneous component of the Fock space.
//!
//! It is the unique semilinear map fixing `|∅>` and commuting with every
//! `f_r` and `V_k`. On degree `n` it is recovered from a spanning family whose
//! bar images are known by recursion on the degree:
//! `bar(f_r^{(k)} |ν>) = f_r^{(k)} bar|ν>` and `bar(V_k |ν>) = V_k bar|ν>`.
//! Fraction-free elimination by leading term brings the family to
//! triangular form; back substitution then yields `bar|λ>`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fock::{FockSpace, FockVector};
use crate::laurent::LaurentPoly;
use crate::partition::{partitions_of, Partition};

/// A family element `x` with its known image `bar(x)`.
#[derive(Clone)]
struct Row {
    x: FockVector,
    bar_x: FockVector,
}

impl Row {
    /// `c * self - d * other`, with conjugated scalars on the bar side.
    fn combine(&self, c: &LaurentPoly, other: &Row, d: &LaurentPoly) -> Row {
        let mut x = self.x.scale(c);
        x.add_scaled(&other.x, &-d);
        let mut bar_x = self.bar_x.scale(&c.bar());
        bar_x.add_scaled(&other.bar_x, &-&d.bar());
        Row { x, bar_x }.primitive()
    }

    /// Divides out the gcd of all integer coefficients of `x`.
    fn primitive(self) -> Row {
        let g = content(&self.x);
        if g.is_zero() || g.is_one() {
            return self;
        }
        let div = |v: &FockVector| {
            FockVector::from_terms(v.iter().map(|(l, c)| {
                (l.clone(), LaurentPoly::from_terms(c.terms().map(|(k, a)| (k, a / &g))))
            }))
        };
        Row { x: div(&self.x), bar_x: div(&self.bar_x) }
    }
}

/// The gcd of all integer coefficients.
fn content(x: &FockVector) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in x.iter() {
        for (_, a) in c.terms() {
            g = g.gcd(a);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

/// Bar images of basis vectors, degree by degree.
#[derive(Clone, Debug, Default)]
pub(crate) struct BarTable {
    levels: Vec<HashMap<Partition, FockVector>>,
}

impl BarTable {
    pub(crate) fn degree_computed(&self) -> Option<u32> {
        (self.levels.len() as u32).checked_sub(1)
    }

    pub(crate) fn basis_image(&self, lambda: &Partition) -> &FockVector {
        &self.levels[lambda.size() as usize][lambda]
    }

    /// `bar(x) = Σ bar(c_λ) bar|λ>`; all labels must be of computed degrees.
    pub(crate) fn apply(&self, x: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (l, c) in x.iter() {
            out.add_scaled(self.basis_image(l), &c.bar());
        }
        out
    }

    /// Computes all degrees up to `n`. `order` gives, per degree, the labels
    /// sorted so that `bar|λ> - |λ>` is supported on labels after `λ`.
    pub(crate) fn extend_to(&mut self, space: &FockSpace, n: u32, order: impl Fn(u32) -> Vec<Partition>) -> Result<()> {
        while self.levels.len() as u32 <= n {
            let m = self.levels.len() as u32;
            let level = if m == 0 {
                HashMap::from([(Partition::empty(), FockVector::basis(Partition::empty()))])
            } else {
                self.build_level(space, m, &order(m))?
            };
            self.levels.push(level);
        }
        Ok(())
    }

    fn family(&self, space: &FockSpace, n: u32) -> Result<Vec<Row>> {
        let mut rows = Vec::new();
        for m in 0..n {
            for nu in partitions_of(m) {
                let basis = FockVector::basis(nu.clone());
                let image = self.basis_image(&nu);
                for r in 0..space.e() {
                    let x = space.apply_f_divided(&basis, r, n - m)?;
                    if !x.is_zero() {
                        rows.push(Row { x, bar_x: space.apply_f_divided(image, r, n - m)? });
                    }
                }
            }
        }
        for k in 1..=n / space.e() {
            for nu in partitions_of(n - k * space.e()) {
                let x = space.apply_v(&FockVector::basis(nu.clone()), k)?;
                rows.push(Row { x, bar_x: space.apply_v(self.basis_image(&nu), k)? });
            }
        }
        Ok(rows)
    }

    fn build_level(&self, space: &FockSpace, n: u32, order: &[Partition]) -> Result<HashMap<Partition, FockVector>> {
        let pos: HashMap<&Partition, usize> = order.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let lead = |x: &FockVector| x.support().map(|l| pos[l]).min();
        let mut buckets: Vec<Vec<Row>> = vec![Vec::new(); order.len()];
        for row in self.family(space, n)? {
            if let Some(p) = lead(&row.x) {
                buckets[p].push(row);
            }
        }
        // triangularise: one pivot per leading label
        let mut pivots: Vec<Row> = Vec::with_capacity(order.len());
        for p in 0..order.len() {
            let mut bucket = std::mem::take(&mut buckets[p]);
            if bucket.is_empty() {
                return Err(Error::MissingPivot(order[p].clone()));
            }
            let lam = &order[p];
            let best = (0..bucket.len())
                .min_by_key(|&i| {
                    let c = bucket[i].x.coefficient(lam);
                    (c.term_count(), c.norm1(), bucket[i].x.len())
                })
                .expect("nonempty bucket");
            let pivot = bucket.swap_remove(best);
            let c = pivot.x.coefficient(lam);
            for row in bucket {
                let d = row.x.coefficient(lam);
                let reduced = row.combine(&c, &pivot, &d);
                if let Some(q) = lead(&reduced.x) {
                    debug_assert!(q > p);
                    buckets[q].push(reduced);
                }
            }
            pivots.push(pivot);
        }
        // back substitution from the last label
        let mut level: HashMap<Partition, FockVector> = HashMap::with_capacity(order.len());
        for p in (0..order.len()).rev() {
            let lam = &order[p];
            let Row { x, bar_x } = &pivots[p];
            let mut rhs = bar_x.clone();
            for (mu, c) in x.iter() {
                if mu != lam {
                    rhs.add_scaled(&level[mu], &-&c.bar());
                }
            }
            let denom = x.coefficient(lam).bar();
            let image = if denom.is_one() {
                rhs
            } else if denom.term_count() == 1 && denom.terms().all(|(_, a)| a.abs().is_one()) {
                let (k, a) = denom.terms().next().map(|(k, a)| (k, a.clone())).expect("monomial");
                rhs.scale(&LaurentPoly::monomial(a, -k))
            } else {
                let mut out = FockVector::zero();
                for (mu, c) in rhs.iter() {
                    let q = c.div_exact(&denom).ok_or_else(|| Error::InexactDivision(lam.clone()))?;
                    out.add_term(mu.clone(), &q);
                }
                out
            };
            level.insert(lam.clone(), image);
        }
        Ok(level)
    }
}
