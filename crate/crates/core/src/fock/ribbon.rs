//! Ribbons (rim hooks), horizontal ribbon strips and their unique tilings.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{
    check_modulus, core_and_quotient, from_core_and_quotient, partitions_containing, Partition, QuotientTuple,
};
use crate::symfunc::horizontal_strip_extensions;

pub type Cell = (usize, usize);

/// A skew shape `outer/inner` with its tiling by e-ribbons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonStrip {
    pub inner: Partition,
    pub outer: Partition,
    /// Cells of each ribbon, listed from the tail (lowest, leftmost cell).
    pub ribbons: Vec<Vec<Cell>>,
    /// Sum over ribbons of (number of rows - 1).
    pub spin: u32,
    /// Sum over ribbons of (number of columns - 1).
    pub cospin: u32,
}

fn skew_cells(outer: &Partition, inner: &Partition) -> BTreeSet<Cell> {
    outer.cells().filter(|&c| !inner.contains_cell(c)).collect()
}

/// All tilings of a set of cells by e-ribbons. Each ribbon is a lattice path
/// that starts at the lowest, leftmost remaining cell and moves up or right.
pub fn ribbon_tilings(cells: &BTreeSet<Cell>, e: usize) -> Vec<Vec<Vec<Cell>>> {
    let Some(&tail) = cells.iter().max_by_key(|&&(i, j)| (i, std::cmp::Reverse(j))) else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut paths = Vec::new();
    extend_paths(vec![tail], cells, e, &mut paths);
    for path in paths {
        let rest: BTreeSet<Cell> = cells.iter().filter(|c| !path.contains(c)).copied().collect();
        for mut tiling in ribbon_tilings(&rest, e) {
            tiling.insert(0, path.clone());
            out.push(tiling);
        }
    }
    out
}

fn extend_paths(path: Vec<Cell>, cells: &BTreeSet<Cell>, e: usize, out: &mut Vec<Vec<Cell>>) {
    if path.len() == e {
        out.push(path);
        return;
    }
    let (i, j) = *path.last().expect("nonempty path");
    let mut next = Vec::with_capacity(2);
    if i > 0 && cells.contains(&(i - 1, j)) {
        next.push((i - 1, j));
    }
    if cells.contains(&(i, j + 1)) {
        next.push((i, j + 1));
    }
    for c in next {
        let mut p = path.clone();
        p.push(c);
        extend_paths(p, cells, e, out);
    }
}

fn rows_minus_one(r: &[Cell]) -> u32 {
    r.iter().map(|c| c.0).collect::<BTreeSet<_>>().len() as u32 - 1
}

fn cols_minus_one(r: &[Cell]) -> u32 {
    r.iter().map(|c| c.1).collect::<BTreeSet<_>>().len() as u32 - 1
}

/// Whether the top-right cell of every ribbon has no cell of the skew shape above it.
fn touches_northern_edge(tiling: &[Vec<Cell>], cells: &BTreeSet<Cell>) -> bool {
    tiling.iter().all(|r| {
        let top = r.iter().map(|c| c.0).min().expect("nonempty ribbon");
        let right = r.iter().filter(|c| c.0 == top).map(|c| c.1).max().expect("nonempty row");
        top == 0 || !cells.contains(&(top - 1, right))
    })
}

/// The horizontal ribbon strip tiling of `outer/inner`, if there is one.
pub fn horizontal_tiling(inner: &Partition, outer: &Partition, e: u32) -> Result<Option<RibbonStrip>> {
    if !outer.contains(inner) || !(outer.size() - inner.size()).is_multiple_of(e) {
        return Ok(None);
    }
    let cells = skew_cells(outer, inner);
    let mut good = ribbon_tilings(&cells, e as usize)
        .into_iter()
        .filter(|t| touches_northern_edge(t, &cells));
    let Some(tiling) = good.next() else { return Ok(None) };
    if good.next().is_some() {
        return Err(Error::AmbiguousTiling { inner: inner.clone(), outer: outer.clone() });
    }
    Ok(Some(RibbonStrip {
        inner: inner.clone(),
        outer: outer.clone(),
        spin: tiling.iter().map(|r| rows_minus_one(r)).sum(),
        cospin: tiling.iter().map(|r| cols_minus_one(r)).sum(),
        ribbons: tiling,
    }))
}

/// Horizontal e-ribbon strips of weight `k` on top of `λ`.
///
/// Candidates are the partitions whose e-quotient extends that of `λ` by
/// horizontal strips of total size `k`; each candidate is confirmed by
/// finding its tiling, which must be unique.
pub fn horizontal_strips(lambda: &Partition, e: u32, k: u32) -> Result<Vec<RibbonStrip>> {
    check_modulus(e)?;
    let (core, quot) = core_and_quotient(lambda, e)?;
    let mut out = Vec::new();
    for tau in quotient_strip_extensions(&quot, k) {
        let outer = from_core_and_quotient(&core, &tau, e)?;
        if let Some(s) = horizontal_tiling(lambda, &outer, e)? {
            out.push(s);
        }
    }
    out.sort_by(|a, b| b.outer.cmp(&a.outer));
    Ok(out)
}

fn quotient_strip_extensions(q: &QuotientTuple, k: u32) -> Vec<QuotientTuple> {
    fn go(q: &[Partition], t: usize, left: u32, cur: &mut Vec<Partition>, out: &mut Vec<QuotientTuple>) {
        if t == q.len() {
            if left == 0 {
                out.push(QuotientTuple(cur.clone()));
            }
            return;
        }
        for a in 0..=left {
            for p in horizontal_strip_extensions(&q[t], a) {
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

/// Reference enumeration of horizontal strips by tiling every candidate outer shape.
pub fn horizontal_strips_exhaustive(lambda: &Partition, e: u32, k: u32) -> Result<Vec<RibbonStrip>> {
    check_modulus(e)?;
    let mut out = Vec::new();
    for outer in partitions_containing(lambda, lambda.size() + k * e) {
        if let Some(s) = horizontal_tiling(lambda, &outer, e)? {
            out.push(s);
        }
    }
    out.sort_by(|a, b| b.outer.cmp(&a.outer));
    Ok(out)
}

/// A single ribbon added to or removed from a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonMove {
    pub result: Partition,
    /// Rows occupied by the ribbon minus one.
    pub leg: u32,
    /// Columns occupied by the ribbon minus one.
    pub arm: u32,
}

/// All `μ ⊃ λ` with `μ/λ` a single ribbon of length `len`.
pub fn add_ribbons(lambda: &Partition, len: u32) -> Vec<RibbonMove> {
    let len = len as usize;
    let b = lambda.len() + len;
    let beads: BTreeSet<usize> = (0..b).map(|i| lambda.part(i) as usize + b - 1 - i).collect();
    let mut out = Vec::new();
    for &x in &beads {
        if beads.contains(&(x + len)) {
            continue;
        }
        let leg = beads.range(x + 1..x + len).count() as u32;
        let mut moved = beads.clone();
        moved.remove(&x);
        moved.insert(x + len);
        out.push(RibbonMove { result: from_beads(&moved), leg, arm: len as u32 - 1 - leg });
    }
    out.sort_by(|a, b| b.result.cmp(&a.result));
    out
}

/// All `μ ⊂ λ` with `λ/μ` a single ribbon of length `len`.
pub fn remove_ribbons(lambda: &Partition, len: u32) -> Vec<RibbonMove> {
    let len = len as usize;
    let b = lambda.len();
    let beads: BTreeSet<usize> = (0..b).map(|i| lambda.part(i) as usize + b - 1 - i).collect();
    let mut out = Vec::new();
    for &x in &beads {
        if x < len || beads.contains(&(x - len)) {
            continue;
        }
        let leg = beads.range(x - len + 1..x).count() as u32;
        let mut moved = beads.clone();
        moved.remove(&x);
        moved.insert(x - len);
        out.push(RibbonMove { result: from_beads(&moved), leg, arm: len as u32 - 1 - leg });
    }
    out.sort_by(|a, b| b.result.cmp(&a.result));
    out
}

fn from_beads(beads: &BTreeSet<usize>) -> Partition {
    let b = beads.len();
    Partition::from_multiset(beads.iter().rev().enumerate().map(|(i, &x)| (x + i + 1 - b) as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn summary(v: &[RibbonStrip]) -> Vec<(Partition, u32)> {
        v.iter().map(|s| (s.outer.clone(), s.spin)).collect()
    }

    #[test]
    fn strips_from_empty() {
        assert_eq!(summary(&horizontal_strips(&part![3, 1], 2, 0).unwrap()), vec![(part![3, 1], 0)]);
        assert_eq!(summary(&horizontal_strips(&part![], 2, 1).unwrap()), vec![(part![2], 0), (part![1, 1], 1)]);
        assert_eq!(
            summary(&horizontal_strips(&part![], 2, 3).unwrap()),
            vec![(part![6], 0), (part![5, 1], 1), (part![4, 2], 2), (part![3, 3], 3)]
        );
    }

    #[test]
    fn spin_and_cospin_add_up() {
        for s in horizontal_strips(&part![2, 1], 3, 2).unwrap() {
            assert_eq!(s.spin + s.cospin, 2 * 2);
            assert_eq!(s.ribbons.len(), 2);
        }
    }

    #[test]
    fn single_ribbons() {
        let moves = add_ribbons(&part![], 4);
        let got: Vec<(Partition, u32)> = moves.iter().map(|m| (m.result.clone(), m.leg)).collect();
        assert_eq!(
            got,
            vec![(part![4], 0), (part![3, 1], 1), (part![2, 1, 1], 2), (part![1, 1, 1, 1], 3)]
        );
        let back = remove_ribbons(&part![3, 1], 2);
        assert_eq!(back.iter().map(|m| m.result.clone()).collect::<Vec<_>>(), vec![part![1, 1]]);
    }
}
