//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the library's combinatorial kernels: diagrams,
//! strips, hooks and tableaux are handled directly on part vectors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use lusztig_fock::Partition;

pub type Cell = (usize, usize);

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Partitions of `n` generated by recursion on the largest part.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (1..=n.min(max)).rev() {
            cur.push(a);
            go(n - a, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn part(v: &[u32], i: usize) -> u32 {
    v.get(i).copied().unwrap_or(0)
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Partitions `ν ⊇ λ` with `ν/λ` a horizontal strip of `k` cells.
pub fn horizontal_strips(lambda: &[u32], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let rows = lambda.len() + 1;
    fn go(lambda: &[u32], rows: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == rows {
            if left == 0 {
                out.push(trim(cur.clone()));
            }
            return;
        }
        let cap = if i == 0 { left } else { (part(lambda, i - 1) - part(lambda, i)).min(left) };
        for a in 0..=cap {
            cur.push(part(lambda, i) + a);
            go(lambda, rows, i + 1, left - a, cur, out);
            cur.pop();
        }
    }
    go(lambda, rows, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `s_λ · h_{a_1} ··· h_{a_m}` by repeated Pieri steps, memoised on the sorted composition.
pub struct PieriOracle {
    memo: HashMap<(Vec<u32>, Vec<u32>), BTreeMap<Vec<u32>, i64>>,
}

impl PieriOracle {
    pub fn new() -> Self {
        PieriOracle { memo: HashMap::new() }
    }

    fn h_product(&mut self, lambda: &[u32], comp: &[u32]) -> BTreeMap<Vec<u32>, i64> {
        let mut key: Vec<u32> = comp.iter().copied().filter(|&a| a > 0).collect();
        key.sort_unstable();
        if let Some(r) = self.memo.get(&(lambda.to_vec(), key.clone())) {
            return r.clone();
        }
        let result = match key.split_first() {
            None => BTreeMap::from([(lambda.to_vec(), 1)]),
            Some((&a, rest)) => {
                let mut out = BTreeMap::new();
                for nu in horizontal_strips(lambda, a) {
                    for (x, c) in self.h_product(&nu, rest) {
                        *out.entry(x).or_insert(0) += c;
                    }
                }
                out
            }
        };
        self.memo.insert((lambda.to_vec(), key), result.clone());
        result
    }

    /// `s_λ s_μ` with `s_μ = det(h_{μ_i - i + j})` (Jacobi-Trudi).
    pub fn product(&mut self, lambda: &[u32], mu: &[u32]) -> BTreeMap<Vec<u32>, i64> {
        let l = mu.len();
        let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        let mut perm: Vec<usize> = Vec::with_capacity(l);
        let mut used = vec![false; l];
        self.expand(lambda, mu, &mut perm, &mut used, &mut out);
        out.retain(|_, c| *c != 0);
        out
    }

    fn expand(
        &mut self,
        lambda: &[u32],
        mu: &[u32],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut BTreeMap<Vec<u32>, i64>,
    ) {
        let i = perm.len();
        if i == mu.len() {
            let comp: Vec<u32> = (0..mu.len()).map(|r| (mu[r] as i64 - r as i64 + perm[r] as i64) as u32).collect();
            let inversions = (0..perm.len())
                .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            for (x, c) in self.h_product(lambda, &comp) {
                *out.entry(x).or_insert(0) += sign * c;
            }
            return;
        }
        for j in 0..mu.len() {
            if used[j] || (mu[i] as i64 - i as i64 + j as i64) < 0 {
                continue;
            }
            used[j] = true;
            perm.push(j);
            self.expand(lambda, mu, perm, used, out);
            perm.pop();
            used[j] = false;
        }
    }
}

/// Number of semistandard tableaux of shape `λ` and content `ρ`, by filling cells one at a time.
pub fn kostka_brute(lambda: &[u32], rho: &[u32]) -> i64 {
    let cells: Vec<Cell> =
        lambda.iter().enumerate().flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&l| vec![0; l as usize]).collect();
    let mut left = rho.to_vec();
    fn go(t: usize, cells: &[Cell], grid: &mut [Vec<u32>], left: &mut [u32]) -> i64 {
        let Some(&(i, j)) = cells.get(t) else { return 1 };
        let lo = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo = if i > 0 { lo.max(grid[i - 1][j] + 1) } else { lo };
        let mut total = 0;
        for v in lo.max(1)..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            left[v as usize - 1] -= 1;
            grid[i][j] = v;
            total += go(t + 1, cells, grid, left);
            left[v as usize - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Hook length of cell `(i, j)`.
pub fn hook_length(lambda: &[u32], i: usize, j: usize) -> u32 {
    let arm = lambda[i] - j as u32 - 1;
    let leg = lambda.iter().skip(i + 1).filter(|&&l| l as usize > j).count() as u32;
    arm + leg + 1
}

/// Removes the rim hook attached to cell `(i, j)`; returns the new part vector and the hook's cells.
pub fn remove_rim_hook(lambda: &[u32], i: usize, j: usize) -> (Vec<u32>, Vec<Cell>) {
    let leg = lambda.iter().skip(i + 1).filter(|&&l| l as usize > j).count();
    let mut new = lambda.to_vec();
    for r in i..i + leg {
        new[r] = lambda[r + 1] - 1;
    }
    new[i + leg] = j as u32;
    let mut cells = Vec::new();
    for (r, (&old, &nw)) in lambda.iter().zip(&new).enumerate() {
        for c in nw..old {
            cells.push((r, c as usize));
        }
    }
    (trim(new), cells)
}

/// e-core by removing rim hooks directly from the diagram, with the total leg length.
pub fn core_by_hooks(lambda: &[u32], e: u32) -> (Vec<u32>, u32, u32) {
    let mut cur = lambda.to_vec();
    let (mut legs, mut count) = (0, 0);
    'outer: loop {
        for i in 0..cur.len() {
            for j in 0..cur[i] as usize {
                if hook_length(&cur, i, j) == e {
                    legs += cur.iter().skip(i + 1).filter(|&&l| l as usize > j).count() as u32;
                    cur = remove_rim_hook(&cur, i, j).0;
                    count += 1;
                    continue 'outer;
                }
            }
        }
        return (cur, count, legs);
    }
}

/// All tilings of `outer/inner` by e-ribbons, each obtained by peeling rim hooks off `outer`.
pub fn ribbon_tilings(outer: &[u32], inner: &[u32], e: u32) -> BTreeSet<BTreeSet<Vec<Cell>>> {
    let mut out = BTreeSet::new();
    if outer == inner {
        out.insert(BTreeSet::new());
        return out;
    }
    for i in 0..outer.len() {
        for j in 0..outer[i] as usize {
            if hook_length(outer, i, j) != e {
                continue;
            }
            let (rest, mut cells) = remove_rim_hook(outer, i, j);
            if (0..inner.len()).any(|r| part(&rest, r) < inner[r]) {
                continue;
            }
            cells.sort_unstable();
            for mut t in ribbon_tilings(&rest, inner, e) {
                t.insert(cells.clone());
                out.insert(t);
            }
        }
    }
    out
}

/// Whether the top-right cell of every ribbon has no skew cell directly above it.
pub fn is_horizontal(tiling: &BTreeSet<Vec<Cell>>, outer: &[u32], inner: &[u32]) -> bool {
    let in_skew = |(i, j): Cell| (j as u32) < part(outer, i) && (j as u32) >= part(inner, i);
    tiling.iter().all(|r| {
        let top = r.iter().map(|c| c.0).min().expect("nonempty");
        let right = r.iter().filter(|c| c.0 == top).map(|c| c.1).max().expect("nonempty");
        top == 0 || !in_skew((top - 1, right))
    })
}

/// Sum over ribbons of (rows - 1) and of (columns - 1).
pub fn spins(tiling: &BTreeSet<Vec<Cell>>) -> (u32, u32) {
    let mut s = (0, 0);
    for r in tiling {
        let rows: BTreeSet<usize> = r.iter().map(|c| c.0).collect();
        let cols: BTreeSet<usize> = r.iter().map(|c| c.1).collect();
        s.0 += rows.len() as u32 - 1;
        s.1 += cols.len() as u32 - 1;
    }
    s
}

/// Partitions of `n` containing `inner`.
pub fn containing(inner: &[u32], n: u32) -> Vec<Vec<u32>> {
    partitions(n).into_iter().filter(|o| (0..inner.len()).all(|r| part(o, r) >= inner[r])).collect()
}
