//! Property suites run by `verify`.

use std::collections::{BTreeMap, BTreeSet};

use crate::canonical::CanonicalEngine;
use crate::error::Result;
use crate::fock::{FockSpace, FockVector};
use crate::lusztig::{block_partition, bmm_label, CharacterVector, Lusztig};
use crate::partition::{
    charge_to_core, core_and_quotient, core_to_charge, from_core_and_quotient, is_e_regular, multipartitions,
    partitions_of, remove_rim_hooks, residue_content, Partition,
};
use crate::render::label_tex;
use crate::symfunc::plethysm_pe_schur;

use super::config::RunConfig;

/// Per-case outcomes of one suite.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub cases: Vec<(bool, String)>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report { name: name.into(), cases: Vec::new() }
    }

    fn case(&mut self, ok: bool, description: String) {
        self.cases.push((ok, description));
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|(ok, _)| !ok).count()
    }

    pub fn summary(&self) -> String {
        match self.failures() {
            0 => format!("PASS ({} cases)", self.cases.len()),
            f => format!("FAIL ({f} of {} cases)", self.cases.len()),
        }
    }

    /// Case lines followed by the summary line.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (ok, d) in &self.cases {
            s.push_str(&format!("{} {} {d}\n", if *ok { "PASS" } else { "FAIL" }, self.name));
        }
        s.push_str(&format!("{}: {}\n", self.name, self.summary()));
        s
    }
}

/// `S_μ|λ>` at `v = 1` against `L_μ(χ_λ)` for `λ ⊢ n ≤ nmax`, `μ ⊢ k ≤ kmax`,
/// and `S_μ|∅>` against the plethysm `p_e(s_μ)`.
pub fn lusztig_s(cfg: &RunConfig, nmax: u32, kmax: u32) -> Result<Report> {
    let mut report = Report::new("lusztig-s");
    let space = FockSpace::with_convention(cfg.e, cfg.convention)?;
    let lusztig = Lusztig::with_convention(cfg.e, cfg.convention)?;
    for k in 0..=kmax {
        for mu in partitions_of(k) {
            for n in 0..=nmax {
                for lam in partitions_of(n) {
                    let fock = space.apply_s(&FockVector::basis(lam.clone()), &mu)?;
                    let chars = lusztig.induce(&CharacterVector::chi(lam.clone()), &mu)?;
                    let ok = CharacterVector::from_fock_at_one(&fock) == chars;
                    report.case(ok, format!("e={} lambda=({lam}) mu=({mu})", cfg.e));
                }
            }
            let fock = space.apply_s(&FockVector::basis(Partition::empty()), &mu)?.eval_one();
            let sign = if cfg.convention.triangular_upwards() && (k * (cfg.e - 1)) % 2 == 1 { -1 } else { 1 };
            let pleth: BTreeMap<Partition, num_bigint::BigInt> = plethysm_pe_schur(&mu, cfg.e)?
                .iter()
                .map(|(l, c)| (l.clone(), num_bigint::BigInt::from(sign * c)))
                .collect();
            report.case(fock == pleth, format!("e={} plethysm p_e(s_({mu}))", cfg.e));
        }
    }
    Ok(report)
}

/// `G⁻(λ) = S_α G⁻(μ)` at `v = 1` for every e-singular `λ ⊢ n ≤ nmax`, with
/// the Lusztig-induction reading of the row and a diagnostic at generic `v`.
pub fn steinberg(cfg: &RunConfig, nmax: u32) -> Result<Report> {
    let mut report = Report::new("steinberg");
    let mut engine = CanonicalEngine::with_convention(cfg.e, cfg.convention)?;
    for n in 0..=nmax {
        for lam in partitions_of(n) {
            let label = match cfg.convention {
                crate::Convention::Transposed => lam.clone(),
                crate::Convention::Classical => lam.conjugate(),
            };
            if is_e_regular(&label, cfg.e)? {
                continue;
            }
            let s = engine.steinberg_factor(&lam)?;
            let b = engine.brauer_as_lusztig(&lam)?;
            report.case(
                s.at_one && b.matches,
                format!(
                    "row {} ({lam}): mu=({}) alpha=({}) levi={} brauer={} generic-v={}",
                    label_tex(&lam),
                    s.mu,
                    s.alpha,
                    b.levi,
                    if b.matches { "match" } else { "mismatch" },
                    if s.generic { "equal" } else { "differs" },
                ),
            );
        }
    }
    Ok(report)
}

/// Blocks as e-core classes, residue contents, block-diagonal `D_n` and the
/// quotient bijection onto e-multipartitions of the weight.
pub fn blocks(cfg: &RunConfig, nmax: u32) -> Result<Report> {
    let mut report = Report::new("blocks");
    let e = cfg.e;
    let mut engine = CanonicalEngine::with_convention(e, cfg.convention)?;
    for n in 0..=nmax {
        let blocks = block_partition(n, e)?;
        let labels = partitions_of(n);
        let block_of: BTreeMap<&Partition, usize> =
            blocks.iter().enumerate().flat_map(|(i, b)| b.members.iter().map(move |l| (l, i))).collect();
        let d = if n <= cfg.bounds.canonical { Some(engine.decomposition_matrix(n)?) } else { None };
        for (i, b) in blocks.iter().enumerate() {
            let cores_ok = b.members.iter().all(|l| remove_rim_hooks(l, e).map(|r| r.core == b.core).unwrap_or(false));
            let content = residue_content(&b.members[0], e);
            let residues_ok = labels.iter().all(|l| (residue_content(l, e) == content) == (block_of[l] == i));
            let quotients: BTreeSet<_> = b.members.iter().map(|l| bmm_label(l, e)).collect::<Result<_>>()?;
            let expected: BTreeSet<_> = multipartitions(e, b.weight).into_iter().collect();
            let bmm_ok = quotients.len() == b.members.len() && quotients == expected;
            let diag_ok = d.as_ref().is_none_or(|d| {
                b.members.iter().all(|r| {
                    labels.iter().all(|c| {
                        block_of[c] == i || d.get(r, c).is_none_or(|x| x == &num_bigint::BigInt::from(0))
                    })
                })
            });
            report.case(
                cores_ok && residues_ok && bmm_ok && diag_ok,
                format!(
                    "n={n} e={e} core=({}) weight={} size={}{}",
                    b.core,
                    b.weight,
                    b.members.len(),
                    if d.is_some() { "" } else { " (D_n not computed)" }
                ),
            );
        }
    }
    Ok(report)
}

/// Core/quotient and charge bijections, partition literals and JSON forms.
pub fn roundtrips(cfg: &RunConfig, nmax: u32) -> Result<Report> {
    let mut report = Report::new("roundtrips");
    let e = cfg.e;
    for n in 0..=nmax {
        let mut ok = true;
        for lam in partitions_of(n) {
            let (core, quotient) = core_and_quotient(&lam, e)?;
            ok &= from_core_and_quotient(&core, &quotient, e)? == lam;
            ok &= core.size() + e * quotient.size() == n;
            let charge = core_to_charge(&core, e, cfg.d)?;
            ok &= charge_to_core(&charge, e)? == core;
            ok &= lam.to_string().parse::<Partition>()? == lam;
            let json = serde_json::to_string(&lam).expect("serialisable");
            ok &= serde_json::from_str::<Partition>(&json).ok().as_ref() == Some(&lam);
            let chi = CharacterVector::chi(lam.clone());
            ok &= CharacterVector::from_json(&chi.to_json())? == chi;
        }
        report.case(ok, format!("n={n} e={e} ({} partitions)", partitions_of(n).len()));
    }
    Ok(report)
}
