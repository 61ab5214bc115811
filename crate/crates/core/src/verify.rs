//! Exhaustive verification of the path identities at small sizes.
//!
//! Every check enumerates all paths up to the configured bounds and either
//! counts the cases it examined or reports the first counterexample. The
//! `area` and `dinv` implementations are injectable so that the harness
//! itself can be mutation-tested.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::path::{enumerate_paths, gcd, rational_catalan_number, DyckPath};
use crate::poly::{catalan3_closed_form, catalan_with};
use crate::rankword::{is_valid_triple, mark_from_path, omega};
use crate::stats::{self, cell_conditions, CellClass, StatTriple};

/// The statistic implementations under test.
#[derive(Clone, Copy)]
pub struct Statistics {
    pub area: fn(&DyckPath) -> usize,
    pub dinv: fn(&DyckPath) -> usize,
}

impl Default for Statistics {
    fn default() -> Self {
        Statistics {
            area: stats::area,
            dinv: stats::dinv,
        }
    }
}

impl Statistics {
    fn triple(&self, p: &DyckPath) -> Result<StatTriple, String> {
        let skips = stats::skips(p).map_err(|e| format!("{p}: {e}"))?;
        Ok(StatTriple::new((self.area)(p), skips, (self.dinv)(p)))
    }
}

#[derive(Clone, Copy)]
pub struct VerifyConfig {
    /// Largest `n` for the `(3, n)` checks.
    pub max_n: usize,
    /// Largest `m + n` for the general `(m, n)` checks.
    pub max_mn: usize,
    pub stats: Statistics,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 31,
            max_mn: 16,
            stats: Statistics::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.passed())
    }
}

type CheckResult = Result<usize, String>;

/// `n` in `1..=max_n` with `3` not dividing `n`.
pub fn residues(max_n: usize) -> impl Iterator<Item = usize> {
    (1..=max_n).filter(|n| n % 3 != 0)
}

/// Coprime pairs `(m, n)` with `m, n >= 1` and `m + n <= max_mn`.
pub fn coprime_pairs(max_mn: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_mn).flat_map(|total| {
        (1..total)
            .map(move |m| (m, total - m))
            .filter(|&(m, n)| gcd(m, n) == 1)
    })
}

fn paths3(n: usize) -> impl Iterator<Item = DyckPath> {
    enumerate_paths(3, n).expect("3 and n are coprime")
}

fn path_count(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for (m, n) in coprime_pairs(cfg.max_mn) {
        let got = enumerate_paths(m, n).map_err(|e| e.to_string())?.count() as u128;
        let want = rational_catalan_number(m, n);
        if got != want {
            return Err(format!(
                "({m}, {n}): enumerated {got} paths, expected {want}"
            ));
        }
        cases += 1;
    }
    Ok(cases)
}

fn transpose(cfg: &VerifyConfig) -> CheckResult {
    let (area, dinv) = (cfg.stats.area, cfg.stats.dinv);
    let mut cases = 0;
    for (m, n) in coprime_pairs(cfg.max_mn) {
        let mut images = BTreeSet::new();
        for p in enumerate_paths(m, n).map_err(|e| e.to_string())? {
            let t = p.transpose();
            if t.transpose() != p {
                return Err(format!("{p}: transpose is not an involution"));
            }
            if area(&t) != area(&p) || dinv(&t) != dinv(&p) {
                return Err(format!(
                    "{p} and its transpose {t} have different statistics"
                ));
            }
            images.insert(t);
            cases += 1;
        }
        let targets: BTreeSet<_> = enumerate_paths(n, m).map_err(|e| e.to_string())?.collect();
        if images != targets {
            return Err(format!(
                "({m}, {n}): transpose is not onto the ({n}, {m})-paths"
            ));
        }
    }
    Ok(cases)
}

fn mn_symmetry(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for (m, n) in coprime_pairs(cfg.max_mn).filter(|&(m, n)| m < n) {
        let lhs = catalan_with(m, n, cfg.stats.dinv, cfg.stats.area).map_err(|e| e.to_string())?;
        let rhs = catalan_with(n, m, cfg.stats.dinv, cfg.stats.area).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("C({m}, {n}) = {lhs} but C({n}, {m}) = {rhs}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn cell_classification(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for n in residues(cfg.max_n) {
        for p in paths3(n) {
            let mut failing = 0;
            for x in p.cells_above().cells() {
                let conditions = cell_conditions(&p, x).map_err(|e| e.to_string())?;
                let labels = conditions.labels();
                if labels.len() != 1 {
                    return Err(format!("{p}: cell {x} has labels {labels:?}"));
                }
                if x.column == 2 && labels[0] != CellClass::Contributes {
                    return Err(format!("{p}: second-column cell {x} does not contribute"));
                }
                if labels[0] != CellClass::Contributes {
                    failing += 1;
                }
                cases += 1;
            }
            let skips = stats::skips(&p).map_err(|e| e.to_string())?;
            if failing != skips {
                return Err(format!(
                    "{p}: {failing} non-contributing cells but {skips} skips"
                ));
            }
        }
    }
    Ok(cases)
}

/// Runs `check` on every `(3, n)`-path and its triple.
fn per_path(
    cfg: &VerifyConfig,
    mut check: impl FnMut(&DyckPath, StatTriple) -> Result<(), String>,
) -> CheckResult {
    let mut cases = 0;
    for n in residues(cfg.max_n) {
        for p in paths3(n) {
            let triple = cfg.stats.triple(&p)?;
            check(&p, triple)?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn stat_sum(cfg: &VerifyConfig) -> CheckResult {
    per_path(cfg, |p, t| {
        if t.sum() + 1 != p.n() {
            return Err(format!(
                "{p}: (area, skips, dinv) = {t} does not sum to {}",
                p.n() - 1
            ));
        }
        Ok(())
    })
}

fn word_area(cfg: &VerifyConfig) -> CheckResult {
    per_path(cfg, |p, t| {
        let unboxed = mark_from_path(p)
            .map_err(|e| e.to_string())?
            .unboxed_count();
        if unboxed != t.area {
            return Err(format!(
                "{p}: area {} but {unboxed} unboxed entries",
                t.area
            ));
        }
        Ok(())
    })
}

fn word_round_trip(cfg: &VerifyConfig) -> CheckResult {
    per_path(cfg, |p, _| {
        let word = mark_from_path(p).map_err(|e| e.to_string())?;
        match word.to_path() {
            Ok(q) if &q == p => Ok(()),
            Ok(q) => Err(format!("{p}: word {word} decodes to {q}")),
            Err(e) => Err(format!("{p}: word {word} does not decode: {e}")),
        }
    })
}

fn omega_reconstruction(cfg: &VerifyConfig) -> CheckResult {
    per_path(cfg, |p, t| {
        let word = mark_from_path(p).map_err(|e| e.to_string())?;
        match omega(t.area, t.skips, t.dinv) {
            Ok(w) if w == word => Ok(()),
            Ok(w) => Err(format!("{p}: omega{t} = {w}, rank word is {word}")),
            Err(e) => Err(format!("{p}: omega{t} failed: {e}")),
        }
    })
}

fn triple_uniqueness(cfg: &VerifyConfig) -> CheckResult {
    let mut seen: BTreeMap<(usize, StatTriple), DyckPath> = BTreeMap::new();
    per_path(cfg, |p, t| match seen.insert((p.n(), t), p.clone()) {
        Some(other) => Err(format!("{other} and {p} share the triple {t}")),
        None => Ok(()),
    })
}

fn triple_inequalities(cfg: &VerifyConfig) -> CheckResult {
    per_path(cfg, |p, t| {
        let n = p.n();
        let ok = 3 * t.skips < n
            && t.skips <= t.dinv
            && t.skips <= t.area
            && t.dinv + 2 * t.skips < n
            && t.area + 2 * t.skips < n;
        if ok {
            Ok(())
        } else {
            Err(format!(
                "{p}: triple {t} violates the skips bounds for n = {n}"
            ))
        }
    })
}

fn triple_realizability(cfg: &VerifyConfig) -> CheckResult {
    let mut realized = BTreeSet::new();
    per_path(cfg, |_, t| {
        realized.insert(t);
        Ok(())
    })?;
    let mut cases = 0;
    for total in 0..cfg.max_n {
        for a in 0..=total {
            for s in 0..=total - a {
                let t = StatTriple::new(a, s, total - a - s);
                let valid = is_valid_triple(t.area, t.skips, t.dinv);
                if valid != realized.contains(&t) {
                    return Err(if valid {
                        format!("valid triple {t} is not realized by any path")
                    } else {
                        format!("invalid triple {t} is realized by a path")
                    });
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn closed_form(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for n in residues(cfg.max_n) {
        let brute =
            catalan_with(3, n, cfg.stats.dinv, cfg.stats.area).map_err(|e| e.to_string())?;
        let closed = catalan3_closed_form(n).map_err(|e| e.to_string())?;
        if brute != closed {
            return Err(format!(
                "n = {n}: enumeration gives {brute}, closed form gives {closed}"
            ));
        }
        cases += 1;
    }
    Ok(cases)
}

fn qt_symmetry(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for n in residues(cfg.max_n) {
        let closed = catalan3_closed_form(n).map_err(|e| e.to_string())?;
        let brute =
            catalan_with(3, n, cfg.stats.dinv, cfg.stats.area).map_err(|e| e.to_string())?;
        for (label, poly) in [("closed form", closed), ("enumeration", brute)] {
            if !poly.is_qt_symmetric() {
                return Err(format!(
                    "n = {n}: {label} {poly} is not symmetric in q and t"
                ));
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn involution(cfg: &VerifyConfig) -> CheckResult {
    let mut cases = 0;
    for n in residues(cfg.max_n) {
        let mut images = BTreeSet::new();
        for p in paths3(n) {
            let t = cfg.stats.triple(&p)?;
            let image = omega(t.dinv, t.skips, t.area)
                .and_then(|w| w.to_path())
                .map_err(|e| format!("{p}: no image for {}: {e}", t.swapped()))?;
            let ti = cfg.stats.triple(&image)?;
            if ti != t.swapped() {
                return Err(format!("{p} {t} maps to {image} {ti}"));
            }
            let back = omega(ti.dinv, ti.skips, ti.area)
                .and_then(|w| w.to_path())
                .map_err(|e| format!("{image}: no image: {e}"))?;
            if back != p {
                return Err(format!("{p} maps to {image}, which maps to {back}"));
            }
            images.insert(image);
            cases += 1;
        }
        if images.len() != paths3(n).count() {
            return Err(format!("n = {n}: the involution is not a permutation"));
        }
    }
    Ok(cases)
}

type Check = fn(&VerifyConfig) -> CheckResult;

const CHECKS: &[(&str, Check)] = &[
    ("path-count", path_count),
    ("transpose", transpose),
    ("mn-symmetry", mn_symmetry),
    ("cell-classification", cell_classification),
    ("stat-sum", stat_sum),
    ("word-area", word_area),
    ("word-round-trip", word_round_trip),
    ("omega-reconstruction", omega_reconstruction),
    ("triple-uniqueness", triple_uniqueness),
    ("triple-inequalities", triple_inequalities),
    ("triple-realizability", triple_realizability),
    ("closed-form", closed_form),
    ("qt-symmetry", qt_symmetry),
    ("involution", involution),
];

/// Names of all checks, in execution order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

pub fn run(cfg: &VerifyConfig) -> Report {
    let checks = CHECKS
        .iter()
        .map(|&(name, check)| match check(cfg) {
            Ok(cases) => CheckReport {
                name,
                cases,
                counterexample: None,
            },
            Err(counterexample) => CheckReport {
                name,
                cases: 0,
                counterexample: Some(counterexample),
            },
        })
        .collect();
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_bounds_pass() {
        let report = run(&VerifyConfig::default());
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.counterexample);
        }
        assert_eq!(report.checks.len(), check_names().count());
    }

    #[test]
    fn tiny_bounds_pass() {
        let cfg = VerifyConfig {
            max_n: 2,
            max_mn: 2,
            ..Default::default()
        };
        assert!(run(&cfg).all_passed());
    }

    #[test]
    fn perturbed_dinv_is_caught() {
        let cfg = VerifyConfig {
            max_n: 8,
            max_mn: 8,
            stats: Statistics {
                area: stats::area,
                dinv: |p| stats::dinv(p) + 1,
            },
        };
        let report = run(&cfg);
        assert!(!report.all_passed());
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.name, "stat-sum");
        assert!(failure
            .counterexample
            .as_ref()
            .unwrap()
            .contains("does not sum"));
    }

    #[test]
    fn swapped_statistics_are_caught() {
        // area and dinv exchanged: sums and symmetries still hold, the word checks do not
        let cfg = VerifyConfig {
            max_n: 8,
            max_mn: 8,
            stats: Statistics {
                area: stats::dinv,
                dinv: stats::area,
            },
        };
        let report = run(&cfg);
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name)
            .collect();
        assert!(failed.contains(&"word-area"));
        assert!(failed.contains(&"omega-reconstruction"));
    }

    #[test]
    fn pair_enumeration() {
        let pairs: Vec<_> = coprime_pairs(5).collect();
        assert_eq!(
            pairs,
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (1, 3),
                (3, 1),
                (1, 4),
                (2, 3),
                (3, 2),
                (4, 1)
            ]
        );
        assert_eq!(residues(8).collect::<Vec<_>>(), vec![1, 2, 4, 5, 7, 8]);
    }
}
