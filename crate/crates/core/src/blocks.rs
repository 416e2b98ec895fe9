//! Central characters, the dominance order and the tame bottom of a block.
//!
//! Two standard highest weights share a central character when, after
//! removing matched atypical entries from their shifted weights, the
//! remaining absolute values agree. Every block contains a tame module at
//! its bottom; [`bottom_of_block`] walks down to it.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::atyp::is_tame;
use crate::error::{Error, Result};
use crate::exactnum::{HalfInt, Weight};
use crate::hook::{describe, HookPartition};
use crate::rootdata::{Algebra, BorelData, Family, Root};

/// What remains of a shifted weight after removing its atypical pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralCharFingerprint {
    pub k: usize,
    /// Remaining `|a_i|`, decreasing.
    pub reduced_delta: Vec<HalfInt>,
    /// Remaining `|b_j|`, decreasing.
    pub reduced_eps: Vec<HalfInt>,
    /// In family D, for typical weights with no zero epsilon entry, the
    /// product of the signs of the epsilon entries; even sign changes
    /// cannot alter it.
    pub eps_sign: Option<i8>,
}

/// Fingerprint of the shifted weight `lambda^nat + rho`.
///
/// Entries with equal absolute value are paired off value by value, from
/// the largest down; this realizes a maximum matching.
pub fn fingerprint(shifted: &Weight, alg: &Algebra) -> CentralCharFingerprint {
    let mut delta: Vec<HalfInt> = shifted.delta().iter().map(|c| c.abs()).collect();
    let mut eps: Vec<HalfInt> = shifted.eps().iter().map(|c| c.abs()).collect();
    delta.sort_by_key(|&c| Reverse(c));
    eps.sort_by_key(|&c| Reverse(c));
    let (mut rd, mut re) = (Vec::new(), Vec::new());
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < delta.len() || j < eps.len() {
        match (delta.get(i), eps.get(j)) {
            (Some(&a), Some(&b)) if a == b => {
                k += 1;
                i += 1;
                j += 1;
            }
            (Some(&a), Some(&b)) if a > b => {
                rd.push(a);
                i += 1;
            }
            (Some(&a), None) => {
                rd.push(a);
                i += 1;
            }
            (_, Some(&b)) => {
                re.push(b);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let eps_sign = if alg.family() == Family::D && k == 0 && shifted.eps().iter().all(|c| !c.is_zero()) {
        let negatives = shifted.eps().iter().filter(|c| c.signum() < 0).count();
        Some(if negatives % 2 == 0 { 1 } else { -1 })
    } else {
        None
    };
    CentralCharFingerprint { k, reduced_delta: rd, reduced_eps: re, eps_sign }
}

/// Whether two shifted standard highest weights have the same central
/// character.
pub fn same_central_character(x: &Weight, y: &Weight, alg: &Algebra) -> bool {
    fingerprint(x, alg) == fingerprint(y, alg)
}

/// `a <= b` in the dominance order of `borel`: `b - a` is a nonnegative
/// integer combination of positive roots, equivalently of simple roots.
pub fn preceq(a: &Weight, b: &Weight, borel: &BorelData) -> bool {
    borel.in_positive_cone(&(b - a))
}

/// One replacement of the bottom-of-block walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomStep {
    /// Shifted weight before the step.
    pub before: Weight,
    /// The epsilon entry `b_j` that was moved.
    pub chosen: HalfInt,
    /// Its replacement `b~_j`.
    pub replacement: HalfInt,
    /// Shifted weight after the step.
    pub after: Weight,
    pub partition: HookPartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomTrace {
    pub start: HookPartition,
    pub steps: Vec<BottomStep>,
    pub result: HookPartition,
}

/// Walks from `L(lambda^nat)` down its block to a tame module.
///
/// While the module is not tame, pick the smallest positive `b_j` equal to
/// some `a_i` with `-b_j` not among the `a`'s, and let `b~_j` be the least
/// admissible value `x <= b_j` (`x` in `1/2 + Z_+` for family B, `Z_+` for
/// family D) with `x` different from every later `b_k` and `-x` different
/// from every `a`. Then `a_i` becomes `-b~_j`, `b_j` becomes `b~_j`, and
/// both lists are re-sorted.
pub fn bottom_of_block(lam: &HookPartition, alg: &Algebra) -> Result<BottomTrace> {
    alg.require_classification()?;
    let rho = BorelData::standard(alg).rho().clone();
    let cap = lam.partition().size() as usize + alg.m() + alg.n() + 1;
    let mut current = HookPartition::for_algebra(lam.partition().clone(), alg)?;
    let mut steps = Vec::new();
    while !is_tame(&current, alg, false)?.tame {
        if steps.len() >= cap {
            return Err(Error::InternalError(format!("bottom of the block of {lam} not reached in {cap} steps")));
        }
        let before = &current.natural(false) + &rho;
        let a = before.delta().to_vec();
        let b = before.eps().to_vec();
        let j = (0..b.len())
            .filter(|&j| b[j].signum() > 0 && a.contains(&b[j]) && !a.contains(&-b[j]))
            .min_by_key(|&j| b[j])
            .ok_or_else(|| Error::InternalError(format!("{current} is not tame but has no movable entry")))?;
        let i = a.iter().position(|&x| x == b[j]).expect("checked above");
        let start = if alg.is_b() { HalfInt::HALF } else { HalfInt::ZERO };
        let replacement = (0..)
            .map(|s| start + HalfInt::from_int(s))
            .take_while(|&x| x <= b[j])
            .find(|&x| !b[j + 1..].contains(&x) && !a.contains(&-x))
            .ok_or_else(|| Error::InternalError(format!("no replacement for {} in {before}", b[j])))?;
        let chosen = b[j];
        let mut na = a;
        let mut nb = b;
        na[i] = -replacement;
        nb[j] = replacement;
        na.sort_by_key(|&c| Reverse(c));
        nb.sort_by_key(|&c| Reverse(c));
        let after = Weight::new(na, nb);
        let next = HookPartition::from_natural_weight(&(&after - &rho))
            .map_err(|e| Error::InternalError(format!("step from {before} left the hook partitions: {e}")))?;
        steps.push(BottomStep { before, chosen, replacement, after, partition: next.clone() });
        current = next;
    }
    Ok(BottomTrace { start: lam.clone(), steps, result: current })
}

/// In family D, for tame `lambda` with `lambda_n >= m - 1` and atypicality
/// one, every tame `lambda(x)` sharing its central character.
///
/// With `a_i = b_m` the atypical pair of `lambda^nat + rho`, `x` runs over
/// `{0, ..., b_{m-1} - 1}` minus the other `a`'s; `lambda(x)^nat + rho` has
/// delta entries the other `a`'s and `x`, and epsilon entries
/// `b_1, ..., b_{m-1}, x`.
pub fn lambda_x_family(lam: &HookPartition, alg: &Algebra) -> Result<Vec<(i64, HookPartition)>> {
    alg.require_d()?;
    let report = is_tame(lam, alg, false)?;
    let (n, m) = (alg.n(), alg.m());
    if !report.tame || report.atypicality != 1 || (lam.part(n) as usize) + 1 < m {
        return Err(Error::WrongRegime(format!(
            "{lam} must be tame with atypicality 1 and lambda_n >= m - 1 (atypicality {}, tame {})",
            report.atypicality, report.tame
        )));
    }
    let rho = BorelData::standard(alg).rho().clone();
    let shifted = &lam.natural(false) + &rho;
    let (a, b) = (shifted.delta(), shifted.eps());
    let i = (0..n)
        .find(|&i| shifted.pairing(&(&alg.delta(i) + &alg.eps(m - 1))).map(|q| q.is_zero()).unwrap_or(false))
        .ok_or_else(|| Error::WrongRegime(format!("{shifted} has no atypical pair with the last epsilon")))?;
    let others: Vec<HalfInt> = a.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &c)| c).collect();
    let top = b[m - 2].to_integer().ok_or_else(|| Error::InternalError(format!("{shifted} is not integral")))?;
    let mut out = Vec::new();
    for x in 0..top {
        let hx = HalfInt::from_int(x);
        if others.contains(&hx) {
            continue;
        }
        let mut c = others.clone();
        c.push(hx);
        c.sort_by_key(|&v| Reverse(v));
        let mut d = b[..m - 1].to_vec();
        d.push(hx);
        let member = HookPartition::from_natural_weight(&(&Weight::new(c, d) - &rho))
            .map_err(|e| Error::InternalError(format!("lambda({x}) for {lam} is not a hook partition: {e}")))?;
        if !is_tame(&member, alg, false)?.tame
            || !same_central_character(&(&member.natural(false) + &rho), &shifted, alg)
        {
            return Err(Error::InternalError(format!("lambda({x}) = {member} is not a tame member of the block of {lam}")));
        }
        out.push((x, member));
    }
    Ok(out)
}

/// Result of [`admissibility_positivity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    /// Strict positivity on every checked root.
    pub positive: bool,
    /// Non-strict positivity on every checked root.
    pub nonnegative: bool,
    /// First root where strict positivity fails.
    pub violation: Option<Root>,
    /// The even roots outside the Levi subalgebra that were checked.
    pub checked: Vec<Root>,
}

/// Positive even roots outside the Levi subalgebra attached to a tame
/// module of atypicality `k`.
pub fn even_roots_outside_levi(lam: &HookPartition, alg: &Algebra, k: usize, e: u8) -> Vec<Root> {
    let b = BorelData::standard(alg);
    if alg.is_d() && lam.fills_hook() {
        return b.pos_even().to_vec();
    }
    let (n, m) = (alg.n(), alg.m());
    let delta_limit = n - k;
    let eps_limit = if alg.is_d() { (m - k).saturating_sub(e as usize) } else { m - k };
    b.pos_even()
        .iter()
        .filter(|r| {
            let w = r.weight();
            let first_delta = w.delta().iter().position(|c| !c.is_zero());
            let first_eps = w.eps().iter().position(|c| !c.is_zero());
            match (first_delta, first_eps) {
                (Some(i), None) => i < delta_limit,
                (None, Some(s)) => s < eps_limit,
                _ => false,
            }
        })
        .cloned()
        .collect()
}

/// Checks `(lambda_b + rho_b, beta / (beta, beta)) > 0` for the positive even
/// roots `beta` outside the Levi subalgebra of the tame witness.
pub fn admissibility_positivity(lam: &HookPartition, alg: &Algebra) -> Result<Admissibility> {
    let report = is_tame(lam, alg, false)?;
    if !report.tame {
        return Err(Error::NotTame(describe(lam, false)));
    }
    if report.atypicality == 0 {
        return Err(Error::WrongRegime(format!("{lam} is typical")));
    }
    let b = report.witness_borel.as_ref().expect("atypical tame modules carry a witness");
    let shifted = report.witness_weight.as_ref().expect("tame modules carry a weight") + b.rho();
    let checked = even_roots_outside_levi(lam, alg, report.atypicality, report.e_lambda.unwrap_or(0));
    let mut violation = None;
    let mut nonnegative = true;
    for beta in &checked {
        let num = shifted.pairing(beta.weight())?;
        let den = beta.weight().pairing(beta.weight())?;
        let sign = num.signum() * den.signum();
        if sign <= 0 && violation.is_none() {
            violation = Some(beta.clone());
        }
        nonnegative &= sign >= 0;
    }
    Ok(Admissibility { positive: violation.is_none(), nonnegative, violation, checked })
}
