//! Atypicality, tameness, and the normalizing constant of the character
//! formula.
//!
//! A module is tame when some Borel subalgebra has `k` mutually orthogonal
//! isotropic simple roots orthogonal to the shifted highest weight, `k`
//! being the degree of atypicality. [`is_tame`] decides this and returns a
//! witness: the Borel subalgebra, the distinguished roots and the highest
//! weight there.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::Weight;
use crate::hook::{describe, highest_weight_via_reflections, HookPartition, Partition};
use crate::rootdata::{Algebra, BorelData, EpsDeltaSequence, Family, Marker, Root, Twist};

/// How a tame module was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Degree of atypicality zero.
    Typical,
    /// The maximally isotropic Borel subalgebra with roots `delta_i - eps_j`.
    OddBorel,
    /// Family D with `lambda_{n+1} = m`: the root `delta_i + eps_m` for the
    /// zero-based delta index `index`.
    HookFilled { index: usize },
}

/// Outcome of [`is_tame`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamenessReport {
    pub atypicality: usize,
    pub tame: bool,
    pub minus: bool,
    pub kind: Option<WitnessKind>,
    /// Present when tame and atypical.
    pub witness_borel: Option<BorelData>,
    /// Highest weight for the witness Borel subalgebra (the standard one
    /// for typical modules). Present when tame.
    pub witness_weight: Option<Weight>,
    /// Present when tame; empty for typical modules.
    pub distinguished: Option<Vec<Root>>,
    /// Simple roots generating the Levi subalgebra used for the Euler
    /// characteristic. Present when tame.
    pub levi: Option<Vec<Root>>,
    /// Only in family D with `lambda_{n+1} < m`.
    pub e_lambda: Option<u8>,
    /// Present when tame.
    pub j_lambda: Option<u64>,
}

/// `lambda^nat + rho` (or `lambda^nat_- + rho`) for the standard Borel
/// subalgebra.
pub fn shifted_standard(lam: &HookPartition, alg: &Algebra, minus: bool) -> Weight {
    &lam.natural(minus) + BorelData::standard(alg).rho()
}

/// Maximum bipartite matching between `0..n` and `0..m`.
pub(crate) fn max_matching(n: usize, m: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..m).filter(|&j| edge(i, j)).collect()).collect();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; m];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || augment(owner[j].unwrap(), adj, seen, owner) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = alloc::vec![false; m];
        augment(i, &adj, &mut seen, &mut owner);
    }
    let mut out: Vec<(usize, usize)> = owner.iter().enumerate().filter_map(|(j, o)| o.map(|i| (i, j))).collect();
    out.sort();
    out
}

fn vanishes(shifted: &Weight, root: &Weight) -> bool {
    shifted.pairing(root).map(|q| q.is_zero()).unwrap_or(false)
}

fn odd_root(alg: &Algebra, i: usize, j: usize, s: i64) -> Weight {
    &alg.delta(i) + &alg.eps(j).scale(s)
}

/// Degree of atypicality of a shifted weight.
///
/// Distinct isotropic roots `±delta_i ± eps_j` are orthogonal exactly when
/// they share neither index, so the answer is a maximum matching between
/// delta and epsilon indices, joined when some `delta_i ± eps_j` is
/// orthogonal to `shifted`.
pub fn atypicality_degree(shifted: &Weight, alg: &Algebra) -> usize {
    atypical_pairs(shifted, alg).len()
}

pub(crate) fn atypical_pairs(shifted: &Weight, alg: &Algebra) -> Vec<(usize, usize)> {
    max_matching(alg.n(), alg.m(), |i, j| {
        vanishes(shifted, &odd_root(alg, i, j, 1)) || vanishes(shifted, &odd_root(alg, i, j, -1))
    })
}

/// `e(lambda)`: with `lambda'` the conjugate partition, `i` the largest
/// index in `1..=m` with `lambda'_i - i + m - n >= 0` and `i*` the largest
/// with `> 0` (each zero when there is none), `e = i - i*`.
pub fn e_of_lambda(lam: &HookPartition) -> u8 {
    let conj: Partition = lam.partition().transpose();
    let (n, m) = (lam.n() as i64, lam.m() as i64);
    let val = |i: i64| conj.part(i as usize) as i64 - i + m - n;
    let i = (1..=m).filter(|&i| val(i) >= 0).max().unwrap_or(0);
    let i_star = (1..=m).filter(|&i| val(i) > 0).max().unwrap_or(0);
    (i - i_star) as u8
}

/// The family D Borel subalgebra used when `lambda_{n+1} = m`:
/// `delta_1 .. delta_{i-1} eps_1 .. eps_{m-1} delta_i (-eps_m) delta_{i+1} .. delta_n`
/// for a zero-based index `i`.
pub fn hook_filled_sequence(alg: &Algebra, index: usize) -> EpsDeltaSequence {
    let mut markers = alloc::vec![Marker::Delta; index];
    markers.extend(core::iter::repeat_n(Marker::Eps, alg.m() - 1));
    markers.push(Marker::Delta);
    markers.push(Marker::Eps);
    markers.extend(core::iter::repeat_n(Marker::Delta, alg.n() - index - 1));
    let negative = index + 1 < alg.n();
    EpsDeltaSequence::new(markers, negative)
}

fn factorial(k: usize) -> Result<u64> {
    (1..=k as u64).try_fold(1u64, |acc, x| acc.checked_mul(x)).ok_or_else(|| Error::InternalError("j overflows".into()))
}

fn j_value(alg: &Algebra, k: usize, lam: &HookPartition, e: Option<u8>) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    let exp = match alg.family() {
        Family::B => k as u32,
        Family::D if lam.fills_hook() => return Ok(1),
        Family::D => k as u32 - 1 + e.unwrap_or(0) as u32,
    };
    factorial(k)?.checked_mul(1u64 << exp).ok_or_else(|| Error::InternalError("j overflows".into()))
}

fn check_ranks(lam: &HookPartition, alg: &Algebra) -> Result<()> {
    if (lam.n(), lam.m()) != (alg.n(), alg.m()) {
        return Err(Error::RankMismatch {
            expected: format!("({}|{})", alg.n(), alg.m()),
            found: format!("({}|{})", lam.n(), lam.m()),
        });
    }
    Ok(())
}

fn not_tame(k: usize, e: Option<u8>, minus: bool) -> TamenessReport {
    TamenessReport {
        atypicality: k,
        tame: false,
        minus,
        kind: None,
        witness_borel: None,
        witness_weight: None,
        distinguished: None,
        levi: None,
        e_lambda: e,
        j_lambda: None,
    }
}

fn verify_witness(b: &BorelData, weight: &Weight, t: &[Root], what: &str) -> Result<()> {
    let shifted = weight + b.rho();
    for (x, beta) in t.iter().enumerate() {
        let orthogonal_to_rest = t[x + 1..].iter().all(|g| vanishes(beta.weight(), g.weight()));
        if !b.is_simple(beta) || !beta.is_isotropic() || !orthogonal_to_rest || !vanishes(&shifted, beta.weight()) {
            return Err(Error::InternalError(format!(
                "witness for {what} fails at {beta} on {} with shifted weight {shifted}",
                b.sequence()
            )));
        }
    }
    Ok(())
}

/// Decides tameness of `L(lambda^nat)`, or of `L(lambda^nat_-)` when
/// `minus` (family D only).
///
/// The twisted case is read off the plain one through the diagram
/// automorphism, which maps tame modules to tame modules.
pub fn is_tame(lam: &HookPartition, alg: &Algebra, minus: bool) -> Result<TamenessReport> {
    alg.require_classification()?;
    check_ranks(lam, alg)?;
    if minus {
        alg.require_d()?;
    }
    let what = describe(lam, minus);
    let shifted = shifted_standard(lam, alg, false);
    let k = atypicality_degree(&shifted, alg);
    let filled = alg.is_d() && lam.fills_hook();
    let e = if alg.is_d() && !filled { Some(e_of_lambda(lam)) } else { None };
    if k == 0 {
        return Ok(TamenessReport {
            atypicality: 0,
            tame: true,
            minus,
            kind: Some(WitnessKind::Typical),
            witness_borel: None,
            witness_weight: Some(lam.natural(minus)),
            distinguished: Some(Vec::new()),
            levi: Some(Vec::new()),
            e_lambda: e,
            j_lambda: Some(1),
        });
    }
    let (n, m) = (alg.n(), alg.m());
    let difference_pairs = max_matching(n, m, |i, j| vanishes(&shifted, &odd_root(alg, i, j, -1)));
    let (kind, seq, t) = if !filled {
        if difference_pairs.len() < k {
            return Ok(not_tame(k, e, minus));
        }
        let t: Vec<Root> = (1..=k)
            .map(|i| {
                let d = alg.delta(n - k + i - 1);
                let ep = alg.eps(m - k + i - 1);
                Root::from_weight(if alg.is_b() { &ep - &d } else { &d - &ep })
            })
            .collect();
        (WitnessKind::OddBorel, EpsDeltaSequence::odd(alg), t)
    } else {
        if !difference_pairs.is_empty() {
            return Err(Error::InternalError(format!(
                "{what}: a root delta_i - eps_j is orthogonal to {shifted} although lambda_(n+1) = m"
            )));
        }
        let found = (0..n).find(|&i| vanishes(&shifted, &odd_root(alg, i, m - 1, 1)));
        match found {
            Some(i) if k == 1 => {
                let t = alloc::vec![Root::from_weight(odd_root(alg, i, m - 1, 1))];
                (WitnessKind::HookFilled { index: i }, hook_filled_sequence(alg, i), t)
            }
            _ => return Ok(not_tame(k, e, minus)),
        }
    };
    let b = BorelData::from_sequence(alg, &seq)?;
    let weight = highest_weight_via_reflections(lam, &b, false)?;
    verify_witness(&b, &weight, &t, &what)?;
    let simple = b.simple_roots();
    let levi: Vec<Root> = match kind {
        WitnessKind::OddBorel => {
            let size = 2 * k + if alg.is_d() { e.unwrap_or(0) as usize } else { 0 };
            if size > simple.len() {
                return Err(Error::InternalError(format!("{what}: Levi of {size} nodes does not fit")));
            }
            simple[simple.len() - size..].to_vec()
        }
        _ => t.clone(),
    };
    let j = j_value(alg, k, lam, e)?;
    let (b, weight, t, levi) = if minus {
        let tb = b.twisted();
        let tw = weight.twisted();
        let tt: Vec<Root> = t.iter().map(Twist::twisted).collect();
        let tl: Vec<Root> = levi.iter().map(Twist::twisted).collect();
        verify_witness(&tb, &tw, &tt, &what)?;
        (tb, tw, tt, tl)
    } else {
        (b, weight, t, levi)
    };
    Ok(TamenessReport {
        atypicality: k,
        tame: true,
        minus,
        kind: Some(kind),
        witness_borel: Some(b),
        witness_weight: Some(weight),
        distinguished: Some(t),
        levi: Some(levi),
        e_lambda: e,
        j_lambda: Some(j),
    })
}

/// The distinguished roots of the witness Borel subalgebra.
pub fn distinguished_t_bodd(lam: &HookPartition, alg: &Algebra) -> Result<Vec<Root>> {
    let report = is_tame(lam, alg, false)?;
    report.distinguished.ok_or_else(|| Error::NotTame(describe(lam, false)))
}

/// The normalizing constant `j_lambda`: `k! 2^k` in family B,
/// `k! 2^(k-1+e(lambda))` in family D when `lambda_{n+1} < m`, and 1 in
/// family D when `lambda_{n+1} = m` or for typical modules.
pub fn j_lambda(report: &TamenessReport, alg: &Algebra, lam: &HookPartition) -> Result<u64> {
    if !report.tame {
        return Err(Error::NotTame(describe(lam, report.minus)));
    }
    let e = if alg.is_d() && !lam.fills_hook() { Some(e_of_lambda(lam)) } else { None };
    j_value(alg, report.atypicality, lam, e)
}
