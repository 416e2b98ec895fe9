#![allow(dead_code)]

use std::collections::BTreeSet;

use ospkw_core::{Algebra, Family, HalfInt, HookPartition, Weight};

pub fn alg(family: Family, m: usize, n: usize) -> Algebra {
    Algebra::new(family, m, n).unwrap()
}

pub fn hp(s: &str, alg: &Algebra) -> HookPartition {
    HookPartition::for_algebra(s.parse().unwrap(), alg).unwrap()
}

/// Every algebra of either family with `m <= max_m`, `n <= max_n`.
pub fn algebras(max_m: usize, max_n: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            out.push(alg(Family::B, m, n));
            if m >= 2 {
                out.push(alg(Family::D, m, n));
            }
        }
    }
    out
}

fn doubled(w: &Weight) -> (Vec<i64>, Vec<i64>) {
    (w.delta().iter().map(|c| c.doubled()).collect(), w.eps().iter().map(|c| c.doubled()).collect())
}

/// `4 (x, y)` from doubled coordinates, `(eps, eps) = 1 = -(delta, delta)`.
pub fn form4(x: &Weight, y: &Weight) -> i64 {
    let (xd, xe) = doubled(x);
    let (yd, ye) = doubled(y);
    xe.iter().zip(&ye).map(|(a, b)| a * b).sum::<i64>() - xd.iter().zip(&yd).map(|(a, b)| a * b).sum::<i64>()
}

fn unit(n: usize, m: usize, delta: &[(usize, i64)], eps: &[(usize, i64)]) -> Weight {
    let mut d = vec![0; n];
    let mut e = vec![0; m];
    for &(i, c) in delta {
        d[i] += c;
    }
    for &(j, c) in eps {
        e[j] += c;
    }
    Weight::from_ints(&d, &e)
}

/// Positive roots of the standard Borel subalgebra written out by hand:
/// `(even, odd)`.
pub fn standard_positive_roots(alg: &Algebra) -> (Vec<Weight>, Vec<Weight>) {
    let (n, m) = (alg.n(), alg.m());
    let b = alg.family() == Family::B;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            even.push(unit(n, m, &[(i, 1), (j, -1)], &[]));
            even.push(unit(n, m, &[(i, 1), (j, 1)], &[]));
        }
        even.push(unit(n, m, &[(i, 2)], &[]));
        for j in 0..m {
            odd.push(unit(n, m, &[(i, 1)], &[(j, -1)]));
            odd.push(unit(n, m, &[(i, 1)], &[(j, 1)]));
        }
        if b {
            odd.push(unit(n, m, &[(i, 1)], &[]));
        }
    }
    for s in 0..m {
        for t in s + 1..m {
            even.push(unit(n, m, &[], &[(s, 1), (t, -1)]));
            even.push(unit(n, m, &[], &[(s, 1), (t, 1)]));
        }
        if b {
            even.push(unit(n, m, &[], &[(s, 1)]));
        }
    }
    (even, odd)
}

/// `rho` of the standard Borel subalgebra from its definition.
pub fn standard_rho(alg: &Algebra) -> Weight {
    let (even, odd) = standard_positive_roots(alg);
    let mut sum = Weight::zero(alg.n(), alg.m());
    for r in &even {
        sum = &sum + r;
    }
    for r in &odd {
        sum = &sum - r;
    }
    let (d, e) = doubled(&sum);
    Weight::new(d.iter().map(|&x| HalfInt::from_doubled(x / 2)).collect(), e.iter().map(|&x| HalfInt::from_doubled(x / 2)).collect())
}

/// `lambda^nat` read off the partition directly.
pub fn natural_oracle(lam: &HookPartition) -> Weight {
    let (n, m) = (lam.n(), lam.m());
    let parts = lam.partition().parts();
    let delta: Vec<i64> = (0..n).map(|i| parts.get(i).copied().unwrap_or(0) as i64).collect();
    let eps: Vec<i64> = (0..m)
        .map(|j| parts.iter().filter(|&&p| p as usize > j).count().saturating_sub(n) as i64)
        .collect();
    Weight::from_ints(&delta, &eps)
}

/// Largest set of mutually orthogonal positive isotropic roots orthogonal
/// to `shifted`, by subset search.
pub fn brute_atypicality(shifted: &Weight, alg: &Algebra) -> usize {
    let (_, odd) = standard_positive_roots(alg);
    let cands: Vec<Weight> =
        odd.into_iter().filter(|r| form4(r, r) == 0 && form4(shifted, r) == 0).collect();
    let mut best = 0;
    for mask in 0u64..(1 << cands.len()) {
        let chosen: Vec<&Weight> = (0..cands.len()).filter(|&i| mask >> i & 1 == 1).map(|i| &cands[i]).collect();
        if chosen.len() <= best {
            continue;
        }
        let ok = chosen.iter().enumerate().all(|(i, x)| chosen[i + 1..].iter().all(|y| form4(x, y) == 0));
        if ok {
            best = chosen.len();
        }
    }
    best
}

/// Reduced multisets `(|a|, |b|)` left by every maximum matching of equal
/// absolute values.
pub fn all_matching_residues(shifted: &Weight) -> BTreeSet<(Vec<i64>, Vec<i64>)> {
    let a: Vec<i64> = shifted.delta().iter().map(|c| c.doubled().abs()).collect();
    let b: Vec<i64> = shifted.eps().iter().map(|c| c.doubled().abs()).collect();
    let mut results: Vec<(usize, Vec<bool>, Vec<bool>)> = Vec::new();
    fn go(i: usize, a: &[i64], b: &[i64], ua: &mut Vec<bool>, ub: &mut Vec<bool>, size: usize, out: &mut Vec<(usize, Vec<bool>, Vec<bool>)>) {
        if i == a.len() {
            out.push((size, ua.clone(), ub.clone()));
            return;
        }
        go(i + 1, a, b, ua, ub, size, out);
        for j in 0..b.len() {
            if !ub[j] && a[i] == b[j] {
                ua[i] = true;
                ub[j] = true;
                go(i + 1, a, b, ua, ub, size + 1, out);
                ua[i] = false;
                ub[j] = false;
            }
        }
    }
    go(0, &a, &b, &mut vec![false; a.len()], &mut vec![false; b.len()], 0, &mut results);
    let max = results.iter().map(|r| r.0).max().unwrap_or(0);
    results
        .into_iter()
        .filter(|r| r.0 == max)
        .map(|(_, ua, ub)| {
            let mut ra: Vec<i64> = a.iter().zip(&ua).filter(|(_, &u)| !u).map(|(&x, _)| x).collect();
            let mut rb: Vec<i64> = b.iter().zip(&ub).filter(|(_, &u)| !u).map(|(&x, _)| x).collect();
            ra.sort_unstable_by(|x, y| y.cmp(x));
            rb.sort_unstable_by(|x, y| y.cmp(x));
            (ra, rb)
        })
        .collect()
}

pub fn weyl_order_oracle(alg: &Algebra) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let (n, m) = (alg.n(), alg.m());
    let eps = match alg.family() {
        Family::B => fact(m) << m,
        Family::D => fact(m) << (m - 1),
    };
    (fact(n) << n) * eps
}
