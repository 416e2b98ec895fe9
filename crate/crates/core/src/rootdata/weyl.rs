use alloc::vec::Vec;

use super::{Algebra, Family};
use crate::exactnum::{Exponent, LaurentPolynomial, Weight};

/// A signed permutation of the delta axes times a signed permutation of
/// the epsilon axes: `w(delta_i) = delta_signs[i] * delta_{delta_perm[i]}`,
/// and likewise for epsilons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    delta_perm: Vec<usize>,
    delta_signs: Vec<i8>,
    eps_perm: Vec<usize>,
    eps_signs: Vec<i8>,
}

fn permutation_sign(p: &[usize]) -> i8 {
    let mut seen = alloc::vec![false; p.len()];
    let mut sign = 1i8;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn signed_permutations(k: usize, even_only: bool) -> Vec<(Vec<usize>, Vec<i8>)> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let mut out = Vec::new();
    for perm in perms {
        for mask in 0u32..(1u32 << k) {
            if even_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let signs = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push((perm.clone(), signs));
        }
    }
    out
}

impl WeylElement {
    pub fn identity(alg: &Algebra) -> Self {
        WeylElement {
            delta_perm: (0..alg.n()).collect(),
            delta_signs: alloc::vec![1; alg.n()],
            eps_perm: (0..alg.m()).collect(),
            eps_signs: alloc::vec![1; alg.m()],
        }
    }

    /// Returns `None` unless the data describe an element of the Weyl group
    /// of `alg` (in family D the epsilon sign changes must be even in number).
    pub fn new(
        alg: &Algebra,
        delta_perm: Vec<usize>,
        delta_signs: Vec<i8>,
        eps_perm: Vec<usize>,
        eps_signs: Vec<i8>,
    ) -> Option<Self> {
        let is_perm = |p: &[usize], k: usize| {
            let mut seen = alloc::vec![false; k];
            p.len() == k && p.iter().all(|&i| i < k && !core::mem::replace(&mut seen[i], true))
        };
        let signs_ok = |s: &[i8], k: usize| s.len() == k && s.iter().all(|&x| x == 1 || x == -1);
        if !is_perm(&delta_perm, alg.n())
            || !is_perm(&eps_perm, alg.m())
            || !signs_ok(&delta_signs, alg.n())
            || !signs_ok(&eps_signs, alg.m())
        {
            return None;
        }
        if alg.family() == Family::D && eps_signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
            return None;
        }
        Some(WeylElement { delta_perm, delta_signs, eps_perm, eps_signs })
    }

    pub fn delta_perm(&self) -> &[usize] {
        &self.delta_perm
    }

    pub fn delta_signs(&self) -> &[i8] {
        &self.delta_signs
    }

    pub fn eps_perm(&self) -> &[usize] {
        &self.eps_perm
    }

    pub fn eps_signs(&self) -> &[i8] {
        &self.eps_signs
    }

    /// `(-1)^length`, computed as the determinant of the action.
    pub fn sign(&self) -> i8 {
        let flips = self.delta_signs.iter().chain(&self.eps_signs).filter(|&&s| s < 0).count();
        let s = permutation_sign(&self.delta_perm) * permutation_sign(&self.eps_perm);
        if flips % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn apply_exponent(&self, e: &Exponent) -> Exponent {
        let n = self.delta_perm.len();
        let src = e.as_slice();
        let mut out = Exponent::zeros(src.len());
        let dst = out.as_mut_slice();
        for i in 0..n {
            dst[self.delta_perm[i]] = self.delta_signs[i] as i64 * src[i];
        }
        for j in 0..self.eps_perm.len() {
            dst[n + self.eps_perm[j]] = self.eps_signs[j] as i64 * src[n + j];
        }
        out
    }

    pub fn apply_weight(&self, w: &Weight) -> Weight {
        Weight::from_exponent(&self.apply_exponent(&w.to_exponent()), w.n())
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let part = |p1: &[usize], s1: &[i8], p2: &[usize], s2: &[i8]| -> (Vec<usize>, Vec<i8>) {
            let perm = p2.iter().map(|&i| p1[i]).collect();
            let signs = p2.iter().zip(s2).map(|(&i, &s)| s * s1[i]).collect();
            (perm, signs)
        };
        let (delta_perm, delta_signs) = part(&self.delta_perm, &self.delta_signs, &other.delta_perm, &other.delta_signs);
        let (eps_perm, eps_signs) = part(&self.eps_perm, &self.eps_signs, &other.eps_perm, &other.eps_signs);
        WeylElement { delta_perm, delta_signs, eps_perm, eps_signs }
    }
}

/// Every element of the Weyl group of the even part, each once, in a fixed
/// order.
pub fn weyl_elements(alg: &Algebra) -> Vec<WeylElement> {
    let deltas = signed_permutations(alg.n(), false);
    let epss = signed_permutations(alg.m(), alg.family() == Family::D);
    let mut out = Vec::with_capacity(deltas.len() * epss.len());
    for (dp, ds) in &deltas {
        for (ep, es) in &epss {
            out.push(WeylElement {
                delta_perm: dp.clone(),
                delta_signs: ds.clone(),
                eps_perm: ep.clone(),
                eps_signs: es.clone(),
            });
        }
    }
    out
}

/// `|W|`.
pub fn weyl_order(alg: &Algebra) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let mut eps = fact(alg.m()) << alg.m();
    if alg.family() == Family::D {
        eps /= 2;
    }
    (fact(alg.n()) << alg.n()) * eps
}

pub fn apply_weyl(w: &WeylElement, p: &LaurentPolynomial) -> LaurentPolynomial {
    p.map_exponents(|e| w.apply_exponent(e))
}
