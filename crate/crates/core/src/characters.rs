//! Character formulas: Weyl denominators, the Kac-Wakimoto formula for
//! tame modules, Euler characteristics of induced modules, dimensions and
//! supercharacters.
//!
//! Denominators are cleared before any sum is formed:
//! `e^{rho_1} prod_{beta in Phi_1^+} (1 + e^{-beta})` is the odd
//! denominator, so dividing by `prod_{beta in T} (1 + e^{-beta})` is the same
//! as multiplying by the product over the remaining positive odd roots. The
//! alternating sum over the Weyl group is then an integral polynomial which
//! is divided exactly by the even denominator, one binomial at a time.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::atyp::is_tame;
use crate::error::{Error, Result};
use crate::exactnum::{Exponent, LaurentPolynomial, PolyAccumulator, Weight};
use crate::hook::{describe, HookPartition};
use crate::rootdata::{weyl_elements, Algebra, BorelData, Family, Root, Twist, WeylElement};

/// How the alternating sum over the Weyl group is formed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeylSumStrategy {
    /// Apply every group element to every term of the seed polynomial.
    #[default]
    Naive,
    /// Move every seed term to its dominant representative first, drop
    /// terms fixed by a reflection, and expand each surviving orbit once.
    OrbitCompressed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CharacterOptions {
    pub strategy: WeylSumStrategy,
    /// Spread the sum over the current rayon pool. Ignored without the
    /// `std` feature.
    pub parallel: bool,
}

/// A character together with the data used to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterResult {
    pub character: LaurentPolynomial,
    /// `lambda^nat` or `lambda^nat_-`.
    pub highest_weight: Weight,
    pub borel_used: BorelData,
    /// Highest weight for `borel_used`.
    pub borel_weight: Weight,
    pub t_used: Vec<Root>,
    pub j_used: u64,
    pub atypicality: usize,
    pub dimension: BigInt,
}

/// `e^{alpha/2} + e^{-alpha/2}` (or with a minus sign). In doubled
/// coordinates the exponent of `e^{alpha/2}` is `alpha` itself.
fn half_binomial(alpha: &Weight, plus: bool) -> LaurentPolynomial {
    let (n, m) = (alpha.n(), alpha.m());
    let half: Exponent = alpha.to_exponent().as_slice().iter().map(|d| d / 2).collect();
    let c = if plus { BigInt::one() } else { -BigInt::one() };
    let hi = LaurentPolynomial::from_exponent_term(n, m, half.clone(), BigInt::one());
    let lo = LaurentPolynomial::from_exponent_term(n, m, half.neg(), c);
    &hi + &lo
}

/// `e^{alpha/2} - e^{-alpha/2}` for each positive even root, in the order of
/// [`BorelData::pos_even`].
pub fn even_denominator_factors(b: &BorelData) -> Vec<LaurentPolynomial> {
    b.pos_even().iter().map(|r| half_binomial(r.weight(), false)).collect()
}

/// `(D_0, D_1)`: the products of `e^{alpha/2} - e^{-alpha/2}` over positive
/// even roots and of `e^{beta/2} + e^{-beta/2}` over positive odd roots.
pub fn denominators(b: &BorelData) -> (LaurentPolynomial, LaurentPolynomial) {
    let alg = b.algebra();
    let one = LaurentPolynomial::one(alg.n(), alg.m());
    let d0 = even_denominator_factors(b).iter().fold(one.clone(), |acc, f| &acc * f);
    let d1 = b
        .pos_odd()
        .iter()
        .map(|r| half_binomial(r.weight(), true))
        .fold(one, |acc, f| &acc * &f);
    (d0, d1)
}

/// `prod (1 + e^{-beta})` over the given roots.
pub fn one_plus_product<'a>(alg: &Algebra, roots: impl IntoIterator<Item = &'a Root>) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one(alg.n(), alg.m());
    for r in roots {
        let f = &LaurentPolynomial::one(alg.n(), alg.m()) + &LaurentPolynomial::monomial(&-r.weight(), 1);
        acc = &acc * &f;
    }
    acc
}

fn sum_chunk(elements: &[WeylElement], seed: &LaurentPolynomial) -> PolyAccumulator {
    let mut acc = PolyAccumulator::new(seed.n(), seed.m());
    for w in elements {
        let negate = w.sign() < 0;
        for (e, c) in seed.terms() {
            let image = w.apply_exponent(e);
            if negate {
                acc.sub_term(&image, c);
            } else {
                acc.add_term(&image, c);
            }
        }
    }
    acc
}

/// Sorts the absolute values of `xs` decreasingly. Returns the sorted
/// values, the sign of the signed permutation used, and `false` when some
/// reflection fixes `xs`.
fn dominant_part(xs: &[i64], family: Option<Family>) -> (Vec<i64>, i8, bool) {
    let k = xs.len();
    let mut signs: Vec<i64> = xs.iter().map(|&x| if x < 0 { -1 } else { 1 }).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| xs[b].abs().cmp(&xs[a].abs()).then(a.cmp(&b)));
    let distinct = order.windows(2).all(|p| xs[p[0]].abs() != xs[p[1]].abs());
    let has_zero = xs.contains(&0);
    let regular = match family {
        Some(Family::D) => distinct,
        _ => distinct && !has_zero,
    };
    if family == Some(Family::D) && signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
        let fix = match xs.iter().position(|&x| x == 0) {
            Some(z) => z,
            None => order[k - 1],
        };
        signs[fix] = -signs[fix];
    }
    // order[t] is the source index that lands in slot t.
    let mut perm = alloc::vec![0usize; k];
    for (t, &src) in order.iter().enumerate() {
        perm[src] = t;
    }
    let mut out = alloc::vec![0i64; k];
    for i in 0..k {
        out[perm[i]] = signs[i] * xs[i];
    }
    let flips = signs.iter().filter(|&&s| s < 0).count();
    let mut sign = permutation_parity(&perm);
    if flips % 2 == 1 {
        sign = -sign;
    }
    (out, sign, regular)
}

fn permutation_parity(p: &[usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The dominant representative of the orbit of `e` under the Weyl group
/// and the sign of the element carrying `e` there, or `None` when a
/// reflection fixes `e` (its alternating orbit sum then vanishes).
pub fn dominant_representative(alg: &Algebra, e: &Exponent) -> Option<(Exponent, i8)> {
    let n = alg.n();
    let (dv, ds, dr) = dominant_part(&e.as_slice()[..n], None);
    let (ev, es, er) = dominant_part(&e.as_slice()[n..], Some(alg.family()));
    if !(dr && er) {
        return None;
    }
    Some((dv.into_iter().chain(ev).collect(), ds * es))
}

/// `sum_w (-1)^{l(w)} w(seed)` over the Weyl group of the even part.
pub fn weyl_alternating_sum(alg: &Algebra, seed: &LaurentPolynomial, opts: CharacterOptions) -> LaurentPolynomial {
    let elements = weyl_elements(alg);
    match opts.strategy {
        WeylSumStrategy::Naive => {
            #[cfg(feature = "std")]
            if opts.parallel {
                use rayon::prelude::*;
                let chunk = (elements.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
                return elements
                    .par_chunks(chunk)
                    .map(|c| sum_chunk(c, seed))
                    .reduce(|| PolyAccumulator::new(alg.n(), alg.m()), |mut a, b| {
                        a.merge(b);
                        a
                    })
                    .finish();
            }
            sum_chunk(&elements, seed).finish()
        }
        WeylSumStrategy::OrbitCompressed => {
            let mut reps = PolyAccumulator::new(alg.n(), alg.m());
            for (e, c) in seed.terms() {
                if let Some((d, s)) = dominant_representative(alg, e) {
                    if s > 0 {
                        reps.add_term(&d, c);
                    } else {
                        reps.sub_term(&d, c);
                    }
                }
            }
            let reps = reps.finish();
            let expand = |w: &WeylElement| -> Vec<(Exponent, BigInt)> {
                let negate = w.sign() < 0;
                reps.terms()
                    .iter()
                    .map(|(e, c)| (w.apply_exponent(e), if negate { -c } else { c.clone() }))
                    .collect()
            };
            #[cfg(feature = "std")]
            if opts.parallel {
                use rayon::prelude::*;
                let terms: Vec<(Exponent, BigInt)> = elements.par_iter().flat_map_iter(expand).collect();
                return LaurentPolynomial::from_terms(alg.n(), alg.m(), terms);
            }
            LaurentPolynomial::from_terms(alg.n(), alg.m(), elements.iter().flat_map(expand))
        }
    }
}

/// Divides by the even denominator, one binomial factor at a time.
pub fn divide_by_even_denominator(b: &BorelData, num: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let mut q = num.clone();
    for f in even_denominator_factors(b) {
        q = q.exact_divide(&f)?;
    }
    Ok(q)
}

/// The cleared numerator
/// `sum_w (-1)^{l(w)} w(e^{lambda_b + rho_0} prod_{beta in Phi_1^+ \ T} (1 + e^{-beta}))`.
pub fn kac_wakimoto_numerator(
    b: &BorelData,
    highest_weight: &Weight,
    distinguished: &[Root],
    opts: CharacterOptions,
) -> LaurentPolynomial {
    let alg = b.algebra();
    let rest = b.pos_odd().iter().filter(|r| !distinguished.contains(r));
    let seed = one_plus_product(alg, rest).shift(&(highest_weight + b.rho_even()).to_exponent());
    weyl_alternating_sum(alg, &seed, opts)
}

/// The Kac-Wakimoto formula for the module with `b`-highest weight
/// `highest_weight`, distinguished roots `distinguished` and normalizing
/// constant `j`.
pub fn kac_wakimoto(
    b: &BorelData,
    highest_weight: &Weight,
    distinguished: &[Root],
    j: u64,
    opts: CharacterOptions,
) -> Result<LaurentPolynomial> {
    let num = kac_wakimoto_numerator(b, highest_weight, distinguished, opts);
    let q = divide_by_even_denominator(b, &num)?;
    q.div_exact_scalar(&BigInt::from(j)).ok_or(Error::JDivisibilityFailure(j))
}

/// Character of the tame module `L(lambda^nat)`, or of `L(lambda^nat_-)`
/// when `minus` (family D only), with default options.
pub fn kw_character(lam: &HookPartition, alg: &Algebra, minus: bool) -> Result<CharacterResult> {
    kw_character_with(lam, alg, minus, CharacterOptions::default())
}

pub fn kw_character_with(
    lam: &HookPartition,
    alg: &Algebra,
    minus: bool,
    opts: CharacterOptions,
) -> Result<CharacterResult> {
    if minus {
        alg.require_d()?;
    }
    let report = is_tame(lam, alg, false)?;
    if !report.tame {
        return Err(Error::NotTame(describe(lam, minus)));
    }
    let missing = || Error::InternalError(format!("tameness report for {} is incomplete", describe(lam, minus)));
    let b = report.witness_borel.clone().unwrap_or_else(|| BorelData::standard(alg));
    let weight = report.witness_weight.clone().ok_or_else(missing)?;
    let t = report.distinguished.clone().ok_or_else(missing)?;
    let j = report.j_lambda.ok_or_else(missing)?;
    let mut character = kac_wakimoto(&b, &weight, &t, j, opts)?;
    let (b, weight, t) = if minus {
        character = character.twisted();
        (b.twisted(), weight.twisted(), t.iter().map(Twist::twisted).collect())
    } else {
        (b, weight, t)
    };
    let highest_weight = lam.natural(minus);
    if !character.coefficient_of(&highest_weight).is_one() {
        return Err(Error::InternalError(format!(
            "character of {} does not have multiplicity one at {highest_weight}",
            describe(lam, minus)
        )));
    }
    let dimension = character.evaluate_at_one();
    Ok(CharacterResult {
        character,
        highest_weight,
        borel_used: b,
        borel_weight: weight,
        t_used: t,
        j_used: j,
        atypicality: report.atypicality,
        dimension,
    })
}

/// Euler characteristic of the module induced from the one-dimensional
/// module of weight `lam_b` over the parabolic subalgebra whose Levi part
/// is generated by `levi_simple_roots`:
/// `D_0^{-1} sum_w (-1)^{l(w)} w(e^{rho_0 + lam_b} prod_{alpha in Phi_1^+(u)} (1 + e^{-alpha}))`,
/// where `Phi_1^+(u)` are the positive odd roots outside the Levi part.
pub fn euler_char_character(levi_simple_roots: &[Root], lam_b: &Weight, b: &BorelData) -> Result<LaurentPolynomial> {
    euler_char_character_with(levi_simple_roots, lam_b, b, CharacterOptions::default())
}

pub fn euler_char_character_with(
    levi_simple_roots: &[Root],
    lam_b: &Weight,
    b: &BorelData,
    opts: CharacterOptions,
) -> Result<LaurentPolynomial> {
    if let Some(r) = levi_simple_roots.iter().find(|r| !b.is_simple(r)) {
        return Err(Error::InvalidLevi(format!("{r} is not a simple root of {}", b.sequence())));
    }
    let alg = b.algebra();
    let levi_roots = b.positive_roots_in_span(levi_simple_roots);
    let outside = b.pos_odd().iter().filter(|r| !levi_roots.contains(r));
    let seed = one_plus_product(alg, outside).shift(&(lam_b + b.rho_even()).to_exponent());
    divide_by_even_denominator(b, &weyl_alternating_sum(alg, &seed, opts))
}

/// Flips the sign of every term whose total delta degree has the other
/// parity than the highest weight's.
pub fn supercharacter(cr: &CharacterResult) -> LaurentPolynomial {
    let n = cr.highest_weight.n();
    let degree = |e: &Exponent| -> i64 { e.as_slice()[..n].iter().sum::<i64>() / 2 };
    let top = degree(&cr.highest_weight.to_exponent()).rem_euclid(2);
    cr.character.map_coefficients(|e, c| if degree(e).rem_euclid(2) == top { c.clone() } else { -c })
}

pub fn dimension(cr: &CharacterResult) -> BigInt {
    cr.character.evaluate_at_one()
}

/// True when every coefficient is positive.
pub fn has_nonnegative_coefficients(p: &LaurentPolynomial) -> bool {
    p.terms().iter().all(|(_, c)| *c > BigInt::zero())
}
