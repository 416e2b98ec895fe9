use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::Weight;
use crate::error::{Error, Result};

/// A doubled exponent vector: delta axes first, then epsilon axes.
///
/// The derived order is lexicographic, which is the leading-term order
/// used for division and serialization.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(SmallVec<[i64; 8]>);

impl Exponent {
    pub fn zeros(len: usize) -> Self {
        Exponent(SmallVec::from_elem(0, len))
    }

    pub fn from_slice(entries: &[i64]) -> Self {
        Exponent(SmallVec::from_slice(entries))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, other: &Exponent) -> Exponent {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn neg(&self) -> Exponent {
        self.0.iter().map(|a| -a).collect()
    }
}

impl FromIterator<i64> for Exponent {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        Exponent(iter.into_iter().collect())
    }
}

/// A finitely supported integer combination of formal exponentials `e^w`.
///
/// Terms are kept sorted by exponent in decreasing lexicographic order with
/// no zero coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    n: usize,
    m: usize,
    terms: Vec<(Exponent, BigInt)>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        LaurentPolynomial { n, m, terms: Vec::new() }
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::constant(n, m, BigInt::one())
    }

    pub fn constant(n: usize, m: usize, c: BigInt) -> Self {
        Self::from_exponent_term(n, m, Exponent::zeros(n + m), c)
    }

    /// `c * e^w`.
    pub fn monomial(w: &Weight, c: impl Into<BigInt>) -> Self {
        Self::from_exponent_term(w.n(), w.m(), w.to_exponent(), c.into())
    }

    pub fn from_exponent_term(n: usize, m: usize, exp: Exponent, c: BigInt) -> Self {
        assert_eq!(exp.len(), n + m, "exponent of wrong length");
        let terms = if c.is_zero() { Vec::new() } else { alloc::vec![(exp, c)] };
        LaurentPolynomial { n, m, terms }
    }

    /// Collects arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms(n: usize, m: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut acc = PolyAccumulator::new(n, m);
        for (e, c) in terms {
            acc.add_term_owned(e, c);
        }
        acc.finish()
    }

    /// Wraps terms that are already sorted decreasingly with distinct
    /// exponents and nonzero coefficients.
    fn from_sorted(n: usize, m: usize, terms: Vec<(Exponent, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPolynomial { n, m, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.n + self.m
    }

    /// Terms in decreasing exponent order.
    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exponent, BigInt)> {
        self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: &Exponent) -> BigInt {
        match self.terms.binary_search_by(|(e, _)| exp.cmp(e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn coefficient_of(&self, w: &Weight) -> BigInt {
        self.coefficient(&w.to_exponent())
    }

    /// Sum of all coefficients: every `e^w` evaluated at 1.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::RankMismatch {
                expected: format!("({}|{})", self.n, self.m),
                found: format!("({}|{})", other.n, other.m),
            });
        }
        Ok(())
    }

    fn merge_with(&self, other: &Self, sign: bool) -> Self {
        assert!(self.n == other.n && self.m == other.m, "polynomials of different ranks");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &BigInt| if sign { c.clone() } else { -c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((eb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign { ca + cb } else { ca - cb };
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (e.clone(), rhs(c))));
        Self::from_sorted(self.n, self.m, out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.n, self.m);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        Self::from_sorted(self.n, self.m, terms)
    }

    /// Multiplication by `e^w`, given as a doubled exponent.
    pub fn shift(&self, exp: &Exponent) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.add(exp), c.clone())).collect();
        Self::from_sorted(self.n, self.m, terms)
    }

    /// Applies a map to every exponent and re-canonicalizes.
    pub fn map_exponents(&self, mut f: impl FnMut(&Exponent) -> Exponent) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Exponent, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self::from_sorted(self.n, self.m, out)
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Exponent, &BigInt) -> BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(e, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self::from_sorted(self.n, self.m, terms)
    }

    /// Divides every coefficient by `d`, or returns `None` if some
    /// coefficient is not a multiple of `d`.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.push((e.clone(), q));
        }
        Some(Self::from_sorted(self.n, self.m, terms))
    }

    fn coordinate_bounds(&self) -> (Vec<i64>, Vec<i64>) {
        let r = self.rank();
        let mut lo = alloc::vec![i64::MAX; r];
        let mut hi = alloc::vec![i64::MIN; r];
        for (e, _) in &self.terms {
            for (k, &x) in e.as_slice().iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        (lo, hi)
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Runs long division along the leading-term order. Every quotient
    /// exponent must lie in the box cut out by the Newton polytopes of
    /// `self` and `den`; leaving it, or meeting a coefficient that does not
    /// divide, means `den` does not divide `self`.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_rank(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n, self.m));
        }
        let (lead_e, lead_c) = (&den.terms[0].0, &den.terms[0].1);
        let (nlo, nhi) = self.coordinate_bounds();
        let (dlo, dhi) = den.coordinate_bounds();
        let qlo: Vec<i64> = nlo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i64> = nhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        if qlo.iter().zip(&qhi).any(|(l, h)| l > h) {
            return Err(Error::NotDivisible("Newton polytopes are incompatible".into()));
        }
        let mut rem: BTreeMap<Exponent, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.pop_last() {
            let qe = e.sub(lead_e);
            let inside = qe.as_slice().iter().enumerate().all(|(k, &x)| qlo[k] <= x && x <= qhi[k]);
            if !inside {
                return Err(Error::NotDivisible(format!(
                    "remainder term at {:?} cannot be cancelled",
                    e.as_slice()
                )));
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {c} at {:?} is not a multiple of {lead_c}",
                    e.as_slice()
                )));
            }
            for (de, dc) in &den.terms[1..] {
                let t = qe.add(de);
                let v = &qc * dc;
                match rem.entry(t) {
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= v;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    alloc::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(-v);
                    }
                }
            }
            quotient.push((qe, qc));
        }
        Ok(Self::from_sorted(self.n, self.m, quotient))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.merge_with(rhs, true)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.merge_with(rhs, false)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPolynomial::from_sorted(self.n, self.m, terms)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert!(self.n == rhs.n && self.m == rhs.m, "polynomials of different ranks");
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.shift(e).scale(c);
        }
        let mut acc = PolyAccumulator::new(self.n, self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc.add_term_owned(ea.add(eb), ca * cb);
            }
        }
        acc.finish()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $f(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// Hash-based scratch space for summing many terms before canonicalizing.
#[derive(Clone, Debug)]
pub struct PolyAccumulator {
    n: usize,
    m: usize,
    map: HashMap<Exponent, BigInt>,
}

impl PolyAccumulator {
    pub fn new(n: usize, m: usize) -> Self {
        PolyAccumulator { n, m, map: HashMap::new() }
    }

    pub fn add_term(&mut self, exp: &Exponent, c: &BigInt) {
        if let Some(v) = self.map.get_mut(exp) {
            *v += c;
        } else {
            self.map.insert(exp.clone(), c.clone());
        }
    }

    pub fn add_term_owned(&mut self, exp: Exponent, c: BigInt) {
        *self.map.entry(exp).or_default() += c;
    }

    pub fn sub_term(&mut self, exp: &Exponent, c: &BigInt) {
        if let Some(v) = self.map.get_mut(exp) {
            *v -= c;
        } else {
            self.map.insert(exp.clone(), -c);
        }
    }

    pub fn merge(&mut self, other: PolyAccumulator) {
        let (mut big, small) =
            if self.map.len() >= other.map.len() { (core::mem::take(&mut self.map), other.map) } else { (other.map, core::mem::take(&mut self.map)) };
        for (e, c) in small {
            *big.entry(e).or_default() += c;
        }
        self.map = big;
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn finish(self) -> LaurentPolynomial {
        let mut terms: Vec<_> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPolynomial::from_sorted(self.n, self.m, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1(k: i64) -> Weight {
        Weight::from_doubled(&[k], &[])
    }

    #[test]
    fn monomials() {
        assert_eq!(LaurentPolynomial::monomial(&Weight::zero(1, 1), 1), LaurentPolynomial::one(1, 1));
        assert!(LaurentPolynomial::monomial(&Weight::zero(1, 1), 0).is_zero());
        let p = LaurentPolynomial::monomial(&Weight::from_doubled(&[1], &[-1]), 2);
        assert_eq!(p.terms()[0].0.as_slice(), &[1, -1]);
        assert_eq!(p.terms()[0].1, BigInt::from(2));
    }

    #[test]
    fn difference_of_squares() {
        let num = &LaurentPolynomial::monomial(&d1(2), 1) - &LaurentPolynomial::monomial(&d1(-2), 1);
        let den = &LaurentPolynomial::monomial(&d1(1), 1) - &LaurentPolynomial::monomial(&d1(-1), 1);
        let q = num.exact_divide(&den).unwrap();
        let want = &LaurentPolynomial::monomial(&d1(1), 1) + &LaurentPolynomial::monomial(&d1(-1), 1);
        assert_eq!(q, want);
        assert_eq!(q.evaluate_at_one(), BigInt::from(2));
    }

    #[test]
    fn rank_one_weyl_numerator() {
        let num = &LaurentPolynomial::monomial(&d1(6), 1) - &LaurentPolynomial::monomial(&d1(-6), 1);
        let den = &LaurentPolynomial::monomial(&d1(2), 1) - &LaurentPolynomial::monomial(&d1(-2), 1);
        let q = num.exact_divide(&den).unwrap();
        let want = LaurentPolynomial::from_terms(
            1,
            0,
            [(Exponent::from_slice(&[4]), BigInt::one()), (Exponent::from_slice(&[0]), BigInt::one()), (Exponent::from_slice(&[-4]), BigInt::one())],
        );
        assert_eq!(q, want);
    }

    #[test]
    fn division_failures_are_reported() {
        let one = LaurentPolynomial::one(1, 0);
        let den = &LaurentPolynomial::monomial(&d1(2), 1) - &one;
        assert!(matches!(one.exact_divide(&den), Err(Error::NotDivisible(_))));
        assert_eq!(den.exact_divide(&LaurentPolynomial::zero(1, 0)), Err(Error::DivisionByZero));
        let two = LaurentPolynomial::constant(1, 0, BigInt::from(3));
        assert!(two.exact_divide(&LaurentPolynomial::constant(1, 0, BigInt::from(2))).is_err());
        assert!(LaurentPolynomial::zero(1, 0).exact_divide(&den).unwrap().is_zero());
    }
}
