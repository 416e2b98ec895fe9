use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use super::{Exponent, HalfInt, Quarter};
use crate::error::{Error, Result};

/// A weight `a_1 delta_1 + ... + a_n delta_n + b_1 eps_1 + ... + b_m eps_m`
/// with half-integer coefficients.
///
/// The arithmetic operators panic when the two operands have different
/// ranks; [`Weight::pairing`] reports the mismatch as an error instead.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    delta: Vec<HalfInt>,
    eps: Vec<HalfInt>,
}

impl Weight {
    pub fn new(delta: Vec<HalfInt>, eps: Vec<HalfInt>) -> Self {
        Weight { delta, eps }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Weight { delta: alloc::vec![HalfInt::ZERO; n], eps: alloc::vec![HalfInt::ZERO; m] }
    }

    pub fn from_ints(delta: &[i64], eps: &[i64]) -> Self {
        Weight {
            delta: delta.iter().map(|&v| HalfInt::from_int(v)).collect(),
            eps: eps.iter().map(|&v| HalfInt::from_int(v)).collect(),
        }
    }

    /// Builds a weight from doubled coefficients.
    pub fn from_doubled(delta: &[i64], eps: &[i64]) -> Self {
        Weight {
            delta: delta.iter().map(|&v| HalfInt::from_doubled(v)).collect(),
            eps: eps.iter().map(|&v| HalfInt::from_doubled(v)).collect(),
        }
    }

    /// `delta_i` for a zero-based index `i`.
    pub fn delta_unit(n: usize, m: usize, i: usize) -> Self {
        let mut w = Weight::zero(n, m);
        w.delta[i] = HalfInt::ONE;
        w
    }

    /// `eps_j` for a zero-based index `j`.
    pub fn eps_unit(n: usize, m: usize, j: usize) -> Self {
        let mut w = Weight::zero(n, m);
        w.eps[j] = HalfInt::ONE;
        w
    }

    pub fn n(&self) -> usize {
        self.delta.len()
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }

    pub fn delta(&self) -> &[HalfInt] {
        &self.delta
    }

    pub fn eps(&self) -> &[HalfInt] {
        &self.eps
    }

    pub fn delta_mut(&mut self) -> &mut [HalfInt] {
        &mut self.delta
    }

    pub fn eps_mut(&mut self) -> &mut [HalfInt] {
        &mut self.eps
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().chain(&self.eps).all(|c| c.is_zero())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.delta.iter().chain(&self.eps).all(|c| c.is_integer())
    }

    pub fn same_rank(&self, other: &Weight) -> bool {
        self.n() == other.n() && self.m() == other.m()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            delta: self.delta.iter().map(|&c| c * k).collect(),
            eps: self.eps.iter().map(|&c| c * k).collect(),
        }
    }

    /// The invariant form: `(eps_i, eps_j) = [i = j]`, `(delta_k, delta_l) = -[k = l]`,
    /// and deltas orthogonal to epsilons.
    pub fn pairing(&self, other: &Weight) -> Result<Quarter> {
        if !self.same_rank(other) {
            return Err(Error::RankMismatch {
                expected: format!("({}|{})", self.n(), self.m()),
                found: format!("({}|{})", other.n(), other.m()),
            });
        }
        let eps: i64 = self.eps.iter().zip(&other.eps).map(|(x, y)| x.doubled() * y.doubled()).sum();
        let delta: i64 =
            self.delta.iter().zip(&other.delta).map(|(x, y)| x.doubled() * y.doubled()).sum();
        Ok(Quarter::from_quadrupled(eps - delta))
    }

    /// Doubled coordinates, delta axes first.
    pub fn to_exponent(&self) -> Exponent {
        self.delta.iter().chain(&self.eps).map(|c| c.doubled()).collect()
    }

    /// Inverse of [`Weight::to_exponent`].
    pub fn from_exponent(exp: &Exponent, n: usize) -> Weight {
        let s = exp.as_slice();
        Weight {
            delta: s[..n].iter().map(|&d| HalfInt::from_doubled(d)).collect(),
            eps: s[n..].iter().map(|&d| HalfInt::from_doubled(d)).collect(),
        }
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(HalfInt, HalfInt) -> HalfInt) -> Weight {
        assert!(self.same_rank(other), "weights of different ranks");
        Weight {
            delta: self.delta.iter().zip(&other.delta).map(|(&x, &y)| f(x, y)).collect(),
            eps: self.eps.iter().zip(&other.eps).map(|(&x, &y)| f(x, y)).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

/// Prints `(a_1,...,a_n | b_1,...,b_m)` with halves as `p/2`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.delta.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(" | ")?;
        for (j, c) in self.eps.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
