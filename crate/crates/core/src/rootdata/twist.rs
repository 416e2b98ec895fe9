use crate::error::Result;
use crate::exactnum::{LaurentPolynomial, Weight};

use super::{Algebra, BorelData, EpsDeltaSequence, Root};

/// The diagram automorphism of family D: `eps_m -> -eps_m`, every other
/// axis fixed.
pub trait Twist: Sized {
    fn twisted(&self) -> Self;
}

impl Twist for Weight {
    fn twisted(&self) -> Weight {
        let mut w = self.clone();
        if let Some(last) = w.eps_mut().last_mut() {
            *last = -*last;
        }
        w
    }
}

impl Twist for Root {
    fn twisted(&self) -> Root {
        Root::from_weight(self.weight().twisted())
    }
}

impl Twist for LaurentPolynomial {
    fn twisted(&self) -> LaurentPolynomial {
        if self.m() == 0 {
            return self.clone();
        }
        let last = self.rank() - 1;
        self.map_exponents(|e| {
            let mut e = e.clone();
            e.as_mut_slice()[last] *= -1;
            e
        })
    }
}

impl Twist for EpsDeltaSequence {
    fn twisted(&self) -> EpsDeltaSequence {
        EpsDeltaSequence::twisted(self)
    }
}

impl Twist for BorelData {
    fn twisted(&self) -> BorelData {
        BorelData::from_sequence(self.algebra(), &self.sequence().twisted()).expect("twisting keeps a sequence valid")
    }
}

/// Applies the automorphism; only defined for family D.
pub fn sigma_twist<T: Twist>(alg: &Algebra, x: &T) -> Result<T> {
    alg.require_d()?;
    Ok(x.twisted())
}
