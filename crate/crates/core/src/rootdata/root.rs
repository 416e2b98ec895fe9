use alloc::format;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{HalfInt, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A root together with its parity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    weight: Weight,
    parity: Parity,
}

impl Root {
    /// Reads the parity off the weight: a root is odd exactly when its
    /// delta coefficients sum to an odd integer.
    pub fn from_weight(weight: Weight) -> Root {
        let s: i64 = weight.delta().iter().map(|c| c.doubled()).sum::<i64>() / 2;
        let parity = if s.rem_euclid(2) == 1 { Parity::Odd } else { Parity::Even };
        Root { weight, parity }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn into_weight(self) -> Weight {
        self.weight
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn is_isotropic(&self) -> bool {
        self.weight.pairing(&self.weight).map(|q| q.is_zero()).unwrap_or(false)
    }

    pub fn negated(&self) -> Root {
        Root { weight: -&self.weight, parity: self.parity }
    }

    /// Parses strings such as `d3-e1`, `2d1`, `-e2` (indices start at 1).
    pub fn parse(s: &str, n: usize, m: usize) -> Result<Root> {
        let bad = || Error::InvalidSequence(format!("cannot read {s:?} as a root"));
        let mut w = Weight::zero(n, m);
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        if bytes.is_empty() {
            return Err(bad());
        }
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                sign = if bytes[pos] == b'-' { -1 } else { 1 };
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef: i64 = if start == pos { 1 } else { s.trim()[start..pos].parse().map_err(|_| bad())? };
            let axis = *bytes.get(pos).ok_or_else(bad)?;
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let idx: usize = s.trim()[start..pos].parse().map_err(|_| bad())?;
            let c = HalfInt::from_int(sign * coef);
            match axis {
                b'd' if (1..=n).contains(&idx) => w.delta_mut()[idx - 1] += c,
                b'e' if (1..=m).contains(&idx) => w.eps_mut()[idx - 1] += c,
                _ => return Err(bad()),
            }
        }
        Ok(Root::from_weight(w))
    }
}

/// Prints compact forms such as `d3-e1`, `d2+e4`, `2d1`, `-e2`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let axes: alloc::vec::Vec<(char, usize, HalfInt)> = self
            .weight
            .delta()
            .iter()
            .enumerate()
            .map(|(i, c)| ('d', i, *c))
            .chain(self.weight.eps().iter().enumerate().map(|(j, c)| ('e', j, *c)))
            .filter(|(_, _, c)| !c.is_zero())
            .collect();
        let positives = axes.iter().filter(|a| a.2.signum() > 0);
        let negatives = axes.iter().filter(|a| a.2.signum() < 0);
        for &(axis, idx, c) in positives.chain(negatives) {
            if c.signum() < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let a = c.abs();
            if a != HalfInt::ONE {
                write!(f, "{a}")?;
            }
            write!(f, "{axis}{}", idx + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse() {
        for s in ["d3-e1", "d2+e4", "2d1", "-e2", "e1-d1", "-d1-d2", "d1"] {
            let r = Root::parse(s, 3, 4).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(Root::parse("d3-e1", 3, 4).unwrap().is_isotropic());
        assert!(Root::parse("d3-e1", 3, 4).unwrap().is_odd());
        assert!(Root::parse("2d1", 3, 4).unwrap().is_even());
        assert!(Root::parse("d1", 3, 4).unwrap().is_odd());
        assert!(!Root::parse("d1", 3, 4).unwrap().is_isotropic());
        assert!(Root::parse("d9", 3, 4).is_err());
        assert!(Root::parse("x1", 3, 4).is_err());
    }
}
