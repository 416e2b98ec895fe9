use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use crate::error::Error;

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { doubled: 2 * value }
    }

    /// Twice the represented value.
    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub const fn is_zero(self) -> bool {
        self.doubled == 0
    }

    /// The value as an integer, if it is one.
    pub const fn to_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.doubled / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        HalfInt { doubled: self.doubled.abs() }
    }

    pub const fn signum(self) -> i64 {
        self.doubled.signum()
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.doubled -= rhs.doubled;
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled * rhs }
    }
}

impl Mul for HalfInt {
    type Output = Quarter;
    fn mul(self, rhs: HalfInt) -> Quarter {
        Quarter::from_quadrupled(self.doubled * rhs.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.doubled),
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3"`, `"-7"`, `"5/2"` and `"-1/2"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidPartition(alloc::format!("cannot read {s:?} as a half-integer"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt::from_doubled(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// An element of `(1/4)Z`: the value of the bilinear form on two weights.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quarter {
    quadrupled: i64,
}

impl Quarter {
    pub const ZERO: Quarter = Quarter { quadrupled: 0 };

    pub const fn from_quadrupled(quadrupled: i64) -> Self {
        Quarter { quadrupled }
    }

    pub const fn from_int(value: i64) -> Self {
        Quarter { quadrupled: 4 * value }
    }

    pub const fn quadrupled(self) -> i64 {
        self.quadrupled
    }

    pub const fn is_zero(self) -> bool {
        self.quadrupled == 0
    }

    pub const fn signum(self) -> i64 {
        self.quadrupled.signum()
    }
}

impl Add for Quarter {
    type Output = Quarter;
    fn add(self, rhs: Quarter) -> Quarter {
        Quarter { quadrupled: self.quadrupled + rhs.quadrupled }
    }
}

impl Sub for Quarter {
    type Output = Quarter;
    fn sub(self, rhs: Quarter) -> Quarter {
        Quarter { quadrupled: self.quadrupled - rhs.quadrupled }
    }
}

impl Neg for Quarter {
    type Output = Quarter;
    fn neg(self) -> Quarter {
        Quarter { quadrupled: -self.quadrupled }
    }
}

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = num_integer::gcd(self.quadrupled, 4).max(1);
        let (num, den) = (self.quadrupled / g, 4 / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse_round_trip() {
        for d in -9..=9 {
            let h = HalfInt::from_doubled(d);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
        assert_eq!(HalfInt::from_doubled(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::from_int(4).to_string(), "4");
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn products_land_in_quarters() {
        let q = HalfInt::from_doubled(11) * HalfInt::ONE;
        assert_eq!(q, Quarter::from_quadrupled(22));
        assert_eq!(q.to_string(), "11/2");
        assert_eq!((HalfInt::HALF * HalfInt::HALF).to_string(), "1/4");
        assert_eq!((-q).signum(), -1);
    }
}
