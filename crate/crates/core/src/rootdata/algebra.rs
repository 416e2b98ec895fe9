use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::Root;
use crate::error::{Error, Result};
use crate::exactnum::{HalfInt, Weight};

/// `B` is `osp(2m+1|2n)`, `D` is `osp(2m|2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::D => 'D',
        }
    }
}

/// An ortho-symplectic Lie superalgebra with `m` epsilon and `n` delta axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Algebra {
    family: Family,
    m: usize,
    n: usize,
}

impl Algebra {
    /// Both ranks must be positive, and family D needs `m >= 2`.
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        if family == Family::D && m < 2 {
            return Err(Error::InvalidAlgebra(format!(
                "D:{m}:{n}: family D needs m >= 2 for classification; use Algebra::root_system for root data only"
            )));
        }
        Self::root_system(family, m, n)
    }

    /// Like [`Algebra::new`] but also admits `osp(2|2n)`. Such an algebra
    /// supports root data, Weyl sums, denominators and Euler characteristic
    /// characters, but not the classification of tame modules.
    pub fn root_system(family: Family, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidAlgebra(format!("{}:{m}:{n}: ranks must be positive", family.letter())));
        }
        Ok(Algebra { family, m, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn is_b(&self) -> bool {
        self.family == Family::B
    }

    pub fn is_d(&self) -> bool {
        self.family == Family::D
    }

    pub fn supports_classification(&self) -> bool {
        !(self.family == Family::D && self.m < 2)
    }

    pub(crate) fn require_classification(&self) -> Result<()> {
        if self.supports_classification() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra(format!("{self}: family D needs m >= 2")))
        }
    }

    pub(crate) fn require_d(&self) -> Result<()> {
        if self.is_d() {
            Ok(())
        } else {
            Err(Error::FamilyMismatch { expected: 'D' })
        }
    }

    /// `osp(2m+1|2n)` or `osp(2m|2n)`.
    pub fn label(&self) -> String {
        let l = match self.family {
            Family::B => 2 * self.m + 1,
            Family::D => 2 * self.m,
        };
        format!("osp({l}|{})", 2 * self.n)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.n, self.m)
    }

    pub fn delta(&self, i: usize) -> Weight {
        Weight::delta_unit(self.n, self.m, i)
    }

    pub fn eps(&self, j: usize) -> Weight {
        Weight::eps_unit(self.n, self.m, j)
    }

    /// Every root, even ones first, each in a fixed order.
    pub fn roots(&self) -> Vec<Root> {
        let (n, m) = (self.n, self.m);
        let mut out = Vec::new();
        let signs = [1i64, -1];
        for i in 0..n {
            for j in i + 1..n {
                for s in signs {
                    for t in signs {
                        out.push(self.combo(&[(i, s)], &[], Some((j, t)), None));
                    }
                }
            }
            for s in signs {
                out.push(self.combo(&[(i, 2 * s)], &[], None, None));
            }
        }
        for k in 0..m {
            for l in k + 1..m {
                for s in signs {
                    for t in signs {
                        out.push(self.combo(&[], &[(k, s)], None, Some((l, t))));
                    }
                }
            }
            if self.family == Family::B {
                for s in signs {
                    out.push(self.combo(&[], &[(k, s)], None, None));
                }
            }
        }
        for p in 0..n {
            for q in 0..m {
                for s in signs {
                    for t in signs {
                        out.push(self.combo(&[(p, s)], &[(q, t)], None, None));
                    }
                }
            }
            if self.family == Family::B {
                for s in signs {
                    out.push(self.combo(&[(p, s)], &[], None, None));
                }
            }
        }
        out
    }

    fn combo(
        &self,
        delta: &[(usize, i64)],
        eps: &[(usize, i64)],
        extra_delta: Option<(usize, i64)>,
        extra_eps: Option<(usize, i64)>,
    ) -> Root {
        let mut w = self.zero_weight();
        for &(i, c) in delta.iter().chain(extra_delta.iter()) {
            w.delta_mut()[i] += HalfInt::from_int(c);
        }
        for &(j, c) in eps.iter().chain(extra_eps.iter()) {
            w.eps_mut()[j] += HalfInt::from_int(c);
        }
        Root::from_weight(w)
    }
}

/// Prints `B:m:n` or `D:m:n`.
impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family.letter(), self.m, self.n)
    }
}

impl FromStr for Algebra {
    type Err = Error;

    /// Parses `B:m:n` or `D:m:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAlgebra(format!("expected B:m:n or D:m:n, got {s:?}"));
        let mut parts = s.trim().split(':');
        let family = match parts.next().map(str::trim) {
            Some("B") | Some("b") => Family::B,
            Some("D") | Some("d") => Family::D,
            _ => return Err(bad()),
        };
        let m: usize = parts.next().and_then(|p| p.trim().parse().ok()).ok_or_else(bad)?;
        let n: usize = parts.next().and_then(|p| p.trim().parse().ok()).ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Algebra::new(family, m, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let b = Algebra::new(Family::B, 2, 3).unwrap();
        let (n, m) = (3, 2);
        let even = b.roots().iter().filter(|r| r.is_even()).count();
        let odd = b.roots().iter().filter(|r| r.is_odd()).count();
        assert_eq!(even, 2 * n * n + 2 * m * m);
        assert_eq!(odd, 4 * m * n + 2 * n);
        let d = Algebra::new(Family::D, 2, 3).unwrap();
        assert_eq!(d.roots().iter().filter(|r| r.is_even()).count(), 2 * n * n + 2 * m * (m - 1));
        assert_eq!(d.roots().iter().filter(|r| r.is_odd()).count(), 4 * m * n);
    }

    #[test]
    fn parsing() {
        let a: Algebra = "B:3:3".parse().unwrap();
        assert_eq!(a.label(), "osp(7|6)");
        assert_eq!(a.to_string(), "B:3:3");
        assert!("D:1:1".parse::<Algebra>().is_err());
        assert!(Algebra::root_system(Family::D, 1, 1).is_ok());
        assert!("C:1:1".parse::<Algebra>().is_err());
        assert!("B:0:1".parse::<Algebra>().is_err());
    }
}
