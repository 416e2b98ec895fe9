//! Hook partitions and the highest weights they label.
//!
//! A partition `lambda` is an `(n|m)`-hook partition when
//! `lambda_{n+1} <= m`. Such partitions label the integral finite
//! dimensional irreducible modules through their standard highest weight
//! [`HookPartition::natural_weight`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{HalfInt, Weight};
use crate::rootdata::{walk_reflections, Algebra, BorelData, Marker, Twist};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped; the rest must be weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `lambda_i` for `i >= 1`; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are numbered from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// The parts from position `i` on (numbered from 1).
    pub fn tail(&self, i: usize) -> Partition {
        Partition { parts: self.parts.iter().skip(i - 1).copied().collect() }
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

/// Same as [`Partition::transpose`].
pub fn transpose(lam: &Partition) -> Partition {
    lam.transpose()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, such as `6,6,5,2,1,1`; the empty string and
    /// `0` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| Error::InvalidPartition(format!("cannot read {p:?} as a part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A partition together with the ranks `(n|m)` it is a hook partition for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookPartition {
    partition: Partition,
    n: usize,
    m: usize,
}

impl HookPartition {
    pub fn new(partition: Partition, n: usize, m: usize) -> Result<Self> {
        if partition.part(n + 1) as usize > m {
            return Err(Error::HookViolation { partition: format!("{partition}"), n, m });
        }
        Ok(HookPartition { partition, n, m })
    }

    pub fn for_algebra(partition: Partition, alg: &Algebra) -> Result<Self> {
        Self::new(partition, alg.n(), alg.m())
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn part(&self, i: usize) -> u32 {
        self.partition.part(i)
    }

    /// True when `lambda_{n+1} = m`, the case where the two standard
    /// highest weights differ.
    pub fn fills_hook(&self) -> bool {
        self.partition.part(self.n + 1) as usize == self.m
    }

    fn kappa(&self) -> Vec<u32> {
        let mut k = self.partition.tail(self.n + 1).transpose().parts;
        k.resize(self.m, 0);
        k
    }

    /// `(lambda^nat, lambda^nat_-)`: the standard highest weight
    /// `sum lambda_i delta_i + sum kappa_j eps_j`, where `kappa` is the
    /// conjugate of `(lambda_{n+1}, lambda_{n+2}, ...)`, and its copy with
    /// the last epsilon coefficient negated.
    pub fn natural_weight(&self) -> (Weight, Weight) {
        let delta: Vec<i64> = (1..=self.n).map(|i| self.partition.part(i) as i64).collect();
        let eps: Vec<i64> = self.kappa().iter().map(|&k| k as i64).collect();
        let w = Weight::from_ints(&delta, &eps);
        let minus = w.twisted();
        (w, minus)
    }

    pub fn natural(&self, minus: bool) -> Weight {
        let (w, wm) = self.natural_weight();
        if minus {
            wm
        } else {
            w
        }
    }

    /// Recovers the partition from a standard highest weight, if the
    /// weight is one.
    pub fn from_natural_weight(w: &Weight) -> Result<HookPartition> {
        let (n, m) = (w.n(), w.m());
        let bad = |why: &str| Error::InvalidPartition(format!("{w} is not a standard highest weight: {why}"));
        let ints = |cs: &[HalfInt]| -> Result<Vec<u32>> {
            cs.iter()
                .map(|c| match c.to_integer() {
                    Some(v) if v >= 0 => Ok(v as u32),
                    _ => Err(bad("coefficients must be nonnegative integers")),
                })
                .collect()
        };
        let head = ints(w.delta())?;
        let kappa = ints(w.eps())?;
        if head.windows(2).any(|p| p[0] < p[1]) || kappa.windows(2).any(|p| p[0] < p[1]) {
            return Err(bad("coefficients must decrease"));
        }
        let tail = Partition::new(kappa)?.transpose();
        if n > 0 && tail.part(1) > head[n - 1] {
            return Err(bad("the epsilon part does not fit under the delta part"));
        }
        let mut parts = head;
        parts.extend_from_slice(tail.parts());
        HookPartition::new(Partition::new(parts)?, n, m)
    }

    /// Every `(n|m)`-hook partition of size at most `max_size`.
    pub fn enumerate(n: usize, m: usize, max_size: u32) -> Vec<HookPartition> {
        (0..=max_size)
            .flat_map(Partition::all_of_size)
            .filter_map(|p| HookPartition::new(p, n, m).ok())
            .collect()
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// Same as [`HookPartition::natural_weight`].
pub fn natural_weight(lam: &HookPartition) -> (Weight, Weight) {
    lam.natural_weight()
}

/// Block Frobenius coordinates for the unsigned sequence of `b`: each
/// delta coefficient is `max(lambda_i - #(epsilons before it), 0)` and each
/// epsilon coefficient is `max(lambda'_j - #(deltas before it), 0)`.
pub fn frobenius_coordinates(lam: &HookPartition, b: &BorelData) -> (Vec<u32>, Vec<u32>) {
    let conj = lam.partition.transpose();
    let (mut p, mut q) = (Vec::new(), Vec::new());
    let (mut deltas, mut epss) = (0u32, 0u32);
    for &mk in b.sequence().markers() {
        match mk {
            Marker::Delta => {
                deltas += 1;
                p.push(lam.part(deltas as usize).saturating_sub(epss));
            }
            Marker::Eps => {
                epss += 1;
                q.push(conj.part(epss as usize).saturating_sub(deltas));
            }
        }
    }
    (p, q)
}

fn check_ranks(lam: &HookPartition, alg: &Algebra) -> Result<()> {
    if (lam.n, lam.m) != (alg.n(), alg.m()) {
        return Err(Error::RankMismatch {
            expected: format!("({}|{})", alg.n(), alg.m()),
            found: format!("({}|{})", lam.n, lam.m),
        });
    }
    Ok(())
}

/// The `b`-highest weight of the module with standard highest weight
/// `lambda^nat` (or `lambda^nat_-` when `minus`), read off block Frobenius
/// coordinates.
///
/// In family D the closed form only covers some signed cases; the others
/// return [`Error::UnsupportedCase`] and are handled by
/// [`highest_weight_via_reflections`].
pub fn frobenius_weight_of(lam: &HookPartition, b: &BorelData, minus: bool) -> Result<Weight> {
    let alg = b.algebra();
    check_ranks(lam, alg)?;
    if minus {
        alg.require_d()?;
    }
    let (p, q) = frobenius_coordinates(lam, b);
    let plain = Weight::from_ints(
        &p.iter().map(|&x| x as i64).collect::<Vec<_>>(),
        &q.iter().map(|&x| x as i64).collect::<Vec<_>>(),
    );
    if alg.is_b() {
        return Ok(plain);
    }
    let ends_delta = b.sequence().ends_with(Marker::Delta);
    match (ends_delta, b.sequence().is_negative(), minus) {
        (false, _, false) | (true, false, false) => Ok(plain),
        (false, _, true) | (true, true, true) => Ok(plain.twisted()),
        (true, true, false) => Err(Error::UnsupportedCase(format!(
            "no closed form for the plain module on the signed sequence {}",
            b.sequence()
        ))),
        (true, false, true) => Err(Error::UnsupportedCase(format!(
            "no closed form for the twisted module on the unsigned sequence {}",
            b.sequence()
        ))),
    }
}

/// The `b`-highest weight read off Frobenius coordinates: for a family D
/// sequence with a negative sign this is the weight of the twisted module
/// `L(lambda^nat_-)`, otherwise that of `L(lambda^nat)`.
pub fn frobenius_weight(lam: &HookPartition, b: &BorelData) -> Result<Weight> {
    frobenius_weight_of(lam, b, b.sequence().is_negative())
}

/// The `b`-highest weight of `L(lambda^nat)` (or `L(lambda^nat_-)`),
/// found by walking odd reflections from the standard Borel subalgebra.
pub fn highest_weight_via_reflections(lam: &HookPartition, b: &BorelData, minus: bool) -> Result<Weight> {
    let alg = b.algebra();
    check_ranks(lam, alg)?;
    if minus {
        alg.require_d()?;
    }
    let (_, w) = walk_reflections(alg, &lam.natural(minus), b.sequence())?;
    Ok(w)
}

/// Shorthand used in error messages.
pub(crate) fn describe(lam: &HookPartition, minus: bool) -> String {
    if minus {
        format!("{}-", lam.partition)
    } else {
        format!("{}", lam.partition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{EpsDeltaSequence, Family};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transposes() {
        assert_eq!(part("3,2,2,2,1").transpose(), part("5,4,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        let big = part("10,9,6,4,4,4,3,2,1,1,1");
        assert_eq!(big.transpose().transpose(), big);
    }

    #[test]
    fn hook_condition() {
        assert!(HookPartition::new(part("3,3,3,2,2,2,1"), 2, 3).is_ok());
        assert!(matches!(HookPartition::new(part("4,4,4"), 2, 3), Err(Error::HookViolation { .. })));
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn natural_weights() {
        let lam = HookPartition::new(part("3,3,3,2,2,2,1"), 2, 3).unwrap();
        let (w, wm) = lam.natural_weight();
        assert_eq!(w, Weight::from_ints(&[3, 3], &[5, 4, 1]));
        assert_eq!(wm, Weight::from_ints(&[3, 3], &[5, 4, -1]));
        assert!(lam.fills_hook());
        assert_eq!(HookPartition::from_natural_weight(&w).unwrap(), lam);
        let zero = HookPartition::new(Partition::empty(), 2, 3).unwrap();
        let (z, zm) = zero.natural_weight();
        assert!(z.is_zero() && zm.is_zero());
    }

    #[test]
    fn frobenius_example() {
        let alg = Algebra::new(Family::B, 4, 5).unwrap();
        let lam = HookPartition::for_algebra(part("10,9,6,4,4,4,3,2,1,1,1"), &alg).unwrap();
        let b = BorelData::from_sequence(&alg, &EpsDeltaSequence::parse("ddeeddeed", &alg).unwrap()).unwrap();
        let want = Weight::from_ints(&[10, 9, 4, 2, 0], &[9, 6, 3, 2]);
        assert_eq!(frobenius_weight(&lam, &b).unwrap(), want);
        assert_eq!(highest_weight_via_reflections(&lam, &b, false).unwrap(), want);
        let st = BorelData::standard(&alg);
        assert_eq!(frobenius_weight(&lam, &st).unwrap(), lam.natural(false));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
