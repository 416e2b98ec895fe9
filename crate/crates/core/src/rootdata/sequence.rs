use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Algebra, Family};
use crate::error::{Error, Result};
use crate::exactnum::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    Delta,
    Eps,
}

/// One numbered entry of a sequence: `delta_{index+1}`, `eps_{index+1}`,
/// or `-eps_m` when `negated`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub marker: Marker,
    pub index: usize,
    pub negated: bool,
}

impl Symbol {
    pub fn weight(&self, n: usize, m: usize) -> Weight {
        let w = match self.marker {
            Marker::Delta => Weight::delta_unit(n, m, self.index),
            Marker::Eps => Weight::eps_unit(n, m, self.index),
        };
        if self.negated {
            -w
        } else {
            w
        }
    }
}

/// An ordering of `m` epsilons and `n` deltas, with the sign flag used in
/// family D.
///
/// A negative sign means the right-most epsilon carries a minus. It is only
/// allowed in family D for sequences ending with a delta; for sequences
/// ending with an epsilon both signs give the same Borel subalgebra and the
/// sign is normalized to plus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsDeltaSequence {
    markers: Vec<Marker>,
    negative: bool,
}

impl EpsDeltaSequence {
    pub fn new(markers: Vec<Marker>, negative: bool) -> Self {
        EpsDeltaSequence { markers, negative }
    }

    /// `delta^n eps^m`.
    pub fn standard(alg: &Algebra) -> Self {
        let mut markers = alloc::vec![Marker::Delta; alg.n()];
        markers.extend(core::iter::repeat_n(Marker::Eps, alg.m()));
        EpsDeltaSequence { markers, negative: false }
    }

    /// The sequence of the maximally isotropic diagram.
    pub fn odd(alg: &Algebra) -> Self {
        let (m, n) = (alg.m(), alg.n());
        let k = m.min(n);
        let pair = match alg.family() {
            Family::B => [Marker::Eps, Marker::Delta],
            Family::D => [Marker::Delta, Marker::Eps],
        };
        let mut markers = Vec::with_capacity(m + n);
        if m > n {
            markers.extend(core::iter::repeat_n(Marker::Eps, m - n));
        } else {
            markers.extend(core::iter::repeat_n(Marker::Delta, n - m));
        }
        for _ in 0..k {
            markers.extend(pair);
        }
        EpsDeltaSequence { markers, negative: false }
    }

    /// Every valid sequence for the algebra, signed ones included.
    pub fn all(alg: &Algebra) -> Vec<Self> {
        let total = alg.rank();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << total) {
            if mask.count_ones() as usize != alg.m() {
                continue;
            }
            let markers: Vec<Marker> =
                (0..total).map(|t| if mask >> (total - 1 - t) & 1 == 1 { Marker::Eps } else { Marker::Delta }).collect();
            let ends_delta = markers.last() == Some(&Marker::Delta);
            out.push(EpsDeltaSequence { markers: markers.clone(), negative: false });
            if alg.is_d() && ends_delta {
                out.push(EpsDeltaSequence { markers, negative: true });
            }
        }
        out.sort();
        out
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn ends_with(&self, marker: Marker) -> bool {
        self.markers.last() == Some(&marker)
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        let m = self.markers.iter().filter(|&&x| x == Marker::Eps).count();
        let n = self.markers.len() - m;
        if (m, n) != (alg.m(), alg.n()) {
            return Err(Error::InvalidSequence(format!(
                "{self} has {m} epsilons and {n} deltas, expected {} and {}",
                alg.m(),
                alg.n()
            )));
        }
        if self.negative {
            if alg.is_b() {
                return Err(Error::InvalidSequence(format!("{self}: family B sequences carry no sign")));
            }
            if !self.ends_with(Marker::Delta) {
                return Err(Error::InvalidSequence(format!(
                    "{self}: a sign is only attached to sequences ending with a delta"
                )));
            }
        }
        Ok(())
    }

    /// Numbered entries, left to right, with `eps_m` negated under a
    /// negative sign.
    pub fn symbols(&self) -> Vec<Symbol> {
        let m = self.markers.iter().filter(|&&x| x == Marker::Eps).count();
        let (mut di, mut ei) = (0, 0);
        self.markers
            .iter()
            .map(|&marker| match marker {
                Marker::Delta => {
                    di += 1;
                    Symbol { marker, index: di - 1, negated: false }
                }
                Marker::Eps => {
                    ei += 1;
                    Symbol { marker, index: ei - 1, negated: self.negative && ei == m }
                }
            })
            .collect()
    }

    /// Inverse of [`EpsDeltaSequence::symbols`], normalizing the sign of
    /// sequences that end with an epsilon.
    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let markers: Vec<Marker> = symbols.iter().map(|s| s.marker).collect();
        let negative = markers.last() == Some(&Marker::Delta) && symbols.iter().any(|s| s.negated);
        EpsDeltaSequence { markers, negative }
    }

    /// The image under the diagram automorphism.
    pub fn twisted(&self) -> Self {
        if self.ends_with(Marker::Delta) {
            EpsDeltaSequence { markers: self.markers.clone(), negative: !self.negative }
        } else {
            self.clone()
        }
    }

    /// Parses `ddeeddeed`, with an optional trailing `-` for a negative sign.
    pub fn parse(s: &str, alg: &Algebra) -> Result<Self> {
        let s = s.trim();
        let (body, negative) = match s.strip_suffix('-') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let markers = body
            .chars()
            .map(|c| match c {
                'd' | 'D' => Ok(Marker::Delta),
                'e' | 'E' => Ok(Marker::Eps),
                _ => Err(Error::InvalidSequence(format!("unexpected character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let seq = EpsDeltaSequence { markers, negative };
        seq.validate(alg)?;
        Ok(seq)
    }

    pub fn to_code(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for EpsDeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.markers {
            f.write_str(match m {
                Marker::Delta => "d",
                Marker::Eps => "e",
            })?;
        }
        if self.negative {
            f.write_str("-")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_print() {
        let b = Algebra::new(Family::B, 4, 5).unwrap();
        let s = EpsDeltaSequence::parse("ddeeddeed", &b).unwrap();
        assert_eq!(s.to_string(), "ddeeddeed");
        assert!(EpsDeltaSequence::parse("ddeeddeed-", &b).is_err());
        assert!(EpsDeltaSequence::parse("ddeedd", &b).is_err());
        let d = Algebra::new(Family::D, 2, 2).unwrap();
        assert!(EpsDeltaSequence::parse("eedd-", &d).unwrap().is_negative());
        assert!(EpsDeltaSequence::parse("dede-", &d).is_err());
    }

    #[test]
    fn odd_sequences_follow_the_rank_pattern() {
        let code = |f, m, n| EpsDeltaSequence::odd(&Algebra::new(f, m, n).unwrap()).to_string();
        assert_eq!(code(Family::B, 1, 1), "ed");
        assert_eq!(code(Family::B, 3, 1), "eeed");
        assert_eq!(code(Family::B, 1, 3), "dded");
        assert_eq!(code(Family::D, 2, 2), "dede");
        assert_eq!(code(Family::D, 3, 1), "eede");
        assert_eq!(code(Family::D, 2, 3), "ddede");
    }

    #[test]
    fn enumeration_counts() {
        let b = Algebra::new(Family::B, 2, 2).unwrap();
        assert_eq!(EpsDeltaSequence::all(&b).len(), 6);
        let d = Algebra::new(Family::D, 2, 2).unwrap();
        assert_eq!(EpsDeltaSequence::all(&d).len(), 9);
    }

    #[test]
    fn symbols_round_trip() {
        let d = Algebra::new(Family::D, 2, 2).unwrap();
        for s in EpsDeltaSequence::all(&d) {
            assert_eq!(EpsDeltaSequence::from_symbols(&s.symbols()), s);
            assert_eq!(s.twisted().twisted(), s);
        }
    }
}
