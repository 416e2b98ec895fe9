use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::Zero;

use super::{Algebra, EpsDeltaSequence, Family, Marker, Parity, Root, Symbol};
use crate::error::{Error, Result};
use crate::exactnum::{HalfInt, Weight};

/// The Borel subalgebra attached to an epsilon-delta sequence.
///
/// All such Borel subalgebras share the even part of the standard one; they
/// differ in which odd roots are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorelData {
    algebra: Algebra,
    sequence: EpsDeltaSequence,
    simple_roots: Vec<Root>,
    pos_even: Vec<Root>,
    pos_odd: Vec<Root>,
    rho: Weight,
    rho_even: Weight,
    rho_odd: Weight,
}

/// Same as [`BorelData::from_sequence`].
pub fn borel_from_sequence(alg: &Algebra, seq: &EpsDeltaSequence) -> Result<BorelData> {
    BorelData::from_sequence(alg, seq)
}

/// Same as [`BorelData::odd`].
pub fn b_odd(alg: &Algebra) -> BorelData {
    BorelData::odd(alg)
}

fn half_sum(alg: &Algebra, roots: &[Root]) -> Weight {
    let mut doubled = Weight::zero(alg.n(), alg.m());
    for r in roots {
        doubled = &doubled + r.weight();
    }
    Weight::new(
        doubled.delta().iter().map(|c| HalfInt::from_doubled(c.doubled() / 2)).collect(),
        doubled.eps().iter().map(|c| HalfInt::from_doubled(c.doubled() / 2)).collect(),
    )
}

impl BorelData {
    pub fn from_sequence(alg: &Algebra, seq: &EpsDeltaSequence) -> Result<Self> {
        seq.validate(alg)?;
        let (n, m) = (alg.n(), alg.m());
        let symbols = seq.symbols();
        let functional = Self::functional_of(&symbols, n, m);
        let value = |w: &Weight| -> i64 {
            w.delta()
                .iter()
                .chain(w.eps())
                .zip(&functional)
                .map(|(c, f)| c.doubled() * f)
                .sum()
        };
        let mut pos_even = Vec::new();
        let mut pos_odd = Vec::new();
        for r in alg.roots() {
            if value(r.weight()) > 0 {
                match r.parity() {
                    Parity::Even => pos_even.push(r),
                    Parity::Odd => pos_odd.push(r),
                }
            }
        }
        pos_even.sort();
        pos_odd.sort();

        let mut simple_roots: Vec<Root> = symbols
            .windows(2)
            .map(|p| Root::from_weight(&p[0].weight(n, m) - &p[1].weight(n, m)))
            .collect();
        let last = symbols[symbols.len() - 1];
        let terminal = match alg.family() {
            Family::B => last.weight(n, m),
            Family::D => match last.marker {
                Marker::Delta => last.weight(n, m).scale(2),
                Marker::Eps => &symbols[symbols.len() - 2].weight(n, m) + &last.weight(n, m),
            },
        };
        simple_roots.push(Root::from_weight(terminal));

        let rho_even = half_sum(alg, &pos_even);
        let rho_odd = half_sum(alg, &pos_odd);
        let rho = &rho_even - &rho_odd;
        let b = BorelData {
            algebra: *alg,
            sequence: seq.clone(),
            simple_roots,
            pos_even,
            pos_odd,
            rho,
            rho_even,
            rho_odd,
        };
        if b.simple_roots.iter().any(|r| !b.is_positive(r.weight())) {
            return Err(Error::InternalError(format!("simple roots of {seq} are not all positive")));
        }
        Ok(b)
    }

    /// Doubled-coordinate weights of a linear functional that is positive
    /// exactly on the positive roots: position `t` of `N` gets `N - t`.
    fn functional_of(symbols: &[Symbol], n: usize, _m: usize) -> Vec<i64> {
        let total = symbols.len();
        let mut f = alloc::vec![0i64; total];
        for (t, s) in symbols.iter().enumerate() {
            let v = (total - t) as i64;
            let axis = match s.marker {
                Marker::Delta => s.index,
                Marker::Eps => n + s.index,
            };
            f[axis] = if s.negated { -v } else { v };
        }
        f
    }

    pub fn standard(alg: &Algebra) -> Self {
        Self::from_sequence(alg, &EpsDeltaSequence::standard(alg)).expect("standard sequence is valid")
    }

    pub fn odd(alg: &Algebra) -> Self {
        Self::from_sequence(alg, &EpsDeltaSequence::odd(alg)).expect("odd sequence is valid")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn sequence(&self) -> &EpsDeltaSequence {
        &self.sequence
    }

    /// Simple roots in diagram order: consecutive differences left to
    /// right, then the terminal root.
    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn pos_even(&self) -> &[Root] {
        &self.pos_even
    }

    pub fn pos_odd(&self) -> &[Root] {
        &self.pos_odd
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.pos_even.iter().chain(&self.pos_odd)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho_even(&self) -> &Weight {
        &self.rho_even
    }

    pub fn rho_odd(&self) -> &Weight {
        &self.rho_odd
    }

    pub fn is_positive(&self, w: &Weight) -> bool {
        let f = Self::functional_of(&self.sequence.symbols(), self.algebra.n(), self.algebra.m());
        let v: i64 = w.delta().iter().chain(w.eps()).zip(&f).map(|(c, x)| c.doubled() * x).sum();
        v > 0
    }

    pub fn is_simple(&self, r: &Root) -> bool {
        self.simple_roots.contains(r)
    }

    /// Coordinates of `w` in the basis of simple roots.
    pub fn simple_coordinates(&self, w: &Weight) -> Vec<Ratio<i64>> {
        let r = self.algebra.rank();
        let row = |x: &Weight| -> Vec<Ratio<i64>> {
            x.delta().iter().chain(x.eps()).map(|c| Ratio::new(c.doubled(), 2)).collect()
        };
        // Columns are simple roots; the last column is the target.
        let cols: Vec<Vec<Ratio<i64>>> = self.simple_roots.iter().map(|s| row(s.weight())).collect();
        let target = row(w);
        let mut a: Vec<Vec<Ratio<i64>>> = (0..r)
            .map(|i| {
                let mut line: Vec<Ratio<i64>> = cols.iter().map(|c| c[i]).collect();
                line.push(target[i]);
                line
            })
            .collect();
        for col in 0..r {
            let pivot = (col..r).find(|&i| !a[i][col].is_zero()).expect("simple roots form a basis");
            a.swap(col, pivot);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            let pivot = a[col].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != col && !row[col].is_zero() {
                    let f = row[col];
                    for (x, v) in row[col..=r].iter_mut().zip(&pivot[col..=r]) {
                        *x -= f * *v;
                    }
                }
            }
        }
        a.iter().map(|line| line[r]).collect()
    }

    /// True when `w` is a nonnegative integer combination of simple roots.
    pub fn in_positive_cone(&self, w: &Weight) -> bool {
        self.simple_coordinates(w).iter().all(|c| c.is_integer() && *c >= Ratio::zero())
    }

    /// Positive roots whose simple-root support lies in `subset`.
    pub fn positive_roots_in_span(&self, subset: &[Root]) -> Vec<Root> {
        let inside: Vec<bool> = self.simple_roots.iter().map(|s| subset.contains(s)).collect();
        self.positive_roots()
            .filter(|r| {
                self.simple_coordinates(r.weight())
                    .iter()
                    .zip(&inside)
                    .all(|(c, &ok)| ok || c.is_zero())
            })
            .cloned()
            .collect()
    }

    /// Reflects at an isotropic simple root.
    ///
    /// Returns the new Borel subalgebra together with the new highest
    /// weight of the module whose highest weight for `self` is `gamma`:
    /// `gamma - alpha` when `(gamma, alpha) != 0`, else `gamma`.
    pub fn odd_reflection(&self, alpha: &Root, gamma: &Weight) -> Result<(BorelData, Weight)> {
        if !alpha.is_isotropic() || !self.is_simple(alpha) {
            return Err(Error::NotSimpleIsotropic(format!("{alpha}")));
        }
        let (n, m) = (self.algebra.n(), self.algebra.m());
        let mut symbols = self.sequence.symbols();
        let adjacent = (0..symbols.len() - 1)
            .find(|&p| &(&symbols[p].weight(n, m) - &symbols[p + 1].weight(n, m)) == alpha.weight());
        let p = match adjacent {
            Some(p) => p,
            None => {
                let last = symbols.len() - 1;
                let mut flipped = symbols[last];
                flipped.negated = !flipped.negated;
                if self.algebra.is_d()
                    && flipped.marker == Marker::Eps
                    && &(&symbols[last - 1].weight(n, m) - &flipped.weight(n, m)) == alpha.weight()
                {
                    symbols[last] = flipped;
                    last - 1
                } else {
                    return Err(Error::InternalError(format!(
                        "simple root {alpha} of {} is not a difference of neighbours",
                        self.sequence
                    )));
                }
            }
        };
        symbols.swap(p, p + 1);
        let seq = EpsDeltaSequence::from_symbols(&symbols);
        let next = BorelData::from_sequence(&self.algebra, &seq)?;
        let new_gamma = if gamma.pairing(alpha.weight())?.is_zero() { gamma.clone() } else { gamma - alpha.weight() };
        Ok((next, new_gamma))
    }
}

/// Isotropic roots to reflect at, in order, to go from the standard Borel
/// subalgebra to the one of `target`.
///
/// Produced by moving each entry of `target` into place from the left with
/// adjacent swaps; every swap exchanges a delta and an epsilon and is one
/// odd reflection.
pub fn reflection_chain(alg: &Algebra, target: &EpsDeltaSequence) -> Result<Vec<Root>> {
    target.validate(alg)?;
    let (n, m) = (alg.n(), alg.m());
    let mut current = EpsDeltaSequence::standard(alg).symbols();
    if target.is_negative() {
        current[n + m - 1].negated = true;
    }
    let goal = target.symbols();
    let mut chain = Vec::new();
    for (t, want) in goal.iter().enumerate() {
        let from = (t..current.len()).find(|&i| current[i] == *want).ok_or_else(|| {
            Error::InternalError(format!("cannot place entry {t} of {target}"))
        })?;
        for q in (t..from).rev() {
            let x = current[q];
            let y = current[q + 1];
            if x.marker == y.marker {
                return Err(Error::InternalError(format!("sorting {target} swapped equal markers")));
            }
            chain.push(Root::from_weight(&x.weight(n, m) - &y.weight(n, m)));
            current.swap(q, q + 1);
        }
    }
    Ok(chain)
}

/// Walks odd reflections from the standard Borel subalgebra to `target`,
/// carrying the highest weight `gamma`. Returns the final Borel subalgebra
/// and highest weight.
pub fn walk_reflections(alg: &Algebra, gamma: &Weight, target: &EpsDeltaSequence) -> Result<(BorelData, Weight)> {
    let mut b = BorelData::standard(alg);
    let mut g = gamma.clone();
    for alpha in reflection_chain(alg, target)? {
        let (nb, ng) = b.odd_reflection(&alpha, &g)?;
        b = nb;
        g = ng;
    }
    if b.sequence() != target {
        return Err(Error::InternalError(format!("reflection walk reached {} instead of {target}", b.sequence())));
    }
    Ok((b, g))
}
