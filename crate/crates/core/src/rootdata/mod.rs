//! Root data: algebras, epsilon-delta sequences and their Borel
//! subalgebras, odd reflections, the Weyl group of the even part and the
//! diagram automorphism of family D.

mod algebra;
mod borel;
mod root;
mod sequence;
mod twist;
mod weyl;

pub use algebra::{Algebra, Family};
pub use borel::{b_odd, borel_from_sequence, reflection_chain, walk_reflections, BorelData};
pub use root::{Parity, Root};
pub use sequence::{EpsDeltaSequence, Marker, Symbol};
pub use twist::{sigma_twist, Twist};
pub use weyl::{apply_weyl, weyl_elements, weyl_order, WeylElement};
