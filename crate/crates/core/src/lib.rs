//! Kashiwara crystals for symmetrizable Kac-Moody algebras: `B(inf)` in a
//! string model, starred operators, Saito reflections, highest-weight
//! crystals `B(lambda)`, and an exhaustive checker for the identity relating
//! Saito reflections to maximal lowering along a reduced word.

pub mod binf;
pub mod cartan;
pub mod error;
pub mod highest_weight;
pub mod string_model;
pub mod theorem;
pub mod verify;

pub use binf::{BInfElement, BInfinity};
pub use cartan::{CartanData, RootVector, Weight, Word};
pub use error::Error;
pub use highest_weight::{Enumeration, HighestWeightCrystal, LambdaElement};
pub use string_model::{ModelSequence, StringData};
pub use theorem::TheoremTrace;
