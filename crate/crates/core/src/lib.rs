//! A reasoner for DatalogMTL with negation as failure over the integer
//! timeline, built on approximation fixpoint theory.

pub mod aft;
pub mod engines;
pub mod lang;
pub mod operators;
pub mod random;
pub mod semantics;
pub mod temporal;
