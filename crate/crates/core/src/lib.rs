//! Finite commutative rings, their modules, and exhaustive checks of
//! prime, classical prime, 2-absorbing, n-absorbing and classical
//! 2-absorbing submodules.

pub mod classify;
pub mod error;
pub mod export;
pub mod harness;
pub mod module;
pub mod ring;
pub mod spec;

pub use error::{Error, Result};
pub use module::{Component, Module, ModuleElement, ModuleHom, Submodule};
pub use ring::{enumerate_ideals, AbsorbingMode, Combine, Elem, Ideal, Ring, RingElement};
