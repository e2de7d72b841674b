//! Orbits of `A = Aut(G) x F_p^*` on `H^2(G; F_p)` for finite abelian p-groups.
//!
//! The classifiable part of `H^2` is modelled as pairs `(h, w)` with `h` a
//! linear functional on `V = G/pG` (the abelian extensions) and `w` a
//! decomposable 2-form on `V` (the cup products). Each pair gets an
//! [`invariants::InvariantVector`] built from subgroup levels; equal vectors
//! mean equal orbits. [`aut_oracle`] recomputes the orbits from scratch by
//! breadth-first search over generators of `A`, and [`extension`] realizes
//! classes as explicit central extensions.

pub mod aut_oracle;
pub mod cli;
pub mod closed_form;
pub mod cohomology;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod fp;
pub mod group;
pub mod intmat;
pub mod invariants;
pub mod zpn;

pub use cohomology::{AutElement, DualElement, HabClass, WedgeClass};
pub use error::{Error, Result};
pub use group::{Element, GroupType, Subgroup};
pub use invariants::{classify, InvariantVector, LevelPair};
