//! Exact algebra for quadratic refinements, Steenrod operations and the
//! classification data of highly connected pi-manifolds.
//!
//! * [`steenrod`]: the mod-2 Steenrod algebra (Adem normal forms, products,
//!   the antipode, the orientability relation families) plus an independent
//!   polynomial-action oracle.
//! * [`groups`]: finite-type abelian groups, their `Z/2` and `Z/4` duals and
//!   the induced dual actions of automorphisms.
//! * [`homotopy`]: closed-form 2-local stable homotopy of Eilenberg-MacLane
//!   spaces and the `pi_n(SO(n))` table.
//! * [`forms`]: quadratic refinements over `Q/Z`, Gauss sums, the Arf
//!   invariant, isometry and Witt equivalence.
//! * [`classify`]: membership in and enumeration of the classification data.

pub mod classify;
pub mod cli;
pub mod error;
pub mod forms;
pub mod groups;
pub mod homotopy;
pub mod steenrod;

pub use error::{Error, Result};
pub use groups::AbelianGroup;

pub use steenrod::{SqMonomial, SteenrodElement};
