//! Exact noiseless-subsystem dimensions for collective rotation channels
//! `ρ ↦ U^{⊗n} ρ U^{⊗n†}`, `U ∈ SU(d)`.
//!
//! The algebra generated by these channels splits into blocks `I_f ⊗ M_g`,
//! one per partition `p` of `n` into at most `d` parts. The multiplicity
//! `f(p)` is the dimension of the noiseless subsystem carried by that block.
//! This crate computes `f` and `g` exactly ([`schur_weyl`]), finds the
//! partitions maximizing `f` ([`optimizer`]), and reports the resulting rates
//! `log_d f / n` ([`rates`]).
//!
//! ```
//! use qudit_ns::optimizer::maximize_qutrit_closed;
//!
//! let best = maximize_qutrit_closed(49).unwrap();
//! assert_eq!(best.primary().to_string(), "(21,16,12)");
//! ```

pub mod cli;
pub mod error;
pub mod optimizer;
pub mod partition;
pub mod rates;
pub mod report;
pub mod schur_weyl;
pub mod verify;

pub use error::{Error, Result};
pub use optimizer::{Method, Optimum};
pub use partition::Partition;
