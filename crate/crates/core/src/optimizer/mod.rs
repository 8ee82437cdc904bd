//! Partitions maximizing the multiplicity `f` for fixed `(d, n)`.
//!
//! Five routes are available:
//!
//! - [`maximize_brute`]: exhaustive, any `d`, bounded by a partition budget.
//! - [`maximize_qubit_closed`]: closed form for `d = 2`.
//! - [`maximize_qutrit_closed`]: closed form for `d = 3`, including ties.
//! - [`maximize_local`]: steepest ascent over single box moves; a heuristic
//!   for `d ≥ 4`.
//! - [`next_maximum`]: the `d = 3` optimum at `n + 1` from the one at `n`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

mod brute;
mod closed;
mod incremental;
mod local;
mod thresholds;

pub use brute::{maximize_brute, maximize_brute_with_budget, DEFAULT_BUDGET};
pub use closed::{maximize_qubit_closed, maximize_qutrit_closed, qubit_rstar};
pub use incremental::{maximum_chain, next_maximum, next_maximum_by_successors, previous_maximum};
pub use local::{
    check_local_optimality, condition_number, maximize_local, move_sign_by_ratio,
    LocalOptimality, MoveReport,
};
pub use thresholds::{qutrit_thresholds, NestedSurd, QutritThresholds, Surd};

/// How an [`Optimum`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    ClosedD2,
    ClosedD3,
    Local,
    Incremental,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::ClosedD2 => "closed_d2",
            Method::ClosedD3 => "closed_d3",
            Method::Local => "local",
            Method::Incremental => "incremental",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The maximum multiplicity for `(d, n)` and every partition attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub d: usize,
    pub n: u32,
    #[serde(serialize_with = "crate::report::serialize_decimal")]
    pub max_multiplicity: BigUint,
    /// All maximizers, descending lexicographic.
    pub argmax: Vec<Partition>,
    pub tie: bool,
    pub method: Method,
}

impl Optimum {
    pub(crate) fn new(
        d: usize,
        n: u32,
        max_multiplicity: BigUint,
        mut argmax: Vec<Partition>,
        method: Method,
    ) -> Self {
        assert!(!argmax.is_empty(), "an optimum needs at least one maximizer");
        argmax.sort_by(Partition::cmp_desc);
        argmax.dedup();
        let tie = argmax.len() > 1;
        Self { d, n, max_multiplicity, argmax, tie, method }
    }

    /// The lexicographically largest maximizer.
    pub fn primary(&self) -> &Partition {
        &self.argmax[0]
    }

    /// False only for local search at `d ≥ 4`, where no global guarantee
    /// exists.
    pub fn is_proven(&self) -> bool {
        !(self.method == Method::Local && self.d >= 4)
    }

    /// Same value and maximizers, ignoring how they were found.
    pub fn same_result(&self, other: &Self) -> bool {
        self.d == other.d
            && self.n == other.n
            && self.max_multiplicity == other.max_multiplicity
            && self.argmax == other.argmax
            && self.tie == other.tie
    }
}

/// Method requested by a caller; `Auto` picks the most exact one available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Brute,
    Closed,
    Local,
    Incremental,
}

/// Outcome of [`maximize`], with a warning when the answer is heuristic.
#[derive(Clone, Debug)]
pub struct Maximized {
    pub optimum: Optimum,
    pub warning: Option<String>,
}

/// Dispatches to one of the optimizers.
///
/// `Auto` uses the closed form for `d ∈ {2, 3}` where it applies, brute force
/// when the partition count fits `budget`, and local search otherwise.
pub fn maximize(d: usize, n: u32, choice: MethodChoice, budget: u64) -> Result<Maximized> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("d must be at least 2, got {d}")));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let exact = |optimum| Ok(Maximized { optimum, warning: None });
    match choice {
        MethodChoice::Brute => exact(maximize_brute_with_budget(d, n, budget)?),
        MethodChoice::Closed => match d {
            2 => exact(maximize_qubit_closed(n)?),
            3 => exact(maximize_qutrit_closed(n)?),
            _ => Err(Error::InvalidArgument(format!(
                "closed form exists only for d = 2 or 3, got d = {d}"
            ))),
        },
        MethodChoice::Local => {
            let optimum = maximize_local(d, n)?;
            let warning = (!optimum.is_proven())
                .then(|| format!("local search result for d = {d} is not guaranteed global"));
            Ok(Maximized { optimum, warning })
        }
        MethodChoice::Incremental => {
            if d != 3 {
                return Err(Error::UnsupportedWidth { expected: 3, got: d });
            }
            if n < 3 {
                return Err(Error::InvalidArgument("incremental chain starts at n = 3".into()));
            }
            let seed = maximize_qutrit_closed(3)?;
            let chain = maximum_chain(seed, n)?;
            exact(chain.into_iter().last().expect("chain is never empty"))
        }
        MethodChoice::Auto => match (d, n) {
            (2, n) if n >= 2 => exact(maximize_qubit_closed(n)?),
            (3, n) if n >= 3 => exact(maximize_qutrit_closed(n)?),
            _ => match maximize_brute_with_budget(d, n, budget) {
                Ok(optimum) => exact(optimum),
                Err(Error::BudgetExceeded { .. }) => {
                    let optimum = maximize_local(d, n)?;
                    let warning = format!(
                        "partition count exceeds budget {budget}; local search result is heuristic"
                    );
                    Ok(Maximized { optimum, warning: Some(warning) })
                }
                Err(e) => Err(e),
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_prefers_closed_forms() {
        assert_eq!(maximize(2, 10, MethodChoice::Auto, DEFAULT_BUDGET).unwrap().optimum.method, Method::ClosedD2);
        assert_eq!(maximize(3, 10, MethodChoice::Auto, DEFAULT_BUDGET).unwrap().optimum.method, Method::ClosedD3);
        assert_eq!(maximize(3, 2, MethodChoice::Auto, DEFAULT_BUDGET).unwrap().optimum.method, Method::Brute);
        assert_eq!(maximize(4, 8, MethodChoice::Auto, DEFAULT_BUDGET).unwrap().optimum.method, Method::Brute);
    }

    #[test]
    fn auto_falls_back_to_local_with_warning() {
        let m = maximize(4, 30, MethodChoice::Auto, 10).unwrap();
        assert_eq!(m.optimum.method, Method::Local);
        assert!(m.warning.is_some());
        let exact = maximize(4, 30, MethodChoice::Brute, DEFAULT_BUDGET).unwrap();
        assert_eq!(exact.optimum.max_multiplicity, m.optimum.max_multiplicity);
    }

    #[test]
    fn dispatcher_rejects_bad_input() {
        assert!(maximize(3, 0, MethodChoice::Auto, DEFAULT_BUDGET).is_err());
        assert!(maximize(1, 5, MethodChoice::Auto, DEFAULT_BUDGET).is_err());
        assert!(maximize(4, 5, MethodChoice::Closed, DEFAULT_BUDGET).is_err());
        assert_eq!(
            maximize(4, 5, MethodChoice::Incremental, DEFAULT_BUDGET).unwrap_err(),
            Error::UnsupportedWidth { expected: 3, got: 4 }
        );
    }

    #[test]
    fn incremental_choice_walks_the_chain() {
        let m = maximize(3, 50, MethodChoice::Incremental, DEFAULT_BUDGET).unwrap();
        assert_eq!(m.optimum.method, Method::Incremental);
        assert_eq!(m.optimum.primary().to_string(), "(21,16,13)");
    }
}
