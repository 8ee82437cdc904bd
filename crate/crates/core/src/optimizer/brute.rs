use num_bigint::BigUint;
use rayon::prelude::*;

use super::{Method, Optimum};
use crate::error::{Error, Result};
use crate::partition::{count_partitions_capped, enumerate_partitions, Partition};
use crate::schur_weyl::Factorials;

/// Largest partition count [`maximize_brute`] will evaluate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub fn maximize_brute(d: usize, n: u32) -> Result<Optimum> {
    maximize_brute_with_budget(d, n, DEFAULT_BUDGET)
}

/// Evaluates `f` on every partition of `n` into at most `d` parts.
///
/// Work is split across the rayon pool; the reduction keeps maximizers in
/// enumeration order, so the result does not depend on the worker count.
pub fn maximize_brute_with_budget(d: usize, n: u32, budget: u64) -> Result<Optimum> {
    if d == 0 {
        return Err(Error::ZeroWidth);
    }
    if count_partitions_capped(n, d, budget).is_none() {
        return Err(Error::BudgetExceeded { d, n, budget });
    }
    let facts = Factorials::for_shape(n, d);
    let (max, argmax) = enumerate_partitions(n, d)
        .into_par_iter()
        .map(|p| (facts.multiplicity(&p), vec![p]))
        .reduce_with(merge)
        .expect("at least one partition exists");
    Ok(Optimum::new(d, n, max, argmax, Method::Brute))
}

fn merge(
    (fa, mut pa): (BigUint, Vec<Partition>),
    (fb, pb): (BigUint, Vec<Partition>),
) -> (BigUint, Vec<Partition>) {
    match fa.cmp(&fb) {
        std::cmp::Ordering::Greater => (fa, pa),
        std::cmp::Ordering::Less => (fb, pb),
        std::cmp::Ordering::Equal => {
            pa.extend(pb);
            (fa, pa)
        }
    }
}
