//! Error-correction rates `log_d f / n`: protected qudits per physical qudit.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur_weyl::multiplicity;

/// Logarithm of an arbitrary-precision integer.
///
/// Uses the bit length and the leading 64 bits, so `x` is never squeezed into
/// a float as a whole. Absolute error stays well below `1e-9` for any `x` that
/// fits in memory.
pub fn log_big(x: &BigUint, base: f64) -> Result<f64> {
    if !(base > 1.0) || !base.is_finite() {
        return Err(Error::InvalidArgument(format!("log base must exceed 1, got {base}")));
    }
    let bits = x.bits();
    if bits == 0 {
        return Err(Error::LogOfZero);
    }
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().expect("at most 64 bits remain");
    let log2 = shift as f64 + (top as f64).log2();
    Ok(log2 / base.log2())
}

/// `log_d f(p) / n` for the block labeled `p`.
pub fn code_rate(p: &Partition) -> Result<f64> {
    if p.n() == 0 {
        return Err(Error::InvalidArgument("rate is undefined for n = 0".into()));
    }
    let f = multiplicity(p);
    Ok(log_big(&f, p.d() as f64)? / f64::from(p.n()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateEntry {
    pub k: u32,
    pub n: u32,
    pub rate: f64,
    /// Bit length of `f(k, …, k)`.
    pub f_bits: u64,
}

/// Rates at the balanced partitions `(k, …, k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateSeries {
    pub d: usize,
    pub entries: Vec<RateEntry>,
}

pub fn balanced_rate_series(d: usize, k_max: u32) -> Result<RateSeries> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("rate series needs d >= 2, got {d}")));
    }
    if k_max < 1 {
        return Err(Error::InvalidArgument("rate series needs kmax >= 1".into()));
    }
    let width = u32::try_from(d).map_err(|_| Error::Overflow)?;
    k_max.checked_mul(width).ok_or(Error::Overflow)?;
    let entries = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let p = Partition::from_valid(vec![k; d]);
            let f = multiplicity(&p);
            let n = k * width;
            Ok(RateEntry {
                k,
                n,
                rate: log_big(&f, d as f64)? / f64::from(n),
                f_bits: f.bits(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RateSeries { d, entries })
}
