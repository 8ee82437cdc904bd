//! Block structure of the algebra generated by `U^{⊗n}`, `U ∈ SU(d)`.
//!
//! Each partition `p` of `n` into at most `d` parts labels one block
//! `I_f ⊗ M_g`: `f` is the multiplicity of the irrep (the dimension of the
//! noiseless subsystem it carries) and `g` is the irrep dimension.
//!
//! Both are evaluated exactly from their product formulas. The numerator is
//! formed in full and divided once; a nonzero remainder is a bug and panics.
//! [`syt_count_hook`] and [`ssyt_count_brute`] are independent oracles for `f`
//! and `g` respectively.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Default box cap for [`ssyt_count_brute`].
pub const SSYT_BRUTE_CAP: u32 = 12;

/// Memoized `0!, 1!, …, m!`.
#[derive(Clone, Debug)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(m: usize) -> Self {
        let mut table = Vec::with_capacity(m + 1);
        table.push(BigUint::one());
        for k in 1..=m {
            let next = &table[k - 1] * BigUint::from(k);
            table.push(next);
        }
        Self { table }
    }

    /// Factorials large enough for every partition of `n` at width `d`.
    pub fn for_shape(n: u32, d: usize) -> Self {
        Self::up_to(n as usize + d)
    }

    pub fn max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.table[k]
    }

    /// Multiplicity `f(p)` via the Frobenius formula.
    ///
    /// Panics if the memo does not reach `n + d - 1`.
    pub fn multiplicity(&self, p: &Partition) -> BigUint {
        let d = p.d();
        let parts = p.parts();
        let numerator = self.get(p.n() as usize) * vandermonde(parts);
        let denominator = product(
            parts
                .iter()
                .enumerate()
                .map(|(l, &pl)| self.get(pl as usize + d - 1 - l)),
        );
        exact_div(numerator, &denominator)
    }
}

fn product<'a>(factors: impl Iterator<Item = &'a BigUint>) -> BigUint {
    factors.fold(BigUint::one(), |acc, x| acc * x)
}

/// Multiplies small factors, batching them in `u64` until overflow.
fn product_small(factors: impl Iterator<Item = u64>) -> BigUint {
    let mut acc = BigUint::one();
    let mut chunk: u64 = 1;
    for x in factors {
        match chunk.checked_mul(x) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = x;
            }
        }
    }
    acc * chunk
}

/// `∏_{i<j} (p_i − i − p_j + j)`: the Vandermonde product of the shifted
/// row lengths `p_i + d − i`, which is strictly decreasing, so every factor
/// is positive.
fn vandermonde(parts: &[u32]) -> BigUint {
    let d = parts.len();
    product_small((0..d).flat_map(move |i| {
        (i + 1..d).map(move |j| u64::from(parts[i] - parts[j]) + (j - i) as u64)
    }))
}

fn exact_div(numerator: BigUint, denominator: &BigUint) -> BigUint {
    let (q, r) = numerator.div_rem(denominator);
    assert!(r.is_zero(), "product formula left a nonzero remainder");
    q
}

/// `f(p)`: how many times the irrep labeled `p` occurs.
pub fn multiplicity(p: &Partition) -> BigUint {
    Factorials::for_shape(p.n(), p.d()).multiplicity(p)
}

/// `g(p)`: dimension of the `SU(d)` irrep labeled `p`, by the Weyl formula.
pub fn irrep_dimension(p: &Partition) -> BigUint {
    let d = p.d();
    let numerator = vandermonde(p.parts());
    let denominator = product_small((1..d as u64).flat_map(|j| 1..=j));
    exact_div(numerator, &denominator)
}

fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width)
        .map(|c| parts.iter().take_while(|&&r| r > c).count() as u32)
        .collect()
}

/// Standard Young tableaux of shape `p`, by the hook-length formula.
pub fn syt_count_hook(p: &Partition) -> BigUint {
    let parts = p.parts();
    let cols = conjugate(parts);
    let hooks = parts.iter().enumerate().flat_map(|(r, &len)| {
        let cols = &cols;
        (0..len).map(move |c| {
            let arm = len - c - 1;
            let leg = cols[c as usize] - r as u32 - 1;
            u64::from(arm + leg + 1)
        })
    });
    let mut n_factorial = BigUint::one();
    for k in 2..=u64::from(p.n()) {
        n_factorial *= k;
    }
    exact_div(n_factorial, &product_small(hooks))
}

/// Semistandard tableaux of shape `p` with entries in `1..=d`, counted by
/// exhaustive filling. Refuses diagrams above [`SSYT_BRUTE_CAP`] boxes.
pub fn ssyt_count_brute(p: &Partition, d: usize) -> Result<BigUint> {
    ssyt_count_brute_capped(p, d, SSYT_BRUTE_CAP)
}

pub fn ssyt_count_brute_capped(p: &Partition, d: usize, cap: u32) -> Result<BigUint> {
    if p.n() > cap {
        return Err(Error::OracleCap { n: p.n(), cap });
    }
    let shape: Vec<usize> = p.parts()[..p.rows()].iter().map(|&r| r as usize).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    Ok(BigUint::from(fill(&shape, &mut grid, 0, 0, d)))
}

fn fill(shape: &[usize], grid: &mut [Vec<usize>], row: usize, col: usize, d: usize) -> u64 {
    if row == shape.len() {
        return 1;
    }
    if col == shape[row] {
        return fill(shape, grid, row + 1, 0, d);
    }
    let left = if col > 0 { grid[row][col - 1] } else { 1 };
    let above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
    let mut count = 0;
    for value in left.max(above)..=d {
        grid[row][col] = value;
        count += fill(shape, grid, row, col + 1, d);
    }
    count
}

/// One block `I_f ⊗ M_g` of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepBlock {
    pub partition: Partition,
    #[serde(serialize_with = "crate::report::serialize_decimal")]
    pub multiplicity: BigUint,
    #[serde(serialize_with = "crate::report::serialize_decimal")]
    pub dimension: BigUint,
}

/// Every block of the algebra for `d` levels and `n` qudits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTable {
    pub d: usize,
    pub n: u32,
    pub blocks: Vec<IrrepBlock>,
}

impl DecompositionTable {
    /// `Σ f·g` over all blocks.
    pub fn dimension_sum(&self) -> BigUint {
        self.blocks
            .iter()
            .map(|b| &b.multiplicity * &b.dimension)
            .sum()
    }

    /// `d^n`, the dimension of the full tensor space.
    pub fn total_dimension(&self) -> BigUint {
        BigUint::from(self.d).pow(self.n)
    }

    pub fn is_consistent(&self) -> bool {
        self.dimension_sum() == self.total_dimension()
    }
}

/// Builds the decomposition table, one block per partition in descending
/// lexicographic order.
pub fn decomposition(d: usize, n: u32) -> Result<DecompositionTable> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("decomposition needs d >= 2, got {d}")));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("decomposition needs n >= 1".into()));
    }
    let facts = Factorials::for_shape(n, d);
    let blocks = enumerate_partitions(n, d)
        .into_par_iter()
        .map(|partition| IrrepBlock {
            multiplicity: facts.multiplicity(&partition),
            dimension: irrep_dimension(&partition),
            partition,
        })
        .collect();
    Ok(DecompositionTable { d, n, blocks })
}
