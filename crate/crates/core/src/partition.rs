//! Integer partitions of `n` into at most `d` parts, stored as Young diagrams
//! of fixed width.
//!
//! A [`Partition`] always carries explicit trailing zeros, so its width is the
//! number of qudit levels `d` and every downstream formula can read `d` off
//! the value itself.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing `d`-tuple of nonnegative integers summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Validates `parts` and pads it with zeros to width `d`.
    pub fn new(parts: &[i64], d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroWidth);
        }
        for (index, &value) in parts.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing { index: index + 1 });
        }
        let nonzero = parts.iter().take_while(|&&v| v > 0).count();
        if nonzero > d {
            return Err(Error::TooManyParts { nonzero, d });
        }

        let mut padded = Vec::with_capacity(d);
        let mut n: u32 = 0;
        for &value in &parts[..nonzero] {
            let value = u32::try_from(value).map_err(|_| Error::Overflow)?;
            n = n.checked_add(value).ok_or(Error::Overflow)?;
            padded.push(value);
        }
        padded.resize(d, 0);
        Ok(Self { parts: padded, n })
    }

    /// Builds a partition from parts already known to be valid.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// The most balanced partition of `n` into `d` parts.
    pub fn balanced(n: u32, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroWidth);
        }
        let width = u32::try_from(d).map_err(|_| Error::Overflow)?;
        let (q, r) = (n / width, (n % width) as usize);
        let parts = (0..d).map(|i| if i < r { q + 1 } else { q }).collect();
        Ok(Self::from_valid(parts))
    }

    /// Row lengths, largest first, including trailing zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Width (number of qudit levels).
    pub fn d(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// The same diagram at a different width.
    pub fn with_width(&self, d: usize) -> Result<Self> {
        let parts: Vec<i64> = self.parts.iter().map(|&p| i64::from(p)).collect();
        Self::new(&parts[..self.rows()], d)
    }

    /// Tuple rendering with `;` separators, safe to embed in CSV.
    pub fn to_csv_tuple(&self) -> String {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        format!("({})", body.join(";"))
    }

    /// Compares two partitions of the same width in descending lexicographic
    /// order: the lexicographically larger partition sorts first.
    pub fn cmp_desc(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// A single box move: one box leaves row `lower` and joins row `raise`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub raise: usize,
    pub lower: usize,
}

/// Iterator over the partitions of `n` into at most `d` parts in descending
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32, d: usize) -> Self {
        if d == 0 {
            return Self { next: None };
        }
        let mut first = vec![0; d];
        first[0] = n;
        Self { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = advance(&current);
        Some(Partition::from_valid(current))
    }
}

/// Next partition in descending lexicographic order: lower the rightmost part
/// whose remainder still fits beneath it, then refill the tail greedily.
fn advance(parts: &[u32]) -> Option<Vec<u32>> {
    let d = parts.len();
    let mut tail: u64 = 0;
    for i in (0..d.saturating_sub(1)).rev() {
        tail += u64::from(parts[i + 1]);
        if parts[i] == 0 {
            continue;
        }
        let cap = parts[i] - 1;
        let slots = (d - 1 - i) as u64;
        let remaining = tail + 1;
        if remaining <= slots * u64::from(cap) {
            let mut next = parts[..=i].to_vec();
            next[i] = cap;
            let mut left = remaining;
            for _ in i + 1..d {
                let take = left.min(u64::from(cap));
                next.push(take as u32);
                left -= take;
            }
            return Some(next);
        }
    }
    None
}

/// All partitions of `n` into at most `d` parts, descending lexicographic.
pub fn enumerate_partitions(n: u32, d: usize) -> Vec<Partition> {
    Partitions::new(n, d).collect()
}

/// Counts partitions of `n` into at most `d` parts, stopping once the count
/// exceeds `cap`. Returns `None` in that case.
pub fn count_partitions_capped(n: u32, d: usize, cap: u64) -> Option<u64> {
    let mut count = 0u64;
    for _ in Partitions::new(n, d) {
        count += 1;
        if count > cap {
            return None;
        }
    }
    Some(count)
}

fn shifted(p: &Partition, index: usize, up: bool) -> Option<Vec<u32>> {
    let mut parts = p.parts.clone();
    if up {
        parts[index] = parts[index].checked_add(1)?;
    } else {
        parts[index] = parts[index].checked_sub(1)?;
    }
    Some(parts)
}

fn is_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Partitions reachable by moving one box between two rows, paired with the
/// move that produced them, in descending lexicographic order.
pub fn neighbor_moves_with_delta(p: &Partition) -> Vec<(Move, Partition)> {
    let d = p.d();
    let mut out = Vec::new();
    for raise in 0..d {
        for lower in 0..d {
            if raise == lower || p.parts[lower] == 0 {
                continue;
            }
            let mut parts = p.parts.clone();
            parts[raise] += 1;
            parts[lower] -= 1;
            if is_decreasing(&parts) {
                out.push((Move { raise, lower }, Partition { parts, n: p.n }));
            }
        }
    }
    out.sort_by(|a, b| a.1.cmp_desc(&b.1));
    out
}

/// Partitions of the same `n` and `d` one box move away from `p`.
pub fn neighbor_moves(p: &Partition) -> Vec<Partition> {
    neighbor_moves_with_delta(p)
        .into_iter()
        .map(|(_, q)| q)
        .collect()
}

/// Partitions of `n + 1` obtained by adding a box to one row of `p`.
pub fn successors(p: &Partition) -> Vec<Partition> {
    (0..p.d())
        .filter(|&i| i == 0 || p.parts[i - 1] > p.parts[i])
        .filter_map(|i| shifted(p, i, true))
        .map(Partition::from_valid)
        .collect()
}

/// Partitions of `n - 1` obtained by removing a box from one row of `p`.
pub fn predecessors(p: &Partition) -> Vec<Partition> {
    let d = p.d();
    (0..d)
        .filter(|&i| p.parts[i] > 0 && (i + 1 == d || p.parts[i] > p.parts[i + 1]))
        .filter_map(|i| shifted(p, i, false))
        .map(Partition::from_valid)
        .collect()
}
