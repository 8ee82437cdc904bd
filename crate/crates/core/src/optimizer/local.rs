use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};

use super::{Method, Optimum};
use crate::error::{Error, Result};
use crate::partition::{neighbor_moves_with_delta, Move, Partition};
use crate::schur_weyl::Factorials;

/// One neighbor of a candidate and how `f` compares across the move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveReport {
    pub delta: Move,
    pub neighbor: Partition,
    /// Numbered condition `(1)`–`(6)` for `d = 3`, `None` otherwise.
    pub condition: Option<u8>,
    /// Sign of `f(p) − f(neighbor)`.
    pub sign: Ordering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOptimality {
    pub partition: Partition,
    pub optimal: bool,
    pub moves: Vec<MoveReport>,
}

/// Qutrit condition number for a move, following the order
/// `(p₁+1, p₂−1, p₃)`, `(p₁, p₂−1, p₃+1)`, `(p₁−1, p₂+1, p₃)`,
/// `(p₁, p₂+1, p₃−1)`, `(p₁+1, p₂, p₃−1)`, `(p₁−1, p₂, p₃+1)`.
pub fn condition_number(delta: Move) -> Option<u8> {
    match (delta.raise, delta.lower) {
        (0, 1) => Some(1),
        (2, 1) => Some(2),
        (1, 0) => Some(3),
        (1, 2) => Some(4),
        (0, 2) => Some(5),
        (2, 0) => Some(6),
        _ => None,
    }
}

/// Checks `f(p) ≥ f(q)` for every single box move `q` of `p`, comparing
/// exact multiplicities.
pub fn check_local_optimality(p: &Partition) -> LocalOptimality {
    let facts = Factorials::for_shape(p.n(), p.d());
    check_with(&facts, p)
}

fn check_with(facts: &Factorials, p: &Partition) -> LocalOptimality {
    let here = facts.multiplicity(p);
    let d = p.d();
    let moves: Vec<MoveReport> = neighbor_moves_with_delta(p)
        .into_iter()
        .map(|(delta, neighbor)| MoveReport {
            sign: here.cmp(&facts.multiplicity(&neighbor)),
            condition: if d == 3 { condition_number(delta) } else { None },
            delta,
            neighbor,
        })
        .collect();
    let optimal = moves.iter().all(|m| m.sign != Ordering::Less);
    LocalOptimality { partition: p.clone(), optimal, moves }
}

/// Sign of `f(p) − f(q)` for the move `q = p + e_raise − e_lower`, without
/// evaluating either multiplicity.
///
/// With shifted rows `ℓ_a = p_a + d − 1 − a`, the Frobenius formula gives
/// `f(q)/f(p) = Δ(ℓ′)/Δ(ℓ) · ℓ_lower/(ℓ_raise + 1)`, where `Δ` is the
/// Vandermonde product. Both `Δ` are positive for valid partitions, so the
/// sign is that of `Δ(ℓ)(ℓ_raise + 1) − Δ(ℓ′)ℓ_lower`.
///
/// Returns `None` when the move leaves the set of partitions.
pub fn move_sign_by_ratio(p: &Partition, delta: Move) -> Option<Ordering> {
    let d = p.d();
    let shifted: Vec<i64> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(a, &x)| i64::from(x) + (d - 1 - a) as i64)
        .collect();
    let mut moved = shifted.clone();
    moved[delta.raise] += 1;
    moved[delta.lower] -= 1;
    let still_valid = moved.windows(2).all(|w| w[0] > w[1]) && *moved.last()? >= 0;
    if !still_valid {
        return None;
    }
    let lhs = vandermonde(&shifted) * BigInt::from(shifted[delta.raise] + 1);
    let rhs = vandermonde(&moved) * BigInt::from(shifted[delta.lower]);
    Some(lhs.cmp(&rhs))
}

fn vandermonde(rows: &[i64]) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            acc *= rows[i] - rows[j];
        }
    }
    acc
}

/// Steepest ascent on `f` over single box moves, from the most balanced
/// partition of `n`.
///
/// Among neighbors with equal `f` the lexicographically largest wins. The
/// climb stops when no neighbor is strictly better; equal-valued neighbors
/// that are themselves locally optimal are reported as tied maximizers.
pub fn maximize_local(d: usize, n: u32) -> Result<Optimum> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("local search needs d >= 2, got {d}")));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("local search needs n >= 1".into()));
    }
    let facts = Factorials::for_shape(n, d);
    let mut current = Partition::balanced(n, d)?;
    let mut value = facts.multiplicity(&current);
    loop {
        // neighbors arrive in descending lexicographic order, so a strict
        // comparison keeps the largest among equals
        let mut best: Option<(Partition, BigUint)> = None;
        for (_, q) in neighbor_moves_with_delta(&current) {
            let fq = facts.multiplicity(&q);
            let bar = best.as_ref().map_or(&value, |(_, f)| f);
            if fq > *bar {
                best = Some((q, fq));
            }
        }
        match best {
            Some((q, fq)) => {
                current = q;
                value = fq;
            }
            None => break,
        }
    }

    let report = check_with(&facts, &current);
    debug_assert!(report.optimal);
    let mut argmax = vec![current];
    for m in report.moves {
        if m.sign == Ordering::Equal && check_with(&facts, &m.neighbor).optimal {
            argmax.push(m.neighbor);
        }
    }
    Ok(Optimum::new(d, n, value, argmax, Method::Local))
}
