use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::Zero;

use super::thresholds::QutritThresholds;
use super::{Method, Optimum};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur_weyl::Factorials;

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `f(n − r, r) = C(n, r) − C(n, r − 1)`.
fn ballot(n: u64, r: u64) -> BigUint {
    if r == 0 {
        return BigUint::from(1u32);
    }
    binomial(n, r) - binomial(n, r - 1)
}

/// `r* = ⌊((n + 2) − √(n + 2)) / 2⌋`, computed exactly as
/// `⌊(m − ⌈√m⌉) / 2⌋` with `m = n + 2`.
pub fn qubit_rstar(n: u64) -> u64 {
    let m = n + 2;
    let root = m.sqrt();
    let ceil_root = if root * root == m { root } else { root + 1 };
    (m - ceil_root) / 2
}

fn qubit(n: u64, r: u64) -> Partition {
    Partition::from_valid(vec![(n - r) as u32, r as u32])
}

/// Qubit optimum from the closed form for `r*`.
///
/// The partner `(n − r* + 1, r* − 1)` is reported as well when it attains the
/// same value, which happens exactly when `n + 2` is a perfect square.
pub fn maximize_qubit_closed(n: u32) -> Result<Optimum> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("qubit closed form needs n >= 2, got {n}")));
    }
    let n64 = u64::from(n);
    let r = qubit_rstar(n64);
    let best = ballot(n64, r);
    let mut argmax = vec![qubit(n64, r)];
    if r >= 1 && ballot(n64, r - 1) == best {
        argmax.push(qubit(n64, r - 1));
    }
    Ok(Optimum::new(2, n, best, argmax, Method::ClosedD2))
}

fn triple(a: i64, b: i64, c: i64) -> Result<Partition> {
    Partition::new(&[a, b, c], 3)
}

/// Qutrit optimum by residue class of `n` modulo 3.
///
/// Ties are taken from the exact integrality of `r₃` (for `n = 3k + 1`) and of
/// `r₂`, `r₄` (for `n = 3k + 2`), then confirmed by evaluating `f` on both
/// candidates.
pub fn maximize_qutrit_closed(n: u32) -> Result<Optimum> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("qutrit closed form needs n >= 3, got {n}")));
    }
    let k = i64::from(n / 3);
    let t = QutritThresholds::new(k as u64);
    let facts = Factorials::for_shape(n, 3);

    let (chosen, rival, tie) = match n % 3 {
        0 => {
            let c = t.ceil_r0;
            (vec![triple(k + c, k, k - c)?], None, false)
        }
        1 => {
            let c = t.ceil_r3;
            let main = triple(k + c + 1, k, k - c)?;
            let partner = triple(k + c + 2, k, k - c - 1);
            if t.r3_integral {
                (vec![main, partner?], None, true)
            } else {
                (vec![main], partner.ok(), false)
            }
        }
        _ => {
            let raised = triple(k + 1 + t.ceil_r3, k + 1, k - t.ceil_r3)?;
            let flat = triple(k + 2 + t.ceil_r1, k, k - t.ceil_r1)?;
            let tie = t.r2_integral || t.r4_integral;
            match (t.raised_middle_row(), t.flat_middle_row()) {
                (true, true) => (vec![raised, flat], None, tie),
                (true, false) => (vec![raised], Some(flat), tie),
                (false, true) => (vec![flat], Some(raised), tie),
                (false, false) => unreachable!("branch conditions cover every k"),
            }
        }
    };

    assert_eq!(
        chosen.len() > 1,
        tie,
        "tie flags disagree with the branch selection at n = {n}"
    );
    let best = facts.multiplicity(&chosen[0]);
    for p in &chosen[1..] {
        assert_eq!(facts.multiplicity(p), best, "tie members differ at n = {n}");
    }
    if let Some(r) = rival {
        assert!(facts.multiplicity(&r) < best, "rejected candidate is not smaller at n = {n}");
    }
    Ok(Optimum::new(3, n, best, chosen, Method::ClosedD3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(o: &Optimum) -> Vec<String> {
        o.argmax.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn rstar_table() {
        let expected = [1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6];
        for (n, r) in (3..=15).zip(expected) {
            assert_eq!(qubit_rstar(n), r, "n={n}");
        }
    }

    #[test]
    fn qubit_examples() {
        let o = maximize_qubit_closed(7).unwrap();
        assert_eq!(o.max_multiplicity, BigUint::from(14u32));
        assert_eq!(strs(&o), ["(5,2)", "(4,3)"]);
        assert!(o.tie);
        assert_eq!(o.primary().to_string(), "(5,2)");

        let o = maximize_qubit_closed(15).unwrap();
        assert_eq!(qubit_rstar(15), 6);
        assert_eq!(o.max_multiplicity, BigUint::from(2002u32));
        assert!(!o.tie);

        assert!(maximize_qubit_closed(1).is_err());
    }

    #[test]
    fn qubit_rstar_partition_is_the_closed_form_one() {
        // at a tie r* names the larger-r member, which is not the primary
        let o = maximize_qubit_closed(7).unwrap();
        assert!(o.argmax.contains(&qubit(7, qubit_rstar(7))));
    }

    #[test]
    fn qutrit_examples() {
        assert_eq!(strs(&maximize_qutrit_closed(49).unwrap()), ["(21,16,12)"]);
        assert_eq!(strs(&maximize_qutrit_closed(50).unwrap()), ["(21,16,13)"]);
        let o = maximize_qutrit_closed(4).unwrap();
        assert_eq!(strs(&o), ["(3,1,0)", "(2,1,1)"]);
        assert_eq!(o.max_multiplicity, BigUint::from(3u32));
        let o = maximize_qutrit_closed(6).unwrap();
        assert_eq!(strs(&o), ["(3,2,1)"]);
        assert_eq!(o.max_multiplicity, BigUint::from(16u32));
        assert_eq!(strs(&maximize_qutrit_closed(7).unwrap()), ["(4,2,1)"]);
        assert_eq!(strs(&maximize_qutrit_closed(8).unwrap()), ["(4,3,1)"]);
        assert_eq!(strs(&maximize_qutrit_closed(5).unwrap()), ["(3,1,1)"]);
        assert!(maximize_qutrit_closed(2).is_err());
    }

    #[test]
    fn qutrit_tie_in_3k_plus_2_branch() {
        // k = 5 is the first r₂-family member, n = 17
        let o = maximize_qutrit_closed(17).unwrap();
        assert!(o.tie);
        assert_eq!(o.argmax.len(), 2);
    }
}
