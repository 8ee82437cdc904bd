use num_bigint::BigUint;
use num_integer::binomial;
use qudit_ns::optimizer::{maximize_brute, qubit_rstar};
use qudit_ns::partition::successors;
use qudit_ns::schur_weyl::multiplicity;
use qudit_ns::Partition;

#[test]
fn square_two_row_shapes_count_catalan_numbers() {
    for k in 0..=200u32 {
        let p = Partition::new(&[i64::from(k), i64::from(k)], 2).unwrap();
        let catalan = binomial(BigUint::from(2 * k), BigUint::from(k)) / BigUint::from(k + 1);
        assert_eq!(multiplicity(&p), catalan, "k={k}");
    }
}

#[test]
fn two_row_shapes_are_ballot_differences() {
    for n in 1..=120u32 {
        for r in 0..=n / 2 {
            let p = Partition::new(&[i64::from(n - r), i64::from(r)], 2).unwrap();
            let big = |k: u32| binomial(BigUint::from(n), BigUint::from(k));
            let want = if r == 0 { big(0) } else { big(r) - big(r - 1) };
            assert_eq!(multiplicity(&p), want, "n={n} r={r}");
        }
    }
}

/// The qubit maximizer at `n + 1` grows out of the maximizer at `n` by one
/// box, and `r*` (the largest second row among maximizers) advances by at
/// most one.
#[test]
fn qubit_maximum_begets_maximum() {
    let mut prev = maximize_brute(2, 1).unwrap();
    for n in 2..=1000u32 {
        let next = maximize_brute(2, n).unwrap();
        for q in &next.argmax {
            let reachable = prev.argmax.iter().any(|p| successors(p).contains(q));
            assert!(reachable, "n={n}: {q} does not grow from {:?}", prev.argmax);
        }
        let r_prev = u64::from(prev.argmax.last().unwrap().parts()[1]);
        let r_next = u64::from(next.argmax.last().unwrap().parts()[1]);
        assert!(r_next == r_prev || r_next == r_prev + 1, "n={n}");
        assert_eq!(r_next, qubit_rstar(u64::from(n)), "n={n}");
        prev = next;
    }
}
