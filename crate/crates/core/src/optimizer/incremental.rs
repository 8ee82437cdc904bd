use num_bigint::BigUint;

use super::{Method, Optimum};
use crate::error::{Error, Result};
use crate::partition::{predecessors, successors, Partition};
use crate::schur_weyl::Factorials;

fn require_qutrit(prev: &Optimum) -> Result<()> {
    if prev.d != 3 {
        return Err(Error::UnsupportedWidth { expected: 3, got: prev.d });
    }
    Ok(())
}

/// The qutrit optimum at `n + 1` from a verified optimum at `n`.
///
/// With two maximizers at `n`, their componentwise maximum is the unique
/// maximizer at `n + 1`. Otherwise `f` is evaluated on every partition one box
/// larger than a maximizer, and all partitions reaching the top value are
/// returned.
pub fn next_maximum(prev: &Optimum) -> Result<Optimum> {
    require_qutrit(prev)?;
    if prev.tie {
        let (a, b) = (prev.argmax[0].parts(), prev.argmax[1].parts());
        let joined: Vec<u32> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
        let p = Partition::from_valid(joined);
        let facts = Factorials::for_shape(prev.n + 1, 3);
        let value = facts.multiplicity(&p);
        return Ok(Optimum::new(3, prev.n + 1, value, vec![p], Method::Incremental));
    }
    next_maximum_by_successors(prev)
}

/// [`next_maximum`] without the tie shortcut: always scans successors of
/// every maximizer.
pub fn next_maximum_by_successors(prev: &Optimum) -> Result<Optimum> {
    require_qutrit(prev)?;
    let n = prev.n + 1;
    let facts = Factorials::for_shape(n, 3);
    let mut best = BigUint::default();
    let mut argmax: Vec<Partition> = Vec::new();
    for q in prev.argmax.iter().flat_map(successors) {
        let fq = facts.multiplicity(&q);
        if fq > best {
            best = fq;
            argmax = vec![q];
        } else if fq == best && !argmax.contains(&q) {
            argmax.push(q);
        }
    }
    Ok(Optimum::new(3, n, best, argmax, Method::Incremental))
}

/// Largest `f` over partitions one box smaller than a maximizer of `opt`.
/// For a genuine qutrit optimum at `n + 1` this is the optimum value at `n`.
pub fn previous_maximum(opt: &Optimum) -> Result<BigUint> {
    require_qutrit(opt)?;
    if opt.n == 0 {
        return Err(Error::InvalidArgument("no partitions below n = 0".into()));
    }
    let facts = Factorials::for_shape(opt.n - 1, 3);
    Ok(opt
        .argmax
        .iter()
        .flat_map(predecessors)
        .map(|q| facts.multiplicity(&q))
        .max()
        .expect("a nonempty diagram has a removable box"))
}

/// Optima for `seed.n, seed.n + 1, …, to_n`, each derived from the previous.
pub fn maximum_chain(seed: Optimum, to_n: u32) -> Result<Vec<Optimum>> {
    require_qutrit(&seed)?;
    if to_n < seed.n {
        return Err(Error::InvalidArgument(format!(
            "chain target n = {to_n} lies below the seed n = {}",
            seed.n
        )));
    }
    let mut chain = Vec::with_capacity((to_n - seed.n + 1) as usize);
    chain.push(seed);
    while chain.last().unwrap().n < to_n {
        let next = next_maximum(chain.last().unwrap())?;
        chain.push(next);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::{maximize_brute, maximize_qutrit_closed};

    fn strs(o: &Optimum) -> Vec<String> {
        o.argmax.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn tie_at_four_joins_to_five() {
        let at4 = maximize_brute(3, 4).unwrap();
        assert!(at4.tie);
        let at5 = next_maximum(&at4).unwrap();
        assert_eq!(strs(&at5), ["(3,1,1)"]);
        assert!(at5.same_result(&next_maximum_by_successors(&at4).unwrap()));
    }

    #[test]
    fn seven_to_eight() {
        let at7 = maximize_qutrit_closed(7).unwrap();
        assert_eq!(strs(&next_maximum(&at7).unwrap()), ["(4,3,1)"]);
    }

    #[test]
    fn rejects_other_widths() {
        let o = maximize_brute(2, 5).unwrap();
        assert_eq!(next_maximum(&o).unwrap_err(), Error::UnsupportedWidth { expected: 3, got: 2 });
        assert!(previous_maximum(&o).is_err());
        assert!(maximum_chain(o, 9).is_err());
    }

    #[test]
    fn short_chain_matches_brute() {
        let chain = maximum_chain(maximize_brute(3, 3).unwrap(), 60).unwrap();
        for o in &chain {
            assert!(o.same_result(&maximize_brute(3, o.n).unwrap()), "n={}", o.n);
        }
    }

    #[test]
    fn backward_step_recovers_previous_value() {
        for n in 4..80 {
            let here = maximize_brute(3, n).unwrap();
            let before = maximize_brute(3, n - 1).unwrap();
            assert_eq!(previous_maximum(&here).unwrap(), before.max_multiplicity, "n={n}");
        }
    }
}
