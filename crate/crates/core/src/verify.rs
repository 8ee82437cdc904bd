//! Named verification sweeps, each producing a [`VerificationReport`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimizer::{
    check_local_optimality, maximize_brute_with_budget, maximize_qubit_closed,
    maximize_qutrit_closed, maximum_chain, move_sign_by_ratio, next_maximum_by_successors,
    previous_maximum, Optimum, DEFAULT_BUDGET,
};
use crate::partition::{enumerate_partitions, Partition};
use crate::rates::balanced_rate_series;
use crate::report::{Counterexample, VerificationReport};
use crate::schur_weyl::{
    decomposition, irrep_dimension, multiplicity, ssyt_count_brute_capped, syt_count_hook,
    Factorials,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    DimensionSum,
    HookOracle,
    SsytOracle,
    ClosedFormD2,
    ClosedFormD3,
    LocalOptimality,
    MbmChain,
    TieFamilies,
    RateBounds,
    QuadraticSignD2,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::DimensionSum,
        Check::HookOracle,
        Check::SsytOracle,
        Check::ClosedFormD2,
        Check::ClosedFormD3,
        Check::LocalOptimality,
        Check::MbmChain,
        Check::TieFamilies,
        Check::RateBounds,
        Check::QuadraticSignD2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DimensionSum => "dimension-sum",
            Check::HookOracle => "hook-oracle",
            Check::SsytOracle => "ssyt-oracle",
            Check::ClosedFormD2 => "closed-form-d2",
            Check::ClosedFormD3 => "closed-form-d3",
            Check::LocalOptimality => "local-optimality",
            Check::MbmChain => "mbm-chain",
            Check::TieFamilies => "tie-families",
            Check::RateBounds => "rate-bounds",
            Check::QuadraticSignD2 => "quadratic-sign-d2",
        }
    }

    fn default_nmax(self) -> u32 {
        match self {
            Check::DimensionSum => 10,
            Check::HookOracle | Check::SsytOracle => 12,
            Check::ClosedFormD2 => 1000,
            Check::ClosedFormD3 => 500,
            Check::LocalOptimality => 60,
            Check::MbmChain | Check::TieFamilies => 300,
            Check::RateBounds => 0,
            Check::QuadraticSignD2 => 200,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

/// Sweep parameters. Unset fields fall back to per-check defaults.
#[derive(Clone, Debug)]
pub struct VerifyParams {
    /// Restrict to one width; by default each check uses its own set.
    pub d: Option<usize>,
    pub nmax: Option<u32>,
    pub kmax: Option<u32>,
    pub budget: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self { d: None, nmax: None, kmax: None, budget: DEFAULT_BUDGET }
    }
}

impl VerifyParams {
    fn widths(&self, default: &[usize]) -> Vec<usize> {
        self.d.map_or_else(|| default.to_vec(), |d| vec![d])
    }
}

fn widths_label(ds: &[usize]) -> String {
    let list: Vec<String> = ds.iter().map(usize::to_string).collect();
    format!("d in {{{}}}", list.join(","))
}

fn cx(input: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) -> Counterexample {
    Counterexample {
        input: input.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn argmax_label(o: &Optimum) -> String {
    let body: Vec<String> = o.argmax.iter().map(Partition::to_string).collect();
    format!("f={} at {}", o.max_multiplicity, body.join(" "))
}

/// Runs one named check.
pub fn run_check(check: Check, params: &VerifyParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let nmax = params.nmax.unwrap_or_else(|| check.default_nmax());
    let (range, counterexamples) = match check {
        Check::DimensionSum => dimension_sum(params, nmax)?,
        Check::HookOracle => hook_oracle(params, nmax)?,
        Check::SsytOracle => ssyt_oracle(params, nmax)?,
        Check::ClosedFormD2 => closed_form_d2(params, nmax)?,
        Check::ClosedFormD3 => closed_form_d3(params, nmax)?,
        Check::LocalOptimality => local_optimality(params, nmax)?,
        Check::MbmChain => mbm_chain(params, nmax)?,
        Check::TieFamilies => tie_families(params, nmax)?,
        Check::RateBounds => rate_bounds(params)?,
        Check::QuadraticSignD2 => quadratic_sign_d2(nmax)?,
    };
    Ok(VerificationReport::new(check.name(), range, counterexamples, start.elapsed()))
}

type Sweep = Result<(String, Vec<Counterexample>)>;

fn dimension_sum(params: &VerifyParams, nmax: u32) -> Sweep {
    let ds = params.widths(&[2, 3, 4]);
    let mut bad = Vec::new();
    for &d in &ds {
        for n in 1..=nmax {
            let t = decomposition(d, n)?;
            let (sum, total) = (t.dimension_sum(), t.total_dimension());
            if sum != total {
                bad.push(cx(format!("d={d} n={n}"), total, sum));
            }
        }
    }
    Ok((format!("{}, 1 <= n <= {nmax}", widths_label(&ds)), bad))
}

fn all_partitions(ds: &[usize], nmax: u32) -> Vec<Partition> {
    ds.iter()
        .flat_map(|&d| (0..=nmax).flat_map(move |n| enumerate_partitions(n, d)))
        .collect()
}

fn hook_oracle(params: &VerifyParams, nmax: u32) -> Sweep {
    let ds = params.widths(&[1, 2, 3, 4]);
    let bad = all_partitions(&ds, nmax)
        .into_par_iter()
        .filter_map(|p| {
            let (f, hook) = (multiplicity(&p), syt_count_hook(&p));
            (f != hook).then(|| cx(&p, hook, f))
        })
        .collect();
    Ok((format!("{}, 0 <= n <= {nmax}", widths_label(&ds)), bad))
}

fn ssyt_oracle(params: &VerifyParams, nmax: u32) -> Sweep {
    let ds = params.widths(&[1, 2, 3, 4]);
    let bad = all_partitions(&ds, nmax)
        .into_par_iter()
        .map(|p| {
            let brute = ssyt_count_brute_capped(&p, p.d(), nmax)?;
            let g = irrep_dimension(&p);
            Ok((g != brute).then(|| cx(&p, brute, g)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((format!("{}, 0 <= n <= {nmax}", widths_label(&ds)), bad))
}

fn closed_form_d2(params: &VerifyParams, nmax: u32) -> Sweep {
    let bad = (2..=nmax)
        .into_par_iter()
        .map(|n| {
            let closed = maximize_qubit_closed(n)?;
            let brute = maximize_brute_with_budget(2, n, params.budget)?;
            let rstar_ok = brute.argmax.contains(closed.primary());
            Ok((!closed.same_result(&brute) || !rstar_ok)
                .then(|| cx(format!("d=2 n={n}"), argmax_label(&brute), argmax_label(&closed))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((format!("d = 2, 2 <= n <= {nmax}"), bad))
}

fn closed_form_d3(params: &VerifyParams, nmax: u32) -> Sweep {
    let bad = (3..=nmax)
        .into_par_iter()
        .map(|n| {
            let closed = maximize_qutrit_closed(n)?;
            let brute = maximize_brute_with_budget(3, n, params.budget)?;
            Ok((!closed.same_result(&brute))
                .then(|| cx(format!("d=3 n={n}"), argmax_label(&brute), argmax_label(&closed))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((format!("d = 3, 3 <= n <= {nmax}"), bad))
}

/// Every brute-force maximizer passes the local test; for `d = 3` each
/// numbered condition's sign also agrees with the ratio-form computation.
fn local_optimality(params: &VerifyParams, nmax: u32) -> Sweep {
    let ds = params.widths(&[2, 3, 4]);
    let cases: Vec<(usize, u32)> = ds.iter().flat_map(|&d| (1..=nmax).map(move |n| (d, n))).collect();
    let bad = cases
        .into_par_iter()
        .map(|(d, n)| {
            let brute = maximize_brute_with_budget(d, n, params.budget)?;
            let mut bad = Vec::new();
            for p in &brute.argmax {
                let report = check_local_optimality(p);
                if !report.optimal {
                    bad.push(cx(p, "locally optimal", "improving neighbor exists"));
                }
                for m in &report.moves {
                    let ratio = move_sign_by_ratio(p, m.delta);
                    if ratio != Some(m.sign) {
                        let label = m.condition.map_or_else(String::new, |c| format!(" condition ({c})"));
                        bad.push(cx(format!("{p} -> {}{label}", m.neighbor), format!("{:?}", m.sign), format!("{ratio:?}")));
                    }
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((format!("{}, 1 <= n <= {nmax}", widths_label(&ds)), bad))
}

/// Walks the incremental chain from `n = 3` and compares each step with
/// brute force, with the successor scan at ties, and with the backward step.
fn mbm_chain(params: &VerifyParams, nmax: u32) -> Sweep {
    if nmax < 3 {
        return Err(Error::InvalidArgument("mbm-chain needs nmax >= 3".into()));
    }
    let brute: Vec<Optimum> = (3..=nmax)
        .into_par_iter()
        .map(|n| maximize_brute_with_budget(3, n, params.budget))
        .collect::<Result<_>>()?;
    let chain = maximum_chain(brute[0].clone(), nmax)?;
    let mut bad = Vec::new();
    for (i, (got, want)) in chain.iter().zip(&brute).enumerate() {
        let n = got.n;
        if !got.same_result(want) {
            bad.push(cx(format!("chain n={n}"), argmax_label(want), argmax_label(got)));
        }
        if i > 0 && brute[i - 1].tie {
            let scanned = next_maximum_by_successors(&brute[i - 1])?;
            if !scanned.same_result(got) {
                bad.push(cx(format!("tie rule n={n}"), argmax_label(&scanned), argmax_label(got)));
            }
        }
        if i > 0 {
            let back = previous_maximum(want)?;
            if back != brute[i - 1].max_multiplicity {
                bad.push(cx(format!("backward step n={n}"), &brute[i - 1].max_multiplicity, back));
            }
        }
    }
    Ok((format!("d = 3, 3 <= n <= {nmax}"), bad))
}

/// `n` values in `[3, nmax]` at which the qutrit optimum is attained twice,
/// according to the closed-form `k` families.
pub fn expected_tie_ns(nmax: u32) -> BTreeSet<u32> {
    let nmax = u64::from(nmax);
    let mut out = BTreeSet::new();
    let families: [(u64, u64, u64); 6] = [
        (1, 1, 8),
        (1, 9, 16),
        (2, 5, 13),
        (2, 10, 17),
        (2, 0, 7),
        (2, 3, 11),
    ];
    for (residue, a, b) in families {
        for q in 0.. {
            let k = a + b * q + 6 * q * q;
            let n = 3 * k + residue;
            if n > nmax {
                break;
            }
            if n >= 3 {
                out.insert(n as u32);
            }
        }
    }
    out
}

fn tie_families(params: &VerifyParams, nmax: u32) -> Sweep {
    let observed: BTreeSet<u32> = (3..=nmax)
        .into_par_iter()
        .map(|n| maximize_brute_with_budget(3, n, params.budget))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|o| o.tie)
        .map(|o| o.n)
        .collect();
    let expected = expected_tie_ns(nmax);
    let mut bad = Vec::new();
    for n in expected.symmetric_difference(&observed) {
        let want = if expected.contains(n) { "tie" } else { "unique" };
        let got = if observed.contains(n) { "tie" } else { "unique" };
        bad.push(cx(format!("d=3 n={n}"), want, got));
    }
    Ok((format!("d = 3, 3 <= n <= {nmax}"), bad))
}

/// Balanced-partition rates: exactly 0 at `k = 1` (a single column has
/// `f = 1`), inside `(0, 1]` from `k = 2` on, and `1 − rate` strictly
/// decreasing from `k = 5`.
fn rate_bounds(params: &VerifyParams) -> Sweep {
    let ds = params.widths(&[2, 3]);
    let kmax = params.kmax.unwrap_or(50);
    let mut bad = Vec::new();
    for &d in &ds {
        let series = balanced_rate_series(d, kmax)?;
        for e in &series.entries {
            let in_range = if e.k == 1 { e.rate == 0.0 } else { e.rate > 0.0 && e.rate <= 1.0 };
            if !in_range {
                let want = if e.k == 1 { "0" } else { "in (0, 1]" };
                bad.push(cx(format!("d={d} k={}", e.k), want, e.rate));
            }
        }
        let window: Vec<_> = series.entries.iter().filter(|e| e.k >= 5).collect();
        for pair in window.windows(2) {
            if 1.0 - pair[1].rate >= 1.0 - pair[0].rate {
                bad.push(cx(
                    format!("d={d} k={}", pair[1].k),
                    format!("1-rate below {}", 1.0 - pair[0].rate),
                    1.0 - pair[1].rate,
                ));
            }
        }
    }
    Ok((format!("{}, 1 <= k <= {kmax}", widths_label(&ds)), bad))
}

/// Sign of `f(n−r, r) − f(n−r+1, r−1)` against the quadratic
/// `(n+1)(n+2) − 4(n+2)r + 4r²`.
fn quadratic_sign_d2(nmax: u32) -> Sweep {
    let mut bad = Vec::new();
    for n in 4..=nmax {
        let facts = Factorials::for_shape(n, 2);
        let f = |r: u32| facts.multiplicity(&Partition::from_valid(vec![n - r, r]));
        for r in 2..=n / 2 {
            let direct = f(r).cmp(&f(r - 1));
            let (n, r) = (i64::from(n), i64::from(r));
            let quadratic = ((n + 1) * (n + 2) - 4 * (n + 2) * r + 4 * r * r).cmp(&0);
            if direct != quadratic {
                bad.push(cx(format!("n={n} r={r}"), format!("{quadratic:?}"), format!("{direct:?}")));
            }
        }
    }
    Ok((format!("d = 2, n <= {nmax}, 2 <= r <= n/2"), bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(check: Check, nmax: u32) -> VerificationReport {
        let params = VerifyParams { nmax: Some(nmax), ..Default::default() };
        run_check(check, &params).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for (check, nmax) in [
            (Check::DimensionSum, 6),
            (Check::HookOracle, 7),
            (Check::SsytOracle, 6),
            (Check::ClosedFormD2, 60),
            (Check::ClosedFormD3, 60),
            (Check::LocalOptimality, 15),
            (Check::MbmChain, 40),
            (Check::TieFamilies, 50),
            (Check::QuadraticSignD2, 40),
        ] {
            let r = small(check, nmax);
            assert!(r.passed(), "{check}: {:?}", r.counterexamples);
        }
        let r = run_check(Check::RateBounds, &VerifyParams { kmax: Some(20), ..Default::default() }).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
    }

    #[test]
    fn expected_ties_start_at_four() {
        let ties: Vec<u32> = expected_tie_ns(50).into_iter().collect();
        assert_eq!(ties, [4, 11, 17, 28, 32, 41, 46]);
    }

    #[test]
    fn budget_is_forwarded() {
        let params = VerifyParams { nmax: Some(30), budget: 5, ..Default::default() };
        assert!(matches!(
            run_check(Check::ClosedFormD3, &params),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
