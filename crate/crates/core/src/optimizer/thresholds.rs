//! Exact integer handling of the radical thresholds that locate the qutrit
//! optimum.
//!
//! Every threshold has the form `(a + √s) / b` or `(a + √(m + √S)) / b` with
//! integer `a, s, m, S` and `b > 0`. Ceilings and integer comparisons are
//! decided by squaring, never by floating point: the integral cases are
//! exactly the ones where two partitions tie, so rounding there would change
//! the answer.

use num_integer::Roots;

fn floor_sqrt(s: i128) -> i128 {
    assert!(s >= 0, "negative radicand");
    s.sqrt()
}

fn ceil_sqrt(s: i128) -> i128 {
    let r = floor_sqrt(s);
    if r * r == s {
        r
    } else {
        r + 1
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// `(offset + √radicand) / denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub offset: i128,
    pub radicand: i128,
    pub denom: i128,
}

impl Surd {
    pub fn new(offset: i128, radicand: i128, denom: i128) -> Self {
        assert!(denom > 0 && radicand >= 0);
        Self { offset, radicand, denom }
    }

    /// Smallest integer `c` with `c ≥ self`.
    ///
    /// `c ≥ (a + √s)/b` iff `bc − a ≥ √s` iff `bc − a ≥ ⌈√s⌉`, as `bc − a` is
    /// an integer.
    pub fn ceil(&self) -> i128 {
        ceil_div(self.offset + ceil_sqrt(self.radicand), self.denom)
    }

    /// `c ≤ self`.
    pub fn at_least(&self, c: i128) -> bool {
        self.denom * c - self.offset <= floor_sqrt(self.radicand)
    }

    /// `c ≥ self`.
    pub fn at_most(&self, c: i128) -> bool {
        self.denom * c - self.offset >= ceil_sqrt(self.radicand)
    }

    pub fn is_integer(&self) -> bool {
        let root = floor_sqrt(self.radicand);
        root * root == self.radicand && (self.offset + root).rem_euclid(self.denom) == 0
    }

    pub fn to_f64(&self) -> f64 {
        (self.offset as f64 + (self.radicand as f64).sqrt()) / self.denom as f64
    }
}

/// `(offset + √(outer + √inner)) / denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NestedSurd {
    pub offset: i128,
    pub outer: i128,
    pub inner: i128,
    pub denom: i128,
}

impl NestedSurd {
    pub fn new(offset: i128, outer: i128, inner: i128, denom: i128) -> Self {
        assert!(denom > 0 && outer >= 0 && inner >= 0);
        Self { offset, outer, inner, denom }
    }

    /// Compares `bc − a` against `√(m + √S)`.
    ///
    /// Returns the sign of `(bc − a) − √(m + √S)`. Both squarings are only
    /// applied to nonnegative sides, so each preserves the direction.
    fn compare(&self, c: i128) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let u = self.denom * c - self.offset;
        if u < 0 {
            return Less;
        }
        // u ≥ 0: u vs √(m + √S)  ⇔  u² − m vs √S
        let v = u * u - self.outer;
        if v < 0 {
            return Less;
        }
        // v ≥ 0: v vs √S  ⇔  v² vs S
        (v * v).cmp(&self.inner)
    }

    pub fn ceil(&self) -> i128 {
        let estimate = floor_sqrt(self.outer + floor_sqrt(self.inner));
        let mut c = ceil_div(self.offset + estimate, self.denom) - 1;
        while self.compare(c).is_lt() {
            c += 1;
        }
        while self.compare(c - 1).is_ge() {
            c -= 1;
        }
        c
    }

    pub fn is_integer(&self) -> bool {
        self.compare(self.ceil()).is_eq()
    }

    pub fn to_f64(&self) -> f64 {
        let inner = (self.inner as f64).sqrt();
        (self.offset as f64 + (self.outer as f64 + inner).sqrt()) / self.denom as f64
    }
}

/// The radicals governing the qutrit optimum at `n ∈ {3k, 3k+1, 3k+2}` and
/// the `3k + 3` lookahead `r̂₀`, together with their exact ceilings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QutritThresholds {
    pub k: u64,
    pub r0: NestedSurd,
    pub r0_hat: NestedSurd,
    pub r1: Surd,
    pub r2: Surd,
    pub r3: Surd,
    pub r4: Surd,
    pub ceil_r0: i64,
    pub ceil_r0_hat: i64,
    pub ceil_r1: i64,
    pub ceil_r2: i64,
    pub ceil_r3: i64,
    pub ceil_r4: i64,
    pub r0_integral: bool,
    pub r2_integral: bool,
    pub r3_integral: bool,
    pub r4_integral: bool,
}

impl QutritThresholds {
    pub fn new(k: u64) -> Self {
        let k = i128::from(k);
        let r0 = NestedSurd::new(-3, 3 + 3 * k, 12 + 20 * k + 9 * k * k, 2);
        let r0_hat = NestedSurd::new(-3, 6 + 3 * k, 41 + 38 * k + 9 * k * k, 2);
        let r1 = Surd::new(-10, 60 + 24 * k, 4);
        let r2 = Surd::new(-9, 49 + 24 * k, 4);
        let r3 = Surd::new(-8, 40 + 24 * k, 4);
        let r4 = Surd::new(-7, 49 + 24 * k, 4);
        let narrow = |c: i128| i64::try_from(c).expect("threshold ceiling fits in i64");
        Self {
            k: k as u64,
            ceil_r0: narrow(r0.ceil()),
            ceil_r0_hat: narrow(r0_hat.ceil()),
            ceil_r1: narrow(r1.ceil()),
            ceil_r2: narrow(r2.ceil()),
            ceil_r3: narrow(r3.ceil()),
            ceil_r4: narrow(r4.ceil()),
            r0_integral: r0.is_integer(),
            r2_integral: r2.is_integer(),
            r3_integral: r3.is_integer(),
            r4_integral: r4.is_integer(),
            r0,
            r0_hat,
            r1,
            r2,
            r3,
            r4,
        }
    }

    /// `⌈r₁⌉ ≤ r₂ or ⌈r₁⌉ ≥ r₄`: the `3k+2` optimum has middle row `k+1`.
    pub fn raised_middle_row(&self) -> bool {
        let c = i128::from(self.ceil_r1);
        self.r2.at_least(c) || self.r4.at_most(c)
    }

    /// `r₂ ≤ ⌈r₁⌉ ≤ r₄`: the `3k+2` optimum has middle row `k`.
    pub fn flat_middle_row(&self) -> bool {
        let c = i128::from(self.ceil_r1);
        self.r2.at_most(c) && self.r4.at_least(c)
    }

    /// Ceiling-level consequences of `r₁ < r₃ < r₀ < r̂₀ < r₁ + 1`.
    pub fn ordering_holds(&self) -> bool {
        let c3 = self.ceil_r3;
        self.ceil_r1 <= c3
            && c3 <= self.ceil_r0
            && self.ceil_r0 <= self.ceil_r0_hat
            && self.ceil_r0_hat <= self.ceil_r1 + 1
            && (c3..=c3 + 1).contains(&self.ceil_r0)
            && (c3..=c3 + 1).contains(&self.ceil_r0_hat)
    }
}

/// Thresholds for `k`; see [`QutritThresholds`].
pub fn qutrit_thresholds(k: u64) -> QutritThresholds {
    QutritThresholds::new(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r3_integral_at_k1() {
        let t = qutrit_thresholds(1);
        assert!(t.r3_integral);
        assert_eq!(t.ceil_r3, 0);
    }

    #[test]
    fn r0_ceiling_at_k2() {
        assert_eq!(qutrit_thresholds(2).ceil_r0, 1);
    }

    #[test]
    fn ceilings_match_float_away_from_integers() {
        for k in 0..2000u64 {
            let t = qutrit_thresholds(k);
            let cases = [
                (t.ceil_r0, t.r0.to_f64(), t.r0_integral),
                (t.ceil_r0_hat, t.r0_hat.to_f64(), t.r0_hat.is_integer()),
                (t.ceil_r1, t.r1.to_f64(), t.r1.is_integer()),
                (t.ceil_r2, t.r2.to_f64(), t.r2_integral),
                (t.ceil_r3, t.r3.to_f64(), t.r3_integral),
                (t.ceil_r4, t.r4.to_f64(), t.r4_integral),
            ];
            for (exact, approx, integral) in cases {
                if integral {
                    assert_eq!(exact as f64, approx.round(), "k={k}");
                    assert!((approx - approx.round()).abs() < 1e-9, "k={k}");
                } else if (approx - approx.round()).abs() > 1e-6 {
                    assert_eq!(exact as f64, approx.ceil(), "k={k}");
                }
            }
        }
    }

    #[test]
    fn surd_comparisons() {
        // (−8 + √64)/4 = 0
        let s = Surd::new(-8, 64, 4);
        assert!(s.is_integer());
        assert!(s.at_least(0) && s.at_most(0));
        assert!(!s.at_least(1) && !s.at_most(-1));
        // (1 + √2)/1 ≈ 2.414
        let s = Surd::new(1, 2, 1);
        assert_eq!(s.ceil(), 3);
        assert!(s.at_least(2) && !s.at_least(3));
        assert!(s.at_most(3) && !s.at_most(2));
        assert!(!s.is_integer());
        // (−3 + √(1 + √9))/1 = −1
        let n = NestedSurd::new(-3, 1, 9, 1);
        assert_eq!(n.ceil(), -1);
        assert!(n.is_integer());
    }

    #[test]
    fn threshold_ordering_over_range() {
        for k in 0..5000 {
            let t = qutrit_thresholds(k);
            assert!(t.ordering_holds(), "k={k}");
            if t.r3_integral {
                assert_eq!(t.ceil_r0, t.ceil_r3 + 1, "k={k}");
            }
            if t.flat_middle_row() {
                assert_eq!(t.ceil_r0_hat, t.ceil_r1 + 1, "k={k}");
            }
        }
    }

    #[test]
    fn r0_never_integral() {
        for k in 1..100_000 {
            assert!(!qutrit_thresholds(k).r0_integral, "k={k}");
        }
    }

    #[test]
    fn integral_flags_follow_k_families() {
        let family = |k: u64, fams: &[(u64, u64)]| {
            (0..k).any(|q| fams.iter().any(|&(a, b)| a + b * q + 6 * q * q == k))
                || fams.iter().any(|&(a, _)| a == k)
        };
        for k in 0..3000u64 {
            let t = qutrit_thresholds(k);
            assert_eq!(t.r3_integral, family(k, &[(1, 8), (9, 16)]), "r3 k={k}");
            assert_eq!(t.r2_integral, family(k, &[(5, 13), (10, 17)]), "r2 k={k}");
            assert_eq!(t.r4_integral, family(k, &[(0, 7), (3, 11)]), "r4 k={k}");
            if t.r2_integral {
                assert_eq!(t.ceil_r1, t.ceil_r2, "k={k}");
            }
            if t.r4_integral {
                assert_eq!(t.ceil_r1, t.ceil_r4, "k={k}");
            }
        }
    }
}
