//! Additive cost weights (negated log probabilities).

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

/// A path or step cost. Lower is better, combination is additive and
/// [`Cost::INFINITY`] absorbs (a blocked continuation stays blocked).
///
/// Costs derived from probabilities are non-negative; a few scorers are
/// allowed to emit negative finite values and are flagged non-admissible
/// by the search gate instead. NaN is not a valid cost.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Cost(f64);

impl Cost {
    pub const ZERO: Cost = Cost(0.0);
    /// The blocked / unreachable cost.
    pub const INFINITY: Cost = Cost(f64::INFINITY);

    pub fn new(value: f64) -> Cost {
        debug_assert!(!value.is_nan(), "NaN is not a valid cost");
        Cost(value)
    }

    /// Cost of a probability: `-ln p`. `p = 0` maps to infinity.
    pub fn from_prob(p: f64) -> Cost {
        if p <= 0.0 {
            Cost::INFINITY
        } else {
            Cost(-p.ln())
        }
    }

    /// Cost of a base-10 log probability: `-ln 10^lp`.
    pub fn from_log10_prob(lp: f64) -> Cost {
        Cost(-lp * std::f64::consts::LN_10)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// Weighted contribution to a linear combination. A blocked cost stays
    /// blocked under any non-zero weight; weight zero silences the scorer
    /// entirely (including its blocks).
    pub fn scaled(self, weight: f64) -> Cost {
        if weight == 0.0 {
            Cost::ZERO
        } else if self.0.is_infinite() {
            Cost::INFINITY
        } else {
            Cost(self.0 * weight)
        }
    }

    /// Absolute difference is within `tol`. Infinite costs compare equal.
    pub fn approx_eq(self, other: Cost, tol: f64) -> bool {
        if self.0.is_infinite() || other.0.is_infinite() {
            self.0 == other.0
        } else {
            (self.0 - other.0).abs() <= tol
        }
    }
}

impl From<f64> for Cost {
    fn from(value: f64) -> Cost {
        Cost::new(value)
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        self.0 += rhs.0;
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, |acc, c| acc + c)
    }
}

impl Eq for Cost {}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Cost) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Cost) -> Ordering {
        // Costs never hold NaN, so the partial order is total.
        self.0
            .partial_cmp(&other.0)
            .expect("cost comparison with NaN")
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cost({})", self.0)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(prec) = f.precision() {
            write!(f, "{:.*}", prec, self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs() {
        assert_eq!(Cost::INFINITY + Cost::new(1.0), Cost::INFINITY);
        assert_eq!(Cost::new(1.0) + Cost::INFINITY, Cost::INFINITY);
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut costs = vec![Cost::INFINITY, Cost::new(0.5), Cost::new(-0.25)];
        costs.sort();
        assert_eq!(costs, vec![Cost::new(-0.25), Cost::new(0.5), Cost::INFINITY]);
    }

    #[test]
    fn scaled_keeps_blocks_blocked() {
        assert_eq!(Cost::INFINITY.scaled(0.5), Cost::INFINITY);
        assert_eq!(Cost::INFINITY.scaled(0.0), Cost::ZERO);
        assert_eq!(Cost::new(2.0).scaled(0.5), Cost::new(1.0));
    }

    #[test]
    fn prob_conversions() {
        assert!(Cost::from_prob(1.0).approx_eq(Cost::ZERO, 1e-12));
        assert_eq!(Cost::from_prob(0.0), Cost::INFINITY);
        // -ln 10^(-0.30103) = ln 2
        assert!(Cost::from_log10_prob(-0.30103).approx_eq(Cost::new(2.0f64.ln()), 1e-5));
    }
}
