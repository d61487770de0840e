use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A value or interval for `ex_P(n, H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranValue {
    pub lo: usize,
    pub hi: usize,
    pub exact: bool,
    /// The value equals the unrounded closed-form upper bound. Always set for
    /// exact table values.
    pub sharp: bool,
    pub provenance: String,
}

impl TuranValue {
    pub fn exact(v: usize, sharp: bool, provenance: String) -> Self {
        TuranValue {
            lo: v,
            hi: v,
            exact: true,
            sharp,
            provenance,
        }
    }

    pub fn interval(lo: usize, hi: usize, provenance: String) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        TuranValue {
            lo,
            hi,
            exact: lo == hi,
            sharp: false,
            provenance,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Value relative to `3n−6`, e.g. `3n-8`, when it is within a few edges.
    pub fn offset_label(&self, n: usize) -> Option<String> {
        let top = (3 * n).checked_sub(6)?;
        let gap = top.checked_sub(self.lo)?;
        (self.exact && gap <= 4).then(|| format!("3n-{}", 6 + gap))
    }
}

impl fmt::Display for TuranValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Largest integer `≤ r`, clamped at zero.
pub fn floor_bound(r: Ratio<i64>) -> usize {
    r.floor().to_integer().max(0) as usize
}

/// Largest integer strictly below `r`.
pub fn strict_floor_bound(r: Ratio<i64>) -> usize {
    let c = r.ceil().to_integer();
    (c - 1).max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(floor_bound(Ratio::new(159, 7)), 22);
        assert_eq!(strict_floor_bound(Ratio::new(159, 7)), 22);
        assert_eq!(strict_floor_bound(Ratio::from_integer(22)), 21);
        assert_eq!(floor_bound(Ratio::new(-3, 2)), 0);
    }

    #[test]
    fn labels() {
        let v = TuranValue::exact(31, true, String::new());
        assert_eq!(v.offset_label(13).as_deref(), Some("3n-8"));
        assert_eq!(v.to_string(), "31");
        assert_eq!(TuranValue::interval(3, 5, String::new()).to_string(), "[3, 5]");
    }
}
