use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` certifying a real value.
///
/// Every certified evaluation path in this crate returns its result as an
/// `Enclosure`: the exact mathematical value is guaranteed to lie inside,
/// with truncation and rounding already accounted for in the endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    /// Builds an enclosure, rejecting reversed or non-finite endpoints.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::Domain("enclosure endpoints must be finite"));
        }
        if lo > hi {
            return Err(Error::Domain("enclosure requires lo <= hi"));
        }
        Ok(Self { lo, hi })
    }

    /// Exact point value `[v, v]`.
    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    /// Endpoints known valid by construction.
    pub(crate) fn new_unchecked(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "enclosure invariant: {lo} <= {hi}");
        Self { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Containment with an absolute slack on both sides.
    pub fn contains_with_slack(&self, v: f64, slack: f64) -> bool {
        self.lo - slack <= v && v <= self.hi + slack
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_endpoints() {
        assert!(Enclosure::new(1.0, 0.0).is_err());
        assert!(Enclosure::new(f64::NAN, 0.0).is_err());
        assert!(Enclosure::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn point_and_accessors() {
        let e = Enclosure::new(1.0, 2.0).unwrap();
        assert_eq!(e.lo(), 1.0);
        assert_eq!(e.hi(), 2.0);
        assert_eq!(e.midpoint(), 1.5);
        assert_eq!(e.width(), 1.0);
        assert!(e.contains(1.5));
        assert!(!e.contains(2.5));
        assert!(e.contains_with_slack(2.5, 0.6));

        let p = Enclosure::point(0.0);
        assert_eq!(p.width(), 0.0);
        assert!(p.contains(0.0));
    }
}
