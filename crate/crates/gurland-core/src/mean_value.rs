//! Bilateral bounds on `ln G*` and the mean-value parameter `t(x,y)`.
//!
//! For `x ≠ y` the sandwich
//! `h²·ζ(2, 1+A) ≤ ln G*(x,y) ≤ h²·ζ(2, 1+√(xy))`
//! is strict, and since `t ↦ ζ(2, 1+t)` is continuous and strictly
//! decreasing, there is exactly one `t(x,y) ∈ (√(xy), (x+y)/2)` with
//! `ln G*(x,y) = h²·ζ(2, 1+t)`. [`solve_t`] brackets it by bisection, which
//! inherits convergence directly from that monotonicity; the normalized
//! position `lambda = (t - √(xy)) / ((x+y)/2 - √(xy)) ∈ (0,1)` is the
//! scale-free quantity the sweep experiments record.

#[cfg(not(feature = "std"))]
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ratio::{log_modified_ratio_direct, QueryPoint};
use crate::special::hurwitz_zeta_scaled;

/// Relative gap below which `x` and `y` are treated as coinciding: the
/// equation degenerates to `0 = 0` and `ln G*/h²` has no significant digits
/// left.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Bisection cap; 60 halvings shrink any sane bracket below any permitted
/// tolerance.
const MAX_BISECTIONS: u32 = 60;

/// The two sides of the bilateral sandwich around `target = ln G*`.
#[derive(Debug, Clone, Copy)]
pub struct BilateralBounds {
    /// `h²·ζ(2, 1+(x+y)/2)`
    pub lower: f64,
    /// `h²·ζ(2, 1+√(xy))`
    pub upper: f64,
    /// `ln G*(x,y)` from the direct log-gamma path.
    pub target: f64,
}

/// The solved mean-value parameter and its location inside the bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TLocation {
    pub t: f64,
    /// `√(xy)`
    pub bracket_lo: f64,
    /// `(x+y)/2`
    pub bracket_hi: f64,
    /// `(t - bracket_lo)/(bracket_hi - bracket_lo)`, in `(0, 1)`.
    pub lambda: f64,
    /// `|h²·ζ(2, 1+t) - ln G*|` at the returned `t`.
    pub residual: f64,
}

/// `h² ζ(2, 1+t)` evaluated in scaled form.
fn h2_zeta2(h: f64, one_plus_t: f64) -> f64 {
    let q = h / one_plus_t;
    q * q * hurwitz_zeta_scaled(2, one_plus_t).midpoint()
}

/// Lower bound, target, and upper bound, with `lower ≤ target ≤ upper`
/// (strict for `x ≠ y`).
pub fn bilateral_bounds(p: &QueryPoint) -> BilateralBounds {
    if p.is_diagonal() {
        return BilateralBounds {
            lower: 0.0,
            upper: 0.0,
            target: 0.0,
        };
    }
    let h = p.half_gap();
    BilateralBounds {
        lower: h2_zeta2(h, 1.0 + p.arithmetic_mean()),
        upper: h2_zeta2(h, 1.0 + p.geometric_mean()),
        target: log_modified_ratio_direct(p),
    }
}

/// Solves `h²·ζ(2, 1+t) = ln G*(x,y)` for `t` in `(√(xy), (x+y)/2)`.
///
/// Plain bisection on the strictly decreasing `f(t) = h²·ζ(2,1+t) - ln G*`,
/// with `f(√(xy)) ≥ 0 ≥ f((x+y)/2)`. Iterates until the bracket is below
/// `abs_tol` and the residual is too, or the cap of 60 halvings is reached;
/// the target comes from the direct path, so the solution is independent of
/// any truncation-order choice.
pub fn solve_t(p: &QueryPoint, abs_tol: f64) -> Result<TLocation> {
    if !(abs_tol > 0.0 && abs_tol <= 1e-6) {
        return Err(Error::Domain("abs_tol must lie in (0, 1e-6]"));
    }
    if (p.max_coord() - p.min_coord()) <= DEGENERACY_THRESHOLD * p.max_coord() {
        return Err(Error::DegeneratePoint);
    }
    let bracket_lo = p.geometric_mean();
    let bracket_hi = p.arithmetic_mean();
    // barely-split pairs can leave a bracket narrower than one ulp
    if bracket_hi - bracket_lo <= 4.0 * f64::EPSILON * bracket_hi {
        return Err(Error::DegeneratePoint);
    }

    let h = p.half_gap();
    let target = log_modified_ratio_direct(p);
    let f = |t: f64| h2_zeta2(h, 1.0 + t) - target;

    let sign_tol = 1e-11 + 1e-13 * target.abs();
    if f(bracket_lo) < -sign_tol || f(bracket_hi) > sign_tol {
        return Err(Error::BracketFailure);
    }

    let mut lo = bracket_lo;
    let mut hi = bracket_hi;
    let mut t = 0.5 * (lo + hi);
    let mut ft = f(t);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo < abs_tol && ft.abs() <= abs_tol {
            break;
        }
        if ft >= 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        t = 0.5 * (lo + hi);
        ft = f(t);
    }

    Ok(TLocation {
        t,
        bracket_lo,
        bracket_hi,
        lambda: (t - bracket_lo) / (bracket_hi - bracket_lo),
        residual: ft.abs(),
    })
}

/// One solved point of a lambda sweep.
#[derive(Debug, Clone, Copy)]
pub struct LambdaDetail {
    pub x: f64,
    pub y: f64,
    pub t: f64,
    pub lambda: f64,
    /// `|lambda - 1/2|`, the distance of `t` from the bracket midpoint in
    /// normalized coordinates.
    pub dist_to_midpoint: f64,
}

/// Aggregated lambdas over a point set; degenerate points are skipped and
/// counted, never silently dropped.
#[derive(Debug, Clone)]
pub struct LambdaSweep {
    pub details: Vec<LambdaDetail>,
    pub skipped: usize,
}

impl LambdaSweep {
    pub fn min(&self) -> Option<f64> {
        self.details.iter().map(|d| d.lambda).reduce(f64::min)
    }

    pub fn max(&self) -> Option<f64> {
        self.details.iter().map(|d| d.lambda).reduce(f64::max)
    }

    pub fn mean(&self) -> Option<f64> {
        if self.details.is_empty() {
            None
        } else {
            Some(self.details.iter().map(|d| d.lambda).sum::<f64>() / self.details.len() as f64)
        }
    }
}

/// Runs [`solve_t`] over a point list and aggregates the lambdas.
pub fn lambda_sweep_statistic(points: &[QueryPoint], abs_tol: f64) -> Result<LambdaSweep> {
    let mut details = Vec::with_capacity(points.len());
    let mut skipped = 0;
    for p in points {
        match solve_t(p, abs_tol) {
            Ok(loc) => details.push(LambdaDetail {
                x: p.x(),
                y: p.y(),
                t: loc.t,
                lambda: loc.lambda,
                dist_to_midpoint: (loc.lambda - 0.5).abs(),
            }),
            Err(Error::DegeneratePoint) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(LambdaSweep { details, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> QueryPoint {
        QueryPoint::new(x, y).unwrap()
    }

    #[test]
    fn bilateral_pinned_values() {
        // (1,3): ζ(2,3) ≤ ln(3/2) ≤ ζ(2, 1+√3)
        let b = bilateral_bounds(&pt(1.0, 3.0));
        assert!((b.lower - 0.39493406684822646).abs() < 1e-13);
        assert!((b.target - 0.4054651081081644).abs() < 1e-13);
        assert!((b.upper - 0.44098460273136925).abs() < 1e-13);
        assert!(b.lower < b.target && b.target < b.upper);

        // (2,4): ζ(2,4) ≤ ln(4/3) ≤ ζ(2, 1+√8)
        let b = bilateral_bounds(&pt(2.0, 4.0));
        assert!((b.lower - 0.2838229557371153).abs() < 1e-13);
        assert!((b.target - 0.2876820724517809).abs() < 1e-13);
        assert!((b.upper - 0.2982491007193968).abs() < 1e-13);
        assert!(b.lower < b.target && b.target < b.upper);

        let b = bilateral_bounds(&pt(7.0, 7.0));
        assert_eq!((b.lower, b.target, b.upper), (0.0, 0.0, 0.0));
    }

    #[test]
    fn solve_t_pinned_values() {
        // oracle bisection against high-precision ζ(2, 1+t)
        let loc = solve_t(&pt(1.0, 3.0), 1e-12).unwrap();
        assert!((loc.t - 1.933422187287794).abs() < 1e-9);
        assert!((loc.lambda - 0.751528220301242).abs() < 1e-8);
        assert!(loc.residual <= 1e-12);
        assert!(loc.bracket_lo < loc.t && loc.t < loc.bracket_hi);

        let loc = solve_t(&pt(2.0, 4.0), 1e-10).unwrap();
        assert_eq!(loc.bracket_lo, pt(2.0, 4.0).geometric_mean());
        assert_eq!(loc.bracket_hi, 3.0);
        assert!((loc.t - 2.952427787822151).abs() < 1e-9);
        assert!(loc.residual <= 1e-10);
    }

    #[test]
    fn solve_t_rejects_degenerate_and_bad_tol() {
        assert_eq!(solve_t(&pt(2.0, 2.0), 1e-10), Err(Error::DegeneratePoint));
        // below the relative threshold
        assert_eq!(
            solve_t(&pt(1.0, 1.0 + 5e-10), 1e-10),
            Err(Error::DegeneratePoint)
        );
        // above the gap threshold but the bracket collapses in binary64
        assert_eq!(
            solve_t(&pt(1.0, 1.0 + 3e-9), 1e-10),
            Err(Error::DegeneratePoint)
        );
        assert!(solve_t(&pt(1.0, 3.0), 0.0).is_err());
        assert!(solve_t(&pt(1.0, 3.0), 1e-5).is_err());
    }

    #[test]
    fn solve_t_symmetry_is_exact() {
        let a = solve_t(&pt(1.0, 3.0), 1e-10).unwrap();
        let b = solve_t(&pt(3.0, 1.0), 1e-10).unwrap();
        assert_eq!(a.t, b.t);
        assert_eq!(a.lambda, b.lambda);
    }

    #[test]
    fn solve_t_consistency_on_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7e57_0003);
        for _ in 0..200 {
            let x: f64 = rng.gen_range(0.01..20.0);
            let y: f64 = rng.gen_range(0.01..20.0);
            if (x - y).abs() <= 1e-6 * x.max(y) {
                continue;
            }
            let p = pt(x, y);
            let loc = solve_t(&p, 1e-10).unwrap();
            assert!(loc.bracket_lo < loc.t && loc.t < loc.bracket_hi);
            assert!(loc.lambda > 0.0 && loc.lambda < 1.0);
            // substituting back reproduces the target within tolerance
            assert!(loc.residual <= 1e-10 + 1e-12);
        }
    }

    #[test]
    fn lambda_sweep_aggregation() {
        let single = lambda_sweep_statistic(&[pt(1.0, 3.0)], 1e-10).unwrap();
        assert_eq!(single.details.len(), 1);
        assert_eq!(single.skipped, 0);
        let lam = single.details[0].lambda;
        assert_eq!(single.min(), Some(lam));
        assert_eq!(single.max(), Some(lam));
        assert_eq!(single.mean(), Some(lam));
        assert!((single.details[0].dist_to_midpoint - (lam - 0.5).abs()).abs() < 1e-15);

        // mirrored pair gives identical lambdas; diagonal point is skipped
        let sweep =
            lambda_sweep_statistic(&[pt(1.0, 3.0), pt(3.0, 1.0), pt(4.0, 4.0)], 1e-10).unwrap();
        assert_eq!(sweep.details.len(), 2);
        assert_eq!(sweep.skipped, 1);
        assert_eq!(sweep.details[0].lambda, sweep.details[1].lambda);

        let empty = lambda_sweep_statistic(&[], 1e-10).unwrap();
        assert_eq!(empty.mean(), None);
    }

    #[test]
    fn lambda_grid_stays_interior() {
        // coarse grid sweep: all lambdas strictly inside (0, 1)
        let mut points = Vec::new();
        for i in 1..=10u32 {
            for j in 1..=10u32 {
                if i != j {
                    points.push(pt(i as f64 * 0.5, j as f64 * 0.5));
                }
            }
        }
        let sweep = lambda_sweep_statistic(&points, 1e-10).unwrap();
        assert_eq!(sweep.details.len(), 90);
        assert!(sweep.min().unwrap() > 0.0);
        assert!(sweep.max().unwrap() < 1.0);
    }
}
