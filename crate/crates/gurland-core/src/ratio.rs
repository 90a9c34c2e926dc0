//! The two gamma-ratio definitions, their exact algebraic relation, and the
//! Weierstrass-product evaluation path that serves as an independent oracle.
//!
//! `G(x,y) = Γ(x)Γ(y)/Γ²((x+y)/2)` exceeds 1 for `x ≠ y`; the shifted form
//! `G*(x,y) = Γ(1+x)Γ(1+y)/Γ²(1+(x+y)/2)` satisfies
//! `G* = (4xy/(x+y)²) · G` and factors over the Weierstrass product into
//! `G* = Π_{n≥1} (1 - c_n)^{-1}` with `c_n = ((x-y)/2)² / (n + (x+y)/2)²`.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::math;
use crate::special::{self, ln_gamma_raw, stirling_series};

/// A validated pair `(x, y)` of positive reals.
///
/// Exposes the derived composites every evaluator needs: the arithmetic mean
/// `A = (x+y)/2`, the geometric mean `√(xy)`, and the half-gap
/// `h = |x-y|/2`, with `A ≥ √(xy)` and `h² = A² - xy`.
///
/// All derived quantities are computed from commutative expressions, so every
/// downstream result is bit-for-bit symmetric in `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryPoint {
    x: f64,
    y: f64,
}

impl QueryPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && x > 0.0 && y.is_finite() && y > 0.0) {
            return Err(Error::Domain("coordinates must be finite and > 0"));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// `A = (x + y)/2`
    pub fn arithmetic_mean(&self) -> f64 {
        0.5 * self.x + 0.5 * self.y
    }

    /// `√(xy)`, computed as `√x·√y` so extreme coordinates cannot overflow.
    pub fn geometric_mean(&self) -> f64 {
        // rounding can push √x·√y one ulp above A when x ≈ y; clamp
        (math::sqrt(self.x) * math::sqrt(self.y)).min(self.arithmetic_mean())
    }

    /// `h = |x - y|/2 ≥ 0`
    pub fn half_gap(&self) -> f64 {
        0.5 * (self.max_coord() - self.min_coord())
    }

    pub(crate) fn min_coord(&self) -> f64 {
        self.x.min(self.y)
    }

    pub(crate) fn max_coord(&self) -> f64 {
        self.x.max(self.y)
    }

    pub(crate) fn is_diagonal(&self) -> bool {
        self.x == self.y
    }
}

/// One factor of the Weierstrass product: `G_n = (1 - c_n)^{-1}` with
/// `c_n = (h/(n+A))²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductTerm {
    pub n: u32,
    /// `c_n ∈ [0, 1)`; always below 1 because `h ≤ A < n + A`.
    pub c: f64,
    /// `g_n = 1/(1 - c_n) ≥ 1`, strictly decreasing toward 1.
    pub g: f64,
}

impl ProductTerm {
    pub fn new(p: &QueryPoint, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("product index must be >= 1"));
        }
        let q = p.half_gap() / (n as f64 + p.arithmetic_mean());
        let c = q * q;
        Ok(Self {
            n,
            c,
            g: 1.0 / (1.0 - c),
        })
    }
}

/// Gurland's ratio `G(x,y) = Γ(x)Γ(y)/Γ²((x+y)/2)`; above 1 for `x ≠ y`.
pub fn gurland_ratio(p: &QueryPoint) -> f64 {
    if p.is_diagonal() {
        return 1.0;
    }
    math::exp(ln_gamma_raw(p.x) + ln_gamma_raw(p.y) - 2.0 * ln_gamma_raw(p.arithmetic_mean()))
}

/// The shifted ratio `G*(x,y) = Γ(1+x)Γ(1+y)/Γ²(1+(x+y)/2) ≥ 1`.
pub fn modified_ratio(p: &QueryPoint) -> f64 {
    if p.is_diagonal() {
        return 1.0;
    }
    math::exp(log_modified_ratio_direct(p))
}

/// `ln G*(x,y)` through log-gamma, the reference value for every expansion
/// path. Always `≥ 0`.
///
/// Evaluated as the symmetric second difference
/// `ln Γ(z₀+h) + ln Γ(z₀-h) - 2 ln Γ(z₀)` at `z₀ = 1 + (x+y)/2`, with the
/// logarithm differences folded into `ln_1p` forms:
/// the naive three-term sum loses all significant digits once `h` is small
/// (three O(ln Γ) values cancelling to an O(h²) result), while the folded
/// form stays relatively accurate down to the degeneracy threshold. Arguments
/// below the Stirling region are first shifted up through the recurrence,
/// whose second difference telescopes into `ln_1p(-(h/(z₀+i))²)` factors.
pub fn log_modified_ratio_direct(p: &QueryPoint) -> f64 {
    if p.is_diagonal() {
        return 0.0;
    }
    let h = p.half_gap();
    let z0 = 1.0 + p.arithmetic_mean();
    let zm = 1.0 + p.min_coord();
    let zp = 1.0 + p.max_coord();

    let shift = math::ceil_as_u32((special::STIRLING_SHIFT_MIN - zm).max(0.0));
    let mut corr = 0.0;
    for i in 0..shift {
        let r = h / (z0 + i as f64);
        corr += math::ln_1p(-r * r);
    }

    let sf = shift as f64;
    let (zc0, zcm, zcp) = (z0 + sf, zm + sf, zp + sf);
    let r0 = h / zc0;
    let lead = (zc0 - 0.5) * math::ln_1p(-r0 * r0) + h * math::ln_1p(2.0 * h / zcm);
    let series = (stirling_series(zcp) - stirling_series(zc0))
        + (stirling_series(zcm) - stirling_series(zc0));
    lead + series - corr
}

/// Relative residual of the identity `G* = (4xy/(x+y)²) · G`.
///
/// Contract: below `1e-12` for any valid point.
pub fn check_relation(p: &QueryPoint) -> f64 {
    let g_star = modified_ratio(p);
    let factor = 4.0 * p.x * p.y / ((p.x + p.y) * (p.x + p.y));
    (g_star - factor * gurland_ratio(p)).abs() / g_star
}

/// Default number of product factors for the oracle path.
pub const DEFAULT_PRODUCT_TERMS: u32 = 10_000;

/// Enclosure of `ln G* = Σ_{n≥1} -ln(1 - c_n)` from the Weierstrass product.
///
/// Sums the first `n_terms` factors; the tail is sandwiched between
/// `h²·ζ(2, n_terms+1+A)` (from `-ln(1-c) ≥ c`) and the same divided by
/// `1 - c_{n_terms+1}` (from `-ln(1-c) ≤ c/(1-c)`).
pub fn log_modified_ratio_product(p: &QueryPoint, n_terms: u32) -> Result<Enclosure> {
    if n_terms == 0 {
        return Err(Error::Domain("n_terms must be >= 1"));
    }
    if p.is_diagonal() {
        return Ok(Enclosure::point(0.0));
    }
    let h = p.half_gap();
    let a = p.arithmetic_mean();

    let mut acc = math::Kahan::default();
    for n in 1..=n_terms {
        let q = h / (n as f64 + a);
        acc.add(-math::ln_1p(-(q * q)));
    }
    let partial = acc.value();

    let at = n_terms as f64 + 1.0 + a;
    let t = special::hurwitz_zeta_scaled(2, at);
    let q = h / at;
    let c_next = q * q;
    let tail_lo = c_next * t.lo;
    let tail_hi = c_next * t.hi / (1.0 - c_next);

    let pad = f64::EPSILON * (4.0 * partial + 4.0 * tail_hi);
    Ok(Enclosure::new_unchecked(
        partial + tail_lo - pad,
        partial + tail_hi + pad,
    ))
}
