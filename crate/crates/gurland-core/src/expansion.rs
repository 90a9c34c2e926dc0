//! Truncated Hurwitz-zeta expansion of `ln G*` with certified remainder
//! bounds.
//!
//! For every `x, y > 0` and integer `m ≥ 2`,
//!
//! ```text
//! ln G*(x,y) = S_m(x,y) + R_m(x,y),
//! S_m = Σ_{k=1}^{m-1} (1/k) h^{2k} ζ(2k, 1+A),
//! 0 ≤ R_m ≤ ε_m = (1/m) h^{2m} Σ_{n≥1} ((n+x)(n+y))^{-m},
//! ```
//!
//! with `h = |x-y|/2` and `A = (x+y)/2`. The enclosure `[S_m, S_m + ε_m]`
//! holds unconditionally; the closed-form over-bound
//! `V_m = (1/m) Q^{2m} (1 + (1+√(xy))/(2m-1))` vanishes as `m → ∞` only when
//! `Q = |x-y|/(2(1+√(xy))) < 1`. Points with `Q ≥ 1` still get valid
//! enclosures and a converging [`s_infinity`] — the term ratio is governed by
//! `(h/(1+A))² < 1`, which holds everywhere — they are just flagged, since
//! the closed-form bound is non-vanishing there.
//!
//! Power/zeta products are evaluated in the scaled form
//! `h^{2k} ζ(2k, a) = (h/a)^{2k} · (a^{2k} ζ(2k, a))` so that neither factor
//! leaves the binary64 range even when the plain pair would overflow and
//! underflow; `ε_m` partial terms go through `exp` of log-space exponents for
//! the same reason.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::math;
use crate::ratio::QueryPoint;
use crate::special::hurwitz_zeta_scaled;

/// A validated truncation order `m ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TruncationOrder(u32);

impl TruncationOrder {
    pub fn new(m: u32) -> Result<Self> {
        if m >= 2 {
            Ok(Self(m))
        } else {
            Err(Error::Domain("truncation order must be >= 2"))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

/// Everything the expansion knows about one `(point, m)` evaluation.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionReport {
    /// Partial sum `S_m ≥ 0`.
    pub s_m: f64,
    /// Zeta-tail remainder bound `ε_m ≥ 0` (saturates at `f64::MAX`).
    pub epsilon_m: f64,
    /// Closed-form remainder bound `V_m ≥ ε_m` (saturates at `f64::MAX`).
    pub v_m: f64,
    /// Convergence ratio `Q = |x-y|/(2(1+√(xy)))`.
    pub q: f64,
    /// Set when `Q ≥ 1`: `v_m` is reported but does not vanish with `m`.
    pub q_exceeds_one: bool,
    pub m: TruncationOrder,
    /// `[S_m, S_m + min(ε_m, V_m)]`; contains `ln G*` for every valid point.
    pub enclosure: Enclosure,
}

/// `Q(x,y) = |x-y| / (2(1+√(xy)))`.
pub fn q_ratio(p: &QueryPoint) -> f64 {
    p.half_gap() / (1.0 + p.geometric_mean())
}

/// Number of explicit `ε_m` series terms used by [`certified_log_ratio`].
pub const DEFAULT_EPSILON_TAIL_TERMS: u32 = 200;

/// Iteration cap for [`s_infinity`].
pub const S_INFINITY_TERM_CAP: u32 = 10_000;

/// Partial sum `S_m = Σ_{k=1}^{m-1} (1/k) h^{2k} ζ(2k, 1+A)`.
///
/// Zeta factors are taken at the midpoint of their enclosures; the result is
/// nonnegative and nondecreasing in `m`.
pub fn series_sum(p: &QueryPoint, m: TruncationOrder) -> Result<f64> {
    if p.is_diagonal() {
        return Ok(0.0);
    }
    let a = 1.0 + p.arithmetic_mean();
    let rho = p.half_gap() / a;
    let r = rho * rho;
    let mut pw = 1.0;
    let mut sum = 0.0;
    for k in 1..m.value() {
        pw *= r;
        let t = hurwitz_zeta_scaled(2 * k, a);
        let term = pw * t.midpoint() / k as f64;
        if !term.is_finite() {
            return Err(Error::Range("series term left the binary64 range"));
        }
        sum += term;
    }
    Ok(sum)
}

/// Upper estimate of `ε_m = (1/m) h^{2m} Σ_{n≥1} ((n+x)(n+y))^{-m}`.
///
/// Explicit sum over `n ≤ tail_terms` plus the tail over-bound
/// `(1/m) h^{2m} ζ(2m, tail_terms + 1 + √(xy))`, valid because
/// `(n+x)(n+y) ≥ (n+√(xy))²`. Exact zero for `x = y`; saturates at
/// `f64::MAX` when the bound itself overflows (still a true upper bound).
pub fn epsilon_bound(p: &QueryPoint, m: TruncationOrder, tail_terms: u32) -> Result<f64> {
    if tail_terms == 0 {
        return Err(Error::Domain("tail_terms must be >= 1"));
    }
    if p.is_diagonal() {
        return Ok(0.0);
    }
    let mf = m.value() as f64;
    let two_ln_h = 2.0 * math::ln(p.half_gap());
    let (x, y) = (p.x(), p.y());

    let mut sum = 0.0f64;
    for n in 1..=tail_terms {
        let nf = n as f64;
        let e = mf * (two_ln_h - math::ln(nf + x) - math::ln(nf + y));
        if e > 709.0 {
            return Ok(f64::MAX);
        }
        sum += math::exp(e);
    }

    let at = tail_terms as f64 + 1.0 + p.geometric_mean();
    let t = hurwitz_zeta_scaled(2 * m.value(), at);
    let e_tail = 2.0 * mf * (math::ln(p.half_gap()) - math::ln(at));
    let tail = if e_tail > 709.0 {
        return Ok(f64::MAX);
    } else {
        math::exp(e_tail) * t.hi
    };

    let total = (sum + tail) / mf;
    Ok(if total.is_finite() { total } else { f64::MAX })
}

/// Closed-form over-bound `V_m = (1/m) Q^{2m} (1 + (1+√(xy))/(2m-1))`.
///
/// Always `≥ ε_m`; tends to 0 as `m → ∞` exactly when `Q < 1`. Computed in
/// log space; saturates at `f64::MAX`.
pub fn v_bound(p: &QueryPoint, m: TruncationOrder) -> f64 {
    let q = q_ratio(p);
    if q == 0.0 {
        return 0.0;
    }
    let mf = m.value() as f64;
    let ln_v = 2.0 * mf * math::ln(q) - math::ln(mf)
        + math::ln_1p((1.0 + p.geometric_mean()) / (2.0 * mf - 1.0));
    if ln_v > 709.0 {
        f64::MAX
    } else {
        math::exp(ln_v)
    }
}

/// Full expansion report at order `m`: `S_m`, both remainder bounds, `Q`, and
/// the enclosure `[S_m, S_m + min(ε_m, V_m)]`.
///
/// The enclosure contains `ln G*(x,y)` for every `x, y > 0` — no condition on
/// `Q` — because the remainder is nonnegative and below both bounds.
pub fn certified_log_ratio(p: &QueryPoint, m: TruncationOrder) -> Result<ExpansionReport> {
    let s_m = series_sum(p, m)?;
    let epsilon_m = epsilon_bound(p, m, DEFAULT_EPSILON_TAIL_TERMS)?;
    let v_m = v_bound(p, m);
    let q = q_ratio(p);
    let bound = epsilon_m.min(v_m);
    let hi = if (s_m + bound).is_finite() {
        s_m + bound
    } else {
        f64::MAX
    };
    Ok(ExpansionReport {
        s_m,
        epsilon_m,
        v_m,
        q,
        q_exceeds_one: q >= 1.0,
        m,
        enclosure: Enclosure::new_unchecked(s_m, hi),
    })
}

/// Adaptive sum `S_∞ = lim_m S_m`, stopping once the geometric tail bound
/// `a_k · r/(1-r)` drops below `rel_tol · S`, where `r = (h/(1+A))² < 1`
/// dominates the term ratio (the scaled zeta factors decrease in `k`).
///
/// Converges for all `x, y > 0`; returns the sum and the number of terms.
pub fn s_infinity(p: &QueryPoint, rel_tol: f64) -> Result<(f64, u32)> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::Domain("rel_tol must lie in (0, 1)"));
    }
    if p.is_diagonal() {
        return Ok((0.0, 1));
    }
    let a = 1.0 + p.arithmetic_mean();
    let rho = p.half_gap() / a;
    let r = rho * rho;
    let mut pw = 1.0;
    let mut sum = 0.0;
    for k in 1..=S_INFINITY_TERM_CAP {
        pw *= r;
        let t = hurwitz_zeta_scaled(2 * k, a);
        let term = pw * t.midpoint() / k as f64;
        if !term.is_finite() {
            return Err(Error::Range("series term left the binary64 range"));
        }
        sum += term;
        let tail_bound = term * r / (1.0 - r);
        if tail_bound <= rel_tol * sum {
            return Ok((sum, k));
        }
    }
    Err(Error::Convergence(
        "s_infinity did not reach rel_tol within the term cap",
    ))
}
