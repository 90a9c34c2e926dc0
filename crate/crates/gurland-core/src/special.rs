//! Foundation evaluators: log-gamma, Hurwitz zeta at even integer exponent,
//! and Bernoulli numbers.
//!
//! Accuracy contracts:
//! - [`log_gamma`]: relative error below `1e-14` over `(0, 1e6]`, measured
//!   against the gamma value (equivalently, absolute error on `ln Γ` near its
//!   zeros at 1 and 2).
//! - [`hurwitz_zeta`]: returns an [`Enclosure`] of width at most
//!   `1e-14 · value`, by Euler-Maclaurin summation with the truncation error
//!   bounded by the first omitted Bernoulli term and rounding folded into the
//!   endpoints.
//!
//! A note on argument order: the exponent comes first, `ζ(s, a) =
//! Σ_{n≥0} (n+a)^{-s}`. Some references write the shift first; this crate
//! keeps the exponent-first order throughout.

#[cfg(not(feature = "std"))]
use alloc::vec::Vec;

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::math::{self, Kahan};

/// A validated, strictly positive and finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PositiveReal(f64);

impl PositiveReal {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain("value must be finite and > 0"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A validated even integer exponent `s >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EvenExponent(u32);

impl EvenExponent {
    pub fn new(s: u32) -> Result<Self> {
        if s >= 2 && s % 2 == 0 {
            Ok(Self(s))
        } else {
            Err(Error::Domain("exponent must be even and >= 2"))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

/// Largest supported count for [`bernoulli_numbers`] (through `B_60`).
pub const MAX_BERNOULLI: usize = 30;

// B_2, B_4, ..., B_60. Entries through B_34 and B_38 are exact integer
// ratios, hence correctly rounded by the division; the remaining numerators
// exceed 2^53 and are given as correctly rounded decimal literals.
const BERNOULLI: [f64; 30] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -13711655205088.332, // B_36 = -26315271553053477373/1919190
    2929993913841559.0 / 6.0,
    -1.9296579341940068e16, // B_40
    8.416930475736826e17,   // B_42
    -4.0338071854059454e19, // B_44
    2.1150748638081993e21,  // B_46
    -1.2086626522296526e23, // B_48
    7.500866746076964e24,   // B_50
    -5.038778101481069e26,  // B_52
    3.6528776484818122e28,  // B_54
    -2.849876930245088e30,  // B_56
    2.3865427499683627e32,  // B_58
    -2.1399949257225335e34, // B_60
];

/// Returns `B_2, B_4, ..., B_{2·count}`.
pub fn bernoulli_numbers(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Domain("count must be positive"));
    }
    if count > MAX_BERNOULLI {
        return Err(Error::Range("bernoulli_numbers supports count <= 30"));
    }
    Ok(BERNOULLI[..count].to_vec())
}

// ---------------------------------------------------------------------------
// log-gamma
// ---------------------------------------------------------------------------

/// ln(2π)/2
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_74;

/// Lanczos parameter g and coefficients (g = 7, n = 9), the
/// Godfrey/Boost/CPython set.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Crossover to the Stirling branch; also the shift target for the
/// recurrence-shifted evaluations in `ratio`.
pub(crate) const STIRLING_SHIFT_MIN: f64 = 13.0;

/// `B_{2k}/(2k(2k-1))` for k = 1..8, the Stirling correction coefficients.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

#[inline]
fn lanczos_sum(x: f64) -> f64 {
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (x + i as f64);
    }
    sum
}

/// ln Γ(x) for x in (0.5, STIRLING_SHIFT_MIN).
fn ln_gamma_lanczos(x: f64) -> f64 {
    let t = x + (LANCZOS_G - 0.5);
    (x - 0.5) * math::ln(t) - t + HALF_LN_TWO_PI + math::ln(lanczos_sum(x))
}

/// The Bernoulli correction series `Σ_k B_{2k}/(2k(2k-1) x^{2k-1})`, x >= 13.
///
/// First omitted term is below 3e-20 at x = 13.
pub(crate) fn stirling_series(x: f64) -> f64 {
    let w = 1.0 / x;
    let w2 = w * w;
    let mut s = STIRLING_COEFFS[7];
    for k in (0..7).rev() {
        s = s * w2 + STIRLING_COEFFS[k];
    }
    s * w
}

/// ln Γ(x) for x >= STIRLING_SHIFT_MIN.
///
/// The leading `(x - 1/2) ln x - x` is accumulated with error-free
/// transformations so the absolute error stays near one ulp of the result;
/// the recurrence `ln Γ(x+1) - ln Γ(x) = ln x` then holds to ~1e-13 even
/// near x = 100 where the result is of size several hundred.
fn ln_gamma_stirling(x: f64) -> f64 {
    let (lh, ll) = math::ln_ext(x);
    let a = x - 0.5; // exact: x >= 13 and x < 2^52
    let (p, pe) = math::two_prod(a, lh);
    let (s, se) = math::two_sum(p, -x);
    let rest = ((pe + se) + a * ll) + (HALF_LN_TWO_PI + stirling_series(x));
    s + rest
}

pub(crate) fn ln_gamma_raw(x: f64) -> f64 {
    if x >= STIRLING_SHIFT_MIN {
        ln_gamma_stirling(x)
    } else if x >= 0.5 {
        ln_gamma_lanczos(x)
    } else {
        // reflection: ln Γ(x) = ln π - ln sin(πx) - ln Γ(1 - x)
        let pi = core::f64::consts::PI;
        math::ln(pi / math::sin(pi * x)) - ln_gamma_lanczos(1.0 - x)
    }
}

/// Natural logarithm of the gamma function.
pub fn log_gamma(x: PositiveReal) -> f64 {
    ln_gamma_raw(x.value())
}

// ---------------------------------------------------------------------------
// Hurwitz zeta
// ---------------------------------------------------------------------------

/// `B_{2j}/(2j)!` for j = 1..8, the Euler-Maclaurin term coefficients.
const EM_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];

/// `|B_18/18!|`, coefficient of the first omitted term.
const EM_COEFF_BOUND: f64 = 43867.0 / 5109094217170944000.0;

/// Enclosure of the scaled sum `T(s, a) = a^s · ζ(s, a) = Σ_{n≥0} (1 + n/a)^{-s}`.
///
/// Working with `T` instead of `ζ` keeps every intermediate in the
/// representable range: `1 <= T <= a + O(1)` regardless of how large `s`
/// gets, while `ζ(s, a)` itself underflows once `s ln a > 745`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledZeta {
    pub lo: f64,
    pub hi: f64,
}

impl ScaledZeta {
    pub fn midpoint(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }
}

/// `(1 + r)^{-s}` together with an ulp-count bound on its rounding error.
#[inline]
fn pow_scaled(r: f64, sf: f64, s_is_two: bool) -> (f64, f64) {
    if s_is_two {
        let q = 1.0 / (1.0 + r);
        (q * q, 3.0)
    } else {
        let e = sf * math::ln_1p(r);
        (math::exp(-e), e + 3.0)
    }
}

/// Euler-Maclaurin evaluation of `T(s, a)` for integer `s >= 2`, `a > 0`.
///
/// Initial block of `N = max(10, ceil(15 - a))` direct terms, then the
/// integral and half corrections and 8 Bernoulli terms at `N + a`. The
/// truncation error is bounded by the first omitted Bernoulli term; rounding
/// is accumulated per summand (in ulps of each summand) and folded into the
/// enclosure endpoints.
pub(crate) fn hurwitz_zeta_scaled(s: u32, a: f64) -> ScaledZeta {
    debug_assert!(s >= 2, "scaled zeta needs s >= 2");
    debug_assert!(a > 0.0 && a.is_finite(), "scaled zeta needs a > 0");
    let sf = s as f64;
    let s_is_two = s == 2;
    let n = math::ceil_as_u32((15.0 - a).max(0.0)).max(10);

    let mut acc = Kahan::default();
    let mut err = 0.0; // Σ per-summand ulp bound × |summand|
    acc.add(1.0); // n = 0 term, exact
    for i in 1..n {
        let (t, ulps) = pow_scaled(i as f64 / a, sf, s_is_two);
        acc.add(t);
        err = math::mul_add(ulps, t, err);
    }

    let nf = n as f64;
    let na = a + nf;
    let (w, w_ulps) = pow_scaled(nf / a, sf, s_is_two);

    let integral = w * na / (sf - 1.0);
    acc.add(integral);
    err = math::mul_add(w_ulps + 2.0, integral, err);

    let half = 0.5 * w;
    acc.add(half);
    err = math::mul_add(w_ulps + 1.0, half, err);

    let inv_na2 = 1.0 / (na * na);
    let mut rising = sf; // s(s+1)...(s+2j-2), 2j-1 factors
    let mut power = w / na; // w / na^{2j-1}
    for (j, &c) in EM_COEFFS.iter().enumerate() {
        let term = c * rising * power;
        acc.add(term);
        err = math::mul_add(w_ulps + 18.0, term.abs(), err);
        let k = 2.0 * (j as f64 + 1.0);
        rising *= (sf + k - 1.0) * (sf + k);
        power *= inv_na2;
    }
    let trunc = EM_COEFF_BOUND * rising * power;

    let value = acc.value();
    let pad = trunc + 0.5 * f64::EPSILON * err;
    ScaledZeta {
        lo: value - pad,
        hi: value + pad,
    }
}

/// Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n+a)^{-s}`, exponent first.
///
/// The enclosure width is at most `1e-14 · value`. Fails with a range error
/// when the value itself leaves the binary64 range (huge `s` with `a < 1`,
/// or underflow toward zero).
pub fn hurwitz_zeta(s: EvenExponent, a: PositiveReal) -> Result<Enclosure> {
    let t = hurwitz_zeta_scaled(s.value(), a.value());
    let factor = math::powf(a.value(), -(s.value() as f64));
    if factor == 0.0 || !factor.is_finite() {
        return Err(Error::Range("zeta value not representable in binary64"));
    }
    // factor carries ~1 ulp of rounding; widen by 2 ulp on each side
    let lo = t.lo * factor * (1.0 - 2.0 * f64::EPSILON);
    let hi = t.hi * factor * (1.0 + 2.0 * f64::EPSILON);
    if !hi.is_finite() {
        return Err(Error::Range("zeta value not representable in binary64"));
    }
    Ok(Enclosure::new_unchecked(lo, hi))
}
