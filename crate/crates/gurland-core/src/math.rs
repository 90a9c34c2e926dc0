//! Float math routed through `std` or `libm`, plus small exact-arithmetic
//! helpers shared by the evaluators.

#[cfg(feature = "std")]
macro_rules! shim {
    ($name:ident, $method:ident) => {
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            x.$method()
        }
    };
}

#[cfg(not(feature = "std"))]
macro_rules! shim {
    ($name:ident, $libm:ident) => {
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            libm::$libm(x)
        }
    };
}

#[cfg(feature = "std")]
mod imp {
    shim!(ln, ln);
    shim!(ln_1p, ln_1p);
    shim!(exp, exp);
    shim!(sqrt, sqrt);
    shim!(sin, sin);

    #[inline(always)]
    pub(crate) fn powf(x: f64, y: f64) -> f64 {
        x.powf(y)
    }

    #[inline(always)]
    pub(crate) fn mul_add(a: f64, b: f64, c: f64) -> f64 {
        a.mul_add(b, c)
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    shim!(ln, log);
    shim!(ln_1p, log1p);
    shim!(exp, exp);
    shim!(sqrt, sqrt);
    shim!(sin, sin);

    #[inline(always)]
    pub(crate) fn powf(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }

    #[inline(always)]
    pub(crate) fn mul_add(a: f64, b: f64, c: f64) -> f64 {
        libm::fma(a, b, c)
    }
}

pub(crate) use imp::{exp, ln, ln_1p, mul_add, powf, sin, sqrt};

/// Smallest integer `>= x`, for `0 <= x < 2^52`.
#[inline]
pub(crate) fn ceil_as_u32(x: f64) -> u32 {
    let t = x as u32;
    if (t as f64) < x {
        t + 1
    } else {
        t
    }
}

/// Error-free sum: returns `(s, e)` with `s + e == a + b` exactly.
#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free product via fused multiply-add: `p + e == a * b` exactly.
#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = mul_add(a, b, -p);
    (p, e)
}

/// `ln x` with a first-order residual correction; `(hi, lo)` carries roughly
/// 1e-16 absolute error instead of 0.5 ulp of `hi`.
#[inline]
pub(crate) fn ln_ext(x: f64) -> (f64, f64) {
    let hi = ln(x);
    let lo = mul_add(x, exp(-hi), -1.0);
    (hi, lo)
}

/// Kahan-compensated accumulator for long positive sums.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}
