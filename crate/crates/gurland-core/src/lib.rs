//! Certified numerics for Gurland's ratio of the gamma function.
//!
//! Gurland's ratio `G(x,y) = Γ(x)Γ(y)/Γ²((x+y)/2)` and its shifted form
//! `G*(x,y) = Γ(1+x)Γ(1+y)/Γ²(1+(x+y)/2)` are evaluated through three
//! independent routes, each with a stated accuracy or enclosure contract:
//!
//! | Route | Entry point | Output |
//! |-------|-------------|--------|
//! | direct log-gamma | [`ratio::log_modified_ratio_direct`] | point value |
//! | Weierstrass product | [`ratio::log_modified_ratio_product`] | [`Enclosure`] |
//! | Hurwitz-zeta expansion | [`expansion::certified_log_ratio`] | [`ExpansionReport`] |
//!
//! The expansion route truncates `ln G*(x,y) = Σ_{k≥1} (1/k) h^{2k} ζ(2k, 1+A)`
//! (`h = |x-y|/2`, `A = (x+y)/2`) after `m-1` terms and bounds the remainder two
//! ways: the zeta-tail bound `ε_m` and the closed-form bound
//! `V_m = (1/m) Q^{2m} (1 + (1+√(xy))/(2m-1))` with `Q = |x-y|/(2(1+√(xy)))`.
//! [`mean_value`] adds the bilateral sandwich
//! `h²ζ(2,1+A) ≤ ln G* ≤ h²ζ(2,1+√(xy))` and the solver for the mean-value
//! parameter `t(x,y)` with `ln G* = h²ζ(2,1+t)`.
//!
//! The crate is `no_std`-compatible (`default-features = false,
//! features = ["libm"]`); everything is a pure function of its inputs and safe
//! to call from any number of threads.
//!
//! ```
//! use gurland_core::{QueryPoint, TruncationOrder, expansion};
//!
//! let p = QueryPoint::new(1.0, 3.0).unwrap();
//! let report = expansion::certified_log_ratio(&p, TruncationOrder::new(2).unwrap()).unwrap();
//! let direct = gurland_core::ratio::log_modified_ratio_direct(&p);
//! assert!(report.enclosure.contains(direct));
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("gurland-core needs either the `std` (default) or the `libm` feature");

#[cfg(not(feature = "std"))]
extern crate alloc;

mod enclosure;
mod error;
pub(crate) mod math;

pub mod expansion;
pub mod mean_value;
pub mod ratio;
pub mod special;

pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use expansion::{ExpansionReport, TruncationOrder};
pub use mean_value::{BilateralBounds, LambdaSweep, TLocation};
pub use ratio::QueryPoint;
pub use special::{EvenExponent, PositiveReal};
