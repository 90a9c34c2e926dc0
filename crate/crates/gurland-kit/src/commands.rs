//! The four point-evaluation commands: eval, expand, bounds, tsolve.

use gurland_core::{expansion, mean_value, ratio, QueryPoint, TruncationOrder};

use crate::format::fmt_f64;
use crate::CliError;

fn query_point(x: f64, y: f64) -> Result<QueryPoint, CliError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(CliError::Usage("x must be > 0".into()));
    }
    if !(y.is_finite() && y > 0.0) {
        return Err(CliError::Usage("y must be > 0".into()));
    }
    QueryPoint::new(x, y).map_err(|e| CliError::Usage(e.to_string()))
}

fn order(m: u32) -> Result<TruncationOrder, CliError> {
    TruncationOrder::new(m).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn eval(x: f64, y: f64, product_terms: u32) -> Result<(), CliError> {
    let p = query_point(x, y)?;
    if product_terms == 0 {
        return Err(CliError::Usage("product_terms must be >= 1".into()));
    }
    let g = ratio::gurland_ratio(&p);
    let g_star = ratio::modified_ratio(&p);
    let direct = ratio::log_modified_ratio_direct(&p);
    let product = ratio::log_modified_ratio_product(&p, product_terms)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let residual = ratio::check_relation(&p);

    println!("x = {}", fmt_f64(p.x()));
    println!("y = {}", fmt_f64(p.y()));
    println!("G  (gurland ratio)  = {}", fmt_f64(g));
    println!("G* (modified ratio) = {}", fmt_f64(g_star));
    println!("ln G* direct        = {}", fmt_f64(direct));
    println!(
        "ln G* product       = [{}, {}]  width {:.3e}  ({} terms)",
        fmt_f64(product.lo()),
        fmt_f64(product.hi()),
        product.width(),
        product_terms
    );
    println!("relation residual   = {:.3e}", residual);
    Ok(())
}

pub fn expand(x: f64, y: f64, m: u32) -> Result<(), CliError> {
    let p = query_point(x, y)?;
    let m = order(m)?;
    let report =
        expansion::certified_log_ratio(&p, m).map_err(|e| CliError::Usage(e.to_string()))?;
    let direct = ratio::log_modified_ratio_direct(&p);

    println!("x = {}   y = {}   m = {}", fmt_f64(p.x()), fmt_f64(p.y()), m.value());
    println!("Q = {}", fmt_f64(report.q));
    if report.q_exceeds_one {
        println!("note: Q >= 1, so V_m does not vanish as m grows; the enclosure is still valid");
    }

    println!(" k   term (1/k) h^2k zeta(2k, 1+A)   partial sum");
    let mut prev = 0.0;
    for k in 1..m.value() {
        let partial = expansion::series_sum(&p, order(k + 1)?)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        println!(
            "{k:>2}   {}          {}",
            fmt_f64(partial - prev),
            fmt_f64(partial)
        );
        prev = partial;
    }

    println!("S_{}       = {}", m.value(), fmt_f64(report.s_m));
    println!(
        "epsilon_{} = {}  ({} explicit terms + zeta tail)",
        m.value(),
        fmt_f64(report.epsilon_m),
        expansion::DEFAULT_EPSILON_TAIL_TERMS
    );
    println!("V_{}       = {}", m.value(), fmt_f64(report.v_m));
    println!(
        "enclosure  = [{}, {}]",
        fmt_f64(report.enclosure.lo()),
        fmt_f64(report.enclosure.hi())
    );
    println!("ln G* direct = {}", fmt_f64(direct));
    let verdict = if report.enclosure.contains_with_slack(direct, 1e-11) {
        "PASS"
    } else {
        "FAIL"
    };
    println!("containment: {verdict}");
    Ok(())
}

pub fn bounds(x: f64, y: f64) -> Result<(), CliError> {
    let p = query_point(x, y)?;
    let b = mean_value::bilateral_bounds(&p);
    println!("lower  (h^2 zeta(2, 1+(x+y)/2)) = {}", fmt_f64(b.lower));
    println!("target (ln G*)                  = {}", fmt_f64(b.target));
    println!("upper  (h^2 zeta(2, 1+sqrt(xy))) = {}", fmt_f64(b.upper));
    println!("gap lower->target = {:.3e}", b.target - b.lower);
    println!("gap target->upper = {:.3e}", b.upper - b.target);
    let ok = b.lower <= b.target && b.target <= b.upper;
    println!("sandwich: {}", if ok { "PASS" } else { "FAIL" });
    Ok(())
}

pub fn tsolve(x: f64, y: f64, tol: f64) -> Result<(), CliError> {
    let p = query_point(x, y)?;
    let loc = mean_value::solve_t(&p, tol).map_err(|e| match e {
        gurland_core::Error::DegeneratePoint => CliError::Degenerate("degenerate: x = y".into()),
        other => CliError::Usage(other.to_string()),
    })?;
    println!(
        "bracket (sqrt(xy), (x+y)/2) = ({}, {})",
        fmt_f64(loc.bracket_lo),
        fmt_f64(loc.bracket_hi)
    );
    println!("t              = {}", fmt_f64(loc.t));
    println!("lambda         = {}", fmt_f64(loc.lambda));
    println!("|lambda - 1/2| = {}", fmt_f64((loc.lambda - 0.5).abs()));
    println!("residual       = {:.3e}", loc.residual);
    Ok(())
}
