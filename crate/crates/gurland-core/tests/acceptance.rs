//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! The shared corpus is 1000 seeded-random pairs in (0.01, 20]², which
//! includes well over 100 points with Q ≥ 1.

use gurland_core::{expansion, mean_value, ratio, special};
use gurland_core::{EvenExponent, PositiveReal, QueryPoint, TruncationOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS_SEED: u64 = 0x6042_1a4d;
const CORPUS_SIZE: usize = 1000;
const ORDERS: [u32; 4] = [2, 3, 5, 10];

fn corpus() -> Vec<QueryPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| {
            let x = rng.gen_range(0.01..=20.0);
            let y = rng.gen_range(0.01..=20.0);
            QueryPoint::new(x, y).unwrap()
        })
        .collect()
}

fn order(m: u32) -> TruncationOrder {
    TruncationOrder::new(m).unwrap()
}

fn conclude(name: &str, violations: Vec<String>) {
    if violations.is_empty() {
        println!("[PASS] {name}");
    } else {
        println!("[FAIL] {name}: {} violation(s)", violations.len());
        panic!(
            "{name}: {} violation(s), first: {}",
            violations.len(),
            violations[0]
        );
    }
}

#[test]
fn criterion_01_closed_form_reproduction() {
    let mut v = Vec::new();

    let g13 = ratio::modified_ratio(&QueryPoint::new(1.0, 3.0).unwrap());
    if ((g13 - 1.5) / 1.5).abs() > 1e-12 {
        v.push(format!("G*(1,3) = {g13}, want 3/2"));
    }
    let g24 = ratio::modified_ratio(&QueryPoint::new(2.0, 4.0).unwrap());
    if ((g24 - 4.0 / 3.0) / (4.0 / 3.0)).abs() > 1e-12 {
        v.push(format!("G*(2,4) = {g24}, want 4/3"));
    }

    let zeta = |s: u32| {
        special::hurwitz_zeta(EvenExponent::new(s).unwrap(), PositiveReal::new(1.0).unwrap())
            .unwrap()
            .midpoint()
    };
    let pi = std::f64::consts::PI;
    let basel = pi * pi / 6.0;
    if ((zeta(2) - basel) / basel).abs() > 1e-13 {
        v.push(format!("ζ(2,1) = {}, want π²/6", zeta(2)));
    }
    let z4 = pi.powi(4) / 90.0;
    if ((zeta(4) - z4) / z4).abs() > 1e-13 {
        v.push(format!("ζ(4,1) = {}, want π⁴/90", zeta(4)));
    }

    conclude(
        "criterion 1: closed-form reproduction (G*(1,3), G*(2,4), ζ(2,1), ζ(4,1))",
        v,
    );
}

#[test]
fn criterion_02_theorem_enclosure() {
    let mut v = Vec::new();
    for p in &corpus() {
        let direct = ratio::log_modified_ratio_direct(p);
        for m in ORDERS {
            let s_m = expansion::series_sum(p, order(m)).unwrap();
            let eps =
                expansion::epsilon_bound(p, order(m), expansion::DEFAULT_EPSILON_TAIL_TERMS)
                    .unwrap();
            if s_m > direct + 1e-11 {
                v.push(format!(
                    "S_{m} = {s_m} above direct {direct} at ({}, {})",
                    p.x(),
                    p.y()
                ));
            }
            if direct > s_m + eps + 1e-11 {
                v.push(format!(
                    "direct {direct} above S_{m} + ε = {} at ({}, {})",
                    s_m + eps,
                    p.x(),
                    p.y()
                ));
            }
        }
    }
    conclude(
        "criterion 2: S_m ≤ ln G* ≤ S_m + ε_m on 1000 pairs, m ∈ {2,3,5,10}",
        v,
    );
}

#[test]
fn criterion_03_bound_chain() {
    let mut v = Vec::new();
    for p in &corpus() {
        let q = expansion::q_ratio(p);
        for m in ORDERS {
            let eps =
                expansion::epsilon_bound(p, order(m), expansion::DEFAULT_EPSILON_TAIL_TERMS)
                    .unwrap();
            let vb = expansion::v_bound(p, order(m));
            if eps > vb * (1.0 + 1e-13) {
                v.push(format!(
                    "ε_{m} = {eps} above V_{m} = {vb} at ({}, {})",
                    p.x(),
                    p.y()
                ));
            }
        }
        if q > 0.0 && q < 0.9 {
            let m_star = ((60.0 / (-2.0 * q.log10())).ceil() as u32).max(2);
            let vb = expansion::v_bound(p, order(m_star));
            if vb >= 1e-10 {
                v.push(format!(
                    "V_m = {vb} at vanishing order m = {m_star}, Q = {q}, ({}, {})",
                    p.x(),
                    p.y()
                ));
            }
        }
    }
    conclude(
        "criterion 3: ε_m ≤ V_m corpus-wide; V vanishes at m = ⌈60/(-2·log10 Q)⌉ for Q < 0.9",
        v,
    );
}

#[test]
fn criterion_04_bilateral_sandwich() {
    let mut v = Vec::new();
    for p in &corpus() {
        if (p.x() - p.y()).abs() <= 1e-6 {
            continue;
        }
        let b = mean_value::bilateral_bounds(p);
        if !(b.lower < b.target && b.target < b.upper) {
            v.push(format!(
                "sandwich {} < {} < {} broken at ({}, {})",
                b.lower,
                b.target,
                b.upper,
                p.x(),
                p.y()
            ));
        }
    }

    // spot check at (1,3) against the stated derived values
    let b = mean_value::bilateral_bounds(&QueryPoint::new(1.0, 3.0).unwrap());
    for (got, want, name) in [
        (b.lower, 0.39493, "lower"),
        (b.target, 0.40547, "target"),
        (b.upper, 0.44103, "upper"),
    ] {
        if (got - want).abs() > 5e-5 {
            v.push(format!("(1,3) {name} = {got}, want {want} ± 5e-5"));
        }
    }

    conclude(
        "criterion 4: strict lower < ln G* < upper corpus-wide; (1,3) spot values",
        v,
    );
}

#[test]
fn criterion_05_mean_value_solver() {
    let mut v = Vec::new();
    for p in &corpus() {
        let loc = match mean_value::solve_t(p, 1e-12) {
            Ok(loc) => loc,
            Err(e) => {
                v.push(format!("solve_t failed at ({}, {}): {e}", p.x(), p.y()));
                continue;
            }
        };
        if !(loc.bracket_lo < loc.t && loc.t < loc.bracket_hi) {
            v.push(format!(
                "t = {} not strictly inside ({}, {}) at ({}, {})",
                loc.t,
                loc.bracket_lo,
                loc.bracket_hi,
                p.x(),
                p.y()
            ));
        }
        if loc.residual > 1e-10 {
            v.push(format!(
                "residual {} above 1e-10 at ({}, {})",
                loc.residual,
                p.x(),
                p.y()
            ));
        }
        let mirrored = QueryPoint::new(p.y(), p.x()).unwrap();
        let loc2 = mean_value::solve_t(&mirrored, 1e-12).unwrap();
        if loc2.t != loc.t {
            v.push(format!("t not symmetric at ({}, {})", p.x(), p.y()));
        }
    }
    conclude(
        "criterion 5: t strictly inside (√(xy), (x+y)/2), residual ≤ 1e-10, symmetric",
        v,
    );
}

#[test]
fn criterion_06_three_path_agreement() {
    let mut v = Vec::new();
    let mut q_ge_one = 0usize;
    for p in &corpus() {
        if expansion::q_ratio(p) >= 1.0 {
            q_ge_one += 1;
        }
        let direct = ratio::log_modified_ratio_direct(p);
        let (s_inf, _) = expansion::s_infinity(p, 1e-12).unwrap();
        if (direct - s_inf).abs() > 1e-9 {
            v.push(format!(
                "|direct - S_inf| = {:e} at ({}, {})",
                (direct - s_inf).abs(),
                p.x(),
                p.y()
            ));
        }
        let product =
            ratio::log_modified_ratio_product(p, ratio::DEFAULT_PRODUCT_TERMS).unwrap();
        if !product.contains_with_slack(direct, 1e-11) {
            v.push(format!(
                "direct {direct} outside product enclosure [{}, {}] at ({}, {})",
                product.lo(),
                product.hi(),
                p.x(),
                p.y()
            ));
        }
    }
    if q_ge_one < 100 {
        v.push(format!(
            "corpus has only {q_ge_one} points with Q ≥ 1, need ≥ 100"
        ));
    }
    conclude(
        "criterion 6: |direct - S_∞| ≤ 1e-9 and direct inside product enclosure, ≥ 100 pts with Q ≥ 1",
        v,
    );
}

#[test]
fn criterion_07_relation_identity() {
    let mut v = Vec::new();
    for p in &corpus() {
        let r = ratio::check_relation(p);
        if r >= 1e-12 {
            v.push(format!("residual {r:e} at ({}, {})", p.x(), p.y()));
        }
    }
    conclude(
        "criterion 7: G* = (4xy/(x+y)²)·G to relative 1e-12 corpus-wide",
        v,
    );
}

#[test]
fn criterion_08_gurland_inequality() {
    let mut v = Vec::new();
    for p in &corpus() {
        if p.x() == p.y() {
            continue;
        }
        let g = ratio::gurland_ratio(p);
        if g <= 1.0 {
            v.push(format!("G = {g} at ({}, {})", p.x(), p.y()));
        }
    }
    conclude("criterion 8: G(x,y) > 1 for all corpus points with x ≠ y", v);
}
