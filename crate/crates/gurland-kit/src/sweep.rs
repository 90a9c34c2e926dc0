//! Grid sweeps: one record per grid point, written in deterministic x-major
//! order as CSV or JSON lines, plus a post-run summary.

use std::io::{BufWriter, Write};
use std::path::Path;

use gurland_core::{expansion, mean_value, ratio, QueryPoint, TruncationOrder};
use rayon::prelude::*;

use crate::format::{self, Cell};
use crate::CliError;

/// Absolute slack for the per-row invariant checks, matching the acceptance
/// tolerance of the enclosure criteria.
const VIOLATION_SLACK: f64 = 1e-11;

/// Guard against runaway grids.
const MAX_POINTS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

impl std::str::FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linear" => Ok(Self::Linear),
            "log" => Ok(Self::Log),
            other => Err(format!("scale must be `linear` or `log`, got `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "jsonl" => Ok(Self::Jsonl),
            other => Err(format!("format must be `csv` or `jsonl`, got `{other}`")),
        }
    }
}

/// One axis: `start:stop:steps`.
#[derive(Debug, Clone, Copy)]
pub struct AxisSpec {
    pub start: f64,
    pub stop: f64,
    pub steps: u32,
}

impl std::str::FromStr for AxisSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range must be start:stop:steps, got `{s}`"));
        }
        let start: f64 = parts[0].parse().map_err(|_| format!("bad range start `{}`", parts[0]))?;
        let stop: f64 = parts[1].parse().map_err(|_| format!("bad range stop `{}`", parts[1]))?;
        let steps: u32 = parts[2].parse().map_err(|_| format!("bad range steps `{}`", parts[2]))?;
        Ok(Self { start, stop, steps })
    }
}

impl AxisSpec {
    fn validate(&self, name: &str) -> Result<(), CliError> {
        if !(self.start.is_finite() && self.start > 0.0) {
            return Err(CliError::Usage(format!("{name} start must be > 0")));
        }
        if !(self.stop.is_finite() && self.stop > self.start) {
            return Err(CliError::Usage(format!("{name} stop must be > start")));
        }
        if self.steps < 2 {
            return Err(CliError::Usage(format!("{name} needs at least 2 steps")));
        }
        Ok(())
    }

    fn points(&self, scale: Scale) -> Vec<f64> {
        let n = self.steps as usize;
        let mut out = Vec::with_capacity(n);
        match scale {
            Scale::Linear => {
                let step = (self.stop - self.start) / (n as f64 - 1.0);
                for i in 0..n {
                    out.push(self.start + i as f64 * step);
                }
            }
            Scale::Log => {
                let l0 = self.start.ln();
                let step = (self.stop.ln() - l0) / (n as f64 - 1.0);
                for i in 0..n {
                    out.push((l0 + i as f64 * step).exp());
                }
            }
        }
        // pin the endpoints exactly
        out[0] = self.start;
        out[n - 1] = self.stop;
        out
    }
}

/// A validated sweep request.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub x: AxisSpec,
    pub y: AxisSpec,
    pub scale: Scale,
    pub m_orders: Vec<TruncationOrder>,
    /// Output column subset in schema order (`x`, `y`, `violation` always kept).
    pub columns: Vec<String>,
    pub product_terms: u32,
    pub rel_tol: f64,
    pub tol: f64,
}

impl SweepSpec {
    pub fn new(
        x: AxisSpec,
        y: AxisSpec,
        scale: Scale,
        m_orders: Vec<TruncationOrder>,
        requested_columns: Option<Vec<String>>,
        product_terms: u32,
        rel_tol: f64,
        tol: f64,
    ) -> Result<Self, CliError> {
        x.validate("--x-range")?;
        y.validate("--y-range")?;
        if (x.steps as u64) * (y.steps as u64) > MAX_POINTS {
            return Err(CliError::Usage(format!(
                "grid would exceed {MAX_POINTS} points"
            )));
        }
        if m_orders.is_empty() {
            return Err(CliError::Usage("need at least one order in --m".into()));
        }
        if product_terms == 0 {
            return Err(CliError::Usage("product_terms must be >= 1".into()));
        }
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(CliError::Usage("rel_tol must lie in (0, 1)".into()));
        }
        if !(tol > 0.0 && tol <= 1e-6) {
            return Err(CliError::Usage("tol must lie in (0, 1e-6]".into()));
        }

        let schema = full_schema(&m_orders);
        let columns = match requested_columns {
            None => schema,
            Some(req) => {
                for name in &req {
                    if !schema.contains(name) {
                        return Err(CliError::Usage(format!(
                            "unknown column `{name}`; known: {}",
                            schema.join(", ")
                        )));
                    }
                }
                let mut cols: Vec<String> = schema
                    .into_iter()
                    .filter(|c| {
                        c == "x" || c == "y" || c == "violation" || req.contains(c)
                    })
                    .collect();
                cols.dedup();
                cols
            }
        };

        Ok(Self {
            x,
            y,
            scale,
            m_orders,
            columns,
            product_terms,
            rel_tol,
            tol,
        })
    }
}

/// Column names in schema order for a given set of truncation orders.
fn full_schema(m_orders: &[TruncationOrder]) -> Vec<String> {
    let mut cols = vec![
        "x".to_string(),
        "y".to_string(),
        "q".to_string(),
        "ln_ratio_direct".to_string(),
    ];
    for m in m_orders {
        let m = m.value();
        cols.push(format!("s_{m}"));
        cols.push(format!("epsilon_{m}"));
        cols.push(format!("v_{m}"));
    }
    cols.extend(
        [
            "lower_bound",
            "upper_bound",
            "t",
            "lambda",
            "s_infinity",
            "s_inf_terms",
            "product_enclosure_width",
            "violation",
        ]
        .map(String::from),
    );
    cols
}

/// Everything computed at one grid point.
#[derive(Debug, Clone)]
struct SweepRecord {
    x: f64,
    y: f64,
    q: f64,
    ln_ratio_direct: f64,
    per_m: Vec<(u32, f64, f64, f64)>, // (m, s_m, epsilon_m, v_m)
    lower_bound: f64,
    upper_bound: f64,
    t: Option<f64>,
    lambda: Option<f64>,
    s_infinity: f64,
    s_inf_terms: u32,
    product_enclosure_width: f64,
    violation: bool,
}

fn compute_record(x: f64, y: f64, spec: &SweepSpec) -> Result<SweepRecord, CliError> {
    let p = QueryPoint::new(x, y)
        .map_err(|e| CliError::Usage(format!("grid point ({x}, {y}): {e}")))?;
    let numeric = |e: gurland_core::Error| {
        CliError::Usage(format!("evaluation failed at ({x}, {y}): {e}"))
    };

    let q = expansion::q_ratio(&p);
    let direct = ratio::log_modified_ratio_direct(&p);

    let mut per_m = Vec::with_capacity(spec.m_orders.len());
    let mut violation = false;
    for &m in &spec.m_orders {
        let s_m = expansion::series_sum(&p, m).map_err(numeric)?;
        let eps = expansion::epsilon_bound(&p, m, expansion::DEFAULT_EPSILON_TAIL_TERMS)
            .map_err(numeric)?;
        let v = expansion::v_bound(&p, m);
        if s_m > direct + VIOLATION_SLACK || direct > s_m + eps + VIOLATION_SLACK {
            violation = true;
        }
        per_m.push((m.value(), s_m, eps, v));
    }

    let b = mean_value::bilateral_bounds(&p);
    if b.lower > direct + VIOLATION_SLACK || direct > b.upper + VIOLATION_SLACK {
        violation = true;
    }

    let (t, lambda) = match mean_value::solve_t(&p, spec.tol) {
        Ok(loc) => (Some(loc.t), Some(loc.lambda)),
        Err(gurland_core::Error::DegeneratePoint) => (None, None),
        Err(e) => return Err(numeric(e)),
    };

    let (s_inf, s_inf_terms) = expansion::s_infinity(&p, spec.rel_tol).map_err(numeric)?;
    let product =
        ratio::log_modified_ratio_product(&p, spec.product_terms).map_err(numeric)?;

    Ok(SweepRecord {
        x,
        y,
        q,
        ln_ratio_direct: direct,
        per_m,
        lower_bound: b.lower,
        upper_bound: b.upper,
        t,
        lambda,
        s_infinity: s_inf,
        s_inf_terms,
        product_enclosure_width: product.width(),
        violation,
    })
}

impl SweepRecord {
    fn cells(&self, columns: &[String]) -> Vec<Cell> {
        columns
            .iter()
            .map(|name| match name.as_str() {
                "x" => Cell::Float(self.x),
                "y" => Cell::Float(self.y),
                "q" => Cell::Float(self.q),
                "ln_ratio_direct" => Cell::Float(self.ln_ratio_direct),
                "lower_bound" => Cell::Float(self.lower_bound),
                "upper_bound" => Cell::Float(self.upper_bound),
                "t" => self.t.map_or(Cell::Empty, Cell::Float),
                "lambda" => self.lambda.map_or(Cell::Empty, Cell::Float),
                "s_infinity" => Cell::Float(self.s_infinity),
                "s_inf_terms" => Cell::Int(self.s_inf_terms as u64),
                "product_enclosure_width" => Cell::Float(self.product_enclosure_width),
                "violation" => Cell::Bool(self.violation),
                per_order => {
                    let (kind, m) = per_order
                        .rsplit_once('_')
                        .expect("schema-validated column");
                    let m: u32 = m.parse().expect("schema-validated order");
                    let row = self
                        .per_m
                        .iter()
                        .find(|(rm, ..)| *rm == m)
                        .expect("schema-validated order");
                    match kind {
                        "s" => Cell::Float(row.1),
                        "epsilon" => Cell::Float(row.2),
                        "v" => Cell::Float(row.3),
                        _ => unreachable!("schema-validated column"),
                    }
                }
            })
            .collect()
    }
}

/// Post-run aggregate, printed to stdout.
#[derive(Debug)]
pub struct SweepSummary {
    pub rows: usize,
    pub violations: usize,
    pub lambda_min: Option<f64>,
    pub lambda_max: Option<f64>,
    pub lambda_mean: Option<f64>,
    pub max_s_inf_deviation: f64,
    pub q_ge_one: usize,
}

impl SweepSummary {
    pub fn print(&self) {
        println!("rows written          : {}", self.rows);
        println!("violations            : {}", self.violations);
        match (self.lambda_min, self.lambda_max, self.lambda_mean) {
            (Some(lo), Some(hi), Some(mean)) => {
                println!("lambda min/max/mean   : {} / {} / {}",
                    format::fmt_f64(lo), format::fmt_f64(hi), format::fmt_f64(mean));
            }
            _ => println!("lambda min/max/mean   : n/a (no non-degenerate rows)"),
        }
        println!(
            "max |S_inf - direct|  : {}",
            format::fmt_f64(self.max_s_inf_deviation)
        );
        println!("Q >= 1 points         : {}", self.q_ge_one);
    }
}

/// Runs the sweep, writing records in x-major order, and returns the summary.
///
/// Grid points are evaluated in parallel; the output order never depends on
/// scheduling, so identical invocations produce byte-identical files.
pub fn run(spec: &SweepSpec, out_path: &Path, fmt: OutputFormat) -> Result<SweepSummary, CliError> {
    let xs = spec.x.points(spec.scale);
    let ys = spec.y.points(spec.scale);
    let grid: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect();

    let records: Vec<SweepRecord> = grid
        .par_iter()
        .map(|&(x, y)| compute_record(x, y, spec))
        .collect::<Result<_, _>>()?;

    let file = std::fs::File::create(out_path)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out_path.display())))?;
    let mut w = BufWriter::new(file);
    let io_err = |e: std::io::Error| CliError::Io(format!("write {}: {e}", out_path.display()));

    if fmt == OutputFormat::Csv {
        format::write_csv_header(&mut w, &spec.columns).map_err(io_err)?;
    }
    for rec in &records {
        let cells = rec.cells(&spec.columns);
        match fmt {
            OutputFormat::Csv => format::write_csv_row(&mut w, &cells).map_err(io_err)?,
            OutputFormat::Jsonl => {
                format::write_jsonl_row(&mut w, &spec.columns, &cells).map_err(io_err)?
            }
        }
    }
    w.flush().map_err(io_err)?;

    let lambdas: Vec<f64> = records.iter().filter_map(|r| r.lambda).collect();
    Ok(SweepSummary {
        rows: records.len(),
        violations: records.iter().filter(|r| r.violation).count(),
        lambda_min: lambdas.iter().copied().reduce(f64::min),
        lambda_max: lambdas.iter().copied().reduce(f64::max),
        lambda_mean: if lambdas.is_empty() {
            None
        } else {
            Some(lambdas.iter().sum::<f64>() / lambdas.len() as f64)
        },
        max_s_inf_deviation: records
            .iter()
            .map(|r| (r.s_infinity - r.ln_ratio_direct).abs())
            .fold(0.0, f64::max),
        q_ge_one: records.iter().filter(|r| r.q >= 1.0).count(),
    })
}
