//! Closed forms against the numerical spectral path over a range of sizes.
//!
//! Each size is checked independently (in parallel); records come out in a
//! fixed order regardless of scheduling.

use std::f64::consts::PI;
use std::fmt::Write as _;

use ctqw_core::closedform::{
    complete_basis, complete_eigensystem, complete_eigenvalues, complete_quantum_formula,
    complete_quantum_probability, complete_raw_eigenstates, star_basis,
    star_classical_probability, star_eigensystem, star_eigenvalues, star_limiting_probability,
    star_quantum_probability, star_raw_eigenstates, StarPairKind,
};
use ctqw_core::dynamics::{classical_probability, limiting_probability, quantum_probability};
use ctqw_core::spectral::{eigendecompose, gram_schmidt, group_eigenspaces};
use ctqw_core::{Graph, SpectralDecomposition, SymmetricMatrix};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::config::{Family, Format, RunConfig, MAX_VERIFY_N};
use crate::error::{CliError, Result};
use crate::output::json_document;

/// Oracle agreement between closed forms and numerics.
pub const ORACLE_TOL: f64 = 1e-9;
/// Exact eigenbases (residual relative to the spectral radius) and
/// Gram-Schmidt output.
pub const BASIS_TOL: f64 = 1e-12;
/// Star hub vs complete graph: the same expression, so only rounding.
pub const EQUIVALENCE_TOL: f64 = 1e-14;
/// Chebyshev time nodes on `[0, 4π]`.
pub const TIME_SAMPLES: usize = 64;

/// The closed forms under test. Swapping one out lets the harness itself be
/// tested against a deliberately wrong formula.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub star_quantum: fn(StarPairKind, usize, f64) -> f64,
    pub star_classical: fn(StarPairKind, usize, f64) -> ctqw_core::Result<f64>,
    pub star_limiting: fn(StarPairKind, usize) -> f64,
    pub complete_quantum: fn(bool, usize, f64) -> f64,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            star_quantum: star_quantum_probability,
            star_classical: star_classical_probability,
            star_limiting: star_limiting_probability,
            complete_quantum: complete_quantum_probability,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Size at which the maximum deviation occurred.
    pub worst_n: usize,
    pub samples: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub n_range: (usize, usize),
    pub records: Vec<CheckRecord>,
    pub passed: bool,
}

/// Running maximum for one check; NaN poisons it.
#[derive(Clone, Copy)]
struct Tally {
    max: f64,
    worst_n: usize,
    samples: usize,
}

impl Tally {
    const EMPTY: Self = Self {
        max: 0.0,
        worst_n: 0,
        samples: 0,
    };

    fn add(&mut self, n: usize, deviation: f64) {
        self.samples += 1;
        if self.max.is_nan() {
            return;
        }
        if self.samples == 1 || deviation.is_nan() || deviation > self.max {
            self.max = deviation;
            self.worst_n = n;
        }
    }

    fn merge(mut self, other: Self) -> Self {
        if self.samples == 0 {
            return other;
        }
        if other.samples > 0 {
            let keep_self = self.max.is_nan() || (!other.max.is_nan() && self.max >= other.max);
            if !keep_self {
                self.max = other.max;
                self.worst_n = other.worst_n;
            }
            self.samples += other.samples;
        }
        self
    }
}

fn chebyshev_times() -> Vec<f64> {
    let (lo, hi) = (0.0, 4.0 * PI);
    (0..TIME_SAMPLES)
        .map(|i| {
            let x = (PI * (2 * i + 1) as f64 / (2 * TIME_SAMPLES) as f64).cos();
            0.5 * (lo + hi) - 0.5 * (hi - lo) * x
        })
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn signed_diff(a: &[f64], b: &[f64]) -> f64 {
    let minus: Vec<f64> = b.iter().map(|x| -x).collect();
    max_abs_diff(a, b).min(max_abs_diff(a, &minus))
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

/// Residual relative to the spectral radius, together with orthonormality.
fn basis_error(exact: &SpectralDecomposition, h: &SymmetricMatrix) -> f64 {
    let scale = exact.eigenvalues().iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    (exact.residual(h) / scale).max(exact.orthonormality_error())
}

fn star_checks() -> Vec<(String, f64)> {
    let mut checks = vec![
        ("spectrum".to_string(), ORACLE_TOL),
        ("eigenbasis".to_string(), BASIS_TOL),
        ("gram-schmidt".to_string(), BASIS_TOL),
    ];
    for kind in StarPairKind::ALL {
        checks.push((format!("quantum {}", kind.quantum_formula()), ORACLE_TOL));
    }
    for kind in StarPairKind::ALL {
        checks.push((format!("classical {}", kind.classical_formula()), ORACLE_TOL));
    }
    for kind in StarPairKind::ALL {
        checks.push((format!("limit {}", kind.limiting_formula()), ORACLE_TOL));
    }
    checks.push(("equivalence eq8/eq9 vs eq15".to_string(), EQUIVALENCE_TOL));
    checks
}

fn complete_checks() -> Vec<(String, f64)> {
    vec![
        ("spectrum".to_string(), ORACLE_TOL),
        ("eigenbasis".to_string(), BASIS_TOL),
        ("gram-schmidt".to_string(), BASIS_TOL),
        (format!("quantum {}", complete_quantum_formula(true)), ORACLE_TOL),
        (format!("quantum {}", complete_quantum_formula(false)), ORACLE_TOL),
        ("equivalence eq8/eq9 vs eq15".to_string(), EQUIVALENCE_TOL),
    ]
}

fn star_size(n: usize, f: &Formulas, tol: f64, times: &[f64]) -> Result<Vec<Tally>> {
    let mut t = vec![Tally::EMPTY; star_checks().len()];
    let h = Graph::star(n)?.laplacian();
    let d = eigendecompose(&h)?;
    let p = group_eigenspaces(&d, tol);

    t[0].add(n, max_abs_diff(d.eigenvalues(), &sorted(star_eigenvalues(n)?)));
    let exact = star_eigensystem(n)?;
    t[1].add(n, basis_error(&exact, &h));
    let gs = gram_schmidt(&star_raw_eigenstates(n)?)?;
    for (got, want) in gs.iter().zip(star_basis(n)?) {
        t[2].add(n, signed_diff(got, &want));
    }

    for (slot, kind) in StarPairKind::ALL.into_iter().enumerate() {
        if n < kind.min_size() {
            continue;
        }
        let (j, k) = kind.representative();
        for &time in times {
            let q = quantum_probability(&d, j, k, time)?;
            t[3 + slot].add(n, (q - (f.star_quantum)(kind, n, time)).abs());
            let c = classical_probability(&d, j, k, time)?;
            t[7 + slot].add(n, (c - (f.star_classical)(kind, n, time)?).abs());
        }
        let chi = limiting_probability(&d, &p, j, k)?;
        t[11 + slot].add(n, (chi - (f.star_limiting)(kind, n)).abs());
    }

    for &time in times {
        let hub = (f.star_quantum)(StarPairKind::CentralReturn, n, time)
            - (f.complete_quantum)(true, n, time);
        let spoke = (f.star_quantum)(StarPairKind::CentralToLeaf, n, time)
            - (f.complete_quantum)(false, n, time);
        t[15].add(n, hub.abs().max(spoke.abs()));
    }
    Ok(t)
}

fn complete_size(n: usize, f: &Formulas, times: &[f64]) -> Result<Vec<Tally>> {
    let mut t = vec![Tally::EMPTY; complete_checks().len()];
    let h = Graph::complete(n)?.laplacian();
    let d = eigendecompose(&h)?;

    t[0].add(n, max_abs_diff(d.eigenvalues(), &sorted(complete_eigenvalues(n)?)));
    let exact = complete_eigensystem(n)?;
    t[1].add(n, basis_error(&exact, &h));
    let gs = gram_schmidt(&complete_raw_eigenstates(n)?)?;
    for (got, want) in gs.iter().zip(complete_basis(n)?) {
        t[2].add(n, signed_diff(got, &want));
    }
    for &time in times {
        let same = quantum_probability(&d, 0, 0, time)?;
        t[3].add(n, (same - (f.complete_quantum)(true, n, time)).abs());
        let other = quantum_probability(&d, 0, n - 1, time)?;
        t[4].add(n, (other - (f.complete_quantum)(false, n, time)).abs());
        let hub = (f.star_quantum)(StarPairKind::CentralReturn, n, time)
            - (f.complete_quantum)(true, n, time);
        let spoke = (f.star_quantum)(StarPairKind::CentralToLeaf, n, time)
            - (f.complete_quantum)(false, n, time);
        t[5].add(n, hub.abs().max(spoke.abs()));
    }
    Ok(t)
}

/// Runs every check for sizes `a..=b`.
pub fn verify(
    family: &Family,
    (a, b): (usize, usize),
    formulas: &Formulas,
    degeneracy_tol: f64,
) -> Result<VerificationReport> {
    if a < 2 || b > MAX_VERIFY_N || a > b {
        return Err(CliError::usage(format!(
            "verify needs an --n-range within 2:{MAX_VERIFY_N}"
        )));
    }
    let times = chebyshev_times();
    let checks = match family {
        Family::Star => star_checks(),
        Family::Complete => complete_checks(),
        Family::File(_) => {
            return Err(CliError::usage("verify needs --family star or complete"))
        }
    };
    let per_size = (a..=b)
        .into_par_iter()
        .map(|n| match family {
            Family::Star => star_size(n, formulas, degeneracy_tol, &times),
            _ => complete_size(n, formulas, &times),
        })
        .collect::<Result<Vec<_>>>()?;
    let totals = per_size.into_iter().fold(vec![Tally::EMPTY; checks.len()], |acc, t| {
        acc.into_iter().zip(t).map(|(x, y)| x.merge(y)).collect()
    });

    let records: Vec<CheckRecord> = checks
        .into_iter()
        .zip(totals)
        .filter(|(_, tally)| tally.samples > 0)
        .map(|((name, tolerance), tally)| CheckRecord {
            name,
            max_deviation: tally.max,
            tolerance,
            worst_n: tally.worst_n,
            samples: tally.samples,
            passed: tally.max <= tolerance,
        })
        .collect();
    Ok(VerificationReport {
        family: family.name().to_string(),
        n_range: (a, b),
        passed: records.iter().all(|r| r.passed),
        records,
    })
}

/// Runs `verify` for a config and renders the report.
pub fn run(cfg: &RunConfig, formulas: &Formulas) -> Result<(String, bool)> {
    let range = cfg
        .n_range
        .or(cfg.n.map(|n| (n, n)))
        .unwrap_or((2, 64));
    let report = verify(&cfg.family, range, formulas, cfg.degeneracy_tol)?;
    let text = render(cfg, &report)?;
    Ok((text, report.passed))
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn render(cfg: &RunConfig, report: &VerificationReport) -> Result<String> {
    let mut out = String::new();
    match cfg.format {
        None => {
            let (a, b) = report.n_range;
            writeln!(out, "verify {} N={a}..{b}", report.family).unwrap();
            writeln!(
                out,
                "{:<30} {:>13} {:>9} {:>6} {:>8}  status",
                "check", "max deviation", "tolerance", "at N", "samples"
            )
            .unwrap();
            for r in &report.records {
                writeln!(
                    out,
                    "{:<30} {:>13.3e} {:>9.0e} {:>6} {:>8}  {}",
                    r.name,
                    r.max_deviation,
                    r.tolerance,
                    r.worst_n,
                    r.samples,
                    status(r.passed)
                )
                .unwrap();
            }
            writeln!(out, "overall: {}", if report.passed { "PASS" } else { "FAIL" }).unwrap();
        }
        Some(Format::Csv) => {
            out.push_str("check,max_deviation,tolerance,worst_n,samples,status\n");
            for r in &report.records {
                writeln!(
                    out,
                    "{},{:e},{:e},{},{},{}",
                    r.name,
                    r.max_deviation,
                    r.tolerance,
                    r.worst_n,
                    r.samples,
                    status(r.passed)
                )
                .unwrap();
            }
        }
        Some(Format::Json) => {
            let data = report
                .records
                .iter()
                .map(serde_json::to_value)
                .collect::<serde_json::Result<Vec<_>>>()?;
            let provenance = json!({
                "value": "numerical vs closed form",
                "family": report.family,
                "n_range": report.n_range,
                "passed": report.passed,
            });
            out = json_document(cfg, data, provenance)?;
        }
    }
    Ok(out)
}
