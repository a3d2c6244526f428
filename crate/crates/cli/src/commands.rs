//! `spectrum`, `evolve` and `limit`. Each returns the full text to emit.

use std::fmt::Write as _;

use ctqw_core::closedform::{
    classify_star_pair, complete_quantum_formula, complete_quantum_probability,
    star_classical_probability, star_limiting_probability, star_quantum_probability,
    StarPairKind,
};
use ctqw_core::dynamics::{evolve_series, limiting_probability};
use ctqw_core::spectral::{eigendecompose, group_eigenspaces};
use ctqw_core::{EigenspacePartition, Graph, SpectralDecomposition, WalkKind};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Family, Format, Kind, RunConfig};
use crate::error::{CliError, Result};
use crate::output::{eigenvalue_label, float, json_document, opt_float};

fn decompose(g: &Graph, tol: f64) -> Result<(SpectralDecomposition, EigenspacePartition)> {
    let d = eigendecompose(&g.laplacian())?;
    let p = group_eigenspaces(&d, tol);
    Ok((d, p))
}

pub fn spectrum(cfg: &RunConfig) -> Result<String> {
    let g = cfg.graph()?;
    let (d, p) = decompose(&g, cfg.degeneracy_tol)?;
    let mut out = String::new();
    match cfg.format {
        None => {
            let listing: Vec<String> = p
                .groups()
                .iter()
                .map(|s| format!("{} (×{})", eigenvalue_label(s.eigenvalue), s.multiplicity()))
                .collect();
            writeln!(out, "{}", listing.join(", ")).unwrap();
            if cfg.vectors {
                for (e, q) in d.eigenvalues().iter().zip(d.eigenvectors()) {
                    let entries: Vec<String> = q.iter().map(|&x| float(x)).collect();
                    writeln!(out, "{}: [{}]", eigenvalue_label(*e), entries.join(", ")).unwrap();
                }
            }
        }
        Some(Format::Csv) => {
            out.push_str("eigenvalue,multiplicity\n");
            for s in p.groups() {
                writeln!(out, "{},{}", float(s.eigenvalue), s.multiplicity()).unwrap();
            }
            if cfg.vectors {
                out.push_str("\nindex,eigenvalue,node,component\n");
                for (idx, (e, q)) in d.eigenvalues().iter().zip(d.eigenvectors()).enumerate() {
                    for (node, x) in q.iter().enumerate() {
                        writeln!(out, "{},{},{},{}", idx + 1, float(*e), node + 1, float(*x))
                            .unwrap();
                    }
                }
            }
        }
        Some(Format::Json) => {
            let data = p
                .groups()
                .iter()
                .map(|s| json!({"eigenvalue": s.eigenvalue, "multiplicity": s.multiplicity()}))
                .collect();
            let mut provenance = json!({"value": "numerical"});
            provenance["eigenvalues"] = json!(d.eigenvalues());
            if cfg.vectors {
                provenance["eigenvectors"] =
                    json!(d.eigenvectors().map(|q| q.to_vec()).collect::<Vec<_>>());
            }
            out = json_document(cfg, data, provenance)?;
        }
    }
    Ok(out)
}

type Reference = (&'static str, Box<dyn Fn(f64) -> f64>);

/// Closed-form counterpart of a time series, when one exists.
fn series_reference(
    family: &Family,
    n: usize,
    j: usize,
    k: usize,
    kind: WalkKind,
) -> Option<Reference> {
    match (family, kind) {
        (Family::Star, _) if n >= 2 => {
            let pair = classify_star_pair(n, j, k).ok()?;
            Some(match kind {
                WalkKind::Quantum => (
                    pair.quantum_formula(),
                    Box::new(move |t| star_quantum_probability(pair, n, t)),
                ),
                WalkKind::Classical => (
                    pair.classical_formula(),
                    Box::new(move |t| {
                        star_classical_probability(pair, n, t).unwrap_or(f64::NAN)
                    }),
                ),
            })
        }
        (Family::Complete, WalkKind::Quantum) => {
            let same = j == k;
            Some((
                complete_quantum_formula(same),
                Box::new(move |t| complete_quantum_probability(same, n, t)),
            ))
        }
        _ => None,
    }
}

pub fn evolve(cfg: &RunConfig) -> Result<String> {
    let g = cfg.graph()?;
    let n = g.node_count();
    let (j, k) = cfg.pair(n)?;
    let kind = match cfg.kind {
        Kind::Classical => WalkKind::Classical,
        _ => WalkKind::Quantum,
    };
    let d = eigendecompose(&g.laplacian())?;
    let series = evolve_series(&d, j, k, &cfg.grid.points(), kind)?;

    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from("t,value\n");
            for (t, v) in series.iter() {
                writeln!(out, "{},{}", float(t), float(v)).unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let reference = series_reference(&cfg.family, n, j, k, kind);
            let data = series
                .iter()
                .map(|(t, v)| {
                    let mut rec = json!({"t": t, "value": v});
                    if let Some((_, f)) = &reference {
                        rec["reference"] = json!(f(t));
                    }
                    rec
                })
                .collect();
            let provenance = json!({
                "value": "numerical",
                "reference": reference.as_ref().map(|(name, _)| *name),
            });
            Ok(json_document(cfg, data, provenance)?)
        }
    }
}

/// One row of a size sweep.
struct SweepRow {
    n: usize,
    chi_11: f64,
    chi_22: Option<f64>,
    chi_21: Option<f64>,
    chi_32: Option<f64>,
}

fn sweep_row(family: &Family, n: usize, tol: f64) -> Result<SweepRow> {
    let g = family.build(n)?;
    let (d, p) = decompose(&g, tol)?;
    let chi = |j: usize, k: usize| -> Result<Option<f64>> {
        if j.max(k) < n {
            Ok(Some(limiting_probability(&d, &p, j, k)?))
        } else {
            Ok(None)
        }
    };
    Ok(SweepRow {
        n,
        chi_11: chi(0, 0)?.expect("n >= 1"),
        chi_22: chi(1, 1)?,
        chi_21: chi(0, 1)?,
        chi_32: chi(1, 2)?,
    })
}

pub fn limit(cfg: &RunConfig) -> Result<String> {
    if let Some((a, b)) = cfg.n_range {
        if matches!(cfg.family, Family::File(_)) {
            return Err(CliError::usage("--n-range needs --family star or complete"));
        }
        let rows = (a..=b)
            .into_par_iter()
            .map(|n| sweep_row(&cfg.family, n, cfg.degeneracy_tol))
            .collect::<Result<Vec<_>>>()?;
        return sweep_output(cfg, &rows);
    }

    let g = cfg.graph()?;
    let n = g.node_count();
    let (d, p) = decompose(&g, cfg.degeneracy_tol)?;
    let pairs: Vec<(usize, usize)> = match (cfg.source, cfg.target) {
        (None, None) => (0..n).flat_map(|j| (0..n).map(move |k| (j, k))).collect(),
        _ => vec![cfg.pair(n)?],
    };
    let values = pairs
        .iter()
        .map(|&(j, k)| Ok(limiting_probability(&d, &p, j, k)?))
        .collect::<Result<Vec<f64>>>()?;

    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from("source,target,chi\n");
            for (&(j, k), v) in pairs.iter().zip(&values) {
                writeln!(out, "{},{},{}", j + 1, k + 1, float(*v)).unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let star_kind = |j, k| match cfg.family {
                Family::Star if n >= 2 => classify_star_pair(n, j, k).ok(),
                _ => None,
            };
            let data = pairs
                .iter()
                .zip(&values)
                .map(|(&(j, k), v)| {
                    let mut rec = json!({"source": j + 1, "target": k + 1, "chi": v});
                    if let Some(kind) = star_kind(j, k) {
                        rec["reference"] = json!(star_limiting_probability(kind, n));
                        rec["reference_formula"] = json!(kind.limiting_formula());
                    }
                    rec
                })
                .collect();
            let reference = matches!(cfg.family, Family::Star if n >= 2).then_some("eq12");
            let provenance = json!({"value": "numerical", "reference": reference});
            Ok(json_document(cfg, data, provenance)?)
        }
    }
}

fn sweep_output(cfg: &RunConfig, rows: &[SweepRow]) -> Result<String> {
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from("n,chi_11,chi_22,chi_21,chi_32\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.n,
                    float(r.chi_11),
                    opt_float(r.chi_22),
                    opt_float(r.chi_21),
                    opt_float(r.chi_32)
                )
                .unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let is_star = cfg.family == Family::Star;
            let data: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut rec = json!({
                        "n": r.n,
                        "chi_11": r.chi_11,
                        "chi_22": r.chi_22,
                        "chi_21": r.chi_21,
                        "chi_32": r.chi_32,
                    });
                    if is_star && r.n >= 2 {
                        let exact = |kind: StarPairKind| {
                            (r.n >= kind.min_size()).then(|| star_limiting_probability(kind, r.n))
                        };
                        rec["reference"] = json!({
                            "chi_11": exact(StarPairKind::CentralReturn),
                            "chi_22": exact(StarPairKind::LeafReturn),
                            "chi_21": exact(StarPairKind::CentralToLeaf),
                            "chi_32": exact(StarPairKind::LeafToOtherLeaf),
                        });
                    }
                    rec
                })
                .collect();
            let reference = is_star.then(|| {
                json!({
                    "chi_11": StarPairKind::CentralReturn.limiting_formula(),
                    "chi_22": StarPairKind::LeafReturn.limiting_formula(),
                    "chi_21": StarPairKind::CentralToLeaf.limiting_formula(),
                    "chi_32": StarPairKind::LeafToOtherLeaf.limiting_formula(),
                })
            });
            let provenance = json!({"value": "numerical", "reference": reference});
            Ok(json_document(cfg, data, provenance)?)
        }
    }
}
