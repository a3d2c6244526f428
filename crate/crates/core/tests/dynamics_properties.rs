mod common;

use ctqw_core::dynamics::{
    amplitude_matrix, classical_probability, limiting_probability, quantum_probability, Amplitude,
};
use ctqw_core::spectral::{eigendecompose, group_eigenspaces, DEFAULT_DEGENERACY_TOL};
use ctqw_core::{Graph, SpectralDecomposition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn decompose(g: &Graph) -> SpectralDecomposition {
    eigendecompose(&g.laplacian()).unwrap()
}

fn test_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs = vec![
        Graph::star(2).unwrap(),
        Graph::star(9).unwrap(),
        Graph::star(64).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::complete(17).unwrap(),
    ];
    graphs.extend((0..8).map(|i| common::random_connected(&mut rng, 3 + 4 * i, 0.15)));
    graphs
}

#[test]
fn probabilities_sum_to_one() {
    for g in test_graphs() {
        let d = decompose(&g);
        let n = g.node_count();
        for t in [0.1, 1.0, 10.0] {
            for j in 0..n {
                let c: f64 = (0..n).map(|k| classical_probability(&d, j, k, t).unwrap()).sum();
                let q: f64 = (0..n).map(|k| quantum_probability(&d, j, k, t).unwrap()).sum();
                assert!((c - 1.0).abs() < 1e-10, "classical row {j} sums to {c}");
                assert!((q - 1.0).abs() < 1e-10, "quantum row {j} sums to {q}");
            }
        }
    }
}

fn mat_mul(a: &[Amplitude], b: &[Amplitude], n: usize) -> Vec<Amplitude> {
    let mut out = vec![Amplitude::ZERO; n * n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = Amplitude::ZERO;
            for m in 0..n {
                acc += a[r * n + m] * b[m * n + c];
            }
            out[r * n + c] = acc;
        }
    }
    out
}

#[test]
fn evolution_is_unitary_and_composes() {
    for g in test_graphs() {
        let d = decompose(&g);
        let n = g.node_count();
        let (t1, t2) = (0.37, 1.91);
        let u1 = amplitude_matrix(&d, t1);
        let u2 = amplitude_matrix(&d, t2);
        let u12 = amplitude_matrix(&d, t1 + t2);

        let adjoint: Vec<Amplitude> = (0..n * n)
            .map(|idx| u1[(idx % n) * n + idx / n].conj())
            .collect();
        let product = mat_mul(&adjoint, &u1, n);
        for r in 0..n {
            for c in 0..n {
                let p = product[r * n + c];
                let target = if r == c { 1.0 } else { 0.0 };
                assert!((p.re - target).abs() < 1e-10 && p.im.abs() < 1e-10);
            }
        }

        let composed = mat_mul(&u2, &u1, n);
        for (a, b) in composed.iter().zip(&u12) {
            assert!((a.re - b.re).abs() < 1e-9 && (a.im - b.im).abs() < 1e-9);
        }
    }
}

#[test]
fn transition_probabilities_are_symmetric() {
    for g in test_graphs() {
        let d = decompose(&g);
        let n = g.node_count();
        for t in [0.2, 3.3] {
            for j in 0..n {
                for k in j + 1..n {
                    let q = quantum_probability(&d, j, k, t).unwrap()
                        - quantum_probability(&d, k, j, t).unwrap();
                    let c = classical_probability(&d, j, k, t).unwrap()
                        - classical_probability(&d, k, j, t).unwrap();
                    assert!(q.abs() < 1e-12 && c.abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn classical_walk_reaches_equipartition() {
    for g in test_graphs() {
        let d = decompose(&g);
        let n = g.node_count();
        let uniform = 1.0 / n as f64;
        for j in 0..n {
            for k in 0..n {
                let p = classical_probability(&d, j, k, 50.0).unwrap();
                assert!((p - uniform).abs() < 1e-6, "n={n} p={p}");
            }
        }
    }
}

#[test]
fn limiting_rows_are_distributions() {
    for g in test_graphs() {
        let d = decompose(&g);
        let p = group_eigenspaces(&d, DEFAULT_DEGENERACY_TOL);
        let n = g.node_count();
        for j in 0..n {
            let mut row = 0.0;
            for k in 0..n {
                let chi = limiting_probability(&d, &p, j, k).unwrap();
                assert!(chi >= 0.0);
                let swapped = limiting_probability(&d, &p, k, j).unwrap();
                assert!((chi - swapped).abs() < 1e-12);
                row += chi;
            }
            assert!((row - 1.0).abs() < 1e-10);
        }
    }
}

/// Rectangle-rule time average over `[0, 200π]` with 10⁵ samples.
fn brute_force_average(d: &SpectralDecomposition, j: usize, k: usize) -> f64 {
    let samples = 100_000;
    let horizon = 200.0 * PI;
    let step = horizon / samples as f64;
    (0..samples)
        .map(|i| quantum_probability(d, j, k, i as f64 * step).unwrap())
        .sum::<f64>()
        / samples as f64
}

#[test]
fn limiting_matches_brute_force_average() {
    for n in [4, 10] {
        let d = decompose(&Graph::star(n).unwrap());
        let p = group_eigenspaces(&d, DEFAULT_DEGENERACY_TOL);
        for (j, k) in [(0, 0), (0, 1), (1, 1), (1, 2)] {
            let chi = limiting_probability(&d, &p, j, k).unwrap();
            let avg = brute_force_average(&d, j, k);
            assert!((chi - avg).abs() < 2e-3, "n={n} ({j},{k}) {chi} vs {avg}");
        }
    }
}

#[test]
fn concurrent_evaluation_is_bit_identical() {
    let d = decompose(&Graph::star(20).unwrap());
    let times: Vec<f64> = (0..200).map(|i| i as f64 * 0.05).collect();
    let sequential: Vec<f64> = times
        .iter()
        .map(|&t| quantum_probability(&d, 1, 3, t).unwrap())
        .collect();
    let parallel: Vec<f64> = std::thread::scope(|s| {
        let handles: Vec<_> = times
            .chunks(50)
            .map(|chunk| {
                let d = &d;
                s.spawn(move || {
                    chunk
                        .iter()
                        .map(|&t| quantum_probability(d, 1, 3, t).unwrap())
                        .collect::<Vec<f64>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(sequential, parallel);
}
