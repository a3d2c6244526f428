use alloc::vec::Vec;

use super::{dot, norm};
use crate::error::{Error, Result};

/// A vector whose residual after projection falls below this is treated as
/// linearly dependent.
const DEPENDENCE_TOL: f64 = 1e-10;

/// Orthonormalizes `vectors` with modified (sequential-projection)
/// Gram-Schmidt.
///
/// Output `i` is the normalized component of input `i` orthogonal to inputs
/// `0..i`; in particular output 0 is input 0 rescaled to unit length.
pub fn gram_schmidt<V: AsRef<[f64]>>(vectors: &[V]) -> Result<Vec<Vec<f64>>> {
    check_dims(vectors)?;
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        let mut w = v.as_ref().to_vec();
        for q in &basis {
            let proj = dot(q, &w);
            w.iter_mut().zip(q).for_each(|(x, qi)| *x -= proj * qi);
        }
        let residual = norm(&w);
        if residual < DEPENDENCE_TOL {
            return Err(Error::DependentVector { index, residual });
        }
        w.iter_mut().for_each(|x| *x /= residual);
        basis.push(w);
    }
    Ok(basis)
}

/// Classical Gram-Schmidt without normalization:
///
/// ```text
/// v'_i = v_i − ∑_{j<i} (⟨v_i|v'_j⟩ / ⟨v'_j|v'_j⟩) v'_j,   v'_1 = v_1
/// ```
///
/// Every projection coefficient uses the original `v_i`, not the running
/// remainder. The results are mutually orthogonal but not unit length.
pub fn orthogonalize_classical<V: AsRef<[f64]>>(vectors: &[V]) -> Result<Vec<Vec<f64>>> {
    check_dims(vectors)?;
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    let mut sq_norms: Vec<f64> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        let v = v.as_ref();
        let mut w = v.to_vec();
        for (prev, &nn) in out.iter().zip(&sq_norms) {
            let coeff = dot(v, prev) / nn;
            w.iter_mut().zip(prev).for_each(|(x, p)| *x -= coeff * p);
        }
        let sq = dot(&w, &w);
        let residual = libm::sqrt(sq);
        if residual < DEPENDENCE_TOL {
            return Err(Error::DependentVector { index, residual });
        }
        out.push(w);
        sq_norms.push(sq);
    }
    Ok(out)
}

/// [`orthogonalize_classical`] followed by normalization of each vector.
pub fn gram_schmidt_classical<V: AsRef<[f64]>>(vectors: &[V]) -> Result<Vec<Vec<f64>>> {
    let mut out = orthogonalize_classical(vectors)?;
    for w in &mut out {
        let len = norm(w);
        w.iter_mut().for_each(|x| *x /= len);
    }
    Ok(out)
}

fn check_dims<V: AsRef<[f64]>>(vectors: &[V]) -> Result<()> {
    let Some(first) = vectors.first() else {
        return Ok(());
    };
    let dim = first.as_ref().len();
    match vectors.iter().find(|v| v.as_ref().len() != dim) {
        Some(bad) => Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.as_ref().len(),
        }),
        None => Ok(()),
    }
}
