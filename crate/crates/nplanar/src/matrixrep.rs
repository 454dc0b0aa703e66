//! Dense matrix representation of the algebra.
//!
//! A value u maps to the n x n matrix whose row r holds the coefficients of
//! h_r u, which makes the map a ring homomorphism: products of values become
//! ordinary matrix products.  Conjugating with the orthogonal canonical
//! transform T turns every such matrix into 2 x 2 rotation-scaling blocks,
//! one per plane, carrying exactly the canonical coordinates.

use crate::algebra::PlanarNC;
use crate::canonical::tables;
use crate::error::{Error, Result};

/// Row-major square matrix over f64.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RepMatrix {
    fn zeros(n: usize) -> Self {
        RepMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.n + c] = v;
    }

    /// Row-major entries, length n * n.
    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

/// The representation matrix: entry (r, c) is x_{(c-r) mod n}, negated
/// below the wrap diagonal.
pub fn matrix_rep(u: &PlanarNC) -> RepMatrix {
    let n = u.n();
    let x = u.coeffs();
    let mut m = RepMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            let v = x[(c + n - r) % n];
            m.set(r, c, if c < r { -v } else { v });
        }
    }
    m
}

pub fn mat_mul(a: &RepMatrix, b: &RepMatrix) -> Result<RepMatrix> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut out = RepMatrix::zeros(n);
    for r in 0..n {
        for k in 0..n {
            let av = a.get(r, k);
            if av == 0.0 {
                continue;
            }
            for c in 0..n {
                out.data[r * n + c] += av * b.get(k, c);
            }
        }
    }
    Ok(out)
}

pub fn transpose(m: &RepMatrix) -> RepMatrix {
    let n = m.n;
    let mut out = RepMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            out.set(c, r, m.get(r, c));
        }
    }
    out
}

/// The orthogonal change of basis to canonical coordinates: rows 2k and
/// 2k+1 sample sqrt(2/n) cos / sin at the plane-k angles.
pub fn transform_matrix(n: usize) -> Result<RepMatrix> {
    PlanarNC::zero(n)?;
    let t = tables(n);
    let scale = (2.0 / n as f64).sqrt();
    let mut m = RepMatrix::zeros(n);
    for k0 in 0..n / 2 {
        for p in 0..n {
            m.set(2 * k0, p, scale * t.cos_at(k0, p));
            m.set(2 * k0 + 1, p, scale * t.sin_at(k0, p));
        }
    }
    Ok(m)
}

/// Determinant by LU decomposition with partial pivoting.
pub fn det_dense(m: &RepMatrix) -> f64 {
    let n = m.n;
    let mut a = m.data.clone();
    let mut det = 1.0;
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[col * n + col].abs();
        for r in col + 1..n {
            let v = a[r * n + col].abs();
            if v > best {
                best = v;
                pivot = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for c in 0..n {
                a.swap(col * n + c, pivot * n + c);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for r in col + 1..n {
            let f = a[r * n + col] / d;
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r * n + c] -= f * a[col * n + c];
            }
        }
    }
    det
}

/// Conjugates the representation of u by the canonical transform and
/// extracts the n/2 blocks [[v_k, vt_k], [-vt_k, v_k]].  Off-block leakage
/// above 1e-10 |u| reports the structure violation instead.
pub fn block_diagonalize(u: &PlanarNC) -> Result<Vec<[[f64; 2]; 2]>> {
    let n = u.n();
    let t = transform_matrix(n)?;
    let b = mat_mul(&mat_mul(&t, &matrix_rep(u))?, &transpose(&t))?;
    let mut max_off = 0.0f64;
    for r in 0..n {
        for c in 0..n {
            if r / 2 != c / 2 {
                max_off = max_off.max(b.get(r, c).abs());
            }
        }
    }
    if max_off > 1e-10 * u.modulus() {
        return Err(Error::BlockStructureViolation { max_off_block: max_off });
    }
    let blocks = (0..n / 2)
        .map(|k| {
            [
                [b.get(2 * k, 2 * k), b.get(2 * k, 2 * k + 1)],
                [b.get(2 * k + 1, 2 * k), b.get(2 * k + 1, 2 * k + 1)],
            ]
        })
        .collect();
    Ok(blocks)
}
