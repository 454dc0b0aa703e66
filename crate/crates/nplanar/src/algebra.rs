//! Tuple arithmetic for the algebra R[t]/(t^n + 1).

use crate::canonical;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Relative threshold below which a plane radius counts as zero, scaled by
/// max(1, |u|).
pub const DEFAULT_NODAL_TOL: f64 = 1e-12;

/// Product of two basis units: h_j h_k = sign * h_index.
///
/// The index is (j + k) mod n and the sign is -1 exactly when j + k wraps.
pub fn basis_product(j: usize, k: usize, n: usize) -> (f64, usize) {
    debug_assert!(j < n && k < n, "basis index out of range");
    let s = j + k;
    if s < n {
        (1.0, s)
    } else {
        (-1.0, s - n)
    }
}

/// A planar n-complex number: n real coefficients over 1, h_1, .., h_{n-1},
/// n even and at least 2, all coefficients finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPlanar", into = "RawPlanar")]
pub struct PlanarNC {
    n: usize,
    coeffs: Vec<f64>,
}

/// Wire form: {"n": 4, "coeffs": [x0, x1, x2, x3]}.
#[derive(Serialize, Deserialize)]
struct RawPlanar {
    n: usize,
    coeffs: Vec<f64>,
}

impl From<PlanarNC> for RawPlanar {
    fn from(u: PlanarNC) -> Self {
        RawPlanar { n: u.n, coeffs: u.coeffs }
    }
}

impl TryFrom<RawPlanar> for PlanarNC {
    type Error = Error;

    fn try_from(raw: RawPlanar) -> Result<Self> {
        if raw.coeffs.len() != raw.n {
            return Err(Error::CoeffCountMismatch { n: raw.n, got: raw.coeffs.len() });
        }
        PlanarNC::new(raw.coeffs)
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidDimension(n));
    }
    Ok(())
}

impl PlanarNC {
    /// Builds a value from its coefficient tuple; the dimension is the tuple
    /// length.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        check_dimension(coeffs.len())?;
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoeffs);
        }
        Ok(PlanarNC { n: coeffs.len(), coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(PlanarNC { n, coeffs: vec![0.0; n] })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::scalar(n, 1.0)
    }

    /// The real value x0 embedded in dimension n.
    pub fn scalar(n: usize, x0: f64) -> Result<Self> {
        if !x0.is_finite() {
            return Err(Error::NonFiniteCoeffs);
        }
        let mut u = Self::zero(n)?;
        u.coeffs[0] = x0;
        Ok(u)
    }

    /// The basis unit h_k (h_0 = 1).
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        let mut u = Self::zero(n)?;
        if k >= n {
            return Err(Error::AxisOutOfRange { k, n });
        }
        u.coeffs[k] = 1.0;
        Ok(u)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> f64 {
        self.coeffs[p]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PlanarNC { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PlanarNC { n: self.n, coeffs })
    }

    pub fn neg(&self) -> Self {
        PlanarNC { n: self.n, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: f64) -> Self {
        PlanarNC { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Negacyclic convolution of the coefficient tuples.
    ///
    /// Component k sums sign * (x_l y_j + x_j y_l) over unordered index pairs
    /// {l, j} with l + j = k or l + j = n + k (the latter negated), always in
    /// ascending l order, so mul(u, v) and mul(v, u) are bit-identical.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let x = &self.coeffs;
        let y = &other.coeffs;
        let mut out = vec![0.0; n];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for l in 0..n {
                let j = if l <= k { k - l } else { n + k - l };
                if j < l {
                    continue;
                }
                let term = if l == j { x[l] * y[l] } else { x[l] * y[j] + x[j] * y[l] };
                if l + j == k {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            *slot = acc;
        }
        Ok(PlanarNC { n, coeffs: out })
    }

    /// Distance from the origin: sqrt(sum of squared coefficients).
    pub fn modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Determinant of the multiplication map: the product of the squared
    /// plane radii.  Never negative.
    pub fn determinant(&self) -> f64 {
        canonical::to_canonical(self)
            .planes()
            .iter()
            .map(|&(v, vt)| v * v + vt * vt)
            .product()
    }

    /// Amplitude: the n-th root of the determinant, a multiplicative
    /// positive scale.
    pub fn amplitude(&self) -> f64 {
        let planes = canonical::to_canonical(self);
        let mut log_sum = 0.0;
        for &(v, vt) in planes.planes() {
            let rho = vt.hypot(v);
            if rho == 0.0 {
                return 0.0;
            }
            log_sum += rho.ln();
        }
        ((2.0 / self.n as f64) * log_sum).exp()
    }

    /// Multiplicative inverse via the plane decomposition.
    ///
    /// Fails with the offending 1-based plane list when any plane radius is
    /// at or below tol * max(1, |u|).
    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let coords = canonical::to_canonical(self);
        let cutoff = tol * self.modulus().max(1.0);
        let mut nodal = Vec::new();
        for (i, &(v, vt)) in coords.planes().iter().enumerate() {
            if vt.hypot(v) <= cutoff {
                nodal.push(i + 1);
            }
        }
        if !nodal.is_empty() {
            return Err(Error::NodalSingularity(nodal));
        }
        let inverted: Vec<(f64, f64)> = coords
            .planes()
            .iter()
            .map(|&(v, vt)| {
                let r2 = v * v + vt * vt;
                (v / r2, -vt / r2)
            })
            .collect();
        Ok(canonical::from_planes(self.n, &inverted))
    }
}
