//! The cosexponential family f_nk and its polar companion g_nk.
//!
//! f_nk(y) is the alternating n-sected exponential series
//! sum_p (-1)^p y^(k+pn)/(k+pn)!, defined for any natural n >= 1 (not just
//! the even dimensions the algebra itself uses); g_nk is the same series
//! with all plus signs.  The n components of exp(h_1 y) are exactly
//! f_n0(y)..f_n,n-1(y), which is what makes the family the n-dimensional
//! analogue of cos and sin.
//!
//! Closed forms evaluate a length-n sum of damped oscillations and are the
//! production path; the series is kept as the cross-checking oracle.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::PlanarNC;
use crate::canonical::cos_sin_pi;
use crate::error::{Error, Result};

const SERIES_CAP: usize = 500;

/// Truncated n-sected exponential series at complex argument:
/// sum_p sign^p z^(k+pn)/(k+pn)!.  Stops once the next term drops below
/// tol * (1 + |partial|), after a minimum of k + 3n terms, hard cap 500.
fn sected_series(n: usize, k: usize, z: Complex64, sign: f64, tol: f64) -> Complex64 {
    debug_assert!(n >= 1 && k < n);
    let mut term = Complex64::new(1.0, 0.0);
    for j in 1..=k {
        term = term * z / j as f64;
    }
    let mut sum = term;
    let mut fact_arg = k;
    let min_terms = k + 3 * n;
    let mut taken = 1usize;
    while taken < SERIES_CAP {
        let mut next = term * sign;
        for _ in 0..n {
            fact_arg += 1;
            next = next * z / fact_arg as f64;
        }
        term = next;
        sum += term;
        taken += 1;
        if taken >= min_terms && term.norm() < tol * (1.0 + sum.norm()) {
            break;
        }
    }
    sum
}

/// Series evaluation of f_nk(y).  The oracle path; prefer [`f_closed`].
pub fn f_series(n: usize, k: usize, y: f64, tol: f64) -> f64 {
    assert!(n >= 1, "n must be at least 1");
    assert!(k < n, "index {k} out of range for n = {n}");
    sected_series(n, k, Complex64::new(y, 0.0), -1.0, tol).re
}

/// Closed-form f_nk(y): a sum of n exponentially damped/growing
/// oscillations at the odd angles pi (2l-1)/n.
pub fn f_closed(n: usize, k: usize, y: f64) -> f64 {
    assert!(n >= 1, "n must be at least 1");
    assert!(k < n, "index {k} out of range for n = {n}");
    let nf = n as f64;
    let mut sum = 0.0;
    for l in 1..=n {
        let ang = PI * (2 * l - 1) as f64 / nf;
        sum += (y * ang.cos()).exp() * (y * ang.sin() - ang * k as f64).cos();
    }
    sum / nf
}

/// The polar companion g_nk(y): the same n-section of exp with all plus
/// signs, so sum_k g_nk(y) = exp(y).
pub fn g_polar(n: usize, k: usize, y: f64) -> f64 {
    assert!(n >= 1, "n must be at least 1");
    assert!(k < n, "index {k} out of range for n = {n}");
    sected_series(n, k, Complex64::new(y, 0.0), 1.0, 1e-16).re
}

/// Closed-form g_nk(y) over the full angles 2 pi l / n.
pub(crate) fn g_closed(n: usize, k: usize, y: f64) -> f64 {
    debug_assert!(n >= 1 && k < n);
    let nf = n as f64;
    let mut sum = 0.0;
    for l in 1..=n {
        let ang = 2.0 * PI * l as f64 / nf;
        sum += (y * ang.cos()).exp() * (y * ang.sin() - ang * k as f64).cos();
    }
    sum / nf
}

/// f_nk continued to a complex argument, returned as (re, im).
pub fn f_complex(n: usize, k: usize, re: f64, im: f64, tol: f64) -> (f64, f64) {
    assert!(n >= 1, "n must be at least 1");
    assert!(k < n, "index {k} out of range for n = {n}");
    let z = sected_series(n, k, Complex64::new(re, im), -1.0, tol);
    (z.re, z.im)
}

/// g_nk at a complex argument; test support for the f/g interchange
/// identities.
#[cfg(test)]
pub(crate) fn g_complex(n: usize, k: usize, z: Complex64, tol: f64) -> Complex64 {
    debug_assert!(n >= 1 && k < n);
    sected_series(n, k, z, 1.0, tol)
}

/// exp(h_k y) assembled from the cosexponential family: component kp mod n
/// picks up f_np(y) for odd k and g_np(y) for even k, negated on each wrap
/// of kp past a multiple of n.
pub fn exp_hk(n: usize, k: usize, y: f64) -> Result<PlanarNC> {
    let mut coeffs = PlanarNC::zero(n)?.coeffs().to_vec();
    if k == 0 || k >= n {
        return Err(Error::AxisOutOfRange { k, n });
    }
    let odd = k % 2 == 1;
    for p in 0..n {
        let idx = (k * p) % n;
        let sign = if ((k * p) / n) % 2 == 0 { 1.0 } else { -1.0 };
        let val = if odd { f_closed(n, p, y) } else { g_closed(n, p, y) };
        coeffs[idx] += sign * val;
    }
    PlanarNC::new(coeffs)
}

/// The projection sums a_k, b_k of the f-family onto the plane angles and
/// their moduli G_k^2 = a_k^2 + b_k^2, for k = 1..n.
#[derive(Debug, Clone, PartialEq)]
pub struct AbSums {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub g_squared: Vec<f64>,
}

pub fn ab_sums(n: usize, y: f64) -> AbSums {
    assert!(n >= 1, "n must be at least 1");
    let f: Vec<f64> = (0..n).map(|p| f_closed(n, p, y)).collect();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    let mut g_squared = Vec::with_capacity(n);
    for k in 1..=n {
        let mut ak = 0.0;
        let mut bk = 0.0;
        for (p, &fp) in f.iter().enumerate() {
            let m = ((2 * k - 1) * p) % (2 * n);
            let (c, s) = cos_sin_pi(m, n);
            ak += fp * c;
            bk += fp * s;
        }
        a.push(ak);
        b.push(bk);
        g_squared.push(ak * ak + bk * bk);
    }
    AbSums { a, b, g_squared }
}

/// Negacyclic convolution of two equal-length coefficient slices: the ring
/// product rule applied to raw vectors, valid for any length >= 1.
pub fn negacyclic_convolve(x: &[f64], y: &[f64]) -> Vec<f64> {
    assert_eq!(x.len(), y.len(), "lengths must match");
    let n = x.len();
    let mut out = vec![0.0; n];
    for (l, &xl) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            let s = l + j;
            if s < n {
                out[s] += xl * yj;
            } else {
                out[s - n] -= xl * yj;
            }
        }
    }
    out
}
