//! Elementary functions of a planar n-complex variable.
//!
//! Every function here is computed plane by plane: the canonical transform
//! turns a value into n/2 independent complex numbers, the ordinary complex
//! function is applied to each, and the inverse transform reassembles the
//! result.  This agrees with the power series of the same function wherever
//! that converges, and costs O(n^2) per call.
//!
//! ln, fractional powers and inverses need every plane radius to clear the
//! nodal cutoff; exp and the trigonometric family are entire.

use num_complex::Complex64;

use crate::algebra::PlanarNC;
use crate::canonical::{self, to_canonical};
use crate::cosexp;
use crate::error::{Error, Result};

fn map_planes<F>(u: &PlanarNC, f: F) -> Result<PlanarNC>
where
    F: Fn(Complex64) -> Complex64,
{
    let coords = to_canonical(u);
    let mut planes = Vec::with_capacity(coords.planes().len());
    for &(v, vt) in coords.planes() {
        let w = f(Complex64::new(v, vt));
        if !w.re.is_finite() || !w.im.is_finite() {
            return Err(Error::Overflow);
        }
        planes.push((w.re, w.im));
    }
    Ok(canonical::from_planes(u.n(), &planes))
}

/// exp(u), entire in every component.
pub fn exp(u: &PlanarNC) -> Result<PlanarNC> {
    map_planes(u, |z| z.exp())
}

/// Principal logarithm: per plane (ln rho_k, phi_k) with phi_k in [0, 2 pi).
/// Every plane radius must clear the nodal cutoff.
pub fn ln(u: &PlanarNC) -> Result<PlanarNC> {
    let coords = to_canonical(u);
    let rho = canonical::nodal_check(u, &coords)?;
    let planes: Vec<(f64, f64)> = coords
        .planes()
        .iter()
        .zip(&rho)
        .map(|(&(v, vt), &r)| (r.ln(), canonical::azimuth(v, vt)))
        .collect();
    Ok(canonical::from_planes(u.n(), &planes))
}

fn powi(u: &PlanarNC, e: u64) -> PlanarNC {
    let mut result = PlanarNC::one(u.n()).expect("dimension already validated");
    let mut base = u.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).expect("same dimension");
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).expect("same dimension");
        }
    }
    result
}

/// u^m.  Non-negative integer exponents use binary exponentiation and work
/// for any u; everything else goes through rho_k^m cis(m phi_k) and needs
/// all plane radii nonzero.
pub fn pow(u: &PlanarNC, m: f64) -> Result<PlanarNC> {
    if !m.is_finite() {
        return Err(Error::NonFiniteCoeffs);
    }
    if m >= 0.0 && m.fract() == 0.0 && m <= 9.0e15 {
        return Ok(powi(u, m as u64));
    }
    let coords = to_canonical(u);
    let rho = canonical::nodal_check(u, &coords)?;
    let mut planes = Vec::with_capacity(rho.len());
    for (&(v, vt), &r) in coords.planes().iter().zip(&rho) {
        let mag = r.powf(m);
        let ang = m * canonical::azimuth(v, vt);
        let (w_re, w_im) = (mag * ang.cos(), mag * ang.sin());
        if !w_re.is_finite() || !w_im.is_finite() {
            return Err(Error::Overflow);
        }
        planes.push((w_re, w_im));
    }
    Ok(canonical::from_planes(u.n(), &planes))
}

pub fn cos(u: &PlanarNC) -> Result<PlanarNC> {
    map_planes(u, |z| z.cos())
}

pub fn sin(u: &PlanarNC) -> Result<PlanarNC> {
    map_planes(u, |z| z.sin())
}

pub fn cosh(u: &PlanarNC) -> Result<PlanarNC> {
    map_planes(u, |z| z.cosh())
}

pub fn sinh(u: &PlanarNC) -> Result<PlanarNC> {
    map_planes(u, |z| z.sinh())
}

/// Unit roots the k-th axis expansion runs over: the n solutions of
/// z^n = -1 when k is odd, of z^n = +1 when k is even.
fn axis_roots(n: usize, k: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    if k % 2 == 1 {
        (1..=n).map(|l| PI * (2 * l - 1) as f64 / n as f64).collect()
    } else {
        (1..=n).map(|l| 2.0 * PI * l as f64 / n as f64).collect()
    }
}

fn assemble_axis(n: usize, k: usize, vals: &[f64]) -> PlanarNC {
    let mut coeffs = vec![0.0; n];
    for (p, &val) in vals.iter().enumerate() {
        let idx = (k * p) % n;
        let sign = if ((k * p) / n) % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[idx] += sign * val;
    }
    PlanarNC::new(coeffs).expect("finite by construction")
}

/// (cos(h_k y), sin(h_k y)): the even/odd circular parts of exp(h_k y),
/// evaluated via the root-sum form of the section functions at imaginary
/// argument.
pub fn trig_of_axis(n: usize, k: usize, y: f64) -> Result<(PlanarNC, PlanarNC)> {
    PlanarNC::zero(n)?;
    if k == 0 || k >= n {
        return Err(Error::AxisOutOfRange { k, n });
    }
    let angles = axis_roots(n, k);
    let nf = n as f64;
    let mut cos_vals = Vec::with_capacity(n);
    let mut sin_vals = Vec::with_capacity(n);
    for p in 0..n {
        let mut c_sum = Complex64::new(0.0, 0.0);
        let mut s_sum = Complex64::new(0.0, 0.0);
        for &theta in &angles {
            let root = Complex64::cis(theta);
            let back = Complex64::cis(-theta * p as f64);
            let arg = root * y;
            c_sum += back * arg.cos();
            s_sum += back * arg.sin();
        }
        cos_vals.push(c_sum.re / nf);
        sin_vals.push(s_sum.re / nf);
    }
    Ok((assemble_axis(n, k, &cos_vals), assemble_axis(n, k, &sin_vals)))
}

/// (cosh(h_k y), sinh(h_k y)): the even and odd parts of exp(h_k y) in y.
pub fn hyp_of_axis(n: usize, k: usize, y: f64) -> Result<(PlanarNC, PlanarNC)> {
    PlanarNC::zero(n)?;
    if k == 0 || k >= n {
        return Err(Error::AxisOutOfRange { k, n });
    }
    let section = |p: usize, arg: f64| {
        if k % 2 == 1 {
            cosexp::f_closed(n, p, arg)
        } else {
            cosexp::g_closed(n, p, arg)
        }
    };
    let mut even_vals = Vec::with_capacity(n);
    let mut odd_vals = Vec::with_capacity(n);
    for p in 0..n {
        let plus = section(p, y);
        let minus = section(p, -y);
        even_vals.push(0.5 * (plus + minus));
        odd_vals.push(0.5 * (plus - minus));
    }
    Ok((assemble_axis(n, k, &even_vals), assemble_axis(n, k, &odd_vals)))
}
