//! Power series over the algebra: convergence estimation, evaluation,
//! re-expansion, and the Riemann-type differentiability relations.
//!
//! A truncated series is just an ordered list of coefficients sharing one
//! dimension.  Convergence is governed per plane: the series converges on
//! the cylinder rho_k(u) < c_k, and the spherical estimate from the global
//! coefficient moduli is a subset of that cylinder.
//!
//! The radius estimators treat the stored coefficients as the tail window
//! of an infinite series.  Ratios are taken between consecutive nonzero
//! norms (a gap of g zeros contributes the g-th root of the spanning
//! ratio), the last five are averaged geometrically, and a strictly
//! growing ratio tail is reported as an infinite radius.

use crate::algebra::PlanarNC;
use crate::canonical::{from_planes, to_canonical};
use crate::error::{Error, Result};

/// Truncated power series sum_l a_l u^l with planar n-complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct NCSeries {
    n: usize,
    coeffs: Vec<PlanarNC>,
}

impl NCSeries {
    pub fn new(coeffs: Vec<PlanarNC>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::Empty)?;
        let n = first.n();
        for c in &coeffs {
            if c.n() != n {
                return Err(Error::DimensionMismatch(n, c.n()));
            }
        }
        Ok(NCSeries { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[PlanarNC] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Tail-ratio limit estimate from a norm sequence.  None when no ratio can
/// be formed (fewer than two nonzero norms).  `step_scale` divides each
/// ratio; the global radius uses sqrt(n/2), the per-plane radii 1.
fn tail_ratio_estimate(norms: &[f64], step_scale: f64) -> Option<f64> {
    let nz: Vec<usize> = (0..norms.len()).filter(|&i| norms[i] > 0.0).collect();
    if nz.len() < 2 {
        return None;
    }
    let all_ratios: Vec<f64> = nz
        .windows(2)
        .map(|w| (norms[w[0]] / norms[w[1]]).powf(1.0 / (w[1] - w[0]) as f64) / step_scale)
        .collect();
    let tail = &all_ratios[all_ratios.len().saturating_sub(5)..];
    if tail.iter().any(|&r| r > 1e12) {
        return Some(f64::INFINITY);
    }
    // a tail of strictly growing ratios with substantial total growth marks
    // an everywhere-convergent series (factorial-type decay)
    if all_ratios.len() >= 4 {
        let increasing = tail.windows(2).all(|w| w[1] > w[0]);
        let total_growth = all_ratios.last().unwrap() / all_ratios.first().unwrap();
        if increasing && total_growth > 2.0 {
            return Some(f64::INFINITY);
        }
    }
    let geo = (tail.iter().map(|&r| r.ln()).sum::<f64>() / tail.len() as f64).exp();
    if geo > 1e12 {
        Some(f64::INFINITY)
    } else {
        Some(geo)
    }
}

/// Global convergence radius estimate: the series converges absolutely for
/// |u| < c.  The stored list must end in a nonzero coefficient and contain
/// at least two of them.
pub fn radius_global(s: &NCSeries) -> Result<f64> {
    let norms: Vec<f64> = s.coeffs.iter().map(|a| a.modulus()).collect();
    if norms.last() == Some(&0.0) {
        return Err(Error::UndefinedRadius);
    }
    let scale = (s.n as f64 / 2.0).sqrt();
    tail_ratio_estimate(&norms, scale).ok_or(Error::UndefinedRadius)
}

/// Per-plane radii c_k: the series converges for u with rho_k(u) < c_k in
/// every plane.  A plane whose projected coefficients vanish identically,
/// or end in zeros, contributes no constraint and reports +infinity.
/// Plane norms below 1e-14 of the coefficient modulus count as zero: the
/// canonical transform leaves that much rounding residue on planes a
/// coefficient does not actually touch.
pub fn radius_per_plane(s: &NCSeries) -> Vec<f64> {
    let half = s.n / 2;
    let proj: Vec<Vec<(f64, f64)>> = s
        .coeffs
        .iter()
        .map(|a| to_canonical(a).planes().to_vec())
        .collect();
    let moduli: Vec<f64> = s.coeffs.iter().map(|a| a.modulus()).collect();
    (0..half)
        .map(|k| {
            let norms: Vec<f64> = proj
                .iter()
                .zip(&moduli)
                .map(|(p, &m)| {
                    let b = p[k].1.hypot(p[k].0);
                    if b <= 1e-14 * m {
                        0.0
                    } else {
                        b
                    }
                })
                .collect();
            if norms.last() == Some(&0.0) {
                return f64::INFINITY;
            }
            tail_ratio_estimate(&norms, 1.0).unwrap_or(f64::INFINITY)
        })
        .collect()
}

/// Sums the series at u by independent complex Horner evaluation in each
/// plane.  Rejects points outside the convergence cylinder, reporting the
/// offending planes 1-based.
pub fn eval_series(s: &NCSeries, u: &PlanarNC) -> Result<PlanarNC> {
    if s.n != u.n() {
        return Err(Error::DimensionMismatch(s.n, u.n()));
    }
    let radii = radius_per_plane(s);
    let coords = to_canonical(u);
    let outside: Vec<usize> = coords
        .radii()
        .iter()
        .zip(&radii)
        .enumerate()
        .filter(|(_, (&rho, &c))| rho >= c)
        .map(|(k, _)| k + 1)
        .collect();
    if !outside.is_empty() {
        return Err(Error::OutsideConvergence(outside));
    }
    let half = s.n / 2;
    let proj: Vec<Vec<(f64, f64)>> = s
        .coeffs
        .iter()
        .map(|a| to_canonical(a).planes().to_vec())
        .collect();
    let mut out = Vec::with_capacity(half);
    for k in 0..half {
        let (zv, zt) = coords.plane(k + 1);
        let mut acc = (0.0f64, 0.0f64);
        for p in proj.iter().rev() {
            let (av, at) = p[k];
            acc = (acc.0 * zv - acc.1 * zt + av, acc.0 * zt + acc.1 * zv + at);
        }
        out.push(acc);
    }
    Ok(from_planes(s.n, &out))
}

/// Term-wise derivative; the derivative of a constant series is the zero
/// constant series.
pub fn derivative_series(s: &NCSeries) -> NCSeries {
    if s.coeffs.len() == 1 {
        let zero = PlanarNC::zero(s.n).expect("dimension already validated");
        return NCSeries { n: s.n, coeffs: vec![zero] };
    }
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(l, a)| a.scale(l as f64))
        .collect();
    NCSeries { n: s.n, coeffs }
}

/// Re-expands the series around u0: the returned coefficients c_k satisfy
/// sum_k c_k w^k = sum_l a_l (u0 + w)^l up to the stored truncation order.
pub fn taylor_shift(s: &NCSeries, u0: &PlanarNC) -> Result<NCSeries> {
    if s.n != u0.n() {
        return Err(Error::DimensionMismatch(s.n, u0.n()));
    }
    let m = s.coeffs.len();
    let mut powers = Vec::with_capacity(m);
    powers.push(PlanarNC::one(s.n)?);
    for l in 1..m {
        powers.push(powers[l - 1].mul(u0)?);
    }
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let mut acc = PlanarNC::zero(s.n)?;
        let mut binom = 1.0f64;
        for l in 0..m - k {
            if l > 0 {
                binom *= (k + l) as f64 / l as f64;
            }
            acc = acc.add(&s.coeffs[k + l].mul(&powers[l])?.scale(binom))?;
        }
        out.push(acc);
    }
    NCSeries::new(out)
}

/// Residuals of the Riemann-type relations at a point, from central finite
/// differences with step h.
///
/// `first_order` is the largest spread within any chain of signed first
/// partials that analyticity forces to coincide; `second_order` likewise
/// for the mixed second partials.  The second-order figure is rounding
/// limited near |f| * eps / h^2, so with the default h = 1e-5 residuals of
/// order 1e-6 are indistinguishable from exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrReport {
    pub first_order: f64,
    pub second_order: f64,
}

pub fn cr_check<F>(f: F, u0: &PlanarNC, h: f64) -> CrReport
where
    F: Fn(&PlanarNC) -> PlanarNC,
{
    let n = u0.n();
    let shift = |base: &PlanarNC, axis: usize, delta: f64| {
        let mut c = base.coeffs().to_vec();
        c[axis] += delta;
        PlanarNC::new(c).expect("finite shift of finite value")
    };

    let mut first_partials = vec![vec![0.0f64; n]; n];
    for j in 0..n {
        let fp = f(&shift(u0, j, h));
        let fm = f(&shift(u0, j, -h));
        for c in 0..n {
            first_partials[c][j] = (fp.coeff(c) - fm.coeff(c)) / (2.0 * h);
        }
    }
    let mut first_order = 0.0f64;
    for k in 0..n {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for j in 0..n {
            let c = (k + j) % n;
            let sign = if k + j < n { 1.0 } else { -1.0 };
            let t = sign * first_partials[c][j];
            lo = lo.min(t);
            hi = hi.max(t);
        }
        first_order = first_order.max(hi - lo);
    }

    // mixed second partials from the four-point stencil; the a == b case
    // collapses to the usual three-point second difference
    let mut mixed = vec![vec![vec![0.0f64; n]; n]; n];
    for a in 0..n {
        for b in a..n {
            let pp = f(&shift(&shift(u0, a, h), b, h));
            let pm = f(&shift(&shift(u0, a, h), b, -h));
            let mp = f(&shift(&shift(u0, a, -h), b, h));
            let mm = f(&shift(&shift(u0, a, -h), b, -h));
            for c in 0..n {
                let v = (pp.coeff(c) - pm.coeff(c) - mp.coeff(c) + mm.coeff(c)) / (4.0 * h * h);
                mixed[c][a][b] = v;
                mixed[c][b][a] = v;
            }
        }
    }
    let mut second_order = 0.0f64;
    for c in 0..n {
        for l in 0..n {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            let mut count = 0;
            for a in 0..n {
                for b in a..n {
                    if (a + b) % n != l {
                        continue;
                    }
                    let sign = if a + b < n { 1.0 } else { -1.0 };
                    let t = sign * mixed[c][a][b];
                    lo = lo.min(t);
                    hi = hi.max(t);
                    count += 1;
                }
            }
            if count >= 2 {
                second_order = second_order.max(hi - lo);
            }
        }
    }

    CrReport { first_order, second_order }
}
