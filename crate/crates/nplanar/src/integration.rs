//! Path integrals, winding numbers, and the residue calculus of the
//! algebra.
//!
//! A path is a polyline through sampled values; integrals are computed by
//! the midpoint rule per segment with dyadic refinement until two
//! successive estimates agree.  A closed loop winds around a pole
//! independently in each plane, and the residue operations combine those
//! per-plane winding numbers with the et_k basis.  Loops are assumed
//! positively oriented (counterclockwise in each plane projection).
//!
//! The singular set of 1/(u - u0) is not the single point u0 but the union
//! of hypersurfaces rho_k(u - u0) = 0, so the guard tests every quadrature
//! sample against each declared pole's hypersurfaces.

use std::f64::consts::PI;

use crate::algebra::PlanarNC;
use crate::canonical::{from_planes, tables, to_canonical};
use crate::error::{Error, Result};

/// Polyline path in the algebra; at least three samples, and a closed path
/// must end where it starts (within 1e-12 in modulus).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPath {
    n: usize,
    points: Vec<PlanarNC>,
    closed: bool,
}

impl SampledPath {
    pub fn new(points: Vec<PlanarNC>, closed: bool) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::PathTooShort);
        }
        let n = points[0].n();
        for p in &points {
            if p.n() != n {
                return Err(Error::DimensionMismatch(n, p.n()));
            }
        }
        if closed {
            let gap = points[0].sub(points.last().unwrap())?.modulus();
            if gap > 1e-12 {
                return Err(Error::PathNotClosed);
            }
        }
        Ok(SampledPath { n, points, closed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[PlanarNC] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }
}

/// Quadrature controls: relative tolerance between successive refinements,
/// the sample budget, and declared pole locations whose singular
/// hypersurfaces no sample may touch.
#[derive(Debug, Clone)]
pub struct QuadratureOptions {
    pub rel_tol: f64,
    pub max_samples: usize,
    pub singularities: Vec<PlanarNC>,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions { rel_tol: 1e-8, max_samples: 1 << 20, singularities: Vec::new() }
    }
}

fn path_extent(points: &[PlanarNC]) -> f64 {
    let n = points[0].n();
    let mut span2 = 0.0;
    for i in 0..n {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points {
            lo = lo.min(p.coeff(i));
            hi = hi.max(p.coeff(i));
        }
        span2 += (hi - lo) * (hi - lo);
    }
    span2.sqrt()
}

fn guard_sample(u: &PlanarNC, index: usize, poles: &[PlanarNC], tol: f64) -> Result<()> {
    for pole in poles {
        let w = u.sub(pole)?;
        let min_rho = to_canonical(&w).radii().into_iter().fold(f64::INFINITY, f64::min);
        if min_rho <= tol {
            return Err(Error::SingularPath { sample: index });
        }
    }
    Ok(())
}

/// Integral of f along the path using midpoint values times segment
/// differences, doubling the per-segment sample count until two successive
/// estimates agree to `rel_tol`.
pub fn line_integral<F>(f: F, path: &SampledPath, opts: &QuadratureOptions) -> Result<PlanarNC>
where
    F: Fn(&PlanarNC) -> Result<PlanarNC>,
{
    let n = path.n;
    let guard_tol = 1e-9 * path_extent(&path.points);
    if !opts.singularities.is_empty() {
        for (i, p) in path.points.iter().enumerate() {
            guard_sample(p, i, &opts.singularities, guard_tol)?;
        }
    }
    let segments = path.points.len() - 1;
    let mut per_seg = 1usize;
    let mut prev: Option<PlanarNC> = None;
    let mut last_delta = f64::INFINITY;
    loop {
        let mut total = PlanarNC::zero(n)?;
        let mut sample_index = 0usize;
        for seg in 0..segments {
            let a = &path.points[seg];
            let b = &path.points[seg + 1];
            let du = b.sub(a)?.scale(1.0 / per_seg as f64);
            for i in 0..per_seg {
                let t = (i as f64 + 0.5) / per_seg as f64;
                let mid = a.scale(1.0 - t).add(&b.scale(t))?;
                if !opts.singularities.is_empty() {
                    guard_sample(&mid, sample_index, &opts.singularities, guard_tol)?;
                }
                total = total.add(&f(&mid)?.mul(&du)?)?;
                sample_index += 1;
            }
        }
        if let Some(p) = &prev {
            last_delta = total.sub(p)?.modulus();
            if last_delta <= opts.rel_tol * total.modulus().max(1.0) {
                return Ok(total);
            }
        }
        prev = Some(total);
        if segments.saturating_mul(per_seg * 2) > opts.max_samples {
            return Err(Error::NonConvergence { max_samples: opts.max_samples, last_delta });
        }
        per_seg *= 2;
    }
}

fn loop_extent(pts: &[(f64, f64)]) -> f64 {
    let (mut xlo, mut xhi, mut ylo, mut yhi) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        xlo = xlo.min(x);
        xhi = xhi.max(x);
        ylo = ylo.min(y);
        yhi = yhi.max(y);
    }
    (xhi - xlo).hypot(yhi - ylo)
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// Crossing-number interior test: 1 if the point lies inside the closed
/// polyline, 0 outside.  Points within 1e-9 of the loop (relative to its
/// diameter) are reported as on the boundary.
pub fn winding(point: (f64, f64), loop_pts: &[(f64, f64)]) -> Result<u8> {
    if loop_pts.len() < 3 {
        return Err(Error::PathTooShort);
    }
    let extent = loop_extent(loop_pts);
    let first = loop_pts[0];
    let last = *loop_pts.last().unwrap();
    if (first.0 - last.0).hypot(first.1 - last.1) > 1e-9 * extent + 1e-12 {
        return Err(Error::PathNotClosed);
    }
    let tol = 1e-9 * extent;
    let mut inside = false;
    for w in loop_pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if segment_distance(point, a, b) <= tol {
            return Err(Error::OnBoundary);
        }
        if (a.1 > point.1) != (b.1 > point.1) {
            let t = (point.1 - a.1) / (b.1 - a.1);
            let x = a.0 + t * (b.0 - a.0);
            if x > point.0 {
                inside = !inside;
            }
        }
    }
    Ok(inside as u8)
}

/// Winding number of the path around u0 in each plane, from the projected
/// loops.
pub fn plane_windings(u0: &PlanarNC, path: &SampledPath) -> Result<Vec<u8>> {
    if u0.n() != path.n {
        return Err(Error::DimensionMismatch(u0.n(), path.n));
    }
    if !path.closed {
        return Err(Error::PathNotClosed);
    }
    let half = path.n / 2;
    let center = to_canonical(u0);
    let projected: Vec<Vec<(f64, f64)>> = path
        .points
        .iter()
        .map(|p| to_canonical(p).planes().to_vec())
        .collect();
    (0..half)
        .map(|k| {
            let loop_k: Vec<(f64, f64)> = projected.iter().map(|pl| pl[k]).collect();
            winding(center.plane(k + 1), &loop_k)
        })
        .collect()
}

/// The closed-path integral of 1/(u - u0): 2 pi times the sum of et_k over
/// the planes whose projected loop encloses the projection of u0.
pub fn residue_integral(u0: &PlanarNC, path: &SampledPath) -> Result<PlanarNC> {
    let w = plane_windings(u0, path)?;
    let planes: Vec<(f64, f64)> =
        w.iter().map(|&wk| (0.0, 2.0 * PI * wk as f64)).collect();
    Ok(from_planes(path.n, &planes))
}

/// Quadrature of the Cauchy-type integral together with the closed-form
/// prediction it should match.
///
/// `value` is the refined quadrature of f(u)/(u - u0) along the path,
/// `formula` is f(u0) times the winding combination 2 pi sum_k w_k et_k,
/// and `component_sum` adds up the components of `value`.  The component
/// sum is reported rather than asserted: it does not vanish in this
/// algebra (see the acceptance analysis), so callers who expect a zero sum
/// can inspect it here.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyReport {
    pub value: PlanarNC,
    pub formula: PlanarNC,
    pub component_sum: f64,
}

pub fn cauchy_value<F>(
    f: F,
    u0: &PlanarNC,
    path: &SampledPath,
    opts: &QuadratureOptions,
) -> Result<CauchyReport>
where
    F: Fn(&PlanarNC) -> Result<PlanarNC>,
{
    let mut opts = opts.clone();
    opts.singularities.push(u0.clone());
    let value = line_integral(
        |u| {
            let inv = u.sub(u0)?.inverse(crate::DEFAULT_NODAL_TOL)?;
            f(u)?.mul(&inv)
        },
        path,
        &opts,
    )?;
    let formula = f(u0)?.mul(&residue_integral(u0, path)?)?;
    let component_sum = value.coeffs().iter().sum();
    Ok(CauchyReport { value, formula, component_sum })
}

/// Explicit component form of the Cauchy value: assembles f(u0) times
/// 2 pi sum_k w_k et_k directly from the sine table and the product rule,
/// without going through the canonical transform.
pub fn cauchy_components(f0: &PlanarNC, windings: &[u8]) -> Result<PlanarNC> {
    let n = f0.n();
    if windings.len() != n / 2 {
        return Err(Error::CoeffCountMismatch { n, got: windings.len() });
    }
    let t = tables(n);
    let mut coeffs = vec![0.0; n];
    for (l, slot) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (k0, &wk) in windings.iter().enumerate() {
            if wk == 0 {
                continue;
            }
            let mut inner = 0.0;
            for p in 1..n {
                let sign = if l < p { -1.0 } else { 1.0 };
                inner += t.sin_at(k0, p) * sign * f0.coeff((l + n - p) % n);
            }
            acc += wk as f64 * inner;
        }
        *slot = 4.0 * PI / n as f64 * acc;
    }
    PlanarNC::new(coeffs)
}

/// Sum of residues: each pole contributes its residue times the winding
/// combination of the path around it.
pub fn residue_sum(poles: &[(PlanarNC, PlanarNC)], path: &SampledPath) -> Result<PlanarNC> {
    let mut total = PlanarNC::zero(path.n)?;
    for (pole, residue) in poles {
        total = total.add(&residue_integral(pole, path)?.mul(residue)?)?;
    }
    Ok(total)
}
