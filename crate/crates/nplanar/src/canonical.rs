//! The canonical plane decomposition.
//!
//! For even n the algebra splits into n/2 orthogonal planes.  Plane k
//! (k = 1..n/2) carries the pair
//!
//! ```text
//! v_k  = sum_p x_p cos(pi (2k-1) p / n)
//! vt_k = sum_p x_p sin(pi (2k-1) p / n)
//! ```
//!
//! and multiplication acts on each pair exactly like ordinary complex
//! multiplication.  The idempotent basis e_k, et_k generated by the same
//! angles satisfies e_k^2 = e_k, et_k^2 = -e_k and e_j e_k = 0 for j != k,
//! which is what turns elementary functions into per-plane scalar work.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{PlanarNC, DEFAULT_NODAL_TOL};
use crate::error::{Error, Result};
use crate::functions;

/// Cosine/sine tables for one dimension, flat row-major [plane * n + p].
pub(crate) struct Tables {
    pub n: usize,
    pub half: usize,
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl Tables {
    #[inline]
    pub fn cos_at(&self, k0: usize, p: usize) -> f64 {
        self.cos[k0 * self.n + p]
    }

    #[inline]
    pub fn sin_at(&self, k0: usize, p: usize) -> f64 {
        self.sin[k0 * self.n + p]
    }
}

/// cos and sin of pi m / n for m already reduced into [0, 2n).
/// Quarter-turn angles are snapped so the n = 2 tables are exact.
pub(crate) fn cos_sin_pi(m: usize, n: usize) -> (f64, f64) {
    debug_assert!(m < 2 * n);
    if m == 0 {
        return (1.0, 0.0);
    }
    if 2 * m == n {
        return (0.0, 1.0);
    }
    if m == n {
        return (-1.0, 0.0);
    }
    if 2 * m == 3 * n {
        return (0.0, -1.0);
    }
    let theta = PI * m as f64 / n as f64;
    (theta.cos(), theta.sin())
}

fn build_tables(n: usize) -> Tables {
    let half = n / 2;
    let mut cos = vec![0.0; half * n];
    let mut sin = vec![0.0; half * n];
    for k0 in 0..half {
        let odd = 2 * k0 + 1;
        for p in 0..n {
            let m = (odd * p) % (2 * n);
            let (c, s) = cos_sin_pi(m, n);
            cos[k0 * n + p] = c;
            sin[k0 * n + p] = s;
        }
    }
    Tables { n, half, cos, sin }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();

/// Shared per-dimension trig tables, built once per n.
pub(crate) fn tables(n: usize) -> Arc<Tables> {
    debug_assert!(n >= 2 && n % 2 == 0);
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n).or_insert_with(|| Arc::new(build_tables(n))).clone()
}

/// The n/2 plane pairs (v_k, vt_k) of a value.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalCoords {
    n: usize,
    planes: Vec<(f64, f64)>,
}

impl CanonicalCoords {
    /// Builds coordinates from explicit plane pairs; planes.len() must be n/2.
    pub fn new(n: usize, planes: Vec<(f64, f64)>) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::InvalidDimension(n));
        }
        if planes.len() != n / 2 {
            return Err(Error::CoeffCountMismatch { n: n / 2, got: planes.len() });
        }
        if planes.iter().any(|(v, vt)| !v.is_finite() || !vt.is_finite()) {
            return Err(Error::NonFiniteCoeffs);
        }
        Ok(CanonicalCoords { n, planes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn planes(&self) -> &[(f64, f64)] {
        &self.planes
    }

    /// Plane pair for 1-based plane index k.
    pub fn plane(&self, k: usize) -> (f64, f64) {
        self.planes[k - 1]
    }

    /// Plane radii rho_k.
    pub fn radii(&self) -> Vec<f64> {
        self.planes.iter().map(|&(v, vt)| vt.hypot(v)).collect()
    }
}

/// Projects a value onto its n/2 canonical planes.
pub fn to_canonical(u: &PlanarNC) -> CanonicalCoords {
    let n = u.n();
    let t = tables(n);
    let x = u.coeffs();
    let mut planes = Vec::with_capacity(t.half);
    for k0 in 0..t.half {
        let mut v = 0.0;
        let mut vt = 0.0;
        for (p, &xp) in x.iter().enumerate() {
            v += xp * t.cos_at(k0, p);
            vt += xp * t.sin_at(k0, p);
        }
        planes.push((v, vt));
    }
    CanonicalCoords { n, planes }
}

pub(crate) fn from_planes(n: usize, planes: &[(f64, f64)]) -> PlanarNC {
    let t = tables(n);
    debug_assert_eq!(planes.len(), t.half);
    let scale = 2.0 / n as f64;
    let mut coeffs = vec![0.0; n];
    for (p, slot) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (k0, &(v, vt)) in planes.iter().enumerate() {
            acc += t.cos_at(k0, p) * v + t.sin_at(k0, p) * vt;
        }
        *slot = scale * acc;
    }
    PlanarNC::new(coeffs).expect("plane reassembly stays finite")
}

/// Rebuilds the coefficient tuple from plane pairs.
pub fn from_canonical(c: &CanonicalCoords) -> PlanarNC {
    from_planes(c.n, &c.planes)
}

/// Per-plane complex multiplication: the diagonalized product.
pub fn mul_canonical(a: &CanonicalCoords, b: &CanonicalCoords) -> Result<CanonicalCoords> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let planes = a
        .planes
        .iter()
        .zip(&b.planes)
        .map(|(&(v1, w1), &(v2, w2))| (v1 * v2 - w1 * w2, v1 * w2 + w1 * v2))
        .collect();
    Ok(CanonicalCoords { n: a.n, planes })
}

/// The idempotent basis of the plane decomposition.
///
/// e_k projects onto plane k, et_k is the imaginary unit of that plane:
/// e_k^2 = e_k, et_k^2 = -e_k, e_k et_k = et_k, and any product across
/// distinct planes vanishes.  The e_k sum to 1.
#[derive(Debug, Clone)]
pub struct CanonicalBasis {
    n: usize,
    e: Vec<PlanarNC>,
    et: Vec<PlanarNC>,
}

impl CanonicalBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Idempotent of plane k (1-based).
    pub fn e(&self, k: usize) -> &PlanarNC {
        &self.e[k - 1]
    }

    /// Imaginary unit of plane k (1-based).
    pub fn etilde(&self, k: usize) -> &PlanarNC {
        &self.et[k - 1]
    }
}

/// Builds the idempotent basis for dimension n.
pub fn canonical_basis(n: usize) -> Result<CanonicalBasis> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidDimension(n));
    }
    let t = tables(n);
    let scale = 2.0 / n as f64;
    let mut e = Vec::with_capacity(t.half);
    let mut et = Vec::with_capacity(t.half);
    for k0 in 0..t.half {
        let ce: Vec<f64> = (0..n).map(|p| scale * t.cos_at(k0, p)).collect();
        let se: Vec<f64> = (0..n).map(|p| scale * t.sin_at(k0, p)).collect();
        e.push(PlanarNC::new(ce)?);
        et.push(PlanarNC::new(se)?);
    }
    Ok(CanonicalBasis { n, e, et })
}

/// Polar data of a value.
///
/// `phi` entries are None where the plane radius sits at the nodal cutoff,
/// since no azimuth is defined there; radii, planar angles and d are always
/// present.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarForm {
    /// Distance from the origin.
    pub d: f64,
    /// Amplitude, the n-th root of the determinant.
    pub amplitude: f64,
    /// Plane radii rho_k, k = 1..n/2.
    pub rho: Vec<f64>,
    /// Azimuths in [0, 2 pi), one per plane.
    pub phi: Vec<Option<f64>>,
    /// Planar angles psi_{k-1} = atan2(rho_1, rho_k) in [0, pi/2], k = 2..n/2.
    pub psi: Vec<f64>,
}

pub(crate) fn azimuth(v: f64, vt: f64) -> f64 {
    let mut phi = vt.atan2(v);
    if phi < 0.0 {
        phi += 2.0 * PI;
    }
    if phi >= 2.0 * PI {
        phi = 0.0;
    }
    phi
}

/// Extracts radii, azimuths and planar angles.
pub fn polar_form(u: &PlanarNC) -> PolarForm {
    let coords = to_canonical(u);
    let d = u.modulus();
    let cutoff = DEFAULT_NODAL_TOL * d.max(1.0);
    let rho = coords.radii();
    let phi = coords
        .planes
        .iter()
        .zip(&rho)
        .map(|(&(v, vt), &r)| if r <= cutoff { None } else { Some(azimuth(v, vt)) })
        .collect();
    let psi = rho[1..].iter().map(|&rk| rho[0].atan2(rk)).collect();
    PolarForm { d, amplitude: u.amplitude(), rho, phi, psi }
}

/// Exponential form u = amplitude * exp(axial + phase).
///
/// `axial` collects the h_p directions that encode the radius ratios between
/// planes, `phase` is the et_k combination of the azimuths.  Requires every
/// plane radius to clear the nodal cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialForm {
    pub amplitude: f64,
    pub axial: PlanarNC,
    pub phase: PlanarNC,
}

impl ExponentialForm {
    pub fn reconstruct(&self) -> Result<PlanarNC> {
        let exponent = self.axial.add(&self.phase)?;
        Ok(functions::exp(&exponent)?.scale(self.amplitude))
    }
}

pub(crate) fn nodal_check(u: &PlanarNC, coords: &CanonicalCoords) -> Result<Vec<f64>> {
    let cutoff = DEFAULT_NODAL_TOL * u.modulus().max(1.0);
    let rho = coords.radii();
    let nodal: Vec<usize> = rho
        .iter()
        .enumerate()
        .filter(|(_, &r)| r <= cutoff)
        .map(|(i, _)| i + 1)
        .collect();
    if !nodal.is_empty() {
        return Err(Error::NodalSingularity(nodal));
    }
    Ok(rho)
}

pub fn exponential_form(u: &PlanarNC) -> Result<ExponentialForm> {
    let n = u.n();
    let coords = to_canonical(u);
    let rho = nodal_check(u, &coords)?;
    let t = tables(n);

    let log_rho: Vec<f64> = rho.iter().map(|r| r.ln()).collect();
    let amplitude = ((2.0 / n as f64) * log_rho.iter().sum::<f64>()).exp();

    // Axial component p carries -(2/n) sum_{k>=2} cos-angle * ln tan psi_{k-1},
    // with ln tan psi_{k-1} = ln rho_1 - ln rho_k.
    let scale = 2.0 / n as f64;
    let mut axial = vec![0.0; n];
    for (p, slot) in axial.iter_mut().enumerate().skip(1) {
        let mut acc = 0.0;
        for k0 in 1..t.half {
            acc += t.cos_at(k0, p) * (log_rho[0] - log_rho[k0]);
        }
        *slot = -scale * acc;
    }

    let phi_planes: Vec<(f64, f64)> = coords
        .planes
        .iter()
        .map(|&(v, vt)| (0.0, azimuth(v, vt)))
        .collect();
    let phase = from_planes(n, &phi_planes);

    Ok(ExponentialForm { amplitude, axial: PlanarNC::new(axial)?, phase })
}

/// Trigonometric form u = modulus * direction * exp(phase).
///
/// `direction` is the unit-modulus combination of plane idempotents fixed by
/// the planar angles; `phase` is the same azimuth combination as in the
/// exponential form.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigForm {
    pub modulus: f64,
    pub direction: PlanarNC,
    pub phase: PlanarNC,
}

impl TrigForm {
    pub fn reconstruct(&self) -> Result<PlanarNC> {
        let factor = functions::exp(&self.phase)?;
        Ok(self.direction.mul(&factor)?.scale(self.modulus))
    }
}

pub fn trigonometric_form(u: &PlanarNC) -> Result<TrigForm> {
    let n = u.n();
    let coords = to_canonical(u);
    let rho = nodal_check(u, &coords)?;
    let d = u.modulus();

    let dir_planes: Vec<(f64, f64)> = rho.iter().map(|&r| (r / d, 0.0)).collect();
    let direction = from_planes(n, &dir_planes);

    let phi_planes: Vec<(f64, f64)> = coords
        .planes
        .iter()
        .map(|&(v, vt)| (0.0, azimuth(v, vt)))
        .collect();
    let phase = from_planes(n, &phi_planes);

    Ok(TrigForm { modulus: d, direction, phase })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_value(rng: &mut ChaCha8Rng, n: usize) -> PlanarNC {
        PlanarNC::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap()
    }

    fn max_abs_diff(a: &PlanarNC, b: &PlanarNC) -> f64 {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn n2_tables_are_exact() {
        let t = tables(2);
        assert_eq!((t.cos_at(0, 0), t.sin_at(0, 0)), (1.0, 0.0));
        assert_eq!((t.cos_at(0, 1), t.sin_at(0, 1)), (0.0, 1.0));
        let u = PlanarNC::new(vec![0.3, -0.7]).unwrap();
        let c = to_canonical(&u);
        assert_eq!(c.plane(1), (0.3, -0.7));
        assert_eq!(from_canonical(&c), u);
    }

    #[test]
    fn cos_rows_sum_to_zero() {
        // sum_k cos(pi (2k-1) p / n) = 0 for p = 1..n-1
        for n in [2usize, 4, 6, 8, 12] {
            let t = tables(n);
            for p in 1..n {
                let s: f64 = (0..t.half).map(|k0| t.cos_at(k0, p)).sum();
                assert!(s.abs() < 1e-13, "n={n} p={p} sum={s}");
            }
            let s0: f64 = (0..t.half).map(|k0| t.cos_at(k0, 0)).sum();
            assert!((s0 - n as f64 / 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn roundtrip_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for n in [2usize, 4, 6, 8, 12] {
            for _ in 0..100 {
                let u = random_value(&mut rng, n);
                let back = from_canonical(&to_canonical(&u));
                assert!(max_abs_diff(&u, &back) < 1e-14);
            }
        }
    }

    #[test]
    fn plane_norm_identity() {
        // sum_k (v_k^2 + vt_k^2) = (n/2) d^2
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2usize, 4, 6, 8, 12] {
            for _ in 0..50 {
                let u = random_value(&mut rng, n);
                let c = to_canonical(&u);
                let lhs: f64 = c.planes().iter().map(|(v, w)| v * v + w * w).sum();
                let rhs = n as f64 / 2.0 * u.modulus().powi(2);
                assert!((lhs - rhs).abs() < 1e-12 * (1.0 + rhs));
            }
        }
    }

    #[test]
    fn dual_path_multiplication_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in [2usize, 4, 6, 8, 12] {
            for _ in 0..200 {
                let u = random_value(&mut rng, n);
                let v = random_value(&mut rng, n);
                let direct = u.mul(&v).unwrap();
                let canonical = from_canonical(
                    &mul_canonical(&to_canonical(&u), &to_canonical(&v)).unwrap(),
                );
                let scale = 1.0 + u.modulus() * v.modulus();
                assert!(max_abs_diff(&direct, &canonical) <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn basis_relations() {
        for n in [2usize, 4, 6, 8] {
            let b = canonical_basis(n).unwrap();
            let half = n / 2;
            let norm = (2.0 / n as f64).sqrt();
            let mut e_sum = PlanarNC::zero(n).unwrap();
            for k in 1..=half {
                let e = b.e(k);
                let et = b.etilde(k);
                assert!(max_abs_diff(&e.mul(e).unwrap(), e) < 1e-13);
                assert!(max_abs_diff(&et.mul(et).unwrap(), &e.neg()) < 1e-13);
                assert!(max_abs_diff(&e.mul(et).unwrap(), et) < 1e-13);
                if n > 2 {
                    assert!((e.modulus() - norm).abs() < 1e-13);
                    assert!((et.modulus() - norm).abs() < 1e-13);
                }
                for j in 1..=half {
                    if j != k {
                        let z = PlanarNC::zero(n).unwrap();
                        assert!(max_abs_diff(&e.mul(b.e(j)).unwrap(), &z) < 1e-13);
                        assert!(max_abs_diff(&e.mul(b.etilde(j)).unwrap(), &z) < 1e-13);
                        assert!(max_abs_diff(&et.mul(b.etilde(j)).unwrap(), &z) < 1e-13);
                    }
                }
                e_sum = e_sum.add(e).unwrap();
            }
            assert!(max_abs_diff(&e_sum, &PlanarNC::one(n).unwrap()) < 1e-13);
        }
    }

    #[test]
    fn n2_basis_is_one_and_h1() {
        let b = canonical_basis(2).unwrap();
        assert_eq!(b.e(1), &PlanarNC::one(2).unwrap());
        assert_eq!(b.etilde(1), &PlanarNC::unit(2, 1).unwrap());
    }

    #[test]
    fn value_rebuilds_from_basis_combination() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in [4usize, 6, 8] {
            let b = canonical_basis(n).unwrap();
            for _ in 0..50 {
                let u = random_value(&mut rng, n);
                let c = to_canonical(&u);
                let mut acc = PlanarNC::zero(n).unwrap();
                for k in 1..=n / 2 {
                    let (v, vt) = c.plane(k);
                    acc = acc.add(&b.e(k).scale(v)).unwrap();
                    acc = acc.add(&b.etilde(k).scale(vt)).unwrap();
                }
                assert!(max_abs_diff(&acc, &u) < 1e-13);
            }
        }
    }

    #[test]
    fn polar_radii_identity() {
        // d^2 = (2/n) sum rho_k^2
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in [2usize, 4, 6, 8, 12] {
            for _ in 0..50 {
                let u = random_value(&mut rng, n);
                let p = polar_form(&u);
                let rhs: f64 = 2.0 / n as f64 * p.rho.iter().map(|r| r * r).sum::<f64>();
                assert!((p.d * p.d - rhs).abs() < 1e-12 * (1.0 + rhs));
            }
        }
    }

    #[test]
    fn polar_multiplicativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let two_pi = 2.0 * PI;
        for n in [4usize, 6, 8] {
            for _ in 0..50 {
                let u = random_value(&mut rng, n);
                let v = random_value(&mut rng, n);
                let pu = polar_form(&u);
                let pv = polar_form(&v);
                let puv = polar_form(&u.mul(&v).unwrap());
                for k in 0..n / 2 {
                    let prod = pu.rho[k] * pv.rho[k];
                    assert!((puv.rho[k] - prod).abs() <= 1e-10 * (1.0 + prod));
                    if let (Some(a), Some(b), Some(c)) = (pu.phi[k], pv.phi[k], puv.phi[k]) {
                        let mut delta = (a + b - c) % two_pi;
                        if delta < -two_pi / 2.0 {
                            delta += two_pi;
                        }
                        if delta > two_pi / 2.0 {
                            delta -= two_pi;
                        }
                        assert!(delta.abs() < 1e-9, "n={n} k={k} delta={delta}");
                    }
                    // amplitude multiplicative
                    let amp = pu.amplitude * pv.amplitude;
                    assert!((puv.amplitude - amp).abs() <= 1e-10 * (1.0 + amp));
                }
                // tan psi multiplicative
                for j in 0..n / 2 - 1 {
                    let lhs = puv.psi[j].tan();
                    let rhs = pu.psi[j].tan() * pv.psi[j].tan();
                    if rhs.is_finite() && lhs.is_finite() {
                        assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs.abs()));
                    }
                }
            }
        }
    }

    #[test]
    fn polar_of_plane_idempotent() {
        let b = canonical_basis(4).unwrap();
        let p = polar_form(b.e(1));
        assert!((p.rho[0] - 1.0).abs() < 1e-14);
        assert!(p.rho[1].abs() < 1e-14);
        assert_eq!(p.phi[0], Some(0.0));
        assert_eq!(p.phi[1], None);
        assert!((p.psi[0] - PI / 2.0).abs() < 1e-14);
        assert!((p.d - (0.5f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn azimuth_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..1000 {
            let v: f64 = rng.random_range(-1.0..1.0);
            let vt: f64 = rng.random_range(-1.0..1.0);
            let phi = azimuth(v, vt);
            assert!((0.0..2.0 * PI).contains(&phi));
        }
        assert_eq!(azimuth(1.0, 0.0), 0.0);
        assert_eq!(azimuth(0.0, 1.0), PI / 2.0);
        assert_eq!(azimuth(-1.0, 0.0), PI);
    }

    #[test]
    fn exponential_form_of_pure_phase() {
        let b = canonical_basis(4).unwrap();
        let exponent = b.etilde(1).scale(0.7);
        let u = functions::exp(&exponent).unwrap();
        let form = exponential_form(&u).unwrap();
        assert!((form.amplitude - 1.0).abs() < 1e-12);
        assert!(form.axial.modulus() < 1e-12);
        assert!(max_abs_diff(&form.phase, &exponent) < 1e-12);
    }

    #[test]
    fn exponential_form_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in [2usize, 4, 6, 8] {
            let mut done = 0;
            while done < 100 {
                let u = random_value(&mut rng, n);
                let form = match exponential_form(&u) {
                    Ok(f) => f,
                    Err(Error::NodalSingularity(_)) => continue,
                    Err(e) => panic!("unexpected {e:?}"),
                };
                let back = form.reconstruct().unwrap();
                assert!(max_abs_diff(&u, &back) <= 1e-10 * (1.0 + u.modulus()));
                done += 1;
            }
        }
    }

    #[test]
    fn trigonometric_form_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for n in [2usize, 4, 6, 8] {
            let mut done = 0;
            while done < 100 {
                let u = random_value(&mut rng, n);
                let form = match trigonometric_form(&u) {
                    Ok(f) => f,
                    Err(Error::NodalSingularity(_)) => continue,
                    Err(e) => panic!("unexpected {e:?}"),
                };
                // unit direction, unit phase factor, exact rebuild
                assert!((form.direction.modulus() - 1.0).abs() < 1e-12);
                let phase_factor = functions::exp(&form.phase).unwrap();
                assert!((phase_factor.modulus() - 1.0).abs() < 1e-12);
                assert!((form.modulus - u.modulus()).abs() < 1e-12 * (1.0 + u.modulus()));
                let back = form.reconstruct().unwrap();
                assert!(max_abs_diff(&u, &back) <= 1e-10 * (1.0 + u.modulus()));
                done += 1;
            }
        }
    }

    #[test]
    fn trigonometric_direction_matches_planar_angles() {
        // direction written out of tan psi, against the rho_k/d shortcut
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for n in [4usize, 6, 8] {
            let b = canonical_basis(n).unwrap();
            let mut done = 0;
            while done < 30 {
                let u = random_value(&mut rng, n);
                let form = match trigonometric_form(&u) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                let polar = polar_form(&u);
                let mut dir = b.e(1).clone();
                let mut inv_tan_sq = 0.0;
                for k in 2..=n / 2 {
                    let inv_tan = 1.0 / polar.psi[k - 2].tan();
                    dir = dir.add(&b.e(k).scale(inv_tan)).unwrap();
                    inv_tan_sq += inv_tan * inv_tan;
                }
                let norm = (n as f64 / 2.0).sqrt() / (1.0 + inv_tan_sq).sqrt();
                dir = dir.scale(norm);
                assert!(max_abs_diff(&dir, &form.direction) < 1e-10);
                done += 1;
            }
        }
    }

    #[test]
    fn amplitude_to_modulus_relation() {
        // d = rho * sqrt(2/n) * (prod tan psi)^{2/n} * (1 + sum 1/tan^2 psi)^{1/2}
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for n in [2usize, 4, 6, 8] {
            let mut done = 0;
            while done < 50 {
                let u = random_value(&mut rng, n);
                let p = polar_form(&u);
                if p.rho.iter().any(|&r| r < 1e-3) {
                    continue;
                }
                let mut tan_prod = 1.0;
                let mut inv_tan_sq = 0.0;
                for psi in &p.psi {
                    let t = psi.tan();
                    tan_prod *= t;
                    inv_tan_sq += 1.0 / (t * t);
                }
                let rhs = p.amplitude
                    * (2.0 / n as f64).sqrt()
                    * tan_prod.powf(2.0 / n as f64)
                    * (1.0 + inv_tan_sq).sqrt();
                assert!((p.d - rhs).abs() <= 1e-10 * (1.0 + p.d), "n={n} d={} rhs={rhs}", p.d);
                done += 1;
            }
        }
    }
}
