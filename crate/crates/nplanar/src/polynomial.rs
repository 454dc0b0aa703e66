//! Monic polynomials over the algebra and their factorization into linear
//! factors.
//!
//! Projection onto the planes turns one degree-m polynomial into n/2
//! ordinary complex polynomials.  Each is factored independently, and any
//! choice of pairing between the per-plane root lists assembles a valid
//! set of m roots in the algebra, so a polynomial generally has many
//! distinct root multisets: the product over planes 2..n/2 of the distinct
//! orderings of each plane's roots (plane 1 stays fixed to cancel the
//! global reordering that merely permutes the same multiset).

use crate::algebra::PlanarNC;
use crate::canonical::{from_planes, to_canonical};
use crate::error::{Error, Result};

/// Monic polynomial u^m + a_1 u^(m-1) + ... + a_m; `coeffs` stores a_1..a_m.
#[derive(Debug, Clone, PartialEq)]
pub struct NPolynomial {
    n: usize,
    coeffs: Vec<PlanarNC>,
}

impl NPolynomial {
    pub fn new(coeffs: Vec<PlanarNC>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::Empty)?;
        let n = first.n();
        for c in &coeffs {
            if c.n() != n {
                return Err(Error::DimensionMismatch(n, c.n()));
            }
        }
        Ok(NPolynomial { n, coeffs })
    }

    /// Divides through by an invertible leading coefficient.
    pub fn normalized(leading: &PlanarNC, coeffs: Vec<PlanarNC>) -> Result<Self> {
        let inv = leading
            .inverse(crate::DEFAULT_NODAL_TOL)
            .map_err(|_| Error::NonInvertibleLeading)?;
        let scaled = coeffs
            .iter()
            .map(|c| c.mul(&inv))
            .collect::<Result<Vec<_>>>()?;
        NPolynomial::new(scaled)
    }

    /// Expands the monic product of (u - r) over the given roots.
    pub fn from_roots(roots: &[PlanarNC]) -> Result<Self> {
        let first = roots.first().ok_or(Error::Empty)?;
        let n = first.n();
        let mut full = vec![PlanarNC::one(n)?];
        for r in roots {
            if r.n() != n {
                return Err(Error::DimensionMismatch(n, r.n()));
            }
            let mut next = Vec::with_capacity(full.len() + 1);
            next.push(full[0].clone());
            for i in 1..full.len() {
                next.push(full[i].sub(&r.mul(&full[i - 1])?)?);
            }
            next.push(r.mul(full.last().unwrap())?.neg());
            full = next;
        }
        NPolynomial::new(full.split_off(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// a_1..a_m (the leading 1 is implicit).
    pub fn coeffs(&self) -> &[PlanarNC] {
        &self.coeffs
    }
}

/// Horner evaluation.
pub fn eval_poly(p: &NPolynomial, u: &PlanarNC) -> Result<PlanarNC> {
    if p.n != u.n() {
        return Err(Error::DimensionMismatch(p.n, u.n()));
    }
    let mut acc = PlanarNC::one(p.n)?;
    for a in &p.coeffs {
        acc = acc.mul(u)?.add(a)?;
    }
    Ok(acc)
}

/// The n/2 complex polynomials the planes see: entry [k][l] is the plane-k
/// projection of a_{l+1} as a (re, im) pair.
pub fn project_to_planes(p: &NPolynomial) -> Vec<Vec<(f64, f64)>> {
    let half = p.n / 2;
    let proj: Vec<Vec<(f64, f64)>> = p
        .coeffs
        .iter()
        .map(|a| to_canonical(a).planes().to_vec())
        .collect();
    (0..half)
        .map(|k| proj.iter().map(|pl| pl[k]).collect())
        .collect()
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn csub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

fn cabs(a: (f64, f64)) -> f64 {
    a.1.hypot(a.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

fn horner_complex(coeffs: &[(f64, f64)], z: (f64, f64)) -> (f64, f64) {
    let mut acc = (1.0, 0.0);
    for &c in coeffs {
        acc = cmul(acc, z);
        acc = (acc.0 + c.0, acc.1 + c.1);
    }
    acc
}

/// All m roots of the monic complex polynomial z^m + c_1 z^(m-1) + ... +
/// c_m by simultaneous iteration, sorted by (angle in [0, 2 pi), modulus).
///
/// Initial guesses sit on a circle of radius 1 + max|c| with an irrational
/// angular offset so no guess starts on a symmetry axis.
pub fn roots_per_plane(
    coeffs: &[(f64, f64)],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<(f64, f64)>> {
    let m = coeffs.len();
    if m == 0 {
        return Err(Error::Empty);
    }
    let maxc = coeffs.iter().map(|&c| cabs(c)).fold(0.0, f64::max);
    if m == 1 {
        return Ok(vec![(-coeffs[0].0, -coeffs[0].1)]);
    }
    let radius = 1.0 + maxc;
    let offset = 0.618_033_988_749_894_9;
    let mut z: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let ang = 2.0 * std::f64::consts::PI * i as f64 / m as f64 + offset;
            (radius * ang.cos(), radius * ang.sin())
        })
        .collect();
    let mut converged = false;
    for _ in 0..max_iter {
        let mut max_step = 0.0f64;
        for i in 0..m {
            let num = horner_complex(coeffs, z[i]);
            let mut den = (1.0, 0.0);
            for j in 0..m {
                if j != i {
                    den = cmul(den, csub(z[i], z[j]));
                }
            }
            if den == (0.0, 0.0) {
                z[i].0 += 1e-8 * (1.0 + cabs(z[i]));
                max_step = f64::INFINITY;
                continue;
            }
            let delta = cdiv(num, den);
            z[i] = csub(z[i], delta);
            max_step = max_step.max(cabs(delta) / (1.0 + cabs(z[i])));
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootsDiverged(max_iter));
    }
    // Vieta cross-check: expand the product and compare coefficients
    let mut expanded = vec![(1.0, 0.0)];
    for &r in &z {
        let mut next = Vec::with_capacity(expanded.len() + 1);
        next.push(expanded[0]);
        for i in 1..expanded.len() {
            next.push(csub(expanded[i], cmul(r, expanded[i - 1])));
        }
        let tail = cmul(r, *expanded.last().unwrap());
        next.push((-tail.0, -tail.1));
        expanded = next;
    }
    let residual = expanded[1..]
        .iter()
        .zip(coeffs)
        .map(|(&e, &c)| cabs(csub(e, c)))
        .fold(0.0, f64::max);
    if residual > 1e-8 * (1.0 + maxc) {
        return Err(Error::VietaResidual(residual));
    }
    z.sort_by(|a, b| {
        let key = |p: &(f64, f64)| {
            let mut ang = p.1.atan2(p.0);
            if ang < 0.0 {
                ang += 2.0 * std::f64::consts::PI;
            }
            (ang, cabs(*p))
        };
        key(a).partial_cmp(&key(b)).unwrap()
    });
    Ok(z)
}

/// One complete set of roots together with the per-plane data it was
/// assembled from and the total number of distinct assemblies.
#[derive(Debug, Clone, PartialEq)]
pub struct RootAssembly {
    /// For each plane, the m complex roots in the order used by this
    /// assembly.
    pub per_plane_roots: Vec<Vec<(f64, f64)>>,
    /// The m algebra roots u_p combined across planes by position.
    pub assembled_roots: Vec<PlanarNC>,
    /// Count of distinct assemblies over all plane orderings (unordered
    /// root multisets).
    pub assembly_count: u128,
}

/// Distinct permutations of the cluster labels (labels must be sorted).
fn distinct_orderings(labels: &[usize]) -> Vec<Vec<usize>> {
    let m = labels.len();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &l in labels {
        match counts.last_mut() {
            Some((v, c)) if *v == l => *c += 1,
            _ => counts.push((l, 1)),
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn recurse(
        counts: &mut Vec<(usize, usize)>,
        current: &mut Vec<usize>,
        m: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            current.push(counts[i].0);
            recurse(counts, current, m, out);
            current.pop();
            counts[i].1 += 1;
        }
    }
    recurse(&mut counts, &mut current, m, &mut out);
    out
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).fold(1u128, u128::saturating_mul)
}

/// Factors P into linear factors.
///
/// The first returned assembly is canonical: every plane's roots in sorted
/// order, paired by position.  `assembly_count` on each result is the
/// total number of distinct root multisets.  With `enumerate_limit` <= 1
/// only the canonical assembly is returned; a larger limit requests full
/// enumeration, which fails with an overflow report when the count exceeds
/// the limit.
pub fn factor(p: &NPolynomial, enumerate_limit: usize) -> Result<Vec<RootAssembly>> {
    let n = p.n;
    let half = n / 2;
    let m = p.degree();
    let planes = project_to_planes(p);
    let mut plane_roots: Vec<Vec<(f64, f64)>> = Vec::with_capacity(half);
    for coeffs in &planes {
        plane_roots.push(roots_per_plane(coeffs, 1e-12, 1000)?);
    }
    // cluster repeated roots per plane and label each root
    let mut plane_labels: Vec<Vec<usize>> = Vec::with_capacity(half);
    for roots in &plane_roots {
        let scale = 1.0 + roots.iter().map(|&r| cabs(r)).fold(0.0, f64::max);
        let tol = 1e-7 * scale;
        let mut labels = vec![usize::MAX; m];
        let mut next_label = 0;
        for i in 0..m {
            if labels[i] != usize::MAX {
                continue;
            }
            labels[i] = next_label;
            for j in i + 1..m {
                if labels[j] == usize::MAX && cabs(csub(roots[i], roots[j])) <= tol {
                    labels[j] = next_label;
                }
            }
            next_label += 1;
        }
        plane_labels.push(labels);
    }
    // distinct orderings per plane: m! over the product of multiplicity
    // factorials
    let orderings_count: Vec<u128> = plane_labels
        .iter()
        .map(|labels| {
            let mut mult: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
            for &l in labels {
                *mult.entry(l).or_insert(0) += 1;
            }
            let denom: u128 = mult.values().map(|&c| factorial(c)).product();
            factorial(m) / denom
        })
        .collect();
    let assembly_count: u128 = orderings_count[1..]
        .iter()
        .fold(1u128, |acc, &c| acc.saturating_mul(c));

    let max_coef = p.coeffs.iter().map(|a| a.modulus()).fold(0.0, f64::max);
    let check_tol = 1e-8 * (1.0 + max_coef);
    let verify = |roots: &[PlanarNC]| -> Result<()> {
        let expanded = NPolynomial::from_roots(roots)?;
        let residual = expanded
            .coeffs
            .iter()
            .zip(&p.coeffs)
            .map(|(e, a)| e.sub(a).map(|d| d.modulus()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        if residual > check_tol {
            return Err(Error::VietaResidual(residual));
        }
        Ok(())
    };

    let assemble = |orders: &[&[usize]]| -> Result<RootAssembly> {
        // orders[k] maps position -> index into plane k's sorted roots
        let mut per_plane = Vec::with_capacity(half);
        for (k, order) in orders.iter().enumerate() {
            per_plane.push(order.iter().map(|&i| plane_roots[k][i]).collect::<Vec<_>>());
        }
        let assembled = (0..m)
            .map(|pos| {
                let coords: Vec<(f64, f64)> = (0..half).map(|k| per_plane[k][pos]).collect();
                from_planes(n, &coords)
            })
            .collect::<Vec<_>>();
        verify(&assembled)?;
        Ok(RootAssembly {
            per_plane_roots: per_plane,
            assembled_roots: assembled,
            assembly_count,
        })
    };

    let identity: Vec<usize> = (0..m).collect();
    if enumerate_limit <= 1 {
        let orders: Vec<&[usize]> = (0..half).map(|_| identity.as_slice()).collect();
        return Ok(vec![assemble(&orders)?]);
    }
    if assembly_count > enumerate_limit as u128 {
        return Err(Error::AssemblyOverflow { count: assembly_count, limit: enumerate_limit });
    }
    // enumerate index orderings per plane 2..n/2 that produce distinct
    // label sequences; plane 1 stays at the identity
    let mut per_plane_orders: Vec<Vec<Vec<usize>>> = vec![vec![identity.clone()]];
    for labels in plane_labels.iter().skip(1) {
        // positions of each label, consumed in order, turn a label
        // sequence into an index ordering
        let sorted_labels: Vec<usize> = {
            let mut l = labels.clone();
            l.sort_unstable();
            l
        };
        let mut orders = Vec::new();
        for seq in distinct_orderings(&sorted_labels) {
            let mut pools: std::collections::HashMap<usize, Vec<usize>> =
                std::collections::HashMap::new();
            for (i, &l) in labels.iter().enumerate() {
                pools.entry(l).or_default().push(i);
            }
            let order: Vec<usize> = seq
                .iter()
                .map(|l| pools.get_mut(l).unwrap().remove(0))
                .collect();
            orders.push(order);
        }
        per_plane_orders.push(orders);
    }
    let mut out = Vec::new();
    let mut cursor = vec![0usize; half];
    loop {
        let orders: Vec<&[usize]> = (0..half)
            .map(|k| per_plane_orders[k][cursor[k]].as_slice())
            .collect();
        out.push(assemble(&orders)?);
        // mixed-radix increment, least significant plane last
        let mut pos = half;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < per_plane_orders[pos].len() {
                break;
            }
            cursor[pos] = 0;
        }
    }
}
