//! Acceptance gate.  One test per criterion; each prints a [PASS]/[FAIL]
//! line with the measured residual before asserting, so a full run under
//! --nocapture reads as a checklist.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nplanar::analysis::{cr_check, eval_series, radius_per_plane, NCSeries};
use nplanar::canonical::{
    canonical_basis, exponential_form, from_canonical, mul_canonical, to_canonical,
    trigonometric_form, CanonicalCoords,
};
use nplanar::integration::{
    cauchy_value, line_integral, residue_integral, QuadratureOptions, SampledPath,
};
use nplanar::polynomial::{factor, NPolynomial};
use nplanar::{cosexp, functions, matrixrep, Error, PlanarNC};

fn rng_for(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xacce_9a7e ^ criterion)
}

fn sample(rng: &mut ChaCha8Rng, n: usize) -> PlanarNC {
    let coeffs: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    PlanarNC::new(coeffs).unwrap()
}

fn sample_invertible(rng: &mut ChaCha8Rng, n: usize, min_rho: f64) -> PlanarNC {
    loop {
        let u = sample(rng, n);
        let smallest = to_canonical(&u).radii().into_iter().fold(f64::INFINITY, f64::min);
        if smallest >= min_rho {
            return u;
        }
    }
}

fn max_diff(a: &PlanarNC, b: &PlanarNC) -> f64 {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn report(pass: bool, label: &str, detail: &str) -> bool {
    println!("[{}] {}: {}", if pass { "PASS" } else { "FAIL" }, label, detail);
    pass
}

#[test]
fn criterion_01_ring_axioms() {
    let start = Instant::now();
    let mut rng = rng_for(1);
    let mut commutative = true;
    let mut worst = 0.0f64;
    for &n in &[2usize, 4, 6, 8, 12] {
        for _ in 0..1000 {
            let a = sample(&mut rng, n);
            let b = sample(&mut rng, n);
            let c = sample(&mut rng, n);
            let ab = a.mul(&b).unwrap();
            if ab.coeffs() != b.mul(&a).unwrap().coeffs() {
                commutative = false;
            }
            let scale = 1.0 + a.modulus() * b.modulus() * c.modulus();
            let assoc = max_diff(&ab.mul(&c).unwrap(), &a.mul(&b.mul(&c).unwrap()).unwrap());
            let distrib = max_diff(
                &a.mul(&b.add(&c).unwrap()).unwrap(),
                &ab.add(&a.mul(&c).unwrap()).unwrap(),
            );
            worst = worst.max(assoc / scale).max(distrib / scale);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = commutative && worst <= 1e-12 && elapsed < 5.0;
    let detail = format!(
        "commutativity {}, max assoc/distrib residual {:.2e}, {:.2}s for 1000 triples per n in {{2,4,6,8,12}}",
        if commutative { "bit-exact" } else { "BROKEN" },
        worst,
        elapsed
    );
    assert!(report(pass, "criterion 1", &detail), "{detail}");
}

#[test]
fn criterion_02_dual_path_multiplication() {
    let mut rng = rng_for(2);
    let mut worst = 0.0f64;
    for &n in &[2usize, 4, 6, 8, 12] {
        for _ in 0..1000 {
            let a = sample(&mut rng, n);
            let b = sample(&mut rng, n);
            let direct = a.mul(&b).unwrap();
            let canonical =
                from_canonical(&mul_canonical(&to_canonical(&a), &to_canonical(&b)).unwrap());
            let scale = 1.0 + a.modulus() * b.modulus();
            worst = worst.max(max_diff(&direct, &canonical) / scale);
        }
    }
    let pass = worst <= 1e-12;
    let detail = format!(
        "direct vs canonical-transform product residual {:.2e} over 1000 pairs per n",
        worst
    );
    assert!(report(pass, "criterion 2", &detail), "{detail}");
}

#[test]
fn criterion_03_two_dimensional_reduction() {
    let mut rng = rng_for(3);
    let tau = 2.0 * std::f64::consts::PI;
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let a = sample(&mut rng, 2);
        let b = sample(&mut rng, 2);
        let za = Complex64::new(a.coeff(0), a.coeff(1));
        let zb = Complex64::new(b.coeff(0), b.coeff(1));
        let prod = a.mul(&b).unwrap();
        let zprod = za * zb;
        worst = worst.max((prod.coeff(0) - zprod.re).abs()).max((prod.coeff(1) - zprod.im).abs());

        for (mine, theirs) in [
            (functions::exp(&a).unwrap(), za.exp()),
            (functions::cos(&a).unwrap(), za.cos()),
            (functions::sin(&a).unwrap(), za.sin()),
        ] {
            worst = worst.max((mine.coeff(0) - theirs.re).abs()).max((mine.coeff(1) - theirs.im).abs());
        }

        let inv = sample_invertible(&mut rng, 2, 0.05);
        let zi = Complex64::new(inv.coeff(0), inv.coeff(1));
        let my_ln = functions::ln(&inv).unwrap();
        let mut their_ln = zi.ln();
        if their_ln.im < 0.0 {
            their_ln.im += tau;
        }
        worst = worst.max((my_ln.coeff(0) - their_ln.re).abs()).max((my_ln.coeff(1) - their_ln.im).abs());
    }
    let pass = worst <= 1e-12;
    let detail = format!(
        "mul/exp/ln/cos/sin vs ordinary complex arithmetic residual {:.2e} over 500 values",
        worst
    );
    assert!(report(pass, "criterion 3", &detail), "{detail}");
}

fn stencil_derivative(n: usize, k: usize, y: f64, h: f64) -> f64 {
    (-cosexp::f_closed(n, k, y + 2.0 * h) + 8.0 * cosexp::f_closed(n, k, y + h)
        - 8.0 * cosexp::f_closed(n, k, y - h)
        + cosexp::f_closed(n, k, y - 2.0 * h))
        / (12.0 * h)
}

#[test]
fn criterion_04_cosexponential_identities() {
    let start = Instant::now();
    let mut rng = rng_for(4);
    let pi = std::f64::consts::PI;

    let mut series_err = 0.0f64;
    for n in 1..=12usize {
        for k in 0..n {
            for i in 0..=100 {
                let y = -5.0 + 0.1 * i as f64;
                series_err = series_err
                    .max((cosexp::f_closed(n, k, y) - cosexp::f_series(n, k, y, 1e-14)).abs());
            }
        }
    }

    let mut squared_sum_err = 0.0f64;
    let mut alternating_err = 0.0f64;
    let mut addition_err = 0.0f64;
    let mut inverse_err = 0.0f64;
    let mut power_err = 0.0f64;
    let mut projection_err = 0.0f64;
    let mut derivative_err = 0.0f64;
    for _ in 0..100 {
        let y: f64 = rng.random_range(-3.0..3.0);
        let z: f64 = rng.random_range(-3.0..3.0);
        let y_small: f64 = rng.random_range(-1.0..1.0);
        for n in 1..=12usize {
            let fy: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, y)).collect();

            let lhs: f64 = fy.iter().map(|v| v * v).sum();
            let rhs: f64 = (1..=n)
                .map(|l| (2.0 * y * (pi * (2 * l - 1) as f64 / n as f64).cos()).exp())
                .sum::<f64>()
                / n as f64;
            squared_sum_err = squared_sum_err.max((lhs - rhs).abs());

            if n % 4 == 0 {
                let lhs: f64 = fy
                    .iter()
                    .enumerate()
                    .map(|(k, v)| if k % 2 == 0 { v * v } else { -v * v })
                    .sum();
                let rhs: f64 = (1..=n / 4)
                    .map(|l| (2.0 * y * (pi * (2 * l - 1) as f64 / n as f64).cos()).cos())
                    .sum::<f64>()
                    * 4.0
                    / n as f64;
                alternating_err = alternating_err.max((lhs - rhs).abs());
            }

            let fz: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, z)).collect();
            let sum: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, y + z)).collect();
            let conv = cosexp::negacyclic_convolve(&fy, &fz);
            for (a, b) in conv.iter().zip(&sum) {
                addition_err = addition_err.max((a - b).abs());
            }

            let fneg: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, -y)).collect();
            let unit = cosexp::negacyclic_convolve(&fy, &fneg);
            inverse_err = inverse_err.max((unit[0] - 1.0).abs());
            for v in &unit[1..] {
                inverse_err = inverse_err.max(v.abs());
            }

            if n % 2 == 0 {
                for l in [2u32, 3] {
                    let base = cosexp::exp_hk(n, 1, y_small).unwrap();
                    let powered = functions::pow(&base, l as f64).unwrap();
                    let direct = cosexp::exp_hk(n, 1, l as f64 * y_small).unwrap();
                    power_err = power_err.max(max_diff(&powered, &direct));
                }

                let ab = cosexp::ab_sums(n, y);
                let product: f64 = ab.g_squared.iter().take(n / 2).product();
                projection_err = projection_err.max((product - 1.0).abs());
            }

            for k in 0..n {
                let expected = if k == 0 {
                    -cosexp::f_closed(n, n - 1, y)
                } else {
                    cosexp::f_closed(n, k - 1, y)
                };
                derivative_err =
                    derivative_err.max((stencil_derivative(n, k, y, 1e-3) - expected).abs());
            }
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    let identity_worst = squared_sum_err
        .max(alternating_err)
        .max(addition_err)
        .max(inverse_err)
        .max(power_err)
        .max(projection_err)
        .max(derivative_err);
    let pass = series_err <= 1e-10 && identity_worst <= 1e-9 && elapsed < 30.0;
    let detail = format!(
        "series vs closed {:.2e}; squared-sum {:.2e}, alternating {:.2e}, addition {:.2e}, inverse {:.2e}, power {:.2e}, projection-product {:.2e}, derivative chain {:.2e}; {:.2}s",
        series_err,
        squared_sum_err,
        alternating_err,
        addition_err,
        inverse_err,
        power_err,
        projection_err,
        derivative_err,
        elapsed
    );
    assert!(report(pass, "criterion 4", &detail), "{detail}");
}

#[test]
fn criterion_05_form_round_trips() {
    let mut rng = rng_for(5);
    let mut worst = 0.0f64;
    for &n in &[4usize, 6, 8] {
        for _ in 0..500 {
            let u = sample_invertible(&mut rng, n, 1e-2);
            let e = exponential_form(&u).unwrap();
            worst = worst.max(max_diff(&e.reconstruct().unwrap(), &u));
            let t = trigonometric_form(&u).unwrap();
            worst = worst.max(max_diff(&t.reconstruct().unwrap(), &u));
        }
    }
    let pass = worst <= 1e-10;
    let detail = format!(
        "exponential and trigonometric forms round-trip 500 values per n in {{4,6,8}}, max coefficient error {:.2e}",
        worst
    );
    assert!(report(pass, "criterion 5", &detail), "{detail}");
}

#[test]
fn criterion_06_derivative_relations() {
    let mut rng = rng_for(6);
    let mut worst = 0.0f64;
    for &n in &[4usize, 6] {
        for _ in 0..20 {
            let u0 = sample(&mut rng, n).scale(0.6);
            for f in [
                (|u: &PlanarNC| functions::exp(u).unwrap()) as fn(&PlanarNC) -> PlanarNC,
                |u| u.mul(u).unwrap(),
                |u| u.mul(u).unwrap().mul(u).unwrap(),
                |u| functions::sin(u).unwrap(),
            ] {
                worst = worst.max(cr_check(f, &u0, 1e-5).first_order);
            }
        }
    }
    let pass = worst <= 1e-6;
    let detail = format!(
        "first-order partial-derivative chains for exp, square, cube, sin at 20 points per n in {{4,6}}, max residual {:.2e}",
        worst
    );
    assert!(report(pass, "criterion 6", &detail), "{detail}");
}

fn plane_circle(n: usize, center: &PlanarNC, circled: &[usize], r: f64, samples: usize) -> SampledPath {
    let c0 = to_canonical(center);
    let mut pts = Vec::with_capacity(samples + 1);
    for i in 0..samples {
        let t = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
        let mut planes = c0.planes().to_vec();
        for (j, pl) in planes.iter_mut().enumerate() {
            if circled.contains(&j) {
                *pl = (pl.0 + r * t.cos(), pl.1 + r * t.sin());
            } else {
                *pl = (pl.0 + 1.5 + r, pl.1);
            }
        }
        pts.push(from_canonical(&CanonicalCoords::new(n, planes).unwrap()));
    }
    pts.push(pts[0].clone());
    SampledPath::new(pts, true).unwrap()
}

#[test]
fn criterion_07_residue_calculus() {
    let start = Instant::now();
    let tau = 2.0 * std::f64::consts::PI;
    let mut rng = rng_for(7);

    let mut winding_err = 0.0f64;
    let mut power_err = 0.0f64;
    let mut cauchy_err = 0.0f64;
    let mut component_sum = 0.0f64;
    for &n in &[4usize, 6] {
        let u0 = sample(&mut rng, n).scale(0.4);
        let basis = canonical_basis(n).unwrap();
        let opts = QuadratureOptions {
            singularities: vec![u0.clone()],
            ..QuadratureOptions::default()
        };

        let all: Vec<usize> = (0..n / 2).collect();
        let mut loops: Vec<(Vec<usize>, PlanarNC)> = Vec::new();
        for k in 0..n / 2 {
            loops.push((vec![k], basis.etilde(k + 1).scale(tau)));
        }
        let full_combo = (1..=n / 2)
            .map(|k| basis.etilde(k))
            .fold(PlanarNC::zero(n).unwrap(), |acc, e| acc.add(e).unwrap());
        loops.push((all.clone(), full_combo.scale(tau)));
        for (circled, expected) in &loops {
            let path = plane_circle(n, &u0, circled, 0.7, 4096);
            winding_err = winding_err.max(max_diff(&residue_integral(&u0, &path).unwrap(), expected));
            let quad = line_integral(|u| u.sub(&u0)?.inverse(1e-12), &path, &opts).unwrap();
            winding_err = winding_err.max(max_diff(&quad, expected));
        }

        let origin = PlanarNC::zero(n).unwrap();
        let origin_opts = QuadratureOptions {
            singularities: vec![origin.clone()],
            ..QuadratureOptions::default()
        };
        let origin_loop = plane_circle(n, &origin, &all, 1.0, 4096);
        for m in [-3.0f64, -2.0, 0.0, 1.0, 2.0] {
            let integral =
                line_integral(|u| functions::pow(u, m), &origin_loop, &origin_opts).unwrap();
            power_err = power_err.max(integral.coeffs().iter().fold(0.0f64, |a, c| a.max(c.abs())));
        }

        for k in 0..n / 2 {
            let path = plane_circle(n, &u0, &[k], 0.7, 4096);
            let rep = cauchy_value(|u| functions::exp(u), &u0, &path, &opts).unwrap();
            cauchy_err = cauchy_err.max(max_diff(&rep.value, &rep.formula));
            component_sum = component_sum.max(rep.component_sum.abs());
        }
    }
    let elapsed = start.elapsed().as_secs_f64();

    let a = report(
        winding_err <= 1e-6 && elapsed < 60.0,
        "criterion 7 (residue loops)",
        &format!(
            "winding-form and quadrature residues on 4096-sample loops, max residual {:.2e}",
            winding_err
        ),
    );
    let b = report(
        power_err <= 1e-6,
        "criterion 7 (closed-loop powers)",
        &format!(
            "integral of u^m for m in {{-3,-2,0,1,2}} around the origin, max magnitude {:.2e}",
            power_err
        ),
    );
    let c = report(
        cauchy_err <= 1e-6,
        "criterion 7 (integral formula)",
        &format!("f = exp quadrature vs residue product, max residual {:.2e}", cauchy_err),
    );
    let d = report(
        component_sum <= 1e-8,
        "criterion 7 (component identity)",
        &format!(
            "claimed vanishing of the component sum of the integral; measured max |sum| {:.2e}",
            component_sum
        ),
    );
    println!("criterion 7 runtime {:.2}s", elapsed);
    assert!(a, "residue loop residual {winding_err:.2e} exceeds 1e-6 or runtime {elapsed:.2}s >= 60s");
    assert!(b, "closed-loop power residual {power_err:.2e} exceeds 1e-6");
    assert!(c, "integral-formula residual {cauchy_err:.2e} exceeds 1e-6");
    assert!(
        d,
        "component sum of the loop integral measured {component_sum:.2e}, claimed <= 1e-8; the sum equals 2*pi times the weighted component sums of the antisymmetric basis units, which are nonzero in this algebra"
    );
}

#[test]
fn criterion_08_polynomial_factorization() {
    let mut rng = rng_for(8);
    let mut count_ok = true;
    let mut distinct_ok = true;
    let mut root_err = 0.0f64;
    let mut recover_err = 0.0f64;
    for &n in &[4usize, 6, 8] {
        let p = NPolynomial::new(vec![PlanarNC::zero(n).unwrap(), PlanarNC::one(n).unwrap()])
            .unwrap();
        let expected = 1usize << (n / 2 - 1);
        let assemblies = factor(&p, expected).unwrap();
        count_ok &= assemblies.len() == expected
            && assemblies[0].assembly_count == expected as u128;

        let minus_one = PlanarNC::one(n).unwrap().neg();
        let mut keys: Vec<Vec<u64>> = Vec::new();
        for asm in &assemblies {
            for r in &asm.assembled_roots {
                root_err = root_err.max(max_diff(&r.mul(r).unwrap(), &minus_one));
            }
            let mut sorted: Vec<Vec<f64>> =
                asm.assembled_roots.iter().map(|r| r.coeffs().to_vec()).collect();
            sorted.sort_by(|a, b| {
                a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
            });
            let key: Vec<u64> = sorted
                .iter()
                .flatten()
                .map(|x| ((x / 1e-6).round() as i64) as u64)
                .collect();
            if keys.contains(&key) {
                distinct_ok = false;
            }
            keys.push(key);
        }

        for degree in 2..=5usize {
            let roots: Vec<PlanarNC> = (0..degree).map(|_| sample(&mut rng, n).scale(0.7)).collect();
            let p = NPolynomial::from_roots(&roots).unwrap();
            let recovered = factor(&p, 1).unwrap();
            let back = NPolynomial::from_roots(&recovered[0].assembled_roots).unwrap();
            for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
                recover_err = recover_err.max(max_diff(a, b));
            }
        }
    }
    let pass = count_ok && distinct_ok && root_err <= 1e-10 && recover_err <= 1e-8;
    let detail = format!(
        "u^2+1 assembly counts {} and distinct, root residual {:.2e}; planted degree 2..5 coefficient recovery {:.2e}",
        if count_ok { "match 2^(n/2-1)" } else { "WRONG" },
        root_err,
        recover_err
    );
    assert!(report(pass, "criterion 8", &detail), "{detail}");
}

#[test]
fn criterion_09_matrix_representation() {
    let mut rng = rng_for(9);
    let mut hom_err = 0.0f64;
    let mut block_err = 0.0f64;
    let mut det_err = 0.0f64;
    for &n in &[2usize, 4, 6, 8] {
        for _ in 0..200 {
            let a = sample(&mut rng, n);
            let b = sample(&mut rng, n);
            let prod_rep = matrixrep::matrix_rep(&a.mul(&b).unwrap());
            let rep_prod =
                matrixrep::mat_mul(&matrixrep::matrix_rep(&a), &matrixrep::matrix_rep(&b))
                    .unwrap();
            let scale = 1.0 + a.modulus() * b.modulus();
            for r in 0..n {
                for c in 0..n {
                    hom_err = hom_err.max((prod_rep.get(r, c) - rep_prod.get(r, c)).abs() / scale);
                }
            }
            let blocks = matrixrep::block_diagonalize(&a).unwrap();
            let coords = to_canonical(&a);
            for (k, bl) in blocks.iter().enumerate() {
                let (v, vt) = coords.plane(k + 1);
                block_err = block_err
                    .max((bl[0][0] - v).abs())
                    .max((bl[0][1] - vt).abs())
                    .max((bl[1][0] + vt).abs())
                    .max((bl[1][1] - v).abs());
            }
        }
        for _ in 0..50 {
            let a = sample(&mut rng, n);
            let dense = matrixrep::det_dense(&matrixrep::matrix_rep(&a));
            let radii = a.determinant();
            det_err = det_err.max((dense - radii).abs() / radii.abs().max(1e-300));
        }
    }
    let pass = hom_err <= 1e-10 && block_err <= 1e-10 && det_err <= 1e-9;
    let detail = format!(
        "homomorphism {:.2e}, block diagonalization {:.2e}, determinant vs squared-radius product rel {:.2e} for n <= 8",
        hom_err, block_err, det_err
    );
    assert!(report(pass, "criterion 9", &detail), "{detail}");
}

#[test]
fn criterion_10_convergence_cylinder() {
    let n = 4usize;
    let r1 = 0.6f64;
    let r2 = 1.1f64;
    let basis = canonical_basis(n).unwrap();
    let coeffs: Vec<PlanarNC> = (0..40)
        .map(|l| {
            basis
                .e(1)
                .scale(r1.powi(-(l as i32)))
                .add(&basis.e(2).scale(r2.powi(-(l as i32))))
                .unwrap()
        })
        .collect();
    let series = NCSeries::new(coeffs).unwrap();
    let radii = radius_per_plane(&series);

    let point = |t1: f64, t2: f64| {
        from_canonical(&CanonicalCoords::new(n, vec![(t1, 0.0), (t2, 0.0)]).unwrap())
    };
    let diverges = |t: f64| {
        let u = point(t, 0.1);
        let mut p = PlanarNC::one(n).unwrap();
        let mut norms = Vec::new();
        for a in series.coeffs() {
            norms.push(a.mul(&p).unwrap().modulus());
            p = p.mul(&u).unwrap();
        }
        norms[38] > norms[20]
    };
    let (mut lo, mut hi) = (0.3f64, 0.9f64);
    assert!(!diverges(lo) && diverges(hi));
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if diverges(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let observed = 0.5 * (lo + hi);

    let inside = eval_series(&series, &point(0.9 * radii[0], 0.1)).is_ok();
    let outside = matches!(
        eval_series(&series, &point(1.1 * radii[0], 0.1)),
        Err(Error::OutsideConvergence(planes)) if planes == vec![1]
    );

    let boundary_ok = (radii[0] - observed).abs() <= 0.05 * observed;
    let pass = boundary_ok && inside && outside;
    let detail = format!(
        "estimated plane radii ({:.4}, {:.4}) vs observed divergence boundary {:.4}; evaluation accepted inside and rejected outside",
        radii[0], radii[1], observed
    );
    assert!(report(pass, "criterion 10", &detail), "{detail}");
}
