//! Seeded property suites behind `verify all`.  Each suite returns a
//! pass/fail line; residual thresholds mirror the library's own tests.

use nplanar::canonical::{
    canonical_basis, from_canonical, mul_canonical, to_canonical, CanonicalCoords,
};
use nplanar::integration::{line_integral, residue_integral, QuadratureOptions, SampledPath};
use nplanar::polynomial::{factor, NPolynomial};
use nplanar::{analysis, cosexp, functions, matrixrep, PlanarNC};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct SuiteOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub fn sample(rng: &mut ChaCha8Rng, n: usize) -> PlanarNC {
    let coeffs: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    PlanarNC::new(coeffs).expect("even n")
}

fn max_coeff_diff(a: &PlanarNC, b: &PlanarNC) -> f64 {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn ring(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut commutative = true;
    for _ in 0..200 {
        let a = sample(&mut rng, n);
        let b = sample(&mut rng, n);
        let c = sample(&mut rng, n);
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        if ab.coeffs() != ba.coeffs() {
            commutative = false;
        }
        let scale = 1.0 + a.modulus() * b.modulus() * c.modulus();
        let assoc = max_coeff_diff(&ab.mul(&c).unwrap(), &a.mul(&b.mul(&c).unwrap()).unwrap());
        let distrib = max_coeff_diff(
            &a.mul(&b.add(&c).unwrap()).unwrap(),
            &ab.add(&a.mul(&c).unwrap()).unwrap(),
        );
        worst = worst.max(assoc / scale).max(distrib / scale);
    }
    SuiteOutcome {
        name: "ring",
        pass: commutative && worst <= 1e-12,
        detail: format!(
            "commutativity {}, max assoc/distrib residual {:.2e} over 200 triples",
            if commutative { "exact" } else { "BROKEN" },
            worst
        ),
    }
}

fn dualmul(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let a = sample(&mut rng, n);
        let b = sample(&mut rng, n);
        let direct = a.mul(&b).unwrap();
        let via_planes = from_canonical(&mul_canonical(&to_canonical(&a), &to_canonical(&b)).unwrap());
        let scale = 1.0 + a.modulus() * b.modulus();
        worst = worst.max(max_coeff_diff(&direct, &via_planes) / scale);
    }
    SuiteOutcome {
        name: "dualmul",
        pass: worst <= 1e-12,
        detail: format!("max direct-vs-canonical residual {:.2e} over 200 pairs", worst),
    }
}

fn cosexp_suite(n: usize, _seed: u64) -> SuiteOutcome {
    let mut worst = 0.0f64;
    for k in 0..n {
        for &y in &[-3.0, -1.5, 0.0, 1.5, 3.0] {
            let closed = cosexp::f_closed(n, k, y);
            let series = cosexp::f_series(n, k, y, 1e-14);
            worst = worst.max((closed - series).abs() / (1.0 + closed.abs()));
        }
    }
    let fy: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, 0.7)).collect();
    let fz: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, -0.4)).collect();
    let sum: Vec<f64> = (0..n).map(|k| cosexp::f_closed(n, k, 0.3)).collect();
    let conv = cosexp::negacyclic_convolve(&fy, &fz);
    let add_err = conv
        .iter()
        .zip(&sum)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    worst = worst.max(add_err);
    SuiteOutcome {
        name: "cosexp",
        pass: worst <= 1e-10,
        detail: format!("max series/closed and addition residual {:.2e}", worst),
    }
}

fn forms(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51_7cc1);
    let mut worst = 0.0f64;
    let mut tried = 0;
    while tried < 100 {
        let u = sample(&mut rng, n);
        let min_rho = to_canonical(&u).radii().into_iter().fold(f64::INFINITY, f64::min);
        if min_rho < 1e-3 {
            continue;
        }
        tried += 1;
        let e = nplanar::canonical::exponential_form(&u).unwrap();
        worst = worst.max(max_coeff_diff(&e.reconstruct().unwrap(), &u));
        let t = nplanar::canonical::trigonometric_form(&u).unwrap();
        worst = worst.max(max_coeff_diff(&t.reconstruct().unwrap(), &u));
    }
    SuiteOutcome {
        name: "forms",
        pass: worst <= 1e-10,
        detail: format!("max round-trip coefficient error {:.2e} over 100 values", worst),
    }
}

fn cr(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0ffee);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let u0 = sample(&mut rng, n).scale(0.6);
        let exp_report = analysis::cr_check(|u| functions::exp(u).unwrap(), &u0, 1e-5);
        let sq_report = analysis::cr_check(|u| u.mul(u).unwrap(), &u0, 1e-5);
        worst = worst.max(exp_report.first_order).max(sq_report.first_order);
    }
    SuiteOutcome {
        name: "cr",
        pass: worst <= 1e-6,
        detail: format!("max first-order residual {:.2e} at 5 points", worst),
    }
}

fn plane_loop(n: usize, center: &PlanarNC, k0: usize, r: f64, samples: usize) -> SampledPath {
    let c = to_canonical(center);
    let mut pts = Vec::with_capacity(samples + 1);
    for i in 0..samples {
        let t = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
        let mut planes = c.planes().to_vec();
        for (j, pl) in planes.iter_mut().enumerate() {
            if j == k0 {
                *pl = (pl.0 + r * t.cos(), pl.1 + r * t.sin());
            } else {
                *pl = (pl.0 + 1.2 + r, pl.1);
            }
        }
        pts.push(from_canonical(&CanonicalCoords::new(n, planes).unwrap()));
    }
    pts.push(pts[0].clone());
    SampledPath::new(pts, true).unwrap()
}

fn residue(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0dd5ea);
    let u0 = sample(&mut rng, n).scale(0.5);
    let basis = canonical_basis(n).unwrap();
    let tau = 2.0 * std::f64::consts::PI;
    let mut winding_err = 0.0f64;
    for k0 in 0..n / 2 {
        let path = plane_loop(n, &u0, k0, 0.8, 128);
        let got = residue_integral(&u0, &path).unwrap();
        winding_err = winding_err.max(max_coeff_diff(&got, &basis.etilde(k0 + 1).scale(tau)));
    }
    let path = plane_loop(n, &u0, 0, 0.8, 64);
    let opts = QuadratureOptions {
        rel_tol: 1e-9,
        singularities: vec![u0.clone()],
        ..QuadratureOptions::default()
    };
    let quad = line_integral(|u| u.sub(&u0)?.inverse(1e-12), &path, &opts).unwrap();
    let quad_err = max_coeff_diff(&quad, &basis.etilde(1).scale(tau));
    SuiteOutcome {
        name: "residue",
        pass: winding_err <= 1e-9 && quad_err <= 1e-6,
        detail: format!(
            "max winding-form residual {:.2e}, quadrature residual {:.2e}",
            winding_err, quad_err
        ),
    }
}

fn poly(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9021);
    let square_plus_one = NPolynomial::new(vec![
        PlanarNC::zero(n).unwrap(),
        PlanarNC::one(n).unwrap(),
    ])
    .unwrap();
    let expected = 1u128 << (n / 2 - 1);
    let assemblies = factor(&square_plus_one, 1 << 12).unwrap();
    let count_ok = assemblies[0].assembly_count == expected && assemblies.len() as u128 == expected;
    let mut root_err = 0.0f64;
    let minus_one = PlanarNC::one(n).unwrap().neg();
    for asm in &assemblies {
        for r in &asm.assembled_roots {
            root_err = root_err.max(max_coeff_diff(&r.mul(r).unwrap(), &minus_one));
        }
    }
    let planted: Vec<PlanarNC> = (0..3).map(|_| sample(&mut rng, n).scale(0.7)).collect();
    let p = NPolynomial::from_roots(&planted).unwrap();
    let recovered = factor(&p, 1).unwrap();
    let back = NPolynomial::from_roots(&recovered[0].assembled_roots).unwrap();
    let mut coeff_err = 0.0f64;
    for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
        coeff_err = coeff_err.max(max_coeff_diff(a, b));
    }
    SuiteOutcome {
        name: "poly",
        pass: count_ok && root_err <= 1e-8 && coeff_err <= 1e-8,
        detail: format!(
            "u^2+1 assemblies {} (expect {}), root residual {:.2e}, planted cubic residual {:.2e}",
            assemblies.len(),
            expected,
            root_err,
            coeff_err
        ),
    }
}

fn matrix(n: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb10c);
    let mut hom_err = 0.0f64;
    let mut det_err = 0.0f64;
    let mut block_err = 0.0f64;
    for _ in 0..50 {
        let a = sample(&mut rng, n);
        let b = sample(&mut rng, n);
        let prod_rep = matrixrep::matrix_rep(&a.mul(&b).unwrap());
        let rep_prod =
            matrixrep::mat_mul(&matrixrep::matrix_rep(&a), &matrixrep::matrix_rep(&b)).unwrap();
        let scale = 1.0 + a.modulus() * b.modulus();
        for r in 0..n {
            for c in 0..n {
                hom_err = hom_err.max((prod_rep.get(r, c) - rep_prod.get(r, c)).abs() / scale);
            }
        }
        let blocks = matrixrep::block_diagonalize(&a).unwrap();
        let planes = to_canonical(&a);
        for (k, bl) in blocks.iter().enumerate() {
            let (v, vt) = planes.plane(k + 1);
            block_err = block_err
                .max((bl[0][0] - v).abs())
                .max((bl[0][1] - vt).abs())
                .max((bl[1][0] + vt).abs())
                .max((bl[1][1] - v).abs());
        }
    }
    for _ in 0..10 {
        let a = sample(&mut rng, n);
        let dd = matrixrep::det_dense(&matrixrep::matrix_rep(&a));
        let dv = a.determinant();
        det_err = det_err.max((dd - dv).abs() / (1e-30 + dv.abs()));
    }
    SuiteOutcome {
        name: "matrix",
        pass: hom_err <= 1e-10 && block_err <= 1e-10 && det_err <= 1e-9,
        detail: format!(
            "homomorphism {:.2e}, blocks {:.2e}, determinant rel {:.2e}",
            hom_err, block_err, det_err
        ),
    }
}

pub fn run_all(n: usize, seed: u64) -> Vec<SuiteOutcome> {
    vec![
        ring(n, seed),
        dualmul(n, seed),
        cosexp_suite(n, seed),
        forms(n, seed),
        cr(n, seed),
        residue(n, seed),
        poly(n, seed),
        matrix(n, seed),
    ]
}
