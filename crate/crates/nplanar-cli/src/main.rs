//! Command-line front end for the nplanar library.
//!
//! Exit codes: 0 success, 1 domain error (nodal singularity, bad input
//! value, non-convergence), 2 usage error.  All numeric output carries 17
//! significant digits so values re-parse bit-identically.

mod emit;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nplanar::canonical::{polar_form, to_canonical};
use nplanar::integration::{plane_windings, residue_integral, SampledPath};
use nplanar::polynomial::{factor, NPolynomial};
use nplanar::{analysis, cosexp, functions, matrixrep, PlanarNC};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

#[derive(Parser)]
#[command(name = "nplanar", version, about = "Planar n-complex arithmetic and analysis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply an elementary function to a value, JSON in and out
    Eval {
        #[arg(long = "fn", value_enum)]
        func: EvalFn,
        /// Input value as {"n":..., "coeffs":[...]}
        #[arg(long)]
        value: String,
        /// Real exponent, required for --fn pow
        #[arg(long, required_if_eq("func", "pow"), allow_negative_numbers = true)]
        exponent: Option<f64>,
    },
    /// Plane decomposition, radii, and angles of a value
    Canonical {
        #[arg(long)]
        value: String,
    },
    /// CSV table of the n cosexponential functions over a range
    Tabulate {
        /// Dimension, any integer >= 1
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, allow_negative_numbers = true)]
        step: f64,
    },
    /// Factor a monic polynomial into per-plane roots and assemblies
    Factor {
        /// Polynomial as {"n":..., "coeffs":[<value>, ...]}, highest power first
        #[arg(long)]
        poly: String,
        /// Maximum number of assemblies to enumerate; 1 keeps the canonical one
        #[arg(long, default_value_t = 1)]
        enumerate: usize,
    },
    /// Residue combination and per-plane windings of a closed loop
    Residue {
        /// Pole as {"n":..., "coeffs":[...]}
        #[arg(long)]
        pole: String,
        /// File holding a JSON array of loop samples, first equal to last
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    /// Matrix representation of a value and its canonical blocks
    Matrix {
        #[arg(long)]
        value: String,
    },
    /// Property verification
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Residuals of the differentiability relations at random points
    Cr {
        #[arg(long = "fn", value_enum)]
        func: CrFn,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Central-difference step
        #[arg(long, default_value_t = 1e-5, allow_negative_numbers = true)]
        h: f64,
    },
    /// Run every property suite, exit nonzero if any fails
    All {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFn {
    Exp,
    Ln,
    Pow,
    Cos,
    Sin,
    Cosh,
    Sinh,
}

#[derive(Clone, Copy, ValueEnum)]
enum CrFn {
    Exp,
    Square,
    Cube,
    Sin,
    Cos,
    Cosh,
    Sinh,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_value(s: &str) -> Result<PlanarNC, String> {
    serde_json::from_str(s).map_err(|e| format!("bad value: {e}"))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Eval { func, value, exponent } => {
            let u = parse_value(&value)?;
            let out = match func {
                EvalFn::Exp => functions::exp(&u),
                EvalFn::Ln => functions::ln(&u),
                EvalFn::Pow => functions::pow(&u, exponent.expect("required by clap")),
                EvalFn::Cos => functions::cos(&u),
                EvalFn::Sin => functions::sin(&u),
                EvalFn::Cosh => functions::cosh(&u),
                EvalFn::Sinh => functions::sinh(&u),
            }
            .map_err(|e| e.to_string())?;
            println!("{}", emit::value(&out));
        }
        Cmd::Canonical { value } => {
            let u = parse_value(&value)?;
            let coords = to_canonical(&u);
            let polar = polar_form(&u);
            println!(
                "{{\"planes\":{},\"rho_k\":{},\"phi_k\":{},\"psi\":{},\"d\":{},\"amplitude\":{}}}",
                emit::pair_array(coords.planes()),
                emit::num_array(&polar.rho),
                emit::opt_num_array(&polar.phi),
                emit::num_array(&polar.psi),
                emit::num(polar.d),
                emit::num(polar.amplitude),
            );
        }
        Cmd::Tabulate { n, from, to, step } => {
            if n == 0 {
                return Err("n must be at least 1".into());
            }
            if !(step.is_finite() && step > 0.0) || !from.is_finite() || !to.is_finite() {
                return Err("range must be finite with positive step".into());
            }
            let header: Vec<String> = (0..n).map(|k| format!("f{n}_{k}")).collect();
            println!("y,{}", header.join(","));
            let mut i = 0u64;
            loop {
                let y = from + step * i as f64;
                if y > to + step * 1e-9 {
                    break;
                }
                let row: Vec<String> =
                    (0..n).map(|k| emit::num(cosexp::f_closed(n, k, y))).collect();
                println!("{},{}", emit::num(y), row.join(","));
                i += 1;
            }
        }
        Cmd::Factor { poly, enumerate } => {
            #[derive(Deserialize)]
            struct PolyIn {
                n: usize,
                coeffs: Vec<PlanarNC>,
            }
            let input: PolyIn =
                serde_json::from_str(&poly).map_err(|e| format!("bad polynomial: {e}"))?;
            let p = NPolynomial::new(input.coeffs).map_err(|e| e.to_string())?;
            if p.n() != input.n {
                return Err(format!(
                    "declared dimension {} does not match coefficients of dimension {}",
                    input.n,
                    p.n()
                ));
            }
            let assemblies = factor(&p, enumerate).map_err(|e| e.to_string())?;
            let lists: Vec<String> = assemblies
                .iter()
                .map(|a| emit::value_array(&a.assembled_roots))
                .collect();
            let per_plane: Vec<String> = assemblies[0]
                .per_plane_roots
                .iter()
                .map(|plane| emit::pair_array(plane))
                .collect();
            println!(
                "{{\"n\":{},\"degree\":{},\"assembly_count\":{},\"per_plane_roots\":[{}],\"assemblies\":[{}]}}",
                p.n(),
                p.degree(),
                assemblies[0].assembly_count,
                per_plane.join(","),
                lists.join(","),
            );
        }
        Cmd::Residue { pole, loop_file } => {
            let u0 = parse_value(&pole)?;
            let text = std::fs::read_to_string(&loop_file)
                .map_err(|e| format!("cannot read {}: {e}", loop_file.display()))?;
            let points: Vec<PlanarNC> =
                serde_json::from_str(&text).map_err(|e| format!("bad loop file: {e}"))?;
            let path = SampledPath::new(points, true).map_err(|e| e.to_string())?;
            let windings = plane_windings(&u0, &path).map_err(|e| e.to_string())?;
            let value = residue_integral(&u0, &path).map_err(|e| e.to_string())?;
            let winding_list: Vec<String> = windings.iter().map(|w| w.to_string()).collect();
            println!(
                "{{\"value\":{},\"windings\":[{}]}}",
                emit::value(&value),
                winding_list.join(","),
            );
        }
        Cmd::Matrix { value } => {
            let u = parse_value(&value)?;
            let rep = matrixrep::matrix_rep(&u);
            let n = rep.n();
            let rows: Vec<String> = (0..n)
                .map(|r| {
                    let row: Vec<f64> = (0..n).map(|c| rep.get(r, c)).collect();
                    emit::num_array(&row)
                })
                .collect();
            let blocks = matrixrep::block_diagonalize(&u).map_err(|e| e.to_string())?;
            let block_strs: Vec<String> = blocks
                .iter()
                .map(|b| {
                    format!(
                        "[[{},{}],[{},{}]]",
                        emit::num(b[0][0]),
                        emit::num(b[0][1]),
                        emit::num(b[1][0]),
                        emit::num(b[1][1])
                    )
                })
                .collect();
            println!(
                "{{\"n\":{},\"matrix\":[{}],\"blocks\":[{}]}}",
                n,
                rows.join(","),
                block_strs.join(","),
            );
        }
        Cmd::Verify { which } => return verify(which),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(which: VerifyCmd) -> Result<ExitCode, String> {
    match which {
        VerifyCmd::Cr { func, n, seed, h } => {
            let name = match func {
                CrFn::Exp => "exp",
                CrFn::Square => "square",
                CrFn::Cube => "cube",
                CrFn::Sin => "sin",
                CrFn::Cos => "cos",
                CrFn::Cosh => "cosh",
                CrFn::Sinh => "sinh",
            };
            let f: Box<dyn Fn(&PlanarNC) -> PlanarNC> = match func {
                CrFn::Exp => Box::new(|u| functions::exp(u).unwrap()),
                CrFn::Square => Box::new(|u| u.mul(u).unwrap()),
                CrFn::Cube => Box::new(|u| u.mul(u).unwrap().mul(u).unwrap()),
                CrFn::Sin => Box::new(|u| functions::sin(u).unwrap()),
                CrFn::Cos => Box::new(|u| functions::cos(u).unwrap()),
                CrFn::Cosh => Box::new(|u| functions::cosh(u).unwrap()),
                CrFn::Sinh => Box::new(|u| functions::sinh(u).unwrap()),
            };
            PlanarNC::zero(n).map_err(|e| e.to_string())?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points = 20;
            let mut max_first = 0.0f64;
            let mut max_second = 0.0f64;
            for _ in 0..points {
                let u0 = suites::sample(&mut rng, n).scale(0.6);
                let report = analysis::cr_check(&f, &u0, h);
                max_first = max_first.max(report.first_order);
                max_second = max_second.max(report.second_order);
            }
            println!(
                "{{\"fn\":\"{}\",\"n\":{},\"seed\":{},\"h\":{},\"points\":{},\"max_first_order\":{},\"max_second_order\":{}}}",
                name,
                n,
                seed,
                emit::num(h),
                points,
                emit::num(max_first),
                emit::num(max_second),
            );
            Ok(ExitCode::SUCCESS)
        }
        VerifyCmd::All { n, seed } => {
            PlanarNC::zero(n).map_err(|e| e.to_string())?;
            let outcomes = suites::run_all(n, seed);
            let mut all_pass = true;
            for o in &outcomes {
                let tag = if o.pass { "[PASS]" } else { "[FAIL]" };
                println!("{} {}: {}", tag, o.name, o.detail);
                all_pass &= o.pass;
            }
            if all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}
