//! JSON and CSV emission with every float at 17 significant digits, so
//! printed values re-parse to the identical bit pattern.

use nplanar::PlanarNC;

pub fn num(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn num_array(xs: &[f64]) -> String {
    let body: Vec<String> = xs.iter().map(|&x| num(x)).collect();
    format!("[{}]", body.join(","))
}

pub fn opt_num_array(xs: &[Option<f64>]) -> String {
    let body: Vec<String> = xs
        .iter()
        .map(|x| match x {
            Some(v) => num(*v),
            None => "null".to_string(),
        })
        .collect();
    format!("[{}]", body.join(","))
}

pub fn pair_array(ps: &[(f64, f64)]) -> String {
    let body: Vec<String> = ps.iter().map(|&(a, b)| format!("[{},{}]", num(a), num(b))).collect();
    format!("[{}]", body.join(","))
}

pub fn value(u: &PlanarNC) -> String {
    format!("{{\"n\":{},\"coeffs\":{}}}", u.n(), num_array(u.coeffs()))
}

pub fn value_array(us: &[PlanarNC]) -> String {
    let body: Vec<String> = us.iter().map(value).collect();
    format!("[{}]", body.join(","))
}
