// Partial derivatives and the weighted Euler identity.

use num_rational::BigRational;
use wph::{
    euler_check, partial_derivative, ExponentVector, HypersurfaceFamily, WeightedPolynomial,
};

pub fn run_example() -> wph::Result<()> {
    let fam = HypersurfaceFamily::from_weights(&[3, 2, 1], 6)?;
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let f = WeightedPolynomial::new(
        &fam,
        vec![
            (q(1, 1), ExponentVector(vec![2, 0, 0])),
            (q(-3, 2), ExponentVector(vec![0, 3, 0])),
            (q(5, 1), ExponentVector(vec![1, 1, 1])),
            (q(7, 3), ExponentVector(vec![0, 0, 6])),
        ],
    )?;
    println!("f = {f}");
    for i in 0..3 {
        println!("df/dx{i} = {}", partial_derivative(&f, i)?);
    }
    let holds = euler_check(&f);
    println!("sum a_i x_i df/dx_i = d f: {holds}");
    assert!(holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("euler example");
}
