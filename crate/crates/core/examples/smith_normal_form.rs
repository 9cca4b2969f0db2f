// Smith normal form with transformation matrices.

use wph::{integer_determinant, smith_normal_form, IntMatrix};

pub fn run_example() -> wph::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])?;
    let snf = smith_normal_form(&m);
    println!("M =\n{m}");
    println!("D =\n{}", snf.d);
    println!(
        "invariant factors: {:?}",
        snf.invariant_factors
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );
    assert_eq!(snf.u.mul(&m)?.mul(&snf.v)?, snf.d);
    println!("det M = {}", integer_determinant(&m)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("smith normal form example");
}
