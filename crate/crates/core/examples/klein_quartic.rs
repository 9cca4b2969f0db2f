// Diagonal symmetry of the Klein quartic x^3 y + y^3 z + z^3 x.

use wph::{
    curve_bound, distinguished_minor, fixing_group, lin_diagonal_order, HypersurfaceFamily,
    PolynomialSupport,
};

pub fn run_example() -> wph::Result<()> {
    let klein = PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[3, 1, 0], &[0, 3, 1], &[1, 0, 3]])?;

    let group = fixing_group(&klein);
    println!(
        "fixing group: {group} (order {})",
        group.order.clone().unwrap()
    );
    println!("modulo scalars: {}", lin_diagonal_order(&klein)?);

    let minor = distinguished_minor(&klein)?;
    println!("distinguished minor:\n{}", minor.matrix);
    println!("det = {} <= {}", minor.determinant, minor.bound);
    assert!(minor.within_bound);

    let bound = curve_bound(&HypersurfaceFamily::from_weights(&[1, 1, 1], 4)?)?;
    println!(
        "plane quartics: |Lin| <= {} unless exceptional",
        bound.bound
    );
    for e in &bound.exceptions {
        println!("  {}: {} of order {}", e.name, e.group, e.order);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("klein quartic example");
}
