// The diagonal symmetries of Fermat hypersurfaces, predicted and computed.

use wph::{fermat_prediction, lin_diagonal_order, DiagonalOrder, PolynomialSupport};

pub fn run_example() -> wph::Result<()> {
    println!(
        "{:>3} {:>3} {:>12} {:>10} {:>10}",
        "n", "d", "|Lin|", "d^(n+1)", "computed"
    );
    for n in 1..=3 {
        for d in 3..=6 {
            let p = fermat_prediction(n, d)?;
            let computed = match lin_diagonal_order(&PolynomialSupport::fermat(n, d)?)? {
                DiagonalOrder::Finite(k) => k,
                DiagonalOrder::Infinite { .. } => unreachable!("Fermat supports have full rank"),
            };
            assert_eq!(computed, p.diagonal);
            println!(
                "{n:>3} {d:>3} {:>12} {:>10} {computed:>10}",
                p.total, p.diagonal
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fermat example");
}
