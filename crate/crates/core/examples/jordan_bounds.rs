// Order bounds from a user-supplied Jordan table.

use wph::{lin_order_bound, worst_case_cn, HypersurfaceFamily, JordanTable};

const TABLE: &str = "\
# user-supplied bounds for sizes without a built-in value
3 360 example entry
4 25920 example entry
";

pub fn run_example() -> wph::Result<()> {
    let table = JordanTable::parse(TABLE)?;
    assert_eq!(table.to_text(), TABLE);

    for (w, d) in [
        (vec![1u64, 1, 1], 4u64),
        (vec![3, 1, 1], 6),
        (vec![1, 1, 1, 1], 5),
        (vec![36, 31, 30, 25], 180),
    ] {
        let fam = HypersurfaceFamily::from_weights(&w, d)?;
        let b = lin_order_bound(&fam, &table)?;
        println!(
            "{fam}: J = {}, bound {} (floor {}), with (n+2)!: {}",
            b.jordan_constant, b.exact, b.floor, b.factorial_hypothesis
        );
    }
    for n in 0..=2 {
        println!(
            "worst case over {} weights: {}",
            n + 2,
            worst_case_cn(n, &table)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("jordan bounds example");
}
