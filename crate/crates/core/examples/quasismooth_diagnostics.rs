// Which index subsets block a quasismooth member.

use wph::{quasismooth_exists, HypersurfaceFamily};

pub fn run_example() -> wph::Result<()> {
    for (w, d) in [
        (vec![1u64, 1, 3], 5u64),
        (vec![36, 31, 30, 25], 180),
        (vec![5, 3, 2], 12),
        (vec![2, 1, 1, 1, 1], 2),
    ] {
        let fam = HypersurfaceFamily::from_weights(&w, d)?;
        let r = quasismooth_exists(&fam)?;
        println!(
            "{fam}: quasismooth member {}",
            if r.exists { "exists" } else { "does not exist" }
        );
        if r.is_linear_cone {
            println!("  linear cone");
        }
        for f in &r.failing_subsets {
            println!(
                "  weights {:?}: {} of {} witnesses",
                f.weights,
                f.witnesses_b.len(),
                f.required
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quasismooth example");
}
