// Calabi-Yau weight systems: the 3 elliptic curves and the 95 K3 surfaces.

use wph::{enumerate_families, SearchConstraints};

pub fn run_example() -> wph::Result<()> {
    let elliptic = enumerate_families(&SearchConstraints::calabi_yau(1, 30))?;
    println!("elliptic curves:");
    for f in &elliptic {
        println!("  {f}");
    }

    let k3 = enumerate_families(&SearchConstraints::calabi_yau(2, 300))?;
    println!("K3 surfaces: {} families", k3.len());
    for f in k3.iter().take(5) {
        println!("  {f}");
    }
    println!("  ...");
    println!("  {}", k3.last().unwrap());
    assert_eq!((elliptic.len(), k3.len()), (3, 95));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("census example");
}
