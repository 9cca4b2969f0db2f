// Full classification report for the surface X_180 in P(36,31,30,25).

use wph::cli::check_report;
use wph::JordanTable;

pub fn run_example() -> wph::Result<()> {
    let report = check_report(&[36, 31, 30, 25], 180, &JordanTable::default())?;
    print!("{}", report.render_text());
    assert_eq!(
        report
            .forced_central_group
            .as_ref()
            .and_then(|g| g.order.as_deref()),
        Some("5")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("flagship example");
}
