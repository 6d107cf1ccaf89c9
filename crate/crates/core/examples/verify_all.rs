//! Runs every identity check at its default range.

use spk::catalog::{run_checks, CheckId, CheckOptions};

fn main() {
    let rows = run_checks(CheckId::ALL, 6, &CheckOptions::default());
    for r in &rows {
        println!("{r}");
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    println!("{} rows, {failed} failed", rows.len());
    std::process::exit(i32::from(failed > 0));
}
