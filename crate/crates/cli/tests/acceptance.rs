//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Tolerances live next to the claims: `ROOT_TIME_LIMIT`, `AXIOM_TIME_LIMIT`,
//! `E8_TIME_LIMIT` and `MIN_JORDAN_SAMPLES` in `atlas_cli::claims`.

use atlas_cli::claims::{AXIOM_TIME_LIMIT, E8_TIME_LIMIT, MIN_JORDAN_SAMPLES, ROOT_TIME_LIMIT};
use atlas_cli::{run_all, Options};

fn main() {
    println!(
        "tolerances: roots < {ROOT_TIME_LIMIT:?}, axioms < {AXIOM_TIME_LIMIT:?}, e8 build + Jacobi < {E8_TIME_LIMIT:?}, Jordan samples >= {MIN_JORDAN_SAMPLES}, exact equality elsewhere"
    );
    let report = run_all(None, &Options::default()).expect("suite runs");
    assert_eq!(report.criteria.len(), 15);
    let mut failed = Vec::new();
    for c in &report.criteria {
        let status = if c.pass() { "PASS" } else { "FAIL" };
        let passed = c.entries.iter().filter(|e| e.pass).count();
        println!("{} {status}  {}  ({passed}/{} claims)", c.id, c.title, c.entries.len());
        for e in c.entries.iter().filter(|e| !e.pass) {
            println!("    FAIL {}: {}", e.id, e.witness.as_deref().unwrap_or(""));
            failed.push(e.id.clone());
        }
    }
    let passed = report.criteria.iter().filter(|c| c.pass()).count();
    println!("{passed}/{} criteria pass", report.criteria.len());
    if !failed.is_empty() {
        eprintln!("failing claims: {failed:?}");
        std::process::exit(1);
    }
}
