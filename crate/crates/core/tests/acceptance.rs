//! One line per acceptance criterion. Exits non-zero if any criterion fails.
//!
//! `cargo test --test acceptance -- 4 5` runs only criteria 4 and 5.

use braidwork_core::suite::{run_criterion, SuiteConfig, CRITERIA};

fn main() {
    let wanted: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for &(id, _, _) in CRITERIA.iter().filter(|c| wanted.is_empty() || wanted.contains(&c.0)) {
        let r = run_criterion(id, &cfg).expect("known criterion");
        println!("{r}");
        for n in &r.notes {
            println!("        {n}");
        }
        if !r.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
