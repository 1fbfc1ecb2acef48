//! Loading geometry from a configuration file: dump the built-in data,
//! perturb one intersection number, and watch the dependent checks fail.
//!
//! ```bash
//! cargo run -p prymcalc --example custom_geometry
//! ```

use prymcalc::config;
use prymcalc::report;
use prymcalc::varieties::builtin_presentations;

fn main() {
    let text = config::dump_builtin();
    println!("--- built-in geometry as config ---");
    for line in text.lines().take(12) {
        println!("{line}");
    }
    println!("...\n");

    // the dump parses back to the same data
    let parsed = config::parse(&text).unwrap();
    let geometry = parsed.into_geometry().unwrap();
    assert_eq!(geometry.y1, builtin_presentations().y1);

    let report = report::run(&geometry, "deg1.*").unwrap();
    println!(
        "clean geometry: {} checks, {} failed",
        report.summary.total, report.summary.failed
    );

    // one wrong intersection number breaks the pushforward identities
    let perturbed_text = text.replace("pair F^3 = 32", "pair F^3 = 33");
    let perturbed = config::parse(&perturbed_text)
        .unwrap()
        .into_geometry()
        .unwrap();
    let report = report::run(&perturbed, "deg1.*").unwrap();
    println!(
        "with F^3 = 33:  {} checks, {} failed",
        report.summary.total, report.summary.failed
    );
    for r in report.records.iter().filter(|r| !r.pass) {
        println!("  FAIL {}", r.id);
    }
}
