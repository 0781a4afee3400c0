//! The full report the command-line tool prints, built from library calls.
//!
//!     cargo run --example class_report -- E 7 EVII

use theta_core::cli::{build_report, render_report};
use theta_core::rootsys::{Series, DEFAULT_ORDER_CAP};
use theta_core::satake::catalog_lookup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (s, n, label) = match args.as_slice() {
        [s, n, l] => (Series::parse(s)?, n.parse()?, l.as_str()),
        _ => (Series::C, 3, "CI"),
    };
    let entry = catalog_lookup(s, n, label)?;
    let report = build_report(&entry, DEFAULT_ORDER_CAP)?;
    print!("{}", render_report(&report));
    println!("{}", serde_json::to_string(&report)?);
    Ok(())
}
