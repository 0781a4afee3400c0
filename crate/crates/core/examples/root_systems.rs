//! Root systems, Weyl groups and lattice quotients.
//!
//!     cargo run --example root_systems -- F 4

use theta_core::rootsys::{build_root_system, length_counts, longest_element, Series, DEFAULT_ORDER_CAP};
use theta_core::weylinv::IntPolynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let series = Series::parse(args.first().map_or("E", String::as_str))?;
    let rank: usize = args.get(1).map_or(Ok(6), |s| s.parse())?;
    let rs = build_root_system(series, rank)?;

    println!("type {}: {} roots, |W| = {}", rs.type_string(), rs.num_roots(), rs.weyl_order());
    println!("highest root {:?}", rs.highest_roots());
    println!("P/Q = {}", rs.fundamental_group());
    println!("Cartan matrix:");
    for row in rs.cartan() {
        println!("  {row:?}");
    }
    let w0 = longest_element(&rs);
    println!("l(w0) = {}, reduced word {:?}", w0.length(), w0.reduced_word(&rs));

    match length_counts(&rs, DEFAULT_ORDER_CAP) {
        Ok(c) => println!("sum t^l(w) = {}", IntPolynomial::from_counts(&c)),
        Err(e) => println!("not enumerated: {e}"),
    }
    Ok(())
}
