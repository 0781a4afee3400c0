//! The built-in catalog of involution classes and what a Satake datum encodes.

use theta_core::satake::{catalog_list, catalog_lookup};
use theta_core::rootsys::Series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog_list(Series::D, 5)? {
        let d = e.satake.kp_dimensions();
        println!(
            "{:<10} {:<28} I={:?} inner={} dims k={} p={} a={}",
            e.label,
            e.pair_name(),
            e.satake.compact_set().iter().map(|i| i + 1).collect::<Vec<_>>(),
            e.satake.is_inner(),
            d.k,
            d.p,
            d.a
        );
    }

    // theta* on simple roots for the quasi-split outer class of E6
    let eii = catalog_lookup(Series::E, 6, "EII")?;
    println!("\nEII psi = {:?}", eii.satake.psi());
    for (j, row) in eii.satake.theta_matrix().iter().enumerate() {
        println!("  theta*(alpha_{}) = {row:?}", j + 1);
    }
    let report = eii.satake.validate();
    println!("valid: {}", report.is_ok());
    Ok(())
}
