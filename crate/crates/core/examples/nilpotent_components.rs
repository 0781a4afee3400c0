//! omega, the centre groups and the number of components of the nilpotent cone.

use theta_core::nilcomp::{centre_data, component_count, omega};
use theta_core::restricted::restrict;
use theta_core::satake::catalog_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<14}{:<18}{:<14}{:<14}{:<4}method", "class", "omega", "Z", "Z cap A", "N");
    for e in catalog_all(7)?.iter().filter(|e| e.rank == 7 || e.rank == 4) {
        let rrs = restrict(&e.satake)?;
        let (_, diagram) = omega(&e.satake, &rrs)?;
        let centre = centre_data(&e.satake, &rrs)?;
        let c = component_count(&e.satake, &rrs)?;
        println!(
            "{:<14}{:<18}{:<14}{:<14}{:<4}{}",
            format!("{}{} {}", e.series, e.rank, e.label),
            diagram.to_string(),
            centre.z.to_string(),
            centre.z_cap_a.to_string(),
            c.count,
            c.method
        );
    }
    Ok(())
}
