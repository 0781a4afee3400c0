//! Restricted roots, multiplicities and the cocharacters omega_alpha.

use theta_core::restricted::{baby_weyl, check_p_good, omega_alpha, restrict};
use theta_core::rootsys::{Series, DEFAULT_ORDER_CAP};
use theta_core::satake::catalog_lookup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (s, n, label) in [(Series::E, 7, "EVII"), (Series::A, 5, "AIII(2,4)"), (Series::F, 4, "FII")] {
        let e = catalog_lookup(s, n, label)?;
        let rrs = restrict(&e.satake)?;
        println!("{}: Phi_A = {} (r = {})", e.pair_name(), rrs.type_string(), rrs.r());
        for (root, m) in rrs.multiplicities() {
            println!("  {root:?} multiplicity {m}");
        }
        println!("  Cartan matrix of Pi {:?}", rrs.cartan());
        println!("  |W_A| = {}", baby_weyl(&rrs, DEFAULT_ORDER_CAP)?.order());
        for j in 0..rrs.r() {
            let (om, case) = omega_alpha(&e.satake, &rrs, j)?;
            println!("  omega_{j}: case {case:?}, coweight coords {:?}", om.coords);
        }
        let good = check_p_good(&rrs, 3);
        println!("  p = 3 good: {} {:?}", good.good, good.witness);
    }
    Ok(())
}
