//! Degrees of W_A and the identity sum_w t^l(w) = prod [d_i]_t.

use theta_core::restricted::{baby_weyl, restrict};
use theta_core::rootsys::DEFAULT_ORDER_CAP;
use theta_core::satake::catalog_all;
use theta_core::weylinv::{demazure_identity_check, invariant_degrees, poincare_polynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog_all(4)? {
        let rrs = restrict(&e.satake)?;
        let degrees = invariant_degrees(&rrs)?;
        let poly = poincare_polynomial(&baby_weyl(&rrs, DEFAULT_ORDER_CAP)?)?;
        let check = demazure_identity_check(&degrees, &poly);
        println!(
            "{}{} {:<12} {:<6} degrees {:?}  {}  [{}]",
            e.series,
            e.rank,
            e.label,
            rrs.type_string(),
            degrees.degrees,
            poly,
            if check.equal { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
