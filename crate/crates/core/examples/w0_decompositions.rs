//! Orthogonal reflections whose product is w0, checked against the diagram lambda.

use theta_core::nilcomp::{builtin_decompositions, verify_w0_decomposition};
use theta_core::rootsys::build_root_system;

fn main() {
    for d in builtin_decompositions() {
        let rs = build_root_system(d.ty.series, d.ty.rank).expect("fixture type");
        let rep = verify_w0_decomposition(&d, &rs);
        println!(
            "{:<8} {} reflections  lambda {}  orthogonal={} product={} mod4={}",
            d.name,
            d.betas.len(),
            d.lambda_diagram,
            rep.orthogonal,
            rep.product,
            rep.mod4
        );
    }
}
