//! A Chevalley basis over F_p and the grading of an inner involution.
//!
//!     cargo run --example chevalley_algebra -- 11

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use theta_core::liealg::{build_algebra, realize_chevalley_involution, realize_inner};
use theta_core::rootsys::{build_root_system, Series};
use theta_core::satake::catalog_lookup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let rs = Arc::new(build_root_system(Series::G, 2)?);
    let alg = Arc::new(build_algebra(Arc::clone(&rs), p)?);
    println!("g2 over F_{p}: dim {}, max |N| = {}", alg.dim(), alg.max_structure_constant());
    for a in 0..rs.num_positive() {
        for b in a + 1..rs.num_positive() {
            let n = alg.structure_constant(a, b);
            if n != 0 {
                println!("  N({:?}, {:?}) = {n}", rs.root(a), rs.root(b));
            }
        }
    }

    let split = realize_chevalley_involution(Arc::clone(&alg))?;
    println!("Chevalley involution: dim k = {}, dim p = {}", split.dim_k(), split.dim_p());
    println!("relations: {} failures", split.commutation_relation_failures().len());

    let entry = catalog_lookup(Series::G, 2, "G")?;
    let mu: Vec<i64> = (0..2).map(|k| i64::from(Some(k) == entry.mu)).collect();
    let inner = realize_inner(alg, &mu)?;
    println!("inner with mu = {mu:?}: dim k = {}, dim p = {}", inner.dim_k(), inner.dim_p());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let x = inner.random_p_coords(&mut rng);
        let (zk, zp) = inner.centralizer_dims(&x);
        println!("  x = {x:?}: dim z_k = {zk}, dim z_p = {zp}");
    }
    Ok(())
}
