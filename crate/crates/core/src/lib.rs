//! Combinatorics of involutions of simple algebraic groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`]: root systems, Weyl groups, lattice quotients
//! * [`satake`]: involutions as Satake data and the built-in class catalog
//! * [`restricted`]: restricted roots, the little Weyl group, `omega_alpha`
//! * [`weylinv`]: invariant degrees and Poincaré polynomials
//! * [`nilcomp`]: the cocharacter `omega`, centre computations, component counts
//! * [`liealg`]: Chevalley bases over `F_p` and realised gradings `g = k + p`
//! * [`cli`]: report assembly and verification suites used by `theta-tool`

pub mod cli;
pub mod liealg;
pub mod nilcomp;
pub mod restricted;
pub mod rootsys;
pub mod satake;
pub mod weylinv;

mod util;
