use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use theta_core::liealg::{build_algebra, realize_chevalley_involution, standard_realizations, ModularLieAlgebra, RealizedClass};
use theta_core::restricted::restrict;
use theta_core::rootsys::{
    build_root_system, lattice_quotient, smith_normal_form, RootSystem, Series, WeylElement,
};
use theta_core::satake::{catalog_all, InvolutionClassEntry};
use theta_core::weylinv::IntPolynomial;

fn systems() -> &'static Vec<RootSystem> {
    static S: OnceLock<Vec<RootSystem>> = OnceLock::new();
    S.get_or_init(|| {
        [(Series::A, 3), (Series::B, 3), (Series::C, 4), (Series::D, 4), (Series::F, 4), (Series::G, 2)]
            .iter()
            .map(|&(s, n)| build_root_system(s, n).unwrap())
            .collect()
    })
}

fn realizations() -> &'static Vec<RealizedClass> {
    static R: OnceLock<Vec<RealizedClass>> = OnceLock::new();
    R.get_or_init(|| standard_realizations(3, 7).unwrap())
}

fn algebras() -> &'static Vec<Arc<ModularLieAlgebra>> {
    static A: OnceLock<Vec<Arc<ModularLieAlgebra>>> = OnceLock::new();
    A.get_or_init(|| systems().iter().map(|rs| Arc::new(build_algebra(Arc::new(rs.clone()), 7).unwrap())).collect())
}

fn entries() -> &'static Vec<InvolutionClassEntry> {
    static E: OnceLock<Vec<InvolutionClassEntry>> = OnceLock::new();
    E.get_or_init(|| catalog_all(8).unwrap())
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = b[0].len();
    a.iter()
        .map(|r| (0..m).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_length_counts_inversions(k in 0usize..6, word in prop::collection::vec(0usize..8, 0..20)) {
        let rs = &systems()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % rs.rank()).collect();
        let w = WeylElement::from_word(rs, &word);
        let inversions = (0..rs.num_positive()).filter(|&r| !rs.is_positive(w.apply(r))).count();
        prop_assert_eq!(w.length(), inversions);
        prop_assert!(w.length() <= word.len());
        prop_assert_eq!(w.length() % 2, word.len() % 2);
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn weyl_preserves_form(k in 0usize..6, word in prop::collection::vec(0usize..8, 0..12), a in 0usize..48, b in 0usize..48) {
        let rs = &systems()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % rs.rank()).collect();
        let w = WeylElement::from_word(rs, &word);
        let (a, b) = (a % rs.num_roots(), b % rs.num_roots());
        let (wa, wb) = (w.apply(a), w.apply(b));
        prop_assert_eq!(rs.inner(rs.root(wa), rs.root(wb)), rs.inner(rs.root(a), rs.root(b)));
        prop_assert_eq!(w.apply_vector(rs, rs.root(a)), rs.root(wa).to_vec());
    }

    #[test]
    fn smith_form_is_a_factorisation(rows in 1usize..4, cols in 1usize..4, seed in prop::collection::vec(-6i64..7, 9)) {
        let a: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 3 + j]).collect()).collect();
        let s = smith_normal_form(&a);
        let d = matmul(&matmul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j && i < s.diagonal.len() { s.diagonal[i] } else { 0 };
                prop_assert_eq!(x, want);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        let id = matmul(&s.u, &s.u_inv);
        for (i, row) in id.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, i64::from(i == j));
            }
        }
    }

    #[test]
    fn diagonal_quotients(ds in prop::collection::vec(1i64..9, 1..4)) {
        let n = ds.len();
        let gens: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let sub: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { ds[i] } else { 0 }).collect()).collect();
        let q = lattice_quotient(&gens, &sub).unwrap();
        prop_assert_eq!(q.order(), ds.iter().product::<i64>() as u64);
        prop_assert!(q.quotient_by_squares().order() <= q.order());
    }

    #[test]
    fn polynomial_products(a in prop::collection::vec(-5i64..6, 0..6), b in prop::collection::vec(-5i64..6, 0..6)) {
        let (pa, pb) = (IntPolynomial::from_i64(&a), IntPolynomial::from_i64(&b));
        let ab = &pa * &pb;
        prop_assert_eq!(&ab, &(&pb * &pa));
        prop_assert_eq!(ab.eval_at_one(), pa.eval_at_one() * pb.eval_at_one());
        prop_assert!((&pa - &pa).is_zero());
    }

    #[test]
    fn jacobi_on_random_triples(k in 0usize..6, i in 0usize..60, j in 0usize..60, l in 0usize..60) {
        let alg = &algebras()[k];
        let d = alg.dim();
        prop_assert!(alg.jacobi_holds(i % d, j % d, l % d));
    }

    #[test]
    fn chevalley_involution_preserves_brackets(k in 0usize..6, xs in prop::collection::vec(-3i64..4, 60), ys in prop::collection::vec(-3i64..4, 60)) {
        let alg = Arc::clone(&algebras()[k]);
        let d = alg.dim();
        let r = realize_chevalley_involution(Arc::clone(&alg)).unwrap();
        let (x, y) = (&xs[..d], &ys[..d]);
        let lhs = r.apply_dtheta(&alg.bracket_int(x, y));
        let rhs = alg.bracket_int(&r.apply_dtheta(x), &r.apply_dtheta(y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn centraliser_identity(k in 0usize..200, seed in any::<u64>()) {
        let all = realizations();
        let rc = &all[k % all.len()];
        let r = &rc.realization;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = r.random_p_coords(&mut rng);
        let (zk, zp) = r.centralizer_dims(&x);
        prop_assert_eq!(zk as i64 - zp as i64, r.dim_k() as i64 - r.dim_p() as i64);
        prop_assert_eq!(zk + zp, r.centralizer_dim_g(&x));
        let dims = rc.entry.satake.kp_dimensions();
        prop_assert!(zk + zp >= dims.m + dims.a);
    }

    #[test]
    fn restricted_dimensions(k in 0usize..1000) {
        let e = &entries()[k % entries().len()];
        let rrs = restrict(&e.satake).unwrap();
        let d = e.satake.kp_dimensions();
        let positive: usize = rrs.multiplicities().values().sum();
        prop_assert_eq!(rrs.multiplicity_sum(), 2 * positive);
        prop_assert_eq!(d.p, d.a + positive);
        prop_assert_eq!(d.g, d.k + d.p);
    }
}
