//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values come from oracles written here, not from the catalog:
//! a hand-coded table of non-irreducible classes, degree recovery by
//! cyclotomic factoring, and direct closure checks on `Phi_A`.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use theta_core::cli::verify_w0;
use theta_core::liealg::{build_algebra, small_types, standard_realizations, RealizedClass};
use theta_core::nilcomp::{builtin_decompositions, component_count};
use theta_core::restricted::{check_p_good, restrict};
use theta_core::rootsys::{build_root_system, length_counts, CartanType, Series, DEFAULT_ORDER_CAP};
use theta_core::satake::{catalog_all, InvolutionClassEntry};
use theta_core::weylinv::invariant_degrees;

const SEED: u64 = 20_240_601;
const PRIMES: [u64; 3] = [5, 7, 11];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: ok }
    } else {
        let n = failures.len();
        let shown: Vec<String> = failures.into_iter().take(5).collect();
        Outcome { passed: false, detail: format!("{n} failures: {}", shown.join("; ")) }
    }
}

fn name(e: &InvolutionClassEntry) -> String {
    format!("{}{} {}", e.series, e.rank, e.label)
}

fn param(label: &str) -> Vec<usize> {
    let inner = label.split_once('(').map_or("", |(_, r)| r.trim_end_matches(')'));
    inner.split(',').filter_map(|x| x.trim().parse().ok()).collect()
}

/// Component counts read off the list of non-irreducible classes, with
/// split classes following the split-case formula and `AI` in the `SL` form.
fn proposition_count(series: Series, n: usize, label: &str, split: bool) -> u64 {
    match series {
        Series::A => match label {
            "AI" => if n % 2 == 1 { 2 } else { 1 },
            "AII" => 1,
            _ => {
                let pq = param(label);
                if pq[0] == pq[1] { 2 } else { 1 }
            }
        },
        Series::B => {
            if split {
                return 2;
            }
            let p = param(label)[0];
            let even = if p % 2 == 0 { p } else { 2 * n + 1 - p };
            if even < 2 * n + 1 - even { 2 } else { 1 }
        }
        Series::C => if label == "CI" { 2 } else { 1 },
        Series::D => {
            if label.starts_with("DIII") {
                return if n % 2 == 0 { 2 } else { 1 };
            }
            let p = param(label)[0];
            let q = 2 * n - p;
            match (p % 2, p == q) {
                (0, true) => 4,
                (0, false) => 2,
                (_, true) => 2,
                _ => 1,
            }
        }
        Series::E => if label == "EV" || label == "EVII" { 2 } else { 1 },
        Series::F | Series::G => 1,
    }
}

/// The literal reading for `BI`, used only to report where it disagrees.
fn literal_b(n: usize, p: usize) -> u64 {
    let even = if p % 2 == 0 { p } else { 2 * n + 1 - p };
    if even < 2 * n + 1 - even { 2 } else { 1 }
}

fn criterion_1(entries: &[InvolutionClassEntry]) -> Outcome {
    let results: Vec<(String, Result<u64, String>, u64)> = entries
        .par_iter()
        .map(|e| {
            let got = restrict(&e.satake)
                .map_err(|x| x.to_string())
                .and_then(|r| component_count(&e.satake, &r).map(|c| c.count).map_err(|x| x.to_string()));
            (name(e), got, proposition_count(e.series, e.rank, &e.label, e.is_split))
        })
        .collect();
    let mut failures = Vec::new();
    let mut reducible = 0;
    for (n, got, want) in &results {
        match got {
            Ok(c) if c == want => reducible += usize::from(*c > 1),
            Ok(c) => failures.push(format!("{n}: {c} components, table says {want}")),
            Err(m) => failures.push(format!("{n}: {m}")),
        }
    }
    let reconciled: Vec<String> = entries
        .iter()
        .filter(|e| e.series == Series::B && e.is_split && literal_b(e.rank, e.rank) == 1)
        .map(name)
        .collect();
    outcome(
        failures,
        format!(
            "{} classes, {reducible} non-irreducible; split {} follow the split-case formula (count 2)",
            results.len(),
            reconciled.join(", ")
        ),
    )
}

fn criterion_2(entries: &[InvolutionClassEntry]) -> Outcome {
    let split_expected = |s: Series, n: usize| -> u64 {
        match s {
            Series::D if n % 2 == 0 => 4,
            Series::A if n % 2 == 1 => 2,
            Series::B | Series::C | Series::D => 2,
            Series::E if n == 7 => 2,
            _ => 1,
        }
    };
    let quasi_expected = |s: Series, n: usize| -> Option<u64> {
        match s {
            Series::A => Some(if n % 2 == 1 { 2 } else { 1 }),
            Series::D => Some(if n % 2 == 1 { 2 } else { 1 }),
            Series::E if n == 6 => Some(1),
            _ => None,
        }
    };
    let mut failures = Vec::new();
    let (mut ns, mut nq) = (0, 0);
    let mut split_types = HashSet::new();
    for e in entries.iter().filter(|e| e.is_quasi_split) {
        let want = if e.is_split {
            ns += 1;
            split_types.insert(e.series);
            Some(split_expected(e.series, e.rank))
        } else {
            nq += 1;
            quasi_expected(e.series, e.rank)
        };
        let Some(want) = want else {
            failures.push(format!("{}: unexpected quasi-split class", name(e)));
            continue;
        };
        let got = restrict(&e.satake).ok().and_then(|r| component_count(&e.satake, &r).ok()).map(|c| c.count);
        if got != Some(want) {
            failures.push(format!("{}: got {got:?}, expected {want}", name(e)));
        }
    }
    if split_types.len() != 7 {
        failures.push(format!("split classes seen for {} series", split_types.len()));
    }
    outcome(failures, format!("{ns} split and {nq} quasi-split non-split classes"))
}

// Integer polynomials, lowest degree first.

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial, `None` if there is a remainder.
fn div_exact(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1];
        q[i] = c;
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

fn cyclotomics(max: usize) -> Vec<Vec<i128>> {
    let mut phi: Vec<Vec<i128>> = vec![vec![], vec![-1, 1]];
    for k in 2..=max {
        let mut p = vec![0i128; k + 1];
        p[0] = -1;
        p[k] = 1;
        for d in (1..k).filter(|d| k % d == 0) {
            p = div_exact(&p, &phi[d]).expect("cyclotomic division");
        }
        phi.push(trim(p));
    }
    phi
}

/// Degrees (greater than one) of a product of `[d]_t`, by counting
/// cyclotomic factors from the top degree down.
fn degrees_by_factoring(poly: &[i128]) -> Option<Vec<u32>> {
    let top = poly.len();
    let phi = cyclotomics(top + 1);
    let mut mult = vec![0usize; top + 2];
    let mut rest = poly.to_vec();
    for k in 2..=top + 1 {
        while let Some(q) = div_exact(&rest, &phi[k]) {
            rest = q;
            mult[k] += 1;
        }
    }
    if rest != vec![1] {
        return None;
    }
    let mut exact = vec![0usize; top + 2];
    let mut out = Vec::new();
    for k in (2..=top + 1).rev() {
        let above: usize = (2 * k..=top + 1).step_by(k).map(|j| exact[j]).sum();
        exact[k] = mult[k].checked_sub(above)?;
        out.extend(std::iter::repeat(k as u32).take(exact[k]));
    }
    out.sort_unstable();
    Some(out)
}

fn criterion_3(entries: &[InvolutionClassEntry]) -> Outcome {
    // [2]_t [4]_t
    assert_eq!(degrees_by_factoring(&[1, 2, 2, 2, 1]), Some(vec![2, 4]));
    let mut systems = BTreeMap::new();
    let mut work = Vec::new();
    let mut skipped = Vec::new();
    for e in entries {
        let rrs = restrict(&e.satake).expect("catalog restricts");
        if rrs.weyl_order() > DEFAULT_ORDER_CAP {
            skipped.push(format!("{} (|W_A| = {})", name(e), rrs.weyl_order()));
            continue;
        }
        let key = rrs.reduced_type_string();
        if let Some(rs) = rrs.reduced_system() {
            systems.entry(key.clone()).or_insert_with(|| Arc::new(rs.clone()));
        }
        work.push((name(e), key, invariant_degrees(&rrs).expect("degrees").degrees, rrs.weyl_order()));
    }
    let polys: BTreeMap<String, Vec<i128>> = systems
        .par_iter()
        .map(|(k, rs)| {
            let c = length_counts(rs, DEFAULT_ORDER_CAP).expect("under cap");
            (k.clone(), c.into_iter().map(i128::from).collect())
        })
        .collect();
    let mut failures = Vec::new();
    for (n, key, degrees, order) in &work {
        let poly = polys.get(key).cloned().unwrap_or_else(|| vec![1]);
        if poly.iter().sum::<i128>() != *order as i128 {
            failures.push(format!("{n}: P(1) != |W_A|"));
        }
        let product = degrees
            .iter()
            .fold(vec![1i128], |acc, &d| mul(&acc, &vec![1; d as usize]));
        if trim(product) != poly {
            failures.push(format!("{n}: sum t^l(w) differs from prod [d_i]_t"));
        }
        let table: Vec<u32> = degrees.iter().copied().filter(|&d| d > 1).collect();
        match degrees_by_factoring(&poly) {
            Some(f) if f == table => {}
            other => failures.push(format!("{n}: factoring gives {other:?}, table {table:?}")),
        }
    }
    outcome(
        failures,
        format!(
            "{} classes over {} restricted types; over the cap: {}",
            work.len(),
            polys.len(),
            skipped.join(", ")
        ),
    )
}

fn criterion_4() -> Outcome {
    let fixtures = builtin_decompositions();
    let suite = verify_w0();
    let mut failures: Vec<String> =
        suite.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if fixtures.len() < 13 {
        failures.push(format!("only {} fixtures", fixtures.len()));
    }
    if !fixtures.iter().any(|d| d.name == "E6(a1)") {
        failures.push("E6(a1) fixture missing".into());
    }
    outcome(failures, format!("{} fixtures including E6(a1)", fixtures.len()))
}

fn all_realizations() -> Vec<(u64, RealizedClass)> {
    PRIMES
        .iter()
        .flat_map(|&p| standard_realizations(4, p).expect("realizations").into_iter().map(move |r| (p, r)))
        .collect()
}

fn criterion_5(real: &[(u64, RealizedClass)]) -> Outcome {
    let (usable, outside): (Vec<_>, Vec<_>) =
        real.iter().partition(|(_, rc)| rc.realization.algebra().has_invariant_form());
    let failures: Vec<String> = usable
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, (p, rc))| {
            let r = &rc.realization;
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + i as u64);
            let target = r.dim_k() as i64 - r.dim_p() as i64;
            (0..100)
                .filter_map(|_| {
                    let x = r.random_p_coords(&mut rng);
                    let (zk, zp) = r.centralizer_dims(&x);
                    (zk as i64 - zp as i64 != target).then(|| format!("{} p={p}: {x:?}", rc.name()))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let skipped: Vec<String> = outside.iter().map(|(p, rc)| format!("{} p={p}", rc.name())).collect();
    outcome(
        failures,
        format!(
            "{} realisations x 100 samples, seed {SEED}; outside the invariant-form hypothesis: {}",
            usable.len(),
            skipped.join(", ")
        ),
    )
}

fn criterion_6(real: &[(u64, RealizedClass)]) -> Outcome {
    let checked: Vec<(usize, Vec<String>)> = real
        .par_iter()
        .map(|(p, rc)| {
            let rep = rc.realization.check_grading();
            (rep.pairs_checked, rep.failures.into_iter().map(|f| format!("{} p={p}: {f}", rc.name())).collect())
        })
        .collect();
    let pairs: usize = checked.iter().map(|c| c.0).sum();
    let failures = checked.into_iter().flat_map(|c| c.1).collect();
    outcome(failures, format!("{} realisations, {pairs} basis pairs", real.len()))
}

fn criterion_7(real: &[(u64, RealizedClass)], entries: &[InvolutionClassEntry]) -> Outcome {
    let mut failures = Vec::new();
    for (p, rc) in real {
        let d = rc.entry.satake.kp_dimensions();
        let r = &rc.realization;
        if (r.dim_k(), r.dim_p()) != (d.k, d.p) {
            failures.push(format!("{} p={p}: ({}, {}) vs ({}, {})", rc.name(), r.dim_k(), r.dim_p(), d.k, d.p));
        }
    }
    for e in entries {
        let d = e.satake.kp_dimensions();
        let rrs = restrict(&e.satake).expect("restricts");
        let positive: usize = rrs.multiplicities().values().sum();
        if d.m as i64 - d.a as i64 != d.k as i64 - d.p as i64 {
            failures.push(format!("{}: m - a != k - p", name(e)));
        }
        if d.a != rrs.r() || d.p != d.a + positive || d.k != d.m + positive {
            failures.push(format!("{}: dims disagree with restricted multiplicities", name(e)));
        }
    }
    outcome(failures, format!("{} realisations and {} catalog classes", real.len(), entries.len()))
}

fn criterion_8(entries: &[InvolutionClassEntry]) -> Outcome {
    let mut failures = Vec::new();
    let mut jacobi = 0usize;
    for ty in small_types(6) {
        let rs = Arc::new(build_root_system(ty.series, ty.rank).expect("type"));
        let alg = build_algebra(rs, 7).expect("7 is good up to rank 6");
        let bad = if ty.rank <= 3 {
            let d = alg.dim();
            jacobi += d * (d - 1) * (d - 2) / 6;
            alg.jacobi_exhaustive()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ ty.rank as u64);
            jacobi += 10_000;
            alg.jacobi_sampled(10_000, &mut rng)
        };
        if !bad.is_empty() {
            failures.push(format!("{}: Jacobi fails on {:?}", CartanType::canonical(ty), bad[0]));
        }
    }
    let checks: Vec<Vec<String>> = entries
        .par_iter()
        .map(|e| {
            let mut bad = Vec::new();
            let rrs = restrict(&e.satake).expect("restricts");
            let rs = e.satake.ambient();
            let doubled: HashSet<Vec<i64>> = rrs.roots().iter().map(|x| x.doubled.clone()).collect();
            for l in rrs.roots() {
                let ll = rs.inner(&l.doubled, &l.doubled);
                let triple: Vec<i64> = l.doubled.iter().map(|x| 3 * x).collect();
                if doubled.contains(&triple) {
                    bad.push(format!("{}: 3 lambda is a root", name(e)));
                }
                for m in rrs.roots() {
                    let num = 2 * rs.inner(&m.doubled, &l.doubled);
                    if num % ll != 0 {
                        bad.push(format!("{}: non-integral Cartan number", name(e)));
                        continue;
                    }
                    let c = num / ll;
                    let image: Vec<i64> = m.doubled.iter().zip(&l.doubled).map(|(a, b)| a - c * b).collect();
                    if !doubled.contains(&image) {
                        bad.push(format!("{}: Phi_A not closed under reflections", name(e)));
                    }
                }
            }
            if !check_p_good(&rrs, 7).three_alpha_excluded {
                bad.push(format!("{}: library reports 3 alpha in Phi_A", name(e)));
            }
            match component_count(&e.satake, &rrs) {
                Ok(c) if c.z_cap_a_mod_squares.order() % c.count == 0 => {}
                Ok(c) => bad.push(format!("{}: {} does not divide |{}|", name(e), c.count, c.z_cap_a_mod_squares)),
                Err(m) => bad.push(format!("{}: {m}", name(e))),
            }
            bad
        })
        .collect();
    failures.extend(checks.into_iter().flatten());
    outcome(failures, format!("{jacobi} Jacobi triples; closure, 3-lambda and divisibility on {} classes", entries.len()))
}

fn main() {
    let entries = catalog_all(8).expect("catalog loads");
    let mut all_ok = true;
    let mut report = |n: usize, title: &str, run: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = run();
        let secs = t.elapsed().as_secs_f64();
        all_ok &= o.passed;
        println!(
            "{} criterion {n} ({title}): {} [{secs:.2} s]",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    report(1, "proposition table", &mut || criterion_1(&entries));
    report(2, "split and quasi-split counts", &mut || criterion_2(&entries));
    report(3, "Demazure identity", &mut || criterion_3(&entries));
    report(4, "w0 decompositions", &mut criterion_4);
    let t = Instant::now();
    let real = all_realizations();
    println!("     built {} realisations in {:.2} s", real.len(), t.elapsed().as_secs_f64());
    report(5, "centraliser dimensions", &mut || criterion_5(&real));
    report(6, "grading laws", &mut || criterion_6(&real));
    report(7, "dimension agreement", &mut || criterion_7(&real, &entries));
    report(8, "structural invariants", &mut || criterion_8(&entries));
    if !all_ok {
        std::process::exit(1);
    }
}

