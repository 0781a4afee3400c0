//! Reports, listings and verification suites behind `theta-tool`.
//!
//! [`run`] parses arguments and writes to the given sink, returning the
//! process exit code: 0 success, 1 verification failure, 2 usage error.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{standard_realizations, RealizationKind, RealizedClass};
use crate::nilcomp::{
    builtin_decompositions, component_count, omega, verify_w0_decomposition, ComponentReport,
};
use crate::restricted::{baby_weyl, check_p_good, restrict};
use crate::rootsys::{build_root_system, length_counts, RootSystem, Series, DEFAULT_ORDER_CAP};
use crate::satake::{catalog_all, catalog_list, catalog_lookup, InvolutionClassEntry, KpDimensions};
use crate::weylinv::{demazure_identity_check, invariant_degrees, IntPolynomial};

pub const SCHEMA_VERSION: u32 = 1;
pub const CAP_ENV: &str = "THETA_TOOL_CAP";
pub const TOO_LARGE: &str = "W_A too large";
pub const DEFAULT_PRIMES: [u64; 3] = [5, 7, 11];
pub const DEFAULT_SEED: u64 = 42;
pub const CENTDIM_SAMPLES: usize = 100;
pub const MAX_CATALOG_RANK: usize = 8;
pub const MAX_REALIZED_RANK: usize = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub root: Vec<i64>,
    pub multiplicity: usize,
}

/// Everything known about one catalog class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub series: String,
    pub rank: usize,
    pub label: String,
    pub pair: String,
    pub dims: KpDimensions,
    pub split: bool,
    pub quasi_split: bool,
    pub inner: bool,
    pub restricted_type: String,
    pub reduced_type: String,
    pub multiplicities: Vec<MultiplicityEntry>,
    pub weyl_order: u64,
    pub degrees: Vec<u32>,
    /// Coefficients of `sum_w t^{l(w)}`; `None` when `W_A` exceeds the cap.
    pub poincare: Option<Vec<i64>>,
    pub poincare_text: String,
    pub demazure: Option<bool>,
    pub omega_diagram: String,
    pub omega_weights: Vec<u8>,
    pub components: ComponentReport,
    /// Codimension of the nilpotent cone in `p`; equals `dims.a`.
    pub codim: usize,
}

/// Cap from the flag, else `THETA_TOOL_CAP`, else the default.
pub fn resolve_cap(flag: Option<u128>) -> Result<u128, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{CAP_ENV}={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

pub fn build_report(entry: &InvolutionClassEntry, cap: u128) -> Result<Report, CliError> {
    let inv = &entry.satake;
    let rrs = restrict(inv).map_err(internal)?;
    let degrees = invariant_degrees(&rrs).map_err(internal)?;
    let (poincare, poincare_text, demazure) = match baby_weyl(&rrs, cap) {
        Ok(w) => {
            let counts = w.length_counts().map_err(internal)?;
            let poly = IntPolynomial::from_counts(&counts);
            let check = demazure_identity_check(&degrees, &poly);
            (poly.to_i64_vec(), poly.to_string(), Some(check.equal))
        }
        Err(_) => (None, TOO_LARGE.to_string(), None),
    };
    let (_, diagram) = omega(inv, &rrs).map_err(internal)?;
    let components = component_count(inv, &rrs).map_err(internal)?;
    let dims = inv.kp_dimensions();
    Ok(Report {
        schema: SCHEMA_VERSION,
        series: entry.series.to_string(),
        rank: entry.rank,
        label: entry.label.clone(),
        pair: entry.pair_name(),
        dims,
        split: inv.is_split(),
        quasi_split: inv.is_quasi_split(),
        inner: inv.is_inner(),
        restricted_type: rrs.type_string(),
        reduced_type: rrs.reduced_type_string(),
        multiplicities: rrs
            .multiplicities()
            .into_iter()
            .map(|(root, multiplicity)| MultiplicityEntry { root, multiplicity })
            .collect(),
        weyl_order: rrs.weyl_order() as u64,
        degrees: degrees.degrees,
        poincare,
        poincare_text,
        demazure,
        omega_diagram: diagram.to_string(),
        omega_weights: diagram.weights,
        components,
        codim: dims.a,
    })
}

pub fn render_report(r: &Report) -> String {
    let d = &r.dims;
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k:<16}{v}\n"));
    line("class", format!("{}{} {}", r.series, r.rank, r.label));
    line("pair", r.pair.clone());
    line("dims", format!("g={} k={} p={} a={} m={}", d.g, d.k, d.p, d.a, d.m));
    line("flags", format!("split={} quasi-split={} inner={}", r.split, r.quasi_split, r.inner));
    line("Phi_A", format!("{} (reduced {})", r.restricted_type, r.reduced_type));
    let mults: Vec<String> = r.multiplicities.iter().map(|m| format!("{:?}:{}", m.root, m.multiplicity)).collect();
    line("multiplicities", mults.join(" "));
    line("|W_A|", r.weyl_order.to_string());
    line("degrees", format!("{:?}", r.degrees));
    line("poincare", r.poincare_text.clone());
    line(
        "demazure",
        match r.demazure {
            Some(true) => "holds".into(),
            Some(false) => "FAILS".into(),
            None => TOO_LARGE.into(),
        },
    );
    line("omega", r.omega_diagram.clone());
    let c = &r.components;
    line("components", format!("{} ({})", c.count, c.method));
    line("Z", format!("{}  Z/Z^2 = {}", c.z, c.z_mod_z2));
    line("Z cap A", format!("{}  mod squares = {}  |tau(Z)| = {}", c.z_cap_a, c.z_cap_a_mod_squares, c.tau_z_order));
    line("codim N", r.codim.to_string());
    for n in &c.notes {
        line("note", n.clone());
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListRow {
    pub label: String,
    pub pair: String,
    pub split: bool,
    pub quasi_split: bool,
    pub outer_diagram: bool,
    pub inner: bool,
    pub phi_a: String,
    pub components: u64,
}

pub fn list_rows(series: Series, rank: usize) -> Result<Vec<ListRow>, CliError> {
    let mut entries = catalog_list(series, rank).map_err(|e| CliError::Usage(e.to_string()))?;
    entries.sort_by(|a, b| a.label.cmp(&b.label));
    entries
        .iter()
        .map(|e| {
            let rrs = restrict(&e.satake).map_err(internal)?;
            Ok(ListRow {
                label: e.label.clone(),
                pair: e.pair_name(),
                split: e.is_split,
                quasi_split: e.is_quasi_split,
                outer_diagram: e.satake.psi().iter().enumerate().any(|(i, &j)| i != j),
                inner: e.satake.is_inner(),
                phi_a: rrs.type_string(),
                components: e.expected_components,
            })
        })
        .collect()
}

pub fn render_list(rows: &[ListRow]) -> String {
    let mut s = format!("{:<16}{:<36}{:<7}{:<7}{:<6}{:<7}{:<8}{}\n", "label", "pair", "split", "qsplit", "psi", "inner", "Phi_A", "N");
    for r in rows {
        let yn = |b: bool| if b { "yes" } else { "-" };
        s.push_str(&format!(
            "{:<16}{:<36}{:<7}{:<7}{:<6}{:<7}{:<8}{}\n",
            r.label,
            r.pair,
            yn(r.split),
            yn(r.quasi_split),
            yn(r.outer_diagram),
            yn(r.inner),
            r.phi_a,
            r.components
        ));
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Poincare,
    W0,
    Centdim,
    Grading,
    Proposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub schema: u32,
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
    pub skipped: Vec<String>,
}

impl SuiteResult {
    fn new(suite: Suite, mut checks: Vec<CheckLine>, skipped: Vec<String>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        SuiteResult { schema: SCHEMA_VERSION, suite, passed: checks.iter().all(|c| c.passed), checks, skipped }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("{} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail));
        }
        for k in &self.skipped {
            s.push_str(&format!("skip {k}\n"));
        }
        let nfail = self.failures().count();
        s.push_str(&format!(
            "{:?}: {} ({} checks, {} mismatches, {} skipped)\n",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            nfail,
            self.skipped.len()
        ));
        s
    }
}

fn entry_name(e: &InvolutionClassEntry) -> String {
    format!("{}{} {}", e.series, e.rank, e.label)
}

/// Options shared by the suites.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub cap: u128,
    pub primes: Vec<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED, cap: DEFAULT_ORDER_CAP, primes: DEFAULT_PRIMES.to_vec() }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteResult, CliError> {
    match suite {
        Suite::Poincare => verify_poincare(opts.cap),
        Suite::W0 => Ok(verify_w0()),
        Suite::Centdim => verify_centdim(opts.seed, &opts.primes),
        Suite::Grading => verify_grading(&opts.primes),
        Suite::Proposition => verify_proposition(),
    }
}

/// Demazure identity for every catalog entry whose `W_A` fits under `cap`.
/// Length counts are computed once per reduced restricted type.
pub fn verify_poincare(cap: u128) -> Result<SuiteResult, CliError> {
    let entries = catalog_all(MAX_CATALOG_RANK).map_err(internal)?;
    let mut by_type: BTreeMap<String, Arc<RootSystem>> = BTreeMap::new();
    let mut work = Vec::new();
    let mut skipped = Vec::new();
    for e in &entries {
        let rrs = restrict(&e.satake).map_err(internal)?;
        if rrs.weyl_order() > cap {
            skipped.push(format!("{}: {TOO_LARGE} (|W_A| = {})", entry_name(e), rrs.weyl_order()));
            continue;
        }
        let key = rrs.reduced_type_string();
        if let Some(rs) = rrs.reduced_system() {
            by_type.entry(key.clone()).or_insert_with(|| Arc::new(rs.clone()));
        }
        let degrees = invariant_degrees(&rrs).map_err(internal)?;
        work.push((entry_name(e), key, degrees, rrs.weyl_order()));
    }
    let counts: BTreeMap<String, Result<Vec<u64>, String>> = by_type
        .par_iter()
        .map(|(k, rs)| (k.clone(), length_counts(rs, cap).map_err(|e| e.to_string())))
        .collect();
    let checks = work
        .into_iter()
        .map(|(name, key, degrees, order)| {
            let poly = match counts.get(&key) {
                Some(Ok(c)) => IntPolynomial::from_counts(c),
                Some(Err(e)) => return CheckLine { name, passed: false, detail: e.clone() },
                None => IntPolynomial::one(),
            };
            let check = demazure_identity_check(&degrees, &poly);
            let detail = if check.equal {
                format!("|W_A| = {order}, degrees {:?}", degrees.degrees)
            } else {
                format!("difference {}", check.diff)
            };
            CheckLine { name, passed: check.equal, detail }
        })
        .collect();
    Ok(SuiteResult::new(Suite::Poincare, checks, skipped))
}

pub fn verify_w0() -> SuiteResult {
    let checks = builtin_decompositions()
        .par_iter()
        .map(|d| {
            let rs = build_root_system(d.ty.series, d.ty.rank).expect("fixture types are valid");
            let rep = verify_w0_decomposition(d, &rs);
            let detail = if rep.passed() {
                format!("{} reflections, orthogonal, product, mod 4", d.betas.len())
            } else {
                rep.failures.join("; ")
            };
            CheckLine { name: d.name.clone(), passed: rep.passed(), detail }
        })
        .collect();
    SuiteResult::new(Suite::W0, checks, Vec::new())
}

fn realizations(primes: &[u64]) -> Result<Vec<(u64, RealizedClass)>, CliError> {
    let mut out = Vec::new();
    for &p in primes {
        for rc in standard_realizations(MAX_REALIZED_RANK, p).map_err(internal)? {
            out.push((p, rc));
        }
    }
    Ok(out)
}

fn seed_for(seed: u64, name: &str, p: u64) -> u64 {
    // FNV-1a, so sampling does not depend on iteration order
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed;
    for b in name.bytes().chain(p.to_le_bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// `dim z_k(x) - dim z_p(x) = dim k - dim p` on random `x` in `p`, and the
/// minimum of `dim z_g(x)` equal to `dim m + dim a`.
/// Pairs over primes where the algebra has no non-degenerate invariant form
/// are skipped, since the identity can fail there.
pub fn verify_centdim(seed: u64, primes: &[u64]) -> Result<SuiteResult, CliError> {
    let (usable, outside): (Vec<_>, Vec<_>) =
        realizations(primes)?.into_iter().partition(|(_, rc)| rc.realization.algebra().has_invariant_form());
    let skipped = outside
        .iter()
        .map(|(p, rc)| format!("{} p={p}: no non-degenerate invariant form", rc.name()))
        .collect();
    let checks = usable
        .par_iter()
        .map(|(p, rc)| {
            let r = &rc.realization;
            let name = format!("{} p={p}", rc.name());
            let mut rng = ChaCha8Rng::seed_from_u64(seed_for(seed, &name, *p));
            let target = r.dim_k() as i64 - r.dim_p() as i64;
            let dims = rc.entry.satake.kp_dimensions();
            let mut bad = Vec::new();
            let mut min_zg = usize::MAX;
            let mut samples: Vec<Vec<u64>> = (0..CENTDIM_SAMPLES).map(|_| r.random_p_coords(&mut rng)).collect();
            samples.push(vec![0; r.dim_p()]);
            samples.extend(r.regular_toral_element());
            for x in &samples {
                let (zk, zp) = r.centralizer_dims(x);
                if zk as i64 - zp as i64 != target {
                    bad.push(format!("x = {x:?}: z_k = {zk}, z_p = {zp}"));
                }
                min_zg = min_zg.min(zk + zp);
            }
            if min_zg != dims.m + dims.a {
                bad.push(format!("min dim z_g = {min_zg}, expected m + a = {}", dims.m + dims.a));
            }
            let detail = if bad.is_empty() {
                format!("{} samples, dim k - dim p = {target}, min dim z_g = {min_zg}", samples.len())
            } else {
                bad.join("; ")
            };
            CheckLine { name, passed: bad.is_empty(), detail }
        })
        .collect();
    Ok(SuiteResult::new(Suite::Centdim, checks, skipped))
}

/// Grading laws, involutivity and agreement with the Satake dimensions for
/// every realised pair; the Chevalley realisations also get the commutation
/// relations of the simple triples.
pub fn verify_grading(primes: &[u64]) -> Result<SuiteResult, CliError> {
    let checks = realizations(primes)?
        .par_iter()
        .map(|(p, rc)| {
            let r = &rc.realization;
            let name = format!("{} p={p}", rc.name());
            let mut bad = r.check_grading().failures;
            if !r.is_involution() {
                bad.push("d theta is not an involution".into());
            }
            let d = rc.entry.satake.kp_dimensions();
            if (r.dim_k(), r.dim_p()) != (d.k, d.p) {
                bad.push(format!("dims ({}, {}) but Satake data give ({}, {})", r.dim_k(), r.dim_p(), d.k, d.p));
            }
            if *r.kind() == RealizationKind::Chevalley {
                bad.extend(r.commutation_relation_failures());
            }
            let detail = if bad.is_empty() {
                format!("dim k = {}, dim p = {}", r.dim_k(), r.dim_p())
            } else {
                bad.join("; ")
            };
            CheckLine { name, passed: bad.is_empty(), detail }
        })
        .collect();
    Ok(SuiteResult::new(Suite::Grading, checks, Vec::new()))
}

/// Computed component counts against the catalog, plus the divisibility
/// bound and goodness of the restricted system.
pub fn verify_proposition() -> Result<SuiteResult, CliError> {
    let entries = catalog_all(MAX_CATALOG_RANK).map_err(internal)?;
    let checks = entries
        .par_iter()
        .map(|e| {
            let name = entry_name(e);
            let result = restrict(&e.satake).map_err(|x| x.to_string()).and_then(|rrs| {
                let good = check_p_good(&rrs, 7);
                component_count(&e.satake, &rrs).map(|c| (c, good)).map_err(|x| x.to_string())
            });
            match result {
                Err(msg) => CheckLine { name, passed: false, detail: msg },
                Ok((c, good)) => {
                    let mut bad = Vec::new();
                    if c.count != e.expected_components {
                        bad.push(format!("count {} but expected {}", c.count, e.expected_components));
                    }
                    if c.z_cap_a_mod_squares.order() % c.count != 0 {
                        bad.push(format!("count {} does not divide |{}|", c.count, c.z_cap_a_mod_squares));
                    }
                    if !good.three_alpha_excluded {
                        bad.push("3 alpha lies in Phi_A".into());
                    }
                    let detail =
                        if bad.is_empty() { format!("{} component(s), {}", c.count, c.method) } else { bad.join("; ") };
                    CheckLine { name, passed: bad.is_empty(), detail }
                }
            }
        })
        .collect();
    Ok(SuiteResult::new(Suite::Proposition, checks, Vec::new()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "theta-tool", version, about = "Symmetric pairs, restricted roots and nilpotent cones")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one catalog class.
    Report {
        series: String,
        rank: usize,
        label: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest |W_A| to enumerate.
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        cap: Option<u128>,
        /// Restrict the Lie algebra suites to one prime.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Catalog classes of one type.
    List {
        series: String,
        rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_series(s: &str) -> Result<Series, CliError> {
    Series::parse(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, value: &T, text: String) -> std::io::Result<()> {
    match format {
        Format::Text => write!(out, "{text}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serialisable")),
    }
}

fn execute(args: Args, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Internal(e.to_string());
    match args.command {
        Command::Report { series, rank, label, format, cap } => {
            let s = parse_series(&series)?;
            let entries = catalog_list(s, rank).map_err(|e| CliError::Usage(e.to_string()))?;
            let Ok(entry) = catalog_lookup(s, rank, &label) else {
                let labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
                return Err(CliError::Usage(format!(
                    "no class {label} for {s}{rank}; available: {}",
                    labels.join(", ")
                )));
            };
            let report = build_report(&entry, resolve_cap(cap)?)?;
            emit(out, format, &report, render_report(&report)).map_err(io)?;
            Ok(0)
        }
        Command::List { series, rank, format } => {
            let rows = list_rows(parse_series(&series)?, rank)?;
            emit(out, format, &rows, render_list(&rows)).map_err(io)?;
            Ok(0)
        }
        Command::Verify { suite, seed, cap, prime, format } => {
            let primes = prime.map_or_else(|| DEFAULT_PRIMES.to_vec(), |p| vec![p]);
            let opts = VerifyOptions { seed, cap: resolve_cap(cap)?, primes };
            let result = run_suite(suite, &opts)?;
            emit(out, format, &result, result.render()).map_err(io)?;
            Ok(if result.passed { 0 } else { 1 })
        }
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(CliError::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("theta-tool").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn report_g2() {
        let e = catalog_lookup(Series::G, 2, "G").unwrap();
        let r = build_report(&e, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(r.degrees, vec![2, 6]);
        assert_eq!(r.weyl_order, 12);
        assert_eq!(r.codim, r.dims.a);
        assert_eq!(r.demazure, Some(true));
    }

    #[test]
    fn report_capped() {
        let e = catalog_lookup(Series::E, 7, "EV").unwrap();
        let r = build_report(&e, 1000).unwrap();
        assert_eq!(r.poincare, None);
        assert_eq!(r.poincare_text, TOO_LARGE);
        assert_eq!(r.components.count, 2);
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["report", "E", "7", "EXX"]);
        assert_eq!(code, 2);
        assert!(err.contains("EV") && err.contains("EVII"));
        assert_eq!(call(&["verify", "nonsense"]).0, 2);
        assert_eq!(call(&["list", "D", "2"]).0, 2);
        assert_eq!(call(&["list", "Q", "2"]).0, 2);
    }

    #[test]
    fn list_a1() {
        let (code, out, _) = call(&["list", "A", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let rows: Vec<ListRow> = serde_json::from_str(&out).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].label, "AI");
    }

    #[test]
    fn w0_suite() {
        let r = verify_w0();
        assert!(r.passed);
        assert_eq!(r.checks.len(), 16);
    }
}
