//! The embedded catalog of involution classes.
//!
//! Records are rank-schematic templates (see `docs/catalog-format.md`)
//! parsed once and instantiated for a concrete rank on request.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use super::expr::{self, Env, Expr};
use super::SatakeInvolution;
use crate::rootsys::{build_root_system, CartanType, RootSystemError, Series};

const SOURCE: &str = include_str!("../../data/catalog.txt");

/// Largest rank the shipped tables are checked against.
pub const CATALOG_MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Type(#[from] RootSystemError),
    #[error("no class {label:?} for {series}{rank}; available: {}", available.join(", "))]
    UnknownLabel {
        series: Series,
        rank: usize,
        label: String,
        available: Vec<String>,
    },
}

/// The raw catalog text.
pub fn catalog_source() -> &'static str {
    SOURCE
}

#[derive(Debug, Clone)]
pub struct InvolutionClassEntry {
    pub series: Series,
    pub rank: usize,
    pub label: String,
    pub satake: SatakeInvolution,
    /// Name of the fixed subalgebra `k`, e.g. `so(12)+sl(2)`.
    pub fixed_algebra_name: String,
    pub is_split: bool,
    pub is_quasi_split: bool,
    /// Expected type of the restricted root system, e.g. `BC2` or `F4`.
    pub expected_phi_a: String,
    /// Expected number of irreducible components of the nilpotent cone.
    pub expected_components: u64,
    /// Fundamental coweight (0-based index) realising the class as an inner
    /// grading, when the class is inner.
    pub mu: Option<usize>,
    pub source_line: usize,
}

impl InvolutionClassEntry {
    pub fn ambient_name(&self) -> String {
        g_name(self.series, self.rank)
    }

    /// `(g, k)` as text.
    pub fn pair_name(&self) -> String {
        format!("({}, {})", self.ambient_name(), self.fixed_algebra_name)
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }
}

/// Lie algebra name of a simple type.
pub fn g_name(series: Series, n: usize) -> String {
    match series {
        Series::A => format!("sl({})", n + 1),
        Series::B => format!("so({})", 2 * n + 1),
        Series::C => format!("sp({})", 2 * n),
        Series::D => format!("so({})", 2 * n),
        Series::E => format!("e{n}"),
        Series::F => "f4".to_string(),
        Series::G => "g2".to_string(),
    }
}

#[derive(Debug)]
enum RankSpec {
    Fixed(usize),
    AtLeast(usize),
}

#[derive(Debug)]
enum PsiSpec {
    Id,
    Flip,
    Cycles(Vec<Vec<Expr>>),
}

#[derive(Debug)]
struct SetItem {
    lo: Expr,
    hi: Option<Expr>,
    step: Option<Expr>,
}

#[derive(Debug)]
struct Template {
    line: usize,
    series: Series,
    rank: RankSpec,
    label: String,
    param: Option<(String, Expr, Expr)>,
    when: Option<Expr>,
    compact: Vec<SetItem>,
    psi: PsiSpec,
    k: String,
    phi_a: (String, Option<Expr>),
    components: Expr,
    mu: Option<Expr>,
}

fn parse_set(s: &str) -> Result<Vec<SetItem>, String> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let (range, step) = match item.split_once(':') {
                Some((r, st)) => (r, Some(expr::parse(st)?)),
                None => (item, None),
            };
            match range.split_once("..") {
                Some((lo, hi)) => Ok(SetItem { lo: expr::parse(lo)?, hi: Some(expr::parse(hi)?), step }),
                None => Ok(SetItem { lo: expr::parse(range)?, hi: None, step }),
            }
        })
        .collect()
}

fn parse_psi(s: &str) -> Result<PsiSpec, String> {
    match s {
        "id" => return Ok(PsiSpec::Id),
        "flip" => return Ok(PsiSpec::Flip),
        _ => {}
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| format!("bad cycle notation {s:?}"))?;
        // find the matching parenthesis
        let mut depth = 1;
        let mut end = None;
        for (i, c) in body.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| format!("unbalanced cycle {s:?}"))?;
        cycles.push(expr::parse_list(&body[..end])?);
        rest = &body[end + 1..];
    }
    Ok(PsiSpec::Cycles(cycles))
}

fn parse_phi(s: &str) -> Result<(String, Option<Expr>), String> {
    match s.split_once('{') {
        Some((prefix, rest)) => {
            let inner = rest.strip_suffix('}').ok_or_else(|| format!("bad type {s:?}"))?;
            Ok((prefix.to_string(), Some(expr::parse(inner)?)))
        }
        None => Ok((s.to_string(), None)),
    }
}

fn take<'a>(fields: &mut HashMap<&str, &'a str>, k: &str) -> Option<&'a str> {
    fields.remove(k)
}

fn need<'a>(fields: &mut HashMap<&str, &'a str>, k: &str) -> Result<&'a str, String> {
    take(fields, k).ok_or(format!("missing field {k}"))
}

fn parse_line(line: usize, text: &str) -> Result<Template, String> {
    let mut words = text.split_whitespace();
    let series = Series::parse(words.next().ok_or("missing series")?).map_err(|e| e.to_string())?;
    let rank_word = words.next().ok_or("missing rank")?;
    let rank = match rank_word.strip_prefix("n>=") {
        Some(r) => RankSpec::AtLeast(r.parse().map_err(|_| "bad rank")?),
        None => RankSpec::Fixed(rank_word.parse().map_err(|_| "bad rank")?),
    };
    let label = words.next().ok_or("missing label")?.to_string();
    let mut fields: HashMap<&str, &str> = HashMap::new();
    for w in words {
        let (k, v) = w.split_once('=').ok_or_else(|| format!("field {w:?} lacks '='"))?;
        if fields.insert(k, v).is_some() {
            return Err(format!("duplicate field {k}"));
        }
    }
    let param = match take(&mut fields, "param") {
        Some(v) => {
            let (var, range) = v.split_once(':').ok_or("param needs var:lo..hi")?;
            let (lo, hi) = range.split_once("..").ok_or("param needs lo..hi")?;
            Some((var.to_string(), expr::parse(lo)?, expr::parse(hi)?))
        }
        None => None,
    };
    let when = take(&mut fields, "when").map(expr::parse).transpose()?;
    let compact = parse_set(need(&mut fields, "I")?)?;
    let psi = parse_psi(need(&mut fields, "psi")?)?;
    let k = need(&mut fields, "k")?.to_string();
    let phi_a = parse_phi(need(&mut fields, "phiA")?)?;
    let components = expr::parse(need(&mut fields, "components")?)?;
    let mu = take(&mut fields, "mu").map(expr::parse).transpose()?;
    if let Some(k) = fields.keys().next() {
        return Err(format!("unknown field {k}"));
    }
    Ok(Template { line, series, rank, label, param, when, compact, psi, k, phi_a, components, mu })
}

fn templates() -> Result<&'static [Template], CatalogError> {
    static PARSED: OnceLock<Result<Vec<Template>, CatalogError>> = OnceLock::new();
    PARSED
        .get_or_init(|| {
            SOURCE
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(i, l)| parse_line(i + 1, l).map_err(|msg| CatalogError::Parse { line: i + 1, msg }))
                .collect()
        })
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

fn phi_a_name(prefix: &str, rank: Option<i64>) -> Result<String, String> {
    let Some(r) = rank else { return Ok(prefix.to_string()) };
    if r < 1 {
        return Err(format!("restricted rank {r} < 1"));
    }
    if prefix == "BC" {
        return Ok(format!("BC{r}"));
    }
    let ty = CartanType::parse(&format!("{prefix}{r}")).map_err(|e| e.to_string())?;
    Ok(ty.canonical().to_string())
}

impl Template {
    fn applies(&self, series: Series, n: usize) -> bool {
        self.series == series
            && match self.rank {
                RankSpec::Fixed(r) => r == n,
                RankSpec::AtLeast(r) => n >= r,
            }
    }

    fn instantiate(
        &self,
        n: usize,
        ambient: &Arc<crate::rootsys::RootSystem>,
    ) -> Result<Vec<InvolutionClassEntry>, String> {
        let mut env: Env = Env::new();
        env.insert("n".into(), n as i64);
        let values: Vec<Option<i64>> = match &self.param {
            Some((var, lo, hi)) => {
                let (lo, hi) = (expr::eval(lo, &env)?, expr::eval(hi, &env)?);
                let _ = var;
                (lo..=hi).map(Some).collect()
            }
            None => vec![None],
        };
        let mut out = Vec::new();
        for v in values {
            let mut env = env.clone();
            if let (Some(v), Some((var, _, _))) = (v, &self.param) {
                env.insert(var.clone(), v);
            }
            if let Some(w) = &self.when {
                if expr::eval(w, &env)? == 0 {
                    continue;
                }
            }
            let mut compact = Vec::new();
            for item in &self.compact {
                let lo = expr::eval(&item.lo, &env)?;
                let hi = match &item.hi {
                    Some(h) => expr::eval(h, &env)?,
                    None => lo,
                };
                let step = match &item.step {
                    Some(s) => expr::eval(s, &env)?,
                    None => 1,
                };
                if step < 1 {
                    return Err("set step must be positive".into());
                }
                let mut i = lo;
                while i <= hi {
                    if i < 1 || i as usize > n {
                        return Err(format!("index {i} outside 1..{n}"));
                    }
                    compact.push(i as usize - 1);
                    i += step;
                }
            }
            let mut psi: Vec<usize> = (0..n).collect();
            match &self.psi {
                PsiSpec::Id => {}
                PsiSpec::Flip => psi.reverse(),
                PsiSpec::Cycles(cycles) => {
                    for cyc in cycles {
                        let idx: Vec<usize> = cyc
                            .iter()
                            .map(|e| expr::eval(e, &env))
                            .collect::<Result<Vec<_>, _>>()?
                            .into_iter()
                            .map(|i| {
                                if i < 1 || i as usize > n {
                                    Err(format!("cycle index {i} outside 1..{n}"))
                                } else {
                                    Ok(i as usize - 1)
                                }
                            })
                            .collect::<Result<_, _>>()?;
                        for (a, &from) in idx.iter().enumerate() {
                            psi[from] = idx[(a + 1) % idx.len()];
                        }
                    }
                }
            }
            let satake = SatakeInvolution::new(Arc::clone(ambient), compact, psi).map_err(|e| e.to_string())?;
            let phi_rank = self.phi_a.1.as_ref().map(|e| expr::eval(e, &env)).transpose()?;
            let components = expr::eval(&self.components, &env)?;
            if components < 1 {
                return Err("component count must be positive".into());
            }
            let mu = match &self.mu {
                Some(e) => match expr::eval(e, &env)? {
                    0 => None,
                    i if i >= 1 && i as usize <= n => Some(i as usize - 1),
                    i => return Err(format!("mu index {i} outside 1..{n}")),
                },
                None => None,
            };
            out.push(InvolutionClassEntry {
                series: self.series,
                rank: n,
                label: expr::substitute(&self.label, &env),
                is_split: satake.is_split(),
                is_quasi_split: satake.is_quasi_split(),
                satake,
                fixed_algebra_name: expr::substitute(&self.k, &env),
                expected_phi_a: phi_a_name(&self.phi_a.0, phi_rank)?,
                expected_components: components as u64,
                mu,
                source_line: self.line,
            });
        }
        Ok(out)
    }
}

/// All classes for the simple type `series` of the given rank, in catalog order.
pub fn catalog_list(series: Series, rank: usize) -> Result<Vec<InvolutionClassEntry>, CatalogError> {
    CartanType::new(series, rank)?;
    let ambient = Arc::new(build_root_system(series, rank)?);
    let mut out = Vec::new();
    for t in templates()? {
        if t.applies(series, rank) {
            out.extend(
                t.instantiate(rank, &ambient)
                    .map_err(|msg| CatalogError::Parse { line: t.line, msg })?,
            );
        }
    }
    Ok(out)
}

pub fn catalog_lookup(series: Series, rank: usize, label: &str) -> Result<InvolutionClassEntry, CatalogError> {
    let all = catalog_list(series, rank)?;
    let available: Vec<String> = all.iter().map(|e| e.label.clone()).collect();
    all.into_iter().find(|e| e.label == label).ok_or(CatalogError::UnknownLabel {
        series,
        rank,
        label: label.to_string(),
        available,
    })
}

/// Every catalog entry for simple types of rank at most `max_rank`.
pub fn catalog_all(max_rank: usize) -> Result<Vec<InvolutionClassEntry>, CatalogError> {
    let mut out = Vec::new();
    for s in Series::ALL {
        for n in 1..=max_rank {
            if CartanType::new(s, n).is_ok() {
                out.extend(catalog_list(s, n)?);
            }
        }
    }
    Ok(out)
}
