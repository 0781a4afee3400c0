//! Integer lattices, Smith normal form and finite abelian quotients.
//!
//! Lattices are given by lists of generator vectors. Internally the
//! generators become the columns of a matrix `A` and we compute unimodular
//! `U`, `V` with `U A V = D` diagonal.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("quotient is infinite (free rank {free_rank})")]
    NonFinite { free_rank: usize },
    #[error("sublattice generator {0:?} is not in the lattice")]
    NotSublattice(Vec<i64>),
    #[error("vectors have inconsistent dimensions")]
    Dimension,
}

/// Invariant-factor form `Z/d1 x Z/d2 x ...` with `d1 | d2 | ...`, all `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_factors(&[n])
    }

    /// Normalises an arbitrary list of cyclic orders into invariant factors.
    pub fn from_factors(orders: &[u64]) -> Self {
        let n = orders.len();
        if n == 0 {
            return Self::trivial();
        }
        let diag: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { orders[i] as i64 } else { 0 }).collect())
            .collect();
        let s = smith_normal_form(&diag);
        let mut f: Vec<u64> = s.diagonal.iter().map(|&d| d as u64).filter(|&d| d > 1).collect();
        f.sort_unstable();
        FiniteAbelianGroup { invariant_factors: f }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of even invariant factors.
    pub fn two_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d % 2 == 0).count()
    }

    /// `G / G^2`, an elementary abelian 2-group.
    pub fn quotient_by_squares(&self) -> Self {
        FiniteAbelianGroup { invariant_factors: vec![2; self.two_rank()] }
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut all = self.invariant_factors.clone();
        all.extend_from_slice(&other.invariant_factors);
        Self::from_factors(&all)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Result of [`smith_normal_form`]: `u * a * v = diag(diagonal)`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: Vec<Vec<i64>>,
    pub u_inv: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<i64>,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn narrow(m: Vec<Vec<i128>>) -> Vec<Vec<i64>> {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("lattice entry overflow")).collect())
        .collect()
}

/// Smith normal form of a row-major matrix.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut d: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u = identity(m);
    let mut ui = identity(m);
    let mut v = identity(n);

    // row_i += c * row_j
    fn row_add(d: &mut [Vec<i128>], u: &mut [Vec<i128>], ui: &mut [Vec<i128>], i: usize, j: usize, c: i128) {
        for k in 0..d[i].len() {
            d[i][k] += c * d[j][k];
        }
        for k in 0..u[i].len() {
            u[i][k] += c * u[j][k];
        }
        for row in ui.iter_mut() {
            row[j] -= c * row[i];
        }
    }
    fn col_add(d: &mut [Vec<i128>], v: &mut [Vec<i128>], i: usize, j: usize, c: i128) {
        for row in d.iter_mut() {
            row[i] += c * row[j];
        }
        for row in v.iter_mut() {
            row[i] += c * row[j];
        }
    }
    fn row_swap(d: &mut [Vec<i128>], u: &mut [Vec<i128>], ui: &mut [Vec<i128>], i: usize, j: usize) {
        d.swap(i, j);
        u.swap(i, j);
        for row in ui.iter_mut() {
            row.swap(i, j);
        }
    }
    fn col_swap(d: &mut [Vec<i128>], v: &mut [Vec<i128>], i: usize, j: usize) {
        for row in d.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    }

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        row_swap(&mut d, &mut u, &mut ui, t, bi);
        col_swap(&mut d, &mut v, t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    row_add(&mut d, &mut u, &mut ui, i, t, -q);
                    if d[i][t] != 0 {
                        row_swap(&mut d, &mut u, &mut ui, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    col_add(&mut d, &mut v, j, t, -q);
                    if d[t][j] != 0 {
                        col_swap(&mut d, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            let mut fix = None;
            'outer: for i in t + 1..m {
                for j in t + 1..n {
                    if d[i][j] % d[t][t] != 0 {
                        fix = Some(i);
                        break 'outer;
                    }
                }
            }
            match fix {
                Some(i) => row_add(&mut d, &mut u, &mut ui, t, i, 1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for k in 0..n {
                d[t][k] = -d[t][k];
            }
            for k in 0..m {
                u[t][k] = -u[t][k];
            }
            for row in ui.iter_mut() {
                row[t] = -row[t];
            }
        }
        t += 1;
    }
    let diagonal: Vec<i64> = (0..m.min(n))
        .map(|i| d[i][i] as i64)
        .take_while(|&x| x != 0)
        .collect();
    Smith { u: narrow(u), u_inv: narrow(ui), v: narrow(v), diagonal, rows: m, cols: n }
}

/// Columns-as-generators matrix from a list of vectors.
fn columns(gens: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    (0..dim).map(|i| gens.iter().map(|g| g[i]).collect()).collect()
}

fn dimension(a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<usize, LatticeError> {
    let dim = a.first().or(b.first()).map_or(0, |v| v.len());
    if a.iter().chain(b).any(|v| v.len() != dim) {
        return Err(LatticeError::Dimension);
    }
    Ok(dim)
}

/// Coordinates of `v` on the lattice basis `d_i * u_inv[:, i]`, or `None`.
fn basis_coordinates(s: &Smith, v: &[i64]) -> Option<Vec<i64>> {
    let uv: Vec<i128> = s
        .u
        .iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum())
        .collect();
    let r = s.rank();
    if uv[r..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut y = Vec::with_capacity(r);
    for i in 0..r {
        let d = s.diagonal[i] as i128;
        if uv[i] % d != 0 {
            return None;
        }
        y.push((uv[i] / d) as i64);
    }
    Some(y)
}

/// Integer coefficients expressing `v` in the generators, if possible.
pub fn solve_in_lattice(gens: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let dim = v.len();
    if gens.is_empty() {
        return v.iter().all(|&x| x == 0).then(Vec::new);
    }
    let s = smith_normal_form(&columns(gens, dim));
    let y = basis_coordinates(&s, v)?;
    // x = V (y, 0...)
    Some(
        (0..gens.len())
            .map(|k| (0..y.len()).map(|i| s.v[k][i] * y[i]).sum())
            .collect(),
    )
}

pub fn lattice_contains(gens: &[Vec<i64>], v: &[i64]) -> bool {
    solve_in_lattice(gens, v).is_some()
}

/// The finite abelian group `span(generators) / span(sublattice)`.
pub fn lattice_quotient(
    generators: &[Vec<i64>],
    sublattice: &[Vec<i64>],
) -> Result<FiniteAbelianGroup, LatticeError> {
    let dim = dimension(generators, sublattice)?;
    if generators.is_empty() || dim == 0 {
        if let Some(v) = sublattice.iter().find(|v| v.iter().any(|&x| x != 0)) {
            return Err(LatticeError::NotSublattice(v.clone()));
        }
        return Ok(FiniteAbelianGroup::trivial());
    }
    let s = smith_normal_form(&columns(generators, dim));
    let r = s.rank();
    let mut coords = Vec::with_capacity(sublattice.len());
    for v in sublattice {
        coords.push(basis_coordinates(&s, v).ok_or_else(|| LatticeError::NotSublattice(v.clone()))?);
    }
    if coords.is_empty() {
        return Err(LatticeError::NonFinite { free_rank: r });
    }
    let x = columns(&coords, r);
    let t = smith_normal_form(&x);
    if t.rank() < r {
        return Err(LatticeError::NonFinite { free_rank: r - t.rank() });
    }
    let factors: Vec<u64> = t.diagonal.iter().map(|&d| d as u64).filter(|&d| d > 1).collect();
    Ok(FiniteAbelianGroup { invariant_factors: factors })
}
