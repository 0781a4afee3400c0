//! Chevalley-basis Lie algebras over `F_p` and realised gradings `g = k + p`.
//!
//! Basis order: `h_1, ..., h_n` (simple coroots) followed by `e_beta` in the
//! root order of [`RootSystem`]. Structure constants are integers, so
//! identities such as Jacobi are checked over `Z`; centraliser dimensions
//! are computed over `F_p`.

pub mod fp;
mod structure;

use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::restricted::is_prime;
use crate::rootsys::{build_root_system, CartanType, RootSystem, Series};
use crate::satake::{catalog_list, InvolutionClassEntry};
use structure::{structure_constants, StructureConstants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieAlgError {
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("coweight has length {got}, expected {expected}")]
    CoweightLength { got: usize, expected: usize },
    #[error("d theta is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("{0}")]
    Catalog(String),
}

/// Sparse integer combination of basis vectors.
pub type SparseVec = Vec<(usize, i64)>;

pub struct ModularLieAlgebra {
    rs: Arc<RootSystem>,
    p: u64,
    consts: StructureConstants,
    coroots: Vec<Vec<i64>>,
    table: Vec<SparseVec>,
}

impl std::fmt::Debug for ModularLieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModularLieAlgebra({} over F_{})", self.rs.type_string(), self.p)
    }
}

/// Checks that `p` is an odd prime exceeding every highest-root coefficient.
pub fn check_prime(rs: &RootSystem, p: u64) -> Result<(), LieAlgError> {
    if !is_prime(p) {
        return Err(LieAlgError::BadPrime { p, reason: "not prime".into() });
    }
    if p == 2 {
        return Err(LieAlgError::BadPrime { p, reason: "characteristic 2".into() });
    }
    for h in rs.highest_roots() {
        if let Some(&c) = h.iter().find(|&&c| c as u64 >= p) {
            return Err(LieAlgError::BadPrime {
                p,
                reason: format!("highest root {h:?} has coefficient {c}"),
            });
        }
    }
    Ok(())
}

pub fn build_algebra(rs: Arc<RootSystem>, p: u64) -> Result<ModularLieAlgebra, LieAlgError> {
    check_prime(&rs, p)?;
    let consts = structure_constants(&rs);
    let n = rs.rank();
    let nr = rs.num_roots();
    let dim = n + nr;
    let coroots: Vec<Vec<i64>> = (0..nr).map(|i| rs.coroot(i)).collect();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let v: SparseVec = match (i < n, j < n) {
                (true, true) => Vec::new(),
                (true, false) => vec![(j, rs.pair_simple_coroot(rs.root(j - n), i))],
                (false, true) => vec![(i, -rs.pair_simple_coroot(rs.root(i - n), j))],
                (false, false) => {
                    let (a, b) = (i - n, j - n);
                    if rs.negative(a) == b {
                        coroots[a].iter().enumerate().map(|(k, &c)| (k, c)).collect()
                    } else if let Some(s) = consts.sum(a, b) {
                        vec![(n + s, consts.get(a, b))]
                    } else {
                        Vec::new()
                    }
                }
            };
            table[i * dim + j] = v.into_iter().filter(|&(_, c)| c != 0).collect();
        }
    }
    Ok(ModularLieAlgebra { rs, p, consts, coroots, table })
}

impl ModularLieAlgebra {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    /// Whether the Chevalley form carries a non-degenerate invariant
    /// symmetric bilinear form. It fails exactly for `sl(n+1)` with `p | n+1`,
    /// where the centre of `gl` would be needed.
    pub fn has_invariant_form(&self) -> bool {
        self.rs.components().iter().all(|c| {
            let ty = c.ty;
            !(ty.series == Series::A && (ty.rank as u64 + 1) % self.p == 0)
        })
    }

    /// Basis index of `h_i`.
    pub fn h(&self, i: usize) -> usize {
        i
    }

    /// Basis index of `e_root`.
    pub fn e(&self, root: usize) -> usize {
        self.rs.rank() + root
    }

    /// `N_{a,b}`, zero when `a + b` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        if self.consts.sum(a, b).is_some() {
            self.consts.get(a, b)
        } else {
            0
        }
    }

    /// Coroot of a root in the `h_i` basis.
    pub fn coroot(&self, root: usize) -> &[i64] {
        &self.coroots[root]
    }

    /// `[b_i, b_j]` as a sparse integer vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim() + j]
    }

    /// Bracket of two integer vectors.
    pub fn bracket_int(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// Bracket of two vectors over `F_p`.
    pub fn bracket_mod(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = a * b % p;
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] = (out[k] + ab * fp::reduce(c, p)) % p;
                }
            }
        }
        out
    }

    /// `[x, v]` over `F_p` for sparse integer `v`.
    pub fn ad_apply(&self, x: &[u64], v: &[(usize, i64)]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for &(j, b) in v {
                let ab = a * fp::reduce(b, p) % p;
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] = (out[k] + ab * fp::reduce(c, p)) % p;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` over `F_p`; entry `[i][j]` is the `b_i` coefficient of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[u64]) -> Vec<Vec<u64>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for j in 0..d {
            let col = self.ad_apply(x, &[(j, 1)]);
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Jacobi identity on one basis triple, over `Z`.
    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let b = |t| self.basis_vector(t);
        let (x, y, z) = (b(i), b(j), b(k));
        let t1 = self.bracket_int(&x, &self.bracket_int(&y, &z));
        let t2 = self.bracket_int(&y, &self.bracket_int(&z, &x));
        let t3 = self.bracket_int(&z, &self.bracket_int(&x, &y));
        t1.iter().zip(&t2).zip(&t3).all(|((a, b), c)| a + b + c == 0)
    }

    /// Jacobi on every basis triple; returns the failing triples.
    pub fn jacobi_exhaustive(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    if !self.jacobi_holds(i, j, k) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn jacobi_sampled<R: Rng>(&self, samples: usize, rng: &mut R) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        (0..samples)
            .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
            .filter(|&(i, j, k)| !self.jacobi_holds(i, j, k))
            .collect()
    }

    /// Pairs `(b, c)` with `b + c` a root where `|N_{b,c}| != q + 1`,
    /// `q` the largest `i` with `c - i b` a root.
    pub fn chain_length_failures(&self) -> Vec<(usize, usize)> {
        let rs = &*self.rs;
        let nr = rs.num_roots();
        let mut bad = Vec::new();
        for b in 0..nr {
            for c in 0..nr {
                if self.consts.sum(b, c).is_none() {
                    continue;
                }
                let mut q = 0;
                while rs
                    .index_of(&rs.root(c).iter().zip(rs.root(b)).map(|(x, y)| x - (q + 1) * y).collect::<Vec<_>>())
                    .is_some()
                {
                    q += 1;
                }
                if self.consts.get(b, c).abs() != q + 1 {
                    bad.push((b, c));
                }
            }
        }
        bad
    }

    /// Largest `|N_{b,c}|`.
    pub fn max_structure_constant(&self) -> i64 {
        let nr = self.rs.num_roots();
        (0..nr)
            .flat_map(|a| (0..nr).map(move |b| (a, b)))
            .map(|(a, b)| self.structure_constant(a, b).abs())
            .max()
            .unwrap_or(0)
    }
}

/// How a realisation's involution was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealizationKind {
    /// `e_beta -> (-1)^{<beta, mu>} e_beta`, identity on the Cartan.
    Inner { mu: Vec<i64> },
    /// `e_beta -> -e_{-beta}`, `h -> -h`.
    Chevalley,
}

#[derive(Debug, Clone)]
pub struct SymmetricPairRealization {
    algebra: Arc<ModularLieAlgebra>,
    kind: RealizationKind,
    dtheta: Vec<(usize, i64)>,
    k_basis: Vec<SparseVec>,
    p_basis: Vec<SparseVec>,
}

/// Inner involution from a coweight `mu`, given in fundamental-coweight coordinates.
pub fn realize_inner(alg: Arc<ModularLieAlgebra>, mu: &[i64]) -> Result<SymmetricPairRealization, LieAlgError> {
    let n = alg.rank();
    if mu.len() != n {
        return Err(LieAlgError::CoweightLength { got: mu.len(), expected: n });
    }
    let rs = alg.root_system();
    let mut dtheta: Vec<(usize, i64)> = (0..n).map(|i| (i, 1)).collect();
    let mut k_basis: Vec<SparseVec> = (0..n).map(|i| vec![(i, 1)]).collect();
    let mut p_basis = Vec::new();
    for r in 0..rs.num_roots() {
        let pair: i64 = rs.root(r).iter().zip(mu).map(|(a, b)| a * b).sum();
        let sign = if pair.rem_euclid(2) == 0 { 1 } else { -1 };
        dtheta.push((alg.e(r), sign));
        if sign == 1 {
            k_basis.push(vec![(alg.e(r), 1)]);
        } else {
            p_basis.push(vec![(alg.e(r), 1)]);
        }
    }
    Ok(SymmetricPairRealization { kind: RealizationKind::Inner { mu: mu.to_vec() }, algebra: alg, dtheta, k_basis, p_basis })
}

/// The Chevalley involution; fails if it does not preserve brackets.
pub fn realize_chevalley_involution(alg: Arc<ModularLieAlgebra>) -> Result<SymmetricPairRealization, LieAlgError> {
    let n = alg.rank();
    let rs = alg.root_system();
    let mut dtheta: Vec<(usize, i64)> = (0..n).map(|i| (i, -1)).collect();
    for r in 0..rs.num_roots() {
        dtheta.push((alg.e(rs.negative(r)), -1));
    }
    let mut p_basis: Vec<SparseVec> = (0..n).map(|i| vec![(i, 1)]).collect();
    let mut k_basis = Vec::new();
    for r in 0..rs.num_positive() {
        let (e, f) = (alg.e(r), alg.e(rs.negative(r)));
        k_basis.push(vec![(e, 1), (f, -1)]);
        p_basis.push(vec![(e, 1), (f, 1)]);
    }
    let real = SymmetricPairRealization { algebra: alg, kind: RealizationKind::Chevalley, dtheta, k_basis, p_basis };
    if let Some(msg) = real.automorphism_failures().into_iter().next() {
        return Err(LieAlgError::NotAutomorphism(msg));
    }
    Ok(real)
}

/// Outcome of [`SymmetricPairRealization::check_grading`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingReport {
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl SymmetricPairRealization {
    pub fn algebra(&self) -> &ModularLieAlgebra {
        &self.algebra
    }

    pub fn kind(&self) -> &RealizationKind {
        &self.kind
    }

    pub fn k_basis(&self) -> &[SparseVec] {
        &self.k_basis
    }

    pub fn p_basis(&self) -> &[SparseVec] {
        &self.p_basis
    }

    pub fn dim_k(&self) -> usize {
        self.k_basis.len()
    }

    pub fn dim_p(&self) -> usize {
        self.p_basis.len()
    }

    /// Image of basis vector `i` as `(index, sign)`.
    pub fn dtheta_basis(&self, i: usize) -> (usize, i64) {
        self.dtheta[i]
    }

    pub fn apply_dtheta(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            let (t, s) = self.dtheta[i];
            out[t] += s * c;
        }
        out
    }

    pub fn is_involution(&self) -> bool {
        (0..self.dtheta.len()).all(|i| {
            let (t, s) = self.dtheta[i];
            let (u, r) = self.dtheta[t];
            u == i && s * r == 1
        })
    }

    /// Basis pairs on which `d theta` fails to preserve the bracket.
    pub fn automorphism_failures(&self) -> Vec<String> {
        let alg = &*self.algebra;
        let d = alg.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply_dtheta(&alg.bracket_int(&alg.basis_vector(i), &alg.basis_vector(j)));
                let (ti, si) = self.dtheta[i];
                let (tj, sj) = self.dtheta[j];
                let mut rhs = vec![0; d];
                for &(k, c) in alg.bracket_basis(ti, tj) {
                    rhs[k] += si * sj * c;
                }
                if lhs != rhs {
                    out.push(format!("basis pair ({i}, {j})"));
                }
            }
        }
        out
    }

    fn dense(&self, v: &[(usize, i64)]) -> Vec<i64> {
        let mut out = vec![0; self.algebra.dim()];
        for &(i, c) in v {
            out[i] += c;
        }
        out
    }

    /// `[k,k] in k`, `[k,p] in p`, `[p,p] in k` on every pair of basis vectors.
    pub fn check_grading(&self) -> GradingReport {
        let mut rep = GradingReport::default();
        let alg = &*self.algebra;
        let parts = [(&self.k_basis, 1i64, "k"), (&self.p_basis, -1i64, "p")];
        for (xs, sx, nx) in parts {
            for (ys, sy, ny) in parts {
                for (a, x) in xs.iter().enumerate() {
                    for (b, y) in ys.iter().enumerate() {
                        rep.pairs_checked += 1;
                        let br = alg.bracket_int(&self.dense(x), &self.dense(y));
                        let img = self.apply_dtheta(&br);
                        if img.iter().zip(&br).any(|(u, v)| *u != sx * sy * v) {
                            rep.failures.push(format!("[{nx}_{a}, {ny}_{b}] has the wrong parity"));
                        }
                    }
                }
            }
        }
        for (i, v) in self.k_basis.iter().enumerate() {
            let d = self.dense(v);
            if self.apply_dtheta(&d) != d {
                rep.failures.push(format!("k_{i} is not fixed"));
            }
        }
        for (i, v) in self.p_basis.iter().enumerate() {
            let d = self.dense(v);
            if self.apply_dtheta(&d) != d.iter().map(|x| -x).collect::<Vec<_>>() {
                rep.failures.push(format!("p_{i} is not negated"));
            }
        }
        rep
    }

    /// The element `sum_j coords[j] p_j` of `g` over `F_p`.
    pub fn p_element(&self, coords: &[u64]) -> Vec<u64> {
        let p = self.algebra.p;
        let mut x = vec![0; self.algebra.dim()];
        for (c, v) in coords.iter().zip(&self.p_basis) {
            for &(i, a) in v {
                x[i] = (x[i] + c * fp::reduce(a, p)) % p;
            }
        }
        x
    }

    pub fn random_p_coords<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.dim_p()).map(|_| rng.gen_range(0..self.algebra.p)).collect()
    }

    /// `(dim z_k(x), dim z_p(x))` for `x` given in `p`-basis coordinates.
    pub fn centralizer_dims(&self, x_coords: &[u64]) -> (usize, usize) {
        let x = self.p_element(x_coords);
        let p = self.algebra.p;
        let image = |basis: &[SparseVec]| {
            let rows: Vec<Vec<u64>> = basis.iter().map(|b| self.algebra.ad_apply(&x, b)).collect();
            basis.len() - fp::rank(rows, p)
        };
        (image(&self.k_basis), image(&self.p_basis))
    }

    /// `dim z_g(x)` computed on the full basis.
    pub fn centralizer_dim_g(&self, x_coords: &[u64]) -> usize {
        let x = self.p_element(x_coords);
        let d = self.algebra.dim();
        let rows: Vec<Vec<u64>> = (0..d).map(|j| self.algebra.ad_apply(&x, &[(j, 1)])).collect();
        d - fp::rank(rows, self.algebra.p)
    }

    /// For the Chevalley involution: `p`-coordinates of some `h` in the Cartan
    /// with `beta(h) != 0` for every root.
    pub fn regular_toral_element(&self) -> Option<Vec<u64>> {
        if self.kind != RealizationKind::Chevalley {
            return None;
        }
        let alg = &*self.algebra;
        let (rs, p, n) = (alg.root_system(), alg.p, alg.rank());
        for t in 1..p {
            let c: Vec<u64> = (0..n).map(|i| fp::pow(t, i as u64 + 1, p)).collect();
            let regular = (0..rs.num_positive()).all(|r| {
                let v: i64 = (0..n).map(|i| c[i] as i64 * rs.pair_simple_coroot(rs.root(r), i)).sum();
                v.rem_euclid(p as i64) != 0
            });
            if regular {
                let mut coords = vec![0; self.dim_p()];
                coords[..n].copy_from_slice(&c);
                return Some(coords);
            }
        }
        None
    }

    /// Relations among `E_a = e_a`, `F_a = -d theta(e_a)`, `H_a = [E_a, F_a]`
    /// for simple `a`, in the Chevalley realisation: `[H,H] = 0`,
    /// `[H_a, E_b] = <b, a^vee> E_b`, `[H_a, F_b] = -<b, a^vee> F_b`,
    /// `[E_a, F_b] = 0` for `a != b`, the Serre relations, `ad(E)^p = 0` and
    /// `ad(H)^p = ad(H)`.
    pub fn commutation_relation_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.kind != RealizationKind::Chevalley {
            out.push("relations are only defined for the Chevalley realisation".into());
            return out;
        }
        let alg = &*self.algebra;
        let (rs, n, p) = (alg.root_system(), alg.rank(), alg.p);
        let e: Vec<Vec<i64>> = (0..n).map(|i| alg.basis_vector(alg.e(rs.simple(i)))).collect();
        let f: Vec<Vec<i64>> = e.iter().map(|v| self.apply_dtheta(v).iter().map(|x| -x).collect()).collect();
        let h: Vec<Vec<i64>> = (0..n).map(|i| alg.bracket_int(&e[i], &f[i])).collect();
        let scale = |v: &[i64], c: i64| v.iter().map(|x| x * c).collect::<Vec<_>>();
        let zero = vec![0; alg.dim()];
        for a in 0..n {
            if h[a] != alg.basis_vector(alg.h(a)) {
                out.push(format!("H_{a} is not the simple coroot"));
            }
            for b in 0..n {
                let c = rs.cartan()[b][a];
                if alg.bracket_int(&h[a], &h[b]) != zero {
                    out.push(format!("(a) [H_{a}, H_{b}] != 0"));
                }
                if alg.bracket_int(&h[a], &e[b]) != scale(&e[b], c) {
                    out.push(format!("(b) [H_{a}, E_{b}] != {c} E_{b}"));
                }
                if alg.bracket_int(&h[a], &f[b]) != scale(&f[b], -c) {
                    out.push(format!("(b) [H_{a}, F_{b}] != {} F_{b}", -c));
                }
                if a == b {
                    continue;
                }
                if alg.bracket_int(&e[a], &f[b]) != zero {
                    out.push(format!("(c) [E_{a}, F_{b}] != 0"));
                }
                for (name, x) in [("E", &e), ("F", &f)] {
                    let mut v = x[b].clone();
                    for _ in 0..(1 - c) {
                        v = alg.bracket_int(&x[a], &v);
                    }
                    if v != zero {
                        out.push(format!("(e) ad({name}_{a})^{} {name}_{b} != 0", 1 - c));
                    }
                }
            }
            let to_mod = |v: &[i64]| v.iter().map(|&c| fp::reduce(c, p)).collect::<Vec<_>>();
            let ad_e = alg.ad_matrix(&to_mod(&e[a]));
            if fp::mat_pow(&ad_e, p, p).iter().flatten().any(|&c| c != 0) {
                out.push(format!("(f) E_{a}^[p] != 0"));
            }
            let ad_h = alg.ad_matrix(&to_mod(&h[a]));
            if fp::mat_pow(&ad_h, p, p) != ad_h {
                out.push(format!("(f) H_{a}^[p] != H_{a}"));
            }
        }
        out
    }
}

/// A realisation together with the catalog class it represents.
#[derive(Debug, Clone)]
pub struct RealizedClass {
    pub entry: InvolutionClassEntry,
    pub realization: SymmetricPairRealization,
}

impl RealizedClass {
    pub fn name(&self) -> String {
        let how = match self.realization.kind() {
            RealizationKind::Inner { .. } => "inner",
            RealizationKind::Chevalley => "chevalley",
        };
        format!("{}{} {} ({how})", self.entry.series, self.entry.rank, self.entry.label)
    }
}

/// Simple types of rank at most `max_rank`, one per isomorphism class of
/// catalog series (so `B2` and `C2` both appear).
pub fn small_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for s in Series::ALL {
        for n in 1..=max_rank {
            let start = match s {
                Series::B | Series::C => 2,
                Series::D => 4,
                _ => 1,
            };
            if n >= start {
                if let Ok(t) = CartanType::new(s, n) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Inner realisations of every catalog class with a coweight, plus the
/// Chevalley involution of every type, for ranks up to `max_rank`.
pub fn standard_realizations(max_rank: usize, p: u64) -> Result<Vec<RealizedClass>, LieAlgError> {
    let mut out = Vec::new();
    for ty in small_types(max_rank) {
        let rs = Arc::new(build_root_system(ty.series, ty.rank).map_err(|e| LieAlgError::Catalog(e.to_string()))?);
        let alg = match build_algebra(Arc::clone(&rs), p) {
            Ok(a) => Arc::new(a),
            Err(LieAlgError::BadPrime { .. }) => continue,
            Err(e) => return Err(e),
        };
        let entries = catalog_list(ty.series, ty.rank).map_err(|e| LieAlgError::Catalog(e.to_string()))?;
        for entry in &entries {
            if let Some(m) = entry.mu {
                let mu: Vec<i64> = (0..ty.rank).map(|k| i64::from(k == m)).collect();
                let realization = realize_inner(Arc::clone(&alg), &mu)?;
                out.push(RealizedClass { entry: entry.clone(), realization });
            }
        }
        if let Some(split) = entries.iter().find(|e| e.is_split) {
            let realization = realize_chevalley_involution(Arc::clone(&alg))?;
            out.push(RealizedClass { entry: split.clone(), realization });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(s: Series, n: usize, p: u64) -> Arc<ModularLieAlgebra> {
        Arc::new(build_algebra(Arc::new(build_root_system(s, n).unwrap()), p).unwrap())
    }

    #[test]
    fn sl2() {
        let a = alg(Series::A, 1, 5);
        let (h, e, f) = (a.h(0), a.e(0), a.e(1));
        assert_eq!(a.bracket_basis(e, f), &[(h, 1)]);
        assert_eq!(a.bracket_basis(h, e), &[(e, 2)]);
        assert_eq!(a.bracket_basis(h, f), &[(f, -2)]);
    }

    #[test]
    fn a2_constants() {
        let a = alg(Series::A, 2, 7);
        let rs = a.root_system();
        let n = a.structure_constant(rs.simple(0), rs.simple(1));
        assert_eq!(n.abs(), 1);
        assert!(!a.bracket_basis(a.e(rs.simple(0)), a.e(rs.simple(1))).is_empty());
    }

    #[test]
    fn g2_has_three() {
        let a = alg(Series::G, 2, 7);
        assert_eq!(a.max_structure_constant(), 3);
        assert!(a.chain_length_failures().is_empty());
    }

    #[test]
    fn bad_primes() {
        let rs = Arc::new(build_root_system(Series::E, 8).unwrap());
        match build_algebra(Arc::clone(&rs), 5) {
            Err(LieAlgError::BadPrime { reason, .. }) => assert!(reason.contains("coefficient 6")),
            other => panic!("{other:?}"),
        }
        assert!(build_algebra(Arc::clone(&rs), 9).is_err());
        assert!(build_algebra(Arc::new(build_root_system(Series::A, 2).unwrap()), 2).is_err());
    }

    #[test]
    fn jacobi_small_ranks() {
        for ty in small_types(3) {
            let a = alg(ty.series, ty.rank, 7);
            assert!(a.jacobi_exhaustive().is_empty(), "{ty}");
            assert!(a.chain_length_failures().is_empty(), "{ty}");
        }
    }

    #[test]
    fn jacobi_sampled_f4() {
        let a = alg(Series::F, 4, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(a.jacobi_sampled(3000, &mut rng).is_empty());
        assert!(a.chain_length_failures().is_empty());
    }

    #[test]
    fn chevalley_g2() {
        let r = realize_chevalley_involution(alg(Series::G, 2, 7)).unwrap();
        assert_eq!((r.dim_k(), r.dim_p()), (6, 8));
        assert!(r.is_involution());
        assert!(r.check_grading().failures.is_empty());
        assert!(r.commutation_relation_failures().is_empty());
    }

    #[test]
    fn chevalley_a1() {
        let r = realize_chevalley_involution(alg(Series::A, 1, 5)).unwrap();
        assert_eq!((r.dim_k(), r.dim_p()), (1, 2));
        assert_eq!(r.k_basis()[0], vec![(1, 1), (2, -1)]);
    }

    #[test]
    fn inner_examples() {
        let a1 = alg(Series::A, 1, 5);
        let triv = realize_inner(Arc::clone(&a1), &[0]).unwrap();
        assert_eq!((triv.dim_k(), triv.dim_p()), (3, 0));
        let r = realize_inner(a1, &[1]).unwrap();
        assert_eq!((r.dim_k(), r.dim_p()), (1, 2));
        let c2 = realize_inner(alg(Series::C, 2, 5), &[0, 1]).unwrap();
        assert_eq!(c2.dim_k(), 4);
    }

    #[test]
    fn centralizers() {
        let r = realize_chevalley_involution(alg(Series::B, 3, 7)).unwrap();
        assert_eq!(r.centralizer_dims(&vec![0; r.dim_p()]), (r.dim_k(), r.dim_p()));
        let h = r.regular_toral_element().unwrap();
        assert_eq!(r.centralizer_dims(&h), (0, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = r.random_p_coords(&mut rng);
            let (zk, zp) = r.centralizer_dims(&x);
            assert_eq!(zk as i64 - zp as i64, r.dim_k() as i64 - r.dim_p() as i64);
            assert_eq!(zk + zp, r.centralizer_dim_g(&x));
        }
    }

    #[test]
    fn identity_needs_invariant_form() {
        let a4 = alg(Series::A, 4, 5);
        assert!(!a4.has_invariant_form());
        assert!(alg(Series::A, 4, 7).has_invariant_form());
        let r = realize_inner(a4, &[0, 1, 0, 0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let target = r.dim_k() as i64 - r.dim_p() as i64;
        let broken = (0..200).any(|_| {
            let (zk, zp) = r.centralizer_dims(&r.random_p_coords(&mut rng));
            zk as i64 - zp as i64 != target
        });
        assert!(broken);
    }

    #[test]
    fn realizations_match_kp_dimensions() {
        let all = standard_realizations(4, 7).unwrap();
        assert!(all.len() > 20);
        for rc in &all {
            let d = rc.entry.satake.kp_dimensions();
            assert_eq!((rc.realization.dim_k(), rc.realization.dim_p()), (d.k, d.p), "{}", rc.name());
            assert!(rc.realization.is_involution());
        }
    }
}
