//! Involutions encoded by Satake data `(I, psi)`.
//!
//! `I` is the set of compact simple roots and `psi` a diagram automorphism.
//! The induced action on roots is `theta*(a) = -w_I(psi(a))`, where `w_I` is
//! the longest element of the parabolic subgroup generated by `I`.

mod catalog;
pub mod expr;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{longest_element, RootSystem, WeylElement};
use crate::util::rational_rank;

pub use catalog::{
    catalog_all, catalog_list, catalog_lookup, catalog_source, g_name, CatalogError,
    InvolutionClassEntry, CATALOG_MAX_RANK,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatakeError {
    #[error("simple root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("psi is not a permutation of the simple roots")]
    NotAPermutation,
    #[error("root index {0} is not in the ambient system")]
    UnknownRoot(usize),
    #[error("theta* sends {0:?} outside the root system")]
    NotARoot(Vec<i64>),
}

/// Isogeny type of the ambient group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
}

#[derive(Debug, Clone)]
pub struct SatakeInvolution {
    ambient: Arc<RootSystem>,
    compact: Vec<usize>,
    psi: Vec<usize>,
    central_torus: usize,
    isogeny: Isogeny,
    // theta[j] = theta*(alpha_j)
    theta: Vec<Vec<i64>>,
}

/// Dimensions of `g`, `k`, `p`, `a` and `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpDimensions {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub a: usize,
    pub m: usize,
}

/// Outcome of [`SatakeInvolution::validate`]; an empty failure list means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The opposition involution `-w_0` as a permutation of simple roots.
pub fn opposition(rs: &RootSystem) -> Vec<usize> {
    let w0 = longest_element(rs);
    (0..rs.rank())
        .map(|i| {
            let img = rs.negative(w0.apply(rs.simple(i)));
            (0..rs.rank()).find(|&j| rs.simple(j) == img).expect("-w0 permutes simple roots")
        })
        .collect()
}

fn parabolic_longest(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(&i) = subset.iter().find(|&&i| rs.is_positive(w.apply(rs.simple(i)))) {
        w = w.compose(&WeylElement::simple(rs, i));
    }
    w
}

impl SatakeInvolution {
    pub fn new(ambient: Arc<RootSystem>, compact: Vec<usize>, psi: Vec<usize>) -> Result<Self, SatakeError> {
        let n = ambient.rank();
        if let Some(&bad) = compact.iter().find(|&&i| i >= n) {
            return Err(SatakeError::IndexOutOfRange(bad));
        }
        let mut sorted = psi.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(SatakeError::NotAPermutation);
        }
        let mut compact = compact;
        compact.sort_unstable();
        compact.dedup();
        let w_i = parabolic_longest(&ambient, &compact);
        let theta = (0..n)
            .map(|j| {
                let img = ambient.root(w_i.apply(ambient.simple(psi[j])));
                img.iter().map(|x| -x).collect()
            })
            .collect();
        let inv = SatakeInvolution {
            ambient,
            compact,
            psi,
            central_torus: 0,
            isogeny: Isogeny::SimplyConnected,
            theta,
        };
        #[cfg(debug_assertions)]
        if inv.psi_is_automorphism() && inv.psi_stabilizes_compact() {
            // -psi(w_I(a)) agrees with -w_I(psi(a))
            for j in 0..n {
                let wa = w_i.apply_vector(&inv.ambient, &unit(n, j));
                let mut other = vec![0; n];
                for (k, &c) in wa.iter().enumerate() {
                    other[inv.psi[k]] -= c;
                }
                debug_assert_eq!(other, inv.theta[j]);
            }
        }
        Ok(inv)
    }

    /// The split involution, `theta* = -1`.
    pub fn split(ambient: Arc<RootSystem>) -> Self {
        let n = ambient.rank();
        SatakeInvolution::new(ambient, Vec::new(), (0..n).collect()).expect("identity is a permutation")
    }

    pub fn with_central_torus(mut self, dim: usize) -> Self {
        self.central_torus = dim;
        self
    }

    pub fn with_isogeny(mut self, isogeny: Isogeny) -> Self {
        self.isogeny = isogeny;
        self
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.ambient)
    }

    pub fn compact_set(&self) -> &[usize] {
        &self.compact
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }

    pub fn central_torus(&self) -> usize {
        self.central_torus
    }

    pub fn is_compact(&self, i: usize) -> bool {
        self.compact.binary_search(&i).is_ok()
    }

    /// Columns `theta*(alpha_j)` in simple-root coordinates.
    pub fn theta_matrix(&self) -> &[Vec<i64>] {
        &self.theta
    }

    /// Linear extension of `theta*` to the root lattice.
    pub fn theta_vector(&self, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        let mut out = vec![0; n];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for k in 0..n {
                    out[k] += c * self.theta[j][k];
                }
            }
        }
        out
    }

    /// `theta*` on a root index.
    pub fn theta_star(&self, root: usize) -> Result<usize, SatakeError> {
        if root >= self.ambient.num_roots() {
            return Err(SatakeError::UnknownRoot(root));
        }
        let img = self.theta_vector(self.ambient.root(root));
        self.ambient.index_of(&img).ok_or(SatakeError::NotARoot(img))
    }

    /// Indices of the roots of `Phi_I`.
    pub fn compact_roots(&self) -> Vec<usize> {
        let rs = &self.ambient;
        (0..rs.num_roots())
            .filter(|&i| rs.root(i).iter().enumerate().all(|(k, &c)| c == 0 || self.is_compact(k)))
            .collect()
    }

    pub fn is_quasi_split(&self) -> bool {
        self.compact.is_empty()
    }

    pub fn is_split(&self) -> bool {
        self.is_quasi_split() && self.psi.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Inner iff `theta*` lies in the Weyl group, i.e. `psi` is the opposition involution.
    pub fn is_inner(&self) -> bool {
        self.psi == opposition(&self.ambient)
    }

    fn psi_is_automorphism(&self) -> bool {
        let c = self.ambient.cartan();
        (0..c.len()).all(|i| (0..c.len()).all(|j| c[self.psi[i]][self.psi[j]] == c[i][j]))
    }

    fn psi_stabilizes_compact(&self) -> bool {
        self.compact.iter().all(|&i| self.is_compact(self.psi[i]))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        if !self.psi_is_automorphism() {
            failures.push("psi does not preserve the Cartan matrix".to_string());
        }
        if !self.psi_stabilizes_compact() {
            failures.push("psi does not stabilize I".to_string());
        }
        let rs = &self.ambient;
        let mut images = Vec::with_capacity(rs.num_roots());
        for i in 0..rs.num_roots() {
            match self.theta_star(i) {
                Ok(j) => images.push(j),
                Err(_) => {
                    failures.push(format!("theta* sends root {:?} outside the root system", rs.root(i)));
                    return ValidationReport { failures };
                }
            }
        }
        if (0..rs.num_roots()).any(|i| images[images[i]] != i) {
            failures.push("theta* is not an involution".to_string());
        }
        if self.compact_roots().iter().any(|&i| images[i] != i) {
            failures.push("theta* is not the identity on Phi_I".to_string());
        }
        ValidationReport { failures }
    }

    /// Dimension of the (-1)-eigenspace of `theta*`.
    pub fn split_rank(&self) -> usize {
        let n = self.ambient.rank();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|k| (0..n).map(|j| self.theta[j][k] + i64::from(j == k)).collect())
            .collect();
        n - rational_rank(&rows)
    }

    /// `(dim g, dim k, dim p, dim a, dim m)`. A central torus, if any, is
    /// taken to be fixed by the involution.
    pub fn kp_dimensions(&self) -> KpDimensions {
        let rs = &self.ambient;
        let a = self.split_rank();
        let nroots = rs.num_roots();
        let ni = self.compact_roots().len();
        let g = rs.rank() + nroots + self.central_torus;
        let p = a + (nroots - ni) / 2;
        KpDimensions {
            g,
            k: g - p,
            p,
            a,
            m: rs.rank() - a + ni + self.central_torus,
        }
    }
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == j)).collect()
}
