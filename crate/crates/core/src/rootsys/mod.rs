//! Root systems stored in the simple-root basis.
//!
//! Every root is an integer vector of coefficients on the simple roots and
//! every pairing goes through the Cartan matrix, so nothing here touches
//! floating point. Roots are ordered once at construction: positive roots by
//! height and then lexicographically, followed by the negatives in the same
//! order. All indices handed out by this module refer to that ordering.

mod classify;
mod lattice;
mod weyl;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use classify::classify_component;
pub use lattice::{
    lattice_contains, lattice_quotient, smith_normal_form, solve_in_lattice, FiniteAbelianGroup,
    LatticeError, Smith,
};
pub use weyl::{
    enumerate_weyl, length_counts, longest_element, reflection, WeylElement, WeylEnumeration,
    DEFAULT_ORDER_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("no simple root system of type {series}{rank}")]
    InvalidType { series: Series, rank: usize },
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root index {index} out of range (system has {len} roots)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("Weyl group order {predicted} exceeds cap {cap}")]
    CapExceeded { predicted: u128, cap: u128 },
    #[error("enumeration unsupported: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn parse(s: &str) -> Result<Series, RootSystemError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(RootSystemError::UnknownSeries(other.to_string())),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Cartan type such as `E7` or `C3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    /// Validates the pair. `B` and `C` start at rank 2, `D` at rank 4.
    pub fn new(series: Series, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(RootSystemError::InvalidType { series, rank })
        }
    }

    /// Representative used for comparisons up to isomorphism:
    /// `B1`, `C1` become `A1`, `C2` becomes `B2`, `D3` becomes `A3`.
    pub fn canonical(self) -> Self {
        use Series::*;
        match (self.series, self.rank) {
            (B, 1) | (C, 1) => CartanType { series: A, rank: 1 },
            (C, 2) => CartanType { series: B, rank: 2 },
            (D, 3) => CartanType { series: A, rank: 3 },
            _ => self,
        }
    }

    pub fn parse(s: &str) -> Result<Self, RootSystemError> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| RootSystemError::UnknownSeries(String::new()))?;
        let series = Series::parse(&letter.to_string())?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSystemError::UnknownSeries(s.to_string()))?;
        match (series, rank) {
            (Series::B, 1) | (Series::C, 1) | (Series::D, 3) => Ok(CartanType { series, rank }),
            _ => CartanType::new(series, rank),
        }
    }

    pub fn num_roots(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }

    /// Closed-form order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Bourbaki Cartan matrix, `c[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        // alpha_n short in B, long in C; alpha_1,alpha_2 long in F4; alpha_1 short in G2
        match self.series {
            Series::B if n >= 2 => c[n - 2][n - 1] = -2,
            Series::C if n >= 2 => c[n - 1][n - 2] = -2,
            Series::F => c[1][2] = -2,
            Series::G => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A connected piece of a Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: CartanType,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    declared: Option<CartanType>,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    components: Vec<Component>,
    simple_idx: Vec<usize>,
    simple_reflections: Vec<Vec<u16>>,
}

/// Builds the root system of a simple type in Bourbaki numbering.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem, RootSystemError> {
    let ty = CartanType::new(series, rank)?;
    let mut rs = RootSystem::from_cartan(ty.cartan_matrix())?;
    rs.declared = Some(ty);
    debug_assert_eq!(rs.roots.len(), ty.num_roots());
    Ok(rs)
}

impl RootSystem {
    /// Builds a (possibly reducible) finite root system from a Cartan matrix
    /// with the convention `c[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self, RootSystemError> {
        let n = cartan.len();
        if n == 0 {
            return Err(RootSystemError::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(RootSystemError::InvalidCartan("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(RootSystemError::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && (v > 0 || (v == 0) != (cartan[j][i] == 0)) {
                    return Err(RootSystemError::InvalidCartan(format!("bad entry at ({i},{j})")));
                }
            }
        }
        let lengths = symmetrizer(&cartan)?;
        let components = classify::components(&cartan, &lengths)?;
        let form: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| cartan[i][j] * lengths[j] / 2).collect())
            .collect();

        let positives = positive_roots(&cartan)?;
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let npos = positives.len();
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let mut rs = RootSystem {
            declared: None,
            cartan,
            form,
            roots,
            npos,
            index,
            components,
            simple_idx: Vec::new(),
            simple_reflections: Vec::new(),
        };
        rs.simple_idx = (0..n)
            .map(|i| rs.index[&(0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>()])
            .collect();
        rs.simple_reflections = rs.simple_idx.iter().map(|&r| rs.reflection_perm(r)).collect();
        let expected: usize = rs.components.iter().map(|c| c.ty.num_roots()).sum();
        if expected != rs.roots.len() {
            return Err(RootSystemError::InvalidCartan(format!(
                "closure produced {} roots, expected {expected}",
                rs.roots.len()
            )));
        }
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// The type this system was built from, if built by series and rank.
    pub fn declared_type(&self) -> Option<CartanType> {
        self.declared
    }

    pub fn series(&self) -> Option<Series> {
        self.declared.map(|t| t.series)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the invariant form on simple roots (shortest roots in
    /// each component have squared length 2).
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negative(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Index of the `i`-th simple root.
    pub fn simple(&self, i: usize) -> usize {
        self.simple_idx[i]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn try_index_of(&self, v: &[i64]) -> Result<usize, RootSystemError> {
        self.index_of(v).ok_or_else(|| RootSystemError::NotARoot(v.to_vec()))
    }

    pub fn check_index(&self, i: usize) -> Result<(), RootSystemError> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(RootSystemError::IndexOutOfRange { index: i, len: self.roots.len() })
        }
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// Invariant form `(a, b)` of two lattice vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                s += x * self.form[i][j] * y;
            }
        }
        s
    }

    /// `<a, b^vee> = 2(a,b)/(b,b)`; exact for roots `b`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.inner(b, b)
    }

    /// `<root_i, root_j^vee>`.
    pub fn cartan_integer(&self, i: usize, j: usize) -> i64 {
        self.pairing(&self.roots[i], &self.roots[j])
    }

    /// Pairing of a vector with the simple coroot `alpha_i^vee`.
    pub fn pair_simple_coroot(&self, a: &[i64], i: usize) -> i64 {
        a.iter().enumerate().map(|(j, &x)| x * self.cartan[j][i]).sum()
    }

    /// Coroot of a root expressed in the simple-coroot basis.
    pub fn coroot(&self, i: usize) -> Vec<i64> {
        let b = &self.roots[i];
        let bb = self.inner(b, b);
        b.iter()
            .enumerate()
            .map(|(k, &x)| x * self.form[k][k] / bb)
            .collect()
    }

    /// Squared length of the simple root `alpha_i` under [`RootSystem::form`].
    pub fn simple_length(&self, i: usize) -> i64 {
        self.form[i][i]
    }

    /// Applies `s_root` to the vector `v`.
    pub fn reflect_vector(&self, v: &[i64], root: usize) -> Vec<i64> {
        let r = &self.roots[root];
        let c = self.pairing(v, r);
        v.iter().zip(r).map(|(a, b)| a - c * b).collect()
    }

    pub(crate) fn reflection_perm(&self, root: usize) -> Vec<u16> {
        (0..self.roots.len())
            .map(|m| {
                let img = self.reflect_vector(&self.roots[m], root);
                self.index[&img] as u16
            })
            .collect()
    }

    pub(crate) fn simple_reflection_perm(&self, i: usize) -> &[u16] {
        &self.simple_reflections[i]
    }

    /// Highest root of each component (by component order).
    pub fn highest_roots(&self) -> Vec<Vec<i64>> {
        self.components
            .iter()
            .map(|c| {
                (0..self.npos)
                    .filter(|&i| {
                        let r = &self.roots[i];
                        (0..self.rank()).all(|k| r[k] == 0 || c.nodes.contains(&k))
                    })
                    .max_by_key(|&i| self.height(i))
                    .map(|i| self.roots[i].clone())
                    .unwrap_or_default()
            })
            .collect()
    }

    /// Predicted Weyl group order from the classified components.
    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.ty.weyl_order()).product()
    }

    /// Order of the fundamental group `P/Q`, i.e. `|det C|`.
    pub fn fundamental_group(&self) -> FiniteAbelianGroup {
        let n = self.rank();
        let sub: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| self.cartan[i][j]).collect()).collect();
        let full: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        lattice_quotient(&full, &sub).expect("Cartan matrix is nonsingular")
    }

    /// Short type string such as `"A1xB2"`.
    pub fn type_string(&self) -> String {
        let mut tys: Vec<CartanType> = self.components.iter().map(|c| c.ty).collect();
        tys.sort();
        tys.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
    }
}

/// Squared lengths of simple roots making `d_j * c[i][j]` symmetric, with the
/// shortest root in each component of length 2.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>, RootSystemError> {
    let n = cartan.len();
    // rational (num, den) per node
    let mut val: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for start in 0..n {
        if val[start].is_some() {
            continue;
        }
        val[start] = Some((1, 1));
        comp[start] = ncomp;
        let mut stack = vec![start];
        while let Some(j) = stack.pop() {
            let (nj, dj) = val[j].unwrap();
            for i in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                // c_ij d_j = c_ji d_i
                let num = cartan[i][j] * nj;
                let den = cartan[j][i] * dj;
                let g = gcd(num, den);
                let cand = (num / g * den.signum(), (den / g).abs());
                match val[i] {
                    None => {
                        val[i] = Some(cand);
                        comp[i] = ncomp;
                        stack.push(i);
                    }
                    Some(v) if v.0 * cand.1 != v.1 * cand.0 => {
                        return Err(RootSystemError::InvalidCartan("not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
        ncomp += 1;
    }
    let mut out = vec![0; n];
    for c in 0..ncomp {
        let nodes: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        let l = nodes.iter().fold(1, |acc, &i| lcm(acc, val[i].unwrap().1));
        let ints: Vec<i64> = nodes.iter().map(|&i| val[i].unwrap().0 * (l / val[i].unwrap().1)).collect();
        let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
        for (k, &i) in nodes.iter().enumerate() {
            out[i] = 2 * ints[k] / g;
        }
    }
    Ok(out)
}

fn positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let n = cartan.len();
    let mut found: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
    let mut head = 0;
    while head < found.len() {
        let beta = found[head].clone();
        head += 1;
        for i in 0..n {
            let c: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            if c >= 0 {
                continue;
            }
            let mut gamma = beta.clone();
            gamma[i] -= c;
            if seen.insert(gamma.clone()) {
                found.push(gamma);
                if found.len() > 100_000 {
                    return Err(RootSystemError::InvalidCartan("root closure does not terminate".into()));
                }
            }
        }
    }
    found.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    Ok(found)
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_match_formulas() {
        for s in Series::ALL {
            for rank in 1..=8 {
                if let Ok(ty) = CartanType::new(s, rank) {
                    let rs = build_root_system(s, rank).unwrap();
                    assert_eq!(rs.num_roots(), ty.num_roots(), "{ty}");
                    assert_eq!(rs.components().len(), 1);
                    assert_eq!(rs.components()[0].ty, ty.canonical(), "{ty}");
                }
            }
        }
    }

    #[test]
    fn a2_has_six_roots() {
        let rs = build_root_system(Series::A, 2).unwrap();
        assert_eq!(rs.num_roots(), 6);
        assert_eq!(rs.root(2), &[1, 1]);
    }

    #[test]
    fn g2_roots_and_lengths() {
        let rs = build_root_system(Series::G, 2).unwrap();
        assert_eq!(rs.num_roots(), 12);
        assert_eq!(rs.num_positive(), 6);
        assert_eq!(rs.simple_length(0), 2);
        assert_eq!(rs.simple_length(1), 6);
        assert_eq!(rs.highest_roots(), vec![vec![3, 2]]);
    }

    #[test]
    fn a1_roots() {
        let rs = build_root_system(Series::A, 1).unwrap();
        assert_eq!(rs.roots(), &[vec![1], vec![-1]]);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_system(Series::E, 5).is_err());
        assert!(build_root_system(Series::G, 3).is_err());
        assert!(build_root_system(Series::B, 1).is_err());
        assert!(build_root_system(Series::A, 0).is_err());
    }

    #[test]
    fn coroots_of_b2() {
        let rs = build_root_system(Series::B, 2).unwrap();
        // alpha_1 long, alpha_2 short: (alpha_1 + 2 alpha_2)^vee = alpha_1^vee + alpha_2^vee
        let i = rs.index_of(&[1, 2]).unwrap();
        assert_eq!(rs.coroot(i), vec![1, 1]);
        let j = rs.index_of(&[1, 1]).unwrap();
        assert_eq!(rs.coroot(j), vec![2, 1]);
    }

    #[test]
    fn fundamental_groups() {
        let order = |s, r| build_root_system(s, r).unwrap().fundamental_group().order();
        assert_eq!(order(Series::A, 4), 5);
        assert_eq!(order(Series::E, 6), 3);
        assert_eq!(order(Series::E, 8), 1);
        let d4 = build_root_system(Series::D, 4).unwrap().fundamental_group();
        assert_eq!(d4.invariant_factors(), &[2, 2]);
        let d5 = build_root_system(Series::D, 5).unwrap().fundamental_group();
        assert_eq!(d5.invariant_factors(), &[4]);
    }
}
