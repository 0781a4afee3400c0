//! Restricted roots of a Satake involution.
//!
//! A root `beta` restricts to `A` as `(beta - theta*(beta)) / 2`. We store the
//! doubled vector `beta - theta*(beta)` in ambient simple-root coordinates, and
//! also its coordinates over the basis `Pi` of restricted simple roots, which
//! are integral: the coordinate on a class `{alpha, psi(alpha)}` is the sum of
//! the coefficients of `beta` on that class.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{
    enumerate_weyl, length_counts, CartanType, RootSystem, RootSystemError, Series, WeylEnumeration,
};
use crate::satake::SatakeInvolution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RestrictedError {
    #[error("no simple root of Delta \\ I restricts to Pi element {0}")]
    LiftNotFound(usize),
    #[error("Pi has {len} elements, index {index} is out of range")]
    NotInPi { index: usize, len: usize },
    #[error("root {0:?} lies outside Phi_I but has zero restriction")]
    ZeroRestriction(Vec<i64>),
    #[error("unexpected pair beta, theta*(beta) with <beta, theta*(beta)^vee> = {0}")]
    UnexpectedPair(i64),
    #[error("restricted roots do not form a root system: {0}")]
    NotARootSystem(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// One element of `Phi_A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRoot {
    /// `beta - theta*(beta)` in ambient simple-root coordinates.
    pub doubled: Vec<i64>,
    /// Coordinates over `Pi`.
    pub coords: Vec<i64>,
    pub multiplicity: usize,
}

/// A simple factor of `Phi_A`, with `bc` set when it is non-reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedComponent {
    pub reduced: CartanType,
    pub bc: bool,
}

impl std::fmt::Display for RestrictedComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.bc {
            write!(f, "BC{}", self.reduced.rank)
        } else {
            write!(f, "{}", self.reduced.canonical())
        }
    }
}

#[derive(Debug, Clone)]
pub struct RestrictedRootSystem {
    roots: Vec<RestrictedRoot>,
    index: HashMap<Vec<i64>, usize>,
    // Pi as indices into roots, ordered by their smallest lift
    basis_pi: Vec<usize>,
    lifts: Vec<Vec<usize>>,
    class_of: Vec<Option<usize>>,
    gram: Vec<Vec<i64>>,
    reduced_roots: Vec<usize>,
    reduced: Option<Arc<RootSystem>>,
    components: Vec<RestrictedComponent>,
    r: usize,
}

/// Builds `Phi_A` with multiplicities, `Pi` and `Phi_A^*`.
pub fn restrict(inv: &SatakeInvolution) -> Result<RestrictedRootSystem, RestrictedError> {
    let rs = inv.ambient();
    let n = rs.rank();

    // classes of Delta \ I under psi
    let mut class_of = vec![None; n];
    let mut lifts: Vec<Vec<usize>> = Vec::new();
    for k in 0..n {
        if inv.is_compact(k) || class_of[k].is_some() {
            continue;
        }
        let mut class = vec![k];
        let pk = inv.psi()[k];
        if pk != k && !inv.is_compact(pk) {
            class.push(pk);
        }
        // distinct simple roots may restrict identically only when psi pairs them
        for &j in &class {
            class_of[j] = Some(lifts.len());
        }
        lifts.push(class);
    }
    let r = lifts.len();

    let mut roots: Vec<RestrictedRoot> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    for b in rs.roots() {
        let t = inv.theta_vector(b);
        let doubled: Vec<i64> = b.iter().zip(&t).map(|(x, y)| x - y).collect();
        let in_phi_i = b.iter().enumerate().all(|(k, &c)| c == 0 || inv.is_compact(k));
        if in_phi_i {
            continue;
        }
        if doubled.iter().all(|&x| x == 0) {
            return Err(RestrictedError::ZeroRestriction(b.clone()));
        }
        let mut coords = vec![0; r];
        for (k, &c) in b.iter().enumerate() {
            if let Some(j) = class_of[k] {
                coords[j] += c;
            }
        }
        match index.get(&coords) {
            Some(&i) => {
                debug_assert_eq!(roots[i].doubled, doubled);
                roots[i].multiplicity += 1;
            }
            None => {
                index.insert(coords.clone(), roots.len());
                roots.push(RestrictedRoot { doubled, coords, multiplicity: 1 });
            }
        }
    }
    // positive roots first, by height then lexicographically
    let key = |c: &[i64]| {
        let h: i64 = c.iter().sum();
        (h <= 0, h.abs(), if h > 0 { c.to_vec() } else { c.iter().map(|x| -x).collect() })
    };
    roots.sort_by(|a, b| key(&a.coords).cmp(&key(&b.coords)));
    let index: HashMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, x)| (x.coords.clone(), i)).collect();

    let basis_pi: Vec<usize> = (0..r)
        .map(|j| {
            let unit: Vec<i64> = (0..r).map(|k| i64::from(j == k)).collect();
            index.get(&unit).copied().ok_or(RestrictedError::LiftNotFound(j))
        })
        .collect::<Result<_, _>>()?;
    let gram: Vec<Vec<i64>> = basis_pi
        .iter()
        .map(|&a| basis_pi.iter().map(|&b| rs.inner(&roots[a].doubled, &roots[b].doubled)).collect())
        .collect();

    let reduced_roots: Vec<usize> = (0..roots.len())
        .filter(|&i| {
            let c = &roots[i].coords;
            !(c.iter().all(|x| x % 2 == 0) && index.contains_key(&c.iter().map(|x| x / 2).collect::<Vec<_>>()))
        })
        .collect();

    let mut out = RestrictedRootSystem {
        roots,
        index,
        basis_pi,
        lifts,
        class_of,
        gram,
        reduced_roots,
        reduced: None,
        components: Vec::new(),
        r,
    };
    out.check_root_system()?;
    if r > 0 {
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| 2 * out.gram[i][j] / out.gram[j][j]).collect())
            .collect();
        let red = RootSystem::from_cartan(cartan)?;
        let mut expected: Vec<&[i64]> = out.reduced_roots.iter().map(|&i| out.roots[i].coords.as_slice()).collect();
        let mut got: Vec<&[i64]> = red.roots().iter().map(|v| v.as_slice()).collect();
        expected.sort();
        got.sort();
        if expected != got {
            return Err(RestrictedError::NotARootSystem(
                "Phi_A^* differs from the system generated by Pi".into(),
            ));
        }
        out.components = red
            .components()
            .iter()
            .map(|c| {
                let bc = out.roots.iter().any(|x| {
                    x.coords.iter().enumerate().all(|(k, &v)| v == 0 || c.nodes.contains(&k))
                        && out.index.contains_key(&x.coords.iter().map(|v| 2 * v).collect::<Vec<_>>())
                });
                RestrictedComponent { reduced: c.ty, bc }
            })
            .collect();
        out.reduced = Some(Arc::new(red));
    }
    Ok(out)
}

impl RestrictedRootSystem {
    /// `(mu, lambda)` for vectors in `Pi` coordinates.
    fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                s += x * self.gram[i][j] * y;
            }
        }
        s
    }

    /// Closure under reflections, integral Cartan numbers and `3 alpha` exclusion.
    fn check_root_system(&self) -> Result<(), RestrictedError> {
        for a in &self.roots {
            let neg: Vec<i64> = a.coords.iter().map(|x| -x).collect();
            if !self.index.contains_key(&neg) {
                return Err(RestrictedError::NotARootSystem(format!("{:?} has no negative", a.coords)));
            }
            let aa = self.inner(&a.coords, &a.coords);
            for b in &self.roots {
                let ab = 2 * self.inner(&b.coords, &a.coords);
                if ab % aa != 0 {
                    return Err(RestrictedError::NotARootSystem(format!(
                        "non-integral pairing of {:?} with {:?}",
                        b.coords, a.coords
                    )));
                }
                let c = ab / aa;
                let img: Vec<i64> = b.coords.iter().zip(&a.coords).map(|(x, y)| x - c * y).collect();
                if !self.index.contains_key(&img) {
                    return Err(RestrictedError::NotARootSystem(format!(
                        "not closed under the reflection in {:?}",
                        a.coords
                    )));
                }
            }
        }
        if let Some(a) = self.roots.iter().find(|a| self.contains(&a.coords.iter().map(|x| 3 * x).collect::<Vec<_>>())) {
            return Err(RestrictedError::NotARootSystem(format!("3 * {:?} is a restricted root", a.coords)));
        }
        Ok(())
    }

    /// `dim A`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Rank of `Phi_A^*`.
    pub fn r0(&self) -> usize {
        self.reduced.as_ref().map_or(0, |x| x.rank())
    }

    pub fn roots(&self) -> &[RestrictedRoot] {
        &self.roots
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// `Pi` as indices into [`RestrictedRootSystem::roots`].
    pub fn basis_pi(&self) -> &[usize] {
        &self.basis_pi
    }

    /// Simple roots of `Delta \ I` restricting to the `j`-th element of `Pi`.
    pub fn lifts(&self, j: usize) -> &[usize] {
        &self.lifts[j]
    }

    /// Position in `Pi` of the restriction of the simple root `alpha_k`.
    pub fn pi_class(&self, k: usize) -> Option<usize> {
        self.class_of[k]
    }

    /// Indices of the roots of `Phi_A^*`.
    pub fn reduced_roots(&self) -> &[usize] {
        &self.reduced_roots
    }

    /// `Phi_A^*` as a root system in `Pi` coordinates.
    pub fn reduced_system(&self) -> Option<&RootSystem> {
        self.reduced.as_deref()
    }

    pub fn components(&self) -> &[RestrictedComponent] {
        &self.components
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| !c.bc)
    }

    /// Type of `Phi_A` such as `BC2` or `A1xA1`; `"0"` when `A` is trivial.
    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<(CartanType, bool)> =
            self.components.iter().map(|c| (c.reduced.canonical(), c.bc)).collect();
        parts.sort();
        parts
            .iter()
            .map(|&(reduced, bc)| RestrictedComponent { reduced, bc }.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Type of `Phi_A^*`.
    pub fn reduced_type_string(&self) -> String {
        self.reduced.as_ref().map_or_else(|| "0".into(), |x| x.type_string())
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.roots.iter().map(|x| x.multiplicity).sum()
    }

    /// Multiplicities of positive restricted roots keyed by `Pi` coordinates.
    pub fn multiplicities(&self) -> BTreeMap<Vec<i64>, usize> {
        self.roots
            .iter()
            .filter(|x| x.coords.iter().sum::<i64>() > 0)
            .map(|x| (x.coords.clone(), x.multiplicity))
            .collect()
    }

    /// Cartan matrix of `Pi`, `c[i][j] = <pi_i, pi_j^vee>`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        self.reduced.as_ref().map_or_else(Vec::new, |x| x.cartan().to_vec())
    }

    /// Predicted `|W_A|`.
    pub fn weyl_order(&self) -> u128 {
        self.reduced.as_ref().map_or(1, |x| x.weyl_order())
    }
}

/// `W_A` as the Weyl group of `Phi_A^*` with length relative to `Pi`.
#[derive(Debug, Clone)]
pub struct BabyWeyl {
    system: Option<Arc<RootSystem>>,
    cap: u128,
}

/// Checks the cap against the predicted order of `W_A`.
pub fn baby_weyl(rrs: &RestrictedRootSystem, order_cap: u128) -> Result<BabyWeyl, RestrictedError> {
    let predicted = rrs.weyl_order();
    if predicted > order_cap {
        return Err(RootSystemError::CapExceeded { predicted, cap: order_cap }.into());
    }
    Ok(BabyWeyl { system: rrs.reduced.clone(), cap: order_cap })
}

impl BabyWeyl {
    pub fn order(&self) -> u128 {
        self.system.as_ref().map_or(1, |x| x.weyl_order())
    }

    /// The reflection representation, `None` for trivial `A`.
    pub fn system(&self) -> Option<&RootSystem> {
        self.system.as_deref()
    }

    /// Number of elements of each length.
    pub fn length_counts(&self) -> Result<Vec<u64>, RestrictedError> {
        match &self.system {
            None => Ok(vec![1]),
            Some(rs) => Ok(length_counts(rs, self.cap)?),
        }
    }

    pub fn elements(&self) -> Option<Result<WeylEnumeration<'_>, RestrictedError>> {
        self.system.as_deref().map(|rs| enumerate_weyl(rs, self.cap).map_err(Into::into))
    }
}

/// Result of [`check_p_good`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGoodCheck {
    pub good: bool,
    pub witness: Option<String>,
    pub three_alpha_excluded: bool,
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Whether `p` exceeds every highest-root coefficient of `Phi_A^*`.
pub fn check_p_good(rrs: &RestrictedRootSystem, p: u64) -> PGoodCheck {
    let three_alpha_excluded = rrs
        .roots
        .iter()
        .all(|a| !rrs.contains(&a.coords.iter().map(|x| 3 * x).collect::<Vec<_>>()));
    let mut witness = None;
    if p <= 2 || !is_prime(p) {
        witness = Some(format!("{p} is not an odd prime"));
    } else if let Some(red) = rrs.reduced_system() {
        for h in red.highest_roots() {
            if let Some((k, &c)) = h.iter().enumerate().find(|&(_, &c)| c as u64 >= p) {
                witness = Some(format!("highest root {h:?} has coefficient {c} at position {}", k + 1));
                break;
            }
        }
    }
    PGoodCheck { good: witness.is_none(), witness, three_alpha_excluded }
}

/// Which formula produced `omega_alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OmegaCase {
    /// `theta*(beta) = -beta`
    I,
    /// `beta` orthogonal to `theta*(beta)`
    II,
    /// `beta` and `-theta*(beta)` span an `A2`
    III,
}

/// A cocharacter of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedCocharacter {
    /// Coefficients on the ambient simple coroots.
    pub coroot_coords: Vec<i64>,
    /// `<alpha_k, .>` for every ambient simple root, i.e. fundamental-coweight coordinates.
    pub coords: Vec<i64>,
    /// `<pi_j, .>` for every element of `Pi`, evaluated on a lift.
    pub pairings: Vec<i64>,
}

impl RestrictedCocharacter {
    pub(crate) fn from_coroot_coords(rs: &RootSystem, rrs: &RestrictedRootSystem, coroot_coords: Vec<i64>) -> Self {
        let n = rs.rank();
        let coords: Vec<i64> = (0..n)
            .map(|k| (0..n).map(|j| coroot_coords[j] * rs.cartan()[k][j]).sum())
            .collect();
        let pairings = (0..rrs.r()).map(|j| coords[rrs.lifts(j)[0]]).collect();
        RestrictedCocharacter { coroot_coords, coords, pairings }
    }

    /// `<beta, .>` for a vector in ambient simple-root coordinates.
    pub fn pair(&self, beta: &[i64]) -> i64 {
        beta.iter().zip(&self.coords).map(|(a, b)| a * b).sum()
    }
}

/// `omega_alpha` for the `j`-th element of `Pi`, with its case.
pub fn omega_alpha(
    inv: &SatakeInvolution,
    rrs: &RestrictedRootSystem,
    j: usize,
) -> Result<(RestrictedCocharacter, OmegaCase), RestrictedError> {
    let rs = inv.ambient();
    let n = rs.rank();
    if j >= rrs.r() {
        return Err(RestrictedError::NotInPi { index: j, len: rrs.r() });
    }
    let k = *rrs.lifts(j).first().ok_or(RestrictedError::LiftNotFound(j))?;
    let beta = rs.simple(k);
    let t = inv.theta_star(beta).map_err(|_| RestrictedError::LiftNotFound(j))?;
    let beta_vee = rs.coroot(beta);
    let t_vee = rs.coroot(t);
    let (coroot_coords, case) = if t == rs.negative(beta) {
        (beta_vee, OmegaCase::I)
    } else {
        let diff: Vec<i64> = beta_vee.iter().zip(&t_vee).map(|(a, b)| a - b).collect();
        match rs.cartan_integer(beta, t) {
            0 => (diff, OmegaCase::II),
            1 => (diff.iter().map(|x| 2 * x).collect(), OmegaCase::III),
            c => return Err(RestrictedError::UnexpectedPair(c)),
        }
    };
    let omega = RestrictedCocharacter::from_coroot_coords(rs, rrs, coroot_coords);
    debug_assert!((0..n).filter(|&i| inv.is_compact(i)).all(|i| omega.coords[i] == 0));
    debug_assert_eq!(omega.coords[k], 2);
    Ok((omega, case))
}

/// Convenience: the restricted system of the split form of a simple type.
pub fn split_restricted(series: Series, rank: usize) -> Result<RestrictedRootSystem, RestrictedError> {
    let rs = Arc::new(crate::rootsys::build_root_system(series, rank)?);
    restrict(&SatakeInvolution::split(rs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DEFAULT_ORDER_CAP;
    use crate::satake::{catalog_all, catalog_lookup};

    #[test]
    fn split_is_identity_up_to_doubling() {
        let rrs = split_restricted(Series::G, 2).unwrap();
        assert_eq!(rrs.roots().len(), 12);
        assert!(rrs.roots().iter().all(|x| x.multiplicity == 1));
        for x in rrs.roots() {
            let c: Vec<i64> = x.coords.iter().map(|v| 2 * v).collect();
            assert_eq!(x.doubled, c);
        }
        assert_eq!(rrs.type_string(), "G2");
    }

    #[test]
    fn e7_evii_is_c3() {
        let e = catalog_lookup(Series::E, 7, "EVII").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        assert_eq!(rrs.type_string(), "C3");
        assert_eq!(baby_weyl(&rrs, DEFAULT_ORDER_CAP).unwrap().order(), 48);
    }

    #[test]
    fn quasi_split_a_odd_is_c() {
        let e = catalog_lookup(Series::A, 5, "AIII(3,3)").unwrap();
        assert_eq!(restrict(&e.satake).unwrap().type_string(), "C3");
    }

    #[test]
    fn catalog_types_match() {
        for e in catalog_all(8).unwrap() {
            let rrs = restrict(&e.satake).unwrap();
            assert_eq!(rrs.type_string(), e.expected_phi_a, "{} {}", e.type_name(), e.label);
            let rs = e.satake.ambient();
            assert_eq!(rrs.multiplicity_sum(), rs.num_roots() - e.satake.compact_roots().len());
            assert_eq!(rrs.r(), e.satake.kp_dimensions().a);
        }
    }

    #[test]
    fn p_good() {
        let g2 = split_restricted(Series::G, 2).unwrap();
        assert!(check_p_good(&g2, 5).good);
        let w = check_p_good(&g2, 3);
        assert!(!w.good && w.witness.unwrap().contains('3'));
        assert!(check_p_good(&split_restricted(Series::A, 4).unwrap(), 3).good);
        assert!(!check_p_good(&g2, 9).good);
    }

    #[test]
    fn omega_cases() {
        let e = catalog_lookup(Series::A, 4, "AIII(2,3)").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        let cases: Vec<OmegaCase> = (0..rrs.r()).map(|j| omega_alpha(&e.satake, &rrs, j).unwrap().1).collect();
        assert_eq!(cases.iter().filter(|&&c| c == OmegaCase::III).count(), 1);
        let g = SatakeInvolution::split(Arc::new(crate::rootsys::build_root_system(Series::G, 2).unwrap()));
        let rrs = restrict(&g).unwrap();
        for j in 0..2 {
            let (w, c) = omega_alpha(&g, &rrs, j).unwrap();
            assert_eq!(c, OmegaCase::I);
            let mut unit = vec![0; 2];
            unit[j] = 1;
            assert_eq!(w.coroot_coords, unit);
        }
        assert!(matches!(omega_alpha(&g, &rrs, 5), Err(RestrictedError::NotInPi { .. })));
    }

    #[test]
    fn omega_pairings_are_cartan_integers() {
        for e in catalog_all(8).unwrap() {
            let rrs = restrict(&e.satake).unwrap();
            let cartan = rrs.cartan();
            let mut case3 = 0;
            for i in 0..rrs.r() {
                let (w, c) = omega_alpha(&e.satake, &rrs, i).unwrap();
                case3 += usize::from(c == OmegaCase::III);
                for j in 0..rrs.r() {
                    assert_eq!(w.pairings[j], cartan[j][i], "{} {} {i} {j}", e.type_name(), e.label);
                }
            }
            assert!(case3 <= 1);
        }
    }
}
