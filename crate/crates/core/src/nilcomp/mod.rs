//! The regular cocharacter `omega`, the groups `Z`, `Z ∩ A`, `tau(Z)` and
//! the number of irreducible components of the nilpotent cone of `p`.
//!
//! Centre computations happen in fundamental-coweight coordinates: the
//! centre of the simply-connected group is `P^vee / Q^vee` and an element `x`
//! of `P^vee` lies in `A` (modulo `Q^vee`) when `(1 + theta) x` lies in
//! `(1 + theta) Q^vee`.

mod w0;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::restricted::{omega_alpha, OmegaCase, RestrictedCocharacter, RestrictedError, RestrictedRootSystem};
use crate::rootsys::{
    lattice_contains, lattice_quotient, smith_normal_form, solve_in_lattice, CartanType, FiniteAbelianGroup,
    LatticeError, RootSystem, Series,
};
use crate::satake::{catalog_list, Isogeny, SatakeInvolution};

pub use w0::{builtin_decompositions, verify_w0_decomposition, OrthogonalDecomposition, W0Report, W0Target};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilcompError {
    #[error("centre computations need a simply-connected ambient group")]
    NotSimplyConnected,
    #[error("ambient root system is not simple")]
    NotSimple,
    #[error("omega with diagram {0:?} is not in the coroot lattice")]
    NotIntegral(Vec<u8>),
    #[error("omega is not theta-split at simple root {0}")]
    NotThetaSplit(usize),
    #[error("omega pairs to {value} with Pi element {index}")]
    PiPairing { index: usize, value: i64 },
    #[error("|Z ∩ A| = {computed} but |Z(Phi_A^*)| / 2^i = {predicted}")]
    OrderMismatch { computed: u64, predicted: String },
    #[error("tau(Z) is not contained in Z ∩ A")]
    TauNotInZCapA,
    #[error("no rule determines the component count for {0}")]
    NotCovered(String),
    #[error(transparent)]
    Restricted(#[from] RestrictedError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Weights on the simple roots in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDiagram {
    pub ty: Option<CartanType>,
    pub weights: Vec<u8>,
}

impl WeightedDiagram {
    /// 0 on `I`, 2 elsewhere.
    pub fn from_satake(inv: &SatakeInvolution) -> Self {
        let rs = inv.ambient();
        WeightedDiagram {
            ty: rs.declared_type(),
            weights: (0..rs.rank()).map(|i| if inv.is_compact(i) { 0 } else { 2 }).collect(),
        }
    }

    pub fn new(ty: Option<CartanType>, weights: Vec<u8>) -> Self {
        WeightedDiagram { ty, weights }
    }

    /// `<beta, lambda>` for `beta` in simple-root coordinates.
    pub fn pair(&self, beta: &[i64]) -> i64 {
        beta.iter().zip(&self.weights).map(|(&b, &w)| b * i64::from(w)).sum()
    }
}

impl fmt::Display for WeightedDiagram {
    /// Type `E` puts `alpha_2` after a slash: `2 2 2 0 2 0 / 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|x| x.to_string()).collect();
        match self.ty {
            Some(CartanType { series: Series::E, .. }) if w.len() >= 2 => {
                let top: Vec<&str> =
                    w.iter().enumerate().filter(|&(i, _)| i != 1).map(|(_, s)| s.as_str()).collect();
                write!(f, "{} / {}", top.join(" "), w[1])
            }
            _ => write!(f, "{}", w.join(" ")),
        }
    }
}

/// The cocharacter `omega` with `<alpha, omega> = 2` on `Pi`, and its diagram.
pub fn omega(
    inv: &SatakeInvolution,
    rrs: &RestrictedRootSystem,
) -> Result<(RestrictedCocharacter, WeightedDiagram), NilcompError> {
    let rs = inv.ambient();
    let n = rs.rank();
    let diagram = WeightedDiagram::from_satake(inv);
    let h: Vec<i64> = diagram.weights.iter().map(|&w| i64::from(w)).collect();
    let coroot_coords =
        solve_in_lattice(&coroot_generators(rs), &h).ok_or_else(|| NilcompError::NotIntegral(diagram.weights.clone()))?;
    let om = RestrictedCocharacter::from_coroot_coords(rs, rrs, coroot_coords);
    debug_assert_eq!(om.coords, h);
    let theta = inv.theta_matrix();
    for (i, t) in theta.iter().enumerate().take(n) {
        if om.pair(t) != -h[i] {
            return Err(NilcompError::NotThetaSplit(i));
        }
    }
    if let Some((index, &value)) = om.pairings.iter().enumerate().find(|&(_, &v)| v != 2) {
        return Err(NilcompError::PiPairing { index, value });
    }
    Ok((om, diagram))
}

/// Simple coroots in fundamental-coweight coordinates.
fn coroot_generators(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    (0..n).map(|j| (0..n).map(|i| rs.cartan()[i][j]).collect()).collect()
}

/// Finite groups attached to the centre.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentreData {
    pub z: FiniteAbelianGroup,
    pub z_cap_a: FiniteAbelianGroup,
    pub tau_z: FiniteAbelianGroup,
    /// `(Z ∩ A) / tau(Z)`.
    pub z_cap_a_mod_tau: FiniteAbelianGroup,
    /// Number of elements of `Pi` of case (iii).
    pub case_iii: usize,
}

/// `Z ∩ A` and `tau(Z)` from the coweight lattice, with `|Z ∩ A|` checked
/// against `|Z(Phi_A^*)| / 2^i`.
pub fn centre_data(inv: &SatakeInvolution, rrs: &RestrictedRootSystem) -> Result<CentreData, NilcompError> {
    if inv.isogeny() != Isogeny::SimplyConnected {
        return Err(NilcompError::NotSimplyConnected);
    }
    let rs = inv.ambient();
    let n = rs.rank();
    let theta = inv.theta_matrix();
    // (T x)_i = <theta*(alpha_i), x>
    let t = |x: &[i64]| -> Vec<i64> { (0..n).map(|i| theta[i].iter().zip(x).map(|(a, b)| a * b).sum()).collect() };
    let add = |a: &[i64], b: &[i64], s: i64| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + s * y).collect() };

    let qv = coroot_generators(rs);
    // columns of the Cartan matrix generate Q^vee
    let snf = smith_normal_form(rs.cartan());
    let gens: Vec<Vec<i64>> = (0..n)
        .filter(|&i| snf.diagonal[i] > 1)
        .map(|i| (0..n).map(|k| snf.u_inv[k][i]).collect())
        .collect();
    let orders: Vec<i64> = snf.diagonal.iter().copied().filter(|&d| d > 1).collect();

    // every element of P^vee / Q^vee
    let mut elements: Vec<Vec<i64>> = vec![vec![0; n]];
    for (g, &d) in gens.iter().zip(&orders) {
        let mut next = Vec::with_capacity(elements.len() * d as usize);
        for e in &elements {
            for k in 0..d {
                next.push(add(e, g, k));
            }
        }
        elements = next;
    }
    let one_plus_t_q: Vec<Vec<i64>> = qv.iter().map(|q| add(q, &t(q), 1)).collect();
    let members: Vec<Vec<i64>> = elements
        .into_iter()
        .filter(|x| lattice_contains(&one_plus_t_q, &add(x, &t(x), 1)))
        .collect();
    let tau_reps: Vec<Vec<i64>> = gens.iter().map(|g| add(&t(g), g, -1)).collect();

    let with = |extra: &[Vec<i64>]| -> Vec<Vec<i64>> { qv.iter().chain(extra).cloned().collect() };
    let z = rs.fundamental_group();
    let z_cap_a = lattice_quotient(&with(&members), &qv)?;
    let tau_z = lattice_quotient(&with(&tau_reps), &qv)?;
    let z_cap_a_mod_tau =
        lattice_quotient(&with(&members), &with(&tau_reps)).map_err(|_| NilcompError::TauNotInZCapA)?;

    let mut case_iii = 0;
    for j in 0..rrs.r() {
        if omega_alpha(inv, rrs, j)?.1 == OmegaCase::III {
            case_iii += 1;
        }
    }
    let det = rrs.reduced_system().map_or(1, |x| x.fundamental_group().order());
    if z_cap_a.order() << case_iii != det {
        return Err(NilcompError::OrderMismatch {
            computed: z_cap_a.order(),
            predicted: format!("{det}/2^{case_iii}"),
        });
    }
    Ok(CentreData { z, z_cap_a, tau_z, z_cap_a_mod_tau, case_iii })
}

/// `(Z ∩ A, (Z ∩ A) / (Z ∩ A)^2)`.
pub fn z_cap_a(
    inv: &SatakeInvolution,
    rrs: &RestrictedRootSystem,
) -> Result<(FiniteAbelianGroup, FiniteAbelianGroup), NilcompError> {
    let c = centre_data(inv, rrs)?;
    let sq = c.z_cap_a.quotient_by_squares();
    Ok((c.z_cap_a, sq))
}

/// `(Z ∩ A) / tau(Z)`.
pub fn tau(inv: &SatakeInvolution, rrs: &RestrictedRootSystem) -> Result<FiniteAbelianGroup, NilcompError> {
    Ok(centre_data(inv, rrs)?.z_cap_a_mod_tau)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    SplitFormula,
    QuasiSplitFormula,
    CaseTable,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::SplitFormula => "split-formula",
            CountMethod::QuasiSplitFormula => "quasi-split-formula",
            CountMethod::CaseTable => "case-table",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub count: u64,
    pub method: CountMethod,
    pub z: FiniteAbelianGroup,
    pub z_mod_z2: FiniteAbelianGroup,
    pub z_cap_a: FiniteAbelianGroup,
    pub z_cap_a_mod_squares: FiniteAbelianGroup,
    pub tau_z_order: u64,
    pub notes: Vec<String>,
}

/// Facts about the reductive part `C` of the centraliser of a regular
/// nilpotent element of `p`, keyed by class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseFact {
    /// `C` lies in the identity component `K`.
    ReductivePartInK,
    /// `C` meets the non-identity component of `G^theta`, so `CK = G^theta`.
    ReductivePartMeetsOtherComponent { c: String },
    /// `tau(C) = Z ∩ A`.
    TauCIsZCapA,
    /// `C` is connected modulo `Z(G)`, so `tau(C) = tau(Z)`.
    ConnectedModCentre { orbit: String },
}

/// Looks up the tabulated fact for a catalog class.
pub fn case_fact(series: Series, rank: usize, label: &str) -> Option<CaseFact> {
    let param = label
        .find('(')
        .and_then(|i| label[i + 1..].trim_end_matches(')').split(',').next()?.parse::<usize>().ok());
    let n = rank;
    match (series, label.split('(').next()?) {
        (Series::B, "BI") => {
            let m = param?;
            if m >= n {
                None
            } else if m % 2 == 0 {
                Some(CaseFact::ReductivePartInK)
            } else {
                Some(CaseFact::ReductivePartMeetsOtherComponent { c: format!("O({})", 2 * n + 1 - m) })
            }
        }
        (Series::C, "CII") if label == format!("CII({},{})", n / 2, n / 2) && n % 2 == 0 => Some(CaseFact::TauCIsZCapA),
        (Series::D, "DI") => {
            let p = param?;
            (p % 2 == 0 && p + 2 <= n).then(|| CaseFact::ConnectedModCentre {
                orbit: format!("partition {}^1.1^{}", 2 * p - 1, 2 * n - 2 * p + 1),
            })
        }
        (Series::D, "DIII" | "DIII'") if n % 2 == 0 => {
            Some(CaseFact::ConnectedModCentre { orbit: format!("partition {n}^2") })
        }
        (Series::E, "EVII") if n == 7 => Some(CaseFact::ConnectedModCentre { orbit: "weighted diagram 2 0 0 0 2 2 / 0".into() }),
        _ => None,
    }
}

/// Catalog label of a Satake datum, if it matches an entry exactly.
pub fn identify_class(inv: &SatakeInvolution) -> Option<String> {
    let ty = inv.ambient().declared_type()?;
    catalog_list(ty.series, ty.rank)
        .ok()?
        .into_iter()
        .find(|e| e.satake.compact_set() == inv.compact_set() && e.satake.psi() == inv.psi())
        .map(|e| e.label)
}

/// Number of irreducible components of the nilpotent cone.
pub fn component_count(inv: &SatakeInvolution, rrs: &RestrictedRootSystem) -> Result<ComponentReport, NilcompError> {
    component_count_for(inv, rrs, identify_class(inv).as_deref())
}

/// As [`component_count`], with the class label supplied by the caller.
pub fn component_count_for(
    inv: &SatakeInvolution,
    rrs: &RestrictedRootSystem,
    label: Option<&str>,
) -> Result<ComponentReport, NilcompError> {
    let ty = inv.ambient().declared_type().ok_or(NilcompError::NotSimple)?;
    let c = centre_data(inv, rrs)?;
    let z_mod_z2 = c.z.quotient_by_squares();
    let sq = c.z_cap_a.quotient_by_squares();
    let mut notes = Vec::new();
    let (count, method) = if inv.is_split() {
        debug_assert_eq!(c.z_cap_a, c.z);
        notes.push("split: components correspond to Z/Z^2".to_string());
        (z_mod_z2.order(), CountMethod::SplitFormula)
    } else if inv.is_quasi_split() {
        notes.push("quasi-split: components correspond to (Z ∩ A)/tau(Z)".to_string());
        (c.z_cap_a_mod_tau.order(), CountMethod::QuasiSplitFormula)
    } else if sq.is_trivial() || c.z_cap_a_mod_tau.is_trivial() {
        let which = if sq.is_trivial() { "(Z ∩ A)/(Z ∩ A)^2" } else { "(Z ∩ A)/tau(Z)" };
        notes.push(format!("trivial bound: {which} is trivial"));
        (1, CountMethod::CaseTable)
    } else {
        let label = label.ok_or_else(|| NilcompError::NotCovered(format!("unlabelled involution of {ty}")))?;
        let fact =
            case_fact(ty.series, ty.rank, label).ok_or_else(|| NilcompError::NotCovered(format!("{ty} {label}")))?;
        let count = match &fact {
            CaseFact::ReductivePartInK => {
                notes.push("C is contained in K".into());
                c.z_cap_a_mod_tau.order()
            }
            CaseFact::ReductivePartMeetsOtherComponent { c } => {
                notes.push(format!("C = {c} meets both components of G^theta"));
                1
            }
            CaseFact::TauCIsZCapA => {
                notes.push("tau(C) = Z ∩ A".into());
                1
            }
            CaseFact::ConnectedModCentre { orbit } => {
                notes.push(format!("C connected modulo Z(G) ({orbit})"));
                c.z_cap_a_mod_tau.order()
            }
        };
        (count, CountMethod::CaseTable)
    };
    if ty.series == Series::A && label == Some("AI") {
        notes.push("count is for SL(n+1); GL(n+1) gives 2 components for every n".into());
    }
    if ty.series == Series::B && inv.is_split() && ty.rank % 2 == 1 {
        notes.push("split B_n with n odd: the even part exceeds the odd part, count from Z/Z^2".into());
    }
    debug_assert_eq!(sq.order() % count, 0);
    Ok(ComponentReport {
        count,
        method,
        z: c.z,
        z_mod_z2,
        z_cap_a: c.z_cap_a,
        z_cap_a_mod_squares: sq,
        tau_z_order: c.tau_z.order(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted::restrict;
    use crate::satake::{catalog_all, catalog_lookup};

    fn report(series: Series, rank: usize, label: &str) -> ComponentReport {
        let e = catalog_lookup(series, rank, label).unwrap();
        let rrs = restrict(&e.satake).unwrap();
        component_count(&e.satake, &rrs).unwrap()
    }

    #[test]
    fn evi_diagram() {
        let e = catalog_lookup(Series::E, 7, "EVI").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        let (_, d) = omega(&e.satake, &rrs).unwrap();
        assert_eq!(d.to_string(), "2 2 2 0 2 0 / 0");
    }

    #[test]
    fn bi_diagram() {
        let e = catalog_lookup(Series::B, 5, "BI(2)").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        assert_eq!(omega(&e.satake, &rrs).unwrap().1.to_string(), "2 2 0 0 0");
    }

    #[test]
    fn centres() {
        let e = catalog_lookup(Series::C, 3, "CI").unwrap();
        let (za, sq) = z_cap_a(&e.satake, &restrict(&e.satake).unwrap()).unwrap();
        assert_eq!((za.to_string(), sq.to_string()), ("Z/2".into(), "Z/2".into()));
        let e = catalog_lookup(Series::D, 4, "DI(4)").unwrap();
        let (za, sq) = z_cap_a(&e.satake, &restrict(&e.satake).unwrap()).unwrap();
        assert_eq!((za.to_string(), sq.to_string()), ("Z/2 x Z/2".into(), "Z/2 x Z/2".into()));
        let e = catalog_lookup(Series::A, 5, "AIII(2,4)").unwrap();
        assert!(z_cap_a(&e.satake, &restrict(&e.satake).unwrap()).unwrap().0.is_trivial());
    }

    #[test]
    fn counts() {
        assert_eq!(report(Series::E, 7, "EVII").count, 2);
        assert_eq!(report(Series::C, 4, "CII(2,2)").count, 1);
        assert_eq!(report(Series::B, 5, "BI(2)").count, 2);
        assert_eq!(report(Series::B, 5, "BI(3)").count, 1);
        assert_eq!(report(Series::D, 4, "DI(4)").count, 4);
        assert_eq!(report(Series::A, 2, "AI").count, 1);
    }

    #[test]
    fn every_entry_is_covered() {
        for e in catalog_all(8).unwrap() {
            let rrs = restrict(&e.satake).unwrap();
            let r = component_count(&e.satake, &rrs).unwrap_or_else(|err| panic!("{} {}: {err}", e.type_name(), e.label));
            assert_eq!(r.z_cap_a_mod_squares.order() % r.count, 0);
            assert_eq!(r.count, e.expected_components, "{} {}", e.type_name(), e.label);
            omega(&e.satake, &rrs).unwrap();
        }
    }

    #[test]
    fn unlabelled_class_is_refused() {
        let e = catalog_lookup(Series::E, 7, "EVII").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        assert!(matches!(component_count_for(&e.satake, &rrs, None), Err(NilcompError::NotCovered(_))));
    }

    #[test]
    fn adjoint_is_refused() {
        let e = catalog_lookup(Series::C, 2, "CI").unwrap();
        let inv = e.satake.clone().with_isogeny(Isogeny::Adjoint);
        assert_eq!(z_cap_a(&inv, &restrict(&inv).unwrap()).unwrap_err(), NilcompError::NotSimplyConnected);
    }
}
