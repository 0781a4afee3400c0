//! Invariant degrees of `W_A` and the Poincaré polynomial identity
//! `sum_w t^{l(w)} = prod_i (1 - t^{d_i}) / (1 - t)`.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::restricted::{BabyWeyl, RestrictedError, RestrictedRootSystem};
use crate::rootsys::{CartanType, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylInvError {
    #[error("Phi_A^* has not been classified")]
    Unclassified,
    #[error(transparent)]
    Restricted(#[from] RestrictedError),
}

/// Dense polynomial with arbitrary-precision integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `1 + t + ... + t^{d-1}`.
    pub fn q_integer(d: u32) -> Self {
        Self::new(vec![BigInt::one(); d as usize])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Degrees of the basic invariants of `k[a]^W`, ones included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<u32>,
}

impl DegreeProfile {
    pub fn product(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    /// `prod_i (1 + t + ... + t^{d_i - 1})`.
    pub fn poincare(&self) -> IntPolynomial {
        self.degrees
            .iter()
            .fold(IntPolynomial::one(), |acc, &d| &acc * &IntPolynomial::q_integer(d))
    }
}

/// Degrees of the Weyl group of a simple type.
pub fn type_degrees(ty: CartanType) -> Vec<u32> {
    let n = ty.rank as u32;
    match ty.series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
        Series::D => {
            let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort_unstable();
            d
        }
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    }
}

/// Degrees of `W_A`, with `r - r0` entries equal to 1.
pub fn invariant_degrees(rrs: &RestrictedRootSystem) -> Result<DegreeProfile, WeylInvError> {
    if rrs.r0() > 0 && rrs.components().is_empty() {
        return Err(WeylInvError::Unclassified);
    }
    let mut degrees: Vec<u32> = vec![1; rrs.r() - rrs.r0()];
    for c in rrs.components() {
        degrees.extend(type_degrees(c.reduced));
    }
    degrees.sort_unstable();
    Ok(DegreeProfile { degrees })
}

/// `sum_{w in W_A} t^{l(w)}` by enumeration.
pub fn poincare_polynomial(w: &BabyWeyl) -> Result<IntPolynomial, WeylInvError> {
    Ok(IntPolynomial::from_counts(&w.length_counts()?))
}

/// Outcome of [`demazure_identity_check`]; `diff` is Poincaré minus the degree product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureCheck {
    pub equal: bool,
    pub diff: IntPolynomial,
}

pub fn demazure_identity_check(profile: &DegreeProfile, poincare: &IntPolynomial) -> DemazureCheck {
    let diff = poincare - &profile.poincare();
    DemazureCheck { equal: diff.is_zero(), diff }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted::{baby_weyl, restrict, split_restricted};
    use crate::rootsys::DEFAULT_ORDER_CAP;
    use crate::satake::catalog_lookup;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[1, 2, 2, 1]).to_string(), "1 + 2t + 2t^2 + t^3");
        assert_eq!(IntPolynomial::from_i64(&[0, -1, 0, 3]).to_string(), "-t + 3t^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn a2_poincare() {
        let rrs = split_restricted(Series::A, 2).unwrap();
        let p = poincare_polynomial(&baby_weyl(&rrs, 100).unwrap()).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1, 2, 2, 1]));
        assert!(demazure_identity_check(&invariant_degrees(&rrs).unwrap(), &p).equal);
    }

    #[test]
    fn corrupted_degrees_fail() {
        let profile = DegreeProfile { degrees: vec![2, 3] };
        let a1a1 = IntPolynomial::from_i64(&[1, 2, 1]);
        let check = demazure_identity_check(&profile, &a1a1);
        assert!(!check.equal);
        assert_eq!(check.diff, IntPolynomial::from_i64(&[0, 0, -1, -1]));
        assert!(demazure_identity_check(&DegreeProfile { degrees: vec![2] }, &IntPolynomial::from_i64(&[1, 1])).equal);
    }

    #[test]
    fn evii_degrees() {
        let e = catalog_lookup(Series::E, 7, "EVII").unwrap();
        let rrs = restrict(&e.satake).unwrap();
        let d = invariant_degrees(&rrs).unwrap();
        assert_eq!(d.degrees, vec![2, 4, 6]);
        let p = poincare_polynomial(&baby_weyl(&rrs, DEFAULT_ORDER_CAP).unwrap()).unwrap();
        assert_eq!(p.eval_at_one(), BigInt::from(48));
        assert!(demazure_identity_check(&d, &p).equal);
    }

    #[test]
    fn degree_products_match_orders() {
        for s in Series::ALL {
            for n in 1..=8 {
                if let Ok(ty) = CartanType::new(s, n) {
                    let d = type_degrees(ty);
                    assert_eq!(d.len(), n);
                    assert_eq!(d.iter().map(|&x| x as u128).product::<u128>(), ty.weyl_order());
                    assert_eq!(d.iter().map(|&x| (x - 1) as usize).sum::<usize>() * 2, ty.num_roots());
                }
            }
        }
    }
}
