//! Polynomial vector fields theta = sum f_i d/dx_i.

use super::MPoly;
use crate::gf::{Fe, FieldSpec};
use crate::{Error, Result};

/// Component i is the coefficient of d/dx_i. A homogeneous derivation has all
/// components homogeneous of one common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    comps: Vec<MPoly>,
}

impl Derivation {
    pub fn new(comps: Vec<MPoly>) -> Derivation {
        assert!(!comps.is_empty());
        let nvars = comps[0].nvars();
        assert!(comps.iter().all(|c| c.nvars() == nvars), "component arity mismatch");
        Derivation { comps }
    }

    /// The Euler derivation sum x_i d/dx_i.
    pub fn euler(nvars: usize, field: &FieldSpec) -> Derivation {
        Derivation::new((0..nvars).map(|i| MPoly::var(nvars, i, field)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[MPoly] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &MPoly {
        &self.comps[i]
    }

    /// Applies the derivation to a linear form given by its coefficient
    /// vector: theta(sum c_i x_i) = sum c_i * comps_i.
    pub fn apply_linear(&self, coeffs: &[Fe], field: &FieldSpec) -> MPoly {
        assert_eq!(coeffs.len(), self.comps.len());
        let mut acc = MPoly::zero(self.nvars());
        for (c, f) in coeffs.iter().zip(&self.comps) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(*c, field), field);
            }
        }
        acc
    }

    /// Common homogeneous degree of the nonzero components.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut deg = None;
        for c in &self.comps {
            if c.is_zero() {
                continue;
            }
            match (deg, c.homogeneous_degree()) {
                (_, None) => return Err(Error::NotHomogeneous),
                (None, Some(d)) => deg = Some(d),
                (Some(d0), Some(d)) if d0 == d => {}
                _ => return Err(Error::NotHomogeneous),
            }
        }
        deg.ok_or(Error::NotHomogeneous)
    }
}
