//! Sparse multivariate polynomials over a finite field.
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so equality, hashing
//! of renderings and iteration order are all canonical.

use crate::gf::{Fe, FieldSpec};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Fe>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Fe) -> MPoly {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize, field: &FieldSpec) -> MPoly {
        MPoly::constant(nvars, field.one())
    }

    /// x_i (0-based).
    pub fn var(nvars: usize, i: usize, field: &FieldSpec) -> MPoly {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(exps, field.one());
        p
    }

    /// The linear form sum c_i x_i.
    pub fn linear(coeffs: &[Fe]) -> MPoly {
        let mut p = MPoly::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; coeffs.len()];
                exps[i] = 1;
                p.terms.insert(exps, c);
            }
        }
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Fe) -> MPoly {
        assert_eq!(exps.len(), nvars);
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self, field: &FieldSpec) -> bool {
        self == &MPoly::one(self.nvars, field)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, Fe)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: Fe, field: &FieldSpec) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly, field: &FieldSpec) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert_add(e.clone(), c, field);
        }
        out
    }

    pub fn sub(&self, other: &MPoly, field: &FieldSpec) -> MPoly {
        self.add(&other.neg(field), field)
    }

    pub fn neg(&self, field: &FieldSpec) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), field.neg(c));
        }
        out
    }

    pub fn scale(&self, c: Fe, field: &FieldSpec) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in self.terms() {
            out.terms.insert(e.clone(), field.mul(a, c));
        }
        out
    }

    pub fn mul(&self, other: &MPoly, field: &FieldSpec) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.insert_add(exps, field.mul(ca, cb), field);
            }
        }
        out
    }

    /// Base-q exponentiation: k = sum k_j q^j gives
    /// f^k = prod frobenius^j(f^(k_j)), keeping every intermediate as small
    /// as the Frobenius images allow.
    pub fn pow(&self, k: usize, field: &FieldSpec) -> MPoly {
        let q = field.q();
        let mut small = Vec::with_capacity(q);
        small.push(MPoly::one(self.nvars, field));
        for d in 1..q {
            let prev: &MPoly = &small[d - 1];
            small.push(prev.mul(self, field));
        }
        let mut acc = MPoly::one(self.nvars, field);
        let mut rest = k;
        let mut frob = 0usize;
        while rest > 0 {
            let digit = rest % q;
            rest /= q;
            if digit > 0 {
                let mut part = small[digit].clone();
                for _ in 0..frob {
                    part = part.frobenius(field);
                }
                acc = acc.mul(&part, field);
            }
            frob += 1;
        }
        acc
    }

    /// f -> f^q for f over GF(q): the Frobenius, i.e. every exponent scaled
    /// by q (coefficients are fixed).
    pub fn frobenius(&self, field: &FieldSpec) -> MPoly {
        let q = field.q() as u32;
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            out.terms.insert(e.iter().map(|&x| x * q).collect(), c);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Some(d) when every term has total degree d (zero polynomial: None).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Coefficient of x_i in a linear polynomial view (0 if absent).
    pub fn linear_coeff(&self, i: usize, field: &FieldSpec) -> Fe {
        let mut exps = vec![0; self.nvars];
        exps[i] = 1;
        self.terms.get(&exps).copied().unwrap_or_else(|| field.zero())
    }

    fn is_homogeneous_linear(&self) -> bool {
        !self.is_zero() && self.homogeneous_degree() == Some(1)
    }

    /// Replaces x_i by the homogeneous linear form g (which must not involve
    /// x_i) and re-expands.
    pub fn subst_linear(&self, i: usize, g: &MPoly, field: &FieldSpec) -> Result<MPoly> {
        if !g.is_homogeneous_linear() && !g.is_zero() {
            return Err(Error::BadSubstitution("substitute is not linear".into()));
        }
        if !g.linear_coeff(i, field).is_zero() {
            return Err(Error::BadSubstitution(format!("substitute involves x{}", i + 1)));
        }
        let mut out = MPoly::zero(self.nvars);
        let mut powers: std::collections::HashMap<u32, MPoly> = std::collections::HashMap::new();
        for (e, c) in self.terms() {
            let k = e[i];
            let mut base = e.clone();
            base[i] = 0;
            let gk = powers
                .entry(k)
                .or_insert_with(|| g.pow(k as usize, field));
            for (ge, gc) in gk.terms() {
                let exps: Vec<u32> = base.iter().zip(ge).map(|(&x, &y)| x + y).collect();
                out.insert_add(exps, field.mul(c, gc), field);
            }
        }
        Ok(out)
    }

    /// True iff the homogeneous linear form alpha divides self. Exact and
    /// division-free: solve alpha for its leading variable and test that the
    /// substitution kills self.
    pub fn divisible_by_linear(&self, alpha: &MPoly, field: &FieldSpec) -> Result<bool> {
        if alpha.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        if !alpha.is_homogeneous_linear() {
            return Err(Error::BadSubstitution("divisor is not homogeneous linear".into()));
        }
        let i = (0..self.nvars)
            .find(|&i| !alpha.linear_coeff(i, field).is_zero())
            .expect("nonzero linear form has a variable");
        // x_i = -c_i^{-1} * (alpha - c_i x_i)
        let ci = alpha.linear_coeff(i, field);
        let mut rest_coeffs = vec![field.zero(); self.nvars];
        for j in 0..self.nvars {
            if j != i {
                rest_coeffs[j] = alpha.linear_coeff(j, field);
            }
        }
        let factor = field.neg(field.inv(ci)?);
        let g = MPoly::linear(&rest_coeffs).scale(factor, field);
        Ok(self.subst_linear(i, &g, field)?.is_zero())
    }

    /// Canonical rendering: terms sorted by the BTreeMap exponent order,
    /// coefficients printed as field-element coefficient vectors when e > 1.
    pub fn render(&self, field: &FieldSpec) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let coeffs = field.coeffs(c);
            let cs = if field.e() == 1 {
                format!("{}", coeffs[0])
            } else {
                format!("[{}]", coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            };
            let is_one = c == field.one();
            let mut vars = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    let _ = write!(vars, "x{}", i + 1);
                } else if k > 1 {
                    let _ = write!(vars, "x{}^{}", i + 1, k);
                }
            }
            if vars.is_empty() {
                out.push_str(&cs);
            } else if is_one {
                out.push_str(&vars);
            } else {
                let _ = write!(out, "{cs}*{vars}");
            }
        }
        out
    }
}

/// Determinant by cofactor expansion along the row with the most zeros.
/// The matrices in this crate are triangular or nearly so.
pub fn mpoly_det(mat: &[Vec<MPoly>], field: &FieldSpec) -> Result<MPoly> {
    let n = mat.len();
    if n > 8 {
        return Err(Error::TooLarge(format!("determinant dimension {n}")));
    }
    for row in mat {
        if row.len() != n {
            return Err(Error::DimensionMismatch);
        }
    }
    if n == 0 {
        let nv = 0;
        return Ok(MPoly::one(nv, field));
    }
    let nvars = mat[0][0].nvars();
    Ok(det_rec(mat, field, nvars))
}

fn det_rec(mat: &[Vec<MPoly>], field: &FieldSpec, nvars: usize) -> MPoly {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    // Expand along the sparsest row.
    let row = (0..n)
        .max_by_key(|&r| mat[r].iter().filter(|p| p.is_zero()).count())
        .unwrap();
    let mut acc = MPoly::zero(nvars);
    for col in 0..n {
        if mat[row][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = mat
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != row)
            .map(|(_, rw)| {
                rw.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = det_rec(&minor, field, nvars);
        let term = sub.mul(&mat[row][col], field);
        if (row + col) % 2 == 0 {
            acc = acc.add(&term, field);
        } else {
            acc = acc.sub(&term, field);
        }
    }
    acc
}

/// Returns c with f = c*g, c nonzero, if such a scalar exists. Zero inputs
/// yield None (the zero/zero case is flagged separately by callers).
pub fn equal_up_to_scalar(f: &MPoly, g: &MPoly, field: &FieldSpec) -> Option<Fe> {
    if f.is_zero() || g.is_zero() || f.num_terms() != g.num_terms() {
        return None;
    }
    let mut ratio: Option<Fe> = None;
    for ((ef, cf), (eg, cg)) in f.terms().zip(g.terms()) {
        if ef != eg {
            return None;
        }
        let r = field.div(cf, cg).expect("nonzero stored coefficient");
        match ratio {
            None => ratio = Some(r),
            Some(r0) if r0 == r => {}
            _ => return None,
        }
    }
    ratio
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, e: usize) -> FieldSpec {
        FieldSpec::new(p, e).unwrap()
    }

    #[test]
    fn arith_examples() {
        let gf3 = f(3, 1);
        let x1 = MPoly::var(2, 0, &gf3);
        let x2 = MPoly::var(2, 1, &gf3);
        let prod = x1.sub(&x2, &gf3).mul(&x1.add(&x2, &gf3), &gf3);
        let want = x1.pow(2, &gf3).sub(&x2.pow(2, &gf3), &gf3);
        assert_eq!(prod, want);

        let gf2 = f(2, 1);
        let x1 = MPoly::var(2, 0, &gf2);
        let x2 = MPoly::var(2, 1, &gf2);
        let sq = x1.add(&x2, &gf2).pow(2, &gf2);
        assert_eq!(sq, x1.pow(2, &gf2).add(&x2.pow(2, &gf2), &gf2));

        assert!(x1.mul(&MPoly::zero(2), &gf2).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let gf5 = f(5, 1);
        let x1 = MPoly::var(2, 0, &gf5);
        let x2 = MPoly::var(2, 1, &gf5);
        let fpoly = x1.pow(2, &gf5).sub(&x2.pow(2, &gf5), &gf5);
        assert!(fpoly.subst_linear(0, &x2, &gf5).unwrap().is_zero());

        let g = x2.scale(gf5.from_int(2), &gf5);
        let h = x1.mul(&x2, &gf5).subst_linear(0, &g, &gf5).unwrap();
        assert_eq!(h, x2.pow(2, &gf5).scale(gf5.from_int(2), &gf5));

        assert!(fpoly.subst_linear(0, &x1, &gf5).is_err());
        assert!(fpoly.subst_linear(0, &x1.mul(&x2, &gf5), &gf5).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let gf5 = f(5, 1);
        let x1 = MPoly::var(2, 0, &gf5);
        let x2 = MPoly::var(2, 1, &gf5);
        let alpha = x1.sub(&x2, &gf5);
        let fpoly = x1.pow(2, &gf5).sub(&x2.pow(2, &gf5), &gf5);
        assert!(fpoly.divisible_by_linear(&alpha, &gf5).unwrap());
        assert!(!x1.divisible_by_linear(&x2, &gf5).unwrap());

        // char 2: x1^2 + x2^2 = (x1+x2)^2 is divisible by x1 - x2 = x1 + x2.
        let gf2 = f(2, 1);
        let x1 = MPoly::var(2, 0, &gf2);
        let x2 = MPoly::var(2, 1, &gf2);
        let s = x1.pow(2, &gf2).add(&x2.pow(2, &gf2), &gf2);
        assert!(s.divisible_by_linear(&x1.sub(&x2, &gf2), &gf2).unwrap());

        assert!(s.divisible_by_linear(&MPoly::zero(2), &gf2).is_err());
    }

    #[test]
    fn divisibility_product_property() {
        let gf7 = f(7, 1);
        let x1 = MPoly::var(3, 0, &gf7);
        let x2 = MPoly::var(3, 1, &gf7);
        let x3 = MPoly::var(3, 2, &gf7);
        let alpha = x1.add(&x2.scale(gf7.from_int(3), &gf7), &gf7);
        let g = x3.pow(2, &gf7).add(&x1.mul(&x2, &gf7), &gf7);
        let prod = g.mul(&alpha, &gf7);
        assert!(prod.divisible_by_linear(&alpha, &gf7).unwrap());
        let off = prod.add(&MPoly::one(3, &gf7), &gf7);
        assert!(!off.divisible_by_linear(&alpha, &gf7).unwrap());
    }

    #[test]
    fn det_examples() {
        let gf5 = f(5, 1);
        let x1 = MPoly::var(2, 0, &gf5);
        let x2 = MPoly::var(2, 1, &gf5);
        let one = MPoly::one(2, &gf5);
        let zero = MPoly::zero(2);

        let d = mpoly_det(&[vec![x1.clone(), zero.clone()], vec![zero.clone(), x2.clone()]], &gf5)
            .unwrap();
        assert_eq!(d, x1.mul(&x2, &gf5));

        let d = mpoly_det(&[vec![one.clone(), x1.clone()], vec![one.clone(), x2.clone()]], &gf5)
            .unwrap();
        assert_eq!(d, x2.sub(&x1, &gf5));

        // Moore 2x2 over GF(2): x1*x2^2 - x2*x1^2 = x1*x2*(x1+x2).
        let gf2 = f(2, 1);
        let x1 = MPoly::var(2, 0, &gf2);
        let x2 = MPoly::var(2, 1, &gf2);
        let d = mpoly_det(
            &[vec![x1.clone(), x1.pow(2, &gf2)], vec![x2.clone(), x2.pow(2, &gf2)]],
            &gf2,
        )
        .unwrap();
        let want = x1.mul(&x2, &gf2).mul(&x1.add(&x2, &gf2), &gf2);
        assert_eq!(d, want);
    }

    #[test]
    fn det_matches_brute_force_3x3() {
        use rand::{Rng, SeedableRng};
        let gf3 = f(3, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mat: Vec<Vec<MPoly>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let exps: Vec<u32> =
                                (0..3).map(|_| rng.gen_range(0..3u32)).collect();
                            let c = gf3.from_int(rng.gen_range(0..3));
                            MPoly::monomial(3, exps, c)
                        })
                        .collect()
                })
                .collect();
            let d = mpoly_det(&mat, &gf3).unwrap();
            // Leibniz expansion over all 6 permutations.
            let perms: [[usize; 3]; 6] =
                [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let signs = [1, -1, -1, 1, 1, -1];
            let mut acc = MPoly::zero(3);
            for (perm, sign) in perms.iter().zip(signs) {
                let mut term = MPoly::one(3, &gf3);
                for (r, &c) in perm.iter().enumerate() {
                    term = term.mul(&mat[r][c], &gf3);
                }
                if sign > 0 {
                    acc = acc.add(&term, &gf3);
                } else {
                    acc = acc.sub(&term, &gf3);
                }
            }
            assert_eq!(d, acc);
        }
    }

    #[test]
    fn scalar_comparison() {
        let gf5 = f(5, 1);
        let x1 = MPoly::var(2, 0, &gf5);
        let x2 = MPoly::var(2, 1, &gf5);
        let g = x1.mul(&x2, &gf5);
        let fp = g.scale(gf5.from_int(2), &gf5);
        assert_eq!(equal_up_to_scalar(&fp, &g, &gf5), Some(gf5.from_int(2)));
        assert_eq!(equal_up_to_scalar(&x1, &x2, &gf5), None);
        assert_eq!(equal_up_to_scalar(&MPoly::zero(2), &MPoly::zero(2), &gf5), None);
    }
}
