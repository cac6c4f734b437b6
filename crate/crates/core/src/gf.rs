//! Exact arithmetic in GF(p^e) for small fields.
//!
//! Elements are stored as indices into the field; a `FieldSpec` owns full
//! add/mul/neg/inv tables, so every operation is a table lookup. The index of
//! an element with representative polynomial c0 + c1 x + ... is
//! c0 + c1 p + c2 p^2 + ... All fields in this crate are tiny (q <= 625), so
//! tables are built eagerly by polynomial arithmetic modulo an irreducible
//! modulus.

use crate::{Error, Result};
use std::sync::atomic::{AtomicU16, Ordering};

static NEXT_TAG: AtomicU16 = AtomicU16::new(1);

/// An element of a finite field, tagged with the id of its `FieldSpec`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fe {
    tag: u16,
    idx: u16,
}

impl Fe {
    pub fn idx(self) -> usize {
        self.idx as usize
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

#[derive(Copy, Clone, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
}

/// A concrete finite field GF(p^e) with precomputed operation tables.
#[derive(Debug)]
pub struct FieldSpec {
    tag: u16,
    p: u64,
    e: usize,
    q: usize,
    /// Monic irreducible modulus, coefficients low degree first, length e+1.
    /// For e = 1 this is the placeholder x.
    modulus: Vec<u64>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder over GF(p), coefficients low degree first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k];
        if c != 0 {
            let f = c * lead_inv % p;
            for (i, &bc) in b.iter().enumerate() {
                let pos = k - db + i;
                r[pos] = (r[pos] + p - f * bc % p) % p;
            }
        }
        r.pop();
        while r.len() > 1 && *r.last().unwrap() == 0 {
            r.pop();
        }
        if r.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and small; Fermat by repeated multiplication is fine.
    let mut acc = 1u64;
    for _ in 0..p - 2 {
        acc = acc * a % p;
    }
    acc
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=e/2.
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for c in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut cc = c;
            for _ in 0..d {
                div.push(cc % p);
                cc /= p;
            }
            div.push(1);
            let r = poly_rem(m, &div, p);
            if r.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^e), choosing the lexicographically smallest monic
    /// irreducible modulus of degree e over GF(p).
    pub fn new(p: u64, e: usize) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::BadExtensionDegree);
        }
        let q = (p as usize).pow(e as u32);
        if q > u16::MAX as usize {
            return Err(Error::TooLarge(format!("field order {q}")));
        }
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            'outer: for c in 0..q as u64 {
                let mut m = Vec::with_capacity(e + 1);
                let mut cc = c;
                for _ in 0..e {
                    m.push(cc % p);
                    cc /= p;
                }
                m.push(1);
                if is_irreducible(&m, p) {
                    found = Some(m);
                    break 'outer;
                }
            }
            found.ok_or_else(|| Error::Internal("no irreducible modulus found".into()))?
        };

        let tag = NEXT_TAG.fetch_add(1, Ordering::Relaxed);
        let mut spec = FieldSpec {
            tag,
            p,
            e,
            q,
            modulus,
            add_t: vec![0; q * q],
            mul_t: vec![0; q * q],
            neg_t: vec![0; q],
            inv_t: vec![0; q],
        };
        spec.build_tables();
        Ok(spec)
    }

    fn idx_to_poly(&self, idx: usize) -> Vec<u64> {
        let mut c = Vec::with_capacity(self.e);
        let mut v = idx as u64;
        for _ in 0..self.e {
            c.push(v % self.p);
            v /= self.p;
        }
        c
    }

    fn poly_to_idx(&self, poly: &[u64]) -> usize {
        let mut idx = 0u64;
        for &c in poly.iter().rev() {
            idx = idx * self.p + c % self.p;
        }
        idx as usize
    }

    fn build_tables(&mut self) {
        let q = self.q;
        for a in 0..q {
            let pa = self.idx_to_poly(a);
            let na: Vec<u64> = pa.iter().map(|&c| (self.p - c) % self.p).collect();
            self.neg_t[a] = self.poly_to_idx(&na) as u16;
            for b in 0..q {
                let pb = self.idx_to_poly(b);
                let sum: Vec<u64> = pa.iter().zip(&pb).map(|(&x, &y)| (x + y) % self.p).collect();
                self.add_t[a * q + b] = self.poly_to_idx(&sum) as u16;
                // Product modulo (p, modulus).
                let mut prod = vec![0u64; 2 * self.e];
                for (i, &x) in pa.iter().enumerate() {
                    for (j, &y) in pb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % self.p;
                    }
                }
                let red = if self.e == 1 {
                    vec![prod[0]]
                } else {
                    let mut r = poly_rem(&prod, &self.modulus, self.p);
                    r.resize(self.e, 0);
                    r
                };
                self.mul_t[a * q + b] = self.poly_to_idx(&red) as u16;
            }
        }
        for a in 1..q {
            for b in 1..q {
                if self.mul_t[a * q + b] == 1 {
                    self.inv_t[a] = b as u16;
                    break;
                }
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe { tag: self.tag, idx: 0 }
    }

    pub fn one(&self) -> Fe {
        Fe { tag: self.tag, idx: 1 }
    }

    pub fn owns(&self, a: Fe) -> bool {
        a.tag == self.tag
    }

    fn check(&self, a: Fe) -> Result<()> {
        if a.tag != self.tag {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() != self.e || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadCoefficient);
        }
        Ok(Fe { tag: self.tag, idx: self.poly_to_idx(coeffs) as u16 })
    }

    /// Image of an integer under Z -> GF(p^e) (reduction into the prime field).
    pub fn from_int(&self, n: i64) -> Fe {
        let r = n.rem_euclid(self.p as i64) as u16;
        Fe { tag: self.tag, idx: r }
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        debug_assert!(self.owns(a));
        self.idx_to_poly(a.idx())
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        assert!(a.tag == self.tag && b.tag == self.tag, "mismatched field specs");
        Fe { tag: self.tag, idx: self.add_t[a.idx() * self.q + b.idx()] }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Fe) -> Fe {
        assert!(a.tag == self.tag, "mismatched field specs");
        Fe { tag: self.tag, idx: self.neg_t[a.idx()] }
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        assert!(a.tag == self.tag && b.tag == self.tag, "mismatched field specs");
        Fe { tag: self.tag, idx: self.mul_t[a.idx() * self.q + b.idx()] }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fe { tag: self.tag, idx: self.inv_t[a.idx()] })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, k: i64) -> Result<Fe> {
        self.check(a)?;
        if k < 0 && a.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        let base = if k < 0 { self.inv(a)? } else { a };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        Ok(acc)
    }

    pub fn arith(&self, a: Fe, b: Fe, op: ArithOp) -> Result<Fe> {
        self.check(a)?;
        self.check(b)?;
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
            ArithOp::Pow(k) => self.pow(a, k),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let tag = self.tag;
        (0..self.q as u16).map(move |idx| Fe { tag, idx })
    }

    /// All q-1 nonzero elements, sorted lexicographically by coefficient
    /// vector (low degree first).
    pub fn units(&self) -> Vec<Fe> {
        let mut us: Vec<Fe> = self.elements().filter(|a| !a.is_zero()).collect();
        us.sort_by_key(|&a| self.coeffs(a));
        us
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> usize {
        assert!(!a.is_zero());
        let mut acc = a;
        let mut n = 1;
        while acc != self.one() {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    /// Smallest unit (in `units` order) of exact multiplicative order r.
    pub fn primitive_root(&self, r: usize) -> Result<Fe> {
        if r == 0 || (self.q - 1) % r != 0 {
            return Err(Error::NoPrimitiveRoot(r));
        }
        self.units()
            .into_iter()
            .find(|&u| self.order(u) == r)
            .ok_or(Error::NoPrimitiveRoot(r))
    }
}

/// A field homomorphism GF(p^e) -> GF(p^(e*k)), realized by mapping the base
/// generator to a root of the base modulus found by exhaustive search.
/// Precomputed once per (base, extension) pair.
pub struct Embedding {
    base_tag: u16,
    table: Vec<Fe>,
}

impl Embedding {
    pub fn new(base: &FieldSpec, ext: &FieldSpec) -> Result<Embedding> {
        if base.p != ext.p || ext.e % base.e != 0 {
            return Err(Error::NoEmbedding(format!(
                "GF({}^{}) does not embed in GF({}^{})",
                base.p, base.e, ext.p, ext.e
            )));
        }
        // Root of the base modulus inside the extension. For e = 1 the
        // modulus is x, whose root 0 yields the prime-subfield inclusion.
        let root = ext
            .elements()
            .find(|&cand| {
                let mut acc = ext.zero();
                let mut pw = ext.one();
                for &c in &base.modulus {
                    acc = ext.add(acc, ext.mul(ext.from_int(c as i64), pw));
                    pw = ext.mul(pw, cand);
                }
                acc.is_zero()
            })
            .ok_or_else(|| Error::NoEmbedding("no root of base modulus".into()))?;

        let table = (0..base.q)
            .map(|idx| {
                let coeffs = base.idx_to_poly(idx);
                let mut acc = ext.zero();
                let mut pw = ext.one();
                for &c in &coeffs {
                    acc = ext.add(acc, ext.mul(ext.from_int(c as i64), pw));
                    pw = ext.mul(pw, root);
                }
                acc
            })
            .collect();
        Ok(Embedding { base_tag: base.tag, table })
    }

    pub fn map(&self, a: Fe) -> Fe {
        assert!(a.tag == self.base_tag, "mismatched field specs");
        self.table[a.idx()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_selection() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2+x+1
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]); // x^2+1
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(5, 0), Err(Error::BadExtensionDegree)));
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());

        // GF(4): g*g = g+1 where g is the class of x.
        let f4 = FieldSpec::new(2, 2).unwrap();
        let g = f4.from_coeffs(&[0, 1]).unwrap();
        let g1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f4.mul(g, g), g1);

        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert!(matches!(f5.inv(f5.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mismatched_specs_error() {
        let a = FieldSpec::new(3, 1).unwrap();
        let b = FieldSpec::new(3, 1).unwrap();
        assert!(matches!(
            a.arith(a.one(), b.one(), ArithOp::Add),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn units_and_roots() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.units(), vec![f2.one()]);
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.units(), vec![f3.from_int(1), f3.from_int(2)]);
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.units().len(), 3);

        assert_eq!(f3.primitive_root(2).unwrap(), f3.from_int(2));
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.primitive_root(4).unwrap(), f5.from_int(2));
        let x = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.primitive_root(3).unwrap(), x);
        assert!(matches!(f5.primitive_root(3), Err(Error::NoPrimitiveRoot(3))));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, e) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)] {
            let f = FieldSpec::new(p, e).unwrap();
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
            // Wilson generalization: product of all units is -1.
            let prod = f.units().iter().fold(f.one(), |acc, &u| f.mul(acc, u));
            assert_eq!(prod, f.neg(f.one()));
            assert_eq!(f.units().len(), f.q() - 1);
        }
    }

    #[test]
    fn primitive_root_generates_units() {
        for (p, e) in [(3u64, 1usize), (5, 1), (2, 2), (3, 2)] {
            let f = FieldSpec::new(p, e).unwrap();
            let g = f.primitive_root(f.q() - 1).unwrap();
            let mut seen = std::collections::HashSet::new();
            let mut acc = f.one();
            for _ in 0..f.q() - 1 {
                acc = f.mul(acc, g);
                seen.insert(acc);
            }
            assert_eq!(seen.len(), f.q() - 1);
        }
    }

    #[test]
    fn embedding_is_homomorphism() {
        for (p, e, k) in [(2u64, 1usize, 2usize), (3, 1, 2), (2, 2, 2)] {
            let base = FieldSpec::new(p, e).unwrap();
            let ext = FieldSpec::new(p, e * k).unwrap();
            let emb = Embedding::new(&base, &ext).unwrap();
            assert_eq!(emb.map(base.one()), ext.one());
            for a in base.elements() {
                for b in base.elements() {
                    assert_eq!(emb.map(base.add(a, b)), ext.add(emb.map(a), emb.map(b)));
                    assert_eq!(emb.map(base.mul(a, b)), ext.mul(emb.map(a), emb.map(b)));
                }
            }
        }
    }

    #[test]
    fn embedding_preserves_order() {
        // GF(4) -> GF(16): image of the generator keeps multiplicative order 3.
        let base = FieldSpec::new(2, 2).unwrap();
        let ext = FieldSpec::new(2, 4).unwrap();
        let emb = Embedding::new(&base, &ext).unwrap();
        let g = base.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(ext.order(emb.map(g)), 3);
        // Prime subfields map identically on constants.
        let f3 = FieldSpec::new(3, 1).unwrap();
        let f9 = FieldSpec::new(3, 2).unwrap();
        let e2 = Embedding::new(&f3, &f9).unwrap();
        assert_eq!(e2.map(f3.from_int(2)), f9.from_int(2));
    }
}
