//! Univariate polynomials in t with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list. Index = degree.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPoly {
        IntPoly { coeffs }.normalized()
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial t.
    pub fn t() -> IntPoly {
        IntPoly::from_i64_coeffs(&[0, 1])
    }

    /// t - r
    pub fn linear(root: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![-root, BigInt::one()])
    }

    /// prod (t - r_i)
    pub fn from_roots<I: IntoIterator<Item = BigInt>>(roots: I) -> IntPoly {
        roots
            .into_iter()
            .fold(IntPoly::one(), |acc, r| acc.mul(&IntPoly::linear(r)))
    }

    fn normalized(mut self) -> IntPoly {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPoly { coeffs }.normalized()
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPoly { coeffs }.normalized()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.normalized()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }.normalized()
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Evaluation at the rational point num/den, returned as a reduced
    /// (numerator, denominator) pair with positive denominator.
    pub fn eval_rational(&self, num: &BigInt, den: &BigInt) -> (BigInt, BigInt) {
        assert!(!den.is_zero());
        let d = match self.degree() {
            None => return (BigInt::zero(), BigInt::one()),
            Some(d) => d,
        };
        // p(num/den) = sum a_k num^k den^(d-k) / den^d
        let mut numer = BigInt::zero();
        let mut pw_num = BigInt::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            numer += a * &pw_num * den.pow((d - k) as u32);
            pw_num *= num;
        }
        let mut denom = den.pow(d as u32);
        let g = gcd(numer.abs(), denom.abs());
        if !g.is_zero() {
            numer /= &g;
            denom /= &g;
        }
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        (numer, denom)
    }

    /// d^deg * p((t - c) / d), exact as integers.
    pub fn compose_affine(&self, c: i64, d: i64) -> IntPoly {
        assert!(d != 0);
        let deg = match self.degree() {
            None => return IntPoly::zero(),
            Some(deg) => deg,
        };
        let shifted = IntPoly::from_i64_coeffs(&[-c, 1]); // t - c
        let mut acc = IntPoly::zero();
        let bd = BigInt::from(d);
        for (k, a) in self.coeffs.iter().enumerate() {
            let term = shifted.pow(k).scale(&(a * bd.pow((deg - k) as u32)));
            acc = acc.add(&term);
        }
        acc
    }

    /// Splits off all linear factors with integer roots (by testing divisors
    /// of the constant term), returning the root multiset in ascending order
    /// and the rootless residual.
    pub fn int_root_split(&self) -> RootSplit {
        assert!(!self.is_zero());
        let mut roots = Vec::new();
        let mut rest = self.clone();
        // Factors of t first.
        while rest.coeff(0).is_zero() && rest.degree() != Some(0) {
            roots.push(BigInt::zero());
            rest = IntPoly { coeffs: rest.coeffs[1..].to_vec() };
        }
        loop {
            if rest.degree().map_or(true, |d| d == 0) {
                break;
            }
            let c0 = rest.coeff(0);
            let mut found = None;
            'search: for d in divisors(&c0) {
                for cand in [d.clone(), -d] {
                    if rest.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
            match found {
                Some(r) => {
                    rest = rest.deflate(&r);
                    roots.push(r);
                }
                None => break,
            }
        }
        roots.sort();
        RootSplit { roots, residual: rest }
    }

    /// Synthetic division by (t - r); the root must be exact.
    fn deflate(&self, r: &BigInt) -> IntPoly {
        let d = self.degree().unwrap();
        let mut out = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..d).rev() {
            carry = self.coeff(k + 1) + carry * r;
            out[k] = carry.clone();
        }
        debug_assert!((self.coeff(0) + &out[0] * r).is_zero(), "not an exact root");
        IntPoly { coeffs: out }.normalized()
    }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Positive divisors of |c| in ascending order; empty for c = 0.
fn divisors(c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return vec![];
    }
    let n: u128 = c.abs().try_into().unwrap_or(u128::MAX);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    pub roots: Vec<BigInt>,
    pub residual: IntPoly,
}

impl RootSplit {
    /// "(t-1)(t-2)^2(t^2-18*t+81)" style rendering.
    pub fn display(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.roots.len() {
            let r = &self.roots[i];
            let mut mult = 1;
            while i + mult < self.roots.len() && &self.roots[i + mult] == r {
                mult += 1;
            }
            let base = if r.is_zero() {
                "t".to_string()
            } else if r.is_negative() {
                format!("(t+{})", -r)
            } else {
                format!("(t-{})", r)
            };
            out.push_str(&base);
            if mult > 1 {
                out.push_str(&format!("^{mult}"));
            }
            i += mult;
        }
        if self.residual != IntPoly::one() {
            if self.residual.degree() == Some(0) {
                out = format!("{}{}", self.residual.coeff(0), out);
            } else if out.is_empty() {
                out = format!("{}", self.residual);
            } else {
                out.push_str(&format!("({})", self.residual));
            }
        }
        if out.is_empty() {
            out = "1".to_string();
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (k, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}
