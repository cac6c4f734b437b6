//! Characteristic polynomials: intersection lattice with Mobius function
//! (main route), subset inclusion-exclusion and extension-field point
//! counting (independent oracles), and verifiers for the identities relating
//! q-deformations to chromatic polynomials.

use crate::arrangement::Arrangement;
use crate::combinat::{chromatic_poly, Graph, SimplicialComplex};
use crate::gf::{Embedding, Fe, FieldSpec};
use crate::linalg;
use crate::polyalg::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::Arc;

/// A lattice element: the span of some hyperplane normals, identified by its
/// canonical RREF basis.
#[derive(Clone, Debug)]
pub struct Flat {
    basis: Vec<Vec<Fe>>,
    rank: usize,
    /// Bitset over the arrangement's hyperplanes: which normals lie in the
    /// span (equivalently, which hyperplanes contain the flat).
    hset: Vec<u64>,
    mobius: i64,
}

impl Flat {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mobius(&self) -> i64 {
        self.mobius
    }

    pub fn contains_hyperplane(&self, i: usize) -> bool {
        self.hset[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x & !y == 0)
}

/// All flats of the arrangement, grouped in rank order, with Mobius values.
pub struct IntersectionLattice {
    dim: usize,
    flats: Vec<Flat>,
}

impl IntersectionLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn rank(&self) -> usize {
        self.flats.last().map_or(0, |f| f.rank)
    }

    /// Partial order: reverse inclusion of subspaces, i.e. inclusion of the
    /// hyperplane sets.
    pub fn le(&self, a: usize, b: usize) -> bool {
        subset(&self.flats[a].hset, &self.flats[b].hset)
    }

    pub fn charpoly(&self) -> IntPoly {
        let mut coeffs = vec![0i64; self.dim + 1];
        for f in &self.flats {
            coeffs[self.dim - f.rank] += f.mobius;
        }
        IntPoly::from_i64_coeffs(&coeffs)
    }
}

/// BFS by rank over spans of normal subsets; Mobius values by the interval
/// recursion over hyperplane-set containment.
pub fn build_lattice(arr: &Arrangement) -> Result<IntersectionLattice> {
    let n = arr.len();
    let dim = arr.dim();
    if n > 250 || dim > 6 {
        return Err(Error::TooLarge(format!("lattice for n={n} dim={dim}")));
    }
    let field = arr.field();
    let normals: Vec<&[Fe]> = arr.hyperplanes().iter().map(|h| h.normal()).collect();
    let words = n.div_ceil(64).max(1);

    let hset_of = |basis: &[Vec<Fe>]| -> Vec<u64> {
        let mut hs = vec![0u64; words];
        for (i, nrm) in normals.iter().enumerate() {
            if linalg::in_span(basis, nrm, field) {
                hs[i / 64] |= 1 << (i % 64);
            }
        }
        hs
    };

    let mut flats = vec![Flat {
        basis: vec![],
        rank: 0,
        hset: vec![0u64; words],
        mobius: 1,
    }];
    let mut seen: HashMap<Vec<u16>, usize> = HashMap::new();
    seen.insert(linalg::span_key(&[]), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &fi in &frontier {
            for i in 0..n {
                if flats[fi].contains_hyperplane(i) {
                    continue;
                }
                let mut basis = flats[fi].basis.clone();
                linalg::add_row(&mut basis, normals[i].to_vec(), field);
                let key = linalg::span_key(&basis);
                if seen.contains_key(&key) {
                    continue;
                }
                let hset = hset_of(&basis);
                let rank = basis.len();
                seen.insert(key, flats.len());
                next.push(flats.len());
                flats.push(Flat { basis, rank, hset, mobius: 0 });
            }
        }
        frontier = next;
    }

    // BFS order is rank order, so every Y < X precedes X.
    for x in 1..flats.len() {
        let mut acc = 0i64;
        for y in 0..x {
            if flats[y].rank < flats[x].rank && subset(&flats[y].hset, &flats[x].hset) {
                acc += flats[y].mobius;
            }
        }
        flats[x].mobius = -acc;
    }
    Ok(IntersectionLattice { dim, flats })
}

pub fn charpoly_mobius(arr: &Arrangement) -> Result<IntPoly> {
    Ok(build_lattice(arr)?.charpoly())
}

/// Inclusion-exclusion over all subsets of hyperplanes, with the RREF basis
/// threaded through the recursion.
pub fn charpoly_subsets(arr: &Arrangement) -> Result<IntPoly> {
    let n = arr.len();
    if n > 20 {
        return Err(Error::TooLarge(format!("subset sum over n={n}")));
    }
    let dim = arr.dim();
    let field = arr.field();
    let mut coeffs = vec![0i64; dim + 1];

    fn rec(
        i: usize,
        basis: &Vec<Vec<Fe>>,
        sign: i64,
        arr: &Arrangement,
        field: &Arc<FieldSpec>,
        coeffs: &mut [i64],
    ) {
        if i == arr.len() {
            coeffs[arr.dim() - basis.len()] += sign;
            return;
        }
        rec(i + 1, basis, sign, arr, field, coeffs);
        let mut with = basis.clone();
        linalg::add_row(&mut with, arr.hyperplanes()[i].normal().to_vec(), field);
        rec(i + 1, &with, -sign, arr, field, coeffs);
    }
    rec(0, &vec![], 1, arr, field, &mut coeffs);
    Ok(IntPoly::from_i64_coeffs(&coeffs))
}

/// Points of (the degree-k extension)^dim avoiding every hyperplane.
pub fn complement_count(arr: &Arrangement, k: usize) -> Result<u64> {
    assert!(k >= 1);
    let base = arr.field();
    let dim = arr.dim();
    let qk = (base.q() as u128).pow(k as u32);
    let total = qk.checked_pow(dim as u32).filter(|&t| t <= 100_000_000);
    let Some(total) = total else {
        return Err(Error::TooLarge(format!("point count over q^(k*l) = q^{}", k * dim)));
    };
    let ext = FieldSpec::new(base.p(), base.e() * k)?;
    let emb = Embedding::new(base, &ext)?;
    let normals: Vec<Vec<Fe>> = arr
        .hyperplanes()
        .iter()
        .map(|h| h.normal().iter().map(|&c| emb.map(c)).collect())
        .collect();
    let points: Vec<Fe> = ext.elements().collect();
    let qk = qk as usize;
    let mut count = 0u64;
    let mut x = vec![0usize; dim];
    for _ in 0..total {
        let free = normals.iter().all(|nrm| {
            let mut s = ext.zero();
            for (&ci, &c) in x.iter().zip(nrm) {
                s = ext.add(s, ext.mul(points[ci], c));
            }
            !s.is_zero()
        });
        if free {
            count += 1;
        }
        for slot in x.iter_mut() {
            *slot += 1;
            if *slot < qk {
                break;
            }
            *slot = 0;
        }
    }
    Ok(count)
}

/// Outcome of a three-polynomial deletion-contraction check.
pub struct QDelConReport {
    pub original: IntPoly,
    pub deleted: IntPoly,
    pub contracted: IntPoly,
    pub factor: i64,
    pub holds: bool,
}

/// chi(S_Delta^q) = chi(S_{Delta \ e}^q) - (q-1) chi(S_{Delta / e}^q) for a
/// maximal edge e, each side computed independently.
pub fn verify_q_delcon(
    delta: &SimplicialComplex,
    e: (usize, usize),
    field: Arc<FieldSpec>,
) -> Result<QDelConReport> {
    let original = charpoly_mobius(&Arrangement::qdef_complex(delta, field.clone()))?;
    let deleted =
        charpoly_mobius(&Arrangement::qdef_complex(&delta.delete_edge(e)?, field.clone()))?;
    let contracted =
        charpoly_mobius(&Arrangement::qdef_complex(&delta.contract_edge(e)?, field.clone()))?;
    let factor = field.q() as i64 - 1;
    let holds = original == deleted.sub(&contracted.scale(&BigInt::from(factor)));
    Ok(QDelConReport { original, deleted, contracted, factor, holds })
}

/// The r-version: chi(M(G,r)) = chi(M(G\e,r)) - r chi(M(G/e,r)), valid for
/// every edge.
pub fn verify_q_delcon_monomial(
    g: &Graph,
    e: (usize, usize),
    r: usize,
    field: Arc<FieldSpec>,
) -> Result<QDelConReport> {
    let original = charpoly_mobius(&Arrangement::monomial(g, r, field.clone(), false)?)?;
    let deleted =
        charpoly_mobius(&Arrangement::monomial(&g.delete_edge(e)?, r, field.clone(), false)?)?;
    let contracted =
        charpoly_mobius(&Arrangement::monomial(&g.contract_edge(e)?, r, field.clone(), false)?)?;
    let factor = r as i64;
    let holds = original == deleted.sub(&contracted.scale(&BigInt::from(factor)));
    Ok(QDelConReport { original, deleted, contracted, factor, holds })
}

pub struct IdentityReport {
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub holds: bool,
}

/// chi(S_G^q, t) = (q-1)^l chi(G, (t-1)/(q-1)), via compose_affine.
pub fn verify_identity_sgq(g: &Graph, field: Arc<FieldSpec>) -> Result<IdentityReport> {
    let lhs = charpoly_mobius(&Arrangement::sgq(g, field.clone()))?;
    let rhs = chromatic_poly(g).compose_affine(1, field.q() as i64 - 1);
    let holds = lhs == rhs;
    Ok(IdentityReport { lhs, rhs, holds })
}

/// chi(M(G,r), t) = r^l chi(G, (t-1)/r).
pub fn verify_identity_monomial(
    g: &Graph,
    r: usize,
    field: Arc<FieldSpec>,
) -> Result<IdentityReport> {
    let lhs = charpoly_mobius(&Arrangement::monomial(g, r, field, false)?)?;
    let rhs = chromatic_poly(g).compose_affine(1, r as i64);
    let holds = lhs == rhs;
    Ok(IdentityReport { lhs, rhs, holds })
}

pub struct CongruenceReport {
    pub value: BigInt,
    pub divisible: bool,
    pub quotient: BigInt,
    pub modulus: BigInt,
    pub lhs_mod: BigInt,
    pub rhs_mod: BigInt,
    pub holds: bool,
}

fn mod_nonneg(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_zero() {
        return a.clone();
    }
    let r = a % m;
    if r.is_negative() {
        r + m.abs()
    } else {
        r
    }
}

/// chi(S_Delta^q, q^k) / (q-1)^l == chi(G, k) (mod q-1), where G is the
/// underlying graph of Delta.
pub fn verify_congruence(
    delta: &SimplicialComplex,
    field: Arc<FieldSpec>,
    k: u32,
) -> Result<CongruenceReport> {
    let l = delta.n();
    let q = BigInt::from(field.q());
    let chi = charpoly_mobius(&Arrangement::qdef_complex(delta, field.clone()))?;
    let value = chi.eval(&q.pow(k as u32));
    let denom = (&q - 1u32).pow(l as u32);
    let divisible = (&value % &denom).is_zero();
    let quotient = &value / &denom;
    let modulus = &q - 1u32;
    let chrom = chromatic_poly(&delta.underlying_graph()).eval_i64(k as i64);
    let lhs_mod = mod_nonneg(&quotient, &modulus);
    let rhs_mod = mod_nonneg(&chrom, &modulus);
    let one = BigInt::one();
    let holds = divisible && (modulus == one || lhs_mod == rhs_mod);
    Ok(CongruenceReport { value, divisible, quotient, modulus, lhs_mod, rhs_mod, holds })
}

/// Closed form for the (l-2)-skeleton deformation:
/// (t-1)(t-q)...(t-q^{l-2}) * (t - q^{l-1} + (q-1)^{l-1}).
pub fn skeleton_charpoly_formula(l: usize, q: u64) -> IntPoly {
    assert!(l >= 2);
    let q = BigInt::from(q);
    let out = IntPoly::from_roots((0..l - 1).map(|i| q.pow(i as u32)));
    let last = q.pow(l as u32 - 1) - (&q - 1u32).pow(l as u32 - 1);
    out.mul(&IntPoly::linear(last))
}
