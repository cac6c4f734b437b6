//! Freeness machinery: Vandermonde/Moore determinant identities, explicit
//! derivation bases for the chordal families, Saito-criterion certification,
//! Terao addition-deletion inductive freeness, and supersolvability.

use crate::arrangement::{Arrangement, Hyperplane};
use crate::charpoly::charpoly_mobius;
use crate::combinat::{ascending_set, lower_neighbors, Graph, Peo};
use crate::gf::{Fe, FieldSpec};
use crate::linalg;
use crate::polyalg::{mpoly_det, Derivation, IntPoly, MPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Arc;

/// A certified exponent multiset, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents {
    exps: Vec<u32>,
}

impl Exponents {
    pub fn new(mut exps: Vec<u32>) -> Exponents {
        exps.sort_unstable();
        Exponents { exps }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exps
    }

    pub fn sum(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// The Terao factorization prod (t - e_i).
    pub fn charpoly(&self) -> IntPoly {
        IntPoly::from_roots(self.exps.iter().map(|&e| BigInt::from(e)))
    }
}

/// Nested hyperplane index sets A_1 subset ... subset A_r into a parent
/// arrangement, one level per rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    levels: Vec<Vec<usize>>,
}

impl Filtration {
    pub fn new(levels: Vec<Vec<usize>>) -> Filtration {
        Filtration { levels }
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }
}

/// The subspace polynomial of span{x_v : v in vars}: the monic additive
/// polynomial g(T) = sum A_s T^(q^s) with g(x_v) = 0 for every generator,
/// so g(T) = prod over the q^k span vectors v of (T - v). Built by the
/// recursion g'(T) = g(T)^q - g(x_new)^(q-1) g(T); certified at each step by
/// monicity plus vanishing on the generators.
struct SubspacePoly {
    nvars: usize,
    vars: Vec<usize>,
    coeffs: Vec<MPoly>,
}

impl SubspacePoly {
    fn identity(nvars: usize, field: &FieldSpec) -> SubspacePoly {
        SubspacePoly { nvars, vars: vec![], coeffs: vec![MPoly::one(nvars, field)] }
    }

    /// g evaluated at the variable x_i.
    fn eval_at_var(&self, i: usize, field: &FieldSpec) -> MPoly {
        let q = field.q();
        let mut acc = MPoly::zero(self.nvars);
        let mut pw = 1u32;
        for a in &self.coeffs {
            let xi = MPoly::monomial(self.nvars, {
                let mut e = vec![0u32; self.nvars];
                e[i] = pw;
                e
            }, field.one());
            acc = acc.add(&a.mul(&xi, field), field);
            pw *= q as u32;
        }
        acc
    }

    fn extend(&mut self, v: usize, field: &FieldSpec) -> Result<()> {
        let q = field.q();
        let u = self.eval_at_var(v, field);
        if u.is_zero() {
            return Err(Error::Internal("dependent subspace generator".into()));
        }
        let uq1 = u.pow(q - 1, field);
        let mut next = Vec::with_capacity(self.coeffs.len() + 1);
        for s in 0..=self.coeffs.len() {
            let mut b = if s > 0 {
                self.coeffs[s - 1].frobenius(field)
            } else {
                MPoly::zero(self.nvars)
            };
            if s < self.coeffs.len() {
                b = b.sub(&uq1.mul(&self.coeffs[s], field), field);
            }
            next.push(b);
        }
        self.coeffs = next;
        self.vars.push(v);
        // The certificate: monic of degree q^k and vanishing on every
        // generator, which pins g down as the full span product.
        if self.coeffs.last().map(|c| !c.is_one(field)).unwrap_or(true) {
            return Err(Error::Internal("subspace polynomial not monic".into()));
        }
        for &w in &self.vars {
            if !self.eval_at_var(w, field).is_zero() {
                return Err(Error::Internal("subspace polynomial misses a generator".into()));
            }
        }
        Ok(())
    }
}

/// Vandermonde determinant det(x_i^j), asserted equal to
/// prod_{i<j}(x_j - x_i).
pub fn vandermonde(vars: &[usize], nvars: usize, field: &FieldSpec) -> Result<MPoly> {
    if vars.is_empty() {
        return Ok(MPoly::one(nvars, field));
    }
    let k = vars.len();
    let mat: Vec<Vec<MPoly>> = vars
        .iter()
        .map(|&v| {
            (0..k)
                .map(|j| {
                    let mut e = vec![0u32; nvars];
                    e[v] = j as u32;
                    MPoly::monomial(nvars, e, field.one())
                })
                .collect()
        })
        .collect();
    let det = mpoly_det(&mat, field)?;
    let mut prod = MPoly::one(nvars, field);
    for (a, &vi) in vars.iter().enumerate() {
        for &vj in &vars[a + 1..] {
            let diff = MPoly::var(nvars, vj, field).sub(&MPoly::var(nvars, vi, field), field);
            prod = prod.mul(&diff, field);
        }
    }
    if det != prod {
        return Err(Error::Internal("vandermonde determinant != product".into()));
    }
    Ok(det)
}

/// Moore determinant det(x_i^(q^j)), asserted equal to the product
/// prod_i prod_{c vectors} (c_1 x_1 + ... + x_i).
pub fn moore(vars: &[usize], nvars: usize, field: &FieldSpec) -> Result<MPoly> {
    if vars.is_empty() {
        return Ok(MPoly::one(nvars, field));
    }
    let q = field.q();
    let k = vars.len();
    let mat: Vec<Vec<MPoly>> = vars
        .iter()
        .map(|&v| {
            (0..k)
                .map(|j| {
                    let mut e = vec![0u32; nvars];
                    e[v] = (q as u32).pow(j as u32);
                    MPoly::monomial(nvars, e, field.one())
                })
                .collect()
        })
        .collect();
    let det = mpoly_det(&mat, field)?;
    let mut prod = MPoly::one(nvars, field);
    let mut g = SubspacePoly::identity(nvars, field);
    for &v in vars {
        prod = prod.mul(&g.eval_at_var(v, field), field);
        g.extend(v, field)?;
    }
    if det != prod {
        return Err(Error::Internal("moore determinant != product".into()));
    }
    Ok(det)
}

/// det(x_i^(jr+1)), asserted equal to prod x_i * prod_{i<j}(x_j^r - x_i^r).
pub fn delta_r1(vars: &[usize], r: usize, nvars: usize, field: &FieldSpec) -> Result<MPoly> {
    if vars.is_empty() {
        return Ok(MPoly::one(nvars, field));
    }
    let k = vars.len();
    let mat: Vec<Vec<MPoly>> = vars
        .iter()
        .map(|&v| {
            (0..k)
                .map(|j| {
                    let mut e = vec![0u32; nvars];
                    e[v] = (j * r + 1) as u32;
                    MPoly::monomial(nvars, e, field.one())
                })
                .collect()
        })
        .collect();
    let det = mpoly_det(&mat, field)?;
    let mut prod = MPoly::one(nvars, field);
    for &v in vars {
        prod = prod.mul(&MPoly::var(nvars, v, field), field);
    }
    for (a, &vi) in vars.iter().enumerate() {
        for &vj in &vars[a + 1..] {
            let pr = |v: usize| {
                let mut e = vec![0u32; nvars];
                e[v] = r as u32;
                MPoly::monomial(nvars, e, field.one())
            };
            prod = prod.mul(&pr(vj).sub(&pr(vi), field), field);
        }
    }
    if det != prod {
        return Err(Error::Internal("delta_r1 determinant != product".into()));
    }
    Ok(det)
}

fn x_minus(nvars: usize, i: usize, m: usize, field: &FieldSpec) -> MPoly {
    MPoly::var(nvars, i, field).sub(&MPoly::var(nvars, m, field), field)
}

/// The Vandermonde quotient Delta(E, x_i)/Delta(E) = prod_{m in E}(x_i - x_m),
/// validated by multiplying back against the two determinants.
fn vandermonde_ratio(e: &[usize], i: usize, nvars: usize, field: &FieldSpec) -> Result<MPoly> {
    let mut prod = MPoly::one(nvars, field);
    for &m in e {
        prod = prod.mul(&x_minus(nvars, i, m, field), field);
    }
    let small = vandermonde(e, nvars, field)?;
    let mut big_vars = e.to_vec();
    big_vars.push(i);
    let big = vandermonde(&big_vars, nvars, field)?;
    if small.mul(&prod, field) != big {
        return Err(Error::Internal("vandermonde quotient fails multiply-back".into()));
    }
    Ok(prod)
}

/// The Delta_1^(r) quotient x_i * prod_{m in E}(x_i^r - x_m^r), validated by
/// multiplying back.
fn delta_r1_ratio(e: &[usize], i: usize, r: usize, nvars: usize, field: &FieldSpec) -> Result<MPoly> {
    let pr = |v: usize| {
        let mut ex = vec![0u32; nvars];
        ex[v] = r as u32;
        MPoly::monomial(nvars, ex, field.one())
    };
    let mut prod = MPoly::var(nvars, i, field);
    for &m in e {
        prod = prod.mul(&pr(i).sub(&pr(m), field), field);
    }
    let small = delta_r1(e, r, nvars, field)?;
    let mut big_vars = e.to_vec();
    big_vars.push(i);
    let big = delta_r1(&big_vars, r, nvars, field)?;
    if small.mul(&prod, field) != big {
        return Err(Error::Internal("delta_r1 quotient fails multiply-back".into()));
    }
    Ok(prod)
}

fn peo_data(g: &Graph, peo: &Peo) -> Result<Graph> {
    if !peo.is_valid(g) {
        return Err(Error::InvalidPeo);
    }
    Ok(g.relabel_by_peo(peo))
}

/// Graphic basis theta_k = sum_{i in C_>=k} prod_{m in E_<k}(x_i - x_m) d_i,
/// in PEO coordinates (variable k is the k-th PEO vertex).
pub fn basis_graphic(g: &Graph, peo: &Peo, field: &FieldSpec) -> Result<Vec<Derivation>> {
    let g = peo_data(g, peo)?;
    let l = g.n();
    let id = Peo::identity(l);
    let mut out = Vec::with_capacity(l);
    for k in 0..l {
        let e = lower_neighbors(&g, &id, k);
        let mut comps = vec![MPoly::zero(l); l];
        for i in ascending_set(&g, &id, k) {
            comps[i] = vandermonde_ratio(&e, i, l, field)?;
        }
        out.push(Derivation::new(comps));
    }
    Ok(out)
}

/// q-deformed basis with Moore quotients: the coefficient of d_i in theta_k
/// is the subspace polynomial of span{x_m : m in E_<k} evaluated at x_i.
pub fn basis_qdef(g: &Graph, peo: &Peo, field: &FieldSpec) -> Result<Vec<Derivation>> {
    let g = peo_data(g, peo)?;
    let l = g.n();
    let id = Peo::identity(l);
    let mut out = Vec::with_capacity(l);
    for k in 0..l {
        let e = lower_neighbors(&g, &id, k);
        let mut sp = SubspacePoly::identity(l, field);
        for &m in &e {
            sp.extend(m, field)?;
        }
        let mut comps = vec![MPoly::zero(l); l];
        for i in ascending_set(&g, &id, k) {
            comps[i] = sp.eval_at_var(i, field);
        }
        out.push(Derivation::new(comps));
    }
    Ok(out)
}

/// Monomial basis theta_k = sum x_i prod_{m in E_<k}(x_i^r - x_m^r) d_i;
/// degrees r|E_<k]| + 1. Requires r | q-1.
pub fn basis_monomial(g: &Graph, peo: &Peo, r: usize, field: &FieldSpec) -> Result<Vec<Derivation>> {
    field.primitive_root(r)?;
    let g = peo_data(g, peo)?;
    let l = g.n();
    let id = Peo::identity(l);
    let mut out = Vec::with_capacity(l);
    for k in 0..l {
        let e = lower_neighbors(&g, &id, k);
        let mut comps = vec![MPoly::zero(l); l];
        for i in ascending_set(&g, &id, k) {
            comps[i] = delta_r1_ratio(&e, i, r, l, field)?;
        }
        out.push(Derivation::new(comps));
    }
    Ok(out)
}

/// Membership in D(A): theta(alpha_H) divisible by alpha_H for every H.
pub fn is_derivation(theta: &Derivation, arr: &Arrangement) -> Result<bool> {
    if theta.nvars() != arr.dim() {
        return Err(Error::DimensionMismatch);
    }
    let field = arr.field();
    for h in arr.hyperplanes() {
        let img = theta.apply_linear(h.normal(), field);
        if !img.divisible_by_linear(&h.form(), field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Saito's criterion. The determinant of the coefficient matrix is divisible
/// by each of the pairwise non-proportional linear forms alpha_H; when it is
/// and the degrees match, det = c Q(A) with c a nonzero constant, and the
/// component degrees are certified exponents.
pub fn saito_check(thetas: &[Derivation], arr: &Arrangement) -> Result<Option<Exponents>> {
    let l = arr.dim();
    if thetas.len() != l || thetas.iter().any(|t| t.nvars() != l) {
        return Err(Error::DimensionMismatch);
    }
    let field = arr.field();
    let mut degs = Vec::with_capacity(l);
    for t in thetas {
        degs.push(t.homogeneous_degree()?);
        if !is_derivation(t, arr)? {
            return Ok(None);
        }
    }
    let mat: Vec<Vec<MPoly>> = thetas.iter().map(|t| t.comps().to_vec()).collect();
    let det = mpoly_det(&mat, field)?;
    if det.is_zero() || det.total_degree() != Some(arr.len() as u32) {
        return Ok(None);
    }
    for h in arr.hyperplanes() {
        if !det.divisible_by_linear(&h.form(), field)? {
            return Ok(None);
        }
    }
    let exps = Exponents::new(degs);
    if exps.sum() != arr.len() as u64 {
        return Err(Error::Internal("saito degrees do not sum to |A|".into()));
    }
    Ok(Some(exps))
}

/// Terao's factorization: chi(A, t) = prod (t - e_i).
pub fn terao_factor_check(arr: &Arrangement, exps: &Exponents) -> Result<bool> {
    Ok(charpoly_mobius(arr)? == exps.charpoly())
}

fn arr_key(arr: &Arrangement) -> Vec<u16> {
    let mut key = vec![arr.dim() as u16];
    for h in arr.hyperplanes() {
        for c in h.normal() {
            key.push(c.idx() as u16);
        }
    }
    key
}

/// Terao addition-deletion search: A is inductively free when some H has
/// delete(A,H) and restrict(A,H) inductively free with matching exponents.
/// None means no chain was found within the bound, not a disproof of
/// freeness.
pub fn inductive_free(arr: &Arrangement) -> Result<Option<Exponents>> {
    if arr.len() > 15 {
        return Err(Error::TooLarge(format!("inductive search over n={}", arr.len())));
    }
    let mut memo: HashMap<Vec<u16>, Option<Exponents>> = HashMap::new();
    rec_inductive(arr, &mut memo)
}

fn rec_inductive(
    arr: &Arrangement,
    memo: &mut HashMap<Vec<u16>, Option<Exponents>>,
) -> Result<Option<Exponents>> {
    let key = arr_key(arr);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    if arr.is_empty() {
        let out = Some(Exponents::new(vec![0; arr.dim()]));
        memo.insert(key, out.clone());
        return Ok(out);
    }
    let mut found = None;
    for h in arr.hyperplanes() {
        let del = rec_inductive(&arr.delete(h)?, memo)?;
        let Some(del) = del else { continue };
        let res = rec_inductive(&arr.restrict(h)?, memo)?;
        let Some(res) = res else { continue };
        // exp(A') must be exp(A'') plus one element m; then
        // exp(A) = exp(A'') + {m + 1}.
        let mut rest = del.as_slice().to_vec();
        let mut ok = true;
        for &e in res.as_slice() {
            match rest.iter().position(|&x| x == e) {
                Some(at) => {
                    rest.remove(at);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || rest.len() != 1 {
            continue;
        }
        let mut exps = res.as_slice().to_vec();
        exps.push(rest[0] + 1);
        let exps = Exponents::new(exps);
        if exps.sum() != arr.len() as u64 {
            continue;
        }
        found = Some(exps);
        break;
    }
    memo.insert(key, found.clone());
    Ok(found)
}

fn indices_rank(arr: &Arrangement, idxs: &[usize], field: &FieldSpec) -> usize {
    let rows: Vec<Vec<Fe>> = idxs
        .iter()
        .map(|&i| arr.hyperplanes()[i].normal().to_vec())
        .collect();
    linalg::rank(&rows, field)
}

fn pair_condition(
    arr: &Arrangement,
    new: &[usize],
    old: &[usize],
    field: &FieldSpec,
) -> bool {
    for (a, &i) in new.iter().enumerate() {
        for &j in &new[a + 1..] {
            let span = linalg::rref(
                &[
                    arr.hyperplanes()[i].normal().to_vec(),
                    arr.hyperplanes()[j].normal().to_vec(),
                ],
                field,
            );
            let witness = old
                .iter()
                .any(|&k| linalg::in_span(&span, arr.hyperplanes()[k].normal(), field));
            if !witness {
                return false;
            }
        }
    }
    true
}

/// Checks the filtration conditions; on success returns the product
/// t^(l - r) prod (t - |A_i \ A_{i-1}|), asserted equal to chi(A, t).
pub fn supersolvable_verify(arr: &Arrangement, filt: &Filtration) -> Result<Option<IntPoly>> {
    let n = arr.len();
    let field = arr.field();
    let mut prev: Vec<usize> = vec![];
    for level in filt.levels() {
        let mut sorted = level.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != level.len() || level.iter().any(|&i| i >= n) {
            return Err(Error::BadFiltration("bad hyperplane indices".into()));
        }
        if !prev.iter().all(|i| sorted.contains(i)) {
            return Err(Error::BadFiltration("levels not nested".into()));
        }
        prev = sorted;
    }
    let rank = arr.rank();
    if filt.levels().len() != rank {
        return Err(Error::BadFiltration(format!("expected {rank} levels")));
    }
    if rank > 0 && filt.levels()[rank - 1].len() != n {
        return Err(Error::BadFiltration("last level must be the whole arrangement".into()));
    }

    let mut counts = Vec::with_capacity(rank);
    let mut prev: Vec<usize> = vec![];
    for (i, level) in filt.levels().iter().enumerate() {
        let mut sorted = level.clone();
        sorted.sort_unstable();
        if indices_rank(arr, &sorted, field) != i + 1 {
            return Ok(None);
        }
        let new: Vec<usize> = sorted.iter().copied().filter(|i| !prev.contains(i)).collect();
        if !pair_condition(arr, &new, &prev, field) {
            return Ok(None);
        }
        counts.push(new.len());
        prev = sorted;
    }

    let mut prod = IntPoly::from_roots(vec![BigInt::from(0); arr.dim() - rank]);
    for c in counts {
        prod = prod.mul(&IntPoly::linear(BigInt::from(c)));
    }
    if prod != charpoly_mobius(arr)? {
        return Err(Error::Internal("supersolvable product != charpoly".into()));
    }
    Ok(Some(prod))
}

/// Which family a chordal filtration is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Graphic,
    QDef,
    Monomial(usize),
}

fn build_kind(g: &Graph, kind: BasisKind, field: Arc<FieldSpec>) -> Result<Arrangement> {
    Ok(match kind {
        BasisKind::Graphic => Arrangement::graphic(g, field),
        BasisKind::QDef => Arrangement::qdef_graph(g, field),
        BasisKind::Monomial(r) => Arrangement::monomial(g, r, field, false)?,
    })
}

/// The induced-subgraph filtration along a PEO: level i is the arrangement
/// of the subgraph on the first i PEO vertices, mapped into the parent by
/// zero-padding normals. Levels whose rank does not grow (isolated new
/// vertices of graphic arrangements) are dropped, so ranks run 1..rank(A).
/// Returns the parent (built on the PEO-relabelled graph) and the filtration.
pub fn chordal_filtration(
    g: &Graph,
    peo: &Peo,
    kind: BasisKind,
    field: Arc<FieldSpec>,
) -> Result<(Arrangement, Filtration)> {
    let g = peo_data(g, peo)?;
    let l = g.n();
    let parent = build_kind(&g, kind, field.clone())?;
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut prev_rank = 0usize;
    for i in 1..=l {
        let sub = build_kind(&g.induced_prefix(i), kind, field.clone())?;
        let mut idxs = Vec::with_capacity(sub.len());
        for h in sub.hyperplanes() {
            let mut normal = h.normal().to_vec();
            normal.resize(l, field.zero());
            let padded = Hyperplane::new(normal, &field)?;
            let at = parent
                .hyperplanes()
                .binary_search(&padded)
                .map_err(|_| Error::Internal("level hyperplane missing from parent".into()))?;
            idxs.push(at);
        }
        let r = indices_rank(&parent, &idxs, &field);
        if r == prev_rank {
            continue;
        }
        if r != prev_rank + 1 {
            return Err(Error::Internal("filtration rank jump".into()));
        }
        prev_rank = r;
        levels.push(idxs);
    }
    Ok((parent, Filtration::new(levels)))
}

/// Exhaustive backtracking over rank-decreasing chains. None is a proof of
/// non-supersolvability within the stated bounds.
pub fn supersolvable_search(arr: &Arrangement) -> Result<Option<Filtration>> {
    let n = arr.len();
    if n > 12 || arr.rank() > 4 {
        return Err(Error::TooLarge(format!("supersolvable search n={n} rank={}", arr.rank())));
    }
    let field = arr.field().clone();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Option<Vec<u64>>> = HashMap::new();

    fn mask_indices(mask: u64) -> Vec<usize> {
        (0..64).filter(|&i| mask >> i & 1 == 1).collect()
    }

    fn solve(
        mask: u64,
        arr: &Arrangement,
        field: &FieldSpec,
        memo: &mut HashMap<u64, Option<Vec<u64>>>,
    ) -> Option<Vec<u64>> {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let idxs = mask_indices(mask);
        let r = indices_rank(arr, &idxs, field);
        let out = if r == 0 {
            Some(vec![])
        } else if r == 1 {
            Some(vec![mask])
        } else {
            let mut found = None;
            // Iterate proper submasks of mask.
            let mut sub = (mask - 1) & mask;
            loop {
                let sub_idxs = mask_indices(sub);
                if indices_rank(arr, &sub_idxs, field) == r - 1 {
                    let new: Vec<usize> =
                        idxs.iter().copied().filter(|i| !sub_idxs.contains(i)).collect();
                    if pair_condition(arr, &new, &sub_idxs, field) {
                        if let Some(mut chain) = solve(sub, arr, field, memo) {
                            chain.push(mask);
                            found = Some(chain);
                            break;
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            found
        };
        memo.insert(mask, out.clone());
        out
    }

    let chain = solve(full, arr, &field, &mut memo);
    Ok(chain.map(|masks| Filtration::new(masks.into_iter().map(mask_indices).collect())))
}
