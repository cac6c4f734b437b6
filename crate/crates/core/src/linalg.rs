//! Row reduction over a finite field, shared by the arrangement and lattice
//! code. Matrices are tiny (at most a handful of rows of length <= 8).

use crate::gf::{Fe, FieldSpec};

/// Reduced row echelon form: rows sorted by pivot column, pivots equal to 1,
/// zero entries above and below each pivot. Zero rows are dropped, so the
/// result is a canonical basis of the row span.
pub fn rref(rows: &[Vec<Fe>], field: &FieldSpec) -> Vec<Vec<Fe>> {
    let mut out: Vec<Vec<Fe>> = Vec::new();
    for row in rows {
        add_row(&mut out, row.clone(), field);
    }
    out
}

/// Reduces `row` against the RREF basis; if independent, inserts it and
/// restores full reduction. Returns true when the rank grew.
pub fn add_row(basis: &mut Vec<Vec<Fe>>, mut row: Vec<Fe>, field: &FieldSpec) -> bool {
    for b in basis.iter() {
        let p = pivot(b).unwrap();
        if !row[p].is_zero() {
            let f = row[p];
            for (r, &bv) in row.iter_mut().zip(b) {
                *r = field.sub(*r, field.mul(f, bv));
            }
        }
    }
    let Some(p) = pivot(&row) else { return false };
    let inv = field.inv(row[p]).unwrap();
    for r in row.iter_mut() {
        *r = field.mul(*r, inv);
    }
    // Eliminate the new pivot from existing rows, keep rows ordered by pivot.
    for b in basis.iter_mut() {
        if !b[p].is_zero() {
            let f = b[p];
            for (bv, &rv) in b.iter_mut().zip(&row) {
                *bv = field.sub(*bv, field.mul(f, rv));
            }
        }
    }
    let at = basis
        .iter()
        .position(|b| pivot(b).unwrap() > p)
        .unwrap_or(basis.len());
    basis.insert(at, row);
    true
}

fn pivot(row: &[Fe]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

pub fn rank(rows: &[Vec<Fe>], field: &FieldSpec) -> usize {
    rref(rows, field).len()
}

/// True when v lies in the row span of an RREF basis.
pub fn in_span(basis: &[Vec<Fe>], v: &[Fe], field: &FieldSpec) -> bool {
    let mut row = v.to_vec();
    for b in basis {
        let p = pivot(b).unwrap();
        if !row[p].is_zero() {
            let f = row[p];
            for (r, &bv) in row.iter_mut().zip(b) {
                *r = field.sub(*r, field.mul(f, bv));
            }
        }
    }
    row.iter().all(|c| c.is_zero())
}

/// Basis of the kernel of a single linear form: for each non-pivot
/// coordinate j, the vector e_j - n_j * e_pivot (deterministic, parametrized
/// by the pivot-free coordinates).
pub fn kernel_basis_of_form(normal: &[Fe], field: &FieldSpec) -> Vec<Vec<Fe>> {
    let p = pivot(normal).expect("zero normal");
    let inv = field.inv(normal[p]).unwrap();
    let l = normal.len();
    let mut out = Vec::with_capacity(l - 1);
    for j in 0..l {
        if j == p {
            continue;
        }
        let mut v = vec![field.zero(); l];
        v[j] = field.one();
        v[p] = field.neg(field.mul(inv, normal[j]));
        out.push(v);
    }
    out
}

/// Canonical byte key of an RREF basis (rank, then element indices row by
/// row).
pub fn span_key(basis: &[Vec<Fe>]) -> Vec<u16> {
    let mut key = Vec::with_capacity(1 + basis.len() * basis.first().map_or(0, |r| r.len()));
    key.push(basis.len() as u16);
    for row in basis {
        for &c in row {
            key.push(c.idx() as u16);
        }
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn rref_canonical() {
        let f = FieldSpec::new(5, 1).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let a = rref(&[v(&[2, 4, 0]), v(&[1, 2, 1])], &f);
        let b = rref(&[v(&[1, 2, 1]), v(&[3, 6, 2]), v(&[1, 2, 0])], &f);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert!(in_span(&a, &v(&[4, 8, 3]), &f));
        assert!(!in_span(&a, &v(&[0, 1, 0]), &f));
    }

    #[test]
    fn kernel_of_form() {
        let f = FieldSpec::new(5, 1).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let n = v(&[1, 3, 2]);
        let ker = kernel_basis_of_form(&n, &f);
        assert_eq!(ker.len(), 2);
        for b in &ker {
            let dot = b
                .iter()
                .zip(&n)
                .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&ker, &f), 2);
    }
}
