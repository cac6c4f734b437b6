//! Central hyperplane arrangements over a finite field, with all the
//! builders used in this crate: graphic arrangements, q-deformations of
//! simplicial complexes and graphs, the 1-dimensional family, graphic
//! monomial arrangements, and the full arrangement.

use crate::combinat::{Graph, SimplicialComplex};
use crate::gf::{Fe, FieldSpec};
use crate::linalg;
use crate::polyalg::MPoly;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A projectively normalized normal vector: the first nonzero coordinate is
/// 1, so hyperplane equality is plain vector equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vec<Fe>,
}

impl Hyperplane {
    pub fn new(normal: Vec<Fe>, field: &FieldSpec) -> Result<Hyperplane> {
        let first = normal
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroLinearForm)?;
        let inv = field.inv(normal[first])?;
        let normal = normal.into_iter().map(|c| field.mul(c, inv)).collect();
        Ok(Hyperplane { normal })
    }

    pub fn normal(&self) -> &[Fe] {
        &self.normal
    }

    pub fn form(&self) -> MPoly {
        MPoly::linear(&self.normal)
    }

    /// The coordinate hyperplane x_i = 0.
    pub fn coordinate(dim: usize, i: usize, field: &FieldSpec) -> Hyperplane {
        let mut normal = vec![field.zero(); dim];
        normal[i] = field.one();
        Hyperplane { normal }
    }
}

/// An ordered, deduplicated central arrangement. Hyperplanes are sorted by
/// their normalized normals, so identical inputs produce identical output.
#[derive(Clone, Debug)]
pub struct Arrangement {
    field: Arc<FieldSpec>,
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn from_hyperplanes(
        field: Arc<FieldSpec>,
        dim: usize,
        hs: impl IntoIterator<Item = Hyperplane>,
    ) -> Arrangement {
        let set: BTreeSet<Hyperplane> = hs.into_iter().collect();
        for h in &set {
            assert_eq!(h.normal.len(), dim, "hyperplane dimension mismatch");
        }
        Arrangement { field, dim, hyperplanes: set.into_iter().collect() }
    }

    pub fn empty(field: Arc<FieldSpec>, dim: usize) -> Arrangement {
        Arrangement { field, dim, hyperplanes: vec![] }
    }

    /// Graphic arrangement: one hyperplane x_i - x_j per edge.
    pub fn graphic(g: &Graph, field: Arc<FieldSpec>) -> Arrangement {
        let dim = g.n();
        let hs: Vec<Hyperplane> = g
            .edges()
            .map(|(i, j)| {
                let mut normal = vec![field.zero(); dim];
                normal[i] = field.one();
                normal[j] = field.neg(field.one());
                Hyperplane::new(normal, &field).unwrap()
            })
            .collect();
        Arrangement::from_hyperplanes(field, dim, hs)
    }

    /// q-deformation of a simplicial complex: for each face, every kernel of
    /// a linear form with unit coefficients supported on the face.
    pub fn qdef_complex(delta: &SimplicialComplex, field: Arc<FieldSpec>) -> Arrangement {
        let dim = delta.n();
        let units = field.units();
        let mut hs = BTreeSet::new();
        for face in delta.faces() {
            let verts = SimplicialComplex::face_vertices(face);
            let r = verts.len();
            let mut choice = vec![0usize; r];
            loop {
                let mut normal = vec![field.zero(); dim];
                for (slot, &v) in verts.iter().enumerate() {
                    normal[v] = units[choice[slot]];
                }
                hs.insert(Hyperplane::new(normal, &field).unwrap());
                // Next unit tuple.
                let mut carry = 0;
                loop {
                    if carry == r {
                        break;
                    }
                    choice[carry] += 1;
                    if choice[carry] < units.len() {
                        break;
                    }
                    choice[carry] = 0;
                    carry += 1;
                }
                if carry == r {
                    break;
                }
            }
        }
        Arrangement::from_hyperplanes(field, dim, hs)
    }

    /// q-deformation of a graph via its clique complex.
    pub fn qdef_graph(g: &Graph, field: Arc<FieldSpec>) -> Arrangement {
        Arrangement::qdef_complex(&SimplicialComplex::clique_complex(g), field)
    }

    /// The 1-dimensional family: all coordinate hyperplanes plus, per edge,
    /// the q-1 hyperplanes x_i - a x_j with a a unit.
    pub fn sgq(g: &Graph, field: Arc<FieldSpec>) -> Arrangement {
        Arrangement::qdef_complex(&SimplicialComplex::one_dimensional(g), field)
    }

    /// Graphic monomial arrangement: per edge the r hyperplanes
    /// x_i - z^k x_j (z a primitive r-th root of unity), plus all coordinate
    /// hyperplanes unless simplified.
    pub fn monomial(
        g: &Graph,
        r: usize,
        field: Arc<FieldSpec>,
        simplified: bool,
    ) -> Result<Arrangement> {
        let z = field.primitive_root(r)?;
        let dim = g.n();
        let mut hs = BTreeSet::new();
        if !simplified {
            for i in 0..dim {
                hs.insert(Hyperplane::coordinate(dim, i, &field));
            }
        }
        for (i, j) in g.edges() {
            let mut zk = field.one();
            for _ in 1..=r {
                zk = field.mul(zk, z);
                let mut normal = vec![field.zero(); dim];
                normal[i] = field.one();
                normal[j] = field.neg(zk);
                hs.insert(Hyperplane::new(normal, &field)?);
            }
        }
        Ok(Arrangement::from_hyperplanes(field, dim, hs))
    }

    /// The smallest prime field containing a primitive r-th root of unity.
    pub fn monomial_auto_field(r: usize) -> Result<FieldSpec> {
        assert!(r >= 1);
        let mut p = r as u64 + 1;
        loop {
            if let Ok(f) = FieldSpec::new(p, 1) {
                if (f.q() - 1) % r == 0 {
                    return Ok(f);
                }
            }
            p += r as u64;
        }
    }

    /// One hyperplane per projective point of the dual space.
    pub fn full(dim: usize, field: Arc<FieldSpec>) -> Result<Arrangement> {
        if dim > 5 || field.q() > 5 {
            return Err(Error::TooLarge(format!("full arrangement dim={dim} q={}", field.q())));
        }
        let q = field.q();
        let mut hs = BTreeSet::new();
        let total = q.pow(dim as u32);
        for code in 1..total {
            let mut normal = Vec::with_capacity(dim);
            let mut c = code;
            for _ in 0..dim {
                let idx = c % q;
                c /= q;
                normal.push(field.elements().nth(idx).unwrap());
            }
            hs.insert(Hyperplane::new(normal, &field)?);
        }
        Ok(Arrangement::from_hyperplanes(field, dim, hs))
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn contains(&self, h: &Hyperplane) -> bool {
        self.hyperplanes.binary_search(h).is_ok()
    }

    /// Set equality of the hyperplanes (fields must agree in (p, e)).
    pub fn same_hyperplanes(&self, other: &Arrangement) -> bool {
        self.dim == other.dim
            && self.field.p() == other.field.p()
            && self.field.e() == other.field.e()
            && self.hyperplanes.len() == other.hyperplanes.len()
            && self
                .hyperplanes
                .iter()
                .zip(&other.hyperplanes)
                .all(|(a, b)| {
                    a.normal
                        .iter()
                        .zip(&b.normal)
                        .all(|(x, y)| x.idx() == y.idx())
                })
    }

    pub fn delete(&self, h: &Hyperplane) -> Result<Arrangement> {
        let at = self
            .hyperplanes
            .binary_search(h)
            .map_err(|_| Error::HyperplaneNotPresent)?;
        let mut hs = self.hyperplanes.clone();
        hs.remove(at);
        Ok(Arrangement { field: self.field.clone(), dim: self.dim, hyperplanes: hs })
    }

    pub fn insert(&self, h: Hyperplane) -> Arrangement {
        let mut hs: BTreeSet<Hyperplane> = self.hyperplanes.iter().cloned().collect();
        hs.insert(h);
        Arrangement {
            field: self.field.clone(),
            dim: self.dim,
            hyperplanes: hs.into_iter().collect(),
        }
    }

    /// The arrangement induced on h: every other hyperplane meets h in a
    /// hyperplane of h, expressed in the kernel-basis coordinates of h.
    pub fn restrict(&self, h: &Hyperplane) -> Result<Arrangement> {
        if !self.contains(h) {
            return Err(Error::HyperplaneNotPresent);
        }
        let f = &self.field;
        let basis = linalg::kernel_basis_of_form(&h.normal, f);
        let mut hs = BTreeSet::new();
        for l in &self.hyperplanes {
            if l == h {
                continue;
            }
            let coords: Vec<Fe> = basis
                .iter()
                .map(|b| {
                    b.iter()
                        .zip(&l.normal)
                        .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                })
                .collect();
            if coords.iter().all(|c| c.is_zero()) {
                // l restricted to h is all of h; only possible for l = h.
                continue;
            }
            hs.insert(Hyperplane::new(coords, f)?);
        }
        Ok(Arrangement::from_hyperplanes(f.clone(), self.dim - 1, hs))
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Fe>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        linalg::rank(&rows, &self.field)
    }

    /// Product of the normalized linear forms, multiplied in stored order.
    pub fn defining_poly(&self) -> MPoly {
        let mut acc = MPoly::one(self.dim, &self.field);
        for h in &self.hyperplanes {
            acc = acc.mul(&h.form(), &self.field);
        }
        acc
    }

    pub fn to_json(&self) -> String {
        let normals = self
            .hyperplanes
            .iter()
            .map(|h| h.normal.iter().map(|&c| self.field.coeffs(c)).collect())
            .collect();
        let doc = ArrangementJson {
            p: self.field.p(),
            e: self.field.e(),
            dim: self.dim,
            normals,
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Arrangement> {
        let doc: ArrangementJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field = Arc::new(FieldSpec::new(doc.p, doc.e)?);
        let mut hs = Vec::new();
        for normal in &doc.normals {
            if normal.len() != doc.dim {
                return Err(Error::DimensionMismatch);
            }
            let row: Result<Vec<Fe>> =
                normal.iter().map(|coeffs| field.from_coeffs(coeffs)).collect();
            hs.push(Hyperplane::new(row?, &field)?);
        }
        Ok(Arrangement::from_hyperplanes(field, doc.dim, hs))
    }
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Arrangement) -> bool {
        self.same_hyperplanes(other)
    }
}

impl Eq for Arrangement {}

/// Wire format: field elements as coefficient vectors (low degree first).
#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    p: u64,
    e: usize,
    dim: usize,
    normals: Vec<Vec<Vec<u64>>>,
}
