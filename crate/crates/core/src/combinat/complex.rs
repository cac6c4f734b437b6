//! Downward-closed simplicial complexes on {0, .., n-1}, faces as bitmasks.

use super::Graph;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Nonempty faces only; always downward closed and containing every
/// singleton. n <= 31 suffices for all desk-scale work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<u32>,
}

fn close_downward(faces: &mut BTreeSet<u32>) {
    let mut stack: Vec<u32> = faces.iter().copied().collect();
    while let Some(f) = stack.pop() {
        let mut bits = f;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            let sub = f ^ b;
            if sub != 0 && faces.insert(sub) {
                stack.push(sub);
            }
        }
    }
}

impl SimplicialComplex {
    /// Downward closure of the given facets together with all singletons.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        assert!(n <= 31);
        let mut faces = BTreeSet::new();
        for f in facets {
            let mut mask = 0u32;
            for &v in f {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                mask |= 1 << v;
            }
            if mask != 0 {
                faces.insert(mask);
            }
        }
        for v in 0..n {
            faces.insert(1 << v);
        }
        close_downward(&mut faces);
        Ok(SimplicialComplex { n, faces })
    }

    /// The (k-1)-skeleton of the (l-1)-simplex: all nonempty subsets of
    /// size <= k.
    pub fn skeleton(l: usize, k: usize) -> Result<SimplicialComplex> {
        if k < 1 || k > l {
            return Err(Error::BadSkeleton);
        }
        assert!(l <= 31);
        let faces = (1u32..1 << l)
            .filter(|m| m.count_ones() as usize <= k)
            .collect();
        Ok(SimplicialComplex { n: l, faces })
    }

    /// All cliques of the graph (singletons included).
    pub fn clique_complex(g: &Graph) -> SimplicialComplex {
        let n = g.n();
        assert!(n <= 20);
        let mut faces = BTreeSet::new();
        'mask: for mask in 1u32..1 << n {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            for (a, &u) in verts.iter().enumerate() {
                for &v in &verts[a + 1..] {
                    if !g.has_edge(u, v) {
                        continue 'mask;
                    }
                }
            }
            faces.insert(mask);
        }
        SimplicialComplex { n, faces }
    }

    /// A graph viewed as a 1-dimensional complex: vertices and edges.
    pub fn one_dimensional(g: &Graph) -> SimplicialComplex {
        let mut faces: BTreeSet<u32> = (0..g.n()).map(|v| 1u32 << v).collect();
        for (u, v) in g.edges() {
            faces.insert(1 << u | 1 << v);
        }
        SimplicialComplex { n: g.n(), faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> impl Iterator<Item = u32> + '_ {
        self.faces.iter().copied()
    }

    pub fn has_face(&self, mask: u32) -> bool {
        self.faces.contains(&mask)
    }

    pub fn face_vertices(mask: u32) -> Vec<usize> {
        (0..32).filter(|&v| mask >> v & 1 == 1).collect()
    }

    pub fn is_maximal(&self, mask: u32) -> bool {
        self.has_face(mask)
            && !self.faces.iter().any(|&f| f != mask && f & mask == mask)
    }

    /// 1-skeleton.
    pub fn underlying_graph(&self) -> Graph {
        let edges = self.faces.iter().filter(|f| f.count_ones() == 2).map(|&f| {
            let vs = SimplicialComplex::face_vertices(f);
            (vs[0], vs[1])
        });
        Graph::new(self.n, edges).unwrap()
    }

    fn edge_mask(&self, e: (usize, usize)) -> Result<u32> {
        if e.0 >= self.n {
            return Err(Error::VertexOutOfRange(e.0));
        }
        if e.1 >= self.n {
            return Err(Error::VertexOutOfRange(e.1));
        }
        if e.0 == e.1 {
            return Err(Error::LoopEdge);
        }
        Ok(1u32 << e.0 | 1 << e.1)
    }

    /// Removes the edge e, which must be a maximal face.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<SimplicialComplex> {
        let mask = self.edge_mask(e)?;
        if !self.has_face(mask) {
            return Err(Error::InvalidEdge(format!("no face {{{}, {}}}", e.0, e.1)));
        }
        if !self.is_maximal(mask) {
            return Err(Error::NonMaximalFace);
        }
        let mut faces = self.faces.clone();
        faces.remove(&mask);
        Ok(SimplicialComplex { n: self.n, faces })
    }

    /// Identifies the endpoints of e (a maximal face) in every face, keeping
    /// the smaller label and relabelling down to n-1 vertices.
    pub fn contract_edge(&self, e: (usize, usize)) -> Result<SimplicialComplex> {
        let mask = self.edge_mask(e)?;
        if !self.has_face(mask) {
            return Err(Error::InvalidEdge(format!("no face {{{}, {}}}", e.0, e.1)));
        }
        if !self.is_maximal(mask) {
            return Err(Error::NonMaximalFace);
        }
        let (keep, gone) = (e.0.min(e.1), e.0.max(e.1));
        let relabel = |v: usize| -> usize {
            if v == gone {
                keep
            } else if v > gone {
                v - 1
            } else {
                v
            }
        };
        let mut faces = BTreeSet::new();
        for &f in &self.faces {
            let mut img = 0u32;
            for v in SimplicialComplex::face_vertices(f) {
                img |= 1 << relabel(v);
            }
            faces.insert(img);
        }
        close_downward(&mut faces);
        Ok(SimplicialComplex { n: self.n - 1, faces })
    }
}
