//! Graphs, simplicial complexes, chordality and chromatic polynomials.

mod complex;
mod graph;

pub use complex::SimplicialComplex;
pub use graph::{
    ascending_set, chordal_charpoly_graphic, chordal_charpoly_qdef, chromatic_brute,
    chromatic_poly, lower_neighbors, mcs_peo, Graph, Peo,
};
