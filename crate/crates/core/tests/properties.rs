//! Randomized invariant checks over small fields, graphs, and arrangements.

use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

use qarr::arrangement::{Arrangement, Hyperplane};
use qarr::charpoly::{charpoly_mobius, charpoly_subsets};
use qarr::combinat::{chromatic_brute, chromatic_poly, Graph};
use qarr::gf::FieldSpec;
use qarr::polyalg::IntPoly;

const FIELDS: &[(u64, usize)] = &[(2, 1), (3, 1), (2, 2), (5, 1)];

fn arrangements() -> impl Strategy<Value = Arrangement> {
    (0..FIELDS.len(), 2usize..=3, prop::collection::vec(any::<u64>(), 1..=5)).prop_map(
        |(fi, dim, seeds)| {
            let (p, e) = FIELDS[fi];
            let field = Arc::new(FieldSpec::new(p, e).unwrap());
            let q = field.q() as u64;
            let elems: Vec<_> = field.elements().collect();
            let hs: Vec<_> = seeds.into_iter().filter_map(|mut s| {
                let mut normal = Vec::with_capacity(dim);
                for _ in 0..dim {
                    normal.push(elems[(s % q) as usize]);
                    s /= q;
                }
                Hyperplane::new(normal, &field).ok()
            }).collect();
            Arrangement::from_hyperplanes(field, dim, hs)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_vanishes_at_one(arr in arrangements()) {
        prop_assume!(!arr.is_empty());
        let chi = charpoly_mobius(&arr).unwrap();
        prop_assert_eq!(chi.eval_i64(1), BigInt::from(0));
    }

    #[test]
    fn mobius_matches_subsets(arr in arrangements()) {
        let via_mobius = charpoly_mobius(&arr).unwrap();
        let via_subsets = charpoly_subsets(&arr).unwrap();
        prop_assert_eq!(via_mobius.coeffs(), via_subsets.coeffs());
    }

    #[test]
    fn deletion_restriction(arr in arrangements()) {
        prop_assume!(!arr.is_empty());
        let h = arr.hyperplanes()[0].clone();
        let chi = charpoly_mobius(&arr).unwrap();
        let deleted = charpoly_mobius(&arr.delete(&h).unwrap()).unwrap();
        let restricted = charpoly_mobius(&arr.restrict(&h).unwrap()).unwrap();
        for t in -3i64..=3 {
            prop_assert_eq!(
                chi.eval_i64(t),
                deleted.eval_i64(t) - restricted.eval_i64(t)
            );
        }
    }

    #[test]
    fn json_round_trip(arr in arrangements()) {
        let back = Arrangement::from_json(&arr.to_json()).unwrap();
        prop_assert_eq!(&back, &arr);
        prop_assert_eq!(back.to_json(), arr.to_json());
    }

    #[test]
    fn hyperplane_scaling_invariance(arr in arrangements(), scale in any::<u64>()) {
        prop_assume!(!arr.is_empty());
        let field = arr.field().clone();
        let units = field.units();
        let c = units[(scale % units.len() as u64) as usize];
        let h = &arr.hyperplanes()[0];
        let scaled: Vec<_> = h.normal().iter().map(|&a| field.mul(a, c)).collect();
        prop_assert_eq!(&Hyperplane::new(scaled, &field).unwrap(), h);
    }

    #[test]
    fn compose_affine_eval(coeffs in prop::collection::vec(-9i64..=9, 1..=5),
                           c in -4i64..=4, d in 1i64..=4, s in -5i64..=5) {
        let p = IntPoly::from_i64_coeffs(&coeffs);
        let deg = p.coeffs().len().saturating_sub(1) as u32;
        let composed = p.compose_affine(c, d);
        prop_assert_eq!(
            composed.eval_i64(c + d * s),
            BigInt::from(d).pow(deg) * p.eval_i64(s)
        );
    }

    #[test]
    fn chromatic_matches_brute(n in 1usize..=5, mask in any::<u64>()) {
        let g = Graph::from_edge_mask(n, mask);
        let chi = chromatic_poly(&g);
        for k in 1usize..=4 {
            prop_assert_eq!(
                chi.eval_i64(k as i64),
                BigInt::from(chromatic_brute(&g, k).unwrap())
            );
        }
    }
}
