//! Acceptance gate: one test per criterion, each printing a PASS line once
//! every exact check in it has gone through.

use num_bigint::BigInt;
use num_traits::Zero;
use qarr::arrangement::Arrangement;
use qarr::charpoly::{
    charpoly_mobius, charpoly_subsets, complement_count, skeleton_charpoly_formula,
    verify_congruence, verify_identity_sgq, verify_q_delcon, verify_q_delcon_monomial,
};
use qarr::cli::delta53_parametric;
use qarr::combinat::{mcs_peo, Graph, SimplicialComplex};
use qarr::freeness::{
    basis_graphic, basis_monomial, basis_qdef, chordal_filtration, saito_check,
    supersolvable_search, supersolvable_verify, terao_factor_check, BasisKind, Exponents,
};
use qarr::gf::FieldSpec;
use qarr::polyalg::IntPoly;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::Arc;

fn field(q: u64) -> Arc<FieldSpec> {
    let (p, e) = match q {
        4 => (2, 2),
        8 => (2, 3),
        9 => (3, 2),
        _ => (q, 1),
    };
    Arc::new(FieldSpec::new(p, e).unwrap())
}

fn delta53() -> SimplicialComplex {
    SimplicialComplex::skeleton(5, 3).unwrap()
}

/// Every labeled graph on 1..=n vertices.
fn graphs_up_to(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for k in 1..=n {
        let pairs = k * (k - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            out.push(Graph::from_edge_mask(k, mask));
        }
    }
    out
}

fn chordal_corpus() -> Vec<Graph> {
    graphs_up_to(5)
        .into_iter()
        .filter(|g| mcs_peo(g).is_some())
        .collect()
}

/// 50 seeded random downward-closed complexes on <= 5 vertices with faces of
/// size <= 3.
fn random_complexes() -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut out = Vec::with_capacity(50);
    while out.len() < 50 {
        let n = rng.gen_range(1..=5usize);
        let count = rng.gen_range(0..=4usize);
        let mut facets = Vec::with_capacity(count);
        for _ in 0..count {
            let size = rng.gen_range(1..=3.min(n));
            let mut face = Vec::new();
            while face.len() < size {
                let v = rng.gen_range(0..n);
                if !face.contains(&v) {
                    face.push(v);
                }
            }
            facets.push(face);
        }
        out.push(SimplicialComplex::from_facets(n, &facets).unwrap());
    }
    out
}

#[test]
fn criterion_01_delta53_table() {
    let delta = delta53();
    let quadratics = [(4u64, [-104i64, 2722]), (5, [-174, 7661])];
    for q in [2u64, 3, 4, 5] {
        let chi = charpoly_mobius(&Arrangement::qdef_complex(&delta, field(q))).unwrap();
        let expected = match q {
            2 => IntPoly::from_roots([1, 2, 4, 8, 10].map(BigInt::from)),
            3 => IntPoly::from_roots([1, 3, 9, 25, 27].map(BigInt::from)),
            _ => {
                let [b, c] = quadratics.iter().find(|(qq, _)| *qq == q).unwrap().1;
                IntPoly::from_roots([1, q as i64, (q * q) as i64].map(BigInt::from))
                    .mul(&IntPoly::from_i64_coeffs(&[c, b, 1]))
            }
        };
        assert_eq!(chi, expected, "q={q}");
        if q >= 4 {
            let split = chi.int_root_split();
            assert_eq!(split.roots.len(), 3, "q={q}: only the three linear factors split");
            assert_eq!(split.residual.degree(), Some(2));
            assert!(split.residual.int_root_split().roots.is_empty());
        }
    }
    println!("PASS [1] delta_{{5,3}} table at q=2,3,4,5 with non-splitting quadratics");
}

#[test]
fn criterion_02_parametric_quintic() {
    let delta = delta53();
    for q in [2u64, 3, 4, 5] {
        let chi = charpoly_mobius(&Arrangement::qdef_complex(&delta, field(q))).unwrap();
        assert_eq!(chi, delta53_parametric(q as i64), "q={q}");
    }
    println!("PASS [2] parametric quintic matches the computed quintic at q=2,3,4,5");
}

#[test]
fn criterion_03_skeleton_formula() {
    for l in [2usize, 3, 4] {
        for q in [2u64, 3, 4] {
            let delta = SimplicialComplex::skeleton(l, l - 1).unwrap();
            let chi = charpoly_mobius(&Arrangement::qdef_complex(&delta, field(q))).unwrap();
            assert_eq!(chi, skeleton_charpoly_formula(l, q), "l={l} q={q}");
            let at = BigInt::from(q).pow(l as u32 - 2);
            assert!(chi.eval(&at).is_zero(), "l={l} q={q}: chi(q^(l-2)) != 0");
        }
    }
    println!("PASS [3] skeleton closed form and chi(q^(l-2)) = 0 for l=2..4, q=2..4");
}

#[test]
fn criterion_04_prop43_all_graphs_on_5() {
    let graphs: Vec<Graph> = (0u64..1 << 10).map(|m| Graph::from_edge_mask(5, m)).collect();
    for q in [2u64, 3] {
        let f = field(q);
        let bad: Vec<usize> = graphs
            .par_iter()
            .enumerate()
            .filter_map(|(i, g)| {
                let rep = verify_identity_sgq(g, f.clone()).unwrap();
                (!rep.holds).then_some(i)
            })
            .collect();
        assert!(bad.is_empty(), "q={q}: failing graph masks {bad:?}");
    }
    println!("PASS [4] chi(S_G^q) = (q-1)^5 chi(G,(t-1)/(q-1)) for all 1024 graphs, q=2,3");
}

#[test]
fn criterion_05_congruence_random_complexes() {
    let complexes = random_complexes();
    let cases: Vec<(usize, u64, u32)> = (0..complexes.len())
        .flat_map(|i| {
            [2u64, 3, 4]
                .into_iter()
                .flat_map(move |q| (0..=2u32).map(move |k| (i, q, k)))
        })
        .collect();
    cases.par_iter().for_each(|&(i, q, k)| {
        let rep = verify_congruence(&complexes[i], field(q), k).unwrap();
        assert!(rep.divisible, "complex#{i} q={q} k={k}: divisibility by (q-1)^l fails");
        assert!(rep.holds, "complex#{i} q={q} k={k}: congruence fails");
    });
    println!("PASS [5] congruence mod q-1 for 50 random complexes, q=2,3,4, k=0,1,2");
}

#[test]
fn criterion_06_q_deletion_contraction() {
    // Complex form over every maximal edge of the random corpus.
    let complexes = random_complexes();
    complexes.par_iter().enumerate().for_each(|(i, delta)| {
        let g = delta.underlying_graph();
        for (u, v) in g.edges() {
            if !delta.is_maximal(1 << u | 1 << v) {
                continue;
            }
            for q in [2u64, 3, 4] {
                let rep = verify_q_delcon(delta, (u, v), field(q)).unwrap();
                assert!(rep.holds, "complex#{i} e=({u},{v}) q={q}");
            }
        }
    });
    // r-version over every edge of every graph on <= 5 vertices.
    let fields = [field(2), field(3), field(7)];
    let graphs = graphs_up_to(5);
    graphs.par_iter().for_each(|g| {
        for (r, f) in [(1usize, &fields[0]), (2, &fields[1]), (3, &fields[2])] {
            for (u, v) in g.edges() {
                let rep = verify_q_delcon_monomial(g, (u, v), r, f.clone()).unwrap();
                assert!(rep.holds, "n={} mask={} e=({u},{v}) r={r}", g.n(), g.edge_mask());
            }
        }
    });
    println!("PASS [6] q-deletion-contraction on the complex corpus and r-version on all graphs <= 5");
}

/// The named arrangements the oracle criteria sweep.
fn oracle_corpus() -> Vec<(String, Arrangement)> {
    let mut out = Vec::new();
    for g in graphs_up_to(4) {
        let tag = format!("n={} mask={}", g.n(), g.edge_mask());
        out.push((format!("graphic {tag}"), Arrangement::graphic(&g, field(7))));
        for q in [2u64, 3] {
            out.push((format!("sgq q={q} {tag}"), Arrangement::sgq(&g, field(q))));
            out.push((format!("qdef q={q} {tag}"), Arrangement::qdef_graph(&g, field(q))));
        }
        for (r, q) in [(1usize, 2u64), (2, 3), (3, 7)] {
            out.push((
                format!("monomial r={r} {tag}"),
                Arrangement::monomial(&g, r, field(q), false).unwrap(),
            ));
        }
    }
    for (i, delta) in random_complexes().into_iter().enumerate() {
        for q in [2u64, 3] {
            out.push((format!("complex#{i} q={q}"), Arrangement::qdef_complex(&delta, field(q))));
        }
    }
    out
}

#[test]
fn criterion_07_triple_oracle() {
    let corpus = oracle_corpus();
    corpus.par_iter().for_each(|(name, arr)| {
        let chi = charpoly_mobius(arr).unwrap();
        if arr.len() <= 14 {
            assert_eq!(chi, charpoly_subsets(arr).unwrap(), "{name}: subset oracle");
        }
        for k in 1..=2usize {
            let bound = (arr.field().q() as u128).pow((k * arr.dim()) as u32);
            if bound > 100_000_000 {
                continue;
            }
            let count = complement_count(arr, k).unwrap();
            let qk = BigInt::from(arr.field().q()).pow(k as u32);
            assert_eq!(chi.eval(&qk), BigInt::from(count), "{name}: point count k={k}");
        }
    });
    println!("PASS [7] Mobius = subsets (n<=14) and chi(q^k) = point count on the corpus");
}

#[test]
fn criterion_08_chordal_freeness_suite() {
    let corpus = chordal_corpus();
    corpus.par_iter().for_each(|g| {
        let peo = mcs_peo(g).unwrap();
        let relabeled = g.relabel_by_peo(&peo);
        let tag = format!("n={} mask={}", g.n(), g.edge_mask());

        let f7 = field(7);
        let basis = basis_graphic(g, &peo, &f7).unwrap();
        let arr = Arrangement::graphic(&relabeled, f7.clone());
        let graphic_exps = saito_check(&basis, &arr)
            .unwrap()
            .unwrap_or_else(|| panic!("{tag}: graphic saito fails"));
        assert_eq!(graphic_exps.sum(), arr.len() as u64, "{tag}");
        assert!(terao_factor_check(&arr, &graphic_exps).unwrap(), "{tag}: graphic terao");

        for q in [2u64, 3] {
            let f = field(q);
            let basis = basis_qdef(g, &peo, &f).unwrap();
            let arr = Arrangement::qdef_graph(&relabeled, f.clone());
            let exps = saito_check(&basis, &arr)
                .unwrap()
                .unwrap_or_else(|| panic!("{tag}: qdef q={q} saito fails"));
            assert_eq!(exps.sum(), arr.len() as u64, "{tag} q={q}");
            assert!(terao_factor_check(&arr, &exps).unwrap(), "{tag}: qdef q={q} terao");
        }

        for (r, q) in [(1usize, 2u64), (2, 3), (3, 7)] {
            let f = field(q);
            let basis = basis_monomial(g, &peo, r, &f).unwrap();
            let arr = Arrangement::monomial(&relabeled, r, f.clone(), false).unwrap();
            let exps = saito_check(&basis, &arr)
                .unwrap()
                .unwrap_or_else(|| panic!("{tag}: monomial r={r} saito fails"));
            assert_eq!(exps.sum(), arr.len() as u64, "{tag} r={r}");
            assert!(terao_factor_check(&arr, &exps).unwrap(), "{tag}: monomial r={r} terao");
            let law: Vec<u32> =
                graphic_exps.as_slice().iter().map(|&e| r as u32 * e + 1).collect();
            assert_eq!(exps, Exponents::new(law), "{tag}: exponent law r={r}");
        }
    });
    println!("PASS [8] chordal freeness suite (saito, terao, exponent law) on all chordal graphs <= 5");
}

#[test]
fn criterion_09_reflection_anchors() {
    // M(K_l, 2) has the type-B exponents.
    let f3 = field(3);
    for l in [2usize, 3, 4] {
        let g = Graph::complete(l);
        let peo = mcs_peo(&g).unwrap();
        let basis = basis_monomial(&g, &peo, 2, &f3).unwrap();
        let arr = Arrangement::monomial(&g, 2, f3.clone(), false).unwrap();
        let exps = saito_check(&basis, &arr).unwrap().unwrap();
        let want: Vec<u32> = (0..l as u32).map(|i| 2 * i + 1).collect();
        assert_eq!(exps.as_slice(), &want[..], "l={l}");
    }

    // M0(G, 1) is the graphic arrangement, on 20 seeded random graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    let f7 = field(7);
    for _ in 0..20 {
        let n = rng.gen_range(1..=5usize);
        let pairs = n * (n - 1) / 2;
        let mask: u64 = if pairs == 0 { 0 } else { rng.gen_range(0..(1u64 << pairs)) };
        let g = Graph::from_edge_mask(n, mask);
        let m0 = Arrangement::monomial(&g, 1, f7.clone(), true).unwrap();
        assert!(
            m0.same_hyperplanes(&Arrangement::graphic(&g, f7.clone())),
            "n={n} mask={mask}"
        );
    }

    // For empty graphs, chi(M(G0,r), t) = chi(M0(G0,r), t-1).
    for (r, q) in [(1usize, 2u64), (2, 3), (3, 7)] {
        let f = field(q);
        for l in 1..=5usize {
            let g = Graph::empty(l);
            let with = charpoly_mobius(&Arrangement::monomial(&g, r, f.clone(), false).unwrap())
                .unwrap();
            let without =
                charpoly_mobius(&Arrangement::monomial(&g, r, f.clone(), true).unwrap()).unwrap();
            assert_eq!(with, without.compose_affine(1, 1), "r={r} l={l}");
        }
    }
    println!("PASS [9] B_l exponents, M0(G,1) = A_G, and the empty-graph shift identity");
}

#[test]
fn criterion_10_supersolvability() {
    let corpus = chordal_corpus();
    corpus.par_iter().for_each(|g| {
        let peo = mcs_peo(g).unwrap();
        let tag = format!("n={} mask={}", g.n(), g.edge_mask());
        let kinds = [
            (BasisKind::Graphic, field(7)),
            (BasisKind::QDef, field(2)),
            (BasisKind::QDef, field(3)),
            (BasisKind::Monomial(1), field(2)),
            (BasisKind::Monomial(2), field(3)),
            (BasisKind::Monomial(3), field(7)),
        ];
        for (kind, f) in kinds {
            let (arr, filt) = chordal_filtration(g, &peo, kind, f).unwrap();
            let chi = supersolvable_verify(&arr, &filt)
                .unwrap()
                .unwrap_or_else(|| panic!("{tag} {kind:?}: filtration rejected"));
            assert_eq!(chi, charpoly_mobius(&arr).unwrap(), "{tag} {kind:?}");
        }
    });

    let f7 = field(7);
    for cycle in [4usize, 5] {
        let arr = Arrangement::graphic(&Graph::cycle(cycle), f7.clone());
        assert!(
            supersolvable_search(&arr).unwrap().is_none(),
            "C_{cycle} must not be supersolvable"
        );
    }
    println!("PASS [10] chordal filtrations verify under all builders; C4/C5 searches find none");
}
