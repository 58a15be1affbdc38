use std::collections::{BTreeMap, BTreeSet};

use realtoric::complexes::cache_format::{read_complex, write_complex};
use realtoric::complexes::{
    build_coxeter_complex, characteristic_matrix_of, f_h_vector, induced_subcomplex, lambda_mod2,
    rank_selected_complex, reduced_poset_complex, vertex_partition_oracle, RankSelectedKind, SignedSubset, Subset,
};
use realtoric::homology::{betti_reduced, Coefficients};
use realtoric::Family;

fn cases() -> Vec<(Family, usize)> {
    vec![(Family::C, 3), (Family::C, 4), (Family::C, 5), (Family::C, 6), (Family::D, 4), (Family::D, 5), (Family::D, 6)]
}

#[test]
fn whole_complex_is_a_sphere() {
    for (family, n) in [(Family::C, 3), (Family::C, 4), (Family::D, 4)] {
        let k = build_coxeter_complex(family, n).unwrap();
        let b = betti_reduced(k.complex(), Coefficients::Q).unwrap();
        assert_eq!(b.nonzero(), BTreeMap::from([(n as isize - 1, 1)]), "{family}{n}");
    }
}

#[test]
fn vertex_parity_rules_match_characteristic_matrix() {
    for (family, n) in cases() {
        let k = build_coxeter_complex(family, n).unwrap();
        let lambda = characteristic_matrix_of(&k);
        for s in Subset::all(n) {
            let flags = lambda.row_sum(s);
            let from_lambda: BTreeSet<SignedSubset> =
                k.complex().labels().iter().zip(&flags).filter(|(_, f)| **f).map(|(l, _)| *l).collect();
            let (v1, v2) = vertex_partition_oracle(family, n, s).unwrap();
            let from_rules: BTreeSet<SignedSubset> = v1.into_iter().chain(v2).collect();
            assert_eq!(from_lambda, from_rules, "{family}{n} S={s}");
        }
    }
}

#[test]
fn lambda_columns_are_nonzero_and_span() {
    for (family, n) in cases() {
        let k = build_coxeter_complex(family, n).unwrap();
        let lambda = characteristic_matrix_of(&k);
        assert_eq!(lambda.rank(), n);
        for (j, label) in k.complex().labels().iter().enumerate() {
            let col = lambda_mod2(family, n, *label).unwrap();
            assert_eq!(col, lambda.column(j));
            assert!(col.contains(&1));
        }
    }
}

#[test]
fn facets_are_chambers() {
    // Each facet of a Coxeter complex is a full flag, so facets sharing a
    // ridge come in pairs and every facet has n vertices.
    for (family, n) in cases() {
        let k = build_coxeter_complex(family, n).unwrap();
        assert!(k.complex().facets().iter().all(|f| f.len() == n));
        assert!(k.complex().is_pseudomanifold());
        let (f, h) = f_h_vector(k.complex()).unwrap();
        assert_eq!(*f.last().unwrap(), k.complex().facets().len() as u64);
        assert_eq!(h.first(), Some(&1));
        // Spheres have symmetric h-vectors.
        let rev: Vec<i64> = h.iter().rev().copied().collect();
        assert_eq!(h, rev, "{family}{n}");
    }
}

#[test]
fn cache_text_round_trip() {
    for (family, n) in [(Family::C, 4), (Family::D, 5)] {
        let k = build_coxeter_complex(family, n).unwrap();
        let back = read_complex(&write_complex(&k)).unwrap();
        assert_eq!(back.complex(), k.complex());
        assert_eq!(back.header(), k.header());
    }
}

#[test]
fn d_full_label_graph_cycle_rank() {
    // (K_{D_n})_{n} is the graph on full-size labels joined when they share n - 1 entries.
    for n in 4..=7usize {
        let k = build_coxeter_complex(Family::D, n).unwrap();
        let lambda = characteristic_matrix_of(&k);
        let ks = induced_subcomplex(k.complex(), &lambda, Subset::from_elements(&[n]));
        let vertices = ks.num_vertices() as i64;
        let edges = ks.facets().iter().filter(|f| f.len() == 2).count() as i64;
        assert_eq!(vertices, 1 << n);
        assert_eq!(ks.dimension(), 1);
        let t = realtoric::sequences::aux_sequences(n).1;
        assert_eq!(num_bigint::BigInt::from(edges - vertices + 1), t);
    }
}

#[test]
fn reduced_posets_small() {
    let b = |p: &realtoric::complexes::PosetComplex| betti_reduced(p.order_complex(), Coefficients::Q).unwrap().nonzero();
    let c31 = reduced_poset_complex(Family::C, 3, 1).unwrap();
    assert_eq!(c31.len(), 8);
    assert_eq!(b(&c31), BTreeMap::from([(0, 1), (1, 2)]));
    assert_eq!(b(&reduced_poset_complex(Family::C, 4, 2).unwrap()), BTreeMap::from([(1, 17)]));
    assert_eq!(b(&reduced_poset_complex(Family::D, 4, 1).unwrap()), BTreeMap::from([(0, 1), (2, 2)]));
    assert!(reduced_poset_complex(Family::B, 4, 1).is_err());
}

#[test]
fn rank_selected_small() {
    let b = |kind, two_r| {
        betti_reduced(rank_selected_complex(kind, two_r).unwrap().order_complex(), Coefficients::Q)
            .unwrap()
            .nonzero()
    };
    assert_eq!(b(RankSelectedKind::BooleanOdd, 2), BTreeMap::from([(0, 1)]));
    assert_eq!(b(RankSelectedKind::CrossOdd, 2), BTreeMap::from([(0, 3)]));
    assert_eq!(b(RankSelectedKind::BooleanOdd, 4), BTreeMap::from([(1, 5)]));
    assert!(rank_selected_complex(RankSelectedKind::CrossOdd, 0).is_err());
}
