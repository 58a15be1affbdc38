use std::collections::BTreeMap;

use num_bigint::BigInt;
use realtoric::complexes::{
    build_coxeter_complex, characteristic_matrix_of, f_h_vector, induced_subcomplex, SimplicialComplex, Subset,
};
use realtoric::homology::{betti_reduced, build_chain_complex, integral_homology, Coefficients};
use realtoric::Family;

fn complex(nv: u32, facets: &[[u32; 3]]) -> SimplicialComplex<u32> {
    SimplicialComplex::new((0..nv).collect(), facets.iter().map(|f| f.to_vec()).collect()).unwrap()
}

fn rp2() -> SimplicialComplex<u32> {
    complex(
        6,
        &[
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ],
    )
}

fn octahedron() -> SimplicialComplex<u32> {
    let mut facets = Vec::new();
    for x in 0..2 {
        for y in 2..4 {
            for z in 4..6 {
                facets.push([x, y, z]);
            }
        }
    }
    complex(6, &facets)
}

fn subcomplex(family: Family, n: usize, s: &[usize]) -> SimplicialComplex {
    let k = build_coxeter_complex(family, n).unwrap();
    let lambda = characteristic_matrix_of(&k);
    induced_subcomplex(k.complex(), &lambda, Subset::from_elements(s))
}

#[test]
fn rp2_has_two_torsion() {
    let k = rp2();
    assert!(k.is_pseudomanifold());
    let h = integral_homology(&k);
    assert!(h.betti().ranks().is_empty());
    assert_eq!(h.torsion, BTreeMap::from([(1, vec![BigInt::from(2)])]));
    // Over GF(2) the torsion shows up as H_1 and H_2.
    let b2 = betti_reduced(&k, Coefficients::Gf(2)).unwrap();
    assert_eq!(b2.nonzero(), BTreeMap::from([(1, 1), (2, 1)]));
    assert!(betti_reduced(&k, Coefficients::Gf(3)).unwrap().ranks().is_empty());
}

#[test]
fn octahedron_is_a_sphere() {
    let h = integral_homology(&octahedron());
    assert_eq!(h.betti().nonzero(), BTreeMap::from([(2, 1)]));
    assert!(h.is_torsion_free());
}

#[test]
fn coxeter_face_counts() {
    let k = build_coxeter_complex(Family::C, 3).unwrap();
    let c = build_chain_complex(k.complex());
    assert_eq!((c.num_faces(0), c.num_faces(1), c.num_faces(2)), (26, 72, 48));
    let (f, _) = f_h_vector(k.complex()).unwrap();
    assert_eq!(f, vec![1, 26, 72, 48]);
    assert!(c.boundary_squares_to_zero());
    // The whole complex is a 2-sphere.
    assert_eq!(betti_reduced(k.complex(), Coefficients::Q).unwrap().nonzero(), BTreeMap::from([(2, 1)]));
}

#[test]
fn published_subcomplex_examples() {
    let q = Coefficients::Q;
    let b = |family, n, s: &[usize]| betti_reduced(&subcomplex(family, n, s), q).unwrap().nonzero();
    assert_eq!(b(Family::C, 3, &[3]), BTreeMap::from([(0, 7)]));
    assert_eq!(b(Family::D, 4, &[4]), BTreeMap::from([(1, 17)]));
    assert_eq!(b(Family::C, 3, &[1]), BTreeMap::from([(0, 1), (1, 2)]));
    assert_eq!(b(Family::C, 3, &[]), BTreeMap::from([(-1, 1)]));
}

#[test]
fn euler_and_universal_coefficients() {
    for (family, n) in [(Family::C, 3), (Family::C, 4), (Family::D, 4)] {
        let k = build_coxeter_complex(family, n).unwrap();
        let lambda = characteristic_matrix_of(&k);
        for s in Subset::all(n) {
            let ks = induced_subcomplex(k.complex(), &lambda, s);
            let chains = build_chain_complex(&ks);
            let q = betti_reduced(&ks, Coefficients::Q).unwrap();
            assert_eq!(q.reduced_euler_characteristic(), chains.reduced_euler_characteristic());
            for p in [2, 3] {
                let fp = betti_reduced(&ks, Coefficients::Gf(p)).unwrap();
                assert!(fp.same_ranks(&q), "{family}{n} S={s}: GF({p}) {fp} vs Q {q}");
            }
            let z = integral_homology(&ks);
            assert!(z.is_torsion_free(), "{family}{n} S={s}");
            assert!(z.betti().same_ranks(&q));
        }
    }
}
