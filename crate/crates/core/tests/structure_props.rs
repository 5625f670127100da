use proptest::prelude::*;

use rhodes_core::boolrep::{complex_of_matrix, BooleanMatrix};
use rhodes_core::complex::{complexes_isomorphic, has_chain_certificate};
use rhodes_core::gain_graph::{GainGraph, Mode};
use rhodes_core::lattice::powerset;
use rhodes_core::oracle;
use rhodes_core::spc::SpcSpace;
use rhodes_core::wreath::{ColumnMonomialMatrix, Wreath};
use rhodes_core::{FiniteGroup, LatticeRepresentation, SimplicialComplex};

fn labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("v{i}")).collect()
}

fn gain_graph(v: usize, q: usize, edges: &[(usize, usize, usize)]) -> GainGraph {
    let mut gg = GainGraph::new(v, FiniteGroup::cyclic(q).unwrap()).unwrap();
    for &(a, b, g) in edges {
        gg.add_edge(a % v, b % v, g % q).unwrap();
    }
    gg
}

fn edges() -> impl Strategy<Value = Vec<(usize, usize, usize)>> {
    prop::collection::vec((0usize..5, 0usize..5, 0usize..6), 1..=9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn generated_families_are_hereditary(sets in prop::collection::vec(0u32..64, 0..6)) {
        let h = SimplicialComplex::from_family(labels(6), &sets).unwrap();
        for x in h.independent_sets() {
            for b in 0..6 {
                prop_assert!(h.is_independent(x & !(1 << b)));
            }
        }
        for s in &sets {
            prop_assert!(h.is_independent(*s));
        }
    }

    #[test]
    fn closure_is_a_closure_operator(sets in prop::collection::vec(0u32..64, 1..6), x in 0u32..64, y in 0u32..64) {
        let h = SimplicialComplex::from_family(labels(6), &sets).unwrap();
        let cx = h.closure(x).unwrap();
        prop_assert_eq!(cx & x, x);
        prop_assert_eq!(h.closure(cx).unwrap(), cx);
        prop_assert!(h.flat_table().unwrap()[cx as usize]);
        if x & y == x {
            prop_assert_eq!(cx & h.closure(y).unwrap(), cx);
        }
    }

    #[test]
    fn greedy_certificate_matches_permutation_search(phi in prop::collection::vec(1usize..16, 1..=7), x in 0u32..128) {
        let lattice = powerset(4).unwrap();
        let mut phi = phi;
        phi.extend([1, 2, 4, 8]);
        let m = phi.len();
        let rep = LatticeRepresentation::new(lattice, phi, labels(m)).unwrap();
        let x = x & ((1 << m) - 1);
        prop_assert_eq!(has_chain_certificate(&rep, None, x), oracle::chain_certificate_by_permutation(&rep, None, x));
    }

    #[test]
    fn unitriangular_greedy_is_exact(rows in prop::collection::vec(0u32..64, 1..=6), w in 0u32..64) {
        let m = BooleanMatrix::new(6, rows).unwrap();
        prop_assert_eq!(m.has_unitriangular_witness(w), oracle::unitriangular_by_search(&m, w));
    }

    #[test]
    fn matrix_complexes_are_boolean_representable(rows in prop::collection::vec(1u32..32, 1..=5)) {
        let m = BooleanMatrix::new(5, rows).unwrap();
        let h = complex_of_matrix(&m).unwrap();
        prop_assert!(h.is_boolean_representable().unwrap());
        prop_assert!(h.rank() <= m.rows());
    }

    #[test]
    fn gain_matroids_are_matroids(v in 2usize..=5, q in 2usize..=3, es in edges()) {
        let gg = gain_graph(v, q, &es);
        let frame = gg.frame_matroid().unwrap();
        let lift = gg.lift_matroid().unwrap();
        prop_assert!(frame.is_matroid());
        prop_assert!(lift.is_matroid());
        // every lift-independent set is frame-independent
        for x in lift.independent_sets() {
            prop_assert!(frame.is_independent(x));
        }
        for c in frame.circuits() {
            prop_assert!(gg.classify_circuit(c, Mode::Frame).is_ok());
        }
        for c in lift.circuits() {
            prop_assert!(gg.classify_circuit(c, Mode::Lift).is_ok());
        }
    }

    #[test]
    fn switching_preserves_balance(v in 2usize..=5, es in edges(), eta in prop::collection::vec(0usize..3, 5)) {
        let q = 3;
        let gg = gain_graph(v, q, &es);
        let switched = gain_graph(
            v,
            q,
            &gg.edges().iter().map(|e| (e.u, e.v, (e.g + 2 * eta[e.u] + eta[e.v]) % q)).collect::<Vec<_>>(),
        );
        for x in 0..1u32 << gg.edges().len() {
            prop_assert_eq!(gg.is_balanced(x), switched.is_balanced(x));
        }
        let (a, b) = (gg.lift_matroid().unwrap(), switched.lift_matroid().unwrap());
        prop_assert!((0..1u32 << gg.edges().len()).all(|x| a.is_independent(x) == b.is_independent(x)));
    }

    #[test]
    fn edge_list_round_trip(v in 2usize..=5, es in edges()) {
        let gg = gain_graph(v, 3, &es);
        let back = GainGraph::from_edge_list(v, FiniteGroup::cyclic(3).unwrap(), &gg.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), gg.edges());
    }

    #[test]
    fn monomial_product_is_associative(cols in prop::collection::vec(prop::option::of((0usize..3, 0usize..6)), 9)) {
        let w = Wreath::new(SpcSpace::new(3, FiniteGroup::symmetric(3).unwrap()).unwrap());
        let m: Vec<ColumnMonomialMatrix> = cols.chunks(3).map(|c| ColumnMonomialMatrix::new(3, c.to_vec()).unwrap()).collect();
        let left = w.multiply(&w.multiply(&m[0], &m[1]).unwrap(), &m[2]).unwrap();
        let right = w.multiply(&m[0], &w.multiply(&m[1], &m[2]).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(w.l_below(&w.multiply(&m[0], &m[1]).unwrap(), &m[1]).unwrap());
    }
}

#[test]
fn isomorphism_respects_relabelling() {
    let h = rhodes_core::models::rhodes_complex(2, &FiniteGroup::cyclic(3).unwrap()).unwrap();
    let perm: Vec<usize> = (0..h.ground_size()).rev().collect();
    assert!(complexes_isomorphic(&h, &h.permuted(&perm)).unwrap().is_some());
    let u = SimplicialComplex::uniform(2, h.ground_size()).unwrap();
    assert!(complexes_isomorphic(&h, &u).unwrap().is_none());
}
