use rhodes_core::complex::complexes_isomorphic;
use rhodes_core::gain_graph::{delta, Mode};
use rhodes_core::group::groups_isomorphic;
use rhodes_core::lattice::{build_dowling, build_partition_lattice, build_rhodes, build_rhodes_hat, lattice_isomorphic};
use rhodes_core::models::{dowling_complex, rhodes_complex};
use rhodes_core::spc::SpcSpace;
use rhodes_core::wreath::Wreath;
use rhodes_core::FiniteGroup;

fn groups() -> Vec<FiniteGroup> {
    ["1", "Z2", "Z3"].iter().map(|s| FiniteGroup::from_spec(s).unwrap()).collect()
}

#[test]
fn group_specs() {
    let z6 = FiniteGroup::cyclic(6).unwrap();
    let prod = FiniteGroup::from_spec("Z2xZ3").unwrap();
    assert!(groups_isomorphic(&z6, &prod).unwrap().is_some());
    assert!(groups_isomorphic(&FiniteGroup::klein4(), &FiniteGroup::cyclic(4).unwrap()).unwrap().is_none());
    assert_eq!(FiniteGroup::from_spec("S3").unwrap().order(), 6);
    assert!(!FiniteGroup::from_spec("S3").unwrap().is_abelian());
    assert!(FiniteGroup::from_spec("Q8").is_err());
}

#[test]
fn dowling_of_trivial_group_is_partition_lattice() {
    for n in 1..=3 {
        let q = build_dowling(n, &FiniteGroup::trivial()).unwrap();
        let (pi, _) = build_partition_lattice(n + 1).unwrap();
        assert!(lattice_isomorphic(&q.lattice, &pi).unwrap().is_some(), "n = {n}");
    }
}

#[test]
fn dowling_lattices_are_geometric() {
    for g in groups() {
        for n in 1..=3 {
            assert!(build_dowling(n, &g).unwrap().lattice.is_geometric());
        }
    }
}

#[test]
fn covers_in_trivial_rhodes_lattice() {
    for n in 1..=4 {
        let r = build_rhodes(n, &FiniteGroup::trivial()).unwrap();
        for (a, b) in r.poset.cover_relation() {
            let (pa, pb) = (r.spcs[a].partition(), r.spcs[b].partition());
            let added_point = pb.num_blocks() == pa.num_blocks() + 1 && (pb.domain() & !pa.domain()).count_ones() == 1;
            let merged = pb.domain() == pa.domain() && pb.num_blocks() + 1 == pa.num_blocks();
            assert!(added_point || merged, "n = {n}: {} -> {}", r.poset.label(a), r.poset.label(b));
        }
    }
}

#[test]
fn full_singletons_comparability() {
    // every element is comparable to the full-singleton SPC only for n ≤ 2
    for g in groups() {
        for n in 1..=3 {
            let r = build_rhodes_hat(n, &g).unwrap();
            let s = r.index_of(&r.space.full_singletons()).unwrap();
            let all = (0..r.lattice.len()).all(|x| r.lattice.leq(x, s) || r.lattice.leq(s, x));
            assert_eq!(all, n <= 2, "n = {n}, |G| = {}", g.order());
        }
    }
    let space = SpcSpace::new(3, FiniteGroup::trivial()).unwrap();
    let pair = space.parse("({1,2}; 1↦e,2↦e)").unwrap();
    let s = space.full_singletons();
    assert!(!space.rhodes_leq(&pair, &s).unwrap() && !space.rhodes_leq(&s, &pair).unwrap());
}

#[test]
fn rank_two_restrictions_agree() {
    for n in 2..=4 {
        let one = FiniteGroup::trivial();
        let frame = delta(n, &one).unwrap().frame_matroid().unwrap();
        let c_part = |m: usize| ((1u32 << m) - 1) & !((1u32 << n) - 1);
        let h = rhodes_complex(n, &one).unwrap();
        let h2 = h.restriction(c_part(h.ground_size())).unwrap();
        let m = dowling_complex(n, &one).unwrap();
        let m2 = m.restriction(c_part(m.ground_size())).unwrap();
        assert!(complexes_isomorphic(&frame, &h2).unwrap().is_some(), "n = {n}");
        assert!(complexes_isomorphic(&frame, &m2).unwrap().is_some(), "n = {n}");
    }
}

#[test]
fn lift_bases_are_unbalanced_unicyclic_spanning() {
    for q in 2..=3 {
        let g = FiniteGroup::cyclic(q).unwrap();
        for n in 2..=3 {
            let gg = delta(n, &g).unwrap();
            let m = gg.edges().len();
            for z in 0..1u32 << m {
                let comps = gg.components(z);
                let unicyclic = z.count_ones() as usize == n
                    && comps.len() == 1
                    && comps[0].0.count_ones() as usize == n;
                let basis = z.count_ones() as usize == n && gg.independent(z, Mode::Lift);
                assert_eq!(basis, unicyclic && !gg.is_balanced(z), "n = {n}, q = {q}, z = {z:#b}");
            }
        }
    }
}

#[test]
fn wreath_anti_isomorphism_exhaustive_n3() {
    let w = Wreath::new(SpcSpace::new(3, FiniteGroup::cyclic(2).unwrap()).unwrap());
    let mats = w.enumerate_matrices().unwrap();
    assert_eq!(mats.len(), 343);
    let spcs: Vec<_> = mats.iter().map(|m| w.spc_of_matrix(m).unwrap()).collect();
    for (c, sc) in mats.iter().zip(&spcs) {
        for (a, sa) in mats.iter().zip(&spcs) {
            assert_eq!(w.l_below(c, a).unwrap(), w.space().dowling_leq(sa, sc).unwrap());
        }
    }
}

#[test]
fn rhodes_hat_adjoins_top_only_when_needed() {
    for g in groups() {
        for n in 1..=3 {
            let r = build_rhodes_hat(n, &g).unwrap();
            assert_eq!(r.top_sentinel.is_some(), n > 1 && !g.is_trivial());
        }
    }
}
