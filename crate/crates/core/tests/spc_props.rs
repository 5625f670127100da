use proptest::prelude::*;

use rhodes_core::spc::{Spc, SpcSpace};
use rhodes_core::FiniteGroup;

fn space(n: usize, g: &str) -> SpcSpace {
    SpcSpace::new(n, FiniteGroup::from_spec(g).unwrap()).unwrap()
}

fn case() -> impl Strategy<Value = (usize, &'static str, usize, usize, usize)> {
    (1usize..=4, prop::sample::select(vec!["1", "Z2", "Z3", "S3"]), any::<usize>(), any::<usize>(), any::<usize>())
        .prop_filter("enumerable", |(n, g, ..)| match *g {
            "1" | "Z2" => true,
            _ => *n <= 3,
        })
}

fn pick(all: &[Spc], k: usize) -> Spc {
    all[k % all.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn meet_is_a_common_lower_bound((n, g, i, j, k) in case()) {
        let s = space(n, g);
        let all = s.enumerate().unwrap();
        let (a, b, c) = (pick(&all, i), pick(&all, j), pick(&all, k));
        let m = s.rhodes_meet(&a, &b).unwrap();
        prop_assert!(s.rhodes_leq(&m, &a).unwrap() && s.rhodes_leq(&m, &b).unwrap());
        prop_assert_eq!(&m, &s.rhodes_meet(&b, &a).unwrap());
        if s.rhodes_leq(&c, &a).unwrap() && s.rhodes_leq(&c, &b).unwrap() {
            prop_assert!(s.rhodes_leq(&c, &m).unwrap());
        }
    }

    #[test]
    fn join_is_least_when_defined((n, g, i, j, k) in case()) {
        let s = space(n, g);
        let all = s.enumerate().unwrap();
        let (a, b, c) = (pick(&all, i), pick(&all, j), pick(&all, k));
        match s.rhodes_join(&a, &b).unwrap() {
            Some(x) => {
                prop_assert!(s.rhodes_leq(&a, &x).unwrap() && s.rhodes_leq(&b, &x).unwrap());
                if s.rhodes_leq(&a, &c).unwrap() && s.rhodes_leq(&b, &c).unwrap() {
                    prop_assert!(s.rhodes_leq(&x, &c).unwrap());
                }
            }
            None => {
                prop_assert!(!s.has_common_upper_bound(&a, &b).unwrap());
                prop_assert!(!(s.rhodes_leq(&a, &c).unwrap() && s.rhodes_leq(&b, &c).unwrap()));
            }
        }
    }

    #[test]
    fn comparable_pairs_have_joins((n, g, i, j, _k) in case()) {
        let s = space(n, g);
        let all = s.enumerate().unwrap();
        let (a, b) = (pick(&all, i), pick(&all, j));
        if s.rhodes_leq(&a, &b).unwrap() {
            prop_assert_eq!(s.rhodes_join(&a, &b).unwrap(), Some(b.clone()));
            prop_assert_eq!(s.rhodes_meet(&a, &b).unwrap(), a.clone());
        }
    }

    #[test]
    fn text_and_json_round_trip((n, g, i, _j, _k) in case()) {
        let s = space(n, g);
        let all = s.enumerate().unwrap();
        let a = pick(&all, i);
        prop_assert_eq!(s.parse(&s.format(&a)).unwrap(), a.clone());
        let json = serde_json::to_string(&s.to_json(&a)).unwrap();
        prop_assert_eq!(s.from_json(&serde_json::from_str(&json).unwrap()).unwrap(), a);
    }

    #[test]
    fn dowling_antisymmetric((n, g, i, j, _k) in case()) {
        let s = space(n, g);
        let all = s.enumerate().unwrap();
        let (a, b) = (pick(&all, i), pick(&all, j));
        if s.dowling_leq(&a, &b).unwrap() && s.dowling_leq(&b, &a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn necklace_obstruction_example() {
    let s = space(2, "Z2");
    let a = s.parse("({1,2}; 1↦e,2↦e)").unwrap();
    let b = s.parse("({1,2}; 1↦e,2↦g)").unwrap();
    assert!(!s.has_common_upper_bound(&a, &b).unwrap());
    let labels = s.necklace_graph(&a, &b).unwrap().necklace_labels(s.group());
    assert!(labels.iter().any(|&l| l != 0));
}

#[test]
fn contexts_must_match() {
    let a = space(2, "Z2").full_singletons();
    assert!(space(3, "Z2").rhodes_leq(&a, &a).is_err());
}
