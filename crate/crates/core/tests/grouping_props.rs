mod common;

use fuzzycover::logic::{Aggregator, O2V, OD, OM2, OMMV, TMIN, TPROD};
use fuzzycover::neighborhood::{
    all_operators, compare_operators, derived_covering, group_built, intersection_reduct,
    maximal_description, minimal_description, neighborhood_system, representative, union_reduct,
    Relation, LATTICE_EDGES,
};
use fuzzycover::{Family, FuzzyCovering, FuzzySet, Group, Logic, Variant, EPS_EQ};
use proptest::prelude::*;

const O7_AGGREGATORS: [Aggregator; 6] = [OD, OM2, O2V, OMMV, TPROD, TMIN];

fn value_set(c: &FuzzyCovering, idx: &[usize]) -> Vec<FuzzySet> {
    let mut out: Vec<FuzzySet> = Vec::new();
    for &k in idx {
        if !out.iter().any(|s| s.approx_eq(c.member(k), EPS_EQ)) {
            out.push(c.member(k).clone());
        }
    }
    out
}

fn same_values(a: &[FuzzySet], b: &[FuzzySet]) -> bool {
    a.len() == b.len() && a.iter().all(|s| b.iter().any(|t| t.approx_eq(s, EPS_EQ)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_equalities_hold(c in common::covering(6, 5)) {
        for agg in O7_AGGREGATORS {
            let l = Logic::new(agg).unwrap();
            let ops = all_operators(&c, &l).unwrap();
            let report = group_built(&ops, l.family());
            for chk in &report.checks {
                prop_assert!(chk.holds, "{}: {:?} differs {:?}", agg.name(), chk.group, chk.witness);
            }
        }
    }

    #[test]
    fn lattice_edges_hold(c in common::covering(6, 5)) {
        for agg in O7_AGGREGATORS {
            let l = Logic::new(agg).unwrap();
            let ops = all_operators(&c, &l).unwrap();
            for (lo, hi) in LATTICE_EDGES.into_iter().filter(|&e| e != (Group::M, Group::H2)) {
                let (Ok(a), Ok(b)) = (representative(&ops, lo, l.family()), representative(&ops, hi, l.family())) else {
                    continue;
                };
                let r = compare_operators(a, b).unwrap().relation;
                prop_assert!(matches!(r, Relation::Leq | Relation::Equal), "{}: {lo} vs {hi} is {r:?}", agg.name());
            }
        }
    }

    #[test]
    fn union_reduct_is_minimal_union(c in common::covering(6, 5)) {
        let l = Logic::new(OD).unwrap();
        let c1 = derived_covering(&c, Variant::MinimalUnion, &l).unwrap();
        prop_assert!(union_reduct(&c).unwrap().same_members(&c1));
    }

    #[test]
    fn maximal_union_inside_intersection_reduct(c in common::covering(6, 5)) {
        let l = Logic::new(OD).unwrap();
        let c2 = derived_covering(&c, Variant::MaximalUnion, &l).unwrap();
        let cap = intersection_reduct(&c).unwrap();
        for k in c2.members() {
            prop_assert!(cap.contains_member(k));
        }
    }

    #[test]
    fn inf_and_sup_ignore_irrelevant_members(c in common::covering(6, 5)) {
        for agg in [OD, TPROD] {
            let l = Logic::new(agg).unwrap();
            let n = c.universe_len();
            for x in 0..n {
                let sys = neighborhood_system(&c, x);
                let md = minimal_description(&c, x);
                let mx = maximal_description(&c, x);
                for y in 0..n {
                    let inf = |ks: &[usize]| ks.iter().map(|&k| l.i(c.member(k)[x], c.member(k)[y])).fold(1.0, f64::min);
                    let sup = |ks: &[usize]| ks.iter().map(|&k| l.o(c.member(k)[x], c.member(k)[y])).fold(0.0, f64::max);
                    let all: Vec<usize> = (0..c.len()).collect();
                    prop_assert!((inf(&all) - inf(&sys)).abs() <= EPS_EQ);
                    prop_assert!((inf(&all) - inf(&md)).abs() <= EPS_EQ);
                    prop_assert!((sup(&all) - sup(&sys)).abs() <= EPS_EQ);
                    prop_assert!((sup(&all) - sup(&mx)).abs() <= EPS_EQ);
                }
            }
        }
    }

    #[test]
    fn descriptions_survive_reduction(c in common::covering(6, 5)) {
        let l = Logic::new(OD).unwrap();
        let c1 = derived_covering(&c, Variant::MinimalUnion, &l).unwrap();
        let c2 = derived_covering(&c, Variant::MaximalUnion, &l).unwrap();
        let cap = derived_covering(&c, Variant::Intersection, &l).unwrap();
        for x in 0..c.universe_len() {
            let md = value_set(&c, &minimal_description(&c, x));
            let mx = value_set(&c, &maximal_description(&c, x));
            prop_assert!(same_values(&value_set(&c1, &minimal_description(&c1, x)), &md));
            prop_assert!(same_values(&value_set(&c2, &maximal_description(&c2, x)), &mx));
            prop_assert!(same_values(&value_set(&cap, &maximal_description(&cap, x)), &mx));
        }
    }

    #[test]
    fn descriptions_are_subsets_of_system(c in common::covering(6, 5)) {
        for x in 0..c.universe_len() {
            let sys = neighborhood_system(&c, x);
            prop_assert!(!sys.is_empty());
            prop_assert!(minimal_description(&c, x).iter().all(|k| sys.contains(k)));
            prop_assert!(maximal_description(&c, x).iter().all(|k| sys.contains(k)));
        }
    }

    #[test]
    fn reflexive_and_symmetric(c in common::covering(6, 5)) {
        for agg in O7_AGGREGATORS {
            let l = Logic::new(agg).unwrap();
            for op in all_operators(&c, &l).unwrap() {
                for x in 0..c.universe_len() {
                    prop_assert!((op.get(x, x) - 1.0).abs() <= EPS_EQ, "{} {}", agg.name(), op.label());
                    if op.index() == 4 {
                        for y in 0..c.universe_len() {
                            prop_assert!((op.get(x, y) - op.get(y, x)).abs() <= EPS_EQ);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn n1_below_n3(c in common::covering(6, 5)) {
        let l = Logic::new(OD).unwrap();
        let ops = all_operators(&c, &l).unwrap();
        let (Ok(n1), Ok(n3)) = (representative(&ops, fuzzycover::Group::A1, Family::Overlap), representative(&ops, fuzzycover::Group::F1, Family::Overlap)) else {
            unreachable!()
        };
        let r = compare_operators(n1, n3).unwrap().relation;
        prop_assert!(matches!(r, Relation::Leq | Relation::Equal));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn m_below_h2_without_zero_memberships(c in common::positive_covering(6, 5)) {
        for agg in O7_AGGREGATORS {
            let l = Logic::new(agg).unwrap();
            let ops = all_operators(&c, &l).unwrap();
            let m = representative(&ops, Group::M, l.family()).unwrap();
            let h2 = representative(&ops, Group::H2, l.family()).unwrap();
            let r = compare_operators(m, h2).unwrap().relation;
            prop_assert!(matches!(r, Relation::Leq | Relation::Equal), "{}: {r:?}", agg.name());
        }
    }
}
