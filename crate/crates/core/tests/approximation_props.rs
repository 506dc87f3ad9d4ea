mod common;

use fuzzycover::logic::{OD, TPROD};
use fuzzycover::neighborhood::{all_operators, compare_operators, Relation};
use fuzzycover::rough::{compare_models, ApproximationModel, ModelOrder};
use fuzzycover::{FuzzyCovering, FuzzySet, Logic, EPS_EQ};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (FuzzyCovering, FuzzySet, FuzzySet, f64, usize, bool)> {
    common::covering(6, 5).prop_flat_map(|c| {
        let n = c.universe_len();
        (
            Just(c),
            common::fuzzy_set(n),
            common::fuzzy_set(n),
            common::level(),
            0usize..24,
            any::<bool>(),
        )
    })
}

fn model(c: &FuzzyCovering, which: usize, tnorm: bool) -> ApproximationModel {
    let l = Logic::new(if tnorm { TPROD } else { OD }).unwrap();
    let op = all_operators(c, &l).unwrap().swap_remove(which);
    ApproximationModel::new(op, l.family())
}

fn eq(a: &FuzzySet, b: &FuzzySet) -> bool {
    a.approx_eq(b, EPS_EQ)
}

fn sub(a: &FuzzySet, b: &FuzzySet) -> bool {
    a.memberships()
        .iter()
        .zip(b.memberships())
        .all(|(x, y)| *x <= y + EPS_EQ)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn approximation_laws((c, x, y, lam, which, tnorm) in instance()) {
        let m = model(&c, which, tnorm);
        let n = c.universe_len();
        let lo = |s: &FuzzySet| m.lower(s).unwrap();
        let up = |s: &FuzzySet| m.upper(s).unwrap();
        let cup = |a: &FuzzySet, b: &FuzzySet| a.union(b).unwrap();
        let cap = |a: &FuzzySet, b: &FuzzySet| a.intersection(b).unwrap();
        let l_set = FuzzySet::constant(n, lam).unwrap();

        prop_assert!(eq(&lo(&x.complement()), &up(&x).complement()));
        prop_assert!(eq(&up(&x.complement()), &lo(&x).complement()));
        prop_assert!(eq(&lo(&FuzzySet::full(n)), &FuzzySet::full(n)));
        prop_assert!(eq(&up(&FuzzySet::empty(n)), &FuzzySet::empty(n)));

        prop_assert!(eq(&lo(&cap(&x, &y)), &cap(&lo(&x), &lo(&y))));
        prop_assert!(eq(&up(&cup(&x, &y)), &cup(&up(&x), &up(&y))));

        let xy = cap(&x, &y);
        prop_assert!(sub(&lo(&xy), &lo(&x)) && sub(&up(&xy), &up(&x)));
        prop_assert!(sub(&cup(&lo(&x), &lo(&y)), &lo(&cup(&x, &y))));
        prop_assert!(sub(&up(&cap(&x, &y)), &cap(&up(&x), &up(&y))));
        prop_assert!(eq(&lo(&cup(&xy, &x)), &cup(&lo(&xy), &lo(&x))));
        prop_assert!(eq(&up(&cap(&xy, &x)), &cap(&up(&xy), &up(&x))));

        prop_assert!(sub(&lo(&lo(&x)), &lo(&x)));
        prop_assert!(sub(&lo(&x), &x) && sub(&x, &up(&x)));
        prop_assert!(sub(&up(&x), &up(&up(&x))));

        prop_assert!(eq(&lo(&l_set), &l_set) && eq(&up(&l_set), &l_set));
        prop_assert!(eq(&lo(&cup(&x, &l_set)), &cup(&lo(&x), &l_set)));
        prop_assert!(eq(&up(&cap(&x, &l_set)), &cap(&up(&x), &l_set)));
        prop_assert!(eq(&lo(&cap(&x, &l_set)), &cap(&lo(&x), &l_set)));
        prop_assert!(eq(&up(&cup(&x, &l_set)), &cup(&up(&x), &l_set)));
        prop_assert!(eq(&lo(&FuzzySet::empty(n)), &FuzzySet::empty(n)));
        prop_assert!(eq(&up(&FuzzySet::full(n)), &FuzzySet::full(n)));

        let op = m.operator();
        for t in 0..n {
            let one = FuzzySet::singleton(n, t);
            let all_but: Vec<usize> = (0..n).filter(|&z| z != t).collect();
            let rest = FuzzySet::crisp(n, &all_but);
            for s in 0..n {
                prop_assert!((up(&one)[s] - op.get(s, t)).abs() <= EPS_EQ);
                prop_assert!((lo(&rest)[s] - (1.0 - op.get(s, t))).abs() <= EPS_EQ);
            }
        }
        let members: Vec<usize> = (0..n).filter(|&t| x[t] >= 0.5).collect();
        let crisp = FuzzySet::crisp(n, &members);
        for s in 0..n {
            let want_up = members.iter().map(|&t| op.get(s, t)).fold(0.0, f64::max);
            let want_lo = (0..n).filter(|t| !members.contains(t)).map(|t| 1.0 - op.get(s, t)).fold(1.0, f64::min);
            prop_assert!((up(&crisp)[s] - want_up).abs() <= EPS_EQ);
            prop_assert!((lo(&crisp)[s] - want_lo).abs() <= EPS_EQ);
        }
    }

    #[test]
    fn operator_order_carries_over((c, x, _y, _lam, which, tnorm) in instance(), other in 0usize..24) {
        let a = model(&c, which, tnorm);
        let b = model(&c, other, tnorm);
        let rel = compare_operators(a.operator(), b.operator()).unwrap().relation;
        let ord = compare_models(&a, &b, &x).unwrap();
        match rel {
            Relation::Equal => prop_assert_eq!(ord, ModelOrder::Equal),
            Relation::Leq => prop_assert!(matches!(ord, ModelOrder::Finer | ModelOrder::Equal)),
            Relation::Geq => prop_assert!(matches!(ord, ModelOrder::Coarser | ModelOrder::Equal)),
            Relation::Incomparable => {}
        }
        prop_assert_eq!(compare_models(&a, &a, &x).unwrap(), ModelOrder::Equal);
    }

    #[test]
    fn precision_in_unit_interval((c, x, _y, _lam, which, tnorm) in instance()) {
        let m = model(&c, which, tnorm);
        if let Ok(p) = m.precision(&x) {
            prop_assert!((-EPS_EQ..=1.0 + EPS_EQ).contains(&p));
        }
    }
}
