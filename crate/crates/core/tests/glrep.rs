use minw_core::glrep::{build_irreducible, interlacings, weyl_dimension, wedge_module, HighestWeight};
use minw_core::rational::{frac, q};
use proptest::prelude::*;

fn weight() -> impl Strategy<Value = HighestWeight> {
    (prop::collection::vec(0i64..=2, 2), -2i64..=2, 1i64..=3).prop_map(|(steps, shift, den)| {
        let c = frac(shift, den);
        let mut e = vec![c.clone()];
        for s in steps.iter().rev() {
            let last = e[0].clone();
            e.insert(0, last + q(*s));
        }
        HighestWeight::new(e).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dimension_matches_gelfand_tsetlin_count(l in weight()) {
        let rep = build_irreducible(&l).unwrap();
        let patterns: usize = interlacings(&l).iter().map(|m| m.dimension()).sum();
        prop_assert_eq!(rep.dim(), patterns);
        prop_assert_eq!(rep.dim(), weyl_dimension(&l));
    }

    #[test]
    fn twisting_by_determinant_shifts_highest_weight(l in weight(), c in -3i64..=3) {
        let c = frac(c, 2);
        let direct = build_irreducible(&l.shifted(&c)).unwrap().export();
        let twisted = build_irreducible(&l).unwrap().twisted(&c).export();
        prop_assert_eq!(direct.actions, twisted.actions);
        prop_assert_eq!(direct.weights, twisted.weights);
    }

    #[test]
    fn action_respects_brackets(l in weight()) {
        let rep = build_irreducible(&l).unwrap();
        prop_assert!(rep.bracket_violations().is_empty());
        prop_assert!(rep.weight_structure_ok());
    }
}

#[test]
fn exterior_powers_have_binomial_dimension() {
    for n in 2..=4 {
        for k in 0..=n {
            let w = wedge_module(n, k).unwrap();
            let expect = (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
            assert_eq!(w.dim(), expect);
            assert!(w.bracket_violations().is_empty());
        }
    }
}

#[test]
fn nondominant_weight_is_rejected() {
    assert!(HighestWeight::from_ints(&[0, 1]).is_err());
    assert!(HighestWeight::new(vec![frac(1, 2), q(0)]).is_err());
}
