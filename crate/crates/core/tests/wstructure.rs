use minw_core::glrep::{build_irreducible, HighestWeight};
use minw_core::wstructure::{analyse, chain_member, composition_structure, dot_orbit_class, orbit_invariant, Flavor, WOperatorSet};
use proptest::prelude::*;

fn integral_weight() -> impl Strategy<Value = HighestWeight> {
    (prop::collection::vec(0i64..=2, 2), -3i64..=1).prop_map(|(steps, last)| {
        HighestWeight::from_ints(&[last + steps[0] + steps[1], last + steps[1], last]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composition_factors_fill_the_module(l in integral_weight()) {
        let rep = build_irreducible(&l).unwrap();
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
        let c = composition_structure(&ops).unwrap();
        prop_assert_eq!(c.factors.iter().map(|f| f.dim).sum::<usize>(), rep.dim());
        prop_assert_eq!(c.length, c.factors.len());
        let r = analyse(&l).unwrap();
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn both_flavors_agree_on_length(l in integral_weight()) {
        let rep = build_irreducible(&l).unwrap();
        let a = composition_structure(&WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap()).unwrap();
        let b = composition_structure(&WOperatorSet::build(&rep, Flavor::Tau).unwrap()).unwrap();
        prop_assert_eq!(a.length, b.length);
    }
}

#[test]
fn chain_members_share_the_central_character() {
    for base in [[0, -3], [0, 0], [1, -4]] {
        let mu = HighestWeight::from_ints(&base).unwrap();
        let inv = orbit_invariant(&mu);
        for i in 0..=2 {
            let m = HighestWeight::new(chain_member(&mu, i)).unwrap();
            assert_eq!(orbit_invariant(&m), inv);
            let class = dot_orbit_class(&m).unwrap();
            assert_eq!(class.position, Some(i));
            assert_eq!(class.predicted_length(), if i == 1 { 2 } else { 1 });
        }
    }
}

#[test]
fn rank_two_chain_factors() {
    let r = analyse(&HighestWeight::from_ints(&[3, 0, -2]).unwrap()).unwrap();
    let hw: Vec<(&str, usize)> = r.factors.iter().map(|f| (f.hw.as_str(), f.dim)).collect();
    assert_eq!(hw, vec![("(3,0,4)", 36), ("(0,0,10)", 6)]);
    // eta_n = lambda_n (|lambda| - n) = -2 * (1 - 3)
    assert_eq!(r.eta_n, "4");
}
