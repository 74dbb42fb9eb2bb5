use minw_core::cuspidal::{analyse_cuspidal, check_sl_relations, cuspidality_criterion, LatticeBox, LatticeModule};
use minw_core::glrep::{build_irreducible, HighestWeight};
use minw_core::rational::{frac, q};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn lattice_index_round_trips(n in 1usize..=3, radius in 0i64..=3, pick in any::<prop::sample::Index>()) {
        let b = LatticeBox::new(n, radius);
        prop_assert_eq!(b.len(), (2 * radius as usize + 1).pow(n as u32));
        let k = pick.index(b.len());
        prop_assert_eq!(b.index_of(b.point(k)), Some(k));
    }

    #[test]
    fn interior_points_stay_inside_under_unit_shifts(radius in 1i64..=3) {
        let b = LatticeBox::new(2, radius);
        for p in b.interior(1) {
            for k in 0..2 {
                prop_assert!(b.shifted(p, &shift(k, 1)).is_some());
                prop_assert!(b.shifted(p, &shift(k, -1)).is_some());
            }
        }
    }
}

fn shift(k: usize, by: i64) -> Vec<i64> {
    let mut v = vec![0; 2];
    v[k] = by;
    v
}

#[test]
fn both_realizations_satisfy_relations() {
    let lambda = HighestWeight::from_ints(&[2, 0]).unwrap();
    let fiber = build_irreducible(&lambda).unwrap();
    let mu = [frac(1, 3), frac(2, 7)];
    for m in [LatticeModule::induced(&mu, &fiber, 3).unwrap(), LatticeModule::shen_larsson(&mu, &fiber, 3).unwrap()] {
        assert!(check_sl_relations(&m, 2).violations.is_empty(), "{:?}", m.realization());
    }
}

#[test]
fn rational_weight_gives_cuspidal_module() {
    let lambda = HighestWeight::new(vec![frac(1, 2), frac(-1, 2)]).unwrap();
    let mu = [frac(1, 3), frac(1, 5)];
    assert!(cuspidality_criterion(&mu, &lambda));
    let r = analyse_cuspidal(&lambda, &mu, 3).unwrap();
    assert!(r.violations.is_empty(), "{:?}", r.violations);
    assert!(r.all_injective && r.intertwiner_ok == Some(true));
}

#[test]
fn integral_shift_breaks_injectivity() {
    let lambda = HighestWeight::from_ints(&[1, 0]).unwrap();
    let r = analyse_cuspidal(&lambda, &[q(1), q(0)], 3).unwrap();
    assert!(!r.criterion && !r.all_injective);
    assert!(r.violations.is_empty(), "{:?}", r.violations);
}
