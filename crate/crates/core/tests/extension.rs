mod common;

use common::*;
use splitkit::algebra::SplitMix64;
use splitkit::forms::MultiForm;
use splitkit::graded::BundleSum;
use splitkit::paper_suite::{build_family, Family, FamilyId};
use splitkit::rnc::{ci_normal_map, induced_extension_class, realize_extension};

#[test]
fn lifting_the_pairs_family_stays_balanced() {
    let f = fp();
    let Family::Combos { model, combos, .. } = build_family(f, FamilyId::Ci22 { n: 6 }).unwrap() else {
        unreachable!()
    };
    let mut rng = SplitMix64::new(31);
    for _ in 0..25 {
        let gs: Vec<_> = combos.iter().map(|_| MultiForm::random_sparse(f, 8, 1, 3, &mut rng).unwrap()).collect();
        let (lifted, hs) = realize_extension(&combos, &gs, &model).unwrap();
        let map = ci_normal_map(f, &hs, &lifted).unwrap();
        let k = map.kernel_splitting().unwrap();
        assert!(map.surjective_everywhere());
        assert!(k.is_balanced(), "{:?}", k.degrees());
        let class = induced_extension_class(f, &combos, &gs, &model).unwrap();
        assert_eq!(class.extension_splitting().unwrap(), k);
    }
}

#[test]
fn zero_lift_splits_off_a_summand() {
    let f = fp();
    let Family::Combos { model, combos, .. } = build_family(f, FamilyId::Ci22 { n: 7 }).unwrap() else {
        unreachable!()
    };
    let gs = vec![MultiForm::zero(f, 9, 1); 2];
    let old = ci_normal_map(f, &combos, &model).unwrap().kernel_splitting().unwrap();
    let (lifted, hs) = realize_extension(&combos, &gs, &model).unwrap();
    let new = ci_normal_map(f, &hs, &lifted).unwrap().kernel_splitting().unwrap();
    assert_eq!(new, old.direct_sum(&BundleSum::new(vec![7])));
    assert!(induced_extension_class(f, &combos, &gs, &model).unwrap().is_zero());
}
