mod common;

use std::collections::BTreeSet;

use common::{brute_force, is_sai, iso_classes, Tables};
use nmv_core::search::{canonical_form, enumerate, EnumerationTask, Kind};
use nmv_core::NmvAlgebra;
use proptest::prelude::*;

fn tables(alg: &NmvAlgebra) -> Tables {
    (alg.neg_table().as_slice().to_vec(), alg.oplus_table().as_slice().to_vec())
}

fn labelled(n: usize, kind: Kind) -> BTreeSet<Tables> {
    enumerate(&EnumerationTask::new(n, kind)).unwrap().algebras.iter().map(tables).collect()
}

fn check_against_oracle(n: usize, fix_units: bool) {
    let oracle = brute_force(n, fix_units);
    assert_eq!(labelled(n, Kind::Nmv), oracle, "labelled algebras of size {n}");
    let iso = enumerate(&EnumerationTask::new(n, Kind::Nmv).up_to_iso()).unwrap();
    assert_eq!(iso.count(), iso_classes(n, &oracle).len(), "classes of size {n}");
    let sai: BTreeSet<Tables> = oracle.iter().filter(|(neg, op)| is_sai(n, neg, op)).cloned().collect();
    assert_eq!(labelled(n, Kind::NmvSai), sai, "SAI algebras of size {n}");
}

#[test]
fn size_two_is_unique() {
    assert_eq!(enumerate(&EnumerationTask::new(2, Kind::Nmv)).unwrap().count(), 1);
    check_against_oracle(2, false);
}

#[test]
fn size_three_matches_unpruned_oracle() {
    check_against_oracle(3, false);
}

#[test]
fn size_four_matches_unpruned_oracle() {
    check_against_oracle(4, false);
}

#[test]
fn size_five_matches_oracle_with_unit_rows() {
    check_against_oracle(5, true);
}

#[test]
fn up_to_iso_results_are_distinct_classes() {
    for n in 2..=6 {
        let result = enumerate(&EnumerationTask::new(n, Kind::Nmv).up_to_iso()).unwrap();
        let forms: BTreeSet<_> = result.algebras.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), result.count());
        let all = enumerate(&EnumerationTask::new(n, Kind::Nmv)).unwrap();
        let all_forms: BTreeSet<_> = all.algebras.iter().map(canonical_form).collect();
        assert_eq!(forms, all_forms);
    }
}

#[test]
fn enumeration_is_deterministic() {
    let task = EnumerationTask::new(6, Kind::Nmv);
    let a: Vec<_> = enumerate(&task).unwrap().algebras.iter().map(tables).collect();
    let b: Vec<_> = enumerate(&task).unwrap().algebras.iter().map(tables).collect();
    assert_eq!(a, b);
}

#[test]
fn canonical_form_is_invariant_under_every_relabelling() {
    use itertools::Itertools;
    for n in 3..=5 {
        for alg in enumerate(&EnumerationTask::new(n, Kind::Nmv)).unwrap().algebras {
            let form = canonical_form(&alg);
            for mid in (1..n - 1).permutations(n - 2) {
                let perm: Vec<usize> = std::iter::once(0).chain(mid).chain([n - 1]).collect();
                assert_eq!(canonical_form(&alg.permute(&perm).unwrap()), form);
            }
            assert_eq!(canonical_form(&form.to_algebra()), form);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_size_six_algebras_keep_their_form(
        (idx, mid) in (0usize..72).prop_flat_map(|i| (Just(i), Just((1..5).collect::<Vec<usize>>()).prop_shuffle()))
    ) {
        let algebras = enumerate(&EnumerationTask::new(6, Kind::Nmv)).unwrap().algebras;
        let alg = &algebras[idx % algebras.len()];
        let perm: Vec<usize> = std::iter::once(0).chain(mid).chain([5]).collect();
        prop_assert_eq!(canonical_form(&alg.permute(&perm).unwrap()), canonical_form(alg));
    }
}
