//! Cross-module checks on discriminants beyond the worked examples.

use ffclass::classgroup::ClassGroupTable;
use ffclass::oracle::{oracle_classes_with, OracleOptions, Schedule};
use ffclass::report::classify;
use ffclass::selftest::squarefree_monics;
use ffclass::{Discriminant, EllipticCurve, PrimeField};

#[test]
fn genus_two_tables_are_consistent() {
    let field = PrimeField::new(3).unwrap();
    for alpha in squarefree_monics(field, 5) {
        let disc = Discriminant::new(alpha.clone()).unwrap();
        let c = classify(&disc).unwrap();
        let t = &c.table;
        let product: u64 = t.invariant_factors().iter().product();
        assert_eq!(product as usize, t.class_number(), "alpha = {alpha}");
        for i in 0..t.len() {
            let inv = t.inverse_index(i).unwrap();
            assert_eq!(t.compose_index(i, inv).unwrap(), t.identity_index());
        }
        let genus_size = t.len() / c.partition.count();
        assert!(c.partition.genera.iter().all(|g| g.len() == genus_size));
    }
}

#[test]
fn class_number_matches_point_count_for_cubics_over_f11() {
    let field = PrimeField::new(11).unwrap();
    for alpha in squarefree_monics(field, 3).into_iter().step_by(37) {
        let disc = Discriminant::new(alpha).unwrap();
        let curve = EllipticCurve::new(&disc).unwrap();
        let table = ClassGroupTable::enumerate(&disc).unwrap();
        assert_eq!(curve.enumerate().len(), table.class_number());
    }
}

#[test]
fn oracle_schedules_agree_on_a_split_cubic() {
    let field = PrimeField::new(5).unwrap();
    let disc = Discriminant::new(ffclass::cli::parse_poly("x^3+x", field).unwrap()).unwrap();
    let mut opts = OracleOptions::new(3);
    let forward = oracle_classes_with(&disc, &opts).unwrap();
    opts.schedule = Schedule::Reverse;
    let reverse = oracle_classes_with(&disc, &opts).unwrap();
    assert_eq!(forward.orbits, reverse.orbits);
    assert_eq!(forward.orbit_count, 4);
}
