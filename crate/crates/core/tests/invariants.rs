use thomforge::algebra::{rat, Rational};
use thomforge::chern::GermSignature;
use thomforge::database::{Database, EntryKind, SingularityKey};
use thomforge::invariants::*;
use thomforge::Error;

fn sig(w: &[u64], d: &[u64]) -> GermSignature {
    GermSignature::new(w.to_vec(), d.to_vec()).unwrap()
}

fn count(db: &Database, s: &GermSignature, name: &str) -> Rational {
    let key = SingularityKey::new(name, s.kappa(), EntryKind::TpSource);
    count_stable(db, s, &key).unwrap().value
}

#[test]
fn stable_counts() {
    let db = Database::bundled();
    let s = sig(&[1, 1, 1], &[2, 2, 1]);
    assert_eq!(count(&db, &s, "A3"), rat(2));
    assert_eq!(count(&db, &s, "A1A2"), rat(0));
    assert_eq!(count(&db, &s, "A1^3"), rat(0));
    let s = sig(&[2, 9, 16], &[18, 11, 16]);
    assert_eq!(count(&db, &s, "A3"), rat(16));
    assert_eq!(count(&db, &s, "A1A2"), rat(105));
    assert_eq!(count(&db, &s, "A1^3"), rat(98));
    assert_eq!(count(&db, &sig(&[1, 1, 1], &[2, 2, 2]), "A3"), rat(23));
}

#[test]
fn stable_germ_counts_itself() {
    let db = Database::bundled();
    assert_eq!(count(&db, &sig(&[1], &[2]), "A1"), rat(1));
    assert_eq!(count(&db, &sig(&[1, 2], &[3, 2]), "A2"), rat(1));
    assert_eq!(count(&db, &sig(&[1, 2], &[3, 2]), "A1^2"), rat(0));
    assert_eq!(count(&db, &sig(&[1, 1], &[1, 2, 2]), "A1"), rat(1));
}

#[test]
fn count_all_lists_codim_m_types() {
    let db = Database::bundled();
    let all = count_all(&db, &sig(&[2, 9, 16], &[18, 11, 16])).unwrap();
    let names: Vec<_> = all.iter().map(|(k, _)| k.name.clone()).collect();
    assert!(names.contains(&"A3".to_string()) && names.contains(&"A2A1".to_string()));
    assert!(all.iter().all(|(k, _)| k.kappa == 0));
}

#[test]
fn count_preconditions() {
    let db = Database::bundled();
    let s = sig(&[1, 1, 1], &[2, 2, 1]);
    let key = SingularityKey::new("A2", 0, EntryKind::TpSource);
    assert!(matches!(count_stable(&db, &s, &key), Err(Error::CodimMismatch { .. })));
    let key = SingularityKey::new("A0^2", 1, EntryKind::TpSource);
    assert!(matches!(count_stable(&db, &s, &key), Err(Error::KappaMismatch { .. })));
}

#[test]
fn image_milnor_numbers() {
    let db = Database::bundled();
    let expected = [18, 186, 844, 2620, 6510];
    for (k, e) in (2..=6).zip(expected) {
        let s = sig(&[1, 2, 2 * k - 1], &[1, 2 * k, 2 * k + 1, 2 * (2 * k - 1)]);
        assert_eq!(mu_image(&db, &s).unwrap().value, rat(e as i64), "k={k}");
    }
    let expected = [252, 837, 1968, 3825, 6588];
    for (k, e) in (2..=6).zip(expected) {
        let s = sig(&[1, 1, 1], &[1, 2, 2, 2 * k + 1]);
        assert_eq!(mu_image(&db, &s).unwrap().value, rat(e as i64), "k={k}");
    }
    for l in 1..=5 {
        let s = sig(&[l, l, 1], &[2 * l, 2 * l, 3 * l, 1]);
        assert_eq!(mu_image(&db, &s).unwrap().value, rat(45 * l as i64 - 12));
    }
    assert_eq!(mu_image(&db, &sig(&[2, 1], &[2, 2, 3])).unwrap().value, rat(0));
}

#[test]
fn quadruple_point_family() {
    let db = Database::bundled();
    for k in 1..=6u64 {
        let s = sig(&[k + 2, 2, k], &[k + 2, 2, 2 * k + 2, 3 * k]);
        assert_eq!(mu_image(&db, &s).unwrap().value, rat(k as i64), "k={k}");
        assert_eq!(mu_image2(&db, &s).unwrap().value, rat(0), "k={k}");
    }
    assert_eq!(mu_image(&db, &sig(&[4, 2, 2], &[4, 2, 6, 6])).unwrap().value, rat(2));
    assert_eq!(mu_image2(&db, &sig(&[1, 1], &[1, 2, 2])).unwrap().value, rat(0));
}

#[test]
fn discriminant_milnor_numbers() {
    let db = Database::bundled();
    assert_eq!(mu_discriminant(&db, &sig(&[1, 1, 1], &[2, 2, 1])).unwrap().value, rat(1));
    assert_eq!(mu_discriminant(&db, &sig(&[2, 9, 16], &[18, 11, 16])).unwrap().value, rat(183));
    assert_eq!(mu_discriminant(&db, &sig(&[1, 2], &[3, 2])).unwrap().value, rat(0));
}

#[test]
fn milnor_preconditions() {
    let db = Database::bundled();
    assert!(matches!(
        mu_image(&db, &sig(&[1, 1, 1, 1], &[1, 1, 1, 2, 2])),
        Err(Error::BeyondValidity { .. })
    ));
    assert!(matches!(mu_image(&db, &sig(&[1], &[2])), Err(Error::KappaMismatch { .. })));
    assert!(matches!(
        mu_discriminant(&db, &sig(&[1, 1], &[1, 2, 2])),
        Err(Error::KappaMismatch { .. })
    ));
}

#[test]
fn non_integral_values_flagged() {
    let r = InvariantResult::new(Rational::new(1.into(), 2.into()));
    assert!(!r.integral && !r.warnings.is_empty());
    let r = InvariantResult::new(rat(3));
    assert!(r.integral && r.nonnegative && r.warnings.is_empty());
}
