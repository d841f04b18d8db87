//! Cross-engine consistency: the action model, the slice invariants and
//! the coset enumerator must tell one coherent story.

use pentact::actions::{
    canonical_form, classify, enumerate_actions, pi1_presentation, slice_data, ActionParams,
};
use pentact::fp::{todd_coxeter, CosetStatus, DEFAULT_MAX_COSETS};
use pentact::group::{project_so3, su2_catalog, IsoType};

// Valid parameters always produce a simply-connected total space: fed
// through the slice data, the glued-model presentation must collapse to
// the trivial group.
#[test]
fn valid_parameters_give_simply_connected_models() {
    let mut checked = 0;
    for m in 1..=10i64 {
        for n in m..=10 {
            for l in 0..=12 {
                let Ok(p) = ActionParams::new(m, n, l) else {
                    continue;
                };
                let s = slice_data(&p).expect("m >= 1");
                let presentation = pi1_presentation(
                    u64::from(p.m()),
                    u64::from(p.n()),
                    u64::from(s.b1),
                    u64::from(s.b2),
                    s.k,
                )
                .expect("slice data is always legal");
                let result = todd_coxeter(&presentation, DEFAULT_MAX_COSETS);
                assert_eq!(
                    result.status,
                    CosetStatus::Completed(1),
                    "{p} must be simply connected (slice {s:?})"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

// Enumerated class representatives are canonical, valid, and pairwise
// inequivalent, and their full classification records are internally
// consistent.
#[test]
fn enumeration_yields_consistent_records() {
    for (m, n) in [(1, 2), (2, 2), (3, 3), (4, 6), (2, 3), (5, 10)] {
        let classes = enumerate_actions(m, n, 30);
        for (i, a) in classes.iter().enumerate() {
            assert_eq!(canonical_form(a), *a);
            let record = classify(a);
            assert_eq!(record.pi1_order, 1);
            assert_eq!(record.canonical_l, a.l());
            for b in classes.iter().skip(i + 1) {
                assert!(!pentact::actions::are_equivalent(a, b));
            }
        }
    }
}

// The subgroup lattice engine agrees with the coset enumerator on the
// orders of the catalog groups' standard presentations.
#[test]
fn group_orders_agree_with_presentations() {
    use pentact::fp::Presentation;
    // Dicyclic family: <a, b | a^(2m), b^2 = a^m, b a b^-1 = a^-1>.
    for m in 2..=8u32 {
        let presented = Presentation::parse(&format!(
            "<a, b | a^{}, b^2 = a^{m}, b a b^-1 = a^-1>",
            2 * m
        ))
        .unwrap();
        let enumerated = todd_coxeter(&presented, DEFAULT_MAX_COSETS);
        let constructed = su2_catalog(IsoType::Dicyclic(m)).unwrap();
        assert_eq!(
            enumerated.status,
            CosetStatus::Completed(constructed.order()),
            "Dic{m}"
        );
        // The rotation image halves the order and is dihedral:
        // <r, s | r^m, s^2, (rs)^2>.
        let image = project_so3(&constructed);
        let dihedral =
            Presentation::parse(&format!("<r, s | r^{m}, s^2, r s r s>")).unwrap();
        assert_eq!(
            todd_coxeter(&dihedral, DEFAULT_MAX_COSETS).status,
            CosetStatus::Completed(image.order()),
            "D{m}"
        );
    }
}
