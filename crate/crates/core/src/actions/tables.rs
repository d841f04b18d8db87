//! Data tables behind the orbit-type classification: the normalizer table
//! for single-orbit-type counts, and the two-orbit-type table with its
//! realized classes.
//!
//! Continuous normalizers (circles and their extensions) are recorded as
//! data with only finitely checkable facts verified elsewhere; the finite
//! rows are recomputed from the group engine by the verifiers.

use serde::Serialize;

use super::{ActionsError, ManifoldId};
use crate::group::{Ambient, IsoType};

/// Subgroup classes that appear as isotropy groups in the tables: the
/// finite families, a circle, the normalizer of a circle (O(2) or Pin(2)),
/// or the whole acting group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotropyClass {
    Finite(IsoType),
    Circle,
    CircleNormalizer,
    Full,
}

impl IsotropyClass {
    pub fn dimension(&self) -> u32 {
        match self {
            IsotropyClass::Finite(_) => 0,
            IsotropyClass::Circle | IsotropyClass::CircleNormalizer => 1,
            IsotropyClass::Full => 3,
        }
    }

    pub fn name(&self, ambient: Ambient) -> String {
        match (self, ambient) {
            (IsotropyClass::Finite(t), _) => t.to_string(),
            (IsotropyClass::Circle, _) => "SO(2)".to_string(),
            (IsotropyClass::CircleNormalizer, Ambient::SO3) => "O(2)".to_string(),
            (IsotropyClass::CircleNormalizer, Ambient::SU2) => "Pin(2)".to_string(),
            (IsotropyClass::Full, Ambient::SO3) => "SO(3)".to_string(),
            (IsotropyClass::Full, Ambient::SU2) => "SU(2)".to_string(),
        }
    }
}

/// π_{n−1}(N(H)/H) as recorded in the normalizer table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PiGroup {
    Trivial,
    Z2,
    Z,
}

/// Whether a row's normalizer claim is finitely recomputable or recorded
/// as data (continuous normalizers), with only the normalizing property
/// witnessed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowMode {
    Finite,
    DataOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalizerRow {
    pub ambient: Ambient,
    pub h: &'static str,
    pub normalizer: &'static str,
    pub quotient: &'static str,
    pub pi: PiGroup,
    pub mode: RowMode,
}

/// The normalizer table: for each isotropy class H, its normalizer N(H),
/// the quotient N(H)/H, and π_{n−1}(N(H)/H) where n = 2 + dim H is the
/// cohomogeneity. Parametric rows carry m ≥ 3.
pub fn table1_rows() -> Vec<NormalizerRow> {
    use Ambient::{SO3, SU2};
    use PiGroup::{Trivial, Z, Z2};
    use RowMode::{DataOnly, Finite};
    let row = |ambient, h, normalizer, quotient, pi, mode| NormalizerRow {
        ambient,
        h,
        normalizer,
        quotient,
        pi,
        mode,
    };
    vec![
        row(SO3, "1", "SO(3)", "SO(3)", Z2, DataOnly),
        row(SO3, "Z2", "O(2)", "SO(2)", Z, DataOnly),
        row(SO3, "Zm (m>=3)", "O(2)", "O(2)", Z, DataOnly),
        row(SO3, "D2", "O", "D3", Trivial, Finite),
        row(SO3, "Dm (m>=3)", "D2m", "Z2", Trivial, Finite),
        row(SO3, "T", "O", "Z2", Trivial, Finite),
        row(SO3, "I", "I", "1", Trivial, Finite),
        row(SO3, "O", "O", "1", Trivial, Finite),
        row(SO3, "SO(2)", "O(2)", "Z2", Trivial, DataOnly),
        row(SO3, "O(2)", "O(2)", "1", Trivial, DataOnly),
        row(SU2, "1", "SU(2)", "SU(2)", Trivial, DataOnly),
        row(SU2, "Z2", "SU(2)", "SO(3)", Z2, DataOnly),
        row(SU2, "Zm (m>=3)", "Pin(2)", "Pin(2)", Z, DataOnly),
        row(SU2, "Dic2", "O*", "D3", Trivial, Finite),
        row(SU2, "Dicm (m>=3)", "Dic2m", "Z2", Trivial, Finite),
        row(SU2, "T*", "O*", "Z2", Trivial, Finite),
        row(SU2, "I*", "I*", "1", Trivial, Finite),
        row(SU2, "O*", "O*", "1", Trivial, Finite),
        row(SU2, "SO(2)", "Pin(2)", "Z2", Trivial, DataOnly),
        row(SU2, "Pin(2)", "Pin(2)", "1", Trivial, DataOnly),
    ]
}

/// Number of equivalence classes of G-manifolds with one isotropy type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UotCount {
    Finite(u32),
    CountablyInfinite,
}

impl PiGroup {
    pub fn count(self) -> UotCount {
        match self {
            PiGroup::Trivial => UotCount::Finite(1),
            PiGroup::Z2 => UotCount::Finite(2),
            PiGroup::Z => UotCount::CountablyInfinite,
        }
    }
}

/// Classes of G-manifolds with only one isotropy type (H) and orbit space
/// a sphere of the given cohomogeneity: the order of π_{n−1}(N(H)/H), read
/// from the normalizer table.
pub fn count_uot_actions(
    ambient: Ambient,
    h: IsotropyClass,
    cohomogeneity: u32,
) -> Result<UotCount, ActionsError> {
    let expected_cohom = 2 + h.dimension();
    if cohomogeneity != expected_cohom {
        return Err(ActionsError::UnknownRow(format!(
            "H = {} has cohomogeneity {expected_cohom}, not {cohomogeneity}",
            h.name(ambient)
        )));
    }
    let pi = match (ambient, h) {
        (_, IsotropyClass::Finite(IsoType::Cyclic(1)))
        | (_, IsotropyClass::Finite(IsoType::Trivial)) => match ambient {
            Ambient::SO3 => PiGroup::Z2,
            Ambient::SU2 => PiGroup::Trivial,
        },
        (Ambient::SO3, IsotropyClass::Finite(IsoType::Cyclic(2))) => PiGroup::Z,
        (Ambient::SU2, IsotropyClass::Finite(IsoType::Cyclic(2))) => PiGroup::Z2,
        (_, IsotropyClass::Finite(IsoType::Cyclic(_))) => PiGroup::Z,
        // Degenerate parameters (D1 = Z2, Dic1 = Z4) must be named by their
        // cyclic tags.
        (Ambient::SO3, IsotropyClass::Finite(IsoType::KleinFour)) => PiGroup::Trivial,
        (Ambient::SO3, IsotropyClass::Finite(IsoType::Dihedral(m))) if m >= 2 => PiGroup::Trivial,
        (Ambient::SO3, IsotropyClass::Finite(IsoType::Tet | IsoType::Oct | IsoType::Ico)) => {
            PiGroup::Trivial
        }
        (Ambient::SU2, IsotropyClass::Finite(IsoType::Dicyclic(m))) if m >= 2 => PiGroup::Trivial,
        (
            Ambient::SU2,
            IsotropyClass::Finite(IsoType::BinTet | IsoType::BinOct | IsoType::BinIco),
        ) => PiGroup::Trivial,
        (_, IsotropyClass::Circle) | (_, IsotropyClass::CircleNormalizer) => PiGroup::Trivial,
        (a, h) => {
            return Err(ActionsError::UnknownRow(format!(
                "H = {} is not a subgroup class of {a}",
                h.name(a)
            )))
        }
    };
    Ok(pi.count())
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoOrbitRow {
    pub label: char,
    pub ambient: Ambient,
    pub h: &'static str,
    pub k: &'static str,
    pub pi_classes: &'static str,
    pub pi0: &'static str,
    pub bound: &'static str,
}

/// The two-orbit-type table: principal isotropy H, singular isotropy K,
/// the classifying homotopy data, and the resulting upper bound on the
/// number of actions.
pub fn table2_rows() -> Vec<TwoOrbitRow> {
    use Ambient::{SO3, SU2};
    let row = |label, ambient, h, k, pi_classes, pi0, bound| TwoOrbitRow {
        label,
        ambient,
        h,
        k,
        pi_classes,
        pi0,
        bound,
    };
    vec![
        row('a', SO3, "1", "SO(2)", "pi1(RP^2) = Z2", "1", "2"),
        row('b', SU2, "1", "SO(2)", "pi1(RP^2) = Z2", "1", "2"),
        row('c', SU2, "1", "SU(2)", "0", "1", "1"),
        row('d', SO3, "Z2", "SO(2)", "0", "1", "1"),
        row('e', SU2, "Z2", "SO(2)", "pi1(RP^2) = Z2", "1", "2"),
        row('f', SO3, "Zm (m>=3)", "SO(2)", "0", "1", "1"),
        row('g', SU2, "Zm (m>=3)", "SO(2)", "0", "1", "1"),
        row('h', SO3, "Z2", "O(2)", "pi1(S^1) = Z", "Z2", "Z"),
        row('i', SO3, "Dm", "O(2)", "0", "Z2", "1"),
        row('j', SO3, "SO(2)", "SO(3)", "0", "1", "1"),
    ]
}

/// One realized equivalence class of an action with the given orbit-type
/// chain.
#[derive(Debug, Clone, Serialize)]
pub struct RealizedClass {
    pub manifold: ManifoldId,
    pub action: String,
    pub note: Option<String>,
}

fn class(manifold: ManifoldId, action: &str) -> RealizedClass {
    RealizedClass {
        manifold,
        action: action.to_string(),
        note: None,
    }
}

fn class_note(manifold: ManifoldId, action: &str, note: &str) -> RealizedClass {
    RealizedClass {
        manifold,
        action: action.to_string(),
        note: Some(note.to_string()),
    }
}

/// The realized classes for an allowed chain (H) ≤ (K) of principal and
/// singular isotropy types, per the two-orbit-type table, the
/// cohomogeneity-3 family, and the three-orbit-type list. For the
/// cohomogeneity-3 chain (SO(2), SO(3)) the optional `boundary_spheres`
/// picks one member of the family (orbit space a 3-sphere with that many
/// open 3-disks removed).
pub fn singular_classification(
    ambient: Ambient,
    h: IsotropyClass,
    k: IsotropyClass,
    boundary_spheres: Option<u32>,
) -> Result<Vec<RealizedClass>, ActionsError> {
    use Ambient::{SO3, SU2};
    let disallowed = || {
        Err(ActionsError::DisallowedChain(format!(
            "({}, {}) is not an allowed principal/singular pair for {ambient}",
            h.name(ambient),
            k.name(ambient)
        )))
    };
    // Normalize Cyclic(1) to the trivial class.
    let h = match h {
        IsotropyClass::Finite(IsoType::Cyclic(1)) => IsotropyClass::Finite(IsoType::Trivial),
        other => other,
    };
    match (ambient, h, k) {
        // Row (a): the two SO(3)-actions with isotropies {1} and SO(2).
        (SO3, IsotropyClass::Finite(IsoType::Trivial), IsotropyClass::Circle) => Ok(vec![
            class(ManifoldId::S5, "linear action A -> diag(A, A) on S^5"),
            class(
                ManifoldId::S3xS2,
                "diagonal SO(3) in SO(4) x SO(3): the bundle action with (m, n, l) = (0, 2, 1)",
            ),
        ]),
        // Row (b): the two SU(2)-actions with isotropies {1} and SO(2).
        (SU2, IsotropyClass::Finite(IsoType::Trivial), IsotropyClass::Circle) => Ok(vec![
            class(
                ManifoldId::S3TwistS2,
                "the bundle action with (m, n, l) = (0, 1, 1)",
            ),
            class(
                ManifoldId::Wu,
                "left multiplication by SU(2) in SU(3) on SU(3)/SO(3)",
            ),
        ]),
        // Row (c): the linear SU(2)-action on S^5 with a circle of fixed
        // points.
        (SU2, IsotropyClass::Finite(IsoType::Trivial), IsotropyClass::Full) => Ok(vec![class(
            ManifoldId::S5,
            "linear action B -> diag(B, 1) on S^5 in C^3",
        )]),
        // Rows (d)-(g): principal Z_m, singular SO(2).
        (SO3, IsotropyClass::Finite(IsoType::Cyclic(m)), IsotropyClass::Circle) => Ok(vec![class(
            ManifoldId::S3xS2,
            &format!(
                "the bundle action with (m, n, l) = (0, {}, 1), effectively SO(3)",
                2 * m
            ),
        )]),
        (SU2, IsotropyClass::Finite(IsoType::Cyclic(2)), IsotropyClass::Circle) => {
            Ok(vec![class_note(
                ManifoldId::S3xS2,
                "the bundle action with (m, n, l) = (0, 2, 1), read as an SU(2)-action",
                "the table bound for this row is 2, but only this class is exhibited; \
                 the action is ineffective as SU(2) (the center acts trivially)",
            )])
        }
        (SU2, IsotropyClass::Finite(IsoType::Cyclic(m)), IsotropyClass::Circle) => {
            let manifold = if m % 2 == 0 {
                ManifoldId::S3xS2
            } else {
                ManifoldId::S3TwistS2
            };
            let action = format!("the bundle action with (m, n, l) = (0, {m}, 1)");
            Ok(vec![if m % 2 == 0 {
                class_note(
                    manifold,
                    &action,
                    &format!(
                        "ineffective as SU(2); effectively the SO(3)-action with principal Z{}",
                        m / 2
                    ),
                )
            } else {
                class(manifold, &action)
            }])
        }
        // Rows (h), (i): no simply-connected examples.
        (
            SO3,
            IsotropyClass::Finite(IsoType::Cyclic(2) | IsoType::KleinFour | IsoType::Dihedral(_)),
            IsotropyClass::CircleNormalizer,
        ) => Ok(Vec::new()),
        // Row (j) and the cohomogeneity-3 family: (SO(2), SO(3)).
        (SO3, IsotropyClass::Circle, IsotropyClass::Full) => {
            let member = |b: u32| -> Result<RealizedClass, ActionsError> {
                match b {
                    0 => Err(ActionsError::BadParams(
                        "a compact orbit space needs at least one boundary sphere".into(),
                    )),
                    1 => Ok(class(
                        ManifoldId::S5,
                        "linear action A -> diag(A, 1, 1, 1) on S^5; orbit space a 3-disk",
                    )),
                    b => Ok(class(
                        ManifoldId::ConnSumS3xS2 { extra: b - 2 },
                        &format!(
                            "connected sum of {} copies of S^3 x S^2 with the SO(3) in SO(4) \
                             action on each first factor; {b} fixed 2-spheres, orbit space S^3 \
                             minus {b} open 3-disks",
                            b - 1
                        ),
                    )),
                }
            };
            match boundary_spheres {
                Some(b) => Ok(vec![member(b)?]),
                None => Ok(vec![member(1)?, {
                    let mut c = member(2)?;
                    c.note =
                        Some("one class for each number of boundary spheres b >= 1".to_string());
                    c
                }]),
            }
        }
        // Three orbit types: Z2 x Z2 in O(2) in SO(3).
        (SO3, IsotropyClass::Finite(IsoType::KleinFour), IsotropyClass::Full) => {
            Ok(vec![
            class(
                ManifoldId::S5,
                "irreducible SO(3)-representation on symmetric traceless matrices; two isolated \
                 fixed points",
            ),
            class(
                ManifoldId::Wu,
                "SO(3) by cosets on SU(3)/SO(3); three isolated fixed points",
            ),
            class(
                ManifoldId::Brieskorn2333,
                "the Brieskorn variety of type (2,3,3,3); four isolated fixed points",
            ),
            class_note(
                ManifoldId::ConnSumWuBrieskorn { wu: 2, brieskorn: 0 },
                "connected sum of two Wu manifolds at fixed points; four isolated fixed points",
                "equivariant connected sums realize every k W # l B with k + l >= 2",
            ),
        ])
        }
        _ => disallowed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uot_counts_match_table() {
        assert_eq!(
            count_uot_actions(Ambient::SO3, IsotropyClass::Finite(IsoType::Trivial), 2).unwrap(),
            UotCount::Finite(2)
        );
        assert_eq!(
            count_uot_actions(Ambient::SU2, IsotropyClass::Finite(IsoType::Cyclic(5)), 2).unwrap(),
            UotCount::CountablyInfinite
        );
        assert_eq!(
            count_uot_actions(Ambient::SO3, IsotropyClass::CircleNormalizer, 3).unwrap(),
            UotCount::Finite(1)
        );
        assert_eq!(
            count_uot_actions(Ambient::SU2, IsotropyClass::Finite(IsoType::Trivial), 2).unwrap(),
            UotCount::Finite(1),
            "only one free SU(2)-manifold"
        );
        assert_eq!(
            count_uot_actions(Ambient::SO3, IsotropyClass::Finite(IsoType::Cyclic(2)), 2).unwrap(),
            UotCount::CountablyInfinite
        );
        // Wrong cohomogeneity or wrong ambient family.
        assert!(count_uot_actions(Ambient::SO3, IsotropyClass::Circle, 2).is_err());
        assert!(
            count_uot_actions(Ambient::SU2, IsotropyClass::Finite(IsoType::Dihedral(3)), 2)
                .is_err()
        );
    }

    #[test]
    fn singular_rows() {
        let row = singular_classification(
            Ambient::SO3,
            IsotropyClass::Finite(IsoType::Cyclic(3)),
            IsotropyClass::Circle,
            None,
        )
        .unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].manifold, ManifoldId::S3xS2);
        assert!(row[0].action.contains("(0, 6, 1)"));

        // No dihedral chains under SU(2).
        assert!(matches!(
            singular_classification(
                Ambient::SU2,
                IsotropyClass::Finite(IsoType::KleinFour),
                IsotropyClass::CircleNormalizer,
                None,
            ),
            Err(ActionsError::DisallowedChain(_))
        ));

        // Cohomogeneity 3 with two boundary spheres: plain S^3 x S^2.
        let family = singular_classification(
            Ambient::SO3,
            IsotropyClass::Circle,
            IsotropyClass::Full,
            Some(2),
        )
        .unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(family[0].manifold, ManifoldId::ConnSumS3xS2 { extra: 0 });

        // O(2)-singular rows are legal but empty.
        let empty = singular_classification(
            Ambient::SO3,
            IsotropyClass::Finite(IsoType::Dihedral(4)),
            IsotropyClass::CircleNormalizer,
            None,
        )
        .unwrap();
        assert!(empty.is_empty());
    }
}
