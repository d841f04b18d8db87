//! The three-parameter family of SU(2)-actions on S³-bundles over S² and
//! its classification invariants.
//!
//! A triple (m, n, l) of nonnegative integers with gcd(l, m) = gcd(l, n) = 1
//! (convention gcd(l, 0) = l, so m = 0 forces l = 1) encodes the quotient of
//! SU(2) × S³ by the circle acting with weights (l; m, n); the residual
//! SU(2)-action on the quotient has cyclic and circle isotropy groups read
//! off the weights. This module computes, in exact integer arithmetic:
//! validity/normal forms, isotropy profiles, diffeomorphism type of the
//! underlying bundle, slice data at the exceptional orbits with the
//! clutching class k, fundamental groups of the glued-up models, the
//! equivalence relation and canonical representatives, fixed-point sets of
//! the principal isotropy, and curvature admissibility verdicts.

pub mod tables;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::fp::{Presentation, Word};
use crate::group::Ambient;

pub use tables::{
    count_uot_actions, singular_classification, table1_rows, table2_rows, IsotropyClass,
    NormalizerRow, PiGroup, RealizedClass, RowMode, TwoOrbitRow, UotCount,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionsError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no exceptional orbits when m = 0")]
    NoExceptionalOrbits,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("q1 and q2 must be coprime")]
    NotCoprime,
    #[error("bad regime: {0}")]
    BadRegime(String),
    #[error("no such row: {0}")]
    UnknownRow(String),
    #[error("isotropy chain not allowed: {0}")]
    DisallowedChain(String),
    #[error("unclassified target: {0}")]
    UnclassifiedTarget(String),
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd_u64(gcd_u64(a, b), c)
}

/// Inverse of `a` modulo `m ≥ 1`, in `[0, m)`.
fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    debug_assert!(m >= 1);
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        None
    } else {
        Some(t0.rem_euclid(m))
    }
}

/// Validated, normalized parameters (m ≤ n, l ≥ 0) of an action in the
/// family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ActionParams {
    m: u32,
    n: u32,
    l: u32,
}

impl ActionParams {
    /// Validates and normalizes: m and n must be nonnegative and are
    /// swapped into m ≤ n; l is replaced by |l| (the actions for l and −l
    /// are equivalent); the freeness conditions gcd(l, m) = gcd(l, n) = 1
    /// are enforced with the convention gcd(l, 0) = l.
    pub fn new(m: i64, n: i64, l: i64) -> Result<Self, ActionsError> {
        if m < 0 || n < 0 {
            return Err(ActionsError::InvalidParams(format!(
                "m and n must be nonnegative, got ({m}, {n})"
            )));
        }
        let (m, n) = if m <= n { (m, n) } else { (n, m) };
        let l = l.unsigned_abs();
        let (m, n) = (m as u64, n as u64);
        if gcd_u64(l, m) != 1 {
            return Err(ActionsError::InvalidParams(format!(
                "gcd(l, m) = gcd({l}, {m}) = {} must be 1{}",
                gcd_u64(l, m),
                if m == 0 {
                    " (convention gcd(l, 0) = l, so m = 0 forces l = 1)"
                } else {
                    ""
                },
            )));
        }
        if gcd_u64(l, n) != 1 {
            return Err(ActionsError::InvalidParams(format!(
                "gcd(l, n) = gcd({l}, {n}) = {} must be 1",
                gcd_u64(l, n)
            )));
        }
        Ok(ActionParams {
            m: m as u32,
            n: n as u32,
            l: l as u32,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// gcd(m, n) with the ordinary convention gcd(0, n) = n.
    pub fn gcd_mn(&self) -> u32 {
        gcd_u64(u64::from(self.m), u64::from(self.n)) as u32
    }

    /// The action descends to an effective SO(3)-action exactly when m and
    /// n are both even (m = 0 counts as even): every isotropy group then
    /// contains the center of SU(2).
    pub fn is_so3_effective(&self) -> bool {
        self.m % 2 == 0 && self.n % 2 == 0
    }
}

impl fmt::Display for ActionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({},{})^{}", self.m, self.n, self.l)
    }
}

/// An isotropy type occurring in the family: a (possibly trivial) cyclic
/// group or a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Isotropy {
    Cyclic(u32),
    Circle,
}

impl fmt::Display for Isotropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isotropy::Cyclic(1) => write!(f, "1"),
            Isotropy::Cyclic(k) => write!(f, "Z{k}"),
            Isotropy::Circle => write!(f, "SO(2)"),
        }
    }
}

impl Serialize for Isotropy {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientSpace {
    Sphere2,
    Sphere3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropyProfile {
    pub effective_group: Ambient,
    pub principal: Isotropy,
    pub others: Vec<Isotropy>,
    pub quotient_space: QuotientSpace,
}

/// Isotropy types of the action: Z_m, Z_n and Z_gcd(m,n) when both weights
/// are positive, Z_n and SO(2) when n > m = 0, and the single type SO(2)
/// when m = n = 0. When both weights are even the kernel Z₂ is divided
/// out and all cyclic orders halve.
pub fn isotropy_profile(p: &ActionParams) -> IsotropyProfile {
    let (mut principal, mut others): (Isotropy, Vec<Isotropy>) = if p.m == 0 && p.n == 0 {
        (Isotropy::Circle, Vec::new())
    } else if p.m == 0 {
        (Isotropy::Cyclic(p.n), vec![Isotropy::Circle])
    } else {
        let g = p.gcd_mn();
        let mut others: Vec<Isotropy> = [p.m, p.n]
            .into_iter()
            .filter(|&k| k != g)
            .map(Isotropy::Cyclic)
            .collect();
        others.dedup();
        (Isotropy::Cyclic(g), others)
    };
    let effective_group = if p.is_so3_effective() {
        let halve = |iso: &mut Isotropy| {
            if let Isotropy::Cyclic(k) = iso {
                *k /= 2;
            }
        };
        halve(&mut principal);
        others.iter_mut().for_each(halve);
        Ambient::SO3
    } else {
        Ambient::SU2
    };
    IsotropyProfile {
        effective_group,
        principal,
        others,
        quotient_space: if p.m == 0 && p.n == 0 {
            QuotientSpace::Sphere3
        } else {
            QuotientSpace::Sphere2
        },
    }
}

/// Identity of the underlying 5-manifold (or of a classification target).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ManifoldId {
    S5,
    S3xS2,
    S3TwistS2,
    Wu,
    Brieskorn2333,
    /// k copies of the Wu manifold # l copies of the Brieskorn variety of
    /// type (2,3,3,3).
    ConnSumWuBrieskorn {
        wu: u32,
        brieskorn: u32,
    },
    /// Connected sum of `extra + 1` copies of S³ × S².
    ConnSumS3xS2 {
        extra: u32,
    },
}

impl ManifoldId {
    /// Canonical rendering: single summands collapse to their own names.
    pub fn conn_sum_wu_brieskorn(wu: u32, brieskorn: u32) -> Option<ManifoldId> {
        match (wu, brieskorn) {
            (0, 0) => None,
            (1, 0) => Some(ManifoldId::Wu),
            (0, 1) => Some(ManifoldId::Brieskorn2333),
            _ => Some(ManifoldId::ConnSumWuBrieskorn { wu, brieskorn }),
        }
    }
}

impl fmt::Display for ManifoldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldId::S5 => write!(f, "S^5"),
            ManifoldId::S3xS2 => write!(f, "S^3 x S^2"),
            ManifoldId::S3TwistS2 => write!(f, "S^3 ~x S^2"),
            ManifoldId::Wu => write!(f, "W = SU(3)/SO(3)"),
            ManifoldId::Brieskorn2333 => write!(f, "B(2,3,3,3)"),
            ManifoldId::ConnSumWuBrieskorn { wu, brieskorn } => {
                write!(f, "{wu} W # {brieskorn} B")
            }
            ManifoldId::ConnSumS3xS2 { extra: 0 } => write!(f, "S^3 x S^2"),
            ManifoldId::ConnSumS3xS2 { extra } => {
                write!(f, "#_{} (S^3 x S^2)", extra + 1)
            }
        }
    }
}

/// S³ × S² when m + n is even, the twisted bundle otherwise; l never
/// enters.
pub fn diffeo_type(p: &ActionParams) -> ManifoldId {
    if (p.m + p.n) % 2 == 0 {
        ManifoldId::S3xS2
    } else {
        ManifoldId::S3TwistS2
    }
}

/// Slice data at the two exceptional orbits (m ≥ 1): with d = gcd(n1, n2)
/// and n_j = d·q_j, the slice rotation numbers are a_j ≡ q_i·l⁻¹ (mod q_j),
/// b_j = a_j⁻¹ (mod q_j), and the clutching class k is the unique integer
/// with l = b1·q2 + b2·q1 + k·q1·q2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SliceData {
    pub d: u32,
    pub q1: u32,
    pub q2: u32,
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
    pub k: i64,
}

pub fn slice_data(p: &ActionParams) -> Result<SliceData, ActionsError> {
    if p.m == 0 {
        return Err(ActionsError::NoExceptionalOrbits);
    }
    let (n1, n2, l) = (i64::from(p.m), i64::from(p.n), i64::from(p.l));
    let d = gcd_u64(n1 as u64, n2 as u64) as i64;
    let (q1, q2) = (n1 / d, n2 / d);
    let rotation = |nj: i64, qi: i64, qj: i64| -> (i64, i64) {
        // a_j = q_i · (l⁻¹ mod n_j), reduced mod q_j; b_j = a_j⁻¹ mod q_j.
        let inv_l = mod_inverse(l, nj).expect("gcd(l, n_j) = 1 for valid parameters");
        let a = (qi * inv_l).rem_euclid(qj);
        let b = mod_inverse(a, qj).expect("gcd(a_j, q_j) = 1");
        (a, b)
    };
    let (a1, b1) = rotation(n1, q2, q1);
    let (a2, b2) = rotation(n2, q1, q2);
    let numerator = l - b1 * q2 - b2 * q1;
    debug_assert_eq!(numerator.rem_euclid(q1 * q2), 0);
    let k = numerator.div_euclid(q1 * q2);
    Ok(SliceData {
        d: d as u32,
        q1: q1 as u32,
        q2: q2 as u32,
        a1: a1 as u32,
        a2: a2 as u32,
        b1: b1 as u32,
        b2: b2 as u32,
        k,
    })
}

fn check_pi1_params(n1: u64, n2: u64, b1: u64, b2: u64) -> Result<(u64, u64), ActionsError> {
    if n1 < 1 || n2 < 1 {
        return Err(ActionsError::BadParams("n1, n2 must be >= 1".into()));
    }
    let d = gcd_u64(n1, n2);
    let (q1, q2) = (n1 / d, n2 / d);
    for (b, q, name) in [(b1, q1, "b1"), (b2, q2, "b2")] {
        if b >= q || gcd_u64(b.max(1), q) != 1 || (b == 0 && q != 1) {
            return Err(ActionsError::BadParams(format!(
                "{name} must lie in [0, {q}) and be coprime to it"
            )));
        }
    }
    Ok((q1, q2))
}

/// Order of the fundamental group of the glued two-slice model:
/// gcd(n1, n2, l) with l = b1·q2 + b2·q1 + k·q1·q2.
pub fn pi1_order(n1: u64, n2: u64, b1: u64, b2: u64, k: i64) -> Result<u64, ActionsError> {
    let (q1, q2) = check_pi1_params(n1, n2, b1, b2)?;
    let l = b1 as i64 * q2 as i64 + b2 as i64 * q1 as i64 + k * (q1 * q2) as i64;
    Ok(gcd3(n1, n2, l.unsigned_abs()))
}

/// The Van Kampen presentation of that fundamental group:
/// ⟨e1, e2 | e1^n1, e2^n2, e1^q1 e2^−q2, e1^b1 e2^(b2 + k·q2)⟩.
pub fn pi1_presentation(
    n1: u64,
    n2: u64,
    b1: u64,
    b2: u64,
    k: i64,
) -> Result<Presentation, ActionsError> {
    let (q1, q2) = check_pi1_params(n1, n2, b1, b2)?;
    let relators = vec![
        Word::from_letters([(0, n1 as i64)]),
        Word::from_letters([(1, n2 as i64)]),
        Word::from_letters([(0, q1 as i64), (1, -(q2 as i64))]),
        Word::from_letters([(0, b1 as i64), (1, b2 as i64 + k * q2 as i64)]),
    ];
    Ok(Presentation::new(vec!["e1", "e2"], relators))
}

/// Equivalence of two actions in the family, with the rule that applied.
///
/// Requires equal (m, n). For m = 0 the parameter is frozen to l = 1, so
/// equality of (m, n) decides. For d = gcd(m, n) ≥ 3 the parameter l ≥ 0
/// itself is an invariant (the fixed-point set of the principal isotropy is
/// a pair of lens spaces of order l). For d ≤ 2 the rule is
/// l ≡ ±l' (mod d·q1·q2).
pub fn equivalence_rule(a: &ActionParams, b: &ActionParams) -> (bool, String) {
    if (a.m, a.n) != (b.m, b.n) {
        return (false, "different (m, n)".to_string());
    }
    if a.m == 0 {
        return (
            true,
            "m = 0 freezes l = 1, so equal (m, n) decides".to_string(),
        );
    }
    let d = a.gcd_mn();
    if d >= 3 {
        return (
            a.l == b.l,
            format!("d = {d} >= 3 is rigid: l itself is an invariant"),
        );
    }
    let modulus = u64::from(a.m) * u64::from(a.n) / u64::from(d);
    let la = u64::from(a.l) % modulus.max(1);
    let lb = u64::from(b.l) % modulus.max(1);
    let equivalent = la == lb || (modulus - la) % modulus.max(1) == lb % modulus.max(1);
    (
        equivalent,
        format!("d = {d} congruence: l = ±l' mod {modulus}"),
    )
}

pub fn are_equivalent(a: &ActionParams, b: &ActionParams) -> bool {
    equivalence_rule(a, b).0
}

/// Least l ≥ 0 in the equivalence class; idempotent.
pub fn canonical_form(p: &ActionParams) -> ActionParams {
    if p.m == 0 {
        return *p;
    }
    let d = u64::from(p.gcd_mn());
    if d >= 3 {
        return *p;
    }
    let modulus = u64::from(p.m) * u64::from(p.n) / d;
    let r = u64::from(p.l) % modulus;
    let candidate = r.min((modulus - r) % modulus);
    let canonical = ActionParams {
        m: p.m,
        n: p.n,
        l: candidate as u32,
    };
    debug_assert!(
        ActionParams::new(i64::from(p.m), i64::from(p.n), candidate as i64).is_ok(),
        "validity is invariant on equivalence classes"
    );
    debug_assert!(are_equivalent(p, &canonical));
    canonical
}

/// All pairwise inequivalent canonical forms with the given (m, n) and
/// parameter at most `l_max`.
pub fn enumerate_actions(m: u32, n: u32, l_max: u32) -> Vec<ActionParams> {
    let mut set = BTreeSet::new();
    for l in 0..=l_max {
        if let Ok(p) = ActionParams::new(i64::from(m), i64::from(n), i64::from(l)) {
            set.insert(canonical_form(&p));
        }
    }
    set.into_iter().collect()
}

/// Fixed-point set of the principal isotropy group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FixedSet {
    /// Two disjoint lens spaces S³/Z_l, the quotient of the weighted
    /// circle action ξ·(z1, z2) = (ξ^n1·z1, ξ^n2·z2) on the unit sphere.
    TwoLensSpaces { order: u32, weights: (u32, u32) },
    /// Two disjoint 3-spheres (the m = 0 actions).
    TwoSpheres3,
    /// The principal isotropy acts trivially after effectivization, so its
    /// fixed set carries no extra invariant.
    WholeManifoldOrNone,
}

pub fn fixed_set_principal(p: &ActionParams) -> FixedSet {
    let g = p.gcd_mn();
    if p.m == 0 && p.n == 0 {
        // Principal isotropy SO(2); its normalizer has two components.
        FixedSet::TwoSpheres3
    } else if g >= 3 {
        if p.m == 0 {
            // l = 1 here, and a lens space of order 1 is a 3-sphere.
            FixedSet::TwoSpheres3
        } else {
            FixedSet::TwoLensSpaces {
                order: p.l,
                weights: (p.m, p.n),
            }
        }
    } else {
        // Principal isotropy of order <= 2 acts trivially after
        // effectivization.
        FixedSet::WholeManifoldOrNone
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PositiveVerdict {
    /// Positively curved with its linear action (a round sphere).
    LinearSphere,
    /// Admissible so far as the fixed-point and orbit-space obstructions
    /// go; existence of the metric is open.
    Candidate,
    Excluded,
}

/// Decisive argument behind a curvature verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictReason {
    /// An invariant nonnegatively curved metric comes from a Riemannian
    /// submersion of a product metric.
    ONeill,
    /// The principal isotropy fixes two disjoint 3-dimensional
    /// submanifolds (lens spaces or spheres), which positive curvature
    /// forbids in dimension 5.
    FrankelLensPair,
    /// Too many isolated fixed points for the orbit-space polygon.
    ThreeFixedPoints,
    /// The orbit space has the wrong number of boundary components for a
    /// soul argument (two are required).
    SoulTwoBoundary,
    /// Listed as an open candidate by the partial positive-curvature
    /// classification.
    OpenCandidate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurvatureVerdict {
    pub nonnegative: bool,
    pub positive: PositiveVerdict,
    pub reason: VerdictReason,
}

/// What a curvature verdict can be asked about: an action in the family or
/// one of the other classified actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictTarget {
    Action(ActionParams),
    /// Any of the linear G-actions on the round S⁵.
    LinearSphere(Ambient),
    /// Left multiplication by SU(2) ⊂ SU(3) on the Wu manifold.
    WuSu2,
    /// The SO(3)-action on the Wu manifold by cosets (three fixed points).
    WuSo3,
    /// k W # l B with its fixed-point-gluing SO(3)-action.
    ConnSumWuBrieskorn {
        wu: u32,
        brieskorn: u32,
    },
    /// Connected sums of S³ × S² with the SO(3) ⊂ SO(4) action on each
    /// first factor; `extra + 1` copies in total.
    ConnSumS3xS2 {
        extra: u32,
    },
}

pub fn curvature_verdict(target: &VerdictTarget) -> Result<CurvatureVerdict, ActionsError> {
    let verdict = |nonnegative, positive, reason| CurvatureVerdict {
        nonnegative,
        positive,
        reason,
    };
    Ok(match target {
        VerdictTarget::Action(p) => {
            // gcd(0, n) = n, so the m = 0 candidates are exactly n ∈ {1, 2}
            // and (0, 0) is excluded.
            let g = p.gcd_mn();
            if g == 1 || g == 2 {
                verdict(
                    true,
                    PositiveVerdict::Candidate,
                    VerdictReason::OpenCandidate,
                )
            } else {
                verdict(
                    true,
                    PositiveVerdict::Excluded,
                    VerdictReason::FrankelLensPair,
                )
            }
        }
        VerdictTarget::LinearSphere(_) => {
            verdict(true, PositiveVerdict::LinearSphere, VerdictReason::ONeill)
        }
        VerdictTarget::WuSu2 => verdict(
            true,
            PositiveVerdict::Candidate,
            VerdictReason::OpenCandidate,
        ),
        VerdictTarget::WuSo3 => verdict(
            true,
            PositiveVerdict::Excluded,
            VerdictReason::ThreeFixedPoints,
        ),
        VerdictTarget::ConnSumWuBrieskorn { wu, brieskorn } => match (wu, brieskorn) {
            (0, 0) => {
                return Err(ActionsError::UnclassifiedTarget(
                    "empty connected sum".to_string(),
                ))
            }
            (1, 0) => verdict(
                true,
                PositiveVerdict::Excluded,
                VerdictReason::ThreeFixedPoints,
            ),
            _ => verdict(
                false,
                PositiveVerdict::Excluded,
                VerdictReason::ThreeFixedPoints,
            ),
        },
        VerdictTarget::ConnSumS3xS2 { extra } => verdict(
            *extra == 0,
            PositiveVerdict::Excluded,
            VerdictReason::SoulTwoBoundary,
        ),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurvatureSign {
    Nonnegative,
    Positive,
}

/// Exact rational form of the orbit-space polygon inequality: every corner
/// angle is π/3, so an n-gon needs n·(π/3) ≥ (n−2)·π, i.e. n/3 ≥ n − 2
/// (strict for positive curvature).
pub fn polygon_inequality_holds(n: u64, sign: CurvatureSign) -> bool {
    use crate::field::ratio;
    let lhs = ratio(n as i64, 3);
    let rhs = ratio(n as i64 - 2, 1);
    match sign {
        CurvatureSign::Nonnegative => lhs >= rhs,
        CurvatureSign::Positive => lhs > rhs,
    }
}

/// Largest number of isolated fixed points compatible with the polygon
/// inequality: 3 for nonnegative curvature, 2 for positive.
pub fn max_isolated_fixed_points(sign: CurvatureSign) -> u64 {
    (1..=100)
        .filter(|&n| polygon_inequality_holds(n, sign))
        .max()
        .expect("n = 1 always satisfies the inequality")
}

#[derive(Debug, Clone, Serialize)]
pub struct IsotropyRecord {
    pub principal: Isotropy,
    pub others: Vec<Isotropy>,
}

/// The full machine-readable classification record of one action.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifiedAction {
    pub m: u32,
    pub n: u32,
    pub l: u32,
    pub canonical_l: u32,
    pub effective_group: Ambient,
    pub diffeo_type: ManifoldId,
    pub isotropy: IsotropyRecord,
    pub slice: Option<SliceData>,
    pub pi1_order: u64,
    pub fixed_set: FixedSet,
    pub curvature: CurvatureVerdict,
}

pub fn classify(p: &ActionParams) -> ClassifiedAction {
    let profile = isotropy_profile(p);
    let slice = slice_data(p).ok();
    let pi1 = gcd3(u64::from(p.m), u64::from(p.n), u64::from(p.l));
    ClassifiedAction {
        m: p.m,
        n: p.n,
        l: p.l,
        canonical_l: canonical_form(p).l,
        effective_group: profile.effective_group,
        diffeo_type: diffeo_type(p),
        isotropy: IsotropyRecord {
            principal: profile.principal,
            others: profile.others,
        },
        slice,
        pi1_order: pi1,
        fixed_set: fixed_set_principal(p),
        curvature: curvature_verdict(&VerdictTarget::Action(*p))
            .expect("actions are always classified"),
    }
}
