//! Exact-arithmetic toolkit for classifying SO(3)- and SU(2)-actions on
//! compact simply-connected 5-manifolds.
//!
//! The crate is organized in layers:
//!
//! * [`field`] — exact arithmetic in Q(√2, √5), the coordinate domain for
//!   every concrete group element.
//! * [`quat`] — unit quaternions over the field (elements of SU(2)), the
//!   2-fold cover onto SO(3), and a symbolic circle layer for rotations
//!   whose cosines leave the field.
//! * [`group`] — finite subgroups of SU(2) and SO(3): closure generation,
//!   the standard catalog, recognition, normal subgroups, normalizers and
//!   quotients.
//! * [`fp`] — finitely presented groups: a presentation parser, Todd-Coxeter
//!   coset enumeration and abelianization via Smith normal form.
//! * [`actions`] — the three-parameter family of actions on S³-bundles over
//!   S², its invariants (slice data, fundamental groups, equivalence,
//!   fixed sets) and curvature admissibility verdicts.
//! * [`verify`] — executable cross-checks tying the group engines to the
//!   action model, with machine-readable reports.

pub mod actions;
pub mod field;
pub mod fp;
pub mod group;
pub mod quat;
pub mod verify;

pub use actions::{ActionParams, CurvatureVerdict, IsotropyProfile, ManifoldId, SliceData};
pub use field::{FieldElement, Rational};
pub use fp::{CosetResult, CosetStatus, Presentation, Word};
pub use group::{Ambient, FiniteSubgroup, GroupElement, IsoType, So3Element};
pub use quat::{RotationMatrix, UnitQuat};
pub use verify::{VerificationReport, VerifyStatus};
