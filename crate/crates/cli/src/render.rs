//! Plain-text rendering of the same records the JSON mode serializes, so
//! the two modes agree on every numeric field by construction.

use std::fmt::Write;

use pentact::actions::{
    ActionParams, ClassifiedAction, FixedSet, NormalizerRow, PositiveVerdict, SliceData,
    TwoOrbitRow,
};
use pentact::group::SubgroupExport;
use pentact::verify::VerificationReport;

pub fn classify_text(record: &ClassifiedAction) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "action N({},{})^{}", record.m, record.n, record.l);
    let _ = writeln!(out, "  underlying manifold: {}", record.diffeo_type);
    let _ = writeln!(out, "  effective group: {}", record.effective_group);
    let _ = writeln!(out, "  canonical l: {}", record.canonical_l);
    let others = record
        .isotropy
        .others
        .iter()
        .map(|o| o.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(
        out,
        "  isotropy: principal {}{}",
        record.isotropy.principal,
        if others.is_empty() {
            " (single type)".to_string()
        } else {
            format!(", others {others}")
        }
    );
    match &record.slice {
        Some(s) => {
            let _ = writeln!(
                out,
                "  slice: d={} q=({},{}) a=({},{}) b=({},{}) k={}",
                s.d, s.q1, s.q2, s.a1, s.a2, s.b1, s.b2, s.k
            );
        }
        None => {
            let _ = writeln!(out, "  slice: none (no exceptional orbits, m = 0)");
        }
    }
    let _ = writeln!(out, "  pi1 order: {}", record.pi1_order);
    let _ = writeln!(out, "  fixed set: {}", fixed_set_line(&record.fixed_set));
    let _ = write!(
        out,
        "  curvature: nonnegative {}; positive {:?} ({:?})",
        if record.curvature.nonnegative {
            "yes"
        } else {
            "no"
        },
        record.curvature.positive,
        record.curvature.reason
    );
    out
}

fn fixed_set_line(f: &FixedSet) -> String {
    match f {
        FixedSet::TwoLensSpaces { order, weights } => format!(
            "two lens spaces S^3/Z{order} (weights {}, {})",
            weights.0, weights.1
        ),
        FixedSet::TwoSpheres3 => "two 3-spheres".to_string(),
        FixedSet::WholeManifoldOrNone => {
            "trivial principal isotropy: no separate fixed set".to_string()
        }
    }
}

pub fn enumerate_text(m: u32, n: u32, lmax: u32, classes: &[ActionParams]) -> String {
    let mut out = format!(
        "{} inequivalent classes with (m, n) = ({m}, {n}) and l <= {lmax}:",
        classes.len()
    );
    for c in classes {
        let _ = write!(out, "\n  {c}");
    }
    out
}

pub fn slice_text(p: &ActionParams, s: &SliceData) -> String {
    format!(
        "slice data of {p}:\n  d = {}\n  (q1, q2) = ({}, {})\n  rotation numbers (a1, a2) = \
         ({}, {})\n  inverses (b1, b2) = ({}, {})\n  clutching class k = {}\n  check: l = \
         b1*q2 + b2*q1 + k*q1*q2 = {}",
        s.d,
        s.q1,
        s.q2,
        s.a1,
        s.a2,
        s.b1,
        s.b2,
        s.k,
        p.l()
    )
}

pub fn pi1_text(
    n1: u64,
    n2: u64,
    b1: u64,
    b2: u64,
    k: i64,
    order: &u64,
    coset: Option<(&'static str, Option<usize>, usize)>,
) -> String {
    let mut out = format!(
        "pi1 of the model (n1,n2,b1,b2,k) = ({n1},{n2},{b1},{b2},{k}): cyclic of order {order}"
    );
    if let Some((status, coset_order, used)) = coset {
        match coset_order {
            Some(o) => {
                let _ = write!(
                    out,
                    "\n  coset enumeration: {status}, order {o} ({used} cosets allocated)"
                );
            }
            None => {
                let _ = write!(
                    out,
                    "\n  coset enumeration: {status} after {used} cosets (inconclusive)"
                );
            }
        }
    }
    out
}

pub fn fixed_set_text(p: &ActionParams, f: &FixedSet) -> String {
    format!(
        "fixed set of the principal isotropy of {p}: {}",
        fixed_set_line(f)
    )
}

pub fn curvature_text(label: &str, v: &pentact::actions::CurvatureVerdict) -> String {
    let positive = match v.positive {
        PositiveVerdict::LinearSphere => "yes (round linear sphere)".to_string(),
        PositiveVerdict::Candidate => "candidate (existence open)".to_string(),
        PositiveVerdict::Excluded => "excluded".to_string(),
    };
    format!(
        "curvature verdict for {label}:\n  invariant nonnegative metric: {}\n  invariant \
         positive metric: {positive}\n  reason: {:?}",
        if v.nonnegative { "yes" } else { "no" },
        v.reason
    )
}

pub fn tables_text(t1: &[NormalizerRow], t2: &[TwoOrbitRow]) -> String {
    let mut out = String::from("normalizer table (H, N(H), N(H)/H, pi_{n-1}, mode):\n");
    for r in t1 {
        let _ = writeln!(
            out,
            "  [{}] H = {:<12} N(H) = {:<8} N(H)/H = {:<8} pi = {:<8} {:?}",
            r.ambient,
            r.h,
            r.normalizer,
            r.quotient,
            format!("{:?}", r.pi),
            r.mode
        );
    }
    let _ = writeln!(
        out,
        "two-orbit-type table (row, G, H, K, classifying set, pi0, bound):"
    );
    for r in t2 {
        let _ = writeln!(
            out,
            "  ({}) [{}] H = {:<10} K = {:<6} {:<16} pi0 = {:<3} bound = {}",
            r.label, r.ambient, r.h, r.k, r.pi_classes, r.pi0, r.bound
        );
    }
    out.pop();
    out
}

pub fn subgroup_text(e: &SubgroupExport) -> String {
    let mut out = format!(
        "subgroup of {}: order {}, type {}\n  generators:",
        e.ambient, e.order, e.iso_type
    );
    for g in &e.generators {
        let _ = write!(out, "\n    {g}");
    }
    let _ = write!(out, "\n  element orders:");
    for (order, count) in &e.element_order_multiset {
        let _ = write!(out, " {order}^{count}");
    }
    out
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut out = format!("[{:?}] {} ({} cases)", r.status, r.lemma, r.cases);
    for f in &r.failures {
        let _ = write!(out, "\n  counterexample: {f}");
    }
    for n in &r.notes {
        let _ = write!(out, "\n  note: {n}");
    }
    out
}
