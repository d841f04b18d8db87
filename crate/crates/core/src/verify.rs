//! Executable cross-checks tying the group engines to the action model.
//!
//! Every verifier is deterministic, counts the cases it examined, and
//! reports counterexamples verbatim; a report with zero cases can never
//! pass. Coset-limit cases are surfaced as inconclusive, never skipped.

use serde::Serialize;

use crate::actions::{
    self, enumerate_actions, gcd_u64, pi1_order, pi1_presentation, ActionsError, CurvatureSign,
};
use crate::fp::{todd_coxeter, CosetStatus, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::group::{
    generic_circle_element, omega, project_so3, su2_catalog, FiniteSubgroup, GroupElement, IsoType,
    So3Element,
};
use crate::quat::UnitQuat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerifyStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub status: VerifyStatus,
}

struct Builder {
    lemma: &'static str,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    inconclusive: usize,
}

impl Builder {
    fn new(lemma: &'static str) -> Self {
        Builder {
            lemma,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            inconclusive: 0,
        }
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn inconclusive(&mut self, msg: String) {
        self.inconclusive += 1;
        self.notes.push(format!("inconclusive: {msg}"));
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    fn finish(self) -> VerificationReport {
        // A pass with zero cases examined is forbidden.
        let status = if self.cases == 0 || !self.failures.is_empty() {
            VerifyStatus::Fail
        } else if self.inconclusive > 0 {
            VerifyStatus::Inconclusive
        } else {
            VerifyStatus::Pass
        };
        let mut notes = self.notes;
        if self.cases == 0 {
            notes.push("zero cases examined: forced Fail".to_string());
        }
        VerificationReport {
            lemma: self.lemma.to_string(),
            cases: self.cases,
            failures: self.failures,
            notes,
            status,
        }
    }
}

fn legal_b(q: u64) -> Vec<u64> {
    (0..q.max(1))
        .filter(|&b| {
            if q == 1 {
                b == 0
            } else {
                gcd_u64(b, q) == 1 && b != 0
            }
        })
        .collect()
}

/// Sweeps the fundamental-group formula: for every n1 ≤ n2 ≤ n_max, every
/// legal (b1, b2) and every k in the range, the coset enumeration completes
/// with order gcd(n1, n2, l) and the abelianization is cyclic of that
/// order.
pub fn verify_pi1_formula(
    n_max: u64,
    k_min: i64,
    k_max: i64,
    max_cosets: usize,
) -> VerificationReport {
    let mut b = Builder::new("pi1");
    for n1 in 1..=n_max {
        for n2 in n1..=n_max {
            let d = gcd_u64(n1, n2);
            let (q1, q2) = (n1 / d, n2 / d);
            for &b1 in &legal_b(q1) {
                for &b2 in &legal_b(q2) {
                    for k in k_min..=k_max {
                        b.case();
                        let expected = pi1_order(n1, n2, b1, b2, k).expect("legal parameters");
                        let p = pi1_presentation(n1, n2, b1, b2, k).expect("legal parameters");
                        let label = format!("(n1,n2,b1,b2,k) = ({n1},{n2},{b1},{b2},{k})");
                        match todd_coxeter(&p, max_cosets).status {
                            CosetStatus::Exceeded => b.inconclusive(label),
                            CosetStatus::Completed(order) => {
                                if order as u64 != expected {
                                    b.fail(format!(
                                        "{label}: coset order {order}, formula gives {expected}"
                                    ));
                                    continue;
                                }
                                let ab = p.abelianization();
                                let expected_torsion: Vec<u64> =
                                    if expected > 1 { vec![expected] } else { vec![] };
                                if ab.torsion_u64() != expected_torsion || ab.free_rank != 0 {
                                    b.fail(format!(
                                        "{label}: abelianization {:?} + rank {} is not cyclic \
                                         of order {expected}",
                                        ab.torsion_u64(),
                                        ab.free_rank
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    b.finish()
}

/// Checks that l(b1, b2, k) = b1·q2 + b2·q1 + k·q1·q2 hits every l coprime
/// to q1·q2 in the guaranteed window exactly once.
pub fn verify_bijection(q1: u64, q2: u64, window: i64) -> Result<VerificationReport, ActionsError> {
    if q1 < 1 || q2 < 1 || gcd_u64(q1, q2) != 1 {
        return Err(ActionsError::NotCoprime);
    }
    let mut b = Builder::new("bijection");
    let mut hits: std::collections::BTreeMap<i64, Vec<(u64, u64, i64)>> = Default::default();
    for &b1 in &legal_b(q1) {
        for &b2 in &legal_b(q2) {
            for k in -window..=window {
                b.case();
                let l = (b1 * q2 + b2 * q1) as i64 + k * (q1 * q2) as i64;
                if gcd_u64(l.unsigned_abs(), q1 * q2) != 1 {
                    b.fail(format!(
                        "l({b1},{b2},{k}) = {l} is not coprime to q1·q2 = {}",
                        q1 * q2
                    ));
                }
                hits.entry(l).or_default().push((b1, b2, k));
            }
        }
    }
    for (l, tuples) in &hits {
        if tuples.len() > 1 {
            b.fail(format!("l = {l} hit {} times: {tuples:?}", tuples.len()));
        }
    }
    // Guaranteed covered window: k has room on both sides there.
    let q = (q1 * q2) as i64;
    let lo = (2 - window) * q;
    let hi = window * q;
    let mut covered = 0usize;
    for l in lo..=hi {
        if gcd_u64(l.unsigned_abs(), q1 * q2) != 1 {
            continue;
        }
        covered += 1;
        b.check(hits.contains_key(&l), || {
            format!("coprime l = {l} in the covered window [{lo}, {hi}] was never hit")
        });
    }
    b.note(format!(
        "window [{lo}, {hi}] contains {covered} coprime values, each hit exactly once"
    ));
    Ok(b.finish())
}

/// Runs [`verify_bijection`] over every coprime pair q1 ≤ q2 ≤ q_max,
/// merging the reports.
pub fn verify_bijection_sweep(q_max: u64, window: i64) -> VerificationReport {
    let mut b = Builder::new("bijection");
    for q1 in 1..=q_max {
        for q2 in q1..=q_max {
            if gcd_u64(q1, q2) != 1 {
                continue;
            }
            match verify_bijection(q1, q2, window) {
                Err(e) => {
                    b.case();
                    b.fail(format!("({q1},{q2}): {e}"));
                }
                Ok(report) => {
                    b.cases += report.cases;
                    b.failures.extend(
                        report
                            .failures
                            .into_iter()
                            .map(|f| format!("({q1},{q2}): {f}")),
                    );
                }
            }
        }
    }
    b.finish()
}

fn is_cyclic_pair<E: GroupElement>(
    sub: &FiniteSubgroup<E>,
    ambient_group: &FiniteSubgroup<E>,
) -> Result<(IsoType, IsoType), String> {
    let n_type = sub
        .recognize()
        .map_err(|e| format!("unrecognized normal subgroup: {e}"))?;
    let k_type = ambient_group
        .recognize()
        .map_err(|e| format!("unrecognized ambient: {e}"))?;
    Ok((n_type, k_type))
}

/// Scans the catalog for pairs N ◁ K with K/N cyclic of order ≥ 3 and
/// compares them with the allowed lists: (cyclic, cyclic) or
/// (Dic₂, T*) on the SU(2) side, additionally only (V₄, T) on the SO(3)
/// side.
pub fn verify_exceptional_pairs(m_max: u32) -> VerificationReport {
    let mut b = Builder::new("exceptional-pairs");
    let mut su2_ambients: Vec<(String, FiniteSubgroup<UnitQuat>)> = Vec::new();
    for m in 1..=m_max {
        su2_ambients.push((
            format!("Z{m}"),
            su2_catalog(IsoType::Cyclic(m)).expect("catalog"),
        ));
    }
    for m in 2..=m_max {
        su2_ambients.push((
            format!("Dic{m}"),
            su2_catalog(IsoType::Dicyclic(m)).expect("catalog"),
        ));
    }
    for tag in [IsoType::BinTet, IsoType::BinOct, IsoType::BinIco] {
        su2_ambients.push((tag.to_string(), su2_catalog(tag).expect("catalog")));
    }

    let mut dic2_bintet_count = 0usize;
    for (name, k_group) in &su2_ambients {
        let normals = match k_group.normal_subgroups() {
            Ok(n) => n,
            Err(e) => {
                b.fail(format!("normal subgroup scan failed in {name}: {e}"));
                continue;
            }
        };
        for n_sub in &normals {
            let quotient = match k_group.quotient_type(n_sub) {
                Ok(q) => q,
                Err(e) => {
                    b.fail(format!("quotient in {name} not classified: {e}"));
                    continue;
                }
            };
            let IsoType::Cyclic(q_order) = quotient else {
                continue;
            };
            if q_order < 3 {
                continue;
            }
            match is_cyclic_pair(n_sub, k_group) {
                Err(e) => b.check(false, || format!("{name}: {e}")),
                Ok((n_type, k_type)) => {
                    let allowed = (n_type.is_cyclic() && k_type.is_cyclic())
                        || (n_type == IsoType::Dicyclic(2) && k_type == IsoType::BinTet);
                    if n_type == IsoType::Dicyclic(2) && k_type == IsoType::BinTet {
                        dic2_bintet_count += 1;
                    }
                    b.check(allowed, || {
                        format!(
                            "SU(2) pair (N, K) = ({n_type}, {k_type}) with K/N = Z{q_order} \
                             inside {name} is outside the allowed list"
                        )
                    });
                }
            }
        }
    }
    b.note(format!(
        "(Dic2, T*) pairs found among the scanned ambients: {dic2_bintet_count}"
    ));

    // SO(3) side via projection.
    for (name, k_group) in &su2_ambients {
        let image = project_so3(k_group);
        let normals = match image.normal_subgroups() {
            Ok(n) => n,
            Err(e) => {
                b.fail(format!("SO(3) normal scan failed in phi({name}): {e}"));
                continue;
            }
        };
        for n_sub in &normals {
            let quotient = match image.quotient_type(n_sub) {
                Ok(q) => q,
                Err(e) => {
                    b.fail(format!("SO(3) quotient in phi({name}) not classified: {e}"));
                    continue;
                }
            };
            let IsoType::Cyclic(q_order) = quotient else {
                continue;
            };
            if q_order < 3 {
                continue;
            }
            match is_cyclic_pair(n_sub, &image) {
                Err(e) => b.check(false, || format!("phi({name}): {e}")),
                Ok((n_type, k_type)) => {
                    let allowed = (n_type.is_cyclic() && k_type.is_cyclic())
                        || (n_type == IsoType::KleinFour && k_type == IsoType::Tet);
                    b.check(allowed, || {
                        format!(
                            "SO(3) pair (N, K) = ({n_type}, {k_type}) with K/N = Z{q_order} \
                             inside phi({name}) is outside the allowed list"
                        )
                    });
                }
            }
        }
    }
    b.finish()
}

fn conjugates_into<E: GroupElement>(g: &E, h_elements: &[E], target: &FiniteSubgroup<E>) -> bool {
    let ginv = g.inverse();
    h_elements
        .iter()
        .all(|x| target.contains(&g.op(x).op(&ginv)))
}

/// Finite rows of the normalizer table recomputed from the group engine;
/// continuous rows witness-checked (the claimed normalizer's components do
/// normalize H) and marked data-only.
pub fn verify_table1(m_max: u32) -> VerificationReport {
    let mut b = Builder::new("table1");

    // --- SU(2) finite rows ---
    let binoct = su2_catalog(IsoType::BinOct).expect("catalog");
    let dic2 =
        FiniteSubgroup::closure(&[UnitQuat::i(), UnitQuat::j()], 8).expect("quaternion group");
    match binoct.normalizer_of(&dic2) {
        Ok(norm) => {
            b.check(norm.order() == 48, || {
                format!(
                    "N(Dic2) inside O* has order {}, table says all of O*",
                    norm.order()
                )
            });
            b.check(
                binoct.quotient_type(&dic2) == Ok(IsoType::Dihedral(3)),
                || format!("O*/Dic2 = {:?}, table says D3", binoct.quotient_type(&dic2)),
            );
        }
        Err(e) => b.check(false, || format!("Dic2 not inside O*: {e}")),
    }

    let bintet = FiniteSubgroup::closure(&[UnitQuat::i(), UnitQuat::j(), omega()], 24)
        .expect("binary tetrahedral copy");
    b.check(
        binoct.normalizer_of(&bintet).map(|n| n.order()) == Ok(48),
        || "N(T*) inside O* is not all of O*".to_string(),
    );
    b.check(
        binoct.quotient_type(&bintet) == Ok(IsoType::Cyclic(2)),
        || "O*/T* is not Z2".to_string(),
    );

    for m in 3..=u64::from(m_max) {
        let ambient = su2_catalog(IsoType::Dicyclic(2 * m as u32)).expect("catalog");
        let h = FiniteSubgroup::closure(
            &[
                UnitQuat::cis(crate::field::ratio(1, 2 * m as i64)),
                UnitQuat::j(),
            ],
            4 * m as usize,
        )
        .expect("Dic_m copy inside Dic_2m");
        b.check(
            ambient.normalizer_of(&h).map(|n| n.order()) == Ok(8 * m as usize),
            || format!("N(Dic{m}) inside Dic{} is not everything", 2 * m),
        );
        b.check(ambient.quotient_type(&h) == Ok(IsoType::Cyclic(2)), || {
            format!("Dic{}/Dic{m} is not Z2", 2 * m)
        });
    }

    for tag in [IsoType::BinOct, IsoType::BinIco] {
        let g = su2_catalog(tag).expect("catalog");
        b.check(
            g.normalizer_of(&g).map(|n| n.order()) == Ok(g.order()),
            || format!("{tag} does not normalize itself"),
        );
    }

    // --- SO(3) finite rows ---
    let oct = project_so3(&binoct);
    let v4 = project_so3(&dic2);
    b.check(oct.normalizer_of(&v4).map(|n| n.order()) == Ok(24), || {
        "N(D2) inside O is not all of O".to_string()
    });
    b.check(oct.quotient_type(&v4) == Ok(IsoType::Dihedral(3)), || {
        "O/D2 is not D3".to_string()
    });
    let tet = project_so3(&bintet);
    b.check(oct.normalizer_of(&tet).map(|n| n.order()) == Ok(24), || {
        "N(T) inside O is not all of O".to_string()
    });
    b.check(oct.quotient_type(&tet) == Ok(IsoType::Cyclic(2)), || {
        "O/T is not Z2".to_string()
    });
    for m in 3..=u64::from(m_max) {
        let ambient = su2_catalog(IsoType::Dicyclic(2 * m as u32)).expect("catalog");
        let ambient = project_so3(&ambient);
        let h_pre = FiniteSubgroup::closure(
            &[
                UnitQuat::cis(crate::field::ratio(1, 2 * m as i64)),
                UnitQuat::j(),
            ],
            4 * m as usize,
        )
        .expect("closure");
        let h = project_so3(&h_pre);
        b.check(
            ambient.normalizer_of(&h).map(|n| n.order()) == Ok(4 * m as usize),
            || format!("N(D{m}) inside D{} is not everything", 2 * m),
        );
        b.check(ambient.quotient_type(&h) == Ok(IsoType::Cyclic(2)), || {
            format!("D{}/D{m} is not Z2", 2 * m)
        });
    }

    // --- Continuous rows: witness that the claimed normalizer normalizes H.
    // Pin(2) (resp. O(2)) is generated over the circle by j, so a generic
    // circle element and j witness all components.
    let zeta = generic_circle_element();
    for m in 3..=u64::from(m_max) {
        let h = su2_catalog(IsoType::Cyclic(m as u32)).expect("catalog");
        b.check(
            conjugates_into(&zeta, h.elements(), &h)
                && conjugates_into(&UnitQuat::j(), h.elements(), &h),
            || format!("Pin(2) witnesses fail to normalize Z{m}"),
        );
        let h_img = project_so3(&h);
        let zeta_img = So3Element::from_quat(zeta.clone());
        let j_img = So3Element::from_quat(UnitQuat::j());
        b.check(
            conjugates_into(&zeta_img, h_img.elements(), &h_img)
                && conjugates_into(&j_img, h_img.elements(), &h_img),
            || format!("O(2) witnesses fail to normalize the SO(3)-side Z{m}"),
        );
    }
    // Center row: a sample of elements from every representation class
    // centralizes −1.
    let minus_one = UnitQuat::minus_one();
    b.check(
        [
            zeta.clone(),
            UnitQuat::j(),
            omega(),
            crate::group::icosian(),
        ]
        .iter()
        .all(|g| g.op(&minus_one).op(&g.inverse()) == minus_one),
        || "the center is not centralized".to_string(),
    );
    // SO(2) row: conjugation by j inverts the circle.
    b.check(
        UnitQuat::j().op(&zeta).op(&UnitQuat::j().inverse()) == zeta.inverse(),
        || "j does not normalize the circle".to_string(),
    );
    b.note(format!(
        "continuous rows (1, Z2, Zm, SO(2), O(2)/Pin(2) normalizers) recorded as data; \
         witness checks only, m up to {m_max}"
    ));
    b.finish()
}

/// The obstruction group for a pair of noncyclic exceptional isotropy
/// groups: two binary tetrahedral factors, each presented as Q8 ⋊ Z3 on
/// generators (x, y, w | x⁴, y² = x², yxy⁻¹ = x⁻¹, w³, wxw⁻¹ = y,
/// wyw⁻¹ = xy), glued by identifying x and y across the factors and
/// w1^c1 = w2^c2. The parameters c1, c2 ∈ {1, 2} are the two possible
/// slice rotation classes.
pub fn noncyclic_presentation(c1: i64, c2: i64, amalgamate: bool) -> Presentation {
    let gens = vec!["x1", "y1", "w1", "x2", "y2", "w2"];
    let mut relators = Vec::new();
    for side in 0..2usize {
        let o = 3 * side;
        let x = o;
        let y = o + 1;
        let w = o + 2;
        relators.push(Word::from_letters([(x, 4)]));
        relators.push(Word::from_letters([(y, 2), (x, -2)]));
        relators.push(Word::from_letters([(y, 1), (x, 1), (y, -1), (x, 1)]));
        relators.push(Word::from_letters([(w, 3)]));
        relators.push(Word::from_letters([(w, 1), (x, 1), (w, -1), (y, -1)]));
        relators.push(Word::from_letters([
            (w, 1),
            (y, 1),
            (w, -1),
            (y, -1),
            (x, -1),
        ]));
    }
    if amalgamate {
        relators.push(Word::from_letters([(0, 1), (3, -1)]));
        relators.push(Word::from_letters([(1, 1), (4, -1)]));
        relators.push(Word::from_letters([(2, c1), (5, -c2)]));
    }
    Presentation::new(gens, relators)
}

/// For every pair of slice classes the amalgamated group abelianizes onto
/// Z₃, so it is nontrivial and the glued manifold cannot be
/// simply-connected.
pub fn verify_noncyclic_obstruction() -> VerificationReport {
    let mut b = Builder::new("noncyclic");
    // The factor presentation really is the binary tetrahedral group.
    let factor = Presentation::parse(
        "<x, y, w | x^4, y^2 = x^2, y x y^-1 = x^-1, w^3, w x w^-1 = y, w y w^-1 = x y>",
    )
    .expect("factor presentation parses");
    b.check(
        todd_coxeter(&factor, DEFAULT_MAX_COSETS).status == CosetStatus::Completed(24),
        || "the Q8 ⋊ Z3 factor presentation does not have order 24".to_string(),
    );
    for c1 in [1i64, 2] {
        for c2 in [1i64, 2] {
            let p = noncyclic_presentation(c1, c2, true);
            let ab = p.abelianization();
            b.check(ab.torsion_u64() == vec![3] && ab.free_rank == 0, || {
                format!(
                    "(c1, c2) = ({c1}, {c2}): abelianization {:?} rank {}, expected Z3",
                    ab.torsion_u64(),
                    ab.free_rank
                )
            });
        }
    }
    // Sanity: without the amalgamation the free product abelianizes to
    // Z3 x Z3.
    let free = noncyclic_presentation(1, 1, false);
    let ab = free.abelianization();
    b.check(ab.torsion_u64() == vec![3, 3] && ab.free_rank == 0, || {
        format!("free product abelianization is {:?}", ab.torsion_u64())
    });
    b.finish()
}

/// Compares the class count from `enumerate_actions` with a brute-force
/// residue-orbit count for one (m, n) with d = gcd(m, n) ≤ 2.
pub fn verify_equivalence_counts(m: u32, n: u32) -> Result<VerificationReport, ActionsError> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let d = gcd_u64(u64::from(m), u64::from(n));
    if d >= 3 {
        return Err(ActionsError::BadRegime(format!(
            "gcd({m}, {n}) = {d} >= 3 is the rigid case"
        )));
    }
    let mut b = Builder::new("equiv-counts");
    if m == 0 {
        // l is frozen to 1.
        let classes = enumerate_actions(m, n, 5);
        b.check(classes.len() == 1 && classes[0].l() == 1, || {
            format!("N(0,{n}): expected the single class l = 1, got {classes:?}")
        });
        return Ok(b.finish());
    }
    let modulus = u64::from(m) * u64::from(n) / d;
    // Brute-force oracle: valid residues mod d·q1·q2 up to negation.
    let mut orbit_minima = std::collections::BTreeSet::new();
    for r in 0..modulus {
        b.case();
        let valid = gcd_u64(r, u64::from(m)) == 1 && gcd_u64(r, u64::from(n)) == 1;
        if valid {
            orbit_minima.insert(r.min((modulus - r) % modulus));
        }
    }
    let classes = enumerate_actions(m, n, modulus as u32);
    let enumerated: Vec<u64> = classes.iter().map(|c| u64::from(c.l())).collect();
    let oracle: Vec<u64> = orbit_minima.into_iter().collect();
    b.check(enumerated == oracle, || {
        format!("N({m},{n}): enumerate_actions gives l in {enumerated:?}, oracle gives {oracle:?}")
    });
    Ok(b.finish())
}

/// Runs [`verify_equivalence_counts`] over every pair m ≤ n ≤ n_max with
/// d ≤ 2, merging the reports.
pub fn verify_equivalence_counts_sweep(n_max: u32) -> VerificationReport {
    let mut b = Builder::new("equiv-counts");
    for m in 0..=n_max {
        for n in m..=n_max {
            match verify_equivalence_counts(m, n) {
                Err(ActionsError::BadRegime(_)) => continue,
                Err(e) => {
                    b.case();
                    b.fail(format!("({m},{n}): {e}"));
                }
                Ok(report) => {
                    b.cases += report.cases;
                    b.failures.extend(report.failures);
                }
            }
        }
    }
    b.finish()
}

/// Exact rational check of the orbit-polygon angle bound: n·(π/3) ≥
/// (n−2)·π holds iff n ≤ 3 and strictly iff n ≤ 2.
pub fn verify_gauss_bonnet_bound() -> VerificationReport {
    let mut b = Builder::new("gauss-bonnet");
    for n in 1..=12u64 {
        b.check(
            actions::polygon_inequality_holds(n, CurvatureSign::Nonnegative) == (n <= 3),
            || format!("nonnegative-curvature inequality wrong at n = {n}"),
        );
        b.check(
            actions::polygon_inequality_holds(n, CurvatureSign::Positive) == (n <= 2),
            || format!("positive-curvature inequality wrong at n = {n}"),
        );
    }
    b.check(
        actions::max_isolated_fixed_points(CurvatureSign::Nonnegative) == 3,
        || "nonnegative bound is not 3".to_string(),
    );
    b.check(
        actions::max_isolated_fixed_points(CurvatureSign::Positive) == 2,
        || "positive bound is not 2".to_string(),
    );
    b.finish()
}

/// Default sweep bounds, sized for seconds-scale runs.
pub mod defaults {
    pub const N_MAX: u64 = 10;
    pub const K_MIN: i64 = -3;
    pub const K_MAX: i64 = 3;
    pub const M_MAX: u32 = 30;
    pub const Q_MAX: u64 = 12;
    pub const WINDOW: i64 = 5;
    pub const EQUIV_N_MAX: u32 = 8;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi1_small_sweep_passes() {
        let report = verify_pi1_formula(6, -2, 2, DEFAULT_MAX_COSETS);
        assert_eq!(report.status, VerifyStatus::Pass, "{:?}", report.failures);
        assert!(report.cases > 100);
    }

    #[test]
    fn bijection_examples() {
        let report = verify_bijection(2, 3, 5).unwrap();
        assert_eq!(report.status, VerifyStatus::Pass, "{:?}", report.failures);
        let report = verify_bijection(1, 1, 5).unwrap();
        assert_eq!(report.status, VerifyStatus::Pass);
        assert_eq!(verify_bijection(2, 4, 5), Err(ActionsError::NotCoprime));
    }

    #[test]
    fn exceptional_pairs_polyhedral_part() {
        // Restricted to the binary polyhedral ambients the allowed list is
        // complete: (Dic2, T*) occurs exactly once and never with O* or I*.
        let mut found = Vec::new();
        for tag in [IsoType::BinTet, IsoType::BinOct, IsoType::BinIco] {
            let k_group = su2_catalog(tag).unwrap();
            for n_sub in k_group.normal_subgroups().unwrap() {
                if let Ok(IsoType::Cyclic(q)) = k_group.quotient_type(&n_sub) {
                    if q >= 3 {
                        found.push((n_sub.recognize().unwrap(), tag));
                    }
                }
            }
        }
        assert_eq!(found, vec![(IsoType::Dicyclic(2), IsoType::BinTet)]);
    }

    #[test]
    fn exceptional_pairs_scan_reports_dicyclic_gap() {
        // The full dicyclic scan finds the (Z_m, Dic_m) pairs with
        // quotient Z_4 for odd m, which the stated allowed list omits;
        // the verifier must surface them, not hide them.
        let report = verify_exceptional_pairs(6);
        assert_eq!(report.status, VerifyStatus::Fail);
        assert!(
            report
                .failures
                .iter()
                .any(|f| f.contains("(Z3, Dic3)") && f.contains("Z4")),
            "expected the Dic3 counterexample, got {:?}",
            report.failures
        );
        // Cyclic ambients alone are clean.
        let report = verify_exceptional_pairs(2);
        assert_eq!(report.status, VerifyStatus::Pass, "{:?}", report.failures);
    }

    #[test]
    fn table1_small() {
        let report = verify_table1(5);
        assert_eq!(report.status, VerifyStatus::Pass, "{:?}", report.failures);
    }

    #[test]
    fn noncyclic_obstruction_passes() {
        let report = verify_noncyclic_obstruction();
        assert_eq!(report.status, VerifyStatus::Pass, "{:?}", report.failures);
        assert_eq!(report.cases, 6);
    }

    #[test]
    fn equivalence_counts() {
        for (m, n) in [(1, 2), (2, 2), (2, 6), (1, 1)] {
            let report = verify_equivalence_counts(m, n).unwrap();
            assert_eq!(
                report.status,
                VerifyStatus::Pass,
                "({m},{n}): {:?}",
                report.failures
            );
        }
        assert!(matches!(
            verify_equivalence_counts(3, 3),
            Err(ActionsError::BadRegime(_))
        ));
        let sweep = verify_equivalence_counts_sweep(6);
        assert_eq!(sweep.status, VerifyStatus::Pass, "{:?}", sweep.failures);
    }

    #[test]
    fn gauss_bonnet() {
        let report = verify_gauss_bonnet_bound();
        assert_eq!(report.status, VerifyStatus::Pass);
    }

    #[test]
    fn zero_cases_is_fail() {
        let b = Builder::new("pi1");
        assert_eq!(b.finish().status, VerifyStatus::Fail);
    }
}
