//! Finite subgroups of SU(2) and SO(3): closure generation, the standard
//! catalog (cyclic, dicyclic/dihedral, binary polyhedral and their
//! rotation-group images), recognition by order statistics, normal
//! subgroups, normalizers and quotient types.
//!
//! Exact element arithmetic is only needed once per group: a multiplication
//! table over element indices is built lazily and shared, and the subgroup
//! algorithms run on the table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::field::{ratio, FieldElement, Rational};
use crate::quat::{QuatError, RotationMatrix, UnitQuat};

/// Hard bound on ambient order for subgroup enumeration; the largest group
/// the toolkit ever dissects is Dic_60 (order 240).
pub const SUBGROUP_ENUMERATION_BOUND: usize = 240;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("bad parameter {param} for catalog family {family}")]
    BadParam { family: String, param: u32 },
    #[error("{tag} is not a catalog family of {ambient}")]
    UnknownTag { tag: String, ambient: Ambient },
    #[error(
        "group of order {order} matches no catalog family (internal consistency failure): \
         element-order multiset {multiset:?}"
    )]
    Unrecognized {
        order: usize,
        multiset: Vec<(u64, u64)>,
    },
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
}

/// Which group the elements live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Ambient {
    SU2,
    SO3,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::SU2 => write!(f, "SU2"),
            Ambient::SO3 => write!(f, "SO3"),
        }
    }
}

/// Abstract element interface shared by SU(2) quaternions and SO(3)
/// ±-pairs.
pub trait GroupElement: Clone + Eq + Ord + fmt::Display {
    const AMBIENT: Ambient;
    fn identity() -> Self;
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl GroupElement for UnitQuat {
    const AMBIENT: Ambient = Ambient::SU2;

    fn identity() -> Self {
        UnitQuat::one()
    }

    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        UnitQuat::inverse(self)
    }
}

/// An element of SO(3) as the unordered pair {q, −q} of its SU(2) lifts,
/// keyed by the smaller lift. Matrices are an export format only.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct So3Element(UnitQuat);

impl So3Element {
    pub fn from_quat(q: UnitQuat) -> Self {
        let neg = q.negate();
        So3Element(if neg < q { neg } else { q })
    }

    /// The canonical SU(2) lift (the smaller of the two).
    pub fn representative(&self) -> &UnitQuat {
        &self.0
    }

    pub fn rotation_matrix(&self) -> Result<RotationMatrix, QuatError> {
        self.0.to_rotation_matrix()
    }
}

impl fmt::Display for So3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl fmt::Debug for So3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl GroupElement for So3Element {
    const AMBIENT: Ambient = Ambient::SO3;

    fn identity() -> Self {
        So3Element::from_quat(UnitQuat::one())
    }

    fn op(&self, other: &Self) -> Self {
        So3Element::from_quat(self.0.mul(&other.0))
    }

    fn inverse(&self) -> Self {
        So3Element::from_quat(self.0.inverse())
    }
}

/// Recognized isomorphism type of a finite subgroup (or abstract quotient).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IsoType {
    Trivial,
    Cyclic(u32),
    Dicyclic(u32),
    BinTet,
    BinOct,
    BinIco,
    KleinFour,
    Dihedral(u32),
    Tet,
    Oct,
    Ico,
}

impl IsoType {
    pub fn order(self) -> u64 {
        match self {
            IsoType::Trivial => 1,
            IsoType::Cyclic(k) => u64::from(k),
            IsoType::Dicyclic(m) => 4 * u64::from(m),
            IsoType::BinTet => 24,
            IsoType::BinOct => 48,
            IsoType::BinIco => 120,
            IsoType::KleinFour => 4,
            IsoType::Dihedral(m) => 2 * u64::from(m),
            IsoType::Tet => 12,
            IsoType::Oct => 24,
            IsoType::Ico => 60,
        }
    }

    pub fn is_cyclic(self) -> bool {
        matches!(self, IsoType::Trivial | IsoType::Cyclic(_))
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Trivial => write!(f, "1"),
            IsoType::Cyclic(k) => write!(f, "Z{k}"),
            IsoType::Dicyclic(m) => write!(f, "Dic{m}"),
            IsoType::BinTet => write!(f, "T*"),
            IsoType::BinOct => write!(f, "O*"),
            IsoType::BinIco => write!(f, "I*"),
            IsoType::KleinFour => write!(f, "V4"),
            IsoType::Dihedral(m) => write!(f, "D{m}"),
            IsoType::Tet => write!(f, "T"),
            IsoType::Oct => write!(f, "O"),
            IsoType::Ico => write!(f, "I"),
        }
    }
}

fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cyclic_multiset(n: u64) -> BTreeMap<u64, u64> {
    let mut m = BTreeMap::new();
    for d in 1..=n {
        if n % d == 0 {
            m.insert(d, euler_phi(d));
        }
    }
    m
}

fn dicyclic_multiset(m: u64) -> BTreeMap<u64, u64> {
    let mut ms = cyclic_multiset(2 * m);
    *ms.entry(4).or_insert(0) += 2 * m;
    ms
}

fn dihedral_multiset(m: u64) -> BTreeMap<u64, u64> {
    let mut ms = cyclic_multiset(m);
    *ms.entry(2).or_insert(0) += m;
    ms
}

fn fixed_multiset(entries: &[(u64, u64)]) -> BTreeMap<u64, u64> {
    entries.iter().copied().collect()
}

impl IsoType {
    /// Expected multiset of element orders; this separates every pair of
    /// catalog families that can share an order.
    pub fn expected_multiset(self) -> BTreeMap<u64, u64> {
        match self {
            IsoType::Trivial => fixed_multiset(&[(1, 1)]),
            IsoType::Cyclic(k) => cyclic_multiset(u64::from(k)),
            IsoType::Dicyclic(m) => dicyclic_multiset(u64::from(m)),
            IsoType::KleinFour => fixed_multiset(&[(1, 1), (2, 3)]),
            IsoType::Dihedral(m) => dihedral_multiset(u64::from(m)),
            IsoType::Tet => fixed_multiset(&[(1, 1), (2, 3), (3, 8)]),
            IsoType::Oct => fixed_multiset(&[(1, 1), (2, 9), (3, 8), (4, 6)]),
            IsoType::Ico => fixed_multiset(&[(1, 1), (2, 15), (3, 20), (5, 24)]),
            IsoType::BinTet => fixed_multiset(&[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]),
            IsoType::BinOct => fixed_multiset(&[(1, 1), (2, 1), (3, 8), (4, 18), (6, 8), (8, 12)]),
            IsoType::BinIco => {
                fixed_multiset(&[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)])
            }
        }
    }
}

/// Multiplication table over element indices; all subgroup algorithms run
/// on this.
#[derive(Debug)]
struct Indexed {
    n: usize,
    identity: u32,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Indexed {
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv[g as usize])
    }

    fn order_of(&self, a: u32) -> u64 {
        let mut acc = a;
        let mut len = 1u64;
        while acc != self.identity {
            acc = self.mul(acc, a);
            len += 1;
        }
        len
    }

    /// Conjugacy classes as sorted index lists, ordered by least member.
    fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for e in 0..self.n as u32 {
            if assigned[e as usize] {
                continue;
            }
            let mut class = BTreeSet::new();
            for g in 0..self.n as u32 {
                class.insert(self.conj(g, e));
            }
            for &c in &class {
                assigned[c as usize] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Subgroup generated by the given indices, as a sorted index list.
    fn closure_of(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[self.identity as usize] = true;
        let mut frontier = vec![self.identity];
        while let Some(e) = frontier.pop() {
            for &g in gens {
                let p = self.mul(e, g);
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    frontier.push(p);
                }
            }
        }
        (0..self.n as u32).filter(|&i| seen[i as usize]).collect()
    }
}

/// A finite subgroup of SU(2) or SO(3), closed under multiplication and
/// inverse, with a deterministic canonical element ordering.
#[derive(Clone)]
pub struct FiniteSubgroup<E: GroupElement> {
    elements: Vec<E>,
    generators: Vec<E>,
    index: OnceLock<Arc<Indexed>>,
}

impl<E: GroupElement> PartialEq for FiniteSubgroup<E> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl<E: GroupElement> Eq for FiniteSubgroup<E> {}

impl<E: GroupElement> FiniteSubgroup<E> {
    fn assemble(elements: Vec<E>, generators: Vec<E>) -> Self {
        FiniteSubgroup {
            elements,
            generators,
            index: OnceLock::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::assemble(vec![E::identity()], Vec::new())
    }

    /// Smallest multiplicatively closed superset of `gens ∪ {1}`. Fails
    /// with [`GroupError::CapExceeded`] if more than `cap` elements appear,
    /// which signals a non-finite or too-large generated group.
    pub fn closure(gens: &[E], cap: usize) -> Result<Self, GroupError> {
        let mut elements: BTreeSet<E> = BTreeSet::new();
        elements.insert(E::identity());
        let gens: Vec<E> = {
            let mut seen = BTreeSet::new();
            gens.iter()
                .filter(|g| seen.insert((*g).clone()))
                .cloned()
                .collect()
        };
        let mut frontier: Vec<E> = vec![E::identity()];
        while let Some(e) = frontier.pop() {
            for g in &gens {
                let product = e.op(g);
                if !elements.contains(&product) {
                    if elements.len() + 1 > cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    elements.insert(product.clone());
                    frontier.push(product);
                }
            }
        }
        Ok(Self::assemble(elements.into_iter().collect(), gens))
    }

    fn from_sorted_elements(elements: Vec<E>) -> Self {
        let generators = reduce_generators(&elements);
        Self::assemble(elements, generators)
    }

    fn indexed(&self) -> &Indexed {
        self.index.get_or_init(|| {
            let n = self.elements.len();
            let pos = |e: &E| -> u32 {
                self.elements
                    .binary_search(e)
                    .expect("product of group elements stays in the closed group")
                    as u32
            };
            let mut mul = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    mul[i * n + j] = pos(&self.elements[i].op(&self.elements[j]));
                }
            }
            let identity = pos(&E::identity());
            let inv = (0..n).map(|i| pos(&self.elements[i].inverse())).collect();
            Arc::new(Indexed {
                n,
                identity,
                mul,
                inv,
            })
        })
    }

    fn position(&self, e: &E) -> Option<u32> {
        self.elements.binary_search(e).ok().map(|i| i as u32)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn is_subgroup_of(&self, ambient: &Self) -> bool {
        self.elements.iter().all(|e| ambient.contains(e))
    }

    pub fn element_order(&self, e: &E) -> Option<u64> {
        Some(self.indexed().order_of(self.position(e)?))
    }

    pub fn element_order_multiset(&self) -> BTreeMap<u64, u64> {
        let idx = self.indexed();
        let mut multiset = BTreeMap::new();
        for i in 0..self.order() as u32 {
            *multiset.entry(idx.order_of(i)).or_insert(0) += 1;
        }
        multiset
    }

    pub fn is_abelian(&self) -> bool {
        let idx = self.indexed();
        for i in 0..self.order() as u32 {
            for j in (i + 1)..self.order() as u32 {
                if idx.mul(i, j) != idx.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Classifies by (ambient, order, element-order multiset); total on the
    /// genuine finite subgroups of SU(2) and SO(3).
    pub fn recognize(&self) -> Result<IsoType, GroupError> {
        let n = self.order() as u64;
        if n == 1 {
            return Ok(IsoType::Trivial);
        }
        let multiset = self.element_order_multiset();
        let candidates: Vec<IsoType> = match E::AMBIENT {
            Ambient::SU2 => {
                let mut c = vec![IsoType::Cyclic(n as u32)];
                if n % 4 == 0 && n >= 8 {
                    c.push(IsoType::Dicyclic((n / 4) as u32));
                }
                if n == 24 {
                    c.push(IsoType::BinTet);
                }
                if n == 48 {
                    c.push(IsoType::BinOct);
                }
                if n == 120 {
                    c.push(IsoType::BinIco);
                }
                c
            }
            Ambient::SO3 => {
                let mut c = vec![IsoType::Cyclic(n as u32)];
                if n == 4 {
                    c.push(IsoType::KleinFour);
                }
                if n % 2 == 0 && n >= 6 {
                    c.push(IsoType::Dihedral((n / 2) as u32));
                }
                if n == 12 {
                    c.push(IsoType::Tet);
                }
                if n == 24 {
                    c.push(IsoType::Oct);
                }
                if n == 60 {
                    c.push(IsoType::Ico);
                }
                c
            }
        };
        for tag in candidates {
            if tag.expected_multiset() == multiset {
                return Ok(tag);
            }
        }
        Err(GroupError::Unrecognized {
            order: self.order(),
            multiset: multiset.into_iter().collect(),
        })
    }

    /// Conjugacy classes, each sorted, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<E>> {
        self.indexed()
            .conjugacy_classes()
            .into_iter()
            .map(|class| {
                class
                    .into_iter()
                    .map(|i| self.elements[i as usize].clone())
                    .collect()
            })
            .collect()
    }

    /// True when conjugation by every generator of `ambient` fixes this
    /// subgroup setwise.
    pub fn is_normal_in(&self, ambient: &Self) -> bool {
        let gens: &[E] = if ambient.generators.is_empty() {
            &ambient.elements
        } else {
            &ambient.generators
        };
        gens.iter().all(|g| {
            let ginv = g.inverse();
            self.elements
                .iter()
                .all(|h| self.contains(&g.op(h).op(&ginv)))
        })
    }

    /// Every subgroup fixed setwise by all conjugations.
    ///
    /// Normal subgroups are exactly the joins of normal closures of single
    /// elements, and a normal closure is the closure of a full conjugacy
    /// class; so the lattice is generated from class closures by pairwise
    /// joins.
    pub fn normal_subgroups(&self) -> Result<Vec<Self>, GroupError> {
        if self.order() > SUBGROUP_ENUMERATION_BOUND {
            return Err(GroupError::CapExceeded {
                cap: SUBGROUP_ENUMERATION_BOUND,
            });
        }
        let idx = self.indexed();
        let mut found: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
        found.insert(vec![idx.identity], Vec::new());
        for class in idx.conjugacy_classes() {
            let sub = idx.closure_of(&class);
            found.entry(sub).or_insert(class);
        }
        // Join-close: the union of two normal subgroups generates a normal
        // subgroup.
        loop {
            let snapshot: Vec<(Vec<u32>, Vec<u32>)> =
                found.iter().map(|(e, g)| (e.clone(), g.clone())).collect();
            let mut grew = false;
            for (i, (_, gens_a)) in snapshot.iter().enumerate() {
                for (_, gens_b) in snapshot.iter().skip(i + 1) {
                    let mut gens = gens_a.clone();
                    gens.extend(gens_b.iter().copied());
                    let join = idx.closure_of(&gens);
                    if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(join) {
                        slot.insert(gens);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut result: Vec<Self> = found
            .into_keys()
            .map(|indices| {
                let elements: Vec<E> = indices
                    .iter()
                    .map(|&i| self.elements[i as usize].clone())
                    .collect();
                Self::from_sorted_elements(elements)
            })
            .collect();
        result.sort_by_key(|g| (g.order(), g.elements.clone()));
        debug_assert!(result.iter().all(|n| n.is_normal_in(self)));
        Ok(result)
    }

    /// `{g ∈ self : g H g⁻¹ = H}` for `H = h ⊆ self`.
    pub fn normalizer_of(&self, h: &Self) -> Result<Self, GroupError> {
        let h_indices: Vec<u32> = h
            .elements
            .iter()
            .map(|e| self.position(e).ok_or(GroupError::NotSubgroup))
            .collect::<Result<_, _>>()?;
        let idx = self.indexed();
        let mut in_h = vec![false; self.order()];
        for &i in &h_indices {
            in_h[i as usize] = true;
        }
        let mut normalizer = Vec::new();
        for g in 0..self.order() as u32 {
            if h_indices.iter().all(|&x| in_h[idx.conj(g, x) as usize]) {
                normalizer.push(self.elements[g as usize].clone());
            }
        }
        Ok(Self::from_sorted_elements(normalizer))
    }

    /// Abstract type of `self / n` from coset multiplication.
    pub fn quotient_type(&self, n: &Self) -> Result<IsoType, GroupError> {
        if !n.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        if !n.is_normal_in(self) {
            return Err(GroupError::NotNormal);
        }
        let idx = self.indexed();
        let n_indices: Vec<u32> = n
            .elements
            .iter()
            .map(|e| self.position(e).expect("checked subgroup"))
            .collect();
        // Cosets keyed in order of least member.
        let mut coset_of: Vec<usize> = vec![usize::MAX; self.order()];
        let mut reps: Vec<u32> = Vec::new();
        for e in 0..self.order() as u32 {
            if coset_of[e as usize] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(e);
            for &x in &n_indices {
                coset_of[idx.mul(e, x) as usize] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0usize; q * q];
        for i in 0..q {
            for j in 0..q {
                table[i * q + j] = coset_of[idx.mul(reps[i], reps[j]) as usize];
            }
        }
        let identity = coset_of[idx.identity as usize];
        let order_of = |i: usize| -> u64 {
            let mut acc = i;
            let mut len = 1u64;
            while acc != identity {
                acc = table[acc * q + i];
                len += 1;
            }
            len
        };
        let mut multiset: BTreeMap<u64, u64> = BTreeMap::new();
        for i in 0..q {
            *multiset.entry(order_of(i)).or_insert(0) += 1;
        }
        classify_abstract(q as u64, &multiset).ok_or(GroupError::Unrecognized {
            order: q,
            multiset: multiset.into_iter().collect(),
        })
    }

    /// JSON-ready snapshot of the subgroup.
    pub fn export(&self) -> SubgroupExport {
        SubgroupExport {
            ambient: E::AMBIENT.to_string(),
            order: self.order(),
            iso_type: self
                .recognize()
                .map(|t| t.to_string())
                .unwrap_or_else(|_| "unrecognized".to_string()),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            element_order_multiset: self.element_order_multiset(),
        }
    }
}

impl<E: GroupElement> fmt::Debug for FiniteSubgroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSubgroup(order {})", self.order())
    }
}

/// Greedy generating set of an already-closed element list.
fn reduce_generators<E: GroupElement>(elements: &[E]) -> Vec<E> {
    let mut gens: Vec<E> = Vec::new();
    let mut span = FiniteSubgroup::<E>::trivial();
    for e in elements {
        if !span.contains(e) {
            gens.push(e.clone());
            span = FiniteSubgroup::closure(&gens, elements.len())
                .expect("span of a subset of a closed list is bounded by the list");
            if span.order() == elements.len() {
                break;
            }
        }
    }
    gens
}

/// Classifies an abstract finite group from (order, element-order multiset)
/// among the families that occur as subgroups or subquotients here.
fn classify_abstract(order: u64, multiset: &BTreeMap<u64, u64>) -> Option<IsoType> {
    if order == 1 {
        return Some(IsoType::Trivial);
    }
    let mut candidates = vec![IsoType::Cyclic(order as u32)];
    if order == 4 {
        candidates.push(IsoType::KleinFour);
    }
    if order % 2 == 0 && order >= 6 {
        candidates.push(IsoType::Dihedral((order / 2) as u32));
    }
    if order % 4 == 0 && order >= 8 {
        candidates.push(IsoType::Dicyclic((order / 4) as u32));
    }
    match order {
        12 => candidates.push(IsoType::Tet),
        24 => {
            candidates.push(IsoType::Oct);
            candidates.push(IsoType::BinTet);
        }
        48 => candidates.push(IsoType::BinOct),
        60 => candidates.push(IsoType::Ico),
        120 => candidates.push(IsoType::BinIco),
        _ => {}
    }
    candidates
        .into_iter()
        .find(|tag| tag.expected_multiset() == *multiset)
}

/// ω = −(1 + i + j + k)/2, an order-3 unit of the binary tetrahedral group.
pub fn omega() -> UnitQuat {
    let h = || FieldElement::from_rational(ratio(-1, 2));
    UnitQuat::from_coords(h(), h(), h(), h()).expect("|ω| = 1")
}

/// (φ + i + φ⁻¹·j)/2 with φ the golden ratio: an order-10 icosian unit.
/// Together with ω it generates the binary icosahedral group: the subgroup
/// they generate contains elements of orders 3 and 10, and 120 is the only
/// subgroup order of the icosian group divisible by 30.
pub fn icosian() -> UnitQuat {
    let quarter = |n: i64| FieldElement::new(ratio(n, 4), ratio(0, 1), ratio(1, 4), ratio(0, 1));
    UnitQuat::from_coords(
        quarter(1), // φ/2 = (1 + √5)/4
        FieldElement::from_rational(ratio(1, 2)),
        quarter(-1), // φ⁻¹/2 = (−1 + √5)/4
        FieldElement::zero(),
    )
    .expect("icosian units have norm 1")
}

/// A concrete standard copy of each finite subgroup family of SU(2).
pub fn su2_catalog(tag: IsoType) -> Result<FiniteSubgroup<UnitQuat>, GroupError> {
    let gens: Vec<UnitQuat> = match tag {
        IsoType::Trivial => Vec::new(),
        IsoType::Cyclic(k) => {
            if k < 1 {
                return Err(GroupError::BadParam {
                    family: "Cyclic".into(),
                    param: k,
                });
            }
            vec![UnitQuat::cis(ratio(1, i64::from(k)))]
        }
        IsoType::Dicyclic(m) => {
            if m < 2 {
                return Err(GroupError::BadParam {
                    family: "Dicyclic".into(),
                    param: m,
                });
            }
            vec![UnitQuat::cis(ratio(1, 2 * i64::from(m))), UnitQuat::j()]
        }
        IsoType::BinTet => vec![UnitQuat::i(), UnitQuat::j(), omega()],
        IsoType::BinOct => vec![
            UnitQuat::i(),
            UnitQuat::j(),
            omega(),
            UnitQuat::cis(ratio(1, 8)), // (1 + i)/√2
        ],
        IsoType::BinIco => vec![omega(), icosian()],
        other => {
            return Err(GroupError::UnknownTag {
                tag: other.to_string(),
                ambient: Ambient::SU2,
            })
        }
    };
    FiniteSubgroup::closure(&gens, tag.order() as usize)
}

/// The image of an SU(2) subgroup under the 2-fold cover; the image order
/// is |G|/2 when −1 ∈ G and |G| otherwise.
pub fn project_so3(g: &FiniteSubgroup<UnitQuat>) -> FiniteSubgroup<So3Element> {
    let elements: BTreeSet<So3Element> = g
        .elements()
        .iter()
        .map(|q| So3Element::from_quat(q.clone()))
        .collect();
    let generators: Vec<So3Element> = {
        let mut seen = BTreeSet::new();
        g.generators()
            .iter()
            .map(|q| So3Element::from_quat(q.clone()))
            .filter(|e| seen.insert(e.clone()))
            .collect()
    };
    FiniteSubgroup::assemble(elements.into_iter().collect(), generators)
}

/// A concrete standard copy of each finite subgroup family of SO(3), as
/// the φ-image of the corresponding SU(2) family.
pub fn so3_catalog(tag: IsoType) -> Result<FiniteSubgroup<So3Element>, GroupError> {
    let preimage = match tag {
        IsoType::Trivial => su2_catalog(IsoType::Trivial)?,
        IsoType::Cyclic(k) => {
            if k < 1 {
                return Err(GroupError::BadParam {
                    family: "Cyclic".into(),
                    param: k,
                });
            }
            su2_catalog(IsoType::Cyclic(2 * k))?
        }
        IsoType::KleinFour => su2_catalog(IsoType::Dicyclic(2))?,
        IsoType::Dihedral(m) => {
            if m < 2 {
                return Err(GroupError::BadParam {
                    family: "Dihedral".into(),
                    param: m,
                });
            }
            su2_catalog(IsoType::Dicyclic(m))?
        }
        IsoType::Tet => su2_catalog(IsoType::BinTet)?,
        IsoType::Oct => su2_catalog(IsoType::BinOct)?,
        IsoType::Ico => su2_catalog(IsoType::BinIco)?,
        other => {
            return Err(GroupError::UnknownTag {
                tag: other.to_string(),
                ambient: Ambient::SO3,
            })
        }
    };
    Ok(project_so3(&preimage))
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupExport {
    pub ambient: String,
    pub order: usize,
    pub iso_type: String,
    pub generators: Vec<String>,
    pub element_order_multiset: BTreeMap<u64, u64>,
}

/// A generic rational angle for continuous-row witness checks: e^{2πi/7}
/// lies in none of the special subgroups under test.
pub fn generic_circle_element() -> UnitQuat {
    UnitQuat::cis(Rational::new(1.into(), 7.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2(tag: IsoType) -> FiniteSubgroup<UnitQuat> {
        su2_catalog(tag).unwrap()
    }

    #[test]
    fn closure_examples() {
        let q8 = FiniteSubgroup::closure(&[UnitQuat::i(), UnitQuat::j()], 100).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.recognize().unwrap(), IsoType::Dicyclic(2));

        let t = FiniteSubgroup::closure(&[omega(), UnitQuat::i(), UnitQuat::j()], 100).unwrap();
        assert_eq!(t.order(), 24);
        assert_eq!(t.recognize().unwrap(), IsoType::BinTet);

        let trivial = FiniteSubgroup::closure(&[UnitQuat::one()], 10).unwrap();
        assert_eq!(trivial.order(), 1);

        assert_eq!(
            FiniteSubgroup::closure(&[UnitQuat::cis(ratio(1, 60))], 10),
            Err(GroupError::CapExceeded { cap: 10 })
        );
    }

    #[test]
    fn catalog_binary_polyhedral_orders() {
        assert_eq!(su2(IsoType::BinTet).order(), 24);
        assert_eq!(su2(IsoType::BinOct).order(), 48);
        assert_eq!(su2(IsoType::BinIco).order(), 120);
        assert_eq!(su2(IsoType::Cyclic(6)).order(), 6);
        for m in 2..=10 {
            assert_eq!(su2(IsoType::Dicyclic(m)).order(), 4 * m as usize);
        }
    }

    #[test]
    fn recognition_order_24_split() {
        // Order 24 with an order-12 element is Dic_6; capped at order 6 it
        // is the binary tetrahedral group.
        let dic6 = su2(IsoType::Dicyclic(6));
        assert_eq!(dic6.recognize().unwrap(), IsoType::Dicyclic(6));
        assert_eq!(dic6.element_order_multiset().keys().max(), Some(&12));
        let bintet = su2(IsoType::BinTet);
        assert_eq!(bintet.element_order_multiset().keys().max(), Some(&6));
        assert_eq!(
            su2(IsoType::Cyclic(5)).recognize().unwrap(),
            IsoType::Cyclic(5)
        );
    }

    #[test]
    fn recognition_round_trips() {
        for k in 2..=30u32 {
            assert_eq!(
                su2(IsoType::Cyclic(k)).recognize().unwrap(),
                IsoType::Cyclic(k)
            );
        }
        for m in 2..=30u32 {
            assert_eq!(
                su2(IsoType::Dicyclic(m)).recognize().unwrap(),
                IsoType::Dicyclic(m)
            );
        }
        for tag in [IsoType::BinTet, IsoType::BinOct, IsoType::BinIco] {
            assert_eq!(su2(tag).recognize().unwrap(), tag);
        }
        for tag in [IsoType::Tet, IsoType::Oct, IsoType::Ico, IsoType::KleinFour] {
            assert_eq!(so3_catalog(tag).unwrap().recognize().unwrap(), tag);
        }
        for m in 3..=20u32 {
            assert_eq!(
                so3_catalog(IsoType::Dihedral(m))
                    .unwrap()
                    .recognize()
                    .unwrap(),
                IsoType::Dihedral(m)
            );
        }
        for k in 2..=20u32 {
            assert_eq!(
                so3_catalog(IsoType::Cyclic(k))
                    .unwrap()
                    .recognize()
                    .unwrap(),
                IsoType::Cyclic(k)
            );
        }
    }

    #[test]
    fn omega_rotates_the_quaternion_units() {
        // The order-3 automorphism behind the semidirect structure of the
        // binary tetrahedral group: conjugation by ω cycles i -> j -> k.
        let w = omega();
        let conj = |x: UnitQuat| w.mul(&x).mul(&w.inverse());
        assert_eq!(conj(UnitQuat::i()), UnitQuat::j());
        assert_eq!(conj(UnitQuat::j()), UnitQuat::k());
        assert_eq!(conj(UnitQuat::k()), UnitQuat::i());
    }

    #[test]
    fn normal_subgroups_cyclic6() {
        let orders: Vec<usize> = su2(IsoType::Cyclic(6))
            .normal_subgroups()
            .unwrap()
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn normal_subgroups_bintet_contains_q8() {
        let normals = su2(IsoType::BinTet).normal_subgroups().unwrap();
        assert!(normals
            .iter()
            .any(|n| n.order() == 8 && n.recognize().unwrap() == IsoType::Dicyclic(2)));
    }

    #[test]
    fn normal_subgroups_binico() {
        let normals = su2(IsoType::BinIco).normal_subgroups().unwrap();
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 120]);
    }

    #[test]
    fn normal_subgroups_respect_bound() {
        // Dic_61 would have order 244 > 240.
        let big =
            FiniteSubgroup::closure(&[UnitQuat::cis(ratio(1, 122)), UnitQuat::j()], 244).unwrap();
        assert_eq!(
            big.normal_subgroups(),
            Err(GroupError::CapExceeded {
                cap: SUBGROUP_ENUMERATION_BOUND
            })
        );
    }

    #[test]
    fn quotients() {
        let bintet = su2(IsoType::BinTet);
        let q8 = FiniteSubgroup::closure(&[UnitQuat::i(), UnitQuat::j()], 8).unwrap();
        assert_eq!(bintet.quotient_type(&q8).unwrap(), IsoType::Cyclic(3));
        assert_eq!(bintet.quotient_type(&bintet).unwrap(), IsoType::Trivial);
        let binoct = su2(IsoType::BinOct);
        assert_eq!(binoct.quotient_type(&q8).unwrap(), IsoType::Dihedral(3));
        // Non-normal subgroup rejected.
        let z3 = FiniteSubgroup::closure(&[omega()], 3).unwrap();
        assert_eq!(binoct.quotient_type(&z3), Err(GroupError::NotNormal));
    }

    #[test]
    fn normalizers() {
        let binoct = su2(IsoType::BinOct);
        let q8 = FiniteSubgroup::closure(&[UnitQuat::i(), UnitQuat::j()], 8).unwrap();
        assert_eq!(binoct.normalizer_of(&q8).unwrap().order(), 48);
        assert_eq!(binoct.normalizer_of(&binoct).unwrap().order(), 48);
        let binico = su2(IsoType::BinIco);
        let center = FiniteSubgroup::closure(&[UnitQuat::minus_one()], 2).unwrap();
        assert_eq!(binico.normalizer_of(&center).unwrap().order(), 120);
        // The Hurwitz units sit inside the icosian group; the normalizer of
        // Q8 there is the binary tetrahedral subgroup.
        assert_eq!(binico.normalizer_of(&q8).unwrap().order(), 24);
        // A subgroup needing √2 coordinates is not inside the icosian copy.
        let dic4 = su2(IsoType::Dicyclic(4));
        assert_eq!(binico.normalizer_of(&dic4), Err(GroupError::NotSubgroup));
    }

    #[test]
    fn projection_orders_and_correspondence() {
        assert_eq!(
            project_so3(&su2(IsoType::BinTet)).recognize().unwrap(),
            IsoType::Tet
        );
        assert_eq!(
            project_so3(&su2(IsoType::BinOct)).recognize().unwrap(),
            IsoType::Oct
        );
        assert_eq!(
            project_so3(&su2(IsoType::BinIco)).recognize().unwrap(),
            IsoType::Ico
        );
        assert_eq!(
            project_so3(&su2(IsoType::Cyclic(5))).recognize().unwrap(),
            IsoType::Cyclic(5),
            "no −1, so the image keeps its order"
        );
        assert_eq!(
            project_so3(&su2(IsoType::Dicyclic(2))).recognize().unwrap(),
            IsoType::KleinFour
        );
        for m in 3..=8u32 {
            assert_eq!(
                project_so3(&su2(IsoType::Dicyclic(m))).recognize().unwrap(),
                IsoType::Dihedral(m)
            );
        }
        for k in 1..=8u32 {
            assert_eq!(
                project_so3(&su2(IsoType::Cyclic(2 * k))).order(),
                k as usize
            );
        }
    }

    #[test]
    fn lagrange_on_catalog_groups() {
        for tag in [
            IsoType::BinTet,
            IsoType::BinOct,
            IsoType::BinIco,
            IsoType::Dicyclic(6),
            IsoType::Cyclic(12),
        ] {
            let g = su2(tag);
            for n in g.normal_subgroups().unwrap() {
                assert_eq!(g.order() % n.order(), 0, "Lagrange fails in {tag}");
            }
        }
    }

    #[test]
    fn subgroup_export_shape() {
        let export = su2(IsoType::Dicyclic(2)).export();
        assert_eq!(export.ambient, "SU2");
        assert_eq!(export.iso_type, "Dic2");
        assert_eq!(export.order, 8);
        assert_eq!(export.element_order_multiset[&4], 6);
        let json = serde_json::to_string(&export).unwrap();
        assert!(json.contains("\"order\":8"));
    }
}
