//! HLT-style Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! The strategy is deterministic: cosets are processed in creation order,
//! each relator is scanned and filled at each live coset, and remaining
//! undefined generator images are defined in generator order. A completed
//! (closed, relator-compatible) table certifies the group order; hitting
//! the coset cap yields the inconclusive `Exceeded` status, never an
//! exception, since infinite groups are legitimate inputs.

use serde::Serialize;

use super::{Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CosetStatus {
    /// The coset table closed; the value is the certified group order.
    Completed(usize),
    /// The cap was reached; the group may be large or infinite.
    Exceeded,
}

/// A closed coset table: a transitive action of the generators on
/// `0..len()` compatible with every relator.
#[derive(Debug, Clone)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Image of `coset` under generator `gen` (or its inverse).
    pub fn act(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        self.rows[coset][2 * gen + usize::from(inverse)]
    }

    fn trace(&self, start: usize, word: &Word) -> usize {
        let mut c = start;
        for &(g, e) in word.letters() {
            let inverse = e < 0;
            for _ in 0..e.unsigned_abs() {
                c = self.act(c, g, inverse);
            }
        }
        c
    }

    /// Certificate check: every column is a permutation and every relator
    /// acts trivially from every coset.
    pub fn verify(&self, p: &Presentation) -> bool {
        let n = self.len();
        for col in 0..2 * self.ngens {
            let mut seen = vec![false; n];
            for row in &self.rows {
                let image = row[col];
                if image >= n || seen[image] {
                    return false;
                }
                seen[image] = true;
            }
        }
        for start in 0..n {
            for rel in p.relators() {
                if self.trace(start, rel) != start {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetResult {
    pub status: CosetStatus,
    /// Total cosets allocated during the enumeration (the peak, since slots
    /// are never reused).
    pub max_cosets_used: usize,
    #[serde(skip)]
    pub table: Option<CosetTable>,
}

impl CosetResult {
    pub fn order(&self) -> Option<usize> {
        match self.status {
            CosetStatus::Completed(n) => Some(n),
            CosetStatus::Exceeded => None,
        }
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>, // union-find over cosets; parent[k] <= k
    alive: usize,
    max_cosets: usize,
}

#[derive(Debug)]
struct Overflow;

fn inv(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn new(ncols: usize, max_cosets: usize) -> Self {
        Enumerator {
            ncols,
            table: vec![vec![None; ncols]],
            parent: vec![0],
            alive: 1,
            max_cosets,
        }
    }

    fn rep(&mut self, mut k: usize) -> usize {
        while self.parent[k] != k {
            let up = self.parent[self.parent[k]];
            self.parent[k] = up;
            k = up;
        }
        k
    }

    fn is_alive(&self, k: usize) -> bool {
        self.parent[k] == k
    }

    fn define(&mut self, alpha: usize, col: usize) -> Result<usize, Overflow> {
        if self.table.len() >= self.max_cosets {
            return Err(Overflow);
        }
        let beta = self.table.len();
        self.table.push(vec![None; self.ncols]);
        self.parent.push(beta);
        self.alive += 1;
        self.table[alpha][col] = Some(beta);
        self.table[beta][inv(col)] = Some(alpha);
        Ok(beta)
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
            self.alive -= 1;
            queue.push(hi);
        }
    }

    /// Processes the coincidence `a ~ b`, evacuating dead rows into their
    /// representatives and cascading any further coincidences, then
    /// normalizes surviving entries.
    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut qi = 0;
        while qi < queue.len() {
            let dead = queue[qi];
            qi += 1;
            for col in 0..self.ncols {
                let Some(delta) = self.table[dead][col] else {
                    continue;
                };
                self.table[dead][col] = None;
                if self.table[delta][inv(col)] == Some(dead) {
                    self.table[delta][inv(col)] = None;
                }
                let mu = self.rep(dead);
                let nu = self.rep(delta);
                if let Some(existing) = self.table[mu][col] {
                    self.merge(nu, existing, &mut queue);
                } else if let Some(existing) = self.table[nu][inv(col)] {
                    self.merge(mu, existing, &mut queue);
                } else {
                    self.table[mu][col] = Some(nu);
                    self.table[nu][inv(col)] = Some(mu);
                }
            }
        }
        // Re-point surviving entries at representatives so later scans never
        // walk into a dead coset.
        for row in 0..self.table.len() {
            if !self.is_alive(row) {
                continue;
            }
            for col in 0..self.ncols {
                if let Some(v) = self.table[row][col] {
                    let r = self.rep(v);
                    self.table[row][col] = Some(r);
                }
            }
        }
    }

    /// Scans relator `word` (as a column sequence) from `alpha`, defining
    /// cosets to fill the gap, recording the final deduction, or processing
    /// a coincidence.
    fn scan_and_fill(&mut self, alpha: usize, word: &[usize]) -> Result<(), Overflow> {
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = word.len(); // exclusive back index: word[j-1] is next
        loop {
            while i < j {
                match self.table[f][word[i]] {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                match self.table[b][inv(word[j - 1])] {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                // Deduction closing the scan.
                self.table[f][word[i]] = Some(b);
                self.table[b][inv(word[i])] = Some(f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup; `Completed(n)` certifies
/// that the presented group has order `n`.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> CosetResult {
    let ngens = p.generators().len();
    let ncols = 2 * ngens;
    let relator_cols: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| {
            let mut cols = Vec::with_capacity(w.length() as usize);
            for &(g, e) in w.letters() {
                let col = 2 * g + usize::from(e < 0);
                for _ in 0..e.unsigned_abs() {
                    cols.push(col);
                }
            }
            cols
        })
        .collect();

    let mut en = Enumerator::new(ncols, max_cosets.max(1));
    let mut alpha = 0usize;
    let overflowed = 'outer: loop {
        if alpha >= en.table.len() {
            break false;
        }
        if en.is_alive(alpha) {
            for word in &relator_cols {
                if !en.is_alive(alpha) {
                    break;
                }
                if en.scan_and_fill(alpha, word).is_err() {
                    break 'outer true;
                }
            }
            if en.is_alive(alpha) {
                for col in 0..ncols {
                    if en.table[alpha][col].is_none() && en.define(alpha, col).is_err() {
                        break 'outer true;
                    }
                }
            }
        }
        alpha += 1;
    };

    let max_cosets_used = en.table.len();
    if overflowed {
        return CosetResult {
            status: CosetStatus::Exceeded,
            max_cosets_used,
            table: None,
        };
    }

    // Compact live cosets into 0..alive.
    let mut index = vec![usize::MAX; en.table.len()];
    let mut live = Vec::new();
    for (k, slot) in index.iter_mut().enumerate() {
        if en.is_alive(k) {
            *slot = live.len();
            live.push(k);
        }
    }
    let rows: Vec<Vec<usize>> = live
        .iter()
        .map(|&k| {
            (0..ncols)
                .map(|col| {
                    let target = en.table[k][col].expect("completed table is closed");
                    let target = en.rep(target);
                    index[target]
                })
                .collect()
        })
        .collect();
    let table = CosetTable { ngens, rows };
    debug_assert!(table.verify(p), "completed table failed verification");
    CosetResult {
        status: CosetStatus::Completed(table.len()),
        max_cosets_used,
        table: Some(table),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(text: &str) -> CosetResult {
        todd_coxeter(&Presentation::parse(text).unwrap(), DEFAULT_MAX_COSETS)
    }

    #[test]
    fn cyclic_orders() {
        for n in 1..=100usize {
            let r = order_of(&format!("<a | a^{n}>"));
            assert_eq!(r.status, CosetStatus::Completed(n), "Z_{n}");
        }
    }

    #[test]
    fn quaternion_group() {
        let r = order_of("<i, j | i^4, i^2 = j^2, j i j^-1 = i^-1>");
        assert_eq!(r.status, CosetStatus::Completed(8));
        assert!(r
            .table
            .unwrap()
            .verify(&Presentation::parse("<i, j | i^4, i^2 = j^2, j i j^-1 = i^-1>").unwrap()));
    }

    #[test]
    fn dihedral_presentations() {
        // D_m = <a, b | a^m, b^2, (ab)^2>, written out since the grammar has
        // no parentheses.
        for m in 2..=12usize {
            let r = order_of(&format!("<a, b | a^{m}, b^2, a b a b>"));
            assert_eq!(r.status, CosetStatus::Completed(2 * m), "D_{m}");
        }
    }

    #[test]
    fn binary_tetrahedral_semidirect_presentation() {
        // Q8 ⋊ Z3 with the rotation automorphism: order 24.
        let r = order_of(
            "<x, y, w | x^4, y^2 = x^2, y x y^-1 = x^-1, w^3, w x w^-1 = y, w y w^-1 = x y>",
        );
        assert_eq!(r.status, CosetStatus::Completed(24));
    }

    #[test]
    fn pi1_shape_presentations() {
        // (n1, n2, b1, b2, k) = (4, 6, 1, 1, 0): gcd(4, 6, 5) = 1.
        let r = order_of("<e1, e2 | e1^4, e2^6, e1^2 = e2^3, e1 = e2^-1>");
        assert_eq!(r.status, CosetStatus::Completed(1));
        // (3, 3, 0, 0, 3): gcd(3, 3, 3) = 3.
        let p = Presentation::parse("<e1, e2 | e1^3, e2^3, e1 = e2, e2^3>").unwrap();
        let r = todd_coxeter(&p, DEFAULT_MAX_COSETS);
        assert_eq!(r.status, CosetStatus::Completed(3));
        let ab = p.abelianization();
        assert_eq!(ab.torsion_u64(), vec![3]);
        assert_eq!(ab.free_rank, 0);
    }

    #[test]
    fn triangle_group_quotients() {
        // Icosahedral rotation group via the (2,3,5) presentation.
        let r = order_of("<a, b | a^2, b^3, a b a b a b a b a b>");
        assert_eq!(r.status, CosetStatus::Completed(60));
        // Binary polyhedral <2,3,n> presentations: (st)^2 = s^3 = t^n.
        let r = order_of("<s, t | s t s t s^-3, s^3 t^-4>");
        assert_eq!(r.status, CosetStatus::Completed(48));
        let r = order_of("<s, t | s t s t s^-3, s^3 t^-5>");
        assert_eq!(r.status, CosetStatus::Completed(120));
    }

    #[test]
    fn free_and_infinite_groups_exceed() {
        let p = Presentation::parse("<a, b | >").unwrap();
        let r = todd_coxeter(&p, 500);
        assert_eq!(r.status, CosetStatus::Exceeded);
        assert!(r.max_cosets_used >= 500);
        // Z = <a | > also exceeds.
        let p = Presentation::parse("<a>").unwrap();
        assert_eq!(todd_coxeter(&p, 100).status, CosetStatus::Exceeded);
    }

    #[test]
    fn heavy_collapse() {
        // <a, b | a^b-ish relations> — a presentation of the trivial group
        // that needs coincidence cascades.
        let r = order_of("<a, b | a b a^-1 = b^2, b a b^-1 = a^2>");
        assert_eq!(r.status, CosetStatus::Completed(1));
    }
}
