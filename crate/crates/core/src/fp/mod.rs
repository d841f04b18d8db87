//! Finitely presented groups: presentations and words, a text parser,
//! Todd-Coxeter coset enumeration and abelianization via Smith normal form.
//!
//! Presentation grammar: `< g1, g2, ... | w1, w2, ... >` with words written
//! as products like `g1^3 g2^-2`; a relation `u = v` desugars to the relator
//! `u v^-1`.

mod coset;
mod parse;
mod snf;

use num_bigint::BigInt;

pub use coset::{todd_coxeter, CosetResult, CosetStatus, CosetTable, DEFAULT_MAX_COSETS};
pub use snf::smith_normal_form;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FpError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}` at byte {pos}")]
    UnknownGenerator { name: String, pos: usize },
}

/// A freely reduced word: adjacent letters always have distinct generator
/// indices and every exponent is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from arbitrary letters, reducing freely.
    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (gen, exp) in letters {
            push_reduced(&mut out, gen, exp);
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(
            self.letters
                .iter()
                .copied()
                .chain(other.letters.iter().copied()),
        )
    }

    /// Net exponent of each generator; the row this word contributes to the
    /// abelianized relation matrix.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<BigInt> {
        let mut sums = vec![BigInt::from(0); ngens];
        for &(g, e) in &self.letters {
            sums[g] += e;
        }
        sums
    }
}

fn push_reduced(out: &mut Vec<(usize, i64)>, gen: usize, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == gen {
            last.1 += exp;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((gen, exp));
}

/// A finitely presented group: named generators and freely reduced
/// relators (relators that reduce to the empty word are dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new<S: Into<String>>(generators: Vec<S>, relators: Vec<Word>) -> Self {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        let ngens = generators.len();
        let relators: Vec<Word> = relators
            .into_iter()
            .inspect(|w| {
                assert!(
                    w.letters().iter().all(|&(g, _)| g < ngens),
                    "relator references an undeclared generator"
                )
            })
            .filter(|w| !w.is_empty())
            .collect();
        Presentation {
            generators,
            relators,
        }
    }

    /// Parses the `< gens | relators >` grammar.
    pub fn parse(text: &str) -> Result<Self, FpError> {
        parse::parse_presentation(text)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Invariant factors (> 1, in divisibility order) and free rank of the
    /// abelianized group: the Smith normal form of the exponent-sum matrix.
    pub fn abelianization(&self) -> Abelianization {
        let matrix: Vec<Vec<BigInt>> = self
            .relators
            .iter()
            .map(|w| w.exponent_sums(self.generators.len()))
            .collect();
        let factors = smith_normal_form(&matrix);
        let rank = factors.len();
        let one = BigInt::from(1);
        Abelianization {
            torsion: factors.into_iter().filter(|d| *d > one).collect(),
            free_rank: self.generators.len() - rank,
        }
    }
}

/// Abelian invariants of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    /// Torsion coefficients d₁ | d₂ | …, each > 1.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl Abelianization {
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| u64::try_from(d).expect("torsion fits in u64 at these sizes"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_letters([(0, 1), (0, -1)]);
        assert!(w.is_empty());
        let w = Word::from_letters([(0, 2), (1, 1), (1, -1), (0, -2), (1, 3)]);
        assert_eq!(w.letters(), &[(1, 3)]);
    }

    #[test]
    fn abelianization_z3_squared() {
        // <a, b | a^3, b^3, aba⁻¹b⁻¹> is Z₃ × Z₃.
        let p = Presentation::new(
            vec!["a", "b"],
            vec![
                Word::from_letters([(0, 3)]),
                Word::from_letters([(1, 3)]),
                Word::from_letters([(0, 1), (1, 1), (0, -1), (1, -1)]),
            ],
        );
        let ab = p.abelianization();
        assert_eq!(ab.torsion_u64(), vec![3, 3]);
        assert_eq!(ab.free_rank, 0);
    }

    #[test]
    fn abelianization_free_rank() {
        let p = Presentation::new(vec!["a", "b"], vec![Word::from_letters([(0, 2)])]);
        let ab = p.abelianization();
        assert_eq!(ab.torsion_u64(), vec![2]);
        assert_eq!(ab.free_rank, 1);
    }

    proptest! {
        // Abelianization is invariant under relator order permutation and
        // under free insertion of cancelling pairs.
        #[test]
        fn abelianization_invariance(
            rels in proptest::collection::vec(
                proptest::collection::vec((0usize..3, -4i64..=4), 0..6),
                1..5,
            ),
            seed in 0usize..100,
        ) {
            let words: Vec<Word> = rels.iter().map(|r| Word::from_letters(r.iter().copied())).collect();
            let p = Presentation::new(vec!["a", "b", "c"], words.clone());
            let mut rotated = words.clone();
            rotated.rotate_left(seed % rels.len());
            // Pad one relator with a cancelling pair.
            if let Some(w) = rotated.first_mut() {
                let padded = Word::from_letters(
                    [(0usize, 1i64), (0, -1)]
                        .into_iter()
                        .chain(w.letters().iter().copied()),
                );
                *w = padded;
            }
            let q = Presentation::new(vec!["a", "b", "c"], rotated);
            prop_assert_eq!(p.abelianization(), q.abelianization());
        }
    }
}
