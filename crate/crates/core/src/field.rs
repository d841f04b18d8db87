//! Exact arithmetic in the real number field Q(√2, √5).
//!
//! Elements are stored on the fixed basis {1, √2, √5, √10} with
//! arbitrary-precision rational coordinates, so equality is exact and
//! coordinate-wise. The field is just large enough for the coordinates of
//! the binary polyhedral quaternions: the binary octahedral group needs
//! √2 and the binary icosahedral group needs the golden ratio, hence √5.
//!
//! Text format: `c0 + c1*r2 + c2*r5 + c3*r10` with rational coefficients
//! written as `p` or `p/q`; parsing and formatting round-trip exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for a small rational constant.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero in Q(r2, r5)")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// An element `c0 + c1·√2 + c2·√5 + c3·√10` of Q(√2, √5).
///
/// The basis {1, √2, √5, √10} is linearly independent over Q, so the
/// representation is unique and equality is coordinate-wise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coords: [Rational; 4],
}

impl FieldElement {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        FieldElement {
            coords: [c0, c1, c2, c3],
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c0: Rational) -> Self {
        FieldElement {
            coords: [c0, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    /// √2 as a field element.
    pub fn sqrt2() -> Self {
        FieldElement::new(ratio(0, 1), ratio(1, 1), ratio(0, 1), ratio(0, 1))
    }

    /// √5 as a field element.
    pub fn sqrt5() -> Self {
        FieldElement::new(ratio(0, 1), ratio(0, 1), ratio(1, 1), ratio(0, 1))
    }

    /// √10 as a field element.
    pub fn sqrt10() -> Self {
        FieldElement::new(ratio(0, 1), ratio(0, 1), ratio(0, 1), ratio(1, 1))
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        FieldElement::new(ratio(1, 2), ratio(0, 1), ratio(1, 2), ratio(0, 1))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Floating-point magnitude for debugging only; carries no correctness
    /// contract.
    pub fn approx(&self) -> f64 {
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.coords[0])
            + f(&self.coords[1]) * std::f64::consts::SQRT_2
            + f(&self.coords[2]) * 5.0_f64.sqrt()
            + f(&self.coords[3]) * 10.0_f64.sqrt()
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let c = |k: usize| &self.coords[k] + &rhs.coords[k];
        FieldElement::new(c(0), c(1), c(2), c(3))
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        let c = |k: usize| &self.coords[k] - &rhs.coords[k];
        FieldElement::new(c(0), c(1), c(2), c(3))
    }

    /// Multiplication rewrites products of radicals by (√2)² = 2,
    /// (√5)² = 5, (√10)² = 10 and √2·√5 = √10.
    fn mul_impl(&self, rhs: &Self) -> Self {
        let a = &self.coords;
        let b = &rhs.coords;
        let two = ratio(2, 1);
        let five = ratio(5, 1);
        let ten = ratio(10, 1);
        let e0 = &a[0] * &b[0]
            + &two * &(&a[1] * &b[1])
            + &five * &(&a[2] * &b[2])
            + &ten * &(&a[3] * &b[3]);
        let e1 = &a[0] * &b[1] + &a[1] * &b[0] + &five * &(&a[2] * &b[3] + &a[3] * &b[2]);
        let e2 = &a[0] * &b[2] + &a[2] * &b[0] + &two * &(&a[1] * &b[3] + &a[3] * &b[1]);
        let e3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        FieldElement::new(e0, e1, e2, e3)
    }

    /// Multiplicative inverse, found by solving the 4×4 rational linear
    /// system of multiplication-by-`self` on the basis.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let a = &self.coords;
        // Columns are the basis images self·1, self·√2, self·√5, self·√10.
        let two = |r: &Rational| r * ratio(2, 1);
        let five = |r: &Rational| r * ratio(5, 1);
        let ten = |r: &Rational| r * ratio(10, 1);
        let mut m: [[Rational; 5]; 4] = [
            [
                a[0].clone(),
                two(&a[1]),
                five(&a[2]),
                ten(&a[3]),
                Rational::one(),
            ],
            [
                a[1].clone(),
                a[0].clone(),
                five(&a[3]),
                five(&a[2]),
                Rational::zero(),
            ],
            [
                a[2].clone(),
                two(&a[3]),
                a[0].clone(),
                two(&a[1]),
                Rational::zero(),
            ],
            [
                a[3].clone(),
                a[2].clone(),
                a[1].clone(),
                a[0].clone(),
                Rational::zero(),
            ],
        ];
        // Gaussian elimination with partial (first nonzero) pivoting.
        for col in 0..4 {
            let pivot_row = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication-by-a is invertible for nonzero a");
            m.swap(col, pivot_row);
            let pivot = m[col][col].clone();
            for k in col..5 {
                m[col][k] = &m[col][k] / &pivot;
            }
            for row in 0..4 {
                if row != col && !m[row][col].is_zero() {
                    let factor = m[row][col].clone();
                    for k in col..5 {
                        m[row][k] = &m[row][k] - &(&factor * &m[col][k]);
                    }
                }
            }
        }
        Ok(FieldElement::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        self.add_impl(rhs)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        self.sub_impl(rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        self.mul_impl(rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let c = |k: usize| -self.coords[k].clone();
        FieldElement::new(c(0), c(1), c(2), c(3))
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        &self + &rhs
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        &self - &rhs
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        &self * &rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

const RADICAL_NAMES: [&str; 3] = ["r2", "r5", "r10"];

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", RADICAL_NAMES[k - 1])?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), RADICAL_NAMES[k - 1])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, msg: &str) -> FieldError {
        FieldError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(BigInt::from_str(text).unwrap())
    }

    fn rational(&mut self) -> Result<Rational, FieldError> {
        let numer = self.integer()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from(numer))
        }
    }

    fn radical(&mut self) -> Result<Option<usize>, FieldError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        for (k, name) in RADICAL_NAMES.iter().enumerate().rev() {
            if rest.starts_with(name.as_bytes()) {
                self.pos += name.len();
                return Ok(Some(k + 1));
            }
        }
        Ok(None)
    }
}

impl FromStr for FieldElement {
    type Err = FieldError;

    /// Parses the `c0 + c1*r2 + c2*r5 + c3*r10` format. Terms may appear in
    /// any order, zero terms may be omitted, and a bare radical stands for
    /// coefficient 1.
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let mut lex = Lexer::new(s);
        let mut coords = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let mut first = true;
        loop {
            let sign = match lex.peek() {
                None if first => return Err(lex.err("empty input")),
                None => break,
                Some(b'+') => {
                    lex.bump();
                    Rational::one()
                }
                Some(b'-') => {
                    lex.bump();
                    -Rational::one()
                }
                Some(_) if first => Rational::one(),
                Some(_) => return Err(lex.err("expected '+' or '-' between terms")),
            };
            first = false;
            let (coeff, slot) = if let Some(slot) = lex.radical()? {
                (Rational::one(), slot)
            } else {
                let coeff = lex.rational()?;
                if lex.peek() == Some(b'*') {
                    lex.bump();
                    match lex.radical()? {
                        Some(slot) => (coeff, slot),
                        None => return Err(lex.err("expected r2, r5 or r10 after '*'")),
                    }
                } else {
                    (coeff, 0)
                }
            };
            coords[slot] = &coords[slot] + &(&sign * &coeff);
            if lex.peek().is_none() {
                break;
            }
        }
        let [c0, c1, c2, c3] = coords;
        Ok(FieldElement::new(c0, c1, c2, c3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn defining_relations() {
        assert_eq!(
            &FieldElement::sqrt2() * &FieldElement::sqrt2(),
            FieldElement::from_int(2)
        );
        assert_eq!(
            &FieldElement::sqrt5() * &FieldElement::sqrt5(),
            FieldElement::from_int(5)
        );
        assert_eq!(
            &FieldElement::sqrt10() * &FieldElement::sqrt10(),
            FieldElement::from_int(10)
        );
        assert_eq!(
            &FieldElement::sqrt2() * &FieldElement::sqrt5(),
            FieldElement::sqrt10()
        );
    }

    #[test]
    fn conjugate_sum() {
        let phi = fe("1/2 + 1/2*r5");
        let psi = fe("1/2 - 1/2*r5");
        assert_eq!(&phi + &psi, FieldElement::one());
    }

    #[test]
    fn inverses() {
        let half_sqrt2 = fe("1/2*r2");
        assert_eq!(FieldElement::sqrt2().inverse().unwrap(), half_sqrt2);
        assert_eq!(FieldElement::from_int(2).inverse().unwrap(), fe("1/2"));
        // inv((1+√5)/2) = (−1+√5)/2, checked by multiplying back as well.
        let phi = FieldElement::golden();
        let inv = phi.inverse().unwrap();
        assert_eq!(inv, fe("-1/2 + 1/2*r5"));
        assert_eq!(&phi * &inv, FieldElement::one());
        assert_eq!(
            FieldElement::zero().inverse(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn display_round_trip_fixed() {
        for s in [
            "0",
            "1",
            "-1",
            "1/2 - 1/2*r2",
            "r10",
            "-3/7 + r2 - 2*r5 + 11/13*r10",
        ] {
            let x = fe(s);
            let shown = x.to_string();
            assert_eq!(shown.parse::<FieldElement>().unwrap(), x, "via {shown:?}");
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_elem() -> impl Strategy<Value = FieldElement> {
        (
            arb_rational(),
            arb_rational(),
            arb_rational(),
            arb_rational(),
        )
            .prop_map(|(a, b, c, d)| FieldElement::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(&a * &inv, FieldElement::one());
            }
        }

        #[test]
        fn format_parse_lossless(a in arb_elem()) {
            let shown = a.to_string();
            prop_assert_eq!(shown.parse::<FieldElement>().unwrap(), a);
        }
    }
}
