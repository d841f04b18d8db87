//! Hand-rolled parser for the presentation grammar
//! `< g1, g2, ... | w1, w2, ... >` with `u = v` sugar for `u v^-1`.

use super::{FpError, Presentation, Word};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), FpError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn err(&self, msg: &str) -> FpError {
        FpError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.src.len()
            && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
        {
            // Identifiers start with a letter or underscore.
            if end == start && self.src[end].is_ascii_digit() {
                return None;
            }
            end += 1;
        }
        if end == start {
            return None;
        }
        self.pos = end;
        Some((
            String::from_utf8(self.src[start..end].to_vec()).unwrap(),
            start,
        ))
    }

    fn integer(&mut self) -> Result<i64, FpError> {
        self.skip_ws();
        let start = self.pos;
        let negative = if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.err("expected an exponent"));
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
        let value: i64 = text
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if negative { -value } else { value })
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FpError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    cur.eat(b'<')?;

    let mut generators: Vec<String> = Vec::new();
    loop {
        match cur.ident() {
            Some((name, pos)) => {
                if generators.contains(&name) {
                    return Err(FpError::Syntax {
                        pos,
                        msg: format!("duplicate generator `{name}`"),
                    });
                }
                generators.push(name);
            }
            None => return Err(cur.err("expected a generator name")),
        }
        match cur.peek() {
            Some(b',') => {
                cur.eat(b',')?;
            }
            Some(b'|') => break,
            Some(b'>') => break,
            _ => return Err(cur.err("expected `,`, `|` or `>` after a generator")),
        }
    }

    let mut relators: Vec<Word> = Vec::new();
    if cur.peek() == Some(b'|') {
        cur.eat(b'|')?;
        loop {
            if cur.peek() == Some(b'>') {
                break;
            }
            let lhs = parse_word(&mut cur, &generators)?;
            let relator = if cur.peek() == Some(b'=') {
                cur.eat(b'=')?;
                let rhs = parse_word(&mut cur, &generators)?;
                lhs.concat(&rhs.inverse())
            } else {
                lhs
            };
            // Relators that reduce to the empty word are accepted and
            // dropped.
            if !relator.is_empty() {
                relators.push(relator);
            }
            match cur.peek() {
                Some(b',') => {
                    cur.eat(b',')?;
                }
                Some(b'>') => break,
                _ => return Err(cur.err("expected `,` or `>` after a relator")),
            }
        }
    }
    cur.eat(b'>')?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return Err(cur.err("trailing input after `>`"));
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

fn parse_word(cur: &mut Cursor<'_>, generators: &[String]) -> Result<Word, FpError> {
    let mut letters: Vec<(usize, i64)> = Vec::new();
    loop {
        match cur.ident() {
            Some((name, pos)) => {
                let gen = generators
                    .iter()
                    .position(|g| *g == name)
                    .ok_or(FpError::UnknownGenerator { name, pos })?;
                let exp = if cur.peek() == Some(b'^') {
                    cur.eat(b'^')?;
                    cur.integer()?
                } else {
                    1
                };
                letters.push((gen, exp));
            }
            None => {
                if letters.is_empty() {
                    return Err(cur.err("expected a word"));
                }
                break;
            }
        }
        // Optional explicit product marker.
        if cur.peek() == Some(b'*') {
            cur.eat(b'*')?;
        }
    }
    Ok(Word::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cyclic() {
        let p = Presentation::parse("<a | a^5>").unwrap();
        assert_eq!(p.generators(), &["a".to_string()]);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].length(), 5);
    }

    #[test]
    fn relation_sugar() {
        let p = Presentation::parse("<e1,e2 | e1^4, e2^6, e1^2 = e2^3, e1 = e2^-1>").unwrap();
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.relators().len(), 4);
        // e1^2 = e2^3 becomes e1^2 e2^-3.
        assert_eq!(p.relators()[2].letters(), &[(0, 2), (1, -3)]);
        assert_eq!(p.relators()[3].letters(), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn empty_relator_dropped() {
        let p = Presentation::parse("<a | a a^-1>").unwrap();
        assert!(p.relators().is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        match Presentation::parse("<a | b^2>") {
            Err(FpError::UnknownGenerator { name, pos }) => {
                assert_eq!(name, "b");
                assert_eq!(pos, 5);
            }
            other => panic!("expected UnknownGenerator, got {other:?}"),
        }
        assert!(matches!(
            Presentation::parse("<a | a^2"),
            Err(FpError::Syntax { .. })
        ));
        assert!(matches!(
            Presentation::parse("<a, a | a^2>"),
            Err(FpError::Syntax { .. })
        ));
    }

    #[test]
    fn no_relators() {
        let p = Presentation::parse("<x, y | >").unwrap();
        assert!(p.relators().is_empty());
        let q = Presentation::parse("<x, y>").unwrap();
        assert!(q.relators().is_empty());
    }
}
