//! Word syntax.
//!
//! ```text
//! word    := factor*
//! factor  := atom ('^' (int | atom))*
//! atom    := 'a' | 'b' digits | 'b' | 'c' | 'd' | 'B<' int (',' int)* '>' | '1'
//!          | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `b` alone is the dihedral witness, `c`/`d` the pair of [`find_cd`](super::find_cd).
//! `x^k` is a power (negative allowed) and `x^y` is `y^{-1} x y`.

use super::{Element, Group};
use crate::algebra::BVec;
use crate::error::{Error, Result};

impl Group {
    pub fn parse(&self, text: &str) -> Result<Element> {
        let mut parser = Parser { group: self, chars: text.chars().collect(), pos: 0 };
        let word = parser.word()?;
        parser.skip_ws();
        if parser.pos < parser.chars.len() {
            return Err(parser.error(format!("unexpected `{}`", parser.chars[parser.pos])));
        }
        Ok(word)
    }
}

struct Parser<'a> {
    group: &'a Group,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> Result<Element> {
        let mut acc = self.group.identity();
        while let Some(c) = self.peek() {
            if matches!(c, ')' | ']' | ',') {
                break;
            }
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        let mut x = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c == '-' || c.is_ascii_digit() => {
                    let k = self.int()?;
                    x = x.pow(k);
                }
                Some(_) => {
                    let y = self.atom()?;
                    x = x.conj(&y);
                }
                None => return Err(self.error("expected exponent")),
            }
        }
        Ok(x)
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::parse(start + 1, format!("invalid integer `{s}`")))
    }

    fn digits(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().ok())?
    }

    fn atom(&mut self) -> Result<Element> {
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of word"));
        };
        let group = self.group;
        let m = group.spec().m();
        self.pos += 1;
        match c {
            'a' => Ok(group.a()),
            '1' => Ok(group.identity()),
            'b' => match self.digits() {
                Some(i) if i < m => Ok(group.b(i)),
                Some(i) => Err(Error::parse(start + 1, format!("b{i} out of range (m = {m})"))),
                None => group.dihedral_witness().map_err(|e| Error::parse(start + 1, e.to_string())),
            },
            'c' | 'd' => {
                let (cc, dd) = group.cd().map_err(|e| Error::parse(start + 1, e.to_string()))?;
                Ok(if c == 'c' { cc } else { dd })
            }
            'B' => {
                self.expect('<')?;
                let mut coords = vec![self.int()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    coords.push(self.int()?);
                }
                self.expect('>')?;
                if coords.len() != m {
                    return Err(Error::parse(start + 1, format!("B-vector needs {m} coordinates")));
                }
                let p = group.p() as i64;
                Ok(group.b_vec(&BVec::new(coords.iter().map(|&x| x.rem_euclid(p) as u32).collect())))
            }
            '(' => {
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            '[' => {
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(x.commutator(&y))
            }
            other => {
                self.pos = start;
                self.skip_ws();
                Err(self.error(format!("unexpected `{other}`")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupSpec;

    #[test]
    fn parses_words() {
        let g = Group::new(GroupSpec::grigorchuk_erschler());
        assert_eq!(g.parse("a b0").unwrap(), &g.a() * &g.b(0));
        assert_eq!(g.parse("ab0ab1").unwrap(), g.parse("a b0 a b1").unwrap());
        assert_eq!(g.parse("b").unwrap(), g.b_vec(&BVec::new(vec![1, 1])));
        assert_eq!(g.parse("B<1,1>").unwrap(), g.parse("b0 b1").unwrap());
        assert!(g.parse("(a b0)^4").unwrap().is_trivial());
        assert!(g.parse("1").unwrap().is_empty());
        assert_eq!(g.parse("[a, b1]").unwrap(), g.a().commutator(&g.b(1)));
        assert_eq!(g.parse("b0^a").unwrap(), g.b(0).conj(&g.a()));
        assert_eq!(g.parse("(a b)^-2").unwrap(), (&g.a() * &g.dihedral_witness().unwrap()).pow(-2));
        assert_eq!(g.parse("c d").unwrap(), g.parse("b1 b0").unwrap());
    }

    #[test]
    fn display_round_trips() {
        let g = Group::new(GroupSpec::new(3, &[1, 2]).unwrap());
        let x = g.parse("a^2 B<2,1> a b1^2").unwrap();
        assert_eq!(g.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn parse_errors() {
        let g = Group::new(GroupSpec::grigorchuk());
        assert!(matches!(g.parse("a x"), Err(Error::Parse { col: 3, .. })));
        assert!(matches!(g.parse("b"), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(g.parse("b5"), Err(Error::Parse { .. })));
        assert!(matches!(g.parse("(a"), Err(Error::Parse { .. })));
        assert!(matches!(g.parse("B<1>"), Err(Error::Parse { .. })));
        assert!(matches!(g.parse("a^"), Err(Error::Parse { .. })));
    }
}
