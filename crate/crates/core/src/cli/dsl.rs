//! Text form of graded monomial families, e.g. `x*y, x^m, y^(2*m-1)`.
//!
//! ```text
//! family   := template (',' template)*
//! template := '1' | factor ('*' factor)*
//! factor   := var ('^' affexp)?
//! affexp   := '(' affine ')' | affine
//! affine   := int ['*' 'm'] [('+'|'-') int] | 'm' [('+'|'-') int]
//! ```
//! `m` is reserved for the weight. Variables are ordered by first
//! appearance.

use thiserror::Error;

use crate::exactalg::{AffineExponent, Vars};
use crate::monideal::{GradedMonomialFamily, IdealError, MonomialTemplate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid family: {0}")]
    Invalid(#[from] IdealError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type Factor = (String, AffineExponent);

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<i64, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn ident(&mut self) -> Result<String, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable");
        }
        Ok(String::from_utf8(self.src[start..self.pos].to_vec()).expect("ascii"))
    }

    /// `m` standing alone as an identifier at the cursor.
    fn at_weight(&mut self) -> bool {
        if self.peek() != Some(b'm') {
            return false;
        }
        let next = self.src.get(self.pos + 1).copied();
        !next.is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
    }

    fn offset(&mut self) -> Result<i64, DslError> {
        if self.eat(b'+') {
            self.int()
        } else if self.eat(b'-') {
            Ok(-self.int()?)
        } else {
            Ok(0)
        }
    }

    fn affine(&mut self) -> Result<AffineExponent, DslError> {
        if self.at_weight() {
            self.pos += 1;
            return Ok(AffineExponent::new(1, self.offset()?));
        }
        let c = self.int()?;
        let save = self.pos;
        if self.eat(b'*') {
            if self.at_weight() {
                self.pos += 1;
                return Ok(AffineExponent::new(c, self.offset()?));
            }
            // the '*' separates factors
            self.pos = save;
            return Ok(AffineExponent::constant(c));
        }
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            return self.err("an offset needs a multiple of m before it");
        }
        Ok(AffineExponent::constant(c))
    }

    fn affexp(&mut self) -> Result<AffineExponent, DslError> {
        if self.eat(b'(') {
            let a = self.affine()?;
            self.expect(b')')?;
            Ok(a)
        } else {
            self.affine()
        }
    }

    fn factor(&mut self) -> Result<Factor, DslError> {
        let start = self.pos;
        let name = self.ident()?;
        if name == "m" {
            self.pos = start;
            self.skip_ws();
            return self.err("'m' is the weight, not a variable");
        }
        let exp = if self.eat(b'^') {
            self.affexp()?
        } else {
            AffineExponent::constant(1)
        };
        Ok((name, exp))
    }

    fn template(&mut self) -> Result<Vec<Factor>, DslError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = vec![self.factor()?];
        while self.eat(b'*') {
            out.push(self.factor()?);
        }
        Ok(out)
    }
}

pub fn parse_family(src: &str) -> Result<GradedMonomialFamily, DslError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut raw = vec![p.template()?];
    while p.eat(b',') {
        raw.push(p.template()?);
    }
    if p.peek().is_some() {
        return p.err("unexpected input");
    }
    let mut names: Vec<String> = Vec::new();
    for (n, _) in raw.iter().flatten() {
        if !names.contains(n) {
            names.push(n.clone());
        }
    }
    let templates = raw
        .iter()
        .map(|factors| {
            let mut exps = vec![AffineExponent::constant(0); names.len()];
            for (n, a) in factors {
                let i = names.iter().position(|x| x == n).expect("collected above");
                exps[i] = AffineExponent::new(exps[i].slope + a.slope, exps[i].offset + a.offset);
            }
            MonomialTemplate(exps)
        })
        .collect();
    Ok(GradedMonomialFamily::new(&Vars::new(&names), templates)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_triple_point_family() {
        let f = parse_family("x*y, x^m, y^m").unwrap();
        assert_eq!(f, GradedMonomialFamily::nc_triple_point());
        assert_eq!(f.to_string(), "x*y, x^m, y^m");
    }

    #[test]
    fn affine_forms() {
        let f = parse_family("x^(2*m+3)*y^4, x^3*m*y, z^m-1").unwrap();
        assert_eq!(f.to_string(), "x^(2*m+3)*y^4, x^(3*m)*y, z^(m-1)");
        assert_eq!(parse_family("x^m").unwrap().to_string(), "x^m");
        assert_eq!(parse_family(" x * x ^ 2 ").unwrap().to_string(), "x^3");
        assert_eq!(parse_family("1, x").unwrap().to_string(), "1, x");
    }

    #[test]
    fn rejects_negative_templates() {
        assert!(matches!(parse_family("x^(m-2)"), Err(DslError::Invalid(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_family("x^"),
            Err(DslError::Syntax {
                pos: 2,
                msg: "expected an integer".into()
            })
        );
        assert!(matches!(
            parse_family("x, "),
            Err(DslError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_family("x^2+1"),
            Err(DslError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_family("m*x"),
            Err(DslError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_family("x^(m"),
            Err(DslError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_family("x y"),
            Err(DslError::Syntax { pos: 2, .. })
        ));
    }
}
