//! Text syntax for Laurent polynomials.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | ident ('^' exp)?
//! exp    := '-'? int | '(' '-'? int ')'
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgError, Exponents, LaurentPoly, Rational, Result, Vars};

pub fn parse_poly(src: &str, vars: &Vars) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        vars,
    };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

pub(crate) fn format_monomial(vars: &Vars, exps: &Exponents) -> String {
    let mut parts = Vec::new();
    for (name, &k) in vars.names().iter().zip(&exps.0) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            k => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgError {
        AlgError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars);
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, e) = self.term()?;
            let c = if negative { -c } else { c };
            acc = acc.add(&LaurentPoly::monomial(self.vars, c, e))?;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<(Rational, Exponents)> {
        let mut coeff = Rational::one();
        let mut exps = Exponents::zero(self.vars.len());
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.integer()?;
                    let den = if self.eat(b'/') {
                        let d = self.integer()?;
                        if d == BigInt::from(0) {
                            return Err(self.err("zero denominator"));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let name = self.ident();
                    let idx = self
                        .vars
                        .index_of(&name)
                        .map_err(|_| self.err(&format!("unknown variable `{name}`")))?;
                    let k = if self.eat(b'^') { self.exponent()? } else { 1 };
                    exps.0[idx] += k;
                }
                _ => return Err(self.err("expected a coefficient or a variable")),
            }
            if !self.eat(b'*') {
                return Ok((coeff, exps));
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        let k = self.integer()?;
        let k: i64 = k.try_into().map_err(|_| AlgError::Parse {
            pos: start,
            msg: "exponent out of range".into(),
        })?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected `)`"));
        }
        Ok(if negative { -k } else { k })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}
