//! Parser for the small expression language accepted on the command line.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" ["-"] int)?
//! atom   := int | "A" | "eta" | "d" | "T(" int "," int ")"
//!         | "(" int "," int ")" | "(" expr ")"
//! ```
//!
//! `T(p,q)` is a Chebyshev basis element, `(p,q)` the multicurve `(p,q)`,
//! `d` the boundary loop and `eta = d + A^2 + A^-2`. Only `A` may carry a
//! negative exponent.

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::skein::{from_multicurve, MulticurveElement, SkeinElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(i64),
    /// `A^k`
    APow(i64),
    Eta,
    Boundary,
    T(i64, i64),
    Curve(i64, i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Int(i64),
    Ident(&'static str),
    Sym(char),
    End,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse().map_err(|_| ParseError { column: col, message: format!("integer {text} too large") })?;
            out.push((col, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let ident = match word.as_str() {
                "A" => "A",
                "eta" => "eta",
                "d" => "d",
                "T" => "T",
                _ => return Err(ParseError { column: col, message: format!("unknown name {word:?}") }),
            };
            out.push((col, Tok::Ident(ident)));
        } else if "+-*^(),".contains(c) {
            out.push((col, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError { column: col, message: format!("unexpected character {c:?}") });
        }
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.pos].1
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.toks[self.pos].0, message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.peek() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let n = self.signed_int()?;
        if paren {
            self.expect(')')?;
        }
        match base {
            Expr::APow(1) => Ok(Expr::APow(n)),
            _ if n < 0 => self.err("only A may have a negative exponent"),
            _ => Ok(Expr::Pow(Box::new(base), u32::try_from(n).map_err(|_| ParseError {
                column: self.toks[self.pos - 1].0,
                message: "exponent too large".into(),
            })?)),
        }
    }

    /// `int "," int ")"` after an opening parenthesis, if it parses.
    fn pair_tail(&mut self) -> Option<(i64, i64)> {
        let save = self.pos;
        let r = (|| {
            let p = self.signed_int().ok()?;
            self.eat(',').then_some(())?;
            let q = self.signed_int().ok()?;
            self.eat(')').then_some((p, q))
        })();
        if r.is_none() {
            self.pos = save;
        }
        r
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident("A") => {
                self.pos += 1;
                Ok(Expr::APow(1))
            }
            Tok::Ident("eta") => {
                self.pos += 1;
                Ok(Expr::Eta)
            }
            Tok::Ident("d") => {
                self.pos += 1;
                Ok(Expr::Boundary)
            }
            Tok::Ident("T") => {
                self.pos += 1;
                self.expect('(')?;
                match self.pair_tail() {
                    Some((p, q)) => Ok(Expr::T(p, q)),
                    None => self.err("expected T(p,q) with integer p, q"),
                }
            }
            Tok::Sym('(') => {
                self.pos += 1;
                if let Some((p, q)) = self.pair_tail() {
                    return Ok(Expr::Curve(p, q));
                }
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::End => self.err("unexpected end of input"),
            _ => self.err("expected a term"),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let e = p.expr()?;
    if p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Evaluates with `mul` as the product of skein elements.
    pub fn eval<E>(
        &self,
        mul: &mut impl FnMut(&SkeinElement, &SkeinElement) -> Result<SkeinElement, E>,
    ) -> Result<SkeinElement, E> {
        Ok(match self {
            Expr::Int(n) => SkeinElement::scalar(LaurentPoly::constant(*n)),
            Expr::APow(k) => SkeinElement::scalar(LaurentPoly::a_pow(*k)),
            Expr::Eta => SkeinElement::eta_pow(1),
            Expr::Boundary => from_multicurve(&MulticurveElement::boundary()),
            Expr::T(p, q) => SkeinElement::t(*p, *q),
            Expr::Curve(p, q) => from_multicurve(&MulticurveElement::curve(*p, *q)),
            Expr::Add(x, y) => &x.eval(mul)? + &y.eval(mul)?,
            Expr::Sub(x, y) => &x.eval(mul)? - &y.eval(mul)?,
            Expr::Neg(x) => x.eval(mul)?.neg(),
            Expr::Mul(x, y) => {
                let (x, y) = (x.eval(mul)?, y.eval(mul)?);
                mul(&x, &y)?
            }
            Expr::Pow(x, n) => {
                let x = x.eval(mul)?;
                let mut acc = SkeinElement::one();
                for _ in 0..*n {
                    acc = mul(&acc, &x)?;
                }
                acc
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::multiply;

    fn ev(s: &str) -> SkeinElement {
        parse(s).unwrap().eval(&mut |x, y| Ok::<_, ()>(multiply(x, y))).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(parse("T(2,-1)").unwrap(), Expr::T(2, -1));
        assert_eq!(parse("(0,1)").unwrap(), Expr::Curve(0, 1));
        assert_eq!(parse("A^-2").unwrap(), Expr::APow(-2));
        assert_eq!(parse("A^(-3)").unwrap(), Expr::APow(-3));
        assert_eq!(parse(" eta ").unwrap(), Expr::Eta);
    }

    #[test]
    fn precedence() {
        let e = parse("1 + 2*A^2 - -d").unwrap();
        let expected = Expr::Sub(
            Box::new(Expr::Add(Box::new(Expr::Int(1)), Box::new(Expr::Mul(Box::new(Expr::Int(2)), Box::new(Expr::APow(2)))))),
            Box::new(Expr::Neg(Box::new(Expr::Boundary))),
        );
        assert_eq!(e, expected);
        assert_eq!(parse("(1 + (2,1))").unwrap(), Expr::Add(Box::new(Expr::Int(1)), Box::new(Expr::Curve(2, 1))));
        assert_eq!(parse("T(1,0)^3").unwrap(), Expr::Pow(Box::new(Expr::T(1, 0)), 3));
    }

    #[test]
    fn errors() {
        for bad in ["", "T(1)", "(1,2", "x", "T(1,0)^-1", "1 +", "2 3", "T(1,0)#"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
        assert_eq!(parse("1 + $").unwrap_err().column, 5);
    }

    #[test]
    fn evaluation() {
        let a = |e| LaurentPoly::a_pow(e);
        let mut expected = SkeinElement::t(2, 2).scale(&a(2));
        expected.add_assign(&SkeinElement::t(2, 0).scale(&a(-2)));
        expected.add_assign(&SkeinElement::eta_pow(1));
        assert_eq!(ev("T(2,1)*T(0,1)"), expected);
        assert_eq!(ev("(2,1)*(0,1)"), expected);
        assert_eq!(ev("d + A^2 + A^-2"), SkeinElement::eta_pow(1));
        assert_eq!(ev("1*T(5,3)"), SkeinElement::t(5, 3));
        assert_eq!(ev("(2,0)"), &SkeinElement::t(2, 0) + &SkeinElement::scalar(LaurentPoly::constant(2)));
        assert_eq!(ev("T(1,0)^2"), ev("T(2,0) + 2"));
    }
}
