//! Text literals for field elements, polynomials and rational functions:
//! integers, the variable (`u` or `T`), the generator `a` of GF(p^m),
//! `+ - * /`, `^` with integer exponents, parentheses and implicit
//! multiplication ("2u^3", "(u+1)(u+2)").

use crate::error::{Error, Result};
use crate::ff::{RatField, RatFunc};
use crate::field::Field;
use crate::gf::{FieldCtx, Fq};
use crate::upoly::FqPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var,
    Gen,
    Op(char),
}

fn lex(s: &str, var: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = cs[start..i].iter().collect();
            let n = lit
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("integer {lit} too large")))?;
            out.push(Tok::Num(n));
        } else if c.is_alphabetic() {
            let start = i;
            while i < cs.len() && cs[i].is_alphanumeric() {
                i += 1;
            }
            let word: String = cs[start..i].iter().collect();
            if word == var {
                out.push(Tok::Var);
            } else if word == "a" {
                out.push(Tok::Gen);
            } else {
                return Err(Error::Parse(format!(
                    "unknown symbol '{word}' (variable is '{var}')"
                )));
            }
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    k: &'a RatField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            self.k.neg(&t)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.k.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.k.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let f = self.power()?;
                acc = self.k.mul(&acc, &f);
            } else if self.eat('/') {
                let f = self.power()?;
                acc = self
                    .k
                    .div(&acc, &f)
                    .ok_or_else(|| Error::Parse("division by zero".into()))?;
            } else if matches!(
                self.peek(),
                Some(Tok::Num(_) | Tok::Var | Tok::Gen | Tok::Op('('))
            ) {
                let f = self.power()?;
                acc = self.k.mul(&acc, &f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(n)) => *n,
            _ => return Err(Error::Parse("exponent must be an integer".into())),
        };
        self.pos += 1;
        let r = self.k.pow(&base, e as u64);
        if neg {
            self.k
                .inv(&r)
                .ok_or_else(|| Error::Parse("zero to a negative power".into()))
        } else {
            Ok(r)
        }
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => Ok(self.k.from_int(n)),
            Some(Tok::Var) => Ok(self.k.var()),
            Some(Tok::Gen) => {
                let g = self
                    .k
                    .base()
                    .generator()
                    .ok_or_else(|| Error::Parse("'a' needs an extension field p^m".into()))?;
                Ok(self.k.constant(g))
            }
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse_ratfunc(field: &FieldCtx, s: &str, var: &'static str) -> Result<RatFunc> {
    let k = RatField::new(field.clone(), var);
    let toks = lex(s, var)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        k: &k,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(r)
}

pub fn parse_poly(field: &FieldCtx, s: &str, var: &'static str) -> Result<FqPoly> {
    let r = parse_ratfunc(field, s, var)?;
    r.as_poly()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("'{s}' is not a polynomial")))
}

pub fn parse_elem(field: &FieldCtx, s: &str) -> Result<Fq> {
    let r = parse_ratfunc(field, s, "u")?;
    r.as_constant()
        .ok_or_else(|| Error::Parse(format!("'{s}' is not a constant")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::upoly::Poly;

    #[test]
    fn polynomials() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(
            parse_poly(&f, "u^4+2*u^2+2", "u").unwrap(),
            Poly::from_ints(f.clone(), &[2, 0, 2, 0, 1])
        );
        assert_eq!(
            parse_poly(&f, "(u+1)(u+2)", "u").unwrap(),
            Poly::from_ints(f.clone(), &[2, 0, 1])
        );
        assert_eq!(
            parse_poly(&f, "-u + 4", "u").unwrap(),
            Poly::from_ints(f.clone(), &[1, 2])
        );
        assert_eq!(
            parse_poly(&f, "2T^3", "T").unwrap(),
            Poly::from_ints(f.clone(), &[0, 0, 0, 2])
        );
        assert!(parse_poly(&f, "1/u", "u").is_err());
        assert!(parse_poly(&f, "x+1", "u").is_err());
        assert!(parse_poly(&f, "u^", "u").is_err());
        assert!(parse_poly(&f, "(u", "u").is_err());
    }

    #[test]
    fn rational_functions_and_elements() {
        let f = make_field(5, 1).unwrap();
        let r = parse_ratfunc(&f, "u/(u^2+1)", "u").unwrap();
        assert_eq!(r.num(), &Poly::from_ints(f.clone(), &[0, 1]));
        assert_eq!(r, parse_ratfunc(&f, "u*(u^2+1)^-1", "u").unwrap());
        assert_eq!(parse_elem(&f, "-1").unwrap(), Fq(4));
        assert_eq!(parse_elem(&f, "1/2").unwrap(), Fq(3));
        assert!(parse_elem(&f, "u").is_err());
        assert!(parse_elem(&f, "a").is_err());
        let f9 = make_field(3, 2).unwrap();
        let a = parse_elem(&f9, "a").unwrap();
        assert_eq!(f9.format_elem(a), "a");
        assert_eq!(parse_elem(&f9, "a^2").unwrap(), f9.mul(a, a));
    }
}
