//! Reader for the `3*a^2*d - b*c + 1` polynomial syntax.

use std::sync::Arc;

use num_bigint::BigInt;

use super::MultiPoly;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<Tok>, AlgebraError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    vars: Arc<[String]>,
}

impl Parser {
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

    fn expr(&mut self) -> Result<MultiPoly, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, AlgebraError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, AlgebraError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| AlgebraError::parse("exponent too large"))?;
                    base.pow(e)
                }
                _ => Err(AlgebraError::parse("expected exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, AlgebraError> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| AlgebraError::parse("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(MultiPoly::constant(self.vars.clone(), n)),
            Tok::Ident(name) => MultiPoly::var(self.vars.clone(), &name),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::parse("missing `)`"));
                }
                Ok(inner)
            }
            Tok::Op(c) => Err(AlgebraError::parse(format!("unexpected `{c}`"))),
        }
    }
}

pub(super) fn parse_poly(vars: Arc<[String]>, text: &str) -> Result<MultiPoly, AlgebraError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(AlgebraError::parse("empty polynomial"));
    }
    let mut parser = Parser { toks, pos: 0, vars };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(AlgebraError::parse(format!("trailing input at token {}", parser.pos)));
    }
    Ok(p)
}
