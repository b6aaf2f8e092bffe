//! Recursive-descent parser for the arithmetic expression grammar shared by
//! scalar and algebra-element literals:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Semantic actions for [`parse`].
pub(crate) trait ExprSemantics {
    type Value;

    fn integer(&self, n: BigInt) -> Result<Self::Value>;
    fn symbol(&self, name: &str, offset: usize) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn div(&self, a: Self::Value, b: Self::Value, offset: usize) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value>;
    fn pow(&self, a: Self::Value, k: i64, offset: usize) -> Result<Self::Value>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::parse(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a, S: ExprSemantics> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    sem: &'a S,
}

impl<S: ExprSemantics> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<S::Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.sem.add(acc, rhs)?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.sem.sub(acc, rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<S::Value> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = self.sem.mul(acc, rhs)?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = self.sem.div(acc, rhs, at)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<S::Value> {
        if self.eat('-') {
            let v = self.unary()?;
            return self.sem.neg(v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<S::Value> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let negative = self.eat('-');
        match self.toks.get(self.pos) {
            Some((_, Tok::Int(n))) => {
                let k: i64 = n
                    .try_into()
                    .map_err(|_| Error::parse(at, "exponent out of range"))?;
                self.pos += 1;
                self.sem.pow(base, if negative { -k } else { k }, at)
            }
            _ => Err(Error::parse(self.offset(), "expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<S::Value> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(n))) => {
                self.pos += 1;
                self.sem.integer(n)
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                self.sem.symbol(&name, at)
            }
            Some((_, Tok::Op('('))) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.offset(), "expected ')'"));
                }
                Ok(v)
            }
            Some((_, tok)) => Err(Error::parse(at, format!("unexpected token {tok:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse<S: ExprSemantics>(sem: &S, text: &str) -> Result<S::Value> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        sem,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.offset(), "trailing input"));
    }
    Ok(v)
}
