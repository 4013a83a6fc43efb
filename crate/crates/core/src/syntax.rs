//! Tokenizer and polynomial-expression parser shared by the session
//! language and [`PolyRing::parse`].

use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    Sym(char),
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
    /// Byte offset just past the token, used to detect adjacency.
    pub end: usize,
    pub start: usize,
}

const SYMBOLS: &str = "{}[]();,:=+-*^/.";

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let (start, scol) = (i, col);
        let tok = if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text = &src[start..i];
            Tok::Int(text.parse().map_err(|_| Error::Parse {
                line,
                column: scol,
                message: format!("integer literal `{text}` out of range"),
            })?)
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(src[start..i].to_string())
        } else if c == '"' {
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                if bytes[i] == b'\n' {
                    break;
                }
                i += 1;
            }
            if i >= bytes.len() || bytes[i] != b'"' {
                return Err(Error::Parse {
                    line,
                    column: scol,
                    message: "unterminated string literal".into(),
                });
            }
            i += 1;
            Tok::Str(src[start + 1..i - 1].to_string())
        } else if SYMBOLS.contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line,
                column: scol,
                message: format!("unexpected character `{c}`"),
            });
        };
        col += i - start;
        out.push(Token {
            tok,
            line,
            column: scol,
            end: i,
            start,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
        end: i,
        start: i,
    });
    Ok(out)
}

/// Cursor over a token vector with error helpers.
pub struct Cursor<'a> {
    pub toks: &'a [Token],
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    pub fn peek_at(&self, k: usize) -> &Token {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)]
    }

    pub fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos.min(self.toks.len() - 1)];
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    pub fn is_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    pub fn error_at(&self, t: &Token, expected: &str) -> Error {
        Error::Parse {
            line: t.line,
            column: t.column,
            message: format!("expected {expected}, found {}", t.tok.describe()),
        }
    }

    pub fn fail(&self, expected: &str) -> Error {
        self.error_at(self.peek(), expected)
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.fail(&format!("`{c}`")))
        }
    }

    pub fn expect_kw(&mut self, kw: &str) -> Result<()> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.fail(&format!("`{kw}`")))
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.fail("identifier")),
        }
    }

    pub fn int(&mut self) -> Result<u64> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.fail("integer")),
        }
    }

    /// Optionally signed integer.
    pub fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.is_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let n = self.int()? as i64;
        Ok(if neg { -n } else { n })
    }

    /// Polynomial expression: sums, products, integer powers, parentheses.
    /// A `*` may be omitted directly after a numeric coefficient.
    pub fn poly(&mut self, ring: &PolyRing) -> Result<Polynomial> {
        let mut acc = ring.zero();
        let mut sign = 1i64;
        if self.is_sym('-') {
            self.bump();
            sign = -1;
        } else if self.is_sym('+') {
            self.bump();
        }
        loop {
            let t = self.product(ring)?;
            acc = if sign > 0 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
            if self.is_sym('+') {
                self.bump();
                sign = 1;
            } else if self.is_sym('-') {
                self.bump();
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self, ring: &PolyRing) -> Result<Polynomial> {
        let (mut acc, mut last_was_int) = self.power(ring)?;
        loop {
            if self.is_sym('*') {
                self.bump();
                let (f, int) = self.power(ring)?;
                acc = ring.mul(&acc, &f);
                last_was_int = int;
            } else if last_was_int && matches!(self.peek().tok, Tok::Ident(_) | Tok::Sym('(')) {
                let (f, int) = self.power(ring)?;
                acc = ring.mul(&acc, &f);
                last_was_int = int;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self, ring: &PolyRing) -> Result<(Polynomial, bool)> {
        let (base, is_int) = self.atom(ring)?;
        if self.is_sym('^') {
            self.bump();
            let e = self.int()?;
            if e > 1000 {
                return Err(self.fail("exponent at most 1000"));
            }
            return Ok((ring.pow(&base, e as u32), false));
        }
        Ok((base, is_int))
    }

    fn atom(&mut self, ring: &PolyRing) -> Result<(Polynomial, bool)> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.bump();
                let c = (*n % ring.characteristic() as u64) as i64;
                Ok((ring.constant(c), true))
            }
            Tok::Ident(name) => match ring.var_index(name) {
                Some(i) => {
                    self.bump();
                    Ok((ring.monomial(Monomial::var(i), 1), false))
                }
                None => Err(Error::Parse {
                    line: t.line,
                    column: t.column,
                    message: format!("unknown variable `{name}`"),
                }),
            },
            Tok::Sym('(') => {
                self.bump();
                let p = self.poly(ring)?;
                self.expect_sym(')')?;
                Ok((p, false))
            }
            _ => Err(self.error_at(&t, "polynomial term")),
        }
    }
}

impl PolyRing {
    /// Parse a polynomial in the ASCII syntax, e.g. `3*x^2*y - z + 1`.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let toks = tokenize(src)?;
        let mut cur = Cursor::new(&toks);
        let p = cur.poly(self)?;
        if cur.peek().tok != Tok::Eof {
            return Err(cur.fail("end of polynomial"));
        }
        Ok(p)
    }
}
