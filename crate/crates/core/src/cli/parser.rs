use super::ast::*;
use crate::error::{Error, Result};
use crate::syntax::{tokenize, Cursor, Tok, Token};

/// Parse a session file.
pub fn parse_session(src: &str) -> Result<Session> {
    let toks = tokenize(src)?;
    let mut p = Parser { cur: Cursor::new(&toks) };
    let mut items = Vec::new();
    while p.cur.peek().tok != Tok::Eof {
        items.push(p.item()?);
    }
    Ok(Session { items })
}

struct Parser<'a> {
    cur: Cursor<'a>,
}

fn pos(t: &Token) -> Pos {
    Pos {
        line: t.line,
        column: t.column,
    }
}

impl Parser<'_> {
    fn item(&mut self) -> Result<Item> {
        if self.cur.is_kw("ring") {
            Ok(Item::Ring(self.ring()?))
        } else if self.cur.is_kw("module") {
            Ok(Item::Module(self.module()?))
        } else if self.cur.is_kw("run") {
            Ok(Item::Run(self.run()?))
        } else {
            Err(self.cur.fail("`ring`, `module` or `run`"))
        }
    }

    fn ring(&mut self) -> Result<RingDecl> {
        let at = pos(self.cur.bump());
        let name = if self.cur.is_sym('{') { None } else { Some(self.cur.ident()?) };
        self.cur.expect_sym('{')?;
        let (mut characteristic, mut vars, mut order, mut ideal) = (None, None, None, None);
        while !self.cur.is_sym('}') {
            let t = self.cur.peek().clone();
            let key = self.cur.ident()?;
            let dup = |seen: bool| {
                if seen {
                    Err(Error::Parse {
                        line: t.line,
                        column: t.column,
                        message: format!("duplicate `{key}`"),
                    })
                } else {
                    Ok(())
                }
            };
            match key.as_str() {
                "char" => {
                    dup(characteristic.is_some())?;
                    characteristic = Some(self.cur.int()?);
                    self.cur.expect_sym(';')?;
                }
                "vars" => {
                    dup(vars.is_some())?;
                    let mut vs = Vec::new();
                    while !self.cur.is_sym(';') {
                        let name = self.cur.ident()?;
                        let weight = if self.cur.is_sym(':') {
                            self.cur.bump();
                            Some(u32::try_from(self.cur.int()?).map_err(|_| self.cur.fail("small weight"))?)
                        } else {
                            None
                        };
                        vs.push(VarDecl { name, weight });
                    }
                    self.cur.bump();
                    vars = Some(vs);
                }
                "order" => {
                    dup(order.is_some())?;
                    order = Some(self.cur.ident()?);
                    self.cur.expect_sym(';')?;
                }
                "ideal" => {
                    dup(ideal.is_some())?;
                    self.cur.expect_sym('{')?;
                    let mut gens = Vec::new();
                    while !self.cur.is_sym('}') {
                        gens.push(self.text_until(&[';'])?);
                        self.cur.expect_sym(';')?;
                    }
                    self.cur.bump();
                    ideal = Some(gens);
                }
                _ => {
                    return Err(Error::Parse {
                        line: t.line,
                        column: t.column,
                        message: format!("expected `char`, `vars`, `order`, `ideal` or `}}`, found identifier `{key}`"),
                    })
                }
            }
        }
        let close = self.cur.bump().clone();
        let missing = |what: &str| Error::Parse {
            line: close.line,
            column: close.column,
            message: format!("ring block is missing `{what}`"),
        };
        Ok(RingDecl {
            name,
            characteristic: characteristic.ok_or_else(|| missing("char"))?,
            vars: vars.ok_or_else(|| missing("vars"))?,
            order,
            ideal: ideal.unwrap_or_default(),
            pos: at,
        })
    }

    fn module(&mut self) -> Result<ModuleDecl> {
        let at = pos(self.cur.bump());
        let name = self.cur.ident()?;
        self.cur.expect_kw("over")?;
        let ring = self.cur.ident()?;
        let body = if self.cur.is_sym('=') {
            self.cur.bump();
            let func = self.cur.ident()?;
            let args = self.args('(', ')')?;
            self.cur.expect_sym(';')?;
            ModuleBody::Call { func, args }
        } else {
            self.cur.expect_sym('{')?;
            self.cur.expect_kw("gens")?;
            let mut gens = Vec::new();
            while !self.cur.is_sym(';') {
                gens.push(self.cur.signed_int().map_err(|_| self.cur.fail("generator degree or `;`"))?);
            }
            self.cur.bump();
            let mut rels = Vec::new();
            if self.cur.is_kw("rels") {
                self.cur.bump();
                self.cur.expect_sym('{')?;
                while !self.cur.is_sym('}') {
                    rels.push(self.args('[', ']')?);
                    self.cur.expect_sym(';')?;
                }
                self.cur.bump();
            }
            self.cur.expect_sym('}')?;
            ModuleBody::Explicit { gens, rels }
        };
        Ok(ModuleDecl { name, ring, body, pos: at })
    }

    fn run(&mut self) -> Result<RunDecl> {
        let at = pos(self.cur.bump());
        let mut command = self.cur.ident()?;
        // Hyphenated names such as `verify-ab`: the pieces must touch.
        while self.cur.is_sym('-') && self.cur.peek().start == self.cur.toks[self.cur.pos - 1].end {
            self.cur.bump();
            let next = self.cur.peek().clone();
            if next.start != self.cur.toks[self.cur.pos - 1].end {
                return Err(self.cur.fail("command name"));
            }
            command.push('-');
            command.push_str(&self.cur.ident()?);
        }
        let args = self.args('(', ')')?;
        let (mut config, mut expects) = (Vec::new(), Vec::new());
        if self.cur.is_sym('{') {
            self.cur.bump();
            while !self.cur.is_sym('}') {
                if self.cur.is_kw("expect") {
                    self.cur.bump();
                    expects.push(self.expect()?);
                } else {
                    let key = self.cur.ident()?;
                    let value = self.value()?;
                    self.cur.expect_sym(';')?;
                    config.push(Setting { key, value });
                }
            }
            self.cur.bump();
        } else {
            self.cur.expect_sym(';')?;
        }
        Ok(RunDecl {
            command,
            args,
            config,
            expects,
            pos: at,
        })
    }

    fn expect(&mut self) -> Result<Expect> {
        let mut key = self.key_segment()?;
        while self.cur.is_sym('.') {
            self.cur.bump();
            key.push('.');
            key.push_str(&self.key_segment()?);
        }
        self.cur.expect_sym('=')?;
        let value = self.value()?;
        let provenance = if self.cur.is_kw("trivial") {
            Some(Provenance::Trivial)
        } else if self.cur.is_kw("derived") {
            Some(Provenance::Derived)
        } else if self.cur.is_kw("paper") {
            Some(Provenance::Paper)
        } else {
            None
        };
        let mut note = None;
        if provenance.is_some() {
            self.cur.bump();
            if let Tok::Str(s) = &self.cur.peek().tok {
                note = Some(s.clone());
                self.cur.bump();
            }
        }
        if !self.cur.is_sym(';') {
            return Err(self.cur.fail(if provenance.is_some() {
                "note string or `;`"
            } else {
                "`trivial`, `derived`, `paper` or `;`"
            }));
        }
        self.cur.bump();
        Ok(Expect {
            key,
            value,
            provenance,
            note,
        })
    }

    fn key_segment(&mut self) -> Result<String> {
        match &self.cur.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.cur.bump();
                Ok(s)
            }
            Tok::Int(n) => {
                let s = n.to_string();
                self.cur.bump();
                Ok(s)
            }
            _ => Err(self.cur.fail("report key")),
        }
    }

    fn value(&mut self) -> Result<Value> {
        match self.cur.peek().tok.clone() {
            Tok::Int(_) => Ok(Value::Int(self.cur.signed_int()?)),
            Tok::Sym('-') if matches!(self.cur.peek_at(1).tok, Tok::Int(_)) => Ok(Value::Int(self.cur.signed_int()?)),
            Tok::Str(s) => {
                self.cur.bump();
                Ok(Value::Str(s))
            }
            Tok::Ident(s) => {
                self.cur.bump();
                Ok(match s.as_str() {
                    "true" => Value::Bool(true),
                    "false" => Value::Bool(false),
                    _ => Value::Ident(s),
                })
            }
            Tok::Sym('[') => {
                self.cur.bump();
                let mut items = Vec::new();
                while !self.cur.is_sym(']') {
                    items.push(self.value()?);
                    if self.cur.is_sym(',') {
                        self.cur.bump();
                    } else if !self.cur.is_sym(']') {
                        return Err(self.cur.fail("`,` or `]`"));
                    }
                }
                self.cur.bump();
                Ok(Value::List(items))
            }
            _ => Err(self.cur.fail("value")),
        }
    }

    /// Comma-separated arguments between `open` and `close`, each kept as
    /// canonical token text.
    fn args(&mut self, open: char, close: char) -> Result<Vec<String>> {
        self.cur.expect_sym(open)?;
        let mut out = Vec::new();
        if self.cur.is_sym(close) {
            self.cur.bump();
            return Ok(out);
        }
        loop {
            out.push(self.text_until(&[',', close])?);
            if self.cur.is_sym(',') {
                self.cur.bump();
            } else if self.cur.is_sym(close) {
                self.cur.bump();
                return Ok(out);
            } else {
                return Err(self.cur.fail(&format!("`,` or `{close}`")));
            }
        }
    }

    /// Collect a balanced token run up to one of `stops` at depth zero.
    fn text_until(&mut self, stops: &[char]) -> Result<String> {
        let mut stack: Vec<char> = Vec::new();
        let start = self.cur.pos;
        loop {
            let t = self.cur.peek().clone();
            match t.tok {
                Tok::Sym(c) if stack.is_empty() && stops.contains(&c) => break,
                Tok::Sym(c @ ('(' | '[')) => stack.push(if c == '(' { ')' } else { ']' }),
                Tok::Sym(c @ (')' | ']')) => {
                    if stack.pop() != Some(c) {
                        let want: Vec<String> = stops.iter().map(|s| format!("`{s}`")).collect();
                        return Err(self.cur.fail(&want.join(" or ")));
                    }
                }
                Tok::Sym(';' | '{' | '}') | Tok::Eof => {
                    let want: Vec<String> = match stack.last() {
                        Some(c) => vec![format!("`{c}`")],
                        None => stops.iter().map(|s| format!("`{s}`")).collect(),
                    };
                    return Err(self.cur.fail(&want.join(" or ")));
                }
                _ => {}
            }
            self.cur.bump();
        }
        if self.cur.pos == start {
            return Err(self.cur.fail("expression"));
        }
        Ok(render(&self.cur.toks[start..self.cur.pos]))
    }
}

/// Canonical text of a token run: binary `+`/`-` spaced, `, ` after commas,
/// `*` made explicit after numeric coefficients.
pub fn render(toks: &[Token]) -> String {
    let mut s = String::new();
    let mut prev: Option<&Tok> = None;
    for t in toks {
        let unary = matches!(
            prev,
            None | Some(Tok::Sym('(' | '[' | ',' | '^' | '*' | '+' | '-' | '/' | '='))
        );
        match &t.tok {
            Tok::Sym(c @ ('+' | '-')) if !unary => {
                s.push(' ');
                s.push(*c);
                s.push(' ');
            }
            Tok::Sym(',') => s.push_str(", "),
            Tok::Sym(c) => s.push(*c),
            Tok::Ident(x) => {
                match prev {
                    Some(Tok::Int(_)) => s.push('*'),
                    Some(Tok::Ident(_)) => s.push(' '),
                    _ => {}
                }
                s.push_str(x);
            }
            Tok::Int(n) => {
                if matches!(prev, Some(Tok::Int(_) | Tok::Ident(_))) {
                    s.push(' ');
                }
                s.push_str(&n.to_string());
            }
            Tok::Str(x) => s.push_str(&format!("{x:?}")),
            Tok::Eof => {}
        }
        prev = Some(&t.tok);
    }
    s
}
