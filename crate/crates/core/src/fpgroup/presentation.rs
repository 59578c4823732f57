use std::fmt;

use crate::error::{Error, Result};

use super::FreeWord;

/// A finitely presented group `< generators | relators >`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    /// Relators are freely reduced; every letter must name a declared
    /// generator.
    pub fn new(generator_names: Vec<String>, relators: Vec<FreeWord>) -> Result<Presentation> {
        for (i, name) in generator_names.iter().enumerate() {
            if !is_name(name) {
                return Err(Error::Parse(format!("invalid generator name {name:?}")));
            }
            if generator_names[..i].contains(name) {
                return Err(Error::Parse(format!("duplicate generator {name:?}")));
            }
        }
        let n = generator_names.len();
        for r in &relators {
            if let Some(&l) = r.letters().iter().find(|l| l.unsigned_abs() as usize > n) {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    generators: n,
                });
            }
        }
        let relators = relators
            .iter()
            .map(FreeWord::reduce)
            .filter(|r| !r.is_empty())
            .collect();
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    /// Parses `x, y | x^2, y^3, (x*y)^7`, optionally wrapped in `< >`.
    ///
    /// Words use `*` for products, `^n` for powers, `^w` for conjugation,
    /// `(a,b)` for the commutator `a^-1 b^-1 a b`, `1` for the empty word
    /// and `u = v` for the relator `u v^-1`.
    pub fn parse(text: &str) -> Result<Presentation> {
        let t = text.trim();
        let t = match t.strip_prefix('<') {
            Some(rest) => rest
                .strip_suffix('>')
                .ok_or_else(|| Error::Parse("missing '>'".into()))?,
            None => t,
        };
        let (gens, rels) = match t.split_once('|') {
            Some((g, r)) => (g, r),
            None => (t, ""),
        };
        let names: Vec<String> = gens
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let mut p = Presentation::new(names, Vec::new())?;
        let relators = p.parse_words(rels)?;
        p.relators = relators
            .iter()
            .map(FreeWord::reduce)
            .filter(|r| !r.is_empty())
            .collect();
        Ok(p)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names
            .iter()
            .position(|n| n == name)
            .map(|i| i + 1)
    }

    /// Parses one word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        let mut parser = Parser::new(text, &self.generator_names)?;
        let w = parser.relator()?;
        parser.expect_end()?;
        Ok(w)
    }

    /// Parses a comma-separated list of words; commas inside commutator
    /// brackets do not split.
    pub fn parse_words(&self, text: &str) -> Result<Vec<FreeWord>> {
        let mut parser = Parser::new(text, &self.generator_names)?;
        let mut out = Vec::new();
        if parser.at_end() {
            return Ok(out);
        }
        loop {
            out.push(parser.relator()?);
            if parser.at_end() {
                break;
            }
            parser.expect(&Tok::Comma)?;
        }
        Ok(out)
    }

    /// Adds relators, reducing them and dropping empty ones.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = FreeWord>) -> Result<Presentation> {
        let mut rels = self.relators.clone();
        rels.extend(extra);
        Presentation::new(self.generator_names.clone(), rels)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display_with(&self.generator_names))
            .collect();
        write!(
            f,
            "< {} | {} >",
            self.generator_names.join(", "),
            rels.join(", ")
        )
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(i64),
    Star,
    Caret,
    Minus,
    LParen,
    RParen,
    Comma,
    Eq,
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: &'a [String]) -> Result<Parser<'a>> {
        let mut toks = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                c if c.is_whitespace() => i += 1,
                '*' => push(&mut toks, &mut i, Tok::Star),
                '^' => push(&mut toks, &mut i, Tok::Caret),
                '-' => push(&mut toks, &mut i, Tok::Minus),
                '(' => push(&mut toks, &mut i, Tok::LParen),
                ')' => push(&mut toks, &mut i, Tok::RParen),
                ',' => push(&mut toks, &mut i, Tok::Comma),
                '=' => push(&mut toks, &mut i, Tok::Eq),
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    let v = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer {s}")))?;
                    toks.push(Tok::Int(v));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len()
                        && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                    {
                        i += 1;
                    }
                    toks.push(Tok::Name(chars[start..i].iter().collect()));
                }
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            }
        }
        Ok(Parser {
            toks,
            pos: 0,
            names,
        })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        match self.peek() {
            Some(x) if x == t => {
                self.pos += 1;
                Ok(())
            }
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("unexpected trailing {t:?}"))),
        }
    }

    fn relator(&mut self) -> Result<FreeWord> {
        let lhs = self.product()?;
        if self.peek() == Some(&Tok::Eq) {
            self.pos += 1;
            let rhs = self.product()?;
            return Ok((&lhs * &rhs.inverse()).reduce());
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<FreeWord> {
        let mut w = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let next = self.power()?;
            w = &w * &next;
        }
        Ok(w.reduce())
    }

    fn power(&mut self) -> Result<FreeWord> {
        let mut w = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Minus) => {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(n)) => {
                            self.pos += 1;
                            w = w.pow(-n);
                        }
                        other => {
                            return Err(Error::Parse(format!("expected exponent, found {other:?}")))
                        }
                    }
                }
                Some(Tok::Int(n)) => {
                    let n = *n;
                    self.pos += 1;
                    w = w.pow(n);
                }
                _ => {
                    let by = self.atom()?;
                    w = w.conj(&by);
                }
            }
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<FreeWord> {
        match self.peek().cloned() {
            Some(Tok::Name(name)) => {
                self.pos += 1;
                let k = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
                Ok(FreeWord::generator(k + 1))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(FreeWord::empty())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let a = self.product()?;
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    let mut c = a;
                    // (a,b,c) = ((a,b),c)
                    loop {
                        let b = self.product()?;
                        c = FreeWord::commutator(&c, &b);
                        if self.peek() == Some(&Tok::Comma) {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    self.expect(&Tok::RParen)?;
                    Ok(c)
                } else {
                    self.expect(&Tok::RParen)?;
                    Ok(a)
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn push(toks: &mut Vec<Tok>, i: &mut usize, t: Tok) {
    toks.push(t);
    *i += 1;
}
