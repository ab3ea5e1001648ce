//! Recursive-descent parser for the presentation DSL.
//!
//! ```text
//! file      := group+
//! group     := "group" IDENT "{" "generators:" identlist ";" "relators:" wordlist? ";" "}"
//! identlist := IDENT ("," IDENT)*
//! wordlist  := word ("," word)*
//! word      := factor+
//! factor    := IDENT ("^" INT)? | "[" word "," word "]" ("^" INT)? | "(" word ")" ("^" INT)?
//! INT       := "-"? [0-9]+
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of
//! the line. Commutators are `[a, b] = a^-1 b^-1 a b`; nested brackets are
//! written explicitly, e.g. `[x, [x, y]]`.

use std::fmt;

use thiserror::Error;

use super::word::{Word, WordError};
use super::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("integer literal out of range")]
    IntOverflow,
    #[error("undeclared generator {0}")]
    UndeclaredGenerator(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("expanded word exceeds the length limit")]
    WordTooLong,
    #[error("expected exactly one group, found {0}")]
    GroupCount(usize),
    #[error("brackets nested deeper than {MAX_DEPTH}")]
    TooDeep,
}

/// Nesting limit for brackets and parentheses.
pub const MAX_DEPTH: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Int(i) => write!(f, "integer {i}"),
            Tok::Punct(c) => write!(f, "{c:?}"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            col += i - start;
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let text: String = chars[start..i].iter().collect();
            let value = text.parse::<i64>().map_err(|_| ParseError {
                line: l0,
                col: c0,
                kind: ParseErrorKind::IntOverflow,
            })?;
            out.push(Spanned {
                tok: Tok::Int(value),
                line: l0,
                col: c0,
            });
            continue;
        }
        if "{}[](),;:^".contains(c) {
            i += 1;
            col += 1;
            out.push(Spanned {
                tok: Tok::Punct(c),
                line: l0,
                col: c0,
            });
            continue;
        }
        return Err(ParseError {
            line: l0,
            col: c0,
            kind: ParseErrorKind::UnexpectedChar(c),
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// Abstract syntax of a word, before desugaring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordExpr(pub Vec<Factor>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Gen { name: String, exp: Option<i64> },
    Comm { left: WordExpr, right: WordExpr, exp: Option<i64> },
    Paren { inner: WordExpr, exp: Option<i64> },
}

/// Abstract syntax of one `group { ... }` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecl {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<WordExpr>,
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, exp: Option<i64>) -> fmt::Result {
    match exp {
        Some(e) => write!(f, "^{e}"),
        None => Ok(()),
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match factor {
                Factor::Gen { name, exp } => {
                    write!(f, "{name}")?;
                    fmt_exp(f, *exp)?;
                }
                Factor::Comm { left, right, exp } => {
                    write!(f, "[{left}, {right}]")?;
                    fmt_exp(f, *exp)?;
                }
                Factor::Paren { inner, exp } => {
                    write!(f, "({inner})")?;
                    fmt_exp(f, *exp)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} {{", self.name)?;
        writeln!(f, "  generators: {};", self.generators.join(", "))?;
        write!(f, "  relators:")?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(f, "{}{r}", if i == 0 { " " } else { ", " })?;
        }
        writeln!(f, ";")?;
        writeln!(f, "}}")
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            kind: ParseErrorKind::Unexpected {
                expected: expected.to_string(),
                found: t.tok.to_string(),
            },
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Punct(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(&format!("{c:?}")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error_here(&format!("\"{kw}\""))),
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, t.line, t.col))
            }
            _ => Err(self.error_here("identifier")),
        }
    }

    fn opt_exp(&mut self) -> Result<Option<i64>, ParseError> {
        if self.peek().tok != Tok::Punct('^') {
            return Ok(None);
        }
        self.bump();
        match self.peek().tok {
            Tok::Int(v) => {
                self.bump();
                Ok(Some(v))
            }
            _ => Err(self.error_here("integer exponent")),
        }
    }

    fn group(&mut self) -> Result<GroupDecl, ParseError> {
        self.expect_keyword("group")?;
        let (name, _, _) = self.ident()?;
        self.expect_punct('{')?;
        self.expect_keyword("generators")?;
        self.expect_punct(':')?;
        if self.peek().tok == Tok::Punct(';') {
            let t = self.peek();
            return Err(ParseError {
                line: t.line,
                col: t.col,
                kind: ParseErrorKind::EmptyGenerators,
            });
        }
        let mut generators: Vec<String> = Vec::new();
        loop {
            let (g, line, col) = self.ident()?;
            if generators.contains(&g) {
                return Err(ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::DuplicateGenerator(g),
                });
            }
            generators.push(g);
            if self.peek().tok == Tok::Punct(',') {
                self.bump();
            } else {
                break;
            }
        }
        self.expect_punct(';')?;
        self.expect_keyword("relators")?;
        self.expect_punct(':')?;
        let mut relators = Vec::new();
        if self.peek().tok != Tok::Punct(';') {
            loop {
                relators.push(self.word(&generators)?);
                if self.peek().tok == Tok::Punct(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(';')?;
        self.expect_punct('}')?;
        Ok(GroupDecl {
            name,
            generators,
            relators,
        })
    }

    fn word(&mut self, gens: &[String]) -> Result<WordExpr, ParseError> {
        if self.depth >= MAX_DEPTH {
            let t = self.peek();
            return Err(ParseError {
                line: t.line,
                col: t.col,
                kind: ParseErrorKind::TooDeep,
            });
        }
        self.depth += 1;
        let out = self.word_inner(gens);
        self.depth -= 1;
        out
    }

    fn word_inner(&mut self, gens: &[String]) -> Result<WordExpr, ParseError> {
        let mut factors = vec![self.factor(gens)?];
        while matches!(self.peek().tok, Tok::Ident(_) | Tok::Punct('[') | Tok::Punct('(')) {
            factors.push(self.factor(gens)?);
        }
        Ok(WordExpr(factors))
    }

    fn factor(&mut self, gens: &[String]) -> Result<Factor, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                if !gens.contains(&name) {
                    return Err(ParseError {
                        line: t.line,
                        col: t.col,
                        kind: ParseErrorKind::UndeclaredGenerator(name),
                    });
                }
                self.bump();
                let exp = self.opt_exp()?;
                Ok(Factor::Gen { name, exp })
            }
            Tok::Punct('[') => {
                self.bump();
                let left = self.word(gens)?;
                self.expect_punct(',')?;
                let right = self.word(gens)?;
                self.expect_punct(']')?;
                let exp = self.opt_exp()?;
                Ok(Factor::Comm { left, right, exp })
            }
            Tok::Punct('(') => {
                self.bump();
                let inner = self.word(gens)?;
                self.expect_punct(')')?;
                let exp = self.opt_exp()?;
                Ok(Factor::Paren { inner, exp })
            }
            _ => Err(self.error_here("generator, '[' or '('")),
        }
    }
}

/// Parse a file into its abstract syntax.
pub fn parse_decls(text: &str) -> Result<Vec<GroupDecl>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        depth: 0,
    };
    let mut out = vec![p.group()?];
    while p.peek().tok != Tok::Eof {
        out.push(p.group()?);
    }
    Ok(out)
}

fn word_err(e: WordError) -> ParseErrorKind {
    match e {
        WordError::TooLong => ParseErrorKind::WordTooLong,
        WordError::ExponentOverflow => ParseErrorKind::IntOverflow,
    }
}

fn desugar(expr: &WordExpr, gens: &[String]) -> Result<Word, WordError> {
    let mut acc = Word::identity();
    for factor in &expr.0 {
        let w = match factor {
            Factor::Gen { name, exp } => {
                let idx = gens.iter().position(|g| g == name).expect("checked by parser");
                Word::power_of(idx, exp.unwrap_or(1))
            }
            Factor::Comm { left, right, exp } => {
                let c = Word::commutator(&desugar(left, gens)?, &desugar(right, gens)?)?;
                c.pow(exp.unwrap_or(1))?
            }
            Factor::Paren { inner, exp } => desugar(inner, gens)?.pow(exp.unwrap_or(1))?,
        };
        acc = acc.mul(&w)?;
    }
    Ok(acc)
}

impl GroupDecl {
    pub fn to_presentation(&self) -> Result<Presentation, ParseError> {
        let relators = self
            .relators
            .iter()
            .map(|r| desugar(r, &self.generators))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ParseError {
                line: 0,
                col: 0,
                kind: word_err(e),
            })?;
        Ok(Presentation {
            name: self.name.clone(),
            generator_names: self.generators.clone(),
            relators,
        })
    }
}

/// Parse every group in a file.
pub fn parse_file(text: &str) -> Result<Vec<Presentation>, ParseError> {
    parse_decls(text)?
        .iter()
        .map(GroupDecl::to_presentation)
        .collect()
}

/// Parse a text holding exactly one group.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut all = parse_file(text)?;
    if all.len() != 1 {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::GroupCount(all.len()),
        });
    }
    Ok(all.remove(0))
}
