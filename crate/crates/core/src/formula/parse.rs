//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "N" unary | "~N" unary | blame | atom
//! blame   := "B" "[" "{" (agent ("," agent)*)? "}" ";" degree "]" unary
//! atom    := ident | "(" formula ")"
//! degree  := decimal | integer "/" integer
//! ```
//!
//! In operator position an uppercase `N` is always the modality and an
//! uppercase `B` always opens a blame operator, so `NB[{}; 0] p` and `Np`
//! read as modal formulas. Proposition names therefore never start with
//! `N` or `B`; agent names (inside braces) may.

use std::fmt;

use thiserror::Error;

use super::{is_ident, AgentId, Coalition, Formula};
use crate::degree::{Degree, DegreeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected,
    NegativeDegree,
    BadDegree(String),
    MalformedCoalition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Unexpected => {
                write!(f, "expected ")?;
                if self.expected.len() > 1 {
                    write!(f, "one of ")?;
                }
                for (i, e) in self.expected.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "; found {}", self.found)
            }
            ParseErrorKind::NegativeDegree => {
                write!(f, "negative degree {} (degrees must be >= 0)", self.found)
            }
            ParseErrorKind::BadDegree(why) => write!(f, "bad degree {}: {why}", self.found),
            ParseErrorKind::MalformedCoalition(why) => write!(f, "malformed coalition: {why}"),
        }
    }
}

const UNARY_START: &[&str] = &["`!`", "`N`", "`~N`", "`B[`", "`(`", "proposition"];

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek_at(&self, off: usize) -> Option<char> {
        self.chars.get(self.pos + off).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let byte = self.chars.get(pos).map_or(self.src.len(), |&(b, _)| b);
        let before = &self.src[..byte];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn found_here(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let tok: String = self.chars[self.pos..]
                    .iter()
                    .map(|&(_, c)| c)
                    .take_while(|c| !c.is_whitespace())
                    .take(12)
                    .collect();
                format!("`{tok}`")
            }
        }
    }

    fn error_at(&self, pos: usize, kind: ParseErrorKind, expected: &[&'static str], found: String) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError {
            line,
            column,
            kind,
            expected: expected.to_vec(),
            found,
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        self.error_at(self.pos, ParseErrorKind::Unexpected, expected, self.found_here())
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        let n = tok.chars().count();
        let matches = tok.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c));
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, tok: &str, label: &'static str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&[label]))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn formula(&mut self) -> PResult<Formula> {
        let left = self.or()?;
        if self.eat("->") {
            let right = self.formula()?;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut acc = self.and()?;
        while self.eat("|") {
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut acc = self.unary()?;
        while self.eat("&") {
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Formula> {
        self.skip_ws();
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some('~') => {
                if self.peek_at(1) == Some('N') {
                    self.pos += 2;
                    Ok(Formula::possible(self.unary()?))
                } else {
                    self.pos += 1;
                    Err(self.unexpected(&["`N` after `~`"]))
                }
            }
            Some('N') => {
                self.pos += 1;
                Ok(Formula::nec(self.unary()?))
            }
            Some('B') => self.blame(),
            Some('(') => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(")", "`)`")?;
                Ok(f)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().expect("identifier start checked");
                Ok(Formula::Var(name))
            }
            _ => Err(self.unexpected(UNARY_START)),
        }
    }

    fn blame(&mut self) -> PResult<Formula> {
        self.pos += 1; // `B`
        self.expect("[", "`[`")?;
        let coalition = self.coalition()?;
        self.expect(";", "`;`")?;
        let degree = self.degree()?;
        self.expect("]", "`]`")?;
        let body = self.unary()?;
        Ok(Formula::blame(coalition, degree, body))
    }

    fn coalition(&mut self) -> PResult<Coalition> {
        let open = {
            self.skip_ws();
            self.pos
        };
        self.expect("{", "`{`")?;
        let mut members: Vec<AgentId> = Vec::new();
        if self.eat("}") {
            return Ok(Coalition::empty());
        }
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let name = self.ident().ok_or_else(|| self.unexpected(&["agent name", "`}`"]))?;
            debug_assert!(is_ident(&name));
            let agent = AgentId::new(name.clone()).expect("lexed identifier is valid");
            if members.contains(&agent) {
                return Err(self.error_at(
                    at,
                    ParseErrorKind::MalformedCoalition(format!("duplicate agent `{name}`")),
                    &[],
                    format!("`{name}`"),
                ));
            }
            members.push(agent);
            if self.eat(",") {
                continue;
            }
            if self.eat("}") {
                break;
            }
            let err = self.unexpected(&["`,`", "`}`"]);
            return Err(ParseError {
                kind: ParseErrorKind::MalformedCoalition(format!(
                    "unterminated coalition opened at column {}",
                    self.location(open).1
                )),
                ..err
            });
        }
        Ok(Coalition::from_agents(members))
    }

    fn number_run(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.' || c == '-') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().map(|&(_, c)| c).collect()
    }

    fn degree(&mut self) -> PResult<Degree> {
        self.skip_ws();
        let start = self.pos;
        let mut text = self.number_run();
        if text.is_empty() {
            return Err(self.unexpected(&["degree"]));
        }
        if self.eat("/") {
            self.skip_ws();
            let denom = self.number_run();
            text = format!("{text}/{denom}");
        }
        Degree::parse(&text).map_err(|e| {
            let kind = match e {
                DegreeError::Negative(_) => ParseErrorKind::NegativeDegree,
                other => ParseErrorKind::BadDegree(other.to_string()),
            };
            self.error_at(start, kind, &["degree"], format!("`{text}`"))
        })
    }

    fn finish(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.peek().is_some() {
            Err(self.unexpected(&["`->`", "`|`", "`&`", "end of input"]))
        } else {
            Ok(())
        }
    }
}

/// Parses a formula in the ASCII syntax described in the module docs.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a stand-alone coalition literal such as `{a1,a2}` or `{}`.
pub fn parse_coalition(text: &str) -> Result<Coalition, ParseError> {
    let mut p = Parser::new(text);
    let c = p.coalition()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.unexpected(&["end of input"]));
    }
    Ok(c)
}
