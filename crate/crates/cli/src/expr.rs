//! Species expressions: AST, parser and canonical printer.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary "'"*
//! primary := atom ('(' expr ')')*
//! atom    := NAME | INTEGER | '(' expr ')' | FUNC '(' expr ')'
//! ```
//!
//! `F(G)` is composition and may follow any atom, so `(E+)(X)` and
//! `E(E+)(X)` parse. `E+` is a single name unless the `+` is followed by
//! something that can start a term, in which case it is addition.

use std::fmt;

use thiserror::Error;

/// Names the evaluator resolves against the catalog.
pub const SPECIES_NAMES: [&str; 24] = [
    "X", "E", "E+", "E2", "L", "S", "C", "Part", "G", "Gc", "P", "Mc", "Omega", "A", "a", "Ainv",
    "End", "Sub", "BC", "CBC", "CBP", "BP", "PBP", "CPBP",
];

/// One-argument functions: compositional inverse, `Ω ∘ arg`, pointing.
pub const FUNCTIONS: [&str; 3] = ["inv", "log", "point"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    /// `k` times the empty-set species.
    Int(u64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Compose(Box<Expr>, Box<Expr>),
    Derivative(Box<Expr>),
    Point(Box<Expr>),
    Inverse(Box<Expr>),
    Log(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(u64),
    Plus,
    Minus,
    Star,
    Quote,
    Open,
    Close,
}

fn starts_term(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'('
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b if b.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'\'' => Tok::Quote,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b if b.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value = digits
                    .parse()
                    .or_else(|_| err(start, format!("integer {digits} is too large")))?;
                out.push((start, Tok::Int(value)));
                continue;
            }
            b if b.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let mut name = text[start..i].to_string();
                if name == "E" && bytes.get(i) == Some(&b'+') {
                    let next = bytes[i + 1..].iter().find(|c| !c.is_ascii_whitespace());
                    if !next.is_some_and(|&c| starts_term(c)) {
                        name.push('+');
                        i += 1;
                    }
                }
                out.push((start, Tok::Name(name)));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return err(start, format!("unexpected character {ch:?}"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        if self.eat(&Tok::Close) {
            Ok(())
        } else {
            err(self.offset(), "expected ')'")
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.primary()?;
        while self.eat(&Tok::Quote) {
            e = Expr::Derivative(Box::new(e));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        while self.eat(&Tok::Open) {
            let arg = self.expr()?;
            self.expect_close()?;
            e = Expr::Compose(Box::new(e), Box::new(arg));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return err(at, "unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Int(k) => Ok(Expr::Int(k)),
            Tok::Open => {
                let e = self.expr()?;
                self.expect_close()?;
                Ok(e)
            }
            Tok::Name(name) if FUNCTIONS.contains(&name.as_str()) => {
                if !self.eat(&Tok::Open) {
                    return err(at, format!("{name} takes one argument in parentheses"));
                }
                let arg = Box::new(self.expr()?);
                self.expect_close()?;
                Ok(match name.as_str() {
                    "inv" => Expr::Inverse(arg),
                    "log" => Expr::Log(arg),
                    _ => Expr::Point(arg),
                })
            }
            Tok::Name(name) if SPECIES_NAMES.contains(&name.as_str()) => Ok(Expr::Atom(name)),
            Tok::Name(name) => err(at, format!("unknown species {name:?}")),
            other => err(at, format!("unexpected {}", describe(&other))),
        }
    }
}

fn describe(tok: &Tok) -> &'static str {
    match tok {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Quote => "\"'\"",
        Tok::Close => "')'",
        Tok::Open => "'('",
        Tok::Name(_) | Tok::Int(_) => "operand",
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return err(p.offset(), "unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Derivative(_) => 2,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Atom(name) => f.write_str(name),
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                b.write_at(f, 1)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 1)?;
                f.write_str("*")?;
                b.write_at(f, 2)
            }
            Expr::Derivative(a) => {
                a.write_at(f, 2)?;
                f.write_str("'")
            }
            Expr::Compose(outer, inner) => {
                if matches!(&**outer, Expr::Atom(n) if n == "E+") {
                    f.write_str("(E+)")?;
                } else {
                    outer.write_at(f, 3)?;
                }
                f.write_str("(")?;
                inner.write_at(f, 0)?;
                f.write_str(")")
            }
            Expr::Point(a) | Expr::Inverse(a) | Expr::Log(a) => {
                let name = match self {
                    Expr::Point(_) => "point",
                    Expr::Inverse(_) => "inv",
                    _ => "log",
                };
                write!(f, "{name}(")?;
                a.write_at(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

/// Canonical text with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
