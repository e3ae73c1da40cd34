//! Element expressions such as `1 + x - 2/3*x^2*y`.
//!
//! ```text
//! expr     := ["+"|"-"] term (("+"|"-") term)*
//! term     := rational ["*" monomial] | monomial
//! monomial := atom ("*" atom)*
//! atom     := generator ["^" ["+"|"-"] integer]
//! rational := integer ["/" positive-integer]
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors are 0-based
//! character offsets into the source text.

use std::fmt;
use std::sync::Arc;

use cayley_core::rational::format_rational;
use cayley_core::{AlgebraElement, FiniteGroup, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator {name:?} at position {position}")]
    UnknownGenerator { name: String, position: usize },
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

/// A generator raised to an integer power, remembering where it was written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub generator: String,
    pub exponent: i64,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Rational,
    /// Empty for a constant term.
    pub monomial: Vec<Atom>,
}

/// The parsed form of an element expression, before it is bound to a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementExpression {
    pub source: String,
    pub terms: Vec<Term>,
}

impl ElementExpression {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let tokens = lex(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            end: text.chars().count(),
        };
        let terms = parser.expr()?;
        Ok(ElementExpression {
            source: text.to_string(),
            terms,
        })
    }

    /// Evaluates the expression in `group`, collecting like terms.
    pub fn evaluate(&self, group: &Arc<FiniteGroup>) -> Result<AlgebraElement, ParseError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let mut g = group.identity();
            for atom in &term.monomial {
                let x = group
                    .generator(&atom.generator)
                    .ok_or_else(|| ParseError::UnknownGenerator {
                        name: atom.generator.clone(),
                        position: atom.position,
                    })?;
                g = group.mul(g, group.pow(x, atom.exponent));
            }
            terms.push((g, term.coefficient.clone()));
        }
        Ok(AlgebraElement::from_terms(group, terms))
    }
}

/// Prints the terms as written (no collection), in the grammar above.
impl fmt::Display for ElementExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let negative = term.coefficient.is_negative();
            let magnitude = term.coefficient.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let monomial = term
                .monomial
                .iter()
                .map(|a| match a.exponent {
                    1 => a.generator.clone(),
                    e => format!("{}^{e}", a.generator),
                })
                .collect::<Vec<_>>()
                .join("*");
            match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => f.write_str(&format_rational(&magnitude))?,
                (false, true) => f.write_str(&monomial)?,
                (false, false) => write!(f, "{}*{monomial}", format_rational(&magnitude))?,
            }
        }
        Ok(())
    }
}

/// Parses `text` and evaluates it in `group`.
pub fn parse_element(text: &str, group: &Arc<FiniteGroup>) -> Result<AlgebraElement, ParseError> {
    ElementExpression::parse(text)?.evaluate(group)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            _ if c.is_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            _ => return Err(syntax(start, format!("unexpected character {c:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => syntax(self.position(), format!("expected {wanted}, found {}", t.describe())),
            None => syntax(self.end, format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut negate = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            let mut term = self.term()?;
            if negate {
                term.coefficient = -term.coefficient;
            }
            terms.push(term);
            negate = match self.peek() {
                None => break,
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                Some(_) => return Err(self.unexpected("'+', '-' or end of input")),
            };
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let coefficient = self.rational()?;
                let monomial = if self.eat(&Tok::Star) {
                    self.monomial()?
                } else {
                    Vec::new()
                };
                Ok(Term {
                    coefficient,
                    monomial,
                })
            }
            Some(Tok::Ident(_)) => Ok(Term {
                coefficient: Rational::one(),
                monomial: self.monomial()?,
            }),
            _ => Err(self.unexpected("a number or a generator")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if !self.eat(&Tok::Slash) {
            return Ok(Rational::from_integer(num));
        }
        let at = self.position();
        let den = self.integer()?;
        if den.is_zero() {
            return Err(syntax(at, "denominator must be positive"));
        }
        Ok(Rational::new(num, den))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn monomial(&mut self) -> Result<Vec<Atom>, ParseError> {
        let mut atoms = vec![self.atom()?];
        while self.eat(&Tok::Star) {
            atoms.push(self.atom()?);
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let position = self.position();
        let generator = match self.peek() {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return Err(self.unexpected("a generator")),
        };
        self.pos += 1;
        let mut exponent = 1;
        if self.eat(&Tok::Caret) {
            let negative = if self.eat(&Tok::Minus) {
                true
            } else {
                self.eat(&Tok::Plus);
                false
            };
            let at = self.position();
            let magnitude = self.integer()?;
            let signed = if negative { -magnitude } else { magnitude };
            exponent = i64::try_from(signed).map_err(|_| syntax(at, "exponent out of range"))?;
        }
        Ok(Atom {
            generator,
            exponent,
            position,
        })
    }
}
