//! Boolean expression front-end.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! or   := xor ('|' xor)*
//! xor  := and ('^' and)*
//! and  := not ('&' not)*
//! not  := '~' not | atom
//! atom := name | '0' | '1' | '(' or ')'
//! ```
//!
//! Binary operators associate to the left. Whitespace is ignored.

use std::fmt;

use crate::error::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    Var(String),
    Const(bool),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
    Xor(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn var(name: &str) -> Self {
        Self::Var(name.to_string())
    }

    pub fn not(e: BoolExpr) -> Self {
        Self::Not(Box::new(e))
    }

    pub fn and(a: BoolExpr, b: BoolExpr) -> Self {
        Self::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: BoolExpr, b: BoolExpr) -> Self {
        Self::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: BoolExpr, b: BoolExpr) -> Self {
        Self::Xor(Box::new(a), Box::new(b))
    }

    /// Evaluates with `lookup` supplying variable values.
    pub fn eval_with(&self, lookup: &impl Fn(&str) -> bool) -> bool {
        match self {
            Self::Var(name) => lookup(name),
            Self::Const(v) => *v,
            Self::Not(e) => !e.eval_with(lookup),
            Self::And(a, b) => a.eval_with(lookup) && b.eval_with(lookup),
            Self::Or(a, b) => a.eval_with(lookup) || b.eval_with(lookup),
            Self::Xor(a, b) => a.eval_with(lookup) ^ b.eval_with(lookup),
        }
    }

    /// Replaces variable names by their position in `variables`.
    pub(crate) fn resolve(&self, variables: &[String]) -> Option<Resolved> {
        Some(match self {
            Self::Var(name) => Resolved::Var(variables.iter().position(|v| v == name)?),
            Self::Const(v) => Resolved::Const(*v),
            Self::Not(e) => Resolved::Not(Box::new(e.resolve(variables)?)),
            Self::And(a, b) => Resolved::And(Box::new(a.resolve(variables)?), Box::new(b.resolve(variables)?)),
            Self::Or(a, b) => Resolved::Or(Box::new(a.resolve(variables)?), Box::new(b.resolve(variables)?)),
            Self::Xor(a, b) => Resolved::Xor(Box::new(a.resolve(variables)?), Box::new(b.resolve(variables)?)),
        })
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Var(name) => f.write_str(name),
            Self::Const(v) => f.write_str(if *v { "1" } else { "0" }),
            Self::Not(e) => write!(f, "~{e}"),
            Self::And(a, b) => write!(f, "({a} & {b})"),
            Self::Or(a, b) => write!(f, "({a} | {b})"),
            Self::Xor(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

/// Expression with variables bound to operand positions.
#[derive(Debug, Clone)]
pub(crate) enum Resolved {
    Var(usize),
    Const(bool),
    Not(Box<Resolved>),
    And(Box<Resolved>, Box<Resolved>),
    Or(Box<Resolved>, Box<Resolved>),
    Xor(Box<Resolved>, Box<Resolved>),
}

impl Resolved {
    /// `bits[j]` is the value of variable `j`.
    pub(crate) fn eval(&self, bits: &[bool]) -> bool {
        match self {
            Self::Var(j) => bits[*j],
            Self::Const(v) => *v,
            Self::Not(e) => !e.eval(bits),
            Self::And(a, b) => a.eval(bits) && b.eval(bits),
            Self::Or(a, b) => a.eval(bits) || b.eval(bits),
            Self::Xor(a, b) => a.eval(bits) ^ b.eval(bits),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Const(bool),
    Not,
    And,
    Or,
    Xor,
    LParen,
    RParen,
}

impl Token {
    fn text(&self) -> String {
        match self {
            Token::Name(n) => n.clone(),
            Token::Const(v) => if *v { "1" } else { "0" }.into(),
            Token::Not => "~".into(),
            Token::And => "&".into(),
            Token::Or => "|".into(),
            Token::Xor => "^".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '^' => Token::Xor,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0' => Token::Const(false),
            '1' => Token::Const(true),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((start, Token::Name(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        tokens.push((i, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn error_here(&self) -> ParseError {
        match self.tokens.get(self.pos) {
            Some((at, tok)) => ParseError {
                position: *at,
                kind: ParseErrorKind::UnexpectedToken(tok.text()),
            },
            None => ParseError {
                position: self.end,
                kind: ParseErrorKind::UnexpectedEnd,
            },
        }
    }

    fn binary(
        &mut self,
        op: Token,
        next: fn(&mut Self) -> Result<BoolExpr, ParseError>,
        build: fn(BoolExpr, BoolExpr) -> BoolExpr,
    ) -> Result<BoolExpr, ParseError> {
        let mut lhs = next(self)?;
        while self.peek() == Some(&op) {
            self.pos += 1;
            let rhs = next(self)?;
            lhs = build(lhs, rhs);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<BoolExpr, ParseError> {
        self.binary(Token::Or, Self::xor, BoolExpr::or)
    }

    fn xor(&mut self) -> Result<BoolExpr, ParseError> {
        self.binary(Token::Xor, Self::and, BoolExpr::xor)
    }

    fn and(&mut self) -> Result<BoolExpr, ParseError> {
        self.binary(Token::And, Self::not, BoolExpr::and)
    }

    fn not(&mut self) -> Result<BoolExpr, ParseError> {
        if self.peek() == Some(&Token::Not) {
            self.pos += 1;
            return Ok(BoolExpr::not(self.not()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<BoolExpr, ParseError> {
        let Some((at, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error_here());
        };
        match tok {
            Token::Name(name) => {
                if !self.variables.contains(&name) {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::UnknownVariable(name),
                    });
                }
                self.pos += 1;
                Ok(BoolExpr::Var(name))
            }
            Token::Const(v) => {
                self.pos += 1;
                Ok(BoolExpr::Const(v))
            }
            Token::LParen => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error_here());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error_here()),
        }
    }
}

/// Parses `text` over the declared, ordered `variables`.
pub fn parse_expr(text: &str, variables: &[String]) -> Result<BoolExpr, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError {
            position: 0,
            kind: ParseErrorKind::EmptyInput,
        });
    }
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.chars().count(),
        variables,
    };
    let expr = parser.or()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error_here());
    }
    Ok(expr)
}
