//! Exact parser for the restricted expression grammar used by `--rational`
//! and friends: integer literals, the variable z, + - * /, ^ with a small
//! nonnegative integer exponent, parentheses, and juxtaposition as
//! multiplication, so "4z(2z^2-1)" means 4·z·(2z²−1). Floating-point
//! literals are rejected; everything stays in exact arithmetic.

use superint_core::exactmath::RationalFunction;
use superint_core::int;

pub fn parse_rational(src: &str) -> Result<RationalFunction, String> {
    let tokens = lex(src)?;
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    match parser.peek() {
        None => Ok(value),
        Some(t) => Err(format!("unexpected {t} after a complete expression")),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

impl core::fmt::Display for Tok {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Z => write!(f, "'z'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::Open => write!(f, "'('"),
            Tok::Close => write!(f, "')'"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(i64::from(d)))
                        .ok_or_else(|| String::from("integer literal out of range"))?;
                    chars.next();
                }
                if chars.peek() == Some(&'.') {
                    return Err(String::from(
                        "floating-point literals are not accepted; use exact ratios like 3/2",
                    ));
                }
                out.push(Tok::Int(n));
            }
            'z' => {
                chars.next();
                out.push(Tok::Z);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' | '\u{2212}' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    if out.is_empty() {
        return Err(String::from("empty expression"));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<RationalFunction, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*' | '/') unary | power)*   — the bare-power branch
    // is juxtaposition, so it must not swallow a leading minus.
    fn term(&mut self) -> Result<RationalFunction, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let divisor = self.unary()?;
                    if divisor.is_zero() {
                        return Err(String::from("division by an identically zero expression"));
                    }
                    acc = &acc / &divisor;
                }
                Some(Tok::Int(_) | Tok::Z | Tok::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<RationalFunction, String> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    // power := atom ('^' integer)?
    fn power(&mut self) -> Result<RationalFunction, String> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exponent = match self.next() {
            Some(Tok::Int(n)) if (0..=64).contains(&n) => n as u32,
            Some(t) => return Err(format!("exponent must be an integer in 0..=64, got {t}")),
            None => return Err(String::from("missing exponent after '^'")),
        };
        let mut acc = RationalFunction::one();
        for _ in 0..exponent {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RationalFunction, String> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(RationalFunction::constant(int(n))),
            Some(Tok::Z) => Ok(RationalFunction::x()),
            Some(Tok::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(inner),
                    Some(t) => Err(format!("expected ')', got {t}")),
                    None => Err(String::from("missing closing parenthesis")),
                }
            }
            Some(t) => Err(format!("expected a value, got {t}")),
            None => Err(String::from("expression ends where a value is required")),
        }
    }
}
