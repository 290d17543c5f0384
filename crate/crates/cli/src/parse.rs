//! Recursive descent parser for polynomial expressions, matrix and vector
//! literals, and the `O(d)` bundle shorthand.
//!
//! ```text
//! sum      := product (('+' | '-') product)*
//! product  := unary ('*' unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-'? INT | '(' '-'? INT ')'
//! atom     := NUMBER | IDENT | '(' sum ')'
//! NUMBER   := INT ('/' INT)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use jetline::matrix::Matrix;
use jetline::multipoly::{MultiPoly, PolyRing};
use jetline::{Field, LaurentPoly};

/// Largest accepted `|k|` in `x^k`.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Unexpected {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },
    #[error("{pos}: division by zero in literal {literal}")]
    DivisionByZero { pos: Pos, literal: String },
    #[error("{pos}: {message}")]
    Invalid { pos: Pos, message: String },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Unexpected { pos, .. }
            | ParseError::DivisionByZero { pos, .. }
            | ParseError::Invalid { pos, .. } => *pos,
        }
    }

    fn invalid(pos: Pos, message: impl Into<String>) -> Self {
        ParseError::Invalid {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number { num: BigInt, den: BigInt, text: String },
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Oplus,
    Invalid(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number { text, .. } => write!(f, "number {text}"),
            Tok::Ident(s) => write!(f, "identifier {s}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::Oplus => write!(f, "'⊕'"),
            Tok::Invalid(c) => write!(f, "{c:?}"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    let advance = |c: char, line: &mut usize, column: &mut usize| {
        if c == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut line, &mut column);
            continue;
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                text.push(d);
                chars.next();
                column += 1;
            }
            let num: BigInt = text.parse().expect("digits");
            let mut den = BigInt::from(1);
            let mut lookahead = chars.clone();
            if lookahead.next() == Some('/') && lookahead.peek().is_some_and(|d| d.is_ascii_digit()) {
                chars.next();
                column += 1;
                text.push('/');
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                    column += 1;
                }
                den = digits.parse().expect("digits");
                text.push_str(&digits);
            }
            out.push((Tok::Number { num, den, text }, pos));
            continue;
        }
        if c.is_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                name.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(name), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '⊕' => Tok::Oplus,
            other => Tok::Invalid(other),
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    out
}

/// Syntax tree of a polynomial expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number { num: BigInt, den: BigInt, pos: Pos },
    Var { name: String, pos: Pos },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow { base: Box<Expr>, exp: i64, pos: Pos },
}

impl Expr {
    fn visit_vars<'a>(&'a self, out: &mut Vec<(&'a str, Pos)>) {
        match self {
            Expr::Number { .. } => {}
            Expr::Var { name, pos } => out.push((name, *pos)),
            Expr::Neg(a) => a.visit_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.visit_vars(out);
                b.visit_vars(out);
            }
            Expr::Pow { base, .. } => base.visit_vars(out),
        }
    }

    /// Variables in order of appearance, with their positions.
    pub fn variables(&self) -> Vec<(&str, Pos)> {
        let mut out = Vec::new();
        self.visit_vars(&mut out);
        out
    }
}

/// Where an expression tree is evaluated.
pub trait Target {
    type Elem: Clone;
    fn number(&self, num: &BigInt, den: &BigInt, pos: Pos) -> Result<Self::Elem, ParseError>;
    fn var(&self, name: &str, pos: Pos) -> Result<Self::Elem, ParseError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn pow(&self, a: &Self::Elem, k: i64, pos: Pos) -> Result<Self::Elem, ParseError>;

    fn eval(&self, e: &Expr) -> Result<Self::Elem, ParseError> {
        Ok(match e {
            Expr::Number { num, den, pos } => self.number(num, den, *pos)?,
            Expr::Var { name, pos } => self.var(name, *pos)?,
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.sub(&self.eval(a)?, &self.eval(b)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Pow { base, exp, pos } => self.pow(&self.eval(base)?, *exp, *pos)?,
        })
    }
}

fn scalar(field: Field, num: &BigInt, den: &BigInt, pos: Pos) -> Result<jetline::Scalar, ParseError> {
    field.fraction(num, den).ok_or_else(|| ParseError::DivisionByZero {
        pos,
        literal: format!("{num}/{den}"),
    })
}

/// Laurent polynomials in `t`.
pub struct Laurent(pub Field);

impl Target for Laurent {
    type Elem = LaurentPoly;

    fn number(&self, num: &BigInt, den: &BigInt, pos: Pos) -> Result<LaurentPoly, ParseError> {
        Ok(LaurentPoly::constant(scalar(self.0, num, den, pos)?))
    }
    fn var(&self, name: &str, pos: Pos) -> Result<LaurentPoly, ParseError> {
        if name == "t" {
            Ok(LaurentPoly::t_pow(self.0, 1))
        } else {
            Err(ParseError::invalid(pos, format!("unknown variable {name}; the only variable is t")))
        }
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.sub(b)
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn pow(&self, a: &LaurentPoly, k: i64, pos: Pos) -> Result<LaurentPoly, ParseError> {
        let base = if k < 0 {
            a.inv_unit()
                .ok_or_else(|| ParseError::invalid(pos, format!("negative power of {a}, which is not a monomial")))?
        } else {
            a.clone()
        };
        Ok(base.pow(k.unsigned_abs() as u32))
    }
}

/// Polynomials in `x1..xn`.
pub struct Multi(pub PolyRing);

impl Target for Multi {
    type Elem = MultiPoly;

    fn number(&self, num: &BigInt, den: &BigInt, pos: Pos) -> Result<MultiPoly, ParseError> {
        Ok(self.0.constant(scalar(self.0.field, num, den, pos)?))
    }
    fn var(&self, name: &str, pos: Pos) -> Result<MultiPoly, ParseError> {
        match variable_index(name) {
            Some(k) if k <= self.0.nvars => Ok(self.0.var(k - 1)),
            _ => Err(ParseError::invalid(
                pos,
                format!("unknown variable {name}; expected x1..x{}", self.0.nvars),
            )),
        }
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }
    fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.sub(b)
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul(b)
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.neg()
    }
    fn pow(&self, a: &MultiPoly, k: i64, pos: Pos) -> Result<MultiPoly, ParseError> {
        if k < 0 {
            return Err(ParseError::invalid(pos, "negative exponents are not allowed in x1..xn"));
        }
        Ok((0..k).fold(self.0.one(), |acc, _| acc.mul(a)))
    }
}

/// `k` for a variable named `xk` with `k >= 1`.
pub fn variable_index(name: &str) -> Option<usize> {
    let k: usize = name.strip_prefix('x')?.parse().ok()?;
    (k >= 1 && !name[1..].starts_with('0')).then_some(k)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

fn expected(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

const EXPR_START: &[&str] = &["number", "variable", "'-'", "'('"];

impl Parser {
    fn new(src: &str) -> Self {
        Parser { toks: lex(src), at: 0 }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, items: &[&str]) -> ParseError {
        ParseError::Unexpected {
            pos: self.pos(),
            expected: expected(items),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, items: &[&str]) -> Result<Pos, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(items))
        }
    }

    fn finish(&self, follow: &[&str]) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            let mut items = follow.to_vec();
            items.push("end of input");
            Err(self.unexpected(&items))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.bump().1;
        let exp = if *self.peek() == Tok::LParen {
            self.bump();
            let k = self.signed_int()?;
            self.expect(Tok::RParen, &["')'"])?;
            k
        } else {
            self.signed_int()?
        };
        Ok(Expr::Pow {
            base: Box::new(base),
            exp,
            pos,
        })
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Number { num, den, text } if den == BigInt::from(1) => {
                let pos = self.bump().1;
                let k = if negative { -num } else { num };
                match k.to_i64() {
                    Some(k) if k.abs() <= MAX_EXPONENT => Ok(k),
                    _ => Err(ParseError::invalid(pos, format!("exponent {text} exceeds {MAX_EXPONENT} in size"))),
                }
            }
            _ => Err(self.unexpected(&["integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Number { num, den, .. } => {
                let pos = self.bump().1;
                Ok(Expr::Number { num, den, pos })
            }
            Tok::Ident(name) => {
                let pos = self.bump().1;
                Ok(Expr::Var { name, pos })
            }
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen, &["')'", "'+'", "'-'", "'*'", "'^'"])?;
                Ok(e)
            }
            _ => Err(self.unexpected(EXPR_START)),
        }
    }

    fn vector(&mut self) -> Result<(Vec<Expr>, Pos), ParseError> {
        let pos = self.expect(Tok::LBracket, &["'['"])?;
        let mut items = vec![self.sum()?];
        loop {
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                    items.push(self.sum()?);
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok((items, pos));
                }
                _ => return Err(self.unexpected(&["','", "']'", "'+'", "'-'", "'*'", "'^'"])),
            }
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<Expr>>, ParseError> {
        self.expect(Tok::LBracket, &["'['"])?;
        let mut rows = Vec::new();
        loop {
            let (row, pos) = self.vector()?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(ParseError::invalid(
                        pos,
                        format!("row has {} entries, expected {first}", row.len()),
                    ));
                }
            }
            rows.push(row);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(rows);
                }
                _ => return Err(self.unexpected(&["','", "']'"])),
            }
        }
    }

    /// `O(d) ((+|⊕) O(d))*`, after the leading identifier has been seen.
    fn line_sum(&mut self) -> Result<Vec<i64>, ParseError> {
        let mut degrees = Vec::new();
        loop {
            match self.peek() {
                Tok::Ident(name) if name == "O" => {
                    self.bump();
                }
                _ => return Err(self.unexpected(&["'O'"])),
            }
            self.expect(Tok::LParen, &["'('"])?;
            degrees.push(self.signed_int_plain()?);
            self.expect(Tok::RParen, &["')'"])?;
            match self.peek() {
                Tok::Plus | Tok::Oplus => {
                    self.bump();
                }
                _ => return Ok(degrees),
            }
        }
    }

    fn signed_int_plain(&mut self) -> Result<i64, ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Number { num, den, text } if den == BigInt::from(1) => {
                let pos = self.bump().1;
                let k = if negative { -num } else { num };
                k.to_i64()
                    .filter(|k| k.abs() <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError::invalid(pos, format!("degree {text} exceeds {MAX_EXPONENT} in size")))
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }
}

/// Parses an expression tree without evaluating it.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src);
    let e = p.sum()?;
    p.finish(&["'+'", "'-'", "'*'", "'^'"])?;
    Ok(e)
}

/// Parses a Laurent polynomial in `t` and returns it in canonical form.
pub fn parse_poly(field: Field, src: &str) -> Result<LaurentPoly, ParseError> {
    Laurent(field).eval(&parse_expr(src)?)
}

/// Parses `[[e, ..], ..]` into expression trees.
pub fn parse_matrix_exprs(src: &str) -> Result<Vec<Vec<Expr>>, ParseError> {
    let mut p = Parser::new(src);
    let m = p.matrix()?;
    p.finish(&[])?;
    Ok(m)
}

/// Parses `[e, ..]` into expression trees.
pub fn parse_vector_exprs(src: &str) -> Result<Vec<Expr>, ParseError> {
    let mut p = Parser::new(src);
    let (v, _) = p.vector()?;
    p.finish(&[])?;
    Ok(v)
}

pub fn eval_matrix<T: Target>(target: &T, rows: &[Vec<Expr>]) -> Result<Vec<Vec<T::Elem>>, ParseError> {
    rows.iter()
        .map(|r| r.iter().map(|e| target.eval(e)).collect())
        .collect()
}

pub fn parse_laurent_matrix(field: Field, src: &str) -> Result<Matrix<LaurentPoly>, ParseError> {
    let rows = eval_matrix(&Laurent(field), &parse_matrix_exprs(src)?)?;
    Ok(Matrix::from_rows(&field, rows).expect("rows checked rectangular"))
}

/// Largest `k` among the variables `xk` of the given trees, rejecting any
/// other name.
pub fn multipoly_vars<'a>(exprs: impl IntoIterator<Item = &'a Expr>) -> Result<usize, ParseError> {
    let mut n = 0;
    for e in exprs {
        for (name, pos) in e.variables() {
            let k = variable_index(name)
                .ok_or_else(|| ParseError::invalid(pos, format!("unknown variable {name}; expected x1, x2, ...")))?;
            n = n.max(k);
        }
    }
    Ok(n)
}

/// A bundle as written on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum BundleExpr {
    /// `O(a_1) ⊕ ... ⊕ O(a_r)`.
    Lines(Vec<i64>),
    Transition(Matrix<LaurentPoly>),
}

/// Parses a transition matrix literal or a sum of `O(d)` terms.
pub fn parse_bundle(field: Field, src: &str) -> Result<BundleExpr, ParseError> {
    let mut p = Parser::new(src);
    match p.peek() {
        Tok::LBracket => {
            let rows = p.matrix()?;
            p.finish(&[])?;
            let rows = eval_matrix(&Laurent(field), &rows)?;
            Ok(BundleExpr::Transition(
                Matrix::from_rows(&field, rows).expect("rows checked rectangular"),
            ))
        }
        Tok::Ident(name) if name == "O" => {
            let degrees = p.line_sum()?;
            p.finish(&["'+'", "'⊕'"])?;
            Ok(BundleExpr::Lines(degrees))
        }
        _ => Err(p.unexpected(&["'['", "'O'"])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Q, terms)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly(Q, "t^-3").unwrap(), lp(&[(-3, 1)]));
        let half = Q.fraction(&3.into(), &2.into()).unwrap();
        let expected = LaurentPoly::from_terms(Q, [(0, Q.one()), (1, half), (2, Q.from_i64(-1))]);
        assert_eq!(parse_poly(Q, "3/2*t - t^2 + 1").unwrap(), expected);
        assert_eq!(parse_poly(Q, "(1+t)*(1-t)").unwrap(), lp(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_poly(Q, "-t^2").unwrap(), lp(&[(2, -1)]));
        assert_eq!(parse_poly(Q, "2*t^2 + 3*t").unwrap(), lp(&[(2, 2), (1, 3)]));
        assert_eq!(parse_poly(Q, "1 - t - t").unwrap(), lp(&[(0, 1), (1, -2)]));
        assert_eq!(parse_poly(Q, "(2*t)^-1").unwrap(), LaurentPoly::monomial(Q.fraction(&1.into(), &2.into()).unwrap(), -1));
        assert_eq!(parse_poly(Q, "t^(-2)").unwrap(), lp(&[(-2, 1)]));
        assert_eq!(parse_poly(Q, "--t").unwrap(), lp(&[(1, 1)]));
        assert_eq!(parse_poly(Q, "(1+t)^2").unwrap(), lp(&[(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn prime_field_reduces() {
        let f3 = Field::Prime(3);
        assert_eq!(parse_poly(f3, "4*t + 3").unwrap(), LaurentPoly::from_int_terms(f3, &[(1, 1)]));
        assert_eq!(parse_poly(f3, "1/2").unwrap(), LaurentPoly::from_int_terms(f3, &[(0, 2)]));
        assert!(matches!(parse_poly(f3, "1/3"), Err(ParseError::DivisionByZero { .. })));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly(Q, "1 +\n  * t") {
            Err(ParseError::Unexpected { pos, expected, found }) => {
                assert_eq!(pos, Pos { line: 2, column: 3 });
                assert!(expected.contains(&"number".to_string()));
                assert_eq!(found, "'*'");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly(Q, "1/0"), Err(ParseError::DivisionByZero { .. })));
        assert_eq!(parse_poly(Q, "t/2").unwrap_err().pos(), Pos { line: 1, column: 2 });
        assert!(matches!(parse_poly(Q, "(1+t)^-1"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_poly(Q, "s"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_poly(Q, "t^99999"), Err(ParseError::Invalid { .. })));
        assert!(parse_poly(Q, "(t").is_err());
        assert!(parse_poly(Q, "").is_err());
        assert!(parse_poly(Q, "t t").is_err());
    }

    #[test]
    fn matrices_and_bundles() {
        let m = parse_laurent_matrix(Q, "[[t^-1, 0], [0, t^-3]]").unwrap();
        assert_eq!(m, Matrix::from_int_terms(Q, &[&[&[(-1, 1)], &[]], &[&[], &[(-3, 1)]]]));
        assert!(matches!(parse_laurent_matrix(Q, "[[1, 0], [0]]"), Err(ParseError::Invalid { .. })));
        assert_eq!(parse_bundle(Q, "O(4)").unwrap(), BundleExpr::Lines(vec![4]));
        assert_eq!(parse_bundle(Q, "O(1) ⊕ O(-2) + O(0)").unwrap(), BundleExpr::Lines(vec![1, -2, 0]));
        assert!(matches!(parse_bundle(Q, "[[t]]").unwrap(), BundleExpr::Transition(_)));
        assert!(parse_bundle(Q, "O(1/2)").is_err());
        assert!(parse_bundle(Q, "t").is_err());
    }

    #[test]
    fn multivariate() {
        let rows = parse_matrix_exprs("[[1, x1], [0, x2^2 - x1]]").unwrap();
        assert_eq!(multipoly_vars(rows.iter().flatten()).unwrap(), 2);
        let ring = PolyRing::new(Q, 2);
        let m = eval_matrix(&Multi(ring), &rows).unwrap();
        assert_eq!(m[0][1], ring.var(0));
        assert_eq!(m[1][1], ring.var(1).mul(&ring.var(1)).sub(&ring.var(0)));
        assert!(multipoly_vars(parse_vector_exprs("[t]").unwrap().iter()).is_err());
        assert!(multipoly_vars(parse_vector_exprs("[x0]").unwrap().iter()).is_err());
        assert!(Multi(ring).eval(&parse_expr("x1^-1").unwrap()).is_err());
    }
}
