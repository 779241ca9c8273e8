//! Expression language for the command-line evaluator.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' uint)?
//! primary := scalar | 'e' uint | 'e' | '(' expr ')' | fn '(' expr ')'
//! fn      := inv | norm | body | soul | even | odd | parity
//! ```
//!
//! `*` is the Grassmann product and `^` repeated product. A bare `e` is the
//! unit. `parity(...)` yields a label rather than an element, so it may only
//! appear as the whole expression.

use crate::algebra::{Grade, GrassmannAlgebra, GrassmannElement, NormKind, Parity};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::ordering::OrderingFunction;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Function {
    Inv,
    Norm,
    Body,
    Soul,
    Even,
    Odd,
    Parity,
}

impl Function {
    fn from_name(name: &str) -> Option<Function> {
        Some(match name {
            "inv" => Function::Inv,
            "norm" => Function::Norm,
            "body" => Function::Body,
            "soul" => Function::Soul,
            "even" => Function::Even,
            "odd" => Function::Odd,
            "parity" => Function::Parity,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    /// Literal text, parsed in the session's field at evaluation.
    Scalar(String),
    Generator(u64),
    Unit,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Function, Box<Expr>),
}

/// A node with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn describe(t: Option<&Token>) -> String {
    match t {
        None => "end of input".into(),
        Some(Token::Number(s)) => format!("number '{s}'"),
        Some(Token::Ident(s)) => format!("'{s}'"),
        Some(Token::Plus) => "'+'".into(),
        Some(Token::Minus) => "'-'".into(),
        Some(Token::Star) => "'*'".into(),
        Some(Token::Caret) => "'^'".into(),
        Some(Token::LParen) => "'('".into(),
        Some(Token::RParen) => "')'".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    // decimal := digits ('.' digits)?
    let decimal = |j: usize| {
        let mut k = digits(j);
        if k + 1 < bytes.len() && bytes[k] == b'.' && bytes[k + 1].is_ascii_digit() {
            k = digits(k + 1);
        }
        k
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let mut end = decimal(i);
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    end = decimal(end + 1);
                }
                i = end;
                out.push((Token::Number(text[start..end].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while end < bytes.len() && bytes[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                i = end;
                out.push((Token::Ident(text[start..end].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::parse(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expected(&self, what: &str) -> Error {
        Error::parse(
            self.offset(),
            format!("expected {what}, found {}", describe(self.peek())),
        )
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Some(Token::Plus) => ExprKind::Add,
                Some(Token::Minus) => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            let offset = lhs.offset;
            lhs = Expr {
                kind: make(Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.unary()?;
            let offset = lhs.offset;
            lhs = Expr {
                kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Token::Minus) {
            let offset = self.offset();
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                offset,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        match self.bump() {
            Some(Token::Number(s)) => {
                let n: u32 = s.parse().map_err(|_| {
                    Error::parse(
                        at,
                        format!("exponent '{s}' is not a small nonnegative integer"),
                    )
                })?;
                let offset = base.offset;
                Ok(Expr {
                    kind: ExprKind::Pow(Box::new(base), n),
                    offset,
                })
            }
            _ => {
                self.pos -= 1;
                Err(self.expected("nonnegative integer exponent"))
            }
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Number(s)) => Ok(Expr {
                kind: ExprKind::Scalar(s),
                offset,
            }),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                if name == "e" {
                    return Ok(Expr {
                        kind: ExprKind::Unit,
                        offset,
                    });
                }
                if let Some(digits) = name
                    .strip_prefix('e')
                    .filter(|d| d.bytes().all(|b| b.is_ascii_digit()))
                {
                    let label = digits.parse().map_err(|_| {
                        Error::parse(offset, format!("generator label '{digits}' out of range"))
                    })?;
                    return Ok(Expr {
                        kind: ExprKind::Generator(label),
                        offset,
                    });
                }
                let f = Function::from_name(&name).ok_or_else(|| {
                    Error::parse(offset, format!("unknown function or generator '{name}'"))
                })?;
                self.expect(Token::LParen, "'('")?;
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr {
                    kind: ExprKind::Call(f, Box::new(inner)),
                    offset,
                })
            }
            _ => {
                self.pos -= 1;
                Err(self.expected("expression"))
            }
        }
    }
}

fn nested_parity(e: &Expr) -> Option<usize> {
    match &e.kind {
        ExprKind::Call(Function::Parity, _) => Some(e.offset),
        ExprKind::Call(_, a) | ExprKind::Neg(a) | ExprKind::Pow(a, _) => nested_parity(a),
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
            nested_parity(a).or_else(|| nested_parity(b))
        }
        ExprKind::Scalar(_) | ExprKind::Generator(_) | ExprKind::Unit => None,
    }
}

pub fn parse_expression(text: &str) -> Result<Expr> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.expected("operator or end of input"));
    }
    let inner = match &e.kind {
        ExprKind::Call(Function::Parity, a) => nested_parity(a),
        _ => nested_parity(&e),
    };
    if let Some(at) = inner {
        return Err(Error::parse(at, "parity(...) must be the whole expression"));
    }
    Ok(e)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub algebra: GrassmannAlgebra,
    pub output: OutputFormat,
}

impl SessionConfig {
    /// Fails with `NotUltrametric` for the sup norm over real or rational fields.
    pub fn new(
        field: FieldDescriptor,
        norm: NormKind,
        ordering: OrderingFunction,
        output: OutputFormat,
    ) -> Result<Self> {
        field.validate()?;
        Ok(SessionConfig {
            algebra: GrassmannAlgebra::new(field, ordering, norm)?,
            output,
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.algebra.descriptor()
    }
}

/// A norm value: exact for rational and p-adic fields.
#[derive(Clone, Debug, PartialEq)]
pub struct NormValue {
    pub approx: f64,
    pub exact: Option<num_rational::BigRational>,
}

impl std::fmt::Display for NormValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", Scalar::Real(self.approx)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Element(GrassmannElement),
    Norm(NormValue),
    Parity(Parity),
}

const REAL_INVERSE_TOLERANCE: f64 = 1e-10;

fn eval_element(e: &Expr, cfg: &SessionConfig) -> Result<GrassmannElement> {
    let alg = &cfg.algebra;
    let field = alg.descriptor();
    Ok(match &e.kind {
        ExprKind::Scalar(text) => {
            let s = Scalar::parse(text, field).map_err(|err| match err {
                Error::Parse { offset, message } => Error::parse(e.offset + offset, message),
                other => other,
            })?;
            alg.scalar(s)?
        }
        ExprKind::Generator(l) => alg.generator(*l),
        ExprKind::Unit => alg.unit(),
        ExprKind::Neg(a) => eval_element(a, cfg)?.neg(),
        ExprKind::Add(a, b) => eval_element(a, cfg)?.add(&eval_element(b, cfg)?)?,
        ExprKind::Sub(a, b) => eval_element(a, cfg)?.sub(&eval_element(b, cfg)?)?,
        ExprKind::Mul(a, b) => eval_element(a, cfg)?.mul(&eval_element(b, cfg)?)?,
        ExprKind::Pow(a, n) => eval_element(a, cfg)?.pow(*n),
        ExprKind::Call(f, a) => {
            let x = eval_element(a, cfg)?;
            match f {
                Function::Inv => checked_inverse(&x, alg)?,
                Function::Norm => {
                    let n = norm_value(&x, alg);
                    let s = match &n.exact {
                        Some(r) => Scalar::from_ratio(r, field),
                        None => Scalar::Real(n.approx),
                    };
                    alg.scalar(s)?
                }
                Function::Body => alg.scalar(x.body())?,
                Function::Soul => x.soul(),
                Function::Even => x.grade_project(Grade::Even),
                Function::Odd => x.grade_project(Grade::Odd),
                Function::Parity => unreachable!("rejected by the parser"),
            }
        }
    })
}

fn norm_value(x: &GrassmannElement, alg: &GrassmannAlgebra) -> NormValue {
    NormValue {
        approx: alg.norm(x),
        exact: alg.exact_norm(x),
    }
}

/// Inverts and confirms `a·a⁻¹ = e` (exactly, or to 1e-10 in ℓ₁ over real64).
fn checked_inverse(x: &GrassmannElement, alg: &GrassmannAlgebra) -> Result<GrassmannElement> {
    let inv = x.invert()?;
    let residual = x.mul(&inv)?.sub(&alg.unit())?;
    let ok = match alg.descriptor() {
        FieldDescriptor::Real64 => {
            let r = residual.norm_l1();
            r.is_finite() && r <= REAL_INVERSE_TOLERANCE
        }
        _ => residual.is_zero(),
    };
    if !ok {
        return Err(Error::Invariant(format!(
            "a*inv(a) differs from 1 by {}",
            residual.norm_l1()
        )));
    }
    Ok(inv)
}

pub fn evaluate(e: &Expr, cfg: &SessionConfig) -> Result<Value> {
    match &e.kind {
        ExprKind::Call(Function::Parity, a) => Ok(Value::Parity(eval_element(a, cfg)?.parity())),
        ExprKind::Call(Function::Norm, a) => Ok(Value::Norm(norm_value(
            &eval_element(a, cfg)?,
            &cfg.algebra,
        ))),
        _ => Ok(Value::Element(eval_element(e, cfg)?)),
    }
}

pub fn render(v: &Value, format: OutputFormat) -> String {
    match (v, format) {
        (Value::Element(a), OutputFormat::Text) => a.to_string(),
        (Value::Element(a), OutputFormat::Json) => a.to_json(),
        (Value::Norm(n), OutputFormat::Text) => n.to_string(),
        (Value::Norm(n), OutputFormat::Json) => {
            serde_json::json!({ "norm": n.to_string() }).to_string()
        }
        (Value::Parity(p), OutputFormat::Text) => p.to_string(),
        (Value::Parity(p), OutputFormat::Json) => {
            serde_json::json!({ "parity": p.to_string() }).to_string()
        }
    }
}

/// Parses, evaluates and renders one expression.
pub fn run(text: &str, cfg: &SessionConfig) -> Result<String> {
    let ast = parse_expression(text)?;
    Ok(render(&evaluate(&ast, cfg)?, cfg.output))
}

/// Process exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => 2,
        Error::NotInvertible => 3,
        Error::DescriptorMismatch { .. }
        | Error::OrderingMismatch
        | Error::InvalidDescriptor(_)
        | Error::InvalidOrdering(_)
        | Error::NotUltrametric
        | Error::ModeMismatch => 4,
        _ => 5,
    }
}

/// Parses `real`, `rational`, `padic=p` or `padic=p:prec`.
pub fn parse_field(text: &str) -> Result<FieldDescriptor> {
    match text {
        "real" | "real64" => return Ok(FieldDescriptor::Real64),
        "rational" => return Ok(FieldDescriptor::Rational),
        _ => {}
    }
    let spec = text
        .strip_prefix("padic=")
        .ok_or_else(|| Error::InvalidDescriptor(format!("unknown field '{text}'")))?;
    let (p, prec) = match spec.split_once(':') {
        Some((p, prec)) => (p, Some(prec)),
        None => (spec, None),
    };
    let p: u64 = p
        .parse()
        .map_err(|_| Error::InvalidDescriptor(format!("bad prime '{p}'")))?;
    let precision = match prec {
        None => crate::field::DEFAULT_PADIC_PRECISION,
        Some(s) => s
            .parse()
            .map_err(|_| Error::InvalidDescriptor(format!("bad precision '{s}'")))?,
    };
    FieldDescriptor::padic(p, precision)
}

/// Parses `l1` or `linf`.
pub fn parse_norm(text: &str) -> Result<NormKind> {
    match text {
        "l1" => Ok(NormKind::L1),
        "linf" => Ok(NormKind::Linf),
        _ => Err(Error::InvalidDescriptor(format!("unknown norm '{text}'"))),
    }
}
