//! Complete normed fields: binary64 reals, exact rationals and fixed
//! precision p-adic numbers.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Coefficient;

pub const DEFAULT_PADIC_PRECISION: u32 = 20;

/// Which field the coefficients live in.
///
/// Serializes as `{"kind":"real64"}`, `{"kind":"rational"}` or
/// `{"kind":"padic","p":3,"precision":20}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Real64,
    Rational,
    Padic { p: u64, precision: u32 },
}

impl FieldDescriptor {
    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        let d = FieldDescriptor::Padic { p, precision };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if let FieldDescriptor::Padic { p, precision } = *self {
            if !is_prime(p) {
                return Err(Error::InvalidDescriptor(format!("{p} is not prime")));
            }
            if precision == 0 {
                return Err(Error::InvalidDescriptor(
                    "precision must be at least 1".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: FieldDescriptor =
            serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization is infallible")
    }

    /// All shipped fields have characteristic zero.
    pub fn characteristic(&self) -> u64 {
        0
    }

    pub fn is_non_archimedean(&self) -> bool {
        matches!(self, FieldDescriptor::Padic { .. })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Real64 => f.write_str("real64"),
            FieldDescriptor::Rational => f.write_str("rational"),
            FieldDescriptor::Padic { p, precision } => write!(f, "padic({p}, {precision})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_p(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

/// Splits `n = p^k * rest` with `p` not dividing `rest`. `n` must be nonzero.
fn split_valuation(mut n: BigUint, p: u64) -> (u64, BigUint) {
    let p = BigUint::from(p);
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return (k, n);
        }
        n = q;
        k += 1;
    }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor is nonnegative")
}

/// A p-adic number `p^valuation * unit`, with `unit` known modulo
/// `p^precision`.
///
/// `precision` starts at the field's cap and shrinks when a sum cancels
/// leading digits. Two values compare equal when their valuations match and
/// their units agree to the smaller of the two precisions.
#[derive(Clone, Debug)]
pub struct Padic {
    p: u64,
    cap: u32,
    digits: Option<Digits>,
}

#[derive(Clone, Debug)]
struct Digits {
    valuation: i64,
    unit: BigUint,
    precision: u32,
}

impl Padic {
    pub fn zero(p: u64, cap: u32) -> Self {
        Padic {
            p,
            cap,
            digits: None,
        }
    }

    pub fn from_bigint(n: &BigInt, p: u64, cap: u32) -> Self {
        if n.is_zero() {
            return Padic::zero(p, cap);
        }
        let (v, rest) = split_valuation(n.magnitude().clone(), p);
        let m = pow_p(p, cap);
        let mut unit = rest % &m;
        if n.sign() == Sign::Minus {
            unit = &m - unit;
        }
        Padic {
            p,
            cap,
            digits: Some(Digits {
                valuation: v as i64,
                unit,
                precision: cap,
            }),
        }
    }

    pub fn from_ratio(r: &BigRational, p: u64, cap: u32) -> Self {
        let num = Padic::from_bigint(r.numer(), p, cap);
        if num.is_zero() {
            return num;
        }
        let den = Padic::from_bigint(r.denom(), p, cap);
        num.mul(&den.inverse().expect("denominator is nonzero"))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_none()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.digits.as_ref().map(|d| d.valuation)
    }

    pub fn unit(&self) -> Option<&BigUint> {
        self.digits.as_ref().map(|d| &d.unit)
    }

    /// Number of known p-adic digits of the unit; `None` for exact zero.
    pub fn significant_digits(&self) -> Option<u32> {
        self.digits.as_ref().map(|d| d.precision)
    }

    /// Multiplies by `p^k`.
    pub fn shift(mut self, k: i64) -> Self {
        if let Some(d) = self.digits.as_mut() {
            d.valuation += k;
        }
        self
    }

    pub fn add(&self, other: &Padic) -> Padic {
        let (a, b) = match (&self.digits, &other.digits) {
            (None, _) => return other.clone(),
            (_, None) => return self.clone(),
            (Some(a), Some(b)) if a.valuation <= b.valuation => (a, b),
            (Some(a), Some(b)) => (b, a),
        };
        let known = (a.valuation + a.precision as i64).min(b.valuation + b.precision as i64);
        let width = (known - a.valuation) as u32;
        let m = pow_p(self.p, width);
        let shift = b.valuation - a.valuation;
        let sum = if shift >= width as i64 {
            &a.unit % &m
        } else {
            (&a.unit + &b.unit * pow_p(self.p, shift as u32)) % &m
        };
        if sum.is_zero() {
            // every known digit cancelled
            return Padic::zero(self.p, self.cap);
        }
        let (k, unit) = split_valuation(sum, self.p);
        Padic {
            p: self.p,
            cap: self.cap,
            digits: Some(Digits {
                valuation: a.valuation + k as i64,
                unit,
                precision: width - k as u32,
            }),
        }
    }

    pub fn neg(&self) -> Padic {
        let digits = self.digits.as_ref().map(|d| Digits {
            valuation: d.valuation,
            unit: pow_p(self.p, d.precision) - &d.unit,
            precision: d.precision,
        });
        Padic {
            p: self.p,
            cap: self.cap,
            digits,
        }
    }

    pub fn mul(&self, other: &Padic) -> Padic {
        let (a, b) = match (&self.digits, &other.digits) {
            (Some(a), Some(b)) => (a, b),
            _ => return Padic::zero(self.p, self.cap),
        };
        let precision = a.precision.min(b.precision);
        let m = pow_p(self.p, precision);
        Padic {
            p: self.p,
            cap: self.cap,
            digits: Some(Digits {
                valuation: a.valuation + b.valuation,
                unit: (&a.unit * &b.unit) % m,
                precision,
            }),
        }
    }

    pub fn inverse(&self) -> Option<Padic> {
        let d = self.digits.as_ref()?;
        let m = pow_p(self.p, d.precision);
        Some(Padic {
            p: self.p,
            cap: self.cap,
            digits: Some(Digits {
                valuation: -d.valuation,
                unit: mod_inverse(&d.unit, &m),
                precision: d.precision,
            }),
        })
    }

    pub fn norm(&self) -> f64 {
        match &self.digits {
            None => 0.0,
            Some(d) => (self.p as f64).powf(-(d.valuation as f64)),
        }
    }

    pub fn exact_norm(&self) -> BigRational {
        match &self.digits {
            None => BigRational::zero(),
            Some(d) => {
                let pk = BigInt::from(pow_p(self.p, d.valuation.unsigned_abs() as u32));
                if d.valuation >= 0 {
                    BigRational::new(BigInt::one(), pk)
                } else {
                    BigRational::from_integer(pk)
                }
            }
        }
    }

    /// The unit as the representative of least absolute value.
    fn balanced_unit(d: &Digits, p: u64) -> BigInt {
        let m = pow_p(p, d.precision);
        let u = BigInt::from(d.unit.clone());
        if &d.unit * 2u32 > m {
            u - BigInt::from(m)
        } else {
            u
        }
    }
}

impl PartialEq for Padic {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p || self.cap != other.cap {
            return false;
        }
        match (&self.digits, &other.digits) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                if a.valuation != b.valuation {
                    return false;
                }
                let m = pow_p(self.p, a.precision.min(b.precision));
                &a.unit % &m == &b.unit % &m
            }
            _ => false,
        }
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match &self.digits {
            None => return f.write_str("0"),
            Some(d) => d,
        };
        let u = Padic::balanced_unit(d, self.p);
        let pk = BigInt::from(pow_p(self.p, d.valuation.unsigned_abs() as u32));
        if d.valuation >= 0 {
            write!(f, "{}", u * pk)
        } else {
            write!(f, "{u}/{pk}")
        }
    }
}

/// An element of one of the shipped fields.
#[derive(Clone, Debug)]
pub enum Scalar {
    Real(f64),
    Rational(BigRational),
    Padic(Padic),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl Scalar {
    pub fn zero(d: FieldDescriptor) -> Self {
        Scalar::from_integer(0, d)
    }

    pub fn one(d: FieldDescriptor) -> Self {
        Scalar::from_integer(1, d)
    }

    pub fn from_integer(n: i64, d: FieldDescriptor) -> Self {
        Scalar::from_ratio(&BigRational::from_integer(BigInt::from(n)), d)
    }

    pub fn from_ratio(r: &BigRational, d: FieldDescriptor) -> Self {
        match d {
            FieldDescriptor::Real64 => Scalar::Real(r.to_f64().unwrap_or(f64::NAN)),
            FieldDescriptor::Rational => Scalar::Rational(r.clone()),
            FieldDescriptor::Padic { p, precision } => {
                Scalar::Padic(Padic::from_ratio(r, p, precision))
            }
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            Scalar::Real(_) => FieldDescriptor::Real64,
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Padic(x) => FieldDescriptor::Padic {
                p: x.p,
                precision: x.cap,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Real(x) => *x == 0.0,
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Padic(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.descriptor())
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.descriptor() == other.descriptor() {
            Ok(())
        } else {
            Err(Error::mismatch(self.descriptor(), other.descriptor()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Real(a), Scalar::Real(b)) => Scalar::Real(a + b),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Padic(a), Scalar::Padic(b)) => Scalar::Padic(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Real(a), Scalar::Real(b)) => Scalar::Real(a * b),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Padic(a), Scalar::Padic(b)) => Scalar::Padic(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn negate(&self) -> Scalar {
        match self {
            Scalar::Real(a) => Scalar::Real(-a),
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Padic(a) => Scalar::Padic(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Real(a) => Scalar::Real(1.0 / a),
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Padic(a) => Scalar::Padic(a.inverse().expect("nonzero")),
        })
    }

    /// `|x|`: absolute value for real and rational fields, `p^-v` for p-adics.
    pub fn norm(&self) -> f64 {
        match self {
            Scalar::Real(a) => a.abs(),
            Scalar::Rational(a) => a.abs().to_f64().unwrap_or(f64::INFINITY),
            Scalar::Padic(a) => a.norm(),
        }
    }

    pub fn exact_norm(&self) -> Option<BigRational> {
        match self {
            Scalar::Real(_) => None,
            Scalar::Rational(a) => Some(a.abs()),
            Scalar::Padic(a) => Some(a.exact_norm()),
        }
    }

    pub fn parse(text: &str, d: FieldDescriptor) -> Result<Scalar> {
        parse_scalar(text, d)
    }
}

pub fn scalar_arith(op: ScalarOp, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    match op {
        ScalarOp::Add => x.try_add(y),
        ScalarOp::Sub => x.try_sub(y),
        ScalarOp::Mul => x.try_mul(y),
        ScalarOp::Neg => {
            x.check(y)?;
            Ok(x.negate())
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Real(a), Scalar::Real(b)) => a == b,
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Padic(a), Scalar::Padic(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Real(a) if *a == 0.0 => f.write_str("0"),
            Scalar::Real(a) => write!(f, "{a}"),
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Padic(a) => write!(f, "{a}"),
        }
    }
}

impl Coefficient for Scalar {
    type Descriptor = FieldDescriptor;

    fn descriptor(&self) -> FieldDescriptor {
        Scalar::descriptor(self)
    }

    fn zero(d: FieldDescriptor) -> Self {
        Scalar::zero(d)
    }

    fn one(d: FieldDescriptor) -> Self {
        Scalar::one(d)
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs)
            .expect("scalars of one element share a field")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs)
            .expect("scalars of one element share a field")
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs)
            .expect("scalars of one element share a field")
    }

    fn neg(&self) -> Self {
        self.negate()
    }

    fn add_assign(&mut self, rhs: &Self) {
        match (self, rhs) {
            (Scalar::Real(a), Scalar::Real(b)) => *a += b,
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (this, rhs) => *this = Coefficient::add(this, rhs),
        }
    }

    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn norm(&self) -> f64 {
        Scalar::norm(self)
    }

    fn exact_norm(&self) -> Option<BigRational> {
        Scalar::exact_norm(self)
    }

    fn is_ultrametric(d: FieldDescriptor) -> bool {
        d.is_non_archimedean()
    }

    fn as_f64(&self) -> Option<f64> {
        match self {
            Scalar::Real(x) => Some(*x),
            _ => None,
        }
    }

    fn from_f64(x: f64, d: FieldDescriptor) -> Option<Self> {
        (d == FieldDescriptor::Real64).then_some(Scalar::Real(x))
    }
}

// ---------------------------------------------------------------------------
// Literal parsing

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn err(&self, message: &str) -> Error {
        Error::parse(self.base + self.pos, message)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn sign(&mut self) -> bool {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        }
    }

    /// `[+-]? digits ('.' digits)?`
    fn decimal(&mut self) -> Result<BigRational> {
        let negative = self.sign();
        let int = self.digits();
        if int.is_empty() {
            return Err(self.err("expected digit"));
        }
        let mut value = BigRational::from_integer(int.parse::<BigInt>().unwrap());
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac = self.digits();
            if frac.is_empty() {
                return Err(self.err("expected digit after '.'"));
            }
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            value += BigRational::new(frac.parse::<BigInt>().unwrap(), scale);
        }
        Ok(if negative { -value } else { value })
    }

    /// `decimal ('/' decimal)?`
    fn fraction(&mut self) -> Result<BigRational> {
        let num = self.decimal()?;
        if self.peek() != Some(b'/') {
            return Ok(num);
        }
        self.pos += 1;
        let at = self.pos;
        let den = self.decimal()?;
        if den.is_zero() {
            return Err(Error::parse(self.base + at, "zero denominator"));
        }
        Ok(num / den)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let negative = self.sign();
        let d = self.digits();
        if d.is_empty() {
            return Err(self.err("expected digit"));
        }
        let v: i64 = d
            .parse()
            .map_err(|_| Error::parse(self.base + start, "integer out of range"))?;
        Ok(if negative { -v } else { v })
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("unexpected character"))
        }
    }
}

/// Exact literal: integer, decimal or `a/b`.
pub fn parse_exact(text: &str) -> Result<BigRational> {
    let mut c = Cursor {
        text,
        pos: 0,
        base: 0,
    };
    let r = c.fraction()?;
    c.finish()?;
    Ok(r)
}

fn parse_real(text: &str) -> Result<f64> {
    let part = |s: &str, base: usize| -> Result<f64> {
        if let Some(i) = s
            .bytes()
            .position(|b| !(b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-')))
        {
            return Err(Error::parse(base + i, "unexpected character"));
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(Error::parse(base, "malformed decimal literal")),
        }
    };
    match text.find('/') {
        Some(i) => {
            let den = part(&text[i + 1..], i + 1)?;
            if den == 0.0 {
                return Err(Error::parse(i + 1, "zero denominator"));
            }
            Ok(part(&text[..i], 0)? / den)
        }
        None => part(text, 0),
    }
}

/// Parses a scalar literal in field `d`.
///
/// All fields accept integers, decimals and `a/b` fractions; real64 also
/// takes exponent notation, and p-adic fields take `p^v*u` and `p^v`.
pub fn parse_scalar(text: &str, d: FieldDescriptor) -> Result<Scalar> {
    if text.is_empty() {
        return Err(Error::parse(0, "empty literal"));
    }
    match d {
        FieldDescriptor::Real64 => parse_real(text).map(Scalar::Real),
        FieldDescriptor::Rational => parse_exact(text).map(Scalar::Rational),
        FieldDescriptor::Padic { p, precision } => {
            let Some(caret) = text.find('^') else {
                return parse_exact(text)
                    .map(|r| Scalar::Padic(Padic::from_ratio(&r, p, precision)));
            };
            let base: u64 = text[..caret]
                .parse()
                .map_err(|_| Error::parse(0, "expected prime base"))?;
            if base != p {
                return Err(Error::parse(0, format!("base must be the prime {p}")));
            }
            let mut c = Cursor {
                text: &text[caret + 1..],
                pos: 0,
                base: caret + 1,
            };
            let v = c.integer()?;
            let unit = if c.peek() == Some(b'*') {
                c.pos += 1;
                c.fraction()?
            } else {
                BigRational::one()
            };
            c.finish()?;
            Ok(Scalar::Padic(
                Padic::from_ratio(&unit, p, precision).shift(v),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(n, FieldDescriptor::Rational)
    }

    fn p3() -> FieldDescriptor {
        FieldDescriptor::padic(3, DEFAULT_PADIC_PRECISION).unwrap()
    }

    #[test]
    fn rational_arith() {
        assert_eq!(scalar_arith(ScalarOp::Add, &q(2), &q(3)).unwrap(), q(5));
        let x = Scalar::parse("-7/3", FieldDescriptor::Rational).unwrap();
        assert_eq!(Coefficient::mul(&q(1), &x), x);
        assert_eq!(q(-3).norm(), 3.0);
        assert_eq!(q(2).inv().unwrap().to_string(), "1/2");
        assert_eq!(q(1).inv().unwrap(), q(1));
    }

    #[test]
    fn padic_add_carries_valuation() {
        let d = p3();
        let s = Scalar::from_integer(3, d)
            .try_add(&Scalar::from_integer(6, d))
            .unwrap();
        match &s {
            Scalar::Padic(x) => assert_eq!(x.valuation(), Some(2)),
            _ => panic!(),
        }
        assert_eq!(s, Scalar::from_integer(9, d));
        assert_eq!(s.norm(), 1.0 / 9.0);
    }

    #[test]
    fn padic_inverse_of_three_mod_625() {
        let d = FieldDescriptor::padic(5, 4).unwrap();
        let inv = Scalar::from_integer(3, d).inv().unwrap();
        let Scalar::Padic(x) = &inv else { panic!() };
        assert_eq!(x.unit().unwrap(), &BigUint::from(417u32));
        assert_eq!(x.valuation(), Some(0));
        // 417 = 2 + 3*5 + 1*5^2 + 3*5^3
        assert_eq!(2 + 3 * 5 + 25 + 3 * 125, 417);
        assert_eq!(3 * 417 % 625, 1);
    }

    #[test]
    fn parse_forms() {
        let r = Scalar::parse("3/2", FieldDescriptor::Rational).unwrap();
        let Scalar::Rational(x) = &r else { panic!() };
        assert_eq!(x.numer(), &BigInt::from(3));
        assert_eq!(x.denom(), &BigInt::from(2));
        for d in [FieldDescriptor::Real64, FieldDescriptor::Rational, p3()] {
            assert!(Scalar::parse("0", d).unwrap().is_zero());
        }
        let s = Scalar::parse("3^2*4", p3()).unwrap();
        let Scalar::Padic(x) = &s else { panic!() };
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.unit().unwrap(), &BigUint::from(4u32));
        assert_eq!(s, Scalar::from_integer(36, p3()));
        assert_eq!(s.norm(), 1.0 / 9.0);
        assert_eq!(Scalar::parse("3^-1", p3()).unwrap().norm(), 3.0);
        assert_eq!(
            Scalar::parse("1e-3", FieldDescriptor::Real64).unwrap(),
            Scalar::Real(1e-3)
        );
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let e = Scalar::parse("12x", FieldDescriptor::Rational).unwrap_err();
        assert_eq!(e, Error::parse(2, "unexpected character"));
        assert!(matches!(
            Scalar::parse("1/0", FieldDescriptor::Rational),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            Scalar::parse("5^2", p3()),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            Scalar::parse("3^x", p3()),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(Scalar::parse("1.", FieldDescriptor::Real64).is_ok());
        assert!(matches!(
            Scalar::parse("1a", FieldDescriptor::Real64),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            Scalar::parse("", FieldDescriptor::Real64),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        assert_eq!(q(0).inv().unwrap_err(), Error::DivisionByZero);
        assert!(matches!(
            q(1).try_add(&Scalar::one(FieldDescriptor::Real64)),
            Err(Error::DescriptorMismatch { .. })
        ));
        let other = FieldDescriptor::padic(3, 10).unwrap();
        assert!(Scalar::one(p3()).try_mul(&Scalar::one(other)).is_err());
    }

    #[test]
    fn descriptor_json() {
        assert_eq!(p3().to_json(), r#"{"kind":"padic","p":3,"precision":20}"#);
        assert_eq!(
            FieldDescriptor::Rational.to_json(),
            r#"{"kind":"rational"}"#
        );
        assert_eq!(
            FieldDescriptor::from_json(r#"{"kind":"real64"}"#).unwrap(),
            FieldDescriptor::Real64
        );
        assert!(FieldDescriptor::from_json(r#"{"kind":"padic","p":4,"precision":3}"#).is_err());
        assert!(FieldDescriptor::padic(7, 0).is_err());
    }

    #[test]
    fn characteristic_is_not_two() {
        for d in [
            FieldDescriptor::Real64,
            FieldDescriptor::Rational,
            p3(),
            FieldDescriptor::padic(2, 8).unwrap(),
        ] {
            let two = Coefficient::add(&Scalar::one(d), &Scalar::one(d));
            assert!(!two.is_zero());
            assert_ne!(Scalar::zero(d), Scalar::one(d));
            assert_eq!(d.characteristic(), 0);
        }
    }

    #[test]
    fn padic_display_round_trips() {
        let d = p3();
        for n in [-40i64, -3, -1, 1, 2, 36, 81, 1000] {
            let s = Scalar::from_integer(n, d);
            assert_eq!(s.to_string(), n.to_string());
            assert_eq!(Scalar::parse(&s.to_string(), d).unwrap(), s);
        }
        let third = Scalar::parse("-2/9", d).unwrap();
        assert_eq!(third.to_string(), "-2/9");
    }

    #[test]
    fn padic_cancellation_tracks_precision() {
        let d = FieldDescriptor::padic(3, 5).unwrap();
        // 1 - 1 cancels completely
        assert!(Scalar::from_integer(1, d)
            .try_sub(&Scalar::from_integer(1, d))
            .unwrap()
            .is_zero());
        // -4 + 1 = -3 loses one digit
        let s = Scalar::from_integer(-4, d)
            .try_add(&Scalar::from_integer(1, d))
            .unwrap();
        let Scalar::Padic(x) = &s else { panic!() };
        assert_eq!(x.valuation(), Some(1));
        assert_eq!(x.significant_digits(), Some(4));
        assert_eq!(s, Scalar::from_integer(-3, d));
    }
}
