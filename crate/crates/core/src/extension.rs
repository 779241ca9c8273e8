//! Coefficient extension `K ↦ B` for commutative Banach algebras
//! `B = K[t]/(t^N)`.
//!
//! `B ⊗̂ G(M, K)` is identified with `G(M, B)` by expanding pure tensors
//! `b ⊗ g` into `b·g`; the algebra core is generic over its coefficients, so
//! `G(M, B)` is just `GrassmannElement<BScalar>`. With the sup norm on `B`
//! over a p-adic base, the same construction gives `B ⊗̌ G∞(M, K)`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::GrassmannElement;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar, ScalarOp};
use crate::monomial::Monomial;
use crate::ordering::OrderingFunction;
use crate::ring::Coefficient;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    Field,
    TruncatedPoly,
}

/// How `‖c₀ + c₁t + …‖` is computed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientNorm {
    /// `Σ |c_i|`
    Sum,
    /// `max |c_i|`, non-Archimedean bases only
    Sup,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CommutativeAlgebraDescriptor {
    pub kind: AlgebraKind,
    pub base: FieldDescriptor,
    pub degree_bound: u32,
    pub norm: CoefficientNorm,
}

impl CommutativeAlgebraDescriptor {
    /// `B = K`.
    pub fn field(base: FieldDescriptor) -> Self {
        CommutativeAlgebraDescriptor {
            kind: AlgebraKind::Field,
            base,
            degree_bound: 1,
            norm: CoefficientNorm::Sum,
        }
    }

    /// `K[t]/(t^N)` with `‖Σ c_i t^i‖ = Σ |c_i|`.
    pub fn truncated_poly(base: FieldDescriptor, degree_bound: u32) -> Result<Self> {
        if degree_bound == 0 {
            return Err(Error::InvalidDescriptor(
                "degree bound must be at least 1".into(),
            ));
        }
        Ok(CommutativeAlgebraDescriptor {
            kind: AlgebraKind::TruncatedPoly,
            base,
            degree_bound,
            norm: CoefficientNorm::Sum,
        })
    }

    /// `K[t]/(t^N)` with `‖Σ c_i t^i‖ = max |c_i|` over a non-Archimedean `K`.
    pub fn truncated_poly_sup(base: FieldDescriptor, degree_bound: u32) -> Result<Self> {
        if !base.is_non_archimedean() {
            return Err(Error::NotUltrametric);
        }
        Ok(CommutativeAlgebraDescriptor {
            norm: CoefficientNorm::Sup,
            ..CommutativeAlgebraDescriptor::truncated_poly(base, degree_bound)?
        })
    }
}

/// An element `c₀ + c₁t + … + c_{N−1}t^{N−1}` of `K[t]/(t^N)`; trailing zero
/// coefficients are trimmed.
#[derive(Clone, Debug)]
pub struct BScalar {
    descriptor: CommutativeAlgebraDescriptor,
    coeffs: Vec<Scalar>,
}

impl BScalar {
    /// Coefficients at degree `N` and above are dropped (`t^N = 0`).
    pub fn new(coeffs: Vec<Scalar>, descriptor: CommutativeAlgebraDescriptor) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.descriptor() != descriptor.base) {
            return Err(Error::mismatch(c.descriptor(), descriptor.base));
        }
        Ok(BScalar::normalized(coeffs, descriptor))
    }

    fn normalized(mut coeffs: Vec<Scalar>, descriptor: CommutativeAlgebraDescriptor) -> Self {
        coeffs.truncate(descriptor.degree_bound as usize);
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        BScalar { descriptor, coeffs }
    }

    pub fn from_scalar(c: Scalar, descriptor: CommutativeAlgebraDescriptor) -> Result<Self> {
        BScalar::new(vec![c], descriptor)
    }

    /// `t^k`, zero when `k ≥ N`.
    pub fn t_pow(k: u32, descriptor: CommutativeAlgebraDescriptor) -> Self {
        let mut coeffs = vec![Scalar::zero(descriptor.base); k as usize];
        coeffs.push(Scalar::one(descriptor.base));
        BScalar::normalized(coeffs, descriptor)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i`.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.descriptor.base))
    }

    /// Serialized as an array of scalar strings, lowest degree first.
    pub fn to_json(&self) -> String {
        let v: Vec<String> = self.coeffs.iter().map(Scalar::to_string).collect();
        serde_json::to_string(&v).expect("string arrays serialize")
    }

    pub fn from_json(text: &str, descriptor: CommutativeAlgebraDescriptor) -> Result<Self> {
        let v: Vec<String> =
            serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        let coeffs = v
            .iter()
            .map(|s| Scalar::parse(s, descriptor.base))
            .collect::<Result<Vec<_>>>()?;
        BScalar::new(coeffs, descriptor)
    }

    fn zip_with(&self, other: &BScalar, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> BScalar {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f(&self.coeff(i), &other.coeff(i))).collect();
        BScalar::normalized(coeffs, self.descriptor)
    }

    fn product(&self, other: &BScalar) -> BScalar {
        let n = self.descriptor.degree_bound as usize;
        let len = (self.coeffs.len() + other.coeffs.len())
            .saturating_sub(1)
            .min(n);
        let mut out = vec![Scalar::zero(self.descriptor.base); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate().take(n.saturating_sub(i)) {
                out[i + j].add_assign(&Coefficient::mul(a, b));
            }
        }
        BScalar::normalized(out, self.descriptor)
    }
}

/// `x op y` in `K[t]/(t^N)`.
pub fn b_arith(op: ScalarOp, x: &BScalar, y: &BScalar) -> Result<BScalar> {
    if x.descriptor != y.descriptor {
        return Err(Error::mismatch(x.descriptor, y.descriptor));
    }
    Ok(match op {
        ScalarOp::Add => Coefficient::add(x, y),
        ScalarOp::Sub => Coefficient::sub(x, y),
        ScalarOp::Mul => Coefficient::mul(x, y),
        ScalarOp::Neg => Coefficient::neg(x),
    })
}

impl PartialEq for BScalar {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor && self.coeffs == other.coeffs
    }
}

impl fmt::Display for BScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        match pieces.len() {
            0 => f.write_str("0"),
            1 => f.write_str(&pieces[0]),
            _ => write!(f, "({})", pieces.join(" + ")),
        }
    }
}

impl Coefficient for BScalar {
    type Descriptor = CommutativeAlgebraDescriptor;

    fn descriptor(&self) -> CommutativeAlgebraDescriptor {
        self.descriptor
    }

    fn zero(d: CommutativeAlgebraDescriptor) -> Self {
        BScalar {
            descriptor: d,
            coeffs: Vec::new(),
        }
    }

    fn one(d: CommutativeAlgebraDescriptor) -> Self {
        BScalar {
            descriptor: d,
            coeffs: vec![Scalar::one(d.base)],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.descriptor, rhs.descriptor,
            "coefficient algebras differ"
        );
        self.zip_with(rhs, Coefficient::add)
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.descriptor, rhs.descriptor,
            "coefficient algebras differ"
        );
        self.zip_with(rhs, Coefficient::sub)
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.descriptor, rhs.descriptor,
            "coefficient algebras differ"
        );
        self.product(rhs)
    }

    fn neg(&self) -> Self {
        BScalar {
            descriptor: self.descriptor,
            coeffs: self.coeffs.iter().map(Scalar::negate).collect(),
        }
    }

    /// Invertible iff the constant term is; `x = c₀(1 + n)` with `n`
    /// nilpotent gives `x⁻¹ = c₀⁻¹ Σ_{k<N} (−n)^k`.
    fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs.first()?;
        let inv0 = c0.inv().ok()?;
        let d = self.descriptor;
        let mut nil: Vec<Scalar> = self
            .coeffs
            .iter()
            .map(|c| Coefficient::mul(c, &inv0))
            .collect();
        nil[0] = Scalar::zero(d.base);
        let minus_n = Coefficient::neg(&BScalar::normalized(nil, d));
        let mut sum = BScalar::one(d);
        let mut power = BScalar::one(d);
        for _ in 1..d.degree_bound {
            power = power.product(&minus_n);
            if power.is_zero() {
                break;
            }
            sum = Coefficient::add(&sum, &power);
        }
        Some(BScalar::normalized(
            sum.coeffs
                .iter()
                .map(|c| Coefficient::mul(c, &inv0))
                .collect(),
            d,
        ))
    }

    fn norm(&self) -> f64 {
        let norms = self.coeffs.iter().map(Scalar::norm);
        match self.descriptor.norm {
            CoefficientNorm::Sum => norms.sum(),
            CoefficientNorm::Sup => norms.fold(0.0, f64::max),
        }
    }

    fn exact_norm(&self) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for c in &self.coeffs {
            let n = c.exact_norm()?;
            acc = match self.descriptor.norm {
                CoefficientNorm::Sum => acc + n,
                CoefficientNorm::Sup => acc.max(n),
            };
        }
        Some(acc)
    }

    fn is_ultrametric(d: CommutativeAlgebraDescriptor) -> bool {
        d.base.is_non_archimedean() && (d.norm == CoefficientNorm::Sup || d.degree_bound == 1)
    }
}

/// An element of `G(M, B, ⟨.⟩)` from its terms.
pub fn extend(
    terms: impl IntoIterator<Item = (Monomial, BScalar)>,
    descriptor: CommutativeAlgebraDescriptor,
    ordering: OrderingFunction,
) -> Result<GrassmannElement<BScalar>> {
    GrassmannElement::from_terms(terms, descriptor, ordering)
}

/// Embeds `G(M, K)` into `G(M, B)` along `K → B`.
pub fn embed(
    g: &GrassmannElement<Scalar>,
    descriptor: CommutativeAlgebraDescriptor,
) -> Result<GrassmannElement<BScalar>> {
    if g.descriptor() != descriptor.base {
        return Err(Error::mismatch(g.descriptor(), descriptor.base));
    }
    Ok(g.map_coefficients(descriptor, |c| {
        BScalar::normalized(vec![c.clone()], descriptor)
    }))
}

/// `Σ b_i ⊗ g_i ↦ Σ b_i · g_i`.
pub fn expand_pure_tensors(
    tensors: &[(BScalar, GrassmannElement<Scalar>)],
    descriptor: CommutativeAlgebraDescriptor,
    ordering: OrderingFunction,
) -> Result<GrassmannElement<BScalar>> {
    let mut out = GrassmannElement::zero(descriptor, ordering);
    for (b, g) in tensors {
        if b.descriptor != descriptor {
            return Err(Error::mismatch(b.descriptor, descriptor));
        }
        out = out.add(&embed(g, descriptor)?.scale(b)?)?;
    }
    Ok(out)
}

/// Inverse of [`expand_pure_tensors`] onto the basis-aligned form
/// `Σ_j t^j ⊗ g_j`, listing only nonzero `g_j` in increasing `j`.
pub fn decompose(x: &GrassmannElement<BScalar>) -> Vec<(BScalar, GrassmannElement<Scalar>)> {
    let d = x.descriptor();
    (0..d.degree_bound)
        .filter_map(|j| {
            let g = GrassmannElement::from_terms(
                x.terms().map(|(m, b)| (m.clone(), b.coeff(j as usize))),
                d.base,
                x.ordering().clone(),
            )
            .expect("base descriptors agree");
            (!g.is_zero()).then(|| (BScalar::t_pow(j, d), g))
        })
        .collect()
}

/// Componentwise product of two pure-tensor lists:
/// `(b ⊗ g)(b′ ⊗ g′) = bb′ ⊗ gg′`. `B` is purely even, so no sign arises.
pub fn pure_tensor_product(
    left: &[(BScalar, GrassmannElement<Scalar>)],
    right: &[(BScalar, GrassmannElement<Scalar>)],
) -> Result<Vec<(BScalar, GrassmannElement<Scalar>)>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for (b, g) in left {
        for (b2, g2) in right {
            out.push((b_arith(ScalarOp::Mul, b, b2)?, g.mul(g2)?));
        }
    }
    Ok(out)
}
