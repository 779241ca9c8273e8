//! Tensor Banach algebras over the coordinate spaces `ℓ₁(M, K)` and
//! `ℓ∞(M, K)`, and the quotient homomorphism onto the Grassmann algebra.
//!
//! On these model spaces the projective norm of a finitely supported tensor
//! is the ℓ₁ norm of its coefficients (`ℓ₁(M)⊗̂ℓ₁(M) ≅ ℓ₁(M×M)`), and the
//! injective norm over a non-Archimedean field is the sup of its
//! coefficients. The full tensor norm sums (projective) or takes the sup
//! (injective) across grades, which again reduces to a coefficient norm.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{GrassmannAlgebra, GrassmannElement, NormKind};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::monomial::{permutation_parity, GeneratorLabel, Monomial};
use crate::ring::Coefficient;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorNorm {
    Projective,
    Injective,
}

impl TensorNorm {
    /// Norm on the Grassmann algebra the quotient lands in.
    pub fn grassmann_norm(self) -> NormKind {
        match self {
            TensorNorm::Projective => NormKind::L1,
            TensorNorm::Injective => NormKind::Linf,
        }
    }

    fn check(self, field: FieldDescriptor) -> Result<()> {
        if self == TensorNorm::Injective && !field.is_non_archimedean() {
            return Err(Error::NotUltrametric);
        }
        Ok(())
    }
}

/// A tuple `(α₁, …, α_k)` indexing the basis tensor `e_{α₁}⊗…⊗e_{α_k}`.
/// Labels may repeat. The empty word is the grade-0 unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<GeneratorLabel>);

impl Word {
    pub fn new<L: Into<GeneratorLabel>>(labels: impl IntoIterator<Item = L>) -> Self {
        Word(labels.into_iter().map(Into::into).collect())
    }

    pub fn labels(&self) -> &[GeneratorLabel] {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A finitely supported vector of `E = ℓ₁(M, K)` or `ℓ∞(M, K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorElement {
    field: FieldDescriptor,
    mode: TensorNorm,
    coeffs: BTreeMap<GeneratorLabel, Scalar>,
}

impl VectorElement {
    /// `mode` is `Projective` for ℓ₁ and `Injective` for ℓ∞.
    pub fn new(
        coeffs: impl IntoIterator<Item = (GeneratorLabel, Scalar)>,
        field: FieldDescriptor,
        mode: TensorNorm,
    ) -> Result<Self> {
        mode.check(field)?;
        let mut map: BTreeMap<GeneratorLabel, Scalar> = BTreeMap::new();
        for (l, c) in coeffs {
            if c.descriptor() != field {
                return Err(Error::mismatch(c.descriptor(), field));
            }
            let entry = map.entry(l).or_insert_with(|| Scalar::zero(field));
            entry.add_assign(&c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(VectorElement {
            field,
            mode,
            coeffs: map,
        })
    }

    pub fn norm(&self) -> f64 {
        let norms = self.coeffs.values().map(Scalar::norm);
        match self.mode {
            TensorNorm::Projective => norms.sum(),
            TensorNorm::Injective => norms.fold(0.0, f64::max),
        }
    }

    /// The vector as a grade-1 tensor.
    pub fn to_tensor(&self) -> TensorElement {
        TensorElement {
            field: self.field,
            mode: self.mode,
            words: self
                .coeffs
                .iter()
                .map(|(l, c)| (Word(vec![*l]), c.clone()))
                .collect(),
        }
    }

    /// `v ⊗ v`, a generator of the ideal the quotient kills.
    pub fn square(&self) -> TensorElement {
        let t = self.to_tensor();
        t.tensor_mul(&t).expect("same field and mode")
    }
}

/// A finitely supported element `(a₀, a₁, …)` of the tensor algebra; the
/// grade-k component is carried by the words of length k.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    field: FieldDescriptor,
    mode: TensorNorm,
    words: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero(field: FieldDescriptor, mode: TensorNorm) -> Result<Self> {
        mode.check(field)?;
        Ok(TensorElement {
            field,
            mode,
            words: BTreeMap::new(),
        })
    }

    pub fn unit(field: FieldDescriptor, mode: TensorNorm) -> Result<Self> {
        TensorElement::from_words([(Word::default(), Scalar::one(field))], field, mode)
    }

    pub fn from_words(
        words: impl IntoIterator<Item = (Word, Scalar)>,
        field: FieldDescriptor,
        mode: TensorNorm,
    ) -> Result<Self> {
        let mut out = TensorElement::zero(field, mode)?;
        for (w, c) in words {
            if c.descriptor() != field {
                return Err(Error::mismatch(c.descriptor(), field));
            }
            out.words
                .entry(w)
                .or_insert_with(|| Scalar::zero(field))
                .add_assign(&c);
        }
        out.words.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn mode(&self) -> TensorNorm {
        self.mode
    }

    pub fn words(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.words.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    fn check(&self, other: &TensorElement) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        if self.field != other.field {
            return Err(Error::mismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        TensorElement::from_words(
            self.words
                .iter()
                .chain(other.words.iter())
                .map(|(w, c)| (w.clone(), c.clone())),
            self.field,
            self.mode,
        )
    }

    pub fn scale(&self, c: &Scalar) -> Result<TensorElement> {
        TensorElement::from_words(
            self.words
                .iter()
                .map(|(w, x)| (w.clone(), Coefficient::mul(c, x))),
            self.field,
            self.mode,
        )
    }

    /// Concatenation product: `(x·y)(w) = Σ_{w = u·v} x(u) y(v)`.
    pub fn tensor_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        let mut words: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (u, a) in &self.words {
            for (v, b) in &other.words {
                words
                    .entry(u.concat(v))
                    .or_insert_with(|| Scalar::zero(self.field))
                    .add_assign(&Coefficient::mul(a, b));
            }
        }
        words.retain(|_, c| !c.is_zero());
        Ok(TensorElement {
            field: self.field,
            mode: self.mode,
            words,
        })
    }

    /// `Σ_k ‖a_k‖` (projective) or `sup_k ‖a_k‖` (injective).
    pub fn norm(&self) -> f64 {
        let norms = self.words.values().map(Scalar::norm);
        match self.mode {
            TensorNorm::Projective => norms.sum(),
            TensorNorm::Injective => norms.fold(0.0, f64::max),
        }
    }

    pub fn exact_norm(&self) -> Option<num_rational::BigRational> {
        let mut acc = num_rational::BigRational::from_integer(0.into());
        for c in self.words.values() {
            let n = c.exact_norm()?;
            acc = match self.mode {
                TensorNorm::Projective => acc + n,
                TensorNorm::Injective => acc.max(n),
            };
        }
        Some(acc)
    }

    /// The quotient homomorphism onto `target`: each word `(α₁, …, α_k)` goes
    /// to the product `e_{α₁}·…·e_{α_k}`, which vanishes on repeated labels.
    pub fn quotient_map(&self, target: &GrassmannAlgebra) -> Result<GrassmannElement> {
        if self.field != target.descriptor() {
            return Err(Error::mismatch(self.field, target.descriptor()));
        }
        if self.mode.grassmann_norm() != target.norm_kind() {
            return Err(Error::ModeMismatch);
        }
        let ordering = target.ordering();
        let mut terms = Vec::with_capacity(self.words.len());
        for (w, c) in &self.words {
            let set = Monomial::new(w.labels().iter().copied());
            if set.len() != w.grade() {
                continue;
            }
            let reference = if set.is_empty() {
                Vec::new()
            } else {
                ordering.order(&set)?
            };
            let sign = permutation_parity(w.labels(), &reference)?;
            terms.push((set, sign.apply(c.clone())));
        }
        target.element(terms)
    }

    /// The section `e_I ↦ ⟨I⟩` of the quotient map.
    pub fn monomial_lift(a: &GrassmannElement, mode: TensorNorm) -> Result<TensorElement> {
        let field = a.descriptor();
        TensorElement::from_words(
            a.terms().map(|(m, c)| {
                let w = if m.is_empty() {
                    Vec::new()
                } else {
                    a.ordering().order(m).expect("nonempty")
                };
                (Word(w), c.clone())
            }),
            field,
            mode,
        )
    }

    /// `{"mode":"projective","words":[{"word":[1,2],"coeff":"1"}]}`.
    pub fn to_json(&self) -> String {
        let doc = TensorJson {
            mode: self.mode,
            words: self
                .words
                .iter()
                .map(|(w, c)| WordJson {
                    word: w.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("tensor serialization is infallible")
    }

    pub fn from_json(text: &str, field: FieldDescriptor) -> Result<Self> {
        let doc: TensorJson =
            serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        let words = doc
            .words
            .into_iter()
            .map(|w| Ok((w.word, Scalar::parse(&w.coeff, field)?)))
            .collect::<Result<Vec<_>>>()?;
        TensorElement::from_words(words, field, doc.mode)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for l in w.labels() {
                write!(f, "⊗e{l}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    word: Word,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    mode: TensorNorm,
    words: Vec<WordJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::OrderingFunction;

    const Q: FieldDescriptor = FieldDescriptor::Rational;

    fn word(v: &[u64], c: i64) -> (Word, Scalar) {
        (Word::new(v.iter().copied()), Scalar::from_integer(c, Q))
    }

    fn tensor(ws: &[(&[u64], i64)]) -> TensorElement {
        TensorElement::from_words(
            ws.iter().map(|(v, c)| word(v, *c)),
            Q,
            TensorNorm::Projective,
        )
        .unwrap()
    }

    #[test]
    fn concatenation() {
        let x = tensor(&[(&[1], 1)]);
        let y = tensor(&[(&[2], 1)]);
        assert_eq!(x.tensor_mul(&y).unwrap(), tensor(&[(&[1, 2], 1)]));
        let one = TensorElement::unit(Q, TensorNorm::Projective).unwrap();
        assert_eq!(one.tensor_mul(&x).unwrap(), x);
        let s = tensor(&[(&[1], 1), (&[2], 1)]);
        assert_eq!(
            s.tensor_mul(&s).unwrap(),
            tensor(&[(&[1, 1], 1), (&[1, 2], 1), (&[2, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn norms() {
        assert_eq!(tensor(&[(&[1, 2], 3)]).norm(), 3.0);
        assert_eq!(tensor(&[(&[1], 2), (&[2, 3], 1)]).norm(), 3.0);
        let p3 = FieldDescriptor::padic(3, 20).unwrap();
        let t = TensorElement::from_words(
            [
                (Word::new([1u64]), Scalar::from_integer(9, p3)),
                (Word::new([2u64, 2]), Scalar::from_integer(3, p3)),
            ],
            p3,
            TensorNorm::Injective,
        )
        .unwrap();
        assert_eq!(t.norm(), 1.0 / 3.0);
        assert_eq!(
            TensorElement::zero(FieldDescriptor::Real64, TensorNorm::Injective).unwrap_err(),
            Error::NotUltrametric
        );
    }

    #[test]
    fn quotient_examples() {
        let g = GrassmannAlgebra::l1(Q);
        let e12 = g.basis(Monomial::new([1u64, 2]));
        assert_eq!(tensor(&[(&[1, 2], 1)]).quotient_map(&g).unwrap(), e12);
        assert_eq!(tensor(&[(&[2, 1], 1)]).quotient_map(&g).unwrap(), -&e12);
        assert!(tensor(&[(&[1, 1], 1)]).quotient_map(&g).unwrap().is_zero());
        let v = VectorElement::new(
            [
                (GeneratorLabel(1), Scalar::one(Q)),
                (GeneratorLabel(2), Scalar::one(Q)),
            ],
            Q,
            TensorNorm::Projective,
        )
        .unwrap();
        let sq = v.square();
        assert_eq!(sq.norm(), 4.0);
        assert!(sq.quotient_map(&g).unwrap().is_zero());
    }

    #[test]
    fn quotient_checks_target() {
        let p3 = FieldDescriptor::padic(3, 20).unwrap();
        let linf = GrassmannAlgebra::new(p3, OrderingFunction::Canonical, NormKind::Linf).unwrap();
        let t = TensorElement::unit(p3, TensorNorm::Projective).unwrap();
        assert_eq!(t.quotient_map(&linf).unwrap_err(), Error::ModeMismatch);
        assert!(matches!(
            tensor(&[(&[1], 1)]).quotient_map(&GrassmannAlgebra::l1(FieldDescriptor::Real64)),
            Err(Error::DescriptorMismatch { .. })
        ));
        let x = tensor(&[(&[1], 1)]);
        let y = TensorElement::unit(p3, TensorNorm::Injective).unwrap();
        assert_eq!(x.tensor_mul(&y).unwrap_err(), Error::ModeMismatch);
    }

    #[test]
    fn lift_is_a_section() {
        let g = GrassmannAlgebra::l1(Q);
        let e12 = g.basis(Monomial::new([1u64, 2]));
        let lift = TensorElement::monomial_lift(&e12, TensorNorm::Projective).unwrap();
        assert_eq!(lift, tensor(&[(&[1, 2], 1)]));
        let lift = TensorElement::monomial_lift(&g.unit(), TensorNorm::Projective).unwrap();
        assert_eq!(
            lift,
            TensorElement::unit(Q, TensorNorm::Projective).unwrap()
        );

        let table = OrderingFunction::table([[3u64, 1, 2]]).unwrap();
        let h = GrassmannAlgebra::new(Q, table, NormKind::L1).unwrap();
        let x = h.basis(Monomial::new([1u64, 2, 3]));
        let lift = TensorElement::monomial_lift(&x, TensorNorm::Projective).unwrap();
        assert_eq!(lift, tensor(&[(&[3, 1, 2], 1)]));
        assert_eq!(lift.quotient_map(&h).unwrap(), x);
    }

    #[test]
    fn json_shape() {
        let t = tensor(&[(&[1, 2], 1)]);
        assert_eq!(
            t.to_json(),
            r#"{"mode":"projective","words":[{"word":[1,2],"coeff":"1"}]}"#
        );
        assert_eq!(TensorElement::from_json(&t.to_json(), Q).unwrap(), t);
    }
}
