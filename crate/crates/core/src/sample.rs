//! Seeded random sampling of scalars, elements and tensors.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Grade, GrassmannElement};
use crate::extension::{BScalar, CommutativeAlgebraDescriptor};
use crate::field::{FieldDescriptor, Scalar};
use crate::monomial::{GeneratorLabel, Monomial};
use crate::ordering::OrderingFunction;
use crate::tensor::{TensorElement, TensorNorm, VectorElement, Word};

/// Bounds for random elements: labels are drawn from `0..labels`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub labels: u64,
    pub max_terms: usize,
    pub max_degree: usize,
}

impl Shape {
    pub const fn new(labels: u64, max_terms: usize, max_degree: usize) -> Self {
        Shape {
            labels,
            max_terms,
            max_degree,
        }
    }
}

impl Default for Shape {
    fn default() -> Self {
        Shape::new(8, 6, 4)
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Small rational with a numerator in `[-9, 9]` and denominator in `[1, 4]`,
    /// scaled by `p^v` (|v| ≤ 2) in the p-adic case so norms vary.
    pub fn scalar(&mut self, field: FieldDescriptor) -> Scalar {
        match field {
            FieldDescriptor::Real64 => Scalar::Real(self.rng.gen_range(-4.0..4.0)),
            FieldDescriptor::Rational => Scalar::from_ratio(&self.small_ratio(), field),
            FieldDescriptor::Padic { p, .. } => {
                let v: i32 = self.rng.gen_range(-2..=2);
                let pk = BigRational::from_integer(BigInt::from(p)).pow(v);
                Scalar::from_ratio(&(self.small_ratio() * pk), field)
            }
        }
    }

    pub fn nonzero_scalar(&mut self, field: FieldDescriptor) -> Scalar {
        loop {
            let s = self.scalar(field);
            if !s.is_zero() {
                return s;
            }
        }
    }

    fn small_ratio(&mut self) -> BigRational {
        let n: i64 = self.rng.gen_range(-9..=9);
        let d: i64 = self.rng.gen_range(1..=4);
        BigRational::new(n.into(), d.into())
    }

    pub fn grade(&mut self) -> Grade {
        if self.rng.gen_bool(0.5) {
            Grade::Odd
        } else {
            Grade::Even
        }
    }

    pub fn label(&mut self, labels: u64) -> GeneratorLabel {
        GeneratorLabel(self.rng.gen_range(0..labels))
    }

    /// Uniform size in `0..=max_degree` (capped by the label count), then a
    /// uniform subset of that size.
    pub fn monomial(&mut self, labels: u64, max_degree: usize) -> Monomial {
        let cap = max_degree.min(labels as usize);
        let k = self.rng.gen_range(0..=cap);
        self.monomial_of_size(labels, k)
    }

    pub fn monomial_of_size(&mut self, labels: u64, k: usize) -> Monomial {
        Monomial::new(
            index::sample(&mut self.rng, labels as usize, k)
                .into_iter()
                .map(|i| i as u64),
        )
    }

    /// A random element with up to `max_terms` terms; may be zero.
    pub fn element(
        &mut self,
        field: FieldDescriptor,
        ordering: &OrderingFunction,
        shape: Shape,
    ) -> GrassmannElement {
        let n = self.rng.gen_range(0..=shape.max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| {
                (
                    self.monomial(shape.labels, shape.max_degree),
                    self.scalar(field),
                )
            })
            .collect();
        GrassmannElement::from_terms(terms, field, ordering.clone()).expect("sampled in one field")
    }

    pub fn nonzero_element(
        &mut self,
        field: FieldDescriptor,
        ordering: &OrderingFunction,
        shape: Shape,
    ) -> GrassmannElement {
        loop {
            let a = self.element(field, ordering, shape);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// An element whose body is a chosen nonzero or zero scalar.
    pub fn element_with_body(
        &mut self,
        field: FieldDescriptor,
        ordering: &OrderingFunction,
        shape: Shape,
        invertible: bool,
    ) -> GrassmannElement {
        let soul = self.element(field, ordering, shape).soul();
        if !invertible {
            return soul;
        }
        let body = GrassmannElement::term(
            Monomial::empty(),
            self.nonzero_scalar(field),
            ordering.clone(),
        );
        soul.add(&body).expect("same field and ordering")
    }

    /// A nonzero element whose monomials all have the given parity.
    pub fn homogeneous(
        &mut self,
        field: FieldDescriptor,
        ordering: &OrderingFunction,
        shape: Shape,
        grade: Grade,
    ) -> GrassmannElement {
        loop {
            let n = self.rng.gen_range(1..=shape.max_terms.max(1));
            let mut terms = Vec::with_capacity(n);
            while terms.len() < n {
                let m = self.monomial(shape.labels, shape.max_degree);
                if m.len() % 2 == grade.index() as usize {
                    terms.push((m, self.scalar(field)));
                }
            }
            let a = GrassmannElement::from_terms(terms, field, ordering.clone())
                .expect("sampled in one field");
            if !a.is_zero() {
                return a;
            }
        }
    }

    pub fn vector(
        &mut self,
        field: FieldDescriptor,
        mode: TensorNorm,
        labels: u64,
        max_terms: usize,
    ) -> VectorElement {
        let n = self.rng.gen_range(1..=max_terms.max(1));
        let coeffs: Vec<_> = (0..n)
            .map(|_| (self.label(labels), self.scalar(field)))
            .collect();
        VectorElement::new(coeffs, field, mode).expect("mode checked by caller")
    }

    /// Random word of length `0..=max_grade`; labels may repeat.
    pub fn word(&mut self, labels: u64, max_grade: usize) -> Word {
        let k = self.rng.gen_range(0..=max_grade);
        Word::new((0..k).map(|_| self.rng.gen_range(0..labels)))
    }

    pub fn tensor(
        &mut self,
        field: FieldDescriptor,
        mode: TensorNorm,
        labels: u64,
        max_terms: usize,
        max_grade: usize,
    ) -> TensorElement {
        let n = self.rng.gen_range(0..=max_terms);
        let words: Vec<_> = (0..n)
            .map(|_| (self.word(labels, max_grade), self.scalar(field)))
            .collect();
        TensorElement::from_words(words, field, mode).expect("mode checked by caller")
    }

    /// A random element of `K[t]/(t^N)`; `constant_term` forces the `t⁰`
    /// coefficient to be nonzero (`Some(true)`) or zero (`Some(false)`).
    pub fn b_scalar(
        &mut self,
        descriptor: CommutativeAlgebraDescriptor,
        constant_term: Option<bool>,
    ) -> BScalar {
        let base = descriptor.base;
        let coeffs = (0..descriptor.degree_bound)
            .map(|j| match (j, constant_term) {
                (0, Some(true)) => self.nonzero_scalar(base),
                (0, Some(false)) => Scalar::zero(base),
                _ => self.scalar(base),
            })
            .collect();
        BScalar::new(coeffs, descriptor).expect("coefficients in the base field")
    }

    /// A random element of `G(M, B)`; `invertible` controls whether the
    /// body's constant term is nonzero.
    pub fn b_element(
        &mut self,
        descriptor: CommutativeAlgebraDescriptor,
        ordering: &OrderingFunction,
        shape: Shape,
        invertible: Option<bool>,
    ) -> GrassmannElement<BScalar> {
        let n = self.rng.gen_range(0..=shape.max_terms);
        let mut terms: Vec<_> = (0..n)
            .map(|_| {
                let mut m = self.monomial(shape.labels, shape.max_degree);
                if invertible.is_some() && m.is_empty() {
                    m = self.monomial_of_size(shape.labels, 1);
                }
                (m, self.b_scalar(descriptor, None))
            })
            .collect();
        if let Some(inv) = invertible {
            terms.push((Monomial::empty(), self.b_scalar(descriptor, Some(inv))));
        }
        GrassmannElement::from_terms(terms, descriptor, ordering.clone())
            .expect("sampled in one algebra")
    }

    /// A random finite ordering table over `0..labels` with up to `entries`
    /// overridden sets.
    pub fn ordering(&mut self, labels: u64, entries: usize, max_degree: usize) -> OrderingFunction {
        let mut seen = std::collections::BTreeSet::new();
        let mut tuples = Vec::new();
        for _ in 0..entries {
            let k = self
                .rng
                .gen_range(2..=max_degree.max(2).min(labels as usize));
            let mut tuple: Vec<u64> = index::sample(&mut self.rng, labels as usize, k)
                .into_iter()
                .map(|i| i as u64)
                .collect();
            if seen.insert(Monomial::new(tuple.iter().copied())) {
                rand::seq::SliceRandom::shuffle(tuple.as_mut_slice(), &mut self.rng);
                tuples.push(tuple);
            }
        }
        OrderingFunction::table(tuples).expect("one tuple per set")
    }
}
