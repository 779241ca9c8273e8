//! Finitely supported elements of the Grassmann–Banach algebras `G(M, K)`
//! (ℓ₁ norm) and `G∞(M, K)` (sup norm).

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::monomial::{mask_inversion_odd, permutation_parity, GeneratorLabel, Monomial};
use crate::ordering::{epsilon_with_union, OrderingFunction};
use crate::ring::Coefficient;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Grade {
    Even,
    Odd,
}

impl Grade {
    pub fn from_index(i: u8) -> Option<Grade> {
        match i {
            0 => Some(Grade::Even),
            1 => Some(Grade::Odd),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Grade::Even => 0,
            Grade::Odd => 1,
        }
    }

    fn of(m: &Monomial) -> Grade {
        if m.is_even() {
            Grade::Even
        } else {
            Grade::Odd
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    Zero,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
            Parity::Zero => "zero",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormKind {
    /// `Σ |a(I)|`
    L1,
    /// `sup |a(I)|`; only a Banach algebra norm over non-Archimedean fields.
    Linf,
}

/// A finitely supported map `P₀(M) → K`, kept in canonical sparse form: no
/// stored coefficient is zero.
pub struct GrassmannElement<C: Coefficient = Scalar> {
    descriptor: C::Descriptor,
    ordering: OrderingFunction,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Clone for GrassmannElement<C> {
    fn clone(&self) -> Self {
        GrassmannElement {
            descriptor: self.descriptor,
            ordering: self.ordering.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<C: Coefficient> fmt::Debug for GrassmannElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GrassmannElement")
            .field("descriptor", &self.descriptor)
            .field("ordering", &self.ordering)
            .field("terms", &self.terms)
            .finish()
    }
}

impl<C: Coefficient> PartialEq for GrassmannElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
            && self.ordering == other.ordering
            && self.terms == other.terms
    }
}

fn accumulate<K: Hash + Eq, C: Coefficient>(acc: &mut FxHashMap<K, C>, key: K, value: C) {
    match acc.entry(key) {
        Entry::Occupied(mut e) => e.get_mut().add_assign(&value),
        Entry::Vacant(e) => {
            e.insert(value);
        }
    }
}

impl<C: Coefficient> GrassmannElement<C> {
    pub fn zero(descriptor: C::Descriptor, ordering: OrderingFunction) -> Self {
        GrassmannElement {
            descriptor,
            ordering,
            terms: BTreeMap::new(),
        }
    }

    /// `e_I` scaled by `c`.
    pub fn term(set: Monomial, c: C, ordering: OrderingFunction) -> Self {
        let mut out = GrassmannElement::zero(c.descriptor(), ordering);
        if !c.is_zero() {
            out.terms.insert(set, c);
        }
        out
    }

    pub fn basis(set: Monomial, descriptor: C::Descriptor, ordering: OrderingFunction) -> Self {
        GrassmannElement::term(set, C::one(descriptor), ordering)
    }

    /// `e = e_∅`.
    pub fn unit(descriptor: C::Descriptor, ordering: OrderingFunction) -> Self {
        GrassmannElement::basis(Monomial::empty(), descriptor, ordering)
    }

    /// `e_α`.
    pub fn generator(
        label: impl Into<GeneratorLabel>,
        descriptor: C::Descriptor,
        ordering: OrderingFunction,
    ) -> Self {
        GrassmannElement::basis(Monomial::singleton(label), descriptor, ordering)
    }

    /// Sums repeated monomials and drops zero coefficients.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Monomial, C)>,
        descriptor: C::Descriptor,
        ordering: OrderingFunction,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            if c.descriptor() != descriptor {
                return Err(Error::mismatch(c.descriptor(), descriptor));
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Occupied(mut e) => e.get_mut().add_assign(&c),
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(GrassmannElement {
            descriptor,
            ordering,
            terms: map,
        })
    }

    pub fn descriptor(&self) -> C::Descriptor {
        self.descriptor
    }

    pub fn ordering(&self) -> &OrderingFunction {
        &self.ordering
    }

    /// Terms in canonical order: by monomial size, then lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `a(I)`.
    pub fn coefficient(&self, set: &Monomial) -> C {
        self.terms
            .get(set)
            .cloned()
            .unwrap_or_else(|| C::zero(self.descriptor))
    }

    /// Distinct generator labels occurring in the support.
    pub fn generators(&self) -> BTreeSet<GeneratorLabel> {
        self.terms
            .keys()
            .flat_map(|m| m.labels().iter().copied())
            .collect()
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.descriptor != other.descriptor {
            return Err(Error::mismatch(self.descriptor, other.descriptor));
        }
        if self.ordering != other.ordering {
            return Err(Error::OrderingMismatch);
        }
        Ok(())
    }

    fn with_terms(&self, terms: BTreeMap<Monomial, C>) -> Self {
        GrassmannElement {
            descriptor: self.descriptor,
            ordering: self.ordering.clone(),
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    e.get_mut().add_assign(c);
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
            }
        }
        Ok(self.with_terms(terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &C) -> Result<Self> {
        if c.descriptor() != self.descriptor {
            return Err(Error::mismatch(c.descriptor(), self.descriptor));
        }
        Ok(self.scale_unchecked(c))
    }

    fn scale_unchecked(&self, c: &C) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .map(|(m, x)| (m.clone(), c.mul(x)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        )
    }

    /// The product `(a·b)(I) = Σ_{I₁ ∪ I₂ = I} ε(I₁, I₂) a(I₁) b(I₂)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_terms(self.product_terms(other)))
    }

    fn product_terms(&self, other: &Self) -> BTreeMap<Monomial, C> {
        if self.is_zero() || other.is_zero() {
            return BTreeMap::new();
        }
        if self.ordering.is_canonical() {
            if let (Some(a), Some(b)) = (self.masked_terms(), other.masked_terms()) {
                return mask_product(&a, &b, self.descriptor);
            }
        }
        let ordering = &self.ordering;
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        let mut step = |ma: &Monomial, ca: &C, mb: &Monomial, cb: &C| {
            if let Some((union, sign)) = epsilon_with_union(ma, mb, ordering) {
                accumulate(&mut acc, union, sign.apply(ca.mul(cb)));
            }
        };
        // outer loop over the smaller support; accumulation order stays fixed
        // for given inputs since both supports iterate in canonical order
        if self.terms.len() <= other.terms.len() {
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    step(ma, ca, mb, cb);
                }
            }
        } else {
            for (mb, cb) in &other.terms {
                for (ma, ca) in &self.terms {
                    step(ma, ca, mb, cb);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn masked_terms(&self) -> Option<Vec<(u64, &C)>> {
        self.terms
            .iter()
            .map(|(m, c)| m.mask().map(|k| (k, c)))
            .collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = GrassmannElement::unit(self.descriptor, self.ordering.clone());
        for _ in 0..n {
            out = out.with_terms(out.product_terms(self));
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// `‖a‖₁ = Σ |a(I)|`.
    pub fn norm_l1(&self) -> f64 {
        self.terms.values().map(Coefficient::norm).sum()
    }

    /// `‖a‖∞ = sup |a(I)|`.
    pub fn norm_linf(&self) -> f64 {
        self.terms
            .values()
            .map(Coefficient::norm)
            .fold(0.0, f64::max)
    }

    pub fn norm(&self, kind: NormKind) -> f64 {
        match kind {
            NormKind::L1 => self.norm_l1(),
            NormKind::Linf => self.norm_linf(),
        }
    }

    /// The ℓ₁ norm as an exact rational, for coefficient rings that support it.
    pub fn exact_norm_l1(&self) -> Option<BigRational> {
        self.terms
            .values()
            .try_fold(BigRational::zero(), |acc, c| Some(acc + c.exact_norm()?))
    }

    pub fn exact_norm_linf(&self) -> Option<BigRational> {
        self.terms.values().try_fold(BigRational::zero(), |acc, c| {
            let n = c.exact_norm()?;
            Some(if n > acc { n } else { acc })
        })
    }

    pub fn exact_norm(&self, kind: NormKind) -> Option<BigRational> {
        match kind {
            NormKind::L1 => self.exact_norm_l1(),
            NormKind::Linf => self.exact_norm_linf(),
        }
    }

    /// `a⁰ = a(∅)`.
    pub fn body(&self) -> C {
        self.coefficient(&Monomial::empty())
    }

    /// `a − a⁰·e`.
    pub fn soul(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.remove(&Monomial::empty());
        self.with_terms(terms)
    }

    /// Keeps the terms with `|I| ≡ grade (mod 2)`.
    pub fn grade_project(&self, grade: Grade) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(m, _)| Grade::of(m) == grade)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            match Grade::of(m) {
                Grade::Even => even = true,
                Grade::Odd => odd = true,
            }
        }
        match (even, odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Inverse via the terminating Neumann series
    /// `a⁻¹ = a⁰⁻¹ Σ_{k=0..n} (−a⁰⁻¹ s)^k`, `s` the soul and `n` the number of
    /// distinct generators in it (`s^{n+1} = 0`).
    pub fn invert(&self) -> Result<Self> {
        let inv_body = self.body().inverse().ok_or(Error::NotInvertible)?;
        let u = self.soul().scale_unchecked(&inv_body);
        let n = u.generators().len();
        let mut result = GrassmannElement::unit(self.descriptor, self.ordering.clone());
        let mut power = result.clone();
        for k in 1..=n {
            power = power.with_terms(power.product_terms(&u));
            if power.is_zero() {
                break;
            }
            result = if k % 2 == 1 {
                result.sub(&power)?
            } else {
                result.add(&power)?
            };
        }
        Ok(result.scale_unchecked(&inv_body))
    }

    /// A generator `β` with `e_β · a ≠ 0`. Any label outside the support works.
    pub fn annihilator_witness(&self) -> Result<GeneratorLabel> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let used = self.generators();
        match used.last() {
            None => Ok(GeneratorLabel(0)),
            Some(&GeneratorLabel(max)) if max < u64::MAX => Ok(GeneratorLabel(max + 1)),
            Some(_) => {
                let free = (0u64..)
                    .find(|&x| !used.contains(&GeneratorLabel(x)))
                    .expect("finite support leaves free labels");
                Ok(GeneratorLabel(free))
            }
        }
    }

    /// Transports `a` along an injective relabeling of the generators.
    ///
    /// `e_I ↦ sgn(f(⟨I⟩) → ⟨f(I)⟩)·e_{f(I)}`, which is an isometric algebra
    /// homomorphism.
    pub fn relabel(&self, f: impl Fn(GeneratorLabel) -> GeneratorLabel) -> Result<Self> {
        let mut images: HashMap<GeneratorLabel, GeneratorLabel> = HashMap::new();
        for g in self.generators() {
            let image = f(g);
            if let Some(prev) = images.insert(image, g) {
                return Err(Error::NotInjective {
                    first: prev.0,
                    second: g.0,
                    image: image.0,
                });
            }
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let image: Vec<GeneratorLabel> = self
                .ordering
                .order_or_empty(m)
                .into_iter()
                .map(&f)
                .collect();
            let set = Monomial::new(image.iter().copied());
            let sign = permutation_parity(&image, &self.ordering.order_or_empty(&set))?;
            terms.insert(set, sign.apply(c.clone()));
        }
        Ok(self.with_terms(terms))
    }

    /// The isomorphism `G(M, K, ⟨.⟩₁) → G(M, K, ⟨.⟩₂)`,
    /// `e_I ↦ sgn(⟨I⟩₁ → ⟨I⟩₂)·e_I`.
    pub fn reorder(&self, target: &OrderingFunction) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let sign = self.ordering.twist(m) * target.twist(m);
                (m.clone(), sign.apply(c.clone()))
            })
            .collect();
        GrassmannElement {
            descriptor: self.descriptor,
            ordering: target.clone(),
            terms,
        }
    }

    /// Drops terms whose coefficient norm is below `eps`.
    pub fn prune(&self, eps: f64) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(_, c)| !c.is_zero() && c.norm() >= eps)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Applies `f` coefficientwise into another coefficient ring.
    pub fn map_coefficients<D: Coefficient>(
        &self,
        descriptor: D::Descriptor,
        f: impl Fn(&C) -> D,
    ) -> GrassmannElement<D> {
        GrassmannElement {
            descriptor,
            ordering: self.ordering.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

fn mask_product<C: Coefficient>(
    left: &[(u64, &C)],
    right: &[(u64, &C)],
    descriptor: C::Descriptor,
) -> BTreeMap<Monomial, C> {
    if let Some(out) = float_mask_product(left, right, descriptor) {
        return out;
    }
    let mut acc: FxHashMap<u64, C> = FxHashMap::default();
    let (outer, inner, swapped) = if left.len() <= right.len() {
        (left, right, false)
    } else {
        (right, left, true)
    };
    for &(mo, co) in outer {
        for &(mi, ci) in inner {
            if mo & mi != 0 {
                continue;
            }
            let ((ma, ca), (mb, cb)) = if swapped {
                ((mi, ci), (mo, co))
            } else {
                ((mo, co), (mi, ci))
            };
            let c = ca.mul(cb);
            let c = if mask_inversion_odd(ma, mb) {
                c.neg()
            } else {
                c
            };
            accumulate(&mut acc, ma | mb, c);
        }
    }
    collect_masks(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// The same kernel on unboxed floats, for float-backed coefficients.
fn float_mask_product<C: Coefficient>(
    left: &[(u64, &C)],
    right: &[(u64, &C)],
    descriptor: C::Descriptor,
) -> Option<BTreeMap<Monomial, C>> {
    C::from_f64(0.0, descriptor)?;
    let unbox = |side: &[(u64, &C)]| -> Option<Vec<(u64, f64)>> {
        side.iter().map(|&(m, c)| Some((m, c.as_f64()?))).collect()
    };
    let (left, right) = (unbox(left)?, unbox(right)?);
    let (outer, inner, swapped) = if left.len() <= right.len() {
        (&left, &right, false)
    } else {
        (&right, &left, true)
    };
    let mut acc: FxHashMap<u64, f64> = FxHashMap::default();
    for &(mo, co) in outer {
        for &(mi, ci) in inner {
            if mo & mi != 0 {
                continue;
            }
            let (ma, mb) = if swapped { (mi, mo) } else { (mo, mi) };
            let c = co * ci;
            *acc.entry(ma | mb).or_insert(0.0) += if mask_inversion_odd(ma, mb) { -c } else { c };
        }
    }
    let terms = acc
        .into_iter()
        .filter(|&(_, c)| c != 0.0)
        .map(|(m, c)| {
            (
                m,
                C::from_f64(c, descriptor).expect("float-backed descriptor"),
            )
        })
        .collect();
    Some(collect_masks(terms))
}

/// Builds the term map, presorting by a mask key that agrees with monomial
/// order (size, then lexicographic labels) so the map is built in one pass.
fn collect_masks<C>(mut terms: Vec<(u64, C)>) -> BTreeMap<Monomial, C> {
    terms.sort_unstable_by_key(|&(m, _)| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    terms
        .into_iter()
        .map(|(m, c)| (Monomial::from_mask(m), c))
        .collect()
}

impl<C: Coefficient> std::ops::Add for &GrassmannElement<C> {
    type Output = GrassmannElement<C>;

    fn add(self, rhs: Self) -> GrassmannElement<C> {
        GrassmannElement::add(self, rhs).expect("incompatible operands")
    }
}

impl<C: Coefficient> std::ops::Sub for &GrassmannElement<C> {
    type Output = GrassmannElement<C>;

    fn sub(self, rhs: Self) -> GrassmannElement<C> {
        GrassmannElement::sub(self, rhs).expect("incompatible operands")
    }
}

impl<C: Coefficient> std::ops::Mul for &GrassmannElement<C> {
    type Output = GrassmannElement<C>;

    fn mul(self, rhs: Self) -> GrassmannElement<C> {
        GrassmannElement::mul(self, rhs).expect("incompatible operands")
    }
}

impl<C: Coefficient> std::ops::Neg for &GrassmannElement<C> {
    type Output = GrassmannElement<C>;

    fn neg(self) -> GrassmannElement<C> {
        GrassmannElement::neg(self)
    }
}

/// Text form `2 + 3*e1 - e1*e2`, terms in canonical order.
impl<C: Coefficient + fmt::Display> fmt::Display for GrassmannElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let coeff = c.to_string();
            let piece = if m.is_empty() {
                coeff
            } else if coeff == "1" {
                m.to_string()
            } else if coeff == "-1" {
                format!("-{m}")
            } else {
                format!("{coeff}*{m}")
            };
            match (i, piece.strip_prefix('-')) {
                (0, _) => f.write_str(&piece)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {piece}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: Monomial,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    field: FieldDescriptor,
    terms: Vec<TermJson>,
}

impl GrassmannElement<Scalar> {
    /// `{"field":{...},"terms":[{"monomial":[1,2],"coeff":"3/2"},...]}` with
    /// terms in canonical order.
    pub fn to_json(&self) -> String {
        let doc = ElementJson {
            field: self.descriptor,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    monomial: m.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("element serialization is infallible")
    }

    pub fn from_json(text: &str, ordering: OrderingFunction) -> Result<Self> {
        let doc: ElementJson =
            serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        doc.field.validate()?;
        let terms = doc
            .terms
            .into_iter()
            .map(|t| Ok((t.monomial, Scalar::parse(&t.coeff, doc.field)?)))
            .collect::<Result<Vec<_>>>()?;
        GrassmannElement::from_terms(terms, doc.field, ordering)
    }
}

/// An algebra `G(M, K, ⟨.⟩)` or `G∞(M, K, ⟨.⟩)`: a coefficient ring, an
/// ordering function and a choice of norm.
#[derive(Clone, Debug, PartialEq)]
pub struct GrassmannAlgebra<C: Coefficient = Scalar> {
    descriptor: C::Descriptor,
    ordering: OrderingFunction,
    norm: NormKind,
}

impl<C: Coefficient> GrassmannAlgebra<C> {
    /// Fails with `NotUltrametric` for the sup norm over an Archimedean ring.
    pub fn new(
        descriptor: C::Descriptor,
        ordering: OrderingFunction,
        norm: NormKind,
    ) -> Result<Self> {
        if norm == NormKind::Linf && !C::is_ultrametric(descriptor) {
            return Err(Error::NotUltrametric);
        }
        Ok(GrassmannAlgebra {
            descriptor,
            ordering,
            norm,
        })
    }

    pub fn l1(descriptor: C::Descriptor) -> Self {
        GrassmannAlgebra {
            descriptor,
            ordering: OrderingFunction::Canonical,
            norm: NormKind::L1,
        }
    }

    pub fn descriptor(&self) -> C::Descriptor {
        self.descriptor
    }

    pub fn ordering(&self) -> &OrderingFunction {
        &self.ordering
    }

    pub fn norm_kind(&self) -> NormKind {
        self.norm
    }

    pub fn zero(&self) -> GrassmannElement<C> {
        GrassmannElement::zero(self.descriptor, self.ordering.clone())
    }

    pub fn unit(&self) -> GrassmannElement<C> {
        GrassmannElement::unit(self.descriptor, self.ordering.clone())
    }

    pub fn generator(&self, label: impl Into<GeneratorLabel>) -> GrassmannElement<C> {
        GrassmannElement::generator(label, self.descriptor, self.ordering.clone())
    }

    pub fn basis(&self, set: Monomial) -> GrassmannElement<C> {
        GrassmannElement::basis(set, self.descriptor, self.ordering.clone())
    }

    pub fn scalar(&self, c: C) -> Result<GrassmannElement<C>> {
        self.element([(Monomial::empty(), c)])
    }

    pub fn element(
        &self,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<GrassmannElement<C>> {
        GrassmannElement::from_terms(terms, self.descriptor, self.ordering.clone())
    }

    pub fn norm(&self, a: &GrassmannElement<C>) -> f64 {
        a.norm(self.norm)
    }

    pub fn exact_norm(&self, a: &GrassmannElement<C>) -> Option<BigRational> {
        a.exact_norm(self.norm)
    }
}
