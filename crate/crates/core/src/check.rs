//! Built-in randomized property suite, run by `grassbanach check`.

use crate::algebra::{Grade, GrassmannAlgebra, GrassmannElement, NormKind, Parity};
use crate::error::{Error, Result};
use crate::expr::{self, OutputFormat, SessionConfig, Value};
use crate::extension::{
    decompose, expand_pure_tensors, pure_tensor_product, CommutativeAlgebraDescriptor,
};
use crate::field::FieldDescriptor;
use crate::monomial::GeneratorLabel;
use crate::ordering::OrderingFunction;
use crate::sample::{Sampler, Shape};
use crate::tensor::{TensorElement, TensorNorm};

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.failure {
            None => write!(f, "ok    {} ({} cases)", self.name, self.cases),
            Some(msg) => write!(f, "FAIL  {}: {}", self.name, msg),
        }
    }
}

type Property = fn(&mut Sampler, usize) -> Result<Option<String>>;

const PROPERTIES: &[(&str, Property)] = &[
    ("generator relations", generator_relations),
    ("associativity and unit", associativity),
    ("l1 submultiplicative", l1_submultiplicative),
    ("linf ultrametric", linf_ultrametric),
    ("supercommutativity", supercommutativity),
    ("inversion", inversion),
    ("trivial annihilator", annihilator),
    ("tensor quotient", tensor_quotient),
    ("reorder and relabel", isomorphisms),
    ("scalar extension", scalar_extension),
    ("render/parse round trip", round_trip),
];

fn fields() -> [FieldDescriptor; 3] {
    [
        FieldDescriptor::Rational,
        FieldDescriptor::padic(3, 20).expect("3 is prime"),
        FieldDescriptor::Real64,
    ]
}

/// Runs every property with `cases` samples each.
pub fn run_all(seed: u64, cases: usize) -> Vec<CheckOutcome> {
    PROPERTIES
        .iter()
        .enumerate()
        .map(|(i, (name, prop))| {
            let mut s = Sampler::new(seed.wrapping_add(i as u64));
            let failure = match prop(&mut s, cases) {
                Ok(f) => f,
                Err(e) => Some(e.to_string()),
            };
            CheckOutcome {
                name,
                cases,
                failure,
            }
        })
        .collect()
}

fn fail(msg: String) -> Result<Option<String>> {
    Ok(Some(msg))
}

fn generator_relations(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    for field in fields() {
        let alg: GrassmannAlgebra = GrassmannAlgebra::l1(field);
        for _ in 0..cases {
            let (a, b) = (s.label(1 << 20), s.label(1 << 20));
            let (x, y) = (alg.generator(a), alg.generator(b));
            if !x.mul(&y)?.add(&y.mul(&x)?)?.is_zero() || !x.mul(&x)?.is_zero() {
                return fail(format!("e{}, e{} over {field:?}", a.0, b.0));
            }
        }
    }
    Ok(None)
}

fn associativity(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    for field in [FieldDescriptor::Rational, FieldDescriptor::padic(5, 20)?] {
        let ord = s.ordering(6, 3, 4);
        let e = GrassmannElement::unit(field, ord.clone());
        for _ in 0..cases {
            let [a, b, c] = [(); 3].map(|_| s.element(field, &ord, Shape::new(6, 4, 3)));
            if a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)? {
                return fail(format!("(ab)c != a(bc) for a = {a}, b = {b}, c = {c}"));
            }
            if a.mul(&b.add(&c)?)? != a.mul(&b)?.add(&a.mul(&c)?)? {
                return fail(format!("a(b+c) != ab+ac for a = {a}, b = {b}, c = {c}"));
            }
            if e.mul(&a)? != a || a.mul(&e)? != a {
                return fail(format!("unit law for {a}"));
            }
        }
    }
    Ok(None)
}

fn l1_submultiplicative(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    for field in fields() {
        let alg: GrassmannAlgebra = GrassmannAlgebra::l1(field);
        if alg.norm(&alg.unit()) != 1.0 {
            return fail(format!("unit norm over {field:?}"));
        }
        for _ in 0..cases {
            let a = s.element(field, &OrderingFunction::Canonical, Shape::default());
            let b = s.element(field, &OrderingFunction::Canonical, Shape::default());
            let ab = a.mul(&b)?;
            let ok = match (ab.exact_norm_l1(), a.exact_norm_l1(), b.exact_norm_l1()) {
                (Some(nab), Some(na), Some(nb)) => nab <= na * nb,
                _ => ab.norm_l1() <= a.norm_l1() * b.norm_l1() * (1.0 + 1e-9),
            };
            if !ok {
                return fail(format!("||ab|| > ||a|| ||b|| for a = {a}, b = {b}"));
            }
        }
    }
    Ok(None)
}

fn linf_ultrametric(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    if GrassmannAlgebra::<crate::field::Scalar>::new(
        FieldDescriptor::Real64,
        OrderingFunction::Canonical,
        NormKind::Linf,
    )
    .is_ok()
    {
        return fail("linf algebra over real64 was accepted".into());
    }
    let field = FieldDescriptor::padic(3, 20)?;
    for _ in 0..cases {
        let a = s.element(field, &OrderingFunction::Canonical, Shape::default());
        let b = s.element(field, &OrderingFunction::Canonical, Shape::default());
        let norm = |x: &GrassmannElement| x.exact_norm_linf().expect("p-adic norms are exact");
        if norm(&a.mul(&b)?) > norm(&a) * norm(&b) {
            return fail(format!(
                "||ab||inf > ||a||inf ||b||inf for a = {a}, b = {b}"
            ));
        }
    }
    Ok(None)
}

fn supercommutativity(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    let field = FieldDescriptor::Rational;
    let ord = OrderingFunction::Canonical;
    for _ in 0..cases {
        let (i, j) = (s.grade(), s.grade());
        let a = s.homogeneous(field, &ord, Shape::default(), i);
        let b = s.homogeneous(field, &ord, Shape::default(), j);
        let ab = a.mul(&b)?;
        let ba = b.mul(&a)?;
        let expected = if i == Grade::Odd && j == Grade::Odd {
            ba.neg()
        } else {
            ba
        };
        if ab != expected {
            return fail(format!("a = {a}, b = {b} do not supercommute"));
        }
        let want = if (i.index() + j.index()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        if !ab.is_zero() && ab.parity() != want {
            return fail(format!("parity of {ab} is not {want}"));
        }
    }
    Ok(None)
}

fn inversion(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    let shape = Shape::new(8, 6, 4);
    for field in fields() {
        let ord = OrderingFunction::Canonical;
        let e = GrassmannElement::unit(field, ord.clone());
        for _ in 0..cases {
            let a = s.element_with_body(field, &ord, shape, true);
            let residual = a.mul(&a.invert()?)?.sub(&e)?;
            let ok = match field {
                FieldDescriptor::Real64 => residual.norm_l1() <= 1e-10,
                _ => residual.is_zero(),
            };
            if !ok {
                return fail(format!("a*inv(a) != 1 for a = {a}"));
            }
            let z = s.element_with_body(field, &ord, shape, false);
            if z.invert() != Err(Error::NotInvertible) {
                return fail(format!("{z} was inverted"));
            }
        }
    }
    Ok(None)
}

fn annihilator(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    for field in fields() {
        for _ in 0..cases {
            let a = s.nonzero_element(field, &OrderingFunction::Canonical, Shape::default());
            let w = a.annihilator_witness()?;
            let g = GrassmannElement::generator(w, field, OrderingFunction::Canonical);
            if g.mul(&a)?.is_zero() {
                return fail(format!("e{} annihilates {a}", w.0));
            }
        }
    }
    Ok(None)
}

fn tensor_quotient(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    let field = FieldDescriptor::Rational;
    let alg: GrassmannAlgebra = GrassmannAlgebra::l1(field);
    let mode = TensorNorm::Projective;
    for _ in 0..cases {
        let x = s.tensor(field, mode, 6, 4, 4);
        let y = s.tensor(field, mode, 6, 4, 4);
        let (qx, qy) = (x.quotient_map(&alg)?, y.quotient_map(&alg)?);
        if x.tensor_mul(&y)?.quotient_map(&alg)? != qx.mul(&qy)? {
            return fail(format!("quotient not multiplicative on {x} and {y}"));
        }
        if alg.exact_norm(&qx) > x.exact_norm() {
            return fail(format!("quotient increases the norm of {x}"));
        }
        let v = s.vector(field, mode, 6, 4);
        if !v.square().quotient_map(&alg)?.is_zero() {
            return fail(format!(
                "v (x) v survives the quotient for v = {}",
                v.to_tensor()
            ));
        }
        if TensorElement::monomial_lift(&qx, mode)?.quotient_map(&alg)? != qx {
            return fail(format!("lift is not a section at {qx}"));
        }
    }
    Ok(None)
}

fn isomorphisms(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    let field = FieldDescriptor::Rational;
    let canon = OrderingFunction::Canonical;
    let target = s.ordering(6, 6, 4);
    let shift = |l: GeneratorLabel| GeneratorLabel(3 * l.0 + 1);
    for _ in 0..cases {
        let a = s.element(field, &canon, Shape::new(6, 4, 4));
        let b = s.element(field, &canon, Shape::new(6, 4, 4));
        let ab = a.mul(&b)?;
        if ab.reorder(&target) != a.reorder(&target).mul(&b.reorder(&target))? {
            return fail(format!("reorder not multiplicative on {a} and {b}"));
        }
        if ab.relabel(shift)? != a.relabel(shift)?.mul(&b.relabel(shift)?)? {
            return fail(format!("relabel not multiplicative on {a} and {b}"));
        }
        if a.reorder(&target).exact_norm_l1() != a.exact_norm_l1()
            || a.relabel(shift)?.exact_norm_l1() != a.exact_norm_l1()
        {
            return fail(format!("not isometric at {a}"));
        }
    }
    Ok(None)
}

fn scalar_extension(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    let d = CommutativeAlgebraDescriptor::truncated_poly(FieldDescriptor::Rational, 4)?;
    let ord = OrderingFunction::Canonical;
    for _ in 0..cases {
        let x = s.b_element(d, &ord, Shape::default(), None);
        let y = s.b_element(d, &ord, Shape::default(), None);
        let prod = pure_tensor_product(&decompose(&x), &decompose(&y))?;
        if expand_pure_tensors(&prod, d, ord.clone())? != x.mul(&y)? {
            return fail(format!(
                "expansion does not commute with the product at {x}, {y}"
            ));
        }
        let inv = s.b_element(d, &ord, Shape::default(), Some(true));
        if inv.mul(&inv.invert()?)? != GrassmannElement::unit(d, ord.clone()) {
            return fail(format!("a*inv(a) != 1 for a = {inv}"));
        }
        let sing = s.b_element(d, &ord, Shape::default(), Some(false));
        if sing.invert() != Err(Error::NotInvertible) {
            return fail(format!("{sing} was inverted"));
        }
    }
    Ok(None)
}

fn round_trip(s: &mut Sampler, cases: usize) -> Result<Option<String>> {
    for field in [FieldDescriptor::Rational, FieldDescriptor::padic(7, 12)?] {
        let cfg = SessionConfig::new(
            field,
            NormKind::L1,
            OrderingFunction::Canonical,
            OutputFormat::Text,
        )?;
        for _ in 0..cases {
            let a = s.element(field, &OrderingFunction::Canonical, Shape::default());
            let text = a.to_string();
            match expr::evaluate(&expr::parse_expression(&text)?, &cfg)? {
                Value::Element(b) if b == a => {}
                other => return fail(format!("{text} re-evaluates to {other:?}")),
            }
        }
    }
    Ok(None)
}
