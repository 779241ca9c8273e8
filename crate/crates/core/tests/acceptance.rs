//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grassbanach::extension::{
    expand_pure_tensors, pure_tensor_product, CommutativeAlgebraDescriptor,
};
use grassbanach::sample::{Sampler, Shape};
use grassbanach::{
    BScalar, Error, FieldDescriptor, GeneratorLabel, Grade, GrassmannAlgebra, GrassmannElement,
    Monomial, NormKind, OrderingFunction, Parity, Scalar, TensorElement, TensorNorm,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed <= limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn fields() -> [FieldDescriptor; 3] {
    [
        FieldDescriptor::Rational,
        FieldDescriptor::padic(3, 20).unwrap(),
        FieldDescriptor::Real64,
    ]
}

fn l1(field: FieldDescriptor) -> GrassmannAlgebra {
    GrassmannAlgebra::l1(field)
}

fn e(x: std::result::Result<GrassmannElement, Error>) -> Result<GrassmannElement, String> {
    x.map_err(|err| err.to_string())
}

// 1 ------------------------------------------------------------------------

fn generator_relations() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(1);
    for field in fields() {
        let alg = l1(field);
        for i in 0..100 {
            // half the pairs stay below 64, half use arbitrary labels
            let bound = if i % 2 == 0 { 64 } else { u64::MAX };
            let (a, b) = (s.label(bound), s.label(bound));
            let (x, y) = (alg.generator(a), alg.generator(b));
            let anti = e(x.mul(&y))?
                .add(&e(y.mul(&x))?)
                .map_err(|err| err.to_string())?;
            ensure(anti.is_zero(), || {
                format!("e{0}e{1} + e{1}e{0} = {anti} over {field:?}", a.0, b.0)
            })?;
            ensure(e(x.mul(&x))?.is_zero(), || {
                format!("e{}^2 != 0 over {field:?}", a.0)
            })?;
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "300 pairs".into())
}

// 2 ------------------------------------------------------------------------

/// Dense coefficient vector indexed by subsets of `{0, …, n-1}` as bitmasks.
struct Dense {
    coeffs: Vec<BigRational>,
}

impl Dense {
    fn zero(n: u32) -> Self {
        Dense {
            coeffs: vec![BigRational::zero(); 1 << n],
        }
    }

    /// Brute force over all index pairs; the sign counts pairs `(x, y)` with
    /// `x ∈ I`, `y ∈ J`, `x > y`, one bit at a time.
    fn mul(&self, other: &Dense, n: u32) -> Dense {
        let mut out = Dense::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() || i & j != 0 {
                    continue;
                }
                let mut inversions = 0;
                for x in 0..n {
                    for y in 0..n {
                        if i >> x & 1 == 1 && j >> y & 1 == 1 && x > y {
                            inversions += 1;
                        }
                    }
                }
                let term = a * b;
                if inversions % 2 == 1 {
                    out.coeffs[i | j] -= term;
                } else {
                    out.coeffs[i | j] += term;
                }
            }
        }
        out
    }

    fn to_sparse(&self, n: u32, offset: u64) -> GrassmannElement {
        let terms = self.coeffs.iter().enumerate().map(|(mask, c)| {
            let labels = (0..n as u64)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + offset);
            (Monomial::new(labels), Scalar::Rational(c.clone()))
        });
        GrassmannElement::from_terms(
            terms,
            FieldDescriptor::Rational,
            OrderingFunction::Canonical,
        )
        .unwrap()
    }

    fn from_sparse(a: &GrassmannElement, n: u32, offset: u64) -> Dense {
        let mut out = Dense::zero(n);
        for (m, c) in a.terms() {
            let mask = m
                .labels()
                .iter()
                .fold(0usize, |acc, l| acc | 1 << (l.0 - offset));
            let Scalar::Rational(r) = c else {
                unreachable!("rational field")
            };
            out.coeffs[mask] = r.clone();
        }
        out
    }
}

fn random_dense(rng: &mut impl Rng, n: u32) -> Dense {
    let mut d = Dense::zero(n);
    let density = (24.0 / (1u64 << n) as f64).min(0.6);
    for c in d.coeffs.iter_mut() {
        if rng.gen_bool(density) {
            *c = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into());
        }
    }
    d
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(2);
    for k in 0..1000 {
        let n = 4 + (k % 7) as u32;
        let (a, b) = (random_dense(s.rng(), n), random_dense(s.rng(), n));
        let expected = a.mul(&b, n);
        // odd cases use labels above 64 so the general kernel is exercised too
        let offset = if k % 2 == 0 { 0 } else { 1000 };
        let got = e(a.to_sparse(n, offset).mul(&b.to_sparse(n, offset)))?;
        ensure(
            Dense::from_sparse(&got, n, offset).coeffs == expected.coeffs,
            || format!("mismatch at n = {n}, case {k}: sparse {got}"),
        )?;
    }
    within(
        start.elapsed(),
        Duration::from_secs(30),
        "1000 pairs, n in 4..=10".into(),
    )
}

// 3 ------------------------------------------------------------------------

fn banach_inequality() -> Outcome {
    let mut s = Sampler::new(3);
    for field in fields() {
        let alg = l1(field);
        ensure(alg.norm(&alg.unit()) == 1.0, || {
            format!("||e||_1 != 1 over {field:?}")
        })?;
        if field != FieldDescriptor::Real64 {
            ensure(
                alg.exact_norm(&alg.unit()) == Some(BigRational::one()),
                || "exact ||e||_1".into(),
            )?;
        }
        for _ in 0..1000 {
            let a = s.element(field, &OrderingFunction::Canonical, Shape::new(10, 8, 5));
            let b = s.element(field, &OrderingFunction::Canonical, Shape::new(10, 8, 5));
            let ab = e(a.mul(&b))?;
            let ok = match field {
                FieldDescriptor::Real64 => ab.norm_l1() <= a.norm_l1() * b.norm_l1() * (1.0 + 1e-9),
                _ => {
                    ab.exact_norm_l1().unwrap()
                        <= a.exact_norm_l1().unwrap() * b.exact_norm_l1().unwrap()
                }
            };
            ensure(ok, || {
                format!("||ab||_1 > ||a||_1 ||b||_1 for a = {a}, b = {b}")
            })?;
        }
    }
    for p in [3, 5] {
        let alg = GrassmannAlgebra::<Scalar>::new(
            FieldDescriptor::padic(p, 20).unwrap(),
            OrderingFunction::Canonical,
            NormKind::Linf,
        )
        .map_err(|err| err.to_string())?;
        ensure(
            alg.exact_norm(&alg.unit()) == Some(BigRational::one()),
            || format!("||e||_inf != 1 over Q{p}"),
        )?;
    }
    Ok("1000 pairs per field; ||e|| = 1 in both norms".into())
}

// 4 ------------------------------------------------------------------------

fn ultrametric_regime() -> Outcome {
    let mut s = Sampler::new(4);
    for p in [3, 5] {
        let field = FieldDescriptor::padic(p, 20).unwrap();
        let alg =
            GrassmannAlgebra::<Scalar>::new(field, OrderingFunction::Canonical, NormKind::Linf)
                .map_err(|err| err.to_string())?;
        for _ in 0..1000 {
            let a = s.element(field, &OrderingFunction::Canonical, Shape::new(10, 8, 5));
            let b = s.element(field, &OrderingFunction::Canonical, Shape::new(10, 8, 5));
            let n = |x: &GrassmannElement| alg.exact_norm(x).unwrap();
            let ab = e(a.mul(&b))?;
            ensure(n(&ab) <= n(&a) * n(&b), || {
                format!("||ab||_inf > ||a||_inf ||b||_inf over Q{p}: a = {a}, b = {b}")
            })?;
        }
    }
    for field in [FieldDescriptor::Real64, FieldDescriptor::Rational] {
        let r = GrassmannAlgebra::<Scalar>::new(field, OrderingFunction::Canonical, NormKind::Linf);
        ensure(r.as_ref().err() == Some(&Error::NotUltrametric), || {
            format!("linf over {field:?} gave {r:?}")
        })?;
    }
    Ok("1000 pairs over Q3 and Q5; linf over R rejected".into())
}

// 5 ------------------------------------------------------------------------

fn supercommutativity() -> Outcome {
    let mut s = Sampler::new(5);
    let field = FieldDescriptor::Rational;
    for k in 0..500 {
        let ord = if k % 2 == 0 {
            OrderingFunction::Canonical
        } else {
            s.ordering(8, 6, 4)
        };
        let (i, j) = (s.grade(), s.grade());
        let a = s.homogeneous(field, &ord, Shape::default(), i);
        let b = s.homogeneous(field, &ord, Shape::default(), j);
        let ab = e(a.mul(&b))?;
        let ba = e(b.mul(&a))?;
        let expected = if i == Grade::Odd && j == Grade::Odd {
            ba.neg()
        } else {
            ba
        };
        ensure(ab == expected, || format!("a = {a}, b = {b}: ab = {ab}"))?;
        let want = if (i.index() + j.index()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        ensure(ab.parity() == want || ab.is_zero(), || {
            format!("parity of {ab} is {}", ab.parity())
        })?;
    }
    Ok("500 homogeneous pairs".into())
}

// 6 ------------------------------------------------------------------------

fn invertibility() -> Outcome {
    let mut s = Sampler::new(6);
    let shape = Shape::new(8, 8, 8);
    let mut worst = 0.0f64;
    for field in [FieldDescriptor::Rational, FieldDescriptor::Real64] {
        let alg = l1(field);
        for _ in 0..500 {
            let a = s.element_with_body(field, &OrderingFunction::Canonical, shape, true);
            let inv = e(a.invert())?;
            let residual = e(e(a.mul(&inv))?.sub(&alg.unit()))?;
            match field {
                FieldDescriptor::Real64 => {
                    worst = worst.max(residual.norm_l1());
                    ensure(residual.norm_l1() <= 1e-10, || {
                        format!("||a inv(a) - e||_1 = {} for a = {a}", residual.norm_l1())
                    })?;
                }
                _ => ensure(residual.is_zero(), || format!("a inv(a) != e for a = {a}"))?,
            }
        }
        for _ in 0..100 {
            let a = s.element_with_body(field, &OrderingFunction::Canonical, shape, false);
            ensure(a.invert().err() == Some(Error::NotInvertible), || {
                format!("{a} was inverted")
            })?;
        }
    }
    Ok(format!(
        "500 + 100 per field; worst real64 residual {worst:.1e}"
    ))
}

// 7 ------------------------------------------------------------------------

fn trivial_annihilator() -> Outcome {
    let mut s = Sampler::new(7);
    for k in 0..500 {
        let field = fields()[k % 3];
        let labels = if k % 2 == 0 { 64 } else { 1 << 40 };
        let a = s.nonzero_element(
            field,
            &OrderingFunction::Canonical,
            Shape::new(labels, 8, 5),
        );
        let w = a.annihilator_witness().map_err(|err| err.to_string())?;
        let g = GrassmannElement::generator(w, field, OrderingFunction::Canonical);
        ensure(!e(g.mul(&a))?.is_zero(), || {
            format!("e{} annihilates {a}", w.0)
        })?;
    }
    Ok("500 nonzero elements".into())
}

// 8 ------------------------------------------------------------------------

fn tensor_quotient() -> Outcome {
    let mut s = Sampler::new(8);
    let cases = [
        (
            FieldDescriptor::Rational,
            TensorNorm::Projective,
            NormKind::L1,
        ),
        (
            FieldDescriptor::padic(5, 20).unwrap(),
            TensorNorm::Injective,
            NormKind::Linf,
        ),
    ];
    for (field, mode, norm) in cases {
        let alg = GrassmannAlgebra::<Scalar>::new(field, OrderingFunction::Canonical, norm)
            .map_err(|err| err.to_string())?;
        let q = |x: &TensorElement| x.quotient_map(&alg).map_err(|err| err.to_string());
        let shrinks = |x: &TensorElement, qx: &GrassmannElement| {
            ensure(
                alg.exact_norm(qx).unwrap() <= x.exact_norm().unwrap(),
                || format!("||q({x})|| > ||{x}||"),
            )
        };
        let section = |g: &GrassmannElement| -> Result<(), String> {
            let lifted = TensorElement::monomial_lift(g, mode).map_err(|err| err.to_string())?;
            ensure(
                lifted.quotient_map(&alg).map_err(|err| err.to_string())? == *g,
                || format!("q(lift({g})) != {g}"),
            )
        };
        for _ in 0..500 {
            let x = s.tensor(field, mode, 6, 5, 4);
            let y = s.tensor(field, mode, 6, 5, 4);
            let xy = x.tensor_mul(&y).map_err(|err| err.to_string())?;
            let (qx, qy, qxy) = (q(&x)?, q(&y)?, q(&xy)?);
            ensure(qxy == e(qx.mul(&qy))?, || {
                format!("q(x (x) y) != q(x) q(y) for x = {x}, y = {y}")
            })?;
            shrinks(&x, &qx)?;
            shrinks(&y, &qy)?;
            shrinks(&xy, &qxy)?;
            section(&qx)?;
            section(&qxy)?;
        }
        for _ in 0..200 {
            let v = s.vector(field, mode, 8, 5);
            let vv = v.square();
            let qvv = q(&vv)?;
            ensure(qvv.is_zero(), || {
                format!("q(v (x) v) = {qvv} for v = {}", v.to_tensor())
            })?;
            shrinks(&vv, &qvv)?;
        }
    }
    Ok("500 pairs and 200 squares, projective/Q and injective/Q5".into())
}

// 9 ------------------------------------------------------------------------

fn isomorphisms() -> Outcome {
    let mut s = Sampler::new(9);
    let field = FieldDescriptor::Rational;
    let shape = Shape::new(8, 6, 5);
    let norms = |x: &GrassmannElement| (x.exact_norm_l1(), x.exact_norm_linf());
    for k in 0..500 {
        let from = if k % 3 == 0 {
            OrderingFunction::Canonical
        } else {
            s.ordering(8, 10, 5)
        };
        let to = if k % 3 == 1 {
            OrderingFunction::Canonical
        } else {
            s.ordering(8, 10, 5)
        };
        let a = s.element(field, &from, shape);
        let b = s.element(field, &from, shape);
        let lhs = e(a.mul(&b))?.reorder(&to);
        let rhs = e(a.reorder(&to).mul(&b.reorder(&to)))?;
        ensure(lhs == rhs, || {
            format!("reorder not multiplicative on a = {a}, b = {b}")
        })?;
        ensure(norms(&a.reorder(&to)) == norms(&a), || {
            format!("reorder changes the norm of {a}")
        })?;
    }
    for k in 0..500 {
        let ord = if k % 2 == 0 {
            OrderingFunction::Canonical
        } else {
            s.ordering(8, 10, 5)
        };
        // a random injection of 0..8 into large labels, in shuffled order
        let mut image: Vec<u64> = (0..8)
            .map(|i| i * 1_000_003 + s.rng().gen_range(0..1000))
            .collect();
        rand::seq::SliceRandom::shuffle(image.as_mut_slice(), s.rng());
        let f = |l: GeneratorLabel| GeneratorLabel(image[l.0 as usize]);
        let a = s.element(field, &ord, shape);
        let b = s.element(field, &ord, shape);
        let relabel = |x: &GrassmannElement| x.relabel(f).map_err(|err| err.to_string());
        let lhs = relabel(&e(a.mul(&b))?)?;
        let rhs = e(relabel(&a)?.mul(&relabel(&b)?))?;
        ensure(lhs == rhs, || {
            format!("relabel not multiplicative on a = {a}, b = {b}")
        })?;
        ensure(norms(&relabel(&a)?) == norms(&a), || {
            format!("relabel changes the norm of {a}")
        })?;
    }
    Ok("500 pairs each, mixed canonical and table orderings".into())
}

// 10 -----------------------------------------------------------------------

fn scalar_extension() -> Outcome {
    let mut s = Sampler::new(10);
    let d = CommutativeAlgebraDescriptor::truncated_poly(FieldDescriptor::Rational, 4)
        .map_err(|err| err.to_string())?;
    let ord = OrderingFunction::Canonical;
    let unit = GrassmannElement::<BScalar>::unit(d, ord.clone());
    let pure_list = |s: &mut Sampler| -> Vec<(BScalar, GrassmannElement)> {
        let n = s.rng().gen_range(1..=3);
        (0..n)
            .map(|_| {
                (
                    s.b_scalar(d, None),
                    s.element(FieldDescriptor::Rational, &ord, Shape::new(6, 4, 3)),
                )
            })
            .collect()
    };
    for _ in 0..300 {
        let (l, r) = (pure_list(&mut s), pure_list(&mut s));
        let expand = |x: &[(BScalar, GrassmannElement)]| {
            expand_pure_tensors(x, d, ord.clone()).map_err(|err| err.to_string())
        };
        let prod = pure_tensor_product(&l, &r).map_err(|err| err.to_string())?;
        let lhs = expand(&prod)?;
        let rhs = expand(&l)?
            .mul(&expand(&r)?)
            .map_err(|err| err.to_string())?;
        ensure(lhs == rhs, || {
            format!("expansion does not commute with the product: {lhs} vs {rhs}")
        })?;

        let a = s.b_element(d, &ord, Shape::default(), Some(true));
        let inv = a.invert().map_err(|err| err.to_string())?;
        ensure(a.mul(&inv).map_err(|err| err.to_string())? == unit, || {
            format!("a inv(a) != e for a = {a}")
        })?;
        let z = s.b_element(d, &ord, Shape::default(), Some(false));
        ensure(z.invert().err() == Some(Error::NotInvertible), || {
            format!("{z} was inverted")
        })?;
    }
    Ok("300 cases over Q[t]/(t^4)".into())
}

// 11 -----------------------------------------------------------------------

fn cli_golden_corpus() -> Outcome {
    let cases = common::corpus().len();
    ensure(cases == 50, || format!("corpus has {cases} expressions"))?;
    for format in ["text", "json"] {
        let first = common::run_corpus(format);
        let second = common::run_corpus(format);
        ensure(first == second, || {
            format!("{format} output differs between runs")
        })?;
        ensure(first == common::golden(format), || {
            format!("{format} output differs from the golden file")
        })?;
    }
    let exits: [(&[&str], i32); 5] = [
        (&["eval", "e1*e2"], 0),
        (&["eval", "inv("], 2),
        (&["eval", "inv(e1)"], 3),
        (&["eval", "e1", "--field", "real", "--norm", "linf"], 4),
        (&["eval", "inv(0.1^200 + e1*e2)", "--field", "real"], 5),
    ];
    for (args, code) in exits {
        let o = common::cli(args, None);
        ensure(o.status.code() == Some(code), || {
            format!(
                "{args:?} exited with {:?}, expected {code}",
                o.status.code()
            )
        })?;
        if code != 0 {
            ensure(
                o.stdout.is_empty() && String::from_utf8_lossy(&o.stderr).lines().count() == 1,
                || format!("{args:?} did not fail with exactly one stderr line"),
            )?;
        }
    }
    Ok("50 expressions, text and json; exit codes 0, 2, 3, 4, 5".into())
}

// 12 -----------------------------------------------------------------------

/// 5000 distinct monomials over labels 0..64: size uniform in 0..=64, then a
/// uniform subset of that size; coefficients uniform in [-1, 1).
fn perf_operand(s: &mut Sampler) -> GrassmannElement {
    let mut terms = BTreeMap::new();
    while terms.len() < 5000 {
        let m = s.monomial(64, 64);
        let c = Scalar::Real(s.rng().gen_range(-1.0..1.0));
        terms.insert(m, c);
    }
    GrassmannElement::from_terms(terms, FieldDescriptor::Real64, OrderingFunction::Canonical)
        .unwrap()
}

fn performance() -> Outcome {
    let mut s = Sampler::new(12);
    let (a, b) = (perf_operand(&mut s), perf_operand(&mut s));
    let start = Instant::now();
    let ab = e(a.mul(&b))?;
    let elapsed = start.elapsed();
    within(
        elapsed,
        Duration::from_secs(5),
        format!("{elapsed:.2?}, {} output terms", ab.support_len()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("generator relations", generator_relations),
        ("dense oracle equivalence", oracle_equivalence),
        ("l1 Banach inequality", banach_inequality),
        ("linf ultrametric regime", ultrametric_regime),
        ("supercommutativity and grading", supercommutativity),
        ("invertibility criterion", invertibility),
        ("trivial annihilator", trivial_annihilator),
        ("tensor quotient", tensor_quotient),
        ("ordering and relabeling isomorphisms", isomorphisms),
        ("scalar extension", scalar_extension),
        ("CLI golden corpus", cli_golden_corpus),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!(
                "PASS {:>2} {name}: {detail} [{:.2?}]",
                i + 1,
                start.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{:.2?}]", i + 1, start.elapsed());
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
