//! The free unital Jordan algebra on two projections, realized concretely:
//! an element is a Jordan polynomial in two idempotent generators `P1`, `P2`,
//! and its value along the parameter `t in [0, 1]` is a symmetric 2x2 matrix
//! path
//!
//! ```text
//! p1(t) = [[1, 0], [0, 0]],      p2(t) = [[t, h], [h, 1 - t]],   h = sqrt(t(1-t))
//! ```
//!
//! At the endpoints `h = 0`, so every polynomial in the generators takes
//! exactly diagonal values there. Evaluation is carried out in the ring
//! `Q[s] / (s^2 - t(1-t))`, which keeps the arithmetic exact whenever the
//! irrational part cancels (it always does at the endpoints, and for many
//! elements, such as `U[P1](P2)`, at every `t`) or whenever `t(1-t)` is a
//! perfect rational square; only genuinely irrational results fall back to
//! floating point.

use crate::findim::Element;
use crate::identities::{evaluate, EvalError, JPoly, JordanBackend, ParseError};
use crate::rational::{format_rational, rat, sqrt_exact, to_f64, Rational};
use num::{One, Signed, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TwoProjError {
    #[error("parameter t = {} lies outside [0, 1]", format_rational(.0))]
    OutOfRange(Rational),
    #[error("two-projection elements may only use the variables P1 and P2, found `{0}`")]
    BadVariable(String),
    #[error("a grid needs at least 2 points, got {0}")]
    BadGrid(usize),
    #[error("universal-map target q{0} is not idempotent")]
    NotIdempotent(usize),
    #[error("universal-map targets must live in one algebra")]
    MixedAlgebras,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A symmetric 2x2 matrix `[[a, b], [b, c]]` with entries of type `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sym2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl Sym2<Rational> {
    pub fn diag(a: Rational, c: Rational) -> Self {
        Sym2 {
            a,
            b: Rational::zero(),
            c,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> Sym2<f64> {
        Sym2 {
            a: to_f64(&self.a),
            b: to_f64(&self.b),
            c: to_f64(&self.c),
        }
    }
}

/// A point of an element's matrix path: exact whenever the arithmetic
/// stayed rational, floating otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum PathValue {
    Exact(Sym2<Rational>),
    Approx(Sym2<f64>),
}

impl PathValue {
    pub fn to_f64(&self) -> Sym2<f64> {
        match self {
            PathValue::Exact(m) => m.to_f64(),
            PathValue::Approx(m) => m.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&Sym2<Rational>> {
        match self {
            PathValue::Exact(m) => Some(m),
            PathValue::Approx(_) => None,
        }
    }
}

// ---------------------------------------------------------------------------
// The coefficient ring Q[s] / (s^2 - s2): values re + im * s.

#[derive(Debug, Clone, PartialEq)]
struct QuadExt {
    re: Rational,
    im: Rational,
}

impl QuadExt {
    fn zero() -> Self {
        QuadExt {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    fn from_rational(re: Rational) -> Self {
        QuadExt {
            re,
            im: Rational::zero(),
        }
    }

    fn root() -> Self {
        QuadExt {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        QuadExt {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn scale(&self, k: &Rational) -> Self {
        QuadExt {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    fn mul(&self, other: &Self, s2: &Rational) -> Self {
        QuadExt {
            re: &self.re * &other.re + &(&self.im * &other.im) * s2,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Collapse to a rational: immediate if the irrational part is absent,
    /// or by substituting an exact square root of `s2` when one exists.
    fn collapse_exact(&self, root: Option<&Rational>) -> Option<Rational> {
        if self.im.is_zero() {
            return Some(self.re.clone());
        }
        root.map(|r| &self.re + &(&self.im * r))
    }

    fn collapse_f64(&self, root: f64) -> f64 {
        to_f64(&self.re) + to_f64(&self.im) * root
    }
}

/// Symmetric 2x2 matrices over `Q[s]/(s^2 - s2)` as a Jordan algebra under
/// the symmetrized matrix product.
struct ExtBackend {
    s2: Rational,
}

impl JordanBackend for ExtBackend {
    type Elem = Sym2<QuadExt>;

    fn zero(&self) -> Sym2<QuadExt> {
        Sym2 {
            a: QuadExt::zero(),
            b: QuadExt::zero(),
            c: QuadExt::zero(),
        }
    }

    fn unit(&self) -> Result<Sym2<QuadExt>, EvalError> {
        Ok(Sym2 {
            a: QuadExt::from_rational(Rational::one()),
            b: QuadExt::zero(),
            c: QuadExt::from_rational(Rational::one()),
        })
    }

    fn add(&self, x: &Sym2<QuadExt>, y: &Sym2<QuadExt>) -> Sym2<QuadExt> {
        Sym2 {
            a: x.a.add(&y.a),
            b: x.b.add(&y.b),
            c: x.c.add(&y.c),
        }
    }

    fn scale(&self, k: &Rational, x: &Sym2<QuadExt>) -> Sym2<QuadExt> {
        Sym2 {
            a: x.a.scale(k),
            b: x.b.scale(k),
            c: x.c.scale(k),
        }
    }

    fn circ(&self, x: &Sym2<QuadExt>, y: &Sym2<QuadExt>) -> Result<Sym2<QuadExt>, EvalError> {
        let s2 = &self.s2;
        let half = rat(1, 2);
        // (XY + YX) / 2 for X = [[a1,b1],[b1,c1]], Y = [[a2,b2],[b2,c2]].
        let a = x.a.mul(&y.a, s2).add(&x.b.mul(&y.b, s2));
        let c = x.b.mul(&y.b, s2).add(&x.c.mul(&y.c, s2));
        let b = x
            .a
            .mul(&y.b, s2)
            .add(&x.b.mul(&y.c, s2))
            .add(&y.a.mul(&x.b, s2))
            .add(&y.b.mul(&x.c, s2))
            .scale(&half);
        Ok(Sym2 { a, b, c })
    }

    fn is_zero(&self, x: &Sym2<QuadExt>) -> bool {
        x.a.is_zero() && x.b.is_zero() && x.c.is_zero()
    }
}

// ---------------------------------------------------------------------------

/// An element of the free unital Jordan algebra on two projections: a
/// Jordan polynomial over the variables `P1`, `P2` (and the unit).
#[derive(Debug, Clone, PartialEq)]
pub struct TwoProjElement {
    poly: JPoly,
}

impl TwoProjElement {
    /// Wrap a polynomial, rejecting variables other than `P1`, `P2`.
    pub fn from_poly(poly: JPoly) -> Result<Self, TwoProjError> {
        for var in poly.free_vars() {
            if var != "P1" && var != "P2" {
                return Err(TwoProjError::BadVariable(var));
            }
        }
        Ok(TwoProjElement { poly })
    }

    /// Parse an expression in the standard grammar over `P1`, `P2`.
    pub fn parse(src: &str) -> Result<Self, TwoProjError> {
        let poly = crate::identities::parse(src)?;
        TwoProjElement::from_poly(poly)
    }

    pub fn poly(&self) -> &JPoly {
        &self.poly
    }

    /// A pseudo-random element of structural degree at most `max_deg`,
    /// built from sums of scaled products, quadratic operators, and powers
    /// of the generators.
    pub fn random<R: Rng>(rng: &mut R, max_deg: usize) -> Self {
        let max_deg = max_deg.max(1);
        let n_terms = rng.gen_range(1..=3);
        let mut terms = Vec::with_capacity(n_terms);
        for _ in 0..n_terms {
            let k = crate::rational::random_half_integer(rng, 2);
            let factor = random_factor(rng, max_deg);
            if k.is_zero() {
                terms.push(factor);
            } else {
                terms.push(JPoly::scalar(k, factor));
            }
        }
        let poly = if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            JPoly::Sum(terms)
        };
        TwoProjElement { poly }
    }
}

impl fmt::Display for TwoProjElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn random_factor<R: Rng>(rng: &mut R, budget: usize) -> JPoly {
    if budget == 0 {
        return JPoly::One;
    }
    match rng.gen_range(0..6u32) {
        0 => JPoly::var("P1"),
        1 => JPoly::var("P2"),
        2 => JPoly::One,
        3 => {
            let left = rng.gen_range(0..=budget);
            JPoly::circ(
                random_factor(rng, left),
                random_factor(rng, budget - left),
            )
        }
        4 if budget >= 3 => {
            let sub = random_factor(rng, (budget - 1) / 2);
            let arg = random_factor(rng, budget - 2 * sub.total_degree());
            JPoly::u(sub, arg)
        }
        5 if budget >= 2 => {
            let n = rng.gen_range(2..=budget.min(3)) as u32;
            let base = random_factor(rng, budget / n as usize);
            if base.total_degree() == 0 {
                base
            } else {
                JPoly::power(base, n)
            }
        }
        _ => {
            if rng.gen_bool(0.5) {
                JPoly::var("P1")
            } else {
                JPoly::var("P2")
            }
        }
    }
}

fn check_range(t: &Rational) -> Result<(), TwoProjError> {
    if t.is_negative() || t > &Rational::one() {
        return Err(TwoProjError::OutOfRange(t.clone()));
    }
    Ok(())
}

fn generator_matrices(t: &Rational) -> (Sym2<QuadExt>, Sym2<QuadExt>) {
    let p1 = Sym2 {
        a: QuadExt::from_rational(Rational::one()),
        b: QuadExt::zero(),
        c: QuadExt::zero(),
    };
    let p2 = Sym2 {
        a: QuadExt::from_rational(t.clone()),
        b: QuadExt::root(),
        c: QuadExt::from_rational(&Rational::one() - t),
    };
    (p1, p2)
}

fn collapse(value: Sym2<QuadExt>, s2: &Rational) -> PathValue {
    let root = sqrt_exact(s2);
    let exact = (|| {
        Some(Sym2 {
            a: value.a.collapse_exact(root.as_ref())?,
            b: value.b.collapse_exact(root.as_ref())?,
            c: value.c.collapse_exact(root.as_ref())?,
        })
    })();
    match exact {
        Some(m) => PathValue::Exact(m),
        None => {
            let r = to_f64(s2).sqrt();
            PathValue::Approx(Sym2 {
                a: value.a.collapse_f64(r),
                b: value.b.collapse_f64(r),
                c: value.c.collapse_f64(r),
            })
        }
    }
}

/// The generator pair `(p1(t), p2(t))`. `p1` is the constant matrix
/// `diag(1, 0)`; `p2(t)` interpolates from `diag(0, 1)` at `t = 0` to
/// `diag(1, 0)` at `t = 1`. Both are exact whenever `t(1-t)` is a perfect
/// rational square.
pub fn generators_at(t: &Rational) -> Result<(PathValue, PathValue), TwoProjError> {
    check_range(t)?;
    let s2 = t * &(&Rational::one() - t);
    let (p1, p2) = generator_matrices(t);
    Ok((collapse(p1, &s2), collapse(p2, &s2)))
}

/// Evaluate the element's path at `t`, substituting the generator matrices
/// and working in `Q[s]/(s^2 - t(1-t))`. The result is exact when the
/// irrational parts cancel or `t(1-t)` has a rational square root; otherwise
/// it is collapsed to floating point.
pub fn eval_path(f: &TwoProjElement, t: &Rational) -> Result<PathValue, TwoProjError> {
    check_range(t)?;
    let s2 = t * &(&Rational::one() - t);
    let backend = ExtBackend { s2: s2.clone() };
    let (p1, p2) = generator_matrices(t);
    let env: BTreeMap<String, Sym2<QuadExt>> =
        [("P1".to_string(), p1), ("P2".to_string(), p2)].into_iter().collect();
    let value = evaluate(&f.poly, &env, &backend)?;
    Ok(collapse(value, &s2))
}

/// Exact values at `t = 0` and `t = 1` with diagonality flags. Off-diagonal
/// entries always vanish at the endpoints for elements generated by the two
/// projections and the unit.
#[derive(Debug, Clone, PartialEq)]
pub struct EndpointReport {
    pub at0: Sym2<Rational>,
    pub at1: Sym2<Rational>,
    pub diagonal_at0: bool,
    pub diagonal_at1: bool,
}

pub fn endpoint_values(f: &TwoProjElement) -> Result<EndpointReport, TwoProjError> {
    let grab = |t: Rational| -> Result<Sym2<Rational>, TwoProjError> {
        match eval_path(f, &t)? {
            PathValue::Exact(m) => Ok(m),
            // s^2 = 0 at the endpoints, so collapse is always exact.
            PathValue::Approx(_) => unreachable!("endpoint evaluation is exact"),
        }
    };
    let at0 = grab(Rational::zero())?;
    let at1 = grab(Rational::one())?;
    let report = EndpointReport {
        diagonal_at0: at0.is_diagonal(),
        diagonal_at1: at1.is_diagonal(),
        at0,
        at1,
    };
    debug_assert!(report.diagonal_at0 && report.diagonal_at1);
    Ok(report)
}

/// Spectral norm of a symmetric 2x2 matrix: the larger absolute eigenvalue.
pub fn spectral_norm(m: &Sym2<f64>) -> f64 {
    let mid = (m.a + m.c) / 2.0;
    let rad = ((m.a - m.c) / 2.0).hypot(m.b);
    mid.abs() + rad
}

/// Maximum spectral norm over a uniform grid of `grid_n` points including
/// both endpoints: a lower bound for the supremum norm with grid spacing
/// `1 / (grid_n - 1)`.
pub fn sup_norm(f: &TwoProjElement, grid_n: usize) -> Result<f64, TwoProjError> {
    if grid_n < 2 {
        return Err(TwoProjError::BadGrid(grid_n));
    }
    let denom = (grid_n - 1) as i64;
    let mut best = 0f64;
    for k in 0..grid_n {
        let t = rat(k as i64, denom);
        let value = eval_path(f, &t)?.to_f64();
        best = best.max(spectral_norm(&value));
    }
    Ok(best)
}

/// Push the element through the unique unital Jordan homomorphism sending
/// `P1, P2` to the idempotents `q1, q2` of a unital finite-dimensional
/// algebra.
pub fn universal_map(
    f: &TwoProjElement,
    q1: &Element,
    q2: &Element,
) -> Result<Element, TwoProjError> {
    if q1.algebra().id() != q2.algebra().id() {
        return Err(TwoProjError::MixedAlgebras);
    }
    if !q1.is_idempotent() {
        return Err(TwoProjError::NotIdempotent(1));
    }
    if !q2.is_idempotent() {
        return Err(TwoProjError::NotIdempotent(2));
    }
    let alg = q1.algebra_arc().clone();
    let env: BTreeMap<String, Element> = [
        ("P1".to_string(), q1.clone()),
        ("P2".to_string(), q2.clone()),
    ]
    .into_iter()
    .collect();
    Ok(evaluate(&f.poly, &env, &alg)?)
}

/// Dump the path over a uniform grid as CSV rows `t,a,b,c`, with a header.
pub fn path_csv(f: &TwoProjElement, grid_n: usize) -> Result<String, TwoProjError> {
    if grid_n < 2 {
        return Err(TwoProjError::BadGrid(grid_n));
    }
    let denom = (grid_n - 1) as i64;
    let mut out = String::from("t,a,b,c\n");
    for k in 0..grid_n {
        let t = rat(k as i64, denom);
        let m = eval_path(f, &t)?.to_f64();
        out.push_str(&format!("{},{},{},{}\n", to_f64(&t), m.a, m.b, m.c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::AlbertElement;
    use crate::findim::{albert_element, FinDimAlgebra};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn exact(v: &PathValue) -> Sym2<Rational> {
        v.as_exact()
            .unwrap_or_else(|| panic!("expected exact value, got {v:?}"))
            .clone()
    }

    #[test]
    fn generators_at_named_points() {
        let (p1, p2) = generators_at(&rat(0, 1)).unwrap();
        assert_eq!(exact(&p1), Sym2::diag(rat(1, 1), rat(0, 1)));
        assert_eq!(exact(&p2), Sym2::diag(rat(0, 1), rat(1, 1)));

        let (_, p2) = generators_at(&rat(1, 1)).unwrap();
        assert_eq!(exact(&p2), Sym2::diag(rat(1, 1), rat(0, 1)));

        // t = 1/2: sqrt(1/4) = 1/2 exactly.
        let (_, p2) = generators_at(&rat(1, 2)).unwrap();
        assert_eq!(
            exact(&p2),
            Sym2 {
                a: rat(1, 2),
                b: rat(1, 2),
                c: rat(1, 2)
            }
        );

        // t = 1/3: sqrt(2/9) is irrational, so p2 is approximate...
        let (p1, p2) = generators_at(&rat(1, 3)).unwrap();
        assert!(p1.as_exact().is_some());
        let m = match p2 {
            PathValue::Approx(m) => m,
            other => panic!("expected approximate p2, got {other:?}"),
        };
        assert!((m.b - (2f64 / 9.0).sqrt()).abs() < 1e-15);

        assert_eq!(
            generators_at(&rat(3, 2)).unwrap_err(),
            TwoProjError::OutOfRange(rat(3, 2))
        );
    }

    #[test]
    fn generators_are_idempotent_even_at_irrational_points() {
        // p^2 - p vanishes in Q[s]/(s^2 - t(1-t)) identically, so the check
        // is exact even where the square root is irrational.
        let f1 = TwoProjElement::parse("P1^2 - P1").unwrap();
        let f2 = TwoProjElement::parse("P2^2 - P2").unwrap();
        for t in [rat(0, 1), rat(1, 7), rat(1, 4), rat(1, 3), rat(4, 5), rat(1, 1)] {
            for f in [&f1, &f2] {
                let v = eval_path(f, &t).unwrap();
                assert_eq!(exact(&v), Sym2::diag(rat(0, 1), rat(0, 1)), "t = {t}");
            }
        }
    }

    #[test]
    fn compression_of_p2_by_p1_is_diagonal_t_exactly() {
        // U[P1](P2) = diag(t, 0): the irrational parts cancel, so the value
        // is exact at every rational t, square or not.
        let f = TwoProjElement::parse("U[P1](P2)").unwrap();
        for t in [rat(0, 1), rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4), rat(1, 1)] {
            let v = eval_path(&f, &t).unwrap();
            assert_eq!(exact(&v), Sym2::diag(t.clone(), rat(0, 1)), "t = {t}");
        }
    }

    #[test]
    fn complementary_compression_is_diagonal_one_minus_t() {
        let f = TwoProjElement::parse("U[1 - P1](P2)").unwrap();
        for t in [rat(0, 1), rat(1, 5), rat(1, 2), rat(7, 9), rat(1, 1)] {
            let v = eval_path(&f, &t).unwrap();
            assert_eq!(
                exact(&v),
                Sym2::diag(rat(0, 1), &Rational::one() - &t),
                "t = {t}"
            );
        }
    }

    #[test]
    fn product_value_at_one_half() {
        let f = TwoProjElement::parse("P1 o P2").unwrap();
        let v = eval_path(&f, &rat(1, 2)).unwrap();
        assert_eq!(
            exact(&v),
            Sym2 {
                a: rat(1, 2),
                b: rat(1, 4),
                c: rat(0, 1)
            }
        );
    }

    #[test]
    fn unit_complement_is_constant() {
        let f = TwoProjElement::parse("1 - P1").unwrap();
        for t in [rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 1)] {
            let v = eval_path(&f, &t).unwrap();
            assert_eq!(exact(&v), Sym2::diag(rat(0, 1), rat(1, 1)));
        }
    }

    #[test]
    fn endpoint_values_are_exactly_diagonal() {
        let f = TwoProjElement::parse("P1 o P2").unwrap();
        let report = endpoint_values(&f).unwrap();
        assert_eq!(report.at0, Sym2::diag(rat(0, 1), rat(0, 1)));
        assert_eq!(report.at1, Sym2::diag(rat(1, 1), rat(0, 1)));
        assert!(report.diagonal_at0 && report.diagonal_at1);

        let p2 = TwoProjElement::parse("P2").unwrap();
        let report = endpoint_values(&p2).unwrap();
        assert_eq!(report.at0, Sym2::diag(rat(0, 1), rat(1, 1)));
        assert_eq!(report.at1, Sym2::diag(rat(1, 1), rat(0, 1)));
    }

    #[test]
    fn random_elements_have_diagonal_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..25 {
            let f = TwoProjElement::random(&mut rng, 5);
            assert!(f.poly().total_degree() <= 5);
            let report = endpoint_values(&f).unwrap();
            assert!(
                report.diagonal_at0 && report.diagonal_at1,
                "endpoints not diagonal for {f}"
            );
        }
    }

    #[test]
    fn sup_norm_spot_values() {
        let one = TwoProjElement::parse("1").unwrap();
        assert_eq!(sup_norm(&one, 11).unwrap(), 1.0);

        let zero = TwoProjElement::parse("P1 - P1").unwrap();
        assert_eq!(sup_norm(&zero, 11).unwrap(), 0.0);

        // The path of P1 o P2 has spectral norm t/2 + sqrt(t)/2, maximal at
        // t = 1 where it equals 1; the endpoint is on every grid.
        let prod = TwoProjElement::parse("P1 o P2").unwrap();
        let coarse = sup_norm(&prod, 11).unwrap();
        let fine = sup_norm(&prod, 101).unwrap();
        assert!((coarse - 1.0).abs() < 1e-12);
        assert!(fine >= coarse - 1e-12, "refinement may only increase");

        assert_eq!(sup_norm(&one, 1).unwrap_err(), TwoProjError::BadGrid(1));
    }

    #[test]
    fn universal_map_examples_and_relations() {
        let alg = FinDimAlgebra::albert_algebra();
        let e11 = albert_element(&alg, &AlbertElement::diag_unit(0));
        let q2 = albert_element(
            &alg,
            &AlbertElement::diag_unit(0)
                .add(&AlbertElement::diag_unit(1))
                .add(&AlbertElement::off_diag(0, 1, crate::octonion::Octonion::one()))
                .scale(&rat(1, 2)),
        );

        let p1 = TwoProjElement::parse("P1").unwrap();
        assert_eq!(universal_map(&p1, &e11, &q2).unwrap(), e11);

        let comp = TwoProjElement::parse("U[P1](P2)").unwrap();
        assert_eq!(
            universal_map(&comp, &e11, &q2).unwrap(),
            e11.quadratic_u(&q2)
        );

        // Relations transport: P1 o P1 - P1 maps to zero for any idempotent.
        let rel = TwoProjElement::parse("P1 o P1 - P1").unwrap();
        assert!(universal_map(&rel, &e11, &q2).unwrap().is_zero());

        // Homomorphism property on the product, for random elements.
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..5 {
            let f = TwoProjElement::random(&mut rng, 3);
            let g = TwoProjElement::random(&mut rng, 3);
            let fg = TwoProjElement::from_poly(JPoly::circ(
                f.poly().clone(),
                g.poly().clone(),
            ))
            .unwrap();
            let lhs = universal_map(&fg, &e11, &q2).unwrap();
            let rhs = universal_map(&f, &e11, &q2)
                .unwrap()
                .circ(&universal_map(&g, &e11, &q2).unwrap());
            assert_eq!(lhs, rhs);
        }

        // Non-idempotent targets are rejected.
        let bad = e11.scale(&rat(2, 1));
        assert_eq!(
            universal_map(&p1, &bad, &q2).unwrap_err(),
            TwoProjError::NotIdempotent(1)
        );
        assert_eq!(
            universal_map(&p1, &e11, &bad).unwrap_err(),
            TwoProjError::NotIdempotent(2)
        );
    }

    #[test]
    fn bad_variables_are_rejected() {
        assert_eq!(
            TwoProjElement::parse("P1 o X").unwrap_err(),
            TwoProjError::BadVariable("X".to_string())
        );
        assert!(TwoProjElement::parse("P1 o (").is_err());
    }

    #[test]
    fn csv_dump_has_header_and_full_grid() {
        let f = TwoProjElement::parse("P2").unwrap();
        let csv = path_csv(&f, 5).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "t,a,b,c");
        assert_eq!(lines[1], "0,0,0,1");
        assert_eq!(lines[5], "1,1,0,0");
        // Interior row at t = 1/2 is exact in f64 as well.
        assert_eq!(lines[3], "0.5,0.5,0.5,0.5");
    }
}
