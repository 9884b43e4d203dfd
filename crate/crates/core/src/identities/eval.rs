//! Evaluation of Jordan polynomials in any algebra that exposes a bilinear
//! commutative product. Everything else — quadratic operators, triples,
//! powers — is expanded into that product:
//!
//! * `U[a](b)`   = `2 a o (a o b) - a^2 o b`
//! * `U[a,b](y)` = `(U[a+b](y) - U[a](y) - U[b](y)) / 2`
//! * `{a,b,c}`   = `2 ((a o b) o c + (b o c) o a - (a o c) o b)`
//! * `x^(n+1)`   = `x o x^n`

use super::ast::JPoly;
use crate::freespecial::{jordan_circ_capped, NcPoly, DEFAULT_DEGREE_CAP};
use crate::findim::{Element, FinDimAlgebra};
use crate::rational::{rat, Rational};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

/// Failure modes while evaluating a polynomial in a backend.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable `{0}` has no assigned value")]
    UnboundVariable(String),
    #[error("expression uses the unit element but the algebra `{0}` has none")]
    NoUnit(String),
    #[error("free multiplication reached degree {degree}, above the cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
}

/// A target for evaluating Jordan polynomials: a commutative bilinear
/// product together with the module operations, and optionally a unit.
pub trait JordanBackend {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Result<Self::Elem, EvalError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem;
    fn circ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, EvalError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(&rat(-1, 1), b))
    }
}

impl JordanBackend for Arc<FinDimAlgebra> {
    type Elem = Element;

    fn zero(&self) -> Element {
        self.zero_element()
    }

    fn unit(&self) -> Result<Element, EvalError> {
        self.unit_element()
            .ok_or_else(|| EvalError::NoUnit(self.id().to_string()))
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &Element) -> Element {
        a.scale(c)
    }

    fn circ(&self, a: &Element, b: &Element) -> Result<Element, EvalError> {
        Ok(a.circ(b))
    }

    fn is_zero(&self, a: &Element) -> bool {
        a.is_zero()
    }
}

/// Evaluation in the free special Jordan algebra: elements are associative
/// noncommutative polynomials, the product is the symmetrized one, and any
/// intermediate result whose degree would exceed `cap` aborts the evaluation
/// rather than silently truncating.
#[derive(Debug, Clone, Copy)]
pub struct FreeJordanBackend {
    pub cap: usize,
}

impl Default for FreeJordanBackend {
    fn default() -> Self {
        FreeJordanBackend {
            cap: DEFAULT_DEGREE_CAP,
        }
    }
}

impl FreeJordanBackend {
    pub fn with_cap(cap: usize) -> Self {
        FreeJordanBackend { cap }
    }
}

impl JordanBackend for FreeJordanBackend {
    type Elem = NcPoly;

    fn zero(&self) -> NcPoly {
        NcPoly::zero()
    }

    fn unit(&self) -> Result<NcPoly, EvalError> {
        Ok(NcPoly::one())
    }

    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &NcPoly) -> NcPoly {
        a.scale(c)
    }

    fn circ(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, EvalError> {
        jordan_circ_capped(a, b, self.cap).map_err(|e| EvalError::DegreeOverflow {
            degree: e.degree,
            cap: e.cap,
        })
    }

    fn is_zero(&self, a: &NcPoly) -> bool {
        a.is_zero()
    }
}

/// Evaluate `f` under the given variable assignment.
pub fn evaluate<B: JordanBackend>(
    f: &JPoly,
    assign: &BTreeMap<String, B::Elem>,
    backend: &B,
) -> Result<B::Elem, EvalError> {
    match f {
        JPoly::Var(name) => assign
            .get(name)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
        JPoly::One => backend.unit(),
        JPoly::Scalar(c, x) => Ok(backend.scale(c, &evaluate(x, assign, backend)?)),
        JPoly::Sum(terms) => {
            let mut acc = backend.zero();
            for t in terms {
                let v = evaluate(t, assign, backend)?;
                acc = backend.add(&acc, &v);
            }
            Ok(acc)
        }
        JPoly::Circ(a, b) => {
            let a = evaluate(a, assign, backend)?;
            let b = evaluate(b, assign, backend)?;
            backend.circ(&a, &b)
        }
        JPoly::U { sub, arg } => {
            let a = evaluate(sub, assign, backend)?;
            let b = evaluate(arg, assign, backend)?;
            u_of(backend, &a, &b)
        }
        JPoly::UPair { a, b, arg } => {
            let a = evaluate(a, assign, backend)?;
            let b = evaluate(b, assign, backend)?;
            let y = evaluate(arg, assign, backend)?;
            let ab = backend.add(&a, &b);
            let whole = u_of(backend, &ab, &y)?;
            let ua = u_of(backend, &a, &y)?;
            let ub = u_of(backend, &b, &y)?;
            Ok(backend.scale(&rat(1, 2), &backend.sub(&backend.sub(&whole, &ua), &ub)))
        }
        JPoly::Triple(a, b, c) => {
            let a = evaluate(a, assign, backend)?;
            let b = evaluate(b, assign, backend)?;
            let c = evaluate(c, assign, backend)?;
            triple_of(backend, &a, &b, &c)
        }
        JPoly::Power(base, n) => {
            let x = evaluate(base, assign, backend)?;
            let mut acc = x.clone();
            for _ in 1..*n {
                acc = backend.circ(&x, &acc)?;
            }
            Ok(acc)
        }
    }
}

fn u_of<B: JordanBackend>(backend: &B, a: &B::Elem, b: &B::Elem) -> Result<B::Elem, EvalError> {
    let a_b = backend.circ(a, b)?;
    let a_a_b = backend.circ(a, &a_b)?;
    let a_sq = backend.circ(a, a)?;
    let a_sq_b = backend.circ(&a_sq, b)?;
    Ok(backend.sub(&backend.scale(&rat(2, 1), &a_a_b), &a_sq_b))
}

fn triple_of<B: JordanBackend>(
    backend: &B,
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> Result<B::Elem, EvalError> {
    let ab_c = backend.circ(&backend.circ(a, b)?, c)?;
    let bc_a = backend.circ(&backend.circ(b, c)?, a)?;
    let ac_b = backend.circ(&backend.circ(a, c)?, b)?;
    let sum = backend.sub(&backend.add(&ab_c, &bc_a), &ac_b);
    Ok(backend.scale(&rat(2, 1), &sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::random_element;
    use crate::identities::parser::parse;
    use crate::matrix::RatMat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assign<B: JordanBackend>(pairs: Vec<(&str, B::Elem)>) -> BTreeMap<String, B::Elem> {
        pairs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect()
    }

    #[test]
    fn orthogonal_idempotents_multiply_to_zero() {
        let alg = FinDimAlgebra::mat_sa(3);
        let f = parse("X o Y").unwrap();
        let env = assign::<Arc<FinDimAlgebra>>(vec![
            ("X", alg.basis_element(0)),
            ("Y", alg.basis_element(1)),
        ]);
        let v = evaluate(&f, &env, &alg).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn unbound_variable_is_reported_by_name() {
        let alg = FinDimAlgebra::mat_sa(2);
        let f = parse("X o Y").unwrap();
        let env = assign::<Arc<FinDimAlgebra>>(vec![("X", alg.basis_element(0))]);
        assert_eq!(
            evaluate(&f, &env, &alg),
            Err(EvalError::UnboundVariable("Y".to_string()))
        );
    }

    #[test]
    fn u_operator_matches_element_quadratic_map() {
        let alg = FinDimAlgebra::albert_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = parse("U[X](Y)").unwrap();
        for _ in 0..5 {
            let x = random_element(&alg, &mut rng);
            let y = random_element(&alg, &mut rng);
            let env = assign::<Arc<FinDimAlgebra>>(vec![("X", x.clone()), ("Y", y.clone())]);
            let via_poly = evaluate(&f, &env, &alg).unwrap();
            assert_eq!(via_poly, x.quadratic_u(&y));
        }
    }

    #[test]
    fn upair_matches_operator_polarization() {
        // U[a,b] must equal T_a T_b + T_b T_a - T_{a o b} as an operator.
        let alg = FinDimAlgebra::albert_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = parse("U[A,B](Y)").unwrap();
        for _ in 0..3 {
            let a = random_element(&alg, &mut rng);
            let b = random_element(&alg, &mut rng);
            let y = random_element(&alg, &mut rng);
            let ta = a.mult_operator();
            let tb = b.mult_operator();
            let tab = a.circ(&b).mult_operator();
            let op = ta.mul(&tb).add(&tb.mul(&ta)).sub(&tab);
            let expected = alg.element(op.apply(y.coords())).unwrap();
            let env = assign::<Arc<FinDimAlgebra>>(vec![("A", a), ("B", b), ("Y", y)]);
            assert_eq!(evaluate(&f, &env, &alg).unwrap(), expected);
        }
    }

    #[test]
    fn triple_and_upair_agree_with_element_methods() {
        let alg = FinDimAlgebra::albert_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let trip = parse("{A, B, C}").unwrap();
        for _ in 0..3 {
            let a = random_element(&alg, &mut rng);
            let b = random_element(&alg, &mut rng);
            let c = random_element(&alg, &mut rng);
            let env = assign::<Arc<FinDimAlgebra>>(vec![
                ("A", a.clone()),
                ("B", b.clone()),
                ("C", c.clone()),
            ]);
            assert_eq!(evaluate(&trip, &env, &alg).unwrap(), Element::triple(&a, &b, &c));
        }
    }

    #[test]
    fn powers_fold_left_through_the_product() {
        let alg = FinDimAlgebra::mat_sa(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_element(&alg, &mut rng);
        let env = assign::<Arc<FinDimAlgebra>>(vec![("X", x.clone())]);
        let p4 = evaluate(&parse("X^4").unwrap(), &env, &alg).unwrap();
        let x2 = x.circ(&x);
        assert_eq!(p4, x.circ(&x.circ(&x2)));
        // x^4 = (x^2)^2 holds by power associativity.
        assert_eq!(p4, x2.circ(&x2));
        let p1 = evaluate(&parse("X^1").unwrap(), &env, &alg).unwrap();
        assert_eq!(p1, x);
    }

    #[test]
    fn unit_requires_a_unital_algebra() {
        let alg = FinDimAlgebra::albert_algebra();
        let f = parse("1 o X").unwrap();
        let env = assign::<Arc<FinDimAlgebra>>(vec![("X", alg.basis_element(4))]);
        let v = evaluate(&f, &env, &alg).unwrap();
        assert_eq!(v, alg.basis_element(4));

        // An algebra without a stored unit reports which algebra failed.
        let structure = vec![vec![vec![rat(0, 1)]]];
        let no_unit = FinDimAlgebra::from_parts("null:1", 1, &structure, None).unwrap();
        let env = assign::<Arc<FinDimAlgebra>>(vec![("X", no_unit.basis_element(0))]);
        assert_eq!(
            evaluate(&f, &env, &no_unit),
            Err(EvalError::NoUnit("null:1".to_string()))
        );
    }

    #[test]
    fn free_backend_caps_degree_growth() {
        let backend = FreeJordanBackend::with_cap(6);
        let f = parse("X^7").unwrap();
        let env = assign::<FreeJordanBackend>(vec![("X", NcPoly::var(0))]);
        match evaluate(&f, &env, &backend) {
            Err(EvalError::DegreeOverflow { degree, cap }) => {
                assert_eq!(cap, 6);
                assert!(degree > 6);
            }
            other => panic!("expected degree overflow, got {other:?}"),
        }
        let ok = evaluate(&parse("X^6").unwrap(), &env, &backend).unwrap();
        assert_eq!(ok.degree(), Some(6));
    }

    #[test]
    fn free_and_matrix_backends_agree_through_representation() {
        // Evaluating symbolically and then substituting matrices for the
        // letters must match evaluating directly in the matrix algebra.
        use crate::findim::{mat_sa_from_matrix, mat_sa_to_matrix};

        let alg = FinDimAlgebra::mat_sa(2);
        let free = FreeJordanBackend::default();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let exprs = ["U[X](Y)", "{X, Y, X o Y}", "U[X,Y](X^2) - Y"];
        for src in exprs {
            let f = parse(src).unwrap();
            let x = random_element(&alg, &mut rng);
            let y = random_element(&alg, &mut rng);

            let sym_env = assign::<FreeJordanBackend>(vec![
                ("X", NcPoly::var(0)),
                ("Y", NcPoly::var(1)),
            ]);
            let sym = evaluate(&f, &sym_env, &free).unwrap();

            let xm = mat_sa_to_matrix(&x);
            let ym = mat_sa_to_matrix(&y);
            let mats = [xm, ym];
            let n = 2usize;
            let mut acc = RatMat::zeros(n, n);
            for (word, coeff) in sym.terms() {
                let mut m = RatMat::identity(n);
                for &letter in &word.0 {
                    m = m.mul(&mats[letter as usize]);
                }
                acc = acc.add(&m.scale(coeff));
            }
            let via_free = mat_sa_from_matrix(&alg, &acc);

            let env = assign::<Arc<FinDimAlgebra>>(vec![("X", x), ("Y", y)]);
            let direct = evaluate(&f, &env, &alg).unwrap();
            assert_eq!(via_free, direct, "backend mismatch for {src}");
        }
    }
}
