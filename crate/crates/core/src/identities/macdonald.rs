//! Instance checks for Macdonald-style vanishing: a polynomial that is
//! linear in its last variable and built from two internally operator-
//! commuting tuples vanishes in every Jordan algebra once it vanishes in all
//! special ones. This module verifies the hypotheses for a concrete instance
//! and evaluates it.
//!
//! Variable convention: the polynomial may use `X1..Xn` (bound to `xs`),
//! `Y1..Ym` (bound to `ys`), and `Z` (bound to `z`).

use super::ast::JPoly;
use super::eval::{evaluate, EvalError};
use crate::findim::{operator_commute, Element};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MacdonaldError {
    #[error("polynomial has structural degree {degree} in Z; it must be at most 1")]
    NotLinearInZ { degree: usize },
    #[error("variable `{0}` is outside the X1..Xn / Y1..Ym / Z convention for these tuples")]
    UnexpectedVariable(String),
    #[error("{tuple}{i} and {tuple}{j} do not operator-commute (1-based positions)")]
    NotOperatorCommuting {
        tuple: &'static str,
        i: usize,
        j: usize,
    },
    #[error("all supplied elements must live in one algebra")]
    MixedAlgebras,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Outcome of a verified instance evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct MacdonaldReport {
    pub is_zero: bool,
    pub value: Element,
    /// How many operator-commutation pairs were verified across both tuples.
    pub commuting_pairs_checked: usize,
}

/// Check the hypotheses and evaluate one instance.
///
/// `xs` binds `X1..Xn`, `ys` binds `Y1..Ym`, and `z` binds `Z`. The
/// polynomial must be (structurally) at most linear in `Z`, and each tuple
/// must operator-commute pairwise: `[T_a, T_b] = 0` for the multiplication
/// operators of any two members. Under those hypotheses the evaluation is
/// reported with its zero/nonzero status.
pub fn check_macdonald_instance(
    f: &JPoly,
    xs: &[Element],
    ys: &[Element],
    z: &Element,
) -> Result<MacdonaldReport, MacdonaldError> {
    let z_degree = f.degree_in("Z");
    if z_degree > 1 {
        return Err(MacdonaldError::NotLinearInZ { degree: z_degree });
    }

    let alg = z.algebra_arc().clone();
    if xs
        .iter()
        .chain(ys.iter())
        .any(|e| e.algebra().id() != alg.id())
    {
        return Err(MacdonaldError::MixedAlgebras);
    }

    let mut allowed = std::collections::BTreeMap::new();
    for (i, x) in xs.iter().enumerate() {
        allowed.insert(format!("X{}", i + 1), x.clone());
    }
    for (i, y) in ys.iter().enumerate() {
        allowed.insert(format!("Y{}", i + 1), y.clone());
    }
    allowed.insert("Z".to_string(), z.clone());
    for var in f.free_vars() {
        if !allowed.contains_key(&var) {
            return Err(MacdonaldError::UnexpectedVariable(var));
        }
    }

    let mut pairs = 0usize;
    for (tuple, elems) in [("X", xs), ("Y", ys)] {
        for i in 0..elems.len() {
            for j in (i + 1)..elems.len() {
                pairs += 1;
                if !operator_commute(&elems[i], &elems[j]) {
                    return Err(MacdonaldError::NotOperatorCommuting {
                        tuple,
                        i: i + 1,
                        j: j + 1,
                    });
                }
            }
        }
    }

    let value = evaluate(f, &allowed, &alg)?;
    Ok(MacdonaldReport {
        is_zero: value.is_zero(),
        value,
        commuting_pairs_checked: pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{random_element, FinDimAlgebra};
    use crate::identities::glennie::h8_linearized;
    use crate::identities::parser::parse;
    use crate::rational::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    /// The linearized Glennie polynomial in instance-check naming:
    /// X -> X1, W -> X2, Y -> Y1 (Z stays Z).
    fn instance_poly() -> JPoly {
        let map: BTreeMap<String, String> = [
            ("X".to_string(), "X1".to_string()),
            ("W".to_string(), "X2".to_string()),
            ("Y".to_string(), "Y1".to_string()),
        ]
        .into_iter()
        .collect();
        h8_linearized().rename_vars(&map)
    }

    #[test]
    fn trivial_linear_instance_reports_its_value() {
        let alg = FinDimAlgebra::albert_algebra();
        let z = alg.basis_element(0);
        let report = check_macdonald_instance(&parse("Z").unwrap(), &[], &[], &z).unwrap();
        assert!(!report.is_zero);
        assert_eq!(report.value, z);
        assert_eq!(report.commuting_pairs_checked, 0);

        let zero = alg.zero_element();
        let report = check_macdonald_instance(&parse("Z").unwrap(), &[], &[], &zero).unwrap();
        assert!(report.is_zero);
    }

    #[test]
    fn linearized_glennie_vanishes_when_x2_is_polynomial_in_x1() {
        let alg = FinDimAlgebra::albert_algebra();
        let f = instance_poly();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..2 {
            let x = random_element(&alg, &mut rng);
            // A polynomial in x operator-commutes with x.
            let w = x
                .circ(&x)
                .add(&x.scale(&rat(-2, 1)))
                .add(&alg.unit_element().unwrap().scale(&rat(1, 2)));
            let y = random_element(&alg, &mut rng);
            let z = random_element(&alg, &mut rng);
            let report =
                check_macdonald_instance(&f, &[x, w], &[y], &z).unwrap();
            assert!(report.is_zero, "instance value {:?}", report.value);
            assert_eq!(report.commuting_pairs_checked, 1);
        }
    }

    #[test]
    fn non_commuting_tuples_are_rejected_with_positions() {
        let alg = FinDimAlgebra::albert_algebra();
        // Two rank-one projections onto non-orthogonal lines do not
        // operator-commute.
        let q1 = crate::findim::albert_element(&alg, &crate::albert::AlbertElement::diag_unit(0));
        let half = crate::albert::AlbertElement::diag_unit(0)
            .add(&crate::albert::AlbertElement::diag_unit(1))
            .add(&crate::albert::AlbertElement::off_diag(
                0,
                1,
                crate::octonion::Octonion::one(),
            ))
            .scale(&rat(1, 2));
        assert!(half.is_idempotent());
        let q2 = crate::findim::albert_element(&alg, &half);

        let f = instance_poly();
        let y = alg.basis_element(2);
        let z = alg.basis_element(3);
        let err = check_macdonald_instance(&f, &[q1, q2], &[y], &z).unwrap_err();
        assert_eq!(
            err,
            MacdonaldError::NotOperatorCommuting {
                tuple: "X",
                i: 1,
                j: 2
            }
        );
    }

    #[test]
    fn rejects_nonlinear_z_and_unknown_variables() {
        let alg = FinDimAlgebra::albert_algebra();
        let z = alg.basis_element(0);
        let x = alg.basis_element(1);

        let err = check_macdonald_instance(&parse("U[Z](X1)").unwrap(), &[x.clone()], &[], &z)
            .unwrap_err();
        assert_eq!(err, MacdonaldError::NotLinearInZ { degree: 2 });

        let err = check_macdonald_instance(&parse("X3 o Z").unwrap(), &[x.clone()], &[], &z)
            .unwrap_err();
        assert_eq!(err, MacdonaldError::UnexpectedVariable("X3".to_string()));

        let err =
            check_macdonald_instance(&parse("Q o Z").unwrap(), &[x], &[], &z).unwrap_err();
        assert_eq!(err, MacdonaldError::UnexpectedVariable("Q".to_string()));
    }
}
