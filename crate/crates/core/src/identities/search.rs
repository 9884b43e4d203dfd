//! Randomized counterexample search: evaluate a polynomial on pseudo-random
//! elements of a finite-dimensional algebra until it fails to vanish.

use super::ast::JPoly;
use super::eval::{evaluate, EvalError};
use crate::findim::{Element, FinDimAlgebra};
use crate::rational::random_half_integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A nonzero evaluation found by [`find_counterexample`]: the 0-based trial
/// index at which it appeared and the variable assignment that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub trial: usize,
    pub assignment: BTreeMap<String, Element>,
}

/// Search for an assignment on which `f` evaluates to something nonzero.
///
/// Trials are fully deterministic in `(seed, budget)`: trial `t` draws from
/// `ChaCha8` stream `t` of the seed, variables are filled in sorted name
/// order, and each coordinate is a half-integer in `[-2, 2]`. The first
/// failing trial wins; `Ok(None)` means every trial evaluated to zero.
pub fn find_counterexample(
    f: &JPoly,
    algebra: &Arc<FinDimAlgebra>,
    seed: u64,
    budget: usize,
) -> Result<Option<Witness>, EvalError> {
    let vars = f.free_vars();
    for trial in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let mut assignment = BTreeMap::new();
        for name in &vars {
            let coords = (0..algebra.dim())
                .map(|_| random_half_integer(&mut rng, 2))
                .collect();
            let elem = algebra
                .element(coords)
                .expect("random coordinates always have the algebra's dimension");
            assignment.insert(name.clone(), elem);
        }
        let value = evaluate(f, &assignment, algebra)?;
        if !value.is_zero() {
            return Ok(Some(Witness { trial, assignment }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::FinDimAlgebra;
    use crate::identities::glennie::g8;
    use crate::identities::parser::parse;

    #[test]
    fn jordan_identity_has_no_counterexample() {
        let f = parse("((X o X) o Y) o X - (X o X) o (Y o X)").unwrap();
        let alg = FinDimAlgebra::albert_algebra();
        assert_eq!(find_counterexample(&f, &alg, 0, 25).unwrap(), None);
    }

    #[test]
    fn g8_has_no_counterexample_in_a_special_algebra() {
        let alg = FinDimAlgebra::mat_sa(2);
        assert_eq!(find_counterexample(&g8(), &alg, 0, 10).unwrap(), None);
    }

    #[test]
    fn g8_fails_in_the_exceptional_algebra_and_search_is_deterministic() {
        let alg = FinDimAlgebra::albert_algebra();
        let w1 = find_counterexample(&g8(), &alg, 0, 200)
            .unwrap()
            .expect("g8 must fail in the exceptional algebra");
        let value = evaluate(&g8(), &w1.assignment, &alg).unwrap();
        assert!(!value.is_zero());

        let w2 = find_counterexample(&g8(), &alg, 0, 200).unwrap().unwrap();
        assert_eq!(w1, w2);

        // A different seed may find a different witness, but it must still
        // be a genuine one.
        let w3 = find_counterexample(&g8(), &alg, 1, 200).unwrap().unwrap();
        let value3 = evaluate(&g8(), &w3.assignment, &alg).unwrap();
        assert!(!value3.is_zero());
    }

    #[test]
    fn unbound_variables_cannot_occur_but_unit_errors_propagate() {
        // Every free variable is assigned, so the only evaluation error a
        // search can hit is a missing unit.
        let f = parse("X o 1").unwrap();
        let table = vec![vec![vec![crate::rational::rat(0, 1)]]];
        let no_unit =
            crate::findim::FinDimAlgebra::from_parts("null:1", 1, &table, None).unwrap();
        assert_eq!(
            find_counterexample(&f, &no_unit, 0, 3),
            Err(EvalError::NoUnit("null:1".to_string()))
        );
    }
}
