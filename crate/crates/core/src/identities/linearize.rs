//! Complete linearization (polarization) of homogeneous Jordan polynomials.
//!
//! Given `F` homogeneous of degree `d_i` in each declared variable, the
//! complete linearization replaces the `i`-th variable by `d_i` fresh slot
//! variables and is multilinear in all the slots; plugging the original
//! value into every slot of a variable restores `F` exactly (the inclusion-
//! exclusion sum is normalized by `1 / prod d_i!`).

use super::ast::JPoly;
use super::eval::{evaluate, EvalError, FreeJordanBackend};
use crate::freespecial::NcPoly;
use crate::rational::{rat, Rational};
use num::{BigInt, One};
use std::collections::BTreeMap;
use thiserror::Error;

/// Slot letters assigned to successive declared variables: the first
/// variable's slots are `W1..`, the second's `V1..`, and so on.
const SLOT_LETTERS: [&str; 8] = ["W", "V", "T", "S", "R", "Q", "N", "M"];

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinearizeError {
    #[error("variable `{0}` appears in the polynomial but was not declared")]
    UndeclaredVariable(String),
    #[error("variable `{0}` was declared more than once")]
    DuplicateVariable(String),
    #[error("variable `{0}` must be declared with degree at least 1")]
    ZeroDegree(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("polynomial is not homogeneous of degree {declared} in `{var}`")]
    NotHomogeneous { var: String, declared: usize },
    #[error("evaluation failed during the homogeneity probe: {0}")]
    Eval(#[from] EvalError),
}

/// The result of a complete linearization: the multilinear polynomial and,
/// per original variable, the names of the slot variables that replaced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearization {
    pub poly: JPoly,
    pub slots: Vec<(String, Vec<String>)>,
}

/// Fully polarize `f`, declared homogeneous of degree `d` in each listed
/// variable. Homogeneity is verified by a scaling probe in the free special
/// algebra before any expansion happens, so a bad declaration is rejected
/// rather than silently producing a polynomial that fails the restitution
/// identity.
pub fn complete_linearization(
    f: &JPoly,
    degrees: &[(String, usize)],
) -> Result<Linearization, LinearizeError> {
    if degrees.len() > SLOT_LETTERS.len() {
        return Err(LinearizeError::TooManyVariables {
            max: SLOT_LETTERS.len(),
            got: degrees.len(),
        });
    }
    let mut declared: BTreeMap<&str, usize> = BTreeMap::new();
    for (name, d) in degrees {
        if *d == 0 {
            return Err(LinearizeError::ZeroDegree(name.clone()));
        }
        if declared.insert(name, *d).is_some() {
            return Err(LinearizeError::DuplicateVariable(name.clone()));
        }
    }
    for var in f.free_vars() {
        if !declared.contains_key(var.as_str()) {
            return Err(LinearizeError::UndeclaredVariable(var));
        }
    }

    probe_homogeneity(f, degrees)?;

    // Slot names per variable.
    let slots: Vec<(String, Vec<String>)> = degrees
        .iter()
        .enumerate()
        .map(|(i, (name, d))| {
            let names = (1..=*d).map(|k| format!("{}{}", SLOT_LETTERS[i], k)).collect();
            (name.clone(), names)
        })
        .collect();

    // Normalization 1 / prod d_i!.
    let mut denom = BigInt::one();
    for (_, d) in degrees {
        for k in 2..=*d {
            denom *= BigInt::from(k);
        }
    }
    let norm = Rational::new(BigInt::one(), denom);

    // Inclusion–exclusion over nonempty subsets of each variable's slots.
    let masks_per_var: Vec<Vec<u32>> = degrees
        .iter()
        .map(|(_, d)| (1u32..(1u32 << *d)).collect())
        .collect();
    let mut terms = Vec::new();
    let mut choice = vec![0usize; degrees.len()];
    loop {
        let mut sign_negative = false;
        let mut substitution: BTreeMap<String, JPoly> = BTreeMap::new();
        for (i, (name, d)) in degrees.iter().enumerate() {
            let mask = masks_per_var[i][choice[i]];
            let picked: Vec<JPoly> = (0..*d)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| JPoly::Var(slots[i].1[k].clone()))
                .collect();
            if (d - picked.len()) % 2 == 1 {
                sign_negative = !sign_negative;
            }
            let replacement = if picked.len() == 1 {
                picked.into_iter().next().unwrap()
            } else {
                JPoly::Sum(picked)
            };
            substitution.insert(name.clone(), replacement);
        }
        let coeff = if sign_negative {
            -norm.clone()
        } else {
            norm.clone()
        };
        terms.push(JPoly::scalar(coeff, f.substitute_all(&substitution)));

        // Advance the mixed-radix counter over subset choices.
        let mut i = 0;
        loop {
            if i == degrees.len() {
                return Ok(Linearization {
                    poly: if terms.len() == 1 {
                        terms.pop().unwrap()
                    } else {
                        JPoly::Sum(terms)
                    },
                    slots,
                });
            }
            choice[i] += 1;
            if choice[i] < masks_per_var[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Verify `f` is homogeneous of the declared degree in each variable by
/// doubling that variable in the free special algebra and comparing against
/// the expected power-of-two scaling.
fn probe_homogeneity(f: &JPoly, degrees: &[(String, usize)]) -> Result<(), LinearizeError> {
    // Polarized multiplications can square intermediate degrees relative to
    // the structural count, so leave generous headroom on the cap.
    let cap = (2 * f.total_degree() + 4).max(crate::freespecial::DEFAULT_DEGREE_CAP);
    let backend = FreeJordanBackend::with_cap(cap);
    let base_env: BTreeMap<String, NcPoly> = degrees
        .iter()
        .enumerate()
        .map(|(i, (name, _))| (name.clone(), NcPoly::var(i as u32)))
        .collect();
    let base = evaluate(f, &base_env, &backend)?;
    for (i, (name, d)) in degrees.iter().enumerate() {
        let mut env = base_env.clone();
        env.insert(name.clone(), NcPoly::var(i as u32).scale(&rat(2, 1)));
        let scaled = evaluate(f, &env, &backend)?;
        let expected = base.scale(&Rational::from_integer(BigInt::one() << *d));
        if scaled != expected {
            return Err(LinearizeError::NotHomogeneous {
                var: name.clone(),
                declared: *d,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{random_element, FinDimAlgebra};
    use crate::identities::parser::parse;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn deg(pairs: &[(&str, usize)]) -> Vec<(String, usize)> {
        pairs.iter().map(|(n, d)| (n.to_string(), *d)).collect()
    }

    #[test]
    fn square_linearizes_to_the_circle_product() {
        let lin =
            complete_linearization(&parse("X^2").unwrap(), &deg(&[("X", 2)])).unwrap();
        assert_eq!(lin.slots, vec![("X".to_string(), vec!["W1".into(), "W2".into()])]);
        // Value check: the polarization of X^2 is W1 o W2.
        let backend = FreeJordanBackend::default();
        let env: BTreeMap<String, NcPoly> = [
            ("W1".to_string(), NcPoly::var(0)),
            ("W2".to_string(), NcPoly::var(1)),
        ]
        .into_iter()
        .collect();
        let got = evaluate(&lin.poly, &env, &backend).unwrap();
        let want = evaluate(&parse("W1 o W2").unwrap(), &env, &backend).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn multilinear_input_is_returned_up_to_renaming() {
        let lin =
            complete_linearization(&parse("X o Y").unwrap(), &deg(&[("X", 1), ("Y", 1)]))
                .unwrap();
        assert_eq!(
            lin.slots,
            vec![
                ("X".to_string(), vec!["W1".to_string()]),
                ("Y".to_string(), vec!["V1".to_string()]),
            ]
        );
        let backend = FreeJordanBackend::default();
        let env: BTreeMap<String, NcPoly> = [
            ("W1".to_string(), NcPoly::var(0)),
            ("V1".to_string(), NcPoly::var(1)),
        ]
        .into_iter()
        .collect();
        let got = evaluate(&lin.poly, &env, &backend).unwrap();
        let want = evaluate(&parse("W1 o V1").unwrap(), &env, &backend).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn restitution_recovers_the_original_polynomial() {
        // Filling every slot of a variable with the variable itself must give
        // back F on the nose, normalization included.
        let backend = FreeJordanBackend::default();
        let cases = [
            ("X^2", deg(&[("X", 2)])),
            ("X^2 o Y", deg(&[("X", 2), ("Y", 1)])),
            ("X o (Y o X^2)", deg(&[("X", 3), ("Y", 1)])),
        ];
        for (src, degrees) in cases {
            let f = parse(src).unwrap();
            let lin = complete_linearization(&f, &degrees).unwrap();
            let mut env: BTreeMap<String, NcPoly> = BTreeMap::new();
            let mut orig_env: BTreeMap<String, NcPoly> = BTreeMap::new();
            for (i, (name, slot_names)) in lin.slots.iter().enumerate() {
                let val = NcPoly::var(i as u32);
                orig_env.insert(name.clone(), val.clone());
                for s in slot_names {
                    env.insert(s.clone(), val.clone());
                }
            }
            let restituted = evaluate(&lin.poly, &env, &backend).unwrap();
            let original = evaluate(&f, &orig_env, &backend).unwrap();
            assert_eq!(restituted, original, "restitution failed for {src}");
        }
    }

    #[test]
    fn result_is_multilinear_in_each_slot() {
        let f = parse("X o (Y o X^2)").unwrap();
        let lin = complete_linearization(&f, &deg(&[("X", 3), ("Y", 1)])).unwrap();
        let alg = FinDimAlgebra::albert_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut env: BTreeMap<String, _> = BTreeMap::new();
        for (_, slot_names) in &lin.slots {
            for s in slot_names {
                env.insert(s.clone(), random_element(&alg, &mut rng));
            }
        }
        let base = evaluate(&lin.poly, &env, &alg).unwrap();
        // Scaling one slot scales the value; replacing it with a sum adds.
        for slot in ["W1", "W2", "W3", "V1"] {
            let mut scaled_env = env.clone();
            scaled_env.insert(slot.to_string(), env[slot].scale(&rat(3, 1)));
            let scaled = evaluate(&lin.poly, &scaled_env, &alg).unwrap();
            assert_eq!(scaled, base.scale(&rat(3, 1)), "not linear in {slot}");
        }
        let u = random_element(&alg, &mut rng);
        let mut sum_env = env.clone();
        sum_env.insert("W2".to_string(), env["W2"].add(&u));
        let mut u_env = env.clone();
        u_env.insert("W2".to_string(), u);
        let lhs = evaluate(&lin.poly, &sum_env, &alg).unwrap();
        let rhs = base.add(&evaluate(&lin.poly, &u_env, &alg).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_bad_declarations() {
        let f = parse("X + X^2").unwrap();
        assert_eq!(
            complete_linearization(&f, &deg(&[("X", 2)])),
            Err(LinearizeError::NotHomogeneous {
                var: "X".to_string(),
                declared: 2
            })
        );
        assert_eq!(
            complete_linearization(&parse("X o Y").unwrap(), &deg(&[("X", 1)])),
            Err(LinearizeError::UndeclaredVariable("Y".to_string()))
        );
        assert_eq!(
            complete_linearization(&parse("X").unwrap(), &deg(&[("X", 0)])),
            Err(LinearizeError::ZeroDegree("X".to_string()))
        );
        assert_eq!(
            complete_linearization(&parse("X").unwrap(), &deg(&[("X", 1), ("X", 1)])),
            Err(LinearizeError::DuplicateVariable("X".to_string()))
        );
        // Declared-but-absent variables also fail the probe (F is then not
        // homogeneous of positive degree in them).
        assert!(matches!(
            complete_linearization(&parse("X^2").unwrap(), &deg(&[("X", 2), ("Y", 1)])),
            Err(LinearizeError::NotHomogeneous { .. })
        ));
    }
}
