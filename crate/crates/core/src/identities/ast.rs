//! Abstract syntax for Jordan polynomials.
//!
//! A term is built from named variables and the unit out of the Jordan
//! product `o`, quadratic operators `U[a]` and their polarizations `U[a,b]`,
//! triple products `{a,b,c}`, powers, rational scalar multiples, and sums.
//! The tree is deliberately literal: no normalization happens on
//! construction, so a parsed expression prints back exactly the way it was
//! written (up to whitespace).

use crate::rational::{format_rational, Rational};
use num::{One, Signed};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A Jordan polynomial over the rationals in named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JPoly {
    /// A named indeterminate.
    Var(String),
    /// The unit element of the target algebra.
    One,
    /// A rational multiple of a term.
    Scalar(Rational, Box<JPoly>),
    /// A sum of two or more terms.
    Sum(Vec<JPoly>),
    /// The Jordan product `a o b`.
    Circ(Box<JPoly>, Box<JPoly>),
    /// The quadratic operator `U[sub](arg)`.
    U { sub: Box<JPoly>, arg: Box<JPoly> },
    /// The polarized quadratic operator `U[a,b](arg)`.
    UPair {
        a: Box<JPoly>,
        b: Box<JPoly>,
        arg: Box<JPoly>,
    },
    /// The Jordan triple product `{a, b, c}`.
    Triple(Box<JPoly>, Box<JPoly>, Box<JPoly>),
    /// A positive power `base ^ n` with `n >= 1`.
    Power(Box<JPoly>, u32),
}

impl JPoly {
    pub fn var(name: &str) -> JPoly {
        JPoly::Var(name.to_string())
    }

    pub fn scalar(c: Rational, x: JPoly) -> JPoly {
        JPoly::Scalar(c, Box::new(x))
    }

    pub fn sum(terms: Vec<JPoly>) -> JPoly {
        JPoly::Sum(terms)
    }

    pub fn circ(a: JPoly, b: JPoly) -> JPoly {
        JPoly::Circ(Box::new(a), Box::new(b))
    }

    pub fn u(sub: JPoly, arg: JPoly) -> JPoly {
        JPoly::U {
            sub: Box::new(sub),
            arg: Box::new(arg),
        }
    }

    pub fn upair(a: JPoly, b: JPoly, arg: JPoly) -> JPoly {
        JPoly::UPair {
            a: Box::new(a),
            b: Box::new(b),
            arg: Box::new(arg),
        }
    }

    pub fn triple(a: JPoly, b: JPoly, c: JPoly) -> JPoly {
        JPoly::Triple(Box::new(a), Box::new(b), Box::new(c))
    }

    pub fn power(base: JPoly, n: u32) -> JPoly {
        assert!(n >= 1, "powers must have exponent >= 1");
        JPoly::Power(Box::new(base), n)
    }

    pub fn neg(x: JPoly) -> JPoly {
        JPoly::scalar(-Rational::one(), x)
    }

    /// `a - b`, represented as `Sum[a, Scalar(-1, b)]`.
    pub fn sub(a: JPoly, b: JPoly) -> JPoly {
        JPoly::Sum(vec![a, JPoly::neg(b)])
    }

    /// The set of variable names appearing in the polynomial.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            JPoly::Var(name) => {
                out.insert(name.clone());
            }
            JPoly::One => {}
            JPoly::Scalar(_, x) => x.collect_vars(out),
            JPoly::Sum(terms) => {
                for t in terms {
                    t.collect_vars(out);
                }
            }
            JPoly::Circ(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            JPoly::U { sub, arg } => {
                sub.collect_vars(out);
                arg.collect_vars(out);
            }
            JPoly::UPair { a, b, arg } => {
                a.collect_vars(out);
                b.collect_vars(out);
                arg.collect_vars(out);
            }
            JPoly::Triple(a, b, c) => {
                a.collect_vars(out);
                b.collect_vars(out);
                c.collect_vars(out);
            }
            JPoly::Power(base, _) => base.collect_vars(out),
        }
    }

    /// Structural degree in one variable: the maximum over sums, with `U[a]`
    /// counting its subscript twice. This is an upper bound on the true
    /// polynomial degree (cancellation can lower it, never raise it).
    pub fn degree_in(&self, var: &str) -> usize {
        match self {
            JPoly::Var(name) => usize::from(name == var),
            JPoly::One => 0,
            JPoly::Scalar(_, x) => x.degree_in(var),
            JPoly::Sum(terms) => terms.iter().map(|t| t.degree_in(var)).max().unwrap_or(0),
            JPoly::Circ(a, b) => a.degree_in(var) + b.degree_in(var),
            JPoly::U { sub, arg } => 2 * sub.degree_in(var) + arg.degree_in(var),
            JPoly::UPair { a, b, arg } => a.degree_in(var) + b.degree_in(var) + arg.degree_in(var),
            JPoly::Triple(a, b, c) => a.degree_in(var) + b.degree_in(var) + c.degree_in(var),
            JPoly::Power(base, n) => (*n as usize) * base.degree_in(var),
        }
    }

    /// Structural total degree (maximum over sums, additive over products).
    pub fn total_degree(&self) -> usize {
        match self {
            JPoly::Var(_) => 1,
            JPoly::One => 0,
            JPoly::Scalar(_, x) => x.total_degree(),
            JPoly::Sum(terms) => terms.iter().map(|t| t.total_degree()).max().unwrap_or(0),
            JPoly::Circ(a, b) => a.total_degree() + b.total_degree(),
            JPoly::U { sub, arg } => 2 * sub.total_degree() + arg.total_degree(),
            JPoly::UPair { a, b, arg } => {
                a.total_degree() + b.total_degree() + arg.total_degree()
            }
            JPoly::Triple(a, b, c) => a.total_degree() + b.total_degree() + c.total_degree(),
            JPoly::Power(base, n) => (*n as usize) * base.total_degree(),
        }
    }

    /// Simultaneously rename variables according to `map`. Names not in the
    /// map are left alone, and the substitution is simultaneous, so swaps
    /// like `{X -> Y, Y -> X}` work directly.
    pub fn rename_vars(&self, map: &BTreeMap<String, String>) -> JPoly {
        self.map_vars(&|name| match map.get(name) {
            Some(new) => JPoly::Var(new.clone()),
            None => JPoly::Var(name.to_string()),
        })
    }

    /// Replace every occurrence of `var` by `value` (simultaneous, so
    /// variables inside `value` are not themselves rewritten).
    pub fn substitute(&self, var: &str, value: &JPoly) -> JPoly {
        self.map_vars(&|name| {
            if name == var {
                value.clone()
            } else {
                JPoly::Var(name.to_string())
            }
        })
    }

    /// Replace several variables at once.
    pub fn substitute_all(&self, values: &BTreeMap<String, JPoly>) -> JPoly {
        self.map_vars(&|name| match values.get(name) {
            Some(v) => v.clone(),
            None => JPoly::Var(name.to_string()),
        })
    }

    fn map_vars(&self, f: &dyn Fn(&str) -> JPoly) -> JPoly {
        match self {
            JPoly::Var(name) => f(name),
            JPoly::One => JPoly::One,
            JPoly::Scalar(c, x) => JPoly::scalar(c.clone(), x.map_vars(f)),
            JPoly::Sum(terms) => JPoly::Sum(terms.iter().map(|t| t.map_vars(f)).collect()),
            JPoly::Circ(a, b) => JPoly::circ(a.map_vars(f), b.map_vars(f)),
            JPoly::U { sub, arg } => JPoly::u(sub.map_vars(f), arg.map_vars(f)),
            JPoly::UPair { a, b, arg } => {
                JPoly::upair(a.map_vars(f), b.map_vars(f), arg.map_vars(f))
            }
            JPoly::Triple(a, b, c) => {
                JPoly::triple(a.map_vars(f), b.map_vars(f), c.map_vars(f))
            }
            JPoly::Power(base, n) => JPoly::power(base.map_vars(f), *n),
        }
    }
}

// Precedence levels for printing, mirroring the grammar: sums bind loosest,
// then scalar-prefixed terms, then `o`, then `^`; everything else is atomic.
const PREC_SUM: u8 = 0;
const PREC_TERM: u8 = 1;
const PREC_CIRC: u8 = 2;
const PREC_POWER: u8 = 3;
const PREC_ATOM: u8 = 4;

impl JPoly {
    fn prec(&self) -> u8 {
        match self {
            JPoly::Sum(_) => PREC_SUM,
            JPoly::Scalar(..) => PREC_TERM,
            JPoly::Circ(..) => PREC_CIRC,
            JPoly::Power(..) => PREC_POWER,
            _ => PREC_ATOM,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.fmt_prec(f, PREC_SUM)?;
            return write!(f, ")");
        }
        match self {
            JPoly::Var(name) => write!(f, "{name}"),
            JPoly::One => write!(f, "1"),
            JPoly::Scalar(c, x) => {
                write!(f, "{}*", format_rational(c))?;
                x.fmt_prec(f, PREC_CIRC)
            }
            JPoly::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i == 0 {
                        t.fmt_prec(f, PREC_TERM)?;
                        continue;
                    }
                    // Negative scalar multiples print with a subtraction sign;
                    // the parser folds `- c*x` back into `Scalar(-c, x)`.
                    if let JPoly::Scalar(c, x) = t {
                        if c.is_negative() {
                            let pos = -c.clone();
                            if pos.is_one() {
                                write!(f, " - ")?;
                                x.fmt_prec(f, PREC_CIRC)?;
                            } else {
                                write!(f, " - {}*", format_rational(&pos))?;
                                x.fmt_prec(f, PREC_CIRC)?;
                            }
                            continue;
                        }
                    }
                    write!(f, " + ")?;
                    t.fmt_prec(f, PREC_TERM)?;
                }
                Ok(())
            }
            JPoly::Circ(a, b) => {
                a.fmt_prec(f, PREC_CIRC)?;
                write!(f, " o ")?;
                b.fmt_prec(f, PREC_POWER)
            }
            JPoly::U { sub, arg } => {
                write!(f, "U[")?;
                sub.fmt_prec(f, PREC_SUM)?;
                write!(f, "](")?;
                arg.fmt_prec(f, PREC_SUM)?;
                write!(f, ")")
            }
            JPoly::UPair { a, b, arg } => {
                write!(f, "U[")?;
                a.fmt_prec(f, PREC_SUM)?;
                write!(f, ",")?;
                b.fmt_prec(f, PREC_SUM)?;
                write!(f, "](")?;
                arg.fmt_prec(f, PREC_SUM)?;
                write!(f, ")")
            }
            JPoly::Triple(a, b, c) => {
                write!(f, "{{")?;
                a.fmt_prec(f, PREC_SUM)?;
                write!(f, ", ")?;
                b.fmt_prec(f, PREC_SUM)?;
                write!(f, ", ")?;
                c.fmt_prec(f, PREC_SUM)?;
                write!(f, "}}")
            }
            JPoly::Power(base, n) => {
                base.fmt_prec(f, PREC_ATOM)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for JPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, PREC_SUM)
    }
}
