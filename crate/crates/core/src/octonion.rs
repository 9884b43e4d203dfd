//! Rational octonions.
//!
//! Coordinates are over the basis (1, e1, ..., e7). The multiplication
//! table is the Cayley–Dickson doubling of the quaternions (pairs (a, b)
//! with (a,b)(c,d) = (ac − d̄b, da + bc̄), e_{4+k} = (0, q_k)), which gives
//! the seven quaternion triples
//!
//!   e1e2 = e3,  e1e4 = e5,  e2e4 = e6,  e3e4 = e7,
//!   e2e5 = e7,  e3e6 = e5,  e1e7 = e6,
//!
//! each cyclic (e.g. e2e3 = e1), each unit anticommuting with the others
//! of its triple. The table below is frozen; the test suite regenerates it
//! from the doubling construction and compares entry for entry.

use crate::rational::{format_rational, parse_rational, Rational};
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const OCT_DIM: usize = 8;

/// Product of basis units: `MUL_TABLE[i][j] = (sign, k)` means
/// e_i * e_j = sign * e_k.
pub const MUL_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Octonion {
    coords: [Rational; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion {
            coords: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The k-th basis unit (e0 = 1). Panics if `k >= 8`.
    pub fn basis(k: usize) -> Self {
        assert!(k < OCT_DIM, "octonion basis index {k} out of range");
        let mut o = Self::zero();
        o.coords[k] = Rational::one();
        o
    }

    pub fn from_coords(coords: [Rational; 8]) -> Self {
        Octonion { coords }
    }

    pub fn coords(&self) -> &[Rational; 8] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &Rational {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Octonion {
            coords: std::array::from_fn(|k| &self.coords[k] * c),
        }
    }

    /// Real part (coefficient of 1).
    pub fn re(&self) -> &Rational {
        &self.coords[0]
    }

    /// Imaginary part: the octonion with the real coordinate removed.
    pub fn im(&self) -> Self {
        let mut o = self.clone();
        o.coords[0] = Rational::zero();
        o
    }

    pub fn conj(&self) -> Self {
        let mut o = self.clone();
        for c in o.coords[1..].iter_mut() {
            *c = -std::mem::take(c);
        }
        o
    }

    /// Squared euclidean norm; multiplicative: N(xy) = N(x)N(y).
    pub fn norm2(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[i][j];
                let term = a * b;
                if sign > 0 {
                    out.coords[k] += term;
                } else {
                    out.coords[k] -= term;
                }
            }
        }
        out
    }

    /// (ab)c − a(bc). Alternativity makes this alternating in its three
    /// arguments, so it vanishes for one triple iff it vanishes for all
    /// permutations of that triple.
    pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
        &(&a.mul(b)).mul(c) - &a.mul(&b.mul(c))
    }

    pub fn is_associating_triple(a: &Octonion, b: &Octonion, c: &Octonion) -> bool {
        Self::associator(a, b, c).is_zero()
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]),
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|k| -&self.coords[k]),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e{k}")?;
            } else {
                write!(f, "{mag}*e{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Octonion {
    /// Array of 8 rational strings, e.g. `["1/2","0","-3",...]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coords.iter().map(format_rational).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = <[String; 8]>::deserialize(deserializer)?;
        let mut coords = std::array::from_fn(|_| Rational::zero());
        for (k, s) in strings.iter().enumerate() {
            coords[k] = parse_rational(s).map_err(D::Error::custom)?;
        }
        Ok(Octonion { coords })
    }
}
