//! Noncommutative polynomials with rational coefficients — the free unital
//! associative algebra on countably many variables X1, X2, ... — together
//! with the Jordan structure (xy + yx)/2 it carries, an enumeration of the
//! Jordan monomials it generates, and the left-regular action
//! phi(s) = l_s + l_s* used to separate Jordan polynomials from zero.

use crate::rational::{format_rational, Rational};
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Degree cap used by evaluators when none is chosen explicitly; comfortably
/// above the degree-8/9 identities this crate manipulates.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// A word over the variable alphabet; the empty word is the unit monomial.
/// Ordered by length first, then lexicographically, so term order is
/// degree-compatible.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("product degree {degree} exceeds cap {cap}")]
pub struct DegreeOverflow {
    pub degree: usize,
    pub cap: usize,
}

/// Finitely many words with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        NcPoly { terms }
    }

    /// The variable X{k+1} as a polynomial.
    pub fn var(k: u32) -> Self {
        Self::monomial(Word(vec![k]), Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree of the longest word present; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Sum of the maximal-degree terms. Zero maps to zero.
    pub fn top_component(&self) -> NcPoly {
        match self.degree() {
            None => NcPoly::zero(),
            Some(d) => NcPoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(w, _)| w.len() == d)
                    .map(|(w, c)| (w.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Word-concatenation product, extended bilinearly.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.0.clone();
                w.extend_from_slice(&w2.0);
                out.add_term(Word(w), c1 * c2);
            }
        }
        out
    }

    /// As `mul`, but any product word longer than `cap` is a hard error —
    /// results are never silently truncated.
    pub fn mul_capped(&self, other: &NcPoly, cap: usize) -> Result<NcPoly, DegreeOverflow> {
        if let (Some(d1), Some(d2)) = (self.degree(), other.degree()) {
            if d1 + d2 > cap {
                // the top components cannot cancel in an associative product
                return Err(DegreeOverflow { degree: d1 + d2, cap });
            }
        }
        Ok(self.mul(other))
    }
}

/// Jordan product (pq + qp)/2.
pub fn jordan_circ(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p.mul(q).add(&q.mul(p)).scale(&crate::rational::rat(1, 2))
}

pub fn jordan_circ_capped(p: &NcPoly, q: &NcPoly, cap: usize) -> Result<NcPoly, DegreeOverflow> {
    Ok(p.mul_capped(q, cap)?
        .add(&q.mul_capped(p, cap)?)
        .scale(&crate::rational::rat(1, 2)))
}

/// The left-regular action of Prop-style injectivity arguments: each letter s
/// acts as l_s + l_s*, where l_s prepends s and l_s* removes a leading s
/// (killing words that do not start with s). A word acts by composing its
/// letters' actions, rightmost letter applied first, so the action is
/// multiplicative: (FG)(v) = F(G(v)).
pub fn left_regular_apply(f: &NcPoly, v: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in &f.terms {
        let mut acc = v.clone();
        for s in w.0.iter().rev() {
            acc = letter_action(*s, &acc);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

fn letter_action(s: u32, v: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in &v.terms {
        // l_s: prepend
        let mut prepended = Vec::with_capacity(w.len() + 1);
        prepended.push(s);
        prepended.extend_from_slice(&w.0);
        out.add_term(Word(prepended), c.clone());
        // l_s*: delete a leading s, or kill
        if w.0.first() == Some(&s) {
            out.add_term(Word(w.0[1..].to_vec()), c.clone());
        }
    }
    out
}

/// All distinct Jordan monomials in the first `nvars` variables of total
/// degree 1..=max_deg: the closure of the variables under the Jordan product,
/// graded by degree. Deterministic order (by degree, then term order).
pub fn jordan_monomials(nvars: u32, max_deg: usize) -> Vec<NcPoly> {
    let mut by_deg: Vec<Vec<NcPoly>> = vec![Vec::new(); max_deg + 1];
    let mut seen = BTreeSet::new();
    if max_deg >= 1 {
        for k in 0..nvars {
            let v = NcPoly::var(k);
            seen.insert(v.clone());
            by_deg[1].push(v);
        }
    }
    for d in 2..=max_deg {
        for i in 1..=d / 2 {
            let j = d - i;
            for (ai, a) in by_deg[i].clone().iter().enumerate() {
                let partners = by_deg[j].clone();
                let start = if i == j { ai } else { 0 };
                for b in &partners[start..] {
                    let m = jordan_circ(a, b);
                    if !m.is_zero() && seen.insert(m.clone()) {
                        by_deg[d].push(m);
                    }
                }
            }
        }
        by_deg[d].sort();
    }
    by_deg.into_iter().flatten().collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcParseError {
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar { at: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("malformed number at byte {at}")]
    BadNumber { at: usize },
}

impl fmt::Display for NcPoly {
    /// Canonical text form: terms in degree-then-lexicographic order, words
    /// printed as concatenated variables, e.g. "1/2*X1X2 + X3 - 2*X1X1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let word_str: String = w.0.iter().map(|k| format!("X{}", k + 1)).collect();
            if w.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{word_str}")?;
            } else {
                write!(f, "{}*{word_str}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Parse the canonical text form printed by Display; round-trips exactly.
pub fn parse_ncpoly(text: &str) -> Result<NcPoly, NcParseError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut out = NcPoly::zero();
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(NcParseError::UnexpectedEnd);
    }
    let mut sign = Rational::one();
    if bytes[pos] == '-' {
        sign = -sign;
        pos += 1;
    } else if bytes[pos] == '+' {
        pos += 1;
    }
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(NcParseError::UnexpectedEnd);
        }
        // term := rational ('*' word)? | word
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == '/') {
                pos += 1;
            }
            let s: String = bytes[start..pos].iter().collect();
            coeff = crate::rational::parse_rational(&s)
                .map_err(|_| NcParseError::BadNumber { at: start })?;
            have_coeff = true;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
        }
        let mut word = Vec::new();
        while pos < bytes.len() && bytes[pos] == 'X' {
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(NcParseError::BadNumber { at: start });
            }
            let n: u32 = bytes[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| NcParseError::BadNumber { at: start })?;
            if n == 0 {
                return Err(NcParseError::BadNumber { at: start });
            }
            word.push(n - 1);
        }
        if !have_coeff && word.is_empty() {
            return Err(NcParseError::UnexpectedChar {
                at: pos,
                found: if pos < bytes.len() { bytes[pos] } else { '␄' },
            });
        }
        out.add_term(Word(word), &sign * coeff);
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        sign = match bytes[pos] {
            '+' => Rational::one(),
            '-' => -Rational::one(),
            other => return Err(NcParseError::UnexpectedChar { at: pos, found: other }),
        };
        pos += 1;
    }
    Ok(out)
}
