//! Finite-dimensional Jordan algebras over the rationals, described by
//! structure constants: basis products b_i o b_j = sum_k c_ij^k b_k.
//!
//! The engine is generic; three families are built in:
//! * `albert_algebra()` — the 27-dimensional algebra of [`crate::albert`],
//!   with its table exported from the octonion-matrix implementation,
//! * `mat_sa(n)` — real symmetric n x n matrices under (xy + yx)/2,
//! * `spin_factor(k)` — R + R^k with (a,u) o (b,v) = (ab + <u,v>, av + bu).
//!
//! On top of the tables: multiplication operators, operator commutation,
//! subalgebra closure (with canonical echelon bases), Peirce projections
//! and decompositions, and the Peirce multiplication rules with violation
//! witnesses.

use crate::albert::{AlbertElement, ALBERT_DIM};
use crate::matrix::{RatMat, RowSpace};
use crate::rational::{format_rational, parse_rational, rat, Rational};
use num::{One, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinDimError {
    #[error("structure constants are not commutative at basis pair ({i}, {j})")]
    NonCommutativeTable { i: usize, j: usize },
    #[error("declared unit does not fix basis element {i}")]
    BadUnit { i: usize },
    #[error("structure table has wrong shape")]
    BadTableShape,
    #[error("coordinate vector has length {got}, algebra dimension is {expected}")]
    WrongCoordLength { expected: usize, got: usize },
    #[error("elements belong to different algebras ({0} vs {1})")]
    MixedAlgebras(String, String),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("algebra {0} has no unit")]
    NoUnit(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotents {r} and {s} are not orthogonal")]
    NotOrthogonal { r: usize, s: usize },
    #[error("idempotent system does not sum to the unit")]
    NotPartitionOfUnity,
    #[error("malformed algebra description: {0}")]
    BadDescription(String),
}

/// A finite-dimensional commutative algebra given by structure constants.
/// Products are stored sparsely: `table[i*dim + j]` lists the nonzero
/// coefficients of b_i o b_j.
pub struct FinDimAlgebra {
    id: String,
    dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
    unit: Option<Vec<Rational>>,
}

impl FinDimAlgebra {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    /// The 27-dimensional exceptional algebra, table generated once from the
    /// octonion-matrix product and cached for the process lifetime.
    pub fn albert_algebra() -> Arc<FinDimAlgebra> {
        static CACHE: OnceLock<Arc<FinDimAlgebra>> = OnceLock::new();
        CACHE
            .get_or_init(|| {
                let dim = ALBERT_DIM;
                let basis: Vec<AlbertElement> = (0..dim).map(AlbertElement::basis).collect();
                let mut table = Vec::with_capacity(dim * dim);
                for bi in &basis {
                    for bj in &basis {
                        table.push(sparsify(&bi.circ(bj).coords()));
                    }
                }
                Arc::new(FinDimAlgebra {
                    id: "albert".into(),
                    dim,
                    table,
                    unit: Some(AlbertElement::unit().coords()),
                })
            })
            .clone()
    }

    /// Real symmetric n x n matrices under the symmetrized product.
    /// Basis: E_11 .. E_nn, then E_ij + E_ji for i < j in lexicographic order.
    pub fn mat_sa(n: usize) -> Arc<FinDimAlgebra> {
        assert!(n >= 1, "matrix size must be positive");
        let dim = n * (n + 1) / 2;
        let id = format!("mat_sa:{n}");
        let basis: Vec<RatMat> = (0..dim).map(|k| mat_sa_basis_matrix(n, k)).collect();
        let mut table = Vec::with_capacity(dim * dim);
        let half = rat(1, 2);
        for bi in &basis {
            for bj in &basis {
                let sym = bi.mul(bj).add(&bj.mul(bi)).scale(&half);
                table.push(sparsify(&sym_matrix_to_coords(&sym)));
            }
        }
        let mut unit = vec![Rational::zero(); dim];
        for u in unit.iter_mut().take(n) {
            *u = Rational::one();
        }
        Arc::new(FinDimAlgebra { id, dim, table, unit: Some(unit) })
    }

    /// Spin factor R + R^k: basis b_0 = (1, 0) (the unit) and b_i = (0, eta_i);
    /// products b_0 o x = x and b_i o b_j = delta_ij b_0.
    pub fn spin_factor(k: usize) -> Arc<FinDimAlgebra> {
        assert!(k >= 1, "spin factor rank must be positive");
        let dim = k + 1;
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = if i == 0 {
                    vec![(j, Rational::one())]
                } else if j == 0 {
                    vec![(i, Rational::one())]
                } else if i == j {
                    vec![(0, Rational::one())]
                } else {
                    Vec::new()
                };
            }
        }
        let mut unit = vec![Rational::zero(); dim];
        unit[0] = Rational::one();
        Arc::new(FinDimAlgebra {
            id: format!("spin:{k}"),
            dim,
            table,
            unit: Some(unit),
        })
    }

    /// Resolve "albert", "mat_sa:<n>" or "spin:<k>".
    pub fn builtin(spec: &str) -> Option<Arc<FinDimAlgebra>> {
        if spec == "albert" {
            return Some(Self::albert_algebra());
        }
        if let Some(n) = spec.strip_prefix("mat_sa:") {
            let n: usize = n.parse().ok().filter(|&n| n >= 1)?;
            return Some(Self::mat_sa(n));
        }
        if let Some(k) = spec.strip_prefix("spin:") {
            let k: usize = k.parse().ok().filter(|&k| k >= 1)?;
            return Some(Self::spin_factor(k));
        }
        None
    }

    /// Build from a dense structure-constant cube `structure[i][j][k]` and an
    /// optional unit vector, validating commutativity and the unit action.
    pub fn from_parts(
        id: &str,
        dim: usize,
        structure: &[Vec<Vec<Rational>>],
        unit: Option<Vec<Rational>>,
    ) -> Result<Arc<FinDimAlgebra>, FinDimError> {
        if structure.len() != dim
            || structure
                .iter()
                .any(|p| p.len() != dim || p.iter().any(|q| q.len() != dim))
        {
            return Err(FinDimError::BadTableShape);
        }
        for i in 0..dim {
            for j in 0..i {
                if structure[i][j] != structure[j][i] {
                    return Err(FinDimError::NonCommutativeTable { i, j });
                }
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(FinDimError::WrongCoordLength { expected: dim, got: u.len() });
            }
        }
        let mut table = Vec::with_capacity(dim * dim);
        for row in structure {
            for cell in row {
                table.push(sparsify(cell));
            }
        }
        let alg = Arc::new(FinDimAlgebra { id: id.to_string(), dim, table, unit });
        if let Some(u) = alg.unit.clone() {
            let ue = Element { algebra: alg.clone(), coords: u };
            for i in 0..dim {
                if ue.circ(&alg.basis_element(i)) != alg.basis_element(i) {
                    return Err(FinDimError::BadUnit { i });
                }
            }
        }
        Ok(alg)
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<Element, FinDimError> {
        if coords.len() != self.dim {
            return Err(FinDimError::WrongCoordLength { expected: self.dim, got: coords.len() });
        }
        Ok(Element { algebra: self.clone(), coords })
    }

    pub fn zero_element(self: &Arc<Self>) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![Rational::zero(); self.dim],
        }
    }

    pub fn basis_element(self: &Arc<Self>, k: usize) -> Element {
        assert!(k < self.dim, "basis index {k} out of range");
        let mut coords = vec![Rational::zero(); self.dim];
        coords[k] = Rational::one();
        Element { algebra: self.clone(), coords }
    }

    pub fn unit_element(self: &Arc<Self>) -> Option<Element> {
        self.unit.as_ref().map(|u| Element {
            algebra: self.clone(),
            coords: u.clone(),
        })
    }

    /// Dense JSON description: { "dim", "structure", "unit" }.
    pub fn to_json(&self) -> Value {
        let mut structure = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(self.dim);
            for j in 0..self.dim {
                let mut cell = vec![Rational::zero(); self.dim];
                for (k, c) in self.basis_product(i, j) {
                    cell[*k] = c.clone();
                }
                row.push(cell.iter().map(format_rational).collect::<Vec<_>>());
            }
            structure.push(row);
        }
        json!({
            "dim": self.dim,
            "structure": structure,
            "unit": self.unit.as_ref().map(|u| u.iter().map(format_rational).collect::<Vec<_>>()),
        })
    }

    pub fn from_json(id: &str, v: &Value) -> Result<Arc<FinDimAlgebra>, FinDimError> {
        let bad = |m: &str| FinDimError::BadDescription(m.to_string());
        let dim = v["dim"].as_u64().ok_or_else(|| bad("missing dim"))? as usize;
        let parse_vec = |v: &Value| -> Result<Vec<Rational>, FinDimError> {
            v.as_array()
                .ok_or_else(|| bad("expected array of rationals"))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .ok_or_else(|| bad("rationals must be strings"))
                        .and_then(|s| {
                            parse_rational(s)
                                .map_err(|e| bad(&format!("bad rational {s:?}: {e}")))
                        })
                })
                .collect()
        };
        let structure: Vec<Vec<Vec<Rational>>> = v["structure"]
            .as_array()
            .ok_or_else(|| bad("missing structure"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("structure rows must be arrays"))?
                    .iter()
                    .map(parse_vec)
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let unit = match &v["unit"] {
            Value::Null => None,
            u => Some(parse_vec(u)?),
        };
        Self::from_parts(id, dim, &structure, unit)
    }
}

fn sparsify(coords: &[Rational]) -> Vec<(usize, Rational)> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Index map for the mat_sa basis: diagonal cells first, then upper pairs.
fn mat_sa_basis_matrix(n: usize, k: usize) -> RatMat {
    let mut m = RatMat::zeros(n, n);
    if k < n {
        m.set(k, k, Rational::one());
        return m;
    }
    let mut idx = n;
    for i in 0..n {
        for j in i + 1..n {
            if idx == k {
                m.set(i, j, Rational::one());
                m.set(j, i, Rational::one());
                return m;
            }
            idx += 1;
        }
    }
    panic!("basis index {k} out of range for mat_sa:{n}");
}

fn sym_matrix_to_coords(m: &RatMat) -> Vec<Rational> {
    let n = m.rows();
    let mut coords = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        coords.push(m.get(i, i).clone());
    }
    for i in 0..n {
        for j in i + 1..n {
            debug_assert_eq!(m.get(i, j), m.get(j, i));
            coords.push(m.get(i, j).clone());
        }
    }
    coords
}

/// Matrix size n of a `mat_sa:<n>` algebra, if it is one.
pub fn mat_sa_size(alg: &FinDimAlgebra) -> Option<usize> {
    alg.id().strip_prefix("mat_sa:")?.parse().ok()
}

/// Dense symmetric matrix carried by a mat_sa element.
pub fn mat_sa_to_matrix(x: &Element) -> RatMat {
    let n = mat_sa_size(x.algebra()).expect("element of a mat_sa algebra");
    let coords = x.coords();
    let mut m = RatMat::zeros(n, n);
    for i in 0..n {
        m.set(i, i, coords[i].clone());
    }
    let mut idx = n;
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, coords[idx].clone());
            m.set(j, i, coords[idx].clone());
            idx += 1;
        }
    }
    m
}

pub fn mat_sa_from_matrix(alg: &Arc<FinDimAlgebra>, m: &RatMat) -> Element {
    let n = mat_sa_size(alg).expect("a mat_sa algebra");
    assert_eq!((m.rows(), m.cols()), (n, n));
    Element {
        algebra: alg.clone(),
        coords: sym_matrix_to_coords(m),
    }
}

/// Associative sandwich x y x computed entrywise — the independent check that
/// the Jordan-theoretic U agrees with the matrix formula in mat_sa.
pub fn mat_sa_sandwich(x: &Element, y: &Element) -> Element {
    let xm = mat_sa_to_matrix(x);
    let ym = mat_sa_to_matrix(y);
    mat_sa_from_matrix(x.algebra_arc(), &xm.mul(&ym).mul(&xm))
}

/// Whether two mat_sa elements commute as associative matrices.
pub fn mat_sa_commutes(x: &Element, y: &Element) -> bool {
    mat_sa_to_matrix(x).commutes_with(&mat_sa_to_matrix(y))
}

#[derive(Clone)]
pub struct Element {
    algebra: Arc<FinDimAlgebra>,
    coords: Vec<Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.id == other.algebra.id && self.coords == other.coords
    }
}

impl Eq for Element {}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Element[{}](", self.algebra.id)?;
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
            first = false;
        }
        write!(f, ")")
    }
}

impl Element {
    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn assert_same_algebra(&self, other: &Element) {
        assert_eq!(
            self.algebra.id, other.algebra.id,
            "elements belong to different algebras"
        );
    }

    pub fn add(&self, other: &Element) -> Element {
        self.assert_same_algebra(other);
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.assert_same_algebra(other);
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Jordan product through the structure table.
    pub fn circ(&self, other: &Element) -> Element {
        self.assert_same_algebra(other);
        let dim = self.algebra.dim;
        let mut out = vec![Rational::zero(); dim];
        for (i, ci) in self.coords.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coords.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let w = ci * cj;
                for (k, c) in self.algebra.basis_product(i, j) {
                    out[*k] += &w * c;
                }
            }
        }
        Element { algebra: self.algebra.clone(), coords: out }
    }

    pub fn square(&self) -> Element {
        self.circ(self)
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// U_a(b) = 2 a o (a o b) - a^2 o b.
    pub fn quadratic_u(&self, b: &Element) -> Element {
        self.circ(&self.circ(b))
            .scale(&crate::rational::int(2))
            .sub(&self.square().circ(b))
    }

    /// (U_{a+b} - U_a - U_b)/2 applied to y.
    pub fn upair(a: &Element, b: &Element, y: &Element) -> Element {
        let sum = a.add(b);
        sum.quadratic_u(y)
            .sub(&a.quadratic_u(y))
            .sub(&b.quadratic_u(y))
            .scale(&rat(1, 2))
    }

    /// {a,b,c} = 2[(a o b) o c + (b o c) o a - (a o c) o b].
    pub fn triple(a: &Element, b: &Element, c: &Element) -> Element {
        a.circ(b)
            .circ(c)
            .add(&b.circ(c).circ(a))
            .sub(&a.circ(c).circ(b))
            .scale(&crate::rational::int(2))
    }

    /// Matrix of left multiplication T_x : y -> x o y in the basis.
    pub fn mult_operator(&self) -> RatMat {
        let dim = self.algebra.dim;
        let mut m = RatMat::zeros(dim, dim);
        for (i, ci) in self.coords.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for j in 0..dim {
                for (k, c) in self.algebra.basis_product(i, j) {
                    let v = m.get(*k, j) + &(ci * c);
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// JSON encoding { "algebra": id, "coords": [rational strings] }.
    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.id,
            "coords": self.coords.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(algebra: &Arc<FinDimAlgebra>, v: &Value) -> Result<Element, FinDimError> {
        let bad = |m: String| FinDimError::BadDescription(m);
        let id = v["algebra"]
            .as_str()
            .ok_or_else(|| bad("missing algebra id".into()))?;
        if id != algebra.id {
            return Err(FinDimError::MixedAlgebras(id.to_string(), algebra.id.clone()));
        }
        let coords: Vec<Rational> = v["coords"]
            .as_array()
            .ok_or_else(|| bad("missing coords".into()))?
            .iter()
            .map(|s| {
                s.as_str()
                    .ok_or_else(|| bad("coords must be rational strings".into()))
                    .and_then(|s| {
                        parse_rational(s).map_err(|e| bad(format!("bad rational {s:?}: {e}")))
                    })
            })
            .collect::<Result<_, _>>()?;
        algebra.element(coords)
    }
}

/// Whether the multiplication operators of x and y commute: T_x T_y = T_y T_x.
pub fn operator_commute(x: &Element, y: &Element) -> bool {
    x.assert_same_algebra(y);
    x.mult_operator().commutes_with(&y.mult_operator())
}

/// View an Albert-module element in the table-driven algebra.
pub fn albert_element(alg: &Arc<FinDimAlgebra>, a: &AlbertElement) -> Element {
    assert_eq!(alg.id(), "albert", "expected the albert algebra");
    Element {
        algebra: alg.clone(),
        coords: a.coords(),
    }
}

/// Seeded random element with coordinates in {-3..3}/2.
pub fn random_element<R: Rng>(alg: &Arc<FinDimAlgebra>, rng: &mut R) -> Element {
    Element {
        algebra: alg.clone(),
        coords: (0..alg.dim())
            .map(|_| crate::rational::random_half_integer(rng, 3))
            .collect(),
    }
}

/// A subspace with a canonical reduced-row-echelon basis.
pub struct Subspace {
    algebra: Arc<FinDimAlgebra>,
    space: RowSpace,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.space.contains(x.coords())
    }

    pub fn basis_vectors(&self) -> &[Vec<Rational>] {
        self.space.rows()
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.space
            .rows()
            .iter()
            .map(|r| Element {
                algebra: self.algebra.clone(),
                coords: r.clone(),
            })
            .collect()
    }

    /// JSON report { "dim", "basis" }.
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim(),
            "basis": self
                .space
                .rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Smallest subspace containing the generators (and the unit, if `unital`)
/// that is closed under the product. Deterministic: the result's basis is
/// the canonical echelon basis of the closure.
pub fn generate_subalgebra(gens: &[Element], unital: bool) -> Result<Subspace, FinDimError> {
    let first = gens.first().ok_or(FinDimError::EmptyGenerators)?;
    let alg = first.algebra_arc().clone();
    for g in gens {
        if g.algebra.id != alg.id {
            return Err(FinDimError::MixedAlgebras(
                g.algebra.id.clone(),
                alg.id.clone(),
            ));
        }
    }
    let mut space = RowSpace::new(alg.dim());
    let mut pool: Vec<Element> = Vec::new();
    let feed = |space: &mut RowSpace, pool: &mut Vec<Element>, x: Element| {
        if space.insert(x.coords().to_vec()) {
            pool.push(x);
        }
    };
    if unital {
        let u = alg
            .unit_element()
            .ok_or_else(|| FinDimError::NoUnit(alg.id().to_string()))?;
        feed(&mut space, &mut pool, u);
    }
    for g in gens {
        feed(&mut space, &mut pool, g.clone());
    }
    // close under products: each unordered pool pair is multiplied exactly once
    let mut processed = 0;
    while processed < pool.len() {
        let hi = pool.len();
        for i in processed..hi {
            for j in 0..=i {
                let p = pool[i].circ(&pool[j]);
                if space.insert(p.coords().to_vec()) {
                    pool.push(p);
                }
            }
        }
        processed = hi;
    }
    Ok(Subspace { algebra: alg, space })
}

/// Spectral projections of T_e for an idempotent e, onto the eigenvalues
/// (0, 1/2, 1), in that order: P0 = 2T^2 - 3T + I, Ph = 4T - 4T^2,
/// P1 = 2T^2 - T. Their sum is the identity, and P1 is the matrix of U_e.
pub fn peirce_projections(e: &Element) -> Result<[RatMat; 3], FinDimError> {
    if !e.is_idempotent() {
        return Err(FinDimError::NotIdempotent);
    }
    let dim = e.algebra.dim;
    let t = e.mult_operator();
    let t2 = t.mul(&t);
    let id = RatMat::identity(dim);
    let two = crate::rational::int(2);
    let p0 = t2.scale(&two).sub(&t.scale(&crate::rational::int(3))).add(&id);
    let ph = t.scale(&crate::rational::int(4)).sub(&t2.scale(&crate::rational::int(4)));
    let p1 = t2.scale(&two).sub(&t);
    Ok([p0, ph, p1])
}

fn check_idempotent_system(system: &[Element]) -> Result<Arc<FinDimAlgebra>, FinDimError> {
    let first = system.first().ok_or(FinDimError::EmptyGenerators)?;
    let alg = first.algebra_arc().clone();
    for (r, e) in system.iter().enumerate() {
        if e.algebra.id != alg.id {
            return Err(FinDimError::MixedAlgebras(e.algebra.id.clone(), alg.id.clone()));
        }
        if !e.is_idempotent() {
            return Err(FinDimError::NotIdempotent);
        }
        for (s, f) in system.iter().enumerate().skip(r + 1) {
            if !e.circ(f).is_zero() {
                return Err(FinDimError::NotOrthogonal { r, s });
            }
        }
    }
    let unit = alg
        .unit_element()
        .ok_or_else(|| FinDimError::NoUnit(alg.id().to_string()))?;
    let sum = system
        .iter()
        .fold(alg.zero_element(), |acc, e| acc.add(e));
    if sum != unit {
        return Err(FinDimError::NotPartitionOfUnity);
    }
    Ok(alg)
}

/// Peirce decomposition with respect to a complete system of orthogonal
/// idempotents: J_rr = { x : e_r o x = x } and, for r < s,
/// J_rs = { x : e_r o x = e_s o x = x/2 }. The component dimensions always
/// sum to the algebra dimension.
pub fn peirce_decompose(
    system: &[Element],
) -> Result<BTreeMap<(usize, usize), Subspace>, FinDimError> {
    let alg = check_idempotent_system(system)?;
    let dim = alg.dim();
    let half = rat(1, 2);
    let ts: Vec<RatMat> = system.iter().map(Element::mult_operator).collect();
    let id = RatMat::identity(dim);
    let mut out = BTreeMap::new();
    for (r, tr) in ts.iter().enumerate() {
        let space = tr.sub(&id).kernel();
        out.insert((r, r), Subspace { algebra: alg.clone(), space });
        for (off, ts_mat) in ts.iter().enumerate().skip(r + 1) {
            // stack (T_r - 1/2) over (T_s - 1/2) and take the joint kernel
            let mut stacked = RatMat::zeros(2 * dim, dim);
            let a = tr.sub(&id.scale(&half));
            let b = ts_mat.sub(&id.scale(&half));
            for i in 0..dim {
                for j in 0..dim {
                    stacked.set(i, j, a.get(i, j).clone());
                    stacked.set(dim + i, j, b.get(i, j).clone());
                }
            }
            out.insert(
                (r, off),
                Subspace { algebra: alg.clone(), space: stacked.kernel() },
            );
        }
    }
    debug_assert_eq!(out.values().map(Subspace::dim).sum::<usize>(), dim);
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct PeirceComponentInfo {
    pub r: usize,
    pub s: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeirceViolation {
    pub left: [usize; 2],
    pub right: [usize; 2],
    pub left_basis_index: usize,
    pub right_basis_index: usize,
    pub product_coords: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeirceReport {
    pub ok: bool,
    pub components: Vec<PeirceComponentInfo>,
    pub violations: Vec<PeirceViolation>,
}

/// Verify the Peirce multiplication rules on full component bases:
/// J_rr o J_rr in J_rr; J_rs o J_rs in J_rr + J_ss; J_rs o J_st in J_rt
/// for a shared index; components with disjoint index pairs multiply to 0.
/// Violations are reported with the offending basis pair and product.
pub fn check_peirce_rules(system: &[Element]) -> Result<PeirceReport, FinDimError> {
    let parts = peirce_decompose(system)?;
    let mut components = Vec::new();
    for (&(r, s), sub) in &parts {
        components.push(PeirceComponentInfo { r, s, dim: sub.dim() });
    }
    let keys: Vec<(usize, usize)> = parts.keys().copied().collect();
    let mut violations = Vec::new();
    for &left in &keys {
        for &right in &keys {
            if right < left {
                continue;
            }
            let target = peirce_target(left, right);
            let lbasis = parts[&left].basis_elements();
            let rbasis = parts[&right].basis_elements();
            for (li, x) in lbasis.iter().enumerate() {
                for (ri, y) in rbasis.iter().enumerate() {
                    let p = x.circ(y);
                    let ok = match &target {
                        PeirceTarget::Zero => p.is_zero(),
                        PeirceTarget::Component(k) => parts[k].space.contains(p.coords()),
                        PeirceTarget::Pair(k1, k2) => {
                            parts[k1].space.join(&parts[k2].space).contains(p.coords())
                        }
                    };
                    if !ok {
                        violations.push(PeirceViolation {
                            left: [left.0, left.1],
                            right: [right.0, right.1],
                            left_basis_index: li,
                            right_basis_index: ri,
                            product_coords: p.coords().iter().map(format_rational).collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(PeirceReport { ok: violations.is_empty(), components, violations })
}

enum PeirceTarget {
    Zero,
    Component((usize, usize)),
    Pair((usize, usize), (usize, usize)),
}

/// Where the product of two Peirce components must land, by the edge calculus
/// on index pairs.
fn peirce_target(a: (usize, usize), b: (usize, usize)) -> PeirceTarget {
    if a == b {
        return if a.0 == a.1 {
            PeirceTarget::Component(a)
        } else {
            PeirceTarget::Pair((a.0, a.0), (a.1, a.1))
        };
    }
    let av = [a.0, a.1];
    let bv = [b.0, b.1];
    let shared: Vec<usize> = [a.0, a.1]
        .iter()
        .copied()
        .filter(|v| bv.contains(v))
        .collect();
    if shared.is_empty() {
        return PeirceTarget::Zero;
    }
    // exactly one shared vertex (a == b was handled above): the product lands
    // in the component joining the two non-shared endpoints
    let v = shared[0];
    let rest = |pair: [usize; 2]| -> usize {
        if pair[0] == v {
            pair[1]
        } else {
            pair[0]
        }
    };
    let (x, y) = (rest(av), rest(bv));
    let key = (x.min(y), x.max(y));
    PeirceTarget::Component(key)
}
