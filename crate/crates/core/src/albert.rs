//! The 27-dimensional exceptional Jordan algebra: hermitian 3x3 octonion
//! matrices under a o b = (ab + ba)/2.
//!
//! An element is stored as its three (rational) diagonal entries and three
//! upper-triangle octonions; the lower triangle is implied by hermitian
//! symmetry. The product is computed through genuine 3x3 octonion matrix
//! arithmetic rather than structure constants, so this module doubles as
//! the independent reference for the table-driven engine in [`crate::findim`].
//!
//! Coordinates (27, used everywhere a flat vector is needed):
//! `[d1, d2, d3, x12[0..8], x13[0..8], x23[0..8]]`.

use crate::octonion::Octonion;
use crate::rational::{format_rational, parse_rational, Rational};
use num::{One, Zero};
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub const ALBERT_DIM: usize = 27;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlbertElement {
    d: [Rational; 3],
    x12: Octonion,
    x13: Octonion,
    x23: Octonion,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlbertError {
    #[error("atom entries must associate: nonzero associator")]
    NonAssociatingTriple,
    #[error("atom entries are all zero")]
    ZeroAtom,
}

impl AlbertElement {
    pub fn zero() -> Self {
        AlbertElement {
            d: std::array::from_fn(|_| Rational::zero()),
            x12: Octonion::zero(),
            x13: Octonion::zero(),
            x23: Octonion::zero(),
        }
    }

    pub fn unit() -> Self {
        let mut u = Self::zero();
        for d in u.d.iter_mut() {
            *d = Rational::one();
        }
        u
    }

    /// Diagonal matrix unit E_rr (r in 0..3).
    pub fn diag_unit(r: usize) -> Self {
        assert!(r < 3, "diagonal index {r} out of range");
        let mut e = Self::zero();
        e.d[r] = Rational::one();
        e
    }

    /// Hermitian matrix with `x` in entry (r,s), r < s, conj(x) mirrored,
    /// zeros elsewhere.
    pub fn off_diag(r: usize, s: usize, x: Octonion) -> Self {
        let mut e = Self::zero();
        match (r, s) {
            (0, 1) => e.x12 = x,
            (0, 2) => e.x13 = x,
            (1, 2) => e.x23 = x,
            _ => panic!("off-diagonal position ({r},{s}) must have r < s < 3"),
        }
        e
    }

    pub fn from_parts(d: [Rational; 3], x12: Octonion, x13: Octonion, x23: Octonion) -> Self {
        AlbertElement { d, x12, x13, x23 }
    }

    /// The k-th basis element in coordinate order. Panics if `k >= 27`.
    pub fn basis(k: usize) -> Self {
        assert!(k < ALBERT_DIM, "basis index {k} out of range");
        let mut v = vec![Rational::zero(); ALBERT_DIM];
        v[k] = Rational::one();
        Self::from_coords(&v)
    }

    pub fn from_coords(v: &[Rational]) -> Self {
        assert_eq!(v.len(), ALBERT_DIM, "expected 27 coordinates");
        let oct = |off: usize| {
            Octonion::from_coords(std::array::from_fn(|k| v[off + k].clone()))
        };
        AlbertElement {
            d: [v[0].clone(), v[1].clone(), v[2].clone()],
            x12: oct(3),
            x13: oct(11),
            x23: oct(19),
        }
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(ALBERT_DIM);
        out.extend(self.d.iter().cloned());
        out.extend(self.x12.coords().iter().cloned());
        out.extend(self.x13.coords().iter().cloned());
        out.extend(self.x23.coords().iter().cloned());
        out
    }

    pub fn diagonal(&self) -> &[Rational; 3] {
        &self.d
    }

    pub fn entry12(&self) -> &Octonion {
        &self.x12
    }

    pub fn entry13(&self) -> &Octonion {
        &self.x13
    }

    pub fn entry23(&self) -> &Octonion {
        &self.x23
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Zero::is_zero)
            && self.x12.is_zero()
            && self.x13.is_zero()
            && self.x23.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        AlbertElement {
            d: std::array::from_fn(|i| &self.d[i] + &other.d[i]),
            x12: &self.x12 + &other.x12,
            x13: &self.x13 + &other.x13,
            x23: &self.x23 + &other.x23,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlbertElement {
            d: std::array::from_fn(|i| &self.d[i] - &other.d[i]),
            x12: &self.x12 - &other.x12,
            x13: &self.x13 - &other.x13,
            x23: &self.x23 - &other.x23,
        }
    }

    pub fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlbertElement {
            d: std::array::from_fn(|i| &self.d[i] * c),
            x12: self.x12.scale(c),
            x13: self.x13.scale(c),
            x23: self.x23.scale(c),
        }
    }

    fn to_mat(&self) -> [[Octonion; 3]; 3] {
        let diag = |r: usize| Octonion::one().scale(&self.d[r]);
        [
            [diag(0), self.x12.clone(), self.x13.clone()],
            [self.x12.conj(), diag(1), self.x23.clone()],
            [self.x13.conj(), self.x23.conj(), diag(2)],
        ]
    }

    fn from_mat(m: [[Octonion; 3]; 3]) -> Self {
        debug_assert!(
            (0..3).all(|r| m[r][r].im().is_zero())
                && (0..3).all(|r| (r + 1..3).all(|s| m[s][r] == m[r][s].conj())),
            "product left the hermitian subspace"
        );
        AlbertElement {
            d: std::array::from_fn(|r| m[r][r].re().clone()),
            x12: m[0][1].clone(),
            x13: m[0][2].clone(),
            x23: m[1][2].clone(),
        }
    }

    /// Jordan product (AB + BA)/2 via full octonion matrix multiplication.
    pub fn circ(&self, other: &Self) -> Self {
        let a = self.to_mat();
        let b = other.to_mat();
        let half = crate::rational::rat(1, 2);
        let mut out: [[Octonion; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        for (r, row) in out.iter_mut().enumerate() {
            for (s, entry) in row.iter_mut().enumerate() {
                let mut acc = Octonion::zero();
                for k in 0..3 {
                    acc = &acc + &a[r][k].mul(&b[k][s]);
                    acc = &acc + &b[r][k].mul(&a[k][s]);
                }
                *entry = acc.scale(&half);
            }
        }
        Self::from_mat(out)
    }

    pub fn square(&self) -> Self {
        self.circ(self)
    }

    /// U_a(b) = 2 a o (a o b) - a^2 o b.
    pub fn quadratic_u(&self, b: &Self) -> Self {
        self.circ(&self.circ(b))
            .scale(&crate::rational::int(2))
            .sub(&self.square().circ(b))
    }

    /// Linearized quadratic operator (U_{a+b} - U_a - U_b)/2 applied to y.
    pub fn upair(a: &Self, b: &Self, y: &Self) -> Self {
        let sum = a.add(b);
        sum.quadratic_u(y)
            .sub(&a.quadratic_u(y))
            .sub(&b.quadratic_u(y))
            .scale(&crate::rational::rat(1, 2))
    }

    /// Jordan triple product {a,b,c} = 2[(a o b) o c + (b o c) o a - (a o c) o b],
    /// the linearization of U in its outer slots: {a,b,a} = 2 U_a(b), and in any
    /// special algebra {a,b,c} = abc + cba.
    pub fn triple(a: &Self, b: &Self, c: &Self) -> Self {
        a.circ(b)
            .circ(c)
            .add(&b.circ(c).circ(a))
            .sub(&a.circ(c).circ(b))
            .scale(&crate::rational::int(2))
    }

    pub fn trace(&self) -> Rational {
        self.d.iter().sum()
    }

    /// Trace form <a,b> = trace(a o b).
    pub fn inner(&self, other: &Self) -> Rational {
        self.circ(other).trace()
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Rank-one idempotent v v* / |v|^2 from an octonion column vector
    /// (x1, x2, x3) whose entries associate.
    pub fn atom(x1: &Octonion, x2: &Octonion, x3: &Octonion) -> Result<Self, AlbertError> {
        if !Octonion::is_associating_triple(x1, x2, x3) {
            return Err(AlbertError::NonAssociatingTriple);
        }
        let n = x1.norm2() + x2.norm2() + x3.norm2();
        if n.is_zero() {
            return Err(AlbertError::ZeroAtom);
        }
        let inv = n.recip();
        let xs = [x1, x2, x3];
        let p = AlbertElement {
            d: std::array::from_fn(|r| xs[r].norm2() * &inv),
            x12: x1.mul(&x2.conj()).scale(&inv),
            x13: x1.mul(&x3.conj()).scale(&inv),
            x23: x2.mul(&x3.conj()).scale(&inv),
        };
        debug_assert!(p.is_idempotent(), "atom construction must be idempotent");
        Ok(p)
    }

    /// The four rank-one idempotents whose non-unital closure is the whole
    /// 27-dimensional algebra: E11, atom(1,1,0), atom(-e1,1,1), atom(1,e2,e4).
    pub fn four_atoms() -> [Self; 4] {
        let e = Octonion::basis;
        let one = Octonion::one();
        let zero = Octonion::zero();
        [
            Self::atom(&one, &zero, &zero).unwrap(),
            Self::atom(&one, &one, &zero).unwrap(),
            Self::atom(&(-&e(1)), &one, &one).unwrap(),
            Self::atom(&one, &e(2), &e(4)).unwrap(),
        ]
    }
}

/// A random octonion column vector confined to one quaternion subalgebra
/// span{1, e_a, e_b, e_a e_b}, so Gram–Schmidt and atom formation stay exact.
struct QuatVectorSampler {
    units: [Octonion; 4],
}

impl QuatVectorSampler {
    fn random<R: Rng>(rng: &mut R) -> Self {
        let a = rng.gen_range(1..8usize);
        let b = loop {
            let b = rng.gen_range(1..8usize);
            if b != a {
                break b;
            }
        };
        let ea = Octonion::basis(a);
        let eb = Octonion::basis(b);
        let eab = ea.mul(&eb);
        QuatVectorSampler {
            units: [Octonion::one(), ea, eb, eab],
        }
    }

    fn vector<R: Rng>(&self, rng: &mut R) -> [Octonion; 3] {
        std::array::from_fn(|_| {
            let mut acc = Octonion::zero();
            for u in &self.units {
                let c = crate::rational::int(rng.gen_range(-2..=2));
                acc = &acc + &u.scale(&c);
            }
            acc
        })
    }
}

fn vec_norm2(v: &[Octonion; 3]) -> Rational {
    v.iter().map(Octonion::norm2).sum()
}

/// Hermitian pairing sum_i conj(v_i) w_i.
fn vec_dot(v: &[Octonion; 3], w: &[Octonion; 3]) -> Octonion {
    let mut acc = Octonion::zero();
    for (a, b) in v.iter().zip(w) {
        acc = &acc + &a.conj().mul(b);
    }
    acc
}

/// Seeded random rank-one idempotent.
pub fn random_atom<R: Rng>(rng: &mut R) -> AlbertElement {
    loop {
        let sampler = QuatVectorSampler::random(rng);
        let v = sampler.vector(rng);
        if vec_norm2(&v).is_zero() {
            continue;
        }
        return AlbertElement::atom(&v[0], &v[1], &v[2]).expect("quaternionic entries associate");
    }
}

/// Seeded pair of orthogonal rank-one idempotents (p o q = 0), built by exact
/// Gram–Schmidt inside a common quaternion subalgebra.
pub fn random_orthogonal_atoms<R: Rng>(rng: &mut R) -> (AlbertElement, AlbertElement) {
    loop {
        let sampler = QuatVectorSampler::random(rng);
        let v = sampler.vector(rng);
        let nv = vec_norm2(&v);
        if nv.is_zero() {
            continue;
        }
        let w0 = sampler.vector(rng);
        let d = vec_dot(&v, &w0);
        // w = nv * w0 - v * d is orthogonal to v (associativity of the
        // quaternion subalgebra makes v . w = nv (v.w0) - nv d = 0 exact)
        let w: [Octonion; 3] =
            std::array::from_fn(|i| &w0[i].scale(&nv) - &v[i].mul(&d));
        if vec_norm2(&w).is_zero() {
            continue;
        }
        let p = AlbertElement::atom(&v[0], &v[1], &v[2]).expect("quaternionic entries associate");
        let q = AlbertElement::atom(&w[0], &w[1], &w[2]).expect("quaternionic entries associate");
        debug_assert!(p.circ(&q).is_zero());
        return (p, q);
    }
}

/// Seeded random projection of rank 1 or 2: an atom, or a sum of two
/// orthogonal atoms.
pub fn random_projection<R: Rng>(rng: &mut R) -> AlbertElement {
    if rng.gen_bool(0.5) {
        random_atom(rng)
    } else {
        let (p, q) = random_orthogonal_atoms(rng);
        p.add(&q)
    }
}

/// Seeded random element, coordinates in {-3..3}/2.
pub fn random_element<R: Rng>(rng: &mut R) -> AlbertElement {
    let coords: Vec<Rational> = (0..ALBERT_DIM)
        .map(|_| crate::rational::random_half_integer(rng, 3))
        .collect();
    AlbertElement::from_coords(&coords)
}

#[derive(Serialize, Deserialize)]
struct Wire {
    d: [String; 3],
    x12: Octonion,
    x23: Octonion,
    x13: Octonion,
}

impl Serialize for AlbertElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire {
            d: std::array::from_fn(|i| format_rational(&self.d[i])),
            x12: self.x12.clone(),
            x23: self.x23.clone(),
            x13: self.x13.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlbertElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let mut d = std::array::from_fn(|_| Rational::zero());
        for (i, s) in w.d.iter().enumerate() {
            d[i] = parse_rational(s).map_err(D::Error::custom)?;
        }
        Ok(AlbertElement {
            d,
            x12: w.x12,
            x13: w.x13,
            x23: w.x23,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(k: usize) -> Octonion {
        Octonion::basis(k)
    }

    #[test]
    fn coords_round_trip_and_basis_layout() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_element(&mut rng);
        assert_eq!(AlbertElement::from_coords(&a.coords()), a);
        assert_eq!(AlbertElement::basis(0), AlbertElement::diag_unit(0));
        assert_eq!(
            AlbertElement::basis(3),
            AlbertElement::off_diag(0, 1, Octonion::one())
        );
        assert_eq!(
            AlbertElement::basis(11 + 2),
            AlbertElement::off_diag(0, 2, e(2))
        );
        assert_eq!(
            AlbertElement::basis(19 + 7),
            AlbertElement::off_diag(1, 2, e(7))
        );
    }

    #[test]
    fn diag_units_are_an_orthogonal_frame() {
        let es: Vec<AlbertElement> = (0..3).map(AlbertElement::diag_unit).collect();
        let mut sum = AlbertElement::zero();
        for (r, er) in es.iter().enumerate() {
            assert!(er.is_idempotent());
            sum = sum.add(er);
            for es2 in &es[r + 1..] {
                assert!(er.circ(es2).is_zero());
            }
        }
        assert_eq!(sum, AlbertElement::unit());
    }

    #[test]
    fn unit_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = random_element(&mut rng);
        assert_eq!(AlbertElement::unit().circ(&a), a);
    }

    #[test]
    fn four_atoms_are_unit_trace_idempotents() {
        let atoms = AlbertElement::four_atoms();
        for q in &atoms {
            assert!(q.is_idempotent());
            assert_eq!(q.trace(), int(1));
        }
        // sums of non-orthogonal idempotents are not idempotent
        assert!(!atoms[0].add(&atoms[1]).is_idempotent());
    }

    #[test]
    fn atoms_match_displayed_matrices() {
        let [q1, q2, q3, q4] = AlbertElement::four_atoms();
        assert_eq!(q1, AlbertElement::diag_unit(0));

        let half = rat(1, 2);
        let expect2 = AlbertElement::from_parts(
            [half.clone(), half.clone(), int(0)],
            Octonion::one().scale(&half),
            Octonion::zero(),
            Octonion::zero(),
        );
        assert_eq!(q2, expect2);

        let third = rat(1, 3);
        let expect3 = AlbertElement::from_parts(
            [third.clone(), third.clone(), third.clone()],
            (-&e(1)).scale(&third),
            (-&e(1)).scale(&third),
            Octonion::one().scale(&third),
        );
        assert_eq!(q3, expect3);

        // jl = e2 e4 = e6 under the declared table
        let expect4 = AlbertElement::from_parts(
            [third.clone(), third.clone(), third.clone()],
            (-&e(2)).scale(&third),
            (-&e(4)).scale(&third),
            (-&e(6)).scale(&third),
        );
        assert_eq!(q4, expect4);
    }

    #[test]
    fn atom_rejects_bad_input() {
        assert_eq!(
            AlbertElement::atom(&e(1), &e(2), &e(4)),
            Err(AlbertError::NonAssociatingTriple)
        );
        let z = Octonion::zero();
        assert_eq!(
            AlbertElement::atom(&z, &z, &z),
            Err(AlbertError::ZeroAtom)
        );
    }

    #[test]
    fn peirce_zero_projection_recovers_frame_from_atoms() {
        // P0(e)(x) = 2 e o (e o x) - 3 e o x + x
        let p0 = |ee: &AlbertElement, x: &AlbertElement| {
            ee.circ(&ee.circ(x))
                .scale(&int(2))
                .sub(&ee.circ(x).scale(&int(3)))
                .add(x)
        };
        let [_, q2, q3, _] = AlbertElement::four_atoms();
        let e11 = AlbertElement::diag_unit(0);
        let e22 = AlbertElement::diag_unit(1);
        let e33 = AlbertElement::diag_unit(2);
        assert_eq!(p0(&e11, &q2.scale(&int(2))), e22);
        let e1122 = e11.add(&e22);
        assert_eq!(p0(&e1122, &q3.scale(&int(3))), e33);
    }

    #[test]
    fn off_diagonal_product_identity() {
        // F12(-l) = 2 * (F23(1) o F13(-l)) with l = e4
        let lhs = AlbertElement::off_diag(0, 1, -&e(4));
        let rhs = AlbertElement::off_diag(1, 2, Octonion::one())
            .circ(&AlbertElement::off_diag(0, 2, -&e(4)))
            .scale(&int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triple_reduces_to_doubled_u_on_equal_outer_slots() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            assert_eq!(
                AlbertElement::triple(&a, &b, &a),
                a.quadratic_u(&b).scale(&int(2))
            );
        }
    }

    #[test]
    fn triple_with_unit_doubles_the_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let b = random_element(&mut rng);
        let c = random_element(&mut rng);
        let one = AlbertElement::unit();
        assert_eq!(
            AlbertElement::triple(&one, &b, &c),
            b.circ(&c).scale(&int(2))
        );
    }

    #[test]
    fn upair_diagonal_is_u() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_element(&mut rng);
        let y = random_element(&mut rng);
        assert_eq!(AlbertElement::upair(&a, &a, &y), a.quadratic_u(&y));
        // triple(a, y, b) = 2 upair(a, b, y)
        let b = random_element(&mut rng);
        assert_eq!(
            AlbertElement::triple(&a, &y, &b),
            AlbertElement::upair(&a, &b, &y).scale(&int(2))
        );
    }

    #[test]
    fn half_space_squares_split_through_the_diagonal_pair() {
        // x in the (E11, E22) half-space: x = F12(a);
        // x^2 = U_e(x^2) + U_f(x^2) with both parts norm2(a)-multiples.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let e11 = AlbertElement::diag_unit(0);
        let e22 = AlbertElement::diag_unit(1);
        for _ in 0..10 {
            let a = Octonion::from_coords(std::array::from_fn(|_| {
                crate::rational::random_half_integer(&mut rng, 3)
            }));
            let x = AlbertElement::off_diag(0, 1, a.clone());
            assert_eq!(e11.circ(&x), x.scale(&rat(1, 2)));
            assert_eq!(e22.circ(&x), x.scale(&rat(1, 2)));
            let x2 = x.square();
            let ue = e11.quadratic_u(&x2);
            let uf = e22.quadratic_u(&x2);
            assert_eq!(x2, ue.add(&uf));
            let lam = a.norm2();
            assert_eq!(ue, e11.scale(&lam));
            assert_eq!(uf, e22.scale(&lam));
        }
    }

    #[test]
    fn random_projections_are_projections() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let p = random_projection(&mut rng);
            assert!(p.is_idempotent());
        }
        for _ in 0..10 {
            let (p, q) = random_orthogonal_atoms(&mut rng);
            assert!(p.is_idempotent() && q.is_idempotent());
            assert!(p.circ(&q).is_zero());
            assert!(p.add(&q).is_idempotent());
        }
    }

    #[test]
    fn json_round_trip() {
        let [_, _, q3, _] = AlbertElement::four_atoms();
        let s = serde_json::to_string(&q3).unwrap();
        let back: AlbertElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q3);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["d"][0], "1/3");
        assert_eq!(v["x23"][0], "1/3");
        assert_eq!(v["x12"][1], "-1/3");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn product_is_commutative(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            prop_assert_eq!(a.circ(&b), b.circ(&a));
        }

        #[test]
        fn jordan_identity_holds(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let a2 = a.square();
            prop_assert_eq!(a.circ(&b.circ(&a2)), a.circ(&b).circ(&a2));
        }

        #[test]
        fn trace_form_is_symmetric_and_associative(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let c = random_element(&mut rng);
            prop_assert_eq!(a.inner(&b), b.inner(&a));
            // <a o b, c> = <a, b o c>
            prop_assert_eq!(a.circ(&b).inner(&c), a.inner(&b.circ(&c)));
            // U_a is self-adjoint: <U_a(b), c> = <b, U_a(c)>
            prop_assert_eq!(a.quadratic_u(&b).inner(&c), b.inner(&a.quadratic_u(&c)));
        }
    }
}
