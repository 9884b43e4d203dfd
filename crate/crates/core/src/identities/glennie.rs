//! The Glennie identities and their linearizations, built as explicit
//! polynomial trees.
//!
//! With `H8(X,Y,Z) = {U_X U_Y(Z), Z, X o Y} - U_X U_Y U_Z (X o Y)`, the
//! degree-8 identity is `G8 = H8(X,Y,Z) - H8(Y,X,Z)`; it holds in every
//! special Jordan algebra but fails in the exceptional one. `G9` is the
//! analogous antisymmetrization of a degree-9 polynomial. `h8_linearized`
//! polarizes `H8` in its squared variable `Z`, replacing one occurrence by a
//! fresh variable `W`, and then antisymmetrizes in `X, Y`; the result is
//! multilinear in both `Z` and `W` and still vanishes in every special
//! Jordan algebra.

use super::ast::JPoly;
use std::collections::BTreeMap;

/// How a written chain of operators such as `U_X U_Y (Z)` nests: with
/// `RightToLeft` (the usual convention for operator composition, and the
/// default everywhere) the operator nearest the argument acts first, so the
/// chain reads `U[X](U[Y](Z))`. `LeftToRight` is the opposite reading; it is
/// exposed so the difference is testable, and under it the antisymmetrized
/// polynomials below are *not* identities of special Jordan algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OperatorOrder {
    #[default]
    RightToLeft,
    LeftToRight,
}

enum UOp {
    Single(JPoly),
    Pair(JPoly, JPoly),
}

/// Nest a displayed chain of quadratic operators around `arg`. `ops` is
/// given in display order (leftmost first).
fn compose(ops: Vec<UOp>, arg: JPoly, order: OperatorOrder) -> JPoly {
    let ops = match order {
        OperatorOrder::RightToLeft => ops,
        OperatorOrder::LeftToRight => ops.into_iter().rev().collect(),
    };
    let mut acc = arg;
    for op in ops.into_iter().rev() {
        acc = match op {
            UOp::Single(a) => JPoly::u(a, acc),
            UOp::Pair(a, b) => JPoly::upair(a, b, acc),
        };
    }
    acc
}

fn v(name: &str) -> JPoly {
    JPoly::var(name)
}

fn swap_xy(f: &JPoly) -> JPoly {
    let mut map = BTreeMap::new();
    map.insert("X".to_string(), "Y".to_string());
    map.insert("Y".to_string(), "X".to_string());
    f.rename_vars(&map)
}

/// `H8(X,Y,Z) = {U_X U_Y(Z), Z, X o Y} - U_X U_Y U_Z(X o Y)`.
pub fn h8_with(order: OperatorOrder) -> JPoly {
    let xy = JPoly::circ(v("X"), v("Y"));
    let head = compose(
        vec![UOp::Single(v("X")), UOp::Single(v("Y"))],
        v("Z"),
        order,
    );
    let t1 = JPoly::triple(head, v("Z"), xy.clone());
    let t2 = compose(
        vec![
            UOp::Single(v("X")),
            UOp::Single(v("Y")),
            UOp::Single(v("Z")),
        ],
        xy,
        order,
    );
    JPoly::sub(t1, t2)
}

pub fn h8() -> JPoly {
    h8_with(OperatorOrder::default())
}

/// `G8 = H8(X,Y,Z) - H8(Y,X,Z)`: an identity of special Jordan algebras
/// that fails in the 27-dimensional exceptional algebra.
pub fn g8_with(order: OperatorOrder) -> JPoly {
    let h = h8_with(order);
    JPoly::sub(h.clone(), swap_xy(&h))
}

pub fn g8() -> JPoly {
    g8_with(OperatorOrder::default())
}

/// `H9(X,Y,Z) = 2 U_X(Z) o U_{Y,X} U_Z (Y^2) - U_X U_Z U_{X,Y} U_Y (Z)`.
pub fn h9_with(order: OperatorOrder) -> JPoly {
    let lhs = JPoly::u(v("X"), v("Z"));
    let rhs = compose(
        vec![UOp::Pair(v("Y"), v("X")), UOp::Single(v("Z"))],
        JPoly::power(v("Y"), 2),
        order,
    );
    let t1 = JPoly::scalar(crate::rational::rat(2, 1), JPoly::circ(lhs, rhs));
    let t2 = compose(
        vec![
            UOp::Single(v("X")),
            UOp::Single(v("Z")),
            UOp::Pair(v("X"), v("Y")),
            UOp::Single(v("Y")),
        ],
        v("Z"),
        order,
    );
    JPoly::sub(t1, t2)
}

pub fn h9() -> JPoly {
    h9_with(OperatorOrder::default())
}

/// `G9 = H9(X,Y,Z) - H9(Y,X,Z)`: the degree-9 companion of `G8`.
pub fn g9_with(order: OperatorOrder) -> JPoly {
    let h = h9_with(order);
    JPoly::sub(h.clone(), swap_xy(&h))
}

pub fn g9() -> JPoly {
    g9_with(OperatorOrder::default())
}

/// The polarization of `H8` in `Z` with polarization variable `W`,
/// antisymmetrized in `X, Y`:
///
/// ```text
/// H'8(X,Y,Z,W) = {U_X U_Y(W), Z, X o Y} + {U_X U_Y(Z), W, X o Y}
///              - U_X U_Y({Z, X o Y, W})
/// h8_linearized = H'8(X,Y,Z,W) - H'8(Y,X,Z,W)
/// ```
///
/// Setting `W = Z` recovers `2 G8`, and the result is (structurally) degree
/// one in each of `Z` and `W`, so it is a Jordan polynomial that is linear
/// in two of its four variables and vanishes in every special algebra.
pub fn h8_linearized_with(order: OperatorOrder) -> JPoly {
    let xy = JPoly::circ(v("X"), v("Y"));
    let uu = |arg: JPoly| {
        compose(
            vec![UOp::Single(v("X")), UOp::Single(v("Y"))],
            arg,
            order,
        )
    };
    let part = JPoly::sum(vec![
        JPoly::triple(uu(v("W")), v("Z"), xy.clone()),
        JPoly::triple(uu(v("Z")), v("W"), xy.clone()),
        JPoly::neg(uu(JPoly::triple(v("Z"), xy, v("W")))),
    ]);
    JPoly::sub(part.clone(), swap_xy(&part))
}

pub fn h8_linearized() -> JPoly {
    h8_linearized_with(OperatorOrder::default())
}
