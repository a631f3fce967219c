use std::collections::HashMap;

use crate::linalg::Field;

use super::bound::{BoundQuiverAlgebra, Relation};
use super::quiver::{Arrow, Quiver};
use super::AlgebraError;

/// Name of the arrow `i -> i+1`.
pub fn up_arrow(i: usize) -> String {
    format!("a{i}")
}

/// Name of the arrow `i+1 -> i`.
pub fn down_arrow(i: usize) -> String {
    format!("b{i}")
}

/// The algebra `A_e`: the linear quiver `1 <-> 2 <-> ... <-> e` with arrows
/// `a_i : i -> i+1` and `b_i : i+1 -> i`, bound by
///
/// * `a_i a_{i-1} = 0` and `b_{i-1} b_i = 0`,
/// * `a_{i-1} b_{i-1} = b_i a_i` for `2 <= i <= e-1`,
/// * `a_{e-1} b_{e-1} = 0`.
///
/// Products are written right to left. The basis consists of the `e` vertex idempotents,
/// the `2(e-1)` arrows and the loops `c_i = b_i a_i` at vertices `1..e-1`, so
/// `dim A_e = 4e - 3`. Loops are labelled `c1, c2, ...`.
pub fn build_a_e<K: Field>(e: usize) -> Result<BoundQuiverAlgebra<K>, AlgebraError> {
    if e < 2 {
        return Err(AlgebraError::QuantumCharacteristic(e));
    }
    let mut arrows = Vec::new();
    for i in 1..e {
        arrows.push(Arrow {
            name: up_arrow(i),
            source: i,
            target: i + 1,
        });
    }
    for i in 1..e {
        arrows.push(Arrow {
            name: down_arrow(i),
            source: i + 1,
            target: i,
        });
    }
    let q = Quiver::new(e, arrows)?;
    let path = |names: &[String]| {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        q.path_from_names(&refs)
    };

    let mut relations = Vec::new();
    for i in 2..e {
        relations.push(Relation::monomial(path(&[up_arrow(i), up_arrow(i - 1)])?));
        relations.push(Relation::monomial(path(&[down_arrow(i - 1), down_arrow(i)])?));
    }
    for i in 2..e {
        relations.push(Relation::commutation(
            path(&[up_arrow(i - 1), down_arrow(i - 1)])?,
            path(&[down_arrow(i), up_arrow(i)])?,
        ));
    }
    relations.push(Relation::monomial(path(&[up_arrow(e - 1), down_arrow(e - 1)])?));

    let mut aliases = HashMap::new();
    for i in 1..e {
        aliases.insert(path(&[down_arrow(i), up_arrow(i)])?, format!("c{i}"));
    }
    BoundQuiverAlgebra::with_aliases(q, relations, &aliases)
}

/// Basis index of the loop `c_i` in `A_e`.
pub fn loop_index<K: Field>(alg: &BoundQuiverAlgebra<K>, i: usize) -> Option<usize> {
    let q = alg.quiver();
    let p = q.path_from_names(&[&down_arrow(i), &up_arrow(i)]).ok()?;
    alg.basis_index(&p)
}

/// Basis index of a path given by arrow names in product order.
pub fn path_index<K: Field>(alg: &BoundQuiverAlgebra<K>, names: &[&str]) -> Option<usize> {
    let p = alg.quiver().path_from_names(names).ok()?;
    alg.basis_index(&p)
}

/// The semisimple algebra `k x ... x k` on a quiver with `n` vertices and no arrows.
pub fn semisimple<K: Field>(n: usize) -> Result<BoundQuiverAlgebra<K>, AlgebraError> {
    BoundQuiverAlgebra::new(Quiver::new(n, Vec::new())?, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::linalg::Rational;

    type Q = Rational;

    #[test]
    fn dimensions() {
        for e in 2..8 {
            let a = build_a_e::<Q>(e).unwrap();
            assert_eq!(a.dim(), 4 * e - 3);
            assert_eq!(a.center().len(), e);
            assert!(a.structure().is_associative());
            assert!(a.structure().unit_acts_as_identity());
        }
        assert!(matches!(build_a_e::<Q>(1), Err(AlgebraError::QuantumCharacteristic(1))));
    }

    #[test]
    fn a2_basis_and_radical() {
        let a = build_a_e::<Q>(2).unwrap();
        assert_eq!(a.labels(), &["e1", "e2", "a1", "b1", "c1"]);
        assert_eq!(a.radical(1).len(), 3);
        assert_eq!(a.radical(2).len(), 1);
        assert_eq!(a.radical(3).len(), 0);
    }

    #[test]
    fn relations_hold() {
        let a = build_a_e::<Q>(4).unwrap();
        let el = |n: &str| a.element(a.arrow_basis_index(n).unwrap());
        assert!(a.multiply(&el("a2"), &el("a1")).is_zero());
        assert!(a.multiply(&el("b1"), &el("b2")).is_zero());
        assert!(a.multiply(&el("a3"), &el("b3")).is_zero());
        let lhs = a.multiply(&el("a1"), &el("b1"));
        let rhs = a.multiply(&el("b2"), &el("a2"));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, AlgebraElement::basis(loop_index(&a, 2).unwrap()));
        assert!(a.verify_confluence(4).is_ok());
    }
}
