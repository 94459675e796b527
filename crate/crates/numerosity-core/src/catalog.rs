//! The fixed catalog of point-set expressions used by property tests and
//! the axiom harness. Kept deliberately small and diverse: full spaces,
//! diagonals, the three monotone images, an explicit mixed-arity finite
//! set, and one composite per set operation.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::Tuple;
use crate::pointset::{FinitePointSet, MonotoneMap, PermutationSpec, PointSetExpr};

pub fn naturals() -> PointSetExpr {
    PointSetExpr::FullSpace(1)
}

pub fn evens() -> PointSetExpr {
    PointSetExpr::MonotoneImage(MonotoneMap::evens())
}

pub fn odds() -> PointSetExpr {
    PointSetExpr::MonotoneImage(MonotoneMap::odds())
}

pub fn squares() -> PointSetExpr {
    PointSetExpr::MonotoneImage(MonotoneMap::Squares)
}

fn mixed_finite() -> PointSetExpr {
    PointSetExpr::Finite(FinitePointSet::from_tuples([
        Tuple::new(vec![1, 2]).unwrap(),
        Tuple::new(vec![2, 1]).unwrap(),
        Tuple::new(vec![0, 0, 3]).unwrap(),
    ]))
}

/// The 12 standard catalog expressions, each with a stable label.
pub fn standard() -> Vec<(&'static str, PointSetExpr)> {
    vec![
        ("N^1", naturals()),
        ("N^2", PointSetExpr::FullSpace(2)),
        ("N^3", PointSetExpr::FullSpace(3)),
        ("diag(2)", PointSetExpr::Diagonal(2)),
        ("evens", evens()),
        ("odds", odds()),
        ("squares", squares()),
        ("{(1,2),(2,1),(0,0,3)}", mixed_finite()),
        ("evens | odds", PointSetExpr::union(evens(), odds())),
        (
            "N^2 \\ diag(2)",
            PointSetExpr::difference(PointSetExpr::FullSpace(2), PointSetExpr::Diagonal(2)),
        ),
        (
            "N^1 * diag(2)",
            PointSetExpr::product(naturals(), PointSetExpr::Diagonal(2)),
        ),
        (
            "perm(N^2, 2:1,0)",
            PointSetExpr::permute_transform(
                PointSetExpr::FullSpace(2),
                PermutationSpec::identity().with_arity(2, vec![1, 0]),
            )
            .expect("valid spec"),
        ),
    ]
}
