//! Exhaustive reference implementations of the ring predicates.
//!
//! Each function here enumerates ring elements directly and shares no code with
//! the gcd fast paths in [`RingSpec`]. They exist to cross-check those paths and
//! are only practical on small rings.

use crate::bitset::BitSet;
use crate::ring::{RingElement, RingSpec};

/// `a` is a unit iff some `b` has `a * b = 1`.
pub fn is_unit(spec: &RingSpec, a: &RingElement) -> bool {
    let one = spec.one();
    spec.elements().any(|b| spec.mul(a, &b) == one)
}

/// `a` is in `Rb` iff some `r` has `r * b = a`.
pub fn in_principal_ideal(spec: &RingSpec, a: &RingElement, b: &RingElement) -> bool {
    spec.elements().any(|r| &spec.mul(&r, b) == a)
}

/// For every `r` there is an `s` with `r^2 s = r`.
pub fn is_von_neumann_regular(spec: &RingSpec) -> bool {
    spec.elements().all(|r| {
        let square = spec.mul(&r, &r);
        spec.elements().any(|s| spec.mul(&square, &s) == r)
    })
}

/// The members of `Ra`, as a bitset over element indices.
pub fn principal_ideal(spec: &RingSpec, a: &RingElement) -> BitSet {
    BitSet::from_indices(
        spec.cardinality() as usize,
        spec.elements().map(|r| spec.index_of(&spec.mul(&r, a))),
    )
}
