//! Intra-regularity and invertibility: witness search and whole-structure
//! classification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laws::classify_identities;
use crate::table::{HyperTable, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("element {0} is not a left identity")]
    NotAnIdentity(usize),
}

/// Per-element intra-regularity witnesses.
///
/// An element `a` is intra-regular when `a ∈ (x∘a²)∘y` for some pair
/// `(x, y)`; the stored witness is the first hit in the `(x, y)` scan order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntraRegularityReport {
    pub witnesses: Vec<Option<(usize, usize)>>,
    pub overall: bool,
    pub first_failing: Option<usize>,
}

impl IntraRegularityReport {
    /// Re-verify every stored witness by direct composition.
    pub fn verify(&self, t: &HyperTable) -> bool {
        self.witnesses.iter().enumerate().all(|(a, w)| match w {
            Some((x, y)) => intra_regular_witness_checks(t, a, *x, *y),
            None => true,
        })
    }
}

/// Does `a ∈ (x∘a²)∘y` hold?
pub fn intra_regular_witness_checks(t: &HyperTable, a: usize, x: usize, y: usize) -> bool {
    let inner = t.compose_sets(SubsetMask::singleton(x), t.square(a));
    t.compose_sets(inner, SubsetMask::singleton(y)).contains(a)
}

/// Scan all elements for intra-regularity witnesses.
pub fn intra_regular(t: &HyperTable) -> IntraRegularityReport {
    let n = t.order();
    let witnesses: Vec<Option<(usize, usize)>> = (0..n)
        .map(|a| {
            for x in 0..n {
                for y in 0..n {
                    if intra_regular_witness_checks(t, a, x, y) {
                        return Some((x, y));
                    }
                }
            }
            None
        })
        .collect();
    let first_failing = witnesses.iter().position(|w| w.is_none());
    IntraRegularityReport {
        overall: first_failing.is_none(),
        witnesses,
        first_failing,
    }
}

/// Inverses of one element with respect to a fixed left identity `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ElementInverses {
    /// First `u` with `e ∈ u∘a`.
    pub left: Option<usize>,
    /// First `u` with `u∘a = {e}`.
    pub pure_left: Option<usize>,
    /// First `u` with `e ∈ a∘u`.
    pub right: Option<usize>,
    /// First `u` with `a∘u = {e}`.
    pub pure_right: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertibilityReport {
    /// The left identity the scan used.
    pub identity: usize,
    pub inverses: Vec<ElementInverses>,
    pub left_invertible: bool,
    pub right_invertible: bool,
    pub invertible: bool,
    pub pure_left_invertible: bool,
    pub pure_right_invertible: bool,
}

/// Per-element inverse scan with respect to the left identity `e`.
///
/// Fails with [`RegularityError::NotAnIdentity`] unless `e` is flagged as a
/// left identity by [`classify_identities`].
pub fn invertibility(t: &HyperTable, e: usize) -> Result<InvertibilityReport, RegularityError> {
    let profile = classify_identities(t);
    if e >= t.order() || !profile.element(e).left_identity {
        return Err(RegularityError::NotAnIdentity(e));
    }
    let n = t.order();
    let se = SubsetMask::singleton(e);
    let inverses: Vec<ElementInverses> = (0..n)
        .map(|a| {
            let mut inv = ElementInverses::default();
            for u in 0..n {
                let ua = t.cell(u, a);
                let au = t.cell(a, u);
                if inv.left.is_none() && ua.contains(e) {
                    inv.left = Some(u);
                }
                if inv.pure_left.is_none() && ua == se {
                    inv.pure_left = Some(u);
                }
                if inv.right.is_none() && au.contains(e) {
                    inv.right = Some(u);
                }
                if inv.pure_right.is_none() && au == se {
                    inv.pure_right = Some(u);
                }
            }
            inv
        })
        .collect();
    let left_invertible = inverses.iter().all(|i| i.left.is_some());
    let right_invertible = inverses.iter().all(|i| i.right.is_some());
    Ok(InvertibilityReport {
        identity: e,
        left_invertible,
        right_invertible,
        invertible: left_invertible && right_invertible,
        pure_left_invertible: inverses.iter().all(|i| i.pure_left.is_some()),
        pure_right_invertible: inverses.iter().all(|i| i.pure_right.is_some()),
        inverses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn i4_is_intra_regular_and_documented_witnesses_verify() {
        let i4 = fixtures::i4();
        let report = intra_regular(&i4);
        assert!(report.overall);
        assert!(report.verify(&i4));
        // x∈(y∘x²)∘z, y∈(z∘y²)∘z, z∈(y∘z²)∘y, w∈(x∘w²)∘z
        for (a, x, y) in [(0, 1, 2), (1, 2, 2), (2, 1, 1), (3, 0, 2)] {
            assert!(intra_regular_witness_checks(&i4, a, x, y));
        }
    }

    #[test]
    fn k4_and_a5_fail_at_element_x() {
        let k4 = fixtures::k4();
        let report = intra_regular(&k4);
        assert!(!report.overall);
        assert_eq!(report.first_failing, Some(0));
        assert_eq!(k4.label(0), "x");

        let a5 = fixtures::a5();
        let report = intra_regular(&a5);
        assert!(!report.overall);
        assert_eq!(report.first_failing, Some(1));
        assert_eq!(a5.label(1), "x");
    }

    #[test]
    fn every_stored_witness_re_verifies() {
        for (id, t) in fixtures::all() {
            assert!(intra_regular(&t).verify(&t), "{id}");
        }
    }

    #[test]
    fn a5_is_not_left_invertible_at_x() {
        let a5 = fixtures::a5();
        let report = invertibility(&a5, 0).unwrap();
        assert!(!report.left_invertible);
        // column x never contains e
        assert_eq!(report.inverses[1].left, None);
    }

    #[test]
    fn trivial_table_is_invertible() {
        let report = invertibility(&fixtures::trivial(), 0).unwrap();
        assert!(report.invertible);
        assert!(report.pure_left_invertible && report.pure_right_invertible);
    }

    #[test]
    fn p4_is_not_left_invertible() {
        // column y of P4 is {y},{y,z},{y,z},{w}: no u with x ∈ u∘y
        let p4 = fixtures::p4();
        let report = invertibility(&p4, 0).unwrap();
        assert_eq!(report.inverses[1].left, None);
        assert!(!report.left_invertible);
    }

    #[test]
    fn non_identity_is_rejected() {
        let err = invertibility(&fixtures::i4(), 0).unwrap_err();
        assert_eq!(err, RegularityError::NotAnIdentity(0));
    }

    /// Left (or right) invertibility with a pure left identity forces
    /// intra-regularity, and intra-regularity forces `H = H∘H`; swept over
    /// the complete order-2 class.
    #[test]
    fn invertibility_and_square_sweeps_over_order_two() {
        for t in crate::naive::la_semihypergroups_order2() {
            if let Some(e) = classify_identities(&t).pure_left_identity() {
                let inv = invertibility(&t, e).unwrap();
                if inv.left_invertible || inv.right_invertible {
                    assert!(intra_regular(&t).overall, "{t:?}");
                }
            }
            if intra_regular(&t).overall {
                let h = t.carrier();
                assert_eq!(t.compose(h, h).unwrap(), h, "{t:?}");
            }
        }
    }
}
