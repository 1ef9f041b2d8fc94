//! Hyperideal predicates and enumerators.
//!
//! Kinds and their defining containments, for a non-empty subset `A` of a
//! table with carrier `H`:
//!
//! | kind            | requirement                                  |
//! |-----------------|----------------------------------------------|
//! | `Sub`           | `x∘y ⊆ A` for all `x, y ∈ A`                 |
//! | `Left`          | `H∘A ⊆ A`                                    |
//! | `Right`         | `A∘H ⊆ A`                                    |
//! | `TwoSided`      | left and right                               |
//! | `Bi`            | sub and `(A∘H)∘A ⊆ A`                        |
//! | `GeneralizedBi` | `(A∘H)∘A ⊆ A`                                |
//! | `Interior`      | sub and `(H∘A)∘H ⊆ A`                        |
//! | `Quasi`         | `A∘H ∩ H∘A ⊆ A`                              |
//! | `OneTwo`        | sub and `(A∘H)∘A² ⊆ A`                       |
//! | `Semiprime`     | `a² ⊆ A` implies `a ∈ A`                     |
//! | `Idempotent`    | `A∘A = A`                                    |

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::{HyperTable, SubsetMask, WitnessTuple};

/// Exhaustive subset scans stay below this order (a `2ⁿ` bound).
pub const MAX_EXHAUSTIVE_SUBSET_ORDER: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealKind {
    Sub,
    Left,
    Right,
    TwoSided,
    Bi,
    GeneralizedBi,
    Interior,
    Quasi,
    OneTwo,
    Semiprime,
    Idempotent,
}

impl IdealKind {
    pub const ALL: [IdealKind; 11] = [
        IdealKind::Sub,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Interior,
        IdealKind::Quasi,
        IdealKind::OneTwo,
        IdealKind::Semiprime,
        IdealKind::Idempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Sub => "sub",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::Bi => "bi",
            IdealKind::GeneralizedBi => "generalized-bi",
            IdealKind::Interior => "interior",
            IdealKind::Quasi => "quasi",
            IdealKind::OneTwo => "one-two",
            IdealKind::Semiprime => "semiprime",
            IdealKind::Idempotent => "idempotent",
        }
    }

    pub fn parse(s: &str) -> Option<IdealKind> {
        IdealKind::ALL.iter().copied().find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("subset operand is empty; hyperideals are non-empty subsets")]
    EmptyOperand,
    #[error(
        "order {0} too large for the exhaustive subset scan (max {MAX_EXHAUSTIVE_SUBSET_ORDER})"
    )]
    OrderTooLargeForExhaustive(usize),
}

/// Outcome of one ideal-kind check on one subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealVerdict {
    pub kind: IdealKind,
    pub subset: SubsetMask,
    pub holds: bool,
    /// On failure: an element of the required product set outside the subset,
    /// or the violating pair for element-wise containments.
    pub witness: Option<WitnessTuple>,
}

fn containment_witness(role: &str, product: SubsetMask, a: SubsetMask) -> Option<WitnessTuple> {
    product
        .first_outside(a)
        .map(|bad| WitnessTuple::new(role, vec![bad], product, a))
}

fn sub_witness(t: &HyperTable, a: SubsetMask) -> Option<WitnessTuple> {
    for x in a.iter() {
        for y in a.iter() {
            let cell = t.cell(x, y);
            if !cell.is_subset_of(a) {
                return Some(WitnessTuple::new("sub-closure", vec![x, y], cell, a));
            }
        }
    }
    None
}

fn left_witness(t: &HyperTable, a: SubsetMask) -> Option<WitnessTuple> {
    for x in 0..t.order() {
        for y in a.iter() {
            let cell = t.cell(x, y);
            if !cell.is_subset_of(a) {
                return Some(WitnessTuple::new("left-hyperideal", vec![x, y], cell, a));
            }
        }
    }
    None
}

fn right_witness(t: &HyperTable, a: SubsetMask) -> Option<WitnessTuple> {
    for x in a.iter() {
        for y in 0..t.order() {
            let cell = t.cell(x, y);
            if !cell.is_subset_of(a) {
                return Some(WitnessTuple::new("right-hyperideal", vec![x, y], cell, a));
            }
        }
    }
    None
}

/// Decide whether `a` is an ideal of the given kind.
pub fn is_ideal(
    t: &HyperTable,
    kind: IdealKind,
    a: SubsetMask,
) -> Result<IdealVerdict, IdealError> {
    if a.is_empty() {
        return Err(IdealError::EmptyOperand);
    }
    let h = t.carrier();
    let witness = match kind {
        IdealKind::Sub => sub_witness(t, a),
        IdealKind::Left => left_witness(t, a),
        IdealKind::Right => right_witness(t, a),
        IdealKind::TwoSided => left_witness(t, a).or_else(|| right_witness(t, a)),
        IdealKind::Bi => sub_witness(t, a).or_else(|| {
            let p = t.compose_sets(t.compose_sets(a, h), a);
            containment_witness("bi-hyperideal", p, a)
        }),
        IdealKind::GeneralizedBi => {
            let p = t.compose_sets(t.compose_sets(a, h), a);
            containment_witness("generalized-bi-hyperideal", p, a)
        }
        IdealKind::Interior => sub_witness(t, a).or_else(|| {
            let p = t.compose_sets(t.compose_sets(h, a), h);
            containment_witness("interior-hyperideal", p, a)
        }),
        IdealKind::Quasi => {
            let p = t.compose_sets(a, h).intersect(t.compose_sets(h, a));
            containment_witness("quasi-hyperideal", p, a)
        }
        IdealKind::OneTwo => sub_witness(t, a).or_else(|| {
            let a2 = t.compose_sets(a, a);
            let p = t.compose_sets(t.compose_sets(a, h), a2);
            containment_witness("one-two-hyperideal", p, a)
        }),
        IdealKind::Semiprime => (0..t.order()).find_map(|x| {
            if t.square(x).is_subset_of(a) && !a.contains(x) {
                Some(WitnessTuple::new(
                    "semiprime",
                    vec![x],
                    SubsetMask::singleton(x),
                    a,
                ))
            } else {
                None
            }
        }),
        IdealKind::Idempotent => {
            let p = t.compose_sets(a, a);
            if p == a {
                None
            } else {
                Some(WitnessTuple::new("idempotent", vec![], p, a))
            }
        }
    };
    Ok(IdealVerdict {
        kind,
        subset: a,
        holds: witness.is_none(),
        witness,
    })
}

/// All non-empty subsets of the carrier satisfying `kind`, in ascending mask
/// order.
pub fn enumerate_ideals(t: &HyperTable, kind: IdealKind) -> Result<Vec<SubsetMask>, IdealError> {
    let n = t.order();
    if n > MAX_EXHAUSTIVE_SUBSET_ORDER {
        return Err(IdealError::OrderTooLargeForExhaustive(n));
    }
    let full = t.carrier().0;
    let mut out = Vec::new();
    for bits in 1..=full {
        let a = SubsetMask(bits);
        if is_ideal(t, kind, a)?.holds {
            out.push(a);
        }
    }
    Ok(out)
}

/// Inclusion-minimal members of [`enumerate_ideals`], ascending mask order.
pub fn minimal_ideals(t: &HyperTable, kind: IdealKind) -> Result<Vec<SubsetMask>, IdealError> {
    let all = enumerate_ideals(t, kind)?;
    Ok(all
        .iter()
        .copied()
        .filter(|&a| !all.iter().any(|&b| b != a && b.is_subset_of(a)))
        .collect())
}

/// The principal product sets `H∘a`, `a∘H`, `a²∘H`, `H∘a²` used throughout
/// the intra-regularity characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalSets {
    pub ha: SubsetMask,
    pub ah: SubsetMask,
    pub a2h: SubsetMask,
    pub ha2: SubsetMask,
}

pub fn principal_sets(t: &HyperTable, a: usize) -> PrincipalSets {
    let h = t.carrier();
    let sa = SubsetMask::singleton(a);
    let a2 = t.square(a);
    PrincipalSets {
        ha: t.compose_sets(h, sa),
        ah: t.compose_sets(sa, h),
        a2h: t.compose_sets(a2, h),
        ha2: t.compose_sets(h, a2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::naive;

    fn mask(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied())
    }

    #[test]
    fn k4_zw_is_a_generalized_bi_hyperideal() {
        let verdict = is_ideal(&fixtures::k4(), IdealKind::GeneralizedBi, mask(&[2, 3])).unwrap();
        assert!(verdict.holds);
        // and a bi-hyperideal proper
        assert!(
            is_ideal(&fixtures::k4(), IdealKind::Bi, mask(&[2, 3]))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn a5_zw_is_an_interior_hyperideal() {
        let verdict = is_ideal(&fixtures::a5(), IdealKind::Interior, mask(&[3, 4])).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn i4_w_is_two_sided() {
        let verdict = is_ideal(&fixtures::i4(), IdealKind::TwoSided, mask(&[3])).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn p4_w_is_not_a_left_hyperideal() {
        let p4 = fixtures::p4();
        let verdict = is_ideal(&p4, IdealKind::Left, mask(&[3])).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        // the violating cell is w∘w = H
        assert_eq!(w.elements, vec![3, 3]);
        assert_eq!(w.lhs, p4.carrier());
    }

    #[test]
    fn empty_subset_is_rejected() {
        let err = is_ideal(&fixtures::i4(), IdealKind::Left, SubsetMask::EMPTY).unwrap_err();
        assert_eq!(err, IdealError::EmptyOperand);
    }

    #[test]
    fn subset_scan_is_bounded() {
        let n = MAX_EXHAUSTIVE_SUBSET_ORDER + 1;
        let t =
            crate::table::HyperTable::with_default_labels(n, vec![SubsetMask::singleton(0); n * n])
                .unwrap();
        assert_eq!(
            enumerate_ideals(&t, IdealKind::Left).unwrap_err(),
            IdealError::OrderTooLargeForExhaustive(n)
        );
    }

    #[test]
    fn enumerate_finds_the_expected_ideals() {
        let i4 = fixtures::i4();
        let two_sided = enumerate_ideals(&i4, IdealKind::TwoSided).unwrap();
        assert!(two_sided.contains(&mask(&[3])));
        assert!(two_sided.contains(&i4.carrier()));

        let one = fixtures::trivial();
        assert_eq!(
            enumerate_ideals(&one, IdealKind::Left).unwrap(),
            vec![mask(&[0])]
        );

        let k4 = fixtures::k4();
        assert!(enumerate_ideals(&k4, IdealKind::GeneralizedBi)
            .unwrap()
            .contains(&mask(&[2, 3])));
    }

    #[test]
    fn minimal_ideals_match_the_examples() {
        assert_eq!(
            minimal_ideals(&fixtures::i4(), IdealKind::TwoSided).unwrap(),
            vec![mask(&[3])]
        );
        assert_eq!(
            minimal_ideals(&fixtures::trivial(), IdealKind::TwoSided).unwrap(),
            vec![mask(&[0])]
        );
        // P4 has no proper left hyperideal
        let p4 = fixtures::p4();
        assert_eq!(
            minimal_ideals(&p4, IdealKind::Left).unwrap(),
            vec![p4.carrier()]
        );
    }

    #[test]
    fn principal_sets_match_direct_composition() {
        let i4 = fixtures::i4();
        assert_eq!(principal_sets(&i4, 3).ha, mask(&[3]));

        let p4 = fixtures::p4();
        assert_eq!(principal_sets(&p4, 0).ah, p4.carrier());

        let one = fixtures::trivial();
        let ps = principal_sets(&one, 0);
        assert_eq!(
            (ps.ha, ps.ah, ps.a2h, ps.ha2),
            (mask(&[0]), mask(&[0]), mask(&[0]), mask(&[0]))
        );
    }

    #[test]
    fn element_is_in_its_principal_left_set_under_pure_left_identity() {
        for t in [fixtures::p4(), fixtures::a5()] {
            for a in 0..t.order() {
                assert!(principal_sets(&t, a).ha.contains(a));
            }
        }
        // and over every order-2 structure with a pure left identity
        for t in crate::naive::la_semihypergroups_order2() {
            if crate::laws::classify_identities(&t)
                .pure_left_identity()
                .is_none()
            {
                continue;
            }
            for a in 0..t.order() {
                assert!(principal_sets(&t, a).ha.contains(a), "{t:?}");
            }
        }
    }

    #[test]
    fn agrees_with_naive_oracle_on_fixtures() {
        for (id, t) in fixtures::all() {
            let full = t.carrier().0;
            for bits in 1..=full {
                let a = SubsetMask(bits);
                for kind in IdealKind::ALL {
                    assert_eq!(
                        is_ideal(&t, kind, a).unwrap(),
                        naive::is_ideal(&t, kind, a),
                        "{id}/{:?}/{bits:#b}",
                        kind
                    );
                }
            }
        }
    }
}
