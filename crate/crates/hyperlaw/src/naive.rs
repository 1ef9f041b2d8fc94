//! Naive reference evaluators.
//!
//! Correctness of the optimized paths is defined by these plain-loop
//! re-evaluations: composition as the literal double loop over singletons,
//! law checks as fresh unions per tuple, ideal checks as per-element loops,
//! and raw enumeration as the unpruned scan of every cell assignment.
//! Nothing here may call the optimized implementations.

use crate::ideals::{IdealKind, IdealVerdict};
use crate::laws::{LawId, LawVerdict};
use crate::table::{default_labels, HyperTable, SubsetMask, WitnessTuple};

/// `A∘B` by the literal double loop over all singletons, no early exit.
pub fn compose(t: &HyperTable, a: SubsetMask, b: SubsetMask) -> SubsetMask {
    let n = t.order();
    let mut acc = SubsetMask::EMPTY;
    for x in 0..n {
        if !a.contains(x) {
            continue;
        }
        for y in 0..n {
            if !b.contains(y) {
                continue;
            }
            acc = acc.union(t.cell(x, y));
        }
    }
    acc
}

fn sides(t: &HyperTable, law: LawId, tu: &[usize]) -> (SubsetMask, SubsetMask) {
    let s = SubsetMask::singleton;
    let c = |i: usize, j: usize| t.cell(i, j);
    match law {
        LawId::LeftInvertive => (
            compose(t, c(tu[0], tu[1]), s(tu[2])),
            compose(t, c(tu[2], tu[1]), s(tu[0])),
        ),
        LawId::Medial => (
            compose(t, c(tu[0], tu[1]), c(tu[2], tu[3])),
            compose(t, c(tu[0], tu[2]), c(tu[1], tu[3])),
        ),
        LawId::Paramedial => (
            compose(t, c(tu[0], tu[1]), c(tu[2], tu[3])),
            compose(t, c(tu[3], tu[1]), c(tu[2], tu[0])),
        ),
        LawId::Associative => (
            compose(t, c(tu[0], tu[1]), s(tu[2])),
            compose(t, s(tu[0]), c(tu[1], tu[2])),
        ),
        LawId::Commutative => (c(tu[0], tu[1]), c(tu[1], tu[0])),
        LawId::LeftExchange => (
            compose(t, s(tu[0]), c(tu[1], tu[2])),
            compose(t, s(tu[1]), c(tu[0], tu[2])),
        ),
        LawId::SemihypergroupCriterion => (
            compose(t, s(tu[0]), c(tu[1], tu[2])),
            compose(t, c(tu[2], tu[1]), s(tu[0])),
        ),
    }
}

/// Law decision by exhaustive tuple scan with fresh unions.
pub fn check_law(t: &HyperTable, law: LawId) -> LawVerdict {
    let n = t.order();
    let arity = law.arity();
    let mut tuple = vec![0usize; arity];
    let total = n.pow(arity as u32);
    for idx in 0..total {
        let mut rem = idx;
        for pos in (0..arity).rev() {
            tuple[pos] = rem % n;
            rem /= n;
        }
        let (lhs, rhs) = sides(t, law, &tuple);
        if lhs != rhs {
            return LawVerdict {
                law,
                holds: false,
                witness: Some(WitnessTuple::new(law.name(), tuple.clone(), lhs, rhs)),
            };
        }
    }
    LawVerdict {
        law,
        holds: true,
        witness: None,
    }
}

/// Ideal decision by per-element loops over the defining containments.
pub fn is_ideal(t: &HyperTable, kind: IdealKind, a: SubsetMask) -> IdealVerdict {
    let n = t.order();
    let h = t.carrier();
    let elements = |m: SubsetMask| (0..n).filter(move |&i| m.contains(i));

    let verdict = |witness: Option<WitnessTuple>| IdealVerdict {
        kind,
        subset: a,
        holds: witness.is_none(),
        witness,
    };

    let sub_witness = || -> Option<WitnessTuple> {
        for x in elements(a) {
            for y in elements(a) {
                if !t.cell(x, y).is_subset_of(a) {
                    return Some(WitnessTuple::new(
                        "sub-closure",
                        vec![x, y],
                        t.cell(x, y),
                        a,
                    ));
                }
            }
        }
        None
    };
    let left_witness = || -> Option<WitnessTuple> {
        for x in 0..n {
            for y in elements(a) {
                if !t.cell(x, y).is_subset_of(a) {
                    return Some(WitnessTuple::new(
                        "left-hyperideal",
                        vec![x, y],
                        t.cell(x, y),
                        a,
                    ));
                }
            }
        }
        None
    };
    let right_witness = || -> Option<WitnessTuple> {
        for x in elements(a) {
            for y in 0..n {
                if !t.cell(x, y).is_subset_of(a) {
                    return Some(WitnessTuple::new(
                        "right-hyperideal",
                        vec![x, y],
                        t.cell(x, y),
                        a,
                    ));
                }
            }
        }
        None
    };
    let product_witness = |role: &str, product: SubsetMask| -> Option<WitnessTuple> {
        if product.is_subset_of(a) {
            None
        } else {
            let bad = product.first_outside(a).expect("non-contained element");
            Some(WitnessTuple::new(role, vec![bad], product, a))
        }
    };

    match kind {
        IdealKind::Sub => verdict(sub_witness()),
        IdealKind::Left => verdict(left_witness()),
        IdealKind::Right => verdict(right_witness()),
        IdealKind::TwoSided => verdict(left_witness().or_else(right_witness)),
        IdealKind::Bi => verdict(sub_witness().or_else(|| {
            let p = compose(t, compose(t, a, h), a);
            product_witness("bi-hyperideal", p)
        })),
        IdealKind::GeneralizedBi => {
            let p = compose(t, compose(t, a, h), a);
            verdict(product_witness("generalized-bi-hyperideal", p))
        }
        IdealKind::Interior => verdict(sub_witness().or_else(|| {
            let p = compose(t, compose(t, h, a), h);
            product_witness("interior-hyperideal", p)
        })),
        IdealKind::Quasi => {
            let p = compose(t, a, h).intersect(compose(t, h, a));
            verdict(product_witness("quasi-hyperideal", p))
        }
        IdealKind::OneTwo => verdict(sub_witness().or_else(|| {
            let p = compose(t, compose(t, a, h), compose(t, a, a));
            product_witness("one-two-hyperideal", p)
        })),
        IdealKind::Semiprime => {
            for x in 0..n {
                if t.cell(x, x).is_subset_of(a) && !a.contains(x) {
                    return verdict(Some(WitnessTuple::new(
                        "semiprime",
                        vec![x],
                        SubsetMask::singleton(x),
                        a,
                    )));
                }
            }
            verdict(None)
        }
        IdealKind::Idempotent => {
            let p = compose(t, a, a);
            if p == a {
                verdict(None)
            } else {
                verdict(Some(WitnessTuple::new("idempotent", vec![], p, a)))
            }
        }
    }
}

/// Every raw table of the given order, in lexicographic cell order, with no
/// pruning. Feasible only for tiny orders (order 2 scans 81 tables).
pub fn all_raw_tables(n: usize) -> Vec<HyperTable> {
    let alphabet = (1u32 << n) - 1;
    let cells = n * n;
    let total = (alphabet as u64).pow(cells as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rem = idx;
        let mut table = vec![SubsetMask::EMPTY; cells];
        for pos in (0..cells).rev() {
            table[pos] = SubsetMask((rem % alphabet as u64) as u32 + 1);
            rem /= alphabet as u64;
        }
        out.push(
            HyperTable::validate(n, table, default_labels(n)).expect("raw cells are in range"),
        );
    }
    out
}

/// Order-2 LA-semihypergroups by filtering all 81 raw tables.
pub fn la_semihypergroups_order2() -> Vec<HyperTable> {
    all_raw_tables(2)
        .into_iter()
        .filter(|t| check_law(t, LawId::LeftInvertive).holds)
        .collect()
}
