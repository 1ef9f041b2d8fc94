//! The finite Cayley hypertables shipped with the crate, embedded from
//! `fixtures/*.tbl`.
//!
//! `L5`, `P4`, `R3` come from the introductory examples (order 5, 4, 3);
//! `I4` is the order-4 intra-regular structure; `K4` and `A5` are the two
//! tables exhibiting converse failures.
//!
//! `P4` ships as-is, and as shipped it does NOT satisfy the left
//! invertive law: `(y∘w)∘w = w∘w = H` while
//! `(w∘w)∘y = H∘y = {y,z,w}`. Its classification claims (x is a pure left
//! identity, `w∘w = H`, intra-regularity) still hold and are tested on it.
//! `P4R` is the one-cell repair `w∘w = {w}`, a verified LA-semihypergroup
//! with pure left identity that the theorem harness tests use instead.

use crate::format;
use crate::table::HyperTable;

macro_rules! fixture {
    ($fn_name:ident, $id:ident, $file:literal) => {
        pub fn $fn_name() -> HyperTable {
            format::parse_compact(include_str!(concat!("../fixtures/", $file))).expect(concat!(
                "shipped fixture ",
                $file,
                " must parse"
            ))
        }
    };
}

fixture!(l5, L5, "L5.tbl");
fixture!(p4, P4, "P4.tbl");
fixture!(r3, R3, "R3.tbl");
fixture!(i4, I4, "I4.tbl");
fixture!(k4, K4, "K4.tbl");
fixture!(a5, A5, "A5.tbl");
fixture!(p4_repaired, P4R, "P4R.tbl");

/// All fixtures with their identifiers, in a fixed order.
pub fn all() -> Vec<(&'static str, HyperTable)> {
    vec![
        ("L5", l5()),
        ("P4", p4()),
        ("R3", r3()),
        ("I4", i4()),
        ("K4", k4()),
        ("A5", a5()),
    ]
}

/// The one-element hypergroupoid.
pub fn trivial() -> HyperTable {
    HyperTable::with_default_labels(1, vec![crate::table::SubsetMask::singleton(0)])
        .expect("order-1 table is valid")
}
