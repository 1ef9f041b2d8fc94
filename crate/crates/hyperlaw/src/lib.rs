//! A verification and enumeration workbench for finite LA-semihypergroups:
//! hypergroupoids whose composition returns non-empty subsets and satisfies
//! the left invertive law `(x∘y)∘z = (z∘y)∘x`.
//!
//! The crate decides equational laws, identity/zero classifications, every
//! hyperideal flavor, intra-regularity and invertibility on concrete finite
//! tables; runs a catalog of structure theorems as hypothesis→conclusion
//! checks with replayable certificates; reproduces the known converse
//! failures; and enumerates the structures of small order exhaustively with
//! deterministic, parallel, prefix-partitioned search.
//!
//! ```
//! use hyperlaw::fixtures;
//! use hyperlaw::laws::{check_law, LawId};
//!
//! let table = fixtures::i4();
//! assert!(check_law(&table, LawId::LeftInvertive).holds);
//! assert!(!check_law(&table, LawId::Associative).holds);
//! ```

pub mod enumeration;
pub mod fixtures;
pub mod format;
pub mod ideals;
pub mod laws;
pub mod naive;
pub mod regularity;
pub mod report;
pub mod table;
pub mod theorems;

pub use table::{HyperTable, SubsetMask, TableError, WitnessTuple};
