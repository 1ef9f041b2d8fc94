//! Finite hypergroupoids: element subsets as bit masks, validated Cayley
//! hypertables, and the set-lifted composition `A∘B = ⋃ a∘b`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported carrier size. One `u32` word holds any subset mask.
pub const MAX_ORDER: usize = 32;

/// A subset of the carrier `{0, …, n−1}`, one bit per element index.
///
/// The mask itself does not remember the order `n`; the owning
/// [`HyperTable`] supplies that context. The empty mask is representable
/// so intersections can be formed, but every operation over `P*(H)`, the
/// non-empty subsets, rejects it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The singleton `{i}`.
    pub fn singleton(i: usize) -> SubsetMask {
        debug_assert!(i < MAX_ORDER);
        SubsetMask(1 << i)
    }

    /// The full carrier `{0, …, n−1}`.
    pub fn full(n: usize) -> SubsetMask {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        if n == MAX_ORDER {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> SubsetMask {
        let mut bits = 0u32;
        for e in elements {
            debug_assert!(e < MAX_ORDER);
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ORDER && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// First element outside `other`, if any. Used to build witnesses for
    /// failed containments.
    pub fn first_outside(self, other: SubsetMask) -> Option<usize> {
        SubsetMask(self.0 & !other.0).iter().next()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Errors raised while validating raw table data or composing subsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("order {0} out of bounds (must satisfy 1 <= n <= {MAX_ORDER})")]
    OrderOutOfBounds(usize),
    #[error("cell ({0},{1}) is empty; every cell must be a non-empty subset")]
    EmptyCell(usize, usize),
    #[error("cell ({0},{1}) contains element {2} outside 0..{3}")]
    OutOfRange(usize, usize, usize, usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} cells, got {got}")]
    CellCountMismatch { expected: usize, got: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("composition operand is the empty set")]
    EmptyOperand,
}

/// A validated finite hypergroupoid: order `n`, an `n×n` table of non-empty
/// cells, and distinct display labels.
///
/// Tables are immutable once validated; every analysis downstream is a pure
/// function of a table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperTable {
    n: usize,
    cells: Vec<SubsetMask>,
    labels: Vec<String>,
}

impl HyperTable {
    /// Validate raw cell data (row-major, `n²` entries) into a table.
    pub fn validate(
        n: usize,
        cells: Vec<SubsetMask>,
        labels: Vec<String>,
    ) -> Result<HyperTable, TableError> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(TableError::OrderOutOfBounds(n));
        }
        if cells.len() != n * n {
            return Err(TableError::CellCountMismatch {
                expected: n * n,
                got: cells.len(),
            });
        }
        if labels.len() != n {
            return Err(TableError::LabelCountMismatch {
                expected: n,
                got: labels.len(),
            });
        }
        let full = SubsetMask::full(n);
        for i in 0..n {
            for j in 0..n {
                let cell = cells[i * n + j];
                if cell.is_empty() {
                    return Err(TableError::EmptyCell(i, j));
                }
                if !cell.is_subset_of(full) {
                    let bad = cell.first_outside(full).expect("offending bit exists");
                    return Err(TableError::OutOfRange(i, j, bad, n));
                }
            }
        }
        for (k, label) in labels.iter().enumerate() {
            if labels[..k].contains(label) {
                return Err(TableError::DuplicateLabel(label.clone()));
            }
        }
        Ok(HyperTable { n, cells, labels })
    }

    /// Convenience constructor with the default labels `a`, `b`, `c`, ….
    pub fn with_default_labels(n: usize, cells: Vec<SubsetMask>) -> Result<HyperTable, TableError> {
        HyperTable::validate(n, cells, default_labels(n))
    }

    /// Construction on the enumerator's hot path; the caller guarantees the
    /// invariants already hold.
    pub(crate) fn from_parts_unchecked(
        n: usize,
        cells: Vec<SubsetMask>,
        labels: Vec<String>,
    ) -> HyperTable {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert_eq!(labels.len(), n);
        debug_assert!(cells
            .iter()
            .all(|c| !c.is_empty() && c.is_subset_of(SubsetMask::full(n))));
        HyperTable { n, cells, labels }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the element carrying `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The cell `i∘j`.
    pub fn cell(&self, i: usize, j: usize) -> SubsetMask {
        self.cells[i * self.n + j]
    }

    /// Row-major cell sequence.
    pub fn cells(&self) -> &[SubsetMask] {
        &self.cells
    }

    /// The full carrier `H` as a mask.
    pub fn carrier(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Set-lifted composition `A∘B = ⋃_{a∈A, b∈B} a∘b`.
    ///
    /// Rejects empty operands; cells are non-empty, so the result never is.
    pub fn compose(&self, a: SubsetMask, b: SubsetMask) -> Result<SubsetMask, TableError> {
        if a.is_empty() || b.is_empty() {
            return Err(TableError::EmptyOperand);
        }
        Ok(self.compose_sets(a, b))
    }

    /// Internal total composition; callers guarantee non-empty operands.
    ///
    /// Iterates set bits directly and stops early once the union saturates
    /// the carrier. `naive::compose` is the reference this is checked
    /// against.
    pub(crate) fn compose_sets(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        debug_assert!(!a.is_empty() && !b.is_empty());
        let full = self.carrier();
        let mut acc = SubsetMask::EMPTY;
        for x in a.iter() {
            let row = x * self.n;
            for y in b.iter() {
                acc = acc.union(self.cells[row + y]);
            }
            if acc == full {
                return acc;
            }
        }
        acc
    }

    /// `a² = a∘a`, i.e. the diagonal cell.
    pub fn square(&self, a: usize) -> SubsetMask {
        self.cell(a, a)
    }

    /// Render a mask with this table's labels, e.g. `{x,w}`.
    pub fn format_mask(&self, mask: SubsetMask) -> String {
        let mut out = String::from("{");
        for (k, i) in mask.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }

    /// Same cells under new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<HyperTable, TableError> {
        HyperTable::validate(self.n, self.cells.clone(), labels)
    }
}

impl fmt::Debug for HyperTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HyperTable(order {})", self.n)?;
        for i in 0..self.n {
            write!(f, "  {}:", self.labels[i])?;
            for j in 0..self.n {
                write!(f, " {}", self.format_mask(self.cell(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

/// A replayable certificate for one failed equation or containment: which
/// claim failed, the element tuple it failed on, and the two unequal sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTuple {
    /// Which law or claim the tuple refutes, e.g. `"associative"`.
    pub role: String,
    /// Up to four element indices, in scan order.
    pub elements: Vec<usize>,
    pub lhs: SubsetMask,
    pub rhs: SubsetMask,
}

impl WitnessTuple {
    pub fn new(role: &str, elements: Vec<usize>, lhs: SubsetMask, rhs: SubsetMask) -> WitnessTuple {
        debug_assert!(elements.len() <= 4);
        debug_assert_ne!(lhs, rhs, "a witness must exhibit two unequal sides");
        WitnessTuple {
            role: role.to_string(),
            elements,
            lhs,
            rhs,
        }
    }

    /// Human rendering with table labels, e.g. `(t,t,y): {y,z,t} != {y,t}`.
    pub fn describe(&self, table: &HyperTable) -> String {
        self.render(|i| table.label(i).to_string(), |m| table.format_mask(m))
    }

    fn render(
        &self,
        label: impl Fn(usize) -> String,
        mask: impl Fn(SubsetMask) -> String,
    ) -> String {
        let tuple = self
            .elements
            .iter()
            .map(|&i| label(i))
            .collect::<Vec<_>>()
            .join(",");
        format!("({tuple}): {} != {}", mask(self.lhs), mask(self.rhs))
    }
}

impl fmt::Display for WitnessTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.render(|i| i.to_string(), |m| format!("{m:?}"))
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn validates_shipped_fixture() {
        let t = fixtures::i4();
        assert_eq!(t.order(), 4);
        assert_eq!(t.labels(), &["x", "y", "z", "w"]);
    }

    #[test]
    fn order_one_table_is_valid() {
        let t = HyperTable::with_default_labels(1, vec![SubsetMask::singleton(0)]).unwrap();
        assert_eq!(t.cell(0, 0), SubsetMask::singleton(0));
    }

    #[test]
    fn empty_cell_is_rejected() {
        let t = fixtures::i4();
        let mut cells = t.cells().to_vec();
        cells[1] = SubsetMask::EMPTY; // cell (x,y)
        let err = HyperTable::validate(4, cells, t.labels().to_vec()).unwrap_err();
        assert_eq!(err, TableError::EmptyCell(0, 1));
    }

    #[test]
    fn out_of_range_and_duplicate_labels_are_rejected() {
        let cells = vec![SubsetMask::from_elements([0, 2]); 4];
        let err = HyperTable::with_default_labels(2, cells).unwrap_err();
        assert_eq!(err, TableError::OutOfRange(0, 0, 2, 2));

        let cells = vec![SubsetMask::singleton(0); 4];
        let err = HyperTable::validate(2, cells, vec!["a".into(), "a".into()]).unwrap_err();
        assert_eq!(err, TableError::DuplicateLabel("a".into()));
    }

    #[test]
    fn order_bounds_are_enforced() {
        assert_eq!(
            HyperTable::with_default_labels(0, vec![]).unwrap_err(),
            TableError::OrderOutOfBounds(0)
        );
        let n = MAX_ORDER + 1;
        assert_eq!(
            HyperTable::with_default_labels(n, vec![SubsetMask::singleton(0); n * n]).unwrap_err(),
            TableError::OrderOutOfBounds(n)
        );
    }

    #[test]
    fn compose_matches_the_fixture_cells() {
        let i4 = fixtures::i4();
        // x∘y = {x,w}
        let got = i4
            .compose(SubsetMask::singleton(0), SubsetMask::singleton(1))
            .unwrap();
        assert_eq!(got, SubsetMask::from_elements([0, 3]));

        // (t∘t)∘y in L5: {y,t}∘{y} = {y,z,t}
        let l5 = fixtures::l5();
        let yt = SubsetMask::from_elements([1, 4]);
        let got = l5.compose(yt, SubsetMask::singleton(1)).unwrap();
        assert_eq!(got, SubsetMask::from_elements([1, 2, 4]));
    }

    #[test]
    fn compose_rejects_empty_operand() {
        let i4 = fixtures::i4();
        let err = i4
            .compose(SubsetMask::singleton(0), SubsetMask::EMPTY)
            .unwrap_err();
        assert_eq!(err, TableError::EmptyOperand);
    }

    #[test]
    fn square_is_the_diagonal_cell() {
        assert_eq!(fixtures::i4().square(0), SubsetMask::singleton(0));
        assert_eq!(fixtures::p4().square(3), SubsetMask::full(4));
        let one = HyperTable::with_default_labels(1, vec![SubsetMask::singleton(0)]).unwrap();
        assert_eq!(one.square(0), SubsetMask::singleton(0));
    }
}
