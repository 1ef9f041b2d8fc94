//! Table file formats.
//!
//! Two encodings are supported:
//!
//! * compact text — a `# labels: …` directive followed by one row per line,
//!   cells separated by `|`, elements within a cell separated by `,`:
//!
//!   ```text
//!   # labels: x y z w
//!   x|x,w|x,w|w
//!   x,w|y,z|y,z|w
//!   x,w|y|y|w
//!   w|w|w|w
//!   ```
//!
//!   The directive is required because cell contents alone cannot name an
//!   element that occurs in no cell.
//!
//! * structured JSON document — keys `order`, `elements`, `table`; the
//!   canonical format for round-trip guarantees.
//!
//! [`parse`] auto-detects the encoding (JSON starts with `{`).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::{HyperTable, SubsetMask, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("invalid JSON document: {0}")]
    Json(String),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Structured document mirroring a printed Cayley hypertable: order,
/// element labels, and an `n×n` grid of cells given as label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl TableDocument {
    pub fn from_table(t: &HyperTable) -> TableDocument {
        let n = t.order();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        t.cell(i, j)
                            .iter()
                            .map(|e| t.label(e).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TableDocument {
            order: n,
            elements: t.labels().to_vec(),
            table,
        }
    }

    pub fn into_table(&self) -> Result<HyperTable, FormatError> {
        let n = self.order;
        if self.elements.len() != n {
            return Err(FormatError::Json(format!(
                "order is {n} but {} elements are listed",
                self.elements.len()
            )));
        }
        let index_of = |label: &str| self.elements.iter().position(|l| l == label);
        let mut cells = Vec::with_capacity(n * n);
        if self.table.len() != n {
            return Err(FormatError::Json(format!(
                "expected {n} rows, got {}",
                self.table.len()
            )));
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(FormatError::Json(format!(
                    "row {i} has {} cells, expected {n}",
                    row.len()
                )));
            }
            for (j, cell) in row.iter().enumerate() {
                let mut mask = SubsetMask::EMPTY;
                for label in cell {
                    let Some(e) = index_of(label) else {
                        return Err(FormatError::Json(format!(
                            "cell ({i},{j}) names unknown element {label:?}"
                        )));
                    };
                    mask = mask.union(SubsetMask::singleton(e));
                }
                cells.push(mask);
            }
        }
        Ok(HyperTable::validate(n, cells, self.elements.clone())?)
    }
}

/// Parse either encoding into a validated table.
pub fn parse(input: &str) -> Result<HyperTable, FormatError> {
    if input.trim_start().starts_with('{') {
        let doc: TableDocument =
            serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))?;
        doc.into_table()
    } else {
        parse_compact(input)
    }
}

/// Parse the compact text format.
pub fn parse_compact(input: &str) -> Result<HyperTable, FormatError> {
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<SubsetMask>> = Vec::new();
    let mut label_index: Vec<(String, usize)> = Vec::new();

    for (lineno, raw_line) in input.lines().enumerate() {
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(names) = rest.strip_prefix("labels:") {
                let names: Vec<String> = names.split_whitespace().map(|s| s.to_string()).collect();
                if names.is_empty() {
                    return Err(syntax(lineno + 1, 1, "labels directive names no elements"));
                }
                label_index = names
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (l.clone(), i))
                    .collect();
                labels = Some(names);
            }
            continue;
        }
        let Some(labels) = labels.as_ref() else {
            return Err(syntax(
                lineno + 1,
                1,
                "missing `# labels: …` directive before the first row",
            ));
        };
        let mut row = Vec::with_capacity(labels.len());
        let mut column = 1usize;
        for cell_text in line.split('|') {
            let mut mask = SubsetMask::EMPTY;
            for name in cell_text.split(',') {
                let name = name.trim();
                if name.is_empty() {
                    return Err(syntax(lineno + 1, column, "empty element name in cell"));
                }
                let Some(&(_, e)) = label_index.iter().find(|(l, _)| l == name) else {
                    return Err(syntax(
                        lineno + 1,
                        column,
                        format!("unknown element {name:?}"),
                    ));
                };
                mask = mask.union(SubsetMask::singleton(e));
            }
            row.push(mask);
            column += cell_text.len() + 1;
        }
        if row.len() != labels.len() {
            return Err(syntax(
                lineno + 1,
                1,
                format!("row has {} cells, expected {}", row.len(), labels.len()),
            ));
        }
        rows.push(row);
    }

    let Some(labels) = labels else {
        return Err(syntax(1, 1, "input contains no labels directive"));
    };
    if rows.len() != labels.len() {
        return Err(syntax(
            input.lines().count().max(1),
            1,
            format!("found {} rows, expected {}", rows.len(), labels.len()),
        ));
    }
    let cells = rows.into_iter().flatten().collect();
    Ok(HyperTable::validate(labels.len(), cells, labels)?)
}

/// Serialize to the compact text format.
pub fn serialize_compact(t: &HyperTable) -> String {
    let mut out = format!("# labels: {}\n", t.labels().join(" "));
    for i in 0..t.order() {
        let row: Vec<String> = (0..t.order())
            .map(|j| {
                t.cell(i, j)
                    .iter()
                    .map(|e| t.label(e).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        out.push_str(&row.join("|"));
        out.push('\n');
    }
    out
}

/// Serialize to the structured JSON document (pretty, fixed key order).
pub fn serialize_json(t: &HyperTable) -> String {
    let doc = TableDocument::from_table(t);
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}
