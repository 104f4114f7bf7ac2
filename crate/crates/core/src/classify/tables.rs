//! The four classification tables as plain data, ready for rendering.

use num_integer::Integer;
use serde::Serialize;

use crate::reps::{enumerate_slice_reps, SliceRep, StabilizerTag};

use super::{count_diffeo_classes, named_example, TubeDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Count(u8),
    Text(String),
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Count(c) => write!(f, "{c}"),
            Cell::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedExample {
    pub row: String,
    pub col: String,
    pub manifold: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub table_id: String,
    pub title: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub cells: Vec<Vec<Cell>>,
    pub named_examples: Vec<NamedExample>,
}

impl Table {
    pub fn is_empty(&self) -> bool {
        self.row_labels.is_empty() || self.col_labels.is_empty()
    }

    pub fn cell(&self, row: &str, col: &str) -> Option<&Cell> {
        let r = self.row_labels.iter().position(|l| l == row)?;
        let c = self.col_labels.iter().position(|l| l == col)?;
        Some(&self.cells[r][c])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSet {
    pub bound: i64,
    pub tables: Vec<Table>,
}

/// Odd `m ≤ bound` for the `P(m)` tubes.
fn p_tubes(bound: i64) -> Vec<TubeDescriptor> {
    (1..=bound).step_by(2).map(TubeDescriptor::P).collect()
}

/// Canonical flag labels `0 ≤ p ≤ q ≤ bound`, split by whether `gcd(p, q) = 1`.
fn f_tubes(bound: i64, coprime: bool) -> Vec<TubeDescriptor> {
    let mut tubes = Vec::new();
    for q in 1..=bound {
        for p in 0..=q {
            if (p.gcd(&q) == 1) == coprime {
                tubes.push(TubeDescriptor::F(p, q));
            }
        }
    }
    tubes
}

fn count_table(
    table_id: &str,
    title: &str,
    rows: &[TubeDescriptor],
    cols: &[TubeDescriptor],
) -> Table {
    let mut named_examples = Vec::new();
    let cells = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| {
                    let count = count_diffeo_classes(r, c).expect("table cells share a regime");
                    if let Some(name) = named_example(r, c) {
                        named_examples.push(NamedExample {
                            row: r.to_string(),
                            col: c.to_string(),
                            manifold: name.to_string(),
                        });
                    }
                    Cell::Count(count.count)
                })
                .collect()
        })
        .collect();
    Table {
        table_id: table_id.to_string(),
        title: title.to_string(),
        row_labels: rows.iter().map(ToString::to_string).collect(),
        col_labels: cols.iter().map(ToString::to_string).collect(),
        cells,
        named_examples,
    }
}

fn slice_table(bound: i64) -> Table {
    let described = |tag: StabilizerTag| -> (usize, &'static str) {
        match tag {
            StabilizerTag::Su2 | StabilizerTag::So3 => (3, "[Sigma^2]"),
            StabilizerTag::U2 => (4, "[Sigma (x) (A^m + A^-m)], m odd"),
            StabilizerTag::T2 => (2, "A^p (x) A^q"),
        }
    };
    let rows = StabilizerTag::ALL;
    let cells = rows
        .iter()
        .map(|&tag| {
            let (dim, space) = described(tag);
            let reps: Vec<String> = enumerate_slice_reps(tag, bound)
                .iter()
                .map(SliceRep::to_string)
                .collect();
            vec![
                Cell::Text(dim.to_string()),
                Cell::Text(space.to_string()),
                Cell::Text(reps.join("; ")),
            ]
        })
        .collect();
    Table {
        table_id: "table1".into(),
        title: "Connected singular stabilizers and their slice representations".into(),
        row_labels: rows.iter().map(|t| t.name().to_string()).collect(),
        col_labels: vec!["dim V".into(), "V".into(), "slice reps".into()],
        cells,
        named_examples: Vec::new(),
    }
}

/// Tables 1 to 4 with tube parameters up to `bound`.
pub fn emit_tables(bound: i64) -> TableSet {
    use TubeDescriptor::*;
    let mut connected = vec![S, L];
    connected.extend(p_tubes(bound));
    let table2 = count_table(
        "table2",
        "Diffeomorphism classes, singular stabilizers SU(2), U(2), SO(3)",
        &connected,
        &connected,
    );

    let flags = f_tubes(bound, true);
    let mut cols3 = flags.clone();
    cols3.extend(p_tubes(bound));
    cols3.extend([L, S]);
    let table3 = count_table(
        "table3",
        "Diffeomorphism classes, one singular stabilizer T2, gcd(p,q) = 1",
        &flags,
        &cols3,
    );

    let flags4 = f_tubes(bound, false);
    let mut cols4: Vec<TubeDescriptor> = (2..=bound).map(SQuot).collect();
    if bound >= 3 {
        cols4.push(LQuot3);
    }
    cols4.extend(flags4.iter().copied());
    let cols4 = if flags4.is_empty() { Vec::new() } else { cols4 };
    let table4 = count_table(
        "table4",
        "Diffeomorphism classes, non-connected principal stabilizers",
        &flags4,
        &cols4,
    );

    TableSet {
        bound,
        tables: vec![slice_table(bound), table2, table3, table4],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_three_examples() {
        let set = emit_tables(3);
        let t2 = &set.tables[1];
        assert_eq!(t2.row_labels, vec!["S", "L", "P(1)", "P(3)"]);
        assert_eq!(t2.cell("P(1)", "P(1)"), Some(&Cell::Count(2)));
        assert_eq!(t2.cell("P(1)", "P(3)"), Some(&Cell::Count(0)));
        assert_eq!(t2.cell("P(3)", "P(3)"), Some(&Cell::Count(1)));

        let t3 = &set.tables[2];
        for row in &t3.row_labels {
            let expected = Cell::Count(u8::from(row == "F(0,1)"));
            assert_eq!(t3.cell(row, "S"), Some(&expected));
            assert_eq!(t3.cell(row, "L"), Some(&expected));
        }
    }

    #[test]
    fn bound_one_has_empty_nonconnected_table() {
        let set = emit_tables(1);
        assert!(set.tables[3].is_empty());
        assert!(set.tables[3].cells.is_empty());
    }

    #[test]
    fn named_examples_attach_to_cells() {
        let set = emit_tables(5);
        let t2 = &set.tables[1];
        assert!(t2
            .named_examples
            .iter()
            .any(|e| e.row == "P(1)" && e.col == "P(1)" && e.manifold == "Gr2(C4)"));
        let t3 = &set.tables[2];
        assert!(t3
            .named_examples
            .iter()
            .any(|e| e.row == "F(1,1)" && e.col == "P(3)"));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_value(&emit_tables(3).tables[1]).unwrap();
        for key in [
            "table_id",
            "row_labels",
            "col_labels",
            "cells",
            "named_examples",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["cells"][2][2], serde_json::json!(2));
    }
}
