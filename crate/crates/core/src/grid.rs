//! Text diagrams of decompositions: one row per summand, each class written in
//! the column of its shift.

use std::fmt::Write as _;

use serde::Serialize;

use crate::generators::{projective_space_shape, NamedDecomposition};
use crate::{ArtinClass, ClassCounts, GradedShape, Multiplicity, Result, Shift};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRow<M> {
    pub label: String,
    pub shift: Shift,
    /// The shifted summand.
    pub shape: GradedShape<M>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid<M> {
    rows: Vec<GridRow<M>>,
}

/// Serializable view of one row.
#[derive(Debug, Clone, Serialize)]
pub struct RowRecord {
    pub label: String,
    pub shift: Shift,
    pub cells: Vec<String>,
}

fn cell_text<M: Multiplicity>(counts: &ClassCounts<M>) -> String {
    let mut parts = Vec::new();
    for class in ArtinClass::ALL {
        let m = counts.get(class);
        if m.is_zero() {
            continue;
        }
        if m.is_one() {
            parts.push(class.to_string());
        } else {
            parts.push(format!("{m}{class}"));
        }
    }
    parts.join("+")
}

impl<M: Multiplicity> Grid<M> {
    /// Rows are ordered by shift, then label.
    pub fn new(mut rows: Vec<GridRow<M>>) -> Self {
        rows.sort_by(|x, y| (x.shift, &x.label).cmp(&(y.shift, &y.label)));
        Grid { rows }
    }

    pub fn from_decomposition(decomposition: &NamedDecomposition<M>) -> Self {
        Grid::new(
            decomposition
                .summands()
                .iter()
                .map(|s| GridRow {
                    label: s.label.clone(),
                    shift: s.shift,
                    shape: s.shape(),
                })
                .collect(),
        )
    }

    /// The line grid of the Weil transfer shape: `N` lines of length `N`,
    /// an `F` line at each even shift and an `A` line at each odd shift.
    pub fn weil_lines(degree: u64) -> Result<Self> {
        let line = projective_space_shape::<M>(degree)?;
        let rows = (0..degree)
            .map(|s| {
                let (label, shape) = if s % 2 == 0 {
                    ("F-line", line.shift(s))
                } else {
                    ("A-line", line.twist().shift(s))
                };
                GridRow {
                    label: label.to_string(),
                    shift: s,
                    shape,
                }
            })
            .collect();
        Ok(Grid::new(rows))
    }

    pub fn rows(&self) -> &[GridRow<M>] {
        &self.rows
    }

    /// Sum of every row: the shape the grid depicts.
    pub fn column_totals(&self) -> GradedShape<M> {
        self.rows.iter().map(|r| r.shape.clone()).sum()
    }

    fn width(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|r| r.shape.max_shift())
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    pub fn row_records(&self) -> Vec<RowRecord> {
        self.rows
            .iter()
            .map(|r| RowRecord {
                label: r.label.clone(),
                shift: r.shift,
                cells: r.shape.entries().map(|(_, c)| cell_text(c)).collect(),
            })
            .collect()
    }

    /// Plain-text rendering; columns are padded to their widest cell.
    pub fn render(&self) -> String {
        let width = self.width();
        let mut col_width = vec![1usize; width];
        for row in &self.rows {
            for (s, c) in row.shape.entries() {
                let w = &mut col_width[s as usize];
                *w = (*w).max(cell_text(c).chars().count());
            }
        }
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (col, w) in col_width.iter().enumerate() {
                let text = row
                    .shape
                    .counts_at(col as Shift)
                    .map(cell_text)
                    .unwrap_or_default();
                let _ = write!(line, "{text:<w$} ");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
