//! The reference table of generator cycles for even `m`.
//!
//! Rows keep the published grouping of arm counts. Each row's cycle is
//! regenerated from its first arm count; [`grouping_mismatches`] reports any
//! listed arm count whose own cycle differs from its row.

use std::fmt::Write as _;

use crate::sequence::{generate_sequence, KolamSpec};

/// `(m, arm counts)` in published order.
pub const REFERENCE_ROWS: &[(u32, &[u32])] = &[
    (2, &[3, 5, 7, 9, 11, 13]),
    (4, &[3, 7, 13]),
    (4, &[5, 9, 11]),
    (6, &[5, 11]),
    (6, &[7, 13]),
    (8, &[3, 11]),
    (8, &[5, 13]),
    (8, &[7]),
    (8, &[9]),
    (10, &[3, 13]),
    (10, &[7]),
    (10, &[9]),
    (10, &[11]),
    (12, &[5]),
    (12, &[7]),
    (12, &[11]),
    (12, &[13]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub m: u32,
    pub arms: &'static [u32],
    pub cycle: String,
}

fn cycle(m: u32, n: u32) -> String {
    let spec = KolamSpec::new(m.into(), n.into()).expect("reference rows are coprime");
    generate_sequence(&spec).cycle_string()
}

pub fn table_rows() -> Vec<TableRow> {
    REFERENCE_ROWS
        .iter()
        .map(|&(m, arms)| TableRow {
            m,
            arms,
            cycle: cycle(m, arms[0]),
        })
        .collect()
}

/// Tab-separated `m`, comma-separated arm counts, and cycle; one row per line.
pub fn render_table() -> String {
    let mut out = String::new();
    for row in table_rows() {
        let arms: Vec<String> = row.arms.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}\t{}\t{}", row.m, arms.join(", "), row.cycle);
    }
    out
}

/// A listed arm count whose cycle differs from the row it is printed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupingMismatch {
    pub m: u32,
    pub n: u32,
    pub listed_cycle: String,
    pub actual_cycle: String,
}

pub fn grouping_mismatches() -> Vec<GroupingMismatch> {
    table_rows()
        .into_iter()
        .flat_map(|row| {
            row.arms.iter().filter_map(move |&n| {
                let actual = cycle(row.m, n);
                (actual != row.cycle).then(|| GroupingMismatch {
                    m: row.m,
                    n,
                    listed_cycle: row.cycle.clone(),
                    actual_cycle: actual,
                })
            })
        })
        .collect()
}
