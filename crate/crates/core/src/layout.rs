//! Dot matrix and closed polar path.
//!
//! The matrix is the generator sequence repeated `n` times and written
//! row-major into an `m × n` grid: row `i` is a concentric layer, column `j`
//! an arm. Cell `(i, j)` therefore holds `S[(n·i + j) mod m]`, which covers
//! both the `m > n` case (a sequence spills across rows) and `m < n` (a row
//! holds more than one sequence) with a single formula.
//!
//! Arm `j` sits at angle `j·2π/n`, measured counterclockwise from the
//! positive x-axis.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde_json::json;

use crate::sequence::{generate_sequence, GeneratorSequence, KolamSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// One write performed while filling the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FillWrite {
    pub row: usize,
    pub col: usize,
    pub value: u32,
}

/// The ordered writes that populate the matrix: the repeated sequence laid
/// out as a flat row-major array.
pub fn fill_writes(seq: &GeneratorSequence, n: u32) -> impl Iterator<Item = FillWrite> + '_ {
    let m = seq.len();
    let cols = n as usize;
    (0..m * cols).map(move |flat| FillWrite {
        row: flat / cols,
        col: flat % cols,
        value: seq.terms()[flat % m],
    })
}

pub fn build_matrix(seq: &GeneratorSequence, n: u32) -> DotMatrix {
    let rows = seq.len();
    let cols = n as usize;
    let mut cells: Vec<Option<u32>> = vec![None; rows * cols];
    for w in fill_writes(seq, n) {
        let slot = &mut cells[w.row * cols + w.col];
        debug_assert!(slot.is_none(), "cell ({}, {}) written twice", w.row, w.col);
        *slot = Some(w.value);
    }
    let entries = cells
        .into_iter()
        .map(|c| c.expect("every cell is written by the fill"))
        .collect();
    DotMatrix {
        rows,
        cols,
        entries,
    }
}

impl DotMatrix {
    /// Builds a matrix from explicit rows. Rows must all have the same length.
    pub fn from_rows(rows: &[Vec<u32>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Self {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Iterates `(row, col, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, &v)| (k / self.cols, k % self.cols, v))
    }

    /// Plain-text dump: one row per line, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// `{"m":…,"n":…,"rows":[[…],…]}`
    pub fn to_json(&self) -> String {
        json!({ "m": self.rows, "n": self.cols, "rows": self.to_rows() }).to_string()
    }
}

/// A dot position: integer layer radius on arm `arm` of `arms`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolarPoint {
    pub radius: u32,
    pub arm: u32,
    pub arms: u32,
}

impl PolarPoint {
    pub fn new(radius: u32, arm: u32, arms: u32) -> Self {
        debug_assert!(arm < arms);
        Self { radius, arm, arms }
    }

    /// Angle in radians, in `[0, 2π)`.
    pub fn theta(&self) -> f64 {
        f64::from(self.arm) * (TAU / f64::from(self.arms))
    }
}

/// The closed stroke: `m·n + 1` points, the last equal to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPath {
    points: Vec<PolarPoint>,
}

pub fn build_closed_path(spec: &KolamSpec) -> ClosedPath {
    let seq = generate_sequence(spec);
    let m = seq.len();
    let n = spec.n();
    let mut points: Vec<PolarPoint> = (0..m * n as usize)
        .map(|i| PolarPoint::new(seq.terms()[i % m], (i % n as usize) as u32, n))
        .collect();
    points.push(points[0]);
    ClosedPath { points }
}

impl ClosedPath {
    /// Wraps an explicit point list. Returns `None` unless it has at least
    /// two points and ends where it starts.
    pub fn from_points(points: Vec<PolarPoint>) -> Option<Self> {
        (points.len() >= 2 && points.first() == points.last()).then_some(Self { points })
    }

    pub fn points(&self) -> &[PolarPoint] {
        &self.points
    }

    /// The points without the closing duplicate.
    pub fn open_points(&self) -> &[PolarPoint] {
        &self.points[..self.points.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same loop traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Self { points }
    }

    pub fn is_closed(&self) -> bool {
        self.points.first() == self.points.last()
    }

    /// `{"m":…,"n":…,"points":[[radius,arm],…]}`
    pub fn to_json(&self) -> String {
        let arms = self.points.first().map_or(0, |p| p.arms);
        let m = self.points.iter().map(|p| p.radius).max().unwrap_or(0);
        let pts: Vec<[u32; 2]> = self.points.iter().map(|p| [p.radius, p.arm]).collect();
        json!({ "m": m, "n": arms, "points": pts }).to_string()
    }
}

/// True iff the path visits exactly the dots of the matrix, counted with
/// multiplicity.
pub fn matrix_to_path_consistency(matrix: &DotMatrix, path: &ClosedPath) -> bool {
    if path.is_empty() {
        return false;
    }
    let mut from_matrix: Vec<(u32, u32)> =
        matrix.cells().map(|(_, col, v)| (v, col as u32)).collect();
    let mut from_path: Vec<(u32, u32)> = path
        .open_points()
        .iter()
        .map(|p| (p.radius, p.arm))
        .collect();
    from_matrix.sort_unstable();
    from_path.sort_unstable();
    from_matrix == from_path
}
