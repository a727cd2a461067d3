//! Named structural checks over a built kolam.

use std::collections::HashSet;
use std::fmt;

use crate::graph::{build_graph, verify_eulerian};
use crate::layout::{
    build_closed_path, build_matrix, fill_writes, matrix_to_path_consistency, ClosedPath, DotMatrix,
};
use crate::sequence::{generate_sequence, KolamSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name
        )
    }
}

/// Builds every artifact for `spec` and checks it.
pub fn verify_spec(spec: &KolamSpec) -> Vec<Check> {
    let seq = generate_sequence(spec);
    let matrix = build_matrix(&seq, spec.n());
    let path = build_closed_path(spec);
    verify_parts(spec, &matrix, &path)
}

/// Checks a matrix and path against `spec`. The path may come from
/// elsewhere (a file, an injected fault).
pub fn verify_parts(spec: &KolamSpec, matrix: &DotMatrix, path: &ClosedPath) -> Vec<Check> {
    let m = spec.m();
    let n = spec.n();
    let dots = spec.dot_count();
    let seq = generate_sequence(spec);
    let mut checks = Vec::new();
    let mut check = |name, passed| checks.push(Check { name, passed });

    let mut terms = seq.terms().to_vec();
    terms.sort_unstable();
    check("sequence-permutation", terms.iter().copied().eq(1..=m));

    let shape_ok = matrix.rows() == m as usize && matrix.cols() == n as usize;
    check(
        "column-permutation",
        shape_ok
            && (0..matrix.cols()).all(|j| {
                let mut col = matrix.column(j);
                col.sort_unstable();
                col.iter().copied().eq(1..=m)
            }),
    );

    let mut written = HashSet::new();
    let single_writes = fill_writes(&seq, n).all(|w| written.insert((w.row, w.col)));
    check("unique-fill", single_writes && written.len() == dots);

    check("path-length", path.len() == dots + 1);
    check("path-closure", path.is_closed());
    let distinct: HashSet<_> = path.open_points().iter().collect();
    check("path-distinct", distinct.len() == path.len() - 1);
    check(
        "matrix-path-consistency",
        matrix_to_path_consistency(matrix, path),
    );

    let graph = build_graph(path);
    let report = verify_eulerian(&graph);
    check("degree-balance", report.degree_balanced);
    check("strong-connectivity", report.connected);
    let circuit_ok = report.circuit.as_ref().is_some_and(|c| {
        let mut used = c.clone();
        used.sort_unstable();
        used.len() == dots && used.iter().copied().eq(0..graph.edges().len())
    });
    check("euler-circuit", circuit_ok);
    let follows_path = report.circuit_vertices(&graph).is_some_and(|walk| {
        walk.iter()
            .map(|&v| graph.vertices()[v])
            .eq(path.points().iter().map(|p| (p.radius, p.arm)))
    });
    check("circuit-follows-path", follows_path);

    let edges: HashSet<_> = graph.dot_edges().collect();
    let rotate = |(r, a): (u32, u32)| (r, (a + 1) % n);
    check(
        "rotational-symmetry",
        graph
            .dot_edges()
            .all(|(a, b)| edges.contains(&(rotate(a), rotate(b)))),
    );
    check("single-stroke", report.is_single_stroke);
    checks
}

/// Fault injection: swaps the radii of the first two points, keeping their
/// arms. For `m > 1` this duplicates two dots and drops two others.
pub fn swap_first_radii(path: &ClosedPath) -> ClosedPath {
    let mut points = path.points().to_vec();
    if points.len() > 2 {
        let (a, b) = (points[0].radius, points[1].radius);
        points[0].radius = b;
        points[1].radius = a;
        let last = points.len() - 1;
        points[last] = points[0];
    }
    ClosedPath::from_points(points).expect("closed by construction")
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
