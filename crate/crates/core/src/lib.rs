//! Generation of radial "dots on arms" kolam patterns.
//!
//! A pattern is fully determined by the number of dots per arm `m` and the
//! number of arms `n`, with `gcd(m, n) = 1`. The pipeline is:
//!
//! 1. [`sequence`]: the generator cycle `a_k = k·n mod m` over `{1..m}`.
//! 2. [`layout`]: the `m × n` dot matrix and the closed polar path.
//! 3. [`graph`]: the directed dot graph and its Eulerian verification.
//! 4. [`geometry`]: planar strokes in one of three connection styles.
//! 5. [`render`]: deterministic SVG output.

pub mod checks;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod layout;
pub mod render;
pub mod sequence;
pub mod table;

pub use error::{KolamError, Result};
pub use geometry::{
    make_strokes, to_cartesian, CartesianPoint, ConnectionStyle, Stroke, StrokeKind,
};
pub use graph::{build_graph, verify_eulerian, Dot, EulerReport, KolamGraph};
pub use layout::{
    build_closed_path, build_matrix, matrix_to_path_consistency, ClosedPath, DotMatrix, PolarPoint,
};
pub use render::{render_dot_grid, render_kolam, render_svg, FillMode, RenderConfig};
pub use sequence::{
    gcd, generate_sequence, make_spec, GeneratorSequence, KolamSpec, DEFAULT_BULGE,
};
