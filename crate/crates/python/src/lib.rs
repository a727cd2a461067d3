//! Python bindings for `kolam-core`.
//!
//! ```python
//! import kolam
//! k = kolam.Kolam(4, 5, style="convex")
//! k.cycle_string()          # '4→1→2→3→4'
//! open("k.svg", "w").write(k.svg(show_arms=True))
//! ```

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kolam_core::checks::verify_spec;
use kolam_core::{
    build_closed_path, build_graph, build_matrix, generate_sequence, make_spec, make_strokes,
    render_dot_grid, render_svg, verify_eulerian, ConnectionStyle, FillMode, KolamError, KolamSpec,
    RenderConfig,
};

fn value_error(e: KolamError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

fn render_config(
    canvas_px: u32,
    margin_ratio: f64,
    show_dots: bool,
    show_arms: bool,
    stroke_width_px: f64,
    fill_mode: &str,
    palette: Option<Vec<String>>,
) -> PyResult<RenderConfig> {
    let defaults = RenderConfig::default();
    Ok(RenderConfig {
        canvas_px,
        margin_ratio,
        show_dots,
        show_arms,
        stroke_width_px,
        fill_mode: parse::<FillMode>(fill_mode)?,
        palette: palette.unwrap_or(defaults.palette),
    })
}

/// A validated kolam configuration: `m` dots on each of `n` arms.
///
/// Raises ValueError when gcd(m, n) != 1, either value is below 1, or the
/// bulge lies outside (0, 1).
#[pyclass(name = "Kolam", frozen)]
struct PyKolam {
    spec: KolamSpec,
}

#[pymethods]
impl PyKolam {
    #[new]
    #[pyo3(signature = (m, n, style="straight", bulge=None))]
    fn new(m: i64, n: i64, style: &str, bulge: Option<f64>) -> PyResult<Self> {
        let style = parse::<ConnectionStyle>(style)?;
        let spec = make_spec(m, n, style, bulge).map_err(value_error)?;
        Ok(Self { spec })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.spec.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.spec.n()
    }

    #[getter]
    fn style(&self) -> &'static str {
        self.spec.style().as_str()
    }

    #[getter]
    fn bulge(&self) -> f64 {
        self.spec.bulge()
    }

    /// The generator cycle, a permutation of 1..m.
    fn sequence(&self) -> Vec<u32> {
        generate_sequence(&self.spec).into()
    }

    fn cycle_string(&self) -> String {
        generate_sequence(&self.spec).cycle_string()
    }

    /// The m×n dot matrix as a list of rows.
    fn matrix(&self) -> Vec<Vec<u32>> {
        build_matrix(&generate_sequence(&self.spec), self.spec.n()).to_rows()
    }

    /// The closed path as (radius, theta) pairs; the last equals the first.
    fn path(&self) -> Vec<(u32, f64)> {
        build_closed_path(&self.spec)
            .points()
            .iter()
            .map(|p| (p.radius, p.theta()))
            .collect()
    }

    /// The closed path as (radius, arm index) pairs.
    fn path_dots(&self) -> Vec<(u32, u32)> {
        build_closed_path(&self.spec)
            .points()
            .iter()
            .map(|p| (p.radius, p.arm))
            .collect()
    }

    /// Stroke geometry: (start, end, arc_mid or None) per stroke.
    #[allow(clippy::type_complexity)]
    fn strokes(&self) -> PyResult<Vec<((f64, f64), (f64, f64), Option<(f64, f64)>)>> {
        let strokes = make_strokes(
            &build_closed_path(&self.spec),
            self.spec.style(),
            self.spec.bulge(),
        )
        .map_err(value_error)?;
        Ok(strokes
            .iter()
            .map(|s| {
                (
                    (s.start.x, s.start.y),
                    (s.end.x, s.end.y),
                    s.arc_mid().map(|p| (p.x, p.y)),
                )
            })
            .collect())
    }

    fn graph_json(&self) -> String {
        build_graph(&build_closed_path(&self.spec)).to_json()
    }

    fn is_single_stroke(&self) -> bool {
        verify_eulerian(&build_graph(&build_closed_path(&self.spec))).is_single_stroke
    }

    /// Named structural checks as (name, passed) pairs.
    fn verify(&self) -> Vec<(String, bool)> {
        verify_spec(&self.spec)
            .into_iter()
            .map(|c| (c.name.to_owned(), c.passed))
            .collect()
    }

    #[pyo3(signature = (
        canvas_px=800, margin_ratio=0.08, show_dots=true, show_arms=false,
        stroke_width_px=2.0, fill_mode="none", palette=None
    ))]
    #[allow(clippy::too_many_arguments)]
    fn svg(
        &self,
        canvas_px: u32,
        margin_ratio: f64,
        show_dots: bool,
        show_arms: bool,
        stroke_width_px: f64,
        fill_mode: &str,
        palette: Option<Vec<String>>,
    ) -> PyResult<String> {
        let cfg = render_config(
            canvas_px,
            margin_ratio,
            show_dots,
            show_arms,
            stroke_width_px,
            fill_mode,
            palette,
        )?;
        let strokes = make_strokes(
            &build_closed_path(&self.spec),
            self.spec.style(),
            self.spec.bulge(),
        )
        .map_err(value_error)?;
        let matrix = build_matrix(&generate_sequence(&self.spec), self.spec.n());
        let bytes = render_svg(&self.spec, &strokes, &matrix, &cfg).map_err(value_error)?;
        Ok(String::from_utf8(bytes).expect("renderer emits UTF-8"))
    }

    #[pyo3(signature = (canvas_px=800, margin_ratio=0.08, show_arms=true))]
    fn dot_grid_svg(&self, canvas_px: u32, margin_ratio: f64, show_arms: bool) -> PyResult<String> {
        let cfg = render_config(canvas_px, margin_ratio, true, show_arms, 2.0, "none", None)?;
        let bytes = render_dot_grid(&self.spec, &cfg).map_err(value_error)?;
        Ok(String::from_utf8(bytes).expect("renderer emits UTF-8"))
    }

    fn __repr__(&self) -> String {
        format!(
            "Kolam(m={}, n={}, style='{}', bulge={})",
            self.spec.m(),
            self.spec.n(),
            self.spec.style(),
            self.spec.bulge()
        )
    }
}

/// Generator cycle for (m, n) without building a Kolam.
#[pyfunction]
fn generate(m: i64, n: i64) -> PyResult<Vec<u32>> {
    let spec = KolamSpec::new(m, n).map_err(value_error)?;
    Ok(generate_sequence(&spec).into())
}

/// The reference table of cycles, tab-separated, one row per line.
#[pyfunction]
fn table() -> String {
    kolam_core::table::render_table()
}

#[pymodule]
fn kolam(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKolam>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
