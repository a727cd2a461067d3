//! Render defaults from a `key = value` file.
//!
//! ```text
//! style = "convex"
//! bulge = 0.25
//! canvas_px = 1024
//! palette = ["#1b4965", "#cae9ff"]
//! ```

use kolam_core::{ConnectionStyle, FillMode, RenderConfig};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RenderSettings {
    pub style: ConnectionStyle,
    pub bulge: Option<f64>,
    pub render: RenderConfig,
}

fn usage(key: &str, expected: &str) -> CliError {
    CliError::Usage(format!("config key '{key}' expects {expected}"))
}

fn number(key: &str, v: &toml::Value) -> CliResult<f64> {
    match v {
        toml::Value::Float(f) => Ok(*f),
        toml::Value::Integer(i) => Ok(*i as f64),
        _ => Err(usage(key, "a number")),
    }
}

fn text<'a>(key: &str, v: &'a toml::Value) -> CliResult<&'a str> {
    v.as_str().ok_or_else(|| usage(key, "a string"))
}

fn boolean(key: &str, v: &toml::Value) -> CliResult<bool> {
    v.as_bool().ok_or_else(|| usage(key, "true or false"))
}

impl RenderSettings {
    /// Overlays the settings found in `source`. Unknown keys are rejected.
    pub fn apply_file(&mut self, source: &str) -> CliResult<()> {
        let table: toml::Table = source
            .parse()
            .map_err(|e| CliError::Usage(format!("config file: {e}")))?;
        for (key, v) in &table {
            let k = key.as_str();
            match k {
                "style" => self.style = text(k, v)?.parse().map_err(CliError::Usage)?,
                "bulge" => self.bulge = Some(number(k, v)?),
                "canvas_px" => {
                    let px = v.as_integer().ok_or_else(|| usage(k, "an integer"))?;
                    self.render.canvas_px =
                        u32::try_from(px).map_err(|_| usage(k, "a positive integer"))?;
                }
                "margin_ratio" => self.render.margin_ratio = number(k, v)?,
                "stroke_width_px" => self.render.stroke_width_px = number(k, v)?,
                "show_dots" => self.render.show_dots = boolean(k, v)?,
                "show_arms" => self.render.show_arms = boolean(k, v)?,
                "fill_mode" => {
                    self.render.fill_mode =
                        text(k, v)?.parse::<FillMode>().map_err(CliError::Usage)?
                }
                "palette" => {
                    let items = v.as_array().ok_or_else(|| usage(k, "an array of colors"))?;
                    self.render.palette = items
                        .iter()
                        .map(|c| text(k, c).map(str::to_owned))
                        .collect::<CliResult<_>>()?;
                }
                other => return Err(CliError::Usage(format!("unknown config key '{other}'"))),
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlays_known_keys() {
        let mut s = RenderSettings::default();
        s.apply_file(
            "style = \"concave\"\nbulge = 0.2\ncanvas_px = 512\nmargin_ratio = 0\nshow_arms = true\nfill_mode = \"evenodd\"\npalette = [\"#000\", \"#fff\"]\n",
        )
        .unwrap();
        assert_eq!(s.style, ConnectionStyle::ConcaveArc);
        assert_eq!(s.bulge, Some(0.2));
        assert_eq!(s.render.canvas_px, 512);
        assert_eq!(s.render.margin_ratio, 0.0);
        assert!(s.render.show_arms);
        assert_eq!(s.render.fill_mode, FillMode::EvenOdd);
        assert_eq!(s.render.palette, ["#000", "#fff"]);
        assert!(s.render.show_dots);
    }

    #[test]
    fn rejects_unknown_and_mistyped_keys() {
        for src in [
            "colour = 1",
            "canvas_px = \"big\"",
            "show_dots = 1",
            "style = \"wavy\"",
            "not toml at all =",
        ] {
            let err = RenderSettings::default().apply_file(src).unwrap_err();
            assert!(matches!(err, CliError::Usage(_)), "{src}");
        }
    }
}
