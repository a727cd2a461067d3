//! Batch rendering of preset families.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::json;
use sha2::{Digest, Sha256};

use kolam_core::{make_spec, render_kolam, ConnectionStyle};

use crate::config::RenderSettings;
use crate::{write_file, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Even m in {2, 4, …, 12} with coprime n up to 13.
    PaperEven,
    /// m = 20 with n in {7, 13, 19, 23, 27, 91}.
    PaperM20,
}

const EVEN_FAMILY: &[(u32, &[u32])] = &[
    (2, &[3, 5, 7, 9, 11, 13]),
    (4, &[3, 5, 7, 9, 11, 13]),
    (6, &[5, 7, 11, 13]),
    (8, &[3, 5, 7, 9, 11, 13]),
    (10, &[3, 7, 9, 11, 13]),
    (12, &[5, 7, 11, 13]),
];

const M20_ARMS: &[u32] = &[7, 13, 19, 23, 27, 91];

impl Preset {
    /// `(m, n)` pairs in output order.
    pub fn pairs(self) -> Vec<(u32, u32)> {
        match self {
            Self::PaperEven => EVEN_FAMILY
                .iter()
                .flat_map(|&(m, arms)| arms.iter().map(move |&n| (m, n)))
                .collect(),
            Self::PaperM20 => M20_ARMS.iter().map(|&n| (20, n)).collect(),
        }
    }
}

pub fn file_name(m: u32, n: u32, style: ConnectionStyle) -> String {
    format!("kolam_m{m}_n{n}_{style}.svg")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub files: Vec<ManifestEntry>,
}

impl Manifest {
    /// `{"files":[{"name":…,"sha256":…},…]}`, pretty-printed.
    pub fn to_json(&self) -> String {
        let files: Vec<_> = self
            .files
            .iter()
            .map(|f| json!({ "name": f.name, "sha256": f.sha256 }))
            .collect();
        let mut s =
            serde_json::to_string_pretty(&json!({ "files": files })).expect("manifest serializes");
        s.push('\n');
        s
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8)
}

/// Renders every preset member into `out_dir` on a bounded worker pool,
/// then writes `manifest.json`.
pub fn write_gallery(
    out_dir: &Path,
    preset: Preset,
    settings: &RenderSettings,
    jobs: Option<usize>,
) -> CliResult<Manifest> {
    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or_else(default_jobs).max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;

    let files = pool.install(|| {
        preset
            .pairs()
            .into_par_iter()
            .map(|(m, n)| {
                let spec = make_spec(m.into(), n.into(), settings.style, settings.bulge)?;
                let svg = render_kolam(&spec, &settings.render)?;
                let name = file_name(m, n, settings.style);
                write_file(&out_dir.join(&name), &svg)?;
                Ok(ManifestEntry {
                    name,
                    sha256: hex::encode(Sha256::digest(&svg)),
                })
            })
            .collect::<CliResult<Vec<_>>>()
    })?;

    let manifest = Manifest { files };
    write_file(
        &out_dir.join("manifest.json"),
        manifest.to_json().as_bytes(),
    )?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_sizes() {
        assert_eq!(Preset::PaperEven.pairs().len(), 31);
        assert_eq!(Preset::PaperM20.pairs().len(), 6);
        assert!(Preset::PaperEven
            .pairs()
            .iter()
            .all(|&(m, n)| kolam_core::gcd(m.into(), n.into()) == 1));
    }

    #[test]
    fn names() {
        assert_eq!(
            file_name(20, 91, ConnectionStyle::ConvexArc),
            "kolam_m20_n91_convex.svg"
        );
    }

    #[test]
    fn manifest_json_shape() {
        let m = Manifest {
            files: vec![ManifestEntry {
                name: "a.svg".into(),
                sha256: "00".into(),
            }],
        };
        let v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
        assert_eq!(v["files"][0]["name"], "a.svg");
        assert_eq!(v["files"][0]["sha256"], "00");
    }
}
