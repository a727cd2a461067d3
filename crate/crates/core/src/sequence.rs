//! Modular generator sequences.
//!
//! For `m` dots per arm and `n` arms the generator is
//! `a_0 = m`, `a_k = (k·n) mod m` for `k = 1..m-1`, with a zero residue
//! written as `m`. When `gcd(m, n) = 1`, `n` generates the cyclic group
//! `Z_m` and the sequence is a permutation of `{1..m}`.

use std::fmt;

use crate::error::{KolamError, Result};
use crate::geometry::ConnectionStyle;

/// Arc sagitta ratio used when none is given.
pub const DEFAULT_BULGE: f64 = 0.3;

/// Largest accepted dot count `m·n`.
pub const MAX_DOTS: i64 = i32::MAX as i64;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A validated `(m, n)` pair together with its stroke style.
///
/// The only way to obtain one is through [`make_spec`] (or
/// [`KolamSpec::new`]), so `gcd(m, n) = 1` always holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KolamSpec {
    m: u32,
    n: u32,
    style: ConnectionStyle,
    bulge: f64,
}

/// Validates `(m, n)` and the style parameters.
///
/// `bulge` defaults to [`DEFAULT_BULGE`] when `None`.
pub fn make_spec(m: i64, n: i64, style: ConnectionStyle, bulge: Option<f64>) -> Result<KolamSpec> {
    if m < 1 || n < 1 {
        return Err(KolamError::ZeroOrNegative { m, n });
    }
    let product = i128::from(m) * i128::from(n);
    if product > i128::from(MAX_DOTS) {
        return Err(KolamError::TooLarge {
            product,
            max: MAX_DOTS,
        });
    }
    let g = gcd(m as u64, n as u64);
    if g != 1 {
        return Err(KolamError::NotCoprime {
            m,
            n,
            gcd: g as i64,
        });
    }
    let bulge = bulge.unwrap_or(DEFAULT_BULGE);
    if !(bulge > 0.0 && bulge < 1.0) {
        return Err(KolamError::BulgeOutOfRange(bulge));
    }
    Ok(KolamSpec {
        m: m as u32,
        n: n as u32,
        style,
        bulge,
    })
}

impl KolamSpec {
    /// Straight-line spec with the default bulge.
    pub fn new(m: i64, n: i64) -> Result<Self> {
        make_spec(m, n, ConnectionStyle::Straight, None)
    }

    pub fn with_style(self, style: ConnectionStyle) -> Self {
        Self { style, ..self }
    }

    pub fn with_bulge(self, bulge: f64) -> Result<Self> {
        make_spec(self.m.into(), self.n.into(), self.style, Some(bulge))
    }

    /// Dots per arm.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of arms.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn style(&self) -> ConnectionStyle {
        self.style
    }

    pub fn bulge(&self) -> f64 {
        self.bulge
    }

    /// Total number of dots, `m·n`.
    pub fn dot_count(&self) -> usize {
        self.m as usize * self.n as usize
    }
}

/// The `m`-term generator cycle. Terms are radii in `{1..m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSequence {
    terms: Vec<u32>,
}

impl GeneratorSequence {
    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn modulus(&self) -> u32 {
        self.terms.len() as u32
    }

    /// Position of `value` within the cycle.
    pub fn index_of(&self, value: u32) -> Option<usize> {
        self.terms.iter().position(|&t| t == value)
    }

    /// Renders the cycle with the first term repeated, e.g. `4→3→2→1→4`.
    pub fn cycle_string(&self) -> String {
        let mut out = String::new();
        for t in self.terms.iter().chain(self.terms.first()) {
            if !out.is_empty() {
                out.push('→');
            }
            out.push_str(&t.to_string());
        }
        out
    }
}

impl fmt::Display for GeneratorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl From<GeneratorSequence> for Vec<u32> {
    fn from(seq: GeneratorSequence) -> Self {
        seq.terms
    }
}

pub fn generate_sequence(spec: &KolamSpec) -> GeneratorSequence {
    let m = u64::from(spec.m);
    let n = u64::from(spec.n);
    let terms = (0..m)
        .map(|k| match (k * n) % m {
            0 => spec.m,
            r => r as u32,
        })
        .collect();
    GeneratorSequence { terms }
}

/// Formats an arbitrary list of terms as a closed cycle.
pub fn sequence_cycle_string(terms: &[u32]) -> String {
    GeneratorSequence {
        terms: terms.to_vec(),
    }
    .cycle_string()
}
