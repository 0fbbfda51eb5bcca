//! JSON input files: measures, point sequences and polynomials.
//!
//! Points are arrays of `2n` reals, `[re z₁, im z₁, …, re zₙ, im zₙ]`.
//! Numbers are written in the shortest form that parses back to the same
//! double, so parse → serialize → parse is the identity.

use std::fs;
use std::path::Path;

use carleson_core::calculus::MultiPoly;
use carleson_core::interpolation::PointSequence;
use carleson_core::{Complex64, DiscreteMeasure, Space, SpaceKind, SpacePoint};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpaceSpec {
    Disc,
    Ball { dim: usize },
}

impl SpaceSpec {
    pub fn to_space(self) -> Result<Space> {
        match self {
            SpaceSpec::Disc => Ok(Space::disc()),
            SpaceSpec::Ball { dim } => Ok(Space::ball(dim)?),
        }
    }

    pub fn from_space(s: &Space) -> Self {
        match s.kind() {
            SpaceKind::Disc => SpaceSpec::Disc,
            SpaceKind::Ball => SpaceSpec::Ball { dim: s.dim() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub point: Vec<f64>,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureFile {
    pub space: SpaceSpec,
    pub atoms: Vec<AtomSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub point: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub space: SpaceSpec,
    pub atoms: Vec<PointSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub alpha: Vec<u32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub dim: usize,
    pub terms: Vec<TermSpec>,
}

fn parse_point(space: &Space, values: &[f64], idx: usize) -> Result<SpacePoint> {
    let at = |e: carleson_core::Error| CliError::Input(format!("atom {idx}: {e}"));
    if values.len() != 2 * space.dim() {
        return Err(CliError::Input(format!(
            "atom {idx}: point has {} reals, {space} needs {}",
            values.len(),
            2 * space.dim()
        )));
    }
    let p = SpacePoint::from_interleaved(values).map_err(at)?;
    space.check(&p).map_err(at)?;
    Ok(p)
}

impl MeasureFile {
    pub fn to_measure(&self) -> Result<DiscreteMeasure> {
        let space = self.space.to_space()?;
        if self.atoms.is_empty() {
            return Err(CliError::Input("measure has no atoms".into()));
        }
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, a) in self.atoms.iter().enumerate() {
            if !(a.weight > 0.0 && a.weight.is_finite()) {
                return Err(CliError::Input(format!("atom {i}: weight must be positive and finite, got {}", a.weight)));
            }
            atoms.push((parse_point(&space, &a.point, i)?, a.weight));
        }
        Ok(DiscreteMeasure::new(space, atoms)?)
    }

    pub fn from_measure(mu: &DiscreteMeasure) -> Self {
        MeasureFile {
            space: SpaceSpec::from_space(mu.space()),
            atoms: mu
                .atoms()
                .iter()
                .map(|a| AtomSpec {
                    point: a.point.to_interleaved(),
                    weight: a.weight,
                })
                .collect(),
        }
    }
}

impl SequenceFile {
    pub fn to_sequence(&self) -> Result<PointSequence> {
        let space = self.space.to_space()?;
        if !space.is_disc() {
            return Err(CliError::Input(format!("interpolating sequences live in the disc, got {space}")));
        }
        let pts = self
            .atoms
            .iter()
            .enumerate()
            .map(|(i, p)| parse_point(&space, &p.point, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSequence::new(pts)?)
    }

    pub fn from_sequence(seq: &PointSequence) -> Self {
        SequenceFile {
            space: SpaceSpec::Disc,
            atoms: seq
                .points()
                .iter()
                .map(|p| PointSpec {
                    point: p.to_interleaved(),
                })
                .collect(),
        }
    }
}

impl PolyFile {
    pub fn to_poly(&self) -> Result<MultiPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            if !(t.re.is_finite() && t.im.is_finite()) {
                return Err(CliError::Input(format!("term {i}: coefficient must be finite")));
            }
            terms.push((t.alpha.clone(), Complex64::new(t.re, t.im)));
        }
        Ok(MultiPoly::new(self.dim, terms)?)
    }

    pub fn from_poly(f: &MultiPoly) -> Self {
        PolyFile {
            dim: f.dim(),
            terms: f
                .terms()
                .iter()
                .map(|(alpha, c)| TermSpec {
                    alpha: alpha.clone(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }
}

/// Parses JSON text; syntax errors carry their line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!("{origin}:{}:{}: {e}", e.line(), e.column()))
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text, &path.display().to_string())
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    // serialization of these plain structs cannot fail
    serde_json::to_string_pretty(value).expect("JSON serialization")
}
