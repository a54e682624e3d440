//! Monotone marginal transformations estimated from Winsorized ECDFs.
//!
//! Each fitted feature map is stored as a right-continuous step function:
//! the sorted distinct training values (knots), the mapped value at each
//! knot, and the value taken below the first knot. Queries are answered by
//! binary search, and queries outside the training range get the boundary
//! value. Because only ranks enter the fit, applying a strictly increasing
//! distortion to both training and query data leaves the output unchanged
//! bit for bit.

mod ecdf;
mod fit;

use std::path::Path;

use ndarray::{Array2, ArrayView2, Zip};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simulate::Distortion;

pub use ecdf::EcdfTable;
pub use fit::{fit_legacy, fit_multiclass_pooled, fit_naive, fit_pooled};

const FORMAT_TAG: &str = "ssda-transform";
const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Naive,
    Pooled,
    Legacy,
    Oracle,
    Identity,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Naive => "naive",
            Variant::Pooled => "pooled",
            Variant::Legacy => "legacy",
            Variant::Oracle => "oracle",
            Variant::Identity => "identity",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Variant::Naive),
            "pooled" => Ok(Variant::Pooled),
            "legacy" => Ok(Variant::Legacy),
            "oracle" => Ok(Variant::Oracle),
            "identity" => Ok(Variant::Identity),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Right-continuous nondecreasing step function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepMap {
    knots: Vec<f64>,
    values: Vec<f64>,
    below: f64,
}

impl StepMap {
    /// Tabulates `f` at the distinct values of `points`; `f(-inf)` gives the
    /// value below the first knot.
    pub(crate) fn tabulate(points: impl IntoIterator<Item = f64>, f: impl Fn(f64) -> f64) -> Self {
        let mut knots: Vec<f64> = points.into_iter().collect();
        knots.sort_by(f64::total_cmp);
        knots.dedup();
        let values = knots.iter().map(|&k| f(k)).collect();
        StepMap {
            knots,
            values,
            below: f(f64::NEG_INFINITY),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match self.knots.partition_point(|&k| k <= x) {
            0 => self.below,
            i => self.values[i - 1],
        }
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Smallest and largest value the map can emit.
    pub fn range(&self) -> (f64, f64) {
        let hi = self.values.last().copied().unwrap_or(self.below);
        (self.below, hi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FeatureMap {
    Identity,
    Step(StepMap),
    /// Exact inverse of a known distortion.
    Inverse { distortion: Distortion },
}

impl FeatureMap {
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FeatureMap::Identity => x,
            FeatureMap::Step(s) => s.eval(x),
            FeatureMap::Inverse { distortion } => distortion.inverse(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformModel {
    variant: Variant,
    features: Vec<FeatureMap>,
    degenerate: Vec<bool>,
    /// Class labels in coding order: "+" (or the multiclass reference) first.
    classes: Vec<String>,
    class_priors: Vec<f64>,
    mu_minus_hat: Option<Vec<f64>>,
    /// Multiclass pooled fits: estimated shift per class (coding order) per feature.
    class_shift_hat: Option<Vec<Vec<f64>>>,
}

#[derive(Serialize, Deserialize)]
struct TransformFile {
    format: String,
    version: u32,
    model: TransformModel,
}

impl TransformModel {
    pub fn identity(p: usize) -> Self {
        TransformModel {
            variant: Variant::Identity,
            features: vec![FeatureMap::Identity; p],
            degenerate: vec![false; p],
            classes: Vec::new(),
            class_priors: Vec::new(),
            mu_minus_hat: None,
            class_shift_hat: None,
        }
    }

    /// Applies the exact inverse of each feature's distortion.
    pub fn oracle(distortions: &[Distortion]) -> Self {
        let p = distortions.len();
        TransformModel {
            variant: Variant::Oracle,
            features: distortions
                .iter()
                .map(|&distortion| FeatureMap::Inverse { distortion })
                .collect(),
            degenerate: vec![false; p],
            classes: Vec::new(),
            class_priors: Vec::new(),
            mu_minus_hat: None,
            class_shift_hat: None,
        }
    }

    pub(crate) fn from_parts(
        variant: Variant,
        features: Vec<StepMap>,
        degenerate: Vec<bool>,
        classes: Vec<String>,
        class_priors: Vec<f64>,
    ) -> Self {
        TransformModel {
            variant,
            features: features.into_iter().map(FeatureMap::Step).collect(),
            degenerate,
            classes,
            class_priors,
            mu_minus_hat: None,
            class_shift_hat: None,
        }
    }

    pub(crate) fn with_mu_minus(mut self, mu: Vec<f64>) -> Self {
        self.mu_minus_hat = Some(mu);
        self
    }

    pub(crate) fn with_class_shifts(mut self, shifts: Vec<Vec<f64>>) -> Self {
        self.class_shift_hat = Some(shifts);
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn p(&self) -> usize {
        self.features.len()
    }

    pub fn feature(&self, j: usize) -> &FeatureMap {
        &self.features[j]
    }

    pub fn is_degenerate(&self, j: usize) -> bool {
        self.degenerate[j]
    }

    pub fn degenerate_features(&self) -> Vec<usize> {
        (0..self.p()).filter(|&j| self.degenerate[j]).collect()
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn class_priors(&self) -> &[f64] {
        &self.class_priors
    }

    pub fn mu_minus_hat(&self) -> Option<&[f64]> {
        self.mu_minus_hat.as_deref()
    }

    pub fn class_shift_hat(&self) -> Option<&[Vec<f64>]> {
        self.class_shift_hat.as_deref()
    }

    #[inline]
    pub fn apply_value(&self, j: usize, x: f64) -> f64 {
        self.features[j].eval(x)
    }

    /// Transforms every column of `x` with its fitted map.
    pub fn apply(&self, x: ArrayView2<f64>) -> Result<Array2<f64>> {
        if x.ncols() != self.p() {
            return Err(Error::DimensionMismatch {
                expected: self.p(),
                found: x.ncols(),
            });
        }
        if x.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidArgument("NaN in input to transform".into()));
        }
        if self.variant == Variant::Identity {
            return Ok(x.to_owned());
        }
        let mut out = Array2::zeros(x.raw_dim());
        for (j, map) in self.features.iter().enumerate() {
            Zip::from(out.column_mut(j))
                .and(x.column(j))
                .for_each(|o, &v| *o = map.eval(v));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<String> {
        let file = TransformFile {
            format: FORMAT_TAG.into(),
            version: FORMAT_VERSION,
            model: self.clone(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TransformFile = serde_json::from_str(text)?;
        if file.format != FORMAT_TAG {
            return Err(Error::Format(format!(
                "expected format {FORMAT_TAG:?}, found {:?}",
                file.format
            )));
        }
        if file.version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported transform format version {}",
                file.version
            )));
        }
        let m = file.model;
        if m.degenerate.len() != m.features.len() {
            return Err(Error::Format("degenerate flags do not match feature count".into()));
        }
        Ok(m)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        TransformModel::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Free-function form of [`TransformModel::apply`].
pub fn apply_transform(model: &TransformModel, x: ArrayView2<f64>) -> Result<Array2<f64>> {
    model.apply(x)
}
