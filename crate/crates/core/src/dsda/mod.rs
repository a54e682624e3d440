//! Direct sparse discriminant analysis on transformed features.
//!
//! The direction comes from lasso-penalized least squares of the ±1 label on
//! the features ([`lasso`]); the intercept is the plug-in
//!
//! `β̂₀ = −(μ̂₊ + μ̂₋)ᵀβ̂/2 + log(π̂₊/π̂₋) · β̂ᵀΣ̂β̂ / ((μ̂₊ − μ̂₋)ᵀβ̂)`
//!
//! with class means, pooled within-class covariance, and class proportions
//! computed on the active set; and a point is classified `+` when
//! `β̂₀ + ĥ(x)ᵀβ̂ ≥ 0`.

pub mod cv;
pub mod lasso;

use std::path::Path;

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::data::{sign_counts, BinaryCoding, Dataset};
use crate::error::{Error, Result};
use crate::transforms::{self, TransformModel, Variant};

pub use cv::{cv_tune, cv_tune_grid, stratified_folds, CvResult};
pub use lasso::{kkt_violation, lambda_grid, lambda_max, lasso_path, lasso_path_with, LassoOptions, LassoPath};

const FORMAT_TAG: &str = "ssda-fit";
const FORMAT_VERSION: u32 = 1;

pub(crate) fn support(beta: ArrayView1<f64>) -> Vec<usize> {
    crate::simulate::support_of(beta)
}

/// Class moments of the transformed features restricted to an index set.
#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    pub mu_plus: Vec<f64>,
    pub mu_minus: Vec<f64>,
    /// Pooled within-class covariance, denominator `n − 2`.
    pub sigma: Array2<f64>,
    pub pi_plus: f64,
    pub pi_minus: f64,
}

pub fn class_moments(h: ArrayView2<f64>, y: ArrayView1<f64>, idx: &[usize]) -> Result<Moments> {
    let n = h.nrows();
    if y.len() != n {
        return Err(Error::InvalidArgument(format!("{} labels for {n} rows", y.len())));
    }
    let (n_pos, n_neg) = sign_counts(y);
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::InsufficientClassData("both classes are required".into()));
    }
    let k = idx.len();
    let mut mu_plus = vec![0.0; k];
    let mut mu_minus = vec![0.0; k];
    for i in 0..n {
        let target = if y[i] > 0.0 { &mut mu_plus } else { &mut mu_minus };
        for (a, &j) in idx.iter().enumerate() {
            target[a] += h[[i, j]];
        }
    }
    mu_plus.iter_mut().for_each(|m| *m /= n_pos as f64);
    mu_minus.iter_mut().for_each(|m| *m /= n_neg as f64);

    let mut sigma = Array2::zeros((k, k));
    let mut dev = vec![0.0; k];
    for i in 0..n {
        let mu = if y[i] > 0.0 { &mu_plus } else { &mu_minus };
        for (a, &j) in idx.iter().enumerate() {
            dev[a] = h[[i, j]] - mu[a];
        }
        for a in 0..k {
            for b in 0..=a {
                sigma[[a, b]] += dev[a] * dev[b];
            }
        }
    }
    let denom = if n > 2 { (n - 2) as f64 } else { n as f64 };
    for a in 0..k {
        for b in 0..=a {
            let v = sigma[[a, b]] / denom;
            sigma[[a, b]] = v;
            sigma[[b, a]] = v;
        }
    }
    Ok(Moments {
        mu_plus,
        mu_minus,
        sigma,
        pi_plus: n_pos as f64 / n as f64,
        pi_minus: n_neg as f64 / n as f64,
    })
}

/// Plug-in intercept from moments on the active set.
pub fn intercept_from_moments(beta_active: &[f64], m: &Moments) -> Result<f64> {
    let k = beta_active.len();
    let proj: f64 = (0..k).map(|a| (m.mu_plus[a] - m.mu_minus[a]) * beta_active[a]).sum();
    if proj == 0.0 {
        return Err(Error::DegenerateProjection);
    }
    let centre: f64 = (0..k).map(|a| (m.mu_plus[a] + m.mu_minus[a]) * beta_active[a]).sum();
    let mut quad = 0.0;
    for a in 0..k {
        for b in 0..k {
            quad += beta_active[a] * m.sigma[[a, b]] * beta_active[b];
        }
    }
    Ok(-centre / 2.0 + (m.pi_plus / m.pi_minus).ln() * quad / proj)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterceptFit {
    pub beta0: f64,
    pub active_set: Vec<usize>,
    pub moments: Moments,
    /// β̂ = 0: the intercept is the prior log-odds.
    pub prior_fallback: bool,
}

/// Intercept for `beta` from transformed data `h` and ±1 labels `y`.
pub fn intercept(beta: ArrayView1<f64>, h: ArrayView2<f64>, y: ArrayView1<f64>) -> Result<InterceptFit> {
    if beta.len() != h.ncols() {
        return Err(Error::DimensionMismatch { expected: h.ncols(), found: beta.len() });
    }
    let active_set = support(beta);
    let moments = class_moments(h, y, &active_set)?;
    if active_set.is_empty() {
        log::debug!("empty active set; classifying by the class prior");
        return Ok(InterceptFit {
            beta0: (moments.pi_plus / moments.pi_minus).ln(),
            active_set,
            moments,
            prior_fallback: true,
        });
    }
    let beta_a: Vec<f64> = active_set.iter().map(|&j| beta[j]).collect();
    let beta0 = intercept_from_moments(&beta_a, &moments)?;
    Ok(InterceptFit {
        beta0,
        active_set,
        moments,
        prior_fallback: false,
    })
}

/// How λ is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tuning {
    Cv { folds: usize, grid_size: usize, seed: u64 },
    Fixed { lambda: f64 },
}

impl Default for Tuning {
    fn default() -> Self {
        Tuning::Cv { folds: 5, grid_size: 50, seed: 0 }
    }
}

/// Transform estimator selection for [`fit_ssda`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SsdaConfig {
    pub variant: Variant,
    /// Winsorization band for the legacy estimator.
    pub legacy_bounds: (f64, f64),
    pub tuning: Tuning,
}

impl Default for SsdaConfig {
    fn default() -> Self {
        SsdaConfig {
            variant: Variant::Naive,
            legacy_bounds: (0.01, 0.99),
            tuning: Tuning::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DsdaFit {
    pub beta: Array1<f64>,
    pub beta0: f64,
    pub active_set: Vec<usize>,
    pub lambda: f64,
    pub lambda_path: Vec<f64>,
    pub cv_errors: Option<Vec<f64>>,
    /// (μ̂₊, μ̂₋) on the active set, transformed scale.
    pub class_means_hat: (Vec<f64>, Vec<f64>),
    pub sigma_hat_aa: Array2<f64>,
    pub priors_hat: (f64, f64),
    /// Labels coded `+` and `−`.
    pub classes: (String, String),
    pub variant: Variant,
    pub tuning: Tuning,
    pub dropped: Vec<usize>,
    pub prior_fallback: bool,
}

/// Scores and labels from [`predict`].
#[derive(Debug, Clone, PartialEq)]
pub struct Predictions {
    pub scores: Vec<f64>,
    /// +1 or −1 in the fit's coding.
    pub signs: Vec<f64>,
    pub labels: Vec<String>,
}

impl DsdaFit {
    pub fn p(&self) -> usize {
        self.beta.len()
    }

    /// `β̂₀ + hᵀβ̂` for each row of already-transformed data.
    pub fn scores(&self, h: ArrayView2<f64>) -> Result<Vec<f64>> {
        if h.ncols() != self.p() {
            return Err(Error::DimensionMismatch { expected: self.p(), found: h.ncols() });
        }
        Ok(h.rows()
            .into_iter()
            .map(|row| {
                self.beta0
                    + self
                        .active_set
                        .iter()
                        .map(|&j| row[j] * self.beta[j])
                        .sum::<f64>()
            })
            .collect())
    }

    pub fn classify_transformed(&self, h: ArrayView2<f64>) -> Result<Predictions> {
        let scores = self.scores(h)?;
        let signs: Vec<f64> = scores.iter().map(|&s| if s >= 0.0 { 1.0 } else { -1.0 }).collect();
        let labels = signs
            .iter()
            .map(|&s| if s > 0.0 { self.classes.0.clone() } else { self.classes.1.clone() })
            .collect();
        Ok(Predictions { scores, signs, labels })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&FitFile::from(self))?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FitFile = serde_json::from_str(text)?;
        file.into_fit()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        DsdaFit::from_json(&std::fs::read_to_string(path)?)
    }
}

/// On-disk form: coefficients as sparse (index, value) pairs.
#[derive(Serialize, Deserialize)]
struct FitFile {
    format: String,
    version: u32,
    variant: Variant,
    p: usize,
    classes: (String, String),
    beta: Vec<(usize, f64)>,
    beta0: f64,
    lambda: f64,
    lambda_path: Vec<f64>,
    cv_errors: Option<Vec<f64>>,
    class_means_hat: (Vec<f64>, Vec<f64>),
    sigma_hat_aa: Vec<Vec<f64>>,
    priors_hat: (f64, f64),
    tuning: Tuning,
    dropped: Vec<usize>,
    prior_fallback: bool,
}

impl From<&DsdaFit> for FitFile {
    fn from(f: &DsdaFit) -> Self {
        FitFile {
            format: FORMAT_TAG.into(),
            version: FORMAT_VERSION,
            variant: f.variant,
            p: f.p(),
            classes: f.classes.clone(),
            beta: f.active_set.iter().map(|&j| (j, f.beta[j])).collect(),
            beta0: f.beta0,
            lambda: f.lambda,
            lambda_path: f.lambda_path.clone(),
            cv_errors: f.cv_errors.clone(),
            class_means_hat: f.class_means_hat.clone(),
            sigma_hat_aa: f.sigma_hat_aa.rows().into_iter().map(|r| r.to_vec()).collect(),
            priors_hat: f.priors_hat,
            tuning: f.tuning,
            dropped: f.dropped.clone(),
            prior_fallback: f.prior_fallback,
        }
    }
}

impl FitFile {
    fn into_fit(self) -> Result<DsdaFit> {
        if self.format != FORMAT_TAG {
            return Err(Error::Format(format!(
                "expected format {FORMAT_TAG:?}, found {:?}",
                self.format
            )));
        }
        if self.version != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported fit format version {}", self.version)));
        }
        let mut beta = Array1::zeros(self.p);
        let mut active_set = Vec::with_capacity(self.beta.len());
        for &(j, v) in &self.beta {
            if j >= self.p || v == 0.0 || active_set.last().is_some_and(|&prev| prev >= j) {
                return Err(Error::Format(format!("bad coefficient entry ({j}, {v})")));
            }
            beta[j] = v;
            active_set.push(j);
        }
        let k = active_set.len();
        if self.sigma_hat_aa.len() != k || self.sigma_hat_aa.iter().any(|r| r.len() != k) {
            return Err(Error::Format("covariance block does not match the active set".into()));
        }
        let sigma_hat_aa = Array2::from_shape_fn((k, k), |(a, b)| self.sigma_hat_aa[a][b]);
        Ok(DsdaFit {
            beta,
            beta0: self.beta0,
            active_set,
            lambda: self.lambda,
            lambda_path: self.lambda_path,
            cv_errors: self.cv_errors,
            class_means_hat: self.class_means_hat,
            sigma_hat_aa,
            priors_hat: self.priors_hat,
            classes: self.classes,
            variant: self.variant,
            tuning: self.tuning,
            dropped: self.dropped,
            prior_fallback: self.prior_fallback,
        })
    }
}

/// Fits DSDA on already-transformed features `h` with ±1 labels `y`.
///
/// `classes` names the `+` and `−` labels for reporting.
pub fn fit_dsda(
    h: ArrayView2<f64>,
    y: ArrayView1<f64>,
    tuning: Tuning,
    variant: Variant,
    classes: (String, String),
) -> Result<DsdaFit> {
    let std = lasso::Standardized::new(h, y)?;
    let opts = LassoOptions::default();
    let lmax = std.lambda_max();
    let (lambda, lambda_path, cv_errors, beta, dropped) = match tuning {
        Tuning::Cv { folds, grid_size, seed } => {
            if grid_size == 0 {
                return Err(Error::InvalidArgument("grid size must be positive".into()));
            }
            if lmax <= 0.0 {
                return Err(Error::InvalidArgument(
                    "lambda_max is zero; no feature is correlated with the labels".into(),
                ));
            }
            let grid = lambda_grid(lmax, grid_size, cv::DEFAULT_MIN_RATIO);
            let cv = cv_tune_grid(h, y, &grid, folds, seed)?;
            let path = lasso::path_on(&std, &grid[..=cv.index], &opts)?;
            let beta = path.betas.last().cloned().expect("nonempty path");
            (cv.lambda, grid, Some(cv.cv_errors), beta, path.dropped)
        }
        Tuning::Fixed { lambda } => {
            let path = lasso::path_on(&std, &[lambda], &opts)?;
            (lambda, vec![lambda], None, path.betas[0].clone(), path.dropped)
        }
    };
    let icpt = intercept(beta.view(), h, y)?;
    if icpt.prior_fallback {
        log::warn!("fitted direction is zero; classifying every point by the class prior");
    }
    Ok(DsdaFit {
        beta0: icpt.beta0,
        active_set: icpt.active_set,
        lambda,
        lambda_path,
        cv_errors,
        class_means_hat: (icpt.moments.mu_plus, icpt.moments.mu_minus),
        sigma_hat_aa: icpt.moments.sigma,
        priors_hat: (icpt.moments.pi_plus, icpt.moments.pi_minus),
        classes,
        variant,
        tuning,
        dropped,
        prior_fallback: icpt.prior_fallback,
        beta,
    })
}

/// Estimates the transform named by `config.variant`.
pub fn fit_transform(data: &Dataset, config: &SsdaConfig) -> Result<TransformModel> {
    match config.variant {
        Variant::Naive => transforms::fit_naive(data),
        Variant::Pooled => transforms::fit_pooled(data),
        Variant::Legacy => transforms::fit_legacy(data, config.legacy_bounds.0, config.legacy_bounds.1),
        Variant::Identity => {
            BinaryCoding::from_dataset(data)?;
            Ok(TransformModel::identity(data.p()))
        }
        Variant::Oracle => Err(Error::InvalidArgument(
            "the oracle transform needs the true distortions; use fit_with_transform".into(),
        )),
    }
}

/// DSDA on `data` pushed through a given transform.
pub fn fit_with_transform(data: &Dataset, transform: &TransformModel, tuning: Tuning) -> Result<DsdaFit> {
    let coding = BinaryCoding::from_dataset(data)?;
    let h = transform.apply(data.x.view())?;
    let y = coding.signs(data);
    let classes = (
        data.classes[coding.positive].clone(),
        data.classes[coding.negative].clone(),
    );
    fit_dsda(h.view(), y.view(), tuning, transform.variant(), classes)
}

/// Transform estimation followed by DSDA on the transformed data.
pub fn fit_ssda(data: &Dataset, config: &SsdaConfig) -> Result<(TransformModel, DsdaFit)> {
    let transform = fit_transform(data, config)?;
    let fit = fit_with_transform(data, &transform, config.tuning)?;
    Ok((transform, fit))
}

/// Classifies raw feature rows: transform, then the linear rule.
pub fn predict(fit: &DsdaFit, transform: &TransformModel, x: ArrayView2<f64>) -> Result<Predictions> {
    if transform.p() != fit.p() {
        return Err(Error::DimensionMismatch { expected: fit.p(), found: transform.p() });
    }
    let h = transform.apply(x)?;
    fit.classify_transformed(h.view())
}
