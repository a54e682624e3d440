//! Benchmark models: structured Gaussian covariances, sparse Bayes
//! directions, per-feature monotone distortions, and Bayes-rule oracles.
//!
//! Data for replication `r` come from a ChaCha8 stream seeded by a value
//! derived from (master seed, model, replication, purpose). Series a and b
//! share the latent Gaussian draw, so a b-series sample is exactly the
//! a-series sample pushed through the distortions.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use ndarray::{Array1, Array2, ArrayView1};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::normal::{inv_norm_cdf, norm_cdf};
use crate::transforms::TransformModel;

/// Strictly increasing marginal distortion `x = g(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distortion {
    Identity,
    /// v³
    Cube,
    /// exp(v)
    Exp,
    /// arctan(v)
    Arctan,
    /// Φ(v)
    NormCdf,
    /// (v + 1)³
    ShiftedCube,
    /// arctan(2v)
    Arctan2,
}

impl Distortion {
    pub const ALL: [Distortion; 7] = [
        Distortion::Identity,
        Distortion::Cube,
        Distortion::Exp,
        Distortion::Arctan,
        Distortion::NormCdf,
        Distortion::ShiftedCube,
        Distortion::Arctan2,
    ];

    #[inline]
    pub fn apply(&self, v: f64) -> f64 {
        match self {
            Distortion::Identity => v,
            Distortion::Cube => v * v * v,
            Distortion::Exp => v.exp(),
            Distortion::Arctan => v.atan(),
            Distortion::NormCdf => norm_cdf(v),
            Distortion::ShiftedCube => {
                let w = v + 1.0;
                w * w * w
            }
            Distortion::Arctan2 => (2.0 * v).atan(),
        }
    }

    /// `g⁻¹(x)`; values outside the range of `g` are clamped to its closure.
    pub fn inverse(&self, x: f64) -> f64 {
        match self {
            Distortion::Identity => x,
            Distortion::Cube => x.cbrt(),
            Distortion::Exp => {
                if x <= 0.0 {
                    log::warn!("exp inverse: {x} outside (0, inf), clamped");
                    return f64::MIN_POSITIVE.ln();
                }
                x.ln()
            }
            Distortion::Arctan => clamp_angle(x).tan(),
            Distortion::NormCdf => {
                if x <= 0.0 || x >= 1.0 {
                    log::warn!("normal CDF inverse: {x} outside (0, 1), clamped");
                }
                inv_norm_cdf(x.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0))
                    .expect("clamped into (0, 1)")
            }
            Distortion::ShiftedCube => x.cbrt() - 1.0,
            Distortion::Arctan2 => clamp_angle(x).tan() / 2.0,
        }
    }
}

fn clamp_angle(x: f64) -> f64 {
    if x.abs() > FRAC_PI_2 {
        log::warn!("arctan inverse: {x} outside (-pi/2, pi/2), clamped");
    }
    x.clamp(-FRAC_PI_2, FRAC_PI_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CovarianceKind {
    /// Σ_ij = ρ^|i−j|
    Ar { rho: f64 },
    /// Σ_ij = ρ off the diagonal
    Cs { rho: f64 },
    /// Block diagonal with CS(ρ) blocks.
    BlockCs { blocks: usize, block_dim: usize, rho: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovarianceSpec {
    pub kind: CovarianceKind,
    pub p: usize,
}

/// Dense covariance matrix with its lower Cholesky factor.
#[derive(Debug, Clone)]
pub struct Covariance {
    pub sigma: Array2<f64>,
    pub chol: Array2<f64>,
}

pub fn build_covariance(spec: &CovarianceSpec) -> Result<Covariance> {
    let p = spec.p;
    if p == 0 {
        return Err(Error::InvalidArgument("covariance dimension must be positive".into()));
    }
    let cs_ok = |rho: f64, dim: usize| {
        rho < 1.0 && (dim <= 1 || rho > -1.0 / (dim as f64 - 1.0))
    };
    let sigma = match spec.kind {
        CovarianceKind::Ar { rho } => {
            if !(rho.abs() < 1.0) {
                return Err(Error::InvalidArgument(format!("AR requires |rho| < 1, got {rho}")));
            }
            Array2::from_shape_fn((p, p), |(i, j)| rho.powi(i.abs_diff(j) as i32))
        }
        CovarianceKind::Cs { rho } => {
            if !cs_ok(rho, p) {
                return Err(Error::InvalidArgument(format!(
                    "CS({rho}) is not positive definite in dimension {p}"
                )));
            }
            Array2::from_shape_fn((p, p), |(i, j)| if i == j { 1.0 } else { rho })
        }
        CovarianceKind::BlockCs { blocks, block_dim, rho } => {
            if blocks * block_dim != p {
                return Err(Error::InvalidArgument(format!(
                    "{blocks} blocks of dimension {block_dim} do not make dimension {p}"
                )));
            }
            if !cs_ok(rho, block_dim) {
                return Err(Error::InvalidArgument(format!(
                    "CS({rho}) blocks are not positive definite in dimension {block_dim}"
                )));
            }
            Array2::from_shape_fn((p, p), |(i, j)| {
                if i == j {
                    1.0
                } else if i / block_dim == j / block_dim {
                    rho
                } else {
                    0.0
                }
            })
        }
    };
    let chol = cholesky(&sigma)?;
    Ok(Covariance { sigma, chol })
}

/// Lower-triangular `L` with `L Lᵀ = a`.
pub fn cholesky(a: &Array2<f64>) -> Result<Array2<f64>> {
    let p = a.nrows();
    let mut flat: Vec<f64> = a.iter().copied().collect();
    cholesky_in_place(&mut flat, p)?;
    Ok(Array2::from_shape_vec((p, p), flat).expect("square"))
}

/// Cholesky factor of a row-major `k×k` matrix, overwriting it with `L`
/// (upper triangle zeroed).
pub(crate) fn cholesky_in_place(a: &mut [f64], k: usize) -> Result<()> {
    for j in 0..k {
        let (done, rest) = a.split_at_mut(j * k);
        let row_j = &mut rest[..k];
        for m in 0..j {
            let row_m = &done[m * k..m * k + m];
            let s: f64 = row_j[..m].iter().zip(row_m).map(|(x, y)| x * y).sum();
            row_j[m] = (row_j[m] - s) / done[m * k + m];
        }
        let d = row_j[j] - row_j[..j].iter().map(|x| x * x).sum::<f64>();
        if !(d > 0.0) {
            return Err(Error::InvalidArgument("matrix is not positive definite".into()));
        }
        row_j[j] = d.sqrt();
        row_j[j + 1..].iter_mut().for_each(|v| *v = 0.0);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    A,
    B,
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Series::A),
            "b" | "B" => Ok(Series::B),
            other => Err(Error::InvalidArgument(format!("series must be a or b, got {other:?}"))),
        }
    }
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Series::A => "a",
            Series::B => "b",
        })
    }
}

/// Inclusive 1-based index range.
type Span = (usize, usize);

/// Distortion rows for the b series, transcribed per model column. Each
/// cell is a leading singleton followed by a contiguous range; e.g. the
/// Model 3b cell "4, 6, …, 100" is {4} ∪ {6..100}, since 5 belongs to Φ.
fn distortion_table(model: u8) -> Vec<(Distortion, Vec<Span>)> {
    use Distortion::*;
    match model {
        1 | 2 => vec![
            (Cube, vec![(1, 1), (101, 150)]),
            (Exp, vec![(2, 2), (151, 200)]),
            (Arctan, vec![(3, 3), (201, 300)]),
            (Cube, vec![(4, 50)]),
            (NormCdf, vec![(51, 100)]),
            (ShiftedCube, vec![(301, 350)]),
            (Arctan2, vec![(351, 400)]),
        ],
        3 => vec![
            (Cube, vec![(1, 1), (201, 300)]),
            (Exp, vec![(2, 2), (301, 400)]),
            (Arctan, vec![(3, 3), (401, 500)]),
            (Cube, vec![(4, 4), (6, 100)]),
            (NormCdf, vec![(5, 5), (101, 200)]),
            (ShiftedCube, vec![(501, 600)]),
            (Arctan2, vec![(601, 800)]),
        ],
        4 => vec![
            (Cube, vec![(3, 3), (201, 300)]),
            (Exp, vec![(4, 4), (301, 400)]),
            (Arctan, vec![(5, 5), (401, 500)]),
            (Cube, vec![(1, 1), (8, 100)]),
            (NormCdf, vec![(2, 2), (101, 200)]),
            (ShiftedCube, vec![(6, 6), (501, 600)]),
            (Arctan2, vec![(7, 7), (601, 800)]),
        ],
        _ => Vec::new(),
    }
}

/// Expands the table for dimension `p`, checking that every index is
/// assigned exactly once.
fn series_b_distortions(model: u8, p: usize) -> Result<Vec<Distortion>> {
    let mut out: Vec<Option<Distortion>> = vec![None; p];
    for (g, spans) in distortion_table(model) {
        for (lo, hi) in spans {
            for j in lo..=hi {
                let slot = out.get_mut(j - 1).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "distortion table for model {model} assigns index {j} beyond p = {p}"
                    ))
                })?;
                if let Some(prev) = slot {
                    return Err(Error::InvalidArgument(format!(
                        "distortion table for model {model} assigns index {j} twice ({prev:?}, {g:?})"
                    )));
                }
                *slot = Some(g);
            }
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(j, g)| {
            g.ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "distortion table for model {model} leaves index {} unassigned at p = {p}",
                    j + 1
                ))
            })
        })
        .collect()
}

/// Optional overrides on the standard model settings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SpecOverrides {
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub rho: Option<f64>,
}

/// One benchmark model: `Y = ±1` with equal priors, `V | Y ~ N(μ_Y, Σ)` with
/// `μ₋ = 0` and `μ₊ = Σ β`, and `X = g(V)` featurewise.
#[derive(Debug, Clone)]
pub struct SimulationSpec {
    pub model: u8,
    pub series: Series,
    pub n: usize,
    pub covariance_spec: CovarianceSpec,
    pub beta_bayes: Array1<f64>,
    pub mu_plus: Array1<f64>,
    pub distortions: Vec<Distortion>,
    covariance: Arc<Covariance>,
}

impl SimulationSpec {
    /// The standard settings of Models 1–4.
    pub fn standard(model: u8, series: Series) -> Result<Self> {
        SimulationSpec::with_overrides(model, series, SpecOverrides::default())
    }

    pub fn with_overrides(model: u8, series: Series, ov: SpecOverrides) -> Result<Self> {
        let (n, p, kind, scale, lead): (usize, usize, CovarianceKind, f64, &[f64]) = match model {
            1 => (150, 400, CovarianceKind::Ar { rho: 0.5 }, 0.556, &[3.0, 1.5, 0.0, 0.0, 2.0]),
            2 => (200, 400, CovarianceKind::Ar { rho: 0.5 }, 0.582, &[3.0, 2.5, -2.8]),
            3 => (400, 800, CovarianceKind::Cs { rho: 0.5 }, 0.395, &[3.0, 1.7, -2.2, -2.1, 2.55]),
            4 => (
                300,
                800,
                CovarianceKind::BlockCs { blocks: 5, block_dim: 160, rho: 0.6 },
                0.916,
                &[1.2, -1.4, 1.15, -1.64, 1.5, -1.0, 2.0],
            ),
            m => return Err(Error::InvalidArgument(format!("model must be 1-4, got {m}"))),
        };
        let n = ov.n.unwrap_or(n);
        let p = ov.p.unwrap_or(p);
        if n < 4 {
            return Err(Error::InvalidArgument(format!("n = {n} is too small")));
        }
        if p < lead.len() {
            return Err(Error::InvalidArgument(format!(
                "p = {p} is smaller than the Bayes support of model {model}"
            )));
        }
        let kind = match kind {
            CovarianceKind::Ar { rho } => CovarianceKind::Ar { rho: ov.rho.unwrap_or(rho) },
            CovarianceKind::Cs { rho } => CovarianceKind::Cs { rho: ov.rho.unwrap_or(rho) },
            CovarianceKind::BlockCs { block_dim, rho, .. } => CovarianceKind::BlockCs {
                blocks: p / block_dim,
                block_dim,
                rho: ov.rho.unwrap_or(rho),
            },
        };
        let mut beta = Array1::zeros(p);
        for (j, &c) in lead.iter().enumerate() {
            beta[j] = scale * c;
        }
        let distortions = match series {
            Series::A => vec![Distortion::Identity; p],
            Series::B => series_b_distortions(model, p)?,
        };
        SimulationSpec::custom(model, series, n, CovarianceSpec { kind, p }, beta, distortions)
    }

    /// Arbitrary Bayes direction and distortions on a given covariance.
    pub fn custom(
        model: u8,
        series: Series,
        n: usize,
        covariance_spec: CovarianceSpec,
        beta_bayes: Array1<f64>,
        distortions: Vec<Distortion>,
    ) -> Result<Self> {
        let p = covariance_spec.p;
        if beta_bayes.len() != p || distortions.len() != p {
            return Err(Error::DimensionMismatch {
                expected: p,
                found: if beta_bayes.len() != p { beta_bayes.len() } else { distortions.len() },
            });
        }
        let covariance = build_covariance(&covariance_spec)?;
        let mu_plus = covariance.sigma.dot(&beta_bayes);
        Ok(SimulationSpec {
            model,
            series,
            n,
            covariance_spec,
            beta_bayes,
            mu_plus,
            distortions,
            covariance: Arc::new(covariance),
        })
    }

    pub fn p(&self) -> usize {
        self.covariance_spec.p
    }

    pub fn covariance(&self) -> &Covariance {
        &self.covariance
    }

    /// Indices with nonzero Bayes coefficient.
    pub fn support(&self) -> Vec<usize> {
        support_of(self.beta_bayes.view())
    }

    /// The same latent model under the other series.
    pub fn with_series(&self, series: Series) -> Result<Self> {
        let distortions = match series {
            Series::A => vec![Distortion::Identity; self.p()],
            Series::B => series_b_distortions(self.model, self.p())?,
        };
        Ok(SimulationSpec {
            series,
            distortions,
            ..self.clone()
        })
    }

    /// Squared Mahalanobis distance between the class means, `βᵀΣβ`.
    pub fn mahalanobis_sq(&self) -> f64 {
        self.beta_bayes.dot(&self.mu_plus)
    }

    /// Bayes rule on the latent scale: `+1` iff `βᵀ(v − μ₊/2) ≥ 0`.
    pub fn bayes_rule(&self, v: ArrayView1<f64>) -> f64 {
        let score: f64 = self
            .support()
            .iter()
            .map(|&j| self.beta_bayes[j] * (v[j] - 0.5 * self.mu_plus[j]))
            .sum();
        if score >= 0.0 {
            1.0
        } else {
            -1.0
        }
    }
}

pub(crate) fn support_of(beta: ArrayView1<f64>) -> Vec<usize> {
    beta.iter()
        .enumerate()
        .filter_map(|(j, &b)| (b != 0.0).then_some(j))
        .collect()
}

/// Counter-based standard normal stream: ChaCha8 uniforms pushed through Φ⁻¹.
pub struct NormalStream {
    rng: ChaCha8Rng,
}

impl NormalStream {
    pub fn new(seed: u64) -> Self {
        NormalStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform on the open interval (0, 1).
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn normal(&mut self) -> f64 {
        inv_norm_cdf(self.uniform()).expect("uniform lies in (0, 1)")
    }
}

/// Simulated draw: latent Gaussian matrix, ±1 labels, and the observed dataset.
#[derive(Debug, Clone)]
pub struct Sample {
    pub latent: Array2<f64>,
    pub signs: Vec<f64>,
    pub data: Dataset,
}

pub fn sample_model(spec: &SimulationSpec, n_draw: usize, seed: u64) -> Dataset {
    sample_with_latent(spec, n_draw, seed).data
}

pub fn sample_with_latent(spec: &SimulationSpec, n_draw: usize, seed: u64) -> Sample {
    let p = spec.p();
    let mut stream = NormalStream::new(seed);
    let signs: Vec<f64> = (0..n_draw)
        .map(|_| if stream.uniform() < 0.5 { 1.0 } else { -1.0 })
        .collect();
    let z = Array2::from_shape_simple_fn((n_draw, p), || stream.normal());
    let mut latent = z.dot(&spec.covariance.chol.t());
    for (mut row, &s) in latent.rows_mut().into_iter().zip(&signs) {
        if s > 0.0 {
            row += &spec.mu_plus;
        }
    }
    let mut x = latent.clone();
    if spec.distortions.iter().any(|&g| g != Distortion::Identity) {
        for (j, mut col) in x.columns_mut().into_iter().enumerate() {
            let g = spec.distortions[j];
            col.mapv_inplace(|v| g.apply(v));
        }
    }
    let data = Dataset::from_signs(x, &signs).expect("simulated values are finite");
    Sample { latent, signs, data }
}

/// `Φ(−½ √(βᵀΣβ))`, the Bayes error with equal priors.
pub fn bayes_error(spec: &SimulationSpec) -> f64 {
    norm_cdf(-0.5 * spec.mahalanobis_sq().max(0.0).sqrt())
}

/// Monte Carlo Bayes error: the true rule applied to fresh draws.
///
/// The rule reads only the coordinates in the Bayes support, so draws are
/// taken from that marginal, `N(μ_A, Σ_AA)`.
pub fn bayes_error_monte_carlo(spec: &SimulationSpec, draws: usize, seed: u64) -> f64 {
    let support = spec.support();
    let k = support.len();
    let sigma_aa = Array2::from_shape_fn((k, k), |(a, b)| {
        spec.covariance.sigma[[support[a], support[b]]]
    });
    let chol = cholesky(&sigma_aa).expect("principal submatrix of a PD matrix");
    let beta: Vec<f64> = support.iter().map(|&j| spec.beta_bayes[j]).collect();
    let mu: Vec<f64> = support.iter().map(|&j| spec.mu_plus[j]).collect();
    let mut stream = NormalStream::new(seed);
    let mut z = vec![0.0; k];
    let mut errors = 0usize;
    for _ in 0..draws {
        let y = if stream.uniform() < 0.5 { 1.0 } else { -1.0 };
        for zi in z.iter_mut() {
            *zi = stream.normal();
        }
        let mut score = 0.0;
        for a in 0..k {
            let lz: f64 = (0..=a).map(|b| chol[[a, b]] * z[b]).sum();
            let v = lz + if y > 0.0 { mu[a] } else { 0.0 };
            score += beta[a] * (v - 0.5 * mu[a]);
        }
        let pred = if score >= 0.0 { 1.0 } else { -1.0 };
        if pred != y {
            errors += 1;
        }
    }
    errors as f64 / draws as f64
}

/// Exact inverse of the spec's distortions.
pub fn oracle_transform(spec: &SimulationSpec) -> TransformModel {
    TransformModel::oracle(&spec.distortions)
}

/// Derives an independent stream seed from a master seed and a tag path.
pub fn derive_seed(master: u64, parts: &[u64]) -> u64 {
    let mut h = splitmix64(master ^ 0x5eed_5eed_5eed_5eed);
    for &p in parts {
        h = splitmix64(h ^ splitmix64(p.wrapping_add(0x9e37_79b9_7f4a_7c15)));
    }
    h
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
