//! Stratified K-fold cross-validation over a λ grid.

use ndarray::{ArrayView1, ArrayView2, Axis};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lasso::{lambda_grid, path_on, LassoOptions, Standardized};
use super::{intercept, support};
use crate::error::{Error, Result};

/// Smallest grid point, relative to `λ_max`.
pub const DEFAULT_MIN_RATIO: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct CvResult {
    pub lambda: f64,
    pub index: usize,
    pub lambdas: Vec<f64>,
    /// Cross-validated misclassification rate per grid point.
    pub cv_errors: Vec<f64>,
}

/// Fold id for every row. Each class is shuffled and dealt round-robin, the
/// second class continuing where the first stopped, so every fold holds
/// both classes.
pub fn stratified_folds(y: ArrayView1<f64>, folds: usize, seed: u64) -> Result<Vec<usize>> {
    if folds < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 folds, got {folds}")));
    }
    let mut pos: Vec<usize> = (0..y.len()).filter(|&i| y[i] > 0.0).collect();
    let mut neg: Vec<usize> = (0..y.len()).filter(|&i| y[i] <= 0.0).collect();
    for (name, class) in [("+", &pos), ("-", &neg)] {
        if class.len() < folds {
            return Err(Error::FoldConstruction(format!(
                "class {name} has {} observation(s), fewer than {folds} folds",
                class.len()
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pos.shuffle(&mut rng);
    neg.shuffle(&mut rng);
    let mut fold_of = vec![0; y.len()];
    for (k, &i) in pos.iter().chain(neg.iter()).enumerate() {
        fold_of[i] = k % folds;
    }
    Ok(fold_of)
}

/// Cross-validates over the default grid of `grid_size` points.
pub fn cv_tune(
    h: ArrayView2<f64>,
    y: ArrayView1<f64>,
    folds: usize,
    grid_size: usize,
    seed: u64,
) -> Result<CvResult> {
    if grid_size == 0 {
        return Err(Error::InvalidArgument("grid size must be positive".into()));
    }
    let lmax = Standardized::new(h, y)?.lambda_max();
    if lmax <= 0.0 {
        return Err(Error::InvalidArgument(
            "lambda_max is zero; no feature is correlated with the labels".into(),
        ));
    }
    let grid = lambda_grid(lmax, grid_size, DEFAULT_MIN_RATIO);
    cv_tune_grid(h, y, &grid, folds, seed)
}

/// Returns the largest λ attaining the minimal cross-validated error.
pub fn cv_tune_grid(
    h: ArrayView2<f64>,
    y: ArrayView1<f64>,
    lambdas: &[f64],
    folds: usize,
    seed: u64,
) -> Result<CvResult> {
    let fold_of = stratified_folds(y, folds, seed)?;
    let opts = LassoOptions::default();
    let mut miss = vec![0usize; lambdas.len()];
    for fold in 0..folds {
        let train: Vec<usize> = (0..y.len()).filter(|&i| fold_of[i] != fold).collect();
        let test: Vec<usize> = (0..y.len()).filter(|&i| fold_of[i] == fold).collect();
        let h_tr = h.select(Axis(0), &train);
        let y_tr = y.select(Axis(0), &train);
        let std = Standardized::new(h_tr.view(), y_tr.view())?;
        let path = path_on(&std, lambdas, &opts)?;
        for (k, beta) in path.betas.iter().enumerate() {
            let active = support(beta.view());
            let beta0 = match intercept(beta.view(), h_tr.view(), y_tr.view()) {
                Ok(fit) => fit.beta0,
                Err(Error::DegenerateProjection) => prior_intercept(y_tr.view()),
                Err(e) => return Err(e),
            };
            for &i in &test {
                let score = beta0 + active.iter().map(|&j| h[[i, j]] * beta[j]).sum::<f64>();
                let pred = if score >= 0.0 { 1.0 } else { -1.0 };
                if pred != y[i] {
                    miss[k] += 1;
                }
            }
        }
    }
    let best = *miss.iter().min().expect("nonempty grid");
    let index = miss.iter().position(|&m| m == best).unwrap();
    let n = y.len() as f64;
    Ok(CvResult {
        lambda: lambdas[index],
        index,
        lambdas: lambdas.to_vec(),
        cv_errors: miss.iter().map(|&m| m as f64 / n).collect(),
    })
}

pub(crate) fn prior_intercept(y: ArrayView1<f64>) -> f64 {
    let (pos, neg) = crate::data::sign_counts(y);
    (pos as f64 / neg as f64).ln()
}
