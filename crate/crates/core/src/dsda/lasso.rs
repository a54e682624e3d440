//! Lasso path by cyclic coordinate descent.
//!
//! Solves `min_β n⁻¹ Σ (yᵢ − β₀ − hᵢᵀβ)² + λ‖β‖₁` with the intercept profiled
//! out by centering. At a solution the centered gradient satisfies
//! `n⁻¹⟨h_j − h̄_j, r⟩ = (λ/2)·sign(β_j)` on the active set and
//! `|n⁻¹⟨h_j − h̄_j, r⟩| ≤ λ/2` elsewhere, where `r` is the centered residual.
//!
//! Columns are centered and scaled to unit (1/n) variance for the sweeps.
//! With `z_j = (h_j − h̄_j)/s_j` and `β_j = γ_j/s_j` the problem is the same
//! objective with per-coordinate penalty `λ/s_j` on `γ_j`, so nothing about
//! the solution changes.

use std::cell::RefCell;

use ndarray::{Array1, ArrayView1, ArrayView2};

use crate::error::{Error, Result};
use crate::simulate::cholesky_in_place;

/// Active-set sweeps between full sweeps.
const INNER_SWEEPS: usize = 25;

#[derive(Debug, Clone, Copy)]
pub struct LassoOptions {
    /// Sweeps stop once the largest standardized coefficient change falls
    /// below `tol · sd(y)` ...
    pub tol: f64,
    /// ... and the KKT conditions hold to this absolute tolerance.
    pub kkt_tol: f64,
    pub max_sweeps: usize,
}

impl Default for LassoOptions {
    fn default() -> Self {
        LassoOptions {
            tol: 1e-7,
            kkt_tol: 1e-7,
            max_sweeps: 100_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LassoPath {
    pub lambdas: Vec<f64>,
    /// Coefficients on the original column scale, one vector per λ.
    pub betas: Vec<Array1<f64>>,
    /// Zero-variance columns excluded from the fit (coefficient fixed at 0).
    pub dropped: Vec<usize>,
    pub sweeps: Vec<usize>,
}

/// Centered, scaled design in column-major storage.
pub(crate) struct Standardized {
    n: usize,
    cols: Vec<f64>,
    scales: Vec<f64>,
    kept: Vec<usize>,
    dropped: Vec<usize>,
    yc: Vec<f64>,
    y_sd: f64,
    /// Lazily computed columns of `ZᵀZ/n`.
    gram: RefCell<Vec<Option<Vec<f64>>>>,
}

impl Standardized {
    pub(crate) fn new(h: ArrayView2<f64>, y: ArrayView1<f64>) -> Result<Self> {
        let (n, p) = h.dim();
        if n < 2 {
            return Err(Error::InvalidArgument(format!("need at least 2 rows, got {n}")));
        }
        if y.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} responses for {n} rows",
                y.len()
            )));
        }
        if h.iter().chain(y.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite value in lasso input".into()));
        }
        let nf = n as f64;
        let mut cols = vec![0.0; n * p];
        let mut scales = vec![0.0; p];
        let mut kept = Vec::with_capacity(p);
        let mut dropped = Vec::new();
        for j in 0..p {
            let col = h.column(j);
            let mean = col.sum() / nf;
            let big = col.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            let out = &mut cols[j * n..(j + 1) * n];
            for (o, &v) in out.iter_mut().zip(col.iter()) {
                *o = v - mean;
            }
            let sd = (out.iter().map(|v| v * v).sum::<f64>() / nf).sqrt();
            if sd <= 1e-12 * big {
                dropped.push(j);
                out.iter_mut().for_each(|v| *v = 0.0);
                continue;
            }
            out.iter_mut().for_each(|v| *v /= sd);
            scales[j] = sd;
            kept.push(j);
        }
        if !dropped.is_empty() {
            log::warn!(
                "{} zero-variance column(s) dropped from the lasso fit",
                dropped.len()
            );
        }
        let ybar = y.sum() / nf;
        let yc: Vec<f64> = y.iter().map(|v| v - ybar).collect();
        let y_sd = (yc.iter().map(|v| v * v).sum::<f64>() / nf).sqrt();
        Ok(Standardized {
            n,
            cols,
            scales,
            kept,
            dropped,
            yc,
            y_sd,
            gram: RefCell::new(vec![None; p]),
        })
    }

    #[inline]
    fn col(&self, j: usize) -> &[f64] {
        &self.cols[j * self.n..(j + 1) * self.n]
    }

    /// `n⁻¹⟨z_j, r⟩`
    #[inline]
    fn grad(&self, j: usize, r: &[f64]) -> f64 {
        dot(self.col(j), r) / self.n as f64
    }

    pub(crate) fn lambda_max(&self) -> f64 {
        self.kept
            .iter()
            .map(|&j| 2.0 * self.scales[j] * self.grad(j, &self.yc).abs())
            .fold(0.0, f64::max)
    }

    fn p(&self) -> usize {
        self.scales.len()
    }

    /// One coordinate update; returns the absolute change in `γ_j`.
    #[inline]
    fn update(&self, j: usize, lambda: f64, gamma: &mut [f64], r: &mut [f64]) -> f64 {
        let old = gamma[j];
        let rho = self.grad(j, r) + old;
        let s = self.scales[j];
        let new = if 2.0 * s * rho.abs() <= lambda {
            0.0
        } else {
            rho.signum() * (rho.abs() - lambda / (2.0 * s))
        };
        if new != old {
            let delta = new - old;
            for (ri, zi) in r.iter_mut().zip(self.col(j)) {
                *ri -= zi * delta;
            }
            gamma[j] = new;
        }
        (new - old).abs()
    }

    /// Largest KKT violation on the original scale.
    fn kkt_violation(&self, lambda: f64, gamma: &[f64], r: &[f64]) -> f64 {
        let half = lambda / 2.0;
        self.kept
            .iter()
            .map(|&j| {
                let g = self.scales[j] * self.grad(j, r);
                if gamma[j] != 0.0 {
                    (g - half * gamma[j].signum()).abs()
                } else {
                    (g.abs() - half).max(0.0)
                }
            })
            .fold(0.0, f64::max)
    }

    /// Coordinate descent at one λ from the warm start in `gamma`/`r`.
    fn solve(
        &self,
        lambda: f64,
        gamma: &mut [f64],
        r: &mut [f64],
        opts: &LassoOptions,
    ) -> Result<usize> {
        let thr = opts.tol * self.y_sd.max(f64::MIN_POSITIVE);
        let mut sweeps = 0;
        let mut active: Vec<usize> = Vec::new();
        let mut last_tried: Vec<(usize, bool)> = Vec::new();
        let mut pattern: Vec<(usize, bool)> = Vec::new();
        loop {
            let mut dmax = 0.0f64;
            for &j in &self.kept {
                dmax = dmax.max(self.update(j, lambda, gamma, r));
            }
            sweeps += 1;
            if dmax < thr && self.kkt_violation(lambda, gamma, r) <= opts.kkt_tol {
                return Ok(sweeps);
            }
            if sweeps >= opts.max_sweeps {
                return Err(Error::Convergence { sweeps });
            }
            active.clear();
            active.extend(self.kept.iter().copied().filter(|&j| gamma[j] != 0.0));
            // Whenever the signed support is new, jump straight to the
            // restricted solution; the next full sweep certifies it.
            pattern.clear();
            pattern.extend(active.iter().map(|&j| (j, gamma[j] > 0.0)));
            if pattern != last_tried {
                std::mem::swap(&mut last_tried, &mut pattern);
                if self.exact_on_support(lambda, &active, gamma, r) {
                    continue;
                }
            }
            for _ in 0..INNER_SWEEPS {
                let mut dmax = 0.0f64;
                for &j in &active {
                    dmax = dmax.max(self.update(j, lambda, gamma, r));
                }
                sweeps += 1;
                if dmax < thr {
                    break;
                }
                if sweeps >= opts.max_sweeps {
                    return Err(Error::Convergence { sweeps });
                }
            }
        }
    }

    /// Active-set step on the signed support of `gamma`.
    ///
    /// Solves `(Z_AᵀZ_A/n) γ_A = Z_Aᵀy/n − (λ/2)·sign(γ_A)/s_A`. If some
    /// coefficient would change sign, moves from the current point toward
    /// that solution only until the first coefficient reaches zero, removes
    /// it, and solves again. Within a fixed sign pattern the objective is a
    /// convex quadratic, so every step decreases it. A support too large for
    /// the system to be nonsingular is first shrunk by [`Self::null_space_step`].
    /// Returns whether `gamma` and `r` were changed.
    fn exact_on_support(&self, lambda: f64, active: &[usize], gamma: &mut [f64], r: &mut [f64]) -> bool {
        let nf = self.n as f64;
        let mut support = active.to_vec();
        let mut moved = false;
        let factor = loop {
            if support.is_empty() {
                break None;
            }
            // centered columns have rank at most n − 1
            if support.len() < self.n {
                let mut l = self.gram_block(&support);
                if cholesky_in_place(&mut l, support.len()).is_ok() {
                    break Some(l);
                }
            }
            if !self.null_space_step(lambda, &mut support, gamma) {
                break None;
            }
            moved = true;
        };
        let Some(l) = factor else {
            if moved {
                self.reset_residual(gamma, r);
            }
            return moved;
        };
        let support = &support[..];
        let k = support.len();
        let zy: Vec<f64> = support.iter().map(|&j| dot(self.col(j), &self.yc) / nf).collect();
        let signs: Vec<f64> = support.iter().map(|&j| gamma[j].signum()).collect();
        let mut cur: Vec<f64> = support.iter().map(|&j| gamma[j]).collect();
        // positions (into `support`) still in play
        let mut live: Vec<usize> = (0..k).collect();
        let mut l = l;
        loop {
            if live.is_empty() {
                // every coefficient reached zero along the descent path
                for &j in support {
                    gamma[j] = 0.0;
                }
                break;
            }
            let rhs: Vec<f64> = live
                .iter()
                .map(|&a| zy[a] - lambda / (2.0 * self.scales[support[a]]) * signs[a])
                .collect();
            let sol = cholesky_solve(&l, &rhs);
            if sol.iter().any(|v| !v.is_finite()) {
                if moved {
                    self.reset_residual(gamma, r);
                }
                return moved;
            }
            // largest step t ∈ (0, 1] keeping every sign
            let mut t = 1.0;
            let mut hit = None;
            for (i, (&a, &v)) in live.iter().zip(&sol).enumerate() {
                if v * signs[a] <= 0.0 {
                    let ti = cur[a] / (cur[a] - v);
                    if ti < t {
                        t = ti;
                        hit = Some(i);
                    }
                }
            }
            match hit {
                None => {
                    for (&a, &v) in live.iter().zip(&sol) {
                        cur[a] = v;
                    }
                    for (a, &j) in support.iter().enumerate() {
                        gamma[j] = if live.contains(&a) { cur[a] } else { 0.0 };
                    }
                    break;
                }
                Some(i) => {
                    for (&a, &v) in live.iter().zip(&sol) {
                        cur[a] += t * (v - cur[a]);
                    }
                    let gone = live.remove(i);
                    cur[gone] = 0.0;
                    l = cholesky_delete(&l, live.len() + 1, i);
                }
            }
        }
        self.reset_residual(gamma, r);
        true
    }

    /// `(ZᵀZ/n)` restricted to `support`, row-major.
    fn gram_block(&self, support: &[usize]) -> Vec<f64> {
        let nf = self.n as f64;
        let mut cache = self.gram.borrow_mut();
        for &j in support {
            if cache[j].is_none() {
                let zj = self.col(j);
                cache[j] = Some((0..self.p()).map(|m| dot(self.col(m), zj) / nf).collect());
            }
        }
        let mut g = Vec::with_capacity(support.len() * support.len());
        for &ja in support {
            let col = cache[ja].as_ref().unwrap();
            g.extend(support.iter().map(|&jb| col[jb]));
        }
        g
    }

    /// On a rank-deficient support the objective is linear along the null
    /// space of `Z_A`, with slope given by the signed penalty
    /// `w = (λ/2)·sign(γ_A)/s_A`. Moves `γ_A` along minus the projection of
    /// `w` onto that null space, which leaves the fit unchanged and lowers
    /// the penalty, until the first coefficient reaches zero, and drops it.
    /// Returns false when there is no such direction or the projection
    /// cannot be computed.
    fn null_space_step(&self, lambda: f64, support: &mut Vec<usize>, gamma: &mut [f64]) -> bool {
        let n = self.n;
        let k = support.len();
        let w: Vec<f64> = support
            .iter()
            .map(|&j| lambda / (2.0 * self.scales[j]) * gamma[j].signum())
            .collect();
        // row-space projection through M = Z_A Z_Aᵀ + c·11ᵀ: the columns are
        // centered, so 1 spans the rest of the space and Z_A w ⟂ 1
        let mut u = vec![0.0; n];
        let mut m = vec![0.0; n * n];
        for (&j, &wa) in support.iter().zip(&w) {
            let z = self.col(j);
            for (ui, zi) in u.iter_mut().zip(z) {
                *ui += wa * zi;
            }
            for a in 0..n {
                let za = z[a];
                if za != 0.0 {
                    let row = &mut m[a * n..a * n + a + 1];
                    for (mb, zb) in row.iter_mut().zip(z) {
                        *mb += za * zb;
                    }
                }
            }
        }
        let c = k as f64 / n as f64;
        for a in 0..n {
            for b in 0..=a {
                m[a * n + b] += c;
                m[b * n + a] = m[a * n + b];
            }
        }
        if cholesky_in_place(&mut m, n).is_err() {
            return false;
        }
        let v = cholesky_solve(&m, &u);
        let d: Vec<f64> = support
            .iter()
            .zip(&w)
            .map(|(&j, &wa)| dot(self.col(j), &v) - wa)
            .collect();
        let (dn, wn) = (dot(&d, &d).sqrt(), dot(&w, &w).sqrt());
        if !(dn > 1e-10 * wn) {
            return false;
        }
        let mut t = f64::INFINITY;
        for (&j, &da) in support.iter().zip(&d) {
            if da * gamma[j] < 0.0 {
                t = t.min(-gamma[j] / da);
            }
        }
        if !t.is_finite() {
            return false;
        }
        for (&j, &da) in support.iter().zip(&d) {
            let g = gamma[j];
            let next = g + t * da;
            // the blocking coordinate, and any that reach zero with it
            gamma[j] = if next * g <= 0.0 || next.abs() <= 1e-14 * g.abs() { 0.0 } else { next };
        }
        let before = support.len();
        support.retain(|&j| gamma[j] != 0.0);
        support.len() < before
    }

    fn reset_residual(&self, gamma: &[f64], r: &mut [f64]) {
        r.copy_from_slice(&self.yc);
        for &j in &self.kept {
            if gamma[j] != 0.0 {
                for (ri, zi) in r.iter_mut().zip(self.col(j)) {
                    *ri -= zi * gamma[j];
                }
            }
        }
    }

    fn to_original(&self, gamma: &[f64]) -> Array1<f64> {
        (0..self.p())
            .map(|j| if gamma[j] == 0.0 { 0.0 } else { gamma[j] / self.scales[j] })
            .collect()
    }
}

/// Cholesky factor of the matrix with row and column `i` removed, from the
/// row-major `k×k` factor `l`, by Givens rotations.
fn cholesky_delete(l: &[f64], k: usize, i: usize) -> Vec<f64> {
    // drop row i; rows below it keep one extra entry right of the diagonal
    let mut rows: Vec<Vec<f64>> = (0..k).filter(|&r| r != i).map(|r| l[r * k..(r + 1) * k].to_vec()).collect();
    for c in i..k - 1 {
        let (a, b) = (rows[c][c], rows[c][c + 1]);
        let h = a.hypot(b);
        let (cs, sn) = (a / h, b / h);
        for row in rows.iter_mut().skip(c) {
            let (x, y) = (row[c], row[c + 1]);
            row[c] = cs * x + sn * y;
            row[c + 1] = cs * y - sn * x;
        }
        rows[c][c + 1] = 0.0;
    }
    let m = k - 1;
    let mut out = Vec::with_capacity(m * m);
    for row in &rows {
        out.extend_from_slice(&row[..m]);
    }
    out
}

/// Solves `L Lᵀ x = b` for a row-major lower-triangular `L`.
fn cholesky_solve(l: &[f64], b: &[f64]) -> Vec<f64> {
    let k = b.len();
    let mut x = b.to_vec();
    for i in 0..k {
        let row = &l[i * k..i * k + i];
        let s: f64 = row.iter().zip(&x[..i]).map(|(a, b)| a * b).sum();
        x[i] = (x[i] - s) / l[i * k + i];
    }
    for i in (0..k).rev() {
        let xi = x[i] / l[i * k + i];
        x[i] = xi;
        for m in 0..i {
            x[m] -= l[i * k + m] * xi;
        }
    }
    x
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smallest λ at which every coefficient is zero:
/// `max_j (2/n)|⟨h_j − h̄_j, y − ȳ⟩|`.
pub fn lambda_max(h: ArrayView2<f64>, y: ArrayView1<f64>) -> Result<f64> {
    Ok(Standardized::new(h, y)?.lambda_max())
}

/// `len` log-spaced values from `lambda_max` down to `min_ratio · lambda_max`.
pub fn lambda_grid(lambda_max: f64, len: usize, min_ratio: f64) -> Vec<f64> {
    match len {
        0 => Vec::new(),
        1 => vec![lambda_max],
        _ => {
            let step = min_ratio.ln() / (len - 1) as f64;
            (0..len)
                .map(|k| lambda_max * (step * k as f64).exp())
                .collect()
        }
    }
}

pub fn lasso_path(h: ArrayView2<f64>, y: ArrayView1<f64>, lambdas: &[f64]) -> Result<LassoPath> {
    lasso_path_with(h, y, lambdas, &LassoOptions::default())
}

pub fn lasso_path_with(
    h: ArrayView2<f64>,
    y: ArrayView1<f64>,
    lambdas: &[f64],
    opts: &LassoOptions,
) -> Result<LassoPath> {
    let std = Standardized::new(h, y)?;
    path_on(&std, lambdas, opts)
}

pub(crate) fn path_on(std: &Standardized, lambdas: &[f64], opts: &LassoOptions) -> Result<LassoPath> {
    validate_grid(lambdas)?;
    let mut gamma = vec![0.0; std.p()];
    let mut r = std.yc.clone();
    let mut betas = Vec::with_capacity(lambdas.len());
    let mut sweeps = Vec::with_capacity(lambdas.len());
    for &lambda in lambdas {
        sweeps.push(std.solve(lambda, &mut gamma, &mut r, opts)?);
        betas.push(std.to_original(&gamma));
    }
    Ok(LassoPath {
        lambdas: lambdas.to_vec(),
        betas,
        dropped: std.dropped.clone(),
        sweeps,
    })
}

fn validate_grid(lambdas: &[f64]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(Error::InvalidArgument("empty lambda grid".into()));
    }
    if lambdas.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
        return Err(Error::InvalidArgument("lambda values must be positive and finite".into()));
    }
    if lambdas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument("lambda grid must be strictly descending".into()));
    }
    Ok(())
}

/// Largest KKT violation of `beta` for penalty `lambda`, on the original scale.
pub fn kkt_violation(
    h: ArrayView2<f64>,
    y: ArrayView1<f64>,
    beta: ArrayView1<f64>,
    lambda: f64,
) -> Result<f64> {
    let (n, p) = h.dim();
    if beta.len() != p {
        return Err(Error::DimensionMismatch { expected: p, found: beta.len() });
    }
    let nf = n as f64;
    let ybar = y.sum() / nf;
    let means: Vec<f64> = (0..p).map(|j| h.column(j).sum() / nf).collect();
    let r: Vec<f64> = (0..n)
        .map(|i| {
            let fit: f64 = (0..p)
                .filter(|&j| beta[j] != 0.0)
                .map(|j| (h[[i, j]] - means[j]) * beta[j])
                .sum();
            y[i] - ybar - fit
        })
        .collect();
    let half = lambda / 2.0;
    Ok((0..p)
        .map(|j| {
            let g: f64 = (0..n).map(|i| (h[[i, j]] - means[j]) * r[i]).sum::<f64>() / nf;
            if beta[j] != 0.0 {
                (g - half * beta[j].signum()).abs()
            } else {
                (g.abs() - half).max(0.0)
            }
        })
        .fold(0.0, f64::max))
}

/// The penalized objective `n⁻¹ Σ (yᵢ − β₀ − hᵢᵀβ)² + λ‖β‖₁` at the profiled intercept.
pub fn objective(h: ArrayView2<f64>, y: ArrayView1<f64>, beta: ArrayView1<f64>, lambda: f64) -> f64 {
    let n = h.nrows() as f64;
    let fitted = h.dot(&beta);
    let resid = &y - &fitted;
    let mean = resid.sum() / n;
    resid.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / n + lambda * beta.iter().map(|b| b.abs()).sum::<f64>()
}
