use crate::data::{BinaryCoding, Dataset};
use crate::error::{Error, Result};
use crate::normal::{inv_norm_cdf, inv_norm_cdf_extended, norm_pdf};

use super::{EcdfTable, StepMap, TransformModel, Variant};

// Winsorized ECDF values always lie strictly inside (0, 1).
#[inline]
fn probit(p: f64) -> f64 {
    inv_norm_cdf(p).expect("Winsorized probability inside (0, 1)")
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len() as f64;
    values.sum::<f64>() / n
}

/// Per-feature ECDF tables for one class, Winsorized at `(1/n_k^2, 1 - 1/n_k^2)`.
fn class_tables(data: &Dataset, rows: &[usize]) -> Result<Vec<EcdfTable>> {
    (0..data.p())
        .map(|j| EcdfTable::fit_sample_size_bounds(&data.column_values(j, rows)))
        .collect()
}

/// Naive estimator: `h_j = Φ⁻¹ ∘ F̂_{+j}` using only the majority ("+") class,
/// Winsorized at `(1/n₊², 1 − 1/n₊²)`.
pub fn fit_naive(data: &Dataset) -> Result<TransformModel> {
    let coding = BinaryCoding::from_dataset(data)?;
    let pos = data.rows_of(coding.positive);
    let tables = class_tables(data, &pos)?;
    let degenerate = tables.iter().map(EcdfTable::is_degenerate).collect();
    let maps = tables
        .iter()
        .map(|t| StepMap::tabulate(t.sorted_values().iter().copied(), |x| probit(t.evaluate(x))))
        .collect();
    let (pi_pos, pi_neg) = coding.priors();
    Ok(TransformModel::from_parts(
        Variant::Naive,
        maps,
        degenerate,
        coding_labels(data, &coding),
        vec![pi_pos, pi_neg],
    ))
}

/// Pooled estimator combining the "+" and "−" class ECDFs.
///
/// With `π̂± = n±/n`,
/// `μ̂₋ = π̂₊ · mean_{Y=−1} Φ⁻¹F̂₊(X) − π̂₋ · mean_{Y=+1} Φ⁻¹F̂₋(X)` and
/// `ĥ = π̂₊ Φ⁻¹F̂₊ + π̂₋ (Φ⁻¹F̂₋ + μ̂₋)`.
pub fn fit_pooled(data: &Dataset) -> Result<TransformModel> {
    let coding = BinaryCoding::from_dataset(data)?;
    let pos = data.rows_of(coding.positive);
    let neg = data.rows_of(coding.negative);
    let pos_tables = class_tables(data, &pos)?;
    let neg_tables = class_tables(data, &neg)?;
    let (pi_pos, pi_neg) = coding.priors();

    let mut maps = Vec::with_capacity(data.p());
    let mut mu = Vec::with_capacity(data.p());
    let mut degenerate = Vec::with_capacity(data.p());
    for j in 0..data.p() {
        let (fp, fm) = (&pos_tables[j], &neg_tables[j]);
        let col = data.x.column(j);
        let mu_from_pos = mean(neg.iter().map(|&i| probit(fp.evaluate(col[i]))));
        let mu_from_neg = -mean(pos.iter().map(|&i| probit(fm.evaluate(col[i]))));
        let mu_pool = pi_pos * mu_from_pos + pi_neg * mu_from_neg;
        let map = StepMap::tabulate(col.iter().copied(), |x| {
            pi_pos * probit(fp.evaluate(x)) + pi_neg * (probit(fm.evaluate(x)) + mu_pool)
        });
        maps.push(map);
        mu.push(mu_pool);
        degenerate.push(fp.is_degenerate() || fm.is_degenerate());
    }
    Ok(TransformModel::from_parts(
        Variant::Pooled,
        maps,
        degenerate,
        coding_labels(data, &coding),
        vec![pi_pos, pi_neg],
    )
    .with_mu_minus(mu))
}

/// Fixed-band estimator: `ĥ = Φ⁻¹ ∘ F̂₊^{a,b}` with the truncation-corrected
/// estimate of `μ₋`
///
/// `μ̂₋ = q⁻¹ [ mean_{Y=−1} ĥ(X)·1{F̃₊(X) ∈ (a,b)} + φ(Φ⁻¹F̃₋(F̃₊⁻¹(b))) − φ(Φ⁻¹F̃₋(F̃₊⁻¹(a))) ]`,
/// `q = mean_{Y=−1} 1{F̃₊(X) ∈ (a,b)}`.
///
/// Both indicators use the positive-class ECDF.
pub fn fit_legacy(data: &Dataset, a: f64, b: f64) -> Result<TransformModel> {
    let coding = BinaryCoding::from_dataset(data)?;
    let pos = data.rows_of(coding.positive);
    let neg = data.rows_of(coding.negative);
    let (pi_pos, pi_neg) = coding.priors();

    let mut maps = Vec::with_capacity(data.p());
    let mut mu = Vec::with_capacity(data.p());
    let mut degenerate = Vec::with_capacity(data.p());
    for j in 0..data.p() {
        let fp = EcdfTable::fit(&data.column_values(j, &pos), a, b)?;
        let fm = EcdfTable::fit(&data.column_values(j, &neg), a, b)?;
        let col = data.x.column(j);
        let h = |x: f64| probit(fp.evaluate(x));

        let inside = |x: f64| {
            let u = fp.raw(x);
            u > a && u < b
        };
        let n_neg = neg.len() as f64;
        let q = neg.iter().filter(|&&i| inside(col[i])).count() as f64 / n_neg;
        if q == 0.0 {
            return Err(Error::LegacyDegenerate { feature: j });
        }
        let truncated_sum = neg
            .iter()
            .filter(|&&i| inside(col[i]))
            .map(|&i| h(col[i]))
            .sum::<f64>()
            / n_neg;
        let upper_term = norm_pdf(inv_norm_cdf_extended(fm.raw(fp.quantile(b))));
        let lower_term = norm_pdf(inv_norm_cdf_extended(fm.raw(fp.quantile(a))));
        mu.push((truncated_sum + upper_term - lower_term) / q);

        maps.push(StepMap::tabulate(fp.sorted_values().iter().copied(), h));
        degenerate.push(fp.is_degenerate());
    }
    Ok(TransformModel::from_parts(
        Variant::Legacy,
        maps,
        degenerate,
        coding_labels(data, &coding),
        vec![pi_pos, pi_neg],
    )
    .with_mu_minus(mu))
}

/// Pooled estimator for K ≥ 2 classes.
///
/// The reference class (shift 0) is the largest class, ties going to the
/// first label, so that K = 2 matches the binary "+" coding. Classes are
/// stored in that order. With `G_l = Φ⁻¹ ∘ F̂_l` for class `l`,
///
/// `μ̂_k^(l) = mean_{Y=k} G_l(X) − mean_{Y=ref} G_l(X)`,
/// `μ̂_k = Σ_l π̂_l μ̂_k^(l)`, and `ĥ = Σ_k π̂_k (G_k + μ̂_k)`.
pub fn fit_multiclass_pooled(data: &Dataset) -> Result<TransformModel> {
    let counts = data.class_counts();
    if counts.len() < 2 {
        return Err(Error::InsufficientClassData(
            "need at least two classes".into(),
        ));
    }
    if let Some(k) = counts.iter().position(|&c| c < 2) {
        return Err(Error::InsufficientClassData(format!(
            "class {:?} has {} observation(s), need at least 2",
            data.classes[k], counts[k]
        )));
    }
    // largest first; stable sort keeps label order among ties
    let mut order: Vec<usize> = (0..counts.len()).collect();
    order.sort_by(|&a, &b| counts[b].cmp(&counts[a]));

    let n = data.n() as f64;
    let rows: Vec<Vec<usize>> = order.iter().map(|&k| data.rows_of(k)).collect();
    let priors: Vec<f64> = order.iter().map(|&k| counts[k] as f64 / n).collect();
    let tables: Vec<Vec<EcdfTable>> = rows
        .iter()
        .map(|r| class_tables(data, r))
        .collect::<Result<_>>()?;
    let kk = order.len();

    let mut maps = Vec::with_capacity(data.p());
    let mut degenerate = Vec::with_capacity(data.p());
    let mut shifts = vec![Vec::with_capacity(data.p()); kk];
    for j in 0..data.p() {
        let col = data.x.column(j);
        // class_mean[k][l] = mean over class k of G_l
        let class_mean: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| {
                tables
                    .iter()
                    .map(|t| mean(r.iter().map(|&i| probit(t[j].evaluate(col[i])))))
                    .collect()
            })
            .collect();
        let mu: Vec<f64> = (0..kk)
            .map(|k| {
                (0..kk)
                    .map(|l| priors[l] * (class_mean[k][l] - class_mean[0][l]))
                    .sum()
            })
            .collect();
        let map = StepMap::tabulate(col.iter().copied(), |x| {
            (0..kk)
                .map(|k| priors[k] * (probit(tables[k][j].evaluate(x)) + mu[k]))
                .sum()
        });
        maps.push(map);
        degenerate.push(tables.iter().any(|t| t[j].is_degenerate()));
        for k in 0..kk {
            shifts[k].push(mu[k]);
        }
    }
    let classes = order.iter().map(|&k| data.classes[k].clone()).collect();
    Ok(
        TransformModel::from_parts(Variant::Pooled, maps, degenerate, classes, priors)
            .with_class_shifts(shifts),
    )
}

fn coding_labels(data: &Dataset, coding: &BinaryCoding) -> Vec<String> {
    vec![
        data.classes[coding.positive].clone(),
        data.classes[coding.negative].clone(),
    ]
}
