use crate::error::{Error, Result};

/// Winsorized empirical CDF of one feature within one class.
///
/// The raw ECDF is right-continuous, `F(x) = #{v_i <= x} / n`, and
/// [`EcdfTable::evaluate`] clamps it into `[lower, upper]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EcdfTable {
    sorted_values: Vec<f64>,
    lower: f64,
    upper: f64,
}

impl EcdfTable {
    pub fn fit(values: &[f64], lower: f64, upper: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InsufficientClassData(format!(
                "ECDF needs at least 2 values, got {}",
                values.len()
            )));
        }
        if !(lower > 0.0 && lower < upper && upper < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "Winsorization bounds must satisfy 0 < a < b < 1, got ({lower}, {upper})"
            )));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidArgument("NaN in ECDF sample".into()));
        }
        let mut sorted_values = values.to_vec();
        sorted_values.sort_by(f64::total_cmp);
        Ok(EcdfTable {
            sorted_values,
            lower,
            upper,
        })
    }

    /// Bounds `(1/n^2, 1 - 1/n^2)` used by the naive and pooled estimators.
    pub fn fit_sample_size_bounds(values: &[f64]) -> Result<Self> {
        let n = values.len() as f64;
        let a = 1.0 / (n * n);
        EcdfTable::fit(values, a, 1.0 - a)
    }

    pub fn n(&self) -> usize {
        self.sorted_values.len()
    }

    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted_values
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    /// All sample values identical.
    pub fn is_degenerate(&self) -> bool {
        self.sorted_values[0] == self.sorted_values[self.n() - 1]
    }

    pub fn count_le(&self, x: f64) -> usize {
        self.sorted_values.partition_point(|&v| v <= x)
    }

    /// Unclamped ECDF.
    pub fn raw(&self, x: f64) -> f64 {
        self.count_le(x) as f64 / self.n() as f64
    }

    /// Winsorized ECDF. A degenerate sample evaluates to the upper bound
    /// everywhere.
    pub fn evaluate(&self, x: f64) -> f64 {
        if self.is_degenerate() {
            return self.upper;
        }
        self.raw(x).clamp(self.lower, self.upper)
    }

    /// Generalized inverse of the raw ECDF: the smallest sample value `x`
    /// with `F(x) >= u`. Returns `+inf` for `u > 1` and the minimum for `u <= 0`.
    pub fn quantile(&self, u: f64) -> f64 {
        let n = self.n();
        if u > 1.0 {
            return f64::INFINITY;
        }
        // smallest k with k/n >= u
        let mut k = (u * n as f64).ceil().max(1.0) as usize;
        k = k.min(n);
        while k > 1 && (k - 1) as f64 / n as f64 >= u {
            k -= 1;
        }
        while k < n && (k as f64 / n as f64) < u {
            k += 1;
        }
        // with ties, F(sorted[k-1]) >= k/n and sorted[k-1] is the smallest such value
        self.sorted_values[k - 1]
    }
}
