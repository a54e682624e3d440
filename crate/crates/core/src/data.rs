//! The feature-matrix-plus-labels container shared by every stage.

use std::cmp::Ordering;

use ndarray::{Array1, Array2, ArrayView1};

use crate::error::{Error, Result};

/// An n×p feature matrix with one class label per row.
///
/// Labels are stored as indices into `classes`, which is kept in canonical
/// label order: numeric order when every label parses as a number,
/// lexicographic otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub x: Array2<f64>,
    pub y: Vec<usize>,
    pub classes: Vec<String>,
}

impl Dataset {
    pub fn new<S: AsRef<str>>(x: Array2<f64>, labels: &[S]) -> Result<Self> {
        if labels.len() != x.nrows() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} rows",
                labels.len(),
                x.nrows()
            )));
        }
        if let Some(((i, j), v)) = x.indexed_iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite value {v} at row {i}, column {j}"
            )));
        }
        let mut classes: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        classes.sort_by(|a, b| compare_labels(a, b));
        classes.dedup();
        let y = labels
            .iter()
            .map(|l| classes.iter().position(|c| c == l.as_ref()).unwrap())
            .collect();
        Ok(Dataset { x, y, classes })
    }

    /// Binary dataset from ±1 labels, stored as the strings "1" and "-1".
    pub fn from_signs(x: Array2<f64>, signs: &[f64]) -> Result<Self> {
        let labels: Vec<&str> = signs
            .iter()
            .map(|&s| if s > 0.0 { "1" } else { "-1" })
            .collect();
        Dataset::new(x, &labels)
    }

    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    pub fn p(&self) -> usize {
        self.x.ncols()
    }

    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.classes.len()];
        for &k in &self.y {
            counts[k] += 1;
        }
        counts
    }

    /// Row indices belonging to class `k`, in row order.
    pub fn rows_of(&self, k: usize) -> Vec<usize> {
        self.y
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| (c == k).then_some(i))
            .collect()
    }

    /// Values of feature `j` for the given rows.
    pub fn column_values(&self, j: usize, rows: &[usize]) -> Vec<f64> {
        let col = self.x.column(j);
        rows.iter().map(|&i| col[i]).collect()
    }

    /// Subset of rows, keeping the full class list.
    pub fn select_rows(&self, rows: &[usize]) -> Dataset {
        Dataset {
            x: self.x.select(ndarray::Axis(0), rows),
            y: rows.iter().map(|&i| self.y[i]).collect(),
            classes: self.classes.clone(),
        }
    }
}

pub(crate) fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) => x.partial_cmp(&y).unwrap_or(Ordering::Equal).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// Majority-class coding for a two-class problem.
///
/// The larger class is "+". On a tie the class that comes first in label
/// order is "+".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryCoding {
    pub positive: usize,
    pub negative: usize,
    pub n_positive: usize,
    pub n_negative: usize,
}

impl BinaryCoding {
    pub fn from_dataset(data: &Dataset) -> Result<Self> {
        let counts = data.class_counts();
        match counts.len() {
            0 | 1 => {
                return Err(Error::InsufficientClassData(
                    "need two classes, found at most one".into(),
                ))
            }
            2 => {}
            k => {
                return Err(Error::InvalidArgument(format!(
                    "{k} classes present; the classifier is binary (the multiclass transform is available separately)"
                )))
            }
        }
        let (positive, negative) = if counts[1] > counts[0] { (1, 0) } else { (0, 1) };
        let coding = BinaryCoding {
            positive,
            negative,
            n_positive: counts[positive],
            n_negative: counts[negative],
        };
        if coding.n_negative < 2 {
            return Err(Error::InsufficientClassData(format!(
                "class {:?} has {} observation(s), need at least 2",
                data.classes[negative], coding.n_negative
            )));
        }
        Ok(coding)
    }

    /// ±1 response vector for the regression.
    pub fn signs(&self, data: &Dataset) -> Array1<f64> {
        data.y
            .iter()
            .map(|&k| if k == self.positive { 1.0 } else { -1.0 })
            .collect()
    }

    pub fn priors(&self) -> (f64, f64) {
        let n = (self.n_positive + self.n_negative) as f64;
        (self.n_positive as f64 / n, self.n_negative as f64 / n)
    }
}

/// Counts of +1 and -1 entries in a sign vector.
pub(crate) fn sign_counts(y: ArrayView1<f64>) -> (usize, usize) {
    let pos = y.iter().filter(|&&v| v > 0.0).count();
    (pos, y.len() - pos)
}
