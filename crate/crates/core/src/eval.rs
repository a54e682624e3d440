//! Replication harness: fresh train/test draws per replication, one fit per
//! method, test error and TRUE/FALSE selection counts, then medians with
//! bootstrap standard errors.

use std::fmt::Write as _;
use std::io::Write;

use ndarray::{Array1, ArrayView1};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dsda::{fit_ssda, fit_with_transform, kkt_violation, predict, SsdaConfig, Tuning};
use crate::error::{Error, Result};
use crate::simulate::{derive_seed, oracle_transform, sample_with_latent, Sample, Series, SimulationSpec};
use crate::transforms::{TransformModel, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Bayes,
    OracleDsda,
    SsdaNaive,
    SsdaPooled,
    DsdaRaw,
}

impl Method {
    /// Column order of the summary table.
    pub const ALL: [Method; 5] = [
        Method::Bayes,
        Method::OracleDsda,
        Method::SsdaNaive,
        Method::SsdaPooled,
        Method::DsdaRaw,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Bayes => "bayes",
            Method::OracleDsda => "oracle-dsda",
            Method::SsdaNaive => "ssda-naive",
            Method::SsdaPooled => "ssda-pooled",
            Method::DsdaRaw => "dsda-raw",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkConfig {
    pub methods: Vec<Method>,
    pub reps: usize,
    pub test_size: usize,
    pub seed: u64,
    pub folds: usize,
    pub grid_size: usize,
    pub bootstrap: usize,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            methods: Method::ALL.to_vec(),
            reps: 100,
            test_size: 10_000,
            seed: 1,
            folds: 5,
            grid_size: 50,
            bootstrap: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicationRecord {
    pub replication: usize,
    pub method: Method,
    /// Seed of the training draw.
    pub seed: u64,
    pub test_error: Option<f64>,
    pub true_sel: Option<usize>,
    pub false_sel: Option<usize>,
    pub lambda: Option<f64>,
    pub active_set: Vec<usize>,
    /// Largest KKT violation of the fitted coefficients on the training data.
    pub kkt: Option<f64>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub median: f64,
    pub se: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodAggregate {
    pub method: Method,
    pub test_error: Summary,
    pub true_sel: Summary,
    pub false_sel: Summary,
    pub n_ok: usize,
    pub n_failed: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub model: u8,
    pub series: Series,
    pub n: usize,
    pub p: usize,
    pub config: BenchmarkConfig,
    pub records: Vec<ReplicationRecord>,
    pub aggregates: Vec<MethodAggregate>,
}

/// `(|Â ∩ A|, |Â \ A|)` with `A` the support of `beta_bayes`.
pub fn selection_counts(beta_hat: ArrayView1<f64>, beta_bayes: ArrayView1<f64>) -> Result<(usize, usize)> {
    if beta_hat.len() != beta_bayes.len() {
        return Err(Error::DimensionMismatch {
            expected: beta_bayes.len(),
            found: beta_hat.len(),
        });
    }
    let mut hits = 0;
    let mut false_hits = 0;
    for (b, t) in beta_hat.iter().zip(beta_bayes.iter()) {
        if *b != 0.0 {
            if *t != 0.0 {
                hits += 1;
            } else {
                false_hits += 1;
            }
        }
    }
    Ok((hits, false_hits))
}

/// Fraction of mismatched ±1 labels.
pub fn test_error(predictions: &[f64], labels: &[f64]) -> Result<f64> {
    if predictions.len() != labels.len() {
        return Err(Error::DimensionMismatch {
            expected: labels.len(),
            found: predictions.len(),
        });
    }
    if labels.is_empty() {
        return Err(Error::InvalidArgument("no labels to score".into()));
    }
    let wrong = predictions.iter().zip(labels).filter(|(p, l)| p != l).count();
    Ok(wrong as f64 / labels.len() as f64)
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Sample median and the standard deviation of medians over `b` bootstrap
/// resamples drawn with replacement from a ChaCha8 stream.
pub fn median_bootstrap_se(values: &[f64], b: usize, seed: u64) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("median of an empty sample".into()));
    }
    if b < 100 {
        return Err(Error::InvalidArgument(format!("need at least 100 resamples, got {b}")));
    }
    let n = values.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut resample = vec![0.0; n];
    let medians: Vec<f64> = (0..b)
        .map(|_| {
            for slot in resample.iter_mut() {
                *slot = values[rng.gen_range(0..n)];
            }
            median(&resample)
        })
        .collect();
    // Welford: a constant sample gives exactly zero spread
    let (mut mean, mut m2) = (0.0, 0.0);
    for (k, &m) in medians.iter().enumerate() {
        let d = m - mean;
        mean += d / (k + 1) as f64;
        m2 += d * (m - mean);
    }
    Ok((median(values), (m2 / (b - 1) as f64).sqrt()))
}

fn ssda_config(variant: Variant, folds: usize, grid_size: usize, seed: u64) -> SsdaConfig {
    SsdaConfig {
        variant,
        tuning: Tuning::Cv { folds, grid_size, seed },
        ..SsdaConfig::default()
    }
}

fn run_method(
    spec: &SimulationSpec,
    method: Method,
    train: &Sample,
    test: &Sample,
    config: &BenchmarkConfig,
    cv_seed: u64,
) -> Result<Outcome> {
    if method == Method::Bayes {
        let preds: Vec<f64> = test.latent.rows().into_iter().map(|v| spec.bayes_rule(v)).collect();
        return Ok(Outcome {
            err: test_error(&preds, &test.signs)?,
            true_sel: spec.support().len(),
            false_sel: 0,
            lambda: None,
            active_set: spec.support(),
            kkt: None,
        });
    }
    let (transform, fit) = match method {
        Method::SsdaNaive | Method::SsdaPooled => {
            let variant = if method == Method::SsdaNaive { Variant::Naive } else { Variant::Pooled };
            fit_ssda(&train.data, &ssda_config(variant, config.folds, config.grid_size, cv_seed))?
        }
        Method::DsdaRaw | Method::OracleDsda => {
            let transform = if method == Method::DsdaRaw {
                TransformModel::identity(spec.p())
            } else {
                oracle_transform(spec)
            };
            let tuning = Tuning::Cv {
                folds: config.folds,
                grid_size: config.grid_size,
                seed: cv_seed,
            };
            let fit = fit_with_transform(&train.data, &transform, tuning)?;
            (transform, fit)
        }
        Method::Bayes => unreachable!(),
    };
    let pred = predict(&fit, &transform, test.data.x.view())?;
    let pred_signs: Vec<f64> = pred
        .labels
        .iter()
        .map(|l| if l == "1" { 1.0 } else { -1.0 })
        .collect();
    let err = test_error(&pred_signs, &test.signs)?;
    let (t, f) = selection_counts(fit.beta.view(), spec.beta_bayes.view())?;
    let h = transform.apply(train.data.x.view())?;
    let y: Array1<f64> = train
        .data
        .y
        .iter()
        .map(|&k| if train.data.classes[k] == fit.classes.0 { 1.0 } else { -1.0 })
        .collect();
    let kkt = kkt_violation(h.view(), y.view(), fit.beta.view(), fit.lambda)?;
    Ok(Outcome {
        err,
        true_sel: t,
        false_sel: f,
        lambda: Some(fit.lambda),
        active_set: fit.active_set,
        kkt: Some(kkt),
    })
}

struct Outcome {
    err: f64,
    true_sel: usize,
    false_sel: usize,
    lambda: Option<f64>,
    active_set: Vec<usize>,
    kkt: Option<f64>,
}

/// Training-draw seed of replication `r`; shared by both series.
pub fn train_seed(master: u64, model: u8, r: usize) -> u64 {
    derive_seed(master, &[model as u64, r as u64, 0])
}

fn test_seed(master: u64, model: u8, r: usize) -> u64 {
    derive_seed(master, &[model as u64, r as u64, 1])
}

fn cv_seed(master: u64, model: u8, r: usize) -> u64 {
    derive_seed(master, &[model as u64, r as u64, 2])
}

pub fn run_benchmark(spec: &SimulationSpec, config: &BenchmarkConfig) -> Result<BenchmarkReport> {
    if config.reps == 0 {
        return Err(Error::InvalidArgument("reps must be at least 1".into()));
    }
    if config.test_size == 0 {
        return Err(Error::InvalidArgument("test size must be at least 1".into()));
    }
    if config.methods.is_empty() {
        return Err(Error::InvalidArgument("no methods requested".into()));
    }
    let per_rep: Vec<Vec<ReplicationRecord>> = (0..config.reps)
        .into_par_iter()
        .map(|r| {
            let seed = train_seed(config.seed, spec.model, r);
            let train = sample_with_latent(spec, spec.n, seed);
            let test = sample_with_latent(spec, config.test_size, test_seed(config.seed, spec.model, r));
            let cv = cv_seed(config.seed, spec.model, r);
            config
                .methods
                .iter()
                .map(|&method| match run_method(spec, method, &train, &test, config, cv) {
                    Ok(o) => ReplicationRecord {
                        replication: r,
                        method,
                        seed,
                        test_error: Some(o.err),
                        true_sel: Some(o.true_sel),
                        false_sel: Some(o.false_sel),
                        lambda: o.lambda,
                        active_set: o.active_set,
                        kkt: o.kkt,
                        failure: None,
                    },
                    Err(e) => {
                        log::warn!("replication {r}, {method}: {e}");
                        ReplicationRecord {
                            replication: r,
                            method,
                            seed,
                            test_error: None,
                            true_sel: None,
                            false_sel: None,
                            lambda: None,
                            active_set: Vec::new(),
                            kkt: None,
                            failure: Some(e.to_string()),
                        }
                    }
                })
                .collect()
        })
        .collect();
    let records: Vec<ReplicationRecord> = per_rep.into_iter().flatten().collect();
    let aggregates = aggregate(&records, &config.methods, config.bootstrap, config.seed)?;
    Ok(BenchmarkReport {
        model: spec.model,
        series: spec.series,
        n: spec.n,
        p: spec.p(),
        config: config.clone(),
        records,
        aggregates,
    })
}

/// Per-method medians and bootstrap SEs over successful replications.
pub fn aggregate(
    records: &[ReplicationRecord],
    methods: &[Method],
    bootstrap: usize,
    seed: u64,
) -> Result<Vec<MethodAggregate>> {
    methods
        .iter()
        .enumerate()
        .map(|(mi, &method)| {
            let ok: Vec<&ReplicationRecord> = records
                .iter()
                .filter(|r| r.method == method && r.failure.is_none())
                .collect();
            let n_failed = records.iter().filter(|r| r.method == method && r.failure.is_some()).count();
            let summarize = |stat: u64, values: Vec<f64>| -> Result<Summary> {
                if values.is_empty() {
                    return Ok(Summary { median: f64::NAN, se: f64::NAN });
                }
                let (median, se) =
                    median_bootstrap_se(&values, bootstrap, derive_seed(seed, &[0xb007, mi as u64, stat]))?;
                Ok(Summary { median, se })
            };
            Ok(MethodAggregate {
                method,
                test_error: summarize(0, ok.iter().map(|r| r.test_error.unwrap()).collect())?,
                true_sel: summarize(1, ok.iter().map(|r| r.true_sel.unwrap() as f64).collect())?,
                false_sel: summarize(2, ok.iter().map(|r| r.false_sel.unwrap() as f64).collect())?,
                n_ok: ok.len(),
                n_failed,
            })
        })
        .collect()
}

impl BenchmarkReport {
    pub fn aggregate_for(&self, method: Method) -> Option<&MethodAggregate> {
        self.aggregates.iter().find(|a| a.method == method)
    }

    pub fn records_for(&self, method: Method) -> impl Iterator<Item = &ReplicationRecord> {
        self.records.iter().filter(move |r| r.method == method)
    }

    /// One CSV row per (replication, method).
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record([
            "model", "series", "replication", "method", "seed", "test_error", "true_sel", "false_sel",
            "lambda", "active_size", "kkt", "failure",
        ])
        .map_err(csv_err)?;
        let opt = |v: Option<String>| v.unwrap_or_default();
        for r in &self.records {
            w.write_record([
                self.model.to_string(),
                self.series.to_string(),
                r.replication.to_string(),
                r.method.to_string(),
                r.seed.to_string(),
                opt(r.test_error.map(|v| v.to_string())),
                opt(r.true_sel.map(|v| v.to_string())),
                opt(r.false_sel.map(|v| v.to_string())),
                opt(r.lambda.map(|v| v.to_string())),
                r.active_set.len().to_string(),
                opt(r.kkt.map(|v| v.to_string())),
                opt(r.failure.clone()),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Human-readable table: rows Error(%), TRUE selection, FALSE selection,
    /// each followed by bootstrap SEs in parentheses; one column per method.
    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let c = &self.config;
        let _ = writeln!(
            s,
            "# model={} series={} n={} p={} reps={} test_size={} seed={} folds={} grid_size={} bootstrap={}",
            self.model, self.series, self.n, self.p, c.reps, c.test_size, c.seed, c.folds, c.grid_size, c.bootstrap
        );
        let width = 13;
        let _ = write!(s, "{:<18}", format!("Model {} ({})", self.model, self.series));
        for a in &self.aggregates {
            let _ = write!(s, "{:>width$}", a.method.as_str());
        }
        s.push('\n');
        let mut row = |label: &str, get: &dyn Fn(&MethodAggregate) -> Summary, scale: f64, prec: usize| {
            let _ = write!(s, "{label:<18}");
            for a in &self.aggregates {
                let _ = write!(s, "{:>width$.prec$}", get(a).median * scale);
            }
            s.push('\n');
            let _ = write!(s, "{:<18}", "");
            for a in &self.aggregates {
                let _ = write!(s, "{:>width$}", format!("({:.2})", get(a).se * scale));
            }
            s.push('\n');
        };
        row("Error(%)", &|a| a.test_error, 100.0, 2);
        row("TRUE selection", &|a| a.true_sel, 1.0, 1);
        row("FALSE selection", &|a| a.false_sel, 1.0, 1);
        let failed: Vec<String> = self
            .aggregates
            .iter()
            .filter(|a| a.n_failed > 0)
            .map(|a| format!("{}: {}", a.method, a.n_failed))
            .collect();
        if !failed.is_empty() {
            let _ = writeln!(s, "# failed fits excluded: {}", failed.join(", "));
        }
        s
    }
}
