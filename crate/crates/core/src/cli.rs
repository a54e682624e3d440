//! Command-line front end.
//!
//! Subcommands: `fit`, `predict`, `transform`, `simulate`, `benchmark`.
//! Every option can also be given in a `key=value` file passed with
//! `--config`; flags on the command line take precedence.
//!
//! Exit codes:
//!
//! | code | meaning                                                   |
//! |------|-----------------------------------------------------------|
//! | 0    | success                                                   |
//! | 1    | other errors (I/O, invalid arguments, bad model files)     |
//! | 2    | command-line usage error                                  |
//! | 3    | input parse error (malformed CSV, non-finite cell)        |
//! | 4    | dimension mismatch between model and data                 |
//! | 5    | fitting failed (too few observations, degenerate fit, …)  |

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use ndarray::Array2;

use crate::data::Dataset;
use crate::dsda::{self, DsdaFit, SsdaConfig, Tuning};
use crate::error::{Error, Result};
use crate::eval::{run_benchmark, BenchmarkConfig, Method};
use crate::simulate::{sample_model, Series, SimulationSpec, SpecOverrides};
use crate::transforms::{fit_multiclass_pooled, TransformModel, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DIMENSION: i32 = 4;
pub const EXIT_FIT: i32 = 5;

pub const TRANSFORM_FILE: &str = "transform.json";
pub const FIT_FILE: &str = "fit.json";

#[derive(Debug, Parser)]
#[command(name = "ssda", version, about = "Sparse semiparametric discriminant analysis")]
pub struct Cli {
    /// key=value settings file; command-line flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a transform and a sparse discriminant rule to a labelled CSV
    Fit(FitArgs),
    /// Classify the rows of a CSV with a fitted model
    Predict(PredictArgs),
    /// Estimate a marginal transform only (supports more than two classes)
    Transform(TransformArgs),
    /// Draw a dataset from one of the benchmark models
    Simulate(SimulateArgs),
    /// Run replicated benchmark simulations and summarize them
    Benchmark(BenchmarkArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub label_col: Option<String>,
    /// naive | pooled | legacy | identity
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub folds: Option<usize>,
    #[arg(long)]
    pub grid_size: Option<usize>,
    /// Use this penalty instead of cross-validation
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Directory written by `fit`
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Label column to ignore if present in the input
    #[arg(long)]
    pub label_col: Option<String>,
    /// Output CSV; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub label_col: Option<String>,
    /// naive | pooled | legacy | identity (pooled is used for three or more classes)
    #[arg(long)]
    pub variant: Option<String>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub model: Option<u8>,
    #[arg(long)]
    pub series: Option<String>,
    /// Number of rows (defaults to the model's training size)
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output CSV
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchmarkArgs {
    #[arg(long)]
    pub model: Option<u8>,
    #[arg(long)]
    pub series: Option<String>,
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long)]
    pub test_size: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub folds: Option<usize>,
    #[arg(long)]
    pub grid_size: Option<usize>,
    /// Comma-separated subset of bayes,oracle-dsda,ssda-naive,ssda-pooled,dsda-raw
    #[arg(long)]
    pub methods: Option<String>,
    #[arg(long)]
    pub bootstrap: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub rho: Option<f64>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command, reports
/// errors on stderr, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        Error::Parse { .. } => EXIT_PARSE,
        Error::DimensionMismatch { .. } => EXIT_DIMENSION,
        Error::InsufficientClassData(_)
        | Error::LegacyDegenerate { .. }
        | Error::DegenerateProjection
        | Error::FoldConstruction(_)
        | Error::Convergence { .. } => EXIT_FIT,
        _ => EXIT_OTHER,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    match cli.command {
        Command::Fit(a) => cmd_fit(&a, &file),
        Command::Predict(a) => cmd_predict(&a, &file),
        Command::Transform(a) => cmd_transform(&a, &file),
        Command::Simulate(a) => cmd_simulate(&a, &file),
        Command::Benchmark(a) => cmd_benchmark(&a, &file),
    }
}

/// `key=value` lines; `#` starts a comment. Keys may use `-` or `_`.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        ConfigFile::parse(&fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: format!("expected key=value, got {line:?}"),
            })?;
            values.insert(k.trim().replace('_', "-"), v.trim().to_owned());
        }
        Ok(ConfigFile { values })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.values
            .get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| Error::InvalidArgument(format!("config key {key}: {e}")))
            })
            .transpose()
    }

    /// The flag value if given, else the config value, else `default`.
    fn pick<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        Ok(match flag {
            Some(v) => v,
            None => self.get(key)?.unwrap_or(default),
        })
    }

    fn require<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        match flag {
            Some(v) => Ok(v),
            None => self
                .get(key)?
                .ok_or_else(|| Error::Usage(format!("--{key} is required"))),
        }
    }
}

/// A parsed CSV: features, optional label column, and feature names.
#[derive(Debug, Clone)]
pub struct CsvTable {
    pub x: Array2<f64>,
    pub labels: Option<Vec<String>>,
    pub feature_names: Vec<String>,
}

/// Reads a comma-separated file with a header row. The column named
/// `label_col` (if present) is taken as labels; every other cell must be a
/// finite number. `require_label` makes a missing label column an error.
pub fn read_csv(path: &Path, label_col: &str, require_label: bool) -> Result<Option<CsvTable>> {
    let text = fs::read_to_string(path)?;
    parse_csv(&text, label_col, require_label)
}

/// As [`read_csv`] on in-memory text. Returns `None` for an empty input.
pub fn parse_csv(text: &str, label_col: &str, require_label: bool) -> Result<Option<CsvTable>> {
    if text.trim().is_empty() {
        return Ok(None);
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let parse_err = |line: u64, msg: String| Error::Parse { line: line as usize, msg };
    let headers = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    let label_idx = headers.iter().position(|h| h == label_col);
    if require_label && label_idx.is_none() {
        return Err(parse_err(1, format!("no column named {label_col:?} in header")));
    }
    let feature_names: Vec<String> = headers
        .iter()
        .enumerate()
        .filter(|&(i, _)| Some(i) != label_idx)
        .map(|(_, h)| h.to_owned())
        .collect();
    let width = headers.len();
    let mut cells = Vec::new();
    let mut labels = Vec::new();
    let mut rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != width {
            return Err(parse_err(
                line,
                format!("expected {width} fields, found {}", record.len()),
            ));
        }
        for (i, cell) in record.iter().enumerate() {
            if Some(i) == label_idx {
                if cell.is_empty() {
                    return Err(parse_err(line, "missing label".into()));
                }
                labels.push(cell.to_owned());
                continue;
            }
            let v: f64 = cell.parse().map_err(|_| {
                parse_err(line, format!("column {:?}: {cell:?} is not a number", headers.get(i).unwrap_or("")))
            })?;
            if !v.is_finite() {
                return Err(parse_err(
                    line,
                    format!("column {:?}: non-finite value {cell:?}", headers.get(i).unwrap_or("")),
                ));
            }
            cells.push(v);
        }
        rows += 1;
    }
    let x = Array2::from_shape_vec((rows, feature_names.len()), cells)
        .expect("row widths were checked");
    Ok(Some(CsvTable {
        x,
        labels: label_idx.map(|_| labels),
        feature_names,
    }))
}

fn read_dataset(path: &Path, label_col: &str) -> Result<(Dataset, Vec<String>)> {
    let table = read_csv(path, label_col, true)?
        .ok_or_else(|| Error::InsufficientClassData(format!("{} is empty", path.display())))?;
    let data = Dataset::new(table.x, &table.labels.unwrap_or_default())?;
    Ok((data, table.feature_names))
}

fn parse_variant(s: &str) -> Result<Variant> {
    match s.parse::<Variant>()? {
        Variant::Oracle => Err(Error::InvalidArgument(
            "the oracle variant is only available in simulations".into(),
        )),
        v => Ok(v),
    }
}

fn training_error(fit: &DsdaFit, transform: &TransformModel, data: &Dataset) -> Result<f64> {
    let pred = dsda::predict(fit, transform, data.x.view())?;
    let wrong = pred
        .labels
        .iter()
        .zip(&data.y)
        .filter(|(l, &k)| **l != data.classes[k])
        .count();
    Ok(wrong as f64 / data.n() as f64)
}

pub fn cmd_fit(a: &FitArgs, file: &ConfigFile) -> Result<()> {
    let input: PathBuf = file.require(a.input.clone(), "input")?;
    let out: PathBuf = file.require(a.out.clone(), "out")?;
    let label_col: String = file.pick(a.label_col.clone(), "label-col", "label".into())?;
    let variant = parse_variant(&file.pick(a.variant.clone(), "variant", "naive".to_owned())?)?;
    let folds = file.pick(a.folds, "folds", 5)?;
    let grid_size = file.pick(a.grid_size, "grid-size", 50)?;
    let seed = file.pick(a.seed, "seed", 0)?;
    let lambda: Option<f64> = match a.lambda {
        Some(l) => Some(l),
        None => file.get("lambda")?,
    };
    let tuning = match lambda {
        Some(lambda) => Tuning::Fixed { lambda },
        None => Tuning::Cv { folds, grid_size, seed },
    };

    let (data, _) = read_dataset(&input, &label_col)?;
    if data.classes.len() > 2 {
        return Err(Error::InvalidArgument(format!(
            "{} classes found; the classifier handles two classes only. \
             Use the `transform` command for the multiclass transform",
            data.classes.len()
        )));
    }
    let config = SsdaConfig { variant, tuning, ..SsdaConfig::default() };
    let (transform, fit) = dsda::fit_ssda(&data, &config)?;
    let train_err = training_error(&fit, &transform, &data)?;

    fs::create_dir_all(&out)?;
    transform.save(out.join(TRANSFORM_FILE))?;
    fit.save(out.join(FIT_FILE))?;

    let mut s = String::new();
    let _ = writeln!(s, "input: {}", input.display());
    let _ = writeln!(s, "label_col: {label_col}");
    let _ = writeln!(s, "variant: {variant}");
    match tuning {
        Tuning::Cv { folds, grid_size, seed } => {
            let _ = writeln!(s, "tuning: cv folds={folds} grid_size={grid_size} seed={seed}");
        }
        Tuning::Fixed { lambda } => {
            let _ = writeln!(s, "tuning: fixed lambda={lambda}");
        }
    }
    let _ = writeln!(s, "n: {}", data.n());
    let _ = writeln!(s, "p: {}", data.p());
    let _ = writeln!(s, "positive_class: {}", fit.classes.0);
    let _ = writeln!(s, "negative_class: {}", fit.classes.1);
    let _ = writeln!(s, "lambda: {}", fit.lambda);
    let _ = writeln!(s, "active_set_size: {}", fit.active_set.len());
    let _ = writeln!(s, "active_set: {:?}", fit.active_set);
    let _ = writeln!(s, "intercept: {}", fit.beta0);
    let _ = writeln!(s, "training_error: {train_err}");
    if !transform.degenerate_features().is_empty() {
        let _ = writeln!(s, "degenerate_features: {:?}", transform.degenerate_features());
    }
    fs::write(out.join("summary.txt"), &s)?;
    print!("{s}");
    Ok(())
}

pub fn cmd_predict(a: &PredictArgs, file: &ConfigFile) -> Result<()> {
    let input: PathBuf = file.require(a.input.clone(), "input")?;
    let model: PathBuf = file.require(a.model.clone(), "model")?;
    let label_col: String = file.pick(a.label_col.clone(), "label-col", "label".into())?;
    let out: Option<PathBuf> = match &a.out {
        Some(o) => Some(o.clone()),
        None => file.get("out")?,
    };
    let transform = TransformModel::load(model.join(TRANSFORM_FILE))?;
    let fit = DsdaFit::load(model.join(FIT_FILE))?;

    let mut sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    let Some(table) = read_csv(&input, &label_col, false)? else {
        sink.flush()?;
        return Ok(());
    };
    if table.x.ncols() != fit.p() {
        return Err(Error::DimensionMismatch { expected: fit.p(), found: table.x.ncols() });
    }
    let pred = dsda::predict(&fit, &transform, table.x.view())?;
    let mut w = csv::Writer::from_writer(sink);
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(["row", "label", "score"]).map_err(csv_err)?;
    for (i, (label, score)) in pred.labels.iter().zip(&pred.scores).enumerate() {
        w.write_record([i.to_string(), label.clone(), score.to_string()])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_transform(a: &TransformArgs, file: &ConfigFile) -> Result<()> {
    let input: PathBuf = file.require(a.input.clone(), "input")?;
    let out: PathBuf = file.require(a.out.clone(), "out")?;
    let label_col: String = file.pick(a.label_col.clone(), "label-col", "label".into())?;
    let variant = parse_variant(&file.pick(a.variant.clone(), "variant", "pooled".to_owned())?)?;
    let (data, feature_names) = read_dataset(&input, &label_col)?;
    let transform = if data.classes.len() > 2 {
        if variant != Variant::Pooled {
            return Err(Error::InvalidArgument(format!(
                "{} classes found; only the pooled variant supports more than two",
                data.classes.len()
            )));
        }
        fit_multiclass_pooled(&data)?
    } else {
        let config = SsdaConfig { variant, ..SsdaConfig::default() };
        dsda::fit_transform(&data, &config)?
    };
    let h = transform.apply(data.x.view())?;

    fs::create_dir_all(&out)?;
    transform.save(out.join(TRANSFORM_FILE))?;
    let mut w = csv::Writer::from_path(out.join("transformed.csv"))
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    let mut header = feature_names;
    header.push(label_col.clone());
    w.write_record(&header).map_err(csv_err)?;
    for (row, &k) in h.rows().into_iter().zip(&data.y) {
        let mut rec: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        rec.push(data.classes[k].clone());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    println!(
        "variant: {}\nclasses: {}\nn: {}\np: {}",
        transform.variant(),
        data.classes.join(","),
        data.n(),
        data.p()
    );
    Ok(())
}

fn simulation_spec(
    file: &ConfigFile,
    model: Option<u8>,
    series: Option<String>,
    n: Option<usize>,
    p: Option<usize>,
    rho: Option<f64>,
) -> Result<SimulationSpec> {
    let model: u8 = file.require(model, "model")?;
    let series: Series = file.pick(series, "series", "a".into())?.parse()?;
    let overrides = SpecOverrides {
        n: n.map_or_else(|| file.get("n"), |v| Ok(Some(v)))?,
        p: p.map_or_else(|| file.get("p"), |v| Ok(Some(v)))?,
        rho: rho.map_or_else(|| file.get("rho"), |v| Ok(Some(v)))?,
    };
    SimulationSpec::with_overrides(model, series, overrides)
}

pub fn cmd_simulate(a: &SimulateArgs, file: &ConfigFile) -> Result<()> {
    let spec = simulation_spec(file, a.model, a.series.clone(), a.n, a.p, a.rho)?;
    let seed = file.pick(a.seed, "seed", 1)?;
    let out: PathBuf = file.require(a.out.clone(), "out")?;
    let data = sample_model(&spec, spec.n, seed);
    let mut w = csv::Writer::from_path(&out).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    let mut header: Vec<String> = (1..=spec.p()).map(|j| format!("x{j}")).collect();
    header.push("label".into());
    w.write_record(&header).map_err(csv_err)?;
    for (row, &k) in data.x.rows().into_iter().zip(&data.y) {
        let mut rec: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        rec.push(data.classes[k].clone());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_benchmark(a: &BenchmarkArgs, file: &ConfigFile) -> Result<()> {
    let spec = simulation_spec(file, a.model, a.series.clone(), a.n, a.p, a.rho)?;
    let out: PathBuf = file.require(a.out.clone(), "out")?;
    let defaults = BenchmarkConfig::default();
    let methods = match a.methods.clone().map_or_else(|| file.get::<String>("methods"), |m| Ok(Some(m)))? {
        Some(list) => list
            .split(',')
            .map(|m| m.trim().parse::<Method>())
            .collect::<Result<Vec<_>>>()?,
        None => defaults.methods.clone(),
    };
    let config = BenchmarkConfig {
        methods,
        reps: file.pick(a.reps, "reps", defaults.reps)?,
        test_size: file.pick(a.test_size, "test-size", defaults.test_size)?,
        seed: file.pick(a.seed, "seed", defaults.seed)?,
        folds: file.pick(a.folds, "folds", defaults.folds)?,
        grid_size: file.pick(a.grid_size, "grid-size", defaults.grid_size)?,
        bootstrap: file.pick(a.bootstrap, "bootstrap", defaults.bootstrap)?,
    };
    let report = run_benchmark(&spec, &config)?;
    fs::create_dir_all(&out)?;
    report.write_csv(fs::File::create(out.join("report.csv"))?)?;
    let table = report.summary_table();
    fs::write(out.join("summary.txt"), &table)?;
    print!("{table}");
    Ok(())
}
