//! Datasets, CSV ingestion and deterministic synthetic generators.

use std::io::Write;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Prediction task of a dataset or model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Classification,
    Regression,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Classification => "classification",
            Task::Regression => "regression",
        }
    }
}

/// A sample label: a class index or a real regression target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Class(usize),
    Value(f64),
}

impl Label {
    pub fn as_class(self) -> Option<usize> {
        match self {
            Label::Class(c) => Some(c),
            Label::Value(_) => None,
        }
    }

    pub fn as_value(self) -> Option<f64> {
        match self {
            Label::Value(v) => Some(v),
            Label::Class(_) => None,
        }
    }
}

/// Immutable labeled dataset. Rows are samples, columns are named features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    features: Vec<Vec<f64>>,
    labels: Vec<Label>,
    feature_names: Vec<String>,
    task: Task,
}

impl Dataset {
    pub fn new(
        features: Vec<Vec<f64>>,
        labels: Vec<Label>,
        feature_names: Vec<String>,
        task: Task,
    ) -> Result<Self> {
        if features.len() != labels.len() {
            return Err(Error::InvalidData(format!(
                "{} feature rows but {} labels",
                features.len(),
                labels.len()
            )));
        }
        let d = feature_names.len();
        for (i, row) in features.iter().enumerate() {
            if row.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteFeature { row: i, column: j });
                }
            }
        }
        for (i, label) in labels.iter().enumerate() {
            match (task, label) {
                (Task::Classification, Label::Class(_)) => {}
                (Task::Regression, Label::Value(v)) if v.is_finite() => {}
                _ => {
                    return Err(Error::InvalidData(format!(
                        "label at row {i} does not match task {}",
                        task.name()
                    )))
                }
            }
        }
        Ok(Dataset {
            features,
            labels,
            feature_names,
            task,
        })
    }

    /// Builds a classification dataset from integer class labels.
    pub fn from_classes(
        features: Vec<Vec<f64>>,
        classes: Vec<usize>,
        feature_names: Vec<String>,
    ) -> Result<Self> {
        let labels = classes.into_iter().map(Label::Class).collect();
        Dataset::new(features, labels, feature_names, Task::Classification)
    }

    pub fn n_samples(&self) -> usize {
        self.features.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.features[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.features.iter().map(|r| r.as_slice())
    }

    pub fn label(&self, i: usize) -> Label {
        self.labels[i]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn task(&self) -> Task {
        self.task
    }

    pub fn feature_index(&self, name: &str) -> Result<usize> {
        self.feature_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownFeature(name.to_string()))
    }

    /// Number of classes, `max class index + 1`. `None` for regression data.
    pub fn n_classes(&self) -> Option<usize> {
        match self.task {
            Task::Regression => None,
            Task::Classification => Some(
                self.labels
                    .iter()
                    .filter_map(|l| l.as_class())
                    .max()
                    .map_or(0, |m| m + 1),
            ),
        }
    }

    pub fn class_label(&self, i: usize) -> Result<usize> {
        self.labels[i]
            .as_class()
            .ok_or_else(|| Error::InvalidData(format!("row {i} has no class label")))
    }

    /// Per-feature median, a common choice for pertinent-positive defaults.
    pub fn feature_medians(&self) -> Vec<f64> {
        (0..self.n_features())
            .map(|j| {
                let mut col: Vec<f64> = self.features.iter().map(|r| r[j]).collect();
                col.sort_by(|a, b| a.total_cmp(b));
                let n = col.len();
                if n == 0 {
                    0.0
                } else if n % 2 == 1 {
                    col[n / 2]
                } else {
                    0.5 * (col[n / 2 - 1] + col[n / 2])
                }
            })
            .collect()
    }

    /// Rows selected by index, preserving order. Indices must be in range.
    pub fn subset(&self, indices: &[usize]) -> Result<Dataset> {
        let mut features = Vec::with_capacity(indices.len());
        let mut labels = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= self.n_samples() {
                return Err(Error::InvalidData(format!(
                    "subset index {i} out of range ({} samples)",
                    self.n_samples()
                )));
            }
            features.push(self.features[i].clone());
            labels.push(self.labels[i]);
        }
        Dataset::new(features, labels, self.feature_names.clone(), self.task)
    }

    /// Concatenates two datasets with identical schema (`self` rows first).
    pub fn concat(&self, other: &Dataset) -> Result<Dataset> {
        if self.task != other.task || self.feature_names != other.feature_names {
            return Err(Error::InvalidData(
                "cannot concatenate datasets with different schemas".into(),
            ));
        }
        let mut features = self.features.clone();
        features.extend(other.features.iter().cloned());
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Dataset::new(features, labels, self.feature_names.clone(), self.task)
    }

    /// Writes the dataset as CSV with a trailing `label` column.
    pub fn save_csv<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut out = String::new();
        for name in &self.feature_names {
            out.push_str(name);
            out.push(',');
        }
        out.push_str("label\n");
        for (row, label) in self.features.iter().zip(&self.labels) {
            for v in row {
                out.push_str(&format!("{v},"));
            }
            match label {
                Label::Class(c) => out.push_str(&format!("{c}\n")),
                Label::Value(v) => out.push_str(&format!("{v}\n")),
            }
        }
        let mut file = std::fs::File::create(path)?;
        file.write_all(out.as_bytes())?;
        Ok(())
    }
}

/// Loads a headered CSV file. All cells must parse as numbers; the label
/// column is removed from the feature matrix and parsed per `task`.
/// Classification labels must be non-negative integers.
pub fn load_csv<P: AsRef<Path>>(path: P, label_column: &str, task: Task) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path.as_ref())?;
    let headers: Vec<String> = reader.headers()?.iter().map(|h| h.to_string()).collect();
    let label_positions: Vec<usize> = headers
        .iter()
        .enumerate()
        .filter(|(_, h)| h.as_str() == label_column)
        .map(|(i, _)| i)
        .collect();
    let label_idx = match label_positions.as_slice() {
        [] => return Err(Error::LabelColumnNotFound(label_column.to_string())),
        [i] => *i,
        _ => return Err(Error::DuplicateLabelColumn(label_column.to_string())),
    };
    let feature_names: Vec<String> = headers
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != label_idx)
        .map(|(_, h)| h.clone())
        .collect();

    let mut features = Vec::new();
    let mut labels = Vec::new();
    for (row_idx, record) in reader.records().enumerate() {
        let record = record?;
        let row_no = row_idx + 1; // 1-based data row for error messages
        let mut row = Vec::with_capacity(feature_names.len());
        let mut label_value = 0.0;
        for (col, cell) in record.iter().enumerate() {
            let parsed: f64 = cell.trim().parse().map_err(|_| Error::CsvCell {
                row: row_no,
                column: headers.get(col).cloned().unwrap_or_default(),
                value: cell.to_string(),
            })?;
            if col == label_idx {
                label_value = parsed;
            } else {
                row.push(parsed);
            }
        }
        let label = match task {
            Task::Regression => Label::Value(label_value),
            Task::Classification => {
                if label_value < 0.0 || label_value.fract() != 0.0 {
                    return Err(Error::InvalidLabel {
                        row: row_no,
                        value: label_value,
                    });
                }
                Label::Class(label_value as usize)
            }
        };
        features.push(row);
        labels.push(label);
    }
    if features.is_empty() {
        return Err(Error::EmptyFile);
    }
    Dataset::new(features, labels, feature_names, task)
}

/// Partitions `data` on `feature <= theta`, preserving row order. The first
/// output holds rows at or below the threshold, the second the rest.
pub fn split_by_threshold(data: &Dataset, feature: &str, theta: f64) -> Result<(Dataset, Dataset)> {
    let j = data.feature_index(feature)?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    for i in 0..data.n_samples() {
        if data.row(i)[j] <= theta {
            low.push(i);
        } else {
            high.push(i);
        }
    }
    Ok((data.subset(&low)?, data.subset(&high)?))
}

/// Specification of the two-batch Gaussian-blobs drift benchmark.
///
/// Batch 1 is separable with a threshold on feature 1 alone; in batch 2 the
/// class means overlap on feature 1 and the second feature carries most of
/// the separation. Evaluation samples are drawn uniformly from the
/// axis-aligned box spanned by all four class means, inflated by one unit,
/// and labeled by the sign of feature 1 (the structure both batches share:
/// class 0 means sit at negative, class 1 means at positive feature 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlobSpec {
    /// Class means of batch 1, `[class 0, class 1]`.
    pub batch1_means: [[f64; 2]; 2],
    /// Class means of batch 2, `[class 0, class 1]`.
    pub batch2_means: [[f64; 2]; 2],
    /// Shared isotropic covariance.
    pub sigma2: f64,
    pub samples_per_class: usize,
    pub eval_samples: usize,
    pub seed: u64,
}

impl Default for BlobSpec {
    fn default() -> Self {
        BlobSpec {
            batch1_means: [[-2.0, 0.0], [2.0, 0.0]],
            batch2_means: [[-0.5, -1.0], [0.5, 7.0]],
            sigma2: 1.0,
            samples_per_class: 100,
            eval_samples: 200,
            seed: 42,
        }
    }
}

impl BlobSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma2 > 0.0) || !self.sigma2.is_finite() {
            return Err(Error::InvalidConfig("sigma2 must be positive".into()));
        }
        if self.samples_per_class == 0 {
            return Err(Error::InvalidConfig(
                "samples_per_class must be positive".into(),
            ));
        }
        if self.eval_samples == 0 {
            return Err(Error::InvalidConfig("eval_samples must be positive".into()));
        }
        let finite = self
            .batch1_means
            .iter()
            .chain(self.batch2_means.iter())
            .all(|m| m.iter().all(|v| v.is_finite()));
        if !finite {
            return Err(Error::InvalidConfig("class means must be finite".into()));
        }
        Ok(())
    }

    /// Axis-aligned evaluation box: the bounding box of all class means,
    /// inflated by one unit on every side.
    pub fn eval_box(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for m in self.batch1_means.iter().chain(self.batch2_means.iter()) {
            for k in 0..2 {
                lo[k] = lo[k].min(m[k]);
                hi[k] = hi[k].max(m[k]);
            }
        }
        ([lo[0] - 1.0, lo[1] - 1.0], [hi[0] + 1.0, hi[1] + 1.0])
    }
}

fn sample_gaussian_batch(
    rng: &mut ChaCha8Rng,
    means: &[[f64; 2]; 2],
    sigma: f64,
    per_class: usize,
) -> (Vec<Vec<f64>>, Vec<usize>) {
    let mut features = Vec::with_capacity(2 * per_class);
    let mut classes = Vec::with_capacity(2 * per_class);
    for (class, mean) in means.iter().enumerate() {
        for _ in 0..per_class {
            let z0: f64 = rng.sample(StandardNormal);
            let z1: f64 = rng.sample(StandardNormal);
            features.push(vec![mean[0] + sigma * z0, mean[1] + sigma * z1]);
            classes.push(class);
        }
    }
    let mut order: Vec<usize> = (0..features.len()).collect();
    order.shuffle(rng);
    let features = order.iter().map(|&i| features[i].clone()).collect();
    let classes = order.iter().map(|&i| classes[i]).collect();
    (features, classes)
}

/// Generates the two drift batches and the evaluation set.
///
/// Deterministic: the same spec (including seed) reproduces every value
/// bit for bit.
pub fn generate_gaussian_blobs(spec: &BlobSpec) -> Result<(Dataset, Dataset, Dataset)> {
    spec.validate()?;
    let names = vec!["x1".to_string(), "x2".to_string()];
    let sigma = spec.sigma2.sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let (f1, c1) = sample_gaussian_batch(&mut rng, &spec.batch1_means, sigma, spec.samples_per_class);
    let batch1 = Dataset::from_classes(f1, c1, names.clone())?;
    let (f2, c2) = sample_gaussian_batch(&mut rng, &spec.batch2_means, sigma, spec.samples_per_class);
    let batch2 = Dataset::from_classes(f2, c2, names.clone())?;

    let (lo, hi) = spec.eval_box();
    let mut eval_features = Vec::with_capacity(spec.eval_samples);
    let mut eval_classes = Vec::with_capacity(spec.eval_samples);
    for _ in 0..spec.eval_samples {
        let x1 = rng.random_range(lo[0]..hi[0]);
        let x2 = rng.random_range(lo[1]..hi[1]);
        eval_classes.push(usize::from(x1 > 0.0));
        eval_features.push(vec![x1, x2]);
    }
    let eval = Dataset::from_classes(eval_features, eval_classes, names)?;
    Ok((batch1, batch2, eval))
}

/// Specification of the synthetic credit-style drift benchmark.
///
/// One `amount` feature drives the label; the remaining features are noise.
/// Batch 1 accepts applications with `amount <= accept_below`, batch 2 (and
/// the test set) inverts the rule and accepts `amount >= accept_above` — so
/// labels flip across batches by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CreditSpec {
    pub samples_per_batch: usize,
    pub test_samples: usize,
    pub noise_features: usize,
    /// Batch-1 rule: accept iff `amount <= accept_below`.
    pub accept_below: f64,
    /// Batch-2 rule: accept iff `amount >= accept_above`.
    pub accept_above: f64,
    pub seed: u64,
}

impl Default for CreditSpec {
    fn default() -> Self {
        CreditSpec {
            samples_per_batch: 200,
            test_samples: 200,
            noise_features: 4,
            accept_below: 0.5,
            accept_above: 0.7,
            seed: 42,
        }
    }
}

impl CreditSpec {
    pub fn validate(&self) -> Result<()> {
        if self.samples_per_batch == 0 || self.test_samples == 0 {
            return Err(Error::InvalidConfig("sample counts must be positive".into()));
        }
        Ok(())
    }
}

fn sample_credit_batch(
    rng: &mut ChaCha8Rng,
    n: usize,
    noise: usize,
    accept: impl Fn(f64) -> bool,
    names: &[String],
) -> Result<Dataset> {
    let mut features = Vec::with_capacity(n);
    let mut classes = Vec::with_capacity(n);
    for _ in 0..n {
        let amount = rng.random_range(0.0..1.0);
        let mut row = Vec::with_capacity(1 + noise);
        row.push(amount);
        for _ in 0..noise {
            row.push(rng.sample::<f64, _>(StandardNormal));
        }
        // class 1 = accept, class 0 = reject
        classes.push(usize::from(accept(amount)));
        features.push(row);
    }
    Dataset::from_classes(features, classes, names.to_vec())
}

/// Generates `(batch1, batch2, test)` for the credit drift benchmark. The
/// test set follows the batch-2 regime.
pub fn generate_credit_drift(spec: &CreditSpec) -> Result<(Dataset, Dataset, Dataset)> {
    spec.validate()?;
    let mut names = vec!["amount".to_string()];
    for k in 1..=spec.noise_features {
        names.push(format!("noise{k}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let below = spec.accept_below;
    let above = spec.accept_above;
    let batch1 = sample_credit_batch(
        &mut rng,
        spec.samples_per_batch,
        spec.noise_features,
        |a| a <= below,
        &names,
    )?;
    let batch2 = sample_credit_batch(
        &mut rng,
        spec.samples_per_batch,
        spec.noise_features,
        |a| a >= above,
        &names,
    )?;
    let test = sample_credit_batch(
        &mut rng,
        spec.test_samples,
        spec.noise_features,
        |a| a >= above,
        &names,
    )?;
    Ok((batch1, batch2, test))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Dataset {
        Dataset::from_classes(
            vec![vec![1.0, 10.0], vec![2.0, 20.0], vec![3.0, 30.0]],
            vec![0, 1, 0],
            vec!["a".into(), "b".into()],
        )
        .unwrap()
    }

    #[test]
    fn split_partitions_and_preserves_order() {
        let data = toy();
        let (low, high) = split_by_threshold(&data, "a", 2.0).unwrap();
        assert_eq!(low.n_samples(), 2);
        assert_eq!(high.n_samples(), 1);
        assert_eq!(low.row(0), &[1.0, 10.0]);
        assert_eq!(low.row(1), &[2.0, 20.0]);
        assert_eq!(high.row(0), &[3.0, 30.0]);
    }

    #[test]
    fn split_all_below_gives_empty_second() {
        let data = toy();
        let (low, high) = split_by_threshold(&data, "a", 100.0).unwrap();
        assert_eq!(low.n_samples(), 3);
        assert_eq!(high.n_samples(), 0);
    }

    #[test]
    fn split_unknown_feature_errors() {
        assert!(matches!(
            split_by_threshold(&toy(), "missing", 0.0),
            Err(Error::UnknownFeature(_))
        ));
    }

    #[test]
    fn load_csv_basic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("toy.csv");
        std::fs::write(&path, "a,b,y\n1,10,0\n2,20,1\n3,30,0\n").unwrap();
        let data = load_csv(&path, "y", Task::Classification).unwrap();
        assert_eq!(data.n_samples(), 3);
        assert_eq!(data.n_features(), 2);
        assert_eq!(data.feature_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(data.label(1), Label::Class(1));
    }

    #[test]
    fn load_csv_missing_label_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("toy.csv");
        std::fs::write(&path, "a,b\n1,10\n").unwrap();
        assert!(matches!(
            load_csv(&path, "y", Task::Classification),
            Err(Error::LabelColumnNotFound(_))
        ));
    }

    #[test]
    fn load_csv_reports_bad_cell_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("toy.csv");
        std::fs::write(&path, "a,b,y\n1,10,0\n2,abc,1\n").unwrap();
        match load_csv(&path, "y", Task::Classification) {
            Err(Error::CsvCell { row, column, value }) => {
                assert_eq!(row, 2);
                assert_eq!(column, "b");
                assert_eq!(value, "abc");
            }
            other => panic!("expected CsvCell error, got {other:?}"),
        }
    }

    #[test]
    fn load_csv_empty_file_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("toy.csv");
        std::fs::write(&path, "a,b,y\n").unwrap();
        assert!(matches!(
            load_csv(&path, "y", Task::Classification),
            Err(Error::EmptyFile)
        ));
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rt.csv");
        let data = Dataset::new(
            vec![vec![0.1, -2.5e-7], vec![std::f64::consts::PI, 1e300]],
            vec![Label::Value(1.5), Label::Value(-0.125)],
            vec!["u".into(), "v".into()],
            Task::Regression,
        )
        .unwrap();
        data.save_csv(&path).unwrap();
        let back = load_csv(&path, "label", Task::Regression).unwrap();
        assert_eq!(back, data);
    }

    #[test]
    fn blob_generator_is_deterministic() {
        let spec = BlobSpec::default();
        let a = generate_gaussian_blobs(&spec).unwrap();
        let b = generate_gaussian_blobs(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn blob_eval_box_covers_means_inflated() {
        let spec = BlobSpec::default();
        let (lo, hi) = spec.eval_box();
        assert_eq!(lo, [-3.0, -2.0]);
        assert_eq!(hi, [3.0, 8.0]);
        let (_, _, eval) = generate_gaussian_blobs(&spec).unwrap();
        assert_eq!(eval.n_samples(), spec.eval_samples);
        for row in eval.rows() {
            assert!(row[0] >= lo[0] && row[0] < hi[0]);
            assert!(row[1] >= lo[1] && row[1] < hi[1]);
        }
    }

    #[test]
    fn credit_generator_labels_follow_rules() {
        let spec = CreditSpec::default();
        let (b1, b2, test) = generate_credit_drift(&spec).unwrap();
        for (i, row) in b1.rows().enumerate() {
            assert_eq!(b1.class_label(i).unwrap(), usize::from(row[0] <= 0.5));
        }
        for data in [&b2, &test] {
            for (i, row) in data.rows().enumerate() {
                assert_eq!(data.class_label(i).unwrap(), usize::from(row[0] >= 0.7));
            }
        }
        assert_eq!(generate_credit_drift(&spec).unwrap().0, b1);
    }
}
