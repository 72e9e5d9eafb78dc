//! L2-penalized binary logistic regression over flattened persistence
//! images, with a deterministic stratified train/test split.
//!
//! The trainer is plain full-batch gradient descent with a backtracking line
//! search: slower than a quasi-Newton solver but bit-reproducible and free
//! of tuning knobs. Features are standardized internally; the intercept is
//! not penalized.

use std::io::{Read, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One training example: a feature vector and a binary label.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    pub features: Vec<f64>,
    pub label: u8,
}

impl LabeledSample {
    pub fn new(features: Vec<f64>, label: u8) -> Result<Self> {
        if label > 1 {
            return Err(Error::validation("label must be 0 or 1"));
        }
        if features.iter().any(|v| !v.is_finite()) {
            return Err(Error::validation("features must be finite"));
        }
        Ok(Self { features, label })
    }
}

/// Fitted classifier: weights live in standardized feature space; the
/// standardization parameters travel with the model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticModel {
    pub weights: Vec<f64>,
    pub intercept: f64,
    #[serde(rename = "C")]
    pub inverse_regularization: f64,
    pub means: Vec<f64>,
    pub scales: Vec<f64>,
    pub feature_length: usize,
}

impl LogisticModel {
    fn standardize(&self, features: &[f64]) -> Vec<f64> {
        features
            .iter()
            .zip(self.means.iter().zip(&self.scales))
            .map(|(&x, (&m, &s))| if s > 0.0 { (x - m) / s } else { 0.0 })
            .collect()
    }
}

fn round_half_up(x: f64) -> usize {
    (x + 0.5).floor() as usize
}

/// Deterministic, label-stratified split indices. The train size is
/// round-half-up(n × fraction); per-label counts fill by largest remainder
/// so the total is hit exactly.
pub fn train_test_split_indices(
    labels: &[u8],
    train_fraction: f64,
    seed: u64,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = labels.len();
    if n < 2 {
        return Err(Error::validation("split needs at least 2 samples"));
    }
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::validation("train_fraction must be in (0, 1)"));
    }
    let total_train = round_half_up(n as f64 * train_fraction);
    if total_train == 0 || total_train >= n {
        return Err(Error::validation(format!(
            "fraction {train_fraction} leaves an empty side for {n} samples"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let present: Vec<u8> = {
        let mut v: Vec<u8> = labels.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let groups: Vec<Vec<usize>> = present
        .iter()
        .map(|&lab| {
            order
                .iter()
                .copied()
                .filter(|&i| labels[i] == lab)
                .collect()
        })
        .collect();

    let mut counts: Vec<usize> = Vec::with_capacity(groups.len());
    if groups.len() == 1 {
        counts.push(total_train);
    } else {
        let mut remainders: Vec<(f64, usize)> = Vec::new();
        let mut assigned = 0usize;
        for (g, group) in groups.iter().enumerate() {
            let exact = group.len() as f64 * train_fraction;
            let base = exact.floor() as usize;
            counts.push(base);
            assigned += base;
            remainders.push((exact - base as f64, g));
        }
        remainders.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut extra = total_train.saturating_sub(assigned);
        for &(_, g) in remainders.iter().cycle() {
            if extra == 0 {
                break;
            }
            if counts[g] < groups[g].len() {
                counts[g] += 1;
                extra -= 1;
            }
        }
    }

    let mut train = Vec::with_capacity(total_train);
    let mut test = Vec::with_capacity(n - total_train);
    for (group, &count) in groups.iter().zip(&counts) {
        if count == 0 || count >= group.len() {
            return Err(Error::validation(format!(
                "stratified split leaves a label class empty; \
                 choose a fraction other than {train_fraction}"
            )));
        }
        train.extend_from_slice(&group[..count]);
        test.extend_from_slice(&group[count..]);
    }
    train.sort_unstable();
    test.sort_unstable();
    Ok((train, test))
}

/// Splits samples into deterministic stratified train and test lists.
pub fn train_test_split(
    samples: &[LabeledSample],
    train_fraction: f64,
    seed: u64,
) -> Result<(Vec<LabeledSample>, Vec<LabeledSample>)> {
    let labels: Vec<u8> = samples.iter().map(|s| s.label).collect();
    let (train_idx, test_idx) = train_test_split_indices(&labels, train_fraction, seed)?;
    let pick = |idx: &[usize]| idx.iter().map(|&i| samples[i].clone()).collect();
    Ok((pick(&train_idx), pick(&test_idx)))
}

fn sigmoid(s: f64) -> f64 {
    if s >= 0.0 {
        1.0 / (1.0 + (-s).exp())
    } else {
        let e = s.exp();
        e / (1.0 + e)
    }
}

/// log(1 + exp(-s)) without overflow for large |s|.
fn log1p_exp_neg(s: f64) -> f64 {
    if s >= 0.0 {
        (-s).exp().ln_1p()
    } else {
        -s + s.exp().ln_1p()
    }
}

/// Objective 0.5‖ω‖² + C Σ log(1 + exp(−ỹᵢ(xᵢᵀω + c))) with ỹ = 2y − 1,
/// and its gradient in (ω, c). Inputs are already standardized. Public so
/// the analytic gradient can be checked against finite differences.
pub fn objective_and_gradient(
    features: &[Vec<f64>],
    labels: &[u8],
    weights: &[f64],
    intercept: f64,
    inverse_regularization: f64,
) -> (f64, Vec<f64>, f64) {
    let d = weights.len();
    let mut value = 0.5 * weights.iter().map(|w| w * w).sum::<f64>();
    let mut grad_w = weights.to_vec();
    let mut grad_c = 0.0;
    for (x, &y) in features.iter().zip(labels) {
        let y_signed = 2.0 * y as f64 - 1.0;
        let margin: f64 = x.iter().zip(weights).map(|(a, w)| a * w).sum::<f64>() + intercept;
        let s = y_signed * margin;
        value += inverse_regularization * log1p_exp_neg(s);
        let coeff = -inverse_regularization * y_signed * sigmoid(-s);
        for (g, &a) in grad_w.iter_mut().zip(x) {
            *g += coeff * a;
        }
        grad_c += coeff;
    }
    debug_assert_eq!(grad_w.len(), d);
    (value, grad_w, grad_c)
}

fn objective_only(
    features: &[Vec<f64>],
    labels: &[u8],
    weights: &[f64],
    intercept: f64,
    inverse_regularization: f64,
) -> f64 {
    let mut value = 0.5 * weights.iter().map(|w| w * w).sum::<f64>();
    for (x, &y) in features.iter().zip(labels) {
        let y_signed = 2.0 * y as f64 - 1.0;
        let margin: f64 = x.iter().zip(weights).map(|(a, w)| a * w).sum::<f64>() + intercept;
        value += inverse_regularization * log1p_exp_neg(y_signed * margin);
    }
    value
}

fn standardization(train: &[LabeledSample]) -> (Vec<f64>, Vec<f64>) {
    let n = train.len() as f64;
    let d = train[0].features.len();
    let mut means = vec![0.0; d];
    for s in train {
        for (m, &x) in means.iter_mut().zip(&s.features) {
            *m += x;
        }
    }
    for m in means.iter_mut() {
        *m /= n;
    }
    let mut vars = vec![0.0; d];
    for s in train {
        for ((v, &m), &x) in vars.iter_mut().zip(&means).zip(&s.features) {
            *v += (x - m) * (x - m);
        }
    }
    let scales = vars
        .into_iter()
        .map(|v| {
            let sd = (v / n).sqrt();
            if sd > 0.0 {
                sd
            } else {
                0.0
            }
        })
        .collect();
    (means, scales)
}

fn validate_training_set(train: &[LabeledSample]) -> Result<usize> {
    if train.is_empty() {
        return Err(Error::validation("training set is empty"));
    }
    let d = train[0].features.len();
    if train.iter().any(|s| s.features.len() != d) {
        return Err(Error::validation("inconsistent feature lengths"));
    }
    if train
        .iter()
        .any(|s| s.features.iter().any(|v| !v.is_finite()))
    {
        return Err(Error::validation("features must be finite"));
    }
    let has = |lab: u8| train.iter().any(|s| s.label == lab);
    if !(has(0) && has(1)) {
        return Err(Error::validation(
            "training set must contain both labels",
        ));
    }
    Ok(d)
}

/// Fits from a caller-chosen starting point in standardized space. The
/// default entry point is [`fit`]; this variant exists so convexity can be
/// verified from several initializations.
pub fn fit_with_init(
    train: &[LabeledSample],
    inverse_regularization: f64,
    max_iter: usize,
    tol: f64,
    init_weights: Vec<f64>,
    init_intercept: f64,
) -> Result<LogisticModel> {
    let d = validate_training_set(train)?;
    if !(inverse_regularization > 0.0) {
        return Err(Error::validation("C must be positive"));
    }
    if max_iter == 0 {
        return Err(Error::validation("max_iter must be at least 1"));
    }
    if !(tol > 0.0) {
        return Err(Error::validation("tol must be positive"));
    }
    if init_weights.len() != d {
        return Err(Error::validation("initial weights have the wrong length"));
    }
    let (means, scales) = standardization(train);
    let features: Vec<Vec<f64>> = train
        .iter()
        .map(|s| {
            s.features
                .iter()
                .zip(means.iter().zip(&scales))
                .map(|(&x, (&m, &sc))| if sc > 0.0 { (x - m) / sc } else { 0.0 })
                .collect()
        })
        .collect();
    let labels: Vec<u8> = train.iter().map(|s| s.label).collect();

    let mut weights = init_weights;
    let mut intercept = init_intercept;
    let (mut value, mut grad_w, mut grad_c) = objective_and_gradient(
        &features,
        &labels,
        &weights,
        intercept,
        inverse_regularization,
    );
    let mut step = 1.0f64;
    for iteration in 1..=max_iter {
        if !value.is_finite() {
            return Err(Error::Numeric {
                iteration,
                msg: "objective became non-finite".into(),
            });
        }
        let grad_norm = grad_w
            .iter()
            .fold(grad_c.abs(), |acc, g| acc.max(g.abs()));
        if grad_norm < tol {
            break;
        }
        let g2: f64 = grad_w.iter().map(|g| g * g).sum::<f64>() + grad_c * grad_c;
        let mut t = step;
        let (next_w, next_c) = loop {
            let cand_w: Vec<f64> = weights.iter().zip(&grad_w).map(|(w, g)| w - t * g).collect();
            let cand_c = intercept - t * grad_c;
            let cand_value = objective_only(
                &features,
                &labels,
                &cand_w,
                cand_c,
                inverse_regularization,
            );
            if cand_value.is_finite() && cand_value <= value - 1e-4 * t * g2 {
                break (cand_w, cand_c);
            }
            t *= 0.5;
            if t < 1e-20 {
                return Err(Error::Numeric {
                    iteration,
                    msg: "line search failed to descend".into(),
                });
            }
        };
        weights = next_w;
        intercept = next_c;
        step = (t * 2.0).min(1e6);
        let (v, gw, gc) = objective_and_gradient(
            &features,
            &labels,
            &weights,
            intercept,
            inverse_regularization,
        );
        value = v;
        grad_w = gw;
        grad_c = gc;
    }
    Ok(LogisticModel {
        weights,
        intercept,
        inverse_regularization,
        means,
        scales,
        feature_length: d,
    })
}

/// Trains the classifier from the zero initialization.
pub fn fit(
    train: &[LabeledSample],
    inverse_regularization: f64,
    max_iter: usize,
    tol: f64,
) -> Result<LogisticModel> {
    let d = validate_training_set(train)?;
    fit_with_init(train, inverse_regularization, max_iter, tol, vec![0.0; d], 0.0)
}

/// Predicted label and probability of label 1. Probability ties at 0.5 go
/// to label 1.
pub fn predict(model: &LogisticModel, features: &[f64]) -> Result<(u8, f64)> {
    if features.len() != model.feature_length {
        return Err(Error::validation(format!(
            "expected {} features, got {}",
            model.feature_length,
            features.len()
        )));
    }
    let x = model.standardize(features);
    let margin: f64 = x
        .iter()
        .zip(&model.weights)
        .map(|(a, w)| a * w)
        .sum::<f64>()
        + model.intercept;
    let p = sigmoid(margin);
    Ok((u8::from(p >= 0.5), p))
}

/// Fraction of correct predictions on a non-empty test set.
pub fn accuracy(model: &LogisticModel, test: &[LabeledSample]) -> Result<f64> {
    if test.is_empty() {
        return Err(Error::validation("test set is empty"));
    }
    let mut correct = 0usize;
    for s in test {
        let (label, _) = predict(model, &s.features)?;
        if label == s.label {
            correct += 1;
        }
    }
    Ok(correct as f64 / test.len() as f64)
}

/// Saves the model as JSON.
pub fn write_model_json<W: Write>(model: &LogisticModel, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, model)
        .map_err(|e| Error::validation(format!("model serialization failed: {e}")))
}

/// Loads a model saved by [`write_model_json`].
pub fn read_model_json<R: Read>(reader: R) -> Result<LogisticModel> {
    serde_json::from_reader(reader)
        .map_err(|e| Error::validation(format!("model deserialization failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn sample(features: &[f64], label: u8) -> LabeledSample {
        LabeledSample::new(features.to_vec(), label).unwrap()
    }

    /// x < 0 labeled 0, x > 0 labeled 1, well separated.
    fn separable_1d() -> Vec<LabeledSample> {
        let mut data = Vec::new();
        for i in 1..=10 {
            data.push(sample(&[-(i as f64)], 0));
            data.push(sample(&[i as f64], 1));
        }
        data
    }

    #[test]
    fn split_240_at_65_percent() {
        let labels: Vec<u8> = (0..240).map(|i| (i % 2) as u8).collect();
        let (train, test) = train_test_split_indices(&labels, 0.65, 1).unwrap();
        assert_eq!(train.len(), 156);
        assert_eq!(test.len(), 84);
    }

    #[test]
    fn split_50_rounds_half_up() {
        let labels: Vec<u8> = (0..50).map(|i| (i % 2) as u8).collect();
        let (train, test) = train_test_split_indices(&labels, 0.65, 9).unwrap();
        assert_eq!(train.len(), 33);
        assert_eq!(test.len(), 17);
    }

    #[test]
    fn split_is_deterministic() {
        let labels: Vec<u8> = (0..31).map(|i| (i % 3 == 0) as u8).collect();
        let a = train_test_split_indices(&labels, 0.65, 42).unwrap();
        let b = train_test_split_indices(&labels, 0.65, 42).unwrap();
        assert_eq!(a, b);
        let c = train_test_split_indices(&labels, 0.65, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn split_preserves_label_proportions() {
        let labels: Vec<u8> = (0..100).map(|i| (i < 30) as u8).collect();
        let (train, test) = train_test_split_indices(&labels, 0.65, 7).unwrap();
        let count = |idx: &[usize], lab: u8| idx.iter().filter(|&&i| labels[i] == lab).count();
        assert_eq!(count(&train, 1) + count(&test, 1), 30);
        assert_eq!(train.len(), 65);
        // 0.65 of each class, the leftover slot going by largest remainder.
        assert!((19..=20).contains(&count(&train, 1)));
        assert_eq!(count(&train, 0) + count(&train, 1), 65);
        let mut all: Vec<usize> = train.iter().chain(&test).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..100).collect::<Vec<_>>());
    }

    #[test]
    fn split_rejects_emptying_a_class() {
        let labels = vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1];
        assert!(train_test_split_indices(&labels, 0.95, 3).is_err());
    }

    #[test]
    fn split_rejects_degenerate_fractions() {
        let labels = vec![0, 1, 0, 1];
        assert!(train_test_split_indices(&labels, 0.0, 3).is_err());
        assert!(train_test_split_indices(&labels, 1.0, 3).is_err());
        assert!(train_test_split_indices(&labels[..1], 0.5, 3).is_err());
    }

    #[test]
    fn fit_separates_1d_data() {
        let data = separable_1d();
        let model = fit(&data, 1.0, 2000, 1e-8).unwrap();
        assert!(model.weights[0] > 0.0);
        assert_eq!(accuracy(&model, &data).unwrap(), 1.0);
    }

    #[test]
    fn fit_rejects_single_class() {
        let data = vec![sample(&[1.0], 1), sample(&[2.0], 1)];
        assert!(fit(&data, 1.0, 100, 1e-6).is_err());
    }

    #[test]
    fn constant_features_reduce_to_intercept_model() {
        let mut data = Vec::new();
        for _ in 0..30 {
            data.push(sample(&[2.5, 7.0], 1));
        }
        for _ in 0..10 {
            data.push(sample(&[2.5, 7.0], 0));
        }
        let model = fit(&data, 1.0, 5000, 1e-10).unwrap();
        assert!(model.weights.iter().all(|w| w.abs() < 1e-9));
        let expected = (0.75f64 / 0.25).ln();
        assert!(
            (model.intercept - expected).abs() < 1e-6,
            "intercept {} vs {}",
            model.intercept,
            expected
        );
    }

    #[test]
    fn gradient_vanishes_at_the_optimum() {
        let data = separable_1d();
        let tol = 1e-8;
        let model = fit(&data, 0.5, 5000, tol).unwrap();
        let features: Vec<Vec<f64>> = data.iter().map(|s| model.standardize(&s.features)).collect();
        let labels: Vec<u8> = data.iter().map(|s| s.label).collect();
        let (_, gw, gc) = objective_and_gradient(
            &features,
            &labels,
            &model.weights,
            model.intercept,
            0.5,
        );
        let norm = gw.iter().fold(gc.abs(), |a, g| a.max(g.abs()));
        assert!(norm < tol, "gradient norm {norm}");
    }

    #[test]
    fn analytic_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 12;
        let d = 4;
        let features: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect())
            .collect();
        let labels: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
        let c_reg = 0.7;
        let h = 1e-6;
        for _ in 0..10 {
            let w: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let b: f64 = rng.gen_range(-1.0..1.0);
            let (_, gw, gc) = objective_and_gradient(&features, &labels, &w, b, c_reg);
            for j in 0..d {
                let mut wp = w.clone();
                let mut wm = w.clone();
                wp[j] += h;
                wm[j] -= h;
                let fp = objective_only(&features, &labels, &wp, b, c_reg);
                let fm = objective_only(&features, &labels, &wm, b, c_reg);
                let numeric = (fp - fm) / (2.0 * h);
                let denom = numeric.abs().max(gw[j].abs()).max(1e-8);
                assert!(
                    ((gw[j] - numeric) / denom).abs() < 1e-5,
                    "weight {j}: analytic {} numeric {}",
                    gw[j],
                    numeric
                );
            }
            let fp = objective_only(&features, &labels, &w, b + h, c_reg);
            let fm = objective_only(&features, &labels, &w, b - h, c_reg);
            let numeric = (fp - fm) / (2.0 * h);
            let denom = numeric.abs().max(gc.abs()).max(1e-8);
            assert!(((gc - numeric) / denom).abs() < 1e-5);
        }
    }

    #[test]
    fn different_initializations_reach_the_same_objective() {
        let data = separable_1d();
        let c_reg = 1.0;
        let from_zero = fit(&data, c_reg, 5000, 1e-9).unwrap();
        let from_far = fit_with_init(&data, c_reg, 5000, 1e-9, vec![5.0], -3.0).unwrap();
        let objective_of = |m: &LogisticModel| {
            let features: Vec<Vec<f64>> =
                data.iter().map(|s| m.standardize(&s.features)).collect();
            let labels: Vec<u8> = data.iter().map(|s| s.label).collect();
            objective_only(&features, &labels, &m.weights, m.intercept, c_reg)
        };
        let a = objective_of(&from_zero);
        let b = objective_of(&from_far);
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
    }

    #[test]
    fn training_accuracy_shrinks_with_regularization() {
        let data = separable_1d();
        let grid = [10.0, 0.1, 1e-4];
        let accs: Vec<f64> = grid
            .iter()
            .map(|&c| {
                let m = fit(&data, c, 5000, 1e-9).unwrap();
                accuracy(&m, &data).unwrap()
            })
            .collect();
        assert!(accs[0] >= accs[1]);
        assert!(accs[1] >= accs[2]);
    }

    #[test]
    fn fit_is_bit_deterministic() {
        let data = separable_1d();
        let a = fit(&data, 1.0, 1000, 1e-8).unwrap();
        let b = fit(&data, 1.0, 1000, 1e-8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn predict_zero_model_ties_to_label_one() {
        let model = LogisticModel {
            weights: vec![0.0, 0.0],
            intercept: 0.0,
            inverse_regularization: 1.0,
            means: vec![0.0, 0.0],
            scales: vec![1.0, 1.0],
            feature_length: 2,
        };
        let (label, p) = predict(&model, &[3.0, -1.0]).unwrap();
        assert_eq!(label, 1);
        assert_eq!(p, 0.5);
    }

    #[test]
    fn predict_saturates_on_large_margin() {
        let model = LogisticModel {
            weights: vec![10.0],
            intercept: 0.0,
            inverse_regularization: 1.0,
            means: vec![0.0],
            scales: vec![1.0],
            feature_length: 1,
        };
        let (label, p) = predict(&model, &[50.0]).unwrap();
        assert_eq!(label, 1);
        assert!(p > 1.0 - 1e-12);
        let (label0, p0) = predict(&model, &[-50.0]).unwrap();
        assert_eq!(label0, 0);
        assert!(p0 < 1e-12);
    }

    #[test]
    fn class_probabilities_are_complementary() {
        assert!((sigmoid(1.7) + sigmoid(-1.7) - 1.0).abs() < 1e-15);
        assert!((sigmoid(-40.0) + sigmoid(40.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn predict_rejects_length_mismatch() {
        let data = separable_1d();
        let model = fit(&data, 1.0, 100, 1e-6).unwrap();
        assert!(predict(&model, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn accuracy_counts_correct_fraction() {
        let data = separable_1d();
        let model = fit(&data, 1.0, 2000, 1e-8).unwrap();
        assert_eq!(accuracy(&model, &data).unwrap(), 1.0);
        let flipped: Vec<LabeledSample> = data
            .iter()
            .map(|s| sample(&s.features, 1 - s.label))
            .collect();
        assert_eq!(accuracy(&model, &flipped).unwrap(), 0.0);
        let half: Vec<LabeledSample> = data
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let lab = if i % 2 == 0 { s.label } else { 1 - s.label };
                sample(&s.features, lab)
            })
            .collect();
        assert_eq!(accuracy(&model, &half).unwrap(), 0.5);
        assert!(accuracy(&model, &[]).is_err());
    }

    #[test]
    fn model_json_round_trip() {
        let data = separable_1d();
        let model = fit(&data, 2.0, 500, 1e-8).unwrap();
        let mut buf = Vec::new();
        write_model_json(&model, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("\"C\": 2.0"));
        assert!(text.contains("\"feature_length\": 1"));
        let back = read_model_json(buf.as_slice()).unwrap();
        assert_eq!(back, model);
    }
}
