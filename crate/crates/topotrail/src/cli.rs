//! Command implementations behind the `topotrail` binary.
//!
//! Each `cmd_*` function takes an [`ExperimentConfig`], performs one
//! command's work, writes its artifacts under `config.out`, and returns a
//! structured outcome so integration tests can inspect results without
//! scraping files. The binary's `run` wrapper prints the artifact list and a
//! short result line.
//!
//! Samples for the classification commands are ordered as in the dataset:
//! ascending day, then ascending patch id. Persisted train/test indices
//! refer to that order.

pub mod config;

use std::collections::BTreeMap;
use std::fs;
use std::io::BufReader;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::learn::{
    accuracy, fit, train_test_split_indices, write_model_json, LabeledSample,
};
use crate::metric::{barycenter, wasserstein, wasserstein_series};
use crate::persistence::{
    lifetime_diagram, persistence_diagram, write_diagram_json, EssentialPolicy, LifetimeDiagram,
    PersistenceDiagram,
};
use crate::plot;
use crate::rips::{distance_matrix, rips_filtration};
use crate::trajectory::synth::generate_synthetic;
use crate::trajectory::{
    parse_maintenance_dates, parse_trajectory_csv, segment_periods, subsample,
    write_maintenance_dates, write_trajectory_csv, Dataset, Trajectory,
};
use crate::vectorize::{
    flatten, kernel, padded_window, persistence_image, persistence_image_in, write_image_csv,
    write_image_pgm, PersistenceImage, Window,
};

pub use config::{load_config, parse_config, ExperimentConfig};

/// Convergence threshold for the barycenter sweeps driven by the commands.
pub const BARYCENTER_TOL: f64 = 1e-8;
/// Sweep cap for the barycenter search driven by the commands.
pub const BARYCENTER_MAX_ITER: usize = 100;

fn placeholder_window() -> Window {
    Window {
        birth_min: 0.0,
        birth_max: 1.0,
        life_min: 0.0,
        life_max: 1.0,
    }
}

fn open_file(path: &std::path::Path) -> Result<fs::File> {
    fs::File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

/// Reads the input CSV named by the config, plus the maintenance sidecar
/// when one is configured, and assigns periods from the dates.
pub fn load_dataset(config: &ExperimentConfig) -> Result<Dataset> {
    let input = config
        .input
        .as_ref()
        .ok_or_else(|| Error::validation("config needs an `input` dataset path"))?;
    let file = open_file(input)?;
    let mut dataset = parse_trajectory_csv(BufReader::new(file))?;
    if let Some(path) = &config.maintenance {
        let file = open_file(path)?;
        dataset.maintenance_dates = parse_maintenance_dates(BufReader::new(file))?;
        dataset = segment_periods(dataset)?;
    }
    Ok(dataset)
}

/// Cycle (dimension 1) diagram of one trajectory after subsampling.
pub fn cycle_diagram(
    trajectory: &Trajectory,
    config: &ExperimentConfig,
) -> Result<PersistenceDiagram> {
    let reduced = subsample(
        trajectory,
        config.subsample_strategy,
        config.subsample_target,
    )?;
    let dm = distance_matrix(&reduced)?;
    let filtration = rips_filtration(&dm, None, 2)?;
    persistence_diagram(&filtration, 1, EssentialPolicy::default_for(1))
}

/// Cycle diagrams for many trajectories, computed in parallel but returned
/// in input order.
pub fn cycle_diagrams(
    trajectories: &[&Trajectory],
    config: &ExperimentConfig,
) -> Result<Vec<PersistenceDiagram>> {
    trajectories
        .par_iter()
        .map(|t| cycle_diagram(t, config))
        .collect()
}

/// The smallest window covering the padded windows of every non-empty
/// diagram, so a family of images shares one grid. Returns the placeholder
/// unit window when every diagram is empty.
pub fn shared_window(lts: &[LifetimeDiagram], config: &ExperimentConfig) -> Result<Window> {
    let mut window: Option<Window> = None;
    for lt in lts {
        if lt.is_empty() {
            continue;
        }
        let k = kernel(lt, config.image_resolution)?;
        let w = padded_window(&k, config.delta)?;
        window = Some(match window {
            None => w,
            Some(u) => Window::union(u, w),
        });
    }
    Ok(window.unwrap_or_else(placeholder_window))
}

struct OutDir {
    root: PathBuf,
    files: Vec<PathBuf>,
}

impl OutDir {
    fn new(root: &std::path::Path) -> Result<Self> {
        fs::create_dir_all(root)?;
        Ok(Self {
            root: root.to_path_buf(),
            files: Vec::new(),
        })
    }

    fn emit(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        let path = self.root.join(name);
        fs::write(&path, bytes)?;
        self.files.push(path);
        Ok(())
    }

    fn names(&self) -> Vec<String> {
        self.files
            .iter()
            .map(|p| {
                p.file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_default()
            })
            .collect()
    }
}

fn image_files(out: &mut OutDir, stem: &str, image: &PersistenceImage) -> Result<()> {
    let mut pgm = Vec::new();
    write_image_pgm(image, &mut pgm)?;
    out.emit(&format!("{stem}.pgm"), &pgm)?;
    let mut csv = Vec::new();
    write_image_csv(image, &mut csv)?;
    out.emit(&format!("{stem}.csv"), &csv)
}

fn lookup_error(dataset: &Dataset, day: i64, patch: Option<u32>) -> Error {
    let days = dataset
        .days()
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let patches = dataset
        .patches()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let wanted = match patch {
        Some(p) => format!("day {day}, patch {p}"),
        None => format!("day {day}"),
    };
    Error::Lookup(format!(
        "no trajectory for {wanted}; available days: [{days}]; available patches: [{patches}]"
    ))
}

/// Artifacts of `analyze`.
#[derive(Debug)]
pub struct AnalyzeOutcome {
    pub files: Vec<PathBuf>,
    pub day: i64,
    pub patch: u32,
}

/// Renders one trajectory's diagnostics: the path itself, its persistence
/// diagram (components and cycles), the cycle lifetime plot, and the cycle
/// persistence image as PGM plus CSV, with the diagram also stored as JSON.
pub fn cmd_analyze(config: &ExperimentConfig) -> Result<AnalyzeOutcome> {
    let dataset = load_dataset(config)?;
    let day = config.day.unwrap_or_else(|| dataset.days()[0]);
    let patch = match config.patch {
        Some(p) => p,
        None => dataset
            .trajectories
            .iter()
            .filter(|t| t.day == day)
            .map(|t| t.patch_id)
            .min()
            .ok_or_else(|| lookup_error(&dataset, day, None))?,
    };
    let trajectory = dataset
        .find(day, patch)
        .ok_or_else(|| lookup_error(&dataset, day, Some(patch)))?;

    let reduced = subsample(
        trajectory,
        config.subsample_strategy,
        config.subsample_target,
    )?;
    let dm = distance_matrix(&reduced)?;
    let filtration = rips_filtration(&dm, None, 2)?;
    let h0 = persistence_diagram(&filtration, 0, EssentialPolicy::default_for(0))?;
    let h1 = persistence_diagram(&filtration, 1, EssentialPolicy::default_for(1))?;
    let lt = lifetime_diagram(&h1)?;
    let image = persistence_image(&lt, config.image_resolution, config.delta)?;

    let mut out = OutDir::new(&config.out)?;
    out.emit("trajectory.svg", plot::trajectory_svg(trajectory).as_bytes())?;
    out.emit("diagram.svg", plot::diagram_svg(&[&h0, &h1]).as_bytes())?;
    out.emit("lifetime.svg", plot::lifetime_svg(&lt, 1).as_bytes())?;
    image_files(&mut out, "image", &image)?;
    let mut json = Vec::new();
    write_diagram_json(&[&h0, &h1], &mut json)?;
    out.emit("diagram.json", &json)?;

    Ok(AnalyzeOutcome {
        files: out.files,
        day,
        patch,
    })
}

/// Artifacts and values of `distance-series`.
#[derive(Debug)]
pub struct SeriesOutcome {
    pub files: Vec<PathBuf>,
    pub patch: u32,
    pub days: Vec<i64>,
    pub series: Vec<f64>,
}

/// Wasserstein distance between each consecutive pair of days in one patch,
/// written as CSV and as an SVG with maintenance days marked.
pub fn cmd_distance_series(config: &ExperimentConfig) -> Result<SeriesOutcome> {
    let dataset = load_dataset(config)?;
    let patch = config.patch.unwrap_or_else(|| dataset.patches()[0]);
    let trajectories: Vec<&Trajectory> = dataset
        .trajectories
        .iter()
        .filter(|t| t.patch_id == patch)
        .collect();
    if trajectories.len() < 2 {
        return Err(Error::validation(format!(
            "distance series needs at least two days in patch {patch}"
        )));
    }
    let diagrams = cycle_diagrams(&trajectories, config)?;
    let series = wasserstein_series(&diagrams)?;

    let mut csv = String::from("index,distance\n");
    for (i, d) in series.iter().enumerate() {
        csv.push_str(&format!("{},{}\n", i + 1, d));
    }
    // Series element k (1-based) compares days at positions k and k+1, so a
    // maintenance day sitting at position k maps to mark position k.
    let marks: Vec<f64> = dataset
        .maintenance_dates
        .iter()
        .filter_map(|&m| {
            trajectories
                .iter()
                .position(|t| t.day >= m)
                .filter(|&k| k > 0)
                .map(|k| k as f64)
        })
        .collect();
    let svg = plot::series_svg(&series, &marks);

    let mut out = OutDir::new(&config.out)?;
    out.emit("series.csv", csv.as_bytes())?;
    out.emit("series.svg", svg.as_bytes())?;

    Ok(SeriesOutcome {
        files: out.files,
        patch,
        days: trajectories.iter().map(|t| t.day).collect(),
        series,
    })
}

/// Artifacts and values of `barycenters`.
#[derive(Debug)]
pub struct BarycenterOutcome {
    pub files: Vec<PathBuf>,
    /// Period ids that contained at least one trajectory.
    pub period_ids: Vec<usize>,
    /// Wasserstein distance between each pair of period barycenters.
    pub pairwise: Vec<(usize, usize, f64)>,
    /// Distances from the first period's half-interval barycenters to that
    /// period's full barycenter, when the period has at least two days.
    pub half_distances: Option<(f64, f64)>,
}

/// Computes one cycle-diagram barycenter per maintenance period, renders all
/// barycenter images over a shared window, splits the first period in half
/// as a stability check, and reports the pairwise barycenter distances.
pub fn cmd_barycenters(config: &ExperimentConfig) -> Result<BarycenterOutcome> {
    let dataset = load_dataset(config)?;
    if dataset.maintenance_dates.is_empty() {
        return Err(Error::validation(
            "barycenters needs a `maintenance` sidecar to define periods",
        ));
    }
    let mut by_period: BTreeMap<usize, Vec<&Trajectory>> = BTreeMap::new();
    for t in &dataset.trajectories {
        let p = t
            .period_id
            .ok_or_else(|| Error::validation("trajectory is missing a period assignment"))?;
        by_period.entry(p).or_default().push(t);
    }
    for p in 0..=dataset.maintenance_dates.len() {
        if !by_period.contains_key(&p) {
            eprintln!("warning: period {p} has no trajectories; skipping it");
        }
    }

    let mut barycenters: BTreeMap<usize, PersistenceDiagram> = BTreeMap::new();
    for (&p, trajectories) in &by_period {
        let diagrams = cycle_diagrams(trajectories, config)?;
        let result = barycenter(&diagrams, None, BARYCENTER_TOL, BARYCENTER_MAX_ITER)?;
        barycenters.insert(p, result.diagram);
    }

    let (&first_period, first_trajectories) = by_period.iter().next().expect("dataset is non-empty");
    let halves = if first_trajectories.len() >= 2 {
        let diagrams = cycle_diagrams(first_trajectories, config)?;
        let mid = diagrams.len() / 2;
        let first = barycenter(&diagrams[..mid], None, BARYCENTER_TOL, BARYCENTER_MAX_ITER)?;
        let second = barycenter(&diagrams[mid..], None, BARYCENTER_TOL, BARYCENTER_MAX_ITER)?;
        Some((first.diagram, second.diagram))
    } else {
        eprintln!(
            "warning: period {first_period} has a single day; skipping the half-interval check"
        );
        None
    };

    let mut lts: Vec<LifetimeDiagram> = Vec::new();
    for d in barycenters.values() {
        lts.push(lifetime_diagram(d)?);
    }
    if let Some((a, b)) = &halves {
        lts.push(lifetime_diagram(a)?);
        lts.push(lifetime_diagram(b)?);
    }
    let window = shared_window(&lts, config)?;

    let mut out = OutDir::new(&config.out)?;
    let emit_diagram = |out: &mut OutDir, stem: &str, d: &PersistenceDiagram| -> Result<()> {
        let mut json = Vec::new();
        write_diagram_json(&[d], &mut json)?;
        out.emit(&format!("{stem}.json"), &json)?;
        let lt = lifetime_diagram(d)?;
        let image = persistence_image_in(&lt, config.image_resolution, config.delta, window)?;
        image_files(out, stem, &image)
    };
    for (&p, d) in &barycenters {
        emit_diagram(&mut out, &format!("period{p}_barycenter"), d)?;
    }

    let mut report = String::new();
    let ids: Vec<usize> = barycenters.keys().copied().collect();
    let mut pairwise = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            let w = wasserstein(&barycenters[&a], &barycenters[&b])?;
            report.push_str(&format!("period {a} vs period {b}: {w}\n"));
            pairwise.push((a, b, w));
        }
    }
    let half_distances = match &halves {
        Some((first, second)) => {
            emit_diagram(
                &mut out,
                &format!("period{first_period}_firsthalf_barycenter"),
                first,
            )?;
            emit_diagram(
                &mut out,
                &format!("period{first_period}_secondhalf_barycenter"),
                second,
            )?;
            let full = &barycenters[&first_period];
            let w1 = wasserstein(first, full)?;
            let w2 = wasserstein(second, full)?;
            report.push_str(&format!(
                "period {first_period} first half vs period {first_period}: {w1}\n"
            ));
            report.push_str(&format!(
                "period {first_period} second half vs period {first_period}: {w2}\n"
            ));
            Some((w1, w2))
        }
        None => None,
    };
    out.emit("distances.txt", report.as_bytes())?;

    Ok(BarycenterOutcome {
        files: out.files,
        period_ids: ids,
        pairwise,
        half_distances,
    })
}

/// Persisted record of one classification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: String,
    pub accuracy: f64,
    pub train_size: usize,
    pub test_size: usize,
    pub train_label_counts: [usize; 2],
    pub test_label_counts: [usize; 2],
    pub labels_shuffled: bool,
    pub train_indices: Vec<usize>,
    pub test_indices: Vec<usize>,
    pub settings: BTreeMap<String, String>,
    pub manifest: Vec<String>,
}

/// Artifacts and values of the classification commands.
#[derive(Debug)]
pub struct ClassifyOutcome {
    pub files: Vec<PathBuf>,
    pub report: ExperimentReport,
}

/// Persistence-image feature vectors for every trajectory in the dataset,
/// in dataset order, over one shared window.
pub fn image_features(dataset: &Dataset, config: &ExperimentConfig) -> Result<Vec<Vec<f64>>> {
    let trajectories: Vec<&Trajectory> = dataset.trajectories.iter().collect();
    let diagrams = cycle_diagrams(&trajectories, config)?;
    let lts: Vec<LifetimeDiagram> = diagrams
        .iter()
        .map(lifetime_diagram)
        .collect::<Result<_>>()?;
    let window = shared_window(&lts, config)?;
    lts.par_iter()
        .map(|lt| {
            persistence_image_in(lt, config.image_resolution, config.delta, window)
                .map(|image| flatten(&image))
        })
        .collect()
}

/// Labels trajectories by patch identity: 1 for the target patch, else 0.
pub fn patch_labels(dataset: &Dataset, target: u32) -> Vec<u8> {
    dataset
        .trajectories
        .iter()
        .map(|t| u8::from(t.patch_id == target))
        .collect()
}

/// Labels trajectories by maintenance state: 0 before `date`, 1 from `date`
/// onwards.
pub fn maintenance_labels(dataset: &Dataset, date: i64) -> Vec<u8> {
    dataset
        .trajectories
        .iter()
        .map(|t| u8::from(t.day >= date))
        .collect()
}

fn count_labels(labels: &[u8], indices: &[usize]) -> [usize; 2] {
    let ones = indices.iter().filter(|&&i| labels[i] == 1).count();
    [indices.len() - ones, ones]
}

fn run_classification(
    config: &ExperimentConfig,
    command: &str,
    dataset: &Dataset,
    mut labels: Vec<u8>,
) -> Result<ClassifyOutcome> {
    debug_assert_eq!(labels.len(), dataset.trajectories.len());
    if config.shuffle_labels {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x9e37_79b9_7f4a_7c15);
        labels.shuffle(&mut rng);
    }
    let features = image_features(dataset, config)?;
    let samples: Vec<LabeledSample> = features
        .into_iter()
        .zip(&labels)
        .map(|(f, &l)| LabeledSample::new(f, l))
        .collect::<Result<_>>()?;

    let (train_indices, test_indices) =
        train_test_split_indices(&labels, config.train_fraction, config.seed)?;
    let pick = |idx: &[usize]| -> Vec<LabeledSample> {
        idx.iter().map(|&i| samples[i].clone()).collect()
    };
    let train = pick(&train_indices);
    let test = pick(&test_indices);
    let model = fit(
        &train,
        config.inverse_regularization,
        config.max_iter,
        config.tol,
    )?;
    let test_accuracy = accuracy(&model, &test)?;

    let report = ExperimentReport {
        command: command.to_string(),
        accuracy: test_accuracy,
        train_size: train.len(),
        test_size: test.len(),
        train_label_counts: count_labels(&labels, &train_indices),
        test_label_counts: count_labels(&labels, &test_indices),
        labels_shuffled: config.shuffle_labels,
        train_indices,
        test_indices,
        settings: config.echo(),
        manifest: vec![
            "model.json".to_string(),
            "summary.txt".to_string(),
            "report.json".to_string(),
        ],
    };

    let mut out = OutDir::new(&config.out)?;
    let mut model_json = Vec::new();
    write_model_json(&model, &mut model_json)?;
    out.emit("model.json", &model_json)?;
    out.emit("summary.txt", summary_text(&report).as_bytes())?;
    let report_json =
        serde_json::to_vec_pretty(&report).map_err(|e| Error::validation(e.to_string()))?;
    out.emit("report.json", &report_json)?;
    debug_assert_eq!(report.manifest, out.names());

    Ok(ClassifyOutcome {
        files: out.files,
        report,
    })
}

fn summary_text(report: &ExperimentReport) -> String {
    format!(
        "command: {}\nsamples: {} train, {} test\ntrain labels: {} zeros, {} ones\n\
         test labels: {} zeros, {} ones\nlabels shuffled: {}\ntest accuracy: {:.4}\n",
        report.command,
        report.train_size,
        report.test_size,
        report.train_label_counts[0],
        report.train_label_counts[1],
        report.test_label_counts[0],
        report.test_label_counts[1],
        report.labels_shuffled,
        report.accuracy,
    )
}

/// Trains the patch-identity classifier: persistence images in, one-vs-rest
/// label for the target patch out. Writes the model, a report with the
/// split indices, and a human-readable summary.
pub fn cmd_classify_patch(config: &ExperimentConfig) -> Result<ClassifyOutcome> {
    let dataset = load_dataset(config)?;
    let patches = dataset.patches();
    if patches.len() < 2 {
        return Err(Error::validation(
            "patch classification needs at least two patches in the dataset",
        ));
    }
    let target = config
        .target_patch
        .ok_or_else(|| Error::validation("patch classification needs `target_patch`"))?;
    if !patches.contains(&target) {
        return Err(Error::validation(format!(
            "target patch {target} is not in the dataset; available patches: {patches:?}"
        )));
    }
    let labels = patch_labels(&dataset, target);
    run_classification(config, "classify-patch", &dataset, labels)
}

/// Trains the maintenance-state classifier: persistence images in, label 0
/// before the maintenance date and 1 from it onwards.
pub fn cmd_classify_maintenance(config: &ExperimentConfig) -> Result<ClassifyOutcome> {
    let dataset = load_dataset(config)?;
    let date = match (config.maintenance_date, dataset.maintenance_dates.as_slice()) {
        (Some(d), _) => d,
        (None, [d]) => *d,
        (None, []) => {
            return Err(Error::validation(
                "maintenance classification needs a maintenance date \
                 (sidecar or `maintenance_date`)",
            ))
        }
        (None, dates) => {
            return Err(Error::validation(format!(
                "dataset has several maintenance dates {dates:?}; set `maintenance_date`"
            )))
        }
    };
    let labels = maintenance_labels(&dataset, date);
    let days_after: std::collections::BTreeSet<i64> = dataset
        .trajectories
        .iter()
        .filter(|t| t.day >= date)
        .map(|t| t.day)
        .collect();
    let days_before: std::collections::BTreeSet<i64> = dataset
        .trajectories
        .iter()
        .filter(|t| t.day < date)
        .map(|t| t.day)
        .collect();
    if days_before.len() < 2 || days_after.len() < 2 {
        return Err(Error::validation(format!(
            "maintenance classification needs at least two days on each side of day {date}; \
             found {} before and {} after",
            days_before.len(),
            days_after.len()
        )));
    }
    run_classification(config, "classify-maintenance", &dataset, labels)
}

/// Artifacts of `synth`.
#[derive(Debug)]
pub struct SynthOutcome {
    pub files: Vec<PathBuf>,
    pub dataset: Dataset,
}

/// Generates the synthetic dataset described by the config and writes the
/// trajectory CSV plus the maintenance-date sidecar.
pub fn cmd_synth(config: &ExperimentConfig) -> Result<SynthOutcome> {
    let synth_config = config.synth_config()?;
    let dataset = generate_synthetic(&synth_config)?;
    let mut out = OutDir::new(&config.out)?;
    let mut csv = Vec::new();
    write_trajectory_csv(&dataset, &mut csv)?;
    out.emit("dataset.csv", &csv)?;
    let mut dates = Vec::new();
    write_maintenance_dates(&dataset.maintenance_dates, &mut dates)?;
    out.emit("maintenance.txt", &dates)?;
    Ok(SynthOutcome {
        files: out.files,
        dataset,
    })
}

/// The six commands the binary exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Analyze,
    DistanceSeries,
    Barycenters,
    ClassifyPatch,
    ClassifyMaintenance,
    Synth,
}

fn announce(files: &[PathBuf]) {
    for f in files {
        println!("wrote {}", f.display());
    }
}

/// Runs one command and prints its artifact list and result line.
pub fn run(kind: CommandKind, config: &ExperimentConfig) -> Result<()> {
    match kind {
        CommandKind::Analyze => {
            let outcome = cmd_analyze(config)?;
            announce(&outcome.files);
            println!("analyzed day {}, patch {}", outcome.day, outcome.patch);
        }
        CommandKind::DistanceSeries => {
            let outcome = cmd_distance_series(config)?;
            announce(&outcome.files);
            println!(
                "distance series over {} days of patch {}",
                outcome.days.len(),
                outcome.patch
            );
        }
        CommandKind::Barycenters => {
            let outcome = cmd_barycenters(config)?;
            announce(&outcome.files);
            for (a, b, w) in &outcome.pairwise {
                println!("period {a} vs period {b}: {w}");
            }
            if let Some((w1, w2)) = outcome.half_distances {
                println!("half-interval distances to the full barycenter: {w1} and {w2}");
            }
        }
        CommandKind::ClassifyPatch => {
            let outcome = cmd_classify_patch(config)?;
            announce(&outcome.files);
            println!("test accuracy: {:.4}", outcome.report.accuracy);
        }
        CommandKind::ClassifyMaintenance => {
            let outcome = cmd_classify_maintenance(config)?;
            announce(&outcome.files);
            println!("test accuracy: {:.4}", outcome.report.accuracy);
        }
        CommandKind::Synth => {
            let outcome = cmd_synth(config)?;
            announce(&outcome.files);
            println!(
                "generated {} trajectories over {} days",
                outcome.dataset.trajectories.len(),
                outcome.dataset.days().len()
            );
        }
    }
    Ok(())
}
