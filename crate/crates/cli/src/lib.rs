//! Experiment plumbing behind the `signed-search` binary: configuration,
//! the subcommands, and the files they write.
//!
//! Every command validates its configuration before doing any numerical work
//! and writes a materialized copy of it (`config.json`) next to its outputs,
//! so a run can be repeated from its report alone.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use signed_search::bounds::{verify_all, BoundEntry, BoundLedger};
use signed_search::classical_search::{
    hitting_time, mc_hitting_time, HittingTimeResult, SolverKind,
};
use signed_search::formats::write_series_csv;
use signed_search::operators::DiscriminantMatrix;
use signed_search::quantum_search::{quantum_time, run_series_with};
use signed_search::spectral::SpectralSummary;
use signed_search::{Error as CoreError, SignedCompleteGraph, SubgraphDescriptor};

/// Largest accepted `t_max`; the series is held in memory.
pub const T_MAX_LIMIT: u64 = 1_000_000;

pub const CONFIG_FILE: &str = "config.json";
pub const REPORT_FILE: &str = "report.json";
pub const SERIES_FILE: &str = "series.csv";
pub const LEDGER_FILE: &str = "ledger.json";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Degenerate(String),

    #[error("verification failed: {failed} hypothesis-satisfied entries violated")]
    Verification {
        failed: usize,
        entries: Vec<BoundEntry>,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Compute(CoreError),
}

impl CliError {
    /// 0 success, 1 verification or numerical failure, 2 usage/config/I/O,
    /// 3 degenerate spectrum.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification { .. } | CliError::Compute(_) => 1,
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Degenerate(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Degenerate(_) => "degenerate_spectrum",
            CliError::Verification { .. } => "verification",
            CliError::Io { .. } => "io",
            CliError::Compute(_) => "compute",
        }
    }

    /// Machine-readable form printed on stderr by the binary.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "error": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Verification { entries, .. } = self {
            v["entries"] = serde_json::to_value(entries).unwrap_or_default();
        }
        v
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::DegenerateSpectrum { .. } => CliError::Degenerate(e.to_string()),
            CoreError::TooSmall { .. }
            | CoreError::EmptySubgraph
            | CoreError::InvalidVertex { .. }
            | CoreError::LoopEdge { .. }
            | CoreError::DuplicateEdge { .. }
            | CoreError::InvalidEdge { .. }
            | CoreError::InvalidArc { .. }
            | CoreError::InvalidDescriptor(_)
            | CoreError::TooLarge { .. }
            | CoreError::EmptyComplement
            | CoreError::ZeroTrials
            | CoreError::MalformedSeries(_) => CliError::Config(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn io_err(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: usize,
    pub subgraph: SubgraphDescriptor,
    /// Defaults to `2·t_f` when the spectrum is non-degenerate.
    #[serde(default)]
    pub t_max: Option<u64>,
    /// Monte-Carlo trials; 0 skips the estimate.
    #[serde(default)]
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn new(n: usize, subgraph: SubgraphDescriptor) -> Self {
        ExperimentConfig {
            n,
            subgraph,
            t_max: None,
            trials: 0,
            seed: 0,
            output_dir: default_output_dir(),
        }
    }

    /// Parses and validates a persisted configuration.
    pub fn from_json(text: &str) -> CliResult<Self> {
        let config: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Checks every field without touching the spectrum.
    pub fn validate(&self) -> CliResult<SignedCompleteGraph> {
        if let Some(t) = self.t_max {
            if t > T_MAX_LIMIT {
                return Err(CliError::Config(format!(
                    "t_max = {t} exceeds the limit of {T_MAX_LIMIT}"
                )));
            }
        }
        if self.output_dir.as_os_str().is_empty() {
            return Err(CliError::Config("output directory is empty".into()));
        }
        Ok(self.subgraph.instantiate(self.n)?)
    }

    /// Fills `t_max` from the spectrum when it was left open.
    pub fn materialize(&mut self, summary: &SpectralSummary) {
        if self.t_max.is_none() {
            if let Ok(t_f) = quantum_time(summary) {
                self.t_max = Some((2 * t_f).min(T_MAX_LIMIT));
            }
        }
    }

    fn persist(&self) -> CliResult<()> {
        write_file(&self.output_dir.join(CONFIG_FILE), &self.to_json())
    }
}

/// Reads `--subgraph`: inline JSON when it starts with `{`, a file path otherwise.
pub fn resolve_subgraph(arg: &str) -> CliResult<SubgraphDescriptor> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| CliError::Config(format!("cannot read descriptor file {arg}: {e}")))?
    };
    Ok(SubgraphDescriptor::parse(&text)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(io_err(format!("creating {}", dir.display())))?;
        }
    }
    fs::write(path, contents).map_err(io_err(format!("writing {}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    write_file(path, &(text + "\n"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralScalars {
    pub lambda_max: f64,
    pub theta_max: f64,
    pub gap: f64,
    pub overlap: f64,
    pub top_multiplicity: usize,
    pub degenerate: bool,
}

impl From<&SpectralSummary> for SpectralScalars {
    fn from(s: &SpectralSummary) -> Self {
        SpectralScalars {
            lambda_max: s.lambda_max,
            theta_max: s.theta_max,
            gap: s.gap,
            overlap: s.overlap,
            top_multiplicity: s.top_multiplicity,
            degenerate: s.degenerate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McReport {
    pub mean: f64,
    pub standard_error: f64,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub t_c: f64,
    pub lambda_max_p: f64,
    pub solver_residual: f64,
    pub solver: String,
    pub iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mc_estimate: Option<McReport>,
}

impl ClassicalReport {
    fn from_result(r: &HittingTimeResult) -> Self {
        ClassicalReport {
            t_c: r.t_c,
            lambda_max_p: r.lambda_max_p,
            solver_residual: r.solver_residual,
            solver: match r.solver {
                SolverKind::Cholesky => "cholesky",
                SolverKind::ConjugateGradient => "conjugate_gradient",
            }
            .to_owned(),
            iterations: r.iterations,
            mc_estimate: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerCounts {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// What every single-instance command writes to `report.json`. Fields a
/// command does not compute are omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: String,
    pub config: ExperimentConfig,
    pub marked_edges: usize,
    pub gamma_order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spectral: Option<SpectralScalars>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t_f: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub series_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fp_at_tf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classical: Option<ClassicalReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ledger_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ledger_counts: Option<LedgerCounts>,
}

impl ExperimentReport {
    fn new(command: &str, config: &ExperimentConfig, g: &SignedCompleteGraph) -> Self {
        ExperimentReport {
            command: command.to_owned(),
            config: config.clone(),
            marked_edges: g.marked_edge_count(),
            gamma_order: g.gamma_order(),
            spectral: None,
            t_f: None,
            series_path: None,
            fp_at_tf: None,
            classical: None,
            ledger_path: None,
            ledger_counts: None,
        }
    }

    fn write(&self) -> CliResult<()> {
        write_json(&self.config.output_dir.join(REPORT_FILE), self)
    }
}

fn spectrum_of(g: &SignedCompleteGraph) -> CliResult<SpectralSummary> {
    Ok(SpectralSummary::analyze(&DiscriminantMatrix::new(g))?)
}

fn classical_of(g: &SignedCompleteGraph, config: &ExperimentConfig) -> CliResult<ClassicalReport> {
    let res = hitting_time(g)?;
    let mut report = ClassicalReport::from_result(&res);
    if config.trials > 0 {
        let mc = mc_hitting_time(g, config.trials, config.seed)?;
        report.mc_estimate = Some(McReport {
            mean: mc.mean,
            standard_error: mc.standard_error,
            trials: mc.trials,
            seed: config.seed,
        });
    }
    Ok(report)
}

/// Exact walk from `j` for `t = 0..=t_max`; writes `series.csv`, the config
/// copy and `report.json`.
pub fn cmd_simulate(config: &ExperimentConfig) -> CliResult<ExperimentReport> {
    let g = config.validate()?;
    let summary = spectrum_of(&g)?;
    summary.ensure_nondegenerate()?;
    let mut config = config.clone();
    config.materialize(&summary);
    let t_max = config
        .t_max
        .expect("materialized for non-degenerate spectra");
    let series = run_series_with(&g, t_max, &summary)?;

    config.persist()?;
    let series_path = config.output_dir.join(SERIES_FILE);
    write_file(&series_path, &write_series_csv(&series.fp))?;

    let mut report = ExperimentReport::new("simulate", &config, &g);
    report.spectral = Some((&summary).into());
    report.t_f = series.t_f;
    report.fp_at_tf = series.fp_at_tf;
    report.series_path = Some(series_path);
    if config.trials > 0 {
        report.classical = Some(classical_of(&g, &config)?);
    }
    report.write()?;
    Ok(report)
}

/// Exact classical hitting time, plus a Monte-Carlo estimate when
/// `trials > 0`.
pub fn cmd_classical(config: &ExperimentConfig) -> CliResult<ExperimentReport> {
    let g = config.validate()?;
    let classical = classical_of(&g, config)?;
    let summary = spectrum_of(&g)?;
    let mut config = config.clone();
    config.materialize(&summary);
    config.persist()?;
    let mut report = ExperimentReport::new("classical", &config, &g);
    report.spectral = Some((&summary).into());
    report.t_f = quantum_time(&summary).ok();
    report.classical = Some(classical);
    report.write()?;
    Ok(report)
}

/// Runs every bound check and writes `ledger.json`. Fails with
/// [`CliError::Verification`] when a hypothesis-satisfied entry is violated;
/// the ledger and report are written either way.
pub fn cmd_verify(config: &ExperimentConfig) -> CliResult<(ExperimentReport, BoundLedger)> {
    let g = config.validate()?;
    let ledger = verify_all(&g)?;
    let summary = spectrum_of(&g)?;
    let mut config = config.clone();
    config.materialize(&summary);
    config.persist()?;

    let ledger_path = config.output_dir.join(LEDGER_FILE);
    write_json(&ledger_path, &ledger)?;
    let (passed, failed, skipped) = ledger.counts();
    let mut report = ExperimentReport::new("verify", &config, &g);
    report.spectral = Some((&summary).into());
    report.t_f = quantum_time(&summary).ok();
    report.ledger_path = Some(ledger_path);
    report.ledger_counts = Some(LedgerCounts {
        passed,
        failed,
        skipped,
    });
    report.write()?;
    if failed > 0 {
        return Err(CliError::Verification {
            failed,
            entries: ledger.failures().cloned().collect(),
        });
    }
    Ok((report, ledger))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub config: ExperimentConfig,
    pub eigenvalues: Vec<f64>,
    /// Principal eigenvector in external vertex labels.
    pub principal_vector: Vec<f64>,
    pub scalars: SpectralScalars,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t_f: Option<u64>,
    pub spanning_complete_bipartite: bool,
}

/// Spectrum of `T_Γ` and its principal pair. Reports degeneracy instead of
/// failing on it.
pub fn cmd_spectrum(config: &ExperimentConfig) -> CliResult<SpectrumReport> {
    let g = config.validate()?;
    let summary = spectrum_of(&g)?;
    let mut config = config.clone();
    config.materialize(&summary);
    config.persist()?;
    let size = g.order();
    let principal_vector = (0..size)
        .map(|label| g.canonical_index(label).map(|i| summary.f[i]))
        .collect::<Result<_, _>>()?;
    let report = SpectrumReport {
        eigenvalues: summary.eigenvalues.clone(),
        principal_vector,
        scalars: (&summary).into(),
        t_f: quantum_time(&summary).ok(),
        spanning_complete_bipartite: g.is_spanning_complete_bipartite(),
        config,
    };
    write_json(&report.config.output_dir.join("spectrum.json"), &report)?;
    Ok(report)
}

pub const FIG2_N: usize = 99;
pub const FIG2_T_MAX: u64 = 100;
/// Half-width of the window around `t_f` searched for the local maximum.
pub const FIG2_WINDOW: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepValue {
    pub step: u64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig2Entry {
    pub name: String,
    pub subgraph: SubgraphDescriptor,
    pub t_f: u64,
    pub fp_step1: f64,
    pub fp_at_tf: f64,
    pub fp_before_tf: f64,
    /// Maximum over `t_f − FIG2_WINDOW ..= t_f + FIG2_WINDOW`.
    pub window_max: StepValue,
    pub series_path: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig2Summary {
    pub n: usize,
    pub t_max: u64,
    pub entries: Vec<Fig2Entry>,
}

/// Paths `P_2, P_3, P_4` marked in `K_100`, walked for 100 steps.
pub fn cmd_fig2(output_dir: &Path) -> CliResult<Fig2Summary> {
    let mut entries = Vec::new();
    for k in 1..=3 {
        let name = format!("P{}", k + 1);
        let subgraph = SubgraphDescriptor::Path { k };
        let g = subgraph.instantiate(FIG2_N)?;
        let summary = spectrum_of(&g)?;
        summary.ensure_nondegenerate()?;
        let series = run_series_with(&g, FIG2_T_MAX, &summary)?;
        let t_f = series.t_f.expect("non-degenerate");
        let window_max = series
            .max_in_window(t_f.saturating_sub(FIG2_WINDOW), t_f + FIG2_WINDOW)
            .map(|(step, probability)| StepValue { step, probability })
            .expect("window inside the series");
        let series_path = output_dir.join(format!("fig2_{name}.csv"));
        write_file(&series_path, &write_series_csv(&series.fp))?;
        entries.push(Fig2Entry {
            name,
            subgraph,
            t_f,
            fp_step1: series.fp[1],
            fp_at_tf: series.fp[t_f as usize],
            fp_before_tf: series.fp[t_f as usize - 1],
            window_max,
            series_path,
        });
    }
    let summary = Fig2Summary {
        n: FIG2_N,
        t_max: FIG2_T_MAX,
        entries,
    };
    write_json(&output_dir.join("fig2_summary.json"), &summary)?;
    Ok(summary)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpeedupRow {
    pub n: usize,
    pub marked_edges: usize,
    pub t_f: u64,
    /// `t_f·√|E(Γ)|/n`.
    pub t_f_normalized: f64,
    pub t_c: f64,
    /// `t_c·|E(Γ)|/n²`.
    pub t_c_normalized: f64,
    /// `t_c / t_f`.
    pub speedup: f64,
}

pub const SPEEDUP_CSV_HEADER: &str = "n,marked_edges,t_f,t_f_normalized,t_c,t_c_normalized,speedup";

/// One row per `n`; writes `speedup.csv` and `speedup.json`.
pub fn cmd_speedup(
    n_list: &[usize],
    subgraph: &SubgraphDescriptor,
    output_dir: &Path,
) -> CliResult<Vec<SpeedupRow>> {
    if n_list.is_empty() {
        return Err(CliError::Config("n list is empty".into()));
    }
    let graphs = n_list
        .iter()
        .map(|&n| subgraph.instantiate(n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let summary = spectrum_of(g)?;
        summary.ensure_nondegenerate()?;
        let t_f = quantum_time(&summary)?;
        let t_c = hitting_time(g)?.t_c;
        let n = g.n() as f64;
        let e = g.marked_edge_count();
        rows.push(SpeedupRow {
            n: g.n(),
            marked_edges: e,
            t_f,
            t_f_normalized: t_f as f64 * (e as f64).sqrt() / n,
            t_c,
            t_c_normalized: t_c * e as f64 / (n * n),
            speedup: t_c / t_f as f64,
        });
    }
    let mut csv = String::from(SPEEDUP_CSV_HEADER);
    csv.push('\n');
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{:.10},{:.10},{:.10},{:.10}\n",
            r.n, r.marked_edges, r.t_f, r.t_f_normalized, r.t_c, r.t_c_normalized, r.speedup
        ));
    }
    write_file(&output_dir.join("speedup.csv"), &csv)?;
    write_json(&output_dir.join("speedup.json"), &rows)?;
    Ok(rows)
}
