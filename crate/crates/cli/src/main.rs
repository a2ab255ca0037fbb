//! `nodevec`: parse C sources, train node-kind embeddings, and inspect or
//! use them.
//!
//! Exit codes: 0 success, 1 usage, 2 input or format error, 3 numerical
//! failure.

use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};

use cparse::{parse_file, CParseError};
use nodevec::analysis::{self, Metric, ReportOptions, DEFAULT_RESTARTS};
use nodevec::ast::{dump_ast, Corpus, LabeledProgram, NodeKind};
use nodevec::classify::{self, ClassifierConfig, ClassifyError, ProtocolConfig};
use nodevec::embeddings::{write_embeddings, EmbeddingTable};
use nodevec::sampling::build_training_set;
use nodevec::trainer::{load_checkpoint, save_checkpoint, write_loss_log, Checkpoint, TrainError, TrainOptions, Trainer};
use nodevec::Hyperparams;

#[derive(Parser, Debug)]
#[command(name = "nodevec", version, about = "AST node-kind embeddings for C programs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse C files into AST documents.
    Parse(ParseArgs),
    /// Parse a `ROOT/<label>/*.c` tree into a labeled JSONL corpus.
    CorpusBuild(CorpusBuildArgs),
    /// Train embeddings on a corpus and write a checkpoint.
    Train(TrainArgs),
    /// Nearest neighbors of one symbol.
    Nn(NnArgs),
    /// k-means over the embedding table.
    Cluster(ClusterArgs),
    /// Compare classifiers on a fixed 3:1:1 split of a corpus.
    Classify(ClassifyArgs),
    /// Write the embedding table in the `V N_f` text format.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct ParseArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Write `<stem>.json` per input here instead of printing to stdout.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorpusBuildArgs {
    root: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct TrainArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// Checkpoint path.
    #[arg(long)]
    out: PathBuf,
    /// Per-epoch loss CSV.
    #[arg(long)]
    loss_log: Option<PathBuf>,
    /// Continue from this checkpoint up to `--epochs` total epochs; the
    /// other hyperparameter flags are ignored.
    #[arg(long)]
    resume: Option<PathBuf>,
    #[command(flatten)]
    hyper: HyperArgs,
    /// Visit samples in corpus order.
    #[arg(long)]
    no_shuffle: bool,
    /// Always run the full epoch count.
    #[arg(long)]
    no_early_stop: bool,
}

#[derive(Args, Debug)]
struct HyperArgs {
    #[arg(long, default_value_t = Hyperparams::default().dim)]
    dim: usize,
    #[arg(long, default_value_t = Hyperparams::default().margin)]
    margin: f64,
    #[arg(long, default_value_t = Hyperparams::default().lambda)]
    lambda: f64,
    #[arg(long, default_value_t = Hyperparams::default().learning_rate)]
    lr: f64,
    #[arg(long, default_value_t = Hyperparams::default().momentum)]
    momentum: f64,
    #[arg(long, default_value_t = Hyperparams::default().epochs)]
    epochs: usize,
    #[arg(long, default_value_t = Hyperparams::default().seed)]
    seed: u64,
}

impl HyperArgs {
    fn to_hyperparams(&self) -> Hyperparams {
        Hyperparams {
            dim: self.dim,
            margin: self.margin,
            lambda: self.lambda,
            learning_rate: self.lr,
            momentum: self.momentum,
            epochs: self.epochs,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Euclidean,
    Cosine,
}

#[derive(Args, Debug)]
struct NnArgs {
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long)]
    symbol: String,
    #[arg(long, default_value_t = 5)]
    top: usize,
    #[arg(long, value_enum, default_value_t = MetricArg::Euclidean)]
    metric: MetricArg,
}

#[derive(Args, Debug)]
struct ClusterArgs {
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Also write neighbors.csv, clusters.csv and report.txt here.
    #[arg(long)]
    report_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// Checkpoint with the pretrained embeddings.
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    /// Model initialization and minibatch seed.
    #[arg(long, default_value_t = ProtocolConfig::default().model_seed)]
    seed: u64,
    #[arg(long, default_value_t = ProtocolConfig::default().split_seed)]
    split_seed: u64,
    /// Epochs for every classifier.
    #[arg(long)]
    epochs: Option<usize>,
    /// Hidden layer widths of the feed-forward net.
    #[arg(long, value_delimiter = ',')]
    hidden: Option<Vec<usize>>,
    /// Keep the embedding table fixed while training the feed-forward net.
    #[arg(long)]
    no_fine_tune: bool,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

/// A failed command and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Input(anyhow::Error),
    Numerical(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.into())
    }
}

impl From<TrainError> for Failure {
    fn from(e: TrainError) -> Self {
        match e {
            TrainError::NonFinite { .. } => Failure::Numerical(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Divergence(_) => Failure::Numerical(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Parse(args) => cmd_parse(&args),
        Command::CorpusBuild(args) => cmd_corpus_build(&args),
        Command::Train(args) => cmd_train(&args),
        Command::Nn(args) => cmd_nn(&args),
        Command::Cluster(args) => cmd_cluster(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Export(args) => cmd_export(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let code = failure.code();
            let (Failure::Usage(e) | Failure::Input(e) | Failure::Numerical(e)) = failure;
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

/// `file:line:col: message` for positioned errors.
fn diagnostic(path: &Path, err: &CParseError) -> anyhow::Error {
    match err {
        CParseError::Lex(e) => anyhow!("{}:{e}", path.display()),
        CParseError::Parse(e) => anyhow!("{}:{e}", path.display()),
        CParseError::Io { .. } => anyhow!("{err}"),
    }
}

fn cmd_parse(args: &ParseArgs) -> CmdResult {
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for path in &args.files {
        let tree = parse_file(path).map_err(|e| diagnostic(path, &e))?;
        let doc = dump_ast(&tree);
        match &args.out_dir {
            Some(dir) => {
                let stem = path.file_stem().ok_or_else(|| anyhow!("{}: no file name", path.display()))?;
                let target = dir.join(stem).with_extension("json");
                fs::write(&target, doc + "\n").with_context(|| format!("writing {}", target.display()))?;
            }
            None => writeln!(out, "{doc}")?,
        }
    }
    Ok(())
}

fn sorted_entries(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut entries = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<io::Result<Vec<_>>>()?;
    entries.sort();
    Ok(entries)
}

fn cmd_corpus_build(args: &CorpusBuildArgs) -> CmdResult {
    let mut programs = Vec::new();
    let mut skipped = 0usize;
    let listing = |p: &Path| sorted_entries(p).with_context(|| format!("listing {}", p.display()));
    for label_dir in listing(&args.root)? {
        if !label_dir.is_dir() {
            continue;
        }
        let label = file_name(&label_dir)?;
        for path in listing(&label_dir)? {
            if path.extension().is_none_or(|x| x != "c") {
                continue;
            }
            match parse_file(&path) {
                Ok(ast) => programs.push(LabeledProgram {
                    label: label.clone(),
                    source_id: format!("{label}/{}", file_name(&path)?),
                    ast,
                }),
                Err(e) => {
                    warn!("skipping {}", diagnostic(&path, &e));
                    skipped += 1;
                }
            }
        }
    }
    if programs.is_empty() {
        return Err(anyhow!("no parsable programs under {}", args.root.display()).into());
    }
    let corpus = Corpus::new(programs);
    let mut writer = BufWriter::new(create(&args.out)?);
    corpus.write_jsonl(&mut writer).map_err(anyhow::Error::from)?;
    writer.flush()?;
    info!("{} programs, {} labels, {} skipped", corpus.len(), corpus.labels().len(), skipped);
    Ok(())
}

fn file_name(path: &Path) -> anyhow::Result<String> {
    path.file_name()
        .and_then(|n| n.to_str())
        .map(str::to_owned)
        .ok_or_else(|| anyhow!("{}: file name is not UTF-8", path.display()))
}

fn create(path: &Path) -> anyhow::Result<File> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
    }
    File::create(path).with_context(|| format!("creating {}", path.display()))
}

fn read_corpus(path: &Path) -> anyhow::Result<Corpus> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Corpus::read_jsonl(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn read_checkpoint(path: &Path) -> anyhow::Result<Checkpoint> {
    load_checkpoint(path).with_context(|| format!("loading {}", path.display()))
}

fn cmd_train(args: &TrainArgs) -> CmdResult {
    let hyper = args.hyper.to_hyperparams();
    hyper.validate().map_err(|e| Failure::Usage(e.into()))?;
    let corpus = read_corpus(&args.corpus)?;
    let samples = build_training_set(&corpus.programs);
    let mut trainer = match &args.resume {
        Some(path) => {
            let mut cp = read_checkpoint(path)?;
            cp.hyperparams.epochs = hyper.epochs;
            Trainer::from_checkpoint(&cp).map_err(anyhow::Error::from)?
        }
        None => {
            let options = TrainOptions {
                shuffle: !args.no_shuffle,
                stop_on_convergence: !args.no_early_stop,
            };
            Trainer::new(hyper, options)?
        }
    };
    info!("{} programs, {} samples", corpus.len(), samples.len());
    let report = trainer.run(&samples)?;
    save_checkpoint(&trainer.checkpoint(), &args.out).with_context(|| format!("writing {}", args.out.display()))?;
    if let Some(path) = &args.loss_log {
        let mut writer = BufWriter::new(create(path)?);
        write_loss_log(&report.mean_hinge, &report.objective, report.seed, &mut writer)?;
        writer.flush()?;
    }
    info!(
        "{} epochs, converged: {}, final mean hinge {:?}",
        report.epochs_run,
        report.converged,
        report.mean_hinge.last()
    );
    Ok(())
}

fn cmd_nn(args: &NnArgs) -> CmdResult {
    let cp = read_checkpoint(&args.checkpoint)?;
    let params = cp.params().map_err(anyhow::Error::from)?;
    let query = NodeKind::from_name(&args.symbol).ok_or_else(|| anyhow!("unknown symbol `{}`", args.symbol))?;
    let metric = match args.metric {
        MetricArg::Euclidean => Metric::Euclidean,
        MetricArg::Cosine => Metric::Cosine,
    };
    let neighbors = analysis::nearest_neighbors_with(&params, query, args.top, metric).map_err(anyhow::Error::from)?;
    let mut out = format!("# seed={}\nrank,neighbor,distance\n", cp.hyperparams.seed);
    for (rank, (kind, d)) in neighbors.iter().enumerate() {
        writeln!(out, "{},{},{}", rank + 1, kind, d).expect("write to String");
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(())
}

fn cmd_cluster(args: &ClusterArgs) -> CmdResult {
    let cp = read_checkpoint(&args.checkpoint)?;
    let params = cp.params().map_err(anyhow::Error::from)?;
    let clustering = analysis::kmeans(&params, args.k, args.restarts, args.seed).map_err(anyhow::Error::from)?;
    io::stdout().write_all(analysis::clusters_csv(&clustering, args.seed).as_bytes())?;
    if let Some(dir) = &args.report_dir {
        let options = ReportOptions {
            k: args.k,
            restarts: args.restarts,
            seed: args.seed,
            ..ReportOptions::default()
        };
        analysis::emit_report(&params, dir, &options).map_err(anyhow::Error::from)?;
    }
    Ok(())
}

fn cmd_classify(args: &ClassifyArgs) -> CmdResult {
    let corpus = read_corpus(&args.corpus)?;
    let params = read_checkpoint(&args.checkpoint)?.params().map_err(anyhow::Error::from)?;
    let defaults = ProtocolConfig::default();
    let with_epochs = |cfg: ClassifierConfig| ClassifierConfig {
        epochs: args.epochs.unwrap_or(cfg.epochs),
        ..cfg
    };
    let config = ProtocolConfig {
        split_seed: args.split_seed,
        model_seed: args.seed,
        hidden: args.hidden.clone().unwrap_or(defaults.hidden),
        fine_tune: !args.no_fine_tune,
        logistic: with_epochs(defaults.logistic),
        deep: with_epochs(defaults.deep),
    };
    let result = classify::run_protocol(&corpus, &params, &config)?;
    fs::create_dir_all(&args.out_dir).with_context(|| format!("creating {}", args.out_dir.display()))?;
    let table = classify::summary_table(&result);
    fs::write(args.out_dir.join("summary.txt"), &table)?;
    for (run, file) in result.runs().iter().zip(["logistic.csv", "pretrained.csv", "random_init.csv"]) {
        let mut writer = BufWriter::new(create(&args.out_dir.join(file))?);
        classify::write_curves(&run.curves, result.seed, &mut writer)?;
        writer.flush()?;
    }
    io::stdout().write_all(table.as_bytes())?;
    Ok(())
}

fn cmd_export(args: &ExportArgs) -> CmdResult {
    let params = read_checkpoint(&args.checkpoint)?.params().map_err(anyhow::Error::from)?;
    let mut writer = BufWriter::new(create(&args.out)?);
    write_embeddings(&EmbeddingTable::from_params(&params), &mut writer)?;
    writer.flush()?;
    Ok(())
}
