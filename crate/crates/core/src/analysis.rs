//! Nearest-neighbor queries and k-means clustering over learned embeddings.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use ndarray::{Array1, Array2, ArrayView1, Axis};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ast::{vocabulary, NodeKind, VOCAB_SIZE};
use crate::coder::ModelParams;

pub const DEFAULT_RESTARTS: usize = 16;
const MAX_LLOYD_ITERATIONS: usize = 300;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("neighbor count {top} out of range 1..={max}")]
    TopOutOfRange { top: usize, max: usize },
    #[error("cluster count {k} out of range 1..={max}")]
    ClusterCount { k: usize, max: usize },
    #[error("restart count must be at least 1")]
    NoRestarts,
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Euclidean,
    /// `1 − cos`. Exploration only.
    Cosine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NeighborList {
    pub query: NodeKind,
    /// Ascending by distance, ties by vocabulary id.
    pub ranked: Vec<(NodeKind, f64)>,
}

fn euclidean(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    squared_euclidean(a, b).sqrt()
}

fn squared_euclidean(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn cosine_distance(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    let dot = a.dot(&b);
    let norms = a.dot(&a).sqrt() * b.dot(&b).sqrt();
    if norms == 0.0 {
        1.0
    } else {
        1.0 - dot / norms
    }
}

/// Ranks every other row of `table` by distance to row `query`.
pub fn rank_rows(table: &Array2<f64>, query: usize, metric: Metric) -> Vec<(usize, f64)> {
    let q = table.row(query);
    let mut ranked: Vec<(usize, f64)> = table
        .outer_iter()
        .enumerate()
        .filter(|&(i, _)| i != query)
        .map(|(i, row)| {
            let d = match metric {
                Metric::Euclidean => euclidean(q, row),
                Metric::Cosine => cosine_distance(q, row),
            };
            (i, d)
        })
        .collect();
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    ranked
}

/// The full ranking of all other symbols.
pub fn neighbor_list(params: &ModelParams, query: NodeKind, metric: Metric) -> NeighborList {
    let ranked = rank_rows(&params.embeddings, query.id(), metric)
        .into_iter()
        .map(|(i, d)| (NodeKind::from_id(i).expect("row in vocabulary"), d))
        .collect();
    NeighborList { query, ranked }
}

/// The `top` closest symbols to `query` by Euclidean distance.
pub fn nearest_neighbors(params: &ModelParams, query: NodeKind, top: usize) -> Result<Vec<(NodeKind, f64)>, AnalysisError> {
    nearest_neighbors_with(params, query, top, Metric::Euclidean)
}

pub fn nearest_neighbors_with(
    params: &ModelParams,
    query: NodeKind,
    top: usize,
    metric: Metric,
) -> Result<Vec<(NodeKind, f64)>, AnalysisError> {
    let max = VOCAB_SIZE - 1;
    if top == 0 || top > max {
        return Err(AnalysisError::TopOutOfRange { top, max });
    }
    let mut list = neighbor_list(params, query, metric).ranked;
    list.truncate(top);
    Ok(list)
}

/// Like [`nearest_neighbors`] with the query given by name.
pub fn nearest_neighbors_by_name(params: &ModelParams, query: &str, top: usize) -> Result<Vec<(NodeKind, f64)>, AnalysisError> {
    let kind = NodeKind::from_name(query).ok_or_else(|| AnalysisError::UnknownSymbol(query.to_owned()))?;
    nearest_neighbors(params, kind, top)
}

/// Result of clustering a set of points.
#[derive(Clone, Debug, PartialEq)]
pub struct KMeansResult {
    pub assignment: Vec<usize>,
    pub centroids: Array2<f64>,
    pub inertia: f64,
    /// Restart that produced this result.
    pub restart: usize,
    /// Inertia after each assignment step of the winning restart.
    pub trace: Vec<f64>,
}

/// Clustering of the vocabulary.
#[derive(Clone, Debug, PartialEq)]
pub struct Clustering {
    pub k: usize,
    /// Cluster id of each kind, indexed by kind id.
    pub assignment: Vec<usize>,
    pub centroids: Array2<f64>,
    pub inertia: f64,
}

impl Clustering {
    pub fn cluster_of(&self, kind: NodeKind) -> usize {
        self.assignment[kind.id()]
    }

    pub fn members(&self, cluster: usize) -> Vec<NodeKind> {
        vocabulary()
            .iter()
            .copied()
            .filter(|k| self.assignment[k.id()] == cluster)
            .collect()
    }
}

/// Best-of-`restarts` k-means over the embedding table.
pub fn kmeans(params: &ModelParams, k: usize, restarts: usize, seed: u64) -> Result<Clustering, AnalysisError> {
    let result = kmeans_points(&params.embeddings, k, restarts, seed)?;
    Ok(Clustering {
        k,
        assignment: result.assignment,
        centroids: result.centroids,
        inertia: result.inertia,
    })
}

/// Lloyd's algorithm with k-means++ seeding on the rows of `points`.
///
/// Restart `r` seeds its own stream from `(seed, r)`, so adding restarts
/// never changes the earlier ones. The lowest inertia wins, ties going to
/// the earlier restart.
pub fn kmeans_points(points: &Array2<f64>, k: usize, restarts: usize, seed: u64) -> Result<KMeansResult, AnalysisError> {
    let n = points.nrows();
    if k == 0 || k > n {
        return Err(AnalysisError::ClusterCount { k, max: n });
    }
    if restarts == 0 {
        return Err(AnalysisError::NoRestarts);
    }
    let mut best: Option<KMeansResult> = None;
    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart as u64);
        let result = lloyd(points, seed_plus_plus(points, k, &mut rng), restart);
        if best.as_ref().is_none_or(|b| result.inertia < b.inertia) {
            best = Some(result);
        }
    }
    Ok(best.expect("at least one restart"))
}

fn seed_plus_plus<R: Rng>(points: &Array2<f64>, k: usize, rng: &mut R) -> Array2<f64> {
    let n = points.nrows();
    let mut chosen = vec![rng.random_range(0..n)];
    let mut nearest: Vec<f64> = points
        .outer_iter()
        .map(|p| squared_euclidean(p, points.row(chosen[0])))
        .collect();
    while chosen.len() < k {
        let next = match WeightedIndex::new(&nearest) {
            Ok(dist) => dist.sample(rng),
            // Every point sits on a centroid already.
            Err(_) => {
                let free: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
                free[rng.random_range(0..free.len())]
            }
        };
        chosen.push(next);
        for (d, p) in nearest.iter_mut().zip(points.outer_iter()) {
            *d = d.min(squared_euclidean(p, points.row(next)));
        }
    }
    points.select(Axis(0), &chosen)
}

fn assign(points: &Array2<f64>, centroids: &Array2<f64>) -> (Vec<usize>, Vec<f64>) {
    points
        .outer_iter()
        .map(|p| {
            centroids
                .outer_iter()
                .map(|c| squared_euclidean(p, c))
                .enumerate()
                .fold((0, f64::INFINITY), |best, (j, d)| if d < best.1 { (j, d) } else { best })
        })
        .unzip()
}

fn lloyd(points: &Array2<f64>, mut centroids: Array2<f64>, restart: usize) -> KMeansResult {
    let k = centroids.nrows();
    let (mut assignment, mut dists) = assign(points, &centroids);
    let mut trace = vec![dists.iter().sum()];
    for _ in 0..MAX_LLOYD_ITERATIONS {
        centroids = update_centroids(points, &mut assignment, &mut dists, k, &centroids);
        let (next, next_dists) = assign(points, &centroids);
        let stable = next == assignment;
        assignment = next;
        dists = next_dists;
        trace.push(dists.iter().sum());
        if stable {
            break;
        }
    }
    // Coincident points can leave a cluster empty at the fixed point; hand it
    // a duplicate, which cannot raise the inertia.
    if (0..k).any(|c| !assignment.contains(&c)) {
        centroids = update_centroids(points, &mut assignment, &mut dists, k, &centroids);
        dists = points
            .outer_iter()
            .zip(&assignment)
            .map(|(p, &a)| squared_euclidean(p, centroids.row(a)))
            .collect();
        trace.push(dists.iter().sum());
    }
    KMeansResult {
        assignment,
        centroids,
        inertia: *trace.last().expect("nonempty trace"),
        restart,
        trace,
    }
}

// Means of the current clusters. An empty cluster takes over the point that
// is farthest from its own centroid.
fn update_centroids(
    points: &Array2<f64>,
    assignment: &mut [usize],
    dists: &mut [f64],
    k: usize,
    previous: &Array2<f64>,
) -> Array2<f64> {
    let mut counts = vec![0usize; k];
    for &a in assignment.iter() {
        counts[a] += 1;
    }
    for cluster in 0..k {
        if counts[cluster] > 0 {
            continue;
        }
        let donor = (0..points.nrows())
            .filter(|&i| counts[assignment[i]] > 1)
            .max_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(b.cmp(&a)));
        if let Some(i) = donor {
            counts[assignment[i]] -= 1;
            counts[cluster] = 1;
            assignment[i] = cluster;
            dists[i] = 0.0;
        }
    }
    let mut centroids = Array2::zeros(previous.raw_dim());
    for (p, &a) in points.outer_iter().zip(assignment.iter()) {
        let mut row = centroids.row_mut(a);
        row += &p;
    }
    for (cluster, mut row) in centroids.outer_iter_mut().enumerate() {
        if counts[cluster] == 0 {
            row.assign(&previous.row(cluster));
        } else {
            row /= counts[cluster] as f64;
        }
    }
    centroids
}

/// Options for [`emit_report`].
#[derive(Clone, Debug, PartialEq)]
pub struct ReportOptions {
    pub k: usize,
    pub restarts: usize,
    pub seed: u64,
    /// Entries shown per side in the text table.
    pub shown: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            k: 3,
            restarts: DEFAULT_RESTARTS,
            seed: 42,
            shown: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportPaths {
    pub neighbors_csv: PathBuf,
    pub clusters_csv: PathBuf,
    pub text: PathBuf,
}

pub fn neighbors_csv(params: &ModelParams, seed: u64) -> String {
    let mut out = format!("# seed={seed}\nquery,rank,neighbor,distance\n");
    for &query in vocabulary() {
        for (rank, (kind, d)) in neighbor_list(params, query, Metric::Euclidean).ranked.iter().enumerate() {
            writeln!(out, "{},{},{},{}", query, rank + 1, kind, d).expect("write to String");
        }
    }
    out
}

pub fn clusters_csv(clustering: &Clustering, seed: u64) -> String {
    let mut out = format!("# seed={seed}\nsymbol,cluster\n");
    for &kind in vocabulary() {
        writeln!(out, "{},{}", kind, clustering.cluster_of(kind) + 1).expect("write to String");
    }
    out
}

/// Plain-text neighbor table (one row per symbol) and cluster listing.
pub fn render_text(params: &ModelParams, clustering: &Clustering, options: &ReportOptions) -> String {
    let names = |list: &[(NodeKind, f64)]| list.iter().map(|(k, _)| k.name()).collect::<Vec<_>>().join(", ");
    let mut out = format!("# seed={}\n\nNearest neighbor queries (Euclidean)\n\n", options.seed);
    writeln!(out, "{:<16} | {:<60} | most dissimilar", "query", "most similar").expect("write to String");
    for &query in vocabulary() {
        let ranked = neighbor_list(params, query, Metric::Euclidean).ranked;
        let shown = options.shown.min(ranked.len());
        let near = &ranked[..shown];
        let far = &ranked[ranked.len() - shown..];
        writeln!(out, "{:<16} | {:<60} | {}", query, names(near), names(far)).expect("write to String");
    }
    writeln!(
        out,
        "\nk-means clustering, k = {}, inertia = {}\n",
        clustering.k, clustering.inertia
    )
    .expect("write to String");
    for cluster in 0..clustering.k {
        let members = clustering.members(cluster);
        let listing = if members.is_empty() {
            "(empty)".to_owned()
        } else {
            members.iter().map(|k| k.name()).collect::<Vec<_>>().join(", ")
        };
        writeln!(out, "cluster {}: {}", cluster + 1, listing).expect("write to String");
    }
    out
}

/// Writes `neighbors.csv`, `clusters.csv` and `report.txt` into `dir`.
pub fn emit_report(params: &ModelParams, dir: &Path, options: &ReportOptions) -> Result<ReportPaths, AnalysisError> {
    let clustering = kmeans(params, options.k, options.restarts, options.seed)?;
    fs::create_dir_all(dir)?;
    let paths = ReportPaths {
        neighbors_csv: dir.join("neighbors.csv"),
        clusters_csv: dir.join("clusters.csv"),
        text: dir.join("report.txt"),
    };
    fs::write(&paths.neighbors_csv, neighbors_csv(params, options.seed))?;
    fs::write(&paths.clusters_csv, clusters_csv(&clustering, options.seed))?;
    fs::write(&paths.text, render_text(params, &clustering, options))?;
    Ok(paths)
}

/// Mean of the rows of `points`.
pub fn centroid(points: &Array2<f64>) -> Array1<f64> {
    points.mean_axis(Axis(0)).expect("nonempty")
}
