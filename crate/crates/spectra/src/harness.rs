//! Corpus scanning and extremal search.
//!
//! A scan streams graphs from a corpus (exhaustive enumeration, graph6
//! file, seeded random, or a parametric family) through a set of named
//! checks, collecting violations with replayable numeric witnesses, the
//! maximum conjecture ratio `(lambda - 2m/n)^2 / s`, and the tightest
//! admissible split for the mixed bound. Work is split into fixed-size
//! index chunks merged in order, so the report content is identical for
//! any parallelism level; with the JSON serializer in [`crate::report`]
//! it is byte-identical.

use crate::bounds;
use crate::decomposition;
use crate::gen::{self, GenError};
use crate::graph::{Graph, GraphError};
use crate::graph6::{encode_graph6, parse_graph6, upper_triangle_pairs, Graph6Error};
use crate::report::SCHEMA;
use crate::spectral::{self, SpectralError, SpectralResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Comparison slack for the floating-point check inequalities.
pub const CHECK_SLACK: f64 = 1e-8;
/// A conjecture ratio above this value would contradict the `sqrt(s/2)`
/// conjecture and is flagged as a violation.
pub const CONJECTURE_THRESHOLD: f64 = 0.5;
/// Exhaustive corpora are capped here: `n = 7` is already 2^21 graphs.
pub const MAX_EXHAUSTIVE_N: usize = 7;
/// The all-splits check enumerates `2^n` subsets per graph.
pub const MAX_SPLIT_N: usize = 8;
/// Hill-climb size cap.
pub const MAX_HILL_CLIMB_N: usize = 60;

const CHUNK: u64 = 256;
const BLOCK_CHUNKS: u64 = 64;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("exhaustive corpus is capped at n = {max}, got n = {n}")]
    ExhaustiveTooLarge { n: usize, max: usize },
    #[error("corpus file {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("corpus file line {line}: {source}")]
    CorpusLine { line: usize, source: Graph6Error },
    #[error("thm2_all_splits enumerates 2^n subsets and is capped at n = {max}; corpus reaches n = {n}")]
    SplitGuard { n: usize, max: usize },
    #[error("hill climb is capped at n = {max}, got n = {n}")]
    HillClimbTooLarge { n: usize, max: usize },
    #[error("{what} must be at least 1")]
    ZeroParameter { what: &'static str },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Named checks a scan can run per graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    /// `lambda - 2m/n <= sqrt(2s/3)`.
    Thm1,
    /// `lambda <= mixed_bound(m_A, m_AB)` for every subset `A` with no
    /// edges inside the complement.
    Thm2AllSplits,
    /// The conjecture ratio stays at most 1/2.
    Conjecture,
    /// `lambda <= sqrt(2m)`.
    Stanley,
    /// `lambda <= sqrt(m)` when bipartite.
    Bipartite,
    /// `lambda <= sqrt(m)` when triangle-free.
    Nosal,
    /// [`decomposition::verify_decomposition`] passes every sub-check.
    Decomposition,
    /// The certificate chain holds link by link.
    Chain,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Thm1,
        Check::Thm2AllSplits,
        Check::Conjecture,
        Check::Stanley,
        Check::Bipartite,
        Check::Nosal,
        Check::Decomposition,
        Check::Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2AllSplits => "thm2_all_splits",
            Check::Conjecture => "conjecture",
            Check::Stanley => "stanley",
            Check::Bipartite => "bipartite",
            Check::Nosal => "nosal",
            Check::Decomposition => "decomposition",
            Check::Chain => "chain",
        }
    }
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// A corpus of graphs to scan.
#[derive(Clone, Debug)]
pub enum Corpus {
    /// All `2^(n(n-1)/2)` labeled graphs on exactly `n` vertices, in
    /// upper-triangle bitmask order.
    Exhaustive { n: usize },
    /// graph6 file, one graph per line, `#` comments allowed.
    File { path: PathBuf },
    /// `count` seeded uniform G(n,m) samples.
    Random { n: usize, m: usize, count: u64, seed: u64 },
    /// Complete split graphs `CS(q, n)` for all `1 <= q <= n <= n_max`.
    CompleteSplitFamily { n_max: usize },
    /// Blow-ups of a base graph for `t = 1..=t_max`.
    BlowUpFamily { graph6: String, t_max: usize },
}

/// Scan configuration.
#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub checks: BTreeSet<Check>,
    pub parallelism: usize,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            checks: BTreeSet::new(),
            parallelism: 1,
            tol: spectral::DEFAULT_TOL,
            max_iter: spectral::DEFAULT_MAX_ITER,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
}

/// A failed check with enough numeric detail to replay it standalone.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph6: String,
    pub detail: String,
    pub values: Vec<NamedValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RatioWitness {
    pub value: f64,
    pub graph6: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitWitness {
    pub value: f64,
    pub graph6: String,
    pub subset: Vec<usize>,
}

/// Deterministic scan outcome. Wall-clock time is kept out of the
/// serialized form so identical scans serialize to identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub schema: String,
    pub corpus: String,
    pub checks: Vec<String>,
    pub graphs_scanned: u64,
    pub violations: Vec<Violation>,
    pub max_ratio: Option<RatioWitness>,
    pub max_thm2_tightness: Option<SplitWitness>,
    pub splits_checked: u64,
    pub splits_skipped: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// One per-graph record for CSV emission.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub lambda: f64,
    pub s: f64,
    pub ratio: Option<f64>,
    pub stanley: f64,
    pub bipartite_bound: Option<f64>,
    pub nosal: Option<f64>,
    pub nikiforov: f64,
    pub zhang: f64,
    pub thm1: f64,
    /// Pass flag per enabled check, in the order of `ScanReport::checks`.
    pub passes: Vec<bool>,
}

/// The clamped conjecture ratio for one computed eigenpair; `None` for
/// regular graphs and the empty vertex set.
pub fn conjecture_ratio(g: &Graph, r: &SpectralResult) -> Option<f64> {
    if g.n() == 0 {
        return None;
    }
    let s = bounds::degree_deviation(g).expect("n >= 1");
    bounds::normalized_gap_squared(s, r.lambda, g.average_degree()).0
}

/// Runs the enabled checks over the corpus. See [`scan_with_rows`] for the
/// CSV-producing variant.
pub fn scan(corpus: &Corpus, opts: &ScanOptions) -> Result<ScanReport, HarnessError> {
    scan_inner(corpus, opts, None)
}

/// Like [`scan`], additionally feeding one [`ScanRow`] per graph, in corpus
/// order, to `sink`.
pub fn scan_with_rows(
    corpus: &Corpus,
    opts: &ScanOptions,
    sink: &mut dyn FnMut(&ScanRow),
) -> Result<ScanReport, HarnessError> {
    scan_inner(corpus, opts, Some(sink))
}

fn scan_inner(
    corpus: &Corpus,
    opts: &ScanOptions,
    mut sink: Option<&mut dyn FnMut(&ScanRow)>,
) -> Result<ScanReport, HarnessError> {
    if !(opts.tol > 0.0) {
        return Err(HarnessError::BadTolerance(opts.tol));
    }
    if opts.max_iter == 0 {
        return Err(HarnessError::ZeroParameter { what: "max_iter" });
    }
    let start = Instant::now();
    let provider = Provider::resolve(corpus)?;
    if opts.checks.contains(&Check::Thm2AllSplits) && provider.max_n() > MAX_SPLIT_N {
        return Err(HarnessError::SplitGuard { n: provider.max_n(), max: MAX_SPLIT_N });
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.parallelism.max(1))
        .build()
        .expect("thread pool construction");

    let total = provider.len();
    let n_chunks = total.div_ceil(CHUNK);
    let collect_rows = sink.is_some();

    let mut acc = Partial::default();
    let mut block_start = 0u64;
    while block_start < n_chunks {
        let block_end = (block_start + BLOCK_CHUNKS).min(n_chunks);
        let partials: Vec<Partial> = pool.install(|| {
            (block_start..block_end)
                .into_par_iter()
                .map(|chunk| {
                    let lo = chunk * CHUNK;
                    let hi = ((chunk + 1) * CHUNK).min(total);
                    let mut part = Partial::default();
                    for index in lo..hi {
                        let g = provider.get(index);
                        check_graph(&g, index, opts, collect_rows, &mut part);
                    }
                    part
                })
                .collect()
        });
        for part in partials {
            if let Some(sink) = sink.as_deref_mut() {
                for row in &part.rows {
                    sink(row);
                }
            }
            acc.merge(part);
        }
        block_start = block_end;
    }

    Ok(ScanReport {
        schema: SCHEMA.to_string(),
        corpus: provider.descriptor,
        checks: opts.checks.iter().map(|c| c.name().to_string()).collect(),
        graphs_scanned: acc.graphs,
        violations: acc.violations,
        max_ratio: acc
            .best_ratio
            .map(|(value, _, graph6)| RatioWitness { value, graph6 }),
        max_thm2_tightness: acc
            .best_tightness
            .map(|(value, _, graph6, subset)| SplitWitness { value, graph6, subset }),
        splits_checked: acc.splits_checked,
        splits_skipped: acc.splits_skipped,
        elapsed: start.elapsed(),
    })
}

#[derive(Default)]
struct Partial {
    graphs: u64,
    violations: Vec<Violation>,
    best_ratio: Option<(f64, u64, String)>,
    best_tightness: Option<(f64, u64, String, Vec<usize>)>,
    splits_checked: u64,
    splits_skipped: u64,
    rows: Vec<ScanRow>,
}

impl Partial {
    /// Associative, order-respecting merge: violations concatenate in index
    /// order and maxima break ties toward the earlier index, so any
    /// chunking yields the serial result.
    fn merge(&mut self, other: Partial) {
        self.graphs += other.graphs;
        self.violations.extend(other.violations);
        self.splits_checked += other.splits_checked;
        self.splits_skipped += other.splits_skipped;
        if better(&self.best_ratio.as_ref().map(|b| (b.0, b.1)), other.best_ratio.as_ref().map(|b| (b.0, b.1))) {
            self.best_ratio = other.best_ratio;
        }
        if better(
            &self.best_tightness.as_ref().map(|b| (b.0, b.1)),
            other.best_tightness.as_ref().map(|b| (b.0, b.1)),
        ) {
            self.best_tightness = other.best_tightness;
        }
    }
}

fn better(current: &Option<(f64, u64)>, candidate: Option<(f64, u64)>) -> bool {
    match (current, candidate) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some((cv, ci)), Some((nv, ni))) => nv > *cv || (nv == *cv && ni < *ci),
    }
}

fn check_graph(g: &Graph, index: u64, opts: &ScanOptions, collect_rows: bool, part: &mut Partial) {
    part.graphs += 1;
    let g6 = encode_graph6(g);
    let mut passes: Vec<bool> = Vec::with_capacity(opts.checks.len());
    let mut violations: Vec<Violation> = Vec::new();

    let r = match spectral::spectral_radius(g, opts.tol, opts.max_iter) {
        Ok(r) => Some(r),
        Err(SpectralError::DidNotConverge(best)) => {
            violations.push(Violation {
                check: "convergence".into(),
                graph6: g6.clone(),
                detail: format!(
                    "power iteration stalled at residual {:.3e} after {} iterations",
                    best.residual, best.iterations
                ),
                values: vec![named("residual", best.residual)],
            });
            None
        }
        Err(e) => unreachable!("scan options validated up front: {e}"),
    };

    let lambda = r.as_ref().map_or(f64::NAN, |r| r.lambda);
    let (s, d_avg) = if g.n() > 0 {
        (bounds::degree_deviation(g).expect("n >= 1"), g.average_degree())
    } else {
        (0.0, 0.0)
    };
    let ratio = r.as_ref().and_then(|r| conjecture_ratio(g, r));

    let mut dec_cache: Option<decomposition::Decomposition> = None;
    for &check in &opts.checks {
        let pass = match (check, r.as_ref()) {
            (_, None) => false,
            (Check::Thm1, Some(_)) => {
                let bound = bounds::thm1_bound(s);
                let gap = lambda - d_avg;
                let ok = g.n() == 0 || gap <= bound + CHECK_SLACK;
                if !ok {
                    violations.push(Violation {
                        check: "thm1".into(),
                        graph6: g6.clone(),
                        detail: format!("lambda - 2m/n = {gap} exceeds sqrt(2s/3) = {bound}"),
                        values: vec![
                            named("lambda", lambda),
                            named("d_avg", d_avg),
                            named("s", s),
                            named("bound", bound),
                        ],
                    });
                }
                ok
            }
            (Check::Conjecture, Some(_)) => {
                let over = ratio.is_some_and(|v| v > CONJECTURE_THRESHOLD + CHECK_SLACK);
                let anomaly = g.n() > 0 && lambda - d_avg < -bounds::GAP_ANOMALY_CUTOFF;
                if over || anomaly {
                    let v = ratio.unwrap_or(0.0);
                    violations.push(Violation {
                        check: "conjecture".into(),
                        graph6: g6.clone(),
                        detail: if over {
                            format!("conjecture ratio {v} exceeds 1/2: potential counterexample")
                        } else {
                            format!("numerical anomaly: gap {} below noise floor", lambda - d_avg)
                        },
                        values: vec![named("ratio", v), named("lambda", lambda)],
                    });
                }
                !(over || anomaly)
            }
            (Check::Stanley, Some(_)) => {
                let bound = bounds::stanley_bound(g.m());
                push_bound_violation(&mut violations, "stanley", &g6, lambda, bound)
            }
            (Check::Bipartite, Some(_)) => {
                if g.is_bipartite() {
                    let bound = (g.m() as f64).sqrt();
                    push_bound_violation(&mut violations, "bipartite", &g6, lambda, bound)
                } else {
                    true
                }
            }
            (Check::Nosal, Some(_)) => {
                if g.is_triangle_free() {
                    let bound = (g.m() as f64).sqrt();
                    push_bound_violation(&mut violations, "nosal", &g6, lambda, bound)
                } else {
                    true
                }
            }
            (Check::Decomposition, Some(_)) => {
                let dec = dec_cache.get_or_insert_with(|| decomposition::build_decomposition(g));
                let checks = decomposition::verify_decomposition(g, dec)
                    .expect("decomposition built for this graph");
                let mut ok = true;
                for c in checks.into_iter().filter(|c| !c.pass) {
                    ok = false;
                    violations.push(Violation {
                        check: "decomposition".into(),
                        graph6: g6.clone(),
                        detail: format!("{}: {}", c.name, c.witness.unwrap_or_default()),
                        values: vec![],
                    });
                }
                ok
            }
            (Check::Chain, Some(r)) => {
                let dec = dec_cache.get_or_insert_with(|| decomposition::build_decomposition(g));
                match decomposition::certificate_chain(g, dec, r, opts.tol, opts.max_iter) {
                    Ok(chain) => match chain.first_broken_link(CHECK_SLACK) {
                        None => true,
                        Some(link) => {
                            violations.push(Violation {
                                check: "chain".into(),
                                graph6: g6.clone(),
                                detail: format!("broken link: {link}"),
                                values: vec![
                                    named("lambda", chain.lambda),
                                    named("lambda_g_prime", chain.lambda_g_prime),
                                    named("lambda_g_double_prime", chain.lambda_g_double_prime),
                                    named("degree_bound", chain.degree_bound),
                                    named("mixed", chain.mixed),
                                    named("envelope", chain.envelope),
                                ],
                            });
                            false
                        }
                    },
                    Err(e) => {
                        violations.push(Violation {
                            check: "chain".into(),
                            graph6: g6.clone(),
                            detail: format!("chain evaluation failed: {e}"),
                            values: vec![],
                        });
                        false
                    }
                }
            }
            (Check::Thm2AllSplits, Some(_)) => {
                let mut ok = true;
                let n = g.n();
                let mut best: Option<(f64, Vec<usize>)> = None;
                for mask in 0u64..(1u64 << n) {
                    let (mut m_a, mut m_ab, mut m_b) = (0usize, 0usize, 0usize);
                    for &(u, v) in g.edges() {
                        match (mask >> u & 1 == 1, mask >> v & 1 == 1) {
                            (true, true) => m_a += 1,
                            (false, false) => m_b += 1,
                            _ => m_ab += 1,
                        }
                    }
                    if m_b > 0 {
                        part.splits_skipped += 1;
                        continue;
                    }
                    part.splits_checked += 1;
                    let bound = bounds::mixed_bound(m_a, m_ab);
                    if lambda > bound + CHECK_SLACK {
                        ok = false;
                        let subset = mask_vertices(mask, n);
                        violations.push(Violation {
                            check: "thm2_all_splits".into(),
                            graph6: g6.clone(),
                            detail: format!(
                                "lambda = {lambda} exceeds mixed_bound({m_a}, {m_ab}) = {bound} for A = {subset:?}"
                            ),
                            values: vec![
                                named("lambda", lambda),
                                named("m_a", m_a as f64),
                                named("m_ab", m_ab as f64),
                                named("bound", bound),
                            ],
                        });
                    }
                    if bound > 0.0 {
                        let tight = lambda / bound;
                        if best.as_ref().map_or(true, |(b, _)| tight > *b) {
                            best = Some((tight, mask_vertices(mask, n)));
                        }
                    }
                }
                if let Some((value, subset)) = best {
                    if better(
                        &part.best_tightness.as_ref().map(|b| (b.0, b.1)),
                        Some((value, index)),
                    ) {
                        part.best_tightness = Some((value, index, g6.clone(), subset));
                    }
                }
                ok
            }
        };
        passes.push(pass);
    }

    if let Some(value) = ratio {
        if better(&part.best_ratio.as_ref().map(|b| (b.0, b.1)), Some((value, index))) {
            part.best_ratio = Some((value, index, g6.clone()));
        }
    }

    if collect_rows {
        part.rows.push(ScanRow {
            graph6: g6,
            n: g.n(),
            m: g.m(),
            lambda,
            s,
            ratio,
            stanley: bounds::stanley_bound(g.m()),
            bipartite_bound: g.is_bipartite().then(|| (g.m() as f64).sqrt()),
            nosal: g.is_triangle_free().then(|| (g.m() as f64).sqrt()),
            nikiforov: bounds::nikiforov_bound(s),
            zhang: bounds::zhang_bound(s),
            thm1: bounds::thm1_bound(s),
            passes,
        });
    }
    part.violations.extend(violations);
}

fn push_bound_violation(
    violations: &mut Vec<Violation>,
    check: &str,
    g6: &str,
    lambda: f64,
    bound: f64,
) -> bool {
    if lambda > bound + CHECK_SLACK {
        violations.push(Violation {
            check: check.into(),
            graph6: g6.into(),
            detail: format!("lambda = {lambda} exceeds {check} bound {bound}"),
            values: vec![named("lambda", lambda), named("bound", bound)],
        });
        false
    } else {
        true
    }
}

fn named(name: &str, value: f64) -> NamedValue {
    NamedValue { name: name.into(), value }
}

fn mask_vertices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&u| mask >> u & 1 == 1).collect()
}

struct Provider {
    descriptor: String,
    max_n: usize,
    kind: ProviderKind,
}

enum ProviderKind {
    Masks { n: usize, count: u64 },
    Graphs(Vec<Graph>),
    Random { n: usize, m: usize, count: u64, seed: u64 },
}

impl Provider {
    fn resolve(corpus: &Corpus) -> Result<Provider, HarnessError> {
        match corpus {
            Corpus::Exhaustive { n } => {
                if *n > MAX_EXHAUSTIVE_N {
                    return Err(HarnessError::ExhaustiveTooLarge { n: *n, max: MAX_EXHAUSTIVE_N });
                }
                let count = 1u64 << (n * n.saturating_sub(1) / 2);
                Ok(Provider {
                    descriptor: format!("exhaustive(n={n})"),
                    max_n: *n,
                    kind: ProviderKind::Masks { n: *n, count },
                })
            }
            Corpus::File { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| HarnessError::Io { path: path.clone(), source })?;
                let graphs = parse_graph6_lines(&text)?;
                Ok(Provider {
                    descriptor: format!("file({})", path.display()),
                    max_n: graphs.iter().map(Graph::n).max().unwrap_or(0),
                    kind: ProviderKind::Graphs(graphs),
                })
            }
            Corpus::Random { n, m, count, seed } => {
                // Validate the (n, m) pair once up front.
                gen::random_gnm(*n, *m, *seed)?;
                Ok(Provider {
                    descriptor: format!("random(n={n},m={m},count={count},seed={seed})"),
                    max_n: *n,
                    kind: ProviderKind::Random { n: *n, m: *m, count: *count, seed: *seed },
                })
            }
            Corpus::CompleteSplitFamily { n_max } => {
                let mut graphs = Vec::new();
                for n in 1..=*n_max {
                    for q in 1..=n {
                        graphs.push(gen::complete_split(q, n)?);
                    }
                }
                Ok(Provider {
                    descriptor: format!("cs-family(n_max={n_max})"),
                    max_n: *n_max,
                    kind: ProviderKind::Graphs(graphs),
                })
            }
            Corpus::BlowUpFamily { graph6, t_max } => {
                let base = parse_graph6(graph6)?;
                let graphs: Vec<Graph> = (1..=*t_max)
                    .map(|t| base.blow_up(t))
                    .collect::<Result<_, _>>()?;
                Ok(Provider {
                    descriptor: format!("blowup(base={graph6},t_max={t_max})"),
                    max_n: base.n() * *t_max,
                    kind: ProviderKind::Graphs(graphs),
                })
            }
        }
    }

    fn len(&self) -> u64 {
        match &self.kind {
            ProviderKind::Masks { count, .. } => *count,
            ProviderKind::Graphs(v) => v.len() as u64,
            ProviderKind::Random { count, .. } => *count,
        }
    }

    fn max_n(&self) -> usize {
        self.max_n
    }

    fn get(&self, index: u64) -> Graph {
        match &self.kind {
            ProviderKind::Masks { n, .. } => gen::graph_from_mask(*n, index),
            ProviderKind::Graphs(v) => v[index as usize].clone(),
            ProviderKind::Random { n, m, seed, .. } => {
                gen::random_gnm(*n, *m, mix_seed(*seed, index)).expect("validated at resolve time")
            }
        }
    }
}

/// graph6 lines with `#` comments; tolerates the optional `>>graph6<<`
/// header prefix.
fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, HarnessError> {
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest.trim();
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        graphs.push(
            parse_graph6(line).map_err(|source| HarnessError::CorpusLine { line: idx + 1, source })?,
        );
    }
    Ok(graphs)
}

/// SplitMix64 step keyed by `(seed, index)`: documented, stable derivation
/// of per-item seeds for the random corpus.
fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One accepted hill-climb move.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceEvent {
    pub restart: usize,
    pub step: usize,
    pub ratio: f64,
}

/// Result of a restart hill climb maximizing the conjecture ratio.
#[derive(Clone, Debug, Serialize)]
pub struct HillClimbOutcome {
    pub n: usize,
    pub steps: usize,
    pub restarts: usize,
    pub seed: u64,
    pub best_graph6: String,
    /// Absent only when every graph encountered was regular.
    pub best_ratio: Option<f64>,
    pub trace: Vec<TraceEvent>,
}

/// Local search over single edge flips maximizing the conjecture ratio.
///
/// Flips are scanned in upper-triangle pair order and the first strictly
/// improving one is taken; a step with no improving flip ends the restart.
/// Regular graphs score as minus infinity so the search leaves them
/// immediately. Fully deterministic per seed.
pub fn hill_climb(
    n: usize,
    steps: usize,
    seed: u64,
    restarts: usize,
) -> Result<HillClimbOutcome, HarnessError> {
    if n > MAX_HILL_CLIMB_N {
        return Err(HarnessError::HillClimbTooLarge { n, max: MAX_HILL_CLIMB_N });
    }
    if steps == 0 {
        return Err(HarnessError::ZeroParameter { what: "steps" });
    }
    if restarts == 0 {
        return Err(HarnessError::ZeroParameter { what: "restarts" });
    }

    let objective = |g: &Graph| -> Option<f64> {
        spectral::spectral_radius(g, spectral::DEFAULT_TOL, spectral::DEFAULT_MAX_ITER)
            .ok()
            .and_then(|r| conjecture_ratio(g, &r))
    };
    let improves = |cand: Option<f64>, cur: Option<f64>| match (cand, cur) {
        (Some(a), Some(b)) => a > b,
        (Some(_), None) => true,
        (None, _) => false,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total_pairs = n * n.saturating_sub(1) / 2;
    let mut best: Option<(f64, String)> = None;
    let mut fallback_graph6: Option<String> = None;
    let mut trace = Vec::new();

    for restart in 0..restarts {
        let m0 = rng.gen_range(0..=total_pairs);
        let graph_seed: u64 = rng.gen();
        let mut g = gen::random_gnm(n, m0, graph_seed).expect("m0 <= C(n,2)");
        fallback_graph6.get_or_insert_with(|| encode_graph6(&g));
        let mut current = objective(&g);
        if let Some(v) = current {
            if best.as_ref().map_or(true, |(b, _)| v > *b) {
                best = Some((v, encode_graph6(&g)));
            }
        }
        for step in 1..=steps {
            let mut improved = false;
            for (i, j) in upper_triangle_pairs(n) {
                let cand = g.flip_edge(i, j);
                let cand_obj = objective(&cand);
                if improves(cand_obj, current) {
                    g = cand;
                    current = cand_obj;
                    let value = current.expect("improving objective is finite");
                    trace.push(TraceEvent { restart, step, ratio: value });
                    if best.as_ref().map_or(true, |(b, _)| value > *b) {
                        best = Some((value, encode_graph6(&g)));
                    }
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
    }

    let (best_ratio, best_graph6) = match best {
        Some((v, g6)) => (Some(v), g6),
        None => (
            None,
            fallback_graph6.expect("at least one restart ran"),
        ),
    };
    Ok(HillClimbOutcome { n, steps, restarts, seed, best_graph6, best_ratio, trace })
}

/// CSV header matching [`scan_row_csv`], given the enabled checks in
/// report order.
pub fn scan_csv_header(checks: &[String]) -> String {
    let mut cols = vec![
        "graph6", "n", "m", "lambda", "s", "ratio", "stanley", "bipartite_bound", "nosal",
        "nikiforov", "zhang", "thm1",
    ]
    .into_iter()
    .map(str::to_string)
    .collect::<Vec<_>>();
    cols.extend(checks.iter().map(|c| format!("{c}_pass")));
    cols.join(",")
}

/// One CSV row per graph: floats in lossless scientific notation, absent
/// optionals empty, pass flags as 0/1.
pub fn scan_row_csv(row: &ScanRow) -> String {
    use crate::report::fmt_float;
    let opt = |v: Option<f64>| v.map(fmt_float).unwrap_or_default();
    let mut cols = vec![
        row.graph6.clone(),
        row.n.to_string(),
        row.m.to_string(),
        fmt_float(row.lambda),
        fmt_float(row.s),
        opt(row.ratio),
        fmt_float(row.stanley),
        opt(row.bipartite_bound),
        opt(row.nosal),
        fmt_float(row.nikiforov),
        fmt_float(row.zhang),
        fmt_float(row.thm1),
    ];
    cols.extend(row.passes.iter().map(|&p| if p { "1".into() } else { "0".into() }));
    cols.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::to_json_string;

    fn options(checks: &[Check]) -> ScanOptions {
        ScanOptions { checks: checks.iter().copied().collect(), ..Default::default() }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("thm3".parse::<Check>().is_err());
    }

    #[test]
    fn exhaustive_n3_counts_eight_graphs() {
        let report = scan(&Corpus::Exhaustive { n: 3 }, &options(&[Check::Thm1])).unwrap();
        assert_eq!(report.graphs_scanned, 8);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn exhaustive_n4_stanley_clean() {
        let report = scan(&Corpus::Exhaustive { n: 4 }, &options(&[Check::Stanley])).unwrap();
        assert_eq!(report.graphs_scanned, 64);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn exhaustive_guard() {
        assert!(matches!(
            scan(&Corpus::Exhaustive { n: 8 }, &options(&[Check::Thm1])),
            Err(HarnessError::ExhaustiveTooLarge { n: 8, max: 7 })
        ));
    }

    #[test]
    fn split_guard() {
        let corpus = Corpus::Random { n: 9, m: 10, count: 1, seed: 0 };
        assert!(matches!(
            scan(&corpus, &options(&[Check::Thm2AllSplits])),
            Err(HarnessError::SplitGuard { n: 9, max: 8 })
        ));
    }

    #[test]
    fn random_scans_are_reproducible() {
        let corpus = Corpus::Random { n: 12, m: 30, count: 40, seed: 99 };
        let opts = options(&[Check::Thm1, Check::Conjecture, Check::Stanley]);
        let a = scan(&corpus, &opts).unwrap();
        let b = scan(&corpus, &opts).unwrap();
        assert_eq!(to_json_string(&a), to_json_string(&b));
    }

    #[test]
    fn parallel_scan_matches_serial() {
        let corpus = Corpus::Exhaustive { n: 4 };
        let mut opts = options(&[Check::Thm1, Check::Conjecture, Check::Thm2AllSplits]);
        let serial = scan(&corpus, &opts).unwrap();
        opts.parallelism = 4;
        let parallel = scan(&corpus, &opts).unwrap();
        assert_eq!(to_json_string(&serial), to_json_string(&parallel));
    }

    #[test]
    fn corpus_file_errors_carry_line_numbers() {
        let dir = std::env::temp_dir().join("spectra-harness-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.g6");
        std::fs::write(&path, "# comment\nC~\nD?\n").unwrap();
        match scan(&Corpus::File { path: path.clone() }, &options(&[Check::Thm1])) {
            Err(HarnessError::CorpusLine { line: 3, .. }) => {}
            other => panic!("expected line-3 error, got {other:?}"),
        }
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn conjecture_ratio_examples() {
        let c5 = Graph::from_edge_list(5, (0..5).map(|u| (u, (u + 1) % 5))).unwrap();
        let r = spectral::spectral_radius(&c5, 1e-10, 100_000).unwrap();
        assert_eq!(conjecture_ratio(&c5, &r), None);

        let claw = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = spectral::spectral_radius(&claw, 1e-10, 100_000).unwrap();
        let ratio = conjecture_ratio(&claw, &r).unwrap();
        let expect = (3.0f64.sqrt() - 1.5).powi(2) / 3.0;
        assert!((ratio - expect).abs() <= 1e-9);
    }

    #[test]
    fn hill_climb_is_deterministic() {
        let a = hill_climb(10, 20, 7, 3).unwrap();
        let b = hill_climb(10, 20, 7, 3).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.best_graph6, b.best_graph6);
        assert_eq!(a.best_ratio, b.best_ratio);
    }

    #[test]
    fn hill_climb_guards() {
        assert!(matches!(
            hill_climb(61, 1, 0, 1),
            Err(HarnessError::HillClimbTooLarge { .. })
        ));
        assert!(matches!(hill_climb(5, 0, 0, 1), Err(HarnessError::ZeroParameter { .. })));
    }

    #[test]
    fn hill_climb_matches_exhaustive_maximum_on_n4() {
        let report = scan(&Corpus::Exhaustive { n: 4 }, &options(&[Check::Conjecture])).unwrap();
        let exhaustive_max = report.max_ratio.unwrap().value;
        let hc = hill_climb(4, 50, 11, 40).unwrap();
        let found = hc.best_ratio.unwrap();
        assert!(found <= exhaustive_max + 1e-12);
        assert!((found - exhaustive_max).abs() <= 1e-9, "{found} vs {exhaustive_max}");
    }

    #[test]
    fn blowup_family_scans() {
        let corpus = Corpus::BlowUpFamily { graph6: "Cs".into(), t_max: 3 };
        let report = scan(&corpus, &options(&[Check::Thm1, Check::Conjecture])).unwrap();
        assert_eq!(report.graphs_scanned, 3);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn cs_family_scans() {
        let corpus = Corpus::CompleteSplitFamily { n_max: 6 };
        let report = scan(&corpus, &options(&[Check::Thm1, Check::Stanley])).unwrap();
        assert_eq!(report.graphs_scanned, 21);
        assert!(report.violations.is_empty());
    }
}
