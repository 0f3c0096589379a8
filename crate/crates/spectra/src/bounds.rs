//! Closed-form spectral-radius bounds and the degree-deviation ladder.
//!
//! For a graph with `n` vertices, `m` edges, largest adjacency eigenvalue
//! `lambda`, and degree deviation `s = sum_u |d(u) - 2m/n|`:
//!
//! * `lambda <= sqrt(2m)` (Stanley);
//! * `lambda <= sqrt(m)` for bipartite graphs, and likewise for
//!   triangle-free graphs (Nosal);
//! * `lambda <= sqrt(m_A + m_AB + sqrt(m_A^2 + 2 m_A m_AB))` for graphs
//!   whose edges split into `m_A` inside a set `A` and `m_AB` across to an
//!   independent complement — the mixed bound generalizing both of the
//!   above;
//! * the deviation ladder `lambda - 2m/n <= sqrt(2s/3) <= sqrt(9s/10)
//!   <= sqrt(s)`, where the `sqrt(s/2)` strengthening is Nikiforov's
//!   conjecture.
//!
//! The `ratio` diagnostic `(lambda - 2m/n)^2 / s` linearizes all of these:
//! `ratio <= 2/3` is the proven bound, `ratio <= 1/2` the conjecture.

use crate::graph::Graph;
use crate::spectral::SpectralResult;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("degree deviation needs n >= 1 (average degree 2m/n is undefined)")]
    EmptyVertexSet,
    #[error("alpha* needs m_AB >= 1 (the ratio m_A/m_AB is undefined)")]
    ZeroCrossEdges,
    #[error("complete split graph lambda needs 1 <= q <= n, got q = {q}, n = {n}")]
    BadSplitParameters { q: usize, n: usize },
    #[error("the gap envelope is only defined for s >= 0, got {0}")]
    NegativeDeviation(f64),
}

/// Gaps below this magnitude are attributed to floating-point noise and
/// clamped to zero in the ratio; anything more negative is flagged.
pub const GAP_ANOMALY_CUTOFF: f64 = 1e-12;

/// Every closed-form bound for one graph, plus the conjecture ratio.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d_avg: f64,
    pub s: f64,
    pub lambda: f64,
    pub stanley: f64,
    /// `sqrt(m)`, present iff the graph is bipartite.
    pub bipartite_bound: Option<f64>,
    /// `sqrt(m)`, present iff the graph is triangle-free.
    pub nosal: Option<f64>,
    pub nikiforov: f64,
    pub zhang: f64,
    pub thm1: f64,
    /// `(lambda - 2m/n)^2 / s`; absent for regular graphs (`s = 0`).
    pub ratio: Option<f64>,
    /// Set when `lambda - 2m/n` came out more negative than numerical noise
    /// can explain; the ratio is then clamped to 0.
    pub gap_anomaly: bool,
}

/// Degree deviation `s = sum_u |d(u) - 2m/n|`; zero exactly for regular
/// graphs.
pub fn degree_deviation(g: &Graph) -> Result<f64, BoundsError> {
    Ok(degree_deviation_numerator(g)? as f64 / g.n() as f64)
}

/// Exact integer numerator `n * s = sum_u |n d(u) - 2m|`, for tolerance-free
/// comparisons against other integer quantities.
pub fn degree_deviation_numerator(g: &Graph) -> Result<u64, BoundsError> {
    if g.n() == 0 {
        return Err(BoundsError::EmptyVertexSet);
    }
    let n = g.n() as i64;
    let two_m = 2 * g.m() as i64;
    Ok((0..g.n())
        .map(|u| (n * g.degree(u) as i64 - two_m).unsigned_abs())
        .sum())
}

/// Stanley's bound `sqrt(2m)`.
pub fn stanley_bound(m: usize) -> f64 {
    (2.0 * m as f64).sqrt()
}

/// The mixed bound `sqrt(m_A + m_AB + sqrt(m_A^2 + 2 m_A m_AB))`.
///
/// Reduces to `sqrt(2 m_A)` when `m_AB = 0` (Stanley) and to `sqrt(m_AB)`
/// when `m_A = 0` (the bipartite bound).
pub fn mixed_bound(m_a: usize, m_ab: usize) -> f64 {
    let (ma, mab) = (m_a as f64, m_ab as f64);
    (ma + mab + (ma * ma + 2.0 * ma * mab).sqrt()).sqrt()
}

/// The balancing weight `alpha* = sqrt((m_A/m_AB)^2 + 2 m_A/m_AB) - m_A/m_AB`
/// in `[0, 1]`, the unique point where the increasing bound
/// `2 m_A + (1 + alpha) m_AB` meets the decreasing `2 m_A / alpha + m_AB`.
/// Substituting it back reproduces `mixed_bound^2`.
pub fn alpha_star(m_a: usize, m_ab: usize) -> Result<f64, BoundsError> {
    if m_ab == 0 {
        return Err(BoundsError::ZeroCrossEdges);
    }
    if m_a == 0 {
        return Ok(0.0);
    }
    let r = m_a as f64 / m_ab as f64;
    // sqrt(r^2 + 2r) - r, in the cancellation-free form 2r / (sqrt + r).
    Ok(2.0 * r / ((r * r + 2.0 * r).sqrt() + r))
}

/// `sqrt(s)` deviation bound.
pub fn nikiforov_bound(s: f64) -> f64 {
    s.sqrt()
}

/// `sqrt(9s/10)` deviation bound.
pub fn zhang_bound(s: f64) -> f64 {
    (0.9 * s).sqrt()
}

/// `sqrt(2s/3)` deviation bound.
pub fn thm1_bound(s: f64) -> f64 {
    (2.0 * s / 3.0).sqrt()
}

/// The clamped conjecture ratio `(lambda - 2m/n)^2 / s` and the anomaly
/// flag. `None` when `s = 0`.
pub fn normalized_gap_squared(s: f64, lambda: f64, d_avg: f64) -> (Option<f64>, bool) {
    let gap = lambda - d_avg;
    let anomaly = gap < -GAP_ANOMALY_CUTOFF;
    if s == 0.0 {
        return (None, anomaly);
    }
    (Some(gap.max(0.0).powi(2) / s), anomaly)
}

/// Assembles the full [`BoundReport`] for `g` from a computed eigenpair.
pub fn deviation_bounds(g: &Graph, r: &SpectralResult) -> Result<BoundReport, BoundsError> {
    let s = degree_deviation(g)?;
    let d_avg = g.average_degree();
    let sqrt_m = (g.m() as f64).sqrt();
    let (ratio, gap_anomaly) = normalized_gap_squared(s, r.lambda, d_avg);
    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        d_avg,
        s,
        lambda: r.lambda,
        stanley: stanley_bound(g.m()),
        bipartite_bound: g.is_bipartite().then_some(sqrt_m),
        nosal: g.is_triangle_free().then_some(sqrt_m),
        nikiforov: nikiforov_bound(s),
        zhang: zhang_bound(s),
        thm1: thm1_bound(s),
        ratio,
        gap_anomaly,
    })
}

/// Closed-form spectral radius of the complete split graph `CS(q, n)`:
/// `(q - 1 + sqrt((4n - 2) q - 3 q^2 + 1)) / 2`.
///
/// The radicand is the quadratic `(q-1)^2 + 4 q (n-q)` from the two-class
/// quotient matrix; a cubic variant `(4n-2) q - 3 q^3 + 1` seen in some
/// sources fails validation against [`crate::jacobi::dense_eigen_oracle`]
/// for every `q >= 2` (it even goes negative), so the quadratic form is the
/// one implemented and pinned by tests.
pub fn split_graph_lambda(q: usize, n: usize) -> Result<f64, BoundsError> {
    if q < 1 || q > n {
        return Err(BoundsError::BadSplitParameters { q, n });
    }
    let (qf, nf) = (q as f64, n as f64);
    let radicand = (4.0 * nf - 2.0) * qf - 3.0 * qf * qf + 1.0;
    Ok((qf - 1.0 + radicand.sqrt()) / 2.0)
}

/// Maximizes `f(x) = sqrt(s/2 - x + sqrt(x (s - 3x)))` over `x in [0, s/4]`
/// by golden-section search; `f` is unimodal there. Returns `(x*, f(x*))`,
/// which land on `(s/12, sqrt(2s/3))`.
pub fn maximize_gap_envelope(s: f64) -> Result<(f64, f64), BoundsError> {
    if s < 0.0 {
        return Err(BoundsError::NegativeDeviation(s));
    }
    if s == 0.0 {
        return Ok((0.0, 0.0));
    }
    let f = |x: f64| (s / 2.0 - x + (x * (s - 3.0 * x)).max(0.0).sqrt()).max(0.0).sqrt();
    let phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0f64, s / 4.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if fc < fd {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        }
    }
    let x_star = 0.5 * (a + b);
    Ok((x_star, f(x_star)))
}
