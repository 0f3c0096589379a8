//! Dense symmetric eigensolver used as an independent oracle.
//!
//! Classical cyclic Jacobi rotations on the full adjacency matrix, after
//! Numerical Recipes 11.1. Deliberately shares no code with the power
//! iteration in [`crate::spectral`]; agreement between the two paths is the
//! correctness evidence for both.

use crate::graph::Graph;
use thiserror::Error;

/// The oracle refuses matrices beyond this order; it is quadratic storage
/// and cubic time per sweep.
pub const MAX_ORACLE_N: usize = 200;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("dense oracle is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("Jacobi sweeps did not reduce the off-diagonal mass")]
    NoConvergence,
}

/// Largest adjacency eigenvalue of `g` by full diagonalization.
pub fn dense_eigen_oracle(g: &Graph) -> Result<f64, OracleError> {
    let n = g.n();
    if n > MAX_ORACLE_N {
        return Err(OracleError::TooLarge { n, max: MAX_ORACLE_N });
    }
    if n == 0 {
        return Ok(0.0);
    }
    let mut a = vec![0.0f64; n * n];
    for &(u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let eig = jacobi_eigenvalues(&mut a, n)?;
    Ok(eig.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

/// Eigenvalues of the symmetric matrix stored row-major in `a` (destroyed).
fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>, OracleError> {
    let mut d: Vec<f64> = (0..n).map(|p| a[p * n + p]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0f64; n];

    for sweep in 1..=MAX_SWEEPS {
        let mut sm = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                sm += a[p * n + q].abs();
            }
        }
        if sm <= 1e-13 {
            return Ok(d);
        }
        let thresh = if sweep < 4 { 0.2 * sm / (n * n) as f64 } else { 0.0 };

        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // Off-diagonal entry negligible relative to both diagonals:
                // zero it outright (NR's late-sweep shortcut).
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                let rotate = |a: &mut [f64], i: usize, j: usize, k: usize, l: usize| {
                    let g = a[i * n + j];
                    let h = a[k * n + l];
                    a[i * n + j] = g - s * (h + g * tau);
                    a[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(a, p, j, q, j);
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    Err(OracleError::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::complete_split;
    use crate::graph::Graph;

    #[test]
    fn complete_graph_eigenvalue() {
        let k4 = complete_split(4, 4).unwrap();
        assert!((dense_eigen_oracle(&k4).unwrap() - 3.0).abs() <= 1e-12);
    }

    #[test]
    fn path_on_three_vertices() {
        // Characteristic polynomial lambda^3 - 2 lambda: largest root sqrt(2).
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert!((dense_eigen_oracle(&p3).unwrap() - 2.0f64.sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn complete_split_2_4() {
        let g = complete_split(2, 4).unwrap();
        let expect = (1.0 + 17.0f64.sqrt()) / 2.0;
        assert!((dense_eigen_oracle(&g).unwrap() - expect).abs() <= 1e-12);
    }

    #[test]
    fn empty_graphs() {
        let g = Graph::from_edge_list(5, []).unwrap();
        assert_eq!(dense_eigen_oracle(&g).unwrap(), 0.0);
        let g0 = Graph::from_edge_list(0, []).unwrap();
        assert_eq!(dense_eigen_oracle(&g0).unwrap(), 0.0);
    }

    #[test]
    fn size_guard() {
        let g = Graph::from_edge_list(201, []).unwrap();
        assert_eq!(
            dense_eigen_oracle(&g).unwrap_err(),
            OracleError::TooLarge { n: 201, max: 200 }
        );
    }
}
