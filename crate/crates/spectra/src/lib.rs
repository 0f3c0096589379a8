//! Spectral radii, degree deviation, and bound verification for simple
//! undirected graphs.
//!
//! The crate revolves around the gap `lambda - 2m/n` between the largest
//! adjacency eigenvalue and the average degree, and the degree deviation
//! `s = sum_u |d(u) - 2m/n|` that controls it. It provides:
//!
//! * a compact immutable [`Graph`] type with a graph6 codec and generators
//!   (complete split graphs, seeded uniform G(n,m), exhaustive labeled
//!   enumeration, blow-ups);
//! * a shifted power iteration for the spectral radius plus an independent
//!   dense Jacobi eigensolver used as a cross-check oracle;
//! * the closed-form bound ladder: `sqrt(2m)`, `sqrt(m)` for bipartite or
//!   triangle-free graphs, the mixed two-part bound
//!   `sqrt(m_A + m_AB + sqrt(m_A^2 + 2 m_A m_AB))`, and the deviation bounds
//!   `sqrt(s)`, `sqrt(9s/10)`, `sqrt(2s/3)`;
//! * an executable edge decomposition that certifies
//!   `lambda <= d + 1 + sqrt(2s/3)` per graph, with an independent verifier;
//! * a scanning harness (exhaustive / file / random / family corpora) and a
//!   restart hill-climb searching for graphs with large normalized gap
//!   `(lambda - 2m/n)^2 / s`.

pub mod bounds;
pub mod decomposition;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod jacobi;
pub mod report;
pub mod spectral;

pub use bounds::BoundReport;
pub use decomposition::Decomposition;
pub use graph::{EdgeSplit, Graph};
pub use graph6::{encode_graph6, parse_graph6};
pub use harness::{Check, Corpus, ScanReport};
pub use spectral::SpectralResult;
