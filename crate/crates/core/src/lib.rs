//! Exact maximum weighted stable sets and optimal colorings for Berge
//! trigraphs with no balanced skew-partition.
//!
//! The solver decomposes its input along proper 2-joins and complement
//! 2-joins until every piece falls into one of five basic classes, then
//! recovers the stable set number through small weighted gadgets. Inputs
//! outside the class never produce a silent wrong answer: every node of the
//! recursion is checked, and a failed check turns into a certificate.
//!
//! ```
//! use perfectsolve::{alpha, trigraph::cycle};
//!
//! let outcome = alpha(&cycle(8)).unwrap();
//! assert_eq!(outcome.alpha, 4);
//! ```

pub mod basic;
pub mod berge;
pub mod color;
pub mod decompose;
pub mod detect;
mod error;
pub mod io;
pub mod oracle;
pub mod trigraph;

pub use color::{color, robust_solve, ColorOutcome, ColoringResult, ImperfectionCertificate, RobustOutcome};
pub use decompose::{alpha, extract_stable_set, main_solve, SolveOptions, SolveOutcome};
pub use error::Error;
pub use trigraph::{Adjacency, Graph, Trigraph, VertexSet, Weight};
