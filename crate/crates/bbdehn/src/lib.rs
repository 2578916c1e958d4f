//! Identify Dehn functions of Bestvina–Brady groups from their defining
//! graphs.
//!
//! Given a finite simplicial graph, this crate builds the flag complex,
//! decides whether it is a 2-dimensional triangulated disk, detects the
//! structure (cones, join factorizations, suspensions of paths, fan/wheel
//! trees, induced square-boundary subdisks) that determines the Dehn
//! function of the associated Bestvina–Brady group, and reports the result
//! as an exact exponent (n², n³ or n⁴) or as certified bounds. It also
//! generates Dicks–Leary presentations and evaluates the corridor-stack
//! area recurrences behind the cubic upper bound.
//!
//! Start with [`classify::classify`] for the full pipeline, or run the
//! `bbdehn` command-line tool. Each major capability has a runnable example
//! under `examples/`.

pub mod canon;
pub mod classify;
pub mod disk;
pub mod flag;
pub mod gallery;
pub mod graph;
pub mod homology;
pub mod presentation;
pub mod report;
pub mod stack;
pub mod structure;

pub use classify::{classify, classify_with_options, ClassifyOptions, DehnVerdict, VerdictStatus};
pub use disk::{recognize_disk, DiskCertificate, DiskRejection};
pub use flag::{build_flag_complex, SimplicialComplex};
pub use graph::{parse_graph, Graph};
