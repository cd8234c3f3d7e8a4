#![forbid(unsafe_code)]

//! Series sums and discrete Fourier transforms of integer-indexed functions,
//! computed by summing a small set of selected terms with analytically derived
//! complex weights.
//!
//! The target computation is
//!
//! ```text
//!   F(k) = Σ_{n=n_a}^{n_b} f(n) exp(-ikn),      k ∈ (-π, π),
//! ```
//!
//! including the plain series sum (`k = 0`) and sine/cosine transforms, for
//! functions that are piecewise smooth in `n` but defined over ranges far too
//! long to sum term by term. Instead of visiting every index, an odd sequence
//! of nodes `n_a = n_1 < n_2 < ... < n_{2m+1} = n_b` is chosen, `f` is sampled
//! only there, and each consecutive triple of nodes contributes a parabolic
//! panel whose sum against `exp(-ikn)` is carried out in closed form. The
//! result is exact for locally quadratic `f` and needs `M = 2m + 1` function
//! evaluations regardless of `n_b - n_a`, which may exceed 1e9.
//!
//! ```
//! use qdft_core::nodes::{q_sequence, QSequenceSpec};
//! use qdft_core::transform::{assemble_weights, FnSampled};
//! use qdft_core::{Complex64, Wavenumber};
//!
//! // Σ_{n=1..~1.27e9} n^{-1.5} from 151 samples.
//! let nodes = q_sequence(&QSequenceSpec::new(1.15, 151)?)?;
//! let table = assemble_weights(Wavenumber::ZERO, &nodes); // reusable across f
//! let f = FnSampled::new(1, nodes.last(), |n| {
//!     Complex64::new((n as f64).powf(-1.5), 0.0)
//! });
//! let result = table.apply(&nodes, &f)?;
//! assert!((result.value.re - 2.6122).abs() < 5e-5);
//! assert_eq!(result.node_count, 151);
//! # Ok::<(), qdft_core::Error>(())
//! ```
//!
//! Modules:
//! - [`kernel`]: geometric-sum moments and per-panel weights, including the
//!   numerically delicate small-`k` regime.
//! - [`transform`]: node sequences, assembled weight tables, and the DFT /
//!   series-sum / sine / cosine / piecewise entry points.
//! - [`nodes`]: node-selection strategies (geometric `q`-sequence, flat-plus-
//!   geometric hybrid, and a singularity-splitting plan).
//! - [`oracle`]: brute-force reference sums, exact closed forms for the
//!   built-in examples, and Faulhaber power sums.
//! - [`benchmarks`]: the zeta table and the two Fourier-series demo problems.
//! - [`verify`]: the self-check property suite used by the CLI and the
//!   acceptance tests.

pub mod benchmarks;
pub mod error;
pub mod kernel;
pub mod nodes;
pub mod oracle;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{panel_sum, panel_weights, y_triple, Panel, PanelWeights, Wavenumber, YTriple};
pub use transform::{
    assemble_weights, cosine_transform, dft, piecewise_transform, series_sum, sine_transform,
    FnSampled, NodeSequence, SampledFunction, Segment, TableSampled, TransformResult, WeightTable,
};

pub use num_complex::Complex64;
