//! The book, compiled. mdbook cannot run a book's examples against a real
//! dependency graph, so this crate includes every chapter of `book/src`
//! verbatim as module documentation and lets `cargo test --doc` do what
//! `mdbook test` cannot: build each code block against the actual `epscan`
//! crate and execute it. One module per chapter keeps test failures
//! attributable to the file they came from.
//!
//! There is no code here to use — depend on `epscan` directly.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}

#[doc = include_str!("../../../book/src/collisions.md")]
pub mod collisions {}

#[doc = include_str!("../../../book/src/jordan.md")]
pub mod jordan {}

#[doc = include_str!("../../../book/src/symmetry.md")]
pub mod symmetry {}

#[doc = include_str!("../../../book/src/sweep.md")]
pub mod sweep {}

#[doc = include_str!("../../../book/src/critical-points.md")]
pub mod critical_points {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
