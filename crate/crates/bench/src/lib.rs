//! Benchmark-only crate; see `benches/pipeline.rs`. Kept separate so the
//! library crates do not carry criterion in their dependency trees.
