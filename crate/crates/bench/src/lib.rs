//! Criterion benchmarks for goedelsim; see `benches/core.rs`.
