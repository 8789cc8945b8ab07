//! Criterion benchmarks for `fde-core`; see `benches/kernel.rs`.
