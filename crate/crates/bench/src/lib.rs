//! Criterion benchmarks for `lmpoly-core`; see `benches/`.
