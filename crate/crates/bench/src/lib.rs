//! Criterion benchmarks for `systole-core`; see `benches/`.
