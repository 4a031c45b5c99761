//! Criterion benchmarks for the classifier; see `benches/`.
