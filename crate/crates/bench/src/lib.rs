//! Criterion benchmarks for trigrid; see `benches/`.
