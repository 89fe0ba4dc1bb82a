//! Criterion benchmarks for wog-toric live in `benches/`.
