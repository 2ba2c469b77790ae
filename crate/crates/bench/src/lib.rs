//! Criterion benchmarks for the core engines live in `benches/`.
