//! Criterion benchmarks for `infmod-core` live in `benches/`.
