//! Benchmarks for the xdstir engine live in `benches/`.
