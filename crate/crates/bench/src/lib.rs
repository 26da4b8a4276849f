//! Criterion benchmarks for the walk propagator and the opinion engine; see
//! `benches/engines.rs`. Run with `cargo bench -p walkop-bench`.
