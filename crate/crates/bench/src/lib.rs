//! Criterion benchmarks for the automaton engine and gasket rows. Run with
//! `cargo bench -p uwca-bench`.
