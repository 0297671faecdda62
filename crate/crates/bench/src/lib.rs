//! Benchmarks only; see `benches/enumeration.rs`.
