//! Benchmark-only package; the criterion targets live in `benches/`.
