//! Benchmarks of the exact kernels live in `benches/`.
