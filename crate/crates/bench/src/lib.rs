//! Criterion benchmarks for the partition enumerators, the word-product
//! cumulant engine and the operator model. Run with `cargo bench -p freecommutant-bench`.
