//! Holds the `acceptance` test target. Kept in its own package so that the
//! other suites run before it under `cargo test --workspace`.
