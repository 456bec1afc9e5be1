//! Holds the `acceptance` test target, which checks the symweight library
//! against independent brute-force computations. Run it with
//! `cargo test -p symweight-validation --test acceptance`.
