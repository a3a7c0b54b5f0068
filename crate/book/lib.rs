// mdbook cannot test snippets that depend on workspace crates, so every
// chapter is included here as module docs and runs under `cargo test --doc`.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("src/characteristic-polynomial.md")]
pub mod characteristic_polynomial {}
#[doc = include_str!("src/multiplicity.md")]
pub mod multiplicity {}
#[doc = include_str!("src/anticommutation.md")]
pub mod anticommutation {}
#[doc = include_str!("src/spectrum.md")]
pub mod spectrum {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
