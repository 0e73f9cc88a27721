//! The guide chapters, mirrored from `book/src` so that every code sample in
//! the book runs as a doc-test. `mdbook build book` renders the same files;
//! `cargo test --doc` executes them. A failing snippet fails the build, which
//! keeps the book and the library honest with each other.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/eigenvalues.md")]
pub mod eigenvalues {}

#[doc = include_str!("../../../book/src/stable-sequences.md")]
pub mod stable_sequences {}

#[doc = include_str!("../../../book/src/linearity.md")]
pub mod linearity {}

#[doc = include_str!("../../../book/src/adjoint-powers.md")]
pub mod adjoint_powers {}

#[doc = include_str!("../../../book/src/universal-form.md")]
pub mod universal_form {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
