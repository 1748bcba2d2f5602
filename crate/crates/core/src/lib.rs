//! Two-complexes from presentations and combinatorial descriptions, vertex
//! links, wedge splittings, and word problems for torus knot,
//! Baumslag-Solitar and two-generator Artin groups.
//!
//! The guide in `book/` walks through each module; its snippets run as
//! doc-tests.

pub mod complex;
pub mod error;
pub mod families;
pub mod links;
pub mod snf;
pub mod splitting;
mod unionfind;
pub mod wordproblem;
pub mod words;

pub use error::{Error, Result};

// Every guide chapter is a doc comment here so `cargo test` runs its
// snippets.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/links.md")]
    mod links {}
    #[doc = include_str!("../../../book/src/splitting.md")]
    mod splitting {}
    #[doc = include_str!("../../../book/src/word-problems.md")]
    mod word_problems {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
