//! Rouquier block partitions of cyclotomic Hecke algebras for the infinite
//! series `G(de,e,r)` of complex reflection groups, in exact arithmetic.
//!
//! The pipeline has three layers:
//!
//! * [`partition`] and [`cyclotomic`] provide the combinatorial kernels:
//!   beta-numbers, charged symbols and contents, and the root-of-unity
//!   criterion deciding which weight-space hyperplanes are essential.
//! * [`ariki_koike`] computes the blocks of `G(d,1,r)` for any integer weight
//!   system, and [`rank2`] does the same for the family `G(2d,2,2)` from its
//!   factored Schur elements ([`schur`]), including the `a`/`A` invariants.
//! * [`descent`] transports blocks down to `G(de,e,r)` along the cyclic-group
//!   actions of Clifford theory, and dispatches an arbitrary group of the
//!   series to the right route.
//!
//! The [`verify`] module bundles the property suites (with their independent
//! oracles) behind the `rouquier verify` command; [`report`] produces the
//! deterministic JSON consumed by the CLI.
//!
//! ```
//! use rouquier::ariki_koike::{rouquier_blocks, AkSpecialization};
//!
//! // G(2,1,2) with weights m = (0,0), n = 1: three blocks.
//! let spec = AkSpecialization::new(2, 2, vec![0, 0], 1).unwrap();
//! assert_eq!(rouquier_blocks(&spec).num_blocks(), 3);
//! ```

pub mod ariki_koike;
pub mod blocks;
pub mod cyclotomic;
pub mod descent;
pub mod error;
pub mod partition;
pub mod rank2;
pub mod report;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    //! Chapters of the guide double as doc-tests, keeping the book's code
    //! snippets in sync with the library.
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions-and-symbols.md")]
    mod partitions_and_symbols {}
    #[doc = include_str!("../../../book/src/essential-hyperplanes.md")]
    mod essential_hyperplanes {}
    #[doc = include_str!("../../../book/src/ariki-koike-blocks.md")]
    mod ariki_koike_blocks {}
    #[doc = include_str!("../../../book/src/rank-two.md")]
    mod rank_two {}
    #[doc = include_str!("../../../book/src/clifford-descent.md")]
    mod clifford_descent {}
}
