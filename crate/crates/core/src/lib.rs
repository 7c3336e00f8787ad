//! Homotopy quantum field theory on triangulated surfaces.
//!
//! A semisimple algebra `A` with a homomorphism `φ: G → Z(A)*` from a finite
//! abelian group gives a number for each closed surface triangulated with
//! `G`-labeled triangles ([`statesum`]), and a matrix for each word in
//! labeled cobordisms between circles ([`cobord`]). The [`acceptance`]
//! module checks that both behave as the theory says they must.

pub mod acceptance;
pub mod cobord;
pub mod commands;
pub mod frobenius;
pub mod group;
pub mod io;
pub mod linalg;
pub mod report;
pub mod statesum;
pub mod surface;

// The guide's code listings run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/statesum.md")]
    mod statesum {}
    #[doc = include_str!("../../../book/src/cobordisms.md")]
    mod cobordisms {}
    #[doc = include_str!("../../../book/src/acceptance.md")]
    mod acceptance {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
