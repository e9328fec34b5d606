//! Core groups of virtual link diagrams.
//!
//! A virtual link diagram is stored as a signed Gauss code. From it the crate
//! builds the core group `AC(D)` (one generator per arc, one relator
//! `g_a g_b1^-1 g_a g_b2^-1` per crossing), the Wirtinger group and the
//! π-orbifold quotient, and then studies the peripheral structure of `AC(D)`:
//! meridians, longitudes and the involutory meridional automorphisms.
//!
//! Invariants come in two flavours. Exact integer linear algebra gives
//! abelianizations ([`abelian`]). Finite quotients give separation
//! certificates and group orders ([`quotients`]). The numeric [`triangle`]
//! module checks the reflection representation used for pretzel knots.
//!
//! # Layout
//!
//! | module | contents |
//! |---|---|
//! | [`diagram`] | Gauss-code parser, named fixtures, orientation and Reidemeister moves |
//! | [`grouppres`] | words, presentations, builders, rewriting, Tietze, free products of cyclics |
//! | [`peripheral`] | longitudes, ι maps, meridian and pair enumeration, φ, the `f` embedding |
//! | [`abelian`] | Smith normal form, abelianization, `j_m` involutions, Alexander matrix at `t = -1` |
//! | [`quotients`] | permutation homomorphisms, Todd–Coxeter, Reidemeister–Schreier, structure reports |
//! | [`triangle`] | hyperboloid-model reflection groups and translation checks |
//! | [`cli`] | the subcommands behind the `coregroup` binary |
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! ```text
//! cargo run --example hopf_link
//! cargo run --example borromean_rings
//! cargo run --example two_four_component_links
//! cargo run --example twisted_whitehead
//! cargo run --example trotter_pretzel
//! cargo run --example orbifold_transport
//! cargo run --example reidemeister_invariance
//! ```

pub mod abelian;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod grouppres;
pub mod peripheral;
pub mod quotients;
pub mod tolerances;
pub mod triangle;

pub use diagram::{generate_named, parse_gauss_code, Named, VirtualLinkDiagram};
pub use error::{Error, Result};
pub use grouppres::{Presentation, PresentationKind, Word};
