//! Exact computational laboratory for finite commutative rings.
//!
//! Everything here works with fully materialized operation tables, so all
//! deciders are exhaustive: a `true` verdict comes with a replayable witness
//! and a `false` verdict with the size of the search space that was ruled
//! out. The one non-finite backend is [`zext`], which models `Z ∝ M` for a
//! finite abelian group `M` with exact ideal membership.

pub mod bitset;
pub mod construct;
pub mod deciders;
mod error;
pub mod hom;
pub mod ideal;
pub mod limits;
pub mod modules;
pub mod mulset;
pub mod nonnil;
pub mod par;
pub mod report;
pub mod ring;
pub mod zext;

pub use error::{Error, Result};
pub use hom::{make_hom, RingHom};
pub use ideal::{all_ideals, ideal_generated_by, is_principal, Ideal};
pub use modules::{
    make_free_module, make_module, restrict_scalars, submodule_generated, FiniteModule, Submodule,
};
pub use mulset::{make_mult_set, MultiplicativeSet};
pub use report::{Verdict, Witness, WitnessReport};
pub use ring::{
    make_gf, make_poly_quotient, make_table_ring, make_zmod, AxiomViolation, Backend, FiniteRing,
    RingElement, RingId,
};
