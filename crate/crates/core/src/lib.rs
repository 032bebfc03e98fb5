//! Exact slope arithmetic for isocrystals and φ-modules.
//!
//! * [`exactnum`]: rationals, saturating counts and slope polygons.
//! * [`slopecalc`]: isomorphism classes `⊕ M(c,d)^{⊕k}` and their tensor algebra.
//! * [`admissibility`]: minuscule filtrations, weak admissibility and the
//!   possible slope types of the attached φ-module.
//! * [`classifier`]: when the weakly admissible locus equals the admissible one
//!   for `GL_n`, with a good pattern or a bad witness.
//! * [`cli`]: the `slopelab` command line.

pub mod admissibility;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod slopecalc;

pub use admissibility::{
    wa_exists, FilteredType, IntersectionProfile, MinusculeHodge, SubSelection,
};
pub use classifier::{classify, BadWitness, GoodPattern, PatternKind, Verdict};
pub use error::{Result, SlopeError};
pub use exactnum::{ConvexPolygon, ExtCount, Fraction};
pub use slopecalc::{SimpleSummand, SlopeType};
