//! Cable and twisted-satellite knots as braid closures.
//!
//! The crate builds knots as explicit braid words (torus braids, cables,
//! twisted satellites, connected sums), computes classical invariants of
//! their closures exactly (Alexander polynomial by two independent routes,
//! signature, Tristram-Levine signatures), and provides the concordance
//! calculus around them: interval bounds for the value of a concordance
//! homomorphism on cables, the h and g correction tables with their
//! monotonicity checks, obstruction verdicts, and machine-checkable
//! band-move cobordism witnesses.
//!
//! All arithmetic is exact: integer Laurent polynomials, half-integers
//! stored doubled, rational intervals for certified sign determination.

pub mod braid;
pub mod cobordism;
pub mod concordance;
pub mod invariants;
pub mod laurent;

pub use braid::{BraidWord, ClosureSummary, Permutation};
pub use concordance::{HalfInt, KnotRecord, NuInterval};
pub use laurent::LaurentPoly;
