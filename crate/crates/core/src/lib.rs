//! Homological shift ideals of monomial ideals.
//!
//! Everything is computed from first principles: multigraded Betti numbers via
//! the homology of upper Koszul simplicial complexes over exact arithmetic,
//! linear quotients by backtracking or by shelling the Alexander dual of the
//! polarization, and the socle from the top multigraded shifts.
//!
//! ```
//! use hsi_core::{homological_shift_ideal, text::parse_ideal_file};
//!
//! let doc = parse_ideal_file("ring: a b c d e f\ngens: a*b, a*c, a*d, d*e, d*f\n").unwrap();
//! let hs2 = homological_shift_ideal(&doc.ideal, 2);
//! assert_eq!(hs2.len(), 2); // a*b*c*d, a*d*e*f
//! ```

pub mod error;
pub mod linalg;
pub mod monomial;
pub mod polarization;
pub mod properties;
pub mod resolution;
pub mod search;
pub mod shifts;
pub mod simplicial;
pub mod text;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, MAX_EXPONENT};
pub use polarization::{depolarize_monomial, polarize_ideal, polarize_monomial, PolarizedIdeal};
pub use properties::{
    admissible_order, check, check_homological, has_homological_linear_quotients,
    has_homological_linear_resolution, has_linear_quotients, has_linear_resolution,
    is_admissible_order, is_homological_polymatroidal, is_polymatroidal, AdmissibleOrder,
    CheckOptions, LinearQuotientsAlgorithm, Outcome, PropertyReport, ShiftProperty, Witness,
};
pub use resolution::{
    betti_table, koszul_strand_betti, lcm_multidegrees, multigraded_shifts, projective_dimension,
    reduced_homology_ranks, regularity, upper_koszul_complex, BettiTable, FieldChoice,
};
pub use search::{SearchBudget, SearchOutcome, DEFAULT_BUDGET};
pub use shifts::{homological_shift_ideal, socle, socle_brute_force};
pub use simplicial::{alexander_dual, Face, ShellingOrder, SimplicialComplex};
