//! Verification of 2-to-1 maps, QM and o-equivalence, constructions of the known
//! families and the eliminant identities behind the quadrinomial proofs.

mod equiv;
pub mod family;
pub mod identities;
mod verify;

pub use equiv::{o_orbit, qm_canonical, qm_equivalent, qm_orbit, qm_transform};
pub use family::{family_instances, make_family, FamilyId, FamilyKind};
pub use identities::{verify_resultant_identity, IdentityCheck};
pub use verify::{
    compose_monomial, frobenius_square, is_o_polynomial, is_two_to_one, monomial_two_to_one, o_monomial_by_definition,
    preimage_histogram, shift_criterion, table_is_two_to_one, HistogramSummary, PreimageHistogram, HISTOGRAM_LIMIT,
    PAIR_SCAN_LIMIT,
};
