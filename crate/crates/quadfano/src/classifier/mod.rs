//! Weak Fano classification of blowups of the smooth quadric threefold along curves.

pub mod classify;
pub mod obstruction;
pub mod sets;

pub use classify::{
    classify, existence_audit, Classification, Containment, CurveInstance, ExistenceAudit,
    ExistenceAuditRow, TriState, Verdict,
};
pub use obstruction::{
    nmax_refined, pgd_nmax_raw, search_contradictory_divisor, CertifiedDivisor, NmaxRefinement,
    ObstructionCertificate, ObstructionReason, Pattern, PgdPolynomial, SearchOutcome,
};
pub use sets::{
    anticanonical_cube, anticanonical_dim, anticanonical_sq_e, in_p, p_membership_numeric, p_sets,
    secant_pairing, PSets,
};
