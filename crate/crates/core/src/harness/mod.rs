//! Executable checks of the graded-parameter relations, the `Ψ` evaluator,
//! and the fractional-Helly probe.

pub mod corpus;
pub mod probe;
pub mod psi;
pub mod verify;

pub use corpus::CorpusSpec;
pub use probe::{
    check_colorful_clique_hypotheses, probe_fractional_helly, ColorfulCliqueReport, ProbeReport,
};
pub use psi::{check_phi_below_psi, psi_eval, s_inverse, PhiPsiReport, PlugTable, PsiTables};
pub use verify::{
    check_helly_growth_law, verify_helly_growth, verify_helly_growth_systems, verify_levi,
    verify_minimal_nonpartitionable, verify_radon_bound, verify_radon_bound_with, Counterexample,
    HellyLawViolation, MinimalVerdict, VerifyReport,
};
