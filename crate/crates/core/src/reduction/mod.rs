//! Gram–Schmidt, Gauss reduction, LLL and Hermite normal form.

mod audit;
mod gauss;
mod gso;
mod hnf;
mod lll;

pub use audit::{audit_lll, audit_lll_f64, LllAudit};
pub use gauss::gauss_reduce_2d;
pub use gso::{
    gram_schmidt, gram_schmidt_exact, ExactGramSchmidt, GramSchmidtData, TAU_GS, TAU_RANK,
};
pub use hnf::hnf;
pub use lll::{
    lll, lll_reference, lll_with_stats, parse_rational, GsoArithmetic, LllOutcome, LllParams,
};
