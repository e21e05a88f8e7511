//! Exact combinatorics of Hilbert schemes of projective space.
//!
//! Everything here is computed over the integers or the rationals with
//! arbitrary precision; there is no floating point anywhere. The crate
//! provides:
//!
//! * numerical polynomials in the binomial-coefficient basis ([`numpoly`]),
//! * integer partitions and their bijection with Hilbert polynomials
//!   ([`partitions`]),
//! * a small monomial-ideal kernel (membership, intersection, colon,
//!   saturation, Hilbert functions) that serves as the brute-force oracle for
//!   everything else ([`monomial`]),
//! * constructors for lexicographic ideals, their irreducible decomposition,
//!   residual chains and the singular witness ideals ([`lex`]),
//! * the seven-condition smoothness classification of `Hilb^p(P^m)` together
//!   with dimension formulas for lexicographic components and residual-flag
//!   parameter spaces ([`mod@classify`]),
//! * tangent-space dimensions `dim Hom(I, R/I)_0` at monomial points via
//!   pairwise syzygies and exact linear algebra ([`tangent`]).

pub mod classify;
pub mod error;
pub mod lex;
pub mod linalg;
pub mod monomial;
pub mod numpoly;
pub mod partitions;
pub mod tangent;

pub use classify::{
    classify, lex_component_dim, lsing_counts, res_space_dim, singular_witness, Classification,
    LsingCounts, Verdict, WitnessStatus,
};
pub use error::{Error, Result};
pub use lex::{
    four_points_ideal, irreducible_components, lex_ideal, lsing_witness, nearly_lex_ideal,
    residual_chain,
};
pub use monomial::{minimalize, Monomial, MonomialIdeal};
pub use numpoly::NumericalPolynomial;
pub use partitions::{partition_of_polynomial, Partition, PartitionInvariants, ResidualType};
pub use tangent::{
    certify_singular, certify_singular_with_cap, hom0_dimension, hom0_dimension_with_cap,
    taylor_syzygies, FieldSpec, SingularCertificate, SyzygyPair, TangentReport,
    DEFAULT_DEGREE_CAP,
};

#[cfg(test)]
mod thread_safety {
    /// All value types are immutable data and safe to share across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::NumericalPolynomial>();
        check::<crate::Partition>();
        check::<crate::ResidualType>();
        check::<crate::Monomial>();
        check::<crate::MonomialIdeal>();
        check::<crate::Classification>();
        check::<crate::TangentReport>();
        check::<crate::SyzygyPair>();
        check::<crate::SingularCertificate>();
        check::<crate::Error>();
    }
}
