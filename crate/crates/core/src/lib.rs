//! Exact q-series arithmetic and verifiers for central q-binomial identities
//! and congruences.

mod dense;
mod error;
mod modgcd;

pub mod claims;
pub mod cyclotomic;
pub mod numtheory;
pub mod poly;
pub mod qcomb;
pub mod ratfun;

pub use error::{Error, Result};
pub use poly::{gcd, ring_op, LaurentPoly, Rational, RingOp};
pub use qcomb::{binomial, q_binomial, q_int, q_pochhammer, MonomialArg};
pub use ratfun::RatFun;
pub use cyclotomic::{congruence_witness, congruent_mod_cyclotomic, cyclotomic, euler_phi, moebius, reduce_mod_cyclotomic, CyclotomicCache, Residue, ResidueRing};
pub use numtheory::{fibonacci, is_prime, jacobi, lucas_seq, modp, modp_rational, LucasKind, ModPValue};
pub use claims::{build_lhs, build_rhs, pside_values, q_one_specialization, ClaimId, ClaimKind, ClaimParams, Status, VerificationResult, Verifier, Witness};
