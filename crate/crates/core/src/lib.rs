//! Exact free-cumulant engine for polynomials in a semicircular element `s`
//! and a free variable `x`.
//!
//! - [`partitions`]: set partitions, non-crossing enumeration, joins, `π(σ)`.
//! - [`cumulant`]: block cumulants, products-as-entries, moment/cumulant transforms.
//! - [`commutator`]: cumulants of `i[s,x]`, `s + i[s,x]`, `x + i[x,s]`.
//! - [`fock`]: the operator model on tensors of powers of `Y`.
//! - [`fid`]: cumulant-level free convolution and Hankel positivity checks.

pub mod commutator;
pub mod cumulant;
pub mod error;
pub mod fid;
pub mod fock;
pub mod partitions;
pub mod poly;
pub mod rational;

pub use commutator::{
    cancellation_sum, commutator_polynomial, cumulant_sequence_of, freeness_witness,
    prop41_closed_form, prop41_oracle, verify_additivity, AdditivityReport, AdditivityRun,
    CommutatorKind, DistributionPair,
};
pub use cumulant::{
    cumulant_of_polynomials, cumulant_of_word_products, cumulants_from_moments, kappa_block,
    kappa_pi, moments_from_cumulants, CumulantSequence, MomentSequence,
};
pub use error::{Error, Result};
pub use fid::{boxplus, compound_poisson_from_rho, hankel_fid_check, FidVerdict};
pub use fock::{
    composition_formula_cumulant, inner_product, model_cumulant, verify_adjointness,
    FockBasisTensor, FockVector, OperatorName, RhoMoments,
};
pub use partitions::{Partition, PartitionKind};
pub use poly::{Letter, Polynomial, Word};
pub use rational::{GaussianRational, Rational};
