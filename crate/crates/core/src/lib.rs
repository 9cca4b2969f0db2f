//! Exact combinatorics of weighted projective hypersurfaces.
//!
//! A hypersurface family is a list of positive weights `a_0, ..., a_{n+1}`
//! together with a degree `d`. This crate decides, with exact integer and
//! rational arithmetic only:
//!
//! * well-formedness of the ambient weighted projective space and the sign
//!   of the canonical class ([`weights`]),
//! * whether the general member of a family is quasismooth, with per-subset
//!   diagnostics ([`quasismooth`]),
//! * finiteness of the linear automorphism group and explicit order bounds
//!   built from weak Jordan constants ([`bounds`]),
//! * the group of diagonal automorphisms fixing an explicit polynomial, the
//!   distinguished square minor of its exponent matrix, and the central
//!   subgroup forced on every member of a family ([`symmetry`]),
//! * censuses of weight systems such as the elliptic and K3 lists
//!   ([`search`]).
//!
//! The integer linear algebra underneath (Smith normal form, determinants,
//! numerical-semigroup membership, partitions) lives in [`linalg`].

pub mod bounds;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod monomials;
pub mod quasismooth;
pub mod search;
pub mod symmetry;
pub mod weights;

pub use bounds::{
    curve_bound, curve_jordan_constant, lin_finiteness, lin_order_bound, weak_jordan_of_aut,
    worst_case_cn, CurveBound, ExceptionalCurve, FinitenessReason, FinitenessReport, JordanEntry,
    JordanTable, OrderBound,
};
pub use error::{Error, Result};
pub use linalg::{
    integer_determinant, n_representable, partitions_of, smith_normal_form, IntMatrix,
    SnfDecomposition,
};
pub use monomials::{
    enumerate_monomials, euler_check, monomial_existence_check, partial_derivative, ExponentVector,
    MonomialExistenceReport, PolynomialSupport, WeightedPolynomial,
};
pub use quasismooth::{is_linear_cone, quasismooth_exists, QuasismoothReport, SubsetFailure};
pub use search::{enumerate_families, SearchConstraints};
pub use symmetry::{
    distinguished_minor, fermat_prediction, fixing_group, forced_central_group, lin_diagonal_order,
    AbelianGroupStructure, DiagonalOrder, DistinguishedMinor, FermatPrediction,
};
pub use weights::{
    aut_equals_lin, canonical_class, genericity_condition, is_well_formed, CanonicalClassReport,
    CanonicalKind, HypersurfaceFamily, Linearity, WeightSystem,
};
