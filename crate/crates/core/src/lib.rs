//! Multi-point algebraic-geometric codes over Kummer extensions
//! `y^m = f(x)^lambda`.
//!
//! * [`gf`]: arithmetic in GF(p^e) and Gaussian elimination.
//! * [`curve`]: the curve model, its genus, Bézout data and rational places.
//! * [`rrlattice`]: explicit Riemann-Roch bases indexed by lattice points.
//! * [`weierstrass`]: semigroups, pure gaps, gap boxes and divisor floors.
//! * [`agcode`]: generator matrices of `C_L` and `C_Omega`, designed
//!   distances and an exhaustive distance oracle.

pub mod agcode;
pub mod curve;
pub mod error;
pub mod gf;
pub mod rrlattice;
pub mod weierstrass;

pub use agcode::{
    applicable_bounds, brute_force_distance, build_cl, build_comega, designed_distance,
    BoundMethod, DesignedBound, EvaluationSet, LinearCode,
};
pub use curve::{find_roots, CurveShape, KummerCurve, PrincipalItem, RationalPlace};
pub use error::{Error, Result};
pub use gf::{FieldElement, FiniteField, Matrix};
pub use rrlattice::{BasisMonomial, Divisor, LatticePoint, ThetaPoint};
pub use weierstrass::{BoxCandidate, GapBox, OnePoint, PlaceTuple};
