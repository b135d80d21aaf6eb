//! Exact-arithmetic workbench for the generalized 3x3 matrix realization of
//! e8 over pairs of (split) octonion algebras.
//!
//! All computation is over arbitrary-precision rationals; every identity
//! checked here holds exactly or the check fails.

pub mod albert;
pub mod algebra;
pub mod decomposition;
pub mod e8;
pub mod linalg;
pub mod operator;
pub mod report;
pub mod scalar;
