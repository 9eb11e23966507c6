//! Exact-arithmetic foundations: small finite fields, multivariate integer
//! and finite-field polynomials, truncated power series, and Gaussian
//! elimination over a field.

pub mod field;
pub mod linalg;
pub mod multipoly;
pub mod series;

pub use field::{Field, FieldElement, FieldError};
pub use linalg::LinearBasis;
pub use multipoly::{MultiPoly, PolyError, RingTag, Scalar, Var};
pub use series::{SeriesError, TruncatedSeries};
