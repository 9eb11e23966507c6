//! One-parameter families of curves in small characteristic: the Legendre
//! family over 𝔽₃[λ], the Hesse cubic family over 𝔽₂(μ), and the finite
//! group actions on truncated power series attached to each.

pub mod actions;
pub mod hesse;
pub mod legendre;
