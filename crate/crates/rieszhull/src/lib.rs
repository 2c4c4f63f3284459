//! Exact computation of Riesz hulls of finite semisimple MV-algebras.
//!
//! Algebras are presented as rational-valued function algebras over a finite
//! point set. The crate computes the generated lattice-ordered group, the
//! divisible hull with averaging certificates, the Riesz hull with its
//! rational skeleton, essentiality witnesses, homomorphism extensions, and
//! the hull functor, all in exact rational arithmetic. A one-variable
//! piecewise-linear calculus witnesses the free-algebra case.

pub mod error;
pub mod cli;
pub mod exactla;
pub mod freepwl;
pub mod hull;
pub mod mvcore;
pub mod rat;
pub mod specfile;
pub mod term;

pub use error::{Error, Result};
pub use rat::{QVector, Rat};
