//! Exact linear algebra over ℚ and F_p for finite-dimensional coalgebras,
//! bialgebras and Hopf algebras, with unified products built from extending
//! data, their factorization and classification, and group-level tools.

pub mod classification;
pub mod coalgebra;
pub mod datum;
pub mod error;
pub mod factorization;
pub mod groups;
pub mod io;
pub mod linmap;
pub mod linsolve;
pub mod report;
pub mod scalar;
pub mod space;
pub mod special;
pub mod tensor;
pub mod witnesses;

pub use error::{Error, Result};
pub use linmap::LinMap;
pub use report::{Check, Report};
pub use scalar::{Field, Scalar};
pub use space::BasedSpace;
