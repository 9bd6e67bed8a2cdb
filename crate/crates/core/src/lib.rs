//! Exact computations for complex Lie algebras carrying holomorphic
//! Riemannian (nondegenerate complex quadratic) forms.
//!
//! The crate covers
//! * exact Gaussian-rational linear algebra ([`linalg`]),
//! * Lie algebras given by structure constants ([`lie`]),
//! * left-invariant metrics: Levi-Civita connection, curvature, isotropy
//!   algebra and adapted bases ([`metric`]),
//! * homogeneous models `G/I` and their isotropy representations ([`model`]),
//! * a catalog of the algebras and models of the 3-dimensional
//!   classification, with a verification suite ([`catalog`], [`verify`]),
//! * the `.liealg` text format and the command-line front end ([`dsl`], [`cli`]).
//!
//! ```
//! use holometric::dsl;
//! use holometric::metric::LeftInvariantMetric;
//!
//! let spec = dsl::parse(
//!     "[algebra]\nbasis = H, E, F\n\
//!      [brackets]\n\"H,E\" = 2 E\n\"H,F\" = -2 F\n\"E,F\" = H\n\
//!      [form]\n\"H,H\" = 8\n\"E,F\" = 4\n",
//! )?;
//! let metric = LeftInvariantMetric::new(spec.algebra, spec.form.unwrap())?;
//! assert_eq!(metric.constant_curvature()?.to_string(), "Constant(-1/8)");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod catalog;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod model;
pub mod verify;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use lie::{AlgebraClass, LieAlgebra};
pub use linalg::{CFloat, CMatrix, CPoly, GaussianRational, Gr, Vector};
pub use metric::{ConnectionTable, CurvatureTensor, QuadraticForm};
pub use model::{HomogeneousModel, IsotropyType};
