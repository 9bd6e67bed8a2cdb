//! Left-invariant holomorphic Riemannian metrics on a Lie algebra.

mod connection;
mod curvature;
mod form;
mod orthogonal;

pub use connection::{divergence, levi_civita, ConnectionTable};
pub use curvature::{
    constant_curvature, constant_curvature_of, curvature, ricci, sectional_curvature,
    ConstantCurvature, CurvatureTensor, Sectional, Triple,
};
pub use form::QuadraticForm;
pub use orthogonal::{
    build_adapted_basis, isotropic_lines, skew_algebra, stabilizer_in_skew,
    unipotent_generator, unipotent_isotropy_matrix, AdaptedBasis, AdaptedKind, AdaptedVectors,
    IsotropicLines, RootPolicy,
};

use crate::error::Result;
use crate::lie::LieAlgebra;

/// A metric together with its connection and curvature.
#[derive(Clone, Debug)]
pub struct LeftInvariantMetric {
    pub algebra: LieAlgebra,
    pub form: QuadraticForm,
    pub connection: ConnectionTable,
    pub curvature: CurvatureTensor,
}

impl LeftInvariantMetric {
    pub fn new(algebra: LieAlgebra, form: QuadraticForm) -> Result<Self> {
        let connection = levi_civita(&algebra, &form)?;
        let curvature = curvature(&algebra, &connection)?;
        Ok(Self {
            algebra,
            form,
            connection,
            curvature,
        })
    }

    pub fn constant_curvature(&self) -> Result<ConstantCurvature> {
        constant_curvature_of(&self.form, &self.curvature)
    }

    pub fn ricci(&self) -> QuadraticForm {
        ricci(&self.curvature)
    }
}
