//! Levi-Civita connection of a left-invariant metric, from the Koszul formula.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{is_zero_vec, unit_vector, Gr, Vector};
use crate::metric::QuadraticForm;

/// Christoffel data on a left-invariant frame: `get(i, j)` is `∇_{e_i} e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectionTable {
    dim: usize,
    gamma: Vec<Gr>,
}

impl ConnectionTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Component `k` of `∇_{e_i} e_j`.
    pub fn component(&self, i: usize, j: usize, k: usize) -> &Gr {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }

    pub fn get(&self, i: usize, j: usize) -> Vector {
        (0..self.dim)
            .map(|k| self.component(i, j, k).clone())
            .collect()
    }

    /// `∇_x y` for constant-coefficient (left-invariant) fields.
    pub fn nabla(&self, x: &[Gr], y: &[Gr]) -> Vector {
        let n = self.dim;
        let mut out = vec![Gr::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let g = self.component(i, j, k);
                    if !g.is_zero() {
                        *o += &(&w * g);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Zero::is_zero)
    }

    /// First basis pair where `∇_x y − ∇_y x − [x, y] ≠ 0`.
    pub fn torsion_witness(&self, g: &LieAlgebra) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let br = g.bracket_basis(i, j);
                (0..n).any(|k| {
                    self.component(i, j, k) - self.component(j, i, k) != br[k]
                })
            })
    }

    /// First basis triple where `q(∇_z x, y) + q(x, ∇_z y) ≠ 0`.
    pub fn metric_witness(&self, q: &QuadraticForm) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for z in 0..n {
            for x in 0..n {
                for y in x..n {
                    let a = q.eval_unchecked(&self.get(z, x), &unit_vector(n, y));
                    let b = q.eval_unchecked(&unit_vector(n, x), &self.get(z, y));
                    if !(&a + &b).is_zero() {
                        return Some((z, x, y));
                    }
                }
            }
        }
        None
    }
}

/// Unique torsion-free metric connection on the left-invariant frame:
/// `2 q(∇_x y, z) = q([x,y],z) − q([y,z],x) + q([z,x],y)`.
pub fn levi_civita(g: &LieAlgebra, q: &QuadraticForm) -> Result<ConnectionTable> {
    let n = g.dim();
    if q.dim() != n {
        return Err(Error::WrongDimension {
            expected: n,
            found: q.dim(),
        });
    }
    q.require_nondegenerate()?;
    let g_inv = q.gram().inverse()?;
    let half = Gr::ratio(1, 2);
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    // q([e_a, e_b], e_c)
    let qb = |a: usize, b: usize, c: usize| q.eval_unchecked(&g.bracket_basis(a, b), &e[c]);
    let mut gamma = vec![Gr::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let lowered: Vector = (0..n)
                .map(|k| &(&(&qb(i, j, k) - &qb(j, k, i)) + &qb(k, i, j)) * &half)
                .collect();
            if is_zero_vec(&lowered) {
                continue;
            }
            let raised = g_inv.mul_vec(&lowered)?;
            for (k, x) in raised.into_iter().enumerate() {
                gamma[(i * n + j) * n + k] = x;
            }
        }
    }
    Ok(ConnectionTable { dim: n, gamma })
}

/// `div x = tr(a ↦ ∇_a x)`.
pub fn divergence(conn: &ConnectionTable, x: &[Gr]) -> Result<Gr> {
    let n = conn.dim();
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: x.len(),
        });
    }
    Ok((0..n)
        .map(|a| conn.nabla(&unit_vector(n, a), x)[a].clone())
        .sum())
}
