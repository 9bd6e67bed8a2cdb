//! Dense matrices over the Gaussian rationals and the exact kernels built on
//! Gauss–Jordan elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Gr;

/// Column vector of exact scalars.
pub type Vector = Vec<Gr>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Gr>,
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// One solution; `kernel_dim > 0` means the system is underdetermined.
    Solved { x: Vector, kernel_dim: usize },
    NoSolution,
}

/// Reduced row echelon form together with pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: CMatrix,
    pub pivots: Vec<usize>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gr::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gr::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gr>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                expected: format!("{c} columns"),
                found: format!("{} columns", bad.len()),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Gr::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn diag(entries: &[Gr]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Gr] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Gr] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Gr) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Gr {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[Gr]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn try_mul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<CMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn determinant(&self) -> Result<Gr> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Gr::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Gr::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<CMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Gr::one();
        }
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red.matrix[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Stacks the rows of `self` over the rows of `other`.
    pub fn vstack(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::ShapeMismatch {
                expected: format!("{} columns", self.cols),
                found: format!("{} columns", other.cols),
            });
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Gr;
    fn index(&self, (i, j): (usize, usize)) -> &Gr {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gr {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    /// Panics on shape mismatch.
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    /// Panics on shape mismatch.
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    /// Panics on shape mismatch; see [`CMatrix::try_mul`].
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.try_mul(rhs).expect("shape mismatch")
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMatrix{self}")
    }
}

/// Basis of `{x : A x = 0}`, one vector per free column of the RREF.
pub fn kernel(a: &CMatrix) -> Vec<Vector> {
    let Rref { matrix, pivots } = a.rref();
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Gr::zero(); a.cols()];
            v[f] = Gr::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&matrix[(r, f)];
            }
            v
        })
        .collect()
}

pub fn solve_linear(a: &CMatrix, b: &[Gr]) -> Result<LinearSolution> {
    if a.rows() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = CMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let Rref { matrix, pivots } = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::NoSolution);
    }
    let mut x = vec![Gr::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = matrix[(r, n)].clone();
    }
    Ok(LinearSolution::Solved {
        x,
        kernel_dim: n - pivots.len(),
    })
}

/// Row-reduced basis of the span of `vectors` (all of length `dim`).
pub fn span_basis(dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = CMatrix::from_rows(vectors.to_vec()).expect("uniform vector lengths");
    debug_assert_eq!(m.cols(), dim);
    let red = m.rref();
    (0..red.pivots.len())
        .map(|r| red.matrix.row(r).to_vec())
        .collect()
}

/// Coordinates of `v` in the (independent) family `basis`, if `v` lies in its span.
pub fn coordinates_in(basis: &[Vector], v: &[Gr]) -> Option<Vector> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    let a = CMatrix::from_columns(v.len(), basis).ok()?;
    match solve_linear(&a, v).ok()? {
        LinearSolution::Solved { x, .. } => Some(x),
        LinearSolution::NoSolution => None,
    }
}

pub fn dot(a: &[Gr], b: &[Gr]) -> Gr {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Gr], b: &[Gr]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Gr], b: &[Gr]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Gr], s: &Gr) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Gr::zero(); n];
    v[i] = Gr::one();
    v
}

pub fn is_zero_vec(v: &[Gr]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let b = vec![Gr::complex(1, 2, 3, 1), Gr::from_int(-4), Gr::i()];
        let sol = solve_linear(&CMatrix::identity(3), &b).unwrap();
        assert_eq!(
            sol,
            LinearSolution::Solved {
                x: b,
                kernel_dim: 0
            }
        );
    }

    #[test]
    fn back_substitution_with_imaginary_entry() {
        let a = CMatrix::from_rows(vec![
            vec![Gr::one(), Gr::i()],
            vec![Gr::zero(), Gr::one()],
        ])
        .unwrap();
        let sol = solve_linear(&a, &gv(&[0, 1])).unwrap();
        assert_eq!(
            sol,
            LinearSolution::Solved {
                x: vec![-Gr::i(), Gr::one()],
                kernel_dim: 0
            }
        );
    }

    #[test]
    fn inconsistent_singular_system() {
        // third row = first + second; b breaks that relation
        let a = CMatrix::from_ints(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]);
        assert_eq!(a.rank(), 2);
        let b = gv(&[1, 1, 3]);
        let aug = CMatrix::from_rows(vec![gv(&[1, 2, 3, 1]), gv(&[0, 1, 1, 1]), gv(&[1, 3, 4, 3])])
            .unwrap();
        assert_eq!(aug.rank(), 3);
        assert_eq!(solve_linear(&a, &b).unwrap(), LinearSolution::NoSolution);
    }

    #[test]
    fn underdetermined_reports_kernel_dim() {
        let a = CMatrix::from_ints(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]);
        match solve_linear(&a, &gv(&[1, 1, 2])).unwrap() {
            LinearSolution::Solved { x, kernel_dim } => {
                assert_eq!(kernel_dim, 1);
                assert_eq!(a.mul_vec(&x).unwrap(), gv(&[1, 1, 2]));
            }
            LinearSolution::NoSolution => panic!("consistent system"),
        }
    }

    #[test]
    fn solve_shape_mismatch() {
        assert!(solve_linear(&CMatrix::identity(3), &gv(&[1, 2])).is_err());
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(kernel(&CMatrix::zeros(3, 3)).len(), 3);
        assert!(kernel(&CMatrix::identity(3)).is_empty());
        let rank_one = CMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[-1, -2, -3]]);
        assert_eq!(rank_one.rank(), 1);
        let k = kernel(&rank_one);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&rank_one.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = CMatrix::from_rows(vec![
            vec![Gr::from_int(2), Gr::i(), Gr::zero()],
            vec![Gr::one(), Gr::from_int(3), Gr::ratio(1, 2)],
            vec![Gr::zero(), Gr::from_int(-1), Gr::one()],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CMatrix::identity(3));
        let det = a.determinant().unwrap();
        // 2(3 + 1/2) - i(1 - 0) = 7 - i
        assert_eq!(det, Gr::complex(7, 1, -1, 1));
        assert!(CMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
