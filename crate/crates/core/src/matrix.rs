use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{MatrixError, PolyError};
use crate::poly::{EvalPoint, Polynomial, Rational, VarId};

/// Dense row-major matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: alloc::vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::scalar(&Polynomial::one(), n)
    }

    /// `p * I_n`.
    pub fn scalar(p: &Polynomial, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = p.clone();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * m);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m {
                return Err(MatrixError::Ragged {
                    row: i,
                    found: row.len(),
                    expected: m,
                });
            }
            entries.extend(row);
        }
        Ok(PolyMatrix {
            rows: n,
            cols: m,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|p| !p.is_zero()).count()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for p in &self.entries {
            out.extend(p.variables());
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::Shape {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|e| e * p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] * other`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (p, q) = other.shape();
        let mut out = PolyMatrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * p + k, j * q + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// `[[a, b], [c, d]]` from four blocks.
    pub fn block2(
        a: &PolyMatrix,
        b: &PolyMatrix,
        c: &PolyMatrix,
        d: &PolyMatrix,
    ) -> Result<PolyMatrix, MatrixError> {
        let shape_err = |l: &PolyMatrix, r: &PolyMatrix| MatrixError::Shape {
            op: "block2",
            left: l.shape(),
            right: r.shape(),
        };
        if a.rows != b.rows {
            return Err(shape_err(a, b));
        }
        if c.rows != d.rows {
            return Err(shape_err(c, d));
        }
        if a.cols != c.cols {
            return Err(shape_err(a, c));
        }
        if b.cols != d.cols {
            return Err(shape_err(b, d));
        }
        let mut out = PolyMatrix::zeros(a.rows + c.rows, a.cols + b.cols);
        out.paste(0, 0, a);
        out.paste(0, a.cols, b);
        out.paste(a.rows, 0, c);
        out.paste(a.rows, a.cols, d);
        Ok(out)
    }

    fn paste(&mut self, r0: usize, c0: usize, m: &PolyMatrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.get(r, c).clone());
            }
        }
    }

    pub fn evaluate(&self, point: &EvalPoint) -> Result<RationalMatrix, PolyError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            entries.push(p.evaluate(point)?);
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// First entry where `self` differs from `p * I`, if any.
    pub fn scalar_mismatch(&self, p: &Polynomial) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                let ok = if r == c { e == p } else { e.is_zero() };
                if !ok {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for (c, p) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Matrix of rationals, used for evaluated products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    /// Product skipping zero entries of the left factor and of each row of
    /// the right factor.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let sparse_rows: Vec<Vec<(usize, &Rational)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .map(|j| (j, other.get(k, j)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut entries = alloc::vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for (k, row) in sparse_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in row {
                    entries[i * other.cols + j] += a * *b;
                }
            }
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// First entry where `self` differs from `v * I`, if any.
    pub fn scalar_mismatch(&self, v: &Rational) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                let ok = if r == c { e == v } else { e.is_zero() };
                if !ok {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn is_identity_multiple(&self, v: &Rational) -> bool {
        self.scalar_mismatch(v).is_none()
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }
}

/// The perfect shuffle permutation matrix `S_{m,n}` of size `mn`, with a 1
/// at row `a*m + i`, column `i*n + a` for `a < n`, `i < m`.
///
/// For `A` of size `p x q` and `B` of size `r x s`,
/// `B ⊗ A = S_{p,r} (A ⊗ B) S_{q,s}^T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShuffleMatrix {
    m: usize,
    n: usize,
    /// `perm[row]` is the column holding the 1 in that row.
    perm: Vec<usize>,
}

impl ShuffleMatrix {
    pub fn new(m: usize, n: usize) -> Self {
        let mut perm = alloc::vec![0; m * n];
        for a in 0..n {
            for i in 0..m {
                perm[a * m + i] = i * n + a;
            }
        }
        ShuffleMatrix { m, n, perm }
    }

    pub fn size(&self) -> usize {
        self.m * self.n
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        permutation_matrix(&self.perm)
    }
}

/// Permutation matrix with a 1 at `(r, perm[r])`.
pub fn permutation_matrix(perm: &[usize]) -> PolyMatrix {
    let n = perm.len();
    let mut m = PolyMatrix::zeros(n, n);
    for (r, &c) in perm.iter().enumerate() {
        m.set(r, c, Polynomial::one());
    }
    m
}
