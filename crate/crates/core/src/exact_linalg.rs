//! Dense linear algebra over the rationals.
//!
//! Everything here is exact: entries are arbitrary-precision rationals kept in
//! lowest terms, and row reduction uses a fixed pivoting rule (leftmost column,
//! first nonzero row) so that every output is reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The scalar field. `BigRational` normalises to lowest terms with a positive
/// denominator on every construction.
pub type Rational = BigRational;

/// Coordinate vector.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&x| rat(x)).collect()
}

/// Serialises as `"p/q"`, or `"p"` when `q = 1`; the sign lives on `p`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Inverse of [`format_rational`]. The denominator must be a positive integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let is_int = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix('-').unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num, true) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => {
            if !is_int(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `acc += c * v`, skipping zero entries of `v`.
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row vectors. `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer literal constructor. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.as_ref().len(), cols, "ragged integer matrix");
                int_vector(r.as_ref())
            })
            .collect();
        Self::from_rows(cols, data).expect("checked above")
    }

    /// Square matrix from a row-major flattening of length `n²`.
    pub fn from_flat(n: usize, flat: &[Rational]) -> Result<Self> {
        Self::from_entries(n, n, flat.to_vec())
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product: `(a ⊗ b)[(i,k),(j,l)] = a[i][j] · b[k][l]`.
    pub fn kron(&self, other: &Self) -> Self {
        kron(self, other)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.entries[r * cols + c] = self.get(r0 + r, c0 + c).clone();
            }
        }
        out
    }

    /// Overwrites the block starting at `(r0, c0)` with `block`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse by Gauss–Jordan on `[M | I]`; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vector(n, r));
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let entries = rows
            .into_iter()
            .flat_map(|row| row.into_iter().skip(n))
            .collect();
        Some(Self {
            rows: n,
            cols: n,
            entries,
        })
    }
}

fn assert_same_shape(a: &ExactMatrix, b: &ExactMatrix) {
    assert!(
        a.rows == b.rows && a.cols == b.cols,
        "shape mismatch: {}x{} vs {}x{}",
        a.rows,
        a.cols,
        b.rows,
        b.cols
    );
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_same_shape(self, rhs);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_same_shape(self, rhs);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// Panics on an inner-dimension mismatch; see [`ExactMatrix::checked_mul`].
impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ExactMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.entries[(i * b.rows + k) * cols + j * b.cols + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// In-place Gauss–Jordan elimination on a list of rows of width `cols`.
/// Returns the pivot columns; rows are left in reduced row-echelon order with
/// zero rows at the end.
fn rref_rows(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let mut pivot_row = std::mem::take(&mut rows[r]);
        let inv = pivot_row[c].recip();
        if !inv.is_one() {
            for x in pivot_row[c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut rows: Vec<Vector> = m.row_vectors().map(<[Rational]>::to_vec).collect();
    let pivots = rref_rows(&mut rows, m.cols);
    let out = ExactMatrix::from_rows(m.cols, rows).expect("row widths preserved");
    (out, pivots)
}

/// Kernel of the linear system whose equations are `rows` (each of width `cols`).
/// Zero rows are dropped before elimination.
pub fn nullspace_of_rows(cols: usize, rows: Vec<Vector>) -> Subspace {
    let mut rows: Vec<Vector> = rows.into_iter().filter(|r| !is_zero_vector(r)).collect();
    let pivots = rref_rows(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel: Vec<Vector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(cols);
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Subspace::span_unchecked(cols, kernel)
}

pub fn nullspace(m: &ExactMatrix) -> Subspace {
    nullspace_of_rows(m.cols, m.row_vectors().map(<[Rational]>::to_vec).collect())
}

/// A subspace of `Q^n` held by its canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set. Equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ExactMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ExactMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let vectors: Vec<Vector> = vectors.into_iter().collect();
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Ok(Self::span_unchecked(ambient_dim, vectors))
    }

    fn span_unchecked(ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        let mut rows: Vec<Vector> = vectors.into_iter().filter(|v| !is_zero_vector(v)).collect();
        let pivots = rref_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Self {
            ambient_dim,
            basis: ExactMatrix::from_rows(ambient_dim, rows).expect("widths checked"),
            pivots,
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &ExactMatrix) -> Self {
        Self::span_unchecked(
            m.cols(),
            m.row_vectors().map(<[Rational]>::to_vec).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after clearing every pivot coordinate with the basis.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vector> {
        self.check_ambient(v.len())?;
        let mut w = v.to_vec();
        for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                axpy(&mut w, &c, row);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    /// Because the basis is reduced, these are just the pivot entries of `v`.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        let vectors = self
            .vectors()
            .chain(other.vectors())
            .map(<[Rational]>::to_vec)
            .collect();
        Ok(Self::span_unchecked(self.ambient_dim, vectors))
    }

    /// Rows spanning the annihilator `{w : w·b = 0 for every basis vector b}`.
    pub fn annihilator(&self) -> ExactMatrix {
        let ann = nullspace(&self.basis);
        ann.basis
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        let equations = self
            .annihilator()
            .row_vectors()
            .chain(other.annihilator().row_vectors())
            .map(<[Rational]>::to_vec)
            .collect();
        Ok(nullspace_of_rows(self.ambient_dim, equations))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        other.check_ambient(self.ambient_dim)?;
        for v in self.vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the subspace under a linear map given by its matrix.
    pub fn image(&self, map: &ExactMatrix) -> Result<Self> {
        self.check_ambient(map.cols())?;
        let vectors = self
            .vectors()
            .map(|v| map.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span_unchecked(map.rows(), vectors))
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersection(b)
}

pub fn subspace_contains(a: &Subspace, v: &[Rational]) -> Result<bool> {
    a.contains(v)
}

/// A subspace of `End(Q^n)`, each endomorphism flattened row-major into `Q^{n²}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoSubspace {
    n: usize,
    space: Subspace,
}

impl EndoSubspace {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            space: Subspace::zero(n * n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            space: Subspace::full(n * n),
        }
    }

    pub fn from_subspace(n: usize, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: space.ambient_dim(),
            });
        }
        Ok(Self { n, space })
    }

    pub fn from_matrices<'a, I>(n: usize, matrices: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a ExactMatrix>,
    {
        let mut vectors = Vec::new();
        for m in matrices {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows().max(m.cols()),
                });
            }
            vectors.push(m.entries().to_vec());
        }
        Ok(Self {
            n,
            space: Subspace::span_unchecked(n * n, vectors),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn matrices(&self) -> Vec<ExactMatrix> {
        self.space
            .vectors()
            .map(|v| ExactMatrix::from_flat(self.n, v).expect("ambient is n²"))
            .collect()
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.rows().max(m.cols()),
            });
        }
        self.space.contains(m.entries())
    }

    pub fn coordinates(&self, m: &ExactMatrix) -> Result<Option<Vector>> {
        self.space.coordinates(m.entries())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            n: self.n,
            space: self.space.sum(&other.space)?,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            n: self.n,
            space: self.space.intersection(&other.space)?,
        })
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.space.is_subspace_of(&other.space)
    }
}
