//! Truncated current Heisenberg algebras `h_m ⊗ C[t]/(t^{k+1})`.
//!
//! Basis order is `e_1⊗1, …, e_1⊗t^k, e_2⊗1, …, f_m⊗t^k, z⊗1, …, z⊗t^k`, so the
//! matrix of a derivation splits into an `e` block, an `f` block and a `z`
//! block, each a grid of `(k+1) × (k+1)` sub-blocks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assoc_algebra::{rbar, regular_rep, AssocAlgebra};
use crate::current::{current_algebra, CurrentAlgebra, DecompositionReport};
use crate::error::{Error, Result};
use crate::exact_linalg::{
    kron, rat, unit_vector, EndoSubspace, ExactMatrix, Rational, Subspace, Vector,
};
use crate::lie_algebra::{is_symplectic, sp, LieAlgebra};

pub fn truncated_heisenberg(m: usize, k: usize) -> CurrentAlgebra {
    current_algebra(
        &LieAlgebra::heisenberg(m),
        &AssocAlgebra::truncated_polynomial(k),
    )
    .expect("heisenberg and truncated polynomial algebras are valid")
}

/// Closed-form `dim der(h_{m,k})`.
pub fn der_dimension_formula(m: usize, k: usize) -> usize {
    m * (2 * m + 1) * (k + 1) + 2 * m * (k + 1) * (k + 1) + 2 * k + 1
}

/// Free parameters of the block template for `der(h_{m,k})`.
///
/// Toeplitz blocks are stored by their first column. `a2` and `a4` hold only
/// the `i ≤ j` cells, row-major. `q` has no constant term and is stored as
/// `q_1, …, q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateParams {
    pub m: usize,
    pub k: usize,
    pub a1: Vec<Vector>,
    pub a2: Vec<Vector>,
    pub a4: Vec<Vector>,
    pub p: Vector,
    pub q: Vector,
    /// The `z` rows against the `e`/`f` columns, row-major.
    pub strip: Vector,
}

pub fn parameter_count(m: usize, k: usize) -> usize {
    let n = k + 1;
    m * m * n + m * (m + 1) * n + 2 * m * n * n + n + k
}

fn sym_index(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * m - i * (i + 1) / 2 + j
}

fn toeplitz(col: &[Rational]) -> ExactMatrix {
    regular_rep(col.len() - 1, col).expect("length matches")
}

impl TemplateParams {
    pub fn zero(m: usize, k: usize) -> Self {
        let n = k + 1;
        let sym = m * (m + 1) / 2;
        let z = || vec![rat(0); n];
        Self {
            m,
            k,
            a1: (0..m * m).map(|_| z()).collect(),
            a2: (0..sym).map(|_| z()).collect(),
            a4: (0..sym).map(|_| z()).collect(),
            p: z(),
            q: vec![rat(0); k],
            strip: vec![rat(0); n * 2 * m * n],
        }
    }

    /// Parameters in the order `a1, a2, a4, p, q, strip`.
    pub fn to_vector(&self) -> Vector {
        let mut out = Vec::with_capacity(parameter_count(self.m, self.k));
        for block in self.a1.iter().chain(&self.a2).chain(&self.a4) {
            out.extend(block.iter().cloned());
        }
        out.extend(self.p.iter().cloned());
        out.extend(self.q.iter().cloned());
        out.extend(self.strip.iter().cloned());
        out
    }

    pub fn from_vector(m: usize, k: usize, v: &[Rational]) -> Result<Self> {
        let count = parameter_count(m, k);
        if v.len() != count {
            return Err(Error::DimensionMismatch {
                expected: count,
                found: v.len(),
            });
        }
        let n = k + 1;
        let mut it = v.iter().cloned();
        let mut take = |len: usize| -> Vector { (&mut it).take(len).collect() };
        let sym = m * (m + 1) / 2;
        let a1 = (0..m * m).map(|_| take(n)).collect();
        let a2 = (0..sym).map(|_| take(n)).collect();
        let a4 = (0..sym).map(|_| take(n)).collect();
        let p = take(n);
        let q = take(k);
        let strip = take(n * 2 * m * n);
        Ok(Self {
            m,
            k,
            a1,
            a2,
            a4,
            p,
            q,
            strip,
        })
    }

    fn padded_q(&self) -> Vector {
        std::iter::once(rat(0))
            .chain(self.q.iter().cloned())
            .collect()
    }

    /// `R(p) + R̄(q)`, the diagonal correction on every `e`/`f` diagonal block.
    fn diagonal_correction(&self) -> ExactMatrix {
        let r = regular_rep(self.k, &self.p).expect("length k+1");
        let rb = rbar(self.k, &self.padded_q()).expect("length k+1");
        &r + &rb
    }

    fn corner(&self) -> ExactMatrix {
        let r = regular_rep(self.k, &self.p).expect("length k+1");
        let rb = rbar(self.k, &self.padded_q()).expect("length k+1");
        &r.scale(&rat(2)) + &rb
    }

    /// The template matrix for these parameters.
    pub fn instantiate(&self) -> ExactMatrix {
        let (m, n) = (self.m, self.k + 1);
        let size = (2 * m + 1) * n;
        let f0 = m * n;
        let z0 = 2 * m * n;
        let mut out = ExactMatrix::zeros(size, size);
        let diag = self.diagonal_correction();
        for i in 0..m {
            for j in 0..m {
                let a1 = toeplitz(&self.a1[i * m + j]);
                let a3 = toeplitz(&self.a1[j * m + i]).scale(&rat(-1));
                let (ee, ff) = if i == j {
                    (&a1 + &diag, &a3 + &diag)
                } else {
                    (a1, a3)
                };
                out.set_block(i * n, j * n, &ee);
                out.set_block(f0 + i * n, f0 + j * n, &ff);
                out.set_block(i * n, f0 + j * n, &toeplitz(&self.a2[sym_index(m, i, j)]));
                out.set_block(f0 + i * n, j * n, &toeplitz(&self.a4[sym_index(m, i, j)]));
            }
        }
        for r in 0..n {
            for c in 0..z0 {
                out.set(z0 + r, c, self.strip[r * z0 + c].clone());
            }
        }
        out.set_block(z0, z0, &self.corner());
        out
    }
}

/// The family of matrices produced by the block template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivationTemplate {
    pub m: usize,
    pub k: usize,
}

impl DerivationTemplate {
    pub fn new(m: usize, k: usize) -> Self {
        Self { m, k }
    }

    pub fn parameter_count(&self) -> usize {
        parameter_count(self.m, self.k)
    }

    pub fn instantiate(&self, v: &[Rational]) -> Result<ExactMatrix> {
        Ok(TemplateParams::from_vector(self.m, self.k, v)?.instantiate())
    }

    /// Span of the instantiations of all unit parameter vectors.
    pub fn span(&self) -> EndoSubspace {
        let count = self.parameter_count();
        let size = (2 * self.m + 1) * (self.k + 1);
        let mats: Vec<ExactMatrix> = (0..count)
            .map(|i| {
                self.instantiate(&unit_vector(count, i))
                    .expect("length matches")
            })
            .collect();
        EndoSubspace::from_matrices(size, &mats).expect("square of template size")
    }
}

/// The first template constraint a matrix violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateMismatch {
    pub block: String,
    pub relation: String,
}

impl fmt::Display for TemplateMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block {}: {}", self.block, self.relation)
    }
}

impl std::error::Error for TemplateMismatch {}

fn mismatch(block: impl Into<String>, relation: &str) -> TemplateMismatch {
    TemplateMismatch {
        block: block.into(),
        relation: relation.to_string(),
    }
}

/// First column of `b` if `b` is lower-triangular Toeplitz.
fn toeplitz_generator(b: &ExactMatrix) -> Option<Vector> {
    let col = b.column(0);
    (toeplitz(&col) == *b).then_some(col)
}

/// Extracts template parameters from `mat`, or reports the first broken rule.
///
/// Constraints are tested in a fixed order: size, the zero `e`/`f`-to-`z`
/// block, Toeplitz shape, the diagonal correction, the anti-transpose tie
/// between the `e` and `f` grids, symmetry of the mixed grids, and the corner.
pub fn match_template(
    m: usize,
    k: usize,
    mat: &ExactMatrix,
) -> std::result::Result<TemplateParams, TemplateMismatch> {
    let n = k + 1;
    let size = (2 * m + 1) * n;
    if mat.rows() != size || mat.cols() != size {
        return Err(mismatch(
            "whole",
            &format!("expected a {size}×{size} matrix"),
        ));
    }
    let f0 = m * n;
    let z0 = 2 * m * n;
    if !mat.submatrix(0, z0, z0, n).is_zero() {
        return Err(mismatch("e/f rows × z columns", "must be zero"));
    }
    let block = |r0: usize, c0: usize| mat.submatrix(r0, c0, n, n);
    let name = |grid: &str, i: usize, j: usize| format!("{grid}[{}][{}]", i + 1, j + 1);
    let mut params = TemplateParams::zero(m, k);

    let gens =
        |grid: &str, r0: usize, c0: usize| -> std::result::Result<Vec<Vector>, TemplateMismatch> {
            let mut out = Vec::with_capacity(m * m);
            for i in 0..m {
                for j in 0..m {
                    let b = block(r0 + i * n, c0 + j * n);
                    let g = if i == j && (grid == "A1" || grid == "A3") {
                        // diagonal blocks carry the correction; checked below
                        b.column(0)
                    } else {
                        toeplitz_generator(&b).ok_or_else(|| {
                            mismatch(name(grid, i, j), "not lower-triangular Toeplitz")
                        })?
                    };
                    out.push(g);
                }
            }
            Ok(out)
        };
    let a1 = gens("A1", 0, 0)?;
    let a2 = gens("A2", 0, f0)?;
    let a3 = gens("A3", f0, f0)?;
    let a4 = gens("A4", f0, 0)?;

    // the diagonal blocks of the e and f grids are ±A + R(p) + R̄(q)
    let half = crate::exact_linalg::ratio(1, 2);
    let mut correction: Option<ExactMatrix> = None;
    for i in 0..m {
        let e = block(i * n, i * n);
        let f = block(f0 + i * n, f0 + i * n);
        let shared = (&e + &f).scale(&half);
        let own = (&e - &f).scale(&half);
        let g = toeplitz_generator(&own)
            .ok_or_else(|| mismatch(name("A1", i, i), "not lower-triangular Toeplitz"))?;
        params.a1[i * m + i] = g;
        match &correction {
            None => {
                let p = shared.column(0);
                let q: Vector = (1..n).map(|d| shared.get(d, 1) - &p[d - 1]).collect();
                params.p = p;
                params.q = q;
                if params.diagonal_correction() != shared {
                    return Err(mismatch(
                        name("A1", i, i),
                        "diagonal correction is not R(p) + R̄(q)",
                    ));
                }
                correction = Some(shared);
            }
            Some(c) if *c != shared => {
                return Err(mismatch(
                    name("A1", i, i),
                    "diagonal correction differs between blocks",
                ));
            }
            Some(_) => {}
        }
    }
    for i in 0..m {
        for j in 0..m {
            if i != j {
                params.a1[i * m + j] = a1[i * m + j].clone();
                if a3[i * m + j] != a1[j * m + i].iter().map(|x| -x).collect::<Vector>() {
                    return Err(mismatch(name("A3", i, j), "[A3]ij ≠ −[A1]ji"));
                }
            }
        }
    }
    for (grid, gs, slot) in [("A2", &a2, &mut params.a2), ("A4", &a4, &mut params.a4)] {
        for i in 0..m {
            for j in i..m {
                if gs[i * m + j] != gs[j * m + i] {
                    return Err(mismatch(name(grid, i, j), "grid is not symmetric"));
                }
                slot[sym_index(m, i, j)] = gs[i * m + j].clone();
            }
        }
    }
    if mat.submatrix(z0, z0, n, n) != params.corner() {
        return Err(mismatch("z × z corner", "must equal 2R(p) + R̄(q)"));
    }
    for r in 0..n {
        for c in 0..z0 {
            params.strip[r * z0 + c] = mat.get(z0 + r, c).clone();
        }
    }
    if params.instantiate() != *mat {
        return Err(mismatch("whole", "reconstruction differs"));
    }
    Ok(params)
}

/// `D ⊗ I_{k+1}` on the `e`/`f` block, zero on the `z` block.
pub fn sp_block_embedding(m: usize, k: usize, d: &ExactMatrix) -> Result<ExactMatrix> {
    if d.rows() != 2 * m || d.cols() != 2 * m || !is_symplectic(d) {
        return Err(Error::NotInSubspace {
            what: "D".to_string(),
            space: format!("sp({m})"),
        });
    }
    let n = k + 1;
    let size = (2 * m + 1) * n;
    let mut out = ExactMatrix::zeros(size, size);
    out.set_block(0, 0, &kron(d, &ExactMatrix::identity(n)));
    Ok(out)
}

/// The symplectic Levi factor of `der(h_{m,k})`, of dimension `m(2m+1)`.
pub fn levi_factor(m: usize, k: usize) -> EndoSubspace {
    let mats: Vec<ExactMatrix> = sp(m)
        .matrices()
        .iter()
        .map(|d| sp_block_embedding(m, k, d).expect("sp basis is symplectic"))
        .collect();
    EndoSubspace::from_matrices((2 * m + 1) * (k + 1), &mats).expect("square")
}

/// Levi factor of `der(h_m)`: the `sp` block with a zero `z` row and column.
pub fn derivation_levi_factor(m: usize) -> EndoSubspace {
    levi_factor(m, 0)
}

/// Radical of `der(h_m)`: the grading `a·I_{2m} ⊕ 2a` plus the free `z` row.
pub fn derivation_radical(m: usize) -> EndoSubspace {
    let n = 2 * m + 1;
    let mut grading = ExactMatrix::identity(n);
    grading.set(n - 1, n - 1, rat(2));
    let mut mats = vec![grading];
    for c in 0..2 * m {
        let mut x = ExactMatrix::zeros(n, n);
        x.set(n - 1, c, rat(1));
        mats.push(x);
    }
    EndoSubspace::from_matrices(n, &mats).expect("square")
}

/// Certifies [`levi_factor`] against the radical built from `der(h_m)`'s
/// explicit split and `A = span{1} ⊕ (t)`.
pub fn certify_levi_factor(m: usize, k: usize) -> Result<DecompositionReport> {
    let ca = truncated_heisenberg(m, k);
    let n = k + 1;
    let unit = Subspace::span(n, [unit_vector(n, 0)])?;
    let ideal = ca.assoc().jacobson_radical();
    let radical = ca.radical_subspace(
        &derivation_levi_factor(m),
        &derivation_radical(m),
        &unit,
        &ideal,
    )?;
    ca.verify_levi_decomposition(&radical, &levi_factor(m, k))
}

/// `m` if `g` is `h_m` in its standard basis.
pub fn recognize_heisenberg(g: &LieAlgebra) -> Option<usize> {
    let n = g.dim();
    if n < 3 || n.is_multiple_of(2) {
        return None;
    }
    let m = (n - 1) / 2;
    (g.structure() == LieAlgebra::heisenberg(m).structure()).then_some(m)
}
