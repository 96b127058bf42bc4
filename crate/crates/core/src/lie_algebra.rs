//! Lie algebras by structure constants, plus Lie algebras of matrices.
//!
//! Endomorphisms are always flattened row-major with the column convention
//! `T(e_c) = Σ_r T[r][c] e_r`, so `T` acts on coordinate vectors by `T · v`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_linalg::{
    axpy, dot, nullspace_of_rows, rat, unit_vector, zero_vector, EndoSubspace, ExactMatrix,
    Rational, Subspace, Vector,
};

/// Lie algebra with basis `e_0..e_{n-1}` and `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// Flattened `c[i][j][k]` at `(i * n + j) * n + k`.
    structure: Vec<Rational>,
}

impl LieAlgebra {
    /// Checks shapes only; see [`LieAlgebra::validate`] for the axioms.
    pub fn new(labels: Vec<String>, structure: Vec<Rational>) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: structure.len(),
            });
        }
        Ok(Self { labels, structure })
    }

    /// Builds from `(i, j, k, c)` meaning `[e_i, e_j] ∋ c·e_k`, filling in
    /// `[e_j, e_i]` by antisymmetry. Entries with `i == j` are rejected.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut structure = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in brackets {
            let max = *i.max(j).max(k);
            if max >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: max + 1,
                });
            }
            if i == j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket of basis element {i} with itself"
                )));
            }
            structure[(i * n + j) * n + k] = c.clone();
            structure[(j * n + i) * n + k] = -c.clone();
        }
        Self::new(labels, structure)
    }

    pub fn abelian(n: usize) -> Self {
        Self {
            labels: (0..n).map(|i| format!("x{}", i + 1)).collect(),
            structure: vec![Rational::zero(); n * n * n],
        }
    }

    /// Heisenberg algebra of dimension `2m + 1`, basis `e_1..e_m, f_1..f_m, z`
    /// with `[e_i, f_i] = z` the only nonzero brackets.
    pub fn heisenberg(m: usize) -> Self {
        let n = 2 * m + 1;
        let labels = (1..=m)
            .map(|i| format!("e{i}"))
            .chain((1..=m).map(|i| format!("f{i}")))
            .chain(std::iter::once("z".to_string()))
            .collect();
        let brackets: Vec<_> = (0..m).map(|i| (i, m + i, n - 1, rat(1))).collect();
        Self::from_brackets(labels, &brackets).expect("valid by construction")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &[Rational] {
        &self.structure
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && i != j {
                    axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Result<ExactMatrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for j in 0..n {
            for (r, v) in self.bracket(x, &unit_vector(n, j))?.into_iter().enumerate() {
                m.set(r, j, v);
            }
        }
        Ok(m)
    }

    /// Antisymmetry and the Jacobi identity on basis triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let sum: Vector = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    return Err(Error::InvalidAlgebra(format!(
                        "antisymmetry fails for basis pair ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.basis_bracket(i, j).to_vec();
                for k in j + 1..n {
                    let jk = self.basis_bracket(j, k).to_vec();
                    let ki = self.basis_bracket(k, i).to_vec();
                    let mut total = self.bracket(&ij, &unit_vector(n, k))?;
                    let a = self.bracket(&jk, &unit_vector(n, i))?;
                    let b = self.bracket(&ki, &unit_vector(n, j))?;
                    axpy(&mut total, &rat(1), &a);
                    axpy(&mut total, &rat(1), &b);
                    if total.iter().any(|c| !c.is_zero()) {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_lie_axioms(&self) -> bool {
        self.validate().is_ok()
    }

    fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[a, b]` for subspaces `a`, `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut vectors = Vec::new();
        for x in a.vectors() {
            for y in b.vectors() {
                vectors.push(self.bracket(x, y)?);
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff Σ_i x_i c[i][j][k] = 0 for all j, k
        let rows = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.coeff(i, j, k).clone()).collect())
            .collect();
        nullspace_of_rows(n, rows)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vectors = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j).to_vec());
        Subspace::span(n, vectors).expect("widths match")
    }

    /// `I, [I, I], [[I, I], [I, I]], …` until the dimension stabilises.
    pub fn derived_series_of(&self, ideal: &Subspace) -> Result<Vec<Subspace>> {
        let mut series = vec![ideal.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(last, last)?;
            if next.dim() == last.dim() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&self.full())
            .expect("ambient matches")
    }

    /// `g, [g, g], [g, [g, g]], …` until the dimension stabilises.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full();
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(&full, last).expect("ambient matches");
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Kernel of `D[e_i, e_j] − [D e_i, e_j] − [e_i, D e_j] = 0` over `i < j`.
    pub fn derivations(&self) -> EndoSubspace {
        let n = self.dim();
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut eq = zero_vector(n * n);
                    for l in 0..n {
                        let c = self.coeff(i, j, l);
                        if !c.is_zero() {
                            eq[idx(k, l)] += c;
                        }
                    }
                    for r in 0..n {
                        let c = self.coeff(r, j, k);
                        if !c.is_zero() {
                            eq[idx(r, i)] -= c;
                        }
                        let c = self.coeff(i, r, k);
                        if !c.is_zero() {
                            eq[idx(r, j)] -= c;
                        }
                    }
                    rows.push(eq);
                }
            }
        }
        EndoSubspace::from_subspace(n, nullspace_of_rows(n * n, rows)).expect("ambient is n²")
    }

    /// Endomorphisms commuting with every `ad_x`.
    pub fn centroid(&self) -> EndoSubspace {
        let n = self.dim();
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows = Vec::new();
        for x in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // T[e_x, e_j] − [e_x, T e_j], coordinate k
                    let mut eq = zero_vector(n * n);
                    for l in 0..n {
                        let c = self.coeff(x, j, l);
                        if !c.is_zero() {
                            eq[idx(k, l)] += c;
                        }
                    }
                    for r in 0..n {
                        let c = self.coeff(x, r, k);
                        if !c.is_zero() {
                            eq[idx(r, j)] -= c;
                        }
                    }
                    rows.push(eq);
                }
            }
        }
        EndoSubspace::from_subspace(n, nullspace_of_rows(n * n, rows)).expect("ambient is n²")
    }

    /// `Hom(g/[g,g], z(g))` inside `End(g)`: maps killing `[g,g]` with image in `z(g)`.
    pub fn hom_quotient_to_center(&self) -> EndoSubspace {
        let n = self.dim();
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows = Vec::new();
        for d in self.derived_subalgebra().vectors() {
            for k in 0..n {
                let mut eq = zero_vector(n * n);
                for (c, dc) in d.iter().enumerate() {
                    eq[idx(k, c)] = dc.clone();
                }
                rows.push(eq);
            }
        }
        let ann = self.center().annihilator();
        for w in ann.row_vectors() {
            for c in 0..n {
                let mut eq = zero_vector(n * n);
                for (r, wr) in w.iter().enumerate() {
                    eq[idx(r, c)] = wr.clone();
                }
                rows.push(eq);
            }
        }
        EndoSubspace::from_subspace(n, nullspace_of_rows(n * n, rows)).expect("ambient is n²")
    }

    /// Gram matrix of `κ(x, y) = tr(ad_x ad_y)` on the basis.
    pub fn killing_form(&self) -> ExactMatrix {
        let n = self.dim();
        let mut kappa = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Rational::zero();
                for a in 0..n {
                    for b in 0..n {
                        let x = self.coeff(i, b, a);
                        if x.is_zero() {
                            continue;
                        }
                        let y = self.coeff(j, a, b);
                        if !y.is_zero() {
                            acc += x * y;
                        }
                    }
                }
                kappa.set(i, j, acc.clone());
                kappa.set(j, i, acc);
            }
        }
        kappa
    }

    /// Killing-orthogonal complement of `[g, g]`; the solvable radical in
    /// characteristic zero.
    pub fn solvable_radical(&self) -> Subspace {
        let kappa = self.killing_form();
        let rows = self
            .derived_subalgebra()
            .vectors()
            .map(|d| kappa.mul_vec(d).expect("square"))
            .collect();
        nullspace_of_rows(self.dim(), rows)
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }

    pub fn is_subalgebra_closed(&self, s: &Subspace) -> Result<bool> {
        for x in s.vectors() {
            for y in s.vectors() {
                if !s.contains(&self.bracket(x, y)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let n = self.dim();
        for i in 0..n {
            let e = unit_vector(n, i);
            for y in s.vectors() {
                if !s.contains(&self.bracket(&e, y)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subalgebra on the canonical basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        let d = s.dim();
        let basis: Vec<&[Rational]> = s.vectors().collect();
        let mut structure = vec![Rational::zero(); d * d * d];
        for p in 0..d {
            for q in 0..d {
                let b = self.bracket(basis[p], basis[q])?;
                let coords = s.coordinates(&b)?.ok_or_else(|| {
                    Error::InvalidAlgebra(format!("subspace not closed: [s{p}, s{q}] escapes"))
                })?;
                for (r, c) in coords.into_iter().enumerate() {
                    structure[(p * d + q) * d + r] = c;
                }
            }
        }
        LieAlgebra::new((0..d).map(|i| format!("s{i}")).collect(), structure)
    }
}

/// A Lie algebra realised by matrices under the commutator, with a fixed
/// ordered basis.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    n: usize,
    algebra: LieAlgebra,
    matrices: Vec<ExactMatrix>,
    span: EndoSubspace,
    /// Canonical-basis coordinates to chosen-basis coordinates.
    change: ExactMatrix,
}

impl MatrixLieAlgebra {
    /// Uses the canonical basis of `space`.
    pub fn from_endo(space: &EndoSubspace) -> Result<Self> {
        Self::from_matrices(space.n(), space.matrices())
    }

    /// `basis` must be linearly independent and closed under the commutator.
    pub fn from_matrices(n: usize, basis: Vec<ExactMatrix>) -> Result<Self> {
        let span = EndoSubspace::from_matrices(n, &basis)?;
        let d = basis.len();
        if span.dim() != d {
            return Err(Error::InvalidAlgebra(
                "matrix basis is linearly dependent".to_string(),
            ));
        }
        let mut canon = ExactMatrix::zeros(d, d);
        for (i, b) in basis.iter().enumerate() {
            let coords = span.coordinates(b)?.expect("basis lies in its span");
            for (j, c) in coords.into_iter().enumerate() {
                canon.set(i, j, c);
            }
        }
        // row i of `canon` = canonical coordinates of basis[i]; so a vector with
        // canonical coordinates `u` has chosen coordinates `u · canon⁻¹`.
        let change = canon
            .inverse()
            .expect("independent basis has invertible change of basis");
        let mut structure = vec![Rational::zero(); d * d * d];
        let mut out = Self {
            n,
            algebra: LieAlgebra::new(Vec::new(), Vec::new())?,
            matrices: Vec::new(),
            span,
            change,
        };
        for p in 0..d {
            for q in p + 1..d {
                let c = basis[p].commutator(&basis[q]);
                let coords = out.coordinates(&c)?.ok_or_else(|| {
                    Error::InvalidAlgebra(format!(
                        "matrix span not closed under commutator at ({p}, {q})"
                    ))
                })?;
                for (r, v) in coords.into_iter().enumerate() {
                    structure[(q * d + p) * d + r] = -v.clone();
                    structure[(p * d + q) * d + r] = v;
                }
            }
        }
        out.algebra = LieAlgebra::new((0..d).map(|i| format!("b{i}")).collect(), structure)?;
        out.matrices = basis;
        Ok(out)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.algebra = LieAlgebra::new(labels, self.algebra.structure)?;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    pub fn span(&self) -> &EndoSubspace {
        &self.span
    }

    /// Coordinates of a matrix in the chosen basis, `None` if outside the span.
    pub fn coordinates(&self, m: &ExactMatrix) -> Result<Option<Vector>> {
        let Some(u) = self.span.coordinates(m)? else {
            return Ok(None);
        };
        let d = u.len();
        Ok(Some(
            (0..d).map(|j| dot(&u, &self.change.column(j))).collect(),
        ))
    }

    pub fn to_matrix(&self, coords: &[Rational]) -> Result<ExactMatrix> {
        if coords.len() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                found: coords.len(),
            });
        }
        let mut out = ExactMatrix::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        Ok(out)
    }

    /// Matrices spanning the image of a coordinate subspace.
    pub fn realize(&self, s: &Subspace) -> Result<EndoSubspace> {
        let mats = s
            .vectors()
            .map(|v| self.to_matrix(v))
            .collect::<Result<Vec<_>>>()?;
        EndoSubspace::from_matrices(self.n, &mats)
    }
}

/// Span of all commutators `[x, y]` with `x ∈ a`, `y ∈ b`.
pub fn commutator_span(a: &EndoSubspace, b: &EndoSubspace) -> Result<EndoSubspace> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let bm = b.matrices();
    let mut comms = Vec::new();
    for x in a.matrices() {
        for y in &bm {
            comms.push(x.commutator(y));
        }
    }
    EndoSubspace::from_matrices(a.n(), &comms)
}

/// Derived series of a matrix Lie algebra, stopping when the dimension stabilises.
pub fn matrix_derived_series(a: &EndoSubspace) -> Result<Vec<EndoSubspace>> {
    let mut series = vec![a.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_span(last, last)?;
        if next.dim() == last.dim() {
            return Ok(series);
        }
        series.push(next);
    }
}

/// `[outer, inner] ⊆ inner`.
pub fn is_matrix_ideal(outer: &EndoSubspace, inner: &EndoSubspace) -> Result<bool> {
    let im = inner.matrices();
    for x in outer.matrices() {
        for y in &im {
            if !inner.contains(&x.commutator(y))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks `D[x, y] = [Dx, y] + [x, Dy]` on all basis pairs.
pub fn is_derivation(g: &LieAlgebra, d: &ExactMatrix) -> Result<bool> {
    let n = g.dim();
    for i in 0..n {
        let di = d.column(i);
        for j in i + 1..n {
            let dj = d.column(j);
            let lhs = d.mul_vec(g.basis_bracket(i, j))?;
            let mut rhs = g.bracket(&di, &unit_vector(n, j))?;
            axpy(&mut rhs, &rat(1), &g.bracket(&unit_vector(n, i), &dj)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sp_{2m}` as `2m × 2m` matrices `[[X1, X2], [X3, −X1ᵗ]]` with `X2`, `X3` symmetric.
///
/// Basis order: the `X1 = E_ij` family (row-major), then `X2` for `i ≤ j`, then `X3`.
pub fn sp(m: usize) -> MatrixLieAlgebra {
    let n = 2 * m;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut x = ExactMatrix::zeros(n, n);
            x.set(i, j, rat(1));
            x.set(m + j, m + i, rat(-1));
            basis.push(x);
            labels.push(format!("h{}{}", i + 1, j + 1));
        }
    }
    for (offset, name) in [((0, m), "p"), ((m, 0), "q")] {
        for i in 0..m {
            for j in i..m {
                let mut x = ExactMatrix::zeros(n, n);
                x.set(offset.0 + i, offset.1 + j, rat(1));
                x.set(offset.0 + j, offset.1 + i, rat(1));
                basis.push(x);
                labels.push(format!("{name}{}{}", i + 1, j + 1));
            }
        }
    }
    MatrixLieAlgebra::from_matrices(n, basis)
        .and_then(|a| a.with_labels(labels))
        .expect("sp(m) is closed under commutator")
}

/// `Dᵗ Ω + Ω D = 0` with `Ω = [[0, I], [−I, 0]]`.
pub fn is_symplectic(d: &ExactMatrix) -> bool {
    if !d.is_square() || !d.rows().is_multiple_of(2) {
        return false;
    }
    let m = d.rows() / 2;
    let mut omega = ExactMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        omega.set(i, m + i, rat(1));
        omega.set(m + i, i, rat(-1));
    }
    (&(&d.transpose() * &omega) + &(&omega * d)).is_zero()
}
