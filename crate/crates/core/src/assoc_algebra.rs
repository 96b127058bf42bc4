//! Finite-dimensional commutative associative unital algebras given by
//! structure constants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{
    axpy, is_zero_vector, nullspace, nullspace_of_rows, rat, unit_vector, zero_vector,
    EndoSubspace, ExactMatrix, Rational, Subspace, Vector,
};

/// Algebra with basis `a_0..a_{n-1}` and `a_i · a_j = Σ_k c[i][j][k] a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    labels: Vec<String>,
    /// Flattened `c[i][j][k]` at `(i * n + j) * n + k`.
    structure: Vec<Rational>,
    unit: Vector,
}

impl AssocAlgebra {
    /// Checks shapes only; see [`AssocAlgebra::validate`] for the axioms.
    pub fn new(labels: Vec<String>, structure: Vec<Rational>, unit: Vector) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: structure.len(),
            });
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: unit.len(),
            });
        }
        Ok(Self {
            labels,
            structure,
            unit,
        })
    }

    /// Builds from sparse `(i, j, k, c)` entries; every ordered pair must be listed.
    pub fn from_products(
        labels: Vec<String>,
        products: &[(usize, usize, usize, Rational)],
        unit: Vector,
    ) -> Result<Self> {
        let n = labels.len();
        let mut structure = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in products {
            let max = *i.max(j).max(k);
            if max >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: max + 1,
                });
            }
            structure[(i * n + j) * n + k] = c.clone();
        }
        Self::new(labels, structure, unit)
    }

    /// `C[t]/(t^{k+1})` with basis `1, t, …, t^k`.
    pub fn truncated_polynomial(k: usize) -> Self {
        let n = k + 1;
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        let mut structure = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n - i {
                structure[(i * n + j) * n + i + j] = Rational::one();
            }
        }
        Self {
            labels,
            structure,
            unit: unit_vector(n, 0),
        }
    }

    /// The one-dimensional algebra.
    pub fn field() -> Self {
        Self::truncated_polynomial(0)
    }

    /// `A ⊕ B` with block-diagonal structure constants and unit `(1, 1)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (p, q) = (self.dim(), other.dim());
        let n = p + q;
        let mut structure = vec![Rational::zero(); n * n * n];
        for i in 0..p {
            for j in 0..p {
                for k in 0..p {
                    structure[(i * n + j) * n + k] = self.coeff(i, j, k).clone();
                }
            }
        }
        for i in 0..q {
            for j in 0..q {
                for k in 0..q {
                    structure[((p + i) * n + p + j) * n + p + k] = other.coeff(i, j, k).clone();
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}₁"))
            .chain(other.labels.iter().map(|l| format!("{l}₂")))
            .collect();
        let unit = self.unit.iter().chain(&other.unit).cloned().collect();
        Self {
            labels,
            structure,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn structure(&self) -> &[Rational] {
        &self.structure
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// Coordinates of `a_i · a_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
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

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), self.basis_product(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `b ↦ x·b`; column `j` holds `x · a_j`.
    pub fn left_mult(&self, x: &[Rational]) -> Result<ExactMatrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.multiply(x, &unit_vector(n, j))?;
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, j, v);
            }
        }
        Ok(m)
    }

    pub fn power(&self, x: &[Rational], e: usize) -> Result<Vector> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// `x` is nilpotent iff `x^n = 0` with `n = dim A`.
    pub fn is_nilpotent_element(&self, x: &[Rational]) -> Result<bool> {
        Ok(is_zero_vector(&self.power(x, self.dim().max(1))?))
    }

    /// Commutativity, associativity and the unit law, reporting the first failure.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let fail = |msg: String| Err(Error::InvalidAlgebra(msg));
        for i in 0..n {
            for j in i + 1..n {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return fail(format!("commutativity fails for basis pair ({i}, {j})"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for l in 0..n {
                    let left = self.multiply(&ij, &unit_vector(n, l))?;
                    let jl = self.basis_product(j, l).to_vec();
                    let right = self.multiply(&unit_vector(n, i), &jl)?;
                    if left != right {
                        return fail(format!("associativity fails for ({i}, {j}, {l})"));
                    }
                }
            }
        }
        for j in 0..n {
            if self.multiply(&self.unit, &unit_vector(n, j))? != unit_vector(n, j) {
                return fail(format!("unit law fails on basis element {j}"));
            }
        }
        Ok(())
    }

    pub fn check_axioms(&self) -> bool {
        self.validate().is_ok()
    }

    /// Trace of left multiplication by each basis element.
    fn basis_traces(&self) -> Vector {
        let n = self.dim();
        (0..n)
            .map(|l| (0..n).fold(Rational::zero(), |acc, m| acc + self.coeff(l, m, m)))
            .collect()
    }

    /// The radical of the trace form `(a, b) ↦ tr(L_{ab})`, which in
    /// characteristic zero is the Jacobson radical.
    pub fn jacobson_radical(&self) -> Subspace {
        let n = self.dim();
        let tau = self.basis_traces();
        let form = ExactMatrix::from_rows(
            n,
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| {
                            self.basis_product(i, j)
                                .iter()
                                .zip(&tau)
                                .fold(Rational::zero(), |acc, (c, t)| acc + c * t)
                        })
                        .collect()
                })
                .collect(),
        )
        .expect("square");
        nullspace(&form)
    }

    /// Kernel of the Leibniz system `D(a_i a_j) = D(a_i) a_j + a_i D(a_j)`, `i ≤ j`.
    ///
    /// An endomorphism `D` is flattened row-major, `D(a_c) = Σ_r D[r][c] a_r`.
    pub fn derivations(&self) -> EndoSubspace {
        let n = self.dim();
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i..n {
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

    /// Lifts of the primitive idempotents of `A/J`, which must be a product of
    /// copies of the base field. They are pairwise orthogonal and sum to 1.
    pub fn lifted_idempotents(&self) -> Result<Vec<Vector>> {
        let radical = self.jacobson_radical();
        let quotient = Quotient::new(self, &radical)?;
        let primitive = quotient.primitive_idempotents()?;
        primitive
            .iter()
            .map(|e| self.lift_idempotent(quotient.lift(e)))
            .collect()
    }

    /// `e ← 3e² − 2e³` until `e² = e`. Terminates because the error term moves
    /// into ever higher powers of the nilpotent radical.
    fn lift_idempotent(&self, mut e: Vector) -> Result<Vector> {
        for _ in 0..=2 * self.dim() + 2 {
            let e2 = self.multiply(&e, &e)?;
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.multiply(&e2, &e)?;
            e = e2
                .iter()
                .zip(&e3)
                .map(|(a, b)| rat(3) * a - rat(2) * b)
                .collect();
        }
        Err(Error::NonSplitQuotient(
            "idempotent lifting did not stabilise".to_string(),
        ))
    }

    /// A subalgebra `S` with `A = S ⊕ J` spanned by the lifted idempotents.
    pub fn wedderburn_complement(&self) -> Result<Subspace> {
        Subspace::span(self.dim(), self.lifted_idempotents()?)
    }
}

/// `A/J` realised on the non-pivot coordinates of the canonical basis of `J`.
struct Quotient<'a> {
    algebra: &'a AssocAlgebra,
    radical: &'a Subspace,
    reps: Vec<usize>,
}

impl<'a> Quotient<'a> {
    fn new(algebra: &'a AssocAlgebra, radical: &'a Subspace) -> Result<Self> {
        let n = algebra.dim();
        let reps = (0..n).filter(|c| !radical.pivots().contains(c)).collect();
        Ok(Self {
            algebra,
            radical,
            reps,
        })
    }

    fn dim(&self) -> usize {
        self.reps.len()
    }

    fn project(&self, v: &[Rational]) -> Result<Vector> {
        let w = self.radical.reduce(v)?;
        Ok(self.reps.iter().map(|&c| w[c].clone()).collect())
    }

    fn lift(&self, v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.algebra.dim());
        for (x, &c) in v.iter().zip(&self.reps) {
            out[c] = x.clone();
        }
        out
    }

    fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.project(&self.algebra.multiply(&self.lift(x), &self.lift(y))?)
    }

    fn unit(&self) -> Result<Vector> {
        self.project(self.algebra.unit())
    }

    /// Splits the unit along the eigenspaces of each basis element in turn.
    fn primitive_idempotents(&self) -> Result<Vec<Vector>> {
        let r = self.dim();
        let mut idems = vec![self.unit()?];
        for b in 0..r {
            let basis_elem = unit_vector(r, b);
            let mut next = Vec::new();
            for e in &idems {
                let y = self.multiply(&basis_elem, e)?;
                next.extend(self.split(e, &y)?);
            }
            idems = next;
        }
        if idems.len() != r {
            return Err(Error::NonSplitQuotient(format!(
                "found {} primitive idempotents for a quotient of dimension {r}",
                idems.len()
            )));
        }
        Ok(idems)
    }

    /// Splits `e` using the minimal polynomial of `y` in the unital algebra `eB`.
    fn split(&self, e: &[Rational], y: &[Rational]) -> Result<Vec<Vector>> {
        let min_poly = self.minimal_polynomial(e, y)?;
        if min_poly.len() == 2 {
            return Ok(vec![e.to_vec()]);
        }
        let roots = rational_roots(&min_poly);
        let degree = min_poly.len() - 1;
        if roots.len() != degree {
            return Err(Error::NonSplitQuotient(format!(
                "minimal polynomial of degree {degree} has only {} rational roots",
                roots.len()
            )));
        }
        let mut out = Vec::with_capacity(degree);
        for (i, li) in roots.iter().enumerate() {
            let mut acc = e.to_vec();
            for (j, lj) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = (li - lj).recip();
                let factor: Vector = y
                    .iter()
                    .zip(e)
                    .map(|(yv, ev)| (yv - lj * ev) * &denom)
                    .collect();
                acc = self.multiply(&acc, &factor)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Monic minimal polynomial coefficients, constant term first.
    fn minimal_polynomial(&self, e: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.multiply(powers.last().expect("nonempty"), y)?;
            powers.push(next);
            let d = powers.len();
            let columns = ExactMatrix::from_rows(self.dim(), powers.clone())?.transpose();
            let kernel = nullspace(&columns);
            if let Some(v) = kernel.vectors().next() {
                let lead = v[d - 1].clone();
                debug_assert!(!lead.is_zero());
                return Ok(v.iter().map(|c| c / &lead).collect());
            }
            if d > self.dim() + 1 {
                return Err(Error::NonSplitQuotient(
                    "minimal polynomial search overran the dimension".to_string(),
                ));
            }
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots of a polynomial (constant term first), by the
/// rational root theorem.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut roots = Vec::new();
    while ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
        if roots.is_empty() {
            roots.push(Rational::zero());
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let constant = ints[0].clone();
    let leading = ints.last().expect("nonempty").clone();
    let poly: Vec<Rational> = ints.iter().cloned().map(Rational::from_integer).collect();
    for p in divisors(&constant) {
        for q in divisors(&leading) {
            for sign in [1, -1] {
                let cand = Rational::new(&p * sign, q.clone());
                if !roots.contains(&cand) && eval_poly(&poly, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn check_truncated_len(k: usize, v: &[Rational]) -> Result<()> {
    if v.len() != k + 1 {
        return Err(Error::DimensionMismatch {
            expected: k + 1,
            found: v.len(),
        });
    }
    Ok(())
}

/// Regular representation of `p ∈ C[t]/(t^{k+1})` in the monomial basis:
/// the lower-triangular Toeplitz matrix with first column `p`.
pub fn regular_rep(k: usize, p: &[Rational]) -> Result<ExactMatrix> {
    check_truncated_len(k, p)?;
    let n = k + 1;
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            m.set(i, j, p[i - j].clone());
        }
    }
    Ok(m)
}

/// The auxiliary map `R̄(q)`: entry `(i, j) = j · q_{i−j+1}` for `1 ≤ j ≤ i`.
/// The constant term of `q` is ignored.
pub fn rbar(k: usize, q: &[Rational]) -> Result<ExactMatrix> {
    check_truncated_len(k, q)?;
    let n = k + 1;
    let mut m = ExactMatrix::zeros(n, n);
    for i in 1..n {
        for j in 1..=i {
            m.set(i, j, rat(j as i64) * &q[i - j + 1]);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{int_vector, ratio};

    fn t(k: usize, i: usize) -> Vector {
        unit_vector(k + 1, i)
    }

    #[test]
    fn truncated_products() {
        let a1 = AssocAlgebra::truncated_polynomial(1);
        assert_eq!(a1.multiply(&t(1, 1), &t(1, 1)).unwrap(), zero_vector(2));
        let a2 = AssocAlgebra::truncated_polynomial(2);
        assert_eq!(a2.multiply(&t(2, 0), &t(2, 1)).unwrap(), t(2, 1));
        assert_eq!(a2.multiply(&t(2, 1), &t(2, 1)).unwrap(), t(2, 2));
        assert_eq!(a2.multiply(&t(2, 1), &t(2, 2)).unwrap(), zero_vector(3));
        let a3 = AssocAlgebra::truncated_polynomial(3);
        assert_eq!(a3.multiply(&t(3, 2), &t(3, 2)).unwrap(), zero_vector(4));
        assert_eq!(AssocAlgebra::field().dim(), 1);
        assert!(a2.multiply(&t(1, 0), &t(2, 0)).is_err());
    }

    #[test]
    fn axioms() {
        for k in 1..=3 {
            assert!(AssocAlgebra::truncated_polynomial(k).check_axioms());
        }
        let sum = AssocAlgebra::truncated_polynomial(1)
            .direct_sum(&AssocAlgebra::truncated_polynomial(2));
        assert!(sum.check_axioms());

        let mut broken = AssocAlgebra::truncated_polynomial(1);
        let n = 2;
        broken.structure[n] = rat(1); // c[0][1][0] = 1 but c[1][0][0] = 0
        assert!(!broken.check_axioms());
    }

    #[test]
    fn field_sum_has_orthogonal_idempotents() {
        let f2 = AssocAlgebra::field().direct_sum(&AssocAlgebra::field());
        assert_eq!(f2.dim(), 2);
        let e1 = t(1, 0);
        let e2 = t(1, 1);
        assert_eq!(f2.multiply(&e1, &e1).unwrap(), e1);
        assert_eq!(f2.multiply(&e2, &e2).unwrap(), e2);
        assert_eq!(f2.multiply(&e1, &e2).unwrap(), zero_vector(2));
        assert_eq!(f2.wedderburn_complement().unwrap(), Subspace::full(2));
    }

    #[test]
    fn radicals() {
        for k in 0..=4 {
            let a = AssocAlgebra::truncated_polynomial(k);
            let expected = Subspace::span(k + 1, (1..=k).map(|i| t(k, i))).unwrap();
            assert_eq!(a.jacobson_radical(), expected);
        }
        let sum = AssocAlgebra::truncated_polynomial(1)
            .direct_sum(&AssocAlgebra::truncated_polynomial(2));
        assert_eq!(sum.jacobson_radical().dim(), 3);
    }

    #[test]
    fn derivation_dimensions() {
        assert_eq!(AssocAlgebra::field().derivations().dim(), 0);
        for k in 1..=4 {
            assert_eq!(AssocAlgebra::truncated_polynomial(k).derivations().dim(), k);
        }
        let sum = AssocAlgebra::truncated_polynomial(1)
            .direct_sum(&AssocAlgebra::truncated_polynomial(2));
        assert_eq!(sum.derivations().dim(), 3);
    }

    #[test]
    fn complements() {
        let a = AssocAlgebra::truncated_polynomial(3);
        assert_eq!(
            a.wedderburn_complement().unwrap(),
            Subspace::span(4, [t(3, 0)]).unwrap()
        );
        assert_eq!(
            AssocAlgebra::field().wedderburn_complement().unwrap(),
            Subspace::full(1)
        );

        let sum = AssocAlgebra::truncated_polynomial(1)
            .direct_sum(&AssocAlgebra::truncated_polynomial(2));
        let idems = sum.lifted_idempotents().unwrap();
        assert_eq!(idems.len(), 2);
        let mut total = zero_vector(sum.dim());
        for (i, e) in idems.iter().enumerate() {
            assert_eq!(&sum.multiply(e, e).unwrap(), e);
            for f in &idems[i + 1..] {
                assert!(is_zero_vector(&sum.multiply(e, f).unwrap()));
            }
            axpy(&mut total, &rat(1), e);
        }
        assert_eq!(total, sum.unit().to_vec());
        let s = sum.wedderburn_complement().unwrap();
        let j = sum.jacobson_radical();
        assert_eq!(s.dim() + j.dim(), sum.dim());
        assert!(s.intersection(&j).unwrap().is_zero());
    }

    #[test]
    fn complement_in_a_nonstandard_basis() {
        // Q × Q presented with basis {1, x} where x = (1, -1), so x² = 1.
        let labels = vec!["1".to_string(), "x".to_string()];
        let products = vec![
            (0, 0, 0, rat(1)),
            (0, 1, 1, rat(1)),
            (1, 0, 1, rat(1)),
            (1, 1, 0, rat(1)),
        ];
        let a = AssocAlgebra::from_products(labels, &products, int_vector(&[1, 0])).unwrap();
        assert!(a.check_axioms());
        let idems = a.lifted_idempotents().unwrap();
        assert_eq!(idems.len(), 2);
        assert!(idems.contains(&vec![ratio(1, 2), ratio(-1, 2)]));
        assert!(idems.contains(&vec![ratio(1, 2), ratio(1, 2)]));
    }

    #[test]
    fn field_extension_is_rejected() {
        // Q(√2) with basis {1, s}, s² = 2.
        let labels = vec!["1".to_string(), "s".to_string()];
        let products = vec![
            (0, 0, 0, rat(1)),
            (0, 1, 1, rat(1)),
            (1, 0, 1, rat(1)),
            (1, 1, 0, rat(2)),
        ];
        let a = AssocAlgebra::from_products(labels, &products, int_vector(&[1, 0])).unwrap();
        assert!(a.check_axioms());
        assert!(a.jacobson_radical().is_zero());
        assert!(matches!(
            a.wedderburn_complement(),
            Err(Error::NonSplitQuotient(_))
        ));
    }

    #[test]
    fn regular_rep_displays() {
        assert_eq!(regular_rep(3, &t(3, 0)).unwrap(), ExactMatrix::identity(4));
        assert_eq!(
            regular_rep(1, &int_vector(&[1, 2])).unwrap(),
            ExactMatrix::from_ints(&[[1, 0], [2, 1]])
        );
        assert!(regular_rep(2, &int_vector(&[1, 2])).is_err());
    }

    #[test]
    fn rbar_displays() {
        assert_eq!(
            rbar(1, &t(1, 1)).unwrap(),
            ExactMatrix::from_ints(&[[0, 0], [0, 1]])
        );
        assert_eq!(
            rbar(2, &t(2, 1)).unwrap(),
            ExactMatrix::from_ints(&[[0, 0, 0], [0, 1, 0], [0, 0, 2]])
        );
        // the constant term plays no role
        assert_eq!(
            rbar(2, &int_vector(&[7, 1, 0])).unwrap(),
            rbar(2, &t(2, 1)).unwrap()
        );
    }

    #[test]
    fn rational_root_finder() {
        // (x - 1/2)(x + 3) x = x³ + 5/2 x² - 3/2 x
        let roots = rational_roots(&[rat(0), ratio(-3, 2), ratio(5, 2), rat(1)]);
        assert_eq!(roots, vec![rat(-3), rat(0), ratio(1, 2)]);
        assert!(rational_roots(&[rat(-2), rat(0), rat(1)]).is_empty());
    }
}
