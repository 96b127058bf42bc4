//! Current Lie algebras `g ⊗ A` and the structure of their derivation algebras.
//!
//! Basis order is generator-major: `x_0⊗a_0, x_0⊗a_1, …, x_1⊗a_0, …`, so the
//! flat index of `x_i ⊗ a_p` is `i · dim A + p` and an endomorphism of the form
//! `T ⊗ φ` has matrix `kron(T, φ)`.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::assoc_algebra::AssocAlgebra;
use crate::error::{Error, Result};
use crate::exact_linalg::{
    kron, rat, unit_vector, EndoSubspace, ExactMatrix, Rational, Subspace, Vector,
};
use crate::heisenberg;
use crate::lie_algebra::{
    commutator_span, is_matrix_ideal, matrix_derived_series, LieAlgebra, MatrixLieAlgebra,
};

/// `g ⊗ A` with bracket `[x⊗a, y⊗b] = [x, y] ⊗ ab`.
#[derive(Debug)]
pub struct CurrentAlgebra {
    lie: LieAlgebra,
    assoc: AssocAlgebra,
    product: LieAlgebra,
    der_g: EndoSubspace,
    centroid: EndoSubspace,
    hom: EndoSubspace,
    der_a: EndoSubspace,
    derivations: OnceLock<EndoSubspace>,
}

pub fn current_algebra(g: &LieAlgebra, a: &AssocAlgebra) -> Result<CurrentAlgebra> {
    CurrentAlgebra::new(g.clone(), a.clone())
}

impl CurrentAlgebra {
    pub fn new(lie: LieAlgebra, assoc: AssocAlgebra) -> Result<Self> {
        lie.validate()?;
        assoc.validate()?;
        let (n, p) = (lie.dim(), assoc.dim());
        let dim = n * p;
        let mut structure = vec![rat(0); dim * dim * dim];
        for i in 0..n {
            for j in 0..n {
                for (k, gc) in lie.basis_bracket(i, j).iter().enumerate() {
                    if num_traits::Zero::is_zero(gc) {
                        continue;
                    }
                    for a in 0..p {
                        for b in 0..p {
                            for (r, ac) in assoc.basis_product(a, b).iter().enumerate() {
                                if !num_traits::Zero::is_zero(ac) {
                                    let (x, y, z) = (i * p + a, j * p + b, k * p + r);
                                    structure[(x * dim + y) * dim + z] += gc * ac;
                                }
                            }
                        }
                    }
                }
            }
        }
        let labels = lie
            .labels()
            .iter()
            .flat_map(|x| assoc.labels().iter().map(move |a| format!("{x}⊗{a}")))
            .collect();
        let product = LieAlgebra::new(labels, structure)?;
        Ok(Self {
            der_g: lie.derivations(),
            centroid: lie.centroid(),
            hom: lie.hom_quotient_to_center(),
            der_a: assoc.derivations(),
            lie,
            assoc,
            product,
            derivations: OnceLock::new(),
        })
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn assoc(&self) -> &AssocAlgebra {
        &self.assoc
    }

    pub fn product(&self) -> &LieAlgebra {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    /// Flat index of `x_i ⊗ a_p`.
    pub fn index(&self, i: usize, p: usize) -> usize {
        i * self.assoc.dim() + p
    }

    /// Inverse of [`CurrentAlgebra::index`].
    pub fn basis_pair(&self, flat: usize) -> (usize, usize) {
        (flat / self.assoc.dim(), flat % self.assoc.dim())
    }

    pub fn der_g(&self) -> &EndoSubspace {
        &self.der_g
    }

    pub fn centroid_g(&self) -> &EndoSubspace {
        &self.centroid
    }

    pub fn hom_g(&self) -> &EndoSubspace {
        &self.hom
    }

    pub fn der_a(&self) -> &EndoSubspace {
        &self.der_a
    }

    /// `der(g ⊗ A)` from the raw Leibniz system of the product. Computed once.
    pub fn derivations(&self) -> &EndoSubspace {
        self.derivations.get_or_init(|| self.product.derivations())
    }

    fn require(space: &EndoSubspace, m: &ExactMatrix, what: &str, name: &str) -> Result<()> {
        if !space.contains(m)? {
            return Err(Error::NotInSubspace {
                what: what.to_string(),
                space: name.to_string(),
            });
        }
        Ok(())
    }

    /// `x⊗b ↦ D(x) ⊗ ab` for `D ∈ der(g)`.
    pub fn embed_h(&self, d: &ExactMatrix, a: &[Rational]) -> Result<ExactMatrix> {
        Self::require(&self.der_g, d, "D", "der(g)")?;
        Ok(kron(d, &self.assoc.left_mult(a)?))
    }

    /// `x⊗b ↦ T(x) ⊗ ρ(b)` for `T` in the centroid and `ρ ∈ der(A)`.
    pub fn embed_w(&self, t: &ExactMatrix, rho: &ExactMatrix) -> Result<ExactMatrix> {
        Self::require(&self.centroid, t, "T", "Hom_g(g,g)")?;
        Self::require(&self.der_a, rho, "ρ", "der(A)")?;
        Ok(kron(t, rho))
    }

    /// `x⊗b ↦ T(x) ⊗ f(b)` for `T ∈ Hom(g/[g,g], z(g))` and any `f ∈ End(A)`.
    pub fn embed_k(&self, t: &ExactMatrix, f: &ExactMatrix) -> Result<ExactMatrix> {
        Self::require(&self.hom, t, "T", "Hom(g/[g,g], z(g))")?;
        let p = self.assoc.dim();
        if f.rows() != p || f.cols() != p {
            return Err(Error::DimensionMismatch {
                expected: p,
                found: f.rows().max(f.cols()),
            });
        }
        Ok(kron(t, f))
    }

    fn algebra_basis(&self) -> Vec<Vector> {
        let p = self.assoc.dim();
        (0..p).map(|i| unit_vector(p, i)).collect()
    }

    fn end_a_basis(&self) -> Vec<ExactMatrix> {
        let p = self.assoc.dim();
        (0..p * p)
            .map(|i| {
                let mut e = ExactMatrix::zeros(p, p);
                e.set(i / p, i % p, rat(1));
                e
            })
            .collect()
    }

    fn span_of(&self, mats: Vec<ExactMatrix>) -> EndoSubspace {
        EndoSubspace::from_matrices(self.dim(), &mats)
            .expect("embedded maps are square of size dim")
    }

    /// `der(g) ⊗ A`.
    pub fn summand_h(&self) -> EndoSubspace {
        let mut mats = Vec::new();
        for d in self.der_g.matrices() {
            for a in self.algebra_basis() {
                mats.push(self.embed_h(&d, &a).expect("basis member"));
            }
        }
        self.span_of(mats)
    }

    /// `Hom_g(g, g) ⊗ der(A)`.
    pub fn summand_w(&self) -> EndoSubspace {
        let rhos = self.der_a.matrices();
        let mut mats = Vec::new();
        for t in self.centroid.matrices() {
            for rho in &rhos {
                mats.push(self.embed_w(&t, rho).expect("basis member"));
            }
        }
        self.span_of(mats)
    }

    /// `Hom(g/[g,g], z(g)) ⊗ End(A)`.
    pub fn summand_k(&self) -> EndoSubspace {
        let fs = self.end_a_basis();
        let mut mats = Vec::new();
        for t in self.hom.matrices() {
            for f in &fs {
                mats.push(self.embed_k(&t, f).expect("basis member"));
            }
        }
        self.span_of(mats)
    }

    /// The three summands and whether they sum to the raw derivation algebra.
    pub fn summand_span(&self) -> Result<DecompositionReport> {
        let der_full = self.derivations().clone();
        let summand_h = self.summand_h();
        let summand_w = self.summand_w();
        let summand_k = self.summand_k();
        let total = summand_h.sum(&summand_w)?.sum(&summand_k)?;
        let flags = DecompositionFlags {
            span_equals_der: Some(total == der_full),
            k_is_ideal: Some(is_matrix_ideal(&der_full, &summand_k)?),
            ..Default::default()
        };
        Ok(DecompositionReport {
            der_full,
            summand_h,
            summand_w,
            summand_k,
            radical_candidate: None,
            levi_candidate: None,
            flags,
        })
    }

    /// Checks every bracket rule between the summands. Basis pairs are
    /// exhausted when `dim(g ⊗ A) ≤ 8`; otherwise `samples` seeded random pure
    /// tensors are drawn per rule.
    pub fn verify_bracket_table(&self, samples: usize, seed: u64) -> Result<TableReport> {
        TableChecker::new(self)?.run(samples, seed)
    }

    /// Candidate solvable radical of `der(g ⊗ A)`:
    /// `s⊗J + r⊗A + Hom_g(g,g)⊗der(A) + Hom(g/[g,g], z(g))⊗End(A)`.
    pub fn radical_subspace(
        &self,
        s: &EndoSubspace,
        r: &EndoSubspace,
        semisimple: &Subspace,
        radical_a: &Subspace,
    ) -> Result<EndoSubspace> {
        self.check_hypotheses(s, r, semisimple, radical_a)?;
        let mut mats = Vec::new();
        for d in s.matrices() {
            for j in radical_a.vectors() {
                mats.push(self.embed_h(&d, j)?);
            }
        }
        for d in r.matrices() {
            for a in self.algebra_basis() {
                mats.push(self.embed_h(&d, &a)?);
            }
        }
        let base = self.span_of(mats);
        base.sum(&self.summand_w())?.sum(&self.summand_k())
    }

    /// `s ⊗ S`.
    pub fn levi_candidate(&self, s: &EndoSubspace, semisimple: &Subspace) -> Result<EndoSubspace> {
        let mut mats = Vec::new();
        for d in s.matrices() {
            for sigma in semisimple.vectors() {
                mats.push(self.embed_h(&d, sigma)?);
            }
        }
        Ok(self.span_of(mats))
    }

    fn check_hypotheses(
        &self,
        s: &EndoSubspace,
        r: &EndoSubspace,
        semisimple: &Subspace,
        radical_a: &Subspace,
    ) -> Result<()> {
        let n = self.lie.dim();
        if s.n() != n || r.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if s.n() != n { s.n() } else { r.n() },
            });
        }
        if !s.intersection(r)?.space().is_zero() || s.sum(r)? != self.der_g {
            return Err(Error::Hypothesis("s ⊕ r = der(g) fails".to_string()));
        }
        if !semisimple.intersection(radical_a)?.is_zero() || !semisimple.sum(radical_a)?.is_full() {
            return Err(Error::Hypothesis("S ⊕ J = A fails".to_string()));
        }
        let der_a_series = matrix_derived_series(&self.der_a)?;
        if !der_a_series.last().expect("nonempty").space().is_zero() {
            return Err(Error::Hypothesis("der(A) is not solvable".to_string()));
        }
        if !self
            .lie
            .center()
            .is_subspace_of(&self.lie.derived_subalgebra())?
        {
            return Err(Error::Hypothesis("z(g) ⊆ [g,g] fails".to_string()));
        }
        Ok(())
    }

    /// Re-checks a proposed radical and Levi factor against the raw derivation
    /// algebra. Every verdict is carried in the flags.
    pub fn verify_levi_decomposition(
        &self,
        radical: &EndoSubspace,
        levi: &EndoSubspace,
    ) -> Result<DecompositionReport> {
        let mut report = self.summand_span()?;
        let der = &report.der_full;
        let inside = radical.is_subspace_of(der)?;
        let radical_is_ideal = inside && is_matrix_ideal(der, radical)?;
        let radical_solvable = matrix_derived_series(radical)?
            .last()
            .expect("nonempty")
            .space()
            .is_zero();
        let levi_semisimple = levi.is_subspace_of(der)?
            && match MatrixLieAlgebra::from_endo(levi) {
                Ok(alg) => alg.algebra().is_semisimple(),
                Err(_) => false,
            };
        let direct_complement =
            radical.intersection(levi)?.space().is_zero() && &radical.sum(levi)? == der;
        report.flags.radical_is_ideal = Some(radical_is_ideal);
        report.flags.radical_solvable = Some(radical_solvable);
        report.flags.levi_semisimple = Some(levi_semisimple);
        report.flags.direct_complement = Some(direct_complement);
        report.radical_candidate = Some(radical.clone());
        report.levi_candidate = Some(levi.clone());
        Ok(report)
    }

    /// Full pipeline from a Levi factor `s` of `der(g)`: the radical of
    /// `der(g)` by Cartan's criterion, the Wedderburn–Malcev split of `A`, the
    /// radical candidate and `s ⊗ S`, then certification.
    pub fn levi_decomposition(&self, s: &EndoSubspace) -> Result<DecompositionReport> {
        let der_g = MatrixLieAlgebra::from_endo(&self.der_g)?;
        let r = der_g.realize(&der_g.algebra().solvable_radical())?;
        let semisimple = self.assoc.wedderburn_complement()?;
        let radical_a = self.assoc.jacobson_radical();
        let radical = self.radical_subspace(s, &r, &semisimple, &radical_a)?;
        let levi = self.levi_candidate(s, &semisimple)?;
        self.verify_levi_decomposition(&radical, &levi)
    }
}

/// A constructive Levi factor of `der(g)` where one is known: zero when
/// `der(g)` is solvable, all of it when semisimple, and the symplectic block
/// when `g` is a Heisenberg algebra in its standard basis.
pub fn known_levi_factor(g: &LieAlgebra) -> Option<EndoSubspace> {
    let n = g.dim();
    let der = g.derivations();
    let alg = MatrixLieAlgebra::from_endo(&der).ok()?;
    if alg.algebra().is_solvable() {
        return Some(EndoSubspace::zero(n));
    }
    if alg.algebra().is_semisimple() {
        return Some(der);
    }
    heisenberg::recognize_heisenberg(g).map(heisenberg::derivation_levi_factor)
}

/// Named pass/fail verdicts; `None` means not evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFlags {
    pub span_equals_der: Option<bool>,
    pub k_is_ideal: Option<bool>,
    pub radical_is_ideal: Option<bool>,
    pub radical_solvable: Option<bool>,
    pub levi_semisimple: Option<bool>,
    pub direct_complement: Option<bool>,
}

impl DecompositionFlags {
    pub fn named(&self) -> [(&'static str, Option<bool>); 6] {
        [
            ("span_equals_der", self.span_equals_der),
            ("k_is_ideal", self.k_is_ideal),
            ("radical_is_ideal", self.radical_is_ideal),
            ("radical_solvable", self.radical_solvable),
            ("levi_semisimple", self.levi_semisimple),
            ("direct_complement", self.direct_complement),
        ]
    }

    /// Every evaluated flag is true.
    pub fn all_pass(&self) -> bool {
        self.named().iter().all(|(_, v)| v != &Some(false))
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub der_full: EndoSubspace,
    pub summand_h: EndoSubspace,
    pub summand_w: EndoSubspace,
    pub summand_k: EndoSubspace,
    pub radical_candidate: Option<EndoSubspace>,
    pub levi_candidate: Option<EndoSubspace>,
    pub flags: DecompositionFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum TableMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// Outcome of a successful bracket-table run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub mode: TableMode,
    /// Number of evaluated instances per rule, in rule order.
    pub checks: Vec<(String, usize)>,
    pub k_is_ideal: bool,
    /// `[k, k] = 0`; only asserted when `z(g) ⊆ [g,g]`.
    pub k_abelian: bool,
    pub center_in_derived: bool,
}

pub const TABLE_RULES: [&str; 6] = ["h-h", "h-W", "h-k", "W-W", "W-k", "k-k"];

struct TableChecker<'a> {
    ca: &'a CurrentAlgebra,
    h: EndoSubspace,
    w: EndoSubspace,
    k: EndoSubspace,
    der_g: Vec<ExactMatrix>,
    centroid: Vec<ExactMatrix>,
    hom: Vec<ExactMatrix>,
    der_a: Vec<ExactMatrix>,
}

enum Source<'s> {
    Exhaustive,
    Random(&'s mut ChaCha8Rng, usize),
}

impl<'a> TableChecker<'a> {
    fn new(ca: &'a CurrentAlgebra) -> Result<Self> {
        Ok(Self {
            h: ca.summand_h(),
            w: ca.summand_w(),
            k: ca.summand_k(),
            der_g: ca.der_g.matrices(),
            centroid: ca.centroid.matrices(),
            hom: ca.hom.matrices(),
            der_a: ca.der_a.matrices(),
            ca,
        })
    }

    fn run(&self, samples: usize, seed: u64) -> Result<TableReport> {
        let exhaustive = self.ca.dim() <= 8;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checks = Vec::new();
        for rule in TABLE_RULES {
            let mut source = if exhaustive {
                Source::Exhaustive
            } else {
                Source::Random(&mut rng, samples)
            };
            let count = self.check_rule(rule, &mut source)?;
            checks.push((rule.to_string(), count));
        }
        let der_full = self.ca.derivations();
        let k_is_ideal = is_matrix_ideal(der_full, &self.k)?;
        if !k_is_ideal {
            return Err(Error::BracketIdentity {
                identity: "k ideal".to_string(),
                detail: "[der(g⊗A), k] escapes k".to_string(),
            });
        }
        let k_abelian = commutator_span(&self.k, &self.k)?.space().is_zero();
        let center_in_derived = self
            .ca
            .lie
            .center()
            .is_subspace_of(&self.ca.lie.derived_subalgebra())?;
        if center_in_derived && !k_abelian {
            return Err(Error::BracketIdentity {
                identity: "k abelian".to_string(),
                detail: "[k, k] ≠ 0 although z(g) ⊆ [g,g]".to_string(),
            });
        }
        Ok(TableReport {
            mode: if exhaustive {
                TableMode::Exhaustive
            } else {
                TableMode::Sampled { samples, seed }
            },
            checks,
            k_is_ideal,
            k_abelian,
            center_in_derived,
        })
    }

    fn algebra_elems(&self) -> Vec<Vector> {
        self.ca.algebra_basis()
    }

    fn end_a(&self) -> Vec<ExactMatrix> {
        self.ca.end_a_basis()
    }

    fn check_rule(&self, rule: &str, source: &mut Source<'_>) -> Result<usize> {
        // pure tensors drawn from each summand's factor spaces
        let h_factors = (self.der_g.clone(), self.algebra_elems());
        let w_factors = (self.centroid.clone(), self.der_a.clone());
        let k_factors = (self.hom.clone(), self.end_a());
        let pairs: Vec<((ExactMatrix, Factor), (ExactMatrix, Factor))> = match rule {
            "h-h" => draw_pairs(
                source,
                &h_factors.0,
                &vecs(&h_factors.1),
                &h_factors.0,
                &vecs(&h_factors.1),
            ),
            "h-W" => draw_pairs(
                source,
                &h_factors.0,
                &vecs(&h_factors.1),
                &w_factors.0,
                &mats(&w_factors.1),
            ),
            "h-k" => draw_pairs(
                source,
                &h_factors.0,
                &vecs(&h_factors.1),
                &k_factors.0,
                &mats(&k_factors.1),
            ),
            "W-W" => draw_pairs(
                source,
                &w_factors.0,
                &mats(&w_factors.1),
                &w_factors.0,
                &mats(&w_factors.1),
            ),
            "W-k" => draw_pairs(
                source,
                &w_factors.0,
                &mats(&w_factors.1),
                &k_factors.0,
                &mats(&k_factors.1),
            ),
            "k-k" => draw_pairs(
                source,
                &k_factors.0,
                &mats(&k_factors.1),
                &k_factors.0,
                &mats(&k_factors.1),
            ),
            _ => unreachable!("unknown rule"),
        };
        for (idx, ((x1, f1), (x2, f2))) in pairs.iter().enumerate() {
            self.check_instance(rule, x1, f1, x2, f2)
                .map_err(|detail| Error::BracketIdentity {
                    identity: rule.to_string(),
                    detail: format!("instance {idx}: {detail}"),
                })?;
        }
        Ok(pairs.len())
    }

    fn check_instance(
        &self,
        rule: &str,
        x1: &ExactMatrix,
        f1: &Factor,
        x2: &ExactMatrix,
        f2: &Factor,
    ) -> std::result::Result<(), String> {
        let a = &self.ca.assoc;
        let lhs = {
            let left = self.embed(rule, 0, x1, f1)?;
            let right = self.embed(rule, 1, x2, f2)?;
            left.commutator(&right)
        };
        let in_space = |space: &EndoSubspace, m: &ExactMatrix, name: &str| match space.contains(m) {
            Ok(true) => Ok(()),
            _ => Err(format!("term does not lie in {name}")),
        };
        let mult = |v: &[Rational]| a.left_mult(v).map_err(|e| e.to_string());
        let rhs = match (rule, f1, f2) {
            ("h-h", Factor::Elem(a1), Factor::Elem(a2)) => {
                let prod = a.multiply(a1, a2).map_err(|e| e.to_string())?;
                let rhs = kron(&x1.commutator(x2), &mult(&prod)?);
                in_space(&self.h, &rhs, "h")?;
                rhs
            }
            ("h-W", Factor::Elem(av), Factor::Map(rho)) => {
                let la = mult(av)?;
                let first = kron(&x1.commutator(x2), &(&la * rho));
                let rho_a = rho.mul_vec(av).map_err(|e| e.to_string())?;
                let second = kron(&(x2 * x1), &mult(&rho_a)?);
                in_space(&self.w, &first, "W")?;
                in_space(&self.h, &second, "h")?;
                &first - &second
            }
            ("h-k", Factor::Elem(av), Factor::Map(f)) => {
                let la = mult(av)?;
                let a_dot_f = &(f * &la) - &(&la * f);
                let rhs = &kron(&x1.commutator(x2), &(&la * f)) - &kron(&(x2 * x1), &a_dot_f);
                in_space(&self.k, &rhs, "k")?;
                rhs
            }
            ("W-W", Factor::Map(r1), Factor::Map(r2)) => {
                let first = kron(&x1.commutator(x2), &(r1 * r2));
                let second = kron(&(x2 * x1), &r1.commutator(r2));
                in_space(&self.k, &first, "k")?;
                in_space(&self.w, &second, "W")?;
                &first + &second
            }
            ("W-k" | "k-k", Factor::Map(g1), Factor::Map(g2)) => {
                let rhs = &kron(&(x1 * x2), &(g1 * g2)) - &kron(&(x2 * x1), &(g2 * g1));
                in_space(&self.k, &rhs, "k")?;
                rhs
            }
            _ => unreachable!("factor kinds fixed by rule"),
        };
        if lhs != rhs {
            return Err("commutator differs from the tabulated expression".to_string());
        }
        Ok(())
    }

    fn embed(
        &self,
        rule: &str,
        side: usize,
        x: &ExactMatrix,
        f: &Factor,
    ) -> std::result::Result<ExactMatrix, String> {
        let kind = rule.split('-').nth(side).expect("rule has two sides");
        let out = match (kind, f) {
            ("h", Factor::Elem(a)) => self.ca.embed_h(x, a),
            ("W", Factor::Map(rho)) => self.ca.embed_w(x, rho),
            ("k", Factor::Map(g)) => self.ca.embed_k(x, g),
            _ => unreachable!("factor kinds fixed by rule"),
        };
        out.map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug)]
enum Factor {
    Elem(Vector),
    Map(ExactMatrix),
}

fn vecs(v: &[Vector]) -> Vec<Factor> {
    v.iter().cloned().map(Factor::Elem).collect()
}

fn mats(v: &[ExactMatrix]) -> Vec<Factor> {
    v.iter().cloned().map(Factor::Map).collect()
}

fn random_combination<T: Clone>(
    rng: &mut ChaCha8Rng,
    basis: &[T],
    scale: impl Fn(&T, &Rational) -> T,
    add: impl Fn(&T, &T) -> T,
) -> Option<T> {
    let mut acc: Option<T> = None;
    for b in basis {
        let c = rat(rng.random_range(-3..=3));
        let term = scale(b, &c);
        acc = Some(match acc {
            None => term,
            Some(a) => add(&a, &term),
        });
    }
    acc
}

fn random_matrix(rng: &mut ChaCha8Rng, basis: &[ExactMatrix]) -> Option<ExactMatrix> {
    random_combination(rng, basis, |m, c| m.scale(c), |a, b| a + b)
}

fn random_factor(rng: &mut ChaCha8Rng, basis: &[Factor]) -> Option<Factor> {
    random_combination(
        rng,
        basis,
        |f, c| match f {
            Factor::Elem(v) => Factor::Elem(v.iter().map(|x| x * c).collect()),
            Factor::Map(m) => Factor::Map(m.scale(c)),
        },
        |a, b| match (a, b) {
            (Factor::Elem(x), Factor::Elem(y)) => {
                Factor::Elem(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Factor::Map(x), Factor::Map(y)) => Factor::Map(x + y),
            _ => unreachable!("homogeneous basis"),
        },
    )
}

type Pair = ((ExactMatrix, Factor), (ExactMatrix, Factor));

/// Either every pair of basis pure tensors, or `count` seeded random pairs.
/// Empty factor spaces yield no pairs.
fn draw_pairs(
    source: &mut Source<'_>,
    x1: &[ExactMatrix],
    f1: &[Factor],
    x2: &[ExactMatrix],
    f2: &[Factor],
) -> Vec<Pair> {
    match source {
        Source::Exhaustive => {
            let left: Vec<_> = x1
                .iter()
                .flat_map(|x| f1.iter().map(move |f| (x.clone(), f.clone())))
                .collect();
            let right: Vec<_> = x2
                .iter()
                .flat_map(|x| f2.iter().map(move |f| (x.clone(), f.clone())))
                .collect();
            left.iter()
                .flat_map(|l| right.iter().map(move |r| (l.clone(), r.clone())))
                .collect()
        }
        Source::Random(rng, count) => {
            let mut out = Vec::new();
            for _ in 0..*count {
                let draw = (|| {
                    let a = random_matrix(rng, x1)?;
                    let b = random_factor(rng, f1)?;
                    let c = random_matrix(rng, x2)?;
                    let d = random_factor(rng, f2)?;
                    Some(((a, b), (c, d)))
                })();
                match draw {
                    Some(p) => out.push(p),
                    None => break,
                }
            }
            out
        }
    }
}
