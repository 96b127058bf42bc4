mod common;

use common::*;
use curlie::assoc_algebra::{rbar, regular_rep};
use curlie::exact_linalg::{nullspace, rat, rref, Rational};
use curlie::heisenberg::{
    match_template, parameter_count, truncated_heisenberg, DerivationTemplate,
};
use curlie::lie_algebra::{is_derivation, sp};
use curlie::{AssocAlgebra, EndoSubspace, ExactMatrix, LieAlgebra, Subspace};
use proptest::prelude::*;

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_rows, 1..=max_cols, 0usize..=2).prop_flat_map(|(r, c, sparsity)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            // zero out some entries so rank deficiency is common
            let v: Vec<Rational> = v
                .into_iter()
                .enumerate()
                .map(|(i, x)| {
                    if sparsity > 0 && i % (sparsity + 2) == 0 {
                        rat(0)
                    } else {
                        rat(x)
                    }
                })
                .collect();
            ExactMatrix::from_entries(r, c, v).unwrap()
        })
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        ..ProptestConfig::default()
    }
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().copied().map(rat).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rref_is_idempotent_and_matches_oracle(m in matrix_strategy(6, 7)) {
        let (r, pivots) = rref(&m);
        let (r2, pivots2) = rref(&r);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(&pivots, &pivots2);
        let (rows, opivots) = rref_oracle(&m);
        prop_assert_eq!(&pivots, &opivots);
        for (i, row) in rows.iter().enumerate() {
            prop_assert_eq!(r.row(i), row.as_slice());
        }
        for i in rows.len()..r.rows() {
            prop_assert!(r.row(i).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(6, 8)) {
        let ns = nullspace(&m);
        prop_assert_eq!(m.rank() + ns.dim(), m.cols());
        for v in ns.vectors() {
            let image = m.mul_vec(v).unwrap();
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn modular_dimension_law(
        n in 2usize..=6,
        a in prop::collection::vec(-2i64..=2, 36),
        b in prop::collection::vec(-2i64..=2, 36),
        ra in 0usize..=4,
        rb in 0usize..=4,
    ) {
        let u = Subspace::span(n, a.chunks(6).take(ra).map(|c| ints(&c[..n]))).unwrap();
        let w = Subspace::span(n, b.chunks(6).take(rb).map(|c| ints(&c[..n]))).unwrap();
        let sum = u.sum(&w).unwrap();
        let cap = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(cap.is_subspace_of(&u).unwrap() && cap.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap() && w.is_subspace_of(&sum).unwrap());
        // the basis is the canonical one of the row space
        let (oracle, _) = rref_oracle(sum.basis());
        prop_assert_eq!(oracle.len(), sum.dim());
        for (i, row) in oracle.iter().enumerate() {
            prop_assert_eq!(sum.basis().row(i), row.as_slice());
        }
    }

    #[test]
    fn kron_mixed_product(
        a in matrix_strategy(3, 3),
        b in matrix_strategy(3, 3),
        seed in any::<u64>(),
    ) {
        let mut rng = seeded(seed);
        let c = random_matrix(&mut rng, a.cols(), 2, -3, 3);
        let d = random_matrix(&mut rng, b.cols(), 3, -3, 3);
        let k_ab = curlie::exact_linalg::kron(&a, &b);
        prop_assert_eq!(&k_ab, &kron_oracle(&a, &b));
        let lhs = matmul_oracle(&k_ab, &curlie::exact_linalg::kron(&c, &d));
        let rhs = kron_oracle(&matmul_oracle(&a, &c), &matmul_oracle(&b, &d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn regular_rep_is_multiplicative(k in 0usize..=5, p in prop::collection::vec(-4i64..=4, 6), q in prop::collection::vec(-4i64..=4, 6)) {
        let (p, q) = (ints(&p[..=k]), ints(&q[..=k]));
        let rp = regular_rep(k, &p).unwrap();
        let rq = regular_rep(k, &q).unwrap();
        prop_assert_eq!(&rp, &mult_matrix(&p));
        prop_assert_eq!(&rp * &rq, regular_rep(k, &poly_mul_trunc(&p, &q)).unwrap());
    }

    #[test]
    fn rbar_is_the_derivation_with_given_image(k in 0usize..=5, q in prop::collection::vec(-4i64..=4, 6)) {
        let mut q = ints(&q[..=k]);
        q[0] = rat(0);
        let m = rbar(k, &q).unwrap();
        prop_assert_eq!(&m, &derivation_from_image(&q));
        let a = AssocAlgebra::truncated_polynomial(k);
        prop_assert!(a.derivations().contains(&m).unwrap());
    }
}

fn derivation_space_checks(g: &LieAlgebra, rng: &mut rand_chacha::ChaCha8Rng) {
    let der = g.derivations();
    let basis = der.matrices();
    for d in &basis {
        assert!(leibniz_oracle(g, d));
    }
    if basis.is_empty() {
        return;
    }
    let combo = |rng: &mut rand_chacha::ChaCha8Rng| {
        let cs = random_ints(rng, basis.len(), -3, 3);
        basis
            .iter()
            .zip(cs)
            .fold(ExactMatrix::zeros(g.dim(), g.dim()), |acc, (m, c)| {
                &acc + &m.scale(&rat(c))
            })
    };
    let (x, y) = (combo(rng), combo(rng));
    assert!(leibniz_oracle(g, &x));
    let c = x.commutator(&y);
    assert!(leibniz_oracle(g, &c));
    assert!(der.contains(&c).unwrap());
}

/// Random Lie algebras drawn as known algebras in a random basis.
#[test]
fn derivation_spaces_are_closed() {
    let mut rng = seeded(7);
    let pool: Vec<LieAlgebra> = vec![
        LieAlgebra::heisenberg(1),
        LieAlgebra::heisenberg(2),
        sp(1).algebra().clone(),
        LieAlgebra::abelian(3),
        truncated_heisenberg(1, 1).product().clone(),
        curlie::current::current_algebra(sp(1).algebra(), &AssocAlgebra::truncated_polynomial(1))
            .unwrap()
            .product()
            .clone(),
    ];
    for case in 0..120 {
        let base = &pool[case % pool.len()];
        let p = random_invertible(&mut rng, base.dim());
        let g = change_basis(base, &p);
        assert!(jacobi_oracle(&g));
        assert!(g.check_lie_axioms());
        assert_eq!(
            g.derivations().dim(),
            base.derivations().dim(),
            "case {case}"
        );
        derivation_space_checks(&g, &mut rng);
    }
}

#[test]
fn associative_derivations_obey_leibniz() {
    let mut rng = seeded(11);
    for case in 0..100 {
        let k = case % 5;
        let a = AssocAlgebra::truncated_polynomial(k);
        let der = a.derivations();
        assert_eq!(der.dim(), k);
        let cs = random_ints(&mut rng, k + 1, -3, 3);
        let mut q: Vec<Rational> = cs.into_iter().map(rat).collect();
        q[0] = rat(0);
        let rho = derivation_from_image(&q);
        assert!(der.contains(&rho).unwrap());
        let x: Vec<Rational> = random_ints(&mut rng, k + 1, -3, 3)
            .into_iter()
            .map(rat)
            .collect();
        let y: Vec<Rational> = random_ints(&mut rng, k + 1, -3, 3)
            .into_iter()
            .map(rat)
            .collect();
        let lhs = rho.mul_vec(&a.multiply(&x, &y).unwrap()).unwrap();
        let r1 = a.multiply(&rho.mul_vec(&x).unwrap(), &y).unwrap();
        let r2 = a.multiply(&x, &rho.mul_vec(&y).unwrap()).unwrap();
        let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(p, q)| p + q).collect();
        assert_eq!(lhs, rhs);
    }
}

/// Template instantiations with random parameters are derivations, and the
/// matcher recovers the parameters.
#[test]
fn template_instantiations_are_derivations() {
    let mut rng = seeded(13);
    let shapes = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (1, 3)];
    let algebras: Vec<_> = shapes
        .iter()
        .map(|&(m, k)| truncated_heisenberg(m, k))
        .collect();
    for case in 0..120 {
        let idx = case % shapes.len();
        let (m, k) = shapes[idx];
        let count = parameter_count(m, k);
        let v: Vec<Rational> = random_ints(&mut rng, count, -4, 4)
            .into_iter()
            .map(rat)
            .collect();
        let mat = DerivationTemplate::new(m, k).instantiate(&v).unwrap();
        let g = algebras[idx].product();
        assert!(leibniz_oracle(g, &mat), "shape ({m},{k}) case {case}");
        assert!(is_derivation(g, &mat).unwrap());
        let params = match_template(m, k, &mat).unwrap();
        assert_eq!(params.to_vector(), v);
    }
}

#[test]
fn endo_subspace_round_trip() {
    let mut rng = seeded(17);
    for _ in 0..100 {
        let n = 3;
        let mats: Vec<ExactMatrix> = (0..4)
            .map(|_| random_matrix(&mut rng, n, n, -2, 2))
            .collect();
        let space = EndoSubspace::from_matrices(n, &mats).unwrap();
        for m in &mats {
            assert!(space.contains(m).unwrap());
        }
        let back = EndoSubspace::from_matrices(n, &space.matrices()).unwrap();
        assert_eq!(back, space);
    }
}
