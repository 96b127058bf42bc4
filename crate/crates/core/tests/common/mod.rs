//! Independent oracles shared by the integration suites. None of these call
//! into the library's elimination or algebra routines.
#![allow(dead_code)]

use curlie::exact_linalg::{rat, Rational, Vector};
use curlie::{ExactMatrix, LieAlgebra};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.random_range(lo..=hi)).collect()
}

pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> ExactMatrix {
    let v: Vec<Rational> = random_ints(rng, rows * cols, lo, hi)
        .into_iter()
        .map(rat)
        .collect();
    ExactMatrix::from_entries(rows, cols, v).unwrap()
}

/// Random matrix of rank at most `r`: a product of random `rows × r` and
/// `r × cols` factors.
pub fn random_low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize) -> ExactMatrix {
    let a = random_matrix(rng, rows, r, -2, 2);
    let b = random_matrix(rng, r, cols, -2, 2);
    &a * &b
}

/// Gauss–Jordan with bottom-up pivot search and eager full-row scaling.
/// The reduced echelon form is unique, so this must agree with any other
/// correct implementation.
pub fn rref_oracle(m: &ExactMatrix) -> (Vec<Vector>, Vec<usize>) {
    let mut rows: Vec<Vector> = m.row_vectors().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..m.cols() {
        let Some(p) = (top..rows.len()).rev().find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = Rational::one() / rows[top][c].clone();
        rows[top] = rows[top].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != top && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let pivot_row = rows[top].clone();
                rows[r] = rows[r]
                    .iter()
                    .zip(&pivot_row)
                    .map(|(x, y)| x - &f * y)
                    .collect();
            }
        }
        pivots.push(c);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn kron_oracle(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (p, q) = (b.rows(), b.cols());
    let mut out = ExactMatrix::zeros(a.rows() * p, a.cols() * q);
    for r in 0..out.rows() {
        for c in 0..out.cols() {
            out.set(r, c, a.get(r / p, c / q) * b.get(r % p, c % q));
        }
    }
    out
}

pub fn matmul_oracle(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = Rational::zero();
            for l in 0..a.cols() {
                s += a.get(i, l) * b.get(l, j);
            }
            out.set(i, j, s);
        }
    }
    out
}

/// `pq mod t^{k+1}` on coefficient vectors.
pub fn poly_mul_trunc(p: &[Rational], q: &[Rational]) -> Vector {
    let n = p.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &p[i] * &q[j];
        }
    }
    out
}

/// Multiplication by `p` on `C[t]/(t^{k+1})`, column `j` the image of `t^j`.
pub fn mult_matrix(p: &[Rational]) -> ExactMatrix {
    let n = p.len();
    let mut out = ExactMatrix::zeros(n, n);
    for j in 0..n {
        let mut tj = vec![Rational::zero(); n];
        tj[j] = Rational::one();
        for (i, c) in poly_mul_trunc(p, &tj).into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

/// The derivation `ρ` of `C[t]/(t^{k+1})` with `ρ(t) = q`, via
/// `ρ(t^j) = j t^{j-1} q`.
pub fn derivation_from_image(q: &[Rational]) -> ExactMatrix {
    let n = q.len();
    let mut out = ExactMatrix::zeros(n, n);
    for j in 1..n {
        let mut tj1 = vec![Rational::zero(); n];
        tj1[j - 1] = rat(j as i64);
        for (i, c) in poly_mul_trunc(&tj1, q).into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

fn bracket(g: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Vector {
    let n = g.dim();
    let c = g.structure();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for k in 0..n {
                out[k] += &xy * &c[(i * n + j) * n + k];
            }
        }
    }
    out
}

fn apply(m: &ExactMatrix, v: &[Rational]) -> Vector {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c) * &v[c]).sum())
        .collect()
}

/// `D[x, y] = [Dx, y] + [x, Dy]` on every pair of basis vectors.
pub fn leibniz_oracle(g: &LieAlgebra, d: &ExactMatrix) -> bool {
    let n = g.dim();
    let unit = |i: usize| -> Vector {
        (0..n)
            .map(|j| if i == j { rat(1) } else { rat(0) })
            .collect()
    };
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (unit(i), unit(j));
            let lhs = apply(d, &bracket(g, &x, &y));
            let a = bracket(g, &apply(d, &x), &y);
            let b = bracket(g, &x, &apply(d, &y));
            let rhs: Vector = a.iter().zip(&b).map(|(p, q)| p + q).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]] = 0` on basis triples.
pub fn jacobi_oracle(g: &LieAlgebra) -> bool {
    let n = g.dim();
    let unit = |i: usize| -> Vector {
        (0..n)
            .map(|j| if i == j { rat(1) } else { rat(0) })
            .collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(i), unit(j), unit(k));
                let a = bracket(g, &x, &bracket(g, &y, &z));
                let b = bracket(g, &y, &bracket(g, &z, &x));
                let c = bracket(g, &z, &bracket(g, &x, &y));
                if a.iter()
                    .zip(&b)
                    .zip(&c)
                    .any(|((p, q), r)| !(p + q + r).is_zero())
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Inverse by reducing `[P | I]` with the oracle elimination.
pub fn inverse_oracle(p: &ExactMatrix) -> Option<ExactMatrix> {
    let n = p.rows();
    let mut aug = ExactMatrix::zeros(n, 2 * n);
    aug.set_block(0, 0, p);
    aug.set_block(0, n, &ExactMatrix::identity(n));
    let (rows, pivots) = rref_oracle(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let mut out = ExactMatrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        for c in 0..n {
            out.set(r, c, row[n + c].clone());
        }
    }
    Some(out)
}

/// Structure constants of `g` in the basis given by the columns of `p`.
pub fn change_basis(g: &LieAlgebra, p: &ExactMatrix) -> LieAlgebra {
    let n = g.dim();
    let pinv = inverse_oracle(p).expect("invertible");
    let mut out = vec![Rational::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let x: Vector = (0..n).map(|i| p.get(i, a).clone()).collect();
            let y: Vector = (0..n).map(|i| p.get(i, b).clone()).collect();
            let xy = bracket(g, &x, &y);
            let coords = apply(&pinv, &xy);
            for c in 0..n {
                out[(a * n + b) * n + c] = coords[c].clone();
            }
        }
    }
    LieAlgebra::new((0..n).map(|i| format!("y{i}")).collect(), out).unwrap()
}

/// Random unimodular-ish invertible matrix: unit lower times unit upper.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut l = ExactMatrix::identity(n);
    let mut u = ExactMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, rat(rng.random_range(-2..=2)));
            u.set(j, i, rat(rng.random_range(-2..=2)));
        }
    }
    &l * &u
}

/// The displayed 17-parameter derivation family of `h_{1,1}`.
pub fn h11_family(v: &[i64; 17]) -> ExactMatrix {
    let [a11, a21, b11, b21, c11, c21, d11, d21, d22, x @ ..] = *v;
    ExactMatrix::from_ints(&[
        [a11 + d11, 0, b11, 0, 0, 0],
        [a21 + d21, a11 + d11 + d22, b21, b11, 0, 0],
        [c11, 0, -a11 + d11, 0, 0, 0],
        [c21, c11, -a21 + d21, -a11 + d11 + d22, 0, 0],
        [x[0], x[1], x[2], x[3], 2 * d11, 0],
        [x[4], x[5], x[6], x[7], 2 * d21, 2 * d11 + d22],
    ])
}
