//! Truncated Weil coefficients and Weyl-algebra operators.
//!
//! Polynomials in `θ^1..θ^N` are truncated by total degree. A monomial is a
//! sorted index tuple; monomials are ordered by degree, then
//! lexicographically, so degree 0 and 1 come out as `1, θ^1, …, θ^N`.
//!
//! The Weil grading gives `θ^i` weight 2, so the Weil cap `2q` keeps
//! polynomial degree `q`; [`build_truncated_weil`] takes the Weil cap and
//! floors odd caps.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::sayd::{ActionMatrices, CoactionMatrices, SaydModule};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTruncBasis {
    n: usize,
    degree: usize,
    monomials: Vec<Vec<usize>>,
    position: HashMap<Vec<usize>, usize>,
}

impl PolyTruncBasis {
    /// Monomials of total degree at most `degree`; there are `binom(n + degree, degree)`.
    pub fn new(n: usize, degree: usize) -> Self {
        let monomials: Vec<Vec<usize>> =
            (0..=degree).flat_map(|d| (0..n).combinations_with_replacement(d)).collect();
        let position = monomials.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        Self { n, degree, monomials, position }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, k: usize) -> &[usize] {
        &self.monomials[k]
    }

    pub fn index_of(&self, mono: &[usize]) -> Option<usize> {
        self.position.get(mono).copied()
    }

    /// Exponent vector of monomial `k`.
    pub fn exponents(&self, k: usize) -> Vec<usize> {
        let mut e = vec![0; self.n];
        for &i in &self.monomials[k] {
            e[i] += 1;
        }
        e
    }

    /// Indices of monomials of degree at most `d`.
    pub fn window(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.monomials[k].len() <= d).collect()
    }

    /// `mono · x_i`, or `None` past the truncation.
    pub fn times(&self, k: usize, i: usize) -> Option<usize> {
        let mut m = self.monomials[k].clone();
        let at = m.partition_point(|&x| x <= i);
        m.insert(at, i);
        self.index_of(&m)
    }

    /// `mono` with the factor at slot `r` replaced by `x_q`.
    fn replace(&self, k: usize, r: usize, q: usize) -> usize {
        let mut m = self.monomials[k].clone();
        m[r] = q;
        m.sort_unstable();
        self.position[&m]
    }
}

/// Weil data on polynomials of degree `≤ cap / 2` in `θ^1..θ^N`.
///
/// The action is `θ^i · X_j = Σ_q C^i_{jq} θ^q` extended as a derivation;
/// the coaction is multiplication, `v ◁ θ^j = v θ^j`, cut off at the top degree.
pub fn build_truncated_weil<T: Scalar>(lie: Arc<LieAlgebra<T>>, cap: usize) -> SaydModule<T> {
    let n = lie.dim();
    let basis = PolyTruncBasis::new(n, cap / 2);
    let m = basis.len();
    let mut b = vec![Matrix::<T>::zeros(m, m); n];
    let mut a = vec![Matrix::<T>::zeros(m, m); n];
    for k in 0..m {
        let mono = basis.monomial(k).to_vec();
        for (j, bj) in b.iter_mut().enumerate() {
            for (r, &i) in mono.iter().enumerate() {
                for (q, c) in (0..n).map(|q| (q, lie.c(j, q, i))) {
                    if c.is_zero() {
                        continue;
                    }
                    let col = basis.replace(k, r, q);
                    bj[(k, col)] = bj[(k, col)].clone() + c;
                }
            }
        }
        for (j, aj) in a.iter_mut().enumerate() {
            if let Some(col) = basis.times(k, j) {
                aj[(k, col)] = T::one();
            }
        }
    }
    let action = ActionMatrices::new(lie.clone(), m, b).expect("well-shaped action");
    let coaction = CoactionMatrices::new(lie, m, a).expect("well-shaped coaction");
    SaydModule::new(action, coaction).expect("same algebra and space")
}

/// Weyl-algebra operators on polynomials of degree `≤ D`, as matrices acting
/// on coefficient columns (so products compose as operators).
#[derive(Clone, Debug)]
pub struct WeylOps<T> {
    pub basis: PolyTruncBasis,
    /// Multiplication by `x_i`, zero past degree `D`.
    pub q: Vec<Matrix<T>>,
    /// `∂/∂x_i`.
    pub p: Vec<Matrix<T>>,
    /// `τ(X_i) = Σ_{k,l} C^l_{ki} P_l Q^k`.
    pub tau: Vec<Matrix<T>>,
}

pub fn build_weyl_ops<T: Scalar>(lie: &LieAlgebra<T>, deg_cap: usize) -> WeylOps<T> {
    let n = lie.dim();
    let basis = PolyTruncBasis::new(n, deg_cap);
    let len = basis.len();
    let mut q = vec![Matrix::zeros(len, len); n];
    let mut p = vec![Matrix::zeros(len, len); n];
    for k in 0..len {
        for i in 0..n {
            if let Some(row) = basis.times(k, i) {
                q[i][(row, k)] = T::one();
            }
            let mono = basis.monomial(k);
            let mult = mono.iter().filter(|&&x| x == i).count();
            if mult > 0 {
                let mut lower = mono.to_vec();
                let at = lower.iter().position(|&x| x == i).expect("factor present");
                lower.remove(at);
                let row = basis.index_of(&lower).expect("lower degree is kept");
                p[i][(row, k)] = T::int(mult as i64);
            }
        }
    }
    let tau = (0..n)
        .map(|i| {
            let mut t = Matrix::zeros(len, len);
            for k in 0..n {
                for l in 0..n {
                    let c = lie.c(k, i, l);
                    if !c.is_zero() {
                        t = &t + &(&p[l] * &q[k]).scale(&c);
                    }
                }
            }
            t
        })
        .collect();
    WeylOps { basis, q, p, tau }
}

impl<T: Scalar> WeylOps<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `a` and `b` agree on every monomial of degree `≤ d`.
    pub fn agree_below(&self, a: &Matrix<T>, b: &Matrix<T>, d: usize) -> bool {
        self.basis.window(d).into_iter().all(|k| a.column(k) == b.column(k))
    }

    /// `[P_i, Q^j] = δ^j_i` on degree `≤ D − 1`.
    pub fn weyl_relations_hold(&self) -> bool {
        let n = self.q.len();
        let d = self.basis.degree().saturating_sub(1);
        let id = Matrix::identity(self.dim());
        let zero = Matrix::zeros(self.dim(), self.dim());
        (0..n).all(|i| {
            (0..n).all(|j| {
                let comm = self.p[i].commutator(&self.q[j]);
                self.agree_below(&comm, if i == j { &id } else { &zero }, d)
                    && self.agree_below(&self.p[i].commutator(&self.p[j]), &zero, d)
                    && self.agree_below(&self.q[i].commutator(&self.q[j]), &zero, d)
            })
        })
    }

    /// `[τ(X_i), τ(X_j)] = Σ_k C^k_{ij} τ(X_k)` on degree `≤ D − 1`.
    pub fn tau_is_lie_map(&self, lie: &LieAlgebra<T>) -> bool {
        let n = self.tau.len();
        let d = self.basis.degree().saturating_sub(1);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let rhs = (0..n).fold(Matrix::zeros(self.dim(), self.dim()), |acc, k| {
                    &acc + &self.tau[k].scale(&lie.c(i, j, k))
                });
                self.agree_below(&self.tau[i].commutator(&self.tau[j]), &rhs, d)
            })
        })
    }

    /// `Σ_i τ(X_i) Q^i = 0` on degree `≤ D − 2`.
    pub fn stability_holds(&self) -> bool {
        let Some(d) = self.basis.degree().checked_sub(2) else { return true };
        let sum = (0..self.tau.len())
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, i| &acc + &(&self.tau[i] * &self.q[i]));
        self.agree_below(&sum, &Matrix::zeros(self.dim(), self.dim()), d)
    }

    /// `τ(X_i) Q^j = −Σ_k C^j_{ik} Q^k + Q^j τ(X_i)` on degree `≤ D − 2`.
    pub fn phi_relation_holds(&self, lie: &LieAlgebra<T>) -> bool {
        let Some(d) = self.basis.degree().checked_sub(2) else { return true };
        let n = self.tau.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = &self.tau[i] * &self.q[j];
                let shift = (0..n).fold(Matrix::zeros(self.dim(), self.dim()), |acc, k| {
                    &acc - &self.q[k].scale(&lie.c(i, k, j))
                });
                let rhs = &shift + &(&self.q[j] * &self.tau[i]);
                self.agree_below(&lhs, &rhs, d)
            })
        })
    }

    /// Row-convention data induced on the truncation: `B_i = −τ(X_i)ᵀ`,
    /// `A^i = (Q^i)ᵀ`. The module and comodule laws hold only below the
    /// truncation boundary.
    pub fn induced_data(&self, lie: Arc<LieAlgebra<T>>) -> (ActionMatrices<T>, CoactionMatrices<T>) {
        let m = self.dim();
        let b = self.tau.iter().map(|t| -&t.transpose()).collect();
        let a = self.q.iter().map(Matrix::transpose).collect();
        (
            ActionMatrices::new(lie.clone(), m, b).expect("well-shaped action"),
            CoactionMatrices::new(lie, m, a).expect("well-shaped coaction"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin::*;
    use crate::sayd::{check_comodule, check_module};
    use crate::scalar::Q;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn basis_sizes_and_order() {
        for n in 1..4 {
            for d in 0..4 {
                assert_eq!(PolyTruncBasis::new(n, d).len(), binom(n + d, d));
            }
        }
        let b = PolyTruncBasis::new(3, 2);
        assert_eq!(b.monomial(0), &[] as &[usize]);
        assert_eq!(b.monomial(1), &[0]);
        assert_eq!(b.monomial(4), &[0, 0]);
        assert_eq!(b.monomial(5), &[0, 1]);
        assert_eq!(b.exponents(5), vec![1, 1, 0]);
        assert_eq!(b.times(3, 0), Some(6));
        assert_eq!(b.times(6, 0), None);
    }

    #[test]
    fn weil_action_in_low_degree_is_the_coadjoint_one() {
        let g = Arc::new(sl2::<Q>());
        let w = build_truncated_weil(g.clone(), 2);
        assert_eq!(w.dim(), 4);
        for j in 0..3 {
            let ad = g.ad(j);
            let mut padded = Matrix::zeros(4, 4);
            padded.set_block(1, 1, &ad);
            assert_eq!(w.action.b(j), &padded);
        }
    }

    #[test]
    fn weil_data_is_a_conilpotent_module_comodule() {
        for g in [sl2::<Q>(), heisenberg(), nonabelian2(), abelian(3)] {
            let g = Arc::new(g);
            for cap in 0..=4 {
                let w = build_truncated_weil(g.clone(), cap);
                assert!(check_module(&w.action).is_ok());
                let c = check_comodule(&w.coaction);
                assert!(c.is_ok() && c.conilpotent);
                let r = w.check();
                assert!(r.ayd.ok && r.unimodular_stability.ok);
                assert_eq!(r.stability.ok, g.is_unimodular() || cap < 2);
            }
        }
    }

    #[test]
    fn weyl_window_for_sl2() {
        let g = sl2::<Q>();
        let ops = build_weyl_ops(&g, 4);
        assert!(ops.weyl_relations_hold());
        assert!(ops.tau_is_lie_map(&g));
        assert!(ops.stability_holds());
        assert!(ops.phi_relation_holds(&g));
    }

    #[test]
    fn weyl_relation_fails_at_the_boundary() {
        let g = sl2::<Q>();
        let ops = build_weyl_ops(&g, 2);
        let comm = ops.p[0].commutator(&ops.q[0]);
        let id = Matrix::identity(ops.dim());
        assert!(ops.agree_below(&comm, &id, 1));
        assert!(!ops.agree_below(&comm, &id, 2));
    }

    #[test]
    fn induced_action_is_a_module_below_the_boundary() {
        let g = Arc::new(heisenberg::<Q>());
        let ops = build_weyl_ops(&g, 3);
        let (b, _) = ops.induced_data(g.clone());
        let win = ops.basis.window(2);
        for p in 0..3 {
            for q in 0..3 {
                let lhs = b.b(p).commutator(b.b(q));
                let rhs = (0..3).fold(Matrix::zeros(ops.dim(), ops.dim()), |acc, r| &acc + &b.b(r).scale(&g.c(p, q, r)));
                for &k in &win {
                    assert_eq!(lhs.row(k), rhs.row(k));
                }
            }
        }
    }
}
