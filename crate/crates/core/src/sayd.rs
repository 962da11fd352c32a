//! Right `g`-modules and left `g`-comodules as matrix families.
//!
//! `V` has basis `v^1..v^m` and vectors are rows. The action is
//! `v^i · X_j = Σ_k (B_j)^i_k v^k` and the coaction is
//! `∇(v^i) = Σ_{j,k} (A^j)^i_k X_j ⊗ v^k`, so `v ◁ θ^j` is the row vector
//! times `A^j`. In this convention:
//!
//! * module law: `[B_p, B_q] = Σ_r C^r_{pq} B_r`;
//! * comodule law: the `A^j` commute pairwise;
//! * AYD: `[B_q, A^j] = Σ_s A^s C^j_{sq}`;
//! * stability: `Σ_j A^j B_j = 0`;
//! * unimodular stability: `Σ_j B_j A^j = 0`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

fn check_family<T: Scalar>(lie: &LieAlgebra<T>, dim: usize, mats: &[Matrix<T>], what: &str) -> Result<()> {
    if mats.len() != lie.dim() {
        return Err(Error::DimensionMismatch(format!("{} {what} matrices for a {}-dimensional algebra", mats.len(), lie.dim())));
    }
    if let Some((j, m)) = mats.iter().enumerate().find(|(_, m)| m.rows() != dim || m.cols() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "{what} matrix {} is {}x{}, expected {dim}x{dim}",
            j + 1,
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn combine<T: Scalar>(dim: usize, terms: impl IntoIterator<Item = (T, Matrix<T>)>) -> Matrix<T> {
    terms.into_iter().fold(Matrix::zeros(dim, dim), |acc, (c, m)| if c.is_zero() { acc } else { &acc + &m.scale(&c) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActionMatrices<T> {
    lie: Arc<LieAlgebra<T>>,
    dim: usize,
    mats: Vec<Matrix<T>>,
}

impl<T: Scalar> ActionMatrices<T> {
    pub fn new(lie: Arc<LieAlgebra<T>>, dim: usize, mats: Vec<Matrix<T>>) -> Result<Self> {
        check_family(&lie, dim, &mats, "action")?;
        Ok(Self { lie, dim, mats })
    }

    pub fn zero(lie: Arc<LieAlgebra<T>>, dim: usize) -> Self {
        let mats = vec![Matrix::zeros(dim, dim); lie.dim()];
        Self { lie, dim, mats }
    }

    pub fn lie(&self) -> &Arc<LieAlgebra<T>> {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mats(&self) -> &[Matrix<T>] {
        &self.mats
    }

    pub fn b(&self, j: usize) -> &Matrix<T> {
        &self.mats[j]
    }

    /// `(p, q)` pairs with `p < q` where the module law fails.
    pub fn module_violations(&self) -> Vec<(usize, usize)> {
        let n = self.lie.dim();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                let rhs = combine(self.dim, (0..n).map(|r| (self.lie.c(p, q, r), self.mats[r].clone())));
                if self.mats[p].commutator(&self.mats[q]) != rhs {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// `B_j ↦ B_j + sign·δ(X_j)·I`.
    pub fn delta_twist(&self, sign: i64) -> Self {
        let delta = self.lie.modular_character();
        let s = T::int(sign);
        let mats = self
            .mats
            .iter()
            .zip(&delta)
            .map(|(b, d)| &Matrix::scalar(self.dim, s.clone() * d.clone()) + b)
            .collect();
        Self { lie: self.lie.clone(), dim: self.dim, mats }
    }

    /// Action on the polynomial basis vector `v^i` along a word of generators,
    /// applied left to right.
    pub fn act_word(&self, row: &[T], word: &[usize]) -> Vec<T> {
        word.iter().fold(row.to_vec(), |v, &j| self.mats[j].apply_row(&v))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoactionMatrices<T> {
    lie: Arc<LieAlgebra<T>>,
    dim: usize,
    mats: Vec<Matrix<T>>,
}

impl<T: Scalar> CoactionMatrices<T> {
    pub fn new(lie: Arc<LieAlgebra<T>>, dim: usize, mats: Vec<Matrix<T>>) -> Result<Self> {
        check_family(&lie, dim, &mats, "coaction")?;
        Ok(Self { lie, dim, mats })
    }

    pub fn zero(lie: Arc<LieAlgebra<T>>, dim: usize) -> Self {
        let mats = vec![Matrix::zeros(dim, dim); lie.dim()];
        Self { lie, dim, mats }
    }

    pub fn lie(&self) -> &Arc<LieAlgebra<T>> {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mats(&self) -> &[Matrix<T>] {
        &self.mats
    }

    pub fn a(&self, j: usize) -> &Matrix<T> {
        &self.mats[j]
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// `(j₁, j₂)` with `j₁ < j₂` whose matrices do not commute.
    pub fn noncommuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.mats.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.mats[a].commutator(&self.mats[b]).is_zero() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// True iff every product of `m` matrices from the family vanishes.
    ///
    /// The span of length-`k` products is tracked instead of the products
    /// themselves, so the cost is polynomial in `m`.
    pub fn is_conilpotent(&self) -> bool {
        let m = self.dim;
        if m == 0 {
            return true;
        }
        let flatten = |x: &Matrix<T>| -> Vec<T> { (0..m).flat_map(|i| x.row(i).to_vec()).collect() };
        let unflatten = |v: &[T]| Matrix::from_fn(m, m, |i, k| v[i * m + k].clone());
        let reduce = |mats: Vec<Matrix<T>>| -> Vec<Matrix<T>> {
            let rows: Vec<Vec<T>> = mats.iter().map(flatten).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
            if rows.is_empty() {
                return Vec::new();
            }
            let (r, pivots) = Matrix::from_rows(rows).rref();
            (0..pivots.len()).map(|i| unflatten(r.row(i))).collect()
        };
        let mut span = reduce(self.mats.clone());
        for _ in 1..m {
            if span.is_empty() {
                return true;
            }
            span = reduce(self.mats.iter().flat_map(|a| span.iter().map(move |p| a * p)).collect());
        }
        span.is_empty()
    }

    /// Products `A^{j₁}⋯A^{j_k}` in the given order.
    pub fn word_product(&self, word: &[usize]) -> Matrix<T> {
        word.iter().fold(Matrix::identity(self.dim), |acc, &j| &acc * &self.mats[j])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    pub violations: Vec<(usize, usize)>,
}

impl ModuleReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleReport {
    pub noncommuting: Vec<(usize, usize)>,
    pub conilpotent: bool,
}

impl ComoduleReport {
    pub fn is_ok(&self) -> bool {
        self.noncommuting.is_empty()
    }
}

/// A single exact verdict; failures carry the offending matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<T> {
    pub ok: bool,
    pub witness: Option<(String, Matrix<T>)>,
}

impl<T: Scalar> Verdict<T> {
    fn pass() -> Self {
        Self { ok: true, witness: None }
    }

    fn fail(label: String, m: Matrix<T>) -> Self {
        Self { ok: false, witness: Some((label, m)) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SaydReport<T> {
    pub ayd: Verdict<T>,
    pub stability: Verdict<T>,
    pub unimodular_stability: Verdict<T>,
}

impl<T: Scalar> SaydReport<T> {
    pub fn verdicts(&self) -> (bool, bool, bool) {
        (self.ayd.ok, self.stability.ok, self.unimodular_stability.ok)
    }
}

pub fn check_module<T: Scalar>(action: &ActionMatrices<T>) -> ModuleReport {
    ModuleReport { violations: action.module_violations() }
}

pub fn check_comodule<T: Scalar>(coaction: &CoactionMatrices<T>) -> ComoduleReport {
    ComoduleReport { noncommuting: coaction.noncommuting_pairs(), conilpotent: coaction.is_conilpotent() }
}

/// Action and coaction on the same space over the same algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SaydModule<T> {
    pub action: ActionMatrices<T>,
    pub coaction: CoactionMatrices<T>,
}

impl<T: Scalar> SaydModule<T> {
    pub fn new(action: ActionMatrices<T>, coaction: CoactionMatrices<T>) -> Result<Self> {
        if !Arc::ptr_eq(&action.lie, &coaction.lie) && action.lie != coaction.lie {
            return Err(Error::LieMismatch);
        }
        if action.dim != coaction.dim {
            return Err(Error::DimensionMismatch(format!(
                "action on dimension {} but coaction on dimension {}",
                action.dim, coaction.dim
            )));
        }
        Ok(Self { action, coaction })
    }

    pub fn lie(&self) -> &Arc<LieAlgebra<T>> {
        &self.action.lie
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }

    pub fn is_conilpotent(&self) -> bool {
        self.coaction.is_conilpotent()
    }

    pub fn delta_twist(&self, sign: i64) -> Self {
        Self { action: self.action.delta_twist(sign), coaction: self.coaction.clone() }
    }

    /// `[B_q, A^j] − Σ_s A^s C^j_{sq}` for all `(j, q)`.
    pub fn ayd_defect(&self, j: usize, q: usize) -> Matrix<T> {
        let lie = self.lie();
        let n = lie.dim();
        let lhs = self.action.b(q).commutator(self.coaction.a(j));
        let rhs = combine(self.dim(), (0..n).map(|s| (lie.c(s, q, j), self.coaction.a(s).clone())));
        &lhs - &rhs
    }

    pub fn stability_sum(&self) -> Matrix<T> {
        let n = self.lie().dim();
        (0..n).fold(Matrix::zeros(self.dim(), self.dim()), |acc, j| &acc + &(self.coaction.a(j) * self.action.b(j)))
    }

    pub fn unimodular_stability_sum(&self) -> Matrix<T> {
        let n = self.lie().dim();
        (0..n).fold(Matrix::zeros(self.dim(), self.dim()), |acc, j| &acc + &(self.action.b(j) * self.coaction.a(j)))
    }

    pub fn check(&self) -> SaydReport<T> {
        let n = self.lie().dim();
        let mut ayd = Verdict::pass();
        'outer: for j in 0..n {
            for q in 0..n {
                let d = self.ayd_defect(j, q);
                if !d.is_zero() {
                    ayd = Verdict::fail(format!("AYD defect at j={}, q={}", j + 1, q + 1), d);
                    break 'outer;
                }
            }
        }
        let s = self.stability_sum();
        let stability = if s.is_zero() { Verdict::pass() } else { Verdict::fail("sum_j A^j B_j".into(), s) };
        let u = self.unimodular_stability_sum();
        let unimodular_stability =
            if u.is_zero() { Verdict::pass() } else { Verdict::fail("sum_j B_j A^j".into(), u) };
        SaydReport { ayd, stability, unimodular_stability }
    }

    /// The action of `g̃ = g* ⋊ g` packaging the coaction as the `θ` part:
    /// `(A^1..A^N, B_1..B_N)` over [`LieAlgebra::semidirect_double`].
    pub fn double_action(&self) -> ActionMatrices<T> {
        let double = Arc::new(self.lie().semidirect_double());
        let mats = self.coaction.mats.iter().chain(&self.action.mats).cloned().collect();
        ActionMatrices { lie: double, dim: self.dim(), mats }
    }

    /// Data in the basis `Y_j = Σ_l γ^l_j X_l`, with the algebra transported by
    /// [`LieAlgebra::change_basis`].
    pub fn transport(&self, gamma: &Matrix<T>) -> Result<Self> {
        let lie = Arc::new(self.lie().change_basis(gamma)?);
        let inv = gamma.inverse()?;
        let n = lie.dim();
        let m = self.dim();
        let b = (0..n)
            .map(|q| combine(m, (0..n).map(|l| (gamma[(l, q)].clone(), self.action.b(l).clone()))))
            .collect();
        let a = (0..n)
            .map(|j| combine(m, (0..n).map(|l| (inv[(j, l)].clone(), self.coaction.a(l).clone()))))
            .collect();
        Ok(Self {
            action: ActionMatrices { lie: lie.clone(), dim: m, mats: b },
            coaction: CoactionMatrices { lie, dim: m, mats: a },
        })
    }
}

/// Kronecker tensor product of two AYD modules.
pub fn tensor_ayd<T: Scalar>(m1: &SaydModule<T>, m2: &SaydModule<T>) -> Result<SaydModule<T>> {
    if m1.lie() != m2.lie() {
        return Err(Error::LieMismatch);
    }
    let (i1, i2) = (Matrix::identity(m1.dim()), Matrix::identity(m2.dim()));
    let sum = |x: &Matrix<T>, y: &Matrix<T>| &x.kron(&i2) + &i1.kron(y);
    let n = m1.lie().dim();
    let dim = m1.dim() * m2.dim();
    let lie = m1.lie().clone();
    let b = (0..n).map(|j| sum(m1.action.b(j), m2.action.b(j))).collect();
    let a = (0..n).map(|j| sum(m1.coaction.a(j), m2.coaction.a(j))).collect();
    Ok(SaydModule {
        action: ActionMatrices { lie: lie.clone(), dim, mats: b },
        coaction: CoactionMatrices { lie, dim, mats: a },
    })
}

/// Quadratic comodule condition restricted to a linear solution space.
///
/// For `A(t) = Σ_a t_a s_a`, `[A^p(t), A^q(t)] = Σ_{a≤b} t_a t_b K_{ab}^{pq}`.
/// Each entry records whether every `K_{ab}^{pq}` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityReport {
    /// `(a, b, vanishes)` for `a ≤ b`.
    pub monomials: Vec<(usize, usize, bool)>,
}

impl CommutativityReport {
    /// The quadratic condition holds on the whole span.
    pub fn identically(&self) -> bool {
        self.monomials.iter().all(|m| m.2)
    }

    /// Monomials `t_a t_b` whose coefficient is nonzero.
    pub fn obstructions(&self) -> Vec<(usize, usize)> {
        self.monomials.iter().filter(|m| !m.2).map(|m| (m.0, m.1)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AydSolution<T> {
    /// Each solution is a tuple `(A^1..A^N)`.
    pub basis: Vec<Vec<Matrix<T>>>,
    pub commutativity: CommutativityReport,
}

impl<T: Scalar> AydSolution<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Coefficient rows for the linear conditions on `(A^1..A^N)`.
///
/// The unknown `(A^j)^i_k` sits at column `j·m² + i·m + k`.
fn ayd_system<T: Scalar>(action: &ActionMatrices<T>, with_stability: bool) -> Matrix<T> {
    let lie = &action.lie;
    let n = lie.dim();
    let m = action.dim;
    let var = |j: usize, i: usize, k: usize| j * m * m + i * m + k;
    let mut rows = Vec::new();
    for j in 0..n {
        for q in 0..n {
            let b = action.b(q);
            for i in 0..m {
                for k in 0..m {
                    // ([B_q, A^j] − Σ_s C^j_{sq} A^s)^i_k
                    let mut row = vec![T::zero(); n * m * m];
                    for l in 0..m {
                        row[var(j, l, k)] = row[var(j, l, k)].clone() + b[(i, l)].clone();
                        row[var(j, i, l)] = row[var(j, i, l)].clone() - b[(l, k)].clone();
                    }
                    for s in 0..n {
                        let c = lie.c(s, q, j);
                        if !c.is_zero() {
                            row[var(s, i, k)] = row[var(s, i, k)].clone() - c;
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    if with_stability {
        for i in 0..m {
            for k in 0..m {
                // (Σ_j A^j B_j)^i_k
                let mut row = vec![T::zero(); n * m * m];
                for (j, b) in action.mats.iter().enumerate() {
                    for l in 0..m {
                        row[var(j, i, l)] = row[var(j, i, l)].clone() + b[(l, k)].clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, n * m * m);
    }
    Matrix::from_rows(rows)
}

fn unpack<T: Scalar>(v: &[T], n: usize, m: usize) -> Vec<Matrix<T>> {
    (0..n).map(|j| Matrix::from_fn(m, m, |i, k| v[j * m * m + i * m + k].clone())).collect()
}

fn commutativity<T: Scalar>(basis: &[Vec<Matrix<T>>]) -> CommutativityReport {
    let mut monomials = Vec::new();
    for a in 0..basis.len() {
        for b in a..basis.len() {
            let n = basis[a].len();
            let mut vanishes = true;
            'pq: for p in 0..n {
                for q in p + 1..n {
                    let k = if a == b {
                        basis[a][p].commutator(&basis[a][q])
                    } else {
                        &basis[a][p].commutator(&basis[b][q]) + &basis[b][p].commutator(&basis[a][q])
                    };
                    if !k.is_zero() {
                        vanishes = false;
                        break 'pq;
                    }
                }
            }
            monomials.push((a, b, vanishes));
        }
    }
    CommutativityReport { monomials }
}

fn solve<T: Scalar>(action: &ActionMatrices<T>, with_stability: bool) -> AydSolution<T> {
    let n = action.lie.dim();
    let m = action.dim;
    let basis: Vec<Vec<Matrix<T>>> =
        ayd_system(action, with_stability).kernel().iter().map(|v| unpack(v, n, m)).collect();
    let commutativity = commutativity(&basis);
    AydSolution { basis, commutativity }
}

/// Basis of all coactions satisfying AYD and stability for a fixed action.
pub fn solve_ayd_linear<T: Scalar>(action: &ActionMatrices<T>) -> AydSolution<T> {
    solve(action, true)
}

/// Basis of all coactions satisfying AYD alone.
pub fn solve_ayd_only<T: Scalar>(action: &ActionMatrices<T>) -> AydSolution<T> {
    solve(action, false)
}

/// Linear combination of solution tuples.
pub fn combine_solutions<T: Scalar>(basis: &[Vec<Matrix<T>>], coeffs: &[T], n: usize, m: usize) -> Vec<Matrix<T>> {
    (0..n)
        .map(|j| combine(m, basis.iter().zip(coeffs).map(|(s, c)| (c.clone(), s[j].clone()))))
        .collect()
}

/// Shipped coefficient modules.
pub mod builtin {
    use super::*;
    use crate::lie::builtin::sl2_defining_matrices;

    /// `m`-dimensional space with zero action and zero coaction.
    pub fn trivial<T: Scalar>(lie: Arc<LieAlgebra<T>>, m: usize) -> SaydModule<T> {
        SaydModule { action: ActionMatrices::zero(lie.clone(), m), coaction: CoactionMatrices::zero(lie, m) }
    }

    /// The defining 2-dimensional representation of `sl(2)` as a right
    /// module, `B_j = X_j`.
    pub fn sl2_simple<T: Scalar>(lie: Arc<LieAlgebra<T>>) -> Result<ActionMatrices<T>> {
        ActionMatrices::new(lie, 2, sl2_defining_matrices())
    }

    /// Adjoint right action `v · X = [v, X]`, i.e. `(B_j)^i_k = C^k_{ij}`.
    pub fn adjoint<T: Scalar>(lie: Arc<LieAlgebra<T>>) -> ActionMatrices<T> {
        let n = lie.dim();
        let mats = (0..n).map(|j| Matrix::from_fn(n, n, |i, k| lie.c(i, j, k))).collect();
        ActionMatrices { lie, dim: n, mats }
    }
}
