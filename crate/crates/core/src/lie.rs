//! Lie algebras given by structure constants.
//!
//! A basis `X_1..X_N` is fixed and `[X_i, X_j] = Σ_k C^k_{ij} X_k`. Indices
//! are 0-based in code. Constants are stored sparsely and in full (both
//! `(i, j)` and `(j, i)`); the usual constructor takes only `i < j` entries
//! and completes them antisymmetrically.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<T> {
    dim: usize,
    names: Vec<String>,
    consts: BTreeMap<(usize, usize, usize), T>,
    // dense cache C[i][j] = list of (k, C^k_ij)
    table: Vec<Vec<Vec<(usize, T)>>>,
}

/// Result of [`LieAlgebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieValidation {
    /// `(i, j)` pairs (with `i <= j`) where `C^k_ij ≠ −C^k_ji` for some `k`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// `(i, j, l, m)` witnesses of a nonzero Jacobiator component.
    pub jacobi: Vec<(usize, usize, usize, usize)>,
}

impl LieValidation {
    pub fn is_ok(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

/// Vector in `g` or `g*` expressed in the fixed basis.
pub type Character<T> = Vec<T>;

impl<T: Scalar> LieAlgebra<T> {
    /// Builds from `i < j` entries `(i, j, k, C^k_ij)`, completing antisymmetrically.
    pub fn from_brackets(dim: usize, brackets: impl IntoIterator<Item = (usize, usize, usize, T)>) -> Result<Self> {
        let mut raw = Vec::new();
        for (i, j, k, v) in brackets {
            if i == j {
                if !v.is_zero() {
                    return Err(Error::MalformedSpec(format!("[X_{i}, X_{i}] must vanish")));
                }
                continue;
            }
            let (i, j, v) = if i < j { (i, j, v) } else { (j, i, -v) };
            raw.push((i, j, k, v.clone()));
            raw.push((j, i, k, -v));
        }
        Self::from_raw(dim, raw)
    }

    /// Builds from arbitrary entries without completion (used to express
    /// invalid input for validation).
    pub fn from_raw(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, T)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedSpec("dimension must be positive".into()));
        }
        let mut consts = BTreeMap::new();
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange(format!("({i}, {j}, {k}) with dim {dim}")));
            }
            if v.is_zero() {
                continue;
            }
            if consts.insert((i, j, k), v).is_some() {
                return Err(Error::MalformedSpec(format!("duplicate constant ({i}, {j}, {k})")));
            }
        }
        let names = (1..=dim).map(|i| format!("X{i}")).collect();
        Ok(Self::assemble(dim, names, consts))
    }

    fn assemble(dim: usize, names: Vec<String>, consts: BTreeMap<(usize, usize, usize), T>) -> Self {
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for (&(i, j, k), v) in &consts {
            table[i][j].push((k, v.clone()));
        }
        Self { dim, names, consts, table }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::MalformedSpec(format!("{} basis names for dimension {}", names.len(), self.dim)));
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `C^k_ij`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> T {
        self.consts.get(&(i, j, k)).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms of `[X_i, X_j]`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, T)] {
        &self.table[i][j]
    }

    /// All nonzero constants.
    pub fn constants(&self) -> impl Iterator<Item = (&(usize, usize, usize), &T)> {
        self.consts.iter()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].clone() + xi.clone() * yj.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.is_empty()
    }

    /// Checks antisymmetry and the Jacobi identity exactly.
    pub fn validate(&self) -> LieValidation {
        let n = self.dim;
        let mut report = LieValidation::default();
        for i in 0..n {
            for j in i..n {
                if (0..n).any(|k| !(self.c(i, j, k) + self.c(j, i, k)).is_zero()) {
                    report.antisymmetry.push((i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut s = T::zero();
                        for k in 0..n {
                            s = s + self.c(i, j, k) * self.c(k, l, m)
                                + self.c(j, l, k) * self.c(k, i, m)
                                + self.c(l, i, k) * self.c(k, j, m);
                        }
                        if !s.is_zero() {
                            report.jacobi.push((i, j, l, m));
                        }
                    }
                }
            }
        }
        report
    }

    /// `ad(X_i)` with `(ad X_i)[k][j] = C^k_ij`.
    pub fn ad(&self, i: usize) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k))
    }

    /// Coadjoint `L_{X_i}` on `g*` in the basis `θ^k`, the negative transpose of `ad(X_i)`.
    pub fn coad(&self, i: usize) -> Matrix<T> {
        -&self.ad(i).transpose()
    }

    pub fn adjoint_reps(&self) -> (Vec<Matrix<T>>, Vec<Matrix<T>>) {
        ((0..self.dim).map(|i| self.ad(i)).collect(), (0..self.dim).map(|i| self.coad(i)).collect())
    }

    /// `δ(X_i) = tr ad(X_i) = Σ_k C^k_ik`.
    pub fn modular_character(&self) -> Character<T> {
        (0..self.dim).map(|i| (0..self.dim).fold(T::zero(), |acc, k| acc + self.c(i, k, k))).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_character().iter().all(T::is_zero)
    }

    /// `g̃ = g* ⋊ g` with basis `(θ^1..θ^N, X_1..X_N)`.
    ///
    /// `g*` is abelian and `[θ^i, X_a] = −L_{X_a} θ^i = Σ_l C^i_{al} θ^l`.
    pub fn semidirect_double(&self) -> Self {
        let n = self.dim;
        let mut consts = BTreeMap::new();
        for (&(a, b, c), v) in &self.consts {
            consts.insert((n + a, n + b, n + c), v.clone());
        }
        for i in 0..n {
            for a in 0..n {
                for l in 0..n {
                    let v = self.c(a, l, i);
                    if !v.is_zero() {
                        consts.insert((i, n + a, l), v.clone());
                        consts.insert((n + a, i, l), -v);
                    }
                }
            }
        }
        let names = self
            .names
            .iter()
            .map(|s| format!("{s}*"))
            .chain(self.names.iter().cloned())
            .collect();
        Self::assemble(2 * n, names, consts)
    }

    /// Structure constants in the basis `Y_j = Σ_l γ[l][j] X_l`.
    pub fn change_basis(&self, gamma: &Matrix<T>) -> Result<Self> {
        let n = self.dim;
        if gamma.rows() != n || gamma.cols() != n {
            return Err(Error::DimensionMismatch(format!("basis change must be {n}x{n}")));
        }
        let inv = gamma.inverse()?;
        let mut consts = BTreeMap::new();
        for p in 0..n {
            for q in 0..n {
                let y_p = gamma.column(p);
                let y_q = gamma.column(q);
                let br = self.bracket(&y_p, &y_q);
                let coords = inv.apply(&br);
                for (r, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        consts.insert((p, q, r), v);
                    }
                }
            }
        }
        let names = (1..=n).map(|i| format!("Y{i}")).collect();
        Ok(Self::assemble(n, names, consts))
    }

    /// Renames the basis to the input's names (used by round-trip comparisons).
    pub fn same_constants(&self, other: &Self) -> bool {
        self.dim == other.dim && self.consts == other.consts
    }
}

/// Built-in algebras shipped as data.
pub mod builtin {
    use super::*;

    pub fn abelian<T: Scalar>(n: usize) -> LieAlgebra<T> {
        LieAlgebra::from_raw(n, std::iter::empty()).expect("abelian algebra")
    }

    /// Two-dimensional nonabelian algebra `[X_1, X_2] = X_2`.
    pub fn nonabelian2<T: Scalar>() -> LieAlgebra<T> {
        LieAlgebra::from_brackets(2, [(0, 1, 1, T::one())]).expect("aff(1)")
    }

    /// Heisenberg algebra `[X_1, X_2] = X_3`.
    pub fn heisenberg<T: Scalar>() -> LieAlgebra<T> {
        LieAlgebra::from_brackets(3, [(0, 1, 2, T::one())]).expect("heisenberg")
    }

    /// `sl(2)` with `X_1 = e`, `X_2 = f`, `X_3 = h`:
    /// `[X_1,X_2] = X_3`, `[X_3,X_1] = 2X_1`, `[X_3,X_2] = −2X_2`.
    pub fn sl2<T: Scalar>() -> LieAlgebra<T> {
        LieAlgebra::from_brackets(3, [(0, 1, 2, T::one()), (2, 0, 0, T::int(2)), (2, 1, 1, T::int(-2))]).expect("sl2")
    }

    /// The 2×2 matrices `X_1, X_2, X_3` realising [`sl2`].
    pub fn sl2_defining_matrices<T: Scalar>() -> Vec<Matrix<T>> {
        vec![
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[1, 0]]),
            Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        ]
    }

    /// Resolves a registry name: `abelian<n>`, `nonabelian2`, `heisenberg`, `sl2`.
    pub fn by_name<T: Scalar>(name: &str) -> Option<LieAlgebra<T>> {
        match name {
            "sl2" => Some(sl2()),
            "heisenberg" | "heisenberg3" => Some(heisenberg()),
            "nonabelian2" | "aff1" => Some(nonabelian2()),
            _ => {
                let n: usize = name.strip_prefix("abelian")?.parse().ok()?;
                (n > 0).then(|| abelian(n))
            }
        }
    }

    pub const NAMES: &[&str] = &["sl2", "heisenberg", "nonabelian2", "abelian<n>"];
}
