//! Coinvariant filtration `F_0 ⊆ F_1 ⊆ … ⊆ V` of a conilpotent comodule.
//!
//! `F_0 = {x : x A^j = 0 ∀j}` and `F_{p+1} = {x : x A^j ∈ F_p ∀j}`.

use crate::complex::chain_mixed_unchecked;
use crate::error::{Error, Result};
use crate::exterior::ExteriorBasis;
use crate::linalg::{span_rank, Matrix};
use crate::sayd::{CoactionMatrices, SaydModule};
use crate::scalar::Scalar;

use super::chain::{ChainTensor, CocyclicModule};

#[derive(Clone, Debug, PartialEq)]
pub struct Filtration<T> {
    pub dim: usize,
    /// Row bases of `F_0, F_1, …`, ending with `V`.
    pub levels: Vec<Vec<Vec<T>>>,
}

fn left_kernel_of_blocks<T: Scalar>(blocks: &[Matrix<T>], m: usize) -> Vec<Vec<T>> {
    let nonempty: Vec<&Matrix<T>> = blocks.iter().filter(|b| b.cols() > 0).collect();
    if nonempty.is_empty() {
        return (0..m)
            .map(|i| {
                let mut e = vec![T::zero(); m];
                e[i] = T::one();
                e
            })
            .collect();
    }
    Matrix::hstack(&nonempty).left_kernel()
}

pub fn filtration<T: Scalar>(c: &CoactionMatrices<T>) -> Result<Filtration<T>> {
    if !c.is_conilpotent() {
        return Err(Error::NotConilpotent);
    }
    let m = c.dim();
    let mut levels = Vec::new();
    let mut current = left_kernel_of_blocks(c.mats(), m);
    loop {
        levels.push(current.clone());
        if current.len() == m {
            break;
        }
        // columns spanning the annihilator of F_p
        let annihilator: Vec<Vec<T>> = if current.is_empty() {
            (0..m)
                .map(|i| {
                    let mut e = vec![T::zero(); m];
                    e[i] = T::one();
                    e
                })
                .collect()
        } else {
            Matrix::from_rows(current.clone()).kernel()
        };
        let p = Matrix::from_rows(annihilator).transpose();
        let blocks: Vec<Matrix<T>> = c.mats().iter().map(|a| a * &p).collect();
        let next = left_kernel_of_blocks(&blocks, m);
        if next.len() == current.len() {
            return Err(Error::NotConilpotent);
        }
        current = next;
    }
    Ok(Filtration { dim: m, levels })
}

/// Whether every vector lies in the row span of `basis`.
pub fn in_span<T: Scalar>(vectors: &[Vec<T>], basis: &[Vec<T>], dim: usize) -> bool {
    let r = span_rank(basis, dim);
    vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).all(|v| {
        let mut all = basis.to_vec();
        all.push(v.clone());
        span_rank(&all, dim) == r
    })
}

impl<T: Scalar> Filtration<T> {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `F_p`, with `F_{−1} = 0` and `F_p = V` past the end.
    pub fn level(&self, p: isize) -> Vec<Vec<T>> {
        if p < 0 {
            return Vec::new();
        }
        self.levels.get(p as usize).cloned().unwrap_or_else(|| self.levels.last().cloned().unwrap_or_default())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn is_increasing(&self) -> bool {
        self.levels.windows(2).all(|w| in_span(&w[0], &w[1], self.dim))
    }

    /// Whether every `V`-component of `x` lies in `F_p`.
    pub fn contains(&self, x: &ChainTensor<T>, p: isize) -> bool {
        let comps: Vec<Vec<T>> = x.v_components(self.dim).into_values().collect();
        in_span(&comps, &self.level(p), self.dim)
    }

    /// `∂_K(Λ^n g ⊗ F_p) ⊆ Λ^{n+1} g ⊗ F_{p−1}` for every `n` and `p`.
    pub fn koszul_drops_level(&self, v: &SaydModule<T>) -> bool {
        let data = chain_mixed_unchecked(v);
        let n = v.lie().dim();
        let ext = ExteriorBasis::new(n).expect("dimension within mask range");
        let m = self.dim;
        for p in 0..self.levels.len() as isize {
            for deg in 0..n {
                for s in 0..ext.dim(deg) {
                    for x in &self.level(p) {
                        let mut col = vec![T::zero(); data.dims[deg]];
                        for (k, xk) in x.iter().enumerate() {
                            col[s * m + k] = xk.clone();
                        }
                        let image = data.up[deg].apply(&col);
                        let comps: Vec<Vec<T>> = image.chunks(m).map(<[T]>::to_vec).collect();
                        if !in_span(&comps, &self.level(p - 1), m) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Preservation verdicts for the cyclic operators on sampled tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub b: bool,
    pub connes_b: bool,
    pub tau: bool,
    pub extra_degeneracy: bool,
}

impl PreservationReport {
    pub fn all(&self) -> bool {
        self.b && self.connes_b && self.tau && self.extra_degeneracy
    }
}

/// Checks that `b`, `B`, `τ`, `σ₋₁` map `F_p ⊗ U(g)^{⊗q}` into
/// `F_p ⊗ U(g)^{⊗q'}`. Each sample is `(p, tensor)` with components in `F_p`.
pub fn preservation<T: Scalar>(
    c: &CocyclicModule<T>,
    f: &Filtration<T>,
    samples: &[(isize, ChainTensor<T>)],
) -> Result<PreservationReport> {
    let mut report = PreservationReport { b: true, connes_b: true, tau: true, extra_degeneracy: true };
    for (p, x) in samples {
        debug_assert!(f.contains(x, *p));
        report.b &= f.contains(&c.b(x)?, *p);
        report.tau &= f.contains(&c.tau(x)?, *p);
        if x.level() > 0 {
            report.connes_b &= f.contains(&c.connes_b(x)?, *p);
            report.extra_degeneracy &= f.contains(&c.extra_degeneracy(x)?, *p);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lie::builtin::*;
    use crate::sayd::builtin::trivial;
    use crate::scalar::{q, Q};
    use crate::weil::build_truncated_weil;

    #[test]
    fn trivial_coaction_is_all_coinvariant() {
        let t = trivial(Arc::new(sl2::<Q>()), 3);
        let f = filtration(&t.coaction).unwrap();
        assert_eq!(f.dims(), vec![3]);
    }

    #[test]
    fn weil_filtration() {
        let w = build_truncated_weil(Arc::new(sl2::<Q>()), 2);
        let f = filtration(&w.coaction).unwrap();
        assert_eq!(f.dims(), vec![3, 4]);
        let theta = |i: usize| {
            let mut e = vec![q(0); 4];
            e[i] = q(1);
            e
        };
        assert!(in_span(&[theta(1), theta(2), theta(3)], &f.levels[0], 4));
        assert!(!in_span(&[theta(0)], &f.levels[0], 4));
        assert!(f.is_increasing());
        assert!(f.koszul_drops_level(&w));
    }

    #[test]
    fn deeper_weil_filtration_exhausts() {
        let w = build_truncated_weil(Arc::new(heisenberg::<Q>()), 4);
        let f = filtration(&w.coaction).unwrap();
        assert_eq!(f.dims(), vec![6, 9, 10]);
        assert!(f.koszul_drops_level(&w));
    }
}
