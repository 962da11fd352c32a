//! Poincaré transport between chains and cochains.
//!
//! With `ϖ = X_1∧…∧X_N`, `𝔇_P(θ^T) = ι(θ^T)ϖ = ε(T, T^c) X_{T^c}` where
//! `ε(A, B)` is the sign of the shuffle sorting `A` followed by `B`. The
//! inverse is `X_S ↦ ε(S^c, S) θ^{S^c}`, i.e. `⟨η, 𝔇_P⁻¹(ξ)⟩ = ⟨η∧ξ, ω*⟩`.
//!
//! Chains carry `V` and cochains carry `V ⊗ ℂ_{−δ}`.

use crate::complex::{chain_mixed_unchecked, cochain_mixed_unchecked, MixedData};
use crate::error::Result;
use crate::exterior::{shuffle_sign, ExteriorBasis};
use crate::linalg::Matrix;
use crate::sayd::SaydModule;
use crate::scalar::{sign, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct DualityMap<T> {
    pub n: usize,
    /// `forward[p]: Λ^p g* → Λ^{N−p} g`.
    pub forward: Vec<Matrix<T>>,
    /// `inverse[p]: Λ^p g → Λ^{N−p} g*`.
    pub inverse: Vec<Matrix<T>>,
}

impl<T: Scalar> DualityMap<T> {
    pub fn new(n: usize) -> Result<Self> {
        let ext = ExteriorBasis::new(n)?;
        let full: u64 = (1u64 << n) - 1;
        let build = |p: usize, front_is_source: bool| {
            let mut m = Matrix::zeros(ext.dim(n - p), ext.dim(p));
            for (col, &s) in ext.basis(p).iter().enumerate() {
                let c = full & !s;
                let neg = if front_is_source { shuffle_sign(s, c) } else { shuffle_sign(c, s) };
                m[(ext.index_of(c), col)] = sign::<T>(neg);
            }
            m
        };
        Ok(Self {
            n,
            forward: (0..=n).map(|p| build(p, true)).collect(),
            inverse: (0..=n).map(|p| build(p, false)).collect(),
        })
    }

    /// `𝔇_P⁻¹ ⊗ id_V: Λ^p g ⊗ V → Λ^{N−p} g* ⊗ V`.
    pub fn transport(&self, p: usize, m: usize) -> Matrix<T> {
        self.inverse[p].kron(&Matrix::identity(m))
    }
}

/// Per-degree transport matrices `Λ^p g ⊗ V → Λ^{N−p} g* ⊗ (V ⊗ ℂ_{−δ})`.
pub fn poincare_transport<T: Scalar>(v: &SaydModule<T>) -> Result<Vec<Matrix<T>>> {
    let n = v.lie().dim();
    let d = DualityMap::new(n)?;
    Ok((0..=n).map(|p| d.transport(p, v.dim())).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquareFailure<T> {
    /// Chain degree `p` of the source.
    pub degree: usize,
    pub witness: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DualityReport<T> {
    /// For chain degree `p ≥ 1`, whether `d_CE∘𝔇⁻¹ = (−1)^{N−p−1}·𝔇⁻¹∘∂_CE`.
    pub ce: Vec<(usize, bool)>,
    /// For chain degree `p < N`, whether `d_K∘𝔇⁻¹ = (−1)^{N−p−1}·𝔇⁻¹∘∂_K`.
    pub koszul: Vec<(usize, bool)>,
    pub failures: Vec<SquareFailure<T>>,
}

impl<T: Scalar> DualityReport<T> {
    pub fn ce_ok(&self) -> bool {
        self.ce.iter().all(|(_, ok)| *ok)
    }

    pub fn koszul_ok(&self) -> bool {
        self.koszul.iter().all(|(_, ok)| *ok)
    }
}

fn first_differing_column<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Vec<T>> {
    (0..a.cols()).find(|&j| a.column(j) != b.column(j)).map(|j| {
        let mut e = vec![T::zero(); a.cols()];
        e[j] = T::one();
        e
    })
}

/// Sign relating the two sides in chain degree `p`; both squares share it.
pub fn square_sign<T: Scalar>(n: usize, p: usize) -> T {
    sign::<T>((n + 1 - p) % 2 == 1)
}

/// The chain mixed complex of `V` and the cochain mixed complex of `V ⊗ ℂ_{−δ}`.
pub fn dual_pair<T: Scalar>(v: &SaydModule<T>) -> (MixedData<T>, MixedData<T>) {
    (chain_mixed_unchecked(v), cochain_mixed_unchecked(&v.delta_twist(-1)))
}

pub fn duality_square_check<T: Scalar>(v: &SaydModule<T>) -> Result<DualityReport<T>> {
    let n = v.lie().dim();
    let tr = poincare_transport(v)?;
    let (chain, cochain) = dual_pair(v);
    let mut report = DualityReport { ce: Vec::new(), koszul: Vec::new(), failures: Vec::new() };
    for p in 1..=n {
        let lhs = &cochain.up[n - p] * &tr[p];
        let rhs = (&tr[p - 1] * &chain.down[p]).scale(&square_sign::<T>(n, p));
        let ok = lhs == rhs;
        if !ok {
            report.failures.push(SquareFailure { degree: p, witness: first_differing_column(&lhs, &rhs).unwrap_or_default() });
        }
        report.ce.push((p, ok));
    }
    for p in 0..n {
        let lhs = &cochain.down[n - p] * &tr[p];
        let rhs = (&tr[p + 1] * &chain.up[p]).scale(&square_sign::<T>(n, p));
        let ok = lhs == rhs;
        if !ok {
            report.failures.push(SquareFailure { degree: p, witness: first_differing_column(&lhs, &rhs).unwrap_or_default() });
        }
        report.koszul.push((p, ok));
    }
    Ok(report)
}
