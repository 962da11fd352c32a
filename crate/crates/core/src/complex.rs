//! Chevalley–Eilenberg and Koszul differentials, mixed and total complexes.
//!
//! Coefficient spaces are `Λ^p ⊗ V` with basis `(e_S, v^i)` at position
//! `index(S)·m + i`. Matrices act on coefficient columns.
//!
//! * cochains `W^p = Λ^p g* ⊗ V`:
//!   `d_CE(β⊗v) = d_dR β ⊗ v − Σ_j θ^j∧β ⊗ v·X_j`,
//!   `d_K(α⊗v) = Σ_j ι_{X_j} α ⊗ v◁θ^j`;
//! * chains `C_p = Λ^p g ⊗ V`:
//!   `∂_CE(Y_0∧…∧Y_{p−1}⊗v) = Σ_r (−1)^r (…Ŷ_r…)⊗v·Y_r
//!   + Σ_{r<s} (−1)^{r+s} [Y_r,Y_s]∧(…Ŷ_r…Ŷ_s…)⊗v`,
//!   `∂_K(ξ⊗v) = Σ_j X_j∧ξ ⊗ v◁θ^j`.

use crate::error::{Error, Result};
use crate::exterior::{contract, d_dr_mask, indices, left_mul, ExteriorBasis};
use crate::linalg::Matrix;
use crate::sayd::{check_comodule, check_module, SaydModule};
use crate::scalar::{sign, Scalar};

/// A differential on a finite graded space.
///
/// `diffs[n]` leaves degree `n` and lands in degree `n + step`; maps whose
/// target is out of range have zero rows. A periodic complex has two
/// degrees and `diffs[n]` lands in degree `1 − n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedComplex<T> {
    pub name: String,
    pub dims: Vec<usize>,
    pub diffs: Vec<Matrix<T>>,
    pub step: i32,
    pub periodic: bool,
}

impl<T: Scalar> GradedComplex<T> {
    fn target(&self, n: usize) -> Option<usize> {
        if self.periodic {
            return Some(1 - n);
        }
        let t = n as i64 + i64::from(self.step);
        (t >= 0 && (t as usize) < self.dims.len()).then_some(t as usize)
    }

    fn source(&self, n: usize) -> Option<usize> {
        if self.periodic {
            return Some(1 - n);
        }
        let s = n as i64 - i64::from(self.step);
        (s >= 0 && (s as usize) < self.dims.len()).then_some(s as usize)
    }

    pub fn validate_shapes(&self) -> Result<()> {
        if self.diffs.len() != self.dims.len() || (self.periodic && self.dims.len() != 2) {
            return Err(Error::DimensionMismatch(format!(
                "{}: {} differentials for {} degrees",
                self.name,
                self.diffs.len(),
                self.dims.len()
            )));
        }
        for (n, d) in self.diffs.iter().enumerate() {
            let rows = self.target(n).map_or(0, |t| self.dims[t]);
            if d.cols() != self.dims[n] || d.rows() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "{}: differential at degree {n} is {}x{}, expected {rows}x{}",
                    self.name,
                    d.rows(),
                    d.cols(),
                    self.dims[n]
                )));
            }
        }
        Ok(())
    }

    /// Degrees `n` where `D∘D` leaving `n` is nonzero.
    pub fn square_defects(&self) -> Vec<usize> {
        (0..self.dims.len())
            .filter(|&n| match self.target(n) {
                Some(t) => !(&self.diffs[t] * &self.diffs[n]).is_zero(),
                None => false,
            })
            .collect()
    }

    pub fn squares_to_zero(&self) -> bool {
        self.square_defects().is_empty()
    }

    /// `dim ker D_n − rank D_{n−step}` per degree.
    pub fn cohomology_dims(&self) -> Result<Vec<usize>> {
        self.validate_shapes()?;
        if let Some(&n) = self.square_defects().first() {
            return Err(Error::NotDifferential(format!("{}: D∘D ≠ 0 leaving degree {n}", self.name)));
        }
        let ranks: Vec<usize> = self.diffs.iter().map(Matrix::rank).collect();
        Ok((0..self.dims.len())
            .map(|n| self.dims[n] - ranks[n] - self.source(n).map_or(0, |s| ranks[s]))
            .collect())
    }

    /// `Σ (−1)^n dim H^n = Σ (−1)^n dim C^n`.
    pub fn euler_identity_holds(&self, betti: &[usize]) -> bool {
        let alt = |v: &[usize]| v.iter().enumerate().map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) }).sum::<i64>();
        alt(betti) == alt(&self.dims)
    }
}

/// Two differentials of degree `+1` (`up`) and `−1` (`down`) on `⊕_p Λ^p ⊗ V`.
///
/// `up[p]: p → p+1` and `down[p]: p → p−1`, with zero-row matrices at the ends.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedData<T> {
    pub name: String,
    pub dims: Vec<usize>,
    pub up: Vec<Matrix<T>>,
    pub down: Vec<Matrix<T>>,
}

impl<T: Scalar> MixedData<T> {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn up_squares_to_zero(&self) -> bool {
        (0..self.top()).all(|p| (&self.up[p + 1] * &self.up[p]).is_zero())
    }

    pub fn down_squares_to_zero(&self) -> bool {
        (2..=self.top()).all(|p| (&self.down[p - 1] * &self.down[p]).is_zero())
    }

    /// `up∘down + down∘up` vanishes on every degree.
    pub fn anticommute(&self) -> bool {
        (0..=self.top()).all(|p| {
            let dim = self.dims[p];
            let ud = if p > 0 { &self.up[p - 1] * &self.down[p] } else { Matrix::zeros(dim, dim) };
            let du = if p < self.top() { &self.down[p + 1] * &self.up[p] } else { Matrix::zeros(dim, dim) };
            (&ud + &du).is_zero()
        })
    }

    /// `(up + down)² = 0`.
    pub fn total_squares_to_zero(&self) -> bool {
        self.up_squares_to_zero() && self.down_squares_to_zero() && self.anticommute()
    }

    /// The complex `(⊕_p, up)`.
    pub fn up_complex(&self) -> GradedComplex<T> {
        GradedComplex { name: format!("{} (+1)", self.name), dims: self.dims.clone(), diffs: self.up.clone(), step: 1, periodic: false }
    }

    /// The complex `(⊕_p, down)`.
    pub fn down_complex(&self) -> GradedComplex<T> {
        GradedComplex { name: format!("{} (−1)", self.name), dims: self.dims.clone(), diffs: self.down.clone(), step: -1, periodic: false }
    }

    /// Staircase total complex in degrees `0..=top_degree`.
    ///
    /// Degree `n` is `⊕_{i≥0} Λ^{n−2i}`; `up` stays in column `i` and `down`
    /// moves to column `i + 1`. The last degree has no outgoing map built,
    /// so its cohomology is not meaningful; use [`MixedData::hc_dims`].
    pub fn staircase(&self, top_degree: usize) -> GradedComplex<T> {
        let top = self.top();
        let comps = |n: usize| -> Vec<usize> { (0..=n / 2).map(|i| n - 2 * i).filter(|&p| p <= top).collect() };
        let offsets = |n: usize| -> Vec<(usize, usize)> {
            let mut off = 0;
            comps(n)
                .into_iter()
                .map(|p| {
                    let o = off;
                    off += self.dims[p];
                    (p, o)
                })
                .collect()
        };
        let dims: Vec<usize> = (0..=top_degree).map(|n| comps(n).iter().map(|&p| self.dims[p]).sum()).collect();
        let diffs = (0..=top_degree)
            .map(|n| {
                if n == top_degree {
                    return Matrix::zeros(0, dims[n]);
                }
                let mut d = Matrix::zeros(dims[n + 1], dims[n]);
                let target = offsets(n + 1);
                let find = |p: usize| target.iter().find(|(q, _)| *q == p).map(|(_, o)| *o);
                for (p, col) in offsets(n) {
                    if p < top {
                        if let Some(row) = find(p + 1) {
                            d.set_block(row, col, &self.up[p]);
                        }
                    }
                    if p > 0 {
                        // column i+1 holds p−1 in degree n+1; within degree n+1
                        // a given p appears once, so matching by p is unique.
                        if let Some(row) = find(p - 1) {
                            d.set_block(row, col, &self.down[p]);
                        }
                    }
                }
                d
            })
            .collect();
        GradedComplex { name: format!("{} staircase", self.name), dims, diffs, step: 1, periodic: false }
    }

    /// Cyclic dimensions `HC^0..=HC^max_degree`.
    pub fn hc_dims(&self, max_degree: usize) -> Result<Vec<usize>> {
        let mut h = self.staircase(max_degree + 1).cohomology_dims()?;
        h.pop();
        Ok(h)
    }

    /// Two-periodic complex `E_even ⇄ E_odd` with `D = up + down`.
    pub fn periodic(&self) -> GradedComplex<T> {
        let top = self.top();
        let parity_offsets = |par: usize| -> Vec<(usize, usize)> {
            let mut off = 0;
            (0..=top)
                .filter(|p| p % 2 == par)
                .map(|p| {
                    let o = off;
                    off += self.dims[p];
                    (p, o)
                })
                .collect()
        };
        let dim_of = |par: usize| (0..=top).filter(|p| p % 2 == par).map(|p| self.dims[p]).sum::<usize>();
        let dims = vec![dim_of(0), dim_of(1)];
        let diffs = (0..2)
            .map(|par| {
                let mut d = Matrix::zeros(dims[1 - par], dims[par]);
                let target = parity_offsets(1 - par);
                let find = |p: usize| target.iter().find(|(q, _)| *q == p).map(|(_, o)| *o);
                for (p, col) in parity_offsets(par) {
                    if p < top {
                        d.set_block(find(p + 1).expect("adjacent degree"), col, &self.up[p]);
                    }
                    if p > 0 {
                        d.set_block(find(p - 1).expect("adjacent degree"), col, &self.down[p]);
                    }
                }
                d
            })
            .collect();
        GradedComplex { name: format!("{} periodic", self.name), dims, diffs, step: 1, periodic: true }
    }

    pub fn hp_dims(&self) -> Result<Vec<usize>> {
        self.periodic().cohomology_dims()
    }
}

/// Which side of the duality a mixed complex lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Λg ⊗ V` with `up = ∂_K`, `down = ∂_CE`.
    Chain,
    /// `Λg* ⊗ V` with `up = d_CE`, `down = d_K`.
    Cochain,
}

fn add<T: Scalar>(m: &mut Matrix<T>, row: usize, col: usize, v: T) {
    if !v.is_zero() {
        m[(row, col)] = m[(row, col)].clone() + v;
    }
}

/// `(d_CE, d_K)` without checking the coefficient laws.
pub fn cochain_mixed_unchecked<T: Scalar>(v: &SaydModule<T>) -> MixedData<T> {
    let lie = v.lie();
    let n = lie.dim();
    let m = v.dim();
    let ext = ExteriorBasis::new(n).expect("dimension within mask range");
    let dims: Vec<usize> = (0..=n).map(|p| ext.dim(p) * m).collect();
    let mut up = Vec::with_capacity(n + 1);
    let mut down = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut d = Matrix::zeros(if p < n { dims[p + 1] } else { 0 }, dims[p]);
        if p < n {
            for (s, &mask) in ext.basis(p).iter().enumerate() {
                let dr = d_dr_mask(lie, mask);
                for i in 0..m {
                    let col = s * m + i;
                    for (neg, r, c) in &dr {
                        add(&mut d, ext.index_of(*r) * m + i, col, sign::<T>(*neg) * c.clone());
                    }
                    for j in 0..n {
                        let Some((neg, r)) = left_mul(j, mask) else { continue };
                        let b = v.action.b(j);
                        for k in 0..m {
                            add(&mut d, ext.index_of(r) * m + k, col, -(sign::<T>(neg) * b[(i, k)].clone()));
                        }
                    }
                }
            }
        }
        up.push(d);
        let mut k_mat = Matrix::zeros(if p > 0 { dims[p - 1] } else { 0 }, dims[p]);
        if p > 0 {
            for (s, &mask) in ext.basis(p).iter().enumerate() {
                for j in 0..n {
                    let Some((neg, r)) = contract(j, mask) else { continue };
                    let a = v.coaction.a(j);
                    for i in 0..m {
                        for k in 0..m {
                            add(&mut k_mat, ext.index_of(r) * m + k, s * m + i, sign::<T>(neg) * a[(i, k)].clone());
                        }
                    }
                }
            }
        }
        down.push(k_mat);
    }
    MixedData { name: "cochain".into(), dims, up, down }
}

/// `(∂_K, ∂_CE)` without checking the coefficient laws.
pub fn chain_mixed_unchecked<T: Scalar>(v: &SaydModule<T>) -> MixedData<T> {
    let lie = v.lie();
    let n = lie.dim();
    let m = v.dim();
    let ext = ExteriorBasis::new(n).expect("dimension within mask range");
    let dims: Vec<usize> = (0..=n).map(|p| ext.dim(p) * m).collect();
    let mut up = Vec::with_capacity(n + 1);
    let mut down = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut k_mat = Matrix::zeros(if p < n { dims[p + 1] } else { 0 }, dims[p]);
        if p < n {
            for (s, &mask) in ext.basis(p).iter().enumerate() {
                for j in 0..n {
                    let Some((neg, r)) = left_mul(j, mask) else { continue };
                    let a = v.coaction.a(j);
                    for i in 0..m {
                        for k in 0..m {
                            add(&mut k_mat, ext.index_of(r) * m + k, s * m + i, sign::<T>(neg) * a[(i, k)].clone());
                        }
                    }
                }
            }
        }
        up.push(k_mat);
        let mut d = Matrix::zeros(if p > 0 { dims[p - 1] } else { 0 }, dims[p]);
        if p > 0 {
            for (s, &mask) in ext.basis(p).iter().enumerate() {
                let idx = indices(mask);
                for i in 0..m {
                    let col = s * m + i;
                    for (r, &yr) in idx.iter().enumerate() {
                        let rest = mask & !(1 << yr);
                        let b = v.action.b(yr);
                        for k in 0..m {
                            add(&mut d, ext.index_of(rest) * m + k, col, sign::<T>(r % 2 == 1) * b[(i, k)].clone());
                        }
                    }
                    for (r, &yr) in idx.iter().enumerate() {
                        for (t, &yt) in idx.iter().enumerate().skip(r + 1) {
                            let rest = mask & !(1 << yr) & !(1 << yt);
                            for (c, val) in lie.bracket_terms(yr, yt) {
                                let Some((neg, target)) = left_mul(*c, rest) else { continue };
                                let s_total = ((r + t) % 2 == 1) ^ neg;
                                add(&mut d, ext.index_of(target) * m + i, col, sign::<T>(s_total) * val.clone());
                            }
                        }
                    }
                }
            }
        }
        down.push(d);
    }
    MixedData { name: "chain".into(), dims, up, down }
}

fn require_laws<T: Scalar>(v: &SaydModule<T>) -> Result<()> {
    if let Some(&(p, q)) = check_module(&v.action).violations.first() {
        return Err(Error::InvalidModule(p + 1, q + 1));
    }
    if let Some(&(a, b)) = check_comodule(&v.coaction).noncommuting.first() {
        return Err(Error::InvalidComodule(a + 1, b + 1));
    }
    Ok(())
}

/// `(d_CE, d_K)` on `Λg* ⊗ V`; refused unless `V` is a module and comodule.
pub fn build_cochain_diffs<T: Scalar>(v: &SaydModule<T>) -> Result<MixedData<T>> {
    require_laws(v)?;
    Ok(cochain_mixed_unchecked(v))
}

/// `(∂_K, ∂_CE)` on `Λg ⊗ V`; refused unless `V` is a module and comodule.
pub fn build_chain_diffs<T: Scalar>(v: &SaydModule<T>) -> Result<MixedData<T>> {
    require_laws(v)?;
    Ok(chain_mixed_unchecked(v))
}

pub fn build_mixed<T: Scalar>(v: &SaydModule<T>, side: Side) -> Result<MixedData<T>> {
    match side {
        Side::Chain => build_chain_diffs(v),
        Side::Cochain => build_cochain_diffs(v),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideReport {
    pub up_squared_zero: bool,
    pub down_squared_zero: bool,
    pub anticommute: bool,
    /// What the coefficient verdicts predict for `(up + down)² = 0`.
    pub predicted: bool,
}

impl SideReport {
    pub fn total_squared_zero(&self) -> bool {
        self.up_squared_zero && self.down_squared_zero && self.anticommute
    }

    pub fn agrees(&self) -> bool {
        self.total_squared_zero() == self.predicted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedReport {
    pub chain: SideReport,
    pub cochain: SideReport,
    pub module: bool,
    pub comodule: bool,
    pub ayd: bool,
    pub stability: bool,
    pub unimodular_stability: bool,
}

/// Builds both mixed pairs and compares `(up + down)² = 0` with the
/// coefficient verdicts: stability predicts the chain side, unimodular
/// stability the cochain side.
pub fn mixed_check<T: Scalar>(v: &SaydModule<T>) -> MixedReport {
    let module = check_module(&v.action).is_ok();
    let comodule = check_comodule(&v.coaction).is_ok();
    let (ayd, stability, unimodular_stability) = v.check().verdicts();
    let side = |data: MixedData<T>, predicted: bool| SideReport {
        up_squared_zero: data.up_squares_to_zero(),
        down_squared_zero: data.down_squares_to_zero(),
        anticommute: data.anticommute(),
        predicted,
    };
    let base = module && comodule && ayd;
    MixedReport {
        chain: side(chain_mixed_unchecked(v), base && stability),
        cochain: side(cochain_mixed_unchecked(v), base && unimodular_stability),
        module,
        comodule,
        ayd,
        stability,
        unimodular_stability,
    }
}

/// Staircase and periodic total complexes; refused unless `(up + down)² = 0`.
pub fn total_complexes<T: Scalar>(
    v: &SaydModule<T>,
    side: Side,
    top_degree: usize,
) -> Result<(GradedComplex<T>, GradedComplex<T>)> {
    let data = build_mixed(v, side)?;
    if !data.total_squares_to_zero() {
        return Err(Error::NotMixed(format!("{} differentials do not anticommute", data.name)));
    }
    Ok((data.staircase(top_degree), data.periodic()))
}
