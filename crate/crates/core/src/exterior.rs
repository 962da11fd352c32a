//! Exterior algebra on `N` generators.
//!
//! A basis monomial `e_{i₁}∧…∧e_{i_p}` with `i₁ < … < i_p` is a bit mask.
//! The same combinatorics serves `Λg*` (generators `θ^i`) and `Λg`
//! (generators `X_i`). Within each degree, monomials are ordered
//! lexicographically on their index tuples.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{sign, Scalar};

pub type Mask = u64;

/// Maximum number of generators (masks are `u64`).
pub const MAX_GENERATORS: usize = 63;

pub fn indices(mask: Mask) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(idx: &[usize]) -> Mask {
    idx.iter().fold(0, |m, &i| m | 1 << i)
}

/// Number of elements of `mask` strictly below `i`.
fn below(mask: Mask, i: usize) -> u32 {
    (mask & ((1u64 << i) - 1)).count_ones()
}

/// `a ∧ b` for basis monomials: `None` if they overlap, else the sign and mask.
pub fn wedge_masks(a: Mask, b: Mask) -> Option<(bool, Mask)> {
    if a & b != 0 {
        return None;
    }
    let inversions: u32 = indices(b).iter().map(|&j| (a >> j).count_ones() - u32::from(a >> j & 1 == 1)).sum();
    Some((inversions % 2 == 1, a | b))
}

/// `e_i ∧ mask`.
pub fn left_mul(i: usize, mask: Mask) -> Option<(bool, Mask)> {
    if mask >> i & 1 == 1 {
        return None;
    }
    Some((below(mask, i) % 2 == 1, mask | 1 << i))
}

/// Contraction of the dual generator `i` into the first slot:
/// `ι_i(e_{i₁}∧…) = Σ_r (−1)^r δ_{i,i_r} e_{i₁}∧…ê_{i_r}…`.
pub fn contract(i: usize, mask: Mask) -> Option<(bool, Mask)> {
    if mask >> i & 1 == 0 {
        return None;
    }
    Some((below(mask, i) % 2 == 1, mask & !(1 << i)))
}

/// Sign of the permutation sorting the concatenation of two disjoint index sets.
pub fn shuffle_sign(a: Mask, b: Mask) -> bool {
    wedge_masks(a, b).expect("disjoint masks").0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorBasis {
    n: usize,
    by_degree: Vec<Vec<Mask>>,
    position: HashMap<Mask, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::IndexOutOfRange(format!("{n} generators exceed {MAX_GENERATORS}")));
        }
        let by_degree: Vec<Vec<Mask>> =
            (0..=n).map(|p| (0..n).combinations(p).map(|c| mask_of(&c)).collect()).collect();
        let mut position = HashMap::new();
        for level in &by_degree {
            for (k, &m) in level.iter().enumerate() {
                position.insert(m, k);
            }
        }
        Ok(Self { n, by_degree, position })
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn dim(&self, p: usize) -> usize {
        self.by_degree.get(p).map_or(0, Vec::len)
    }

    pub fn basis(&self, p: usize) -> &[Mask] {
        self.by_degree.get(p).map_or(&[], Vec::as_slice)
    }

    /// Position of a mask inside its degree.
    pub fn index_of(&self, mask: Mask) -> usize {
        self.position[&mask]
    }

    pub fn total_dim(&self) -> usize {
        1 << self.n
    }
}

/// Sparse element of the exterior algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtElem<T> {
    terms: BTreeMap<Mask, T>,
}

impl<T: Scalar> Default for ExtElem<T> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<T: Scalar> ExtElem<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    pub fn generator(i: usize) -> Self {
        Self::monomial(1 << i, T::one())
    }

    pub fn monomial(mask: Mask, c: T) -> Self {
        let mut e = Self::zero();
        e.add_term(mask, c);
        e
    }

    pub fn from_indices(idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(), |acc, &i| acc.wedge(&Self::generator(i)))
    }

    pub fn add_term(&mut self, mask: Mask, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &T)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> T {
        self.terms.get(&mask).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.terms() {
            out.add_term(m, v.clone() * c.clone());
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((neg, m)) = wedge_masks(a, b) {
                    out.add_term(m, sign::<T>(neg) * ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// `ι_i`, contracting the generator `i` from the first slot.
    pub fn interior(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if let Some((neg, r)) = contract(i, m) {
                out.add_term(r, sign::<T>(neg) * c.clone());
            }
        }
        out
    }

    /// de Rham differential on `Λg*`, with `d θ^i = −Σ_{j<k} C^i_{jk} θ^j∧θ^k`
    /// extended as a degree-one graded derivation.
    pub fn d_dr(&self, lie: &LieAlgebra<T>) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            for (neg, r, v) in d_dr_mask(lie, m) {
                out.add_term(r, sign::<T>(neg) * v * c.clone());
            }
        }
        out
    }
}

/// `d_dR` of a single monomial as `(negate, mask, coefficient)` terms.
pub fn d_dr_mask<T: Scalar>(lie: &LieAlgebra<T>, mask: Mask) -> Vec<(bool, Mask, T)> {
    let idx = indices(mask);
    let mut out = Vec::new();
    for (r, &i) in idx.iter().enumerate() {
        let rest = mask & !(1 << i);
        for j in 0..lie.dim() {
            for k in j + 1..lie.dim() {
                let c = lie.c(j, k, i);
                if c.is_zero() {
                    continue;
                }
                // θ^{i₁}…θ^{i_{r−1}} (θ^jθ^k) θ^{i_{r+1}}…: moving the degree-2 factor
                // to the front is sign-free; the derivation sign is (−1)^r.
                let Some((s1, m1)) = wedge_masks((1 << j) | (1 << k), rest) else { continue };
                out.push(((r % 2 == 1) ^ s1 ^ true, m1, c));
            }
        }
    }
    out
}

/// Matrix of `d_dR: Λ^p g* → Λ^{p+1} g*` in the lexicographic bases.
pub fn d_dr_matrix<T: Scalar>(lie: &LieAlgebra<T>, basis: &ExteriorBasis, p: usize) -> Matrix<T> {
    let mut m = Matrix::<T>::zeros(basis.dim(p + 1), basis.dim(p));
    for (col, &mask) in basis.basis(p).iter().enumerate() {
        for (neg, r, v) in d_dr_mask(lie, mask) {
            let row = basis.index_of(r);
            m[(row, col)] = m[(row, col)].clone() + sign::<T>(neg) * v;
        }
    }
    m
}
