//! The cocyclic module `C^q = V ⊗ U(g)^{⊗q}` of a SAYD module.
//!
//! * `∂_0(v⊗h) = v⊗1⊗h`, `∂_i` applies `Δ` to `h^i`, `∂_{q+1}(v⊗h) = v⟨0⟩⊗h⊗v⟨−1⟩`;
//! * `σ_j` applies `ε` to `h^{j+1}`;
//! * `τ(v⊗h^1⊗…⊗h^q) = v⟨0⟩·h^1(1) ⊗ S(h^1(2))·(h^2⊗…⊗h^q⊗v⟨−1⟩)`;
//! * `σ₋₁(v⊗h^1⊗…⊗h^q) = v·h^1(1) ⊗ S(h^1(2))·(h^2⊗…⊗h^q)`.
//!
//! `U(g)` acts on tensor powers by iterated coproduct followed by legwise
//! left multiplication; on the empty tensor it acts through `ε`.
//!
//! `B: C^{q+1} → C^q` is the unnormalized `N σ₋₁ (1 − λ)` with
//! `λ = (−1)^q τ` on `C^q` and `N = Σ_{i=0}^q λ^i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exterior::{indices, Mask};
use crate::sayd::SaydModule;
use crate::scalar::{sign, Scalar};

use super::coaction::{act_mono, extend_coaction, UgCoaction};
use super::pbw::{accumulate, degree, Enveloping, Mono, PbwElement};

/// Default cap on the tensor length for cocyclic computations.
pub const DEFAULT_LEVEL_CAP: usize = 3;

/// Element of `V ⊗ U(g)^{⊗q}` keyed by `(V-basis index, monomials)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainTensor<T> {
    q: usize,
    terms: BTreeMap<(usize, Vec<Mono>), T>,
}

impl<T: Scalar> ChainTensor<T> {
    pub fn zero(q: usize) -> Self {
        Self { q, terms: BTreeMap::new() }
    }

    pub fn basis(v: usize, legs: Vec<Mono>) -> Self {
        let mut t = Self::zero(legs.len());
        t.add_term(v, legs, T::one());
        t
    }

    pub fn level(&self) -> usize {
        self.q
    }

    pub fn add_term(&mut self, v: usize, legs: Vec<Mono>, c: T) {
        debug_assert_eq!(legs.len(), self.q);
        accumulate(&mut self.terms, (v, legs), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, Vec<Mono>), &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "adding tensors of different levels");
        let mut out = self.clone();
        for ((v, legs), c) in other.terms() {
            out.add_term(*v, legs.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.q);
        for ((v, legs), x) in self.terms() {
            out.add_term(*v, legs.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    /// Groups the `V` components by tensor part: for each leg tuple, the
    /// coefficient vector in `V`.
    pub fn v_components(&self, dim_v: usize) -> BTreeMap<Vec<Mono>, Vec<T>> {
        let mut out: BTreeMap<Vec<Mono>, Vec<T>> = BTreeMap::new();
        for ((v, legs), c) in self.terms() {
            let row = out.entry(legs.clone()).or_insert_with(|| vec![T::zero(); dim_v]);
            row[*v] = row[*v].clone() + c.clone();
        }
        out
    }

    /// Largest monomial degree over all legs.
    pub fn max_leg_degree(&self) -> u32 {
        self.terms.keys().flat_map(|(_, legs)| legs.iter().map(|e| degree(e))).max().unwrap_or(0)
    }
}

/// A SAYD module over `g` viewed over `U(g)`, with its cocyclic operators.
#[derive(Clone, Debug)]
pub struct CocyclicModule<T> {
    env: Enveloping<T>,
    sayd: SaydModule<T>,
    coaction: UgCoaction<T>,
    cap: usize,
}

impl<T: Scalar> CocyclicModule<T> {
    pub fn new(sayd: SaydModule<T>) -> Result<Self> {
        Self::with_cap(sayd, DEFAULT_LEVEL_CAP)
    }

    /// Levels above `cap + 1` are refused (the operators at level `cap`
    /// reach one level higher).
    pub fn with_cap(sayd: SaydModule<T>, cap: usize) -> Result<Self> {
        let coaction = extend_coaction(&sayd.coaction)?;
        let env = Enveloping::new(sayd.lie().clone());
        Ok(Self { env, sayd, coaction, cap })
    }

    pub fn env(&self) -> &Enveloping<T> {
        &self.env
    }

    pub fn sayd(&self) -> &SaydModule<T> {
        &self.sayd
    }

    pub fn coaction(&self) -> &UgCoaction<T> {
        &self.coaction
    }

    pub fn dim_v(&self) -> usize {
        self.sayd.dim()
    }

    fn guard(&self, level: usize) -> Result<()> {
        if level > self.cap + 1 {
            return Err(Error::LevelCap { level, cap: self.cap });
        }
        Ok(())
    }

    fn n(&self) -> usize {
        self.env.rank()
    }

    /// `∂_i: C^q → C^{q+1}` for `0 ≤ i ≤ q + 1`.
    pub fn face(&self, i: usize, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        let q = x.level();
        self.guard(q + 1)?;
        assert!(i <= q + 1, "face index {i} out of range at level {q}");
        let mut out = ChainTensor::zero(q + 1);
        for ((v, legs), c) in x.terms() {
            if i == 0 {
                let mut l = vec![vec![0; self.n()]];
                l.extend(legs.iter().cloned());
                out.add_term(*v, l, c.clone());
            } else if i <= q {
                for (f, g, k) in self.env.coproduct_mono(&legs[i - 1]) {
                    let mut l = legs[..i - 1].to_vec();
                    l.push(f);
                    l.push(g);
                    l.extend(legs[i..].iter().cloned());
                    out.add_term(*v, l, c.clone() * k);
                }
            } else {
                for (e, row) in self.coaction.coact(*v) {
                    for (k, rk) in row.iter().enumerate() {
                        if rk.is_zero() {
                            continue;
                        }
                        let mut l = legs.clone();
                        l.push(e.clone());
                        out.add_term(k, l, c.clone() * rk.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// `σ_j: C^q → C^{q−1}` for `0 ≤ j ≤ q − 1`.
    pub fn degeneracy(&self, j: usize, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        let q = x.level();
        self.guard(q)?;
        assert!(j < q, "degeneracy index {j} out of range at level {q}");
        let mut out = ChainTensor::zero(q - 1);
        for ((v, legs), c) in x.terms() {
            if degree(&legs[j]) == 0 {
                let mut l = legs.clone();
                l.remove(j);
                out.add_term(*v, l, c.clone());
            }
        }
        Ok(out)
    }

    /// Left diagonal action of `a` on a tuple of legs.
    fn diagonal(&self, a: &PbwElement<T>, legs: &[Mono]) -> Vec<(Vec<Mono>, T)> {
        let mut out: BTreeMap<Vec<Mono>, T> = BTreeMap::new();
        for (e, c) in a.terms() {
            for (split, k) in self.env.iterated_coproduct_mono(e, legs.len()) {
                let mut acc: Vec<(Vec<Mono>, T)> = vec![(Vec::new(), c.clone() * k)];
                for (s, h) in split.iter().zip(legs) {
                    let prod = self.env.mul_mono(s, h);
                    acc = acc
                        .into_iter()
                        .flat_map(|(prefix, pc)| {
                            prod.terms().map(move |(m, mc)| {
                                let mut p = prefix.clone();
                                p.push(m.clone());
                                (p, pc.clone() * mc.clone())
                            }).collect::<Vec<_>>()
                        })
                        .collect();
                }
                for (l, v) in acc {
                    accumulate(&mut out, l, v);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Shared body of `τ` and `σ₋₁`: `w · h^1(1) ⊗ S(h^1(2)) · rest`.
    fn rotate(&self, x: &ChainTensor<T>, with_coaction: bool) -> ChainTensor<T> {
        let q = x.level();
        let out_level = if with_coaction { q } else { q - 1 };
        let mut out = ChainTensor::zero(out_level);
        let dim = self.dim_v();
        for ((v, legs), c) in x.terms() {
            // (v⟨0⟩ as a row, v⟨−1⟩ as an optional extra leg)
            let pieces: Vec<(Vec<T>, Option<Mono>)> = if with_coaction {
                self.coaction.coact(*v).into_iter().map(|(e, row)| (row, Some(e))).collect()
            } else {
                let mut row = vec![T::zero(); dim];
                row[*v] = T::one();
                vec![(row, None)]
            };
            for (row, extra) in pieces {
                let mut rest: Vec<Mono> = legs[1..].to_vec();
                if let Some(e) = extra {
                    rest.push(e);
                }
                for (f, g, k) in self.env.coproduct_mono(&legs[0]) {
                    let acted = act_mono(&self.sayd.action, &row, &f);
                    if acted.iter().all(T::is_zero) {
                        continue;
                    }
                    let s = self.env.antipode_mono(&g);
                    for (new_legs, dc) in self.diagonal(&s, &rest) {
                        for (w, aw) in acted.iter().enumerate() {
                            if !aw.is_zero() {
                                out.add_term(w, new_legs.clone(), c.clone() * k.clone() * dc.clone() * aw.clone());
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `τ: C^q → C^q`; the identity on `C^0`.
    pub fn tau(&self, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        self.guard(x.level())?;
        if x.level() == 0 {
            return Ok(x.clone());
        }
        Ok(self.rotate(x, true))
    }

    /// Extra degeneracy `σ₋₁: C^q → C^{q−1}`.
    pub fn extra_degeneracy(&self, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        self.guard(x.level())?;
        assert!(x.level() > 0, "extra degeneracy needs a positive level");
        Ok(self.rotate(x, false))
    }

    /// `λ = (−1)^q τ` on `C^q`.
    pub fn lambda(&self, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        Ok(self.tau(x)?.scale(&sign::<T>(x.level() % 2 == 1)))
    }

    /// `b = Σ_{i=0}^{q+1} (−1)^i ∂_i`.
    pub fn b(&self, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        let q = x.level();
        let mut out = ChainTensor::zero(q + 1);
        for i in 0..=q + 1 {
            out = out.add(&self.face(i, x)?.scale(&sign::<T>(i % 2 == 1)));
        }
        Ok(out)
    }

    /// `B = N σ₋₁ (1 − λ): C^{q+1} → C^q`; zero on `C^0`.
    pub fn connes_b(&self, x: &ChainTensor<T>) -> Result<ChainTensor<T>> {
        if x.level() == 0 {
            return Ok(ChainTensor::zero(0));
        }
        let y = x.sub(&self.lambda(x)?);
        let s = self.extra_degeneracy(&y)?;
        let mut acc = s.clone();
        let mut cur = s;
        for _ in 0..acc.level() {
            cur = self.lambda(&cur)?;
            acc = acc.add(&cur);
        }
        Ok(acc)
    }

    /// `X_{i_1}∧…∧X_{i_n} ⊗ v ↦ Σ_σ sgn(σ) v ⊗ X_{i_σ(1)} ⊗ … ⊗ X_{i_σ(n)}`.
    pub fn antisymmetrize(&self, mask: Mask, v: &[T]) -> ChainTensor<T> {
        let idx = indices(mask);
        let n = self.n();
        let mut out = ChainTensor::zero(idx.len());
        for (perm, neg) in permutations(idx.len()) {
            let legs: Vec<Mono> = perm.iter().map(|&p| super::pbw::unit(n, idx[p])).collect();
            for (k, vk) in v.iter().enumerate() {
                out.add_term(k, legs.clone(), sign::<T>(neg) * vk.clone());
            }
        }
        out
    }
}

/// All permutations of `0..n` with their parity (`true` when odd).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest element at `pos` adds `len − pos` inversions
            out.push((q, odd ^ ((p.len() - pos) % 2 == 1)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lie::builtin::*;
    use crate::sayd::builtin::{sl2_simple, trivial};
    use crate::sayd::CoactionMatrices;
    use crate::scalar::{q, Q};
    use crate::weil::build_truncated_weil;

    fn unit_mono(i: usize) -> Mono {
        super::super::pbw::unit(3, i)
    }

    #[test]
    fn tau_at_level_one_with_trivial_coaction() {
        let g = Arc::new(sl2::<Q>());
        let action = sl2_simple(g.clone()).unwrap();
        let m = SaydModule::new(action.clone(), CoactionMatrices::zero(g, 2)).unwrap();
        let c = CocyclicModule::new(m).unwrap();
        // τ(v⊗X) = v·X ⊗ 1 − v ⊗ X
        let x = ChainTensor::basis(0, vec![unit_mono(0)]);
        let t = c.tau(&x).unwrap();
        let mut expected = ChainTensor::zero(1);
        for (k, val) in action.b(0).row(0).iter().enumerate() {
            expected.add_term(k, vec![vec![0, 0, 0]], val.clone());
        }
        expected.add_term(0, vec![unit_mono(0)], q(-1));
        assert_eq!(t, expected);
    }

    #[test]
    fn b_vanishes_at_level_zero_for_trivial_coaction() {
        let c = CocyclicModule::new(trivial(Arc::new(sl2::<Q>()), 2)).unwrap();
        assert!(c.b(&ChainTensor::basis(1, vec![])).unwrap().is_zero());
    }

    #[test]
    fn level_cap_is_enforced() {
        let c = CocyclicModule::with_cap(trivial(Arc::new(sl2::<Q>()), 1), 1).unwrap();
        let x = ChainTensor::<Q>::basis(0, vec![unit_mono(0), unit_mono(1)]);
        assert!(c.tau(&x).is_ok());
        assert_eq!(c.face(0, &x), Err(Error::LevelCap { level: 3, cap: 1 }));
    }

    #[test]
    fn permutation_parities() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        for (p, odd) in perms {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(odd, inv % 2 == 1);
        }
    }

    #[test]
    fn antisymmetrize_two() {
        let c = CocyclicModule::new(trivial(Arc::new(sl2::<Q>()), 1)).unwrap();
        let a = c.antisymmetrize(0b011, &[q(1)]);
        let mut expected = ChainTensor::zero(2);
        expected.add_term(0, vec![unit_mono(0), unit_mono(1)], q(1));
        expected.add_term(0, vec![unit_mono(1), unit_mono(0)], q(-1));
        assert_eq!(a, expected);
    }

    #[test]
    fn tau_squared_at_level_one_on_weil() {
        let g = Arc::new(sl2::<Q>());
        let c = CocyclicModule::new(build_truncated_weil(g, 2)).unwrap();
        for v in 0..4 {
            for e in [vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 0]] {
                let x = ChainTensor::basis(v, vec![e]);
                assert_eq!(c.tau(&c.tau(&x).unwrap()).unwrap(), x);
            }
        }
    }
}
