//! PBW arithmetic in `U(g)`.
//!
//! Elements are sparse sums of ordered monomials `X_1^{e_1}⋯X_N^{e_N}`
//! keyed by exponent vector. Products are computed by straightening words:
//! an adjacent descent `X_j X_i` (`j > i`) is rewritten to
//! `X_i X_j + Σ_k C^k_{ji} X_k` until every word is ordered.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::lie::LieAlgebra;
use crate::scalar::{factorial, sign, Scalar};

/// Exponent vector of an ordered monomial.
pub type Mono = Vec<u32>;

pub fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// The ordered word `1^{e_1} 2^{e_2} …` of a monomial.
pub fn word_of(e: &[u32]) -> Vec<usize> {
    e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect()
}

fn mono_of(word: &[usize], n: usize) -> Mono {
    let mut e = vec![0; n];
    for &i in word {
        e[i] += 1;
    }
    e
}

pub fn unit(n: usize, i: usize) -> Mono {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

#[derive(Clone, Debug, PartialEq)]
pub struct PbwElement<T> {
    n: usize,
    terms: BTreeMap<Mono, T>,
}

impl<T: Scalar> PbwElement<T> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], T::one())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::monomial(unit(n, i), T::one())
    }

    pub fn monomial(e: Mono, c: T) -> Self {
        let mut x = Self::zero(e.len());
        x.add_term(e, c);
        x
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, e: Mono, c: T) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (e, v) in self.terms() {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    /// `ε`: the constant term.
    pub fn counit(&self) -> T {
        self.coeff(&vec![0; self.n])
    }

    /// Degree-one part, as coordinates in `g`.
    pub fn linear_part(&self) -> Vec<T> {
        (0..self.n).map(|i| self.coeff(&unit(self.n, i))).collect()
    }
}

/// Which descent the straightening rewrites next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Descent {
    Leftmost,
    Rightmost,
    /// The `k`-th descent modulo the number of descents.
    Nth(usize),
}

/// `U(g)` for a fixed algebra.
#[derive(Clone, Debug)]
pub struct Enveloping<T> {
    lie: Arc<LieAlgebra<T>>,
}

impl<T: Scalar> Enveloping<T> {
    pub fn new(lie: Arc<LieAlgebra<T>>) -> Self {
        Self { lie }
    }

    pub fn lie(&self) -> &Arc<LieAlgebra<T>> {
        &self.lie
    }

    pub fn rank(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> PbwElement<T> {
        PbwElement::one(self.rank())
    }

    pub fn generator(&self, i: usize) -> PbwElement<T> {
        PbwElement::generator(self.rank(), i)
    }

    /// Normal form of `c · X_{w_1}⋯X_{w_k}`.
    pub fn normalize(&self, word: &[usize], c: T) -> PbwElement<T> {
        self.normalize_with(word, c, Descent::Leftmost)
    }

    pub fn normalize_with(&self, word: &[usize], c: T, descent: Descent) -> PbwElement<T> {
        let n = self.rank();
        let mut out = PbwElement::zero(n);
        let mut work: BTreeMap<Vec<usize>, T> = BTreeMap::new();
        work.insert(word.to_vec(), c);
        let mut step = 0usize;
        while let Some((w, coeff)) = work.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&r| w[r] > w[r + 1]).collect();
            if descents.is_empty() {
                out.add_term(mono_of(&w, n), coeff);
                continue;
            }
            let r = match descent {
                Descent::Leftmost => descents[0],
                Descent::Rightmost => descents[descents.len() - 1],
                Descent::Nth(k) => descents[(k + step) % descents.len()],
            };
            step += 1;
            let (j, i) = (w[r], w[r + 1]);
            let mut swapped = w.clone();
            swapped.swap(r, r + 1);
            push(&mut work, swapped, coeff.clone());
            for (k, ck) in self.lie.bracket_terms(j, i) {
                let mut shorter = Vec::with_capacity(w.len() - 1);
                shorter.extend_from_slice(&w[..r]);
                shorter.push(*k);
                shorter.extend_from_slice(&w[r + 2..]);
                push(&mut work, shorter, coeff.clone() * ck.clone());
            }
        }
        out
    }

    pub fn mul(&self, a: &PbwElement<T>, b: &PbwElement<T>) -> PbwElement<T> {
        let mut out = PbwElement::zero(self.rank());
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                out = out.add(&self.mul_mono(ea, eb).scale(&(ca.clone() * cb.clone())));
            }
        }
        out
    }

    /// Product of two ordered monomials.
    pub fn mul_mono(&self, a: &[u32], b: &[u32]) -> PbwElement<T> {
        // Already ordered when every generator of `a` precedes those of `b`.
        let last_a = a.iter().rposition(|&k| k > 0);
        let first_b = b.iter().position(|&k| k > 0);
        if let (Some(la), Some(fb)) = (last_a, first_b) {
            if la > fb {
                let mut w = word_of(a);
                w.extend(word_of(b));
                return self.normalize(&w, T::one());
            }
        }
        PbwElement::monomial(a.iter().zip(b).map(|(x, y)| x + y).collect(), T::one())
    }

    /// `Δ(X^e) = Σ_{f≤e} Π_i binom(e_i, f_i) X^f ⊗ X^{e−f}`.
    pub fn coproduct_mono(&self, e: &[u32]) -> Vec<(Mono, Mono, T)> {
        self.iterated_coproduct_mono(e, 2).into_iter().map(|(mut legs, c)| {
            let second = legs.pop().expect("two legs");
            let first = legs.pop().expect("two legs");
            (first, second, c)
        }).collect()
    }

    /// `Δ^{(k−1)}(X^e)` into `k` legs, with multinomial coefficients.
    /// For `k = 0` the result is `ε(X^e)` on the empty tensor.
    pub fn iterated_coproduct_mono(&self, e: &[u32], legs: usize) -> Vec<(Vec<Mono>, T)> {
        if legs == 0 {
            return if degree(e) == 0 { vec![(Vec::new(), T::one())] } else { Vec::new() };
        }
        let mut acc: Vec<(Vec<Mono>, T)> = vec![(vec![vec![0; e.len()]; legs], T::one())];
        for (i, &ei) in e.iter().enumerate() {
            let mut next = Vec::new();
            for (split, c) in &acc {
                for parts in compositions(ei, legs) {
                    let mut s = split.clone();
                    for (leg, &k) in parts.iter().enumerate() {
                        s[leg][i] = k;
                    }
                    next.push((s, c.clone() * multinomial::<T>(&parts)));
                }
            }
            acc = next;
        }
        acc
    }

    /// `S(X^e) = (−1)^{|e|} X_{w_k}⋯X_{w_1}` in normal form.
    pub fn antipode_mono(&self, e: &[u32]) -> PbwElement<T> {
        let mut w = word_of(e);
        w.reverse();
        self.normalize(&w, sign::<T>(degree(e) % 2 == 1))
    }

    pub fn antipode(&self, a: &PbwElement<T>) -> PbwElement<T> {
        let mut out = PbwElement::zero(self.rank());
        for (e, c) in a.terms() {
            out = out.add(&self.antipode_mono(e).scale(c));
        }
        out
    }

    /// `Δ(a)` as a sparse map on pairs of monomials.
    pub fn coproduct(&self, a: &PbwElement<T>) -> BTreeMap<(Mono, Mono), T> {
        let mut out: BTreeMap<(Mono, Mono), T> = BTreeMap::new();
        for (e, c) in a.terms() {
            for (f, g, k) in self.coproduct_mono(e) {
                accumulate(&mut out, (f, g), k * c.clone());
            }
        }
        out
    }

    /// `s_e = (1/k!) Σ_{σ ∈ S_k} X_{w_σ(1)}⋯X_{w_σ(k)}` for the word `w` of `e`.
    ///
    /// Its top-degree part is `X^e`; the `s_e` of degree `k` span `U^k(g)`.
    pub fn symmetrized(&self, e: &[u32]) -> PbwElement<T> {
        let k = degree(e);
        let weight = e.iter().fold(T::one(), |acc, &x| acc * factorial::<T>(x)) / factorial::<T>(k);
        let mut out = PbwElement::zero(self.rank());
        for w in distinct_arrangements(&mut e.to_vec(), k as usize) {
            out = out.add(&self.normalize(&w, weight.clone()));
        }
        out
    }

    /// Coordinates of `u` in the basis `{s_e}`.
    pub fn symmetric_coordinates(&self, u: &PbwElement<T>) -> BTreeMap<Mono, T> {
        let mut rest = u.clone();
        let mut out = BTreeMap::new();
        while let Some(e) = rest.terms().max_by_key(|(e, _)| degree(e)).map(|(e, _)| e.clone()) {
            let c = rest.coeff(&e);
            rest = rest.sub(&self.symmetrized(&e).scale(&c));
            accumulate(&mut out, e, c);
        }
        out
    }

    /// Canonical projection `π: U(g) → g` along `⊕_{k≠1} U^k(g)`.
    ///
    /// Commutes with `ad`; it differs from the degree-one PBW coefficient
    /// whenever `g` is nonabelian.
    pub fn canonical_projection(&self, u: &PbwElement<T>) -> Vec<T> {
        let coords = self.symmetric_coordinates(u);
        (0..self.rank()).map(|i| coords.get(&unit(self.rank(), i)).cloned().unwrap_or_else(T::zero)).collect()
    }

    /// Right adjoint action `u · X = uX − Xu`.
    pub fn ad_right(&self, u: &PbwElement<T>, i: usize) -> PbwElement<T> {
        let x = self.generator(i);
        self.mul(u, &x).sub(&self.mul(&x, u))
    }
}

pub(crate) fn accumulate<K: Ord, T: Scalar>(map: &mut BTreeMap<K, T>, k: K, v: T) {
    if v.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(x) => {
            *x = x.clone() + v;
            if x.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, v);
        }
    }
}

fn push<T: Scalar>(work: &mut BTreeMap<Vec<usize>, T>, w: Vec<usize>, c: T) {
    accumulate(work, w, c);
}

/// Distinct words with letter counts `counts`.
fn distinct_arrangements(counts: &mut Vec<u32>, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..counts.len() {
        if counts[i] == 0 {
            continue;
        }
        counts[i] -= 1;
        for mut tail in distinct_arrangements(counts, len - 1) {
            tail.insert(0, i);
            out.push(tail);
        }
        counts[i] += 1;
    }
    out
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn multinomial<T: Scalar>(parts: &[u32]) -> T {
    let mut total = 0u32;
    let mut acc = T::one();
    for &k in parts {
        for j in 1..=k {
            total += 1;
            acc = acc * T::int(i64::from(total)) / T::int(i64::from(j));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin::*;
    use crate::scalar::{q, qr, Q};

    fn sl2_env() -> Enveloping<Q> {
        Enveloping::new(Arc::new(sl2()))
    }

    #[test]
    fn straightening_example() {
        let u = sl2_env();
        let x = u.normalize(&[1, 0], q(1));
        let mut expected = PbwElement::monomial(vec![1, 1, 0], q(1));
        expected.add_term(vec![0, 0, 1], q(-1));
        assert_eq!(x, expected);
        assert_eq!(u.normalize(&[0, 0], q(1)), PbwElement::monomial(vec![2, 0, 0], q(1)));
    }

    #[test]
    fn associativity_sample() {
        let u = sl2_env();
        let lhs = u.mul(&u.normalize(&[1, 0], q(1)), &u.generator(2));
        let rhs = u.mul(&u.generator(1), &u.normalize(&[0, 2], q(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, u.normalize(&[1, 0, 2], q(1)));
    }

    #[test]
    fn descent_choice_does_not_matter() {
        let u = sl2_env();
        let w = [2, 1, 0, 2, 1];
        let a = u.normalize_with(&w, q(1), Descent::Leftmost);
        assert_eq!(a, u.normalize_with(&w, q(1), Descent::Rightmost));
        assert_eq!(a, u.normalize_with(&w, q(1), Descent::Nth(3)));
    }

    #[test]
    fn hopf_examples() {
        let u = sl2_env();
        let d = u.coproduct(&u.generator(0));
        assert_eq!(d.len(), 2);
        assert_eq!(d[&(vec![1, 0, 0], vec![0, 0, 0])], q(1));
        assert_eq!(d[&(vec![0, 0, 0], vec![1, 0, 0])], q(1));
        // S(X1X2) = X2X1 = X1X2 − X3
        assert_eq!(u.antipode_mono(&[1, 1, 0]), u.normalize(&[1, 0], q(1)));
        assert_eq!(u.one().counit(), q(1));
        assert_eq!(u.normalize(&[0, 1], q(1)).counit(), q(0));
    }

    #[test]
    fn symmetrization_and_canonical_projection() {
        let u = sl2_env();
        // s(X1X2) = X1X2 − X3/2
        let mut expected = PbwElement::monomial(vec![1, 1, 0], q(1));
        expected.add_term(vec![0, 0, 1], qr(-1, 2));
        assert_eq!(u.symmetrized(&[1, 1, 0]), expected);
        assert_eq!(u.symmetrized(&[2, 0, 0]), PbwElement::monomial(vec![2, 0, 0], q(1)));
        let x1x2 = PbwElement::monomial(vec![1, 1, 0], q(1));
        assert_eq!(u.canonical_projection(&x1x2), vec![q(0), q(0), qr(1, 2)]);
        assert_eq!(u.canonical_projection(&u.generator(1)), vec![q(0), q(1), q(0)]);
        // π commutes with ad
        for i in 0..3 {
            let lhs = u.canonical_projection(&u.ad_right(&x1x2, i));
            let p = u.canonical_projection(&x1x2);
            let mut rhs = PbwElement::zero(3);
            for (k, c) in p.iter().enumerate() {
                rhs = rhs.add(&u.ad_right(&u.generator(k), i).scale(c));
            }
            assert_eq!(lhs, u.canonical_projection(&rhs));
        }
    }

    #[test]
    fn iterated_coproduct_counts() {
        let u = sl2_env();
        let t = u.iterated_coproduct_mono(&[2, 0, 1], 3);
        let total: Q = t.iter().map(|(_, c)| c.clone()).sum();
        // (1+1+1)^3 = 27
        assert_eq!(total, q(27));
        assert_eq!(u.iterated_coproduct_mono(&[0, 0, 0], 0), vec![(vec![], q(1))]);
        assert!(u.iterated_coproduct_mono(&[1, 0, 0], 0).is_empty());
    }
}
