//! `U(g)`-coactions on `V` and the functors between conilpotent
//! `g`-comodules and `U(g)`-comodules.
//!
//! A `U(g)`-coaction is stored as `∇(v^i) = Σ_e X^e ⊗ Σ_k (M_e)^i_k v^k`
//! over ordered monomials. Extension is
//! `∇(v) = Σ_e s_e / e! ⊗ v·A^e` with `A^e = Π_j (A^j)^{e_j}` and `s_e`
//! the symmetrized monomial: divided powers make `∇` coassociative, and
//! symmetrization makes it compatible with `ad`. Restriction applies the
//! canonical projection `π: U(g) → g`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::sayd::{ActionMatrices, CoactionMatrices, SaydModule};
use crate::scalar::{factorial, Scalar};

use super::pbw::{degree, word_of, Enveloping, Mono, PbwElement};

#[derive(Clone, Debug, PartialEq)]
pub struct UgCoaction<T> {
    pub n: usize,
    pub dim: usize,
    pub terms: BTreeMap<Mono, Matrix<T>>,
}

/// All exponent vectors of total degree `d` in `n` variables.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            monomials_of_degree(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `∇(v) = Σ_e s_e/e! ⊗ v·A^e`; refused unless the coaction commutes and is conilpotent.
pub fn extend_coaction<T: Scalar>(c: &CoactionMatrices<T>) -> Result<UgCoaction<T>> {
    if let Some(&(a, b)) = c.noncommuting_pairs().first() {
        return Err(Error::InvalidComodule(a + 1, b + 1));
    }
    if !c.is_conilpotent() {
        return Err(Error::NotConilpotent);
    }
    let n = c.lie().dim();
    let m = c.dim();
    let env = Enveloping::new(c.lie().clone());
    let mut terms: BTreeMap<Mono, Matrix<T>> = BTreeMap::new();
    terms.insert(vec![0; n], Matrix::identity(m));
    for d in 1..=m as u32 {
        let mut any = false;
        for e in monomials_of_degree(n, d) {
            let prod = c.word_product(&word_of(&e));
            if prod.is_zero() {
                continue;
            }
            any = true;
            let denom = e.iter().fold(T::one(), |acc, &k| acc * factorial::<T>(k));
            let prod = prod.scale(&(T::one() / denom));
            for (f, coeff) in env.symmetrized(&e).terms() {
                let entry = terms.entry(f.clone()).or_insert_with(|| Matrix::zeros(m, m));
                *entry = &*entry + &prod.scale(coeff);
            }
        }
        if !any {
            break;
        }
    }
    terms.retain(|_, mat| !mat.is_zero());
    Ok(UgCoaction { n, dim: m, terms })
}

/// `(π ⊗ id)∇`, i.e. `A^j = Σ_e π_j(X^e) M_e`.
pub fn restrict_coaction<T: Scalar>(u: &UgCoaction<T>, template: &CoactionMatrices<T>) -> CoactionMatrices<T> {
    let env = Enveloping::new(template.lie().clone());
    let mut mats = vec![Matrix::zeros(u.dim, u.dim); u.n];
    for (e, me) in &u.terms {
        if degree(e) == 0 {
            continue;
        }
        let pi = env.canonical_projection(&PbwElement::monomial(e.clone(), T::one()));
        for (j, c) in pi.iter().enumerate() {
            if !c.is_zero() {
                mats[j] = &mats[j] + &me.scale(c);
            }
        }
    }
    CoactionMatrices::new(template.lie().clone(), u.dim, mats).expect("restriction keeps shapes")
}

impl<T: Scalar> UgCoaction<T> {
    pub fn matrix(&self, e: &[u32]) -> Matrix<T> {
        self.terms.get(e).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    /// `∇(v^i)` as `(monomial, row)` pairs.
    pub fn coact(&self, i: usize) -> Vec<(Mono, Vec<T>)> {
        self.terms
            .iter()
            .map(|(e, m)| (e.clone(), m.row(i).to_vec()))
            .filter(|(_, r)| r.iter().any(|x| !x.is_zero()))
            .collect()
    }

    /// `(ε ⊗ id)∇ = id`.
    pub fn is_counital(&self) -> bool {
        self.matrix(&vec![0; self.n]) == Matrix::identity(self.dim)
    }

    /// `(Δ ⊗ id)∇ = (id ⊗ ∇)∇`, compared coefficientwise on `X^f ⊗ X^g`.
    pub fn is_coassociative(&self, env: &Enveloping<T>) -> bool {
        let mut lhs: BTreeMap<(Mono, Mono), Matrix<T>> = BTreeMap::new();
        for (e, m) in &self.terms {
            for (f, g, c) in env.coproduct_mono(e) {
                let entry = lhs.entry((f, g)).or_insert_with(|| Matrix::zeros(self.dim, self.dim));
                *entry = &*entry + &m.scale(&c);
            }
        }
        let mut rhs: BTreeMap<(Mono, Mono), Matrix<T>> = BTreeMap::new();
        for (f, mf) in &self.terms {
            for (g, mg) in &self.terms {
                rhs.insert((f.clone(), g.clone()), mf * mg);
            }
        }
        let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
        let zero = Matrix::zeros(self.dim, self.dim);
        keys.into_iter().all(|k| lhs.get(&k).unwrap_or(&zero) == rhs.get(&k).unwrap_or(&zero))
    }
}

/// Right action of a PBW monomial on a row vector.
pub fn act_mono<T: Scalar>(action: &ActionMatrices<T>, row: &[T], e: &[u32]) -> Vec<T> {
    action.act_word(row, &word_of(e))
}

/// Matrix of `v ↦ v · X^e`.
pub fn action_matrix<T: Scalar>(action: &ActionMatrices<T>, e: &[u32]) -> Matrix<T> {
    word_of(e).iter().fold(Matrix::identity(action.dim()), |acc, &j| &acc * action.b(j))
}

/// `U(g)`-stability: `v⟨0⟩ · v⟨−1⟩ = v` on every basis vector.
pub fn ug_stable<T: Scalar>(action: &ActionMatrices<T>, u: &UgCoaction<T>) -> bool {
    let sum = u.terms.iter().fold(Matrix::zeros(u.dim, u.dim), |acc, (e, m)| &acc + &(m * &action_matrix(action, e)));
    sum == Matrix::identity(u.dim)
}

/// Generator-level AYD over `U(g)`:
/// `∇(v·X) = [v⟨−1⟩, X] ⊗ v⟨0⟩ + v⟨−1⟩ ⊗ v⟨0⟩·X`, which is
/// `S(X(3)) v⟨−1⟩ X(1) ⊗ v⟨0⟩·X(2)` for primitive `X`.
pub fn ug_ayd_holds<T: Scalar>(env: &Enveloping<T>, m: &SaydModule<T>, u: &UgCoaction<T>) -> bool {
    let n = env.rank();
    let dim = u.dim;
    for j in 0..n {
        let b = m.action.b(j);
        let mut diff: BTreeMap<Mono, Matrix<T>> = BTreeMap::new();
        let mut add = |e: Mono, mat: Matrix<T>| {
            let entry = diff.entry(e).or_insert_with(|| Matrix::zeros(dim, dim));
            *entry = &*entry + &mat;
        };
        for (e, me) in &u.terms {
            add(e.clone(), b * me);
            add(e.clone(), -&(me * b));
            let x = env.generator(j);
            let mono = PbwElement::monomial(e.clone(), T::one());
            let comm = env.mul(&mono, &x).sub(&env.mul(&x, &mono));
            for (f, c) in comm.terms() {
                add(f.clone(), me.scale(&-c.clone()));
            }
        }
        if !diff.values().all(Matrix::is_zero) {
            return false;
        }
    }
    true
}

/// How `U(g) → g` is taken when reading off a `g`-coaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Degree-one PBW coefficients of the first leg.
    PbwDegreeOne,
    /// The canonical, `ad`-equivariant projection.
    Canonical,
}

/// `π(u(1)) ⊗ u(2)`: the `g`-coaction on `U(g)` obtained from `Δ`.
/// Entry `j` is the second leg paired with `X_j`.
pub fn regular_g_coaction<T: Scalar>(env: &Enveloping<T>, u: &PbwElement<T>, projection: Projection) -> Vec<PbwElement<T>> {
    let n = env.rank();
    let mut legs = vec![PbwElement::zero(n); n];
    for ((f, g), c) in env.coproduct(u) {
        let pi = match projection {
            Projection::PbwDegreeOne if degree(&f) == 1 => PbwElement::monomial(f, T::one()).linear_part(),
            Projection::PbwDegreeOne => continue,
            Projection::Canonical => env.canonical_projection(&PbwElement::monomial(f, T::one())),
        };
        for (j, pj) in pi.iter().enumerate() {
            if !pj.is_zero() {
                legs[j].add_term(g.clone(), c.clone() * pj.clone());
            }
        }
    }
    legs
}

/// `u⟨0⟩ · u⟨−1⟩` for the regular coaction and the right adjoint action.
pub fn regular_stability_defect<T: Scalar>(env: &Enveloping<T>, u: &PbwElement<T>, projection: Projection) -> PbwElement<T> {
    regular_g_coaction(env, u, projection)
        .iter()
        .enumerate()
        .fold(PbwElement::zero(env.rank()), |acc, (j, leg)| acc.add(&env.ad_right(leg, j)))
}
