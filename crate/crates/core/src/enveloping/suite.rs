//! Seeded verification passes over the cocyclic module.
//!
//! Each pass draws `samples` random tensors per level `1..=max_level`
//! (level 0 as well where the relation makes sense) and reports whether every
//! relation held exactly, together with the first failing relation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::build_chain_diffs;
use crate::error::Result;
use crate::exterior::ExteriorBasis;
use crate::scalar::{factorial, Scalar};

use super::chain::{ChainTensor, CocyclicModule};
use super::filtration::{filtration, preservation};
use super::sample::{random_mono, random_tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub checked: usize,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new() -> Self {
        Self { checked: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_level: usize,
}

fn tensors<T: Scalar>(c: &CocyclicModule<T>, cfg: &SuiteConfig, q: usize, salt: u64) -> Vec<ChainTensor<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(1_000_003).wrapping_add(salt * 131 + q as u64));
    (0..cfg.samples).map(|_| random_tensor(&mut rng, q, c.dim_v(), c.env().rank(), 2, 3)).collect()
}

/// Face, degeneracy and mixed cosimplicial identities.
pub fn cosimplicial<T: Scalar>(c: &CocyclicModule<T>, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new();
    for q in 1..=cfg.max_level {
        for x in tensors(c, cfg, q, 1) {
            for j in 1..=q + 2 {
                for i in 0..j {
                    let ok = c.face(j, &c.face(i, &x)?)? == c.face(i, &c.face(j - 1, &x)?)?;
                    out.record(ok, || format!("∂_{j}∂_{i} at level {q}"));
                }
            }
            if q >= 2 {
                for j in 0..q - 1 {
                    for i in 0..=j {
                        let ok = c.degeneracy(j, &c.degeneracy(i, &x)?)? == c.degeneracy(i, &c.degeneracy(j + 1, &x)?)?;
                        out.record(ok, || format!("σ_{j}σ_{i} at level {q}"));
                    }
                }
            }
            for j in 0..=q {
                for i in 0..=q + 1 {
                    let lhs = c.degeneracy(j, &c.face(i, &x)?)?;
                    let rhs = if i < j {
                        c.face(i, &c.degeneracy(j - 1, &x)?)?
                    } else if i == j || i == j + 1 {
                        x.clone()
                    } else {
                        c.face(i - 1, &c.degeneracy(j, &x)?)?
                    };
                    out.record(lhs == rhs, || format!("σ_{j}∂_{i} at level {q}"));
                }
            }
        }
    }
    Ok(out)
}

fn pow_tau<T: Scalar>(c: &CocyclicModule<T>, x: &ChainTensor<T>, k: usize) -> Result<ChainTensor<T>> {
    (0..k).try_fold(x.clone(), |acc, _| c.tau(&acc))
}

/// `τ` against faces and degeneracies, `τ^{q+1} = Id` and `σ₋₁ = σ_{q−1}τ`.
pub fn cyclic<T: Scalar>(c: &CocyclicModule<T>, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new();
    for q in 1..=cfg.max_level {
        for x in tensors(c, cfg, q, 2) {
            let tx = c.tau(&x)?;
            for i in 1..=q + 1 {
                out.record(c.tau(&c.face(i, &x)?)? == c.face(i - 1, &tx)?, || format!("τ∂_{i} at level {q}"));
            }
            out.record(c.tau(&c.face(0, &x)?)? == c.face(q + 1, &x)?, || format!("τ∂_0 at level {q}"));
            for i in 1..q {
                out.record(c.tau(&c.degeneracy(i, &x)?)? == c.degeneracy(i - 1, &tx)?, || format!("τσ_{i} at level {q}"));
            }
            out.record(c.tau(&c.degeneracy(0, &x)?)? == c.degeneracy(q - 1, &pow_tau(c, &x, 2)?)?, || format!("τσ_0 at level {q}"));
            out.record(pow_tau(c, &x, q + 1)? == x, || format!("τ^{} at level {q}", q + 1));
            out.record(c.extra_degeneracy(&x)? == c.degeneracy(q - 1, &tx)?, || format!("σ₋₁ at level {q}"));
        }
    }
    Ok(out)
}

/// `b² = 0`, `B² = 0` and `bB + Bb = 0` from level 0.
pub fn b_and_connes_b<T: Scalar>(c: &CocyclicModule<T>, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new();
    for q in 0..=cfg.max_level {
        for x in tensors(c, cfg, q, 3) {
            let bx = c.b(&x)?;
            out.record(c.b(&bx)?.is_zero(), || format!("b² at level {q}"));
            let cbx = c.connes_b(&x)?;
            out.record(c.connes_b(&cbx)?.is_zero(), || format!("B² at level {q}"));
            // B vanishes on level 0, so only Bb is present there
            let mut anti = c.connes_b(&bx)?;
            if q > 0 {
                anti = anti.add(&c.b(&cbx)?);
            }
            out.record(anti.is_zero(), || format!("bB + Bb at level {q}"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationOutcome {
    pub dims: Vec<usize>,
    pub koszul_drops: bool,
    pub preserved: SuiteOutcome,
}

fn sample_in_level<T: Scalar>(rng: &mut ChaCha8Rng, basis: &[Vec<T>], level: usize, n: usize) -> ChainTensor<T> {
    let mut x = ChainTensor::zero(level);
    if basis.is_empty() {
        return x;
    }
    for _ in 0..3 {
        let legs: Vec<Vec<u32>> = (0..level).map(|_| random_mono(rng, n, 2)).collect();
        let row = &basis[rng.gen_range(0..basis.len())];
        let c = T::int(rng.gen_range(1..=2));
        for (k, rk) in row.iter().enumerate() {
            if !rk.is_zero() {
                x.add_term(k, legs.clone(), c.clone() * rk.clone());
            }
        }
    }
    x
}

/// The F-chain of a conilpotent coaction and its preservation by `b, B, τ, σ₋₁`.
pub fn filtration_pass<T: Scalar>(c: &CocyclicModule<T>, cfg: &SuiteConfig) -> Result<FiltrationOutcome> {
    let f = filtration(&c.sayd().coaction)?;
    let koszul_drops = f.koszul_drops_level(c.sayd());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(12));
    let mut samples = Vec::new();
    for p in 0..f.len() {
        for level in 0..=cfg.max_level {
            for _ in 0..cfg.samples.div_ceil(4).max(1) {
                samples.push((p as isize, sample_in_level(&mut rng, &f.level(p as isize), level, c.env().rank())));
            }
        }
    }
    let r = preservation(c, &f, &samples)?;
    let mut preserved = SuiteOutcome::new();
    for (name, ok) in [("b", r.b), ("B", r.connes_b), ("τ", r.tau), ("σ₋₁", r.extra_degeneracy)] {
        preserved.record(ok, || format!("{name} leaves the filtration"));
    }
    Ok(FiltrationOutcome { dims: f.dims(), koszul_drops, preserved })
}

/// `α_n = (1/n!) Σ_σ sgn σ …` applied to a column of `Λ^n g ⊗ V`.
pub fn normalized_alpha<T: Scalar>(c: &CocyclicModule<T>, ext: &ExteriorBasis, n: usize, col: &[T]) -> ChainTensor<T> {
    let m = c.dim_v();
    let scale = T::one() / factorial::<T>(n as u32);
    let mut out = ChainTensor::zero(n);
    for (s, &mask) in ext.basis(n).iter().enumerate() {
        let comp = &col[s * m..(s + 1) * m];
        if comp.iter().any(|x| !x.is_zero()) {
            out = out.add(&c.antisymmetrize(mask, comp));
        }
    }
    out.scale(&scale)
}

/// On basis vectors of `Λ^n g ⊗ V` for `1 ≤ n ≤ max_n`: `b∘α = 0` and
/// `B∘α_n = α_{n−1}∘∂_CE`. Requires the zero coaction.
pub fn antisymmetrization<T: Scalar>(c: &CocyclicModule<T>, max_n: usize) -> Result<SuiteOutcome> {
    let data = build_chain_diffs(c.sayd())?;
    let n_gen = c.env().rank();
    let ext = ExteriorBasis::new(n_gen)?;
    let mut out = SuiteOutcome::new();
    for n in 1..=max_n.min(n_gen) {
        for k in 0..data.dims[n] {
            let mut col = vec![T::zero(); data.dims[n]];
            col[k] = T::one();
            let a = normalized_alpha(c, &ext, n, &col);
            out.record(c.b(&a)?.is_zero(), || format!("b∘α at degree {n}"));
            let rhs = normalized_alpha(c, &ext, n - 1, &data.down[n].apply(&col));
            out.record(c.connes_b(&a)? == rhs, || format!("B∘α = α∘∂_CE at degree {n}"));
        }
    }
    Ok(out)
}
