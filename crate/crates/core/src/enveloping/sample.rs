//! Seeded random elements for property checks.

use rand::Rng;

use crate::enveloping::pbw::Mono;
use crate::scalar::Scalar;

use super::chain::ChainTensor;

/// Random exponent vector over `n` generators with total degree at most `max_degree`.
pub fn random_mono<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Mono {
    let target = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..target {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// Random element of `V ⊗ U(g)^{⊗q}` with up to `terms` terms, coefficients in `−2..=2`.
pub fn random_tensor<T: Scalar, R: Rng>(
    rng: &mut R,
    q: usize,
    dim_v: usize,
    n: usize,
    max_degree: u32,
    terms: usize,
) -> ChainTensor<T> {
    let mut x = ChainTensor::zero(q);
    for _ in 0..terms {
        let legs = (0..q).map(|_| random_mono(rng, n, max_degree)).collect();
        x.add_term(rng.gen_range(0..dim_v), legs, T::int(rng.gen_range(-2..=2)));
    }
    x
}
