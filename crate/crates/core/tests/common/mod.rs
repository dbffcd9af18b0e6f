#![allow(dead_code)]

use hombimod::corpus::{builtin_algebra, builtin_map};
use hombimod::{regular_bimodule, Bimodule, HomAlgebra, Matrix, Scalar, Tensor3, Vector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn alg(name: &str) -> HomAlgebra {
    builtin_algebra(name).unwrap()
}

pub fn map(name: &str) -> Matrix {
    builtin_map(name).unwrap()
}

pub fn regular(name: &str) -> Bimodule {
    regular_bimodule(&alg(name))
}

/// Octonion regular bimodule twisted by the flip in both slots.
pub fn twisted_octonion() -> Bimodule {
    let o = alg("octonion");
    let flip = map("octonion-flip");
    hombimod::twist_bimodule(&o, &regular_bimodule(&o), &flip, &flip).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=4)).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector::from((0..n).map(|_| random_scalar(rng)).collect::<Vec<_>>())
}

/// Adds small random integers to `count` random entries of a tensor.
pub fn perturb(t: &Tensor3, rng: &mut ChaCha8Rng, count: usize) -> Tensor3 {
    let [d0, d1, d2] = t.dims();
    let mut out = t.clone();
    for _ in 0..count {
        let (i, j, k) = (rng.gen_range(0..d0), rng.gen_range(0..d1), rng.gen_range(0..d2));
        let delta = Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
        *out.get_mut(i, j, k) += &delta;
    }
    out
}

/// Symmetric perturbation of an untwisted bimodule: the left action is
/// perturbed and the right action is set to its flip.
pub fn perturb_symmetric(v: &Bimodule, rng: &mut ChaCha8Rng, count: usize) -> Bimodule {
    assert!(v.parent().alpha().is_identity() && v.alpha_v().is_identity());
    let rho_l = perturb(v.rho_l(), rng, count);
    let rho_r = rho_l.swap_inputs();
    Bimodule::new(v.parent().clone(), v.alpha_v().clone(), rho_l, rho_r).unwrap()
}

#[allow(clippy::needless_range_loop)]
/// Naive structure-constant product, independent of the crate's evaluator.
pub fn naive_bilinear(t: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let [d0, d1, d2] = t.dims();
    (0..d2)
        .map(|k| {
            let mut s = Scalar::zero();
            for i in 0..d0 {
                for j in 0..d1 {
                    s += &(&(&x[i] * &y[j]) * t.get(i, j, k));
                }
            }
            s
        })
        .collect()
}

pub fn naive_linear(m: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| &m[(i, j)] * &x[j]).sum()).collect()
}
