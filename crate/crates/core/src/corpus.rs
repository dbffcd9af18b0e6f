//! Built-in example algebras, bimodules and automorphisms, and a search for
//! diagonal endomorphisms.

use rayon::prelude::*;

use crate::algebra::HomAlgebra;
use crate::bimodule::Bimodule;
use crate::construct::{plus_algebra, regular_bimodule};
use crate::error::{Error, Result};
use crate::io::Object;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::scalar::Scalar;

/// A named object of the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
}

/// Named algebras and maps. Every algebra `X` also has a regular bimodule
/// under the name `regular:X`.
pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "mat2", description: "2x2 matrices, associative (basis E11, E12, E21, E22)" },
    CorpusEntry { name: "quaternion", description: "quaternions by doubling the complex numbers, associative" },
    CorpusEntry { name: "octonion", description: "octonions by doubling the quaternions, alternative, not associative" },
    CorpusEntry { name: "sym2-jordan", description: "symmetric 2x2 matrices under xy + yx, Jordan" },
    CorpusEntry { name: "mat2-plus", description: "2x2 matrices under xy + yx, Jordan" },
    CorpusEntry { name: "octonion-plus", description: "octonions under xy + yx, Jordan" },
    CorpusEntry { name: "quaternion-swap", description: "automorphism of the quaternions: i <-> j, k -> -k" },
    CorpusEntry { name: "octonion-flip", description: "automorphism of the octonions: (a, b) -> (a, -b)" },
    CorpusEntry { name: "mat2-conj", description: "automorphism of 2x2 matrices: conjugation by diag(1, -1)" },
];

/// Names of the algebras in the corpus.
pub const ALGEBRA_NAMES: &[&str] = &["mat2", "quaternion", "octonion", "sym2-jordan", "mat2-plus", "octonion-plus"];

/// Names of the maps in the corpus.
pub const MAP_NAMES: &[&str] = &["quaternion-swap", "octonion-flip", "mat2-conj"];

/// Every builtin name, including the regular bimodules.
pub fn all_names() -> Vec<String> {
    CORPUS
        .iter()
        .map(|e| e.name.to_string())
        .chain(ALGEBRA_NAMES.iter().map(|a| format!("regular:{a}")))
        .collect()
}

pub fn builtin(name: &str) -> Result<Object> {
    if let Some(alg) = name.strip_prefix("regular:") {
        return Ok(Object::Bimodule(regular_bimodule(&builtin_algebra(alg)?)));
    }
    if ALGEBRA_NAMES.contains(&name) {
        return builtin_algebra(name).map(Object::Algebra);
    }
    let int = Scalar::from_int;
    let map = match name {
        "quaternion-swap" => Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, -1]]),
        "octonion-flip" => Matrix::diagonal(&[1, 1, 1, 1, -1, -1, -1, -1].map(int)),
        "mat2-conj" => Matrix::diagonal(&[1, -1, -1, 1].map(int)),
        _ => return Err(Error::UnknownName(format!("builtin {name:?}"))),
    };
    Ok(Object::Map(map))
}

pub fn builtin_algebra(name: &str) -> Result<HomAlgebra> {
    match name {
        "mat2" => Ok(mat2()),
        "quaternion" => Ok(cayley_dickson(2)),
        "octonion" => Ok(cayley_dickson(3)),
        "sym2-jordan" => Ok(sym2_jordan()),
        "mat2-plus" => plus_algebra(&mat2()),
        "octonion-plus" => plus_algebra(&cayley_dickson(3)),
        _ => match builtin(name)? {
            Object::Algebra(a) => Ok(a),
            _ => Err(Error::UnknownName(format!("{name:?} is not an algebra"))),
        },
    }
}

pub fn builtin_bimodule(name: &str) -> Result<Bimodule> {
    match builtin(name)? {
        Object::Bimodule(v) => Ok(v),
        _ => Err(Error::UnknownName(format!("{name:?} is not a bimodule"))),
    }
}

pub fn builtin_map(name: &str) -> Result<Matrix> {
    match builtin(name)? {
        Object::Map(m) => Ok(m),
        _ => Err(Error::UnknownName(format!("{name:?} is not a map"))),
    }
}

fn labelled(mul: Tensor3, labels: &[&str]) -> HomAlgebra {
    HomAlgebra::untwisted(mul)
        .and_then(|a| a.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("untwisted algebras are multiplicative")
}

fn mat2() -> HomAlgebra {
    // E_ab · E_cd = δ_bc E_ad, basis index 2a + b
    let mul = Tensor3::from_fn([4, 4, 4], |i, j, k| {
        let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
        Scalar::from_int((b == c && k == 2 * a + d) as i64)
    });
    labelled(mul, &["E11", "E12", "E21", "E22"])
}

fn sym2_jordan() -> HomAlgebra {
    // S11, S22, S12 = E12 + E21 as 2x2 matrices
    let basis: [[[i64; 2]; 2]; 3] = [[[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 1], [1, 0]]];
    let matmul = |x: &[[i64; 2]; 2], y: &[[i64; 2]; 2]| {
        let mut z = [[0i64; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                z[r][c] = (0..2).map(|t| x[r][t] * y[t][c]).sum();
            }
        }
        z
    };
    let mut mul = Tensor3::zeros(3, 3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let (xy, yx) = (matmul(&basis[i], &basis[j]), matmul(&basis[j], &basis[i]));
            let s = |r: usize, c: usize| xy[r][c] + yx[r][c];
            debug_assert_eq!(s(0, 1), s(1, 0));
            mul.set_fiber(i, j, Vector::from_ints(&[s(0, 0), s(1, 1), s(0, 1)]));
        }
    }
    labelled(mul, &["S11", "S22", "S12"])
}

/// Conjugation `(a, b)‾ = (ā, -b)` on an iterated doubling of the reals.
fn cd_conj(x: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let (a, b) = x.split_at(x.len() / 2);
    cd_conj(a).into_iter().chain(b.iter().map(|s| -s)).collect()
}

/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`
fn cd_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let sub = |p: Vec<Scalar>, q: Vec<Scalar>| p.iter().zip(&q).map(|(s, t)| s - t).collect::<Vec<_>>();
    let add = |p: Vec<Scalar>, q: Vec<Scalar>| p.iter().zip(&q).map(|(s, t)| s + t).collect::<Vec<_>>();
    let first = sub(cd_mul(a, c), cd_mul(&cd_conj(d), b));
    let second = add(cd_mul(d, a), cd_mul(b, &cd_conj(c)));
    first.into_iter().chain(second).collect()
}

/// The algebra obtained from the reals by `level` Cayley–Dickson doublings.
fn cayley_dickson(level: u32) -> HomAlgebra {
    let n = 1usize << level;
    let e = |i: usize| Vector::basis(n, i).into_coords();
    let mut mul = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            mul.set_fiber(i, j, Vector::from(cd_mul(&e(i), &e(j))));
        }
    }
    let labels: &[&str] = match level {
        2 => &["1", "i", "j", "k"],
        3 => &["1", "i", "j", "k", "l", "il", "jl", "kl"],
        _ => unreachable!("only quaternions and octonions are built"),
    };
    labelled(mul, labels)
}

/// Largest number of candidate diagonals examined by the search.
pub const SEARCH_LIMIT: usize = 59_049;

/// All diagonal matrices with entries from `entries` that are endomorphisms
/// of the product and commute with the twist, in lexicographic order of
/// their diagonals (entries compared as rationals).
pub fn search_diagonal_endomorphisms(a: &HomAlgebra, entries: &[Scalar]) -> Result<Vec<Matrix>> {
    let mut entries = entries.to_vec();
    entries.sort();
    entries.dedup();
    let n = a.dim();
    let base = entries.len();
    let total = if n > 10 { None } else { base.checked_pow(n as u32) };
    let total = match total {
        Some(t) if t <= SEARCH_LIMIT => t,
        _ => {
            return Err(Error::SearchTooLarge(format!(
                "{base}^{n} candidates (dimension must be at most 10 and at most {SEARCH_LIMIT} candidates); use fewer entries"
            )))
        }
    };

    let mul = a.mul();
    let alpha = a.alpha();
    let nonzero_mul: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| !mul.get(i, j, k).is_zero())
        .collect();
    let nonzero_alpha: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !alpha[(i, j)].is_zero()).collect();

    let found = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut d = vec![Scalar::zero(); n];
            for slot in d.iter_mut().rev() {
                *slot = entries[code % base].clone();
                code /= base;
            }
            let endo = nonzero_mul.iter().all(|&(i, j, k)| d[k] == &d[i] * &d[j]);
            let commutes = nonzero_alpha.iter().all(|&(i, j)| d[i] == d[j]);
            (endo && commutes).then(|| Matrix::diagonal(&d))
        })
        .collect();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_algebra, is_algebra_morphism, AlgebraClass};

    #[test]
    fn quaternion_table_matches_hamilton() {
        let q = builtin_algebra("quaternion").unwrap();
        let e = |i| q.basis(i);
        let prod = |i, j| q.product(&e(i), &e(j)).unwrap();
        // ij = k, jk = i, ki = j, i² = -1
        assert_eq!(prod(1, 2), e(3));
        assert_eq!(prod(2, 3), e(1));
        assert_eq!(prod(3, 1), e(2));
        assert_eq!(prod(1, 1), e(0).scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn octonion_units_square_to_minus_one() {
        let o = builtin_algebra("octonion").unwrap();
        for i in 1..8 {
            assert_eq!(o.product(&o.basis(i), &o.basis(i)).unwrap(), o.basis(0).scale(&Scalar::from_int(-1)));
        }
    }

    #[test]
    fn unknown_names_are_errors() {
        assert!(matches!(builtin("sedenion"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("regular:mat2-conj"), Err(Error::UnknownName(_))));
        assert!(builtin_algebra("mat2-conj").is_err());
    }

    #[test]
    fn every_name_resolves() {
        for name in all_names() {
            builtin(&name).unwrap();
        }
    }

    #[test]
    fn search_contains_identity_and_zero() {
        let a = builtin_algebra("mat2").unwrap();
        let found = search_diagonal_endomorphisms(&a, &[-1, 0, 1].map(Scalar::from_int)).unwrap();
        assert!(found.contains(&Matrix::identity(4)));
        assert!(found.contains(&Matrix::zeros(4, 4)));
        for m in &found {
            assert!(is_algebra_morphism(m, &a, &a).unwrap());
        }
        assert!(check_algebra(&a, AlgebraClass::Associative).ok());
    }

    #[test]
    fn search_guard() {
        let a = HomAlgebra::untwisted(Tensor3::zeros(11, 11, 11)).unwrap();
        assert!(matches!(search_diagonal_endomorphisms(&a, &[Scalar::one()]), Err(Error::SearchTooLarge(_))));
        let b = HomAlgebra::untwisted(Tensor3::zeros(10, 10, 10)).unwrap();
        assert!(matches!(search_diagonal_endomorphisms(&b, &[-1, 0, 1, 2].map(Scalar::from_int)), Err(Error::SearchTooLarge(_))));
        assert_eq!(search_diagonal_endomorphisms(&b, &[-1, 0, 1].map(Scalar::from_int)).unwrap().len(), SEARCH_LIMIT);
    }
}
