//! Hom-algebras `(A, μ, α)` given by structure constants, and the deciders
//! for the classes of Hom-algebras this crate works with.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::report::{scan, CheckOptions, Report, Sort};

/// A multiplicative Hom-algebra: `α(xy) = α(x)α(y)` is checked on
/// construction, so every value of this type satisfies it.
#[derive(Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    mul: Tensor3,
    alpha: Matrix,
    labels: Option<Vec<String>>,
}

impl HomAlgebra {
    pub fn new(mul: Tensor3, alpha: Matrix) -> Result<Self> {
        let [d0, d1, d2] = mul.dims();
        let n = d0;
        for (context, found) in [("product second extent", d1), ("product output extent", d2)] {
            if found != n {
                return Err(Error::DimensionMismatch { context, expected: n, found });
            }
        }
        for (context, found) in [("twist map rows", alpha.rows()), ("twist map columns", alpha.cols())] {
            if found != n {
                return Err(Error::DimensionMismatch { context, expected: n, found });
            }
        }
        let lhs = mul.map_output(&alpha)?;
        let rhs = mul.map_inputs(&alpha, &alpha)?;
        if let Some((i, j)) = first_differing_fiber(&lhs, &rhs) {
            return Err(Error::Invariant { axiom: "multiplicativity α(xy) = α(x)α(y)", first: i, second: j });
        }
        Ok(HomAlgebra { mul, alpha, labels: None })
    }

    /// An ordinary algebra viewed as a Hom-algebra with `α = Id`.
    pub fn untwisted(mul: Tensor3) -> Result<Self> {
        let n = mul.dims()[0];
        Self::new(mul, Matrix::identity(n))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { context: "basis labels", expected: self.dim(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.dim()));
        self.labels = labels;
    }

    /// Copies the basis labels of an algebra of the same dimension.
    pub(crate) fn with_labels_of(mut self, other: &HomAlgebra) -> Self {
        self.set_labels(other.labels.clone());
        self
    }

    pub fn dim(&self) -> usize {
        self.mul.dims()[0]
    }

    pub fn mul(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Equality of product and twist, ignoring labels.
    pub fn same_structure(&self, other: &HomAlgebra) -> bool {
        self.mul == other.mul && self.alpha == other.alpha
    }

    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        crate::linalg::apply_bilinear(&self.mul, x, y)
    }

    pub fn twist(&self, x: &Vector) -> Result<Vector> {
        crate::linalg::apply_linear(&self.alpha, x)
    }

    pub(crate) fn mul_vec(&self, x: &Vector, y: &Vector) -> Vector {
        self.mul.apply(x, y)
    }

    pub(crate) fn twist_vec(&self, x: &Vector) -> Vector {
        self.alpha.apply(x)
    }

    /// `(xy)α(z) − α(x)(yz)` without dimension checks.
    pub(crate) fn assoc_vec(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let left = self.mul_vec(&self.mul_vec(x, y), &self.twist_vec(z));
        let right = self.mul_vec(&self.twist_vec(x), &self.mul_vec(y, z));
        &left - &right
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

impl fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomAlgebra").field("dim", &self.dim()).field("labels", &self.labels).finish()
    }
}

pub(crate) fn first_differing_fiber(a: &Tensor3, b: &Tensor3) -> Option<(usize, usize)> {
    let [d0, d1, _] = a.dims();
    (0..d0).flat_map(|i| (0..d1).map(move |j| (i, j))).find(|&(i, j)| a.fiber(i, j) != b.fiber(i, j))
}

/// The Hom-associator `as_A(x, y, z) = (xy)α(z) − α(x)(yz)`.
pub fn hom_associator(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    for v in [x, y, z] {
        if v.len() != a.dim() {
            return Err(Error::DimensionMismatch { context: "Hom-associator argument", expected: a.dim(), found: v.len() });
        }
    }
    Ok(a.assoc_vec(x, y, z))
}

/// Classes of Hom-algebras that [`check_algebra`] decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Associative,
    Alternative,
    Commutative,
    Jordan,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 4] =
        [AlgebraClass::Associative, AlgebraClass::Alternative, AlgebraClass::Commutative, AlgebraClass::Jordan];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Associative => "associative",
            AlgebraClass::Alternative => "alternative",
            AlgebraClass::Commutative => "commutative",
            AlgebraClass::Jordan => "jordan",
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("algebra class {s:?}")))
    }
}

/// Products and twists of basis vectors, shared by the algebra deciders.
struct BasisTables {
    /// `prod[i][j] = e_i e_j`
    prod: Vec<Vec<Vector>>,
    /// `alpha[i] = α(e_i)`
    alpha: Vec<Vector>,
}

impl BasisTables {
    fn new(a: &HomAlgebra) -> Self {
        let n = a.dim();
        BasisTables {
            prod: (0..n).map(|i| (0..n).map(|j| a.mul.fiber_vector(i, j)).collect()).collect(),
            alpha: (0..n).map(|i| a.alpha.column(i)).collect(),
        }
    }

    /// `as(e_i, e_j, e_k)` for all triples, indexed `[i][j][k]`.
    fn associators(&self, a: &HomAlgebra) -> Vec<Vec<Vec<Vector>>> {
        let n = a.dim();
        (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                let left = a.mul_vec(&self.prod[i][j], &self.alpha[k]);
                                let right = a.mul_vec(&self.alpha[i], &self.prod[j][k]);
                                &left - &right
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Decides whether `a` belongs to `class`, with the default witness cap.
pub fn check_algebra(a: &HomAlgebra, class: AlgebraClass) -> Report {
    check_algebra_with(a, class, CheckOptions::default())
}

/// Decides class membership by exhaustive evaluation of the multilinear
/// defining identities on basis tuples. Identities with a repeated variable
/// are checked through their full linearization, which is equivalent over a
/// field of characteristic zero.
pub fn check_algebra_with(a: &HomAlgebra, class: AlgebraClass, opts: CheckOptions) -> Report {
    let n = a.dim();
    let cap = opts.max_witnesses;
    let tables = BasisTables::new(a);
    match class {
        AlgebraClass::Associative => {
            let assoc = tables.associators(a);
            scan(&[(Sort::Alg, n); 3], cap, |t| vec![("hom-associativity".into(), assoc[t[0]][t[1]][t[2]].clone())])
        }
        AlgebraClass::Alternative => {
            let assoc = tables.associators(a);
            scan(&[(Sort::Alg, n); 3], cap, |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                vec![
                    ("left-hom-alternativity".into(), &assoc[i][j][k] + &assoc[j][i][k]),
                    ("right-hom-alternativity".into(), &assoc[i][j][k] + &assoc[i][k][j]),
                ]
            })
        }
        AlgebraClass::Commutative => commutativity(&tables, n, cap),
        AlgebraClass::Jordan => {
            let comm = commutativity(&tables, n, cap);
            if !comm.ok() {
                return comm;
            }
            jordan_polarized(a, &tables, cap)
        }
    }
}

fn commutativity(tables: &BasisTables, n: usize, cap: Option<usize>) -> Report {
    scan(&[(Sort::Alg, n); 2], cap, |t| vec![("commutativity".into(), &tables.prod[t[0]][t[1]] - &tables.prod[t[1]][t[0]])])
}

/// Linearized Hom-Jordan identity for a commutative product:
/// `Σ_cyclic(i,j,k) as((e_i e_j), α(e_l), α(e_k)) = 0`.
fn jordan_polarized(a: &HomAlgebra, tables: &BasisTables, cap: Option<usize>) -> Report {
    let n = a.dim();
    let alpha2: Vec<Vector> = tables.alpha.iter().map(|v| a.twist_vec(v)).collect();
    let alpha_prod: Vec<Vec<Vector>> = tables.prod.iter().map(|row| row.iter().map(|v| a.twist_vec(v)).collect()).collect();
    let twisted_prod: Vec<Vec<Vector>> = (0..n)
        .map(|l| (0..n).map(|k| a.mul_vec(&tables.alpha[l], &tables.alpha[k])).collect())
        .collect();
    // as(e_p e_q, α e_l, α e_k) = ((e_p e_q) α e_l) α² e_k − α(e_p e_q) (α e_l α e_k)
    let term = |p: usize, q: usize, l: usize, k: usize| {
        let left = a.mul_vec(&a.mul_vec(&tables.prod[p][q], &tables.alpha[l]), &alpha2[k]);
        let right = a.mul_vec(&alpha_prod[p][q], &twisted_prod[l][k]);
        &left - &right
    };
    scan(&[(Sort::Alg, n); 4], cap, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let mut d = term(i, j, l, k);
        d = &d + &term(j, k, l, i);
        d = &d + &term(k, i, l, j);
        vec![("hom-jordan".into(), d)]
    })
}

/// Whether `f: A → B` commutes with the twists and the products.
pub fn is_algebra_morphism(f: &Matrix, a: &HomAlgebra, b: &HomAlgebra) -> Result<bool> {
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            context: "algebra morphism shape (rows = target dim, cols = source dim)",
            expected: b.dim() * a.dim(),
            found: f.rows() * f.cols(),
        });
    }
    if f.compose(a.alpha())? != b.alpha().compose(f)? {
        return Ok(false);
    }
    Ok(a.mul().map_output(f)? == b.mul().map_inputs(f, f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn zero_product(n: usize) -> HomAlgebra {
        HomAlgebra::untwisted(Tensor3::zeros(n, n, n)).unwrap()
    }

    #[test]
    fn rejects_non_multiplicative_twist() {
        // e0 e0 = e0 with α = 2·Id: α(e0 e0) = 2 e0 but α(e0)α(e0) = 4 e0
        let mul = Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one());
        let err = HomAlgebra::new(mul, Matrix::diagonal(&[Scalar::from_int(2)])).unwrap_err();
        assert!(matches!(err, Error::Invariant { first: 0, second: 0, .. }));
    }

    #[test]
    fn rejects_wrong_extents() {
        assert!(HomAlgebra::new(Tensor3::zeros(2, 2, 3), Matrix::identity(2)).is_err());
        assert!(HomAlgebra::new(Tensor3::zeros(2, 2, 2), Matrix::identity(3)).is_err());
        assert!(zero_product(2).with_labels(vec!["a".into()]).is_err());
    }

    #[test]
    fn small_dimensions_pass_everything() {
        for n in [0, 1] {
            let a = zero_product(n);
            for class in AlgebraClass::ALL {
                assert!(check_algebra(&a, class).ok(), "dim {n} {class}");
            }
        }
        let unit = HomAlgebra::untwisted(Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one())).unwrap();
        for class in AlgebraClass::ALL {
            assert!(check_algebra(&unit, class).ok());
        }
    }

    #[test]
    fn associator_of_zero_argument_vanishes() {
        let a = zero_product(3);
        let z = Vector::zeros(3);
        assert!(hom_associator(&a, &z, &a.basis(1), &a.basis(2)).unwrap().is_zero());
        assert!(hom_associator(&a, &z, &a.basis(1), &Vector::zeros(2)).is_err());
    }

    #[test]
    fn non_commutative_product_fails_jordan_on_commutativity() {
        // e0 e1 = e1, everything else zero
        let mul = Tensor3::from_fn([2, 2, 2], |i, j, k| if (i, j, k) == (0, 1, 1) { Scalar::one() } else { Scalar::zero() });
        let a = HomAlgebra::untwisted(mul).unwrap();
        let r = check_algebra(&a, AlgebraClass::Jordan);
        assert!(!r.ok());
        assert!(r.witnesses().iter().all(|w| w.identity == "commutativity"));
    }

    #[test]
    fn zero_map_is_a_morphism() {
        let a = zero_product(2);
        assert!(is_algebra_morphism(&Matrix::zeros(2, 2), &a, &a).unwrap());
        assert!(is_algebra_morphism(&Matrix::identity(2), &a, &a).unwrap());
        assert!(is_algebra_morphism(&Matrix::zeros(3, 2), &a, &a).is_err());
    }

    #[test]
    fn morphism_must_commute_with_twists() {
        let a = zero_product(2);
        let b = HomAlgebra::new(Tensor3::zeros(2, 2, 2), Matrix::diagonal(&[Scalar::one(), -Scalar::one()])).unwrap();
        assert!(!is_algebra_morphism(&Matrix::from_int_rows(&[&[0, 1], &[1, 0]]), &b, &b).unwrap());
        assert!(is_algebra_morphism(&Matrix::identity(2), &a, &a).unwrap());
        assert!(!is_algebra_morphism(&Matrix::identity(2), &a, &b).unwrap());
    }

    #[test]
    fn class_names_parse() {
        for c in AlgebraClass::ALL {
            assert_eq!(c.name().parse::<AlgebraClass>().unwrap(), c);
        }
        assert!("lie".parse::<AlgebraClass>().is_err());
    }
}
