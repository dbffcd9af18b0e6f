//! Dense exact vectors, matrices and rank-3 tensors.
//!
//! Index conventions, used identically by the file format:
//!
//! * `Matrix` entry `(i, j)` is the coefficient of output basis vector `i` in
//!   the image of input basis vector `j` (column `j` is the image of `e_j`).
//! * `Tensor3` entry `(i, j, k)` is the coefficient of output basis vector `k`
//!   in the product of input basis vectors `i` (first slot) and `j` (second
//!   slot).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { context, expected, found })
    }
}

/// Coordinates of an element over a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![Scalar::zero(); len])
    }

    /// The `i`-th standard basis vector of length `len`.
    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (s, o) in self.0.iter_mut().zip(&other.0) {
            if !o.is_zero() {
                s.add_product(c, o);
            }
        }
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector> {
        check_dim("vector addition", self.len(), other.len())?;
        Ok(self + other)
    }

    /// Index of the first nonzero coordinate.
    pub fn support_start(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A linear map between coordinate spaces, `rows = dim_out`, `cols = dim_in`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds from row-major rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            check_dim("matrix row length", c, row.len())?;
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Like [`Matrix::from_rows`] but with explicit extents, so that
    /// `n × 0` and `0 × n` matrices are representable.
    pub fn from_rows_sized(rows: usize, cols: usize, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        check_dim("matrix rows", rows, entries.len())?;
        for row in &entries {
            check_dim("matrix row length", cols, row.len())?;
        }
        Ok(Matrix { rows, cols, data: entries.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Matrix–vector product without a dimension check.
    pub(crate) fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(self.cols, v.len());
        let mut out = Vector::zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    out[i].add_product(m, x);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        check_dim("matrix composition", self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = &self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(t, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^n` for a square matrix; `self^0` is the identity.
    pub fn pow(&self, n: u32) -> Result<Matrix> {
        check_dim("matrix power", self.rows, self.cols)?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", Vector(self.row(i).to_vec()))?;
        }
        write!(f, "]")
    }
}

/// Structure constants of a bilinear map `X × Y → Z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 { dims: [d0, d1, d2], data: vec![Scalar::zero(); d0 * d1 * d2] }
    }

    /// Builds from nested `[i][j][k]` arrays with the given extents.
    pub fn from_nested(dims: [usize; 3], nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        check_dim("tensor first extent", dims[0], nested.len())?;
        let mut data = Vec::with_capacity(dims.iter().product());
        for plane in nested {
            check_dim("tensor second extent", dims[1], plane.len())?;
            for row in plane {
                check_dim("tensor third extent", dims[2], row.len())?;
                data.extend(row);
            }
        }
        Ok(Tensor3 { dims, data })
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dims.iter().product());
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dims, data }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dims[0])
            .map(|i| (0..self.dims[1]).map(|j| self.fiber(i, j).to_vec()).collect())
            .collect()
    }

    /// Output coordinates of the product of basis vectors `i` and `j`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dims[1] + j) * self.dims[2];
        &self.data[start..start + self.dims[2]]
    }

    pub fn fiber_vector(&self, i: usize, j: usize) -> Vector {
        Vector(self.fiber(i, j).to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Bilinear evaluation without dimension checks; zero coordinates are skipped.
    pub(crate) fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        debug_assert_eq!(self.dims[0], x.len());
        debug_assert_eq!(self.dims[1], y.len());
        let mut out = Vector::zeros(self.dims[2]);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in self.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        out[k].add_product(&c, t);
                    }
                }
            }
        }
        out
    }

    /// `m ∘ T`: post-compose the output with a linear map.
    pub fn map_output(&self, m: &Matrix) -> Result<Tensor3> {
        check_dim("tensor output map", self.dims[2], m.cols())?;
        let [d0, d1, _] = self.dims;
        let mut out = Tensor3::zeros(d0, d1, m.rows());
        for i in 0..d0 {
            for j in 0..d1 {
                let v = m.apply(&self.fiber_vector(i, j));
                out.set_fiber(i, j, v);
            }
        }
        Ok(out)
    }

    /// `T ∘ (a ⊗ b)`: pre-compose both inputs with linear maps.
    pub fn map_inputs(&self, a: &Matrix, b: &Matrix) -> Result<Tensor3> {
        check_dim("tensor first input map", self.dims[0], a.rows())?;
        check_dim("tensor second input map", self.dims[1], b.rows())?;
        let (n0, n1, d2) = (a.cols(), b.cols(), self.dims[2]);
        // Stage 1: contract the second slot, tmp[p][j][k] = Σ_q b[q][j] T[p][q][k].
        let mut tmp = Tensor3::zeros(self.dims[0], n1, d2);
        for p in 0..self.dims[0] {
            for q in 0..self.dims[1] {
                let fib = self.fiber(p, q);
                if fib.iter().all(Scalar::is_zero) {
                    continue;
                }
                for j in 0..n1 {
                    let c = &b[(q, j)];
                    if c.is_zero() {
                        continue;
                    }
                    for (k, t) in fib.iter().enumerate() {
                        if !t.is_zero() {
                            tmp.get_mut(p, j, k).add_product(c, t);
                        }
                    }
                }
            }
        }
        // Stage 2: contract the first slot.
        let mut out = Tensor3::zeros(n0, n1, d2);
        for p in 0..self.dims[0] {
            for i in 0..n0 {
                let c = &a[(p, i)];
                if c.is_zero() {
                    continue;
                }
                for j in 0..n1 {
                    for k in 0..d2 {
                        let t = tmp.get(p, j, k);
                        if !t.is_zero() {
                            let t = t.clone();
                            out.get_mut(i, j, k).add_product(c, &t);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exchanges the two input slots: `out[j][i][k] = self[i][j][k]`.
    pub fn swap_inputs(&self) -> Tensor3 {
        let [d0, d1, d2] = self.dims;
        Tensor3::from_fn([d1, d0, d2], |j, i, k| self.get(i, j, k).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn checked_add(&self, other: &Tensor3) -> Result<Tensor3> {
        for s in 0..3 {
            check_dim("tensor addition", self.dims[s], other.dims[s])?;
        }
        Ok(Tensor3 { dims: self.dims, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: Vector) {
        debug_assert_eq!(v.len(), self.dims[2]);
        for (k, x) in v.into_coords().into_iter().enumerate() {
            *self.get_mut(i, j, k) = x;
        }
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3 {:?}", self.dims)
    }
}

/// Checked matrix–vector product.
pub fn apply_linear(m: &Matrix, v: &Vector) -> Result<Vector> {
    check_dim("linear map input", m.cols(), v.len())?;
    Ok(m.apply(v))
}

/// Checked bilinear evaluation: `out[k] = Σ_{i,j} x[i] y[j] T[i][j][k]`.
pub fn apply_bilinear(t: &Tensor3, x: &Vector, y: &Vector) -> Result<Vector> {
    check_dim("bilinear first argument", t.dims()[0], x.len())?;
    check_dim("bilinear second argument", t.dims()[1], y.len())?;
    Ok(t.apply(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat2_units() -> Tensor3 {
        // basis E11, E12, E21, E22 with E_ab E_cd = δ_bc E_ad
        let idx = |a: usize, b: usize| 2 * a + b;
        Tensor3::from_fn([4, 4, 4], |i, j, k| {
            let (a, b) = (i / 2, i % 2);
            let (c, d) = (j / 2, j % 2);
            if b == c && k == idx(a, d) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    #[test]
    fn linear_examples() {
        let v = Vector::from_ints(&[1, 2, 3]);
        assert_eq!(apply_linear(&Matrix::identity(3), &v).unwrap(), v);
        assert_eq!(apply_linear(&Matrix::zeros(2, 2), &Vector::from_ints(&[5, 7])).unwrap(), Vector::zeros(2));
        let d = Matrix::diagonal(&[Scalar::one(), -Scalar::one()]);
        assert_eq!(apply_linear(&d, &Vector::from_ints(&[1, 1])).unwrap(), Vector::from_ints(&[1, -1]));
    }

    #[test]
    fn linear_dimension_mismatch() {
        let err = apply_linear(&Matrix::identity(3), &Vector::zeros(2)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 3, found: 2, .. }));
    }

    #[test]
    fn bilinear_examples() {
        let t = mat2_units();
        let e11 = Vector::basis(4, 0);
        let e12 = Vector::basis(4, 1);
        assert_eq!(apply_bilinear(&t, &e11, &e12).unwrap(), e12);
        assert_eq!(apply_bilinear(&t, &e12, &e11).unwrap(), Vector::zeros(4));
        assert_eq!(apply_bilinear(&t, &Vector::zeros(4), &e12).unwrap(), Vector::zeros(4));
        assert!(apply_bilinear(&t, &Vector::zeros(3), &e12).is_err());
        assert!(apply_bilinear(&t, &e12, &Vector::zeros(5)).is_err());
    }

    #[test]
    fn map_inputs_matches_pointwise_evaluation() {
        let t = mat2_units();
        let a = Matrix::from_int_rows(&[&[1, 2, 0, 0], &[0, 1, 0, 3], &[1, 0, 1, 0], &[0, 0, -1, 1]]);
        let b = Matrix::from_int_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 2, 0], &[1, 1, 1, 1]]);
        let composed = t.map_inputs(&a, &b).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let direct = t.apply(&a.column(i), &b.column(j));
                assert_eq!(composed.fiber_vector(i, j), direct);
            }
        }
        let swapped = t.swap_inputs();
        assert_eq!(swapped.fiber(1, 0), t.fiber(0, 1));
    }

    #[test]
    fn matrix_power_and_sum() {
        let flip = Matrix::diagonal(&[Scalar::one(), -Scalar::one()]);
        assert!(flip.pow(2).unwrap().is_identity());
        assert_eq!(flip.pow(0).unwrap(), Matrix::identity(2));
        let s = flip.direct_sum(&Matrix::identity(1));
        assert_eq!(s.rows(), 3);
        assert_eq!(s[(1, 1)], -Scalar::one());
        assert_eq!(s[(2, 2)], Scalar::one());
    }

    fn small() -> impl Strategy<Value = Scalar> {
        (-6i64..6, 1i64..4).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
    }

    fn vector(n: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(small(), n).prop_map(Vector::from)
    }

    fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(proptest::collection::vec(small(), c), r)
            .prop_map(move |rows| Matrix::from_rows_sized(r, c, rows).unwrap())
    }

    fn tensor(d: [usize; 3]) -> impl Strategy<Value = Tensor3> {
        proptest::collection::vec(small(), d[0] * d[1] * d[2]).prop_map(move |data| Tensor3 { dims: d, data })
    }

    proptest! {
        #[test]
        fn bilinear_in_first_slot(t in tensor([3, 2, 3]), a in small(), x in vector(3), x2 in vector(3), y in vector(2)) {
            let lhs = apply_bilinear(&t, &(&x.scale(&a) + &x2), &y).unwrap();
            let rhs = &apply_bilinear(&t, &x, &y).unwrap().scale(&a) + &apply_bilinear(&t, &x2, &y).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bilinear_in_second_slot(t in tensor([2, 3, 2]), a in small(), x in vector(2), y in vector(3), y2 in vector(3)) {
            let lhs = apply_bilinear(&t, &x, &(&y.scale(&a) + &y2)).unwrap();
            let rhs = &apply_bilinear(&t, &x, &y).unwrap().scale(&a) + &apply_bilinear(&t, &x, &y2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn composition_is_sequential_application(m in matrix(2, 3), n in matrix(3, 4), v in vector(4)) {
            let mn = m.compose(&n).unwrap();
            prop_assert_eq!(apply_linear(&mn, &v).unwrap(), apply_linear(&m, &apply_linear(&n, &v).unwrap()).unwrap());
        }

        #[test]
        fn map_output_matches_pointwise(t in tensor([2, 2, 3]), m in matrix(2, 3), x in vector(2), y in vector(2)) {
            let composed = t.map_output(&m).unwrap();
            prop_assert_eq!(composed.apply(&x, &y), m.apply(&t.apply(&x, &y)));
        }
    }
}
