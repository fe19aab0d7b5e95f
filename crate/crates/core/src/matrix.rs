//! Dense matrices over an exact integer type.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact signed integer scalars. `BigInt` is the type used for anything
/// derived from map iteration; fixed-width types are fine for small tests.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Integer + Signed {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Integer + Signed {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntegerMatrix = Matrix<BigInt>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// Unit diagonal and zeros below it.
    pub fn is_unit_upper_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero())
            })
    }

    /// `(M − I)^n = 0` for an `n × n` matrix.
    pub fn is_unipotent(&self) -> bool {
        self.is_square() && self.sub(&Matrix::identity(self.rows)).pow(self.rows as u32).is_zero()
    }

    /// Entrywise least non-negative residues.
    pub fn reduce_mod(&self, m: &T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mod_floor(m)).collect(),
        }
    }

    pub fn is_identity_mod(&self, m: &T) -> bool {
        self.reduce_mod(m).is_identity()
    }

    /// A basis of the integer kernel `{x : M x = 0}`, by unimodular column
    /// operations on `[M; I]`. Vectors are returned in a fixed order.
    pub fn integer_kernel(&self) -> Vec<Vec<T>> {
        let (r, c) = (self.rows, self.cols);
        let mut a: Vec<Vec<T>> = self.to_rows();
        let mut u: Vec<Vec<T>> = Matrix::<T>::identity(c).to_rows();
        let mut pivot_col = 0;
        for row in 0..r {
            if pivot_col == c {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (pivot_col..c).filter(|&j| !a[row][j].is_zero()).collect();
                if nonzero.is_empty() {
                    break;
                }
                let &p = nonzero
                    .iter()
                    .min_by(|&&x, &&y| a[row][x].abs().cmp(&a[row][y].abs()).then(x.cmp(&y)))
                    .unwrap();
                swap_cols(&mut a, &mut u, p, pivot_col);
                let mut done = true;
                for j in pivot_col + 1..c {
                    if a[row][j].is_zero() {
                        continue;
                    }
                    let q = a[row][j].div_floor(&a[row][pivot_col]);
                    add_col_multiple(&mut a, &mut u, j, pivot_col, &q);
                    if !a[row][j].is_zero() {
                        done = false;
                    }
                }
                if done {
                    pivot_col += 1;
                    break;
                }
            }
        }
        (pivot_col..c)
            .map(|j| {
                let v: Vec<T> = u.iter().map(|row| row[j].clone()).collect();
                normalize_sign(v)
            })
            .collect()
    }
}

fn swap_cols<T: Scalar>(a: &mut [Vec<T>], u: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut().chain(u.iter_mut()) {
            row.swap(x, y);
        }
    }
}

/// column `dst` -= q · column `src`
fn add_col_multiple<T: Scalar>(a: &mut [Vec<T>], u: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    for row in a.iter_mut().chain(u.iter_mut()) {
        let s = row[src].clone() * q.clone();
        row[dst] = row[dst].clone() - s;
    }
}

fn normalize_sign<T: Scalar>(v: Vec<T>) -> Vec<T> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

pub(crate) fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
