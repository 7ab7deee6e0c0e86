//! Dense exact linear algebra over `Q` and `Q(v)`.

use crate::coeff::Coeff;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Cost proxy used for pivot selection; smaller is cheaper.
    fn weight(&self) -> usize {
        0
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Coeff {
    fn zero() -> Self {
        Coeff::zero()
    }
    fn one() -> Self {
        Coeff::one()
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        self.numerator().coeffs().len() + self.denominator().coeffs().len()
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r).to_vec())).finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).add(&a.mul(b));
                    m.set(r, c, v);
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|r| {
                let mut s = F::zero();
                for c in 0..self.cols {
                    if !x[c].is_zero() && !self.get(r, c).is_zero() {
                        s = s.add(&self.get(r, c).mul(&x[c]));
                    }
                }
                s
            })
            .collect()
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..o.rows {
                    for c2 in 0..o.cols {
                        let b = o.get(r2, c2);
                        if !b.is_zero() {
                            m.set(r1 * o.rows + r2, c1 * o.cols + c2, a.mul(b));
                        }
                    }
                }
            }
        }
        m
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows).filter(|&i| !self.get(i, c).is_zero()).min_by_key(|&i| self.get(i, c).weight());
            let Some(p) = best else { continue };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = F::one().div(self.get(r, c));
            for k in c..self.cols {
                let v = self.get(r, k).mul(&inv);
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for k in c..self.cols {
                    let pk = self.get(r, k);
                    if pk.is_zero() {
                        continue;
                    }
                    let v = self.get(i, k).sub(&f.mul(pk));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.cols];
                x[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = m.get(r, f).neg();
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, F::one());
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + 1);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b[r].clone());
        }
        let piv = aug.rref();
        if piv.last() == Some(&n) {
            return None;
        }
        let mut x = vec![F::zero(); n];
        for (r, &p) in piv.iter().enumerate() {
            x[p] = aug.get(r, n).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                for k in 0..n {
                    m.data.swap(p * n + k, c * n + k);
                }
                det = det.neg();
            }
            let pv = m.get(c, c).clone();
            det = det.mul(&pv);
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).div(&pv);
                for k in c..n {
                    let v = m.get(i, k).sub(&f.mul(m.get(c, k)));
                    m.set(i, k, v);
                }
            }
        }
        det
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix<BigRational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_cartan_a2() {
        let a = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat(2, 3));
        assert_eq!(inv.get(0, 1), &rat(1, 3));
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.det(), rat(3, 1));
    }

    #[test]
    fn kernel_and_rank() {
        let a = int_matrix(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for x in k {
            assert!(a.apply(&x).iter().all(|v| Field::is_zero(v)));
        }
        assert!(int_matrix(&[vec![1, 1], vec![1, 1]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = int_matrix(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(a.solve(&[rat(3, 1), rat(1, 1)]).unwrap(), vec![rat(2, 1), rat(1, 1)]);
        let b = int_matrix(&[vec![1, 1], vec![2, 2]]);
        assert!(b.solve(&[rat(1, 1), rat(3, 1)]).is_none());
    }

    #[test]
    fn coeff_matrices() {
        let q = Coeff::v_pow(2);
        let m = Matrix::from_rows(vec![vec![q.clone(), Coeff::one()], vec![Coeff::zero(), q.inv().unwrap()]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
    }
}
