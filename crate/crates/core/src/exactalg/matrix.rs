use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from i64 rows; panics if rows are ragged or empty.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // Bareiss: division by the previous pivot is exact.
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Exact rank by fraction-free elimination with full pivot search.
    pub fn rank(&self) -> usize {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..m)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut row = 0usize;
        for col in 0..n {
            if row == m {
                break;
            }
            let pivot = (row..m).find(|&i| !a[i][col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap(row, p);
            for i in row + 1..m {
                for j in col + 1..n {
                    let num = &a[i][j] * &a[row][col] - &a[i][col] * &a[row][j];
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[row][col].clone();
            row += 1;
        }
        row
    }

    /// Characteristic polynomial det(xI − M), monic, via Faddeev–LeVerrier.
    /// All intermediate divisions are exact over the integers.
    pub fn char_poly(&self) -> IntPoly {
        assert!(self.is_square(), "characteristic polynomial needs a square matrix");
        let n = self.rows;
        // coeffs[n] = 1, coeffs[n-k] = c_k
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut mk = IntMatrix::identity(n); // M_0 = I
        for k in 1..=n {
            let am = self.mul(&mk);
            let ck = -am.trace() / BigInt::from(k as u64);
            coeffs[n - k] = ck.clone();
            if k < n {
                let mut next = am;
                for i in 0..n {
                    let v = next.get(i, i) + &ck;
                    next.set(i, i, v);
                }
                mk = next;
            }
        }
        IntPoly::new(coeffs)
    }

    /// Primitivity test for a nonnegative square matrix: boolean powering up
    /// to the Wielandt bound (n−1)² + 1 with early exit on all-positive.
    pub fn is_primitive(&self) -> bool {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return false;
        }
        if !self.is_nonnegative() {
            return false;
        }
        let base: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| !self.get(i, j).is_zero()).collect())
            .collect();
        let all_pos = |m: &Vec<Vec<bool>>| m.iter().all(|r| r.iter().all(|&x| x));
        let mut cur = base.clone();
        let bound = (n - 1) * (n - 1) + 1;
        for _ in 0..bound {
            if all_pos(&cur) {
                return true;
            }
            let mut next = vec![vec![false; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if cur[i][k] {
                        for j in 0..n {
                            if base[k][j] {
                                next[i][j] = true;
                            }
                        }
                    }
                }
            }
            if next == cur {
                return all_pos(&next);
            }
            cur = next;
        }
        all_pos(&cur)
    }

    /// Entries as decimal strings, for bit-exact JSON round-trips.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}
