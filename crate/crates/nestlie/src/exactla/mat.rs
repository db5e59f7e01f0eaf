//! Dense matrices over Gaussian rationals.
//!
//! Matrices here model operators on `X = C^N` at desk scale (N up to ~8),
//! so storage is dense row-major. Multiplication skips zero entries of both
//! operands, which makes products with matrix units and other sparse data
//! cheap without a separate sparse type.

use std::fmt;

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::GaussianRational;
use super::ExactlaError;

/// A dense `rows × cols` matrix with exact entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    /// The n×n matrix unit `E_ij` (1 at row i, column j, zero elsewhere).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        m.set(i, j, GaussianRational::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, ExactlaError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(ExactlaError::EmptyMatrix);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(ExactlaError::NonRectangular);
        }
        let nrows = rows.len();
        Ok(Mat {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Rebuild a matrix from its row-major flattening.
    pub fn from_flat(
        rows: usize,
        cols: usize,
        entries: Vec<GaussianRational>,
    ) -> Result<Self, ExactlaError> {
        if entries.len() != rows * cols {
            return Err(ExactlaError::BadFlatLength {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
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

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row-major view of all entries.
    pub fn flat(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn into_flat(self) -> Vec<GaussianRational> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat, ExactlaError> {
        self.check_same_shape("add", rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat, ExactlaError> {
        self.check_same_shape("sub", rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Mat {
        if c.is_zero() {
            return Mat::zeros(self.rows, self.cols);
        }
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Exact matrix product. The inner loops skip zero entries, so products
    /// involving matrix units or other sparse data cost O(nnz · n) instead
    /// of O(n³).
    pub fn mul(&self, rhs: &Mat) -> Result<Mat, ExactlaError> {
        if self.cols != rhs.rows {
            return Err(ExactlaError::DimensionMismatch {
                op: "mul",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let v = cur + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// The Lie product `self·rhs − rhs·self`. Both operands must be square
    /// of the same size.
    pub fn commutator(&self, rhs: &Mat) -> Result<Mat, ExactlaError> {
        if !self.is_square() || self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactlaError::DimensionMismatch {
                op: "commutator",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let ab = self.mul(rhs)?;
        let ba = rhs.mul(self)?;
        ab.sub(&ba)
    }

    pub fn trace(&self) -> Result<GaussianRational, ExactlaError> {
        if !self.is_square() {
            return Err(ExactlaError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = GaussianRational::zero();
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        Ok(t)
    }

    /// Apply the matrix to a column vector.
    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>, ExactlaError> {
        if v.len() != self.cols {
            return Err(ExactlaError::DimensionMismatch {
                op: "mul_vec",
                lhs: (self.rows, self.cols),
                rhs: (v.len(), 1),
            });
        }
        let mut out = vec![GaussianRational::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        Ok(out)
    }

    /// `self == c·I` for some scalar c? Returns the scalar when so.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<GaussianRational> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let entry = self.get(i, j);
                if i == j {
                    if entry != &c {
                        return None;
                    }
                } else if !entry.is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }

    fn check_same_shape(&self, op: &'static str, rhs: &Mat) -> Result<(), ExactlaError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactlaError::DimensionMismatch {
                op,
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// Shared JSON encoding: a matrix is its row-major nested array of entries.
impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[GaussianRational]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<GaussianRational>> = Vec::deserialize(deserializer)?;
        Mat::from_rows(rows).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        // 1-based indices to match the usual matrix-unit notation
        Mat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn identity_multiplication_is_neutral() {
        let m = Mat::from_rows(vec![
            vec![GaussianRational::from_parts(1, 2), GaussianRational::ratio(3, 4)],
            vec![GaussianRational::from_int(-5), GaussianRational::i()],
        ])
        .unwrap();
        assert_eq!(Mat::identity(2).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&Mat::identity(2)).unwrap(), m);
    }

    #[test]
    fn matrix_unit_products() {
        // E_ij · e_j = e_i convention: E11·E12 = E12, E21·E12 = E22.
        assert_eq!(e(2, 1, 1).mul(&e(2, 1, 2)).unwrap(), e(2, 1, 2));
        assert_eq!(e(2, 2, 1).mul(&e(2, 1, 2)).unwrap(), e(2, 2, 2));
        assert_eq!(e(2, 1, 2).mul(&e(2, 1, 2)).unwrap(), Mat::zeros(2, 2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Mat::zeros(2, 3);
        let b = Mat::zeros(2, 3);
        assert!(a.mul(&b).is_err());
        assert!(a.commutator(&b).is_err());
        assert!(a.trace().is_err());
    }

    #[test]
    fn commutator_values() {
        let m = Mat::from_rows(vec![
            vec![GaussianRational::from_int(1), GaussianRational::from_int(2)],
            vec![GaussianRational::from_int(3), GaussianRational::from_int(4)],
        ])
        .unwrap();
        assert!(m.commutator(&m).unwrap().is_zero());
        assert_eq!(e(2, 1, 1).commutator(&e(2, 1, 2)).unwrap(), e(2, 1, 2));
        // Checked by hand: E22·E21 = E21 and E21·E22 = 0.
        assert_eq!(e(2, 2, 2).commutator(&e(2, 2, 1)).unwrap(), e(2, 2, 1));
    }

    #[test]
    fn scalar_identity_detection() {
        let two_i = Mat::identity(3).scale(&GaussianRational::from_int(2));
        assert_eq!(
            two_i.as_scalar_multiple_of_identity(),
            Some(GaussianRational::from_int(2))
        );
        assert_eq!(e(2, 1, 2).as_scalar_multiple_of_identity(), None);
        assert_eq!(
            Mat::zeros(2, 2).as_scalar_multiple_of_identity(),
            Some(GaussianRational::zero())
        );
    }

    #[test]
    fn json_round_trip() {
        let m = Mat::from_rows(vec![
            vec![GaussianRational::ratio(1, 2), GaussianRational::zero()],
            vec![GaussianRational::from_parts(0, -3), GaussianRational::from_int(7)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"[[["1/2","0"],["0","0"]],[["0","-3"],["7","0"]]]"#);
        let back: Mat = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat>("[[1,2],[3]]").is_err());
    }
}
