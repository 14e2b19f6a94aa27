use crate::error::{Error, Result};
use crate::ring::{Polynomial, QuotientRing};

/// Dense matrix of ring elements; columns are the images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn identity(ring: &QuotientRing, n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds from rows; `ncols` is used when there are no rows.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>, ncols: usize) -> Result<Self> {
        let cols = rows.first().map_or(ncols, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::structure("rows of unequal length"));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial>>) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, c) in columns.into_iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, p) in c.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut cols = self.columns();
        cols.extend(other.columns());
        Matrix::from_columns(self.rows, cols)
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        Matrix::from_columns(self.rows, keep.iter().map(|&j| self.column(j)).collect())
    }

    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let rows: Vec<Vec<Polynomial>> = keep.iter().map(|&i| self.row(i)).collect();
        Matrix::from_rows(rows, self.cols).unwrap()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn reduced(&self, ring: &QuotientRing) -> Matrix {
        self.map(|p| ring.reduce(p))
    }

    pub fn mul(&self, ring: &QuotientRing, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let amb = ring.ambient();
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = amb.add(&acc, &amb.mul(a, b));
                    }
                }
                m.set(i, j, ring.reduce(&acc));
            }
        }
        m
    }

    pub fn apply(&self, ring: &QuotientRing, v: &[Polynomial]) -> Vec<Polynomial> {
        let col = Matrix::from_columns(v.len(), vec![v.to_vec()]);
        self.mul(ring, &col).column(0)
    }

    pub fn sub(&self, ring: &QuotientRing, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| ring.reduce(&ring.sub(a, b))).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn add(&self, ring: &QuotientRing, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| ring.reduce(&ring.add(a, b))).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, ring: &QuotientRing, c: u32) -> Matrix {
        self.map(|p| ring.scale(p, c))
    }

    /// Column degrees making every entry `(i, j)` homogeneous of degree
    /// `col(j) - row(i)`; zero columns get degree 0.
    pub fn infer_column_degrees(&self, ring: &QuotientRing, row_degrees: &[i64]) -> Option<Vec<i64>> {
        let amb = ring.ambient();
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut deg: Option<i64> = None;
            for i in 0..self.rows {
                let p = self.get(i, j);
                if p.is_zero() {
                    continue;
                }
                let d = amb.homogeneous_degree(p)? + row_degrees[i];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
            out.push(deg.unwrap_or(0));
        }
        Some(out)
    }

    pub fn display(&self, ring: &QuotientRing) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let entries: Vec<String> = self.row(i).iter().map(|p| ring.display(p)).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}
