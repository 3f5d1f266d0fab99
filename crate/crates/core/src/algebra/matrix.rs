use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        ExactMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Basis of the null space of `a`, itself in reduced row echelon form: the
/// first nonzero coordinate of every basis vector is 1. An empty result
/// means the kernel is trivial.
pub fn kernel_basis(a: &ExactMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); a.cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            v
        })
        .collect();
    if raw.is_empty() {
        return raw;
    }
    let (basis, _) = ExactMatrix::from_rows(a.cols, raw).rref();
    (0..basis.rows)
        .map(|i| basis.row(i).to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}
