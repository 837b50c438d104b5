//! Dense integer matrices and Smith normal form.
//!
//! Entries are `i128` with checked arithmetic: pivot selection takes the
//! smallest nonzero magnitude to keep growth down, and any overflow aborts
//! with an error instead of wrapping.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// 128-bit arithmetic overflowed during reduction.
    Overflow,
    ShapeMismatch,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::Overflow => write!(f, "integer overflow in matrix reduction"),
            MatrixError::ShapeMismatch => write!(f, "matrix shapes do not match"),
        }
    }
}

impl core::error::Error for MatrixError {}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch);
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.checked_mul(other.get(k, j)).ok_or(MatrixError::Overflow)?;
                    let sum = out.get(i, j).checked_add(prod).ok_or(MatrixError::Overflow)?;
                    out.set(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)
    }
}

/// Smith normal form: elementary divisors `d₁ | d₂ | …` (positive, with any
/// trailing zeros dropped) and the rank.
pub fn smith_normal_form(m: &IntMatrix) -> Result<(Vec<i128>, usize), MatrixError> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let n = rows.min(cols);
    let mut divisors: Vec<i128> = Vec::new();
    let mut t = 0usize;
    while t < n {
        // smallest nonzero entry in the remaining block as pivot
        let mut pivot: Option<(usize, usize)> = None;
        let mut best: i128 = 0;
        for i in t..rows {
            for j in t..cols {
                let v = a.get(i, j).abs();
                if v != 0 && (pivot.is_none() || v < best) {
                    pivot = Some((i, j));
                    best = v;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let p = a.get(t, t);
            debug_assert!(p != 0);
            let mut clean = true;
            for i in t + 1..rows {
                let v = a.get(i, t);
                if v != 0 {
                    let q = div_round(v, p);
                    if q != 0 {
                        row_axpy(&mut a, i, t, -q)?;
                    }
                    if a.get(i, t) != 0 {
                        // remainder smaller than p: swap up and restart
                        swap_rows(&mut a, t, i);
                        clean = false;
                        break;
                    }
                }
            }
            if !clean {
                continue;
            }
            for j in t + 1..cols {
                let v = a.get(t, j);
                if v != 0 {
                    let q = div_round(v, a.get(t, t));
                    if q != 0 {
                        col_axpy(&mut a, j, t, -q)?;
                    }
                    if a.get(t, j) != 0 {
                        swap_cols(&mut a, t, j);
                        clean = false;
                        break;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // divisibility: pivot must divide every remaining entry
        let p = a.get(t, t);
        let mut fixed = false;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if a.get(i, j) % p != 0 {
                    // add row i to row t and redo this step
                    row_axpy(&mut a, t, i, 1)?;
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }
        divisors.push(p.abs());
        t += 1;
    }
    let rank = divisors.len();
    Ok((divisors, rank))
}

fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        let (x, y) = (a.get(i, c), a.get(j, c));
        a.set(i, c, y);
        a.set(j, c, x);
    }
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows {
        let (x, y) = (a.get(r, i), a.get(r, j));
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

/// row[i] += k * row[j]
fn row_axpy(a: &mut IntMatrix, i: usize, j: usize, k: i128) -> Result<(), MatrixError> {
    for c in 0..a.cols {
        let add = a.get(j, c).checked_mul(k).ok_or(MatrixError::Overflow)?;
        let v = a.get(i, c).checked_add(add).ok_or(MatrixError::Overflow)?;
        a.set(i, c, v);
    }
    Ok(())
}

/// col[i] += k * col[j]
fn col_axpy(a: &mut IntMatrix, i: usize, j: usize, k: i128) -> Result<(), MatrixError> {
    for r in 0..a.rows {
        let add = a.get(r, j).checked_mul(k).ok_or(MatrixError::Overflow)?;
        let v = a.get(r, i).checked_add(add).ok_or(MatrixError::Overflow)?;
        a.set(r, i, v);
    }
    Ok(())
}

/// Round-to-nearest division keeps remainders at most `|b|/2`.
fn div_round(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        if (r < 0) == (b < 0) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_rank_zero() {
        let (d, rank) = smith_normal_form(&IntMatrix::zero(3, 4)).unwrap();
        assert!(d.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn identity_divisors() {
        let (d, rank) = smith_normal_form(&IntMatrix::identity(3)).unwrap();
        assert_eq!(d, vec![1, 1, 1]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let (d, _) = smith_normal_form(&m).unwrap();
        assert_eq!(d, vec![1, 6]);
    }

    #[test]
    fn divisibility_chain() {
        let m = IntMatrix::from_rows(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, 4, 16],
        ])
        .unwrap();
        let (d, rank) = smith_normal_form(&m).unwrap();
        assert_eq!(rank, d.len());
        for w in d.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        // classical example: divisors 2, 2, 156
        assert_eq!(d, vec![2, 2, 156]);
    }

    #[test]
    fn rank_of_rectangular() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let (d, rank) = smith_normal_form(&m).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(d, vec![1]);
    }
}
