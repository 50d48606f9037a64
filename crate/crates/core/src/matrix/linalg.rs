//! Gaussian elimination over an exact field (K or K(s)).

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Row with the lightest nonzero entry in column `col`, searching from `from`.
fn choose_pivot<T: Field>(m: &Matrix<T>, col: usize, from: usize) -> Option<usize> {
    (from..m.rows())
        .filter(|&i| !m.get(i, col).is_zero())
        .min_by_key(|&i| m.get(i, col).pivot_weight())
}

/// Reduced row echelon form. Returns the pivot columns.
fn rref_in_place<T: Field>(m: &mut Matrix<T>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(p) = choose_pivot(m, c, r) else { continue };
        m.swap_rows(r, p);
        let inv = m.get(r, c).inv();
        for j in c..m.cols() {
            let v = m.get(r, j).clone() * inv.clone();
            m.set(r, j, v);
        }
        for i in 0..m.rows() {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..m.cols() {
                let pj = m.get(r, j).clone();
                if pj.is_zero() {
                    continue;
                }
                let v = m.get(i, j).clone() - f.clone() * pj;
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn det<T: Field>(m: &Matrix<T>) -> Result<T> {
    m.ensure_square()?;
    let n = m.rows();
    let mut a = m.clone();
    let mut acc = T::one();
    for c in 0..n {
        let Some(p) = choose_pivot(&a, c, c) else { return Ok(T::zero()) };
        if p != c {
            a.swap_rows(p, c);
            acc = -acc;
        }
        let pivot = a.get(c, c).clone();
        acc = acc * pivot.clone();
        let inv = pivot.inv();
        for i in c + 1..n {
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            let f = f * inv.clone();
            for j in c + 1..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(c, j).clone();
                a.set(i, j, v);
            }
        }
    }
    Ok(acc)
}

/// Gauss-Jordan on `[M | I]`.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    m.ensure_square()?;
    let n = m.rows();
    let mut aug = m.hstack(&Matrix::identity(n))?;
    let pivots = rref_in_place(&mut aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return Err(Error::Singular);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(aug.select(&rows, &cols))
}

/// Indices of the pivot columns of the row echelon form, i.e. the leftmost
/// maximal set of linearly independent columns.
pub fn pivot_columns<T: Field>(m: &Matrix<T>) -> Vec<usize> {
    let mut a = m.clone();
    rref_in_place(&mut a)
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    rref_in_place(&mut a).len()
}

/// Some solution of `A x = b`, or `None` if the system is inconsistent.
pub fn solve<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch { op: "solve", left: a.shape(), right: b.shape() });
    }
    let n = a.cols();
    let mut aug = a.hstack(b)?;
    let pivots = rref_in_place(&mut aug);
    if pivots.iter().any(|&c| c >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(n, b.cols());
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(c, j, aug.get(r, n + j).clone());
        }
    }
    Ok(Some(x))
}

/// Basis of `{x : A x = 0}` as column vectors, one per free column.
pub fn nullspace<T: Field>(a: &Matrix<T>) -> Vec<Matrix<T>> {
    let mut r = a.clone();
    let pivots = rref_in_place(&mut r);
    let n = a.cols();
    let free = (0..n).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = Matrix::zeros(n, 1);
        v.set(f, 0, T::one());
        for (row, &pc) in pivots.iter().enumerate() {
            v.set(pc, 0, -r.get(row, f).clone());
        }
        v
    })
    .collect()
}

/// Jordan block sizes of a nilpotent matrix, largest first; `None` when the
/// matrix is not nilpotent.
///
/// The number of blocks of size at least `k` is `rank N^(k-1) - rank N^k`.
pub fn jordan_nilpotent_blocks<T: Field>(n: &Matrix<T>) -> Option<Vec<usize>> {
    if !n.is_square() {
        return None;
    }
    let d = n.rows();
    let mut ranks = vec![d];
    let mut power = Matrix::identity(d);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > d + 1 {
            return None;
        }
        power = &power * n;
        let r = rank(&power);
        if r == *ranks.last().unwrap() {
            return None;
        }
        ranks.push(r);
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exactly));
    }
    Some(sizes)
}
