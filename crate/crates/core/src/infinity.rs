//! Structure at infinity: Smith form of a rational matrix over the discrete
//! valuation ring K∞(s) of proper rational functions, whose prime is `1/s`.
//!
//! Every rational matrix `W` of rank `r` factors as `W = P Σ Q` with `P`, `Q`
//! bicausal and `Σ` carrying `diag(s^-α1, .., s^-αt, s^β(t+1), .., s^βr)` in
//! its leading block, `α1 ≥ .. ≥ αt > 0` and `0 ≤ β(t+1) ≤ .. ≤ βr`.

use crate::error::{Error, Result};
use crate::matrix::{det, Matrix, PolyMatrix, RatMatrix};
use crate::scalar::{Delta, Field, Ring, RatFun, Scalar};

/// Exponent data of `Σ`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SigmaProfile {
    /// Descending positive exponents of the negative powers `s^-α`.
    pub alphas: Vec<usize>,
    /// Ascending nonnegative exponents of the powers `s^β`.
    pub betas: Vec<usize>,
    pub rank: usize,
}

impl SigmaProfile {
    /// Build from the valuations `δ` of the invariant factors, in any order.
    pub fn from_valuations(deltas: impl IntoIterator<Item = i64>) -> Self {
        let mut alphas = Vec::new();
        let mut betas = Vec::new();
        let mut rank = 0;
        for d in deltas {
            rank += 1;
            if d > 0 {
                alphas.push(d as usize);
            } else {
                betas.push((-d) as usize);
            }
        }
        alphas.sort_unstable_by(|a, b| b.cmp(a));
        betas.sort_unstable();
        SigmaProfile { alphas, betas, rank }
    }

    /// Exponents of `s` along the diagonal of `Σ`, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        self.alphas.iter().map(|&a| -(a as i64)).chain(self.betas.iter().map(|&b| b as i64)).collect()
    }

    /// `dim_K U^L` when this is the profile of `s^-1 L`.
    pub fn dimension(&self) -> usize {
        self.alphas.iter().sum()
    }
}

/// `W = P Σ Q` with `P`, `Q` bicausal.
#[derive(Clone, Debug)]
pub struct SigmaFactorization<F> {
    pub p: RatMatrix<F>,
    pub sigma: RatMatrix<F>,
    pub q: RatMatrix<F>,
    pub profile: SigmaProfile,
}

impl<F: Scalar> SigmaFactorization<F> {
    /// Checks `P Σ Q = W` and bicausality of `P` and `Q`.
    pub fn verify(&self, w: &RatMatrix<F>) -> bool {
        let Ok(ps) = self.p.try_mul(&self.sigma) else { return false };
        let Ok(psq) = ps.try_mul(&self.q) else { return false };
        psq == *w
            && crate::matrix::is_bicausal(&self.p).unwrap_or(false)
            && crate::matrix::is_bicausal(&self.q).unwrap_or(false)
    }
}

/// Order in which ties between pivot candidates of equal valuation are broken.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PivotRule {
    /// Smallest row index, then smallest column index.
    #[default]
    RowMajor,
    /// Smallest column index, then smallest row index.
    ColumnMajor,
}

pub fn smith_at_infinity<F: Scalar>(w: &RatMatrix<F>) -> SigmaFactorization<F> {
    smith_at_infinity_with(w, PivotRule::RowMajor)
}

fn find_pivot<F: Scalar>(m: &RatMatrix<F>, k: usize, rule: PivotRule) -> Option<(usize, usize)> {
    let mut best: Option<(Delta, usize, usize)> = None;
    let mut consider = |i: usize, j: usize| {
        let d = m.get(i, j).delta();
        if d != Delta::Infinite && best.is_none_or(|(bd, _, _)| d < bd) {
            best = Some((d, i, j));
        }
    };
    match rule {
        PivotRule::RowMajor => {
            for i in k..m.rows() {
                for j in k..m.cols() {
                    consider(i, j);
                }
            }
        }
        PivotRule::ColumnMajor => {
            for j in k..m.cols() {
                for i in k..m.rows() {
                    consider(i, j);
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith elimination over K∞(s).
///
/// Invariant: `W = P M Q` throughout, with `M` the working matrix. Each step
/// moves an entry of minimal valuation `e` in the trailing block to the
/// diagonal, rescales its row so the pivot is exactly `s^-e`, and clears its
/// row and column. Every multiplier is `entry * s^e`, which is proper because
/// no entry of the block has valuation below `e`. Entries left in the block
/// keep valuation at least `e`, so the pivot valuations are nondecreasing.
/// Each step fixes one more diagonal position, so the loop runs at most
/// `min(rows, cols)` times.
pub fn smith_at_infinity_with<F: Scalar>(w: &RatMatrix<F>, rule: PivotRule) -> SigmaFactorization<F> {
    let (m_rows, m_cols) = w.shape();
    let mut m = w.clone();
    let mut p = RatMatrix::<F>::identity(m_rows);
    let mut q = RatMatrix::<F>::identity(m_cols);
    let mut deltas = Vec::new();

    for k in 0..m_rows.min(m_cols) {
        let Some((pi, pj)) = find_pivot(&m, k, rule) else { break };
        m.swap_rows(k, pi);
        p.swap_cols(k, pi);
        m.swap_cols(k, pj);
        q.swap_rows(k, pj);

        let (e, unit) = m.get(k, k).split_unit().expect("pivot is nonzero");
        let unit_inv = unit.inv();
        for j in k..m_cols {
            let v = m.get(k, j).clone() * unit_inv.clone();
            m.set(k, j, v);
        }
        for i in 0..m_rows {
            let v = p.get(i, k).clone() * unit.clone();
            p.set(i, k, v);
        }
        debug_assert_eq!(*m.get(k, k), RatFun::s_pow(-e));

        for i in k + 1..m_rows {
            if m.get(i, k).is_zero() {
                continue;
            }
            let c = m.get(i, k).shift(e);
            for j in k..m_cols {
                let v = m.get(i, j).clone() - c.clone() * m.get(k, j).clone();
                m.set(i, j, v);
            }
            for r in 0..m_rows {
                let v = p.get(r, k).clone() + c.clone() * p.get(r, i).clone();
                p.set(r, k, v);
            }
        }
        for j in k + 1..m_cols {
            if m.get(k, j).is_zero() {
                continue;
            }
            let c = m.get(k, j).shift(e);
            m.set(k, j, RatFun::zero());
            for r in 0..m_cols {
                let v = q.get(k, r).clone() + c.clone() * q.get(j, r).clone();
                q.set(k, r, v);
            }
        }
        deltas.push(e);
    }

    // Reverse the nonzero diagonal so the exponents of s ascend.
    let rank = deltas.len();
    for k in 0..rank / 2 {
        let o = rank - 1 - k;
        m.swap_rows(k, o);
        m.swap_cols(k, o);
        p.swap_cols(k, o);
        q.swap_rows(k, o);
    }

    SigmaFactorization { p, sigma: m, q, profile: SigmaProfile::from_valuations(deltas) }
}

/// Determinant by cofactor expansion along the first row.
fn det_laplace<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.rows();
    match n {
        0 => T::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone(),
        _ => {
            let rows: Vec<usize> = (1..n).collect();
            let mut acc = T::zero();
            for j in 0..n {
                let a = m.get(0, j);
                if a.is_zero() {
                    continue;
                }
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let term = a.clone() * det_laplace(&m.select(&rows, &cols));
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Apply `measure` to every `k x k` minor and return the minimum.
fn min_over_minors<T: Ring, V: Ord>(m: &Matrix<T>, k: usize, measure: impl Fn(&T) -> V) -> Option<V> {
    let row_sets = combinations(m.rows(), k);
    let col_sets = combinations(m.cols(), k);
    let mut best = None;
    for rs in &row_sets {
        for cs in &col_sets {
            let v = measure(&det_laplace(&m.select(rs, cs)));
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best
}

/// Profile from minors: with `v_k` the least valuation of a `k x k` minor,
/// the `k`-th invariant factor has valuation `v_k - v_(k-1)`. Independent of
/// the elimination in [`smith_at_infinity`].
pub fn minor_valuation_profile<F: Scalar>(w: &RatMatrix<F>) -> SigmaProfile {
    let mut prev = 0i64;
    let mut deltas = Vec::new();
    for k in 1..=w.rows().min(w.cols()) {
        match min_over_minors(w, k, RatFun::delta) {
            Some(Delta::Finite(v)) => {
                deltas.push(v - prev);
                prev = v;
            }
            _ => break,
        }
    }
    SigmaProfile::from_valuations(deltas)
}

fn ensure_nonsingular<F: Scalar>(l: &PolyMatrix<F>) -> Result<RatMatrix<F>> {
    l.ensure_square()?;
    let lr = l.to_rat();
    if det(&lr)?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(lr)
}

/// Descending `α`'s of the infinite elementary divisors `s^-α` of `L`.
pub fn infinite_elementary_divisors<F: Scalar>(l: &PolyMatrix<F>) -> Result<Vec<usize>> {
    let lr = ensure_nonsingular(l)?;
    Ok(smith_at_infinity(&lr.shift(-1)).profile.alphas)
}

/// `dim_K U^L`, the sum of the infinite elementary divisor exponents.
pub fn dim_ul<F: Scalar>(l: &PolyMatrix<F>) -> Result<usize> {
    Ok(infinite_elementary_divisors(l)?.iter().sum())
}

/// Exponents of the elementary divisors `s^c` of a polynomial matrix at the
/// root `0`, descending. With `w_k` the least order of vanishing at `0` of a
/// `k x k` minor, the exponents are the positive `w_k - w_(k-1)`.
pub fn finite_structure_at_zero<F: Scalar>(m: &PolyMatrix<F>) -> Result<Vec<usize>> {
    m.ensure_square()?;
    if det_laplace(m).is_zero() {
        return Err(Error::Singular);
    }
    let mut prev = 0usize;
    let mut out = Vec::new();
    for k in 1..=m.rows() {
        let w = min_over_minors(m, k, |p| p.order_at_zero().unwrap_or(usize::MAX)).expect("k <= n");
        if w > prev {
            out.push(w - prev);
        }
        prev = w;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}
