//! Generalized state-space realization of the polynomial part of a transfer
//! matrix on the module `U^(D2)`.

use crate::error::{Error, Result};
use crate::matrix::{det, inverse, mat_pi_minus, mat_pi_plus, KMatrix, Matrix, PolyMatrix, RatMatrix};
use crate::scalar::{Poly, RatFun, Ring, Scalar};
use crate::umodule::UBasis;

/// `[G_0, .., G_t]` with `π₊ G = Σ G_ν s^ν`; `[0]` for strictly proper `G`.
pub fn polynomial_part_coeffs<F: Scalar>(g: &RatMatrix<F>) -> Vec<KMatrix<F>> {
    let plus = mat_pi_plus(g);
    let t = plus.max_degree().unwrap_or(0);
    (0..=t).map(|nu| plus.map(|p| p.coeff(nu))).collect()
}

/// `G = W2 + P2 D2⁻¹ Q2` with `W2` strictly proper and `P2`, `Q2` proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rlz2<F> {
    w2: RatMatrix<F>,
    p2: RatMatrix<F>,
    d2: PolyMatrix<F>,
    q2: RatMatrix<F>,
}

impl<F: Scalar> Rlz2<F> {
    pub fn new(w2: RatMatrix<F>, p2: RatMatrix<F>, d2: PolyMatrix<F>, q2: RatMatrix<F>) -> Result<Self> {
        d2.ensure_square()?;
        let n2 = d2.rows();
        if p2.cols() != n2 || p2.rows() != w2.rows() {
            return Err(Error::ShapeMismatch { op: "P2", left: w2.shape(), right: p2.shape() });
        }
        if q2.rows() != n2 || q2.cols() != w2.cols() {
            return Err(Error::ShapeMismatch { op: "Q2", left: w2.shape(), right: q2.shape() });
        }
        if !w2.is_strictly_proper() {
            return Err(Error::InvalidRealization("W2 must be strictly proper".into()));
        }
        if !p2.is_proper() {
            return Err(Error::Improper("P2"));
        }
        if !q2.is_proper() {
            return Err(Error::Improper("Q2"));
        }
        if det(&d2.to_rat())?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Rlz2 { w2, p2, d2, q2 })
    }

    pub fn w2(&self) -> &RatMatrix<F> {
        &self.w2
    }

    pub fn p2(&self) -> &RatMatrix<F> {
        &self.p2
    }

    pub fn d2(&self) -> &PolyMatrix<F> {
        &self.d2
    }

    pub fn q2(&self) -> &RatMatrix<F> {
        &self.q2
    }

    /// `W2 + P2 D2⁻¹ Q2`.
    pub fn reconstruct(&self) -> RatMatrix<F> {
        let inv = inverse(&self.d2.to_rat()).expect("D2 checked nonsingular");
        self.w2.try_add(&(&(&self.p2 * &inv) * &self.q2)).expect("shapes checked")
    }

    pub fn reconstructs(&self, g: &RatMatrix<F>) -> bool {
        &self.reconstruct() == g
    }
}

/// Upshift by `p` on `K^((t+1)p)`: identity blocks on the block superdiagonal.
fn block_upshift<F: Scalar>(p: usize, blocks: usize) -> KMatrix<F> {
    Matrix::from_fn(blocks * p, blocks * p, |i, j| if j == i + p { F::one() } else { F::zero() })
}

/// The split with `D2 = sN - I`, `Q2 = (0, .., 0, I)ᵀ`,
/// `P2 = -(G_t, .., G_0)` and `W2 = π₋ G`.
///
/// `D2⁻¹ = -Σ s^ν N^ν`, and `N^ν Q2` is the block column with `I` in block
/// `t - ν`, so `P2 D2⁻¹ Q2 = Σ G_ν s^ν`.
pub fn canonical_split<F: Scalar>(g: &RatMatrix<F>) -> Rlz2<F> {
    let coeffs = polynomial_part_coeffs(g);
    let (m, p) = g.shape();
    let blocks = coeffs.len();
    let size = blocks * p;
    let n = block_upshift::<F>(p, blocks);
    let d2 = Matrix::from_fn(size, size, |i, j| {
        let mut c = vec![F::zero(), n.get(i, j).clone()];
        if i == j {
            c[0] = -F::one();
        }
        Poly::new(c)
    });
    let q2 = Matrix::from_fn(size, p, |i, j| if i == (blocks - 1) * p + j { RatFun::one() } else { RatFun::zero() });
    let p2 = Matrix::from_fn(m, size, |i, j| {
        let block = j / p;
        RatFun::constant(-coeffs[blocks - 1 - block].get(i, j % p).clone())
    });
    Rlz2 { w2: mat_pi_minus(g), p2, d2, q2 }
}

/// `(N2, B2, C2)` on a basis of `U^(D2)`.
#[derive(Clone, Debug)]
pub struct GssRealization<F> {
    pub basis: UBasis<F>,
    pub n2: KMatrix<F>,
    pub b2: KMatrix<F>,
    pub c2: KMatrix<F>,
}

impl<F: Scalar> GssRealization<F> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `-C2 N2^ν B2`.
    pub fn markov(&self, nu: usize) -> KMatrix<F> {
        (&(&self.c2 * &self.n2.pow(nu)) * &self.b2).neg()
    }

    /// `-Σ C2 N2^ν B2 s^ν`, the expansion of `C2 (s N2 - I)⁻¹ B2`.
    pub fn polynomial_part(&self) -> PolyMatrix<F> {
        let (m, p) = (self.c2.rows(), self.b2.cols());
        let d = self.dim();
        let terms: Vec<KMatrix<F>> = (0..d.max(1)).map(|nu| self.markov(nu)).collect();
        Matrix::from_fn(m, p, |i, j| Poly::new(terms.iter().map(|t| t.get(i, j).clone()).collect()))
    }

    /// `C2` evaluated on the class of a proper `x`.
    pub fn output_of(&self, r: &Rlz2<F>, x: &RatMatrix<F>) -> Result<KMatrix<F>> {
        output_map(r, x)
    }
}

/// `-(P2 D2⁻¹ x)₀` for a proper column `x`.
fn output_map<F: Scalar>(r: &Rlz2<F>, x: &RatMatrix<F>) -> Result<KMatrix<F>> {
    if !x.is_proper() {
        return Err(Error::Improper("argument of C2"));
    }
    let v = (&r.p2 * &inverse(&r.d2.to_rat())?).try_mul(x)?;
    Ok(v.map(|f| -f.at_zero()))
}

/// `B2 ξ = ρ^(D2) Q2 ξ`, `C2 x̄ = -(P2 D2⁻¹ x)₀` on basis preimages, and `N2`
/// the shift of `U^(D2)`.
pub fn realize_plus<F: Scalar>(r: &Rlz2<F>) -> Result<GssRealization<F>> {
    let basis = UBasis::compute(&r.d2)?;
    let d = basis.dim();
    let m = r.p2.rows();
    let b_cols = (0..r.q2.cols())
        .map(|j| basis.coordinates(&basis.rho(&r.q2.column(j))?))
        .collect::<Result<Vec<_>>>()?;
    let b2 = Matrix::from_columns(d, &b_cols);
    let c_cols = basis.preimages().iter().map(|x| output_map(r, x)).collect::<Result<Vec<_>>>()?;
    let c2 = Matrix::from_columns(m, &c_cols);
    Ok(GssRealization { n2: basis.shift_matrix().clone(), basis, b2, c2 })
}

/// `G_ν = -C2 N2^ν B2` for every `ν`, with `G_ν = 0` past the degree of
/// `π₊ G`, and `N2` nilpotent. Beyond `ν = dim` both sides vanish, so the
/// check stops there; for the canonical split this includes `N2^(t+1) = 0`.
pub fn verify_markov<F: Scalar>(r: &Rlz2<F>, g: &GssRealization<F>) -> bool {
    let coeffs = polynomial_part_coeffs(&r.reconstruct());
    let (m, p) = (r.p2.rows(), r.q2.cols());
    if g.c2.shape() != (m, g.dim()) || g.b2.shape() != (g.dim(), p) || g.n2.shape() != (g.dim(), g.dim()) {
        return false;
    }
    let d = g.dim();
    if !g.n2.pow(d).is_zero() {
        return false;
    }
    let zero = KMatrix::zeros(m, p);
    (0..coeffs.len().max(d)).all(|nu| g.markov(nu) == *coeffs.get(nu).unwrap_or(&zero))
}
