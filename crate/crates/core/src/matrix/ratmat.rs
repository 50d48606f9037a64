use super::{linalg, KMatrix, Matrix, PolyMatrix, RatMatrix};
use crate::error::{Error, Result};
use crate::scalar::{Causality, Delta, Poly, RatFun, Scalar};

impl<F: Scalar> PolyMatrix<F> {
    pub fn to_rat(&self) -> RatMatrix<F> {
        self.map(|p| RatFun::from_poly(p.clone()))
    }

    /// Largest entry degree; `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.iter().filter_map(Poly::degree).max()
    }

    pub fn from_i64_coeffs(rows: &[&[&[i64]]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|c| Poly::from_i64s(c)).collect()).collect())
            .expect("ragged rows")
    }

    /// `A0 + A1 s + ... + Ak s^k`
    pub fn from_coefficients(coeffs: &[KMatrix<F>]) -> Self {
        let (r, c) = coeffs.first().map_or((0, 0), Matrix::shape);
        Matrix::from_fn(r, c, |i, j| Poly::new(coeffs.iter().map(|m| m.get(i, j).clone()).collect()))
    }
}

impl<F: Scalar> RatMatrix<F> {
    pub fn is_proper(&self) -> bool {
        self.iter().all(RatFun::is_proper)
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.iter().all(RatFun::is_strictly_proper)
    }

    pub fn is_polynomial(&self) -> bool {
        self.iter().all(RatFun::is_polynomial)
    }

    /// Minimum valuation over entries (`Infinite` for the zero matrix).
    pub fn min_delta(&self) -> Delta {
        self.iter().map(RatFun::delta).min().unwrap_or(Delta::Infinite)
    }

    /// Multiply every entry by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map(|f| f.shift(k))
    }

    /// Entrywise value at `s = ∞`; `None` if some entry is improper.
    pub fn at_infinity(&self) -> Option<KMatrix<F>> {
        let vals: Option<Vec<F>> = self.iter().map(RatFun::at_infinity).collect();
        Some(Matrix::from_vec(self.rows(), self.cols(), vals?).expect("same shape"))
    }

    pub fn from_k(m: &KMatrix<F>) -> Self {
        m.map(|c| RatFun::constant(c.clone()))
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| RatFun::from_i64(v)).collect()).collect())
            .expect("ragged rows")
    }
}

pub fn mat_pi_plus<F: Scalar>(m: &RatMatrix<F>) -> PolyMatrix<F> {
    m.map(RatFun::pi_plus)
}

pub fn mat_pi_minus<F: Scalar>(m: &RatMatrix<F>) -> RatMatrix<F> {
    m.map(RatFun::pi_minus)
}

pub fn mat_at_zero<F: Scalar>(m: &RatMatrix<F>) -> KMatrix<F> {
    m.map(RatFun::at_zero)
}

/// Square, all entries proper, and the determinant a unit of K∞(s).
pub fn is_bicausal<F: Scalar>(m: &RatMatrix<F>) -> Result<bool> {
    m.ensure_square()?;
    if !m.is_proper() {
        return Ok(false);
    }
    Ok(linalg::det(m)?.causality() == Causality::Unit)
}

/// Evaluate a constant matrix; errors if some entry is not constant.
pub fn constant_part<F: Scalar>(m: &RatMatrix<F>) -> Result<KMatrix<F>> {
    if m.iter().any(|f| !f.is_polynomial() || f.num().degree().unwrap_or(0) > 0) {
        return Err(Error::Verification("expected a constant matrix".into()));
    }
    Ok(m.map(|f| f.num().coeff(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{det, inverse, mat_mul};
    use crate::scalar::{Rational, Ring};

    type RM = RatMatrix<Rational>;
    type R = RatFun<Rational>;

    fn s() -> R {
        R::s_pow(1)
    }

    fn l_example() -> RM {
        Matrix::from_rows(vec![vec![R::zero(), R::one()], vec![R::one(), s()]]).unwrap()
    }

    #[test]
    fn product_examples() {
        let a = l_example();
        let b = Matrix::from_rows(vec![vec![-s(), R::one()], vec![R::one(), R::zero()]]).unwrap();
        assert_eq!(mat_mul(&a, &b).unwrap(), RM::identity(2));
        assert_eq!(mat_mul(&a, &RM::identity(2)).unwrap(), a);
        let d1 = RM::diagonal(vec![s(), R::one()]);
        let d2 = RM::diagonal(vec![R::one(), s()]);
        assert_eq!(&d1 * &d2, RM::diagonal(vec![s(), s()]));
        assert!(mat_mul(&a, &RM::zeros(3, 1)).is_err());
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&l_example()).unwrap(), R::from_i64(-1));
        assert_eq!(det(&RM::identity(3)).unwrap(), R::one());
        assert_eq!(det(&RM::diagonal(vec![R::s_pow(2), R::one()])).unwrap(), R::s_pow(2));
        assert!(det(&RM::zeros(2, 3)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let inv = inverse(&l_example()).unwrap();
        let expected = Matrix::from_rows(vec![vec![-s(), R::one()], vec![R::one(), R::zero()]]).unwrap();
        assert_eq!(inv, expected);
        assert_eq!(inverse(&RM::identity(2)).unwrap(), RM::identity(2));
        assert_eq!(
            inverse(&RM::diagonal(vec![R::s_pow(2), R::one()])).unwrap(),
            RM::diagonal(vec![R::s_pow(-2), R::one()])
        );
        let singular = Matrix::from_rows(vec![vec![s(), R::zero()], vec![s(), R::zero()]]).unwrap();
        assert_eq!(inverse(&singular), Err(Error::Singular));
    }

    #[test]
    fn projections() {
        let m: RM = Matrix::from_rows(vec![vec![s() + R::s_pow(-1)]]).unwrap();
        assert_eq!(mat_pi_plus(&m), Matrix::from_rows(vec![vec![Poly::s()]]).unwrap());
        assert_eq!(mat_pi_minus(&m), Matrix::from_rows(vec![vec![R::s_pow(-1)]]).unwrap());
        let p = l_example();
        assert_eq!(mat_pi_plus(&p).to_rat(), p);
        assert!(mat_pi_minus(&p).is_zero());
        let f = R::new(Poly::from_i64s(&[3, 2, 1]), Poly::s()).unwrap();
        let m: RM = Matrix::from_rows(vec![vec![f]]).unwrap();
        assert_eq!(mat_at_zero(&m).get(0, 0), &Rational::from_i64(2));
    }

    #[test]
    fn bicausality() {
        assert!(is_bicausal(&RM::identity(2)).unwrap());
        let upper = Matrix::from_rows(vec![vec![R::one(), R::s_pow(-1)], vec![R::zero(), R::one()]]).unwrap();
        assert!(is_bicausal(&upper).unwrap());
        assert!(!is_bicausal(&RM::diagonal(vec![R::s_pow(-1), R::one()])).unwrap());
        assert!(is_bicausal(&RM::zeros(1, 2)).is_err());
    }
}
