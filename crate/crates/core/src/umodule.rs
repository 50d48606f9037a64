//! The K∞(s)-module `U^L = L π₊ L⁻¹ K∞ⁿ(s)` of a nonsingular polynomial
//! matrix `L`, realized through polynomial representatives.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::matrix::{inverse, mat_pi_plus, pivot_columns, KMatrix, Matrix, PolyMatrix, RatMatrix};
use crate::scalar::{Poly, RatFun, Ring, Scalar};

/// A class of `U^L`, stored as its canonical representative `ρ^L x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UElement<F> {
    host: u64,
    rep: Vec<Poly<F>>,
}

impl<F: Scalar> UElement<F> {
    pub fn rep(&self) -> &[Poly<F>] {
        &self.rep
    }

    pub fn host(&self) -> u64 {
        self.host
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(Ring::is_zero)
    }

    pub fn rep_matrix(&self) -> PolyMatrix<F> {
        Matrix::from_column(self.rep.clone())
    }

    pub fn rep_rat(&self) -> RatMatrix<F> {
        Matrix::from_column(self.rep.iter().cloned().map(RatFun::from_poly).collect())
    }

    fn combine(&self, other: &Self, a: &F, b: &F) -> Result<Self> {
        if self.host != other.host {
            return Err(Error::HostMismatch);
        }
        let rep = self.rep.iter().zip(&other.rep).map(|(x, y)| x.scale(a) + y.scale(b)).collect();
        Ok(UElement { host: self.host, rep })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &F::one(), &F::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &F::one(), &-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        UElement { host: self.host, rep: self.rep.iter().map(|p| p.scale(c)).collect() }
    }
}

/// A nonsingular `L` together with its inverse; hosts the elements of `U^L`.
#[derive(Clone, Debug)]
pub struct UHost<F> {
    l: PolyMatrix<F>,
    l_inv: RatMatrix<F>,
    fingerprint: u64,
}

fn column_shape<F: Scalar>(x: &RatMatrix<F>, n: usize) -> Result<()> {
    if x.shape() != (n, 1) {
        return Err(Error::ShapeMismatch { op: "column argument", left: (n, 1), right: x.shape() });
    }
    Ok(())
}

impl<F: Scalar> UHost<F> {
    pub fn new(l: &PolyMatrix<F>) -> Result<Self> {
        l.ensure_square()?;
        let l_inv = inverse(&l.to_rat())?;
        let mut h = DefaultHasher::new();
        l.hash(&mut h);
        Ok(UHost { l: l.clone(), l_inv, fingerprint: h.finish() })
    }

    pub fn l(&self) -> &PolyMatrix<F> {
        &self.l
    }

    pub fn l_inv(&self) -> &RatMatrix<F> {
        &self.l_inv
    }

    pub fn n(&self) -> usize {
        self.l.rows()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn zero(&self) -> UElement<F> {
        UElement { host: self.fingerprint, rep: vec![Poly::zero(); self.n()] }
    }

    /// `ρ^L x = L π₊ L⁻¹ x` for a proper column `x`.
    pub fn rho(&self, x: &RatMatrix<F>) -> Result<UElement<F>> {
        column_shape(x, self.n())?;
        if !x.is_proper() {
            return Err(Error::Improper("argument of rho"));
        }
        self.rho_e(x)
    }

    /// `L π₊ L⁻¹ w` for an arbitrary rational column `w`.
    pub fn rho_e(&self, w: &RatMatrix<F>) -> Result<UElement<F>> {
        column_shape(w, self.n())?;
        let plus = mat_pi_plus(&(&self.l_inv * w));
        let rep = (&self.l * &plus).column_vec(0);
        Ok(UElement { host: self.fingerprint, rep })
    }

    /// Membership of a proper `x` in `Ker ρ^L = K∞ⁿ ∩ s⁻¹ L K∞ⁿ`, decided by
    /// properness of `s L⁻¹ x`.
    pub fn kernel_member(&self, x: &RatMatrix<F>) -> Result<bool> {
        column_shape(x, self.n())?;
        if !x.is_proper() {
            return Err(Error::Improper("argument of kernel_member"));
        }
        Ok((&self.l_inv * x).shift(1).is_proper())
    }

    /// Whether `rep` is fixed by `ρ_e`, i.e. is a canonical representative.
    pub fn is_canonical(&self, rep: &[Poly<F>]) -> bool {
        let w = Matrix::from_column(rep.iter().cloned().map(RatFun::from_poly).collect());
        self.rho_e(&w).is_ok_and(|u| u.rep == rep)
    }

    /// `⟨ρ^(Lᵀ) y, ρ^L x⟩ = (yᵀ L⁻¹ x)₀` for proper columns `y`, `x`.
    pub fn pairing(&self, y: &RatMatrix<F>, x: &RatMatrix<F>) -> Result<F> {
        column_shape(y, self.n())?;
        column_shape(x, self.n())?;
        if !y.is_proper() || !x.is_proper() {
            return Err(Error::Improper("pairing argument"));
        }
        // Only the s⁰ coefficient is needed: expand at infinity, where y and x
        // start at s⁰ and L⁻¹ at s^top, instead of forming the product.
        let top = self.l_inv.iter().filter_map(|f| f.delta().finite()).map(|d| -d).max();
        let Some(top) = top.filter(|&t| t >= 0) else { return Ok(F::zero()) };
        let ys: Vec<Vec<F>> = (0..self.n()).map(|i| y.get(i, 0).expansion(0, -top)).collect();
        let xs: Vec<Vec<F>> = (0..self.n()).map(|j| x.get(j, 0).expansion(0, -top)).collect();
        let mut v = F::zero();
        for (i, yi) in ys.iter().enumerate() {
            for (j, xj) in xs.iter().enumerate() {
                let b = self.l_inv.get(i, j);
                if b.is_zero() {
                    continue;
                }
                // b[q] is the coefficient of s^(top - q)
                for (q, bq) in b.expansion(top, 0).iter().enumerate() {
                    if bq.is_zero() {
                        continue;
                    }
                    // need exponents p + r = -(top - q) with p, r ≤ 0
                    let need = top as usize - q;
                    for p in 0..=need {
                        v = v + bq.clone() * yi[p].clone() * xj[need - p].clone();
                    }
                }
            }
        }
        Ok(v)
    }

    pub fn transpose(&self) -> Self {
        let l = self.l.transpose();
        let mut h = DefaultHasher::new();
        l.hash(&mut h);
        UHost { l, l_inv: self.l_inv.transpose(), fingerprint: h.finish() }
    }
}

pub fn rho<F: Scalar>(l: &PolyMatrix<F>, x: &RatMatrix<F>) -> Result<UElement<F>> {
    UHost::new(l)?.rho(x)
}

pub fn rho_e<F: Scalar>(l: &PolyMatrix<F>, w: &RatMatrix<F>) -> Result<UElement<F>> {
    UHost::new(l)?.rho_e(w)
}

pub fn kernel_member<F: Scalar>(l: &PolyMatrix<F>, x: &RatMatrix<F>) -> Result<bool> {
    UHost::new(l)?.kernel_member(x)
}

pub fn pairing<F: Scalar>(l: &PolyMatrix<F>, y: &RatMatrix<F>, x: &RatMatrix<F>) -> Result<F> {
    UHost::new(l)?.pairing(y, x)
}

/// Standard basis vector `s^-k e_i` of length `n`.
pub fn spanning_vector<F: Scalar>(n: usize, i: usize, k: usize) -> RatMatrix<F> {
    let mut x = RatMatrix::zeros(n, 1);
    x.set(i, 0, RatFun::s_pow(-(k as i64)));
    x
}

/// A K-basis of `U^L` with proper preimages and the matrix of the shift.
#[derive(Clone, Debug)]
pub struct UBasis<F> {
    host: UHost<F>,
    bound: Option<usize>,
    elements: Vec<UElement<F>>,
    preimages: Vec<RatMatrix<F>>,
    shift: KMatrix<F>,
    width: usize,
    selected_rows: Vec<usize>,
    selected_inv: KMatrix<F>,
}

/// Coefficients of a polynomial column, entry by entry, each padded to `width`.
fn flatten<F: Scalar>(rep: &[Poly<F>], width: usize) -> Option<Vec<F>> {
    let mut out = Vec::with_capacity(rep.len() * width);
    for p in rep {
        if p.degree().is_some_and(|d| d >= width) {
            return None;
        }
        out.extend((0..width).map(|k| p.coeff(k)));
    }
    Some(out)
}

impl<F: Scalar> UBasis<F> {
    /// Spans `U^L` by `ρ^L(s^-k e_i)` for `0 ≤ k ≤ D` and reduces to a basis.
    ///
    /// `D` is the largest entry degree of `π₊(L⁻¹)`. Writing column `i` of
    /// `L⁻¹` as `p + r` with `p` polynomial of degree at most `D` and `r`
    /// strictly proper, `s^-k g (p + r)` is strictly proper for any proper
    /// `g` once `k > D`, so those vectors lie in the kernel. Expanding a proper
    /// `x` at infinity therefore leaves only the terms with `k ≤ D`.
    pub fn compute(l: &PolyMatrix<F>) -> Result<Self> {
        Self::from_host(UHost::new(l)?)
    }

    pub fn from_host(host: UHost<F>) -> Result<Self> {
        let n = host.n();
        let bound = mat_pi_plus(&host.l_inv).max_degree();

        let mut spanning = Vec::new();
        if let Some(d) = bound {
            for k in 0..=d {
                for i in 0..n {
                    let x = spanning_vector(n, i, k);
                    let u = host.rho(&x)?;
                    spanning.push((u, x));
                }
            }
        }

        let width = spanning
            .iter()
            .flat_map(|(u, _)| u.rep.iter().filter_map(Poly::degree))
            .max()
            .map_or(0, |d| d + 1);
        let columns: Vec<Vec<F>> =
            spanning.iter().map(|(u, _)| flatten(&u.rep, width).expect("width covers all reps")).collect();
        let span_matrix = Matrix::from_fn(n * width, columns.len(), |r, c| columns[c][r].clone());
        let chosen = pivot_columns(&span_matrix);

        let basis_matrix = span_matrix.select(&(0..n * width).collect::<Vec<_>>(), &chosen);
        // Rows at which the basis columns are independent; coordinates are
        // solved on those rows and checked against the rest.
        let selected_rows = pivot_columns(&basis_matrix.transpose());
        let selected_inv = inverse(&basis_matrix.select(&selected_rows, &(0..chosen.len()).collect::<Vec<_>>()))
            .map_err(|_| Error::Verification("basis selection is not invertible".into()))?;

        let (elements, preimages) = chosen.iter().map(|&c| spanning[c].clone()).unzip();
        let mut basis = UBasis {
            host,
            bound,
            elements,
            preimages,
            shift: KMatrix::zeros(0, 0),
            width,
            selected_rows,
            selected_inv,
        };
        basis.shift = basis.action_matrix(&RatFun::s_pow(-1))?;
        Ok(basis)
    }

    pub fn host(&self) -> &UHost<F> {
        &self.host
    }

    pub fn l(&self) -> &PolyMatrix<F> {
        self.host.l()
    }

    /// Largest entry degree of `π₊(L⁻¹)`, `None` when it vanishes.
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[UElement<F>] {
        &self.elements
    }

    pub fn preimages(&self) -> &[RatMatrix<F>] {
        &self.preimages
    }

    /// Matrix of the nilpotent shift `x̄ ↦ s⁻¹ · x̄` in this basis.
    pub fn shift_matrix(&self) -> &KMatrix<F> {
        &self.shift
    }

    /// Basis representatives as the columns of an `n x dim` polynomial matrix.
    pub fn reps_matrix(&self) -> PolyMatrix<F> {
        Matrix::from_fn(self.host.n(), self.dim(), |i, j| self.elements[j].rep[i].clone())
    }

    pub fn preimages_matrix(&self) -> RatMatrix<F> {
        Matrix::from_fn(self.host.n(), self.dim(), |i, j| self.preimages[j].get(i, 0).clone())
    }

    pub fn rho(&self, x: &RatMatrix<F>) -> Result<UElement<F>> {
        self.host.rho(x)
    }

    pub fn coordinates(&self, u: &UElement<F>) -> Result<KMatrix<F>> {
        if u.host != self.host.fingerprint {
            return Err(Error::HostMismatch);
        }
        let v = flatten(&u.rep, self.width).ok_or(Error::NotInSpan)?;
        let v_sel = Matrix::from_column(self.selected_rows.iter().map(|&r| v[r].clone()).collect());
        let c = &self.selected_inv * &v_sel;
        if self.from_coordinates(&c)?.rep != u.rep {
            return Err(Error::NotInSpan);
        }
        Ok(c)
    }

    pub fn from_coordinates(&self, c: &KMatrix<F>) -> Result<UElement<F>> {
        if c.shape() != (self.dim(), 1) {
            return Err(Error::ShapeMismatch { op: "from_coordinates", left: (self.dim(), 1), right: c.shape() });
        }
        let mut acc = self.host.zero();
        for (j, e) in self.elements.iter().enumerate() {
            let cj = c.get(j, 0);
            if !cj.is_zero() {
                acc = acc.add(&e.scale(cj))?;
            }
        }
        Ok(acc)
    }

    /// A proper `x` with `ρ^L x = u`, assembled from the basis preimages.
    pub fn preimage_of(&self, u: &UElement<F>) -> Result<RatMatrix<F>> {
        let c = self.coordinates(u)?;
        let mut x = RatMatrix::zeros(self.host.n(), 1);
        for (j, p) in self.preimages.iter().enumerate() {
            let cj = c.get(j, 0);
            if !cj.is_zero() {
                x = x.try_add(&p.scale(&RatFun::constant(cj.clone())))?;
            }
        }
        Ok(x)
    }

    /// `q · ū`, the class of `q x` for a proper preimage `x` of `ū`.
    pub fn scalar_action(&self, q: &RatFun<F>, u: &UElement<F>) -> Result<UElement<F>> {
        if !q.is_proper() {
            return Err(Error::Improper("scalar"));
        }
        let x = self.preimage_of(u)?;
        self.host.rho(&x.scale(q))
    }

    /// Matrix of `ū ↦ q · ū` in this basis.
    pub fn action_matrix(&self, q: &RatFun<F>) -> Result<KMatrix<F>> {
        if !q.is_proper() {
            return Err(Error::Improper("scalar"));
        }
        let cols = self
            .preimages
            .iter()
            .map(|x| self.coordinates(&self.host.rho(&x.scale(q))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }
}

/// Matrix of the pairing between `U^(Lᵀ)` and `U^L` in the given bases:
/// entry `(i, j)` is `⟨b_T[i], b[j]⟩`, evaluated on the stored preimages.
pub fn gram_matrix<F: Scalar>(basis_t: &UBasis<F>, basis: &UBasis<F>) -> Result<KMatrix<F>> {
    if *basis_t.l() != basis.l().transpose() {
        return Err(Error::HostMismatch);
    }
    let mut g = KMatrix::zeros(basis_t.dim(), basis.dim());
    for (i, y) in basis_t.preimages().iter().enumerate() {
        for (j, x) in basis.preimages().iter().enumerate() {
            g.set(i, j, basis.host().pairing(y, x)?);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{jordan_nilpotent_blocks, rank};
    use crate::scalar::Rational;

    type PM = PolyMatrix<Rational>;
    type RM = RatMatrix<Rational>;
    type R = RatFun<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn l_example() -> PM {
        PM::from_i64_coeffs(&[&[&[], &[1]], &[&[1], &[0, 1]]])
    }

    fn e(n: usize, i: usize, k: usize) -> RM {
        spanning_vector(n, i, k)
    }

    fn col(v: &[&[i64]]) -> Vec<Poly<Rational>> {
        v.iter().map(|c| Poly::from_i64s(c)).collect()
    }

    #[test]
    fn rho_examples() {
        let l = l_example();
        assert_eq!(rho(&l, &e(2, 0, 0)).unwrap().rep(), col(&[&[1], &[]]));
        assert!(rho(&l, &e(2, 1, 1)).unwrap().is_zero());
        let x: RM = Matrix::from_column(vec![
            R::new(Poly::from_i64s(&[1, 3]), Poly::from_i64s(&[1, 2])).unwrap(),
            R::s_pow(-1),
        ]);
        let u = rho(&PM::identity(2), &x).unwrap();
        assert_eq!(u.rep()[0], Poly::constant(Rational::new(3.into(), 2.into())));
        assert!(u.rep()[1].is_zero());
    }

    #[test]
    fn rho_rejects_improper() {
        let x: RM = Matrix::from_column(vec![R::s_pow(1), R::zero()]);
        assert_eq!(rho(&l_example(), &x), Err(Error::Improper("argument of rho")));
    }

    #[test]
    fn rho_e_examples() {
        let l = l_example();
        let w: RM = Matrix::from_column(vec![R::s_pow(1), R::zero()]);
        assert_eq!(rho_e(&l, &w).unwrap().rep(), col(&[&[0, 1], &[]]));
        let x = e(2, 1, 0);
        assert_eq!(rho_e(&l, &x).unwrap(), rho(&l, &x).unwrap());
        // s^-1 L times a proper column lies in the kernel
        let v: RM = Matrix::from_column(vec![R::one(), R::s_pow(-2)]);
        let w = &l.to_rat().shift(-1) * &v;
        assert!(rho_e(&l, &w).unwrap().is_zero());
    }

    #[test]
    fn kernel_examples() {
        let l = l_example();
        assert!(kernel_member(&l, &e(2, 1, 1)).unwrap());
        assert!(!kernel_member(&l, &e(2, 0, 0)).unwrap());
        assert!(kernel_member(&l, &RM::zeros(2, 1)).unwrap());
    }

    #[test]
    fn basis_of_worked_example() {
        let b = UBasis::compute(&l_example()).unwrap();
        assert_eq!(b.bound(), Some(1));
        assert_eq!(b.dim(), 2);
        assert_eq!(b.elements()[0].rep(), col(&[&[1], &[]]));
        assert_eq!(b.elements()[1].rep(), col(&[&[], &[1]]));
        assert_eq!(b.preimages(), &[e(2, 0, 0), e(2, 1, 0)]);
        let expected = Matrix::from_rows(vec![vec![q(0), q(0)], vec![q(-1), q(0)]]).unwrap();
        assert_eq!(b.shift_matrix(), &expected);
    }

    #[test]
    fn basis_of_identity_and_trivial() {
        let b = UBasis::compute(&PM::identity(2)).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.preimages(), &[e(2, 0, 0), e(2, 1, 0)]);
        assert!(b.shift_matrix().is_zero());

        let upper = PM::from_i64_coeffs(&[&[&[0, 1], &[1]], &[&[], &[0, 1]]]);
        let b = UBasis::compute(&upper).unwrap();
        assert_eq!(b.dim(), 0);
        assert_eq!(b.shift_matrix().shape(), (0, 0));
    }

    #[test]
    fn coordinates_round_trip() {
        let b = UBasis::compute(&l_example()).unwrap();
        let b1 = &b.elements()[0];
        let b2 = &b.elements()[1];
        assert_eq!(b.coordinates(b1).unwrap(), Matrix::from_column(vec![q(1), q(0)]));
        assert_eq!(b.coordinates(&b.host().zero()).unwrap(), Matrix::from_column(vec![q(0), q(0)]));
        let u = b1.scale(&q(2)).sub(b2).unwrap();
        let c = b.coordinates(&u).unwrap();
        assert_eq!(c, Matrix::from_column(vec![q(2), q(-1)]));
        assert_eq!(b.from_coordinates(&c).unwrap(), u);
    }

    #[test]
    fn coordinates_reject_foreign_reps() {
        let b = UBasis::compute(&l_example()).unwrap();
        let other = UBasis::compute(&PM::identity(2)).unwrap();
        assert_eq!(b.coordinates(&other.elements()[0]), Err(Error::HostMismatch));
        let bad = UElement { host: b.host().fingerprint(), rep: col(&[&[0, 0, 1], &[]]) };
        assert_eq!(b.coordinates(&bad), Err(Error::NotInSpan));
    }

    #[test]
    fn scalar_action_examples() {
        let b = UBasis::compute(&l_example()).unwrap();
        let u = b.elements()[0].clone();
        assert_eq!(b.scalar_action(&R::one(), &u).unwrap(), u);
        assert_eq!(b.scalar_action(&R::s_pow(-1), &u).unwrap().rep(), col(&[&[], &[-1]]));
        assert!(b.scalar_action(&R::s_pow(-2), &u).unwrap().is_zero());
        assert_eq!(b.scalar_action(&R::s_pow(1), &u), Err(Error::Improper("scalar")));
    }

    #[test]
    fn shift_is_nilpotent_with_divisor_blocks() {
        let b = UBasis::compute(&l_example()).unwrap();
        assert_eq!(jordan_nilpotent_blocks(b.shift_matrix()), Some(vec![2]));
    }

    #[test]
    fn pairing_examples() {
        let l = l_example();
        assert_eq!(pairing(&l, &e(2, 0, 0), &e(2, 0, 0)).unwrap(), q(0));
        assert_eq!(pairing(&l, &e(2, 0, 0), &e(2, 1, 0)).unwrap(), q(1));
        // x in the kernel pairs to zero with everything
        for y in [e(2, 0, 0), e(2, 1, 0), e(2, 0, 1)] {
            assert_eq!(pairing(&l, &y, &e(2, 1, 1)).unwrap(), q(0));
        }
    }

    #[test]
    fn gram_examples() {
        let l = l_example();
        let b = UBasis::compute(&l).unwrap();
        let bt = UBasis::compute(&l.transpose()).unwrap();
        let g = gram_matrix(&bt, &b).unwrap();
        assert_eq!(g, Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap());

        let i2 = PM::identity(2);
        let b = UBasis::compute(&i2).unwrap();
        assert_eq!(gram_matrix(&b, &b).unwrap(), KMatrix::identity(2));
        assert_eq!(rank(&gram_matrix(&b, &b).unwrap()), 2);

        let upper = PM::from_i64_coeffs(&[&[&[0, 1], &[1]], &[&[], &[0, 1]]]);
        let b = UBasis::compute(&upper).unwrap();
        let bt = UBasis::compute(&upper.transpose()).unwrap();
        assert_eq!(gram_matrix(&bt, &b).unwrap().shape(), (0, 0));
        assert_eq!(gram_matrix(&b, &b).unwrap_err(), Error::HostMismatch);
    }
}
