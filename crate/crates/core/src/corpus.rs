//! Seeded generators for test corpora. Every generator draws from a caller
//! supplied random source, so a fixed seed reproduces the corpus exactly.

use rand::Rng;

use crate::infinity::smith_at_infinity;
use crate::matrix::{det, inverse, KMatrix, Matrix, PolyMatrix, RatMatrix};
use crate::scalar::{Poly, RatFun, Ring, Scalar};

pub fn random_scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    F::from_i64(rng.gen_range(-4..=4))
}

pub fn random_nonzero_scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    loop {
        let c = random_scalar::<F, R>(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Polynomial of degree at most `max_deg` (possibly zero).
pub fn random_poly<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Poly<F> {
    let d = rng.gen_range(0..=max_deg);
    Poly::new((0..=d).map(|_| random_scalar(rng)).collect())
}

/// Polynomial of degree exactly `deg`.
pub fn random_poly_of_degree<F: Scalar, R: Rng + ?Sized>(rng: &mut R, deg: usize) -> Poly<F> {
    let mut c: Vec<F> = (0..deg).map(|_| random_scalar(rng)).collect();
    c.push(random_nonzero_scalar(rng));
    Poly::new(c)
}

/// Monic polynomial of degree exactly `deg`.
fn random_monic<F: Scalar, R: Rng + ?Sized>(rng: &mut R, deg: usize) -> Poly<F> {
    let mut c: Vec<F> = (0..deg).map(|_| random_scalar(rng)).collect();
    c.push(F::one());
    Poly::new(c)
}

/// Proper rational function with denominator degree at most `max_den_deg`.
pub fn random_proper<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_den_deg: usize) -> RatFun<F> {
    let d = rng.gen_range(0..=max_den_deg);
    let den = random_monic(rng, d);
    RatFun::new(random_poly(rng, d), den).expect("monic denominator")
}

pub fn random_strictly_proper<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_den_deg: usize) -> RatFun<F> {
    let d = rng.gen_range(1..=max_den_deg.max(1));
    let den = random_monic(rng, d);
    RatFun::new(random_poly(rng, d - 1), den).expect("monic denominator")
}

/// Arbitrary rational function with numerator and denominator degrees at
/// most `max_deg`.
pub fn random_ratfun<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> RatFun<F> {
    let d = rng.gen_range(0..=max_deg);
    let den = random_monic(rng, d);
    RatFun::new(random_poly(rng, max_deg), den).expect("monic denominator")
}

pub fn random_proper_matrix<F: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    max_den_deg: usize,
) -> RatMatrix<F> {
    Matrix::from_fn(rows, cols, |_, _| random_proper(rng, max_den_deg))
}

pub fn random_kmatrix<F: Scalar, R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> KMatrix<F> {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng))
}

pub fn random_invertible_kmatrix<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> KMatrix<F> {
    loop {
        let m: KMatrix<F> = random_kmatrix(rng, n, n);
        if !det(&m).expect("square").is_zero() {
            return m;
        }
    }
}

fn k_to_poly<F: Scalar>(m: &KMatrix<F>) -> PolyMatrix<F> {
    m.map(|c| Poly::constant(c.clone()))
}

fn k_to_rat<F: Scalar>(m: &KMatrix<F>) -> RatMatrix<F> {
    RatMatrix::from_k(m)
}

/// Product of a unit lower and a unit upper triangular matrix with linear
/// off-diagonal entries: unimodular, typically with nontrivial structure at
/// infinity.
pub fn random_unimodular<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> PolyMatrix<F> {
    let lower: PolyMatrix<F> = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Poly::one(),
        std::cmp::Ordering::Greater if rng.gen_bool(0.5) => random_poly(rng, 1),
        _ => Poly::zero(),
    });
    let upper: PolyMatrix<F> = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Poly::one(),
        std::cmp::Ordering::Less if rng.gen_bool(0.5) => random_poly(rng, 1),
        _ => Poly::zero(),
    });
    &lower * &upper
}

fn random_diagonal_entries<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, max_deg: usize) -> Vec<Poly<F>> {
    (0..n)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            random_poly_of_degree(rng, d)
        })
        .collect()
}

fn random_diagonal<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, max_deg: usize) -> PolyMatrix<F> {
    PolyMatrix::diagonal(random_diagonal_entries(rng, n, max_deg))
}

fn nonsingular<F: Scalar>(l: &PolyMatrix<F>) -> bool {
    !det(&l.to_rat()).expect("square").is_zero()
}

/// Nonsingular `n x n` polynomial matrix with entry degree at most `max_deg`,
/// drawn from a mix of dense, diagonal-equivalent and unimodular families.
pub fn random_nonsingular_l<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, max_deg: usize) -> PolyMatrix<F> {
    loop {
        let l = match rng.gen_range(0..4) {
            0 => Matrix::from_fn(n, n, |_, _| if rng.gen_bool(0.7) { random_poly(rng, max_deg) } else { Poly::zero() }),
            1 => {
                let diag = random_diagonal(rng, n, max_deg);
                let a = k_to_poly(&random_invertible_kmatrix(rng, n));
                let b = k_to_poly(&random_invertible_kmatrix(rng, n));
                &(&a * &diag) * &b
            }
            2 => {
                let diag = random_diagonal(rng, n, max_deg.min(1));
                &(&random_unimodular(rng, n) * &diag) * &random_unimodular(rng, n)
            }
            _ => random_unimodular(rng, n),
        };
        if l.max_degree().unwrap_or(0) <= max_deg && nonsingular(&l) {
            return l;
        }
    }
}

/// Nilpotent Jordan matrix with the given block sizes.
fn nilpotent<F: Scalar>(blocks: &[usize]) -> KMatrix<F> {
    let n: usize = blocks.iter().sum();
    let mut m = KMatrix::zeros(n, n);
    let mut start = 0;
    for &b in blocks {
        for i in start..start + b - 1 {
            m.set(i, i + 1, F::one());
        }
        start += b;
    }
    m
}

/// `(A0, A1)` with `A0 - A1 s` nonsingular: either a generic pair with rank
/// deficient `A1`, or a Weierstrass form `diag(I - N s, J - s I)` moved by
/// random constant equivalences.
pub fn random_pencil<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> (KMatrix<F>, KMatrix<F>) {
    loop {
        let (a0, a1) = if rng.gen_bool(0.5) {
            let r = rng.gen_range(0..=n);
            let a1 = &random_kmatrix::<F, R>(rng, n, r) * &random_kmatrix(rng, r, n);
            (random_kmatrix(rng, n, n), a1)
        } else {
            let inf = rng.gen_range(0..=n);
            let mut blocks = Vec::new();
            let mut left = inf;
            while left > 0 {
                let b = rng.gen_range(1..=left);
                blocks.push(b);
                left -= b;
            }
            let nil = nilpotent::<F>(&blocks);
            let fin = n - inf;
            let j = random_kmatrix::<F, R>(rng, fin, fin);
            let mut a0 = KMatrix::zeros(n, n);
            let mut a1 = KMatrix::zeros(n, n);
            for i in 0..inf {
                a0.set(i, i, F::one());
                for k in 0..inf {
                    a1.set(i, k, nil.get(i, k).clone());
                }
            }
            for i in 0..fin {
                a1.set(inf + i, inf + i, F::one());
                for k in 0..fin {
                    a0.set(inf + i, inf + k, j.get(i, k).clone());
                }
            }
            let x = random_invertible_kmatrix(rng, n);
            let y = random_invertible_kmatrix(rng, n);
            (&(&x * &a0) * &y, &(&x * &a1) * &y)
        };
        if nonsingular(&pencil(&a0, &a1)) {
            return (a0, a1);
        }
    }
}

/// `A0 - A1 s`.
pub fn pencil<F: Scalar>(a0: &KMatrix<F>, a1: &KMatrix<F>) -> PolyMatrix<F> {
    Matrix::from_fn(a0.rows(), a0.cols(), |i, j| Poly::new(vec![a0.get(i, j).clone(), -a1.get(i, j).clone()]))
}

/// `A0 s - A1`, the reversal of [`pencil`].
pub fn reversed_pencil<F: Scalar>(a0: &KMatrix<F>, a1: &KMatrix<F>) -> PolyMatrix<F> {
    Matrix::from_fn(a0.rows(), a0.cols(), |i, j| Poly::new(vec![-a1.get(i, j).clone(), a0.get(i, j).clone()]))
}

/// Random element of `Ker ρ^L = P diag(A, I) K∞ⁿ` where `s⁻¹ L = P Σ Q`.
pub fn random_kernel_element<F: Scalar, R: Rng + ?Sized>(rng: &mut R, l: &PolyMatrix<F>) -> RatMatrix<F> {
    let f = smith_at_infinity(&l.to_rat().shift(-1));
    let n = l.rows();
    let t = f.profile.alphas.len();
    let gens = RatMatrix::diagonal((0..n).map(|i| if i < t { f.sigma.get(i, i).clone() } else { RatFun::one() }).collect());
    &(&f.p * &gens) * &random_proper_matrix(rng, n, 1, 1)
}

/// An intertwining pair `Θ L = L1 Θ1` with both sides proper.
#[derive(Clone, Debug)]
pub struct IntertwinerCase<F> {
    pub family: &'static str,
    pub l: PolyMatrix<F>,
    pub l1: PolyMatrix<F>,
    pub theta: RatMatrix<F>,
    pub theta1: RatMatrix<F>,
}

/// Diagonal `L = A diag(p) B`, `L1 = A1 diag(q) B1` with entries
/// `θ_ji = g q_j s^(-deg q_j) s^(-max(0, deg p_i - deg q_j))`, so that
/// `Θ1 = L1⁻¹ Θ L` is proper entrywise before the constant change of basis.
fn diagonal_case<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, n1: usize) -> IntertwinerCase<F> {
    let p = random_diagonal_entries::<F, R>(rng, n, 3);
    let q = random_diagonal_entries::<F, R>(rng, n1, 3);
    let deg = |x: &Poly<F>| x.degree().unwrap_or(0) as i64;
    let mut theta = RatMatrix::zeros(n1, n);
    let mut theta1 = RatMatrix::zeros(n1, n);
    for (j, qj) in q.iter().enumerate() {
        for (i, pi) in p.iter().enumerate() {
            if rng.gen_bool(0.25) {
                continue;
            }
            let g: RatFun<F> = if rng.gen_bool(0.5) { RatFun::constant(random_scalar(rng)) } else { random_proper(rng, 1) };
            let extra = (deg(pi) - deg(qj)).max(0);
            let shift = -deg(qj) - extra;
            let t = (g.clone() * RatFun::from_poly(qj.clone())).shift(shift);
            let t1 = (g * RatFun::from_poly(pi.clone())).shift(shift);
            theta.set(j, i, t);
            theta1.set(j, i, t1);
        }
    }
    let a = random_invertible_kmatrix::<F, R>(rng, n);
    let b = random_invertible_kmatrix::<F, R>(rng, n);
    let a1 = random_invertible_kmatrix::<F, R>(rng, n1);
    let b1 = random_invertible_kmatrix::<F, R>(rng, n1);
    let l = &(&k_to_poly(&a) * &PolyMatrix::diagonal(p)) * &k_to_poly(&b);
    let l1 = &(&k_to_poly(&a1) * &PolyMatrix::diagonal(q)) * &k_to_poly(&b1);
    let inv = |m: &KMatrix<F>| k_to_rat(&inverse(m).expect("invertible"));
    IntertwinerCase {
        family: "diagonal",
        theta: &(&k_to_rat(&a1) * &theta) * &inv(&a),
        theta1: &(&inv(&b1) * &theta1) * &k_to_rat(&b),
        l,
        l1,
    }
}

/// `Θ = Θ1 = g I` on a single `L`: multiplication by a proper scalar.
fn scalar_case<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> IntertwinerCase<F> {
    let l = random_nonsingular_l(rng, n, 3);
    let g: RatFun<F> = match rng.gen_range(0..3) {
        0 => RatFun::constant(random_scalar(rng)),
        1 => RatFun::s_pow(-(rng.gen_range(1..=2))),
        _ => random_proper(rng, 2),
    };
    let m = RatMatrix::identity(n).scale(&g);
    IntertwinerCase { family: "scalar", l: l.clone(), l1: l, theta: m.clone(), theta1: m }
}

/// The map `U^L → U^(L1)` for `L = [[0,1],[1,s]]`, `L1 = diag(s², 1)`.
pub fn worked_case<F: Scalar>() -> IntertwinerCase<F> {
    IntertwinerCase {
        family: "worked",
        l: PolyMatrix::from_i64_coeffs(&[&[&[], &[1]], &[&[1], &[0, 1]]]),
        l1: PolyMatrix::diagonal(vec![Poly::from_i64s(&[0, 0, 1]), Poly::one()]),
        theta: RatMatrix::from_i64s(&[&[0, 0], &[1, 0]]),
        theta1: RatMatrix::from_i64s(&[&[0, 0], &[0, 1]]),
    }
}

/// `Θ += L1 X`, `Θ1 += X L` with `X = s^-d E` and `d` at least the degree of
/// both `L` and `L1`; the induced map is unchanged.
pub fn perturb_intertwiner<F: Scalar, R: Rng + ?Sized>(rng: &mut R, case: &IntertwinerCase<F>) -> IntertwinerCase<F> {
    let d = case.l.max_degree().unwrap_or(0).max(case.l1.max_degree().unwrap_or(0)) as i64;
    let x = RatMatrix::from_k(&random_kmatrix::<F, R>(rng, case.l1.rows(), case.l.rows())).shift(-d);
    IntertwinerCase {
        family: case.family,
        l: case.l.clone(),
        l1: case.l1.clone(),
        theta: case.theta.try_add(&(&case.l1.to_rat() * &x)).expect("shapes"),
        theta1: case.theta1.try_add(&(&x * &case.l.to_rat())).expect("shapes"),
    }
}

/// Intertwiner with sizes up to `max_n`, drawn from the diagonal, scalar and
/// worked families and then perturbed within its class.
pub fn random_intertwiner<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> IntertwinerCase<F> {
    let (n, n1) = (rng.gen_range(1..=max_n), rng.gen_range(1..=max_n));
    let base = match rng.gen_range(0..10) {
        0..=5 => diagonal_case(rng, n, n1),
        6..=8 => scalar_case(rng, n),
        _ => worked_case(),
    };
    if rng.gen_bool(0.5) {
        perturb_intertwiner(rng, &base)
    } else {
        base
    }
}

/// `Θ + s^-d L1 E` with `d = max(1, deg L1)`: still proper, still maps
/// `Ker ρ^L` into `Ker ρ^(L1)`, usually no longer intertwining.
pub fn perturb_for_completion<F: Scalar, R: Rng + ?Sized>(rng: &mut R, case: &IntertwinerCase<F>) -> RatMatrix<F> {
    let d = case.l1.max_degree().unwrap_or(0).max(1) as i64;
    let e = RatMatrix::from_k(&random_kmatrix::<F, R>(rng, case.l1.rows(), case.l.rows()));
    case.theta.try_add(&(&case.l1.to_rat() * &e).shift(-d)).expect("shapes")
}

/// Transfer matrix with numerator and denominator degrees at most `max_deg`.
pub fn random_transfer<F: Scalar, R: Rng + ?Sized>(rng: &mut R, m: usize, p: usize, max_deg: usize) -> RatMatrix<F> {
    Matrix::from_fn(m, p, |_, _| if rng.gen_bool(0.85) { random_ratfun(rng, max_deg) } else { RatFun::zero() })
}

fn block_diag<F: Scalar>(blocks: &[PolyMatrix<F>]) -> PolyMatrix<F> {
    let n: usize = blocks.iter().map(Matrix::rows).sum();
    let mut out = PolyMatrix::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(at + i, at + j, b.get(i, j).clone());
            }
        }
        at += b.rows();
    }
    out
}

/// Twelve fixed matrices with varied structure at infinity, named.
pub fn zoo<F: Scalar>() -> Vec<(&'static str, PolyMatrix<F>)> {
    let scalar = |c: &[i64]| PolyMatrix::diagonal(vec![Poly::from_i64s(c)]);
    let worked = || PolyMatrix::from_i64_coeffs(&[&[&[], &[1]], &[&[1], &[0, 1]]]);
    let shear = || PolyMatrix::from_i64_coeffs(&[&[&[1], &[0, 0, 1]], &[&[], &[1]]]);
    let one = || scalar(&[1]);
    vec![
        ("s", scalar(&[0, 1])),
        ("one", one()),
        ("diag_s2_1", PolyMatrix::diagonal(vec![Poly::from_i64s(&[0, 0, 1]), Poly::one()])),
        ("worked", worked()),
        ("identity2", PolyMatrix::identity(2)),
        ("shear_s2", shear()),
        ("chain3", PolyMatrix::from_i64_coeffs(&[&[&[1], &[0, 1], &[]], &[&[], &[1], &[0, 1]], &[&[], &[], &[1]]])),
        ("one_worked", block_diag(&[one(), worked()])),
        ("worked_worked", block_diag(&[worked(), worked()])),
        ("shear_one", block_diag(&[shear(), one()])),
        ("s_identity2", block_diag(&[scalar(&[0, 1]), PolyMatrix::identity(2)])),
        ("identity3", PolyMatrix::identity(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::check_intertwining;
    use crate::infinity::infinite_elementary_divisors;
    use crate::scalar::Rational;
    use crate::umodule::UHost;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn intertwiners_intertwine() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let c = random_intertwiner::<Rational, _>(&mut rng, 3);
            assert!(check_intertwining(&c.theta, &c.theta1, &c.l, &c.l1).unwrap(), "{}", c.family);
        }
    }

    #[test]
    fn kernel_elements_are_in_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let l = random_nonsingular_l::<Rational, _>(&mut rng, 3, 3);
            let x = random_kernel_element(&mut rng, &l);
            assert!(UHost::new(&l).unwrap().kernel_member(&x).unwrap());
        }
    }

    #[test]
    fn pencils_are_nonsingular_pencils() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let (a0, a1) = random_pencil::<Rational, _>(&mut rng, 3);
            let l = pencil(&a0, &a1);
            assert!(l.max_degree().unwrap_or(0) <= 1);
            assert!(infinite_elementary_divisors(&l).is_ok());
        }
    }

    #[test]
    fn zoo_profiles() {
        let alphas: Vec<Vec<usize>> =
            zoo::<Rational>().iter().map(|(_, l)| infinite_elementary_divisors(l).unwrap()).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![1],
            vec![1],
            vec![2],
            vec![1, 1],
            vec![3],
            vec![3],
            vec![2, 1],
            vec![2, 2],
            vec![3, 1],
            vec![1, 1],
            vec![1, 1, 1],
        ];
        assert_eq!(alphas, expected);
    }
}
