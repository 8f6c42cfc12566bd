//! The normalized spherical mean: the unique linear functional that
//! kills every `M_jk` image and equals 1 on all powers of `X.X`. Three
//! independent routes compute it — the monomial double-factorial rule,
//! the iterated Laplacian, and the pair-partition expansion for products
//! of linear forms — together with the rotation action of exact
//! orthogonal matrices and the mean-value characterization of harmonics.
//!
//! Any other mean that kills the `M_jk` images agrees with this one up
//! to a scalar per homogeneous degree, so rescaling [`spherical_mean`]
//! degree-wise recovers the general case; no separate type is needed.

use num::bigint::BigInt;
use num::traits::One;

use crate::arith::{double_factorial, BigRational, GaussianRational};
use crate::error::Error;
use crate::ops::laplacian_iter;
use crate::poly::{Degree, Monomial, Poly};

/// `s_{2n,N} = (N-2)!! / (N+2n-2)!! = 1 / ((N+2n-2)(N+2n-4) ... N)`,
/// the degree-`2n` normalization making the mean equal 1 on `(X.X)^n`.
/// Satisfies `s_{2n+2,N} = s_{2n,N} / (N + 2n)`.
pub fn s_coeff(n: u32, dim: usize) -> BigRational {
    let mut den = BigInt::one();
    for k in 1..=n as i64 {
        den *= BigInt::from(dim as i64 + 2 * n as i64 - 2 * k);
    }
    BigRational::new(BigInt::one(), den)
}

/// The mean of a single monomial: 0 when any exponent is odd, otherwise
/// the product of `(a_j - 1)!!` times `s_{|a|,N}`.
fn monomial_mean(m: &Monomial, dim: usize) -> BigRational {
    if m.exponents().iter().any(|&e| e % 2 == 1) {
        return BigRational::from_integer(BigInt::from(0));
    }
    let mut num = BigInt::one();
    for &e in m.exponents() {
        num *= double_factorial(e as i64 - 1).expect("e - 1 >= -1");
    }
    BigRational::from_integer(num) * s_coeff(m.total_degree() / 2, dim)
}

/// The normalized spherical mean by the monomial rule, extended
/// linearly. Defined for every polynomial, any `N >= 1`; at `N = 1` the
/// rule reads 0 on odd powers and 1 on even powers of `x1`.
pub fn spherical_mean(p: &Poly) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (m, c) in p.terms() {
        let w = monomial_mean(m, p.dim());
        acc = &acc + &(c * &GaussianRational::from_rational(w));
    }
    acc
}

/// The same mean on a homogeneous polynomial through the iterated
/// Laplacian: zero in odd degree, the constant itself in degree 0, and
/// `Delta^n p / (n! 2^n (2n+N-2)(2n+N-4) ... N)` in degree `2n >= 2`.
/// Agrees exactly with [`spherical_mean`].
pub fn spherical_mean_via_laplacian(p: &Poly) -> Result<GaussianRational, Error> {
    let d = match p.homogeneous_degree() {
        None => return Err(Error::NotHomogeneous),
        Some(Degree::MinusInfinity) => return Ok(GaussianRational::zero()),
        Some(Degree::Finite(d)) => d,
    };
    if d % 2 == 1 {
        return Ok(GaussianRational::zero());
    }
    if d == 0 {
        return Ok(p.constant_term());
    }
    let n = d / 2;
    let top = laplacian_iter(p, n).constant_term();
    let mut den = BigInt::one();
    for k in 1..=n as i64 {
        den *= BigInt::from(k); // n!
    }
    for _ in 0..n {
        den *= BigInt::from(2); // 2^n
    }
    for k in 1..=n as i64 {
        den *= BigInt::from(2 * n as i64 + p.dim() as i64 - 2 * k);
    }
    let inv = GaussianRational::from_bigint(den)
        .inv()
        .expect("the normalizing denominator is a positive integer");
    Ok(&top * &inv)
}

/// All partitions of `{0, .., len-1}` into unordered pairs.
fn pairings(indices: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if indices.is_empty() {
        return vec![Vec::new()];
    }
    let first = indices[0];
    let mut out = Vec::new();
    for k in 1..indices.len() {
        let partner = indices[k];
        let rest: Vec<usize> = indices[1..]
            .iter()
            .copied()
            .filter(|&i| i != partner)
            .collect();
        for mut tail in pairings(&rest) {
            tail.push((first, partner));
            out.push(tail);
        }
    }
    out
}

/// The mean of a product of `2n` homogeneous linear forms by summing
/// over pair partitions:
/// `N^n s_{2n,N} * sum over partitions of the product of pair means`.
/// Agrees exactly with [`spherical_mean`] of the expanded product.
/// Rejects an odd count and any non-linear form.
pub fn pairing_mean(forms: &[Poly]) -> Result<GaussianRational, Error> {
    if forms.len() % 2 == 1 {
        return Err(Error::OddPairingCount);
    }
    if forms.is_empty() {
        return Ok(GaussianRational::one());
    }
    let dim = forms[0].dim();
    for f in forms {
        assert_eq!(f.dim(), dim, "all forms share one dimension");
        if f.homogeneous_degree() != Some(Degree::Finite(1)) {
            return Err(Error::NonLinearForm);
        }
    }
    let n = forms.len() / 2;
    let indices: Vec<usize> = (0..forms.len()).collect();
    let mut total = GaussianRational::zero();
    for partition in pairings(&indices) {
        let mut product = GaussianRational::one();
        for (a, b) in partition {
            let pair = spherical_mean(&(&forms[a] * &forms[b]));
            if pair.is_zero() {
                product = GaussianRational::zero();
                break;
            }
            product = &product * &pair;
        }
        total = &total + &product;
    }
    let mut scale = BigRational::from_integer(BigInt::from(dim as i64));
    let mut n_pow = BigRational::one();
    for _ in 0..n {
        n_pow *= scale.clone();
    }
    scale = n_pow * s_coeff(n as u32, dim);
    Ok(&total * &GaussianRational::from_rational(scale))
}

/// An exactly orthogonal matrix: `A^T A = I` in Q(i), checked at
/// construction.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoMatrix {
    dim: usize,
    entries: Vec<Vec<GaussianRational>>,
}

impl OrthoMatrix {
    pub fn new(entries: Vec<Vec<GaussianRational>>) -> Result<Self, Error> {
        let dim = entries.len();
        if dim == 0 || entries.iter().any(|row| row.len() != dim) {
            return Err(Error::MalformedMatrix);
        }
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = GaussianRational::zero();
                for row in &entries {
                    acc = &acc + &(&row[i] * &row[j]);
                }
                let expected = if i == j {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                };
                if acc != expected {
                    return Err(Error::NotOrthogonal);
                }
            }
        }
        Ok(OrthoMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            GaussianRational::one()
                        } else {
                            GaussianRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        OrthoMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }

    /// Matrix product; orthogonality is preserved.
    pub fn compose(&self, other: &OrthoMatrix) -> OrthoMatrix {
        assert_eq!(self.dim, other.dim);
        let entries: Vec<Vec<GaussianRational>> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut acc = GaussianRational::zero();
                        for k in 0..self.dim {
                            acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        OrthoMatrix {
            dim: self.dim,
            entries,
        }
    }

    /// The substitution images of `X |-> XA`: the image of `x_k` is
    /// `sum_m A_mk x_m`.
    pub fn images(&self) -> Vec<Poly> {
        (1..=self.dim)
            .map(|k| {
                let mut acc = Poly::zero(self.dim);
                for m in 1..=self.dim {
                    acc = &acc + &Poly::var(self.dim, m).scalar_mul(&self.entries[m - 1][k - 1]);
                }
                acc
            })
            .collect()
    }
}

/// `p(XA)` for an orthogonal `A`; a left action, so
/// `rotate(p, A.compose(B)) = rotate(rotate(p, B), A)`.
pub fn rotate(p: &Poly, a: &OrthoMatrix) -> Poly {
    assert_eq!(p.dim(), a.dim(), "dimension mismatch in rotate");
    p.substitute(&a.images())
        .expect("the matrix provides one image per variable")
}

fn plane_rotation(dim: usize, j: usize, k: usize, c: (i64, i64), s: (i64, i64)) -> OrthoMatrix {
    let mut m = OrthoMatrix::identity(dim);
    let c = GaussianRational::ratio(c.0, c.1);
    let s = GaussianRational::ratio(s.0, s.1);
    m.entries[j - 1][j - 1] = c.clone();
    m.entries[j - 1][k - 1] = s.clone();
    m.entries[k - 1][j - 1] = -&s;
    m.entries[k - 1][k - 1] = c;
    debug_assert!(OrthoMatrix::new(m.entries.clone()).is_ok());
    m
}

fn diagonal_signs(dim: usize, negatives: &[usize]) -> OrthoMatrix {
    let mut m = OrthoMatrix::identity(dim);
    for &j in negatives {
        m.entries[j - 1][j - 1] = GaussianRational::from_int(-1);
    }
    m
}

fn permutation(dim: usize, perm: impl Fn(usize) -> usize) -> OrthoMatrix {
    let mut entries = vec![vec![GaussianRational::zero(); dim]; dim];
    for j in 0..dim {
        entries[j][perm(j)] = GaussianRational::one();
    }
    OrthoMatrix::new(entries).expect("permutation matrices are orthogonal")
}

/// A library of exactly orthogonal rational matrices: permutations,
/// sign flips, embedded Pythagorean plane rotations, and a few
/// products. At least 10 distinct matrices for every `dim >= 2`.
pub fn ortho_library(dim: usize) -> Vec<OrthoMatrix> {
    assert!(dim >= 2);
    let mut out: Vec<OrthoMatrix> = Vec::new();
    let push = |m: OrthoMatrix, out: &mut Vec<OrthoMatrix>| {
        if !out.contains(&m) {
            out.push(m);
        }
    };
    push(OrthoMatrix::identity(dim), &mut out);
    push(permutation(dim, |j| (j + 1) % dim), &mut out);
    push(
        permutation(dim, |j| if j == 0 { 1 } else if j == 1 { 0 } else { j }),
        &mut out,
    );
    push(permutation(dim, |j| dim - 1 - j), &mut out);
    for j in 1..=dim.min(3) {
        push(diagonal_signs(dim, &[j]), &mut out);
    }
    push(diagonal_signs(dim, &(1..=dim).collect::<Vec<_>>()), &mut out);
    for j in 1..dim {
        push(plane_rotation(dim, j, j + 1, (3, 5), (4, 5)), &mut out);
    }
    push(plane_rotation(dim, 1, 2, (5, 13), (12, 13)), &mut out);
    push(plane_rotation(dim, 1, 2, (8, 17), (15, 17)), &mut out);
    push(plane_rotation(dim, 1, 2, (3, 5), (-4, 5)), &mut out);
    // A few composites for non-axis-aligned structure.
    let r1 = plane_rotation(dim, 1, 2, (3, 5), (4, 5));
    let r2 = plane_rotation(dim, 1, 2, (5, 13), (12, 13));
    push(r1.compose(&r2), &mut out);
    push(diagonal_signs(dim, &[1]).compose(&r1), &mut out);
    push(permutation(dim, |j| (j + 1) % dim).compose(&r2), &mut out);
    if dim >= 3 {
        let r23 = plane_rotation(dim, 2, 3, (3, 5), (4, 5));
        push(r1.compose(&r23), &mut out);
    }
    out
}

/// The mean of `p(X + t)` as an exact polynomial in the shifts
/// `t_1 .. t_N` (returned in a fresh `N`-variable ring): expand in the
/// doubled ring, apply the monomial rule to the `X`-part of every mixed
/// monomial, and collect on the `t`-part. For harmonic `p` the result is
/// `p` itself.
pub fn shifted_mean(p: &Poly) -> Poly {
    let n = p.dim();
    let doubled = p.shift();
    let mut out = Poly::zero(n);
    for (m, c) in doubled.terms() {
        let exps = m.exponents();
        let x_part = Monomial::new(exps[..n].to_vec());
        let weight = monomial_mean(&x_part, n);
        let t_part = Monomial::new(exps[n..].to_vec());
        out = &out
            + &Poly::from_terms(
                n,
                [(t_part, c * &GaussianRational::from_rational(weight))],
            );
    }
    out
}

/// The exact mean-value test: true iff the mean of `p(X + t)` equals
/// `p(t)` identically, which holds exactly for harmonic `p`.
pub fn check_mean_value_harmonic(p: &Poly) -> bool {
    shifted_mean(p) == *p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::harmonic_basis;
    use crate::text::parse_poly;

    fn p(s: &str, dim: usize) -> Poly {
        parse_poly(s, dim).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn s_coeff_values() {
        for dim in 1..=6 {
            assert_eq!(s_coeff(0, dim), q(1, 1));
        }
        assert_eq!(s_coeff(5, 4), q(1, 23040));
        assert_eq!(s_coeff(2, 4), q(1, 24));
        assert_eq!(s_coeff(2, 2), q(1, 8));
    }

    #[test]
    fn s_coeff_recursion() {
        for dim in 1..=5usize {
            for n in 0..=6u32 {
                let lhs = s_coeff(n + 1, dim);
                let rhs = s_coeff(n, dim) / q(dim as i64 + 2 * n as i64, 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn worked_monomial_mean() {
        let v = spherical_mean(&p("x1^4*x2^6", 4));
        assert_eq!(v, GaussianRational::ratio(1, 512));
    }

    #[test]
    fn mean_of_coordinate_squares() {
        for dim in 1..=5usize {
            for j in 1..=dim {
                let v = spherical_mean(&Poly::var(dim, j).pow(2));
                assert_eq!(v, GaussianRational::ratio(1, dim as i64));
            }
        }
    }

    #[test]
    fn mean_kills_odd_monomials() {
        assert!(spherical_mean(&p("x1*x2", 2)).is_zero());
        assert!(spherical_mean(&p("x1^3*x2^2", 3)).is_zero());
    }

    #[test]
    fn mean_is_one_on_radial_powers() {
        for dim in 1..=5usize {
            for n in 0..=6u32 {
                let v = spherical_mean(&Poly::x_dot_x(dim).pow(n));
                assert!(v.is_one(), "failed at N = {dim}, n = {n}");
            }
        }
    }

    #[test]
    fn one_dimensional_convention() {
        assert!(spherical_mean(&p("x1^3", 1)).is_zero());
        assert!(spherical_mean(&p("x1^4", 1)).is_one());
    }

    #[test]
    fn laplacian_route_worked_example() {
        let v = spherical_mean_via_laplacian(&p("x1^4*x2^6", 4)).unwrap();
        assert_eq!(v, GaussianRational::ratio(1, 512));
    }

    #[test]
    fn laplacian_route_small_cases() {
        assert!(spherical_mean_via_laplacian(&p("x3", 3)).unwrap().is_zero());
        assert_eq!(
            spherical_mean_via_laplacian(&p("x1^2", 3)).unwrap(),
            GaussianRational::ratio(1, 3)
        );
        assert!(spherical_mean_via_laplacian(&p("x1 + 1", 2)).is_err());
    }

    #[test]
    fn pairing_single_pair() {
        let v = pairing_mean(&[p("x1", 2), p("x1", 2)]).unwrap();
        assert_eq!(v, GaussianRational::ratio(1, 2));
        assert!(pairing_mean(&[p("x1", 2), p("x2", 2)]).unwrap().is_zero());
    }

    #[test]
    fn pairing_two_pairs() {
        // Of the three partitions only {12}{34} survives:
        // 4 * (1/8) * (1/4) = 1/8, matching the monomial route.
        let forms = [p("x1", 2), p("x1", 2), p("x2", 2), p("x2", 2)];
        let v = pairing_mean(&forms).unwrap();
        assert_eq!(v, GaussianRational::ratio(1, 8));
        assert_eq!(v, spherical_mean(&p("x1^2*x2^2", 2)));
    }

    #[test]
    fn pairing_rejects_bad_input() {
        assert!(matches!(
            pairing_mean(&[p("x1", 2)]),
            Err(Error::OddPairingCount)
        ));
        assert!(matches!(
            pairing_mean(&[p("x1^2", 2), p("x1", 2)]),
            Err(Error::NonLinearForm)
        ));
        assert!(matches!(
            pairing_mean(&[p("x1 + 1", 2), p("x1", 2)]),
            Err(Error::NonLinearForm)
        ));
    }

    #[test]
    fn orthogonality_is_checked() {
        let bad = vec![
            vec![GaussianRational::one(), GaussianRational::one()],
            vec![GaussianRational::zero(), GaussianRational::one()],
        ];
        assert!(matches!(
            OrthoMatrix::new(bad),
            Err(Error::NotOrthogonal)
        ));
        let ragged = vec![vec![GaussianRational::one()], vec![]];
        assert!(matches!(
            OrthoMatrix::new(ragged),
            Err(Error::MalformedMatrix)
        ));
    }

    #[test]
    fn rotate_by_identity() {
        let a = OrthoMatrix::identity(3);
        let q = p("x1^2*x3 - i*x2", 3);
        assert_eq!(rotate(&q, &a), q);
    }

    #[test]
    fn pythagorean_rotation_fixes_x_dot_x() {
        let a = plane_rotation(2, 1, 2, (3, 5), (4, 5));
        assert_eq!(rotate(&Poly::x_dot_x(2), &a), Poly::x_dot_x(2));
    }

    #[test]
    fn rotation_is_a_left_action() {
        let a = plane_rotation(3, 1, 2, (3, 5), (4, 5));
        let b = permutation(3, |j| (j + 1) % 3);
        let q = p("x1^2*x2 - x3^3 + i*x1*x2*x3", 3);
        let lhs = rotate(&q, &a.compose(&b));
        let rhs = rotate(&rotate(&q, &b), &a);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn library_is_large_and_exact() {
        for dim in 2..=5usize {
            let lib = ortho_library(dim);
            assert!(lib.len() >= 10, "only {} matrices at dim {dim}", lib.len());
            for m in &lib {
                // Re-run the exactness check through the public constructor.
                assert!(OrthoMatrix::new(m.entries().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn shifted_mean_examples() {
        assert_eq!(shifted_mean(&p("x1^2 - x2^2", 2)), p("x1^2 - x2^2", 2));
        assert_eq!(shifted_mean(&Poly::one(2)), Poly::one(2));
        assert_eq!(shifted_mean(&Poly::x_dot_x(2)), p("x1^2 + x2^2 + 1", 2));
    }

    #[test]
    fn mean_value_characterization_examples() {
        for h in harmonic_basis(3, 3) {
            assert!(check_mean_value_harmonic(&h));
        }
        assert!(!check_mean_value_harmonic(&Poly::x_dot_x(3)));
        assert!(!check_mean_value_harmonic(&p("x1^3", 2)));
    }
}
