//! Harmonic polynomials: harmonicity, the unique decomposition in base
//! `X.X`, the sphere projection `L_c`, construction of homogeneous
//! harmonics from boundary data, harmonic bases, and the eigenspace
//! structure of `(X.X) * Laplacian`.

use num::bigint::BigInt;
use num::traits::ToPrimitive;

use crate::arith::{binomial, GaussianRational};
use crate::error::Error;
use crate::ops::laplacian;
use crate::poly::{monomials_of_degree, Degree, Poly};

/// True iff the Laplacian of `p` vanishes.
pub fn is_harmonic(p: &Poly) -> bool {
    laplacian(p).is_zero()
}

/// The unique expression `p = p0 + (X.X) p1 + ... + (X.X)^s ps` with
/// every part harmonic.
///
/// For homogeneous input of degree `d`, each nonzero part `pj` is
/// homogeneous of degree `d - 2j`. Trailing zero parts are trimmed, so a
/// harmonic polynomial decomposes as `[p]` and the zero polynomial as
/// the empty list.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicDecomposition {
    dim: usize,
    parts: Vec<Poly>,
}

impl HarmonicDecomposition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The parts `[p0, p1, ..., ps]`.
    pub fn parts(&self) -> &[Poly] {
        &self.parts
    }

    /// `sum_j (X.X)^j pj`, recovering the source polynomial exactly.
    pub fn reconstruct(&self) -> Poly {
        let xx = Poly::x_dot_x(self.dim);
        let mut acc = Poly::zero(self.dim);
        let mut power = Poly::one(self.dim);
        for part in &self.parts {
            acc = &acc + &(&power * part);
            power = &power * &xx;
        }
        acc
    }
}

/// Decomposes `p` in base `X.X` with harmonic parts.
///
/// For homogeneous `p` of degree `d` the parts come from a triangular
/// solve: with `p = sum_j (X.X)^j pj` and `c(m, e) = 2m(2m + N - 2 + 2e)`
/// the iterated Laplacians satisfy
/// `Delta^k p = sum_{j >= k} A(j, k) (X.X)^(j-k) pj`, where `A(j, k)`
/// multiplies the factors `c(m, d - 2j)` for `m = j-k+1 ..= j`. Solving
/// from `k = floor(d/2)` downward needs only divisions by explicit
/// positive integers. Non-homogeneous input decomposes per homogeneous
/// component and recombines.
pub fn harmonic_decompose(p: &Poly) -> HarmonicDecomposition {
    let dim = p.dim();
    let mut parts: Vec<Poly> = Vec::new();
    let top = match p.degree() {
        Degree::MinusInfinity => {
            return HarmonicDecomposition { dim, parts };
        }
        Degree::Finite(d) => d,
    };
    for d in 0..=top {
        let component = p.homogeneous_component(d as i64);
        if component.is_zero() {
            continue;
        }
        for (j, part) in decompose_homogeneous(&component, d).into_iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            while parts.len() <= j {
                parts.push(Poly::zero(dim));
            }
            parts[j] = &parts[j] + &part;
        }
    }
    while parts.last().is_some_and(|q| q.is_zero()) {
        parts.pop();
    }
    HarmonicDecomposition { dim, parts }
}

/// `c(m, e)`: the factor produced when the Laplacian hits
/// `(X.X)^m h` for harmonic homogeneous `h` of degree `e`.
fn lap_factor(dim: usize, m: u32, e: u32) -> i64 {
    let m = m as i64;
    2 * m * (2 * m + dim as i64 - 2 + 2 * e as i64)
}

fn decompose_homogeneous(p: &Poly, d: u32) -> Vec<Poly> {
    let dim = p.dim();
    let s = d / 2;
    let xx = Poly::x_dot_x(dim);
    // deltas[k] = Delta^k p.
    let mut deltas = Vec::with_capacity(s as usize + 1);
    deltas.push(p.clone());
    for k in 1..=s {
        let next = laplacian(&deltas[k as usize - 1]);
        deltas.push(next);
    }
    let mut parts = vec![Poly::zero(dim); s as usize + 1];
    for k in (0..=s).rev() {
        // residual = Delta^k p - sum_{j > k} A(j, k) (X.X)^(j-k) pj.
        let mut residual = deltas[k as usize].clone();
        for j in (k + 1)..=s {
            let mut factor = BigInt::from(1);
            for m in (j - k + 1)..=j {
                factor *= BigInt::from(lap_factor(dim, m, d - 2 * j));
            }
            let scaled = parts[j as usize]
                .scalar_mul(&GaussianRational::from_bigint(factor));
            residual = &residual - &(&xx.pow(j - k) * &scaled);
        }
        let mut divisor = BigInt::from(1);
        for m in 1..=k {
            divisor *= BigInt::from(lap_factor(dim, m, d - 2 * k));
        }
        let inv = GaussianRational::from_bigint(divisor)
            .inv()
            .expect("the triangular divisors are positive integers");
        parts[k as usize] = residual.scalar_mul(&inv);
    }
    parts
}

/// The projection `L_c`: the unique harmonic polynomial congruent to `p`
/// modulo the ideal of `X.X - c`. Acts as `sum_j c^j pj` on the harmonic
/// decomposition, is the identity on harmonics, and commutes with every
/// rotation generator.
pub fn project_lc(p: &Poly, c: &GaussianRational) -> Poly {
    let dec = harmonic_decompose(p);
    let mut acc = Poly::zero(p.dim());
    let mut scale = GaussianRational::one();
    for part in dec.parts() {
        acc = &acc + &part.scalar_mul(&scale);
        scale = &scale * c;
    }
    acc
}

/// Builds the homogeneous harmonic polynomial of degree `d` in `dim`
/// variables determined by boundary data `p0`, `p1` in `dim - 1`
/// variables: writing `p = sum_k pk x_dim^k`, the higher coefficients
/// are `p_{2k} = (-1)^k Delta^k p0 / (2k)!` and
/// `p_{2k+1} = (-1)^k Delta^k p1 / (2k+1)!`.
///
/// `p0` must be zero or homogeneous of degree `d`, `p1` zero or
/// homogeneous of degree `d - 1`. The map `(p0, p1) -> p` is linear and
/// injective; zero data yields the zero polynomial for every `d`.
pub fn harmonic_from_boundary(p0: &Poly, p1: &Poly, dim: usize, d: u32) -> Result<Poly, Error> {
    assert!(dim >= 2, "boundary construction needs at least two variables");
    assert_eq!(p0.dim(), dim - 1, "p0 must live in dimension {}", dim - 1);
    assert_eq!(p1.dim(), dim - 1, "p1 must live in dimension {}", dim - 1);
    check_boundary_degree(p0, d as i64, "p0")?;
    check_boundary_degree(p1, d as i64 - 1, "p1")?;

    let xn = Poly::var(dim, dim);
    let mut acc = Poly::zero(dim);
    // Even chain from p0.
    let mut chain = p0.clone();
    let mut k = 0u32;
    while !chain.is_zero() {
        let coeff = layer_coefficient(k, 2 * k);
        acc = &acc + &(&chain.extend_dim(dim).scalar_mul(&coeff) * &xn.pow(2 * k));
        chain = laplacian(&chain);
        k += 1;
    }
    // Odd chain from p1.
    let mut chain = p1.clone();
    let mut k = 0u32;
    while !chain.is_zero() {
        let coeff = layer_coefficient(k, 2 * k + 1);
        acc = &acc + &(&chain.extend_dim(dim).scalar_mul(&coeff) * &xn.pow(2 * k + 1));
        chain = laplacian(&chain);
        k += 1;
    }
    Ok(acc)
}

/// `(-1)^k / e!`, the weight of the `k`-fold Laplacian layer sitting at
/// exponent `e` (`2k` on the even chain, `2k + 1` on the odd one).
fn layer_coefficient(k: u32, e: u32) -> GaussianRational {
    let mut fact = BigInt::from(1);
    for m in 1..=e {
        fact *= BigInt::from(m);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    &GaussianRational::from_int(sign)
        * &GaussianRational::from_bigint(fact)
            .inv()
            .expect("factorials are nonzero")
}

fn check_boundary_degree(p: &Poly, want: i64, name: &str) -> Result<(), Error> {
    if p.is_zero() {
        return Ok(());
    }
    match p.homogeneous_degree() {
        Some(Degree::Finite(got)) if got as i64 == want => Ok(()),
        Some(Degree::Finite(got)) => Err(Error::DegreeMismatch {
            expected: format!("{name} homogeneous of degree {want}"),
            got: got.to_string(),
        }),
        _ => Err(Error::DegreeMismatch {
            expected: format!("{name} homogeneous of degree {want}"),
            got: "non-homogeneous".into(),
        }),
    }
}

/// The rank of the module of homogeneous harmonics of degree `d` in
/// `dim` variables: `C(N+d-2, N-2) + C(N+d-3, N-2)`.
pub fn harmonic_rank(dim: usize, d: u32) -> BigInt {
    let n = dim as i64;
    let d = d as i64;
    binomial(n + d - 2, n - 2) + binomial(n + d - 3, n - 2)
}

/// The same rank through the Laplacian-surjectivity route:
/// `C(N+d-1, N-1) - C(N+d-3, N-1)`.
pub fn harmonic_rank_alt(dim: usize, d: u32) -> BigInt {
    let n = dim as i64;
    let d = d as i64;
    binomial(n + d - 1, n - 1) - binomial(n + d - 3, n - 1)
}

/// A basis of the homogeneous harmonics of degree `d` in `dim >= 2`
/// variables, obtained by feeding the monomial bases of the two boundary
/// slots through [`harmonic_from_boundary`]. Deterministic order: the
/// degree-`d` monomials first, then the degree-`d-1` ones, each
/// ascending graded-lex.
pub fn harmonic_basis(dim: usize, d: u32) -> Vec<Poly> {
    assert!(dim >= 2, "harmonic basis needs at least two variables");
    let mut out = Vec::new();
    let zero = Poly::zero(dim - 1);
    for m in monomials_of_degree(dim - 1, d) {
        let p0 = Poly::from_terms(dim - 1, [(m, GaussianRational::one())]);
        out.push(
            harmonic_from_boundary(&p0, &zero, dim, d)
                .expect("monomial boundary data is homogeneous of the right degree"),
        );
    }
    if d >= 1 {
        for m in monomials_of_degree(dim - 1, d - 1) {
            let p1 = Poly::from_terms(dim - 1, [(m, GaussianRational::one())]);
            out.push(
                harmonic_from_boundary(&zero, &p1, dim, d)
                    .expect("monomial boundary data is homogeneous of the right degree"),
            );
        }
    }
    out
}

/// Splits a homogeneous polynomial into eigenvectors of `(X.X) *
/// Laplacian`: the part `(X.X)^m pm` of the harmonic decomposition has
/// eigenvalue `2m (N - 2 + 2d - 2m)`. Zero parts are skipped, the listed
/// components sum to `p`, and a harmonic input yields one component with
/// eigenvalue 0.
pub fn eigensplit_xx_laplacian(p: &Poly) -> Result<Vec<(GaussianRational, Poly)>, Error> {
    let d = match p.homogeneous_degree() {
        Some(Degree::Finite(d)) => d,
        Some(Degree::MinusInfinity) => return Ok(Vec::new()),
        None => return Err(Error::NotHomogeneous),
    };
    let xx = Poly::x_dot_x(p.dim());
    let dec = harmonic_decompose(p);
    let mut out = Vec::new();
    for (m, part) in dec.parts().iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        let m_i = m as i64;
        let lambda = 2 * m_i * (p.dim() as i64 - 2 + 2 * d as i64 - 2 * m_i);
        out.push((
            GaussianRational::from_int(lambda),
            &xx.pow(m as u32) * part,
        ));
    }
    Ok(out)
}

/// Convenience for tests and verification: `dim` as `usize` from a rank
/// formula value that is known to be small.
pub fn rank_as_usize(r: &BigInt) -> usize {
    r.to_usize().expect("rank fits in usize at desk scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn p(s: &str, dim: usize) -> Poly {
        parse_poly(s, dim).unwrap()
    }

    fn half() -> GaussianRational {
        GaussianRational::ratio(1, 2)
    }

    #[test]
    fn harmonicity_examples() {
        assert!(is_harmonic(&p("x1^2 - x2^2", 2)));
        for n in 1..=4 {
            assert!(!is_harmonic(&Poly::x_dot_x(n)));
        }
        for d in 1..=5u32 {
            assert!(is_harmonic(&p("x1 + i*x2", 2).pow(d)));
        }
    }

    #[test]
    fn decompose_x1_squared() {
        // x1^2 = 1/2 (x1^2 - x2^2) + (X.X) 1/2 in two variables.
        let dec = harmonic_decompose(&p("x1^2", 2));
        assert_eq!(dec.parts().len(), 2);
        assert_eq!(dec.parts()[0], p("x1^2 - x2^2", 2).scalar_mul(&half()));
        assert_eq!(dec.parts()[1], Poly::constant(2, half()));
        assert_eq!(dec.reconstruct(), p("x1^2", 2));
    }

    #[test]
    fn decompose_harmonic_is_itself() {
        let h = p("x1^3 - 3*x1*x2^2", 2);
        let dec = harmonic_decompose(&h);
        assert_eq!(dec.parts(), &[h]);
    }

    #[test]
    fn decompose_pure_power_of_x_dot_x() {
        let q = Poly::x_dot_x(3).pow(2);
        let dec = harmonic_decompose(&q);
        assert_eq!(
            dec.parts(),
            &[Poly::zero(3), Poly::zero(3), Poly::one(3)]
        );
    }

    #[test]
    fn decompose_zero() {
        let dec = harmonic_decompose(&Poly::zero(4));
        assert!(dec.parts().is_empty());
        assert!(dec.reconstruct().is_zero());
    }

    #[test]
    fn decompose_round_trip_non_homogeneous() {
        let q = p("x1^4 - 2*x1*x2 + 3 + i*x2^3", 2);
        let dec = harmonic_decompose(&q);
        assert_eq!(dec.reconstruct(), q);
        for part in dec.parts() {
            assert!(is_harmonic(part));
        }
    }

    #[test]
    fn projection_of_power_is_scalar() {
        for n in 2..=4usize {
            for k in 0..=3u32 {
                let c = GaussianRational::ratio(3, 7);
                let out = project_lc(&Poly::x_dot_x(n).pow(k), &c);
                assert_eq!(out, Poly::constant(n, c.pow(k)));
            }
        }
    }

    #[test]
    fn projection_fixes_harmonics() {
        let h = p("x1^2 - x2^2 + i*x1*x2", 2);
        assert!(is_harmonic(&h));
        assert_eq!(project_lc(&h, &GaussianRational::ratio(-2, 5)), h);
    }

    #[test]
    fn projection_commutes_with_rotations() {
        use crate::ops::rotation_generator;
        let q = p("x1^3*x3 - 2*x2^2 + x3^4", 3);
        let c = GaussianRational::ratio(5, 3);
        for (j, k) in [(1, 2), (1, 3), (2, 3)] {
            let lhs = project_lc(&rotation_generator(&q, j, k), &c);
            let rhs = rotation_generator(&project_lc(&q, &c), j, k);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn boundary_real_part_of_binomial_power() {
        // p0 = x^d, p1 = 0 gives the real part of (x + iy)^d.
        for d in 1..=6u32 {
            let p0 = Poly::var(1, 1).pow(d);
            let h = harmonic_from_boundary(&p0, &Poly::zero(1), 2, d).unwrap();
            let z = p("x1 + i*x2", 2).pow(d);
            let zbar = p("x1 - i*x2", 2).pow(d);
            let re = (&z + &zbar).scalar_mul(&half());
            assert_eq!(h, re);
        }
    }

    #[test]
    fn boundary_constant() {
        let h = harmonic_from_boundary(&Poly::one(1), &Poly::zero(1), 2, 0).unwrap();
        assert_eq!(h, Poly::one(2));
    }

    #[test]
    fn boundary_x1_squared_in_three_vars() {
        let h = harmonic_from_boundary(&p("x1^2", 2), &Poly::zero(2), 3, 2).unwrap();
        assert_eq!(h, p("x1^2 - x3^2", 3));
        assert!(is_harmonic(&h));
    }

    #[test]
    fn boundary_zero_data_any_degree() {
        for d in 0..=5u32 {
            let h = harmonic_from_boundary(&Poly::zero(2), &Poly::zero(2), 3, d).unwrap();
            assert!(h.is_zero());
        }
    }

    #[test]
    fn boundary_rejects_wrong_degree() {
        assert!(harmonic_from_boundary(&p("x1^2", 2), &Poly::zero(2), 3, 3).is_err());
        assert!(harmonic_from_boundary(&p("x1 + 1", 2), &Poly::zero(2), 3, 1).is_err());
        assert!(harmonic_from_boundary(&Poly::zero(2), &p("x1^2", 2), 3, 2).is_err());
    }

    #[test]
    fn basis_sizes() {
        for d in 1..=6u32 {
            assert_eq!(harmonic_basis(2, d).len(), 2);
        }
        assert_eq!(harmonic_basis(3, 2).len(), 5);
        assert_eq!(harmonic_basis(2, 0).len(), 1);
        assert_eq!(harmonic_basis(2, 0)[0], Poly::one(2));
    }

    #[test]
    fn basis_elements_are_harmonic_and_homogeneous() {
        for dim in 2..=4usize {
            for d in 0..=4u32 {
                for h in harmonic_basis(dim, d) {
                    assert!(is_harmonic(&h));
                    assert!(
                        h.homogeneous_degree() == Some(Degree::Finite(d)) || h.is_zero() && d == 0
                    );
                }
            }
        }
    }

    #[test]
    fn rank_formulas_agree() {
        for dim in 2..=6usize {
            for d in 0..=9u32 {
                assert_eq!(harmonic_rank(dim, d), harmonic_rank_alt(dim, d));
            }
        }
    }

    #[test]
    fn eigensplit_of_harmonic() {
        let h = p("x1*x2", 3);
        let split = eigensplit_xx_laplacian(&h).unwrap();
        assert_eq!(split.len(), 1);
        assert!(split[0].0.is_zero());
        assert_eq!(split[0].1, h);
    }

    #[test]
    fn eigensplit_of_pure_radial_power() {
        // (X.X)^(d/2) carries the top eigenvalue d (N - 2 + d).
        for n in 2..=4usize {
            for half_d in 1..=3u32 {
                let d = 2 * half_d;
                let q = Poly::x_dot_x(n).pow(half_d);
                let split = eigensplit_xx_laplacian(&q).unwrap();
                assert_eq!(split.len(), 1);
                let expected = d as i64 * (n as i64 - 2 + d as i64);
                assert_eq!(split[0].0, GaussianRational::from_int(expected));
                assert_eq!(split[0].1, q);
            }
        }
    }

    #[test]
    fn eigensplit_x1_squared() {
        // x1^2 in two variables: harmonic part at eigenvalue 0 and a
        // radial part at eigenvalue 4.
        let split = eigensplit_xx_laplacian(&p("x1^2", 2)).unwrap();
        assert_eq!(split.len(), 2);
        assert_eq!(split[0].0, GaussianRational::zero());
        assert_eq!(split[0].1, p("x1^2 - x2^2", 2).scalar_mul(&half()));
        assert_eq!(split[1].0, GaussianRational::from_int(4));
        assert_eq!(split[1].1, Poly::x_dot_x(2).scalar_mul(&half()));
        // Components sum back to the input, and each is an exact
        // eigenvector of (X.X) Laplacian.
        let total = &split[0].1 + &split[1].1;
        assert_eq!(total, p("x1^2", 2));
        for (lambda, comp) in &split {
            let image = &Poly::x_dot_x(2) * &laplacian(comp);
            assert_eq!(image, comp.scalar_mul(lambda));
        }
    }

    #[test]
    fn eigensplit_rejects_non_homogeneous() {
        assert!(eigensplit_xx_laplacian(&p("x1^2 + x1", 2)).is_err());
    }

    #[test]
    fn laplacian_of_radial_power_times_homogeneous() {
        // Delta((X.X)^m q) = (2m(2m+N-2) + 4md)(X.X)^(m-1) q + (X.X)^m Delta q
        // for homogeneous q of degree d: the layer identity behind the
        // triangular solve.
        let samples = [
            (2usize, p("x1^2*x2 - 3*x2^3", 2), 3u32),
            (3usize, p("x1*x2*x3 + i*x3^3", 3), 3u32),
            (3usize, p("x1^4 - x2^2*x3^2", 3), 4u32),
        ];
        for (dim, q, d) in samples {
            let xx = Poly::x_dot_x(dim);
            for m in 1..=3u32 {
                let lhs = laplacian(&(&xx.pow(m) * &q));
                let factor = 2 * m as i64 * (2 * m as i64 + dim as i64 - 2)
                    + 4 * m as i64 * d as i64;
                let rhs = &(&xx.pow(m - 1) * &q).scalar_mul(&GaussianRational::from_int(factor))
                    + &(&xx.pow(m) * &laplacian(&q));
                assert_eq!(lhs, rhs, "layer identity failed at N={dim}, m={m}");
            }
        }
    }

    #[test]
    fn partial_rotational_symmetry() {
        // A polynomial in x1^2 + x2^2 and the remaining variables is
        // killed by M_12; the kernel of M_12 on the degree-2 slice of
        // three variables is exactly span{x1^2 + x2^2, x3^2}.
        use crate::ops::rotation_generator;
        let block = p("x1^2 + x2^2", 3);
        let q = &(&block * &block) + &(&block * &p("x3", 3)) + &p("x3^4", 3);
        assert!(rotation_generator(&q, 1, 2).is_zero());

        let mons = monomials_of_degree(3, 2);
        let index = crate::linalg::monomial_index(&mons);
        let mut rows = vec![vec![GaussianRational::zero(); mons.len()]; mons.len()];
        for (col, m) in mons.iter().enumerate() {
            let image = rotation_generator(
                &Poly::from_terms(3, [(m.clone(), GaussianRational::one())]),
                1,
                2,
            );
            for (tm, c) in image.terms() {
                rows[index[tm]][col] = c.clone();
            }
        }
        let kernel = crate::linalg::kernel_dense(&rows, mons.len());
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            let member = mons.iter().zip(v).fold(Poly::zero(3), |acc, (m, c)| {
                &acc + &Poly::from_terms(3, [(m.clone(), c.clone())])
            });
            // Must be a combination of x1^2 + x2^2 and x3^2: the x1^2
            // and x2^2 coefficients agree and no mixed terms appear.
            let c11 = member.coefficient(&Monomial::new(vec![2, 0, 0]));
            let c22 = member.coefficient(&Monomial::new(vec![0, 2, 0]));
            let c33 = member.coefficient(&Monomial::new(vec![0, 0, 2]));
            let rebuilt = &block.scalar_mul(&c11) + &p("x3^2", 3).scalar_mul(&c33);
            assert_eq!(c11, c22);
            assert_eq!(member, rebuilt);
        }
    }

    #[test]
    fn scalar_cancellation_in_sphere_divisibility() {
        // Over the field, a nonzero scalar multiple is divisible by
        // X.X - c exactly when the polynomial itself is: remainders
        // scale by the unit.
        let c = GaussianRational::ratio(3, 7);
        let modulus = &Poly::x_dot_x(2) - &Poly::constant(2, c);
        let a = GaussianRational::ratio(-5, 2);
        for q in [p("x1^3 - x2", 2), p("x1*x2 + 1", 2)] {
            let divisible = &modulus * &q;
            let scaled = divisible.scalar_mul(&a);
            let (_, r) = scaled.divmod_monic(&modulus, 2).unwrap();
            assert!(r.is_zero());
            let not_divisible = &divisible + &Poly::one(2);
            let (_, r) = not_divisible.scalar_mul(&a).divmod_monic(&modulus, 2).unwrap();
            assert!(!r.is_zero());
        }
    }

    #[test]
    fn divisibility_by_distinct_sphere_moduli() {
        // Divisible by X.X - c1 and X.X - c2 with c1 != c2 means
        // divisible by the product; divisibility by one does not leak
        // to the other.
        let c1 = GaussianRational::from_int(1);
        let c2 = GaussianRational::from_int(-2);
        let m1 = &Poly::x_dot_x(2) - &Poly::constant(2, c1);
        let m2 = &Poly::x_dot_x(2) - &Poly::constant(2, c2);
        let q = p("x1 + 3*x2^2", 2);
        let both = &(&m1 * &m2) * &q;
        for modulus in [&m1, &m2, &(&m1 * &m2)] {
            let (_, r) = both.divmod_monic(modulus, 2).unwrap();
            assert!(r.is_zero());
        }
        let only_one = &m1 * &q;
        let (_, r) = only_one.divmod_monic(&m2, 2).unwrap();
        assert!(!r.is_zero());
    }
}
