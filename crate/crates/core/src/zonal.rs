//! Zonal harmonics via the Gegenbauer-type recursion, simultaneous
//! eigenvectors of the commuting rotation generators, and lifts through
//! the block operator `L = sum_j (T_j d_j^2 + (a_j + 1) d_j)`.

use crate::arith::GaussianRational;
use crate::error::Error;
use crate::harmonic::project_lc;
use crate::ops::partial;
use crate::poly::{Degree, Poly};

/// A single-variable polynomial over Q(i); trailing zero coefficients
/// are stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![GaussianRational::one()])
    }

    /// `Y^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = GaussianRational::one();
        UniPoly { coeffs }
    }

    /// Coefficients by ascending power; no trailing zeros.
    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scalar_mul(&GaussianRational::from_int(-1)))
    }

    pub fn scalar_mul(&self, c: &GaussianRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `Y^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * &GaussianRational::from_int(k as i64));
        }
        UniPoly::new(out)
    }

    /// Evaluates at a polynomial argument: `q(at)`.
    pub fn eval_poly(&self, at: &Poly) -> Poly {
        let mut acc = Poly::zero(at.dim());
        let mut power = Poly::one(at.dim());
        for c in &self.coeffs {
            acc = &acc + &power.scalar_mul(c);
            power = &power * at;
        }
        acc
    }

    pub fn eval_scalar(&self, at: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::text::format_unipoly(self))
    }
}

/// The monic degree-`n` solution of
/// `(alpha - Y^2) q'' - (N - 1) Y q' + n (n + N - 2) q = 0`
/// for `N >= 3`, by the downward recursion
/// `q_k = alpha (k+2)(k+1) / ((k - n)(k + n + N - 2)) q_{k+2}`.
///
/// The denominators are nonzero for `0 <= k < n` and `N >= 3`. The
/// result is an even polynomial for even `n`, odd for odd `n`, and is
/// exactly `Y^n` when `alpha = 0`.
pub fn gegenbauer_solve(n: u32, dim: usize, alpha: &GaussianRational) -> Result<UniPoly, Error> {
    if dim < 3 {
        return Err(Error::DimensionTooSmall { min: 3, got: dim });
    }
    let n_us = n as usize;
    let mut coeffs = vec![GaussianRational::zero(); n_us + 1];
    coeffs[n_us] = GaussianRational::one();
    let mut k = n as i64 - 2;
    while k >= 0 {
        let num = GaussianRational::from_int((k + 2) * (k + 1));
        let den = GaussianRational::from_int((k - n as i64) * (k + n as i64 + dim as i64 - 2));
        let factor = &(alpha * &num) * &den.inv().expect("in-range denominators are nonzero");
        coeffs[k as usize] = &factor * &coeffs[k as usize + 2];
        k -= 2;
    }
    Ok(UniPoly::new(coeffs))
}

/// The residual `(alpha - Y^2) q'' - (N - 1) Y q' + n (n + N - 2) q`;
/// identically zero exactly when `q` solves the equation.
pub fn ode_residual(q: &UniPoly, n: u32, dim: usize, alpha: &GaussianRational) -> UniPoly {
    let qp = q.derivative();
    let qpp = qp.derivative();
    let term1 = qpp.scalar_mul(alpha).sub(&qpp.shift_up(2));
    let term2 = qp
        .shift_up(1)
        .scalar_mul(&GaussianRational::from_int(dim as i64 - 1));
    let term3 = q.scalar_mul(&GaussianRational::from_int(
        n as i64 * (n as i64 + dim as i64 - 2),
    ));
    term1.sub(&term2).add(&term3)
}

/// Builds the zonal harmonic along direction `t` on the sphere
/// `X.X = c`: returns the monic solution `q` for `alpha = (t.t) c` and
/// the harmonic polynomial `h = L_c(q(t.X))`, which is homogeneous of
/// degree `n` and congruent to `q(t.X)` modulo `X.X - c`.
///
/// Needs `t.len() >= 3` and `t` not all zero. For two variables the
/// degenerate basis `(x1 +- i x2)^n` replaces this construction; see
/// the CLI.
pub fn zonal_harmonic(
    t: &[GaussianRational],
    c: &GaussianRational,
    n: u32,
) -> Result<(UniPoly, Poly), Error> {
    let dim = t.len();
    if dim < 3 {
        return Err(Error::DimensionTooSmall { min: 3, got: dim });
    }
    if t.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroDirection);
    }
    let t_dot_t = t
        .iter()
        .fold(GaussianRational::zero(), |acc, x| &acc + &(x * x));
    let alpha = &t_dot_t * c;
    let q = gegenbauer_solve(n, dim, &alpha)?;
    let t_dot_x = t
        .iter()
        .enumerate()
        .fold(Poly::zero(dim), |acc, (j, tj)| {
            &acc + &Poly::var(dim, j + 1).scalar_mul(tj)
        });
    let h = project_lc(&q.eval_poly(&t_dot_x), c);
    Ok((q, h))
}

/// Indexes the simultaneous eigenvector `Y_{eps,a}`: exponents `a_j >= 0`
/// and signs `eps_j` for the commuting generators `M_12, M_34, ...`.
/// The sign is pinned to `+1` wherever `a_j = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSignature {
    a: Vec<u32>,
    eps: Vec<i8>,
}

impl EigenSignature {
    pub fn new(a: Vec<u32>, eps: Vec<i8>) -> Result<Self, Error> {
        if a.len() != eps.len() {
            return Err(Error::BadSignature(format!(
                "{} exponents but {} signs",
                a.len(),
                eps.len()
            )));
        }
        if a.is_empty() {
            return Err(Error::BadSignature("empty signature".into()));
        }
        let mut eps = eps;
        for (aj, ej) in a.iter().zip(eps.iter_mut()) {
            if *ej != 1 && *ej != -1 {
                return Err(Error::BadSignature(format!("sign {ej} is not +1 or -1")));
            }
            if *aj == 0 {
                *ej = 1;
            }
        }
        Ok(EigenSignature { a, eps })
    }

    /// Number of commuting generators covered, `floor(N/2)`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.a
    }

    pub fn signs(&self) -> &[i8] {
        &self.eps
    }

    /// `|a| = sum a_j`, the homogeneous degree of `Y_{eps,a}`.
    pub fn total_degree(&self) -> u32 {
        self.a.iter().sum()
    }
}

/// `Y_{eps,a} = prod_j (x_{2j-1} + i eps_j x_{2j})^{a_j}` in `dim`
/// variables. Harmonic, homogeneous of degree `|a|`, and an eigenvector
/// of each `M_{2j-1,2j}` with eigenvalue `i eps_j a_j`. The signature
/// must cover exactly `floor(dim/2)` generator pairs.
pub fn eigen_monomial(sig: &EigenSignature, dim: usize) -> Result<Poly, Error> {
    if sig.n() != dim / 2 {
        return Err(Error::BadSignature(format!(
            "signature covers {} pairs but dimension {} has {}",
            sig.n(),
            dim,
            dim / 2
        )));
    }
    let mut acc = Poly::one(dim);
    for (j, (&aj, &ej)) in sig.a.iter().zip(&sig.eps).enumerate() {
        let re = Poly::var(dim, 2 * j + 1);
        let im = Poly::var(dim, 2 * j + 2)
            .scalar_mul(&(&GaussianRational::from_int(ej as i64) * &GaussianRational::i()));
        acc = &acc * &(&re + &im).pow(aj);
    }
    Ok(acc)
}

/// The block operator `L f = sum_j (T_j d_j^2 f + (a_j + 1) d_j f)` on
/// polynomials in as many variables as there are weights.
pub fn block_operator(f: &Poly, weights: &[u32]) -> Poly {
    assert_eq!(f.dim(), weights.len(), "one weight per variable");
    let mut acc = Poly::zero(f.dim());
    for (j, &aj) in weights.iter().enumerate() {
        let dj = partial(f, j + 1);
        let djj = partial(&dj, j + 1);
        acc = &acc + &(&Poly::var(f.dim(), j + 1) * &djj);
        acc = &acc + &dj.scalar_mul(&GaussianRational::from_int(aj as i64 + 1));
    }
    acc
}

/// Lifts a homogeneous seed `q_d` in `T_1 .. T_{n-1}` to an element of
/// `ker L` in `T_1 .. T_n`: the coefficient of `T_n^k` is
/// `(-1)^k / (k! (1 + a_n) ... (k + a_n)) L^k q_d`.
///
/// With a single variable the kernel is trivial: degree 0 lifts to the
/// constant itself and every higher degree has no solution.
pub fn l_kernel_lift(a: &[u32], d: u32, q_d: &Poly) -> Result<Poly, Error> {
    let n = a.len();
    if n == 0 {
        return Err(Error::BadSignature("no block weights".into()));
    }
    if n == 1 {
        if d >= 1 && !q_d.is_zero() {
            return Err(Error::EmptyKernel);
        }
        return Ok(q_d.extend_dim(1));
    }
    assert_eq!(q_d.dim(), n - 1, "the seed lives in one variable fewer");
    if q_d.is_zero() {
        return Ok(Poly::zero(n));
    }
    if q_d.homogeneous_degree() != Some(Degree::Finite(d)) {
        return Err(Error::DegreeMismatch {
            expected: format!("seed homogeneous of degree {d}"),
            got: format!("{}", q_d.degree()),
        });
    }
    let a_last = *a.last().unwrap() as i64;
    let inner = &a[..n - 1];
    let tn = Poly::var(n, n);
    let mut acc = Poly::zero(n);
    let mut layer = q_d.clone();
    let mut scale = GaussianRational::one();
    for k in 0..=d {
        if layer.is_zero() {
            break;
        }
        acc = &acc + &(&layer.extend_dim(n).scalar_mul(&scale) * &tn.pow(k));
        layer = block_operator(&layer, inner);
        let k_next = k as i64 + 1;
        scale = &(-&scale)
            * &GaussianRational::from_int(k_next * (k_next + a_last))
                .inv()
                .expect("positive integer divisor");
    }
    debug_assert!(block_operator(&acc, a).is_zero());
    Ok(acc)
}

/// Assembles the simultaneous eigenvector
/// `p = Y_{eps,a} * q(x1^2 + x2^2, ..., x_{2n-1}^2 + x_{2n}^2)` for even
/// dimension `2n`. The factored Laplacian identity
/// `Delta p = 4 Y_{eps,a} (L q)(blocks)` is asserted internally; `q`
/// must be in `ker L` (as built by [`l_kernel_lift`]), which makes `p`
/// harmonic with eigenvalues `i eps_j a_j`.
pub fn common_eigen_harmonic(sig: &EigenSignature, q: &Poly, dim: usize) -> Result<Poly, Error> {
    if dim % 2 != 0 || sig.n() * 2 != dim {
        return Err(Error::BadSignature(format!(
            "dimension {dim} is not twice the signature length {}",
            sig.n()
        )));
    }
    assert_eq!(q.dim(), sig.n(), "q has one variable per block");
    let y = eigen_monomial(sig, dim)?;
    let images: Vec<Poly> = (0..sig.n())
        .map(|j| {
            &Poly::var(dim, 2 * j + 1).pow(2) + &Poly::var(dim, 2 * j + 2).pow(2)
        })
        .collect();
    let q_at_blocks = q.substitute(&images).expect("one image per variable of q");
    let p = &y * &q_at_blocks;
    // The identity holds for arbitrary q, kernel member or not.
    let lq = block_operator(q, sig.exponents());
    let rhs = (&y * &lq.substitute(&images).expect("one image per variable"))
        .scalar_mul(&GaussianRational::from_int(4));
    assert_eq!(
        crate::ops::laplacian(&p),
        rhs,
        "factored Laplacian identity violated"
    );
    if !lq.is_zero() {
        return Err(Error::NotInKernel);
    }
    Ok(p)
}

/// The odd-dimension counterpart, `dim = 2n + 1`: builds
/// `q(T_1..T_n, Y) = sum_k q_k Y^k` from a seed by the coupled recursion
/// `(k+2)(k+1) q_{k+2} + 4 L q_k = 0` and returns
/// `p = Y_{eps,a} q(blocks, x_dim)`, a harmonic simultaneous eigenvector
/// homogeneous of degree `d`.
///
/// With `r = d - |a|`, the seed is `q_0` (homogeneous of degree `r/2`)
/// when `r` is even and `q_1` (degree `(r-1)/2`) when odd; the other
/// parity chain is zero. A zero seed yields the zero polynomial.
pub fn odd_dim_eigen_harmonic(
    sig: &EigenSignature,
    seed: &Poly,
    d: u32,
    dim: usize,
) -> Result<Poly, Error> {
    if dim % 2 != 1 || sig.n() * 2 + 1 != dim {
        return Err(Error::BadSignature(format!(
            "dimension {dim} is not 2n + 1 for signature length {}",
            sig.n()
        )));
    }
    let n = sig.n();
    assert_eq!(seed.dim(), n, "the seed lives in one variable per block");
    let total = sig.total_degree();
    if d < total {
        return Err(Error::DegreeMismatch {
            expected: format!("degree at least |a| = {total}"),
            got: d.to_string(),
        });
    }
    if seed.is_zero() {
        return Ok(Poly::zero(dim));
    }
    let r = d - total;
    let start = r % 2;
    let want = (r - start) / 2;
    if seed.homogeneous_degree() != Some(Degree::Finite(want)) {
        return Err(Error::DegreeMismatch {
            expected: format!("seed homogeneous of degree {want} for d - |a| = {r}"),
            got: format!("{}", seed.degree()),
        });
    }
    let y = eigen_monomial(sig, dim)?;
    let images: Vec<Poly> = (0..n)
        .map(|j| {
            &Poly::var(dim, 2 * j + 1).pow(2) + &Poly::var(dim, 2 * j + 2).pow(2)
        })
        .collect();
    let xn = Poly::var(dim, dim);
    let mut acc = Poly::zero(dim);
    let mut layer = seed.clone();
    let mut k = start;
    while !layer.is_zero() && k <= r {
        let at_blocks = layer.substitute(&images).expect("one image per variable");
        acc = &acc + &(&at_blocks * &xn.pow(k));
        let div = GaussianRational::from_int(((k + 2) * (k + 1)) as i64)
            .inv()
            .expect("positive integer divisor");
        layer = block_operator(&layer, sig.exponents())
            .scalar_mul(&(-&GaussianRational::from_int(4) * &div));
        k += 2;
    }
    Ok(&y * &acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::is_harmonic;
    use crate::ops::{laplacian, rotation_generator};
    use crate::poly::Poly;
    use crate::text::parse_poly;

    fn p(s: &str, dim: usize) -> Poly {
        parse_poly(s, dim).unwrap()
    }

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn gegenbauer_alpha_zero_is_pure_power() {
        for n in 0..=8u32 {
            for dim in 3..=5usize {
                let q = gegenbauer_solve(n, dim, &g(0)).unwrap();
                assert_eq!(q, UniPoly::monomial(n as usize));
            }
        }
    }

    #[test]
    fn gegenbauer_degree_zero_is_one() {
        assert_eq!(gegenbauer_solve(0, 3, &g(5)).unwrap(), UniPoly::one());
    }

    #[test]
    fn gegenbauer_n2_dim3_alpha1() {
        let q = gegenbauer_solve(2, 3, &g(1)).unwrap();
        assert_eq!(
            q.coeffs(),
            &[GaussianRational::ratio(-1, 3), g(0), g(1)]
        );
        assert!(ode_residual(&q, 2, 3, &g(1)).is_zero());
    }

    #[test]
    fn gegenbauer_rejects_small_dimension() {
        assert!(gegenbauer_solve(2, 2, &g(1)).is_err());
    }

    #[test]
    fn gegenbauer_parity() {
        let alpha = GaussianRational::ratio(1, 4);
        for n in 0..=8u32 {
            let q = gegenbauer_solve(n, 4, &alpha).unwrap();
            for (k, c) in q.coeffs().iter().enumerate() {
                if (k as u32) % 2 != n % 2 {
                    assert!(c.is_zero(), "parity violated at n = {n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn zonal_along_first_axis() {
        let t = [g(1), g(0), g(0)];
        let (q, h) = zonal_harmonic(&t, &g(1), 2).unwrap();
        assert_eq!(
            q.coeffs(),
            &[GaussianRational::ratio(-1, 3), g(0), g(1)]
        );
        assert!(is_harmonic(&h));
        assert_eq!(
            h.homogeneous_degree(),
            Some(crate::poly::Degree::Finite(2))
        );
        // h is congruent to q(t.X) modulo X.X - 1.
        let diff = &q.eval_poly(&p("x1", 3)) - &h;
        let modulus = &Poly::x_dot_x(3) - &Poly::one(3);
        let (_, r) = diff.divmod_monic(&modulus, 3).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn zonal_degree_zero_and_one() {
        let t = [g(1), g(2), g(-1)];
        let c = GaussianRational::ratio(2, 3);
        let (q0, h0) = zonal_harmonic(&t, &c, 0).unwrap();
        assert_eq!(q0, UniPoly::one());
        assert_eq!(h0, Poly::one(3));
        let (q1, h1) = zonal_harmonic(&t, &c, 1).unwrap();
        assert_eq!(q1, UniPoly::monomial(1));
        assert_eq!(h1, p("x1 + 2*x2 - x3", 3));
    }

    #[test]
    fn zonal_rejects_zero_direction() {
        let t = [g(0), g(0), g(0)];
        assert!(matches!(
            zonal_harmonic(&t, &g(1), 2),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn eigen_monomial_cubed() {
        let sig = EigenSignature::new(vec![3], vec![1]).unwrap();
        let y = eigen_monomial(&sig, 2).unwrap();
        assert_eq!(y, p("x1 + i*x2", 2).pow(3));
        let my = rotation_generator(&y, 1, 2);
        assert_eq!(my, y.scalar_mul(&(&g(3) * &GaussianRational::i())));
    }

    #[test]
    fn eigen_monomial_trivial() {
        let sig = EigenSignature::new(vec![0, 0], vec![1, 1]).unwrap();
        assert_eq!(eigen_monomial(&sig, 4).unwrap(), Poly::one(4));
    }

    #[test]
    fn eigen_monomial_mixed_signs() {
        let sig = EigenSignature::new(vec![1, 1], vec![1, -1]).unwrap();
        let y = eigen_monomial(&sig, 4).unwrap();
        let expected = &p("x1 + i*x2", 4) * &p("x3 - i*x4", 4);
        assert_eq!(y, expected);
        assert_eq!(
            rotation_generator(&y, 1, 2),
            y.scalar_mul(&GaussianRational::i())
        );
        assert_eq!(
            rotation_generator(&y, 3, 4),
            y.scalar_mul(&-GaussianRational::i())
        );
    }

    #[test]
    fn eigen_monomial_rejects_wrong_arity() {
        let sig = EigenSignature::new(vec![1], vec![1]).unwrap();
        assert!(eigen_monomial(&sig, 4).is_err());
    }

    #[test]
    fn signature_normalizes_signs_at_zero() {
        let sig = EigenSignature::new(vec![0, 2], vec![-1, -1]).unwrap();
        assert_eq!(sig.signs(), &[1, -1]);
        assert!(EigenSignature::new(vec![1], vec![2]).is_err());
    }

    #[test]
    fn kernel_lift_constant() {
        let lifted = l_kernel_lift(&[1, 3], 0, &Poly::one(1)).unwrap();
        assert_eq!(lifted, Poly::one(2));
    }

    #[test]
    fn kernel_lift_single_variable_cases() {
        assert!(matches!(
            l_kernel_lift(&[0], 1, &Poly::one(0)),
            Err(Error::EmptyKernel)
        ));
        assert_eq!(l_kernel_lift(&[2], 0, &Poly::one(0)).unwrap(), Poly::one(1));
    }

    #[test]
    fn kernel_lift_two_blocks_linear() {
        let lifted = l_kernel_lift(&[0, 0], 1, &p("x1", 1)).unwrap();
        assert_eq!(lifted, p("x1 - x2", 2));
        assert!(block_operator(&lifted, &[0, 0]).is_zero());
    }

    #[test]
    fn common_eigen_trivial_q() {
        let sig = EigenSignature::new(vec![2, 1], vec![1, -1]).unwrap();
        let q = Poly::one(2);
        let y = eigen_monomial(&sig, 4).unwrap();
        assert_eq!(common_eigen_harmonic(&sig, &q, 4).unwrap(), y);
    }

    #[test]
    fn common_eigen_block_difference() {
        let sig = EigenSignature::new(vec![0, 0], vec![1, 1]).unwrap();
        let q = l_kernel_lift(&[0, 0], 1, &p("x1", 1)).unwrap();
        let h = common_eigen_harmonic(&sig, &q, 4).unwrap();
        assert_eq!(h, p("x1^2 + x2^2 - x3^2 - x4^2", 4));
        assert!(laplacian(&h).is_zero());
        assert!(rotation_generator(&h, 1, 2).is_zero());
        assert!(rotation_generator(&h, 3, 4).is_zero());
    }

    #[test]
    fn common_eigen_rejects_non_kernel_q() {
        let sig = EigenSignature::new(vec![0, 0], vec![1, 1]).unwrap();
        let q = p("x1", 2);
        assert!(matches!(
            common_eigen_harmonic(&sig, &q, 4),
            Err(Error::NotInKernel)
        ));
    }

    #[test]
    fn odd_dim_last_axis() {
        let sig = EigenSignature::new(vec![0], vec![1]).unwrap();
        let h = odd_dim_eigen_harmonic(&sig, &Poly::one(1), 1, 3).unwrap();
        assert_eq!(h, p("x3", 3));
    }

    #[test]
    fn odd_dim_plane_wave() {
        let sig = EigenSignature::new(vec![1], vec![1]).unwrap();
        let h = odd_dim_eigen_harmonic(&sig, &Poly::one(1), 1, 3).unwrap();
        assert_eq!(h, p("x1 + i*x2", 3));
    }

    #[test]
    fn odd_dim_degree_two_zonal_like() {
        let sig = EigenSignature::new(vec![0], vec![1]).unwrap();
        let h = odd_dim_eigen_harmonic(&sig, &p("x1", 1), 2, 3).unwrap();
        assert_eq!(h, p("x1^2 + x2^2 - 2*x3^2", 3));
        assert!(is_harmonic(&h));
    }

    #[test]
    fn odd_dim_rejects_parity_mismatch() {
        let sig = EigenSignature::new(vec![0], vec![1]).unwrap();
        // d - |a| = 2 is even, so the seed must have degree 1, not 0.
        assert!(odd_dim_eigen_harmonic(&sig, &Poly::one(1), 2, 3).is_err());
    }
}
