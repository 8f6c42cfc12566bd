//! The differential operators: partials, rotation generators
//! `M_jk = x_j d_k - x_k d_j`, the Laplacian, the Euler operator, the
//! quadratic Casimir `M.M`, and general first-order derivations.
//!
//! Operators are pure functions on [`Poly`]; the only reified operator is
//! [`Derivation`], which is needed to state and check the structure of
//! derivations annihilating `X.X`. The identities among operators are
//! checked pointwise on polynomials.

use crate::arith::GaussianRational;
use crate::error::Error;
use crate::poly::{Monomial, Poly};

/// Exact formal partial derivative with respect to `x_j` (1-indexed).
pub fn partial(p: &Poly, j: usize) -> Poly {
    assert!(
        j >= 1 && j <= p.dim(),
        "variable x{j} out of range for dimension {}",
        p.dim()
    );
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponent(j);
        if e == 0 {
            continue;
        }
        let mut exps = m.exponents().to_vec();
        exps[j - 1] = e - 1;
        terms.push((
            Monomial::new(exps),
            c * &GaussianRational::from_int(e as i64),
        ));
    }
    Poly::from_terms(p.dim(), terms)
}

/// The rotation generator `M_jk p = x_j d_k p - x_k d_j p`. Preserves
/// homogeneous degree. Requires distinct in-range indices.
pub fn rotation_generator(p: &Poly, j: usize, k: usize) -> Poly {
    assert!(j != k, "rotation generator needs distinct indices, got j = k = {j}");
    let xj = Poly::var(p.dim(), j);
    let xk = Poly::var(p.dim(), k);
    &(&xj * &partial(p, k)) - &(&xk * &partial(p, j))
}

/// The Laplacian `sum_j d_j^2 p`; drops homogeneous degree by 2.
pub fn laplacian(p: &Poly) -> Poly {
    let mut out = Poly::zero(p.dim());
    for j in 1..=p.dim() {
        out = &out + &partial(&partial(p, j), j);
    }
    out
}

/// Applies the Laplacian `times` times.
pub fn laplacian_iter(p: &Poly, times: u32) -> Poly {
    let mut out = p.clone();
    for _ in 0..times {
        out = laplacian(&out);
    }
    out
}

/// The Euler operator `sum_j x_j d_j p`; multiplies a homogeneous
/// polynomial of degree `n` by `n`.
pub fn euler(p: &Poly) -> Poly {
    let mut out = Poly::zero(p.dim());
    for j in 1..=p.dim() {
        out = &out + &(&Poly::var(p.dim(), j) * &partial(p, j));
    }
    out
}

/// The quadratic Casimir `M.M p = sum over unordered pairs {j,k} of
/// M_jk^2 p`. Each 2-subset contributes once.
pub fn casimir(p: &Poly) -> Poly {
    let mut out = Poly::zero(p.dim());
    for j in 1..=p.dim() {
        for k in (j + 1)..=p.dim() {
            out = &out + &rotation_generator(&rotation_generator(p, j, k), j, k);
        }
    }
    out
}

/// Polynomial weights `c_jk` over generator index pairs `(j, k)`,
/// representing the combination `sum c_jk M_jk`.
pub type RotationWeights = Vec<((usize, usize), Poly)>;

/// A first-order operator `L = sum_j a_j d_j` with polynomial
/// coefficients `a_j = L(x_j)`. An R-linear derivation is determined by
/// these values, and `L` satisfies the product rule.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    dim: usize,
    coeffs: Vec<Poly>,
}

impl Derivation {
    /// Builds a derivation from its coefficient vector; `coeffs[j-1]` is
    /// the image of `x_j`. All coefficients must share one dimension
    /// equal to the vector length.
    pub fn new(coeffs: Vec<Poly>) -> Self {
        let dim = coeffs.len();
        assert!(dim >= 1, "a derivation needs at least one coefficient");
        for a in &coeffs {
            assert_eq!(a.dim(), dim, "derivation coefficients must live in dimension {dim}");
        }
        Derivation { dim, coeffs }
    }

    /// The zero derivation.
    pub fn zero(dim: usize) -> Self {
        Derivation {
            dim,
            coeffs: vec![Poly::zero(dim); dim],
        }
    }

    /// `M_jk` as a derivation: coefficients `a_j = -x_k`, `a_k = x_j`.
    pub fn rotation(dim: usize, j: usize, k: usize) -> Self {
        let mut coeffs = vec![Poly::zero(dim); dim];
        coeffs[j - 1] = -&Poly::var(dim, k);
        coeffs[k - 1] = Poly::var(dim, j);
        Derivation { dim, coeffs }
    }

    /// `sum c_jk M_jk` for polynomial weights over pairs `(j, k)`.
    pub fn rotation_combination(dim: usize, weights: &[((usize, usize), Poly)]) -> Self {
        let mut coeffs = vec![Poly::zero(dim); dim];
        for ((j, k), w) in weights {
            assert!(*j != *k);
            // M_jk(x_k) = x_j and M_jk(x_j) = -x_k.
            coeffs[k - 1] = &coeffs[k - 1] + &(w * &Poly::var(dim, *j));
            coeffs[j - 1] = &coeffs[j - 1] - &(w * &Poly::var(dim, *k));
        }
        Derivation { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        apply_derivation(self, p)
    }
}

/// `L p = sum_j a_j d_j p`.
pub fn apply_derivation(l: &Derivation, p: &Poly) -> Poly {
    assert_eq!(l.dim(), p.dim(), "dimension mismatch applying a derivation");
    let mut out = Poly::zero(p.dim());
    for j in 1..=p.dim() {
        out = &out + &(&l.coeffs[j - 1] * &partial(p, j));
    }
    out
}

/// Decomposes a derivation annihilating `X.X` as a polynomial-weighted
/// combination of rotation generators: `L = sum_{j<k} c_jk M_jk`.
///
/// Errors when `L(X.X) != 0`. The returned weights reproduce `L` on
/// every `x_j` (the weights themselves are not unique).
///
/// The construction peels off the last variable: splitting each
/// coefficient as `a_j = a_j0 + b_j x_N`, the `a_j0` part recurses into
/// one dimension lower and the `b_j` part contributes `-b_j M_jN`.
pub fn decompose_annihilating_derivation(l: &Derivation) -> Result<RotationWeights, Error> {
    if !l.apply(&Poly::x_dot_x(l.dim())).is_zero() {
        return Err(Error::NotAnnihilating);
    }
    Ok(decompose_inner(l.dim(), l.coeffs()))
}

fn decompose_inner(dim: usize, coeffs: &[Poly]) -> RotationWeights {
    if dim == 1 {
        // a1 x1 = 0 forces a1 = 0; nothing to emit.
        debug_assert!(coeffs[0].is_zero());
        return Vec::new();
    }
    if dim == 2 {
        // a1 x1 + a2 x2 = 0, so a1 = b x2 and a2 = -b x1; the derivation
        // is b M_21 = -b M_12.
        if coeffs[0].is_zero() {
            return Vec::new();
        }
        let b = coeffs[0]
            .divide_by_var(2)
            .expect("a1 is divisible by x2 when a1 x1 + a2 x2 = 0");
        return vec![((1, 2), -&b)];
    }
    let n = dim;
    // Split a_j = a_j0 + b_j x_N for j < N.
    let mut reduced = Vec::with_capacity(n - 1);
    let mut out = Vec::new();
    for j in 1..=(n - 1) {
        let a = &coeffs[j - 1];
        let a0 = a.coeff_of_var_power(n, 0);
        let b = (a - &a0)
            .divide_by_var(n)
            .expect("the x_N part of a coefficient is divisible by x_N");
        // b_j M_Nj = -b_j M_jN.
        if !b.is_zero() {
            out.push(((j, n), -&b));
        }
        reduced.push(a0.restrict_dim(n - 1).expect("x_N was split off"));
    }
    for ((j, k), w) in decompose_inner(n - 1, &reduced) {
        out.push(((j, k), w.extend_dim(n)));
    }
    out
}

/// Named operators for commutator checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    /// `M_jk` (1-indexed, distinct).
    Rotation(usize, usize),
    Laplacian,
    Casimir,
    /// Multiplication by `X.X`.
    MulXX,
    Euler,
}

impl Operator {
    pub fn apply(&self, p: &Poly) -> Poly {
        match *self {
            Operator::Rotation(j, k) => rotation_generator(p, j, k),
            Operator::Laplacian => laplacian(p),
            Operator::Casimir => casimir(p),
            Operator::MulXX => &Poly::x_dot_x(p.dim()) * p,
            Operator::Euler => euler(p),
        }
    }
}

/// `(AB - BA) p`, computed by double application.
pub fn commutator(a: Operator, b: Operator, p: &Poly) -> Poly {
    &a.apply(&b.apply(p)) - &b.apply(&a.apply(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Degree;
    use crate::text::parse_poly;

    fn p(s: &str, dim: usize) -> Poly {
        parse_poly(s, dim).unwrap()
    }

    #[test]
    fn partial_examples() {
        assert_eq!(partial(&p("x1^3", 1), 1), p("3*x1^2", 1));
        assert_eq!(partial(&p("x1", 2), 2), Poly::zero(2));
        assert_eq!(partial(&p("x1^2*x2 + x2^3", 2), 1), p("2*x1*x2", 2));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn partial_rejects_bad_index() {
        let _ = partial(&p("x1", 2), 3);
    }

    #[test]
    fn rotation_annihilates_x_dot_x() {
        for n in 2..=5 {
            let q = Poly::x_dot_x(n);
            for j in 1..=n {
                for k in 1..=n {
                    if j != k {
                        assert!(rotation_generator(&q, j, k).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_on_x1() {
        assert_eq!(rotation_generator(&p("x1", 2), 1, 2), p("-x2", 2));
    }

    #[test]
    fn rotation_eigenvector_cubed() {
        // M_12 (x1 + i x2)^3 = 3i (x1 + i x2)^3.
        let z = p("x1 + i*x2", 2);
        let zc = z.pow(3);
        let lhs = rotation_generator(&zc, 1, 2);
        let rhs = zc.scalar_mul(&(&GaussianRational::from_int(3) * &GaussianRational::i()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    #[should_panic(expected = "distinct indices")]
    fn rotation_rejects_equal_indices() {
        let _ = rotation_generator(&p("x1", 2), 1, 1);
    }

    #[test]
    fn laplacian_on_powers_of_x_dot_x() {
        // Delta (X.X)^j = 2j (2j + N - 2) (X.X)^(j-1); at N = 3, j = 2
        // this is 20 (X.X).
        let q = Poly::x_dot_x(3);
        let lhs = laplacian(&q.pow(2));
        assert_eq!(lhs, q.scalar_mul(&GaussianRational::from_int(20)));
        for n in 2..=4usize {
            for j in 1..=4u32 {
                let q = Poly::x_dot_x(n);
                let factor = 2 * j as i64 * (2 * j as i64 + n as i64 - 2);
                assert_eq!(
                    laplacian(&q.pow(j)),
                    q.pow(j - 1).scalar_mul(&GaussianRational::from_int(factor))
                );
            }
        }
    }

    #[test]
    fn laplacian_kills_harmonic() {
        assert!(laplacian(&p("x1^2 - x2^2", 2)).is_zero());
    }

    #[test]
    fn iterated_laplacian_worked_value() {
        // Delta^5 (x1^4 x2^6) at N = 4 is 10 * 4! * 6!.
        let q = p("x1^4*x2^6", 4);
        let out = laplacian_iter(&q, 5);
        let expected = GaussianRational::from_int(10 * 24 * 720);
        assert_eq!(out, Poly::constant(4, expected));
    }

    #[test]
    fn euler_scales_by_degree() {
        let a = p("x1*x2*x3", 3);
        assert_eq!(euler(&a), a.scalar_mul(&GaussianRational::from_int(3)));
        assert!(euler(&Poly::one(2)).is_zero());
        assert_eq!(euler(&p("x1^2 + x1", 1)), p("2*x1^2 + x1", 1));
    }

    #[test]
    fn casimir_annihilates_powers_of_x_dot_x() {
        for n in 2..=4usize {
            for a in 0..=3u32 {
                assert!(casimir(&Poly::x_dot_x(n).pow(a)).is_zero());
            }
        }
        assert!(casimir(&Poly::one(3)).is_zero());
    }

    #[test]
    fn casimir_on_single_variable_square() {
        // M.M q(t.X) = -(N-1)(t.X) q'(t.X) + [t.t (X.X) - (t.X)^2] q''(t.X)
        // with q(Y) = Y^2, t = (1, 0), N = 2: both sides are
        // -2 x1^2 + 2 x2^2.
        let tx = p("x1", 2);
        let lhs = casimir(&tx.pow(2));
        let qp = tx.scalar_mul(&GaussianRational::from_int(2));
        let qpp = Poly::constant(2, GaussianRational::from_int(2));
        let rhs = &(-&(&tx * &qp))
            + &(&(&Poly::x_dot_x(2) - &tx.pow(2)) * &qpp);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, p("-2*x1^2 + 2*x2^2", 2));
    }

    #[test]
    fn derivation_examples() {
        // Coefficients (x2, -x1) give M_21, which annihilates X.X.
        let l = Derivation::new(vec![p("x2", 2), p("-x1", 2)]);
        assert!(l.apply(&Poly::x_dot_x(2)).is_zero());
        assert!(Derivation::zero(3).apply(&p("x1^2*x3", 3)).is_zero());
        let l = Derivation::new(vec![Poly::one(2), Poly::zero(2)]);
        assert_eq!(l.apply(&p("x1*x2", 2)), p("x2", 2));
    }

    #[test]
    fn derivation_product_rule() {
        let l = Derivation::new(vec![p("x2^2", 2), p("x1 - x2", 2)]);
        let a = p("x1^2 - x2", 2);
        let b = p("x1*x2 + 1", 2);
        let lhs = l.apply(&(&a * &b));
        let rhs = &(&l.apply(&a) * &b) + &(&a * &l.apply(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_disjoint_pairs_vanish() {
        let q = p("x1*x2^2 + x3*x4 - 2*x2*x4^3", 4);
        let c = commutator(Operator::Rotation(1, 2), Operator::Rotation(3, 4), &q);
        assert!(c.is_zero());
    }

    #[test]
    fn commutator_chained_pairs() {
        let q = p("x1^3 - x2*x3 + x3^2*x1", 3);
        let lhs = commutator(Operator::Rotation(1, 2), Operator::Rotation(2, 3), &q);
        assert_eq!(lhs, rotation_generator(&q, 1, 3));
    }

    #[test]
    fn commutator_with_casimir_vanishes() {
        let q = p("x1^2*x3 - 5*x2^3 + x1*x2*x3", 3);
        let c = commutator(Operator::Rotation(1, 2), Operator::Casimir, &q);
        assert!(c.is_zero());
    }

    #[test]
    fn commutator_euler_with_radial_multiplication() {
        // [r dr, X.X *] p = 2 (X.X) p: scaling sees the extra degree 2.
        let q = p("x1^2*x2 - x3 + 1", 3);
        let lhs = commutator(Operator::Euler, Operator::MulXX, &q);
        assert_eq!(
            lhs,
            (&Poly::x_dot_x(3) * &q).scalar_mul(&GaussianRational::from_int(2))
        );
    }

    #[test]
    fn commutator_laplacian_with_radial_multiplication() {
        // [Delta, X.X *] = 2N + 4 r dr, by the product formula.
        for n in 2..=4usize {
            let q = parse_poly("x1^3 - 2*x1*x2 + 5", 2).unwrap().extend_dim(n);
            let lhs = commutator(Operator::Laplacian, Operator::MulXX, &q);
            let rhs = &q.scalar_mul(&GaussianRational::from_int(2 * n as i64))
                + &euler(&q).scalar_mul(&GaussianRational::from_int(4));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rotation_preserves_homogeneous_degree() {
        let q = p("x1^2*x2 - x3^3", 3);
        let out = rotation_generator(&q, 2, 3);
        assert_eq!(out.homogeneous_degree(), Some(Degree::Finite(3)));
    }

    #[test]
    fn decompose_rotation_combination_round_trip() {
        // L = x3 M_12 + (x1 + x2) M_23 annihilates X.X; its
        // decomposition must reproduce L on every variable.
        let w12 = p("x3", 3);
        let w23 = p("x1 + x2", 3);
        let l = Derivation::rotation_combination(3, &[((1, 2), w12), ((2, 3), w23)]);
        assert!(l.apply(&Poly::x_dot_x(3)).is_zero());
        let weights = decompose_annihilating_derivation(&l).unwrap();
        let back = Derivation::rotation_combination(3, &weights);
        for j in 1..=3 {
            assert_eq!(
                back.apply(&Poly::var(3, j)),
                l.apply(&Poly::var(3, j)),
                "mismatch on x{j}"
            );
        }
    }

    #[test]
    fn decompose_rejects_non_annihilating() {
        let l = Derivation::new(vec![Poly::one(2), Poly::zero(2)]);
        assert!(decompose_annihilating_derivation(&l).is_err());
    }
}
