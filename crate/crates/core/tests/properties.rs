//! Property tests: exact algebraic laws on randomized inputs.

use proptest::prelude::*;

use polyharm::arith::{double_factorial, GaussianRational};
use polyharm::harmonic::{harmonic_decompose, is_harmonic};
use polyharm::ops::laplacian;
use polyharm::poly::{Degree, Monomial, Poly};
use polyharm::text::parse_poly;

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-8i64..=8, 1i64..=4, -8i64..=8, 1i64..=4).prop_map(|(a, b, c, d)| {
        &GaussianRational::ratio(a, b)
            + &(&GaussianRational::ratio(c, d) * &GaussianRational::i())
    })
}

fn rational_scalar() -> impl Strategy<Value = GaussianRational> {
    (-8i64..=8, 1i64..=4).prop_map(|(a, b)| GaussianRational::ratio(a, b))
}

/// Sparse polynomials with per-variable exponents up to 3.
fn poly(dim: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    let term = (proptest::collection::vec(0u32..=3, dim), scalar());
    proptest::collection::vec(term, 1..=max_terms).prop_map(move |terms| {
        let mut p = Poly::zero(dim);
        for (exps, c) in terms {
            p = &p + &Poly::from_terms(dim, [(Monomial::new(exps), c)]);
        }
        p
    })
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn double_factorial_step(n in 1i64..=40) {
        let lhs = double_factorial(n).unwrap();
        let rhs = num::BigInt::from(n) * double_factorial(n - 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_axioms(a in poly(3, 4), b in poly(3, 4), c in poly(3, 4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero(3));
    }

    #[test]
    fn degree_is_additive(a in poly(3, 4), b in poly(3, 4)) {
        // Over a field there is no coefficient cancellation in the top
        // degree, so degrees add (with -inf absorbing).
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn homogeneous_components_partition(p in poly(3, 5)) {
        let mut total = Poly::zero(3);
        if let Degree::Finite(top) = p.degree() {
            for d in 0..=top {
                let comp = p.homogeneous_component(d as i64);
                prop_assert!(comp.is_zero() || comp.homogeneous_degree() == Some(Degree::Finite(d)));
                total = &total + &comp;
            }
        }
        prop_assert_eq!(total, p);
    }

    #[test]
    fn divmod_round_trip(p in poly(3, 5), c in rational_scalar()) {
        let d = &Poly::x_dot_x(3) - &Poly::constant(3, c);
        let (q, r) = p.divmod_monic(&d, 3).unwrap();
        prop_assert_eq!(&(&d * &q) + &r, p);
        prop_assert!(r.degree_in_var(3) < d.degree_in_var(3));
    }

    #[test]
    fn substitution_is_multiplicative(
        a in poly(2, 3),
        b in poly(2, 3),
        im1 in poly(2, 2),
        im2 in poly(2, 2),
    ) {
        let images = [im1, im2];
        let lhs = (&a * &b).substitute(&images).unwrap();
        let rhs = &a.substitute(&images).unwrap() * &b.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_round_trip(p in poly(3, 5)) {
        let printed = p.to_string();
        let back = parse_poly(&printed, 3).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn decomposition_round_trip(p in poly(3, 4)) {
        let dec = harmonic_decompose(&p);
        prop_assert_eq!(dec.reconstruct(), p);
        for part in dec.parts() {
            prop_assert!(is_harmonic(part));
        }
    }

    #[test]
    fn shift_at_zero_recovers(p in poly(2, 4)) {
        // Substituting t = 0 into p(X + t) gives back p.
        let shifted = p.shift();
        let images = vec![
            Poly::var(2, 1),
            Poly::var(2, 2),
            Poly::zero(2),
            Poly::zero(2),
        ];
        prop_assert_eq!(shifted.substitute(&images).unwrap(), p);
    }

    #[test]
    fn laplacian_is_linear(a in poly(3, 4), b in poly(3, 4), c in scalar()) {
        let lhs = laplacian(&(&a + &b.scalar_mul(&c)));
        let rhs = &laplacian(&a) + &laplacian(&b).scalar_mul(&c);
        prop_assert_eq!(lhs, rhs);
    }
}
