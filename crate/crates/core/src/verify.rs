//! Seeded verification suites.
//!
//! Every suite draws its random samples from a ChaCha stream seeded by
//! an explicit `u64`, so failures are reproducible; [`DEFAULT_SEED`] is
//! used by the CLI unless overridden. All comparisons are exact — a
//! suite check never involves a tolerance.


use num::bigint::BigInt;
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, BigRational, GaussianRational};
use crate::error::Error;
use crate::harmonic::{
    eigensplit_xx_laplacian, harmonic_basis, harmonic_decompose, harmonic_rank,
    harmonic_rank_alt, is_harmonic, project_lc,
};
use crate::linalg::{kernel_dense, monomial_index, poly_to_dense_row, poly_to_sparse_row,
    rank_sparse, solve_dense, DenseMatrix};
use crate::mean::{
    check_mean_value_harmonic, ortho_library, pairing_mean, rotate, s_coeff, spherical_mean,
    spherical_mean_via_laplacian,
};
use crate::ops::{
    apply_derivation, casimir, commutator, decompose_annihilating_derivation, euler, laplacian,
    laplacian_iter, partial, rotation_generator, Derivation, Operator,
};
use crate::poly::{monomials_of_degree, Degree, Monomial, Poly};
use crate::zonal::{
    block_operator, common_eigen_harmonic, eigen_monomial, gegenbauer_solve, l_kernel_lift,
    ode_residual, odd_dim_eigen_harmonic, zonal_harmonic, EigenSignature, UniPoly,
};

/// Seed used by `verify` when none is given.
pub const DEFAULT_SEED: u64 = 42;

const MESSAGE_CAP: usize = 8;

/// Outcome of one suite: number of checks, number of failures, and a
/// capped list of failure descriptions.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failed: u64,
    pub messages: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failed: 0,
            messages: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.failed += 1;
            if self.messages.len() < MESSAGE_CAP {
                self.messages.push(msg());
            }
        }
    }
}

type Suite = fn(u64) -> SuiteReport;

const SUITES: &[(&str, Suite)] = &[
    ("laplacian-identity", laplacian_identity),
    ("commutators", commutators),
    ("operators", operators),
    ("decomposition", decomposition),
    ("harmonic", harmonic),
    ("dimensions", dimensions),
    ("projection", projection),
    ("mean", mean),
    ("mean-oracles", mean_oracles),
    ("multinomial", multinomial),
    ("mean-value", mean_value),
    ("rotation", rotation),
    ("zonal", zonal),
    ("eigen", eigen),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport, Error> {
    for (n, f) in SUITES {
        if *n == name {
            return Ok(f(seed));
        }
    }
    Err(Error::UnknownSuite(name.to_string()))
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITES.iter().map(|(_, f)| f(seed)).collect()
}

// ---------------------------------------------------------------------
// Random sampling
// ---------------------------------------------------------------------

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = GaussianRational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    if rng.gen_range(0..4) == 0 {
        let im = GaussianRational::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
        &re + &(&im * &GaussianRational::i())
    } else {
        re
    }
}

fn random_nonzero_scalar(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let c = random_scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, dim: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; dim];
    for _ in 0..degree {
        exps[rng.gen_range(0..dim)] += 1;
    }
    Monomial::new(exps)
}

fn random_poly(rng: &mut ChaCha8Rng, dim: usize, max_deg: u32, max_terms: usize) -> Poly {
    let terms = rng.gen_range(1..=max_terms);
    let mut p = Poly::zero(dim);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let m = random_monomial(rng, dim, d);
        p = &p + &Poly::from_terms(dim, [(m, random_scalar(rng))]);
    }
    p
}

fn random_homogeneous(rng: &mut ChaCha8Rng, dim: usize, degree: u32, max_terms: usize) -> Poly {
    let terms = rng.gen_range(1..=max_terms);
    let mut p = Poly::zero(dim);
    for _ in 0..terms {
        let m = random_monomial(rng, dim, degree);
        p = &p + &Poly::from_terms(dim, [(m, random_scalar(rng))]);
    }
    p
}

fn random_nonzero_homogeneous(rng: &mut ChaCha8Rng, dim: usize, degree: u32, max_terms: usize) -> Poly {
    loop {
        let p = random_homogeneous(rng, dim, degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random linear form `sum c_j x_j` with at least one nonzero slot.
fn random_linear_form(rng: &mut ChaCha8Rng, dim: usize) -> Poly {
    loop {
        let mut p = Poly::zero(dim);
        for j in 1..=dim {
            if rng.gen_range(0..3) > 0 {
                p = &p + &Poly::var(dim, j).scalar_mul(&GaussianRational::from_int(
                    rng.gen_range(-3..=3),
                ));
            }
        }
        if p.homogeneous_degree() == Some(Degree::Finite(1)) {
            return p;
        }
    }
}

/// A random harmonic polynomial: a combination of basis elements of the
/// given degree.
fn random_harmonic(rng: &mut ChaCha8Rng, dim: usize, degree: u32) -> Poly {
    let basis = harmonic_basis(dim, degree);
    let mut p = Poly::zero(dim);
    for h in &basis {
        if rng.gen_range(0..3) == 0 {
            p = &p + &h.scalar_mul(&random_scalar(rng));
        }
    }
    p
}

fn random_nonzero_harmonic(rng: &mut ChaCha8Rng, dim: usize, degree: u32) -> Poly {
    loop {
        let p = random_harmonic(rng, dim, degree);
        if !p.is_zero() {
            return p;
        }
    }
}

fn unordered_pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..=dim {
        for k in (j + 1)..=dim {
            out.push((j, k));
        }
    }
    out
}

// ---------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------

/// `(X.X) Delta p = (r dr)^2 p + (N-2) r dr p + M.M p`, exactly, on 500
/// random polynomials across `N = 2..=5`, degree <= 10.
fn laplacian_identity(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("laplacian-identity");
    for dim in 2..=5usize {
        let mut rng = rng_for(seed, dim as u64);
        for _ in 0..125 {
            let p = random_poly(&mut rng, dim, 10, 6);
            let lhs = &Poly::x_dot_x(dim) * &laplacian(&p);
            let e1 = euler(&p);
            let rhs = &(&euler(&e1) + &e1.scalar_mul(&GaussianRational::from_int(dim as i64 - 2)))
                + &casimir(&p);
            report.check(lhs == rhs, || format!("identity failed at N={dim} on {p}"));
        }
    }
    report
}

/// Predicted `[M_ab, M_cd]` as a signed generator application, or zero.
fn predicted_commutator(p: &Poly, a: usize, b: usize, c: usize, d: usize) -> Poly {
    let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
    match shared {
        0 => Poly::zero(p.dim()),
        2 => Poly::zero(p.dim()), // same unordered pair, possibly flipped
        1 => {
            if b == c {
                rotation_generator(p, a, d)
            } else if b == d {
                -&rotation_generator(p, a, c)
            } else if a == c {
                -&rotation_generator(p, b, d)
            } else {
                rotation_generator(p, b, c)
            }
        }
        _ => unreachable!(),
    }
}

/// The commutator table: disjoint generator pairs commute, chained
/// pairs produce a generator, and every generator commutes with `M.M`.
fn commutators(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("commutators");
    for dim in 2..=5usize {
        let mut rng = rng_for(seed, 100 + dim as u64);
        let samples: Vec<Poly> = (0..2).map(|_| random_poly(&mut rng, dim, 6, 5)).collect();
        let pairs = unordered_pairs(dim);
        for p in &samples {
            for &(j, k) in &pairs {
                for &(l, m) in &pairs {
                    let got = commutator(Operator::Rotation(j, k), Operator::Rotation(l, m), p);
                    let want = predicted_commutator(p, j, k, l, m);
                    report.check(got == want, || {
                        format!("[M{j}{k}, M{l}{m}] mismatch at N={dim}")
                    });
                }
                let with_casimir = commutator(Operator::Rotation(j, k), Operator::Casimir, p);
                report.check(with_casimir.is_zero(), || {
                    format!("[M{j}{k}, M.M] != 0 at N={dim}")
                });
            }
        }
    }
    report
}

/// Operator plumbing: product rules, commutation with the Laplacian,
/// skew-symmetry, degree preservation, the Euler scaling, the
/// decomposition of derivations annihilating `X.X`, and the sampled
/// direction-derivation property of powers of a linear form.
fn operators(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("operators");
    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 200 + dim as u64);
        let pairs = unordered_pairs(dim);
        for _ in 0..20 {
            let p = random_poly(&mut rng, dim, 7, 5);
            let q = random_poly(&mut rng, dim, 5, 4);
            let (j, k) = pairs[rng.gen_range(0..pairs.len())];

            report.check(
                laplacian(&rotation_generator(&p, j, k))
                    == rotation_generator(&laplacian(&p), j, k),
                || format!("Delta and M{j}{k} do not commute at N={dim}"),
            );
            report.check(
                rotation_generator(&(&Poly::x_dot_x(dim) * &q), j, k)
                    == &Poly::x_dot_x(dim) * &rotation_generator(&q, j, k),
                || format!("M{j}{k} does not pass through X.X at N={dim}"),
            );
            // Laplacian product rule with its first-order cross term.
            let mut cross = Poly::zero(dim);
            for v in 1..=dim {
                cross = &cross + &(&partial(&p, v) * &partial(&q, v));
            }
            let lhs = laplacian(&(&p * &q));
            let rhs = &(&(&laplacian(&p) * &q)
                + &cross.scalar_mul(&GaussianRational::from_int(2)))
                + &(&p * &laplacian(&q));
            report.check(lhs == rhs, || format!("Laplacian product rule at N={dim}"));
            report.check(
                rotation_generator(&(&p * &q), j, k)
                    == &(&rotation_generator(&p, j, k) * &q) + &(&p * &rotation_generator(&q, j, k)),
                || format!("generator product rule at N={dim}"),
            );
            report.check(
                rotation_generator(&p, j, k) == -&rotation_generator(&p, k, j),
                || format!("skew-symmetry at N={dim}"),
            );
        }
        // Degree preservation and Euler scaling on homogeneous samples.
        for d in 0..=6u32 {
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 4);
            let (j, k) = pairs[rng.gen_range(0..pairs.len())];
            let rp = rotation_generator(&p, j, k);
            report.check(
                rp.is_zero() || rp.homogeneous_degree() == Some(Degree::Finite(d)),
                || format!("M{j}{k} changed the degree at N={dim}, d={d}"),
            );
            report.check(
                euler(&p) == p.scalar_mul(&GaussianRational::from_int(d as i64)),
                || format!("Euler scaling failed at N={dim}, d={d}"),
            );
        }
        // Random generator combinations annihilate X.X and decompose back.
        for _ in 0..8 {
            let mut weights: Vec<((usize, usize), Poly)> = Vec::new();
            for &(j, k) in &pairs {
                if rng.gen_range(0..2) == 0 {
                    let w = random_poly(&mut rng, dim, 3, 3);
                    weights.push(((j, k), w));
                }
            }
            let l = Derivation::rotation_combination(dim, &weights);
            report.check(
                l.apply(&Poly::x_dot_x(dim)).is_zero(),
                || format!("combination does not annihilate X.X at N={dim}"),
            );
            match decompose_annihilating_derivation(&l) {
                Err(_) => report.check(false, || format!("decomposition failed at N={dim}")),
                Ok(back_weights) => {
                    let back = Derivation::rotation_combination(dim, &back_weights);
                    let agree = (1..=dim).all(|v| {
                        apply_derivation(&back, &Poly::var(dim, v))
                            == apply_derivation(&l, &Poly::var(dim, v))
                    });
                    report.check(agree, || {
                        format!("decomposition does not reproduce the derivation at N={dim}")
                    });
                }
            }
        }
        // Powers of a fixed linear form are annihilated by every
        // derivation built to kill the form; and a generic polynomial
        // is caught by some witness derivation.
        for _ in 0..6 {
            let t: Vec<GaussianRational> = (0..dim)
                .map(|_| GaussianRational::from_int(rng.gen_range(-3..=3)))
                .collect();
            if t.iter().all(|c| c.is_zero()) {
                continue;
            }
            let form = t
                .iter()
                .enumerate()
                .fold(Poly::zero(dim), |acc, (j, c)| {
                    &acc + &Poly::var(dim, j + 1).scalar_mul(c)
                });
            let e = rng.gen_range(0..=4u32);
            let q = form.pow(e).scalar_mul(&random_nonzero_scalar(&mut rng));
            // D_jk = t_k d_j - t_j d_k kills the form, hence its powers.
            for j in 1..=dim {
                for k in (j + 1)..=dim {
                    let mut coeffs = vec![Poly::zero(dim); dim];
                    coeffs[j - 1] = Poly::constant(dim, t[k - 1].clone());
                    coeffs[k - 1] = -&Poly::constant(dim, t[j - 1].clone());
                    let l = Derivation::new(coeffs);
                    report.check(
                        l.apply(&q).is_zero(),
                        || format!("direction derivation does not kill a power at N={dim}"),
                    );
                }
            }
            // Witness direction: a homogeneous polynomial annihilated
            // by every D_jk must be a multiple of a power of the form,
            // so perturbing the power gets caught by some D_jk.
            if e >= 1 {
                let bad = &q + &random_nonzero_homogeneous(&mut rng, dim, e, 2);
                if !bad.is_zero() {
                    let mut caught = false;
                    let mut is_power_multiple = false;
                    // The perturbation can, rarely, land back on a
                    // multiple of the power; that case is legitimate.
                    let power = form.pow(e);
                    if let Some((m, c)) = bad.terms().next() {
                        if let Some(inv) = power.coefficient(m).inv() {
                            is_power_multiple = bad == power.scalar_mul(&(c * &inv));
                        }
                    }
                    for j in 1..=dim {
                        for k in (j + 1)..=dim {
                            let mut coeffs = vec![Poly::zero(dim); dim];
                            coeffs[j - 1] = Poly::constant(dim, t[k - 1].clone());
                            coeffs[k - 1] = -&Poly::constant(dim, t[j - 1].clone());
                            if !Derivation::new(coeffs).apply(&bad).is_zero() {
                                caught = true;
                            }
                        }
                    }
                    report.check(caught || is_power_multiple, || {
                        format!("no witness derivation for a non-power at N={dim}")
                    });
                }
            }
        }
    }
    report
}

/// Brute-force harmonic decomposition of a homogeneous polynomial by an
/// exact linear solve, independent of the triangular-solve route: the
/// unknowns are the coefficients of the candidate parts, constrained by
/// reconstruction and by harmonicity of every part.
fn decompose_by_linear_solve(p: &Poly, d: u32) -> Option<Vec<Poly>> {
    let dim = p.dim();
    let s = d / 2;
    let xx = Poly::x_dot_x(dim);
    let layer_monomials: Vec<Vec<Monomial>> = (0..=s)
        .map(|j| monomials_of_degree(dim, d - 2 * j))
        .collect();
    let offsets: Vec<usize> = layer_monomials
        .iter()
        .scan(0usize, |acc, m| {
            let here = *acc;
            *acc += m.len();
            Some(here)
        })
        .collect();
    let unknowns: usize = layer_monomials.iter().map(|m| m.len()).sum();

    let target_index = monomial_index(&monomials_of_degree(dim, d));
    let mut rows: DenseMatrix = Vec::new();
    let mut rhs: Vec<GaussianRational> = Vec::new();

    // Reconstruction rows: one per degree-d monomial.
    let mut recon = vec![vec![GaussianRational::zero(); unknowns]; target_index.len()];
    for (j, mons) in layer_monomials.iter().enumerate() {
        for (col_in_layer, m) in mons.iter().enumerate() {
            let lifted = &xx.pow(j as u32)
                * &Poly::from_terms(dim, [(m.clone(), GaussianRational::one())]);
            for (tm, c) in lifted.terms() {
                let row = target_index[tm];
                recon[row][offsets[j] + col_in_layer] =
                    &recon[row][offsets[j] + col_in_layer] + c;
            }
        }
    }
    let rhs_dense = poly_to_dense_row(p, &target_index);
    for (row, b) in recon.into_iter().zip(rhs_dense) {
        rows.push(row);
        rhs.push(b);
    }

    // Harmonicity rows: Delta of every layer vanishes coefficientwise.
    for (j, mons) in layer_monomials.iter().enumerate() {
        if d < 2 * j as u32 + 2 {
            continue;
        }
        let image_index = monomial_index(&monomials_of_degree(dim, d - 2 * j as u32 - 2));
        if image_index.is_empty() {
            continue;
        }
        let mut harm = vec![vec![GaussianRational::zero(); unknowns]; image_index.len()];
        for (col_in_layer, m) in mons.iter().enumerate() {
            let image = laplacian(&Poly::from_terms(
                dim,
                [(m.clone(), GaussianRational::one())],
            ));
            for (tm, c) in image.terms() {
                let row = image_index[tm];
                harm[row][offsets[j] + col_in_layer] =
                    &harm[row][offsets[j] + col_in_layer] + c;
            }
        }
        for row in harm {
            rows.push(row);
            rhs.push(GaussianRational::zero());
        }
    }

    let solution = solve_dense(&rows, &rhs)?;
    let mut parts = Vec::new();
    for (j, mons) in layer_monomials.iter().enumerate() {
        let mut part = Poly::zero(dim);
        for (col_in_layer, m) in mons.iter().enumerate() {
            part = &part
                + &Poly::from_terms(
                    dim,
                    [(m.clone(), solution[offsets[j] + col_in_layer].clone())],
                );
        }
        parts.push(part);
    }
    Some(parts)
}

/// Harmonic decomposition: round trip and uniqueness on 500 random
/// polynomials over `N <= 5`, degree <= 10, cross-checked on `N <= 3`,
/// degree <= 6 against the brute-force linear solve.
fn decomposition(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("decomposition");
    for dim in 2..=5usize {
        let mut rng = rng_for(seed, 300 + dim as u64);
        for _ in 0..125 {
            let p = random_poly(&mut rng, dim, 10, 6);
            let dec = harmonic_decompose(&p);
            report.check(dec.reconstruct() == p, || {
                format!("round trip failed at N={dim} on {p}")
            });
            report.check(
                dec.parts().iter().all(is_harmonic),
                || format!("non-harmonic part at N={dim}"),
            );
        }
        // Homogeneous inputs keep homogeneous parts of the right degree.
        for d in 0..=8u32 {
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 5);
            let dec = harmonic_decompose(&p);
            let degrees_ok = dec.parts().iter().enumerate().all(|(j, part)| {
                part.is_zero()
                    || part.homogeneous_degree() == Some(Degree::Finite(d - 2 * j as u32))
            });
            report.check(degrees_ok, || {
                format!("part degrees wrong at N={dim}, d={d}")
            });
        }
        // Uniqueness: assembling from chosen harmonic parts recovers
        // exactly those parts.
        for d in 2..=6u32 {
            let mut parts = Vec::new();
            let mut assembled = Poly::zero(dim);
            let xx = Poly::x_dot_x(dim);
            for j in 0..=(d / 2) {
                let h = random_harmonic(&mut rng, dim, d - 2 * j);
                assembled = &assembled + &(&xx.pow(j) * &h);
                parts.push(h);
            }
            while parts.last().is_some_and(|q| q.is_zero()) {
                parts.pop();
            }
            let dec = harmonic_decompose(&assembled);
            report.check(dec.parts() == parts.as_slice(), || {
                format!("uniqueness failed at N={dim}, d={d}")
            });
        }
    }
    // Independent oracle: exact linear solve.
    for dim in 2..=3usize {
        let mut rng = rng_for(seed, 350 + dim as u64);
        for d in 0..=6u32 {
            for _ in 0..4 {
                let p = random_nonzero_homogeneous(&mut rng, dim, d, 4);
                let fast: Vec<Poly> = harmonic_decompose(&p).parts().to_vec();
                match decompose_by_linear_solve(&p, d) {
                    None => report.check(false, || {
                        format!("oracle solve failed at N={dim}, d={d}")
                    }),
                    Some(mut oracle) => {
                        while oracle.last().is_some_and(|q| q.is_zero()) {
                            oracle.pop();
                        }
                        report.check(fast == oracle, || {
                            format!("oracle disagreement at N={dim}, d={d} on {p}")
                        });
                    }
                }
            }
        }
    }
    report
}

/// Harmonic structure theorems checked pointwise: no nonzero harmonic
/// multiple of `X.X - c`, joint rotation invariance pins down radial
/// powers, sphere-wise rotation invariance pins down constants, and a
/// nonzero homogeneous polynomial never vanishes on a sphere of nonzero
/// radius.
fn harmonic(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("harmonic");
    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 400 + dim as u64);
        let pairs = unordered_pairs(dim);

        // Nonzero harmonics are never divisible by X.X - c.
        for d in 1..=5u32 {
            let h = random_nonzero_harmonic(&mut rng, dim, d);
            let c = random_scalar(&mut rng);
            let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c);
            let (_, r) = h.divmod_monic(&modulus, dim).expect("monic in the last variable");
            report.check(!r.is_zero(), || {
                format!("harmonic multiple of X.X - c at N={dim}, d={d}")
            });
        }

        // Polynomials in X.X are killed by every generator.
        for _ in 0..6 {
            let coeffs: Vec<GaussianRational> =
                (0..=3).map(|_| random_scalar(&mut rng)).collect();
            let f = UniPoly::new(coeffs);
            let p = f.eval_poly(&Poly::x_dot_x(dim));
            for &(j, k) in &pairs {
                report.check(
                    rotation_generator(&p, j, k).is_zero(),
                    || format!("generator does not kill a radial polynomial at N={dim}"),
                );
            }
        }

        // Partial symmetry: polynomials in a block norm x_j^2 + x_k^2
        // and the remaining variables are killed by that block's
        // generator alone.
        if dim >= 3 {
            for _ in 0..4 {
                let coeffs: Vec<GaussianRational> =
                    (0..=2).map(|_| random_scalar(&mut rng)).collect();
                let f = UniPoly::new(coeffs);
                let block = &Poly::var(dim, 1).pow(2) + &Poly::var(dim, 2).pow(2);
                let rest = random_poly(&mut rng, dim - 2, 3, 3);
                let images: Vec<Poly> = (3..=dim).map(|j| Poly::var(dim, j)).collect();
                let p = &f.eval_poly(&block) * &rest.substitute(&images).expect("shift images");
                report.check(
                    rotation_generator(&p, 1, 2).is_zero(),
                    || format!("block-symmetric polynomial not killed by M12 at N={dim}"),
                );
            }
        }

        // Joint kernel of all generators in even degree d is exactly
        // the span of (X.X)^(d/2); odd degree gives zero.
        for d in 1..=4u32 {
            let mons = monomials_of_degree(dim, d);
            let index = monomial_index(&mons);
            // Columns = monomials, rows = (pair, target monomial).
            let mut stacked: DenseMatrix = Vec::new();
            for &(j, k) in &pairs {
                let mut rows: Vec<Vec<GaussianRational>> =
                    vec![vec![GaussianRational::zero(); mons.len()]; mons.len()];
                for (col, m) in mons.iter().enumerate() {
                    let image = rotation_generator(
                        &Poly::from_terms(dim, [(m.clone(), GaussianRational::one())]),
                        j,
                        k,
                    );
                    for (tm, c) in image.terms() {
                        rows[index[tm]][col] = c.clone();
                    }
                }
                stacked.extend(rows);
            }
            let kernel = kernel_dense(&stacked, mons.len());
            if d % 2 == 1 {
                report.check(kernel.is_empty(), || {
                    format!("odd-degree joint kernel is not zero at N={dim}, d={d}")
                });
            } else {
                report.check(kernel.len() == 1, || {
                    format!("joint kernel dimension {} at N={dim}, d={d}", kernel.len())
                });
                if let Some(v) = kernel.first() {
                    let candidate = mons.iter().zip(v).fold(Poly::zero(dim), |acc, (m, c)| {
                        &acc + &Poly::from_terms(dim, [(m.clone(), c.clone())])
                    });
                    let radial = Poly::x_dot_x(dim).pow(d / 2);
                    // candidate and radial must be proportional.
                    let ratio = candidate
                        .terms()
                        .next()
                        .map(|(m, c)| c * &radial.coefficient(m).inv().unwrap_or_else(GaussianRational::zero));
                    let proportional = match ratio {
                        Some(r) if !r.is_zero() => candidate == radial.scalar_mul(&r),
                        _ => false,
                    };
                    report.check(proportional, || {
                        format!("joint kernel is not radial at N={dim}, d={d}")
                    });
                }
            }
        }

        // p = a + (X.X - c) q has every M_jk p divisible by X.X - c and
        // projects to the constant a.
        for _ in 0..8 {
            let a = random_scalar(&mut rng);
            let c = random_scalar(&mut rng);
            let q = random_poly(&mut rng, dim, 4, 4);
            let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c.clone());
            let p = &Poly::constant(dim, a.clone()) + &(&modulus * &q);
            for &(j, k) in &pairs {
                let (_, r) = rotation_generator(&p, j, k)
                    .divmod_monic(&modulus, dim)
                    .expect("monic modulus");
                report.check(r.is_zero(), || {
                    format!("M{j}{k} p not divisible by the modulus at N={dim}")
                });
            }
            report.check(
                project_lc(&p, &c) == Poly::constant(dim, a.clone()),
                || format!("projection of a sphere-constant is not the constant at N={dim}"),
            );
        }

        // No nonzero homogeneous polynomial is divisible by X.X - c for
        // c != 0.
        for d in 0..=5u32 {
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 4);
            let c = random_nonzero_scalar(&mut rng);
            let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c);
            let (_, r) = p.divmod_monic(&modulus, dim).expect("monic modulus");
            report.check(!r.is_zero(), || {
                format!("homogeneous polynomial vanished on a sphere at N={dim}, d={d}")
            });
        }

        // Generators preserve harmonicity on basis elements.
        for d in 0..=4u32 {
            for h in harmonic_basis(dim, d) {
                for &(j, k) in &pairs {
                    report.check(
                        is_harmonic(&rotation_generator(&h, j, k)),
                        || format!("generator broke harmonicity at N={dim}, d={d}"),
                    );
                }
            }
        }

        // Eigenspace split of (X.X) Delta: components sum to the input
        // and carry the advertised eigenvalues.
        for d in 1..=6u32 {
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 5);
            let split = eigensplit_xx_laplacian(&p).expect("homogeneous input");
            let total = split
                .iter()
                .fold(Poly::zero(dim), |acc, (_, comp)| &acc + comp);
            report.check(total == p, || format!("eigensplit does not sum at N={dim}, d={d}"));
            for (lambda, comp) in &split {
                let image = &Poly::x_dot_x(dim) * &laplacian(comp);
                report.check(image == comp.scalar_mul(lambda), || {
                    format!("eigensplit eigenvalue wrong at N={dim}, d={d}")
                });
            }
        }
    }
    report
}

/// Dimension formulas and exact rank certification of the harmonic
/// bases for `N = 2..=5`, `d = 0..=8`.
fn dimensions(_seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("dimensions");
    for dim in 2..=5usize {
        for d in 0..=8u32 {
            let basis = harmonic_basis(dim, d);
            let expected = harmonic_rank(dim, d);
            let alt = harmonic_rank_alt(dim, d);
            report.check(expected == alt, || {
                format!("rank formulas disagree at N={dim}, d={d}")
            });
            report.check(
                BigInt::from(basis.len()) == expected,
                || format!("basis size {} != rank at N={dim}, d={d}", basis.len()),
            );
            for h in &basis {
                report.check(is_harmonic(h), || {
                    format!("non-harmonic basis element at N={dim}, d={d}")
                });
            }
            // Exact elimination on the monomial-coefficient matrix.
            let index = monomial_index(&monomials_of_degree(dim, d));
            let rows = basis
                .iter()
                .map(|h| poly_to_sparse_row(h, &index))
                .collect();
            report.check(rank_sparse(rows) == basis.len(), || {
                format!("rank deficiency at N={dim}, d={d}")
            });
        }
    }
    report
}

/// The projection contract: `L_c p` is harmonic, `p - L_c p` is
/// divisible by `X.X - c`, and `L_c` commutes with every generator.
fn projection(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("projection");
    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 500 + dim as u64);
        let pairs = unordered_pairs(dim);
        for _ in 0..67 {
            let p = random_poly(&mut rng, dim, 8, 5);
            let c = random_scalar(&mut rng);
            let projected = project_lc(&p, &c);
            report.check(is_harmonic(&projected), || {
                format!("projection is not harmonic at N={dim}")
            });
            let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c.clone());
            let (_, r) = (&p - &projected)
                .divmod_monic(&modulus, dim)
                .expect("monic modulus");
            report.check(r.is_zero(), || {
                format!("p - L_c p is not divisible by X.X - c at N={dim}")
            });
            let &(j, k) = &pairs[rng.gen_range(0..pairs.len())];
            report.check(
                project_lc(&rotation_generator(&p, j, k), &c)
                    == rotation_generator(&projected, j, k),
                || format!("projection does not commute with M{j}{k} at N={dim}"),
            );
        }
        // Scalars on radial powers and idempotence on harmonics.
        let mut rng2 = rng_for(seed, 550 + dim as u64);
        for k in 0..=3u32 {
            let c = random_scalar(&mut rng2);
            report.check(
                project_lc(&Poly::x_dot_x(dim).pow(k), &c) == Poly::constant(dim, c.pow(k)),
                || format!("projection of a radial power at N={dim}, k={k}"),
            );
        }
        for d in 0..=4u32 {
            let h = random_harmonic(&mut rng2, dim, d);
            let c = random_scalar(&mut rng2);
            report.check(project_lc(&h, &c) == h, || {
                format!("projection moved a harmonic at N={dim}, d={d}")
            });
        }
    }
    report
}

/// Defining properties of the normalized mean: multiplying by `X.X` is
/// invisible, generator images die, the first-variable reduction holds,
/// and harmonics average to their value at the origin.
fn mean(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("mean");
    for dim in 1..=5usize {
        for n in 0..=6u32 {
            report.check(
                spherical_mean(&Poly::x_dot_x(dim).pow(n)).is_one(),
                || format!("mean of (X.X)^{n} is not 1 at N={dim}"),
            );
        }
        for n in 0..=8u32 {
            let lhs = s_coeff(n + 1, dim);
            let rhs = s_coeff(n, dim)
                / BigRational::from_integer(BigInt::from(dim as i64 + 2 * n as i64));
            report.check(lhs == rhs, || format!("s recursion failed at N={dim}, n={n}"));
        }
    }
    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 600 + dim as u64);
        let pairs = unordered_pairs(dim);
        for _ in 0..25 {
            let p = random_poly(&mut rng, dim, 8, 5);
            report.check(
                spherical_mean(&(&Poly::x_dot_x(dim) * &p)) == spherical_mean(&p),
                || format!("X.X multiplication changed the mean at N={dim}"),
            );
            let &(j, k) = &pairs[rng.gen_range(0..pairs.len())];
            report.check(
                spherical_mean(&rotation_generator(&p, j, k)).is_zero(),
                || format!("mean of a generator image is nonzero at N={dim}"),
            );
        }
        for d in 0..=7u32 {
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 5);
            let lhs = spherical_mean(&(&Poly::var(dim, 1) * &p));
            let rhs = &spherical_mean(&partial(&p, 1))
                * &GaussianRational::ratio(1, dim as i64 + d as i64 - 1);
            report.check(lhs == rhs, || {
                format!("first-variable reduction failed at N={dim}, d={d}")
            });
        }
        for d in 0..=5u32 {
            let h = random_harmonic(&mut rng, dim, d);
            report.check(
                spherical_mean(&h) == h.constant_term(),
                || format!("harmonic mean is not the center value at N={dim}, d={d}"),
            );
        }
    }
    report
}

/// Triple-oracle agreement of the mean, including the worked value
/// `1/512` for `x1^4 x2^6` at `N = 4` through all three routes.
fn mean_oracles(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("mean-oracles");
    // Worked example, all three routes.
    let worked = crate::text::parse_poly("x1^4*x2^6", 4).expect("fixed input parses");
    let target = GaussianRational::ratio(1, 512);
    report.check(spherical_mean(&worked) == target, || {
        "monomial route misses 1/512".into()
    });
    report.check(
        spherical_mean_via_laplacian(&worked).expect("homogeneous") == target,
        || "Laplacian route misses 1/512".into(),
    );
    let mut factors = vec![Poly::var(4, 1); 4];
    factors.extend(vec![Poly::var(4, 2); 6]);
    report.check(
        pairing_mean(&factors).expect("linear factors") == target,
        || "pairing route misses 1/512".into(),
    );

    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 700 + dim as u64);
        for _ in 0..40 {
            let d = rng.gen_range(0..=8u32);
            let p = random_nonzero_homogeneous(&mut rng, dim, d, 5);
            let monomial_route = spherical_mean(&p);
            let laplace_route = spherical_mean_via_laplacian(&p).expect("homogeneous sample");
            report.check(monomial_route == laplace_route, || {
                format!("monomial vs Laplacian mismatch at N={dim}, d={d}")
            });
        }
        for _ in 0..30 {
            let count = 2 * rng.gen_range(1..=4usize);
            let forms: Vec<Poly> = (0..count)
                .map(|_| random_linear_form(&mut rng, dim))
                .collect();
            let product = forms.iter().fold(Poly::one(dim), |acc, f| &acc * f);
            let monomial_route = spherical_mean(&product);
            let laplace_route =
                spherical_mean_via_laplacian(&product).expect("products are homogeneous");
            let pairing_route = pairing_mean(&forms).expect("linear forms");
            report.check(
                monomial_route == laplace_route && laplace_route == pairing_route,
                || format!("triple-oracle mismatch at N={dim}, 2n={count}"),
            );
        }
    }
    report
}

/// The central-binomial convolution identity behind the normalization:
/// exhaustive enumeration for `N <= 6`, `n <= 6`, plus the closed spot
/// value `2N^2 + 4N` at `n = 2`.
fn multinomial(_seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("multinomial");
    fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 1 {
            return vec![vec![n]];
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, parts - 1) {
                let mut v = vec![first];
                v.append(&mut rest);
                out.push(v);
            }
        }
        out
    }
    for dim in 1..=6usize {
        for n in 0..=6u32 {
            let mut lhs = BigInt::zero();
            for comp in compositions(n, dim) {
                let mut prod = BigInt::one();
                for b in comp {
                    prod *= binomial(2 * b as i64, b as i64);
                }
                lhs += prod;
            }
            // 2^n / n! * (N + 2n - 2)(N + 2n - 4) ... N
            let mut rhs = BigRational::from_integer(BigInt::one());
            for _ in 0..n {
                rhs *= BigRational::from_integer(BigInt::from(2));
            }
            for k in 1..=n as i64 {
                rhs /= BigRational::from_integer(BigInt::from(k));
                rhs *= BigRational::from_integer(BigInt::from(dim as i64 + 2 * n as i64 - 2 * k));
            }
            report.check(
                rhs.is_integer() && rhs.to_integer() == lhs,
                || format!("enumeration mismatch at N={dim}, n={n}"),
            );
            if n == 2 {
                let spot = BigInt::from(2 * (dim as i64) * (dim as i64) + 4 * dim as i64);
                report.check(lhs == spot, || {
                    format!("spot value 2N^2+4N failed at N={dim}")
                });
            }
        }
    }
    report
}

/// The mean-value property holds exactly for harmonics and fails for
/// everything else: checked on every basis element for `N <= 4`,
/// `d <= 6`, and on 100 random non-harmonic polynomials per run.
fn mean_value(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("mean-value");
    for dim in 2..=4usize {
        for d in 0..=6u32 {
            for h in harmonic_basis(dim, d) {
                report.check(
                    check_mean_value_harmonic(&h) && is_harmonic(&h),
                    || format!("mean-value failed on a basis element at N={dim}, d={d}"),
                );
            }
        }
    }
    let mut non_harmonic_seen = 0u32;
    for dim in 2..=4usize {
        let mut rng = rng_for(seed, 800 + dim as u64);
        let mut tries = 0;
        while non_harmonic_seen < 34 * (dim as u32 - 1) && tries < 200 {
            tries += 1;
            let p = random_poly(&mut rng, dim, 6, 5);
            let harmonic = is_harmonic(&p);
            if !harmonic {
                non_harmonic_seen += 1;
            }
            report.check(check_mean_value_harmonic(&p) == harmonic, || {
                format!("mean-value test disagrees with harmonicity at N={dim} on {p}")
            });
        }
        // Random harmonic combinations pass.
        for d in 0..=4u32 {
            let h = random_harmonic(&mut rng, dim, d);
            report.check(check_mean_value_harmonic(&h), || {
                format!("mean-value failed on a harmonic combination at N={dim}, d={d}")
            });
        }
    }
    report.check(non_harmonic_seen >= 100, || {
        format!("only {non_harmonic_seen} non-harmonic samples drawn")
    });
    report
}

/// Rotation invariance: the mean is blind to exact orthogonal changes
/// of variable and the Laplacian commutes with them, over a library of
/// at least 10 matrices per dimension and 100 random polynomials each.
fn rotation(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("rotation");
    for dim in 2..=4usize {
        let lib = ortho_library(dim);
        report.check(lib.len() >= 10, || {
            format!("library too small at N={dim}: {}", lib.len())
        });
        let mut rng = rng_for(seed, 900 + dim as u64);
        for trial in 0..100 {
            let p = random_poly(&mut rng, dim, 5, 5);
            let a = &lib[trial % lib.len()];
            let rotated = rotate(&p, a);
            report.check(
                spherical_mean(&rotated) == spherical_mean(&p),
                || format!("mean not rotation invariant at N={dim}"),
            );
            report.check(
                laplacian(&rotated) == rotate(&laplacian(&p), a),
                || format!("Laplacian does not commute with rotation at N={dim}"),
            );
        }
        // Iterated commutation on a fixed sample across the library.
        let p = random_poly(&mut rng, dim, 6, 4);
        for a in &lib {
            for m in 0..=3u32 {
                report.check(
                    laplacian_iter(&rotate(&p, a), m) == rotate(&laplacian_iter(&p, m), a),
                    || format!("Delta^{m} does not commute with rotation at N={dim}"),
                );
            }
        }
    }
    report
}

/// The zonal pipeline: the recursion solves the equation exactly with
/// the right parity, `alpha = 0` degenerates to the pure power, the
/// assembled zonal harmonics are harmonic homogeneous and congruent to
/// their generating single-variable polynomial, and a nonzero
/// single-variable polynomial in a linear form is never divisible by
/// `X.X - c`.
fn zonal(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("zonal");
    let alphas = [
        GaussianRational::from_int(0),
        GaussianRational::from_int(1),
        GaussianRational::from_int(2),
        GaussianRational::ratio(1, 4),
    ];
    for dim in 3..=5usize {
        for n in 0..=8u32 {
            for alpha in &alphas {
                let q = gegenbauer_solve(n, dim, alpha).expect("dim >= 3");
                report.check(
                    ode_residual(&q, n, dim, alpha).is_zero(),
                    || format!("residual nonzero at N={dim}, n={n}, alpha={alpha}"),
                );
                report.check(
                    q.degree() == Some(n as usize)
                        && q.coeff(n as usize) == GaussianRational::one(),
                    || format!("solution is not monic of degree {n} at N={dim}"),
                );
                let parity_ok = q
                    .coeffs()
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.is_zero() || (k as u32) % 2 == n % 2);
                report.check(parity_ok, || {
                    format!("parity violated at N={dim}, n={n}, alpha={alpha}")
                });
                if alpha.is_zero() {
                    report.check(q == UniPoly::monomial(n as usize), || {
                        format!("alpha = 0 is not Y^{n} at N={dim}")
                    });
                }
            }
        }
    }
    for dim in 3..=5usize {
        let mut rng = rng_for(seed, 1000 + dim as u64);
        for n in 0..=4u32 {
            for _ in 0..3 {
                let mut t: Vec<GaussianRational> = (0..dim)
                    .map(|_| GaussianRational::from_int(rng.gen_range(-2..=2)))
                    .collect();
                if t.iter().all(|c| c.is_zero()) {
                    t[0] = GaussianRational::one();
                }
                let c = random_scalar(&mut rng);
                let (q, h) = zonal_harmonic(&t, &c, n).expect("valid direction");
                report.check(is_harmonic(&h), || {
                    format!("zonal output not harmonic at N={dim}, n={n}")
                });
                report.check(
                    h.homogeneous_degree() == Some(Degree::Finite(n)),
                    || format!("zonal output degree wrong at N={dim}, n={n}"),
                );
                let t_dot_x = t.iter().enumerate().fold(Poly::zero(dim), |acc, (j, tj)| {
                    &acc + &Poly::var(dim, j + 1).scalar_mul(tj)
                });
                let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c.clone());
                let (_, r) = (&q.eval_poly(&t_dot_x) - &h)
                    .divmod_monic(&modulus, dim)
                    .expect("monic modulus");
                report.check(r.is_zero(), || {
                    format!("zonal congruence failed at N={dim}, n={n}")
                });
            }
        }
        // Non-vanishing: q(t.X) never divisible by X.X - c for q != 0,
        // including c = 0 (divisibility by X.X itself).
        for trial in 0..10 {
            let deg = rng.gen_range(0..=6usize);
            let mut coeffs: Vec<GaussianRational> =
                (0..=deg).map(|_| random_scalar(&mut rng)).collect();
            coeffs[deg] = random_nonzero_scalar(&mut rng);
            let q = UniPoly::new(coeffs);
            let mut t: Vec<GaussianRational> = (0..dim)
                .map(|_| GaussianRational::from_int(rng.gen_range(-2..=2)))
                .collect();
            if t.iter().all(|x| x.is_zero()) {
                t[1] = GaussianRational::one();
            }
            let c = if trial % 3 == 0 {
                GaussianRational::zero()
            } else {
                random_scalar(&mut rng)
            };
            let t_dot_x = t.iter().enumerate().fold(Poly::zero(dim), |acc, (j, tj)| {
                &acc + &Poly::var(dim, j + 1).scalar_mul(tj)
            });
            let modulus = &Poly::x_dot_x(dim) - &Poly::constant(dim, c);
            let (_, r) = q
                .eval_poly(&t_dot_x)
                .divmod_monic(&modulus, dim)
                .expect("monic modulus");
            report.check(!r.is_zero(), || {
                format!("q(t.X) vanished on a sphere at N={dim}")
            });
        }
    }
    report
}

/// Simultaneous eigenvectors: eigenvalue relations and harmonicity for
/// every signature with `|a| <= 5` and `N = 2..=5`, the Casimir
/// eigenvalue `-|a|(|a| + N - 2)` confirmed by direct application, exact
/// kernel computations pinning down uniqueness, and the kernel-lift
/// builders in both parities.
fn eigen(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("eigen");
    for dim in 2..=5usize {
        let n = dim / 2;
        let mut signatures: Vec<(Vec<u32>, Vec<i8>)> = Vec::new();
        if n == 1 {
            for a in 0..=5u32 {
                for e in [1i8, -1] {
                    signatures.push((vec![a], vec![e]));
                }
            }
        } else {
            for a1 in 0..=5u32 {
                for a2 in 0..=(5 - a1) {
                    for e1 in [1i8, -1] {
                        for e2 in [1i8, -1] {
                            signatures.push((vec![a1, a2], vec![e1, e2]));
                        }
                    }
                }
            }
        }
        for (a, eps) in signatures {
            let sig = EigenSignature::new(a.clone(), eps).expect("valid signature");
            let y = eigen_monomial(&sig, dim).expect("arity matches");
            let total = sig.total_degree();
            report.check(is_harmonic(&y), || {
                format!("eigen monomial not harmonic at N={dim}, a={a:?}")
            });
            for (j, (&aj, &ej)) in sig.exponents().iter().zip(sig.signs()).enumerate() {
                let got = rotation_generator(&y, 2 * j + 1, 2 * j + 2);
                let lambda =
                    &GaussianRational::from_int(ej as i64 * aj as i64) * &GaussianRational::i();
                report.check(got == y.scalar_mul(&lambda), || {
                    format!("generator eigenvalue wrong at N={dim}, a={a:?}, j={j}")
                });
            }
            // Casimir eigenvalue by direct application of M.M.
            let expected = -(total as i64) * (total as i64 + dim as i64 - 2);
            report.check(
                casimir(&y) == y.scalar_mul(&GaussianRational::from_int(expected)),
                || format!("Casimir eigenvalue wrong at N={dim}, a={a:?}"),
            );
        }
    }

    // Uniqueness through exact kernels: in H and P of degree |a| the
    // simultaneous eigenspace is one-dimensional, spanned by Y.
    let kernel_cases: Vec<(usize, Vec<u32>, Vec<i8>)> = vec![
        (2, vec![1], vec![1]),
        (2, vec![2], vec![-1]),
        (2, vec![3], vec![1]),
        (4, vec![1, 1], vec![1, 1]),
        (4, vec![2, 1], vec![1, -1]),
    ];
    for (dim, a, eps) in kernel_cases {
        let sig = EigenSignature::new(a.clone(), eps).expect("valid signature");
        let d = sig.total_degree();
        let y = eigen_monomial(&sig, dim).expect("arity matches");
        let mons = monomials_of_degree(dim, d);
        let index = monomial_index(&mons);
        let mut stacked: DenseMatrix = Vec::new();
        for (j, (&aj, &ej)) in sig.exponents().iter().zip(sig.signs()).enumerate() {
            let lambda =
                &GaussianRational::from_int(ej as i64 * aj as i64) * &GaussianRational::i();
            let mut rows: DenseMatrix =
                vec![vec![GaussianRational::zero(); mons.len()]; mons.len()];
            for (col, m) in mons.iter().enumerate() {
                let basis_vec = Poly::from_terms(dim, [(m.clone(), GaussianRational::one())]);
                let image = &rotation_generator(&basis_vec, 2 * j + 1, 2 * j + 2)
                    - &basis_vec.scalar_mul(&lambda);
                for (tm, c) in image.terms() {
                    rows[index[tm]][col] = &rows[index[tm]][col] + c;
                }
            }
            stacked.extend(rows);
        }
        let kernel = kernel_dense(&stacked, mons.len());
        report.check(kernel.len() == 1, || {
            format!("eigenspace dimension {} at N={dim}, a={a:?}", kernel.len())
        });
        if let Some(v) = kernel.first() {
            let candidate = mons.iter().zip(v).fold(Poly::zero(dim), |acc, (m, c)| {
                &acc + &Poly::from_terms(dim, [(m.clone(), c.clone())])
            });
            let ratio = candidate
                .terms()
                .next()
                .and_then(|(m, c)| y.coefficient(m).inv().map(|i| c * &i));
            let proportional = match ratio {
                Some(r) if !r.is_zero() => candidate == y.scalar_mul(&r),
                _ => false,
            };
            report.check(proportional, || {
                format!("eigenspace not spanned by the product monomial at N={dim}, a={a:?}")
            });
        }
    }

    // Kernel lifts and assembled eigenvectors, even and odd dimension.
    let mut rng = rng_for(seed, 1100);
    for _ in 0..10 {
        let n = rng.gen_range(2..=3usize);
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3u32)).collect();
        let d = rng.gen_range(0..=3u32);
        let seed_poly = random_nonzero_homogeneous(&mut rng, n - 1, d, 3);
        let q = match l_kernel_lift(&a, d, &seed_poly) {
            Ok(q) => q,
            Err(_) => {
                report.check(false, || "kernel lift failed on valid input".into());
                continue;
            }
        };
        report.check(block_operator(&q, &a).is_zero(), || {
            format!("lift is not in the kernel for a={a:?}, d={d}")
        });
        // Even dimension 2n.
        let eps: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let sig = EigenSignature::new(a.clone(), eps).expect("valid signature");
        let dim = 2 * n;
        match common_eigen_harmonic(&sig, &q, dim) {
            Err(_) => report.check(false, || "assembly failed on a kernel element".into()),
            Ok(p) => {
                report.check(is_harmonic(&p), || {
                    format!("assembled eigenvector not harmonic at N={dim}")
                });
                for (j, (&aj, &ej)) in sig.exponents().iter().zip(sig.signs()).enumerate() {
                    let lambda = &GaussianRational::from_int(ej as i64 * aj as i64)
                        * &GaussianRational::i();
                    report.check(
                        rotation_generator(&p, 2 * j + 1, 2 * j + 2) == p.scalar_mul(&lambda),
                        || format!("assembled eigenvalue wrong at N={dim}, j={j}"),
                    );
                }
            }
        }
    }
    for _ in 0..10 {
        let n = rng.gen_range(1..=2usize);
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3u32)).collect();
        let eps: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let sig = EigenSignature::new(a.clone(), eps).expect("valid signature");
        let total = sig.total_degree();
        let r = rng.gen_range(0..=3u32);
        let d = total + r;
        let seed_deg = (r - r % 2) / 2;
        let seed_poly = random_nonzero_homogeneous(&mut rng, n, seed_deg, 3);
        let dim = 2 * n + 1;
        match odd_dim_eigen_harmonic(&sig, &seed_poly, d, dim) {
            Err(_) => report.check(false, || "odd-dimension assembly failed".into()),
            Ok(p) => {
                report.check(is_harmonic(&p), || {
                    format!("odd-dimension eigenvector not harmonic at N={dim}, d={d}")
                });
                report.check(
                    p.is_zero() || p.homogeneous_degree() == Some(Degree::Finite(d)),
                    || format!("odd-dimension degree wrong at N={dim}, d={d}"),
                );
                for (j, (&aj, &ej)) in sig.exponents().iter().zip(sig.signs()).enumerate() {
                    let lambda = &GaussianRational::from_int(ej as i64 * aj as i64)
                        * &GaussianRational::i();
                    report.check(
                        rotation_generator(&p, 2 * j + 1, 2 * j + 2) == p.scalar_mul(&lambda),
                        || format!("odd-dimension eigenvalue wrong at N={dim}, j={j}"),
                    );
                }
            }
        }
    }
    report
}

/// Total failures across reports.
pub fn total_failures(reports: &[SuiteReport]) -> u64 {
    reports.iter().map(|r| r.failed).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_registry_is_consistent() {
        let names = suite_names();
        assert_eq!(names.len(), SUITES.len());
        assert!(run_suite("nope", 1).is_err());
        let r = run_suite("multinomial", 1).unwrap();
        assert!(r.ok(), "failures: {:?}", r.messages);
        assert!(r.checks > 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("laplacian-identity", 7).unwrap();
        let b = run_suite("laplacian-identity", 7).unwrap();
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.failed, b.failed);
    }
}
