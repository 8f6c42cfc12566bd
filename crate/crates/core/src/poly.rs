//! Sparse multivariate polynomial arithmetic in `N` indeterminates over
//! Q(i).
//!
//! A [`Poly`] stores an explicit ambient dimension `N` and a sorted term
//! map from exponent vectors to nonzero coefficients. Cross-dimension
//! arithmetic is a bug, not a promotion, and panics. The term order is
//! graded lexicographic (total degree first, then the exponent vector),
//! which fixes iteration and printing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::GaussianRational;
use crate::error::Error;

/// Exponent vector over a fixed ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial in `dim` variables.
    pub fn unit(dim: usize) -> Self {
        Monomial { exps: vec![0; dim] }
    }

    /// `x_j` (1-indexed) in `dim` variables.
    pub fn var(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "variable x{j} out of range for dimension {dim}");
        let mut exps = vec![0; dim];
        exps[j - 1] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// 1-indexed exponent lookup.
    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j - 1]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent
    /// vector left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree with a distinct value for the zero polynomial, so that
/// `deg(p*q) = deg p + deg q` holds without special cases.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::MinusInfinity, Degree::MinusInfinity) => Ordering::Equal,
            (Degree::MinusInfinity, _) => Ordering::Less,
            (_, Degree::MinusInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial: a term map `Monomial -> GaussianRational` plus the
/// ambient dimension.
///
/// Invariants: no stored zero coefficients, every monomial has length
/// `dim`, and the zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    dim: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero(dim: usize) -> Self {
        Poly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: GaussianRational) -> Self {
        let mut p = Poly::zero(dim);
        p.add_term(Monomial::unit(dim), c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Poly::constant(dim, GaussianRational::one())
    }

    /// The variable `x_j`, 1-indexed.
    pub fn var(dim: usize, j: usize) -> Self {
        let mut p = Poly::zero(dim);
        p.add_term(Monomial::var(dim, j), GaussianRational::one());
        p
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Poly::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial length must equal the ambient dimension");
            p.add_term(m, c);
        }
        p
    }

    /// `X.X = x1^2 + ... + xN^2`, homogeneous of degree 2.
    pub fn x_dot_x(dim: usize) -> Self {
        assert!(dim >= 1);
        let mut p = Poly::zero(dim);
        for j in 1..=dim {
            let mut exps = vec![0; dim];
            exps[j - 1] = 2;
            p.add_term(Monomial::new(exps), GaussianRational::one());
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// The coefficient of the constant monomial, i.e. the value at 0.
    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&Monomial::unit(self.dim))
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::MinusInfinity,
            Some(m) => Degree::Finite(m.total_degree()),
        }
    }

    /// Largest exponent of `x_j` (1-indexed) over all terms; 0 for the
    /// zero polynomial.
    pub fn degree_in_var(&self, j: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(j)).max().unwrap_or(0)
    }

    pub fn scalar_mul(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.dim);
        }
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The degree-`d` part; zero for `d < 0`. Summing over all `d`
    /// recovers the polynomial.
    pub fn homogeneous_component(&self, d: i64) -> Poly {
        if d < 0 {
            return Poly::zero(self.dim);
        }
        let d = d as u32;
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Some(degree)` when all terms share one total degree. The zero
    /// polynomial is homogeneous of every degree and reports
    /// `Degree::MinusInfinity`.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(Degree::MinusInfinity),
            Some(m) => m.total_degree(),
        };
        if it.all(|m| m.total_degree() == first) {
            Some(Degree::Finite(first))
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Division with remainder by a divisor that is monic in `x_var`
    /// (1-indexed): `self = d*q + r` with `deg_var(r) < deg_var(d)`.
    /// Exact and unique. Rejects divisors that are not monic in the
    /// chosen variable.
    pub fn divmod_monic(&self, d: &Poly, var: usize) -> Result<(Poly, Poly), Error> {
        assert_eq!(self.dim, d.dim, "dimension mismatch in divmod_monic");
        assert!(var >= 1 && var <= self.dim, "variable x{var} out of range");
        let m = d.degree_in_var(var);
        // Monic in x_var: the coefficient of x_var^m, as a polynomial in
        // the remaining variables, must be the constant 1.
        let lead = d.coeff_of_var_power(var, m);
        if lead != Poly::one(self.dim) {
            return Err(Error::NonMonicDivisor { var });
        }
        let mut q = Poly::zero(self.dim);
        let mut r = self.clone();
        loop {
            let e = r.degree_in_var(var);
            if r.is_zero() || e < m {
                break;
            }
            // step = (coefficient of x_var^e in r) * x_var^(e-m)
            let mut step = r.coeff_of_var_power(var, e);
            step = &step * &Poly::var(self.dim, var).pow(e - m);
            q = &q + &step;
            r = &r - &(&step * d);
        }
        Ok((q, r))
    }

    /// The terms of `self` whose `x_var` exponent equals `e`, with that
    /// exponent removed. The result still lives in the full dimension.
    pub fn coeff_of_var_power(&self, var: usize, e: u32) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (m, c) in &self.terms {
            if m.exponent(var) == e {
                let mut exps = m.exponents().to_vec();
                exps[var - 1] = 0;
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        out
    }

    /// Evaluates `self` with `x_j` replaced by `images[j-1]`. All images
    /// must share one ambient dimension; the result lives there. The
    /// images are arbitrary polynomials, so this covers linear changes
    /// of variable as well as substitutions like `q(t.X)`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, Error> {
        if images.len() != self.dim {
            return Err(Error::ImageCountMismatch {
                expected: self.dim,
                got: images.len(),
            });
        }
        let out_dim = match images.first() {
            None => {
                // 0 variables: a constant stays a constant in dimension 0.
                return Ok(self.clone());
            }
            Some(p) => p.dim(),
        };
        if images.iter().any(|p| p.dim() != out_dim) {
            return Err(Error::ImageDimensionMismatch);
        }
        // Incremental powers per image, indexed by exponent.
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|_| vec![Poly::one(out_dim)]).collect();
        let mut out = Poly::zero(out_dim);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(out_dim, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                let cache = &mut powers[j];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[j];
                    cache.push(next);
                }
                if e > 0 {
                    term = &term * &cache[e as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `p(x1 + t1, ..., xN + tN)` in the `2N`-variable ring, with the
    /// shifts `t_j` mapped to indices `N+1 ..= 2N`.
    pub fn shift(&self) -> Poly {
        let n = self.dim;
        let images: Vec<Poly> = (1..=n)
            .map(|j| &Poly::var(2 * n, j) + &Poly::var(2 * n, n + j))
            .collect();
        self.substitute(&images).expect("image count matches dimension")
    }

    /// Reinterprets the polynomial in a smaller dimension. Fails if any
    /// term uses a variable above `new_dim`.
    pub fn restrict_dim(&self, new_dim: usize) -> Result<Poly, Error> {
        let mut out = Poly::zero(new_dim);
        for (m, c) in &self.terms {
            let exps = m.exponents();
            for (idx, &e) in exps.iter().enumerate().skip(new_dim) {
                if e > 0 {
                    return Err(Error::VariableOutOfRange {
                        index: idx + 1,
                        dim: new_dim,
                    });
                }
            }
            out.add_term(Monomial::new(exps[..new_dim].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// Embeds the polynomial into a larger dimension by appending
    /// zero exponents.
    pub fn extend_dim(&self, new_dim: usize) -> Poly {
        assert!(new_dim >= self.dim);
        let mut out = Poly::zero(new_dim);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps.resize(new_dim, 0);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Exact division by `x_j`; `None` if some term lacks `x_j`.
    pub fn divide_by_var(&self, j: usize) -> Option<Poly> {
        let mut out = Poly::zero(self.dim);
        for (m, c) in &self.terms {
            if m.exponent(j) == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[j - 1] -= 1;
            out.add_term(Monomial::new(exps), c.clone());
        }
        Some(out)
    }

    /// Evaluates at a scalar point.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.dim, "point length must equal the dimension");
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (j, &e) in m.exponents().iter().enumerate() {
                term = &term * &point[j].pow(e);
            }
            acc = &acc + &term;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in +");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in -");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in *");
        let mut out = Poly::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.dim, self)
    }
}

/// All degree-`d` monomials in `dim` variables, ascending graded-lex.
pub fn monomials_of_degree(dim: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; dim];
    fill_monomials(dim, d, 0, &mut current, &mut out);
    out.sort();
    out
}

fn fill_monomials(dim: usize, remaining: u32, idx: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if idx == dim - 1 {
        current[idx] = remaining;
        out.push(Monomial::new(current.clone()));
        current[idx] = 0;
        return;
    }
    for e in 0..=remaining {
        current[idx] = e;
        fill_monomials(dim, remaining - e, idx + 1, current, out);
    }
    current[idx] = 0;
}
