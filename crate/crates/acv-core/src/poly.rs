//! Univariate polynomials over the rationals, plus the matrix-polynomial
//! kernels built on them: characteristic and minimal polynomials,
//! semisimplicity, and rational eigensystems.
//!
//! Eigenvalues are found by rational-root extraction on the integer-cleared
//! characteristic polynomial (divisors of the constant and leading
//! coefficients). Inputs in this crate are constructed to have rational
//! spectra; anything else raises [`Error::NonSplitSpectrum`] instead of
//! degrading to approximate arithmetic.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{denominator_lcm, rat, Rational};

/// Coefficients are stored lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPolynomial {
    coeffs: Vec<Rational>,
}

impl UniPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPolynomial { coeffs: vec![Rational::one()] }
    }

    pub fn constant(c: Rational) -> Self {
        UniPolynomial::new(vec![c])
    }

    /// `c * t^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPolynomial::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPolynomial::new(coeffs.iter().copied().map(rat).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPolynomial::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolynomial::new(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        UniPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPolynomial::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let ddeg = divisor.degree().unwrap();
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let k = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &factor * c;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        (UniPolynomial::new(quot), UniPolynomial::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPolynomial::zero();
        }
        UniPolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat(k as i64 + 1))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Matrix substitution by Horner's scheme.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        assert!(m.is_square(), "matrix substitution needs a square matrix");
        let n = m.rows();
        let mut acc = ExactMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }
}

impl std::fmt::Debug for UniPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if !(mag.is_one() && k > 0) {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Monic characteristic polynomial, computed by the Faddeev–LeVerrier
/// trace recursion. Exact over Q.
pub fn char_poly(m: &ExactMatrix) -> Result<UniPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = ExactMatrix::zero(n, n);
    for k in 1..=n {
        // aux_k = m * aux_{k-1} + c_{n-k+1} * I ; c_{n-k} = -tr(m * aux_k)/k
        aux = m.mul(&aux);
        let shift = coeffs[n - k + 1].clone();
        for i in 0..n {
            let v = aux.get(i, i) + &shift;
            aux.set(i, i, v);
        }
        coeffs[n - k] = -m.trace_product(&aux) / rat(k as i64);
    }
    Ok(UniPolynomial::new(coeffs))
}

/// Monic minimal polynomial: the first linear dependency among
/// `I, m, m^2, ...` (flattened), found with the exact solver.
pub fn minimal_poly(m: &ExactMatrix) -> Result<UniPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(UniPolynomial::one());
    }
    let mut powers: Vec<Vec<Rational>> = vec![ExactMatrix::identity(n).entries().to_vec()];
    let mut current = ExactMatrix::identity(n);
    for _ in 1..=n {
        current = current.mul(m);
        let target = current.entries().to_vec();
        let basis = ExactMatrix::from_columns(&powers);
        if let Some((combo, _)) = basis.solve_affine(&target) {
            // m^k = sum combo_j m^j, so the minimal polynomial is
            // t^k - sum combo_j t^j.
            let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
            coeffs.push(Rational::one());
            return Ok(UniPolynomial::new(coeffs));
        }
        powers.push(target);
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// True iff the minimal polynomial is squarefree
/// (`gcd(min_poly, min_poly')` constant).
pub fn is_semisimple(m: &ExactMatrix) -> Result<bool> {
    let p = minimal_poly(m)?;
    let g = p.gcd(&p.derivative());
    Ok(g.degree() == Some(0))
}

/// All positive divisors of `value`, from its trial-division factorization.
fn positive_divisors(value: &BigInt) -> Vec<BigInt> {
    let mut remaining = value.abs();
    assert!(!remaining.is_zero(), "divisors of zero are not enumerable");
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let two = BigInt::from(2);
    let mut p = two.clone();
    while &p * &p <= remaining {
        if (&remaining % &p).is_zero() {
            let mut e = 0u32;
            while (&remaining % &p).is_zero() {
                remaining /= &p;
                e += 1;
            }
            factors.push((p.clone(), e));
        }
        p += if p == two { BigInt::one() } else { two.clone() };
    }
    if remaining > BigInt::one() {
        factors.push((remaining, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (prime, exp) in factors {
        let mut extended = Vec::with_capacity(divisors.len() * (exp as usize + 1));
        for d in &divisors {
            let mut q = d.clone();
            extended.push(q.clone());
            for _ in 0..exp {
                q *= &prime;
                extended.push(q.clone());
            }
        }
        divisors = extended;
    }
    divisors.sort();
    divisors.dedup();
    divisors
}

/// Rational roots with multiplicities, by candidate enumeration over
/// divisors of the integer-cleared constant and leading coefficients,
/// with exact deflation. Also returns the degree of the (rational-root
/// free) factor that remains.
pub fn rational_roots(p: &UniPolynomial) -> (Vec<(Rational, usize)>, usize) {
    if p.degree().unwrap_or(0) == 0 {
        return (Vec::new(), 0);
    }
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut current = p.clone();

    // Zero roots: multiplicity is the index of the first nonzero coefficient.
    let zero_mult = current.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
        current = UniPolynomial::new(current.coeffs()[zero_mult..].to_vec());
    }

    if current.degree().unwrap_or(0) > 0 {
        // Clear to integers: a root p/q in lowest terms needs
        // p | constant and q | leading.
        let lcm = denominator_lcm(current.coeffs());
        let int_coeffs: Vec<BigInt> = current
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let constant = int_coeffs.first().unwrap().clone();
        let leading = int_coeffs.last().unwrap().clone();
        let mut candidates: Vec<Rational> = Vec::new();
        for num in positive_divisors(&constant) {
            for den in positive_divisors(&leading) {
                let c = Rational::new(num.clone(), den);
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
        candidates.sort();
        candidates.dedup();
        for cand in candidates {
            let mut mult = 0usize;
            while current.degree().unwrap_or(0) > 0 && current.eval(&cand).is_zero() {
                let linear = UniPolynomial::new(vec![-cand.clone(), Rational::one()]);
                let (q, r) = current.div_rem(&linear);
                debug_assert!(r.is_zero());
                current = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
    }

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, current.degree().unwrap_or(0))
}

/// One entry per distinct rational eigenvalue, sorted ascending.
#[derive(Debug)]
pub struct Eigensystem {
    pub eigenpairs: Vec<(Rational, Vec<Vec<Rational>>)>,
}

impl Eigensystem {
    pub fn geometric_multiplicity_sum(&self) -> usize {
        self.eigenpairs.iter().map(|(_, basis)| basis.len()).sum()
    }

    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.eigenpairs.iter().map(|(v, _)| v.clone()).collect()
    }
}

/// Rational eigensystem: eigenvalues from the characteristic polynomial,
/// eigenspaces as exact kernels of `m - lambda`. Errors with
/// [`Error::NonSplitSpectrum`] when a nonconstant factor without rational
/// roots remains.
pub fn rational_eigensystem(m: &ExactMatrix) -> Result<Eigensystem> {
    let p = char_poly(m)?;
    let (roots, remaining) = rational_roots(&p);
    if remaining > 0 {
        return Err(Error::NonSplitSpectrum { remaining_degree: remaining });
    }
    let n = m.rows();
    let mut eigenpairs = Vec::with_capacity(roots.len());
    for (lambda, _alg_mult) in roots {
        let mut shifted = m.clone();
        for i in 0..n {
            let v = shifted.get(i, i) - &lambda;
            shifted.set(i, i, v);
        }
        let basis = shifted.nullspace();
        debug_assert!(!basis.is_empty());
        eigenpairs.push((lambda, basis));
    }
    Ok(Eigensystem { eigenpairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_is_zero;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    #[test]
    fn char_poly_examples() {
        // (t - 1)(t - 2) expanded with the polynomial product as oracle
        let expected = UniPolynomial::from_i64(&[-1, 1]).mul(&UniPolynomial::from_i64(&[-2, 1]));
        assert_eq!(expected, UniPolynomial::from_i64(&[2, -3, 1]));
        let m = ExactMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(char_poly(&m).unwrap(), expected);

        let nilp = ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(char_poly(&nilp).unwrap(), UniPolynomial::from_i64(&[0, 0, 1]));

        // diag(3, -3): (t - 3)(t + 3) = t^2 - 9
        let m = ExactMatrix::from_i64(&[&[3, 0], &[0, -3]]);
        assert_eq!(char_poly(&m).unwrap(), UniPolynomial::from_i64(&[-9, 0, 1]));

        assert_eq!(
            char_poly(&ExactMatrix::zero(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn minimal_poly_examples() {
        let id = ExactMatrix::identity(3);
        assert_eq!(minimal_poly(&id).unwrap(), UniPolynomial::from_i64(&[-1, 1]));

        // diag(1,1,2): (t-1)(t-2) built by the polynomial product
        let m = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let expected = UniPolynomial::from_i64(&[-1, 1]).mul(&UniPolynomial::from_i64(&[-2, 1]));
        assert_eq!(minimal_poly(&m).unwrap(), expected);

        let nilp = ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_poly(&nilp).unwrap(), UniPolynomial::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn semisimple_examples() {
        assert!(is_semisimple(&ExactMatrix::from_i64(&[&[5, 0], &[0, 5]])).unwrap());
        assert!(!is_semisimple(&ExactMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap());
        // companion matrix of t^2 + 1: squarefree over Q, hence semisimple
        let companion = ExactMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(is_semisimple(&companion).unwrap());
    }

    #[test]
    fn eigensystem_examples() {
        let m = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let es = rational_eigensystem(&m).unwrap();
        assert_eq!(es.eigenvalues(), vec![rat(1), rat(2)]);
        assert_eq!(es.eigenpairs[0].1.len(), 1);
        assert_eq!(es.eigenpairs[1].1.len(), 2);
        assert_eq!(es.geometric_multiplicity_sum(), 3);

        let rotation = ExactMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(
            rational_eigensystem(&rotation).unwrap_err(),
            // t^2 + 1 has no rational root
            Error::NonSplitSpectrum { remaining_degree: 2 }
        );

        let zero = ExactMatrix::zero(4, 4);
        let es = rational_eigensystem(&zero).unwrap();
        assert_eq!(es.eigenvalues(), vec![rat(0)]);
        assert_eq!(es.eigenpairs[0].1.len(), 4);
    }

    #[test]
    fn eigensystem_vectors_satisfy_definition() {
        let m = ExactMatrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 7]]);
        let es = rational_eigensystem(&m).unwrap();
        for (lambda, basis) in &es.eigenpairs {
            for v in basis {
                let mv = m.mul_vec(v);
                let lv: Vec<Rational> = v.iter().map(|c| c * lambda).collect();
                assert_eq!(mv, lv);
                assert!(!vec_is_zero(v));
            }
        }
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2t - 1)(t + 3) = 2t^2 + 5t - 3
        let p = UniPolynomial::from_i64(&[-3, 5, 2]);
        let (roots, remaining) = rational_roots(&p);
        assert_eq!(roots, vec![(rat(-3), 1), (ratio(1, 2), 1)]);
        assert_eq!(remaining, 0);

        // t^2 (t^2 + 1): zero root of multiplicity 2, quadratic remains
        let p = UniPolynomial::from_i64(&[0, 0, 1, 0, 1]);
        let (roots, remaining) = rational_roots(&p);
        assert_eq!(roots, vec![(rat(0), 2)]);
        assert_eq!(remaining, 2);
    }

    #[test]
    fn division_and_gcd() {
        let a = UniPolynomial::from_i64(&[2, -3, 1]); // (t-1)(t-2)
        let b = UniPolynomial::from_i64(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UniPolynomial::from_i64(&[-2, 1]));
        assert!(b.divides(&a));
        assert_eq!(a.gcd(&b), b.monic());
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(UniPolynomial::from_i64(&[2, -3, 1]).to_string(), "t^2 - 3t + 2");
        assert_eq!(UniPolynomial::from_i64(&[-9, 0, 1]).to_string(), "t^2 - 9");
        assert_eq!(UniPolynomial::zero().to_string(), "0");
    }

    fn small_square() -> impl Strategy<Value = ExactMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(-6i64..=6, n * n).prop_map(move |cells| {
                ExactMatrix::from_entries(n, n, cells.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    proptest! {
        // Cayley-Hamilton: the characteristic polynomial annihilates its matrix.
        #[test]
        fn cayley_hamilton(m in small_square()) {
            let p = char_poly(&m).unwrap();
            prop_assert!(p.eval_matrix(&m).is_zero());
        }

        #[test]
        fn minimal_divides_characteristic(m in small_square()) {
            let mp = minimal_poly(&m).unwrap();
            let cp = char_poly(&m).unwrap();
            prop_assert!(mp.divides(&cp));
            prop_assert!(mp.eval_matrix(&m).is_zero());
            prop_assert!(mp.is_monic());
        }
    }
}
