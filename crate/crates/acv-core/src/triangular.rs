//! Simultaneous triangularization into a Borel subalgebra, and the
//! closed-orbit classification it supports.
//!
//! A pair with commutator of rank at most one has a common eigenvector;
//! cutting down to the skew-orthogonal complement of that vector modulo the
//! vector itself drops the rank condition to the smaller space, so the
//! construction recurses: common eigenvector, reduce, repeat. The
//! accumulated eigenvectors form a lagrangian flag, completing to an exact
//! symplectic basis whose inverse conjugates both operators into the
//! standard Borel (block `[[A, B], [0, -A^T]]`, `A` upper triangular).
//! Every certificate carries the change of basis and re-verifies from
//! scratch.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, ExactMatrix};
use crate::poly::{is_semisimple, rational_eigensystem};
use crate::scalar::Rational;
use crate::scheme::AcvPoint;
use crate::symplectic::{is_symplectic, PhaseVector, SpElement, SymplecticSpace};

/// An ordered list `v_1..v_k` of pairwise skew-orthogonal, incrementally
/// independent vectors; with `k = n` the span is lagrangian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicFlag {
    space: SymplecticSpace,
    vectors: Vec<Vec<Rational>>,
}

impl IsotropicFlag {
    pub fn new(space: SymplecticSpace, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        for v in &vectors {
            if v.len() != space.dim() {
                return Err(Error::DimensionMismatch { expected: space.dim(), got: v.len() });
            }
        }
        let rank = ExactMatrix::from_columns(&vectors).rank();
        if rank != vectors.len() {
            return Err(Error::Schema("flag vectors are linearly dependent".into()));
        }
        for a in 0..vectors.len() {
            for b in 0..vectors.len() {
                if !space.omega(&vectors[a], &vectors[b]).is_zero() {
                    return Err(Error::Schema("flag vectors are not skew-orthogonal".into()));
                }
            }
        }
        Ok(IsotropicFlag { space, vectors })
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }
}

/// A verified conjugation of a pair into the standard Borel: `g` is
/// symplectic, `x_conj = g x g^-1`, `y_conj = g y g^-1`, and both conjugates
/// are upper triangular in the Borel sense.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorelCertificate {
    pub g: ExactMatrix,
    pub x_conj: SpElement,
    pub y_conj: SpElement,
    pub flag: IsotropicFlag,
}

impl BorelCertificate {
    /// Re-check every invariant from scratch against the original pair.
    /// Trusts nothing stored in the certificate.
    pub fn verify(&self, x: &SpElement, y: &SpElement) -> Result<()> {
        let space = x.space();
        if !is_symplectic(&space, &self.g) {
            return Err(Error::Schema("certificate matrix is not symplectic".into()));
        }
        let g_inv = symplectic_inverse(&space, &self.g);
        if self.x_conj != x.conjugate(&self.g, &g_inv)? {
            return Err(Error::Schema("x_conj does not equal g x g^-1".into()));
        }
        if self.y_conj != y.conjugate(&self.g, &g_inv)? {
            return Err(Error::Schema("y_conj does not equal g y g^-1".into()));
        }
        if !is_in_standard_borel(&self.x_conj) || !is_in_standard_borel(&self.y_conj) {
            return Err(Error::Schema("conjugates are not in the standard Borel".into()));
        }
        // flag vectors are the leading columns of g^-1 and must be isotropic
        IsotropicFlag::new(space, self.flag.vectors.clone())?;
        for (k, v) in self.flag.vectors.iter().enumerate() {
            if &g_inv.column(k) != v {
                return Err(Error::Schema("flag does not match the change of basis".into()));
            }
        }
        Ok(())
    }
}

/// Inverse of a symplectic matrix, computed exactly as `-J g^T J`.
pub fn symplectic_inverse(space: &SymplecticSpace, g: &ExactMatrix) -> ExactMatrix {
    let j = space.form_matrix();
    j.mul(&g.transpose()).mul(&j).neg()
}

/// Is the element in the stabilizer of the standard isotropic flag
/// `<e_1> ⊂ ... ⊂ <e_1..e_n>`: block form `[[A, B], [0, -A^T]]` with `A`
/// upper triangular. This space has dimension `n^2 + n`.
pub fn is_in_standard_borel(x: &SpElement) -> bool {
    let n = x.space().n();
    let m = x.matrix();
    for i in 0..n {
        for j in 0..n {
            if i > j && !m.get(i, j).is_zero() {
                return false;
            }
            if !m.get(n + i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A common eigenvector of two square matrices whose commutator has rank
/// at most one and whose spectra split over Q.
///
/// Searches kernel intersections over eigenvalue pairs in lexicographic
/// order and returns the first kernel basis vector found, so the output is
/// deterministic. The existence for rank-at-most-one commutators is a
/// theorem taken as input; exhausting all pairs without a hit reports
/// [`Error::CommonEigenvectorMissing`] loudly.
pub fn common_eigenvector(x: &ExactMatrix, y: &ExactMatrix) -> Result<Vec<Rational>> {
    if !x.is_square() {
        return Err(Error::NotSquare { rows: x.rows(), cols: x.cols() });
    }
    if x.rows() != y.rows() || !y.is_square() {
        return Err(Error::DimensionMismatch { expected: x.rows(), got: y.rows() });
    }
    let commutator_rank = x.mul(y).sub(&y.mul(x)).rank();
    if commutator_rank > 1 {
        return Err(Error::RankTooHigh { rank: commutator_rank });
    }
    let ex = rational_eigensystem(x)?;
    let ey = rational_eigensystem(y)?;
    let mut pairs: Vec<(Rational, Rational)> = Vec::new();
    for lx in ex.eigenvalues() {
        for ly in ey.eigenvalues() {
            pairs.push((lx.clone(), ly));
        }
    }
    pairs.sort();
    let dim = x.rows();
    for (lx, ly) in pairs {
        let mut xs = x.clone();
        let mut ys = y.clone();
        for k in 0..dim {
            let a = xs.get(k, k) - &lx;
            xs.set(k, k, a);
            let b = ys.get(k, k) - &ly;
            ys.set(k, k, b);
        }
        let stacked = xs.vstack(&ys);
        let kernel = stacked.nullspace();
        if let Some(v) = kernel.into_iter().next() {
            return Ok(v);
        }
    }
    Err(Error::CommonEigenvectorMissing)
}

/// The data needed to lift a reduced pair back to the ambient space: the
/// common eigenvector, its symplectic partner, and the Darboux basis of
/// their joint skew-complement (as ambient columns).
#[derive(Clone, Debug)]
pub struct SkewEmbedding {
    pub eigenvector: Vec<Rational>,
    pub partner: Vec<Rational>,
    pub darboux: ExactMatrix,
}

/// Result of one reduction step.
#[derive(Clone, Debug)]
pub struct SkewReduction {
    pub x1: SpElement,
    pub y1: SpElement,
    pub embedding: SkewEmbedding,
}

fn eigenvalue_of(m: &ExactMatrix, v: &[Rational]) -> Option<Rational> {
    let image = m.mul_vec(v);
    let pivot = v.iter().position(|c| !c.is_zero())?;
    let lambda = &image[pivot] / &v[pivot];
    let expected: Vec<Rational> = v.iter().map(|c| c * &lambda).collect();
    (image == expected).then_some(lambda)
}

/// Cut both operators down to `v^perp / <v>` with the induced symplectic
/// structure in standard shape (dimension `2n - 2`).
///
/// The complement is realized concretely as `v^perp ∩ w^perp` for a
/// partner `w` with `omega(v, w) = 1`; a symplectic Gram-Schmidt with
/// deterministic pivot order puts the induced form into standard shape.
/// The commutator rank never grows under the reduction (asserted).
pub fn skew_reduce(x: &SpElement, y: &SpElement, v: &[Rational]) -> Result<SkewReduction> {
    let space = x.space();
    if y.space() != space {
        return Err(Error::SpaceMismatch { left: space.n(), right: y.space().n() });
    }
    if v.len() != space.dim() || vec_is_zero(v) {
        return Err(Error::NotCommonEigenvector);
    }
    if eigenvalue_of(x.matrix(), v).is_none() || eigenvalue_of(y.matrix(), v).is_none() {
        return Err(Error::NotCommonEigenvector);
    }
    let n = space.n();
    let dim = space.dim();

    // partner with omega(v, w) = 1: first standard basis vector that pairs
    // with v, rescaled
    let mut partner = None;
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = num::traits::One::one();
        let pairing = space.omega(v, &e);
        if !pairing.is_zero() {
            partner = Some(e.iter().map(|c| c / &pairing).collect::<Vec<_>>());
            break;
        }
    }
    let w = partner.expect("the form is nondegenerate");

    // v^perp ∩ w^perp: kernel of the two pairing rows
    let j = space.form_matrix();
    let row_v = j.transpose().mul_vec(v);
    let row_w = j.transpose().mul_vec(&w);
    let complement = ExactMatrix::from_rows(vec![row_v, row_w]).nullspace();
    debug_assert_eq!(complement.len(), dim - 2);

    // symplectic Gram-Schmidt: peel off Darboux pairs in list order
    let mut pool = complement;
    let mut a_side = Vec::with_capacity(n - 1);
    let mut b_side = Vec::with_capacity(n - 1);
    while !pool.is_empty() {
        let u1 = pool.remove(0);
        let partner_idx = pool
            .iter()
            .position(|u| !space.omega(&u1, u).is_zero())
            .expect("restricted form is nondegenerate");
        let u2_raw = pool.remove(partner_idx);
        let scale = space.omega(&u1, &u2_raw);
        let u2: Vec<Rational> = u2_raw.iter().map(|c| c / &scale).collect();
        pool = pool
            .into_iter()
            .map(|u| {
                let c1 = space.omega(&u1, &u);
                let c2 = space.omega(&u2, &u);
                // u - c1 u2 + c2 u1 is skew-orthogonal to the pair
                u.iter()
                    .zip(&u2)
                    .zip(&u1)
                    .map(|((uu, a2), a1)| uu - &c1 * a2 + &c2 * a1)
                    .collect()
            })
            .collect();
        a_side.push(u1);
        b_side.push(u2);
    }
    let darboux_cols: Vec<Vec<Rational>> =
        a_side.iter().chain(b_side.iter()).cloned().collect();
    let darboux = ExactMatrix::from_columns(&darboux_cols);

    // induced operators in the Darboux coordinates, via projection along v
    let reduced_space = SymplecticSpace::new(n - 1);
    let reduce_operator = |op: &SpElement| -> Result<SpElement> {
        let m = 2 * (n - 1);
        let mut cols = Vec::with_capacity(m);
        for c in 0..m {
            let zu = op.matrix().mul_vec(&darboux.column(c));
            // kill the <v> component: z' = zu + omega(w, zu) v
            let cw = space.omega(&w, &zu);
            let projected: Vec<Rational> =
                zu.iter().zip(v).map(|(z, vk)| z + &cw * vk).collect();
            // coordinates in the Darboux basis come from the pairing
            let mut col = Vec::with_capacity(m);
            for b in &b_side {
                col.push(space.omega(&projected, b));
            }
            let a_coords: Vec<Rational> =
                a_side.iter().map(|a| space.omega(a, &projected)).collect();
            let b_coords = col.split_off(n - 1);
            debug_assert!(b_coords.is_empty());
            let mut full = col;
            full.extend(a_coords);
            cols.push(full);
        }
        // membership in the reduced algebra is part of the contract
        SpElement::new(reduced_space, ExactMatrix::from_columns(&cols))
    };
    let x1 = reduce_operator(x)?;
    let y1 = reduce_operator(y)?;

    // rank can only drop along the reduction
    let before = x.bracket(y)?.matrix().rank();
    let after = x1.bracket(&y1)?.matrix().rank();
    assert!(after <= before, "commutator rank grew under skew reduction");

    Ok(SkewReduction {
        x1,
        y1,
        embedding: SkewEmbedding { eigenvector: v.to_vec(), partner: w, darboux },
    })
}

/// Conjugate a pair with rank-at-most-one commutator and split spectra into
/// the standard Borel, returning a re-verifiable certificate.
pub fn symplectic_triangularize(x: &SpElement, y: &SpElement) -> Result<BorelCertificate> {
    let space = x.space();
    if y.space() != space {
        return Err(Error::SpaceMismatch { left: space.n(), right: y.space().n() });
    }
    let commutator_rank = x.bracket(y)?.matrix().rank();
    if commutator_rank > 1 {
        return Err(Error::RankTooHigh { rank: commutator_rank });
    }
    let (alphas, betas) = adapted_darboux_basis(x, y)?;
    let cols: Vec<Vec<Rational>> = alphas.iter().chain(betas.iter()).cloned().collect();
    let basis_matrix = ExactMatrix::from_columns(&cols);
    assert!(
        is_symplectic(&space, &basis_matrix),
        "accumulated basis must be symplectic by construction"
    );
    let g = symplectic_inverse(&space, &basis_matrix);
    debug_assert_eq!(g.mul(&basis_matrix), ExactMatrix::identity(space.dim()));
    let x_conj = x.conjugate(&g, &basis_matrix)?;
    let y_conj = y.conjugate(&g, &basis_matrix)?;
    let flag = IsotropicFlag::new(space, alphas)?;
    let certificate = BorelCertificate { g, x_conj, y_conj, flag };
    certificate.verify(x, y)?;
    Ok(certificate)
}

/// The recursion: a Darboux basis `(alpha_1..alpha_n, beta_1..beta_n)` such
/// that each partial span `<alpha_1..alpha_k>` is stable under both
/// operators.
fn adapted_darboux_basis(
    x: &SpElement,
    y: &SpElement,
) -> Result<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
    let space = x.space();
    if space.n() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let v = common_eigenvector(x.matrix(), y.matrix())?;
    let reduction = skew_reduce(x, y, &v)?;
    let (sub_alphas, sub_betas) = adapted_darboux_basis(&reduction.x1, &reduction.y1)?;
    let lift = |u: &Vec<Rational>| reduction.embedding.darboux.mul_vec(u);
    let mut alphas = vec![reduction.embedding.eigenvector.clone()];
    alphas.extend(sub_alphas.iter().map(lift));
    let mut betas = vec![reduction.embedding.partner.clone()];
    betas.extend(sub_betas.iter().map(lift));
    Ok((alphas, betas))
}

/// Why a member point fails to have a closed orbit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NotClosedReason {
    PhaseNonzero,
    NonCommuting,
    XNotSemisimple,
    YNotSemisimple,
}

impl std::fmt::Display for NotClosedReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            NotClosedReason::PhaseNonzero => "i != 0",
            NotClosedReason::NonCommuting => "[x,y] != 0",
            NotClosedReason::XNotSemisimple => "x not semisimple",
            NotClosedReason::YNotSemisimple => "y not semisimple",
        };
        write!(f, "{text}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrbitClass {
    Closed,
    NotClosed(Vec<NotClosedReason>),
}

impl OrbitClass {
    pub fn is_closed(&self) -> bool {
        matches!(self, OrbitClass::Closed)
    }
}

/// Classify the orbit of a member point: closed exactly when `i = 0`,
/// `[x, y] = 0`, and both components are semisimple. The converse holds
/// too, so `Closed` is a definitive verdict, not just a necessary
/// condition.
pub fn classify_closed_orbit(pt: &AcvPoint) -> Result<OrbitClass> {
    if !pt.is_member() {
        return Err(Error::NotOnVariety);
    }
    let mut reasons = Vec::new();
    if !pt.phase().is_zero() {
        reasons.push(NotClosedReason::PhaseNonzero);
    }
    if !pt.x().bracket(pt.y())?.is_zero() {
        reasons.push(NotClosedReason::NonCommuting);
    }
    if !is_semisimple(pt.x().matrix())? {
        reasons.push(NotClosedReason::XNotSemisimple);
    }
    if !is_semisimple(pt.y().matrix())? {
        reasons.push(NotClosedReason::YNotSemisimple);
    }
    if reasons.is_empty() {
        Ok(OrbitClass::Closed)
    } else {
        Ok(OrbitClass::NotClosed(reasons))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::char_poly;
    use crate::scalar::rat;
    use crate::scheme::{sample_regular_point, witness_point, Axis, SignVector};
    use crate::symplectic::{random_symplectic, CartanPoint};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lowering_n1() -> SpElement {
        SpElement::new(
            SymplecticSpace::new(1),
            ExactMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn common_eigenvector_diagonal_pair() {
        let x = ExactMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -2]]);
        let y = ExactMatrix::from_i64(&[&[3, 0, 0, 0], &[0, 5, 0, 0], &[0, 0, -3, 0], &[0, 0, 0, -5]]);
        // e_1 qualifies; the deterministic answer is some common eigenvector
        let e1 = vec![rat(1), rat(0), rat(0), rat(0)];
        assert!(eigenvalue_of(&x, &e1).is_some() && eigenvalue_of(&y, &e1).is_some());
        let v = common_eigenvector(&x, &y).unwrap();
        assert!(eigenvalue_of(&x, &v).is_some());
        assert!(eigenvalue_of(&y, &v).is_some());
        // determinism
        assert_eq!(v, common_eigenvector(&x, &y).unwrap());
    }

    #[test]
    fn common_eigenvector_rank_one_pair() {
        // x = diag(1,-1) and the lowering element: [x,y] has rank 1 and the
        // kernel intersection over the smallest eigenvalue pair is e_2
        let x = CartanPoint::from_i64(&[1]).embed();
        let y = lowering_n1();
        let commutator = x.bracket(&y).unwrap();
        assert_eq!(commutator.matrix().rank(), 1);
        let v = common_eigenvector(x.matrix(), y.matrix()).unwrap();
        assert_eq!(v, vec![rat(0), rat(1)]);
    }

    #[test]
    fn common_eigenvector_gates() {
        // rank-2 commutator is refused
        let x = ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let y = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            common_eigenvector(&x, &y).unwrap_err(),
            Error::RankTooHigh { rank: 2 }
        );
        // irrational spectra are refused
        let rot = ExactMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let id = ExactMatrix::identity(2);
        assert!(matches!(
            common_eigenvector(&rot, &id),
            Err(Error::NonSplitSpectrum { .. })
        ));
    }

    #[test]
    fn skew_reduce_cartan_pair() {
        // reducing a Cartan pair along e_1 leaves the Cartan of the
        // remaining coordinates
        let t = CartanPoint::from_i64(&[7, 2, 5]);
        let x = t.embed();
        let mut e1 = vec![rat(0); 6];
        e1[0] = rat(1);
        let red = skew_reduce(&x, &x, &e1).unwrap();
        let expected = CartanPoint::from_i64(&[2, 5]).embed();
        assert_eq!(red.x1, expected);
        assert_eq!(red.y1, expected);
    }

    #[test]
    fn skew_reduce_terminal_case() {
        let x = CartanPoint::from_i64(&[3]).embed();
        let mut e1 = vec![rat(0); 2];
        e1[0] = rat(1);
        let red = skew_reduce(&x, &x, &e1).unwrap();
        assert_eq!(red.x1.space().n(), 0);
        assert_eq!(red.x1.matrix().rows(), 0);
    }

    #[test]
    fn skew_reduce_rejects_non_eigenvectors() {
        let x = CartanPoint::from_i64(&[1, 2]).embed();
        let y = CartanPoint::from_i64(&[3, 4]).embed();
        let not_eigen = vec![rat(1), rat(1), rat(0), rat(0)];
        assert_eq!(
            skew_reduce(&x, &y, &not_eigen).unwrap_err(),
            Error::NotCommonEigenvector
        );
    }

    fn assert_valid_certificate(x: &SpElement, y: &SpElement, cert: &BorelCertificate) {
        cert.verify(x, y).unwrap();
        let space = x.space();
        // round trip: undoing the conjugation recovers the inputs exactly
        let g_inv = symplectic_inverse(&space, &cert.g);
        assert_eq!(&cert.x_conj.conjugate(&g_inv, &cert.g).unwrap(), x);
        assert_eq!(&cert.y_conj.conjugate(&g_inv, &cert.g).unwrap(), y);
        // conjugation preserves characteristic polynomials
        assert_eq!(
            char_poly(cert.x_conj.matrix()).unwrap(),
            char_poly(x.matrix()).unwrap()
        );
        assert_eq!(
            char_poly(cert.y_conj.matrix()).unwrap(),
            char_poly(y.matrix()).unwrap()
        );
    }

    #[test]
    fn triangularize_commuting_cartans() {
        let x = CartanPoint::from_i64(&[1, 2]).embed();
        let y = CartanPoint::from_i64(&[3, 5]).embed();
        let cert = symplectic_triangularize(&x, &y).unwrap();
        assert_valid_certificate(&x, &y, &cert);
    }

    #[test]
    fn triangularize_sampled_pair() {
        let t = CartanPoint::from_i64(&[1, 2]);
        let pt = sample_regular_point(
            &t,
            &SignVector::all_p(2),
            &[rat(1), rat(2)],
            &CartanPoint::from_i64(&[3, -1]),
        )
        .unwrap();
        assert_eq!(pt.x().bracket(pt.y()).unwrap().matrix().rank(), 1);
        let cert = symplectic_triangularize(pt.x(), pt.y()).unwrap();
        assert_valid_certificate(pt.x(), pt.y(), &cert);
    }

    #[test]
    fn triangularize_conjugated_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for n in 1..=3usize {
            let t = CartanPoint::from_i64(&(1..=n as i64).collect::<Vec<_>>());
            let pt = witness_point(&t).unwrap();
            let g = random_symplectic(pt.space(), &mut rng);
            let gi = g.inverse().unwrap();
            let moved = pt.transform(&g, &gi).unwrap();
            let cert = symplectic_triangularize(moved.x(), moved.y()).unwrap();
            assert_valid_certificate(moved.x(), moved.y(), &cert);
        }
    }

    #[test]
    fn triangularize_rejects_rank_two() {
        let space = SymplecticSpace::new(2);
        // opposite root vectors in one plane: their bracket is a nonzero
        // coroot, visible in two diagonal slots
        let b = SpElement::from_coords(space, &{
            let mut c = vec![rat(0); 10];
            c[4] = rat(1); // B-unit (0,0)
            c
        })
        .unwrap();
        let c = SpElement::from_coords(space, &{
            let mut v = vec![rat(0); 10];
            v[7] = rat(1); // C-unit (0,0)
            v
        })
        .unwrap();
        let rank = b.bracket(&c).unwrap().matrix().rank();
        assert_eq!(rank, 2);
        assert_eq!(
            symplectic_triangularize(&b, &c).unwrap_err(),
            Error::RankTooHigh { rank: 2 }
        );
    }

    #[test]
    fn borel_membership_examples() {
        assert!(is_in_standard_borel(&CartanPoint::from_i64(&[1, 2]).embed()));
        assert!(!is_in_standard_borel(&lowering_n1()));

        // i with all q_k = 0 squares to a pure B-block
        let space = SymplecticSpace::new(2);
        let i = PhaseVector::from_i64(space, &[1, 3], &[0, 0]);
        assert!(is_in_standard_borel(&i.symmetric_square()));
        let with_q = PhaseVector::from_i64(space, &[1, 0], &[0, 2]);
        assert!(!is_in_standard_borel(&with_q.symmetric_square()));
    }

    #[test]
    fn borel_dimension_by_basis_count() {
        for n in 1..=3usize {
            let space = SymplecticSpace::new(n);
            let count = space.basis().iter().filter(|b| is_in_standard_borel(b)).count();
            assert_eq!(count, n * n + n);
        }
    }

    #[test]
    fn classify_examples() {
        let space = SymplecticSpace::new(2);
        // commuting semisimple with i = 0: closed
        let pt = AcvPoint::new(
            CartanPoint::from_i64(&[1, 2]).embed(),
            CartanPoint::from_i64(&[3, 5]).embed(),
            PhaseVector::zero(space),
        )
        .unwrap();
        assert_eq!(classify_closed_orbit(&pt).unwrap(), OrbitClass::Closed);

        // witness points carry nonzero i
        let w = witness_point(&CartanPoint::from_i64(&[1, 2])).unwrap();
        match classify_closed_orbit(&w).unwrap() {
            OrbitClass::NotClosed(reasons) => {
                assert!(reasons.contains(&NotClosedReason::PhaseNonzero));
                assert!(reasons.contains(&NotClosedReason::NonCommuting));
            }
            OrbitClass::Closed => panic!("witness orbit is not closed"),
        }

        // nilpotent first component
        let space1 = SymplecticSpace::new(1);
        let e = SpElement::new(space1, ExactMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        let pt = AcvPoint::new(e, SpElement::zero(space1), PhaseVector::zero(space1)).unwrap();
        assert_eq!(
            classify_closed_orbit(&pt).unwrap(),
            OrbitClass::NotClosed(vec![NotClosedReason::XNotSemisimple])
        );

        // non-members are refused
        let off = AcvPoint::new(
            CartanPoint::from_i64(&[1]).embed(),
            SpElement::zero(space1),
            PhaseVector::from_i64(space1, &[1], &[0]),
        )
        .unwrap();
        assert_eq!(classify_closed_orbit(&off).unwrap_err(), Error::NotOnVariety);
    }
}
