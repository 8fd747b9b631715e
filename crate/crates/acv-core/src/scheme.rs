//! The almost-commuting scheme: the zero locus of
//! `mu(x, y, i) = [x, y] + i^2` inside `sp_2n ⊕ sp_2n ⊕ C^2n`.
//!
//! Everything certified here is point-local and exact: membership is an
//! identity of matrices, smoothness is a Jacobian rank computed by
//! fraction-free elimination, and the component combinatorics of the locus
//! `{p_k q_k = 0}` are enumerated outright. The samplers construct points
//! over a regular Cartan first coordinate by solving `[x, y] = -i^2`
//! exactly; the affine fiber of that solve is exposed as an explicit Cartan
//! shift parameter rather than hidden in randomness.

use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Rational;
use crate::symplectic::{CartanPoint, LeviType, PhaseVector, SpElement, SymplecticSpace};

/// A candidate point `(x, y, i)`; membership is a property checked by
/// [`AcvPoint::is_member`], never assumed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AcvPoint {
    x: SpElement,
    y: SpElement,
    i: PhaseVector,
}

impl AcvPoint {
    pub fn new(x: SpElement, y: SpElement, i: PhaseVector) -> Result<Self> {
        if x.space() != y.space() {
            return Err(Error::SpaceMismatch { left: x.space().n(), right: y.space().n() });
        }
        if x.space() != i.space() {
            return Err(Error::SpaceMismatch { left: x.space().n(), right: i.space().n() });
        }
        Ok(AcvPoint { x, y, i })
    }

    pub fn space(&self) -> SymplecticSpace {
        self.x.space()
    }

    pub fn x(&self) -> &SpElement {
        &self.x
    }

    pub fn y(&self) -> &SpElement {
        &self.y
    }

    pub fn phase(&self) -> &PhaseVector {
        &self.i
    }

    /// `[x, y] + i^2`; zero exactly when the point lies on the variety.
    pub fn moment_residual(&self) -> SpElement {
        self.x
            .bracket(&self.y)
            .and_then(|b| b.add(&self.i.symmetric_square()))
            .expect("spaces agree by construction")
    }

    pub fn is_member(&self) -> bool {
        self.moment_residual().is_zero()
    }

    /// Matrix of the differential of `mu` at this point, in basis
    /// coordinates: `(delta_x, delta_y, delta_i) -> [delta_x, y] +
    /// [x, delta_y] + polar(i, delta_i)`. Shape
    /// `(2n^2+n) x (2(2n^2+n) + 2n)`.
    pub fn jacobian(&self) -> ExactMatrix {
        let space = self.space();
        let basis = space.basis();
        let mut cols: Vec<Vec<Rational>> =
            Vec::with_capacity(2 * space.algebra_dim() + space.dim());
        for u in &basis {
            cols.push(u.bracket(&self.y).expect("same space").coords());
        }
        for u in &basis {
            cols.push(self.x.bracket(u).expect("same space").coords());
        }
        for a in 0..space.dim() {
            let mut e = vec![Rational::zero(); space.dim()];
            e[a] = num::traits::One::one();
            let delta = PhaseVector::from_vector(space, &e).expect("length matches");
            cols.push(self.i.polar_square(&delta).expect("same space").coords());
        }
        ExactMatrix::from_columns(&cols)
    }

    /// Apply the differential to a tangent direction.
    pub fn differential_at(&self, direction: &AcvPoint) -> Result<SpElement> {
        let d1 = direction.x.bracket(&self.y)?;
        let d2 = self.x.bracket(&direction.y)?;
        let d3 = self.i.polar_square(&direction.i)?;
        d1.add(&d2)?.add(&d3)
    }

    /// Dimension of `{z in sp_2n : [z, x] = 0, [z, y] = 0, z i = 0}`, the
    /// Lie algebra of the stabilizer. Zero means the orbit is free.
    pub fn stabilizer_dim(&self) -> usize {
        let space = self.space();
        let i_vec = self.i.as_vector();
        let cols: Vec<Vec<Rational>> = space
            .basis()
            .iter()
            .map(|u| {
                let mut col = u.bracket(&self.x).expect("same space").coords();
                col.extend(u.bracket(&self.y).expect("same space").coords());
                col.extend(u.matrix().mul_vec(&i_vec));
                col
            })
            .collect();
        let m = ExactMatrix::from_columns(&cols);
        space.algebra_dim() - m.rank()
    }

    /// Rank certificate at a member point. When the Jacobian has full rank
    /// `2n^2 + n`, the point is a smooth point of a local complete
    /// intersection of dimension `ambient - rank = 2n^2 + 3n`.
    pub fn dimension_certificate(&self) -> Result<DimensionCertificate> {
        if !self.is_member() {
            return Err(Error::NotOnVariety);
        }
        let space = self.space();
        Ok(DimensionCertificate {
            point: self.clone(),
            jacobian_rank: self.jacobian().rank(),
            ambient_dim: 2 * space.algebra_dim() + space.dim(),
            expected_variety_dim: expected_variety_dim(space.n()),
            stabilizer_dim: self.stabilizer_dim(),
        })
    }

    /// The point moved by a symplectic transformation:
    /// `(g x g^-1, g y g^-1, g i)`.
    pub fn transform(&self, g: &ExactMatrix, g_inv: &ExactMatrix) -> Result<AcvPoint> {
        Ok(AcvPoint {
            x: self.x.conjugate(g, g_inv)?,
            y: self.y.conjugate(g, g_inv)?,
            i: self.i.apply_matrix(g),
        })
    }
}

/// `2n^2 + 3n`: codimension-many equations in dimension `2 dim g + 2n`.
pub fn expected_variety_dim(n: usize) -> usize {
    2 * n * n + 3 * n
}

/// Smoothness bookkeeping at one sampled point.
#[derive(Clone, Debug)]
pub struct DimensionCertificate {
    pub point: AcvPoint,
    pub jacobian_rank: usize,
    pub ambient_dim: usize,
    pub expected_variety_dim: usize,
    pub stabilizer_dim: usize,
}

impl DimensionCertificate {
    /// Full Jacobian rank: the defining map is a submersion here.
    pub fn is_submersion(&self) -> bool {
        self.jacobian_rank == self.point.space().algebra_dim()
    }

    /// Local dimension certified by the rank; only claimed at submersion
    /// points.
    pub fn local_dimension(&self) -> Option<usize> {
        self.is_submersion().then_some(self.ambient_dim - self.jacobian_rank)
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_submersion() {
            "smooth-point-certified"
        } else {
            "no-smoothness-claim"
        }
    }
}

/// Which of `p_k`, `q_k` is the free coordinate on a component of the locus
/// `{p_k q_k = 0}`; `P` means `q_k = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Axis {
    P,
    Q,
}

/// A choice of axis per coordinate, locating one of the `2^n` components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignVector(Vec<Axis>);

impl SignVector {
    pub fn new(choice: Vec<Axis>) -> Self {
        SignVector(choice)
    }

    pub fn all_p(n: usize) -> Self {
        SignVector(vec![Axis::P; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn choices(&self) -> &[Axis] {
        &self.0
    }

    /// Exchange the axes at the flipped positions (the `{±1}^n` action on
    /// components).
    pub fn flip(&self, mask: u32) -> Self {
        SignVector(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &a)| {
                    if mask >> k & 1 == 1 {
                        match a {
                            Axis::P => Axis::Q,
                            Axis::Q => Axis::P,
                        }
                    } else {
                        a
                    }
                })
                .collect(),
        )
    }
}

/// Locate the component of the locus `{p_k q_k = 0}` containing `i`:
/// `None` when some `p_k q_k != 0`; ties (`p_k = q_k = 0`) resolve to `P`.
pub fn yn_membership(i: &PhaseVector) -> Option<SignVector> {
    let mut choice = Vec::with_capacity(i.space().n());
    for (p, q) in i.p().iter().zip(i.q()) {
        if !(p * q).is_zero() {
            return None;
        }
        choice.push(if q.is_zero() { Axis::P } else { Axis::Q });
    }
    Some(SignVector(choice))
}

/// All `2^n` components, in a fixed lexicographic order (`P` before `Q`).
pub fn yn_components(n: usize) -> Vec<SignVector> {
    assert!(n < 32, "component enumeration is a small-rank tool");
    (0..(1u32 << n))
        .map(|mask| {
            SignVector(
                (0..n)
                    .map(|k| if mask >> (n - 1 - k) & 1 == 1 { Axis::Q } else { Axis::P })
                    .collect(),
            )
        })
        .collect()
}

/// Result of checking that the sign-flip group acts simply transitively on
/// a component list.
#[derive(Clone, Debug, Serialize)]
pub struct TransitivityReport {
    pub n: usize,
    pub component_count: usize,
    pub group_order: usize,
    pub simply_transitive: bool,
}

/// Verify that `{±1}^n` permutes the `2^n` components simply transitively:
/// the action table is closed and every ordered pair of components has
/// exactly one transporter.
pub fn weyl_transitivity_check(n: usize) -> TransitivityReport {
    let components = yn_components(n);
    TransitivityReport {
        n,
        component_count: components.len(),
        group_order: 1usize << n,
        simply_transitive: simply_transitive_on(n, &components),
    }
}

/// The raw action-table check, on an arbitrary component list so negative
/// controls can exercise it.
pub fn simply_transitive_on(n: usize, components: &[SignVector]) -> bool {
    let masks: Vec<u32> = (0..(1u32 << n)).collect();
    // closure: every group element maps every listed component into the list
    for c in components {
        for &m in &masks {
            if !components.contains(&c.flip(m)) {
                return false;
            }
        }
    }
    // simple transitivity: exactly one transporter per ordered pair
    for c1 in components {
        for c2 in components {
            let transporters = masks.iter().filter(|&&m| &c1.flip(m) == c2).count();
            if transporters != 1 {
                return false;
            }
        }
    }
    true
}

/// The member with `x = t.embed()`, all `p_k = 1`, `q_k = 0`, and `y`
/// solved exactly so that `[x, y] = -i^2`, with zero Cartan component.
/// Its orbit is free (zero stabilizer).
pub fn witness_point(t: &CartanPoint) -> Result<AcvPoint> {
    let n = t.n();
    let free = vec![num::traits::One::one(); n];
    sample_regular_point(t, &SignVector::all_p(n), &free, &CartanPoint::zero(n))
}

/// Sample a member over a regular Cartan first coordinate.
///
/// `x = t.embed()`; `i` has `p_k = free[k], q_k = 0` where `sign[k] = P`
/// and the reverse where it is `Q` (so `p_k q_k = 0` by construction);
/// `y` is the particular solution of `[x, y] = -i^2` with zero Cartan
/// component, shifted by `fiber.embed()`. The shift parameterizes the
/// n-dimensional affine fiber of solutions exactly.
pub fn sample_regular_point(
    t: &CartanPoint,
    sign: &SignVector,
    free: &[Rational],
    fiber: &CartanPoint,
) -> Result<AcvPoint> {
    let n = t.n();
    if !t.is_regular() {
        return Err(Error::NotRegular);
    }
    if sign.n() != n || free.len() != n || fiber.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: sign.n().min(free.len()) });
    }
    if free.iter().any(Rational::is_zero) {
        return Err(Error::InvalidConfig("free coordinates must be nonzero".into()));
    }
    let space = SymplecticSpace::new(n);
    let mut p = vec![Rational::zero(); n];
    let mut q = vec![Rational::zero(); n];
    for k in 0..n {
        match sign.choices()[k] {
            Axis::P => p[k] = free[k].clone(),
            Axis::Q => q[k] = free[k].clone(),
        }
    }
    let i = PhaseVector::new(space, p, q)?;
    let x = t.embed();
    let target = i.symmetric_square().neg().coords();
    let (mut y_coords, _fiber_basis) =
        x.ad_matrix().solve_affine(&target).ok_or(Error::NoSolution)?;
    // Zero Cartan component: kill the diagonal A-unit coordinates.
    for k in 0..n {
        y_coords[k * n + k] = Rational::zero();
    }
    let y = SpElement::from_coords(space, &y_coords)?.add(&fiber.embed())?;
    let point = AcvPoint::new(x, y, i)?;
    debug_assert!(point.is_member());
    Ok(point)
}

/// A point of the general-linear-side scheme `[x, y] + i j = 0` with
/// traceless `x`, `y`. Support here is deliberately shallow: residual,
/// membership, and the dimension constants consumed by the Levi
/// bookkeeping.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GgPoint {
    n: usize,
    x: ExactMatrix,
    y: ExactMatrix,
    i: Vec<Rational>,
    j: Vec<Rational>,
}

impl GgPoint {
    pub fn new(x: ExactMatrix, y: ExactMatrix, i: Vec<Rational>, j: Vec<Rational>) -> Result<Self> {
        let n = x.rows();
        if !x.is_square() || !y.is_square() || y.rows() != n {
            return Err(Error::NotSquare { rows: y.rows(), cols: y.cols() });
        }
        if i.len() != n || j.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: i.len().min(j.len()) });
        }
        if !x.trace().is_zero() || !y.trace().is_zero() {
            return Err(Error::InvalidConfig("x and y must be traceless".into()));
        }
        Ok(GgPoint { n, x, y, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `[x, y] + i j` as an `n x n` matrix.
    pub fn residual(&self) -> ExactMatrix {
        let mut out = self.x.mul(&self.y).sub(&self.y.mul(&self.x));
        for r in 0..self.n {
            for c in 0..self.n {
                let v = out.get(r, c) + &self.i[r] * &self.j[c];
                out.set(r, c, v);
            }
        }
        out
    }

    pub fn is_member(&self) -> bool {
        self.residual().is_zero()
    }
}

/// Component count of the general-linear-side scheme: `n + 1`.
pub fn gg_component_count(n: usize) -> usize {
    n + 1
}

/// Dimension of each of its components: `n^2 + 2n - 2`.
pub fn gg_component_dim(n: usize) -> usize {
    n * n + 2 * n - 2
}

/// The exact bookkeeping identity behind the Levi-type dimension bound:
/// `dim G/L + 2k + sum(n_i^2 + 2n_i - 2) + (2 n_0^2 + 3 n_0) = 2n^2 + 3n`.
pub fn levi_dimension_identity(lt: &LeviType) -> bool {
    let n = lt.rank();
    let g_dim = SymplecticSpace::new(n).algebra_dim();
    let k = lt.parts().len();
    let lhs = (g_dim - lt.dim())
        + 2 * k
        + lt.parts().iter().map(|&p| gg_component_dim(p)).sum::<usize>()
        + expected_variety_dim(lt.n0());
    lhs == expected_variety_dim(n)
}

/// Is `i^2` outside the image of `ad(x)`? Certified by comparing the rank
/// of the image basis with and without the coordinates of `i^2` appended.
pub fn escapes_ad_image(x: &SpElement, i: &PhaseVector) -> Result<bool> {
    if x.space() != i.space() {
        return Err(Error::SpaceMismatch { left: x.space().n(), right: i.space().n() });
    }
    let ad = x.ad_matrix();
    let base_rank = ad.rank();
    let square = i.symmetric_square().coords();
    let augmented = ad.hstack(&ExactMatrix::from_columns(&[square]));
    Ok(augmented.rank() == base_rank + 1)
}

/// For a regular Cartan-embedded `x`, produce `i` with `i^2` outside
/// `[g, x]`, rank-certified. The image of `ad(x)` is then the
/// trace-form complement of the Cartan, so any `i` with some
/// `p_k q_k != 0` works; this returns `p_1 = q_1 = 1`.
pub fn min_orbit_escape_witness(x: &SpElement) -> Result<PhaseVector> {
    let t = cartan_coordinates(x).ok_or(Error::NotRegularCartan)?;
    if !t.is_regular() {
        return Err(Error::NotRegularCartan);
    }
    let n = x.space().n();
    let mut p = vec![0i64; n];
    let mut q = vec![0i64; n];
    p[0] = 1;
    q[0] = 1;
    let i = PhaseVector::from_i64(x.space(), &p, &q);
    assert!(
        escapes_ad_image(x, &i)?,
        "escape certificate must hold for a regular Cartan element"
    );
    Ok(i)
}

/// The Cartan point of a diagonal embedding, `None` if `x` is not one.
pub fn cartan_coordinates(x: &SpElement) -> Option<CartanPoint> {
    let n = x.space().n();
    let m = x.matrix();
    let t: Vec<Rational> = (0..n).map(|k| m.get(k, k).clone()).collect();
    let candidate = CartanPoint::new(t);
    if &candidate.embed() == x {
        Some(candidate)
    } else {
        None
    }
}
