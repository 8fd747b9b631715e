//! The symplectic form, the Lie algebra `sp_2n`, its Cartan data, and the
//! hyperoctahedral Weyl group.
//!
//! The form is fixed once and for all as `J = [[0, I], [-I, 0]]`, so that
//! `sp_2n` is the block matrices `[[A, B], [C, -A^T]]` with `B`, `C`
//! symmetric, the Cartan consists of `diag(t, -t)`, and the standard Borel
//! is the stabilizer of the flag spanned by the leading basis vectors.
//! Basis ordering is fixed (A-units row-major, then symmetric B-units, then
//! symmetric C-units, each upper triangle row-major) so coordinates,
//! ad-matrices, and Jacobians are reproducible.

use num::traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{rat, Rational};

/// The 2n-dimensional symplectic vector space with its fixed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymplecticSpace {
    n: usize,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Self {
        SymplecticSpace { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the underlying vector space, `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Dimension of `sp_2n`, `2n^2 + n`.
    pub fn algebra_dim(&self) -> usize {
        2 * self.n * self.n + self.n
    }

    /// The form matrix `J` with `J^2 = -1`, `J^T = -J`.
    pub fn form_matrix(&self) -> ExactMatrix {
        let n = self.n;
        let mut j = ExactMatrix::zero(2 * n, 2 * n);
        for k in 0..n {
            j.set(k, n + k, Rational::one());
            j.set(n + k, k, -Rational::one());
        }
        j
    }

    /// `omega(u, v) = u^T J v`.
    pub fn omega(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let n = self.n;
        assert_eq!(u.len(), 2 * n, "vector has wrong length");
        assert_eq!(v.len(), 2 * n, "vector has wrong length");
        let mut acc = Rational::zero();
        for k in 0..n {
            acc += &u[k] * &v[n + k] - &u[n + k] * &v[k];
        }
        acc
    }

    /// The fixed ordered basis of `sp_2n`, size `2n^2 + n`.
    pub fn basis(&self) -> Vec<SpElement> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.algebra_dim());
        for i in 0..n {
            for j in 0..n {
                let mut m = ExactMatrix::zero(2 * n, 2 * n);
                m.set(i, j, Rational::one());
                m.set(n + j, n + i, -Rational::one());
                out.push(SpElement { space: *self, mat: m });
            }
        }
        for i in 0..n {
            for j in i..n {
                let mut m = ExactMatrix::zero(2 * n, 2 * n);
                m.set(i, n + j, Rational::one());
                m.set(j, n + i, Rational::one());
                out.push(SpElement { space: *self, mat: m });
            }
        }
        for i in 0..n {
            for j in i..n {
                let mut m = ExactMatrix::zero(2 * n, 2 * n);
                m.set(n + i, j, Rational::one());
                m.set(n + j, i, Rational::one());
                out.push(SpElement { space: *self, mat: m });
            }
        }
        debug_assert_eq!(out.len(), self.algebra_dim());
        out
    }
}

/// An element of `sp_2n`: a `2n x 2n` matrix with `m^T J + J m = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpElement {
    space: SymplecticSpace,
    mat: ExactMatrix,
}

impl SpElement {
    /// Validates membership in the algebra exactly.
    pub fn new(space: SymplecticSpace, mat: ExactMatrix) -> Result<Self> {
        if mat.rows() != space.dim() || mat.cols() != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), got: mat.rows() });
        }
        if !in_algebra(&space, &mat) {
            return Err(Error::NotInAlgebra);
        }
        Ok(SpElement { space, mat })
    }

    /// For internal constructions that land in the algebra by design; the
    /// membership identity is still checked in debug builds.
    pub(crate) fn new_unchecked(space: SymplecticSpace, mat: ExactMatrix) -> Self {
        debug_assert!(in_algebra(&space, &mat));
        SpElement { space, mat }
    }

    pub fn zero(space: SymplecticSpace) -> Self {
        SpElement { space, mat: ExactMatrix::zero(space.dim(), space.dim()) }
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(SpElement { space: self.space, mat: self.mat.add(&other.mat) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(SpElement { space: self.space, mat: self.mat.sub(&other.mat) })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        SpElement { space: self.space, mat: self.mat.scale(factor) }
    }

    pub fn neg(&self) -> Self {
        SpElement { space: self.space, mat: self.mat.neg() }
    }

    /// `[self, other] = self * other - other * self`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mat = self.mat.mul(&other.mat).sub(&other.mat.mul(&self.mat));
        Ok(SpElement::new_unchecked(self.space, mat))
    }

    /// `trace(self * other)`: the symmetric invariant pairing, nondegenerate
    /// on the whole algebra.
    pub fn trace_form(&self, other: &Self) -> Result<Rational> {
        self.check_space(other)?;
        Ok(self.mat.trace_product(&other.mat))
    }

    /// Coordinates in the fixed basis ordering.
    pub fn coords(&self) -> Vec<Rational> {
        let n = self.space.n;
        let mut out = Vec::with_capacity(self.space.algebra_dim());
        for i in 0..n {
            for j in 0..n {
                out.push(self.mat.get(i, j).clone());
            }
        }
        for i in 0..n {
            for j in i..n {
                out.push(self.mat.get(i, n + j).clone());
            }
        }
        for i in 0..n {
            for j in i..n {
                out.push(self.mat.get(n + i, j).clone());
            }
        }
        out
    }

    /// Inverse of [`SpElement::coords`].
    pub fn from_coords(space: SymplecticSpace, coords: &[Rational]) -> Result<Self> {
        if coords.len() != space.algebra_dim() {
            return Err(Error::DimensionMismatch {
                expected: space.algebra_dim(),
                got: coords.len(),
            });
        }
        let n = space.n;
        let mut m = ExactMatrix::zero(2 * n, 2 * n);
        let mut idx = 0;
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, coords[idx].clone());
                m.set(n + j, n + i, -coords[idx].clone());
                idx += 1;
            }
        }
        for i in 0..n {
            for j in i..n {
                m.set(i, n + j, coords[idx].clone());
                m.set(j, n + i, coords[idx].clone());
                idx += 1;
            }
        }
        for i in 0..n {
            for j in i..n {
                m.set(n + i, j, coords[idx].clone());
                m.set(n + j, i, coords[idx].clone());
                idx += 1;
            }
        }
        Ok(SpElement::new_unchecked(space, m))
    }

    /// Matrix of `z -> [self, z]` in the fixed basis, `(2n^2+n) x (2n^2+n)`.
    pub fn ad_matrix(&self) -> ExactMatrix {
        let basis = self.space.basis();
        let cols: Vec<Vec<Rational>> = basis
            .iter()
            .map(|u| self.bracket(u).expect("same space").coords())
            .collect();
        ExactMatrix::from_columns(&cols)
    }

    /// `g * self * g_inverse`; the conjugate stays in the algebra whenever
    /// `g` is symplectic.
    pub fn conjugate(&self, g: &ExactMatrix, g_inv: &ExactMatrix) -> Result<Self> {
        SpElement::new(self.space, g.mul(&self.mat).mul(g_inv))
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch { left: self.space.n, right: other.space.n });
        }
        Ok(())
    }
}

fn in_algebra(space: &SymplecticSpace, mat: &ExactMatrix) -> bool {
    let j = space.form_matrix();
    mat.transpose().mul(&j).add(&j.mul(mat)).is_zero()
}

/// A vector of the symplectic space, split into its `(p, q)` halves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhaseVector {
    space: SymplecticSpace,
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl PhaseVector {
    pub fn new(space: SymplecticSpace, p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if p.len() != space.n() || q.len() != space.n() {
            return Err(Error::DimensionMismatch { expected: space.n(), got: p.len().max(q.len()) });
        }
        Ok(PhaseVector { space, p, q })
    }

    pub fn zero(space: SymplecticSpace) -> Self {
        PhaseVector {
            space,
            p: vec![Rational::zero(); space.n()],
            q: vec![Rational::zero(); space.n()],
        }
    }

    pub fn from_i64(space: SymplecticSpace, p: &[i64], q: &[i64]) -> Self {
        PhaseVector::new(
            space,
            p.iter().copied().map(rat).collect(),
            q.iter().copied().map(rat).collect(),
        )
        .expect("length mismatch")
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(Rational::is_zero) && self.q.iter().all(Rational::is_zero)
    }

    /// The full coordinate vector `(p_1..p_n, q_1..q_n)`.
    pub fn as_vector(&self) -> Vec<Rational> {
        self.p.iter().chain(self.q.iter()).cloned().collect()
    }

    pub fn from_vector(space: SymplecticSpace, v: &[Rational]) -> Result<Self> {
        if v.len() != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), got: v.len() });
        }
        let n = space.n();
        Ok(PhaseVector { space, p: v[..n].to_vec(), q: v[n..].to_vec() })
    }

    /// The square of the vector under the identification of `S^2(C^2n)`
    /// with `sp_2n`: the operator `v -> omega(self, v) * self`. It has rank
    /// at most one, and scaling the vector by `c` scales the square by `c^2`.
    pub fn symmetric_square(&self) -> SpElement {
        let v = self.as_vector();
        let dim = self.space.dim();
        let j = self.space.form_matrix();
        // square = v * (v^T J)
        let row = j.transpose().mul_vec(&v);
        let mut m = ExactMatrix::zero(dim, dim);
        for a in 0..dim {
            if v[a].is_zero() {
                continue;
            }
            for b in 0..dim {
                m.set(a, b, &v[a] * &row[b]);
            }
        }
        SpElement::new_unchecked(self.space, m)
    }

    /// Polarization of [`PhaseVector::symmetric_square`]: the derivative of
    /// `i -> i^2` at `self` in direction `delta`.
    pub fn polar_square(&self, delta: &PhaseVector) -> Result<SpElement> {
        if self.space != delta.space {
            return Err(Error::SpaceMismatch { left: self.space.n, right: delta.space.n });
        }
        let u = self.as_vector();
        let w = delta.as_vector();
        let dim = self.space.dim();
        let j = self.space.form_matrix();
        let ju = j.transpose().mul_vec(&u);
        let jw = j.transpose().mul_vec(&w);
        let mut m = ExactMatrix::zero(dim, dim);
        for a in 0..dim {
            for b in 0..dim {
                m.set(a, b, &u[a] * &jw[b] + &w[a] * &ju[b]);
            }
        }
        Ok(SpElement::new_unchecked(self.space, m))
    }

    pub fn apply_matrix(&self, g: &ExactMatrix) -> Self {
        let image = g.mul_vec(&self.as_vector());
        PhaseVector::from_vector(self.space, &image).expect("square matrix of matching size")
    }
}

/// A Cartan point `t`, representing `diag(t_1..t_n, -t_1..-t_n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanPoint {
    t: Vec<Rational>,
}

impl CartanPoint {
    pub fn new(t: Vec<Rational>) -> Self {
        CartanPoint { t }
    }

    pub fn from_i64(t: &[i64]) -> Self {
        CartanPoint { t: t.iter().copied().map(rat).collect() }
    }

    pub fn zero(n: usize) -> Self {
        CartanPoint { t: vec![Rational::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.t
    }

    /// `diag(t_1..t_n, -t_1..-t_n)` as an algebra element.
    pub fn embed(&self) -> SpElement {
        let n = self.t.len();
        let space = SymplecticSpace::new(n);
        let mut m = ExactMatrix::zero(2 * n, 2 * n);
        for k in 0..n {
            m.set(k, k, self.t[k].clone());
            m.set(n + k, n + k, -self.t[k].clone());
        }
        SpElement::new_unchecked(space, m)
    }

    /// Regularity in the sense of the root system of type `C_n`: no root
    /// value `2 t_k` or `t_k ± t_l` vanishes. Equivalently, the kernel of
    /// `ad(embed())` on the algebra has dimension exactly `n`.
    pub fn is_regular(&self) -> bool {
        let n = self.t.len();
        for k in 0..n {
            if self.t[k].is_zero() {
                return false;
            }
            for l in k + 1..n {
                if self.t[k] == self.t[l] || self.t[k] == -self.t[l].clone() {
                    return false;
                }
            }
        }
        true
    }
}

/// An element of the Weyl group `W = S_n ⋉ {±1}^n` of type `C_n`.
///
/// Acting on a Cartan point: `(w · t)_k = signs_k · t_{perm(k)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: signs.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("signs must be ±1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// The flip of a single coordinate.
    pub fn sign_flip(n: usize, k: usize) -> Self {
        let mut signs = vec![1; n];
        signs[k] = -1;
        SignedPermutation { perm: (0..n).collect(), signs }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1) && self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }

    /// Group law chosen so that `compose(w1, w2)` acts as `w1` after `w2`:
    /// `act(compose(w1, w2), t) = act(w1, act(w2, t))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n();
        assert_eq!(n, other.n(), "rank mismatch");
        let perm = (0..n).map(|k| other.perm[self.perm[k]]).collect();
        let signs = (0..n).map(|k| self.signs[k] * other.signs[self.perm[k]]).collect();
        SignedPermutation { perm, signs }
    }

    pub fn act_on_cartan(&self, t: &CartanPoint) -> CartanPoint {
        let n = self.n();
        assert_eq!(n, t.n(), "rank mismatch");
        let values = (0..n)
            .map(|k| {
                let v = t.values()[self.perm[k]].clone();
                if self.signs[k] == -1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        CartanPoint::new(values)
    }

    /// The diagonal action on a pair of Cartan points.
    pub fn act_on_pair(&self, pair: (&CartanPoint, &CartanPoint)) -> (CartanPoint, CartanPoint) {
        (self.act_on_cartan(pair.0), self.act_on_cartan(pair.1))
    }

    /// The combinatorial action on a phase vector: coordinate pairs are
    /// permuted, and a flipped coordinate sends `(p, q)` to `(-q, p)`.
    /// Agrees with applying [`SignedPermutation::matrix`].
    pub fn act_on_phase(&self, i: &PhaseVector) -> PhaseVector {
        let n = self.n();
        assert_eq!(n, i.space().n(), "rank mismatch");
        let mut p = vec![Rational::zero(); n];
        let mut q = vec![Rational::zero(); n];
        for k in 0..n {
            // permutation part matches the Cartan action: slot k reads
            // coordinate perm(k)
            let (sp, sq) = (i.p()[self.perm[k]].clone(), i.q()[self.perm[k]].clone());
            if self.signs[k] == -1 {
                p[k] = -sq;
                q[k] = sp;
            } else {
                p[k] = sp;
                q[k] = sq;
            }
        }
        PhaseVector { space: i.space(), p, q }
    }

    /// The monomial symplectic matrix realizing this element: conjugating
    /// `t.embed()` by it gives `act_on_cartan(t).embed()`.
    pub fn matrix(&self, space: SymplecticSpace) -> ExactMatrix {
        let n = self.n();
        assert_eq!(n, space.n(), "rank mismatch");
        // permutation part: e_k -> e_{perm^{-1}(k)} on both halves
        let mut inv = vec![0usize; n];
        for k in 0..n {
            inv[self.perm[k]] = k;
        }
        let mut g = ExactMatrix::zero(2 * n, 2 * n);
        for k in 0..n {
            g.set(inv[k], k, Rational::one());
            g.set(n + inv[k], n + k, Rational::one());
        }
        // flips: e_k -> e_{n+k}, e_{n+k} -> -e_k at each flipped slot
        for k in 0..n {
            if self.signs[k] == -1 {
                let mut f = ExactMatrix::identity(2 * n);
                f.set(k, k, Rational::zero());
                f.set(n + k, n + k, Rational::zero());
                f.set(n + k, k, Rational::one());
                f.set(k, n + k, -Rational::one());
                g = f.mul(&g);
            }
        }
        g
    }

    /// All `2^n n!` group elements, in a fixed deterministic order.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        permutations(&mut current, 0, &mut perms);
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() << n);
        for perm in perms {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        out
    }
}

fn permutations(current: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == current.len() {
        out.push(current.clone());
        return;
    }
    for k in start..current.len() {
        current.swap(start, k);
        permutations(current, start + 1, out);
        current.swap(start, k);
    }
}

/// Canonical representative of the diagonal `W`-orbit of a pair of Cartan
/// points: per index, `(a_k, b_k)` is replaced by whichever of
/// `±(a_k, b_k)` is lexicographically greater-or-equal; the `n` pairs are
/// then sorted lexicographically descending.
pub fn weyl_canonical_form(pair: (&CartanPoint, &CartanPoint)) -> (CartanPoint, CartanPoint) {
    let n = pair.0.n();
    assert_eq!(n, pair.1.n(), "rank mismatch");
    let mut pairs: Vec<(Rational, Rational)> = (0..n)
        .map(|k| {
            let a = pair.0.values()[k].clone();
            let b = pair.1.values()[k].clone();
            let neg = (-a.clone(), -b.clone());
            if (a.clone(), b.clone()) >= neg {
                (a, b)
            } else {
                neg
            }
        })
        .collect();
    pairs.sort_by(|x, y| y.cmp(x));
    let (a, b) = pairs.into_iter().unzip();
    (CartanPoint::new(a), CartanPoint::new(b))
}

/// Dimensions attached to a Levi subgroup type
/// `prod GL_{n_i} x Sp_{2 n_0}` inside `Sp_2n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviType {
    n0: usize,
    parts: Vec<usize>,
}

impl LeviType {
    pub fn new(n0: usize, parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidConfig("Levi parts must be positive".into()));
        }
        Ok(LeviType { n0, parts })
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.n0 + self.parts.iter().sum::<usize>()
    }

    /// `dim L = sum n_i^2 + (2 n_0^2 + n_0)`.
    pub fn dim(&self) -> usize {
        self.parts.iter().map(|&p| p * p).sum::<usize>() + 2 * self.n0 * self.n0 + self.n0
    }

    /// All Levi types of a given rank: every choice of `n_0 >= 0` together
    /// with an unordered partition of the remainder into positive parts.
    pub fn enumerate(n: usize) -> Vec<LeviType> {
        let mut out = Vec::new();
        for n0 in 0..=n {
            for parts in partitions(n - n0) {
                out.push(LeviType { n0, parts });
            }
        }
        out
    }
}

/// Unordered partitions of `n` into positive parts, non-increasing.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A pseudo-random rational symplectic matrix: a short product of
/// upper/lower unipotent block generators and a unit-triangular torus block.
/// Entries stay small so downstream exact arithmetic stays cheap.
pub fn random_symplectic<R: Rng>(space: SymplecticSpace, rng: &mut R) -> ExactMatrix {
    let n = space.n();
    let mut g = ExactMatrix::identity(2 * n);
    for _ in 0..2 {
        let mut b = ExactMatrix::zero(n, n);
        let mut c = ExactMatrix::zero(n, n);
        let mut a = ExactMatrix::identity(n);
        for i in 0..n {
            for j in i..n {
                let v = rat(rng.gen_range(-2..=2));
                b.set(i, j, v.clone());
                b.set(j, i, v);
                let w = rat(rng.gen_range(-2..=2));
                c.set(i, j, w.clone());
                c.set(j, i, w);
                if i < j {
                    a.set(i, j, rat(rng.gen_range(-2..=2)));
                }
            }
        }
        // [[I, B], [0, I]] * [[I, 0], [C, I]] * [[A, 0], [0, A^{-T}]]
        let mut g1 = ExactMatrix::identity(2 * n);
        let mut g2 = ExactMatrix::identity(2 * n);
        let mut g3 = ExactMatrix::zero(2 * n, 2 * n);
        let a_inv_t = a.inverse().expect("unit triangular").transpose();
        for i in 0..n {
            for j in 0..n {
                g1.set(i, n + j, b.get(i, j).clone());
                g2.set(n + i, j, c.get(i, j).clone());
                g3.set(i, j, a.get(i, j).clone());
                g3.set(n + i, n + j, a_inv_t.get(i, j).clone());
            }
        }
        g = g.mul(&g1).mul(&g2).mul(&g3);
    }
    debug_assert!(is_symplectic(&space, &g));
    g
}

/// `g^T J g = J`, checked exactly.
pub fn is_symplectic(space: &SymplecticSpace, g: &ExactMatrix) -> bool {
    if g.rows() != space.dim() || g.cols() != space.dim() {
        return false;
    }
    let j = space.form_matrix();
    g.transpose().mul(&j).mul(g) == j
}
