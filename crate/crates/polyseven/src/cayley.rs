//! Quaternion and octonion arithmetic with a pinned multiplication
//! convention, plus the one-parameter subgroup through an imaginary unit.
//!
//! The octonion product is the Cayley-Dickson doubling of the quaternions:
//! writing an octonion as a pair `(a, b)` of quaternions,
//!
//! ```text
//! (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))
//! ```
//!
//! with the basis letters identified as `e = (0, 1)`, `f = (0, i)`,
//! `g = (0, j)`, `h = (0, k)`. Every lift, isotopy, and audit downstream is
//! relative to this table; changing the convention re-signs half the basis
//! products.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Generator norm below which [`exp_subgroup`] reports a degenerate frame.
pub const ZERO_GENERATOR_TOL: f64 = 1e-13;

/// The subgroup generator is numerically indistinguishable from zero.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("degenerate subgroup generator: |z| = {norm:.3e} is below the 1e-13 floor")]
pub struct ZeroVector {
    pub norm: f64,
}

/// Quaternion `q0 + q1 i + q2 j + q3 k` with the Hamilton relations
/// `ij = k`, `jk = i`, `ki = j`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Quaternion { q0, q1, q2, q3 }
    }

    /// Conjugation: negates the three imaginary components.
    pub fn conj(self) -> Self {
        Quaternion::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    pub fn norm_sq(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dot(self, rhs: Self) -> f64 {
        self.q0 * rhs.q0 + self.q1 * rhs.q1 + self.q2 * rhs.q2 + self.q3 * rhs.q3
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.q0 * r.q0 - self.q1 * r.q1 - self.q2 * r.q2 - self.q3 * r.q3,
            self.q0 * r.q1 + self.q1 * r.q0 + self.q2 * r.q3 - self.q3 * r.q2,
            self.q0 * r.q2 - self.q1 * r.q3 + self.q2 * r.q0 + self.q3 * r.q1,
            self.q0 * r.q3 + self.q1 * r.q2 - self.q2 * r.q1 + self.q3 * r.q0,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 + r.q0, self.q1 + r.q1, self.q2 + r.q2, self.q3 + r.q3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 - r.q0, self.q1 - r.q1, self.q2 - r.q2, self.q3 - r.q3)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

/// Octonion in the basis `1, i, j, k, e, f, g, h` (component order).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    /// The `k`-th basis element, `0 = 1`, `1..=7 = i, j, k, e, f, g, h`.
    pub fn basis(k: usize) -> Self {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Octonion(c)
    }

    /// Assembles an octonion from its quaternion halves `(lo, hi) = lo + hi*e`.
    pub fn from_halves(lo: Quaternion, hi: Quaternion) -> Self {
        Octonion([lo.q0, lo.q1, lo.q2, lo.q3, hi.q0, hi.q1, hi.q2, hi.q3])
    }

    pub fn from_quaternion(q: Quaternion) -> Self {
        Octonion::from_halves(q, Quaternion::ZERO)
    }

    pub fn lo(self) -> Quaternion {
        Quaternion::new(self.0[0], self.0[1], self.0[2], self.0[3])
    }

    pub fn hi(self) -> Quaternion {
        Quaternion::new(self.0[4], self.0[5], self.0[6], self.0[7])
    }

    /// Real part.
    pub fn re(self) -> f64 {
        self.0[0]
    }

    /// The seven imaginary components.
    pub fn imaginary(self) -> ImaginaryVector7 {
        let mut v = [0.0; 7];
        v.copy_from_slice(&self.0[1..]);
        ImaginaryVector7(v)
    }

    /// Conjugation: negates the seven imaginary components.
    pub fn conj(self) -> Self {
        let c = self.0;
        Octonion([c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]])
    }

    pub fn norm_sq(self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dot(self, rhs: Self) -> f64 {
        self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn scale(self, s: f64) -> Self {
        let mut c = self.0;
        for x in &mut c {
            *x *= s;
        }
        Octonion(c)
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let (a, b) = (self.lo(), self.hi());
        let (c, d) = (rhs.lo(), rhs.hi());
        Octonion::from_halves(a * c - d.conj() * b, d * a + b * c.conj())
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
        Octonion(c)
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x -= y;
        }
        Octonion(c)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

/// A vector in R^7 identified with the imaginary octonions
/// (components along `i, j, k, e, f, g, h`).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ImaginaryVector7(pub [f64; 7]);

impl ImaginaryVector7 {
    /// Copies seven coordinates out of a slice. Panics unless `v.len() == 7`.
    pub fn from_slice(v: &[f64]) -> Self {
        let mut c = [0.0; 7];
        c.copy_from_slice(v);
        ImaginaryVector7(c)
    }

    /// Embeds into the octonions with zero real part.
    pub fn embed(self) -> Octonion {
        let v = self.0;
        Octonion([0.0, v[0], v[1], v[2], v[3], v[4], v[5], v[6]])
    }

    pub fn norm_sq(self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }
}

/// The one-parameter subgroup through the unit imaginary octonion `u`
/// obtained by normalizing `generator`:
///
/// ```text
/// Z(theta) = cos(theta) * 1 + sin(theta) * u
/// ```
///
/// so `Z(0) = 1`, `Z(pi/2) = u`, `Z(pi) = -1`, and `|Z(theta)| = 1` for all
/// `theta`. The generator is normalized internally so scaled frames (norm
/// `sqrt(lambda)` instead of 1) can reuse the same subgroup.
pub fn exp_subgroup(generator: ImaginaryVector7, theta: f64) -> Result<Octonion, ZeroVector> {
    let norm = generator.norm();
    if norm < ZERO_GENERATOR_TOL {
        return Err(ZeroVector { norm });
    }
    let u = generator.embed().scale(1.0 / norm);
    Ok(Octonion::ONE.scale(theta.cos()) + u.scale(theta.sin()))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, PI};

    use proptest::prelude::*;

    use super::*;

    /// Full basis multiplication table, expanded by hand from the pair
    /// convention `(a,b)(c,d) = (ac - conj(d)b, da + b conj(c))`. Entries are
    /// `(index, sign)` of the product of basis elements `row * col`.
    #[rustfmt::skip]
    const BASIS_TABLE: [[(usize, f64); 8]; 8] = [
        // 1        i          j          k          e          f          g          h
        [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0), (4, 1.0), (5, 1.0), (6, 1.0), (7, 1.0)],
        [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0), (5, 1.0), (4, -1.0), (7, -1.0), (6, 1.0)],
        [(2, 1.0), (3, -1.0), (0, -1.0), (1, 1.0), (6, 1.0), (7, 1.0), (4, -1.0), (5, -1.0)],
        [(3, 1.0), (2, 1.0), (1, -1.0), (0, -1.0), (7, 1.0), (6, -1.0), (5, 1.0), (4, -1.0)],
        [(4, 1.0), (5, -1.0), (6, -1.0), (7, -1.0), (0, -1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
        [(5, 1.0), (4, 1.0), (7, -1.0), (6, 1.0), (1, -1.0), (0, -1.0), (3, -1.0), (2, 1.0)],
        [(6, 1.0), (7, 1.0), (4, 1.0), (5, -1.0), (2, -1.0), (3, 1.0), (0, -1.0), (1, -1.0)],
        [(7, 1.0), (6, -1.0), (5, 1.0), (4, 1.0), (3, -1.0), (2, -1.0), (1, 1.0), (0, -1.0)],
    ];

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-1.0f64..1.0)
            .prop_map(|c| Quaternion::new(c[0], c[1], c[2], c[3]))
    }

    fn arb_oct() -> impl Strategy<Value = Octonion> {
        prop::array::uniform8(-1.0f64..1.0).prop_map(Octonion)
    }

    #[test]
    fn quaternion_generator_relations() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(Quaternion::J * Quaternion::J, -Quaternion::ONE);
        assert_eq!(Quaternion::K * Quaternion::K, -Quaternion::ONE);
    }

    #[test]
    fn quaternion_identity() {
        let b = Quaternion::new(0.3, -1.25, 0.5, 2.0);
        assert_eq!(Quaternion::ONE * b, b);
        assert_eq!(b * Quaternion::ONE, b);
    }

    #[test]
    fn octonion_basis_table_matches_hand_expansion() {
        for (m, row) in BASIS_TABLE.iter().enumerate() {
            for (n, &(idx, sign)) in row.iter().enumerate() {
                let got = Octonion::basis(m) * Octonion::basis(n);
                let want = Octonion::basis(idx).scale(sign);
                assert_eq!(got, want, "basis product {m} * {n}");
            }
        }
    }

    #[test]
    fn octonion_identity() {
        let x = Octonion([0.1, -0.2, 0.3, 0.4, 0.5, -0.6, 0.7, -0.8]);
        assert_eq!(Octonion::ONE * x, x);
        assert_eq!(x * Octonion::ONE, x);
    }

    #[test]
    fn associator_on_i_j_e() {
        let (i, j, e) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
        let left = (i * j) * e;
        let right = i * (j * e);
        assert_eq!(left, Octonion::basis(7)); // h
        assert_eq!(right, -Octonion::basis(7)); // -h
        assert_eq!((left - right).norm(), 2.0);
    }

    #[test]
    fn max_basis_associator_is_two() {
        let mut max = 0.0f64;
        for m in 0..8 {
            for n in 0..8 {
                for p in 0..8 {
                    let (a, b, c) = (Octonion::basis(m), Octonion::basis(n), Octonion::basis(p));
                    max = max.max(((a * b) * c - a * (b * c)).norm());
                }
            }
        }
        assert_eq!(max, 2.0);
    }

    #[test]
    fn conjugation_is_involutive_and_realizes_norm() {
        let x = Octonion([0.4, -0.1, 0.9, -0.3, 0.2, 0.8, -0.5, 0.6]);
        assert_eq!(x.conj().conj(), x);
        let p = x * x.conj();
        assert!((p.re() - x.norm_sq()).abs() < 1e-15);
        assert!(p.imaginary().norm() < 1e-15);
        assert_eq!(Octonion::basis(1).conj(), -Octonion::basis(1));
        assert_eq!(Octonion::ONE.conj(), Octonion::ONE);
    }

    #[test]
    fn exp_subgroup_endpoints() {
        let z = ImaginaryVector7([0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0]);
        let u = Octonion::basis(4); // z normalized is the unit e
        assert_eq!(exp_subgroup(z, 0.0).unwrap(), Octonion::ONE);
        let half = exp_subgroup(z, FRAC_PI_2).unwrap();
        assert!((half - u).norm() < 1e-15);
        let full = exp_subgroup(z, PI).unwrap();
        assert!((full + Octonion::ONE).norm() < 1e-15);
    }

    #[test]
    fn exp_subgroup_rejects_zero_generator() {
        let err = exp_subgroup(ImaginaryVector7([0.0; 7]), 1.0).unwrap_err();
        assert_eq!(err.norm, 0.0);
    }

    proptest! {
        #[test]
        fn quat_norm_multiplicative(a in arb_quat(), b in arb_quat()) {
            let lhs = (a * b).norm_sq();
            let rhs = a.norm_sq() * b.norm_sq();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn oct_norm_multiplicative(a in arb_oct(), b in arb_oct()) {
            let lhs = (a * b).norm();
            let rhs = a.norm() * b.norm();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn oct_alternative(a in arb_oct(), b in arb_oct()) {
            prop_assert!(((a * a) * b - a * (a * b)).norm() < 1e-12);
            prop_assert!(((b * a) * a - b * (a * a)).norm() < 1e-12);
        }

        #[test]
        fn quaternion_subalgebra_agrees_exactly(a in arb_quat(), b in arb_quat()) {
            let oct = Octonion::from_quaternion(a) * Octonion::from_quaternion(b);
            let quat = a * b;
            prop_assert_eq!(oct, Octonion::from_quaternion(quat));
        }

        #[test]
        fn right_multiplication_is_orthogonal(
            x in arb_oct(),
            y in arb_oct(),
            u in arb_oct().prop_filter("nonzero", |o| o.norm() > 1e-3),
        ) {
            let u = u.scale(1.0 / u.norm());
            prop_assert!(((x * u).dot(y * u) - x.dot(y)).abs() < 1e-12);
        }
    }
}
