use std::ops::Mul;

use num_complex::Complex64;

use crate::error::BraidError;

/// Tolerance used when validating unitarity of generators and products.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2x2 complex matrix in row-major order, used for single-qubit gates and
/// braid-group representatives.
///
/// Products of unitaries stay unitary up to rounding, so `Mul` does not
/// re-check. Matrices from outside the crate go through [`Unitary2::new`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2(pub(crate) [[Complex64; 2]; 2]);

impl Unitary2 {
    pub const IDENTITY: Unitary2 = Unitary2([[ONE, ZERO], [ZERO, ONE]]);

    /// Checked construction, rejects matrices further than `1e-10` from
    /// unitary.
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self, BraidError> {
        Self::with_tolerance(entries, UNITARY_TOLERANCE)
    }

    pub fn with_tolerance(entries: [[Complex64; 2]; 2], tolerance: f64) -> Result<Self, BraidError> {
        let m = Unitary2(entries);
        let residual = m.unitarity_residual();
        if residual.is_finite() && residual <= tolerance {
            Ok(m)
        } else {
            Err(BraidError::NotUnitary { residual })
        }
    }

    /// Wraps the entries without checking unitarity.
    pub fn from_entries_unchecked(entries: [[Complex64; 2]; 2]) -> Self {
        Unitary2(entries)
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[row][col]
    }

    /// Max-abs entry of `U U^dagger - I`.
    pub fn unitarity_residual(&self) -> f64 {
        let p = *self * self.adjoint();
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                let target = if r == c { ONE } else { ZERO };
                worst = worst.max((p.0[r][c] - target).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_residual() <= tolerance
    }

    pub fn adjoint(&self) -> Unitary2 {
        let m = &self.0;
        Unitary2([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn transpose(&self) -> Unitary2 {
        let m = &self.0;
        Unitary2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn scale(&self, factor: Complex64) -> Unitary2 {
        let m = &self.0;
        Unitary2([
            [m[0][0] * factor, m[0][1] * factor],
            [m[1][0] * factor, m[1][1] * factor],
        ])
    }

    /// Integer power; negative exponents use the adjoint as inverse.
    pub fn pow(&self, exponent: i64) -> Unitary2 {
        let mut base = if exponent < 0 { self.adjoint() } else { *self };
        let mut e = exponent.unsigned_abs();
        let mut acc = Unitary2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Max-abs entrywise difference.
    pub fn max_abs_diff(&self, other: &Unitary2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    /// Projects onto SU(2) by dividing out `sqrt(det)`, then fixes the
    /// remaining sign so that the first non-negligible entry in row-major
    /// order has positive real part (positive imaginary part when the real
    /// part is within `1e-12` of zero).
    pub fn phase_canonicalize(&self) -> Unitary2 {
        let root = self.det().sqrt();
        let mut m = if root.norm() > 0.0 { self.scale(root.inv()) } else { *self };
        let lead = m
            .0
            .iter()
            .flatten()
            .copied()
            .find(|z| z.norm() > 1e-12)
            .unwrap_or(ONE);
        let flip = if lead.re.abs() > 1e-12 { lead.re < 0.0 } else { lead.im < 0.0 };
        if flip {
            m = m.scale(-ONE);
        }
        m
    }
}

impl Mul for Unitary2 {
    type Output = Unitary2;

    #[inline]
    fn mul(self, rhs: Unitary2) -> Unitary2 {
        let a = &self.0;
        let b = &rhs.0;
        Unitary2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl Default for Unitary2 {
    fn default() -> Self {
        Unitary2::IDENTITY
    }
}

/// Phase-invariant distance `sqrt(2 - |tr(W U^dagger)|)` without input
/// validation.
///
/// Evaluated as `sqrt(||W - e^{i phi} U||_F^2 / 2)` with `e^{i phi}` the phase
/// of `tr(W U^dagger)`. For unitary inputs the two forms agree exactly, and
/// this one does not lose precision to cancellation when `W` is close to `U`.
#[inline]
pub fn distance_unchecked(w: &Unitary2, u: &Unitary2) -> f64 {
    let a = &w.0;
    let b = &u.0;
    let tr = a[0][0] * b[0][0].conj()
        + a[0][1] * b[0][1].conj()
        + a[1][0] * b[1][0].conj()
        + a[1][1] * b[1][1].conj();
    let n = tr.norm();
    let phase = if n > 0.0 { tr / n } else { ONE };
    let mut sq = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            sq += (a[r][c] - phase * b[r][c]).norm_sqr();
        }
    }
    (0.5 * sq).max(0.0).sqrt()
}

/// Phase-invariant gate distance. Both inputs must be unitary within `1e-8`.
pub fn distance(w: &Unitary2, u: &Unitary2) -> Result<f64, BraidError> {
    for m in [w, u] {
        let residual = m.unitarity_residual();
        if residual.is_nan() || residual > 1e-8 {
            return Err(BraidError::NotUnitary { residual });
        }
    }
    Ok(distance_unchecked(w, u))
}
