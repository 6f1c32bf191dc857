//! Fifth-order WENO-Z interpolation of point values to cell interfaces.
//!
//! This interpolates *point values* (not cell averages). The three
//! candidate quadratics through the 5-point stencil w_{j-2}..w_{j+2},
//! evaluated at x_{j+1/2}, are
//!
//!   q0 = (3 w_{j-2} - 10 w_{j-1} + 15 w_j) / 8
//!   q1 = (-w_{j-1} + 6 w_j + 3 w_{j+1}) / 8
//!   q2 = (3 w_j + 6 w_{j+1} - w_{j+2}) / 8
//!
//! with linear weights (1, 10, 5)/16, whose combination is the fifth-order
//! interpolant (3, -20, 90, 60, -5)/128. Nonlinear weights follow the
//! WENO-Z construction: Jiang-Shu smoothness indicators, global indicator
//! tau = |beta_0 - beta_2|, alpha_k = d_k (1 + (tau/(beta_k + eps))^p).

/// Regularization and power of the WENO-Z weights. The reference scheme
/// does not pin these; they are gathered here so a run configuration can
/// carry its own values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoParams {
    pub eps: f64,
    pub power: i32,
}

impl Default for WenoParams {
    fn default() -> Self {
        Self {
            eps: 1e-12,
            power: 2,
        }
    }
}

const D0: f64 = 1.0 / 16.0;
const D1: f64 = 10.0 / 16.0;
const D2: f64 = 5.0 / 16.0;

#[inline]
pub(crate) fn candidates(w: &[f64; 5]) -> [f64; 3] {
    [
        (3.0 * w[0] - 10.0 * w[1] + 15.0 * w[2]) / 8.0,
        (-w[1] + 6.0 * w[2] + 3.0 * w[3]) / 8.0,
        (3.0 * w[2] + 6.0 * w[3] - w[4]) / 8.0,
    ]
}

#[inline]
pub(crate) fn smoothness(w: &[f64; 5]) -> [f64; 3] {
    let c = 13.0 / 12.0;
    let b0 = c * (w[0] - 2.0 * w[1] + w[2]).powi(2) + 0.25 * (w[0] - 4.0 * w[1] + 3.0 * w[2]).powi(2);
    let b1 = c * (w[1] - 2.0 * w[2] + w[3]).powi(2) + 0.25 * (w[1] - w[3]).powi(2);
    let b2 = c * (w[2] - 2.0 * w[3] + w[4]).powi(2) + 0.25 * (3.0 * w[2] - 4.0 * w[3] + w[4]).powi(2);
    [b0, b1, b2]
}

/// Nonlinear WENO-Z weights; nonnegative and summing to one.
#[inline]
pub fn weights(w: &[f64; 5], p: &WenoParams) -> [f64; 3] {
    let beta = smoothness(w);
    let tau = (beta[0] - beta[2]).abs();
    let a0 = D0 * (1.0 + (tau / (beta[0] + p.eps)).powi(p.power));
    let a1 = D1 * (1.0 + (tau / (beta[1] + p.eps)).powi(p.power));
    let a2 = D2 * (1.0 + (tau / (beta[2] + p.eps)).powi(p.power));
    let s = a0 + a1 + a2;
    [a0 / s, a1 / s, a2 / s]
}

/// Left-sided interpolant w^-_{j+1/2} from (w_{j-2}, ..., w_{j+2}).
#[inline]
pub fn wenoz_minus(w: &[f64; 5], p: &WenoParams) -> f64 {
    let q = candidates(w);
    let om = weights(w, p);
    om[0] * q[0] + om[1] * q[1] + om[2] * q[2]
}

/// Right-sided interpolant w^+_{j+1/2}: the mirror image of the left-sided
/// one, fed the reversed stencil (w_{j+3}, ..., w_{j-1}).
#[inline]
pub fn wenoz_plus(w: &[f64; 5], p: &WenoParams) -> f64 {
    let rev = [w[4], w[3], w[2], w[1], w[0]];
    wenoz_minus(&rev, p)
}
