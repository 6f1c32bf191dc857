//! 1-D Euler equations of gas dynamics with the ideal-gas law.

use crate::field::{Mat, State};
use crate::system::{Axis, System};

pub struct Euler1D {
    pub gamma: f64,
}

impl Euler1D {
    pub fn new(gamma: f64) -> Self {
        Self { gamma }
    }

    #[inline]
    pub fn pressure(&self, u: &State<3>) -> f64 {
        (self.gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0])
    }

    #[inline]
    pub fn sound_speed(&self, u: &State<3>) -> f64 {
        (self.gamma * self.pressure(u) / u[0]).sqrt()
    }

    pub fn prim_to_cons(&self, rho: f64, vel: f64, p: f64) -> State<3> {
        [
            rho,
            rho * vel,
            p / (self.gamma - 1.0) + 0.5 * rho * vel * vel,
        ]
    }

    pub fn cons_to_prim(&self, u: &State<3>) -> (f64, f64, f64) {
        (u[0], u[1] / u[0], self.pressure(u))
    }
}

impl System<3> for Euler1D {
    fn flux(&self, _axis: Axis, u: &State<3>) -> State<3> {
        let vel = u[1] / u[0];
        let p = self.pressure(u);
        [u[1], u[1] * vel + p, vel * (u[2] + p)]
    }

    fn max_wave_speed(&self, _axis: Axis, u: &State<3>) -> f64 {
        let vel = u[1] / u[0];
        vel.abs() + self.sound_speed(u)
    }

    fn admissible(&self, u: &State<3>) -> bool {
        u[0] > 0.0 && u[2] - 0.5 * u[1] * u[1] / u[0] > 0.0
    }

    fn normal_momentum(&self, _axis: Axis) -> Option<usize> {
        Some(1)
    }

    fn has_char_frame(&self) -> bool {
        true
    }

    fn char_frame(&self, _axis: Axis, u: &State<3>) -> Result<(Mat<3>, Mat<3>), String> {
        if !(u[0] > 0.0) {
            return Err(format!("nonpositive density {}", u[0]));
        }
        let p = self.pressure(u);
        if !(p > 0.0) {
            return Err(format!("nonpositive pressure {p}"));
        }
        let vel = u[1] / u[0];
        let c = (self.gamma * p / u[0]).sqrt();
        let h = (u[2] + p) / u[0];
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * vel * vel;
        let left = [
            [
                0.5 * (b2 + vel / c),
                -0.5 * (b1 * vel + 1.0 / c),
                0.5 * b1,
            ],
            [1.0 - b2, b1 * vel, -b1],
            [
                0.5 * (b2 - vel / c),
                -0.5 * (b1 * vel - 1.0 / c),
                0.5 * b1,
            ],
        ];
        let right = [
            [1.0, 1.0, 1.0],
            [vel - c, vel, vel + c],
            [h - vel * c, 0.5 * vel * vel, h + vel * c],
        ];
        Ok((left, right))
    }

    fn conserved_names(&self) -> &'static [&'static str] {
        &["rho", "mom", "E"]
    }

    fn derived_names(&self) -> &'static [&'static str] {
        &["u", "p"]
    }

    fn derived_values(&self, u: &State<3>) -> Vec<f64> {
        vec![u[1] / u[0], self.pressure(u)]
    }
}

/// Smooth isentropic initial data of the accuracy test: a sine velocity
/// with density and pressure slaved to it.
pub fn smooth_ic(gamma: f64, x: f64) -> State<3> {
    use std::f64::consts::PI;
    let vel = (PI * x / 5.0 + PI / 4.0).sin();
    let rho = ((gamma - 1.0) / (2.0 * gamma.sqrt()) * (vel + 10.0)).powf(2.0 / (gamma - 1.0));
    let p = rho.powf(gamma);
    Euler1D::new(gamma).prim_to_cons(rho, vel, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::matvec;

    const GAMMA: f64 = 1.4;

    #[test]
    fn flux_at_rest() {
        let m = Euler1D::new(GAMMA);
        let u = m.prim_to_cons(1.0, 0.0, 1.0);
        let f = m.flux(Axis::X, &u);
        assert!((f[0]).abs() < 1e-15);
        assert!((f[1] - 1.0).abs() < 1e-15);
        assert!((f[2]).abs() < 1e-15);
    }

    #[test]
    fn sound_speed_at_unit_state() {
        let m = Euler1D::new(GAMMA);
        let u = m.prim_to_cons(1.0, 0.0, 1.0);
        assert!((m.max_wave_speed(Axis::X, &u) - GAMMA.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn eos_round_trip() {
        let m = Euler1D::new(GAMMA);
        for &(r, v, p) in &[(1.0, 0.3, 1.0), (0.125, -2.0, 0.1), (7.3, 11.0, 980.0)] {
            let u = m.prim_to_cons(r, v, p);
            let (r2, v2, p2) = m.cons_to_prim(&u);
            assert!((r - r2).abs() < 1e-13 * r.abs());
            assert!((v - v2).abs() < 1e-13 * v.abs().max(1.0));
            assert!((p - p2).abs() < 1e-13 * p.abs());
        }
    }

    #[test]
    fn frame_inverts_and_diagonalizes() {
        let m = Euler1D::new(GAMMA);
        let u = m.prim_to_cons(1.0, 0.3, 1.0);
        let (l, r) = m.char_frame(Axis::X, &u).unwrap();
        // L R = I
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0.0;
                for k in 0..3 {
                    acc += l[i][k] * r[k][j];
                }
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((acc - want).abs() < 1e-12, "LR[{i}][{j}] = {acc}");
            }
        }
        // L A R = diag(u - c, u, u + c) with A from finite differences
        let h = 1e-7;
        let mut a = [[0.0; 3]; 3];
        for j in 0..3 {
            let mut up = u;
            let mut dn = u;
            up[j] += h;
            dn[j] -= h;
            let fp = m.flux(Axis::X, &up);
            let fm = m.flux(Axis::X, &dn);
            for i in 0..3 {
                a[i][j] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let vel = 0.3;
        let c = m.sound_speed(&u);
        let lam = [vel - c, vel, vel + c];
        for i in 0..3 {
            for j in 0..3 {
                let mut ar = [0.0; 3];
                for k in 0..3 {
                    ar[k] = r[k][j];
                }
                let arj = matvec(&a, &ar);
                let mut acc = 0.0;
                for k in 0..3 {
                    acc += l[i][k] * arj[k];
                }
                let want = if i == j { lam[j] } else { 0.0 };
                assert!((acc - want).abs() < 1e-6, "LAR[{i}][{j}] = {acc} vs {want}");
            }
        }
    }

    #[test]
    fn smooth_ic_matches_closed_form() {
        use std::f64::consts::PI;
        let u = smooth_ic(GAMMA, 0.0);
        let vel = (PI / 4.0).sin();
        assert!((u[1] / u[0] - vel).abs() < 1e-14);
        let rho = ((GAMMA - 1.0) / (2.0 * GAMMA.sqrt()) * (vel + 10.0)).powf(2.0 / (GAMMA - 1.0));
        assert!((u[0] - rho).abs() < 1e-13 * rho);
    }
}
