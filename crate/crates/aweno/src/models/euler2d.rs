//! 2-D Euler equations of gas dynamics with the ideal-gas law.

use crate::field::{Mat, State};
use crate::system::{Axis, System};

pub struct Euler2D {
    pub gamma: f64,
}

impl Euler2D {
    pub fn new(gamma: f64) -> Self {
        Self { gamma }
    }

    #[inline]
    pub fn pressure(&self, u: &State<4>) -> f64 {
        (self.gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0])
    }

    pub fn prim_to_cons(&self, rho: f64, vx: f64, vy: f64, p: f64) -> State<4> {
        [
            rho,
            rho * vx,
            rho * vy,
            p / (self.gamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy),
        ]
    }

    pub fn cons_to_prim(&self, u: &State<4>) -> (f64, f64, f64, f64) {
        (u[0], u[1] / u[0], u[2] / u[0], self.pressure(u))
    }
}

impl System<4> for Euler2D {
    fn flux(&self, axis: Axis, u: &State<4>) -> State<4> {
        let p = self.pressure(u);
        match axis {
            Axis::X => {
                let vel = u[1] / u[0];
                [u[1], u[1] * vel + p, u[2] * vel, vel * (u[3] + p)]
            }
            Axis::Y => {
                let vel = u[2] / u[0];
                [u[2], u[1] * vel, u[2] * vel + p, vel * (u[3] + p)]
            }
        }
    }

    fn max_wave_speed(&self, axis: Axis, u: &State<4>) -> f64 {
        let c = (self.gamma * self.pressure(u) / u[0]).sqrt();
        let vel = match axis {
            Axis::X => u[1] / u[0],
            Axis::Y => u[2] / u[0],
        };
        vel.abs() + c
    }

    fn admissible(&self, u: &State<4>) -> bool {
        u[0] > 0.0 && u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0] > 0.0
    }

    fn normal_momentum(&self, axis: Axis) -> Option<usize> {
        Some(match axis {
            Axis::X => 1,
            Axis::Y => 2,
        })
    }

    fn has_char_frame(&self) -> bool {
        true
    }

    fn char_frame(&self, axis: Axis, u: &State<4>) -> Result<(Mat<4>, Mat<4>), String> {
        if !(u[0] > 0.0) {
            return Err(format!("nonpositive density {}", u[0]));
        }
        let p = self.pressure(u);
        if !(p > 0.0) {
            return Err(format!("nonpositive pressure {p}"));
        }
        let vx = u[1] / u[0];
        let vy = u[2] / u[0];
        let c = (self.gamma * p / u[0]).sqrt();
        let h = (u[3] + p) / u[0];
        let q2 = vx * vx + vy * vy;
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        let (nx, ny) = match axis {
            Axis::X => (1.0, 0.0),
            Axis::Y => (0.0, 1.0),
        };
        let un = vx * nx + vy * ny;
        let left = [
            [
                0.5 * (b2 + un / c),
                -0.5 * (b1 * vx + nx / c),
                -0.5 * (b1 * vy + ny / c),
                0.5 * b1,
            ],
            [ny * vx - nx * vy, -ny, nx, 0.0],
            [1.0 - b2, b1 * vx, b1 * vy, -b1],
            [
                0.5 * (b2 - un / c),
                -0.5 * (b1 * vx - nx / c),
                -0.5 * (b1 * vy - ny / c),
                0.5 * b1,
            ],
        ];
        let right = [
            [1.0, 0.0, 1.0, 1.0],
            [vx - c * nx, -ny, vx, vx + c * nx],
            [vy - c * ny, nx, vy, vy + c * ny],
            [h - c * un, vx * -ny + vy * nx, 0.5 * q2, h + c * un],
        ];
        Ok((left, right))
    }

    fn conserved_names(&self) -> &'static [&'static str] {
        &["rho", "momx", "momy", "E"]
    }

    fn derived_names(&self) -> &'static [&'static str] {
        &["u", "v", "p"]
    }

    fn derived_values(&self, u: &State<4>) -> Vec<f64> {
        vec![u[1] / u[0], u[2] / u[0], self.pressure(u)]
    }
}
