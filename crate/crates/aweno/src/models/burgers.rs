use crate::field::{Mat, State};
use crate::system::{Axis, System};

/// Inviscid Burgers equation, f(u) = u^2 / 2.
pub struct Burgers;

impl System<1> for Burgers {
    fn flux(&self, _axis: Axis, u: &State<1>) -> State<1> {
        [0.5 * u[0] * u[0]]
    }

    fn max_wave_speed(&self, _axis: Axis, u: &State<1>) -> f64 {
        u[0].abs()
    }

    fn admissible(&self, u: &State<1>) -> bool {
        u[0].is_finite()
    }

    fn has_char_frame(&self) -> bool {
        true
    }

    // Identity frame: the characteristic path of a scalar model must match
    // the componentwise path bitwise.
    fn char_frame(&self, _axis: Axis, _u: &State<1>) -> Result<(Mat<1>, Mat<1>), String> {
        Ok(([[1.0]], [[1.0]]))
    }

    fn conserved_names(&self) -> &'static [&'static str] {
        &["u"]
    }
}

/// Sine initial datum used by the periodic scalar tests.
pub fn sine_ic(x: f64) -> State<1> {
    [0.25 + 0.5 * (2.0 * std::f64::consts::PI * x).sin()]
}
