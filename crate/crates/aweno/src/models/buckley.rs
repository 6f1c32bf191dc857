use crate::field::{Mat, State};
use crate::system::{Axis, System};

/// Buckley-Leverett flux with gravitational effects:
/// f(u) = u^2 / (u^2 + (1-u)^2) * (1 - k (1-u)^2).
pub struct BuckleyLeverett {
    pub k: f64,
}

impl BuckleyLeverett {
    #[inline]
    fn f(&self, u: f64) -> f64 {
        let b = u * u + (1.0 - u) * (1.0 - u);
        u * u / b * (1.0 - self.k * (1.0 - u) * (1.0 - u))
    }

    /// Analytic derivative; the wave-speed estimate evaluates it at the
    /// two one-sided states only.
    #[inline]
    pub fn df(&self, u: f64) -> f64 {
        let om = 1.0 - u;
        let b = u * u + om * om;
        let g = 1.0 - self.k * om * om;
        2.0 * u * om * g / (b * b) + 2.0 * self.k * u * u * om / b
    }
}

impl System<1> for BuckleyLeverett {
    fn flux(&self, _axis: Axis, u: &State<1>) -> State<1> {
        [self.f(u[0])]
    }

    fn max_wave_speed(&self, _axis: Axis, u: &State<1>) -> f64 {
        self.df(u[0]).abs()
    }

    fn admissible(&self, u: &State<1>) -> bool {
        u[0].is_finite()
    }

    fn has_char_frame(&self) -> bool {
        true
    }

    fn char_frame(&self, _axis: Axis, _u: &State<1>) -> Result<(Mat<1>, Mat<1>), String> {
        Ok(([[1.0]], [[1.0]]))
    }

    fn conserved_names(&self) -> &'static [&'static str] {
        &["u"]
    }
}
