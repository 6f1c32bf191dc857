//! Three-stage third-order SSP Runge-Kutta integration with adaptive
//! CFL time steps (and the dt ~ dx^(5/3) override used by accuracy tests).

use crate::error::{Location, Result, SolverError};
use crate::field::FieldOps;
use crate::scheme::RhsInfo;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtMode {
    /// dt = cfl * dx / max speed (per direction minimum in 2-D).
    Standard,
    /// dt = cfl * dx^(5/3) / max speed, so time errors stay below the
    /// fifth-order spatial ones in convergence studies.
    Accuracy,
}

#[derive(Debug, Clone, Copy)]
pub struct TimeController {
    pub cfl: f64,
    pub t_final: f64,
    pub dt_mode: DtMode,
}

impl TimeController {
    pub fn new(cfl: f64, t_final: f64) -> Self {
        Self {
            cfl,
            t_final,
            dt_mode: DtMode::Standard,
        }
    }

    /// Unclipped step size from the current largest interface speeds.
    /// A zero speed means a stationary field; the caller clips to the
    /// target time.
    pub fn dt_bound(&self, dx: f64, dy: Option<f64>, info: &RhsInfo) -> f64 {
        let step_x = |a: f64, d: f64| match self.dt_mode {
            DtMode::Standard => self.cfl * d / a,
            DtMode::Accuracy => self.cfl * d.powf(5.0 / 3.0) / a,
        };
        match dy {
            None => {
                if info.max_speed_x <= 0.0 {
                    f64::INFINITY
                } else {
                    step_x(info.max_speed_x, dx)
                }
            }
            Some(dy) => {
                let ax = if info.max_speed_x <= 0.0 {
                    f64::INFINITY
                } else {
                    step_x(info.max_speed_x, dx)
                };
                let ay = if info.max_speed_y <= 0.0 {
                    f64::INFINITY
                } else {
                    step_x(info.max_speed_y, dy)
                };
                ax.min(ay)
            }
        }
    }

    /// Step size clipped to land exactly on `stop`.
    pub fn dt(&self, dx: f64, dy: Option<f64>, info: &RhsInfo, t: f64, stop: f64) -> f64 {
        self.dt_bound(dx, dy, info).min(stop - t)
    }
}

/// Stage buffers for the three-stage scheme.
pub struct RkScratch<F> {
    u1: F,
    u2: F,
    tend: F,
}

impl<F: Clone> RkScratch<F> {
    pub fn like(u: &F) -> Self {
        Self {
            u1: u.clone(),
            u2: u.clone(),
            tend: u.clone(),
        }
    }
}

fn check_finite<F: FieldOps>(u: &F, t: f64) -> Result<()> {
    if let Some(i) = u.first_non_finite() {
        return Err(SolverError::NonFinite {
            time: t,
            location: Location::Cell { i },
        });
    }
    Ok(())
}

/// The three Shu-Osher stages, given the already computed stage-0 tendency
/// in `scratch.tend`:
///   U1      = U + dt L(U)
///   U2      = (3 U + U1 + dt L(U1)) / 4
///   U^(n+1) = (U + 2 U2 + 2 dt L(U2)) / 3
fn stages_from_first<F: FieldOps>(
    u: &mut F,
    dt: f64,
    t: f64,
    rhs: &mut impl FnMut(&mut F, &mut F) -> Result<RhsInfo>,
    scratch: &mut RkScratch<F>,
) -> Result<()> {
    scratch.u1.assign_lincomb2(1.0, u, dt, &scratch.tend);
    check_finite(&scratch.u1, t)?;
    rhs(&mut scratch.u1, &mut scratch.tend)?;
    scratch.u2.assign_stage2(u, &scratch.u1, dt, &scratch.tend);
    check_finite(&scratch.u2, t)?;
    rhs(&mut scratch.u2, &mut scratch.tend)?;
    u.stage3_inplace(&scratch.u2, dt, &scratch.tend);
    check_finite(u, t)?;
    Ok(())
}

/// One SSP-RK3 step with a given dt. `rhs(state, tendency)` must fill the
/// state's ghost cells itself (it is called on intermediate stages too).
pub fn ssp_rk3_step<F: FieldOps>(
    u: &mut F,
    dt: f64,
    rhs: &mut impl FnMut(&mut F, &mut F) -> Result<RhsInfo>,
    scratch: &mut RkScratch<F>,
) -> Result<RhsInfo> {
    let info = rhs(u, &mut scratch.tend)?;
    stages_from_first(u, dt, f64::NAN, rhs, scratch)?;
    Ok(info)
}

#[derive(Debug)]
pub struct IntegrateOutcome {
    pub steps: u64,
    pub t: f64,
}

/// Advance from `t_start` to `t_stop`. The step size is recomputed once
/// per step from the stage-0 speeds and clipped so the final step lands
/// exactly on `t_stop`.
#[allow(clippy::too_many_arguments)]
pub fn integrate_to<F: FieldOps>(
    u: &mut F,
    t_start: f64,
    t_stop: f64,
    controller: &TimeController,
    dx: f64,
    dy: Option<f64>,
    rhs: &mut impl FnMut(&mut F, &mut F) -> Result<RhsInfo>,
    scratch: &mut RkScratch<F>,
) -> Result<IntegrateOutcome> {
    let mut t = t_start;
    let mut steps = 0u64;
    let tol = 1e-14 * t_stop.abs().max(1.0);
    while t_stop - t > tol {
        let info = rhs(u, &mut scratch.tend)?;
        let dt = controller.dt(dx, dy, &info, t, t_stop);
        if !dt.is_finite() || dt <= 0.0 {
            return Err(SolverError::Config(format!(
                "nonpositive time step {dt} at t = {t}"
            )));
        }
        let clipped = dt >= t_stop - t - tol;
        stages_from_first(u, dt, t, rhs, scratch)?;
        steps += 1;
        t = if clipped { t_stop } else { t + dt };
    }
    Ok(IntegrateOutcome { steps, t: t_stop })
}
