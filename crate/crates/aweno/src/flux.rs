//! Central (local Lax-Friedrichs / Rusanov) finite-volume numerical fluxes
//! and local speed estimation.

use crate::field::State;
use crate::system::{Axis, System};

/// Rusanov flux from precomputed one-sided physical (or global) flux values:
/// (f(U-) + f(U+))/2 - a/2 (U+ - U-).
#[inline]
pub fn rusanov<const D: usize>(
    f_minus: &State<D>,
    f_plus: &State<D>,
    speed: f64,
    u_minus: &State<D>,
    u_plus: &State<D>,
) -> State<D> {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = 0.5 * (f_minus[k] + f_plus[k]) - 0.5 * speed * (u_plus[k] - u_minus[k]);
    }
    out
}

/// Convenience form evaluating the model flux itself.
pub fn rusanov_flux<M: System<D>, const D: usize>(
    model: &M,
    axis: Axis,
    u_minus: &State<D>,
    u_plus: &State<D>,
    speed: f64,
) -> State<D> {
    rusanov(
        &model.flux(axis, u_minus),
        &model.flux(axis, u_plus),
        speed,
        u_minus,
        u_plus,
    )
}

/// Local propagation speed: the largest absolute eigenvalue over the two
/// one-sided states.
#[inline]
pub fn local_speed<M: System<D>, const D: usize>(
    model: &M,
    axis: Axis,
    u_minus: &State<D>,
    u_plus: &State<D>,
) -> f64 {
    model
        .max_wave_speed(axis, u_minus)
        .max(model.max_wave_speed(axis, u_plus))
}
