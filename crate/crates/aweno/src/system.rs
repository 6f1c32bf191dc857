//! Model traits: what a hyperbolic system must provide to the solvers.

use crate::field::{Mat, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// A conservative hyperbolic system U_t + F(U)_x (+ G(U)_y) = 0.
///
/// `max_wave_speed` must bound the absolute eigenvalues of the directional
/// quasilinear matrix (for nonconservative systems, of dF/dU - B).
pub trait System<const D: usize> {
    fn flux(&self, axis: Axis, u: &State<D>) -> State<D>;

    fn max_wave_speed(&self, axis: Axis, u: &State<D>) -> f64;

    fn admissible(&self, u: &State<D>) -> bool;

    /// Component of the normal momentum for solid-wall mirroring.
    fn normal_momentum(&self, _axis: Axis) -> Option<usize> {
        None
    }

    /// Whether the model provides a local characteristic decomposition.
    fn has_char_frame(&self) -> bool {
        false
    }

    /// Left/right eigenvector matrices at an (average) state. Only called
    /// when `has_char_frame` is true; an Err marks a non-hyperbolic state.
    fn char_frame(
        &self,
        _axis: Axis,
        _u_avg: &State<D>,
    ) -> std::result::Result<(Mat<D>, Mat<D>), String> {
        Err("model has no characteristic decomposition".into())
    }

    /// Ghost state for a Dirichlet boundary holding `fixed` on the
    /// boundary; position-dependent models may move it along their
    /// equilibrium manifold.
    fn dirichlet_ghost(&self, fixed: &State<D>, _pos_ghost: f64, _axis: Axis) -> State<D> {
        *fixed
    }

    /// Names of the conserved components, for snapshot headers.
    fn conserved_names(&self) -> &'static [&'static str];

    /// Names of derived (primitive) quantities appended to snapshots.
    fn derived_names(&self) -> &'static [&'static str] {
        &[]
    }

    fn derived_values(&self, _u: &State<D>) -> Vec<f64> {
        Vec::new()
    }
}

/// Extension for nonconservative systems U_t + F_x = B(U) U_x handled by
/// flux globalization: the solver reconstructs the model's equilibrium-type
/// variables, accumulates the global integral of B(U)U_x from per-cell and
/// per-interface path terms, and works with the global flux K = F - R.
pub trait GlobalFluxSystem<const D: usize>: System<D> {
    /// Variables handed to the WENO interpolation (equilibrium variables
    /// where the model has them; more generally the reconstruction set).
    fn recon_vars(&self, axis: Axis, u: &State<D>, pos: f64) -> State<D>;

    /// Solve recon_vars(U) = w for U at a given position.
    fn recon_inverse(
        &self,
        axis: Axis,
        w: &State<D>,
        pos: f64,
    ) -> std::result::Result<State<D>, String>;

    /// Characteristic frame acting on reconstruction variables.
    fn recon_char_frame(
        &self,
        _axis: Axis,
        _w_avg: &State<D>,
    ) -> std::result::Result<(Mat<D>, Mat<D>), String> {
        Err("model has no characteristic decomposition".into())
    }

    /// Path integral of B along the linear path between the one-sided
    /// interface states (the jump term of the path-conservative scheme).
    fn path_term(
        &self,
        axis: Axis,
        u_minus: &State<D>,
        u_plus: &State<D>,
        w_minus: &State<D>,
        w_plus: &State<D>,
        pos: f64,
    ) -> State<D>;

    /// Integral of B(U)U_x over one cell, from the inner one-sided face
    /// values and the cell-center value.
    #[allow(clippy::too_many_arguments)]
    fn cell_term(
        &self,
        axis: Axis,
        u_left: &State<D>,
        u_center: &State<D>,
        u_right: &State<D>,
        w_left: &State<D>,
        w_center: &State<D>,
        w_right: &State<D>,
        pos_center: f64,
        d: f64,
    ) -> State<D>;

    /// Integral of B(U)U_x over the left half cell (inner left face to the
    /// center), used by the point-value global flux of the old scheme.
    #[allow(clippy::too_many_arguments)]
    fn half_cell_term(
        &self,
        axis: Axis,
        u_left: &State<D>,
        u_center: &State<D>,
        u_right: &State<D>,
        w_left: &State<D>,
        w_center: &State<D>,
        w_right: &State<D>,
        pos_center: f64,
        d: f64,
    ) -> State<D>;

    /// True when B(U)U_x vanishes identically for every admissible state;
    /// all global terms are then exact zeros and the scheme degenerates to
    /// the conservative one bitwise.
    fn product_vanishes(&self) -> bool {
        false
    }
}

/// Adapter running a conservative model through the flux-globalization
/// machinery with B = 0: reconstruction is the identity and every global
/// term is exactly zero.
pub struct Conservativized<M>(pub M);

impl<M: System<D>, const D: usize> System<D> for Conservativized<M> {
    fn flux(&self, axis: Axis, u: &State<D>) -> State<D> {
        self.0.flux(axis, u)
    }
    fn max_wave_speed(&self, axis: Axis, u: &State<D>) -> f64 {
        self.0.max_wave_speed(axis, u)
    }
    fn admissible(&self, u: &State<D>) -> bool {
        self.0.admissible(u)
    }
    fn normal_momentum(&self, axis: Axis) -> Option<usize> {
        self.0.normal_momentum(axis)
    }
    fn has_char_frame(&self) -> bool {
        self.0.has_char_frame()
    }
    fn char_frame(
        &self,
        axis: Axis,
        u_avg: &State<D>,
    ) -> std::result::Result<(Mat<D>, Mat<D>), String> {
        self.0.char_frame(axis, u_avg)
    }
    fn conserved_names(&self) -> &'static [&'static str] {
        self.0.conserved_names()
    }
    fn derived_names(&self) -> &'static [&'static str] {
        self.0.derived_names()
    }
    fn derived_values(&self, u: &State<D>) -> Vec<f64> {
        self.0.derived_values(u)
    }
}

impl<M: System<D>, const D: usize> GlobalFluxSystem<D> for Conservativized<M> {
    fn recon_vars(&self, _axis: Axis, u: &State<D>, _pos: f64) -> State<D> {
        *u
    }
    fn recon_inverse(
        &self,
        _axis: Axis,
        w: &State<D>,
        _pos: f64,
    ) -> std::result::Result<State<D>, String> {
        Ok(*w)
    }
    fn recon_char_frame(
        &self,
        axis: Axis,
        w_avg: &State<D>,
    ) -> std::result::Result<(Mat<D>, Mat<D>), String> {
        self.0.char_frame(axis, w_avg)
    }
    fn path_term(
        &self,
        _axis: Axis,
        _um: &State<D>,
        _up: &State<D>,
        _wm: &State<D>,
        _wp: &State<D>,
        _pos: f64,
    ) -> State<D> {
        [0.0; D]
    }
    fn cell_term(
        &self,
        _axis: Axis,
        _ul: &State<D>,
        _uc: &State<D>,
        _ur: &State<D>,
        _wl: &State<D>,
        _wc: &State<D>,
        _wr: &State<D>,
        _pos: f64,
        _d: f64,
    ) -> State<D> {
        [0.0; D]
    }
    fn half_cell_term(
        &self,
        _axis: Axis,
        _ul: &State<D>,
        _uc: &State<D>,
        _ur: &State<D>,
        _wl: &State<D>,
        _wc: &State<D>,
        _wr: &State<D>,
        _pos: f64,
        _d: f64,
    ) -> State<D> {
        [0.0; D]
    }
    fn product_vanishes(&self) -> bool {
        true
    }
}

/// Derivative samples of the quadratic through (x-d/2, e_l), (x, e_c),
/// (x+d/2, e_r), evaluated at the three nodes. All three vanish exactly
/// when the e values are equal, which is what makes the quadratures
/// well-balanced.
#[inline]
pub fn quadratic_derivs(e_l: f64, e_c: f64, e_r: f64, d: f64) -> (f64, f64, f64) {
    let dl = (4.0 * e_c - 3.0 * e_l - e_r) / d;
    let dc = (e_r - e_l) / d;
    let dr = (3.0 * e_r + e_l - 4.0 * e_c) / d;
    (dl, dc, dr)
}

/// Simpson quadrature of m(x) e'(x) over a cell of size d, with e' sampled
/// from the interpolating quadratic. Exact for the steady-state structure
/// (it integrates p p' exactly for the interpolant p when m tracks e).
#[inline]
pub fn simpson_cell(m_l: f64, m_c: f64, m_r: f64, e_l: f64, e_c: f64, e_r: f64, d: f64) -> f64 {
    let (dl, dc, dr) = quadratic_derivs(e_l, e_c, e_r, d);
    d / 6.0 * (m_l * dl + 4.0 * m_c * dc + m_r * dr)
}

/// Same quadrature restricted to the left half cell [x-d/2, x]; the
/// midpoint value of m comes from the quadratic through the three samples.
#[inline]
pub fn simpson_half_cell(
    m_l: f64,
    m_c: f64,
    m_r: f64,
    e_l: f64,
    e_c: f64,
    e_r: f64,
    d: f64,
) -> f64 {
    let (dl, dc, _) = quadratic_derivs(e_l, e_c, e_r, d);
    let m_mid = (3.0 * m_l + 6.0 * m_c - m_r) / 8.0;
    let d_mid = 2.0 * (e_c - e_l) / d;
    d / 12.0 * (m_l * dl + 4.0 * m_mid * d_mid + m_c * dc)
}
