//! High-order correction terms of the fifth-order A-WENO flux: discrete
//! second and fourth derivatives of the flux at each interface, computed
//! either from six point-value fluxes (the original scheme) or from five
//! stored interface FV fluxes (the efficient variant).

use crate::field::State;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionTerms<const D: usize> {
    pub d2: State<D>,
    pub d4: State<D>,
}

/// Point-value stencil: six consecutive fluxes F_{j-2}..F_{j+3} around the
/// interface j+1/2.
///
///   d2 = (-5 F0 + 39 F1 - 34 F2 - 34 F3 + 39 F4 - 5 F5) / (48 dx^2)
///   d4 = (F0 - 3 F1 + 2 F2 + 2 F3 - 3 F4 + F5) / (2 dx^4)
pub fn correction_old<const D: usize>(f: &[State<D>], dx: f64) -> CorrectionTerms<D> {
    debug_assert!(f.len() >= 6);
    let s2 = 1.0 / (48.0 * dx * dx);
    let s4 = 1.0 / (2.0 * dx.powi(4));
    let mut d2 = [0.0; D];
    let mut d4 = [0.0; D];
    for k in 0..D {
        d2[k] = s2
            * (-5.0 * f[0][k] + 39.0 * f[1][k] - 34.0 * f[2][k] - 34.0 * f[3][k]
                + 39.0 * f[4][k]
                - 5.0 * f[5][k]);
        d4[k] = s4
            * (f[0][k] - 3.0 * f[1][k] + 2.0 * f[2][k] + 2.0 * f[3][k] - 3.0 * f[4][k] + f[5][k]);
    }
    CorrectionTerms { d2, d4 }
}

/// Interface-flux stencil: five consecutive FV fluxes at j-3/2 .. j+5/2.
///
///   d2 = (-H0 + 16 H1 - 30 H2 + 16 H3 - H4) / (12 dx^2)
///   d4 = (H0 - 4 H1 + 6 H2 - 4 H3 + H4) / dx^4
pub fn correction_new<const D: usize>(h: &[State<D>], dx: f64) -> CorrectionTerms<D> {
    debug_assert!(h.len() >= 5);
    let s2 = 1.0 / (12.0 * dx * dx);
    let s4 = 1.0 / dx.powi(4);
    let mut d2 = [0.0; D];
    let mut d4 = [0.0; D];
    for k in 0..D {
        d2[k] =
            s2 * (-h[0][k] + 16.0 * h[1][k] - 30.0 * h[2][k] + 16.0 * h[3][k] - h[4][k]);
        d4[k] = s4 * (h[0][k] - 4.0 * h[1][k] + 6.0 * h[2][k] - 4.0 * h[3][k] + h[4][k]);
    }
    CorrectionTerms { d2, d4 }
}

/// Fifth-order numerical flux: H = F_fv - dx^2/24 d2 + 7 dx^4/5760 d4.
#[inline]
pub fn assemble_awenoflux<const D: usize>(
    fv: &State<D>,
    corr: &CorrectionTerms<D>,
    dx: f64,
) -> State<D> {
    let c2 = dx * dx / 24.0;
    let c4 = 7.0 * dx.powi(4) / 5760.0;
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = fv[k] - c2 * corr.d2[k] + c4 * corr.d4[k];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample6(f: impl Fn(f64) -> f64, dx: f64) -> Vec<State<1>> {
        // cell centers around an interface at x = 0
        (-3..3).map(|i| [f((i as f64 + 0.5) * dx)]).collect()
    }

    fn sample5(f: impl Fn(f64) -> f64, dx: f64) -> Vec<State<1>> {
        // interface positions around an interface at x = 0
        (-2..=2).map(|i| [f(i as f64 * dx)]).collect()
    }

    #[test]
    fn constant_fluxes_vanish() {
        // dyadic constant: the weighted sums cancel exactly
        let c = correction_old(&vec![[7.5]; 6], 0.3);
        assert_eq!(c.d2[0], 0.0);
        assert_eq!(c.d4[0], 0.0);
        let c = correction_new(&vec![[7.5]; 5], 0.3);
        assert_eq!(c.d2[0], 0.0);
        assert_eq!(c.d4[0], 0.0);
        // generic constant: cancellation down to rounding noise
        let c = correction_old(&vec![[7.7]; 6], 0.3);
        assert!(c.d2[0].abs() < 1e-11 && c.d4[0].abs() < 1e-10);
        let c = correction_new(&vec![[7.7]; 5], 0.3);
        assert!(c.d2[0].abs() < 1e-11 && c.d4[0].abs() < 1e-10);
    }

    #[test]
    fn quadratic_and_quartic_monomials() {
        for &dx in &[1.0, 0.25] {
            let c = correction_old(&sample6(|x| x * x, dx), dx);
            assert!((c.d2[0] - 2.0).abs() < 1e-11, "{}", c.d2[0]);
            assert!(c.d4[0].abs() < 1e-10);
            let c = correction_old(&sample6(|x| x.powi(4), dx), dx);
            assert!((c.d4[0] - 24.0).abs() < 1e-9);

            let c = correction_new(&sample5(|x| x * x, dx), dx);
            assert!((c.d2[0] - 2.0).abs() < 1e-11);
            assert!(c.d4[0].abs() < 1e-10);
            let c = correction_new(&sample5(|x| x.powi(4), dx), dx);
            assert!((c.d4[0] - 24.0).abs() < 1e-9);
        }
    }

    #[test]
    fn stencils_annihilate_constants_and_linears() {
        // unit spacing so the raw weighted sums are visible directly
        for &(a, b) in &[(2.0, -1.0), (0.0, 3.0), (5.5, 0.0), (1e3, -2e2)] {
            let f = |x: f64| a + b * x;
            let scale = (a.abs() + b.abs()).max(1.0);
            let c = correction_old(&sample6(f, 1.0), 1.0);
            assert!(c.d2[0].abs() <= 1e-13 * scale);
            assert!(c.d4[0].abs() <= 1e-13 * scale);
            let c = correction_new(&sample5(f, 1.0), 1.0);
            assert!(c.d2[0].abs() <= 1e-13 * scale);
            assert!(c.d4[0].abs() <= 1e-13 * scale);
        }
    }

    #[test]
    fn degree_exactness_on_centered_monomials() {
        // exact second/fourth derivatives at the interface for monomials
        // up to degree five
        for deg in 0..=5u32 {
            let f = |x: f64| x.powi(deg as i32);
            // at x = 0 only x^2 has a nonzero second derivative and only
            // x^4 a nonzero fourth
            let d2_exact = if deg == 2 { 2.0 } else { 0.0 };
            let d4_exact = if deg == 4 { 24.0 } else { 0.0 };
            let c_old = correction_old(&sample6(f, 0.5), 0.5);
            assert!(
                (c_old.d2[0] - d2_exact).abs() < 1e-8,
                "old d2 deg {deg}: {}",
                c_old.d2[0]
            );
            assert!(
                (c_old.d4[0] - d4_exact).abs() < 1e-8,
                "old d4 deg {deg}: {}",
                c_old.d4[0]
            );
            let c_new = correction_new(&sample5(f, 0.5), 0.5);
            assert!(
                (c_new.d2[0] - d2_exact).abs() < 1e-8,
                "new d2 deg {deg}: {}",
                c_new.d2[0]
            );
            assert!(
                (c_new.d4[0] - d4_exact).abs() < 1e-8,
                "new d4 deg {deg}: {}",
                c_new.d4[0]
            );
        }
    }

    #[test]
    fn assembly_coefficients() {
        let fv = [2.0];
        let zero = CorrectionTerms {
            d2: [0.0],
            d4: [0.0],
        };
        assert_eq!(assemble_awenoflux(&fv, &zero, 0.1)[0], 2.0);
        let dx: f64 = 0.37;
        let c = CorrectionTerms {
            d2: [24.0 / (dx * dx)],
            d4: [0.0],
        };
        let h = assemble_awenoflux(&fv, &c, dx);
        assert!((h[0] - 1.0).abs() < 1e-14);
    }
}
