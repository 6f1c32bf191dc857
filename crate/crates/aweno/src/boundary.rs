//! Ghost-point boundary conditions, applied to solution point values and,
//! for the interface-flux correction path, to stored numerical fluxes.

use crate::error::{Result, SolverError};
use crate::field::{Field1D, Field2D, State};
use crate::grid::{Grid1D, Grid2D, GHOST, GHOST_FLUX};
use crate::system::{Axis, System};

#[derive(Debug, Clone, PartialEq)]
pub enum BcSide<const D: usize> {
    Periodic,
    /// Zero-order extrapolation of the nearest interior value.
    Free,
    /// Mirror interior values, negating the normal momentum component.
    SolidWall,
    /// Ghosts held at a fixed state (possibly mapped onto the model's
    /// equilibrium manifold) at all Runge-Kutta stages.
    Dirichlet(State<D>),
}

impl<const D: usize> BcSide<D> {
    fn is_periodic(&self) -> bool {
        matches!(self, BcSide::Periodic)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySpec1D<const D: usize> {
    pub left: BcSide<D>,
    pub right: BcSide<D>,
}

impl<const D: usize> BoundarySpec1D<D> {
    pub fn periodic() -> Self {
        Self {
            left: BcSide::Periodic,
            right: BcSide::Periodic,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.left.is_periodic() != self.right.is_periodic() {
            return Err(SolverError::Config(
                "periodic condition must be specified on both opposing sides or neither".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySpec2D<const D: usize> {
    pub west: BcSide<D>,
    pub east: BcSide<D>,
    pub south: BcSide<D>,
    pub north: BcSide<D>,
}

impl<const D: usize> BoundarySpec2D<D> {
    pub fn validate(&self) -> Result<()> {
        if self.west.is_periodic() != self.east.is_periodic()
            || self.south.is_periodic() != self.north.is_periodic()
        {
            return Err(SolverError::Config(
                "periodic condition must be specified on both opposing sides or neither".into(),
            ));
        }
        Ok(())
    }

    pub fn x_pair(&self) -> BoundarySpec1D<D> {
        BoundarySpec1D {
            left: self.west.clone(),
            right: self.east.clone(),
        }
    }

    pub fn y_pair(&self) -> BoundarySpec1D<D> {
        BoundarySpec1D {
            left: self.south.clone(),
            right: self.north.clone(),
        }
    }
}

fn mirror<const D: usize>(u: &State<D>, normal: Option<usize>) -> State<D> {
    let mut out = *u;
    if let Some(k) = normal {
        out[k] = -out[k];
    }
    out
}

/// Fill the ghost entries of one line. `line` holds n + 2*GHOST states,
/// `pos(i)` gives the center position of cell i (ghosts included).
fn fill_line<M: System<D>, const D: usize>(
    line: &mut [State<D>],
    n: usize,
    spec: &BoundarySpec1D<D>,
    model: &M,
    axis: Axis,
    pos: impl Fn(isize) -> f64,
) {
    let at = |i: isize| (i + GHOST as isize) as usize;
    for k in 0..GHOST as isize {
        let g = -1 - k; // ghost cells -1, -2, -3
        line[at(g)] = match &spec.left {
            BcSide::Periodic => line[at(n as isize - 1 - k)],
            BcSide::Free => line[at(0)],
            BcSide::SolidWall => mirror(&line[at(k)], model.normal_momentum(axis)),
            BcSide::Dirichlet(fixed) => model.dirichlet_ghost(fixed, pos(g), axis),
        };
    }
    for k in 0..GHOST as isize {
        let g = n as isize + k;
        line[at(g)] = match &spec.right {
            BcSide::Periodic => line[at(k)],
            BcSide::Free => line[at(n as isize - 1)],
            BcSide::SolidWall => mirror(&line[at(n as isize - 1 - k)], model.normal_momentum(axis)),
            BcSide::Dirichlet(fixed) => model.dirichlet_ghost(fixed, pos(g), axis),
        };
    }
}

pub fn fill_ghost_points_1d<M: System<D>, const D: usize>(
    field: &mut Field1D<D>,
    grid: &Grid1D,
    spec: &BoundarySpec1D<D>,
    model: &M,
) {
    let n = field.n();
    fill_line(field.line_mut(), n, spec, model, Axis::X, |i| grid.center(i));
}

pub fn fill_ghost_points_2d<M: System<D>, const D: usize>(
    field: &mut Field2D<D>,
    grid: &Grid2D,
    spec: &BoundarySpec2D<D>,
    model: &M,
) {
    let (nx, ny) = (field.nx(), field.ny());
    let xspec = spec.x_pair();
    let yspec = spec.y_pair();
    // x ghosts row by row
    let mut row = vec![[0.0; D]; nx + 2 * GHOST];
    for j in 0..ny as isize {
        row.copy_from_slice(field.row(j));
        fill_line(&mut row, nx, &xspec, model, Axis::X, |i| grid.x.center(i));
        for i in -(GHOST as isize)..0 {
            *field.cell_mut(i, j) = row[(i + GHOST as isize) as usize];
        }
        for i in nx as isize..(nx + GHOST) as isize {
            *field.cell_mut(i, j) = row[(i + GHOST as isize) as usize];
        }
    }
    // y ghosts column by column (interior columns; corners are never read)
    let mut col = vec![[0.0; D]; ny + 2 * GHOST];
    for i in 0..nx as isize {
        field.gather_column(i, &mut col);
        fill_line(&mut col, ny, &yspec, model, Axis::Y, |j| grid.y.center(j));
        for j in -(GHOST as isize)..0 {
            *field.cell_mut(i, j) = col[(j + GHOST as isize) as usize];
        }
        for j in ny as isize..(ny + GHOST) as isize {
            *field.cell_mut(i, j) = col[(j + GHOST as isize) as usize];
        }
    }
}

/// How interface fluxes extend past a boundary: periodic wrap, or
/// zero-order extrapolation of the nearest interior flux (all other
/// conditions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhostFluxRule {
    Wrap,
    Copy,
}

impl<const D: usize> BcSide<D> {
    pub fn ghost_flux_rule(&self) -> GhostFluxRule {
        match self {
            BcSide::Periodic => GhostFluxRule::Wrap,
            _ => GhostFluxRule::Copy,
        }
    }
}

/// Extend a line of interface fluxes by GHOST_FLUX slots per side.
/// `fluxes` holds n+1 interior interfaces at slots GHOST_FLUX..GHOST_FLUX+n+1.
/// For periodic lines interface n coincides with interface 0, so the wrap
/// copies interfaces n-2, n-1 to the left and 1, 2 to the right.
pub fn fill_ghost_fluxes<const D: usize>(
    fluxes: &mut [State<D>],
    n: usize,
    left: GhostFluxRule,
    right: GhostFluxRule,
) {
    debug_assert_eq!(fluxes.len(), n + 1 + 2 * GHOST_FLUX);
    let at = |i: isize| (i + GHOST_FLUX as isize) as usize;
    for k in 1..=GHOST_FLUX as isize {
        fluxes[at(-k)] = match left {
            GhostFluxRule::Wrap => fluxes[at(n as isize - k)],
            GhostFluxRule::Copy => fluxes[at(0)],
        };
        fluxes[at(n as isize + k)] = match right {
            GhostFluxRule::Wrap => fluxes[at(k)],
            GhostFluxRule::Copy => fluxes[at(n as isize)],
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::burgers::Burgers;
    use crate::models::euler1d::Euler1D;

    fn grid(n: usize) -> Grid1D {
        Grid1D::new(0.0, 1.0, n).unwrap()
    }

    fn line_of<const D: usize>(f: &Field1D<D>) -> Vec<State<D>> {
        f.line().to_vec()
    }

    #[test]
    fn periodic_wraps() {
        let g = grid(8);
        let mut f = Field1D::<1>::from_fn(&g, |x| [x]);
        fill_ghost_points_1d(&mut f, &g, &BoundarySpec1D::periodic(), &Burgers);
        assert_eq!(f.cell(-1), f.cell(7));
        assert_eq!(f.cell(-3), f.cell(5));
        assert_eq!(f.cell(8), f.cell(0));
        assert_eq!(f.cell(10), f.cell(2));
    }

    #[test]
    fn free_copies_nearest() {
        let g = grid(8);
        let mut f = Field1D::<1>::from_fn(&g, |x| [x]);
        let spec = BoundarySpec1D {
            left: BcSide::Free,
            right: BcSide::Free,
        };
        fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
        for k in 1..=3 {
            assert_eq!(f.cell(-k), f.cell(0));
            assert_eq!(f.cell(7 + k), f.cell(7));
        }
    }

    #[test]
    fn solid_wall_mirrors_and_negates_momentum() {
        let g = grid(8);
        let model = Euler1D::new(1.4);
        let mut f = Field1D::<3>::zeros(8);
        for i in 0..8 {
            *f.cell_mut(i) = [1.0, 0.3 + 0.01 * i as f64, 2.5];
        }
        let spec = BoundarySpec1D {
            left: BcSide::SolidWall,
            right: BcSide::SolidWall,
        };
        fill_ghost_points_1d(&mut f, &g, &spec, &model);
        assert_eq!(*f.cell(-1), [1.0, -0.3, 2.5]);
        assert_eq!(*f.cell(-2), [1.0, -0.31, 2.5]);
        assert_eq!(*f.cell(8), [1.0, -0.37, 2.5]);
        assert_eq!(*f.cell(9), [1.0, -0.36, 2.5]);
    }

    #[test]
    fn dirichlet_holds_fixed_state() {
        let g = grid(8);
        let mut f = Field1D::<1>::from_fn(&g, |_| [1.0]);
        let spec = BoundarySpec1D {
            left: BcSide::Dirichlet([2.0]),
            right: BcSide::Dirichlet([1.0]),
        };
        fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
        for k in 1..=3 {
            assert_eq!(*f.cell(-k), [2.0]);
            assert_eq!(*f.cell(7 + k), [1.0]);
        }
    }

    #[test]
    fn ghost_fill_is_idempotent() {
        let g = grid(8);
        let specs: Vec<BoundarySpec1D<1>> = vec![
            BoundarySpec1D::periodic(),
            BoundarySpec1D {
                left: BcSide::Free,
                right: BcSide::Dirichlet([0.7]),
            },
            BoundarySpec1D {
                left: BcSide::SolidWall,
                right: BcSide::SolidWall,
            },
        ];
        for spec in specs {
            let mut f = Field1D::<1>::from_fn(&g, |x| [x * x]);
            fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
            let once = line_of(&f);
            fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
            assert_eq!(once, line_of(&f));
        }
    }

    #[test]
    fn periodic_shift_equivariance() {
        // Filling ghosts of a periodically shifted interior gives the
        // periodic extension of the shifted data everywhere on the line.
        let g = grid(8);
        let n = 8isize;
        let data: Vec<f64> = (0..8).map(|i| (i as f64).sin()).collect();
        let m = 3isize;
        let mut f = Field1D::<1>::zeros(8);
        let mut fs = Field1D::<1>::zeros(8);
        for i in 0..8isize {
            *f.cell_mut(i) = [data[i as usize]];
            *fs.cell_mut((i + m).rem_euclid(n)) = [data[i as usize]];
        }
        fill_ghost_points_1d(&mut f, &g, &BoundarySpec1D::periodic(), &Burgers);
        fill_ghost_points_1d(&mut fs, &g, &BoundarySpec1D::periodic(), &Burgers);
        for i in -3..11isize {
            assert_eq!(fs.cell(i)[0], f.cell((i - m).rem_euclid(n))[0]);
        }
    }

    #[test]
    fn constant_field_stays_constant_except_other_dirichlet() {
        let g = grid(8);
        let c = 0.37;
        for spec in [
            BoundarySpec1D::<1>::periodic(),
            BoundarySpec1D {
                left: BcSide::Free,
                right: BcSide::Free,
            },
            BoundarySpec1D {
                left: BcSide::Dirichlet([c]),
                right: BcSide::Dirichlet([c]),
            },
        ] {
            let mut f = Field1D::<1>::from_fn(&g, |_| [c]);
            fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
            assert!(f.line().iter().all(|u| u[0] == c));
        }
        let mut f = Field1D::<1>::from_fn(&g, |_| [c]);
        let spec = BoundarySpec1D {
            left: BcSide::Dirichlet([c + 1.0]),
            right: BcSide::Free,
        };
        fill_ghost_points_1d(&mut f, &g, &spec, &Burgers);
        assert_eq!(f.cell(-1)[0], c + 1.0);
    }

    #[test]
    fn mismatched_periodic_pairing_rejected() {
        let spec = BoundarySpec1D::<1> {
            left: BcSide::Periodic,
            right: BcSide::Free,
        };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn ghost_fluxes_wrap_and_copy() {
        // n = 6 interior cells -> interfaces 0..=6 at slots 2..=8
        let n = 6;
        let mut fl = vec![[0.0f64; 1]; n + 1 + 2 * GHOST_FLUX];
        for i in 0..=n {
            fl[i + GHOST_FLUX] = [10.0 + i as f64];
        }
        let mut w = fl.clone();
        fill_ghost_fluxes(&mut w, n, GhostFluxRule::Wrap, GhostFluxRule::Wrap);
        // left ghosts are interfaces n-1, n-2; right ghosts 1, 2
        assert_eq!(w[1], [10.0 + (n - 1) as f64]);
        assert_eq!(w[0], [10.0 + (n - 2) as f64]);
        assert_eq!(w[n + GHOST_FLUX + 1], [11.0]);
        assert_eq!(w[n + GHOST_FLUX + 2], [12.0]);

        let mut c = fl.clone();
        fill_ghost_fluxes(&mut c, n, GhostFluxRule::Copy, GhostFluxRule::Copy);
        assert_eq!(c[0], [10.0]);
        assert_eq!(c[1], [10.0]);
        assert_eq!(c[n + GHOST_FLUX + 1], [10.0 + n as f64]);
        assert_eq!(c[n + GHOST_FLUX + 2], [10.0 + n as f64]);
    }
}
