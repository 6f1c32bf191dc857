use crate::error::{Result, SolverError};

/// Ghost layer width. Three cells cover the widest stencils in use:
/// the 5-point WENO-Z interpolation and the 6-point point-value
/// correction stencil both stay inside three ghost cells per side,
/// and the interface-flux corrections need two extra flux slots per side.
pub const GHOST: usize = 3;

/// Number of ghost interface-flux slots per side of a flux line.
pub const GHOST_FLUX: usize = 2;

/// Uniform 1-D grid of `n` cells on [x_min, x_max], cell centers at
/// x_min + (i + 1/2) dx for i = 0..n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_max > x_min) {
            return Err(SolverError::Config(format!(
                "empty interval [{x_min}, {x_max}]"
            )));
        }
        if n < 2 * GHOST + 1 {
            return Err(SolverError::Config(format!(
                "grid needs at least {} cells, got {n}",
                2 * GHOST + 1
            )));
        }
        Ok(Self { x_min, x_max, n })
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n as f64
    }

    /// Cell center, `i` may index ghost cells (negative or >= n).
    #[inline]
    pub fn center(&self, i: isize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx()
    }

    /// Interface position; interface `i` is the left edge of cell `i`.
    #[inline]
    pub fn interface(&self, i: isize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }
}

/// Uniform 2-D grid; dx and dy are independent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub x: Grid1D,
    pub y: Grid1D,
}

impl Grid2D {
    pub fn new(x: Grid1D, y: Grid1D) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        self.x.dx()
    }

    #[inline]
    pub fn dy(&self) -> f64 {
        self.y.dx()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centers_and_interfaces() {
        let g = Grid1D::new(0.0, 1.0, 10).unwrap();
        assert!((g.dx() - 0.1).abs() < 1e-15);
        assert!((g.center(0) - 0.05).abs() < 1e-15);
        assert!((g.center(9) - 0.95).abs() < 1e-15);
        assert!((g.interface(0) - 0.0).abs() < 1e-15);
        assert!((g.interface(10) - 1.0).abs() < 1e-15);
        // ghost centers extend past the boundary
        assert!((g.center(-1) + 0.05).abs() < 1e-15);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Grid1D::new(1.0, 1.0, 10).is_err());
        assert!(Grid1D::new(0.0, 1.0, 3).is_err());
    }
}
