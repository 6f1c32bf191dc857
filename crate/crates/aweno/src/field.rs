//! Solution storage: point values on structured grids with ghost layers.

use crate::grid::{Grid1D, Grid2D, GHOST};

pub type State<const D: usize> = [f64; D];

#[inline]
pub fn add<const D: usize>(a: &State<D>, b: &State<D>) -> State<D> {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = a[k] + b[k];
    }
    out
}

#[inline]
pub fn sub<const D: usize>(a: &State<D>, b: &State<D>) -> State<D> {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = a[k] - b[k];
    }
    out
}

#[inline]
pub fn scale<const D: usize>(a: &State<D>, s: f64) -> State<D> {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = s * a[k];
    }
    out
}

/// d x d matrix acting on state vectors.
pub type Mat<const D: usize> = [[f64; D]; D];

#[inline]
pub fn matvec<const D: usize>(m: &Mat<D>, v: &State<D>) -> State<D> {
    let mut out = [0.0; D];
    for r in 0..D {
        let mut acc = 0.0;
        for c in 0..D {
            acc += m[r][c] * v[c];
        }
        out[r] = acc;
    }
    out
}

/// 1-D field: `n` interior point values plus GHOST cells on each side,
/// stored contiguously so slot `i + GHOST` holds cell `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field1D<const D: usize> {
    data: Vec<State<D>>,
    n: usize,
}

impl<const D: usize> Field1D<D> {
    pub fn zeros(n: usize) -> Self {
        Self {
            data: vec![[0.0; D]; n + 2 * GHOST],
            n,
        }
    }

    pub fn from_fn(grid: &Grid1D, f: impl Fn(f64) -> State<D>) -> Self {
        let mut out = Self::zeros(grid.n);
        for i in 0..grid.n {
            *out.cell_mut(i as isize) = f(grid.center(i as isize));
        }
        out
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell access; `i` in -GHOST .. n+GHOST.
    #[inline]
    pub fn cell(&self, i: isize) -> &State<D> {
        &self.data[(i + GHOST as isize) as usize]
    }

    #[inline]
    pub fn cell_mut(&mut self, i: isize) -> &mut State<D> {
        &mut self.data[(i + GHOST as isize) as usize]
    }

    /// Whole line including ghosts (length n + 2 GHOST).
    #[inline]
    pub fn line(&self) -> &[State<D>] {
        &self.data
    }

    #[inline]
    pub fn line_mut(&mut self) -> &mut [State<D>] {
        &mut self.data
    }

    #[inline]
    pub fn interior(&self) -> &[State<D>] {
        &self.data[GHOST..GHOST + self.n]
    }

    #[inline]
    pub fn interior_mut(&mut self) -> &mut [State<D>] {
        let n = self.n;
        &mut self.data[GHOST..GHOST + n]
    }

    pub fn component(&self, k: usize) -> Vec<f64> {
        self.interior().iter().map(|u| u[k]).collect()
    }
}

/// 2-D field, row-major over x with ghost borders on all four sides.
/// Slot for cell (i, j) is (j + GHOST) * width + (i + GHOST).
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D<const D: usize> {
    data: Vec<State<D>>,
    nx: usize,
    ny: usize,
}

impl<const D: usize> Field2D<D> {
    pub fn zeros(nx: usize, ny: usize) -> Self {
        Self {
            data: vec![[0.0; D]; (nx + 2 * GHOST) * (ny + 2 * GHOST)],
            nx,
            ny,
        }
    }

    pub fn from_fn(grid: &Grid2D, f: impl Fn(f64, f64) -> State<D>) -> Self {
        let mut out = Self::zeros(grid.x.n, grid.y.n);
        for j in 0..grid.y.n {
            for i in 0..grid.x.n {
                *out.cell_mut(i as isize, j as isize) =
                    f(grid.x.center(i as isize), grid.y.center(j as isize));
            }
        }
        out
    }

    #[inline]
    pub fn nx(&self) -> usize {
        self.nx
    }

    #[inline]
    pub fn ny(&self) -> usize {
        self.ny
    }

    #[inline]
    fn width(&self) -> usize {
        self.nx + 2 * GHOST
    }

    #[inline]
    pub fn cell(&self, i: isize, j: isize) -> &State<D> {
        let w = self.width();
        &self.data[(j + GHOST as isize) as usize * w + (i + GHOST as isize) as usize]
    }

    #[inline]
    pub fn cell_mut(&mut self, i: isize, j: isize) -> &mut State<D> {
        let w = self.width();
        &mut self.data[(j + GHOST as isize) as usize * w + (i + GHOST as isize) as usize]
    }

    /// Contiguous row `j` including x-ghosts (length nx + 2 GHOST).
    #[inline]
    pub fn row(&self, j: isize) -> &[State<D>] {
        let w = self.width();
        let start = (j + GHOST as isize) as usize * w;
        &self.data[start..start + w]
    }

    /// Interior portion of row `j` (length nx).
    #[inline]
    pub fn row_interior_mut(&mut self, j: isize) -> &mut [State<D>] {
        let w = self.width();
        let start = (j + GHOST as isize) as usize * w + GHOST;
        let nx = self.nx;
        &mut self.data[start..start + nx]
    }

    pub fn flat(&self) -> &[State<D>] {
        &self.data
    }

    pub fn flat_mut(&mut self) -> &mut [State<D>] {
        &mut self.data
    }

    /// Gather column `i` including y-ghosts into `buf` (length ny + 2 GHOST).
    pub fn gather_column(&self, i: isize, buf: &mut [State<D>]) {
        debug_assert_eq!(buf.len(), self.ny + 2 * GHOST);
        for (slot, j) in (-(GHOST as isize)..(self.ny + GHOST) as isize).enumerate() {
            buf[slot] = *self.cell(i, j);
        }
    }

    pub fn component(&self, k: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for j in 0..self.ny {
            for i in 0..self.nx {
                out.push(self.cell(i as isize, j as isize)[k]);
            }
        }
        out
    }
}

/// In-place linear combinations used by the Runge-Kutta stages. These
/// traverse the whole buffer (ghosts included); ghost entries of
/// tendencies are zero so the combinations leave ghosts consistent.
pub trait FieldOps: Clone {
    fn values(&self) -> &[f64];
    fn values_mut(&mut self) -> &mut [f64];

    /// self <- a * x + b * y
    fn assign_lincomb2(&mut self, a: f64, x: &Self, b: f64, y: &Self) {
        let out = self.values_mut();
        let xv = x.values();
        let yv = y.values();
        for i in 0..out.len() {
            out[i] = a * xv[i] + b * yv[i];
        }
    }

    /// self <- (3 x + y + dt * t) / 4
    fn assign_stage2(&mut self, x: &Self, y: &Self, dt: f64, t: &Self) {
        let out = self.values_mut();
        let xv = x.values();
        let yv = y.values();
        let tv = t.values();
        for i in 0..out.len() {
            out[i] = (3.0 * xv[i] + yv[i] + dt * tv[i]) / 4.0;
        }
    }

    /// self <- (self + 2 y + 2 dt * t) / 3
    fn stage3_inplace(&mut self, y: &Self, dt: f64, t: &Self) {
        let out = self.values_mut();
        let yv = y.values();
        let tv = t.values();
        for i in 0..out.len() {
            out[i] = (out[i] + 2.0 * yv[i] + 2.0 * dt * tv[i]) / 3.0;
        }
    }

    /// Index of the first non-finite entry, if any.
    fn first_non_finite(&self) -> Option<usize> {
        self.values().iter().position(|v| !v.is_finite())
    }
}

fn flatten<const D: usize>(s: &[State<D>]) -> &[f64] {
    // [f64; D] has the same layout as D consecutive f64.
    unsafe { std::slice::from_raw_parts(s.as_ptr() as *const f64, s.len() * D) }
}

fn flatten_mut<const D: usize>(s: &mut [State<D>]) -> &mut [f64] {
    unsafe { std::slice::from_raw_parts_mut(s.as_mut_ptr() as *mut f64, s.len() * D) }
}

impl<const D: usize> FieldOps for Field1D<D> {
    fn values(&self) -> &[f64] {
        flatten(&self.data)
    }
    fn values_mut(&mut self) -> &mut [f64] {
        flatten_mut(&mut self.data)
    }
}

impl<const D: usize> FieldOps for Field2D<D> {
    fn values(&self) -> &[f64] {
        flatten(&self.data)
    }
    fn values_mut(&mut self) -> &mut [f64] {
        flatten_mut(&mut self.data)
    }
}
