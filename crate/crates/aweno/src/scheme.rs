//! Semi-discrete fifth-order A-WENO right-hand sides for conservative
//! systems, in both correction variants:
//!
//! old — corrections from six point-value fluxes F(U_j) per interface;
//! new — corrections from the five already-computed FV interface fluxes,
//!       so no point-value flux is ever evaluated.

use crate::boundary::{
    fill_ghost_fluxes, fill_ghost_points_1d, fill_ghost_points_2d, BoundarySpec1D, BoundarySpec2D,
    GhostFluxRule,
};
use crate::corrections::{assemble_awenoflux, correction_new, correction_old};
use crate::error::{Location, Result, SolverError};
use crate::field::{Field1D, Field2D, State};
use crate::flux::{local_speed, rusanov};
use crate::grid::{Grid1D, Grid2D, GHOST, GHOST_FLUX};
use crate::interp::{interpolate_line, InterpMode};
use crate::system::{Axis, System};
use crate::wenoz::WenoParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeVariant {
    /// Point-value-based high-order correction terms.
    Old,
    /// Numerical-flux-based correction terms.
    New,
}

impl SchemeVariant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "old" => Some(Self::Old),
            "new" => Some(Self::New),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Old => "old",
            Self::New => "new",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SchemeConfig {
    pub variant: SchemeVariant,
    pub interp: InterpMode,
    pub weno: WenoParams,
}

impl SchemeConfig {
    pub fn new(variant: SchemeVariant, interp: InterpMode) -> Self {
        Self {
            variant,
            interp,
            weno: WenoParams::default(),
        }
    }
}

/// Work counters proving what each variant computes. The new variant must
/// finish any run with zero point-flux evaluations and zero global-flux
/// point integrals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Grid-point flux (or global flux) evaluations feeding corrections.
    pub point_flux_evals: u64,
    /// Recursive point-value integrals of the nonconservative product.
    pub global_integral_evals: u64,
    /// RHS evaluations performed.
    pub rhs_evals: u64,
}

impl RunStats {
    pub fn reset(&mut self) {
        *self = Self::default();
    }
}

/// Per-line scratch buffers.
pub struct LineWs<const D: usize> {
    pub um: Vec<State<D>>,
    pub up: Vec<State<D>>,
    /// FV fluxes with GHOST_FLUX extension slots on both sides.
    pub flux: Vec<State<D>>,
    pub speed: Vec<f64>,
    /// Point-value fluxes (old variant), one per line cell incl. ghosts.
    pub pt: Vec<State<D>>,
    pub h: Vec<State<D>>,
    // flux-globalization lines
    pub w: Vec<State<D>>,
    pub wm: Vec<State<D>>,
    pub wp: Vec<State<D>>,
    pub fm: Vec<State<D>>,
    pub fp: Vec<State<D>>,
    pub rm: Vec<State<D>>,
    pub rp: Vec<State<D>>,
    pub bpsi: Vec<State<D>>,
    pub bcell: Vec<State<D>>,
}

impl<const D: usize> LineWs<D> {
    fn new(max_n: usize) -> Self {
        let cells = max_n + 2 * GHOST;
        let ifaces = max_n + 1;
        Self {
            um: vec![[0.0; D]; ifaces],
            up: vec![[0.0; D]; ifaces],
            flux: vec![[0.0; D]; ifaces + 2 * GHOST_FLUX],
            speed: vec![0.0; ifaces],
            pt: vec![[0.0; D]; cells],
            h: vec![[0.0; D]; ifaces],
            w: vec![[0.0; D]; cells],
            wm: vec![[0.0; D]; ifaces],
            wp: vec![[0.0; D]; ifaces],
            fm: vec![[0.0; D]; ifaces],
            fp: vec![[0.0; D]; ifaces],
            rm: vec![[0.0; D]; ifaces],
            rp: vec![[0.0; D]; ifaces],
            bpsi: vec![[0.0; D]; ifaces],
            bcell: vec![[0.0; D]; max_n.max(1)],
        }
    }
}

/// All solver scratch for one run: line buffers, 2-D column staging, and
/// the work counters.
pub struct Workspace<const D: usize> {
    pub line: LineWs<D>,
    pub col_in: Vec<State<D>>,
    pub col_out: Vec<State<D>>,
    pub stats: RunStats,
}

impl<const D: usize> Workspace<D> {
    pub fn new(max_n: usize) -> Self {
        Self {
            line: LineWs::new(max_n),
            col_in: vec![[0.0; D]; max_n + 2 * GHOST],
            col_out: vec![[0.0; D]; max_n.max(1)],
            stats: RunStats::default(),
        }
    }

    pub fn for_grid1(grid: &Grid1D) -> Self {
        Self::new(grid.n)
    }

    pub fn for_grid2(grid: &Grid2D) -> Self {
        Self::new(grid.x.n.max(grid.y.n))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RhsInfo {
    pub max_speed_x: f64,
    pub max_speed_y: f64,
}

/// One conservative line sweep: interpolate interface states, build
/// Rusanov fluxes and speeds, add the variant's correction terms, and
/// accumulate -(H_{i+1} - H_i)/dx into `out` (length n). Returns the
/// largest local speed on the line.
#[allow(clippy::too_many_arguments)]
pub(crate) fn flux_line_conservative<M: System<D>, const D: usize>(
    line: &[State<D>],
    n: usize,
    dx: f64,
    axis: Axis,
    line_idx: usize,
    model: &M,
    cfg: &SchemeConfig,
    rules: (GhostFluxRule, GhostFluxRule),
    ws: &mut LineWs<D>,
    stats: &mut RunStats,
    out: &mut [State<D>],
) -> Result<f64> {
    let mode = if cfg.interp == InterpMode::Characteristic && model.has_char_frame() {
        InterpMode::Characteristic
    } else {
        InterpMode::Componentwise
    };
    interpolate_line(
        line,
        n,
        mode,
        |avg| model.char_frame(axis, avg),
        &cfg.weno,
        &mut ws.um,
        &mut ws.up,
    )
    .map_err(|(iface, what)| SolverError::EigenDecomposition {
        what,
        location: Location::Interface {
            axis,
            line: line_idx,
            iface,
        },
    })?;

    let mut max_speed = 0.0f64;
    for i in 0..=n {
        let (um, up) = (&ws.um[i], &ws.up[i]);
        if !model.admissible(um) || !model.admissible(up) {
            return Err(SolverError::InadmissibleState {
                what: "interpolated interface state".into(),
                location: Location::Interface {
                    axis,
                    line: line_idx,
                    iface: i,
                },
            });
        }
        let a = local_speed(model, axis, um, up);
        max_speed = max_speed.max(a);
        ws.speed[i] = a;
        ws.flux[i + GHOST_FLUX] = rusanov(&model.flux(axis, um), &model.flux(axis, up), a, um, up);
    }

    match cfg.variant {
        SchemeVariant::Old => {
            let cells = n + 2 * GHOST;
            for s in 0..cells {
                ws.pt[s] = model.flux(axis, &line[s]);
            }
            stats.point_flux_evals += cells as u64;
            for i in 0..=n {
                // interface i uses point fluxes of cells i-3..=i+2 (slots i..i+6)
                let corr = correction_old(&ws.pt[i..i + 6], dx);
                ws.h[i] = assemble_awenoflux(&ws.flux[i + GHOST_FLUX], &corr, dx);
            }
        }
        SchemeVariant::New => {
            fill_ghost_fluxes(&mut ws.flux[..n + 1 + 2 * GHOST_FLUX], n, rules.0, rules.1);
            for i in 0..=n {
                // interface i uses FV fluxes at interfaces i-2..=i+2 (slots i..i+5)
                let corr = correction_new(&ws.flux[i..i + 5], dx);
                ws.h[i] = assemble_awenoflux(&ws.flux[i + GHOST_FLUX], &corr, dx);
            }
        }
    }

    for j in 0..n {
        for k in 0..D {
            out[j][k] -= (ws.h[j + 1][k] - ws.h[j][k]) / dx;
        }
    }
    Ok(max_speed)
}

/// dU_j/dt = -(H_{j+1/2} - H_{j-1/2}) / dx on a 1-D grid. Fills ghosts,
/// zeroes `out`'s interior, and reports the largest interface speed.
pub fn semidiscrete_rhs_1d<M: System<D>, const D: usize>(
    field: &mut Field1D<D>,
    grid: &Grid1D,
    bc: &BoundarySpec1D<D>,
    model: &M,
    cfg: &SchemeConfig,
    ws: &mut Workspace<D>,
    out: &mut Field1D<D>,
) -> Result<RhsInfo> {
    ws.stats.rhs_evals += 1;
    fill_ghost_points_1d(field, grid, bc, model);
    for u in out.interior_mut() {
        *u = [0.0; D];
    }
    let rules = (bc.left.ghost_flux_rule(), bc.right.ghost_flux_rule());
    let n = field.n();
    let Workspace { line, stats, .. } = ws;
    let max_speed = flux_line_conservative(
        field.line(),
        n,
        grid.dx(),
        Axis::X,
        0,
        model,
        cfg,
        rules,
        line,
        stats,
        out.interior_mut(),
    )?;
    Ok(RhsInfo {
        max_speed_x: max_speed,
        max_speed_y: 0.0,
    })
}

/// 2-D tendency: x sweeps along rows plus y sweeps along columns.
pub fn semidiscrete_rhs_2d<M: System<D>, const D: usize>(
    field: &mut Field2D<D>,
    grid: &Grid2D,
    bc: &BoundarySpec2D<D>,
    model: &M,
    cfg: &SchemeConfig,
    ws: &mut Workspace<D>,
    out: &mut Field2D<D>,
) -> Result<RhsInfo> {
    ws.stats.rhs_evals += 1;
    fill_ghost_points_2d(field, grid, bc, model);
    let (nx, ny) = (field.nx(), field.ny());
    for j in 0..ny {
        for u in out.row_interior_mut(j as isize) {
            *u = [0.0; D];
        }
    }
    let mut info = RhsInfo::default();
    let xspec = bc.x_pair();
    let xrules = (xspec.left.ghost_flux_rule(), xspec.right.ghost_flux_rule());
    {
        let Workspace { line, stats, .. } = &mut *ws;
        let fixed: &Field2D<D> = field;
        for j in 0..ny {
            let a = flux_line_conservative(
                fixed.row(j as isize),
                nx,
                grid.dx(),
                Axis::X,
                j,
                model,
                cfg,
                xrules,
                line,
                stats,
                out.row_interior_mut(j as isize),
            )?;
            info.max_speed_x = info.max_speed_x.max(a);
        }
    }
    let yspec = bc.y_pair();
    let yrules = (yspec.left.ghost_flux_rule(), yspec.right.ghost_flux_rule());
    for i in 0..nx {
        let Workspace {
            line,
            col_in,
            col_out,
            stats,
        } = &mut *ws;
        field.gather_column(i as isize, &mut col_in[..ny + 2 * GHOST]);
        for t in col_out[..ny].iter_mut() {
            *t = [0.0; D];
        }
        let a = flux_line_conservative(
            &col_in[..ny + 2 * GHOST],
            ny,
            grid.dy(),
            Axis::Y,
            i,
            model,
            cfg,
            yrules,
            line,
            stats,
            &mut col_out[..ny],
        )?;
        info.max_speed_y = info.max_speed_y.max(a);
        for j in 0..ny {
            let t = ws.col_out[j];
            let o = out.cell_mut(i as isize, j as isize);
            for k in 0..D {
                o[k] += t[k];
            }
        }
    }
    Ok(info)
}
