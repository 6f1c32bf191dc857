//! Interface-state interpolation along one grid line, componentwise or in
//! local characteristic variables.

use crate::field::{matvec, Mat, State};
use crate::grid::GHOST;
use crate::wenoz::{wenoz_minus, wenoz_plus, WenoParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpMode {
    Componentwise,
    /// Project the stencil onto the local characteristic frame at the
    /// arithmetic-average state of the two adjacent cells.
    Characteristic,
}

/// Compute one-sided values at every interface of a line.
///
/// `line` holds n + 2*GHOST point values; interface i sits between cells
/// i-1 and i, so the minus stencil is cells i-3..=i+1 and the plus stencil
/// cells i-2..=i+2. Outputs go to `um[i]`, `up[i]` for i in 0..=n.
///
/// `frame(avg)` supplies the characteristic frame; it is only called in
/// characteristic mode. A frame error is reported with the interface index.
pub fn interpolate_line<const D: usize>(
    line: &[State<D>],
    n: usize,
    mode: InterpMode,
    frame: impl Fn(&State<D>) -> Result<(Mat<D>, Mat<D>), String>,
    params: &WenoParams,
    um: &mut [State<D>],
    up: &mut [State<D>],
) -> Result<(), (usize, String)> {
    debug_assert!(line.len() >= n + 2 * GHOST);
    match mode {
        InterpMode::Componentwise => {
            for i in 0..=n {
                // slots i..i+5 hold cells i-3..=i+2
                let s = &line[i..i + 6];
                for k in 0..D {
                    let wm = [s[0][k], s[1][k], s[2][k], s[3][k], s[4][k]];
                    let wp = [s[1][k], s[2][k], s[3][k], s[4][k], s[5][k]];
                    um[i][k] = wenoz_minus(&wm, params);
                    up[i][k] = wenoz_plus(&wp, params);
                }
            }
        }
        InterpMode::Characteristic => {
            for i in 0..=n {
                let s = &line[i..i + 6];
                let mut avg = [0.0; D];
                for k in 0..D {
                    avg[k] = 0.5 * (s[2][k] + s[3][k]);
                }
                let (l, r) = frame(&avg).map_err(|e| (i, e))?;
                let mut proj = [[0.0; D]; 6];
                for (pj, sj) in proj.iter_mut().zip(s.iter()) {
                    *pj = matvec(&l, sj);
                }
                let mut cm = [0.0; D];
                let mut cp = [0.0; D];
                for k in 0..D {
                    let wm = [proj[0][k], proj[1][k], proj[2][k], proj[3][k], proj[4][k]];
                    let wp = [proj[1][k], proj[2][k], proj[3][k], proj[4][k], proj[5][k]];
                    cm[k] = wenoz_minus(&wm, params);
                    cp[k] = wenoz_plus(&wp, params);
                }
                um[i] = matvec(&r, &cm);
                up[i] = matvec(&r, &cp);
            }
        }
    }
    Ok(())
}
