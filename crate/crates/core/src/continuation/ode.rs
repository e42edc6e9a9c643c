//! Dormand–Prince 5(4) integration of linear systems along polylines.

use num_complex::Complex64;

use super::path::{singular_distance, Path};
use crate::error::{Error, Result};

/// Integrator settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeOptions {
    /// Absolute and relative local error target per step.
    pub tol: f64,
    /// Largest step as a fraction of the distance to `{0, 1}`.
    pub step_fraction: f64,
    pub max_steps: usize,
}

impl OdeOptions {
    pub fn with_tol(tol: f64) -> OdeOptions {
        OdeOptions { tol, ..OdeOptions::default() }
    }
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            tol: 1e-12,
            step_fraction: 0.25,
            max_steps: 2_000_000,
        }
    }
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
/// Fifth- minus fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `dy/dz = f(z, y)` along every segment of `path`, starting
/// from `y0` at the path's start. `f` writes the derivative into its last
/// argument.
pub fn integrate_path<F>(path: &Path, y0: &[Complex64], f: F, opts: &OdeOptions) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64, &[Complex64], &mut [Complex64]),
{
    let mut y = y0.to_vec();
    let mut steps = 0usize;
    for (a, b) in path.segments() {
        integrate_segment(a, b, &mut y, &f, opts, &mut steps)?;
    }
    Ok(y)
}

fn integrate_segment<F>(
    a: Complex64,
    b: Complex64,
    y: &mut Vec<Complex64>,
    f: &F,
    opts: &OdeOptions,
    steps: &mut usize,
) -> Result<()>
where
    F: Fn(Complex64, &[Complex64], &mut [Complex64]),
{
    let d = b - a;
    let len = d.norm();
    if len == 0.0 {
        return Ok(());
    }
    let n = y.len();
    let mut k = vec![vec![Complex64::new(0.0, 0.0); n]; 7];
    let mut tmp = vec![Complex64::new(0.0, 0.0); n];
    let mut ynew = vec![Complex64::new(0.0, 0.0); n];
    let hmax_at = |t: f64| opts.step_fraction * singular_distance(a + d * t) / len;
    let mut t = 0.0f64;
    let mut h = hmax_at(0.0).min(1.0) * 0.1;
    while t < 1.0 {
        if *steps >= opts.max_steps {
            return Err(Error::Integration(format!("step budget {} exhausted", opts.max_steps)));
        }
        h = h.min(hmax_at(t)).min(1.0 - t);
        if h <= 1e-15 {
            return Err(Error::Integration("step size underflow".into()));
        }
        for s in 0..7 {
            for i in 0..n {
                let mut acc = y[i];
                for (j, kj) in k.iter().enumerate().take(s) {
                    if A[s][j] != 0.0 {
                        acc += kj[i] * (h * A[s][j]);
                    }
                }
                tmp[i] = acc;
            }
            let z = a + d * (t + C[s] * h);
            f(z, &tmp, &mut k[s]);
            for v in k[s].iter_mut() {
                *v *= d;
            }
        }
        let mut err = 0.0f64;
        for i in 0..n {
            let mut acc = y[i];
            let mut e = Complex64::new(0.0, 0.0);
            for s in 0..7 {
                acc += k[s][i] * (h * B[s]);
                e += k[s][i] * (h * E[s]);
            }
            ynew[i] = acc;
            let scale = opts.tol * (1.0 + y[i].norm().max(acc.norm()));
            err = err.max(e.norm() / scale);
        }
        *steps += 1;
        if err <= 1.0 {
            t += h;
            std::mem::swap(y, &mut ynew);
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        if !err.is_finite() {
            h *= 0.2;
        } else {
            h *= factor;
        }
    }
    Ok(())
}
