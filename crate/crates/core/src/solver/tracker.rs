//! Projective total-degree homotopy with a random affine chart.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use super::compiled::Compiled;
use super::config::TrackerConfig;
use super::linear::{lu_solve, norm_inf};

type C = Complex64;

/// `H(z,t) = (1-t) γ G(z) + t F(z)` with `G_k = z_k^{D_k} - r_k z_0^{D_k}`,
/// restricted to the chart `a · z = 1`.
pub(crate) struct Homotopy {
    n: usize,
    target: Compiled,
    degrees: Vec<u32>,
    r: Vec<C>,
    gamma: C,
    chart: Vec<C>,
}

pub(crate) struct Workspace {
    pw: Vec<C>,
    vals: Vec<C>,
    jac: Vec<C>,
    mat: Vec<C>,
    rhs: Vec<C>,
}

impl Workspace {
    pub fn new(n: usize) -> Workspace {
        let m = n + 1;
        Workspace {
            pw: Vec::new(),
            vals: vec![C::default(); n],
            jac: vec![C::default(); n * m],
            mat: vec![C::default(); m * m],
            rhs: vec![C::default(); m],
        }
    }
}

/// Where a path ended.
#[derive(Clone, Debug)]
pub(crate) struct PathEnd {
    /// Homogeneous coordinates in the chart.
    pub z: Vec<C>,
    pub t: f64,
    pub reached: bool,
}

fn unit_random<R: Rng>(rng: &mut R) -> C {
    C::from_polar(1.0, rng.random::<f64>() * TAU)
}

impl Homotopy {
    pub fn new<R: Rng>(target: &Compiled, rng: &mut R) -> Homotopy {
        let mut target = target.clone();
        target.normalize();
        let n = target.neqs;
        let gamma = unit_random(rng);
        let r = (0..n).map(|_| unit_random(rng)).collect();
        let chart = (0..=n).map(|_| C::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)).collect();
        let degrees = target.degrees.clone();
        Homotopy { n, target, degrees, r, gamma, chart }
    }

    /// Number of start solutions.
    pub fn path_count(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    /// The `index`-th start solution.
    pub fn start_point(&self, mut index: u128) -> Vec<C> {
        let mut z = vec![C::new(1.0, 0.0); self.n + 1];
        for k in 0..self.n {
            let d = self.degrees[k] as u128;
            let j = (index % d) as f64;
            index /= d;
            let dk = self.degrees[k] as f64;
            z[k + 1] = self.r[k].powf(1.0 / dk) * C::from_polar(1.0, TAU * j / dk);
        }
        let s: C = self.chart.iter().zip(&z).map(|(a, x)| a * x).sum();
        z.iter().map(|x| x / s).collect()
    }

    /// Fills `ws.mat` with `[H_z; a]` and `ws.rhs` with `-[H; a·z - 1]` (or
    /// with `-[H_t; 0]` when `velocity` is set).
    fn assemble(&self, z: &[C], t: f64, velocity: bool, ws: &mut Workspace) {
        let n = self.n;
        let m = n + 1;
        self.target.eval(z, &mut ws.vals, &mut ws.jac, None, &mut ws.pw);
        let g0 = (1.0 - t) * self.gamma;
        for k in 0..n {
            let d = self.degrees[k];
            let zk = z[k + 1];
            let z0 = z[0];
            let zk_dm1 = zk.powu(d - 1);
            let z0_dm1 = z0.powu(d - 1);
            let g = zk_dm1 * zk - self.r[k] * z0_dm1 * z0;
            for j in 0..m {
                ws.mat[k * m + j] = ws.jac[k * m + j] * t;
            }
            ws.mat[k * m + k + 1] += g0 * zk_dm1 * d as f64;
            ws.mat[k * m] -= g0 * self.r[k] * z0_dm1 * d as f64;
            ws.rhs[k] = if velocity { -(ws.vals[k] - self.gamma * g) } else { -(g0 * g + ws.vals[k] * t) };
        }
        for j in 0..m {
            ws.mat[n * m + j] = self.chart[j];
        }
        ws.rhs[n] =
            if velocity { C::default() } else { -(self.chart.iter().zip(z).map(|(a, x)| a * x).sum::<C>() - 1.0) };
    }

    fn solve(&self, z: &[C], t: f64, velocity: bool, ws: &mut Workspace, out: &mut [C]) -> bool {
        self.assemble(z, t, velocity, ws);
        let m = self.n + 1;
        let ok = lu_solve(&mut ws.mat, &mut ws.rhs, m);
        out.copy_from_slice(&ws.rhs);
        ok && out.iter().all(|x| x.re.is_finite() && x.im.is_finite())
    }

    /// Newton correction at fixed `t`; returns whether it converged to the
    /// relative tolerance within `iters` steps while contracting.
    fn correct(&self, z: &mut [C], t: f64, iters: usize, tol: f64, ws: &mut Workspace) -> bool {
        let m = self.n + 1;
        let mut delta = vec![C::default(); m];
        let mut prev = f64::INFINITY;
        for _ in 0..iters {
            if !self.solve(z, t, false, ws, &mut delta) {
                return false;
            }
            for (x, d) in z.iter_mut().zip(&delta) {
                *x += d;
            }
            let nd = norm_inf(&delta) / norm_inf(z).max(1.0);
            if nd <= tol {
                return true;
            }
            if nd > 0.5 * prev {
                return false;
            }
            prev = nd;
        }
        false
    }

    /// Tracks one path from `t = 0` to `t = 1`.
    pub fn track(&self, start: Vec<C>, cfg: &TrackerConfig) -> PathEnd {
        let m = self.n + 1;
        let mut ws = Workspace::new(self.n);
        let mut z = start;
        let mut t = 0.0f64;
        let mut dt = cfg.max_step.min(0.02);
        let mut successes = 0;
        let (mut k1, mut k2, mut k3, mut k4) =
            (vec![C::default(); m], vec![C::default(); m], vec![C::default(); m], vec![C::default(); m]);
        let mut tmp = vec![C::default(); m];
        let mut steps = 0usize;
        const TRACK_TOL: f64 = 1e-9;
        while t < 1.0 {
            steps += 1;
            if steps > 50_000 {
                return PathEnd { z, t, reached: false };
            }
            let h = dt.min(1.0 - t);
            let t1 = if h >= 1.0 - t { 1.0 } else { t + h };
            let ok = self.solve(&z, t, true, &mut ws, &mut k1)
                && {
                    axpy(&mut tmp, &z, 0.5 * h, &k1);
                    self.solve(&tmp, t + 0.5 * h, true, &mut ws, &mut k2)
                }
                && {
                    axpy(&mut tmp, &z, 0.5 * h, &k2);
                    self.solve(&tmp, t + 0.5 * h, true, &mut ws, &mut k3)
                }
                && {
                    axpy(&mut tmp, &z, h, &k3);
                    self.solve(&tmp, t1, true, &mut ws, &mut k4)
                };
            let ok = ok && {
                for j in 0..m {
                    tmp[j] = z[j] + (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) * (h / 6.0);
                }
                self.correct(&mut tmp, t1, 3, TRACK_TOL, &mut ws)
            };
            if ok {
                z.copy_from_slice(&tmp);
                t = t1;
                successes += 1;
                if successes >= 3 {
                    dt = (dt * 1.5).min(cfg.max_step);
                    successes = 0;
                }
            } else {
                dt *= 0.5;
                successes = 0;
                if dt < cfg.min_step {
                    return PathEnd { z, t, reached: false };
                }
            }
        }
        // Polish at t = 1; failure here is left to the endpoint classifier.
        let mut polished = z.clone();
        if self.correct(&mut polished, 1.0, 6, 1e-14, &mut ws) {
            z = polished;
        }
        PathEnd { z, t: 1.0, reached: true }
    }
}

fn axpy(out: &mut [C], x: &[C], a: f64, y: &[C]) {
    for ((o, xi), yi) in out.iter_mut().zip(x).zip(y) {
        *o = xi + yi * a;
    }
}
