//! Nelder-Mead simplex search and one-dimensional golden-section search.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadOptions {
    /// Stop when every vertex lies within this distance of the best one...
    pub xtol: f64,
    /// ...and the objective spread over the simplex is below this.
    pub ftol: f64,
    pub max_evals: usize,
    /// Fresh simplices built around the incumbent after convergence.
    pub restarts: usize,
    /// Initial edge length along each coordinate.
    pub step: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        NelderMeadOptions { xtol: 1e-8, ftol: 1e-10, max_evals: 10_000, restarts: 1, step: 0.1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
}

/// Minimizes `f`, treating non-finite values as +∞.
pub fn nelder_mead(
    mut f: impl FnMut(&[f64]) -> f64,
    x0: &[f64],
    opts: &NelderMeadOptions,
) -> Result<OptimResult> {
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let f0 = eval(x0, &mut evals);
    if !f0.is_finite() {
        return Err(Error::Initialization("objective is not finite at the starting point".into()));
    }
    if x0.is_empty() {
        return Ok(OptimResult { x: vec![], fx: f0, iterations: 0, evaluations: evals, converged: true });
    }
    let mut best = (x0.to_vec(), f0);
    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..=opts.restarts {
        let (x, fx, it, ok) = run_simplex(&mut eval, &mut evals, &best.0, best.1, opts);
        iterations += it;
        converged = ok;
        if fx <= best.1 {
            best = (x, fx);
        }
        if evals >= opts.max_evals {
            break;
        }
    }
    Ok(OptimResult { x: best.0, fx: best.1, iterations, evaluations: evals, converged })
}

fn run_simplex(
    eval: &mut impl FnMut(&[f64], &mut usize) -> f64,
    evals: &mut usize,
    x0: &[f64],
    f0: f64,
    opts: &NelderMeadOptions,
) -> (Vec<f64>, f64, usize, bool) {
    let d = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = vec![(x0.to_vec(), f0)];
    for i in 0..d {
        // shrink toward x0 (trying both directions) until the vertex is feasible
        let mut h = opts.step;
        let mut vertex = None;
        for _ in 0..40 {
            for sgn in [1.0, -1.0] {
                let mut v = x0.to_vec();
                v[i] += sgn * h;
                let fv = eval(&v, evals);
                if fv.is_finite() {
                    vertex = Some((v, fv));
                    break;
                }
            }
            if vertex.is_some() {
                break;
            }
            h *= 0.5;
        }
        let mut fallback = x0.to_vec();
        fallback[i] += h;
        simplex.push(vertex.unwrap_or((fallback, f64::INFINITY)));
    }
    let mut it = 0;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let fbest = simplex[0].1;
        let fworst = simplex[d].1;
        let diam = simplex[1..]
            .iter()
            .map(|(v, _)| v.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if diam < opts.xtol && (fworst - fbest).abs() < opts.ftol {
            return (simplex[0].0.clone(), fbest, it, true);
        }
        if *evals >= opts.max_evals {
            return (simplex[0].0.clone(), fbest, it, false);
        }
        it += 1;
        let mut centroid = vec![0.0; d];
        for (v, _) in &simplex[..d] {
            for (c, a) in centroid.iter_mut().zip(v) {
                *c += a / d as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&simplex[d].0).map(|(c, w)| c + t * (c - w)).collect()
        };
        let xr = along(1.0);
        let fr = eval(&xr, evals);
        if fr < simplex[0].1 {
            let xe = along(2.0);
            let fe = eval(&xe, evals);
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[d - 1].1 {
            simplex[d] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < simplex[d].1 {
            let xc = along(0.5);
            let fc = eval(&xc, evals);
            (xc, fc)
        } else {
            let xc = along(-0.5);
            let fc = eval(&xc, evals);
            (xc, fc)
        };
        if fc < simplex[d].1.min(fr) {
            simplex[d] = (xc, fc);
            continue;
        }
        let x_best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let v: Vec<f64> = vertex.0.iter().zip(&x_best).map(|(a, b)| b + 0.5 * (a - b)).collect();
            let fv = eval(&v, evals);
            *vertex = (v, fv);
        }
    }
}

/// Golden-section minimization on [lo, hi] to the given bracket tolerance.
pub fn golden_section(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64, usize) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut it = 0;
    while (b - a).abs() > tol {
        it += 1;
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x), it)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_one_dim() {
        let r = nelder_mead(|t| (t[0] - 1.0).powi(2), &[0.0], &NelderMeadOptions::default()).unwrap();
        assert!((r.x[0] - 1.0).abs() < 1e-6);
        assert!(r.converged);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let r = nelder_mead(f, &[-1.2, 1.0], &NelderMeadOptions::default()).unwrap();
        assert!((r.x[0] - 1.0).abs() < 1e-5 && (r.x[1] - 1.0).abs() < 1e-5, "{r:?}");
    }

    #[test]
    fn penalty_region_is_respected() {
        // minimum of the unconstrained bowl sits outside the feasible disc
        let mut outside = 0;
        let f = |x: &[f64]| {
            if x[0] * x[0] + x[1] * x[1] >= 1.0 {
                outside += 1;
                f64::INFINITY
            } else {
                (x[0] - 2.0).powi(2) + x[1] * x[1]
            }
        };
        let r = nelder_mead(f, &[0.0, 0.0], &NelderMeadOptions::default()).unwrap();
        assert!(r.x[0] * r.x[0] + r.x[1] * r.x[1] < 1.0);
        assert!(r.x[0] > 0.99);
    }

    #[test]
    fn infeasible_start() {
        assert!(matches!(
            nelder_mead(|_| f64::INFINITY, &[0.0], &NelderMeadOptions::default()),
            Err(Error::Initialization(_))
        ));
    }

    #[test]
    fn deterministic() {
        let f = |x: &[f64]| (x[0] - 0.3).powi(2) + (x[0] * x[1] - 0.2).powi(2) + 0.1 * x[1].powi(4);
        let a = nelder_mead(f, &[0.1, 0.1], &NelderMeadOptions::default()).unwrap();
        let b = nelder_mead(f, &[0.1, 0.1], &NelderMeadOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn golden() {
        let (x, _, _) = golden_section(|d| (d - 0.2).powi(2), -0.49, 0.49, 1e-8);
        assert!((x - 0.2).abs() < 1e-8);
    }
}
