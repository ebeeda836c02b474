//! Fourier grid and the single place where the e^{+itω} convention is mapped
//! onto rustfft.
//!
//! rustfft's forward transform computes Σ_j c_j e^{-2πijm/n} and its inverse
//! (unnormalized) computes Σ_j c_j e^{+2πijm/n}. Every transform in this crate
//! goes through [`grid_sum`], which folds the exponent index modulo n and picks
//! the forward or inverse plan from the requested sign. Outputs are ordered by
//! k = 1..n, so slot k-1 holds frequency ω_k and slot n-1 holds ω_n = 2π.

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FourierGrid {
    n: usize,
    omegas: Vec<f64>,
}

/// ω_k = 2πk/n for k = 1..n.
pub fn fourier_grid(n: usize) -> Result<FourierGrid> {
    if n == 0 {
        return invalid("grid size must be positive");
    }
    let omegas = (1..=n).map(|k| omega(k, n)).collect();
    Ok(FourierGrid { n, omegas })
}

#[inline]
pub(crate) fn omega(k: usize, n: usize) -> f64 {
    2.0 * PI * k as f64 / n as f64
}

impl FourierGrid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    /// Frequency ω_k, 1-based.
    pub fn omega(&self, k: usize) -> f64 {
        self.omegas[k - 1]
    }
}

/// Exponent sign of a grid transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// For k = 1..n returns Σ_j c_j exp(±i (j + offset) ω_k).
///
/// Exponents are reduced modulo n before transforming, which is exact on the
/// grid because e^{inω_k} = 1.
pub fn grid_sum(coeffs: &[Complex64], offset: i64, sign: Sign, n: usize) -> Vec<Complex64> {
    assert!(n > 0);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for (j, c) in coeffs.iter().enumerate() {
        let idx = (j as i64 + offset).rem_euclid(n as i64) as usize;
        buf[idx] += c;
    }
    PLANNER.with(|p| {
        let mut planner = p.borrow_mut();
        let plan = match sign {
            Sign::Plus => planner.plan_fft_inverse(n),
            Sign::Minus => planner.plan_fft_forward(n),
        };
        plan.process(&mut buf);
    });
    // Slot m of buf holds frequency index m; frequency k lives at k mod n.
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&buf[1..]);
    out.push(buf[0]);
    out
}

/// Real-input convenience wrapper around [`grid_sum`].
pub fn grid_sum_real(coeffs: &[f64], offset: i64, sign: Sign, n: usize) -> Vec<Complex64> {
    let c: Vec<Complex64> = coeffs.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    grid_sum(&c, offset, sign, n)
}

/// Plain FFT of length n with rustfft's own ordering (index m = 0..n-1).
pub(crate) fn fft_raw(buf: &mut [Complex64], sign: Sign) {
    let n = buf.len();
    if n == 0 {
        return;
    }
    PLANNER.with(|p| {
        let mut planner = p.borrow_mut();
        let plan = match sign {
            Sign::Plus => planner.plan_fft_inverse(n),
            Sign::Minus => planner.plan_fft_forward(n),
        };
        plan.process(buf);
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(coeffs: &[Complex64], offset: i64, sign: Sign, n: usize) -> Vec<Complex64> {
        let s = if sign == Sign::Plus { 1.0 } else { -1.0 };
        (1..=n)
            .map(|k| {
                let w = omega(k, n);
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * Complex64::from_polar(1.0, s * (j as i64 + offset) as f64 * w))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn grid_values() {
        let g = fourier_grid(4).unwrap();
        let expect = [PI / 2.0, PI, 1.5 * PI, 2.0 * PI];
        for (a, b) in g.omegas().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(fourier_grid(1).unwrap().omegas(), &[2.0 * PI]);
        assert!(fourier_grid(0).is_err());
    }

    #[test]
    fn last_frequency_is_zero_mod_two_pi() {
        for n in 1..40 {
            let g = fourier_grid(n).unwrap();
            assert!((g.omega(n) - 2.0 * PI).abs() < 1e-14);
            assert!(g.omegas().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn grid_sum_matches_direct_sum() {
        let coeffs: Vec<Complex64> = (0..13)
            .map(|j| Complex64::new((j as f64 * 0.7).sin(), (j as f64 * 1.3).cos()))
            .collect();
        for &n in &[1usize, 5, 8, 13, 20] {
            for &off in &[-3i64, 0, 1, 7] {
                for sign in [Sign::Plus, Sign::Minus] {
                    let a = grid_sum(&coeffs, off, sign, n);
                    let b = naive(&coeffs, off, sign, n);
                    for (x, y) in a.iter().zip(&b) {
                        assert!((x - y).norm() < 1e-10, "n={n} off={off}");
                    }
                }
            }
        }
    }
}
