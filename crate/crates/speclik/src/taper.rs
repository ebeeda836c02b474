//! Tukey (cosine-bell) data taper.

use std::f64::consts::PI;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Taper {
    raw: Vec<f64>,
    normalized: Vec<f64>,
    h1: f64,
    h2: f64,
}

impl Taper {
    /// Builds a taper from nonnegative raw weights h_n(t/n).
    pub fn from_raw(raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return invalid("taper must have positive length");
        }
        if raw.iter().any(|&w| !(w >= 0.0) || !w.is_finite()) {
            return invalid("taper weights must be finite and nonnegative");
        }
        let h1: f64 = raw.iter().sum();
        let h2: f64 = raw.iter().map(|w| w * w).sum();
        if h1 <= 0.0 {
            return invalid("degenerate taper: all weights are zero");
        }
        let n = raw.len() as f64;
        let c = n / h1;
        let normalized = raw.iter().map(|w| c * w).collect();
        Ok(Taper { raw, normalized, h1, h2 })
    }

    pub fn rectangular(n: usize) -> Result<Self> {
        Self::from_raw(vec![1.0; n])
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    /// h_{t,n} = n h_n(t/n) / H_1, summing to n.
    pub fn normalized(&self) -> &[f64] {
        &self.normalized
    }

    pub fn h1(&self) -> f64 {
        self.h1
    }

    pub fn h2(&self) -> f64 {
        self.h2
    }

    /// H_q = Σ_t raw_t^q.
    pub fn power_sum(&self, q: i32) -> f64 {
        self.raw.iter().map(|w| w.powi(q)).sum()
    }

    pub fn is_rectangular(&self) -> bool {
        self.raw.iter().all(|&w| w == 1.0)
    }
}

/// Default edge length ⌊n/10⌋.
pub fn default_edge(n: usize) -> usize {
    n / 10
}

/// Tukey taper with `d` points of cosine bell at each end.
pub fn tukey_taper(n: usize, d: usize) -> Result<Taper> {
    if n == 0 {
        return invalid("taper length must be positive");
    }
    if 2 * d > n {
        return invalid(format!("taper edge {d} exceeds n/2 with n = {n}"));
    }
    let df = d as f64;
    let raw = (1..=n)
        .map(|t| {
            if t <= d {
                0.5 * (1.0 - (PI * (t as f64 - 0.5) / df).cos())
            } else if t + d > n {
                0.5 * (1.0 - (PI * ((n - t) as f64 + 0.5) / df).cos())
            } else {
                1.0
            }
        })
        .collect();
    Taper::from_raw(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_edge_is_rectangular() {
        let t = tukey_taper(17, 0).unwrap();
        assert!(t.is_rectangular());
        assert_eq!(t.h1(), 17.0);
        assert_eq!(t.h2(), 17.0);
        assert_eq!(t.normalized(), t.raw());
    }

    #[test]
    fn branch_values() {
        let t = tukey_taper(50, 5).unwrap();
        assert_eq!(t.raw()[24], 1.0);
        assert!((t.raw()[0] - 0.024_471_741_852_423).abs() < 1e-12);
        // symmetric edges
        for i in 0..50 {
            assert!((t.raw()[i] - t.raw()[49 - i]).abs() < 1e-15);
        }
        let s: f64 = t.normalized().iter().sum();
        assert!((s - 50.0).abs() < 1e-10);
        assert!((t.power_sum(2) - t.h2()).abs() < 1e-12);
    }

    #[test]
    fn edge_too_large() {
        assert!(tukey_taper(10, 6).is_err());
        assert!(tukey_taper(10, 5).is_ok());
    }

    #[test]
    fn all_zero_rejected() {
        assert!(Taper::from_raw(vec![0.0; 4]).is_err());
    }
}
