//! Parametric spectral densities: AR(p), MA(q), ARMA(p,q) and ARFIMA(0,d,0),
//! all with innovation variance pinned to one.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::error::{invalid, Error, Result};
use crate::grid::{fft_raw, Sign};

/// Margin on root moduli used by the validity check.
pub const ROOT_MARGIN: f64 = 1e-8;
/// Grid size for quadrature autocovariances of mixed ARMA models.
pub const QUADRATURE_SIZE: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ar(usize),
    Ma(usize),
    Arma(usize, usize),
    Arfima,
}

impl Family {
    pub fn n_params(&self) -> usize {
        match *self {
            Family::Ar(p) => p,
            Family::Ma(q) => q,
            Family::Arma(p, q) => p + q,
            Family::Arfima => 1,
        }
    }

    pub fn ar_order(&self) -> usize {
        match *self {
            Family::Ar(p) | Family::Arma(p, _) => p,
            _ => 0,
        }
    }

    pub fn ma_order(&self) -> usize {
        match *self {
            Family::Ma(q) | Family::Arma(_, q) => q,
            _ => 0,
        }
    }

    pub fn is_long_memory(&self) -> bool {
        matches!(self, Family::Arfima)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Ar(p) => write!(f, "ar:{p}"),
            Family::Ma(q) => write!(f, "ma:{q}"),
            Family::Arma(p, q) => write!(f, "arma:{p},{q}"),
            Family::Arfima => write!(f, "arfima"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `ar:p`, `ma:q`, `arma:p,q` or `arfima`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "arfima" {
            return Ok(Family::Arfima);
        }
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("bad model spec '{s}'")))?;
        let num = |v: &str| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad order '{v}' in '{s}'")))
        };
        match kind {
            "ar" => Ok(Family::Ar(num(rest)?)),
            "ma" => Ok(Family::Ma(num(rest)?)),
            "arma" => {
                let (p, q) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidArgument(format!("bad model spec '{s}'")))?;
                Ok(Family::Arma(num(p)?, num(q)?))
            }
            _ => Err(Error::InvalidArgument(format!("unknown model family '{kind}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralModel {
    family: Family,
    theta: Vec<f64>,
}

/// Outcome of [`SpectralModel::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Validity {
    pub valid: bool,
    pub diagnostic: Option<String>,
}

impl SpectralModel {
    /// Checks only the parameter count; see [`SpectralModel::validate`].
    pub fn new(family: Family, theta: Vec<f64>) -> Result<Self> {
        if theta.len() != family.n_params() {
            return invalid(format!(
                "{family} needs {} parameters, got {}",
                family.n_params(),
                theta.len()
            ));
        }
        if theta.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite parameter".into()));
        }
        Ok(SpectralModel { family, theta })
    }

    pub fn ar(phi: &[f64]) -> Result<Self> {
        Self::new(Family::Ar(phi.len()), phi.to_vec())
    }

    pub fn ma(psi: &[f64]) -> Result<Self> {
        Self::new(Family::Ma(psi.len()), psi.to_vec())
    }

    pub fn arma(phi: &[f64], psi: &[f64]) -> Result<Self> {
        let mut theta = phi.to_vec();
        theta.extend_from_slice(psi);
        Self::new(Family::Arma(phi.len(), psi.len()), theta)
    }

    pub fn arfima(d: f64) -> Result<Self> {
        Self::new(Family::Arfima, vec![d])
    }

    pub fn white_noise() -> Self {
        SpectralModel { family: Family::Ar(0), theta: vec![] }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn sigma2(&self) -> f64 {
        1.0
    }

    /// φ_1..φ_p (empty for MA and ARFIMA).
    pub fn ar_coeffs(&self) -> &[f64] {
        match self.family {
            Family::Ar(p) | Family::Arma(p, _) => &self.theta[..p],
            _ => &[],
        }
    }

    /// ψ_1..ψ_q (empty for AR and ARFIMA).
    pub fn ma_coeffs(&self) -> &[f64] {
        match self.family {
            Family::Ma(_) => &self.theta,
            Family::Arma(p, _) => &self.theta[p..],
            _ => &[],
        }
    }

    pub fn memory(&self) -> Option<f64> {
        match self.family {
            Family::Arfima => Some(self.theta[0]),
            _ => None,
        }
    }

    pub fn validate(&self) -> Validity {
        let fail = |msg: String| Validity { valid: false, diagnostic: Some(msg) };
        if let Some(d) = self.memory() {
            if !(d > -0.5 && d < 0.5) {
                return fail(format!("memory parameter d = {d} outside (-0.5, 0.5)"));
            }
            return Validity { valid: true, diagnostic: None };
        }
        if !roots_outside_unit_circle(self.ar_coeffs(), ROOT_MARGIN) {
            return fail("AR polynomial has a root inside or near the unit circle".into());
        }
        let neg: Vec<f64> = self.ma_coeffs().iter().map(|v| -v).collect();
        if !roots_outside_unit_circle(&neg, ROOT_MARGIN) {
            return fail("MA polynomial has a root inside or near the unit circle".into());
        }
        Validity { valid: true, diagnostic: None }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    fn require_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.valid {
            Ok(())
        } else {
            Err(Error::InvalidParams(v.diagnostic.unwrap_or_default()))
        }
    }

    /// f_θ(ω) with σ² = 1.
    pub fn spectral_density(&self, omega: f64) -> Result<f64> {
        self.require_valid()?;
        Ok(self.density_unchecked(omega)?)
    }

    pub(crate) fn density_unchecked(&self, omega: f64) -> Result<f64> {
        if let Some(d) = self.memory() {
            return arfima_density(d, omega);
        }
        let num = poly_value(self.ma_coeffs(), 1.0, omega).norm_sqr();
        let den = poly_value(self.ar_coeffs(), -1.0, omega).norm_sqr();
        Ok(num / den)
    }

    /// f_θ(ω_k) for k = 1..n. Errors at ω_n for ARFIMA with d > 0 unless
    /// `skip_zero` is set, in which case slot n-1 holds NaN.
    pub fn density_on_grid(&self, n: usize, skip_zero: bool) -> Result<Vec<f64>> {
        self.require_valid()?;
        if let Some(d) = self.memory() {
            return (1..=n)
                .map(|k| {
                    if k == n && skip_zero {
                        Ok(f64::NAN)
                    } else {
                        arfima_density(d, 2.0 * PI * k as f64 / n as f64)
                    }
                })
                .collect();
        }
        let ar = poly_on_grid(self.ar_coeffs(), -1.0, n);
        let ma = poly_on_grid(self.ma_coeffs(), 1.0, n);
        Ok(ar.iter().zip(&ma).map(|(a, m)| m.norm_sqr() / a.norm_sqr()).collect())
    }

    /// c(r) = ∫ f(ω) e^{irω} dω / 2π.
    pub fn autocovariance(&self, r: i64) -> Result<f64> {
        Ok(self.autocovariances(r.unsigned_abs() as usize)?[r.unsigned_abs() as usize])
    }

    /// c(0..=max_lag).
    pub fn autocovariances(&self, max_lag: usize) -> Result<Vec<f64>> {
        self.require_valid()?;
        if let Some(d) = self.memory() {
            return Ok(arfima_acvf(d, max_lag));
        }
        match self.family {
            Family::Ar(_) | Family::Arma(_, 0) => ar_acvf(self.ar_coeffs(), max_lag),
            Family::Ma(_) | Family::Arma(0, _) => Ok(ma_acvf(self.ma_coeffs(), max_lag)),
            _ => arma_acvf(self.ar_coeffs(), self.ma_coeffs(), max_lag),
        }
    }

    /// c(r) = N⁻¹ Σ_j f(2πj/N) e^{-irω_j}; the aliasing error decays
    /// geometrically in N for ARMA densities.
    pub fn quadrature_acvf(&self, max_lag: usize, size: usize) -> Vec<f64> {
        let n = size.max(4 * (max_lag + 1).next_power_of_two());
        let ar = poly_on_grid(self.ar_coeffs(), -1.0, n);
        let ma = poly_on_grid(self.ma_coeffs(), 1.0, n);
        // slot n-1 is ω_n = 2π ≡ 0; rotate so index j holds 2πj/N
        let mut buf: Vec<Complex64> = (0..n)
            .map(|j| {
                let k = if j == 0 { n - 1 } else { j - 1 };
                Complex64::new(ma[k].norm_sqr() / ar[k].norm_sqr(), 0.0)
            })
            .collect();
        fft_raw(&mut buf, Sign::Minus);
        buf[..=max_lag].iter().map(|c| c.re / n as f64).collect()
    }

    /// φ_1..φ_M with 1 − Σ φ_j z^j = φ(z)/ψ(z), or (1 − z)^d for ARFIMA.
    pub fn ar_infinity_coefficients(&self, m: usize) -> Result<Vec<f64>> {
        self.require_valid()?;
        if let Some(d) = self.memory() {
            let mut out = Vec::with_capacity(m);
            let mut pi = 1.0;
            for j in 1..=m {
                pi *= (j as f64 - 1.0 - d) / j as f64;
                out.push(-pi);
            }
            return Ok(out);
        }
        // a(z) = 1 − Σ φ_j z^j, b(z) = 1 + Σ ψ_j z^j, c = a / b
        let phi = self.ar_coeffs();
        let psi = self.ma_coeffs();
        let mut c = vec![0.0; m + 1];
        c[0] = 1.0;
        for k in 1..=m {
            let mut v = if k <= phi.len() { -phi[k - 1] } else { 0.0 };
            for (j, b) in psi.iter().enumerate().take(k) {
                v -= b * c[k - j - 1];
            }
            c[k] = v;
        }
        Ok(c[1..].iter().map(|v| -v).collect())
    }

    /// ψ_1..ψ_M with 1 + Σ ψ_j z^j = ψ(z)/φ(z) (short memory only).
    pub fn ma_infinity_coefficients(&self, m: usize) -> Result<Vec<f64>> {
        self.require_valid()?;
        if self.memory().is_some() {
            return invalid("MA(∞) expansion is not provided for ARFIMA");
        }
        let phi = self.ar_coeffs();
        let psi = self.ma_coeffs();
        let mut c = vec![0.0; m + 1];
        c[0] = 1.0;
        for k in 1..=m {
            let mut v = if k <= psi.len() { psi[k - 1] } else { 0.0 };
            for (j, a) in phi.iter().enumerate().take(k) {
                v += a * c[k - j - 1];
            }
            c[k] = v;
        }
        Ok(c[1..].to_vec())
    }
}

/// Box bounds plus the root-condition predicate.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamBounds {
    pub family: Family,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl ParamBounds {
    pub fn for_family(family: Family) -> Self {
        let binom = |p: usize| -> Vec<f64> {
            let mut row = vec![1.0f64];
            for i in 0..p {
                let mut next = vec![1.0; i + 2];
                for j in 1..=i {
                    next[j] = row[j - 1] + row[j];
                }
                row = next;
            }
            row[1..].to_vec()
        };
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        match family {
            Family::Arfima => {
                lower.push(-0.5);
                upper.push(0.5);
            }
            _ => {
                for b in binom(family.ar_order()).into_iter().chain(binom(family.ma_order())) {
                    lower.push(-b);
                    upper.push(b);
                }
            }
        }
        ParamBounds { family, lower, upper }
    }

    /// Box [−r, r] on every coordinate (intersected with the validity region).
    pub fn symmetric(family: Family, r: f64) -> Self {
        let k = family.n_params();
        ParamBounds { family, lower: vec![-r; k], upper: vec![r; k] }
    }

    pub fn in_box(&self, theta: &[f64]) -> bool {
        theta.len() == self.lower.len()
            && theta
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(t, (lo, hi))| *t >= *lo && *t <= *hi)
    }

    pub fn contains(&self, theta: &[f64]) -> bool {
        self.in_box(theta)
            && SpectralModel::new(self.family, theta.to_vec())
                .map(|m| m.is_valid())
                .unwrap_or(false)
    }
}

/// Schur-Cohn step-down test: true iff every root of 1 − Σ a_j z^j has
/// modulus greater than 1 + margin.
pub fn roots_outside_unit_circle(a: &[f64], margin: f64) -> bool {
    let r = 1.0 + margin;
    let mut cur: Vec<f64> = a.iter().enumerate().map(|(j, v)| v * r.powi(j as i32 + 1)).collect();
    while let Some(&k) = cur.last() {
        if !(k.abs() < 1.0) {
            return false;
        }
        let m = cur.len();
        let denom = 1.0 - k * k;
        let next: Vec<f64> = (0..m - 1).map(|j| (cur[j] + k * cur[m - 2 - j]) / denom).collect();
        cur = next;
    }
    true
}

/// 1 + sign·Σ c_j e^{-ijω}.
pub(crate) fn poly_value(c: &[f64], sign: f64, omega: f64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for (j, v) in c.iter().enumerate() {
        acc += sign * v * Complex64::from_polar(1.0, -((j + 1) as f64) * omega);
    }
    acc
}

/// 1 + sign·Σ c_j e^{-ijω_k} for k = 1..n, using exact unit-root indexing.
pub(crate) fn poly_on_grid(c: &[f64], sign: f64, n: usize) -> Vec<Complex64> {
    if c.is_empty() {
        return vec![Complex64::new(1.0, 0.0); n];
    }
    if c.len() > 16 && n > 64 {
        let mut coeffs = vec![1.0];
        coeffs.extend(c.iter().map(|v| sign * v));
        return crate::grid::grid_sum_real(&coeffs, 0, Sign::Minus, n);
    }
    let roots: Vec<Complex64> =
        (0..n).map(|m| Complex64::from_polar(1.0, -2.0 * PI * m as f64 / n as f64)).collect();
    (1..=n)
        .map(|k| {
            let mut acc = Complex64::new(1.0, 0.0);
            for (j, v) in c.iter().enumerate() {
                acc += sign * v * roots[((j + 1) * k) % n];
            }
            acc
        })
        .collect()
}

fn is_zero_frequency(omega: f64) -> bool {
    let w = omega.rem_euclid(2.0 * PI);
    w < 1e-12 || 2.0 * PI - w < 1e-12
}

fn arfima_density(d: f64, omega: f64) -> Result<f64> {
    if is_zero_frequency(omega) {
        return if d > 0.0 {
            Err(Error::InfiniteDensity(omega))
        } else if d == 0.0 {
            Ok(1.0)
        } else {
            Ok(0.0)
        };
    }
    Ok((2.0 * (omega / 2.0).sin().abs()).powf(-2.0 * d))
}

/// Γ(1−2d)/Γ(1−d)² at lag 0, then c(k) = c(k−1)(k−1+d)/(k−d).
fn arfima_acvf(d: f64, max_lag: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(max_lag + 1);
    let g = gamma(1.0 - d);
    c.push(gamma(1.0 - 2.0 * d) / (g * g));
    for k in 1..=max_lag {
        let kf = k as f64;
        let prev = c[k - 1];
        c.push(prev * (kf - 1.0 + d) / (kf - d));
    }
    c
}

fn ma_acvf(psi: &[f64], max_lag: usize) -> Vec<f64> {
    let mut b = vec![1.0];
    b.extend_from_slice(psi);
    (0..=max_lag)
        .map(|r| if r < b.len() { (0..b.len() - r).map(|j| b[j] * b[j + r]).sum() } else { 0.0 })
        .collect()
}

/// c(k) = Σ_{|m|≤q} c_ψ(|m|) c_φ(|k − m|): the MA polynomial's
/// autocovariance convolved with the exact AR(p) one.
fn arma_acvf(phi: &[f64], psi: &[f64], max_lag: usize) -> Result<Vec<f64>> {
    let q = psi.len();
    let cm = ma_acvf(psi, q);
    let ca = ar_acvf(phi, max_lag + q)?;
    Ok((0..=max_lag as i64)
        .map(|k| (-(q as i64)..=q as i64).map(|m| cm[m.unsigned_abs() as usize] * ca[(k - m).unsigned_abs() as usize]).sum())
        .collect())
}

/// Exact AR(p) autocovariances: step down to the reflection coefficients,
/// set c(0) = 1/Π(1 − κ_j²), then step back up through the Yule-Walker
/// equations of each order.
fn ar_acvf(phi: &[f64], max_lag: usize) -> Result<Vec<f64>> {
    let p = phi.len();
    let mut orders: Vec<Vec<f64>> = vec![Vec::new(); p + 1];
    orders[p] = phi.to_vec();
    for m in (1..=p).rev() {
        let cur = &orders[m];
        let k = cur[m - 1];
        let denom = 1.0 - k * k;
        if denom <= 0.0 {
            return Err(Error::InvalidParams("AR polynomial is not causal".into()));
        }
        orders[m - 1] = (0..m - 1).map(|j| (cur[j] + k * cur[m - 2 - j]) / denom).collect();
    }
    let mut c0 = 1.0;
    for m in 1..=p {
        let k = orders[m][m - 1];
        c0 /= 1.0 - k * k;
    }
    let len = max_lag.max(p) + 1;
    let mut c = vec![0.0; len];
    c[0] = c0;
    for m in 1..len {
        let coeffs = if m <= p { &orders[m] } else { &orders[p] };
        c[m] = coeffs.iter().enumerate().map(|(j, a)| a * c[m - 1 - j]).sum();
    }
    c.truncate(max_lag + 1);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn densities() {
        let wn = SpectralModel::ar(&[0.0]).unwrap();
        for w in [0.1, 1.0, PI, 6.0] {
            assert!((wn.spectral_density(w).unwrap() - 1.0).abs() < 1e-15);
        }
        let ar = SpectralModel::ar(&[0.5]).unwrap();
        assert!((ar.spectral_density(PI).unwrap() - 4.0 / 9.0).abs() < 1e-14);
        for d in [-0.3, 0.1, 0.4] {
            let m = SpectralModel::arfima(d).unwrap();
            assert!((m.spectral_density(PI).unwrap() - 2f64.powf(-2.0 * d)).abs() < 1e-14);
        }
        let m = SpectralModel::arfima(0.3).unwrap();
        assert!(matches!(m.spectral_density(2.0 * PI), Err(Error::InfiniteDensity(_))));
        assert!(matches!(m.spectral_density(0.0), Err(Error::InfiniteDensity(_))));
    }

    #[test]
    fn grid_density_matches_pointwise() {
        let m = SpectralModel::arma(&[0.6, -0.2], &[0.3]).unwrap();
        let g = m.density_on_grid(11, false).unwrap();
        for (k, v) in g.iter().enumerate() {
            let w = 2.0 * PI * (k + 1) as f64 / 11.0;
            assert!((v - m.spectral_density(w).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn autocovariance_examples() {
        let wn = SpectralModel::white_noise();
        assert_eq!(wn.autocovariances(3).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        let ar = SpectralModel::ar(&[0.5]).unwrap();
        assert!((ar.autocovariance(0).unwrap() - 4.0 / 3.0).abs() < 1e-14);
        assert!((ar.autocovariance(-2).unwrap() - 0.25 * 4.0 / 3.0).abs() < 1e-14);
        for d in [-0.4, -0.1, 0.2, 0.45] {
            let m = SpectralModel::arfima(d).unwrap();
            let c0 = gamma(1.0 - 2.0 * d) / gamma(1.0 - d).powi(2);
            assert!((m.autocovariance(0).unwrap() - c0).abs() < 1e-12 * c0);
            // direct gamma-ratio formula at k = 3
            let k = 3.0;
            let ck = gamma(k + d) * gamma(1.0 - 2.0 * d)
                / (gamma(k - d + 1.0) * gamma(1.0 - d) * gamma(d));
            assert!((m.autocovariance(3).unwrap() - ck).abs() < 1e-10);
        }
    }

    #[test]
    fn quadrature_matches_closed_form_ar1() {
        for phi in [-0.95, -0.5, 0.0, 0.7, 0.95] {
            let m = SpectralModel::ar(&[phi]).unwrap();
            let q = m.quadrature_acvf(64, QUADRATURE_SIZE);
            for (r, v) in q.iter().enumerate() {
                let exact = phi.powi(r as i32) / (1.0 - phi * phi);
                assert!((v - exact).abs() < 1e-8, "phi={phi} r={r}");
            }
        }
    }

    #[test]
    fn exact_ar_and_ma_match_quadrature() {
        let ar = SpectralModel::ar(&[1.367, -0.841]).unwrap();
        let a = ar.autocovariances(30).unwrap();
        let q = ar.quadrature_acvf(30, QUADRATURE_SIZE);
        for (x, y) in a.iter().zip(&q) {
            assert!((x - y).abs() < 1e-9);
        }
        let ma = SpectralModel::ma(&[0.5, 0.5]).unwrap();
        let a = ma.autocovariances(4).unwrap();
        assert!((a[0] - 1.5).abs() < 1e-15 && (a[1] - 0.75).abs() < 1e-15);
        assert!((a[2] - 0.5).abs() < 1e-15 && a[3] == 0.0);
    }

    #[test]
    fn exact_arma_acvf() {
        // ARMA(1,1) closed form
        let (phi, th) = (0.694, 0.857);
        let m = SpectralModel::arma(&[phi], &[th]).unwrap();
        let a = m.autocovariances(10).unwrap();
        let mut expect = vec![(1.0 + 2.0 * phi * th + th * th) / (1.0 - phi * phi)];
        expect.push((1.0 + phi * th) * (phi + th) / (1.0 - phi * phi));
        for k in 2..=10 {
            expect.push(phi * expect[k - 1]);
        }
        for (x, y) in a.iter().zip(&expect) {
            assert!((x - y).abs() < 1e-12 * y.abs().max(1.0));
        }
        let truth = SpectralModel::arma(&[1.6725441505626515, -1.4907809053938563, 0.567], &[0.5, 0.5]).unwrap();
        let a = truth.autocovariances(40).unwrap();
        let q = truth.quadrature_acvf(40, QUADRATURE_SIZE);
        for (x, y) in a.iter().zip(&q) {
            assert!((x - y).abs() < 1e-9 * a[0], "{x} {y}");
        }
    }

    #[test]
    fn validity() {
        assert!(SpectralModel::ar(&[0.999]).unwrap().is_valid());
        assert!(!SpectralModel::ar(&[1.0]).unwrap().is_valid());
        assert!(!SpectralModel::ar(&[-1.0]).unwrap().is_valid());
        assert!(SpectralModel::ar(&[1.367, -0.841]).unwrap().is_valid());
        assert!(!SpectralModel::ma(&[1.0]).unwrap().is_valid());
        assert!(SpectralModel::arma(&[0.694], &[0.857]).unwrap().is_valid());
        assert!(!SpectralModel::arfima(0.5).unwrap().is_valid());
        assert!(SpectralModel::arfima(0.49).unwrap().is_valid());
        // (1 - 0.5z)(1 - 2z) has a root at 1/2
        assert!(!SpectralModel::ar(&[2.5, -1.0]).unwrap().is_valid());
        assert!(SpectralModel::new(Family::Ar(2), vec![0.1]).is_err());
    }

    #[test]
    fn ar_infinity() {
        let ar = SpectralModel::ar(&[0.3, 0.2]).unwrap();
        assert_eq!(ar.ar_infinity_coefficients(4).unwrap(), vec![0.3, 0.2, 0.0, 0.0]);
        let ma = SpectralModel::ma(&[0.5]).unwrap();
        let c = ma.ar_infinity_coefficients(6).unwrap();
        for (j, v) in c.iter().enumerate() {
            let exact = -(-0.5f64).powi(j as i32 + 1);
            assert!((v - exact).abs() < 1e-15);
        }
        let wn = SpectralModel::white_noise();
        assert!(wn.ar_infinity_coefficients(5).unwrap().iter().all(|&v| v == 0.0));
        assert!(SpectralModel::ma(&[1.2]).unwrap().ar_infinity_coefficients(3).is_err());
        let fi = SpectralModel::arfima(0.3).unwrap();
        let c = fi.ar_infinity_coefficients(2).unwrap();
        assert!((c[0] - 0.3).abs() < 1e-15);
        assert!((c[1] - 0.3 * 0.7 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("ar:2".parse::<Family>().unwrap(), Family::Ar(2));
        assert_eq!("arma:1,1".parse::<Family>().unwrap(), Family::Arma(1, 1));
        assert_eq!("MA:1".parse::<Family>().unwrap(), Family::Ma(1));
        assert_eq!("arfima".parse::<Family>().unwrap(), Family::Arfima);
        assert!("garch:1".parse::<Family>().is_err());
        assert_eq!(Family::Arma(3, 2).to_string(), "arma:3,2");
    }

    #[test]
    fn bounds() {
        let b = ParamBounds::for_family(Family::Ar(3));
        assert_eq!(b.upper, vec![3.0, 3.0, 1.0]);
        assert!(b.contains(&[0.5, 0.0, 0.0]));
        assert!(!b.contains(&[1.0, 0.0, 0.0]));
        let b = ParamBounds::for_family(Family::Arma(1, 1));
        assert!(b.contains(&[0.694, 0.857]));
    }
}
