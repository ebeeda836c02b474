//! Toeplitz and circulant matrices, the Durbin-Levinson innovations form of
//! the Gaussian likelihood, and the exact AR(p) matrix identities.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::dft::{dft, predictive_dft_ar};
use crate::error::{invalid, Error, Result};
use crate::grid::{fourier_grid, omega};
use crate::models::{poly_value, SpectralModel};
use crate::series::TimeSeriesSample;

/// Largest n for which dense matrices are built.
pub const DENSE_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzGram {
    pub n: usize,
    /// c(0..n-1).
    pub acvf: Vec<f64>,
}

impl ToeplitzGram {
    pub fn dense(&self) -> Result<DMatrix<f64>> {
        if self.n > DENSE_CAP {
            return invalid(format!("dense Gram matrix limited to n <= {DENSE_CAP}"));
        }
        Ok(DMatrix::from_fn(self.n, self.n, |s, t| self.acvf[s.abs_diff(t)]))
    }
}

pub fn toeplitz_gram(model: &SpectralModel, n: usize) -> Result<ToeplitzGram> {
    if n == 0 {
        return invalid("n must be positive");
    }
    Ok(ToeplitzGram { n, acvf: model.autocovariances(n - 1)? })
}

/// C_n(g)_{s,t} = n⁻¹ Σ_k g(ω_k) e^{-i(s-t)ω_k}.
pub fn circulant(g: impl Fn(f64) -> f64, n: usize) -> Result<DMatrix<Complex64>> {
    if n == 0 || n > DENSE_CAP {
        return invalid(format!("circulant size must be in 1..={DENSE_CAP}"));
    }
    let vals: Vec<f64> = (1..=n).map(|k| g(omega(k, n))).collect();
    if vals.iter().any(|v| !v.is_finite()) {
        return invalid("g must be finite on the grid");
    }
    let col: Vec<Complex64> = (0..n)
        .map(|r| {
            vals.iter()
                .enumerate()
                .map(|(k, v)| v * unit_root(-((r * (k + 1)) as i64), n))
                .sum::<Complex64>()
                / n as f64
        })
        .collect();
    Ok(DMatrix::from_fn(n, n, |s, t| col[(s as i64 - t as i64).rem_euclid(n as i64) as usize]))
}

/// (F_n)_{k,t} = n^{-1/2} e^{itω_k}, 1-based k and t.
pub fn dft_matrix(n: usize) -> DMatrix<Complex64> {
    let s = 1.0 / (n as f64).sqrt();
    DMatrix::from_fn(n, n, |k, t| s * unit_root(((t + 1) * (k + 1)) as i64, n))
}

/// e^{2πi m/n} with the phase reduced mod n first, so large m loses no accuracy.
fn unit_root(m: i64, n: usize) -> Complex64 {
    let r = m.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * r / n as f64)
}

/// Innovations x_t − x̂_t and one-step variances v_t from the
/// Durbin-Levinson recursion on c(0..n-1).
pub(crate) fn innovations(acvf: &[f64], x: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = x.len();
    let mut errs = Vec::with_capacity(n);
    let mut vars = Vec::with_capacity(n);
    let mut phi: Vec<f64> = Vec::with_capacity(n);
    let mut v = acvf[0];
    if !(v > 0.0) {
        return Err(Error::Degenerate(format!("c(0) = {v} is not positive")));
    }
    for t in 0..n {
        let pred: f64 = phi.iter().enumerate().map(|(j, a)| a * x[t - 1 - j]).sum();
        errs.push(x[t] - pred);
        vars.push(v);
        if t + 1 == n {
            break;
        }
        let k = t + 1;
        let s: f64 = phi.iter().enumerate().map(|(j, a)| a * acvf[k - 1 - j]).sum();
        let kappa = (acvf[k] - s) / v;
        if !(kappa.abs() < 1.0) {
            return Err(Error::Degenerate(format!("reflection coefficient {kappa} at order {k}")));
        }
        let old = phi.clone();
        for j in 0..k - 1 {
            phi[j] = old[j] - kappa * old[k - 2 - j];
        }
        phi.push(kappa);
        v *= 1.0 - kappa * kappa;
    }
    Ok((errs, vars))
}

/// Inverse of `innovations`: x_t = x̂_t + √v_t·e_t for unit-variance e.
pub(crate) fn innovations_filter(acvf: &[f64], e: &[f64]) -> Result<Vec<f64>> {
    let n = e.len();
    let mut x = Vec::with_capacity(n);
    let mut phi: Vec<f64> = Vec::with_capacity(n);
    let mut v = acvf[0];
    if !(v > 0.0) {
        return Err(Error::Degenerate(format!("c(0) = {v} is not positive")));
    }
    for t in 0..n {
        let pred: f64 = phi.iter().enumerate().map(|(j, a)| a * x[t - 1 - j]).sum();
        x.push(pred + v.sqrt() * e[t]);
        if t + 1 == n {
            break;
        }
        let k = t + 1;
        let s: f64 = phi.iter().enumerate().map(|(j, a)| a * acvf[k - 1 - j]).sum();
        let kappa = (acvf[k] - s) / v;
        if !(kappa.abs() < 1.0) {
            return Err(Error::Degenerate(format!("reflection coefficient {kappa} at order {k}")));
        }
        let old = phi.clone();
        for j in 0..k - 1 {
            phi[j] = old[j] - kappa * old[k - 2 - j];
        }
        phi.push(kappa);
        v *= 1.0 - kappa * kappa;
    }
    Ok(x)
}

/// (n⁻¹ x'Γ⁻¹x, n⁻¹ log|Γ|).
pub fn gaussian_quadratic_and_logdet(x: &TimeSeriesSample, model: &SpectralModel) -> Result<(f64, f64)> {
    let n = x.len();
    let acvf = model.autocovariances(n - 1)?;
    quadratic_and_logdet_from_acvf(&acvf, x.values())
}

pub(crate) fn quadratic_and_logdet_from_acvf(acvf: &[f64], x: &[f64]) -> Result<(f64, f64)> {
    let n = x.len() as f64;
    let (e, v) = innovations(acvf, x)?;
    let q: f64 = e.iter().zip(&v).map(|(a, b)| a * a / b).sum();
    let ld: f64 = v.iter().map(|b| b.ln()).sum();
    Ok((q / n, ld / n))
}

/// n⁻¹ Σ_k Re[J̃(ω_k) conj J(ω_k)] / f_θ(ω_k) with J̃ built from `phi_pred`.
pub fn gaussian_likelihood_freq(x: &TimeSeriesSample, model: &SpectralModel, phi_pred: &[f64]) -> Result<f64> {
    let n = x.len();
    let grid = fourier_grid(n)?;
    let j = dft(x);
    let pred = predictive_dft_ar(x, phi_pred, &grid)?;
    let f = model.density_on_grid(n, false)?;
    let s: f64 = (0..n).map(|k| ((j.values[k] + pred.values[k]) * j.values[k].conj()).re / f[k]).sum();
    Ok(s / n as f64)
}

/// Closed form of n⁻¹ x'Γ⁻¹x for an AR(p) model with σ² = 1: the Whittle
/// term with |φ_p|² plus two boundary sums over circularly indexed data.
pub fn gaussian_ar_closed_form(x: &[f64], phi: &[f64]) -> f64 {
    let n = x.len();
    let p = phi.len();
    let nn = n as i64;
    // 1-based circular index; 0 maps to n
    let at = |i: i64| x[((i - 1).rem_euclid(nn)) as usize];
    let j = crate::dft::dft_values(x);
    let whittle: f64 = (1..=n)
        .map(|k| j.values[k - 1].norm_sqr() * poly_value(phi, -1.0, omega(k, n)).norm_sqr())
        .sum();
    let mut left = 0.0;
    let mut right = 0.0;
    for l in 1..=p {
        for s in 0..=(p - l) {
            let c = phi[l + s - 1];
            let si = s as i64;
            let a = at(-si) - (1..=p).map(|jj| phi[jj - 1] * at(jj as i64 - si)).sum::<f64>();
            left += at(l as i64) * c * a;
            let b = at(si + 1) - (1..=p).map(|jj| phi[jj - 1] * at(si + 1 - jj as i64)).sum::<f64>();
            right += at(nn + 1 - l as i64) * c * b;
        }
    }
    (whittle + left + right) / n as f64
}

/// φ_{j,p}(ω) = φ_p(ω)⁻¹ Σ_{s=0}^{p-j} φ_{j+s} e^{-isω}.
fn phi_jp(phi: &[f64], j: usize, w: f64) -> Complex64 {
    let p = phi.len();
    let s: Complex64 = (0..=(p - j))
        .map(|s| phi[j + s - 1] * Complex64::from_polar(1.0, -(s as f64) * w))
        .sum();
    s / poly_value(phi, -1.0, w)
}

/// D_n(f_θ) for an AR(p) model with p ≤ n/2.
pub fn dn_matrix_ar(phi: &[f64], n: usize) -> Result<DMatrix<Complex64>> {
    let p = phi.len();
    if 2 * p > n {
        return Err(Error::UnsupportedOverlap { p, n });
    }
    if n > DENSE_CAP {
        return invalid(format!("dense D_n limited to n <= {DENSE_CAP}"));
    }
    let s = 1.0 / (n as f64).sqrt();
    let mut d = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for k in 1..=n {
        let w = omega(k, n);
        let rot = Complex64::from_polar(1.0, w);
        for j in 1..=p {
            let v = phi_jp(phi, j, w);
            d[(k - 1, j - 1)] = s * v;
            d[(k - 1, n - j)] = s * rot * v.conj();
        }
    }
    Ok(d)
}

/// Γ_n⁻¹ − C_n(f⁻¹) for an AR(p) model (σ² = 1), nonzero only in the first
/// and last p columns.
pub fn corner_difference_ar(phi: &[f64], n: usize) -> Result<DMatrix<f64>> {
    let p = phi.len();
    if p == 0 || 2 * p > n {
        return Err(Error::UnsupportedOverlap { p, n });
    }
    let tilde = |i: i64| -> f64 {
        let i = i.rem_euclid(n as i64) as usize;
        if i == 0 {
            1.0
        } else if i <= p {
            -phi[i - 1]
        } else {
            0.0
        }
    };
    let mut m = DMatrix::zeros(n, n);
    for s in 1..=n {
        for t in 1..=p {
            m[(s - 1, t - 1)] = (0..=(p - t)).map(|l| phi[l + t - 1] * tilde((l + s) as i64)).sum();
        }
        for t in (n - p + 1)..=n {
            let off = n - t;
            m[(s - 1, t - 1)] =
                (1..=(p - off)).map(|l| phi[l + off - 1] * tilde(l as i64 - s as i64)).sum();
        }
    }
    Ok(m)
}

fn ar_model(phi: &[f64]) -> Result<SpectralModel> {
    let m = SpectralModel::ar(phi)?;
    if !m.is_valid() {
        return Err(Error::InvalidParams("AR coefficients are not causal".into()));
    }
    Ok(m)
}

fn inverse_spd(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    a.clone()
        .cholesky()
        .map(|c| c.inverse())
        .ok_or_else(|| Error::Degenerate("matrix is not positive definite".into()))
}

/// max |Γ_n⁻¹ − F*Δ(f⁻¹)(F + D_n)|.
pub fn inverse_identity_residual(phi: &[f64], n: usize) -> Result<f64> {
    let model = ar_model(phi)?;
    let gamma = toeplitz_gram(&model, n)?.dense()?;
    let inv = inverse_spd(&gamma)?;
    let f = dft_matrix(n);
    let d = dn_matrix_ar(phi, n)?;
    let finv = model.density_on_grid(n, false)?;
    let delta = DMatrix::from_fn(n, n, |a, b| if a == b { Complex64::new(1.0 / finv[a], 0.0) } else { Complex64::new(0.0, 0.0) });
    let rhs = f.adjoint() * delta * (&f + &d);
    Ok(max_abs_diff_real(&inv, &rhs))
}

/// max |(F + D_n) Γ_n F* − Δ(f)|.
pub fn biorthogonality_residual(phi: &[f64], n: usize) -> Result<f64> {
    let model = ar_model(phi)?;
    let gamma = toeplitz_gram(&model, n)?.dense()?.map(|v| Complex64::new(v, 0.0));
    let f = dft_matrix(n);
    let d = dn_matrix_ar(phi, n)?;
    let dens = model.density_on_grid(n, false)?;
    let lhs = (&f + &d) * gamma * f.adjoint();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let target = if a == b { dens[a] } else { 0.0 };
            worst = worst.max((lhs[(a, b)] - target).norm());
        }
    }
    Ok(worst)
}

/// max |corner formula − (Γ_n⁻¹ − C_n(f⁻¹))|.
pub fn corner_formula_residual(phi: &[f64], n: usize) -> Result<f64> {
    let model = ar_model(phi)?;
    let inv = inverse_spd(&toeplitz_gram(&model, n)?.dense()?)?;
    let c = circulant(|w| 1.0 / model.density_unchecked(w).unwrap_or(f64::NAN), n)?;
    let corner = corner_difference_ar(phi, n)?;
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let dense = inv[(a, b)] - c[(a, b)].re;
            worst = worst.max((dense - corner[(a, b)]).abs()).max(c[(a, b)].im.abs());
        }
    }
    Ok(worst)
}

fn max_abs_diff_real(a: &DMatrix<f64>, b: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            worst = worst.max((Complex64::new(a[(i, j)], 0.0) - b[(i, j)]).norm());
        }
    }
    worst
}
