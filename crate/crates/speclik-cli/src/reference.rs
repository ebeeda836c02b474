//! Published bias / sd values for Gaussian innovations, printed next to
//! `reproduce` output.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reference {
    pub scenario: &'static str,
    /// Fitted family, only needed where a scenario is fitted by more than one.
    pub family: Option<&'static str>,
    /// θ or d for the one-parameter scenarios.
    pub setting: Option<f64>,
    pub n: usize,
    pub criterion: &'static str,
    /// Parameter name, `divergence` for I_n(f; f_θ̂) − I_n(f; f_θn), or
    /// `aggregate` for n·‖mean(θ̂) − θ‖₂.
    pub param: &'static str,
    pub bias: f64,
    pub sd: Option<f64>,
}

const fn r(scenario: &'static str, setting: f64, n: usize, criterion: &'static str, param: &'static str, bias: f64, sd: f64) -> Reference {
    Reference { scenario, family: None, setting: Some(setting), n, criterion, param, bias, sd: Some(sd) }
}

const fn m(family: &'static str, n: usize, criterion: &'static str, param: &'static str, bias: f64, sd: f64) -> Reference {
    Reference { scenario: "arma32-misspec", family: Some(family), setting: None, n, criterion, param, bias, sd: Some(sd) }
}

const fn a8(criterion: &'static str, param: &'static str, bias: f64, sd: Option<f64>) -> Reference {
    Reference { scenario: "ar8-peaked", family: None, setting: None, n: 100, criterion, param, bias, sd }
}

/// Best-fitting θ_n and I_n(f; f_θn) for the ARMA(3,2) truth.
pub const BEST_FIT: [(&str, usize, [f64; 2], f64); 6] = [
    ("arma:1,1", 20, [0.693, 0.845], 3.773),
    ("arma:1,1", 50, [0.694, 0.857], 3.415),
    ("arma:1,1", 300, [0.696, 0.857], 3.388),
    ("ar:2", 20, [1.367, -0.841], 2.902),
    ("ar:2", 50, [1.364, -0.803], 2.937),
    ("ar:2", 300, [1.365, -0.802], 2.916),
];

pub const REFERENCES: &[Reference] = &[
    r("ar1-table", 0.1, 20, "gaussian", "phi", -0.012, 0.22),
    r("ar1-table", 0.3, 20, "gaussian", "phi", -0.028, 0.21),
    r("ar1-table", 0.5, 20, "gaussian", "phi", -0.043, 0.19),
    r("ar1-table", 0.7, 20, "gaussian", "phi", -0.066, 0.18),
    r("ar1-table", 0.9, 20, "gaussian", "phi", -0.072, 0.14),
    r("ma1-table", 0.1, 20, "gaussian", "psi", 0.01, 0.28),
    r("ma1-table", 0.3, 20, "gaussian", "psi", 0.016, 0.28),
    r("ma1-table", 0.5, 20, "gaussian", "psi", 0.025, 0.24),
    r("ma1-table", 0.7, 20, "gaussian", "psi", 0.012, 0.21),
    r("ma1-table", 0.9, 20, "gaussian", "psi", 0.029, 0.17),
    r("ar1-table", 0.1, 20, "whittle", "phi", -0.015, 0.21),
    r("ar1-table", 0.3, 20, "whittle", "phi", -0.041, 0.2),
    r("ar1-table", 0.5, 20, "whittle", "phi", -0.063, 0.19),
    r("ar1-table", 0.7, 20, "whittle", "phi", -0.095, 0.18),
    r("ar1-table", 0.9, 20, "whittle", "phi", -0.124, 0.15),
    r("ma1-table", 0.1, 20, "whittle", "psi", 0.005, 0.29),
    r("ma1-table", 0.3, 20, "whittle", "psi", 0.002, 0.28),
    r("ma1-table", 0.5, 20, "whittle", "psi", -0.004, 0.24),
    r("ma1-table", 0.7, 20, "whittle", "psi", -0.052, 0.23),
    r("ma1-table", 0.9, 20, "whittle", "psi", -0.152, 0.21),
    r("ar1-table", 0.1, 20, "boundary", "phi", -0.015, 0.22),
    r("ar1-table", 0.3, 20, "boundary", "phi", -0.037, 0.21),
    r("ar1-table", 0.5, 20, "boundary", "phi", -0.054, 0.19),
    r("ar1-table", 0.7, 20, "boundary", "phi", -0.079, 0.18),
    r("ar1-table", 0.9, 20, "boundary", "phi", -0.103, 0.14),
    r("ma1-table", 0.1, 20, "boundary", "psi", 0.007, 0.3),
    r("ma1-table", 0.3, 20, "boundary", "psi", 0.009, 0.29),
    r("ma1-table", 0.5, 20, "boundary", "psi", 0.009, 0.24),
    r("ma1-table", 0.7, 20, "boundary", "psi", -0.022, 0.24),
    r("ma1-table", 0.9, 20, "boundary", "psi", -0.111, 0.2),
    r("ar1-table", 0.1, 20, "hybrid", "phi", -0.012, 0.22),
    r("ar1-table", 0.3, 20, "hybrid", "phi", -0.03, 0.21),
    r("ar1-table", 0.5, 20, "hybrid", "phi", -0.049, 0.19),
    r("ar1-table", 0.7, 20, "hybrid", "phi", -0.072, 0.18),
    r("ar1-table", 0.9, 20, "hybrid", "phi", -0.095, 0.14),
    r("ma1-table", 0.1, 20, "hybrid", "psi", 0.011, 0.3),
    r("ma1-table", 0.3, 20, "hybrid", "psi", 0.021, 0.29),
    r("ma1-table", 0.5, 20, "hybrid", "psi", 0.026, 0.25),
    r("ma1-table", 0.7, 20, "hybrid", "psi", -0.007, 0.22),
    r("ma1-table", 0.9, 20, "hybrid", "psi", -0.074, 0.17),
    r("ar1-table", 0.1, 20, "tapered", "phi", -0.014, 0.22),
    r("ar1-table", 0.3, 20, "tapered", "phi", -0.036, 0.21),
    r("ar1-table", 0.5, 20, "tapered", "phi", -0.063, 0.19),
    r("ar1-table", 0.7, 20, "tapered", "phi", -0.09, 0.18),
    r("ar1-table", 0.9, 20, "tapered", "phi", -0.117, 0.14),
    r("ma1-table", 0.1, 20, "tapered", "psi", 0.004, 0.29),
    r("ma1-table", 0.3, 20, "tapered", "psi", 0.004, 0.28),
    r("ma1-table", 0.5, 20, "tapered", "psi", -0.006, 0.24),
    r("ma1-table", 0.7, 20, "tapered", "psi", -0.043, 0.21),
    r("ma1-table", 0.9, 20, "tapered", "psi", -0.122, 0.18),
    r("ar1-table", 0.1, 20, "debiased", "phi", -0.013, 0.22),
    r("ar1-table", 0.3, 20, "debiased", "phi", -0.033, 0.21),
    r("ar1-table", 0.5, 20, "debiased", "phi", -0.049, 0.19),
    r("ar1-table", 0.7, 20, "debiased", "phi", -0.069, 0.19),
    r("ar1-table", 0.9, 20, "debiased", "phi", -0.085, 0.16),
    r("ma1-table", 0.1, 20, "debiased", "psi", 0.005, 0.29),
    r("ma1-table", 0.3, 20, "debiased", "psi", 0.013, 0.28),
    r("ma1-table", 0.5, 20, "debiased", "psi", 0.021, 0.25),
    r("ma1-table", 0.7, 20, "debiased", "psi", -0.005, 0.24),
    r("ma1-table", 0.9, 20, "debiased", "psi", -0.088, 0.21),
    r("ar1-table", 0.1, 50, "gaussian", "phi", -0.006, 0.14),
    r("ar1-table", 0.3, 50, "gaussian", "phi", -0.011, 0.14),
    r("ar1-table", 0.5, 50, "gaussian", "phi", -0.013, 0.12),
    r("ar1-table", 0.7, 50, "gaussian", "phi", -0.033, 0.11),
    r("ar1-table", 0.9, 50, "gaussian", "phi", -0.03, 0.07),
    r("ma1-table", 0.1, 50, "gaussian", "psi", -0.002, 0.16),
    r("ma1-table", 0.3, 50, "gaussian", "psi", 0.008, 0.15),
    r("ma1-table", 0.5, 50, "gaussian", "psi", 0.017, 0.14),
    r("ma1-table", 0.7, 50, "gaussian", "psi", 0.018, 0.12),
    r("ma1-table", 0.9, 50, "gaussian", "psi", 0.014, 0.08),
    r("ar1-table", 0.1, 50, "whittle", "phi", -0.008, 0.14),
    r("ar1-table", 0.3, 50, "whittle", "phi", -0.016, 0.14),
    r("ar1-table", 0.5, 50, "whittle", "phi", -0.023, 0.12),
    r("ar1-table", 0.7, 50, "whittle", "phi", -0.045, 0.11),
    r("ar1-table", 0.9, 50, "whittle", "phi", -0.049, 0.08),
    r("ma1-table", 0.1, 50, "whittle", "psi", -0.004, 0.15),
    r("ma1-table", 0.3, 50, "whittle", "psi", 0.001, 0.15),
    r("ma1-table", 0.5, 50, "whittle", "psi", 0.001, 0.14),
    r("ma1-table", 0.7, 50, "whittle", "psi", -0.02, 0.13),
    r("ma1-table", 0.9, 50, "whittle", "psi", -0.067, 0.11),
    r("ar1-table", 0.1, 50, "boundary", "phi", -0.007, 0.14),
    r("ar1-table", 0.3, 50, "boundary", "phi", -0.012, 0.14),
    r("ar1-table", 0.5, 50, "boundary", "phi", -0.015, 0.12),
    r("ar1-table", 0.7, 50, "boundary", "phi", -0.034, 0.11),
    r("ar1-table", 0.9, 50, "boundary", "phi", -0.036, 0.07),
    r("ma1-table", 0.1, 50, "boundary", "psi", -0.003, 0.16),
    r("ma1-table", 0.3, 50, "boundary", "psi", 0.006, 0.16),
    r("ma1-table", 0.5, 50, "boundary", "psi", 0.013, 0.14),
    r("ma1-table", 0.7, 50, "boundary", "psi", 0.005, 0.13),
    r("ma1-table", 0.9, 50, "boundary", "psi", -0.026, 0.09),
    r("ar1-table", 0.1, 50, "hybrid", "phi", -0.005, 0.14),
    r("ar1-table", 0.3, 50, "hybrid", "phi", -0.011, 0.14),
    r("ar1-table", 0.5, 50, "hybrid", "phi", -0.015, 0.13),
    r("ar1-table", 0.7, 50, "hybrid", "phi", -0.033, 0.11),
    r("ar1-table", 0.9, 50, "hybrid", "phi", -0.035, 0.07),
    r("ma1-table", 0.1, 50, "hybrid", "psi", -0.001, 0.16),
    r("ma1-table", 0.3, 50, "hybrid", "psi", 0.01, 0.16),
    r("ma1-table", 0.5, 50, "hybrid", "psi", 0.015, 0.14),
    r("ma1-table", 0.7, 50, "hybrid", "psi", 0.014, 0.12),
    r("ma1-table", 0.9, 50, "hybrid", "psi", -0.01, 0.07),
    r("ar1-table", 0.1, 50, "tapered", "phi", -0.005, 0.14),
    r("ar1-table", 0.3, 50, "tapered", "phi", -0.013, 0.14),
    r("ar1-table", 0.5, 50, "tapered", "phi", -0.018, 0.13),
    r("ar1-table", 0.7, 50, "tapered", "phi", -0.038, 0.11),
    r("ar1-table", 0.9, 50, "tapered", "phi", -0.039, 0.08),
    r("ma1-table", 0.1, 50, "tapered", "psi", 0.0, 0.16),
    r("ma1-table", 0.3, 50, "tapered", "psi", 0.008, 0.16),
    r("ma1-table", 0.5, 50, "tapered", "psi", 0.01, 0.14),
    r("ma1-table", 0.7, 50, "tapered", "psi", 0.003, 0.12),
    r("ma1-table", 0.9, 50, "tapered", "psi", -0.023, 0.08),
    r("ar1-table", 0.1, 50, "debiased", "phi", -0.006, 0.14),
    r("ar1-table", 0.3, 50, "debiased", "phi", -0.011, 0.14),
    r("ar1-table", 0.5, 50, "debiased", "phi", -0.015, 0.12),
    r("ar1-table", 0.7, 50, "debiased", "phi", -0.035, 0.11),
    r("ar1-table", 0.9, 50, "debiased", "phi", -0.032, 0.08),
    r("ma1-table", 0.1, 50, "debiased", "psi", -0.002, 0.16),
    r("ma1-table", 0.3, 50, "debiased", "psi", 0.009, 0.16),
    r("ma1-table", 0.5, 50, "debiased", "psi", 0.019, 0.15),
    r("ma1-table", 0.7, 50, "debiased", "psi", 0.017, 0.15),
    r("ma1-table", 0.9, 50, "debiased", "psi", -0.011, 0.11),
    r("ar1-table", 0.1, 300, "gaussian", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "gaussian", "phi", -0.002, 0.06),
    r("ar1-table", 0.5, 300, "gaussian", "phi", -0.001, 0.05),
    r("ar1-table", 0.7, 300, "gaussian", "phi", -0.004, 0.04),
    r("ar1-table", 0.9, 300, "gaussian", "phi", -0.005, 0.03),
    r("ma1-table", 0.1, 300, "gaussian", "psi", 0.002, 0.06),
    r("ma1-table", 0.3, 300, "gaussian", "psi", 0.0, 0.06),
    r("ma1-table", 0.5, 300, "gaussian", "psi", 0.003, 0.05),
    r("ma1-table", 0.7, 300, "gaussian", "psi", 0.0, 0.04),
    r("ma1-table", 0.9, 300, "gaussian", "psi", 0.004, 0.03),
    r("ar1-table", 0.1, 300, "whittle", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "whittle", "phi", -0.003, 0.06),
    r("ar1-table", 0.5, 300, "whittle", "phi", -0.003, 0.05),
    r("ar1-table", 0.7, 300, "whittle", "phi", -0.007, 0.04),
    r("ar1-table", 0.9, 300, "whittle", "phi", -0.008, 0.03),
    r("ma1-table", 0.1, 300, "whittle", "psi", 0.001, 0.06),
    r("ma1-table", 0.3, 300, "whittle", "psi", -0.001, 0.06),
    r("ma1-table", 0.5, 300, "whittle", "psi", 0.0, 0.05),
    r("ma1-table", 0.7, 300, "whittle", "psi", -0.007, 0.04),
    r("ma1-table", 0.9, 300, "whittle", "psi", -0.02, 0.04),
    r("ar1-table", 0.1, 300, "boundary", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "boundary", "phi", -0.002, 0.06),
    r("ar1-table", 0.5, 300, "boundary", "phi", -0.001, 0.05),
    r("ar1-table", 0.7, 300, "boundary", "phi", -0.004, 0.04),
    r("ar1-table", 0.9, 300, "boundary", "phi", -0.006, 0.03),
    r("ma1-table", 0.1, 300, "boundary", "psi", 0.002, 0.06),
    r("ma1-table", 0.3, 300, "boundary", "psi", 0.0, 0.06),
    r("ma1-table", 0.5, 300, "boundary", "psi", 0.003, 0.05),
    r("ma1-table", 0.7, 300, "boundary", "psi", 0.0, 0.04),
    r("ma1-table", 0.9, 300, "boundary", "psi", -0.002, 0.03),
    r("ar1-table", 0.1, 300, "hybrid", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "hybrid", "phi", -0.002, 0.06),
    r("ar1-table", 0.5, 300, "hybrid", "phi", -0.001, 0.05),
    r("ar1-table", 0.7, 300, "hybrid", "phi", -0.005, 0.04),
    r("ar1-table", 0.9, 300, "hybrid", "phi", -0.006, 0.03),
    r("ma1-table", 0.1, 300, "hybrid", "psi", 0.002, 0.06),
    r("ma1-table", 0.3, 300, "hybrid", "psi", 0.0, 0.06),
    r("ma1-table", 0.5, 300, "hybrid", "psi", 0.004, 0.05),
    r("ma1-table", 0.7, 300, "hybrid", "psi", 0.001, 0.05),
    r("ma1-table", 0.9, 300, "hybrid", "psi", 0.003, 0.03),
    r("ar1-table", 0.1, 300, "tapered", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "tapered", "phi", -0.002, 0.06),
    r("ar1-table", 0.5, 300, "tapered", "phi", -0.001, 0.05),
    r("ar1-table", 0.7, 300, "tapered", "phi", -0.005, 0.05),
    r("ar1-table", 0.9, 300, "tapered", "phi", -0.006, 0.03),
    r("ma1-table", 0.1, 300, "tapered", "psi", 0.002, 0.06),
    r("ma1-table", 0.3, 300, "tapered", "psi", 0.0, 0.06),
    r("ma1-table", 0.5, 300, "tapered", "psi", 0.004, 0.05),
    r("ma1-table", 0.7, 300, "tapered", "psi", 0.001, 0.05),
    r("ma1-table", 0.9, 300, "tapered", "psi", 0.003, 0.03),
    r("ar1-table", 0.1, 300, "debiased", "phi", 0.0, 0.06),
    r("ar1-table", 0.3, 300, "debiased", "phi", -0.002, 0.06),
    r("ar1-table", 0.5, 300, "debiased", "phi", -0.001, 0.05),
    r("ar1-table", 0.7, 300, "debiased", "phi", -0.004, 0.04),
    r("ar1-table", 0.9, 300, "debiased", "phi", -0.006, 0.03),
    r("ma1-table", 0.1, 300, "debiased", "psi", 0.002, 0.06),
    r("ma1-table", 0.3, 300, "debiased", "psi", 0.0, 0.06),
    r("ma1-table", 0.5, 300, "debiased", "psi", 0.003, 0.05),
    r("ma1-table", 0.7, 300, "debiased", "psi", 0.0, 0.05),
    r("ma1-table", 0.9, 300, "debiased", "psi", 0.009, 0.05),
    r("arfima-parametric", -0.4, 20, "gaussian", "d", -0.097, 0.23),
    r("arfima-parametric", -0.2, 20, "gaussian", "d", -0.148, 0.22),
    r("arfima-parametric", 0.2, 20, "gaussian", "d", -0.24, 0.23),
    r("arfima-parametric", 0.4, 20, "gaussian", "d", -0.289, 0.22),
    r("arfima-parametric", -0.4, 20, "whittle", "d", 0.027, 0.3),
    r("arfima-parametric", -0.2, 20, "whittle", "d", 0.006, 0.28),
    r("arfima-parametric", 0.2, 20, "whittle", "d", -0.008, 0.29),
    r("arfima-parametric", 0.4, 20, "whittle", "d", -0.016, 0.29),
    r("arfima-parametric", -0.4, 20, "boundary", "d", 0.014, 0.31),
    r("arfima-parametric", -0.2, 20, "boundary", "d", 0.0, 0.29),
    r("arfima-parametric", 0.2, 20, "boundary", "d", -0.005, 0.3),
    r("arfima-parametric", 0.4, 20, "boundary", "d", -0.007, 0.3),
    r("arfima-parametric", -0.4, 20, "hybrid", "d", 0.009, 0.31),
    r("arfima-parametric", -0.2, 20, "hybrid", "d", -0.007, 0.3),
    r("arfima-parametric", 0.2, 20, "hybrid", "d", 0.005, 0.3),
    r("arfima-parametric", 0.4, 20, "hybrid", "d", -0.001, 0.3),
    r("arfima-parametric", -0.4, 20, "tapered", "d", 0.026, 0.3),
    r("arfima-parametric", -0.2, 20, "tapered", "d", 0.0, 0.3),
    r("arfima-parametric", 0.2, 20, "tapered", "d", 0.006, 0.3),
    r("arfima-parametric", 0.4, 20, "tapered", "d", 0.003, 0.29),
    r("arfima-parametric", -0.4, 20, "debiased", "d", 0.015, 0.29),
    r("arfima-parametric", -0.2, 20, "debiased", "d", -0.003, 0.27),
    r("arfima-parametric", 0.2, 20, "debiased", "d", -0.029, 0.26),
    r("arfima-parametric", 0.4, 20, "debiased", "d", -0.044, 0.27),
    r("arfima-parametric", -0.4, 50, "gaussian", "d", -0.042, 0.13),
    r("arfima-parametric", -0.2, 50, "gaussian", "d", -0.073, 0.14),
    r("arfima-parametric", 0.2, 50, "gaussian", "d", -0.097, 0.14),
    r("arfima-parametric", 0.4, 50, "gaussian", "d", -0.123, 0.12),
    r("arfima-parametric", -0.4, 50, "whittle", "d", 0.006, 0.15),
    r("arfima-parametric", -0.2, 50, "whittle", "d", -0.016, 0.15),
    r("arfima-parametric", 0.2, 50, "whittle", "d", -0.013, 0.15),
    r("arfima-parametric", 0.4, 50, "whittle", "d", -0.005, 0.15),
    r("arfima-parametric", -0.4, 50, "boundary", "d", -0.005, 0.15),
    r("arfima-parametric", -0.2, 50, "boundary", "d", -0.02, 0.16),
    r("arfima-parametric", 0.2, 50, "boundary", "d", -0.011, 0.16),
    r("arfima-parametric", 0.4, 50, "boundary", "d", 0.001, 0.16),
    r("arfima-parametric", -0.4, 50, "hybrid", "d", -0.011, 0.15),
    r("arfima-parametric", -0.2, 50, "hybrid", "d", -0.021, 0.15),
    r("arfima-parametric", 0.2, 50, "hybrid", "d", -0.012, 0.16),
    r("arfima-parametric", 0.4, 50, "hybrid", "d", 0.0, 0.16),
    r("arfima-parametric", -0.4, 50, "tapered", "d", -0.007, 0.15),
    r("arfima-parametric", -0.2, 50, "tapered", "d", -0.019, 0.16),
    r("arfima-parametric", 0.2, 50, "tapered", "d", -0.011, 0.16),
    r("arfima-parametric", 0.4, 50, "tapered", "d", 0.01, 0.16),
    r("arfima-parametric", -0.4, 50, "debiased", "d", -0.008, 0.16),
    r("arfima-parametric", -0.2, 50, "debiased", "d", -0.02, 0.16),
    r("arfima-parametric", 0.2, 50, "debiased", "d", -0.019, 0.15),
    r("arfima-parametric", 0.4, 50, "debiased", "d", -0.021, 0.14),
    r("arfima-parametric", -0.4, 300, "gaussian", "d", -0.006, 0.05),
    r("arfima-parametric", -0.2, 300, "gaussian", "d", -0.013, 0.05),
    r("arfima-parametric", 0.2, 300, "gaussian", "d", -0.02, 0.05),
    r("arfima-parametric", 0.4, 300, "gaussian", "d", -0.083, 0.02),
    r("arfima-parametric", -0.4, 300, "whittle", "d", 0.006, 0.05),
    r("arfima-parametric", -0.2, 300, "whittle", "d", -0.001, 0.05),
    r("arfima-parametric", 0.2, 300, "whittle", "d", -0.004, 0.05),
    r("arfima-parametric", 0.4, 300, "whittle", "d", 0.002, 0.05),
    r("arfima-parametric", -0.4, 300, "boundary", "d", 0.002, 0.05),
    r("arfima-parametric", -0.2, 300, "boundary", "d", -0.003, 0.05),
    r("arfima-parametric", 0.2, 300, "boundary", "d", -0.003, 0.05),
    r("arfima-parametric", 0.4, 300, "boundary", "d", 0.002, 0.05),
    r("arfima-parametric", -0.4, 300, "hybrid", "d", 0.0, 0.05),
    r("arfima-parametric", -0.2, 300, "hybrid", "d", -0.004, 0.05),
    r("arfima-parametric", 0.2, 300, "hybrid", "d", -0.004, 0.05),
    r("arfima-parametric", 0.4, 300, "hybrid", "d", 0.001, 0.05),
    r("arfima-parametric", -0.4, 300, "tapered", "d", 0.0, 0.05),
    r("arfima-parametric", -0.2, 300, "tapered", "d", -0.004, 0.05),
    r("arfima-parametric", 0.2, 300, "tapered", "d", -0.004, 0.05),
    r("arfima-parametric", 0.4, 300, "tapered", "d", 0.003, 0.05),
    r("arfima-parametric", -0.4, 300, "debiased", "d", -0.001, 0.05),
    r("arfima-parametric", -0.2, 300, "debiased", "d", -0.003, 0.05),
    r("arfima-parametric", 0.2, 300, "debiased", "d", -0.007, 0.05),
    r("arfima-parametric", 0.4, 300, "debiased", "d", -0.06, 0.02),
    r("arfima-lw", -0.4, 20, "lw", "d", 0.283, 0.46),
    r("arfima-lw", -0.2, 20, "lw", "d", 0.111, 0.5),
    r("arfima-lw", 0.2, 20, "lw", "d", -0.075, 0.48),
    r("arfima-lw", 0.4, 20, "lw", "d", -0.226, 0.43),
    r("arfima-lw", -0.4, 20, "boundary-lw", "d", 0.282, 0.46),
    r("arfima-lw", -0.2, 20, "boundary-lw", "d", 0.109, 0.51),
    r("arfima-lw", 0.2, 20, "boundary-lw", "d", -0.075, 0.48),
    r("arfima-lw", 0.4, 20, "boundary-lw", "d", -0.22, 0.44),
    r("arfima-lw", -0.4, 20, "hybrid-lw", "d", 0.275, 0.46),
    r("arfima-lw", -0.2, 20, "hybrid-lw", "d", 0.115, 0.52),
    r("arfima-lw", 0.2, 20, "hybrid-lw", "d", -0.067, 0.49),
    r("arfima-lw", 0.4, 20, "hybrid-lw", "d", -0.209, 0.44),
    r("arfima-lw", -0.4, 20, "tapered-lw", "d", 0.279, 0.46),
    r("arfima-lw", -0.2, 20, "tapered-lw", "d", 0.121, 0.52),
    r("arfima-lw", 0.2, 20, "tapered-lw", "d", -0.068, 0.49),
    r("arfima-lw", 0.4, 20, "tapered-lw", "d", -0.204, 0.43),
    r("arfima-lw", -0.4, 50, "lw", "d", 0.06, 0.26),
    r("arfima-lw", -0.2, 50, "lw", "d", -0.056, 0.33),
    r("arfima-lw", 0.2, 50, "lw", "d", -0.089, 0.37),
    r("arfima-lw", 0.4, 50, "lw", "d", -0.109, 0.32),
    r("arfima-lw", -0.4, 50, "boundary-lw", "d", 0.045, 0.26),
    r("arfima-lw", -0.2, 50, "boundary-lw", "d", -0.063, 0.34),
    r("arfima-lw", 0.2, 50, "boundary-lw", "d", -0.088, 0.38),
    r("arfima-lw", 0.4, 50, "boundary-lw", "d", -0.106, 0.32),
    r("arfima-lw", -0.4, 50, "hybrid-lw", "d", 0.033, 0.25),
    r("arfima-lw", -0.2, 50, "hybrid-lw", "d", -0.069, 0.34),
    r("arfima-lw", 0.2, 50, "hybrid-lw", "d", -0.09, 0.38),
    r("arfima-lw", 0.4, 50, "hybrid-lw", "d", -0.11, 0.32),
    r("arfima-lw", -0.4, 50, "tapered-lw", "d", 0.035, 0.25),
    r("arfima-lw", -0.2, 50, "tapered-lw", "d", -0.068, 0.34),
    r("arfima-lw", 0.2, 50, "tapered-lw", "d", -0.085, 0.38),
    r("arfima-lw", 0.4, 50, "tapered-lw", "d", -0.085, 0.31),
    r("arfima-lw", -0.4, 300, "lw", "d", 0.056, 0.12),
    r("arfima-lw", -0.2, 300, "lw", "d", -0.014, 0.11),
    r("arfima-lw", 0.2, 300, "lw", "d", -0.01, 0.12),
    r("arfima-lw", 0.4, 300, "lw", "d", 0.004, 0.11),
    r("arfima-lw", -0.4, 300, "boundary-lw", "d", 0.052, 0.12),
    r("arfima-lw", -0.2, 300, "boundary-lw", "d", -0.017, 0.11),
    r("arfima-lw", 0.2, 300, "boundary-lw", "d", -0.009, 0.12),
    r("arfima-lw", 0.4, 300, "boundary-lw", "d", 0.003, 0.11),
    r("arfima-lw", -0.4, 300, "hybrid-lw", "d", 0.054, 0.12),
    r("arfima-lw", -0.2, 300, "hybrid-lw", "d", -0.018, 0.12),
    r("arfima-lw", 0.2, 300, "hybrid-lw", "d", -0.011, 0.12),
    r("arfima-lw", 0.4, 300, "hybrid-lw", "d", -0.002, 0.11),
    r("arfima-lw", -0.4, 300, "tapered-lw", "d", 0.057, 0.12),
    r("arfima-lw", -0.2, 300, "tapered-lw", "d", -0.018, 0.12),
    r("arfima-lw", 0.2, 300, "tapered-lw", "d", -0.011, 0.12),
    r("arfima-lw", 0.4, 300, "tapered-lw", "d", 0.003, 0.12),
    m("arma:1,1", 20, "gaussian", "phi", 0.031, 0.1),
    m("arma:1,1", 20, "whittle", "phi", -0.095, 0.16),
    m("arma:1,1", 20, "boundary", "phi", -0.023, 0.12),
    m("arma:1,1", 20, "hybrid", "phi", -0.006, 0.1),
    m("arma:1,1", 20, "tapered", "phi", -0.08, 0.13),
    m("arma:1,1", 20, "debiased", "phi", 0.187, 0.11),
    m("arma:1,1", 20, "gaussian", "psi", 0.069, 0.08),
    m("arma:1,1", 20, "whittle", "psi", -0.172, 0.18),
    m("arma:1,1", 20, "boundary", "psi", -0.026, 0.14),
    m("arma:1,1", 20, "hybrid", "psi", 0.028, 0.1),
    m("arma:1,1", 20, "tapered", "psi", -0.068, 0.12),
    m("arma:1,1", 20, "debiased", "psi", 0.093, 0.06),
    m("arma:1,1", 20, "gaussian", "divergence", 1.653, 0.81),
    m("arma:1,1", 20, "whittle", "divergence", 1.199, 1.57),
    m("arma:1,1", 20, "boundary", "divergence", 0.945, 0.84),
    m("arma:1,1", 20, "hybrid", "divergence", 1.024, 0.89),
    m("arma:1,1", 20, "tapered", "divergence", 0.644, 0.61),
    m("arma:1,1", 20, "debiased", "divergence", 2.727, 0.73),
    m("arma:1,1", 50, "gaussian", "phi", 0.012, 0.07),
    m("arma:1,1", 50, "whittle", "phi", -0.054, 0.09),
    m("arma:1,1", 50, "boundary", "phi", -0.006, 0.07),
    m("arma:1,1", 50, "hybrid", "phi", 0.004, 0.07),
    m("arma:1,1", 50, "tapered", "phi", -0.005, 0.07),
    m("arma:1,1", 50, "debiased", "phi", 0.154, 0.11),
    m("arma:1,1", 50, "gaussian", "psi", 0.029, 0.06),
    m("arma:1,1", 50, "whittle", "psi", -0.116, 0.12),
    m("arma:1,1", 50, "boundary", "psi", -0.008, 0.08),
    m("arma:1,1", 50, "hybrid", "psi", 0.009, 0.07),
    m("arma:1,1", 50, "tapered", "psi", 0.011, 0.06),
    m("arma:1,1", 50, "debiased", "psi", 0.093, 0.0),
    m("arma:1,1", 50, "gaussian", "divergence", 0.354, 0.34),
    m("arma:1,1", 50, "whittle", "divergence", 0.457, 0.46),
    m("arma:1,1", 50, "boundary", "divergence", 0.292, 0.3),
    m("arma:1,1", 50, "hybrid", "divergence", 0.235, 0.28),
    m("arma:1,1", 50, "tapered", "divergence", 0.225, 0.26),
    m("arma:1,1", 50, "debiased", "divergence", 1.202, 0.34),
    m("arma:1,1", 300, "gaussian", "phi", 0.002, 0.03),
    m("arma:1,1", 300, "whittle", "phi", -0.014, 0.03),
    m("arma:1,1", 300, "boundary", "phi", 0.0, 0.03),
    m("arma:1,1", 300, "hybrid", "phi", 0.001, 0.03),
    m("arma:1,1", 300, "tapered", "phi", 0.0, 0.03),
    m("arma:1,1", 300, "debiased", "phi", 0.093, 0.08),
    m("arma:1,1", 300, "gaussian", "psi", 0.005, 0.03),
    m("arma:1,1", 300, "whittle", "psi", -0.033, 0.05),
    m("arma:1,1", 300, "boundary", "psi", 0.001, 0.03),
    m("arma:1,1", 300, "hybrid", "psi", 0.003, 0.03),
    m("arma:1,1", 300, "tapered", "psi", 0.003, 0.03),
    m("arma:1,1", 300, "debiased", "psi", 0.092, 0.01),
    m("arma:1,1", 300, "gaussian", "divergence", 0.027, 0.05),
    m("arma:1,1", 300, "whittle", "divergence", 0.064, 0.09),
    m("arma:1,1", 300, "boundary", "divergence", 0.029, 0.05),
    m("arma:1,1", 300, "hybrid", "divergence", 0.026, 0.04),
    m("arma:1,1", 300, "tapered", "divergence", 0.027, 0.05),
    m("arma:1,1", 300, "debiased", "divergence", 0.752, 0.22),
    m("ar:2", 20, "gaussian", "phi1", 0.028, 0.14),
    m("ar:2", 20, "whittle", "phi1", -0.162, 0.22),
    m("ar:2", 20, "boundary", "phi1", -0.032, 0.16),
    m("ar:2", 20, "hybrid", "phi1", 0.003, 0.14),
    m("ar:2", 20, "tapered", "phi1", -0.123, 0.16),
    m("ar:2", 20, "debiased", "phi1", 0.069, 0.15),
    m("ar:2", 20, "gaussian", "phi2", -0.004, 0.09),
    m("ar:2", 20, "whittle", "phi2", 0.169, 0.18),
    m("ar:2", 20, "boundary", "phi2", 0.052, 0.14),
    m("ar:2", 20, "hybrid", "phi2", 0.025, 0.12),
    m("ar:2", 20, "tapered", "phi2", 0.132, 0.12),
    m("ar:2", 20, "debiased", "phi2", -0.034, 0.11),
    m("ar:2", 20, "gaussian", "divergence", 0.679, 0.72),
    m("ar:2", 20, "whittle", "divergence", 1.203, 1.46),
    m("ar:2", 20, "boundary", "divergence", 0.751, 0.85),
    m("ar:2", 20, "hybrid", "divergence", 0.684, 0.8),
    m("ar:2", 20, "tapered", "divergence", 0.862, 0.97),
    m("ar:2", 20, "debiased", "divergence", 0.686, 0.81),
    m("ar:2", 50, "gaussian", "phi1", 0.019, 0.09),
    m("ar:2", 50, "whittle", "phi1", -0.077, 0.12),
    m("ar:2", 50, "boundary", "phi1", -0.009, 0.09),
    m("ar:2", 50, "hybrid", "phi1", 0.003, 0.09),
    m("ar:2", 50, "tapered", "phi1", -0.017, 0.09),
    m("ar:2", 50, "debiased", "phi1", 0.156, 0.15),
    m("ar:2", 50, "gaussian", "phi2", -0.024, 0.06),
    m("ar:2", 50, "whittle", "phi2", 0.066, 0.1),
    m("ar:2", 50, "boundary", "phi2", 0.006, 0.07),
    m("ar:2", 50, "hybrid", "phi2", -0.003, 0.06),
    m("ar:2", 50, "tapered", "phi2", 0.013, 0.06),
    m("ar:2", 50, "debiased", "phi2", -0.121, 0.06),
    m("ar:2", 50, "gaussian", "divergence", 0.275, 0.33),
    m("ar:2", 50, "whittle", "divergence", 0.382, 0.45),
    m("ar:2", 50, "boundary", "divergence", 0.283, 0.37),
    m("ar:2", 50, "hybrid", "divergence", 0.283, 0.37),
    m("ar:2", 50, "tapered", "divergence", 0.283, 0.36),
    m("ar:2", 50, "debiased", "divergence", 0.65, 0.7),
    m("ar:2", 300, "gaussian", "phi1", 0.004, 0.04),
    m("ar:2", 300, "whittle", "phi1", -0.013, 0.04),
    m("ar:2", 300, "boundary", "phi1", 0.0, 0.04),
    m("ar:2", 300, "hybrid", "phi1", 0.001, 0.04),
    m("ar:2", 300, "tapered", "phi1", 0.001, 0.04),
    m("ar:2", 300, "debiased", "phi1", 0.014, 0.04),
    m("ar:2", 300, "gaussian", "phi2", -0.005, 0.02),
    m("ar:2", 300, "whittle", "phi2", 0.011, 0.03),
    m("ar:2", 300, "boundary", "phi2", -0.001, 0.02),
    m("ar:2", 300, "hybrid", "phi2", -0.001, 0.03),
    m("ar:2", 300, "tapered", "phi2", -0.001, 0.03),
    m("ar:2", 300, "debiased", "phi2", 0.016, 0.04),
    m("ar:2", 300, "gaussian", "divergence", 0.049, 0.07),
    m("ar:2", 300, "whittle", "divergence", 0.053, 0.07),
    m("ar:2", 300, "boundary", "divergence", 0.049, 0.07),
    m("ar:2", 300, "hybrid", "divergence", 0.053, 0.07),
    m("ar:2", 300, "tapered", "divergence", 0.054, 0.08),
    m("ar:2", 300, "debiased", "divergence", 0.058, 0.08),
    a8("gaussian", "phi1", -0.008, Some(0.08)),
    a8("whittle", "phi1", -0.025, Some(0.09)),
    a8("boundary", "phi1", -0.009, Some(0.08)),
    a8("hybrid", "phi1", -0.006, Some(0.09)),
    a8("tapered", "phi1", -0.012, Some(0.09)),
    a8("debiased", "phi1", -0.008, Some(0.09)),
    a8("bc-tyw", "phi1", -0.008, Some(0.08)),
    a8("bc-np", "phi1", -0.005, Some(0.12)),
    a8("gaussian", "phi2", 0.002, Some(0.09)),
    a8("whittle", "phi2", 0.024, Some(0.1)),
    a8("boundary", "phi2", 0.005, Some(0.09)),
    a8("hybrid", "phi2", 0.002, Some(0.09)),
    a8("tapered", "phi2", 0.01, Some(0.09)),
    a8("debiased", "phi2", 0.003, Some(0.1)),
    a8("bc-tyw", "phi2", 0.003, Some(0.09)),
    a8("bc-np", "phi2", 0.002, Some(0.13)),
    a8("gaussian", "phi3", -0.009, Some(0.08)),
    a8("whittle", "phi3", -0.038, Some(0.09)),
    a8("boundary", "phi3", -0.011, Some(0.09)),
    a8("hybrid", "phi3", -0.009, Some(0.09)),
    a8("tapered", "phi3", -0.023, Some(0.09)),
    a8("debiased", "phi3", -0.01, Some(0.09)),
    a8("bc-tyw", "phi3", -0.009, Some(0.09)),
    a8("bc-np", "phi3", -0.01, Some(0.12)),
    a8("gaussian", "phi4", 0.031, Some(0.09)),
    a8("whittle", "phi4", 0.108, Some(0.1)),
    a8("boundary", "phi4", 0.042, Some(0.09)),
    a8("hybrid", "phi4", 0.034, Some(0.09)),
    a8("tapered", "phi4", 0.075, Some(0.09)),
    a8("debiased", "phi4", 0.043, Some(0.1)),
    a8("bc-tyw", "phi4", 0.037, Some(0.09)),
    a8("bc-np", "phi4", 0.076, Some(0.12)),
    a8("gaussian", "phi5", -0.015, Some(0.08)),
    a8("whittle", "phi5", -0.049, Some(0.09)),
    a8("boundary", "phi5", -0.02, Some(0.09)),
    a8("hybrid", "phi5", -0.016, Some(0.08)),
    a8("tapered", "phi5", -0.029, Some(0.08)),
    a8("debiased", "phi5", -0.017, Some(0.1)),
    a8("bc-tyw", "phi5", -0.018, Some(0.09)),
    a8("bc-np", "phi5", -0.022, Some(0.12)),
    a8("gaussian", "phi6", 0.01, Some(0.08)),
    a8("whittle", "phi6", 0.04, Some(0.09)),
    a8("boundary", "phi6", 0.014, Some(0.09)),
    a8("hybrid", "phi6", 0.01, Some(0.09)),
    a8("tapered", "phi6", 0.024, Some(0.08)),
    a8("debiased", "phi6", 0.012, Some(0.1)),
    a8("bc-tyw", "phi6", 0.011, Some(0.09)),
    a8("bc-np", "phi6", 0.022, Some(0.11)),
    a8("gaussian", "phi7", -0.017, Some(0.08)),
    a8("whittle", "phi7", -0.053, Some(0.09)),
    a8("boundary", "phi7", -0.021, Some(0.09)),
    a8("hybrid", "phi7", -0.02, Some(0.09)),
    a8("tapered", "phi7", -0.039, Some(0.08)),
    a8("debiased", "phi7", -0.022, Some(0.09)),
    a8("bc-tyw", "phi7", -0.02, Some(0.09)),
    a8("bc-np", "phi7", -0.027, Some(0.1)),
    a8("gaussian", "phi8", 0.049, Some(0.08)),
    a8("whittle", "phi8", 0.116, Some(0.08)),
    a8("boundary", "phi8", 0.059, Some(0.08)),
    a8("hybrid", "phi8", 0.055, Some(0.08)),
    a8("tapered", "phi8", 0.096, Some(0.08)),
    a8("debiased", "phi8", 0.061, Some(0.09)),
    a8("bc-tyw", "phi8", 0.056, Some(0.08)),
    a8("bc-np", "phi8", 0.101, Some(0.1)),
    a8("gaussian", "aggregate", 6.466, None),
    a8("whittle", "aggregate", 18.607, None),
    a8("boundary", "aggregate", 8.029, None),
    a8("hybrid", "aggregate", 7.085, None),
    a8("tapered", "aggregate", 13.611, None),
    a8("debiased", "aggregate", 8.164, None),
    a8("bc-tyw", "aggregate", 7.47, None),
    a8("bc-np", "aggregate", 13.28, None),
];

/// Reference entry for a summary row, if the tables report one.
pub fn lookup(
    scenario: &str,
    family: &str,
    setting: Option<f64>,
    n: usize,
    criterion: &str,
    param: &str,
) -> Option<&'static Reference> {
    REFERENCES.iter().find(|r| {
        r.scenario == scenario
            && r.family.map_or(true, |f| f == family)
            && match (r.setting, setting) {
                (Some(a), Some(b)) => (a - b).abs() < 1e-9,
                (None, _) => true,
                (Some(_), None) => false,
            }
            && r.n == n
            && r.criterion == criterion
            && r.param == param
    })
}

pub fn best_fit(family: &str, n: usize) -> Option<([f64; 2], f64)> {
    BEST_FIT.iter().find(|(f, k, _, _)| *f == family && *k == n).map(|(_, _, t, d)| (*t, *d))
}
