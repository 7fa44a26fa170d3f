//! Closed-form companion models: the equivalent-truss reaction of a sticking
//! assembly, the interface force resolution with its saturated-friction
//! threshold, and the partial-slip solution for two pressed elastic cylinders
//! (Cattaneo–Mindlin) used to validate the frictional contact implementation.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalyticalError {
    #[error("tangential load F_t = {f_t} exceeds the friction capacity mu_s * F_n = {capacity}")]
    TangentialLoadTooLarge { f_t: f64, capacity: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Parameters of the equivalent truss connecting the load point to the
/// interface pivot of a sticking assembly.
#[derive(Debug, Clone, Copy)]
pub struct TrussParams {
    /// Young's modulus (N/m²).
    pub youngs_modulus: f64,
    /// Truss cross-section area (m²).
    pub area: f64,
    /// Effective height: vertical lever arm (m).
    pub h_eff: f64,
    /// Effective length: horizontal lever arm (m).
    pub l_eff: f64,
}

impl TrussParams {
    pub fn validate(&self) -> Result<(), AnalyticalError> {
        for (name, v) in [
            ("youngs_modulus", self.youngs_modulus),
            ("area", self.area),
            ("h_eff", self.h_eff),
            ("l_eff", self.l_eff),
        ] {
            if !(v > 0.0) {
                return Err(AnalyticalError::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Vertical and horizontal reaction forces of the equivalent truss at applied
/// displacement `delta`. The load-carrying capacity of the full symmetric
/// structure is `2 * F_v`.
///
/// Both components vanish at `delta = 0`; the vertical component also crosses
/// zero at `delta = h_eff`, which bounds the ultimate deflection.
pub fn truss_reaction(delta: f64, params: &TrussParams) -> (f64, f64) {
    let TrussParams {
        youngs_modulus: e,
        area,
        h_eff,
        l_eff,
    } = *params;
    let len0 = (l_eff * l_eff + h_eff * h_eff).sqrt();
    let dh = h_eff - delta;
    let len1 = (l_eff * l_eff + dh * dh).sqrt();
    let f_h = e * area * (l_eff / len0) * (len0 / len1 - 1.0);
    let f_v = f_h * (dh / l_eff);
    (f_v, f_h)
}

/// Resolve the strut force `F_a`, acting at angle `beta` from the horizontal,
/// into normal and tangential components on an interface inclined at `theta`
/// from the vertical. Compression is negative.
pub fn resolve_interface_forces(f_a: f64, beta: f64, theta: f64) -> (f64, f64) {
    let n = -((beta.sin() * theta.sin() + beta.cos() * theta.cos()) * f_a);
    let t = -((beta.sin() * theta.cos() - beta.cos() * theta.sin()) * f_a);
    (n, t)
}

/// Friction coefficient at which the interface tangential force equals the
/// Coulomb capacity of the strut's normal force; algebraically `tan(beta - theta)`.
/// Below this value the interface must slip, above it full stick is possible.
pub fn mu_saturated(beta: f64, theta: f64) -> f64 {
    (beta.sin() * theta.cos() - beta.cos() * theta.sin())
        / (beta.sin() * theta.sin() + beta.cos() * theta.cos())
}

/// Stick/slip boundary in the (mu, h) plane for a structure of height `h`,
/// block length `l` and interface angle `theta`, using the undeformed lever
/// arms `h_eff = h`, `l_eff = l`.
pub fn stick_slip_boundary(h: f64, l: f64, theta: f64) -> f64 {
    mu_saturated((h / l).atan(), theta)
}

/// Samples of the stick/slip boundary over a range of heights, for export.
pub fn boundary_samples(h_range: (f64, f64), n: usize, l: f64, theta: f64) -> Vec<(f64, f64)> {
    assert!(n >= 2, "need at least two samples");
    (0..n)
        .map(|i| {
            let h = h_range.0 + (h_range.1 - h_range.0) * i as f64 / (n - 1) as f64;
            (h, stick_slip_boundary(h, l, theta))
        })
        .collect()
}

/// Two elastic cylinders pressed together by a normal force per unit length
/// `f_n` and sheared by a tangential force per unit length `f_t < mu_s * f_n`.
#[derive(Debug, Clone, Copy)]
pub struct CattaneoMindlinParams {
    pub radius_0: f64,
    pub radius_1: f64,
    pub youngs_modulus_0: f64,
    pub youngs_modulus_1: f64,
    pub poissons_ratio_0: f64,
    pub poissons_ratio_1: f64,
    /// Normal force per unit length (N/m).
    pub f_n: f64,
    /// Tangential force per unit length (N/m).
    pub f_t: f64,
    pub mu_s: f64,
}

/// Evaluable closed-form traction profiles of the partial-slip cylinder
/// contact: semi-elliptic normal pressure of half-width `alpha` and a
/// tangential traction that follows the Coulomb limit in the slip annulus
/// `c < |x| < alpha` while staying below it in the central stick zone.
#[derive(Debug, Clone, Copy)]
pub struct CattaneoMindlinSolution {
    /// Contact half-width (m).
    pub alpha: f64,
    /// Stick-zone half-width (m).
    pub c: f64,
    pub f_n: f64,
    pub f_t: f64,
    pub mu_s: f64,
}

/// Closed-form solution of the pressed-cylinders problem.
pub fn cm_solution(params: &CattaneoMindlinParams) -> Result<CattaneoMindlinSolution, AnalyticalError> {
    let p = params;
    for (name, v) in [
        ("radius_0", p.radius_0),
        ("radius_1", p.radius_1),
        ("youngs_modulus_0", p.youngs_modulus_0),
        ("youngs_modulus_1", p.youngs_modulus_1),
        ("f_n", p.f_n),
        ("mu_s", p.mu_s),
    ] {
        if !(v > 0.0) {
            return Err(AnalyticalError::InvalidParameter(format!(
                "{name} must be positive, got {v}"
            )));
        }
    }
    let capacity = p.mu_s * p.f_n;
    if p.f_t < 0.0 || p.f_t > capacity {
        return Err(AnalyticalError::TangentialLoadTooLarge {
            f_t: p.f_t,
            capacity,
        });
    }
    let compliance = (1.0 - p.poissons_ratio_0 * p.poissons_ratio_0) / p.youngs_modulus_0
        + (1.0 - p.poissons_ratio_1 * p.poissons_ratio_1) / p.youngs_modulus_1;
    let alpha = (4.0 * p.f_n * p.radius_0 * p.radius_1
        / (std::f64::consts::PI * (p.radius_0 + p.radius_1))
        * compliance)
        .sqrt();
    let c = alpha * (1.0 - p.f_t / capacity).sqrt();
    Ok(CattaneoMindlinSolution {
        alpha,
        c,
        f_n: p.f_n,
        f_t: p.f_t,
        mu_s: p.mu_s,
    })
}

impl CattaneoMindlinSolution {
    /// Normal traction at offset `x` from the contact center; zero outside
    /// the contact zone.
    pub fn normal_traction(&self, x: f64) -> f64 {
        let a2 = self.alpha * self.alpha;
        let r = a2 - x * x;
        if r <= 0.0 {
            return 0.0;
        }
        2.0 * self.f_n * r.sqrt() / (std::f64::consts::PI * a2)
    }

    /// Tangential traction at offset `x`. Heaviside convention H(0) = 1, so
    /// the stick zone is closed at |x| = c.
    pub fn tangential_traction(&self, x: f64) -> f64 {
        let a2 = self.alpha * self.alpha;
        let ra = a2 - x * x;
        if ra <= 0.0 {
            return 0.0;
        }
        let rc = self.c * self.c - x * x;
        let stick_part = if rc >= 0.0 { rc.sqrt() } else { 0.0 };
        2.0 * self.mu_s * self.f_n / (std::f64::consts::PI * a2) * (ra.sqrt() - stick_part)
    }
}
