use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geometry::ConvexPolygon;
use crate::scalar::{pal_root, Scalar};
use crate::verify::{asymmetry, deficit, AsymmetryOptions};

/// Threshold `eta` on the deficit, the external constant `c2` of the
/// quantitative Pal inequality, and the resulting stability constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StabilityParams {
    pub eta: f64,
    pub c2: f64,
    #[serde(rename = "C")]
    pub c: f64,
}

/// `C(eta) = 2 sqrt(pi sqrt 3) / (c2 sqrt 3 (sqrt(pi sqrt 3) - eta)^2)`.
pub fn stability_constant(eta: f64, c2: f64) -> Result<StabilityParams> {
    let root = pal_root::<f64>();
    if !(eta > 0.0 && eta < root) {
        return Err(GeomError::ParamOutOfRange(format!(
            "eta must lie in (0, {root}), got {eta}"
        )));
    }
    if !(c2 > 0.0) || !c2.is_finite() {
        return Err(GeomError::ParamOutOfRange(format!("c2 must be positive, got {c2}")));
    }
    let gap = root - eta;
    let c = 2.0 * root / (c2 * 3f64.sqrt() * gap * gap);
    Ok(StabilityParams { eta, c2, c })
}

/// Admissible constant quoted for `eta <= 3^(1/4) pi^(1/2) / 2`:
/// `8 * 3^(1/4) / (75 sqrt(5 pi))`.
pub fn admissible_constant() -> f64 {
    8.0 * 3f64.powf(0.25) / (75.0 * (5.0 * std::f64::consts::PI).sqrt())
}

impl StabilityParams {
    /// Parameters at `eta = 3^(1/4) pi^(1/2) / 2` whose `C` equals
    /// [`admissible_constant`].
    pub fn admissible_default() -> Self {
        let eta = pal_root::<f64>() / 2.0;
        let unit = stability_constant(eta, 1.0).expect("eta in range");
        let c2 = unit.c / admissible_constant();
        stability_constant(eta, c2).expect("c2 positive")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum StabilityOutcome {
    /// `C * deficit - asymmetry`.
    Margin { margin: f64, deficit: f64, asymmetry: f64 },
    /// The deficit exceeds `eta`, where no such bound is claimed.
    NotApplicable { deficit: f64 },
}

pub fn stability_check<T: Scalar>(p: &ConvexPolygon<T>, params: &StabilityParams) -> StabilityOutcome {
    let d = deficit(p).to_f64_lossy();
    if d > params.eta {
        return StabilityOutcome::NotApplicable { deficit: d };
    }
    let a = asymmetry(p, &AsymmetryOptions::default()).0.to_f64_lossy();
    StabilityOutcome::Margin {
        margin: params.c * d - a,
        deficit: d,
        asymmetry: a,
    }
}
