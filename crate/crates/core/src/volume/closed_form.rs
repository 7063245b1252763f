use std::f64::consts::{FRAC_PI_4, PI};

use super::lobachevsky::lob;
use crate::error::{Error, Result};

/// Volume of an ideal tetrahedron with dihedral angles `alpha, beta, gamma`
/// at the edges meeting one vertex.
pub fn milnor_tet_volume(alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let angles = [alpha, beta, gamma];
    if angles.iter().any(|a| !a.is_finite() || *a < 0.0) {
        return Err(Error::Domain(format!(
            "tetrahedron angles {angles:?} must be finite and non-negative"
        )));
    }
    let sum = alpha + beta + gamma;
    if (sum - PI).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "tetrahedron angles sum to {sum}, not pi"
        )));
    }
    if angles.contains(&0.0) {
        return Ok(0.0);
    }
    Ok(lob(alpha) + lob(beta) + lob(gamma))
}

/// Volume of the regular ideal right-angled octahedron, `8 L(pi/4)`.
pub fn octahedron_volume() -> f64 {
    8.0 * lob(FRAC_PI_4)
}

fn drum(n: usize) -> f64 {
    let a = PI / (2.0 * n as f64);
    2.0 * n as f64 * (lob(FRAC_PI_4 + a) + lob(FRAC_PI_4 - a))
}

/// Volume of the right-angled antiprism `A(n)`.
pub fn antiprism_volume(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "antiprism volume needs n >= 3, got {n}"
        )));
    }
    Ok(drum(n))
}

/// Volume of the twisted antiprism `A(n)*`: the antiprism term for `n - 1`
/// plus an octahedron.
pub fn twisted_antiprism_volume(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "twisted antiprism volume needs n >= 4, got {n}"
        )));
    }
    Ok(drum(n - 1) + 8.0 * lob(FRAC_PI_4))
}
