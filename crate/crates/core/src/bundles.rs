//! Oriented circle bundles over closed oriented surfaces and their
//! fiber-preserving framings.

use serde::Serialize;

use crate::error::{Error, Result};

/// Circle bundle with Euler class `euler` over the surface of genus `genus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CircleBundle {
    pub genus: u32,
    pub euler: i64,
}

impl CircleBundle {
    pub const fn new(genus: u32, euler: i64) -> Self {
        CircleBundle { genus, euler }
    }

    /// Euler characteristic `2 − 2g` of the base.
    pub fn base_euler_char(&self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }

    /// Signature of the associated disk bundle, whose form is `(n)`.
    pub fn disk_bundle_signature(&self) -> i64 {
        self.euler.signum()
    }

    fn no_framing(&self) -> Error {
        Error::NoFiberFraming {
            genus: self.genus,
            euler: self.euler,
        }
    }
}

/// Fiber-preserving framings exist iff `n | χ`, with `0 | 0`.
pub fn fiber_framing_exists(b: &CircleBundle) -> bool {
    let chi = b.base_euler_char();
    if b.euler == 0 {
        chi == 0
    } else {
        chi % b.euler == 0
    }
}

/// Hirzebruch defect `n + χ²/n − 3·sign(n)` of the fiber-preserving framing.
///
/// For `n = 0` (only possible over the torus, giving T³) the formula is
/// undefined; the framing is then the Lie framing of T³, bounded by the
/// complement of a fiber in the rational elliptic surface, with defect 0.
pub fn fiber_framing_defect(b: &CircleBundle) -> Result<i64> {
    if !fiber_framing_exists(b) {
        return Err(b.no_framing());
    }
    if b.euler == 0 {
        return Ok(0);
    }
    let (n, chi) = (b.euler, b.base_euler_char());
    Ok(n + chi * chi / n - 3 * n.signum())
}

/// Relative p₁ of the disk bundle: `(1 + χ/n)²·n − 2χ`.
pub fn disk_bundle_p1(b: &CircleBundle) -> Result<i64> {
    if !fiber_framing_exists(b) {
        return Err(b.no_framing());
    }
    if b.euler == 0 {
        return Err(Error::ZeroEuler);
    }
    let (n, chi) = (b.euler, b.base_euler_char());
    let twist = 1 + chi / n;
    Ok(twist * twist * n - 2 * chi)
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleReport {
    pub bundle: CircleBundle,
    pub base_euler_char: i64,
    pub fiber_framing_exists: bool,
    pub disk_bundle_p1: Option<i64>,
    pub disk_bundle_signature: i64,
    pub defect: Option<i64>,
}

pub fn bundle_report(b: CircleBundle) -> BundleReport {
    BundleReport {
        bundle: b,
        base_euler_char: b.base_euler_char(),
        fiber_framing_exists: fiber_framing_exists(&b),
        disk_bundle_p1: disk_bundle_p1(&b).ok(),
        disk_bundle_signature: b.disk_bundle_signature(),
        defect: fiber_framing_defect(&b).ok(),
    }
}
