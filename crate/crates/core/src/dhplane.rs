//! The dh-plane model of stable framings within a spin structure.
//!
//! A stable framing is recorded by its total defect `(d, h)`: the degree and
//! the Hirzebruch defect. The generators ρ and σ of π₃(SO₄) act by
//! translation, ρ: (d,h) ↦ (d, h+4) and σ: (d,h) ↦ (d−1, h+2), so the stable
//! framings extending one spin structure fill a coset `Λ_k = Λ₀ + (0,k)` of
//! the index-4 lattice `Λ₀ = ⟨(0,4), (−1,2)⟩`, where `k = 2d + h mod 4`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Degree and Hirzebruch defect of a stable framing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TotalDefect {
    pub d: i64,
    pub h: i64,
}

impl TotalDefect {
    pub const fn new(d: i64, h: i64) -> Self {
        TotalDefect { d, h }
    }

    /// An honest (unstabilized) framing has degree zero.
    pub const fn honest(h: i64) -> Self {
        TotalDefect { d: 0, h }
    }

    pub fn is_honest(&self) -> bool {
        self.d == 0
    }

    /// The norm `2|d| + |h|` minimized by canonical framings.
    pub fn norm(&self) -> i64 {
        2 * self.d.abs() + self.h.abs()
    }
}

impl fmt::Display for TotalDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.h)
    }
}

/// A translation `m·ρ + n·σ` in π₃(SO₄).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FramingOffset {
    pub m_rho: i64,
    pub n_sigma: i64,
}

impl FramingOffset {
    pub const ZERO: FramingOffset = FramingOffset {
        m_rho: 0,
        n_sigma: 0,
    };

    pub const fn new(m_rho: i64, n_sigma: i64) -> Self {
        FramingOffset { m_rho, n_sigma }
    }
}

impl Add for FramingOffset {
    type Output = FramingOffset;
    fn add(self, rhs: FramingOffset) -> FramingOffset {
        FramingOffset::new(self.m_rho + rhs.m_rho, self.n_sigma + rhs.n_sigma)
    }
}

impl fmt::Display for FramingOffset {
    /// Renders as a signed sum such as `+ 9σ + 2ρ`, σ first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |f: &mut fmt::Formatter<'_>, k: i64, sym: &str| {
            let sign = if k < 0 { '-' } else { '+' };
            write!(f, "{sign} {}{sym}", k.abs())
        };
        term(f, self.n_sigma, "σ")?;
        write!(f, " ")?;
        term(f, self.m_rho, "ρ")
    }
}

/// The spin-structure invariant λ ∈ ℤ/4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaClass(u8);

impl LambdaClass {
    pub fn new(value: i64) -> Self {
        LambdaClass(value.rem_euclid(4) as u8)
    }

    /// Class in {0, 1, 2, 3}.
    pub fn value(&self) -> u8 {
        self.0
    }

    /// Representative in {−1, 0, 1, 2}.
    pub fn representative(&self) -> i64 {
        if self.0 == 3 {
            -1
        } else {
            i64::from(self.0)
        }
    }
}

impl fmt::Display for LambdaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 4 class {})", self.representative(), self.0)
    }
}

impl Serialize for LambdaClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.representative())
    }
}

pub fn act(p: TotalDefect, off: FramingOffset) -> TotalDefect {
    TotalDefect::new(p.d - off.n_sigma, p.h + 4 * off.m_rho + 2 * off.n_sigma)
}

pub fn lambda_class(p: TotalDefect) -> LambdaClass {
    LambdaClass::new(2 * p.d + p.h)
}

pub fn in_lattice(p: TotalDefect, k: LambdaClass) -> bool {
    lambda_class(p) == k
}

/// All points of `Λ_k` minimizing `2|d| + |h|`, sorted by `(d, h)`.
///
/// Every coset meets the box `|d| ≤ 1, |h| ≤ 2` (translate by σ to reach
/// `d = 0`, then by ρ to reach `|h| ≤ 2`), so minimizers have norm ≤ 2 and
/// a search over norm ≤ 4 is exhaustive.
pub fn canonical_set(k: LambdaClass) -> Vec<TotalDefect> {
    const RADIUS: i64 = 4;
    let candidates: Vec<TotalDefect> = (-RADIUS / 2..=RADIUS / 2)
        .flat_map(|d| (-RADIUS..=RADIUS).map(move |h| TotalDefect::new(d, h)))
        .filter(|p| p.norm() <= RADIUS && in_lattice(*p, k))
        .collect();
    let best = candidates
        .iter()
        .map(TotalDefect::norm)
        .min()
        .expect("coset meets the box");
    candidates
        .into_iter()
        .filter(|p| p.norm() == best)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The unique offset carrying `from` to `to`, when both lie in one coset.
pub fn offset_between(from: TotalDefect, to: TotalDefect) -> Result<FramingOffset> {
    let n_sigma = from.d - to.d;
    let rest = to.h - from.h - 2 * n_sigma;
    if rest.rem_euclid(4) != 0 {
        return Err(Error::DifferentCosets {
            from: from.to_string(),
            to: to.to_string(),
        });
    }
    Ok(FramingOffset::new(rest / 4, n_sigma))
}

/// Offset `(−(2d+h−λ)/4, d)` carrying `p` to the honest canonical point
/// `(0, λ)`, for a representative `|λ| ≤ 2` of the class of `p`.
pub fn canonical_offset(p: TotalDefect, target_lambda_rep: i64) -> Result<FramingOffset> {
    let twice_d_plus_h = 2 * p.d + p.h;
    if target_lambda_rep.abs() > 2 || (twice_d_plus_h - target_lambda_rep).rem_euclid(4) != 0 {
        return Err(Error::LambdaMismatch {
            target: target_lambda_rep,
            actual: twice_d_plus_h,
        });
    }
    Ok(FramingOffset::new(
        -(twice_d_plus_h - target_lambda_rep) / 4,
        p.d,
    ))
}

pub fn reverse_orientation(p: TotalDefect) -> TotalDefect {
    TotalDefect::new(p.d, -p.h)
}

/// Total defect on ∂W of a framing of W: `(χ(W), −3σ(W))`.
pub fn boundary_defect(euler_char: i64, signature: i64) -> TotalDefect {
    TotalDefect::new(euler_char, -3 * signature)
}

/// Pulls a total defect back along an `r`-fold cover with signature defect
/// `sigma_pi`: `(r·d, r·h + 3σ(π))`.
pub fn pullback_cover(p: TotalDefect, r: i64, sigma_pi: &Rational) -> Result<TotalDefect> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!(
            "cover degree must be positive, got {r}"
        )));
    }
    let h = &Rational::from(r * p.h) + &sigma_pi.scale(3);
    let h = h
        .to_i64()
        .ok_or_else(|| Error::NonIntegralDefect(h.to_string()))?;
    Ok(TotalDefect::new(r * p.d, h))
}

/// Inverse of [`pullback_cover`]: recovers the defect downstairs from the
/// defect of the compatible framing on the cover.
pub fn descend_cover(cover: TotalDefect, r: i64, sigma_pi: &Rational) -> Result<TotalDefect> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!(
            "cover degree must be positive, got {r}"
        )));
    }
    if cover.d % r != 0 {
        return Err(Error::NonIntegralDefect(format!("{}/{r}", cover.d)));
    }
    let h = &Rational::from(cover.h) - &sigma_pi.scale(3);
    let h = h * Rational::new(1, r)?;
    let h = h
        .to_i64()
        .ok_or_else(|| Error::NonIntegralDefect(h.to_string()))?;
    Ok(TotalDefect::new(cover.d / r, h))
}

/// Membership in the sublattice `m·Λ₀ + base`.
pub fn in_scaled_coset(p: TotalDefect, m: i64, base: TotalDefect) -> bool {
    let (x, y) = (p.d - base.d, p.h - base.h);
    m != 0
        && x % m == 0
        && y % m == 0
        && in_lattice(TotalDefect::new(x / m, y / m), LambdaClass::new(0))
}

/// Degree and relative p₁ of a framed piece in a gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FramedPiece {
    pub degree: i64,
    pub p1: i64,
}

impl FramedPiece {
    pub const fn new(degree: i64, p1: i64) -> Self {
        FramedPiece { degree, p1 }
    }
}

/// Glues framed 4-manifolds along a region of Euler characteristic
/// `chi_region`: degrees add less `chi_region`, p₁ adds.
pub fn glue(parts: &[FramedPiece], chi_region: i64) -> Result<FramedPiece> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter(
            "gluing needs at least one piece".into(),
        ));
    }
    let degree = parts.iter().map(|p| p.degree).sum::<i64>() - chi_region;
    let p1 = parts.iter().map(|p| p.p1).sum();
    Ok(FramedPiece::new(degree, p1))
}

/// Defect of the Whitney sum of two framings, viewed as a 2-framing.
pub fn two_framing_sum(h1: i64, h2: i64) -> i64 {
    h1 + h2
}

/// Multiple of σ turning `2φ` into the canonical 2-framing (defect zero).
pub fn canonical_two_framing_offset(h_phi: i64) -> i64 {
    -h_phi
}

/// Whether the canonical 2-framing is `2φ` for a framing in this spin structure.
pub fn splits_as_double(k: LambdaClass) -> bool {
    k.value() == 0
}

/// Whether the canonical 2-framing is a Whitney sum `φ₁ ⊕ φ₂`, given the
/// number of 2-primary summands of H₁.
pub fn splits_as_sum(s_m: u32) -> bool {
    s_m.is_multiple_of(2)
}

/// Whether the canonical 2-framing of the lens space `L(n,1)` is `2φ`.
///
/// The spin structures of `L(n,1)`, `n > 0`, have λ ≡ 3 − n and, for even n,
/// λ ≡ −1; orientation reversal fixes λ = 0. So the condition is
/// `n ≡ −sign(n) mod 4`, and it fails for `L(±1,1) = S³`.
pub fn lens_double_splits(n: i64) -> bool {
    (n + n.signum()).rem_euclid(4) == 0
}
