//! Quotients `G\S³` of the 3-sphere by finite subgroups of the unit
//! quaternions, and the signature defects of their universal covers.
//!
//! `σ(G)` is three times the signature defect of `S³ → G\S³`. It has closed
//! forms per family and can be recomputed from the fixed-point data of the
//! left-multiplication action: each `u ≠ 1` contributes `cot²(arg(u)/2)`,
//! where `arg(u) ∈ [0, π]` is the angle of `u` from 1.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::dhplane::{act, FramingOffset, TotalDefect};
use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// A finite subgroup of S³ up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteSubgroup {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl FiniteSubgroup {
    pub fn cyclic(m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter(
                "cyclic group order must be at least 1".into(),
            ));
        }
        Ok(FiniteSubgroup::Cyclic(m))
    }

    pub fn binary_dihedral(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(
                "binary dihedral parameter must be at least 2".into(),
            ));
        }
        Ok(FiniteSubgroup::BinaryDihedral(m))
    }

    pub fn order(&self) -> u64 {
        match *self {
            FiniteSubgroup::Cyclic(m) => u64::from(m),
            FiniteSubgroup::BinaryDihedral(m) => 4 * u64::from(m),
            FiniteSubgroup::BinaryTetrahedral => 24,
            FiniteSubgroup::BinaryOctahedral => 48,
            FiniteSubgroup::BinaryIcosahedral => 120,
        }
    }

    /// Maximal cyclic subgroups `(count, order)` of a polyhedral group, lifted
    /// from the rotation axes; any two of them meet in `{±1}`.
    pub fn cyclic_cover(&self) -> Option<&'static [(u32, u32)]> {
        match self {
            // 3 edge-midpoint axes, 4 vertex-face axes
            FiniteSubgroup::BinaryTetrahedral => Some(&[(3, 4), (4, 6)]),
            // 6 edge axes, 4 body diagonals, 3 face axes
            FiniteSubgroup::BinaryOctahedral => Some(&[(6, 4), (4, 6), (3, 8)]),
            // 15 edge axes, 10 face axes, 6 vertex axes
            FiniteSubgroup::BinaryIcosahedral => Some(&[(15, 4), (10, 6), (6, 10)]),
            _ => None,
        }
    }
}

impl fmt::Display for FiniteSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteSubgroup::Cyclic(m) => write!(f, "C{m}"),
            FiniteSubgroup::BinaryDihedral(m) => write!(f, "D{m}"),
            FiniteSubgroup::BinaryTetrahedral => write!(f, "T"),
            FiniteSubgroup::BinaryOctahedral => write!(f, "O"),
            FiniteSubgroup::BinaryIcosahedral => write!(f, "I"),
        }
    }
}

impl FromStr for FiniteSubgroup {
    type Err = Error;

    /// `C<m>`, `D<m>`, `T`, `O` or `I`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidParameter(format!(
                "unknown group {s:?}; expected C<m>, D<m>, T, O or I"
            ))
        };
        let s = s.trim();
        match s {
            "T" => return Ok(FiniteSubgroup::BinaryTetrahedral),
            "O" => return Ok(FiniteSubgroup::BinaryOctahedral),
            "I" => return Ok(FiniteSubgroup::BinaryIcosahedral),
            _ => {}
        }
        let (kind, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let m: u32 = rest.parse().map_err(|_| bad())?;
        match kind {
            "C" => FiniteSubgroup::cyclic(m),
            "D" => FiniteSubgroup::binary_dihedral(m),
            _ => Err(bad()),
        }
    }
}

impl Serialize for FiniteSubgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Closed form for `σ(G)`.
pub fn sigma_g(g: FiniteSubgroup) -> i64 {
    match g {
        FiniteSubgroup::Cyclic(m) => {
            let m = i64::from(m);
            m * m - 3 * m + 2
        }
        FiniteSubgroup::BinaryDihedral(m) => {
            let m = i64::from(m);
            4 * m * m + 2
        }
        FiniteSubgroup::BinaryTetrahedral => 98,
        FiniteSubgroup::BinaryOctahedral => 242,
        FiniteSubgroup::BinaryIcosahedral => 722,
    }
}

/// Signature defect `σ(G)/3` of the universal cover `S³ → G\S³`.
pub fn signature_defect(g: FiniteSubgroup) -> Rational {
    Rational::new(sigma_g(g), 3).expect("nonzero denominator")
}

/// `arg(u)/π` for every element of `G`, as an exact rational in `[0, 1]`.
pub fn element_angles(g: FiniteSubgroup) -> Vec<Ratio<i64>> {
    // e^{2πik/n} sits at angle min(2k, 2n − 2k)/n · π from 1
    let circle = |k: i64, n: i64| Ratio::new((2 * k).min(2 * n - 2 * k), n);
    match g {
        FiniteSubgroup::Cyclic(m) => {
            let m = i64::from(m);
            (0..m).map(|k| circle(k, m)).collect()
        }
        FiniteSubgroup::BinaryDihedral(m) => {
            let n = 2 * i64::from(m);
            // e^{ikπ/m} on the circle through i, then e^{ikπ/m}·j, which are
            // pure quaternions at angle π/2
            (0..n)
                .map(|k| circle(k, n))
                .chain((0..n).map(|_| Ratio::new(1, 2)))
                .collect()
        }
        _ => {
            let mut angles = vec![Ratio::zero(), Ratio::from_integer(1)];
            for &(count, n) in g.cyclic_cover().expect("polyhedral") {
                let n = i64::from(n);
                for _ in 0..count {
                    angles.extend((1..n).filter(|&k| 2 * k != n).map(|k| circle(k, n)));
                }
            }
            angles
        }
    }
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// `3·Σ_{u≠1} cot²(arg(u)/2)` by enumeration of the group elements.
pub fn sigma_g_bruteforce(g: FiniteSubgroup) -> f64 {
    let sum: f64 = element_angles(g)
        .into_iter()
        .filter(|a| !a.is_zero())
        .map(|a| {
            let half = std::f64::consts::PI * (*a.numer() as f64) / (*a.denom() as f64) / 2.0;
            cot(half).powi(2)
        })
        .sum();
    3.0 * sum
}

/// `H(G\S³, φ₊) = (0, (2 − σ(G))/|G|)` for the quotient of the right-handed
/// Hopf framing.
pub fn quotient_framing_defect(g: FiniteSubgroup) -> Result<TotalDefect> {
    let order = g.order() as i64;
    let num = 2 - sigma_g(g);
    if num % order != 0 {
        return Err(Error::NonIntegralDefect(format!("{num}/{order}")));
    }
    Ok(TotalDefect::honest(num / order))
}

/// `⌊(m−1)/4⌋·ρ`, carrying `φ₊` on `L(m,1)` to a canonical framing.
pub fn lens_canonical_offset(m: u32) -> Result<FramingOffset> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "lens space order must be at least 1".into(),
        ));
    }
    let off = FramingOffset::new((i64::from(m) - 1) / 4, 0);
    let h = act(TotalDefect::honest(3 - i64::from(m)), off).h;
    debug_assert!((-1..=2).contains(&h));
    Ok(off)
}

/// `(m−1)(m−2)/3`, the signature defect of `S³ → L(m,1)`.
pub fn lens_signature_defect(m: u32) -> Result<Rational> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "lens space order must be at least 1".into(),
        ));
    }
    let m = i64::from(m);
    Rational::new((m - 1) * (m - 2), 3)
}

/// A rotation angle stored as an exact multiple of π in `(0, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiMultiple(Ratio<i64>);

impl PiMultiple {
    /// Reduces mod 2; a multiple of 2π fixes a direction and is rejected.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator in angle".into()));
        }
        let r = Ratio::new(num, den);
        let two = Ratio::from_integer(2);
        let reduced = r - two * (r / two).floor();
        if reduced.is_zero() {
            return Err(Error::DegenerateAngle(r.to_string()));
        }
        Ok(PiMultiple(reduced))
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::PI * (*self.0.numer() as f64) / (*self.0.denom() as f64)
    }
}

/// Fixed-point data of one group element `g ≠ 1` acting on a 4-manifold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedPointData {
    /// rotation angles `(α, β)` of the two tangent planes at an isolated point
    pub isolated_points: Vec<(PiMultiple, PiMultiple)>,
    /// `(F·F, γ)` for a fixed surface whose normal plane rotates by `γ`
    pub surfaces: Vec<(i64, PiMultiple)>,
}

/// Local formula for the g-signature:
/// `σ(g) = −Σ cot(α/2)cot(β/2) + Σ F·F csc²(γ/2)`.
pub fn g_signature_local(fp: &FixedPointData) -> f64 {
    let points: f64 = fp
        .isolated_points
        .iter()
        .map(|(a, b)| cot(a.radians() / 2.0) * cot(b.radians() / 2.0))
        .sum();
    let surfaces: f64 = fp
        .surfaces
        .iter()
        .map(|(ff, g)| *ff as f64 / (g.radians() / 2.0).sin().powi(2))
        .sum();
    -points + surfaces
}

/// Fixed-point data of left multiplication by each `u ≠ 1` in `C_m` on B⁴:
/// a single fixed point where both planes turn through `arg(u) = 2πk/m`.
pub fn cyclic_fixed_points(m: u32) -> Vec<FixedPointData> {
    let m = i64::from(m);
    (1..m)
        .map(|k| {
            let angle = PiMultiple::new(2 * k, m).expect("0 < 2k/m < 2");
            FixedPointData {
                isolated_points: vec![(angle, angle)],
                surfaces: vec![],
            }
        })
        .collect()
}

/// Signature defect `σ(π) = r·σ(W) − σ(W̃) − Σ_{g≠1} σ(g)` with the
/// signatures of `W` and `W̃` given.
pub fn signature_defect_from_fixed_points(
    r: i64,
    sigma_w: i64,
    sigma_w_tilde: i64,
    elements: &[FixedPointData],
) -> f64 {
    let local: f64 = elements.iter().map(g_signature_local).sum();
    (r * sigma_w - sigma_w_tilde) as f64 - local
}

/// Everything the CLI reports about one quotient.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub group: FiniteSubgroup,
    pub order: u64,
    pub sigma_g: i64,
    pub sigma_g_bruteforce: f64,
    pub signature_defect: Rational,
    pub quotient_framing: TotalDefect,
}

pub fn quotient_report(g: FiniteSubgroup) -> Result<QuotientReport> {
    Ok(QuotientReport {
        group: g,
        order: g.order(),
        sigma_g: sigma_g(g),
        sigma_g_bruteforce: sigma_g_bruteforce(g),
        signature_defect: signature_defect(g),
        quotient_framing: quotient_framing_defect(g)?,
    })
}

/// Whether `|x − target| < tol`.
pub fn within(x: f64, target: i64, tol: f64) -> bool {
    (x - target as f64).abs() < tol
}
