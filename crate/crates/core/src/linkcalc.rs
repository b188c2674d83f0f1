//! Surgery calculus on framed links, driven entirely by the linking matrix.
//!
//! A framed link `L` with `ℓ` components presents the 4-manifold `W_L`
//! (2-handles on B⁴) and its boundary `M_L`. The linking matrix `Q` carries
//! the framings on its diagonal. From `Q` alone we get χ, σ and τ of `W_L`,
//! the first homology of `M_L`, the characteristic sublinks indexing spin
//! structures, and the total defects of the natural framings of `M_L`.
//!
//! Arf invariants of sublinks are not determined by `Q`; callers supply them
//! and anything not supplied is reported as an assumed 0.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::dhplane::{act, boundary_defect, lambda_class, FramingOffset, LambdaClass, TotalDefect};
use crate::error::{Error, Result};
use crate::exactmath::{exact_signature, smith_normal_form, solve_gf2, BitMatrix, IntMatrix};

/// Linking matrix of a framed link: `Q_ii` is the framing of component `i`,
/// `Q_ij` the linking number of components `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    size: usize,
    q: Vec<i64>,
}

impl FramedLink {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::NotSquare {
                rows: size,
                cols: row.len(),
            });
        }
        let q: Vec<i64> = rows.iter().flatten().copied().collect();
        let link = FramedLink { size, q };
        if (0..size).any(|i| (0..i).any(|j| link.linking(i, j) != link.linking(j, i))) {
            return Err(Error::NotSymmetric);
        }
        Ok(link)
    }

    /// The empty link; surgery on it gives S³.
    pub fn empty() -> Self {
        FramedLink {
            size: 0,
            q: Vec::new(),
        }
    }

    pub fn unknot(framing: i64) -> Self {
        FramedLink {
            size: 1,
            q: vec![framing],
        }
    }

    /// Unlink of `k` components with the same framing.
    pub fn unlink(k: usize, framing: i64) -> Self {
        Self::from_fn(k, |i, j| if i == j { framing } else { 0 })
    }

    /// Simple chain of `k` unknots, consecutive ones linking once.
    pub fn chain(k: usize, framing: i64) -> Self {
        Self::from_fn(k, |i, j| match i.abs_diff(j) {
            0 => framing,
            1 => 1,
            _ => 0,
        })
    }

    /// The E₈ plumbing link with all framings +2.
    pub fn e8() -> Self {
        // arms of 4, 2 and 1 edges from the trivalent vertex 4
        const EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        Self::from_fn(8, |i, j| {
            if i == j {
                2
            } else if EDGES.contains(&(i.min(j), i.max(j))) {
                1
            } else {
                0
            }
        })
    }

    fn from_fn(size: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let q = (0..size * size).map(|k| f(k / size, k % size)).collect();
        FramedLink { size, q }
    }

    pub fn components(&self) -> usize {
        self.size
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.q[i * self.size + j]
    }

    pub fn framing(&self, i: usize) -> i64 {
        self.linking(i, i)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.q
            .chunks(self.size.max(1))
            .take(self.size)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, self.size, |i, j| self.linking(i, j))
            .expect("square by construction")
    }

    /// First component with an odd framing, if any.
    pub fn first_odd_framing(&self) -> Option<usize> {
        (0..self.size).find(|&i| self.framing(i).is_odd())
    }

    pub fn is_even(&self) -> bool {
        self.first_odd_framing().is_none()
    }
}

/// Euler characteristic, signature and framing sum of `W_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    pub chi: i64,
    pub sigma: i64,
    pub tau: i64,
}

pub fn basic_invariants(link: &FramedLink) -> Result<BasicInvariants> {
    Ok(BasicInvariants {
        chi: link.components() as i64 + 1,
        sigma: exact_signature(&link.matrix())?,
        tau: (0..link.components()).map(|i| link.framing(i)).sum(),
    })
}

fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// First homology of `M_L` = coker `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub betti1: u32,
    /// Invariant factors greater than one.
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
    /// rank of H₁ ⊗ ℤ₂
    pub r: u32,
    /// number of 2-primary torsion summands
    pub s: u32,
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.betti1 > 0 {
            parts.push(if self.betti1 == 1 {
                "ℤ".into()
            } else {
                format!("ℤ^{}", self.betti1)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("ℤ/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

pub fn homology(link: &FramedLink) -> HomologyProfile {
    let snf = smith_normal_form(&link.matrix());
    let factors = &snf.invariant_factors;
    let count = |pred: &dyn Fn(&BigInt) -> bool| factors.iter().filter(|d| pred(d)).count() as u32;
    HomologyProfile {
        betti1: count(&|d| d.is_zero()),
        torsion: factors
            .iter()
            .filter(|d| *d > &BigInt::one())
            .cloned()
            .collect(),
        r: count(&|d| d.is_even()),
        s: count(&|d| !d.is_zero() && d.is_even()),
    }
}

/// Arf invariant of a sublink, with a record of whether it was supplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArfBit {
    pub value: u8,
    pub assumed: bool,
}

impl ArfBit {
    pub const ASSUMED_ZERO: ArfBit = ArfBit {
        value: 0,
        assumed: true,
    };

    pub fn supplied(value: u8) -> Result<Self> {
        if value > 1 {
            return Err(Error::InvalidParameter(format!(
                "Arf invariant must be 0 or 1, got {value}"
            )));
        }
        Ok(ArfBit {
            value,
            assumed: false,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sublink {
    #[serde(serialize_with = "serialize_members")]
    pub members: Vec<bool>,
    /// `C·C`, the sum of `Q_ij` over members `i, j`.
    pub self_intersection: i64,
    pub arf: ArfBit,
}

fn serialize_members<S: Serializer>(m: &[bool], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&members_key(m))
}

fn members_key(members: &[bool]) -> String {
    members.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl Sublink {
    pub fn new(link: &FramedLink, members: Vec<bool>) -> Result<Self> {
        if members.len() != link.components() {
            return Err(Error::DimensionMismatch {
                expected: link.components(),
                found: members.len(),
            });
        }
        let idx: Vec<usize> = (0..members.len()).filter(|&i| members[i]).collect();
        let self_intersection = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| link.linking(i, j))
            .sum();
        Ok(Sublink {
            members,
            self_intersection,
            arf: ArfBit::ASSUMED_ZERO,
        })
    }

    pub fn empty(link: &FramedLink) -> Self {
        Sublink::new(link, vec![false; link.components()]).expect("matching length")
    }

    pub fn with_arf(mut self, arf: ArfBit) -> Self {
        self.arf = arf;
        self
    }

    /// Fixed-width 0/1 string in component order, e.g. `"101"`.
    pub fn key(&self) -> String {
        members_key(&self.members)
    }

    /// `lk(C, K_i) ≡ Q_ii (mod 2)` for every component.
    pub fn is_characteristic(&self, link: &FramedLink) -> bool {
        self.members.len() == link.components()
            && (0..link.components()).all(|i| {
                let lk: i64 = (0..link.components())
                    .filter(|&j| self.members[j])
                    .map(|j| link.linking(i, j))
                    .sum();
                (lk - link.framing(i)).is_even()
            })
    }
}

/// All characteristic sublinks, ordered by their 0/1 key. There are
/// `2^r(M)` of them, one per spin structure on `M_L`; Arf values are
/// marked as assumed 0.
pub fn characteristic_sublinks(link: &FramedLink) -> Vec<Sublink> {
    let a = BitMatrix::from_int_matrix(&link.matrix());
    let solutions = solve_gf2(&a, &a.diagonal())
        .expect("a symmetric GF(2) system with b = diag(a) is always solvable");
    let mut subs: Vec<Sublink> = solutions
        .iter()
        .map(|x| Sublink::new(link, x.to_bools()).expect("matching length"))
        .collect();
    subs.sort_by_key(Sublink::key);
    subs
}

/// The μ invariant, an element of ℤ/16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MuClass(u8);

impl MuClass {
    pub fn new(value: i64) -> Self {
        MuClass(value.rem_euclid(16) as u8)
    }

    pub fn value(&self) -> u8 {
        self.0
    }

    /// Representative in {−7, …, 8}.
    pub fn representative(&self) -> i64 {
        let v = i64::from(self.0);
        if v > 8 {
            v - 16
        } else {
            v
        }
    }
}

impl fmt::Display for MuClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

impl Serialize for MuClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.representative())
    }
}

/// `μ ≡ σ_L − C·C + 8·Arf(C) (mod 16)` for a characteristic sublink `C`.
pub fn mu_invariant(link: &FramedLink, c: &Sublink) -> Result<MuClass> {
    if !c.is_characteristic(link) {
        return Err(Error::NotCharacteristic);
    }
    let sigma = exact_signature(&link.matrix())?;
    Ok(MuClass::new(
        sigma - c.self_intersection + 8 * i64::from(c.arf.value),
    ))
}

/// `λ ≡ 2(1 + r(M)) + μ (mod 4)`.
pub fn lambda_from_mu(r: u32, mu: MuClass) -> LambdaClass {
    LambdaClass::new(2 * (1 + i64::from(r)) + i64::from(mu.value()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinStructureData {
    pub sublink: Sublink,
    pub mu: MuClass,
    pub lambda: LambdaClass,
}

/// One entry per characteristic sublink, with Arf values looked up by key.
pub fn spin_structures(
    link: &FramedLink,
    arf_lookup: impl Fn(&str) -> Option<u8>,
) -> Result<Vec<SpinStructureData>> {
    let r = homology(link).r;
    characteristic_sublinks(link)
        .into_iter()
        .map(|sub| {
            let sub = match arf_lookup(&sub.key()) {
                Some(v) => sub.with_arf(ArfBit::supplied(v)?),
                None => sub,
            };
            let mu = mu_invariant(link, &sub)?;
            Ok(SpinStructureData {
                sublink: sub,
                mu,
                lambda: lambda_from_mu(r, mu),
            })
        })
        .collect()
}

/// Total defects of the natural (stable) framings of `M_L` compatible with
/// the spin structure of an even link, for a chosen twist parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalFramings {
    pub n: i64,
    /// restriction of the framing of `W_L`: `(χ_L, −3σ_L)`
    pub delta: TotalDefect,
    /// honest framing `δ_L + χ_L·σ`
    pub epsilon_h: i64,
    /// `(χ_L − n, 2n − 3σ_L)`
    pub phi_n: TotalDefect,
    /// `4n + 2χ_L − 3σ_L`
    pub honest_plus_h: i64,
    /// `4n − 2χ_L − 3σ_L`
    pub honest_minus_h: i64,
    /// `phi_n` at `n = τ_L/2`
    pub phi_half_tau: Option<TotalDefect>,
    pub freed_gompf_h: i64,
}

pub fn delta_defect(inv: &BasicInvariants) -> TotalDefect {
    boundary_defect(inv.chi, inv.sigma)
}

pub fn phi_n_defect(inv: &BasicInvariants, n: i64) -> TotalDefect {
    act(delta_defect(inv), FramingOffset::new(0, n))
}

/// Defect of the honest framing `φ_{±L}^n`; `plus` picks the sign.
pub fn honest_framing_h(inv: &BasicInvariants, n: i64, plus: bool) -> i64 {
    let pm = if plus { 1 } else { -1 };
    4 * n + pm * 2 * inv.chi - 3 * inv.sigma
}

/// Defect of the Freed–Gompf 2-framing, `2τ_L − 6σ_L`; defined for any link.
pub fn freed_gompf_h(inv: &BasicInvariants) -> i64 {
    2 * inv.tau - 6 * inv.sigma
}

pub fn natural_framings(link: &FramedLink, n: i64) -> Result<NaturalFramings> {
    if let Some(i) = link.first_odd_framing() {
        return Err(Error::OddFraming {
            index: i,
            framing: link.framing(i),
        });
    }
    let inv = basic_invariants(link)?;
    let delta = delta_defect(&inv);
    Ok(NaturalFramings {
        n,
        delta,
        epsilon_h: 2 * inv.chi - 3 * inv.sigma,
        phi_n: phi_n_defect(&inv, n),
        honest_plus_h: honest_framing_h(&inv, n, true),
        honest_minus_h: honest_framing_h(&inv, n, false),
        phi_half_tau: (inv.tau % 2 == 0).then(|| phi_n_defect(&inv, inv.tau / 2)),
        freed_gompf_h: freed_gompf_h(&inv),
    })
}

/// λ of the spin structure carried by an even link, read off `δ_L`.
pub fn even_link_lambda(link: &FramedLink) -> Result<LambdaClass> {
    Ok(lambda_class(natural_framings(link, 0)?.delta))
}

/// Mirror presentation: negate the linking matrix.
pub fn reverse_link_orientation(link: &FramedLink) -> FramedLink {
    FramedLink {
        size: link.size,
        q: link.q.iter().map(|x| -x).collect(),
    }
}
