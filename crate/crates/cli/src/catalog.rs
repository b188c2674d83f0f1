//! Reference values, each recomputed through the library when listed.

use std::fmt::Write;

use canonframe::bundles::{disk_bundle_p1, fiber_framing_defect, CircleBundle};
use canonframe::dhplane::{
    act, boundary_defect, canonical_set, lambda_class, reverse_orientation, FramingOffset,
    LambdaClass, TotalDefect,
};
use canonframe::linkcalc::{
    basic_invariants, delta_defect, homology, mu_invariant, natural_framings, spin_structures,
    FramedLink, Sublink,
};
use canonframe::quotients::{quotient_framing_defect, signature_defect, FiniteSubgroup};
use serde::Serialize;
use serde_json::json;

use crate::commands::Output;
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub subject: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    /// How the value is obtained.
    pub basis: String,
}

impl CatalogEntry {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

struct Builder(Vec<CatalogEntry>);

impl Builder {
    fn add(
        &mut self,
        subject: &str,
        quantity: &str,
        expected: &str,
        computed: impl ToString,
        basis: &str,
    ) {
        self.0.push(CatalogEntry {
            subject: subject.into(),
            quantity: quantity.into(),
            expected: expected.into(),
            computed: computed.to_string(),
            basis: basis.into(),
        });
    }
}

fn set_text(set: &[TotalDefect]) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn entries() -> Result<Vec<CatalogEntry>> {
    let mut b = Builder(Vec::new());
    let quotient = |g: FiniteSubgroup| quotient_framing_defect(g);

    let s3 = quotient(FiniteSubgroup::cyclic(1)?)?;
    b.add(
        "S³",
        "H(φ₊)",
        "(0, 2)",
        s3,
        "Hopf framing, trivial quotient",
    );
    b.add(
        "S³",
        "H(φ₋)",
        "(0, -2)",
        reverse_orientation(s3),
        "orientation reversal of φ₊",
    );
    b.add(
        "S³",
        "φ₊ - ρ",
        "(0, -2)",
        act(s3, FramingOffset::new(-1, 0)),
        "ρ action",
    );
    let empty = natural_framings(&FramedLink::empty(), 0)?;
    b.add("S³", "H(δ)", "(1, 0)", empty.delta, "boundary of B⁴");
    b.add(
        "S³",
        "H(δ₋)",
        "(-1, 0)",
        boundary_defect(-1, 0),
        "boundary of B⁴ # S¹×S³",
    );

    let so3 = quotient(FiniteSubgroup::cyclic(2)?)?;
    b.add("SO₃", "H(φ₊)", "(0, 1)", so3, "quotient by C2");
    b.add(
        "SO₃",
        "H(φ₋)",
        "(0, -1)",
        reverse_orientation(so3),
        "orientation reversal of φ₊",
    );

    b.add(
        "T³",
        "H(φ₀)",
        "(0, 0)",
        boundary_defect(0, 0),
        "boundary of T²×B²",
    );
    let t3 = TotalDefect::honest(fiber_framing_defect(&CircleBundle::new(1, 0))?);
    b.add(
        "T³",
        "H(φ₁)",
        "(0, 0)",
        t3,
        "Lie framing, trivial bundle over the torus",
    );
    let zero3 = FramedLink::new(&vec![vec![0; 3]; 3])?;
    b.add(
        "T³",
        "r",
        "3",
        homology(&zero3).r,
        "0-framed 3-component unlink",
    );
    let spins = spin_structures(&zero3, |k| (k == "111").then_some(1))?;
    let mus: Vec<String> = spins
        .iter()
        .map(|s| format!("{}:{}", s.sublink.key(), s.mu))
        .collect();
    b.add(
        "T³",
        "μ by sublink",
        "000:0 001:0 010:0 011:0 100:0 101:0 110:0 111:8",
        mus.join(" "),
        "Borromean rings, Arf 1 on the full link",
    );
    let lambdas: Vec<String> = spins
        .iter()
        .map(|s| s.lambda.representative().to_string())
        .collect();
    b.add(
        "T³",
        "λ of every spin structure",
        "0 0 0 0 0 0 0 0",
        lambdas.join(" "),
        "λ ≡ 2(1 + r) + μ",
    );

    for m in 1..=12u32 {
        let h = quotient(FiniteSubgroup::cyclic(m)?)?.h;
        b.add(
            &format!("L({m},1)"),
            "h(φ₊)",
            &(3 - i64::from(m)).to_string(),
            h,
            "h = (2 - σ(G))/|G|",
        );
    }
    b.add(
        "P³",
        "h(φ₊)",
        "-6",
        quotient(FiniteSubgroup::BinaryIcosahedral)?.h,
        "quotient by the binary icosahedral group",
    );

    for m in 2..=12i64 {
        let subject = format!("L({m},1)");
        let knot = FramedLink::unknot(-m);
        b.add(
            &subject,
            "H(δ_K)",
            "(2, 3)",
            delta_defect(&basic_invariants(&knot)?),
            "(-m)-framed unknot",
        );
        let chain = FramedLink::chain(m as usize - 1, 2);
        let delta = natural_framings(&chain, 0)?.delta;
        b.add(
            &subject,
            "H(δ_L)",
            &format!("({m}, {})", 3 - 3 * m),
            delta,
            "chain of m-1 unknots framed 2",
        );
        let mu_l = mu_invariant(&chain, &Sublink::empty(&chain))?;
        // m - 1 reduced into -7..=8
        let want = (m - 1 + 7).rem_euclid(16) - 7;
        b.add(
            &subject,
            "μ_L",
            &want.to_string(),
            mu_l.representative(),
            "μ ≡ σ_L - C·C, C = ∅",
        );
        if m % 2 == 0 {
            let mu_k = mu_invariant(&knot, &Sublink::empty(&knot))?;
            b.add(&subject, "μ_K", "-1", mu_k, "μ ≡ σ_L - C·C, C = ∅");
        }
    }

    let e8 = natural_framings(&FramedLink::e8(), 0)?;
    b.add("P³", "H(δ_L)", "(9, -24)", e8.delta, "E8 plumbing link");
    b.add(
        "P³",
        "δ_L + 9σ",
        "(0, -6)",
        act(e8.delta, FramingOffset::new(0, 9)),
        "equals φ₊",
    );
    let canon = canonical_set(lambda_class(e8.delta));
    for (rho, want) in [(1, "(0, -2)"), (2, "(0, 2)")] {
        let q = act(e8.delta, FramingOffset::new(rho, 9));
        let computed = if canon.contains(&q) {
            q.to_string()
        } else {
            format!("{q} (not canonical)")
        };
        b.add(
            "P³",
            &format!("δ_L + 9σ + {rho}ρ"),
            want,
            computed,
            "canonical framing",
        );
    }

    let hopf = CircleBundle::new(0, 1);
    b.add(
        "Hopf disk bundle",
        "p₁(Δ)",
        "5",
        disk_bundle_p1(&hopf)?,
        "circle bundle g = 0, n = 1",
    );
    b.add(
        "S³ as circle bundle",
        "h",
        "2",
        fiber_framing_defect(&hopf)?,
        "fiber-preserving framing",
    );

    for (g, want) in [
        (FiniteSubgroup::BinaryTetrahedral, "98/3"),
        (FiniteSubgroup::BinaryOctahedral, "242/3"),
        (FiniteSubgroup::BinaryIcosahedral, "722/3"),
    ] {
        b.add(
            &format!("S³ → S³/{g}"),
            "signature defect",
            want,
            signature_defect(g),
            "cotangent sum over G",
        );
    }
    for (m, want) in [(3u32, "2/3"), (5, "4"), (8, "14")] {
        let g = FiniteSubgroup::cyclic(m)?;
        b.add(
            &format!("S³ → L({m},1)"),
            "signature defect",
            want,
            signature_defect(g),
            "(m-1)(m-2)/3",
        );
    }

    for (k, want) in [
        (0, "(0, 0)"),
        (1, "(0, 1)"),
        (-1, "(0, -1)"),
        (2, "(-1, 0) (0, -2) (0, 2) (1, 0)"),
    ] {
        let set = canonical_set(LambdaClass::new(k));
        b.add(
            "dh-plane",
            &format!("canonical set, λ = {k}"),
            want,
            set_text(&set),
            "minimal 2|d| + |h|",
        );
    }
    Ok(b.0)
}

pub fn catalog() -> Result<Output> {
    let entries = entries()?;
    let w_subject = entries
        .iter()
        .map(|e| e.subject.chars().count())
        .max()
        .unwrap_or(0);
    let w_quantity = entries
        .iter()
        .map(|e| e.quantity.chars().count())
        .max()
        .unwrap_or(0);
    let mut t = String::new();
    for e in &entries {
        let status = if e.matches() { "ok" } else { "MISMATCH" };
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
        write!(
            t,
            "{}  {}  {}",
            pad(&e.subject, w_subject),
            pad(&e.quantity, w_quantity),
            e.expected
        )
        .unwrap();
        if !e.matches() {
            write!(t, "  (computed {})", e.computed).unwrap();
        }
        writeln!(t, "  [{status}; {}]", e.basis).unwrap();
    }
    let json =
        json!({ "entries": entries, "all_match": entries.iter().all(CatalogEntry::matches) });
    Ok(Output { text: t, json })
}
