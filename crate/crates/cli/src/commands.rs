//! One function per subcommand. Each returns the human table and the JSON
//! value; `main` picks one.

use std::fmt::Write;

use canonframe::bundles::{bundle_report, fiber_framing_defect, CircleBundle};
use canonframe::dhplane::{
    canonical_set, descend_cover, lambda_class, offset_between, pullback_cover, LambdaClass,
    TotalDefect,
};
use canonframe::exactmath::Rational;
use canonframe::linkcalc::{
    basic_invariants, homology, natural_framings, spin_structures, FramedLink, NaturalFramings,
    SpinStructureData,
};
use canonframe::quotients::{lens_canonical_offset, quotient_report, within, FiniteSubgroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::LinkDocument;
use crate::error::Result;

pub const ARF_MARKER: &str = "[arf assumed 0]";
pub const BRUTE_FORCE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn lambda_text(k: LambdaClass) -> String {
    format!("{} (class {} mod 4)", k.representative(), k.value())
}

/// Sublink key for tables; the empty link has an empty key.
fn key_text(key: String) -> String {
    if key.is_empty() {
        "∅".into()
    } else {
        key
    }
}

fn spin_line(s: &SpinStructureData) -> String {
    let mut line = format!(
        "  {}  C·C = {:>4}  Arf = {}  μ = {:>2}  λ = {}",
        key_text(s.sublink.key()),
        s.sublink.self_intersection,
        s.sublink.arf.value,
        s.mu.representative(),
        lambda_text(s.lambda)
    );
    if s.sublink.arf.assumed {
        write!(line, "  {ARF_MARKER}").unwrap();
    }
    line
}

fn spin_json(s: &SpinStructureData) -> Value {
    json!({
        "sublink": s.sublink.key(),
        "self_intersection": s.sublink.self_intersection,
        "arf": s.sublink.arf.value,
        "arf_assumed": s.sublink.arf.assumed,
        "mu": s.mu.representative(),
        "lambda": s.lambda.representative(),
        "lambda_class": s.lambda.value(),
    })
}

fn odd_warning(link: &FramedLink) -> Option<String> {
    link.first_odd_framing().map(|i| {
        format!(
            "component {i} has odd framing {}; the link is not even, so δ_L, ε_L and φ_L are not defined",
            link.framing(i)
        )
    })
}

/// Natural framings at twist `n = τ_L/2`, the value used by φ_L and φ_±L.
fn even_framings(link: &FramedLink) -> Option<NaturalFramings> {
    if !link.is_even() {
        return None;
    }
    let tau: i64 = (0..link.components()).map(|i| link.framing(i)).sum();
    natural_framings(link, tau / 2).ok()
}

fn warnings_text(out: &mut String, warnings: &[String]) {
    if !warnings.is_empty() {
        writeln!(out, "warnings:").unwrap();
        for w in warnings {
            writeln!(out, "  {w}").unwrap();
        }
    }
}

pub fn invariants(doc: &LinkDocument) -> Result<Output> {
    let (link, mut warnings) = doc.to_link()?;
    let inv = basic_invariants(&link)?;
    let h1 = homology(&link);
    let spins = spin_structures(&link, |k| doc.arf(k))?;
    warnings.extend(odd_warning(&link));
    let framings = even_framings(&link);

    let mut t = String::new();
    let plural = if link.components() == 1 { "" } else { "s" };
    writeln!(
        t,
        "link: {} ({} component{plural})",
        doc.name,
        link.components()
    )
    .unwrap();
    writeln!(t, "χ_L = {}", inv.chi).unwrap();
    writeln!(t, "σ_L = {}", inv.sigma).unwrap();
    writeln!(t, "τ_L = {}", inv.tau).unwrap();
    writeln!(
        t,
        "H₁(M_L) = {}  (b₁ = {}, r = {}, s = {})",
        h1, h1.betti1, h1.r, h1.s
    )
    .unwrap();
    writeln!(t, "spin structures (characteristic sublinks):").unwrap();
    for s in &spins {
        writeln!(t, "{}", spin_line(s)).unwrap();
    }
    if let Some(nf) = &framings {
        writeln!(t, "natural framings:").unwrap();
        writeln!(t, "  H(δ_L) = {}", nf.delta).unwrap();
        writeln!(t, "  H(ε_L) = {}", TotalDefect::honest(nf.epsilon_h)).unwrap();
        writeln!(t, "  λ(δ_L) = {}", lambda_text(lambda_class(nf.delta))).unwrap();
        if let Some(phi) = nf.phi_half_tau {
            writeln!(t, "  H(φ_L) = {phi}  (n = τ_L/2 = {})", nf.n).unwrap();
        }
        writeln!(
            t,
            "  H(φ₊L) = {}  (n = {})",
            TotalDefect::honest(nf.honest_plus_h),
            nf.n
        )
        .unwrap();
        writeln!(
            t,
            "  H(φ₋L) = {}  (n = {})",
            TotalDefect::honest(nf.honest_minus_h),
            nf.n
        )
        .unwrap();
    }
    writeln!(
        t,
        "Freed–Gompf 2-framing: h = {}",
        2 * inv.tau - 6 * inv.sigma
    )
    .unwrap();
    warnings_text(&mut t, &warnings);

    let json = json!({
        "name": doc.name,
        "components": link.components(),
        "chi": inv.chi,
        "sigma": inv.sigma,
        "tau": inv.tau,
        "homology": to_value(&h1),
        "spin_structures": spins.iter().map(spin_json).collect::<Vec<_>>(),
        "natural_framings": framings.as_ref().map(to_value),
        "freed_gompf_h": 2 * inv.tau - 6 * inv.sigma,
        "warnings": warnings,
    });
    Ok(Output { text: t, json })
}

fn set_text(set: &[TotalDefect]) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn canonical_for_lambda(k: i64) -> Output {
    let class = LambdaClass::new(k);
    let set = canonical_set(class);
    let text = format!(
        "canonical framings for λ = {}:\n  {}\n",
        lambda_text(class),
        set_text(&set)
    );
    let json = json!({
        "lambda": class.representative(),
        "lambda_class": class.value(),
        "canonical_set": to_value(&set),
    });
    Output { text, json }
}

pub fn canonical_for_link(doc: &LinkDocument) -> Result<Output> {
    let (link, mut warnings) = doc.to_link()?;
    warnings.extend(odd_warning(&link));
    let mut t = String::new();
    writeln!(t, "link: {}", doc.name).unwrap();
    let Some(nf) = even_framings(&link) else {
        // no natural framings; list the canonical sets of each spin structure
        let spins = spin_structures(&link, |k| doc.arf(k))?;
        let mut rows = Vec::new();
        for s in &spins {
            let set = canonical_set(s.lambda);
            let mut line = format!(
                "  {}  λ = {}  canonical: {}",
                key_text(s.sublink.key()),
                lambda_text(s.lambda),
                set_text(&set)
            );
            if s.sublink.arf.assumed {
                write!(line, "  {ARF_MARKER}").unwrap();
            }
            writeln!(t, "{line}").unwrap();
            rows.push(json!({
                "sublink": s.sublink.key(),
                "arf_assumed": s.sublink.arf.assumed,
                "lambda": s.lambda.representative(),
                "canonical_set": to_value(&set),
            }));
        }
        warnings_text(&mut t, &warnings);
        let json = json!({ "name": doc.name, "spin_structures": rows, "offsets": Value::Null, "warnings": warnings });
        return Ok(Output { text: t, json });
    };

    let class = lambda_class(nf.delta);
    let set = canonical_set(class);
    writeln!(t, "λ = {}", lambda_text(class)).unwrap();
    writeln!(t, "canonical framings: {}", set_text(&set)).unwrap();
    let mut named: Vec<(&str, TotalDefect)> = vec![
        ("δ_L", nf.delta),
        ("ε_L", TotalDefect::honest(nf.epsilon_h)),
    ];
    if let Some(phi) = nf.phi_half_tau {
        named.push(("φ_L", phi));
    }
    named.push(("φ₊L", TotalDefect::honest(nf.honest_plus_h)));
    named.push(("φ₋L", TotalDefect::honest(nf.honest_minus_h)));

    let mut offsets = Vec::new();
    for (name, from) in &named {
        writeln!(t, "{name} = {from}:").unwrap();
        for to in &set {
            let off = offset_between(*from, *to)?;
            writeln!(t, "  {name} {off} → {to}").unwrap();
            offsets.push(json!({
                "framing": name,
                "defect": to_value(from),
                "offset": to_value(&off),
                "target": to_value(to),
            }));
        }
    }
    warnings_text(&mut t, &warnings);
    let json = json!({
        "name": doc.name,
        "lambda": class.representative(),
        "lambda_class": class.value(),
        "canonical_set": to_value(&set),
        "offsets": offsets,
        "warnings": warnings,
    });
    Ok(Output { text: t, json })
}

pub fn quotient(g: FiniteSubgroup) -> Result<Output> {
    let r = quotient_report(g)?;
    let ok = within(r.sigma_g_bruteforce, r.sigma_g, BRUTE_FORCE_TOLERANCE);
    let lens = match g {
        FiniteSubgroup::Cyclic(m) => Some(lens_canonical_offset(m)?),
        _ => None,
    };
    let mut t = String::new();
    writeln!(t, "group: {g} (order {})", r.order).unwrap();
    writeln!(t, "σ(G) = {}", r.sigma_g).unwrap();
    writeln!(
        t,
        "brute force: {:.9} ({} {BRUTE_FORCE_TOLERANCE:e})",
        r.sigma_g_bruteforce,
        if ok { "within" } else { "NOT within" }
    )
    .unwrap();
    writeln!(t, "signature defect σ(G)/3 = {}", r.signature_defect).unwrap();
    writeln!(
        t,
        "H(S³/G, φ₊) = {}  (h = {})",
        r.quotient_framing, r.quotient_framing.h
    )
    .unwrap();
    if let Some(off) = lens {
        writeln!(
            t,
            "canonical: φ₊ {off} → {}",
            canonframe::dhplane::act(r.quotient_framing, off)
        )
        .unwrap();
    }
    let mut json = to_value(&r);
    json["bruteforce_within_tolerance"] = json!(ok);
    json["lens_canonical_offset"] = lens.as_ref().map(to_value).unwrap_or(Value::Null);
    Ok(Output { text: t, json })
}

pub fn bundle(genus: u32, euler: i64) -> Result<Output> {
    let b = CircleBundle::new(genus, euler);
    // surface the precondition failure as an error
    fiber_framing_defect(&b)?;
    let r = bundle_report(b);
    let mut t = String::new();
    writeln!(t, "circle bundle: genus {genus}, Euler class {euler}").unwrap();
    writeln!(t, "χ(base) = {}", r.base_euler_char).unwrap();
    writeln!(
        t,
        "fiber-preserving framing exists: {}",
        r.fiber_framing_exists
    )
    .unwrap();
    match r.disk_bundle_p1 {
        Some(p1) => writeln!(t, "p₁(Δ) = {p1}").unwrap(),
        None => writeln!(t, "p₁(Δ) undefined (Euler class 0)").unwrap(),
    }
    writeln!(t, "σ(Δ) = {}", r.disk_bundle_signature).unwrap();
    writeln!(t, "h = {}", r.defect.expect("checked above")).unwrap();
    Ok(Output {
        text: t,
        json: to_value(&r),
    })
}

pub fn cover(defect: TotalDefect, degree: i64, sigma_pi: &Rational) -> Result<Output> {
    let up = pullback_cover(defect, degree, sigma_pi)?;
    let back = descend_cover(up, degree, sigma_pi)?;
    debug_assert_eq!(back, defect);
    let text = format!(
        "pullback of {defect} along a degree {degree} cover with σ(π) = {sigma_pi}:\n  {up}\n"
    );
    let json = json!({
        "defect": to_value(&defect),
        "degree": degree,
        "sigma_pi": sigma_pi.to_string(),
        "pullback": to_value(&up),
    });
    Ok(Output { text, json })
}
