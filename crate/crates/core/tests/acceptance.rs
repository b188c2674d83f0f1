//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use canonframe::bundles::{disk_bundle_p1, fiber_framing_defect, CircleBundle};
use canonframe::dhplane::*;
use canonframe::exactmath::{
    exact_signature, smith_decomposition, BitMatrix, BitVector, IntMatrix, Rational,
};
use canonframe::linkcalc::*;
use canonframe::quotients::*;
use common::*;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn p(d: i64, h: i64) -> TotalDefect {
    TotalDefect::new(d, h)
}

fn err(e: canonframe::Error) -> String {
    e.to_string()
}

fn fixtures() -> Outcome {
    let mut checked = 0;
    let mut eq = |what: &str, got: TotalDefect, want: TotalDefect| -> Result<(), String> {
        checked += 1;
        ensure!(got == want, "{what}: got {got}, want {want}");
        Ok(())
    };

    // S³
    let s3 = quotient_framing_defect(FiniteSubgroup::cyclic(1).map_err(err)?).map_err(err)?;
    eq("S3 phi+", s3, p(0, 2))?;
    eq("S3 phi-", reverse_orientation(s3), p(0, -2))?;
    eq(
        "S3 phi- = phi+ - rho",
        act(s3, FramingOffset::new(-1, 0)),
        p(0, -2),
    )?;
    let empty = natural_framings(&FramedLink::empty(), 0).map_err(err)?;
    eq("S3 delta", empty.delta, p(1, 0))?;
    eq(
        "S3 delta + sigma",
        act(empty.delta, FramingOffset::new(0, 1)),
        s3,
    )?;
    eq("S3 delta-", boundary_defect(-1, 0), p(-1, 0))?;

    // SO₃
    let so3 = quotient_framing_defect(FiniteSubgroup::cyclic(2).map_err(err)?).map_err(err)?;
    eq("SO3 phi+", so3, p(0, 1))?;
    eq("SO3 phi-", reverse_orientation(so3), p(0, -1))?;
    eq(
        "SO3 bundle",
        TotalDefect::honest(fiber_framing_defect(&CircleBundle::new(0, 2)).map_err(err)?),
        p(0, 1),
    )?;

    // T³
    eq("T3 phi0", boundary_defect(0, 0), p(0, 0))?;
    eq(
        "T3 phi1",
        TotalDefect::honest(fiber_framing_defect(&CircleBundle::new(1, 0)).map_err(err)?),
        p(0, 0),
    )?;
    let borromean = FramedLink::new(&vec![vec![0; 3]; 3]).map_err(err)?;
    let r = homology(&borromean).r;
    ensure!(r == 3, "T3 r = {r}");
    let arf: BTreeMap<&str, u8> = [("111", 1)].into();
    let spins = spin_structures(&borromean, |k| arf.get(k).copied()).map_err(err)?;
    ensure!(spins.len() == 8, "T3 has {} spin structures", spins.len());
    for s in &spins {
        let want = if s.sublink.key() == "111" { 8 } else { 0 };
        ensure!(
            s.mu.representative() == want,
            "T3 mu({}) = {}",
            s.sublink.key(),
            s.mu
        );
        ensure!(
            s.lambda.value() == 0,
            "T3 lambda({}) = {}",
            s.sublink.key(),
            s.lambda
        );
    }
    ensure!(lambda_class(p(0, 0)).value() == 0, "T3 lambda of (0,0)");

    // lens spaces and the Poincaré sphere
    for m in 1..=12u32 {
        let g = FiniteSubgroup::cyclic(m).map_err(err)?;
        eq(
            &format!("L({m},1) phi+"),
            quotient_framing_defect(g).map_err(err)?,
            p(0, 3 - i64::from(m)),
        )?;
    }
    eq(
        "P3 phi+",
        quotient_framing_defect(FiniteSubgroup::BinaryIcosahedral).map_err(err)?,
        p(0, -6),
    )?;
    for m in 2..=12i64 {
        let knot = FramedLink::unknot(-m);
        eq(
            &format!("L({m},1) delta_K"),
            delta_defect(&basic_invariants(&knot).map_err(err)?),
            p(2, 3),
        )?;
        let chain = FramedLink::chain(m as usize - 1, 2);
        let nf = natural_framings(&chain, 0).map_err(err)?;
        eq(&format!("L({m},1) delta_L"), nf.delta, p(m, 3 - 3 * m))?;
        let mu_l = mu_invariant(&chain, &Sublink::empty(&chain)).map_err(err)?;
        ensure!(mu_l == MuClass::new(m - 1), "L({m},1) mu_L = {mu_l}");
        if m % 2 == 0 {
            let mu_k = mu_invariant(&knot, &Sublink::empty(&knot)).map_err(err)?;
            ensure!(mu_k == MuClass::new(-1), "L({m},1) mu_K = {mu_k}");
        }
    }
    let e8 = natural_framings(&FramedLink::e8(), 0).map_err(err)?;
    eq("P3 delta_L", e8.delta, p(9, -24))?;
    let canon = canonical_set(lambda_class(e8.delta));
    for rho in [1, 2] {
        let q = act(e8.delta, FramingOffset::new(rho, 9));
        ensure!(
            canon.contains(&q),
            "P3 delta_L + 9sigma + {rho}rho = {q} not canonical"
        );
    }

    // Hopf disk bundle
    let hopf = CircleBundle::new(0, 1);
    ensure!(disk_bundle_p1(&hopf).map_err(err)? == 5, "Hopf p1");
    ensure!(fiber_framing_defect(&hopf).map_err(err)? == 2, "Hopf h");

    // canonical sets
    let sets = [
        (0, vec![p(0, 0)]),
        (1, vec![p(0, 1)]),
        (-1, vec![p(0, -1)]),
        (2, vec![p(-1, 0), p(0, -2), p(0, 2), p(1, 0)]),
    ];
    for (k, want) in sets {
        let got = canonical_set(LambdaClass::new(k));
        ensure!(got == want, "canonical set {k}: {got:?}");
    }
    Ok(format!("{checked} defect equalities plus invariant checks"))
}

fn cotangent_oracle() -> Outcome {
    let start = Instant::now();
    let mut groups: Vec<FiniteSubgroup> = (1..=200)
        .map(|m| FiniteSubgroup::cyclic(m).unwrap())
        .collect();
    groups.extend((2..=100).map(|m| FiniteSubgroup::binary_dihedral(m).unwrap()));
    groups.extend([
        FiniteSubgroup::BinaryTetrahedral,
        FiniteSubgroup::BinaryOctahedral,
        FiniteSubgroup::BinaryIcosahedral,
    ]);
    let mut worst = 0f64;
    for g in &groups {
        let exact = sigma_g(*g);
        let closed = match *g {
            FiniteSubgroup::Cyclic(m) => i64::from(m).pow(2) - 3 * i64::from(m) + 2,
            FiniteSubgroup::BinaryDihedral(m) => 4 * i64::from(m).pow(2) + 2,
            FiniteSubgroup::BinaryTetrahedral => 98,
            FiniteSubgroup::BinaryOctahedral => 242,
            FiniteSubgroup::BinaryIcosahedral => 722,
        };
        ensure!(exact == closed, "{g}: closed form {exact} != {closed}");
        let err = (sigma_g_bruteforce(*g) - exact as f64).abs();
        worst = worst.max(err);
        ensure!(err < 1e-6, "{g}: brute force off by {err:e}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    // independent enumeration of the non-cyclic groups as unit quaternions
    for (elems, g) in [
        (binary_tetrahedral(), FiniteSubgroup::BinaryTetrahedral),
        (binary_octahedral(), FiniteSubgroup::BinaryOctahedral),
        (binary_icosahedral(), FiniteSubgroup::BinaryIcosahedral),
        (
            binary_dihedral(7),
            FiniteSubgroup::binary_dihedral(7).unwrap(),
        ),
    ] {
        ensure!(
            elems.len() as u64 == g.order(),
            "{g}: enumerated {} elements",
            elems.len()
        );
        let err = (cot_sum(&elems) - sigma_g(g) as f64).abs();
        ensure!(err < 1e-6, "{g}: quaternion enumeration off by {err:e}");
    }
    Ok(format!(
        "{} groups, max error {worst:.1e}, {:.0?}",
        groups.len(),
        elapsed
    ))
}

fn kernel_dim(link: &FramedLink) -> u32 {
    let a = BitMatrix::from_int_matrix(&link.matrix());
    let n = link.components();
    let zero = BitVector::zeros(n);
    let count = (0u32..1 << n)
        .filter(|c| {
            a.mul_vec(&BitVector::from_bools(
                &(0..n).map(|i| c >> i & 1 == 1).collect::<Vec<_>>(),
            )) == zero
        })
        .count();
    count.trailing_zeros()
}

fn link_properties() -> Outcome {
    const LINKS: usize = 600;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..LINKS {
        let link = random_even_link(&mut rng, 8, 3);
        let ctx = |what: &str| format!("link {i} {:?}: {what}", link.rows());
        let inv = basic_invariants(&link).map_err(err)?;
        let nf = natural_framings(&link, 0).map_err(err)?;
        // (a)
        let fg = 2 * inv.tau - 6 * inv.sigma;
        ensure!(
            honest_framing_h(&inv, inv.tau / 2, true) + honest_framing_h(&inv, 0, false) == fg,
            "{}",
            ctx("(a)")
        );
        ensure!(
            honest_framing_h(&inv, 0, true) + honest_framing_h(&inv, inv.tau / 2, false) == fg,
            "{}",
            ctx("(a) swapped")
        );
        ensure!(nf.freed_gompf_h == fg, "{}", ctx("(a) freed_gompf_h"));
        // (b)
        let h1 = homology(&link);
        let mu = mu_invariant(&link, &Sublink::empty(&link)).map_err(err)?;
        ensure!(
            lambda_class(nf.delta) == lambda_from_mu(h1.r, mu),
            "{}",
            ctx("(b)")
        );
        // (c)
        let eps = act(nf.delta, FramingOffset::new(0, inv.chi));
        ensure!(
            eps == TotalDefect::honest(nf.epsilon_h) && lambda_class(eps) == lambda_class(nf.delta),
            "{}",
            ctx("(c)")
        );
        // (d)
        let rev = natural_framings(&reverse_link_orientation(&link), 0).map_err(err)?;
        ensure!(
            rev.delta == p(inv.chi, 3 * inv.sigma) && rev.delta == reverse_orientation(nf.delta),
            "{}",
            ctx("(d)")
        );
        // (e)
        let subs = characteristic_sublinks(&link);
        ensure!(
            subs.len() == 1usize << h1.r && h1.r == kernel_dim(&link),
            "{}",
            ctx("(e)")
        );
    }
    Ok(format!("{LINKS} random even links"))
}

fn action_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac7);
    let pt = |rng: &mut ChaCha8Rng| p(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
    let off = |rng: &mut ChaCha8Rng| {
        FramingOffset::new(rng.gen_range(-500..=500), rng.gen_range(-500..=500))
    };
    const SAMPLES: usize = 5000;
    for _ in 0..SAMPLES {
        let x = pt(&mut rng);
        let (a, b) = (off(&mut rng), off(&mut rng));
        ensure!(act(x, FramingOffset::ZERO) == x, "identity at {x}");
        ensure!(act(act(x, a), b) == act(x, a + b), "composition at {x}");
        ensure!(
            lambda_class(act(x, a)) == lambda_class(x),
            "lambda moved at {x}"
        );
        let k = lambda_class(x).representative();
        let c = canonical_offset(x, k).map_err(err)?;
        ensure!(
            act(x, c) == TotalDefect::honest(k),
            "canonical offset at {x}"
        );

        let (r1, r2) = (rng.gen_range(1..=30), rng.gen_range(1..=30));
        let s1 = Rational::new(rng.gen_range(-999..=999), 3).map_err(err)?;
        let s2 = Rational::new(rng.gen_range(-999..=999), 3).map_err(err)?;
        let twice =
            pullback_cover(pullback_cover(x, r1, &s1).map_err(err)?, r2, &s2).map_err(err)?;
        let once = pullback_cover(x, r1 * r2, &(&s1.scale(r2) + &s2)).map_err(err)?;
        ensure!(twice == once, "pullback composition at {x}");
        ensure!(
            pullback_cover(x, r1, &Rational::zero()).map_err(err)? == p(r1 * x.d, r1 * x.h),
            "trivial pullback"
        );
    }
    let mut groups: Vec<FiniteSubgroup> = (1..=200)
        .map(|m| FiniteSubgroup::cyclic(m).unwrap())
        .collect();
    groups.extend((2..=100).map(|m| FiniteSubgroup::binary_dihedral(m).unwrap()));
    groups.extend([
        FiniteSubgroup::BinaryTetrahedral,
        FiniteSubgroup::BinaryOctahedral,
        FiniteSubgroup::BinaryIcosahedral,
    ]);
    for g in &groups {
        let down = quotient_framing_defect(*g).map_err(err)?;
        let up = pullback_cover(down, g.order() as i64, &signature_defect(*g)).map_err(err)?;
        ensure!(up == p(0, 2), "{g}: round trip gives {up}");
    }
    Ok(format!(
        "{SAMPLES} random samples, {} subgroup round trips",
        groups.len()
    ))
}

fn float_signature(rows: &[Vec<i64>]) -> Option<i64> {
    let n = rows.len();
    let eig = DMatrix::from_fn(n, n, |i, j| rows[i][j] as f64).symmetric_eigen();
    if eig.eigenvalues.iter().any(|e| e.abs() <= 1e-6) {
        return None;
    }
    Some(
        eig.eigenvalues
            .iter()
            .map(|&e| if e > 0.0 { 1 } else { -1 })
            .sum(),
    )
}

fn signature_and_smith() -> Outcome {
    const N: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x519);
    let (mut compared, mut skipped) = (0, 0);
    while compared < N {
        let rows = random_symmetric(&mut rng, 8, 6);
        let Some(want) = float_signature(&rows) else {
            skipped += 1;
            continue;
        };
        let got = exact_signature(&IntMatrix::from_rows(&rows).map_err(err)?).map_err(err)?;
        ensure!(
            got == want,
            "signature of {rows:?}: exact {got}, float {want}"
        );
        compared += 1;
    }
    for _ in 0..N {
        let rows = random_rect(&mut rng, 7, 9);
        let m = IntMatrix::from_rows(&rows).map_err(err)?;
        let dec = smith_decomposition(&m);
        ensure!(dec.form.is_divisibility_chain(), "chain fails for {rows:?}");
        ensure!(
            dec.left.determinant().map_err(err)?.abs().is_one(),
            "left not unimodular for {rows:?}"
        );
        ensure!(
            dec.right.determinant().map_err(err)?.abs().is_one(),
            "right not unimodular for {rows:?}"
        );
        let prod = dec
            .left
            .mul(&m)
            .map_err(err)?
            .mul(&dec.right)
            .map_err(err)?;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let want = if i == j {
                    dec.form.invariant_factors[i].clone()
                } else {
                    BigInt::zero()
                };
                ensure!(prod.get(i, j) == &want, "U*M*V != D for {rows:?}");
            }
        }
    }
    Ok(format!(
        "{N} signatures ({skipped} near-singular draws skipped), {N} Smith forms"
    ))
}

fn lattice_embedding() -> Outcome {
    let base = p(0, 2);
    let mut checked = 0;
    for m in [4i64, 8, 12, 16] {
        let lambda = LambdaClass::new(-1);
        ensure!(
            lambda_class(p(m, 3 - 3 * m)) == lambda,
            "L({m},1) delta_L not in the -1 coset"
        );
        ensure!(
            lambda_class(p(2, 3)) == lambda,
            "L({m},1) delta_K not in the -1 coset"
        );
        let defect = lens_signature_defect(m as u32).map_err(err)?;
        for d in -10..=10 {
            for h in -20..=20 {
                let x = p(d, h);
                if !in_lattice(x, lambda) {
                    continue;
                }
                let up = pullback_cover(x, m, &defect).map_err(err)?;
                ensure!(
                    in_scaled_coset(up, m, base),
                    "m={m}: {x} pulls back to {up}"
                );
                checked += 1;
            }
        }
    }
    // sanity: a point of another coset must not land there
    let off = pullback_cover(p(0, 0), 4, &lens_signature_defect(4).map_err(err)?).map_err(err)?;
    ensure!(!in_scaled_coset(off, 4, base), "coset test is vacuous");
    Ok(format!("{checked} lattice points"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("fixture suite", fixtures),
        ("cotangent oracle", cotangent_oracle),
        ("random even link properties", link_properties),
        ("action laws", action_laws),
        (
            "exact signature and Smith form oracles",
            signature_and_smith,
        ),
        ("lattice embedding for m = 0 mod 4", lattice_embedding),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
