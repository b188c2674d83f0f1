#![allow(dead_code)]

use canonframe::linkcalc::FramedLink;
use rand::Rng;

/// Random even framed link with `1..=max_len` components and entries in `[-bound, bound]`.
pub fn random_even_link<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> FramedLink {
    let n = rng.gen_range(1..=max_len);
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        let half = bound / 2;
        rows[i][i] = 2 * rng.gen_range(-half..=half);
        for j in i + 1..n {
            let v = rng.gen_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    FramedLink::new(&rows).expect("symmetric by construction")
}

pub fn random_symmetric<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> Vec<Vec<i64>> {
    let n = rng.gen_range(1..=max_len);
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    rows
}

pub fn random_rect<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=max_len);
    let c = rng.gen_range(1..=max_len);
    (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Unit quaternion as `[w, x, y, z]`.
pub type Quat = [f64; 4];

pub fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn close(a: &Quat, b: &Quat) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
}

/// The finite group generated by `gens`, by repeated multiplication.
pub fn generate(gens: &[Quat]) -> Vec<Quat> {
    let mut elems: Vec<Quat> = vec![[1.0, 0.0, 0.0, 0.0]];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let p = qmul(*a, *g);
                if !elems.iter().any(|e| close(e, &p)) {
                    elems.push(p);
                    next.push(p);
                }
            }
        }
        frontier = next;
        assert!(elems.len() <= 1000, "generators do not span a finite group");
    }
    elems
}

/// `3·Σ_{u≠1} cot²(θ/2)` with `u = cos θ + (sin θ)·axis`, `θ ∈ [0, π]`.
pub fn cot_sum(group: &[Quat]) -> f64 {
    3.0 * group
        .iter()
        .filter(|u| (u[0] - 1.0).abs() > 1e-9)
        .map(|u| {
            let half = u[0].clamp(-1.0, 1.0).acos() / 2.0;
            (half.cos() / half.sin()).powi(2)
        })
        .sum::<f64>()
}

pub fn binary_tetrahedral() -> Vec<Quat> {
    generate(&[
        [0.5, 0.5, 0.5, 0.5],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
}

pub fn binary_octahedral() -> Vec<Quat> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    generate(&[[0.5, 0.5, 0.5, 0.5], [s, s, 0.0, 0.0]])
}

pub fn binary_icosahedral() -> Vec<Quat> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    generate(&[[0.5, 0.5, 0.5, 0.5], [phi / 2.0, 0.5 / phi, 0.5, 0.0]])
}

pub fn binary_dihedral(m: u32) -> Vec<Quat> {
    let t = std::f64::consts::PI / f64::from(m);
    generate(&[[t.cos(), t.sin(), 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]])
}
