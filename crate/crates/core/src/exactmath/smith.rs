use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;

/// Invariant factors `d1 | d2 | ... | dr` followed by zeros; one entry per
/// diagonal position, so the length is `min(rows, cols)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    #[serde(serialize_with = "serialize_factors")]
    pub invariant_factors: Vec<BigInt>,
}

fn serialize_factors<S: serde::Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }

    /// The defining chain: every nonzero factor divides its successor and
    /// zeros come last.
    pub fn is_divisibility_chain(&self) -> bool {
        let f = &self.invariant_factors;
        f.iter().all(|d| !d.is_negative())
            && f.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    w[1].is_multiple_of(&w[0])
                }
            })
    }
}

/// `left * input * right = diagonal`, with `left` and `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub form: SmithForm,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith_decomposition(m).form
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_dst += q * row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for mat in [&mut self.a, &mut self.u] {
            let src_row = mat[src].clone();
            for (d, s) in mat[dst].iter_mut().zip(&src_row) {
                *d += q * s;
            }
        }
    }

    /// col_dst += q * col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let s = row[src].clone();
            row[dst] += q * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for mat in [&mut self.a, &mut self.u] {
            for x in mat[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    /// Position of the smallest nonzero |entry| in the trailing block.
    fn smallest_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.row_vecs(),
        u: IntMatrix::identity(rows).row_vecs(),
        v: IntMatrix::identity(cols).row_vecs(),
    };
    let diag = rows.min(cols);

    for k in 0..diag {
        while let Some((pi, pj)) = w.smallest_pivot(k) {
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if w.a[i][k].is_zero() {
                    continue;
                }
                let q = -w.a[i][k].div_floor(&w.a[k][k]);
                w.add_row(i, k, &q);
                clean &= w.a[i][k].is_zero();
            }
            for j in k + 1..cols {
                if w.a[k][j].is_zero() {
                    continue;
                }
                let q = -w.a[k][j].div_floor(&w.a[k][k]);
                w.add_col(j, k, &q);
                clean &= w.a[k][j].is_zero();
            }
            if !clean {
                // a nonzero remainder is now strictly smaller than the pivot
                continue;
            }

            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&w.a[k][k])));
            match offender {
                Some(i) => w.add_row(k, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[k][k].is_negative() {
            w.negate_row(k);
        }
    }

    let invariant_factors = (0..diag).map(|i| w.a[i][i].clone()).collect();
    let to_matrix = |rows: Vec<Vec<BigInt>>| {
        if rows.is_empty() {
            IntMatrix::empty()
        } else {
            IntMatrix::from_rows(&rows).expect("rectangular by construction")
        }
    };
    SmithDecomposition {
        form: SmithForm { invariant_factors },
        left: to_matrix(w.u),
        right: to_matrix(w.v),
    }
}
