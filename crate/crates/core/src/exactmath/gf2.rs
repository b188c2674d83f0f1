use std::fmt;

use num_integer::Integer;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

const WORD: usize = 64;

/// Packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Matrix over GF(2), stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(BitMatrix {
            cols,
            rows: rows.iter().map(|r| BitVector::from_bools(r)).collect(),
        })
    }

    /// Reduction mod 2 of an integer matrix.
    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        let mut b = BitMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                b.set(i, j, m.get(i, j).is_odd());
            }
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn diagonal(&self) -> BitVector {
        let n = self.rows().min(self.cols);
        BitVector::from_bools(&(0..n).map(|i| self.get(i, i)).collect::<Vec<_>>())
    }

    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        BitVector::from_bools(&self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }
}

/// Solution set `particular + span(kernel)` of a GF(2) linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: BitVector,
    pub kernel: Vec<BitVector>,
}

impl AffineSolution {
    /// Number of solutions, `2^dim(kernel)`.
    pub fn count(&self) -> u128 {
        1u128 << self.kernel.len()
    }

    /// Every solution, enumerated by the binary counter over the kernel basis.
    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        let k = self.kernel.len();
        assert!(k < 64, "solution set too large to enumerate");
        (0u64..1 << k).map(move |c| {
            let mut x = self.particular.clone();
            for (i, b) in self.kernel.iter().enumerate() {
                if c >> i & 1 == 1 {
                    x.xor_assign(b);
                }
            }
            x
        })
    }
}

/// Solves `a·x = b` over GF(2) by Gauss-Jordan elimination.
pub fn solve_gf2(a: &BitMatrix, b: &BitVector) -> Result<AffineSolution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut rows: Vec<(BitVector, bool)> = a
        .rows
        .iter()
        .cloned()
        .zip((0..b.len()).map(|i| b.get(i)))
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0.get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let (pivot_row, pivot_rhs) = rows[r].clone();
        for (i, (row, rhs)) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
                *rhs ^= pivot_rhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, rhs)| *rhs) {
        return Err(Error::Unsolvable);
    }

    let mut particular = BitVector::zeros(n);
    for (i, &c) in pivots.iter().enumerate() {
        particular.set(c, rows[i].1);
    }
    let free = (0..n).filter(|c| !pivots.contains(c));
    let kernel = free
        .map(|f| {
            let mut v = BitVector::zeros(n);
            v.set(f, true);
            for (i, &c) in pivots.iter().enumerate() {
                v.set(c, rows[i].0.get(f));
            }
            v
        })
        .collect();
    Ok(AffineSolution { particular, kernel })
}
