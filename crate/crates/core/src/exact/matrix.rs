//! Dense matrices over the Gaussian rationals and their exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::exact::{Gaussian, Rational};

/// A dense row-major matrix with Gaussian-rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Gaussian>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Gaussian::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Gaussian::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gaussian>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Gaussian {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gaussian) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over the field of Gaussian rationals, computed exactly.
    ///
    /// Each row is first scaled to Gaussian-integer entries (row scaling does
    /// not change the rank); elimination then proceeds fraction-free in the
    /// Bareiss single-step scheme, dividing by the previous pivot, which is
    /// exact in Z[i]. Pivots are chosen with the smallest total bit size
    /// among the nonzero candidates in the pivot column.
    pub fn rank_exact(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<Zi>> = (0..self.rows)
            .map(|i| clear_row_denominators(&self.entries[i * self.cols..(i + 1) * self.cols]))
            .collect();
        let mut prev = Zi::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot_row = (rank..self.rows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].bits());
            let Some(p) = pivot_row else { continue };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &m[rank][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[rank][j]));
                    m[i][j] = num.div_exact(&prev);
                }
                m[i][col] = Zi::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| {
                Value::Array(
                    (0..self.cols)
                        .map(|j| Value::String(self.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }
}

/// Free-function form of [`ExactMatrix::rank_exact`].
pub fn rank_exact(m: &ExactMatrix) -> usize {
    m.rank_exact()
}

/// A Gaussian integer, used internally by the fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Zi {
    re: BigInt,
    im: BigInt,
}

impl Zi {
    fn zero() -> Self {
        Zi {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        Zi {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    fn bits(&self) -> u64 {
        self.re.bits() + self.im.bits()
    }

    fn mul(&self, o: &Zi) -> Zi {
        Zi {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Zi) -> Zi {
        Zi {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact division in Z[i]; the Bareiss scheme guarantees exactness.
    fn div_exact(&self, d: &Zi) -> Zi {
        if d.is_one() {
            return self.clone();
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&norm);
        let (qi, ri) = im.div_rem(&norm);
        debug_assert!(rr.is_zero() && ri.is_zero(), "inexact division in Z[i]");
        Zi { re: qr, im: qi }
    }
}

fn clear_row_denominators(row: &[Gaussian]) -> Vec<Zi> {
    let mut lcm = BigInt::one();
    for g in row {
        lcm = lcm.lcm(g.re.denom());
        lcm = lcm.lcm(g.im.denom());
    }
    let lcm = lcm.abs();
    let scaled = |r: &Rational| r.numer() * (&lcm / r.denom());
    row.iter()
        .map(|g| Zi {
            re: scaled(&g.re),
            im: scaled(&g.im),
        })
        .collect()
}
