//! Exact linear solving by fraction-free (Bareiss) elimination.
//!
//! Rows are scaled to integers, eliminated without fractions (every division
//! in the Bareiss recurrence is exact), and the triangular system is then
//! back-substituted over `Q`. Rank defects and inconsistent rows are
//! reported, never patched.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{denominator_lcm, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    /// The q-exponent each row was read from.
    pub provenance: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub values: Vec<Rational>,
    pub rank: usize,
}

struct Echelon {
    // augmented integer rows, pivots in the first `rank` rows
    rows: Vec<Vec<BigInt>>,
    // original index of each row
    perm: Vec<usize>,
    pivots: Vec<usize>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>, provenance: Vec<usize>) -> Self {
        assert_eq!(matrix.len(), rhs.len());
        assert_eq!(matrix.len(), provenance.len());
        let cols = matrix.first().map_or(0, Vec::len);
        assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
        LinearSystem {
            matrix,
            rhs,
            provenance,
        }
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn columns(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let den = denominator_lcm(row.iter().chain(std::iter::once(b)));
                row.iter()
                    .chain(std::iter::once(b))
                    .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    fn eliminate(&self) -> Echelon {
        let cols = self.columns();
        let mut rows = self.integer_rows();
        let mut perm: Vec<usize> = (0..rows.len()).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for k in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][k].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            perm.swap(rank, p);
            let (top, rest) = rows.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                for j in k + 1..=cols {
                    let v = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = rows[rank][k].clone();
            pivots.push(k);
            rank += 1;
        }
        Echelon { rows, perm, pivots }
    }

    pub fn rank(&self) -> usize {
        self.eliminate().pivots.len()
    }

    /// The unique solution, or an error naming why there is none.
    pub fn solve(&self) -> Result<Solution> {
        let cols = self.columns();
        let ech = self.eliminate();
        let rank = ech.pivots.len();
        // Rows past the rank are zero on the left; a nonzero right side is a contradiction.
        for i in rank..ech.rows.len() {
            if !ech.rows[i][cols].is_zero() {
                let row = ech.perm[i];
                return Err(Error::Inconsistent {
                    row,
                    exponent: self.provenance[row],
                });
            }
        }
        if rank < cols {
            return Err(Error::RankDeficient { rank, columns: cols });
        }
        let mut values = vec![Rational::zero(); cols];
        for k in (0..cols).rev() {
            let row = &ech.rows[k];
            let mut acc = Rational::from_integer(row[cols].clone());
            for j in k + 1..cols {
                acc -= Rational::from_integer(row[j].clone()) * &values[j];
            }
            values[k] = acc / Rational::from_integer(row[k].clone());
        }
        Ok(Solution { values, rank })
    }
}
