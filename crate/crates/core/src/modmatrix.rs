//! Dense matrices over `F_p` with rank by Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::primes::require_prime;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>, // row-major, every entry in [0, p)
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<Self> {
        require_prime(p)?;
        let p = u32::try_from(p).map_err(|_| Error::PrimeTooLarge(p))?;
        Ok(ModMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        })
    }

    /// Builds from signed integers, reducing each entry mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m[(r, c)] = v.rem_euclid(p as i64) as u32;
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Adds `v` (any residue) to entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: u32) {
        let p = self.p as u64;
        let slot = &mut self[(r, c)];
        *slot = ((*slot as u64 + v as u64) % p) as u32;
    }

    pub fn rank(&self) -> usize {
        self.clone().into_rank()
    }

    /// Row-echelon reduction in place. The pivot in each column is the first
    /// row at or below the current one holding a nonzero entry.
    pub fn into_rank(mut self) -> usize {
        let p = self.p as u64;
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| self.entries[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in col..cols {
                    self.entries.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = inverse_mod(self.entries[rank * cols + col] as u64, p);
            for c in col..cols {
                let e = &mut self.entries[rank * cols + c];
                *e = (*e as u64 * inv % p) as u32;
            }
            let (head, tail) = self.entries.split_at_mut((rank + 1) * cols);
            let pivot_row = &head[rank * cols..];
            for row in tail.chunks_exact_mut(cols) {
                let factor = row[col] as u64;
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for c in col..cols {
                    if pivot_row[c] != 0 {
                        row[c] = ((row[c] as u64 + neg * pivot_row[c] as u64) % p) as u32;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Index<(usize, usize)> for ModMatrix {
    type Output = u32;

    fn index(&self, (r, c): (usize, usize)) -> &u32 {
        assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ModMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u32 {
        assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime, by Fermat.
pub(crate) fn inverse_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}
