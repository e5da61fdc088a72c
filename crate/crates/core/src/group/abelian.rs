//! Finite abelian groups presented as `Z^rank / L` for a full-rank relation
//! lattice `L`. Elements are canonical coset representatives obtained by
//! reducing against the Hermite normal form of `L`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Lattice {
    rank: usize,
    /// Upper triangular basis with positive pivots on the diagonal; entries
    /// above a pivot lie in `[0, pivot)`.
    hnf: Vec<Vec<i64>>,
}

impl Lattice {
    pub(crate) fn new(rank: usize, relations: &[Vec<i64>]) -> Result<Self> {
        if rank == 0 {
            return Ok(Self { rank, hnf: Vec::new() });
        }
        for (i, r) in relations.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::InvalidSpec(format!(
                    "relation {i} has length {} but the rank is {rank}",
                    r.len()
                )));
            }
        }
        let mut rows: Vec<Vec<i64>> = relations.to_vec();
        let mut hnf = Vec::with_capacity(rank);
        for col in 0..rank {
            // Euclid on column `col` across the remaining rows.
            loop {
                rows.retain(|r| r.iter().any(|&x| x != 0));
                let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let pivot = *nonzero
                    .iter()
                    .min_by_key(|&&i| rows[i][col].abs())
                    .expect("nonempty");
                let p = rows[pivot].clone();
                for &i in &nonzero {
                    if i != pivot {
                        let q = rows[i][col].div_euclid(p[col]);
                        for j in 0..rank {
                            rows[i][j] -= q * p[j];
                        }
                    }
                }
            }
            let Some(pos) = rows.iter().position(|r| r[col] != 0) else {
                return Err(Error::InvalidSpec(format!(
                    "relations do not have full rank: generator {col} has infinite order"
                )));
            };
            let mut row = rows.swap_remove(pos);
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            hnf.push(row);
        }
        // Reduce entries above the pivots.
        for col in 0..rank {
            let pivot_row = hnf[col].clone();
            for upper in hnf.iter_mut().take(col) {
                let q = upper[col].div_euclid(pivot_row[col]);
                if q != 0 {
                    for j in 0..rank {
                        upper[j] -= q * pivot_row[j];
                    }
                }
            }
        }
        Ok(Self { rank, hnf })
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn basis(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// Index of the lattice, i.e. the order of `Z^rank / L`.
    pub(crate) fn index(&self) -> u128 {
        self.hnf.iter().enumerate().map(|(i, r)| r[i] as u128).product()
    }

    pub(crate) fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for (i, row) in self.hnf.iter().enumerate() {
            let q = v[i].div_euclid(row[i]);
            if q != 0 {
                for j in i..self.rank {
                    v[j] -= q * row[j];
                }
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub(crate) fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&sum)
    }

    pub(crate) fn unit(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.reduce(&v)
    }

    /// Applies the integer matrix whose row `j` is the image of generator `j`.
    pub(crate) fn apply(&self, rows: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.rank];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(&rows[j]) {
                    *o += c * x;
                }
            }
        }
        self.reduce(&out)
    }
}
