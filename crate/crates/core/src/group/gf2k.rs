//! Arithmetic in GF(2^k) for `1 <= k <= 8` and square matrices over it.
//!
//! Field elements are bytes holding polynomial-basis coordinates; the field
//! modulus is the Conway polynomial of the given degree, so `x` (byte `2`)
//! is a primitive element.

use crate::error::{Error, Result};

/// Conway polynomials for GF(2^k), bit `i` = coefficient of `x^i`.
const CONWAY: [u16; 9] = [
    0,
    0b11,
    0b111,
    0b1011,
    0b10011,
    0b100101,
    0b1011011,
    0b10000011,
    0b100011101,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2k {
    degree: u32,
    exp: Vec<u8>,
    log: Vec<u8>,
}

impl Gf2k {
    pub fn new(degree: u32) -> Result<Self> {
        if !(1..=8).contains(&degree) {
            return Err(Error::InvalidSpec(format!(
                "GF(2^{degree}) is not supported (degree must be 1..=8)"
            )));
        }
        let size = 1usize << degree;
        let modulus = CONWAY[degree as usize];
        let mut exp = vec![0u8; 2 * size];
        let mut log = vec![0u8; size];
        let mut x: u16 = 1;
        for i in 0..size - 1 {
            exp[i] = x as u8;
            log[x as usize] = i as u8;
            x <<= 1;
            if x & (1 << degree) != 0 {
                x ^= modulus;
            }
        }
        for i in size - 1..2 * size {
            exp[i] = exp[i - (size - 1)];
        }
        Ok(Self { degree, exp, log })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        1 << self.degree
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.exp[(self.size() - 1 - self.log[a as usize] as usize) % (self.size() - 1)])
    }

    pub fn pow(&self, a: u8, k: u32) -> u8 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as usize * k as usize) % (self.size() - 1);
        self.exp[e]
    }

    pub fn contains(&self, a: u8) -> bool {
        (a as usize) < self.size()
    }

    /// Product of two `dim x dim` row-major matrices.
    pub fn mat_mul(&self, dim: usize, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut c = vec![0u8; dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = a[i * dim + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..dim {
                    c[i * dim + j] ^= self.mul(aik, b[k * dim + j]);
                }
            }
        }
        c
    }

    /// Whether a square matrix is invertible (Gaussian elimination).
    pub fn is_invertible(&self, dim: usize, m: &[u8]) -> bool {
        let mut a = m.to_vec();
        for col in 0..dim {
            let Some(pivot) = (col..dim).find(|&r| a[r * dim + col] != 0) else {
                return false;
            };
            if pivot != col {
                for j in 0..dim {
                    a.swap(pivot * dim + j, col * dim + j);
                }
            }
            let inv = self.inv(a[col * dim + col]).expect("pivot is nonzero");
            for r in col + 1..dim {
                let factor = self.mul(a[r * dim + col], inv);
                if factor != 0 {
                    for j in col..dim {
                        a[r * dim + j] ^= self.mul(factor, a[col * dim + j]);
                    }
                }
            }
        }
        true
    }

    pub fn identity_matrix(dim: usize) -> Vec<u8> {
        let mut m = vec![0u8; dim * dim];
        for i in 0..dim {
            m[i * dim + i] = 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_multiplication_matches_polynomial_reduction() {
        // Independent carry-less multiply reduced by x^3 + x + 1.
        fn slow(a: u8, b: u8) -> u8 {
            let mut r: u16 = 0;
            for i in 0..3 {
                if b >> i & 1 == 1 {
                    r ^= (a as u16) << i;
                }
            }
            for bit in (3..5).rev() {
                if r >> bit & 1 == 1 {
                    r ^= 0b1011 << (bit - 3);
                }
            }
            r as u8
        }
        let f = Gf2k::new(3).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f.mul(a, b), slow(a, b), "{a} * {b}");
            }
        }
    }

    #[test]
    fn every_nonzero_element_has_an_inverse() {
        for k in 1..=8 {
            let f = Gf2k::new(k).unwrap();
            for a in 1..f.size() {
                let a = a as u8;
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "k={k} a={a}");
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn frobenius_cube_is_identity_in_gf8() {
        let f = Gf2k::new(3).unwrap();
        for a in 0..8u8 {
            assert_eq!(f.pow(a, 8), a);
        }
    }

    #[test]
    fn invertibility() {
        let f = Gf2k::new(3).unwrap();
        assert!(f.is_invertible(2, &[1, 2, 0, 1]));
        assert!(!f.is_invertible(2, &[1, 2, 2, 4]));
        assert!(!f.is_invertible(2, &[0, 0, 0, 1]));
    }

    #[test]
    fn rejects_unsupported_degree() {
        assert!(Gf2k::new(0).is_err());
        assert!(Gf2k::new(9).is_err());
    }
}
