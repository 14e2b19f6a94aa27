//! Arithmetic in the prime field `Z/pZ` with `p < 2^31`.

use crate::error::{Error, Result};

/// Default characteristic used when a session does not declare one.
pub const DEFAULT_PRIME: u32 = 32003;

/// A prime field. Elements are plain `u32` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, x: u32) -> i64 {
        if x > self.p / 2 {
            x as i64 - self.p as i64
        } else {
            x as i64
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero; callers only invert leading coefficients.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        self.from_i64(t)
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }
}
