use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Arithmetic modulo a prime `p < 2^31`. Elements are canonical residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };
    pub const GF3: PrimeField = PrimeField { p: 3 };

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return invalid(format!("{p} is not prime"));
        }
        if p >= 1 << 31 {
            return invalid(format!("prime {p} too large"));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, u64::from(self.p) - 2)
    }

    /// Image of a signed integer.
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.p)) as u32
    }

    /// `+1` or `-1`.
    #[inline]
    pub fn sign(self, negative: bool) -> u32 {
        if negative {
            self.p - 1
        } else {
            1 % self.p
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::GF2
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
