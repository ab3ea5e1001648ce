//! Integer helpers and the `q = p^d` parameter set shared by every module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime `p` together with a power `q = p^d`, `d >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesParams {
    pub p: u64,
    pub d: u32,
    pub q: u64,
}

impl SeriesParams {
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(Error::InvalidParams("exponent d must be positive".into()));
        }
        let q = p
            .checked_pow(d)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParams(format!("{p}^{d} is too large")))?;
        Ok(Self { p, d, q })
    }

    /// Decompose a prime power `q`.
    pub fn from_q(q: u64) -> Result<Self> {
        let (p, d) = prime_power_decomposition(q)
            .ok_or_else(|| Error::InvalidParams(format!("{q} is not a prime power")))?;
        Self::new(p, d)
    }

    pub fn ring(&self) -> Zq {
        Zq::new(*self)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Returns `(p, d)` with `n = p^d`, or `None` if `n` is not a prime power.
pub fn prime_power_decomposition(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut d = 0;
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    (m == 1).then_some((p, d))
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return k;
        }
        k += 1;
    }
    n
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Möbius function by trial division.
pub fn mobius(n: u64) -> i64 {
    let mut m = n;
    let mut k = 2u64;
    let mut sign = 1;
    while k * k <= m {
        if m % k == 0 {
            m /= k;
            if m % k == 0 {
                return 0;
            }
            sign = -sign;
        }
        k += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Reduce a signed integer into `[0, m)`.
pub fn rem(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// The ring `Z/q` for `q = p^d`. Values are kept in `[0, q)` as `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zq {
    pub params: SeriesParams,
    q: u32,
}

impl Zq {
    pub fn new(params: SeriesParams) -> Self {
        Self {
            params,
            q: params.q as u32,
        }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + self.q as u64 - b as u64;
        (s % self.q as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.q as u64) as u32
    }

    pub fn from_i128(&self, x: i128) -> u32 {
        rem(x, self.q as u64) as u32
    }

    /// `p`-adic valuation of a nonzero element, `d` for zero.
    pub fn valuation(&self, a: u32) -> u32 {
        if a == 0 {
            return self.params.d;
        }
        let p = self.params.p as u32;
        let mut v = 0;
        let mut x = a;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, a: u32) -> bool {
        a % self.params.p as u32 != 0
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        let (g, x, _) = ext_gcd(a as i64, self.q as i64);
        (g == 1).then(|| rem(x as i128, self.q as u64) as u32)
    }

    /// `p^k` as an element, `0` once `k >= d`.
    pub fn p_pow(&self, k: u32) -> u32 {
        if k >= self.params.d {
            0
        } else {
            self.params.p.pow(k) as u32
        }
    }

    /// Additive order of an element.
    pub fn order(&self, a: u32) -> u32 {
        self.q / gcd(a as u64, self.q as u64) as u32
    }
}

pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
