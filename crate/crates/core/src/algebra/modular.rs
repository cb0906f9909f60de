use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n` in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^n` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut n = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    Some((p, n))
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// The units of `Z_m` in increasing order.
pub fn units(m: u64) -> Vec<u64> {
    (1..m.max(2)).filter(|&u| gcd(u, m) == 1).collect()
}

/// The Chinese-remainder bijection `Z_x × Z_y → Z_xy` for coprime moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrtMap {
    x: u64,
    y: u64,
    // coefficients e_x ≡ (1 mod x, 0 mod y) and e_y ≡ (0 mod x, 1 mod y)
    e_x: u64,
    e_y: u64,
}

pub fn crt_map(x: u64, y: u64) -> Result<CrtMap> {
    if x == 0 || y == 0 || gcd(x, y) != 1 {
        return Err(Error::NotCoprime(x, y));
    }
    let xy = x * y;
    // y * (y^-1 mod x) is 1 mod x and 0 mod y.
    let e_x = (y as u128 * mod_inverse(y % x, x).unwrap_or(0) as u128 % xy as u128) as u64;
    let e_y = (x as u128 * mod_inverse(x % y, y).unwrap_or(0) as u128 % xy as u128) as u64;
    Ok(CrtMap { x, y, e_x, e_y })
}

impl CrtMap {
    pub fn modulus(&self) -> u64 {
        self.x * self.y
    }

    pub fn apply(&self, a: u64, b: u64) -> u64 {
        let m = self.modulus() as u128;
        (((a % self.x) as u128 * self.e_x as u128 + (b % self.y) as u128 * self.e_y as u128) % m)
            as u64
    }

    pub fn split(&self, z: u64) -> (u64, u64) {
        (z % self.x, z % self.y)
    }
}
