use super::modular::is_prime;
use super::tables::PRIMITIVE_POLYNOMIALS;
use crate::{Error, Result};

/// Largest field order supported by [`gf_table`].
pub const FIELD_ORDER_CEILING: u32 = 1 << 16;

/// Log/antilog tables for GF(p^n).
///
/// An element is the integer `c[0] + c[1] p + ... + c[n-1] p^(n-1)` of its
/// coefficient vector in the polynomial basis, so `0` is the zero element and
/// `1` the identity. The tables are built from a fixed primitive polynomial
/// and never change afterwards.
#[derive(Debug, Clone)]
pub struct FieldTable {
    p: u32,
    n: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Builds the field GF(p^n) from the built-in primitive polynomial table.
pub fn gf_table(p: u32, n: u32) -> Result<FieldTable> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let unsupported = Error::UnsupportedField { p: p as u64, n };
    let q = (p as u64).checked_pow(n).ok_or_else(|| unsupported.clone())?;
    if n == 0 || q > FIELD_ORDER_CEILING as u64 {
        return Err(unsupported);
    }
    let tail = PRIMITIVE_POLYNOMIALS
        .iter()
        .find(|(tp, tn, _)| *tp == p && *tn == n)
        .map(|(_, _, c)| *c)
        .ok_or(unsupported)?;
    FieldTable::from_polynomial(p, n, tail)
}

impl FieldTable {
    fn from_polynomial(p: u32, n: u32, tail: &[u32]) -> Result<Self> {
        let q = p.pow(n);
        let n_us = n as usize;
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut coeffs = vec![0u32; n_us];
        coeffs[0] = 1;
        for i in 0..q - 1 {
            let value = encode(&coeffs, p);
            if log[value as usize] != u32::MAX {
                return Err(Error::Internal(format!(
                    "polynomial for GF({p}^{n}) is not primitive"
                )));
            }
            log[value as usize] = i;
            exp.push(value);
            // multiply by x, reducing x^n = -sum tail[j] x^j
            let top = coeffs[n_us - 1];
            coeffs.rotate_right(1);
            coeffs[0] = 0;
            for (c, t) in coeffs.iter_mut().zip(tail) {
                *c = (*c + (p - (top * t) % p)) % p;
            }
        }
        if encode(&coeffs, p) != 1 {
            return Err(Error::Internal(format!(
                "polynomial for GF({p}^{n}) is not primitive"
            )));
        }
        Ok(Self { p, n, q, exp, log })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn primitive_element(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// `g^i` for the primitive element `g`; the exponent is taken mod `q - 1`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base the primitive element; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        match self.log[a as usize] {
            u32::MAX => None,
            l => Some(l),
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp(s)
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        Some(self.exp((self.q as u64 - 1 - l as u64) % (self.q as u64 - 1)))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        match (a, e) {
            (_, 0) => 1,
            (0, _) => 0,
            _ => self.exp(self.log[a as usize] as u64 * e),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        let l = self.log(a)? as u64;
        let m = self.q as u64 - 1;
        Some((m / super::gcd(l, m)) as u32)
    }

    /// Elements of the subfield GF(p^d) for `d | n`, zero first.
    pub fn subfield(&self, d: u32) -> Option<Vec<u32>> {
        if d == 0 || self.n % d != 0 {
            return None;
        }
        let sub_q = self.p.pow(d);
        let step = (self.q as u64 - 1) / (sub_q as u64 - 1);
        let mut out = vec![0];
        out.extend((0..sub_q as u64 - 1).map(|i| self.exp(i * step)));
        Some(out)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digitwise(&self, mut a: u32, mut b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::prime_factors;

    fn field_axioms_hold(f: &FieldTable) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.exp(f.log(a).unwrap() as u64), a);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
        // associativity and distributivity on every triple is q^3; sample a
        // stride for the larger tables
        let stride = if q > 32 { 7 } else { 1 };
        for a in (0..q).step_by(stride) {
            for b in (0..q).step_by(stride) {
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for q in 2..=256u64 {
            if let Some((p, n)) = crate::algebra::prime_power(q) {
                let f = gf_table(p as u32, n).unwrap();
                field_axioms_hold(&f);
            }
        }
    }

    #[test]
    fn prime_field_generators() {
        assert_eq!(gf_table(2, 1).unwrap().primitive_element(), 1);
        assert_eq!(gf_table(3, 1).unwrap().primitive_element(), 2);
    }

    #[test]
    fn gf81_primitive_element_has_full_order() {
        let f = gf_table(3, 4).unwrap();
        let g = f.primitive_element();
        // repeated multiplication, independent of the log table
        let mut acc = 1;
        let mut order = 0;
        for i in 1..=80 {
            acc = f.mul(acc, g);
            if acc == 1 {
                order = i;
                break;
            }
        }
        assert_eq!(order, 80);
        for d in prime_factors(80) {
            assert_ne!(f.pow(g, 80 / d), 1);
        }
    }

    #[test]
    fn whole_table_is_primitive() {
        for (p, n, _) in PRIMITIVE_POLYNOMIALS.iter().filter(|(p, n, _)| p.pow(*n) <= 4096) {
            let f = gf_table(*p, *n).unwrap();
            assert_eq!(f.multiplicative_order(f.primitive_element()), Some(f.order() - 1));
        }
    }

    #[test]
    fn required_orders_present() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81, 121, 125, 169, 243, 343, 2401] {
            let (p, n) = crate::algebra::prime_power(q).unwrap();
            assert!(gf_table(p as u32, n).is_ok(), "GF({q}) missing");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(gf_table(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(gf_table(2, 17), Err(Error::UnsupportedField { .. })));
        assert!(matches!(gf_table(1009, 1), Err(Error::UnsupportedField { .. })));
    }

    #[test]
    fn subfield_is_closed() {
        let f = gf_table(3, 4).unwrap();
        let sub = f.subfield(2).unwrap();
        assert_eq!(sub.len(), 9);
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f.add(a, b)));
                assert!(sub.contains(&f.mul(a, b)));
            }
        }
    }
}
