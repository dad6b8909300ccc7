//! Arithmetic in the prime field F_p for odd primes p < 2^31.
//!
//! Elements are stored as their canonical representative in `[0, p)`.
//! Products of two representatives fit in a `u64`, so no wide arithmetic is
//! needed anywhere.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Below this modulus square roots are found by exhaustion.
const EXHAUSTIVE_SQRT_LIMIT: u64 = 10_000;

/// The prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
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

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The element congruent to `v`.
    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement {
            value: v.rem_euclid(self.p as i64) as u64,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// All elements in increasing order of representative.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |value| FieldElement { value, field: *self })
    }

    /// Least representative in `[2, p)` that is a non-square.
    pub fn smallest_nonsquare(&self) -> FieldElement {
        self.elements()
            .skip(2)
            .find(|x| !x.is_square())
            .expect("every odd prime field has a non-square")
    }

    // Raw operations on canonical representatives, used by the polynomial
    // layer to avoid wrapping every coefficient.

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub(crate) fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero representative (Fermat).
    pub(crate) fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub(crate) fn is_square_raw(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement {
            value: self.field.pow(self.value, exp),
            field: self.field,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        (!self.is_zero()).then(|| FieldElement {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.field.is_square_raw(self.value)
    }

    /// A square root if one exists, choosing the smaller representative of `±y`.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if !self.is_square() {
            return None;
        }
        let p = self.field.p;
        let y = if p < EXHAUSTIVE_SQRT_LIMIT {
            (0..p).find(|&y| self.field.mul(y, y) == self.value)?
        } else {
            tonelli_shanks(self.field, self.value)
        };
        let other = self.field.neg(y);
        Some(FieldElement {
            value: y.min(other),
            field: self.field,
        })
    }
}

/// Tonelli-Shanks for a known nonzero-or-zero square `n` modulo an odd prime.
fn tonelli_shanks(field: PrimeField, n: u64) -> u64 {
    let p = field.p;
    if n == 0 {
        return 0;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = field.smallest_nonsquare().value;
    let mut m = s;
    let mut c = field.pow(z, q);
    let mut t = field.pow(n, q);
    let mut r = field.pow(n, q.div_ceil(2));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = field.mul(t2, t2);
            i += 1;
        }
        let b = field.pow(c, 1 << (m - i - 1));
        m = i;
        c = field.mul(b, b);
        t = field.mul(t, c);
        r = field.mul(r, b);
    }
    r
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, rhs.field);
        FieldElement {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, rhs.field);
        FieldElement {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, rhs.field);
        FieldElement {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: FieldElement) -> FieldElement {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        for p in [0, 1, 2, 4, 9, 15, 1 << 31] {
            assert_eq!(PrimeField::new(p), Err(Error::NotOddPrime(p)));
        }
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn is_square_examples() {
        assert!(f(3).elem(1).is_square());
        assert!(!f(3).elem(2).is_square());
        assert!(f(5).elem(4).is_square());
        assert!(f(7).elem(0).is_square());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(f(5).elem(4).sqrt(), Some(f(5).elem(2)));
        assert_eq!(f(3).elem(0).sqrt(), Some(f(3).elem(0)));
        assert_eq!(f(3).elem(2).sqrt(), None);
    }

    #[test]
    fn smallest_nonsquare_examples() {
        assert_eq!(f(3).smallest_nonsquare().value(), 2);
        assert_eq!(f(5).smallest_nonsquare().value(), 2);
        assert_eq!(f(7).smallest_nonsquare().value(), 3);
        assert_eq!(f(17).smallest_nonsquare().value(), 3);
    }

    #[test]
    fn square_counts_and_twist_for_small_primes() {
        for p in (3..100u64).filter(|&p| is_prime(p)) {
            let field = f(p);
            let squares: std::collections::HashSet<u64> =
                field.elements().map(|y| (y * y).value()).collect();
            let lambda = field.smallest_nonsquare();
            let nonzero_squares = field
                .elements()
                .skip(1)
                .filter(|x| x.is_square())
                .count() as u64;
            assert_eq!(nonzero_squares, (p - 1) / 2);
            for x in field.elements() {
                assert_eq!(x.is_square(), squares.contains(&x.value()));
                match x.sqrt() {
                    Some(y) => {
                        assert_eq!(y * y, x);
                        assert!(y.value() <= (-y).value());
                    }
                    None => assert!(!x.is_square()),
                }
                if !x.is_zero() {
                    assert_ne!(x.is_square(), (x * lambda).is_square());
                }
            }
        }
    }

    #[test]
    fn tonelli_shanks_large_prime() {
        // 1_000_000_007 - 1 = 2 * 500000003, and 998244353 has a high 2-adic part.
        for p in [10_007u64, 1_000_000_007, 998_244_353] {
            let field = f(p);
            for v in [2i64, 3, 5, 12345, 999_999] {
                let x = field.elem(v) * field.elem(v);
                let y = x.sqrt().unwrap();
                assert_eq!(y * y, x);
                assert!(y.value() <= (-y).value());
            }
            assert!(field.smallest_nonsquare().sqrt().is_none());
        }
    }

    #[test]
    fn arithmetic_identities() {
        let field = f(13);
        for a in field.elements() {
            assert_eq!(a + (-a), field.zero());
            if let Some(inv) = a.inv() {
                assert_eq!(a * inv, field.one());
                assert_eq!(field.one() / a, inv);
            }
        }
    }
}
