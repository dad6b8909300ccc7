//! Dense univariate polynomials over F_p.
//!
//! Coefficients are kept in ascending order of degree with no trailing zeros;
//! the zero polynomial is the empty vector. Besides ring arithmetic this
//! module provides extended gcds, squarefreeness, factorization by trial
//! division, and quadratic residue symbols in residue fields F_p[x]/(P).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::{FieldElement, PrimeField};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from raw representatives, trimming trailing zeros.
    pub(crate) fn from_raw(field: PrimeField, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Coefficients in ascending order of degree, reduced mod p.
    pub fn from_coeffs(field: PrimeField, coeffs: &[i64]) -> Self {
        let raw = coeffs.iter().map(|&c| field.elem(c).value()).collect();
        Self::from_raw(field, raw)
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_raw(c.field(), vec![c.value()])
    }

    /// The monomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::from_raw(field, vec![0, 1])
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c.value();
        Self::from_raw(c.field(), coeffs)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Raw coefficient representatives, ascending.
    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing in for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.elem(self.coeffs.get(i).copied().unwrap_or(0) as i64)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> FieldElement {
        self.field.elem(self.coeffs.last().copied().unwrap_or(0) as i64)
    }

    fn check_field(&self, other: &Poly) {
        assert_eq!(
            self.field, other.field,
            "polynomials over different fields"
        );
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c.value())).collect())
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor);
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let f = self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lc = f.inv(divisor.coeffs[dd]);
        let mut quot = vec![0; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, inv_lc);
            quot[i - dd] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(q, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// `self / divisor`, or `None` unless the division is exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn eval(&self, at: FieldElement) -> FieldElement {
        let f = self.field;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, at.value()), c));
        f.elem(v as i64)
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.p()))
            .collect();
        Poly::from_raw(f, coeffs)
    }

    /// `(lc^{-1} * self, lc)`.
    pub fn monic(&self) -> Result<(Poly, FieldElement)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lc = self.lc();
        let inv = lc.inv().expect("nonzero leading coefficient");
        Ok((self.scale(inv), lc))
    }

    /// Extended gcd: `(d, s, t)` with `d` monic and `d = s*f + t*g`.
    pub fn xgcd(f: &Poly, g: &Poly) -> Result<(Poly, Poly, Poly)> {
        f.check_field(g);
        if f.is_zero() && g.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let field = f.field;
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().inv().expect("nonzero gcd");
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
        Ok(Self::xgcd(f, g)?.0)
    }

    /// `base^exp mod modulus`.
    pub fn powmod(base: &Poly, mut exp: u64, modulus: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(base.field).rem(modulus)?;
        let mut b = base.rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &b).rem(modulus)?;
            }
            b = (&b * &b).rem(modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::gcd(self, &self.derivative())?.is_one())
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let x = Poly::x(self.field);
        let mut frob = x.clone();
        for _ in 0..d / 2 {
            frob = Self::powmod(&frob, self.field.p(), self).expect("nonzero modulus");
            let g = Self::gcd(self, &(&frob - &x)).expect("nonzero modulus");
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Monic irreducible factors with multiplicities, sorted by degree and
    /// then by ascending-coefficient lexicographic order.
    pub fn factor(&self) -> Result<Vec<(Poly, u32)>> {
        match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::NoPrimeFactors),
            Some(_) => {}
        }
        let (mut rest, _) = self.monic()?;
        let mut factors = Vec::new();
        let mut d = 1;
        while 2 * d <= rest.deg() as usize {
            for candidate in monic_polys(self.field, d) {
                let mut mult = 0;
                while let Some(q) = rest.div_exact(&candidate)? {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((candidate, mult));
                }
                if 2 * d > rest.deg() as usize {
                    break;
                }
            }
            d += 1;
        }
        if rest.deg() >= 1 {
            factors.push((rest, 1));
        }
        factors.sort();
        Ok(factors)
    }

    /// Quadratic residue symbol of `v` in F_p[x]/(P): `0` if `P | v`, else
    /// `+1` or `-1` according as `v` is a square modulo `P`.
    ///
    /// Evaluates `v^((p^d - 1)/2)` as the Legendre symbol of the norm
    /// `v * v^p * ... * v^(p^(d-1))`, which lies in F_p.
    pub fn residue_symbol(v: &Poly, modulus: &Poly) -> Result<i8> {
        v.check_field(modulus);
        if !modulus.is_irreducible() {
            return Err(Error::ModulusNotPrime);
        }
        let (modulus, _) = modulus.monic()?;
        let r = v.rem(&modulus)?;
        if r.is_zero() {
            return Ok(0);
        }
        let field = v.field;
        let d = modulus.deg() as usize;
        let mut conj = r.clone();
        let mut norm = r;
        for _ in 1..d {
            conj = Self::powmod(&conj, field.p(), &modulus)?;
            norm = (&norm * &conj).rem(&modulus)?;
        }
        debug_assert!(norm.is_unit(), "norm must land in F_p");
        Ok(if norm.lc().is_square() { 1 } else { -1 })
    }
}

/// Monic polynomials of exact degree `d`, in ascending-coefficient
/// lexicographic order.
pub fn monic_polys(field: PrimeField, d: usize) -> impl Iterator<Item = Poly> {
    let p = field.p();
    let count = p.checked_pow(d as u32).expect("enumeration too large");
    (0..count).map(move |mut k| {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        for i in (0..d).rev() {
            coeffs[i] = k % p;
            k /= p;
        }
        Poly { field, coeffs }
    })
}

/// Every polynomial of degree `< d` (the zero polynomial included), in the
/// canonical `Ord` order.
pub fn polys_below_degree(field: PrimeField, d: usize) -> Vec<Poly> {
    let p = field.p();
    let count = p.checked_pow(d as u32).expect("enumeration too large");
    let mut out: Vec<Poly> = (0..count)
        .map(|mut k| {
            let mut coeffs = vec![0; d];
            for c in coeffs.iter_mut() {
                *c = k % p;
                k /= p;
            }
            Poly::from_raw(field, coeffs)
        })
        .collect();
    out.sort();
    out
}

impl Ord for Poly {
    /// Degree first, then coefficients compared from the constant term up.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
            .then_with(|| self.field.cmp(&other.field))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    /// Descending powers, zero terms omitted, unit coefficients omitted except
    /// on the constant term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.field.p())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_raw(f, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                f.sub(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_raw(f, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_raw(f, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
