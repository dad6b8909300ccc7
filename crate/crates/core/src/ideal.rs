//! Ideal classes of `O_K = F_p[x][sqrt(alpha)]` in Mumford form.
//!
//! The pair `(u, v)` stands for the ideal `(u, v - sqrt(alpha))` and is valid
//! when `u` is monic, `deg v < deg u` and `u | v^2 - alpha`. Products are
//! computed with Cantor's algorithm and brought back to the unique reduced
//! representative with `deg u <= g`.

use std::cmp::Ordering;
use std::fmt;

use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quadform::QuadForm;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MumfordIdeal {
    u: Poly,
    v: Poly,
    disc: Discriminant,
}

impl MumfordIdeal {
    /// A validated ideal.
    pub fn new(u: Poly, v: Poly, disc: &Discriminant) -> Result<Self> {
        let ideal = Self::from_parts(u, v, disc);
        if !ideal.is_valid() {
            return Err(ideal.invalid());
        }
        Ok(ideal)
    }

    /// No validity check; see [`MumfordIdeal::is_valid`].
    pub fn from_parts(u: Poly, v: Poly, disc: &Discriminant) -> Self {
        MumfordIdeal {
            u,
            v,
            disc: disc.clone(),
        }
    }

    /// The unit ideal `(1, 0)`.
    pub fn identity(disc: &Discriminant) -> Self {
        let f = disc.field();
        Self::from_parts(Poly::one(f), Poly::zero(f), disc)
    }

    fn invalid(&self) -> Error {
        Error::InvalidIdeal {
            u: self.u.to_string(),
            v: self.v.to_string(),
        }
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn v(&self) -> &Poly {
        &self.v
    }

    pub fn disc(&self) -> &Discriminant {
        &self.disc
    }

    /// `u` monic, `deg v < deg u`, `u | v^2 - alpha`.
    pub fn is_valid(&self) -> bool {
        let f = self.disc.field();
        if self.u.field() != f || self.v.field() != f {
            return false;
        }
        self.u.is_monic()
            && self.v.deg() < self.u.deg()
            && (&(&self.v * &self.v) - self.disc.alpha())
                .rem(&self.u)
                .map(|r| r.is_zero())
                .unwrap_or(false)
    }

    pub fn is_reduced(&self) -> bool {
        self.u.deg() as usize <= self.disc.genus()
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    /// Reduces a (not necessarily reduced) pair with `u` monic and
    /// `u | v^2 - alpha`.
    pub fn reduce(u: Poly, v: Poly, disc: &Discriminant) -> Result<MumfordIdeal> {
        let probe = Self::from_parts(u.clone(), v.clone(), disc);
        if !u.is_monic() || u.field() != disc.field() || v.field() != disc.field() {
            return Err(probe.invalid());
        }
        let alpha = disc.alpha();
        if !(&(&v * &v) - alpha).rem(&u)?.is_zero() {
            return Err(probe.invalid());
        }
        let g = disc.genus() as isize;
        let mut u = u;
        let mut v = v.rem(&u)?;
        while u.deg() > g {
            let next = (alpha - &(&v * &v))
                .div_exact(&u)?
                .expect("u divides alpha - v^2 throughout reduction");
            u = next.monic()?.0;
            v = (-&v).rem(&u)?;
        }
        Ok(Self::from_parts(u, v, disc))
    }

    /// The reduced representative of the product class.
    pub fn compose(&self, other: &MumfordIdeal) -> Result<MumfordIdeal> {
        if self.disc != other.disc {
            return Err(Error::AlphaMismatch);
        }
        for ideal in [self, other] {
            if !ideal.is_valid() {
                return Err(ideal.invalid());
            }
        }
        let (u1, v1, u2, v2) = (&self.u, &self.v, &other.u, &other.v);
        // d = c1 u1 + c2 u2 + c3 (v1 + v2), via two nested extended gcds.
        let (d0, e1, e2) = Poly::xgcd(u1, u2)?;
        let (d, k, c3) = Poly::xgcd(&d0, &(v1 + v2))?;
        let c1 = &k * &e1;
        let c2 = &k * &e2;
        let u3 = (u1 * u2)
            .div_exact(&(&d * &d))?
            .expect("d^2 divides u1 u2");
        let numerator = &(&(&c1 * u1) * v2) + &(&(&c2 * u2) * v1)
            + &c3 * &(&(v1 * v2) + self.disc.alpha());
        let v3 = numerator
            .div_exact(&d)?
            .expect("d divides the composed numerator")
            .rem(&u3)?;
        Self::reduce(u3, v3, &self.disc)
    }

    /// `(u, -v mod u)`.
    pub fn inverse(&self) -> MumfordIdeal {
        let v = (-&self.v).rem(&self.u).expect("u is monic");
        Self::from_parts(self.u.clone(), v, &self.disc)
    }

    pub fn pow(&self, mut n: u64) -> Result<MumfordIdeal> {
        let mut acc = Self::identity(&self.disc);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            base = base.compose(&base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Least `n >= 1` with `I^n = (1, 0)`, by repeated composition.
    pub fn order(&self) -> Result<u64> {
        let mut acc = Self::reduce(self.u.clone(), self.v.clone(), &self.disc)?;
        let step = acc.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.compose(&step)?;
            n += 1;
        }
        Ok(n)
    }

    /// `(u, 2v, (v^2 - alpha)/u)`, the form attached to the ideal.
    pub fn to_form(&self) -> QuadForm {
        let f = self.disc.field();
        let c = (&(&self.v * &self.v) - self.disc.alpha())
            .div_exact(&self.u)
            .expect("u is monic")
            .expect("valid ideal: u divides v^2 - alpha");
        QuadForm::new(self.u.clone(), self.v.scale(f.elem(2)), c)
    }

    /// Literal `u;v` as accepted by the command line.
    pub fn to_literal(&self) -> String {
        format!("{};{}", self.u, self.v)
    }
}

impl Ord for MumfordIdeal {
    /// By `deg u`, then `u`, then `v`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.u
            .cmp(&other.u)
            .then_with(|| self.v.cmp(&other.v))
            .then_with(|| self.disc.alpha().cmp(other.disc.alpha()))
    }
}

impl PartialOrd for MumfordIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MumfordIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.u, self.v)
    }
}

impl fmt::Debug for MumfordIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {:?}", self, self.disc)
    }
}
