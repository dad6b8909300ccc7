use std::fmt;

use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::poly::Poly;

/// A validated discriminant `alpha`: monic, squarefree, of odd degree
/// `2g + 1 >= 3`. The place at infinity ramifies in F_p(x)(sqrt(alpha)), so
/// every class has a unique reduced representative with `deg u <= g`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Discriminant {
    alpha: Poly,
    genus: usize,
}

impl Discriminant {
    pub fn new(alpha: Poly) -> Result<Self> {
        let deg = alpha.degree().ok_or(Error::ZeroPolynomial)?;
        if !alpha.is_monic() {
            return Err(Error::NotMonic);
        }
        if deg % 2 == 0 {
            return Err(Error::EvenDegree);
        }
        if deg < 3 {
            return Err(Error::DegreeTooSmall(3));
        }
        if !alpha.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        Ok(Discriminant {
            genus: (deg - 1) / 2,
            alpha,
        })
    }

    #[inline]
    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.alpha.field()
    }

    /// `g = (deg alpha - 1) / 2`, the bound on `deg u` for reduced ideals.
    #[inline]
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        2 * self.genus + 1
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha)
    }
}

impl fmt::Debug for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Discriminant({:?})", self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_coeffs(PrimeField::new(p).unwrap(), c)
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Discriminant::new(poly(3, &[])), Err(Error::ZeroPolynomial));
        assert_eq!(Discriminant::new(poly(3, &[1, 1, 0, 2])), Err(Error::NotMonic));
        assert_eq!(Discriminant::new(poly(3, &[1, 0, 1])), Err(Error::EvenDegree));
        assert_eq!(Discriminant::new(poly(3, &[1, 1])), Err(Error::DegreeTooSmall(3)));
        assert_eq!(Discriminant::new(poly(3, &[0, 0, 0, 1])), Err(Error::NotSquarefree));
        let d = Discriminant::new(poly(3, &[1, 1, 0, 1])).unwrap();
        assert_eq!(d.genus(), 1);
        assert_eq!(d.degree(), 3);
    }
}
