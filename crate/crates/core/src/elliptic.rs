//! Elliptic curves `y^2 = alpha(x)` with `alpha` a monic squarefree cubic,
//! their points over F_p, and the isomorphism onto the ideal class group.
//!
//! `alpha` may carry an `x^2` term (curves over F_3 cannot be depressed), so
//! the chord-tangent formulas include it: `x3 = l^2 - a2 - x1 - x2`.

use std::collections::HashSet;
use std::fmt;

use crate::classgroup::ClassGroupTable;
use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::ff::{FieldElement, PrimeField};
use crate::ideal::MumfordIdeal;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    disc: Discriminant,
}

/// A projective point `(A : B : C)`, normalized so that `C = 1` or the
/// point is `(0 : 1 : 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    x: FieldElement,
    y: FieldElement,
    z: FieldElement,
}

impl ProjPoint {
    /// Normalizes `(a : b : c)`; `None` for `(0 : 0 : 0)`.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Option<Self> {
        let scale = if !c.is_zero() {
            c
        } else if !b.is_zero() {
            b
        } else if !a.is_zero() {
            a
        } else {
            return None;
        };
        let inv = scale.inv().expect("nonzero");
        Some(ProjPoint {
            x: a * inv,
            y: b * inv,
            z: c * inv,
        })
    }

    pub fn infinity(field: PrimeField) -> Self {
        ProjPoint {
            x: field.zero(),
            y: field.one(),
            z: field.zero(),
        }
    }

    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        ProjPoint {
            x,
            y,
            z: x.field().one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.z.is_zero()
    }

    pub fn coords(&self) -> (FieldElement, FieldElement, FieldElement) {
        (self.x, self.y, self.z)
    }

    pub fn to_affine(&self) -> Option<(FieldElement, FieldElement)> {
        (!self.is_infinity()).then_some((self.x, self.y))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub num_points: usize,
    pub class_number: usize,
    pub hasse_ok: bool,
    pub bijective: bool,
    pub pairs_checked: usize,
    pub invariant_factors: Vec<u64>,
    pub violations: Vec<String>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.hasse_ok && self.bijective && self.violations.is_empty()
    }
}

impl EllipticCurve {
    pub fn new(disc: &Discriminant) -> Result<Self> {
        if disc.degree() != 3 {
            return Err(Error::NotCubic);
        }
        Ok(EllipticCurve { disc: disc.clone() })
    }

    pub fn field(&self) -> PrimeField {
        self.disc.field()
    }

    pub fn alpha(&self) -> &Poly {
        self.disc.alpha()
    }

    pub fn disc(&self) -> &Discriminant {
        &self.disc
    }

    /// `B^2 C = A^3 + a2 A^2 C + a1 A C^2 + a0 C^3`.
    pub fn on_curve(&self, pt: &ProjPoint) -> bool {
        if pt.x.field() != self.field() {
            return false;
        }
        let (a, b, c) = pt.coords();
        let rhs = (0..=3).fold(self.field().zero(), |acc, i| {
            acc + self.alpha().coeff(i) * a.pow(i as u64) * c.pow(3 - i as u64)
        });
        b * b * c == rhs
    }

    pub fn add(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
        if !self.on_curve(p) || !self.on_curve(q) {
            return Err(Error::NotOnCurve);
        }
        let (Some((x1, y1)), Some((x2, y2))) = (p.to_affine(), q.to_affine()) else {
            return Ok(if p.is_infinity() { *q } else { *p });
        };
        let field = self.field();
        let slope = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == -y2 {
            // Vertical chord, including tangents at 2-torsion points.
            return Ok(ProjPoint::infinity(field));
        } else {
            self.alpha().derivative().eval(x1) / (field.elem(2) * y1)
        };
        let a2 = self.alpha().coeff(2);
        let x3 = slope * slope - a2 - x1 - x2;
        let y3 = slope * (x1 - x3) - y1;
        Ok(ProjPoint::affine(x3, y3))
    }

    pub fn neg(&self, p: &ProjPoint) -> ProjPoint {
        match p.to_affine() {
            Some((x, y)) => ProjPoint::affine(x, -y),
            None => *p,
        }
    }

    /// Infinity first, then affine points by `x`, smaller `y` first.
    pub fn enumerate(&self) -> Vec<ProjPoint> {
        let field = self.field();
        let mut points = vec![ProjPoint::infinity(field)];
        for x in field.elements() {
            if let Some(y) = self.alpha().eval(x).sqrt() {
                points.push(ProjPoint::affine(x, y));
                if !y.is_zero() {
                    points.push(ProjPoint::affine(x, -y));
                }
            }
        }
        points
    }

    /// `infinity -> (1; 0)`, `(x0, y0) -> (x - x0; y0)`.
    pub fn point_to_class(&self, pt: &ProjPoint) -> Result<MumfordIdeal> {
        if !self.on_curve(pt) {
            return Err(Error::NotOnCurve);
        }
        Ok(match pt.to_affine() {
            None => MumfordIdeal::identity(&self.disc),
            Some((x0, y0)) => {
                let u = &Poly::x(self.field()) - &Poly::constant(x0);
                MumfordIdeal::from_parts(u, Poly::constant(y0), &self.disc)
            }
        })
    }

    /// Order of a point under the chord-tangent law.
    pub fn point_order(&self, pt: &ProjPoint) -> Result<u64> {
        let mut acc = *pt;
        let mut n = 1;
        while !acc.is_infinity() {
            acc = self.add(&acc, pt)?;
            n += 1;
        }
        Ok(n)
    }

    /// Checks that the point map is a bijection onto the class group and a
    /// homomorphism on every pair of points.
    pub fn verify_isomorphism(&self) -> Result<IsomorphismReport> {
        let table = ClassGroupTable::enumerate(&self.disc)?;
        self.verify_against(&table)
    }

    pub fn verify_against(&self, table: &ClassGroupTable) -> Result<IsomorphismReport> {
        let points = self.enumerate();
        let p = self.field().p() as i64;
        let trace = points.len() as i64 - (p + 1);
        let hasse_ok = trace * trace <= 4 * p;
        let mut violations = Vec::new();

        let mut images = Vec::with_capacity(points.len());
        for pt in &points {
            let class = self.point_to_class(pt)?;
            if !class.is_valid() || !class.is_reduced() {
                violations.push(format!("{pt} maps to invalid ideal {class}"));
            }
            if table.index_of(&class).is_none() {
                violations.push(format!("{pt} maps to {class}, not in the class table"));
            }
            images.push(class);
        }
        let distinct: HashSet<&MumfordIdeal> = images.iter().collect();
        let bijective = distinct.len() == points.len()
            && points.len() == table.class_number()
            && images.iter().all(|c| table.index_of(c).is_some());

        let mut pairs_checked = 0;
        for (i, p1) in points.iter().enumerate() {
            for (j, p2) in points.iter().enumerate() {
                let sum = self.add(p1, p2)?;
                if !self.on_curve(&sum) {
                    violations.push(format!("{p1} + {p2} = {sum} is off the curve"));
                    continue;
                }
                let lhs = self.point_to_class(&sum)?;
                let rhs = images[i].compose(&images[j])?;
                if lhs != rhs {
                    violations.push(format!(
                        "class({p1} + {p2}) = {lhs} but class({p1}) * class({p2}) = {rhs}"
                    ));
                }
                pairs_checked += 1;
            }
        }
        Ok(IsomorphismReport {
            num_points: points.len(),
            class_number: table.class_number(),
            hasse_ok,
            bijective,
            pairs_checked,
            invariant_factors: table.invariant_factors().to_vec(),
            violations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn curve(p: u64, alpha: &[i64]) -> EllipticCurve {
        let d = Discriminant::new(Poly::from_coeffs(field(p), alpha)).unwrap();
        EllipticCurve::new(&d).unwrap()
    }

    fn pt(p: u64, x: i64, y: i64) -> ProjPoint {
        ProjPoint::affine(field(p).elem(x), field(p).elem(y))
    }

    #[test]
    fn on_curve_examples() {
        let e1 = curve(3, &[1, 1, 0, 1]);
        assert!(e1.on_curve(&pt(3, 1, 0)));
        assert!(e1.on_curve(&ProjPoint::infinity(field(3))));
        let e2 = curve(5, &[0, 1, 0, 1]);
        assert!(!e2.on_curve(&pt(5, 0, 1)));
        // Unnormalized input (1 : 0 : 2) is the affine point (3, 0).
        let f5 = field(5);
        let p = ProjPoint::new(f5.elem(1), f5.elem(0), f5.elem(2)).unwrap();
        assert_eq!(p, pt(5, 3, 0));
        assert!(e2.on_curve(&p));
        assert!(ProjPoint::new(f5.zero(), f5.zero(), f5.zero()).is_none());
        assert_eq!(
            ProjPoint::new(f5.zero(), f5.elem(3), f5.zero()).unwrap(),
            ProjPoint::infinity(f5)
        );
    }

    #[test]
    fn add_examples() {
        let e = curve(3, &[1, 1, 0, 1]);
        let inf = ProjPoint::infinity(field(3));
        assert_eq!(e.add(&pt(3, 0, 2), &pt(3, 0, 1)).unwrap(), inf);
        assert_eq!(e.add(&pt(3, 0, 2), &pt(3, 0, 2)).unwrap(), pt(3, 1, 0));
        assert_eq!(e.add(&pt(3, 0, 2), &inf).unwrap(), pt(3, 0, 2));
        assert_eq!(e.add(&pt(3, 2, 2), &inf), Err(Error::NotOnCurve));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(curve(3, &[1, 1, 0, 1]).enumerate().len(), 4);
        assert_eq!(curve(5, &[0, 1, 0, 1]).enumerate().len(), 4);
        let n = curve(3, &[2, 2, 0, 1]).enumerate().len();
        assert!((1..=7).contains(&n));
    }

    #[test]
    fn point_to_class_examples() {
        let e = curve(3, &[1, 1, 0, 1]);
        let c = e.point_to_class(&pt(3, 1, 0)).unwrap();
        assert_eq!(c.to_literal(), "x+2;0");
        assert_eq!(c.to_form().to_literal(), "x+2,0,2x^2+2x+1");
        let inf = e.point_to_class(&ProjPoint::infinity(field(3))).unwrap();
        assert_eq!(inf.to_form().to_literal(), "1,0,2x^3+2x+2");
        let e2 = curve(5, &[0, 1, 0, 1]);
        let c2 = e2.point_to_class(&pt(5, 0, 0)).unwrap();
        assert_eq!(c2.to_form().to_literal(), "x,0,4x^2+4");
        assert_eq!(e2.point_to_class(&pt(5, 0, 1)), Err(Error::NotOnCurve));
    }

    #[test]
    fn isomorphism_examples() {
        let r1 = curve(3, &[1, 1, 0, 1]).verify_isomorphism().unwrap();
        assert!(r1.passed(), "{r1:?}");
        assert_eq!(r1.invariant_factors, [4]);
        let r2 = curve(5, &[0, 1, 0, 1]).verify_isomorphism().unwrap();
        assert!(r2.passed(), "{r2:?}");
        assert_eq!(r2.invariant_factors, [2, 2]);
    }

    #[test]
    fn curve_with_quadratic_term() {
        // x^3 + x^2 + 1 over F_3 needs the a2 term in the addition law.
        let e = curve(3, &[1, 0, 1, 1]);
        assert!(e.verify_isomorphism().unwrap().passed());
    }

    #[test]
    fn group_axioms_exhaustive_small() {
        for p in [3u64, 5, 7] {
            for alpha in crate::poly::monic_polys(field(p), 3) {
                let Ok(d) = Discriminant::new(alpha) else { continue };
                let e = EllipticCurve::new(&d).unwrap();
                let pts = e.enumerate();
                let inf = ProjPoint::infinity(field(p));
                for a in &pts {
                    assert_eq!(e.add(a, &inf).unwrap(), *a);
                    assert_eq!(e.add(a, &e.neg(a)).unwrap(), inf);
                    for b in &pts {
                        let ab = e.add(a, b).unwrap();
                        assert_eq!(ab, e.add(b, a).unwrap());
                        for c in &pts {
                            assert_eq!(
                                e.add(&ab, c).unwrap(),
                                e.add(a, &e.add(b, c).unwrap()).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_cubics() {
        let d = Discriminant::new(Poly::from_coeffs(field(3), &[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(EllipticCurve::new(&d), Err(Error::NotCubic));
    }
}
