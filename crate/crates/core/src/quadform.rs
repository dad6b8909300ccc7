//! Binary quadratic forms `aX^2 + bXY + cY^2` over F_p[x].
//!
//! Forms are acted on from the right by 2x2 polynomial matrices,
//! `(q o A)(v) = q(A v)`. The quantity `b^2/4 - ac` (the negated determinant
//! of the Gram matrix) is what ties a form to a discriminant `alpha`: a
//! form belongs to `alpha` when `b^2/4 - ac = alpha` exactly.

use std::fmt;

use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::ff::{FieldElement, PrimeField};
use crate::ideal::MumfordIdeal;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
}

/// A 2x2 matrix over F_p[x], rows `[m00 m01; m10 m11]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m00: Poly,
    pub m01: Poly,
    pub m10: Poly,
    pub m11: Poly,
}

impl Mat2 {
    pub fn new(m00: Poly, m01: Poly, m10: Poly, m11: Poly) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    pub fn identity(field: PrimeField) -> Self {
        Self::diag(field.one(), field.one())
    }

    /// `(X, Y) -> (X + mY, Y)`.
    pub fn translation(m: Poly) -> Self {
        let f = m.field();
        Mat2::new(Poly::one(f), m, Poly::zero(f), Poly::one(f))
    }

    /// The unimodular swap `(a, b, c) -> (c, -b, a)`.
    pub fn swap(field: PrimeField) -> Self {
        Mat2::new(
            Poly::zero(field),
            Poly::constant(-field.one()),
            Poly::one(field),
            Poly::zero(field),
        )
    }

    pub fn diag(s: FieldElement, t: FieldElement) -> Self {
        let f = s.field();
        Mat2::new(Poly::constant(s), Poly::zero(f), Poly::zero(f), Poly::constant(t))
    }

    pub fn det(&self) -> Poly {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }

    pub fn is_identity(&self) -> bool {
        self.m00.is_one() && self.m11.is_one() && self.m01.is_zero() && self.m10.is_zero()
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.m00 * &rhs.m00 + &self.m01 * &rhs.m10,
            &self.m00 * &rhs.m01 + &self.m01 * &rhs.m11,
            &self.m10 * &rhs.m00 + &self.m11 * &rhs.m10,
            &self.m10 * &rhs.m01 + &self.m11 * &rhs.m11,
        )
    }
}

impl QuadForm {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Self {
        assert!(
            a.field() == b.field() && b.field() == c.field(),
            "form coefficients over different fields"
        );
        QuadForm { a, b, c }
    }

    /// The norm form `(1, 0, -alpha)` of the basis `{1, sqrt(alpha)}`.
    pub fn identity(disc: &Discriminant) -> Self {
        let f = disc.field();
        QuadForm::new(Poly::one(f), Poly::zero(f), -disc.alpha())
    }

    pub fn field(&self) -> PrimeField {
        self.a.field()
    }

    /// `b^2 - 4ac`.
    pub fn disc(&self) -> Poly {
        let four = Poly::constant(self.field().elem(4));
        &self.b * &self.b - &four * &(&self.a * &self.c)
    }

    /// `b^2/4 - ac`, i.e. `disc / 4`.
    pub fn neg_det_b(&self) -> Poly {
        let quarter = self.field().elem(4).inv().expect("p is odd");
        self.disc().scale(quarter)
    }

    /// `b / 2`.
    pub fn half_b(&self) -> Poly {
        self.b.scale(self.field().elem(2).inv().expect("p is odd"))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if self.a.is_zero() && self.b.is_zero() && self.c.is_zero() {
            return Err(Error::ZeroForm);
        }
        let g = if self.b.is_zero() && self.c.is_zero() {
            self.a.monic()?.0
        } else {
            Poly::gcd(&self.b, &self.c)?
        };
        Ok(Poly::gcd(&self.a, &g)?.is_one())
    }

    /// `q(X, Y)` evaluated at polynomial arguments.
    pub fn eval(&self, x: &Poly, y: &Poly) -> Poly {
        &self.a * &(x * x) + &self.b * &(x * y) + &self.c * &(y * y)
    }

    /// `q o A`, the form `v -> q(A v)`.
    pub fn apply(&self, m: &Mat2) -> Result<QuadForm> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let two = Poly::constant(self.field().elem(2));
        let a2 = a * &(&m.m00 * &m.m00) + b * &(&m.m00 * &m.m10) + c * &(&m.m10 * &m.m10);
        let b2 = &two * &(a * &(&m.m00 * &m.m01))
            + b * &(&m.m00 * &m.m11 + &m.m01 * &m.m10)
            + &two * &(c * &(&m.m10 * &m.m11));
        let c2 = a * &(&m.m01 * &m.m01) + b * &(&m.m01 * &m.m11) + c * &(&m.m11 * &m.m11);
        Ok(QuadForm::new(a2, b2, c2))
    }

    /// `(a, -b, c)`.
    pub fn opposite(&self) -> QuadForm {
        QuadForm::new(self.a.clone(), -&self.b, self.c.clone())
    }

    /// `lambda * q`.
    pub fn scale(&self, lambda: FieldElement) -> QuadForm {
        QuadForm::new(self.a.scale(lambda), self.b.scale(lambda), self.c.scale(lambda))
    }

    /// `a` monic, `deg b < deg a <= g`, and `b^2/4 - ac = alpha`.
    pub fn is_reduced(&self, disc: &Discriminant) -> bool {
        self.a.is_monic()
            && self.b.deg() < self.a.deg()
            && self.a.deg() as usize <= disc.genus()
            && &self.neg_det_b() == disc.alpha()
    }

    fn check_alpha(&self, disc: &Discriminant) -> Result<()> {
        if self.field() != disc.field() {
            return Err(Error::FieldMismatch(self.field().p(), disc.field().p()));
        }
        if self.disc().is_zero() {
            return Err(Error::DegenerateForm);
        }
        let nd = self.neg_det_b();
        if &nd != disc.alpha() {
            return Err(Error::WrongDeterminant {
                found: nd.to_string(),
                expected: disc.alpha().to_string(),
            });
        }
        Ok(())
    }

    /// Reduces by unimodular steps, returning the reduced form and the
    /// accumulated transformation `T` with `r = q o T` and `det T = 1`.
    ///
    /// Translations bring `deg b` below `deg a`; swaps run while
    /// `deg a > g`. A final `diag(s, 1/s)` makes `a` monic, which needs
    /// `lc(a)` to be a square.
    pub fn reduce(&self, disc: &Discriminant) -> Result<(QuadForm, Mat2)> {
        self.check_alpha(disc)?;
        if !self.is_primitive()? {
            return Err(Error::NotPrimitive);
        }
        let field = self.field();
        let g = disc.genus() as isize;
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let mut t = Mat2::identity(field);
        loop {
            let two_a = a.scale(field.elem(2));
            let (m, _) = (-&b).divmod(&two_a)?;
            if !m.is_zero() {
                // (X, Y) -> (X + mY, Y): b += 2am, c += am^2 + bm.
                let new_c = &(&(&a * &(&m * &m)) + &(&b * &m)) + &c;
                b = &b + &(&two_a * &m);
                c = new_c;
                t = t.mul(&Mat2::translation(m));
            }
            if a.deg() <= g {
                break;
            }
            (a, b, c) = (c, -&b, a);
            t = t.mul(&Mat2::swap(field));
        }
        let inv_lc = a.lc().inv().expect("a is nonzero for squarefree alpha");
        let s = inv_lc.sqrt().ok_or(Error::NotPositive)?;
        if s != field.one() {
            let s_inv = s.inv().expect("nonzero");
            a = a.scale(s * s);
            c = c.scale(s_inv * s_inv);
            t = t.mul(&Mat2::diag(s, s_inv));
        }
        Ok((QuadForm::new(a, b, c), t))
    }

    /// Whether the form is positive with respect to `alpha`: its
    /// discriminant is exactly `alpha` and reduction reaches a monic `a`.
    ///
    /// Forms with `b^2/4 - ac = t^2 alpha`, `t^2 != 1`, are in the right
    /// square class but not positive; anything else is an error.
    pub fn is_positive(&self, disc: &Discriminant) -> Result<bool> {
        if self.disc().is_zero() {
            return Err(Error::DegenerateForm);
        }
        let nd = self.neg_det_b();
        if &nd != disc.alpha() {
            return match nd.div_exact(disc.alpha())? {
                Some(t) if t.is_unit() && t.lc().is_square() => Ok(false),
                _ => Err(Error::DiscriminantMismatch),
            };
        }
        match self.reduce(disc) {
            Ok(_) => Ok(true),
            Err(Error::NotPositive) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Proper equivalence: equal reduced representatives.
    pub fn proper_equiv(&self, other: &QuadForm, disc: &Discriminant) -> Result<bool> {
        Ok(self.reduce(disc)?.0 == other.reduce(disc)?.0)
    }

    /// `(a, b, c) -> (a, b/2 mod a)` on reduced forms.
    pub fn to_mumford(&self, disc: &Discriminant) -> Result<MumfordIdeal> {
        if self.field() != disc.field() {
            return Err(Error::FieldMismatch(self.field().p(), disc.field().p()));
        }
        if !self.is_reduced(disc) {
            return Err(Error::NotReduced);
        }
        MumfordIdeal::new(self.a.clone(), self.half_b(), disc)
    }

    /// Literal `a,b,c` as accepted by the command line.
    pub fn to_literal(&self) -> String {
        format!("{},{},{}", self.a, self.b, self.c)
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over F_{}", self, self.field().p())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_coeffs(field(p), c)
    }

    fn form(p: u64, a: &[i64], b: &[i64], c: &[i64]) -> QuadForm {
        QuadForm::new(poly(p, a), poly(p, b), poly(p, c))
    }

    fn ex1() -> Discriminant {
        Discriminant::new(poly(3, &[1, 1, 0, 1])).unwrap()
    }

    fn ex2() -> Discriminant {
        Discriminant::new(poly(5, &[0, 1, 0, 1])).unwrap()
    }

    #[test]
    fn neg_det_b_examples() {
        let d = ex1();
        let id = QuadForm::identity(&d);
        assert_eq!(id, form(3, &[1], &[], &[2, 2, 0, 2]));
        assert_eq!(&id.neg_det_b(), d.alpha());
        assert_eq!(id.disc(), d.alpha().scale(field(3).elem(4)));
        assert_eq!(&form(3, &[0, 1], &[2], &[2, 0, 2]).neg_det_b(), d.alpha());
        assert_eq!(&form(5, &[0, 1], &[], &[4, 0, 4]).neg_det_b(), ex2().alpha());
    }

    #[test]
    fn primitivity() {
        assert!(form(3, &[0, 1], &[2], &[2, 0, 2]).is_primitive().unwrap());
        assert!(!form(5, &[0, 1], &[0, 0, 1], &[0, 0, 0, 1]).is_primitive().unwrap());
        assert!(form(5, &[1], &[], &[3, 1, 4]).is_primitive().unwrap());
        assert!(!form(5, &[0, 2], &[], &[]).is_primitive().unwrap());
        assert_eq!(form(5, &[], &[], &[]).is_primitive(), Err(Error::ZeroForm));
    }

    #[test]
    fn apply_examples() {
        let q = form(7, &[1, 2], &[3, 0, 1], &[5, 5]);
        assert_eq!(q.apply(&Mat2::identity(field(7))).unwrap(), q);
        assert_eq!(
            q.apply(&Mat2::swap(field(7))).unwrap(),
            QuadForm::new(q.c.clone(), -&q.b, q.a.clone())
        );
        let d = Discriminant::new(poly(7, &[1, 1, 0, 1])).unwrap();
        let lambda = field(7).elem(3);
        let id = QuadForm::identity(&d);
        assert_eq!(
            id.apply(&Mat2::diag(lambda, lambda)).unwrap(),
            id.scale(lambda * lambda)
        );
        let singular = Mat2::new(poly(7, &[1]), poly(7, &[2]), poly(7, &[3]), poly(7, &[6]));
        assert_eq!(q.apply(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn opposite_examples() {
        let q2 = form(3, &[0, 1], &[2], &[2, 0, 2]);
        assert_eq!(q2.opposite(), form(3, &[0, 1], &[1], &[2, 0, 2]));
        let q1 = form(3, &[-1, 1], &[], &[1, 2, 2]);
        assert_eq!(q1.opposite(), q1);
        assert_eq!(q2.opposite().opposite(), q2);
    }

    #[test]
    fn reduce_examples() {
        let d = ex1();
        let id = QuadForm::identity(&d);
        let (r, t) = id.reduce(&d).unwrap();
        assert_eq!(r, id);
        assert!(t.is_identity());

        // The swap of (x, 2, 2x^2+2) reduces back to it, not to its opposite.
        let swapped = form(3, &[2, 0, 2], &[1], &[0, 1]);
        let (r, t) = swapped.reduce(&d).unwrap();
        assert_eq!(r, form(3, &[0, 1], &[2], &[2, 0, 2]));
        assert_eq!(swapped.apply(&t).unwrap(), r);
        assert!(t.det().is_one());

        let q1 = form(3, &[-1, 1], &[], &[1, 2, 2]);
        let (r, t) = q1.reduce(&d).unwrap();
        assert_eq!(r, q1);
        assert!(t.is_identity());
    }

    #[test]
    fn reduce_errors() {
        let d = ex1();
        let wrong = form(3, &[1], &[], &[1]);
        assert!(matches!(wrong.reduce(&d), Err(Error::WrongDeterminant { .. })));
        let degenerate = form(3, &[1], &[2], &[1]);
        assert_eq!(degenerate.reduce(&d), Err(Error::DegenerateForm));
        let twisted = QuadForm::identity(&d).scale(field(3).smallest_nonsquare());
        assert_eq!(twisted.reduce(&d), Err(Error::NotPositive));
    }

    #[test]
    fn positivity_examples() {
        for d in [ex1(), ex2()] {
            let id = QuadForm::identity(&d);
            assert!(id.is_positive(&d).unwrap());
            let lambda = d.field().smallest_nonsquare();
            assert!(!id.scale(lambda).is_positive(&d).unwrap());
        }
        let d = ex1();
        assert!(form(3, &[0, 1], &[2], &[2, 0, 2]).is_positive(&d).unwrap());
        assert_eq!(
            form(3, &[1], &[], &[1]).is_positive(&d),
            Err(Error::DiscriminantMismatch)
        );
    }

    #[test]
    fn proper_equivalence_examples() {
        let d = ex1();
        let q2 = form(3, &[0, 1], &[2], &[2, 0, 2]);
        assert!(!q2.proper_equiv(&q2.opposite(), &d).unwrap());
        let moved = q2
            .apply(&Mat2::translation(poly(3, &[1, 2])))
            .unwrap()
            .apply(&Mat2::swap(field(3)))
            .unwrap();
        assert!(q2.proper_equiv(&moved, &d).unwrap());
        let d2 = ex2();
        assert!(!QuadForm::identity(&d2)
            .proper_equiv(&form(5, &[0, 1], &[], &[4, 0, 4]), &d2)
            .unwrap());
    }

    #[test]
    fn mumford_conversions() {
        let d = ex1();
        let i = MumfordIdeal::new(poly(3, &[0, 1]), poly(3, &[2]), &d).unwrap();
        let q = i.to_form();
        assert_eq!(q, form(3, &[0, 1], &[1], &[2, 0, 2]));
        assert_eq!(q.to_mumford(&d).unwrap(), i);
        assert_eq!(
            MumfordIdeal::identity(&d).to_form(),
            form(3, &[1], &[], &[2, 2, 0, 2])
        );
        let i1 = MumfordIdeal::new(poly(3, &[-1, 1]), poly(3, &[]), &d).unwrap();
        assert_eq!(i1.to_form(), form(3, &[-1, 1], &[], &[1, 2, 2]));
        let not_reduced = form(3, &[2, 0, 2], &[1], &[0, 1]);
        assert_eq!(not_reduced.to_mumford(&d), Err(Error::NotReduced));
    }

    fn word_strategy() -> impl Strategy<Value = Vec<(bool, Vec<i64>)>> {
        proptest::collection::vec((any::<bool>(), proptest::collection::vec(0i64..7, 0..3)), 0..7)
    }

    fn word_matrix(p: u64, word: &[(bool, Vec<i64>)]) -> Mat2 {
        word.iter().fold(Mat2::identity(field(p)), |acc, (swap, m)| {
            let step = if *swap {
                Mat2::swap(field(p))
            } else {
                Mat2::translation(poly(p, m))
            };
            acc.mul(&step)
        })
    }

    proptest! {
        #[test]
        fn apply_is_right_action(w1 in word_strategy(), w2 in word_strategy()) {
            let q = form(7, &[3, 1], &[2, 5], &[1, 0, 4]);
            let a = word_matrix(7, &w1);
            let b = word_matrix(7, &w2);
            prop_assert_eq!(q.apply(&a.mul(&b)).unwrap(), q.apply(&a).unwrap().apply(&b).unwrap());
        }

        #[test]
        fn disc_scales_by_det_squared(m in proptest::collection::vec(proptest::collection::vec(0i64..7, 0..3), 4)) {
            let mat = Mat2::new(poly(7, &m[0]), poly(7, &m[1]), poly(7, &m[2]), poly(7, &m[3]));
            prop_assume!(!mat.det().is_zero());
            let q = form(7, &[3, 1], &[2, 5], &[1, 0, 4]);
            let det = mat.det();
            prop_assert_eq!(q.apply(&mat).unwrap().disc(), &(&det * &det) * &q.disc());
        }

        #[test]
        fn reduce_is_orbit_invariant(w in word_strategy(), idx in 0usize..8) {
            let d = Discriminant::new(poly(7, &[1, 1, 0, 1])).unwrap();
            let table = crate::classgroup::ClassGroupTable::enumerate(&d).unwrap();
            let q = table.forms()[idx % table.len()].clone();
            let t = word_matrix(7, &w);
            let moved = q.apply(&t).unwrap();
            let (r, tr) = moved.reduce(&d).unwrap();
            prop_assert_eq!(&r, &q);
            prop_assert_eq!(moved.apply(&tr).unwrap(), r);
            prop_assert!(tr.det().is_one());
        }
    }
}
