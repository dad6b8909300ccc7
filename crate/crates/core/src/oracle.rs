//! Brute-force class counting without reduction theory or ideals.
//!
//! All primitive forms with `b^2/4 - ac = alpha` inside a degree box are
//! listed, then merged with a union-find under the elementary generators of
//! `SL_2(F_p[x])`: translations `(X, Y) -> (X + mY, Y)`, the swap, and
//! `diag(s, 1/s)`. Moves that leave the box are discarded and counted.
//!
//! The raw orbits split into positive classes and their non-square twists.
//! An orbit is counted as positive when it represents a value of degree
//! `<= g` with square leading coefficient, read off from the `a`
//! coefficients of its members.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::poly::{polys_below_degree, Poly};
use crate::quadform::QuadForm;

/// Order in which forms and generators are visited. The resulting
/// partition must not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub degree_bound: usize,
    pub schedule: Schedule,
    /// Rerun with `degree_bound + 1` and warn if the count changes.
    pub verify_bound: bool,
}

impl OracleOptions {
    pub fn new(degree_bound: usize) -> Self {
        OracleOptions {
            degree_bound,
            schedule: Schedule::Forward,
            verify_bound: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted; the first member is the canonical representative.
    pub members: Vec<QuadForm>,
    pub positive: bool,
}

impl Orbit {
    pub fn rep(&self) -> &QuadForm {
        &self.members[0]
    }
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub alpha: Poly,
    pub degree_bound: usize,
    pub forms_enumerated: usize,
    /// Orbits of positive forms: the class number.
    pub orbit_count: usize,
    pub orbit_reps: Vec<QuadForm>,
    /// Positive and twisted orbits together.
    pub total_orbits: usize,
    pub escaped: u64,
    /// Every orbit, sorted by representative.
    pub orbits: Vec<Orbit>,
    pub warnings: Vec<String>,
}

pub fn oracle_classes(disc: &Discriminant, degree_bound: usize) -> Result<OrbitReport> {
    oracle_classes_with(disc, &OracleOptions::new(degree_bound))
}

pub fn oracle_classes_with(disc: &Discriminant, opts: &OracleOptions) -> Result<OrbitReport> {
    let bound = opts.degree_bound;
    if bound < disc.degree() {
        return Err(Error::BoundTooSmall {
            bound,
            deg: disc.degree(),
        });
    }
    let field = disc.field();
    let two = field.elem(2);
    let half = two.inv().expect("p is odd");
    let box_polys = polys_below_degree(field, bound + 1);
    let in_box = |f: &Poly| f.deg() <= bound as isize;

    // For every b, the numerator b^2/4 - alpha that a must divide.
    let numerators: Vec<(&Poly, Poly)> = box_polys
        .iter()
        .map(|b| {
            let beta = b.scale(half);
            (b, &(&beta * &beta) - disc.alpha())
        })
        .collect();

    let mut forms = Vec::new();
    for a in box_polys.iter().filter(|a| !a.is_zero()) {
        for (b, num) in &numerators {
            if num.deg() > bound as isize + a.deg() {
                continue;
            }
            let (c, r) = num.divmod(a)?;
            if r.is_zero() && in_box(&c) {
                let q = QuadForm::new(a.clone(), (*b).clone(), c);
                if q.is_primitive()? {
                    forms.push(q);
                }
            }
        }
    }
    let index: HashMap<&QuadForm, usize> = forms.iter().enumerate().map(|(i, q)| (q, i)).collect();

    let mut translations: Vec<&Poly> = box_polys.iter().filter(|m| !m.is_zero()).collect();
    let mut scalings: Vec<_> = field.elements().skip(2).collect();
    let mut order: Vec<usize> = (0..forms.len()).collect();
    if opts.schedule == Schedule::Reverse {
        translations.reverse();
        scalings.reverse();
        order.reverse();
    }

    let mut uf = UnionFind::<usize>::new(forms.len());
    let mut escaped = 0u64;
    for &i in &order {
        let q = &forms[i];
        let mut link = |target: QuadForm, escaped: &mut u64| {
            if in_box(&target.a) && in_box(&target.b) && in_box(&target.c) {
                if let Some(&j) = index.get(&target) {
                    uf.union(i, j);
                    return;
                }
            }
            *escaped += 1;
        };
        let two_a = q.a.scale(two);
        for m in &translations {
            // b' = b + 2am leaves the box whenever deg(am) > bound.
            if m.deg() + q.a.deg() > bound as isize {
                escaped += 1;
                continue;
            }
            let b = &q.b + &(&two_a * *m);
            let c = &(&(&q.a * &(*m * *m)) + &(&q.b * *m)) + &q.c;
            link(QuadForm::new(q.a.clone(), b, c), &mut escaped);
        }
        link(QuadForm::new(q.c.clone(), -&q.b, q.a.clone()), &mut escaped);
        for &s in &scalings {
            let s2 = s * s;
            let s2_inv = s2.inv().expect("nonzero");
            link(
                QuadForm::new(q.a.scale(s2), q.b.clone(), q.c.scale(s2_inv)),
                &mut escaped,
            );
        }
    }

    let mut groups: HashMap<usize, Vec<QuadForm>> = HashMap::new();
    for (i, q) in forms.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(q.clone());
    }
    let g = disc.genus() as isize;
    let mut orbits: Vec<Orbit> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            let positive = members
                .iter()
                .any(|q| q.a.deg() <= g && q.a.lc().is_square());
            Orbit { members, positive }
        })
        .collect();
    orbits.sort_by(|x, y| x.rep().cmp(y.rep()));
    let orbit_reps: Vec<QuadForm> = orbits
        .iter()
        .filter(|o| o.positive)
        .map(|o| o.rep().clone())
        .collect();

    let mut warnings = Vec::new();
    if 2 * orbit_reps.len() != orbits.len() {
        warnings.push(format!(
            "{} positive orbits out of {}; expected exactly half",
            orbit_reps.len(),
            orbits.len()
        ));
    }
    if opts.verify_bound {
        let wider = oracle_classes_with(disc, &OracleOptions::new(bound + 1))?;
        if wider.orbit_count != orbit_reps.len() {
            warnings.push(format!(
                "bound {bound} looks too small: {} orbits, {} at bound {}",
                orbit_reps.len(),
                wider.orbit_count,
                bound + 1
            ));
        }
    }

    Ok(OrbitReport {
        alpha: disc.alpha().clone(),
        degree_bound: bound,
        forms_enumerated: forms.len(),
        orbit_count: orbit_reps.len(),
        orbit_reps,
        total_orbits: orbits.len(),
        escaped,
        orbits,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;

    fn disc(p: u64, c: &[i64]) -> Discriminant {
        Discriminant::new(Poly::from_coeffs(PrimeField::new(p).unwrap(), c)).unwrap()
    }

    fn literal(q: &QuadForm) -> String {
        q.to_literal()
    }

    #[test]
    fn example_one_orbits() {
        let d = disc(3, &[1, 1, 0, 1]);
        let report = oracle_classes(&d, 3).unwrap();
        assert_eq!(report.orbit_count, 4);
        assert_eq!(report.total_orbits, 8);
        assert!(report.warnings.is_empty(), "{:?}", report.warnings);
        let mut reduced: Vec<String> = report
            .orbit_reps
            .iter()
            .map(|q| literal(&q.reduce(&d).unwrap().0))
            .collect();
        reduced.sort();
        assert_eq!(
            reduced,
            ["1,0,2x^3+2x+2", "x+2,0,2x^2+2x+1", "x,1,2x^2+2", "x,2,2x^2+2"]
        );
    }

    #[test]
    fn example_two_orbits() {
        let report = oracle_classes(&disc(5, &[0, 1, 0, 1]), 3).unwrap();
        assert_eq!(report.orbit_count, 4);
    }

    #[test]
    fn x3_2x_1_over_f3_matches_points() {
        // y^2 = x^3 + 2x + 1 over F_3: alpha(0) = 1, alpha(1) = 1, alpha(2) = 1,
        // so each x gives y = +-1; 6 affine points plus infinity.
        let report = oracle_classes(&disc(3, &[1, 2, 0, 1]), 3).unwrap();
        assert_eq!(report.orbit_count, 7);
    }

    #[test]
    fn schedule_independent() {
        let d = disc(5, &[1, 0, 0, 1]);
        let fwd = oracle_classes(&d, 3).unwrap();
        let mut opts = OracleOptions::new(3);
        opts.schedule = Schedule::Reverse;
        let rev = oracle_classes_with(&d, &opts).unwrap();
        assert_eq!(fwd.orbits, rev.orbits);
        assert_eq!(fwd.escaped, rev.escaped);
    }

    #[test]
    fn one_reduced_form_per_positive_orbit() {
        let d = disc(3, &[1, 1, 0, 1]);
        for orbit in oracle_classes(&d, 3).unwrap().orbits {
            let fixed = orbit
                .members
                .iter()
                .filter(|q| matches!(q.reduce(&d), Ok((r, t)) if &r == *q && t.is_identity()))
                .count();
            assert_eq!(fixed, usize::from(orbit.positive));
        }
    }

    #[test]
    fn verify_bound_is_quiet_for_adequate_box() {
        let d = disc(3, &[1, 1, 0, 1]);
        let mut opts = OracleOptions::new(3);
        opts.verify_bound = true;
        assert!(oracle_classes_with(&d, &opts).unwrap().warnings.is_empty());
    }

    #[test]
    fn rejects_small_bound() {
        let d = disc(3, &[1, 1, 0, 1]);
        assert_eq!(
            oracle_classes(&d, 2).unwrap_err(),
            Error::BoundTooSmall { bound: 2, deg: 3 }
        );
    }
}
