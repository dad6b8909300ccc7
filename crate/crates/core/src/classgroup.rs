//! The full class group of `O_K` for one discriminant.
//!
//! Classes are enumerated by brute force over reduced Mumford pairs; the
//! reduced-form bijection makes this list complete and irredundant. Group
//! structure comes from exhaustive order computations, which is adequate for
//! class numbers in the hundreds.

use std::collections::HashMap;

use crate::discriminant::Discriminant;
use crate::error::Result;
use crate::ideal::MumfordIdeal;
use crate::poly::{monic_polys, polys_below_degree, Poly};
use crate::quadform::QuadForm;

#[derive(Clone, Debug)]
pub struct ClassGroupTable {
    disc: Discriminant,
    classes: Vec<MumfordIdeal>,
    forms: Vec<QuadForm>,
    orders: Vec<u64>,
    invariant_factors: Vec<u64>,
    index: HashMap<MumfordIdeal, usize>,
}

impl ClassGroupTable {
    /// Every reduced class, ordered by `deg u`, then `u`, then `v`.
    pub fn enumerate(disc: &Discriminant) -> Result<Self> {
        let field = disc.field();
        let alpha = disc.alpha();
        let mut classes = Vec::new();
        for deg in 0..=disc.genus() {
            let residues = polys_below_degree(field, deg);
            for u in monic_polys(field, deg) {
                let alpha_mod_u = alpha.rem(&u)?;
                for v in &residues {
                    if (v * v).rem(&u)? == alpha_mod_u {
                        classes.push(MumfordIdeal::from_parts(u.clone(), v.clone(), disc));
                    }
                }
            }
        }
        Self::from_classes(disc, classes)
    }

    /// Builds the table from an explicit class list, keeping its order.
    ///
    /// The list must consist of distinct reduced ideals closed under
    /// composition; this is checked.
    pub fn from_classes(disc: &Discriminant, classes: Vec<MumfordIdeal>) -> Result<Self> {
        let mut index = HashMap::with_capacity(classes.len());
        for (i, class) in classes.iter().enumerate() {
            if class.disc() != disc {
                return Err(crate::Error::AlphaMismatch);
            }
            if !class.is_valid() || !class.is_reduced() || index.insert(class.clone(), i).is_some()
            {
                return Err(crate::Error::InvalidIdeal {
                    u: class.u().to_string(),
                    v: class.v().to_string(),
                });
            }
        }
        if !index.contains_key(&MumfordIdeal::identity(disc)) {
            return Err(crate::Error::InvalidIdeal {
                u: "1".into(),
                v: "0".into(),
            });
        }
        let forms = classes.iter().map(MumfordIdeal::to_form).collect();
        let mut table = ClassGroupTable {
            disc: disc.clone(),
            classes,
            forms,
            orders: Vec::new(),
            invariant_factors: Vec::new(),
            index,
        };
        table.orders = table
            .classes
            .iter()
            .map(MumfordIdeal::order)
            .collect::<Result<_>>()?;
        table.invariant_factors = table.compute_structure()?;
        Ok(table)
    }

    pub fn disc(&self) -> &Discriminant {
        &self.disc
    }

    pub fn alpha(&self) -> &Poly {
        self.disc.alpha()
    }

    pub fn classes(&self) -> &[MumfordIdeal] {
        &self.classes
    }

    pub fn forms(&self) -> &[QuadForm] {
        &self.forms
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `d_1 | d_2 | ... | d_k`; empty for the trivial group.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_number(&self) -> usize {
        self.classes.len()
    }

    pub fn index_of(&self, ideal: &MumfordIdeal) -> Option<usize> {
        self.index.get(ideal).copied()
    }

    pub fn identity_index(&self) -> usize {
        self.index[&MumfordIdeal::identity(&self.disc)]
    }

    fn lookup(&self, ideal: &MumfordIdeal) -> Result<usize> {
        self.index_of(ideal).ok_or_else(|| crate::Error::InvalidIdeal {
            u: ideal.u().to_string(),
            v: ideal.v().to_string(),
        })
    }

    pub fn compose_index(&self, i: usize, j: usize) -> Result<usize> {
        self.lookup(&self.classes[i].compose(&self.classes[j])?)
    }

    pub fn inverse_index(&self, i: usize) -> Result<usize> {
        self.lookup(&self.classes[i].inverse())
    }

    /// Invariant factors by repeatedly splitting off a cyclic subgroup
    /// generated by an element of maximal order in the current quotient.
    fn compute_structure(&self) -> Result<Vec<u64>> {
        let h = self.len();
        let mut in_sub = vec![false; h];
        in_sub[self.identity_index()] = true;
        let mut factors = Vec::new();
        loop {
            // Order of each class modulo the current subgroup.
            let mut best = (1, 0);
            for x in 0..h {
                let mut y = x;
                let mut n = 1;
                while !in_sub[y] {
                    y = self.compose_index(y, x)?;
                    n += 1;
                }
                if n > best.0 {
                    best = (n, x);
                }
            }
            let (order, gen) = best;
            if order == 1 {
                break;
            }
            factors.push(order as u64);
            let members: Vec<usize> = (0..h).filter(|&i| in_sub[i]).collect();
            let mut power = gen;
            for _ in 1..order {
                for &s in &members {
                    in_sub[self.compose_index(s, power)?] = true;
                }
                power = self.compose_index(power, gen)?;
            }
        }
        factors.reverse();
        Ok(factors)
    }

    /// Classes merged with their inverses (improper equivalence); each group
    /// is listed by ascending index, groups by their first index.
    pub fn cl_merged(&self) -> Result<Vec<Vec<usize>>> {
        let mut seen = vec![false; self.len()];
        let mut merged = Vec::new();
        for i in 0..self.len() {
            if seen[i] {
                continue;
            }
            let j = self.inverse_index(i)?;
            seen[i] = true;
            seen[j] = true;
            merged.push(if i == j { vec![i] } else { vec![i.min(j), i.max(j)] });
        }
        Ok(merged)
    }

    /// Whether the improper quotient inherits the group law, i.e. the
    /// exponent is at most 2.
    pub fn inherits_group(&self) -> bool {
        self.invariant_factors.iter().all(|&d| d <= 2)
    }

    /// Order of the flat cohomology set: twice the class number, one
    /// non-positive twist per class.
    pub fn h1_order(&self) -> u64 {
        2 * self.len() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_coeffs(PrimeField::new(p).unwrap(), c)
    }

    fn table(p: u64, alpha: &[i64]) -> ClassGroupTable {
        ClassGroupTable::enumerate(&Discriminant::new(poly(p, alpha)).unwrap()).unwrap()
    }

    fn literals(t: &ClassGroupTable) -> Vec<String> {
        t.classes().iter().map(|c| c.to_literal()).collect()
    }

    #[test]
    fn example_one() {
        let t = table(3, &[1, 1, 0, 1]);
        assert_eq!(literals(&t), ["1;0", "x;1", "x;2", "x+2;0"]);
        assert_eq!(t.orders(), [1, 4, 4, 2]);
        assert_eq!(t.invariant_factors(), [4]);
        assert_eq!(t.cl_merged().unwrap(), vec![vec![0], vec![1, 2], vec![3]]);
        assert!(!t.inherits_group());
        assert_eq!(t.h1_order(), 8);
    }

    #[test]
    fn example_two() {
        let t = table(5, &[0, 1, 0, 1]);
        assert_eq!(literals(&t), ["1;0", "x;0", "x+2;0", "x+3;0"]);
        assert_eq!(t.invariant_factors(), [2, 2]);
        assert_eq!(t.cl_merged().unwrap().len(), 4);
        assert!(t.inherits_group());
        assert_eq!(t.h1_order(), 8);
    }

    #[test]
    fn x3_plus_2x_over_f3_matches_point_count() {
        // y^2 = x^3 + 2x over F_3: x = 0 gives y = 0; x = 1: 3 = 0 gives y = 0;
        // x = 2: 8 + 4 = 12 = 0 gives y = 0. With infinity: 4 points.
        let t = table(3, &[0, 2, 0, 1]);
        assert_eq!(t.class_number(), 4);
        assert_eq!(t.invariant_factors(), [2, 2]);
    }

    #[test]
    fn trivial_group() {
        // y^2 = x^3 + 2x + 2 over F_3 has only the point at infinity.
        let t = table(3, &[2, 2, 0, 1]);
        assert_eq!(t.class_number(), 1);
        assert!(t.invariant_factors().is_empty());
        assert_eq!(t.cl_merged().unwrap(), vec![vec![0]]);
        assert!(t.inherits_group());
        assert_eq!(t.h1_order(), 2);
    }

    #[test]
    fn structure_reproduces_order_multiset() {
        for (p, alpha) in [
            (3u64, vec![1i64, 1, 0, 1]),
            (5, vec![1, 0, 0, 1]),
            (7, vec![3, 1, 0, 1]),
            (3, vec![1, 0, 0, 0, 0, 1]),
            (5, vec![1, 2, 0, 0, 0, 1]),
        ] {
            let t = table(p, &alpha);
            let product: u64 = t.invariant_factors().iter().product();
            assert_eq!(product as usize, t.class_number());
            assert!(t.invariant_factors().windows(2).all(|w| w[1] % w[0] == 0));
            // Element-order histogram of Z/d1 x ... x Z/dk by brute force.
            let mut expected = Vec::new();
            let dims = t.invariant_factors().to_vec();
            let mut idx = vec![0u64; dims.len()];
            loop {
                let ord = idx
                    .iter()
                    .zip(&dims)
                    .map(|(&i, &d)| d / gcd(i, d))
                    .fold(1, lcm);
                expected.push(ord);
                let mut k = 0;
                while k < dims.len() {
                    idx[k] += 1;
                    if idx[k] < dims[k] {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == dims.len() {
                    break;
                }
            }
            let mut got = t.orders().to_vec();
            got.sort();
            expected.sort();
            assert_eq!(got, expected, "p={p} alpha={alpha:?}");
        }
    }

    #[test]
    fn merged_count_formula() {
        for (p, alpha) in [(3u64, vec![1i64, 1, 0, 1]), (7, vec![3, 1, 0, 1]), (5, vec![1, 2, 0, 0, 0, 1])] {
            let t = table(p, &alpha);
            let self_inverse = (0..t.len()).filter(|&i| t.inverse_index(i).unwrap() == i).count();
            assert_eq!(t.cl_merged().unwrap().len(), (t.len() + self_inverse) / 2);
        }
    }

    #[test]
    fn from_classes_rejects_duplicates() {
        let t = table(3, &[1, 1, 0, 1]);
        let mut classes = t.classes().to_vec();
        classes.push(classes[1].clone());
        assert!(ClassGroupTable::from_classes(t.disc(), classes).is_err());
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn lcm(a: u64, b: u64) -> u64 {
        a / gcd(a, b) * b
    }
}
