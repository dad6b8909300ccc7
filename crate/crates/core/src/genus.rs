//! Genus theory through residue characters at the ramified primes.
//!
//! For each monic irreducible `P | alpha` a primitive form represents values
//! prime to `P`, and all of them have the same quadratic character modulo
//! `P`. Collecting those characters gives a raw vector in `{±1}^r`. Scaling
//! by the non-square unit `lambda` multiplies it by the twist
//! `tau = (chi_P(lambda))_P`, so genera are raw vectors modulo `tau`.

use std::collections::{BTreeMap, BTreeSet};

use crate::classgroup::ClassGroupTable;
use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::ff::FieldElement;
use crate::poly::Poly;
use crate::quadform::QuadForm;

/// Raw characters plus the normalized label of their `tau`-orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusVector {
    pub chars: Vec<i8>,
    /// Smallest of `{chars, chars * tau}` under the encoding `+1 -> 0`,
    /// `-1 -> 1`.
    pub normalized: Vec<u8>,
}

/// Per-discriminant data shared by all character computations.
#[derive(Clone, Debug)]
pub struct GenusContext {
    disc: Discriminant,
    primes: Vec<Poly>,
    lambda: FieldElement,
    twist: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusPartition {
    /// Class indices per genus, genera ordered by their smallest index.
    pub genera: Vec<Vec<usize>>,
    /// Normalized label of each genus.
    pub labels: Vec<Vec<u8>>,
    /// Genus index of every class.
    pub class_genus: Vec<usize>,
    /// Index into `genera` of the genus of the identity.
    pub principal: usize,
}

impl GenusPartition {
    pub fn count(&self) -> usize {
        self.genera.len()
    }
}

fn encode(chars: &[i8]) -> Vec<u8> {
    chars.iter().map(|&c| u8::from(c < 0)).collect()
}

impl GenusContext {
    pub fn new(disc: &Discriminant) -> Result<Self> {
        let primes: Vec<Poly> = disc.alpha().factor()?.into_iter().map(|(p, _)| p).collect();
        let lambda = disc.field().smallest_nonsquare();
        let twist = primes
            .iter()
            .map(|p| Poly::residue_symbol(&Poly::constant(lambda), p))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(twist.iter().any(|&t| t < 0), "odd degree forces a nontrivial twist");
        Ok(GenusContext {
            disc: disc.clone(),
            primes,
            lambda,
            twist,
        })
    }

    /// Monic irreducible factors of `alpha`, in coordinate order.
    pub fn primes(&self) -> &[Poly] {
        &self.primes
    }

    pub fn twist(&self) -> &[i8] {
        &self.twist
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    /// Raw character vector from the first of `q(1,0)`, `q(0,1)`, `q(1,1)`
    /// prime to each `P`.
    pub fn characters(&self, q: &QuadForm) -> Result<Vec<i8>> {
        if &q.neg_det_b() != self.disc.alpha() {
            return Err(Error::DiscriminantMismatch);
        }
        let diagonal = &(&q.a + &q.b) + &q.c;
        let candidates = [&q.a, &q.c, &diagonal];
        self.primes
            .iter()
            .map(|p| {
                for value in candidates {
                    let s = Poly::residue_symbol(value, p)?;
                    if s != 0 {
                        return Ok(s);
                    }
                }
                Err(Error::NotPrimitive)
            })
            .collect()
    }

    pub fn normalize(&self, chars: &[i8]) -> Vec<u8> {
        let twisted: Vec<i8> = chars.iter().zip(&self.twist).map(|(c, t)| c * t).collect();
        encode(chars).min(encode(&twisted))
    }

    pub fn genus(&self, q: &QuadForm) -> Result<GenusVector> {
        let chars = self.characters(q)?;
        let normalized = self.normalize(&chars);
        Ok(GenusVector { chars, normalized })
    }

    pub fn is_principal(&self, q: &QuadForm) -> Result<bool> {
        let identity = self.genus(&QuadForm::identity(&self.disc))?;
        Ok(self.genus(q)?.normalized == identity.normalized)
    }

    /// Groups the classes of `table` by genus and checks the genus-theory
    /// postconditions: `2^(r-1)` genera of equal size, with the principal
    /// genus equal to the subgroup of squares.
    pub fn partition(&self, table: &ClassGroupTable) -> Result<GenusPartition> {
        if table.disc() != &self.disc {
            return Err(Error::AlphaMismatch);
        }
        let mut by_label: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        let mut genera: Vec<Vec<usize>> = Vec::new();
        let mut labels = Vec::new();
        let mut class_genus = Vec::with_capacity(table.len());
        for (i, form) in table.forms().iter().enumerate() {
            let label = self.genus(form)?.normalized;
            let g = *by_label.entry(label.clone()).or_insert_with(|| {
                genera.push(Vec::new());
                labels.push(label);
                genera.len() - 1
            });
            genera[g].push(i);
            class_genus.push(g);
        }
        let principal = class_genus[table.identity_index()];
        let partition = GenusPartition {
            genera,
            labels,
            class_genus,
            principal,
        };

        let r = self.primes.len();
        let expected = 1usize << (r - 1);
        if partition.count() != expected {
            return Err(Error::GenusInconsistency(format!(
                "{} genera, expected 2^({r}-1) = {expected}",
                partition.count()
            )));
        }
        let size = partition.genera[0].len();
        if partition.genera.iter().any(|g| g.len() != size) {
            return Err(Error::GenusInconsistency(format!(
                "unequal genus sizes {:?}",
                partition.genera.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let squares: BTreeSet<usize> = (0..table.len())
            .map(|i| table.compose_index(i, i))
            .collect::<Result<_>>()?;
        let principal_set: BTreeSet<usize> = partition.genera[principal].iter().copied().collect();
        if squares != principal_set {
            return Err(Error::GenusInconsistency(format!(
                "principal genus {principal_set:?} differs from squares {squares:?}"
            )));
        }
        Ok(partition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;

    fn poly(p: u64, c: &[i64]) -> Poly {
        Poly::from_coeffs(PrimeField::new(p).unwrap(), c)
    }

    fn form(p: u64, a: &[i64], b: &[i64], c: &[i64]) -> QuadForm {
        QuadForm::new(poly(p, a), poly(p, b), poly(p, c))
    }

    fn ex1() -> (Discriminant, GenusContext) {
        let d = Discriminant::new(poly(3, &[1, 1, 0, 1])).unwrap();
        let ctx = GenusContext::new(&d).unwrap();
        (d, ctx)
    }

    #[test]
    fn twist_example_one() {
        let (_, ctx) = ex1();
        assert_eq!(ctx.primes(), [poly(3, &[2, 1]), poly(3, &[2, 1, 1])]);
        assert_eq!(ctx.twist(), [-1, 1]);
    }

    #[test]
    fn characters_example_one() {
        let (d, ctx) = ex1();
        let q4 = QuadForm::identity(&d);
        let q1 = form(3, &[-1, 1], &[], &[1, 2, 2]);
        let q2 = form(3, &[0, 1], &[2], &[2, 0, 2]);
        assert_eq!(ctx.characters(&q4).unwrap(), [1, 1]);
        assert_eq!(ctx.characters(&q1).unwrap(), [-1, 1]);
        assert_eq!(ctx.characters(&q2).unwrap(), [1, -1]);

        assert_eq!(ctx.genus(&q1).unwrap().normalized, ctx.genus(&q4).unwrap().normalized);
        assert_ne!(ctx.genus(&q2).unwrap().normalized, ctx.genus(&q4).unwrap().normalized);
        assert!(ctx.is_principal(&q4).unwrap());
        assert!(ctx.is_principal(&q1).unwrap());
        assert!(!ctx.is_principal(&q2).unwrap());
    }

    #[test]
    fn partition_examples() {
        let (d, ctx) = ex1();
        let t = ClassGroupTable::enumerate(&d).unwrap();
        let part = ctx.partition(&t).unwrap();
        // Classes: 1;0, x;1, x;2, x+2;0.
        assert_eq!(part.genera, vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(part.principal, 0);

        let d2 = Discriminant::new(poly(5, &[0, 1, 0, 1])).unwrap();
        let ctx2 = GenusContext::new(&d2).unwrap();
        let t2 = ClassGroupTable::enumerate(&d2).unwrap();
        let part2 = ctx2.partition(&t2).unwrap();
        assert_eq!(part2.count(), 4);
        assert!(part2.genera.iter().all(|g| g.len() == 1));
        assert_eq!(part2.genera[part2.principal], vec![0]);

        let d3 = Discriminant::new(poly(3, &[2, 2, 0, 1])).unwrap();
        let t3 = ClassGroupTable::enumerate(&d3).unwrap();
        assert_eq!(GenusContext::new(&d3).unwrap().partition(&t3).unwrap().count(), 1);
    }

    #[test]
    fn non_primitive_guard() {
        let (_, ctx) = ex1();
        // Not of discriminant alpha at all.
        assert_eq!(
            ctx.characters(&form(3, &[0, 1], &[], &[0, 1])),
            Err(Error::DiscriminantMismatch)
        );
    }
}
